//! The product scalars `d_α`, `e_α`, `φ_α(a)` over the cells of a diagram.

use crate::scalars::{FieldConfig, Scalar};
use crate::shapes::{diagram_stats, Composition};

fn pow(x: &Scalar, k: i64) -> Scalar {
    x.pow(k).expect("q and t are nonzero")
}

fn product(it: impl Iterator<Item = Scalar>) -> Scalar {
    it.fold(Scalar::one(), |acc, x| &acc * &x)
}

/// `d_α = Π (1 - q^{a+1} t^{l+1})`, or `Π (a + 1 + r l + r)` for Jack parameters.
pub fn closed_d(alpha: &Composition, cfg: &FieldConfig) -> Scalar {
    let cells = diagram_stats(alpha);
    if cfg.variant().is_qt() {
        let (q, t) = (cfg.q(), cfg.t());
        product(cells.iter().map(|s| {
            &Scalar::one() - &(&pow(&q, s.arm as i64 + 1) * &pow(&t, s.leg as i64 + 1))
        }))
    } else {
        let r = cfg.r();
        product(cells.iter().map(|s| {
            &Scalar::int(s.arm as i64 + 1) + &(&r * &Scalar::int(s.leg as i64 + 1))
        }))
    }
}

/// `e_α = Π (t^{1-n} - q^{a'+1} t^{1-l'})`, or `Π (a' + 1 - r l' + r n)`.
pub fn closed_e(alpha: &Composition, cfg: &FieldConfig) -> Scalar {
    let n = alpha.n() as i64;
    let cells = diagram_stats(alpha);
    if cfg.variant().is_qt() {
        let (q, t) = (cfg.q(), cfg.t());
        let head = pow(&t, 1 - n);
        product(cells.iter().map(|s| {
            &head - &(&pow(&q, s.coarm as i64 + 1) * &pow(&t, 1 - s.coleg as i64))
        }))
    } else {
        let r = cfg.r();
        product(cells.iter().map(|s| {
            &Scalar::int(s.coarm as i64 + 1) + &(&r * &Scalar::int(n - s.coleg as i64))
        }))
    }
}

/// `φ_α(a) = Π (a t^{l'} - q^{a'})`, or `Π (a - a' + r l')`.
pub fn closed_phi(alpha: &Composition, a: &Scalar, cfg: &FieldConfig) -> Scalar {
    let cells = diagram_stats(alpha);
    if cfg.variant().is_qt() {
        let (q, t) = (cfg.q(), cfg.t());
        product(
            cells
                .iter()
                .map(|s| &(a * &pow(&t, s.coleg as i64)) - &pow(&q, s.coarm as i64)),
        )
    } else {
        let r = cfg.r();
        product(cells.iter().map(|s| {
            &(a - &Scalar::int(s.coarm as i64)) + &(&r * &Scalar::int(s.coleg as i64))
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Gen, Variant};

    fn c(v: &[u32]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn empty_products() {
        for v in [Variant::QT, Variant::R] {
            let cfg = FieldConfig::symbolic(v);
            let z = c(&[0, 0]);
            assert!(closed_d(&z, &cfg).is_one());
            assert!(closed_e(&z, &cfg).is_one());
            assert!(closed_phi(&z, &Scalar::gen(Gen::A), &cfg).is_one());
        }
    }

    #[test]
    fn single_cell_qt() {
        let cfg = FieldConfig::symbolic(Variant::QTA);
        let (q, t, a) = (Scalar::gen(Gen::Q), Scalar::gen(Gen::T), Scalar::gen(Gen::A));
        let al = c(&[0, 1]);
        assert_eq!(closed_d(&al, &cfg), &Scalar::one() - &(&q * &(&t * &t)));
        assert_eq!(closed_e(&al, &cfg), &t.inv().unwrap() - &(&q * &t));
        assert_eq!(closed_phi(&al, &a, &cfg), &a - &Scalar::one());
    }

    #[test]
    fn single_cell_r() {
        let cfg = FieldConfig::symbolic(Variant::RA);
        let (r, a) = (Scalar::gen(Gen::R), Scalar::gen(Gen::A));
        let al = c(&[0, 1]);
        let one_2r = &Scalar::one() + &(&r * &Scalar::int(2));
        assert_eq!(closed_d(&al, &cfg), one_2r);
        assert_eq!(closed_e(&al, &cfg), one_2r);
        assert_eq!(closed_phi(&al, &a, &cfg), a);
    }
}
