use std::fmt;

use serde::{Deserialize, Serialize};

use super::composition::{dominant_sort, Composition, IntVector};
use crate::error::Result;
use crate::scalars::{FieldConfig, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpectralKind {
    QtBar,
    QtTilde,
    RBar,
    RTilde,
    /// An affine image (scaling, shift, inversion) of one of the above.
    Derived,
}

/// A point of `F^n` at which interpolation conditions are imposed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralPoint {
    pub coords: Vec<Scalar>,
    pub kind: SpectralKind,
}

impl SpectralPoint {
    pub fn new(coords: Vec<Scalar>, kind: SpectralKind) -> SpectralPoint {
        SpectralPoint { coords, kind }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    /// `a·p`
    pub fn scaled(&self, a: &Scalar) -> SpectralPoint {
        SpectralPoint::new(self.coords.iter().map(|c| a * c).collect(), SpectralKind::Derived)
    }

    /// `a + p`
    pub fn shifted(&self, a: &Scalar) -> SpectralPoint {
        SpectralPoint::new(self.coords.iter().map(|c| a + c).collect(), SpectralKind::Derived)
    }

    /// Componentwise reciprocal.
    pub fn inverse(&self) -> Result<SpectralPoint> {
        Ok(SpectralPoint::new(
            self.coords.iter().map(Scalar::inv).collect::<Result<_>>()?,
            SpectralKind::Derived,
        ))
    }
}

impl fmt::Display for SpectralPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", s.join(", "))
    }
}

/// `τ = (1, t^{-1}, …, t^{1-n})`
pub fn tau(n: usize, cfg: &FieldConfig) -> Vec<Scalar> {
    let tinv = cfg.t().inv().expect("t is nonzero");
    let mut out = Vec::with_capacity(n);
    let mut cur = Scalar::one();
    for _ in 0..n {
        out.push(cur.clone());
        cur = &cur * &tinv;
    }
    out
}

/// `ρ = r·(0, -1, …, 1-n)`
pub fn rho(n: usize, cfg: &FieldConfig) -> Vec<Scalar> {
    let r = cfg.r();
    (0..n).map(|i| &r * &Scalar::int(-(i as i64))).collect()
}

/// `v̄_i = q^{v_i} (w_v τ)_i`
pub fn spectral_qt(v: &IntVector, cfg: &FieldConfig) -> SpectralPoint {
    let (_, w) = dominant_sort(v);
    let wt = w.act(&tau(v.n(), cfg));
    let q = cfg.q();
    let coords = v
        .entries()
        .iter()
        .zip(wt)
        .map(|(&k, x)| &q.pow(k).expect("q is nonzero") * &x)
        .collect();
    SpectralPoint::new(coords, SpectralKind::QtBar)
}

/// `v̄(r) = v + w_v ρ`
pub fn spectral_r(v: &IntVector, cfg: &FieldConfig) -> SpectralPoint {
    let (_, w) = dominant_sort(v);
    let wr = w.act(&rho(v.n(), cfg));
    let coords = v
        .entries()
        .iter()
        .zip(wr)
        .map(|(&k, x)| &Scalar::int(k) + &x)
        .collect();
    SpectralPoint::new(coords, SpectralKind::RBar)
}

/// The spectral point of an integral vector in the variant of `cfg`.
pub fn spectral(v: &IntVector, cfg: &FieldConfig) -> SpectralPoint {
    if cfg.variant().is_qt() {
        spectral_qt(v, cfg)
    } else {
        spectral_r(v, cfg)
    }
}

/// `β̃`: the spectral point of `-w_o β`.
pub fn tilde(beta: &Composition, cfg: &FieldConfig) -> SpectralPoint {
    let mut p = spectral(&beta.to_int().neg_reversed(), cfg);
    p.kind = if cfg.variant().is_qt() {
        SpectralKind::QtTilde
    } else {
        SpectralKind::RTilde
    };
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Gen, Variant};

    fn iv(v: &[i64]) -> IntVector {
        IntVector(v.to_vec())
    }
    fn q() -> Scalar {
        Scalar::gen(Gen::Q)
    }
    fn tinv() -> Scalar {
        Scalar::gen(Gen::T).inv().unwrap()
    }
    fn r() -> Scalar {
        Scalar::gen(Gen::R)
    }

    #[test]
    fn qt_examples() {
        let cfg = FieldConfig::symbolic(Variant::QT);
        assert_eq!(spectral_qt(&iv(&[0, 0]), &cfg).coords, vec![Scalar::one(), tinv()]);
        assert_eq!(spectral_qt(&iv(&[0, 1]), &cfg).coords, vec![tinv(), q()]);
        assert_eq!(spectral_qt(&iv(&[1, 0]), &cfg).coords, vec![q(), tinv()]);
    }

    #[test]
    fn r_examples() {
        let cfg = FieldConfig::symbolic(Variant::R);
        assert_eq!(spectral_r(&iv(&[0, 0]), &cfg).coords, vec![Scalar::zero(), -r()]);
        assert_eq!(spectral_r(&iv(&[0, 1]), &cfg).coords, vec![-r(), Scalar::one()]);
        assert_eq!(spectral_r(&iv(&[1, 0]), &cfg).coords, vec![Scalar::one(), -r()]);
    }

    #[test]
    fn tilde_examples() {
        let qt = FieldConfig::symbolic(Variant::QT);
        let rc = FieldConfig::symbolic(Variant::R);
        let zero = Composition::zero(2);
        assert_eq!(tilde(&zero, &qt).coords, tau(2, &qt));
        assert_eq!(tilde(&zero, &rc).coords, rho(2, &rc));
        // -w_o (1,0) = (0,-1) is already dominant: (0, -1 - r).
        let b = Composition::new(vec![1, 0]).unwrap();
        assert_eq!(
            tilde(&b, &rc).coords,
            vec![Scalar::zero(), &Scalar::int(-1) - &r()]
        );
        let k = Composition::new(vec![3]).unwrap();
        assert_eq!(tilde(&k, &qt).coords, vec![q().pow(-3).unwrap()]);
    }
}
