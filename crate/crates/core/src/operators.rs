//! Demazure–Lusztig operators `H_i`, the Jack transpositions `σ_i`, the
//! raising operators `Φ`, `Φ̃`, the Cherednik operators `Ξ_i`, `Ξ̃_i`, and
//! the symmetrizer.
//!
//! Indices are one-based as in the usual notation. Products of operators are
//! applied right to left: in `H_i ⋯ H_{n-1} Φ H_1 ⋯ H_{i-1}` the factor
//! `H_{i-1}` acts first.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::polyring::{AffineMap, Exponent, LaurentPoly};
use crate::scalars::{FieldConfig, Scalar};
use crate::shapes::Permutation;

fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::IndexError(format!("operator index {i} for n = {n}")));
    }
    Ok(())
}

/// `t^{1-n}`
fn t_power(cfg: &FieldConfig, n: usize) -> Scalar {
    cfg.t().pow(1 - n as i64).expect("t is nonzero")
}

/// `Φf = (x_n - t^{1-n}) f(x_n/q, x_1, …, x_{n-1})`
pub fn phi_qt(f: &LaurentPoly, cfg: &FieldConfig) -> Result<LaurentPoly> {
    let n = f.n();
    let qinv = cfg.q().inv()?;
    let maps: Vec<AffineMap> = (0..n)
        .map(|i| {
            if i == 0 {
                AffineMap::monomial(n - 1, qinv.clone())
            } else {
                AffineMap::identity(i - 1)
            }
        })
        .collect();
    let g = f.affine_substitute(&maps)?;
    let lin = LaurentPoly::var(n, n - 1).sub(&LaurentPoly::constant(n, t_power(cfg, n)));
    Ok(lin.mul(&g))
}

/// `H_i = t s_i - (1 - t) x_i/(x_i - x_{i+1}) (1 - s_i)`
pub fn hecke(i: usize, f: &LaurentPoly, cfg: &FieldConfig) -> Result<LaurentPoly> {
    check_index(i, f.n())?;
    let t = cfg.t();
    let swapped = f.swap(i - 1);
    let quot = f.sub(&swapped).div_by_difference(i - 1)?;
    let xi = LaurentPoly::var(f.n(), i - 1);
    let one_minus_t = &Scalar::one() - &t;
    Ok(swapped.scale(&t).sub(&xi.mul(&quot).scale(&one_minus_t)))
}

/// `Ξ_i = x_i^{-1} + x_i^{-1} H_i ⋯ H_{n-1} Φ H_1 ⋯ H_{i-1}`
pub fn xi_qt(i: usize, f: &LaurentPoly, cfg: &FieldConfig) -> Result<LaurentPoly> {
    let n = f.n();
    if i == 0 || i > n {
        return Err(Error::IndexError(format!("Cherednik index {i} for n = {n}")));
    }
    let mut g = f.clone();
    for j in (1..i).rev() {
        g = hecke(j, &g, cfg)?;
    }
    g = phi_qt(&g, cfg)?;
    for j in (i..n).rev() {
        g = hecke(j, &g, cfg)?;
    }
    let mut e = Exponent::zero(n);
    e.0[i - 1] = -1;
    Ok(f.add(&g).shift_monomial(&e))
}

/// `σ_i = s_i + r/(x_i - x_{i+1}) (1 - s_i)`
pub fn sigma_op(i: usize, f: &LaurentPoly, cfg: &FieldConfig) -> Result<LaurentPoly> {
    check_index(i, f.n())?;
    let swapped = f.swap(i - 1);
    let quot = f.sub(&swapped).div_by_difference(i - 1)?;
    Ok(swapped.add(&quot.scale(&cfg.r())))
}

/// `σ(w) f` along the reduced word of `w`, rightmost letter first.
pub fn sigma_word(w: &Permutation, f: &LaurentPoly, cfg: &FieldConfig) -> Result<LaurentPoly> {
    sigma_along(&w.reduced_word(), f, cfg)
}

/// `σ_{i_1} ⋯ σ_{i_k} f` for an explicit word.
pub fn sigma_along(word: &[usize], f: &LaurentPoly, cfg: &FieldConfig) -> Result<LaurentPoly> {
    let mut g = f.clone();
    for &i in word.iter().rev() {
        g = sigma_op(i, &g, cfg)?;
    }
    Ok(g)
}

/// `Φ̃f = (x_n + (n-1)r) f(x_n - 1, x_1, …, x_{n-1})`
pub fn phi_r(f: &LaurentPoly, cfg: &FieldConfig) -> Result<LaurentPoly> {
    let n = f.n();
    let maps: Vec<AffineMap> = (0..n)
        .map(|i| {
            if i == 0 {
                AffineMap {
                    target: n - 1,
                    scale: Scalar::one(),
                    shift: Scalar::int(-1),
                }
            } else {
                AffineMap::identity(i - 1)
            }
        })
        .collect();
    let g = f.affine_substitute(&maps)?;
    let shift = &cfg.r() * &Scalar::int(n as i64 - 1);
    let lin = LaurentPoly::var(n, n - 1).add(&LaurentPoly::constant(n, shift));
    Ok(lin.mul(&g))
}

/// `Ξ̃_i = x_i - σ_i ⋯ σ_{n-1} Φ̃ σ_1 ⋯ σ_{i-1}`
pub fn xi_r(i: usize, f: &LaurentPoly, cfg: &FieldConfig) -> Result<LaurentPoly> {
    let n = f.n();
    if i == 0 || i > n {
        return Err(Error::IndexError(format!("Cherednik index {i} for n = {n}")));
    }
    let mut g = f.clone();
    for j in (1..i).rev() {
        g = sigma_op(j, &g, cfg)?;
    }
    g = phi_r(&g, cfg)?;
    for j in (i..n).rev() {
        g = sigma_op(j, &g, cfg)?;
    }
    Ok(LaurentPoly::var(n, i - 1).mul(f).sub(&g))
}

/// `σ(w) f` for every `w ∈ S_n`, built up one simple reflection at a time.
pub fn sigma_orbit(f: &LaurentPoly, cfg: &FieldConfig) -> Result<Vec<(Permutation, LaurentPoly)>> {
    let n = f.n();
    let mut seen: HashMap<Permutation, LaurentPoly> = HashMap::new();
    let id = Permutation::identity(n);
    seen.insert(id.clone(), f.clone());
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for i in 1..n {
                let s = Permutation::simple(i, n)?;
                let sw = s.compose(w);
                // Extend only along length-increasing steps; every element is
                // reached from a shorter one.
                if sw.length() != w.length() + 1 || seen.contains_key(&sw) {
                    continue;
                }
                let g = sigma_op(i, &seen[w], cfg)?;
                seen.insert(sw.clone(), g);
                next.push(sw);
            }
        }
        frontier = next;
    }
    let mut out: Vec<(Permutation, LaurentPoly)> = seen.into_iter().collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// `𝒮 = (1/n!) Σ_w σ(w)`
pub fn symmetrize(f: &LaurentPoly, cfg: &FieldConfig) -> Result<LaurentPoly> {
    let orbit = sigma_orbit(f, cfg)?;
    let count = orbit.len() as i64;
    let sum = orbit
        .into_iter()
        .fold(LaurentPoly::zero(f.n()), |acc, (_, g)| acc.add(&g));
    sum.div_scalar(&Scalar::int(count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Gen, Variant};

    fn qt() -> FieldConfig {
        FieldConfig::symbolic(Variant::QT)
    }
    fn rr() -> FieldConfig {
        FieldConfig::symbolic(Variant::R)
    }
    fn x(n: usize, i: usize) -> LaurentPoly {
        LaurentPoly::var(n, i)
    }
    fn cst(n: usize, c: Scalar) -> LaurentPoly {
        LaurentPoly::constant(n, c)
    }
    fn t() -> Scalar {
        Scalar::gen(Gen::T)
    }
    fn r() -> Scalar {
        Scalar::gen(Gen::R)
    }

    #[test]
    fn phi_examples() {
        let tinv = t().inv().unwrap();
        let g01 = x(2, 1).sub(&cst(2, tinv.clone()));
        assert_eq!(phi_qt(&LaurentPoly::one(2), &qt()).unwrap(), g01);
        let qinv = Scalar::gen(Gen::Q).inv().unwrap();
        assert_eq!(
            phi_qt(&x(2, 0), &qt()).unwrap(),
            g01.mul(&x(2, 1)).scale(&qinv)
        );
        assert_eq!(
            phi_qt(&LaurentPoly::one(1), &qt()).unwrap(),
            x(1, 0).sub(&LaurentPoly::one(1))
        );
    }

    #[test]
    fn hecke_examples() {
        let cfg = qt();
        let sym = x(2, 0).add(&x(2, 1));
        assert_eq!(hecke(1, &sym, &cfg).unwrap(), sym.scale(&t()));
        let one_minus_t = &Scalar::one() - &t();
        assert_eq!(
            hecke(1, &x(2, 0), &cfg).unwrap(),
            x(2, 1).scale(&t()).sub(&x(2, 0).scale(&one_minus_t))
        );
        assert_eq!(hecke(1, &LaurentPoly::one(2), &cfg).unwrap(), cst(2, t()));
        assert!(matches!(hecke(2, &x(2, 0), &cfg), Err(Error::IndexError(_))));
    }

    #[test]
    fn xi_examples() {
        let cfg = qt();
        for i in 1..=3 {
            assert_eq!(
                xi_qt(i, &LaurentPoly::one(3), &cfg).unwrap(),
                cst(3, t().pow(i as i64 - 1).unwrap())
            );
        }
        let tinv = t().inv().unwrap();
        let g01 = x(2, 1).sub(&cst(2, tinv));
        let qinv = Scalar::gen(Gen::Q).inv().unwrap();
        assert_eq!(xi_qt(2, &g01, &cfg).unwrap(), g01.scale(&qinv));
        assert_eq!(xi_qt(1, &LaurentPoly::one(1), &cfg).unwrap(), LaurentPoly::one(1));
    }

    #[test]
    fn sigma_examples() {
        let cfg = rr();
        assert_eq!(sigma_op(1, &LaurentPoly::one(2), &cfg).unwrap(), LaurentPoly::one(2));
        let expect = x(2, 1).add(&cst(2, r()));
        assert_eq!(sigma_op(1, &x(2, 0), &cfg).unwrap(), expect);
        assert_eq!(
            sigma_word(&Permutation::longest(2), &x(2, 0), &cfg).unwrap(),
            expect
        );
        assert_eq!(
            sigma_word(&Permutation::identity(2), &x(2, 0), &cfg).unwrap(),
            x(2, 0)
        );
    }

    #[test]
    fn phi_r_examples() {
        let cfg = rr();
        let g01 = x(2, 1).add(&cst(2, r()));
        assert_eq!(phi_r(&LaurentPoly::one(2), &cfg).unwrap(), g01);
        assert_eq!(
            phi_r(&x(2, 0), &cfg).unwrap(),
            g01.mul(&x(2, 1).sub(&LaurentPoly::one(2)))
        );
        assert_eq!(phi_r(&LaurentPoly::one(1), &cfg).unwrap(), x(1, 0));
        let laurent = LaurentPoly::monomial(Exponent(vec![-1, 0]), Scalar::one());
        assert!(matches!(
            phi_r(&laurent, &cfg),
            Err(Error::UnsupportedSubstitution(_))
        ));
    }

    #[test]
    fn xi_r_examples() {
        let cfg = rr();
        let g01 = x(2, 1).add(&cst(2, r()));
        assert_eq!(xi_r(2, &g01, &cfg).unwrap(), g01);
        assert_eq!(xi_r(2, &LaurentPoly::one(2), &cfg).unwrap(), cst(2, -r()));
        assert_eq!(xi_r(1, &LaurentPoly::one(2), &cfg).unwrap(), LaurentPoly::zero(2));
        assert_eq!(xi_r(1, &LaurentPoly::one(1), &cfg).unwrap(), LaurentPoly::zero(1));
    }

    #[test]
    fn symmetrize_examples() {
        let cfg = rr();
        let sym = x(2, 0).mul(&x(2, 1));
        assert_eq!(symmetrize(&sym, &cfg).unwrap(), sym);
        let half = Scalar::ratio(1, 2).unwrap();
        assert_eq!(
            symmetrize(&x(2, 0), &cfg).unwrap(),
            x(2, 0).add(&x(2, 1)).add(&cst(2, r())).scale(&half)
        );
        assert_eq!(symmetrize(&LaurentPoly::one(3), &cfg).unwrap(), LaurentPoly::one(3));
    }

    #[test]
    fn sigma_orbit_matches_reduced_words() {
        let cfg = rr();
        let f = x(3, 0).mul(&x(3, 0)).add(&x(3, 2));
        for (w, g) in sigma_orbit(&f, &cfg).unwrap() {
            assert_eq!(sigma_word(&w, &f, &cfg).unwrap(), g, "w = {w}");
        }
    }
}
