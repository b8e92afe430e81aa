//! Sparse Laurent polynomials in `x_1, …, x_n` over [`Scalar`].
//!
//! Variable indices in this module are zero-based. Terms are kept in
//! graded-lexicographic order (total degree first, then lexicographic with
//! `x_1` most significant); serialization lists them leading term first.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalars::Scalar;
use crate::shapes::Permutation;

/// An exponent vector, possibly with negative entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Exponent(pub Vec<i32>);

impl Exponent {
    pub fn zero(n: usize) -> Exponent {
        Exponent(vec![0; n])
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&x| x as i64).sum()
    }

    pub fn unit(n: usize, i: usize) -> Exponent {
        let mut e = vec![0; n];
        e[i] = 1;
        Exponent(e)
    }

    fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<&[u32]> for Exponent {
    fn from(v: &[u32]) -> Self {
        Exponent(v.iter().map(|&x| x as i32).collect())
    }
}

/// An affine variable map `x_i -> scale · x_target + shift`.
#[derive(Debug, Clone)]
pub struct AffineMap {
    pub target: usize,
    pub scale: Scalar,
    pub shift: Scalar,
}

impl AffineMap {
    pub fn identity(i: usize) -> AffineMap {
        AffineMap {
            target: i,
            scale: Scalar::one(),
            shift: Scalar::zero(),
        }
    }

    pub fn monomial(target: usize, scale: Scalar) -> AffineMap {
        AffineMap {
            target,
            scale,
            shift: Scalar::zero(),
        }
    }
}

/// A Laurent polynomial in `n` variables. No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    n: usize,
    terms: BTreeMap<Exponent, Scalar>,
}

impl LaurentPoly {
    pub fn zero(n: usize) -> LaurentPoly {
        LaurentPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> LaurentPoly {
        LaurentPoly::constant(n, Scalar::one())
    }

    pub fn constant(n: usize, c: Scalar) -> LaurentPoly {
        LaurentPoly::monomial(Exponent::zero(n), c)
    }

    /// The variable `x_i` (zero-based).
    pub fn var(n: usize, i: usize) -> LaurentPoly {
        LaurentPoly::monomial(Exponent::unit(n, i), Scalar::one())
    }

    pub fn monomial(e: Exponent, c: Scalar) -> LaurentPoly {
        let n = e.0.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { n, terms }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Exponent, Scalar)>) -> LaurentPoly {
        let mut p = LaurentPoly::zero(n);
        for (e, c) in terms {
            assert_eq!(e.0.len(), n, "exponent length");
            p.add_term(e, c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &[i32]) -> Scalar {
        self.terms
            .get(&Exponent(e.to_vec()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Largest total degree of a term, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Exponent::degree).max()
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.0.iter().all(|&x| x >= 0))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| self.swap(i) == *self)
    }

    fn add_term(&mut self, e: Exponent, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_n(&self, other: &LaurentPoly) {
        assert_eq!(self.n, other.n, "polynomials in different numbers of variables");
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        self.check_n(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.check_n(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        self.check_n(other);
        let mut out = LaurentPoly::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.n);
        }
        if c.is_one() {
            return self.clone();
        }
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn div_scalar(&self, c: &Scalar) -> Result<LaurentPoly> {
        let inv = c.inv()?;
        Ok(self.scale(&inv))
    }

    /// Multiply by the monomial `x^e`.
    pub fn shift_monomial(&self, e: &Exponent) -> LaurentPoly {
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e2, c)| (e2.add(e), c.clone())).collect(),
        }
    }

    pub fn add_scaled(&self, other: &LaurentPoly, c: &Scalar) -> LaurentPoly {
        self.add(&other.scale(c))
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c)?);
        }
        Ok(out)
    }

    /// `f(p)` for a point with one coordinate per variable.
    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.n {
            return Err(Error::DimensionError(format!(
                "evaluating a polynomial in {} variables at a point of length {}",
                self.n,
                point.len()
            )));
        }
        let mut pos: Vec<Vec<Scalar>> = vec![vec![Scalar::one()]; self.n];
        let mut neg: Vec<Vec<Scalar>> = vec![Vec::new(); self.n];
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.0.iter().enumerate() {
                if k > 0 {
                    let cache = &mut pos[i];
                    while cache.len() <= k as usize {
                        let next = cache.last().unwrap() * &point[i];
                        cache.push(next);
                    }
                    term = &term * &cache[k as usize];
                } else if k < 0 {
                    let cache = &mut neg[i];
                    if cache.is_empty() {
                        cache.push(Scalar::one());
                        cache.push(point[i].inv()?);
                    }
                    while cache.len() <= (-k) as usize {
                        let next = cache.last().unwrap() * &cache[1];
                        cache.push(next);
                    }
                    term = &term * &cache[(-k) as usize];
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// `w·f`: the substitution `x_i -> x_{w(i)}`, so that
    /// `(w·f)(p) = f(w⁻¹·p)` and `w·x^e = x^{w·e}`.
    pub fn permute_vars(&self, w: &Permutation) -> LaurentPoly {
        assert_eq!(w.n(), self.n, "permutation size");
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exponent(w.act(&e.0)), c.clone()))
                .collect(),
        }
    }

    /// `s_i f` for zero-based `i`: exchange `x_i` and `x_{i+1}`.
    pub fn swap(&self, i: usize) -> LaurentPoly {
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2.0.swap(i, i + 1);
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    /// Substitute `x_i -> scale_i · x_{target_i} + shift_i` for every variable.
    pub fn affine_substitute(&self, maps: &[AffineMap]) -> Result<LaurentPoly> {
        if maps.len() != self.n {
            return Err(Error::DimensionError(format!(
                "{} affine maps for {} variables",
                maps.len(),
                self.n
            )));
        }
        if maps.iter().any(|m| m.target >= self.n) {
            return Err(Error::IndexError("affine map target".into()));
        }
        if maps.iter().all(|m| m.shift.is_zero()) {
            return self.monomial_substitute(maps);
        }
        let mut powers: Vec<Vec<LaurentPoly>> = vec![vec![LaurentPoly::one(self.n)]; self.n];
        let mut out = LaurentPoly::zero(self.n);
        for (e, c) in &self.terms {
            let mut term = LaurentPoly::constant(self.n, c.clone());
            let mut mono = Exponent::zero(self.n);
            let mut mono_coeff = Scalar::one();
            for (i, &k) in e.0.iter().enumerate() {
                let m = &maps[i];
                if k == 0 {
                    continue;
                }
                if m.shift.is_zero() {
                    mono.0[m.target] += k;
                    mono_coeff = &mono_coeff * &m.scale.pow(k as i64)?;
                    continue;
                }
                if k < 0 {
                    return Err(Error::UnsupportedSubstitution(format!(
                        "negative power of x_{} under a map with a constant term",
                        i + 1
                    )));
                }
                let cache = &mut powers[i];
                let lin = LaurentPoly::var(self.n, m.target)
                    .scale(&m.scale)
                    .add(&LaurentPoly::constant(self.n, m.shift.clone()));
                while cache.len() <= k as usize {
                    let next = cache.last().unwrap().mul(&lin);
                    cache.push(next);
                }
                term = term.mul(&cache[k as usize]);
            }
            let term = term.shift_monomial(&mono).scale(&mono_coeff);
            out = out.add(&term);
        }
        Ok(out)
    }

    fn monomial_substitute(&self, maps: &[AffineMap]) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero(self.n);
        for (e, c) in &self.terms {
            let mut mono = Exponent::zero(self.n);
            let mut coeff = c.clone();
            for (i, &k) in e.0.iter().enumerate() {
                if k != 0 {
                    mono.0[maps[i].target] += k;
                    coeff = &coeff * &maps[i].scale.pow(k as i64)?;
                }
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }

    /// `f(a·x)`
    pub fn scale_vars(&self, a: &Scalar) -> Result<LaurentPoly> {
        let maps: Vec<AffineMap> = (0..self.n).map(|i| AffineMap::monomial(i, a.clone())).collect();
        self.affine_substitute(&maps)
    }

    /// `f(a + x)`
    pub fn shift_vars(&self, a: &Scalar) -> Result<LaurentPoly> {
        let maps: Vec<AffineMap> = (0..self.n)
            .map(|i| AffineMap {
                target: i,
                scale: Scalar::one(),
                shift: a.clone(),
            })
            .collect();
        self.affine_substitute(&maps)
    }

    /// The homogeneous part of degree exactly `d`; errors if any term exceeds `d`.
    pub fn top_part(&self, d: i64) -> Result<LaurentPoly> {
        if let Some(top) = self.total_degree().filter(|&t| t > d) {
            return Err(Error::DegreeError(format!(
                "polynomial has degree {top} > {d}"
            )));
        }
        Ok(LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        })
    }

    /// The part of total degree strictly below `d`.
    pub fn below_degree(&self, d: i64) -> LaurentPoly {
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() < d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `g / (x_i - x_{i+1})` (zero-based `i`), by synthetic
    /// division on the power of `x_i`; a nonzero remainder is an error.
    pub fn div_by_difference(&self, i: usize) -> Result<LaurentPoly> {
        if i + 1 >= self.n {
            return Err(Error::IndexError(format!("x_{} - x_{}", i + 1, i + 2)));
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero(self.n));
        }
        let low = self.terms.keys().map(|e| e.0[i]).min().unwrap();
        // Bucket terms by the power of x_i, highest first.
        let mut rem: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            rem.entry(e.0[i])
                .or_insert_with(|| LaurentPoly::zero(self.n))
                .add_term(e.clone(), c.clone());
        }
        let mut quot = LaurentPoly::zero(self.n);
        while let Some((&k, _)) = rem.iter().next_back() {
            let level = rem.remove(&k).unwrap();
            if level.is_zero() {
                continue;
            }
            if k <= low {
                return Err(Error::NonzeroRemainder(format!(
                    "division by x_{} - x_{}",
                    i + 1,
                    i + 2
                )));
            }
            // c·x^e = (c·x^{e - u_i})·(x_i - x_{i+1}) + c·x^{e - u_i + u_{i+1}}
            for (e, c) in level.terms {
                let mut qe = e.clone();
                qe.0[i] -= 1;
                let mut carry = qe.clone();
                carry.0[i + 1] += 1;
                quot.add_term(qe, c.clone());
                rem.entry(k - 1)
                    .or_insert_with(|| LaurentPoly::zero(self.n))
                    .add_term(carry, c);
            }
        }
        Ok(quot)
    }

    /// `(f - s_i f) / (x_i - x_{i+1})` for zero-based `i`.
    pub fn divided_difference(&self, i: usize) -> Result<LaurentPoly> {
        self.sub(&self.swap(i)).div_by_difference(i)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| json!({"exp": e.0, "coeff": c.to_json()}))
            .collect();
        json!({"n": self.n, "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<LaurentPoly> {
        let n = v
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("polynomial: missing n".into()))? as usize;
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("polynomial: missing terms".into()))?;
        let mut p = LaurentPoly::zero(n);
        for t in terms {
            let exp: Vec<i32> = serde_json::from_value(
                t.get("exp")
                    .cloned()
                    .ok_or_else(|| Error::Parse("term without exp".into()))?,
            )?;
            if exp.len() != n {
                return Err(Error::Parse(format!("exponent {exp:?} has length != {n}")));
            }
            let c = Scalar::from_json(
                t.get("coeff")
                    .ok_or_else(|| Error::Parse("term without coeff".into()))?,
            )?;
            p.add_term(Exponent(exp), c);
        }
        Ok(p)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        LaurentPoly::from_json(&v).map_err(serde::de::Error::custom)
    }
}

/// Human-readable rendering, leading term first, e.g. `x1^2 - (q + 1)*x2 + 1/t`.
/// True if `s` contains a binary `+` or `-` outside parentheses.
fn has_top_level_sum(s: &str) -> bool {
    let mut depth = 0i32;
    let b = s.as_bytes();
    for (i, &c) in b.iter().enumerate() {
        match c {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 && i > 0 && b[i - 1] == b' ' => return true,
            _ => {}
        }
    }
    false
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| match k {
                    1 => format!("x{}", i + 1),
                    _ => format!("x{}^{}", i + 1, k),
                })
                .collect();
            // Pull a leading minus out of the coefficient when what remains is
            // a single factor.
            let negated = -c;
            let (neg, mag) = match c {
                Scalar::Rational(r) if r < &num_rational::BigRational::from_integer(0.into()) => {
                    (true, negated)
                }
                Scalar::Symbolic(_) => {
                    let plain = negated.to_string();
                    if c.to_string().starts_with('-') && !has_top_level_sum(&plain) {
                        (true, negated)
                    } else {
                        (false, c.clone())
                    }
                }
                _ => (false, c.clone()),
            };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let coeff = mag.to_string();
            let needs_parens =
                matches!(mag, Scalar::Symbolic(_)) && (has_top_level_sum(&coeff) || coeff.starts_with('-'));
            if mono.is_empty() {
                if needs_parens {
                    write!(f, "({coeff})")?;
                } else {
                    f.write_str(&coeff)?;
                }
            } else if mag.is_one() {
                f.write_str(&mono.join("*"))?;
            } else if needs_parens {
                write!(f, "({coeff})*{}", mono.join("*"))?;
            } else {
                write!(f, "{coeff}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Gen;

    fn x(n: usize, i: usize) -> LaurentPoly {
        LaurentPoly::var(n, i)
    }
    fn c(n: usize, v: i64) -> LaurentPoly {
        LaurentPoly::constant(n, Scalar::int(v))
    }
    fn tinv() -> Scalar {
        Scalar::gen(Gen::T).inv().unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let f = x(2, 1).sub(&LaurentPoly::constant(2, tinv()));
        assert!(f.evaluate(&[Scalar::one(), tinv()]).unwrap().is_zero());
        assert_eq!(
            LaurentPoly::one(2).evaluate(&[Scalar::int(5), Scalar::int(7)]).unwrap(),
            Scalar::one()
        );
        let q = Scalar::gen(Gen::Q);
        assert_eq!(
            x(2, 0).mul(&x(2, 1)).evaluate(&[q.clone(), tinv()]).unwrap(),
            &q * &tinv()
        );
    }

    #[test]
    fn evaluate_negative_power_at_zero() {
        let f = LaurentPoly::monomial(Exponent(vec![-1]), Scalar::one());
        assert_eq!(f.evaluate(&[Scalar::zero()]), Err(Error::DivisionByZero));
        assert_eq!(f.evaluate(&[Scalar::int(4)]).unwrap(), Scalar::ratio(1, 4).unwrap());
    }

    #[test]
    fn permute_examples() {
        let f = x(2, 0).add(&x(2, 1).scale(&Scalar::int(2)));
        assert_eq!(f.permute_vars(&Permutation::identity(2)), f);
        assert_eq!(x(2, 0).permute_vars(&Permutation::simple(1, 2).unwrap()), x(2, 1));
        assert_eq!(
            f.permute_vars(&Permutation::longest(2)),
            x(2, 1).add(&x(2, 0).scale(&Scalar::int(2)))
        );
    }

    #[test]
    fn affine_examples() {
        let q = Scalar::gen(Gen::Q);
        let r = Scalar::gen(Gen::R);
        let a = Scalar::gen(Gen::A);
        let f = x(1, 0);
        let g = f
            .affine_substitute(&[AffineMap::monomial(0, q.inv().unwrap())])
            .unwrap();
        assert_eq!(g, x(1, 0).scale(&q.inv().unwrap()));

        let h = x(2, 1).add(&LaurentPoly::constant(2, r.clone()));
        let maps: Vec<AffineMap> = (0..2)
            .map(|i| AffineMap {
                target: i,
                scale: Scalar::int(-1),
                shift: -r.clone(),
            })
            .collect();
        assert_eq!(h.affine_substitute(&maps).unwrap(), x(2, 1).neg());

        let k = x(1, 0).add(&c(1, 1));
        assert_eq!(
            k.scale_vars(&a).unwrap(),
            x(1, 0).scale(&a).add(&c(1, 1))
        );
    }

    #[test]
    fn affine_rejects_negative_power_with_shift() {
        let f = LaurentPoly::monomial(Exponent(vec![-1]), Scalar::one());
        assert!(matches!(
            f.shift_vars(&Scalar::one()),
            Err(Error::UnsupportedSubstitution(_))
        ));
    }

    #[test]
    fn top_part_examples() {
        let f = x(2, 1).sub(&LaurentPoly::constant(2, tinv()));
        assert_eq!(f.top_part(1).unwrap(), x(2, 1));
        assert_eq!(LaurentPoly::one(2).top_part(0).unwrap(), LaurentPoly::one(2));
        let g = x(2, 0).add(&x(2, 1)).sub(&c(2, 1));
        assert_eq!(g.top_part(1).unwrap(), x(2, 0).add(&x(2, 1)));
        assert!(matches!(g.top_part(0), Err(Error::DegreeError(_))));
    }

    #[test]
    fn coefficient_examples() {
        let f = x(2, 1).sub(&LaurentPoly::constant(2, tinv()));
        assert_eq!(f.coefficient(&[0, 1]), Scalar::one());
        assert_eq!(f.coefficient(&[0, 0]), -tinv());
        assert_eq!(f.coefficient(&[3, 3]), Scalar::zero());
    }

    #[test]
    fn divided_differences() {
        // (x1^3 - x2^3)/(x1 - x2)
        let f = x(2, 0).mul(&x(2, 0)).mul(&x(2, 0));
        let d = f.divided_difference(0).unwrap();
        let expect = x(2, 0)
            .mul(&x(2, 0))
            .add(&x(2, 0).mul(&x(2, 1)))
            .add(&x(2, 1).mul(&x(2, 1)));
        assert_eq!(d, expect);
        // Laurent: (x1^-1 - x2^-1)/(x1 - x2) = -x1^-1 x2^-1
        let g = LaurentPoly::monomial(Exponent(vec![-1, 0]), Scalar::one());
        assert_eq!(
            g.divided_difference(0).unwrap(),
            LaurentPoly::monomial(Exponent(vec![-1, -1]), Scalar::int(-1))
        );
        assert!(matches!(
            x(2, 0).div_by_difference(0),
            Err(Error::NonzeroRemainder(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let f = x(2, 1)
            .sub(&LaurentPoly::constant(2, tinv()))
            .add(&x(2, 0).mul(&x(2, 0)).scale(&Scalar::ratio(3, 7).unwrap()));
        let v = f.to_json();
        assert_eq!(LaurentPoly::from_json(&v).unwrap(), f);
        // Leading term first.
        assert_eq!(v["terms"][0]["exp"], json!([2, 0]));
    }
}
