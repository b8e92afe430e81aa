//! Sparse multivariate polynomials with integer coefficients in the parameter
//! generators `q, t, r, a`.
//!
//! Exponent tuples always carry one slot per generator of the universal set;
//! absent generators simply have exponent zero. Terms are ordered
//! graded-lexicographically with `q < t < r < a`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// One of the parameter generators a coefficient field can be built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Gen {
    Q,
    T,
    R,
    A,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::Q, Gen::T, Gen::R, Gen::A];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Gen::Q => "q",
            Gen::T => "t",
            Gen::R => "r",
            Gen::A => "a",
        }
    }

    pub fn from_name(s: &str) -> Option<Gen> {
        match s {
            "q" => Some(Gen::Q),
            "t" => Some(Gen::T),
            "r" => Some(Gen::R),
            "a" => Some(Gen::A),
            _ => None,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent tuple over `(q, t, r, a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GenExp(pub [u32; 4]);

impl GenExp {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn unit(g: Gen) -> GenExp {
        let mut e = [0; 4];
        e[g.index()] = 1;
        GenExp(e)
    }

    fn add(&self, other: &GenExp) -> GenExp {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0) {
            *x += y;
        }
        GenExp(e)
    }

    fn checked_sub(&self, other: &GenExp) -> Option<GenExp> {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0) {
            *x = x.checked_sub(y)?;
        }
        Some(GenExp(e))
    }
}

impl Ord for GenExp {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for GenExp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `Z[q, t, r, a]`. No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GenPoly {
    terms: BTreeMap<GenExp, BigInt>,
}

impl GenPoly {
    pub fn zero() -> Self {
        GenPoly::default()
    }

    pub fn one() -> Self {
        GenPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(GenExp::default(), c);
        }
        GenPoly { terms }
    }

    pub fn gen(g: Gen) -> Self {
        GenPoly::monomial(GenExp::unit(g), BigInt::one())
    }

    pub fn monomial(e: GenExp, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        GenPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (GenExp, BigInt)>) -> Self {
        let mut p = GenPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&GenExp, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value if the polynomial is constant (zero included).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                (e.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn leading(&self) -> Option<(&GenExp, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Bitmask of generators that occur.
    pub fn vars(&self) -> u8 {
        let mut m = 0u8;
        for e in self.terms.keys() {
            for (i, &x) in e.0.iter().enumerate() {
                if x > 0 {
                    m |= 1 << i;
                }
            }
        }
        m
    }

    pub fn degree_in(&self, g: Gen) -> u32 {
        self.terms.keys().map(|e| e.0[g.index()]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(GenExp::degree).max().unwrap_or(0)
    }

    fn add_term(&mut self, e: GenExp, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &GenPoly) -> GenPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &GenPoly) -> GenPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c);
        }
        out
    }

    pub fn neg(&self) -> GenPoly {
        GenPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &GenPoly) -> GenPoly {
        if self.is_zero() || other.is_zero() {
            return GenPoly::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        let mut out = GenPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> GenPoly {
        if c.is_zero() {
            return GenPoly::zero();
        }
        GenPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    fn mul_term(&self, e: &GenExp, c: &BigInt) -> GenPoly {
        GenPoly {
            terms: self.terms.iter().map(|(e2, c2)| (e.add(e2), c * c2)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> GenPoly {
        let mut out = GenPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = out.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Gcd of the integer coefficients (nonnegative; zero for the zero polynomial).
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self` in
    /// `Z[q, t, r, a]`.
    pub fn div_exact(&self, d: &GenPoly) -> Option<GenPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(GenPoly::zero());
        }
        if let Some(c) = d.as_constant() {
            let mut terms = BTreeMap::new();
            for (e, x) in &self.terms {
                let (q, r) = x.div_rem(&c);
                if !r.is_zero() {
                    return None;
                }
                terms.insert(*e, q);
            }
            return Some(GenPoly { terms });
        }
        let (de, dc) = d.leading().map(|(e, c)| (*e, c.clone()))?;
        let mut rem = self.clone();
        let mut quot = GenPoly::zero();
        while let Some((re, rc)) = rem.leading().map(|(e, c)| (*e, c.clone())) {
            let qe = re.checked_sub(&de)?;
            let (qc, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let sub = d.mul_term(&qe, &qc);
            for (e, c) in sub.terms {
                rem.add_term(e, -c);
            }
            quot.add_term(qe, qc);
        }
        Some(quot)
    }

    /// Coefficients with respect to `g`: entry `k` is the coefficient of `g^k`.
    fn coeffs_in(&self, g: Gen) -> Vec<GenPoly> {
        let deg = self.degree_in(g) as usize;
        let mut out = vec![GenPoly::zero(); deg + 1];
        for (e, c) in &self.terms {
            let k = e.0[g.index()] as usize;
            let mut e2 = *e;
            e2.0[g.index()] = 0;
            out[k].terms.insert(e2, c.clone());
        }
        out
    }

    fn leading_coeff_in(&self, g: Gen) -> GenPoly {
        let deg = self.degree_in(g);
        let mut out = GenPoly::zero();
        for (e, c) in &self.terms {
            if e.0[g.index()] == deg {
                let mut e2 = *e;
                e2.0[g.index()] = 0;
                out.terms.insert(e2, c.clone());
            }
        }
        out
    }

    fn content_in(&self, g: Gen) -> GenPoly {
        let mut acc = GenPoly::zero();
        for c in self.coeffs_in(g) {
            if c.is_zero() {
                continue;
            }
            acc = GenPoly::gcd(&acc, &c);
            if acc.is_one() {
                break;
            }
        }
        acc
    }

    fn primitive_part_in(&self, g: Gen) -> GenPoly {
        let c = self.content_in(g);
        self.div_exact(&c).expect("content divides its polynomial")
    }

    /// Sparse pseudo-remainder of `f` by `d` as polynomials in `g`.
    fn pseudo_rem(f: &GenPoly, d: &GenPoly, g: Gen) -> GenPoly {
        let dd = d.degree_in(g);
        let lcd = d.leading_coeff_in(g);
        let mut r = f.clone();
        while !r.is_zero() && r.degree_in(g) >= dd {
            let dr = r.degree_in(g);
            let lcr = r.leading_coeff_in(g);
            let mut shift = GenExp::default();
            shift.0[g.index()] = dr - dd;
            let t = lcr.mul(d).mul_term(&shift, &BigInt::one());
            r = r.mul(&lcd).sub(&t);
        }
        r
    }

    /// Make the graded-lex leading coefficient positive.
    pub fn normalize_sign(self) -> GenPoly {
        match self.leading() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self,
        }
    }

    /// Gcd of a single term `m` with `p`: the integer gcd of the coefficients
    /// times the componentwise minimum of the exponents.
    fn gcd_with_monomial(m: &GenPoly, p: &GenPoly) -> GenPoly {
        let (me, mc) = m.leading().expect("nonzero monomial");
        let mut exp = *me;
        let mut c = mc.abs();
        for (e, x) in &p.terms {
            for k in 0..4 {
                exp.0[k] = exp.0[k].min(e.0[k]);
            }
            c = c.gcd(x);
        }
        GenPoly::monomial(exp, c)
    }

    /// Greatest common divisor in `Z[q, t, r, a]`, normalized to a positive
    /// leading coefficient. Recursive content / primitive-part reduction with a
    /// primitive pseudo-remainder sequence in the main variable.
    pub fn gcd(a: &GenPoly, b: &GenPoly) -> GenPoly {
        if a.is_zero() {
            return b.clone().normalize_sign();
        }
        if b.is_zero() {
            return a.clone().normalize_sign();
        }
        if a.is_one() || b.is_one() {
            return GenPoly::one();
        }
        let vars = a.vars() | b.vars();
        if vars == 0 {
            let x = a.as_constant().unwrap();
            let y = b.as_constant().unwrap();
            return GenPoly::constant(x.gcd(&y));
        }
        if a == b {
            return a.clone().normalize_sign();
        }
        if a.len() == 1 || b.len() == 1 {
            let (m, p) = if a.len() == 1 { (a, b) } else { (b, a) };
            return GenPoly::gcd_with_monomial(m, p);
        }
        let main = Gen::ALL
            .into_iter()
            .rev()
            .find(|g| vars & (1 << g.index()) != 0)
            .unwrap();
        if a.degree_in(main) == 0 {
            return GenPoly::gcd(a, &b.content_in(main));
        }
        if b.degree_in(main) == 0 {
            return GenPoly::gcd(&a.content_in(main), b);
        }
        let ca = a.content_in(main);
        let cb = b.content_in(main);
        let content = GenPoly::gcd(&ca, &cb);
        let pa = a.div_exact(&ca).expect("content divides");
        let pb = b.div_exact(&cb).expect("content divides");
        if let Some(_) = pa.div_exact(&pb) {
            return pb.mul(&content).normalize_sign();
        }
        if let Some(_) = pb.div_exact(&pa) {
            return pa.mul(&content).normalize_sign();
        }
        let (mut f, mut g) = if pa.degree_in(main) >= pb.degree_in(main) {
            (pa, pb)
        } else {
            (pb, pa)
        };
        let last = loop {
            if g.is_zero() {
                break f;
            }
            if g.degree_in(main) == 0 {
                break GenPoly::one();
            }
            let r = GenPoly::pseudo_rem(&f, &g, main);
            f = g;
            g = if r.is_zero() { r } else { r.primitive_part_in(main) };
        };
        let last = if last.is_one() {
            last
        } else {
            last.primitive_part_in(main)
        };
        last.mul(&content).normalize_sign()
    }

    /// Value at fully specified generators; `None` if a needed generator is unassigned.
    pub fn eval(&self, values: &[Option<BigRational>; 4]) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        let mut powers: [Vec<BigRational>; 4] = Default::default();
        for (e, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (i, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let v = values[i].as_ref()?;
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(BigRational::one());
                }
                while cache.len() <= k as usize {
                    let next = cache.last().unwrap() * v;
                    cache.push(next);
                }
                term *= &cache[k as usize];
            }
            acc += term;
        }
        Some(acc)
    }

    pub(crate) fn fmt_with(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono: Vec<String> = Gen::ALL
                .iter()
                .filter(|g| e.0[g.index()] > 0)
                .map(|g| match e.0[g.index()] {
                    1 => g.name().to_string(),
                    k => format!("{}^{}", g.name(), k),
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for GenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> GenPoly {
        GenPoly::gen(Gen::Q)
    }
    fn t() -> GenPoly {
        GenPoly::gen(Gen::T)
    }
    fn c(x: i64) -> GenPoly {
        GenPoly::constant(BigInt::from(x))
    }

    #[test]
    fn grlex_leading_term() {
        let p = q().pow(2).add(&t()).add(&c(1));
        assert_eq!(p.leading().unwrap().0, &GenExp([2, 0, 0, 0]));
        let p = q().mul(&t()).add(&q().pow(2));
        // q*t beats q^2 since t > q.
        assert_eq!(p.leading().unwrap().0, &GenExp([1, 1, 0, 0]));
    }

    #[test]
    fn exact_division() {
        let p = q().pow(2).sub(&c(1));
        let d = q().sub(&c(1));
        assert_eq!(p.div_exact(&d).unwrap(), q().add(&c(1)));
        assert!(q().div_exact(&t()).is_none());
        assert!(c(3).div_exact(&c(2)).is_none());
    }

    #[test]
    fn gcd_univariate_and_bivariate() {
        let a = q().pow(2).sub(&c(1));
        let b = q().pow(2).add(&q().scale(&BigInt::from(2))).add(&c(1));
        assert_eq!(GenPoly::gcd(&a, &b), q().add(&c(1)));

        let common = q().mul(&t()).sub(&c(1));
        let x = common.mul(&q().add(&t()));
        let y = common.mul(&t().sub(&c(2))).scale(&BigInt::from(6));
        assert_eq!(GenPoly::gcd(&x, &y), common);
        assert_eq!(GenPoly::gcd(&c(6), &c(-4)), c(2));
        assert_eq!(GenPoly::gcd(&x, &c(5)), c(1));
    }

    #[test]
    fn gcd_sign_normalized() {
        let a = c(1).sub(&q());
        assert_eq!(GenPoly::gcd(&a, &a), q().sub(&c(1)));
    }
}
