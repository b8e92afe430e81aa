//! Coefficient field elements: exact rationals, or reduced fractions of
//! integer polynomials in the parameter generators.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Map, Value};

use super::genpoly::{Gen, GenExp, GenPoly};
use crate::error::{Error, Result};

/// Reduced fraction `num / den` in `Q(q, t, r, a)`.
///
/// Invariants: `gcd(num, den)` is a unit, `den` is nonzero with positive
/// graded-lex leading coefficient, and at least one of `num`, `den` is
/// nonconstant (constant fractions are stored as [`Scalar::Rational`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: GenPoly,
    den: GenPoly,
}

impl RatFunc {
    pub fn numerator(&self) -> &GenPoly {
        &self.num
    }

    pub fn denominator(&self) -> &GenPoly {
        &self.den
    }
}

/// An element of the coefficient field.
///
/// The representation is canonical, so structural equality is mathematical
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Symbolic(RatFunc),
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Scalar {
        Scalar::Rational(BigRational::one())
    }

    pub fn int(x: i64) -> Scalar {
        Scalar::Rational(BigRational::from_integer(BigInt::from(x)))
    }

    pub fn ratio(p: i64, q: i64) -> Result<Scalar> {
        if q == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::Rational(BigRational::new(p.into(), q.into())))
    }

    pub fn rational(r: BigRational) -> Scalar {
        Scalar::Rational(r)
    }

    pub fn gen(g: Gen) -> Scalar {
        Scalar::Symbolic(RatFunc {
            num: GenPoly::gen(g),
            den: GenPoly::one(),
        })
    }

    pub fn from_poly(p: GenPoly) -> Scalar {
        match p.as_constant() {
            Some(c) => Scalar::Rational(BigRational::from_integer(c)),
            None => Scalar::Symbolic(RatFunc {
                num: p,
                den: GenPoly::one(),
            }),
        }
    }

    /// Canonical reduced fraction `num / den`.
    pub fn reduce(num: GenPoly, den: GenPoly) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Scalar::zero());
        }
        if let (Some(n), Some(d)) = (num.as_constant(), den.as_constant()) {
            return Ok(Scalar::Rational(BigRational::new(n, d)));
        }
        let (num, den) = if den.is_one() {
            (num, den)
        } else if let Some(d) = den.as_constant() {
            let g = num.integer_content().gcd(&d);
            let g = if d.is_negative() { -g } else { g };
            (
                num.div_exact(&GenPoly::constant(g.clone())).unwrap(),
                GenPoly::constant(d / g),
            )
        } else {
            let g = GenPoly::gcd(&num, &den);
            let (mut num, mut den) = if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
            };
            if den.leading().unwrap().1.is_negative() {
                num = num.neg();
                den = den.neg();
            }
            (num, den)
        };
        Ok(Scalar::from_parts_unchecked(num, den))
    }

    fn from_parts_unchecked(num: GenPoly, den: GenPoly) -> Scalar {
        match (num.as_constant(), den.as_constant()) {
            (Some(n), Some(d)) => Scalar::Rational(BigRational::new(n, d)),
            _ => Scalar::Symbolic(RatFunc { num, den }),
        }
    }

    /// Numerator and denominator as integer polynomials.
    pub fn parts(&self) -> (GenPoly, GenPoly) {
        match self {
            Scalar::Rational(r) => (
                GenPoly::constant(r.numer().clone()),
                GenPoly::constant(r.denom().clone()),
            ),
            Scalar::Symbolic(f) => (f.num.clone(), f.den.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Symbolic(_) => None,
        }
    }

    /// True if the denominator is 1, i.e. the value is a polynomial in the generators.
    fn is_poly(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.denom().is_one(),
            Scalar::Symbolic(f) => f.den.is_one(),
        }
    }

    /// Generators occurring in the value, as a bitmask over `q, t, r, a`.
    pub fn vars(&self) -> u8 {
        match self {
            Scalar::Rational(_) => 0,
            Scalar::Symbolic(f) => f.num.vars() | f.den.vars(),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rational(r) => {
                if r.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(r.recip()))
                }
            }
            Scalar::Symbolic(f) => {
                let (mut num, mut den) = (f.den.clone(), f.num.clone());
                if den.leading().unwrap().1.is_negative() {
                    num = num.neg();
                    den = den.neg();
                }
                if let Some(d) = den.as_constant() {
                    // num/d with d constant: re-reduce the integer content.
                    return Scalar::reduce(num, GenPoly::constant(d));
                }
                Ok(Scalar::from_parts_unchecked(num, den))
            }
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let (Scalar::Rational(a), Scalar::Rational(b)) = (self, other) {
            return Ok(Scalar::Rational(a / b));
        }
        if self.is_poly() && other.is_poly() {
            let (a, _) = self.parts();
            let (b, _) = other.parts();
            if let Some(q) = a.div_exact(&b) {
                return Ok(Scalar::from_poly(q));
            }
        }
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: i64) -> Result<Scalar> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut out = Scalar::one();
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(out)
    }

    /// Exact value with every occurring generator assigned.
    pub fn specialize(&self, assignments: &BTreeMap<Gen, BigRational>) -> Result<BigRational> {
        match self {
            Scalar::Rational(r) => Ok(r.clone()),
            Scalar::Symbolic(f) => {
                let mut vals: [Option<BigRational>; 4] = Default::default();
                for (g, v) in assignments {
                    vals[g.index()] = Some(v.clone());
                }
                let missing = || {
                    Error::UsageError(format!("specialize: unassigned generator in {self}"))
                };
                let n = f.num.eval(&vals).ok_or_else(missing)?;
                let d = f.den.eval(&vals).ok_or_else(missing)?;
                if d.is_zero() {
                    return Err(Error::SpecializationCollision(format!(
                        "denominator {} vanishes at {}",
                        f.den,
                        fmt_assignments(assignments)
                    )));
                }
                Ok(n / d)
            }
        }
    }

    /// Substitute values for some generators, leaving the others symbolic.
    pub fn substitute(&self, assignments: &BTreeMap<Gen, Scalar>) -> Result<Scalar> {
        match self {
            Scalar::Rational(_) => Ok(self.clone()),
            Scalar::Symbolic(f) => {
                let n = subst_poly(&f.num, assignments);
                let d = subst_poly(&f.den, assignments);
                if d.is_zero() {
                    return Err(Error::SpecializationCollision(format!(
                        "denominator {} vanishes under substitution",
                        f.den
                    )));
                }
                n.checked_div(&d)
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Scalar::Rational(r) => Value::String(rational_to_string(r)),
            Scalar::Symbolic(f) => {
                let mask = f.num.vars() | f.den.vars();
                let gens: Vec<Gen> = Gen::ALL
                    .into_iter()
                    .filter(|g| mask & (1 << g.index()) != 0)
                    .collect();
                let enc = |p: &GenPoly| {
                    let mut m = Map::new();
                    for (e, c) in p.terms().rev() {
                        let key: Vec<String> =
                            gens.iter().map(|g| e.0[g.index()].to_string()).collect();
                        m.insert(key.join(","), Value::String(c.to_string()));
                    }
                    Value::Object(m)
                };
                json!({
                    "num": enc(&f.num),
                    "den": enc(&f.den),
                    "gens": gens.iter().map(|g| g.name()).collect::<Vec<_>>(),
                })
            }
        }
    }

    pub fn from_json(v: &Value) -> Result<Scalar> {
        match v {
            Value::String(s) => Ok(Scalar::Rational(parse_rational(s)?)),
            Value::Object(m) => {
                let gens: Vec<Gen> = m
                    .get("gens")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::Parse("scalar: missing gens".into()))?
                    .iter()
                    .map(|g| {
                        g.as_str()
                            .and_then(Gen::from_name)
                            .ok_or_else(|| Error::Parse(format!("scalar: bad generator {g}")))
                    })
                    .collect::<Result<_>>()?;
                let dec = |key: &str| -> Result<GenPoly> {
                    let obj = m
                        .get(key)
                        .and_then(Value::as_object)
                        .ok_or_else(|| Error::Parse(format!("scalar: missing {key}")))?;
                    let mut terms = Vec::new();
                    for (k, c) in obj {
                        let exps: Vec<u32> = if k.is_empty() {
                            Vec::new()
                        } else {
                            k.split(',')
                                .map(|x| x.trim().parse::<u32>())
                                .collect::<std::result::Result<_, _>>()
                                .map_err(|e| Error::Parse(format!("scalar exponent {k}: {e}")))?
                        };
                        if exps.len() != gens.len() {
                            return Err(Error::Parse(format!(
                                "scalar exponent {k} does not match generators"
                            )));
                        }
                        let mut e = GenExp::default();
                        for (g, x) in gens.iter().zip(exps) {
                            e.0[g.index()] = x;
                        }
                        let c: BigInt = c
                            .as_str()
                            .ok_or_else(|| Error::Parse("scalar coefficient must be a string".into()))?
                            .parse()
                            .map_err(|e| Error::Parse(format!("scalar coefficient: {e}")))?;
                        terms.push((e, c));
                    }
                    Ok(GenPoly::from_terms(terms))
                };
                Scalar::reduce(dec("num")?, dec("den")?)
            }
            other => Err(Error::Parse(format!("scalar: unexpected {other}"))),
        }
    }
}

fn subst_poly(p: &GenPoly, assignments: &BTreeMap<Gen, Scalar>) -> Scalar {
    let mut acc = Scalar::zero();
    for (e, c) in p.terms() {
        let mut term = Scalar::Rational(BigRational::from_integer(c.clone()));
        for g in Gen::ALL {
            let k = e.0[g.index()];
            if k == 0 {
                continue;
            }
            let base = assignments.get(&g).cloned().unwrap_or_else(|| Scalar::gen(g));
            term = &term * &base.pow(k as i64).expect("nonnegative power");
        }
        acc = &acc + &term;
    }
    acc
}

fn fmt_assignments(a: &BTreeMap<Gen, BigRational>) -> String {
    a.iter()
        .map(|(g, v)| format!("{g}={}", rational_to_string(v)))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let err = |e: &dyn fmt::Display| Error::Parse(format!("rational {s:?}: {e}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|e| err(&e))?;
            let q: BigInt = q.trim().parse().map_err(|e| err(&e))?;
            if q.is_zero() {
                return Err(err(&"zero denominator"));
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|e| err(&e))?)),
    }
}

fn add_fractions(a: &Scalar, b: &Scalar, negate_b: bool) -> Scalar {
    if let (Scalar::Rational(x), Scalar::Rational(y)) = (a, b) {
        return Scalar::Rational(if negate_b { x - y } else { x + y });
    }
    let (an, ad) = a.parts();
    let (bn, bd) = b.parts();
    let bn = if negate_b { bn.neg() } else { bn };
    if ad == bd {
        return Scalar::reduce(an.add(&bn), ad).expect("nonzero denominator");
    }
    if ad.is_one() {
        // (an*bd + bn)/bd is already reduced since gcd(bn, bd) = 1.
        return Scalar::from_parts_unchecked(an.mul(&bd).add(&bn), bd);
    }
    if bd.is_one() {
        return Scalar::from_parts_unchecked(bn.mul(&ad).add(&an), ad);
    }
    // With g = gcd(ad, bd), the sum is (an*bd/g + bn*ad/g) / (ad*bd/g), and
    // only factors of g can cancel from it.
    let g = GenPoly::gcd(&ad, &bd);
    if g.is_one() {
        let num = an.mul(&bd).add(&bn.mul(&ad));
        if num.is_zero() {
            return Scalar::zero();
        }
        return Scalar::from_parts_unchecked(num, ad.mul(&bd));
    }
    let ad_g = ad.div_exact(&g).unwrap();
    let bd_g = bd.div_exact(&g).unwrap();
    let num = an.mul(&bd_g).add(&bn.mul(&ad_g));
    if num.is_zero() {
        return Scalar::zero();
    }
    let h = GenPoly::gcd(&num, &g);
    let den = ad_g.mul(&bd);
    if h.is_one() {
        return Scalar::from_parts_unchecked(num, den);
    }
    Scalar::reduce(num.div_exact(&h).unwrap(), den.div_exact(&h).unwrap()).expect("nonzero denominator")
}

fn mul_fractions(a: &Scalar, b: &Scalar) -> Scalar {
    if let (Scalar::Rational(x), Scalar::Rational(y)) = (a, b) {
        return Scalar::Rational(x * y);
    }
    if a.is_zero() || b.is_zero() {
        return Scalar::zero();
    }
    let (an, ad) = a.parts();
    let (bn, bd) = b.parts();
    // Cross-cancel; each of an/ad and bn/bd is already reduced.
    let g1 = GenPoly::gcd(&an, &bd);
    let g2 = GenPoly::gcd(&bn, &ad);
    let (an, bd) = if g1.is_one() {
        (an, bd)
    } else {
        (an.div_exact(&g1).unwrap(), bd.div_exact(&g1).unwrap())
    };
    let (bn, ad) = if g2.is_one() {
        (bn, ad)
    } else {
        (bn.div_exact(&g2).unwrap(), ad.div_exact(&g2).unwrap())
    };
    let num = an.mul(&bn);
    let den = ad.mul(&bd);
    if den.as_constant().is_some() {
        return Scalar::reduce(num, den).expect("nonzero denominator");
    }
    Scalar::from_parts_unchecked(num, den)
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        add_fractions(self, rhs, false)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        add_fractions(self, rhs, true)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        mul_fractions(self, rhs)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Symbolic(f) => Scalar::Symbolic(RatFunc {
                num: f.num.neg(),
                den: f.den.clone(),
            }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl From<i64> for Scalar {
    fn from(x: i64) -> Self {
        Scalar::int(x)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rational(r)
    }
}

/// `m^-1` written as a product of negative generator powers, if `m` is a
/// monomial with coefficient 1.
fn inverse_monomial(m: &GenPoly) -> Option<String> {
    if m.len() != 1 {
        return None;
    }
    let (e, c) = m.leading()?;
    if !c.is_one() {
        return None;
    }
    let parts: Vec<String> = Gen::ALL
        .iter()
        .filter(|g| e.0[g.index()] > 0)
        .map(|g| format!("{g}^-{}", e.0[g.index()]))
        .collect();
    Some(parts.join("*"))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => f.write_str(&rational_to_string(r)),
            Scalar::Symbolic(rf) => {
                let wrap = |p: &GenPoly| p.len() > 1;
                if rf.den.is_one() {
                    return write!(f, "{}", rf.num);
                }
                // A monic monomial denominator reads better as negative powers.
                if let Some(inv) = inverse_monomial(&rf.den) {
                    let num = rf.num.to_string();
                    return match num.as_str() {
                        "1" => f.write_str(&inv),
                        "-1" => write!(f, "-{inv}"),
                        _ if wrap(&rf.num) => write!(f, "({num})*{inv}"),
                        _ => write!(f, "{num}*{inv}"),
                    };
                }
                if wrap(&rf.num) {
                    write!(f, "({})", rf.num)?;
                } else {
                    write!(f, "{}", rf.num)?;
                }
                if wrap(&rf.den) {
                    write!(f, "/({})", rf.den)
                } else {
                    write!(f, "/{}", rf.den)
                }
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        Scalar::from_json(&v).map_err(serde::de::Error::custom)
    }
}
