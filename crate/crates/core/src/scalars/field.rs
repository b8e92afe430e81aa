use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::genpoly::Gen;
use super::scalar::{rational_to_string, Scalar};
use crate::error::{Error, Result};

/// Which parameter field the computation lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    /// `Q(q, t)`
    QT,
    /// `Q(r)`
    R,
    /// `Q(q, t, a)`
    QTA,
    /// `Q(r, a)`
    RA,
}

impl Variant {
    pub fn gens(self) -> &'static [Gen] {
        match self {
            Variant::QT => &[Gen::Q, Gen::T],
            Variant::R => &[Gen::R],
            Variant::QTA => &[Gen::Q, Gen::T, Gen::A],
            Variant::RA => &[Gen::R, Gen::A],
        }
    }

    pub fn is_qt(self) -> bool {
        matches!(self, Variant::QT | Variant::QTA)
    }

    /// The same family of parameters with `a` adjoined.
    pub fn with_a(self) -> Variant {
        match self {
            Variant::QT | Variant::QTA => Variant::QTA,
            Variant::R | Variant::RA => Variant::RA,
        }
    }

    /// The same family of parameters without `a`.
    pub fn without_a(self) -> Variant {
        match self {
            Variant::QT | Variant::QTA => Variant::QT,
            Variant::R | Variant::RA => Variant::R,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mode {
    Symbolic,
    Specialized,
    /// Some generators specialized, others symbolic.
    Mixed,
}

/// Choice of coefficient field: which generators exist, which of them carry a
/// fixed rational value, and whether `q, t` are replaced by their reciprocals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldConfig {
    variant: Variant,
    #[serde(with = "assignment_serde")]
    values: BTreeMap<Gen, BigRational>,
    inverted: bool,
}

impl FieldConfig {
    pub fn symbolic(variant: Variant) -> FieldConfig {
        FieldConfig {
            variant,
            values: BTreeMap::new(),
            inverted: false,
        }
    }

    /// Config with the given generators fixed; generators of the variant that are
    /// not assigned stay symbolic.
    pub fn with_values(
        variant: Variant,
        values: impl IntoIterator<Item = (Gen, BigRational)>,
    ) -> Result<FieldConfig> {
        let mut cfg = FieldConfig::symbolic(variant);
        for (g, v) in values {
            cfg = cfg.assign(g, v)?;
        }
        Ok(cfg)
    }

    /// Default specialization `q = 2, t = 3` for the `(q, t)` variants; the
    /// Jack variants stay symbolic.
    pub fn default_for(variant: Variant) -> FieldConfig {
        if variant.is_qt() {
            FieldConfig::with_values(
                variant,
                [(Gen::Q, BigRational::from_integer(2.into())), (Gen::T, BigRational::from_integer(3.into()))],
            )
            .expect("2 and 3 are admissible")
        } else {
            FieldConfig::symbolic(variant)
        }
    }

    pub fn assign(mut self, g: Gen, v: BigRational) -> Result<FieldConfig> {
        if !self.variant.gens().contains(&g) {
            return Err(Error::UsageError(format!(
                "generator {g} is not part of the {:?} field",
                self.variant
            )));
        }
        if matches!(g, Gen::Q | Gen::T) {
            let one = BigRational::one();
            if v.is_zero() || v.abs() == one {
                let witness = match g {
                    Gen::Q => "the spectral points of (1) and (0) coincide for n = 1",
                    _ => "the spectral coordinates t^0 and t^-1 of (0, 0) coincide",
                };
                return Err(Error::SpecializationCollision(format!(
                    "{g}={} is degenerate: {witness}",
                    rational_to_string(&v)
                )));
            }
        }
        self.values.insert(g, v);
        Ok(self)
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn values(&self) -> &BTreeMap<Gen, BigRational> {
        &self.values
    }

    pub fn is_inverted(&self) -> bool {
        self.inverted
    }

    pub fn mode(&self) -> Mode {
        let gens = self.variant.gens();
        let fixed = gens.iter().filter(|g| self.values.contains_key(g)).count();
        if fixed == 0 {
            Mode::Symbolic
        } else if fixed == gens.len() {
            Mode::Specialized
        } else {
            Mode::Mixed
        }
    }

    /// True if any generator carries a fixed value.
    pub fn any_specialized(&self) -> bool {
        !self.values.is_empty()
    }

    /// The same field with `q -> 1/q, t -> 1/t` toggled.
    pub fn inverted(&self) -> FieldConfig {
        let mut c = self.clone();
        c.inverted = !c.inverted;
        c
    }

    pub fn with_variant(&self, variant: Variant) -> FieldConfig {
        let values = self
            .values
            .iter()
            .filter(|(g, _)| variant.gens().contains(g))
            .map(|(g, v)| (*g, v.clone()))
            .collect();
        FieldConfig {
            variant,
            values,
            inverted: self.inverted,
        }
    }

    /// The raw value of a generator, before any inversion.
    fn raw(&self, g: Gen) -> Scalar {
        match self.values.get(&g) {
            Some(v) => Scalar::Rational(v.clone()),
            None => Scalar::gen(g),
        }
    }

    /// The value used for generator `g` in this field.
    pub fn param(&self, g: Gen) -> Scalar {
        let v = self.raw(g);
        if self.inverted && matches!(g, Gen::Q | Gen::T) {
            v.inv().expect("q and t are nonzero")
        } else {
            v
        }
    }

    pub fn q(&self) -> Scalar {
        self.param(Gen::Q)
    }

    pub fn t(&self) -> Scalar {
        self.param(Gen::T)
    }

    pub fn r(&self) -> Scalar {
        self.param(Gen::R)
    }

    pub fn a(&self) -> Scalar {
        self.param(Gen::A)
    }

    /// Stable text fingerprint of the parameters relevant to `gens`, used for
    /// cache keys and reports.
    pub fn fingerprint(&self, gens: &[Gen]) -> String {
        let mut parts: Vec<String> = gens
            .iter()
            .map(|g| match self.values.get(g) {
                Some(v) => format!("{g}={}", rational_to_string(v)),
                None => format!("{g}=sym"),
            })
            .collect();
        if self.inverted && gens.iter().any(|g| matches!(g, Gen::Q | Gen::T)) {
            parts.push("inv".into());
        }
        parts.join(",")
    }
}

impl fmt::Display for FieldConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}]", self.variant, self.fingerprint(self.variant.gens()))
    }
}

mod assignment_serde {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        v: &BTreeMap<Gen, BigRational>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let m: BTreeMap<Gen, String> = v.iter().map(|(g, x)| (*g, rational_to_string(x))).collect();
        m.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<BTreeMap<Gen, BigRational>, D::Error> {
        let m = BTreeMap::<Gen, String>::deserialize(d)?;
        m.into_iter()
            .map(|(g, s)| {
                crate::scalars::parse_rational(&s)
                    .map(|r| (g, r))
                    .map_err(serde::de::Error::custom)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn degenerate_q_rejected() {
        let e = FieldConfig::with_values(Variant::QT, [(Gen::Q, rat(1, 1))]).unwrap_err();
        assert!(matches!(e, Error::SpecializationCollision(_)));
        assert!(FieldConfig::with_values(Variant::QT, [(Gen::T, rat(-1, 1))]).is_err());
        assert!(FieldConfig::with_values(Variant::QT, [(Gen::Q, rat(0, 1))]).is_err());
    }

    #[test]
    fn inverted_params() {
        let cfg = FieldConfig::default_for(Variant::QT).inverted();
        assert_eq!(cfg.q(), Scalar::ratio(1, 2).unwrap());
        assert_eq!(cfg.t(), Scalar::ratio(1, 3).unwrap());
        let sym = FieldConfig::symbolic(Variant::QT).inverted();
        assert_eq!(sym.q(), Scalar::gen(Gen::Q).inv().unwrap());
    }

    #[test]
    fn modes() {
        assert_eq!(FieldConfig::symbolic(Variant::RA).mode(), Mode::Symbolic);
        assert_eq!(FieldConfig::default_for(Variant::QT).mode(), Mode::Specialized);
        assert_eq!(FieldConfig::default_for(Variant::QTA).mode(), Mode::Mixed);
        assert!(FieldConfig::with_values(Variant::R, [(Gen::Q, rat(2, 1))]).is_err());
    }
}
