use std::fmt::Display;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use super::{CheckConfig, Outcome};
use crate::error::{Error, Result};
use crate::interpolation::{preflight, Interpolator};
use crate::polyring::{Exponent, LaurentPoly};
use crate::scalars::{FieldConfig, Gen, Scalar, Variant};
use crate::shapes::{enumerate_compositions, Composition};

/// Treatment of `a` in the `(q, t)` checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AMode {
    Sampled,
    Symbolic,
}

/// A counterexample: the instance and the two sides that differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub lhs: String,
    pub rhs: String,
}

/// A pseudo-random polynomial with small integer coefficients and at most
/// `terms` monomials of degree `≤ d`.
pub fn random_poly(n: usize, d: u32, terms: usize, rng: &mut impl Rng) -> LaurentPoly {
    let monos = enumerate_compositions(n, d);
    let mut f = LaurentPoly::zero(n);
    for _ in 0..terms {
        let m = &monos[rng.gen_range(0..monos.len())];
        let mut c = rng.gen_range(-5i64..=5);
        if c == 0 {
            c = 1;
        }
        f = f.add(&LaurentPoly::monomial(Exponent::from(m.parts()), Scalar::int(c)));
    }
    f
}

/// Failures found for one instance, plus how `a` was handled there.
#[derive(Debug, Default)]
pub(crate) struct Found {
    pub failures: Vec<Failure>,
    pub points: Option<usize>,
    pub symbolic: bool,
}

impl Found {
    pub fn poly(&mut self, instance: impl Display, lhs: &LaurentPoly, rhs: &LaurentPoly) {
        if lhs != rhs {
            self.failures.push(Failure {
                instance: instance.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    pub fn scalar(&mut self, instance: impl Display, lhs: &Scalar, rhs: &Scalar) {
        if lhs != rhs {
            self.failures.push(Failure {
                instance: instance.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    pub fn fact(&mut self, instance: impl Display, ok: bool, lhs: impl Display, rhs: impl Display) {
        if !ok {
            self.failures.push(Failure {
                instance: instance.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    pub fn merge(&mut self, other: Found) {
        self.failures.extend(other.failures);
        self.symbolic |= other.symbolic;
        self.points = match (self.points, other.points) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
    }
}

/// State shared by the instances of one check.
pub(crate) struct Ctx<'a> {
    pub id: &'static str,
    pub cfg: &'a CheckConfig,
    pub ip: &'a Interpolator,
}

impl<'a> Ctx<'a> {
    pub fn new(id: &'static str, cfg: &'a CheckConfig, ip: &'a Interpolator) -> Ctx<'a> {
        Ctx { id, cfg, ip }
    }

    pub fn n(&self) -> usize {
        self.cfg.n
    }

    pub fn deg(&self) -> u32 {
        self.cfg.deg
    }

    pub fn qt(&self) -> &FieldConfig {
        &self.cfg.qt
    }

    pub fn r(&self) -> &FieldConfig {
        &self.cfg.r
    }

    /// `(q, t)` field with symbolic `a`.
    pub fn qta(&self) -> FieldConfig {
        self.cfg.qt.with_variant(Variant::QTA)
    }

    /// Jack field with symbolic `a`.
    pub fn ra(&self) -> FieldConfig {
        self.cfg.r.with_variant(Variant::RA)
    }

    /// Compositions of length `n` with `|α| ≤ deg`.
    pub fn comps(&self) -> Vec<Composition> {
        enumerate_compositions(self.n(), self.deg())
    }

    /// Reject specializations under which interpolation nodes coincide.
    pub fn preflight(&self) -> Result<()> {
        let span = self.deg() + 2;
        if self.cfg.qt.any_specialized() {
            preflight(self.n(), span, &self.cfg.qt)?;
        }
        if self.cfg.r.any_specialized() {
            preflight(self.n(), span, &self.cfg.r)?;
        }
        Ok(())
    }

    /// A generator seeded by the check id, the run seed and `salt`.
    pub fn rng(&self, salt: &str) -> ChaCha8Rng {
        let mut h = Sha256::new();
        h.update(self.id.as_bytes());
        h.update(b"/");
        h.update(salt.as_bytes());
        h.update(self.cfg.seed.to_le_bytes());
        let digest = h.finalize();
        let mut seed = [0u8; 32];
        seed.copy_from_slice(&digest);
        ChaCha8Rng::from_seed(seed)
    }

    /// A few random polynomials of degree `≤ deg`.
    pub fn random_polys(&self, count: usize) -> Vec<LaurentPoly> {
        let mut rng = self.rng("polys");
        (0..count)
            .map(|_| random_poly(self.n(), self.deg(), 4, &mut rng))
            .collect()
    }

    /// Run `body` once per instance (in parallel) and merge in input order.
    pub fn each<T: Sync>(&self, items: &[T], body: impl Fn(&T) -> Result<Found> + Sync) -> Result<Outcome> {
        let results: Vec<Result<Found>> = items.par_iter().map(&body).collect();
        let mut total = Found::default();
        for r in results {
            total.merge(r?);
        }
        Ok(Outcome {
            instances: items.len(),
            failures: total.failures,
            sampled_points: total.points,
            symbolic_a: total.symbolic,
        })
    }

    /// Run `body` for each `a`-field needed to certify an instance whose
    /// cleared identity has `a`-degree at most `bound`. In symbolic mode
    /// `body` runs once with `a` symbolic; otherwise at `bound + 2` distinct
    /// seeded values accepted by `admissible`.
    pub fn over_a(
        &self,
        base: &FieldConfig,
        instance: &str,
        bound: usize,
        admissible: impl Fn(&Scalar) -> Result<bool>,
        mut body: impl FnMut(&FieldConfig, &mut Found) -> Result<()>,
    ) -> Result<Found> {
        let mut found = Found::default();
        // Jack fields always keep `a` symbolic; `(q, t)` fields follow the mode.
        if !base.variant().is_qt() || self.cfg.a_mode == AMode::Symbolic {
            body(base, &mut found)?;
            found.symbolic = true;
            return Ok(found);
        }
        let k = bound + 2;
        let mut rng = self.rng(instance);
        let mut used: Vec<BigRational> = Vec::with_capacity(k);
        let mut attempts = 0;
        while used.len() < k {
            attempts += 1;
            if attempts > 50 * k + 100 {
                return Err(Error::SpecializationCollision(format!(
                    "{instance}: could not find {k} admissible values of a"
                )));
            }
            let num: i64 = rng.gen_range(-400..=400);
            let den: i64 = rng.gen_range(1..=9);
            let v = BigRational::new(BigInt::from(num), BigInt::from(den));
            if used.contains(&v) || !admissible(&Scalar::rational(v.clone()))? {
                continue;
            }
            used.push(v.clone());
            let cfg = FieldConfig::with_values(
                base.variant(),
                base.values()
                    .iter()
                    .map(|(g, x)| (*g, x.clone()))
                    .chain([(Gen::A, v)]),
            )?;
            let cfg = if base.is_inverted() { cfg.inverted() } else { cfg };
            body(&cfg, &mut found)?;
        }
        found.points = Some(k);
        Ok(found)
    }
}

/// Clear denominators in `lhs/lhs_den = Σ c_k p_k / den_k` by multiplying
/// through by the product of all denominators, and return both sides.
pub(crate) fn cleared(
    lhs: &LaurentPoly,
    lhs_den: &Scalar,
    terms: &[(Scalar, LaurentPoly, Scalar)],
) -> Result<(LaurentPoly, LaurentPoly)> {
    let dens: Vec<&Scalar> = std::iter::once(lhs_den)
        .chain(terms.iter().map(|t| &t.2))
        .collect();
    if dens.iter().any(|d| d.is_zero()) {
        return Err(Error::DivisionByZero);
    }
    // others[k] = Π_{j ≠ k} dens[j]
    let m = dens.len();
    let mut prefix = vec![Scalar::one(); m + 1];
    for j in 0..m {
        prefix[j + 1] = &prefix[j] * dens[j];
    }
    let mut suffix = vec![Scalar::one(); m + 1];
    for j in (0..m).rev() {
        suffix[j] = &suffix[j + 1] * dens[j];
    }
    let others = |k: usize| &prefix[k] * &suffix[k + 1];
    let left = lhs.scale(&others(0));
    let mut right = LaurentPoly::zero(lhs.n());
    for (k, (c, p, _)) in terms.iter().enumerate() {
        right = right.add(&p.scale(&(c * &others(k + 1))));
    }
    Ok((left, right))
}

pub(crate) fn sign(k: u32) -> Scalar {
    Scalar::int(if k % 2 == 0 { 1 } else { -1 })
}

pub(crate) fn ones(n: usize) -> Vec<Scalar> {
    vec![Scalar::one(); n]
}

pub(crate) fn zeros(n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); n]
}
