//! The check catalog: each entry evaluates one identity exactly over every
//! instance in range and reports counterexamples.
//!
//! Identities that involve the extra parameter `a` are certified either with
//! `a` symbolic, or by sampling `k = b + 2` distinct admissible values of `a`,
//! where `b` bounds the `a`-degree of the identity after clearing
//! denominators.

mod checks;
mod support;

use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::interpolation::Interpolator;
use crate::scalars::{FieldConfig, Variant};

pub use support::{random_poly, AMode, Failure};

/// How a check was certified with respect to `a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "mode")]
pub enum Certification {
    /// The identity does not involve `a`.
    NoA,
    Symbolic,
    /// Every instance was checked at `a`-degree bound + 2 sampled values;
    /// `max_points` is the largest number used for one instance.
    Sampled { max_points: usize },
}

/// Parameters for one run of a check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckConfig {
    pub n: usize,
    pub deg: u32,
    /// Field for the `(q, t)` checks (variant `QT`).
    pub qt: FieldConfig,
    /// Field for the Jack checks (variant `R`).
    pub r: FieldConfig,
    /// Treatment of `a` in the `(q, t)` checks; Jack checks keep `a` symbolic.
    pub a_mode: AMode,
    pub seed: u64,
}

impl CheckConfig {
    /// Default fields: `q = 2, t = 3`, symbolic `r`, sampled `a`.
    pub fn new(n: usize, deg: u32, seed: u64) -> CheckConfig {
        CheckConfig {
            n,
            deg,
            qt: FieldConfig::default_for(Variant::QT),
            r: FieldConfig::default_for(Variant::R),
            a_mode: AMode::Sampled,
            seed,
        }
    }

    /// The standard small scale: degree 4 for `n ≤ 2`, degree 3 for `n = 3`.
    pub fn desk(n: usize, seed: u64) -> CheckConfig {
        CheckConfig::new(n, if n <= 2 { 4 } else { 3 }, seed)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::UsageError("n must be at least 1".into()));
        }
        if self.qt.variant() != Variant::QT || self.r.variant() != Variant::R {
            return Err(Error::UsageError(
                "check fields must be of variant qt and r respectively".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportConfig {
    pub n: usize,
    pub deg: u32,
    pub seed: u64,
    pub qt: String,
    pub r: String,
    pub a: String,
}

/// Result of running one catalog entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub config: ReportConfig,
    pub instances: usize,
    pub certification: Certification,
    pub failures: Vec<Failure>,
    /// Wall-clock time, only filled in when timings are requested so that
    /// reports stay reproducible byte for byte.
    pub elapsed_ms: Option<u64>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// What a check body returns before it is wrapped into a report.
#[derive(Debug, Default)]
pub(crate) struct Outcome {
    pub instances: usize,
    pub failures: Vec<Failure>,
    pub sampled_points: Option<usize>,
    pub symbolic_a: bool,
}

pub(crate) type CheckFn = fn(&support::Ctx) -> Result<Outcome>;

/// One entry of the catalog.
pub struct CheckSpec {
    pub id: &'static str,
    pub statement: &'static str,
    pub citation: &'static str,
    pub(crate) run: CheckFn,
}

impl std::fmt::Debug for CheckSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CheckSpec").field("id", &self.id).finish()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub statement: &'static str,
    pub citation: &'static str,
}

macro_rules! entry {
    ($id:literal, $stmt:literal, $cite:literal, $f:path) => {
        CheckSpec {
            id: $id,
            statement: $stmt,
            citation: $cite,
            run: $f,
        }
    };
}

static CATALOG: &[CheckSpec] = &[
    entry!("hecke-quadratic", "(H_i - t)(H_i + 1) f = 0", "Hecke relations", checks::hecke_quadratic),
    entry!("hecke-braid", "H_i H_{i+1} H_i = H_{i+1} H_i H_{i+1}, far H_i commute", "Hecke relations", checks::hecke_braid),
    entry!("sigma-braid", "sigma_i^2 = 1, braid relations, sigma(w) independent of the reduced word", "sigma representation", checks::sigma_braid),
    entry!("eigen-qt", "Xi_i G_alpha = bar(alpha)_i^{-1} G_alpha", "Cherednik eigen-equations", checks::eigen_qt),
    entry!("eigen-r", "tilde Xi_i G_alpha(x;r) = bar(alpha)_i(r) G_alpha(x;r)", "Jack Cherednik eigen-equations", checks::eigen_r),
    entry!("discr-qt", "Phi f(a v) and H_i f(a v) in terms of values at a-scaled spectral points", "Lemma discr", checks::discr_qt),
    entry!("discr-r", "tilde Phi f(a + v) and sigma_i f(a + v) in terms of values at shifted spectral points", "Lemma discr2", checks::discr_r),
    entry!("recur-oracle-qt", "recursive G_alpha equals the linear-solve G_alpha, along every recursion step", "Lemma recur", checks::recur_oracle_qt),
    entry!("recur-oracle-r", "recursive G_alpha(x;r) equals the linear-solve G_alpha(x;r), along every recursion step", "Lemma recur2", checks::recur_oracle_r),
    entry!("vanish-extra", "G_alpha(bar beta) = 0 for |beta| > |alpha| unless alpha is contained in beta", "extra vanishing", checks::vanish_extra),
    entry!("spectral-closed-form", "bar(alpha)_i = q^{alpha_i} t^{-k_i} and bar(alpha)(r)_i = alpha_i - r k_i", "spectral vectors", checks::spectral_closed_form),
    entry!("eval-qt", "d_alpha G_alpha(a tau) = e_alpha phi_alpha(a)", "Theorem eval", checks::eval_qt),
    entry!("eval-r", "d_alpha(r) G_alpha(a + rho; r) = e_alpha(r) phi_alpha(a; r)", "Theorem eval2", checks::eval_r),
    entry!("inva", "d_{w alpha} G_{w alpha}(a tau) = d_alpha G_alpha(a tau)", "Lemma inva", checks::inva),
    entry!("zerosp", "d_alpha G_alpha(0) = e_alpha phi_alpha(0)", "Lemma zerosp", checks::zerosp),
    entry!("derecur", "ratios of d, e, phi under alpha -> alpha^# and s_i; S_n-invariance of e, phi", "Lemma derecur", checks::derecur),
    entry!("derecur2", "Jack ratios of d, e under alpha -> alpha^# and s_i; S_n-invariance of e, phi", "Lemma derecur2", checks::derecur2),
    entry!("oko-qt", "O_alpha(bar beta^{-1}) G_beta(a tau) = G_beta(a tilde alpha), including |beta| = |alpha| + 1, |alpha| + 2", "Theorem Oko", checks::oko_qt),
    entry!("oko-r", "O_alpha(bar beta(r)) G_beta(a + rho) = G_beta(a + tilde alpha(r)), including |beta| = |alpha| + 1, |alpha| + 2", "Theorem Oko2", checks::oko_r),
    entry!("binom-qt", "G_alpha(a x)/G_alpha(a tau) = sum a^{|beta|} [alpha over beta]_{1/q,1/t} G'_beta(x)/G_beta(a tau)", "Theorem binom", checks::binom_qt),
    entry!("binom-r", "G_alpha(a + x)/G_alpha(a + rho) = sum [alpha over beta]_r G'_beta(x)/G_beta(a + rho)", "Theorem binom2", checks::binom_r),
    entry!("binom-sym-r", "R_lambda(a + x)/R_lambda(a + rho) = sum (lambda over mu)_r R'_mu(x)/R_mu(a + rho)", "Theorem binom3", checks::binom_sym_r),
    entry!("cor-first", "G_alpha(x)/G_alpha(0) = sum [alpha over beta]_{1/q,1/t} E_beta(x)/G_beta(0)", "Corollary first", checks::cor_first),
    entry!("cor-gprime", "E_alpha(x)/E_alpha(tau) = sum [alpha over beta]_{1/q,1/t} G'_beta(x)/E_beta(tau)", "Corollary Gprime", checks::cor_gprime),
    entry!("cor-las", "E_alpha(1 + x)/E_alpha(1) = sum [alpha over beta]_r E_beta(x)/E_beta(1)", "Corollary Las", checks::cor_las),
    entry!("cor-plus", "sigma(w_o) G_alpha(a + x)/G_alpha(a + rho) = sum [alpha over beta]_r w_o G+_beta(x)/G_beta(a + rho)", "Corollary plus", checks::cor_plus),
    entry!("cor-rel", "sum over beta^+ = mu of [alpha over beta]_r = (lambda over mu)_r for alpha^+ = lambda", "Corollary rel", checks::cor_rel),
    entry!("relate", "G'_alpha(x;r) = (-1)^{|alpha|} sigma(w_o) w_o G_alpha(-x - (n-1)r; r)", "Theorem relate", checks::relate),
    entry!("relate2", "R'_lambda(x;r) = (-1)^{|lambda|} R_lambda(-x - (n-1)r; r)", "Theorem relate2", checks::relate2),
    entry!("dom", "w_{-w_o beta} = w_o w_beta w_o and -w_o tilde beta = bar beta + (n-1)r", "Lemma dom", checks::dom),
    entry!("sym-lemma", "symmetrizer output is symmetric and S sigma_i = S", "Lemma sym", checks::sym_lemma),
    entry!("symm-lemma", "S G_alpha(a + x)/G_alpha(a + rho) = R_lambda(a + x)/R_lambda(a + rho) and S G'_alpha/G_alpha(a + rho) = R'_lambda/R_lambda(a + rho)", "Lemma symm", checks::symm_lemma),
    entry!("sym-binomial-OO", "P_lambda(1 + x)/P_lambda(1) = sum (lambda over mu)_r P_mu(x)/P_mu(1), P = top part of R", "symmetric binomial formula", checks::sym_binomial_oo),
    entry!("jack-eval-one", "d_alpha(r) E_alpha(1; r) = e_alpha(r)", "Jack evaluation at 1", checks::jack_eval_one),
    entry!("binom-sum-support", "[alpha over beta] = 0 whenever beta is not contained in alpha", "extra vanishing and Theorem binom", checks::binom_sum_support),
];

pub fn catalog() -> &'static [CheckSpec] {
    CATALOG
}

/// Catalog entries whose id contains `filter` (all entries for `None`).
pub fn list(filter: Option<&str>) -> Vec<CatalogEntry> {
    CATALOG
        .iter()
        .filter(|c| filter.is_none_or(|f| c.id.contains(f)))
        .map(|c| CatalogEntry {
            id: c.id,
            statement: c.statement,
            citation: c.citation,
        })
        .collect()
}

pub fn find(id: &str) -> Result<&'static CheckSpec> {
    CATALOG
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UsageError(format!("unknown check id {id:?}")))
}

/// Run one catalog entry. Collisions are returned as errors naming the instance.
pub fn run_check(
    id: &str,
    cfg: &CheckConfig,
    ip: &Interpolator,
    timings: bool,
) -> Result<CheckReport> {
    let spec = find(id)?;
    cfg.validate()?;
    let start = Instant::now();
    let ctx = support::Ctx::new(spec.id, cfg, ip);
    ctx.preflight()?;
    let out = (spec.run)(&ctx)?;
    let certification = match (out.sampled_points, out.symbolic_a) {
        (Some(k), _) => Certification::Sampled { max_points: k },
        (None, true) => Certification::Symbolic,
        (None, false) => Certification::NoA,
    };
    Ok(CheckReport {
        id: spec.id.to_string(),
        config: ReportConfig {
            n: cfg.n,
            deg: cfg.deg,
            seed: cfg.seed,
            qt: cfg.qt.fingerprint(Variant::QT.gens()),
            r: cfg.r.fingerprint(Variant::R.gens()),
            a: match cfg.a_mode {
                AMode::Sampled => "sampled".into(),
                AMode::Symbolic => "symbolic".into(),
            },
        },
        instances: out.instances,
        certification,
        failures: out.failures,
        elapsed_ms: timings.then(|| start.elapsed().as_millis() as u64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_ids_unique() {
        let mut ids: Vec<&str> = CATALOG.iter().map(|c| c.id).collect();
        let len = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), len);
        assert!(len >= 28);
    }

    #[test]
    fn filter_binom() {
        let ids: Vec<&str> = list(Some("binom")).iter().map(|c| c.id).collect();
        assert_eq!(
            ids,
            ["binom-qt", "binom-r", "binom-sym-r", "sym-binomial-OO", "binom-sum-support"]
        );
    }

    #[test]
    fn unknown_id() {
        let ip = Interpolator::new();
        let e = run_check("nonsense", &CheckConfig::desk(1, 1), &ip, false).unwrap_err();
        assert!(matches!(e, Error::UsageError(_)));
    }
}
