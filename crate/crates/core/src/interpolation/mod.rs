//! Constructors for the interpolation polynomials and the scalars built from
//! them.
//!
//! `G_α` is built by the raising/Hecke recursion and independently by an exact
//! linear solve of its defining vanishing conditions. The remaining families
//! (`E`, `G′`, `G⁺`, `R`, `R′`, `O`) are derived from `G` or solved directly.

mod cache;
mod closed;

use std::sync::Arc;

pub use cache::{Cache, CacheStats, Family, FamilyKey, Kind};
pub use closed::{closed_d, closed_e, closed_phi};

use crate::error::{Error, Result};
use crate::linalg;
use crate::operators::{hecke, phi_qt, phi_r, sigma_op};
use crate::polyring::{AffineMap, Exponent, LaurentPoly};
use crate::scalars::{FieldConfig, Gen, Scalar};
use crate::shapes::{
    enumerate_compositions, enumerate_partitions, spectral, tau, rho, tilde, Composition,
    IntVector,
};

/// One step of the recursion producing `G_α` from a smaller polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    /// `G_α` from `G_{α^#}` by `Φ` (requires `α_n > 0`).
    Raise,
    /// `G_α` from `G_{s_i α}` by the Hecke step at one-based `i` (requires `α_i > α_{i+1}`).
    Hecke(usize),
}

/// The steps that may produce `G_α`.
pub fn valid_steps(alpha: &Composition) -> Vec<Step> {
    let p = alpha.parts();
    let mut out = Vec::new();
    if p[p.len() - 1] > 0 {
        out.push(Step::Raise);
    }
    for i in 0..p.len() - 1 {
        if p[i] > p[i + 1] {
            out.push(Step::Hecke(i + 1));
        }
    }
    out
}

/// The step used by the memoized construction: raise if possible, otherwise
/// the largest descent.
pub fn default_step(alpha: &Composition) -> Option<Step> {
    let steps = valid_steps(alpha);
    if steps.first() == Some(&Step::Raise) {
        return Some(Step::Raise);
    }
    steps.last().copied()
}

pub fn kind(cfg: &FieldConfig) -> Kind {
    if cfg.variant().is_qt() {
        Kind::Qt
    } else {
        Kind::R
    }
}

fn param_gens(cfg: &FieldConfig, with_a: bool) -> Vec<Gen> {
    let mut g = match kind(cfg) {
        Kind::Qt => vec![Gen::Q, Gen::T],
        Kind::R => vec![Gen::R],
    };
    if with_a {
        g.push(Gen::A);
    }
    g
}

fn has_a(cfg: &FieldConfig) -> bool {
    cfg.variant().gens().contains(&Gen::A)
}

/// The monomial symmetric polynomial `m_μ` in `μ.n()` variables.
pub fn monomial_symmetric(mu: &Composition) -> LaurentPoly {
    LaurentPoly::from_terms(
        mu.n(),
        mu.orbit()
            .into_iter()
            .map(|c| (Exponent::from(c.parts()), Scalar::one())),
    )
}

fn monomial(c: &Composition) -> LaurentPoly {
    LaurentPoly::monomial(Exponent::from(c.parts()), Scalar::one())
}

/// Fail with a collision naming the first pair of equal points.
pub fn ensure_distinct(points: &[(String, Vec<Scalar>)]) -> Result<()> {
    for (i, (li, pi)) in points.iter().enumerate() {
        for (lj, pj) in &points[..i] {
            if pi == pj {
                return Err(Error::SpecializationCollision(format!(
                    "interpolation points of {lj} and {li} coincide"
                )));
            }
        }
    }
    Ok(())
}

/// Check that the spectral points of all compositions of size `≤ d` are
/// pairwise distinct, and likewise their tilde points.
pub fn preflight(n: usize, d: u32, cfg: &FieldConfig) -> Result<()> {
    let comps = enumerate_compositions(n, d);
    let bars: Vec<(String, Vec<Scalar>)> = comps
        .iter()
        .map(|b| (b.to_string(), spectral(&b.to_int(), cfg).coords))
        .collect();
    ensure_distinct(&bars)?;
    let tildes: Vec<(String, Vec<Scalar>)> = comps
        .iter()
        .map(|b| (format!("tilde {b}"), tilde(b, cfg).coords))
        .collect();
    ensure_distinct(&tildes)
}

/// Find `f = fixed + Σ c_j basis_j` with `f(p_k) = v_k` for every condition.
pub fn solve_interpolation(
    fixed: &LaurentPoly,
    basis: &[LaurentPoly],
    conditions: &[(Vec<Scalar>, Scalar)],
) -> Result<LaurentPoly> {
    if basis.len() != conditions.len() {
        return Err(Error::DimensionError(format!(
            "{} unknowns against {} conditions",
            basis.len(),
            conditions.len()
        )));
    }
    let mut m = Vec::with_capacity(conditions.len());
    let mut b = Vec::with_capacity(conditions.len());
    for (p, v) in conditions {
        let row = basis
            .iter()
            .map(|f| f.evaluate(p))
            .collect::<Result<Vec<_>>>()?;
        m.push(row);
        b.push(v - &fixed.evaluate(p)?);
    }
    let coeffs = linalg::solve(m, b)?;
    Ok(basis
        .iter()
        .zip(&coeffs)
        .fold(fixed.clone(), |acc, (f, c)| acc.add(&f.scale(c))))
}

/// Builds and memoizes the polynomial families for any field configuration.
#[derive(Debug, Clone, Default)]
pub struct Interpolator {
    cache: Arc<Cache>,
}

impl Interpolator {
    pub fn new() -> Interpolator {
        Interpolator::default()
    }

    pub fn with_cache(cache: Arc<Cache>) -> Interpolator {
        Interpolator { cache }
    }

    pub fn cache(&self) -> &Arc<Cache> {
        &self.cache
    }

    fn key(&self, family: Family, idx: &Composition, cfg: &FieldConfig, with_a: bool) -> FamilyKey {
        FamilyKey {
            family,
            variant: kind(cfg),
            index: idx.parts().to_vec(),
            params: cfg.fingerprint(&param_gens(cfg, with_a)),
        }
    }

    /// `G_α`, built by the recursion and memoized.
    pub fn g(&self, alpha: &Composition, cfg: &FieldConfig) -> Result<Arc<LaurentPoly>> {
        let Some(step) = default_step(alpha) else {
            return Ok(Arc::new(LaurentPoly::one(alpha.n())));
        };
        let key = self.key(Family::G, alpha, cfg, false);
        self.cache
            .get_or_try_insert(key, || self.g_via(alpha, step, cfg))
    }

    /// `G_α` from its predecessor along a chosen step.
    pub fn g_via(&self, alpha: &Composition, step: Step, cfg: &FieldConfig) -> Result<LaurentPoly> {
        let ctx = |e: Error| e.in_context(cfg.any_specialized(), format!("G_{alpha}"));
        if !valid_steps(alpha).contains(&step) {
            return Err(Error::UsageError(format!("{step:?} does not produce G_{alpha}")));
        }
        match step {
            Step::Raise => {
                let prev_idx = alpha.sharp().expect("raise needs a positive last entry");
                let prev = self.g(&prev_idx, cfg)?;
                match kind(cfg) {
                    Kind::Qt => {
                        let last = alpha.parts()[alpha.n() - 1] as i64;
                        let c = cfg.q().pow(last - 1).map_err(ctx)?;
                        Ok(phi_qt(&prev, cfg).map_err(ctx)?.scale(&c))
                    }
                    Kind::R => phi_r(&prev, cfg).map_err(ctx),
                }
            }
            Step::Hecke(i) => {
                let prev = self.g(&alpha.swapped(i), cfg)?;
                let bar = spectral(&alpha.to_int(), cfg).coords;
                let collision = || {
                    Error::SpecializationCollision(format!(
                        "G_{alpha}: spectral coordinates {i} and {} coincide",
                        i + 1
                    ))
                };
                match kind(cfg) {
                    Kind::Qt => {
                        let d = &Scalar::one() - &bar[i - 1].checked_div(&bar[i]).map_err(ctx)?;
                        if d.is_zero() {
                            return Err(collision());
                        }
                        let c = (&Scalar::one() - &cfg.t()).checked_div(&d).map_err(ctx)?;
                        Ok(hecke(i, &prev, cfg).map_err(ctx)?.add(&prev.scale(&c)))
                    }
                    Kind::R => {
                        let d = &bar[i - 1] - &bar[i];
                        if d.is_zero() {
                            return Err(collision());
                        }
                        let c = cfg.r().checked_div(&d).map_err(ctx)?;
                        Ok(sigma_op(i, &prev, cfg).map_err(ctx)?.add(&prev.scale(&c)))
                    }
                }
            }
        }
    }

    /// `G_α` by solving its defining conditions directly; never cached.
    pub fn g_oracle(&self, alpha: &Composition, cfg: &FieldConfig) -> Result<LaurentPoly> {
        let n = alpha.n();
        let others: Vec<Composition> = enumerate_compositions(n, alpha.size())
            .into_iter()
            .filter(|b| b != alpha)
            .collect();
        let basis: Vec<LaurentPoly> = others.iter().map(monomial).collect();
        let conds: Vec<(Vec<Scalar>, Scalar)> = others
            .iter()
            .map(|b| (spectral(&b.to_int(), cfg).coords, Scalar::zero()))
            .collect();
        solve_interpolation(&monomial(alpha), &basis, &conds)
            .map_err(|e| e.in_context(cfg.any_specialized(), format!("G_{alpha} (linear solve)")))
    }

    /// `E_α`: the top homogeneous part of `G_α`.
    pub fn e(&self, alpha: &Composition, cfg: &FieldConfig) -> Result<LaurentPoly> {
        self.g(alpha, cfg)?.top_part(alpha.size() as i64)
    }

    /// `G′_α`: top part `E_α`, vanishing at `β̃` for `|β| < |α|`.
    pub fn gprime(&self, alpha: &Composition, cfg: &FieldConfig) -> Result<Arc<LaurentPoly>> {
        if alpha.is_zero() {
            return Ok(Arc::new(LaurentPoly::one(alpha.n())));
        }
        let key = self.key(Family::Gprime, alpha, cfg, false);
        self.cache.get_or_try_insert(key, || {
            let top = self.e(alpha, cfg)?;
            let lower = enumerate_compositions(alpha.n(), alpha.size() - 1);
            let basis: Vec<LaurentPoly> = lower.iter().map(monomial).collect();
            let conds: Vec<(Vec<Scalar>, Scalar)> = lower
                .iter()
                .map(|b| (tilde(b, cfg).coords, Scalar::zero()))
                .collect();
            solve_interpolation(&top, &basis, &conds)
                .map_err(|e| e.in_context(cfg.any_specialized(), format!("G'_{alpha}")))
        })
    }

    /// `G⁺_α(x; r) = (-1)^{|α|} G_α(-x - (n-1)r; r)`.
    pub fn gplus(&self, alpha: &Composition, cfg: &FieldConfig) -> Result<LaurentPoly> {
        if kind(cfg) != Kind::R {
            return Err(Error::UsageError("G+ is defined for Jack parameters only".into()));
        }
        let g = self.g(alpha, cfg)?;
        let sign = if alpha.size() % 2 == 0 { 1 } else { -1 };
        Ok(reflect(&g, cfg)?.scale(&Scalar::int(sign)))
    }

    /// `R_λ`: symmetric, monic at `m_λ`, vanishing at `μ̄` for partitions `μ ≠ λ`, `|μ| ≤ |λ|`.
    pub fn r_sym(&self, lambda: &Composition, cfg: &FieldConfig) -> Result<Arc<LaurentPoly>> {
        require_partition(lambda)?;
        if lambda.is_zero() {
            return Ok(Arc::new(LaurentPoly::one(lambda.n())));
        }
        let key = self.key(Family::R, lambda, cfg, false);
        self.cache.get_or_try_insert(key, || {
            let others: Vec<Composition> = enumerate_partitions(lambda.n(), lambda.size())
                .into_iter()
                .filter(|m| m != lambda)
                .collect();
            let basis: Vec<LaurentPoly> = others.iter().map(monomial_symmetric).collect();
            let conds: Vec<(Vec<Scalar>, Scalar)> = others
                .iter()
                .map(|m| (spectral(&m.to_int(), cfg).coords, Scalar::zero()))
                .collect();
            solve_interpolation(&monomial_symmetric(lambda), &basis, &conds)
                .map_err(|e| e.in_context(cfg.any_specialized(), format!("R_{lambda}")))
        })
    }

    /// `R′_λ`: symmetric, same top part as `R_λ`, vanishing at `μ̃` for `|μ| < |λ|`.
    pub fn rprime(&self, lambda: &Composition, cfg: &FieldConfig) -> Result<Arc<LaurentPoly>> {
        require_partition(lambda)?;
        if lambda.is_zero() {
            return Ok(Arc::new(LaurentPoly::one(lambda.n())));
        }
        let key = self.key(Family::Rprime, lambda, cfg, false);
        self.cache.get_or_try_insert(key, || {
            let top = self.r_sym(lambda, cfg)?.top_part(lambda.size() as i64)?;
            let lower = enumerate_partitions(lambda.n(), lambda.size() - 1);
            let basis: Vec<LaurentPoly> = lower.iter().map(monomial_symmetric).collect();
            let conds: Vec<(Vec<Scalar>, Scalar)> = lower
                .iter()
                .map(|m| (tilde(m, cfg).coords, Scalar::zero()))
                .collect();
            solve_interpolation(&top, &basis, &conds)
                .map_err(|e| e.in_context(cfg.any_specialized(), format!("R'_{lambda}")))
        })
    }

    /// The value `O_α` must take at the node attached to `β`:
    /// `G_β(a α̃)/G_β(a τ)`, or `G_β(a + α̃)/G_β(a + ρ)` for Jack parameters.
    pub fn okounkov_value(
        &self,
        alpha: &Composition,
        beta: &Composition,
        cfg: &FieldConfig,
    ) -> Result<Scalar> {
        let n = alpha.n();
        let a = cfg.a();
        let g = self.g(beta, cfg)?;
        let at = tilde(alpha, cfg);
        let (num_pt, den_pt) = match kind(cfg) {
            Kind::Qt => (at.scaled(&a).coords, scale_all(&tau(n, cfg), &a)),
            Kind::R => (at.shifted(&a).coords, shift_all(&rho(n, cfg), &a)),
        };
        g.evaluate(&num_pt)?.checked_div(&g.evaluate(&den_pt)?)
    }

    /// The node attached to `β`: `β̄⁻¹` (componentwise), or `β̄(r)`.
    pub fn okounkov_node(&self, beta: &Composition, cfg: &FieldConfig) -> Result<Vec<Scalar>> {
        let p = spectral(&beta.to_int(), cfg);
        Ok(match kind(cfg) {
            Kind::Qt => p.inverse()?.coords,
            Kind::R => p.coords,
        })
    }

    /// `O_α`: the polynomial of degree `≤ |α|` taking the prescribed values at
    /// the nodes of all `|β| ≤ |α|`. Needs `a` in the field.
    pub fn okounkov(&self, alpha: &Composition, cfg: &FieldConfig) -> Result<Arc<LaurentPoly>> {
        if !has_a(cfg) {
            return Err(Error::UsageError("O_alpha needs the parameter a (variant qta or ra)".into()));
        }
        let key = self.key(Family::O, alpha, cfg, true);
        self.cache.get_or_try_insert(key, || {
            let ctx = |e: Error| e.in_context(cfg.any_specialized(), format!("O_{alpha}"));
            let all = enumerate_compositions(alpha.n(), alpha.size());
            let basis: Vec<LaurentPoly> = all.iter().map(monomial).collect();
            let conds = all
                .iter()
                .map(|b| Ok((self.okounkov_node(b, cfg)?, self.okounkov_value(alpha, b, cfg)?)))
                .collect::<Result<Vec<_>>>()
                .map_err(ctx)?;
            solve_interpolation(&LaurentPoly::zero(alpha.n()), &basis, &conds).map_err(ctx)
        })
    }

    /// `[α over β] = G_β(ᾱ)/G_β(β̄)` in the parameters of `cfg` (use
    /// [`FieldConfig::inverted`] for `1/q, 1/t`).
    pub fn binom(&self, alpha: &Composition, beta: &Composition, cfg: &FieldConfig) -> Result<Scalar> {
        same_n(alpha, beta)?;
        let g = self.g(beta, cfg)?;
        let num = g.evaluate(&spectral(&alpha.to_int(), cfg).coords)?;
        let den = g.evaluate(&spectral(&beta.to_int(), cfg).coords)?;
        num.checked_div(&den)
            .map_err(|e| e.in_context(cfg.any_specialized(), format!("[{alpha} over {beta}]")))
    }

    /// `(λ over μ) = R_μ(λ̄)/R_μ(μ̄)`.
    pub fn binom_sym(&self, lambda: &Composition, mu: &Composition, cfg: &FieldConfig) -> Result<Scalar> {
        same_n(lambda, mu)?;
        require_partition(lambda)?;
        let rm = self.r_sym(mu, cfg)?;
        let num = rm.evaluate(&spectral(&lambda.to_int(), cfg).coords)?;
        let den = rm.evaluate(&spectral(&mu.to_int(), cfg).coords)?;
        num.checked_div(&den)
            .map_err(|e| e.in_context(cfg.any_specialized(), format!("({lambda} over {mu})")))
    }
}

fn same_n(a: &Composition, b: &Composition) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::DimensionError(format!("{a} and {b} have different lengths")));
    }
    Ok(())
}

fn require_partition(lambda: &Composition) -> Result<()> {
    if !lambda.is_partition() {
        return Err(Error::UsageError(format!("{lambda} is not a partition")));
    }
    Ok(())
}

fn scale_all(v: &[Scalar], a: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| a * x).collect()
}

fn shift_all(v: &[Scalar], a: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| a + x).collect()
}

/// `f(-x - (n-1) r)`
pub fn reflect(f: &LaurentPoly, cfg: &FieldConfig) -> Result<LaurentPoly> {
    let n = f.n();
    let shift = -(&cfg.r() * &Scalar::int(n as i64 - 1));
    let maps: Vec<AffineMap> = (0..n)
        .map(|i| AffineMap {
            target: i,
            scale: Scalar::int(-1),
            shift: shift.clone(),
        })
        .collect();
    f.affine_substitute(&maps)
}

/// The point `a·p` or `a + p` matching the variant of `cfg`.
pub fn act_a(p: &[Scalar], a: &Scalar, cfg: &FieldConfig) -> Vec<Scalar> {
    match kind(cfg) {
        Kind::Qt => scale_all(p, a),
        Kind::R => shift_all(p, a),
    }
}

/// The base point `τ` or `ρ` of the variant of `cfg`.
pub fn base_point(n: usize, cfg: &FieldConfig) -> Vec<Scalar> {
    match kind(cfg) {
        Kind::Qt => tau(n, cfg),
        Kind::R => rho(n, cfg),
    }
}

/// Every composition of length `n` and size at most `d`, as integer vectors.
pub fn int_vectors(n: usize, d: u32) -> Vec<IntVector> {
    enumerate_compositions(n, d).iter().map(Composition::to_int).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Variant;

    fn c(v: &[u32]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }
    fn x(n: usize, i: usize) -> LaurentPoly {
        LaurentPoly::var(n, i)
    }
    fn cst(n: usize, s: Scalar) -> LaurentPoly {
        LaurentPoly::constant(n, s)
    }
    fn q() -> Scalar {
        Scalar::gen(Gen::Q)
    }
    fn t() -> Scalar {
        Scalar::gen(Gen::T)
    }
    fn r() -> Scalar {
        Scalar::gen(Gen::R)
    }
    fn sym(v: Variant) -> FieldConfig {
        FieldConfig::symbolic(v)
    }

    fn g10_qt() -> LaurentPoly {
        let num = &t() - &Scalar::one();
        let den = &(&q() * &t()) - &Scalar::one();
        let cx2 = num.checked_div(&den).unwrap();
        let tt = &t() * &t();
        let cnum = &(&q() * &tt) - &Scalar::one();
        let c0 = cnum.checked_div(&(&t() * &den)).unwrap();
        x(2, 0).add(&x(2, 1).scale(&cx2)).sub(&cst(2, c0))
    }

    #[test]
    fn recursion_small_cases() {
        let ip = Interpolator::new();
        let cfg = sym(Variant::QT);
        assert_eq!(*ip.g(&c(&[0, 0]), &cfg).unwrap(), LaurentPoly::one(2));
        let tinv = t().inv().unwrap();
        assert_eq!(*ip.g(&c(&[0, 1]), &cfg).unwrap(), x(2, 1).sub(&cst(2, tinv)));
        assert_eq!(*ip.g(&c(&[1, 0]), &cfg).unwrap(), g10_qt());
        // (x - 1)(x - q)
        let expect = x(1, 0)
            .sub(&LaurentPoly::one(1))
            .mul(&x(1, 0).sub(&cst(1, q())));
        assert_eq!(*ip.g(&c(&[2]), &cfg).unwrap(), expect);
        let rc = sym(Variant::R);
        assert_eq!(*ip.g(&c(&[0, 1]), &rc).unwrap(), x(2, 1).add(&cst(2, r())));
    }

    #[test]
    fn oracle_small_cases() {
        let ip = Interpolator::new();
        let cfg = sym(Variant::QT);
        assert_eq!(ip.g_oracle(&c(&[1, 0]), &cfg).unwrap(), g10_qt());
        assert_eq!(ip.g_oracle(&c(&[0, 0]), &cfg).unwrap(), LaurentPoly::one(2));
        let rc = sym(Variant::R);
        assert_eq!(
            ip.g_oracle(&c(&[0, 1]), &rc).unwrap(),
            x(2, 1).add(&cst(2, r()))
        );
    }

    #[test]
    fn recursion_matches_oracle_n2() {
        let ip = Interpolator::new();
        for cfg in [FieldConfig::default_for(Variant::QT), sym(Variant::R)] {
            for al in enumerate_compositions(2, 3) {
                assert_eq!(*ip.g(&al, &cfg).unwrap(), ip.g_oracle(&al, &cfg).unwrap(), "{al} {cfg}");
            }
        }
    }

    #[test]
    fn every_step_agrees() {
        let ip = Interpolator::new();
        let cfg = FieldConfig::default_for(Variant::QT);
        for al in enumerate_compositions(3, 3) {
            let base = ip.g(&al, &cfg).unwrap();
            for s in valid_steps(&al) {
                assert_eq!(ip.g_via(&al, s, &cfg).unwrap(), *base, "{al} {s:?}");
            }
        }
    }

    #[test]
    fn e_and_gprime_examples() {
        let ip = Interpolator::new();
        let cfg = sym(Variant::QT);
        assert_eq!(ip.e(&c(&[0, 1]), &cfg).unwrap(), x(2, 1));
        assert_eq!(ip.e(&c(&[1, 0]), &cfg).unwrap(), g10_qt().top_part(1).unwrap());
        let tinv = t().inv().unwrap();
        assert_eq!(*ip.gprime(&c(&[0, 1]), &cfg).unwrap(), x(2, 1).sub(&cst(2, tinv)));
        // (x - 1)(x - 1/q)(x - 1/q^2)
        let qi = q().inv().unwrap();
        let expect = x(1, 0)
            .sub(&LaurentPoly::one(1))
            .mul(&x(1, 0).sub(&cst(1, qi.clone())))
            .mul(&x(1, 0).sub(&cst(1, &qi * &qi)));
        assert_eq!(*ip.gprime(&c(&[3]), &cfg).unwrap(), expect);
        let rc = sym(Variant::R);
        assert_eq!(*ip.gprime(&c(&[0, 1]), &rc).unwrap(), x(2, 1).add(&cst(2, r())));
    }

    #[test]
    fn gplus_examples() {
        let ip = Interpolator::new();
        let rc = sym(Variant::R);
        assert_eq!(ip.gplus(&c(&[0, 1]), &rc).unwrap(), x(2, 1));
        // x(x + 1)(x + 2)
        let expect = x(1, 0)
            .mul(&x(1, 0).add(&cst(1, Scalar::int(1))))
            .mul(&x(1, 0).add(&cst(1, Scalar::int(2))));
        assert_eq!(ip.gplus(&c(&[3]), &rc).unwrap(), expect);
        assert!(ip.gplus(&c(&[1]), &sym(Variant::QT)).is_err());
    }

    #[test]
    fn symmetric_examples() {
        let ip = Interpolator::new();
        let cfg = sym(Variant::QT);
        let tinv = t().inv().unwrap();
        let expect = x(2, 0)
            .add(&x(2, 1))
            .sub(&cst(2, &Scalar::one() + &tinv));
        assert_eq!(*ip.r_sym(&c(&[1, 0]), &cfg).unwrap(), expect);
        assert_eq!(*ip.r_sym(&c(&[2]), &cfg).unwrap(), *ip.g(&c(&[2]), &cfg).unwrap());
        let rc = sym(Variant::R);
        assert_eq!(
            *ip.rprime(&c(&[1, 0]), &rc).unwrap(),
            x(2, 0).add(&x(2, 1)).add(&cst(2, r()))
        );
        assert!(matches!(ip.r_sym(&c(&[0, 1]), &cfg), Err(Error::UsageError(_))));
    }

    #[test]
    fn okounkov_n1() {
        let ip = Interpolator::new();
        let cfg = sym(Variant::QTA);
        let a = Scalar::gen(Gen::A);
        let am1 = &a - &Scalar::one();
        let expect = x(1, 0)
            .scale(&a)
            .sub(&LaurentPoly::one(1))
            .div_scalar(&am1)
            .unwrap();
        assert_eq!(*ip.okounkov(&c(&[1]), &cfg).unwrap(), expect);
        assert_eq!(*ip.okounkov(&c(&[0, 0]), &cfg).unwrap(), LaurentPoly::one(2));
        assert!(ip.okounkov(&c(&[1]), &sym(Variant::QT)).is_err());
    }

    #[test]
    fn binomial_examples() {
        let ip = Interpolator::new();
        let cfg = sym(Variant::QT);
        assert_eq!(ip.binom(&c(&[2]), &c(&[1]), &cfg).unwrap(), &q() + &Scalar::one());
        assert!(ip.binom(&c(&[1, 2]), &c(&[1, 2]), &cfg).unwrap().is_one());
        assert!(ip.binom(&c(&[1, 2]), &c(&[0, 0]), &cfg).unwrap().is_one());
        let rc = sym(Variant::R);
        assert_eq!(ip.binom(&c(&[3]), &c(&[1]), &rc).unwrap(), Scalar::int(3));
        assert_eq!(ip.binom(&c(&[4]), &c(&[2]), &rc).unwrap(), Scalar::int(6));
    }

    #[test]
    fn preflight_names_pair() {
        let cfg = FieldConfig::with_values(
            Variant::QT,
            [
                (Gen::Q, num_rational::BigRational::from_integer(2.into())),
                (Gen::T, num_rational::BigRational::new(1.into(), 2.into())),
            ],
        )
        .unwrap();
        let e = preflight(2, 2, &cfg).unwrap_err();
        assert!(matches!(e, Error::SpecializationCollision(ref m) if m.contains("coincide")), "{e}");
        assert!(preflight(3, 3, &FieldConfig::default_for(Variant::QT)).is_ok());
    }
}
