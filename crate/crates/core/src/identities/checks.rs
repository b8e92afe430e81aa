//! Bodies of the catalog entries.

use std::sync::Arc;

use super::support::{cleared, ones, sign, zeros, Ctx, Found};
use super::Outcome;
use crate::error::{Error, Result};
use crate::interpolation::{
    act_a, base_point, closed_d, closed_e, closed_phi, reflect, valid_steps, Kind,
};
use crate::operators::{
    hecke, phi_qt, phi_r, sigma_along, sigma_op, sigma_word, symmetrize, xi_qt, xi_r,
};
use crate::polyring::{Exponent, LaurentPoly};
use crate::scalars::{FieldConfig, Scalar};
use crate::shapes::{
    contains, dominant_sort, enumerate_compositions, enumerate_partitions, spectral, tilde,
    Composition, IntVector, Permutation,
};

fn err_in(cfg: &FieldConfig, instance: &str) -> impl Fn(Error) -> Error {
    let specialized = cfg.any_specialized();
    let instance = instance.to_string();
    move |e| e.in_context(specialized, &instance)
}

fn bar(v: &IntVector, cfg: &FieldConfig) -> Vec<Scalar> {
    spectral(v, cfg).coords
}

fn swapped(v: &IntVector, i: usize) -> IntVector {
    let mut e = v.0.clone();
    e.swap(i - 1, i);
    IntVector(e)
}

/// Integral vectors with `Σ |v_i| ≤ d`.
fn int_ball(n: usize, d: u32) -> Vec<IntVector> {
    fn rec(n: usize, budget: i64, prefix: &mut Vec<i64>, out: &mut Vec<IntVector>) {
        if prefix.len() == n {
            out.push(IntVector(prefix.clone()));
            return;
        }
        for x in -budget..=budget {
            prefix.push(x);
            rec(n, budget - x.abs(), prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d as i64, &mut Vec::new(), &mut out);
    out
}

/// Compare `lhs/lhs_den = Σ c p/den` after clearing denominators; a vanishing
/// denominator is recorded as a failure.
fn compare_cleared(
    found: &mut Found,
    instance: &str,
    lhs: &LaurentPoly,
    lhs_den: &Scalar,
    terms: &[(Scalar, LaurentPoly, Scalar)],
) -> Result<()> {
    match cleared(lhs, lhs_den, terms) {
        Ok((l, r)) => found.poly(instance, &l, &r),
        Err(Error::DivisionByZero) => found.fact(instance, false, "a denominator vanishes", "nonzero"),
        Err(e) => return Err(e),
    }
    Ok(())
}

fn size_sum(cs: &[Composition]) -> usize {
    cs.iter().map(|c| c.size() as usize).sum()
}

/// Relations among generators `i` checked by the braid-type entries.
#[derive(Debug, Clone, Copy)]
enum Rel {
    Square(usize),
    Braid(usize),
    Commute(usize, usize),
}

fn relations(n: usize, with_square: bool) -> Vec<Rel> {
    let mut out = Vec::new();
    for i in 1..n {
        if with_square {
            out.push(Rel::Square(i));
        }
        if i + 1 < n {
            out.push(Rel::Braid(i));
        }
        for j in i + 2..n {
            out.push(Rel::Commute(i, j));
        }
    }
    out
}

fn check_relations(
    ctx: &Ctx,
    cfg: &FieldConfig,
    with_square: bool,
    op: fn(usize, &LaurentPoly, &FieldConfig) -> Result<LaurentPoly>,
) -> Result<Outcome> {
    let polys = ctx.random_polys(3);
    let rels = relations(ctx.n(), with_square);
    let items: Vec<(usize, Rel)> = (0..polys.len())
        .flat_map(|k| rels.iter().map(move |r| (k, *r)))
        .collect();
    ctx.each(&items, |&(k, rel)| {
        let f = &polys[k];
        let word = |w: &[usize]| -> Result<LaurentPoly> {
            let mut g = f.clone();
            for &i in w.iter().rev() {
                g = op(i, &g, cfg)?;
            }
            Ok(g)
        };
        let mut found = Found::default();
        let inst = format!("f{k}, {rel:?}");
        match rel {
            Rel::Square(i) => found.poly(&inst, &word(&[i, i])?, f),
            Rel::Braid(i) => found.poly(&inst, &word(&[i, i + 1, i])?, &word(&[i + 1, i, i + 1])?),
            Rel::Commute(i, j) => found.poly(&inst, &word(&[i, j])?, &word(&[j, i])?),
        }
        Ok(found)
    })
}

pub(crate) fn hecke_quadratic(ctx: &Ctx) -> Result<Outcome> {
    let cfg = ctx.qt().clone();
    let t = cfg.t();
    let polys = ctx.random_polys(3);
    let items: Vec<(usize, usize)> = (0..polys.len())
        .flat_map(|k| (1..ctx.n()).map(move |i| (k, i)))
        .collect();
    ctx.each(&items, |&(k, i)| {
        let f = &polys[k];
        let h1 = hecke(i, f, &cfg)?.add(f);
        let lhs = hecke(i, &h1, &cfg)?.sub(&h1.scale(&t));
        let mut found = Found::default();
        found.poly(format!("f{k}, i={i}"), &lhs, &LaurentPoly::zero(ctx.n()));
        Ok(found)
    })
}

pub(crate) fn hecke_braid(ctx: &Ctx) -> Result<Outcome> {
    check_relations(ctx, &ctx.qt().clone(), false, hecke)
}

/// A reduced word for `w` built from left descents, largest index first.
fn left_reduced_word(w: &Permutation) -> Vec<usize> {
    let n = w.n();
    let mut cur = w.clone();
    let mut word = Vec::new();
    while !cur.is_identity() {
        let inv = cur.inverse();
        let i = (0..n - 1)
            .rev()
            .find(|&i| inv.apply(i) > inv.apply(i + 1))
            .expect("a nonidentity permutation has a left descent");
        word.push(i + 1);
        cur = Permutation::simple(i + 1, n)
            .expect("index in range")
            .compose(&cur);
    }
    word
}

pub(crate) fn sigma_braid(ctx: &Ctx) -> Result<Outcome> {
    let cfg = ctx.r().clone();
    let mut out = check_relations(ctx, &cfg, true, sigma_op)?;
    let f = ctx.random_polys(1).remove(0);
    let perms = Permutation::all(ctx.n());
    let words = ctx.each(&perms, |w| {
        let mut found = Found::default();
        let other = left_reduced_word(w);
        found.poly(
            format!("w={w}, words {:?} and {:?}", w.reduced_word(), other),
            &sigma_word(w, &f, &cfg)?,
            &sigma_along(&other, &f, &cfg)?,
        );
        Ok(found)
    })?;
    out.instances += words.instances;
    out.failures.extend(words.failures);
    Ok(out)
}

pub(crate) fn eigen_qt(ctx: &Ctx) -> Result<Outcome> {
    let cfg = ctx.qt().clone();
    ctx.each(&ctx.comps(), |al| {
        let g = ctx.ip.g(al, &cfg)?;
        let b = bar(&al.to_int(), &cfg);
        let mut found = Found::default();
        for i in 1..=al.n() {
            let lhs = xi_qt(i, &g, &cfg)?;
            found.poly(format!("alpha={al}, i={i}"), &lhs, &g.scale(&b[i - 1].inv()?));
        }
        Ok(found)
    })
}

pub(crate) fn eigen_r(ctx: &Ctx) -> Result<Outcome> {
    let cfg = ctx.r().clone();
    ctx.each(&ctx.comps(), |al| {
        let g = ctx.ip.g(al, &cfg)?;
        let b = bar(&al.to_int(), &cfg);
        let mut found = Found::default();
        for i in 1..=al.n() {
            let lhs = xi_r(i, &g, &cfg)?;
            found.poly(format!("alpha={al}, i={i}"), &lhs, &g.scale(&b[i - 1]));
        }
        Ok(found)
    })
}

pub(crate) fn discr_qt(ctx: &Ctx) -> Result<Outcome> {
    let base = ctx.qta();
    let n = ctx.n();
    let polys = ctx.random_polys(2);
    let images: Vec<(LaurentPoly, Vec<LaurentPoly>)> = polys
        .iter()
        .map(|f| {
            Ok((
                phi_qt(f, &base)?,
                (1..n).map(|i| hecke(i, f, &base)).collect::<Result<Vec<_>>>()?,
            ))
        })
        .collect::<Result<_>>()?;
    let vs = int_ball(n, ctx.deg());
    let items: Vec<(usize, IntVector)> = (0..polys.len())
        .flat_map(|k| vs.iter().map(move |v| (k, v.clone())))
        .collect();
    ctx.each(&items, |(k, v)| {
        let f = &polys[*k];
        let (phif, hf) = &images[*k];
        let inst = format!("f{k}, v={v}");
        let bound = f.total_degree().unwrap_or(0).max(0) as usize + 1;
        ctx.over_a(&base, &inst, bound, |_| Ok(true), |acfg, found| {
            let a = acfg.a();
            let t = acfg.t();
            let vb = bar(v, acfg);
            let at = |w: &IntVector| act_a(&bar(w, acfg), &a, acfg);
            let av = at(v);
            let lhs = phif.evaluate(&av)?;
            let head = &(&a * &vb[n - 1]) - &t.pow(1 - n as i64)?;
            let rhs = &head * &f.evaluate(&at(&v.sharp()))?;
            found.scalar(format!("{inst}, Phi, a={a}"), &lhs, &rhs);
            let fv = f.evaluate(&av)?;
            for i in 1..n {
                let lhs = hf[i - 1].evaluate(&av)?;
                let diff = &vb[i - 1] - &vb[i];
                let c1 = (&(&t - &Scalar::one()) * &vb[i - 1]).checked_div(&diff)?;
                let c2 = (&vb[i - 1] - &(&t * &vb[i])).checked_div(&diff)?;
                let rhs = &(&c1 * &fv) + &(&c2 * &f.evaluate(&at(&swapped(v, i)))?);
                found.scalar(format!("{inst}, H_{i}, a={a}"), &lhs, &rhs);
            }
            Ok(())
        })
    })
}

pub(crate) fn discr_r(ctx: &Ctx) -> Result<Outcome> {
    let cfg = ctx.ra();
    let n = ctx.n();
    let polys = ctx.random_polys(2);
    let images: Vec<(LaurentPoly, Vec<LaurentPoly>)> = polys
        .iter()
        .map(|f| {
            Ok((
                phi_r(f, &cfg)?,
                (1..n).map(|i| sigma_op(i, f, &cfg)).collect::<Result<Vec<_>>>()?,
            ))
        })
        .collect::<Result<_>>()?;
    let vs = int_ball(n, ctx.deg());
    let items: Vec<(usize, IntVector)> = (0..polys.len())
        .flat_map(|k| vs.iter().map(move |v| (k, v.clone())))
        .collect();
    ctx.each(&items, |(k, v)| {
        let f = &polys[*k];
        let (phif, sf) = &images[*k];
        let inst = format!("f{k}, v={v}");
        ctx.over_a(&cfg, &inst, 0, |_| Ok(true), |acfg, found| {
            let (a, r) = (acfg.a(), acfg.r());
            let vb = bar(v, acfg);
            let at = |w: &IntVector| act_a(&bar(w, acfg), &a, acfg);
            let av = at(v);
            let lhs = phif.evaluate(&av)?;
            let head = &(&(&a + &vb[n - 1]) + &(&r * &Scalar::int(n as i64))) - &r;
            let rhs = &head * &f.evaluate(&at(&v.sharp()))?;
            found.scalar(format!("{inst}, Phi"), &lhs, &rhs);
            let fv = f.evaluate(&av)?;
            for i in 1..n {
                let lhs = sf[i - 1].evaluate(&av)?;
                let diff = &vb[i - 1] - &vb[i];
                let c1 = r.checked_div(&diff)?;
                let c2 = (&diff - &r).checked_div(&diff)?;
                let rhs = &(&c1 * &fv) + &(&c2 * &f.evaluate(&at(&swapped(v, i)))?);
                found.scalar(format!("{inst}, sigma_{i}"), &lhs, &rhs);
            }
            Ok(())
        })
    })
}

fn recur_oracle(ctx: &Ctx, cfg: &FieldConfig) -> Result<Outcome> {
    ctx.each(&ctx.comps(), |al| {
        let inst = format!("alpha={al}");
        let g = ctx.ip.g(al, cfg)?;
        let oracle = ctx.ip.g_oracle(al, cfg)?;
        let mut found = Found::default();
        found.poly(format!("{inst}, recursion vs solve"), &g, &oracle);
        for s in valid_steps(al) {
            found.poly(format!("{inst}, step {s:?}"), &ctx.ip.g_via(al, s, cfg)?, &g);
        }
        // Defining properties, re-checked on the recursive result.
        let lead = g.coefficient(&Exponent::from(al.parts()).0);
        found.scalar(format!("{inst}, leading coefficient"), &lead, &Scalar::one());
        let deg = g.total_degree().unwrap_or(0);
        found.fact(format!("{inst}, degree"), deg <= al.size() as i64, deg, al.size());
        for b in enumerate_compositions(al.n(), al.size()) {
            if &b != al {
                let v = g.evaluate(&bar(&b.to_int(), cfg))?;
                found.scalar(format!("{inst}, vanishing at beta={b}"), &v, &Scalar::zero());
            }
        }
        Ok(found)
    })
}

pub(crate) fn recur_oracle_qt(ctx: &Ctx) -> Result<Outcome> {
    recur_oracle(ctx, &ctx.qt().clone())
}

pub(crate) fn recur_oracle_r(ctx: &Ctx) -> Result<Outcome> {
    recur_oracle(ctx, &ctx.r().clone())
}

pub(crate) fn vanish_extra(ctx: &Ctx) -> Result<Outcome> {
    let cfgs = [ctx.qt().clone(), ctx.r().clone()];
    let bigger = enumerate_compositions(ctx.n(), ctx.deg() + 1);
    ctx.each(&ctx.comps(), |al| {
        let mut found = Found::default();
        for cfg in &cfgs {
            let g = ctx.ip.g(al, cfg)?;
            for b in bigger.iter().filter(|b| b.size() > al.size()) {
                if !contains(b, al)? {
                    let v = g.evaluate(&bar(&b.to_int(), cfg))?;
                    found.scalar(format!("alpha={al}, beta={b}, {cfg}"), &v, &Scalar::zero());
                }
            }
        }
        Ok(found)
    })
}

/// `k_i = #{k < i : α_k ≥ α_i} + #{k > i : α_k > α_i}`
fn rank_offsets(al: &Composition) -> Vec<i64> {
    let p = al.parts();
    (0..p.len())
        .map(|i| {
            let before = p[..i].iter().filter(|&&x| x >= p[i]).count();
            let after = p[i + 1..].iter().filter(|&&x| x > p[i]).count();
            (before + after) as i64
        })
        .collect()
}

pub(crate) fn spectral_closed_form(ctx: &Ctx) -> Result<Outcome> {
    let (qt, r) = (ctx.qt().clone(), ctx.r().clone());
    ctx.each(&ctx.comps(), |al| {
        let ks = rank_offsets(al);
        let bq = bar(&al.to_int(), &qt);
        let br = bar(&al.to_int(), &r);
        let mut found = Found::default();
        for (i, &k) in ks.iter().enumerate() {
            let ai = al.parts()[i] as i64;
            let want = &qt.q().pow(ai)? * &qt.t().pow(-k)?;
            found.scalar(format!("alpha={al}, i={}, qt", i + 1), &bq[i], &want);
            let want = &Scalar::int(ai) - &(&r.r() * &Scalar::int(k));
            found.scalar(format!("alpha={al}, i={}, r", i + 1), &br[i], &want);
        }
        Ok(found)
    })
}

pub(crate) fn eval_qt(ctx: &Ctx) -> Result<Outcome> {
    let base = ctx.qta();
    let n = ctx.n();
    ctx.each(&ctx.comps(), |al| {
        let inst = format!("alpha={al}");
        let g = ctx.ip.g(al, &base)?;
        let (d, e) = (closed_d(al, &base), closed_e(al, &base));
        ctx.over_a(&base, &inst, al.size() as usize, |_| Ok(true), |acfg, found| {
            let a = acfg.a();
            let lhs = &d * &g.evaluate(&act_a(&base_point(n, acfg), &a, acfg))?;
            let rhs = &e * &closed_phi(al, &a, acfg);
            found.scalar(format!("{inst}, a={a}"), &lhs, &rhs);
            Ok(())
        })
    })
}

pub(crate) fn eval_r(ctx: &Ctx) -> Result<Outcome> {
    let cfg = ctx.ra();
    let n = ctx.n();
    ctx.each(&ctx.comps(), |al| {
        let inst = format!("alpha={al}");
        let g = ctx.ip.g(al, &cfg)?;
        let (d, e) = (closed_d(al, &cfg), closed_e(al, &cfg));
        ctx.over_a(&cfg, &inst, al.size() as usize, |_| Ok(true), |acfg, found| {
            let a = acfg.a();
            let lhs = &d * &g.evaluate(&act_a(&base_point(n, acfg), &a, acfg))?;
            let rhs = &e * &closed_phi(al, &a, acfg);
            found.scalar(&inst, &lhs, &rhs);
            Ok(())
        })
    })
}

pub(crate) fn inva(ctx: &Ctx) -> Result<Outcome> {
    let base = ctx.qta();
    let n = ctx.n();
    ctx.each(&ctx.comps(), |al| {
        let inst = format!("alpha={al}");
        let orbit = al.orbit();
        let gs: Vec<(Composition, Arc<LaurentPoly>, Scalar)> = orbit
            .iter()
            .map(|w| Ok((w.clone(), ctx.ip.g(w, &base)?, closed_d(w, &base))))
            .collect::<Result<_>>()?;
        let g = ctx.ip.g(al, &base)?;
        let d = closed_d(al, &base);
        ctx.over_a(&base, &inst, al.size() as usize, |_| Ok(true), |acfg, found| {
            let a = acfg.a();
            let pt = act_a(&base_point(n, acfg), &a, acfg);
            let rhs = &d * &g.evaluate(&pt)?;
            for (w, gw, dw) in &gs {
                let lhs = dw * &gw.evaluate(&pt)?;
                found.scalar(format!("{inst}, w alpha={w}, a={a}"), &lhs, &rhs);
            }
            Ok(())
        })
    })
}

pub(crate) fn zerosp(ctx: &Ctx) -> Result<Outcome> {
    let cfg = ctx.qt().clone();
    ctx.each(&ctx.comps(), |al| {
        let g = ctx.ip.g(al, &cfg)?;
        let lhs = &closed_d(al, &cfg) * &g.evaluate(&zeros(al.n()))?;
        let rhs = &closed_e(al, &cfg) * &closed_phi(al, &Scalar::zero(), &cfg);
        let mut found = Found::default();
        found.scalar(format!("alpha={al}"), &lhs, &rhs);
        Ok(found)
    })
}

pub(crate) fn derecur(ctx: &Ctx) -> Result<Outcome> {
    let cfg = ctx.qta();
    let n = ctx.n() as i64;
    let (q, t) = (cfg.q(), cfg.t());
    let a = cfg.a();
    let one = Scalar::one();
    ctx.each(&ctx.comps(), |al| {
        let inst = format!("alpha={al}");
        let mut found = Found::default();
        found.symbolic = true;
        let b = bar(&al.to_int(), &cfg);
        let (d, e) = (closed_d(al, &cfg), closed_e(al, &cfg));
        let phi0 = closed_phi(al, &Scalar::zero(), &cfg);
        if let Some(s) = al.sharp() {
            let last = &b[al.n() - 1];
            let want = &(&one - &(&t.pow(n)? * last)) * &closed_d(&s, &cfg);
            found.scalar(format!("{inst}, d ratio"), &d, &want);
            let want = &(&t.pow(1 - n)? - &(&t * last)) * &closed_e(&s, &cfg);
            found.scalar(format!("{inst}, e ratio"), &e, &want);
            let an = al.parts()[al.n() - 1] as i64;
            let want = -(&q.pow(an - 1)? * &closed_phi(&s, &Scalar::zero(), &cfg));
            found.scalar(format!("{inst}, phi(0) ratio"), &phi0, &want);
        }
        for step in valid_steps(al) {
            if let crate::interpolation::Step::Hecke(i) = step {
                let ratio = b[i - 1].checked_div(&b[i])?;
                let lhs = &d * &(&one - &(&t * &ratio));
                let rhs = &(&one - &ratio) * &closed_d(&al.swapped(i), &cfg);
                found.scalar(format!("{inst}, d under s_{i}"), &lhs, &rhs);
            }
        }
        let phi = closed_phi(al, &a, &cfg);
        for w in al.orbit() {
            found.scalar(format!("{inst}, e at {w}"), &closed_e(&w, &cfg), &e);
            found.scalar(format!("{inst}, phi at {w}"), &closed_phi(&w, &a, &cfg), &phi);
        }
        Ok(found)
    })
}

pub(crate) fn derecur2(ctx: &Ctx) -> Result<Outcome> {
    let cfg = ctx.ra();
    let n = ctx.n() as i64;
    let (r, a) = (cfg.r(), cfg.a());
    ctx.each(&ctx.comps(), |al| {
        let inst = format!("alpha={al}");
        let mut found = Found::default();
        found.symbolic = true;
        let b = bar(&al.to_int(), &cfg);
        let (d, e) = (closed_d(al, &cfg), closed_e(al, &cfg));
        if let Some(s) = al.sharp() {
            let factor = &(&r * &Scalar::int(n)) + &b[al.n() - 1];
            found.scalar(format!("{inst}, d ratio"), &d, &(&factor * &closed_d(&s, &cfg)));
            found.scalar(format!("{inst}, e ratio"), &e, &(&factor * &closed_e(&s, &cfg)));
        }
        for step in valid_steps(al) {
            if let crate::interpolation::Step::Hecke(i) = step {
                let dd = &b[i - 1] - &b[i];
                let lhs = &d * &(&dd + &r);
                let rhs = &dd * &closed_d(&al.swapped(i), &cfg);
                found.scalar(format!("{inst}, d under s_{i}"), &lhs, &rhs);
            }
        }
        let phi = closed_phi(al, &a, &cfg);
        for w in al.orbit() {
            found.scalar(format!("{inst}, e at {w}"), &closed_e(&w, &cfg), &e);
            found.scalar(format!("{inst}, phi at {w}"), &closed_phi(&w, &a, &cfg), &phi);
        }
        Ok(found)
    })
}

fn oko(ctx: &Ctx, base: &FieldConfig) -> Result<Outcome> {
    let n = ctx.n();
    ctx.each(&ctx.comps(), |al| {
        let inst = format!("alpha={al}");
        let bigs = enumerate_compositions(n, al.size() + 2);
        let gs: Vec<Arc<LaurentPoly>> = bigs
            .iter()
            .map(|b| ctx.ip.g(b, base))
            .collect::<Result<_>>()?;
        let small = enumerate_compositions(n, al.size());
        let bound = size_sum(&small) + al.size() as usize + 2;
        let admissible = |a: &Scalar| -> Result<bool> {
            let pt = act_a(&base_point(n, base), a, base);
            for g in &gs {
                if g.evaluate(&pt)?.is_zero() {
                    return Ok(false);
                }
            }
            Ok(true)
        };
        ctx.over_a(base, &inst, bound, admissible, |acfg, found| {
            let ctxerr = err_in(acfg, &inst);
            let a = acfg.a();
            let o = ctx.ip.okounkov(al, acfg).map_err(&ctxerr)?;
            let at = act_a(&tilde(al, acfg).coords, &a, acfg);
            let base_pt = act_a(&base_point(n, acfg), &a, acfg);
            for (b, g) in bigs.iter().zip(&gs) {
                let node = ctx.ip.okounkov_node(b, acfg)?;
                let lhs = &o.evaluate(&node)? * &g.evaluate(&base_pt)?;
                let rhs = g.evaluate(&at)?;
                found.scalar(format!("{inst}, beta={b}, a={a}"), &lhs, &rhs);
            }
            Ok(())
        })
    })
}

pub(crate) fn oko_qt(ctx: &Ctx) -> Result<Outcome> {
    oko(ctx, &ctx.qta())
}

pub(crate) fn oko_r(ctx: &Ctx) -> Result<Outcome> {
    oko(ctx, &ctx.ra())
}

/// The compositions `β ⊆ α`.
fn below(al: &Composition) -> Result<Vec<Composition>> {
    let mut out = Vec::new();
    for b in enumerate_compositions(al.n(), al.size()) {
        if contains(al, &b)? {
            out.push(b);
        }
    }
    Ok(out)
}

pub(crate) fn binom_qt(ctx: &Ctx) -> Result<Outcome> {
    let base = ctx.qta();
    let inv = ctx.qt().inverted();
    let n = ctx.n();
    ctx.each(&ctx.comps(), |al| {
        let inst = format!("alpha={al}");
        let subs = below(al)?;
        let parts: Vec<(Composition, Scalar, Arc<LaurentPoly>, Arc<LaurentPoly>)> = subs
            .iter()
            .map(|b| {
                Ok((
                    b.clone(),
                    ctx.ip.binom(al, b, &inv)?,
                    ctx.ip.gprime(b, &base)?,
                    ctx.ip.g(b, &base)?,
                ))
            })
            .collect::<Result<_>>()?;
        let g = ctx.ip.g(al, &base)?;
        let bound = al.size() as usize + size_sum(&subs);
        let admissible = |a: &Scalar| -> Result<bool> {
            let pt = act_a(&base_point(n, &base), a, &base);
            for (_, _, _, gb) in &parts {
                if gb.evaluate(&pt)?.is_zero() {
                    return Ok(false);
                }
            }
            Ok(true)
        };
        ctx.over_a(&base, &inst, bound, admissible, |acfg, found| {
            let a = acfg.a();
            let pt = act_a(&base_point(n, acfg), &a, acfg);
            let lhs = g.scale_vars(&a)?;
            let lhs_den = g.evaluate(&pt)?;
            let terms = parts
                .iter()
                .map(|(b, bin, gp, gb)| {
                    Ok((&a.pow(b.size() as i64)? * bin, (**gp).clone(), gb.evaluate(&pt)?))
                })
                .collect::<Result<Vec<_>>>()?;
            compare_cleared(found, &format!("{inst}, a={a}"), &lhs, &lhs_den, &terms)
        })
    })
}

pub(crate) fn binom_r(ctx: &Ctx) -> Result<Outcome> {
    let cfg = ctx.ra();
    let n = ctx.n();
    ctx.each(&ctx.comps(), |al| {
        let inst = format!("alpha={al}");
        let subs = below(al)?;
        let g = ctx.ip.g(al, &cfg)?;
        ctx.over_a(&cfg, &inst, 0, |_| Ok(true), |acfg, found| {
            let a = acfg.a();
            let pt = act_a(&base_point(n, acfg), &a, acfg);
            let lhs = g.shift_vars(&a)?;
            let lhs_den = g.evaluate(&pt)?;
            let terms = subs
                .iter()
                .map(|b| {
                    Ok((
                        ctx.ip.binom(al, b, acfg)?,
                        (*ctx.ip.gprime(b, acfg)?).clone(),
                        ctx.ip.g(b, acfg)?.evaluate(&pt)?,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            compare_cleared(found, &inst, &lhs, &lhs_den, &terms)
        })
    })
}

fn partitions_below(lambda: &Composition) -> Result<Vec<Composition>> {
    let mut out = Vec::new();
    for m in enumerate_partitions(lambda.n(), lambda.size()) {
        if contains(lambda, &m)? {
            out.push(m);
        }
    }
    Ok(out)
}

pub(crate) fn binom_sym_r(ctx: &Ctx) -> Result<Outcome> {
    let cfg = ctx.ra();
    let n = ctx.n();
    let lambdas = enumerate_partitions(n, ctx.deg());
    ctx.each(&lambdas, |la| {
        let inst = format!("lambda={la}");
        let subs = partitions_below(la)?;
        let rl = ctx.ip.r_sym(la, &cfg)?;
        ctx.over_a(&cfg, &inst, 0, |_| Ok(true), |acfg, found| {
            let a = acfg.a();
            let pt = act_a(&base_point(n, acfg), &a, acfg);
            let lhs = rl.shift_vars(&a)?;
            let lhs_den = rl.evaluate(&pt)?;
            let terms = subs
                .iter()
                .map(|m| {
                    Ok((
                        ctx.ip.binom_sym(la, m, acfg)?,
                        (*ctx.ip.rprime(m, acfg)?).clone(),
                        ctx.ip.r_sym(m, acfg)?.evaluate(&pt)?,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            compare_cleared(found, &inst, &lhs, &lhs_den, &terms)
        })
    })
}

pub(crate) fn cor_first(ctx: &Ctx) -> Result<Outcome> {
    let cfg = ctx.qt().clone();
    let inv = cfg.inverted();
    ctx.each(&ctx.comps(), |al| {
        let inst = format!("alpha={al}");
        let zero = zeros(al.n());
        let g = ctx.ip.g(al, &cfg)?;
        let terms = below(al)?
            .iter()
            .map(|b| {
                Ok((
                    ctx.ip.binom(al, b, &inv)?,
                    ctx.ip.e(b, &cfg)?,
                    ctx.ip.g(b, &cfg)?.evaluate(&zero)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut found = Found::default();
        compare_cleared(&mut found, &inst, &g, &g.evaluate(&zero)?, &terms)?;
        Ok(found)
    })
}

pub(crate) fn cor_gprime(ctx: &Ctx) -> Result<Outcome> {
    let cfg = ctx.qt().clone();
    let inv = cfg.inverted();
    let n = ctx.n();
    let tau = base_point(n, &cfg);
    ctx.each(&ctx.comps(), |al| {
        let inst = format!("alpha={al}");
        let e = ctx.ip.e(al, &cfg)?;
        let terms = below(al)?
            .iter()
            .map(|b| {
                Ok((
                    ctx.ip.binom(al, b, &inv)?,
                    (*ctx.ip.gprime(b, &cfg)?).clone(),
                    ctx.ip.e(b, &cfg)?.evaluate(&tau)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut found = Found::default();
        compare_cleared(&mut found, &inst, &e, &e.evaluate(&tau)?, &terms)?;
        Ok(found)
    })
}

pub(crate) fn cor_las(ctx: &Ctx) -> Result<Outcome> {
    let cfg = ctx.r().clone();
    let n = ctx.n();
    ctx.each(&ctx.comps(), |al| {
        let inst = format!("alpha={al}");
        let e = ctx.ip.e(al, &cfg)?;
        let terms = below(al)?
            .iter()
            .map(|b| {
                let eb = ctx.ip.e(b, &cfg)?;
                let at_one = eb.evaluate(&ones(n))?;
                Ok((ctx.ip.binom(al, b, &cfg)?, eb, at_one))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut found = Found::default();
        compare_cleared(&mut found, &inst, &e.shift_vars(&Scalar::one())?, &e.evaluate(&ones(n))?, &terms)?;
        Ok(found)
    })
}

pub(crate) fn cor_plus(ctx: &Ctx) -> Result<Outcome> {
    let cfg = ctx.ra();
    let n = ctx.n();
    let wo = Permutation::longest(n);
    ctx.each(&ctx.comps(), |al| {
        let inst = format!("alpha={al}");
        let subs = below(al)?;
        let g = ctx.ip.g(al, &cfg)?;
        ctx.over_a(&cfg, &inst, 0, |_| Ok(true), |acfg, found| {
            let a = acfg.a();
            let pt = act_a(&base_point(n, acfg), &a, acfg);
            let lhs = sigma_word(&wo, &g.shift_vars(&a)?, acfg)?;
            let terms = subs
                .iter()
                .map(|b| {
                    Ok((
                        ctx.ip.binom(al, b, acfg)?,
                        ctx.ip.gplus(b, acfg)?.permute_vars(&wo),
                        ctx.ip.g(b, acfg)?.evaluate(&pt)?,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            compare_cleared(found, &inst, &lhs, &g.evaluate(&pt)?, &terms)
        })
    })
}

pub(crate) fn cor_rel(ctx: &Ctx) -> Result<Outcome> {
    let cfg = ctx.r().clone();
    let mus = enumerate_partitions(ctx.n(), ctx.deg());
    ctx.each(&ctx.comps(), |al| {
        let la = al.dominant();
        let mut found = Found::default();
        for mu in &mus {
            let mut sum = Scalar::zero();
            for b in mu.orbit() {
                sum = &sum + &ctx.ip.binom(al, &b, &cfg)?;
            }
            let want = ctx.ip.binom_sym(&la, mu, &cfg)?;
            found.scalar(format!("alpha={al}, mu={mu}"), &sum, &want);
        }
        Ok(found)
    })
}

pub(crate) fn relate(ctx: &Ctx) -> Result<Outcome> {
    let cfg = ctx.r().clone();
    let wo = Permutation::longest(ctx.n());
    ctx.each(&ctx.comps(), |al| {
        let g = ctx.ip.g(al, &cfg)?;
        let inner = reflect(&g, &cfg)?.permute_vars(&wo);
        let rhs = sigma_word(&wo, &inner, &cfg)?.scale(&sign(al.size()));
        let mut found = Found::default();
        found.poly(format!("alpha={al}"), &*ctx.ip.gprime(al, &cfg)?, &rhs);
        Ok(found)
    })
}

pub(crate) fn relate2(ctx: &Ctx) -> Result<Outcome> {
    let cfg = ctx.r().clone();
    let lambdas = enumerate_partitions(ctx.n(), ctx.deg());
    ctx.each(&lambdas, |la| {
        let rhs = reflect(&*ctx.ip.r_sym(la, &cfg)?, &cfg)?.scale(&sign(la.size()));
        let mut found = Found::default();
        found.poly(format!("lambda={la}"), &*ctx.ip.rprime(la, &cfg)?, &rhs);
        Ok(found)
    })
}

pub(crate) fn dom(ctx: &Ctx) -> Result<Outcome> {
    let cfg = ctx.r().clone();
    let n = ctx.n();
    let wo = Permutation::longest(n);
    let shift = &cfg.r() * &Scalar::int(n as i64 - 1);
    ctx.each(&ctx.comps(), |b| {
        let inst = format!("beta={b}");
        let mut found = Found::default();
        let (_, wb) = dominant_sort(&b.to_int());
        let (_, wneg) = dominant_sort(&b.to_int().neg_reversed());
        let conj = wo.compose(&wb).compose(&wo);
        found.fact(format!("{inst}, shortest permutation"), wneg == conj, &wneg, &conj);
        let tl = tilde(b, &cfg).coords;
        let lhs: Vec<Scalar> = tl.iter().rev().map(|x| -x).collect();
        let rhs: Vec<Scalar> = bar(&b.to_int(), &cfg).iter().map(|x| x + &shift).collect();
        for i in 0..n {
            found.scalar(format!("{inst}, coordinate {}", i + 1), &lhs[i], &rhs[i]);
        }
        Ok(found)
    })
}

pub(crate) fn sym_lemma(ctx: &Ctx) -> Result<Outcome> {
    let cfg = ctx.r().clone();
    let polys = ctx.random_polys(3);
    let idx: Vec<usize> = (0..polys.len()).collect();
    ctx.each(&idx, |&k| {
        let f = &polys[k];
        let sf = symmetrize(f, &cfg)?;
        let mut found = Found::default();
        found.fact(format!("f{k}, symmetric"), sf.is_symmetric(), &sf, "a symmetric polynomial");
        for i in 1..f.n() {
            let lhs = symmetrize(&sigma_op(i, f, &cfg)?, &cfg)?;
            found.poly(format!("f{k}, S sigma_{i}"), &lhs, &sf);
        }
        Ok(found)
    })
}

pub(crate) fn symm_lemma(ctx: &Ctx) -> Result<Outcome> {
    let cfg = ctx.ra();
    let n = ctx.n();
    ctx.each(&ctx.comps(), |al| {
        let inst = format!("alpha={al}");
        let la = al.dominant();
        let g = ctx.ip.g(al, &cfg)?;
        let gp = ctx.ip.gprime(al, &cfg)?;
        let rl = ctx.ip.r_sym(&la, &cfg)?;
        let rp = ctx.ip.rprime(&la, &cfg)?;
        ctx.over_a(&cfg, &inst, 0, |_| Ok(true), |acfg, found| {
            let a = acfg.a();
            let pt = act_a(&base_point(n, acfg), &a, acfg);
            let (g_at, r_at) = (g.evaluate(&pt)?, rl.evaluate(&pt)?);
            let lhs = symmetrize(&g.shift_vars(&a)?, acfg)?.scale(&r_at);
            let rhs = rl.shift_vars(&a)?.scale(&g_at);
            found.poly(format!("{inst}, part 1"), &lhs, &rhs);
            let lhs = symmetrize(&gp, acfg)?.scale(&r_at);
            let rhs = rp.scale(&g_at);
            found.poly(format!("{inst}, part 2"), &lhs, &rhs);
            Ok(())
        })
    })
}

pub(crate) fn sym_binomial_oo(ctx: &Ctx) -> Result<Outcome> {
    let cfg = ctx.r().clone();
    let n = ctx.n();
    let lambdas = enumerate_partitions(n, ctx.deg());
    let top = |m: &Composition| -> Result<LaurentPoly> {
        ctx.ip.r_sym(m, &cfg)?.top_part(m.size() as i64)
    };
    ctx.each(&lambdas, |la| {
        let inst = format!("lambda={la}");
        let pl = top(la)?;
        let terms = partitions_below(la)?
            .iter()
            .map(|m| {
                let pm = top(m)?;
                let at_one = pm.evaluate(&ones(n))?;
                Ok((ctx.ip.binom_sym(la, m, &cfg)?, pm, at_one))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut found = Found::default();
        compare_cleared(&mut found, &inst, &pl.shift_vars(&Scalar::one())?, &pl.evaluate(&ones(n))?, &terms)?;
        Ok(found)
    })
}

pub(crate) fn jack_eval_one(ctx: &Ctx) -> Result<Outcome> {
    let cfg = ctx.r().clone();
    ctx.each(&ctx.comps(), |al| {
        let e_at = ctx.ip.e(al, &cfg)?.evaluate(&ones(al.n()))?;
        let mut found = Found::default();
        found.scalar(format!("alpha={al}"), &(&closed_d(al, &cfg) * &e_at), &closed_e(al, &cfg));
        Ok(found)
    })
}

pub(crate) fn binom_sum_support(ctx: &Ctx) -> Result<Outcome> {
    let cfgs = [ctx.qt().inverted(), ctx.r().clone()];
    let all = ctx.comps();
    ctx.each(&all, |al| {
        let mut found = Found::default();
        for b in &all {
            if contains(al, b)? {
                continue;
            }
            for cfg in &cfgs {
                let v = ctx.ip.binom(al, b, cfg)?;
                let label = match crate::interpolation::kind(cfg) {
                    Kind::Qt => "1/q,1/t",
                    Kind::R => "r",
                };
                found.scalar(format!("alpha={al}, beta={b}, {label}"), &v, &Scalar::zero());
            }
        }
        Ok(found)
    })
}
