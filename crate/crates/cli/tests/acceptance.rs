//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::{Command, Output};
use std::time::Instant;

use binomac::identities::{run_check, CheckConfig, CheckReport, Certification};
use binomac::{Composition, FieldConfig, Interpolator, LaurentPoly, Scalar, Variant};

type Verdict = Result<String, String>;

const DESK: [usize; 3] = [1, 2, 3];

fn comp(parts: &[u32]) -> Composition {
    Composition::new(parts.to_vec()).unwrap()
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_binomac"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).env_remove("CACHE_DIR").output().expect("binary runs")
}

/// Run the given catalog entries at every desk size and summarize.
fn catalog_gate(ip: &Interpolator, ids: &[&str], extra: impl Fn(&CheckReport) -> Option<String>) -> Verdict {
    let mut runs = 0;
    let mut instances = 0;
    for &n in &DESK {
        let cfg = CheckConfig::desk(n, 0);
        for id in ids {
            let report = run_check(id, &cfg, ip, false).map_err(|e| format!("{id} at n={n}: {e}"))?;
            if !report.passed() {
                let f = &report.failures[0];
                return Err(format!(
                    "{id} at n={n}: {} failures, first {}: {} != {}",
                    report.failures.len(),
                    f.instance,
                    f.lhs,
                    f.rhs
                ));
            }
            if let Some(problem) = extra(&report) {
                return Err(format!("{id} at n={n}: {problem}"));
            }
            runs += 1;
            instances += report.instances;
        }
    }
    Ok(format!("{runs} runs, {instances} instances, 0 failures"))
}

fn criterion_1() -> Verdict {
    let ip = Interpolator::new();
    let start = Instant::now();
    let summary = catalog_gate(&ip, &["recur-oracle-qt", "recur-oracle-r"], |_| None)?;
    let secs = start.elapsed().as_secs_f64();
    if secs >= 60.0 {
        return Err(format!("{summary}, but took {secs:.1} s (target < 60 s)"));
    }
    Ok(format!("{summary} in {secs:.1} s"))
}

fn criterion_2(ip: &Interpolator) -> Verdict {
    let qt = FieldConfig::symbolic(Variant::QT);
    let r = FieldConfig::symbolic(Variant::R);
    let q = qt.q();
    let x = LaurentPoly::var(1, 0);
    for k in 0..=4u32 {
        let mut want = LaurentPoly::one(1);
        for i in 0..k {
            let root = LaurentPoly::constant(1, q.pow(i as i64).unwrap());
            want = want.mul(&x.sub(&root));
        }
        let got = ip.g(&comp(&[k]), &qt).map_err(|e| e.to_string())?;
        if *got != want {
            return Err(format!("G_{k} = {got}, expected {want}"));
        }
        for j in 0..=k {
            let mut gauss = Scalar::one();
            for i in 0..j {
                let top = &Scalar::one() - &q.pow((k - i) as i64).unwrap();
                let bottom = &Scalar::one() - &q.pow((i + 1) as i64).unwrap();
                gauss = &gauss * &top.checked_div(&bottom).unwrap();
            }
            let got = ip.binom(&comp(&[k]), &comp(&[j]), &qt).map_err(|e| e.to_string())?;
            if got != gauss {
                return Err(format!("[{k} over {j}]_(q,t) = {got}, expected {gauss}"));
            }
            let choose = (0..j).fold(1i64, |acc, i| acc * (k - i) as i64 / (i + 1) as i64);
            let got = ip.binom(&comp(&[k]), &comp(&[j]), &r).map_err(|e| e.to_string())?;
            if got != Scalar::int(choose) {
                return Err(format!("[{k} over {j}]_r = {got}, expected {choose}"));
            }
        }
    }
    Ok("G_k for k <= 4, Gaussian and ordinary binomials for 0 <= j <= k <= 4".into())
}

fn criterion_3(ip: &Interpolator) -> Verdict {
    let summary = catalog_gate(ip, &["eval-qt", "eval-r"], |rep| match (&rep.id[..], &rep.certification) {
        ("eval-qt", Certification::Sampled { max_points }) if *max_points == rep.config.deg as usize + 2 => None,
        ("eval-r", Certification::Symbolic) => None,
        (_, c) => Some(format!("unexpected certification {c:?}")),
    })?;
    // G_(0,1)(a tau) = t^-1 (a - 1)
    let cfg = FieldConfig::symbolic(Variant::QTA);
    let (a, t) = (cfg.a(), cfg.t());
    let g = ip.g(&comp(&[0, 1]), &cfg).map_err(|e| e.to_string())?;
    let tau = binomac::shapes::tau(2, &cfg);
    let point: Vec<Scalar> = tau.iter().map(|x| &a * x).collect();
    let got = g.evaluate(&point).map_err(|e| e.to_string())?;
    let want = &t.inv().unwrap() * &(&a - &Scalar::one());
    if got != want {
        return Err(format!("G_(0,1)(a tau) = {got}, expected {want}"));
    }
    Ok(format!("{summary}; G_(0,1)(a tau) = {got}"))
}

fn criterion_6(ip: &Interpolator) -> Verdict {
    let summary = catalog_gate(ip, &["oko-qt", "oko-r"], |_| None)?;
    let cfg = FieldConfig::symbolic(Variant::QTA);
    let a = cfg.a();
    let o = ip.okounkov(&comp(&[1]), &cfg).map_err(|e| e.to_string())?;
    let x = LaurentPoly::var(1, 0);
    let want = x
        .scale(&a)
        .sub(&LaurentPoly::one(1))
        .div_scalar(&(&a - &Scalar::one()))
        .map_err(|e| e.to_string())?;
    if *o != want {
        return Err(format!("O_1 = {o}, expected {want}"));
    }
    Ok(format!("{summary}; O_1 = {o}"))
}

fn criterion_8() -> Verdict {
    let args = ["check", "all", "--n", "2", "--deg", "3", "--seed", "42", "--json"];
    let first = run(&args);
    let second = run(&args);
    if first.status.code() != Some(0) {
        return Err(format!("first run exited with {:?}", first.status.code()));
    }
    if first.stdout != second.stdout {
        return Err("the two JSON reports differ".into());
    }
    let lines = first.stdout.split(|&b| b == b'\n').filter(|l| !l.is_empty()).count();
    Ok(format!("{lines} report lines, {} bytes, byte-identical", first.stdout.len()))
}

fn criterion_9() -> Verdict {
    let cases: [(&[&str], &str); 3] = [
        (&["check", "eval-qt", "--n", "2", "--q", "1"], "(1) and (0)"),
        (&["compute", "G", "--alpha", "1,0", "--q", "1", "--t", "3"], "(1) and (0)"),
        (&["check", "binom-qt", "--n", "2", "--deg", "3", "--q", "2", "--t", "1/2"], "coincide"),
    ];
    let mut seen = Vec::new();
    for (args, needle) in cases {
        let out = run(args);
        let stderr = String::from_utf8_lossy(&out.stderr).into_owned();
        let stdout = String::from_utf8_lossy(&out.stdout).into_owned();
        if out.status.code() != Some(3) {
            return Err(format!("{args:?} exited with {:?}", out.status.code()));
        }
        if !stderr.contains(needle) && !stdout.contains(needle) {
            return Err(format!("{args:?} did not name the instance: {stderr}"));
        }
        if stdout.contains("PASS") {
            return Err(format!("{args:?} printed a result despite the collision"));
        }
        seen.push(stderr.trim().to_string());
    }
    Ok(format!("exit 3: {}", seen.join(" | ")))
}

fn main() {
    let ip = Interpolator::new();
    let structural = [
        "inva", "zerosp", "derecur", "derecur2", "discr-qt", "discr-r", "dom", "sym-lemma", "symm-lemma",
        "relate", "relate2", "cor-rel", "jack-eval-one", "vanish-extra", "spectral-closed-form",
        "hecke-quadratic", "hecke-braid", "sigma-braid", "binom-sum-support",
    ];
    let binomials = ["binom-qt", "binom-r", "binom-sym-r", "cor-first", "cor-gprime", "cor-las", "cor-plus"];
    let gates: Vec<(&str, Box<dyn Fn() -> Verdict>)> = vec![
        ("oracle equivalence", Box::new(criterion_1)),
        ("n=1 closed forms", Box::new(|| criterion_2(&ip))),
        ("evaluation formulas", Box::new(|| criterion_3(&ip))),
        ("eigen-equations", Box::new(|| catalog_gate(&ip, &["eigen-qt", "eigen-r"], |_| None))),
        ("binomial formulas", Box::new(|| catalog_gate(&ip, &binomials, |_| None))),
        ("reciprocity", Box::new(|| criterion_6(&ip))),
        ("structural lemmas", Box::new(|| catalog_gate(&ip, &structural, |_| None))),
        ("determinism", Box::new(criterion_8)),
        ("robustness", Box::new(criterion_9)),
    ];
    let mut failed = 0;
    for (i, (name, gate)) in gates.iter().enumerate() {
        let start = Instant::now();
        let verdict = gate();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail} [{secs:.1} s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {detail} [{secs:.1} s]", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", gates.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", gates.len());
}
