//! One line per acceptance criterion, exact equality throughout.
//! Runs as a plain binary so the lines are always shown.

use std::time::{Duration, Instant};

use binomsum::exact::{rat, Rat};
use binomsum::hypergeom::{
    chu_vandermonde, dixon_check, gessel_stanton_check, second_proof_chain, transform_3f2_check,
    whipple_check,
};
use binomsum::identities::theorem1::{
    lhs_theorem1, rhs_theorem1, single_sum_k, telescope_certificate, telescoped_total,
};
use binomsum::identities::{alpha_samples, doub_xab_check, eval_identity, theorem3_certify, ParamSet};
use binomsum::series::{
    f_coefficients_check, f_paths_agree, g_r_check, middle_gf_check, pde_check, remark_check,
    revert_u, reversion_holds, routine_identity_check,
};
use binomsum::sweep::{default_plan, run_sweep, write_report, Outcome, SweepResult};
use binomsum::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        ok,
        detail: detail.into(),
    }
}

/// Counts per outcome for the given ids, plus the offending records.
fn tally(res: &SweepResult, ids: &[&str]) -> (usize, usize, Vec<String>) {
    let (mut pass, mut skip, mut bad) = (0, 0, Vec::new());
    for r in res.records.iter().filter(|r| ids.contains(&r.identity.as_str())) {
        match &r.outcome {
            Outcome::Pass(_) => pass += 1,
            Outcome::Skip(_) => skip += 1,
            _ => bad.push(r.to_text()),
        }
    }
    (pass, skip, bad)
}

fn describe_bad(bad: &[String]) -> String {
    match bad.first() {
        Some(first) => format!("{} bad, first: {first}", bad.len()),
        None => String::new(),
    }
}

fn c1_theorem1(res: &SweepResult) -> Verdict {
    let start = Instant::now();
    let mut cells = 0;
    for alpha in alpha_samples() {
        for m in 0..=30 {
            for n in 0..=30 {
                if m == 0 && n == 0 {
                    continue;
                }
                let lhs = lhs_theorem1(m, n, &alpha);
                let ok = rhs_theorem1(m, n, &alpha).is_ok_and(|rhs| rhs == lhs)
                    && single_sum_k(m, n, &alpha) == lhs;
                if !ok {
                    return verdict(false, format!("mismatch at m={m} n={n} alpha={alpha}"));
                }
                cells += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    let (pass, skip, bad) = tally(res, &["thm1", "kxyalpha", "telescope"]);
    let skips_ok = skip == 3 * alpha_samples().len();
    verdict(
        bad.is_empty() && skips_ok && elapsed < Duration::from_secs(60),
        format!(
            "{cells} cells in {:.1}s single-threaded; sweep {pass} pass, {skip} degenerate skips {}",
            elapsed.as_secs_f64(),
            describe_bad(&bad)
        ),
    )
}

fn c2_s3_s4(res: &SweepResult) -> Verdict {
    let (pass, skip, bad) = tally(res, &["S3", "S4"]);
    let anchor = eval_identity("S4", &ParamSet::new().m(3).n(3))
        .is_ok_and(|r| r.equal && r.lhs_value == Rat::one());
    verdict(
        bad.is_empty() && skip == 0 && pass == 40 * 40 + 39 * 39 && anchor,
        format!("{pass} pass, S4(3,3) lhs = 1: {anchor} {}", describe_bad(&bad)),
    )
}

fn c3_theorem2(res: &SweepResult) -> Verdict {
    let (pass, skip, bad) = tally(res, &["thm2"]);
    let want = 21 * 21 * 6 * alpha_samples().len();
    verdict(
        bad.is_empty() && skip == 0 && pass == want,
        format!("{pass}/{want} pass {}", describe_bad(&bad)),
    )
}

fn c4_telescoping() -> Verdict {
    let mut certs = 0;
    for alpha in alpha_samples() {
        for m in 1..=25 {
            for n in 1..=25 {
                for k in 0..=m.min(n) {
                    if !telescope_certificate(m, n, &alpha, k).unwrap_or(false) {
                        return verdict(false, format!("certificate fails at m={m} n={n} k={k} alpha={alpha}"));
                    }
                    certs += 1;
                }
                let total = telescoped_total(m, n, &alpha).ok();
                if total.is_none() || total != rhs_theorem1(m, n, &alpha).ok() {
                    return verdict(false, format!("telescoped total differs at m={m} n={n} alpha={alpha}"));
                }
            }
        }
    }
    verdict(true, format!("{certs} certificates, totals match closed form"))
}

fn c5_series() -> Verdict {
    let start = Instant::now();
    let fail = |what: String| verdict(false, what);
    for alpha in alpha_samples() {
        let t = revert_u(&alpha, 16).expect("alpha != 0");
        if !reversion_holds(&alpha, &t) {
            return fail(format!("reversion at alpha={alpha}"));
        }
        if !remark_check(&alpha, 16).unwrap_or(false) {
            return fail(format!("remark coefficients at alpha={alpha}"));
        }
        if !f_coefficients_check(&alpha, 12).unwrap_or(false) || !f_paths_agree(&alpha, 12).unwrap_or(false) {
            return fail(format!("F coefficients at alpha={alpha}"));
        }
        for r in 0..=3 {
            if !g_r_check(&alpha, r, 8).unwrap_or(false) {
                return fail(format!("G_r at alpha={alpha} r={r}"));
            }
        }
        if !middle_gf_check(&alpha, 3, 8).unwrap_or(false) {
            return fail(format!("middle kernels at alpha={alpha}"));
        }
        if !pde_check(&alpha, 8).unwrap_or(false) {
            return fail(format!("pde at alpha={alpha}"));
        }
        for r in 0..=4 {
            if !routine_identity_check(&alpha, r).unwrap_or(false) {
                return fail(format!("polynomial identity at alpha={alpha} r={r}"));
            }
        }
    }
    let elapsed = start.elapsed();
    verdict(
        elapsed < Duration::from_secs(120),
        format!("all series checks for {} alphas in {:.1}s", alpha_samples().len(), elapsed.as_secs_f64()),
    )
}

fn gs_grid() -> Vec<(Rat, Rat)> {
    let bs = [
        rat(1, 2), rat(2, 1), rat(3, 7), rat(7, 11), rat(5, 3), rat(-2, 5),
        rat(9, 4), rat(11, 7), rat(13, 5), rat(-7, 3), rat(4, 9),
    ];
    let ss = [
        rat(1, 3), rat(2, 1), rat(-3, 4), rat(5, 7), rat(7, 11), rat(3, 2),
        rat(-5, 9), rat(4, 1), rat(1, 5), rat(8, 3), rat(-11, 13),
    ];
    bs.iter().flat_map(|b| ss.iter().map(move |s| (b.clone(), s.clone()))).collect()
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=7))
}

fn c6_hypergeometric() -> Verdict {
    let mut notes = Vec::new();

    // Gessel-Stanton: every grid point must be pole-free and hold.
    let grid = gs_grid();
    let mut min_valid = usize::MAX;
    for n in 0..=15 {
        let mut valid = 0;
        for (b, s) in &grid {
            match gessel_stanton_check(n, b, s) {
                Ok(true) => valid += 1,
                Ok(false) => return verdict(false, format!("Gessel-Stanton fails N={n} b={b} s={s}")),
                Err(_) => {}
            }
        }
        min_valid = min_valid.min(valid);
    }
    if min_valid < 100 {
        return verdict(false, format!("Gessel-Stanton grid too thin: {min_valid} valid points"));
    }
    notes.push(format!("GS >= {min_valid} pts/N"));

    // 3F2 transformation on seeded random points with valid lower parameters.
    let mut rng = ChaCha8Rng::seed_from_u64(0x3f2);
    let mut done = 0;
    while done < 200 {
        let n = rng.gen_range(0..=8);
        let (a, b, d, e) = (random_rat(&mut rng), random_rat(&mut rng), random_rat(&mut rng), random_rat(&mut rng));
        let low = &b - &e - n + 1;
        if [&d, &e, &low].iter().any(|p| p.is_nonpositive_integer()) {
            continue;
        }
        if !transform_3f2_check(n, &a, &b, &d, &e).unwrap_or(false) {
            return verdict(false, format!("transformation fails N={n} a={a} b={b} d={d} e={e}"));
        }
        done += 1;
    }
    notes.push("3F2 200 pts".into());

    // Chu-Vandermonde: closed form and series agree (mismatch is an error).
    let params = [rat(1, 2), rat(-3, 4), rat(5, 3), rat(7, 2), rat(2, 9), rat(-11, 5), rat(3, 1)];
    let mut chu = 0;
    for n in 0..=20 {
        for b in &params {
            for c in &params {
                match chu_vandermonde(n, b, c) {
                    Ok(_) => chu += 1,
                    Err(Error::LowerParamPole { .. }) => {}
                    Err(e) => return verdict(false, format!("Chu-Vandermonde N={n} b={b} c={c}: {e}")),
                }
            }
        }
    }
    notes.push(format!("Chu {chu} pts"));

    // Hypergeometric route to Theorem 1.
    let (mut chain_ok, mut poles) = (0, 0);
    for alpha in alpha_samples() {
        for m in 1..=12 {
            for n in 1..=12 {
                match second_proof_chain(m, n, &alpha) {
                    Ok(v) if rhs_theorem1(m, n, &alpha).ok() == Some(v.clone()) => chain_ok += 1,
                    Err(Error::PipelinePole(_)) => poles += 1,
                    other => return verdict(false, format!("chain m={m} n={n} alpha={alpha}: {other:?}")),
                }
            }
        }
    }
    notes.push(format!("chain {chain_ok} ok/{poles} poles"));

    // Dixon and Whipple at half-integer parameters; invalid tuples (gamma
    // poles in the numerator, lower-parameter poles) are excluded.
    let halves: Vec<Rat> = (-8..=8).map(|k| rat(k, 2)).collect();
    let (mut dixon, mut whipple) = (0, 0);
    for a in (-8..=6).map(Rat::from) {
        for b in &halves {
            for c in &halves {
                match dixon_check(&a, b, c) {
                    Ok(true) => dixon += 1,
                    Ok(false) => return verdict(false, format!("Dixon fails at ({a}, {b}, {c})")),
                    Err(_) => {}
                }
            }
        }
    }
    for a in (-6..=-1).map(Rat::from) {
        for c in &halves {
            for d in (-3..=6).map(Rat::from) {
                match whipple_check(&a, c, &d) {
                    Ok(true) => whipple += 1,
                    Ok(false) => return verdict(false, format!("Whipple fails at ({a}, {c}, {d})")),
                    Err(_) => {}
                }
            }
        }
    }
    notes.push(format!("Dixon {dixon}, Whipple {whipple}"));
    verdict(dixon >= 25 && whipple >= 25, notes.join("; "))
}

const COROLLARY_IDS: &[&str] = &[
    "cor1", "cor1-exchanged", "chu-full", "chu-negative", "chu-reflected", "cor1-pochhammer",
    "cor2", "cor3", "pqrsum", "pm-r-1", "pm-r-2", "pm-r-3", "cor4", "cor5", "cor6", "cor5-r2",
    "cor5-r1", "cor6-r1",
];

fn c7_corollaries(res: &SweepResult) -> Verdict {
    let (pass, skip, bad) = tally(res, COROLLARY_IDS);
    // Only the range-split steps have a restricted domain.
    let stray_skips = res
        .records
        .iter()
        .filter(|r| matches!(r.outcome, Outcome::Skip(_)))
        .filter(|r| COROLLARY_IDS.contains(&r.identity.as_str()))
        .any(|r| r.identity != "pm-r-2" && r.identity != "pm-r-3");
    let cor7 = eval_identity("cor7", &ParamSet::new().m(3).n(4).r(2)).is_ok_and(|r| r.equal);
    verdict(
        bad.is_empty() && !stray_skips && cor7,
        format!("{pass} pass, {skip} range-split cells outside r+1 <= min(qm,pn) {}", describe_bad(&bad)),
    )
}

fn c8_theorem3(res: &SweepResult) -> Verdict {
    let xs = [Rat::zero(), Rat::one(), rat(5, 2)];
    for m in 1..=10 {
        for n in 1..=10 {
            if !theorem3_certify(m, n).unwrap_or(false) {
                return verdict(false, format!("certification fails m={m} n={n}"));
            }
            if let Some(x) = xs.iter().find(|x| !doub_xab_check(m, n, x)) {
                return verdict(false, format!("doubled identity fails m={m} n={n} x={x}"));
            }
        }
    }
    let (pass, _, bad) = tally(res, &["thm3", "doub-xab"]);
    verdict(bad.is_empty(), format!("100 certifications, {pass} sweep cells {}", describe_bad(&bad)))
}

fn render(res: &SweepResult) -> Vec<u8> {
    let mut buf = Vec::new();
    write_report(res, binomsum::sweep::OutputFormat::Json, false, &mut buf).expect("in-memory write");
    buf
}

fn main() {
    let serial = run_sweep(&default_plan().with_threads(1)).expect("thread pool");
    let parallel = run_sweep(&default_plan().with_threads(8)).expect("thread pool");
    let (a, b) = (render(&serial), render(&parallel));
    let c9 = verdict(
        a == b,
        format!("{} bytes, {} records, jobs 1 vs jobs 8 identical: {}", a.len(), serial.records.len(), a == b),
    );

    let results = [
        c1_theorem1(&serial),
        c2_s3_s4(&serial),
        c3_theorem2(&serial),
        c4_telescoping(),
        c5_series(),
        c6_hypergeometric(),
        c7_corollaries(&serial),
        c8_theorem3(&serial),
        c9,
    ];
    let mut all = true;
    for (i, v) in results.iter().enumerate() {
        println!("criterion {} {}: {}", i + 1, if v.ok { "pass" } else { "FAIL" }, v.detail.trim_end());
        all &= v.ok;
    }
    if !all {
        std::process::exit(1);
    }
}
