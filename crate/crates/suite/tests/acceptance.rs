//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::sync::Arc;

use lring_core::decomp::{crisp_is_reduced, decompose, decompose_crisp_via_lift, project_level};
use lring_core::finring::DEFAULT_DECOMPOSITION_CAP;
use lring_core::fixtures::{setup_b, z12_three_level};
use lring_core::lcore::intersect_many;
use lring_core::verify::{
    check_theorem, generate_instances, ideal_characterization_agreement, run_suite, GenParams, Instance, MuMode,
    Outcome, Sampling,
};
use lring_core::{ElemSet, FiniteLattice, FiniteRing, LRing, LSubset};

const SUITE: &[&str] = &[
    "T2.4",
    "T2.6",
    "T2.9",
    "T2.10",
    "T2.10.ii",
    "T2.10.iii",
    "T2.11",
    "T2.12",
    "T2.13",
    "T2.14",
    "T2.15",
    "T2.16",
    "T2.17",
    "T2.19",
    "T2.20",
    "T2.21",
    "C2.22",
    "T2.23",
    "T2.24",
    "T2.25",
    "C2.26",
    "L3.15",
];

fn params(rings: &[&str], lattices: &[&str], mu: MuMode) -> GenParams {
    GenParams {
        rings: rings.iter().map(|s| s.to_string()).collect(),
        lattices: lattices.iter().map(|s| s.to_string()).collect(),
        mu,
        sampling: Sampling::Exhaustive,
        ..GenParams::default()
    }
}

fn criterion_one() -> Vec<Instance> {
    generate_instances(&params(&["Z2", "Z3", "Z4", "Z6"], &["chain2", "chain3"], MuMode::Top)).unwrap()
}

fn criterion_two() -> Vec<Instance> {
    generate_instances(&params(&["Z4"], &["chain3"], MuMode::All)).unwrap()
}

/// `(passed, detail)`
type Verdict = (bool, String);

type Criterion = (&'static str, fn() -> Verdict);

fn suite_verdict(instances: &[Instance], ids: &[&str]) -> Verdict {
    let report = run_suite(instances, ids, true).unwrap();
    let failing: Vec<String> = report
        .theorems
        .iter()
        .filter(|t| !t.passed())
        .map(|t| {
            let (i, w) = &t.failures[0];
            format!(
                "{} x{} (first: {}: {w})",
                t.id,
                t.failures.len(),
                instances[*i].describe()
            )
        })
        .collect();
    let detail = format!(
        "{} instances, {} checks, {} failures, {} skips{}",
        instances.len(),
        report.checked(),
        report.failures(),
        report.skipped(),
        if failing.is_empty() {
            String::new()
        } else {
            format!("; failing: {}", failing.join("; "))
        }
    );
    (report.failures() == 0, detail)
}

fn c1() -> Verdict {
    suite_verdict(&criterion_one(), SUITE)
}

fn c2() -> Verdict {
    let insts = criterion_two();
    let mus = {
        let mut v: Vec<&str> = insts.iter().map(|i| i.ctx.label.as_str()).collect();
        v.dedup();
        v.len()
    };
    let (ok, detail) = suite_verdict(&insts, SUITE);
    (ok, format!("{mus} L-subrings; {detail}"))
}

fn c3() -> Verdict {
    let mut insts = criterion_one();
    insts.extend(criterion_two());
    let mut candidates = 0u64;
    let mut bad = Vec::new();
    let mut seen = Vec::new();
    for inst in insts.iter().filter(|i| i.theta.is_none()) {
        if !seen.contains(&inst.ctx.label) {
            seen.push(inst.ctx.label.clone());
            let a = ideal_characterization_agreement(inst.lring()).unwrap();
            candidates += a.candidates;
            bad.extend(
                a.disagreements
                    .iter()
                    .map(|f| format!("ideal {}: {}", inst.ctx.label, inst.lring().format(f))),
            );
        }
    }
    let singles: Vec<&Instance> = insts.iter().filter(|i| i.theta.is_none()).collect();
    let mut primary_checks = 0;
    let mut strong_checks = 0;
    for inst in &singles {
        for (id, count) in [("T2.19", &mut primary_checks), ("L3.7", &mut strong_checks)] {
            match check_theorem(id, inst, true).unwrap() {
                Outcome::Pass => *count += 1,
                Outcome::Fail(w) => bad.push(format!("{id} {}: {w}", inst.describe())),
                Outcome::Skip(_) => {}
            }
        }
    }
    (
        bad.is_empty(),
        format!(
            "{candidates} candidate L-subsets, {primary_checks} primary and {strong_checks} strong-cut comparisons, {} disagreements{}",
            bad.len(),
            bad.first().map(|b| format!(" (first: {b})")).unwrap_or_default()
        ),
    )
}

fn c4() -> Verdict {
    let mut bad = Vec::new();
    let mut ok_count = 0;
    let mut unavailable = 0;
    for inst in generate_instances(&GenParams {
        pairs: false,
        ..params(&["Z6", "Z12"], &["chain2", "chain3"], MuMode::Top)
    })
    .unwrap()
    {
        let lr = inst.lring();
        if lr.is_mu(&inst.eta) {
            continue;
        }
        let dec = match decompose(lr, &inst.eta) {
            Ok(d) => d,
            Err(_) => {
                unavailable += 1;
                continue;
            }
        };
        let subsets: Vec<&LSubset> = dec.factors.iter().map(|f| f.as_subset()).collect();
        let meet = intersect_many(lr.lattice(), &subsets).unwrap();
        if meet != *inst.eta.as_subset() || !dec.factors.iter().all(|f| lr.is_primary(f)) {
            bad.push(inst.describe());
        } else {
            ok_count += 1;
        }
    }
    let b = setup_b();
    let dec_b = decompose(&b.lring, &b.eta).unwrap();
    let b_ok = dec_b.factors.len() == 2 && dec_b.reduced.reduced;
    let (lr, eta) = z12_three_level();
    let dec = decompose(&lr, &eta).unwrap();
    let subsets: Vec<&LSubset> = dec.factors.iter().map(|f| f.as_subset()).collect();
    let z12_ok = intersect_many(lr.lattice(), &subsets).unwrap() == *eta.as_subset();
    (
        bad.is_empty() && b_ok && z12_ok,
        format!(
            "{ok_count} round trips, {unavailable} unavailable, {} mismatches; Setup B: {} factors, reduced {}; Z12 three-level identity {}",
            bad.len(),
            dec_b.factors.len(),
            dec_b.reduced.reduced,
            z12_ok
        ),
    )
}

fn c5() -> Verdict {
    let chain2 = Arc::new(FiniteLattice::from_name("chain2").unwrap());
    let mut compared = 0;
    let mut bad = Vec::new();
    for name in ["Z4", "Z6", "Z12", "Z2xZ2"] {
        let ring = Arc::new(FiniteRing::from_name(name).unwrap());
        let whole = ring.elements();
        for i in ring.ideals().into_iter().filter(|&i| i != whole) {
            let oracle = ring
                .primary_decomposition_in(i, whole, DEFAULT_DECOMPOSITION_CAP)
                .unwrap()
                .unwrap();
            let lifted = decompose_crisp_via_lift(ring.clone(), chain2.clone(), i, whole);
            let same = lifted.as_ref().is_ok_and(|l| {
                let mut a = l.clone();
                let mut b = oracle.clone();
                a.sort_by(ElemSet::canonical_cmp);
                b.sort_by(ElemSet::canonical_cmp);
                a == b
            });
            compared += 1;
            if !same {
                bad.push(format!("{name} {}: {lifted:?} vs {oracle:?}", ring.format_set(i)));
            }
        }
    }
    (
        bad.is_empty(),
        format!(
            "{compared} proper ideals, {} mismatches{}",
            bad.len(),
            bad.first().map(|b| format!(" ({b})")).unwrap_or_default()
        ),
    )
}

fn c6() -> Verdict {
    let one = criterion_one();
    let (ok_a, da) = suite_verdict(&one, &["T2.13", "T2.16"]);
    let mut all = one;
    all.extend(criterion_two());
    let (ok_b, db) = suite_verdict(&all, &["T2.4"]);
    (
        ok_a && ok_b,
        format!("T2.13/T2.16: {da}; T2.4 incl. non-constant mu: {db}"),
    )
}

fn c7() -> Verdict {
    let mut lrings: Vec<(LRing, Vec<lring_core::Ideal>)> = Vec::new();
    for p in [
        params(&["Z2", "Z3", "Z4", "Z6", "Z12"], &["chain2", "chain3"], MuMode::Top),
        params(&["Z4"], &["chain3"], MuMode::All),
    ] {
        let insts = generate_instances(&GenParams { pairs: false, ..p }).unwrap();
        for inst in insts {
            match lrings.last_mut() {
                Some((lr, v))
                    if lr.mu() == inst.lring().mu()
                        && lr.ring().name() == inst.lring().ring().name()
                        && lr.lattice().name() == inst.lring().lattice().name() =>
                {
                    v.push(inst.eta.clone())
                }
                _ => lrings.push((inst.lring().clone(), vec![inst.eta.clone()])),
            }
        }
    }
    let mut applicable = 0;
    let mut bad = Vec::new();
    for (lr, ideals) in &lrings {
        for eta in ideals.iter().filter(|e| !lr.is_mu(e)) {
            let Ok(dec) = decompose(lr, eta) else { continue };
            for t in lr.lattice().levels() {
                let Ok(proj) = project_level(lr, &dec, t, false) else {
                    continue;
                };
                if proj.kept.len() != dec.factors.len() {
                    continue;
                }
                if crisp_is_reduced(lr.ring(), &proj.ideals, proj.parent).unwrap() {
                    applicable += 1;
                    if !dec.reduced.reduced {
                        bad.push(format!("{} at {}", lr.format(eta), lr.lattice().label(t)));
                    }
                }
            }
        }
    }
    (
        bad.is_empty(),
        format!("{applicable} reduced level projections, {} disagreements", bad.len()),
    )
}

fn c8() -> Verdict {
    let dir = tempfile::tempdir().unwrap();
    let run = |k: usize, extra: &[&str]| {
        let json = dir.path().join(format!("r{k}.jsonl"));
        let mut args = vec![
            "lring",
            "verify",
            "--seed",
            "7",
            "--limit",
            "60",
            "--json",
            json.to_str().unwrap(),
        ];
        args.extend_from_slice(extra);
        let (out, _, _) = lring_cli::run_args(args);
        (out, std::fs::read(json).unwrap())
    };
    let mut same = true;
    for (k, extra) in [
        &[][..],
        &["--theorems", "T2.13"],
        &["--exhaustive", "--rings", "Z4", "--lattices", "chain3"],
    ]
    .iter()
    .enumerate()
    {
        let a = run(2 * k, extra);
        let b = run(2 * k + 1, extra);
        same &= a == b && !a.0.is_empty() && !a.1.is_empty();
    }
    (same, "3 flag sets, text and JSON reports compared byte for byte".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("exhaustive theorem suite, mu = top", c1),
        ("non-constant mu sweep over Z4, chain b<m<t", c2),
        ("characterization cross-checks", c3),
        ("decomposition round trip", c4),
        ("crisp oracle equivalence", c5),
        ("prime-radical fixed points", c6),
        ("reducedness lifting", c7),
        ("determinism", c8),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let (ok, detail) = f();
        println!(
            "criterion {} {}: {name}: {detail}",
            k + 1,
            if ok { "PASS" } else { "FAIL" }
        );
        failed += usize::from(!ok);
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
