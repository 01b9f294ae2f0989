use lring_core::decomp::decompose as build_decomposition;
use lring_core::lcore::has_sup_property;
use lring_core::lcore::DEFAULT_ENUMERATION_CAP;
use lring_core::verify::{
    generate_instances, render_jsonl, render_text, run_suite, theorem_ids, GenParams, MuMode, Sampling,
};

use crate::instance::InstanceFile;
use crate::{CliError, MuArg, Target, VerifyArgs};

fn yes_no(b: bool, yes: &str, no: &str) -> String {
    if b {
        yes.to_string()
    } else {
        no.to_string()
    }
}

pub fn validate(inst: &InstanceFile) -> Result<String, CliError> {
    let lr = &inst.lring;
    let (l, r) = (lr.lattice(), lr.ring());
    let class = l.classify();
    let mut out = format!(
        "lattice {}: {}, {}\n",
        l.name(),
        yes_no(class.is_chain, "chain", "not a chain"),
        yes_no(class.is_complete_heyting, "Heyting", "not Heyting")
    );
    out.push_str(&format!("ring {}: {} elements\n", r.name(), r.len()));
    out.push_str(&format!("mu: {}\n", lr.format(lr.mu())));
    for (name, eta) in &inst.ideals {
        let mut props = vec!["ideal".to_string()];
        props.push(yes_no(lr.is_prime(eta), "prime", "not prime"));
        props.push(yes_no(lr.is_semiprime(eta), "semiprime", "not semiprime"));
        props.push(yes_no(lr.is_primary(eta), "primary", "not primary"));
        if !has_sup_property(l, eta) {
            props.push("no sup property".into());
        }
        out.push_str(&format!("{name}: {}\n", props.join(", ")));
    }
    for (a, b) in &inst.pairs {
        let (x, y) = (inst.ideal(a)?, inst.ideal(b)?);
        let z = r.zero();
        out.push_str(&format!(
            "pair ({a}, {b}): {}\n",
            yes_no(x.get(z) == y.get(z), "summable", "values at 0 differ")
        ));
    }
    Ok(out)
}

pub fn compute(
    inst: &InstanceFile,
    target: Target,
    name: &str,
    other: Option<&str>,
    level: Option<&str>,
    strong: bool,
) -> Result<String, CliError> {
    let lr = &inst.lring;
    let eta = inst.ideal(name)?;
    let line = match target {
        Target::Radical => {
            let rad = lr.radical(&eta);
            let mut s = lr.format(&rad.value);
            if !rad.is_ideal {
                s.push_str("  (not an ideal of mu)");
            }
            s
        }
        Target::PrimeRadical => lr.format(&*lr.prime_radical(&eta)?),
        Target::SemiprimeRadical => lr.format(&*lr.semiprime_radical(&eta)?),
        Target::Sum => {
            let other = other.ok_or_else(|| CliError::Validation("sum needs --other".into()))?;
            lr.format(&*lr.sum(&eta, &inst.ideal(other)?)?)
        }
        Target::Cut => {
            let level = level.ok_or_else(|| CliError::Validation("cut needs --level".into()))?;
            let t = lr.lattice().level(level)?;
            let cut = if strong {
                lr.strong_cut(&eta, t)
            } else {
                lr.level_cut(&eta, t)
            };
            lr.format_set(cut)
        }
    };
    Ok(format!("{line}\n"))
}

pub fn decompose(inst: &InstanceFile, name: &str, require_reduced: bool) -> Result<(String, u8), CliError> {
    let lr = &inst.lring;
    let eta = inst.ideal(name)?;
    let dec = build_decomposition(lr, &eta)?;
    let mut out = format!("target {name}: {}\n", lr.format(&eta));
    for (i, f) in dec.factors.iter().enumerate() {
        out.push_str(&format!("factor {}: {}\n", i + 1, lr.format(f)));
    }
    // decompose has already checked the identity; report it for the reader
    let meet = lr.intersect_ideals(&dec.factors.iter().collect::<Vec<_>>())?;
    out.push_str(&format!(
        "intersection: {}\n",
        yes_no(meet == eta, "equals target", "DIFFERS from target")
    ));
    let red = &dec.reduced;
    out.push_str(&format!("reduced: {}\n", yes_no(red.reduced, "yes", "no")));
    for i in &red.redundant {
        out.push_str(&format!("  factor {} contains the intersection of the others\n", i + 1));
    }
    for (i, j) in &red.colliding {
        out.push_str(&format!("  factors {} and {} share a prime radical\n", i + 1, j + 1));
    }
    for (i, p) in red.prime_radicals.iter().enumerate() {
        out.push_str(&format!("  P(factor {}): {}\n", i + 1, lr.format(p)));
    }
    let code = if require_reduced && !red.reduced { 2 } else { 0 };
    Ok((out, code))
}

pub fn verify(args: &VerifyArgs) -> Result<(String, u8), CliError> {
    let ids: Vec<String> = match &args.theorems {
        Some(ids) => ids.clone(),
        None => theorem_ids().into_iter().map(String::from).collect(),
    };
    let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
    // reject unknown ids before generating anything
    for id in &ids {
        lring_core::verify::lookup(id)?;
    }
    let params = GenParams {
        rings: args.rings.clone(),
        lattices: args.lattices.clone(),
        mu: match args.mu {
            MuArg::Top => MuMode::Top,
            MuArg::All => MuMode::All,
        },
        sampling: if args.exhaustive {
            Sampling::Exhaustive
        } else {
            Sampling::Sampled {
                seed: args.seed,
                limit: args.limit,
            }
        },
        cap: args.cap.unwrap_or(DEFAULT_ENUMERATION_CAP),
        pairs: !args.no_pairs,
    };
    let instances = generate_instances(&params)?;
    let report = run_suite(&instances, &ids, !args.no_hypothesis_gate)?;
    let mode = if args.exhaustive {
        "exhaustive".to_string()
    } else {
        format!("seed {} limit {}", args.seed, args.limit)
    };
    let mut out = format!(
        "verify: rings {} lattices {} mu {:?} {mode} gate {}; {} instances\n",
        args.rings.join(","),
        args.lattices.join(","),
        args.mu,
        yes_no(args.no_hypothesis_gate, "off", "on"),
        instances.len()
    );
    out.push_str(&render_text(&report, &instances));
    if let Some(path) = &args.json {
        std::fs::write(path, render_jsonl(&report))
            .map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))?;
    }
    Ok((out, if report.failures() > 0 { 3 } else { 0 }))
}
