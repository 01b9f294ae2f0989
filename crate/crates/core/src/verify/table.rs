//! The theorem table: one checkable clause per identifier.

use crate::decomp::{decompose, decompose_crisp_via_lift_at, lift_reducedness, project_level};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::lattice::Level;
use crate::lcore::{has_sup_property, intersect_many, Ideal, LRing, LSubset};

use super::{Context, Instance, Outcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arity {
    /// One ideal `eta`.
    Single,
    /// Two ideals `eta`, `theta`.
    Pair,
}

/// A hypothesis checked before a clause is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gate {
    Chain,
    Heyting,
    /// `eta != mu`
    NotMu,
    /// `eta(0) < mu(0)`
    ZeroBelowMu,
    Prime,
    Primary,
    /// `eta` has the sup property
    Sup,
    /// `eta(0) = theta(0)`
    SameZero,
    /// `eta ⊆ theta`
    Contained,
}

impl Gate {
    pub fn reason(self) -> &'static str {
        match self {
            Gate::Chain => "chain hypothesis",
            Gate::Heyting => "Heyting hypothesis",
            Gate::NotMu => "eta equals mu",
            Gate::ZeroBelowMu => "eta(0) not below mu(0)",
            Gate::Prime => "eta not prime",
            Gate::Primary => "eta not primary",
            Gate::Sup => "eta lacks sup property",
            Gate::SameZero => "eta(0) differs from theta(0)",
            Gate::Contained => "eta not contained in theta",
        }
    }

    fn holds(self, inst: &Instance) -> bool {
        let lr = inst.lring();
        let eta = &inst.eta;
        match self {
            Gate::Chain => lr.lattice().is_chain(),
            Gate::Heyting => lr.lattice().is_complete_heyting(),
            Gate::NotMu => !lr.is_mu(eta),
            Gate::ZeroBelowMu => {
                let z = lr.ring().zero();
                lr.lattice().lt(eta.get(z), lr.mu().get(z))
            }
            Gate::Prime => lr.is_prime(eta),
            Gate::Primary => lr.is_primary(eta),
            Gate::Sup => has_sup_property(lr.lattice(), eta),
            Gate::SameZero => {
                let z = lr.ring().zero();
                inst.theta.as_ref().is_some_and(|th| th.get(z) == eta.get(z))
            }
            Gate::Contained => inst.theta.as_ref().is_some_and(|th| lr.contained(eta, th)),
        }
    }
}

/// `Ok(None)` when the clause holds, `Ok(Some(witness))` when it fails.
type Check = fn(&Context, &Ideal, Option<&Ideal>) -> Result<Option<String>>;

pub struct Theorem {
    pub id: &'static str,
    pub statement: &'static str,
    pub arity: Arity,
    pub gates: &'static [Gate],
    check: Check,
}

use Arity::{Pair, Single};
use Gate::*;

pub static THEOREMS: &[Theorem] = &[
    Theorem {
        id: "T1.7",
        statement: "η is an ideal of μ iff each non-empty level subset η_a is an ideal of μ_a",
        arity: Single,
        gates: &[],
        check: t1_7,
    },
    Theorem {
        id: "L1.11",
        statement: "η + θ is an ideal of μ and η ⊆ η + θ, θ ⊆ η + θ",
        arity: Pair,
        gates: &[SameZero],
        check: l1_11,
    },
    Theorem {
        id: "L2.3",
        statement: "ξ(x) = μ(x) ∧ η(0) is a prime ideal of μ with η ⊆ ξ",
        arity: Single,
        gates: &[ZeroBelowMu],
        check: l2_3,
    },
    Theorem {
        id: "T2.4",
        statement: "P(η)(0) = η(0)",
        arity: Single,
        gates: &[],
        check: t2_4,
    },
    Theorem {
        id: "T2.6",
        statement: "a prime ideal of μ is a semiprime ideal of μ",
        arity: Single,
        gates: &[Prime],
        check: t2_6,
    },
    Theorem {
        id: "T2.9",
        statement: "√η ⊆ S(η) ⊆ μ",
        arity: Single,
        gates: &[],
        check: t2_9,
    },
    Theorem {
        id: "T2.10",
        statement: "√η ⊆ S(η) ⊆ P(η) ⊆ μ",
        arity: Single,
        gates: &[],
        check: t2_10,
    },
    Theorem {
        id: "T2.10.ii",
        statement: "if η ⊆ θ, then P(η) ⊆ P(θ)",
        arity: Pair,
        gates: &[Contained],
        check: t2_10_ii,
    },
    Theorem {
        id: "T2.10.iii",
        statement: "P(η ∩ θ) ⊆ P(η) ∩ P(θ)",
        arity: Pair,
        gates: &[],
        check: t2_10_iii,
    },
    Theorem {
        id: "T2.11",
        statement: "ideal η of μ is a semiprime ideal of μ if and only if √η = η",
        arity: Single,
        gates: &[NotMu],
        check: t2_11,
    },
    Theorem {
        id: "T2.12",
        statement: "the intersection of a family of semiprime ideals of μ is a semiprime ideal of μ",
        arity: Single,
        gates: &[],
        check: t2_12,
    },
    Theorem {
        id: "T2.13",
        statement: "P(P(η)) = P(η) = √P(η)",
        arity: Single,
        gates: &[],
        check: t2_13,
    },
    Theorem {
        id: "T2.14",
        statement: "√η is an ideal of μ",
        arity: Single,
        gates: &[Heyting],
        check: t2_14,
    },
    Theorem {
        id: "T2.15",
        statement: "η ⊆ θ ⇒ √η ⊆ √θ",
        arity: Pair,
        gates: &[Heyting, Contained],
        check: t2_15,
    },
    Theorem {
        id: "T2.16",
        statement: "P(√η) = P(η)",
        arity: Single,
        gates: &[Heyting],
        check: t2_16,
    },
    Theorem {
        id: "T2.17",
        statement: "P(√η + √θ) = P(√(η+θ))",
        arity: Pair,
        gates: &[Heyting, SameZero],
        check: t2_17,
    },
    Theorem {
        id: "T2.19",
        statement: "η is a primary ideal of μ iff each non-empty η_t is μ_t or a primary ideal of μ_t",
        arity: Single,
        gates: &[NotMu],
        check: t2_19,
    },
    Theorem {
        id: "T2.20",
        statement: "√η is a prime ideal of μ",
        arity: Single,
        gates: &[Primary, Sup],
        check: t2_20,
    },
    Theorem {
        id: "T2.21",
        statement: "P(η) = √η = S(η)",
        arity: Single,
        gates: &[Primary, Sup],
        check: t2_21,
    },
    Theorem {
        id: "C2.22",
        statement: "the intersection of all prime ideals of μ containing η is a prime ideal of μ",
        arity: Single,
        gates: &[Primary, Sup],
        check: c2_22,
    },
    Theorem {
        id: "T2.23",
        statement: "P(η) = η = √η = S(η)",
        arity: Single,
        gates: &[Prime],
        check: t2_23,
    },
    Theorem {
        id: "T2.24",
        statement: "P(S(η)) = P(η) = S(P(η))",
        arity: Single,
        gates: &[],
        check: t2_24,
    },
    Theorem {
        id: "T2.25",
        statement: "P(P(η) + P(θ)) = P(η + θ)",
        arity: Pair,
        gates: &[SameZero],
        check: t2_25,
    },
    Theorem {
        id: "C2.26",
        statement: "√(η+θ) ⊆ √(P(η) + P(θ))",
        arity: Pair,
        gates: &[Heyting, SameZero],
        check: c2_26,
    },
    Theorem {
        id: "L3.4",
        statement: "each non-empty strong level subset η_t^> is an ideal of the subring μ_t^>",
        arity: Single,
        gates: &[Chain],
        check: l3_4,
    },
    Theorem {
        id: "T3.5",
        statement: "η has a primary decomposition in μ",
        arity: Single,
        gates: &[Chain, NotMu],
        check: t3_5,
    },
    Theorem {
        id: "L3.7",
        statement: "each non-empty η_t^> equals μ_t^> or is a primary ideal of the subring μ_t^>",
        arity: Single,
        gates: &[Chain, Primary],
        check: l3_7,
    },
    Theorem {
        id: "L3.8",
        statement: "(η ∩ θ)_t^> = η_t^> ∩ θ_t^> for all t",
        arity: Pair,
        gates: &[Chain],
        check: l3_8,
    },
    Theorem {
        id: "T3.9",
        statement: "each non-empty η_t^> ≠ μ_t^> has a primary decomposition in the subring μ_t^>",
        arity: Single,
        gates: &[Chain, NotMu],
        check: t3_9,
    },
    Theorem {
        id: "L3.11",
        statement: "(η ∩ θ)_t = η_t ∩ θ_t for all t",
        arity: Pair,
        gates: &[],
        check: l3_11,
    },
    Theorem {
        id: "T3.12",
        statement: "each ideal of a subring of R has a primary decomposition in the subring",
        arity: Single,
        gates: &[Chain],
        check: t3_12,
    },
    Theorem {
        id: "L3.15",
        statement: "(√η)_t = √(η_t) ∩ μ_t for all t",
        arity: Single,
        gates: &[Sup],
        check: l3_15,
    },
    Theorem {
        id: "T3.16",
        statement: "η_1 ∩ ... ∩ η_k is a reduced primary decomposition of η",
        arity: Single,
        gates: &[Chain, NotMu],
        check: t3_16,
    },
    Theorem {
        id: "C3.17",
        statement: "the ideal η_{t0} of R has a primary decomposition in R, reduced when the factors' cuts are",
        arity: Single,
        gates: &[Chain, NotMu],
        check: c3_17,
    },
];

pub fn theorem_ids() -> Vec<&'static str> {
    THEOREMS.iter().map(|t| t.id).collect()
}

pub fn lookup(id: &str) -> Result<&'static Theorem> {
    THEOREMS
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| Error::UnknownTheorem {
            id: id.to_string(),
            valid: theorem_ids().join(", "),
        })
}

/// Evaluates one clause on one instance. With `gated`, an instance that
/// misses a hypothesis is skipped; otherwise the clause is evaluated anyway.
pub fn check_theorem(id: &str, inst: &Instance, gated: bool) -> Result<Outcome> {
    let th = lookup(id)?;
    let shape_ok = match th.arity {
        Single => inst.theta.is_none(),
        Pair => inst.theta.is_some(),
    };
    if !shape_ok {
        return Ok(Outcome::Skip("wrong instance shape".into()));
    }
    if gated {
        if let Some(g) = th.gates.iter().find(|g| !g.holds(inst)) {
            return Ok(Outcome::Skip(g.reason().into()));
        }
    }
    Ok(match (th.check)(&inst.ctx, &inst.eta, inst.theta.as_ref()) {
        Ok(None) => Outcome::Pass,
        Ok(Some(w)) => Outcome::Fail(w),
        Err(e @ (Error::CapExceeded { .. } | Error::NoDecomposition(_))) => Outcome::Skip(e.to_string()),
        Err(e @ (Error::Hypothesis(_) | Error::SumZeroMismatch(..))) if !gated => {
            Outcome::Skip(format!("not computable: {e}"))
        }
        Err(e) => Outcome::Fail(e.to_string()),
    })
}

// ---- witnesses

fn not_subset(lr: &LRing, a_name: &str, a: &LSubset, b_name: &str, b: &LSubset) -> Option<String> {
    let (l, r) = (lr.lattice(), lr.ring());
    (0..r.len()).find(|&x| !l.leq(a.get(x), b.get(x))).map(|x| {
        format!(
            "{a_name} ⊄ {b_name} at {}: {} vs {}",
            r.label(x),
            l.label(a.get(x)),
            l.label(b.get(x))
        )
    })
}

fn not_equal(lr: &LRing, a_name: &str, a: &LSubset, b_name: &str, b: &LSubset) -> Option<String> {
    let (l, r) = (lr.lattice(), lr.ring());
    (0..r.len()).find(|&x| a.get(x) != b.get(x)).map(|x| {
        format!(
            "{a_name} ≠ {b_name} at {}: {} vs {}",
            r.label(x),
            l.label(a.get(x)),
            l.label(b.get(x))
        )
    })
}

fn first<const N: usize>(items: [Option<String>; N]) -> Option<String> {
    items.into_iter().flatten().next()
}

fn theta(th: Option<&Ideal>) -> &Ideal {
    th.expect("pair clause called without theta")
}

// ---- clauses

fn t1_7(c: &Context, eta: &Ideal, _: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let by_def = lr.ideal_violation(eta).is_none();
    let by_levels = lr.is_ideal_by_levels(eta);
    Ok((!by_def || !by_levels).then(|| format!("pointwise definition: {by_def}, level criterion: {by_levels}")))
}

fn l1_11(c: &Context, eta: &Ideal, th: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let th = theta(th);
    let sum = match lr.sum(eta, th) {
        Ok(s) => s,
        Err(Error::NotIdeal(why)) => return Ok(Some(format!("eta + theta is not an ideal: {why}"))),
        Err(e) => return Err(e),
    };
    Ok(first([
        not_subset(lr, "eta", eta, "eta + theta", &sum),
        not_subset(lr, "theta", th, "eta + theta", &sum),
    ]))
}

fn l2_3(c: &Context, eta: &Ideal, _: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let xi = lr.lift_xi(eta)?;
    if !lr.is_prime(&xi) {
        return Ok(Some(format!("xi = [{}] is not prime", lr.format(&xi))));
    }
    Ok(not_subset(lr, "eta", eta, "xi", &xi))
}

fn t2_4(c: &Context, eta: &Ideal, _: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let z = lr.ring().zero();
    let p = c.p(eta)?;
    Ok((p.get(z) != eta.get(z)).then(|| {
        let l = lr.lattice();
        format!("P(eta)(0) = {}, eta(0) = {}", l.label(p.get(z)), l.label(eta.get(z)))
    }))
}

fn t2_6(c: &Context, eta: &Ideal, _: Option<&Ideal>) -> Result<Option<String>> {
    Ok((!c.lring.is_semiprime(eta)).then(|| "prime but not semiprime".to_string()))
}

fn t2_9(c: &Context, eta: &Ideal, _: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let rad = c.rad(eta).value;
    let s = c.s(eta)?;
    Ok(first([
        not_subset(lr, "√eta", &rad, "S(eta)", &s),
        not_subset(lr, "S(eta)", &s, "mu", lr.mu()),
    ]))
}

fn t2_10(c: &Context, eta: &Ideal, _: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let rad = c.rad(eta).value;
    let (s, p) = (c.s(eta)?, c.p(eta)?);
    Ok(first([
        not_subset(lr, "√eta", &rad, "S(eta)", &s),
        not_subset(lr, "S(eta)", &s, "P(eta)", &p),
        not_subset(lr, "P(eta)", &p, "mu", lr.mu()),
    ]))
}

fn t2_10_ii(c: &Context, eta: &Ideal, th: Option<&Ideal>) -> Result<Option<String>> {
    let (pe, pt) = (c.p(eta)?, c.p(theta(th))?);
    Ok(not_subset(&c.lring, "P(eta)", &pe, "P(theta)", &pt))
}

fn t2_10_iii(c: &Context, eta: &Ideal, th: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let th = theta(th);
    let both = lr.intersect_ideals(&[eta, th])?;
    let lhs = c.p(&both)?;
    let rhs = lr.meet(&*c.p(eta)?, &*c.p(th)?);
    Ok(not_subset(lr, "P(eta ∩ theta)", &lhs, "P(eta) ∩ P(theta)", &rhs))
}

fn t2_11(c: &Context, eta: &Ideal, _: Option<&Ideal>) -> Result<Option<String>> {
    let semi = c.lring.is_semiprime(eta);
    let fixed = c.rad(eta).value == *eta.as_subset();
    Ok((semi != fixed).then(|| format!("semiprime: {semi}, √eta = eta: {fixed}")))
}

fn t2_12(c: &Context, eta: &Ideal, _: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let s = c.s(eta)?;
    // S(eta) = mu exactly when no semiprime ideal contains eta
    Ok((!lr.is_mu(&s) && !lr.is_semiprime(&s)).then(|| format!("S(eta) = [{}] is not semiprime", lr.format(&s))))
}

fn t2_13(c: &Context, eta: &Ideal, _: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let p = c.p(eta)?;
    let pp = c.p(&p)?;
    let rp = c.rad(&p).value;
    Ok(first([
        not_equal(lr, "P(P(eta))", &pp, "P(eta)", &p),
        not_equal(lr, "√P(eta)", &rp, "P(eta)", &p),
    ]))
}

fn t2_14(c: &Context, eta: &Ideal, _: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let rad = c.rad(eta).value;
    Ok(lr
        .ideal_violation(&rad)
        .map(|why| format!("√eta is not an ideal: {why}")))
}

fn t2_15(c: &Context, eta: &Ideal, th: Option<&Ideal>) -> Result<Option<String>> {
    let (re, rt) = (c.rad(eta).value, c.rad(theta(th)).value);
    Ok(not_subset(&c.lring, "√eta", &re, "√theta", &rt))
}

fn t2_16(c: &Context, eta: &Ideal, _: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let re = c.rad_ideal(eta)?;
    let (pr, p) = (c.p(&re)?, c.p(eta)?);
    let rp = c.rad(&p).value;
    Ok(first([
        not_equal(lr, "P(√eta)", &pr, "P(eta)", &p),
        not_equal(lr, "√P(eta)", &rp, "P(eta)", &p),
    ]))
}

fn t2_17(c: &Context, eta: &Ideal, th: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let th = theta(th);
    let rsum = lr.sum(&c.rad_ideal(eta)?, &c.rad_ideal(th)?)?;
    let sum = lr.sum(eta, th)?;
    let lhs = c.p(&rsum)?;
    let p_sum = c.p(&sum)?;
    let p_rad_sum = c.p(&c.rad_ideal(&sum)?)?;
    Ok(first([
        not_equal(lr, "P(√eta + √theta)", &lhs, "P(eta + theta)", &p_sum),
        not_equal(lr, "P(√eta + √theta)", &lhs, "P(√(eta + theta))", &p_rad_sum),
    ]))
}

fn t2_19(c: &Context, eta: &Ideal, _: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let pointwise = lr.is_primary_pointwise(eta);
    let levels = lr.is_primary_by_levels(eta);
    Ok((pointwise != levels).then(|| format!("pointwise: {pointwise}, levels: {levels}")))
}

fn t2_20(c: &Context, eta: &Ideal, _: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let rad = c.rad(eta);
    if !rad.is_ideal {
        return Ok(Some("√eta is not an ideal".into()));
    }
    Ok((!lr.is_prime(&rad.value)).then(|| format!("√eta = [{}] is not prime", lr.format(&rad.value))))
}

fn t2_21(c: &Context, eta: &Ideal, _: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let (p, s) = (c.p(eta)?, c.s(eta)?);
    let rad = c.rad(eta).value;
    Ok(first([
        not_equal(lr, "P(eta)", &p, "√eta", &rad),
        not_equal(lr, "√eta", &rad, "S(eta)", &s),
    ]))
}

fn c2_22(c: &Context, eta: &Ideal, _: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let p = c.p(eta)?;
    Ok((!lr.is_prime(&p)).then(|| format!("P(eta) = [{}] is not prime", lr.format(&p))))
}

fn t2_23(c: &Context, eta: &Ideal, _: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let (p, s) = (c.p(eta)?, c.s(eta)?);
    let rad = c.rad(eta).value;
    Ok(first([
        not_equal(lr, "P(eta)", &p, "eta", eta),
        not_equal(lr, "√eta", &rad, "eta", eta),
        not_equal(lr, "S(eta)", &s, "eta", eta),
    ]))
}

fn t2_24(c: &Context, eta: &Ideal, _: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let (p, s) = (c.p(eta)?, c.s(eta)?);
    let (ps, sp) = (c.p(&s)?, c.s(&p)?);
    Ok(first([
        not_equal(lr, "P(S(eta))", &ps, "P(eta)", &p),
        not_equal(lr, "S(P(eta))", &sp, "P(eta)", &p),
    ]))
}

fn t2_25(c: &Context, eta: &Ideal, th: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let th = theta(th);
    let psum = lr.sum(&c.p(eta)?, &c.p(th)?)?;
    let p_psum = c.p(&psum)?;
    let p_sum = c.p(&lr.sum(eta, th)?)?;
    Ok(first([
        not_subset(lr, "P(eta) + P(theta)", &psum, "P(P(eta) + P(theta))", &p_psum),
        not_equal(lr, "P(P(eta) + P(theta))", &p_psum, "P(eta + theta)", &p_sum),
    ]))
}

fn c2_26(c: &Context, eta: &Ideal, th: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let th = theta(th);
    let sum = lr.sum(eta, th)?;
    let r_sum = c.rad(&sum).value;
    let r_psum = c.rad(&lr.sum(&c.p(eta)?, &c.p(th)?)?).value;
    let p_sum = c.p(&sum)?;
    Ok(first([
        not_subset(lr, "√(eta + theta)", &r_sum, "√(P(eta) + P(theta))", &r_psum),
        not_subset(lr, "√(P(eta) + P(theta))", &r_psum, "P(eta + theta)", &p_sum),
    ]))
}

fn levels(lr: &LRing) -> Vec<Level> {
    lr.lattice().levels().collect()
}

fn l3_4(c: &Context, eta: &Ideal, _: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    for t in levels(lr) {
        let cut = lr.strong_cut(eta, t);
        if cut.is_empty() {
            continue;
        }
        let parent = lr.strong_cut(lr.mu(), t);
        if let Some(why) = lr.ring().ideal_violation(cut, parent) {
            return Ok(Some(format!("strong cut at {}: {why}", lr.lattice().label(t))));
        }
    }
    Ok(None)
}

fn l3_7(c: &Context, eta: &Ideal, _: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    for t in levels(lr) {
        let cut = lr.strong_cut(eta, t);
        let parent = lr.strong_cut(lr.mu(), t);
        if cut.is_empty() || cut == parent {
            continue;
        }
        if !lr.ring().is_primary_in(cut, parent)? {
            return Ok(Some(format!(
                "strong cut {} at {} is not primary in {}",
                lr.format_set(cut),
                lr.lattice().label(t),
                lr.format_set(parent)
            )));
        }
    }
    Ok(None)
}

fn cut_intersection(c: &Context, eta: &Ideal, th: Option<&Ideal>, strong: bool) -> Result<Option<String>> {
    let lr = &c.lring;
    let th = theta(th);
    let both = intersect_many(lr.lattice(), &[eta.as_subset(), th.as_subset()])?;
    let cut = |f: &LSubset, t| {
        if strong {
            lr.strong_cut(f, t)
        } else {
            lr.level_cut(f, t)
        }
    };
    for t in levels(lr) {
        let lhs = cut(&both, t);
        let rhs = cut(eta, t).intersection(cut(th, t));
        if lhs != rhs {
            return Ok(Some(format!(
                "at {}: {} vs {}",
                lr.lattice().label(t),
                lr.format_set(lhs),
                lr.format_set(rhs)
            )));
        }
    }
    Ok(None)
}

fn l3_8(c: &Context, eta: &Ideal, th: Option<&Ideal>) -> Result<Option<String>> {
    cut_intersection(c, eta, th, true)
}

fn l3_11(c: &Context, eta: &Ideal, th: Option<&Ideal>) -> Result<Option<String>> {
    cut_intersection(c, eta, th, false)
}

fn t3_5(c: &Context, eta: &Ideal, _: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let dec = decompose(lr, eta)?;
    for f in &dec.factors {
        if !lr.is_primary(f) {
            return Ok(Some(format!("factor [{}] is not primary", lr.format(f))));
        }
    }
    let subsets: Vec<&LSubset> = dec.factors.iter().map(|f| f.as_subset()).collect();
    let meet = intersect_many(lr.lattice(), &subsets)?;
    Ok(not_equal(lr, "∩ factors", &meet, "eta", eta))
}

fn t3_9(c: &Context, eta: &Ideal, _: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let dec = decompose(lr, eta)?;
    for t in levels(lr) {
        let cut = lr.strong_cut(eta, t);
        if cut.is_empty() || cut == lr.strong_cut(lr.mu(), t) {
            continue;
        }
        if let Err(e) = project_level(lr, &dec, t, true) {
            return Ok(Some(format!("strong cut at {}: {e}", lr.lattice().label(t))));
        }
    }
    Ok(None)
}

fn crisp_decomposes(lr: &LRing, ideals: &[ElemSet], target: ElemSet, parent: ElemSet) -> Result<Option<String>> {
    let meet = ideals.iter().fold(parent, |acc, &c| acc.intersection(c));
    if ideals.is_empty() || meet != target {
        return Ok(Some(format!(
            "factors intersect to {} instead of {}",
            lr.format_set(meet),
            lr.format_set(target)
        )));
    }
    for &i in ideals {
        if !lr.ring().is_primary_in(i, parent)? {
            return Ok(Some(format!(
                "{} is not primary in {}",
                lr.format_set(i),
                lr.format_set(parent)
            )));
        }
    }
    Ok(None)
}

fn t3_12(c: &Context, eta: &Ideal, _: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let l = lr.lattice();
    let (r, t1) = (l.bottom(), l.top());
    for t in levels(lr) {
        let (cut, parent) = (lr.level_cut(eta, t), lr.level_cut(lr.mu(), t));
        if cut.is_empty() || cut == parent {
            continue;
        }
        let ideals = decompose_crisp_via_lift_at(lr.ring_arc().clone(), lr.lattice_arc().clone(), cut, parent, r, t1)?;
        if let Some(w) = crisp_decomposes(lr, &ideals, cut, parent)? {
            return Ok(Some(format!("cut at {}: {w}", l.label(t))));
        }
    }
    Ok(None)
}

fn l3_15(c: &Context, eta: &Ideal, _: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let r = lr.ring();
    let rad = c.rad(eta).value;
    for t in levels(lr) {
        let cut = lr.level_cut(eta, t);
        let crisp = ElemSet::from_elems((0..r.len()).filter(|&x| !r.powers(x).intersection(cut).is_empty()));
        let rhs = crisp.intersection(lr.level_cut(lr.mu(), t));
        let lhs = lr.level_cut(&rad, t);
        if lhs != rhs {
            return Ok(Some(format!(
                "at {}: (√eta)_t = {} but √(eta_t) ∩ mu_t = {}",
                lr.lattice().label(t),
                lr.format_set(lhs),
                lr.format_set(rhs)
            )));
        }
    }
    Ok(None)
}

/// Cuts the decomposition of `eta` at `t`; if the cut is a decomposition
/// keeping every factor, the factors have the sup property and the cut
/// decomposition is reduced, the decomposition must be reduced.
fn reduced_at(lr: &LRing, dec: &crate::decomp::Decomposition, t: Level) -> Result<Option<String>> {
    let label = lr.lattice().label(t);
    if let Err(e) = project_level(lr, dec, t, false) {
        return Ok(Some(format!("cut at {label}: {e}")));
    }
    if !dec.factors.iter().all(|f| has_sup_property(lr.lattice(), f)) {
        return Ok(None);
    }
    match lift_reducedness(lr, dec, t) {
        Ok(_) | Err(Error::Hypothesis(_)) => Ok(None),
        Err(e) => Ok(Some(format!("at {label}: {e}"))),
    }
}

fn t3_16(c: &Context, eta: &Ideal, _: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let dec = decompose(lr, eta)?;
    for t in levels(lr) {
        let cut = lr.level_cut(eta, t);
        if cut.is_empty() || cut == lr.level_cut(lr.mu(), t) {
            continue;
        }
        if let Some(w) = reduced_at(lr, &dec, t)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn c3_17(c: &Context, eta: &Ideal, _: Option<&Ideal>) -> Result<Option<String>> {
    let lr = &c.lring;
    let t0 = lr.mu_floor();
    let cut = lr.level_cut(eta, t0);
    if cut.is_empty() || cut == lr.ring().elements() {
        return Ok(None);
    }
    let dec = decompose(lr, eta)?;
    reduced_at(lr, &dec, t0)
}
