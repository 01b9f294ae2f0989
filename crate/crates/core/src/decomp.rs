//! Primary decompositions of ideals of an L-ring.
//!
//! Over a chain, an ideal `eta` with image `t1 > t2 > ... > tn` is the
//! intersection of the two-level approximants that take value `t1` on the
//! cut `eta_{ti}` and `t(i+1)` elsewhere. Each cut `eta_{ti}` is an ideal of
//! the crisp subring `mu^>_{t(i+1)}`; a crisp primary decomposition of it
//! there lifts factor by factor to primary ideals of `mu`, and the lifted
//! factors intersect back to `eta`.
//!
//! Going the other way, cutting a decomposition at a level projects it to a
//! crisp decomposition of the cut, which is how reducedness is transported
//! from a level back up to the L-ring.

use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::finring::{FiniteRing, DEFAULT_DECOMPOSITION_CAP};
use crate::lattice::{FiniteLattice, Level};
use crate::lcore::{image, intersect_many, Ideal, LRing, LSubset};

/// Irredundancy and prime-radical evidence for a list of primary factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reducedness {
    pub reduced: bool,
    /// Indices `i` where the intersection of the other factors lies inside
    /// factor `i`.
    pub redundant: Vec<usize>,
    /// Index pairs whose factors share a prime radical.
    pub colliding: Vec<(usize, usize)>,
    pub prime_radicals: Vec<Ideal>,
}

#[derive(Debug, Clone)]
pub struct Decomposition {
    pub target: Ideal,
    pub factors: Vec<Ideal>,
    pub reduced: Reducedness,
}

/// A decomposition cut at one level: the surviving factors (those whose cut
/// differs from the cut of `mu`) as crisp primary ideals of `parent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelProjection {
    pub parent: ElemSet,
    pub kept: Vec<usize>,
    pub ideals: Vec<ElemSet>,
}

fn require_chain(lr: &LRing) -> Result<()> {
    if !lr.lattice().is_chain() {
        return Err(Error::Hypothesis("chain hypothesis required".into()));
    }
    Ok(())
}

/// Lifts a primary ideal `j` of the strong cut `mu^>_r` to the primary
/// ideal `v ∩ mu` of `mu`, where `v` is `t1` on `j` and `r` elsewhere.
pub fn lift_crisp(lr: &LRing, j: ElemSet, r: Level, t1: Level) -> Result<Ideal> {
    require_chain(lr)?;
    let l = lr.lattice();
    if !l.lt(r, t1) {
        return Err(Error::Hypothesis(format!(
            "need r < t1, got r = {} and t1 = {}",
            l.label(r),
            l.label(t1)
        )));
    }
    let parent = lr.strong_cut(lr.mu(), r);
    if parent.is_empty() || !lr.ring().is_primary_in(j, parent).unwrap_or(false) {
        return Err(Error::Hypothesis(format!(
            "{} is not a primary ideal of {}",
            lr.format_set(j),
            lr.format_set(parent)
        )));
    }
    let lifted = lift_set(lr, j, r, t1)?;
    if !lr.is_primary(&lifted) {
        return Err(Error::Inconsistent(format!(
            "lift {} is not primary",
            lr.format(&lifted)
        )));
    }
    Ok(lifted)
}

/// `v ∩ mu` with `v` equal to `t1` on `j` and `r` elsewhere.
fn lift_set(lr: &LRing, j: ElemSet, r: Level, t1: Level) -> Result<Ideal> {
    let v = LSubset::two_valued(lr.ring().len(), j, t1, r);
    lr.ideal(lr.meet(&v, lr.mu()))
}

/// Crisp primary decomposition of `target` inside `parent`, falling back to
/// decomposing in the whole ring and restricting to `parent`.
fn crisp_decomposition(ring: &FiniteRing, target: ElemSet, parent: ElemSet) -> Option<Vec<ElemSet>> {
    if let Ok(Some(dec)) = ring.primary_decomposition_in(target, parent, DEFAULT_DECOMPOSITION_CAP) {
        return Some(dec);
    }
    let whole = ring.elements();
    if target == whole || !ring.is_ideal_of(target, whole) {
        return None;
    }
    let dec = ring
        .primary_decomposition_in(target, whole, DEFAULT_DECOMPOSITION_CAP)
        .ok()??;
    ring.restrict_decomposition(&dec, parent).ok()
}

/// Builds a primary decomposition of `eta` over a chain by lifting crisp
/// decompositions of its cuts. Factors are ordered by level (highest
/// first), then in crisp-search order.
pub fn decompose(lr: &LRing, eta: &Ideal) -> Result<Decomposition> {
    require_chain(lr)?;
    if lr.is_mu(eta) {
        return Err(Error::NoDecomposition(
            "target equals mu, which is not an intersection of primary ideals".into(),
        ));
    }
    let l = lr.lattice();
    let mut levels = image(l, eta);
    levels.reverse();
    let t1 = levels[0];

    let factors = if levels.len() == 1 {
        // constant eta below mu: every cut is empty or equals mu's cut
        if !lr.is_primary(eta) {
            return Err(Error::Inconsistent(format!(
                "constant ideal {} is not primary",
                lr.format(eta)
            )));
        }
        vec![eta.clone()]
    } else {
        let mut factors = Vec::new();
        for w in levels.windows(2) {
            let (ti, next) = (w[0], w[1]);
            let target = lr.level_cut(eta, ti);
            debug_assert_eq!(target, lr.strong_cut(eta, next));
            let parent = lr.strong_cut(lr.mu(), next);
            let crisp = crisp_decomposition(lr.ring(), target, parent).ok_or_else(|| {
                Error::NoDecomposition(format!(
                    "cut {} has no primary decomposition in {} (level {})",
                    lr.format_set(target),
                    lr.format_set(parent),
                    l.label(next)
                ))
            })?;
            if crisp.is_empty() {
                // The cut is all of its parent. The approximant is then `mu`
                // capped at `t1`, whose cuts are cuts of `mu` or empty, so it
                // is primary unless it equals `mu`.
                let cap = lift_set(lr, parent, next, t1)?;
                if !lr.is_mu(&cap) {
                    if !lr.is_primary(&cap) {
                        return Err(Error::Inconsistent(format!(
                            "approximant {} is not primary",
                            lr.format(&cap)
                        )));
                    }
                    factors.push(cap);
                }
            }
            for j in crisp {
                factors.push(lift_crisp(lr, j, next, t1)?);
            }
        }
        factors
    };
    if factors.is_empty() {
        return Err(Error::Inconsistent(format!(
            "no factors produced for {}",
            lr.format(eta)
        )));
    }
    let subsets: Vec<&LSubset> = factors.iter().map(|f| f.as_subset()).collect();
    let meet = intersect_many(l, &subsets)?;
    if meet != *eta.as_subset() {
        return Err(Error::Inconsistent(format!(
            "factors intersect to {} instead of {}",
            lr.format(&meet),
            lr.format(eta)
        )));
    }
    let reduced = is_reduced(lr, &factors)?;
    Ok(Decomposition {
        target: eta.clone(),
        factors,
        reduced,
    })
}

/// Irredundancy and distinct prime radicals, with evidence.
pub fn is_reduced(lr: &LRing, factors: &[Ideal]) -> Result<Reducedness> {
    let l = lr.lattice();
    let mut redundant = Vec::new();
    for (i, fi) in factors.iter().enumerate() {
        let others: Vec<&LSubset> = factors
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, f)| f.as_subset())
            .collect();
        let rest = if others.is_empty() {
            lr.mu().clone()
        } else {
            intersect_many(l, &others)?
        };
        if lr.contained(&rest, fi) {
            redundant.push(i);
        }
    }
    let prime_radicals = factors
        .iter()
        .map(|f| lr.prime_radical(f))
        .collect::<Result<Vec<_>>>()?;
    let mut colliding = Vec::new();
    for i in 0..factors.len() {
        for j in (i + 1)..factors.len() {
            if prime_radicals[i] == prime_radicals[j] {
                colliding.push((i, j));
            }
        }
    }
    Ok(Reducedness {
        reduced: redundant.is_empty() && colliding.is_empty(),
        redundant,
        colliding,
        prime_radicals,
    })
}

impl Decomposition {
    /// Assembles a decomposition from given factors, checking that they are
    /// primary and intersect to `target`.
    pub fn from_factors(lr: &LRing, target: Ideal, factors: Vec<Ideal>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptyFamily);
        }
        for f in &factors {
            if !lr.is_primary(f) {
                return Err(Error::Hypothesis(format!("{} is not primary", lr.format(f))));
            }
        }
        let subsets: Vec<&LSubset> = factors.iter().map(|f| f.as_subset()).collect();
        if intersect_many(lr.lattice(), &subsets)? != *target.as_subset() {
            return Err(Error::Hypothesis("factors do not intersect to the target".into()));
        }
        let reduced = is_reduced(lr, &factors)?;
        Ok(Decomposition {
            target,
            factors,
            reduced,
        })
    }

    /// Greedily drops factors that contain the intersection of the others.
    /// This only removes redundancy; factors sharing a prime radical stay.
    pub fn drop_redundant(&self, lr: &LRing) -> Result<Self> {
        let mut factors = self.factors.clone();
        let mut i = 0;
        while i < factors.len() && factors.len() > 1 {
            let others: Vec<&LSubset> = factors
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, f)| f.as_subset())
                .collect();
            let rest = intersect_many(lr.lattice(), &others)?;
            if lr.contained(&rest, &factors[i]) {
                factors.remove(i);
            } else {
                i += 1;
            }
        }
        Self::from_factors(lr, self.target.clone(), factors)
    }
}

/// Cuts every factor at `t` (strong cuts if `strong`) and keeps those whose
/// cut differs from the same cut of `mu`.
pub fn project_level(lr: &LRing, dec: &Decomposition, t: Level, strong: bool) -> Result<LevelProjection> {
    if strong {
        require_chain(lr)?;
    }
    let cut = |f: &LSubset| {
        if strong {
            lr.strong_cut(f, t)
        } else {
            lr.level_cut(f, t)
        }
    };
    let label = lr.lattice().label(t);
    let target = cut(&dec.target);
    let parent = cut(lr.mu());
    if target.is_empty() {
        return Err(Error::Hypothesis(format!("cut at {label} is empty")));
    }
    if target == parent {
        return Err(Error::Hypothesis(format!("cut at {label} equals the cut of mu")));
    }
    let mut kept = Vec::new();
    let mut ideals = Vec::new();
    for (i, f) in dec.factors.iter().enumerate() {
        let c = cut(f);
        if c != parent {
            kept.push(i);
            ideals.push(c);
        }
    }
    if kept.is_empty() {
        return Err(Error::Inconsistent(format!(
            "every factor's cut at {label} equals the cut of mu"
        )));
    }
    let meet = ideals.iter().fold(parent, |acc, &c| acc.intersection(c));
    if meet != target {
        return Err(Error::Inconsistent(format!(
            "projected factors intersect to {} instead of {}",
            lr.format_set(meet),
            lr.format_set(target)
        )));
    }
    for &c in &ideals {
        if !lr.ring().is_primary_in(c, parent)? {
            return Err(Error::Inconsistent(format!(
                "projected factor {} is not primary in {}",
                lr.format_set(c),
                lr.format_set(parent)
            )));
        }
    }
    Ok(LevelProjection { parent, kept, ideals })
}

/// Crisp reducedness inside `parent`: irredundant, with pairwise distinct
/// radicals `{x ∈ parent : x^n ∈ I}`.
pub fn crisp_is_reduced(ring: &FiniteRing, ideals: &[ElemSet], parent: ElemSet) -> Result<bool> {
    for (i, &ii) in ideals.iter().enumerate() {
        let rest = ideals
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(parent, |acc, (_, &c)| acc.intersection(c));
        if rest.is_subset(ii) {
            return Ok(false);
        }
    }
    let radicals = ideals
        .iter()
        .map(|&c| ring.radical_in(c, parent))
        .collect::<Result<Vec<_>>>()?;
    let mut sorted = radicals.clone();
    sorted.sort_by(ElemSet::canonical_cmp);
    sorted.dedup();
    Ok(sorted.len() == radicals.len())
}

/// If the level-`t` projection keeps every factor and is a reduced crisp
/// decomposition, the decomposition itself must be reduced. Returns the
/// crisp verdict; disagreement with [`Decomposition::reduced`] is an error.
pub fn lift_reducedness(lr: &LRing, dec: &Decomposition, t: Level) -> Result<bool> {
    let proj = project_level(lr, dec, t, false)?;
    if proj.kept.len() != dec.factors.len() {
        let dropped: Vec<usize> = (0..dec.factors.len()).filter(|i| !proj.kept.contains(i)).collect();
        return Err(Error::Hypothesis(format!(
            "factors {dropped:?} have the same cut as mu at {}",
            lr.lattice().label(t)
        )));
    }
    let crisp = crisp_is_reduced(lr.ring(), &proj.ideals, proj.parent)?;
    if crisp && !dec.reduced.reduced {
        return Err(Error::Inconsistent(format!(
            "level {} decomposition is reduced but the decomposition is not",
            lr.lattice().label(t)
        )));
    }
    Ok(crisp)
}

/// Crisp primary decomposition of an ideal `i` of a subring `j`, obtained
/// by lifting both to two-valued L-subsets (`top` on the set, `bottom` off
/// it), decomposing there, and cutting back at `top`.
pub fn decompose_crisp_via_lift(
    ring: Arc<FiniteRing>,
    lattice: Arc<FiniteLattice>,
    i: ElemSet,
    j: ElemSet,
) -> Result<Vec<ElemSet>> {
    let (lo, hi) = (lattice.bottom(), lattice.top());
    decompose_crisp_via_lift_at(ring, lattice, i, j, lo, hi)
}

/// As [`decompose_crisp_via_lift`] with explicit levels `r < t1`.
pub fn decompose_crisp_via_lift_at(
    ring: Arc<FiniteRing>,
    lattice: Arc<FiniteLattice>,
    i: ElemSet,
    j: ElemSet,
    r: Level,
    t1: Level,
) -> Result<Vec<ElemSet>> {
    if !lattice.is_chain() {
        return Err(Error::Hypothesis("chain hypothesis required".into()));
    }
    if !lattice.lt(r, t1) {
        return Err(Error::Hypothesis("need r < t1".into()));
    }
    if !ring.is_subring(j) {
        return Err(Error::Hypothesis(format!("{} is not a subring", ring.format_set(j))));
    }
    if let Some(why) = ring.ideal_violation(i, j) {
        return Err(Error::NotCrispIdeal(why));
    }
    if i == j {
        return Err(Error::Hypothesis("ideal must be proper".into()));
    }
    let n = ring.len();
    let mu = LSubset::two_valued(n, j, t1, r);
    let lr = LRing::new(lattice, ring, mu)?;
    let eta = lr.ideal(LSubset::two_valued(n, i, t1, r))?;
    let dec = decompose(&lr, &eta)?;
    let proj = project_level(&lr, &dec, t1, false)?;
    if proj.kept.len() != dec.factors.len() {
        return Err(Error::Inconsistent("a factor's top cut equals the subring".into()));
    }
    Ok(proj.ideals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{chain2, chain3, lv, setup_a, setup_a_prime, setup_b, subset, z12_three_level, zn};

    fn set(xs: &[usize]) -> ElemSet {
        ElemSet::from_elems(xs.iter().copied())
    }

    #[test]
    fn lift_crisp_examples() {
        let b = setup_b();
        let l = b.lring.lattice();
        let (t, bo) = (l.top(), l.bottom());
        assert_eq!(lift_crisp(&b.lring, set(&[0, 2, 4]), bo, t).unwrap(), b.ind2);
        assert_eq!(lift_crisp(&b.lring, set(&[0, 3]), bo, t).unwrap(), b.ind3);
        assert!(matches!(
            lift_crisp(&b.lring, set(&[0]), bo, t),
            Err(Error::Hypothesis(_))
        ));
        assert!(matches!(
            lift_crisp(&b.lring, set(&[0, 3]), t, t),
            Err(Error::Hypothesis(_))
        ));

        let ap = setup_a_prime();
        let l = ap.lattice();
        let lifted = lift_crisp(&ap, set(&[0]), lv(l, "m"), lv(l, "t")).unwrap();
        assert_eq!(*lifted, subset(l, &["t", "m", "m", "m"]));
    }

    #[test]
    fn decompose_setup_b() {
        let b = setup_b();
        let dec = decompose(&b.lring, &b.eta).unwrap();
        assert_eq!(dec.factors.len(), 2);
        let mut got = dec.factors.clone();
        got.sort();
        let mut want = vec![b.ind2.clone(), b.ind3.clone()];
        want.sort();
        assert_eq!(got, want);
        assert!(dec.reduced.reduced);
    }

    #[test]
    fn decompose_setup_a() {
        let a = setup_a();
        let dec = decompose(&a.lring, &a.eta0).unwrap();
        assert_eq!(dec.factors, vec![a.eta0.clone()]);
        assert!(dec.reduced.reduced);
        assert!(matches!(
            decompose(&a.lring, &a.lring.mu_ideal()),
            Err(Error::NoDecomposition(_))
        ));
    }

    #[test]
    fn decompose_three_levels() {
        let (lr, eta) = z12_three_level();
        let dec = decompose(&lr, &eta).unwrap();
        let subsets: Vec<&LSubset> = dec.factors.iter().map(|f| f.as_subset()).collect();
        assert_eq!(intersect_many(lr.lattice(), &subsets).unwrap(), *eta);
        assert_eq!(dec.factors.len(), 4);
        for f in &dec.factors {
            assert!(lr.is_primary(f));
        }
    }

    #[test]
    fn cut_equal_to_parent() {
        // eta = [m, b, b, b] under mu = [t, b, b, b]: the only cut below the
        // top value is {0} inside mu^>_b = {0}
        let l = chain3();
        let lr = LRing::new(l.clone(), zn(4), subset(&l, &["t", "b", "b", "b"])).unwrap();
        let eta = lr.ideal(subset(&l, &["m", "b", "b", "b"])).unwrap();
        let dec = decompose(&lr, &eta).unwrap();
        assert_eq!(dec.factors, vec![eta.clone()]);
        assert!(dec.reduced.reduced);
    }

    #[test]
    fn decompose_needs_chain() {
        let l = Arc::new(FiniteLattice::m3());
        let lr = LRing::constant_top(l.clone(), zn(4));
        let eta = lr.ideal(LSubset::constant(4, l.bottom())).unwrap();
        assert_eq!(
            decompose(&lr, &eta).unwrap_err(),
            Error::Hypothesis("chain hypothesis required".into())
        );
    }

    #[test]
    fn projections() {
        let b = setup_b();
        let dec = decompose(&b.lring, &b.eta).unwrap();
        let l = b.lring.lattice();
        let mut p = project_level(&b.lring, &dec, l.top(), false).unwrap().ideals;
        p.sort_by(ElemSet::canonical_cmp);
        assert_eq!(p, vec![set(&[0, 3]), set(&[0, 2, 4])]);
        let mut p = project_level(&b.lring, &dec, l.bottom(), true).unwrap().ideals;
        p.sort_by(ElemSet::canonical_cmp);
        assert_eq!(p, vec![set(&[0, 3]), set(&[0, 2, 4])]);
        assert!(project_level(&b.lring, &dec, l.bottom(), false).is_err());

        let a = setup_a();
        let dec = decompose(&a.lring, &a.eta0).unwrap();
        let p = project_level(&a.lring, &dec, a.lring.lattice().top(), false).unwrap();
        assert_eq!(p.ideals, vec![set(&[0])]);
    }

    #[test]
    fn reducedness() {
        let b = setup_b();
        let dec = decompose(&b.lring, &b.eta).unwrap();
        assert!(is_reduced(&b.lring, &dec.factors).unwrap().reduced);

        let a = setup_a();
        let r = is_reduced(&a.lring, &[a.eta2.clone(), a.eta2.clone()]).unwrap();
        assert!(!r.reduced);
        assert_eq!(r.colliding, vec![(0, 1)]);
        assert_eq!(r.redundant, vec![0, 1]);

        let r = is_reduced(&a.lring, &[a.eta0.clone(), a.eta2.clone()]).unwrap();
        assert!(!r.reduced);
        assert_eq!(r.redundant, vec![1]);
    }

    #[test]
    fn drop_redundant_factor() {
        let a = setup_a();
        let dec = Decomposition::from_factors(&a.lring, a.eta0.clone(), vec![a.eta0.clone(), a.eta2.clone()]).unwrap();
        let trimmed = dec.drop_redundant(&a.lring).unwrap();
        assert_eq!(trimmed.factors, vec![a.eta0.clone()]);
        assert!(trimmed.reduced.reduced);
    }

    #[test]
    fn reducedness_lifts() {
        let b = setup_b();
        let dec = decompose(&b.lring, &b.eta).unwrap();
        let t = b.lring.lattice().top();
        assert!(lift_reducedness(&b.lring, &dec, t).unwrap());

        // the meet of mu is t here, so the same check covers the floor level
        assert_eq!(b.lring.mu_floor(), t);

        let a = setup_a();
        let dec = decompose(&a.lring, &a.eta0).unwrap();
        assert!(lift_reducedness(&a.lring, &dec, a.lring.lattice().top()).unwrap());
    }

    #[test]
    fn crisp_bridge() {
        let l = chain2();
        let z6 = zn(6);
        let mut got = decompose_crisp_via_lift(z6.clone(), l.clone(), set(&[0]), z6.elements()).unwrap();
        got.sort_by(ElemSet::canonical_cmp);
        assert_eq!(got, vec![set(&[0, 3]), set(&[0, 2, 4])]);

        let got = decompose_crisp_via_lift(z6.clone(), l.clone(), set(&[0]), set(&[0, 2, 4])).unwrap();
        assert_eq!(got, vec![set(&[0])]);

        let z12 = zn(12);
        let got = decompose_crisp_via_lift(z12.clone(), l.clone(), set(&[0]), z12.elements()).unwrap();
        let direct = z12
            .primary_decomposition_in(set(&[0]), z12.elements(), DEFAULT_DECOMPOSITION_CAP)
            .unwrap()
            .unwrap();
        assert_eq!(got, direct);
        assert_eq!(got, vec![set(&[0, 4, 8]), set(&[0, 3, 6, 9])]);
    }
}
