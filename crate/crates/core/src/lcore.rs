//! L-subsets of a finite ring and the L-ring object model.
//!
//! An [`LSubset`] assigns a lattice value to every ring element. An
//! [`LRing`] is a validated L-subring `mu`; an [`Ideal`] is an L-subset
//! validated as an ideal of a particular `mu`. Validation of ideals runs two
//! independent characterizations (the pointwise inequalities and the
//! level-cut criterion) and treats disagreement as an internal error.

use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use itertools::Itertools;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::finring::FiniteRing;
use crate::lattice::{FiniteLattice, Level};

/// Default limit on the number of candidate L-subsets a family sweep may
/// visit.
pub const DEFAULT_ENUMERATION_CAP: u128 = 2_000_000;

/// A total function from ring elements (by index) to lattice elements.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LSubset(Vec<Level>);

impl LSubset {
    pub fn new(values: Vec<Level>) -> Self {
        LSubset(values)
    }

    pub fn constant(len: usize, value: Level) -> Self {
        LSubset(vec![value; len])
    }

    /// `hi` on `set`, `lo` elsewhere.
    pub fn two_valued(len: usize, set: ElemSet, hi: Level, lo: Level) -> Self {
        LSubset((0..len).map(|x| if set.contains(x) { hi } else { lo }).collect())
    }

    #[inline]
    pub fn get(&self, x: usize) -> Level {
        self.0[x]
    }

    pub fn values(&self) -> &[Level] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn set(&mut self, x: usize, value: Level) {
        self.0[x] = value;
    }
}

impl fmt::Debug for LSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().map(|l| l.0).format(", "))
    }
}

fn same_carrier(f: &LSubset, g: &LSubset) -> Result<()> {
    if f.len() != g.len() {
        return Err(Error::CarrierMismatch {
            expected: f.len(),
            found: g.len(),
        });
    }
    Ok(())
}

/// Pointwise `f <= g`.
pub fn contained(lattice: &FiniteLattice, f: &LSubset, g: &LSubset) -> bool {
    f.len() == g.len() && f.0.iter().zip(&g.0).all(|(&a, &b)| lattice.leq(a, b))
}

/// `{x : f(x) >= a}`.
pub fn level_cut(lattice: &FiniteLattice, f: &LSubset, a: Level) -> ElemSet {
    ElemSet::from_elems((0..f.len()).filter(|&x| lattice.leq(a, f.get(x))))
}

/// `{x : f(x) > a}`.
pub fn strong_cut(lattice: &FiniteLattice, f: &LSubset, a: Level) -> ElemSet {
    ElemSet::from_elems((0..f.len()).filter(|&x| lattice.lt(a, f.get(x))))
}

/// Distinct values of `f`, in lattice linear-extension order.
pub fn image(lattice: &FiniteLattice, f: &LSubset) -> Vec<Level> {
    lattice
        .linear_extension()
        .iter()
        .copied()
        .filter(|a| f.0.contains(a))
        .collect()
}

/// Pointwise meet of a non-empty family on a common carrier.
pub fn intersect_many(lattice: &FiniteLattice, fs: &[&LSubset]) -> Result<LSubset> {
    let first = fs.first().ok_or(Error::EmptyFamily)?;
    for f in &fs[1..] {
        same_carrier(first, f)?;
    }
    Ok(LSubset(
        (0..first.len())
            .map(|x| lattice.big_meet(fs.iter().map(|f| f.get(x))))
            .collect(),
    ))
}

/// Every non-empty subset of the image contains its least upper bound.
///
/// For a finite image this holds exactly when the image is totally ordered:
/// a finite chain contains its maximum, and two incomparable values form a
/// subset whose join lies outside it.
pub fn has_sup_property(lattice: &FiniteLattice, f: &LSubset) -> bool {
    let im = image(lattice, f);
    im.iter()
        .tuple_combinations()
        .all(|(&a, &b)| lattice.leq(a, b) || lattice.leq(b, a))
}

/// Pointwise equality of two L-subsets on a common carrier.
pub fn equal_by_levels(f: &LSubset, g: &LSubset) -> Result<bool> {
    same_carrier(f, g)?;
    Ok(f == g)
}

/// Which L-subring inequality fails, if any.
pub fn subring_violation(lattice: &FiniteLattice, ring: &FiniteRing, f: &LSubset) -> Option<String> {
    if f.len() != ring.len() {
        return Some(format!("expected {} values, got {}", ring.len(), f.len()));
    }
    for x in 0..ring.len() {
        for y in 0..ring.len() {
            let m = lattice.meet(f.get(x), f.get(y));
            if !lattice.leq(m, f.get(ring.sub(x, y))) {
                return Some(format!(
                    "mu({} - {}) is below mu({}) ∧ mu({})",
                    ring.label(x),
                    ring.label(y),
                    ring.label(x),
                    ring.label(y)
                ));
            }
            if !lattice.leq(m, f.get(ring.mul(x, y))) {
                return Some(format!(
                    "mu({} * {}) is below mu({}) ∧ mu({})",
                    ring.label(x),
                    ring.label(y),
                    ring.label(x),
                    ring.label(y)
                ));
            }
        }
    }
    None
}

pub fn is_l_subring(lattice: &FiniteLattice, ring: &FiniteRing, f: &LSubset) -> bool {
    subring_violation(lattice, ring, f).is_none()
}

/// Renders `f` as `x↦value` pairs in ring-element order.
pub fn format_subset(lattice: &FiniteLattice, ring: &FiniteRing, f: &LSubset) -> String {
    (0..f.len())
        .map(|x| format!("{}↦{}", ring.label(x), lattice.label(f.get(x))))
        .join(" ")
}

/// An L-subset validated as an ideal of some [`LRing`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal(LSubset);

impl Ideal {
    pub fn as_subset(&self) -> &LSubset {
        &self.0
    }

    pub fn into_subset(self) -> LSubset {
        self.0
    }
}

impl Deref for Ideal {
    type Target = LSubset;
    fn deref(&self) -> &LSubset {
        &self.0
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{:?}", self.0)
    }
}

/// An L-subring `mu` of a finite ring, over a finite lattice.
#[derive(Clone)]
pub struct LRing {
    lattice: Arc<FiniteLattice>,
    ring: Arc<FiniteRing>,
    mu: LSubset,
    cap: u128,
}

impl fmt::Debug for LRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LRing")
            .field("lattice", &self.lattice.name())
            .field("ring", &self.ring.name())
            .field("mu", &self.mu)
            .finish()
    }
}

impl LRing {
    pub fn new(lattice: Arc<FiniteLattice>, ring: Arc<FiniteRing>, mu: LSubset) -> Result<Self> {
        if mu.len() != ring.len() {
            return Err(Error::CarrierMismatch {
                expected: ring.len(),
                found: mu.len(),
            });
        }
        if let Some(why) = subring_violation(&lattice, &ring, &mu) {
            return Err(Error::NotSubring(why));
        }
        let zero = mu.get(ring.zero());
        debug_assert!(mu.values().iter().all(|&v| lattice.leq(v, zero)));
        Ok(LRing {
            lattice,
            ring,
            mu,
            cap: DEFAULT_ENUMERATION_CAP,
        })
    }

    /// `mu` constantly equal to the lattice top.
    pub fn constant_top(lattice: Arc<FiniteLattice>, ring: Arc<FiniteRing>) -> Self {
        let mu = LSubset::constant(ring.len(), lattice.top());
        Self::new(lattice, ring, mu).expect("constant maps are L-subrings")
    }

    /// Overrides the enumeration cap used by family sweeps.
    pub fn with_cap(mut self, cap: u128) -> Self {
        self.cap = cap;
        self
    }

    pub fn cap(&self) -> u128 {
        self.cap
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn lattice_arc(&self) -> &Arc<FiniteLattice> {
        &self.lattice
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn ring_arc(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn mu(&self) -> &LSubset {
        &self.mu
    }

    /// `mu` as an ideal of itself.
    pub fn mu_ideal(&self) -> Ideal {
        Ideal(self.mu.clone())
    }

    pub fn is_mu(&self, f: &LSubset) -> bool {
        *f == self.mu
    }

    pub fn format(&self, f: &LSubset) -> String {
        format_subset(&self.lattice, &self.ring, f)
    }

    pub fn format_set(&self, s: ElemSet) -> String {
        self.ring.format_set(s)
    }

    pub fn level_cut(&self, f: &LSubset, a: Level) -> ElemSet {
        level_cut(&self.lattice, f, a)
    }

    pub fn strong_cut(&self, f: &LSubset, a: Level) -> ElemSet {
        strong_cut(&self.lattice, f, a)
    }

    pub fn contained(&self, f: &LSubset, g: &LSubset) -> bool {
        contained(&self.lattice, f, g)
    }

    pub fn meet(&self, f: &LSubset, g: &LSubset) -> LSubset {
        LSubset(f.0.iter().zip(&g.0).map(|(&a, &b)| self.lattice.meet(a, b)).collect())
    }

    /// Which ideal inequality fails, if any: containment in `mu`, closure
    /// under differences, or absorption of products.
    pub fn ideal_violation(&self, f: &LSubset) -> Option<String> {
        let (l, r, mu) = (&*self.lattice, &*self.ring, &self.mu);
        for x in 0..r.len() {
            if !l.leq(f.get(x), mu.get(x)) {
                return Some(format!(
                    "value {} at {} exceeds mu({}) = {}",
                    l.label(f.get(x)),
                    r.label(x),
                    r.label(x),
                    l.label(mu.get(x))
                ));
            }
        }
        for x in 0..r.len() {
            for y in 0..r.len() {
                let (fx, fy) = (f.get(x), f.get(y));
                if !l.leq(l.meet(fx, fy), f.get(r.sub(x, y))) {
                    return Some(format!("difference {} - {}", r.label(x), r.label(y)));
                }
                let need = l.join(l.meet(mu.get(x), fy), l.meet(fx, mu.get(y)));
                if !l.leq(need, f.get(r.mul(x, y))) {
                    return Some(format!("product {} * {}", r.label(x), r.label(y)));
                }
            }
        }
        None
    }

    /// Level criterion: `f <= mu` and every non-empty cut `f_a` is an ideal
    /// of the level subring `mu_a`.
    pub fn is_ideal_by_levels(&self, f: &LSubset) -> bool {
        self.contained(f, &self.mu)
            && self.lattice.levels().all(|a| {
                let cut = self.level_cut(f, a);
                cut.is_empty() || self.ring.is_ideal_of(cut, self.level_cut(&self.mu, a))
            })
    }

    /// Whether `f` is an ideal of `mu`, by both characterizations.
    pub fn is_ideal_of(&self, f: &LSubset) -> Result<bool> {
        same_carrier(&self.mu, f)?;
        let by_def = self.ideal_violation(f).is_none();
        let by_levels = self.is_ideal_by_levels(f);
        if by_def != by_levels {
            return Err(Error::Inconsistent(format!(
                "ideal characterizations disagree on {} (pointwise: {by_def}, levels: {by_levels})",
                self.format(f)
            )));
        }
        Ok(by_def)
    }

    /// Validates `f` as an ideal of `mu`.
    pub fn ideal(&self, f: LSubset) -> Result<Ideal> {
        same_carrier(&self.mu, &f)?;
        let violation = self.ideal_violation(&f);
        let by_levels = self.is_ideal_by_levels(&f);
        match (violation, by_levels) {
            (None, true) => Ok(Ideal(f)),
            (Some(why), false) => Err(Error::NotIdeal(why)),
            (v, l) => Err(Error::Inconsistent(format!(
                "ideal characterizations disagree on {} (pointwise: {}, levels: {l})",
                self.format(&f),
                v.is_none()
            ))),
        }
    }

    /// Wraps an L-subset already known to be an ideal (checked in debug
    /// builds only).
    pub(crate) fn ideal_unchecked(&self, f: LSubset) -> Ideal {
        debug_assert!(self.ideal_violation(&f).is_none(), "{}", self.format(&f));
        Ideal(f)
    }

    /// `(eta + theta)(x) = ⋁ { eta(y) ∧ theta(z) : y + z = x }`.
    ///
    /// Both ideals must agree at zero. The result is validated as an ideal.
    pub fn sum(&self, eta: &Ideal, theta: &Ideal) -> Result<Ideal> {
        same_carrier(eta, theta)?;
        let (l, r) = (&*self.lattice, &*self.ring);
        let z = r.zero();
        if eta.get(z) != theta.get(z) {
            return Err(Error::SumZeroMismatch(
                l.label(eta.get(z)).into(),
                l.label(theta.get(z)).into(),
            ));
        }
        let values = (0..r.len())
            .map(|x| l.big_join((0..r.len()).map(|y| l.meet(eta.get(y), theta.get(r.sub(x, y))))))
            .collect();
        self.ideal(LSubset(values))
    }

    /// Pointwise meet of a non-empty family of ideals, validated.
    pub fn intersect_ideals(&self, fs: &[&Ideal]) -> Result<Ideal> {
        let subsets: Vec<&LSubset> = fs.iter().map(|i| i.as_subset()).collect();
        self.ideal(intersect_many(&self.lattice, &subsets)?)
    }

    /// Lowest value attained by `mu`.
    pub fn mu_floor(&self) -> Level {
        self.lattice.big_meet(self.mu.values().iter().copied())
    }
}
