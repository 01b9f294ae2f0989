//! Prime, semiprime and primary ideals of an L-ring, the radical, and the
//! semiprime and prime radicals.
//!
//! The prime and semiprime radicals are intersections over families of
//! ideals containing a given ideal. Families are found by a depth-first sweep
//! over all L-subsets `nu` with `eta <= nu <= mu`: ring elements are assigned
//! in index order (element 0 most significant), each from its interval of
//! lattice values in linear-extension order, and a partial assignment is
//! abandoned as soon as an ideal inequality among already assigned elements
//! fails. Members therefore come out in the same order a full mixed-radix
//! count would produce them.

use crate::error::{Error, Result};
use crate::lattice::Level;
use crate::lcore::{intersect_many, Ideal, LRing, LSubset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Prime,
    Semiprime,
}

/// All ideals of the given kind that contain `lower`.
#[derive(Debug, Clone)]
pub struct IdealFamily {
    pub kind: FamilyKind,
    pub lower: Ideal,
    pub members: Vec<Ideal>,
}

/// The radical of an ideal, with a flag recording whether it validated as an
/// ideal of `mu`. On non-distributive lattices it need not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Radical {
    pub value: LSubset,
    pub is_ideal: bool,
}

impl LRing {
    /// Prime: `eta != mu` and for every `x, y` one of
    /// `eta(xy) ∧ mu(x) ∧ mu(y) = eta(x) ∧ mu(y)` or
    /// `eta(xy) ∧ mu(x) ∧ mu(y) = eta(y) ∧ mu(x)`.
    pub fn is_prime(&self, eta: &LSubset) -> bool {
        if self.is_mu(eta) {
            return false;
        }
        let (l, r, mu) = (self.lattice(), self.ring(), self.mu());
        (0..r.len()).all(|x| {
            (0..r.len()).all(|y| {
                let lhs = l.meet(l.meet(eta.get(r.mul(x, y)), mu.get(x)), mu.get(y));
                lhs == l.meet(eta.get(x), mu.get(y)) || lhs == l.meet(eta.get(y), mu.get(x))
            })
        })
    }

    /// Semiprime: `eta != mu` and `eta(x^n) ∧ mu(x) = eta(x)` for all `x`
    /// and all `n >= 1`.
    pub fn is_semiprime(&self, eta: &LSubset) -> bool {
        if self.is_mu(eta) {
            return false;
        }
        let (l, r, mu) = (self.lattice(), self.ring(), self.mu());
        (0..r.len()).all(|x| r.powers(x).iter().all(|p| l.meet(eta.get(p), mu.get(x)) == eta.get(x)))
    }

    /// Primary, checked pointwise: `eta != mu` and for every `x, y`, with
    /// `c = eta(xy) ∧ mu(x) ∧ mu(y)`, one of
    ///
    /// 1. `eta(x) ∧ mu(y) >= c`,
    /// 2. `eta(y) ∧ mu(x) >= c`,
    /// 3. `eta(x^n) ∧ mu(x) ∧ eta(y^m) ∧ mu(y) >= c` for some `m, n > 1`
    ///    (chosen per pair).
    pub fn is_primary_pointwise(&self, eta: &LSubset) -> bool {
        if self.is_mu(eta) {
            return false;
        }
        let (l, r, mu) = (self.lattice(), self.ring(), self.mu());
        (0..r.len()).all(|x| {
            (0..r.len()).all(|y| {
                let (mx, my) = (mu.get(x), mu.get(y));
                let c = l.meet(l.meet(eta.get(r.mul(x, y)), mx), my);
                l.leq(c, l.meet(eta.get(x), my))
                    || l.leq(c, l.meet(eta.get(y), mx))
                    || r.higher_powers(x).iter().any(|p| {
                        let left = l.meet(eta.get(p), mx);
                        r.higher_powers(y)
                            .iter()
                            .any(|q| l.leq(c, l.meet(left, l.meet(eta.get(q), my))))
                    })
            })
        })
    }

    /// Primary, checked by levels: `eta != mu` and every non-empty cut
    /// `eta_t` either equals `mu_t` or is a primary ideal of `mu_t`.
    pub fn is_primary_by_levels(&self, eta: &Ideal) -> bool {
        if self.is_mu(eta) {
            return false;
        }
        self.lattice().levels().all(|t| {
            let cut = self.level_cut(eta, t);
            let parent = self.level_cut(self.mu(), t);
            cut.is_empty()
                || cut == parent
                || self
                    .ring()
                    .is_primary_in(cut, parent)
                    .expect("level cuts of an ideal are ideals of the level subring")
        })
    }

    /// Primary ideal test. Both characterizations are evaluated.
    ///
    /// # Panics
    ///
    /// If the pointwise and level characterizations disagree.
    pub fn is_primary(&self, eta: &Ideal) -> bool {
        let pointwise = self.is_primary_pointwise(eta);
        let levels = self.is_primary_by_levels(eta);
        assert_eq!(
            pointwise,
            levels,
            "primary characterizations disagree on {}",
            self.format(eta)
        );
        pointwise
    }

    /// `√eta(x) = ⋁_{n >= 1} [eta(x^n) ∧ mu(x)]`.
    pub fn radical(&self, eta: &Ideal) -> Radical {
        let (l, r, mu) = (self.lattice(), self.ring(), self.mu());
        let value = LSubset::new(
            (0..r.len())
                .map(|x| l.big_join(r.powers(x).iter().map(|p| l.meet(eta.get(p), mu.get(x)))))
                .collect(),
        );
        let is_ideal = self.ideal_violation(&value).is_none();
        Radical { value, is_ideal }
    }

    /// The radical, required to be an ideal of `mu`.
    pub fn radical_ideal(&self, eta: &Ideal) -> Result<Ideal> {
        let rad = self.radical(eta);
        if !rad.is_ideal {
            return Err(Error::NotIdeal(format!(
                "radical {} is not an ideal of mu",
                self.format(&rad.value)
            )));
        }
        self.ideal(rad.value)
    }

    /// Number of L-subsets `nu` with `lower <= nu <= mu`.
    pub fn search_space(&self, lower: &LSubset) -> u128 {
        (0..lower.len())
            .map(|x| self.lattice().interval(lower.get(x), self.mu().get(x)).len() as u128)
            .product()
    }

    /// All ideals `nu` of `mu` with `lower <= nu`, in sweep order.
    pub fn ideals_above(&self, lower: &LSubset) -> Result<Vec<Ideal>> {
        let mut out = Vec::new();
        self.sweep(lower, |nu| {
            out.push(self.ideal_unchecked(nu.clone()));
        })?;
        Ok(out)
    }

    /// All ideals of `mu`.
    pub fn all_ideals(&self) -> Result<Vec<Ideal>> {
        let bottom = LSubset::constant(self.ring().len(), self.lattice().bottom());
        self.ideals_above(&bottom)
    }

    /// The family of prime (or semiprime) ideals of `mu` containing `eta`.
    pub fn enumerate_family(&self, eta: &Ideal, kind: FamilyKind) -> Result<IdealFamily> {
        let mut members = Vec::new();
        self.sweep(eta, |nu| {
            let keep = match kind {
                FamilyKind::Prime => self.is_prime(nu),
                FamilyKind::Semiprime => self.is_semiprime(nu),
            };
            if keep {
                members.push(self.ideal_unchecked(nu.clone()));
            }
        })?;
        Ok(IdealFamily {
            kind,
            lower: eta.clone(),
            members,
        })
    }

    fn family_meet(&self, family: &IdealFamily) -> Result<Ideal> {
        if family.members.is_empty() {
            return Ok(self.mu_ideal());
        }
        let subsets: Vec<&LSubset> = family.members.iter().map(|m| m.as_subset()).collect();
        self.ideal(intersect_many(self.lattice(), &subsets)?)
    }

    /// `P(eta)`: intersection of all prime ideals containing `eta`, or `mu`
    /// if there are none.
    pub fn prime_radical(&self, eta: &Ideal) -> Result<Ideal> {
        let family = self.enumerate_family(eta, FamilyKind::Prime)?;
        self.family_meet(&family)
    }

    /// `S(eta)`: intersection of all semiprime ideals containing `eta`, or
    /// `mu` if there are none.
    pub fn semiprime_radical(&self, eta: &Ideal) -> Result<Ideal> {
        let family = self.enumerate_family(eta, FamilyKind::Semiprime)?;
        self.family_meet(&family)
    }

    /// `xi(x) = mu(x) ∧ eta(0)`, a prime ideal containing `eta` whenever
    /// `eta(0) < mu(0)`.
    pub fn lift_xi(&self, eta: &Ideal) -> Result<Ideal> {
        let (l, z) = (self.lattice(), self.ring().zero());
        let (e0, m0) = (eta.get(z), self.mu().get(z));
        if !l.lt(e0, m0) {
            return Err(Error::Hypothesis(format!(
                "eta(0) = {} is not strictly below mu(0) = {}",
                l.label(e0),
                l.label(m0)
            )));
        }
        let xi = LSubset::new(self.mu().values().iter().map(|&m| l.meet(m, e0)).collect());
        let xi = self.ideal(xi)?;
        if !self.is_prime(&xi) || !self.contained(eta, &xi) {
            return Err(Error::Inconsistent(format!(
                "xi = {} is not a prime ideal containing eta",
                self.format(&xi)
            )));
        }
        Ok(xi)
    }

    /// Visits every ideal `nu` of `mu` with `lower <= nu` in sweep order.
    fn sweep(&self, lower: &LSubset, mut visit: impl FnMut(&LSubset)) -> Result<()> {
        let size = self.search_space(lower);
        if size > self.cap() {
            return Err(Error::CapExceeded { size, cap: self.cap() });
        }
        let r = self.ring();
        let n = r.len();
        let intervals: Vec<Vec<Level>> = (0..n)
            .map(|x| self.lattice().interval(lower.get(x), self.mu().get(x)))
            .collect();
        if intervals.iter().any(Vec::is_empty) {
            return Ok(());
        }
        // checks become decidable once the largest index involved is assigned
        let mut sub_checks = vec![Vec::new(); n];
        let mut mul_checks = vec![Vec::new(); n];
        for x in 0..n {
            for y in 0..n {
                let d = r.sub(x, y);
                sub_checks[x.max(y).max(d)].push((x, y, d));
                let p = r.mul(x, y);
                mul_checks[x.max(y).max(p)].push((x, y, p));
            }
        }
        let mut sweep = Sweep {
            lring: self,
            intervals,
            sub_checks,
            mul_checks,
            values: LSubset::new(vec![self.lattice().bottom(); n]),
        };
        sweep.run(0, &mut visit);
        Ok(())
    }
}

struct Sweep<'a> {
    lring: &'a LRing,
    intervals: Vec<Vec<Level>>,
    sub_checks: Vec<Vec<(usize, usize, usize)>>,
    mul_checks: Vec<Vec<(usize, usize, usize)>>,
    values: LSubset,
}

impl Sweep<'_> {
    fn run(&mut self, k: usize, visit: &mut dyn FnMut(&LSubset)) {
        if k == self.values.len() {
            visit(&self.values);
            return;
        }
        for i in 0..self.intervals[k].len() {
            self.values.set(k, self.intervals[k][i]);
            if self.consistent(k) {
                self.run(k + 1, visit);
            }
        }
    }

    fn consistent(&self, k: usize) -> bool {
        let l = self.lring.lattice();
        let mu = self.lring.mu();
        let nu = &self.values;
        self.sub_checks[k]
            .iter()
            .all(|&(x, y, d)| l.leq(l.meet(nu.get(x), nu.get(y)), nu.get(d)))
            && self.mul_checks[k].iter().all(|&(x, y, p)| {
                let need = l.join(l.meet(mu.get(x), nu.get(y)), l.meet(nu.get(x), mu.get(y)));
                l.leq(need, nu.get(p))
            })
    }
}
