//! Instance generation and the theorem table.
//!
//! Instances are `(L, R, mu, eta)` or `(L, R, mu, eta, theta)` tuples drawn
//! from every ideal of every chosen L-subring over the given carriers. Each
//! theorem is a predicate over one instance; [`run_suite`] applies the
//! selected theorems to all instances of the matching arity and collects
//! pass, fail and skip outcomes.

mod report;
mod table;

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;
use std::sync::Arc;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::finring::FiniteRing;
use crate::lattice::FiniteLattice;
use crate::lcore::{is_l_subring, Ideal, LRing, LSubset, DEFAULT_ENUMERATION_CAP};
use crate::radical::Radical;

pub use report::{render_jsonl, render_text, run_suite, CheckRecord, Outcome, SuiteReport, TheoremReport};
pub use table::{check_theorem, lookup, theorem_ids, Arity, Gate, Theorem, THEOREMS};

/// Which L-subrings of each carrier pair to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MuMode {
    /// Only `mu ≡ top`.
    Top,
    /// Every L-subring of the ring with values in the lattice.
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sampling {
    Exhaustive,
    /// A reproducible subset of the exhaustive space: at most `limit` single
    /// and `limit` pair instances, chosen with a ChaCha8 generator seeded by
    /// `seed`.
    Sampled {
        seed: u64,
        limit: usize,
    },
}

#[derive(Debug, Clone)]
pub struct GenParams {
    pub rings: Vec<String>,
    pub lattices: Vec<String>,
    pub mu: MuMode,
    pub sampling: Sampling,
    /// Bound on every enumeration (candidate L-subrings, ideal sweeps).
    pub cap: u128,
    /// Also emit all ordered pairs of ideals of each L-subring.
    pub pairs: bool,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            rings: vec!["Z4".into(), "Z6".into()],
            lattices: vec!["chain2".into(), "chain3".into()],
            mu: MuMode::Top,
            sampling: Sampling::Exhaustive,
            cap: DEFAULT_ENUMERATION_CAP,
            pairs: true,
        }
    }
}

/// One L-ring together with caches for its prime and semiprime radicals.
pub struct Context {
    pub lring: LRing,
    /// e.g. `Z4 chain3 mu#2`
    pub label: String,
    prime: RefCell<HashMap<LSubset, Ideal>>,
    semiprime: RefCell<HashMap<LSubset, Ideal>>,
}

impl Context {
    pub fn new(lring: LRing, label: String) -> Self {
        Context {
            lring,
            label,
            prime: RefCell::default(),
            semiprime: RefCell::default(),
        }
    }

    /// `P(eta)`, memoized.
    pub fn p(&self, eta: &Ideal) -> Result<Ideal> {
        if let Some(v) = self.prime.borrow().get(eta.as_subset()) {
            return Ok(v.clone());
        }
        let v = self.lring.prime_radical(eta)?;
        self.prime.borrow_mut().insert(eta.as_subset().clone(), v.clone());
        Ok(v)
    }

    /// `S(eta)`, memoized.
    pub fn s(&self, eta: &Ideal) -> Result<Ideal> {
        if let Some(v) = self.semiprime.borrow().get(eta.as_subset()) {
            return Ok(v.clone());
        }
        let v = self.lring.semiprime_radical(eta)?;
        self.semiprime.borrow_mut().insert(eta.as_subset().clone(), v.clone());
        Ok(v)
    }

    pub fn rad(&self, eta: &Ideal) -> Radical {
        self.lring.radical(eta)
    }

    pub fn rad_ideal(&self, eta: &Ideal) -> Result<Ideal> {
        self.lring.radical_ideal(eta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Provenance {
    /// Seed of the sampler, if sampled.
    pub seed: Option<u64>,
    /// Position in the exhaustive space.
    pub space_index: usize,
}

#[derive(Clone)]
pub struct Instance {
    pub index: usize,
    pub ctx: Rc<Context>,
    pub eta: Ideal,
    pub theta: Option<Ideal>,
    pub provenance: Provenance,
}

impl Instance {
    pub fn lring(&self) -> &LRing {
        &self.ctx.lring
    }

    pub fn describe(&self) -> String {
        let lr = self.lring();
        let mut s = format!(
            "#{} {} mu=[{}] eta=[{}]",
            self.index,
            self.ctx.label,
            lr.format(lr.mu()),
            lr.format(&self.eta)
        );
        if let Some(theta) = &self.theta {
            s.push_str(&format!(" theta=[{}]", lr.format(theta)));
        }
        s
    }
}

/// Every L-subring of `ring` with values in `lattice`, in mixed-radix order
/// (element 0 most significant, values in linear-extension order).
pub fn l_subrings(lattice: &FiniteLattice, ring: &FiniteRing, cap: u128) -> Result<Vec<LSubset>> {
    let size = (lattice.len() as u128).saturating_pow(ring.len() as u32);
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    let order = lattice.linear_extension();
    let mut out = Vec::new();
    for_each_box(&vec![order.to_vec(); ring.len()], |f| {
        if is_l_subring(lattice, ring, f) {
            out.push(f.clone());
        }
    });
    Ok(out)
}

/// Visits every L-subset whose value at `x` is drawn from `choices[x]`, in
/// mixed-radix order with element 0 most significant.
fn for_each_box(choices: &[Vec<crate::lattice::Level>], mut visit: impl FnMut(&LSubset)) {
    if choices.iter().any(|c| c.is_empty()) {
        return;
    }
    let mut digits = vec![0usize; choices.len()];
    let mut f = LSubset::new(choices.iter().map(|c| c[0]).collect());
    loop {
        visit(&f);
        let mut k = choices.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < choices[k].len() {
                f.set(k, choices[k][digits[k]]);
                break;
            }
            digits[k] = 0;
            f.set(k, choices[k][0]);
        }
    }
}

/// Outcome of comparing the pointwise ideal definition with the level-cut
/// criterion on every `f <= mu`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Agreement {
    pub candidates: u64,
    pub ideals: u64,
    pub disagreements: Vec<LSubset>,
}

/// Brute-force comparison of the two ideal characterizations over every
/// L-subset below `mu`.
pub fn ideal_characterization_agreement(lr: &LRing) -> Result<Agreement> {
    let bottom = LSubset::constant(lr.ring().len(), lr.lattice().bottom());
    let size = lr.search_space(&bottom);
    if size > lr.cap() {
        return Err(Error::CapExceeded { size, cap: lr.cap() });
    }
    let l = lr.lattice();
    let choices: Vec<_> = lr.mu().values().iter().map(|&m| l.interval(l.bottom(), m)).collect();
    let mut out = Agreement::default();
    for_each_box(&choices, |f| {
        out.candidates += 1;
        let by_def = lr.ideal_violation(f).is_none();
        if by_def {
            out.ideals += 1;
        }
        if by_def != lr.is_ideal_by_levels(f) {
            out.disagreements.push(f.clone());
        }
    });
    Ok(out)
}

/// All L-rings selected by `params`, in ring, lattice, `mu` order.
pub fn generate_contexts(params: &GenParams) -> Result<Vec<Rc<Context>>> {
    if params.rings.is_empty() || params.lattices.is_empty() {
        return Err(Error::Hypothesis(
            "at least one ring and one lattice are required".into(),
        ));
    }
    let mut out = Vec::new();
    for ring_name in &params.rings {
        let ring = Arc::new(FiniteRing::from_name(ring_name)?);
        for lattice_name in &params.lattices {
            let lattice = Arc::new(FiniteLattice::from_name(lattice_name)?);
            let mus = match params.mu {
                MuMode::Top => vec![LSubset::constant(ring.len(), lattice.top())],
                MuMode::All => l_subrings(&lattice, &ring, params.cap)?,
            };
            for (k, mu) in mus.into_iter().enumerate() {
                let lr = LRing::new(lattice.clone(), ring.clone(), mu)?.with_cap(params.cap);
                let label = format!("{} {} mu#{k}", ring.name(), lattice.name());
                out.push(Rc::new(Context::new(lr, label)));
            }
        }
    }
    Ok(out)
}

/// Every ideal of every selected L-ring (then every ordered pair, if
/// requested), optionally subsampled. Sampling draws up to `limit` single
/// instances and, separately, up to `limit` pair instances.
pub fn generate_instances(params: &GenParams) -> Result<Vec<Instance>> {
    let mut singles = Vec::new();
    let mut pairs = Vec::new();
    for ctx in generate_contexts(params)? {
        let ideals = ctx.lring.all_ideals()?;
        for eta in &ideals {
            singles.push((ctx.clone(), eta.clone(), None));
        }
        if params.pairs {
            for eta in &ideals {
                for theta in &ideals {
                    pairs.push((ctx.clone(), eta.clone(), Some(theta.clone())));
                }
            }
        }
    }
    let offset = singles.len();
    let space: Vec<_> = singles.into_iter().chain(pairs).collect();
    let (picked, seed) = match params.sampling {
        Sampling::Exhaustive => ((0..space.len()).collect::<Vec<_>>(), None),
        Sampling::Sampled { seed, limit } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut idx = sample(&mut rng, offset, limit.min(offset)).into_vec();
            let n_pairs = space.len() - offset;
            idx.extend(
                sample(&mut rng, n_pairs, limit.min(n_pairs))
                    .into_iter()
                    .map(|k| k + offset),
            );
            idx.sort_unstable();
            (idx, Some(seed))
        }
    };
    Ok(picked
        .into_iter()
        .enumerate()
        .map(|(index, k)| {
            let (ctx, eta, theta) = space[k].clone();
            Instance {
                index,
                ctx,
                eta,
                theta,
                provenance: Provenance { seed, space_index: k },
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{chain2, chain3, setup_a, zn};

    fn params(rings: &[&str], lattices: &[&str]) -> GenParams {
        GenParams {
            rings: rings.iter().map(|s| s.to_string()).collect(),
            lattices: lattices.iter().map(|s| s.to_string()).collect(),
            pairs: false,
            ..GenParams::default()
        }
    }

    #[test]
    fn two_valued_ideals_of_z4() {
        let insts = generate_instances(&params(&["Z4"], &["chain2"])).unwrap();
        // oracle: two-valued eta are indicators of subsets; keep the ideals
        let lr = LRing::constant_top(chain2(), zn(4));
        let l = lr.lattice();
        let mut want = Vec::new();
        for bits in 0u64..16 {
            let f = LSubset::two_valued(4, crate::ElemSet(bits), l.top(), l.bottom());
            if lr.ideal_violation(&f).is_none() {
                want.push(f);
            }
        }
        let mut got: Vec<LSubset> = insts.iter().map(|i| i.eta.as_subset().clone()).collect();
        got.sort();
        want.sort();
        assert_eq!(got, want);
        // {0}, {0,2}, Z4, plus the constant bottom
        assert_eq!(got.len(), 4);
    }

    #[test]
    fn chain3_includes_setup_a() {
        let insts = generate_instances(&params(&["Z4"], &["chain3"])).unwrap();
        let a = setup_a();
        assert!(insts.iter().any(|i| i.eta == a.eta0));
        assert!(insts.iter().any(|i| i.eta == a.eta2));
        let lr = LRing::constant_top(chain3(), zn(4));
        let agree = ideal_characterization_agreement(&lr).unwrap();
        assert_eq!(agree.candidates, 81);
        assert_eq!(agree.ideals as usize, insts.len());
        assert!(agree.disagreements.is_empty());
    }

    #[test]
    fn sampling_is_reproducible() {
        let mut p = params(&["Z4", "Z6"], &["chain3"]);
        p.pairs = true;
        p.sampling = Sampling::Sampled { seed: 7, limit: 20 };
        let a = generate_instances(&p).unwrap();
        let b = generate_instances(&p).unwrap();
        assert_eq!(a.len(), 40);
        assert_eq!(a.iter().filter(|i| i.theta.is_none()).count(), 20);
        let key = |v: &[Instance]| {
            v.iter()
                .map(|i| (i.provenance.space_index, i.eta.clone(), i.theta.clone()))
                .collect::<Vec<_>>()
        };
        assert_eq!(key(&a), key(&b));
    }

    #[test]
    fn subrings_of_z4_over_chain3() {
        let l = chain3();
        let r = zn(4);
        let mus = l_subrings(&l, &r, 1000).unwrap();
        for mu in &mus {
            assert!(is_l_subring(&l, &r, mu));
        }
        assert!(mus.contains(&LSubset::constant(4, l.top())));
        assert!(matches!(
            l_subrings(&l, &r, 10),
            Err(Error::CapExceeded { size: 81, cap: 10 })
        ));
    }

    #[test]
    fn needs_carriers() {
        assert!(generate_instances(&params(&[], &["chain2"])).is_err());
    }
}
