use std::sync::Arc;

use lring_core::lcore::{level_cut, strong_cut};
use lring_core::{FiniteLattice, FiniteRing, Ideal, LRing, LSubset, Level};
use proptest::prelude::*;

fn lattice(k: usize) -> FiniteLattice {
    let name = ["chain2", "chain4", "m3", "n5", "square"][k];
    FiniteLattice::from_name(name).unwrap()
}

fn chain_ring(ring: &str, chain: &str) -> (LRing, Vec<Ideal>) {
    let lr = LRing::constant_top(
        Arc::new(FiniteLattice::from_name(chain).unwrap()),
        Arc::new(FiniteRing::from_name(ring).unwrap()),
    );
    let ideals = lr.all_ideals().unwrap();
    (lr, ideals)
}

fn level(l: &FiniteLattice, k: usize) -> Level {
    l.levels().nth(k % l.len()).unwrap()
}

proptest! {
    #[test]
    fn lattice_laws(k in 0usize..5, a in 0usize..8, b in 0usize..8, c in 0usize..8) {
        let l = lattice(k);
        let (a, b, c) = (level(&l, a), level(&l, b), level(&l, c));
        prop_assert_eq!(l.meet(a, b), l.meet(b, a));
        prop_assert_eq!(l.join(a, b), l.join(b, a));
        prop_assert_eq!(l.meet(a, l.meet(b, c)), l.meet(l.meet(a, b), c));
        prop_assert_eq!(l.join(a, l.join(b, c)), l.join(l.join(a, b), c));
        prop_assert_eq!(l.meet(a, l.join(a, b)), a);
        prop_assert_eq!(l.join(a, l.meet(a, b)), a);
        prop_assert_eq!(l.leq(a, b), l.meet(a, b) == a);
        prop_assert!(l.leq(l.bottom(), a) && l.leq(a, l.top()));
    }

    #[test]
    fn cuts_shrink_as_the_level_rises(k in 0usize..5, vals in prop::collection::vec(0usize..8, 6), a in 0usize..8, b in 0usize..8) {
        let l = lattice(k);
        let f = LSubset::new(vals.iter().map(|&v| level(&l, v)).collect());
        let (a, b) = (level(&l, a), level(&l, b));
        prop_assert!(strong_cut(&l, &f, a).is_subset(level_cut(&l, &f, a)));
        if l.leq(a, b) {
            prop_assert!(level_cut(&l, &f, b).is_subset(level_cut(&l, &f, a)));
        }
    }

    /// A subset below `v` whose cuts agree with those of `v` at every value
    /// of `v` is `v` itself.
    #[test]
    fn cuts_on_the_image_determine_a_subset(k in 0usize..5, vs in prop::collection::vec(0usize..8, 5), ws in prop::collection::vec(0usize..8, 5)) {
        let l = lattice(k);
        let v = LSubset::new(vs.iter().map(|&x| level(&l, x)).collect());
        let eta = LSubset::new(v.values().iter().zip(&ws).map(|(&a, &w)| l.meet(a, level(&l, w))).collect());
        let agree = v.values().iter().all(|&t| level_cut(&l, &eta, t) == level_cut(&l, &v, t));
        prop_assert_eq!(agree, eta == v);
    }

    #[test]
    fn sums_on_chains(i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>(), m in any::<prop::sample::Index>(), big in any::<bool>()) {
        let (lr, ideals) = if big { chain_ring("Z6", "chain3") } else { chain_ring("Z4", "chain3") };
        let zero = lr.ring().zero();
        let eta = &ideals[i.index(ideals.len())];
        let same_zero: Vec<&Ideal> = ideals.iter().filter(|t| t.get(zero) == eta.get(zero)).collect();
        let theta = same_zero[j.index(same_zero.len())];
        let kappa = same_zero[m.index(same_zero.len())];
        let s = lr.sum(eta, theta).unwrap();
        prop_assert_eq!(&s, &lr.sum(theta, eta).unwrap());
        prop_assert!(lr.contained(eta, &s) && lr.contained(theta, &s));
        prop_assert_eq!(lr.sum(&s, kappa).unwrap(), lr.sum(eta, &lr.sum(theta, kappa).unwrap()).unwrap());
        prop_assert_eq!(&lr.sum(eta, eta).unwrap(), eta);
    }

    #[test]
    fn intersections_of_ideals_are_ideals(i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let (lr, ideals) = chain_ring("Z12", "chain2");
        let (eta, theta) = (&ideals[i.index(ideals.len())], &ideals[j.index(ideals.len())]);
        let meet = lr.intersect_ideals(&[eta, theta]).unwrap();
        prop_assert!(lr.contained(&meet, eta) && lr.contained(&meet, theta));
    }
}

#[test]
fn every_ideal_is_an_ideal_by_levels() {
    for ring in ["Z4", "Z6", "Z2xZ2"] {
        let (lr, ideals) = chain_ring(ring, "chain3");
        assert!(!ideals.is_empty());
        for eta in &ideals {
            assert!(lr.is_ideal_by_levels(eta), "{}", lr.format(eta));
            assert!(lr.contained(eta, lr.mu()));
        }
    }
}
