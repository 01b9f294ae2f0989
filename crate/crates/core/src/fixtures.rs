//! Named small instances shared by tests, examples and the CLI docs.

use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::finring::FiniteRing;
use crate::lattice::{FiniteLattice, Level};
use crate::lcore::{Ideal, LRing, LSubset};

/// Chain `b < m < t`, ring Z4, `mu ≡ t`.
pub struct SetupA {
    pub lring: LRing,
    /// `[t, m, m, m]`
    pub eta0: Ideal,
    /// `[t, m, t, m]`
    pub eta2: Ideal,
}

/// Chain `b < t`, ring Z6, `mu ≡ t`.
pub struct SetupB {
    pub lring: LRing,
    /// indicator of `{0}`
    pub eta: Ideal,
    /// indicator of `(2) = {0, 2, 4}`
    pub ind2: Ideal,
    /// indicator of `(3) = {0, 3}`
    pub ind3: Ideal,
}

pub fn lv(l: &FiniteLattice, label: &str) -> Level {
    l.level(label).unwrap()
}

/// L-subset from lattice labels listed in ring-element order.
pub fn subset(l: &FiniteLattice, labels: &[&str]) -> LSubset {
    LSubset::new(labels.iter().map(|s| lv(l, s)).collect())
}

pub fn chain3() -> Arc<FiniteLattice> {
    Arc::new(FiniteLattice::chain(&["b", "m", "t"]).unwrap())
}

pub fn chain2() -> Arc<FiniteLattice> {
    Arc::new(FiniteLattice::chain(&["b", "t"]).unwrap())
}

pub fn zn(n: usize) -> Arc<FiniteRing> {
    Arc::new(FiniteRing::zn(n).unwrap())
}

pub fn setup_a() -> SetupA {
    let l = chain3();
    let lring = LRing::constant_top(l.clone(), zn(4));
    let eta0 = lring.ideal(subset(&l, &["t", "m", "m", "m"])).unwrap();
    let eta2 = lring.ideal(subset(&l, &["t", "m", "t", "m"])).unwrap();
    SetupA { lring, eta0, eta2 }
}

pub fn setup_b() -> SetupB {
    let l = chain2();
    let lring = LRing::constant_top(l.clone(), zn(6));
    let (t, b) = (l.top(), l.bottom());
    let ind = |xs: &[usize]| {
        lring
            .ideal(LSubset::two_valued(6, ElemSet::from_elems(xs.iter().copied()), t, b))
            .unwrap()
    };
    SetupB {
        eta: ind(&[0]),
        ind2: ind(&[0, 2, 4]),
        ind3: ind(&[0, 3]),
        lring,
    }
}

/// Chain `b < m < t`, Z4, `mu' = [t, m, t, m]`.
pub fn setup_a_prime() -> LRing {
    let l = chain3();
    let mu = subset(&l, &["t", "m", "t", "m"]);
    LRing::new(l, zn(4), mu).unwrap()
}

/// Chain `b < m < t`, Z12, `mu ≡ t`, and `eta` equal to `t` at 0, `m` at 6
/// and `b` elsewhere.
pub fn z12_three_level() -> (LRing, Ideal) {
    let l = chain3();
    let lring = LRing::constant_top(l.clone(), zn(12));
    let mut labels = ["b"; 12];
    labels[0] = "t";
    labels[6] = "m";
    let eta = lring.ideal(subset(&l, &labels)).unwrap();
    (lring, eta)
}
