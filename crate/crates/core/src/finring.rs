//! Finite commutative rings and their crisp ideal theory.
//!
//! Elements are indices `0..len`. Subrings and ideals are [`ElemSet`]s of
//! the ambient ring; the "parent" of an ideal is whichever subring it is an
//! ideal of. Rings need not have a unity.
//!
//! Every quantifier of the form "for some n >= 1, x^n ..." is decided
//! exactly: the power sequence of an element of a finite ring is eventually
//! periodic, so the set of all its powers is finite and precomputed.

use std::collections::{HashMap, HashSet, VecDeque};

use itertools::Itertools;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};

/// Default limit on the number of candidate primary ideals searched by
/// [`FiniteRing::primary_decomposition_in`].
pub const DEFAULT_DECOMPOSITION_CAP: usize = 20;

pub const MAX_RING_SIZE: usize = 64;

#[derive(Clone)]
pub struct FiniteRing {
    name: String,
    labels: Vec<String>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    zero: usize,
    /// `{x^n : n >= 1}` per element.
    powers: Vec<ElemSet>,
    /// `{x^n : n >= 2}` per element.
    higher_powers: Vec<ElemSet>,
}

impl std::fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteRing")
            .field("name", &self.name)
            .field("len", &self.len())
            .finish()
    }
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.add == other.add && self.mul == other.mul
    }
}

impl Eq for FiniteRing {}

impl FiniteRing {
    /// The integers modulo `n`.
    pub fn zn(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidRing("Zn requires n >= 1".into()));
        }
        if n > MAX_RING_SIZE {
            return Err(Error::InvalidRing(format!(
                "at most {MAX_RING_SIZE} elements supported, got {n}"
            )));
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        let add = (0..n * n).map(|k| ((k / n + k % n) % n) as u8).collect();
        let mul = (0..n * n).map(|k| ((k / n) * (k % n) % n) as u8).collect();
        Ok(Self::assemble(format!("Z{n}"), labels, add, mul, 0))
    }

    /// Direct product with componentwise operations. Elements are ordered
    /// lexicographically with the last component varying fastest.
    pub fn product(factors: &[FiniteRing]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidRing("empty product".into()));
        }
        if factors.len() == 1 {
            return Ok(factors[0].clone());
        }
        let size: usize = factors.iter().map(|f| f.len()).product();
        if size > MAX_RING_SIZE {
            return Err(Error::InvalidRing(format!(
                "at most {MAX_RING_SIZE} elements supported, got {size}"
            )));
        }
        let tuples: Vec<Vec<usize>> = factors.iter().map(|f| 0..f.len()).multi_cartesian_product().collect();
        let position: HashMap<&[usize], usize> = tuples.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
        let combine = |a: &[usize], b: &[usize], op: &dyn Fn(&FiniteRing, usize, usize) -> usize| {
            let t: Vec<usize> = factors.iter().enumerate().map(|(k, f)| op(f, a[k], b[k])).collect();
            position[t.as_slice()] as u8
        };
        let mut add = Vec::with_capacity(size * size);
        let mut mul = Vec::with_capacity(size * size);
        for a in &tuples {
            for b in &tuples {
                add.push(combine(a, b, &|f, x, y| f.add(x, y)));
                mul.push(combine(a, b, &|f, x, y| f.mul(x, y)));
            }
        }
        let labels = tuples
            .iter()
            .map(|t| {
                let parts = t.iter().zip(factors).map(|(&x, f)| f.label(x));
                format!("({})", parts.format(","))
            })
            .collect();
        let zero_tuple: Vec<usize> = factors.iter().map(|f| f.zero()).collect();
        let zero = position[zero_tuple.as_slice()];
        let name = factors.iter().map(|f| f.name()).join("x");
        Ok(Self::assemble(name, labels, add, mul, zero))
    }

    /// Builds a ring from row-major operation tables given by element
    /// labels, checking every ring axiom exhaustively.
    pub fn from_tables<S: AsRef<str>>(labels: &[S], add: &[Vec<S>], mul: &[Vec<S>]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidRing("no elements".into()));
        }
        if n > MAX_RING_SIZE {
            return Err(Error::InvalidRing(format!(
                "at most {MAX_RING_SIZE} elements supported, got {n}"
            )));
        }
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let table = |rows: &[Vec<S>], what: &str| -> Result<Vec<u8>> {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(Error::InvalidRing(format!("{what} table must be {n}x{n}")));
            }
            rows.iter()
                .flatten()
                .map(|s| {
                    index
                        .get(s.as_ref())
                        .map(|&i| i as u8)
                        .ok_or_else(|| Error::UnknownRingElement(s.as_ref().to_string()))
                })
                .collect()
        };
        let add = table(add, "addition")?;
        let mul = table(mul, "multiplication")?;
        let a = |x: usize, y: usize| add[x * n + y] as usize;
        let m = |x: usize, y: usize| mul[x * n + y] as usize;
        let l = |x: usize| labels[x].as_str();

        let zero = (0..n)
            .find(|&z| (0..n).all(|x| a(z, x) == x))
            .ok_or_else(|| Error::InvalidRing("addition has no identity".into()))?;
        for x in 0..n {
            if !(0..n).any(|y| a(x, y) == zero) {
                return Err(Error::InvalidRing(format!("`{}` has no additive inverse", l(x))));
            }
            for y in 0..n {
                if a(x, y) != a(y, x) {
                    return Err(Error::InvalidRing(format!(
                        "addition not commutative at ({}, {})",
                        l(x),
                        l(y)
                    )));
                }
                if m(x, y) != m(y, x) {
                    return Err(Error::InvalidRing(format!(
                        "multiplication not commutative at ({}, {})",
                        l(x),
                        l(y)
                    )));
                }
                for z in 0..n {
                    if a(a(x, y), z) != a(x, a(y, z)) {
                        return Err(Error::InvalidRing(format!(
                            "addition not associative at ({}, {}, {})",
                            l(x),
                            l(y),
                            l(z)
                        )));
                    }
                    if m(m(x, y), z) != m(x, m(y, z)) {
                        return Err(Error::InvalidRing(format!(
                            "multiplication not associative at ({}, {}, {})",
                            l(x),
                            l(y),
                            l(z)
                        )));
                    }
                    if m(x, a(y, z)) != a(m(x, y), m(x, z)) {
                        return Err(Error::InvalidRing(format!(
                            "multiplication does not distribute at ({}, {}, {})",
                            l(x),
                            l(y),
                            l(z)
                        )));
                    }
                }
            }
        }
        let name = format!("ring{n}");
        Ok(Self::assemble(name, labels, add, mul, zero))
    }

    /// Parses `Zn` or a product such as `Z2xZ3` (also `Z2×Z3`, `Z2*Z3`).
    pub fn from_name(text: &str) -> Result<Self> {
        let parse_err = || Error::Parse {
            what: "ring name",
            input: text.to_string(),
        };
        let parts: Vec<&str> = text.split(['x', '×', '*']).map(str::trim).collect();
        let factors = parts
            .iter()
            .map(|p| {
                p.strip_prefix('Z')
                    .or_else(|| p.strip_prefix('z'))
                    .and_then(|k| k.parse::<usize>().ok())
                    .ok_or_else(parse_err)
                    .and_then(FiniteRing::zn)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::product(&factors)
    }

    fn assemble(name: String, labels: Vec<String>, add: Vec<u8>, mul: Vec<u8>, zero: usize) -> Self {
        let n = labels.len();
        let neg = (0..n)
            .map(|x| (0..n).find(|&y| add[x * n + y] as usize == zero).unwrap() as u8)
            .collect();
        let mut ring = FiniteRing {
            name,
            labels,
            add,
            mul,
            neg,
            zero,
            powers: Vec::new(),
            higher_powers: Vec::new(),
        };
        // x^1 .. x^(2n+1) covers the pre-period and a full cycle
        for x in 0..n {
            let mut all = ElemSet::singleton(x);
            let mut higher = ElemSet::EMPTY;
            let mut p = x;
            for _ in 0..(2 * n + 1) {
                p = ring.mul(p, x);
                all = all.with(p);
                higher = higher.with(p);
            }
            ring.powers.push(all);
            ring.higher_powers.push(higher);
        }
        ring
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn element(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownRingElement(label.to_string()))
    }

    pub fn elements(&self) -> ElemSet {
        ElemSet::full(self.len())
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.len() + y] as usize
    }

    #[inline]
    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg[y] as usize)
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x] as usize
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.len() + y] as usize
    }

    /// `{x^n : n >= 1}`.
    pub fn powers(&self, x: usize) -> ElemSet {
        self.powers[x]
    }

    /// `{x^n : n >= 2}`.
    pub fn higher_powers(&self, x: usize) -> ElemSet {
        self.higher_powers[x]
    }

    /// Formats a subset as `{a, b, ...}` using element labels.
    pub fn format_set(&self, s: ElemSet) -> String {
        format!("{{{}}}", s.iter().map(|x| self.label(x)).format(", "))
    }

    pub fn is_subring(&self, s: ElemSet) -> bool {
        !s.is_empty()
            && s.iter().all(|x| {
                s.iter()
                    .all(|y| s.contains(self.sub(x, y)) && s.contains(self.mul(x, y)))
            })
    }

    /// Describes why `i` fails to be an ideal of the subring `parent`.
    pub fn ideal_violation(&self, i: ElemSet, parent: ElemSet) -> Option<String> {
        if !self.is_subring(parent) {
            return Some(format!("{} is not a subring", self.format_set(parent)));
        }
        if i.is_empty() {
            return Some("empty set".into());
        }
        if !i.is_subset(parent) {
            return Some(format!(
                "{} is not contained in {}",
                self.format_set(i),
                self.format_set(parent)
            ));
        }
        for x in i.iter() {
            for y in i.iter() {
                if !i.contains(self.sub(x, y)) {
                    return Some(format!("{} - {} escapes", self.label(x), self.label(y)));
                }
            }
            for s in parent.iter() {
                if !i.contains(self.mul(s, x)) {
                    return Some(format!("{} * {} escapes", self.label(s), self.label(x)));
                }
            }
        }
        None
    }

    pub fn is_ideal_of(&self, i: ElemSet, parent: ElemSet) -> bool {
        self.ideal_violation(i, parent).is_none()
    }

    fn require_ideal(&self, i: ElemSet, parent: ElemSet) -> Result<()> {
        match self.ideal_violation(i, parent) {
            None => Ok(()),
            Some(why) => Err(Error::NotCrispIdeal(why)),
        }
    }

    /// Smallest ideal of `parent` containing `gens`.
    pub fn ideal_closure(&self, gens: ElemSet, parent: ElemSet) -> ElemSet {
        self.closure(gens, |s, x, y| {
            let mut out = s.with(self.sub(x, y));
            for p in parent.iter() {
                out = out.with(self.mul(p, x));
            }
            out
        })
    }

    /// Smallest subring containing `gens`.
    pub fn subring_closure(&self, gens: ElemSet) -> ElemSet {
        self.closure(gens, |s, x, y| s.with(self.sub(x, y)).with(self.mul(x, y)))
    }

    fn closure(&self, gens: ElemSet, step: impl Fn(ElemSet, usize, usize) -> ElemSet) -> ElemSet {
        let mut cur = gens.with(self.zero);
        loop {
            let mut next = cur;
            for x in cur.iter() {
                for y in cur.iter() {
                    next = step(next, x, y);
                }
            }
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// All ideals of the subring `parent`, sorted by size and then
    /// lexicographically on their sorted element lists.
    pub fn ideals_of(&self, parent: ElemSet) -> Vec<ElemSet> {
        self.lattice_of_closed(parent, |g| self.ideal_closure(g, parent))
    }

    pub fn ideals(&self) -> Vec<ElemSet> {
        self.ideals_of(self.elements())
    }

    /// All subrings, in the same canonical order as [`Self::ideals_of`].
    pub fn subrings(&self) -> Vec<ElemSet> {
        self.lattice_of_closed(self.elements(), |g| self.subring_closure(g))
    }

    fn lattice_of_closed(&self, within: ElemSet, close: impl Fn(ElemSet) -> ElemSet) -> Vec<ElemSet> {
        // every closed set is reached by adding its elements one at a time
        let start = close(ElemSet::EMPTY);
        let mut seen = HashSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(cur) = queue.pop_front() {
            for x in within.iter().filter(|&x| !cur.contains(x)) {
                let next = close(cur.with(x));
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        let mut out: Vec<ElemSet> = seen.into_iter().collect();
        out.sort_by(ElemSet::canonical_cmp);
        out
    }

    /// Whether `i` is a primary ideal of `parent`: proper, and whenever
    /// `xy ∈ i` then `x ∈ i`, `y ∈ i`, or both `x^n` and `y^m` lie in `i`
    /// for some `m, n > 1`.
    pub fn is_primary_in(&self, i: ElemSet, parent: ElemSet) -> Result<bool> {
        self.require_ideal(i, parent)?;
        if i == parent {
            return Ok(false);
        }
        Ok(parent.iter().all(|x| {
            parent.iter().all(|y| {
                !i.contains(self.mul(x, y))
                    || i.contains(x)
                    || i.contains(y)
                    || (!self.higher_powers(x).intersection(i).is_empty()
                        && !self.higher_powers(y).intersection(i).is_empty())
            })
        }))
    }

    /// Whether `i` is a prime ideal of `parent`: proper, and `xy ∈ i`
    /// forces `x ∈ i` or `y ∈ i`.
    pub fn is_prime_in(&self, i: ElemSet, parent: ElemSet) -> Result<bool> {
        self.require_ideal(i, parent)?;
        if i == parent {
            return Ok(false);
        }
        Ok(parent.iter().all(|x| {
            parent
                .iter()
                .all(|y| !i.contains(self.mul(x, y)) || i.contains(x) || i.contains(y))
        }))
    }

    /// `{x ∈ parent : x^n ∈ i for some n >= 1}`.
    pub fn radical_in(&self, i: ElemSet, parent: ElemSet) -> Result<ElemSet> {
        self.require_ideal(i, parent)?;
        let rad = ElemSet::from_elems(parent.iter().filter(|&x| !self.powers(x).intersection(i).is_empty()));
        if let Some(why) = self.ideal_violation(rad, parent) {
            return Err(Error::Inconsistent(format!("radical is not an ideal: {why}")));
        }
        Ok(rad)
    }

    /// A minimal-cardinality list of primary ideals of `parent` whose
    /// intersection is `i`, or `None` if no such list exists.
    ///
    /// Candidates are the primary ideals containing `i` in canonical order;
    /// lists are tried by increasing size, lexicographically within a size.
    /// If `i == parent` the empty list is returned (the empty intersection).
    /// More than `cap` candidates is an error.
    pub fn primary_decomposition_in(&self, i: ElemSet, parent: ElemSet, cap: usize) -> Result<Option<Vec<ElemSet>>> {
        self.require_ideal(i, parent)?;
        if i == parent {
            return Ok(Some(Vec::new()));
        }
        let mut candidates = Vec::new();
        for j in self.ideals_of(parent) {
            if i.is_subset(j) && self.is_primary_in(j, parent)? {
                candidates.push(j);
            }
        }
        if candidates.len() > cap {
            return Err(Error::CapExceeded {
                size: candidates.len() as u128,
                cap: cap as u128,
            });
        }
        for k in 1..=candidates.len() {
            for combo in candidates.iter().copied().combinations(k) {
                let meet = combo.iter().fold(parent, |acc, &j| acc.intersection(j));
                if meet == i {
                    return Ok(Some(combo));
                }
            }
        }
        Ok(None)
    }

    /// Restricts a primary decomposition in the whole ring to a subring
    /// `sub` strictly containing its intersection: factors containing `sub`
    /// are dropped and the rest are intersected with `sub`.
    pub fn restrict_decomposition(&self, dec: &[ElemSet], sub: ElemSet) -> Result<Vec<ElemSet>> {
        if !self.is_subring(sub) {
            return Err(Error::Hypothesis(format!("{} is not a subring", self.format_set(sub))));
        }
        let whole = self.elements();
        for &f in dec {
            if !self.is_primary_in(f, whole)? {
                return Err(Error::Hypothesis(format!(
                    "factor {} is not primary",
                    self.format_set(f)
                )));
            }
        }
        let target = dec.iter().fold(whole, |acc, &f| acc.intersection(f));
        if !target.is_subset(sub) {
            return Err(Error::Hypothesis(format!(
                "intersection {} is not contained in {}",
                self.format_set(target),
                self.format_set(sub)
            )));
        }
        if target == sub {
            return Err(Error::Hypothesis(
                "intersection equals the subring; every factor would drop".into(),
            ));
        }
        let kept: Vec<ElemSet> = dec.iter().map(|&f| f.intersection(sub)).filter(|&f| f != sub).collect();
        for &f in &kept {
            if !self.is_primary_in(f, sub)? {
                return Err(Error::Inconsistent(format!(
                    "{} is not primary in {}",
                    self.format_set(f),
                    self.format_set(sub)
                )));
            }
        }
        Ok(kept)
    }
}
