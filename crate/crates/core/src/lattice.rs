//! Finite lattices of truth values.
//!
//! A [`FiniteLattice`] is built from its order relation; meet and join tables
//! are precomputed at construction, which fails if some pair lacks a unique
//! greatest lower bound or least upper bound. Every finite lattice is
//! complete, so arbitrary meets and joins are plain folds over finite sets.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Index of an element of a [`FiniteLattice`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Level(pub u8);

impl Level {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Structural facts that gate which results apply to a lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub is_chain: bool,
    /// Meet distributes over join. For finite lattices this is exactly the
    /// complete Heyting algebra condition.
    pub is_complete_heyting: bool,
}

#[derive(Clone)]
pub struct FiniteLattice {
    name: String,
    labels: Vec<String>,
    index: HashMap<String, Level>,
    leq: Vec<bool>,
    meet: Vec<Level>,
    join: Vec<Level>,
    bottom: Level,
    top: Level,
    /// Elements sorted by (height, index); a linear extension of the order.
    linear: Vec<Level>,
    class: Classification,
}

impl fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteLattice")
            .field("name", &self.name)
            .field("labels", &self.labels)
            .finish()
    }
}

impl PartialEq for FiniteLattice {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.leq == other.leq
    }
}

impl Eq for FiniteLattice {}

impl FiniteLattice {
    /// Builds a lattice from element labels and order pairs `(a, b)` meaning
    /// `a <= b`. The reflexive-transitive closure of the pairs is taken, so
    /// covering pairs suffice.
    pub fn from_leq<S: AsRef<str>>(labels: &[S], pairs: &[(S, S)]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let n = labels.len();
        if n == 0 {
            return Err(Error::EmptyLattice);
        }
        if n > u8::MAX as usize {
            return Err(Error::Parse {
                what: "lattice (too many elements)",
                input: n.to_string(),
            });
        }
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), Level(i as u8)).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::UnknownElement(s.to_string()))
        };
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (a, b) in pairs {
            let (a, b) = (lookup(a.as_ref())?, lookup(b.as_ref())?);
            leq[a.index() * n + b.index()] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if !leq[i * n + k] {
                    continue;
                }
                for j in 0..n {
                    if leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if leq[i * n + j] && leq[j * n + i] {
                    return Err(Error::NotAntisymmetric(labels[i].clone(), labels[j].clone()));
                }
            }
        }

        let bound = |a: usize, b: usize, lower: bool| -> Option<Level> {
            let candidates: Vec<usize> = (0..n)
                .filter(|&c| {
                    if lower {
                        leq[c * n + a] && leq[c * n + b]
                    } else {
                        leq[a * n + c] && leq[b * n + c]
                    }
                })
                .collect();
            candidates
                .iter()
                .copied()
                .find(|&c| {
                    candidates
                        .iter()
                        .all(|&d| if lower { leq[d * n + c] } else { leq[c * n + d] })
                })
                .map(|c| Level(c as u8))
        };
        let mut meet = vec![Level(0); n * n];
        let mut join = vec![Level(0); n * n];
        for a in 0..n {
            for b in 0..n {
                meet[a * n + b] = bound(a, b, true)
                    .ok_or_else(|| Error::NotALattice(labels[a].clone(), labels[b].clone(), "greatest lower bound"))?;
                join[a * n + b] = bound(a, b, false)
                    .ok_or_else(|| Error::NotALattice(labels[a].clone(), labels[b].clone(), "least upper bound"))?;
            }
        }
        let bottom = (1..n).fold(Level(0), |acc, i| meet[acc.index() * n + i]);
        let top = (1..n).fold(Level(0), |acc, i| join[acc.index() * n + i]);

        let height = |i: usize| (0..n).filter(|&j| leq[j * n + i]).count();
        let mut linear: Vec<Level> = (0..n).map(|i| Level(i as u8)).collect();
        linear.sort_by_key(|l| (height(l.index()), l.0));

        let mut lattice = FiniteLattice {
            name: String::new(),
            labels,
            index,
            leq,
            meet,
            join,
            bottom,
            top,
            linear,
            class: Classification {
                is_chain: false,
                is_complete_heyting: false,
            },
        };
        lattice.class = lattice.compute_classification();
        lattice.name = lattice.labels.join(",");
        Ok(lattice)
    }

    /// A chain ordered as listed, smallest first.
    pub fn chain<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        let pairs: Vec<(&str, &str)> = labels.windows(2).map(|w| (w[0].as_ref(), w[1].as_ref())).collect();
        let labels: Vec<&str> = labels.iter().map(|s| s.as_ref()).collect();
        let mut l = Self::from_leq(&labels, &pairs)?;
        l.name = format!("chain{}", labels.len());
        Ok(l)
    }

    /// The diamond M3: three pairwise incomparable atoms. Not distributive.
    pub fn m3() -> Self {
        let pairs = [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")];
        let mut l = Self::from_leq(&["0", "a", "b", "c", "1"], &pairs).expect("M3 is a lattice");
        l.name = "m3".into();
        l
    }

    /// The pentagon N5 (0 < a < c < 1, 0 < b < 1). Not distributive.
    pub fn n5() -> Self {
        let pairs = [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")];
        let mut l = Self::from_leq(&["0", "a", "b", "c", "1"], &pairs).expect("N5 is a lattice");
        l.name = "n5".into();
        l
    }

    /// The four-element Boolean lattice {0, p, q, 1}.
    pub fn boolean_square() -> Self {
        let pairs = [("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")];
        let mut l = Self::from_leq(&["0", "p", "q", "1"], &pairs).expect("2x2 is a lattice");
        l.name = "square".into();
        l
    }

    /// Parses a short lattice name: `chainN` (N >= 1), `m3`, `n5`, `square`.
    ///
    /// `chain2` is `b < t` and `chain3` is `b < m < t`; longer chains use
    /// labels `l0 < l1 < ...`.
    pub fn from_name(text: &str) -> Result<Self> {
        let s = text.trim().to_ascii_lowercase();
        match s.as_str() {
            "m3" => return Ok(Self::m3()),
            "n5" => return Ok(Self::n5()),
            "square" | "boolean4" | "b2" => return Ok(Self::boolean_square()),
            "chain1" => return Self::chain(&["t"]),
            "chain2" => return Self::chain(&["b", "t"]),
            "chain3" => return Self::chain(&["b", "m", "t"]),
            _ => {}
        }
        let n: usize = s
            .strip_prefix("chain")
            .and_then(|k| k.parse().ok())
            .filter(|&k| k >= 1)
            .ok_or_else(|| Error::Parse {
                what: "lattice name",
                input: text.to_string(),
            })?;
        let labels: Vec<String> = (0..n).map(|i| format!("l{i}")).collect();
        Self::chain(&labels)
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

    pub fn label(&self, a: Level) -> &str {
        &self.labels[a.index()]
    }

    /// Looks up an element by label.
    pub fn level(&self, label: &str) -> Result<Level> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn levels(&self) -> impl Iterator<Item = Level> + '_ {
        (0..self.len()).map(|i| Level(i as u8))
    }

    pub fn bottom(&self) -> Level {
        self.bottom
    }

    pub fn top(&self) -> Level {
        self.top
    }

    #[inline]
    pub fn leq(&self, a: Level, b: Level) -> bool {
        self.leq[a.index() * self.len() + b.index()]
    }

    #[inline]
    pub fn lt(&self, a: Level, b: Level) -> bool {
        a != b && self.leq(a, b)
    }

    #[inline]
    pub fn meet(&self, a: Level, b: Level) -> Level {
        self.meet[a.index() * self.len() + b.index()]
    }

    #[inline]
    pub fn join(&self, a: Level, b: Level) -> Level {
        self.join[a.index() * self.len() + b.index()]
    }

    /// Least upper bound of a finite set; the empty join is bottom.
    pub fn big_join<I: IntoIterator<Item = Level>>(&self, items: I) -> Level {
        items.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Greatest lower bound of a finite set; the empty meet is top.
    pub fn big_meet<I: IntoIterator<Item = Level>>(&self, items: I) -> Level {
        items.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn classify(&self) -> Classification {
        self.class
    }

    pub fn is_chain(&self) -> bool {
        self.class.is_chain
    }

    pub fn is_complete_heyting(&self) -> bool {
        self.class.is_complete_heyting
    }

    /// All elements in linear-extension order (every element after the
    /// elements below it).
    pub fn linear_extension(&self) -> &[Level] {
        &self.linear
    }

    /// `{a : lo <= a <= hi}` in linear-extension order.
    pub fn interval(&self, lo: Level, hi: Level) -> Vec<Level> {
        self.linear
            .iter()
            .copied()
            .filter(|&a| self.leq(lo, a) && self.leq(a, hi))
            .collect()
    }

    fn compute_classification(&self) -> Classification {
        let all: Vec<Level> = self.levels().collect();
        let is_chain = all
            .iter()
            .all(|&a| all.iter().all(|&b| self.leq(a, b) || self.leq(b, a)));
        let is_complete_heyting = all.iter().all(|&a| {
            all.iter().all(|&b| {
                all.iter()
                    .all(|&c| self.meet(a, self.join(b, c)) == self.join(self.meet(a, b), self.meet(a, c)))
            })
        });
        Classification {
            is_chain,
            is_complete_heyting,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> FiniteLattice {
        FiniteLattice::chain(&["b", "m", "t"]).unwrap()
    }

    fn lv(l: &FiniteLattice, s: &str) -> Level {
        l.level(s).unwrap()
    }

    #[test]
    fn chain_meet_join() {
        let l = chain3();
        assert_eq!(l.meet(lv(&l, "m"), lv(&l, "t")), lv(&l, "m"));
        assert_eq!(l.join(lv(&l, "m"), lv(&l, "b")), lv(&l, "m"));
        for a in l.levels() {
            assert_eq!(l.meet(a, a), a);
            assert_eq!(l.join(a, l.bottom()), a);
        }
        assert_eq!(l.big_join(l.levels()), lv(&l, "t"));
    }

    #[test]
    fn m3_bounds() {
        let l = FiniteLattice::m3();
        let (a, b, c) = (lv(&l, "a"), lv(&l, "b"), lv(&l, "c"));
        assert_eq!(l.meet(a, b), lv(&l, "0"));
        assert_eq!(l.join(a, b), lv(&l, "1"));
        assert_eq!(l.big_meet([a, b, c]), lv(&l, "0"));
    }

    #[test]
    fn empty_big_ops() {
        let l = chain3();
        assert_eq!(l.big_join([]), l.bottom());
        assert_eq!(l.big_meet([]), l.top());
    }

    #[test]
    fn classification() {
        let c = chain3().classify();
        assert!(c.is_chain && c.is_complete_heyting);
        let m = FiniteLattice::m3().classify();
        assert!(!m.is_chain && !m.is_complete_heyting);
        let n = FiniteLattice::n5().classify();
        assert!(!n.is_chain && !n.is_complete_heyting);
        let sq = FiniteLattice::boolean_square().classify();
        assert!(!sq.is_chain && sq.is_complete_heyting);
    }

    #[test]
    fn unknown_label() {
        assert_eq!(chain3().level("x"), Err(Error::UnknownElement("x".into())));
    }

    #[test]
    fn rejects_missing_bounds() {
        // two incomparable maximal elements: no least upper bound
        let err = FiniteLattice::from_leq(&["0", "a", "b"], &[("0", "a"), ("0", "b")]).unwrap_err();
        assert_eq!(err, Error::NotALattice("a".into(), "b".into(), "least upper bound"));
    }

    #[test]
    fn rejects_cycles() {
        let err = FiniteLattice::from_leq(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, Error::NotAntisymmetric(..)));
    }

    #[test]
    fn names() {
        assert_eq!(FiniteLattice::from_name("chain2").unwrap().labels(), ["b", "t"]);
        assert_eq!(FiniteLattice::from_name("chain5").unwrap().len(), 5);
        assert!(FiniteLattice::from_name("chain0").is_err());
        assert!(FiniteLattice::from_name("tree").is_err());
    }

    #[test]
    fn interval_is_sorted_by_height() {
        let l = FiniteLattice::boolean_square();
        let iv = l.interval(l.bottom(), l.top());
        assert_eq!(iv.first(), Some(&l.bottom()));
        assert_eq!(iv.last(), Some(&l.top()));
        assert_eq!(l.interval(lv(&l, "p"), lv(&l, "q")), vec![]);
    }

    #[test]
    fn laws_on_fixtures() {
        for l in [
            chain3(),
            FiniteLattice::m3(),
            FiniteLattice::n5(),
            FiniteLattice::boolean_square(),
            FiniteLattice::from_name("chain6").unwrap(),
        ] {
            if l.is_chain() {
                assert!(l.is_complete_heyting());
            }
            for a in l.levels() {
                assert!(l.leq(l.bottom(), a) && l.leq(a, l.top()));
                for b in l.levels() {
                    assert_eq!(l.meet(a, l.join(a, b)), a);
                    assert_eq!(l.join(a, l.meet(a, b)), a);
                    assert_eq!(l.meet(a, b), l.meet(b, a));
                    assert_eq!(l.big_join([a, b]), l.join(a, b));
                    assert_eq!(l.big_meet([a, b]), l.meet(a, b));
                    assert!(l.meet(a, b).index() < l.len());
                    for c in l.levels() {
                        assert_eq!(l.meet(a, l.meet(b, c)), l.meet(l.meet(a, b), c));
                        assert_eq!(l.join(a, l.join(b, c)), l.join(l.join(a, b), c));
                    }
                }
            }
        }
    }
}
