//! Finite strict partial orders stored as a transitively closed comparability matrix.

use std::collections::HashMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite poset on elements `0..size`, each carrying a label.
///
/// `less(a, b)` is the strict order; the matrix is always transitively
/// closed, irreflexive and acyclic. Values are immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    less: Vec<bool>,
}

/// Elements of a chain, listed in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Chain(pub Vec<usize>);

/// Elements of an antichain, listed by ascending index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Antichain(pub Vec<usize>);

impl Chain {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }
}

impl Antichain {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }
}

/// On-disk poset description: `{"elements": [...], "relations": [["a","b"], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFile {
    pub elements: Vec<String>,
    #[serde(default)]
    pub relations: Vec<(String, String)>,
}

impl Poset {
    /// Builds a poset from labels and strict `<` pairs, taking the transitive closure.
    pub fn build<S: AsRef<str>>(labels: &[S], relations: &[(S, S)]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_owned()).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::UnknownLabel(s.to_owned()))
        };
        let mut pairs = Vec::with_capacity(relations.len());
        for (a, b) in relations {
            pairs.push((lookup(a.as_ref())?, lookup(b.as_ref())?));
        }
        Self::close(labels, index, &pairs)
    }

    /// Builds a poset on `labels` from index pairs `(a, b)` meaning `a < b`.
    pub fn from_index_relations(labels: Vec<String>, relations: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        for &(a, b) in relations {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, size: n });
                }
            }
        }
        Self::close(labels, index, relations)
    }

    fn close(
        labels: Vec<String>,
        index: HashMap<String, usize>,
        pairs: &[(usize, usize)],
    ) -> Result<Self> {
        let n = labels.len();
        let mut less = vec![false; n * n];
        for &(a, b) in pairs {
            less[a * n + b] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if !less[i * n + k] {
                    continue;
                }
                for j in 0..n {
                    if less[k * n + j] {
                        less[i * n + j] = true;
                    }
                }
            }
        }
        if let Some(a) = (0..n).find(|&a| less[a * n + a]) {
            return Err(Error::CycleDetected(labels[a].clone()));
        }
        Ok(Poset { labels, index, less })
    }

    /// An antichain on `n` elements labelled `p0..`.
    pub fn antichain(n: usize) -> Self {
        Self::from_index_relations(default_labels(n), &[]).expect("antichain is a poset")
    }

    /// A chain `p0 < p1 < ... < p{n-1}`.
    pub fn chain(n: usize) -> Self {
        let rel: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_index_relations(default_labels(n), &rel).expect("chain is a poset")
    }

    /// Random poset: each pair `i < j` of a hidden linear order is related with
    /// probability `density` before closing transitively.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Self {
        let mut rel = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(density.clamp(0.0, 1.0)) {
                    rel.push((i, j));
                }
            }
        }
        Self::from_index_relations(default_labels(n), &rel).expect("forward edges are acyclic")
    }

    pub fn from_file(file: &PosetFile) -> Result<Self> {
        Self::build(&file.elements, &file.relations)
    }

    /// Serializes using cover relations only; loading recomputes the closure.
    pub fn to_file(&self) -> PosetFile {
        PosetFile {
            elements: self.labels.clone(),
            relations: self
                .cover_relations()
                .into_iter()
                .map(|(a, b)| (self.labels[a].clone(), self.labels[b].clone()))
                .collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    #[inline]
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.less[a * self.size() + b]
    }

    #[inline]
    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.less(a, b) || self.less(b, a)
    }

    /// `a < b` with nothing strictly between them.
    pub fn covers(&self, a: usize, b: usize) -> bool {
        self.less(a, b) && !(0..self.size()).any(|c| self.less(a, c) && self.less(c, b))
    }

    /// Transitive reduction, sorted lexicographically.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.covers(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn check_subset(&self, subset: &[usize]) -> Result<()> {
        let n = self.size();
        match subset.iter().find(|&&i| i >= n) {
            Some(&index) => Err(Error::IndexOutOfRange { index, size: n }),
            None => Ok(()),
        }
    }

    pub fn all(&self) -> Vec<usize> {
        (0..self.size()).collect()
    }

    pub fn is_chain(&self, elems: &[usize]) -> bool {
        elems.windows(2).all(|w| self.less(w[0], w[1]))
    }

    pub fn is_antichain(&self, elems: &[usize]) -> bool {
        elems.iter().enumerate().all(|(k, &a)| {
            elems[k + 1..]
                .iter()
                .all(|&b| a != b && !self.comparable(a, b))
        })
    }

    /// Minimal elements of `subset`, ascending.
    pub fn minimal_in(&self, subset: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = subset
            .iter()
            .copied()
            .filter(|&a| !subset.iter().any(|&b| self.less(b, a)))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// A linear extension: elements sorted by the number of elements below them,
    /// ties by index.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.size();
        let mut order: Vec<usize> = (0..n).collect();
        let below: Vec<usize> = (0..n)
            .map(|b| (0..n).filter(|&a| self.less(a, b)).count())
            .collect();
        order.sort_by_key(|&i| (below[i], i));
        order
    }

    /// Induced subposet on `subset` (labels kept), in the given order.
    pub fn induced(&self, subset: &[usize]) -> Result<Poset> {
        self.check_subset(subset)?;
        let labels = subset.iter().map(|&i| self.labels[i].clone()).collect();
        let mut rel = Vec::new();
        for (x, &a) in subset.iter().enumerate() {
            for (y, &b) in subset.iter().enumerate() {
                if self.less(a, b) {
                    rel.push((x, y));
                }
            }
        }
        Poset::from_index_relations(labels, &rel)
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("p{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> Poset {
        Poset::build(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
        )
        .unwrap()
    }

    #[test]
    fn closure_of_three_chain() {
        let p = Poset::build(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert!(p.less(0, 1) && p.less(1, 2) && p.less(0, 2));
        assert!(!p.less(2, 0) && !p.less(0, 0));
        assert_eq!(p.cover_relations(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn no_relations_is_antichain() {
        let p = Poset::build::<&str>(&["a", "b"], &[]).unwrap();
        assert!(!p.comparable(0, 1));
        assert!(p.is_antichain(&[0, 1]));
    }

    #[test]
    fn cycle_rejected() {
        let err = Poset::build(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, Error::CycleDetected(_)));
        let err = Poset::build(&["a"], &[("a", "a")]).unwrap_err();
        assert!(matches!(err, Error::CycleDetected(_)));
    }

    #[test]
    fn unknown_and_duplicate_labels() {
        assert_eq!(
            Poset::build(&["a", "b"], &[("a", "z")]).unwrap_err(),
            Error::UnknownLabel("z".into())
        );
        assert!(matches!(
            Poset::build::<&str>(&["a", "a"], &[]).unwrap_err(),
            Error::DuplicateLabel(_)
        ));
    }

    #[test]
    fn file_round_trip_keeps_order() {
        let p = grid();
        let text = serde_json::to_string(&p.to_file()).unwrap();
        let back: PosetFile = serde_json::from_str(&text).unwrap();
        assert_eq!(Poset::from_file(&back).unwrap(), p);
        assert!(text.contains("\"relations\""));
    }

    #[test]
    fn minimal_and_extension() {
        let p = grid();
        assert_eq!(p.minimal_in(&[1, 2, 3]), vec![1, 2]);
        let ext = p.linear_extension();
        for (x, &a) in ext.iter().enumerate() {
            for &b in &ext[..x] {
                assert!(!p.less(a, b));
            }
        }
    }

    #[test]
    fn chain_and_antichain_predicates() {
        let p = grid();
        assert!(p.is_chain(&[0, 1, 3]));
        assert!(!p.is_chain(&[1, 2]));
        assert!(p.is_antichain(&[1, 2]));
        assert!(!p.is_antichain(&[0, 3]));
        assert!(p.is_antichain(&[]));
    }
}
