//! Width, maximum antichains and minimum chain covers of induced subposets.
//!
//! All three come from one maximum matching in the bipartite graph whose left
//! and right copies of the subset are joined by `a -> b` whenever `a < b`.
//! A matched edge means "b follows a in its chain"; König's theorem turns the
//! matching into a minimum vertex cover whose complement yields the antichain.

use std::collections::VecDeque;

use crate::error::Result;
use crate::poset::{Antichain, Chain, Poset};

const NONE: usize = usize::MAX;

struct Matching {
    elems: Vec<usize>,
    adj: Vec<Vec<usize>>,
    /// succ[x] = right partner of left x
    succ: Vec<usize>,
    /// pred[y] = left partner of right y
    pred: Vec<usize>,
    size: usize,
}

impl Matching {
    fn new(p: &Poset, subset: &[usize]) -> Result<Self> {
        p.check_subset(subset)?;
        let mut elems = subset.to_vec();
        elems.sort_unstable();
        elems.dedup();
        let k = elems.len();
        let adj: Vec<Vec<usize>> = (0..k)
            .map(|x| (0..k).filter(|&y| p.less(elems[x], elems[y])).collect())
            .collect();
        let mut m = Matching {
            elems,
            adj,
            succ: vec![NONE; k],
            pred: vec![NONE; k],
            size: 0,
        };
        let mut seen = vec![false; k];
        for x in 0..k {
            seen.fill(false);
            if m.augment(x, &mut seen) {
                m.size += 1;
            }
        }
        Ok(m)
    }

    fn augment(&mut self, x: usize, seen: &mut [bool]) -> bool {
        for idx in 0..self.adj[x].len() {
            let y = self.adj[x][idx];
            if seen[y] {
                continue;
            }
            seen[y] = true;
            if self.pred[y] == NONE || self.augment(self.pred[y], seen) {
                self.succ[x] = y;
                self.pred[y] = x;
                return true;
            }
        }
        false
    }
}

/// Size of a maximum antichain of the subposet induced by `subset`.
pub fn width(p: &Poset, subset: &[usize]) -> Result<usize> {
    let m = Matching::new(p, subset)?;
    Ok(m.elems.len() - m.size)
}

/// A maximum antichain of the induced subposet, ascending by index.
pub fn max_antichain(p: &Poset, subset: &[usize]) -> Result<Antichain> {
    let m = Matching::new(p, subset)?;
    let k = m.elems.len();
    // Alternating search from unmatched left vertices.
    let mut left_seen = vec![false; k];
    let mut right_seen = vec![false; k];
    let mut queue: VecDeque<usize> = (0..k).filter(|&x| m.succ[x] == NONE).collect();
    for &x in &queue {
        left_seen[x] = true;
    }
    while let Some(x) = queue.pop_front() {
        for &y in &m.adj[x] {
            if right_seen[y] || m.succ[x] == y {
                continue;
            }
            right_seen[y] = true;
            let x2 = m.pred[y];
            if x2 != NONE && !left_seen[x2] {
                left_seen[x2] = true;
                queue.push_back(x2);
            }
        }
    }
    // Cover = (L \ Z) ∪ (R ∩ Z); the antichain avoids it on both sides.
    let anti: Vec<usize> = (0..k)
        .filter(|&x| left_seen[x] && !right_seen[x])
        .map(|x| m.elems[x])
        .collect();
    debug_assert_eq!(anti.len(), k - m.size);
    Ok(Antichain(anti))
}

/// A partition of `subset` into `width` chains.
pub fn min_chain_cover(p: &Poset, subset: &[usize]) -> Result<Vec<Chain>> {
    let m = Matching::new(p, subset)?;
    let k = m.elems.len();
    let mut chains = Vec::with_capacity(k - m.size);
    for start in (0..k).filter(|&y| m.pred[y] == NONE) {
        let mut chain = Vec::new();
        let mut x = start;
        loop {
            chain.push(m.elems[x]);
            if m.succ[x] == NONE {
                break;
            }
            x = m.succ[x];
        }
        chains.push(Chain(chain));
    }
    Ok(chains)
}

/// Every inclusion-maximal chain, each exactly once, in DFS order from the
/// minimal elements along cover relations.
pub fn maximal_chains(p: &Poset) -> MaximalChains {
    let n = p.size();
    let mut up = vec![Vec::new(); n];
    for (a, b) in p.cover_relations() {
        up[a].push(b);
    }
    let roots: Vec<usize> = p.minimal_in(&p.all());
    let stack = roots.into_iter().rev().map(|r| vec![r]).collect();
    MaximalChains { up, stack }
}

pub struct MaximalChains {
    up: Vec<Vec<usize>>,
    stack: Vec<Vec<usize>>,
}

impl Iterator for MaximalChains {
    type Item = Chain;

    fn next(&mut self) -> Option<Chain> {
        while let Some(path) = self.stack.pop() {
            let last = *path.last().expect("paths are non-empty");
            if self.up[last].is_empty() {
                return Some(Chain(path));
            }
            for &next in self.up[last].iter().rev() {
                let mut ext = path.clone();
                ext.push(next);
                self.stack.push(ext);
            }
        }
        None
    }
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

    /// Exhaustive maximum antichain, for cross-checking.
    fn brute_width(p: &Poset, subset: &[usize]) -> usize {
        let k = subset.len();
        (0u32..1 << k)
            .filter_map(|mask| {
                let s: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| subset[i]).collect();
                p.is_antichain(&s).then_some(s.len())
            })
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn chain_and_antichain_widths() {
        let c = Poset::chain(3);
        assert_eq!(width(&c, &c.all()).unwrap(), 1);
        let a = Poset::antichain(4);
        assert_eq!(width(&a, &a.all()).unwrap(), 4);
        assert_eq!(width(&a, &[]).unwrap(), 0);
    }

    #[test]
    fn grid_width_matches_brute_force() {
        let g = grid();
        assert_eq!(brute_width(&g, &g.all()), 2);
        assert_eq!(width(&g, &g.all()).unwrap(), 2);
    }

    #[test]
    fn grid_antichain_is_middle() {
        let g = grid();
        assert_eq!(max_antichain(&g, &g.all()).unwrap(), Antichain(vec![1, 2]));
        assert_eq!(max_antichain(&g, &[]).unwrap(), Antichain(vec![]));
        let c = Poset::chain(3);
        assert_eq!(max_antichain(&c, &c.all()).unwrap().len(), 1);
    }

    #[test]
    fn chain_covers() {
        let c = Poset::chain(3);
        assert_eq!(min_chain_cover(&c, &c.all()).unwrap(), vec![Chain(vec![0, 1, 2])]);
        let a = Poset::antichain(4);
        assert_eq!(min_chain_cover(&a, &a.all()).unwrap().len(), 4);
        let g = grid();
        let cover = min_chain_cover(&g, &g.all()).unwrap();
        assert_eq!(cover.len(), 2);
        let mut all: Vec<usize> = cover.iter().flat_map(|c| c.0.clone()).collect();
        all.sort_unstable();
        assert_eq!(all, vec![0, 1, 2, 3]);
        assert!(cover.iter().all(|c| g.is_chain(&c.0)));
    }

    #[test]
    fn out_of_range_subset() {
        let c = Poset::chain(3);
        assert!(width(&c, &[0, 5]).is_err());
        assert!(max_antichain(&c, &[7]).is_err());
        assert!(min_chain_cover(&c, &[3]).is_err());
    }

    #[test]
    fn maximal_chain_enumeration() {
        let c = Poset::chain(3);
        assert_eq!(maximal_chains(&c).collect::<Vec<_>>(), vec![Chain(vec![0, 1, 2])]);
        let g = grid();
        assert_eq!(
            maximal_chains(&g).collect::<Vec<_>>(),
            vec![Chain(vec![0, 1, 3]), Chain(vec![0, 2, 3])]
        );
        let a = Poset::antichain(2);
        assert_eq!(
            maximal_chains(&a).collect::<Vec<_>>(),
            vec![Chain(vec![0]), Chain(vec![1])]
        );
    }

    #[test]
    fn dilworth_exhaustive_small_posets() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for trial in 0..60 {
            let n = 1 + trial % 8;
            let p = Poset::random(&mut rng, n, 0.35);
            for mask in 0u32..1 << n {
                let s: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                let w = width(&p, &s).unwrap();
                let anti = max_antichain(&p, &s).unwrap();
                let cover = min_chain_cover(&p, &s).unwrap();
                assert_eq!(w, brute_width(&p, &s));
                assert_eq!(anti.len(), w);
                assert!(p.is_antichain(&anti.0));
                assert!(anti.0.iter().all(|a| s.contains(a)));
                assert_eq!(cover.len(), w);
                let mut all: Vec<usize> = cover.iter().flat_map(|c| c.0.clone()).collect();
                all.sort_unstable();
                assert_eq!(all, s);
                assert!(cover.iter().all(|c| p.is_chain(&c.0)));
            }
        }
    }
}
