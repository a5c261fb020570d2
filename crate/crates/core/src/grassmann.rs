//! The root poset `R(d)` of the abelian radical, its Dyck paths and the FFLV
//! point sets.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::dilworth;
use crate::error::{Error, Result};
use crate::polytope::{self, IntPoint, Params};
use crate::poset::{Chain, Poset};

/// Path-subset count above which [`inequality_system`] refuses to run.
pub const DEFAULT_SUBSET_CAP: usize = 1 << 20;

/// Roots `a_{i,j}`, `1 <= i <= d <= j <= n-1`, ordered componentwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootPoset {
    pub d: usize,
    pub n: usize,
    pub poset: Poset,
    roots: Vec<(usize, usize)>,
}

impl RootPoset {
    /// `(i, j)` of each element, by index.
    pub fn roots(&self) -> &[(usize, usize)] {
        &self.roots
    }

    pub fn index(&self, i: usize, j: usize) -> Option<usize> {
        if !(1..=self.d).contains(&i) || !(self.d..self.n).contains(&j) {
            return None;
        }
        Some((i - 1) * (self.n - self.d) + (j - self.d))
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

pub fn check_dn(d: usize, n: usize) -> Result<()> {
    if d == 0 || d >= n {
        return Err(Error::BadParams(format!("need 1 <= d < n, got d={d}, n={n}")));
    }
    Ok(())
}

pub fn root_label(i: usize, j: usize) -> String {
    format!("a_{i}_{j}")
}

/// Elements are listed row by row (`i` outer, `j` inner) and built from the
/// covers `(i, j) < (i+1, j)` and `(i, j) < (i, j+1)`.
pub fn root_poset(d: usize, n: usize) -> Result<RootPoset> {
    check_dn(d, n)?;
    let roots: Vec<(usize, usize)> = (1..=d)
        .flat_map(|i| (d..n).map(move |j| (i, j)))
        .collect();
    let cols = n - d;
    let at = |i: usize, j: usize| (i - 1) * cols + (j - d);
    let mut covers = Vec::new();
    for &(i, j) in &roots {
        if i < d {
            covers.push((at(i, j), at(i + 1, j)));
        }
        if j + 1 < n {
            covers.push((at(i, j), at(i, j + 1)));
        }
    }
    let labels = roots.iter().map(|&(i, j)| root_label(i, j)).collect();
    let poset = Poset::from_index_relations(labels, &covers)?;
    Ok(RootPoset { d, n, poset, roots })
}

/// Maximal chains of `R(d)`: lattice paths from `a_{1,d}` to `a_{d,n-1}`.
pub fn dyck_paths(rp: &RootPoset) -> Vec<Chain> {
    dilworth::maximal_chains(&rp.poset).collect()
}

/// Integer points with every Dyck-path sum at most `m`.
pub fn fflv_points(d: usize, n: usize, m: u32) -> Result<Vec<IntPoint>> {
    let rp = root_poset(d, n)?;
    Ok(polytope::enumerate_points(&rp.poset, Params::new(m, 0)))
}

/// `prod_{i <= d < j} (m + j - i) / (j - i)`, the dimension of the irreducible
/// module of highest weight `m * omega_d`.
pub fn weyl_dim(d: usize, n: usize, m: u32) -> Result<BigUint> {
    check_dn(d, n)?;
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..=d {
        for j in d + 1..=n {
            num *= BigUint::from(m as usize + j - i);
            den *= BigUint::from(j - i);
        }
    }
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::NonIntegerResult);
    }
    Ok(q)
}

/// One row of the path-union inequality list: `sum_{support} s <= bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathInequality {
    pub support: Vec<usize>,
    pub bound: u64,
}

/// For each `r <= r_max` and each `r`-subset of Dyck paths, the union of the
/// paths with bound `r*m + M`; duplicate supports keep the smallest bound.
/// `r_max` is clamped to `min(d, n-d)`, beyond which nothing new appears.
pub fn inequality_system(
    d: usize,
    n: usize,
    params: Params,
    r_max: usize,
    subset_cap: usize,
) -> Result<Vec<PathInequality>> {
    let rp = root_poset(d, n)?;
    let paths = dyck_paths(&rp);
    let r_max = r_max.min(d.min(n - d));
    let total: usize = (1..=r_max).map(|r| binomial(paths.len(), r)).sum();
    if total > subset_cap {
        return Err(Error::TooLarge {
            what: "Dyck path subset",
            count: total,
            cap: subset_cap,
        });
    }
    let mut best: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let mut pick = Vec::new();
    for r in 1..=r_max {
        for_each_subset(paths.len(), r, 0, &mut pick, &mut |idx| {
            let mut support: Vec<usize> = idx.iter().flat_map(|&k| paths[k].0.iter().copied()).collect();
            support.sort_unstable();
            support.dedup();
            let bound = r as u64 * u64::from(params.m) + u64::from(params.big_m);
            best.entry(support)
                .and_modify(|b| *b = (*b).min(bound))
                .or_insert(bound);
        });
    }
    Ok(best
        .into_iter()
        .map(|(support, bound)| PathInequality { support, bound })
        .collect())
}

fn for_each_subset(
    n: usize,
    r: usize,
    start: usize,
    pick: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if pick.len() == r {
        f(pick);
        return;
    }
    for k in start..n {
        if n - k < r - pick.len() {
            break;
        }
        pick.push(k);
        for_each_subset(n, r, k + 1, pick, f);
        pick.pop();
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Membership through an explicit inequality list (nonnegativity included).
pub fn satisfies(ineqs: &[PathInequality], z: &IntPoint) -> bool {
    z.is_nonnegative()
        && ineqs
            .iter()
            .all(|q| q.support.iter().map(|&i| z.0[i]).sum::<i64>() <= q.bound as i64)
}
