//! Exact model of the cyclic modules `L_{m,M}` inside
//! `Lambda^d(C^n)^{(x) m} (x) V_M`, where `V_M` is the polynomial ring in the
//! root variables truncated above degree `M`.
//!
//! The root vector `f_{i,j}` acts on a wedge `l_I` as the matrix unit
//! `E_{j+1,i}` (substitute `l_{j+1}` for `l_i`), on tensors by the Leibniz
//! rule, and on `V_M` by multiplication with the variable `x_{i,j}`.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grassmann::{self, RootPoset};
use crate::polytope::{self, IntPoint, Params};

/// Largest span dimension [`cyclic_span_dim`] and friends will build.
pub const DEFAULT_DIM_CAP: usize = 4000;

/// `l_{i_1} ^ ... ^ l_{i_d}` with `i_1 < ... < i_d` (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WedgeLabel(pub Vec<u8>);

/// A tensor basis element: `m` wedges and a monomial of degree `<= M`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TensorLabel {
    pub wedges: Vec<WedgeLabel>,
    pub mono: Vec<u8>,
}

/// Sparse vector with exact integer coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ModuleVector(pub BTreeMap<TensorLabel, BigInt>);

/// The root vector `f_{i,j} = E_{j+1,i}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RootOperator {
    pub i: usize,
    pub j: usize,
}

impl ModuleVector {
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn add_term(&mut self, label: TensorLabel, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.0.entry(label) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

/// Parameters `(d, n, m, M)` together with the root poset they index.
#[derive(Clone, Debug)]
pub struct RepSpace {
    pub d: usize,
    pub n: usize,
    pub params: Params,
    pub roots: RootPoset,
}

impl RepSpace {
    pub fn new(d: usize, n: usize, params: Params) -> Result<Self> {
        if n > u8::MAX as usize {
            return Err(Error::BadParams(format!("n = {n} too large")));
        }
        let roots = grassmann::root_poset(d, n)?;
        Ok(RepSpace { d, n, params, roots })
    }

    pub fn operators(&self) -> Vec<RootOperator> {
        self.roots
            .roots()
            .iter()
            .map(|&(i, j)| RootOperator { i, j })
            .collect()
    }

    /// `l_{[d]}^{(x) m} (x) 1`.
    pub fn cyclic_vector(&self) -> ModuleVector {
        let top = WedgeLabel((1..=self.d as u8).collect());
        let label = TensorLabel {
            wedges: vec![top; self.params.m as usize],
            mono: vec![0; self.roots.len()],
        };
        let mut v = ModuleVector::default();
        v.add_term(label, BigInt::one());
        v
    }

    /// PBW grade: number of wedge indices outside `[d]` plus monomial degree.
    pub fn grade(&self, label: &TensorLabel) -> usize {
        let outside: usize = label
            .wedges
            .iter()
            .map(|w| w.0.iter().filter(|&&x| x as usize > self.d).count())
            .sum();
        outside + label.mono.iter().map(|&e| e as usize).sum::<usize>()
    }

    fn check_label(&self, label: &TensorLabel) -> Result<()> {
        if label.wedges.len() != self.params.m as usize {
            return Err(Error::MalformedVector(format!(
                "{} tensor factors, expected {}",
                label.wedges.len(),
                self.params.m
            )));
        }
        for w in &label.wedges {
            let sorted = w.0.windows(2).all(|p| p[0] < p[1]);
            let in_range = w.0.iter().all(|&x| x >= 1 && x as usize <= self.n);
            if w.0.len() != self.d || !sorted || !in_range {
                return Err(Error::MalformedVector(format!("bad wedge {:?}", w.0)));
            }
        }
        let deg: usize = label.mono.iter().map(|&e| e as usize).sum();
        if label.mono.len() != self.roots.len() || deg > self.params.big_m as usize {
            return Err(Error::MalformedVector(format!("bad monomial {:?}", label.mono)));
        }
        Ok(())
    }

    pub fn check_vector(&self, v: &ModuleVector) -> Result<()> {
        for (label, c) in &v.0 {
            if c.is_zero() {
                return Err(Error::MalformedVector("stored zero coefficient".into()));
            }
            self.check_label(label)?;
        }
        Ok(())
    }

    /// Leibniz action of `f_{i,j}` on `v`.
    pub fn apply_root(&self, op: RootOperator, v: &ModuleVector) -> Result<ModuleVector> {
        let var = self.roots.index(op.i, op.j).ok_or_else(|| {
            Error::BadParams(format!("f_({},{}) is not a root of the radical", op.i, op.j))
        })?;
        self.check_vector(v)?;
        Ok(self.apply_unchecked(op, var, v))
    }

    fn apply_unchecked(&self, op: RootOperator, var: usize, v: &ModuleVector) -> ModuleVector {
        let mut out = ModuleVector::default();
        let from = op.i as u8;
        let to = (op.j + 1) as u8;
        for (label, coeff) in &v.0 {
            for (t, w) in label.wedges.iter().enumerate() {
                if let Some((new, negative)) = substitute(w, from, to) {
                    let mut l = label.clone();
                    l.wedges[t] = new;
                    out.add_term(l, if negative { -coeff.clone() } else { coeff.clone() });
                }
            }
            let deg: u32 = label.mono.iter().map(|&e| u32::from(e)).sum();
            if deg < self.params.big_m {
                let mut l = label.clone();
                l.mono[var] += 1;
                out.add_term(l, coeff.clone());
            }
        }
        out
    }

    /// `f^s` applied to `v`, with `s` indexed like the root poset.
    pub fn apply_monomial(&self, s: &IntPoint, v: &ModuleVector) -> Result<ModuleVector> {
        if s.len() != self.roots.len() || !s.is_nonnegative() {
            return Err(Error::BadParams("exponent vector must be nonnegative over the roots".into()));
        }
        self.check_vector(v)?;
        let ops = self.operators();
        let mut cur = v.clone();
        for (var, &e) in s.0.iter().enumerate() {
            for _ in 0..e {
                if cur.is_zero() {
                    return Ok(cur);
                }
                cur = self.apply_unchecked(ops[var], var, &cur);
            }
        }
        Ok(cur)
    }
}

/// Replaces `from` by `to` in the wedge. `None` when `from` is absent or `to`
/// is already present; otherwise the re-sorted wedge and whether the sign
/// flipped (one flip per index strictly between `from` and `to`).
fn substitute(w: &WedgeLabel, from: u8, to: u8) -> Option<(WedgeLabel, bool)> {
    if !w.0.contains(&from) || w.0.contains(&to) {
        return None;
    }
    let (lo, hi) = (from.min(to), from.max(to));
    let between = w.0.iter().filter(|&&x| x > lo && x < hi).count();
    let mut new: Vec<u8> = w.0.iter().map(|&x| if x == from { to } else { x }).collect();
    new.sort_unstable();
    Some((WedgeLabel(new), between % 2 == 1))
}

/// Row-echelon basis over the integers, kept fraction-free: elimination is
/// `v <- b_p * v - v_p * b` followed by division by the content of `v`.
#[derive(Default)]
pub struct EchelonBasis {
    rows: Vec<ModuleVector>,
    pivots: HashMap<TensorLabel, usize>,
}

impl EchelonBasis {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` until its smallest label is not a pivot; `None` if it vanishes.
    /// Every row's pivot is its smallest label, so elimination only moves the
    /// leading label upward.
    pub fn reduce(&self, v: &ModuleVector) -> Option<ModuleVector> {
        let mut v = v.clone();
        loop {
            let (lead, b) = v.0.iter().next()?;
            let Some(&row) = self.pivots.get(lead) else {
                return Some(v);
            };
            let row = &self.rows[row];
            let a = &row.0[lead];
            let g = a.gcd(b);
            let (a, b) = (a / &g, b / &g);
            let mut next = ModuleVector::default();
            for (l, c) in &v.0 {
                next.add_term(l.clone(), c * &a);
            }
            for (l, c) in &row.0 {
                next.add_term(l.clone(), -(c * &b));
            }
            normalize(&mut next);
            v = next;
        }
    }

    /// Adds `v` if it is independent of the current rows.
    pub fn insert(&mut self, v: &ModuleVector) -> bool {
        match self.reduce(v) {
            Some(mut r) => {
                normalize(&mut r);
                let pivot = r.0.keys().next().expect("residue is nonzero").clone();
                self.pivots.insert(pivot, self.rows.len());
                self.rows.push(r);
                true
            }
            None => false,
        }
    }
}

fn normalize(v: &mut ModuleVector) {
    let g = v.0.values().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g > BigInt::one() {
        for c in v.0.values_mut() {
            *c /= &g;
        }
    }
}

/// Dimension of `U(a_d) l_{m,M}`, by breadth-first closure under all root operators.
pub fn cyclic_span_dim(d: usize, n: usize, params: Params, cap: usize) -> Result<usize> {
    let space = RepSpace::new(d, n, params)?;
    let ops = space.operators();
    let mut basis = EchelonBasis::default();
    let mut queue = VecDeque::new();
    let start = space.cyclic_vector();
    basis.insert(&start);
    queue.push_back(start);
    while let Some(v) = queue.pop_front() {
        for (var, &op) in ops.iter().enumerate() {
            let w = space.apply_unchecked(op, var, &v);
            if w.is_zero() {
                continue;
            }
            if basis.insert(&w) {
                if basis.rank() > cap {
                    return Err(Error::CapExceeded {
                        what: "cyclic span",
                        count: basis.rank(),
                        cap,
                    });
                }
                queue.push_back(w);
            }
        }
    }
    Ok(basis.rank())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisReport {
    pub d: usize,
    pub n: usize,
    pub m: u32,
    #[serde(rename = "M")]
    pub big_m: u32,
    pub points: usize,
    pub rank: usize,
    pub span_dim: usize,
    pub independent: bool,
    pub full_span: bool,
}

impl BasisReport {
    pub fn passed(&self) -> bool {
        self.independent && self.full_span
    }
}

/// Checks that `f^s l_{m,M}` for `s` in `S(m, M)` are independent and span the module.
pub fn basis_check(d: usize, n: usize, params: Params, cap: usize) -> Result<BasisReport> {
    let space = RepSpace::new(d, n, params)?;
    let points = polytope::enumerate_points(&space.roots.poset, params);
    if points.len() > cap {
        return Err(Error::CapExceeded {
            what: "lattice point set",
            count: points.len(),
            cap,
        });
    }
    let start = space.cyclic_vector();
    let mut basis = EchelonBasis::default();
    for s in &points {
        let v = space.apply_monomial(s, &start)?;
        basis.insert(&v);
    }
    let span_dim = cyclic_span_dim(d, n, params, cap)?;
    let rank = basis.rank();
    Ok(BasisReport {
        d,
        n,
        m: params.m,
        big_m: params.big_m,
        points: points.len(),
        rank,
        span_dim,
        independent: rank == points.len(),
        full_span: rank == span_dim,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub d: usize,
    pub n: usize,
    pub m: u32,
    #[serde(rename = "M")]
    pub big_m: u32,
    pub seed: u64,
    pub samples: usize,
    pub vanished: usize,
    pub boundary_probes: usize,
    pub boundary_nonzero: usize,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.vanished == self.samples
            && self.boundary_probes > 0
            && self.boundary_nonzero == self.boundary_probes
    }
}

/// A tuple of distinct roots with positive exponents.
fn random_tuple(rng: &mut ChaCha8Rng, roots: usize, r: usize, total: usize) -> IntPoint {
    let mut idx: Vec<usize> = (0..roots).collect();
    idx.shuffle(rng);
    idx.truncate(r);
    // Positive composition of `total` into `r` parts via sorted cut points.
    let mut cuts: Vec<usize> = (1..total).collect();
    cuts.shuffle(rng);
    cuts.truncate(r - 1);
    cuts.sort_unstable();
    let mut parts = Vec::with_capacity(r);
    let mut prev = 0;
    for c in cuts.into_iter().chain(std::iter::once(total)) {
        parts.push(c - prev);
        prev = c;
    }
    let mut s = IntPoint::zeros(roots);
    for (k, &root) in idx.iter().enumerate() {
        s.0[root] = parts[k] as i64;
    }
    s
}

/// Samples relations `prod f^{b_k} l_{m,M} = 0` with `sum b_k = r*m + M + 1`
/// over `r` distinct roots, and probes tuples at `sum b_k = r*m + M` lying in
/// `S(m, M)`, which must not vanish.
pub fn relation_check(
    d: usize,
    n: usize,
    params: Params,
    samples: usize,
    seed: u64,
) -> Result<RelationReport> {
    if samples == 0 {
        return Err(Error::BadParams("samples must be at least 1".into()));
    }
    let space = RepSpace::new(d, n, params)?;
    let k = space.roots.len();
    let (m, big_m) = (params.m as usize, params.big_m as usize);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = space.cyclic_vector();
    let mut report = RelationReport {
        d,
        n,
        m: params.m,
        big_m: params.big_m,
        seed,
        samples,
        vanished: 0,
        boundary_probes: 0,
        boundary_nonzero: 0,
    };
    for _ in 0..samples {
        let r_hi = if m == 0 { k.min(big_m + 1) } else { k };
        let r = rng.gen_range(1..=r_hi);
        let s = random_tuple(&mut rng, k, r, r * m + big_m + 1);
        let v = space.apply_monomial(&s, &start)?;
        if !v.is_zero() {
            return Err(Error::RelationViolated(format!(
                "f^{:?} l_(m,M) != 0 with exponent sum {}",
                s.0,
                s.total()
            )));
        }
        report.vanished += 1;

        let boundary = r * m + big_m;
        if boundary >= r {
            let s = random_tuple(&mut rng, k, r, boundary);
            if polytope::membership(&space.roots.poset, &s, params)? {
                probe(&space, &start, &s, &mut report)?;
            }
        }
    }
    // Single-root probe f^{m+M}: its exponent vector is always in S(m, M).
    let root = rng.gen_range(0..k);
    let mut s = IntPoint::zeros(k);
    s.0[root] = (m + big_m) as i64;
    probe(&space, &start, &s, &mut report)?;
    Ok(report)
}

fn probe(space: &RepSpace, start: &ModuleVector, s: &IntPoint, report: &mut RelationReport) -> Result<()> {
    report.boundary_probes += 1;
    if space.apply_monomial(s, start)?.is_zero() {
        return Err(Error::RelationViolated(format!(
            "basis monomial f^{:?} kills the cyclic vector",
            s.0
        )));
    }
    report.boundary_nonzero += 1;
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradingReport {
    pub vectors: usize,
    pub images: usize,
    pub passed: bool,
}

/// Checks that every root operator raises the PBW grade by exactly one on the
/// vectors `f^s l_{m,M}`, `s` in `S(m, M)`, each of which is homogeneous of grade `|s|`.
pub fn pbw_grading_check(d: usize, n: usize, params: Params, cap: usize) -> Result<GradingReport> {
    let space = RepSpace::new(d, n, params)?;
    let points = polytope::enumerate_points(&space.roots.poset, params);
    if points.len() > cap {
        return Err(Error::CapExceeded {
            what: "lattice point set",
            count: points.len(),
            cap,
        });
    }
    let start = space.cyclic_vector();
    let ops = space.operators();
    let mut report = GradingReport {
        vectors: 0,
        images: 0,
        passed: true,
    };
    for s in &points {
        let v = space.apply_monomial(s, &start)?;
        let g = s.total() as usize;
        report.vectors += 1;
        report.passed &= v.0.keys().all(|l| space.grade(l) == g);
        for (var, &op) in ops.iter().enumerate() {
            let w = space.apply_unchecked(op, var, &v);
            report.images += 1;
            report.passed &= w.0.keys().all(|l| space.grade(l) == g + 1);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single(space: &RepSpace, wedges: &[&[u8]], mono: &[u8]) -> ModuleVector {
        let mut v = ModuleVector::default();
        v.add_term(
            TensorLabel {
                wedges: wedges.iter().map(|w| WedgeLabel(w.to_vec())).collect(),
                mono: if mono.is_empty() { vec![0; space.roots.len()] } else { mono.to_vec() },
            },
            BigInt::one(),
        );
        v
    }

    #[test]
    fn substitution_sign() {
        let space = RepSpace::new(2, 4, Params::new(1, 0)).unwrap();
        let v = space.cyclic_vector();
        let w = space.apply_root(RootOperator { i: 1, j: 2 }, &v).unwrap();
        let mut expected = single(&space, &[&[2, 3]], &[]);
        for c in expected.0.values_mut() {
            *c = -BigInt::one();
        }
        assert_eq!(w, expected);
        // l_2 -> l_3 in l_1 ^ l_2: nothing in between.
        let w = space.apply_root(RootOperator { i: 2, j: 2 }, &v).unwrap();
        assert_eq!(w, single(&space, &[&[1, 3]], &[]));
    }

    #[test]
    fn antisymmetry_of_substitution() {
        // Replacing l_1 by l_4 in l_1 ^ l_2 ^ l_3 moves l_4 past two factors.
        assert_eq!(
            substitute(&WedgeLabel(vec![1, 2, 3]), 1, 4),
            Some((WedgeLabel(vec![2, 3, 4]), false))
        );
        assert_eq!(
            substitute(&WedgeLabel(vec![1, 3]), 1, 4),
            Some((WedgeLabel(vec![3, 4]), true))
        );
        assert_eq!(substitute(&WedgeLabel(vec![1, 4]), 1, 4), None);
        assert_eq!(substitute(&WedgeLabel(vec![2, 3]), 1, 4), None);
    }

    #[test]
    fn square_of_root_kills_wedge() {
        let space = RepSpace::new(2, 4, Params::new(1, 0)).unwrap();
        let ops = space.operators();
        for &op in &ops {
            let once = space.apply_root(op, &space.cyclic_vector()).unwrap();
            assert!(!once.is_zero());
            assert!(space.apply_root(op, &once).unwrap().is_zero());
        }
    }

    #[test]
    fn truncation_at_top_degree() {
        let space = RepSpace::new(2, 4, Params::new(1, 1)).unwrap();
        let v = single(&space, &[&[1, 2]], &[0, 1, 0, 0]);
        let w = space.apply_root(RootOperator { i: 1, j: 3 }, &v).unwrap();
        assert!(w.0.keys().all(|l| l.mono == vec![0, 1, 0, 0]));
        assert_eq!(w.len(), 1);
    }

    #[test]
    fn malformed_vectors_rejected() {
        let space = RepSpace::new(2, 4, Params::new(1, 0)).unwrap();
        let bad = single(&space, &[&[2, 1]], &[]);
        assert!(matches!(
            space.apply_root(RootOperator { i: 1, j: 2 }, &bad),
            Err(Error::MalformedVector(_))
        ));
        let bad = single(&space, &[&[1, 2], &[1, 2]], &[]);
        assert!(space.check_vector(&bad).is_err());
        let bad = single(&space, &[&[1, 2]], &[1, 0, 0, 0]);
        assert!(space.check_vector(&bad).is_err());
        assert!(space
            .apply_root(RootOperator { i: 3, j: 2 }, &space.cyclic_vector())
            .is_err());
    }

    #[test]
    fn operators_commute() {
        let space = RepSpace::new(2, 4, Params::new(2, 1)).unwrap();
        let ops = space.operators();
        let mut v = space.cyclic_vector();
        v = space.apply_root(ops[0], &v).unwrap();
        for &a in &ops {
            for &b in &ops {
                let ab = space.apply_root(a, &space.apply_root(b, &v).unwrap()).unwrap();
                let ba = space.apply_root(b, &space.apply_root(a, &v).unwrap()).unwrap();
                assert_eq!(ab, ba);
            }
        }
    }

    #[test]
    fn span_dimensions() {
        let cap = DEFAULT_DIM_CAP;
        assert_eq!(cyclic_span_dim(2, 4, Params::new(1, 0), cap).unwrap(), 6);
        assert_eq!(cyclic_span_dim(2, 4, Params::new(0, 1), cap).unwrap(), 5);
        assert_eq!(cyclic_span_dim(2, 4, Params::new(1, 1), cap).unwrap(), 19);
        assert_eq!(cyclic_span_dim(3, 6, Params::new(0, 0), cap).unwrap(), 1);
        assert!(matches!(
            cyclic_span_dim(2, 4, Params::new(1, 1), 5),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn basis_reports() {
        let r = basis_check(2, 4, Params::new(1, 1), DEFAULT_DIM_CAP).unwrap();
        assert!(r.passed());
        assert_eq!((r.points, r.rank, r.span_dim), (19, 19, 19));
        let r = basis_check(2, 4, Params::new(1, 0), DEFAULT_DIM_CAP).unwrap();
        assert!(r.passed());
        assert_eq!(r.rank, 6);
        let r = basis_check(3, 5, Params::new(0, 0), DEFAULT_DIM_CAP).unwrap();
        assert_eq!((r.points, r.rank), (1, 1));
    }

    #[test]
    fn relation_examples() {
        let space = RepSpace::new(2, 4, Params::new(1, 0)).unwrap();
        let f13 = space.roots.index(1, 3).unwrap();
        let mut s = IntPoint::zeros(4);
        s.0[f13] = 2;
        assert!(space.apply_monomial(&s, &space.cyclic_vector()).unwrap().is_zero());

        let space = RepSpace::new(2, 4, Params::new(1, 1)).unwrap();
        s.0[f13] = 3;
        assert!(space.apply_monomial(&s, &space.cyclic_vector()).unwrap().is_zero());
        s.0[f13] = 2;
        assert!(!space.apply_monomial(&s, &space.cyclic_vector()).unwrap().is_zero());

        let r = relation_check(2, 4, Params::new(1, 1), 50, 3).unwrap();
        assert!(r.passed());
        assert_eq!(r.seed, 3);
        assert!(relation_check(2, 4, Params::new(1, 1), 0, 3).is_err());
    }

    #[test]
    fn grading() {
        let space = RepSpace::new(2, 4, Params::new(1, 0)).unwrap();
        let v = space.cyclic_vector();
        assert_eq!(space.grade(v.0.keys().next().unwrap()), 0);
        let w = space.apply_root(RootOperator { i: 1, j: 2 }, &v).unwrap();
        assert_eq!(space.grade(w.0.keys().next().unwrap()), 1);
        for i in 1..=4u8 {
            for j in i + 1..=4 {
                let l = TensorLabel { wedges: vec![WedgeLabel(vec![i, j])], mono: vec![0; 4] };
                let outside = [i, j].iter().filter(|&&x| x > 2).count();
                assert_eq!(space.grade(&l), outside);
            }
        }
        assert!(pbw_grading_check(2, 4, Params::new(1, 1), DEFAULT_DIM_CAP).unwrap().passed);
    }
}
