//! Schubert stratification of `Gr(d, n)` relative to `L = L^- (+) L^+`
//! (`L^-` = first `d` coordinates) and the fibers of the graph closure
//! projected onto the Grassmannian.

use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grassmann::check_dn;
use crate::linalg::{self, rat, Rat, RatMatrix};
use crate::qpoly::QPolynomial;

/// `[n choose d]_q` via `[n, d] = [n-1, d-1] + q^d [n-1, d]`.
pub fn gaussian_binomial(n: usize, d: usize) -> Result<QPolynomial> {
    if d > n {
        return Err(Error::BadParams(format!("need 0 <= d <= n, got d={d}, n={n}")));
    }
    // row[k] holds [i choose k]_q for the current i.
    let mut row = vec![QPolynomial::one()];
    for i in 1..=n {
        let mut next = vec![QPolynomial::zero(); i + 1];
        for (k, slot) in next.iter_mut().enumerate() {
            let left = if k > 0 { row[k - 1].clone() } else { QPolynomial::zero() };
            let right = row
                .get(k)
                .map(|p| &QPolynomial::monomial(k) * p)
                .unwrap_or_default();
            *slot = &left + &right;
        }
        row = next;
    }
    Ok(row.swap_remove(d))
}

fn for_each_subset(n: usize, d: usize, f: &mut impl FnMut(&[usize])) {
    fn go(n: usize, d: usize, next: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == d {
            f(cur);
            return;
        }
        for x in next..=n {
            if n - x + 1 < d - cur.len() {
                break;
            }
            cur.push(x);
            go(n, d, x + 1, cur, f);
            cur.pop();
        }
    }
    go(n, d, 1, &mut Vec::with_capacity(d), f);
}

/// Cell dimension of `C_I`: `d(n-d) - sum_t (i_t - t)`, so `I = [d]` is the open cell.
pub fn cell_dim(d: usize, n: usize, subset: &[usize]) -> usize {
    let shift: usize = subset.iter().enumerate().map(|(t, &i)| i - (t + 1)).sum();
    d * (n - d) - shift
}

/// Poincaré polynomial of each stratum `X_k`, `k = 0..=min(d, n-d)`.
pub fn strata_poincare(d: usize, n: usize) -> Result<Vec<QPolynomial>> {
    check_dn(d, n)?;
    let kmax = d.min(n - d);
    let mut coeffs = vec![vec![0i64; d * (n - d) + 1]; kmax + 1];
    for_each_subset(n, d, &mut |subset| {
        let k = subset.iter().filter(|&&i| i > d).count();
        coeffs[k][cell_dim(d, n, subset)] += 1;
    });
    Ok(coeffs.into_iter().map(QPolynomial::new).collect())
}

/// `sum_k P(X_k) * P(P^{k^2 - 1})`, with a point fiber over `X_0`.
pub fn graph_poincare(d: usize, n: usize) -> Result<QPolynomial> {
    let strata = strata_poincare(d, n)?;
    Ok(strata
        .iter()
        .enumerate()
        .fold(QPolynomial::zero(), |acc, (k, p)| {
            &acc + &(p * &QPolynomial::q_integer((k * k).max(1)))
        }))
}

/// A `d`-dimensional subspace of `Q^n`, stored as the reduced row echelon
/// form of a spanning matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    d: usize,
    n: usize,
    rows: RatMatrix,
}

impl Subspace {
    pub fn new(rows: RatMatrix) -> Result<Self> {
        let d = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if d == 0 || d >= n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::BadParams(format!(
                "subspace needs 1 <= rows < columns with equal row lengths, got {d} rows"
            )));
        }
        let (reduced, pivots) = linalg::rref(&rows, n);
        if pivots.len() < d {
            return Err(Error::RankDeficient {
                rank: pivots.len(),
                expected: d,
            });
        }
        Ok(Subspace { d, n, rows: reduced })
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &RatMatrix {
        &self.rows
    }

    fn minus_block(&self) -> RatMatrix {
        self.rows.iter().map(|r| r[..self.d].to_vec()).collect()
    }

    fn plus_block(&self) -> RatMatrix {
        self.rows.iter().map(|r| r[self.d..].to_vec()).collect()
    }

    /// Basis of `U ∩ L^+`, in `L^+` coordinates.
    pub fn plus_intersection(&self) -> RatMatrix {
        let plus = self.plus_block();
        linalg::left_kernel(&self.minus_block(), self.d)
            .into_iter()
            .map(|c| {
                (0..self.n - self.d)
                    .map(|b| (0..self.d).fold(Rat::zero(), |acc, t| acc + &c[t] * &plus[t][b]))
                    .collect()
            })
            .collect()
    }
}

/// `k = dim(U ∩ L^+) = d - rank(pr^-(U))`.
pub fn stratum_of(u: &Subspace) -> usize {
    u.d - linalg::rank(&u.minus_block(), u.d)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberDescription {
    pub k: usize,
    /// `d x (n-d)` matrices; entry `[a][b]` is the `l_{d+1+b}` coefficient of `f(l_{1+a})`.
    pub basis: Vec<RatMatrix>,
    pub proj_dim: usize,
}

/// Linear maps `f: L^- -> L^+` with `Im f ⊆ U ∩ L^+` and `pr^-(U) ⊆ ker f`;
/// the fiber over `U` is their projectivization.
pub fn fiber_of(u: &Subspace) -> FiberDescription {
    let k = stratum_of(u);
    let targets = u.plus_intersection();
    // Functionals on L^- vanishing on pr^-(U).
    let functionals = linalg::kernel(&u.minus_block(), u.d);
    debug_assert_eq!(targets.len(), k);
    debug_assert_eq!(functionals.len(), k);
    let mut basis = Vec::with_capacity(k * k);
    for w in &targets {
        for phi in &functionals {
            basis.push(
                (0..u.d)
                    .map(|a| w.iter().map(|x| &phi[a] * x).collect())
                    .collect(),
            );
        }
    }
    FiberDescription {
        k,
        basis,
        proj_dim: (k * k).saturating_sub(1),
    }
}

/// Both containment conditions for a map given as a `d x (n-d)` matrix.
pub fn satisfies_fiber_conditions(u: &Subspace, f: &RatMatrix) -> bool {
    let plus_dim = u.n - u.d;
    // pr^-(U) ⊆ ker f: every row of the L^- block maps to zero.
    let kills = linalg::mul(&u.minus_block(), f, u.d, plus_dim)
        .iter()
        .all(|r| r.iter().all(Zero::is_zero));
    // Im f ⊆ U ∩ L^+: adding the image rows does not raise the rank.
    let w = u.plus_intersection();
    let mut stacked = w.clone();
    stacked.extend(f.iter().cloned());
    kills && linalg::rank(&stacked, plus_dim) == w.len()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PreimageRow {
    pub k: usize,
    pub stratum_dim: usize,
    pub fiber_dim: usize,
    pub preimage_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PreimageTable {
    pub d: usize,
    pub n: usize,
    pub rows: Vec<PreimageRow>,
    pub expected: usize,
    pub constant: bool,
}

/// `dim phi^{-1}(X_k) = dim X_k + k^2 - 1` for `k >= 1`, with `dim X_k` read
/// off the stratum's Poincaré polynomial.
pub fn preimage_dim_table(d: usize, n: usize) -> Result<PreimageTable> {
    let strata = strata_poincare(d, n)?;
    let expected = d * (n - d) - 1;
    let rows: Vec<PreimageRow> = strata
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, p)| {
            let stratum_dim = p.degree().expect("strata are nonempty");
            PreimageRow {
                k,
                stratum_dim,
                fiber_dim: k * k - 1,
                preimage_dim: stratum_dim + k * k - 1,
            }
        })
        .collect();
    let constant = rows.iter().all(|r| r.preimage_dim == expected);
    Ok(PreimageTable {
        d,
        n,
        rows,
        expected,
        constant,
    })
}

/// A random rational point of `X_k`, scrambled by `GL(L^-) x GL(L^+)` and a
/// random change of spanning rows.
pub fn random_subspace_in_stratum<R: Rng + ?Sized>(
    rng: &mut R,
    d: usize,
    n: usize,
    k: usize,
) -> Result<Subspace> {
    check_dn(d, n)?;
    if k > d.min(n - d) {
        return Err(Error::BadParams(format!("stratum {k} is empty in Gr({d},{n})")));
    }
    let plus = n - d;
    loop {
        let mut rows = linalg::zeros(d, n);
        for (t, row) in rows.iter_mut().enumerate() {
            if t < d - k {
                row[t] = Rat::one();
            }
            for x in row[d..].iter_mut() {
                *x = rat(rng.gen_range(-3..=3));
            }
        }
        let tail: RatMatrix = rows[d - k..].iter().map(|r| r[d..].to_vec()).collect();
        if linalg::rank(&tail, plus) < k {
            continue;
        }
        let minus_mix = random_invertible(rng, d);
        let plus_mix = random_invertible(rng, plus);
        let row_mix = random_invertible(rng, d);
        let mut cols = linalg::zeros(n, n);
        for a in 0..d {
            for b in 0..d {
                cols[a][b] = minus_mix[a][b].clone();
            }
        }
        for a in 0..plus {
            for b in 0..plus {
                cols[d + a][d + b] = plus_mix[a][b].clone();
            }
        }
        let mixed = linalg::mul(&linalg::mul(&row_mix, &rows, d, n), &cols, n, n);
        return Subspace::new(mixed);
    }
}

fn random_invertible<R: Rng + ?Sized>(rng: &mut R, size: usize) -> RatMatrix {
    loop {
        let m: RatMatrix = (0..size)
            .map(|_| (0..size).map(|_| rat(rng.gen_range(-2..=2))).collect())
            .collect();
        if linalg::rank(&m, size) == size {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn poly(c: &[i64]) -> QPolynomial {
        QPolynomial::new(c.to_vec())
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(4, 2).unwrap(), poly(&[1, 1, 2, 1, 1]));
        assert_eq!(gaussian_binomial(5, 0).unwrap(), poly(&[1]));
        assert_eq!(
            gaussian_binomial(6, 3).unwrap(),
            poly(&[1, 1, 2, 3, 3, 3, 3, 2, 1, 1])
        );
        assert!(gaussian_binomial(2, 3).is_err());
    }

    #[test]
    fn strata_of_gr36() {
        let s = strata_poincare(3, 6).unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(s[0], QPolynomial::monomial(9));
        assert_eq!(s[2], poly(&[0, 1, 2, 3, 2, 1]));
        assert_eq!(s[3], poly(&[1]));
        for (k, p) in s.iter().enumerate() {
            assert_eq!(p.degree(), Some(9 - k * k));
        }
    }

    #[test]
    fn graph_polynomials() {
        assert_eq!(
            graph_poincare(3, 6).unwrap(),
            poly(&[1, 2, 4, 7, 10, 11, 10, 6, 3, 1])
        );
        assert!(!graph_poincare(3, 6).unwrap().is_palindromic());
        for n in 2..=10 {
            assert_eq!(graph_poincare(1, n).unwrap(), QPolynomial::q_integer(n));
        }
        // Gr(2,4): q^4 + (q + 2q^2 + q^3) + 1 * (1 + q + q^2 + q^3)
        assert_eq!(graph_poincare(2, 4).unwrap(), poly(&[1, 2, 3, 2, 1]));
        assert!(graph_poincare(3, 3).is_err());
    }

    #[test]
    fn strata_examples() {
        let u = Subspace::from_ints(&[vec![0, 0, 1, 0], vec![0, 0, 0, 1]]).unwrap();
        assert_eq!(stratum_of(&u), 2);
        let u = Subspace::from_ints(&[vec![1, 0, 1, 0], vec![0, 1, 0, 0]]).unwrap();
        assert_eq!(stratum_of(&u), 0);
        let u = Subspace::from_ints(&[vec![1, 0, 0, 0], vec![0, 0, 1, 0]]).unwrap();
        assert_eq!(stratum_of(&u), 1);
        assert!(matches!(
            Subspace::from_ints(&[vec![1, 0, 0, 0], vec![2, 0, 0, 0]]),
            Err(Error::RankDeficient { rank: 1, expected: 2 })
        ));
    }

    #[test]
    fn fiber_examples() {
        let u = Subspace::from_ints(&[vec![0, 0, 1, 0], vec![0, 0, 0, 1]]).unwrap();
        let f = fiber_of(&u);
        assert_eq!((f.k, f.basis.len(), f.proj_dim), (2, 4, 3));
        let u = Subspace::from_ints(&[vec![1, 0, 1, 0], vec![0, 1, 0, 0]]).unwrap();
        let f = fiber_of(&u);
        assert_eq!((f.k, f.basis.len(), f.proj_dim), (0, 0, 0));
        let u = Subspace::from_ints(&[vec![1, 0, 0, 0], vec![0, 0, 1, 0]]).unwrap();
        let f = fiber_of(&u);
        assert_eq!((f.k, f.basis.len(), f.proj_dim), (1, 1, 0));
        // The single map sends l_2 to l_3 and kills l_1.
        assert_eq!(f.basis[0], vec![vec![rat(0), rat(0)], vec![rat(1), rat(0)]]);
    }

    #[test]
    fn random_fibers_satisfy_conditions() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for (d, n) in [(2, 4), (2, 5), (3, 6), (3, 5), (1, 4)] {
            for k in 0..=d.min(n - d) {
                for _ in 0..3 {
                    let u = random_subspace_in_stratum(&mut rng, d, n, k).unwrap();
                    assert_eq!(stratum_of(&u), k);
                    let f = fiber_of(&u);
                    assert_eq!(f.basis.len(), k * k);
                    assert!(f.basis.iter().all(|b| satisfies_fiber_conditions(&u, b)));
                    let flat: RatMatrix = f.basis.iter().map(|b| b.concat()).collect();
                    assert_eq!(linalg::rank(&flat, d * (n - d)), k * k);
                }
            }
        }
    }

    #[test]
    fn preimage_tables() {
        let t = preimage_dim_table(3, 6).unwrap();
        assert!(t.constant);
        assert!(t.rows.iter().all(|r| r.preimage_dim == 8));
        let t = preimage_dim_table(2, 4).unwrap();
        let last = t.rows.last().unwrap();
        assert_eq!((last.k, last.stratum_dim, last.fiber_dim, last.preimage_dim), (2, 0, 3, 3));
        let t = preimage_dim_table(1, 6).unwrap();
        assert_eq!(t.rows.len(), 1);
        assert_eq!(t.rows[0].preimage_dim, 4);
    }

    #[test]
    fn stratum_dims_match_closed_form() {
        for n in 2..=8 {
            for d in 1..n {
                let s = strata_poincare(d, n).unwrap();
                for (k, p) in s.iter().enumerate() {
                    // dim Gr(k, n-d) + dim Gr(d-k, n-k)
                    let closed = k * (n - d - k) + (d - k) * (n - d);
                    assert_eq!(p.degree(), Some(closed));
                }
            }
        }
    }
}
