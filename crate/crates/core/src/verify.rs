//! The property suite behind `posetpoly verify`: every module invariant at
//! its stated scale, each check seeded from one master seed.

use std::collections::HashSet;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dilworth;
use crate::error::Result;
use crate::geometry::{self, Subspace};
use crate::grassmann::{self, root_poset};
use crate::linalg::{self, rat};
use crate::polytope::{self, IntPoint, Method, Params};
use crate::poset::Poset;
use crate::qpoly::QPolynomial;
use crate::rep::{self, RepSpace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
}

type CheckFn = fn(&mut ChaCha8Rng) -> Result<std::result::Result<String, String>>;

const CHECKS: &[(&str, CheckFn)] = &[
    ("poset.dilworth_consistency", dilworth_consistency),
    ("poset.width_monotone", width_monotone),
    ("polytope.flow_matches_brute", flow_matches_brute),
    ("polytope.excess_monotone", excess_monotone),
    ("polytope.strip_unit", strip_unit_drops_excess),
    ("polytope.decompose_certificates", decompose_certificates),
    ("polytope.down_set", down_set),
    ("polytope.minkowski", minkowski),
    ("polytope.partition", partition),
    ("grassmann.fflv_weyl", fflv_weyl),
    ("grassmann.inequality_system", inequality_agreement),
    ("grassmann.dyck_count", dyck_count),
    ("grassmann.antichains_level_one", antichains_level_one),
    ("rep.span_matches_points", span_matches_points),
    ("rep.basis_check", basis_checks),
    ("rep.operators_commute", operators_commute),
    ("rep.relations", relations),
    ("rep.pbw_grading", pbw_grading),
    ("geometry.strata_sum", strata_sum),
    ("geometry.strata_degree", strata_degree),
    ("geometry.projective_line_case", projective_case),
    ("geometry.gr36_polynomial", gr36_polynomial),
    ("geometry.fibers", fibers),
    ("geometry.stratum_row_invariance", stratum_row_invariance),
    ("geometry.preimage_dims", preimage_dims),
];

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(name, _)| *name).collect()
}

/// Runs every check whose name starts with `prefix` (all of them for `""`).
pub fn run(seed: u64, prefix: &str) -> VerifyReport {
    let mut checks = Vec::new();
    for (stream, (name, check)) in CHECKS.iter().enumerate() {
        if !name.starts_with(prefix) {
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream as u64);
        let (passed, detail) = match check(&mut rng) {
            Ok(Ok(detail)) => (true, detail),
            Ok(Err(detail)) => (false, detail),
            Err(e) => (false, format!("{}: {e}", e.kind())),
        };
        checks.push(CheckOutcome { name, passed, detail });
    }
    VerifyReport {
        seed,
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

fn random_poset(rng: &mut ChaCha8Rng, max_size: usize) -> Poset {
    let n = rng.gen_range(1..=max_size);
    let density = rng.gen_range(0.0..=1.0);
    Poset::random(rng, n, density)
}

fn random_point(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> IntPoint {
    IntPoint((0..n).map(|_| rng.gen_range(lo..=hi)).collect())
}

fn subset_of(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|i| mask >> i & 1 == 1).collect()
}

fn ok(detail: String) -> Result<std::result::Result<String, String>> {
    Ok(Ok(detail))
}

fn fail(detail: String) -> Result<std::result::Result<String, String>> {
    Ok(Err(detail))
}

fn dilworth_consistency(rng: &mut ChaCha8Rng) -> Result<std::result::Result<String, String>> {
    let mut subsets = 0;
    for _ in 0..40 {
        let p = random_poset(rng, 8);
        let n = p.size();
        for mask in 0..1u32 << n {
            let s = subset_of(mask, n);
            let w = dilworth::width(&p, &s)?;
            let a = dilworth::max_antichain(&p, &s)?;
            let cover = dilworth::min_chain_cover(&p, &s)?;
            let mut covered: Vec<usize> = cover.iter().flat_map(|c| c.0.iter().copied()).collect();
            covered.sort_unstable();
            if a.len() != w
                || cover.len() != w
                || !p.is_antichain(&a.0)
                || !cover.iter().all(|c| p.is_chain(&c.0))
                || covered != s
            {
                return fail(format!("subset {s:?} of {:?}", p.to_file()));
            }
            subsets += 1;
        }
    }
    ok(format!("{subsets} subsets"))
}

fn width_monotone(rng: &mut ChaCha8Rng) -> Result<std::result::Result<String, String>> {
    let mut pairs = 0;
    for _ in 0..40 {
        let p = random_poset(rng, 8);
        let n = p.size();
        for mask in 0..1u32 << n {
            let w = dilworth::width(&p, &subset_of(mask, n))?;
            for i in (0..n).filter(|i| mask >> i & 1 == 1) {
                if dilworth::width(&p, &subset_of(mask & !(1 << i), n))? > w {
                    return fail(format!("removing {i} from mask {mask:#b} raised the width"));
                }
                pairs += 1;
            }
        }
    }
    ok(format!("{pairs} inclusions"))
}

fn flow_matches_brute(rng: &mut ChaCha8Rng) -> Result<std::result::Result<String, String>> {
    for t in 0..1000 {
        let p = random_poset(rng, 12);
        let z = random_point(rng, p.size(), -3, 3);
        let m = rng.gen_range(0..=3);
        let flow = polytope::violation_excess(&p, &z, m, Method::Flow)?;
        let brute = polytope::violation_excess(&p, &z, m, Method::Brute)?;
        if flow != brute {
            return fail(format!("trial {t}: flow {flow} vs brute {brute} at z={:?}, m={m}", z.0));
        }
    }
    ok("1000 instances".into())
}

fn excess_monotone(rng: &mut ChaCha8Rng) -> Result<std::result::Result<String, String>> {
    for _ in 0..500 {
        let p = random_poset(rng, 10);
        let z = random_point(rng, p.size(), -3, 3);
        let bump = random_point(rng, p.size(), 0, 2);
        let m = rng.gen_range(0..=3);
        let lo = polytope::violation_excess(&p, &z, m, Method::Flow)?;
        let hi = polytope::violation_excess(&p, &z.add(&bump), m, Method::Flow)?;
        if lo < 0 || lo > hi {
            return fail(format!("M({:?}) = {lo} > M(z + {:?}) = {hi}", z.0, bump.0));
        }
    }
    ok("500 pairs".into())
}

fn strip_unit_drops_excess(rng: &mut ChaCha8Rng) -> Result<std::result::Result<String, String>> {
    let mut trials = 0;
    while trials < 1000 {
        let p = random_poset(rng, 8);
        let z = random_point(rng, p.size(), 0, 4);
        let m = rng.gen_range(0..=2);
        let before = polytope::violation_excess(&p, &z, m, Method::Flow)?;
        if before == 0 {
            continue;
        }
        trials += 1;
        let d = polytope::strip_unit(&p, &z, m)?;
        let after = polytope::violation_excess(&p, &z.sub(&IntPoint::unit(p.size(), d)), m, Method::Flow)?;
        if after > before - 1 {
            return fail(format!("z={:?}, m={m}: stripping {d} gives {after}", z.0));
        }
    }
    ok(format!("{trials} points with positive excess"))
}

fn decompose_certificates(rng: &mut ChaCha8Rng) -> Result<std::result::Result<String, String>> {
    let mut certs = 0;
    for _ in 0..100 {
        let p = random_poset(rng, 6);
        let params = Params::new(rng.gen_range(0..=2), rng.gen_range(0..=2));
        let pts = polytope::enumerate_points(&p, params);
        for z in pts.choose_multiple(rng, 5) {
            let cert = polytope::decompose(&p, z, params)?;
            if !cert.verify(&p, z, params) {
                return fail(format!("bad certificate for z={:?} in S({},{})", z.0, params.m, params.big_m));
            }
            certs += 1;
        }
    }
    ok(format!("{certs} certificates"))
}

fn down_set(rng: &mut ChaCha8Rng) -> Result<std::result::Result<String, String>> {
    for _ in 0..100 {
        let p = random_poset(rng, 6);
        let params = Params::new(rng.gen_range(0..=2), rng.gen_range(0..=2));
        let pts = polytope::enumerate_points(&p, params);
        let set: HashSet<&IntPoint> = pts.iter().collect();
        for z in &pts {
            for i in z.support() {
                if !set.contains(&z.sub(&IntPoint::unit(z.len(), i))) {
                    return fail(format!("{:?} in S but lowering {i} leaves it", z.0));
                }
            }
        }
        // Spot-check completeness against the membership oracle.
        for _ in 0..20 {
            let z = random_point(rng, p.size(), 0, i64::from(params.m + params.big_m));
            if polytope::membership(&p, &z, params)? != set.contains(&z) {
                return fail(format!("enumeration and membership disagree at {:?}", z.0));
            }
        }
    }
    ok("100 point sets".into())
}

fn minkowski(rng: &mut ChaCha8Rng) -> Result<std::result::Result<String, String>> {
    for _ in 0..200 {
        let p = random_poset(rng, 6);
        for m1 in 0..=2 {
            for m2 in 0..=2 {
                for b1 in 0..=2 {
                    for b2 in 0..=2 {
                        let (p1, p2) = (Params::new(m1, b1), Params::new(m2, b2));
                        if !polytope::minkowski_check(&p, p1, p2, polytope::DEFAULT_BRUTE_CAP)? {
                            return fail(format!("S({m1},{b1}) + S({m2},{b2}) on {:?}", p.to_file()));
                        }
                    }
                }
            }
        }
    }
    ok("200 posets x 81 parameter pairs".into())
}

fn partition(rng: &mut ChaCha8Rng) -> Result<std::result::Result<String, String>> {
    for _ in 0..100 {
        let p = random_poset(rng, 8);
        let m = rng.gen_range(0..=2);
        let ones = IntPoint::ones(p.size());
        let need = polytope::violation_excess(&p, &ones, m, Method::Flow)?;
        let params = Params::new(m, need as u32 + rng.gen_range(0..=1));
        let cert = polytope::partition_poset(&p, params)?;
        if !cert.verify(&p, &ones, params) {
            return fail(format!("partition of {:?} with m={m}", p.to_file()));
        }
    }
    ok("100 instances".into())
}

fn fflv_weyl(_: &mut ChaCha8Rng) -> Result<std::result::Result<String, String>> {
    let mut cases = 0;
    for n in 2..=6 {
        for d in 1..n {
            for m in 0..=3 {
                let count = grassmann::fflv_points(d, n, m)?.len();
                let dim = grassmann::weyl_dim(d, n, m)?;
                if BigUint::from(count) != dim {
                    return fail(format!("({d},{n},{m}): {count} points, dimension {dim}"));
                }
                cases += 1;
            }
        }
    }
    ok(format!("{cases} cases"))
}

fn inequality_agreement(_: &mut ChaCha8Rng) -> Result<std::result::Result<String, String>> {
    let mut points = 0usize;
    for n in 2..=5 {
        for d in 1..n {
            let rp = root_poset(d, n)?;
            for m in 0..=2 {
                for big_m in 0..=2 {
                    let params = Params::new(m, big_m);
                    let ineqs = grassmann::inequality_system(
                        d,
                        n,
                        params,
                        d.min(n - d),
                        grassmann::DEFAULT_SUBSET_CAP,
                    )?;
                    let top = i64::from(m + big_m) + 1;
                    let k = rp.len();
                    let mut z = IntPoint::zeros(k);
                    // Odometer over the box [0, m+M+1]^R.
                    loop {
                        if grassmann::satisfies(&ineqs, &z) != polytope::membership(&rp.poset, &z, params)? {
                            return fail(format!("({d},{n}) m={m} M={big_m} at {:?}", z.0));
                        }
                        points += 1;
                        let mut i = 0;
                        while i < k && z.0[i] == top {
                            z.0[i] = 0;
                            i += 1;
                        }
                        if i == k {
                            break;
                        }
                        z.0[i] += 1;
                    }
                }
            }
        }
    }
    ok(format!("{points} box points"))
}

fn dyck_count(_: &mut ChaCha8Rng) -> Result<std::result::Result<String, String>> {
    for n in 2..=8 {
        for d in 1..n {
            let paths = grassmann::dyck_paths(&root_poset(d, n)?).len();
            if paths != grassmann::binomial(n - 2, d - 1) {
                return fail(format!("({d},{n}): {paths} paths"));
            }
        }
    }
    ok("n <= 8".into())
}

fn antichains_level_one(_: &mut ChaCha8Rng) -> Result<std::result::Result<String, String>> {
    for n in 2..=6 {
        for d in 1..n {
            let rp = root_poset(d, n)?;
            let k = rp.len();
            let mut antichains: Vec<IntPoint> = (0..1u32 << k)
                .map(|mask| subset_of(mask, k))
                .filter(|s| rp.poset.is_antichain(s))
                .map(|s| IntPoint::indicator(k, &s))
                .collect();
            antichains.sort();
            let mut pts = grassmann::fflv_points(d, n, 1)?;
            pts.sort();
            if pts != antichains {
                return fail(format!("({d},{n})"));
            }
        }
    }
    ok("n <= 6".into())
}

const REP_SPANS: &[(usize, usize)] = &[(1, 3), (2, 4), (2, 5), (3, 6)];

/// Cases from `REP_SPANS` x `m, M <= 2` whose point count fits the default cap.
fn rep_cases() -> Result<Vec<(usize, usize, Params, usize)>> {
    let mut out = Vec::new();
    for &(d, n) in REP_SPANS {
        let rp = root_poset(d, n)?;
        for m in 0..=2 {
            for big_m in 0..=2 {
                let params = Params::new(m, big_m);
                let count = polytope::enumerate_points(&rp.poset, params).len();
                if count <= rep::DEFAULT_DIM_CAP {
                    out.push((d, n, params, count));
                }
            }
        }
    }
    Ok(out)
}

fn span_matches_points(_: &mut ChaCha8Rng) -> Result<std::result::Result<String, String>> {
    let cases = rep_cases()?;
    for &(d, n, params, count) in &cases {
        let dim = rep::cyclic_span_dim(d, n, params, rep::DEFAULT_DIM_CAP)?;
        if dim != count {
            return fail(format!("({d},{n},{},{}): span {dim}, points {count}", params.m, params.big_m));
        }
    }
    ok(format!("{} cases", cases.len()))
}

fn basis_checks(_: &mut ChaCha8Rng) -> Result<std::result::Result<String, String>> {
    let cases = rep_cases()?;
    for &(d, n, params, _) in &cases {
        let report = rep::basis_check(d, n, params, rep::DEFAULT_DIM_CAP)?;
        if !report.passed() {
            return fail(format!("{report:?}"));
        }
    }
    ok(format!("{} cases", cases.len()))
}

fn operators_commute(rng: &mut ChaCha8Rng) -> Result<std::result::Result<String, String>> {
    let mut checked = 0;
    for (d, n, params) in [(2, 4, Params::new(1, 1)), (2, 5, Params::new(2, 1)), (3, 6, Params::new(1, 1))] {
        let space = RepSpace::new(d, n, params)?;
        let ops = space.operators();
        let k = ops.len();
        for _ in 0..5 {
            let s = random_point(rng, k, 0, 1);
            let v = space.apply_monomial(&s, &space.cyclic_vector())?;
            for &a in &ops {
                for &b in &ops {
                    let ab = space.apply_root(a, &space.apply_root(b, &v)?)?;
                    let ba = space.apply_root(b, &space.apply_root(a, &v)?)?;
                    if ab != ba {
                        return fail(format!("({d},{n}): {a:?} and {b:?} do not commute"));
                    }
                    checked += 1;
                }
            }
        }
    }
    ok(format!("{checked} operator pairs"))
}

fn relations(rng: &mut ChaCha8Rng) -> Result<std::result::Result<String, String>> {
    let cases = rep_cases()?;
    for &(d, n, params, _) in &cases {
        let report = rep::relation_check(d, n, params, 100, rng.gen())?;
        if !report.passed() {
            return fail(format!("{report:?}"));
        }
    }
    ok(format!("{} cases x 100 samples", cases.len()))
}

fn pbw_grading(_: &mut ChaCha8Rng) -> Result<std::result::Result<String, String>> {
    for (d, n, params) in [(2, 4, Params::new(1, 1)), (2, 5, Params::new(1, 1)), (3, 6, Params::new(1, 0))] {
        let report = rep::pbw_grading_check(d, n, params, rep::DEFAULT_DIM_CAP)?;
        if !report.passed {
            return fail(format!("({d},{n}): {report:?}"));
        }
    }
    ok("3 cases".into())
}

fn strata_sum(_: &mut ChaCha8Rng) -> Result<std::result::Result<String, String>> {
    for n in 2..=8 {
        for d in 1..n {
            let sum = geometry::strata_poincare(d, n)?
                .iter()
                .fold(QPolynomial::zero(), |acc, p| &acc + p);
            if sum != geometry::gaussian_binomial(n, d)? {
                return fail(format!("Gr({d},{n})"));
            }
        }
    }
    ok("n <= 8".into())
}

fn strata_degree(_: &mut ChaCha8Rng) -> Result<std::result::Result<String, String>> {
    for n in 2..=8 {
        for d in 1..n {
            for (k, p) in geometry::strata_poincare(d, n)?.iter().enumerate() {
                if p.degree() != Some(d * (n - d) - k * k) {
                    return fail(format!("Gr({d},{n}), k={k}: degree {:?}", p.degree()));
                }
            }
        }
    }
    ok("n <= 8".into())
}

fn projective_case(_: &mut ChaCha8Rng) -> Result<std::result::Result<String, String>> {
    for n in 2..=10 {
        if geometry::graph_poincare(1, n)? != QPolynomial::q_integer(n) {
            return fail(format!("n={n}"));
        }
    }
    ok("n <= 10".into())
}

fn gr36_polynomial(_: &mut ChaCha8Rng) -> Result<std::result::Result<String, String>> {
    let p = geometry::graph_poincare(3, 6)?;
    if p.coeffs() != [1, 2, 4, 7, 10, 11, 10, 6, 3, 1] || p.is_palindromic() {
        return fail(p.to_string());
    }
    ok(p.to_string())
}

fn fibers(rng: &mut ChaCha8Rng) -> Result<std::result::Result<String, String>> {
    let mut count = 0;
    for (d, n) in [(1, 3), (2, 4), (2, 5), (3, 5), (3, 6), (2, 6)] {
        for k in 0..=d.min(n - d) {
            for _ in 0..4 {
                let u = geometry::random_subspace_in_stratum(rng, d, n, k)?;
                let f = geometry::fiber_of(&u);
                let flat: linalg::RatMatrix = f.basis.iter().map(|b| b.concat()).collect();
                if f.k != k
                    || f.basis.len() != k * k
                    || linalg::rank(&flat, d * (n - d)) != k * k
                    || !f.basis.iter().all(|b| geometry::satisfies_fiber_conditions(&u, b))
                {
                    return fail(format!("Gr({d},{n}), stratum {k}"));
                }
                count += 1;
            }
        }
    }
    ok(format!("{count} subspaces"))
}

fn stratum_row_invariance(rng: &mut ChaCha8Rng) -> Result<std::result::Result<String, String>> {
    for _ in 0..100 {
        let n = rng.gen_range(2..=7);
        let d = rng.gen_range(1..n);
        let rows: linalg::RatMatrix = (0..d)
            .map(|_| (0..n).map(|_| rat(rng.gen_range(-2..=2))).collect())
            .collect();
        let Ok(u) = Subspace::new(rows.clone()) else {
            continue;
        };
        let mix = loop {
            let m: linalg::RatMatrix = (0..d)
                .map(|_| (0..d).map(|_| rat(rng.gen_range(-3..=3))).collect())
                .collect();
            if linalg::rank(&m, d) == d {
                break m;
            }
        };
        let v = Subspace::new(linalg::mul(&mix, &rows, d, n))?;
        if geometry::stratum_of(&u) != geometry::stratum_of(&v) || u != v {
            return fail(format!("Gr({d},{n}) row change moved the stratum"));
        }
    }
    ok("100 subspaces".into())
}

fn preimage_dims(_: &mut ChaCha8Rng) -> Result<std::result::Result<String, String>> {
    for n in 2..=8 {
        for d in 1..n {
            let t = geometry::preimage_dim_table(d, n)?;
            if !t.constant {
                return fail(format!("Gr({d},{n}): {:?}", t.rows));
            }
        }
    }
    ok("n <= 8".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let names = check_names();
        let set: HashSet<_> = names.iter().collect();
        assert_eq!(set.len(), names.len());
    }

    #[test]
    fn geometry_checks_pass() {
        let report = run(0, "geometry.");
        assert_eq!(report.checks.len(), 7);
        assert!(report.passed, "{report:?}");
        assert_eq!(report, run(0, "geometry."));
    }
}
