//! Seeded samplers and the pointwise verification harness for the cluster
//! geometry. Each sample draws from its own stream of the seed, so reports
//! do not depend on how samples are scheduled.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    containing_split, delta, enumerate_o, eval_h, eval_lambda, eval_phi_prime, eval_zeta, extend, in_a, in_a_ij,
    max_norm, nu, rat, retract, suspension_distance, Rational, SmashPoint, SuspensionPoint,
};
use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::Error;
use crate::par;

/// Stored failures per report.
pub const MAX_FAILURES: usize = 16;

pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// `k / 2^bits` with `|k| < 2^bits`.
fn dyadic<R: Rng>(rng: &mut R, bits: u32) -> Rational {
    let d = 1i64 << bits;
    rat(rng.gen_range(1 - d..d), d)
}

fn uniform_point<R: Rng>(rng: &mut R, len: usize) -> Vec<Rational> {
    (0..len).map(|_| dyadic(rng, 10)).collect()
}

/// A point of the open cube `(-1, 1)^{n-1}`. Two thirds of the draws build
/// two clusters around a random split in `O` (with exact ties and noise at
/// scales from negligible to comparable with `δ`); the rest are uniform.
pub fn sample_cube_point<R: Rng>(n: usize, rng: &mut R) -> Vec<Rational> {
    let splits = enumerate_o(n);
    if splits.is_empty() || rng.gen_range(0..3) == 0 {
        return uniform_point(rng, n - 1);
    }
    let (i_set, _) = splits[rng.gen_range(0..splits.len())];
    let gap = rat(rng.gen_range(1..=64), 16);
    let noise_bits = [2u32, 4, 6, 9, 14][rng.gen_range(0..5)];
    let mut z: Vec<Rational> = (1..=n)
        .map(|v| {
            let base = if i_set.contains(v) { Rational::zero() } else { gap.clone() };
            if rng.gen_bool(0.3) {
                base
            } else {
                base + dyadic(rng, noise_bits) / rat(4, 1)
            }
        })
        .collect();
    let anchor = z[n - 1].clone();
    for t in z.iter_mut() {
        *t -= &anchor;
    }
    z.pop();
    let m = max_norm(&z);
    if m.is_zero() {
        return uniform_point(rng, n - 1);
    }
    let scale = &m * rat(rng.gen_range(33..=128), 32);
    z.into_iter().map(|t| t / &scale).collect()
}

/// A point of `ℝẐ_K`: interior coordinates on a random face, `1` elsewhere,
/// occasionally the basepoint.
pub fn sample_smash_point<R: Rng>(k: &SimplicialComplex, rng: &mut R) -> SmashPoint {
    let facets = k.facets();
    let facet = facets[rng.gen_range(0..facets.len())];
    let face = random_subface(facet, rng);
    smash_on(k.n(), face, rng)
}

fn random_subface<R: Rng>(facet: VertexSet, rng: &mut R) -> VertexSet {
    facet.iter().filter(|_| rng.gen_bool(0.7)).fold(VertexSet::EMPTY, |acc, v| acc.with(v))
}

fn smash_on<R: Rng>(n: usize, face: VertexSet, rng: &mut R) -> SmashPoint {
    let base = rng.gen_range(0..50) == 0;
    let coords = (1..=n)
        .map(|v| {
            if face.contains(v) {
                dyadic(rng, 8)
            } else if base && v == 1 {
                -Rational::one()
            } else {
                Rational::one()
            }
        })
        .collect();
    SmashPoint::new(coords).expect("coordinates in [-1, 1]")
}

/// A point of `Σ^{n-1} ℝẐ_K`; suspension coordinates come from
/// [`sample_cube_point`], with occasional zero and boundary draws.
pub fn sample_suspension_point<R: Rng>(k: &SimplicialComplex, rng: &mut R) -> SuspensionPoint {
    let n = k.n();
    let mut t = sample_cube_point(n, rng);
    match rng.gen_range(0..40) {
        0 => t.iter_mut().for_each(|c| *c = Rational::zero()),
        1 if !t.is_empty() => {
            let i = rng.gen_range(0..t.len());
            t[i] = if rng.gen_bool(0.5) { Rational::one() } else { -Rational::one() };
        }
        _ => {}
    }
    let x = sample_smash_point(k, rng);
    SuspensionPoint::new(t, x).expect("consistent dimensions")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure<P> {
    pub index: u64,
    pub point: P,
    pub check: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComultReport {
    pub n: usize,
    pub samples: u64,
    /// Samples that landed in `A`.
    pub in_a: u64,
    /// Individual predicate and identity evaluations.
    pub checks: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure<Vec<Rational>>>,
}

impl ComultReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

/// Retraction times.
pub fn retraction_times() -> [Rational; 5] {
    [rat(0, 1), rat(1, 4), rat(1, 2), rat(3, 4), rat(1, 1)]
}

struct Tally<P> {
    in_a: u64,
    checks: u64,
    failures: Vec<Failure<P>>,
}

impl<P: Clone> Tally<P> {
    fn new() -> Self {
        Tally {
            in_a: 0,
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, index: u64, point: &P, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(Failure {
                index,
                point: point.clone(),
                check: what(),
            });
        }
    }
}

fn comult_sample(n: usize, seed: u64, index: u64) -> Result<Tally<Vec<Rational>>, Error> {
    let mut rng = sample_rng(seed, index);
    let y = sample_cube_point(n, &mut rng);
    let mut tally = Tally::new();
    let inside = in_a(&y)?;
    let mut hits = Vec::new();
    for (i, j) in enumerate_o(n) {
        if in_a_ij(&y, i, j)? {
            hits.push((i, j));
        }
    }
    tally.in_a += u64::from(inside);
    tally.check(hits.len() == usize::from(inside), index, &y, || {
        format!("in A = {inside} but {} regions contain the point", hits.len())
    });
    tally.check(containing_split(&y)? == hits.first().copied(), index, &y, || "containing split".to_string());
    let Some(&(i_set, j_set)) = hits.first() else {
        return Ok(tally);
    };
    let z = extend(&y);
    let d = delta(&z);
    let inv_2n = rat(1, 2 * n as i64);
    for t in retraction_times() {
        let s = Rational::one() - &t;
        let yt = retract(&y, i_set, j_set, &t)?;
        let zt = extend(&yt);
        tally.check(in_a_ij(&yt, i_set, j_set)?, index, &y, || format!("y_{t} left A_{{I,J}}"));
        tally.check(delta(&zt) == &s * &d + &t * &inv_2n, index, &y, || format!("δ identity at t = {t}"));
        for (side, v) in i_set.iter().map(|v| (i_set, v)).chain(j_set.iter().map(|v| (j_set, v))) {
            let ok = nu(&zt, side, v)? == &s * nu(&z, side, v)?;
            tally.check(ok, index, &y, || format!("ν identity at t = {t}, vertex {v}"));
        }
        for i in i_set.iter() {
            for j in j_set.iter() {
                let lhs = &zt[j - 1] - &zt[i - 1];
                let rhs = &s * (&z[j - 1] - &z[i - 1]) + &t / rat(2, 1);
                tally.check(lhs == rhs, index, &y, || format!("gap identity at t = {t}, ({i}, {j})"));
            }
        }
    }
    Ok(tally)
}

type Merged<P> = (u64, u64, u64, Vec<Failure<P>>);

fn merge<P: Clone>(parts: Vec<Result<Tally<P>, Error>>) -> Result<Merged<P>, Error> {
    let (mut in_a, mut checks, mut count) = (0, 0, 0);
    let mut failures = Vec::new();
    for p in parts {
        let p = p?;
        in_a += p.in_a;
        checks += p.checks;
        count += p.failures.len() as u64;
        for f in p.failures {
            if failures.len() < MAX_FAILURES {
                failures.push(f);
            }
        }
    }
    Ok((in_a, checks, count, failures))
}

/// Pointwise checks of the decomposition of `A` into the `A_{I,J}` and of
/// the star-centre retraction.
pub fn verify_comult(n: usize, samples: u64, seed: u64) -> Result<ComultReport, Error> {
    if !(2..=crate::complex::MAX_VERTICES).contains(&n) {
        return Err(Error::GroundSetSize(n));
    }
    let indices: Vec<u64> = (0..samples).collect();
    let (in_a, checks, failure_count, failures) = merge(par::map(&indices, |&i| comult_sample(n, seed, i)))?;
    Ok(ComultReport {
        n,
        samples,
        in_a,
        checks,
        failure_count,
        failures,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyReport {
    pub samples: u64,
    /// Samples whose suspension coordinates landed in `A`.
    pub in_a: u64,
    pub checks: u64,
    /// Largest suspension-coordinate distance between `H_1` and `ζ`.
    pub max_error: Rational,
    pub failure_count: u64,
    pub failures: Vec<Failure<SuspensionPoint>>,
}

impl HomotopyReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

/// Interior homotopy times checked for membership.
pub fn homotopy_times() -> [Rational; 5] {
    [rat(0, 1), rat(1, 4), rat(1, 2), rat(3, 4), rat(1, 1)]
}

fn describe(e: Result<bool, Error>) -> (bool, String) {
    match e {
        Ok(ok) => (ok, String::new()),
        Err(e) => (false, e.to_string()),
    }
}

fn homotopy_sample(
    k: &SimplicialComplex,
    seed: u64,
    index: u64,
    tol: &Rational,
    bound: &Rational,
) -> (Tally<SuspensionPoint>, Rational) {
    let mut rng = sample_rng(seed, index);
    let w = sample_suspension_point(k, &mut rng);
    let mut tally = Tally::new();
    let mut err = Rational::zero();
    if max_norm(&w.t) < Rational::one() && in_a(&w.t).unwrap_or(false) {
        tally.in_a += 1;
    }
    let (ok, msg) = describe(eval_h(k, &w, &Rational::zero()).and_then(|h0| Ok(h0 == eval_phi_prime(k, &w)?)));
    tally.check(ok, index, &w, || format!("H_0 = Φ' {msg}"));
    for t in homotopy_times() {
        let (ok, msg) = describe(eval_h(k, &w, &t).map(|_| true));
        tally.check(ok, index, &w, || format!("H_{t} membership {msg}"));
    }
    let pair = eval_h(k, &w, &Rational::one()).and_then(|h1| Ok((h1, eval_zeta(k, &w, tol)?)));
    let (ok, msg) = match pair {
        Ok((h1, z)) => match suspension_distance(&h1, &z) {
            Some(d) => {
                let ok = d < *bound;
                if d > err {
                    err = d;
                }
                (ok, format!("distance {}", to_f64(&err)))
            }
            None => (false, format!("H_1 = {h1} but ζ = {z}")),
        },
        Err(e) => (false, e.to_string()),
    };
    tally.check(ok, index, &w, || format!("H_1 = ζ {msg}"));
    (tally, err)
}

/// Approximate decimal value, for reports.
pub fn to_f64(q: &Rational) -> f64 {
    let scale = BigInt::one() << 64;
    let scaled = (q * Rational::from_integer(scale)).round().to_integer();
    let (sign, digits) = scaled.to_u64_digits();
    let mut v = 0f64;
    for d in digits.iter().rev() {
        v = v * 18446744073709551616.0 + *d as f64;
    }
    let v = v / 18446744073709551616.0;
    if sign == num_bigint::Sign::Minus {
        -v
    } else {
        v
    }
}

/// Pointwise checks of `H_0 = Φ'_K`, `H_1 = ζ` (to `bound` on suspension
/// coordinates, exactly on smash coordinates) and membership of every `H_t`.
pub fn verify_homotopy(
    k: &SimplicialComplex,
    samples: u64,
    seed: u64,
    tol: &Rational,
    bound: &Rational,
) -> Result<HomotopyReport, Error> {
    if !tol.is_positive() || !bound.is_positive() {
        return Err(Error::NonPositiveTolerance);
    }
    if k.n() < 2 {
        return Err(Error::GroundSetSize(k.n()));
    }
    let indices: Vec<u64> = (0..samples).collect();
    let parts = par::map(&indices, |&i| homotopy_sample(k, seed, i, tol, bound));
    let mut max_error = Rational::zero();
    let tallies = parts
        .into_iter()
        .map(|(t, e)| {
            if e > max_error {
                max_error = e;
            }
            Ok(t)
        })
        .collect();
    let (in_a, checks, failure_count, failures) = merge(tallies)?;
    Ok(HomotopyReport {
        samples,
        in_a,
        checks,
        max_error,
        failure_count,
        failures,
    })
}

/// An input to `λ_{I,J}` whose image leaves `ΣQ'_K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaWitness {
    pub index: u64,
    pub i: VertexSet,
    pub j: VertexSet,
    pub point: SuspensionPoint,
    pub message: String,
}

/// Searches for a `λ_{I,J}` membership failure; none exists when `K` is
/// `⌊n/3⌋`-neighbourly.
pub fn find_lambda_violation(
    k: &SimplicialComplex,
    samples: u64,
    seed: u64,
    tol: &Rational,
) -> Result<Option<LambdaWitness>, Error> {
    let splits = enumerate_o(k.n());
    if splits.is_empty() {
        return Ok(None);
    }
    for index in 0..samples {
        let mut rng = sample_rng(seed, index);
        let (i, j) = splits[rng.gen_range(0..splits.len())];
        let mut t = uniform_point(&mut rng, k.n() - 1);
        if rng.gen_bool(0.5) {
            t = sample_cube_point(k.n(), &mut rng);
        }
        let facets = k.facets();
        let fi = random_subface(facets[rng.gen_range(0..facets.len())].intersection(i), &mut rng);
        let fj = random_subface(facets[rng.gen_range(0..facets.len())].intersection(j), &mut rng);
        let point = SuspensionPoint::new(t, smash_on(k.n(), fi.union(fj), &mut rng))?;
        match eval_lambda(k, i, j, &point, tol) {
            Err(Error::Postcondition(message)) => {
                return Ok(Some(LambdaWitness {
                    index,
                    i,
                    j,
                    point,
                    message,
                }))
            }
            Err(e) => return Err(e),
            Ok(_) => {}
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::default_tolerance;
    use alloc::vec;

    #[test]
    fn cube_samples_stay_inside() {
        for n in 2..=9 {
            let mut hits = 0;
            for i in 0..200 {
                let y = sample_cube_point(n, &mut sample_rng(7, i));
                assert_eq!(y.len(), n - 1);
                assert!(max_norm(&y) < Rational::one());
                hits += usize::from(in_a(&y).unwrap());
            }
            if n != 3 {
                assert!(hits > 20, "n = {n}: only {hits} samples in A");
            }
        }
    }

    #[test]
    fn comult_small() {
        for n in 2..=6 {
            let r = verify_comult(n, 300, 1).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
        }
    }

    #[test]
    fn homotopy_on_cycle() {
        let c = SimplicialComplex::new(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]).unwrap();
        let r = verify_homotopy(&c, 100, 3, &default_tolerance(), &rat(1, 1_000_000_000)).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.in_a > 0);
    }

    #[test]
    fn lambda_witness_without_hypothesis() {
        let k = SimplicialComplex::new(4, &[vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
        assert!(find_lambda_violation(&k, 200, 5, &default_tolerance()).unwrap().is_some());
        let c = SimplicialComplex::new(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]).unwrap();
        assert!(find_lambda_violation(&c, 200, 5, &default_tolerance()).unwrap().is_none());
    }

    #[test]
    fn decimal_approximation() {
        assert_eq!(to_f64(&rat(-3, 4)), -0.75);
        assert_eq!(to_f64(&Rational::zero()), 0.0);
    }
}
