//! Cluster statistics on points of `R^n`, the configuration region `A` and
//! its pieces `A_{I,J}`, the star-centre retraction and a radial gauge
//! homeomorphism onto the open cube. Everything is exact rational arithmetic.

mod maps;
mod sample;

pub use maps::*;
pub use sample::*;

use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::complex::{OrderedPartition, VertexSet};
use crate::error::Error;

pub type Rational = BigRational;

pub(crate) fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `ȳ = (t_1, ..., t_{n-1}, 0)`.
pub fn extend(y: &[Rational]) -> Vec<Rational> {
    let mut z = y.to_vec();
    z.push(Rational::zero());
    z
}

/// `max(|t_1|, ..., |t_k|, 0)`.
pub fn max_norm(v: &[Rational]) -> Rational {
    v.iter().map(Rational::abs).max().unwrap_or_else(Rational::zero)
}

fn cluster_size(n: usize) -> usize {
    n / 3
}

/// `ν^z_{I,i}`: the `⌊n/3⌋`-th smallest distance `|t_i - t_j|` over
/// `j ∈ I - {i}`, and 0 when there are too few such `j` (`n = len(z)`).
pub fn nu(z: &[Rational], i_set: VertexSet, i: usize) -> Result<Rational, Error> {
    if !i_set.contains(i) || i_set.max_vertex().is_some_and(|m| m > z.len()) {
        return Err(Error::InvalidParameter("vertex not in the index set".to_string()));
    }
    Ok(nu_unchecked(z, i_set, i))
}

fn nu_unchecked(z: &[Rational], i_set: VertexSet, i: usize) -> Rational {
    let m = cluster_size(z.len());
    let others = i_set.len() - 1;
    if m == 0 || others < m {
        return Rational::zero();
    }
    let ti = &z[i - 1];
    let mut d: Vec<Rational> = i_set.without(i).iter().map(|j| (ti - &z[j - 1]).abs()).collect();
    let (_, kth, _) = d.select_nth_unstable(m - 1);
    kth.clone()
}

/// `ν^z_I = max_{i ∈ I} ν^z_{I,i}` (0 for empty `I`).
pub fn nu_max(z: &[Rational], i_set: VertexSet) -> Result<Rational, Error> {
    let mut best = Rational::zero();
    for i in i_set.iter() {
        let v = nu(z, i_set, i)?;
        if v > best {
            best = v;
        }
    }
    Ok(best)
}

/// `δ^z = (max t - min t) / n`.
pub fn delta(z: &[Rational]) -> Rational {
    match (z.iter().max(), z.iter().min()) {
        (Some(hi), Some(lo)) => (hi - lo) / Rational::from_integer(BigInt::from(z.len())),
        _ => Rational::zero(),
    }
}

/// Groups the positions of `I` (in increasing order) by equal values of `r`,
/// blocks ordered by increasing value.
pub fn partition_from_point(r: &[Rational], i_set: VertexSet) -> Result<OrderedPartition, Error> {
    if r.len() != i_set.len() {
        return Err(Error::DimensionMismatch);
    }
    let mut values: Vec<&Rational> = r.iter().collect();
    values.sort();
    values.dedup();
    let blocks = values
        .into_iter()
        .map(|v| {
            i_set
                .iter()
                .zip(r)
                .filter(|(_, s)| *s == v)
                .fold(VertexSet::EMPTY, |acc, (i, _)| acc.with(i))
        })
        .collect();
    OrderedPartition::new(blocks, i_set)
}

/// Ordered splits `(I, J)` of `[n]` with `|I|, |J| > n/3`, by increasing `I`.
pub fn enumerate_o(n: usize) -> Vec<(VertexSet, VertexSet)> {
    let full = VertexSet::full(n);
    full.subsets()
        .filter(|i| 3 * i.len() > n && 3 * (n - i.len()) > n)
        .map(|i| (i, full.difference(i)))
        .collect()
}

fn in_open_cube(y: &[Rational]) -> bool {
    y.iter().all(|t| t.abs() < Rational::one())
}

fn check_cube(y: &[Rational]) -> Result<(), Error> {
    if y.is_empty() || !in_open_cube(y) {
        return Err(Error::OutsideOpenCube);
    }
    Ok(())
}

/// `y ∈ A`: `ν^ȳ_{[n]} < δ^ȳ`.
pub fn in_a(y: &[Rational]) -> Result<bool, Error> {
    check_cube(y)?;
    Ok(in_a_unchecked(&extend(y)))
}

fn in_a_unchecked(z: &[Rational]) -> bool {
    let d = delta(z);
    let full = VertexSet::full(z.len());
    full.iter().all(|i| nu_unchecked(z, full, i) < d)
}

/// `y ∈ A_{I,J}`: every gap `t_j - t_i` exceeds `δ^ȳ` and both sides are
/// clustered within `δ^ȳ`.
pub fn in_a_ij(y: &[Rational], i_set: VertexSet, j_set: VertexSet) -> Result<bool, Error> {
    check_cube(y)?;
    check_split(y.len() + 1, i_set, j_set)?;
    Ok(in_aij_unchecked(&extend(y), i_set, j_set))
}

fn check_split(n: usize, i_set: VertexSet, j_set: VertexSet) -> Result<(), Error> {
    if !i_set.is_disjoint(j_set) || i_set.union(j_set) != VertexSet::full(n) || i_set.is_empty() || j_set.is_empty() {
        return Err(Error::InvalidPair);
    }
    Ok(())
}

fn in_aij_unchecked(z: &[Rational], i_set: VertexSet, j_set: VertexSet) -> bool {
    let d = delta(z);
    let top_i = i_set.iter().map(|i| &z[i - 1]).max().expect("non-empty");
    let bottom_j = j_set.iter().map(|j| &z[j - 1]).min().expect("non-empty");
    if bottom_j - top_i <= d {
        return false;
    }
    i_set.iter().all(|i| nu_unchecked(z, i_set, i) < d) && j_set.iter().all(|j| nu_unchecked(z, j_set, j) < d)
}

/// The split `(I, J) ∈ O` whose region contains `y`, if any.
pub fn containing_split(y: &[Rational]) -> Result<Option<(VertexSet, VertexSet)>, Error> {
    check_cube(y)?;
    let z = extend(y);
    if !in_a_unchecked(&z) {
        return Ok(None);
    }
    // Inside A the split sits at the unique gap wider than δ.
    let n = z.len();
    let d = delta(&z);
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by(|a, b| z[a - 1].cmp(&z[b - 1]));
    let cut = (1..n).find(|&k| &z[order[k] - 1] - &z[order[k - 1] - 1] > d);
    let Some(cut) = cut else { return Ok(None) };
    let i_set = order[..cut].iter().fold(VertexSet::EMPTY, |acc, &v| acc.with(v));
    let j_set = VertexSet::full(n).difference(i_set);
    Ok(in_aij_unchecked(&z, i_set, j_set).then_some((i_set, j_set)))
}

/// The centre `b ∈ A_{I,J}`: `-1/2` on `I` and `0` on `J` when `n ∈ J`,
/// otherwise `0` on `I` and `1/2` on `J`.
pub fn star_center(i_set: VertexSet, j_set: VertexSet, n: usize) -> Result<Vec<Rational>, Error> {
    check_split(n, i_set, j_set)?;
    let (on_i, on_j) = if j_set.contains(n) {
        (rat(-1, 2), Rational::zero())
    } else {
        (Rational::zero(), rat(1, 2))
    };
    Ok((1..n).map(|v| if i_set.contains(v) { on_i.clone() } else { on_j.clone() }).collect())
}

/// `y_t = (1 - t) y + t b`.
pub fn retract(y: &[Rational], i_set: VertexSet, j_set: VertexSet, t: &Rational) -> Result<Vec<Rational>, Error> {
    if t.is_negative() || *t > Rational::one() {
        return Err(Error::InvalidParameter("retraction time outside [0, 1]".to_string()));
    }
    if !in_a_ij(y, i_set, j_set)? {
        return Err(Error::NotInRegion("point is not in A_{I,J}".to_string()));
    }
    let b = star_center(i_set, j_set, y.len() + 1)?;
    let s = Rational::one() - t;
    Ok(y.iter().zip(&b).map(|(yi, bi)| &s * yi + t * bi).collect())
}

/// `2^-40`.
pub fn default_tolerance() -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << 40)
}

/// The radial gauge of `A_{I,J}` about its centre: the boundary crossing
/// `ρ(û)` along a max-norm unit direction `û` is bracketed by bisection,
/// keeping `lo` inside the region and `hi` outside.
pub struct Gauge {
    i_set: VertexSet,
    j_set: VertexSet,
    center: Vec<Rational>,
    tol: Rational,
}

impl Gauge {
    pub fn new(i_set: VertexSet, j_set: VertexSet, n: usize, tol: &Rational) -> Result<Self, Error> {
        if !tol.is_positive() {
            return Err(Error::NonPositiveTolerance);
        }
        Ok(Gauge {
            center: star_center(i_set, j_set, n)?,
            i_set,
            j_set,
            tol: tol.clone(),
        })
    }

    pub fn center(&self) -> &[Rational] {
        &self.center
    }

    fn along(&self, dir: &[Rational], r: &Rational) -> Vec<Rational> {
        self.center.iter().zip(dir).map(|(b, d)| b + d * r).collect()
    }

    fn inside(&self, p: &[Rational]) -> bool {
        in_open_cube(p) && in_aij_unchecked(&extend(p), self.i_set, self.j_set)
    }

    /// Certified inner radius along `dir`: bisect until `hi - lo ≤ tol·lo / 2`,
    /// and further while `lo ≤ floor` if a floor is given.
    fn radius(&self, dir: &[Rational], floor: Option<&Rational>) -> Rational {
        let two = rat(2, 1);
        let (mut lo, mut hi) = (Rational::zero(), two.clone());
        loop {
            let settled = &hi - &lo <= &self.tol * &lo / &two && floor.is_none_or(|f| lo > *f);
            if settled {
                return lo;
            }
            let mid = (&lo + &hi) / &two;
            if self.inside(&self.along(dir, &mid)) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }

    /// `h(y) = (y - b) / ρ(û)`, of max-norm below 1.
    pub fn forward(&self, y: &[Rational]) -> Result<Vec<Rational>, Error> {
        if y.len() != self.center.len() {
            return Err(Error::DimensionMismatch);
        }
        if !in_open_cube(y) || !self.inside(y) {
            return Err(Error::NotInRegion("point is not in A_{I,J}".to_string()));
        }
        let u: Vec<Rational> = y.iter().zip(&self.center).map(|(a, b)| a - b).collect();
        let norm = max_norm(&u);
        if norm.is_zero() {
            return Ok(u);
        }
        let dir: Vec<Rational> = u.iter().map(|x| x / &norm).collect();
        let rho = self.radius(&dir, Some(&norm));
        Ok(u.iter().map(|x| x / &rho).collect())
    }

    /// `h^{-1}(w) = b + ŵ·‖w‖·ρ(ŵ)`, always inside `A_{I,J}`.
    pub fn inverse(&self, w: &[Rational]) -> Result<Vec<Rational>, Error> {
        if w.len() != self.center.len() {
            return Err(Error::DimensionMismatch);
        }
        check_cube(w)?;
        let norm = max_norm(w);
        if norm.is_zero() {
            return Ok(self.center.clone());
        }
        let dir: Vec<Rational> = w.iter().map(|x| x / &norm).collect();
        let rho = self.radius(&dir, None);
        let out = self.along(&dir, &(&norm * &rho));
        if !self.inside(&out) {
            return Err(Error::Postcondition("gauge inverse left A_{I,J}".to_string()));
        }
        Ok(out)
    }
}

pub fn gauge_h(i_set: VertexSet, j_set: VertexSet, y: &[Rational], tol: &Rational) -> Result<Vec<Rational>, Error> {
    Gauge::new(i_set, j_set, y.len() + 1, tol)?.forward(y)
}

pub fn gauge_h_inverse(
    i_set: VertexSet,
    j_set: VertexSet,
    w: &[Rational],
    tol: &Rational,
) -> Result<Vec<Rational>, Error> {
    Gauge::new(i_set, j_set, w.len() + 1, tol)?.inverse(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied(), 63).unwrap()
    }

    fn q(v: &[(i64, i64)]) -> Vec<Rational> {
        v.iter().map(|&(p, d)| rat(p, d)).collect()
    }

    #[test]
    fn statistics() {
        let z = q(&[(9, 10), (9, 10), (1, 10), (0, 1)]);
        assert_eq!(nu(&z, VertexSet::full(4), 3).unwrap(), rat(1, 10));
        assert_eq!(nu(&z, vs(&[2]), 2).unwrap(), Rational::zero());
        assert!(nu(&z, vs(&[2]), 3).is_err());
        assert_eq!(delta(&z), rat(9, 40));
        assert_eq!(delta(&q(&[(1, 3); 4])), Rational::zero());
        assert_eq!(nu_max(&q(&[(1, 3); 4]), VertexSet::full(4)).unwrap(), Rational::zero());
        assert_eq!(nu_max(&z, VertexSet::full(4)).unwrap(), rat(1, 10));
    }

    #[test]
    fn partitions() {
        let r = q(&[(-1, 1), (22, 7), (-1, 1), (0, 1)]);
        let p = partition_from_point(&r, VertexSet::full(4)).unwrap();
        assert_eq!(p.blocks(), &[vs(&[1, 3]), vs(&[4]), vs(&[2])]);
        assert_eq!(partition_from_point(&q(&[(1, 2); 3]), vs(&[2, 4, 5])).unwrap().blocks(), &[vs(&[2, 4, 5])]);
        assert!(partition_from_point(&r, vs(&[1])).is_err());
    }

    #[test]
    fn splits() {
        assert_eq!(enumerate_o(4).len(), 6);
        assert!(enumerate_o(3).is_empty());
        assert_eq!(enumerate_o(2), vec![(vs(&[1]), vs(&[2])), (vs(&[2]), vs(&[1]))]);
    }

    #[test]
    fn worked_point() {
        let y = q(&[(9, 10), (9, 10), (1, 10)]);
        assert!(in_a(&y).unwrap());
        for (i, j) in enumerate_o(4) {
            assert_eq!(in_a_ij(&y, i, j).unwrap(), (i, j) == (vs(&[3, 4]), vs(&[1, 2])));
        }
        assert_eq!(containing_split(&y).unwrap(), Some((vs(&[3, 4]), vs(&[1, 2]))));
        assert!(!in_a(&q(&[(0, 1); 3])).unwrap());
        assert_eq!(in_a(&q(&[(1, 1), (0, 1), (0, 1)])), Err(Error::OutsideOpenCube));
    }

    #[test]
    fn centers() {
        let b = star_center(vs(&[3, 4]), vs(&[1, 2]), 4).unwrap();
        assert_eq!(b, q(&[(1, 2), (1, 2), (0, 1)]));
        assert!(in_a_ij(&b, vs(&[3, 4]), vs(&[1, 2])).unwrap());
        let b = star_center(vs(&[1, 2]), vs(&[3, 4]), 4).unwrap();
        assert_eq!(b, q(&[(-1, 2), (-1, 2), (0, 1)]));
        for n in 2..=9 {
            for (i, j) in enumerate_o(n) {
                assert!(in_a_ij(&star_center(i, j, n).unwrap(), i, j).unwrap());
            }
        }
    }

    #[test]
    fn retraction_endpoints() {
        let y = q(&[(9, 10), (9, 10), (1, 10)]);
        let (i, j) = (vs(&[3, 4]), vs(&[1, 2]));
        assert_eq!(retract(&y, i, j, &Rational::zero()).unwrap(), y);
        assert_eq!(retract(&y, i, j, &Rational::one()).unwrap(), star_center(i, j, 4).unwrap());
        assert!(retract(&y, j, i, &rat(1, 2)).is_err());
    }

    #[test]
    fn gauge_round_trip() {
        let tol = default_tolerance();
        let (i, j) = (vs(&[3, 4]), vs(&[1, 2]));
        let g = Gauge::new(i, j, 4, &tol).unwrap();
        assert!(max_norm(&g.forward(g.center()).unwrap()).is_zero());
        let y = q(&[(9, 10), (9, 10), (1, 10)]);
        let w = g.forward(&y).unwrap();
        assert!(max_norm(&w) < Rational::one());
        assert_eq!(g.inverse(&w).unwrap(), y);
        assert!(Gauge::new(i, j, 4, &Rational::zero()).is_err());
        assert!(g.forward(&q(&[(0, 1), (0, 1), (1, 2)])).is_err());
    }
}
