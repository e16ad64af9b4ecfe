//! Points of the real quotiented polyhedral products and the maps
//! `Φ'_K`, `λ_{I,J}`, `ψ_K`, `H_t` and `ζ` evaluated on them.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::{containing_split, delta, extend, max_norm, nu_unchecked, partition_from_point, rat, Gauge, Rational};
use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::Error;

/// A point of `(D^1)^{∧n}`; `-1` is the basepoint of each factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SmashPoint {
    coords: Vec<Rational>,
}

impl SmashPoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self, Error> {
        let one = Rational::one();
        if coords.is_empty() || coords.iter().any(|c| c.abs() > one) {
            return Err(Error::MalformedSmashPoint);
        }
        Ok(SmashPoint { coords })
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    /// Some coordinate is `-1`.
    pub fn is_basepoint(&self) -> bool {
        let m = -Rational::one();
        self.coords.contains(&m)
    }

    /// `{i : -1 < x_i < 1}`.
    pub fn support(&self) -> VertexSet {
        let one = Rational::one();
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| c.abs() < one)
            .fold(VertexSet::EMPTY, |acc, (i, _)| acc.with(i + 1))
    }
}

impl fmt::Display for SmashPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.coords)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, v: &[Rational]) -> fmt::Result {
    f.write_str("(")?;
    for (k, c) in v.iter().enumerate() {
        if k > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{c}")?;
    }
    f.write_str(")")
}

/// `x ∈ ℝẐ_K`: the basepoint, or its interior support is a face.
pub fn membership_rz_hat(k: &SimplicialComplex, x: &SmashPoint) -> bool {
    x.n() == k.n() && (x.is_basepoint() || k.is_face(x.support()))
}

/// `x ∈ ℝẐ_{K_I} ∧ ℝẐ_{K_J}` with coordinates in their original positions.
pub fn membership_split(k: &SimplicialComplex, i_set: VertexSet, j_set: VertexSet, x: &SmashPoint) -> bool {
    if x.n() != k.n() {
        return false;
    }
    let s = x.support();
    x.is_basepoint() || (k.is_face(s.intersection(i_set)) && k.is_face(s.intersection(j_set)))
}

/// `(y, x) ∈ Q'_K`: `y` off the diagonal and, for every block `B` of the
/// partition of `[n]` by equal values of `y`, `x|_B ∈ ℝẐ_{K_B}`.
pub fn membership_q_prime(k: &SimplicialComplex, y: &[Rational], x: &SmashPoint) -> bool {
    if x.is_basepoint() {
        return true;
    }
    if y.len() != k.n() || x.n() != k.n() || y.iter().all(|t| *t == y[0]) {
        return false;
    }
    let Ok(blocks) = partition_from_point(y, VertexSet::full(k.n())) else {
        return false;
    };
    let s = x.support();
    blocks.blocks().iter().all(|b| k.is_face(s.intersection(*b)))
}

/// A point of `Σ^{n-1} ℝẐ_K`: suspension coordinates `t` in `D^{n-1}` and
/// a smash payload.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuspensionPoint {
    pub t: Vec<Rational>,
    pub x: SmashPoint,
}

impl SuspensionPoint {
    pub fn new(t: Vec<Rational>, x: SmashPoint) -> Result<Self, Error> {
        if t.len() + 1 != x.n() {
            return Err(Error::DimensionMismatch);
        }
        if max_norm(&t) > Rational::one() {
            return Err(Error::InvalidParameter("suspension coordinate outside [-1, 1]".to_string()));
        }
        Ok(SuspensionPoint { t, x })
    }

    /// `β = max(|t_1|, ..., |t_{n-1}|, 0)`.
    pub fn beta(&self) -> Rational {
        max_norm(&self.t)
    }

    pub fn is_basepoint(&self) -> bool {
        self.x.is_basepoint() || self.beta() == Rational::one()
    }
}

impl fmt::Display for SuspensionPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.t)?;
        f.write_str(" ^ ")?;
        write_tuple(f, self.x.coords())
    }
}

/// A point of `ΣQ'_K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum QPoint {
    Basepoint,
    Point { s: Rational, y: Vec<Rational>, x: SmashPoint },
}

impl QPoint {
    /// Collapses to the basepoint when `s = ±1` or `x` is the basepoint.
    pub fn new(s: Rational, y: Vec<Rational>, x: SmashPoint) -> QPoint {
        if x.is_basepoint() || s.abs() == Rational::one() {
            QPoint::Basepoint
        } else {
            QPoint::Point { s, y, x }
        }
    }

    pub fn is_basepoint(&self) -> bool {
        matches!(self, QPoint::Basepoint)
    }
}

impl fmt::Display for QPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QPoint::Basepoint => f.write_str("*"),
            QPoint::Point { s, y, x } => {
                write!(f, "{s}; ")?;
                write_tuple(f, y)?;
                write!(f, " ^ {x}")
            }
        }
    }
}

/// `p ∈ ΣQ'_K`.
pub fn in_sigma_q_prime(k: &SimplicialComplex, p: &QPoint) -> bool {
    match p {
        QPoint::Basepoint => true,
        QPoint::Point { s, y, x } => s.abs() < Rational::one() && membership_q_prime(k, y, x),
    }
}

/// Largest difference between suspension coordinates `(s, y)`, provided
/// both points are the basepoint or both carry identical smash payloads.
pub fn suspension_distance(a: &QPoint, b: &QPoint) -> Option<Rational> {
    match (a, b) {
        (QPoint::Basepoint, QPoint::Basepoint) => Some(Rational::zero()),
        (QPoint::Point { s, y, x }, QPoint::Point { s: s2, y: y2, x: x2 }) if x == x2 && y.len() == y2.len() => {
            let diffs: Vec<Rational> = core::iter::once(s - s2).chain(y.iter().zip(y2).map(|(p, q)| p - q)).collect();
            Some(max_norm(&diffs))
        }
        _ => None,
    }
}

fn check_source(k: &SimplicialComplex, w: &SuspensionPoint) -> Result<(), Error> {
    if w.x.n() != k.n() {
        return Err(Error::DimensionMismatch);
    }
    if !membership_rz_hat(k, &w.x) {
        return Err(Error::NotInPolyhedralProduct);
    }
    Ok(())
}

fn postcondition(k: &SimplicialComplex, p: QPoint, what: &str) -> Result<QPoint, Error> {
    if in_sigma_q_prime(k, &p) {
        Ok(p)
    } else {
        Err(Error::Postcondition(format!("{what} image {p} is not in ΣQ'_K")))
    }
}

/// `Φ'_K(t, x) = (2β - 1, ȳ, x)`, or the basepoint when `β ∈ {0, 1}`.
pub fn eval_phi_prime(k: &SimplicialComplex, w: &SuspensionPoint) -> Result<QPoint, Error> {
    check_source(k, w)?;
    let beta = w.beta();
    if beta.is_zero() || beta.is_one() {
        return Ok(QPoint::Basepoint);
    }
    let p = QPoint::new(&beta * rat(2, 1) - Rational::one(), extend(&w.t), w.x.clone());
    postcondition(k, p, "Φ'")
}

/// `φ_i(x_i) = (1 + x_i) · max(0, (δ - ν_{[n],i}) / δ) - 1` at the point `z`.
pub fn eval_phi_coordinate(z: &[Rational], i: usize, x_i: &Rational) -> Result<Rational, Error> {
    if i == 0 || i > z.len() {
        return Err(Error::InvalidParameter(format!("coordinate {i} outside 1..={}", z.len())));
    }
    if x_i.abs() > Rational::one() {
        return Err(Error::MalformedSmashPoint);
    }
    let d = delta(z);
    if d.is_zero() {
        return Err(Error::ZeroSpread);
    }
    Ok(phi(z, &d, i, x_i))
}

fn phi(z: &[Rational], d: &Rational, i: usize, x_i: &Rational) -> Rational {
    let nu = nu_unchecked(z, VertexSet::full(z.len()), i);
    let factor = if nu >= *d { Rational::zero() } else { (d - nu) / d };
    (Rational::one() + x_i) * factor - Rational::one()
}

fn phi_all(z: &[Rational], x: &SmashPoint) -> Vec<Rational> {
    let d = delta(z);
    debug_assert!(!d.is_zero());
    x.coords().iter().enumerate().map(|(k, c)| phi(z, &d, k + 1, c)).collect()
}

/// `λ_{I,J}(t, x)`. The gauge inverse gives `y' ∈ A_{I,J}`, and the
/// suspension coordinate is `2β' - 1` with `β' = max|t'_i|`, so that
/// `λ_{I,J}(h(y), x)` reproduces `(2β - 1, ȳ, φ(x))`. Boundary points of
/// `D^{n-1}` and basepoint payloads go to the basepoint.
pub fn eval_lambda(
    k: &SimplicialComplex,
    i_set: VertexSet,
    j_set: VertexSet,
    w: &SuspensionPoint,
    tol: &Rational,
) -> Result<QPoint, Error> {
    if w.x.n() != k.n() {
        return Err(Error::DimensionMismatch);
    }
    let gauge = Gauge::new(i_set, j_set, k.n(), tol)?;
    if !membership_split(k, i_set, j_set, &w.x) {
        return Err(Error::NotInPolyhedralProduct);
    }
    if w.is_basepoint() {
        return Ok(QPoint::Basepoint);
    }
    lambda_at(k, &gauge, &w.t, &w.x)
}

fn lambda_at(k: &SimplicialComplex, gauge: &Gauge, t: &[Rational], x: &SmashPoint) -> Result<QPoint, Error> {
    let y = gauge.inverse(t)?;
    let beta = max_norm(&y);
    if beta.is_zero() || beta.is_one() {
        return Ok(QPoint::Basepoint);
    }
    let z = extend(&y);
    let px = SmashPoint::new(phi_all(&z, x))?;
    let p = QPoint::new(&beta * rat(2, 1) - Rational::one(), z, px);
    postcondition(k, p, "λ")
}

/// The split containing a point of `A` and its gauge image.
pub type Split = ((VertexSet, VertexSet), Vec<Rational>);

/// `ψ` on `D^{n-1}`: `None` off `A`, otherwise the split `(I, J)` with
/// `y ∈ A_{I,J}` and `h(y)`.
pub fn eval_psi(y: &[Rational], tol: &Rational) -> Result<Option<Split>, Error> {
    if max_norm(y) >= Rational::one() {
        return Ok(None);
    }
    let Some((i, j)) = containing_split(y)? else {
        return Ok(None);
    };
    let w = Gauge::new(i, j, y.len() + 1, tol)?.forward(y)?;
    Ok(Some(((i, j), w)))
}

/// A point of `⋁_{(I,J) ∈ O} Σ^{n-1} ℝẐ_K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WedgePoint {
    Basepoint,
    Summand { i: VertexSet, j: VertexSet, point: SuspensionPoint },
}

/// `ψ_K = ψ ∧ 1`.
pub fn eval_psi_k(k: &SimplicialComplex, w: &SuspensionPoint, tol: &Rational) -> Result<WedgePoint, Error> {
    check_source(k, w)?;
    if w.is_basepoint() {
        return Ok(WedgePoint::Basepoint);
    }
    Ok(match eval_psi(&w.t, tol)? {
        None => WedgePoint::Basepoint,
        Some(((i, j), t)) => WedgePoint::Summand {
            i,
            j,
            point: SuspensionPoint { t, x: w.x.clone() },
        },
    })
}

/// `H_t(ω) = (2β - 1, ȳ, ((1 - t) x_i + t φ_i(x_i))_i)`.
pub fn eval_h(k: &SimplicialComplex, w: &SuspensionPoint, time: &Rational) -> Result<QPoint, Error> {
    check_source(k, w)?;
    if time.is_negative() || *time > Rational::one() {
        return Err(Error::InvalidParameter("homotopy time outside [0, 1]".to_string()));
    }
    let beta = w.beta();
    if beta.is_zero() || beta.is_one() {
        return Ok(QPoint::Basepoint);
    }
    let z = extend(&w.t);
    let s = Rational::one() - time;
    let x: Vec<Rational> = phi_all(&z, &w.x)
        .into_iter()
        .zip(w.x.coords())
        .map(|(f, c)| &s * c + time * f)
        .collect();
    let p = QPoint::new(&beta * rat(2, 1) - Rational::one(), z, SmashPoint::new(x)?);
    postcondition(k, p, "H_t")
}

/// `ζ = λ ∘ Σ^{n-1} ι̂ ∘ ψ_K`; the inclusion leaves coordinates unchanged.
pub fn eval_zeta(k: &SimplicialComplex, w: &SuspensionPoint, tol: &Rational) -> Result<QPoint, Error> {
    match eval_psi_k(k, w, tol)? {
        WedgePoint::Basepoint => Ok(QPoint::Basepoint),
        WedgePoint::Summand { i, j, point } => eval_lambda(k, i, j, &point, tol),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(v: &[(i64, i64)]) -> Vec<Rational> {
        v.iter().map(|&(p, d)| rat(p, d)).collect()
    }

    fn cycle4() -> SimplicialComplex {
        SimplicialComplex::new(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]).unwrap()
    }

    fn smash(v: &[(i64, i64)]) -> SmashPoint {
        SmashPoint::new(q(v)).unwrap()
    }

    #[test]
    fn smash_membership() {
        let c = cycle4();
        assert!(!membership_rz_hat(&c, &smash(&[(0, 1), (1, 1), (0, 1), (1, 1)])));
        assert!(membership_rz_hat(&c, &smash(&[(0, 1), (-1, 1), (0, 1), (1, 2)])));
        assert!(membership_rz_hat(&c, &smash(&[(1, 1); 4])));
        assert!(SmashPoint::new(q(&[(3, 2)])).is_err());
    }

    #[test]
    fn q_prime_membership() {
        let c = cycle4();
        let x = smash(&[(0, 1), (1, 1), (0, 1), (1, 1)]);
        // Blocks {1,2} and {3,4} see the interior coordinates 1 and 3 apart.
        assert!(membership_q_prime(&c, &q(&[(0, 1), (0, 1), (1, 1), (1, 1)]), &x));
        assert!(!membership_q_prime(&c, &q(&[(0, 1), (1, 1), (0, 1), (1, 1)]), &x));
        assert!(!membership_q_prime(&c, &q(&[(1, 2); 4]), &x));
        assert!(membership_q_prime(&c, &q(&[(1, 2); 4]), &smash(&[(-1, 1), (0, 1), (0, 1), (0, 1)])));
    }

    #[test]
    fn phi_prime_values() {
        let c = cycle4();
        let x = smash(&[(1, 2), (1, 2), (1, 1), (1, 1)]);
        let w = SuspensionPoint::new(q(&[(9, 10), (9, 10), (1, 10)]), x.clone()).unwrap();
        match eval_phi_prime(&c, &w).unwrap() {
            QPoint::Point { s, y, .. } => {
                assert_eq!(s, rat(4, 5));
                assert_eq!(y, q(&[(9, 10), (9, 10), (1, 10), (0, 1)]));
            }
            QPoint::Basepoint => panic!("expected a point"),
        }
        let zero = SuspensionPoint::new(q(&[(0, 1); 3]), x.clone()).unwrap();
        assert!(eval_phi_prime(&c, &zero).unwrap().is_basepoint());
        let edge = SuspensionPoint::new(q(&[(1, 1), (0, 1), (0, 1)]), x).unwrap();
        assert!(eval_phi_prime(&c, &edge).unwrap().is_basepoint());
    }

    #[test]
    fn phi_coordinate() {
        // δ = 1/4 and ν_{[4],i} = 0 at coordinate 1.
        let z = q(&[(1, 1), (1, 1), (0, 1), (0, 1)]);
        assert_eq!(eval_phi_coordinate(&z, 1, &rat(1, 3)).unwrap(), rat(1, 3));
        // ν ≥ δ clamps to the basepoint.
        let z = q(&[(1, 1), (0, 1), (1, 2), (0, 1)]);
        assert_eq!(eval_phi_coordinate(&z, 3, &rat(1, 3)).unwrap(), rat(-1, 1));
        // ν = δ/2 and x = 1 give 0: δ = 1/4, ν_3 = 1/8.
        let z = q(&[(1, 1), (1, 1), (1, 8), (0, 1)]);
        assert_eq!(eval_phi_coordinate(&z, 3, &Rational::one()).unwrap(), Rational::zero());
        assert_eq!(eval_phi_coordinate(&q(&[(0, 1); 4]), 1, &Rational::one()), Err(Error::ZeroSpread));
    }

    #[test]
    fn homotopy_endpoints() {
        let c = cycle4();
        let tol = super::super::default_tolerance();
        let x = smash(&[(1, 2), (1, 3), (1, 1), (1, 1)]);
        let w = SuspensionPoint::new(q(&[(9, 10), (9, 10), (1, 10)]), x).unwrap();
        assert_eq!(eval_h(&c, &w, &Rational::zero()).unwrap(), eval_phi_prime(&c, &w).unwrap());
        let h1 = eval_h(&c, &w, &Rational::one()).unwrap();
        let z = eval_zeta(&c, &w, &tol).unwrap();
        assert!(suspension_distance(&h1, &z).unwrap() <= tol);
        match eval_psi_k(&c, &w, &tol).unwrap() {
            WedgePoint::Summand { i, j, .. } => assert_eq!((i.to_vec(), j.to_vec()), (vec![3, 4], vec![1, 2])),
            WedgePoint::Basepoint => panic!("expected a summand"),
        }
        // Off A both endpoints collapse.
        let off = SuspensionPoint::new(q(&[(1, 2), (1, 4), (-1, 3)]), smash(&[(1, 1); 4])).unwrap();
        assert!(eval_zeta(&c, &off, &tol).unwrap().is_basepoint());
        assert!(eval_h(&c, &off, &Rational::one()).unwrap().is_basepoint());
    }

    #[test]
    fn lambda_needs_neighbourliness() {
        // Vertex 4 is not a face, so the singleton block {4} cannot carry an
        // interior coordinate.
        let k = SimplicialComplex::new(4, &[vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
        let tol = super::super::default_tolerance();
        let w = SuspensionPoint::new(q(&[(1, 4), (1, 3), (-1, 5)]), smash(&[(0, 1), (1, 1), (1, 1), (1, 1)])).unwrap();
        let (i, j) = (VertexSet::from_bits(0b11000), VertexSet::from_bits(0b00110));
        assert!(matches!(eval_lambda(&k, i, j, &w, &tol), Err(Error::Postcondition(_))));
        let c = cycle4();
        let x = smash(&[(0, 1), (1, 1), (1, 1), (1, 1)]);
        let w = SuspensionPoint::new(q(&[(1, 4), (1, 3), (-1, 5)]), x).unwrap();
        assert!(eval_lambda(&c, i, j, &w, &tol).is_ok());
    }
}
