//! Exact linear algebra: sparse integer matrices, Smith normal form, ranks
//! over the rationals and prime fields, and subquotient invariants.

mod integer;
mod ring;
mod smith;
mod sparse;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

pub use integer::Integer;
pub use ring::{is_prime, EuclideanRing, Integers, PrimeField};
pub use smith::{smith_normal_form, SmithForm, SmithTransforms};
pub use sparse::{SparseIntMatrix, SparseMatrix};

use crate::error::Error;

/// Coefficient system for (co)homology and ranks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coeffs {
    Integers,
    Rationals,
    Prime(u64),
}

impl Coeffs {
    /// The default battery: Z, Q, F2, F3, F5.
    pub const DEFAULT_BATTERY: [Coeffs; 5] = [
        Coeffs::Integers,
        Coeffs::Rationals,
        Coeffs::Prime(2),
        Coeffs::Prime(3),
        Coeffs::Prime(5),
    ];

    pub fn is_field(&self) -> bool {
        !matches!(self, Coeffs::Integers)
    }

    pub fn validate(&self) -> Result<(), Error> {
        match self {
            Coeffs::Prime(p) => PrimeField::new(*p).map(|_| ()),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Coeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeffs::Integers => f.write_str("Z"),
            Coeffs::Rationals => f.write_str("Q"),
            Coeffs::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for Coeffs {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        match t {
            "Z" | "z" => Ok(Coeffs::Integers),
            "Q" | "q" => Ok(Coeffs::Rationals),
            _ => {
                let digits = t
                    .strip_prefix('F')
                    .or_else(|| t.strip_prefix('f'))
                    .ok_or_else(|| Error::InvalidParameter(bad_coeffs(t)))?;
                let p: u64 = digits.parse().map_err(|_| Error::InvalidParameter(bad_coeffs(t)))?;
                PrimeField::new(p)?;
                Ok(Coeffs::Prime(p))
            }
        }
    }
}

fn bad_coeffs(s: &str) -> String {
    let mut msg = "unknown coefficient system '".to_string();
    msg.push_str(s);
    msg.push_str("' (expected Z, Q or F<p>)");
    msg
}

/// Invariant factors of an integer matrix (no transforms).
pub fn invariant_factors(m: &SparseIntMatrix) -> Vec<Integer> {
    smith_normal_form(&Integers, m, false).invariant_factors
}

/// Rank of an integer matrix over the rationals or a prime field.
pub fn rank(m: &SparseIntMatrix, coeffs: Coeffs) -> Result<usize, Error> {
    match coeffs {
        Coeffs::Integers | Coeffs::Rationals => Ok(invariant_factors(m).len()),
        Coeffs::Prime(p) => {
            let field = PrimeField::new(p)?;
            let reduced = m.map_into(&field, |v| field.reduce(v));
            Ok(smith_normal_form(&field, &reduced, false).rank())
        }
    }
}

/// Isomorphism invariants of a finitely generated abelian group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    pub free_rank: usize,
    /// Non-unit invariant factors in divisibility order.
    pub torsion: Vec<Integer>,
}

/// `ker(m_out) / im(m_in)` for `m_in: A -> B`, `m_out: B -> C` with
/// `m_out * m_in = 0`.
pub fn quotient_group(m_in: &SparseIntMatrix, m_out: &SparseIntMatrix) -> Result<AbelianGroup, Error> {
    if m_in.rows() != m_out.cols() {
        return Err(Error::DimensionMismatch);
    }
    if !m_out.mul(&Integers, m_in).is_zero() {
        return Err(Error::NonzeroComposite);
    }
    let inc = invariant_factors(m_in);
    let out_rank = invariant_factors(m_out).len();
    // ker(m_out) is saturated in B, so the torsion of ker/im equals that of B/im.
    Ok(AbelianGroup {
        free_rank: m_in.rows() - out_rank - inc.len(),
        torsion: inc.into_iter().filter(|d| !d.is_unit()).collect(),
    })
}
