//! Cohomology of the moment-angle complex `Z_K` assembled from the full
//! subcomplexes `K_I`, following Hochster's formula
//! `H^*(Z_K) = ⊕_I H̃^*(Σ^{|I|+1} |K_I|)`, plus an independent Koszul-complex
//! computation of `Tor_{k[v]}(k[K], k)` for cross-checking.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::{SimplicialComplex, SubsetTable, VertexSet};
use crate::error::Error;
use crate::homology::{reduced_cohomology_all, HomologyGroup};
use crate::linalg::{rank, Coeffs, SparseIntMatrix};
use crate::par;

/// Largest ambient size accepted by [`koszul_oracle`].
pub const KOSZUL_LIMIT: usize = 8;

/// Contribution of one vertex subset `I`: the non-zero groups
/// `H̃^d(K_I)`, keyed by the ambient degree `d + |I| + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HochsterSummand {
    pub subset: VertexSet,
    pub groups: Vec<(usize, HomologyGroup)>,
}

impl HochsterSummand {
    pub fn has_torsion(&self) -> bool {
        self.groups.iter().any(|(_, g)| !g.torsion.is_empty())
    }
}

/// Reduced cohomology of `K_I` in degrees `-1..=dim K_I` for every `I` in
/// `subsets` that is not a cone, in the order given.
pub(crate) fn subset_cohomology(
    k: &SimplicialComplex,
    table: &SubsetTable,
    subsets: &[VertexSet],
    coeffs: Coeffs,
) -> Result<Vec<(VertexSet, Vec<HomologyGroup>)>, Error> {
    let work: Vec<VertexSet> = subsets.iter().copied().filter(|i| !table.is_cone(*i)).collect();
    let results = par::map(&work, |i| reduced_cohomology_all(&k.restriction(*i), coeffs));
    work.into_iter()
        .zip(results)
        .map(|(i, r)| r.map(|gs| (i, gs)))
        .collect()
}

/// One summand per `I ⊆ ground` with non-zero contribution, by increasing
/// mask. `I = ∅` always contributes the unit in degree 0.
pub fn hochster_decomposition(k: &SimplicialComplex, coeffs: Coeffs) -> Result<Vec<HochsterSummand>, Error> {
    coeffs.validate()?;
    let table = SubsetTable::new(k)?;
    let subsets: Vec<VertexSet> = k.ground().subsets().skip(1).collect();
    Ok(assemble(coeffs, &subset_cohomology(k, &table, &subsets, coeffs)?))
}

/// Decomposition from per-subset cohomology (cones may be omitted).
pub(crate) fn assemble(coeffs: Coeffs, data: &[(VertexSet, Vec<HomologyGroup>)]) -> Vec<HochsterSummand> {
    let mut out = vec![HochsterSummand {
        subset: VertexSet::EMPTY,
        groups: vec![(
            0,
            HomologyGroup {
                degree: -1,
                free_rank: 1,
                torsion: Vec::new(),
                coeffs,
            },
        )],
    }];
    for (i, groups) in data {
        let shift = i.len() as i64 + 1;
        let groups: Vec<(usize, HomologyGroup)> = groups
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| ((g.degree + shift) as usize, g.clone()))
            .collect();
        if !groups.is_empty() && !i.is_empty() {
            out.push(HochsterSummand { subset: *i, groups });
        }
    }
    out
}

/// True when some summand carries integral torsion.
pub fn has_torsion(summands: &[HochsterSummand]) -> bool {
    summands.iter().any(HochsterSummand::has_torsion)
}

/// Ranks of a graded vector space by degree; zero coefficients are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PoincareSeries {
    coefficients: BTreeMap<usize, u64>,
}

impl PoincareSeries {
    pub fn one() -> Self {
        let mut s = PoincareSeries::default();
        s.add(0, 1);
        s
    }

    pub fn add(&mut self, degree: usize, rank: u64) {
        if rank > 0 {
            *self.coefficients.entry(degree).or_insert(0) += rank;
        }
    }

    pub fn coefficient(&self, degree: usize) -> u64 {
        self.coefficients.get(&degree).copied().unwrap_or(0)
    }

    /// `(degree, rank)` pairs with non-zero rank, by increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.coefficients.iter().map(|(d, r)| (*d, *r))
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.coefficients.keys().next_back().copied()
    }

    /// Sum of all ranks.
    pub fn total(&self) -> u64 {
        self.coefficients.values().sum()
    }

    pub fn mul(&self, other: &PoincareSeries) -> PoincareSeries {
        let mut out = PoincareSeries::default();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                out.add(a + b, x * y);
            }
        }
        out
    }

    /// Terms of degree at most `degree`.
    pub fn truncate(&self, degree: usize) -> PoincareSeries {
        PoincareSeries {
            coefficients: self.coefficients.range(..=degree).map(|(d, r)| (*d, *r)).collect(),
        }
    }
}

impl fmt::Display for PoincareSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, r) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (d, r) {
                (0, r) => write!(f, "{r}")?,
                (d, 1) => write!(f, "t^{d}")?,
                (d, r) => write!(f, "{r}t^{d}")?,
            }
        }
        Ok(())
    }
}

fn require_field(coeffs: Coeffs) -> Result<(), Error> {
    coeffs.validate()?;
    if !coeffs.is_field() {
        return Err(Error::InvalidParameter(String::from("Poincaré series need field coefficients")));
    }
    Ok(())
}

/// Poincaré series of `H^*(Z_K; k)` from the Hochster decomposition.
pub fn poincare_series(k: &SimplicialComplex, field: Coeffs) -> Result<PoincareSeries, Error> {
    require_field(field)?;
    let mut s = PoincareSeries::default();
    for summand in hochster_decomposition(k, field)? {
        for (d, g) in summand.groups {
            s.add(d, g.free_rank as u64);
        }
    }
    Ok(s)
}

/// One wedge summand `Σ^{|I|+1} |K_I|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeSummand {
    pub subset: VertexSet,
    pub suspensions: usize,
    pub groups: Vec<(usize, HomologyGroup)>,
    /// `(dimension, count)` when the contribution is free and concentrated in
    /// one degree. With integer coefficients the summand is then a wedge of
    /// `count` spheres, being a simply connected Moore space.
    pub spheres: Option<(usize, usize)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WedgeModel {
    pub coeffs: Option<Coeffs>,
    pub summands: Vec<WedgeSummand>,
}

impl WedgeModel {
    /// Degreewise ranks of the wedge plus the unit in degree 0.
    pub fn series(&self) -> PoincareSeries {
        let mut s = PoincareSeries::one();
        for w in &self.summands {
            for (d, g) in &w.groups {
                s.add(*d, g.free_rank as u64);
            }
        }
        s
    }

    /// True when every summand is identified as a wedge of spheres.
    pub fn is_sphere_wedge(&self) -> bool {
        self.summands.iter().all(|w| w.spheres.is_some())
    }
}

/// The decomposition `Z_K ≃ ⋁_I Σ^{|I|+1} |K_I|` as far as cohomology sees it:
/// every non-empty `I` with non-zero contribution.
pub fn wedge_model(k: &SimplicialComplex, coeffs: Coeffs) -> Result<WedgeModel, Error> {
    Ok(wedge_from_decomposition(hochster_decomposition(k, coeffs)?, coeffs))
}

/// Wedge model from an already computed decomposition.
pub fn wedge_from_decomposition(decomposition: Vec<HochsterSummand>, coeffs: Coeffs) -> WedgeModel {
    let summands = decomposition
        .into_iter()
        .filter(|s| !s.subset.is_empty())
        .map(|s| {
            let spheres = match s.groups.as_slice() {
                [(d, g)] if g.torsion.is_empty() => Some((*d, g.free_rank)),
                _ => None,
            };
            WedgeSummand {
                subset: s.subset,
                suspensions: s.subset.len() + 1,
                groups: s.groups,
                spheres,
            }
        })
        .collect();
    WedgeModel {
        coeffs: Some(coeffs),
        summands,
    }
}

/// Total degree at which Hochster's formula can last be non-zero.
pub fn koszul_degree_bound(k: &SimplicialComplex) -> usize {
    (k.ground().len() as i64 + k.dim().max(-1) + 1) as usize
}

/// Ranks of `Tor_{k[v_1..v_n]}(k[K], k)` by total degree (`deg v_i = 2`,
/// `deg u_i = 1`), up to `max_total_degree`, computed from the Koszul complex
/// `k[K] ⊗ Λ[u_1..u_n]` with `d u_i = v_i`.
///
/// Every multidegree that can reach the truncation range is visited,
/// squarefree or not. Intended for small `n` only.
pub fn koszul_oracle(k: &SimplicialComplex, field: Coeffs, max_total_degree: usize) -> Result<PoincareSeries, Error> {
    require_field(field)?;
    let ground = k.ground();
    if ground.len() > KOSZUL_LIMIT {
        return Err(Error::TooManyVertices(ground.len(), KOSZUL_LIMIT));
    }
    let needed = koszul_degree_bound(k);
    if max_total_degree < needed {
        return Err(Error::TruncationTooSmall {
            given: max_total_degree,
            needed,
        });
    }
    let vertices = ground.to_vec();
    let mut series = PoincareSeries::default();
    let mut m = vec![0usize; vertices.len()];
    let mut strands: Vec<Vec<usize>> = Vec::new();
    enumerate_multidegrees(&mut m, 0, max_total_degree, &mut strands);
    for m in strands {
        koszul_strand(k, &vertices, &m, field, max_total_degree, &mut series)?;
    }
    Ok(series)
}

/// Exponent vectors with `sum over i with m_i > 0 of (2 m_i - 1) <= budget`.
fn enumerate_multidegrees(m: &mut Vec<usize>, pos: usize, budget: usize, out: &mut Vec<Vec<usize>>) {
    if pos == m.len() {
        out.push(m.clone());
        return;
    }
    m[pos] = 0;
    enumerate_multidegrees(m, pos + 1, budget, out);
    let mut e = 1;
    while 2 * e - 1 <= budget {
        m[pos] = e;
        enumerate_multidegrees(m, pos + 1, budget - (2 * e - 1), out);
        e += 1;
    }
    m[pos] = 0;
}

/// Homology of the multidegree-`m` strand, spanned by `v^{m - 1_S} u_S` for
/// `S ⊆ supp m` whose monomial support is a face.
fn koszul_strand(
    k: &SimplicialComplex,
    vertices: &[usize],
    m: &[usize],
    field: Coeffs,
    max_total_degree: usize,
    series: &mut PoincareSeries,
) -> Result<(), Error> {
    let support: VertexSet = vertices
        .iter()
        .zip(m)
        .filter(|(_, e)| **e > 0)
        .fold(VertexSet::EMPTY, |acc, (v, _)| acc.with(*v));
    let ones: VertexSet = vertices
        .iter()
        .zip(m)
        .filter(|(_, e)| **e == 1)
        .fold(VertexSet::EMPTY, |acc, (v, _)| acc.with(*v));
    let weight: usize = m.iter().sum();
    // Basis elements by exterior degree |S|; v^{m - 1_S} has support
    // supp(m) minus the vertices of S with exponent one.
    let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); support.len() + 1];
    for s in support.subsets() {
        if k.is_face(support.difference(s.intersection(ones))) {
            by_size[s.len()].push(s);
        }
    }
    let maps: Vec<SparseIntMatrix> = (1..by_size.len())
        .map(|h| {
            let (src, dst) = (&by_size[h], &by_size[h - 1]);
            let mut entries = Vec::new();
            for (j, s) in src.iter().enumerate() {
                for (pos, v) in s.iter().enumerate() {
                    if let Ok(i) = dst.binary_search(&s.without(v)) {
                        entries.push((i, j, if pos % 2 == 0 { 1 } else { -1 }));
                    }
                }
            }
            SparseIntMatrix::from_i64_triplets(dst.len(), src.len(), &entries).expect("indices in range")
        })
        .collect();
    let mut ranks = vec![0usize; by_size.len() + 1];
    for (h, map) in maps.iter().enumerate() {
        ranks[h + 1] = rank(map, field)?;
    }
    for (h, basis) in by_size.iter().enumerate() {
        let total = 2 * weight - h;
        if total > max_total_degree {
            continue;
        }
        let betti = basis.len() - ranks[h] - ranks[h + 1];
        series.add(total, betti as u64);
    }
    Ok(())
}
