//! Product vanishing for `H^*(Z_K)` through the inclusions
//! `ι_{I,J} : K_{I∪J} -> K_I * K_J`, nullhomotopy certificates for them, and
//! the resulting co-H verdict for neighbourly complexes.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::{SimplicialComplex, SubsetTable, VertexSet};
use crate::error::Error;
use crate::hochster::{assemble, subset_cohomology, wedge_from_decomposition, WedgeModel};
use crate::homology::{
    connectivity_certificate, connectivity_from_cohomology, induced_map_on_cohomology, reduced_cohomology_all,
    CertificateBasis, ChainComplexData, CohomologyBasis, Connectivity, ConnectivityCertificate, HomologyGroup,
    InducedMap,
};
use crate::linalg::{Coeffs, EuclideanRing, Integer, Integers, PrimeField};
use crate::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NullReason {
    /// `K_I` or `K_J` is a cone, so the join is contractible.
    TargetContractible,
    /// `K_{I∪J}` is a cone. A cone point of `K_{I∪J}` is also one of `K_I`
    /// or `K_J`, so after the first rule this never fires for full
    /// subcomplexes; it is kept for completeness.
    SourceContractible,
    /// `dim K_{I∪J}` is at most the connectivity of the join.
    DimBelowConnectivity,
}

impl fmt::Display for NullReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NullReason::TargetContractible => "target-contractible",
            NullReason::SourceContractible => "source-contractible",
            NullReason::DimBelowConnectivity => "dim-below-connectivity",
        })
    }
}

/// A coefficient system and degree where `ι*` is non-zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Obstruction {
    pub coeffs: Coeffs,
    pub degree: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NullCertificate {
    Null(NullReason),
    NotNull(Obstruction),
    Unknown,
}

impl NullCertificate {
    pub fn is_null(&self) -> bool {
        matches!(self, NullCertificate::Null(_))
    }

    pub fn is_not_null(&self) -> bool {
        matches!(self, NullCertificate::NotNull(_))
    }
}

/// The inclusion `K_{I∪J} ⊆ K_I * K_J` with its induced maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairReport {
    pub i: VertexSet,
    pub j: VertexSet,
    pub induced: Vec<InducedMap>,
    pub certificate: NullCertificate,
}

fn check_pair(k: &SimplicialComplex, i: VertexSet, j: VertexSet) -> Result<(), Error> {
    if i.is_empty() || j.is_empty() || !i.is_disjoint(j) || !i.union(j).is_subset(k.ground()) {
        return Err(Error::InvalidPair);
    }
    Ok(())
}

/// What the certificate rules need to know about one full subcomplex.
#[derive(Clone, Debug)]
struct Facts {
    cone: bool,
    dim: i64,
    /// Integral connectivity; absent for cones.
    connectivity: Option<ConnectivityCertificate>,
    /// All integral reduced cohomology vanishes.
    acyclic: bool,
}

impl Facts {
    fn direct(k: &SimplicialComplex, i: VertexSet) -> Facts {
        let r = k.restriction(i);
        if r.is_cone().is_some() {
            return Facts {
                cone: true,
                dim: r.dim(),
                connectivity: None,
                acyclic: true,
            };
        }
        let groups = reduced_cohomology_all(&r, Coeffs::Integers).expect("integer coefficients");
        Facts {
            cone: false,
            dim: r.dim(),
            connectivity: Some(connectivity_from_cohomology(&r, &groups)),
            acyclic: groups.iter().all(HomologyGroup::is_zero),
        }
    }
}

fn topological(c: &ConnectivityCertificate) -> Option<Connectivity> {
    (c.basis == CertificateBasis::Topological).then_some(c.connectivity)
}

/// Rules (a) to (c); `None` when none applies.
fn structural_rules(fi: &Facts, fj: &Facts, fu: &Facts) -> Option<NullReason> {
    if fi.cone || fj.cone {
        return Some(NullReason::TargetContractible);
    }
    if fu.cone {
        return Some(NullReason::SourceContractible);
    }
    let ci = fi.connectivity.as_ref().and_then(topological)?;
    let cj = fj.connectivity.as_ref().and_then(topological)?;
    let fits = match (ci, cj) {
        (Connectivity::Finite(a), Connectivity::Finite(b)) => fu.dim <= a + b + 2,
        _ => true,
    };
    fits.then_some(NullReason::DimBelowConnectivity)
}

fn join_inclusion(k: &SimplicialComplex, i: VertexSet, j: VertexSet) -> (SimplicialComplex, SimplicialComplex) {
    let join = k
        .restriction(i)
        .join(&k.restriction(j))
        .expect("disjoint ground sets of the same ambient size");
    let source = k.restriction(i.union(j));
    debug_assert!(source.facets().iter().all(|f| join.is_face(*f)));
    (source, join)
}

fn first_nonzero(maps: &[InducedMap]) -> Option<Obstruction> {
    maps.iter().find_map(|m| {
        m.nonzero_degrees().next().map(|degree| Obstruction {
            coeffs: m.coeffs,
            degree,
        })
    })
}

/// Applies the rules in order; rule (d) evaluates induced maps over `battery`
/// and stops at the first non-zero one.
fn certify(
    k: &SimplicialComplex,
    i: VertexSet,
    j: VertexSet,
    facts: [&Facts; 3],
    battery: &[Coeffs],
) -> Result<NullCertificate, Error> {
    let [fi, fj, fu] = facts;
    if let Some(reason) = structural_rules(fi, fj, fu) {
        return Ok(NullCertificate::Null(reason));
    }
    // An integrally acyclic side makes every induced map zero.
    if fi.acyclic || fj.acyclic || fu.acyclic {
        return Ok(NullCertificate::Unknown);
    }
    let (source, join) = join_inclusion(k, i, j);
    for &coeffs in battery {
        let map = induced_map_on_cohomology(&source, &join, coeffs)?;
        if let Some(o) = first_nonzero(core::slice::from_ref(&map)) {
            return Ok(NullCertificate::NotNull(o));
        }
    }
    Ok(NullCertificate::Unknown)
}

/// Certificate for `ι_{I,J}` using the default coefficient battery.
pub fn null_certificate(k: &SimplicialComplex, i: VertexSet, j: VertexSet) -> Result<NullCertificate, Error> {
    check_pair(k, i, j)?;
    let (fi, fj, fu) = (Facts::direct(k, i), Facts::direct(k, j), Facts::direct(k, i.union(j)));
    certify(k, i, j, [&fi, &fj, &fu], &Coeffs::DEFAULT_BATTERY)
}

/// Induced maps of `ι_{I,J}` over each of `coeffs`, with a certificate whose
/// map rule uses the same coefficient systems.
pub fn iota_pair(k: &SimplicialComplex, i: VertexSet, j: VertexSet, coeffs: &[Coeffs]) -> Result<PairReport, Error> {
    check_pair(k, i, j)?;
    for c in coeffs {
        c.validate()?;
    }
    let (source, join) = join_inclusion(k, i, j);
    let induced = coeffs
        .iter()
        .map(|c| induced_map_on_cohomology(&source, &join, *c))
        .collect::<Result<Vec<_>, _>>()?;
    let (fi, fj, fu) = (Facts::direct(k, i), Facts::direct(k, j), Facts::direct(k, i.union(j)));
    let certificate = match structural_rules(&fi, &fj, &fu) {
        Some(reason) => NullCertificate::Null(reason),
        None => first_nonzero(&induced).map_or(NullCertificate::Unknown, NullCertificate::NotNull),
    };
    Ok(PairReport {
        i,
        j,
        induced,
        certificate,
    })
}

/// Unordered pairs `{I, J}` of disjoint non-empty subsets of `ground`, listed
/// once with `min(I ∪ J) ∈ I`, grouped by `U = I ∪ J` in increasing mask order.
pub fn disjoint_pairs(ground: VertexSet) -> Vec<(VertexSet, VertexSet)> {
    ground.subsets().filter(|u| u.len() >= 2).flat_map(pairs_in).collect()
}

fn pairs_in(u: VertexSet) -> Vec<(VertexSet, VertexSet)> {
    let m = u.min_vertex().expect("non-empty");
    let rest = u.without(m);
    rest.subsets()
        .filter(|s| *s != rest)
        .map(|s| {
            let i = s.with(m);
            (i, u.difference(i))
        })
        .collect()
}

/// Precomputed integral data for every full subcomplex.
struct Analysis {
    table: SubsetTable,
    facts: BTreeMap<VertexSet, Facts>,
    cohomology: Vec<(VertexSet, Vec<HomologyGroup>)>,
}

impl Analysis {
    fn new(k: &SimplicialComplex) -> Result<Self, Error> {
        let table = SubsetTable::new(k)?;
        let subsets: Vec<VertexSet> = k.ground().subsets().skip(1).collect();
        let cohomology = subset_cohomology(k, &table, &subsets, Coeffs::Integers)?;
        let mut facts = BTreeMap::new();
        for (i, groups) in &cohomology {
            let r = k.restriction(*i);
            facts.insert(
                *i,
                Facts {
                    cone: false,
                    dim: table.dim(*i),
                    connectivity: Some(connectivity_from_cohomology(&r, groups)),
                    acyclic: groups.iter().all(HomologyGroup::is_zero),
                },
            );
        }
        Ok(Analysis {
            table,
            facts,
            cohomology,
        })
    }

    fn facts(&self, i: VertexSet) -> Facts {
        match self.facts.get(&i) {
            Some(f) => f.clone(),
            None => Facts {
                cone: true,
                dim: self.table.dim(i),
                connectivity: None,
                acyclic: true,
            },
        }
    }
}

/// `(true, [])` when every `ι*_{I,J}` vanishes over `coeffs`; otherwise
/// `false` with a report for every pair where it does not.
pub fn product_golod_check(k: &SimplicialComplex, coeffs: Coeffs) -> Result<(bool, Vec<PairReport>), Error> {
    coeffs.validate()?;
    let table = SubsetTable::new(k)?;
    let subsets: Vec<VertexSet> = k.ground().subsets().skip(1).collect();
    let acyclic: BTreeMap<VertexSet, bool> = subset_cohomology(k, &table, &subsets, coeffs)?
        .into_iter()
        .map(|(i, gs)| (i, gs.iter().all(HomologyGroup::is_zero)))
        .collect();
    let trivial = |s: VertexSet| acyclic.get(&s).copied().unwrap_or(true);
    let candidates: Vec<(VertexSet, VertexSet)> = disjoint_pairs(k.ground())
        .into_iter()
        .filter(|(i, j)| !trivial(*i) && !trivial(*j) && !trivial(i.union(*j)))
        .collect();
    let results = par::map(&candidates, |&(i, j)| -> Result<Option<PairReport>, Error> {
        let (source, join) = join_inclusion(k, i, j);
        let map = induced_map_on_cohomology(&source, &join, coeffs)?;
        Ok(first_nonzero(core::slice::from_ref(&map)).map(|o| PairReport {
            i,
            j,
            induced: vec![map],
            certificate: NullCertificate::NotNull(o),
        }))
    });
    let mut witnesses = Vec::new();
    for r in results {
        if let Some(w) = r? {
            witnesses.push(w);
        }
    }
    Ok((witnesses.is_empty(), witnesses))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    CoH(WedgeModel),
    NotCoH(PairReport),
    /// Pairs left without a certificate (empty when only the hypothesis fails).
    Inconclusive(Vec<(VertexSet, VertexSet)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCertificate {
    pub i: VertexSet,
    pub j: VertexSet,
    pub certificate: NullCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremVerdict {
    /// `K` is `⌊n/3⌋`-neighbourly.
    pub hypothesis_holds: bool,
    pub neighbourliness: usize,
    pub outcome: Outcome,
    /// Certificates in canonical pair order; stops after the block holding
    /// the first non-null pair.
    pub certificates: Vec<PairCertificate>,
}

impl TheoremVerdict {
    pub fn count(&self, pred: impl Fn(&NullCertificate) -> bool) -> usize {
        self.certificates.iter().filter(|c| pred(&c.certificate)).count()
    }
}

/// Pairs are certified in blocks of this many unions, in canonical order, so
/// the first non-null witness does not depend on scheduling.
const BLOCK: usize = 64;

/// Decides whether `Z_K` is a co-H-space as far as the certificates allow:
/// a non-zero induced map rules it out, and under the neighbourliness
/// hypothesis null certificates for every pair establish it.
pub fn theorem_verdict(k: &SimplicialComplex) -> Result<TheoremVerdict, Error> {
    let analysis = Analysis::new(k)?;
    let neighbourliness = k.neighbourliness();
    let hypothesis_holds = k.is_n3_neighbourly();
    let unions: Vec<VertexSet> = k.ground().subsets().filter(|u| u.len() >= 2).collect();
    let mut certificates: Vec<PairCertificate> = Vec::new();
    let mut witness: Option<(VertexSet, VertexSet)> = None;
    for block in unions.chunks(BLOCK) {
        let results = par::map(block, |&u| -> Result<Vec<PairCertificate>, Error> {
            let fu = analysis.facts(u);
            pairs_in(u)
                .into_iter()
                .map(|(i, j)| {
                    let (fi, fj) = (analysis.facts(i), analysis.facts(j));
                    let certificate = certify(k, i, j, [&fi, &fj, &fu], &Coeffs::DEFAULT_BATTERY)?;
                    Ok(PairCertificate { i, j, certificate })
                })
                .collect()
        });
        for r in results {
            certificates.extend(r?);
        }
        if let Some(c) = certificates.iter().find(|c| c.certificate.is_not_null()) {
            witness = Some((c.i, c.j));
            break;
        }
    }
    let outcome = if let Some((i, j)) = witness {
        Outcome::NotCoH(iota_pair(k, i, j, &Coeffs::DEFAULT_BATTERY)?)
    } else {
        let unknown: Vec<(VertexSet, VertexSet)> = certificates
            .iter()
            .filter(|c| !c.certificate.is_null())
            .map(|c| (c.i, c.j))
            .collect();
        if hypothesis_holds && unknown.is_empty() {
            let decomposition = assemble(Coeffs::Integers, &analysis.cohomology);
            Outcome::CoH(wedge_from_decomposition(decomposition, Coeffs::Integers))
        } else {
            Outcome::Inconclusive(unknown)
        }
    };
    Ok(TheoremVerdict {
        hypothesis_holds,
        neighbourliness,
        outcome,
        certificates,
    })
}

/// A class in `H̃^degree` given by coordinates in the canonical basis.
/// Over the rationals the coordinates refer to the free generators of the
/// integral basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CohomologyClass {
    pub degree: i64,
    pub coords: Vec<Integer>,
}

impl CohomologyClass {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Integer::is_zero)
    }
}

/// Value of the join cochain `α * β` on a face `σ ⊔ τ` sorted by label:
/// `(-1)^{(p+1)(q+1)} α(σ) β(τ)` on the concatenated orientation `[σ, τ]`,
/// times the sign of the shuffle sorting `σ` followed by `τ`.
fn join_sign(sigma: VertexSet, tau: VertexSet, p: i64, q: i64) -> bool {
    let mut inversions = 0usize;
    for a in sigma.iter() {
        inversions += tau.iter().filter(|&b| b < a).count();
    }
    let base = ((p + 1) * (q + 1)).rem_euclid(2) as usize;
    (inversions + base) % 2 == 1
}

/// Cochain on the `(p + q + 1)`-faces of `target` from cochains on `K_I`
/// and `K_J`; faces of `target` not split as `p`-face plus `q`-face get zero.
fn join_product_cochain<R: EuclideanRing>(
    ring: &R,
    target_faces: &[VertexSet],
    (i, bi, alpha): (VertexSet, &CohomologyBasis<R>, &[R::Elem]),
    (j, bj, beta): (VertexSet, &CohomologyBasis<R>, &[R::Elem]),
) -> Vec<R::Elem> {
    let (p, q) = (bi.degree(), bj.degree());
    target_faces
        .iter()
        .map(|phi| {
            let (sigma, tau) = (phi.intersection(i), phi.intersection(j));
            if sigma.len() as i64 != p + 1 || tau.len() as i64 != q + 1 {
                return ring.zero();
            }
            let (Ok(a), Ok(b)) = (bi.faces().binary_search(&sigma), bj.faces().binary_search(&tau)) else {
                return ring.zero();
            };
            let v = ring.mul(&alpha[a], &beta[b]);
            if join_sign(sigma, tau, p, q) {
                ring.neg(&v)
            } else {
                v
            }
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn cup_generic<R: EuclideanRing>(
    ring: &R,
    k: &SimplicialComplex,
    i: VertexSet,
    alpha: &[R::Elem],
    p: i64,
    j: VertexSet,
    beta: &[R::Elem],
    q: i64,
) -> Result<Vec<R::Elem>, Error> {
    let (ci, cj) = (ChainComplexData::new(&k.restriction(i)), ChainComplexData::new(&k.restriction(j)));
    let cu = ChainComplexData::new(&k.restriction(i.union(j)));
    let (bi, bj) = (CohomologyBasis::new(ring, &ci, p), CohomologyBasis::new(ring, &cj, q));
    let bu = CohomologyBasis::new(ring, &cu, p + q + 1);
    let a = bi.cocycle(alpha)?;
    let b = bj.cocycle(beta)?;
    let z = join_product_cochain(ring, bu.faces(), (i, &bi, &a), (j, &bj, &b));
    bu.coordinates(&z)
}

/// Product of `α ∈ H̃^p(K_I)` and `β ∈ H̃^q(K_J)` in `H̃^{p+q+1}(K_{I∪J})`
/// over a field: the join class `α * β` pulled back along `ι_{I,J}`.
/// Overlapping `I` and `J` give zero.
pub fn cup_product(
    k: &SimplicialComplex,
    field: Coeffs,
    i: VertexSet,
    alpha: &CohomologyClass,
    j: VertexSet,
    beta: &CohomologyClass,
) -> Result<CohomologyClass, Error> {
    field.validate()?;
    if !field.is_field() {
        return Err(Error::InvalidParameter("cup products are computed over a field".to_string()));
    }
    if !i.union(j).is_subset(k.ground()) {
        return Err(Error::InvalidPair);
    }
    let degree = alpha.degree + beta.degree + 1;
    let expect = |s: VertexSet, c: &CohomologyClass| -> Result<(), Error> {
        let g = group_at(k, s, c.degree, field)?;
        if g.free_rank != c.coords.len() {
            return Err(Error::MalformedClass(alloc::format!(
                "degree {} class on {} needs {} coordinates, got {}",
                c.degree,
                s,
                g.free_rank,
                c.coords.len()
            )));
        }
        Ok(())
    };
    expect(i, alpha)?;
    expect(j, beta)?;
    if !i.is_disjoint(j) {
        let g = group_at(k, i.union(j), degree, field)?;
        return Ok(CohomologyClass {
            degree,
            coords: vec![Integer::ZERO; g.free_rank],
        });
    }
    let coords = match field {
        Coeffs::Prime(p) => {
            let f = PrimeField::new(p)?;
            let lift = |c: &CohomologyClass| c.coords.iter().map(|x| f.reduce(x)).collect::<Vec<u64>>();
            cup_generic(&f, k, i, &lift(alpha), alpha.degree, j, &lift(beta), beta.degree)?
                .into_iter()
                .map(|x| Integer::from(x as i64))
                .collect()
        }
        _ => {
            // Pad with zero torsion coordinates, then keep the free part.
            let pad = |s: VertexSet, c: &CohomologyClass| -> Result<Vec<Integer>, Error> {
                let g = group_at(k, s, c.degree, Coeffs::Integers)?;
                let mut v = c.coords.clone();
                v.resize(g.summands(), Integer::ZERO);
                Ok(v)
            };
            let free = group_at(k, i.union(j), degree, Coeffs::Integers)?.free_rank;
            let mut out = cup_generic(&Integers, k, i, &pad(i, alpha)?, alpha.degree, j, &pad(j, beta)?, beta.degree)?;
            out.truncate(free);
            out
        }
    };
    Ok(CohomologyClass { degree, coords })
}

fn group_at(k: &SimplicialComplex, s: VertexSet, degree: i64, coeffs: Coeffs) -> Result<HomologyGroup, Error> {
    crate::homology::reduced_cohomology(&k.restriction(s), degree, coeffs)
}

/// Connectivity certificate of `K_I`, as used by the certificate rules.
pub fn subset_connectivity(k: &SimplicialComplex, i: VertexSet) -> ConnectivityCertificate {
    connectivity_certificate(&k.restriction(i))
}
