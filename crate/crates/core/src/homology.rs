//! Reduced simplicial (co)homology over the integers, the rationals and
//! prime fields, with explicit cocycle bases and the maps induced by
//! inclusions.
//!
//! Faces are oriented by increasing vertex label and boundary signs alternate
//! from position 0. The chain complex is augmented: the empty face spans
//! degree `-1` and every vertex bounds it.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::Error;
use crate::linalg::{
    smith_normal_form, Coeffs, EuclideanRing, Integer, Integers, PrimeField, SparseIntMatrix, SparseMatrix,
};

/// Augmented chain complex of a simplicial complex.
#[derive(Clone, Debug)]
pub struct ChainComplexData {
    /// `basis[d + 1]` lists the `d`-faces in increasing mask order.
    basis: Vec<Vec<VertexSet>>,
    /// `boundary[d]` is `∂_d : C_d -> C_{d-1}` (rows are `(d-1)`-faces).
    boundary: Vec<SparseIntMatrix>,
}

impl ChainComplexData {
    pub fn new(k: &SimplicialComplex) -> Self {
        let top = (k.dim() + 2) as usize;
        let mut basis: Vec<Vec<VertexSet>> = vec![Vec::new(); top];
        for f in k.faces() {
            basis[f.len()].push(f);
        }
        let mut boundary = Vec::with_capacity(top - 1);
        for d in 0..top - 1 {
            let (lower, upper) = (&basis[d], &basis[d + 1]);
            let mut rows: Vec<Vec<(usize, Integer)>> = vec![Vec::new(); lower.len()];
            for (j, sigma) in upper.iter().enumerate() {
                for (i, v) in sigma.iter().enumerate() {
                    let row = lower.binary_search(&sigma.without(v)).expect("complex is closed under faces");
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    rows[row].push((j, Integer::from(sign)));
                }
            }
            boundary.push(SparseMatrix::from_rows(lower.len(), upper.len(), rows));
        }
        let cc = ChainComplexData { basis, boundary };
        debug_assert!(cc.check_square_zero(), "boundary of a boundary is not zero");
        cc
    }

    /// Highest degree with a non-zero chain group.
    pub fn dim(&self) -> i64 {
        self.basis.len() as i64 - 2
    }

    /// The `d`-faces, in increasing mask order (empty outside `-1..=dim`).
    pub fn basis(&self, d: i64) -> &[VertexSet] {
        if d < -1 || d > self.dim() {
            &[]
        } else {
            &self.basis[(d + 1) as usize]
        }
    }

    pub fn rank(&self, d: i64) -> usize {
        self.basis(d).len()
    }

    pub fn index_of(&self, d: i64, face: VertexSet) -> Option<usize> {
        self.basis(d).binary_search(&face).ok()
    }

    /// `∂_d : C_d -> C_{d-1}`; a zero matrix of the right shape outside the
    /// range where both groups are non-zero.
    pub fn boundary(&self, d: i64) -> SparseIntMatrix {
        if d >= 0 && d <= self.dim() {
            self.boundary[d as usize].clone()
        } else {
            SparseIntMatrix::zeros(self.rank(d - 1), self.rank(d))
        }
    }

    /// `δ^d : C^d -> C^{d+1}`, the transpose of `∂_{d+1}`.
    pub fn coboundary(&self, d: i64) -> SparseIntMatrix {
        if d >= -1 && d < self.dim() {
            self.boundary[(d + 1) as usize].transpose()
        } else {
            SparseIntMatrix::zeros(self.rank(d + 1), self.rank(d))
        }
    }

    pub fn check_square_zero(&self) -> bool {
        self.boundary
            .windows(2)
            .all(|w| w[0].mul(&Integers, &w[1]).is_zero())
    }
}

/// A reduced (co)homology group: `free_rank` copies of the coefficients plus
/// cyclic torsion summands (integers only).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologyGroup {
    pub degree: i64,
    pub free_rank: usize,
    /// Non-unit invariant factors in divisibility order.
    pub torsion: Vec<Integer>,
    pub coeffs: Coeffs,
}

impl HomologyGroup {
    pub fn zero(degree: i64, coeffs: Coeffs) -> Self {
        HomologyGroup {
            degree,
            free_rank: 0,
            torsion: Vec::new(),
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Number of cyclic summands.
    pub fn summands(&self) -> usize {
        self.free_rank + self.torsion.len()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts: Vec<alloc::string::String> = Vec::new();
        if self.free_rank > 0 {
            parts.push(if self.free_rank == 1 {
                alloc::format!("{}", self.coeffs)
            } else {
                alloc::format!("{}^{}", self.coeffs, self.free_rank)
            });
        }
        for t in &self.torsion {
            parts.push(alloc::format!("Z/{t}"));
        }
        f.write_str(&parts.join(" + "))
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Ranks and non-unit invariant factors of every boundary map.
struct BoundaryData {
    /// `rank[d]` is the rank of `∂_d`, for `d` in `0..=dim + 1`.
    rank: Vec<usize>,
    torsion: Vec<Vec<Integer>>,
}

impl BoundaryData {
    fn compute(k: &SimplicialComplex, cc: &ChainComplexData, coeffs: Coeffs) -> Result<Self, Error> {
        let field = match coeffs {
            Coeffs::Prime(p) => Some(PrimeField::new(p)?),
            _ => None,
        };
        let dim = cc.dim();
        let mut rank = vec![0usize; (dim + 2) as usize];
        let mut torsion = vec![Vec::new(); (dim + 2) as usize];
        // While both ends of ∂_d are full skeleta of the simplex on the ground
        // set, ∂_d is the simplex boundary: rank C(m-1, d), unit factors only.
        let m = k.ground().len();
        let full = (0..=m)
            .take_while(|&j| cc.rank(j as i64 - 1) as u64 == binomial(m, j))
            .count();
        for d in 0..=dim {
            let du = d as usize;
            if du + 1 < full {
                rank[du] = binomial(m - 1, du) as usize;
                continue;
            }
            let b = cc.boundary(d);
            match &field {
                Some(f) => {
                    let reduced = b.map_into(f, |v| f.reduce(v));
                    rank[du] = smith_normal_form(f, &reduced, false).rank();
                }
                None => {
                    let factors = smith_normal_form(&Integers, &b, false).invariant_factors;
                    rank[du] = factors.len();
                    if coeffs == Coeffs::Integers {
                        torsion[du] = factors.into_iter().filter(|x| !x.is_unit()).collect();
                    }
                }
            }
        }
        Ok(BoundaryData { rank, torsion })
    }

    fn group(&self, cc: &ChainComplexData, d: i64, coeffs: Coeffs, cohomology: bool) -> HomologyGroup {
        if d < -1 || d > cc.dim() {
            return HomologyGroup::zero(d, coeffs);
        }
        let at = |i: i64| if i >= 0 && (i as usize) < self.rank.len() { self.rank[i as usize] } else { 0 };
        let free_rank = cc.rank(d) - at(d) - at(d + 1);
        let torsion = if cohomology {
            if d >= 0 { self.torsion[d as usize].clone() } else { Vec::new() }
        } else if ((d + 1) as usize) < self.torsion.len() {
            self.torsion[(d + 1) as usize].clone()
        } else {
            Vec::new()
        };
        HomologyGroup {
            degree: d,
            free_rank,
            torsion,
            coeffs,
        }
    }
}

fn all_groups(k: &SimplicialComplex, coeffs: Coeffs, cohomology: bool) -> Result<Vec<HomologyGroup>, Error> {
    coeffs.validate()?;
    let degrees = -1..=k.dim();
    if k.is_cone().is_some() {
        return Ok(degrees.map(|d| HomologyGroup::zero(d, coeffs)).collect());
    }
    let cc = ChainComplexData::new(k);
    let data = BoundaryData::compute(k, &cc, coeffs)?;
    Ok(degrees.map(|d| data.group(&cc, d, coeffs, cohomology)).collect())
}

/// `H̃_d(K)` for every `d` in `-1..=dim K`.
pub fn reduced_homology_all(k: &SimplicialComplex, coeffs: Coeffs) -> Result<Vec<HomologyGroup>, Error> {
    all_groups(k, coeffs, false)
}

/// `H̃^d(K)` for every `d` in `-1..=dim K`.
pub fn reduced_cohomology_all(k: &SimplicialComplex, coeffs: Coeffs) -> Result<Vec<HomologyGroup>, Error> {
    all_groups(k, coeffs, true)
}

/// `H̃_d(K)`; zero outside `-1..=dim K`. The complex `{∅}` has
/// `H̃_{-1}` equal to the coefficients.
pub fn reduced_homology(k: &SimplicialComplex, degree: i64, coeffs: Coeffs) -> Result<HomologyGroup, Error> {
    pick(reduced_homology_all(k, coeffs)?, degree, coeffs)
}

pub fn reduced_cohomology(k: &SimplicialComplex, degree: i64, coeffs: Coeffs) -> Result<HomologyGroup, Error> {
    pick(reduced_cohomology_all(k, coeffs)?, degree, coeffs)
}

fn pick(groups: Vec<HomologyGroup>, degree: i64, coeffs: Coeffs) -> Result<HomologyGroup, Error> {
    Ok(groups
        .into_iter()
        .find(|g| g.degree == degree)
        .unwrap_or_else(|| HomologyGroup::zero(degree, coeffs)))
}

/// Cohomology of a complex in one degree over `R`, with generators read off
/// Smith normal form transforms.
///
/// With `B = δ^d` and `U_B B V_B = D_B` of rank `r`, the last columns of `V_B`
/// span the cocycles and `V_B^{-1}` gives coordinates on them. The image of
/// `δ^{d-1}` in those coordinates is put in Smith form again; its row
/// transform turns cocycle coordinates into coordinates on the cyclic
/// summands. Free summands come first, then torsion in divisibility order.
#[derive(Clone, Debug)]
pub struct CohomologyBasis<R: EuclideanRing> {
    ring: R,
    degree: i64,
    faces: Vec<VertexSet>,
    v_inv: SparseMatrix<R::Elem>,
    kernel_rank: usize,
    cocycle_offset: usize,
    u_x: SparseMatrix<R::Elem>,
    /// `(row of u_x, order)`; order zero marks a free summand.
    summands: Vec<(usize, R::Elem)>,
    generators: Vec<Vec<R::Elem>>,
}

impl<R: EuclideanRing> CohomologyBasis<R> {
    pub fn new(ring: &R, cc: &ChainComplexData, degree: i64) -> Self {
        let lift = |m: &SparseIntMatrix| m.map_into(ring, |v| ring.from_integer(v));
        let c_d = cc.rank(degree);
        let b = lift(&cc.coboundary(degree));
        let a = lift(&cc.coboundary(degree - 1));
        let sb = smith_normal_form(ring, &b, true);
        let r_b = sb.rank();
        let tb = sb.transforms.expect("transforms requested");
        let k = c_d - r_b;
        let keep: Vec<usize> = (r_b..c_d).collect();
        let x = tb.v_inv.mul(ring, &a).select_rows(&keep);
        let sx = smith_normal_form(ring, &x, true);
        let r_x = sx.rank();
        let tx = sx.transforms.expect("transforms requested");
        let mut summands: Vec<(usize, R::Elem)> = (r_x..k).map(|i| (i, ring.zero())).collect();
        for (i, e) in sx.invariant_factors.iter().enumerate() {
            if !ring.is_unit(e) {
                summands.push((i, e.clone()));
            }
        }
        // Generator i is V_B[:, r_b..] * U_X^{-1}[:, i].
        let u_x_inv_t = tx.u_inv.transpose();
        let generators = summands
            .iter()
            .map(|&(i, _)| {
                let g = u_x_inv_t.row(i);
                let mut z = vec![ring.zero(); c_d];
                for (f, zf) in z.iter_mut().enumerate() {
                    let row = tb.v.row(f);
                    let mut acc = ring.zero();
                    for (t, gt) in g {
                        if let Ok(pos) = row.binary_search_by_key(&(r_b + t), |e| e.0) {
                            acc = ring.add(&acc, &ring.mul(&row[pos].1, gt));
                        }
                    }
                    *zf = acc;
                }
                z
            })
            .collect();
        CohomologyBasis {
            ring: ring.clone(),
            degree,
            faces: cc.basis(degree).to_vec(),
            v_inv: tb.v_inv,
            kernel_rank: k,
            cocycle_offset: r_b,
            u_x: tx.u,
            summands,
            generators,
        }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// Cochain basis: the `d`-faces in increasing mask order.
    pub fn faces(&self) -> &[VertexSet] {
        &self.faces
    }

    /// Order of each summand; zero for free summands.
    pub fn orders(&self) -> impl Iterator<Item = &R::Elem> {
        self.summands.iter().map(|(_, o)| o)
    }

    pub fn free_rank(&self) -> usize {
        self.summands.iter().filter(|(_, o)| self.ring.is_zero(o)).count()
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Representative cocycles, one per summand, as dense cochains over
    /// [`faces`](Self::faces).
    pub fn generators(&self) -> &[Vec<R::Elem>] {
        &self.generators
    }

    /// Coordinates of the class of a cocycle; torsion coordinates are reduced
    /// to canonical residues.
    pub fn coordinates(&self, cochain: &[R::Elem]) -> Result<Vec<R::Elem>, Error> {
        let ring = &self.ring;
        if cochain.len() != self.faces.len() {
            return Err(Error::MalformedClass(alloc::format!(
                "cochain has {} entries, expected {}",
                cochain.len(),
                self.faces.len()
            )));
        }
        let w = self.v_inv.mul_vec(ring, cochain);
        if w[..self.cocycle_offset].iter().any(|x| !ring.is_zero(x)) {
            return Err(Error::MalformedClass("cochain is not a cocycle".into()));
        }
        debug_assert_eq!(w.len() - self.cocycle_offset, self.kernel_rank);
        let y = self.u_x.mul_vec(ring, &w[self.cocycle_offset..]);
        Ok(self
            .summands
            .iter()
            .map(|(i, order)| {
                if ring.is_zero(order) {
                    y[*i].clone()
                } else {
                    ring.rem_canonical(&y[*i], order)
                }
            })
            .collect())
    }

    /// Cochain for a class given by summand coordinates.
    pub fn cocycle(&self, class: &[R::Elem]) -> Result<Vec<R::Elem>, Error> {
        let ring = &self.ring;
        if class.len() != self.summands.len() {
            return Err(Error::MalformedClass(alloc::format!(
                "class has {} coordinates, expected {}",
                class.len(),
                self.summands.len()
            )));
        }
        let mut z = vec![ring.zero(); self.faces.len()];
        for (c, g) in class.iter().zip(&self.generators) {
            if ring.is_zero(c) {
                continue;
            }
            for (zf, gf) in z.iter_mut().zip(g) {
                *zf = ring.add(zf, &ring.mul(c, gf));
            }
        }
        Ok(z)
    }
}

/// The map `H̃^d(M) -> H̃^d(L)` in one degree, as a matrix whose columns are
/// images of the generators of `H̃^d(M)` in coordinates of `H̃^d(L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeMap {
    pub degree: i64,
    pub domain: HomologyGroup,
    pub codomain: HomologyGroup,
    /// `codomain.summands()` rows by `domain.summands()` columns.
    pub matrix: Vec<Vec<Integer>>,
    pub is_zero: bool,
}

/// Map induced on reduced cohomology by an inclusion `L ⊆ M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMap {
    pub coeffs: Coeffs,
    pub degrees: Vec<DegreeMap>,
}

impl InducedMap {
    pub fn is_zero(&self) -> bool {
        self.degrees.iter().all(|d| d.is_zero)
    }

    /// Degrees where the map is non-zero.
    pub fn nonzero_degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.degrees.iter().filter(|d| !d.is_zero).map(|d| d.degree)
    }

    pub fn degree(&self, d: i64) -> Option<&DegreeMap> {
        self.degrees.iter().find(|m| m.degree == d)
    }

    /// `self ∘ first`: for `L ⊆ M ⊆ N`, `first` is induced by `M ⊆ N` and
    /// `self` by `L ⊆ M`. Torsion entries are reduced in the codomain.
    pub fn compose(&self, first: &InducedMap) -> Result<InducedMap, Error> {
        if self.coeffs != first.coeffs {
            return Err(Error::DimensionMismatch);
        }
        let lo = self.degrees.iter().chain(&first.degrees).map(|m| m.degree).min().unwrap_or(-1);
        let hi = self.degrees.iter().chain(&first.degrees).map(|m| m.degree).max().unwrap_or(-1);
        let mut degrees = Vec::new();
        for d in lo..=hi {
            let (outer, inner) = match (self.degree(d), first.degree(d)) {
                (Some(o), Some(i)) => (o, i),
                (o, i) => {
                    // Outside one of the ranges the middle group vanishes.
                    let zero = HomologyGroup::zero(d, self.coeffs);
                    let domain = i.map_or(zero.clone(), |m| m.domain.clone());
                    let codomain = o.map_or(zero, |m| m.codomain.clone());
                    degrees.push(DegreeMap {
                        degree: d,
                        matrix: vec![vec![Integer::ZERO; domain.summands()]; codomain.summands()],
                        domain,
                        codomain,
                        is_zero: true,
                    });
                    continue;
                }
            };
            if inner.codomain != outer.domain {
                return Err(Error::DimensionMismatch);
            }
            let rows = outer.codomain.summands();
            let cols = inner.domain.summands();
            let mut matrix = vec![vec![Integer::ZERO; cols]; rows];
            for (i, row) in matrix.iter_mut().enumerate() {
                for (j, e) in row.iter_mut().enumerate() {
                    let mut acc = Integer::ZERO;
                    for t in 0..outer.domain.summands() {
                        acc = &acc + &(&outer.matrix[i][t] * &inner.matrix[t][j]);
                    }
                    *e = reduce_entry(&outer.codomain, i, acc);
                }
            }
            let is_zero = matrix.iter().flatten().all(Integer::is_zero);
            degrees.push(DegreeMap {
                degree: outer.degree,
                domain: inner.domain.clone(),
                codomain: outer.codomain.clone(),
                matrix,
                is_zero,
            });
        }
        Ok(InducedMap {
            coeffs: self.coeffs,
            degrees,
        })
    }
}

/// Canonical residue of an entry in row `i` of a map into `g`.
fn reduce_entry(g: &HomologyGroup, i: usize, x: Integer) -> Integer {
    match g.coeffs {
        Coeffs::Prime(p) => x.mod_floor(&Integer::from(p as i64)),
        _ if i >= g.free_rank => x.mod_floor(&g.torsion[i - g.free_rank]),
        _ => x,
    }
}

fn group_of<R: EuclideanRing>(basis: &CohomologyBasis<R>, coeffs: Coeffs, to_int: &impl Fn(&R::Elem) -> Integer) -> HomologyGroup {
    HomologyGroup {
        degree: basis.degree(),
        free_rank: basis.free_rank(),
        torsion: basis.orders().filter(|o| !basis.ring.is_zero(o)).map(to_int).collect(),
        coeffs,
    }
}

fn degree_map<R: EuclideanRing>(
    ring: &R,
    l: &ChainComplexData,
    m: &ChainComplexData,
    d: i64,
    coeffs: Coeffs,
    to_int: &impl Fn(&R::Elem) -> Integer,
) -> Result<DegreeMap, Error> {
    let bm = CohomologyBasis::new(ring, m, d);
    let bl = CohomologyBasis::new(ring, l, d);
    let positions: Vec<usize> = bl
        .faces()
        .iter()
        .map(|f| m.index_of(d, *f).ok_or(Error::NotSubcomplex))
        .collect::<Result<_, _>>()?;
    let mut matrix = vec![vec![Integer::ZERO; bm.len()]; bl.len()];
    for (j, g) in bm.generators().iter().enumerate() {
        let restricted: Vec<R::Elem> = positions.iter().map(|&p| g[p].clone()).collect();
        let coords = bl.coordinates(&restricted)?;
        for (i, c) in coords.iter().enumerate() {
            matrix[i][j] = to_int(c);
        }
    }
    let is_zero = matrix.iter().flatten().all(Integer::is_zero);
    Ok(DegreeMap {
        degree: d,
        domain: group_of(&bm, coeffs, to_int),
        codomain: group_of(&bl, coeffs, to_int),
        matrix,
        is_zero,
    })
}

/// Restriction of cochains along `L ⊆ M`, on reduced cohomology in every
/// degree from `-1` to `max(dim L, dim M)`.
pub fn induced_map_on_cohomology(
    l: &SimplicialComplex,
    m: &SimplicialComplex,
    coeffs: Coeffs,
) -> Result<InducedMap, Error> {
    coeffs.validate()?;
    if l.n() != m.n() {
        return Err(Error::AmbientMismatch(l.n(), m.n()));
    }
    if !l.facets().iter().all(|f| m.is_face(*f)) {
        return Err(Error::NotSubcomplex);
    }
    let top = l.dim().max(m.dim());
    let lc = ChainComplexData::new(l);
    let mc = ChainComplexData::new(m);
    let gl = reduced_cohomology_all(l, coeffs)?;
    let gm = reduced_cohomology_all(m, coeffs)?;
    let group = |gs: &[HomologyGroup], d: i64| pick(gs.to_vec(), d, coeffs).expect("infallible");
    let mut degrees = Vec::new();
    for d in -1..=top {
        let (dom, cod) = (group(&gm, d), group(&gl, d));
        if dom.is_zero() || cod.is_zero() {
            degrees.push(DegreeMap {
                degree: d,
                matrix: vec![vec![Integer::ZERO; dom.summands()]; cod.summands()],
                domain: dom,
                codomain: cod,
                is_zero: true,
            });
            continue;
        }
        let map = match coeffs {
            Coeffs::Prime(p) => {
                let f = PrimeField::new(p)?;
                degree_map(&f, &lc, &mc, d, coeffs, &|x: &u64| Integer::from(*x as i64))?
            }
            Coeffs::Integers => degree_map(&Integers, &lc, &mc, d, coeffs, &|x: &Integer| x.clone())?,
            Coeffs::Rationals => {
                let z = degree_map(&Integers, &lc, &mc, d, Coeffs::Integers, &|x: &Integer| x.clone())?;
                free_block(z, coeffs)
            }
        };
        debug_assert_eq!(map.domain, dom);
        debug_assert_eq!(map.codomain, cod);
        degrees.push(map);
    }
    Ok(InducedMap { coeffs, degrees })
}

/// Rational map from an integral one: drop torsion rows and columns.
fn free_block(z: DegreeMap, coeffs: Coeffs) -> DegreeMap {
    let (fr, fc) = (z.codomain.free_rank, z.domain.free_rank);
    let matrix: Vec<Vec<Integer>> = z.matrix.iter().take(fr).map(|r| r[..fc].to_vec()).collect();
    let is_zero = matrix.iter().flatten().all(Integer::is_zero);
    let strip = |g: HomologyGroup| HomologyGroup {
        torsion: Vec::new(),
        coeffs,
        ..g
    };
    DegreeMap {
        degree: z.degree,
        domain: strip(z.domain),
        codomain: strip(z.codomain),
        matrix,
        is_zero,
    }
}

/// Connectivity bound; cones are reported as infinitely connected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Connectivity {
    Finite(i64),
    Infinite,
}

impl Connectivity {
    pub fn finite(self) -> Option<i64> {
        match self {
            Connectivity::Finite(c) => Some(c),
            Connectivity::Infinite => None,
        }
    }
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Connectivity::Finite(c) => write!(f, "{c}"),
            Connectivity::Infinite => f.write_str("inf"),
        }
    }
}

/// Whether a connectivity value is known as a homotopy statement or only
/// homologically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CertificateBasis {
    HomologyOnly,
    Topological,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ConnectivityCertificate {
    /// Largest `c` with `H̃_i(K; Z) = 0` for all `i <= c`.
    pub connectivity: Connectivity,
    pub basis: CertificateBasis,
    /// `neighbourliness - 2`: a `k`-neighbourly complex is `(k - 2)`-connected.
    pub neighbourly_bound: i64,
}

/// Homological connectivity of `K`, flagged topological when `K` has a full
/// 2-skeleton (then `K` is simply connected and Hurewicz applies) or is a cone.
pub fn connectivity_certificate(k: &SimplicialComplex) -> ConnectivityCertificate {
    let groups = reduced_homology_all(k, Coeffs::Integers).expect("integer coefficients are valid");
    connectivity_from_groups(k, &groups)
}

/// As [`connectivity_certificate`], reusing already computed integral
/// homology (degrees `-1..=dim K`).
pub fn connectivity_from_groups(k: &SimplicialComplex, homology: &[HomologyGroup]) -> ConnectivityCertificate {
    let neighbourliness = k.neighbourliness();
    let neighbourly_bound = neighbourliness as i64 - 2;
    if k.is_cone().is_some() {
        return ConnectivityCertificate {
            connectivity: Connectivity::Infinite,
            basis: CertificateBasis::Topological,
            neighbourly_bound,
        };
    }
    let connectivity = match homology.iter().find(|g| !g.is_zero()) {
        Some(g) => Connectivity::Finite(g.degree - 1),
        None => Connectivity::Infinite,
    };
    let basis = if neighbourliness >= 3 {
        CertificateBasis::Topological
    } else {
        CertificateBasis::HomologyOnly
    };
    ConnectivityCertificate {
        connectivity,
        basis,
        neighbourly_bound,
    }
}

/// As [`connectivity_certificate`], from integral reduced cohomology in
/// degrees `-1..=dim K`: `H̃_d` vanishes exactly when `H̃^d` has no free part
/// and `H̃^{d+1}` no torsion.
pub fn connectivity_from_cohomology(k: &SimplicialComplex, cohomology: &[HomologyGroup]) -> ConnectivityCertificate {
    let homology: Vec<HomologyGroup> = cohomology
        .iter()
        .map(|g| HomologyGroup {
            degree: g.degree,
            free_rank: g.free_rank,
            torsion: cohomology
                .iter()
                .find(|h| h.degree == g.degree + 1)
                .map(|h| h.torsion.clone())
                .unwrap_or_default(),
            coeffs: g.coeffs,
        })
        .collect();
    connectivity_from_groups(k, &homology)
}
