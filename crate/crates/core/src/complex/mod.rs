//! Simplicial complexes on `{1, ..., n}` stored by their maximal faces.

mod generators;
mod lattice;
mod vertex_set;

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

pub use generators::{
    boundary_simplex, boundary_simplex_on, flag_from_graph, full_skeleton, random_complex, simplex, simplex_on,
    single_missing_face,
};
pub use lattice::{SubsetTable, EXHAUSTIVE_LIMIT};
pub use vertex_set::{VertexSet, Vertices, MAX_VERTICES};

use crate::error::Error;

/// A simplicial complex with vertices drawn from a ground set inside
/// `{1, ..., n}`.
///
/// Faces are the subsets of maximal faces; the empty set is always a face.
/// Vertices of the ground set that are not faces ("ghost" vertices) are
/// allowed, which is what restrictions to arbitrary vertex sets produce.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    ground: VertexSet,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds a complex on `[n]` from 1-indexed facet lists. Dominated faces
    /// are dropped; an empty list gives the complex `{∅}`.
    pub fn new(n: usize, facets: &[Vec<usize>]) -> Result<Self, Error> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::GroundSetSize(n));
        }
        let sets = facets
            .iter()
            .map(|f| VertexSet::from_vertices(f.iter().copied(), n))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_faces(n, VertexSet::full(n), sets))
    }

    /// Builds a complex from any generating family of faces inside `ground`.
    pub fn from_faces<I: IntoIterator<Item = VertexSet>>(n: usize, ground: VertexSet, faces: I) -> Self {
        let mut all: Vec<VertexSet> = faces.into_iter().collect();
        debug_assert!(all.iter().all(|f| f.is_subset(ground)));
        all.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        all.dedup();
        let mut kept: Vec<VertexSet> = Vec::new();
        for f in all {
            if !kept.iter().any(|k| f.is_subset(*k)) {
                kept.push(f);
            }
        }
        if kept.is_empty() {
            kept.push(VertexSet::EMPTY);
        }
        kept.sort();
        SimplicialComplex { n, ground, facets: kept }
    }

    /// Size of the ambient label set `{1, ..., n}`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    /// Maximal faces in increasing mask order.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_face(&self, s: VertexSet) -> bool {
        s.is_subset(self.ground) && self.facets.iter().any(|f| s.is_subset(*f))
    }

    /// Dimension; `-1` for `{∅}`.
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(|f| f.len() as i64).max().unwrap_or(0) - 1
    }

    /// Every face, ordered by size and then by mask.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = Vec::new();
        for f in &self.facets {
            out.extend(f.subsets());
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out.dedup();
        out
    }

    /// `f[k]` counts faces of dimension `k - 1` (so `f[0] = 1` for the empty face).
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0usize; (self.dim() + 2) as usize];
        for s in self.faces() {
            f[s.len()] += 1;
        }
        f
    }

    /// The full simplex on a non-empty ground set.
    pub fn is_simplex(&self) -> bool {
        !self.ground.is_empty() && self.facets.len() == 1 && self.facets[0] == self.ground
    }

    /// Smallest vertex lying in every maximal face, if any.
    pub fn is_cone(&self) -> Option<usize> {
        let common = self
            .facets
            .iter()
            .fold(self.ground, |acc, f| acc.intersection(*f));
        common.min_vertex()
    }

    /// Full subcomplex on `vertices`; labels are kept.
    pub fn restriction(&self, vertices: VertexSet) -> SimplicialComplex {
        let ground = self.ground.intersection(vertices);
        Self::from_faces(self.n, ground, self.facets.iter().map(|f| f.intersection(ground)))
    }

    pub fn vertex_delete(&self, v: usize) -> SimplicialComplex {
        self.restriction(self.ground.without(v))
    }

    /// Join with a complex on a disjoint ground set of the same ambient size.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex, Error> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        if !self.ground.is_disjoint(other.ground) {
            return Err(Error::OverlappingGroundSets);
        }
        let faces = self
            .facets
            .iter()
            .flat_map(|a| other.facets.iter().map(move |b| a.union(*b)));
        Ok(Self::from_faces(self.n, self.ground.union(other.ground), faces))
    }

    /// Join after shifting `other`'s labels past `self.n()`; the result lives
    /// on `[self.n() + other.n()]`.
    pub fn join_shifted(&self, other: &SimplicialComplex) -> Result<SimplicialComplex, Error> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::GroundSetSize(n));
        }
        let map: Vec<usize> = (0..=other.n).map(|v| v + self.n).collect();
        let lifted_self = SimplicialComplex {
            n,
            ground: self.ground,
            facets: self.facets.clone(),
        };
        let lifted_other = Self::from_faces(n, other.ground.map(&map), other.facets.iter().map(|f| f.map(&map)));
        lifted_self.join(&lifted_other)
    }

    /// Applies a vertex relabeling (`perm[v]` is the new label of `v`; index 0 unused).
    pub fn relabel(&self, perm: &[usize]) -> Result<SimplicialComplex, Error> {
        if perm.len() != self.n + 1 {
            return Err(Error::InvalidParameter("permutation length must be n + 1".to_string()));
        }
        let mut seen = VertexSet::EMPTY;
        for &p in &perm[1..] {
            if p == 0 || p > self.n || seen.contains(p) {
                return Err(Error::InvalidParameter("not a permutation of 1..=n".to_string()));
            }
            seen = seen.with(p);
        }
        Ok(Self::from_faces(
            self.n,
            self.ground.map(perm),
            self.facets.iter().map(|f| f.map(perm)),
        ))
    }

    /// Inclusion-minimal subsets of the ground set that are not faces, in
    /// increasing mask order.
    pub fn minimal_non_faces(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        for tau in self.faces() {
            let above = tau.max_vertex().unwrap_or(0);
            for v in self.ground.iter().filter(|&v| v > above) {
                let sigma = tau.with(v);
                if self.is_face(sigma) {
                    continue;
                }
                if tau.iter().all(|w| self.is_face(sigma.without(w))) {
                    out.push(sigma);
                }
            }
        }
        out.sort();
        out
    }

    /// Largest `k` such that every subset of the ground set with at most `k`
    /// elements is a face.
    pub fn neighbourliness(&self) -> usize {
        self.minimal_non_faces()
            .iter()
            .map(|s| s.len() - 1)
            .min()
            .unwrap_or(self.ground.len())
    }

    /// Neighbourliness at least `floor(|ground| / 3)`.
    pub fn is_n3_neighbourly(&self) -> bool {
        self.neighbourliness() >= self.ground.len() / 3
    }

    /// Checks the representation invariants.
    pub fn check_invariants(&self) -> bool {
        let antichain = self
            .facets
            .iter()
            .enumerate()
            .all(|(i, a)| self.facets.iter().enumerate().all(|(j, b)| i == j || !a.is_subset(*b)));
        antichain
            && !self.facets.is_empty()
            && self.facets.windows(2).all(|w| w[0] < w[1])
            && self.facets.iter().all(|f| f.is_subset(self.ground))
            && self.ground.is_subset(VertexSet::full(self.n))
    }
}

/// Ordered partition `(I_1, ..., I_m)` of a vertex set: non-empty, mutually
/// disjoint blocks covering it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedPartition {
    blocks: Vec<VertexSet>,
}

impl OrderedPartition {
    pub fn new(blocks: Vec<VertexSet>, of: VertexSet) -> Result<Self, Error> {
        let mut union = VertexSet::EMPTY;
        for b in &blocks {
            if b.is_empty() || !union.is_disjoint(*b) {
                return Err(Error::InvalidParameter("blocks must be non-empty and disjoint".to_string()));
            }
            union = union.union(*b);
        }
        if union != of {
            return Err(Error::InvalidParameter("blocks do not cover the set".to_string()));
        }
        Ok(OrderedPartition { blocks })
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied(), 63).unwrap()
    }

    fn cycle4() -> SimplicialComplex {
        SimplicialComplex::new(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]).unwrap()
    }

    #[test]
    fn construction() {
        let tri = SimplicialComplex::new(3, &[vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
        assert_eq!(tri.facets().len(), 3);
        let s = SimplicialComplex::new(3, &[vec![1, 2, 3], vec![1, 2]]).unwrap();
        assert_eq!(s.facets(), &[vs(&[1, 2, 3])]);
        let order = SimplicialComplex::new(3, &[vec![1, 2], vec![1, 2, 3]]).unwrap();
        assert_eq!(s, order);
        assert!(SimplicialComplex::new(3, &[vec![4]]).is_err());
        assert!(SimplicialComplex::new(64, &[]).is_err());
        assert!(SimplicialComplex::new(0, &[]).is_err());
        let empty = SimplicialComplex::new(3, &[]).unwrap();
        assert_eq!(empty.facets(), &[VertexSet::EMPTY]);
        assert_eq!(empty.dim(), -1);
        assert!(empty.is_face(VertexSet::EMPTY));
    }

    #[test]
    fn cycle_is_a_join() {
        let c = cycle4();
        let a = boundary_simplex_on(4, vs(&[1, 3])).unwrap();
        let b = boundary_simplex_on(4, vs(&[2, 4])).unwrap();
        assert_eq!(a.join(&b).unwrap(), c);
        assert_eq!(c.f_vector(), vec![1, 4, 4]);
    }

    #[test]
    fn restriction_examples() {
        let c = cycle4();
        let r = c.restriction(vs(&[1, 3]));
        assert_eq!(r.facets(), &[vs(&[1]), vs(&[3])]);
        assert_eq!(r.ground(), vs(&[1, 3]));
        assert_eq!(c.restriction(VertexSet::full(4)), c);
        let d = simplex(3).unwrap();
        assert_eq!(d.restriction(vs(&[1, 2])).facets(), &[vs(&[1, 2])]);
    }

    #[test]
    fn join_examples() {
        let p1 = SimplicialComplex::from_faces(2, vs(&[1]), [vs(&[1])]);
        let p2 = SimplicialComplex::from_faces(2, vs(&[2]), [vs(&[2])]);
        assert_eq!(p1.join(&p2).unwrap(), simplex(2).unwrap());
        let unit = SimplicialComplex::from_faces(4, VertexSet::EMPTY, []);
        assert_eq!(cycle4().join(&unit).unwrap(), cycle4());
        assert_eq!(cycle4().join(&cycle4()), Err(Error::OverlappingGroundSets));
    }

    #[test]
    fn deletion_examples() {
        let d = cycle4().vertex_delete(1);
        assert_eq!(d.facets(), &[vs(&[2, 3]), vs(&[3, 4])]);
        assert_eq!(simplex(3).unwrap().vertex_delete(3).facets(), &[vs(&[1, 2])]);
        let two = SimplicialComplex::new(2, &[vec![1], vec![2]]).unwrap();
        assert_eq!(two.vertex_delete(2).facets(), &[vs(&[1])]);
    }

    #[test]
    fn neighbourliness_examples() {
        assert_eq!(boundary_simplex(3).unwrap().neighbourliness(), 2);
        assert_eq!(cycle4().neighbourliness(), 1);
        assert_eq!(simplex(5).unwrap().neighbourliness(), 5);
        assert!(cycle4().is_n3_neighbourly());
        let ghost = SimplicialComplex::new(3, &[vec![1, 2]]).unwrap();
        assert_eq!(ghost.neighbourliness(), 0);
        assert!(!ghost.is_n3_neighbourly());
        assert!(full_skeleton(6, 1).unwrap().is_n3_neighbourly());
    }

    #[test]
    fn minimal_non_face_examples() {
        assert_eq!(cycle4().minimal_non_faces(), vec![vs(&[1, 3]), vs(&[2, 4])]);
        assert!(simplex(4).unwrap().minimal_non_faces().is_empty());
        assert_eq!(boundary_simplex(3).unwrap().minimal_non_faces(), vec![vs(&[1, 2, 3])]);
    }

    #[test]
    fn cone_examples() {
        assert_eq!(simplex(3).unwrap().is_cone(), Some(1));
        assert_eq!(cycle4().is_cone(), None);
        let star = SimplicialComplex::new(3, &[vec![1, 2], vec![1, 3]]).unwrap();
        assert_eq!(star.is_cone(), Some(1));
        assert_eq!(SimplicialComplex::new(2, &[]).unwrap().is_cone(), None);
    }

    #[test]
    fn partitions_validate() {
        assert!(OrderedPartition::new(vec![vs(&[1, 3]), vs(&[2])], vs(&[1, 2, 3])).is_ok());
        assert!(OrderedPartition::new(vec![vs(&[1, 3]), vs(&[3])], vs(&[1, 3])).is_err());
        assert!(OrderedPartition::new(vec![vs(&[1]), VertexSet::EMPTY], vs(&[1])).is_err());
        assert!(OrderedPartition::new(vec![vs(&[1])], vs(&[1, 2])).is_err());
    }
}
