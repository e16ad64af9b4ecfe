use alloc::vec;
use alloc::vec::Vec;

use super::{SimplicialComplex, VertexSet};
use crate::error::Error;

/// Largest ambient size for which per-subset tables are built.
pub const EXHAUSTIVE_LIMIT: usize = 20;

/// Per-subset data for every `I ⊆ [n]`: face membership, the apex vertices
/// of the full subcomplex `K_I`, and the size of its largest face.
///
/// Built with subset-sum style transforms in `O(n 2^n)`.
#[derive(Clone, Debug)]
pub struct SubsetTable {
    n: usize,
    face: Vec<bool>,
    apex: Vec<u64>,
    top: Vec<u8>,
}

impl SubsetTable {
    pub fn new(k: &SimplicialComplex) -> Result<Self, Error> {
        let n = k.n();
        if n > EXHAUSTIVE_LIMIT {
            return Err(Error::TooManyVertices(n, EXHAUSTIVE_LIMIT));
        }
        let size = 1usize << n;
        let mut face = vec![false; size];
        for f in k.facets() {
            face[(f.bits() >> 1) as usize] = true;
        }
        for b in 0..n {
            let bit = 1usize << b;
            for idx in 0..size {
                if idx & bit == 0 && face[idx | bit] {
                    face[idx] = true;
                }
            }
        }
        let mut apex = vec![u64::MAX; size];
        let mut top = vec![0u8; size];
        for idx in 0..size {
            if face[idx] {
                let mut ext = 0u64;
                for b in 0..n {
                    if face[idx | (1 << b)] {
                        ext |= 1 << (b + 1);
                    }
                }
                apex[idx] = ext;
                top[idx] = idx.count_ones() as u8;
            }
        }
        for b in 0..n {
            let bit = 1usize << b;
            for idx in 0..size {
                if idx & bit != 0 {
                    apex[idx] &= apex[idx ^ bit];
                    top[idx] = top[idx].max(top[idx ^ bit]);
                }
            }
        }
        Ok(SubsetTable { n, face, apex, top })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn idx(s: VertexSet) -> usize {
        (s.bits() >> 1) as usize
    }

    pub fn is_face(&self, s: VertexSet) -> bool {
        self.face[Self::idx(s)]
    }

    /// Vertices `v ∈ I` such that `K_I` is a cone with apex `v`.
    pub fn apexes(&self, i: VertexSet) -> VertexSet {
        VertexSet::from_bits(self.apex[Self::idx(i)] & i.bits())
    }

    pub fn is_cone(&self, i: VertexSet) -> bool {
        !self.apexes(i).is_empty()
    }

    /// Dimension of `K_I`.
    pub fn dim(&self, i: VertexSet) -> i64 {
        self.top[Self::idx(i)] as i64 - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{boundary_simplex, random_complex};

    #[test]
    fn agrees_with_restrictions() {
        for seed in 0..20 {
            let k = random_complex(6, 1, 0.5, seed).unwrap();
            let t = SubsetTable::new(&k).unwrap();
            for i in VertexSet::full(6).subsets() {
                let r = k.restriction(i);
                assert_eq!(t.is_face(i), k.is_face(i));
                assert_eq!(t.dim(i), r.dim());
                assert_eq!(t.is_cone(i), r.is_cone().is_some(), "seed {seed} I {i}");
                assert_eq!(t.apexes(i).min_vertex(), r.is_cone());
            }
        }
        let b = boundary_simplex(4).unwrap();
        let t = SubsetTable::new(&b).unwrap();
        assert!(!t.is_cone(VertexSet::full(4)));
        assert!(t.is_cone(VertexSet::full(3)));
    }
}
