//! Standard families of complexes used by tests and the CLI.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{SimplicialComplex, VertexSet, EXHAUSTIVE_LIMIT, MAX_VERTICES};
use crate::error::Error;

fn check_n(n: usize) -> Result<(), Error> {
    if n == 0 || n > MAX_VERTICES {
        Err(Error::GroundSetSize(n))
    } else {
        Ok(())
    }
}

fn check_ground(n: usize, ground: VertexSet) -> Result<(), Error> {
    check_n(n)?;
    if !ground.is_subset(VertexSet::full(n)) {
        return Err(Error::VertexOutOfRange {
            vertex: ground.max_vertex().unwrap_or(0),
            n,
        });
    }
    Ok(())
}

/// The full simplex on `[n]`.
pub fn simplex(n: usize) -> Result<SimplicialComplex, Error> {
    check_n(n)?;
    simplex_on(n, VertexSet::full(n))
}

/// The full simplex on `ground ⊆ [n]`.
pub fn simplex_on(n: usize, ground: VertexSet) -> Result<SimplicialComplex, Error> {
    check_ground(n, ground)?;
    Ok(SimplicialComplex::from_faces(n, ground, [ground]))
}

/// `∂Δ^{n-1}`: every proper subset of `[n]`.
pub fn boundary_simplex(n: usize) -> Result<SimplicialComplex, Error> {
    check_n(n)?;
    boundary_simplex_on(n, VertexSet::full(n))
}

/// Boundary of the simplex on `ground ⊆ [n]`.
pub fn boundary_simplex_on(n: usize, ground: VertexSet) -> Result<SimplicialComplex, Error> {
    check_ground(n, ground)?;
    Ok(SimplicialComplex::from_faces(
        n,
        ground,
        ground.iter().map(|v| ground.without(v)),
    ))
}

/// The `k`-skeleton of the simplex on `[n]`: all subsets with at most `k + 1` elements.
pub fn full_skeleton(n: usize, k: usize) -> Result<SimplicialComplex, Error> {
    check_n(n)?;
    if k >= n {
        return Err(Error::InvalidParameter("skeleton dimension must be below n".to_string()));
    }
    let mut facets = Vec::new();
    k_subsets(VertexSet::full(n), k + 1, &mut facets);
    Ok(SimplicialComplex::from_faces(n, VertexSet::full(n), facets))
}

fn k_subsets(of: VertexSet, k: usize, out: &mut Vec<VertexSet>) {
    fn go(rest: &[usize], k: usize, acc: VertexSet, out: &mut Vec<VertexSet>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for (i, &v) in rest.iter().enumerate() {
            if rest.len() - i < k {
                break;
            }
            go(&rest[i + 1..], k - 1, acc.with(v), out);
        }
    }
    go(&of.to_vec(), k, VertexSet::EMPTY, out);
}

/// Clique complex of a graph on `[n]`. Every vertex is a face.
pub fn flag_from_graph(n: usize, edges: &[(usize, usize)]) -> Result<SimplicialComplex, Error> {
    check_n(n)?;
    let mut adj = vec![0u64; n + 1];
    for &(a, b) in edges {
        for v in [a, b] {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        if a == b {
            return Err(Error::InvalidParameter("graph has a loop".to_string()));
        }
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let mut cliques = Vec::new();
    bron_kerbosch(&adj, 0, VertexSet::full(n).bits(), 0, &mut cliques);
    Ok(SimplicialComplex::from_faces(n, VertexSet::full(n), cliques))
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<VertexSet>) {
    if p == 0 {
        if x == 0 {
            out.push(VertexSet::from_bits(r));
        }
        return;
    }
    let pivot = (p | x).trailing_zeros() as usize;
    let mut cand = p & !adj[pivot];
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        bron_kerbosch(adj, r | (1 << v), p & adj[v], x & adj[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// Random complex on `[n]` containing every subset of size at most `k`.
///
/// Larger faces are considered by increasing size and mask; a candidate whose
/// boundary is already present is added with probability `density`.
pub fn random_complex(n: usize, k: usize, density: f64, seed: u64) -> Result<SimplicialComplex, Error> {
    check_n(n)?;
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::TooManyVertices(n, EXHAUSTIVE_LIMIT));
    }
    if k > n {
        return Err(Error::InvalidParameter("neighbourliness floor exceeds n".to_string()));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::InvalidParameter("density must lie in [0, 1]".to_string()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let size = 1usize << n;
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for idx in 0..size {
        by_size[idx.count_ones() as usize].push(idx);
    }
    let mut face = vec![false; size];
    face[0] = true;
    for (s, masks) in by_size.iter().enumerate().skip(1) {
        for &idx in masks {
            let boundary = (0..n).filter(|b| idx & (1 << b) != 0).all(|b| face[idx ^ (1 << b)]);
            face[idx] = boundary && (s <= k || rng.gen_bool(density));
        }
    }
    let facets = (0..size)
        .filter(|&idx| face[idx] && (0..n).all(|b| idx & (1 << b) != 0 || !face[idx | (1 << b)]))
        .map(|idx| VertexSet::from_bits((idx as u64) << 1));
    Ok(SimplicialComplex::from_faces(n, VertexSet::full(n), facets))
}

/// The complex on `[n]` whose only minimal non-face is `face`.
pub fn single_missing_face(n: usize, face: VertexSet) -> Result<SimplicialComplex, Error> {
    check_ground(n, face)?;
    if face.is_empty() {
        return Err(Error::InvalidParameter("the missing face must be non-empty".to_string()));
    }
    let full = VertexSet::full(n);
    Ok(SimplicialComplex::from_faces(n, full, face.iter().map(|v| full.without(v))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied(), 63).unwrap()
    }

    #[test]
    fn small_families() {
        let b = boundary_simplex(3).unwrap();
        assert_eq!(b.facets(), &[vs(&[1, 2]), vs(&[1, 3]), vs(&[2, 3])]);
        let g = full_skeleton(4, 1).unwrap();
        assert_eq!(g.facets().len(), 6);
        assert_eq!(g.dim(), 1);
        assert_eq!(boundary_simplex(1).unwrap().facets(), &[VertexSet::EMPTY]);
        assert!(full_skeleton(4, 4).is_err());
        assert!(simplex(0).is_err());
        assert!(simplex(64).is_err());
    }

    #[test]
    fn flag_complexes() {
        let c4 = flag_from_graph(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert_eq!(c4.minimal_non_faces(), vec![vs(&[1, 3]), vs(&[2, 4])]);
        let k4 = flag_from_graph(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(k4, simplex(4).unwrap());
        let isolated = flag_from_graph(3, &[(1, 2)]).unwrap();
        assert_eq!(isolated.facets(), &[vs(&[1, 2]), vs(&[3])]);
        assert!(flag_from_graph(3, &[(1, 1)]).is_err());
        assert!(flag_from_graph(3, &[(1, 4)]).is_err());
    }

    #[test]
    fn random_is_deterministic_and_neighbourly() {
        let a = random_complex(6, 2, 0.5, 7).unwrap();
        let b = random_complex(6, 2, 0.5, 7).unwrap();
        assert_eq!(a, b);
        for seed in 0..30 {
            let k = random_complex(7, 2, 0.4, seed).unwrap();
            assert!(k.neighbourliness() >= 2);
            assert!(k.check_invariants());
        }
        assert_eq!(random_complex(5, 0, 1.0, 1).unwrap(), simplex(5).unwrap());
        assert!(random_complex(5, 6, 0.5, 1).is_err());
        assert!(random_complex(5, 2, 1.5, 1).is_err());
        assert!(random_complex(5, 2, f64::NAN, 1).is_err());
    }

    #[test]
    fn single_non_face() {
        let k = single_missing_face(6, vs(&[1, 2, 3])).unwrap();
        assert_eq!(k.minimal_non_faces(), vec![vs(&[1, 2, 3])]);
        let ghost = single_missing_face(3, vs(&[2])).unwrap();
        assert_eq!(ghost.facets(), &[vs(&[1, 3])]);
        assert!(single_missing_face(3, VertexSet::EMPTY).is_err());
    }
}
