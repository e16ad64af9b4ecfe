use alloc::vec;
use alloc::vec::Vec;

use super::integer::Integer;
use super::ring::{EuclideanRing, Integers};
use crate::error::Error;

/// Row-compressed sparse matrix. Rows hold `(column, value)` pairs sorted by
/// column; zeros are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, E)>>,
}

pub type SparseIntMatrix = SparseMatrix<Integer>;

impl<E: Clone + PartialEq> SparseMatrix<E> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    /// Builds a matrix from `(row, col, value)` triplets. Repeated positions
    /// are summed.
    pub fn from_triplets<R, I>(ring: &R, rows: usize, cols: usize, entries: I) -> Result<Self, Error>
    where
        R: EuclideanRing<Elem = E>,
        I: IntoIterator<Item = (usize, usize, E)>,
    {
        let mut data: Vec<Vec<(usize, E)>> = vec![Vec::new(); rows];
        for (i, j, v) in entries {
            if i >= rows || j >= cols {
                return Err(Error::IndexOutOfBounds { row: i, col: j, rows, cols });
            }
            data[i].push((j, v));
        }
        for row in &mut data {
            row.sort_by_key(|e| e.0);
            let mut merged: Vec<(usize, E)> = Vec::with_capacity(row.len());
            for (j, v) in row.drain(..) {
                match merged.last_mut() {
                    Some((lj, lv)) if *lj == j => *lv = ring.add(lv, &v),
                    _ => merged.push((j, v)),
                }
            }
            merged.retain(|(_, v)| !ring.is_zero(v));
            *row = merged;
        }
        Ok(SparseMatrix { rows, cols, data })
    }

    pub fn from_dense<R: EuclideanRing<Elem = E>>(ring: &R, dense: &[Vec<E>], cols: usize) -> Self {
        let data = dense
            .iter()
            .map(|row| {
                assert_eq!(row.len(), cols, "ragged dense matrix");
                row.iter()
                    .enumerate()
                    .filter(|(_, v)| !ring.is_zero(v))
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect();
        SparseMatrix {
            rows: dense.len(),
            cols,
            data,
        }
    }

    /// Internal constructor for rows that are already sorted and zero-free.
    pub(crate) fn from_rows(rows: usize, cols: usize, data: Vec<Vec<(usize, E)>>) -> Self {
        debug_assert_eq!(data.len(), rows);
        SparseMatrix { rows, cols, data }
    }

    pub fn identity<R: EuclideanRing<Elem = E>>(ring: &R, n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            data: (0..n).map(|i| vec![(i, ring.one())]).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn row(&self, i: usize) -> &[(usize, E)] {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&E> {
        let row = &self.data[i];
        row.binary_search_by_key(&j, |e| e.0).ok().map(|k| &row[k].1)
    }

    /// Iterates over stored entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &E)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<Vec<(usize, E)>> = vec![Vec::new(); self.cols];
        for (i, j, v) in self.entries() {
            data[j].push((i, v.clone()));
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul<R: EuclideanRing<Elem = E>>(&self, ring: &R, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut acc: Vec<Option<E>> = vec![None; rhs.cols];
        let mut touched: Vec<usize> = Vec::new();
        let data = self
            .data
            .iter()
            .map(|row| {
                for (k, a) in row {
                    for (j, b) in &rhs.data[*k] {
                        let p = ring.mul(a, b);
                        match &mut acc[*j] {
                            Some(v) => *v = ring.add(v, &p),
                            slot @ None => {
                                *slot = Some(p);
                                touched.push(*j);
                            }
                        }
                    }
                }
                touched.sort_unstable();
                let out: Vec<(usize, E)> = touched
                    .drain(..)
                    .filter_map(|j| acc[j].take().filter(|v| !ring.is_zero(v)).map(|v| (j, v)))
                    .collect();
                out
            })
            .collect();
        SparseMatrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        }
    }

    /// Matrix-vector product with a dense vector.
    pub fn mul_vec<R: EuclideanRing<Elem = E>>(&self, ring: &R, v: &[E]) -> Vec<E> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .fold(ring.zero(), |acc, (j, a)| ring.add(&acc, &ring.mul(a, &v[*j])))
            })
            .collect()
    }

    pub fn to_dense<R: EuclideanRing<Elem = E>>(&self, ring: &R) -> Vec<Vec<E>> {
        let mut out = vec![vec![ring.zero(); self.cols]; self.rows];
        for (i, j, v) in self.entries() {
            out[i][j] = v.clone();
        }
        out
    }

    /// Keeps only the listed rows, in the given order.
    pub fn select_rows(&self, keep: &[usize]) -> Self {
        SparseMatrix {
            rows: keep.len(),
            cols: self.cols,
            data: keep.iter().map(|&i| self.data[i].clone()).collect(),
        }
    }

    /// Applies a ring homomorphism entrywise, dropping entries that vanish.
    pub fn map_into<R: EuclideanRing, F: Fn(&E) -> R::Elem>(&self, target: &R, f: F) -> SparseMatrix<R::Elem> {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|row| {
                    row.iter()
                        .filter_map(|(j, v)| {
                            let w = f(v);
                            (!target.is_zero(&w)).then_some((*j, w))
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

impl SparseIntMatrix {
    /// Convenience constructor for small integer matrices.
    pub fn from_i64_triplets(rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> Result<Self, Error> {
        Self::from_triplets(
            &Integers,
            rows,
            cols,
            entries.iter().map(|&(i, j, v)| (i, j, Integer::from(v))),
        )
    }

    pub fn from_i64_dense(dense: &[Vec<i64>]) -> Self {
        let cols = dense.first().map_or(0, Vec::len);
        let rows: Vec<Vec<Integer>> = dense
            .iter()
            .map(|r| r.iter().map(|&v| Integer::from(v)).collect())
            .collect();
        Self::from_dense(&Integers, &rows, cols)
    }
}
