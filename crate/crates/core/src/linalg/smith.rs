//! Sparse Smith normal form over a Euclidean ring.
//!
//! Pivots are chosen Markowitz-style: units before non-units, then the
//! smallest fill estimate `(row_len - 1) * (col_len - 1)`, then the smallest
//! magnitude, then the smallest `(row, col)` position. The choice is fully
//! deterministic.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use super::ring::EuclideanRing;
use super::sparse::SparseMatrix;

/// Unimodular transforms with `u * m * v = diag(invariant_factors)`.
#[derive(Clone, Debug)]
pub struct SmithTransforms<E> {
    pub u: SparseMatrix<E>,
    pub u_inv: SparseMatrix<E>,
    pub v: SparseMatrix<E>,
    pub v_inv: SparseMatrix<E>,
}

#[derive(Clone, Debug)]
pub struct SmithForm<E> {
    /// `d_1 | d_2 | ... | d_r`, canonical associates, `r` = rank.
    pub invariant_factors: Vec<E>,
    pub transforms: Option<SmithTransforms<E>>,
}

impl<E> SmithForm<E> {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

type Row<E> = BTreeMap<usize, E>;

/// Dense-indexed collection of sparse rows supporting elementary operations.
struct RowStore<R: EuclideanRing> {
    rows: Vec<Row<R::Elem>>,
}

impl<R: EuclideanRing> RowStore<R> {
    fn identity(ring: &R, n: usize) -> Self {
        RowStore {
            rows: (0..n)
                .map(|i| {
                    let mut r = BTreeMap::new();
                    r.insert(i, ring.one());
                    r
                })
                .collect(),
        }
    }

    /// row[dst] += q * row[src]
    fn add_multiple(&mut self, ring: &R, dst: usize, src: usize, q: &R::Elem) {
        if ring.is_zero(q) || dst == src {
            return;
        }
        let src_row: Vec<(usize, R::Elem)> = self.rows[src].iter().map(|(j, v)| (*j, v.clone())).collect();
        let target = &mut self.rows[dst];
        for (j, v) in src_row {
            let delta = ring.mul(q, &v);
            let remove = match target.get_mut(&j) {
                Some(e) => {
                    *e = ring.add(e, &delta);
                    ring.is_zero(e)
                }
                None => {
                    target.insert(j, delta);
                    false
                }
            };
            if remove {
                target.remove(&j);
            }
        }
    }

    fn scale(&mut self, ring: &R, i: usize, u: &R::Elem) {
        for v in self.rows[i].values_mut() {
            *v = ring.mul(v, u);
        }
    }

    /// (row_i, row_j) <- (a*row_i + b*row_j, c*row_i + d*row_j)
    fn combine2(&mut self, ring: &R, i: usize, j: usize, t: [&R::Elem; 4]) {
        let keys: BTreeSet<usize> = self.rows[i].keys().chain(self.rows[j].keys()).copied().collect();
        let zero = ring.zero();
        let mut new_i = BTreeMap::new();
        let mut new_j = BTreeMap::new();
        for k in keys {
            let x = self.rows[i].get(&k).unwrap_or(&zero);
            let y = self.rows[j].get(&k).unwrap_or(&zero);
            let ni = ring.add(&ring.mul(t[0], x), &ring.mul(t[1], y));
            let nj = ring.add(&ring.mul(t[2], x), &ring.mul(t[3], y));
            if !ring.is_zero(&ni) {
                new_i.insert(k, ni);
            }
            if !ring.is_zero(&nj) {
                new_j.insert(k, nj);
            }
        }
        self.rows[i] = new_i;
        self.rows[j] = new_j;
    }

    fn into_matrix(self, cols: usize, order: &[usize]) -> SparseMatrix<R::Elem> {
        let mut rows = self.rows;
        let data = order
            .iter()
            .map(|&i| core::mem::take(&mut rows[i]).into_iter().collect())
            .collect();
        SparseMatrix::from_rows(order.len(), cols, data)
    }
}

struct Transforms<R: EuclideanRing> {
    u: RowStore<R>,
    u_inv_t: RowStore<R>,
    v_t: RowStore<R>,
    v_inv: RowStore<R>,
}

struct Eliminator<'a, R: EuclideanRing> {
    ring: &'a R,
    nrows: usize,
    ncols: usize,
    rows: Vec<Row<R::Elem>>,
    cols: Vec<BTreeSet<usize>>,
    row_done: Vec<bool>,
    col_done: Vec<bool>,
    tf: Option<Transforms<R>>,
}

impl<'a, R: EuclideanRing> Eliminator<'a, R> {
    fn new(ring: &'a R, m: &SparseMatrix<R::Elem>, keep: bool) -> Self {
        let mut rows = vec![BTreeMap::new(); m.rows()];
        let mut cols = vec![BTreeSet::new(); m.cols()];
        for (i, j, v) in m.entries() {
            rows[i].insert(j, v.clone());
            cols[j].insert(i);
        }
        let tf = keep.then(|| Transforms {
            u: RowStore::identity(ring, m.rows()),
            u_inv_t: RowStore::identity(ring, m.rows()),
            v_t: RowStore::identity(ring, m.cols()),
            v_inv: RowStore::identity(ring, m.cols()),
        });
        Eliminator {
            ring,
            nrows: m.rows(),
            ncols: m.cols(),
            rows,
            cols,
            row_done: vec![false; m.rows()],
            col_done: vec![false; m.cols()],
            tf,
        }
    }

    fn set(&mut self, i: usize, j: usize, v: R::Elem) {
        if self.ring.is_zero(&v) {
            if self.rows[i].remove(&j).is_some() {
                self.cols[j].remove(&i);
            }
        } else if self.rows[i].insert(j, v).is_none() {
            self.cols[j].insert(i);
        }
    }

    /// row[dst] += q * row[src]
    fn row_add(&mut self, dst: usize, src: usize, q: &R::Elem) {
        let ring = self.ring;
        if ring.is_zero(q) {
            return;
        }
        let src_row: Vec<(usize, R::Elem)> = self.rows[src].iter().map(|(j, v)| (*j, v.clone())).collect();
        for (j, v) in src_row {
            let cur = self.rows[dst].get(&j).cloned().unwrap_or_else(|| ring.zero());
            let nv = ring.add(&cur, &ring.mul(q, &v));
            self.set(dst, j, nv);
        }
        if let Some(tf) = &mut self.tf {
            tf.u.add_multiple(ring, dst, src, q);
            tf.u_inv_t.add_multiple(ring, src, dst, &ring.neg(q));
        }
    }

    /// col[dst] += q * col[src]
    fn col_add(&mut self, dst: usize, src: usize, q: &R::Elem) {
        let ring = self.ring;
        if ring.is_zero(q) {
            return;
        }
        let src_col: Vec<usize> = self.cols[src].iter().copied().collect();
        for i in src_col {
            let v = self.rows[i][&src].clone();
            let cur = self.rows[i].get(&dst).cloned().unwrap_or_else(|| ring.zero());
            let nv = ring.add(&cur, &ring.mul(q, &v));
            self.set(i, dst, nv);
        }
        if let Some(tf) = &mut self.tf {
            tf.v_t.add_multiple(ring, dst, src, q);
            tf.v_inv.add_multiple(ring, src, dst, &ring.neg(q));
        }
    }

    fn row_scale(&mut self, i: usize, u: &R::Elem) {
        let ring = self.ring;
        for v in self.rows[i].values_mut() {
            *v = ring.mul(v, u);
        }
        if let Some(tf) = &mut self.tf {
            tf.u.scale(ring, i, u);
            tf.u_inv_t.scale(ring, i, &ring.unit_inverse(u));
        }
    }

    /// Columns (ci, cj) <- (a*ci + b*cj, c*ci + d*cj) with `a*d - b*c = 1`.
    fn col_combine2(&mut self, ci: usize, cj: usize, t: [R::Elem; 4]) {
        let ring = self.ring;
        let touched: BTreeSet<usize> = self.cols[ci].iter().chain(self.cols[cj].iter()).copied().collect();
        for i in touched {
            let x = self.rows[i].get(&ci).cloned().unwrap_or_else(|| ring.zero());
            let y = self.rows[i].get(&cj).cloned().unwrap_or_else(|| ring.zero());
            let ni = ring.add(&ring.mul(&t[0], &x), &ring.mul(&t[1], &y));
            let nj = ring.add(&ring.mul(&t[2], &x), &ring.mul(&t[3], &y));
            self.set(i, ci, ni);
            self.set(i, cj, nj);
        }
        if let Some(tf) = &mut self.tf {
            tf.v_t.combine2(ring, ci, cj, [&t[0], &t[1], &t[2], &t[3]]);
            let (nb, nc) = (ring.neg(&t[2]), ring.neg(&t[1]));
            tf.v_inv.combine2(ring, ci, cj, [&t[3], &nb, &nc, &t[0]]);
        }
    }

    fn select_pivot(&self) -> Option<(usize, usize)> {
        let ring = self.ring;
        let mut best: Option<((bool, usize, u64), usize, usize)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            if self.row_done[i] || row.is_empty() {
                continue;
            }
            if matches!(&best, Some(((false, 0, 1), _, _))) {
                break;
            }
            let rl = row.len() - 1;
            for (&j, v) in row {
                let cost = rl * (self.cols[j].len() - 1);
                let key = (!ring.is_unit(v), cost, ring.size(v));
                let better = match &best {
                    None => true,
                    Some((bk, _, _)) => key < *bk,
                };
                if better {
                    best = Some((key, i, j));
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    /// Clears row and column of the pivot. Returns the final pivot position.
    fn eliminate_at(&mut self, mut p: usize, mut c: usize) -> (usize, usize) {
        let ring = self.ring;
        loop {
            let a = self.rows[p][&c].clone();
            // Column pass.
            let others: Vec<usize> = self.cols[c].iter().copied().filter(|&i| i != p).collect();
            let mut smallest: Option<(u64, usize)> = None;
            for i in others {
                let e = self.rows[i][&c].clone();
                let (q, r) = ring.div_rem(&e, &a);
                self.row_add(i, p, &ring.neg(&q));
                if !ring.is_zero(&r) {
                    let s = ring.size(&r);
                    if smallest.is_none_or(|(bs, _)| s < bs) {
                        smallest = Some((s, i));
                    }
                }
            }
            if let Some((_, i)) = smallest {
                p = i;
                continue;
            }
            // Row pass; the column now holds only the pivot.
            let others: Vec<usize> = self.rows[p].keys().copied().filter(|&j| j != c).collect();
            let mut smallest: Option<(u64, usize)> = None;
            for j in others {
                let e = self.rows[p][&j].clone();
                let (q, r) = ring.div_rem(&e, &a);
                self.col_add(j, c, &ring.neg(&q));
                if !ring.is_zero(&r) {
                    let s = ring.size(&r);
                    if smallest.is_none_or(|(bs, _)| s < bs) {
                        smallest = Some((s, j));
                    }
                }
            }
            match smallest {
                Some((_, j)) => c = j,
                None => return (p, c),
            }
        }
    }

    fn run(mut self) -> SmithForm<R::Elem> {
        let ring = self.ring;
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        while let Some((p, c)) = self.select_pivot() {
            let (p, c) = self.eliminate_at(p, c);
            let u = ring.canonical_unit(&self.rows[p][&c]);
            if u != ring.one() {
                self.row_scale(p, &u);
            }
            self.row_done[p] = true;
            self.col_done[c] = true;
            pivots.push((p, c));
        }
        // Enforce the divisibility chain.
        let n = pivots.len();
        for i in 0..n {
            for j in i + 1..n {
                let (ri, ci) = pivots[i];
                let (rj, cj) = pivots[j];
                let a = self.rows[ri][&ci].clone();
                let b = self.rows[rj][&cj].clone();
                if ring.divides(&a, &b) {
                    continue;
                }
                let (g, s, t) = ring.xgcd(&a, &b);
                let (a_g, _) = ring.div_rem(&a, &g);
                let (b_g, _) = ring.div_rem(&b, &g);
                self.row_add(ri, rj, &ring.one());
                self.col_combine2(ci, cj, [s, t.clone(), ring.neg(&b_g), a_g]);
                let (tb_g, _) = ring.div_rem(&ring.mul(&t, &b), &g);
                self.row_add(rj, ri, &ring.neg(&tb_g));
                let u = ring.canonical_unit(&self.rows[rj][&cj]);
                if u != ring.one() {
                    self.row_scale(rj, &u);
                }
                let u = ring.canonical_unit(&self.rows[ri][&ci]);
                if u != ring.one() {
                    self.row_scale(ri, &u);
                }
            }
        }
        let invariant_factors: Vec<R::Elem> = pivots.iter().map(|&(p, c)| self.rows[p][&c].clone()).collect();
        let transforms = self.tf.take().map(|tf| {
            let mut row_order: Vec<usize> = pivots.iter().map(|&(p, _)| p).collect();
            row_order.extend((0..self.nrows).filter(|i| !self.row_done[*i]));
            let mut col_order: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
            col_order.extend((0..self.ncols).filter(|j| !self.col_done[*j]));
            let u = tf.u.into_matrix(self.nrows, &row_order);
            let u_inv = tf.u_inv_t.into_matrix(self.nrows, &row_order).transpose();
            let v = tf.v_t.into_matrix(self.ncols, &col_order).transpose();
            let v_inv = tf.v_inv.into_matrix(self.ncols, &col_order);
            SmithTransforms { u, u_inv, v, v_inv }
        });
        SmithForm {
            invariant_factors,
            transforms,
        }
    }
}

/// Smith normal form of `m` over `ring`. With `keep_transforms`, also returns
/// unimodular `u`, `v` (and their inverses) with `u * m * v` diagonal.
pub fn smith_normal_form<R: EuclideanRing>(
    ring: &R,
    m: &SparseMatrix<R::Elem>,
    keep_transforms: bool,
) -> SmithForm<R::Elem> {
    Eliminator::new(ring, m, keep_transforms).run()
}
