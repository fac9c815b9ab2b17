//! Sparse row echelon forms over F_p: rank, reduction, kernels.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::field::PrimeField;
use crate::poly::Polynomial;
use crate::ring::{Monomial, RingRef};

/// Sparse vector: `(index, nonzero coefficient)` sorted by index.
pub type SparseVec = Vec<(u32, u32)>;

/// Dense accumulator with a min-heap of touched positions.
struct Scratch {
    dense: Vec<u32>,
    mark: Vec<bool>,
    heap: BinaryHeap<Reverse<u32>>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Self { dense: vec![0; n], mark: vec![false; n], heap: BinaryHeap::new() }
    }

    fn ensure(&mut self, n: usize) {
        if self.dense.len() < n {
            self.dense.resize(n, 0);
            self.mark.resize(n, false);
        }
    }

    #[inline]
    fn touch(&mut self, i: u32) {
        if !self.mark[i as usize] {
            self.mark[i as usize] = true;
            self.heap.push(Reverse(i));
        }
    }

    fn load(&mut self, v: &[(u32, u32)]) {
        for &(i, c) in v {
            self.dense[i as usize] = c;
            self.touch(i);
        }
    }

    /// `self -= a * row`
    #[inline]
    fn axpy(&mut self, field: PrimeField, a: u32, row: &[(u32, u32)]) {
        let na = field.neg(a);
        for &(i, c) in row {
            let slot = &mut self.dense[i as usize];
            *slot = field.mul_add(*slot, na, c);
            self.touch(i);
        }
    }

    fn pop(&mut self) -> Option<u32> {
        let Reverse(i) = self.heap.pop()?;
        self.mark[i as usize] = false;
        Some(i)
    }

    fn take(&mut self, i: u32) -> u32 {
        std::mem::take(&mut self.dense[i as usize])
    }
}

/// Row echelon form of a growing set of vectors. Each stored row has leading coefficient 1.
pub struct Echelon {
    field: PrimeField,
    pivot_row: HashMap<u32, usize>,
    rows: Vec<SparseVec>,
    scratch: Scratch,
}

impl Echelon {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        Self { field, pivot_row: HashMap::new(), rows: Vec::new(), scratch: Scratch::new(ncols) }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<SparseVec> {
        self.rows
    }

    /// Remainder of `v` after reducing against stored rows.
    pub fn reduce(&mut self, v: &[(u32, u32)]) -> SparseVec {
        let field = self.field;
        if let Some(&(max, _)) = v.last() {
            self.scratch.ensure(max as usize + 1);
        }
        self.scratch.load(v);
        let mut out = Vec::new();
        while let Some(i) = self.scratch.pop() {
            let c = self.scratch.take(i);
            if c == 0 {
                continue;
            }
            match self.pivot_row.get(&i) {
                Some(&r) => {
                    let row = &self.rows[r];
                    if let Some(&(m, _)) = row.last() {
                        self.scratch.ensure(m as usize + 1);
                    }
                    self.scratch.axpy(field, c, &row[1..]);
                }
                None => out.push((i, c)),
            }
        }
        out
    }

    /// Adds `v` if independent of the stored rows; returns whether it was added.
    pub fn insert(&mut self, v: &[(u32, u32)]) -> bool {
        let mut r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        let inv = self.field.inv(r[0].1);
        for e in r.iter_mut() {
            e.1 = self.field.mul(e.1, inv);
        }
        self.pivot_row.insert(r[0].0, self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn contains(&mut self, v: &[(u32, u32)]) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Rank of a list of sparse vectors.
pub fn rank(field: PrimeField, ncols: usize, vectors: &[SparseVec]) -> usize {
    let mut e = Echelon::new(field, ncols);
    vectors.iter().filter(|v| e.insert(v)).count()
}

/// Basis of the kernel of the linear map sending basis vector `k` to `columns[k]`.
/// Kernel vectors are indexed by column number.
pub fn kernel(field: PrimeField, nrows: usize, columns: &[SparseVec]) -> Vec<SparseVec> {
    let mut pivot_row: HashMap<u32, usize> = HashMap::new();
    let mut rows: Vec<(SparseVec, SparseVec)> = Vec::new();
    let mut image = Scratch::new(nrows);
    let mut comb = Scratch::new(columns.len());
    let mut out = Vec::new();
    for (k, col) in columns.iter().enumerate() {
        if let Some(&(max, _)) = col.last() {
            image.ensure(max as usize + 1);
        }
        image.load(col);
        comb.load(&[(k as u32, 1)]);
        let mut rem = Vec::new();
        while let Some(i) = image.pop() {
            let c = image.take(i);
            if c == 0 {
                continue;
            }
            match pivot_row.get(&i) {
                Some(&r) => {
                    let (row, rc) = &rows[r];
                    image.axpy(field, c, &row[1..]);
                    comb.axpy(field, c, rc);
                }
                None => rem.push((i, c)),
            }
        }
        let mut combo = Vec::new();
        while let Some(j) = comb.pop() {
            let c = comb.take(j);
            if c != 0 {
                combo.push((j, c));
            }
        }
        if rem.is_empty() {
            out.push(combo);
        } else {
            let inv = field.inv(rem[0].1);
            for e in rem.iter_mut() {
                e.1 = field.mul(e.1, inv);
            }
            for e in combo.iter_mut() {
                e.1 = field.mul(e.1, inv);
            }
            pivot_row.insert(rem[0].0, rows.len());
            rows.push((rem, combo));
        }
    }
    out
}

/// Applies the linear map given by `columns` to `v`.
pub fn apply(field: PrimeField, nrows: usize, columns: &[SparseVec], v: &[(u32, u32)]) -> SparseVec {
    let mut acc = vec![0u32; nrows];
    for &(k, c) in v {
        for &(i, a) in &columns[k as usize] {
            acc[i as usize] = field.mul_add(acc[i as usize], c, a);
        }
    }
    acc.into_iter().enumerate().filter(|(_, c)| *c != 0).map(|(i, c)| (i as u32, c)).collect()
}

/// Dimension of the span of some polynomials (as coefficient vectors).
pub fn polynomial_rank(ring: &RingRef, polys: &[Polynomial]) -> usize {
    let mut index: HashMap<&Monomial, u32> = HashMap::new();
    let vecs: Vec<SparseVec> = polys
        .iter()
        .map(|p| {
            let mut v: SparseVec = p
                .terms()
                .iter()
                .map(|(m, c)| {
                    let n = index.len() as u32;
                    (*index.entry(m).or_insert(n), *c)
                })
                .collect();
            v.sort_unstable();
            v
        })
        .collect();
    rank(ring.field(), index.len(), &vecs)
}

/// Indices of a maximal linearly independent subfamily, in input order.
pub fn independent_subset(field: PrimeField, ncols: usize, vectors: &[SparseVec]) -> Vec<usize> {
    let mut e = Echelon::new(field, ncols);
    (0..vectors.len()).filter(|&k| e.insert(&vectors[k])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense_to_sparse(v: &[i64], f: PrimeField) -> SparseVec {
        v.iter().enumerate().filter(|(_, c)| **c != 0).map(|(i, c)| (i as u32, f.from_i64(*c))).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let f = PrimeField::default();
        // columns of [[1,2,3],[2,4,6],[0,1,1]]
        let cols: Vec<SparseVec> =
            [[1, 2, 0], [2, 4, 1], [3, 6, 1]].iter().map(|c| dense_to_sparse(c, f)).collect();
        assert_eq!(rank(f, 3, &cols), 2);
        let k = kernel(f, 3, &cols);
        assert_eq!(k.len(), 1);
        assert!(apply(f, 3, &cols, &k[0]).is_empty());
    }

    #[test]
    fn reduction_is_idempotent() {
        let f = PrimeField::new(7).unwrap();
        let mut e = Echelon::new(f, 4);
        e.insert(&dense_to_sparse(&[1, 1, 0, 0], f));
        e.insert(&dense_to_sparse(&[0, 1, 1, 0], f));
        let r = e.reduce(&dense_to_sparse(&[1, 0, 0, 1], f));
        assert_eq!(e.reduce(&r), r);
        assert!(e.contains(&dense_to_sparse(&[1, 0, 6, 0], f)));
    }
}
