//! Degreewise linear algebra over presented algebras P/I.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::linalg::{self, SparseVec};
use crate::poly::Polynomial;
use crate::ring::{Monomial, Multidegree, PolyRing, RingRef};

/// A polynomial ring modulo a homogeneous ideal, with its degrevlex Gröbner basis.
#[derive(Debug, Clone)]
pub struct PresentedAlgebra {
    ring: RingRef,
    ideal: Ideal,
    label: String,
}

impl PresentedAlgebra {
    pub fn new(ring: &RingRef, relations: Vec<Polynomial>, label: impl Into<String>) -> Result<Self> {
        let ring = PolyRing::degrevlex(ring.descriptor().clone());
        let ideal = Ideal::new(&ring, relations)?;
        if !ideal.is_homogeneous() {
            return Err(AlgebraError::Input("defining ideal must be homogeneous".into()));
        }
        ideal.groebner();
        Ok(Self { ring, ideal, label: label.into() })
    }

    pub fn polynomial_ring(ring: &RingRef, label: impl Into<String>) -> Self {
        Self::new(ring, Vec::new(), label).expect("the zero ideal is homogeneous")
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn grading_rank(&self) -> usize {
        self.ring.descriptor().grading_rank()
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.ideal.groebner().is_empty()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.ideal.normal_form(f)
    }

    /// Same ambient ring, defining ideal enlarged by `more`.
    pub fn quotient_by(&self, more: &[Polynomial], label: impl Into<String>) -> Result<Self> {
        let mut rel = self.ideal.generators().to_vec();
        rel.extend(more.iter().cloned());
        Self::new(&self.ring, rel, label)
    }
}

/// All monomials of the ring with the given multidegree, in descending monomial order.
pub fn monomials_of_degree(ring: &RingRef, delta: &Multidegree) -> Vec<Monomial> {
    let desc = ring.descriptor();
    let n = desc.nvars();
    if delta.rank() != desc.grading_rank() || !delta.is_nonnegative() {
        return Vec::new();
    }
    let degs: Vec<&[i32]> = desc.variables().iter().map(|v| v.degree.components()).collect();
    let mut out = Vec::new();
    let mut exps = vec![0u16; n];
    let mut rem = delta.components().to_vec();
    fn rec(i: usize, degs: &[&[i32]], rem: &mut Vec<i32>, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i == degs.len() {
            if rem.iter().all(|&r| r == 0) {
                out.push(Monomial::from_exponents(exps.clone()));
            }
            return;
        }
        let mut e = 0u16;
        loop {
            rec(i + 1, degs, rem, exps, out);
            if !rem.iter().zip(degs[i]).all(|(r, d)| r >= d) {
                break;
            }
            for (r, d) in rem.iter_mut().zip(degs[i]) {
                *r -= d;
            }
            e += 1;
            exps[i] = e;
        }
        for (r, d) in rem.iter_mut().zip(degs[i]) {
            *r += d * e as i32;
        }
        exps[i] = 0;
    }
    rec(0, &degs, &mut rem, &mut exps, &mut out);
    out.sort_by(|a, b| ring.compare(b, a));
    out
}

/// Standard monomials of `A` in multidegree `delta`, descending in the monomial order.
pub fn graded_basis(a: &PresentedAlgebra, delta: &Multidegree) -> Vec<Monomial> {
    let gb = a.ideal.groebner();
    monomials_of_degree(&a.ring, delta).into_iter().filter(|m| gb.is_standard(m)).collect()
}

pub fn hilbert_function(a: &PresentedAlgebra, delta: &Multidegree) -> usize {
    graded_basis(a, delta).len()
}

/// Basis of one graded piece plus a reverse index.
#[derive(Debug, Default)]
pub struct Piece {
    pub basis: Vec<Monomial>,
    pub index: HashMap<Monomial, u32>,
}

/// Memoized graded pieces and monomial normal forms of a presented algebra.
pub struct PieceCache {
    algebra: Arc<PresentedAlgebra>,
    pieces: HashMap<Multidegree, Piece>,
    nf: HashMap<Monomial, SparseVec>,
}

impl PieceCache {
    pub fn new(algebra: Arc<PresentedAlgebra>) -> Self {
        Self { algebra, pieces: HashMap::new(), nf: HashMap::new() }
    }

    pub fn algebra(&self) -> &Arc<PresentedAlgebra> {
        &self.algebra
    }

    pub fn piece(&mut self, delta: &Multidegree) -> &Piece {
        if !self.pieces.contains_key(delta) {
            let basis = graded_basis(&self.algebra, delta);
            let index = basis.iter().enumerate().map(|(i, m)| (m.clone(), i as u32)).collect();
            self.pieces.insert(delta.clone(), Piece { basis, index });
        }
        &self.pieces[delta]
    }

    pub fn dim(&mut self, delta: &Multidegree) -> usize {
        if !delta.is_nonnegative() {
            return 0;
        }
        self.piece(delta).basis.len()
    }

    /// Coordinates of the normal form of `m` in the basis of its degree.
    pub fn reduce_monomial(&mut self, m: &Monomial) -> &SparseVec {
        if !self.nf.contains_key(m) {
            let alg = self.algebra.clone();
            let ring = alg.ring().clone();
            let gb = alg.ideal().groebner();
            let v = if gb.is_standard(m) {
                let deg = ring.mdeg(m);
                let idx = self.piece(&deg).index[m];
                vec![(idx, 1)]
            } else {
                let f = gb.normal_form(&Polynomial::monomial(&ring, m.clone(), 1));
                self.coordinates(&f)
            };
            self.nf.insert(m.clone(), v);
        }
        &self.nf[m]
    }

    /// Coordinates of a reduced homogeneous polynomial.
    fn coordinates(&mut self, f: &Polynomial) -> SparseVec {
        let Some(deg) = f.multidegree() else { return Vec::new() };
        let piece = self.piece(&deg);
        let mut v: SparseVec = f.terms().iter().map(|(m, c)| (piece.index[m], *c)).collect();
        v.sort_unstable();
        v
    }

    /// Coordinates of the class of an arbitrary homogeneous polynomial of degree `deg`.
    pub fn coordinates_of(&mut self, f: &Polynomial) -> SparseVec {
        let field = self.algebra.ring().field();
        let mut acc: HashMap<u32, u32> = HashMap::new();
        for (m, c) in f.terms() {
            for &(i, a) in self.reduce_monomial(m).clone().iter() {
                let e = acc.entry(i).or_insert(0);
                *e = field.mul_add(*e, *c, a);
            }
        }
        let mut v: SparseVec = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        v.sort_unstable();
        v
    }

    /// Polynomial with the given coordinates in degree `delta`.
    pub fn polynomial(&mut self, delta: &Multidegree, v: &[(u32, u32)]) -> Polynomial {
        let ring = self.algebra.ring().clone();
        let piece = self.piece(delta);
        let terms = v.iter().map(|&(i, c)| (piece.basis[i as usize].clone(), c)).collect();
        Polynomial::from_terms(&ring, terms)
    }

    /// `m * v` where `v` lives in degree `src`; result in degree `src + deg m`.
    pub fn mul_monomial(&mut self, m: &Monomial, src: &Multidegree, v: &[(u32, u32)]) -> SparseVec {
        let field = self.algebra.ring().field();
        let basis: Vec<Monomial> = {
            let piece = self.piece(src);
            v.iter().map(|&(i, _)| piece.basis[i as usize].clone()).collect()
        };
        let mut acc: HashMap<u32, u32> = HashMap::new();
        for (n, &(_, c)) in basis.iter().zip(v) {
            let prod = n.mul(m);
            for &(i, a) in self.reduce_monomial(&prod).iter() {
                let e = acc.entry(i).or_insert(0);
                *e = field.mul_add(*e, c, a);
            }
        }
        let mut out: SparseVec = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        out.sort_unstable();
        out
    }
}

/// A dense-shaped description of a linear map by sparse columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub nrows: usize,
    pub ncols: usize,
    pub columns: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn rank(&self, field: crate::field::PrimeField) -> usize {
        linalg::rank(field, self.nrows, &self.columns)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }
}

/// Matrix of multiplication by `f` from `A_src` to `A_{src + deg f}`.
pub fn multiplication_matrix(a: &PresentedAlgebra, f: &Polynomial, src: &Multidegree) -> Result<SparseMatrix> {
    let deg = f
        .multidegree()
        .ok_or_else(|| AlgebraError::Input("multiplier must be homogeneous and nonzero".into()))?;
    let mut cache = PieceCache::new(Arc::new(a.clone()));
    let tgt = src.add(&deg);
    let cols_basis = cache.piece(src).basis.clone();
    let nrows = cache.dim(&tgt);
    let f = f.to_ring(a.ring())?;
    let columns = cols_basis
        .iter()
        .map(|m| {
            let prod = f.mul_term(m, 1);
            cache.coordinates_of(&prod)
        })
        .collect();
    Ok(SparseMatrix { nrows, ncols: cols_basis.len(), columns })
}

/// Componentwise box `0 ≤ δ ≤ max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeWindow {
    max: Multidegree,
}

impl DegreeWindow {
    pub fn new(max: Multidegree) -> Self {
        Self { max }
    }

    pub fn single(max: i32) -> Self {
        Self { max: Multidegree::single(max) }
    }

    pub fn max(&self) -> &Multidegree {
        &self.max
    }

    pub fn contains(&self, d: &Multidegree) -> bool {
        d.is_nonnegative() && d.le(&self.max)
    }

    /// All degrees in the box, total degree first.
    pub fn degrees(&self) -> Vec<Multidegree> {
        let mut out = vec![Vec::new()];
        for &m in self.max.components() {
            out = out
                .into_iter()
                .flat_map(|p: Vec<i32>| {
                    (0..=m.max(-1)).map(move |c| {
                        let mut q = p.clone();
                        q.push(c);
                        q
                    })
                })
                .collect();
        }
        let mut out: Vec<Multidegree> = out.into_iter().map(Multidegree::new).collect();
        out.sort_by(|a, b| a.graded_cmp(b));
        out
    }
}

/// `⊕_g A(twist_g)`: the generator g sits in degree `-twist_g`.
#[derive(Clone, Debug)]
pub struct ShiftedFree {
    pub algebra: Arc<PresentedAlgebra>,
    pub twists: Vec<Multidegree>,
}

impl ShiftedFree {
    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn dim(&self, cache: &mut PieceCache, delta: &Multidegree) -> usize {
        self.twists.iter().map(|t| cache.dim(&delta.add(t))).sum()
    }
}

/// A finite complex `F_L → … → F_0` of shifted free modules with polynomial matrices.
/// `differentials[k-1]` is the matrix of `F_k → F_{k-1}` with one row per generator of `F_{k-1}`.
#[derive(Clone, Debug)]
pub struct GradedComplex {
    pub algebra: Arc<PresentedAlgebra>,
    pub modules: Vec<ShiftedFree>,
    pub differentials: Vec<Vec<Vec<Polynomial>>>,
}

impl GradedComplex {
    pub fn new(
        algebra: Arc<PresentedAlgebra>,
        twists: Vec<Vec<Multidegree>>,
        differentials: Vec<Vec<Vec<Polynomial>>>,
    ) -> Result<Self> {
        if differentials.len() + 1 != twists.len() {
            return Err(AlgebraError::Structural("need one differential between consecutive modules".into()));
        }
        let ring = algebra.ring().clone();
        for (k, mat) in differentials.iter().enumerate() {
            let (src, tgt) = (&twists[k + 1], &twists[k]);
            if mat.len() != tgt.len() || mat.iter().any(|row| row.len() != src.len()) {
                return Err(AlgebraError::Structural(format!("differential {} has the wrong shape", k + 1)));
            }
            for (r, row) in mat.iter().enumerate() {
                for (c, entry) in row.iter().enumerate() {
                    if entry.is_zero() {
                        continue;
                    }
                    let want = tgt[r].sub(&src[c]);
                    if entry.to_ring(&ring)?.multidegree().as_ref() != Some(&want) {
                        return Err(AlgebraError::Structural(format!(
                            "entry ({r},{c}) of differential {} is not homogeneous of degree {want}",
                            k + 1
                        )));
                    }
                }
            }
        }
        let differentials = differentials
            .into_iter()
            .map(|m| m.into_iter().map(|row| row.into_iter().map(|e| e.to_ring(&ring)).collect()).collect())
            .collect::<Result<Vec<Vec<Vec<Polynomial>>>>>()?;
        let modules = twists.into_iter().map(|t| ShiftedFree { algebra: algebra.clone(), twists: t }).collect();
        Ok(Self { algebra, modules, differentials })
    }

    pub fn length(&self) -> usize {
        self.modules.len() - 1
    }

    pub fn cache(&self) -> PieceCache {
        PieceCache::new(self.algebra.clone())
    }

    /// Matrix of `d_k : (F_k)_δ → (F_{k-1})_δ`, `1 ≤ k ≤ L`.
    pub fn assemble(&self, cache: &mut PieceCache, k: usize, delta: &Multidegree) -> SparseMatrix {
        let src = &self.modules[k];
        let tgt = &self.modules[k - 1];
        let mut offsets = Vec::with_capacity(tgt.rank());
        let mut nrows = 0usize;
        for t in &tgt.twists {
            offsets.push(nrows as u32);
            nrows += cache.dim(&delta.add(t));
        }
        let mat = &self.differentials[k - 1];
        let mut columns = Vec::new();
        for (c, t) in src.twists.iter().enumerate() {
            let d = delta.add(t);
            if !d.is_nonnegative() {
                continue;
            }
            let basis = cache.piece(&d).basis.clone();
            for m in &basis {
                let mut col: SparseVec = Vec::new();
                for (r, row) in mat.iter().enumerate() {
                    let entry = &row[c];
                    if entry.is_zero() {
                        continue;
                    }
                    let coords = cache.coordinates_of(&entry.mul_term(m, 1));
                    col.extend(coords.into_iter().map(|(i, a)| (i + offsets[r], a)));
                }
                col.sort_unstable();
                columns.push(col);
            }
        }
        SparseMatrix { nrows, ncols: columns.len(), columns }
    }

    /// `dim H_k(C)_δ` for every position k.
    pub fn homology_dims(&self, cache: &mut PieceCache, delta: &Multidegree) -> Vec<usize> {
        let field = self.algebra.ring().field();
        let len = self.length();
        let dims: Vec<usize> = self.modules.iter().map(|m| m.dim(cache, delta)).collect();
        let ranks: Vec<usize> = (1..=len).map(|k| self.assemble(cache, k, delta).rank(field)).collect();
        (0..=len)
            .map(|k| {
                let out_rank = if k == 0 { 0 } else { ranks[k - 1] };
                let in_rank = if k == len { 0 } else { ranks[k] };
                dims[k] - out_rank - in_rank
            })
            .collect()
    }

    /// `d_k ∘ d_{k+1} = 0` at `δ` for every k.
    pub fn composition_vanishes(&self, cache: &mut PieceCache, delta: &Multidegree) -> bool {
        let field = self.algebra.ring().field();
        for k in 1..self.length() {
            let upper = self.assemble(cache, k + 1, delta);
            let lower = self.assemble(cache, k, delta);
            for col in &upper.columns {
                if !linalg::apply(field, lower.nrows, &lower.columns, col).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// `Σ (-1)^k dim (F_k)_δ` and `Σ (-1)^k dim H_k(C)_δ`.
    pub fn euler_characteristics(&self, cache: &mut PieceCache, delta: &Multidegree) -> (i64, i64) {
        let modules: i64 = self
            .modules
            .iter()
            .enumerate()
            .map(|(k, m)| sign(k) * m.dim(cache, delta) as i64)
            .sum();
        let homology: i64 =
            self.homology_dims(cache, delta).iter().enumerate().map(|(k, &h)| sign(k) * h as i64).sum();
        (modules, homology)
    }
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn complex_homology_dims(c: &GradedComplex, delta: &Multidegree) -> Vec<usize> {
    let mut cache = c.cache();
    c.homology_dims(&mut cache, delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::parse::parse_polynomial;
    use crate::ring::{RingDescriptor, Variable};

    fn poly_ring(names: &[&str]) -> RingRef {
        PolyRing::degrevlex(RingDescriptor::standard(PrimeField::default(), names).unwrap())
    }

    fn bigraded(n: usize, k: usize) -> RingRef {
        let mut vars = Vec::new();
        for i in 1..=n {
            vars.push(Variable { name: format!("x{i}"), degree: Multidegree::bi(1, 0) });
        }
        for j in 1..=k {
            vars.push(Variable { name: format!("t{j}"), degree: Multidegree::bi(0, 1) });
        }
        PolyRing::degrevlex(RingDescriptor::new(PrimeField::default(), vars, 2).unwrap())
    }

    #[test]
    fn bases_and_hilbert() {
        let s = bigraded(3, 3);
        let a = PresentedAlgebra::polynomial_ring(&s, "S'");
        assert_eq!(graded_basis(&a, &Multidegree::bi(1, 0)).len(), 3);
        let r = poly_ring(&["x"]);
        let dual = PresentedAlgebra::new(&r, vec![parse_polynomial("x^2", &r).unwrap()], "A").unwrap();
        assert!(graded_basis(&dual, &Multidegree::single(5)).is_empty());
        let s3 = PresentedAlgebra::polynomial_ring(&poly_ring(&["x1", "x2", "x3"]), "S");
        assert_eq!(hilbert_function(&s3, &Multidegree::single(3)), 10);
        assert_eq!(hilbert_function(&s3, &Multidegree::single(-1)), 0);
    }

    #[test]
    fn linear_forms_span() {
        let s = bigraded(3, 3);
        let t: Vec<Polynomial> = ["t1", "t2", "t3"].iter().map(|v| parse_polynomial(v, &s).unwrap()).collect();
        let q = PresentedAlgebra::new(&s, t, "S'/(t)").unwrap();
        for u in 0..4 {
            for v in 0..3 {
                let want = if v == 0 { (u + 1) * (u + 2) / 2 } else { 0 };
                assert_eq!(hilbert_function(&q, &Multidegree::bi(u, v)), want as usize);
            }
        }
    }

    #[test]
    fn multiplication_maps() {
        let r = poly_ring(&["x"]);
        let x = parse_polynomial("x", &r).unwrap();
        let dual = PresentedAlgebra::new(&r, vec![parse_polynomial("x^2", &r).unwrap()], "A").unwrap();
        let m = multiplication_matrix(&dual, &x, &Multidegree::single(1)).unwrap();
        assert_eq!((m.nrows, m.ncols), (0, 1));
        assert!(m.is_zero());
        let s = PresentedAlgebra::polynomial_ring(&poly_ring(&["x1", "x2"]), "S");
        let m = multiplication_matrix(&s, &parse_polynomial("x1", s.ring()).unwrap(), &Multidegree::single(0)).unwrap();
        assert_eq!(m.columns, vec![vec![(0, 1)]]);
    }

    #[test]
    fn two_term_complex() {
        let r = poly_ring(&["x"]);
        let a = Arc::new(PresentedAlgebra::polynomial_ring(&r, "K[x]"));
        let x = parse_polynomial("x", &r).unwrap();
        let c = GradedComplex::new(
            a,
            vec![vec![Multidegree::single(0)], vec![Multidegree::single(-1)]],
            vec![vec![vec![x]]],
        )
        .unwrap();
        assert_eq!(complex_homology_dims(&c, &Multidegree::single(0)), vec![1, 0]);
        assert_eq!(complex_homology_dims(&c, &Multidegree::single(3)), vec![0, 0]);
    }

    #[test]
    fn window_degrees() {
        let w = DegreeWindow::new(Multidegree::bi(1, 1));
        let ds = w.degrees();
        assert_eq!(ds.len(), 4);
        assert_eq!(ds[0], Multidegree::bi(0, 0));
        assert_eq!(ds[3], Multidegree::bi(1, 1));
    }
}
