//! Rees algebras of complete intersections, their diagonal subalgebras, and the
//! complexes used to control diagonal regularity.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{AlgebraError, Result};
use crate::field::PrimeField;
use crate::graded::{monomials_of_degree, DegreeWindow, GradedComplex, PieceCache, PresentedAlgebra};
use crate::groebner::{ideals_equal, is_regular_sequence_mod, subalgebra_presentation, Ideal, RingMapKernelProblem};
use crate::linalg;
use crate::poly::Polynomial;
use crate::resolution::{
    truncated_minimal_resolution, BettiTable, GradedAlgebra, QuotientModule, RowStatus, VeroneseModule,
};
use crate::ring::{Multidegree, PolyRing, RingDescriptor, RingRef, Variable};

/// Homogeneous forms `f_1..f_k` of one degree forming a regular sequence in `A = S/base`.
#[derive(Clone, Debug)]
pub struct CompleteIntersectionInput {
    ring: RingRef,
    base: Vec<Polynomial>,
    forms: Vec<Polynomial>,
    degree: i32,
}

impl CompleteIntersectionInput {
    /// Forms in a standard graded polynomial ring.
    pub fn new(ring: &RingRef, forms: Vec<Polynomial>) -> Result<Self> {
        Self::over_quotient(ring, Vec::new(), forms)
    }

    /// Forms in `S/(base)` for homogeneous relations `base`.
    pub fn over_quotient(ring: &RingRef, base: Vec<Polynomial>, forms: Vec<Polynomial>) -> Result<Self> {
        let desc = ring.descriptor();
        if desc.grading_rank() != 1 || desc.variables().iter().any(|v| v.degree != Multidegree::single(1)) {
            return Err(AlgebraError::Input("base ring must be standard graded".into()));
        }
        if forms.is_empty() {
            return Err(AlgebraError::Input("need at least one form".into()));
        }
        let ring = PolyRing::degrevlex(desc.clone());
        let forms = forms.iter().map(|f| f.to_ring(&ring)).collect::<Result<Vec<_>>>()?;
        let base = base.iter().map(|f| f.to_ring(&ring)).collect::<Result<Vec<_>>>()?;
        let degs: Vec<Option<Multidegree>> = forms.iter().map(|f| f.multidegree()).collect();
        let degree = match &degs[0] {
            Some(d) if degs.iter().all(|e| e.as_ref() == Some(d)) && d.total() > 0 => d.components()[0],
            _ => return Err(AlgebraError::Input("forms must share degree d".into())),
        };
        if base.iter().any(|b| !b.is_homogeneous()) {
            return Err(AlgebraError::Input("base relations must be homogeneous".into()));
        }
        let base_ideal = Ideal::new(&ring, base.clone())?;
        if !is_regular_sequence_mod(&forms, Some(&base_ideal))? {
            return Err(AlgebraError::Input("forms are not a regular sequence".into()));
        }
        Ok(Self { ring, base, forms, degree })
    }

    /// Same degree checks as [`Self::over_quotient`] but no regularity test, for
    /// deliberately broken probes.
    pub fn unchecked(ring: &RingRef, base: Vec<Polynomial>, forms: Vec<Polynomial>) -> Result<Self> {
        let ring = PolyRing::degrevlex(ring.descriptor().clone());
        let forms = forms.iter().map(|f| f.to_ring(&ring)).collect::<Result<Vec<_>>>()?;
        let base = base.iter().map(|f| f.to_ring(&ring)).collect::<Result<Vec<_>>>()?;
        let degree = match forms.first().and_then(|f| f.multidegree()) {
            Some(d) if forms.iter().all(|f| f.multidegree().as_ref() == Some(&d)) => d.components()[0],
            _ => return Err(AlgebraError::Input("forms must share degree d".into())),
        };
        Ok(Self { ring, base, forms, degree })
    }

    /// `x_1^d, …, x_k^d` in `K[x_1..x_n]`.
    pub fn powers(field: PrimeField, n: usize, k: usize, d: u32) -> Result<Self> {
        if k > n || d == 0 {
            return Err(AlgebraError::Input(format!("powers need 1 <= k <= n and d >= 1, got n={n}, k={k}, d={d}")));
        }
        let ring = PolyRing::degrevlex(RingDescriptor::polynomial_ring(field, "x", n)?);
        let forms = (0..k).map(|i| Polynomial::variable(&ring, i).pow(d)).collect();
        Self::new(&ring, forms)
    }

    /// `k` forms of degree `d` with seeded random coefficients; retried until regular.
    pub fn generic(field: PrimeField, n: usize, k: usize, d: u32, seed: u64) -> Result<Self> {
        if k > n || d == 0 {
            return Err(AlgebraError::Input(format!("generic forms need 1 <= k <= n and d >= 1, got n={n}, k={k}, d={d}")));
        }
        let ring = PolyRing::degrevlex(RingDescriptor::polynomial_ring(field, "x", n)?);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..8 {
            let forms = (0..k).map(|_| random_form(&ring, &Multidegree::single(d as i32), &mut rng)).collect();
            match Self::new(&ring, forms) {
                Err(AlgebraError::Input(_)) => continue,
                other => return other,
            }
        }
        Err(AlgebraError::Input("could not draw a regular sequence".into()))
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn base_relations(&self) -> &[Polynomial] {
        &self.base
    }

    pub fn forms(&self) -> &[Polynomial] {
        &self.forms
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn k(&self) -> usize {
        self.forms.len()
    }

    pub fn n(&self) -> usize {
        self.ring.nvars()
    }

    pub fn base_algebra(&self) -> Result<Arc<PresentedAlgebra>> {
        Ok(Arc::new(PresentedAlgebra::new(&self.ring, self.base.clone(), "A")?))
    }
}

/// A form of the given degree whose coefficients on every monomial are uniform in `F_p`.
pub fn random_form(ring: &RingRef, degree: &Multidegree, rng: &mut impl Rng) -> Polynomial {
    let p = ring.field().characteristic();
    let terms = monomials_of_degree(ring, degree).into_iter().map(|m| (m, rng.gen_range(0..p))).collect();
    Polynomial::from_terms(ring, terms)
}

/// `count` random forms of one degree from a seeded stream.
pub fn seeded_forms(ring: &RingRef, degree: &Multidegree, count: usize, seed: u64) -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_form(ring, degree, &mut rng)).collect()
}

/// `A[t_1..t_k]` modulo the 2-minors of `[[f_1..f_k],[t_1..t_k]]`, bigraded by `x ↦ (1,0)`, `t ↦ (0,1)`.
#[derive(Clone, Debug)]
pub struct ReesPresentation {
    input: CompleteIntersectionInput,
    ring: RingRef,
    forms: Vec<Polynomial>,
    base: Vec<Polynomial>,
    minors: Vec<Polynomial>,
    ideal: Ideal,
    algebra: Arc<PresentedAlgebra>,
}

impl ReesPresentation {
    pub fn input(&self) -> &CompleteIntersectionInput {
        &self.input
    }

    /// `S' = S[t_1..t_k]` with its bigrading.
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    /// The forms `f_i` as elements of `S'`.
    pub fn forms(&self) -> &[Polynomial] {
        &self.forms
    }

    pub fn t(&self, j: usize) -> Polynomial {
        Polynomial::variable(&self.ring, self.input.n() + j)
    }

    /// Base relations of `A` inside `S'`.
    pub fn base_relations(&self) -> &[Polynomial] {
        &self.base
    }

    /// The 2-minors; for `k = 3` these are `h_1, h_2, h_3` with `h_i = (-1)^(i+1)` times
    /// the minor that omits column `i`.
    pub fn minors(&self) -> &[Polynomial] {
        &self.minors
    }

    /// Minors plus base relations.
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn rees_algebra(&self) -> &Arc<PresentedAlgebra> {
        &self.algebra
    }

    /// `ker(S' → A[T], x ↦ x, t_j ↦ f_j T)`, computed by elimination in the single grading
    /// `x ↦ 1`, `t ↦ d+1`.
    pub fn kernel_of_rees_map(&self) -> Result<Ideal> {
        let (n, k, d) = (self.input.n(), self.input.k(), self.input.degree());
        let field = self.ring.field();
        let mut degrees = vec![Multidegree::single(1); n];
        degrees.extend(std::iter::repeat_n(Multidegree::single(d + 1), k));
        let source = self.ring.regraded(degrees)?;
        let mut tvars: Vec<Variable> =
            (0..n).map(|i| Variable { name: format!("X{}", i + 1), degree: Multidegree::single(1) }).collect();
        tvars.push(Variable { name: "T".into(), degree: Multidegree::single(1) });
        let target = PolyRing::degrevlex(RingDescriptor::new(field, tvars, 1)?);
        let xmap: Vec<usize> = (0..n).collect();
        let tvar = Polynomial::variable(&target, n);
        let mut images: Vec<Polynomial> = (0..n).map(|i| Polynomial::variable(&target, i)).collect();
        for f in self.input.forms() {
            images.push(&f.embed(&target, &xmap) * &tvar);
        }
        let target_relations = self.input.base_relations().iter().map(|b| b.embed(&target, &xmap)).collect();
        subalgebra_presentation(&RingMapKernelProblem { source, target, images, target_relations })
    }

    /// Whether the minors (with base relations) generate the kernel of the Rees map.
    pub fn matches_kernel(&self) -> Result<bool> {
        let kernel = self.kernel_of_rees_map()?;
        let gens = self.ideal.generators().iter().map(|g| g.to_ring(kernel.ring())).collect::<Result<Vec<_>>>()?;
        ideals_equal(&Ideal::new(kernel.ring(), gens)?, &kernel)
    }
}

/// Builds the minors presentation of the Rees algebra and checks it against the kernel
/// of the Rees map.
pub fn rees_presentation(ci: &CompleteIntersectionInput) -> Result<ReesPresentation> {
    let rp = rees_presentation_unchecked(ci)?;
    if !rp.matches_kernel()? {
        return Err(AlgebraError::Structural("2-minors do not generate the Rees ideal".into()));
    }
    Ok(rp)
}

/// The minors presentation without the kernel cross-check.
pub fn rees_presentation_unchecked(ci: &CompleteIntersectionInput) -> Result<ReesPresentation> {
    let (n, k) = (ci.n(), ci.k());
    let field = ci.ring().field();
    let mut vars: Vec<Variable> = ci
        .ring()
        .descriptor()
        .variables()
        .iter()
        .map(|v| Variable { name: v.name.clone(), degree: Multidegree::bi(1, 0) })
        .collect();
    for j in 0..k {
        vars.push(Variable { name: format!("t{}", j + 1), degree: Multidegree::bi(0, 1) });
    }
    let ring = PolyRing::degrevlex(RingDescriptor::new(field, vars, 2).map_err(|_| {
        AlgebraError::Input("base variable names clash with t1..tk".into())
    })?);
    let xmap: Vec<usize> = (0..n).collect();
    let forms: Vec<Polynomial> = ci.forms().iter().map(|f| f.embed(&ring, &xmap)).collect();
    let base: Vec<Polynomial> = ci.base_relations().iter().map(|f| f.embed(&ring, &xmap)).collect();
    let t = |j: usize| Polynomial::variable(&ring, n + j);
    let minor = |i: usize, j: usize| &(&forms[i] * &t(j)) - &(&forms[j] * &t(i));
    let minors = if k == 3 {
        vec![minor(1, 2), minor(2, 0), minor(0, 1)]
    } else {
        (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).map(|(i, j)| minor(i, j)).collect()
    };
    let mut gens = minors.clone();
    gens.extend(base.iter().cloned());
    let ideal = Ideal::new(&ring, gens.clone())?;
    let algebra = Arc::new(PresentedAlgebra::new(&ring, gens, "Rees")?);
    Ok(ReesPresentation { input: ci.clone(), ring, forms, base, minors, ideal, algebra })
}

/// `F_0 = B`, `F_{2i} = B(-id,-2i)`, `F_{2i+1} = B(-(i+1)d,-2i-1)` over `B = S'/(h_1,h_2)`,
/// with differentials alternating `h_3` (odd source) and `t_3` (even source).
pub fn build_complex_f(rp: &ReesPresentation, length: usize) -> Result<GradedComplex> {
    if rp.input().k() != 3 {
        return Err(AlgebraError::Unsupported("the complex F is only built for three forms".into()));
    }
    let d = rp.input().degree();
    let mut rels = vec![rp.minors()[0].clone(), rp.minors()[1].clone()];
    rels.extend(rp.base_relations().iter().cloned());
    let b = Arc::new(PresentedAlgebra::new(rp.ring(), rels, "B")?);
    let twists: Vec<Vec<Multidegree>> = (0..=length).map(|k| vec![complex_f_twist(k, d)]).collect();
    let (h3, t3) = (rp.minors()[2].clone(), rp.t(2));
    let differentials = (1..=length).map(|k| vec![vec![if k % 2 == 1 { h3.clone() } else { t3.clone() }]]).collect();
    GradedComplex::new(b, twists, differentials)
}

/// Twist of the `k`-th module of the complex F.
pub fn complex_f_twist(k: usize, d: i32) -> Multidegree {
    let i = (k / 2) as i32;
    if k.is_multiple_of(2) {
        Multidegree::bi(-i * d, -2 * i)
    } else {
        Multidegree::bi(-(i + 1) * d, -2 * i - 1)
    }
}

/// Predicted `dim H_index(F)_δ` for `index ≥ 1`: zero at even positions, and at
/// `index = 2i+1` the Hilbert function of `S'/(t)` shifted by `(-(i+2)d, -(2i+1))`.
///
/// # Panics
/// If `index == 0`.
pub fn expected_f_homology_dim(index: usize, delta: &Multidegree, d: i32, n: usize) -> usize {
    assert!(index >= 1, "homology prediction starts at position 1");
    if index.is_multiple_of(2) {
        return 0;
    }
    let i = (index / 2) as i32;
    let (u, v) = (delta.components()[0], delta.components()[1]);
    let low = (i + 2) * d;
    if v != 2 * i + 1 || u < low {
        return 0;
    }
    binomial((u - low) as u64 + n as u64 - 1, n as u64 - 1) as usize
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// A computed minimal resolution of the Rees algebra over `S'`.
pub struct EagonNorthcott {
    pub table: BettiTable,
    pub complex: GradedComplex,
    pub rees: Arc<PresentedAlgebra>,
}

impl EagonNorthcott {
    /// Generator degrees of `F_i`.
    pub fn shifts(&self, i: usize) -> Vec<Multidegree> {
        self.complex.modules.get(i).map(|m| m.twists.iter().map(|t| t.neg()).collect()).unwrap_or_default()
    }

    /// Every generator of `F_i` (`i ≥ 1`) sits in some `(jd, i+1-j)`, `1 ≤ j ≤ i`.
    pub fn shift_shape_holds(&self, d: i32) -> bool {
        (1..self.complex.modules.len()).all(|i| {
            self.shifts(i).iter().all(|s| (1..=i as i32).any(|j| *s == Multidegree::bi(j * d, i as i32 + 1 - j)))
        })
    }
}

/// Resolves `S'/J` over `S'` inside `window` by explicit syzygy computation.
pub fn eagon_northcott(rp: &ReesPresentation, window: &DegreeWindow) -> Result<EagonNorthcott> {
    let k = rp.input().k();
    if k < 2 {
        return Err(AlgebraError::Input("need at least two forms".into()));
    }
    let base = Arc::new(PresentedAlgebra::new(rp.ring(), rp.base_relations().to_vec(), "S'")?);
    let algebra = GradedAlgebra::standard(base.clone())?;
    let module = QuotientModule { quotient: rp.rees_algebra().clone(), offset: Multidegree::zero(2) };
    let mut res = truncated_minimal_resolution(&algebra, &module, k, window)?;
    let table = res.betti().clone();
    if table.is_exhausted() {
        return Err(AlgebraError::WindowExhausted(format!("Rees resolution needs a window beyond {}", window.max())));
    }
    let mut last = k;
    while last > 0 && table.row(last).is_empty() {
        last -= 1;
    }
    let twists: Vec<Vec<Multidegree>> =
        (0..=last).map(|i| res.generator_degrees(i).iter().map(|g| g.neg()).collect()).collect();
    let differentials = (1..=last).map(|i| res.differential(i)).collect();
    let complex = GradedComplex::new(base, twists, differentials)?;
    debug_assert!((0..=last).all(|i| table.status(i) == RowStatus::Complete));
    Ok(EagonNorthcott { table, complex, rees: rp.rees_algebra().clone() })
}

/// Positive integers `(c, e)` selecting the diagonal `{(cs, es)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiagonalSpec {
    c: i32,
    e: i32,
}

impl DiagonalSpec {
    pub fn new(c: i64, e: i64) -> Result<Self> {
        if c < 1 {
            return Err(AlgebraError::Input("c must be a positive integer".into()));
        }
        if e < 1 {
            return Err(AlgebraError::Input("e must be a positive integer".into()));
        }
        Ok(Self { c: c as i32, e: e as i32 })
    }

    pub fn c(&self) -> i32 {
        self.c
    }

    pub fn e(&self) -> i32 {
        self.e
    }
}

/// The diagonal `Rees(I)_Δ` as a graded algebra, through the minors presentation.
pub fn diagonal_ring(rp: &ReesPresentation, spec: DiagonalSpec) -> Result<GradedAlgebra> {
    GradedAlgebra::diagonal(rp.rees_algebra().clone(), spec.c, spec.e)
}

/// A basis of `(I^{es})_{s(ed+c)}` in `A`, by row reduction of
/// `(monomial of degree sc)·(product of es forms)`.
pub fn diagonal_component_basis(ci: &CompleteIntersectionInput, spec: DiagonalSpec, s: u32) -> Result<Vec<Polynomial>> {
    let ring = ci.ring();
    let s = s as i32;
    let base = ci.base_algebra()?;
    let mut cache = PieceCache::new(base.clone());
    let products = power_products(ci.forms(), (spec.e * s) as usize);
    let degree = Multidegree::single(s * (spec.e * ci.degree() + spec.c));
    let mut vectors = Vec::new();
    let mut candidates = Vec::new();
    for m in monomials_of_degree(ring, &Multidegree::single(s * spec.c)) {
        for p in &products {
            let q = p.mul_term(&m, 1);
            vectors.push(cache.coordinates_of(&q));
            candidates.push(q);
        }
    }
    let ncols = cache.dim(&degree);
    let keep = linalg::independent_subset(ring.field(), ncols, &vectors);
    Ok(keep.into_iter().map(|i| base.normal_form(&candidates[i])).collect())
}

/// All products of `count` forms (with repetition), deduplicated.
fn power_products(forms: &[Polynomial], count: usize) -> Vec<Polynomial> {
    let ring = forms[0].ring().clone();
    let mut out = Vec::new();
    fn rec(forms: &[Polynomial], start: usize, left: usize, acc: Polynomial, out: &mut Vec<Polynomial>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for i in start..forms.len() {
            rec(forms, i, left - 1, &acc * &forms[i], out);
        }
    }
    rec(forms, 0, count, Polynomial::one(&ring), &mut out);
    out
}

/// `K[(I^e)_{ed+c}]` with its generators and a presentation by degree-one variables.
#[derive(Clone, Debug)]
pub struct DiagonalAlgebra {
    pub spec: DiagonalSpec,
    pub generators: Vec<Polynomial>,
    pub presentation: Arc<PresentedAlgebra>,
}

impl DiagonalAlgebra {
    /// Total degrees of a minimal generating set of the presentation ideal.
    pub fn relation_degrees(&self) -> Result<Vec<i64>> {
        let degs = crate::groebner::minimal_generator_degrees(self.presentation.ideal())?;
        Ok(degs.iter().map(|d| d.total()).collect())
    }
}

/// Generators from the degree-one component and their relations by elimination.
/// The Hilbert function of the presentation is compared with component bases for `s ≤ 3`.
pub fn diagonal_algebra(ci: &CompleteIntersectionInput, spec: DiagonalSpec) -> Result<DiagonalAlgebra> {
    let generators = diagonal_component_basis(ci, spec, 1)?;
    let weight = spec.e * ci.degree() + spec.c;
    let field = ci.ring().field();
    let m = generators.len();
    let yvars =
        |deg: i32| (0..m).map(|i| Variable { name: format!("y{}", i + 1), degree: Multidegree::single(deg) }).collect();
    let source = PolyRing::degrevlex(RingDescriptor::new(field, yvars(weight), 1)?);
    let kernel = subalgebra_presentation(&RingMapKernelProblem {
        source,
        target: ci.ring().clone(),
        images: generators.clone(),
        target_relations: ci.base_relations().to_vec(),
    })?;
    let yring = PolyRing::degrevlex(RingDescriptor::new(field, yvars(1), 1)?);
    let relations = kernel.generators().iter().map(|g| g.to_ring(&yring)).collect::<Result<Vec<_>>>()?;
    let presentation = Arc::new(PresentedAlgebra::new(&yring, relations, format!("diag({},{})", spec.c, spec.e))?);
    for s in 0..=3u32 {
        let expected = diagonal_component_basis(ci, spec, s)?.len();
        let got = crate::graded::hilbert_function(&presentation, &Multidegree::single(s as i32));
        if got != expected {
            return Err(AlgebraError::Structural(format!(
                "presentation has dimension {got} in degree {s}, component has {expected}"
            )));
        }
    }
    Ok(DiagonalAlgebra { spec, generators, presentation })
}

/// `R(-a,-b)_Δ ≅ R(α,β)_Δ(-s₀)` with `s₀ = max(⌈a/c⌉, ⌈b/e⌉)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShiftNormalization {
    pub residual: (i32, i32),
    pub external: i32,
}

pub fn shifted_diagonal_normalize(a: i32, b: i32, spec: DiagonalSpec) -> ShiftNormalization {
    let s0 = ceil_div(a, spec.c).max(ceil_div(b, spec.e));
    ShiftNormalization { residual: (-a + spec.c * s0, -b + spec.e * s0), external: s0 }
}

pub fn ceil_div(a: i32, b: i32) -> i32 {
    let q = a.div_euclid(b);
    if a.rem_euclid(b) == 0 {
        q
    } else {
        q + 1
    }
}

/// `V_A(m,k) = ⊕_i A_{im+k}` over the Veronese `A^(m)`.
pub fn veronese_module(a: Arc<PresentedAlgebra>, m: i32, k: i32) -> Result<(GradedAlgebra, VeroneseModule)> {
    let module = VeroneseModule::new(a.clone(), m, k)?;
    Ok((GradedAlgebra::veronese(a, m)?, module))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::complex_homology_dims;

    fn f() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn single_minor_for_two_linear_forms() {
        let ci = CompleteIntersectionInput::powers(f(), 2, 2, 1).unwrap();
        let rp = rees_presentation(&ci).unwrap();
        assert_eq!(rp.minors().len(), 1);
        assert_eq!(rp.minors()[0], crate::parse::parse_polynomial("x1*t2 - x2*t1", rp.ring()).unwrap());
    }

    #[test]
    fn signed_minors_are_syzygies() {
        let ci = CompleteIntersectionInput::powers(f(), 3, 3, 2).unwrap();
        let rp = rees_presentation(&ci).unwrap();
        let h = rp.minors();
        let fs = rp.forms();
        let fh = &(&(&fs[0] * &h[0]) + &(&fs[1] * &h[1])) + &(&fs[2] * &h[2]);
        let th = &(&(&rp.t(0) * &h[0]) + &(&rp.t(1) * &h[1])) + &(&rp.t(2) * &h[2]);
        assert!(fh.is_zero() && th.is_zero());
        assert_eq!(h[0], crate::parse::parse_polynomial("x2^2*t3 - x3^2*t2", rp.ring()).unwrap());
    }

    #[test]
    fn rejects_dependent_forms() {
        let r = PolyRing::degrevlex(RingDescriptor::polynomial_ring(f(), "x", 3).unwrap());
        let x = |i| Polynomial::variable(&r, i).pow(2);
        let err = CompleteIntersectionInput::new(&r, vec![x(0), x(0), x(2)]).unwrap_err();
        assert!(err.to_string().contains("regular sequence"));
        let mixed = CompleteIntersectionInput::new(&r, vec![x(0), Polynomial::variable(&r, 1)]).unwrap_err();
        assert!(mixed.to_string().contains("forms must share degree d"));
    }

    #[test]
    fn complex_f_shifts_and_homology() {
        let ci = CompleteIntersectionInput::powers(f(), 3, 3, 2).unwrap();
        let rp = rees_presentation(&ci).unwrap();
        let cf = build_complex_f(&rp, 3).unwrap();
        let twists: Vec<Multidegree> = cf.modules.iter().map(|m| m.twists[0].clone()).collect();
        assert_eq!(
            twists,
            vec![Multidegree::bi(0, 0), Multidegree::bi(-2, -1), Multidegree::bi(-2, -2), Multidegree::bi(-4, -3)]
        );
        assert_eq!(build_complex_f(&rp, 0).unwrap().modules.len(), 1);
        let h = complex_homology_dims(&cf, &Multidegree::bi(4, 1));
        assert_eq!(h[1], expected_f_homology_dim(1, &Multidegree::bi(4, 1), 2, 3));
        assert_eq!(h[1], 1);
        assert_eq!(expected_f_homology_dim(1, &Multidegree::bi(3, 1), 2, 3), 0);
        assert_eq!(expected_f_homology_dim(2, &Multidegree::bi(6, 2), 2, 3), 0);
    }

    #[test]
    fn component_bases() {
        let ci = CompleteIntersectionInput::powers(f(), 3, 3, 2).unwrap();
        let spec = DiagonalSpec::new(1, 1).unwrap();
        assert_eq!(diagonal_component_basis(&ci, spec, 0).unwrap().len(), 1);
        let b1 = diagonal_component_basis(&ci, spec, 1).unwrap();
        assert_eq!(b1.len(), 9);
        assert!(b1.iter().all(|p| p.len() == 1));
    }

    #[test]
    fn normalization_examples() {
        let s = |c, e| DiagonalSpec::new(c, e).unwrap();
        assert_eq!(shifted_diagonal_normalize(0, 0, s(1, 1)), ShiftNormalization { residual: (0, 0), external: 0 });
        assert_eq!(shifted_diagonal_normalize(3, 1, s(2, 1)), ShiftNormalization { residual: (1, 1), external: 2 });
        assert_eq!(shifted_diagonal_normalize(2, 1, s(1, 1)), ShiftNormalization { residual: (0, 1), external: 2 });
        assert!(DiagonalSpec::new(0, 1).unwrap_err().to_string().contains("c must be a positive integer"));
    }

    #[test]
    fn veronese_module_dimensions() {
        let r = PolyRing::degrevlex(RingDescriptor::polynomial_ring(f(), "x", 2).unwrap());
        let a = Arc::new(PresentedAlgebra::polynomial_ring(&r, "K[x1,x2]"));
        let (alg, m) = veronese_module(a.clone(), 2, 1).unwrap();
        let dims: Vec<usize> =
            (0..3).map(|i| crate::graded::hilbert_function(&a, &Multidegree::single(2 * i + m.k))).collect();
        assert_eq!(dims, vec![2, 4, 6]);
        assert_eq!(alg.hilbert(&Multidegree::single(1)), 3);
        assert!(veronese_module(a, 2, 2).is_err());
    }
}
