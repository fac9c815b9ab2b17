//! Truncated minimal graded free resolutions, Betti tables and derived invariants.
//!
//! Algebras are graded pieces of a presented quotient ring `Q`: `A_δ = Q_{L(δ)}` for a
//! linear degree map `L`. Modules are `M_δ = Q'_{L(δ) + offset}` for a further quotient
//! `Q'` of the same ambient ring. Resolutions are built one homological step at a time,
//! degree by degree, from kernels of assembled multiplication matrices.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;
use std::sync::Arc;

use num_rational::Ratio;

use crate::error::{AlgebraError, Result};
use crate::graded::{DegreeWindow, PieceCache, PresentedAlgebra};
use crate::linalg::{self, Echelon, SparseVec};
use crate::poly::Polynomial;
use crate::ring::{Monomial, Multidegree};

/// Linear map from algebra degrees to degrees of the underlying quotient ring,
/// given by the images of the unit vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeMap {
    images: Vec<Multidegree>,
}

impl DegreeMap {
    pub fn identity(rank: usize) -> Self {
        let images = (0..rank)
            .map(|j| {
                let mut v = vec![0; rank];
                v[j] = 1;
                Multidegree::new(v)
            })
            .collect();
        Self { images }
    }

    /// `s ↦ (c·s, e·s)`
    pub fn diagonal(c: i32, e: i32) -> Self {
        Self { images: vec![Multidegree::bi(c, e)] }
    }

    /// `s ↦ m·s`
    pub fn scale(m: i32) -> Self {
        Self { images: vec![Multidegree::single(m)] }
    }

    pub fn source_rank(&self) -> usize {
        self.images.len()
    }

    pub fn target_rank(&self) -> usize {
        self.images[0].rank()
    }

    pub fn unit_image(&self, j: usize) -> &Multidegree {
        &self.images[j]
    }

    pub fn apply(&self, d: &Multidegree) -> Multidegree {
        let mut out = Multidegree::zero(self.target_rank());
        for (k, img) in d.components().iter().zip(&self.images) {
            out = out.add(&img.scale(*k));
        }
        out
    }

    fn is_identity(&self) -> bool {
        *self == Self::identity(self.images.len())
    }
}

/// `A_δ = Q_{L(δ)}`, generated as an algebra by its pieces in unit degrees.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    quotient: Arc<PresentedAlgebra>,
    map: DegreeMap,
    label: String,
}

impl GradedAlgebra {
    /// `Q` with its own grading; every variable must have a unit degree.
    pub fn standard(q: Arc<PresentedAlgebra>) -> Result<Self> {
        let rank = q.grading_rank();
        let map = DegreeMap::identity(rank);
        for v in q.ring().descriptor().variables() {
            if !map.images.contains(&v.degree) {
                return Err(AlgebraError::Input(format!(
                    "variable {} has degree {}, expected a unit degree",
                    v.name, v.degree
                )));
            }
        }
        let label = q.label().to_string();
        Ok(Self { quotient: q, map, label })
    }

    /// The `(c,e)`-diagonal `⊕_s Q_{(cs,es)}` of a standard bigraded `Q`.
    pub fn diagonal(q: Arc<PresentedAlgebra>, c: i32, e: i32) -> Result<Self> {
        if c < 1 || e < 1 {
            return Err(AlgebraError::Input("diagonal needs positive c and e".into()));
        }
        Self::standard(q.clone())?;
        if q.grading_rank() != 2 {
            return Err(AlgebraError::Input("diagonal needs a bigraded algebra".into()));
        }
        let label = format!("{}_({c},{e})", q.label());
        Ok(Self { quotient: q, map: DegreeMap::diagonal(c, e), label })
    }

    /// The Veronese `⊕_s Q_{ms}` of a standard graded `Q`.
    pub fn veronese(q: Arc<PresentedAlgebra>, m: i32) -> Result<Self> {
        if m < 1 {
            return Err(AlgebraError::Input("Veronese degree must be positive".into()));
        }
        Self::standard(q.clone())?;
        if q.grading_rank() != 1 {
            return Err(AlgebraError::Input("Veronese needs a singly graded algebra".into()));
        }
        let label = format!("{}^({m})", q.label());
        Ok(Self { quotient: q, map: DegreeMap::scale(m), label })
    }

    pub fn quotient(&self) -> &Arc<PresentedAlgebra> {
        &self.quotient
    }

    pub fn degree_map(&self) -> &DegreeMap {
        &self.map
    }

    pub fn grading_rank(&self) -> usize {
        self.map.source_rank()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.map.is_identity() && self.quotient.is_polynomial_ring()
    }

    pub fn hilbert(&self, d: &Multidegree) -> usize {
        crate::graded::hilbert_function(&self.quotient, &self.map.apply(d))
    }
}

/// A graded module over a [`GradedAlgebra`] of the form `M_δ = Q'_{L(δ) + offset}`.
pub trait GradedModule {
    /// The quotient `Q'` of the algebra's ambient ring carrying the module.
    fn quotient(&self, algebra: &GradedAlgebra) -> Result<Arc<PresentedAlgebra>>;
    /// Offset added to `L(δ)`.
    fn offset(&self, algebra: &GradedAlgebra) -> Multidegree;
    fn label(&self) -> String;
}

/// `K = A/A_+`.
#[derive(Clone, Copy, Debug, Default)]
pub struct ResidueField;

impl GradedModule for ResidueField {
    fn quotient(&self, algebra: &GradedAlgebra) -> Result<Arc<PresentedAlgebra>> {
        let q = algebra.quotient();
        let ring = q.ring();
        let vars = (0..ring.nvars()).map(|i| Polynomial::variable(ring, i)).collect();
        Ok(Arc::new(PresentedAlgebra::new(ring, vars, "K")?))
    }

    fn offset(&self, algebra: &GradedAlgebra) -> Multidegree {
        Multidegree::zero(algebra.degree_map().target_rank())
    }

    fn label(&self) -> String {
        "K".into()
    }
}

/// `Q'(offset)` restricted along the algebra's degree map.
#[derive(Clone, Debug)]
pub struct QuotientModule {
    pub quotient: Arc<PresentedAlgebra>,
    pub offset: Multidegree,
}

impl GradedModule for QuotientModule {
    fn quotient(&self, _: &GradedAlgebra) -> Result<Arc<PresentedAlgebra>> {
        Ok(self.quotient.clone())
    }

    fn offset(&self, _: &GradedAlgebra) -> Multidegree {
        self.offset.clone()
    }

    fn label(&self) -> String {
        if self.offset.is_zero() {
            self.quotient.label().to_string()
        } else {
            format!("{}({})", self.quotient.label(), self.offset)
        }
    }
}

/// `R(-a,-b)_Δ = ⊕_s R_{(cs-a, es-b)}` as a module over the diagonal of `R`.
#[derive(Clone, Debug)]
pub struct DiagonalModule {
    pub quotient: Arc<PresentedAlgebra>,
    pub a: i32,
    pub b: i32,
}

impl GradedModule for DiagonalModule {
    fn quotient(&self, _: &GradedAlgebra) -> Result<Arc<PresentedAlgebra>> {
        Ok(self.quotient.clone())
    }

    fn offset(&self, _: &GradedAlgebra) -> Multidegree {
        Multidegree::bi(-self.a, -self.b)
    }

    fn label(&self) -> String {
        format!("{}(-{},-{})_diag", self.quotient.label(), self.a, self.b)
    }
}

/// `V_A(m,k) = ⊕_i A_{im+k}` over the Veronese `A^(m)`.
#[derive(Clone, Debug)]
pub struct VeroneseModule {
    pub quotient: Arc<PresentedAlgebra>,
    pub m: i32,
    pub k: i32,
}

impl VeroneseModule {
    pub fn new(quotient: Arc<PresentedAlgebra>, m: i32, k: i32) -> Result<Self> {
        if m < 1 || k < 0 || k >= m {
            return Err(AlgebraError::Input(format!("Veronese module needs 0 <= k < m, got m={m}, k={k}")));
        }
        Ok(Self { quotient, m, k })
    }
}

impl GradedModule for VeroneseModule {
    fn quotient(&self, _: &GradedAlgebra) -> Result<Arc<PresentedAlgebra>> {
        Ok(self.quotient.clone())
    }

    fn offset(&self, _: &GradedAlgebra) -> Multidegree {
        Multidegree::single(self.k)
    }

    fn label(&self) -> String {
        format!("V({},{})", self.m, self.k)
    }
}

/// Whether a Betti row is fully determined inside the window.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowStatus {
    Complete,
    /// The previous step has generators but the window cannot show this step's first syzygies.
    WindowExhausted,
}

/// `β_{i,δ}` for `i ≤ max_index` and `δ` in a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Multidegree), usize>,
    max_index: usize,
    window: DegreeWindow,
    status: Vec<RowStatus>,
}

impl BettiTable {
    pub fn get(&self, i: usize, d: &Multidegree) -> usize {
        self.entries.get(&(i, d.clone())).copied().unwrap_or(0)
    }

    pub fn max_index(&self) -> usize {
        self.max_index
    }

    pub fn window(&self) -> &DegreeWindow {
        &self.window
    }

    pub fn status(&self, i: usize) -> RowStatus {
        self.status[i]
    }

    pub fn is_exhausted(&self) -> bool {
        self.status.contains(&RowStatus::WindowExhausted)
    }

    /// Nonzero entries of row `i`, in graded order.
    pub fn row(&self, i: usize) -> Vec<(Multidegree, usize)> {
        let mut r: Vec<(Multidegree, usize)> =
            self.entries.iter().filter(|((j, _), _)| *j == i).map(|((_, d), &b)| (d.clone(), b)).collect();
        r.sort_by(|a, b| a.0.graded_cmp(&b.0));
        r
    }

    pub fn total(&self, i: usize) -> usize {
        self.row(i).iter().map(|(_, b)| b).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &Multidegree, usize)> {
        self.entries.iter().map(|((i, d), &b)| (*i, d, b))
    }

    /// The same table cut at homological index `n`.
    pub fn restrict(&self, n: usize) -> BettiTable {
        let n = n.min(self.max_index);
        BettiTable {
            entries: self.entries.iter().filter(|((i, _), _)| *i <= n).map(|(k, v)| (k.clone(), *v)).collect(),
            max_index: n,
            window: self.window.clone(),
            status: self.status[..=n].to_vec(),
        }
    }

    /// Builds a table directly (used for hand-made examples).
    pub fn from_entries(
        entries: impl IntoIterator<Item = (usize, Multidegree, usize)>,
        max_index: usize,
        window: DegreeWindow,
    ) -> BettiTable {
        let entries = entries.into_iter().filter(|e| e.2 > 0).map(|(i, d, b)| ((i, d), b)).collect();
        BettiTable { entries, max_index, window, status: vec![RowStatus::Complete; max_index + 1] }
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..=self.max_index {
            write!(f, "{i}:")?;
            for (d, b) in self.row(i) {
                write!(f, " {d}^{b}")?;
            }
            if self.status[i] == RowStatus::WindowExhausted {
                write!(f, " [window exhausted]")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Vector space `⊕_b Q_{L(δ) + offset_b}` with Q-multiplication, indexed block by block.
struct BlockSpace {
    cache: Rc<RefCell<PieceCache>>,
    map: DegreeMap,
    offsets: Vec<Multidegree>,
    layouts: HashMap<Multidegree, Rc<Vec<u32>>>,
}

impl BlockSpace {
    /// Start index of every block at algebra degree `d`, plus the total dimension at the end.
    fn layout(&mut self, d: &Multidegree) -> Rc<Vec<u32>> {
        if let Some(l) = self.layouts.get(d) {
            return l.clone();
        }
        let base = self.map.apply(d);
        let mut cache = self.cache.borrow_mut();
        let mut starts = Vec::with_capacity(self.offsets.len() + 1);
        let mut total = 0u32;
        for off in &self.offsets {
            starts.push(total);
            total += cache.dim(&base.add(off)) as u32;
        }
        starts.push(total);
        let l = Rc::new(starts);
        self.layouts.insert(d.clone(), l.clone());
        l
    }

    fn dim(&mut self, d: &Multidegree) -> usize {
        *self.layout(d).last().unwrap() as usize
    }

    /// `m·v` for a Q-monomial `m` of Q-degree `L(step)`, `v` at algebra degree `d`.
    fn mul(&mut self, m: &Monomial, step: &Multidegree, d: &Multidegree, v: &[(u32, u32)]) -> SparseVec {
        let src = self.layout(d);
        let dst_deg = d.add(step);
        let dst = self.layout(&dst_deg);
        let base = self.map.apply(d);
        let mut cache = self.cache.borrow_mut();
        let mut out = Vec::new();
        let mut k = 0;
        while k < v.len() {
            let b = src.partition_point(|&s| s <= v[k].0) - 1;
            let end = src[b + 1];
            let mut local = Vec::new();
            while k < v.len() && v[k].0 < end {
                local.push((v[k].0 - src[b], v[k].1));
                k += 1;
            }
            let prod = cache.mul_monomial(m, &base.add(&self.offsets[b]), &local);
            out.extend(prod.into_iter().map(|(i, c)| (i + dst[b], c)));
        }
        out
    }

    /// Converts a vector at degree `d` to one polynomial per block.
    fn polynomials(&mut self, d: &Multidegree, v: &[(u32, u32)]) -> Vec<Polynomial> {
        let lay = self.layout(d);
        let base = self.map.apply(d);
        let mut cache = self.cache.borrow_mut();
        let ring = cache.algebra().ring().clone();
        (0..self.offsets.len())
            .map(|b| {
                let local: SparseVec =
                    v.iter().filter(|(i, _)| *i >= lay[b] && *i < lay[b + 1]).map(|&(i, c)| (i - lay[b], c)).collect();
                let qd = base.add(&self.offsets[b]);
                if local.is_empty() || !qd.is_nonnegative() {
                    Polynomial::zero(&ring)
                } else {
                    cache.polynomial(&qd, &local)
                }
            })
            .collect()
    }
}

/// One free module `F_i` of a resolution: generator degrees and images in the previous term.
#[derive(Clone, Debug)]
pub struct ResolutionStep {
    pub generators: Vec<(Multidegree, SparseVec)>,
}

/// A truncated minimal free resolution with its Betti table.
pub struct Resolution {
    algebra: GradedAlgebra,
    table: BettiTable,
    steps: Vec<ResolutionStep>,
    spaces: Vec<BlockSpace>,
}

impl Resolution {
    pub fn betti(&self) -> &BettiTable {
        &self.table
    }

    pub fn algebra(&self) -> &GradedAlgebra {
        &self.algebra
    }

    pub fn steps(&self) -> &[ResolutionStep] {
        &self.steps
    }

    /// Generator degrees of `F_i`.
    pub fn generator_degrees(&self, i: usize) -> Vec<Multidegree> {
        self.steps[i].generators.iter().map(|(d, _)| d.clone()).collect()
    }

    /// Matrix of `F_i → F_{i-1}` (`i ≥ 1`) over the quotient ring, one row per generator of `F_{i-1}`.
    pub fn differential(&mut self, i: usize) -> Vec<Vec<Polynomial>> {
        assert!(i >= 1 && i < self.steps.len(), "differential index out of range");
        let gens = self.steps[i].generators.clone();
        let rows = self.steps[i - 1].generators.len();
        let ring = self.algebra.quotient().ring().clone();
        let mut mat = vec![vec![Polynomial::zero(&ring); gens.len()]; rows];
        for (c, (d, v)) in gens.iter().enumerate() {
            for (r, p) in self.spaces[i].polynomials(d, v).into_iter().enumerate() {
                mat[r][c] = p;
            }
        }
        mat
    }

    /// No differential entry is a nonzero constant.
    pub fn is_minimal(&mut self) -> bool {
        for i in 1..self.steps.len() {
            let prev: Vec<Multidegree> = self.generator_degrees(i - 1);
            for (d, v) in &self.steps[i].generators {
                let lay = self.spaces[i].layout(d);
                for (b, g) in prev.iter().enumerate() {
                    if g == d && v.iter().any(|(k, _)| *k >= lay[b] && *k < lay[b + 1]) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

struct Level {
    space: usize,
    kernel_dims: HashMap<Multidegree, usize>,
}

/// Resolves `module` over `algebra` up to homological index `max_index`, inside `window`.
pub fn truncated_minimal_resolution(
    algebra: &GradedAlgebra,
    module: &dyn GradedModule,
    max_index: usize,
    window: &DegreeWindow,
) -> Result<Resolution> {
    let rank = algebra.grading_rank();
    if window.max().rank() != rank {
        return Err(AlgebraError::Input(format!(
            "window {} has rank {}, algebra grading has rank {rank}",
            window.max(),
            window.max().rank()
        )));
    }
    let field = algebra.quotient().ring().field();
    let mq = module.quotient(algebra)?;
    if mq.ring().descriptor() != algebra.quotient().ring().descriptor() {
        return Err(AlgebraError::RingMismatch("module and algebra live over different rings".into()));
    }
    if !algebra.quotient().ideal().generators().iter().all(|g| mq.ideal().contains(g)) {
        return Err(AlgebraError::Input("module quotient does not contain the algebra's relations".into()));
    }
    let qcache = Rc::new(RefCell::new(PieceCache::new(algebra.quotient().clone())));
    let mcache = if Arc::ptr_eq(&mq, algebra.quotient()) {
        qcache.clone()
    } else {
        Rc::new(RefCell::new(PieceCache::new(mq.clone())))
    };
    let map = algebra.degree_map().clone();

    // algebra generators: Q-basis monomials in each unit degree
    let units: Vec<Multidegree> = (0..rank)
        .map(|j| {
            let mut v = vec![0; rank];
            v[j] = 1;
            Multidegree::new(v)
        })
        .collect();
    let algebra_gens: Vec<(Multidegree, Vec<Monomial>)> = units
        .iter()
        .map(|u| (u.clone(), qcache.borrow_mut().piece(&map.apply(u)).basis.clone()))
        .collect();

    let degrees = window.degrees();
    let mut spaces = vec![BlockSpace {
        cache: mcache,
        map: map.clone(),
        offsets: vec![module.offset(algebra)],
        layouts: HashMap::new(),
    }];
    let mut prev = Level { space: 0, kernel_dims: HashMap::new() };
    for d in &degrees {
        let dim = spaces[0].dim(d);
        prev.kernel_dims.insert(d.clone(), dim);
    }
    let mut steps: Vec<ResolutionStep> = Vec::new();
    let mut entries = BTreeMap::new();
    let mut status = Vec::new();

    for i in 0..=max_index {
        let target = prev.space;
        let mut gens: Vec<(Multidegree, SparseVec)> = Vec::new();
        let mut image: HashMap<Multidegree, Vec<SparseVec>> = HashMap::new();
        for d in &degrees {
            let kd = prev.kernel_dims[d];
            let tdim = spaces[target].dim(d);
            let mut ech = Echelon::new(field, tdim);
            'fill: for (u, ys) in &algebra_gens {
                if ech.rank() == kd {
                    break;
                }
                let below = d.sub(u);
                let Some(ws) = image.get(&below) else { continue };
                for w in ws {
                    for y in ys {
                        let v = spaces[target].mul(y, u, &below, w);
                        ech.insert(&v);
                        if ech.rank() == kd {
                            break 'fill;
                        }
                    }
                }
            }
            let beta = kd.checked_sub(ech.rank()).ok_or_else(|| {
                AlgebraError::Structural(format!("image exceeds kernel at step {i}, degree {d}"))
            })?;
            if beta > 0 {
                let kernel = if i == 0 {
                    (0..tdim as u32).map(|k| vec![(k, 1)]).collect()
                } else {
                    kernel_at(&mut spaces, prev.space, &steps[i - 1], &algebra_gens, &qcache, &map, d, field)
                };
                let mut found = 0;
                for k in kernel {
                    if ech.insert(&k) {
                        gens.push((d.clone(), k));
                        found += 1;
                        if found == beta {
                            break;
                        }
                    }
                }
                if found != beta {
                    return Err(AlgebraError::Structural(format!(
                        "kernel at step {i}, degree {d} is smaller than predicted"
                    )));
                }
                entries.insert((i, d.clone()), beta);
            }
            let needed = units.iter().any(|u| window.contains(&d.add(u)));
            if needed && ech.rank() > 0 {
                image.insert(d.clone(), ech.into_rows());
            }
        }

        let row_status = if i > 0 && gens.is_empty() && !steps[i - 1].generators.is_empty() {
            let fits = steps[i - 1].generators.iter().all(|(g, _)| units.iter().all(|u| window.contains(&g.add(u))));
            if fits {
                RowStatus::Complete
            } else {
                RowStatus::WindowExhausted
            }
        } else {
            RowStatus::Complete
        };
        status.push(row_status);

        // the free module F_i becomes the next target
        let offsets: Vec<Multidegree> = gens.iter().map(|(g, _)| map.apply(g).neg()).collect();
        spaces.push(BlockSpace { cache: qcache.clone(), map: map.clone(), offsets, layouts: HashMap::new() });
        let space = spaces.len() - 1;
        let mut kernel_dims = HashMap::new();
        for d in &degrees {
            let fd = spaces[space].dim(d);
            kernel_dims.insert(d.clone(), fd - prev.kernel_dims[d]);
        }
        steps.push(ResolutionStep { generators: gens });
        prev = Level { space, kernel_dims };
    }

    let table = BettiTable { entries, max_index, window: window.clone(), status };
    Ok(Resolution { algebra: algebra.clone(), table, steps, spaces })
}

/// Kernel of `F_{i-1} → T` at degree `d`, in the block coordinates of `F_{i-1}`.
#[allow(clippy::too_many_arguments)]
fn kernel_at(
    spaces: &mut [BlockSpace],
    free_space: usize,
    step: &ResolutionStep,
    algebra_gens: &[(Multidegree, Vec<Monomial>)],
    qcache: &Rc<RefCell<PieceCache>>,
    map: &DegreeMap,
    d: &Multidegree,
    field: crate::field::PrimeField,
) -> Vec<SparseVec> {
    let _ = algebra_gens;
    let target = free_space - 1;
    let nrows = spaces[target].dim(d);
    let mut columns = Vec::new();
    for (g, v) in &step.generators {
        let rel = d.sub(g);
        if !rel.is_nonnegative() {
            continue;
        }
        let basis = qcache.borrow_mut().piece(&map.apply(&rel)).basis.clone();
        for a in &basis {
            columns.push(spaces[target].mul(a, &rel, g, v));
        }
    }
    debug_assert_eq!(columns.len(), spaces[free_space].dim(d));
    linalg::kernel(field, nrows, &columns)
}

/// Top degrees of each Tor row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TBounds {
    /// Per homological index: componentwise maximum degree, `None` for an empty row.
    pub rows: Vec<Option<Multidegree>>,
}

impl TBounds {
    /// Single-graded `t_i`, `None` meaning `-∞`.
    pub fn t(&self, i: usize) -> Option<i64> {
        self.rows.get(i).cloned().flatten().map(|d| d.components()[0] as i64)
    }

    /// Component `k` of the maxima in row `i`.
    pub fn component(&self, i: usize, k: usize) -> Option<i64> {
        self.rows.get(i).cloned().flatten().map(|d| d.components()[k] as i64)
    }
}

pub fn t_bounds(table: &BettiTable) -> TBounds {
    let rows = (0..=table.max_index)
        .map(|i| {
            let row = table.row(i);
            let first = row.first()?.0.clone();
            Some(row.iter().fold(first, |acc, (d, _)| {
                Multidegree::new(acc.components().iter().zip(d.components()).map(|(a, b)| *a.max(b)).collect())
            }))
        })
        .collect();
    TBounds { rows }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityReport {
    /// `max (t_i - i)` over computed rows; `None` when every row is empty.
    pub value: Option<i64>,
    pub max_index: usize,
    pub window: DegreeWindow,
    /// True only over a polynomial ring whose resolution ended inside the window.
    pub certified_upper: bool,
}

pub fn truncated_regularity(table: &BettiTable, algebra_is_polynomial: bool) -> Result<RegularityReport> {
    if table.window.max().rank() != 1 {
        return Err(AlgebraError::Input("regularity needs a single grading".into()));
    }
    let tb = t_bounds(table);
    let value = (0..=table.max_index).filter_map(|i| tb.t(i).map(|t| t - i as i64)).max();
    let terminated = (1..=table.max_index)
        .any(|i| table.row(i).is_empty() && table.status(i) == RowStatus::Complete && !table.row(i - 1).is_empty());
    Ok(RegularityReport {
        value,
        max_index: table.max_index,
        window: table.window.clone(),
        certified_upper: algebra_is_polynomial && terminated,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KoszulStatus {
    PassUpTo(usize),
    /// Nonzero `β_{i,j}` with `j ≠ i`.
    Fail { index: usize, degree: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulVerdict {
    pub status: KoszulStatus,
    pub max_index: usize,
    pub window: DegreeWindow,
    pub characteristic: u32,
    pub table: BettiTable,
}

impl KoszulVerdict {
    pub fn passed(&self) -> bool {
        matches!(self.status, KoszulStatus::PassUpTo(_))
    }
}

/// Checks `β_{i,j}(K) = 0` for `j ≠ i`, `i ≤ max_index`, `j ≤ window`.
pub fn koszul_test(algebra: &GradedAlgebra, max_index: usize, window: Option<i32>) -> Result<KoszulVerdict> {
    if algebra.grading_rank() != 1 {
        return Err(AlgebraError::Input("Koszul test needs a singly graded algebra".into()));
    }
    let window = DegreeWindow::single(window.unwrap_or(max_index as i32 + 1));
    let res = truncated_minimal_resolution(algebra, &ResidueField, max_index, &window)?;
    let table = res.betti().clone();
    if table.is_exhausted() {
        return Err(AlgebraError::WindowExhausted(format!("Koszul test on {} with window {}", algebra.label(), window.max())));
    }
    let witness = table
        .entries()
        .filter(|(i, d, _)| d.components()[0] as i64 != *i as i64)
        .map(|(i, d, _)| (i, d.components()[0] as i64))
        .min();
    let status = match witness {
        Some((index, degree)) => KoszulStatus::Fail { index, degree },
        None => KoszulStatus::PassUpTo(max_index),
    };
    Ok(KoszulVerdict {
        status,
        max_index,
        window,
        characteristic: algebra.quotient().ring().field().characteristic(),
        table,
    })
}

/// One line of a bound check `t_i(H_0) ≤ max(α, β)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TBoundLine {
    pub index: usize,
    pub lhs: Option<i64>,
    pub alpha: Option<i64>,
    pub beta: Option<i64>,
    pub holds: bool,
}

/// For a complex `… → M_1 → M_0` with homology `H_j`: checks
/// `t_i(H_0) ≤ max( sup_j t_{i-j}(M_j), sup_{j≥1} t_{i-j-1}(H_j) )` for `i ≤ i_max`.
/// `modules[j]` and `homology[j]` hold the t-values of `M_j` and `H_j` (`homology[0]` is `H_0`).
pub fn complex_t_bound_check(modules: &[TBounds], homology: &[TBounds], i_max: usize) -> Vec<TBoundLine> {
    let t = |tb: Option<&TBounds>, i: i64| -> Option<i64> {
        if i < 0 {
            return None;
        }
        tb.and_then(|b| b.t(i as usize))
    };
    (0..=i_max)
        .map(|i| {
            let lhs = t(homology.first(), i as i64);
            let alpha = (0..=i).filter_map(|j| t(modules.get(j), i as i64 - j as i64)).max();
            let beta = (1..i).filter_map(|j| t(homology.get(j), i as i64 - j as i64 - 1)).max();
            let bound = alpha.max(beta);
            let holds = match (lhs, bound) {
                (None, _) => true,
                (Some(_), None) => false,
                (Some(l), Some(b)) => l <= b,
            };
            TBoundLine { index: i, lhs, alpha, beta, holds }
        })
        .collect()
}

/// `c₀ = max_{i≥1} t_{i,1}/(i+1)`, `e₀ = max_{i≥1} t_{i,2}/(i+1)` from a bigraded table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thresholds {
    pub c0: Ratio<i64>,
    pub e0: Ratio<i64>,
    pub max_index: usize,
    /// Total-degree regularity of the same table.
    pub regularity: Option<i64>,
}

impl Thresholds {
    /// `(reg - 1)/2`.
    pub fn regularity_bound(&self) -> Option<Ratio<i64>> {
        self.regularity.map(|r| Ratio::new(r - 1, 2))
    }

    /// `c₀ ≤ (reg+1)/2` and `e₀ ≤ (reg+1)/2`, which follow from `t_i ≤ reg + i`.
    pub fn consistent_with_regularity(&self) -> bool {
        match self.regularity {
            None => true,
            Some(r) => {
                let cap = Ratio::new(r + 1, 2);
                self.c0 <= cap && self.e0 <= cap
            }
        }
    }
}

pub fn koszul_thresholds(table: &BettiTable) -> Result<Thresholds> {
    if table.window.max().rank() != 2 {
        return Err(AlgebraError::Input("thresholds need a bigraded table".into()));
    }
    let tb = t_bounds(table);
    let mut c0 = Ratio::from_integer(0);
    let mut e0 = Ratio::from_integer(0);
    for i in 1..=table.max_index {
        if let (Some(a), Some(b)) = (tb.component(i, 0), tb.component(i, 1)) {
            c0 = c0.max(Ratio::new(a, i as i64 + 1));
            e0 = e0.max(Ratio::new(b, i as i64 + 1));
        }
    }
    let regularity = (0..=table.max_index)
        .filter_map(|i| table.row(i).iter().map(|(d, _)| d.total() - i as i64).max())
        .max();
    Ok(Thresholds { c0, e0, max_index: table.max_index, regularity })
}
