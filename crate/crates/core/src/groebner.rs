//! Buchberger's algorithm and the ideal operations built on it.

use std::cmp::Ordering;
use std::sync::OnceLock;

use crate::error::{AlgebraError, Result};
use crate::poly::{same_ring, Polynomial};
use crate::ring::{Monomial, MonomialOrder, Multidegree, PolyRing, RingDescriptor, RingRef, Variable};

type Terms = Vec<(Monomial, u32)>;

/// A reduced, monic Gröbner basis, sorted by ascending leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: RingRef,
    polys: Vec<Polynomial>,
    heads: Vec<(Monomial, u64)>,
}

impl GroebnerBasis {
    fn from_polys(ring: &RingRef, mut polys: Vec<Polynomial>) -> Self {
        polys.sort_by(|a, b| ring.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        let heads = polys
            .iter()
            .map(|g| {
                let m = g.leading_monomial().unwrap().clone();
                let mask = m.support_mask();
                (m, mask)
            })
            .collect();
        Self { ring: ring.clone(), polys, heads }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.heads.iter().map(|(m, _)| m)
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.polys.iter().any(|g| g.is_unit())
    }

    /// Index of some basis element whose head divides `m`.
    #[inline]
    pub fn divisor_of(&self, m: &Monomial) -> Option<usize> {
        find_divisor(&self.heads, m)
    }

    /// True when `m` is a standard monomial (no head divides it).
    pub fn is_standard(&self, m: &Monomial) -> bool {
        self.divisor_of(m).is_none()
    }

    /// Fully reduced remainder of `f`.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let f = f.to_ring(&self.ring).expect("normal form across incompatible rings");
        let ring = self.ring.clone();
        let terms = reduce_terms(&ring, f.into_terms(), |m| {
            self.divisor_of(m).map(|k| &self.polys[k])
        });
        Polynomial::from_sorted_unchecked(&ring, terms)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }
}

fn find_divisor(heads: &[(Monomial, u64)], m: &Monomial) -> Option<usize> {
    let mask = m.support_mask();
    heads.iter().position(|(h, hm)| hm & !mask == 0 && h.divides(m))
}

/// `a - c*q*b_tail` where `b` is monic and its head is skipped.
fn sub_scaled(ring: &PolyRing, a: &[(Monomial, u32)], b_tail: &[(Monomial, u32)], q: &Monomial, c: u32) -> Terms {
    let field = ring.field();
    let nc = field.neg(c);
    let mut out = Vec::with_capacity(a.len() + b_tail.len());
    let (mut i, mut j) = (0, 0);
    let mut bj: Option<Monomial> = b_tail.first().map(|(m, _)| m.mul(q));
    while i < a.len() {
        let Some(bm) = bj.as_ref() else { break };
        match ring.compare(&a[i].0, bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((bj.take().unwrap(), field.mul(nc, b_tail[j].1)));
                j += 1;
                bj = b_tail.get(j).map(|(m, _)| m.mul(q));
            }
            Ordering::Equal => {
                let v = field.mul_add(a[i].1, nc, b_tail[j].1);
                if v != 0 {
                    out.push((a[i].0.clone(), v));
                }
                i += 1;
                j += 1;
                bj = b_tail.get(j).map(|(m, _)| m.mul(q));
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    if let Some(bm) = bj {
        out.push((bm, field.mul(nc, b_tail[j].1)));
        for (m, v) in &b_tail[j + 1..] {
            out.push((m.mul(q), field.mul(nc, *v)));
        }
    }
    out
}

/// Full reduction of a sorted term list. `divisor` returns a monic reducer whose head divides `m`.
fn reduce_terms<'a>(ring: &RingRef, mut p: Terms, divisor: impl Fn(&Monomial) -> Option<&'a Polynomial>) -> Terms {
    let mut rem = Vec::new();
    let mut head = 0;
    while head < p.len() {
        let (m, c) = &p[head];
        match divisor(m) {
            Some(g) => {
                let q = g.leading_monomial().unwrap().quotient_of(m).unwrap();
                p = sub_scaled(ring, &p[head + 1..], &g.terms()[1..], &q, *c);
                head = 0;
            }
            None => {
                rem.push(p[head].clone());
                head += 1;
            }
        }
    }
    rem
}

/// Reduces only while the head is divisible; returns the (possibly zero) result.
fn top_reduce(ring: &RingRef, mut p: Terms, heads: &[(Monomial, u64)], polys: &[Polynomial], active: &[bool]) -> Terms {
    loop {
        let Some((m, c)) = p.first() else { return p };
        let mask = m.support_mask();
        let k = heads
            .iter()
            .enumerate()
            .position(|(k, (h, hm))| active[k] && hm & !mask == 0 && h.divides(m));
        match k {
            Some(k) => {
                let g = &polys[k];
                let q = heads[k].0.quotient_of(m).unwrap();
                p = sub_scaled(ring, &p[1..], &g.terms()[1..], &q, *c);
            }
            None => return p,
        }
    }
}

fn make_monic(ring: &RingRef, terms: Terms) -> Polynomial {
    Polynomial::from_sorted_unchecked(ring, terms).monic()
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u64,
}

struct Buchberger {
    ring: RingRef,
    polys: Vec<Polynomial>,
    heads: Vec<(Monomial, u64)>,
    sugar: Vec<u64>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Buchberger {
    fn sugar_of(&self, f: &Polynomial) -> u64 {
        f.terms().iter().map(|(m, _)| self.ring.weight(m)).max().unwrap_or(0)
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u64 {
        let w = self.ring.weight(lcm);
        let si = self.sugar[i] + w - self.ring.weight(&self.heads[i].0);
        let sj = self.sugar[j] + w - self.ring.weight(&self.heads[j].0);
        si.max(sj)
    }

    /// Gebauer–Möller update after inserting basis element `t`.
    fn insert(&mut self, g: Polynomial, sugar: u64) {
        let t = self.polys.len();
        let h = g.leading_monomial().unwrap().clone();
        self.heads.push((h.clone(), h.support_mask()));
        self.polys.push(g);
        self.sugar.push(sugar);
        self.active.push(true);

        let mut cands: Vec<(usize, Monomial, bool)> = (0..t)
            .filter(|&i| self.active[i])
            .map(|i| {
                let hi = &self.heads[i].0;
                (i, hi.lcm(&h), hi.is_coprime(&h))
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some((i, lcm, coprime)) = (!cands.is_empty()).then(|| cands.remove(0)) {
            let dominated = cands.iter().chain(kept.iter()).any(|(_, l2, _)| l2.divides(&lcm));
            if coprime || !dominated {
                kept.push((i, lcm, coprime));
            }
        }
        let heads = &self.heads;
        self.pairs.retain(|p| {
            !h.divides(&p.lcm)
                || heads[p.i].0.lcm(&h) == p.lcm
                || heads[p.j].0.lcm(&h) == p.lcm
        });
        for (i, lcm, coprime) in kept {
            if !coprime {
                let sugar = self.pair_sugar(i, t, &lcm);
                self.pairs.push(Pair { i, j: t, lcm, sugar });
            }
        }
        for i in 0..t {
            if self.active[i] && h.divides(&self.heads[i].0) {
                self.active[i] = false;
            }
        }
    }

    fn select(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let ring = &self.ring;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let ord = ring
                .compare(&a.lcm, &b.lcm)
                .then(a.sugar.cmp(&b.sugar))
                .then(a.i.cmp(&b.i))
                .then(a.j.cmp(&b.j));
            if ord == Ordering::Less {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: &Pair) -> Terms {
        let (gi, gj) = (&self.polys[p.i], &self.polys[p.j]);
        let qi = self.heads[p.i].0.quotient_of(&p.lcm).unwrap();
        let qj = self.heads[p.j].0.quotient_of(&p.lcm).unwrap();
        let a: Terms = gi.terms()[1..].iter().map(|(m, c)| (m.mul(&qi), *c)).collect();
        sub_scaled(&self.ring, &a, &gj.terms()[1..], &qj, 1)
    }

    fn run(&mut self) {
        while let Some(p) = self.select() {
            let s = self.spoly(&p);
            let r = top_reduce(&self.ring, s, &self.heads, &self.polys, &self.active);
            if r.is_empty() {
                continue;
            }
            let active = self.active.clone();
            let polys = &self.polys;
            let heads = &self.heads;
            let full = reduce_terms(&self.ring, r, |m| {
                let mask = m.support_mask();
                heads
                    .iter()
                    .enumerate()
                    .position(|(k, (h, hm))| active[k] && hm & !mask == 0 && h.divides(m))
                    .map(|k| &polys[k])
            });
            let g = make_monic(&self.ring, full);
            self.insert(g, p.sugar);
        }
    }

    fn finish(self) -> GroebnerBasis {
        let ring = self.ring.clone();
        let mut minimal: Vec<Polynomial> = Vec::new();
        let mut kept_heads: Vec<(Monomial, u64)> = Vec::new();
        let mut idx: Vec<usize> = (0..self.polys.len()).filter(|&k| self.active[k]).collect();
        idx.sort_by(|&a, &b| ring.compare(&self.heads[a].0, &self.heads[b].0));
        for k in idx {
            let h = &self.heads[k].0;
            if find_divisor(&kept_heads, h).is_none() {
                kept_heads.push(self.heads[k].clone());
                minimal.push(self.polys[k].clone());
            }
        }
        let mut reduced = Vec::with_capacity(minimal.len());
        for (k, g) in minimal.iter().enumerate() {
            let tail = reduce_terms(&ring, g.terms()[1..].to_vec(), |m| {
                find_divisor(&kept_heads, m).filter(|&q| q != k).map(|q| &minimal[q])
            });
            let mut terms = vec![g.terms()[0].clone()];
            terms.extend(tail);
            reduced.push(Polynomial::from_sorted_unchecked(&ring, terms));
        }
        GroebnerBasis::from_polys(&ring, reduced)
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`, in the order of `ring`.
pub fn groebner_basis(ring: &RingRef, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    let mut inputs: Vec<Polynomial> = Vec::new();
    for g in gens {
        let g = g.to_ring(ring)?;
        if !g.is_zero() {
            inputs.push(g.monic());
        }
    }
    let mut bb = Buchberger {
        ring: ring.clone(),
        polys: Vec::new(),
        heads: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    // insert inputs interreduced against what is already there, lowest first
    inputs.sort_by(|a, b| {
        let (wa, wb) = (bb.sugar_of(a), bb.sugar_of(b));
        wa.cmp(&wb)
            .then_with(|| ring.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()))
    });
    for f in inputs {
        let sugar = bb.sugar_of(&f);
        let r = top_reduce(ring, f.into_terms(), &bb.heads, &bb.polys, &bb.active);
        if r.is_empty() {
            continue;
        }
        let g = make_monic(ring, r);
        bb.insert(g, sugar);
    }
    bb.run();
    Ok(bb.finish())
}

/// Every S-polynomial of `gb` reduces to zero.
pub fn satisfies_buchberger_criterion(gb: &GroebnerBasis) -> bool {
    let n = gb.len();
    for i in 0..n {
        for j in i + 1..n {
            let (hi, hj) = (&gb.heads[i].0, &gb.heads[j].0);
            let lcm = hi.lcm(hj);
            let qi = hi.quotient_of(&lcm).unwrap();
            let qj = hj.quotient_of(&lcm).unwrap();
            let (gi, gj) = (&gb.polys[i], &gb.polys[j]);
            let s = &gi.mul_term(&qi, gj.leading_coeff().unwrap()) - &gj.mul_term(&qj, gi.leading_coeff().unwrap());
            if !gb.normal_form(&s).is_zero() {
                return false;
            }
        }
    }
    true
}

/// An ideal given by generators, with a write-once Gröbner basis cache for the ring's order.
#[derive(Debug)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        Self { ring: self.ring.clone(), gens: self.gens.clone(), gb }
    }
}

impl Ideal {
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Result<Self> {
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            let g = g.to_ring(ring)?;
            if !g.is_zero() {
                out.push(g);
            }
        }
        Ok(Self { ring: ring.clone(), gens: out, gb: OnceLock::new() })
    }

    pub fn zero(ring: &RingRef) -> Self {
        Self { ring: ring.clone(), gens: Vec::new(), gb: OnceLock::new() }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Reduced Gröbner basis in the ring's order, computed once.
    pub fn groebner(&self) -> &GroebnerBasis {
        self.gb
            .get_or_init(|| groebner_basis(&self.ring, &self.gens).expect("generators share the ideal's ring"))
    }

    /// New ideal with extra generators (cache is not carried over).
    pub fn extended(&self, more: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(more.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.extended(&other.gens)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.groebner().contains(f)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.groebner().normal_form(f)
    }

    pub fn is_proper(&self) -> bool {
        !self.groebner().is_unit_ideal()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// The same ideal in the ring with another order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Ideal> {
        let ring = self.ring.with_order(order)?;
        Ideal::new(&ring, self.gens.clone())
    }

    /// Contains every generator of `other`.
    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }
}

pub fn ideal_membership(f: &Polynomial, ideal: &Ideal) -> bool {
    ideal.contains(f)
}

fn degrevlex_of(ring: &RingRef) -> RingRef {
    if ring.order() == MonomialOrder::DegRevLex {
        ring.clone()
    } else {
        PolyRing::degrevlex(ring.descriptor().clone())
    }
}

/// Compares reduced degrevlex bases.
pub fn ideals_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    if a.ring.descriptor() != b.ring.descriptor() {
        return Err(AlgebraError::RingMismatch("ideals live in different rings".into()));
    }
    let ring = degrevlex_of(&a.ring);
    let ga = groebner_basis(&ring, &a.gens)?;
    let gb = groebner_basis(&ring, &b.gens)?;
    Ok(ga.polys == gb.polys)
}

/// Generators of `ideal ∩ K[variables outside drop]`.
pub fn elimination_ideal(ideal: &Ideal, drop: &[usize]) -> Result<Ideal> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if drop.iter().any(|&i| i >= n) {
        return Err(AlgebraError::Structural("elimination block names a missing variable".into()));
    }
    let mut layout: Vec<usize> = drop.to_vec();
    layout.extend((0..n).filter(|i| !drop.contains(i)));
    let mut position = vec![0usize; n];
    for (pos, &v) in layout.iter().enumerate() {
        position[v] = pos;
    }
    let vars = layout.iter().map(|&v| ring.descriptor().variables()[v].clone()).collect();
    let desc = RingDescriptor::new(ring.field(), vars, ring.descriptor().grading_rank())?;
    let elim = PolyRing::new(desc, MonomialOrder::BlockElimination { front: drop.len() })?;
    let gens: Vec<Polynomial> = ideal.gens.iter().map(|g| g.embed(&elim, &position)).collect();
    let gb = groebner_basis(&elim, &gens)?;
    let k = drop.len();
    let kept: Vec<Polynomial> = gb
        .polys()
        .iter()
        .filter(|g| g.avoids(|i| i < k))
        .map(|g| g.embed(ring, &layout))
        .collect();
    Ideal::new(ring, kept)
}

/// Ring with one extra variable `w` appended, carrying `degree`.
fn with_extra_variable(ring: &RingRef, name: &str, degree: Multidegree) -> Result<RingRef> {
    let mut vars = ring.descriptor().variables().to_vec();
    let mut name = name.to_string();
    while vars.iter().any(|v| v.name == name) {
        name.push('_');
    }
    vars.push(Variable { name, degree });
    Ok(PolyRing::degrevlex(RingDescriptor::new(ring.field(), vars, ring.descriptor().grading_rank())?))
}

/// `a ∩ b` via `w·a + (1−w)·b` and elimination of `w`.
pub fn ideal_intersection(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    if a.ring.descriptor() != b.ring.descriptor() {
        return Err(AlgebraError::RingMismatch("intersection of ideals in different rings".into()));
    }
    let ring = a.ring();
    let n = ring.nvars();
    let unit = {
        let mut d = vec![0; ring.descriptor().grading_rank()];
        d[0] = 1;
        Multidegree::new(d)
    };
    let big = with_extra_variable(ring, "w", unit)?;
    let map: Vec<usize> = (0..n).collect();
    let w = Polynomial::variable(&big, n);
    let one_minus_w = &Polynomial::one(&big) - &w;
    let mut gens = Vec::new();
    for g in &a.gens {
        gens.push(&w * &g.embed(&big, &map));
    }
    for g in &b.gens {
        gens.push(&one_minus_w * &g.embed(&big, &map));
    }
    let elim = elimination_ideal(&Ideal::new(&big, gens)?, &[n])?;
    let back: Vec<usize> = (0..=n).map(|i| i.min(n - 1)).collect();
    let gens = elim.gens.iter().map(|g| g.embed(ring, &back)).collect();
    Ideal::new(ring, gens)
}

/// `ideal : f`, as `(ideal ∩ (f)) / f`.
pub fn colon_ideal(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(AlgebraError::Input("colon by the zero polynomial".into()));
    }
    let f = f.to_ring(ideal.ring())?;
    let principal = Ideal::new(ideal.ring(), vec![f.clone()])?;
    let inter = ideal_intersection(ideal, &principal)?;
    let gens = inter
        .gens
        .iter()
        .map(|g| g.exact_div(&f).expect("generator of I ∩ (f) must be divisible by f"))
        .collect();
    Ideal::new(ideal.ring(), gens)
}

/// Checks that each `fs[i]` is a nonzerodivisor modulo `base + (fs[..i])` and that the
/// full quotient is nonzero.
pub fn is_regular_sequence_mod(fs: &[Polynomial], base: Option<&Ideal>) -> Result<bool> {
    let ring = match (fs.first(), base) {
        (_, Some(b)) => b.ring().clone(),
        (Some(f), None) => f.ring().clone(),
        (None, None) => return Ok(true),
    };
    if fs.iter().any(|f| f.is_zero()) {
        return Err(AlgebraError::Input("zero polynomial in a sequence".into()));
    }
    if fs.iter().any(|f| !f.is_homogeneous()) {
        return Err(AlgebraError::Input("regular sequence test needs homogeneous forms".into()));
    }
    let mut prefix = match base {
        Some(b) => b.clone(),
        None => Ideal::zero(&ring),
    };
    for f in fs {
        let colon = colon_ideal(&prefix, f)?;
        if !ideals_equal(&colon, &prefix)? {
            return Ok(false);
        }
        prefix = prefix.extended(std::slice::from_ref(f))?;
    }
    Ok(prefix.is_proper())
}

pub fn is_regular_sequence(fs: &[Polynomial]) -> Result<bool> {
    is_regular_sequence_mod(fs, None)
}

/// Kernel of `source → target`, `y_i ↦ images[i]`, optionally with relations in the target.
#[derive(Clone, Debug)]
pub struct RingMapKernelProblem {
    pub source: RingRef,
    pub target: RingRef,
    pub images: Vec<Polynomial>,
    pub target_relations: Vec<Polynomial>,
}

pub fn subalgebra_presentation(problem: &RingMapKernelProblem) -> Result<Ideal> {
    let (src, tgt) = (&problem.source, &problem.target);
    if problem.images.len() != src.nvars() {
        return Err(AlgebraError::Structural(format!(
            "{} images for {} source variables",
            problem.images.len(),
            src.nvars()
        )));
    }
    if src.descriptor().grading_rank() != tgt.descriptor().grading_rank() {
        return Err(AlgebraError::Structural("source and target gradings differ in rank".into()));
    }
    for (i, g) in problem.images.iter().enumerate() {
        if !same_ring(g.ring(), tgt) && g.ring().descriptor() != tgt.descriptor() {
            return Err(AlgebraError::RingMismatch("image outside the target ring".into()));
        }
        if !g.is_zero() && g.multidegree().as_ref() != Some(src.descriptor().var_degree(i)) {
            return Err(AlgebraError::Structural(format!(
                "image of {} is not homogeneous of degree {}",
                src.var_name(i),
                src.descriptor().var_degree(i)
            )));
        }
    }
    let (m, n) = (tgt.nvars(), src.nvars());
    let mut vars: Vec<Variable> = tgt.descriptor().variables().to_vec();
    for v in src.descriptor().variables() {
        let mut v = v.clone();
        while vars.iter().any(|w| w.name == v.name) {
            v.name.push('\'');
        }
        vars.push(v);
    }
    let desc = RingDescriptor::new(tgt.field(), vars, tgt.descriptor().grading_rank())?;
    let graph_ring = PolyRing::new(desc, MonomialOrder::BlockElimination { front: m })?;
    let tmap: Vec<usize> = (0..m).collect();
    let mut gens = Vec::with_capacity(n + problem.target_relations.len());
    for (i, g) in problem.images.iter().enumerate() {
        let y = Polynomial::variable(&graph_ring, m + i);
        gens.push(&y - &g.embed(&graph_ring, &tmap));
    }
    for r in &problem.target_relations {
        gens.push(r.embed(&graph_ring, &tmap));
    }
    let gb = groebner_basis(&graph_ring, &gens)?;
    let back: Vec<usize> = (0..m + n).map(|i| i.saturating_sub(m)).collect();
    let kernel = gb
        .polys()
        .iter()
        .filter(|g| g.avoids(|i| i < m))
        .map(|g| g.embed(src, &back))
        .collect();
    Ideal::new(src, kernel)
}

/// Degrees of a minimal homogeneous generating set, sorted in graded order.
pub fn minimal_generator_degrees(ideal: &Ideal) -> Result<Vec<Multidegree>> {
    let ring = degrevlex_of(ideal.ring());
    let mut gens: Vec<(Multidegree, Polynomial)> = Vec::new();
    for g in ideal.generators() {
        let d = g.multidegree().ok_or_else(|| AlgebraError::Input(format!("generator {g} is not homogeneous")))?;
        gens.push((d, g.to_ring(&ring)?));
    }
    gens.sort_by(|a, b| a.0.graded_cmp(&b.0));
    let mut out = Vec::new();
    let mut start = 0;
    while start < gens.len() {
        let total = gens[start].0.total();
        let end = start + gens[start..].iter().take_while(|(d, _)| d.total() == total).count();
        let lower: Vec<Polynomial> = gens[..start].iter().map(|(_, g)| g.clone()).collect();
        let gb = groebner_basis(&ring, &lower)?;
        let mut group = start;
        while group < end {
            let deg = gens[group].0.clone();
            let gend = group + gens[group..end].iter().take_while(|(d, _)| *d == deg).count();
            let residues: Vec<Polynomial> = gens[group..gend].iter().map(|(_, g)| gb.normal_form(g)).collect();
            let rank = crate::linalg::polynomial_rank(&ring, &residues);
            out.extend(std::iter::repeat_n(deg, rank));
            group = gend;
        }
        start = end;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::parse::parse_polynomial;

    fn ring(names: &[&str]) -> RingRef {
        PolyRing::degrevlex(RingDescriptor::standard(PrimeField::default(), names).unwrap())
    }

    fn polys(r: &RingRef, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|t| parse_polynomial(t, r).unwrap()).collect()
    }

    fn ideal(r: &RingRef, s: &[&str]) -> Ideal {
        Ideal::new(r, polys(r, s)).unwrap()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = ring(&["x1", "x2"]);
        let gb = groebner_basis(&r, &polys(&r, &["x1^2", "x2^2"])).unwrap();
        let got: Vec<String> = gb.polys().iter().map(|g| g.to_string()).collect();
        assert_eq!(got, vec!["x2^2", "x1^2"]);
    }

    #[test]
    fn linear_chain() {
        // S(x−y, y−z) = 0 after one reduction step by hand
        let r = ring(&["x", "y", "z"]);
        let gb = groebner_basis(&r, &polys(&r, &["x - y", "y - z"])).unwrap();
        let mut got: Vec<String> = gb.polys().iter().map(|g| g.to_string()).collect();
        got.sort();
        assert_eq!(got, vec!["x - z", "y - z"]);
        assert!(satisfies_buchberger_criterion(&gb));
    }

    #[test]
    fn normal_forms() {
        let r = ring(&["x1", "x2"]);
        let i = ideal(&r, &["x1^2"]);
        assert!(i.normal_form(&parse_polynomial("x1^2*x2", &r).unwrap()).is_zero());
        let f = parse_polynomial("x1*x2 + x2^3", &r).unwrap();
        assert_eq!(i.normal_form(&f), f);
        assert!(ideal_membership(&parse_polynomial("x1^2", &r).unwrap(), &ideal(&r, &["x1"])));
        assert!(!ideal_membership(&Polynomial::one(&r), &ideal(&r, &["x1", "x2"])));
    }

    #[test]
    fn elimination_examples() {
        let r = ring(&["x", "y"]);
        let e = elimination_ideal(&ideal(&r, &["y - x^2"]), &[0]).unwrap();
        assert!(e.generators().is_empty());

        let r = ring(&["x", "y1", "y2"]);
        let e = elimination_ideal(&ideal(&r, &["y1 - x^2", "y2 - x^3"]), &[0]).unwrap();
        assert_eq!(e.generators().len(), 1);
        // oracle: y1 = x^2, y2 = x^3 kills the generator
        let x = Polynomial::var(&r, "x");
        let g = e.generators()[0].substitute(&[x.clone(), x.pow(2), x.pow(3)]).unwrap();
        assert!(g.is_zero());
        assert!(ideals_equal(&e, &ideal(&r, &["y1^3 - y2^2"])).unwrap());
    }

    #[test]
    fn intersections() {
        let r = ring(&["x", "y"]);
        let i = ideal_intersection(&ideal(&r, &["x"]), &ideal(&r, &["y"])).unwrap();
        assert!(ideals_equal(&i, &ideal(&r, &["x*y"])).unwrap());
        let a = ideal(&r, &["x^2 + y^2", "x*y"]);
        assert!(ideals_equal(&ideal_intersection(&a, &a).unwrap(), &a).unwrap());
        let i = ideal_intersection(&ideal(&r, &["x^2"]), &ideal(&r, &["x^3"])).unwrap();
        assert!(ideals_equal(&i, &ideal(&r, &["x^3"])).unwrap());
    }

    #[test]
    fn colons_and_equality() {
        let r = ring(&["x", "y"]);
        let c = colon_ideal(&ideal(&r, &["x^2"]), &parse_polynomial("x", &r).unwrap()).unwrap();
        assert!(ideals_equal(&c, &ideal(&r, &["x"])).unwrap());
        assert!(ideals_equal(&ideal(&r, &["x", "y"]), &ideal(&r, &["y", "x + y"])).unwrap());
        assert!(!ideals_equal(&ideal(&r, &["x"]), &ideal(&r, &["x^2"])).unwrap());
    }

    #[test]
    fn regular_sequences() {
        let r = ring(&["x1", "x2", "x3"]);
        assert!(is_regular_sequence(&polys(&r, &["x1", "x2", "x3"])).unwrap());
        assert!(!is_regular_sequence(&polys(&r, &["x1", "x1*x2"])).unwrap());
        assert!(is_regular_sequence(&[Polynomial::zero(&r)]).is_err());
    }

    #[test]
    fn kernels() {
        let src = ring(&["y1", "y2", "y3"]).regraded(vec![Multidegree::single(2); 3]).unwrap();
        let tgt = ring(&["x", "y"]);
        let images = polys(&tgt, &["x^2", "x*y", "y^2"]);
        let k = subalgebra_presentation(&RingMapKernelProblem {
            source: src.clone(),
            target: tgt.clone(),
            images: images.clone(),
            target_relations: vec![],
        })
        .unwrap();
        assert!(ideals_equal(&k, &ideal(&src, &["y1*y3 - y2^2"])).unwrap());
        for g in k.generators() {
            assert!(g.substitute(&images).unwrap().is_zero());
        }

        let src = ring(&["y"]);
        let k = subalgebra_presentation(&RingMapKernelProblem {
            source: src,
            target: ring(&["x"]),
            images: polys(&ring(&["x"]), &["x"]),
            target_relations: vec![],
        })
        .unwrap();
        assert!(k.generators().is_empty());
    }

    #[test]
    fn generator_degrees() {
        let r = ring(&["x", "y"]);
        let d = minimal_generator_degrees(&ideal(&r, &["x^2", "x*y", "x^3"])).unwrap();
        assert_eq!(d, vec![Multidegree::single(2); 2]);
    }
}
