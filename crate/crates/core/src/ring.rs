//! Multidegrees, monomials, monomial orders and ring descriptors.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::field::PrimeField;

/// A (multi)degree in Z^g. Component-wise addition, partial order by `le`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multidegree(Vec<i32>);

impl Multidegree {
    pub fn new(components: Vec<i32>) -> Self {
        Self(components)
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn single(d: i32) -> Self {
        Self(vec![d])
    }

    pub fn bi(a: i32, b: i32) -> Self {
        Self(vec![a, b])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[i32] {
        &self.0
    }

    pub fn total(&self) -> i64 {
        self.0.iter().map(|&c| c as i64).sum()
    }

    pub fn add(&self, other: &Multidegree) -> Multidegree {
        debug_assert_eq!(self.rank(), other.rank());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Multidegree) -> Multidegree {
        debug_assert_eq!(self.rank(), other.rank());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i32) -> Multidegree {
        Self(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Multidegree {
        self.scale(-1)
    }

    /// Component-wise `<=`.
    pub fn le(&self, other: &Multidegree) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Total-degree-first order, used to process graded pieces bottom-up.
    pub fn graded_cmp(&self, other: &Multidegree) -> Ordering {
        self.total().cmp(&other.total()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Debug for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            write!(f, "{}", self.0[0])
        } else {
            write!(f, "(")?;
            for (i, c) in self.0.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, ")")
        }
    }
}

/// Exponent vector indexed by ring variables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Box<[u16]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars].into_boxed_slice())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self(e.into_boxed_slice())
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        Self(exps.into_boxed_slice())
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Self(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i] += 1;
        Self(e)
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Self(other.0.iter().zip(self.0.iter()).map(|(b, a)| b - a).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Self(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit `i` set when variable `i` (mod 64) occurs. Used as a divisibility pre-filter.
    pub fn support_mask(&self) -> u64 {
        let mut m = 0u64;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                m |= 1 << (i % 64);
            }
        }
        m
    }

    /// Index of the last variable with positive exponent.
    pub fn last_var(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Variable {
    pub name: String,
    pub degree: Multidegree,
}

/// Field, named variables with multidegrees, and the grading rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    field: PrimeField,
    variables: Vec<Variable>,
    grading_rank: usize,
}

impl RingDescriptor {
    pub fn new(field: PrimeField, variables: Vec<Variable>, grading_rank: usize) -> Result<Self> {
        if grading_rank == 0 {
            return Err(AlgebraError::Structural("grading rank must be positive".into()));
        }
        for (i, v) in variables.iter().enumerate() {
            if v.degree.rank() != grading_rank {
                return Err(AlgebraError::Structural(format!(
                    "variable {} has degree {} of rank {}, expected rank {grading_rank}",
                    v.name,
                    v.degree,
                    v.degree.rank()
                )));
            }
            if !v.degree.is_nonnegative() || v.degree.is_zero() {
                return Err(AlgebraError::Structural(format!(
                    "variable {} must have a nonzero nonnegative degree, got {}",
                    v.name, v.degree
                )));
            }
            if variables[..i].iter().any(|w| w.name == v.name) {
                return Err(AlgebraError::Structural(format!("duplicate variable name {}", v.name)));
            }
        }
        Ok(Self { field, variables, grading_rank })
    }

    /// Standard graded ring: every variable has degree 1.
    pub fn standard<S: AsRef<str>>(field: PrimeField, names: &[S]) -> Result<Self> {
        Self::new(
            field,
            names
                .iter()
                .map(|n| Variable { name: n.as_ref().to_string(), degree: Multidegree::single(1) })
                .collect(),
            1,
        )
    }

    /// `x1..xn` of degree 1.
    pub fn polynomial_ring(field: PrimeField, prefix: &str, n: usize) -> Result<Self> {
        let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        Self::standard(field, &names)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn grading_rank(&self) -> usize {
        self.grading_rank
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v.name == name)
    }

    pub fn var_degree(&self, i: usize) -> &Multidegree {
        &self.variables[i].degree
    }

    pub fn multidegree_of(&self, m: &Monomial) -> Result<Multidegree> {
        if m.nvars() != self.nvars() {
            return Err(AlgebraError::Structural(format!(
                "monomial has {} exponents, ring has {} variables",
                m.nvars(),
                self.nvars()
            )));
        }
        Ok(self.multidegree_unchecked(m))
    }

    pub(crate) fn multidegree_unchecked(&self, m: &Monomial) -> Multidegree {
        let mut d = vec![0i32; self.grading_rank];
        for (e, v) in m.exponents().iter().zip(&self.variables) {
            if *e > 0 {
                for (acc, c) in d.iter_mut().zip(v.degree.components()) {
                    *acc += *e as i32 * c;
                }
            }
        }
        Multidegree(d)
    }
}

/// Monomial orders over the ring's variable list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Weighted degree (sum of multidegree components), then reverse lexicographic.
    DegRevLex,
    /// The first `front` variables form a block that is eliminated:
    /// compare that block by degrevlex, break ties by degrevlex on the rest.
    BlockElimination { front: usize },
}

/// A ring descriptor together with its active monomial order.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    desc: RingDescriptor,
    order: MonomialOrder,
    weights: Vec<u32>,
}

pub type RingRef = Arc<PolyRing>;

impl PolyRing {
    pub fn new(desc: RingDescriptor, order: MonomialOrder) -> Result<RingRef> {
        if let MonomialOrder::BlockElimination { front } = order {
            if front > desc.nvars() {
                return Err(AlgebraError::Structural(format!(
                    "elimination block of size {front} exceeds {} variables",
                    desc.nvars()
                )));
            }
        }
        let weights = desc.variables.iter().map(|v| v.degree.total() as u32).collect();
        Ok(Arc::new(Self { desc, order, weights }))
    }

    pub fn degrevlex(desc: RingDescriptor) -> RingRef {
        Self::new(desc, MonomialOrder::DegRevLex).expect("degrevlex is always valid")
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.desc
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn field(&self) -> PrimeField {
        self.desc.field
    }

    pub fn nvars(&self) -> usize {
        self.desc.nvars()
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.desc.variables[i].name
    }

    pub fn multidegree_of(&self, m: &Monomial) -> Result<Multidegree> {
        self.desc.multidegree_of(m)
    }

    pub(crate) fn mdeg(&self, m: &Monomial) -> Multidegree {
        self.desc.multidegree_unchecked(m)
    }

    /// Positive weight used by degrevlex: sum of the multidegree components.
    pub fn weight(&self, m: &Monomial) -> u64 {
        m.exponents().iter().zip(&self.weights).map(|(&e, &w)| e as u64 * w as u64).sum()
    }

    fn weight_range(&self, m: &Monomial, lo: usize, hi: usize) -> u64 {
        m.exponents()[lo..hi]
            .iter()
            .zip(&self.weights[lo..hi])
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    fn degrevlex_range(&self, a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
        let wa = self.weight_range(a, lo, hi);
        let wb = self.weight_range(b, lo, hi);
        if wa != wb {
            return wa.cmp(&wb);
        }
        let (ea, eb) = (a.exponents(), b.exponents());
        for i in (lo..hi).rev() {
            if ea[i] != eb[i] {
                // smaller exponent in the last differing variable wins
                return eb[i].cmp(&ea[i]);
            }
        }
        Ordering::Equal
    }

    /// Compare two monomials in the active order.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = self.nvars();
        match self.order {
            MonomialOrder::DegRevLex => self.degrevlex_range(a, b, 0, n),
            MonomialOrder::BlockElimination { front } => self
                .degrevlex_range(a, b, 0, front)
                .then_with(|| self.degrevlex_range(a, b, front, n)),
        }
    }

    /// Same variables and grading, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<RingRef> {
        PolyRing::new(self.desc.clone(), order)
    }

    /// Same variables, field and order, but a different grading.
    pub fn regraded(&self, degrees: Vec<Multidegree>) -> Result<RingRef> {
        if degrees.len() != self.nvars() {
            return Err(AlgebraError::Structural("regrading needs one degree per variable".into()));
        }
        let rank = degrees.first().map_or(1, |d| d.rank());
        let vars = self
            .desc
            .variables
            .iter()
            .zip(degrees)
            .map(|(v, degree)| Variable { name: v.name.clone(), degree })
            .collect();
        PolyRing::new(RingDescriptor::new(self.field(), vars, rank)?, self.order)
    }
}
