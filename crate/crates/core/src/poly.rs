//! Sparse polynomials over F_p with terms kept in descending monomial order.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::ring::{Monomial, Multidegree, RingRef};

#[derive(Clone)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<(Monomial, u32)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

pub(crate) fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Self { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &RingRef, c: i64) -> Self {
        let c = ring.field().from_i64(c);
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, 1)
    }

    pub fn variable(ring: &RingRef, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i), 1)
    }

    /// Variable by name. Panics when the name is not in the ring.
    pub fn var(ring: &RingRef, name: &str) -> Self {
        let i = ring
            .descriptor()
            .var_index(name)
            .unwrap_or_else(|| panic!("unknown variable {name}"));
        Self::variable(ring, i)
    }

    pub fn monomial(ring: &RingRef, m: Monomial, c: u32) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let c = c % ring.field().characteristic();
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        Self { ring: ring.clone(), terms }
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(ring: &RingRef, terms: Vec<(Monomial, u32)>) -> Self {
        let mut terms = terms;
        terms.sort_by(|a, b| ring.compare(&b.0, &a.0));
        let field = ring.field();
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % field.characteristic();
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(*lc, c),
                _ => {
                    if let Some((_, 0)) = out.last() {
                        out.pop();
                    }
                    out.push((m, c));
                }
            }
        }
        out.retain(|(_, c)| *c != 0);
        Self { ring: ring.clone(), terms: out }
    }

    /// Terms already strictly descending with nonzero canonical coefficients.
    pub(crate) fn from_sorted_unchecked(ring: &RingRef, terms: Vec<(Monomial, u32)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.compare(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| *c != 0));
        Self { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, u32)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<u32> {
        self.terms.first().map(|(_, c)| *c)
    }

    /// A nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// Coefficient of a given monomial (0 if absent).
    pub fn coeff(&self, m: &Monomial) -> u32 {
        self.terms
            .binary_search_by(|(t, _)| self.ring.compare(m, t))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    /// Multidegree of every term, if they all agree. `None` for zero or mixed polynomials.
    pub fn multidegree(&self) -> Option<Multidegree> {
        let mut it = self.terms.iter().map(|(m, _)| self.ring.mdeg(m));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.multidegree().is_some()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch(
                "operands live in different rings or orders".to_string(),
            ))
        }
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let field = self.ring.field();
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let fix = |c: u32| if negate_other { field.neg(c) } else { c };
        while i < a.len() && j < b.len() {
            match self.ring.compare(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), fix(b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(a[i].1, fix(b[j].1));
                    if c != 0 {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), fix(*c))));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let field = self.ring.field();
        let mut prods = Vec::with_capacity(self.len() * other.len());
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                prods.push((m.mul(n), field.mul(*c, *d)));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, prods))
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(*c))).collect(),
        }
    }

    pub fn scale(&self, k: u32) -> Polynomial {
        let field = self.ring.field();
        let k = k % field.characteristic();
        if k == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.mul(*c, k))).collect(),
        }
    }

    /// `c * m * self`; order is preserved because monomial orders are multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: u32) -> Polynomial {
        let field = self.ring.field();
        if c.is_multiple_of(field.characteristic()) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(n, d)| (n.mul(m), field.mul(*d, c))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.ring.field().inv(c)),
        }
    }

    /// Reinterprets the polynomial in a ring with the same variables (e.g. another order).
    pub fn to_ring(&self, ring: &RingRef) -> Result<Polynomial> {
        if ring.nvars() != self.ring.nvars() || ring.field() != self.ring.field() {
            return Err(AlgebraError::RingMismatch(format!(
                "cannot move a polynomial from {} to {} variables",
                self.ring.nvars(),
                ring.nvars()
            )));
        }
        if same_ring(ring, &self.ring) {
            return Ok(self.clone());
        }
        Ok(Polynomial::from_terms(ring, self.terms.clone()))
    }

    /// Moves into a ring whose variables are laid out by `index_map[i]` (variable i goes
    /// to position `index_map[i]` of the target).
    pub fn embed(&self, ring: &RingRef, index_map: &[usize]) -> Polynomial {
        let n = ring.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u16; n];
                for (i, &x) in m.exponents().iter().enumerate() {
                    e[index_map[i]] += x;
                }
                (Monomial::from_exponents(e), *c)
            })
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Substitutes `images[i]` for variable i. All images must share one ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(AlgebraError::Structural(format!(
                "substitution needs {} images, got {}",
                self.ring.nvars(),
                images.len()
            )));
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Ok(self.clone()),
        };
        let mut acc = Polynomial::zero(&target);
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|g| vec![Polynomial::one(&target), g.clone()]).collect();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, *c as i64);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap().checked_mul(&images[i])?;
                    pw.push(next);
                }
                t = t.checked_mul(&pw[e as usize])?;
            }
            acc = acc.checked_add(&t)?;
        }
        Ok(acc)
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let field = self.ring.field();
        let (lm, lc) = divisor.terms.first()?;
        let inv = field.inv(*lc);
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            let q = lm.quotient_of(m)?;
            let qc = field.mul(*c, inv);
            rem = rem.merge(&divisor.mul_term(&q, qc), true);
            quotient.push((q, qc));
        }
        Some(Polynomial::from_terms(&self.ring, quotient))
    }

    /// True when no variable in `vars` occurs.
    pub fn avoids(&self, vars: impl Fn(usize) -> bool) -> bool {
        self.terms.iter().all(|(m, _)| m.exponents().iter().enumerate().all(|(i, &e)| e == 0 || !vars(i)))
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch in addition")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch in subtraction")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch in multiplication")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let s = field.to_signed(*c);
            let (neg, abs) = (s < 0, s.unsigned_abs());
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if abs != 1 || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.var_name(i).to_string()),
                    _ => factors.push(format!("{}^{e}", self.ring.var_name(i))),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::ring::{PolyRing, RingDescriptor};

    fn ring(p: u32, names: &[&str]) -> RingRef {
        PolyRing::degrevlex(RingDescriptor::standard(PrimeField::new(p).unwrap(), names).unwrap())
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(32003, &["x1", "x2"]);
        let (a, b) = (Polynomial::var(&r, "x1"), Polynomial::var(&r, "x2"));
        let prod = &(&a + &b) * &(&a - &b);
        assert_eq!(prod, &(&a * &a) - &(&b * &b));
        assert_eq!(prod.to_string(), "x1^2 - x2^2");
        assert!((&prod + &prod.neg()).is_zero());
    }

    #[test]
    fn small_field_product() {
        let r = ring(5, &["x"]);
        let x = Polynomial::var(&r, "x");
        let p = &x.scale(3) * &x.scale(4);
        assert_eq!(p.terms(), &[(Monomial::from_exponents(vec![2]), 2)]);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r = ring(32003, &["x"]);
        let s = ring(32003, &["y"]);
        let e = Polynomial::var(&r, "x").checked_add(&Polynomial::var(&s, "y"));
        assert!(matches!(e, Err(AlgebraError::RingMismatch(_))));
    }

    #[test]
    fn exact_division_and_substitution() {
        let r = ring(32003, &["x", "y"]);
        let (x, y) = (Polynomial::var(&r, "x"), Polynomial::var(&r, "y"));
        let f = &(&x * &y) - &(&y * &y);
        assert_eq!(f.exact_div(&y).unwrap(), &x - &y);
        assert!(f.exact_div(&x).is_none());
        let g = f.substitute(&[y.clone(), x.clone()]).unwrap();
        assert_eq!(g, &(&x * &y) - &(&x * &x));
    }

    #[test]
    fn homogeneity() {
        let r = ring(32003, &["x", "y"]);
        let (x, y) = (Polynomial::var(&r, "x"), Polynomial::var(&r, "y"));
        assert_eq!((&(&x * &y) + &(&x * &x)).multidegree(), Some(Multidegree::single(2)));
        assert!(!(&x + &(&y * &y)).is_homogeneous());
    }
}
