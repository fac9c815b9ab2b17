use std::sync::Arc;

use koszul_core::graded::{DegreeWindow, PresentedAlgebra};
use koszul_core::groebner::satisfies_buchberger_criterion;
use koszul_core::rees::{rees_presentation_unchecked, CompleteIntersectionInput};
use koszul_core::resolution::{truncated_minimal_resolution, GradedAlgebra, QuotientModule};
use koszul_core::{
    colon_ideal, elimination_ideal, groebner_basis, ideal_membership, parse_polynomial, Ideal, Monomial, Multidegree,
    PolyRing, Polynomial, PrimeField, RingDescriptor, RingRef, Variable, DEFAULT_PRIME,
};
use proptest::prelude::*;

const NAMES: [&str; 3] = ["x", "y", "z"];

fn field() -> PrimeField {
    PrimeField::new(DEFAULT_PRIME).unwrap()
}

fn standard() -> RingRef {
    PolyRing::degrevlex(RingDescriptor::standard(field(), &NAMES).unwrap())
}

/// `x:(1,0)`, `y:(0,1)`, `z:(2,1)`.
fn bigraded() -> RingRef {
    let degrees = [Multidegree::bi(1, 0), Multidegree::bi(0, 1), Multidegree::bi(2, 1)];
    let vars = NAMES.iter().zip(degrees).map(|(n, degree)| Variable { name: n.to_string(), degree }).collect();
    PolyRing::degrevlex(RingDescriptor::new(field(), vars, 2).unwrap())
}

fn terms(max_exp: u16, max_terms: usize) -> impl Strategy<Value = Vec<(Vec<u16>, u32)>> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, 3), 1..DEFAULT_PRIME), 0..=max_terms)
}

fn build(ring: &RingRef, raw: Vec<(Vec<u16>, u32)>) -> Polynomial {
    Polynomial::from_terms(ring, raw.into_iter().map(|(e, c)| (Monomial::from_exponents(e), c)).collect())
}

/// Homogeneous of total degree `deg` in the standard grading.
fn homogeneous(deg: u16, max_terms: usize) -> impl Strategy<Value = Vec<(Vec<u16>, u32)>> {
    prop::collection::vec(((0..=deg), (0..=deg), 1..DEFAULT_PRIME), 1..=max_terms).prop_map(move |raw| {
        raw.into_iter()
            .map(|(a, b, c)| {
                let a = a.min(deg);
                let b = b.min(deg - a);
                (vec![a, b, deg - a - b], c)
            })
            .collect()
    })
}

fn generators() -> impl Strategy<Value = Vec<Vec<(Vec<u16>, u32)>>> {
    prop::collection::vec((1u16..=3).prop_flat_map(|d| homogeneous(d, 3)), 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in terms(3, 4), b in terms(3, 4), c in terms(3, 4)) {
        let r = standard();
        let (a, b, c) = (build(&r, a), build(&r, b), build(&r, c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Polynomial::zero(&r));
        prop_assert_eq!(&a * &Polynomial::one(&r), a.clone());
        prop_assert_eq!(&a + &(-&a), Polynomial::zero(&r));
    }

    #[test]
    fn field_inverses(a in 1..DEFAULT_PRIME) {
        let f = field();
        prop_assert_eq!(f.mul(a, f.inv(a)), 1);
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
    }

    #[test]
    fn multidegree_is_additive(a in prop::collection::vec(0u16..4, 3), b in prop::collection::vec(0u16..4, 3)) {
        let r = bigraded();
        let (ma, mb) = (Monomial::from_exponents(a), Monomial::from_exponents(b));
        let sum = r.multidegree_of(&ma).unwrap().add(&r.multidegree_of(&mb).unwrap());
        prop_assert_eq!(r.multidegree_of(&ma.mul(&mb)).unwrap(), sum);
    }

    #[test]
    fn printing_round_trips(a in terms(4, 5)) {
        let r = standard();
        let p = build(&r, a);
        prop_assert_eq!(parse_polynomial(&p.to_string(), &r).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn groebner_bases_satisfy_buchberger(gens in generators(), f in terms(3, 4)) {
        let r = standard();
        let gens: Vec<Polynomial> = gens.into_iter().map(|g| build(&r, g)).collect();
        let gb = groebner_basis(&r, &gens).unwrap();
        prop_assert!(satisfies_buchberger_criterion(&gb));
        for g in &gens {
            prop_assert!(gb.contains(g));
        }
        let f = build(&r, f);
        let nf = gb.normal_form(&f);
        prop_assert_eq!(gb.normal_form(&nf), nf.clone());
        prop_assert!(gb.contains(&(&f - &nf)));
    }

    #[test]
    fn colon_is_sound(gens in generators(), f in homogeneous(1, 2)) {
        let r = standard();
        let ideal = Ideal::new(&r, gens.into_iter().map(|g| build(&r, g)).collect()).unwrap();
        let f = build(&r, f);
        let colon = colon_ideal(&ideal, &f).unwrap();
        for g in colon.generators() {
            prop_assert!(ideal_membership(&(g * &f), &ideal));
        }
        for g in ideal.generators() {
            prop_assert!(colon.contains(g));
        }
    }

    #[test]
    fn elimination_is_sound(gens in generators()) {
        let r = standard();
        let ideal = Ideal::new(&r, gens.into_iter().map(|g| build(&r, g)).collect()).unwrap();
        let elim = elimination_ideal(&ideal, &[0]).unwrap();
        for g in elim.generators() {
            prop_assert!(g.avoids(|i| i == 0));
            prop_assert!(ideal.contains(g));
        }
        for g in ideal.groebner().polys() {
            if g.avoids(|i| i == 0) {
                prop_assert!(elim.contains(g));
            }
        }
    }

    #[test]
    fn betti_numbers_ignore_variable_order(gens in generators(), perm in Just([0usize, 1, 2]).prop_shuffle()) {
        let r = standard();
        let gens: Vec<Polynomial> = gens.into_iter().map(|g| build(&r, g)).collect();
        let permuted: Vec<Polynomial> = gens.iter().map(|g| g.embed(&r, &perm)).collect();
        let tables: Vec<_> = [gens, permuted]
            .into_iter()
            .map(|gs| {
                let q = Arc::new(PresentedAlgebra::new(&r, gs, "S/I").unwrap());
                let s = GradedAlgebra::standard(Arc::new(PresentedAlgebra::polynomial_ring(&r, "S"))).unwrap();
                let module = QuotientModule { quotient: q, offset: Multidegree::zero(1) };
                let res = truncated_minimal_resolution(&s, &module, 3, &DegreeWindow::single(7)).unwrap();
                res.betti().entries().map(|(i, d, b)| (i, d.clone(), b)).collect::<Vec<_>>()
            })
            .collect();
        prop_assert_eq!(&tables[0], &tables[1]);
    }

    #[test]
    fn signed_minors_are_syzygies(seed in any::<u64>(), d in 1u32..=3) {
        let ci = CompleteIntersectionInput::generic(field(), 3, 3, d, seed).unwrap();
        let rp = rees_presentation_unchecked(&ci).unwrap();
        let h = rp.minors();
        let zero = Polynomial::zero(rp.ring());
        let against_forms = (0..3).fold(zero.clone(), |acc, j| &acc + &(&h[j] * &rp.forms()[j]));
        let against_ts = (0..3).fold(zero.clone(), |acc, j| &acc + &(&h[j] * &rp.t(j)));
        prop_assert_eq!(against_forms, zero.clone());
        prop_assert_eq!(against_ts, zero);
        let f = rp.forms();
        prop_assert_eq!(h[0].clone(), &(&f[1] * &rp.t(2)) - &(&f[2] * &rp.t(1)));
    }
}
