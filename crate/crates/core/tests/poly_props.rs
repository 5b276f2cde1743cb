use std::cmp::Ordering;
use std::sync::Arc;

use catena::field::Field;
use catena::poly::{compare_monomials, Monomial, MonomialOrder, Polynomial, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

const V: usize = 3;

fn ring() -> Arc<Ring> {
    Ring::new(Field::Rationals, &["x", "y", "z"]).unwrap()
}

fn mono() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..4, V).prop_map(Monomial::new)
}

fn poly_terms() -> impl Strategy<Value = Vec<(i64, Vec<u32>)>> {
    prop::collection::vec((-4i64..5, prop::collection::vec(0u32..3, V)), 0..5)
}

fn build(ring: &Arc<Ring>, terms: &[(i64, Vec<u32>)]) -> Polynomial {
    Polynomial::from_terms(
        ring,
        MonomialOrder::Grevlex,
        terms
            .iter()
            .map(|(c, e)| (BigRational::from_integer(BigInt::from(*c)), Monomial::new(e.clone())))
            .collect(),
    )
}

fn orders() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::Grevlex),
        Just(MonomialOrder::Lex),
        (1usize..V).prop_map(MonomialOrder::Elimination),
    ]
}

proptest! {
    #[test]
    fn division_recombines(f in poly_terms(), gs in prop::collection::vec(poly_terms(), 1..4), order in orders()) {
        let r = ring();
        let f = build(&r, &f).with_order(order);
        let gs: Vec<Polynomial> = gs.iter().map(|g| build(&r, g).with_order(order)).filter(|g| !g.is_zero()).collect();
        prop_assume!(!gs.is_empty());
        let d = f.divide(&gs, order).unwrap();
        let mut back = d.remainder.clone();
        for (q, g) in d.quotients.iter().zip(&gs) {
            back = &back + &(q * g);
        }
        prop_assert_eq!(&back, &f);
        // no remainder term is divisible by a leading monomial
        for t in d.remainder.terms() {
            for g in &gs {
                prop_assert!(!g.leading_monomial().unwrap().divides(&t.mono));
            }
        }
    }

    #[test]
    fn order_axioms(a in mono(), b in mono(), c in mono(), order in orders()) {
        let ab = compare_monomials(&a, &b, order).unwrap();
        let ba = compare_monomials(&b, &a, order).unwrap();
        prop_assert_eq!(ab, ba.reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        let bc = compare_monomials(&b, &c, order).unwrap();
        if ab != Ordering::Greater && bc != Ordering::Greater {
            prop_assert_ne!(compare_monomials(&a, &c, order).unwrap(), Ordering::Greater);
        }
        prop_assert_ne!(compare_monomials(&Monomial::one(V), &a, order).unwrap(), Ordering::Greater);
        prop_assert_eq!(compare_monomials(&a.mul(&c), &b.mul(&c), order).unwrap(), ab);
    }

    #[test]
    fn commutative_ring_axioms(a in poly_terms(), b in poly_terms(), c in poly_terms()) {
        let r = ring();
        let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(&r), a.clone());
    }

    #[test]
    fn order_change_preserves_value(a in poly_terms(), order in orders()) {
        let r = ring();
        let p = build(&r, &a);
        prop_assert_eq!(p.with_order(order), p.clone());
        let back = p.with_order(order).with_order(MonomialOrder::Grevlex);
        prop_assert_eq!(back.terms(), p.terms());
    }
}

#[test]
fn prime_field_ring_axioms_spot_check() {
    let r = Ring::new(Field::prime(5).unwrap(), &["x", "y"]).unwrap();
    let x = Polynomial::var(&r, 0);
    let y = Polynomial::var(&r, 1);
    let five = Polynomial::constant(&r, BigRational::from_integer(BigInt::from(5)));
    assert!(five.is_zero());
    let s = &x + &y;
    // Frobenius: (x + y)^5 = x^5 + y^5 in characteristic 5
    assert_eq!(s.pow(5), &x.pow(5) + &y.pow(5));
}
