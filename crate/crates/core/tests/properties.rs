//! Generative properties of the monomial and ideal arithmetic.

mod common;

use common::*;
use monobox::*;
use proptest::prelude::*;
use rand::Rng;

fn arb_monomial(n: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..12u64, n).prop_map(Monomial::new)
}

fn arb_ideal(n: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(arb_monomial(n), 0..12)
        .prop_map(move |gens| MonomialIdeal::from_generators(n, gens).unwrap())
}

fn ideal_pair() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (1..=4usize).prop_flat_map(|n| (arb_ideal(n), arb_ideal(n)))
}

fn ideal_with_monomial() -> impl Strategy<Value = (MonomialIdeal, Monomial)> {
    (1..=4usize).prop_flat_map(|n| (arb_ideal(n), arb_monomial(n)))
}

fn two_ideals_with_monomial() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal, Monomial)> {
    (1..=4usize).prop_flat_map(|n| (arb_ideal(n), arb_ideal(n), arb_monomial(n)))
}

fn ideal_with_two_monomials() -> impl Strategy<Value = (MonomialIdeal, Monomial, Monomial)> {
    (1..=4usize).prop_flat_map(|n| (arb_ideal(n), arb_monomial(n), arb_monomial(n)))
}

proptest! {
    #[test]
    fn reduction_is_idempotent_and_antichain((i, _) in ideal_with_monomial()) {
        let again = MonomialIdeal::from_generators(i.num_vars(), i.generators().to_vec()).unwrap();
        prop_assert_eq!(&again, &i);
        for (a, x) in i.generators().iter().enumerate() {
            for (b, y) in i.generators().iter().enumerate() {
                if a != b {
                    prop_assert!(!x.divides(y));
                }
            }
        }
    }

    #[test]
    fn membership_matches_the_reduction_oracle((i, m) in ideal_with_monomial()) {
        let mut gens = i.generators().to_vec();
        gens.push(m.clone());
        let extended = MonomialIdeal::from_generators(i.num_vars(), gens).unwrap();
        prop_assert_eq!(i.contains(&m).unwrap(), extended == i);
    }

    #[test]
    fn product_commutes((i, j) in ideal_pair()) {
        prop_assert_eq!(i.product(&j).unwrap(), j.product(&i).unwrap());
    }

    #[test]
    fn powers_add((i, _) in ideal_pair(), a in 0..=2u64, b in 0..=2u64) {
        let lhs = i.pow(a + b).unwrap();
        let rhs = i.pow(a).unwrap().product(&i.pow(b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn unit_ideal_is_an_identity((i, _) in ideal_pair()) {
        let one = MonomialIdeal::unit(i.num_vars());
        prop_assert_eq!(i.product(&one).unwrap(), i);
    }

    #[test]
    fn colon_composes((i, a, b) in ideal_with_two_monomials()) {
        let chained = i.colon_monomial(&a).unwrap().colon_monomial(&b).unwrap();
        let direct = i.colon_monomial(&a.checked_mul(&b).unwrap()).unwrap();
        prop_assert_eq!(chained, direct);
    }

    #[test]
    fn colon_distributes_over_ideal_sums((i, j, m) in two_ideals_with_monomial()) {
        let lhs = i.sum(&j).unwrap().colon_monomial(&m).unwrap();
        let rhs = i.colon_monomial(&m).unwrap().sum(&j.colon_monomial(&m).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn intersection_membership((i, j) in ideal_pair(), samples in prop::collection::vec(0..14u64, 32)) {
        let n = i.num_vars();
        let both = i.intersect(&j).unwrap();
        for chunk in samples.chunks(n) {
            if chunk.len() < n {
                continue;
            }
            let m = Monomial::new(chunk.to_vec());
            prop_assert_eq!(
                both.contains(&m).unwrap(),
                i.contains(&m).unwrap() && j.contains(&m).unwrap()
            );
        }
    }

    #[test]
    fn subset_agrees_with_sum_absorption((i, j) in ideal_pair()) {
        prop_assert_eq!(i.is_subset_of(&j).unwrap(), i.sum(&j).unwrap() == j);
    }

    #[test]
    fn largest_box_is_among_containing_boxes(exps in prop::collection::vec(0..30u64, 1..4)) {
        let n = exps.len();
        let gens: Vec<Monomial> = (0..n).map(|i| Monomial::pure_power(n, i, 4 + i as u64)).collect();
        let profile = MonomialIdeal::from_generators(n, gens).unwrap().mprimary_profile().unwrap();
        let m = Monomial::new(exps);
        let big = largest_box(&m, &profile).unwrap();
        let all = boxes_containing(&m, &profile).unwrap();
        prop_assert!(all.contains(&big));
        for b in &all {
            prop_assert!(b.coords().iter().zip(big.coords()).all(|(x, y)| x <= y));
        }
    }
}

/// m ∈ I ∩ J ⟺ m ∈ I and m ∈ J over a dense grid, at least a thousand
/// sampled points per run.
#[test]
fn intersection_membership_bulk() {
    let mut r = rng(0x696e7473);
    let mut checked = 0u32;
    for _ in 0..5 {
        let n = r.gen_range(2..=3usize);
        let i = random_m_primary(&mut r, n, 6, 2, false);
        let j = random_m_primary(&mut r, n, 6, 2, false);
        let both = i.intersect(&j).unwrap();
        for _ in 0..1000 {
            let m = m(&(0..n).map(|_| r.gen_range(0..14u64)).collect::<Vec<_>>());
            assert_eq!(
                both.contains(&m).unwrap(),
                i.contains(&m).unwrap() && j.contains(&m).unwrap()
            );
            checked += 1;
        }
    }
    assert!(checked >= 1000);
}

/// The three large worked ideals sit inside their closures, and the
/// explicit colon quotients match the published ones.
#[test]
fn worked_example_quotients() {
    let i = ideal(
        3,
        &[
            &[29, 0, 0],
            &[0, 29, 0],
            &[0, 0, 29],
            &[28, 8, 8],
            &[8, 28, 8],
            &[8, 8, 28],
        ],
    );

    // I^2 : I = I + <x^27 y^27 z^27>
    let q1 = i.pow(2).unwrap().colon(&i).unwrap();
    assert_eq!(q1, i.sum(&ideal(3, &[&[27, 27, 27]])).unwrap());

    // I^3 : I^2 = I + <x^26 y^27 z^27, x^27 y^26 z^27, x^27 y^27 z^26>
    let q2 = successive_quotient(&i, 2).unwrap();
    assert_eq!(
        q2,
        i.sum(&ideal(3, &[&[26, 27, 27], &[27, 26, 27], &[27, 27, 26]]))
            .unwrap()
    );

    // the quotient strictly grows once more at k = 3 (value confirmed by
    // brute-force multiset enumeration of I^4 membership)
    let q3 = successive_quotient(&i, 3).unwrap();
    assert_eq!(
        q3,
        i.sum(&ideal(3, &[&[27, 26, 26], &[26, 27, 26], &[26, 26, 27]]))
            .unwrap()
    );
    assert!(q2.is_subset_of(&q3).unwrap());

    // I^5 : I^4 = I + <x^26 y^26 z^26>
    let q4 = successive_quotient(&i, 4).unwrap();
    let closure = i.sum(&ideal(3, &[&[26, 26, 26]])).unwrap();
    assert_eq!(q4, closure);

    // I^2 : <x^29> equals the box ideal at (1,0,0)
    let colon_route = i.pow(2).unwrap().colon_monomial(&m(&[29, 0, 0])).unwrap();
    let box_route = box_ideal(&i, &BoxCoord(vec![1, 0, 0])).unwrap();
    assert_eq!(colon_route, box_route);

    // I ⊆ Ĩ, strictly: the ideal is not Ratliff-Rush
    let closure = rr_closure(&i).unwrap();
    assert!(i.is_subset_of(&closure).unwrap());
    assert!(!is_ratliff_rush(&i).unwrap());

    // a truncated oracle at k_max = 10 stabilizes on the same answer
    let oracle = oracle_closure(&i, 10, 2).unwrap();
    assert!(oracle.stabilized);
    assert_eq!(oracle.union, closure);
}
