//! Randomized algebraic properties, plus a differential check against a
//! deliberately naive digit-by-digit oracle written from scratch in
//! this file.

use carryless_core::crtpair::{from_pair, to_pair};
use carryless_core::digitnum::DigitNum;
use carryless_core::factorize::{divide, divides, factor, gcd, lcm};
use carryless_core::powers::{is_square, square};
use proptest::prelude::*;

/// Digitwise sum mod 10 on raw little-endian digit slices.
fn oracle_add(a: &[u8], b: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + y) % 10;
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Schoolbook product: one shifted row per digit of `b`, rows folded in
/// with [`oracle_add`]. Different shape from the convolution the crate
/// uses.
fn oracle_mul(a: &[u8], b: &[u8]) -> Vec<u8> {
    let mut acc = Vec::new();
    for (shift, &d) in b.iter().enumerate() {
        let mut row = vec![0u8; shift];
        row.extend(a.iter().map(|&x| x * d % 10));
        acc = oracle_add(&acc, &row);
    }
    acc
}

fn digit_vec() -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..10, 0..50)
}

fn num() -> impl Strategy<Value = DigitNum> {
    digit_vec().prop_map(DigitNum::from_digits)
}

fn small_num() -> impl Strategy<Value = DigitNum> {
    (0u64..10_000_000).prop_map(DigitNum::from_u64)
}

proptest! {
    #[test]
    fn add_matches_oracle(a in digit_vec(), b in digit_vec()) {
        let got = DigitNum::from_digits(a.clone()).add(&DigitNum::from_digits(b.clone()));
        prop_assert_eq!(got.digits(), &oracle_add(&a, &b)[..]);
    }

    #[test]
    fn mul_matches_oracle(a in digit_vec(), b in digit_vec()) {
        let got = DigitNum::from_digits(a.clone()).mul(&DigitNum::from_digits(b.clone()));
        prop_assert_eq!(got.digits(), &oracle_mul(&a, &b)[..]);
    }

    #[test]
    fn add_commutes(a in num(), b in num()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
    }

    #[test]
    fn mul_commutes(a in num(), b in num()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn add_associates(a in num(), b in num(), c in num()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn mul_associates(a in num(), b in num(), c in num()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn mul_distributes(a in num(), b in num(), c in num()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn negation_cancels(a in num()) {
        prop_assert!(a.add(&a.neg()).is_zero());
        prop_assert_eq!(a.sub(&a), DigitNum::zero());
    }

    #[test]
    fn nine_times_negation_is_identity(a in num()) {
        let nine = DigitNum::from_digit(9);
        prop_assert_eq!(nine.mul(&a.neg()), a.clone());
    }

    #[test]
    fn identities(a in num()) {
        prop_assert_eq!(a.add(&DigitNum::zero()), a.clone());
        prop_assert_eq!(a.mul(&DigitNum::one()), a.clone());
        prop_assert!(a.mul(&DigitNum::zero()).is_zero());
    }

    #[test]
    fn crt_is_a_ring_homomorphism(a in num(), b in num()) {
        let (pa, pb) = (to_pair(&a), to_pair(&b));
        prop_assert_eq!(to_pair(&a.add(&b)), pa.add(&pb));
        prop_assert_eq!(to_pair(&a.mul(&b)), pa.mul(&pb));
        prop_assert_eq!(from_pair(&pa), a);
    }

    #[test]
    fn product_length_bound(a in num(), b in num()) {
        // equality exactly when the leading digits still multiply to a
        // nonzero digit, e.g. 25 ⊠ 52 = 90 drops a position
        prop_assume!(!a.is_zero() && !b.is_zero());
        let p = a.mul(&b);
        prop_assert!(p.length() <= a.length() + b.length() - 1);
        let lead = a.digits()[a.length() - 1] * b.digits()[b.length() - 1] % 10;
        prop_assert_eq!(
            p.length() == a.length() + b.length() - 1,
            lead != 0
        );
    }

    #[test]
    fn factor_recombines(a in small_num()) {
        prop_assume!(!a.is_zero());
        let f = factor(&a).unwrap();
        prop_assert_eq!(f.recombine(), a);
    }

    #[test]
    fn division_inverts_multiplication(a in small_num(), b in small_num()) {
        prop_assume!(!a.is_zero());
        let n = a.mul(&b);
        prop_assert!(divides(&a, &n));
        let q = divide(&n, &a).unwrap();
        prop_assert_eq!(q.value.mul(&a), n);
    }

    #[test]
    fn gcd_and_lcm_divide_correctly(a in small_num(), b in small_num()) {
        let g = gcd(&a, &b);
        let l = lcm(&a, &b);
        prop_assert!(divides(&g, &a));
        prop_assert!(divides(&g, &b));
        prop_assert!(divides(&a, &l));
        prop_assert!(divides(&b, &l));
    }

    #[test]
    fn squares_are_recognized(a in small_num()) {
        let s = square(&a);
        let w = is_square(&s).expect("constructed square");
        prop_assert_eq!(square(&w.root), s);
    }
}
