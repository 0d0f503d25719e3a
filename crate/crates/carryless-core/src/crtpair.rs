//! The digitwise Chinese Remainder correspondence between carryless
//! numbers and pairs `[f2(X), f5(X)]` of polynomials over GF(2) and
//! GF(5).
//!
//! Reading each digit mod 2 and mod 5 is a ring isomorphism, so `⊞` and
//! `⊠` become componentwise polynomial addition and multiplication. All
//! structural questions (primality, divisibility, squares) are decided
//! on the pair side.

use alloc::vec::Vec;
use core::fmt;

use crate::digitnum::DigitNum;
use crate::gfpoly::GfPoly;

/// Digit `d` maps to `[d mod 2, d mod 5]`. Kept as an explicit table; a
/// compile-time check below pins it against the computed residues.
const DIGIT_TO_PAIR: [(u8, u8); 10] = [
    (0, 0), // 0
    (1, 1), // 1
    (0, 2), // 2
    (1, 3), // 3
    (0, 4), // 4
    (1, 0), // 5
    (0, 1), // 6
    (1, 2), // 7
    (0, 3), // 8
    (1, 4), // 9
];

const _: () = {
    let mut d = 0;
    while d < 10 {
        let (r2, r5) = DIGIT_TO_PAIR[d as usize];
        assert!(r2 == d % 2 && r5 == d % 5);
        d += 1;
    }
};

/// `PAIR_TO_DIGIT[r2][r5]` is the unique digit with those residues.
const PAIR_TO_DIGIT: [[u8; 5]; 2] = [[0, 6, 2, 8, 4], [5, 1, 7, 3, 9]];

const _: () = {
    let mut d = 0usize;
    while d < 10 {
        let (r2, r5) = DIGIT_TO_PAIR[d];
        assert!(PAIR_TO_DIGIT[r2 as usize][r5 as usize] == d as u8);
        d += 1;
    }
};

/// `d ↦ (d mod 2, d mod 5)` for a digit `0..=9`.
pub fn digit_to_pair(d: u8) -> (u8, u8) {
    DIGIT_TO_PAIR[d as usize]
}

/// Inverse of [`digit_to_pair`]; `r2 ∈ {0,1}`, `r5 ∈ {0..4}`.
pub fn pair_to_digit(r2: u8, r5: u8) -> u8 {
    PAIR_TO_DIGIT[r2 as usize][r5 as usize]
}

/// The pair `[f2(X), f5(X)]` of a carryless number. Each component is
/// canonical on its own, so the two degrees may differ; the original
/// digit length is `1 + max(deg f2, deg f5)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CrtPair {
    pub f2: GfPoly,
    pub f5: GfPoly,
}

impl CrtPair {
    pub fn new(f2: GfPoly, f5: GfPoly) -> Self {
        assert_eq!(f2.modulus(), 2, "first component must be over GF(2)");
        assert_eq!(f5.modulus(), 5, "second component must be over GF(5)");
        CrtPair { f2, f5 }
    }

    pub fn zero() -> Self {
        CrtPair::new(GfPoly::zero(2), GfPoly::zero(5))
    }

    pub fn add(&self, other: &CrtPair) -> CrtPair {
        CrtPair::new(self.f2.add(&other.f2), self.f5.add(&other.f5))
    }

    pub fn mul(&self, other: &CrtPair) -> CrtPair {
        CrtPair::new(self.f2.mul(&other.f2), self.f5.mul(&other.f5))
    }
}

impl fmt::Display for CrtPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; {}]", self.f2, self.f5)
    }
}

impl fmt::Debug for CrtPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CrtPair{self}")
    }
}

/// Read the digits of `n` mod 2 and mod 5.
pub fn to_pair(n: &DigitNum) -> CrtPair {
    let mut c2 = Vec::with_capacity(n.digits().len());
    let mut c5 = Vec::with_capacity(n.digits().len());
    for &d in n.digits() {
        let (r2, r5) = digit_to_pair(d);
        c2.push(r2);
        c5.push(r5);
    }
    CrtPair::new(GfPoly::from_coeffs(2, c2), GfPoly::from_coeffs(5, c5))
}

/// Reassemble digits from a pair, padding the shorter component with
/// zero coefficients.
pub fn from_pair(p: &CrtPair) -> DigitNum {
    let n = p.f2.coeffs().len().max(p.f5.coeffs().len());
    let digits = (0..n)
        .map(|i| pair_to_digit(p.f2.coeff(i), p.f5.coeff(i)))
        .collect();
    DigitNum::from_digits(digits)
}
