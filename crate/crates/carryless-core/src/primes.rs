//! Carryless primality and prime enumeration.
//!
//! Up to units, the primes are exactly the pairs `[f2, u]` with `f2`
//! irreducible over GF(2), and `[1, f5]` with `f5` irreducible over
//! GF(5). Primality is decided on that structure rather than by factor
//! search, which zero-divisors and huge cofactors (such as
//! `2 = 4 ⊠ 5005505553`) make unreliable.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::classify::is_unit;
use crate::crtpair::{from_pair, to_pair, CrtPair};
use crate::digitnum::DigitNum;
use crate::gfpoly::{count_irreducibles, enumerate_irreducibles, GfPoly};

/// Which of the two irreducible shapes a prime has.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeKind {
    /// Pair `[1, f5]`, `f5` irreducible over GF(5).
    EType,
    /// Pair `[f2, u]`, `f2` irreducible over GF(2), `u` a unit of GF(5).
    FType,
}

impl PrimeKind {
    pub fn token(self) -> &'static str {
        match self {
            PrimeKind::EType => "e",
            PrimeKind::FType => "f",
        }
    }
}

/// One enumerated prime with its CRT structure.
///
/// `component` is the canonical (monic) irreducible polynomial: `f5` for
/// an e-type prime, `f2` for an f-type prime. `unit_part` is the GF(5)
/// unit completing the pair, so the value is `[1, unit_part·component]`
/// for e-type and `[component, unit_part]` for f-type. The four
/// associates of a prime share one component and differ in `unit_part`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeRecord {
    pub value: DigitNum,
    pub kind: PrimeKind,
    pub component: GfPoly,
    pub unit_part: u8,
}

impl fmt::Display for PrimeRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({}-type)", self.value, self.kind.token())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimesError {
    /// The counting formula is only defined for k ≥ 2.
    DigitCountTooSmall(usize),
}

impl fmt::Display for PrimesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimesError::DigitCountTooSmall(k) => {
                write!(f, "prime count is only defined for k >= 2 digits, got {k}")
            }
        }
    }
}

impl core::error::Error for PrimesError {}

/// True iff `n` is a carryless prime: a non-unit whose only
/// factorizations are a unit times an associate.
pub fn is_prime(n: &DigitNum) -> bool {
    let p = to_pair(n);
    (p.f2.is_irreducible() && p.f5.is_unit())
        || (p.f2.is_unit() && p.f5.is_irreducible())
}

/// All carryless primes with exactly `k` decimal digits, ascending.
/// There are none with one digit.
pub fn primes_with_digits(k: usize) -> Vec<PrimeRecord> {
    assert!(k >= 1, "digit count must be at least 1");
    if k < 2 {
        return Vec::new();
    }
    let deg = k - 1;
    let mut out = Vec::new();
    for f2 in enumerate_irreducibles(2, deg, true) {
        for u in 1..5u8 {
            let value = from_pair(&CrtPair::new(f2.clone(), GfPoly::constant(5, u)));
            out.push(PrimeRecord {
                value,
                kind: PrimeKind::FType,
                component: f2.clone(),
                unit_part: u,
            });
        }
    }
    for f5 in enumerate_irreducibles(5, deg, true) {
        for u in 1..5u8 {
            let value = from_pair(&CrtPair::new(GfPoly::one(2), f5.scale(u)));
            out.push(PrimeRecord {
                value,
                kind: PrimeKind::EType,
                component: f5.clone(),
                unit_part: u,
            });
        }
    }
    out.sort_by(|a, b| a.value.cmp(&b.value));
    out
}

/// Number of k-digit carryless primes:
/// `(4/(k-1)) Σ_{d | k-1} μ((k-1)/d) (2^d + 5^d)`, for `k ≥ 2`.
pub fn count_primes_with_digits(k: usize) -> Result<BigUint, PrimesError> {
    if k < 2 {
        return Err(PrimesError::DigitCountTooSmall(k));
    }
    let deg = (k - 1) as u64;
    // monic irreducible counts over GF(2) and GF(5), four associates each
    let total = count_irreducibles(2, deg) + count_irreducibles(5, deg);
    Ok(total * BigUint::from(4u32))
}

/// True iff the ideal generated by `n` is prime: `n` must be an
/// associate of one of `[0,1]`, `[1,0]`, `[f2,1]`, `[1,f5]` with the
/// polynomial irreducible — or of `[1,1]` itself when
/// `include_unit_ideal` is set. The `[1,1]` case generates the whole
/// ring, so it is surfaced behind that explicit flag rather than
/// silently included or dropped.
pub fn is_prime_ideal_generator(n: &DigitNum, include_unit_ideal: bool) -> bool {
    let p = to_pair(n);
    // associates of [0,1]: the nonzero evenish constants 2, 4, 6, 8
    if p.f2.is_zero() && p.f5.is_unit() {
        return true;
    }
    // [1,0] is exactly the digit 5 (units act trivially on the zero side)
    if p.f2.is_unit() && p.f5.is_zero() {
        return true;
    }
    if include_unit_ideal && is_unit(n) {
        return true;
    }
    is_prime(n)
}
