//! Carryless squares and cubes: predicates, enumeration, counting.
//!
//! On the CRT pair, `n² ↔ [f2(X²), f5(X)²]`, since squaring over GF(2)
//! just spreads the coefficients to even positions. So a number is a
//! square iff its GF(2) component lives entirely in even exponents and
//! its GF(5) component is a polynomial square.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::crtpair::{from_pair, CrtPair, to_pair};
use crate::digitnum::DigitNum;
use crate::gfpoly::GfPoly;

pub fn square(n: &DigitNum) -> DigitNum {
    n.mul(n)
}

pub fn cube(n: &DigitNum) -> DigitNum {
    n.mul(&n.mul(n))
}

/// Evidence that `n` is a carryless square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareWitness {
    /// Numerically smallest root: `root ⊠ root = n`.
    pub root: DigitNum,
    /// The GF(5) polynomial whose square is n's GF(5) component.
    pub base5: GfPoly,
    /// Even digit positions of `n` that carry an added 5, i.e. where the
    /// GF(2) component has a nonzero coefficient.
    pub even_position_mask: Vec<usize>,
}

/// "Spread" f(X) to f(X²); inverse of [`even_decimate`].
fn spread_even(f: &GfPoly) -> GfPoly {
    let mut coeffs = Vec::with_capacity(f.coeffs().len() * 2);
    for &c in f.coeffs() {
        coeffs.push(c);
        coeffs.push(0);
    }
    GfPoly::from_coeffs(f.modulus(), coeffs)
}

/// Keep coefficients at even exponents, halving their positions. Returns
/// `None` if any odd-exponent coefficient is nonzero.
fn even_decimate(f: &GfPoly) -> Option<GfPoly> {
    let mut coeffs = Vec::with_capacity(f.coeffs().len() / 2 + 1);
    for (i, &c) in f.coeffs().iter().enumerate() {
        if i % 2 == 0 {
            coeffs.push(c);
        } else if c != 0 {
            return None;
        }
    }
    Some(GfPoly::from_coeffs(f.modulus(), coeffs))
}

/// Brute-force square root in GF(5)[X]. A nonzero square has even
/// degree and leading coefficient 1 or 4.
fn gf5_sqrt(f: &GfPoly) -> Option<GfPoly> {
    debug_assert_eq!(f.modulus(), 5);
    let deg = match f.degree() {
        None => return Some(GfPoly::zero(5)),
        Some(d) => d,
    };
    if deg % 2 != 0 {
        return None;
    }
    let lead = f.coeff(deg);
    if lead != 1 && lead != 4 {
        return None;
    }
    let h = deg / 2;
    let candidates = 5u64.pow(h as u32);
    for lead_root in 1..5u8 {
        if (lead_root * lead_root) % 5 != lead {
            continue;
        }
        for mut k in 0..candidates {
            let mut coeffs = alloc::vec![0u8; h + 1];
            for c in coeffs.iter_mut().take(h) {
                *c = (k % 5) as u8;
                k /= 5;
            }
            coeffs[h] = lead_root;
            let r = GfPoly::from_coeffs(5, coeffs);
            if r.mul(&r) == *f {
                return Some(r);
            }
        }
    }
    None
}

/// Decide whether `n` is a carryless square, with a witness.
pub fn is_square(n: &DigitNum) -> Option<SquareWitness> {
    let p = to_pair(n);
    let r2 = even_decimate(&p.f2)?;
    let r5 = gf5_sqrt(&p.f5)?;
    // the two roots differ only in the sign of the GF(5) part
    let a = from_pair(&CrtPair::new(r2.clone(), r5.clone()));
    let b = from_pair(&CrtPair::new(r2, r5.neg()));
    let (root, base5) = if a <= b { (a, r5) } else { (b, r5.neg()) };
    debug_assert_eq!(root.mul(&root), *n);
    let even_position_mask = p
        .f2
        .coeffs()
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c != 0)
        .map(|(i, _)| i)
        .collect();
    Some(SquareWitness {
        root,
        base5,
        even_position_mask,
    })
}

/// All polynomials over GF(m) with degree at most `max_deg` (including
/// zero).
fn polys_up_to_degree(modulus: u8, max_deg: usize) -> Vec<GfPoly> {
    let count = (modulus as u64).pow(max_deg as u32 + 1);
    (0..count)
        .map(|mut k| {
            let mut coeffs = alloc::vec![0u8; max_deg + 1];
            for c in coeffs.iter_mut() {
                *c = (k % modulus as u64) as u8;
                k /= modulus as u64;
            }
            GfPoly::from_coeffs(modulus, coeffs)
        })
        .collect()
}

/// All k-digit carryless squares (zero excluded), ascending; empty for
/// even k.
///
/// Generated by the recipe: take `[0, f5²]` and add 5 at any subset of
/// even digit positions (the `[g2(X²), 0]` part), keeping the pairs
/// whose combined length is exactly k.
pub fn squares_with_digits(k: usize) -> Vec<DigitNum> {
    assert!(k >= 1, "digit count must be at least 1");
    if k % 2 == 0 {
        return Vec::new();
    }
    let h = (k - 1) / 2;
    let mut out = BTreeSet::new();
    for g2 in polys_up_to_degree(2, h) {
        for r5 in polys_up_to_degree(5, h) {
            // length of the square is 1 + 2·max(deg g2, deg r5)
            let top = g2.degree().into_iter().chain(r5.degree()).max();
            if top != Some(h) {
                continue;
            }
            let sq = CrtPair::new(spread_even(&g2), r5.mul(&r5));
            out.insert(from_pair(&sq));
        }
    }
    out.into_iter().collect()
}

/// Number of k-digit carryless squares: 0 for even k, 5 for k = 1, and
/// `45·10^((k-3)/2) + 2^((k-3)/2)` for odd k ≥ 3 (the integer form of
/// `(9/2)·10^((k-1)/2) + 2^((k-3)/2)`; zero excluded).
pub fn count_squares_with_digits(k: usize) -> BigUint {
    assert!(k >= 1, "digit count must be at least 1");
    if k % 2 == 0 {
        return BigUint::ZERO;
    }
    if k == 1 {
        return BigUint::from(5u32);
    }
    let e = ((k - 3) / 2) as u32;
    BigUint::from(45u32) * BigUint::from(10u32).pow(e) + BigUint::from(2u32).pow(e)
}
