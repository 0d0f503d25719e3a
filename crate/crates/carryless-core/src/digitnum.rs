//! Carryless numbers and the three digitwise operations ⊞, ⊠, ⊟.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

/// A carryless number: base-10 digits stored little-endian (position `i`
/// holds the coefficient of `10^i`).
///
/// Canonical form: the highest stored digit is nonzero. Zero is the empty
/// digit sequence and renders as `"0"`. Negatives do not exist; `⊟` maps
/// back into the same nonnegative universe.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DigitNum {
    digits: Vec<u8>,
}

/// Error from [`DigitNum::from_str`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Empty,
    /// Byte offset and offending character.
    BadChar(usize, char),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Empty => write!(f, "empty digit string"),
            ParseError::BadChar(pos, ch) => {
                write!(f, "invalid character {ch:?} at position {pos}")
            }
        }
    }
}

impl core::error::Error for ParseError {}

impl DigitNum {
    pub fn zero() -> Self {
        DigitNum { digits: Vec::new() }
    }

    pub fn one() -> Self {
        DigitNum::from_digit(1)
    }

    /// Single-digit value, `d` in `0..=9`.
    pub fn from_digit(d: u8) -> Self {
        assert!(d <= 9, "digit out of range: {d}");
        DigitNum::from_digits(alloc::vec![d])
    }

    /// Build from little-endian digits, stripping high zeros.
    ///
    /// Panics if any digit is `>= 10`.
    pub fn from_digits(mut digits: Vec<u8>) -> Self {
        assert!(digits.iter().all(|&d| d <= 9), "digit out of range");
        while digits.last() == Some(&0) {
            digits.pop();
        }
        DigitNum { digits }
    }

    /// Read an ordinary nonnegative integer as its decimal digit string.
    pub fn from_u64(mut n: u64) -> Self {
        let mut digits = Vec::new();
        while n > 0 {
            digits.push((n % 10) as u8);
            n /= 10;
        }
        DigitNum { digits }
    }

    /// Little-endian digits in canonical form (empty for zero).
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Digit at position `i`, reading absent positions as 0.
    pub fn digit(&self, i: usize) -> u8 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    /// Number of decimal digits, `ℓ(n)`; zero has length 1.
    pub fn length(&self) -> usize {
        self.digits.len().max(1)
    }

    /// Carryless sum: digit `i` of the result is
    /// `(digit i of self + digit i of other) mod 10`.
    pub fn add(&self, other: &DigitNum) -> DigitNum {
        let n = self.digits.len().max(other.digits.len());
        let digits = (0..n)
            .map(|i| (self.digit(i) + other.digit(i)) % 10)
            .collect();
        DigitNum::from_digits(digits)
    }

    /// Carryless product: schoolbook convolution with every column
    /// reduced mod 10.
    pub fn mul(&self, other: &DigitNum) -> DigitNum {
        if self.is_zero() || other.is_zero() {
            return DigitNum::zero();
        }
        let mut digits = alloc::vec![0u8; self.digits.len() + other.digits.len() - 1];
        for (i, &a) in self.digits.iter().enumerate() {
            for (j, &b) in other.digits.iter().enumerate() {
                digits[i + j] = (digits[i + j] + a * b) % 10;
            }
        }
        DigitNum::from_digits(digits)
    }

    /// 10's complement: each nonzero digit `d` becomes `10 - d`.
    /// This is the additive inverse: `a ⊞ ⊟a = 0`.
    pub fn neg(&self) -> DigitNum {
        let digits = self
            .digits
            .iter()
            .map(|&d| if d == 0 { 0 } else { 10 - d })
            .collect();
        DigitNum::from_digits(digits)
    }

    /// Carryless difference: `a ⊟ b = a ⊞ ⊟b`.
    pub fn sub(&self, other: &DigitNum) -> DigitNum {
        self.add(&other.neg())
    }

    /// Iterated carryless product; `pow(a, 0) = 1`.
    pub fn pow(&self, k: u32) -> DigitNum {
        let mut acc = DigitNum::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Display for DigitNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits.is_empty() {
            return write!(f, "0");
        }
        for &d in self.digits.iter().rev() {
            write!(f, "{}", d)?;
        }
        Ok(())
    }
}

impl fmt::Debug for DigitNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DigitNum({self})")
    }
}

impl FromStr for DigitNum {
    type Err = ParseError;

    /// Accepts any nonempty string of `'0'..='9'`; leading zeros are
    /// stripped during canonicalization.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err(ParseError::Empty);
        }
        let mut digits = Vec::with_capacity(s.len());
        for (pos, ch) in s.char_indices() {
            match ch.to_digit(10) {
                Some(d) => digits.push(d as u8),
                None => return Err(ParseError::BadChar(pos, ch)),
            }
        }
        digits.reverse();
        Ok(DigitNum::from_digits(digits))
    }
}

/// Numeric order of the decimal strings (shorter is smaller, then
/// most-significant digit first).
impl Ord for DigitNum {
    fn cmp(&self, other: &Self) -> Ordering {
        self.digits
            .len()
            .cmp(&other.digits.len())
            .then_with(|| self.digits.iter().rev().cmp(other.digits.iter().rev()))
    }
}

impl PartialOrd for DigitNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl core::ops::Add for &DigitNum {
    type Output = DigitNum;
    fn add(self, rhs: &DigitNum) -> DigitNum {
        DigitNum::add(self, rhs)
    }
}

impl core::ops::Mul for &DigitNum {
    type Output = DigitNum;
    fn mul(self, rhs: &DigitNum) -> DigitNum {
        DigitNum::mul(self, rhs)
    }
}

impl core::ops::Sub for &DigitNum {
    type Output = DigitNum;
    fn sub(self, rhs: &DigitNum) -> DigitNum {
        DigitNum::sub(self, rhs)
    }
}

impl core::ops::Neg for &DigitNum {
    type Output = DigitNum;
    fn neg(self) -> DigitNum {
        DigitNum::neg(self)
    }
}
