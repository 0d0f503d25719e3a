//! Polynomial arithmetic over GF(2) and GF(5).
//!
//! Both moduli are prime, so the coefficient rings are fields and
//! Euclidean division is total. Irreducibility testing and enumeration
//! use plain trial division; the degrees that arise here are tiny.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

/// A polynomial over GF(2) or GF(5): little-endian coefficients, each in
/// `0..modulus`, with the leading coefficient nonzero. The zero
/// polynomial is the empty coefficient sequence; its degree is `None`
/// (a "minus infinity" sentinel, never compared numerically).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GfPoly {
    modulus: u8,
    coeffs: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    DivisionByZero,
    Parse(String),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::DivisionByZero => write!(f, "polynomial division by zero"),
            PolyError::Parse(msg) => write!(f, "polynomial parse error: {msg}"),
        }
    }
}

impl core::error::Error for PolyError {}

fn check_modulus(m: u8) {
    assert!(m == 2 || m == 5, "modulus must be 2 or 5, got {m}");
}

/// Multiplicative inverse mod 2 or 5; `c` must be nonzero.
fn inv_mod(c: u8, m: u8) -> u8 {
    debug_assert!(c > 0 && c < m);
    match m {
        2 => 1,
        5 => [0, 1, 3, 2, 4][c as usize],
        _ => unreachable!(),
    }
}

impl GfPoly {
    pub fn zero(modulus: u8) -> Self {
        check_modulus(modulus);
        GfPoly { modulus, coeffs: Vec::new() }
    }

    pub fn one(modulus: u8) -> Self {
        GfPoly::constant(modulus, 1)
    }

    pub fn constant(modulus: u8, c: u8) -> Self {
        GfPoly::from_coeffs(modulus, alloc::vec![c])
    }

    pub fn x(modulus: u8) -> Self {
        GfPoly::from_coeffs(modulus, alloc::vec![0, 1])
    }

    /// Build from little-endian coefficients, reducing each mod `modulus`
    /// and stripping high zeros.
    pub fn from_coeffs(modulus: u8, coeffs: Vec<u8>) -> Self {
        check_modulus(modulus);
        let mut coeffs: Vec<u8> = coeffs.into_iter().map(|c| c % modulus).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        GfPoly { modulus, coeffs }
    }

    pub fn modulus(&self) -> u8 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    /// Coefficient of `X^i`, reading absent positions as 0.
    pub fn coeff(&self, i: usize) -> u8 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Nonzero constant polynomial, i.e. a unit of the coefficient field.
    pub fn is_unit(&self) -> bool {
        self.degree() == Some(0)
    }

    fn assert_same_modulus(&self, other: &GfPoly) {
        assert_eq!(
            self.modulus, other.modulus,
            "modulus mismatch: GF({}) vs GF({})",
            self.modulus, other.modulus
        );
    }

    pub fn add(&self, other: &GfPoly) -> GfPoly {
        self.assert_same_modulus(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| (self.coeff(i) + other.coeff(i)) % self.modulus)
            .collect();
        GfPoly::from_coeffs(self.modulus, coeffs)
    }

    pub fn neg(&self) -> GfPoly {
        let m = self.modulus;
        let coeffs = self.coeffs.iter().map(|&c| (m - c) % m).collect();
        GfPoly::from_coeffs(m, coeffs)
    }

    pub fn sub(&self, other: &GfPoly) -> GfPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &GfPoly) -> GfPoly {
        self.assert_same_modulus(other);
        if self.is_zero() || other.is_zero() {
            return GfPoly::zero(self.modulus);
        }
        let mut coeffs = alloc::vec![0u8; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + a * b) % self.modulus;
            }
        }
        GfPoly::from_coeffs(self.modulus, coeffs)
    }

    /// Multiply by a scalar.
    pub fn scale(&self, c: u8) -> GfPoly {
        let m = self.modulus;
        let coeffs = self.coeffs.iter().map(|&a| (a * c) % m).collect();
        GfPoly::from_coeffs(m, coeffs)
    }

    /// Euclidean division: `self = d·q + r` with `deg r < deg d`.
    pub fn divmod(&self, d: &GfPoly) -> Result<(GfPoly, GfPoly), PolyError> {
        self.assert_same_modulus(d);
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let m = self.modulus;
        let dd = d.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd {
            return Ok((GfPoly::zero(m), self.clone()));
        }
        let lead_inv = inv_mod(*d.coeffs.last().unwrap(), m);
        let mut quot = alloc::vec![0u8; rem.len() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = (rem[k + dd - 1] * lead_inv) % m;
            quot[k] = c;
            if c != 0 {
                for (i, &dc) in d.coeffs.iter().enumerate() {
                    // subtract c * dc * X^{k+i}
                    rem[k + i] = (rem[k + i] + m * m - c * dc % m) % m;
                }
            }
        }
        Ok((GfPoly::from_coeffs(m, quot), GfPoly::from_coeffs(m, rem)))
    }

    /// True when `self` divides `f` (with `0 | 0` but `0 ∤ nonzero`).
    pub fn divides(&self, f: &GfPoly) -> bool {
        if self.is_zero() {
            return f.is_zero();
        }
        f.divmod(self).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    /// Split off the leading unit: returns `(c, g)` with `self = c·g`
    /// and `g` monic. The zero polynomial yields `(1, 0)`.
    pub fn monic(&self) -> (u8, GfPoly) {
        match self.coeffs.last() {
            None => (1, self.clone()),
            Some(&lead) => (lead, self.scale(inv_mod(lead, self.modulus))),
        }
    }

    /// Monic gcd (over GF(2) monic is automatic); `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &GfPoly) -> GfPoly {
        self.assert_same_modulus(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic().1
    }

    /// True iff `deg ≥ 1` and no factorization into two polynomials of
    /// degree ≥ 1 exists. Trial division by monic polynomials up to half
    /// the degree.
    pub fn is_irreducible(&self) -> bool {
        let deg = match self.degree() {
            Some(d) if d >= 1 => d,
            _ => return false,
        };
        for d in 1..=deg / 2 {
            for g in monic_of_degree(self.modulus, d) {
                if g.divides(self) {
                    return false;
                }
            }
        }
        true
    }

    pub fn render(&self) -> String {
        alloc::format!("{self}")
    }
}

/// All monic polynomials of exact degree `d`, ascending by coefficient
/// value.
fn monic_of_degree(modulus: u8, d: usize) -> impl Iterator<Item = GfPoly> {
    let count = (modulus as u64).pow(d as u32);
    (0..count).map(move |mut k| {
        let mut coeffs = alloc::vec![0u8; d + 1];
        for c in coeffs.iter_mut().take(d) {
            *c = (k % modulus as u64) as u8;
            k /= modulus as u64;
        }
        coeffs[d] = 1;
        GfPoly::from_coeffs(modulus, coeffs)
    })
}

/// All irreducible polynomials of exact degree `d`, sorted by coefficient
/// sequence (i.e. by the value `Σ cᵢ·modulusⁱ`). With `monic_only` false,
/// every nonzero leading coefficient appears.
pub fn enumerate_irreducibles(modulus: u8, d: usize, monic_only: bool) -> Vec<GfPoly> {
    check_modulus(modulus);
    assert!(d >= 1, "degree must be at least 1");
    let mut out = Vec::new();
    for g in monic_of_degree(modulus, d) {
        if !g.is_irreducible() {
            continue;
        }
        if monic_only {
            out.push(g);
        } else {
            for c in 1..modulus {
                out.push(g.scale(c));
            }
        }
    }
    out.sort_by(|a, b| a.coeffs.iter().rev().cmp(b.coeffs.iter().rev()));
    out
}

/// Number of monic irreducible polynomials of degree `d` over GF(q), by
/// the necklace-counting formula `(1/d) Σ_{e|d} μ(d/e) q^e`. Multiply by
/// `q - 1` for all leading coefficients.
pub fn count_irreducibles(q: u8, d: u64) -> BigUint {
    assert!(d >= 1, "degree must be at least 1");
    let mut pos = BigUint::from(0u32);
    let mut neg = BigUint::from(0u32);
    for e in 1..=d {
        if d % e != 0 {
            continue;
        }
        let term = BigUint::from(q).pow(e as u32);
        match moebius(d / e) {
            1 => pos += term,
            -1 => neg += term,
            _ => {}
        }
    }
    (pos - neg) / BigUint::from(d)
}

/// Möbius function by trial factorization; fine for the tiny arguments
/// used here.
pub fn moebius(mut n: u64) -> i8 {
    assert!(n >= 1);
    let mut mu = 1i8;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Renders like `X^2+4X+4`: descending powers, zero terms omitted,
/// unit coefficients implicit except in the constant term.
impl fmt::Display for GfPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[i];
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (c, i) {
                (c, 0) => write!(f, "{c}")?,
                (1, 1) => write!(f, "X")?,
                (c, 1) => write!(f, "{c}X")?,
                (1, i) => write!(f, "X^{i}")?,
                (c, i) => write!(f, "{c}X^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GfPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GfPoly[mod {}]({self})", self.modulus)
    }
}

/// Parse the rendered form back; used by diagnostics and tests.
pub fn parse_poly(modulus: u8, s: &str) -> Result<GfPoly, PolyError> {
    check_modulus(modulus);
    let s = s.trim();
    if s.is_empty() {
        return Err(PolyError::Parse("empty input".into()));
    }
    if s == "0" {
        return Ok(GfPoly::zero(modulus));
    }
    let mut coeffs: Vec<u8> = Vec::new();
    for term in s.split('+') {
        let term = term.trim();
        let (coef_str, exp) = match term.find('X') {
            None => (term, 0usize),
            Some(xi) => {
                let rest = &term[xi + 1..];
                let exp = if rest.is_empty() {
                    1
                } else if let Some(e) = rest.strip_prefix('^') {
                    e.parse::<usize>()
                        .map_err(|_| PolyError::Parse(alloc::format!("bad exponent in {term:?}")))?
                } else {
                    return Err(PolyError::Parse(alloc::format!("bad term {term:?}")));
                };
                (&term[..xi], exp)
            }
        };
        let c: u8 = if coef_str.is_empty() {
            1
        } else {
            coef_str
                .parse()
                .map_err(|_| PolyError::Parse(alloc::format!("bad coefficient in {term:?}")))?
        };
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, 0);
        }
        coeffs[exp] = (coeffs[exp] + c % modulus) % modulus;
    }
    Ok(GfPoly::from_coeffs(modulus, coeffs))
}
