//! Divisibility, quotients, divisors, gcd/lcm, and factorization into
//! carryless primes.
//!
//! Everything is computed on the CRT pair: `d` divides `n` exactly when
//! each component of `d` divides the matching component of `n`, and a
//! factorization of `n` is assembled from the factorizations of its two
//! component polynomials.

use alloc::vec::Vec;
use core::fmt;

use crate::classify::is_unit;
use crate::crtpair::{from_pair, to_pair, CrtPair};
use crate::digitnum::DigitNum;
use crate::gfpoly::{enumerate_irreducibles, GfPoly};
use crate::primes::{PrimeKind, PrimeRecord};

/// Which of the three factorization shapes applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassTag {
    /// `n ∈ N`: unit times a product of primes, no special factor.
    Regular,
    /// Evenish: 2 times a product of e-type primes.
    Evenish,
    /// Fiveish: 5 times a product of f-type primes.
    Fiveish,
}

/// A factorization `n = unit ⊠ special ⊠ ∏ primeᵢ^multᵢ`.
///
/// Primes are stored in canonical form (e-type: `[1, f5]` with `f5`
/// monic; f-type: `[f2, 1]`); the residual unit collected during
/// canonicalization lands in `unit`. Factorizations are unique only up
/// to units, so tests compare canonical multisets and recombination,
/// never literal digit strings from worked examples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub class_tag: ClassTag,
    pub unit: DigitNum,
    /// 2 for evenish numbers, 5 for fiveish, absent otherwise.
    pub special: Option<DigitNum>,
    /// Canonical prime values with multiplicities, ascending.
    pub primes: Vec<(DigitNum, u32)>,
}

impl Factorization {
    /// Multiply everything back together.
    pub fn recombine(&self) -> DigitNum {
        let mut acc = self.unit.clone();
        if let Some(s) = &self.special {
            acc = acc.mul(s);
        }
        for (p, e) in &self.primes {
            for _ in 0..*e {
                acc = acc.mul(p);
            }
        }
        acc
    }

    /// Prime records (kind plus canonical component) for the stored
    /// prime values.
    pub fn prime_records(&self) -> Vec<(PrimeRecord, u32)> {
        self.primes
            .iter()
            .map(|(p, e)| {
                let pair = to_pair(p);
                let rec = if pair.f2.is_unit() {
                    PrimeRecord {
                        value: p.clone(),
                        kind: PrimeKind::EType,
                        component: pair.f5.clone(),
                        unit_part: 1,
                    }
                } else {
                    PrimeRecord {
                        value: p.clone(),
                        kind: PrimeKind::FType,
                        component: pair.f2.clone(),
                        unit_part: 1,
                    }
                };
                (rec, *e)
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorError {
    Zero,
    DivisorZero,
    NotDivisible,
    /// e ⊠ f / e′ ⊞ f′ decompositions need a non-unit in N with both
    /// CRT components non-constant.
    NotDecomposable,
}

impl fmt::Display for FactorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorError::Zero => write!(f, "zero has no factorization"),
            FactorError::DivisorZero => write!(f, "division by zero"),
            FactorError::NotDivisible => write!(f, "not divisible"),
            FactorError::NotDecomposable => {
                write!(f, "no e-type/f-type decomposition exists for this number")
            }
        }
    }
}

impl core::error::Error for FactorError {}

/// True iff some `q` satisfies `d ⊠ q = n`; componentwise polynomial
/// divisibility, with `0 | 0` but `0 ∤ nonzero`.
pub fn divides(d: &DigitNum, n: &DigitNum) -> bool {
    let pd = to_pair(d);
    let pn = to_pair(n);
    pd.f2.divides(&pn.f2) && pd.f5.divides(&pn.f5)
}

/// How the full quotient set relates to the canonical quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientAmbiguity {
    /// The quotient is unique (divisor in N or a unit).
    Unique,
    /// Divisor evenish: every `q ⊞ v` with `v` fiveish also works.
    PlusFiveish,
    /// Divisor fiveish: every `q ⊞ e` with `e` evenish also works.
    PlusEvenish,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub value: DigitNum,
    pub ambiguity: QuotientAmbiguity,
}

/// Divide `n` by a nonzero divisor `d`. For `d` evenish the canonical
/// quotient has zero GF(2) component; for `d` fiveish, zero GF(5)
/// component.
pub fn divide(n: &DigitNum, d: &DigitNum) -> Result<Quotient, FactorError> {
    if d.is_zero() {
        return Err(FactorError::DivisorZero);
    }
    if !divides(d, n) {
        return Err(FactorError::NotDivisible);
    }
    let pd = to_pair(d);
    let pn = to_pair(n);
    let quot = |a: &GfPoly, b: &GfPoly| -> GfPoly {
        let (q, r) = a.divmod(b).expect("component checked nonzero");
        debug_assert!(r.is_zero());
        q
    };
    let (pair, ambiguity) = if pd.f2.is_zero() {
        (
            CrtPair::new(GfPoly::zero(2), quot(&pn.f5, &pd.f5)),
            QuotientAmbiguity::PlusFiveish,
        )
    } else if pd.f5.is_zero() {
        (
            CrtPair::new(quot(&pn.f2, &pd.f2), GfPoly::zero(5)),
            QuotientAmbiguity::PlusEvenish,
        )
    } else {
        (
            CrtPair::new(quot(&pn.f2, &pd.f2), quot(&pn.f5, &pd.f5)),
            QuotientAmbiguity::Unique,
        )
    };
    Ok(Quotient {
        value: from_pair(&pair),
        ambiguity,
    })
}

/// Factor a polynomial over GF(2) or GF(5) into its leading unit and
/// monic irreducibles with multiplicity, by trial division in ascending
/// degree. `f` must be nonzero.
fn factor_poly(f: &GfPoly) -> (u8, Vec<(GfPoly, u32)>) {
    debug_assert!(!f.is_zero());
    let (unit, mut rest) = f.monic();
    let mut factors: Vec<(GfPoly, u32)> = Vec::new();
    let mut deg = 1;
    while rest.degree() != Some(0) {
        debug_assert!(deg <= rest.degree().unwrap());
        for cand in enumerate_irreducibles(rest.modulus(), deg, true) {
            let mut mult = 0u32;
            loop {
                let (q, r) = rest.divmod(&cand).expect("candidate nonzero");
                if r.is_zero() {
                    rest = q;
                    mult += 1;
                } else {
                    break;
                }
            }
            if mult > 0 {
                factors.push((cand, mult));
            }
            if rest.degree() == Some(0) {
                break;
            }
        }
        deg += 1;
    }
    debug_assert_eq!(rest, GfPoly::one(rest.modulus()));
    (unit, factors)
}

/// The canonical e-type prime `[1, f5]` for a monic irreducible `f5`.
fn e_prime(f5: &GfPoly) -> DigitNum {
    from_pair(&CrtPair::new(GfPoly::one(2), f5.clone()))
}

/// The canonical f-type prime `[f2, 1]` for an irreducible `f2`.
fn f_prime(f2: &GfPoly) -> DigitNum {
    from_pair(&CrtPair::new(f2.clone(), GfPoly::one(5)))
}

/// Unit digit corresponding to the pair `[1, c]`.
fn unit_from_gf5(c: u8) -> DigitNum {
    from_pair(&CrtPair::new(GfPoly::one(2), GfPoly::constant(5, c)))
}

/// Factor `n` into carryless primes. Units come back with an empty
/// prime multiset and themselves as the unit part; zero is an error.
pub fn factor(n: &DigitNum) -> Result<Factorization, FactorError> {
    if n.is_zero() {
        return Err(FactorError::Zero);
    }
    if is_unit(n) {
        return Ok(Factorization {
            class_tag: ClassTag::Regular,
            unit: n.clone(),
            special: None,
            primes: Vec::new(),
        });
    }
    let p = to_pair(n);
    let mut primes: Vec<(DigitNum, u32)> = Vec::new();

    let fact = if p.f2.is_zero() {
        // evenish: n = 2 ⊠ u ⊠ ∏ e-type primes, on the GF(5) side
        // f5 = 2·c·∏ p5 with c making the product monic
        let (lead, factors) = factor_poly(&p.f5);
        for (f5, mult) in &factors {
            primes.push((e_prime(f5), *mult));
        }
        // lead = 2·c in GF(5)
        let c = (lead * 3) % 5; // 3 = 2⁻¹ mod 5
        Factorization {
            class_tag: ClassTag::Evenish,
            unit: unit_from_gf5(c),
            special: Some(DigitNum::from_digit(2)),
            primes,
        }
    } else if p.f5.is_zero() {
        // fiveish: n = 5 ⊠ ∏ f-type primes (GF(2) has no unit choice)
        let (_, factors) = factor_poly(&p.f2);
        for (f2, mult) in &factors {
            primes.push((f_prime(f2), *mult));
        }
        Factorization {
            class_tag: ClassTag::Fiveish,
            unit: DigitNum::one(),
            special: Some(DigitNum::from_digit(5)),
            primes,
        }
    } else {
        let (_, factors2) = factor_poly(&p.f2);
        let (lead5, factors5) = factor_poly(&p.f5);
        for (f2, mult) in &factors2 {
            primes.push((f_prime(f2), *mult));
        }
        for (f5, mult) in &factors5 {
            primes.push((e_prime(f5), *mult));
        }
        Factorization {
            class_tag: ClassTag::Regular,
            unit: unit_from_gf5(lead5),
            special: None,
            primes,
        }
    };
    let mut fact = fact;
    fact.primes.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(fact)
}

/// Shape of a divisor-class family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassShape {
    /// n ∈ N: finitely many divisors, grouped as `d ⊠ U`.
    Finite,
    /// n evenish: classes `d ⊠ U ⊞ F`, each infinite.
    PlusFiveish,
    /// n fiveish: classes `d ⊠ U ⊞ E`, each infinite.
    PlusEvenish,
}

/// Divisors of `n`, one representative per equivalence class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClasses {
    pub representatives: Vec<DigitNum>,
    pub class_shape: ClassShape,
}

impl DivisorClasses {
    /// The full divisor set for a number in N: representatives times
    /// units, sorted. Only meaningful for `ClassShape::Finite`.
    pub fn full_finite_list(&self) -> Vec<DigitNum> {
        debug_assert_eq!(self.class_shape, ClassShape::Finite);
        let units = [1u8, 3, 7, 9].map(DigitNum::from_digit);
        let mut out: Vec<DigitNum> = self
            .representatives
            .iter()
            .flat_map(|d| units.iter().map(move |u| d.mul(u)))
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

/// All sub-multiset products of a prime-power list.
fn submultiset_products(factors: &[(GfPoly, u32)], modulus: u8) -> Vec<GfPoly> {
    let mut out = alloc::vec![GfPoly::one(modulus)];
    for (p, e) in factors {
        let prev = out.clone();
        let mut power = GfPoly::one(modulus);
        out.clear();
        for _ in 0..=*e {
            for g in &prev {
                out.push(g.mul(&power));
            }
            power = power.mul(p);
        }
    }
    out
}

/// Divisors of a nonzero `n`, grouped into equivalence classes.
///
/// For `n ∈ N` every divisor is a unit multiple of one representative
/// and the list is complete. For evenish and fiveish `n` the classes
/// are infinite cosets; the representatives are the special factor (2
/// or 5) for the trivial class and the canonical sub-products of the
/// prime factorization otherwise.
pub fn divisors(n: &DigitNum) -> Result<DivisorClasses, FactorError> {
    if n.is_zero() {
        return Err(FactorError::Zero);
    }
    let p = to_pair(n);
    if p.f2.is_zero() {
        let (_, factors) = factor_poly(&p.f5);
        let mut reps: Vec<DigitNum> = submultiset_products(&factors, 5)
            .into_iter()
            .map(|g| {
                if g.is_unit() {
                    DigitNum::from_digit(2)
                } else {
                    e_prime(&g)
                }
            })
            .collect();
        reps.sort();
        reps.dedup();
        return Ok(DivisorClasses {
            representatives: reps,
            class_shape: ClassShape::PlusFiveish,
        });
    }
    if p.f5.is_zero() {
        let (_, factors) = factor_poly(&p.f2);
        let mut reps: Vec<DigitNum> = submultiset_products(&factors, 2)
            .into_iter()
            .map(|g| {
                if g.is_unit() {
                    DigitNum::from_digit(5)
                } else {
                    f_prime(&g)
                }
            })
            .collect();
        reps.sort();
        reps.dedup();
        return Ok(DivisorClasses {
            representatives: reps,
            class_shape: ClassShape::PlusEvenish,
        });
    }
    let (_, factors2) = factor_poly(&p.f2);
    let (_, factors5) = factor_poly(&p.f5);
    let prods2 = submultiset_products(&factors2, 2);
    let prods5 = submultiset_products(&factors5, 5);
    let mut reps: Vec<DigitNum> = prods2
        .iter()
        .flat_map(|g2| {
            prods5
                .iter()
                .map(move |g5| from_pair(&CrtPair::new(g2.clone(), g5.clone())))
        })
        .collect();
    reps.sort();
    reps.dedup();
    Ok(DivisorClasses {
        representatives: reps,
        class_shape: ClassShape::Finite,
    })
}

/// Componentwise polynomial gcd, lifted back to a carryless number.
/// Convention for zero components: `gcd(0, g) = g`. The result is the
/// canonical associate (monic components).
pub fn gcd(a: &DigitNum, b: &DigitNum) -> DigitNum {
    let pa = to_pair(a);
    let pb = to_pair(b);
    from_pair(&CrtPair::new(pa.f2.gcd(&pb.f2), pa.f5.gcd(&pb.f5)))
}

/// Componentwise polynomial lcm; `lcm(0, g) = 0` per component.
pub fn lcm(a: &DigitNum, b: &DigitNum) -> DigitNum {
    let pa = to_pair(a);
    let pb = to_pair(b);
    let comp = |x: &GfPoly, y: &GfPoly| -> GfPoly {
        if x.is_zero() || y.is_zero() {
            return GfPoly::zero(x.modulus());
        }
        let g = x.gcd(y);
        let (q, _) = x.mul(y).divmod(&g).expect("gcd of nonzero is nonzero");
        q.monic().1
    };
    from_pair(&CrtPair::new(
        comp(&pa.f2, &pb.f2),
        comp(&pa.f5, &pb.f5),
    ))
}

/// The two shapes `n = e ⊠ f` and `n = e′ ⊞ f′` with e-type and f-type
/// components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EfDecomposition {
    pub product: (DigitNum, DigitNum),
    pub sum: (DigitNum, DigitNum),
}

/// Write a non-unit `n ∈ N` as an e-type times an f-type number and as
/// an e-type plus an f-type number.
///
/// Such decompositions exist exactly when both CRT components have
/// degree ≥ 1 (an e-type number is `[1, e5]` and an f-type number is
/// `[f2, u]` with the polynomial non-constant, so both a product and a
/// sum of the two shapes always have two non-constant components).
/// Numbers like 21 = `[1, 2X+1]` therefore admit none and return
/// `NotDecomposable`.
pub fn e_f_decomposition(n: &DigitNum) -> Result<EfDecomposition, FactorError> {
    let p = to_pair(n);
    if p.f2.is_zero() || p.f5.is_zero() || is_unit(n) {
        return Err(FactorError::NotDecomposable);
    }
    let deg2 = p.f2.degree().expect("nonzero");
    let deg5 = p.f5.degree().expect("nonzero");
    if deg2 == 0 || deg5 == 0 {
        return Err(FactorError::NotDecomposable);
    }
    let one2 = GfPoly::one(2);
    let product = (
        from_pair(&CrtPair::new(one2.clone(), p.f5.clone())),
        from_pair(&CrtPair::new(p.f2.clone(), GfPoly::one(5))),
    );
    let sum = (
        from_pair(&CrtPair::new(
            one2.clone(),
            p.f5.sub(&GfPoly::one(5)),
        )),
        from_pair(&CrtPair::new(p.f2.add(&one2), GfPoly::one(5))),
    );
    Ok(EfDecomposition { product, sum })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{
        classify, is_e_type, is_evenish, is_f_type, is_fiveish, is_in_n, NumberClass,
    };
    use alloc::string::ToString;
    use alloc::vec::Vec;

    fn n(s: &str) -> DigitNum {
        s.parse().unwrap()
    }

    #[test]
    fn divides_examples() {
        assert!(divides(&n("56"), &n("10")));
        assert!(divides(&n("59"), &n("417")));
        // 21 ↔ [1, 2X+1] cannot divide 2 ↔ [0, 2]: a GF(5) quotient would
        // need (2X+1)·q5 = 2, impossible on degrees
        assert!(!divides(&n("21"), &n("2")));
        assert!(divides(&n("4"), &n("2"))); // 2 = 4 ⊠ 5005505553
        assert!(divides(&n("5005505553"), &n("2")));
        assert!(!divides(&n("10"), &n("21")));
        assert!(divides(&n("5"), &DigitNum::zero()));
        assert!(!divides(&DigitNum::zero(), &n("5")));
    }

    #[test]
    fn divides_matches_brute_force() {
        // oracle: search all q with up to 4 digits
        for d in 0..100u64 {
            let dd = DigitNum::from_u64(d);
            for target in 0..100u64 {
                let tt = DigitNum::from_u64(target);
                let brute = (0..10_000u64).any(|q| dd.mul(&DigitNum::from_u64(q)) == tt);
                // a quotient for a ≤2-digit target of a ≤2-digit divisor
                // never needs more than 4 digits: quotient components
                // have degree ≤ deg(target component) ≤ 1 except for the
                // free component, which the canonical quotient sets to 0
                if dd.is_zero() {
                    continue;
                }
                assert_eq!(divides(&dd, &tt), brute, "d={d} target={target}");
            }
        }
    }

    #[test]
    fn divide_examples() {
        let q = divide(&n("417"), &n("59")).unwrap();
        assert_eq!(q.value, n("643"));
        assert_eq!(q.ambiguity, QuotientAmbiguity::Unique);

        let q = divide(&n("20"), &n("2")).unwrap();
        assert_eq!(q.ambiguity, QuotientAmbiguity::PlusFiveish);
        assert_eq!(n("2").mul(&q.value), n("20"));
        // 65 is one of the valid quotients: 65 = q ⊞ v for fiveish v
        assert_eq!(n("2").mul(&n("65")), n("20"));

        let q = divide(&n("12345"), &DigitNum::one()).unwrap();
        assert_eq!(q.value, n("12345"));
        assert_eq!(q.ambiguity, QuotientAmbiguity::Unique);

        assert_eq!(divide(&n("3"), &DigitNum::zero()), Err(FactorError::DivisorZero));
        assert_eq!(divide(&n("21"), &n("10")), Err(FactorError::NotDivisible));
    }

    #[test]
    fn quotient_ambiguity_scan() {
        // for d ∈ E dividing n, the quotients below 10^4 are exactly
        // (q ⊞ F) below 10^4
        let d = n("2");
        let target = n("20");
        let q = divide(&target, &d).unwrap().value;
        let mut brute: Vec<DigitNum> = (0..10_000u64)
            .map(DigitNum::from_u64)
            .filter(|c| d.mul(c) == target)
            .collect();
        brute.sort();
        let mut coset: Vec<DigitNum> = (0..10_000u64)
            .map(DigitNum::from_u64)
            .filter(|v| v.is_zero() || is_fiveish(v))
            .map(|v| q.add(&v))
            .filter(|c| c < &n("10000"))
            .collect();
        coset.sort();
        coset.dedup();
        assert_eq!(brute, coset);
    }

    #[test]
    fn factor_paper_examples() {
        for (value, expect_special, expect_prime_count) in [
            ("10", None, 2usize),
            ("1234", None, 6),
            ("2468", Some("2"), 3),
            ("505", Some("5"), 2),
            // 101 ↔ [(X+1)², (X+2)(X+3)]: four prime factors, e.g.
            // 101 = 21 ⊠ 29 ⊠ 51 ⊠ 59
            ("101", None, 4),
            ("20", Some("2"), 1),
            ("22", Some("2"), 1),
            ("50", Some("5"), 1),
        ] {
            let f = factor(&n(value)).unwrap();
            assert_eq!(f.recombine(), n(value), "{value}");
            assert_eq!(
                f.special.as_ref().map(|s| s.to_string()),
                expect_special.map(|s| s.to_string()),
                "{value}"
            );
            let total: u32 = f.primes.iter().map(|(_, e)| e).sum();
            assert_eq!(total as usize, expect_prime_count, "{value}");
        }
    }

    #[test]
    fn factor_units_and_zero() {
        let f = factor(&n("7")).unwrap();
        assert_eq!(f.class_tag, ClassTag::Regular);
        assert_eq!(f.unit, n("7"));
        assert!(f.primes.is_empty() && f.special.is_none());
        assert_eq!(factor(&DigitNum::zero()), Err(FactorError::Zero));
    }

    #[test]
    fn factor_class_shapes() {
        for v in 1..3000u64 {
            let a = DigitNum::from_u64(v);
            let f = factor(&a).unwrap();
            assert_eq!(f.recombine(), a, "{v}");
            match classify(&a).class {
                NumberClass::Evenish => {
                    assert_eq!(f.class_tag, ClassTag::Evenish);
                    assert!(f.primes.iter().all(|(p, _)| is_e_type(p)), "{v}");
                }
                NumberClass::Fiveish => {
                    assert_eq!(f.class_tag, ClassTag::Fiveish);
                    assert!(f.primes.iter().all(|(p, _)| is_f_type(p)), "{v}");
                }
                _ => assert_eq!(f.class_tag, ClassTag::Regular),
            }
        }
    }

    #[test]
    fn unique_factorization_matches_brute_force() {
        // for n ∈ N up to 3 digits, greedily splitting off any prime
        // divisor must reach the same canonical multiset
        use crate::primes::is_prime;
        let small_primes: Vec<DigitNum> = crate::primes::primes_with_digits(2)
            .into_iter()
            .map(|r| r.value)
            .chain(crate::primes::primes_with_digits(3).into_iter().map(|r| r.value))
            .collect();
        for v in 1..1000u64 {
            let a = DigitNum::from_u64(v);
            if !is_in_n(&a) || is_unit(&a) {
                continue;
            }
            let canonical = factor(&a).unwrap();
            // brute-force: peel off the first prime that divides, recurse
            let mut rest = a.clone();
            let mut found: Vec<DigitNum> = Vec::new();
            loop {
                if is_unit(&rest) {
                    break;
                }
                if is_prime(&rest) {
                    found.push(factor(&rest).unwrap().primes[0].0.clone());
                    break;
                }
                let p = small_primes
                    .iter()
                    .find(|p| divides(p, &rest))
                    .unwrap_or_else(|| panic!("no prime divisor of {rest}"));
                found.push(factor(p).unwrap().primes[0].0.clone());
                rest = divide(&rest, p).unwrap().value;
            }
            found.sort();
            let mut expanded: Vec<DigitNum> = Vec::new();
            for (p, e) in &canonical.primes {
                for _ in 0..*e {
                    expanded.push(p.clone());
                }
            }
            assert_eq!(found, expanded, "n = {v}");
        }
    }

    #[test]
    fn divisors_of_21() {
        let d = divisors(&n("21")).unwrap();
        assert_eq!(d.class_shape, ClassShape::Finite);
        let mut full = d.full_finite_list();
        full.sort();
        let mut expect: Vec<DigitNum> =
            ["1", "3", "7", "9", "21", "47", "63", "89"].map(n).to_vec();
        expect.sort();
        assert_eq!(full, expect);
    }

    #[test]
    fn divisors_of_one() {
        let d = divisors(&DigitNum::one()).unwrap();
        assert_eq!(d.representatives, alloc::vec![DigitNum::one()]);
        assert_eq!(
            d.full_finite_list(),
            ["1", "3", "7", "9"].map(n).to_vec()
        );
    }

    #[test]
    fn divisors_of_20() {
        let d = divisors(&n("20")).unwrap();
        assert_eq!(d.class_shape, ClassShape::PlusFiveish);
        assert!(d.representatives.contains(&n("2")));
        assert!(d.representatives.contains(&n("65")));
        for rep in &d.representatives {
            assert!(divides(rep, &n("20")), "{rep}");
        }
    }

    #[test]
    fn divisors_match_brute_force_for_n_class() {
        for v in 1..300u64 {
            let a = DigitNum::from_u64(v);
            if !is_in_n(&a) {
                continue;
            }
            let full = divisors(&a).unwrap().full_finite_list();
            // every ≤4-digit number dividing a must appear; divisors of
            // an n ∈ N are no longer than n, so 4 digits covers v < 300
            let brute: Vec<DigitNum> = (1..10_000u64)
                .map(DigitNum::from_u64)
                .filter(|d| divides(d, &a))
                .collect();
            assert_eq!(full, brute, "n = {v}");
        }
    }

    #[test]
    fn divisor_sum_is_zero() {
        for v in 1..1000u64 {
            let a = DigitNum::from_u64(v);
            if !is_in_n(&a) {
                continue;
            }
            let mut sum = DigitNum::zero();
            for d in divisors(&a).unwrap().full_finite_list() {
                sum = sum.add(&d);
            }
            assert!(sum.is_zero(), "n = {v}");
        }
    }

    #[test]
    fn every_f_type_prime_divides_evenish() {
        let two_digit = crate::primes::primes_with_digits(2);
        for v in 1..10_000u64 {
            let a = DigitNum::from_u64(v);
            for r in &two_digit {
                match r.kind {
                    PrimeKind::FType if is_evenish(&a) => {
                        assert!(divides(&r.value, &a), "{} | {v}", r.value)
                    }
                    PrimeKind::EType if is_fiveish(&a) => {
                        assert!(divides(&r.value, &a), "{} | {v}", r.value)
                    }
                    _ => {}
                }
            }
        }
    }

    #[test]
    fn gcd_lcm_examples() {
        let g = gcd(&n("417"), &DigitNum::zero());
        assert!(divides(&g, &n("417")) && divides(&n("417"), &g));

        let g = gcd(&n("10"), &n("20"));
        assert!(divides(&n("65"), &g));
        assert!(divides(&g, &n("10")) && divides(&g, &n("20")));

        let l = lcm(&DigitNum::one(), &n("417"));
        assert!(divides(&n("417"), &l) && divides(&l, &n("417")));

        for (a, b) in [(10u64, 20u64), (21, 63), (56, 65), (12, 18)] {
            let (da, db) = (DigitNum::from_u64(a), DigitNum::from_u64(b));
            let g = gcd(&da, &db);
            let l = lcm(&da, &db);
            assert!(divides(&g, &da) && divides(&g, &db), "gcd({a},{b})");
            assert!(divides(&da, &l) && divides(&db, &l), "lcm({a},{b})");
        }
    }

    #[test]
    fn e_f_decomposition_of_12() {
        let d = e_f_decomposition(&n("12")).unwrap();
        let (e, f) = &d.product;
        assert!(is_e_type(e) && is_f_type(f));
        assert_eq!(e.mul(f), n("12"));
        let (e, f) = &d.sum;
        assert!(is_e_type(e) && is_f_type(f));
        assert_eq!(e.add(f), n("12"));
        // this construction lands on the identity 12 = 61 ⊞ 51
        assert_eq!(d.sum, (n("61"), n("51")));
    }

    #[test]
    fn e_f_decomposition_valid_when_it_exists() {
        for v in 10..1000u64 {
            let a = DigitNum::from_u64(v);
            if !is_in_n(&a) || is_unit(&a) {
                continue;
            }
            match e_f_decomposition(&a) {
                Ok(d) => {
                    assert_eq!(d.product.0.mul(&d.product.1), a, "{v}");
                    assert_eq!(d.sum.0.add(&d.sum.1), a, "{v}");
                    assert!(is_e_type(&d.product.0) && is_f_type(&d.product.1));
                    assert!(is_e_type(&d.sum.0) && is_f_type(&d.sum.1));
                }
                Err(FactorError::NotDecomposable) => {
                    // confirmed impossible: brute force over small shapes
                    let found = (10..1000u64).any(|e| {
                        let de = DigitNum::from_u64(e);
                        is_e_type(&de)
                            && (10..1000u64).any(|f| {
                                let df = DigitNum::from_u64(f);
                                is_f_type(&df) && de.mul(&df) == a
                            })
                    });
                    assert!(!found, "decomposition exists for {v} but was refused");
                }
                Err(other) => panic!("unexpected error for {v}: {other}"),
            }
        }
    }

    #[test]
    fn e_f_decomposition_rejects_21() {
        // 21 ↔ [1, 2X+1] has a constant GF(2) component: every e ⊠ f has
        // f2 of degree ≥ 1, so no decomposition exists
        assert_eq!(e_f_decomposition(&n("21")), Err(FactorError::NotDecomposable));
        assert_eq!(e_f_decomposition(&n("7")), Err(FactorError::NotDecomposable));
        assert_eq!(e_f_decomposition(&n("20")), Err(FactorError::NotDecomposable));
    }
}
