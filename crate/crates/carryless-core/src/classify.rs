//! Residue-class classification: the units U = {1,3,7,9}, the "evenish"
//! numbers E (all digits even), the "fiveish" numbers F (all digits 0 or
//! 5), the zero-divisors Z = E ∪ F, and everything else.

use crate::digitnum::DigitNum;

/// Primary class of a carryless number. Exactly one applies; 0 is the
/// one value lying in both E and F and gets its own tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumberClass {
    Unit,
    Evenish,
    Fiveish,
    /// The value 0.
    Zero,
    /// A member of the class N other than a unit.
    Regular,
}

impl NumberClass {
    /// Lowercase token used in CLI output.
    pub fn token(self) -> &'static str {
        match self {
            NumberClass::Unit => "unit",
            NumberClass::Evenish => "evenish",
            NumberClass::Fiveish => "fiveish",
            NumberClass::Zero => "zero",
            NumberClass::Regular => "regular",
        }
    }
}

/// Classification result: the primary class plus the e-type/f-type
/// shape flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub class: NumberClass,
    /// At least two digits, all digits except the rightmost even, the
    /// rightmost odd.
    pub e_type: bool,
    /// At least two digits, all digits except the rightmost in {0,5},
    /// the rightmost neither 0 nor 5.
    pub f_type: bool,
}

pub fn is_unit(n: &DigitNum) -> bool {
    matches!(n.digits(), [1] | [3] | [7] | [9])
}

/// Nonzero with all digits even.
pub fn is_evenish(n: &DigitNum) -> bool {
    !n.is_zero() && n.digits().iter().all(|&d| d % 2 == 0)
}

/// Nonzero with all digits 0 or 5.
pub fn is_fiveish(n: &DigitNum) -> bool {
    !n.is_zero() && n.digits().iter().all(|&d| d % 5 == 0)
}

/// There is a nonzero m with n ⊠ m = 0; equivalently evenish or fiveish.
pub fn is_zero_divisor(n: &DigitNum) -> bool {
    is_evenish(n) || is_fiveish(n)
}

/// Membership in the class N: positive and not a zero-divisor. Note
/// that N includes the units.
pub fn is_in_n(n: &DigitNum) -> bool {
    !n.is_zero() && !is_zero_divisor(n)
}

pub fn is_e_type(n: &DigitNum) -> bool {
    let digits = n.digits();
    digits.len() >= 2
        && digits[0] % 2 == 1
        && digits[1..].iter().all(|&d| d % 2 == 0)
}

pub fn is_f_type(n: &DigitNum) -> bool {
    let digits = n.digits();
    digits.len() >= 2
        && digits[0] % 5 != 0
        && digits[1..].iter().all(|&d| d % 5 == 0)
}

pub fn classify(n: &DigitNum) -> Classification {
    let class = if n.is_zero() {
        NumberClass::Zero
    } else if is_unit(n) {
        NumberClass::Unit
    } else if is_evenish(n) {
        NumberClass::Evenish
    } else if is_fiveish(n) {
        NumberClass::Fiveish
    } else {
        NumberClass::Regular
    };
    Classification {
        class,
        e_type: is_e_type(n),
        f_type: is_f_type(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crtpair::to_pair;
    use crate::digitnum::DigitNum;

    fn n(s: &str) -> DigitNum {
        s.parse().unwrap()
    }

    #[test]
    fn paper_examples() {
        assert_eq!(classify(&n("2468")).class, NumberClass::Evenish);
        assert_eq!(classify(&n("505")).class, NumberClass::Fiveish);
        assert_eq!(classify(&n("7")).class, NumberClass::Unit);
        assert_eq!(classify(&DigitNum::zero()).class, NumberClass::Zero);

        let c21 = classify(&n("21"));
        assert_eq!(c21.class, NumberClass::Regular);
        assert!(c21.e_type && !c21.f_type);

        let c56 = classify(&n("56"));
        assert_eq!(c56.class, NumberClass::Regular);
        assert!(c56.f_type && !c56.e_type);
    }

    #[test]
    fn single_digit_numbers_are_not_typed() {
        for d in 1..10u8 {
            let c = classify(&DigitNum::from_digit(d));
            assert!(!c.e_type && !c.f_type, "digit {d}");
        }
    }

    #[test]
    fn zero_divisors() {
        assert!(is_zero_divisor(&n("2")));
        assert_eq!(n("2").mul(&n("5")), DigitNum::zero());
        assert!(is_zero_divisor(&n("628")));
        assert_eq!(n("628").mul(&n("55")), DigitNum::zero());
        assert!(!is_zero_divisor(&n("21")));
        assert!(!is_zero_divisor(&DigitNum::zero()));
    }

    #[test]
    fn crt_characterization_exhaustive() {
        for v in 1..100_000u64 {
            let a = DigitNum::from_u64(v);
            let p = to_pair(&a);
            assert_eq!(is_evenish(&a), p.f2.is_zero(), "{v}");
            assert_eq!(is_fiveish(&a), p.f5.is_zero(), "{v}");
            assert_eq!(is_in_n(&a), !p.f2.is_zero() && !p.f5.is_zero(), "{v}");
        }
    }

    #[test]
    fn zero_divisor_witnesses() {
        // evenish times the all-5 number of the same length is zero,
        // and symmetrically.
        for v in 1..10_000u64 {
            let a = DigitNum::from_u64(v);
            if is_evenish(&a) {
                let witness = n("5");
                assert_eq!(a.mul(&witness), DigitNum::zero(), "{v}");
            }
            if is_fiveish(&a) {
                let witness = n("2");
                assert_eq!(a.mul(&witness), DigitNum::zero(), "{v}");
            }
        }
    }

    #[test]
    fn evenish_generated_by_doubling() {
        // the sorted, deduplicated image of n ↦ n ⊞ n below 10^4
        let mut image: alloc::vec::Vec<DigitNum> = (0..10_000u64)
            .map(|v| {
                let a = DigitNum::from_u64(v);
                a.add(&a)
            })
            .collect();
        image.sort();
        image.dedup();
        let expected: alloc::vec::Vec<DigitNum> = (0..10_000u64)
            .map(DigitNum::from_u64)
            .filter(|a| a.is_zero() || is_evenish(a))
            .collect();
        assert_eq!(image, expected);
    }
}
