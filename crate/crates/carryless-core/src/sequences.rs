//! Named integer-sequence generators, keyed by OEIS A-number.
//!
//! Each generator reproduces a carryless analog of a classical
//! sequence; values come back as decimal strings together with their
//! index, starting at the entry's offset, so they can be diffed
//! directly against b-file data.

use alloc::borrow::ToOwned;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::classify::{is_evenish, is_fiveish};
use crate::digitnum::DigitNum;
use crate::powers::{count_squares_with_digits, cube, square, squares_with_digits};
use crate::primes::{count_primes_with_digits, primes_with_digits};

/// A term: OEIS-style index plus decimal value.
pub type Term = (i64, String);

/// Static description of one supported sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequenceInfo {
    pub a_number: &'static str,
    pub offset: i64,
    pub description: &'static str,
}

/// Everything [`generate`] knows how to produce.
pub const SUPPORTED: &[SequenceInfo] = &[
    SequenceInfo { a_number: "A004520", offset: 0, description: "n ⊞ n" },
    SequenceInfo { a_number: "A059729", offset: 0, description: "n ⊠ n" },
    SequenceInfo { a_number: "A014263", offset: 1, description: "evenish numbers (all digits even)" },
    SequenceInfo { a_number: "A169964", offset: 1, description: "fiveish numbers (all digits 0 or 5)" },
    SequenceInfo { a_number: "A169884", offset: 1, description: "zero-divisors (evenish or fiveish)" },
    SequenceInfo { a_number: "A169968", offset: 1, description: "the class N: positive non-zero-divisors" },
    SequenceInfo { a_number: "A169887", offset: 1, description: "carryless primes" },
    SequenceInfo { a_number: "A169962", offset: 2, description: "number of carryless primes with n digits" },
    SequenceInfo { a_number: "A169963", offset: 1, description: "number of carryless squares with n digits" },
    SequenceInfo { a_number: "A169889", offset: 1, description: "distinct carryless squares, sorted" },
    SequenceInfo { a_number: "A169885", offset: 0, description: "carryless cubes n ⊠ n ⊠ n" },
    SequenceInfo { a_number: "A169890", offset: 0, description: "carryless triangular numbers" },
    SequenceInfo { a_number: "A169973", offset: 0, description: "carryless partitions into distinct parts" },
    SequenceInfo { a_number: "A059692", offset: 0, description: "carryless multiplication table, by antidiagonals" },
    SequenceInfo { a_number: "A003893", offset: 0, description: "carryless Fibonacci numbers (Fibonacci mod 10)" },
    SequenceInfo { a_number: "A000689", offset: 0, description: "carryless powers of 2" },
];

pub fn lookup(a_number: &str) -> Option<&'static SequenceInfo> {
    SUPPORTED.iter().find(|s| s.a_number == a_number)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeqError {
    Unsupported(String),
}

impl fmt::Display for SeqError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeqError::Unsupported(a) => {
                write!(f, "unsupported sequence {a}; supported:")?;
                for s in SUPPORTED {
                    write!(f, " {}", s.a_number)?;
                }
                Ok(())
            }
        }
    }
}

impl core::error::Error for SeqError {}

/// First `count` terms of the sequence, starting at its offset.
pub fn generate(a_number: &str, count: usize) -> Result<Vec<Term>, SeqError> {
    let info = lookup(a_number).ok_or_else(|| SeqError::Unsupported(a_number.to_owned()))?;
    let values: Vec<String> = match info.a_number {
        "A004520" => by_index(count, |v| {
            let a = DigitNum::from_u64(v);
            a.add(&a).to_string()
        }),
        "A059729" => by_index(count, |v| square(&DigitNum::from_u64(v)).to_string()),
        "A014263" => digit_mapped(count, 5, &[0, 2, 4, 6, 8]),
        "A169964" => digit_mapped(count, 2, &[0, 5]),
        "A169884" => zero_divisors(count),
        "A169968" => filtered_integers(count, |a| {
            !a.is_zero() && !is_evenish(a) && !is_fiveish(a)
        }),
        "A169887" => primes_ascending(count),
        "A169962" => (0..count)
            .map(|i| count_primes_with_digits(i + 2).expect("k >= 2").to_string())
            .collect(),
        "A169963" => (0..count)
            .map(|i| count_squares_with_digits(i + 1).to_string())
            .collect(),
        "A169889" => distinct_squares(count),
        "A169885" => by_index(count, |v| cube(&DigitNum::from_u64(v)).to_string()),
        "A169890" => triangular(count),
        "A169973" => partitions_sequence(count),
        "A059692" => multiplication_table(count),
        "A003893" => fibonacci_analog(count)
            .into_iter()
            .map(|v| v.to_string())
            .collect(),
        "A000689" => by_index(count, |v| {
            DigitNum::from_digit(2).pow(v as u32).to_string()
        }),
        _ => unreachable!("lookup succeeded"),
    };
    Ok(values
        .into_iter()
        .enumerate()
        .map(|(i, v)| (info.offset + i as i64, v))
        .collect())
}

fn by_index(count: usize, f: impl Fn(u64) -> String) -> Vec<String> {
    (0..count as u64).map(f).collect()
}

/// Ascending numbers whose digits all come from `digits`: counting in
/// base `base` and mapping each base-`base` digit through the table.
fn digit_mapped(count: usize, base: u64, digits: &[u8]) -> Vec<String> {
    (0..count as u64)
        .map(|mut k| {
            let mut ds = Vec::new();
            while k > 0 {
                ds.push(digits[(k % base) as usize]);
                k /= base;
            }
            if ds.is_empty() {
                return "0".to_string();
            }
            ds.iter().rev().map(|d| d.to_string()).collect()
        })
        .collect()
}

fn zero_divisors(count: usize) -> Vec<String> {
    // merge of the evenish and fiveish streams (both contain 0)
    let evenish = digit_mapped(count + 1, 5, &[0, 2, 4, 6, 8]);
    let fiveish = digit_mapped(count + 1, 2, &[0, 5]);
    let key = |s: &str| (s.len(), s.to_owned());
    let mut out = Vec::with_capacity(count);
    let (mut i, mut j) = (0usize, 0usize);
    while out.len() < count {
        let a = key(&evenish[i]);
        let b = key(&fiveish[j]);
        match a.cmp(&b) {
            core::cmp::Ordering::Less => {
                out.push(evenish[i].clone());
                i += 1;
            }
            core::cmp::Ordering::Greater => {
                out.push(fiveish[j].clone());
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                out.push(evenish[i].clone());
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn filtered_integers(count: usize, keep: impl Fn(&DigitNum) -> bool) -> Vec<String> {
    (0..)
        .map(DigitNum::from_u64)
        .filter(|a| keep(a))
        .take(count)
        .map(|a| a.to_string())
        .collect()
}

fn primes_ascending(count: usize) -> Vec<String> {
    let mut out = Vec::with_capacity(count);
    let mut k = 2;
    while out.len() < count {
        for r in primes_with_digits(k) {
            out.push(r.value.to_string());
            if out.len() == count {
                break;
            }
        }
        k += 1;
    }
    out
}

fn distinct_squares(count: usize) -> Vec<String> {
    // squares stratified by digit length are complete, so emit 0 and
    // then whole odd-length blocks until enough terms exist
    let mut out = alloc::vec!["0".to_string()];
    let mut k = 1;
    while out.len() < count {
        out.extend(squares_with_digits(k).iter().map(|s| s.to_string()));
        k += 2;
    }
    out.truncate(count);
    out
}

fn triangular(count: usize) -> Vec<String> {
    let mut out = Vec::with_capacity(count);
    let mut t = DigitNum::zero();
    for v in 0..count as u64 {
        t = t.add(&DigitNum::from_u64(v));
        out.push(t.to_string());
    }
    out
}

/// Table T(i,j) = i ⊠ j read by antidiagonals: T(0,0); T(0,1), T(1,0);
/// T(0,2), T(1,1), T(2,0); …
fn multiplication_table(count: usize) -> Vec<String> {
    let mut out = Vec::with_capacity(count);
    'outer: for diag in 0u64.. {
        for i in 0..=diag {
            let a = DigitNum::from_u64(i);
            let b = DigitNum::from_u64(diag - i);
            out.push(a.mul(&b).to_string());
            if out.len() == count {
                break 'outer;
            }
        }
    }
    out
}

/// Carryless Fibonacci numbers, seeds 0 and 1. Single-digit carryless
/// addition is addition mod 10, so this is the Fibonacci sequence read
/// mod 10.
pub fn fibonacci_analog(count: usize) -> Vec<DigitNum> {
    let mut out = Vec::with_capacity(count);
    let (mut a, mut b) = (DigitNum::zero(), DigitNum::one());
    for _ in 0..count {
        out.push(a.clone());
        let next = a.add(&b);
        a = b;
        b = next;
    }
    out
}

/// Period of the carryless Fibonacci recurrence, computed by running it
/// until the seed pair recurs.
pub fn fibonacci_period() -> usize {
    let seed = (DigitNum::zero(), DigitNum::one());
    let (mut a, mut b) = seed.clone();
    for step in 1.. {
        let next = a.add(&b);
        a = b;
        b = next;
        if (a.clone(), b.clone()) == seed {
            return step;
        }
    }
    unreachable!()
}

/// Eventual period of the carryless powers of 2, by first repeated
/// value.
pub fn powers_of_two_period() -> usize {
    let two = DigitNum::from_digit(2);
    let mut seen: Vec<(DigitNum, usize)> = Vec::new();
    let mut v = DigitNum::one();
    for step in 0.. {
        if let Some((_, first)) = seen.iter().find(|(x, _)| x == &v) {
            return step - first;
        }
        seen.push((v.clone(), step));
        v = v.mul(&two);
    }
    unreachable!()
}

/// Number of subsets of {1, …, part_bound} whose carryless ⊞-sum equals
/// `target`; the empty subset counts for target 0.
///
/// This is the coefficient of zⁿ in ∏ (1 + z^k) with exponents combined
/// by ⊞ — truncated to parts ≤ part_bound, since the untruncated
/// product has infinite coefficients (infinitely many subsets ⊞-sum to
/// any given value).
pub fn partitions_up_to(target: u64, part_bound: u64) -> BigUint {
    let mut counts = partition_seed();
    for part in 1..=part_bound {
        partition_step(&mut counts, part);
    }
    counts
        .remove(&DigitNum::from_u64(target))
        .unwrap_or(BigUint::ZERO)
}

type PartitionCounts = alloc::collections::BTreeMap<DigitNum, BigUint>;

fn partition_seed() -> PartitionCounts {
    let mut counts = PartitionCounts::new();
    counts.insert(DigitNum::zero(), BigUint::from(1u32));
    counts
}

/// Fold the factor (1 + z^part) into the subset-sum counts.
fn partition_step(counts: &mut PartitionCounts, part: u64) {
    let p = DigitNum::from_u64(part);
    let snapshot: Vec<(DigitNum, BigUint)> =
        counts.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
    for (sum, count) in snapshot {
        *counts.entry(sum.add(&p)).or_insert(BigUint::ZERO) += count;
    }
}

/// Terms n = 0, 1, … with the part bound tied to the target (term n
/// uses parts 1..=n), computed with one incremental sweep.
fn partitions_sequence(count: usize) -> Vec<String> {
    let mut counts = partition_seed();
    let mut out = Vec::with_capacity(count);
    for v in 0..count as u64 {
        if v > 0 {
            partition_step(&mut counts, v);
        }
        let term = counts
            .get(&DigitNum::from_u64(v))
            .cloned()
            .unwrap_or(BigUint::ZERO);
        out.push(term.to_string());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn terms(a: &str, count: usize) -> Vec<String> {
        generate(a, count).unwrap().into_iter().map(|(_, v)| v).collect()
    }

    #[test]
    fn unsupported_is_an_error() {
        assert!(matches!(
            generate("A000001", 5),
            Err(SeqError::Unsupported(_))
        ));
    }

    #[test]
    fn squares_prefix() {
        assert_eq!(
            terms("A059729", 10),
            ["0", "1", "4", "9", "6", "5", "6", "9", "4", "1"]
        );
    }

    #[test]
    fn doubles_prefix() {
        assert_eq!(
            terms("A004520", 12),
            ["0", "2", "4", "6", "8", "0", "2", "4", "6", "8", "20", "22"]
        );
    }

    #[test]
    fn primes_prefix() {
        assert_eq!(terms("A169887", 6), ["21", "23", "25", "27", "29", "41"]);
    }

    #[test]
    fn triangular_prefix() {
        assert_eq!(
            terms("A169890", 11),
            ["0", "1", "3", "6", "0", "5", "1", "8", "6", "5", "15"]
        );
    }

    #[test]
    fn evenish_is_sorted_image_of_doubles() {
        let mut image: Vec<String> = generate("A004520", 10_000)
            .unwrap()
            .into_iter()
            .map(|(_, v)| v)
            .collect();
        image.sort_by_key(|s| (s.len(), s.clone()));
        image.dedup();
        let evenish = terms("A014263", image.len());
        assert_eq!(image, evenish);
    }

    #[test]
    fn zero_divisor_prefix() {
        assert_eq!(
            terms("A169884", 10),
            ["0", "2", "4", "5", "6", "8", "20", "22", "24", "26"]
        );
    }

    #[test]
    fn class_n_prefix() {
        assert_eq!(
            terms("A169968", 10),
            ["1", "3", "7", "9", "10", "11", "12", "13", "14", "15"]
        );
    }

    #[test]
    fn count_sequences_agree_with_modules() {
        assert_eq!(terms("A169962", 4), ["28", "44", "168", "612"]);
        assert_eq!(terms("A169963", 5), ["5", "0", "46", "0", "452"]);
    }

    #[test]
    fn fibonacci_matches_mod_10() {
        let fib = fibonacci_analog(30);
        let (mut a, mut b) = (0u64, 1u64);
        for v in fib {
            assert_eq!(v, DigitNum::from_u64(a % 10));
            let next = (a + b) % 10;
            a = b % 10;
            b = next;
        }
    }

    #[test]
    fn periods() {
        assert_eq!(fibonacci_period(), 60);
        assert_eq!(powers_of_two_period(), 4);
    }

    #[test]
    fn partitions_examples() {
        assert_eq!(partitions_up_to(1, 1), BigUint::from(1u32));
        assert_eq!(partitions_up_to(3, 3), BigUint::from(2u32));
        assert_eq!(partitions_up_to(0, 4), BigUint::from(2u32));
    }

    #[test]
    fn partitions_match_subset_enumeration() {
        for target in 0..12u64 {
            for bound in 1..12u64 {
                let mut brute = 0u64;
                for mask in 0u64..(1 << bound) {
                    let mut sum = DigitNum::zero();
                    for part in 1..=bound {
                        if mask & (1 << (part - 1)) != 0 {
                            sum = sum.add(&DigitNum::from_u64(part));
                        }
                    }
                    if sum == DigitNum::from_u64(target) {
                        brute += 1;
                    }
                }
                assert_eq!(
                    partitions_up_to(target, bound),
                    BigUint::from(brute),
                    "target={target} bound={bound}"
                );
            }
        }
    }

    #[test]
    fn multiplication_table_prefix() {
        assert_eq!(
            terms("A059692", 10),
            ["0", "0", "0", "0", "1", "0", "0", "2", "2", "0"]
        );
    }

    #[test]
    fn powers_of_two_prefix() {
        assert_eq!(
            terms("A000689", 9),
            ["1", "2", "4", "8", "6", "2", "4", "8", "6"]
        );
    }

    #[test]
    fn offsets_are_attached() {
        let t = generate("A169962", 3).unwrap();
        assert_eq!(t[0], (2, "28".to_string()));
        let t = generate("A014263", 2).unwrap();
        assert_eq!(t[0].0, 1);
    }
}
