//! Carryless arithmetic mod 10.
//!
//! Numbers are added and multiplied digit by digit, with every column
//! reduced mod 10 and no carries between digit positions. So
//! `785 ⊞ 376 = 51` and `643 ⊠ 59 = 417`. Algebraically these numbers
//! are the polynomial ring `(Z/10Z)[X]` with a digit string read as the
//! coefficient list, and the Chinese Remainder Theorem splits every
//! number into a pair of polynomials over GF(2) and GF(5). That pair
//! view is what makes primality, factorization and square testing
//! decidable here.
//!
//! The crate is `no_std` (with `alloc`); IO, the CLI and the b-file
//! verification layer live in the companion `carryless-cli` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod classify;
pub mod crtpair;
pub mod digitnum;
pub mod factorize;
pub mod gfpoly;
pub mod powers;
pub mod primes;
pub mod sequences;

pub use crtpair::CrtPair;
pub use digitnum::DigitNum;
pub use gfpoly::GfPoly;
