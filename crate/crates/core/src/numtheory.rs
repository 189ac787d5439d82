//! Number-theoretic primitives over arbitrary-precision naturals.
//!
//! Everything here is variable-time. Randomness is always passed in through
//! [`RandomSource`]; nothing reads ambient entropy.

use std::collections::VecDeque;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::{Error, Result};

/// Arbitrary-precision non-negative integer.
pub type Natural = BigUint;

/// Miller-Rabin rounds used when the caller has no opinion.
pub const DEFAULT_MR_ROUNDS: usize = 20;

/// A source of uniformly random naturals.
pub trait RandomSource {
    /// Returns `k` uniformly random bits as a natural in `[0, 2^k)`.
    fn next_bits(&mut self, k: u64) -> Natural;

    /// Returns a uniform natural in `[0, bound)` by rejection sampling.
    ///
    /// `bound` must be nonzero.
    fn next_below(&mut self, bound: &Natural) -> Natural {
        assert!(!bound.is_zero(), "next_below needs a nonzero bound");
        if bound.is_one() {
            return Natural::zero();
        }
        let bits = bound.bits();
        loop {
            let candidate = self.next_bits(bits);
            if &candidate < bound {
                return candidate;
            }
        }
    }
}

impl<R: RngCore + ?Sized> RandomSource for R {
    fn next_bits(&mut self, k: u64) -> Natural {
        if k == 0 {
            return Natural::zero();
        }
        let len = k.div_ceil(8) as usize;
        let mut buf = vec![0u8; len];
        self.fill_bytes(&mut buf);
        let excess = (len as u64) * 8 - k;
        buf[0] &= 0xff >> excess;
        Natural::from_bytes_be(&buf)
    }
}

/// Seeded ChaCha20 generator for reproducible runs.
pub fn seeded_rng(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

/// ChaCha20 generator seeded from operating-system entropy.
pub fn entropy_rng() -> ChaCha20Rng {
    ChaCha20Rng::from_entropy()
}

/// Replays queued values for `next_bits` requests, then defers to `fallback`.
///
/// A queued value is served only when it fits in the requested bit count;
/// `next_below` always uses the fallback. This lets a caller pin the prime
/// candidates drawn by [`random_prime`] while the Miller-Rabin bases still
/// come from a real generator.
#[derive(Debug, Clone)]
pub struct ReplaySource<R> {
    queue: VecDeque<Natural>,
    fallback: R,
}

impl<R: RandomSource> ReplaySource<R> {
    pub fn new(values: impl IntoIterator<Item = Natural>, fallback: R) -> Self {
        Self {
            queue: values.into_iter().collect(),
            fallback,
        }
    }

    /// Number of queued values not yet served.
    pub fn remaining(&self) -> usize {
        self.queue.len()
    }
}

impl<R: RandomSource> RandomSource for ReplaySource<R> {
    fn next_bits(&mut self, k: u64) -> Natural {
        match self.queue.front() {
            Some(v) if v.bits() <= k => self.queue.pop_front().unwrap(),
            _ => self.fallback.next_bits(k),
        }
    }

    fn next_below(&mut self, bound: &Natural) -> Natural {
        self.fallback.next_below(bound)
    }
}

/// `base^exponent mod modulus` by left-to-right square-and-multiply.
pub fn mod_pow(base: &Natural, exponent: &Natural, modulus: &Natural) -> Result<Natural> {
    if modulus.is_zero() {
        return Err(Error::ZeroModulus);
    }
    if modulus.is_one() {
        return Ok(Natural::zero());
    }
    let base = base % modulus;
    let mut acc = Natural::one();
    for i in (0..exponent.bits()).rev() {
        acc = (&acc * &acc) % modulus;
        if exponent.bit(i) {
            acc = (acc * &base) % modulus;
        }
    }
    Ok(acc)
}

/// Greatest common divisor; `gcd(a, 0) = a`.
pub fn gcd(a: &Natural, b: &Natural) -> Natural {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// The least positive `x` with `a * x ≡ 1 (mod m)`, by extended Euclid.
pub fn mod_inverse(a: &Natural, m: &Natural) -> Result<Natural> {
    if m < &Natural::from(2u8) {
        return Err(Error::InvalidParameter(format!(
            "modular inverse needs a modulus of at least 2, got {m}"
        )));
    }
    let modulus = BigInt::from_biguint(Sign::Plus, m.clone());
    let (mut old_r, mut r) = (BigInt::from_biguint(Sign::Plus, a % m), modulus.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    while !r.is_zero() {
        let (quot, rem) = old_r.div_rem(&r);
        old_r = std::mem::replace(&mut r, rem);
        let next_s = &old_s - &quot * &s;
        old_s = std::mem::replace(&mut s, next_s);
    }
    // old_r = gcd(a, m) and old_s * a ≡ old_r (mod m)
    if !old_r.is_one() {
        return Err(Error::NotInvertible);
    }
    let x = old_s.mod_floor(&modulus);
    Ok(x.to_biguint()
        .expect("mod_floor by a positive modulus is non-negative"))
}

/// Miller-Rabin with `rounds` bases drawn uniformly from `[2, n-2]`.
///
/// A `false` verdict is certain. A `true` verdict is wrong with probability at
/// most `4^-rounds`. `rounds` of zero is treated as one.
pub fn is_probable_prime<R: RandomSource + ?Sized>(
    n: &Natural,
    rounds: usize,
    rng: &mut R,
) -> bool {
    let two = Natural::from(2u8);
    if n < &two {
        return false;
    }
    if n == &two || n == &Natural::from(3u8) {
        return true;
    }
    if n.is_even() {
        return false;
    }

    let n_minus_one = n - 1u8;
    let shift = n_minus_one
        .trailing_zeros()
        .expect("n - 1 is nonzero for n >= 5");
    let odd_part = &n_minus_one >> shift;
    // bases are 2 + [0, n-3), i.e. [2, n-2]
    let base_span = n - 3u8;

    'rounds: for _ in 0..rounds.max(1) {
        let base = rng.next_below(&base_span) + 2u8;
        let mut x = mod_pow(&base, &odd_part, n).expect("n >= 5");
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..shift {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'rounds;
            }
            if x.is_one() {
                return false;
            }
        }
        return false;
    }
    true
}

const SIEVE_PRIMES: [u32; 54] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
    197, 199, 211, 223, 227, 229, 233, 239, 241, 251,
];

/// Cheap pre-filter: `false` only when `n` is certainly composite.
fn survives_small_primes(n: &Natural) -> bool {
    for &p in &SIEVE_PRIMES {
        if n == &Natural::from(p) {
            return true;
        }
        if (n % p).is_zero() {
            return false;
        }
    }
    true
}

/// Draws `bits`-bit odd candidates (top and bottom bits forced) until one
/// passes [`is_probable_prime`].
pub fn random_prime<R: RandomSource + ?Sized>(
    bits: u64,
    rounds: usize,
    rng: &mut R,
) -> Result<Natural> {
    if bits < 2 {
        return Err(Error::InvalidParameter(format!(
            "prime bit length must be at least 2, got {bits}"
        )));
    }
    loop {
        let mut candidate = rng.next_bits(bits);
        candidate.set_bit(bits - 1, true);
        candidate.set_bit(0, true);
        if survives_small_primes(&candidate) && is_probable_prime(&candidate, rounds, rng) {
            return Ok(candidate);
        }
    }
}
