//! The 600-bit worked example as golden vectors.
//!
//! The vector file holds `label=decimal` lines for `p`, `q`, `n`, `phi`, `e`,
//! `d`, `m1`, `m2` and `s_bits`; blank lines and `#` comments are ignored.
//! The message lives next to it as raw bytes in `paper_message.bin`.
//! Loading checks the algebra (`n = p*q` and so on), which catches any digit
//! dropped while copying the long numerals.

use std::fmt;
use std::fs;
use std::path::Path;

use num_traits::One;

use crate::codec::{bytes_to_int, int_to_bytes};
use crate::numtheory::{
    is_probable_prime, mod_inverse, seeded_rng, ReplaySource, DEFAULT_MR_ROUNDS,
};
use crate::rsa::{decrypt_int, encrypt_int, PrivateKey, PublicKey};
use crate::{Error, Natural, RandomSource, Result};

pub const VECTORS_FILE: &str = "paper_vectors.txt";
pub const MESSAGE_FILE: &str = "paper_message.bin";

const SHIPPED_VECTORS: &str = include_str!("../fixtures/paper_vectors.txt");
const SHIPPED_MESSAGE: &[u8] = include_bytes!("../fixtures/paper_message.bin");

const LABELS: [&str; 9] = ["p", "q", "n", "phi", "e", "d", "m1", "m2", "s_bits"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperVectors {
    pub p: Natural,
    pub q: Natural,
    pub n: Natural,
    pub phi: Natural,
    pub e: Natural,
    pub d: Natural,
    pub m1: Natural,
    pub m2: Natural,
    pub message: Vec<u8>,
    /// Bit length of the 8-bits-per-character message representation.
    pub s_bits: u64,
}

impl PaperVectors {
    /// Parses a vector file and its message bytes, then checks every invariant.
    pub fn parse(text: &str, message: &[u8]) -> Result<Self> {
        let mut values: [Option<Natural>; 9] = Default::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (label, value) = line
                .split_once('=')
                .ok_or_else(|| corrupt(format!("line {}: expected label=value", i + 1)))?;
            let slot = LABELS
                .iter()
                .position(|l| *l == label)
                .ok_or_else(|| corrupt(format!("line {}: unknown label {label:?}", i + 1)))?;
            if values[slot].is_some() {
                return Err(corrupt(format!(
                    "line {}: duplicate label {label:?}",
                    i + 1
                )));
            }
            if value.is_empty() || !value.bytes().all(|b| b.is_ascii_digit()) {
                return Err(corrupt(format!("line {}: {value:?} is not decimal", i + 1)));
            }
            values[slot] = Natural::parse_bytes(value.as_bytes(), 10);
        }
        let [p, q, n, phi, e, d, m1, m2, s_bits] = values;
        let get =
            |v: Option<Natural>, label: &str| v.ok_or_else(|| corrupt(format!("missing {label}")));
        let s_bits = get(s_bits, "s_bits")?;
        let vectors = Self {
            p: get(p, "p")?,
            q: get(q, "q")?,
            n: get(n, "n")?,
            phi: get(phi, "phi")?,
            e: get(e, "e")?,
            d: get(d, "d")?,
            m1: get(m1, "m1")?,
            m2: get(m2, "m2")?,
            message: message.to_vec(),
            s_bits: u64::try_from(&s_bits).map_err(|_| corrupt("s_bits out of range"))?,
        };
        vectors.check_invariants()?;
        Ok(vectors)
    }

    /// The vectors bundled into the crate.
    pub fn shipped() -> Self {
        Self::parse(SHIPPED_VECTORS, SHIPPED_MESSAGE).expect("bundled vectors are consistent")
    }

    fn check_invariants(&self) -> Result<()> {
        let checks = [
            (self.n == &self.p * &self.q, "n != p * q"),
            (
                self.phi == (&self.p - 1u8) * (&self.q - 1u8),
                "phi != (p - 1)(q - 1)",
            ),
            (
                ((&self.e * &self.d) % &self.phi).is_one(),
                "e * d != 1 mod phi",
            ),
            (self.e == Natural::from(11u8), "e != 11"),
            (self.m1 < self.n, "m1 >= n"),
            (self.m2 < self.n, "m2 >= n"),
            (
                self.message.len() as u64 * 8 == self.s_bits,
                "message length != s_bits / 8",
            ),
        ];
        match checks.iter().find(|(ok, _)| !ok) {
            Some((_, what)) => Err(corrupt(*what)),
            None => Ok(()),
        }
    }

    /// A source that yields `p` then `q` as prime candidates, for replaying
    /// key generation.
    pub fn prime_source<R: RandomSource>(&self, fallback: R) -> ReplaySource<R> {
        ReplaySource::new([self.p.clone(), self.q.clone()], fallback)
    }
}

/// Loads `path` and the message sidecar from the same directory.
pub fn load_vectors(path: &Path) -> Result<PaperVectors> {
    let text = fs::read_to_string(path)
        .map_err(|e| corrupt(format!("cannot read {}: {e}", path.display())))?;
    let sidecar = path.with_file_name(MESSAGE_FILE);
    let message = fs::read(&sidecar)
        .map_err(|e| corrupt(format!("cannot read {}: {e}", sidecar.display())))?;
    PaperVectors::parse(&text, &message)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name)?;
        }
        Ok(())
    }
}

/// Replays the worked example end to end. Failures become report entries.
pub fn verify_vectors(v: &PaperVectors) -> Report {
    let public = PublicKey::new(v.n.clone(), v.e.clone()).ok();
    let private = PrivateKey::new(v.n.clone(), v.d.clone()).ok();
    let mut rng = seeded_rng(0);
    let checks = vec![
        Check {
            name: "bytes_to_int(message) = M1",
            passed: bytes_to_int(&v.message) == v.m1,
        },
        Check {
            name: "M1^e mod n = M2",
            passed: public.is_some_and(|k| encrypt_int(&v.m1, &k).is_ok_and(|c| c == v.m2)),
        },
        Check {
            name: "M2^d mod n = M1",
            passed: private.is_some_and(|k| decrypt_int(&v.m2, &k).is_ok_and(|m| m == v.m1)),
        },
        Check {
            name: "int_to_bytes(M1) = message",
            passed: int_to_bytes(&v.m1) == v.message,
        },
        Check {
            name: "mod_inverse(e, phi) = d",
            passed: mod_inverse(&v.e, &v.phi).is_ok_and(|d| d == v.d),
        },
        Check {
            name: "p and q pass Miller-Rabin",
            passed: is_probable_prime(&v.p, DEFAULT_MR_ROUNDS, &mut rng)
                && is_probable_prime(&v.q, DEFAULT_MR_ROUNDS, &mut rng),
        },
    ];
    Report { checks }
}

fn corrupt(msg: impl Into<String>) -> Error {
    Error::FixtureCorrupt(msg.into())
}
