//! Plain-text key files.
//!
//! ```text
//! ascii-rsa public key v1
//! n=3233
//! e=17
//! ```
//!
//! Private files use the header `ascii-rsa private key v1` and the labels
//! `n`, `d`, then optionally `p`, `q` (together) and `phi`, in that order.
//! Values are decimal without leading zeros. Lines end in LF; CRLF is
//! accepted on input, and the final newline may be missing.

use std::collections::HashSet;

use crate::rsa::{PrivateKey, PublicKey};
use crate::{Error, Natural, Result};

pub const PUBLIC_HEADER: &str = "ascii-rsa public key v1";
pub const PRIVATE_HEADER: &str = "ascii-rsa private key v1";

const PUBLIC_LABELS: [&str; 2] = ["n", "e"];
const PRIVATE_LABELS: [&str; 5] = ["n", "d", "p", "q", "phi"];

/// A parsed key file of either kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KeyFile {
    Public(PublicKey),
    Private(PrivateKey),
}

impl KeyFile {
    pub fn kind(&self) -> &'static str {
        match self {
            KeyFile::Public(_) => "public",
            KeyFile::Private(_) => "private",
        }
    }

    pub fn serialize(&self) -> String {
        match self {
            KeyFile::Public(k) => serialize_public(k),
            KeyFile::Private(k) => serialize_private(k),
        }
    }
}

pub fn serialize_public(key: &PublicKey) -> String {
    format!("{PUBLIC_HEADER}\nn={}\ne={}\n", key.n(), key.e())
}

pub fn serialize_private(key: &PrivateKey) -> String {
    let mut out = format!("{PRIVATE_HEADER}\nn={}\nd={}\n", key.n(), key.d());
    if let (Some(p), Some(q)) = (key.p(), key.q()) {
        out.push_str(&format!("p={p}\nq={q}\n"));
    }
    if let Some(phi) = key.phi() {
        out.push_str(&format!("phi={phi}\n"));
    }
    out
}

pub fn parse_public(text: &str) -> Result<PublicKey> {
    match parse_key_file(text)? {
        KeyFile::Public(k) => Ok(k),
        KeyFile::Private(_) => Err(malformed("expected a public key, found a private key")),
    }
}

pub fn parse_private(text: &str) -> Result<PrivateKey> {
    match parse_key_file(text)? {
        KeyFile::Private(k) => Ok(k),
        KeyFile::Public(_) => Err(malformed("expected a private key, found a public key")),
    }
}

/// Parses either kind of key file, dispatching on the header line.
pub fn parse_key_file(text: &str) -> Result<KeyFile> {
    let body = text
        .strip_suffix("\r\n")
        .or_else(|| text.strip_suffix('\n'))
        .unwrap_or(text);
    let mut lines = body.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l));

    let header = lines.next().unwrap_or_default();
    let (public, allowed): (bool, &[&str]) = match header {
        PUBLIC_HEADER => (true, &PUBLIC_LABELS),
        PRIVATE_HEADER => (false, &PRIVATE_LABELS),
        other => return Err(malformed(format!("unrecognized header {other:?}"))),
    };

    let mut seen = HashSet::new();
    let mut entries: Vec<(&str, Natural)> = Vec::new();
    for (i, line) in lines.enumerate() {
        let lineno = i + 2;
        let (label, value) = line
            .split_once('=')
            .ok_or_else(|| malformed(format!("line {lineno}: expected label=value")))?;
        if !allowed.contains(&label) {
            return Err(malformed(format!("line {lineno}: unknown label {label:?}")));
        }
        if !seen.insert(label) {
            return Err(malformed(format!(
                "line {lineno}: duplicate label {label:?}"
            )));
        }
        entries.push((label, parse_decimal(value, lineno)?));
    }

    let positions: Vec<usize> = entries
        .iter()
        .map(|(label, _)| {
            allowed
                .iter()
                .position(|a| a == label)
                .expect("checked above")
        })
        .collect();
    if positions.windows(2).any(|w| w[0] > w[1]) {
        return Err(malformed(format!(
            "labels must appear in the order {}",
            allowed.join(", ")
        )));
    }

    let mut take = |label: &str| {
        entries
            .iter()
            .position(|(l, _)| *l == label)
            .map(|i| entries.swap_remove(i).1)
    };
    let required = |v: Option<Natural>, label: &str| {
        v.ok_or_else(|| malformed(format!("missing label {label:?}")))
    };

    if public {
        let n = required(take("n"), "n")?;
        let e = required(take("e"), "e")?;
        return PublicKey::new(n, e).map(KeyFile::Public);
    }
    let n = required(take("n"), "n")?;
    let d = required(take("d"), "d")?;
    let factors = match (take("p"), take("q")) {
        (Some(p), Some(q)) => Some((p, q)),
        (None, None) => None,
        _ => return Err(malformed("p and q must appear together")),
    };
    let phi = take("phi");
    PrivateKey::from_parts(n, d, factors, phi).map(KeyFile::Private)
}

fn parse_decimal(value: &str, lineno: usize) -> Result<Natural> {
    let digits_only = !value.is_empty() && value.bytes().all(|b| b.is_ascii_digit());
    if !digits_only {
        return Err(malformed(format!(
            "line {lineno}: {value:?} is not a decimal number"
        )));
    }
    if value.len() > 1 && value.starts_with('0') {
        return Err(malformed(format!(
            "line {lineno}: leading zeros in {value:?}"
        )));
    }
    Ok(Natural::parse_bytes(value.as_bytes(), 10).expect("validated decimal digits"))
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedKeyFile(msg.into())
}
