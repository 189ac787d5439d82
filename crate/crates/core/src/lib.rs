//! Textbook RSA over byte-oriented messages.
//!
//! A message is read as a string of 8-bit characters, concatenated into one
//! big-endian integer, raised to the public exponent modulo `n`, and written
//! back out as bytes. [`rsa`] implements that single-integer pipeline ("paper
//! mode"); [`block`] splits longer messages into sentinel-framed blocks that
//! are each guaranteed to be smaller than the modulus.
//!
//! None of this is secure in the modern sense: there is no randomized padding
//! and no constant-time arithmetic.

pub mod block;
pub mod cli;
pub mod codec;
mod error;
pub mod fixtures;
pub mod keystore;
pub mod numtheory;
pub mod rsa;

pub use error::{Error, Result};
pub use numtheory::{Natural, RandomSource};
pub use rsa::{KeyPair, PrivateKey, PublicKey};
