//! Block mode: messages of any length, split into chunks that each fit
//! below the modulus.
//!
//! Every chunk is prefixed with a `0x01` sentinel before it is turned into an
//! integer, so leading `0x00` payload bytes survive and a short final chunk
//! needs no length field. Cipher blocks are left-padded to the byte width of
//! `n`.
//!
//! On disk an envelope is
//!
//! ```text
//! "ARSA" "1" | width: u32 big-endian | block_0 | block_1 | ...
//! ```
//!
//! with every block exactly `width` bytes.

use crate::codec::{byte_len, bytes_to_int, int_to_bytes, int_to_bytes_fixed};
use crate::rsa::{decrypt_int, encrypt_int, PrivateKey, PublicKey};
use crate::{Error, Result};

pub const MAGIC: &[u8; 4] = b"ARSA";
pub const VERSION: u8 = b'1';
pub const HEADER_LEN: usize = 9;
pub const SENTINEL: u8 = 0x01;

/// Fixed-width cipher blocks plus the width they share.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CipherEnvelope {
    version: u8,
    block_width: usize,
    blocks: Vec<Vec<u8>>,
}

impl CipherEnvelope {
    pub fn new(block_width: usize, blocks: Vec<Vec<u8>>) -> Result<Self> {
        if block_width == 0 {
            return Err(Error::Framing("cipher block width must be nonzero".into()));
        }
        if block_width > u32::MAX as usize {
            return Err(Error::Framing(
                "cipher block width does not fit in 32 bits".into(),
            ));
        }
        if let Some(i) = blocks.iter().position(|b| b.len() != block_width) {
            return Err(Error::Framing(format!(
                "block {i} has {} bytes, expected {block_width}",
                blocks[i].len()
            )));
        }
        Ok(Self {
            version: VERSION,
            block_width,
            blocks,
        })
    }

    pub fn version(&self) -> u8 {
        self.version
    }

    pub fn block_width(&self) -> usize {
        self.block_width
    }

    pub fn blocks(&self) -> &[Vec<u8>] {
        &self.blocks
    }

    /// Serialized size: header plus `blocks * width`.
    pub fn encoded_len(&self) -> usize {
        HEADER_LEN + self.blocks.len() * self.block_width
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.encoded_len());
        out.extend_from_slice(MAGIC);
        out.push(self.version);
        out.extend_from_slice(&(self.block_width as u32).to_be_bytes());
        for block in &self.blocks {
            out.extend_from_slice(block);
        }
        out
    }

    pub fn from_bytes(data: &[u8]) -> Result<Self> {
        if data.len() < HEADER_LEN {
            return Err(Error::Framing(format!(
                "envelope is {} bytes, shorter than the {HEADER_LEN}-byte header",
                data.len()
            )));
        }
        let (header, body) = data.split_at(HEADER_LEN);
        if &header[..4] != MAGIC || header[4] != VERSION {
            return Err(Error::Framing("bad envelope magic".into()));
        }
        let width = u32::from_be_bytes(header[5..9].try_into().expect("4 bytes")) as usize;
        if width == 0 {
            return Err(Error::Framing("cipher block width must be nonzero".into()));
        }
        if body.len() % width != 0 {
            return Err(Error::Framing(format!(
                "body of {} bytes is not a multiple of the block width {width}",
                body.len()
            )));
        }
        Self::new(width, body.chunks(width).map(<[u8]>::to_vec).collect())
    }
}

/// Payload bytes per block: `floor((bits(n) - 1) / 8) - 1`.
///
/// One byte is reserved for the sentinel; any sentinel-prefixed chunk of this
/// size is below `2^(bits(n) - 1) <= n`.
pub fn plaintext_block_capacity(key: &PublicKey) -> Result<usize> {
    let bits = key.n().bits();
    if bits < 17 {
        return Err(Error::ModulusTooSmall { modulus_bits: bits });
    }
    Ok(((bits - 1) / 8 - 1) as usize)
}

pub fn block_encrypt(message: &[u8], key: &PublicKey) -> Result<CipherEnvelope> {
    let capacity = plaintext_block_capacity(key)?;
    let width = byte_len(key.n());
    let mut framed = Vec::with_capacity(capacity + 1);
    let blocks = message
        .chunks(capacity)
        .map(|chunk| {
            framed.clear();
            framed.push(SENTINEL);
            framed.extend_from_slice(chunk);
            let m = bytes_to_int(&framed);
            assert!(&m < key.n(), "framed block must be below the modulus");
            int_to_bytes_fixed(&encrypt_int(&m, key)?, width)
        })
        .collect::<Result<Vec<_>>>()?;
    CipherEnvelope::new(width, blocks)
}

pub fn block_decrypt(envelope: &CipherEnvelope, key: &PrivateKey) -> Result<Vec<u8>> {
    let width = byte_len(key.n());
    if envelope.block_width() != width {
        return Err(Error::Framing(format!(
            "envelope block width {} does not match the {width}-byte modulus",
            envelope.block_width()
        )));
    }
    let mut out = Vec::new();
    for (i, block) in envelope.blocks().iter().enumerate() {
        let plain = int_to_bytes(&decrypt_int(&bytes_to_int(block), key)?);
        match plain.split_first() {
            Some((&SENTINEL, payload)) => out.extend_from_slice(payload),
            _ => {
                return Err(Error::Framing(format!(
                    "block {i} does not decrypt to a sentinel-prefixed payload"
                )))
            }
        }
    }
    Ok(out)
}
