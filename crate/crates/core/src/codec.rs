//! Byte strings to naturals and back.
//!
//! Each character is one 8-bit byte; the concatenated bits of a message are
//! read as a single big-endian integer. Going back, the integer's binary form
//! is left-padded with zeros to a multiple of 8 and cut into bytes.
//!
//! The map loses leading `0x00` bytes: `[0x00, 0x41]` and `[0x41]` encode to
//! the same integer. Block mode works around this with a sentinel byte.

use num_traits::Zero;

use crate::{Error, Natural, Result};

/// Big-endian base-256 value of `bytes`; empty input is zero.
pub fn bytes_to_int(bytes: &[u8]) -> Natural {
    bytes
        .iter()
        .fold(Natural::zero(), |acc, &b| (acc << 8u32) | Natural::from(b))
}

/// Minimal big-endian encoding: `ceil(bits/8)` bytes, empty for zero.
pub fn int_to_bytes(x: &Natural) -> Vec<u8> {
    let mut out = Vec::with_capacity(byte_len(x));
    let mut rest = x.clone();
    let low_byte = Natural::from(0xffu8);
    while !rest.is_zero() {
        let byte = u8::try_from(&rest & &low_byte).expect("masked to 8 bits");
        out.push(byte);
        rest >>= 8u32;
    }
    out.reverse();
    out
}

/// Exactly `width` bytes, big-endian, left-padded with `0x00`.
pub fn int_to_bytes_fixed(x: &Natural, width: usize) -> Result<Vec<u8>> {
    let needed = byte_len(x);
    if needed > width {
        return Err(Error::ValueTooWide { needed, width });
    }
    let mut out = vec![0u8; width - needed];
    out.extend(int_to_bytes(x));
    Ok(out)
}

/// Number of bytes in the minimal encoding of `x`.
pub fn byte_len(x: &Natural) -> usize {
    x.bits().div_ceil(8) as usize
}

/// One byte per character; fails on code points above 255.
pub fn text_to_bytes(text: &str) -> Result<Vec<u8>> {
    text.chars()
        .enumerate()
        .map(|(position, ch)| {
            u8::try_from(u32::from(ch)).map_err(|_| Error::NonByteCharacter { ch, position })
        })
        .collect()
}

/// One character per byte, each byte taken as the code point of the same value.
pub fn bytes_to_text(bytes: &[u8]) -> String {
    bytes.iter().map(|&b| char::from(b)).collect()
}

/// The 8-character `0`/`1` pattern of a byte, most significant bit first.
pub fn byte_to_bits(byte: u8) -> String {
    format!("{byte:08b}")
}

/// Inverse of [`byte_to_bits`]; `None` unless given exactly eight `0`/`1` digits.
pub fn bits_to_byte(bits: &str) -> Option<u8> {
    if bits.len() != 8 || !bits.bytes().all(|b| b == b'0' || b == b'1') {
        return None;
    }
    u8::from_str_radix(bits, 2).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bytes_to_int_examples() {
        assert_eq!(bytes_to_int(&[0x01, 0x00]), Natural::from(256u32));
        assert_eq!(bytes_to_int(&[]), Natural::zero());
        assert_eq!(97 * 65536 + 118 * 256 + 37, 6_387_237);
        assert_eq!(bytes_to_int(b"av%"), Natural::from(6_387_237u32));
    }

    #[test]
    fn int_to_bytes_examples() {
        assert!(int_to_bytes(&Natural::zero()).is_empty());
        assert_eq!(int_to_bytes(&Natural::from(256u32)), vec![0x01, 0x00]);
        assert_eq!(int_to_bytes(&Natural::from(6_387_237u32)), b"av%".to_vec());
        assert_eq!(int_to_bytes(&Natural::from(255u32)), vec![0xff]);
    }

    #[test]
    fn fixed_width() {
        assert_eq!(
            int_to_bytes_fixed(&Natural::from(5u8), 3).unwrap(),
            vec![0, 0, 5]
        );
        assert_eq!(
            int_to_bytes_fixed(&Natural::from(256u32), 2).unwrap(),
            vec![1, 0]
        );
        assert_eq!(
            int_to_bytes_fixed(&Natural::from(256u32), 1),
            Err(Error::ValueTooWide {
                needed: 2,
                width: 1
            })
        );
        assert!(int_to_bytes_fixed(&Natural::zero(), 0).unwrap().is_empty());
    }

    #[test]
    fn leading_zero_bytes_are_lost() {
        let x = bytes_to_int(&[0, 0, 0x41]);
        assert_eq!(int_to_bytes(&x), vec![0x41]);
    }

    #[test]
    fn text_examples() {
        assert_eq!(text_to_bytes("%").unwrap(), vec![37]);
        assert!(text_to_bytes("").unwrap().is_empty());
        assert_eq!(text_to_bytes("av%").unwrap(), vec![97, 118, 37]);
        assert_eq!(text_to_bytes("\u{ff}").unwrap(), vec![0xff]);
        assert_eq!(
            text_to_bytes("ab\u{100}"),
            Err(Error::NonByteCharacter {
                ch: '\u{100}',
                position: 2
            })
        );
        assert_eq!(bytes_to_text(&[97, 118, 37]), "av%");
    }

    #[test]
    fn byte_bit_pattern_is_a_bijection() {
        let mut seen = std::collections::HashSet::new();
        for b in 0..=255u8 {
            let bits = byte_to_bits(b);
            assert_eq!(bits.len(), 8);
            assert!(seen.insert(bits.clone()));
            assert_eq!(bits_to_byte(&bits), Some(b));
        }
        assert_eq!(seen.len(), 256);
        assert_eq!(bits_to_byte("0101011"), None);
        assert_eq!(bits_to_byte("0101011x"), None);
    }

    #[test]
    fn text_round_trip_all_bytes() {
        let all: Vec<u8> = (0..=255).collect();
        assert_eq!(text_to_bytes(&bytes_to_text(&all)).unwrap(), all);
    }
}
