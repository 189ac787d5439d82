#![no_main]

use ascii_rsa::codec::{bytes_to_int, bytes_to_text, int_to_bytes, text_to_bytes};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let x = bytes_to_int(data);
    let start = data.iter().position(|&b| b != 0).unwrap_or(data.len());
    assert_eq!(int_to_bytes(&x), &data[start..]);
    assert_eq!(text_to_bytes(&bytes_to_text(data)).unwrap(), data);
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = text_to_bytes(text);
    }
});
