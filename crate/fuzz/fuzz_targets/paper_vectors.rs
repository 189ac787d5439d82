#![no_main]

use ascii_rsa::fixtures::{verify_vectors, PaperVectors};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    // first byte splits the input into vector text and message sidecar
    let Some((&split, rest)) = data.split_first() else {
        return;
    };
    let split = (split as usize).min(rest.len());
    let (message, text) = rest.split_at(split);
    if let Ok(text) = std::str::from_utf8(text) {
        if let Ok(v) = PaperVectors::parse(text, message) {
            let _ = verify_vectors(&v);
        }
    }
});
