#![no_main]

use ascii_rsa::block::{CipherEnvelope, HEADER_LEN};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(env) = CipherEnvelope::from_bytes(data) {
        assert_eq!(env.to_bytes(), data);
        assert_eq!(
            data.len(),
            HEADER_LEN + env.blocks().len() * env.block_width()
        );
    }
});
