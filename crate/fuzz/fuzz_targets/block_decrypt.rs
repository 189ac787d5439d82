#![no_main]

use std::sync::OnceLock;

use ascii_rsa::block::{block_decrypt, CipherEnvelope};
use ascii_rsa::numtheory::seeded_rng;
use ascii_rsa::rsa::generate_keypair;
use ascii_rsa::{KeyPair, Natural};
use libfuzzer_sys::fuzz_target;

fn key() -> &'static KeyPair {
    static KEY: OnceLock<KeyPair> = OnceLock::new();
    KEY.get_or_init(|| {
        generate_keypair(64, 64, &Natural::from(11u8), 20, &mut seeded_rng(0)).unwrap()
    })
}

fuzz_target!(|data: &[u8]| {
    if let Ok(env) = CipherEnvelope::from_bytes(data) {
        let _ = block_decrypt(&env, key().private());
    }
});
