use ascii_rsa::block::{block_decrypt, block_encrypt, plaintext_block_capacity, CipherEnvelope};
use ascii_rsa::codec::{bytes_to_int, int_to_bytes, int_to_bytes_fixed};
use ascii_rsa::keystore::{parse_private, parse_public, serialize_private, serialize_public};
use ascii_rsa::numtheory::{
    gcd, is_probable_prime, mod_inverse, mod_pow, random_prime, seeded_rng,
};
use ascii_rsa::rsa::{decrypt_int, encrypt_int, generate_keypair, paper_decrypt, paper_encrypt};
use ascii_rsa::{KeyPair, Natural};
use num_traits::{One, Zero};
use proptest::prelude::*;
use std::sync::OnceLock;

fn natural(max_bytes: usize) -> impl Strategy<Value = Natural> {
    prop::collection::vec(any::<u8>(), 0..max_bytes).prop_map(|b| Natural::from_bytes_be(&b))
}

fn keys() -> &'static [KeyPair] {
    static KEYS: OnceLock<Vec<KeyPair>> = OnceLock::new();
    KEYS.get_or_init(|| {
        let mut rng = seeded_rng(77);
        [(12, 12), (32, 40), (64, 64), (128, 96)]
            .into_iter()
            .map(|(bp, bq)| generate_keypair(bp, bq, &Natural::from(11u8), 20, &mut rng).unwrap())
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn mod_pow_splits_exponent(a in natural(24), e1 in natural(8), e2 in natural(8), m in natural(24)) {
        prop_assume!(m > Natural::one());
        let lhs = mod_pow(&a, &(&e1 + &e2), &m).unwrap();
        let rhs = mod_pow(&a, &e1, &m).unwrap() * mod_pow(&a, &e2, &m).unwrap() % &m;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mod_pow_matches_library_modpow(a in natural(40), e in natural(40), m in natural(40)) {
        prop_assume!(!m.is_zero());
        prop_assert_eq!(mod_pow(&a, &e, &m).unwrap(), a.modpow(&e, &m));
    }

    #[test]
    fn inverse_is_an_inverse(a in natural(32), m in natural(32)) {
        prop_assume!(m > Natural::one());
        match mod_inverse(&a, &m) {
            Ok(x) => {
                prop_assert!(x < m && !x.is_zero());
                prop_assert!((&a * &x % &m).is_one());
            }
            Err(_) => prop_assert!(!gcd(&a, &m).is_one()),
        }
    }

    #[test]
    fn random_prime_exact_width(bits in 2u64..160, seed in any::<u64>()) {
        let mut rng = seeded_rng(seed);
        let p = random_prime(bits, 20, &mut rng).unwrap();
        prop_assert_eq!(p.bits(), bits);
        prop_assert!(is_probable_prime(&p, 20, &mut seeded_rng(seed ^ 1)));
    }

    #[test]
    fn codec_matches_library_byte_conversion(bytes in prop::collection::vec(any::<u8>(), 0..300)) {
        let x = bytes_to_int(&bytes);
        prop_assert_eq!(&x, &Natural::from_bytes_be(&bytes));
        let stripped: Vec<u8> = bytes.iter().copied().skip_while(|&b| b == 0).collect();
        prop_assert_eq!(int_to_bytes(&x), stripped);
    }

    #[test]
    fn int_to_bytes_inverts(x in natural(300)) {
        let bytes = int_to_bytes(&x);
        prop_assert!(bytes.first() != Some(&0));
        prop_assert_eq!(bytes_to_int(&bytes), x);
    }

    #[test]
    fn fixed_width_pads(x in natural(40), extra in 0usize..8) {
        let width = int_to_bytes(&x).len() + extra;
        let fixed = int_to_bytes_fixed(&x, width).unwrap();
        prop_assert_eq!(fixed.len(), width);
        prop_assert_eq!(bytes_to_int(&fixed), x);
    }

    #[test]
    fn integer_round_trip(idx in 0usize..4, m in natural(64)) {
        let pair = &keys()[idx];
        let m = m % pair.public().n();
        let c = encrypt_int(&m, pair.public()).unwrap();
        prop_assert_eq!(decrypt_int(&c, pair.private()).unwrap(), m);
    }

    #[test]
    fn minus_one_is_fixed(idx in 0usize..4) {
        let public = keys()[idx].public();
        let m = public.n() - 1u8;
        prop_assert_eq!(encrypt_int(&m, public).unwrap(), m);
    }

    #[test]
    fn paper_mode_round_trip(idx in 0usize..4, msg in prop::collection::vec(any::<u8>(), 0..24)) {
        let pair = &keys()[idx];
        let fit = ((pair.public().n().bits() - 1) / 8) as usize;
        let msg = &msg[..msg.len().min(fit)];
        let cipher = paper_encrypt(msg, pair.public()).unwrap();
        let back = paper_decrypt(&cipher, pair.private()).unwrap();
        let stripped: Vec<u8> = msg.iter().copied().skip_while(|&b| b == 0).collect();
        prop_assert_eq!(back, stripped);
    }

    #[test]
    fn block_mode_is_lossless(idx in 0usize..4, seed in any::<u64>(), blocks in 0usize..=10, extra in 0usize..8) {
        use rand::RngCore;
        let pair = &keys()[idx];
        let cap = plaintext_block_capacity(pair.public()).unwrap();
        let len = (blocks * cap).saturating_sub(extra % cap.max(1));
        let mut msg = vec![0u8; len];
        seeded_rng(seed).fill_bytes(&mut msg);
        if seed % 3 == 0 && len > 0 {
            msg[0] = 0;
        }
        let env = block_encrypt(&msg, pair.public()).unwrap();
        prop_assert_eq!(env.blocks().len(), len.div_ceil(cap));
        for block in env.blocks() {
            prop_assert!(&bytes_to_int(block) < pair.public().n());
        }
        let parsed = CipherEnvelope::from_bytes(&env.to_bytes()).unwrap();
        prop_assert_eq!(&parsed, &env);
        prop_assert_eq!(block_decrypt(&parsed, pair.private()).unwrap(), msg.clone());
        prop_assert_eq!(block_encrypt(&msg, pair.public()).unwrap(), env);
    }

    #[test]
    fn envelope_parser_never_panics(data in prop::collection::vec(any::<u8>(), 0..64)) {
        let _ = CipherEnvelope::from_bytes(&data);
        let mut framed = b"ARSA1\0\0\0\x03".to_vec();
        framed.extend_from_slice(&data);
        let parsed = CipherEnvelope::from_bytes(&framed);
        prop_assert_eq!(parsed.is_ok(), data.len() % 3 == 0);
    }

    #[test]
    fn key_text_round_trip(idx in 0usize..4) {
        let pair = &keys()[idx];
        let public = serialize_public(pair.public());
        let private = serialize_private(pair.private());
        prop_assert_eq!(&parse_public(&public).unwrap(), pair.public());
        prop_assert_eq!(&parse_private(&private).unwrap(), pair.private());
        prop_assert_eq!(serialize_private(&parse_private(&private).unwrap()), private);
    }

    #[test]
    fn key_parser_never_panics(text in "\\PC{0,80}") {
        let _ = ascii_rsa::keystore::parse_key_file(&text);
        let _ = ascii_rsa::keystore::parse_key_file(&format!("ascii-rsa private key v1\n{text}"));
    }
}
