//! Key generation and the single-integer ("paper mode") pipeline.

use num_traits::One;

use crate::codec::{bytes_to_int, int_to_bytes};
use crate::numtheory::{gcd, mod_inverse, mod_pow, random_prime, RandomSource};
use crate::{Error, Natural, Result};

/// Restarts allowed before [`generate_keypair`] gives up.
pub const MAX_KEYGEN_ATTEMPTS: usize = 10_000;

/// Public half of a key: modulus `n` and exponent `e`, with `1 < e < n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PublicKey {
    n: Natural,
    e: Natural,
}

impl PublicKey {
    pub fn new(n: Natural, e: Natural) -> Result<Self> {
        if n < Natural::from(6u8) {
            return Err(Error::InvalidKey(format!("modulus {n} is below 6")));
        }
        if e <= Natural::one() || e >= n {
            return Err(Error::InvalidKey(
                "public exponent must satisfy 1 < e < n".into(),
            ));
        }
        Ok(Self { n, e })
    }

    pub fn n(&self) -> &Natural {
        &self.n
    }

    pub fn e(&self) -> &Natural {
        &self.e
    }
}

/// Private half of a key. `p`, `q` and `phi` are optional extras; when
/// present they are checked against `n` and `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrivateKey {
    n: Natural,
    d: Natural,
    factors: Option<(Natural, Natural)>,
    phi: Option<Natural>,
}

impl PrivateKey {
    pub fn new(n: Natural, d: Natural) -> Result<Self> {
        Self::from_parts(n, d, None, None)
    }

    pub fn from_parts(
        n: Natural,
        d: Natural,
        factors: Option<(Natural, Natural)>,
        phi: Option<Natural>,
    ) -> Result<Self> {
        if n < Natural::from(6u8) {
            return Err(Error::InvalidKey(format!("modulus {n} is below 6")));
        }
        if d <= Natural::one() || d >= n {
            return Err(Error::InvalidKey(
                "private exponent must satisfy 1 < d < n".into(),
            ));
        }
        if let Some((p, q)) = &factors {
            if p <= &Natural::one() || q <= &Natural::one() {
                return Err(Error::InvalidKey("prime factors must exceed 1".into()));
            }
            if p * q != n {
                return Err(Error::InvalidKey("p * q does not equal n".into()));
            }
            if let Some(phi) = &phi {
                if phi != &((p - 1u8) * (q - 1u8)) {
                    return Err(Error::InvalidKey(
                        "phi does not equal (p - 1)(q - 1)".into(),
                    ));
                }
            }
        }
        if let Some(phi) = &phi {
            if &d >= phi {
                return Err(Error::InvalidKey(
                    "private exponent must be below phi".into(),
                ));
            }
            if phi >= &n {
                return Err(Error::InvalidKey("phi must be below n".into()));
            }
        }
        Ok(Self { n, d, factors, phi })
    }

    pub fn n(&self) -> &Natural {
        &self.n
    }

    pub fn d(&self) -> &Natural {
        &self.d
    }

    pub fn p(&self) -> Option<&Natural> {
        self.factors.as_ref().map(|(p, _)| p)
    }

    pub fn q(&self) -> Option<&Natural> {
        self.factors.as_ref().map(|(_, q)| q)
    }

    pub fn phi(&self) -> Option<&Natural> {
        self.phi.as_ref()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyPair {
    public: PublicKey,
    private: PrivateKey,
}

impl KeyPair {
    /// Pairs two halves, checking the shared modulus and, when the private
    /// half carries `phi`, that `e * d ≡ 1 (mod phi)`.
    pub fn new(public: PublicKey, private: PrivateKey) -> Result<Self> {
        if public.n != private.n {
            return Err(Error::InvalidKey("public and private moduli differ".into()));
        }
        if let Some(phi) = &private.phi {
            if !((&public.e * &private.d) % phi).is_one() {
                return Err(Error::InvalidKey("e * d is not 1 modulo phi".into()));
            }
        }
        Ok(Self { public, private })
    }

    pub fn public(&self) -> &PublicKey {
        &self.public
    }

    pub fn private(&self) -> &PrivateKey {
        &self.private
    }

    pub fn into_parts(self) -> (PublicKey, PrivateKey) {
        (self.public, self.private)
    }
}

/// Generates `p` and `q` of exactly the requested widths and derives `d`
/// for the caller's exponent.
///
/// `q` is redrawn while it equals `p`. When `gcd(e, phi) != 1` both primes are
/// discarded and the search restarts with the same `e`.
pub fn generate_keypair<R: RandomSource + ?Sized>(
    bits_p: u64,
    bits_q: u64,
    public_exponent: &Natural,
    rounds: usize,
    rng: &mut R,
) -> Result<KeyPair> {
    if bits_p < 4 || bits_q < 4 {
        return Err(Error::InvalidParameter(format!(
            "prime widths must be at least 4 bits, got {bits_p} and {bits_q}"
        )));
    }
    let e = public_exponent;
    if e < &Natural::from(3u8) || !e.bit(0) {
        return Err(Error::InvalidParameter(format!(
            "public exponent must be odd and at least 3, got {e}"
        )));
    }
    // phi >= 2^(bits_p - 1) * 2^(bits_q - 1), so this bound guarantees e < phi
    if e.bits() > bits_p + bits_q - 2 {
        return Err(Error::InvalidParameter(format!(
            "public exponent {e} is too large for {bits_p}+{bits_q}-bit primes"
        )));
    }

    let mut attempts = 0;
    let mut tick = || {
        attempts += 1;
        if attempts > MAX_KEYGEN_ATTEMPTS {
            Err(Error::KeygenExhausted(MAX_KEYGEN_ATTEMPTS))
        } else {
            Ok(())
        }
    };
    loop {
        tick()?;
        let p = random_prime(bits_p, rounds, rng)?;
        let mut q = random_prime(bits_q, rounds, rng)?;
        while q == p {
            tick()?;
            q = random_prime(bits_q, rounds, rng)?;
        }
        let phi = (&p - 1u8) * (&q - 1u8);
        if !gcd(e, &phi).is_one() {
            continue;
        }
        let d = mod_inverse(e, &phi)?;
        let n = &p * &q;
        let public = PublicKey::new(n.clone(), e.clone())?;
        let private = PrivateKey::from_parts(n, d, Some((p, q)), Some(phi))?;
        return KeyPair::new(public, private);
    }
}

/// `m^e mod n`; fails when `m >= n`, the case where textbook RSA does not apply.
pub fn encrypt_int(m: &Natural, key: &PublicKey) -> Result<Natural> {
    if m >= &key.n {
        return Err(Error::MessageTooLarge {
            message_bits: m.bits(),
            modulus_bits: key.n.bits(),
            required_bits: m.bits() + 1,
        });
    }
    mod_pow(m, &key.e, &key.n)
}

/// `c^d mod n`; fails when `c >= n`.
pub fn decrypt_int(c: &Natural, key: &PrivateKey) -> Result<Natural> {
    if c >= &key.n {
        return Err(Error::CipherTooLarge {
            cipher_bits: c.bits(),
            modulus_bits: key.n.bits(),
        });
    }
    mod_pow(c, &key.d, &key.n)
}

/// Whole message as one integer, encrypted, and written back as minimal bytes.
pub fn paper_encrypt(message: &[u8], key: &PublicKey) -> Result<Vec<u8>> {
    decimal_cipher(message, key).map(|c| int_to_bytes(&c))
}

/// Inverse of [`paper_encrypt`], except that leading `0x00` bytes of the
/// original message do not survive.
pub fn paper_decrypt(cipher: &[u8], key: &PrivateKey) -> Result<Vec<u8>> {
    let m = decrypt_int(&bytes_to_int(cipher), key)?;
    Ok(int_to_bytes(&m))
}

/// [`paper_encrypt`] stopped before the final byte conversion.
pub fn decimal_cipher(message: &[u8], key: &PublicKey) -> Result<Natural> {
    encrypt_int(&bytes_to_int(message), key)
}
