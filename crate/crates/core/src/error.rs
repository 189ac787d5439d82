use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus must be nonzero")]
    ZeroModulus,

    #[error("value has no inverse modulo the given modulus")]
    NotInvertible,

    #[error("character {ch:?} at position {position} is outside the 256-entry byte table")]
    NonByteCharacter { ch: char, position: usize },

    #[error("value needs {needed} bytes but only {width} are available")]
    ValueTooWide { needed: usize, width: usize },

    /// The message integer is not smaller than the modulus.
    #[error(
        "message integer has {message_bits} bits and is not below the {modulus_bits}-bit modulus; \
         a modulus of at least {required_bits} bits is required"
    )]
    MessageTooLarge {
        message_bits: u64,
        modulus_bits: u64,
        required_bits: u64,
    },

    #[error(
        "ciphertext integer has {cipher_bits} bits and is not below the {modulus_bits}-bit modulus"
    )]
    CipherTooLarge { cipher_bits: u64, modulus_bits: u64 },

    #[error("modulus of {modulus_bits} bits is too small for block mode (need at least 17)")]
    ModulusTooSmall { modulus_bits: u64 },

    #[error("framing error: {0}")]
    Framing(String),

    #[error("malformed key file: {0}")]
    MalformedKeyFile(String),

    #[error("invalid key: {0}")]
    InvalidKey(String),

    #[error("fixture corrupt: {0}")]
    FixtureCorrupt(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("key generation gave up after {0} attempts")]
    KeygenExhausted(usize),
}
