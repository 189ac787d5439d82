//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 when a message or
//! ciphertext integer is not below the modulus, 3 for framing, key-file and
//! fixture errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::block::{block_decrypt, block_encrypt, CipherEnvelope};
use crate::fixtures::{load_vectors, verify_vectors, PaperVectors};
use crate::keystore::{
    parse_key_file, parse_private, parse_public, serialize_private, serialize_public, KeyFile,
};
use crate::numtheory::{entropy_rng, is_probable_prime, seeded_rng, DEFAULT_MR_ROUNDS};
use crate::rsa::{generate_keypair, paper_decrypt, paper_encrypt};
use crate::{Error, Natural};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_TOO_LARGE: i32 = 2;
pub const EXIT_FORMAT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "ascii-rsa", version, about = "Textbook RSA over byte messages")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a key pair and write <prefix>.pub and <prefix>.key
    Keygen(KeygenArgs),
    /// Encrypt with a public key
    Encrypt(CryptArgs),
    /// Decrypt with a private key
    Decrypt(CryptArgs),
    /// Print a key's kind, sizes and consistency checks
    Inspect(InspectArgs),
    /// Replay the 600-bit worked example from the golden vectors
    Repro(ReproArgs),
}

#[derive(Debug, Args)]
pub struct KeygenArgs {
    #[arg(long, default_value_t = 600)]
    pub bits_p: u64,
    #[arg(long, default_value_t = 600)]
    pub bits_q: u64,
    #[arg(long, default_value = "11")]
    pub public_exponent: Natural,
    #[arg(long, default_value_t = DEFAULT_MR_ROUNDS)]
    pub mr_rounds: usize,
    /// Seed for reproducible keys; system entropy when omitted
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub out_prefix: PathBuf,
}

#[derive(Debug, Args)]
pub struct CryptArgs {
    #[arg(long)]
    pub key: PathBuf,
    /// Input file; standard input when omitted or "-"
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Output file; standard output when omitted or "-"
    #[arg(long = "out")]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Mode::Block)]
    pub mode: Mode,
    #[arg(long, value_enum, default_value_t = Armor::Raw)]
    pub armor: Armor,
}

#[derive(Debug, Args)]
pub struct InspectArgs {
    #[arg(long)]
    pub key: PathBuf,
    #[arg(long, default_value_t = DEFAULT_MR_ROUNDS)]
    pub mr_rounds: usize,
}

#[derive(Debug, Args)]
pub struct ReproArgs {
    /// Vector file to replay instead of the bundled one
    #[arg(long)]
    pub fixtures: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// The whole message as one integer below n
    Paper,
    /// Sentinel-framed blocks in an envelope
    Block,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Armor {
    Raw,
    Hex,
}

enum Failure {
    Usage(String),
    Lib(Error),
    Report,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CliResult = std::result::Result<(), Failure>;

/// Runs a parsed command against the given streams and returns the exit code.
pub fn run(cli: Cli, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Keygen(args) => keygen(&args, stdout),
        Command::Encrypt(args) => encrypt(&args, stdin, stdout),
        Command::Decrypt(args) => decrypt(&args, stdin, stdout),
        Command::Inspect(args) => inspect(&args, stdout),
        Command::Repro(args) => repro(&args, stdout),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Report) => EXIT_FORMAT,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Lib(err)) => {
            let _ = writeln!(stderr, "error: {err}");
            if matches!(err, Error::MessageTooLarge { .. }) {
                let _ = writeln!(
                    stderr,
                    "paper mode needs the message integer below n; use --mode block or a larger key"
                );
            }
            exit_code(&err)
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::MessageTooLarge { .. } | Error::CipherTooLarge { .. } => EXIT_TOO_LARGE,
        Error::Framing(_)
        | Error::MalformedKeyFile(_)
        | Error::InvalidKey(_)
        | Error::FixtureCorrupt(_) => EXIT_FORMAT,
        _ => EXIT_USAGE,
    }
}

fn keygen(args: &KeygenArgs, stdout: &mut dyn Write) -> CliResult {
    let pair = match args.seed {
        Some(seed) => generate_keypair(
            args.bits_p,
            args.bits_q,
            &args.public_exponent,
            args.mr_rounds,
            &mut seeded_rng(seed),
        ),
        None => generate_keypair(
            args.bits_p,
            args.bits_q,
            &args.public_exponent,
            args.mr_rounds,
            &mut entropy_rng(),
        ),
    }?;
    let public_path = with_suffix(&args.out_prefix, "pub");
    let private_path = with_suffix(&args.out_prefix, "key");
    write_file(&public_path, serialize_public(pair.public()).as_bytes())?;
    write_file(&private_path, serialize_private(pair.private()).as_bytes())?;
    writeln!(stdout, "{}", pair.public().n().bits()).map_err(io_failure)?;
    Ok(())
}

fn encrypt(args: &CryptArgs, stdin: &mut dyn Read, stdout: &mut dyn Write) -> CliResult {
    let key = parse_public(&read_text(&args.key)?)?;
    let message = read_input(args.input.as_deref(), stdin)?;
    let cipher = match args.mode {
        Mode::Paper => paper_encrypt(&message, &key)?,
        Mode::Block => block_encrypt(&message, &key)?.to_bytes(),
    };
    write_output(args.output.as_deref(), stdout, &armor(args.armor, cipher))
}

fn decrypt(args: &CryptArgs, stdin: &mut dyn Read, stdout: &mut dyn Write) -> CliResult {
    let key = parse_private(&read_text(&args.key)?)?;
    let cipher = dearmor(args.armor, read_input(args.input.as_deref(), stdin)?)?;
    let message = match args.mode {
        Mode::Paper => paper_decrypt(&cipher, &key)?,
        Mode::Block => block_decrypt(&CipherEnvelope::from_bytes(&cipher)?, &key)?,
    };
    write_output(args.output.as_deref(), stdout, &message)
}

fn inspect(args: &InspectArgs, stdout: &mut dyn Write) -> CliResult {
    let key = parse_key_file(&read_text(&args.key)?)?;
    let mut lines = vec![format!("kind: {}", key.kind())];
    let mut checks: Vec<(&str, bool)> = Vec::new();
    let mut rng = seeded_rng(0);
    match &key {
        KeyFile::Public(k) => {
            lines.push(format!("n: {} bits", k.n().bits()));
            lines.push(format!("e: {} ({} bits)", k.e(), k.e().bits()));
            checks.push(("1 < e < n", true));
        }
        KeyFile::Private(k) => {
            lines.push(format!("n: {} bits", k.n().bits()));
            lines.push(format!("d: {} bits", k.d().bits()));
            checks.push(("1 < d < n", true));
            if let (Some(p), Some(q)) = (k.p(), k.q()) {
                lines.push(format!("p: {} bits", p.bits()));
                lines.push(format!("q: {} bits", q.bits()));
                checks.push(("n = p * q", true));
                checks.push(("p != q", p != q));
                checks.push((
                    "p is probably prime",
                    is_probable_prime(p, args.mr_rounds, &mut rng),
                ));
                checks.push((
                    "q is probably prime",
                    is_probable_prime(q, args.mr_rounds, &mut rng),
                ));
            }
            if let Some(phi) = k.phi() {
                lines.push(format!("phi: {} bits", phi.bits()));
                checks.push(("1 < d < phi", true));
                if k.p().is_some() {
                    checks.push(("phi = (p - 1)(q - 1)", true));
                }
            }
        }
    }
    for (name, ok) in &checks {
        lines.push(format!("check {name}: {}", if *ok { "ok" } else { "FAIL" }));
    }
    writeln!(stdout, "{}", lines.join("\n")).map_err(io_failure)?;
    if checks.iter().all(|(_, ok)| *ok) {
        Ok(())
    } else {
        Err(Failure::Report)
    }
}

fn repro(args: &ReproArgs, stdout: &mut dyn Write) -> CliResult {
    let vectors = match &args.fixtures {
        Some(path) => load_vectors(path)?,
        None => PaperVectors::shipped(),
    };
    let report = verify_vectors(&vectors);
    write!(stdout, "{report}").map_err(io_failure)?;
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Report)
    }
}

fn armor(armor: Armor, bytes: Vec<u8>) -> Vec<u8> {
    match armor {
        Armor::Raw => bytes,
        Armor::Hex => format!("{}\n", hex::encode(bytes)).into_bytes(),
    }
}

fn dearmor(armor: Armor, bytes: Vec<u8>) -> std::result::Result<Vec<u8>, Failure> {
    match armor {
        Armor::Raw => Ok(bytes),
        Armor::Hex => {
            let text = std::str::from_utf8(&bytes)
                .map_err(|_| Error::Framing("hex armor is not valid text".into()))?;
            hex::decode(text.trim_ascii())
                .map_err(|e| Failure::Lib(Error::Framing(format!("bad hex armor: {e}"))))
        }
    }
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut name = prefix.as_os_str().to_owned();
    name.push(".");
    name.push(suffix);
    PathBuf::from(name)
}

fn is_stdio(path: Option<&Path>) -> bool {
    path.is_none_or(|p| p == Path::new("-"))
}

fn read_input(path: Option<&Path>, stdin: &mut dyn Read) -> std::result::Result<Vec<u8>, Failure> {
    if is_stdio(path) {
        let mut buf = Vec::new();
        stdin.read_to_end(&mut buf).map_err(io_failure)?;
        Ok(buf)
    } else {
        let path = path.expect("checked");
        fs::read(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
    }
}

fn read_text(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, stdout: &mut dyn Write, bytes: &[u8]) -> CliResult {
    if is_stdio(path) {
        stdout
            .write_all(bytes)
            .and_then(|_| stdout.flush())
            .map_err(io_failure)
    } else {
        write_file(path.expect("checked"), bytes)
    }
}

fn write_file(path: &Path, bytes: &[u8]) -> CliResult {
    fs::write(path, bytes)
        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn io_failure(e: io::Error) -> Failure {
    Failure::Usage(format!("i/o error: {e}"))
}
