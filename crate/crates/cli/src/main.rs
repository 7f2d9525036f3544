use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "dgc", version, about = "Subgroup-distortion cryptosystems")]
struct Cli {
    /// Output encoding.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProtocolArg {
    #[value(name = "I")]
    I,
    #[value(name = "IA")]
    Ia,
    #[value(name = "IB")]
    Ib,
    #[value(name = "II")]
    Ii,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AttackName {
    Subgroup,
    Alphabet,
    Guess,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Platform {
    Bs12,
    Heis,
    Fbc,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a shared secret.
    Keygen(KeygenArgs),
    /// Encode one message.
    Encode(EncodeArgs),
    /// Decode one transmission.
    Decode(DecodeArgs),
    /// Run Alice and Bob over a byte stream with a passive tap.
    Session(SessionArgs),
    /// Run an eavesdropper attack on a transcript.
    Attack(AttackArgs),
    /// Benchmarks.
    #[command(subcommand)]
    Bench(BenchCommand),
    /// Distortion tower lengths.
    Tower(TowerArgs),
    /// Print the distortion identities the platforms rest on.
    Demo,
}

#[derive(Args, Debug)]
pub struct KeygenArgs {
    #[arg(long, value_enum)]
    pub protocol: ProtocolArg,
    /// Seed, or a digit-string timestamp such as 02032016123342.
    #[arg(long)]
    pub seed: String,
    /// Key file to write.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Print the secret key to standard output.
    #[arg(long)]
    pub reveal: bool,
    /// Protocol I over the toy abelian lattice of this dimension.
    #[arg(long)]
    pub toy: Option<usize>,
}

#[derive(Args, Debug)]
pub struct EncodeArgs {
    #[arg(long)]
    pub key: PathBuf,
    #[arg(long)]
    pub n: u64,
    /// Frame index within a session (offsets the PRNG stream).
    #[arg(long, default_value_t = 0)]
    pub frame: u64,
}

#[derive(Args, Debug)]
pub struct DecodeArgs {
    #[arg(long)]
    pub key: PathBuf,
    /// Transmission file; standard input when absent.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub frame: u64,
}

#[derive(Args, Debug)]
pub struct SessionArgs {
    #[arg(long, value_enum)]
    pub protocol: ProtocolArg,
    #[arg(long)]
    pub key: PathBuf,
    /// Comma-separated messages.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub messages: Vec<u64>,
    /// Transcript file to write.
    #[arg(long)]
    pub transcript: Option<PathBuf>,
    /// Use a loopback TCP connection instead of the in-process pipe.
    #[arg(long)]
    pub tcp: bool,
}

#[derive(Args, Debug)]
pub struct AttackArgs {
    #[arg(long, value_enum)]
    pub name: AttackName,
    #[arg(long)]
    pub transcript: PathBuf,
    /// Public parameters (JSON). Derived from `--key` when absent.
    #[arg(long)]
    pub public: Option<PathBuf>,
    /// Secret key used only as the ground-truth oracle.
    #[arg(long)]
    pub key: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum BenchCommand {
    /// Distortion profile of the distinguished subgroup.
    Distortion(DistortionArgs),
}

#[derive(Args, Debug)]
pub struct DistortionArgs {
    #[arg(long, value_enum)]
    pub platform: Platform,
    #[arg(long)]
    pub radius: usize,
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Args, Debug)]
pub struct TowerArgs {
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub n: u64,
    /// Expand the tower word into the bottom free factor.
    #[arg(long)]
    pub materialize: bool,
}

fn run(argv: Vec<OsString>) -> ExitCode {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let f = cli.format;
    let result = match cli.command {
        Command::Keygen(a) => commands::keygen(&a, f),
        Command::Encode(a) => commands::encode(&a, f),
        Command::Decode(a) => commands::decode(&a, f),
        Command::Session(a) => commands::session(&a, f),
        Command::Attack(a) => commands::attack(&a, f),
        Command::Bench(BenchCommand::Distortion(a)) => commands::distortion(&a, f),
        Command::Tower(a) => commands::tower(&a, f),
        Command::Demo => commands::demo(f),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("dgc: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn main() -> ExitCode {
    run(std::env::args_os().collect())
}
