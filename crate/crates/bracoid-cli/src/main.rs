//! `bracoid` — construct, validate, and exhaustively enumerate finite skew
//! bracoids and skew braces.
//!
//! Exit codes: 0 = all checks passed, 1 = a mathematical check failed,
//! 2 = malformed input, bad usage, or an exceeded order cap.

mod commands;
mod descriptor;
mod json;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use bracoid_core::Caps;
use clap::{Parser, Subcommand};

use commands::EnumerateArgs;
use json::InputError;

#[derive(Parser)]
#[command(
    name = "bracoid",
    version,
    about = "Verifier and enumerator for finite skew bracoids and skew braces"
)]
struct Cli {
    /// Emit machine-readable JSON on stdout instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a structure file and run its full identity-check suite.
    Verify {
        /// A left/right/two-sided bracoid or brace JSON file.
        path: PathBuf,
    },
    /// Build a member of the parametric dihedral example family (orders
    /// |G| = 4t, |H| = 4w, |N| = 2d; requires d | t and d | w) and verify it.
    Example {
        t: usize,
        w: usize,
        d: usize,
        /// Also write the two-sided structure to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustively enumerate structures over small groups.
    ///
    /// Group descriptors: C<n>, D<d>, GT<t>, HW<w>, "A x B" products, or
    /// @file.json. Modes: --G alone lists left bracoids, --H alone right
    /// bracoids, both together two-sided bracoids, --braces skew braces.
    Enumerate {
        /// Left actor group descriptor.
        #[arg(long = "G", value_name = "SPEC")]
        g: Option<String>,
        /// Space group descriptor (always required).
        #[arg(long = "N", value_name = "SPEC")]
        n: String,
        /// Right actor group descriptor.
        #[arg(long = "H", value_name = "SPEC")]
        h: Option<String>,
        /// Insist on two-sided enumeration (requires both --G and --H).
        #[arg(long)]
        two_sided: bool,
        /// Enumerate skew braces on the space group instead of bracoids.
        #[arg(long)]
        braces: bool,
        /// Deduplicate the output up to structure isomorphism.
        #[arg(long)]
        up_to_iso: bool,
        /// Print counts only, eliding the structure list.
        #[arg(long)]
        count_only: bool,
        /// Check that the dihedral family member occurs in the output
        /// (requires literal GT<t>/HW<w> actor and D<d> space descriptors);
        /// exits 1 if it does not.
        #[arg(long)]
        contains_example: bool,
    },
    /// Evaluate every applicable theorem statement on a structure file.
    CheckTheorems {
        /// A left/right/two-sided bracoid or brace JSON file.
        path: PathBuf,
    },
}

/// The default order cap for enumeration inputs, overridable through the
/// BRACOID_ORDER_CAP environment variable.
fn order_cap() -> Result<usize, InputError> {
    match std::env::var("BRACOID_ORDER_CAP") {
        Err(std::env::VarError::NotPresent) => Ok(12),
        Err(e) => Err(InputError(format!("BRACOID_ORDER_CAP: {e}"))),
        Ok(raw) => raw
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&v| v >= 1)
            .ok_or_else(|| {
                InputError(format!("BRACOID_ORDER_CAP must be a positive integer, got {raw:?}"))
            }),
    }
}

fn run(cli: Cli) -> Result<u8, InputError> {
    match cli.command {
        Command::Verify { path } => commands::cmd_verify(&path, cli.json),
        Command::Example { t, w, d, out } => {
            commands::cmd_example(t, w, d, out.as_deref(), cli.json)
        }
        Command::Enumerate { g, n, h, two_sided, braces, up_to_iso, count_only, contains_example } => {
            let caps = Caps { group_order: order_cap()?, ..Caps::default() };
            let args = EnumerateArgs {
                g,
                n,
                h,
                two_sided,
                braces,
                up_to_iso,
                count_only,
                contains_example,
            };
            commands::cmd_enumerate(&args, &caps, cli.json)
        }
        Command::CheckTheorems { path } => commands::cmd_check_theorems(&path, cli.json),
    }
}

/// Rust's runtime ignores SIGPIPE, turning a closed stdout (`bracoid … |
/// head`) into a print panic; restoring the default disposition makes the
/// process end quietly like other Unix tools.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
