//! Command-line driver for `clifftwist-core`.
//!
//! [`run`] does all the work and returns the rendered output, so the binary
//! and the tests share one code path.

pub mod args;
pub mod render;
pub mod verify;

use std::time::Instant;

use clifftwist_core::forms::{sweep_signatures, table_sweep, ProductKind};
use clifftwist_core::groups::GroupLattice;
use clifftwist_core::idempotents::parse_signs;
use clifftwist_core::spinors::{clidata, clidata_with_signs, CliData};
use clifftwist_core::{Error, Signature};
use rayon::prelude::*;

pub use args::{Cli, Command, Format, GlobalOpts};

/// Largest `p + q` covered by the golden data; larger sweeps still run.
pub const GOLDEN_MAX_N: u32 = 9;

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub stderr: Vec<String>,
    pub code: i32,
}

fn usage(msg: impl Into<String>) -> Output {
    Output {
        stdout: String::new(),
        stderr: vec![msg.into()],
        code: EXIT_USAGE,
    }
}

fn from_error(e: Error) -> Output {
    let code = match e {
        Error::SignatureTooLarge { .. }
        | Error::EnumerationTooLarge { .. }
        | Error::WrongSignCount { .. }
        | Error::InvalidSign(_) => EXIT_USAGE,
        _ => EXIT_FAILED,
    };
    Output {
        stdout: String::new(),
        stderr: vec![format!("error: {e}")],
        code,
    }
}

fn data_for(sig: Signature, opts: &GlobalOpts) -> Result<CliData, Error> {
    match &opts.signs {
        Some(s) => clidata_with_signs(sig, &parse_signs(s)?),
        None => clidata(sig),
    }
}

fn large_warning(n: u32) -> Option<String> {
    (n > GOLDEN_MAX_N).then(|| {
        format!("warning: p + q = {n} is beyond the golden data (p + q <= {GOLDEN_MAX_N}); results are unchecked and may be slow")
    })
}

/// Bounds the worker pool by `CLIFFTWIST_JOBS` when set.
pub fn configure_jobs() -> Result<(), String> {
    if let Ok(v) = std::env::var("CLIFFTWIST_JOBS") {
        let n: usize = v
            .parse()
            .map_err(|_| format!("CLIFFTWIST_JOBS must be a positive integer, got `{v}`"))?;
        if n == 0 {
            return Err("CLIFFTWIST_JOBS must be at least 1".into());
        }
        // A pool may already exist when called twice in one process.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Output {
    match run_inner(cli) {
        Ok(out) => out,
        Err(e) => from_error(e),
    }
}

fn run_inner(cli: &Cli) -> Result<Output, Error> {
    let opts = &cli.global;
    let mut out = Output::default();
    match &cli.command {
        Command::Clidata { p, q } => {
            let sig = Signature::new(*p, *q)?;
            out.stderr.extend(large_warning(sig.n()));
            let cd = data_for(sig, opts)?;
            out.stdout = render::clidata(&cd, opts.format);
        }
        Command::Groups { p, q } => {
            let sig = Signature::new(*p, *q)?;
            out.stderr.extend(large_warning(sig.n()));
            let cd = data_for(sig, opts)?;
            let lat = GroupLattice::new(&cd.idempotent)?;
            out.stdout = render::groups(&cd, &lat, opts.format);
        }
        Command::Verify { p, q, all, samples } => {
            let sigs = match (p, q, all) {
                (Some(p), Some(q), None) => vec![Signature::new(*p, *q)?],
                (None, None, Some(max_n)) => {
                    if opts.signs.is_some() {
                        return Ok(usage("error: --signs applies to a single signature, not to --all"));
                    }
                    sweep_signatures(*max_n)?
                }
                _ => return Ok(usage("error: give either `verify P Q` or `verify --all MAX_N`")),
            };
            let max_n = sigs.iter().map(|s| s.n()).max().unwrap_or(0);
            out.stderr.extend(large_warning(max_n));
            let start = Instant::now();
            let reports = sigs
                .par_iter()
                .map(|&sig| verify::verify_signature(&data_for(sig, opts)?, opts.seed, *samples))
                .collect::<Result<Vec<_>, Error>>()?;
            if opts.verbose {
                out.stderr.push(format!("verified {} signatures in {:.2?}", reports.len(), start.elapsed()));
            }
            out.stdout = render::verify(&reports, opts.format, opts.verbose);
            if !reports.iter().all(|r| r.passed) {
                out.code = EXIT_FAILED;
            }
        }
        Command::Tables {
            max_n,
            product,
            product_flag,
        } => {
            if opts.signs.is_some() {
                return Ok(usage("error: --signs applies to a single signature, not to table sweeps"));
            }
            Signature::new(*max_n, 0)?;
            out.stderr.extend(large_warning(*max_n));
            let kind = product.or(*product_flag).unwrap_or(ProductKind::Tp);
            let start = Instant::now();
            let rows = table_sweep(*max_n, kind)?;
            if opts.verbose {
                out.stderr.push(format!("{} rows in {:.2?}", rows.len(), start.elapsed()));
            }
            out.stdout = render::tables(&rows, opts.format);
        }
    }
    Ok(out)
}
