//! Command-line front end. `main.rs` only parses and calls [`run`].

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::implicitize::ImplicitSurface;
use crate::parse::parse_constant;
use crate::projective::{pluecker_embed, Line3};
use crate::scalars::GaussianRational as G;
use crate::twistor::{is_twistor_coords, TwistorCertificate};
use crate::verify::{j_invariance, line_on_surface, report_for, Certificate, Construction, FiberCount};
use crate::twistor::is_twistor_line;

pub const DEFAULT_SAMPLES: usize = 20;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "twistor", version, about = "Ruled surfaces in CP3 with infinitely many twistor lines")]
pub struct Cli {
    /// Output mode on standard output.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Twistor lift of f = g + h j, implicitized and certified.
    Lift {
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, allow_hyphen_values = true)]
        h: String,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Ruled surface of the curve (f4, f5) on the real quadric.
    Grassmann {
        #[arg(long, allow_hyphen_values = true)]
        f4: String,
        #[arg(long, allow_hyphen_values = true)]
        f5: String,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Construction JSON in, surface JSON out.
    Implicitize {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact twistor-line test on six comma-separated Pluecker coordinates.
    IsTwistor {
        #[arg(long, allow_hyphen_values = true)]
        pluecker: String,
    },
    /// Whether a line lies on a surface, and whether it is a twistor line.
    Verify {
        #[arg(long)]
        surface: PathBuf,
        #[arg(long)]
        line: PathBuf,
    },
    /// Construction JSON in, certificate JSON out.
    Report {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Serialize)]
struct SurfaceAndCertificate<'a> {
    surface: &'a ImplicitSurface,
    certificate: &'a Certificate,
}

#[derive(Serialize)]
struct LineVerdict<'a> {
    on_surface: bool,
    twistor: &'a TwistorCertificate,
}

fn read(path: &Path) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    std::fs::write(path, s)?;
    Ok(())
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Parses `"a, b, c, d, e, f"` into six complex constants.
pub fn parse_pluecker_list(src: &str) -> Result<[G; 6]> {
    let parts: Vec<&str> = src.split(',').collect();
    if parts.len() != 6 {
        return Err(Error::InvalidArgument(format!(
            "expected 6 comma-separated coordinates, got {}",
            parts.len()
        )));
    }
    let vals = parts.iter().map(|p| parse_constant(p.trim())).collect::<Result<Vec<_>>>()?;
    Ok(vals.try_into().expect("six entries"))
}

fn summarize_surface(out: &mut dyn Write, s: &ImplicitSurface) -> Result<()> {
    writeln!(out, "F = {}", s.f())?;
    writeln!(out, "degree: {}", s.degree())?;
    for step in s.cleanup() {
        writeln!(out, "cleanup: {}", serde_json::to_string(step)?)?;
    }
    Ok(())
}

fn summarize_certificate(out: &mut dyn Write, c: &Certificate) -> Result<()> {
    writeln!(out, "parity: {}", if c.parity_ok { "even" } else { "ODD" })?;
    match &c.j_invariance.lambda {
        Some(l) => writeln!(out, "j-invariant: yes (lambda = {l})")?,
        None => writeln!(out, "j-invariant: no")?,
    }
    let good = c.twistor_fibers.iter().filter(|f| f.passes()).count();
    writeln!(
        out,
        "twistor fibers on surface: {good}/{}",
        c.twistor_fibers.len()
    )?;
    match c.fiber_count {
        FiberCount::Probed(n) => writeln!(out, "generic fiber count: {n}")?,
        FiberCount::NotProbed => writeln!(out, "generic fiber count: not probed")?,
    }
    writeln!(out, "seed: {}", c.seed)?;
    Ok(())
}

fn construct_and_report(
    construction: &Construction,
    samples: usize,
    seed: u64,
    out_path: Option<&Path>,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32> {
    let (surface, cert) = report_for(construction, samples, seed)?;
    let both = SurfaceAndCertificate {
        surface: &surface,
        certificate: &cert,
    };
    match format {
        Format::Json => emit_json(out, &both)?,
        Format::Text => {
            summarize_surface(out, &surface)?;
            summarize_certificate(out, &cert)?;
        }
    }
    if let Some(p) = out_path {
        write_json(p, &both)?;
    }
    Ok(cert.exit_code())
}

/// Runs one command; returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let format = cli.format;
    match &cli.command {
        Command::Lift { g, h, samples, seed, out: path } => {
            construct_and_report(&Construction::slice(g, h)?, *samples, *seed, path.as_deref(), format, out)
        }
        Command::Grassmann { f4, f5, samples, seed, out: path } => {
            construct_and_report(&Construction::grassmann(f4, f5)?, *samples, *seed, path.as_deref(), format, out)
        }
        Command::Implicitize { input, out: path } => {
            let surface = Construction::from_json(&read(input)?)?.implicitize()?;
            match format {
                Format::Json => emit_json(out, &surface)?,
                Format::Text => summarize_surface(out, &surface)?,
            }
            if let Some(p) = path {
                write_json(p, &surface)?;
            }
            Ok(0)
        }
        Command::IsTwistor { pluecker } => {
            let cert = is_twistor_coords(parse_pluecker_list(pluecker)?)?;
            match format {
                Format::Json => emit_json(out, &cert)?,
                Format::Text => {
                    writeln!(out, "twistor line: {}", cert.is_twistor)?;
                    if let Some(l) = &cert.lambda {
                        writeln!(out, "lambda: {l}")?;
                    }
                    if let Some((i, j)) = cert.violating_minor {
                        writeln!(out, "nonvanishing minor: columns {i}, {j}")?;
                    }
                }
            }
            Ok(0)
        }
        Command::Verify { surface, line } => {
            let surface = ImplicitSurface::from_json(&read(surface)?)?;
            let line: Line3 = serde_json::from_str(&read(line)?)?;
            let on_surface = line_on_surface(&surface, &line);
            let twistor = is_twistor_line(&pluecker_embed(&line));
            match format {
                Format::Json => emit_json(out, &LineVerdict { on_surface, twistor: &twistor })?,
                Format::Text => {
                    writeln!(out, "on surface: {on_surface}")?;
                    writeln!(out, "twistor line: {}", twistor.is_twistor)?;
                    writeln!(out, "surface j-invariant: {}", j_invariance(&surface).holds)?;
                }
            }
            Ok(if on_surface && twistor.is_twistor { 0 } else { 4 })
        }
        Command::Report { input, out: path, samples, seed } => {
            let construction = Construction::from_json(&read(input)?)?;
            let (_, cert) = report_for(&construction, *samples, *seed)?;
            match format {
                Format::Json => emit_json(out, &cert)?,
                Format::Text => {
                    writeln!(out, "degree: {}", cert.degree)?;
                    summarize_certificate(out, &cert)?;
                }
            }
            if let Some(p) = path {
                write_json(p, &cert)?;
            }
            Ok(cert.exit_code())
        }
    }
}
