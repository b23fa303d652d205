//! Command-line front end. Exit codes: 0 success, 1 verification mismatch,
//! 2 input or parse error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::algebra::{AlgebraElement, EvolutionAlgebra, NilVerdict};
use crate::catalog::{self, CheckStatus, ConformanceReport};
use crate::decomposition::{decompose, derivation_space_by_blocks, first_split_dims};
use crate::derivation::{
    bracket, derivation_basis, derivation_space, derived_subalgebra, inner_derivations, lie_structure,
};
use crate::error::{EvoError, Result};
use crate::io::load_algebra;
use crate::matrix::Matrix;
use crate::scalar::{format_scalar, parse_scalar, Scalar};

pub const DEFAULT_SEED: u64 = 42;
pub const SEED_VAR: &str = "EVOALG_SEED";

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "evoalg", version, about = "Exact derivation algebras of evolution algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Annihilator, associativity, power-associativity, nil verdict, components.
    Info { file: PathBuf },
    /// Derivation algebra: canonical basis, derived subalgebra, structure constants.
    Derivations {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Inner derivations and the ideal property.
    Inner { file: PathBuf },
    /// Support components and the block description of derivations.
    Decompose { file: PathBuf },
    /// Built-in families and their expected derivation dimensions.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List,
    /// Verify one family (given or default parameters) or every family.
    Verify {
        name: Option<String>,
        #[arg(allow_hyphen_values = true)]
        params: Vec<String>,
    },
}

/// Seed from `EVOALG_SEED`, falling back to the default on absence or garbage.
pub fn seed_from_env() -> u64 {
    std::env::var(SEED_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    execute(&cli.command, seed_from_env(), out, err)
}

pub fn execute(cmd: &Command, seed: u64, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cmd {
        Command::Info { file } => load(file, err).and_then(|e| info(&e, out)),
        Command::Derivations { file, json } => load(file, err).and_then(|e| derivations(&e, *json, out)),
        Command::Inner { file } => load(file, err).and_then(|e| inner(&e, out)),
        Command::Decompose { file } => load(file, err).and_then(|e| decompose_cmd(&e, out)),
        Command::Catalog { action: CatalogAction::List } => list(out).map(|_| EXIT_OK),
        Command::Catalog {
            action: CatalogAction::Verify { name, params },
        } => verify(name.as_deref(), params, seed, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn load(path: &Path, err: &mut dyn Write) -> Result<EvolutionAlgebra> {
    let loaded = load_algebra(path)?;
    for w in &loaded.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    Ok(loaded.algebra)
}

fn io_err(e: std::io::Error) -> EvoError {
    EvoError::InvalidInput(format!("write failed: {e}"))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn basis_names(indices: &[usize]) -> String {
    let names: Vec<String> = indices.iter().map(|i| format!("e{}", i + 1)).collect();
    format!("{{{}}}", names.join(", "))
}

fn info(e: &EvolutionAlgebra, out: &mut dyn Write) -> Result<i32> {
    let n = e.dim();
    let ann = e.annihilator_indices();
    let assoc = e.is_associative();
    let pa = e.is_power_associative();
    let nil = match e.is_nil() {
        NilVerdict::Nil { index } => format!("nil index {index}"),
        NilVerdict::NotNil { witness } => format!("not nil (witness {witness})"),
        NilVerdict::Inconclusive => "nil: inconclusive".to_string(),
    };
    let comps = decompose(e);
    let shape = if comps.len() == 1 {
        "indecomposable".to_string()
    } else {
        format!("decomposable ({} components)", comps.len())
    };
    let w = |out: &mut dyn Write, s: String| writeln!(out, "{s}").map_err(io_err);
    w(out, format!("dim {n}"))?;
    w(out, format!("squares: {e}"))?;
    w(out, format!("ann basis: {}", basis_names(&ann)))?;
    w(
        out,
        format!(
            "ann dim {}, associative: {}, power-associative: {}, {nil}, {shape}",
            ann.len(),
            yes_no(assoc),
            yes_no(pa)
        ),
    )?;
    let parts: Vec<String> = comps.iter().map(|c| basis_names(&c.indices)).collect();
    w(out, format!("components: {}", parts.join(" ")))?;
    Ok(EXIT_OK)
}

/// `d(e_i) = ...` lines for one matrix.
fn describe(d: &Matrix) -> Vec<String> {
    (0..d.cols())
        .map(|i| format!("d(e{}) = {}", i + 1, AlgebraElement::new(d.column(i))))
        .collect()
}

fn strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(format_scalar).collect())
        .collect()
}

fn derivations(e: &EvolutionAlgebra, as_json: bool, out: &mut dyn Write) -> Result<i32> {
    let n = e.dim();
    let basis = derivation_basis(e);
    let derived = derived_subalgebra(n, &basis)?;
    let lie = lie_structure(&basis)?;
    if as_json {
        let doc = json!({
            "dim": n,
            "dim_D": basis.len(),
            "basis": basis.iter().map(strings).collect::<Vec<_>>(),
            "dim_D_prime": derived.dim(),
            "structure_constants": lie.constants.iter().map(|row| {
                row.iter().map(|v| v.iter().map(format_scalar).collect::<Vec<_>>()).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json")).map_err(io_err)?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "dim D = {}", basis.len()).map_err(io_err)?;
    for (k, d) in basis.iter().enumerate() {
        writeln!(out, "D{}:", k + 1).map_err(io_err)?;
        for line in describe(d) {
            writeln!(out, "  {line}").map_err(io_err)?;
        }
    }
    writeln!(out, "dim D' = {}", derived.dim()).map_err(io_err)?;
    writeln!(out, "brackets:").map_err(io_err)?;
    let mut any = false;
    for i in 0..lie.dim {
        for j in i + 1..lie.dim {
            let c = &lie.constants[i][j];
            if c.iter().all(num_traits::Zero::is_zero) {
                continue;
            }
            any = true;
            writeln!(out, "  [D{}, D{}] = {}", i + 1, j + 1, combination(c, "D")).map_err(io_err)?;
        }
    }
    if !any {
        writeln!(out, "  all zero (abelian)").map_err(io_err)?;
    }
    Ok(EXIT_OK)
}

fn combination(coeffs: &[Scalar], sym: &str) -> String {
    let v = AlgebraElement::new(coeffs.to_vec()).to_string();
    v.replace('e', sym)
}

fn inner(e: &EvolutionAlgebra, out: &mut dyn Write) -> Result<i32> {
    let n = e.dim();
    let space = inner_derivations(e)?;
    let d = derivation_space(e);
    writeln!(out, "dim In = {}", space.dim()).map_err(io_err)?;
    for (k, m) in space.basis_matrices(n, n).iter().enumerate() {
        writeln!(out, "I{}:", k + 1).map_err(io_err)?;
        for line in describe(m) {
            writeln!(out, "  {line}").map_err(io_err)?;
        }
    }
    let ideal = d.basis_matrices(n, n).iter().all(|a| {
        space
            .basis_matrices(n, n)
            .iter()
            .all(|b| space.contains_matrix(&bracket(a, b).expect("n x n")))
    });
    writeln!(out, "ideal [D, In] ⊆ In: {}", yes_no(ideal)).map_err(io_err)?;
    Ok(if ideal { EXIT_OK } else { EXIT_MISMATCH })
}

fn decompose_cmd(e: &EvolutionAlgebra, out: &mut dyn Write) -> Result<i32> {
    let comps = decompose(e);
    if comps.len() == 1 {
        writeln!(out, "indecomposable: single block {}", basis_names(&comps[0].indices)).map_err(io_err)?;
        writeln!(out, "dim D = {}", derivation_space(e).dim()).map_err(io_err)?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "{} components", comps.len()).map_err(io_err)?;
    for c in &comps {
        writeln!(
            out,
            "  {} dim {}: {}",
            basis_names(&c.indices),
            c.algebra.dim(),
            c.algebra
        )
        .map_err(io_err)?;
    }
    let direct = derivation_space(e);
    let (order, blocks) = derivation_space_by_blocks(e)?;
    let permuted = derivation_space(&e.permuted(&order)?);
    let split = first_split_dims(e).expect("decomposable");
    writeln!(
        out,
        "dim D = {} + {} + {} + {} = {}",
        split.d_first,
        split.d_rest,
        split.hom_first_rest,
        split.hom_rest_first,
        split.total()
    )
    .map_err(io_err)?;
    let agree = blocks == permuted && split.total() == direct.dim();
    writeln!(out, "block assembly matches direct computation: {}", yes_no(agree)).map_err(io_err)?;
    Ok(if agree { EXIT_OK } else { EXIT_MISMATCH })
}

fn list(out: &mut dyn Write) -> Result<()> {
    for f in catalog::families() {
        let params = if f.param_names.is_empty() {
            String::new()
        } else {
            format!("({})", f.param_names.join(", "))
        };
        let constraints: Vec<&str> = f.constraints.iter().map(|c| c.label).collect();
        let constraints = if constraints.is_empty() {
            "none".to_string()
        } else {
            constraints.join(", ")
        };
        let sample = catalog::default_samples(f, DEFAULT_SEED).remove(0);
        let e = f.build(&sample)?;
        writeln!(
            out,
            "{}{params}  dim {}  [{}]  constraints: {constraints}\n    {e}",
            f.name, f.dim, f.table
        )
        .map_err(io_err)?;
    }
    Ok(())
}

fn verify(name: Option<&str>, params: &[String], seed: u64, out: &mut dyn Write) -> Result<i32> {
    let reports: Vec<ConformanceReport> = match name {
        None => catalog::verify_all(seed)?,
        Some(name) => {
            let spec = catalog::family(name)?;
            if params.is_empty() && spec.arity() > 0 {
                catalog::default_samples(spec, seed)
                    .iter()
                    .map(|p| catalog::verify(name, p))
                    .collect::<Result<_>>()?
            } else {
                let parsed: Vec<Scalar> = params.iter().map(|p| parse_scalar(p)).collect::<Result<_>>()?;
                vec![catalog::verify(name, &parsed)?]
            }
        }
    };
    let mut failed = 0;
    for r in &reports {
        writeln!(out, "{r}").map_err(io_err)?;
        if !r.passed() {
            failed += 1;
        }
        for c in r.disputes() {
            writeln!(
                out,
                "  note: {} {} is disputed ({}); computed value {}",
                r.family, c.field, c.expected, c.computed
            )
            .map_err(io_err)?;
        }
    }
    let mismatched_fields = reports
        .iter()
        .flat_map(|r| &r.checks)
        .filter(|c| c.status == CheckStatus::Mismatch)
        .count();
    writeln!(
        out,
        "{} reports, {} passed, {} failed ({} mismatched fields)",
        reports.len(),
        reports.len() - failed,
        failed,
        mismatched_fields
    )
    .map_err(io_err)?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_MISMATCH })
}
