mod input;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use maslovkit::forms::witt_class;
use maslovkit::lgroups::classification_table;
use maslovkit::pauli::{apply, lagrangian_report};
use maslovkit::presets::{preset, Preset, PRESETS};
use maslovkit::realmaslov::{real_maslov, RealPolynomial};
use maslovkit::sturm::{loop_from_pair, maslov_index, validate_loop};
use maslovkit::wire::{self, FormJson, GateJson, LoopJson, StabilizerJson};
use maslovkit::{Error, Result};
use serde_json::{json, Value};

use render::Output;

/// Largest `--d` accepted by `lgroup table`.
const MAX_TABLE_DIM: u32 = 16;

#[derive(Parser)]
#[command(
    name = "maslovkit",
    version,
    about = "Maslov indices and loops of Clifford QCA over F_p"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Witt classes of forms over F_p.
    #[command(subcommand)]
    Witt(WittCmd),
    /// Maslov indices of loops.
    #[command(subcommand)]
    Maslov(MaslovCmd),
    /// Lagrangian tests on stabilizer modules.
    #[command(subcommand)]
    Lagrangian(LagrangianCmd),
    /// Clifford circuits acting on stabilizer modules.
    #[command(subcommand)]
    Qca(QcaCmd),
    /// L-groups and the loop classification table.
    #[command(subcommand)]
    Lgroup(LgroupCmd),
    /// Shipped fixtures.
    #[command(subcommand)]
    Preset(PresetCmd),
}

#[derive(Subcommand)]
enum WittCmd {
    Classify {
        #[arg(long)]
        form: String,
    },
}

#[derive(Subcommand)]
enum MaslovCmd {
    Compute {
        #[arg(long = "loop")]
        lp: String,
    },
    Pair {
        #[arg(long)]
        q0: String,
        #[arg(long)]
        q1: String,
    },
    Real {
        #[arg(long, conflicts_with = "preset", required_unless_present = "preset")]
        poly: Option<String>,
        #[arg(long)]
        preset: Option<String>,
    },
}

#[derive(Subcommand)]
enum LagrangianCmd {
    Check {
        #[arg(long)]
        module: String,
    },
}

#[derive(Subcommand)]
enum QcaCmd {
    Apply {
        #[arg(long)]
        circuit: String,
        #[arg(long)]
        module: String,
    },
}

#[derive(Subcommand)]
enum LgroupCmd {
    Table {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 4)]
        d: u32,
    },
}

#[derive(Subcommand)]
enum PresetCmd {
    List,
    Show { name: String },
}

fn form_arg(arg: &str, field: Option<&str>) -> Result<maslovkit::forms::HermitianForm> {
    let j: FormJson = input::decode(input::resolve(arg, field)?, "form")?;
    wire::form_from_json(&j, None)
}

fn module_arg(arg: &str) -> Result<maslovkit::pauli::StabilizerModule> {
    let j: StabilizerJson = input::decode(input::resolve(arg, None)?, "stabilizer module")?;
    wire::stabilizer_from_json(&j)
}

fn run(cmd: Command) -> Result<Output> {
    match cmd {
        Command::Witt(WittCmd::Classify { form }) => {
            let w = witt_class(&form_arg(&form, None)?)?;
            Ok(render::witt(&w))
        }
        Command::Maslov(MaslovCmd::Compute { lp }) => {
            let j: LoopJson = input::decode(input::resolve(&lp, None)?, "loop")?;
            let lp = validate_loop(&wire::sturm_from_json(&j)?)?;
            Ok(render::maslov(&maslov_index(&lp)?))
        }
        Command::Maslov(MaslovCmd::Pair { q0, q1 }) => {
            let (q0, q1) = (form_arg(&q0, Some("q0"))?, form_arg(&q1, Some("q1"))?);
            let lp = loop_from_pair(&q0, &q1)?;
            Ok(render::pair(&lp, &maslov_index(&lp)?))
        }
        Command::Maslov(MaslovCmd::Real { poly, preset: name }) => {
            let p = match (poly, name) {
                (Some(list), _) => RealPolynomial::new(input::coefficients(&list)?)?,
                (None, Some(name)) => match preset(&name)? {
                    Preset::Real(p) => p,
                    other => {
                        return Err(Error::Parse(format!(
                            "preset {name:?} is a {}, not a polynomial",
                            other.kind()
                        )))
                    }
                },
                (None, None) => unreachable!("clap requires one of --poly, --preset"),
            };
            let index = real_maslov(&p)?;
            Ok(Output::new(json!(index), index.to_string()))
        }
        Command::Lagrangian(LagrangianCmd::Check { module }) => {
            Ok(render::report(&lagrangian_report(&module_arg(&module)?)?))
        }
        Command::Qca(QcaCmd::Apply { circuit, module }) => {
            let gates: Vec<GateJson> = input::decode(input::resolve(&circuit, None)?, "circuit")?;
            let circuit = wire::circuit_from_json(&gates)?;
            let s = module_arg(&module)?;
            let u = circuit.unitary(s.ambient())?;
            Ok(render::stabilizer(&apply(&u, &s)?))
        }
        Command::Lgroup(LgroupCmd::Table { p, d }) => {
            if d > MAX_TABLE_DIM {
                return Err(Error::Domain(format!("--d is capped at {MAX_TABLE_DIM}")));
            }
            Ok(render::table(&classification_table(p, d)?))
        }
        Command::Preset(PresetCmd::List) => Ok(render::preset_list(
            PRESETS
                .iter()
                .map(|(name, desc)| Ok((*name, preset(name)?.kind(), *desc)))
                .collect::<Result<Vec<_>>>()?,
        )),
        Command::Preset(PresetCmd::Show { name }) => {
            let v: Value = preset(&name)?.to_json();
            Ok(Output::json_only(v))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::UnsupportedRing(_) | Error::Unsupported(_) => 3,
        Error::InternalInvariantViolation(_) => 1,
        _ => 2,
    }
}

fn fail(code: &str, detail: String, exit: u8) -> ExitCode {
    eprintln!("{}", json!({ "error": code, "detail": detail }));
    ExitCode::from(exit)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let detail = e.render().to_string();
            return fail("usage", detail.trim().to_string(), 2);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            let body = match cli.format {
                Format::Json => out.json_text(),
                Format::Text => out.text(render::color_enabled()),
            };
            // a closed pipe downstream is not our failure
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            ExitCode::SUCCESS
        }
        Err(e) => fail(e.code(), e.to_string(), exit_code(&e)),
    }
}
