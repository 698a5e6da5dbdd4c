use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cubix::custom::load_custom;
use cubix::error::{CliError, Result};
use cubix::family::{compute, Family, GroupArg, ModeArg, ModuleArg, Request};
use cubix::info::ModuleInfo;
use cubix::report::{render, Format};
use cubix::suites::{run, Suite};
use cubix_core::cubical::DEFAULT_NAIVE_CAP;
use cubix_core::modules::{BuiltinKind, ModuleSpec};

#[derive(Parser)]
#[command(name = "cubix", version, about = "Cohomology of cubical complexes M ⊗_G C(A)^(1..1)")]
struct Cli {
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Betti table of a family for one n or for n = 1..=nmax.
    Betti(BettiArgs),
    /// Run a verification suite; exit 1 if any check fails.
    Verify(VerifyArgs),
    /// Describe a module: basis, generators, characters, sign multiplicity.
    ModuleInfo(InfoArgs),
}

#[derive(Args)]
struct BettiArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Custom module JSON (for `custom`, and optionally `harrison`).
    #[arg(long)]
    custom: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    nmax: Option<usize>,
    /// Last degree with a Betti number (default N + 2).
    #[arg(long)]
    mmax: Option<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::Orbit)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Dimension cap of the naive engine.
    #[arg(long, env = "CUBIX_CAP", default_value_t = DEFAULT_NAIVE_CAP)]
    cap: usize,
    /// Module for `--family harrison`.
    #[arg(long, value_enum, default_value_t = ModuleArg::Trivial)]
    module: ModuleArg,
    /// Group for `custom` and `harrison`.
    #[arg(long, value_enum, default_value_t = GroupArg::Symmetric)]
    group: GroupArg,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    #[arg(long, default_value_t = 4)]
    nmax: usize,
}

#[derive(Args)]
struct InfoArgs {
    #[arg(long, value_enum)]
    family: Option<Family>,
    #[arg(long, value_enum)]
    module: Option<ModuleArg>,
    #[arg(long)]
    custom: Option<PathBuf>,
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

fn betti(args: BettiArgs) -> Result<String> {
    let custom = args.custom.as_deref().map(load_custom).transpose()?;
    let ns: Vec<usize> = match (args.n, args.nmax, &custom) {
        (None, None, Some(m)) => vec![m.arity()],
        (Some(n), None, _) => vec![n],
        (None, Some(nmax), None) => (1..=nmax).collect(),
        (None, Some(_), Some(_)) => return Err(CliError::Input("--nmax does not apply to a custom module".into())),
        _ => return Err(CliError::Input("give exactly one of --n and --nmax".into())),
    };
    if ns.is_empty() {
        return Err(CliError::Input("n must be at least 1".into()));
    }
    let tables = ns
        .iter()
        .map(|&n| {
            let n = custom.as_ref().map_or(n, |m| m.arity());
            compute(&Request {
                custom: custom.clone(),
                module: args.module,
                group: args.group,
                m_max: args.mmax,
                mode: args.mode.into(),
                cap: args.cap,
                ..Request::new(args.family, n)
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(render(&tables, args.format))
}

fn verify(args: VerifyArgs) -> Result<String> {
    if args.nmax == 0 {
        return Err(CliError::Input("nmax must be at least 1".into()));
    }
    let summary = run(args.suite, args.nmax);
    let mut out: Vec<String> = summary.checks.iter().map(|c| c.line()).collect();
    out.push(format!("{} passed, {} failed", summary.passed, summary.failed));
    out.push(serde_json::to_string(&summary)?);
    let text = out.join("\n") + "\n";
    if summary.all_pass() {
        Ok(text)
    } else {
        print!("{text}");
        Err(CliError::Verification(format!("{} of {} checks failed", summary.failed, summary.checks.len())))
    }
}

fn module_info(args: InfoArgs) -> Result<String> {
    let module = match (&args.custom, args.family, args.module) {
        (Some(path), None, None) => load_custom(path)?,
        (None, Some(family), None) => {
            let kind = family
                .builtin()
                .ok_or_else(|| CliError::Input(format!("family `{}` has no single module", family.name())))?;
            ModuleSpec::builtin(kind, args.n)?
        }
        (None, None, Some(kind)) => ModuleSpec::builtin(BuiltinKind::from(kind), args.n)?,
        _ => return Err(CliError::Input("give exactly one of --family, --module and --custom".into())),
    };
    let info = ModuleInfo::new(&module)?;
    Ok(match args.format {
        Format::Json => serde_json::to_string_pretty(&info)? + "\n",
        Format::Csv => return Err(CliError::Input("module-info supports json and table output".into())),
        Format::Table => info.to_text(),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().expect("thread pool configured once");
    }
    let result = match cli.command {
        Command::Betti(a) => betti(a),
        Command::Verify(a) => verify(a),
        Command::ModuleInfo(a) => module_info(a),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
