use std::fs::File;
use std::io::BufWriter;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};

use lefschetz::algebra::algebra_from_dual;
use lefschetz::family::{dual_generator, FamilyParams};
use lefschetz::harness::report::{algebra_info, render_apery, render_info, render_wlp};
use lefschetz::harness::sweep::{run_sweep, write_csv, Range, SweepSpec, DEFAULT_MAX_BOUND};
use lefschetz::harness::verify::verify_all;
use lefschetz::poly::LinearForm;
use lefschetz::semigroup::{apery_data, SemigroupSpec};
use lefschetz::wlp::{wlp_check, Method, Verdict, WlpOptions};
use lefschetz::Error;

const SOFT_LIMIT: Duration = Duration::from_secs(600);

#[derive(Parser)]
#[command(name = "lefschetz", version, about = "Weak Lefschetz checks for a family of Gorenstein algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct ParamArgs {
    a: u32,
    b: u32,
    c: u32,
    alpha: u32,
    beta: u32,
    gamma: u32,
}

impl ParamArgs {
    fn params(&self) -> Result<FamilyParams, Error> {
        FamilyParams::new(self.a, self.b, self.c, self.alpha, self.beta, self.gamma)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Apery set, orders and M-pure symmetry of a 4-generated semigroup.
    Apery {
        #[arg(num_args = 4, required = true, allow_negative_numbers = true)]
        generators: Vec<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Structure of one family member.
    Algebra {
        #[command(subcommand)]
        command: AlgebraCommand,
    },
    /// Decide the weak Lefschetz property for one family member.
    Wlp {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value = "both")]
        method: Method,
        /// Coefficients of a linear form to test, e.g. `1 -1 1`.
        #[arg(long, num_args = 3, allow_negative_numbers = true, value_names = ["C1", "C2", "C3"])]
        linear_form: Option<Vec<String>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Run every valid parameter point in a box.
    Sweep {
        #[arg(long, default_value = "2:12")]
        a: Range,
        #[arg(long, default_value = "2:12")]
        b: Range,
        #[arg(long, default_value = "2:12")]
        c: Range,
        /// Keep points whose smallest exponent equals this value.
        #[arg(long)]
        min_eq: Option<u32>,
        /// Keep points with a >= c.
        #[arg(long)]
        a_ge_c: bool,
        #[arg(long, default_value = "both")]
        method: Method,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_BOUND)]
        max_bound: u32,
        #[arg(long)]
        csv: Option<std::path::PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Run the full verification suite.
    VerifyPaper {
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum AlgebraCommand {
    /// Generators, dual generator, Hilbert function and resolution shifts.
    Info {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        json: bool,
    },
}

fn invalid(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(2)
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn cmd_apery(generators: &[i64], json: bool) -> ExitCode {
    let mut g = [0u64; 4];
    for (slot, &v) in g.iter_mut().zip(generators) {
        match u64::try_from(v) {
            Ok(u) => *slot = u,
            Err(_) => return invalid(Error::NegativeInput(v)),
        }
    }
    let s = match SemigroupSpec::new(g) {
        Ok(s) => s,
        Err(e) => return invalid(e),
    };
    let redundant = s.redundant_generators();
    if !redundant.is_empty() {
        eprintln!("warning: generators {redundant:?} are not minimal");
    }
    let d = apery_data(&s);
    if json {
        println!("{}", to_json(&d));
    } else {
        print!("{}", render_apery(&d));
    }
    ExitCode::SUCCESS
}

fn cmd_info(p: &ParamArgs, json: bool) -> ExitCode {
    let p = match p.params() {
        Ok(p) => p,
        Err(e) => return invalid(e),
    };
    let info = algebra_info(&p);
    if json {
        println!("{}", to_json(&info));
    } else {
        print!("{}", render_info(&info));
    }
    if info.hilbert_agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_wlp(p: &ParamArgs, method: Method, form: Option<&[String]>, seed: u64, json: bool) -> ExitCode {
    let p = match p.params() {
        Ok(p) => p,
        Err(e) => return invalid(e),
    };
    let linear_form = match form.map(|f| f.join(" ").parse::<LinearForm>()).transpose() {
        Ok(l) => l,
        Err(e) => return invalid(e),
    };
    let view = match algebra_from_dual(&dual_generator(&p)) {
        Ok(v) => v,
        Err(e) => return invalid(e),
    };
    let report = match wlp_check(&view, Some(p), &WlpOptions { method, linear_form, seed }) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", render_wlp(&report));
    }
    if report.oracles_agree == Some(false) {
        eprintln!("error: the oracles disagree");
        return ExitCode::from(1);
    }
    match report.verdict {
        Verdict::HasWlp => ExitCode::SUCCESS,
        Verdict::NoWlp => ExitCode::from(1),
    }
}

fn cmd_sweep(spec: &SweepSpec, csv: Option<&std::path::Path>, json: bool) -> ExitCode {
    if let Err(e) = spec.validate() {
        return invalid(e);
    }
    let (rows, summary) = match run_sweep(spec) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    if let Some(path) = csv {
        let written = File::create(path)
            .map_err(|e| Error::Spec(format!("{}: {e}", path.display())))
            .and_then(|f| write_csv(&rows, BufWriter::new(f)));
        if let Err(e) = written {
            return invalid(e);
        }
    }
    if json {
        println!("{}", to_json(&serde_json::json!({ "rows": rows, "summary": summary })));
    } else {
        print!("{summary}");
    }
    if summary.passed() {
        ExitCode::SUCCESS
    } else {
        eprintln!("error: sweep assertions failed");
        ExitCode::from(1)
    }
}

fn cmd_verify(seed: u64) -> ExitCode {
    let start = Instant::now();
    let report = verify_all(seed);
    print!("{report}");
    if start.elapsed() > SOFT_LIMIT {
        eprintln!("warning: suite took {:.0?}, above the {:?} target", start.elapsed(), SOFT_LIMIT);
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Apery { generators, json } => cmd_apery(&generators, json),
        Command::Algebra { command: AlgebraCommand::Info { params, json } } => cmd_info(&params, json),
        Command::Wlp { params, method, linear_form, seed, json } => {
            cmd_wlp(&params, method, linear_form.as_deref(), seed, json)
        }
        Command::Sweep { a, b, c, min_eq, a_ge_c, method, seed, max_bound, csv, json } => {
            let spec = SweepSpec { a, b, c, min_eq, a_ge_c, method, seed, max_bound };
            cmd_sweep(&spec, csv.as_deref(), json)
        }
        Command::VerifyPaper { seed } => cmd_verify(seed),
    }
}
