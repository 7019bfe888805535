use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use hypercrit::certify::{emit_bundle, generate_bundle_jobs, parse_bundle, verify_bundle};
use hypercrit::color::chromatic_number;
use hypercrit::corpus::{fixture, fixtures};
use hypercrit::report::{
    render_bollobas, render_report, render_seed, render_verdicts, render_verification,
    run_bollobas, run_report, seed_check, Format, ReportMode,
};
use hypercrit::transversal::transversal_number;
use hypercrit::{emit_edge_list, parse_edge_list, Error, Hypergraph, VertexSet};

#[derive(Parser)]
#[command(
    name = "hypercrit",
    version,
    about = "Criticality and counting checks for small uniform hypergraphs"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Worker threads for deletion scans. Results never depend on this.
    #[arg(long, global = true, default_value_t = 1, value_name = "N")]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Chromatic,
    Transversal,
    Full,
}

impl From<Mode> for ReportMode {
    fn from(m: Mode) -> ReportMode {
        match m {
            Mode::Chromatic => ReportMode::Chromatic,
            Mode::Transversal => ReportMode::Transversal,
            Mode::Full => ReportMode::Full,
        }
    }
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["input", "builtin"])))]
struct InputArgs {
    /// Read the hypergraph from an edge-list file.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Use a built-in instance: h9, k5_3, or fano.
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,
}

fn lookup_builtin(name: &str) -> Result<Hypergraph, String> {
    fixture(name).map(|f| f.hypergraph).ok_or_else(|| {
        let names: Vec<&str> = fixtures().iter().map(|f| f.name).collect();
        format!("unknown builtin '{name}' (available: {})", names.join(", "))
    })
}

impl InputArgs {
    fn load(&self) -> Result<Hypergraph, String> {
        if let Some(path) = &self.input {
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            parse_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))
        } else {
            let name = self
                .builtin
                .as_deref()
                .expect("arg group requires a source");
            lookup_builtin(name)
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic number and a witness colouring.
    Chi(InputArgs),
    /// Transversal number and a witness transversal.
    Tau(InputArgs),
    /// Criticality verdicts only.
    Critical {
        #[command(flatten)]
        input: InputArgs,

        /// Which criticality notions to decide.
        #[arg(long, value_enum, default_value_t = Mode::Full)]
        mode: Mode,
    },
    /// Generate or verify deletion-certificate bundles.
    #[command(subcommand)]
    Cert(CertCommand),
    /// Extract the set-pair system and audit the counting bound.
    Bollobas(InputArgs),
    /// Print a built-in instance as an edge list.
    Builtin {
        /// One of: h9, k5_3, fano.
        name: String,
    },
    /// Run the check pipeline and print the full report.
    Report {
        #[command(flatten)]
        input: InputArgs,

        /// Which half of the pipeline to run.
        #[arg(long, value_enum, default_value_t = Mode::Full)]
        mode: Mode,

        /// Also confirm the shipped golden data against the built-in
        /// nine-vertex instance.
        #[arg(long)]
        seed_check: bool,
    },
}

#[derive(Subcommand)]
enum CertCommand {
    /// Compute all deletion certificates of a critically 3-chromatic input.
    Generate {
        #[command(flatten)]
        input: InputArgs,

        /// Write the bundle to a file instead of stdout.
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Replay a certificate bundle against the input.
    Verify {
        #[command(flatten)]
        input: InputArgs,

        /// Bundle file to check.
        #[arg(long, value_name = "FILE")]
        bundle: PathBuf,
    },
}

/// Ok(true) for a clean pass, Ok(false) for a false verdict, Err for
/// input or usage trouble.
fn run(cli: &Cli) -> Result<bool, String> {
    let format = match cli.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Tsv => Format::Tsv,
    };
    match &cli.command {
        Command::Chi(input) => {
            let h = input.load()?;
            let (chi, coloring) = chromatic_number(&h).map_err(|e| e.to_string())?;
            let mut classes: BTreeMap<usize, VertexSet> = BTreeMap::new();
            for (&v, &c) in coloring.assignment() {
                let class = classes.entry(c).or_insert(VertexSet::EMPTY);
                *class = class.with(v);
            }
            match format {
                Format::Text => {
                    println!("chi: {chi}");
                    for (c, class) in &classes {
                        println!("class {c}: {class}");
                    }
                }
                Format::Tsv => {
                    println!("chi\t{chi}");
                    for (c, class) in &classes {
                        println!("chi.class.{c}\t{class}");
                    }
                }
            }
            Ok(true)
        }
        Command::Tau(input) => {
            let h = input.load()?;
            let (tau, witness) = transversal_number(&h);
            match format {
                Format::Text => println!("tau: {tau}\nwitness: {witness}"),
                Format::Tsv => println!("tau\t{tau}\ntau.witness\t{witness}"),
            }
            Ok(true)
        }
        Command::Critical { input, mode } => {
            let h = input.load()?;
            let outcome = run_report(&h, (*mode).into(), cli.jobs).map_err(|e| e.to_string())?;
            print!("{}", render_verdicts(&outcome, format));
            Ok(outcome.pass)
        }
        Command::Cert(CertCommand::Generate { input, output }) => {
            let h = input.load()?;
            match generate_bundle_jobs(&h, cli.jobs) {
                Ok(bundle) => {
                    let text = emit_bundle(&bundle);
                    match output {
                        Some(path) => fs::write(path, &text)
                            .map_err(|e| format!("{}: {e}", path.display()))?,
                        None => print!("{text}"),
                    }
                    Ok(true)
                }
                Err(Error::NotChromaticCritical) => {
                    eprintln!("input is not critically 3-chromatic; no bundle to generate");
                    Ok(false)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Cert(CertCommand::Verify { input, bundle }) => {
            let h = input.load()?;
            let text =
                fs::read_to_string(bundle).map_err(|e| format!("{}: {e}", bundle.display()))?;
            let parsed = parse_bundle(&text).map_err(|e| format!("{}: {e}", bundle.display()))?;
            let verification = verify_bundle(&h, &parsed);
            print!("{}", render_verification(&verification, format));
            Ok(verification.pass)
        }
        Command::Bollobas(input) => {
            let h = input.load()?;
            match run_bollobas(&h) {
                Ok(r) => {
                    print!("{}", render_bollobas(&r, format));
                    Ok(r.pass)
                }
                Err(Error::NotTauCritical(t)) => {
                    eprintln!("input is not transversal-critical of order {t}; nothing to extract");
                    Ok(false)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Builtin { name } => {
            let h = lookup_builtin(name)?;
            print!("{}", emit_edge_list(&h));
            Ok(true)
        }
        Command::Report {
            input,
            mode,
            seed_check: with_seed,
        } => {
            let h = input.load()?;
            let outcome = run_report(&h, (*mode).into(), cli.jobs).map_err(|e| e.to_string())?;
            print!("{}", render_report(&outcome, format));
            let mut pass = outcome.pass;
            if *with_seed {
                let s = seed_check();
                print!("{}", render_seed(&s, format));
                pass = pass && s.pass;
            }
            Ok(pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
