//! Command-line frontend for `thompson-core`.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when the search
//! oracle exceeds its memory budget (`THOMPSON_MEM_BUDGET_MB`).

use std::io::Write;

use clap::{Parser, Subcommand};
use thompson_core::bounds::{format_birget, format_new_upper};
use thompson_core::experiments::{
    self, counterexample_product, counterexample_y, records_to_csv, verify_conjugation_identity,
};
use thompson_core::oracle::{self, MemoryBudget, DEFAULT_RADIUS};
use thompson_core::word::generator_metadata;
use thompson_core::{
    collapse_clusters, synthesize_word, CayleyBall, Element, Error, Exec, ResourceError, Word,
};

pub const BUDGET_ENV: &str = "THOMPSON_MEM_BUDGET_MB";

#[derive(Parser, Debug)]
#[command(name = "thompson", version, about = "Tree-pair diagrams for Thompson's group V")]
pub struct Cli {
    /// Run the search oracle and surveys on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the reduced diagram.
    Reduce { element: String },
    /// Product, first argument applied first.
    Mul { a: String, b: String },
    /// Inverse element.
    Inv { element: String },
    /// Whether two diagrams describe the same element.
    Eq { a: String, b: String },
    /// Caret count, cluster count and membership in F and T.
    Stats { element: String },
    /// Piecewise-affine map of the reduced diagram.
    Map { element: String },
    /// Collapse every cluster to one leaf by multiplying with F elements.
    Collapse { element: String },
    /// Exact word length by bidirectional Cayley-graph search.
    Length {
        element: String,
        #[arg(long, default_value_t = DEFAULT_RADIUS)]
        radius: usize,
    },
    /// Number of elements at each distance from the identity.
    Ball {
        #[arg(long, default_value_t = DEFAULT_RADIUS)]
        radius: usize,
    },
    /// Synthesize or evaluate words over x0, x1, c, pi.
    Word {
        #[command(subcommand)]
        action: WordAction,
    },
    /// The two upper bounds for given N and B.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        b: usize,
    },
    /// The y_n family: conjugation identity and the product P_n.
    Counterexample {
        #[arg(long)]
        n: usize,
    },
    /// CSV survey of random elements.
    Survey {
        #[arg(long)]
        count: usize,
        #[arg(long)]
        carets: usize,
        #[arg(long, default_value_t = 5)]
        radius: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Empirical metric constants over a full ball.
    Constants {
        #[arg(long, default_value_t = DEFAULT_RADIUS)]
        radius: usize,
    },
}

#[derive(Subcommand, Debug)]
enum WordAction {
    /// Word evaluating to the element.
    Synth { element: String },
    /// Element of a word such as "x0^-1 x1 pi".
    Eval { word: String },
}

enum Failure {
    Usage(String),
    Resource(ResourceError),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Resource(r) => Failure::Resource(r),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<ResourceError> for Failure {
    fn from(e: ResourceError) -> Self {
        Failure::Resource(e)
    }
}

fn element(text: &str) -> Result<Element, Failure> {
    text.parse::<Element>()
        .map_err(|e| Failure::Usage(format!("malformed element '{text}': {e}")))
}

fn budget_from(value: Option<String>) -> Result<MemoryBudget, Failure> {
    match value {
        None => Ok(MemoryBudget::default()),
        Some(v) => v
            .trim()
            .parse::<usize>()
            .map(MemoryBudget::from_megabytes)
            .map_err(|_| Failure::Usage(format!("{BUDGET_ENV} must be a whole number of megabytes, got '{v}'"))),
    }
}

fn execute(cli: Cli, out: &mut String) -> Result<(), Failure> {
    use std::fmt::Write as _;
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::default()
    };
    let budget = || budget_from(std::env::var(BUDGET_ENV).ok());

    match cli.command {
        Command::Reduce { element: e } => {
            writeln!(out, "{}", element(&e)?.reduce()).ok();
        }
        Command::Mul { a, b } => {
            writeln!(out, "{}", element(&a)?.multiply(&element(&b)?)).ok();
        }
        Command::Inv { element: e } => {
            writeln!(out, "{}", element(&e)?.reduce().inverse()).ok();
        }
        Command::Eq { a, b } => {
            writeln!(out, "{}", element(&a)?.same_element(&element(&b)?)).ok();
        }
        Command::Stats { element: e } => {
            let x = element(&e)?.reduce();
            writeln!(
                out,
                "N={} B={} inF={} inT={}",
                x.caret_count(),
                x.cluster_count(),
                x.in_f(),
                x.in_t()
            )
            .ok();
            writeln!(out, "clusters={}", x.cluster_partition()).ok();
        }
        Command::Map { element: e } => {
            let m = element(&e)?.interval_map();
            writeln!(out, "{m}").ok();
            writeln!(out, "components={}", m.graph_components()).ok();
        }
        Command::Collapse { element: e } => {
            let x = element(&e)?.reduce();
            let r = collapse_clusters(&x)?;
            writeln!(out, "y: {}", r.y).ok();
            writeln!(out, "z: {}", r.z).ok();
            writeln!(out, "collapsed: {}", r.collapsed).ok();
            writeln!(out, "y_diagram_carets: {}", r.y_diagram_carets).ok();
            writeln!(out, "z_diagram_carets: {}", r.z_diagram_carets).ok();
        }
        Command::Length { element: e, radius } => {
            let x = element(&e)?;
            let r = oracle::exact_word_length(&x, radius, budget()?, exec)?;
            match r.known() {
                Some(d) => writeln!(out, "length: {d}").ok(),
                None => writeln!(out, "length: unknown\nradius: {radius}").ok(),
            };
        }
        Command::Ball { radius } => {
            let ball = CayleyBall::build(radius, budget()?, exec)?;
            writeln!(out, "generators: {}", generator_metadata()).ok();
            for (d, n) in ball.sizes().iter().enumerate() {
                writeln!(out, "{d}: {n}").ok();
            }
            writeln!(out, "total: {}", ball.len()).ok();
        }
        Command::Word { action } => match action {
            WordAction::Synth { element: e } => {
                let w = synthesize_word(&element(&e)?);
                writeln!(out, "{w}").ok();
                writeln!(out, "length: {}", w.len()).ok();
            }
            WordAction::Eval { word } => {
                let w: Word = word
                    .parse()
                    .map_err(|e| Failure::Usage(format!("malformed word '{word}': {e}")))?;
                writeln!(out, "{}", w.evaluate()).ok();
            }
        },
        Command::Bounds { n, b } => {
            writeln!(out, "birget_upper={}", format_birget(n)).ok();
            writeln!(out, "new_upper={}", format_new_upper(n, b)?).ok();
        }
        Command::Counterexample { n } => {
            if n == 0 {
                return Err(Failure::Usage("--n must be at least 1".into()));
            }
            let y = counterexample_y(n);
            let report = verify_conjugation_identity(n);
            let (p, w) = counterexample_product(n)?;
            let (carets, clusters) = (p.caret_count(), p.cluster_count());
            writeln!(out, "y_n: {y}").ok();
            writeln!(out, "conjugation_as_written: {}", report.as_written).ok();
            writeln!(out, "conjugation_mirrored: {}", report.mirrored).ok();
            writeln!(out, "product: {p}").ok();
            writeln!(out, "product_N: {carets}").ok();
            writeln!(out, "product_B: {clusters}").ok();
            writeln!(out, "product_word_length: {}", w.len()).ok();
            writeln!(out, "product_word: {w}").ok();
            writeln!(out, "birget_upper: {}", format_birget(carets)).ok();
            writeln!(out, "new_upper: {}", format_new_upper(carets, clusters)?).ok();
        }
        Command::Survey {
            count,
            carets,
            radius,
            seed,
        } => {
            if carets == 0 {
                return Err(Failure::Usage("--carets must be at least 1".into()));
            }
            let rows = experiments::survey_bounds(count, carets, radius, seed, budget()?, exec)?;
            out.push_str(&records_to_csv(&rows));
        }
        Command::Constants { radius } => {
            let report = experiments::estimate_constants(radius, budget()?, exec)?;
            writeln!(out, "{report}").ok();
        }
    }
    Ok(())
}

/// Runs the CLI on `argv` (including the program name), writing normal output
/// to `stdout` and diagnostics to `stderr`. Returns the exit code.
pub fn run<I, S>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(rendered.as_bytes());
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let mut out = String::new();
    match execute(cli, &mut out) {
        Ok(()) => {
            let _ = stdout.write_all(out.as_bytes());
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
        Err(Failure::Resource(e)) => {
            let _ = writeln!(stderr, "resource error: {e}");
            2
        }
    }
}
