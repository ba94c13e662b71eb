use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quiver_hl::algebra::{LaurentPoly, Partition, VarId};
use quiver_hl::catabolism::{catabolism_table, catabolizable_tableaux, DEFAULT_ORDER};
use quiver_hl::hl::{collapse_all_arrows, collapse_cycle, hl_function, KostantOracle};
use quiver_hl::quiver::{
    parse_spec, random_dominant_sequence, random_sequence, to_spec_json, CurrentSequence, Quiver, RandomLimits,
    VertexWeights,
};
use quiver_hl::shuffle::{chi_truncated_schur, psi_class, schur_coefficient};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

mod compare;
mod format;

use compare::{check, nonbranching, shapes, shrink};
use format::{parse_shape, poly_json, shape_key, variable_names, variables};

/// Quiver Hall-Littlewood functions and Kostka-Shoji polynomials.
#[derive(Parser)]
#[command(name = "quiver-hl", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// One Kostka-Shoji polynomial.
    Compute {
        #[command(flatten)]
        input: Input,
        /// Shape tuple such as `6,3,3,1,1/-`.
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Method::Operator)]
        method: Method,
        /// Arrow-degree cap for `--method series`.
        #[arg(long, default_value_t = 6)]
        truncate: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Every shape tuple of the right size within the row bounds.
    Table {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Method::Operator)]
        method: Method,
        #[arg(long, default_value_t = 6)]
        truncate: u32,
        #[command(flatten)]
        output: Output,
    },
    /// The catabolizable multitableaux of one shape, with their weights.
    Catabolism {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        lambda: String,
        #[command(flatten)]
        output: Output,
    },
    /// The psi-class of the current data.
    ShufflePsi {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Operator engine against the Kostant oracle, and catabolism where it applies.
    Compare {
        /// Spec file; with `--trials` only its quiver is used.
        #[arg(long)]
        spec: Option<PathBuf>,
        /// Number of random instances (over the spec's quiver, or over the
        /// Jordan, A2, 2-cycle and 3-cycle quivers in turn).
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct Input {
    /// Quiver and current sequence as JSON.
    #[arg(long)]
    spec: PathBuf,
}

#[derive(Args)]
struct Output {
    /// Collapse arrow variables to one parameter `t` (the cycle parameter on
    /// a cyclic quiver).
    #[arg(long)]
    collapse_t: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Operator,
    Kostant,
    Catabolism,
    /// Truncated series through the shuffle product.
    Series,
}

enum Failure {
    Invalid(String),
    Disagreement(String),
    Probe(String),
}

impl From<quiver_hl::Error> for Failure {
    fn from(e: quiver_hl::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

type Run<T = ()> = Result<T, Failure>;

fn load(path: &PathBuf) -> Run<CurrentSequence> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    parse_spec(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn collapse_map(q: &Quiver) -> HashMap<VarId, LaurentPoly> {
    collapse_cycle(q).unwrap_or_else(|_| collapse_all_arrows(q))
}

fn finish(p: LaurentPoly, q: &Quiver, out: &Output) -> Run<LaurentPoly> {
    if out.collapse_t {
        Ok(p.substitute(&collapse_map(q))?)
    } else {
        Ok(p)
    }
}

/// Coefficients of one method over a list of shapes.
fn coefficients(cs: &CurrentSequence, shapes: &[Vec<Partition>], method: Method, cap: u32) -> Run<Vec<LaurentPoly>> {
    let dims = cs.dimension_vector();
    Ok(match method {
        Method::Operator => {
            let f = hl_function(cs)?;
            shapes.iter().map(|l| f.coefficient(l)).collect()
        }
        Method::Kostant => {
            let oracle = KostantOracle::new(cs);
            shapes
                .iter()
                .map(|l| match VertexWeights::from_partitions(l, &dims) {
                    Some(w) => oracle.coefficient(&w),
                    None => Ok(LaurentPoly::zero()),
                })
                .collect::<Result<_, _>>()?
        }
        Method::Catabolism => {
            let table = catabolism_table(cs, DEFAULT_ORDER)?;
            shapes.iter().map(|l| table.get(l).cloned().unwrap_or_else(LaurentPoly::zero)).collect()
        }
        Method::Series => {
            let table = chi_truncated_schur(cs, cap)?;
            shapes.iter().map(|l| schur_coefficient(&table, l, &dims)).collect()
        }
    })
}

/// Positivity under dominance, checked on whatever a command printed.
fn probe_positivity(cs: &CurrentSequence, rows: &[(Vec<Partition>, LaurentPoly)]) -> Run {
    if !cs.is_ia_dominant() {
        return Ok(());
    }
    for (l, p) in rows {
        if !p.is_nonnegative() {
            return Err(Failure::Probe(format!(
                "negative coefficient on a dominant instance at {}: {p}\ninstance: {}",
                shape_key(l),
                to_spec_json(cs)
            )));
        }
    }
    Ok(())
}

fn print_rows(rows: &[(Vec<Partition>, LaurentPoly)], json: bool) {
    if json {
        let vars = variables(rows.iter().map(|(_, p)| p));
        let mut polys = Map::new();
        for (l, p) in rows {
            polys.insert(shape_key(l), poly_json(p, &vars));
        }
        println!("{}", json!({ "variables": variable_names(&vars), "polynomials": polys }));
    } else {
        for (l, p) in rows {
            println!("{}: {p}", shape_key(l));
        }
    }
}

fn compute(cs: &CurrentSequence, lambda: &str, method: Method, cap: u32, out: &Output) -> Run {
    let lambda = parse_shape(lambda, cs.quiver().vertex_count()).map_err(Failure::Invalid)?;
    let size: i64 = lambda.iter().map(|p| p.size() as i64).sum();
    let p = if size != cs.total_size() {
        LaurentPoly::zero()
    } else {
        coefficients(cs, std::slice::from_ref(&lambda), method, cap)?.remove(0)
    };
    let p = finish(p, cs.quiver(), out)?;
    let rows = [(lambda, p)];
    if out.json {
        print_rows(&rows, true);
    } else {
        println!("{}", rows[0].1);
    }
    probe_positivity(cs, &rows)
}

fn table(cs: &CurrentSequence, method: Method, cap: u32, out: &Output) -> Run {
    let shapes = shapes(cs);
    let values = coefficients(cs, &shapes, method, cap)?;
    let rows = shapes
        .into_iter()
        .zip(values)
        .map(|(l, p)| Ok((l, finish(p, cs.quiver(), out)?)))
        .collect::<Run<Vec<_>>>()?;
    print_rows(&rows, out.json);
    probe_positivity(cs, &rows)
}

fn catabolism(cs: &CurrentSequence, lambda: &str, out: &Output) -> Run {
    let lambda = parse_shape(lambda, cs.quiver().vertex_count()).map_err(Failure::Invalid)?;
    let found = catabolizable_tableaux(cs, &lambda, DEFAULT_ORDER)?;
    let mut total = LaurentPoly::zero();
    let mut weighted = Vec::new();
    for (t, m) in found {
        let w = finish(LaurentPoly::monomial(m), cs.quiver(), out)?;
        total += &w;
        weighted.push((t, w));
    }
    if out.json {
        let vars = variables(weighted.iter().map(|(_, w)| w).chain([&total]));
        let list: Vec<Value> = weighted
            .iter()
            .map(|(t, w)| json!({ "tableau": t.dump(), "weight": poly_json(w, &vars) }))
            .collect();
        println!("{}", json!({ "variables": variable_names(&vars), "tableaux": list, "total": poly_json(&total, &vars) }));
    } else {
        let mut text = String::new();
        for (t, w) in &weighted {
            let _ = writeln!(text, "{}\nweight: {w}\n", t.dump());
        }
        let _ = writeln!(text, "total: {total}");
        print!("{text}");
    }
    Ok(())
}

fn shuffle_psi(cs: &CurrentSequence, out: &Output) -> Run {
    let p = finish(psi_class(cs)?.into_poly(), cs.quiver(), out)?;
    if out.json {
        let vars = variables([&p]);
        println!("{}", json!({ "variables": variable_names(&vars), "psi": poly_json(&p, &vars) }));
    } else {
        println!("{p}");
    }
    Ok(())
}

/// Runs the cross-check on one instance; failures are shrunk first.
fn compare_one(cs: &CurrentSequence, label: &str, per_shape: bool) -> Run {
    let report = check(cs)?;
    if let Some(found) = report.finding {
        let disagreement = found.is_disagreement();
        let (small, finding) = shrink(cs, disagreement);
        let msg = format!(
            "{label}: {}\ninstance: {}\nreproducer: {}\n{}",
            found.describe(),
            to_spec_json(cs),
            to_spec_json(&small),
            finding.describe()
        );
        return Err(if disagreement { Failure::Disagreement(msg) } else { Failure::Probe(msg) });
    }
    let methods = if report.with_catabolism { "operator, kostant, catabolism" } else { "operator, kostant" };
    if per_shape {
        for l in &report.shapes {
            println!("{}: agree", shape_key(l));
        }
    } else {
        println!("{label}: {n} of {n} shape tuples agree ({methods})", n = report.shapes.len());
    }
    Ok(())
}

fn compare(spec: Option<&PathBuf>, trials: Option<usize>, seed: u64) -> Run {
    let given = spec.map(load).transpose()?;
    match (given, trials) {
        (Some(cs), None) => compare_one(&cs, "spec", true)?,
        (given, trials) => {
            let quivers = match &given {
                Some(cs) => vec![cs.quiver().clone()],
                None => vec![Quiver::jordan(), Quiver::path(2), Quiver::cycle(2), Quiver::cycle(3)],
            };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let limits = RandomLimits::default();
            for n in 0..trials.unwrap_or(50) {
                let q = &quivers[n % quivers.len()];
                // Every other draw is pushed toward dominant data, where the
                // catabolism and positivity probes apply.
                let cs = if n % 2 == 1 {
                    random_dominant_sequence(&mut rng, q, limits, 100).unwrap_or_else(|| random_sequence(&mut rng, q, limits))
                } else {
                    random_sequence(&mut rng, q, limits)
                };
                compare_one(&cs, &format!("trial {}", n + 1), false)?;
            }
        }
    }
    println!("all methods agree");
    Ok(())
}

fn run(cli: Cli) -> Run {
    match cli.command {
        Command::Compute { input, lambda, method, truncate, output } => {
            let cs = load(&input.spec)?;
            if method == Method::Catabolism && !nonbranching(&cs) {
                // Let the library name the branching vertex.
                catabolism_table(&cs, DEFAULT_ORDER)?;
            }
            compute(&cs, &lambda, method, truncate, &output)
        }
        Command::Table { input, method, truncate, output } => table(&load(&input.spec)?, method, truncate, &output),
        Command::Catabolism { input, lambda, output } => catabolism(&load(&input.spec)?, &lambda, &output),
        Command::ShufflePsi { input, output } => shuffle_psi(&load(&input.spec)?, &output),
        Command::Compare { spec, trials, seed } => compare(spec.as_ref(), trials, seed),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Disagreement(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(3)
        }
        Err(Failure::Probe(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(4)
        }
    }
}
