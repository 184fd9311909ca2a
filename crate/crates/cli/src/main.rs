use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use qautm::groebner::{buchberger, stabilize, GbFile, GbStatus};
use qautm::matroid::{
    decode_revlex, encode_revlex, iso_catalog, parse_subset, GroundSet, Matroid, RevlexCode,
};
use qautm::quantum::{quantum_aut_spec, Axioms};
use qautm::strong_maps::{hom_counts, Catalog};
use qautm::Rational;
use qautm_cli::batch::{render, run_batch};
use qautm_cli::{
    evaluate, partition, read_fixtures, CliError, FixtureRow, ResultRow, RunConfig, TableKind,
};

#[derive(Parser)]
#[command(
    name = "qautm",
    version,
    about = "Quantum automorphism ideals of matroids and their Gröbner bases"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Comma separated list of bases, circuits, flats, independent.
    #[arg(long, value_delimiter = ',')]
    axioms: Option<Vec<Axioms>>,
    /// Discard obstructions above this degree.
    #[arg(long)]
    degree_bound: Option<usize>,
    /// Seconds per Gröbner basis run.
    #[arg(long, default_value_t = 600.0)]
    time_budget: f64,
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Always run the Gröbner basis instead of applying known theorems.
    #[arg(long)]
    no_shortcuts: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Common {
    fn config(&self, default_axioms: &[Axioms]) -> Result<RunConfig, CliError> {
        if !(self.time_budget.is_finite() && self.time_budget > 0.0) {
            return Err(CliError::Invalid(format!(
                "bad time budget {}",
                self.time_budget
            )));
        }
        Ok(RunConfig {
            degree_bound: self.degree_bound,
            time_budget: Duration::from_secs_f64(self.time_budget),
            threads: self.threads,
            shortcuts: !self.no_shortcuts,
            output_path: self.out.clone(),
            axioms: self
                .axioms
                .clone()
                .unwrap_or_else(|| default_axioms.to_vec()),
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the bases and nonbases of a revlex code.
    Decode { hex: String, n: usize, r: usize },
    /// Print the revlex code of the bases listed in a file, one subset per line.
    Encode {
        file: PathBuf,
        /// Ground set size; defaults to the largest label.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Compute a Gröbner basis of the quantum automorphism ideal.
    Gb {
        hex: String,
        n: usize,
        r: usize,
        /// Compare truncations at D-1 and 2D-2 instead of running to completion.
        #[arg(long, value_name = "D")]
        stabilize: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Decide whether the quantum automorphism group is commutative.
    Commute {
        hex: String,
        n: usize,
        r: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Classify every matroid up to a size into the four verdict tables.
    Tables {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Reference rows to compare against, and the source of extended runs.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Also run the fixture rows larger than max-n, under the time budget.
        #[arg(long)]
        extended: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Count strong maps between two matroids.
    Hom {
        hex1: String,
        n1: usize,
        r1: usize,
        hex2: String,
        n2: usize,
        r2: usize,
    },
}

fn decode(hex: &str, n: usize, r: usize) -> Result<Matroid, CliError> {
    Ok(decode_revlex(&RevlexCode::new(hex, n, r)?)?)
}

fn join_sets(m: &[qautm::matroid::Subset]) -> String {
    m.iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn write_out(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::io(path, e))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => write_out(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_decode(hex: &str, n: usize, r: usize) -> Result<i32, CliError> {
    let m = decode(hex, n, r)?;
    println!(
        "n={} r={} bases={} nonbases={}",
        m.n(),
        m.rank(),
        m.num_bases(),
        m.num_nonbases()
    );
    println!("bases: {}", join_sets(m.bases()));
    println!("nonbases: {}", join_sets(&m.nonbases()));
    Ok(0)
}

fn cmd_encode(file: &Path, n: Option<usize>) -> Result<i32, CliError> {
    let text = std::fs::read_to_string(file).map_err(|e| CliError::io(file, e))?;
    let mut bases = Vec::new();
    for line in text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
    {
        for tok in line.split_whitespace() {
            let s = if tok == "{}" || tok == "0" {
                Some(qautm::matroid::Subset::EMPTY)
            } else {
                parse_subset(tok)
            };
            bases.push(s.ok_or_else(|| CliError::Invalid(format!("bad subset {tok:?}")))?);
        }
    }
    let largest = bases
        .iter()
        .filter_map(|s| s.max_label())
        .max()
        .unwrap_or(0) as usize;
    let n = n.unwrap_or(largest);
    if largest > n {
        return Err(CliError::Invalid(format!(
            "label {largest} exceeds n = {n}"
        )));
    }
    let m = Matroid::new(GroundSet::range(n), bases)?;
    let code = encode_revlex(&m)?;
    println!("{} {} {}", code.hex, code.n, code.r);
    Ok(0)
}

fn gb_exit(status: GbStatus) -> i32 {
    match status {
        GbStatus::Complete => 0,
        GbStatus::TruncatedAtDegree(_) => 4,
        GbStatus::Aborted(_) => 5,
    }
}

fn cmd_gb(
    hex: &str,
    n: usize,
    r: usize,
    stabilize_at: Option<usize>,
    common: &Common,
) -> Result<i32, CliError> {
    let config = common.config(&[Axioms::Bases])?;
    let [axioms] = config.axioms[..] else {
        return Err(CliError::Invalid(
            "gb takes exactly one axiom system".into(),
        ));
    };
    let m = decode(hex, n, r)?;
    let spec = quantum_aut_spec::<Rational>(&m, axioms)?;
    let engine = config.engine();
    let basis = match stabilize_at {
        Some(d) => {
            let s = stabilize(&spec.generators, d, &engine)?;
            eprintln!(
                "stabilization: low={} high={} stabilized={}",
                s.low.status, s.high.status, s.stabilized
            );
            let mut low = s.low;
            if s.stabilized {
                low.status = GbStatus::Complete;
            }
            low
        }
        None => buchberger(&spec.generators, &engine)?,
    };
    let file = GbFile::new(&basis, hex, n, r, axioms.to_string());
    emit(config.output_path.as_deref(), &file.to_string())?;
    eprintln!(
        "status={} degree={} generators={} elapsed={:.3}s",
        basis.status,
        basis.max_degree,
        basis.generators.len(),
        basis.stats.elapsed.as_secs_f64()
    );
    Ok(gb_exit(basis.status))
}

fn cmd_commute(hex: &str, n: usize, r: usize, common: &Common) -> Result<i32, CliError> {
    let config = common.config(&[Axioms::Bases, Axioms::Circuits])?;
    let row = evaluate(&decode(hex, n, r)?, &config)?;
    let mut text = String::new();
    for (axioms, outcome) in &row.outcomes {
        writeln!(text, "{hex} n={n} r={r} axioms={axioms} {outcome}").unwrap();
    }
    emit(config.output_path.as_deref(), &text)?;
    Ok(0)
}

fn compare_fixtures(rows: &[ResultRow], fixtures: &[FixtureRow]) -> Vec<String> {
    let by_key: BTreeMap<_, _> = rows
        .iter()
        .map(|r| ((r.n, r.rank, r.hex.clone()), r))
        .collect();
    let mut report = Vec::new();
    for f in fixtures {
        let Some(row) = by_key.get(&f.key()) else {
            continue;
        };
        let mut diffs = Vec::new();
        let mut check = |name: &str, want: Option<String>, got: Option<String>| {
            if let (Some(w), Some(g)) = (want, got) {
                if w != g {
                    diffs.push(format!("{name}: expected {w}, got {g}"));
                }
            }
        };
        check(
            "girth",
            f.girth.map(|g| g.to_string()),
            Some(row.girth.to_string()),
        );
        check(
            "nonbases",
            f.nonbases.map(|v| v.to_string()),
            Some(row.nonbases.to_string()),
        );
        check(
            "aut",
            f.aut_order.map(|v| v.to_string()),
            Some(row.aut_order.to_string()),
        );
        check(
            "d_B",
            f.d_b.map(|v| v.to_string()),
            row.d_b().map(|v| v.to_string()),
        );
        check(
            "verdict_B",
            f.verdict_b.map(|v| v.to_string()),
            row.verdict(Axioms::Bases).map(|v| v.to_string()),
        );
        check(
            "verdict_C",
            f.verdict_c.map(|v| v.to_string()),
            row.verdict(Axioms::Circuits).map(|v| v.to_string()),
        );
        if !diffs.is_empty() {
            report.push(format!(
                "{} n={} r={}: {}",
                f.hex,
                f.n,
                f.rank,
                diffs.join("; ")
            ));
        }
    }
    report
}

fn cmd_tables(
    max_n: usize,
    fixtures: Option<&Path>,
    extended: bool,
    common: &Common,
) -> Result<i32, CliError> {
    let config = common.config(&[Axioms::Bases, Axioms::Circuits])?;
    let mut matroids: Vec<Matroid> = iso_catalog(max_n)?
        .into_iter()
        .filter(|m| m.n() >= 1)
        .collect();
    let fixture_rows = fixtures.map(read_fixtures).transpose()?.unwrap_or_default();
    if extended {
        for f in fixture_rows.iter().filter(|f| f.n > max_n) {
            matroids.push(f.matroid()?);
        }
    }
    let rows = run_batch(&matroids, &config)?;
    let parts = partition(&rows);
    let out_dir = config
        .output_path
        .clone()
        .unwrap_or_else(|| PathBuf::from("."));
    std::fs::create_dir_all(&out_dir).map_err(|e| CliError::io(&out_dir, e))?;
    for kind in TableKind::ALL {
        let rows = &parts[&kind];
        write_out(&out_dir.join(kind.file_name()), &render(rows))?;
        println!("{:<44} {:>4} rows", kind.file_name(), rows.len());
    }
    let mut timings = String::from("hex\tn\trank\twall_time_s\n");
    for r in &rows {
        writeln!(
            timings,
            "{}\t{}\t{}\t{:.3}",
            r.hex,
            r.n,
            r.rank,
            r.wall_time.as_secs_f64()
        )
        .unwrap();
    }
    write_out(&out_dir.join("timings.tsv"), &timings)?;
    if !fixture_rows.is_empty() {
        let report = compare_fixtures(&rows, &fixture_rows);
        for line in &report {
            println!("mismatch {line}");
        }
        println!("fixture mismatches: {}", report.len());
    }
    Ok(0)
}

fn cmd_hom(a: (&str, usize, usize), b: (&str, usize, usize)) -> Result<i32, CliError> {
    let m1 = decode(a.0, a.1, a.2)?;
    let m2 = decode(b.0, b.1, b.2)?;
    let counts = hom_counts(&m1, &m2)?;
    println!("hom\tsurj\temb");
    println!("{}\t{}\t{}", counts.hom, counts.surj, counts.emb);
    let catalog = Catalog::new(m2.n())?;
    println!("image_hex\tn\tr\taut\thom");
    for (code, count) in &counts.by_image_class {
        let aut = catalog
            .get(code)
            .map_or("-".to_string(), |e| e.aut_order.to_string());
        println!("{}\t{}\t{}\t{}\t{}", code.hex, code.n, code.r, aut, count);
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Decode { hex, n, r } => cmd_decode(hex, *n, *r),
        Command::Encode { file, n } => cmd_encode(file, *n),
        Command::Gb {
            hex,
            n,
            r,
            stabilize,
            common,
        } => cmd_gb(hex, *n, *r, *stabilize, common),
        Command::Commute { hex, n, r, common } => cmd_commute(hex, *n, *r, common),
        Command::Tables {
            max_n,
            fixtures,
            extended,
            common,
        } => cmd_tables(*max_n, fixtures.as_deref(), *extended, common),
        Command::Hom {
            hex1,
            n1,
            r1,
            hex2,
            n2,
            r2,
        } => cmd_hom((hex1, *n1, *r1), (hex2, *n2, *r2)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
