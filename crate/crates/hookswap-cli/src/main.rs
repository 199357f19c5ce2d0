//! Command-line surface: cell statistics, bijection tracing, distribution
//! tables, generating-series coefficients, and the verification suites.
//!
//! Exit codes: 0 on success, 1 when a verification suite finds a
//! counterexample, 2 on parse or invariant errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hookswap::bijections::{phi_trace, tau, zeta, PhiTrace, Quintuple, TildeQuintuple};
use hookswap::enumeration::{distribution, DistTable, KeyKind, Verifier, VerifyReport};
use hookswap::qseries::pointed_class_gf;
use hookswap::{Cell, Partition, PointedPartition};

#[derive(Parser)]
#[command(
    name = "hookswap",
    version,
    about = "Pointed partitions: statistics, hook/part-exchanging bijections, tables, and exhaustive verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Tsv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    /// (arm, leg, coarm) triples.
    Alm,
    /// (hook, part length) pairs.
    Hp,
    /// (arm, coarm) pairs.
    Am,
    /// (arm, leg) pairs.
    Al,
}

impl From<KindArg> for KeyKind {
    fn from(kind: KindArg) -> KeyKind {
        match kind {
            KindArg::Alm => KeyKind::ArmLegCoarm,
            KindArg::Hp => KeyKind::HookPart,
            KindArg::Am => KeyKind::ArmCoarm,
            KindArg::Al => KeyKind::ArmLeg,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    Involution,
    Symmetry,
    Supersymmetry,
    Gf,
    Pealing,
    Remark,
    Zeta,
}

#[derive(Subcommand)]
enum Command {
    /// Print the six statistics of a cell.
    Stats {
        /// Partition as comma-separated decreasing parts, e.g. "5,3,1".
        #[arg(long)]
        partition: String,
        /// Cell as "x,y": 1-based column and part index.
        #[arg(long)]
        cell: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Apply the involution exchanging hook length and part length.
    Phi {
        #[arg(long)]
        partition: String,
        #[arg(long)]
        cell: String,
        /// Also emit every intermediate object of the composition.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Move the cell along its row to given (arm, coarm) statistics.
    Tau {
        #[arg(long)]
        partition: String,
        #[arg(long)]
        cell: String,
        #[arg(long)]
        to_arm: usize,
        #[arg(long)]
        to_coarm: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Transport the cell to given (arm, leg) statistics (phi.tau.phi).
    Zeta {
        #[arg(long)]
        partition: String,
        #[arg(long)]
        cell: String,
        #[arg(long)]
        to_arm: usize,
        #[arg(long)]
        to_leg: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Emit a statistic distribution table over the pointed partitions of n.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the weight generating series of one (arm, leg, coarm) class.
    Gf {
        #[arg(long)]
        arm: usize,
        #[arg(long)]
        leg: usize,
        #[arg(long)]
        coarm: usize,
        /// Truncation degree of the series.
        #[arg(long, default_value_t = 40)]
        degree: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run verification suites; exits 1 if any counterexample is found.
    Verify {
        /// Comma-separated list; defaults to every suite.
        #[arg(long, value_enum, value_delimiter = ',')]
        checks: Vec<CheckArg>,
        /// Weight cap; per-suite defaults are 14 (involution, symmetry,
        /// supersymmetry), 18 (pealing), 25 (gf), 12 (zeta).
        #[arg(long)]
        max_n: Option<usize>,
        /// Statistic cap; per-suite defaults are 3 (gf), 4 (pealing
        /// boxes, zeta sum), 5 (remark boxes).
        #[arg(long)]
        max_stat: Option<usize>,
        /// Series truncation degree for the remark suite.
        #[arg(long, default_value_t = 40)]
        degree: usize,
        /// Counterexamples kept per suite.
        #[arg(long, default_value_t = 10)]
        max_failures: usize,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Stats {
            partition,
            cell,
            format,
        } => {
            let pp = parse_pointed(&partition, &cell)?;
            let s = pp.stats();
            match format {
                Format::Tsv => println!(
                    "arm={} leg={} coarm={} coleg={} hook={} part={}",
                    s.arm, s.leg, s.coarm, s.coleg, s.hook, s.part_len
                ),
                Format::Json => print_json(&StatsView {
                    arm: s.arm,
                    leg: s.leg,
                    coarm: s.coarm,
                    coleg: s.coleg,
                    hook: s.hook,
                    part: s.part_len,
                }),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Phi {
            partition,
            cell,
            trace,
            format,
        } => {
            let pp = parse_pointed(&partition, &cell)?;
            let steps = phi_trace(&pp);
            emit_image(&steps.image, trace.then(|| trace_view(&steps)), format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Tau {
            partition,
            cell,
            to_arm,
            to_coarm,
            format,
        } => {
            let pp = parse_pointed(&partition, &cell)?;
            let image = tau(&pp, to_arm, to_coarm).map_err(|e| e.to_string())?;
            emit_image(&image, None, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Zeta {
            partition,
            cell,
            to_arm,
            to_leg,
            format,
        } => {
            let pp = parse_pointed(&partition, &cell)?;
            let image = zeta(&pp, to_arm, to_leg).map_err(|e| e.to_string())?;
            emit_image(&image, None, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { n, kind, format } => {
            let table = distribution(n, kind.into());
            match format {
                Format::Tsv => print!("{}", table_tsv(&table)),
                Format::Json => print_json(&table_view(&table, kind)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gf {
            arm,
            leg,
            coarm,
            degree,
            format,
        } => {
            let series = pointed_class_gf(arm, leg, coarm, degree);
            match format {
                Format::Tsv => println!("{series}"),
                Format::Json => print_json(&SeriesView {
                    arm,
                    leg,
                    coarm,
                    degree,
                    coefficients: series.coeffs().to_vec(),
                }),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            checks,
            max_n,
            max_stat,
            degree,
            max_failures,
        } => {
            let checks = if checks.is_empty() {
                vec![
                    CheckArg::Involution,
                    CheckArg::Symmetry,
                    CheckArg::Supersymmetry,
                    CheckArg::Gf,
                    CheckArg::Pealing,
                    CheckArg::Remark,
                    CheckArg::Zeta,
                ]
            } else {
                checks
            };
            let verifier = Verifier {
                failure_cap: max_failures,
            };
            let mut all_passed = true;
            for check in checks {
                let report = run_check(&verifier, check, max_n, max_stat, degree);
                all_passed &= report.passed();
                print_report(&report);
            }
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn parse_pointed(partition: &str, cell: &str) -> Result<PointedPartition, String> {
    let p: Partition = partition.parse().map_err(|e| format!("--partition: {e}"))?;
    let c: Cell = cell.parse().map_err(|e| format!("--cell: {e}"))?;
    PointedPartition::new(p, c).map_err(|e| e.to_string())
}

fn run_check(
    verifier: &Verifier,
    check: CheckArg,
    max_n: Option<usize>,
    max_stat: Option<usize>,
    degree: usize,
) -> VerifyReport {
    let n = |default| max_n.unwrap_or(default);
    let s = |default| max_stat.unwrap_or(default);
    match check {
        CheckArg::Involution => verifier.involution(n(14)),
        CheckArg::Symmetry => verifier.symmetry(n(14)),
        CheckArg::Supersymmetry => verifier.supersymmetry(n(14)),
        CheckArg::Gf => verifier.generating_function(s(3), s(3), s(3), n(25)),
        CheckArg::Pealing => verifier.pealing(n(18), s(4), s(4)),
        CheckArg::Remark => verifier.remark(s(5), s(5), degree),
        CheckArg::Zeta => verifier.zeta_transport(n(12), s(4)),
    }
}

fn print_report(report: &VerifyReport) {
    if report.passed() {
        println!(
            "PASS {} ({}): {} cases",
            report.check, report.scope, report.cases
        );
    } else {
        println!(
            "FAIL {} ({}): {} failures in {} cases",
            report.check, report.scope, report.failure_count, report.cases
        );
        for failure in &report.failures {
            println!("  {failure}");
        }
    }
}

#[derive(Serialize)]
struct StatsView {
    arm: usize,
    leg: usize,
    coarm: usize,
    coleg: usize,
    hook: usize,
    part: usize,
}

#[derive(Serialize)]
struct QuintupleView {
    #[serde(rename = "A")]
    short_rows: String,
    #[serde(rename = "B")]
    leg_tails: String,
    #[serde(rename = "C")]
    long_rows: String,
    #[serde(rename = "D")]
    rect: String,
    #[serde(rename = "E")]
    arm_tail: String,
    a: usize,
    l: usize,
    m: usize,
}

impl From<&Quintuple> for QuintupleView {
    fn from(q: &Quintuple) -> Self {
        QuintupleView {
            short_rows: q.short_rows.to_string(),
            leg_tails: q.leg_tails.to_string(),
            long_rows: q.long_rows.to_string(),
            rect: q.rect.to_string(),
            arm_tail: q.arm_tail.to_string(),
            a: q.ctx.arm,
            l: q.ctx.leg,
            m: q.ctx.coarm,
        }
    }
}

#[derive(Serialize)]
struct TildeQuintupleView {
    #[serde(rename = "At")]
    reduced: String,
    #[serde(rename = "B")]
    leg_tails: String,
    #[serde(rename = "Ct")]
    merged_rows: String,
    #[serde(rename = "D")]
    rect: String,
    #[serde(rename = "E")]
    arm_tail: String,
    a: usize,
    l: usize,
    m: usize,
}

impl From<&TildeQuintuple> for TildeQuintupleView {
    fn from(tq: &TildeQuintuple) -> Self {
        TildeQuintupleView {
            reduced: tq.reduced.to_string(),
            leg_tails: tq.leg_tails.to_string(),
            merged_rows: tq.merged_rows.to_string(),
            rect: tq.rect.to_string(),
            arm_tail: tq.arm_tail.to_string(),
            a: tq.ctx.arm,
            l: tq.ctx.leg,
            m: tq.ctx.coarm,
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "stage", rename_all = "snake_case")]
enum StageView {
    Decompose(QuintupleView),
    ToTilde(TildeQuintupleView),
    Rho(TildeQuintupleView),
    FromTilde(QuintupleView),
}

fn trace_view(steps: &PhiTrace) -> Vec<StageView> {
    vec![
        StageView::Decompose((&steps.quintuple).into()),
        StageView::ToTilde((&steps.tilde).into()),
        StageView::Rho((&steps.swapped).into()),
        StageView::FromTilde((&steps.back).into()),
    ]
}

#[derive(Serialize)]
struct ImageView {
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Vec<StageView>>,
    partition: String,
    cell: String,
}

fn emit_image(image: &PointedPartition, trace: Option<Vec<StageView>>, format: Format) {
    match format {
        Format::Tsv => {
            if let Some(stages) = &trace {
                for stage in stages {
                    println!(
                        "{}",
                        serde_json::to_string(stage).expect("stage views serialize")
                    );
                }
            }
            println!("partition: {}", image.partition());
            println!("cell: {}", image.cell());
        }
        Format::Json => print_json(&ImageView {
            trace,
            partition: image.partition().to_string(),
            cell: image.cell().to_string(),
        }),
    }
}

#[derive(Serialize)]
struct TableRowView {
    key: Vec<usize>,
    count: u64,
}

#[derive(Serialize)]
struct TableView {
    n: usize,
    kind: &'static str,
    rows: Vec<TableRowView>,
}

fn table_view(table: &DistTable, kind: KindArg) -> TableView {
    TableView {
        n: table.n,
        kind: match kind {
            KindArg::Alm => "alm",
            KindArg::Hp => "hp",
            KindArg::Am => "am",
            KindArg::Al => "al",
        },
        rows: table
            .iter()
            .map(|(key, count)| TableRowView {
                key: key.to_vec(),
                count,
            })
            .collect(),
    }
}

fn table_tsv(table: &DistTable) -> String {
    let mut out = String::new();
    let arity = table.kind.arity();
    for i in 1..=arity {
        out.push_str(&format!("stat{i}\t"));
    }
    out.push_str("count\n");
    for (key, count) in table.iter() {
        for stat in key {
            out.push_str(&format!("{stat}\t"));
        }
        out.push_str(&format!("{count}\n"));
    }
    out
}

#[derive(Serialize)]
struct SeriesView {
    arm: usize,
    leg: usize,
    coarm: usize,
    degree: usize,
    coefficients: Vec<i64>,
}

fn print_json(value: &impl Serialize) {
    println!(
        "{}",
        serde_json::to_string(value).expect("views serialize without error")
    );
}
