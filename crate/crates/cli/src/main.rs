use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use charval::chartable::export::{to_csv, TableExport};
use charval::chartable::CharacterTable;
use charval::cyclotomic::Cyclotomic;
use charval::families::GroupSpec;
use charval::permgroup::DEFAULT_BUDGET;
use charval::theorems::{Catalog, CheckId, Survey};
use charval::Error;

#[derive(Parser)]
#[command(
    name = "charval",
    version,
    about = "Exact character tables, value sets and degree sets of finite groups"
)]
struct Cli {
    /// Maximum number of group elements to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,

    /// Print only the essential result (verdicts for `verify`).
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the character table of a group.
    Table {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the set of character values and its size.
    Cv { spec: String },
    /// Print the character degrees.
    Cd { spec: String },
    /// Run theorem checks over a catalog.
    Verify {
        /// Comma-separated check ids, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        /// Catalog file; the bundled catalog when omitted.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// List catalog entries with their tags.
    CatalogList {
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

enum Failure {
    Usage(String),
    Budget(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            Error::InvalidSpec(_) | Error::InvalidPermutation(_) | Error::Catalog { .. } => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Other(other.to_string()),
        }
    }
}

fn compute(spec_text: &str, budget: usize) -> Result<(GroupSpec, CharacterTable), Failure> {
    let spec: GroupSpec = spec_text.parse()?;
    let group = spec.build()?;
    let table = CharacterTable::compute(&group, budget)?;
    Ok((spec, table))
}

fn approx(v: &Cyclotomic) -> String {
    let (re, im) = v.to_complex();
    let clean = |x: f64| if x.abs() < 5e-13 { 0.0 } else { x };
    let (re, im) = (clean(re), clean(im));
    if im == 0.0 {
        format!("{re:.6}")
    } else if re == 0.0 {
        format!("{im:.6}i")
    } else {
        format!(
            "{re:.6}{}{:.6}i",
            if im < 0.0 { "-" } else { "+" },
            im.abs()
        )
    }
}

/// Capital-letter labels: A..Z, then AA, AB, …
fn label(mut i: usize) -> String {
    let mut s = String::new();
    loop {
        s.insert(0, (b'A' + (i % 26) as u8) as char);
        if i < 26 {
            return s;
        }
        i = i / 26 - 1;
    }
}

fn render_text(spec: &GroupSpec, table: &CharacterTable) -> String {
    let conj = table.conjugacy();
    let k = table.num_classes();
    let mut legend: BTreeMap<Cyclotomic, String> = BTreeMap::new();
    let mut order_seen = Vec::new();
    let cells: Vec<Vec<String>> = table
        .values()
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| match v.rational_value() {
                    Some(q) => q.to_string(),
                    None => {
                        let next = legend.len();
                        legend
                            .entry(v.clone())
                            .or_insert_with(|| {
                                order_seen.push(v.clone());
                                label(next)
                            })
                            .clone()
                    }
                })
                .collect()
        })
        .collect();

    let mut header = vec![("class".to_string(), table.class_names())];
    header.push((
        "size".into(),
        (0..k).map(|c| conj.size(c).to_string()).collect(),
    ));
    header.push((
        "order".into(),
        (0..k).map(|c| conj.element_order(c).to_string()).collect(),
    ));
    let rows: Vec<(String, Vec<String>)> = cells
        .into_iter()
        .enumerate()
        .map(|(r, cells)| (format!("X.{}", r + 1), cells))
        .collect();
    let all: Vec<&(String, Vec<String>)> = header.iter().chain(rows.iter()).collect();
    let first = all.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..k)
        .map(|c| {
            all.iter()
                .map(|(_, v)| v[c].chars().count())
                .max()
                .unwrap_or(1)
        })
        .collect();

    let mut out = String::new();
    let _ = writeln!(
        out,
        "{spec}: order {}, exponent {}, {k} classes",
        table.group_order(),
        conj.exponent()
    );
    for (i, (name, vals)) in all.iter().enumerate() {
        if i == header.len() {
            out.push('\n');
        }
        let _ = write!(out, "{name:<first$}");
        for (c, v) in vals.iter().enumerate() {
            let _ = write!(out, "  {v:>w$}", w = widths[c]);
        }
        out.push('\n');
    }
    if !order_seen.is_empty() {
        out.push('\n');
        for v in &order_seen {
            let _ = writeln!(out, "{} = {v} ≈ {}", legend[v], approx(v));
        }
    }
    out
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let budget = cli.budget;
    match cli.command {
        Command::Table { spec, format } => {
            let (spec, table) = compute(&spec, budget)?;
            let text = match format {
                Format::Text => render_text(&spec, &table),
                Format::Json => TableExport::new(&table, &spec.to_string()).to_json() + "\n",
                Format::Csv => to_csv(&table),
            };
            print!("{text}");
        }
        Command::Cv { spec } => {
            let (_, table) = compute(&spec, budget)?;
            let cv = table.cv_set();
            if !cli.quiet {
                for v in &cv {
                    match v.rational_value() {
                        Some(q) => println!("{q}"),
                        None => println!("{v} ≈ {}", approx(v)),
                    }
                }
            }
            println!("{} values", cv.len());
        }
        Command::Cd { spec } => {
            let (_, table) = compute(&spec, budget)?;
            let cd: Vec<String> = table.cd_set().iter().map(u64::to_string).collect();
            println!("{}", cd.join(" "));
        }
        Command::Verify { checks, catalog } => {
            let ids = CheckId::parse_list(&checks).map_err(|e| Failure::Usage(e.to_string()))?;
            if ids.is_empty() {
                return Err(Failure::Usage("no checks selected".into()));
            }
            let catalog = match catalog {
                Some(path) => Catalog::load(&path)?,
                None => Catalog::default(),
            }
            .with_budget(budget);
            let survey = Survey::compute(&catalog);
            let reports = survey.run(&ids);
            if !cli.quiet {
                println!(
                    "catalog: {} entries, {} tables computed in {:.2?}",
                    catalog.len(),
                    survey.computed().count(),
                    survey.elapsed
                );
                println!("scope: statements are checked only for the groups in this catalog");
            }
            for r in &reports {
                if cli.quiet {
                    println!("{}", r.summary());
                } else {
                    print!("{r:#}");
                }
            }
            let all_pass = reports.iter().all(|r| r.passed());
            if survey.budget_exceeded() {
                for (entry, e) in survey.errors() {
                    eprintln!("error: {}: {e}", entry.text);
                }
                return Ok(ExitCode::from(3));
            }
            println!("verdict: {}", if all_pass { "PASS" } else { "FAIL" });
            return Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
        Command::CatalogList { catalog } => {
            let catalog = match catalog {
                Some(path) => Catalog::load(&path)?,
                None => Catalog::default(),
            };
            for e in &catalog.entries {
                let mut tags: Vec<String> = e.tags.iter().map(ToString::to_string).collect();
                if let Some(b) = e.budget {
                    tags.push(format!("budget={b}"));
                }
                if cli.quiet {
                    println!("{}", e.text);
                } else {
                    println!(
                        "{:<48} order {:<8} {}",
                        e.text,
                        e.spec.expected_order(),
                        tags.join(" ")
                    );
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Other(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
