use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use frobrel::classify::{classify, sample_completeness, ClassifyOptions};
use frobrel::constructors::{
    conjugacy_classes_to_frobenius, group_to_frobenius, groupoid_to_frobenius, FiniteGroup,
    FiniteGroupoid, Section,
};
use frobrel::diagram::{equal_diagrams, evaluate, parse};
use frobrel::frobenius::disjoint_union;
use frobrel::{partition_function, verify, FrobData, FrobObject};

#[derive(Parser)]
#[command(
    name = "frobrel",
    version,
    about = "Frobenius objects in the category of relations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms; exit status 0 iff the data is a Frobenius object.
    Verify { file: PathBuf },
    /// Build an object from a known construction.
    Construct {
        #[command(subcommand)]
        kind: Construct,
    },
    /// Classify all objects on N elements up to isomorphism.
    Classify {
        #[arg(long)]
        n: usize,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        table: TableFormat,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also filter this many random raw tables and check each survivor
        /// against the census; the report goes to stderr.
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Genus sequence of the closed-surface invariant.
    Partition {
        file: PathBuf,
        /// Also list the values for genus 0..=G.
        #[arg(long)]
        max_genus: Option<usize>,
    },
    /// Evaluate a string diagram, or compare two.
    Diagram {
        #[arg(long, conflicts_with = "equal", required_unless_present = "equal")]
        expr: Option<String>,
        #[arg(long, num_args = 2, value_names = ["W1", "W2"])]
        equal: Option<Vec<String>>,
        #[arg(long)]
        object: PathBuf,
    },
    /// Markdown census tables for the given sizes.
    CensusTable {
        #[arg(long, num_args = 1.., default_values_t = [2, 3])]
        n: Vec<usize>,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// A group with counit {ω}.
    Group {
        /// Built-in group name (Zn, Sk, Dk, Q8, V4).
        #[arg(long, conflicts_with = "cayley", required_unless_present = "cayley")]
        group: Option<String>,
        /// Group JSON with a Cayley table.
        #[arg(long)]
        cayley: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        omega: usize,
    },
    /// A groupoid, optionally with a twisted counit.
    Groupoid {
        /// Groupoid JSON.
        #[arg(long, conflicts_with_all = ["trivial", "pair"])]
        file: Option<PathBuf>,
        /// k objects, identities only.
        #[arg(long, conflicts_with = "pair")]
        trivial: Option<usize>,
        /// Pair groupoid on k objects, times --group.
        #[arg(long)]
        pair: Option<usize>,
        #[arg(long, requires = "pair")]
        group: Option<String>,
        /// Section of the target map, one morphism per object.
        #[arg(long, value_delimiter = ',')]
        section: Option<Vec<usize>>,
    },
    /// Conjugacy classes of a group.
    Conjugacy {
        #[arg(long)]
        group: String,
    },
    /// Disjoint union of two objects.
    DisjointUnion { a: PathBuf, b: PathBuf },
    /// Z_m with counit {ω}.
    Abelian {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        omega: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Markdown,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_data(path: &Path) -> Result<FrobData> {
    serde_json::from_str(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn load_object(path: &Path) -> Result<FrobObject> {
    let data = load_data(path)?;
    verify(&data).map_err(|r| anyhow::anyhow!("{}: not a Frobenius object\n{r}", path.display()))
}

fn run(cli: Cli, out: &mut impl Write) -> Result<bool> {
    match cli.command {
        Command::Verify { file } => {
            let data = load_data(&file)?;
            match verify(&data) {
                Ok(f) => {
                    writeln!(out, "valid")?;
                    writeln!(out, "commutative: {}", f.is_commutative())?;
                    writeln!(out, "alpha: {:?}", f.witness().as_slice())?;
                    Ok(true)
                }
                Err(report) => {
                    writeln!(out, "invalid")?;
                    writeln!(out, "{report}")?;
                    Ok(false)
                }
            }
        }
        Command::Construct { kind } => {
            let obj = construct(kind)?;
            writeln!(out, "{}", serde_json::to_string(&obj)?)?;
            Ok(true)
        }
        Command::Classify {
            n,
            jobs,
            table,
            out: path,
            sample,
            seed,
        } => {
            let opts = ClassifyOptions {
                jobs,
                ..ClassifyOptions::default()
            };
            let census = classify(n, &opts)?;
            let text = match table {
                TableFormat::Json => census.to_json() + "\n",
                TableFormat::Markdown => census.to_markdown(),
            };
            match path {
                Some(p) => {
                    fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?
                }
                None => out.write_all(text.as_bytes())?,
            }
            eprintln!(
                "n = {n}: {} classes, {} labeled structures",
                census.len(),
                census.labeled_count()
            );
            if let Some(samples) = sample {
                let report = sample_completeness(n, samples, seed, &census.canonical_forms());
                eprintln!(
                    "sampled {} raw tables (seed {seed}): {} valid, {} missing from census",
                    report.samples, report.valid, report.unmatched
                );
                if report.unmatched > 0 {
                    bail!("sampling found objects missing from the census");
                }
            }
            Ok(true)
        }
        Command::Partition { file, max_genus } => {
            let f = load_object(&file)?;
            let pf = partition_function(&f);
            let mut v = serde_json::to_value(&pf)?;
            if let Some(g) = max_genus {
                v["values"] = serde_json::to_value(pf.values(g + 1))?;
            }
            writeln!(out, "{}", serde_json::to_string(&v)?)?;
            writeln!(out, "{}", pf.proposition)?;
            Ok(true)
        }
        Command::Diagram {
            expr,
            equal,
            object,
        } => {
            let f = load_object(&object)?;
            if let Some(words) = equal {
                let (a, b) = (parse(&words[0])?, parse(&words[1])?);
                writeln!(out, "{}", equal_diagrams(&a, &b, &f)?)?;
            } else {
                let d = parse(expr.as_deref().expect("clap requires --expr or --equal"))?;
                writeln!(out, "{}", serde_json::to_string(&evaluate(&d, &f))?)?;
            }
            Ok(true)
        }
        Command::CensusTable { n } => {
            for (i, &k) in n.iter().enumerate() {
                let census = classify(k, &ClassifyOptions::default())?;
                if i > 0 {
                    writeln!(out)?;
                }
                writeln!(out, "## n = {k}\n")?;
                out.write_all(census.to_markdown().as_bytes())?;
            }
            Ok(true)
        }
    }
}

fn construct(kind: Construct) -> Result<FrobObject> {
    Ok(match kind {
        Construct::Group {
            group,
            cayley,
            omega,
        } => {
            let g = match (group, cayley) {
                (Some(name), _) => FiniteGroup::by_name(&name)?,
                (None, Some(p)) => FiniteGroup::from_json(&read(&p)?)?,
                (None, None) => unreachable!("clap requires --group or --cayley"),
            };
            group_to_frobenius(&g, omega)?
        }
        Construct::Groupoid {
            file,
            trivial,
            pair,
            group,
            section,
        } => {
            let gpd = match (file, trivial, pair) {
                (Some(p), _, _) => {
                    let gpd: FiniteGroupoid = serde_json::from_str(&read(&p)?)
                        .with_context(|| format!("parsing {}", p.display()))?;
                    gpd.validate()?;
                    gpd
                }
                (None, Some(k), _) => FiniteGroupoid::trivial(k),
                (None, None, Some(k)) => {
                    let g = FiniteGroup::by_name(group.as_deref().unwrap_or("Z1"))?;
                    FiniteGroupoid::transitive(k, &g)
                }
                _ => bail!("one of --file, --trivial or --pair is required"),
            };
            let sec = section.map(|sigma| Section { sigma });
            groupoid_to_frobenius(&gpd, sec.as_ref())?
        }
        Construct::Conjugacy { group } => {
            conjugacy_classes_to_frobenius(&FiniteGroup::by_name(&group)?)?
        }
        Construct::DisjointUnion { a, b } => disjoint_union(&load_object(&a)?, &load_object(&b)?),
        Construct::Abelian { m, omega } => {
            if m == 0 {
                bail!("--m must be positive");
            }
            group_to_frobenius(&FiniteGroup::cyclic(m), omega)?
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
