use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use lifts_core::blocks::block_partition;
use lifts_core::chartab::CharacterTable;
use lifts_core::perm::DEFAULT_ORDER_CAP;
use lifts_core::verify::{self, CorpusEntry, Format, Options};

#[derive(Parser)]
#[command(name = "lifts", version, about = "Verify lift-counting criteria for Brauer characters over a group corpus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Verify every block of every corpus group and write a report.
    Verify {
        #[arg(long)]
        corpus: PathBuf,
        /// Only this prime (skipped for groups it does not divide).
        #[arg(long)]
        prime: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
        max_order: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Print the character table of a corpus group.
    Table {
        name: String,
        #[arg(long)]
        corpus: PathBuf,
    },
    /// Print the p-blocks and decomposition matrix of a corpus group.
    Blocks {
        name: String,
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        prime: u64,
    },
    /// Run the order-273 demonstration.
    Demo273,
}

fn find(corpus: &PathBuf, name: &str) -> Result<CorpusEntry> {
    let entries = verify::load_corpus(corpus).with_context(|| format!("reading {}", corpus.display()))?;
    match entries.into_iter().find(|e| e.name == name) {
        Some(e) => Ok(e),
        None => Err(lifts_core::Error::UnknownGroup(name.to_string()).into()),
    }
}

fn table_of(entry: &CorpusEntry) -> Result<Arc<CharacterTable>> {
    let g = Arc::new(entry.build(DEFAULT_ORDER_CAP)?);
    Ok(Arc::new(CharacterTable::compute(g)?))
}

fn print_table(t: &CharacterTable) {
    let c = t.classes();
    let sizes: Vec<String> = c.sizes().iter().map(|s| s.to_string()).collect();
    let orders: Vec<String> = c.rep_orders().iter().map(|s| s.to_string()).collect();
    println!("order {}  classes {}", t.group().order(), t.len());
    println!("class sizes:  {}", sizes.join(" "));
    println!("elt orders:   {}", orders.join(" "));
    for chi in 0..t.len() {
        let row: Vec<String> = t.row(chi).iter().map(|v| v.to_string()).collect();
        println!("chi{}: {}", chi, row.join(" | "));
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Verify { corpus, prime, max_order, jobs, out, format } => {
            let entries = verify::load_corpus(&corpus).with_context(|| format!("reading {}", corpus.display()))?;
            let opts = Options { prime, max_order, jobs };
            let records = verify::verify_corpus(&entries, &opts);
            let format = match format {
                ReportFormat::Text => Format::Text,
                ReportFormat::Structured => Format::Structured,
            };
            verify::emit_report(&records, &out, format).with_context(|| format!("writing {}", out.display()))?;
            let fails = verify::fail_count(&records);
            eprintln!("{} records, {} fail verdicts, report written to {}", records.len(), fails, out.display());
            Ok(fails == 0)
        }
        Command::Table { name, corpus } => {
            let t = table_of(&find(&corpus, &name)?)?;
            print_table(&t);
            Ok(true)
        }
        Command::Blocks { name, corpus, prime } => {
            let entry = find(&corpus, &name)?;
            let t = table_of(&entry)?;
            if !(t.group().order() as u64).is_multiple_of(prime) {
                bail!("{} does not divide |{}| = {}", prime, name, t.group().order());
            }
            let bs = lifts_core::brauer::BrauerSystem::compute(t.clone(), prime)?;
            println!("order {}  p = {}  |Irr| = {}  |IBr| = {}", t.group().order(), prime, t.len(), bs.ibr_count());
            for (i, b) in block_partition(&bs).iter().enumerate() {
                println!("block {}: defect {}  Irr {:?}  IBr {:?}", i, b.defect, b.irr, b.ibr);
                for &chi in &b.irr {
                    let row: Vec<String> = b.ibr.iter().map(|&phi| bs.decomposition_number(chi, phi).to_string()).collect();
                    println!("  chi{} (deg {}): {}", chi, t.degree(chi), row.join(" "));
                }
            }
            Ok(true)
        }
        Command::Demo273 => {
            let demo = verify::demo273()?;
            print!("{}", demo.narrative);
            print!("{}", verify::render_text(std::slice::from_ref(&demo.record)));
            Ok(demo.record.fail_count() == 0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}
