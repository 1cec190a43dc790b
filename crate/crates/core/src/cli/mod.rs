//! The `contred` command line and the `.clt` corpus format.
//!
//! Exit codes: 0 yes or success, 1 no or not found, 2 usage or input
//! error, 3 budget exceeded.

mod corpus;

pub use corpus::{Corpus, Decl};

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::explore::{admissible, decompose_by_level, degree_poset, search_antichain, search_lev_bas_witness};
use crate::invariants::{basesize_problem, level_problem, report, Variant};
use crate::lattice::{inf0, sup0, sup0_problem, sup2, sup2_problem, TaggedFamily};
use crate::reduce::{Item, Reducer, Reducibility, Witness, DEFAULT_BUDGET};
use crate::topo::{PartialMap, Problem, TotalMap, DEFAULT_MEMBER_CAP};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Environment variable read for the search budget; `--budget` wins.
pub const BUDGET_VAR: &str = "CONTRED_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "contred", version, about = "Continuous reducibilities between maps on finite spaces")]
pub struct Cli {
    /// Corpus file to load; positional arguments ending in `.clt` are loaded as well.
    #[arg(short = 'c', long = "corpus", global = true)]
    corpus: Vec<String>,
    /// Node budget for each search.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Rel {
    Le0,
    Le2,
    Lect,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SupRel {
    Le0,
    Le2,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether LHS reduces to RHS.
    Check {
        relation: Rel,
        lhs: String,
        rhs: String,
        files: Vec<String>,
        /// Largest power tried by `lect`.
        #[arg(long, default_value_t = 3)]
        cap: usize,
        /// Print the reduction maps in corpus format.
        #[arg(long)]
        witness: bool,
    },
    /// Level sets, Levels and Basesize of a map or problem.
    Invariants { item: String, files: Vec<String> },
    /// Supremum of maps or problems, printed as a corpus.
    Sup {
        relation: SupRel,
        #[arg(required = true)]
        items: Vec<String>,
        #[arg(long)]
        name: String,
    },
    /// Infimum for `le0` of total maps into a common codomain.
    Inf {
        #[arg(required = true)]
        items: Vec<String>,
        #[arg(long)]
        name: String,
    },
    /// Degree poset of the given items.
    Poset {
        relation: Rel,
        items: Vec<String>,
        #[arg(long, default_value_t = 3)]
        cap: usize,
        /// Emit Graphviz DOT.
        #[arg(long)]
        dot: bool,
    },
    /// Split a map along its level sets and compare it with the supremum of the parts.
    Decompose {
        item: String,
        files: Vec<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        thresholds: Vec<usize>,
    },
    /// Is the map equivalent to the supremum of all continuous partial maps with its type?
    Admissible { map: String, files: Vec<String> },
    /// Search for a map with given invariants or for an antichain.
    Search {
        #[arg(long, requires = "bas", conflicts_with = "antichain")]
        lev: Option<usize>,
        #[arg(long, requires = "lev")]
        bas: Option<usize>,
        #[arg(long, required_unless_present = "lev")]
        antichain: Option<usize>,
        #[arg(long, value_enum, default_value = "le2")]
        relation: Rel,
        #[arg(long, default_value_t = 4)]
        max_points: usize,
        #[arg(long)]
        seed: u64,
    },
}

/// Runs the binary: arguments from the process, budget from the environment.
pub fn main() -> i32 {
    let env = std::env::var(BUDGET_VAR).ok();
    run(std::env::args_os(), env.as_deref(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

/// Runs one command line and returns the exit code.
pub fn run<I, T>(args: I, env_budget: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let shown = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = out.write_all(shown.as_bytes());
                EXIT_YES
            } else {
                let _ = err.write_all(shown.as_bytes());
                EXIT_USAGE
            };
        }
    };
    let budget = match (cli.budget, env_budget) {
        (Some(b), _) => b,
        (None, Some(v)) => match v.trim().parse() {
            Ok(b) => b,
            Err(_) => {
                let _ = writeln!(err, "error: {BUDGET_VAR} must be a number, got {v:?}");
                return EXIT_USAGE;
            }
        },
        (None, None) => DEFAULT_BUDGET,
    };
    let mut text = String::new();
    match execute(&cli, Reducer::new(budget), &mut text) {
        Ok(code) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = out.write_all(text.as_bytes());
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::BudgetExceeded { .. } => EXIT_BUDGET,
                _ => EXIT_USAGE,
            }
        }
    }
}

/// Splits positional arguments into names and corpus files, then loads
/// every file into one corpus.
fn load(cli: &Cli, args: &[String]) -> Result<(Corpus, Vec<String>)> {
    let (files, names): (Vec<&String>, Vec<&String>) = args.iter().partition(|a| a.ends_with(".clt"));
    let mut corpus = Corpus::new();
    for path in cli.corpus.iter().chain(files) {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Precondition(format!("{path}: {e}")))?;
        corpus.parse_into(&text).map_err(|e| match e {
            Error::Parse { line, message } => Error::Parse { line, message: format!("{path}: {message}") },
            other => other,
        })?;
    }
    Ok((corpus, names.into_iter().cloned().collect()))
}

fn relation(rel: Rel, cap: usize) -> Reducibility {
    match rel {
        Rel::Le0 => Reducibility::Le0,
        Rel::Le2 => Reducibility::Le2,
        Rel::Lect => Reducibility::Lect(cap),
    }
}


fn execute(cli: &Cli, reducer: Reducer, out: &mut String) -> Result<i32> {
    let w = "string write";
    match &cli.command {
        Command::Check { relation: rel, lhs, rhs, files, cap, witness } => {
            let (corpus, rest) = load(cli, files)?;
            if !rest.is_empty() {
                return Err(Error::Precondition(format!("unexpected arguments: {}", rest.join(" "))));
            }
            let (a, b) = (corpus.item(lhs)?, corpus.item(rhs)?);
            let Some(found) = reducer.reduces(&a, &b, relation(*rel, *cap))? else {
                writeln!(out, "no").expect(w);
                return Ok(EXIT_NO);
            };
            match &found {
                Witness::Ct { power, .. } => writeln!(out, "yes power={power}").expect(w),
                _ => writeln!(out, "yes").expect(w),
            }
            if *witness {
                let mut c = Corpus::new();
                match &found {
                    Witness::Zero(w0) => c.add_map(w0.g.renamed("G")?)?,
                    Witness::Two(w2) | Witness::Ct { witness: w2, .. } => {
                        c.add_map(w2.g.renamed("G")?)?;
                        c.add_map(w2.f.renamed("F")?)?;
                    }
                }
                out.push_str(&c.serialize());
            }
            Ok(EXIT_YES)
        }
        Command::Invariants { item, files } => {
            let (corpus, _) = load(cli, files)?;
            if let Some(map) = corpus.map(item) {
                write_report(out, map);
            } else {
                let Item::Problem(p) = corpus.item(item)? else { unreachable!("maps were handled above") };
                writeln!(
                    out,
                    "lev1={} lev2={} bas={}",
                    level_problem(&p, Variant::One),
                    level_problem(&p, Variant::Two),
                    basesize_problem(&p)
                )
                .expect(w);
                writeln!(out, "members={}", p.len()).expect(w);
            }
            Ok(EXIT_YES)
        }
        Command::Sup { relation: rel, items, name } => {
            let (corpus, names) = load(cli, items)?;
            let loaded = names.iter().map(|n| corpus.item(n)).collect::<Result<Vec<_>>>()?;
            let maps: Option<Vec<TotalMap>> =
                loaded.iter().map(|i| if let Item::Map(m) = i { Some(m.clone()) } else { None }).collect();
            let mut c = Corpus::new();
            match (rel, maps) {
                (SupRel::Le2, Some(maps)) => c.add_map(sup2(&tagged(&names, maps)?)?.renamed(name)?.into_partial())?,
                (SupRel::Le0, Some(maps)) => {
                    let cod = common_cod(&loaded)?;
                    c.add_map(sup0(&cod, &tagged(&names, maps)?)?.renamed(name)?.into_partial())?
                }
                (SupRel::Le2, None) => {
                    let ps = tagged(&names, loaded.iter().map(Item::to_problem).collect())?;
                    c.add_problem(with_member_names(&sup2_problem(&ps, DEFAULT_MEMBER_CAP)?, name)?)?
                }
                (SupRel::Le0, None) => {
                    let cod = common_cod(&loaded)?;
                    let ps = tagged(&names, loaded.iter().map(Item::to_problem).collect())?;
                    c.add_problem(with_member_names(&sup0_problem(&cod, &ps, DEFAULT_MEMBER_CAP)?, name)?)?
                }
            }
            out.push_str(&c.serialize());
            Ok(EXIT_YES)
        }
        Command::Inf { items, name } => {
            let (corpus, names) = load(cli, items)?;
            let maps = names
                .iter()
                .map(|n| match corpus.item(n)? {
                    Item::Map(m) => Ok(m),
                    Item::Problem(_) => Err(Error::Precondition(format!("{n} is not a total map"))),
                })
                .collect::<Result<Vec<_>>>()?;
            let cod = common_cod(&maps.iter().cloned().map(Item::Map).collect::<Vec<_>>())?;
            let fam = TaggedFamily::tagged(names.iter().cloned().zip(maps).collect())?;
            let mut c = Corpus::new();
            c.add_map(inf0(&cod, &fam)?.renamed(name)?.into_partial())?;
            out.push_str(&c.serialize());
            Ok(EXIT_YES)
        }
        Command::Poset { relation: rel, items, cap, dot } => {
            let (corpus, names) = load(cli, items)?;
            let loaded = names.iter().map(|n| corpus.item(n)).collect::<Result<Vec<_>>>()?;
            let poset = degree_poset(loaded, relation(*rel, *cap), &reducer)?;
            if *dot {
                out.push_str(&poset.to_dot());
            } else {
                for (c, label) in poset.poset.labels().iter().enumerate() {
                    writeln!(out, "c{c}: {label}").expect(w);
                }
                for (hi, lo) in &poset.hasse {
                    writeln!(out, "c{hi} > c{lo}").expect(w);
                }
            }
            Ok(EXIT_YES)
        }
        Command::Decompose { item, files, thresholds } => {
            let (corpus, _) = load(cli, files)?;
            let Item::Map(f) = corpus.item(item)? else {
                return Err(Error::Precondition(format!("{item} is not a total map")));
            };
            let d = decompose_by_level(&f, thresholds, &reducer)?;
            for ((t, l), part) in thresholds.iter().zip(&d.level_sets).zip(&d.parts) {
                writeln!(out, "L{t}={{{}}} part_points={}", f.dom().names_of(l).join(","), part.dom().len()).expect(w);
            }
            writeln!(out, "verdict: {}", if d.equivalent() { "holds" } else { "fails" }).expect(w);
            Ok(EXIT_YES)
        }
        Command::Admissible { map, files } => {
            let (corpus, _) = load(cli, files)?;
            let f = corpus.map(map).ok_or_else(|| Error::Precondition(format!("no map named {map}")))?;
            if admissible(f, &reducer, DEFAULT_MEMBER_CAP)? {
                writeln!(out, "admissible").expect(w);
                Ok(EXIT_YES)
            } else {
                writeln!(out, "not admissible").expect(w);
                Ok(EXIT_NO)
            }
        }
        Command::Search { lev, bas, antichain, relation: rel, max_points, seed } => {
            let found = match (lev, bas, antichain) {
                (Some(l), Some(b), _) => search_lev_bas_witness(*l, *b, *max_points, *seed)?.map(|f| vec![f]),
                (_, _, Some(k)) => search_antichain(*k, relation(*rel, 3), *max_points, *seed, &reducer)?,
                _ => return Err(Error::Precondition("give --lev and --bas, or --antichain".into())),
            };
            let Some(maps) = found else {
                writeln!(out, "not found").expect(w);
                return Ok(EXIT_NO);
            };
            let mut c = Corpus::new();
            for (k, m) in maps.into_iter().enumerate() {
                // Generated spaces may share names, so each result gets its own.
                let dom = Arc::new(m.dom().renamed(&format!("X{k}"))?);
                let cod = Arc::new(m.cod().renamed(&format!("Y{k}"))?);
                c.add_map(TotalMap::new(m.name(), dom, cod, m.values())?.into_partial())?;
            }
            out.push_str(&c.serialize());
            Ok(EXIT_YES)
        }
    }
}

fn tagged<T>(names: &[String], items: Vec<T>) -> Result<TaggedFamily<T>> {
    TaggedFamily::tagged(names.iter().cloned().zip(items).collect())
}

fn common_cod(items: &[Item]) -> Result<Arc<crate::topo::Space>> {
    items
        .first()
        .map(|i| i.cod().clone())
        .ok_or_else(|| Error::Precondition("at least one item is required".into()))
}

/// Gives the members of a constructed problem distinct names.
fn with_member_names(p: &Problem, name: &str) -> Result<Problem> {
    let members = p
        .members()
        .iter()
        .enumerate()
        .map(|(k, m)| m.renamed(&format!("{name}.m{k}")))
        .collect::<Result<Vec<PartialMap>>>()?;
    Problem::new(name, p.dom().clone(), p.cod().clone(), members)
}

fn write_report(out: &mut String, f: &PartialMap) {
    let w = "string write";
    let r = report(f);
    writeln!(out, "lev1={} lev2={} bas={}", r.lev1, r.lev2, r.bas).expect(w);
    let dom = f.dom();
    for (x, (l1, l2)) in &r.pointwise {
        let part = r.coloring.colors[*x].expect("defined point");
        writeln!(out, "  {} lev1={l1} lev2={l2} part={part}", dom.point(*x)).expect(w);
    }
    for (label, chain) in [("L1", &r.level_sets_1), ("L2", &r.level_sets_2)] {
        let sets: Vec<String> = chain.sets.iter().map(|s| format!("{{{}}}", dom.names_of(s).join(","))).collect();
        let tail = if chain.terminates { "" } else { " (fixed point)" };
        writeln!(out, "{label}: {}{tail}", sets.join(" ")).expect(w);
    }
}
