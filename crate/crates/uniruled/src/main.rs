//! Batch command-line front end. Every subcommand is a thin wrapper over a
//! library operation; outputs are deterministic and available as a table
//! (default) or JSON. Exit codes: 0 success, 2 precondition failure, 3 data
//! error, 4 internal invariant breach.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use num::rational::BigRational;
use serde_json::{json, Value};

use uniruled::error::{Error, Result};
use uniruled::graph::GraphContext;
use uniruled::io;
use uniruled::order::GraphOrd;
use uniruled::poset::GraphPoset;
use uniruled::surface::{rational_to_string, DivisorClass, SurfaceModel, SymplecticForm};
use uniruled::{classes, graph_compare, lower_set, GraphList};

#[derive(Parser)]
#[command(
    name = "uniruled",
    about = "Exact enumeration, reduction, ordering and solving for curve \
             classes on rational surfaces",
    version
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Determinism seed; reserved, the core is deterministic without it.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List the fiber classes on the blow-up of k points (k <= 8).
    FiberClasses {
        k: usize,
        /// List every permutation of the exceptional coefficients instead
        /// of one descending representative per orbit.
        #[arg(long)]
        expand_permutations: bool,
    },
    /// List the -1 classes on the blow-up of k points.
    MinusOne {
        k: usize,
        /// Bound on |a| for k >= 9, where the class list is infinite.
        #[arg(long)]
        a_bound: Option<i64>,
    },
    /// Cremona-reduce a blow-up class given as "(a|b1,...,bk)".
    Reduce { class: String },
    /// Fiber classes of minimal positive area under a form read from a JSON
    /// file of k+1 rational strings.
    Minimal { form_file: PathBuf, k: usize },
    /// Check the necessary uniruledness conditions on a blow-up class.
    CheckUniruled {
        class: String,
        /// JSON array of witness coefficient arrays; defaults to the -1
        /// classes plus the hyperplane.
        witness_file: Option<PathBuf>,
    },
    /// Pairwise order matrix for graphs listed in a JSON file
    /// {"ctx": ..., "graphs": [...], "genus_zero": bool}.
    Compare { graphs_file: PathBuf },
    /// All standard graphs at or below a root graph, as a poset dump.
    LowerSet {
        root_file: PathBuf,
        ctx_file: PathBuf,
        #[arg(long)]
        genus_zero: bool,
    },
    /// The restricted index of genus-zero graphs with a divisor point
    /// insertion.
    DptIndex {
        ctx_file: PathBuf,
        /// Table key of the minimal divisor class of area V.
        #[arg(long)]
        min_class: String,
        /// Cap on divisor tails per component.
        #[arg(long, default_value_t = 8)]
        max_insertions: usize,
    },
    /// Apply (or invert) a triangular map to a vector.
    Solve {
        map_file: PathBuf,
        vector_file: PathBuf,
        /// Solve T v = w instead of computing w = T v.
        #[arg(long)]
        invert: bool,
        /// Optional context file enabling full order validation of the map.
        #[arg(long)]
        ctx: Option<PathBuf>,
        #[arg(long)]
        genus_zero: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code());
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let format = cli.format;
    match cli.command {
        Command::FiberClasses {
            k,
            expand_permutations,
        } => {
            let fibers = classes::enumerate_fiber_classes(k, expand_permutations)?;
            let class_list: Vec<&DivisorClass> = fibers.iter().map(|f| f.class()).collect();
            match format {
                Format::Table => {
                    for c in &class_list {
                        println!("{}", c.to_paren());
                    }
                    if k == 0 {
                        let note = classes::plane_minimal_uniruled();
                        println!(
                            "note: no fiber classes on the plane; the minimal uniruled \
                             class is {} with {} point insertion",
                            note.class, note.insertions
                        );
                    }
                    println!("count: {}", class_list.len());
                }
                Format::Json => print_json(&Value::Array(
                    class_list.iter().map(|c| io::class_to_value(c)).collect(),
                )),
            }
        }
        Command::MinusOne { k, a_bound } => {
            let list = classes::enumerate_minus_one_classes(k, a_bound)?;
            match format {
                Format::Table => {
                    for m in &list {
                        println!("{}", m.class().to_paren());
                    }
                    println!("count: {}", list.len());
                }
                Format::Json => print_json(&Value::Array(
                    list.iter().map(|m| io::class_to_value(m.class())).collect(),
                )),
            }
        }
        Command::Reduce { class } => {
            let input = DivisorClass::parse_blowup(&class)?;
            let (reduced, log) = classes::cremona_reduce(&input)?;
            match format {
                Format::Table => {
                    println!("input: {}", input.to_paren());
                    for step in &log {
                        println!(
                            "move: {} -> {}",
                            step.input.to_paren(),
                            step.output.to_paren()
                        );
                    }
                    println!("reduced: {}", reduced.to_paren());
                }
                Format::Json => print_json(&json!({
                    "input": io::class_to_value(&input),
                    "moves": log.iter().map(|s| json!({
                        "from": io::class_to_value(&s.input),
                        "to": io::class_to_value(&s.output),
                    })).collect::<Vec<_>>(),
                    "reduced": io::class_to_value(&reduced),
                })),
            }
        }
        Command::Minimal { form_file, k } => {
            let value = read_json(&form_file)?;
            let parts = value
                .as_array()
                .ok_or_else(|| Error::Parse("form file must be a JSON array".into()))?;
            let coeffs: Vec<BigRational> = parts
                .iter()
                .map(io::rational_from_value)
                .collect::<Result<_>>()?;
            let form = SymplecticForm::new(SurfaceModel::blowup(k), coeffs)?;
            let minimizers = classes::minimal_fiber_class(&form, k)?;
            let area = form.area(minimizers[0].class())?;
            match format {
                Format::Table => {
                    for f in &minimizers {
                        println!("{}", f.class().to_paren());
                    }
                    println!("area: {}", rational_to_string(&area));
                    println!("count: {}", minimizers.len());
                }
                Format::Json => print_json(&json!({
                    "area": rational_to_string(&area),
                    "classes": minimizers
                        .iter()
                        .map(|f| io::class_to_value(f.class()))
                        .collect::<Vec<_>>(),
                })),
            }
        }
        Command::CheckUniruled {
            class,
            witness_file,
        } => {
            let input = DivisorClass::parse_blowup(&class)?;
            let witnesses = match witness_file {
                None => None,
                Some(path) => {
                    let value = read_json(&path)?;
                    let array = value
                        .as_array()
                        .ok_or_else(|| Error::Parse("witness file must be a JSON array".into()))?;
                    Some(
                        array
                            .iter()
                            .map(|v| io::class_from_value(v, input.model()))
                            .collect::<Result<Vec<_>>>()?,
                    )
                }
            };
            let report = classes::uniruled_necessary(&input, witnesses.as_deref())?;
            match format {
                Format::Table => {
                    println!("class: {}", input.to_paren());
                    println!("c1_ok: {}", report.c1_ok);
                    println!("square_ok: {}", report.square_ok);
                    println!("pairing_ok: {}", report.pairing_ok);
                    for w in &report.violating_witnesses {
                        println!("violation: {}", w.to_paren());
                    }
                    println!(
                        "verdict: {}",
                        if report.passes_all() {
                            "necessary conditions hold"
                        } else {
                            "not uniruled"
                        }
                    );
                }
                Format::Json => print_json(&json!({
                    "class": io::class_to_value(&input),
                    "c1_ok": report.c1_ok,
                    "square_ok": report.square_ok,
                    "pairing_ok": report.pairing_ok,
                    "violating_witnesses": report
                        .violating_witnesses
                        .iter()
                        .map(io::class_to_value)
                        .collect::<Vec<_>>(),
                })),
            }
        }
        Command::Compare { graphs_file } => {
            let value = read_json(&graphs_file)?;
            let object = value
                .as_object()
                .ok_or_else(|| Error::Parse("graphs file must be a JSON object".into()))?;
            let ctx: GraphContext = serde_json::from_value(
                object
                    .get("ctx")
                    .ok_or_else(|| Error::Parse("graphs file is missing \"ctx\"".into()))?
                    .clone(),
            )
            .map_err(|e| Error::Parse(format!("bad context: {e}")))?;
            ctx.validate()?;
            let graphs: Vec<GraphList> = serde_json::from_value(
                object
                    .get("graphs")
                    .ok_or_else(|| Error::Parse("graphs file is missing \"graphs\"".into()))?
                    .clone(),
            )
            .map_err(|e| Error::Parse(format!("bad graph array: {e}")))?;
            let genus_zero = object
                .get("genus_zero")
                .and_then(Value::as_bool)
                .unwrap_or(false);
            let mut matrix = Vec::with_capacity(graphs.len());
            for a in &graphs {
                let mut row = Vec::with_capacity(graphs.len());
                for b in &graphs {
                    row.push(graph_compare(a, b, &ctx, genus_zero)?);
                }
                matrix.push(row);
            }
            match format {
                Format::Table => {
                    for (i, g) in graphs.iter().enumerate() {
                        println!("{i}: {}", g.canonical_key());
                    }
                    for row in &matrix {
                        let cells: Vec<&str> = row.iter().map(|o| ord_symbol(*o)).collect();
                        println!("{}", cells.join(" "));
                    }
                }
                Format::Json => print_json(&json!({
                    "graphs": graphs,
                    "order": matrix
                        .iter()
                        .map(|row| row.iter().map(|o| ord_symbol(*o)).collect::<Vec<_>>())
                        .collect::<Vec<_>>(),
                })),
            }
        }
        Command::LowerSet {
            root_file,
            ctx_file,
            genus_zero,
        } => {
            let root: GraphList = serde_json::from_value(read_json(&root_file)?)
                .map_err(|e| Error::Parse(format!("bad root graph: {e}")))?;
            let ctx = read_context(&ctx_file)?;
            let poset = lower_set(&root, &ctx, genus_zero)?;
            print_poset(&poset, format);
        }
        Command::DptIndex {
            ctx_file,
            min_class,
            max_insertions,
        } => {
            let ctx = read_context(&ctx_file)?;
            let poset = uniruled::build_dpt_index(&ctx, &min_class, max_insertions)?;
            print_poset(&poset, format);
        }
        Command::Solve {
            map_file,
            vector_file,
            invert,
            ctx,
            genus_zero,
        } => {
            let map_value = read_json(&map_file)?;
            let ctx_data = match ctx {
                Some(path) => Some(read_context(&path)?),
                None => None,
            };
            let map = io::map_from_value(&map_value, ctx_data.as_ref().map(|c| (c, genus_zero)))?;
            let vector_value = read_json(&vector_file)?;
            let vector = io::vector_from_value(&vector_value, Arc::clone(map.poset()))?;
            let result = if invert {
                map.invert(&vector)?
            } else {
                map.apply(&vector)?
            };
            match format {
                Format::Table => {
                    for (i, v) in result.values().iter().enumerate() {
                        println!("{i}: {}", rational_to_string(v));
                    }
                }
                Format::Json => print_json(&io::vector_to_value(&result)),
            }
        }
    }
    Ok(())
}

fn ord_symbol(o: GraphOrd) -> &'static str {
    match o {
        GraphOrd::Less => "<",
        GraphOrd::Greater => ">",
        GraphOrd::Equal => "=",
        GraphOrd::Incomparable => "#",
    }
}

fn print_poset(poset: &GraphPoset, format: Format) {
    match format {
        Format::Table => {
            for (i, key) in poset.canonical_keys().iter().enumerate() {
                println!("{i}: {key}");
            }
            println!("count: {}", poset.len());
        }
        Format::Json => print_json(&io::poset_to_value(poset)),
    }
}

fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("valid JSON")
    );
}

fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("bad JSON in {}: {e}", path.display())))
}

fn read_context(path: &Path) -> Result<GraphContext> {
    let value = read_json(path)?;
    let ctx: GraphContext = serde_json::from_value(value)
        .map_err(|e| Error::Parse(format!("bad context in {}: {e}", path.display())))?;
    ctx.validate()?;
    Ok(ctx)
}
