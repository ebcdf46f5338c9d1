use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ilo_core::enumerate::{enumerate_tables, EnumerationRequest};
use ilo_core::json::{AnySplitEpi, Document, ModelDoc};
use ilo_core::points::{group_index, model_index, IndexWitness};
use ilo_core::theorems::{run_suite, suite_names, TheoremConfig};
use ilo_core::{brace, classify, iso, Error, StructureClass};

#[derive(Parser)]
#[command(name = "ilo", version, about = "Enumerate, classify and check finite ILO models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every table of a class as JSON lines, then a summary line.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        class: StructureClass,
        #[arg(long)]
        up_to_iso: bool,
        /// `i/k`: keep the i-th of k shards.
        #[arg(long, value_parser = parse_shard)]
        shard: Option<(usize, usize)>,
    },
    /// Print the classes a model document belongs to.
    Classify { file: PathBuf },
    /// Evaluate an index formula on a split epimorphism document.
    VerifyIndex {
        #[arg(long)]
        epi: PathBuf,
        #[arg(long, value_enum)]
        formula: Formula,
    },
    /// Run the property suites.
    CheckTheorems {
        #[arg(long)]
        max_order: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        group_order: usize,
        /// Run only the named suites.
        #[arg(long)]
        suite: Vec<String>,
    },
    /// Labeled and isomorphism-class counts with one representative per line.
    Census {
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        class: Vec<StructureClass>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Formula {
    Group,
    Model,
    Brace,
}

fn parse_shard(s: &str) -> Result<(usize, usize), String> {
    let (i, k) = s.split_once('/').ok_or("expected i/k")?;
    let i = i.trim().parse().map_err(|_| format!("bad shard index `{i}`"))?;
    let k = k.trim().parse().map_err(|_| format!("bad shard count `{k}`"))?;
    Ok((i, k))
}

enum Failure {
    Malformed(String),
    Assertion { proposition: String, counterexample: Value },
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Malformed(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Out<'a> = BufWriter<io::StdoutLock<'a>>;

fn line(out: &mut Out<'_>, value: &Value) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")
}

fn max_order_override() -> Result<Option<usize>, Failure> {
    match std::env::var("ILO_MAX_ORDER") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure::Malformed(format!("ILO_MAX_ORDER is not a number: `{v}`"))),
        Err(_) => Ok(None),
    }
}

fn read_document(path: &Path) -> Result<Document, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Malformed(format!("{}: {e}", path.display())))?;
    Ok(text.parse()?)
}

fn run_enumerate(
    out: &mut Out<'_>,
    order: usize,
    class: StructureClass,
    up_to_iso: bool,
    shard: Option<(usize, usize)>,
) -> Result<(), Failure> {
    let mut req = EnumerationRequest::new(order, class);
    if up_to_iso {
        req = req.up_to_iso();
    }
    if let Some((i, k)) = shard {
        req = req.shard(i, k);
    }
    if let Some(max) = max_order_override()? {
        req = req.with_max_order(max);
    }
    let mut count = 0u64;
    for table in enumerate_tables(&req)? {
        let doc = ModelDoc {
            order,
            d: table.d,
            unit: table.unit,
            flags: table.flags.into_iter().collect(),
        };
        let doc = if class.requires_ilo() { Document::Ilo(doc) } else { Document::Magma(doc) };
        line(out, &json!(doc))?;
        count += 1;
    }
    let shard = shard.map(|(i, k)| format!("{i}/{k}"));
    line(
        out,
        &json!({ "summary": { "class": class, "order": order, "up_to_iso": up_to_iso, "shard": shard, "count": count } }),
    )?;
    Ok(())
}

fn run_classify(out: &mut Out<'_>, file: &Path) -> Result<(), Failure> {
    let doc = read_document(file)?;
    let (d, unit) = doc.classifiable()?;
    let flags = classify(&d, unit);
    line(out, &json!({ "kind": doc.kind(), "order": d.order(), "unit": unit, "flags": flags }))?;
    Ok(())
}

fn witness_failure(name: &str, w: &IndexWitness) -> Option<Failure> {
    (!(w.is_index && w.rho_inverse_verified)).then(|| Failure::Assertion {
        proposition: name.to_string(),
        counterexample: json!(w),
    })
}

fn run_verify_index(out: &mut Out<'_>, epi: &Path, formula: Formula) -> Result<(), Failure> {
    let Document::SplitEpi(doc) = read_document(epi)? else {
        return Err(Failure::Malformed("expected a `split-epi` document".into()));
    };
    let epi = doc.to_split_epi()?;
    match (formula, epi) {
        (Formula::Group, AnySplitEpi::Group(e)) => {
            let w = group_index(&e);
            line(out, &json!({ "formula": "group", "kernel": e.kernel(), "witness": w }))?;
            witness_failure("semi-direct-index", &w).map_or(Ok(()), Err)
        }
        (Formula::Model, AnySplitEpi::Model(e)) => {
            let w = model_index(&e)?;
            line(out, &json!({ "formula": "model", "kernel": e.kernel(), "witness": w }))?;
            witness_failure("semi-direct-index", &w).map_or(Ok(()), Err)
        }
        (Formula::Brace, AnySplitEpi::Brace(e)) => {
            let (ws, wc) = brace::brace_indexes(&e);
            let differ: Vec<usize> = (0..ws.gamma.len()).filter(|&x| ws.gamma[x] != wc.gamma[x]).collect();
            line(
                out,
                &json!({ "formula": "brace", "kernel": e.kernel(), "star": ws, "circ": wc, "differ_at": differ }),
            )?;
            Ok(())
        }
        _ => Err(Failure::Malformed("formula does not match the carriers of the document".into())),
    }
}

fn run_check_theorems(out: &mut Out<'_>, cfg: &TheoremConfig, only: &[String]) -> Result<(), Failure> {
    let names: Vec<&str> = if only.is_empty() {
        suite_names().collect()
    } else {
        for name in only {
            if !suite_names().any(|n| n == name) {
                return Err(Failure::Malformed(format!("unknown suite `{name}`")));
            }
        }
        suite_names().filter(|n| only.iter().any(|o| o == n)).collect()
    };
    let mut first_failure = None;
    let (mut passed, mut failed) = (0, 0);
    for name in names {
        let outcome = run_suite(name, cfg).expect("listed suite");
        line(out, &json!(outcome))?;
        out.flush()?;
        if outcome.passed() {
            passed += 1;
        } else {
            failed += 1;
            if first_failure.is_none() {
                first_failure = Some(Failure::Assertion {
                    proposition: name.to_string(),
                    counterexample: outcome.counterexample.clone().unwrap_or(Value::Null),
                });
            }
        }
    }
    line(
        out,
        &json!({ "summary": { "max_order": cfg.max_order, "group_order": cfg.group_order, "seed": cfg.seed, "passed": passed, "failed": failed } }),
    )?;
    first_failure.map_or(Ok(()), Err)
}

fn run_census(out: &mut Out<'_>, max_order: usize, classes: &[StructureClass]) -> Result<(), Failure> {
    let classes = if classes.is_empty() {
        vec![StructureClass::Hypersubtraction, StructureClass::Quandle, StructureClass::Latin]
    } else {
        classes.to_vec()
    };
    let cap = max_order_override()?;
    for &class in &classes {
        if !class.requires_ilo() {
            return Err(Error::NotIloClass(class).into());
        }
        for order in 1..=max_order {
            let mut req = EnumerationRequest::new(order, class);
            if let Some(max) = cap {
                req = req.with_max_order(max);
            }
            let models: Vec<_> = ilo_core::enumerate::enumerate(&req)?.collect();
            let classes = iso::iso_classes(&models);
            for (rep, size) in &classes {
                line(out, &json!({ "class": class, "order": order, "size": size, "model": Document::Ilo(ModelDoc::from_model(rep)) }))?;
            }
            line(
                out,
                &json!({ "class": class, "order": order, "labeled": models.len(), "iso": classes.len() }),
            )?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match &cli.command {
        Command::Enumerate { order, class, up_to_iso, shard } => {
            run_enumerate(&mut out, *order, *class, *up_to_iso, *shard)
        }
        Command::Classify { file } => run_classify(&mut out, file),
        Command::VerifyIndex { epi, formula } => run_verify_index(&mut out, epi, *formula),
        Command::CheckTheorems { max_order, seed, group_order, suite } => {
            let mut cfg = TheoremConfig::new(*max_order);
            cfg.seed = *seed;
            cfg.group_order = *group_order;
            run_check_theorems(&mut out, &cfg, suite)
        }
        Command::Census { max_order, class } => run_census(&mut out, *max_order, class),
    };
    let code = match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => return ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("ilo: {e}");
            return ExitCode::from(2);
        }
        Err(Failure::Malformed(message)) => {
            let _ = line(&mut out, &json!({ "error": { "kind": "malformed-input", "message": message } }));
            ExitCode::from(2)
        }
        Err(Failure::Assertion { proposition, counterexample }) => {
            let _ = line(
                &mut out,
                &json!({ "error": { "kind": "assertion-failed", "proposition": proposition, "counterexample": counterexample } }),
            );
            ExitCode::from(1)
        }
    };
    let _ = out.flush();
    code
}
