use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wellhued::atlas::{search, verify_theorem, Filter, TheoremId, Universe, VerifyError};
use wellhued::chroma::{hue_profile_with_limit, realize_sequence, realizing_clique_sizes, PROFILE_MAX_ORDER};
use wellhued::cotree::{
    build_cotree, is_well_equi_hued_cograph, procedure_values, uniform_assignment_property, Procedure,
};
use wellhued::families::{
    conjecture_alpha_predicate, corona_verdict, thm222_predicate, thm_2k1_predicate, thm_3k_predicate,
};
use wellhued::graph::{from_edge_list, from_graph6, to_graph6, Graph, GENERATOR_MAX_ORDER};

#[derive(Parser)]
#[command(name = "wellhued", version, about = "Exact analysis of well-hued graphs")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Hue profile and family verdicts of one graph
    Check(GraphArgs),
    /// The hue sequence, or where it breaks
    Sequence(GraphArgs),
    /// Profile a stream of graphs and report the rows passing the filters
    Search(SearchArgs),
    /// Cotree, procedure values and uniform assignment verdict
    Cotree(GraphArgs),
    /// Exhaustively check one characterization theorem
    Verify(VerifyArgs),
    /// A graph realizing a hue sequence
    Realize(RealizeArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Inline graph6 string
    #[arg(long)]
    g6: Option<String>,
    /// Graph file (edge list or graph6); `-` reads stdin
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct GraphArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Largest order accepted for the hue profile
    #[arg(long, default_value_t = PROFILE_MAX_ORDER)]
    max_order: usize,
}

#[derive(Args)]
#[group(id = "universe", required = true, multiple = false)]
struct SearchSource {
    #[arg(long)]
    g6: Option<String>,
    /// graph6 stream, one graph per line, or a single edge list
    #[arg(long)]
    file: Option<PathBuf>,
    /// Every connected graph with 2 <= n <= N
    #[arg(long, value_name = "N")]
    gen: Option<usize>,
}

#[derive(Args)]
struct SearchArgs {
    #[command(flatten)]
    source: SearchSource,
    /// Flag that must hold; prefix with `!` to require it to fail
    #[arg(long = "filter", value_name = "F", allow_hyphen_values = true)]
    filters: Vec<String>,
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
    #[arg(long, value_name = "K")]
    workers: Option<usize>,
    /// Input graphs above this order are reported and skipped
    #[arg(long, default_value_t = PROFILE_MAX_ORDER)]
    max_order: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// thm32, thm222, thm2k1, thm3k, cotree_iff, complement_closure,
    /// homogeneous or join_union
    theorem: String,
    #[arg(long, default_value_t = GENERATOR_MAX_ORDER)]
    max_order: usize,
    #[arg(long, value_name = "K")]
    workers: Option<usize>,
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
}

#[derive(Args)]
struct RealizeArgs {
    /// Sequence terms a_1 a_2 ...
    #[arg(required = true, num_args = 1..)]
    terms: Vec<usize>,
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
}

enum Failure {
    Usage(String),
    Input(String),
    Refuted,
}

impl Failure {
    fn report(&self) -> ExitCode {
        match self {
            Failure::Usage(m) => {
                eprintln!("error: usage: {m}");
                ExitCode::from(1)
            }
            Failure::Input(m) => {
                eprintln!("error: input: {m}");
                ExitCode::from(2)
            }
            Failure::Refuted => {
                eprintln!("error: verify: counterexamples found");
                ExitCode::from(3)
            }
        }
    }
}

type Outcome = Result<String, Failure>;

fn read_source(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// The first meaningful line opens an edge list when it starts with a digit
/// followed by whitespace.
fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| {
            let digits = l.bytes().take_while(u8::is_ascii_digit).count();
            digits > 0 && l.as_bytes().get(digits).is_some_and(u8::is_ascii_whitespace)
        })
}

fn parse_single(text: &str) -> Result<Graph, Failure> {
    if looks_like_edge_list(text) {
        return from_edge_list(text).map_err(|e| Failure::Input(e.to_string()));
    }
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let first = lines
        .next()
        .ok_or_else(|| Failure::Input("no graph in input".into()))?;
    if lines.next().is_some() {
        return Err(Failure::Input("expected one graph, found several lines".into()));
    }
    from_graph6(first).map_err(|e| Failure::Input(format!("graph6: {e}")))
}

fn load_graph(source: &Source) -> Result<Graph, Failure> {
    match (&source.g6, &source.file) {
        (Some(s), _) => parse_single(s),
        (None, Some(path)) => parse_single(&read_source(path)?),
        (None, None) => Err(Failure::Usage("one of --g6 or --file is required".into())),
    }
}

fn lines(values: impl IntoIterator<Item = Value>) -> String {
    values.into_iter().map(|v| v.to_string() + "\n").collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn family_verdicts(g: &Graph) -> Vec<Value> {
    let mut out = vec![corona_verdict(g).to_json(), thm222_predicate(g).to_json()];
    out.push(thm_2k1_predicate(g).to_json());
    for k in 2..=g.order() / 3 {
        let v = thm_3k_predicate(g, k).expect("k in range");
        out.push(json!({
            "predicate": v.predicate,
            "k": k,
            "holds": v.holds(),
            "witness": v.to_json()["witness"],
        }));
    }
    out.push(conjecture_alpha_predicate(g).to_json());
    out
}

fn check(args: &GraphArgs) -> Outcome {
    let g = load_graph(&args.source)?;
    let p = hue_profile_with_limit(&g, args.max_order).map_err(|e| Failure::Input(e.to_string()))?;
    let verdicts = family_verdicts(&g);
    Ok(match args.format.unwrap_or(Format::Json) {
        Format::Json => lines(std::iter::once(p.to_json()).chain(verdicts)),
        Format::Tsv => {
            let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            let mut out = format!("graph6\t{}\nn\t{}\nchi\t{}\n", to_graph6(&g), p.order, p.chromatic_number);
            out += &format!("sequence\t{}\n", p.sequence.as_deref().map_or("-".into(), join));
            for (k, orders) in p.maximal_orders.iter().enumerate() {
                out += &format!("maximal_orders_{}\t{}\n", k + 1, join(orders));
            }
            for (name, flag) in [
                ("well_covered", p.well_covered),
                ("well_bicovered", p.well_bicovered),
                ("well_hued", p.well_hued),
                ("well_equi_hued", p.well_equi_hued),
            ] {
                out += &format!("{name}\t{}\n", yes_no(flag));
            }
            for v in verdicts {
                let name = match v.get("k") {
                    Some(k) => format!("{}_k{}", v["predicate"].as_str().unwrap_or(""), k),
                    None => v["predicate"].as_str().unwrap_or("").to_string(),
                };
                out += &format!("{name}\t{}\n", yes_no(v["holds"] == json!(true)));
            }
            out
        }
    })
}

fn sequence(args: &GraphArgs) -> Outcome {
    let g = load_graph(&args.source)?;
    let p = hue_profile_with_limit(&g, args.max_order).map_err(|e| Failure::Input(e.to_string()))?;
    let words = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    Ok(match (&p.sequence, p.first_unhued_k()) {
        (Some(seq), _) => match args.format.unwrap_or(Format::Tsv) {
            Format::Tsv => words(seq) + "\n",
            Format::Json => lines([json!({ "well_hued": true, "sequence": seq })]),
        },
        (None, Some(k)) => {
            let orders = p.orders_at(k);
            match args.format.unwrap_or(Format::Tsv) {
                Format::Tsv => format!("not well-hued: k = {k} has maximal orders {}\n", words(&orders)),
                Format::Json => lines([json!({ "well_hued": false, "k": k, "maximal_orders": orders })]),
            }
        }
        (None, None) => unreachable!("a profile without a sequence has an unhued k"),
    })
}

fn cotree(args: &GraphArgs) -> Outcome {
    let g = load_graph(&args.source)?;
    let format = args.format.unwrap_or(Format::Tsv);
    let Ok(t) = build_cotree(&g) else {
        return Ok(match format {
            Format::Tsv => "cograph\tno\n".to_string(),
            Format::Json => lines([json!({ "cograph": false })]),
        });
    };
    let p1 = procedure_values(&t, Procedure::One);
    let p2 = procedure_values(&t, Procedure::Two);
    let uap = uniform_assignment_property(&t);
    Ok(match format {
        Format::Tsv => format!(
            "cograph\tyes\ncotree\t{t}\nprocedure_1\t{}\nprocedure_2\t{}\nuniform_assignment\t{}\nwell_equi_hued\t{}\n",
            p1.annotate(&t),
            p2.annotate(&t),
            yes_no(uap),
            yes_no(is_well_equi_hued_cograph(&t)),
        ),
        Format::Json => lines([json!({
            "cograph": true,
            "cotree": t.to_string(),
            "procedure_1": p1.values,
            "procedure_2": p2.values,
            "uniform_assignment": uap,
            "well_equi_hued": is_well_equi_hued_cograph(&t),
        })]),
    })
}

fn run_search(args: &SearchArgs) -> Outcome {
    let filters = args
        .filters
        .iter()
        .map(|f| f.parse::<Filter>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let mut universe = match (&args.source.g6, &args.source.file, args.source.gen) {
        (_, _, Some(n)) => {
            Universe::connected(2, n).map_err(|e| Failure::Usage(format!("--gen {}: order above the generator limit", e.0)))?
        }
        (Some(s), _, _) => Universe::from_graphs("inline graph6", vec![parse_single(s)?]),
        (None, Some(path), None) => {
            let text = read_source(path)?;
            let name = match path.to_str() {
                Some("-") => "stdin".to_string(),
                _ => path.display().to_string(),
            };
            if looks_like_edge_list(&text) {
                Universe::from_graphs(name, vec![parse_single(&text)?])
            } else {
                Universe::from_graph6_lines(name, &text)
            }
        }
        (None, None, None) => return Err(Failure::Usage("no input source".into())),
    };
    universe.limit_order(args.max_order);
    let report = search(&universe, &filters, args.workers);
    let out = match args.format {
        Format::Tsv => report.to_tsv(),
        Format::Json => report.to_jsonl(),
    };
    let stderr = io::stderr();
    let mut err = stderr.lock();
    for e in &report.errors {
        let _ = writeln!(err, "error: input: line {}: {}", e.line, e.message);
    }
    if report.errors.is_empty() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Input(format!("{} input graphs skipped", report.errors.len())))
    }
}

fn verify(args: &VerifyArgs) -> Outcome {
    let id: TheoremId = args
        .theorem
        .parse()
        .map_err(|e: VerifyError| Failure::Usage(e.to_string()))?;
    let report = verify_theorem(id, args.max_order, args.workers).map_err(|e| Failure::Usage(e.to_string()))?;
    let out = match args.format {
        Format::Tsv => report.to_text(),
        Format::Json => lines([report.to_json()]),
    };
    if report.verified() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Refuted)
    }
}

fn realize(args: &RealizeArgs) -> Outcome {
    let g = realize_sequence(&args.terms).map_err(|e| Failure::Input(e.to_string()))?;
    let sizes = realizing_clique_sizes(&args.terms).expect("realized above");
    Ok(match args.format {
        Format::Tsv => format!("{}\nconnected: {}\n", to_graph6(&g), yes_no(g.is_connected())),
        Format::Json => lines([json!({
            "sequence": args.terms,
            "graph6": to_graph6(&g),
            "clique_sizes": sizes,
            "connected": g.is_connected(),
        })]),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                let _ = e.print();
            }
            let first = e.to_string().lines().next().unwrap_or("").trim_start_matches("error: ").to_string();
            return Failure::Usage(first).report();
        }
    };
    let outcome = match &cli.verb {
        Verb::Check(a) => check(a),
        Verb::Sequence(a) => sequence(a),
        Verb::Search(a) => run_search(a),
        Verb::Cotree(a) => cotree(a),
        Verb::Verify(a) => verify(a),
        Verb::Realize(a) => realize(a),
    };
    match outcome {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => f.report(),
    }
}
