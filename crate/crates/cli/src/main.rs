//! `entourage`: classify and transform finite entourage spaces from text files.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_rational::Rational64;
use serde_json::{json, Value};

use entourage::algebra::{classify_magma, Side};
use entourage::format::{self, FormatError, NamedMagma, Workspace};
use entourage::functor::{apply_functor, is_weakly_soft, quotient, FunctorTag, Surjection};
use entourage::graph::{cayley, graphic_structure, word_weight};
use entourage::hyper::{exp_space, hyper_non_empty, hyper_space};
use entourage::morphism::{sym_coarse_equivalence, EquivalenceVerdict};
use entourage::space::{FiniteEntourageSpace, StructureClass};
use entourage::weight::{classify_weight, probe_inverse_bound, structure_from_weight, FamilyKind, Verdict, Weight, WeightFamily};
use entourage::{Error, PointSet};

#[derive(Parser)]
#[command(name = "entourage", version, about = "Finite entourage spaces from the command line")]
struct Cli {
    /// Print a JSON report with sorted keys.
    #[arg(long, global = true, conflicts_with = "dot")]
    json: bool,
    /// Print Graphviz DOT where the command has a relation to draw.
    #[arg(long, global = true)]
    dot: bool,
    /// Exit with status 1 when the command's verdict is false.
    #[arg(long, global = true)]
    assert: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Input {
    file: PathBuf,
    /// Block to use when the file holds several.
    #[arg(long)]
    name: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Structure class, boundedness, connectivity and geometry.
    Classify {
        #[command(flatten)]
        input: Input,
        /// Verdict: the class equals this one.
        #[arg(long)]
        expect: Option<String>,
    },
    /// Apply SYM, USYM, W, WSEMI or J and print the resulting space.
    Functor {
        tag: String,
        #[command(flatten)]
        input: Input,
    },
    /// Morphism profile of a map.
    Map {
        #[command(flatten)]
        input: Input,
    },
    /// Decide whether a map is a Sym-coarse equivalence.
    Equiv {
        #[command(flatten)]
        input: Input,
    },
    /// Quotient through a partition such as "a b | c"; unlisted points stay alone.
    Quotient {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        partition: String,
        #[arg(long, default_value = "quasi-coarse")]
        class: String,
    },
    /// Bounded search for an inverse radius on an integer family.
    Probe {
        #[arg(long)]
        family: String,
        /// Integer window `lo:hi`.
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        #[arg(long)]
        radius: String,
        #[arg(long)]
        smax: String,
    },
    /// Word quasi-metric of a monoid for a generating set.
    WordMetric {
        #[command(flatten)]
        input: Input,
        /// Comma-separated generators.
        #[arg(long)]
        gens: String,
        #[arg(long, default_value = "left")]
        side: String,
    },
    /// Hyperstructure on the powerset of a space.
    Hyper {
        #[command(flatten)]
        input: Input,
        /// Use the semi-coarse hyperstructure instead.
        #[arg(long)]
        exp: bool,
    },
}

enum Failure {
    Parse(String),
    Semantic(String),
    Cap(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Semantic(_) => 3,
            Failure::Cap(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Semantic(m) | Failure::Cap(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeCap { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Semantic(e.to_string()),
        }
    }
}

fn load(path: &Path) -> Result<Workspace, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    format::parse_workspace(&text).map_err(|e| {
        let msg = format!("{}:{e}", path.display());
        match e {
            FormatError::Parse { .. } => Failure::Parse(msg),
            FormatError::Semantic {
                source: Error::SizeCap { .. },
                ..
            } => Failure::Cap(msg),
            FormatError::Semantic { .. } => Failure::Semantic(msg),
        }
    })
}

fn pick<'a, T>(items: &'a [(String, T)], name: Option<&str>, kind: &str) -> Result<(&'a str, &'a T), Failure> {
    let found = match name {
        Some(n) => items.iter().find(|(k, _)| k == n),
        None => items.first(),
    };
    found
        .map(|(k, v)| (k.as_str(), v))
        .ok_or_else(|| Failure::Semantic(format!("no {kind} block{}", name.map_or(String::new(), |n| format!(" named `{n}`")))))
}

fn has<T>(items: &[(String, T)], name: Option<&str>) -> bool {
    match name {
        Some(n) => items.iter().any(|(k, _)| k == n),
        None => !items.is_empty(),
    }
}

fn parse_class(s: &str) -> Result<StructureClass, Failure> {
    StructureClass::parse(s).ok_or_else(|| Failure::Semantic(format!("unknown structure class `{s}`")))
}

struct Report {
    text: String,
    json: Value,
    dot: Option<String>,
    verdict: bool,
}

fn space_report(name: &str, s: &FiniteEntourageSpace) -> Result<Value, Failure> {
    let b = s.boundedness(&s.carrier().all())?;
    Ok(json!({
        "name": name,
        "points": s.carrier().labels(),
        "class": s.classify(),
        "relation": s.max_ent().classify_relation(),
        "boundedness": b,
        "connectivity": s.connectivity(),
        "geometry": s.geometry(),
    }))
}

fn space_text(v: &Value) -> String {
    let c = &v["connectivity"];
    let b = &v["boundedness"];
    let comps: Vec<String> = c["components"]
        .as_array()
        .expect("components")
        .iter()
        .map(|blk| format!("{{{}}}", blk.as_array().expect("block").iter().map(|l| l.as_str().expect("label")).collect::<Vec<_>>().join(" ")))
        .collect();
    format!(
        "space {}\nclass: {}\nbounded B1 B2 B3: {} {} {}\nconnected: {}\nstrongly connected: {}\nuniformly connected: {}\ncomponents: {}\nlocally finite: {}\nphi: {}\n",
        v["name"].as_str().expect("name"),
        v["class"].as_str().expect("class"),
        b["b1"],
        b["b2"],
        b["b3"],
        c["connected"],
        c["strongly_connected"],
        c["uniformly_connected"],
        comps.join(" "),
        v["geometry"]["locally_finite"],
        v["geometry"]["phi"],
    )
}

fn cmd_classify(input: &Input, expect: Option<&str>) -> Result<Report, Failure> {
    let ws = load(&input.file)?;
    let name = input.name.as_deref();
    let (label, space, source, extra, dot) = if has(&ws.spaces, name) {
        let (n, s) = pick(&ws.spaces, name, "space")?;
        (n, s.clone(), "space", Value::Null, format::dot_space(n, s))
    } else if has(&ws.weights, name) {
        let (n, w) = pick(&ws.weights, name, "weight")?;
        let flags = classify_weight(w);
        let s = structure_from_weight(w).space;
        let dot = format::dot_space(n, &s);
        (n, s, "weight", json!({ "flags": flags, "kind": flags.name() }), dot)
    } else {
        let (n, g) = pick(&ws.graphs, name, "space, weight or graph")?;
        (n, graphic_structure(g).space, "graph", Value::Null, format::dot_graph(n, g))
    };
    let mut v = space_report(label, &space)?;
    v["source"] = json!(source);
    if !extra.is_null() {
        v["weight"] = extra;
    }
    let mut text = space_text(&v);
    if let Some(k) = v.pointer("/weight/kind") {
        writeln!(text, "weight: {}", k.as_str().expect("kind")).expect("string write");
    }
    let verdict = match expect {
        Some(e) => parse_class(e)? == space.classify(),
        None => true,
    };
    v["verdict"] = json!(verdict);
    Ok(Report {
        text,
        json: v,
        dot: Some(dot),
        verdict,
    })
}

fn cmd_functor(tag: &str, input: &Input) -> Result<Report, Failure> {
    let tag = FunctorTag::parse(tag).ok_or_else(|| Failure::Semantic(format!("unknown functor `{tag}`")))?;
    let ws = load(&input.file)?;
    let (n, s) = pick(&ws.spaces, input.name.as_deref(), "space")?;
    let out = apply_functor(tag, s);
    let out_name = format!("{}({n})", tag.name());
    let promised = tag.promised(s.classify());
    let verdict = out.classify().satisfies(promised);
    let text = format::emit_space(&out_name, &out);
    Ok(Report {
        json: json!({
            "functor": tag.name(),
            "input_class": s.classify(),
            "output_class": out.classify(),
            "promised": promised,
            "space": text,
            "verdict": verdict,
        }),
        dot: Some(format::dot_space(&out_name, &out)),
        text,
        verdict,
    })
}

fn cmd_map(input: &Input) -> Result<Report, Failure> {
    let ws = load(&input.file)?;
    let (n, m) = pick(&ws.maps, input.name.as_deref(), "map")?;
    let p = m.map.profile();
    let v = json!({
        "map": n,
        "src": m.src,
        "dst": m.dst,
        "injective": m.map.is_injective(),
        "surjective": m.map.is_surjective(),
        "profile": p,
        "verdict": p.bornologous,
    });
    let mut text = format!("map {n} : {} -> {}\n", m.src, m.dst);
    for (k, val) in v["profile"].as_object().expect("profile") {
        writeln!(text, "{}: {val}", k.replace('_', " ")).expect("string write");
    }
    Ok(Report {
        text,
        json: v,
        dot: None,
        verdict: p.bornologous,
    })
}

fn cmd_equiv(input: &Input) -> Result<Report, Failure> {
    let ws = load(&input.file)?;
    let (n, m) = pick(&ws.maps, input.name.as_deref(), "map")?;
    let (text, v, verdict) = match sym_coarse_equivalence(&m.map)? {
        EquivalenceVerdict::Yes { inverse } => {
            let inv = format::emit_map(&format!("{n}_inv"), &m.dst, &m.src, &inverse);
            (format!("equivalence: yes\n{inv}"), json!({ "equivalence": true, "inverse": inv }), true)
        }
        EquivalenceVerdict::No { failed } => (
            format!("equivalence: no\nfailed: {}\n", failed.join(", ")),
            json!({ "equivalence": false, "failed": failed }),
            false,
        ),
    };
    let mut v = v;
    v["map"] = json!(n);
    v["verdict"] = json!(verdict);
    Ok(Report {
        text,
        json: v,
        dot: None,
        verdict,
    })
}

fn cmd_quotient(input: &Input, partition: &str, class: &str) -> Result<Report, Failure> {
    let class = parse_class(class)?;
    let ws = load(&input.file)?;
    let (n, s) = pick(&ws.spaces, input.name.as_deref(), "space")?;
    let mut blocks: Vec<Vec<String>> = partition
        .split('|')
        .map(|b| b.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()).map(String::from).collect::<Vec<_>>())
        .filter(|b| !b.is_empty())
        .collect();
    for l in s.carrier().labels() {
        if !blocks.iter().flatten().any(|m| m == l) {
            blocks.push(vec![l.clone()]);
        }
    }
    let q = Surjection::from_blocks(s.carrier(), &blocks)?;
    let out = quotient(s, &q, class)?;
    let soft = is_weakly_soft(s, &q)?;
    let out_name = format!("{n}_q");
    let body = format::emit_space(&out_name, &out);
    Ok(Report {
        text: format!("weakly soft: {soft}\nclass: {}\n{body}", out.classify()),
        json: json!({
            "class": out.classify(),
            "requested": class,
            "weakly_soft": soft,
            "space": body,
            "verdict": soft,
        }),
        dot: Some(format::dot_space(&out_name, &out)),
        verdict: soft,
    })
}

fn parse_value(flag: &str, s: &str) -> Result<Rational64, Failure> {
    match s.parse::<Weight>() {
        Ok(Weight::Finite(r)) => Ok(r),
        _ => Err(Failure::Semantic(format!("--{flag} needs a finite non-negative number, got `{s}`"))),
    }
}

fn cmd_probe(family: &str, window: &str, radius: &str, smax: &str) -> Result<Report, Failure> {
    let kind = FamilyKind::parse(family).ok_or_else(|| Failure::Semantic(format!("unknown family `{family}`")))?;
    let (lo, hi) = window
        .split_once(':')
        .and_then(|(a, b)| Some((a.trim().parse::<i64>().ok()?, b.trim().parse::<i64>().ok()?)))
        .ok_or_else(|| Failure::Parse(format!("window must be `lo:hi`, got `{window}`")))?;
    let fam = WeightFamily::new(kind, lo, hi)?;
    let r = parse_value("radius", radius)?;
    let s = parse_value("smax", smax)?;
    let verdict = probe_inverse_bound(&fam, r, s)?;
    let holds = matches!(verdict, Verdict::HoldsUpToBound { .. });
    let text = match &verdict {
        Verdict::HoldsUpToBound { bound } => format!("holds up to bound S={bound}\n"),
        Verdict::Counterexample { x, y, forward, inverse } => format!(
            "counterexample x={} y={} d(x,y)={forward} d(y,x)={inverse}\n",
            entourage::weight::point_label(x),
            entourage::weight::point_label(y)
        ),
    };
    let mut v = serde_json::to_value(&verdict).expect("verdict serializes");
    v["family"] = json!(kind.name());
    v["window"] = json!([lo, hi]);
    v["radius"] = json!(radius);
    v["smax"] = json!(smax);
    v["verdict"] = json!(holds);
    Ok(Report {
        text,
        json: v,
        dot: None,
        verdict: holds,
    })
}

fn pick_magma<'a>(ws: &'a Workspace, name: Option<&str>) -> Result<(&'a str, &'a NamedMagma), Failure> {
    pick(&ws.magmas, name, "magma")
}

fn cmd_word_metric(input: &Input, gens: &str, side: &str) -> Result<Report, Failure> {
    let side = Side::parse(side).ok_or_else(|| Failure::Semantic(format!("unknown side `{side}`")))?;
    let ws = load(&input.file)?;
    let (n, m) = pick_magma(&ws, input.name.as_deref())?;
    let labels: Vec<&str> = gens.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let sigma: PointSet = m.table.elements().set_of(&labels)?;
    let ww = word_weight(&m.table, &sigma, side)?;
    let c = m.table.elements();
    let flags = classify_weight(&ww.weight);
    let width = (0..c.size())
        .flat_map(|x| (0..c.size()).map(move |y| (x, y)))
        .map(|(x, y)| ww.weight.get(x, y).to_string().len())
        .chain(c.labels().iter().map(String::len))
        .max()
        .unwrap_or(1);
    let mut text = format!("{:>width$}", "");
    for l in c.labels() {
        write!(text, " {l:>width$}").expect("string write");
    }
    text.push('\n');
    let mut rows = Vec::new();
    for x in 0..c.size() {
        write!(text, "{:>width$}", c.label(x)).expect("string write");
        let row: Vec<String> = (0..c.size()).map(|y| ww.weight.get(x, y).to_string()).collect();
        for d in &row {
            write!(text, " {d:>width$}").expect("string write");
        }
        text.push('\n');
        rows.push(row);
    }
    writeln!(text, "non-expanding: {}", ww.non_expanding).expect("string write");
    if let Some(inv) = ww.invariant {
        writeln!(text, "invariant: {inv}").expect("string write");
    }
    let verdict = ww.non_expanding && flags.triangle && ww.invariant.unwrap_or(true);
    let graph = cayley(&m.table, &sigma, side)?;
    Ok(Report {
        text,
        json: json!({
            "magma": n,
            "algebra": classify_magma(&m.table),
            "elements": c.labels(),
            "generators": c.labels_of(&sigma),
            "side": side,
            "distances": rows,
            "non_expanding": ww.non_expanding,
            "invariant": ww.invariant,
            "triangle": flags.triangle,
            "weight": format::emit_weight(&format!("{n}_word"), &ww.weight),
            "verdict": verdict,
        }),
        dot: Some(format::dot_graph(&format!("cay_{n}"), &graph)),
        verdict,
    })
}

fn cmd_hyper(input: &Input, exp: bool) -> Result<Report, Failure> {
    let ws = load(&input.file)?;
    let (n, s) = pick(&ws.spaces, input.name.as_deref(), "space")?;
    let h = hyper_space(s)?;
    let e = exp_space(s)?;
    let sym_matches = apply_functor(FunctorTag::Sym, &h) == e;
    let restricted = hyper_non_empty(s)?;
    let b3 = s.boundedness(&s.carrier().all())?.b3;
    let shown = if exp { &e } else { &h };
    let kind = if exp { "exp" } else { "hyper" };
    let non_empty_semi = restricted.classify().is_semi();
    let verdict = sym_matches && non_empty_semi == b3;
    let text = format!(
        "{kind} of {n}\npoints: {}\nclass: {}\nsym of hyper equals exp: {sym_matches}\nnon-empty restriction semi-coarse: {non_empty_semi}\nbase satisfies B3: {b3}\n",
        shown.size(),
        shown.classify()
    );
    let keep = {
        let mut all = shown.carrier().all();
        all.remove(0);
        all
    };
    let dot_space = shown.restrict(&keep)?;
    Ok(Report {
        text,
        json: json!({
            "space": n,
            "structure": kind,
            "points": shown.size(),
            "class": shown.classify(),
            "sym_of_hyper_is_exp": sym_matches,
            "non_empty_semi_coarse": non_empty_semi,
            "base_b3": b3,
            "verdict": verdict,
        }),
        dot: Some(format::dot_space(&format!("{kind}_{n}"), &dot_space)),
        verdict,
    })
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    match &cli.cmd {
        Cmd::Classify { input, expect } => cmd_classify(input, expect.as_deref()),
        Cmd::Functor { tag, input } => cmd_functor(tag, input),
        Cmd::Map { input } => cmd_map(input),
        Cmd::Equiv { input } => cmd_equiv(input),
        Cmd::Quotient { input, partition, class } => cmd_quotient(input, partition, class),
        Cmd::Probe {
            family,
            window,
            radius,
            smax,
        } => cmd_probe(family, window, radius, smax),
        Cmd::WordMetric { input, gens, side } => cmd_word_metric(input, gens, side),
        Cmd::Hyper { input, exp } => cmd_hyper(input, *exp),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(r) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&r.json).expect("json"));
            } else if cli.dot {
                match &r.dot {
                    Some(d) => print!("{d}"),
                    None => {
                        eprintln!("error: this command has no DOT output");
                        return ExitCode::from(3);
                    }
                }
            } else {
                print!("{}", r.text);
            }
            if cli.assert && !r.verdict {
                eprintln!("assertion failed");
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
