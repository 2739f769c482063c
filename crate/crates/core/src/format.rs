//! Line-oriented text formats for spaces, maps, weights, graphs and magmas,
//! plus DOT export.
//!
//! A file is a sequence of blocks, each opened by a header line (`space`,
//! `map`, `weight`, `graph`, `magma`). `#` starts a comment. Labels are
//! whitespace-free tokens; inside `gen` pairs a label may contain balanced
//! parentheses, so product labels such as `(a,b)` survive a round trip. A
//! header keyword cannot start a body line, so it cannot be the first label
//! of a `table` row.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::algebra::MagmaTable;
use crate::error::Error;
use crate::graph::DiGraph;
use crate::morphism::SpaceMap;
use crate::rel::{Carrier, Entourage, PointSet};
use crate::space::FiniteEntourageSpace;
use crate::weight::{Weight, WeightTable};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("{line}: {source}")]
    Semantic {
        line: usize,
        #[source]
        source: Error,
    },
}

impl FormatError {
    fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        FormatError::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn semantic(line: usize, source: Error) -> Self {
        FormatError::Semantic { line, source }
    }
}

pub type FormatResult<T> = std::result::Result<T, FormatError>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedMagma {
    pub table: MagmaTable,
    pub ideals: Vec<(String, PointSet)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedMap {
    pub map: SpaceMap,
    pub src: String,
    pub dst: String,
}

/// Everything loaded from one file, in file order per kind.
#[derive(Debug, Clone, Default)]
pub struct Workspace {
    pub spaces: Vec<(String, FiniteEntourageSpace)>,
    pub maps: Vec<(String, NamedMap)>,
    pub weights: Vec<(String, WeightTable)>,
    pub graphs: Vec<(String, DiGraph)>,
    pub magmas: Vec<(String, NamedMagma)>,
}

fn lookup<'a, T>(items: &'a [(String, T)], name: &str) -> Option<&'a T> {
    items.iter().find(|(n, _)| n == name).map(|(_, v)| v)
}

impl Workspace {
    pub fn space(&self, name: &str) -> Option<&FiniteEntourageSpace> {
        lookup(&self.spaces, name)
    }

    pub fn map(&self, name: &str) -> Option<&NamedMap> {
        lookup(&self.maps, name)
    }

    pub fn weight(&self, name: &str) -> Option<&WeightTable> {
        lookup(&self.weights, name)
    }

    pub fn graph(&self, name: &str) -> Option<&DiGraph> {
        lookup(&self.graphs, name)
    }

    pub fn magma(&self, name: &str) -> Option<&NamedMagma> {
        lookup(&self.magmas, name)
    }
}

/// A whitespace token with its 1-based column.
#[derive(Debug, Clone, Copy)]
struct Tok<'a> {
    text: &'a str,
    col: usize,
}

#[derive(Debug)]
struct Line<'a> {
    no: usize,
    body: &'a str,
}

impl<'a> Line<'a> {
    fn tokens(&self) -> Vec<Tok<'a>> {
        let mut out = Vec::new();
        let mut start = None;
        for (i, ch) in self.body.char_indices() {
            match (ch.is_whitespace(), start) {
                (true, Some(s)) => {
                    out.push(self.tok(s, i));
                    start = None;
                }
                (false, None) => start = Some(i),
                _ => {}
            }
        }
        if let Some(s) = start {
            out.push(self.tok(s, self.body.len()));
        }
        out
    }

    fn tok(&self, s: usize, e: usize) -> Tok<'a> {
        Tok {
            text: &self.body[s..e],
            col: self.body[..s].chars().count() + 1,
        }
    }

    fn err(&self, col: usize, msg: impl Into<String>) -> FormatError {
        FormatError::parse(self.no, col, msg)
    }

    fn end_col(&self) -> usize {
        self.body.chars().count() + 1
    }
}

fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .map(|(i, raw)| Line {
            no: i + 1,
            body: raw.split('#').next().unwrap_or(""),
        })
        .filter(|l| !l.body.trim().is_empty())
        .collect()
}

const HEADERS: [&str; 5] = ["space", "map", "weight", "graph", "magma"];

/// `(a b) (c d)`; labels may contain balanced parentheses.
fn parse_pairs(line: &Line<'_>, from: usize) -> FormatResult<Vec<(String, String)>> {
    let chars: Vec<(usize, char)> = line.body.char_indices().collect();
    let col_of = |k: usize| k + 1;
    let mut k = chars.iter().position(|&(b, _)| b >= from).unwrap_or(chars.len());
    let mut out = Vec::new();
    let skip_ws = |k: &mut usize| {
        while *k < chars.len() && chars[*k].1.is_whitespace() {
            *k += 1;
        }
    };
    let label = |k: &mut usize| -> FormatResult<String> {
        let start = *k;
        let mut depth = 0usize;
        while *k < chars.len() {
            let c = chars[*k].1;
            if c.is_whitespace() || (c == ')' && depth == 0) {
                break;
            }
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => {}
            }
            *k += 1;
        }
        if *k == start {
            return Err(line.err(col_of(start), "expected a label"));
        }
        if depth != 0 {
            return Err(line.err(col_of(start), "unbalanced parenthesis in label"));
        }
        Ok(chars[start..*k].iter().map(|&(_, c)| c).collect())
    };
    loop {
        skip_ws(&mut k);
        if k == chars.len() {
            break;
        }
        if chars[k].1 != '(' {
            return Err(line.err(col_of(k), "expected `(`"));
        }
        k += 1;
        skip_ws(&mut k);
        let a = label(&mut k)?;
        skip_ws(&mut k);
        let b = label(&mut k)?;
        skip_ws(&mut k);
        if k == chars.len() || chars[k].1 != ')' {
            return Err(line.err(col_of(k), "expected `)`"));
        }
        k += 1;
        out.push((a, b));
    }
    Ok(out)
}

fn carrier_from(line: &Line<'_>, toks: &[Tok<'_>]) -> FormatResult<Arc<Carrier>> {
    if toks.len() < 2 {
        return Err(line.err(line.end_col(), format!("`{}` needs at least one label", toks[0].text)));
    }
    Carrier::new(toks[1..].iter().map(|t| t.text))
        .map(Carrier::shared)
        .map_err(|e| FormatError::semantic(line.no, e))
}

fn index(c: &Carrier, line: &Line<'_>, label: &str) -> FormatResult<usize> {
    c.index_of(label).map_err(|e| FormatError::semantic(line.no, e))
}

fn single_name(line: &Line<'_>, toks: &[Tok<'_>]) -> FormatResult<String> {
    match toks.len() {
        1 => Err(line.err(line.end_col(), format!("`{}` needs a name", toks[0].text))),
        2 => Ok(toks[1].text.to_string()),
        _ => Err(line.err(toks[2].col, "unexpected token after name")),
    }
}

struct MapDraft {
    name: String,
    header: usize,
    src: String,
    dst: String,
    arrows: Vec<(usize, String, String)>,
}

/// Parses every block; cross-references between blocks are resolved after
/// the whole file is read.
pub fn parse_workspace(text: &str) -> FormatResult<Workspace> {
    let ls = lines(text);
    let mut ws = Workspace::default();
    let mut drafts = Vec::new();
    let mut i = 0;
    while i < ls.len() {
        let head = &ls[i];
        let toks = head.tokens();
        let end = (i + 1..ls.len())
            .find(|&j| HEADERS.contains(&ls[j].tokens()[0].text))
            .unwrap_or(ls.len());
        let body = &ls[i + 1..end];
        match toks[0].text {
            "space" => {
                let name = single_name(head, &toks)?;
                let s = parse_space_body(head, body)?;
                push_unique(&mut ws.spaces, name, s, head)?;
            }
            "weight" => {
                let name = single_name(head, &toks)?;
                let w = parse_weight_body(head, body)?;
                push_unique(&mut ws.weights, name, w, head)?;
            }
            "graph" => {
                let name = single_name(head, &toks)?;
                let g = parse_graph_body(head, body)?;
                push_unique(&mut ws.graphs, name, g, head)?;
            }
            "magma" => {
                let name = single_name(head, &toks)?;
                let m = parse_magma_body(head, body)?;
                push_unique(&mut ws.magmas, name, m, head)?;
            }
            "map" => drafts.push(parse_map_block(head, &toks, body)?),
            other => return Err(head.err(toks[0].col, format!("expected a block header, found `{other}`"))),
        }
        i = end;
    }
    for d in drafts {
        let resolve = |n: &str| {
            ws.space(n)
                .cloned()
                .ok_or_else(|| FormatError::semantic(d.header, Error::Invalid(format!("unknown space `{n}`"))))
        };
        let (src, dst) = (resolve(&d.src)?, resolve(&d.dst)?);
        let mut table = vec![None; src.size()];
        for (no, a, b) in &d.arrows {
            let sem = |e| FormatError::semantic(*no, e);
            let x = src.carrier().index_of(a).map_err(sem)?;
            let y = dst.carrier().index_of(b).map_err(sem)?;
            if table[x].replace(y).is_some() {
                return Err(sem(Error::Invalid(format!("point `{a}` mapped twice"))));
            }
        }
        let table = table
            .into_iter()
            .enumerate()
            .map(|(x, y)| {
                y.ok_or_else(|| {
                    FormatError::semantic(
                        d.header,
                        Error::Invalid(format!("point `{}` has no image", src.carrier().label(x))),
                    )
                })
            })
            .collect::<FormatResult<Vec<_>>>()?;
        let f = SpaceMap::new(src, dst, table).map_err(|e| FormatError::semantic(d.header, e))?;
        let header = Line { no: d.header, body: "" };
        let entry = NamedMap {
            map: f,
            src: d.src,
            dst: d.dst,
        };
        push_unique(&mut ws.maps, d.name, entry, &header)?;
    }
    Ok(ws)
}

fn push_unique<T>(items: &mut Vec<(String, T)>, name: String, v: T, head: &Line<'_>) -> FormatResult<()> {
    if lookup(items, &name).is_some() {
        return Err(FormatError::semantic(head.no, Error::Invalid(format!("duplicate name `{name}`"))));
    }
    items.push((name, v));
    Ok(())
}

fn expect_keyword<'a>(head: &Line<'_>, body: &'a [Line<'a>], kw: &str) -> FormatResult<(Arc<Carrier>, &'a [Line<'a>])> {
    let Some(first) = body.first() else {
        return Err(FormatError::parse(head.no, head.end_col(), format!("block needs a `{kw}` line")));
    };
    let toks = first.tokens();
    if toks[0].text != kw {
        return Err(first.err(toks[0].col, format!("expected `{kw}`")));
    }
    Ok((carrier_from(first, &toks)?, &body[1..]))
}

fn parse_space_body(head: &Line<'_>, body: &[Line<'_>]) -> FormatResult<FiniteEntourageSpace> {
    let (c, rest) = expect_keyword(head, body, "points")?;
    let mut m = Entourage::diagonal(&c);
    for l in rest {
        let toks = l.tokens();
        if toks[0].text != "gen" {
            return Err(l.err(toks[0].col, "expected `gen`"));
        }
        let from = l.body.find("gen").expect("token present") + 3;
        for (a, b) in parse_pairs(l, from)? {
            m.insert(index(&c, l, &a)?, index(&c, l, &b)?);
        }
    }
    Ok(FiniteEntourageSpace::principal(m))
}

fn parse_weight_body(head: &Line<'_>, body: &[Line<'_>]) -> FormatResult<WeightTable> {
    let (c, rest) = expect_keyword(head, body, "points")?;
    let n = c.size();
    let mut d: Vec<Option<Weight>> = vec![None; n * n];
    for l in rest {
        let toks = l.tokens();
        if toks[0].text != "d" {
            return Err(l.err(toks[0].col, "expected `d`"));
        }
        if toks.len() != 5 || toks[3].text != "=" {
            return Err(l.err(toks[0].col, "expected `d a b = value`"));
        }
        let x = index(&c, l, toks[1].text)?;
        let y = index(&c, l, toks[2].text)?;
        let w: Weight = toks[4].text.parse().map_err(|_| l.err(toks[4].col, "expected a value or `inf`"))?;
        if d[x * n + y].replace(w).is_some() {
            return Err(FormatError::semantic(l.no, Error::Invalid(format!("d {} {} given twice", toks[1].text, toks[2].text))));
        }
    }
    let full = (0..n * n)
        .map(|k| d[k].unwrap_or(if k / n == k % n { Weight::ZERO } else { Weight::Infinite }))
        .collect();
    WeightTable::new(&c, full).map_err(|e| FormatError::semantic(head.no, e))
}

fn parse_graph_body(head: &Line<'_>, body: &[Line<'_>]) -> FormatResult<DiGraph> {
    let (c, rest) = expect_keyword(head, body, "vertices")?;
    let mut e = Entourage::empty(&c);
    for l in rest {
        let toks = l.tokens();
        if toks[0].text != "edge" {
            return Err(l.err(toks[0].col, "expected `edge`"));
        }
        if toks.len() != 3 {
            return Err(l.err(toks[0].col, "expected `edge a b`"));
        }
        e.insert(index(&c, l, toks[1].text)?, index(&c, l, toks[2].text)?);
    }
    Ok(DiGraph::new(e))
}

fn parse_magma_body(head: &Line<'_>, body: &[Line<'_>]) -> FormatResult<NamedMagma> {
    let (c, rest) = expect_keyword(head, body, "elems")?;
    let n = c.size();
    let Some(tl) = rest.first() else {
        return Err(FormatError::parse(head.no, head.end_col(), "magma needs a `table`"));
    };
    let tt = tl.tokens();
    if tt[0].text != "table" || tt.len() != 1 {
        return Err(tl.err(tt[0].col, "expected `table`"));
    }
    if rest.len() < 1 + n {
        let last = rest.last().expect("non-empty");
        return Err(last.err(last.end_col(), format!("table needs {n} rows")));
    }
    let mut rows = Vec::with_capacity(n);
    for l in &rest[1..1 + n] {
        let toks = l.tokens();
        if toks.len() != n {
            return Err(l.err(toks[0].col, format!("row needs {n} entries")));
        }
        rows.push(toks.iter().map(|t| t.text.to_string()).collect::<Vec<_>>());
    }
    let table = MagmaTable::from_rows(&c, &rows).map_err(|e| FormatError::semantic(rest[1].no, e))?;
    let mut ideals: Vec<(String, PointSet)> = Vec::new();
    for l in &rest[1 + n..] {
        let toks = l.tokens();
        if toks[0].text != "ideal" || toks.len() < 4 || toks[2].text != "=" {
            return Err(l.err(toks[0].col, "expected `ideal NAME = {a,b}`"));
        }
        let set_text: String = toks[3..].iter().map(|t| t.text).collect();
        let inner = set_text
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| l.err(toks[3].col, "expected `{...}`"))?;
        let labels: Vec<&str> = inner.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        let set = c.set_of(&labels).map_err(|e| FormatError::semantic(l.no, e))?;
        push_unique(&mut ideals, toks[1].text.to_string(), set, l)?;
    }
    Ok(NamedMagma { table, ideals })
}

fn parse_map_block(head: &Line<'_>, toks: &[Tok<'_>], body: &[Line<'_>]) -> FormatResult<MapDraft> {
    let words: Vec<&str> = toks.iter().map(|t| t.text).collect();
    if words.len() != 6 || words[2] != ":" || words[4] != "->" {
        let col = toks.get(1).map_or(head.end_col(), |t| t.col);
        return Err(head.err(col, "expected `map NAME : SRC -> DST`"));
    }
    let mut arrows = Vec::new();
    for l in body {
        let t = l.tokens();
        if t.len() != 3 || t[1].text != "->" {
            return Err(l.err(t[0].col, "expected `a -> b`"));
        }
        arrows.push((l.no, t[0].text.to_string(), t[2].text.to_string()));
    }
    Ok(MapDraft {
        name: words[1].to_string(),
        header: head.no,
        src: words[3].to_string(),
        dst: words[5].to_string(),
        arrows,
    })
}

fn only<T: Clone>(items: Vec<(String, T)>, kind: &str) -> FormatResult<(String, T)> {
    let mut it = items.into_iter();
    match (it.next(), it.next()) {
        (Some(x), None) => Ok(x),
        _ => Err(FormatError::parse(1, 1, format!("expected exactly one {kind} block"))),
    }
}

/// A file holding exactly one space block.
pub fn parse_space(text: &str) -> FormatResult<(String, FiniteEntourageSpace)> {
    only(parse_workspace(text)?.spaces, "space")
}

pub fn parse_weight(text: &str) -> FormatResult<(String, WeightTable)> {
    only(parse_workspace(text)?.weights, "weight")
}

pub fn parse_graph(text: &str) -> FormatResult<(String, DiGraph)> {
    only(parse_workspace(text)?.graphs, "graph")
}

pub fn parse_magma(text: &str) -> FormatResult<(String, NamedMagma)> {
    only(parse_workspace(text)?.magmas, "magma")
}

/// Off-diagonal pairs of `M`, one `gen` line per source point.
pub fn emit_space(name: &str, s: &FiniteEntourageSpace) -> String {
    let c = s.carrier();
    let mut out = format!("space {name}\npoints {}\n", c.labels().join(" "));
    for x in 0..s.size() {
        let pairs: Vec<String> = s
            .max_ent()
            .row(x)
            .iter()
            .filter(|&y| y != x)
            .map(|y| format!("({} {})", c.label(x), c.label(y)))
            .collect();
        if !pairs.is_empty() {
            writeln!(out, "gen {}", pairs.join(" ")).expect("string write");
        }
    }
    out
}

/// Infinite off-diagonal values are left implicit.
pub fn emit_weight(name: &str, w: &WeightTable) -> String {
    let c = w.carrier();
    let mut out = format!("weight {name}\npoints {}\n", c.labels().join(" "));
    for x in 0..c.size() {
        for y in 0..c.size() {
            if x != y && w.get(x, y).is_finite() {
                writeln!(out, "d {} {} = {}", c.label(x), c.label(y), w.get(x, y)).expect("string write");
            }
        }
    }
    out
}

pub fn emit_graph(name: &str, g: &DiGraph) -> String {
    let c = g.vertices();
    let mut out = format!("graph {name}\nvertices {}\n", c.labels().join(" "));
    for (x, y) in g.edges().pairs() {
        writeln!(out, "edge {} {}", c.label(x), c.label(y)).expect("string write");
    }
    out
}

pub fn emit_map(name: &str, src: &str, dst: &str, f: &SpaceMap) -> String {
    let mut out = format!("map {name} : {src} -> {dst}\n");
    for (x, &y) in f.table().iter().enumerate() {
        writeln!(out, "{} -> {}", f.src().carrier().label(x), f.dst().carrier().label(y)).expect("string write");
    }
    out
}

pub fn emit_magma(name: &str, m: &NamedMagma) -> String {
    let c = m.table.elements();
    let mut out = format!("magma {name}\nelems {}\ntable\n", c.labels().join(" "));
    for row in m.table.rows() {
        writeln!(out, "{}", row.join(" ")).expect("string write");
    }
    for (n, set) in &m.ideals {
        writeln!(out, "ideal {n} = {{{}}}", c.labels_of(set).join(",")).expect("string write");
    }
    out
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Nodes in carrier order, then edges in row-major order.
pub fn dot(name: &str, edges: &Entourage, skip_diagonal: bool) -> String {
    let c = edges.carrier();
    let mut out = format!("digraph {} {{\n", dot_id(name));
    for l in c.labels() {
        writeln!(out, "  {};", dot_id(l)).expect("string write");
    }
    for (x, y) in edges.pairs() {
        if !(skip_diagonal && x == y) {
            writeln!(out, "  {} -> {};", dot_id(c.label(x)), dot_id(c.label(y))).expect("string write");
        }
    }
    out.push_str("}\n");
    out
}

/// The space as a digraph on `M \ Δ`.
pub fn dot_space(name: &str, s: &FiniteEntourageSpace) -> String {
    dot(name, s.max_ent(), true)
}

pub fn dot_graph(name: &str, g: &DiGraph) -> String {
    dot(name, g.edges(), false)
}
