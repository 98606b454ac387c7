//! Support code for the `feasible` command-line tool: graph specifiers,
//! report types and the exit-code table.
//!
//! A graph can be given in three ways, tried in this order:
//!
//! * an edge list `"n;u-v,u-w,..."` (anything containing `;`),
//! * a catalog name such as `paw`, `path:4` or `H:4,2,0`,
//! * a graph6 string.
//!
//! `path:k` counts vertices, so `path:4` has three edges. `star:k` counts
//! leaves and `matching:k` counts edges.

use std::fmt::{self, Write as _};

use induced_free::constructions::{h_graph, q_graph, s_graph};
use induced_free::{
    classify, encode_graph6, feasibility_verdict, Construction, Error, ForbiddenClass, Graph,
    HParams, PairTable, QParams, SplitParams, TnfRegion, Verdict, WitnessCertificate, MAX_ORDER,
};
use serde::Serialize;

pub mod exit {
    pub const OK: i32 = 0;
    pub const IO: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const RANGE: i32 = 3;
    pub const CAPACITY: i32 = 4;
    pub const INFEASIBLE: i32 = 5;
    pub const INTERNAL: i32 = 6;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] Error),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(e) => exit_code(e),
            CliError::Io { .. } => exit::IO,
            CliError::Usage(_) => exit::PARSE,
        }
    }
}

/// Process exit status for a library error. These values are stable.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Validation(_) => exit::PARSE,
        Error::Range(_) | Error::Parameter(_) => exit::RANGE,
        Error::Capacity(_) => exit::CAPACITY,
        Error::InfeasibleFamily { .. } | Error::DegenerateForbidden { .. } => exit::INFEASIBLE,
        Error::Internal(_) => exit::INTERNAL,
    }
}

/// Names accepted before the optional `:args` part.
pub const CATALOG: [&str; 12] = [
    "complete", "empty", "path", "cycle", "star", "matching", "claw", "paw", "diamond", "H", "S",
    "Q",
];

/// A parsed graph together with the text it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSpecifier {
    pub source: String,
    pub graph: Graph,
}

impl std::str::FromStr for GraphSpecifier {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(Self {
            source: s.to_string(),
            graph: parse_graph(s)?,
        })
    }
}

impl fmt::Display for GraphSpecifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

/// Resolve a specifier string: edge list, then catalog name, then graph6.
pub fn parse_graph(s: &str) -> Result<Graph, Error> {
    if s.contains(';') {
        return parse_edge_list(s);
    }
    let name = s.split(':').next().unwrap_or_default().trim();
    if catalog_entry(name).is_some() {
        return parse_named(s);
    }
    if s.contains(':') {
        return Err(Error::Parse {
            offset: leading_ws(s),
            message: format!("unknown graph name '{name}'"),
        });
    }
    induced_free::decode_graph6(s.trim()).map_err(|e| shift(e, leading_ws(s)))
}

fn catalog_entry(name: &str) -> Option<&'static str> {
    CATALOG
        .iter()
        .copied()
        .find(|c| name.eq_ignore_ascii_case(c))
}

fn leading_ws(s: &str) -> usize {
    s.len() - s.trim_start().len()
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { offset, message } => Error::Parse {
            offset: offset + by,
            message,
        },
        other => other,
    }
}

/// A trimmed slice of the input and its byte offset.
#[derive(Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    offset: usize,
}

impl<'a> Token<'a> {
    fn new(whole: &'a str, start: usize, end: usize) -> Self {
        let raw = &whole[start..end];
        let text = raw.trim();
        let offset = start + raw.len() - raw.trim_start().len();
        Self { text, offset }
    }

    fn number(self, what: &str) -> Result<usize, Error> {
        self.text.parse::<usize>().map_err(|_| Error::Parse {
            offset: self.offset,
            message: format!("expected {what}, found '{}'", self.text),
        })
    }
}

/// Split `whole[start..end]` on `sep`, yielding trimmed tokens with offsets.
fn split_tokens(whole: &str, start: usize, end: usize, sep: char) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut at = start;
    for piece in whole[start..end].split(sep) {
        out.push(Token::new(whole, at, at + piece.len()));
        at += piece.len() + sep.len_utf8();
    }
    out
}

/// Parse `"n;u-v,u-w,..."`. An empty edge part gives the empty graph.
pub fn parse_edge_list(s: &str) -> Result<Graph, Error> {
    let semi = s.find(';').ok_or_else(|| Error::Parse {
        offset: s.len(),
        message: "edge list needs 'n;' before the edges".into(),
    })?;
    let n_tok = Token::new(s, 0, semi);
    let n = n_tok.number("a vertex count")?;
    if n > MAX_ORDER {
        return Err(Error::Capacity(format!("{n} vertices exceeds {MAX_ORDER}")));
    }
    let mut edges = Vec::new();
    let body = Token::new(s, semi + 1, s.len());
    if body.text.is_empty() {
        return Graph::empty(n);
    }
    for tok in split_tokens(s, semi + 1, s.len(), ',') {
        let ends = split_tokens(s, tok.offset, tok.offset + tok.text.len(), '-');
        let [a, b] = ends[..] else {
            return Err(Error::Parse {
                offset: tok.offset,
                message: format!("expected an edge 'u-v', found '{}'", tok.text),
            });
        };
        let (u, v) = (a.number("a vertex")?, b.number("a vertex")?);
        for (x, t) in [(u, a), (v, b)] {
            if x >= n {
                return Err(Error::Parse {
                    offset: t.offset,
                    message: format!("vertex {x} is outside 0..{n}"),
                });
            }
        }
        if u == v {
            return Err(Error::Parse {
                offset: tok.offset,
                message: format!("loop '{}' is not allowed", tok.text),
            });
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges)
}

/// Parse a catalog name with its arguments, e.g. `cycle:5` or `Q:6,0,1,0`.
pub fn parse_named(s: &str) -> Result<Graph, Error> {
    let (name_tok, args) = match s.find(':') {
        Some(colon) => (
            Token::new(s, 0, colon),
            split_tokens(s, colon + 1, s.len(), ','),
        ),
        None => (Token::new(s, 0, s.len()), Vec::new()),
    };
    let name = catalog_entry(name_tok.text).ok_or_else(|| Error::Parse {
        offset: name_tok.offset,
        message: format!("unknown graph name '{}'", name_tok.text),
    })?;
    let arity = match name {
        "claw" | "paw" | "diamond" => 0,
        "H" => 3,
        "S" => 2,
        "Q" => 4,
        _ => 1,
    };
    if args.len() != arity {
        let offset = args
            .first()
            .map_or(name_tok.offset + name_tok.text.len(), |t| t.offset);
        return Err(Error::Parse {
            offset,
            message: format!("'{name}' takes {arity} argument(s), found {}", args.len()),
        });
    }
    let mut nums = Vec::with_capacity(arity);
    for t in &args {
        let x = t.number("a non-negative integer")?;
        if x > MAX_ORDER {
            return Err(Error::Capacity(format!(
                "argument {x} of '{name}' exceeds {MAX_ORDER}"
            )));
        }
        nums.push(x);
    }
    match (name, nums.as_slice()) {
        ("complete", &[k]) => Graph::complete(k),
        ("empty", &[k]) => Graph::empty(k),
        ("path", &[k]) => Graph::path(k),
        ("cycle", &[k]) => Graph::cycle(k),
        ("star", &[k]) => Graph::star(k),
        ("matching", &[k]) => Graph::matching(k),
        ("claw", &[]) => Ok(Graph::claw()),
        ("paw", &[]) => Ok(Graph::paw()),
        ("diamond", &[]) => Ok(Graph::diamond()),
        ("H", &[p, q, r]) => h_graph(HParams::new(p, q, r)?),
        ("S", &[p, r]) => s_graph(SplitParams::new(p, r)?),
        ("Q", &[p, r, x, y]) => q_graph(QParams::new(p, r, x, y)?),
        _ => Err(Error::Internal(format!(
            "catalog entry '{name}' has no builder"
        ))),
    }
}

/// `"n;u-v,..."`, the inverse of [`parse_edge_list`].
pub fn format_edge_list(g: &Graph) -> String {
    let mut s = format!("{};", g.order());
    for (i, (u, v)) in g.edges().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{u}-{v}");
    }
    s
}

/// graph6 when it fits, otherwise the edge list.
fn portable(g: &Graph) -> String {
    encode_graph6(g).unwrap_or_else(|_| format_edge_list(g))
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphSummary {
    pub graph6: String,
    pub order: usize,
    pub edge_count: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphSummary {
    pub fn new(g: &Graph) -> Self {
        Self {
            graph6: portable(g),
            order: g.order(),
            edge_count: g.edge_count(),
            edges: g.edges().collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub input: String,
    pub graph: GraphSummary,
    pub class: ForbiddenClass,
    pub verdict: Verdict,
    /// Canonical H-parameters when the graph is an H-graph (TNF or not).
    pub h_params: Option<HParams>,
    /// Construction used for witnesses; absent for non-feasible families.
    pub construction: Option<Construction>,
}

impl ClassifyReport {
    pub fn new(spec: &GraphSpecifier) -> Self {
        let g = &spec.graph;
        Self {
            input: spec.source.clone(),
            graph: GraphSummary::new(g),
            class: classify(g),
            verdict: feasibility_verdict(g),
            h_params: induced_free::recognize_h(g),
            construction: induced_free::classifier::select_construction(g).ok(),
        }
    }

    pub fn human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "input:     {}", self.input);
        let _ = writeln!(
            s,
            "graph:     {} ({} vertices, {} edges)",
            self.graph.graph6, self.graph.order, self.graph.edge_count
        );
        let verdict = match self.verdict {
            Verdict::Feasible => "Feasible".to_string(),
            Verdict::Infeasible { kind, k } => format!("Infeasible ({kind}, k={k})"),
            Verdict::Degenerate { order } => {
                format!("Degenerate (order {order}; every non-empty graph contains it)")
            }
        };
        let _ = writeln!(s, "verdict:   {verdict}");
        let class = match self.class {
            ForbiddenClass::Degenerate { .. } => "degenerate".to_string(),
            ForbiddenClass::Tnf { kind, k } => format!("trivially non-feasible ({kind}, k={k})"),
            ForbiddenClass::HGraph { params } => format!("H-graph {}", h_name(params)),
            ForbiddenClass::General => "general (not an H-graph)".to_string(),
        };
        let _ = writeln!(s, "class:     {class}");
        if let Some(h) = self.h_params {
            let _ = writeln!(s, "H-params:  {}", h_name(h));
        }
        if let Some(c) = self.construction {
            let _ = writeln!(s, "witnesses: {c}");
        }
        s
    }
}

fn h_name(h: HParams) -> String {
    format!("H({},{},{})", h.p, h.q, h.r)
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub forbidden: String,
    pub n: usize,
    pub m: usize,
    pub construction: Construction,
    pub verified: bool,
    pub graph: GraphSummary,
}

impl WitnessReport {
    pub fn new(cert: &WitnessCertificate) -> Self {
        Self {
            forbidden: portable(&cert.forbidden),
            n: cert.n,
            m: cert.m,
            construction: cert.construction,
            verified: cert.verified,
            graph: GraphSummary::new(&cert.graph),
        }
    }

    pub fn human(&self) -> String {
        format!(
            "{}\nconstruction: {}\nvertices: {}\nedges: {}\nverified: {}\n",
            self.graph.graph6,
            self.construction,
            self.n,
            self.m,
            if self.verified {
                "yes"
            } else {
                "no (pass --verify to check)"
            }
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PairsReport {
    pub forbidden: Vec<String>,
    pub n: usize,
    pub max_edges: usize,
    pub feasible: Vec<bool>,
    pub infeasible: Vec<usize>,
    pub f: Option<usize>,
    #[serde(rename = "F")]
    pub big_f: Option<usize>,
}

impl PairsReport {
    pub fn new(forbidden: &[Graph], table: &PairTable) -> Self {
        Self {
            forbidden: forbidden.iter().map(portable).collect(),
            n: table.n,
            max_edges: table.feasible.len() - 1,
            feasible: table.feasible.clone(),
            infeasible: table.infeasible(),
            f: table.min_infeasible,
            big_f: table.max_infeasible,
        }
    }

    pub fn human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "forbidden: {}", self.forbidden.join(" "));
        let _ = writeln!(s, "n = {}, m in 0..={}", self.n, self.max_edges);
        if self.infeasible.is_empty() {
            let _ = writeln!(s, "all edge counts feasible");
        } else {
            let list: Vec<String> = self.infeasible.iter().map(|m| m.to_string()).collect();
            let _ = writeln!(s, "infeasible m: {}", list.join(", "));
            let _ = writeln!(s, "f = {}, F = {}", opt(self.f), opt(self.big_f));
        }
        s
    }
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub kind: induced_free::TnfKind,
    pub k: usize,
    pub n: usize,
    pub max_edges: usize,
    /// Inclusive `[lo, hi]`; null when nothing is known infeasible.
    pub range: Option<(usize, usize)>,
    pub exact: bool,
}

impl BoundsReport {
    pub fn new(region: &TnfRegion) -> Self {
        Self {
            kind: region.kind,
            k: region.k,
            n: region.n,
            max_edges: induced_free::choose2(region.n),
            range: region.range,
            exact: region.exact,
        }
    }

    pub fn human(&self) -> String {
        let region = match self.range {
            Some((lo, hi)) => format!("[{lo}, {hi}]"),
            None => "none".to_string(),
        };
        format!(
            "{} k={} n={}: infeasible m in {} ({})\n",
            self.kind,
            self.k,
            self.n,
            region,
            if self.exact {
                "exact"
            } else {
                "known part only, not exact"
            }
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EncodeEntry {
    pub input: String,
    pub graph6: String,
    pub order: usize,
    pub edge_count: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecodeEntry {
    pub graph6: String,
    pub edge_list: String,
    pub order: usize,
    pub edge_count: usize,
    pub edges: Vec<(usize, usize)>,
}

impl DecodeEntry {
    pub fn new(g: &Graph) -> Self {
        Self {
            graph6: portable(g),
            edge_list: format_edge_list(g),
            order: g.order(),
            edge_count: g.edge_count(),
            edges: g.edges().collect(),
        }
    }
}
