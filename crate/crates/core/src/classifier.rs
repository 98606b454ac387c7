//! Classification of forbidden graphs and the witness dispatcher.
//!
//! The trivially non-feasible (TNF) graphs are `K_k`, `K_k` minus an edge,
//! and their complements, for `k >= 2`. For every other forbidden graph `G`
//! (on at least two vertices) and every `(n, m)`, [`witness`] builds an
//! induced-`G`-free graph with `n` vertices and `m` edges.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::constructions::{k3k2_witness, uep_witness, HParams};
use crate::error::{Error, Result};
use crate::graph::{choose2, Graph, MAX_ORDER};
use crate::iso::contains_induced;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TnfKind {
    /// `K_k`
    Clique,
    /// `K_k` minus one edge
    CliqueMinusEdge,
    /// `k` isolated vertices
    Empty,
    /// one edge plus `k - 2` isolated vertices
    EmptyPlusEdge,
}

impl TnfKind {
    pub const ALL: [TnfKind; 4] = [
        TnfKind::Clique,
        TnfKind::CliqueMinusEdge,
        TnfKind::Empty,
        TnfKind::EmptyPlusEdge,
    ];

    /// The TNF graph of this kind on `k` vertices.
    pub fn graph(self, k: usize) -> Result<Graph> {
        if k < 2 {
            return Err(Error::Parameter(format!(
                "TNF size k must be at least 2, got {k}"
            )));
        }
        let kk = Graph::complete(k)?;
        Ok(match self {
            TnfKind::Clique => kk,
            TnfKind::CliqueMinusEdge => kk.without_edge(k - 2, k - 1),
            TnfKind::Empty => kk.complement(),
            TnfKind::EmptyPlusEdge => kk.without_edge(k - 2, k - 1).complement(),
        })
    }

    pub fn complement(self) -> Self {
        match self {
            TnfKind::Clique => TnfKind::Empty,
            TnfKind::Empty => TnfKind::Clique,
            TnfKind::CliqueMinusEdge => TnfKind::EmptyPlusEdge,
            TnfKind::EmptyPlusEdge => TnfKind::CliqueMinusEdge,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TnfKind::Clique => "Clique",
            TnfKind::CliqueMinusEdge => "CliqueMinusEdge",
            TnfKind::Empty => "Empty",
            TnfKind::EmptyPlusEdge => "EmptyPlusEdge",
        }
    }
}

impl fmt::Display for TnfKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for TnfKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| c.is_ascii_alphanumeric()).collect();
        match key.to_ascii_lowercase().as_str() {
            "clique" | "complete" => Ok(TnfKind::Clique),
            "cliqueminusedge" => Ok(TnfKind::CliqueMinusEdge),
            "empty" => Ok(TnfKind::Empty),
            "emptyplusedge" => Ok(TnfKind::EmptyPlusEdge),
            _ => Err(Error::Parse {
                offset: 0,
                message: format!("unknown TNF kind '{s}'"),
            }),
        }
    }
}

/// Classification of a forbidden graph. TNF takes precedence over `HGraph`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "class")]
pub enum ForbiddenClass {
    /// Fewer than two vertices.
    Degenerate {
        order: usize,
    },
    Tnf {
        kind: TnfKind,
        k: usize,
    },
    HGraph {
        params: HParams,
    },
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum Verdict {
    Feasible,
    Infeasible {
        kind: TnfKind,
        k: usize,
    },
    /// `K_1` or the null graph; the family of graphs avoiding it is not meaningful.
    Degenerate {
        order: usize,
    },
}

/// Which construction produced a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Construction {
    #[serde(rename = "UEP")]
    Uep,
    #[serde(rename = "UEP_COMPLEMENT")]
    UepComplement,
    #[serde(rename = "K3K2")]
    K3K2,
    #[serde(rename = "K3K2_COMPLEMENT")]
    K3K2Complement,
}

impl Construction {
    pub fn tag(self) -> &'static str {
        match self {
            Construction::Uep => "UEP",
            Construction::UepComplement => "UEP_COMPLEMENT",
            Construction::K3K2 => "K3K2",
            Construction::K3K2Complement => "K3K2_COMPLEMENT",
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Auditable witness: `graph` has `n` vertices, `m` edges and, when
/// `verified` is set, has been checked to contain no induced `forbidden`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCertificate {
    pub graph: Graph,
    pub n: usize,
    pub m: usize,
    pub forbidden: Graph,
    pub construction: Construction,
    pub verified: bool,
}

/// Match `g` against the four TNF shapes. Graphs on fewer than two vertices
/// return `None`; see [`feasibility_verdict`] for how those are flagged.
pub fn recognize_tnf(g: &Graph) -> Option<(TnfKind, usize)> {
    let k = g.order();
    if k < 2 {
        return None;
    }
    // Each shape is determined up to isomorphism by its edge count.
    let e = g.edge_count();
    let full = choose2(k);
    if e == full {
        Some((TnfKind::Clique, k))
    } else if e == 0 {
        Some((TnfKind::Empty, k))
    } else if e == full - 1 {
        Some((TnfKind::CliqueMinusEdge, k))
    } else if e == 1 {
        Some((TnfKind::EmptyPlusEdge, k))
    } else {
        None
    }
}

/// Recognize `g` as `H(p,q,r)` and return canonical parameters.
pub fn recognize_h(g: &Graph) -> Option<HParams> {
    if g.order() == 0 {
        return None;
    }
    let isolated = g.isolated_vertices();
    let r = isolated.count_ones() as usize;
    let core: Vec<usize> = (0..g.order()).filter(|&v| isolated >> v & 1 == 0).collect();
    let p = core.len();
    if p == 0 {
        return Some(HParams { p: 0, q: 0, r });
    }

    // The complement of the core must be a star plus isolated vertices.
    let co = g.induced(&core).complement();
    let missing = co.edge_count();
    let q = match missing {
        0 | 1 => missing,
        _ => {
            let center = (0..p).max_by_key(|&v| co.degree(v))?;
            if co.degree(center) != missing {
                return None;
            }
            missing
        }
    };
    let h = HParams::new(p, q, r).ok()?;
    Some(h.canonical())
}

pub fn classify(g: &Graph) -> ForbiddenClass {
    if g.order() < 2 {
        return ForbiddenClass::Degenerate { order: g.order() };
    }
    if let Some((kind, k)) = recognize_tnf(g) {
        return ForbiddenClass::Tnf { kind, k };
    }
    match recognize_h(g) {
        Some(params) => ForbiddenClass::HGraph { params },
        None => ForbiddenClass::General,
    }
}

pub fn feasibility_verdict(g: &Graph) -> Verdict {
    if g.order() < 2 {
        return Verdict::Degenerate { order: g.order() };
    }
    match recognize_tnf(g) {
        Some((kind, k)) => Verdict::Infeasible { kind, k },
        None => Verdict::Feasible,
    }
}

/// Pick the construction for a non-TNF forbidden graph.
pub fn select_construction(forbidden: &Graph) -> Result<Construction> {
    match classify(forbidden) {
        ForbiddenClass::Degenerate { order } => Err(Error::DegenerateForbidden { order }),
        ForbiddenClass::Tnf { kind, k } => Err(Error::InfeasibleFamily { kind, k }),
        ForbiddenClass::General => Ok(Construction::Uep),
        ForbiddenClass::HGraph { params } => construction_for_h(params),
    }
}

/// Dispatch over canonical non-TNF H-graph parameters.
fn construction_for_h(h: HParams) -> Result<Construction> {
    let HParams { p, q, r } = h;
    match (p, q, r) {
        // Q-graphs never contain H(p,q,r) with a star of two or more edges.
        (p, q, _) if p >= 4 && (2..=p - 2).contains(&q) => Ok(Construction::K3K2),
        // The complement contains a claw; UEP graphs are claw-free.
        (p, 0, r) if p >= 3 && r >= 1 => Ok(Construction::UepComplement),
        (p, 1, r) if p >= 4 && r >= 1 => Ok(Construction::UepComplement),
        // The complement is H(r+3, 2, 0), which Q-graphs avoid.
        (3, 1, r) if r >= 1 => Ok(Construction::K3K2Complement),
        _ => Err(Error::Internal(format!(
            "no construction for H({p},{q},{r}); it should have classified as TNF"
        ))),
    }
}

/// Build an induced-`forbidden`-free graph with `n` vertices and `m` edges.
///
/// With `verify` set the result is checked with the embedding oracle, and a
/// failed check is reported as [`Error::Internal`].
pub fn witness(forbidden: &Graph, n: usize, m: usize, verify: bool) -> Result<WitnessCertificate> {
    let construction = select_construction(forbidden)?;
    if n > MAX_ORDER {
        return Err(Error::Capacity(format!("{n} vertices exceeds {MAX_ORDER}")));
    }
    let total = choose2(n);
    if m > total {
        return Err(Error::Range(format!(
            "{m} edges is more than C({n},2) = {total}"
        )));
    }
    let graph = match construction {
        Construction::Uep => uep_witness(n, m)?,
        Construction::UepComplement => uep_witness(n, total - m)?.complement(),
        Construction::K3K2 => k3k2_witness(n, m)?,
        Construction::K3K2Complement => k3k2_witness(n, total - m)?.complement(),
    };
    if graph.order() != n || graph.edge_count() != m {
        return Err(Error::Internal(format!(
            "{construction} produced {} vertices and {} edges for ({n}, {m})",
            graph.order(),
            graph.edge_count()
        )));
    }
    let verified = if verify {
        if let Some(e) = contains_induced(&graph, forbidden) {
            return Err(Error::Internal(format!(
                "{construction} witness for ({n}, {m}) contains the forbidden graph at {:?}",
                e.map()
            )));
        }
        true
    } else {
        false
    };
    Ok(WitnessCertificate {
        graph,
        n,
        m,
        forbidden: forbidden.clone(),
        construction,
        verified,
    })
}

/// Turán number `ex(n, K_k)`: edges of the complete `(k-1)`-partite graph
/// with near-equal parts.
pub fn turan_number(n: usize, k: usize) -> Result<usize> {
    if k < 2 {
        return Err(Error::Parameter(format!(
            "clique size k must be at least 2, got {k}"
        )));
    }
    let parts = k - 1;
    let small = n / parts;
    let large_count = n % parts;
    Ok(choose2(n) - large_count * choose2(small + 1) - (parts - large_count) * choose2(small))
}

/// Edge counts known to be infeasible for the induced-TNF-free family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TnfRegion {
    pub kind: TnfKind,
    pub k: usize,
    pub n: usize,
    /// Inclusive `[lo, hi]`, or `None` when nothing is known infeasible.
    pub range: Option<(usize, usize)>,
    /// Whether `range` is exactly the infeasible set.
    pub exact: bool,
}

impl TnfRegion {
    pub fn contains(&self, m: usize) -> bool {
        self.range.is_some_and(|(lo, hi)| lo <= m && m <= hi)
    }

    pub fn edge_counts(&self) -> Vec<usize> {
        match self.range {
            Some((lo, hi)) => (lo..=hi).collect(),
            None => Vec::new(),
        }
    }
}

/// Known infeasible edge counts at `n` vertices for the family avoiding the
/// TNF graph `(kind, k)`.
///
/// Clique and Empty regions are exact (Turán). The CliqueMinusEdge region
/// comes from the fact that deleting at most `floor((n-k+2)/2)` edges from
/// `K_n` leaves `k-2` universal vertices, which with any missing edge induce
/// `K_k` minus an edge; EmptyPlusEdge mirrors it.
pub fn tnf_infeasible_region(kind: TnfKind, k: usize, n: usize) -> Result<TnfRegion> {
    if k < 2 {
        return Err(Error::Parameter(format!(
            "TNF size k must be at least 2, got {k}"
        )));
    }
    if n < 1 {
        return Err(Error::Parameter("vertex count must be at least 1".into()));
    }
    let total = choose2(n);
    let (range, exact) = match kind {
        TnfKind::Clique => {
            let ex = turan_number(n, k)?;
            ((ex < total).then(|| (ex + 1, total)), true)
        }
        TnfKind::Empty => {
            let ex = turan_number(n, k)?;
            ((ex < total).then(|| (0, total - ex - 1)), true)
        }
        TnfKind::CliqueMinusEdge => {
            let range = (n >= k).then(|| {
                let t = (n - k + 2) / 2;
                (total - t, total - 1)
            });
            (range, false)
        }
        TnfKind::EmptyPlusEdge => {
            let range = (n >= k).then(|| (1, (n - k + 2) / 2));
            (range, false)
        }
    };
    Ok(TnfRegion {
        kind,
        k,
        n,
        range,
        exact,
    })
}
