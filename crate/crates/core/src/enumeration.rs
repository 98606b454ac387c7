//! Exhaustive enumeration of small graphs and feasible-pair tables.

use std::collections::HashSet;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{choose2, Graph};
use crate::iso::{canonical_form, contains_induced};

/// Largest order supported by exhaustive enumeration.
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Above this order, classes are built by one-vertex extension instead of a
/// full labeled scan.
const LABELED_SCAN_MAX: usize = 6;

fn check_enumeration_order(n: usize) -> Result<()> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::Capacity(format!(
            "exhaustive enumeration is limited to {MAX_ENUMERATION_ORDER} vertices (got {n}); \
             use the witness constructions or a sampling approach for larger orders"
        )));
    }
    Ok(())
}

/// Labeled graph on `n` vertices whose edge set is given by the bits of
/// `code`, in the column-major upper-triangle order also used by graph6.
pub fn labeled_graph(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("labeled graph fits")
}

/// Every labeled graph on `n` vertices (`2^C(n,2)` of them).
pub fn labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_enumeration_order(n)?;
    Ok((0..1u64 << choose2(n)).map(move |code| labeled_graph(n, code)))
}

fn generate(n: usize) -> Vec<Graph> {
    let mut out: Vec<Graph> = if n <= LABELED_SCAN_MAX {
        // Keep the labeled graphs that are their own canonical form.
        (0..1u64 << choose2(n))
            .into_par_iter()
            .filter_map(|code| {
                let g = labeled_graph(n, code);
                (canonical_form(&g) == g).then_some(g)
            })
            .collect()
    } else {
        // Every graph on n vertices is a one-vertex extension of some class
        // representative on n-1 vertices.
        let parents = cached(n - 1);
        let children: HashSet<Graph> = parents
            .par_iter()
            .flat_map_iter(|parent| {
                (0..1u64 << (n - 1)).map(move |nbrs| {
                    canonical_form(&parent.with_vertex(nbrs).expect("order within cap"))
                })
            })
            .collect();
        children.into_iter().collect()
    };
    out.sort_unstable_by(|a, b| a.edge_count().cmp(&b.edge_count()).then_with(|| a.cmp(b)));
    out
}

fn cached(n: usize) -> &'static [Graph] {
    static CACHE: [OnceLock<Vec<Graph>>; MAX_ENUMERATION_ORDER + 1] =
        [const { OnceLock::new() }; MAX_ENUMERATION_ORDER + 1];
    CACHE[n].get_or_init(|| generate(n))
}

/// One canonical representative per isomorphism class on `n` vertices,
/// ordered by edge count. Results are computed once per process.
pub fn enumerate_nonisomorphic(n: usize) -> Result<&'static [Graph]> {
    check_enumeration_order(n)?;
    Ok(cached(n))
}

/// A family of graphs defined by forbidden induced subgraphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    forbidden: Vec<Graph>,
}

impl FamilySpec {
    /// Canonicalizes, deduplicates up to isomorphism and sorts by order.
    pub fn new(forbidden: impl IntoIterator<Item = Graph>) -> Result<Self> {
        let mut list: Vec<Graph> = Vec::new();
        for g in forbidden {
            if g.order() == 0 {
                return Err(Error::Parameter(
                    "forbidden graphs need at least one vertex".into(),
                ));
            }
            let c = canonical_form(&g);
            if !list.contains(&c) {
                list.push(c);
            }
        }
        if list.is_empty() {
            return Err(Error::Parameter(
                "a family needs at least one forbidden graph".into(),
            ));
        }
        list.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
        Ok(Self { forbidden: list })
    }

    pub fn single(g: Graph) -> Result<Self> {
        Self::new([g])
    }

    pub fn forbidden(&self) -> &[Graph] {
        &self.forbidden
    }

    /// True when `g` contains no induced copy of any forbidden graph.
    pub fn is_member(&self, g: &Graph) -> bool {
        self.forbidden
            .iter()
            .take_while(|f| f.order() <= g.order())
            .all(|f| contains_induced(g, f).is_none())
    }

    /// Family of complements.
    pub fn complement(&self) -> Self {
        Self::new(self.forbidden.iter().map(Graph::complement)).expect("non-empty family")
    }
}

/// Which edge counts are realized by family members on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairTable {
    pub n: usize,
    /// `feasible[m]` for `m` in `0..=C(n,2)`.
    pub feasible: Vec<bool>,
    /// Smallest infeasible edge count.
    #[serde(rename = "f")]
    pub min_infeasible: Option<usize>,
    /// Largest infeasible edge count.
    #[serde(rename = "F")]
    pub max_infeasible: Option<usize>,
}

#[derive(Serialize)]
struct CsvRow {
    n: usize,
    m: usize,
    feasible: bool,
}

impl PairTable {
    pub fn from_feasible(n: usize, feasible: Vec<bool>) -> Self {
        debug_assert_eq!(feasible.len(), choose2(n) + 1);
        let min_infeasible = feasible.iter().position(|&f| !f);
        let max_infeasible = feasible.iter().rposition(|&f| !f);
        Self {
            n,
            feasible,
            min_infeasible,
            max_infeasible,
        }
    }

    pub fn is_feasible(&self, m: usize) -> bool {
        self.feasible.get(m).copied().unwrap_or(false)
    }

    pub fn infeasible(&self) -> Vec<usize> {
        (0..self.feasible.len())
            .filter(|&m| !self.feasible[m])
            .collect()
    }

    pub fn all_feasible(&self) -> bool {
        self.min_infeasible.is_none()
    }

    /// CSV with header `n,m,feasible`, one row per edge count.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for (m, &feasible) in self.feasible.iter().enumerate() {
            w.serialize(CsvRow {
                n: self.n,
                m,
                feasible,
            })
            .expect("in-memory csv write");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv is utf-8")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "max_edges": choose2(self.n),
            "feasible": self.feasible,
            "infeasible": self.infeasible(),
            "f": self.min_infeasible,
            "F": self.max_infeasible,
        })
    }
}

/// Exact feasible-pair table for `family` at `n` vertices.
pub fn feasible_pairs(family: &FamilySpec, n: usize) -> Result<PairTable> {
    let reps = enumerate_nonisomorphic(n)?;
    Ok(feasible_pairs_over(reps, family, n))
}

/// Table over an explicit list of representatives on `n` vertices.
pub fn feasible_pairs_over(reps: &[Graph], family: &FamilySpec, n: usize) -> PairTable {
    let slots = choose2(n) + 1;
    let feasible = reps
        .par_iter()
        .fold(
            || vec![false; slots],
            |mut acc, g| {
                let m = g.edge_count();
                if !acc[m] && family.is_member(g) {
                    acc[m] = true;
                }
                acc
            },
        )
        .reduce(
            || vec![false; slots],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x |= y);
                a
            },
        );
    PairTable::from_feasible(n, feasible)
}

/// `(f, F)`: the smallest and largest infeasible edge counts at `n`.
pub fn extremal_stats(family: &FamilySpec, n: usize) -> Result<(Option<usize>, Option<usize>)> {
    let t = feasible_pairs(family, n)?;
    Ok((t.min_infeasible, t.max_infeasible))
}

/// Edge counts `[floor(n/2)+1, n-2]` that force an induced `P_3 ∪ K_1` or
/// `K_3 ∪ K_1` on `n >= 5` vertices.
pub fn interval_check_p3k1(n: usize) -> Result<(usize, usize)> {
    if n < 5 {
        return Err(Error::Range(format!(
            "the forcing interval needs n >= 5, got {n}"
        )));
    }
    Ok((n / 2 + 1, n - 2))
}
