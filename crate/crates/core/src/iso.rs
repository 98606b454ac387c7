//! Induced embeddings, isomorphism and canonical forms.
//!
//! Two independent routes are provided on purpose: [`is_isomorphic`] runs the
//! backtracking embedding search, while [`canonical_form`] runs partition
//! refinement with individualization. Tests compare one against the other.

use std::cmp::Ordering;

use crate::graph::{bits, Graph};

/// Injective map from pattern vertices to host vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    /// `map()[i]` is the host vertex assigned to pattern vertex `i`.
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Check injectivity and the induced condition pair by pair.
    pub fn verify(&self, host: &Graph, pattern: &Graph) -> bool {
        if self.map.len() != pattern.order() {
            return false;
        }
        let mut seen = 0u64;
        for &h in &self.map {
            if h >= host.order() || seen >> h & 1 == 1 {
                return false;
            }
            seen |= 1u64 << h;
        }
        (0..pattern.order()).all(|i| {
            (0..i).all(|j| pattern.has_edge(i, j) == host.has_edge(self.map[i], self.map[j]))
        })
    }
}

/// Backtracking matcher for induced copies of `pattern` inside `host`.
struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    /// Pattern vertices in search order.
    order: Vec<usize>,
    /// Host vertices that pass the degree filters, per pattern vertex.
    allowed: Vec<u64>,
    map: Vec<usize>,
}

impl<'a> Matcher<'a> {
    fn new(host: &'a Graph, pattern: &'a Graph) -> Self {
        let k = pattern.order();
        let n = host.order();

        // Highest degree first, then prefer vertices tied to the placed prefix.
        let mut order = Vec::with_capacity(k);
        let mut placed = 0u64;
        for _ in 0..k {
            let next = (0..k)
                .filter(|&v| placed >> v & 1 == 0)
                .max_by_key(|&v| {
                    (
                        (pattern.neighbors(v) & placed).count_ones(),
                        pattern.degree(v),
                        std::cmp::Reverse(v),
                    )
                })
                .expect("unplaced vertex remains");
            order.push(next);
            placed |= 1u64 << next;
        }

        let allowed = (0..k)
            .map(|p| {
                let deg = pattern.degree(p);
                let non_deg = k - 1 - deg;
                (0..n)
                    .filter(|&h| host.degree(h) >= deg && n - 1 - host.degree(h) >= non_deg)
                    .fold(0u64, |acc, h| acc | 1u64 << h)
            })
            .collect();

        Self {
            host,
            pattern,
            order,
            allowed,
            map: vec![usize::MAX; k],
        }
    }

    /// Visit every induced embedding; stop early when `visit` returns `false`.
    /// Returns `false` if stopped early.
    fn run(&mut self, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if self.pattern.order() > self.host.order() {
            return true;
        }
        self.extend(0, 0, visit)
    }

    fn extend(&mut self, depth: usize, used: u64, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            return visit(&self.map);
        }
        let p = self.order[depth];
        let mut cand = self.allowed[p] & !used;
        for &q in &self.order[..depth] {
            let hq = self.map[q];
            let nb = self.host.neighbors(hq);
            cand &= if self.pattern.has_edge(p, q) {
                nb
            } else {
                !nb & !(1u64 << hq)
            };
            if cand == 0 {
                return true;
            }
        }
        for h in bits(cand) {
            self.map[p] = h;
            if !self.extend(depth + 1, used | 1u64 << h, visit) {
                return false;
            }
        }
        self.map[p] = usize::MAX;
        true
    }
}

/// Find an induced copy of `pattern` in `host`.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let mut found = None;
    Matcher::new(host, pattern).run(&mut |m| {
        found = Some(Embedding { map: m.to_vec() });
        false
    });
    found
}

/// Number of induced embeddings (labeled copies) of `pattern` in `host`.
pub fn count_induced_embeddings(host: &Graph, pattern: &Graph) -> u64 {
    let mut count = 0u64;
    Matcher::new(host, pattern).run(&mut |_| {
        count += 1;
        true
    });
    count
}

/// Order of the automorphism group, by exhaustive embedding search.
pub fn automorphism_count(g: &Graph) -> u64 {
    count_induced_embeddings(g, g)
}

/// Structural isomorphism test by direct search (independent of [`canonical_form`]).
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && a.degree_sequence() == b.degree_sequence()
        && contains_induced(a, b).is_some()
}

/// An ordered partition of the vertex set.
type Partition = Vec<Vec<usize>>;

/// Refine `cells` until equitable: every vertex of a cell has the same number
/// of neighbors in every cell. Splits are ordered by neighbor count, so the
/// result depends only on the structure, never on labels.
fn refine(g: &Graph, cells: &mut Partition) {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter = cells[s].iter().fold(0u64, |acc, &v| acc | 1u64 << v);
            let mut changed = false;
            let mut next: Partition = Vec::with_capacity(cells.len() + 1);
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell
                    .iter()
                    .map(|&v| ((g.neighbors(v) & splitter).count_ones(), v))
                    .collect();
                keyed.sort_unstable();
                let before = next.len();
                for chunk in keyed.chunk_by(|a, b| a.0 == b.0) {
                    next.push(chunk.iter().map(|&(_, v)| v).collect());
                }
                changed |= next.len() - before > 1;
            }
            if changed {
                *cells = next;
                continue 'outer;
            }
        }
        return;
    }
}

fn compare_relabeled(g: &Graph, a: &[usize], b: &[usize]) -> Ordering {
    // Lexicographic over the upper triangle, rows first.
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            let x = g.has_edge(a[i], a[j]);
            let y = g.has_edge(b[i], b[j]);
            if x != y {
                return x.cmp(&y);
            }
        }
    }
    Ordering::Equal
}

struct CanonSearch<'a> {
    g: &'a Graph,
    best: Option<Vec<usize>>,
}

impl CanonSearch<'_> {
    fn search(&mut self, mut cells: Partition) {
        refine(self.g, &mut cells);
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            let leaf: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            let better = match &self.best {
                None => true,
                Some(best) => compare_relabeled(self.g, &leaf, best) == Ordering::Greater,
            };
            if better {
                self.best = Some(leaf);
            }
            return;
        };

        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[t] {
            // Swapping twins inside one cell is an automorphism that fixes the
            // partition, so their subtrees produce identical leaves.
            if tried.iter().any(|&u| self.are_twins(u, v)) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend(cells[..t].iter().cloned());
            next.push(vec![v]);
            next.push(cells[t].iter().copied().filter(|&u| u != v).collect());
            next.extend(cells[t + 1..].iter().cloned());
            self.search(next);
        }
    }

    fn are_twins(&self, u: usize, v: usize) -> bool {
        let mask = !(1u64 << u | 1u64 << v);
        (self.g.neighbors(u) ^ self.g.neighbors(v)) & mask == 0
    }
}

/// A vertex order `o` such that `g.relabeled(&o)` is the canonical form.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    if g.order() == 0 {
        return Vec::new();
    }
    let mut search = CanonSearch { g, best: None };
    search.search(vec![(0..g.order()).collect()]);
    search.best.expect("search reaches at least one leaf")
}

/// Isomorphism-invariant representative of `g`'s class.
pub fn canonical_form(g: &Graph) -> Graph {
    g.relabeled(&canonical_labeling(g))
}
