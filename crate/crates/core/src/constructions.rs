//! Witness-graph generators.
//!
//! Every `*_witness` function returns a graph with exactly the requested
//! vertex and edge counts. The shapes:
//!
//! * `H(p,q,r)`: `K_p` minus a star `K_{1,q}`, plus `r` isolated vertices.
//!   These are the graphs met along the universal elimination process (UEP),
//!   which empties `K_n` by isolating one vertex at a time.
//! * `S(p,r)`: the complete split graph, `K_p` joined to `r` independent vertices.
//! * `Q(p,r,x,y)`: `K_p` minus `x` vertex-disjoint triangles and `y` further
//!   disjoint edges, plus `r` isolated vertices.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{choose2, Graph, MAX_ORDER};

/// Parameters of `H(p,q,r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HParams {
    pub p: usize,
    pub q: usize,
    pub r: usize,
}

impl HParams {
    pub fn new(p: usize, q: usize, r: usize) -> Result<Self> {
        let h = Self { p, q, r };
        h.validate()?;
        Ok(h)
    }

    fn validate(&self) -> Result<()> {
        if self.q > self.p.saturating_sub(1) {
            return Err(Error::Parameter(format!(
                "H({},{},{}): q must be at most max(p-1, 0)",
                self.p, self.q, self.r
            )));
        }
        if self.order() > MAX_ORDER {
            return Err(Error::Capacity(format!(
                "H-graph order {} exceeds {MAX_ORDER}",
                self.order()
            )));
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.p + self.r
    }

    pub fn edge_count(&self) -> usize {
        choose2(self.p) - self.q
    }

    /// Rewrite to the unique representative with `q <= p - 2` or `p <= 1`.
    ///
    /// Deleting a full star isolates the center, so `H(p, p-1, r)` is
    /// `H(p-1, 0, r+1)`; and `H(1,0,r)` is the edgeless `H(0,0,r+1)`.
    pub fn canonical(self) -> Self {
        let mut h = self;
        loop {
            if h.p >= 2 && h.q == h.p - 1 {
                h = Self {
                    p: h.p - 1,
                    q: 0,
                    r: h.r + 1,
                };
            } else if h.p == 1 {
                h = Self {
                    p: 0,
                    q: 0,
                    r: h.r + 1,
                };
            } else {
                return h;
            }
        }
    }
}

/// Parameters of `Q(p,r,x,y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QParams {
    pub p: usize,
    pub r: usize,
    pub x: usize,
    pub y: usize,
}

impl QParams {
    pub fn new(p: usize, r: usize, x: usize, y: usize) -> Result<Self> {
        if 3 * x + 2 * y > p {
            return Err(Error::Parameter(format!(
                "Q({p},{r},{x},{y}): {x} triangles and {y} edges do not fit disjointly in K_{p}"
            )));
        }
        if p + r > MAX_ORDER {
            return Err(Error::Capacity(format!(
                "Q-graph order {} exceeds {MAX_ORDER}",
                p + r
            )));
        }
        Ok(Self { p, r, x, y })
    }

    pub fn edge_count(&self) -> usize {
        choose2(self.p) - 3 * self.x - self.y
    }
}

/// Parameters of the complete split graph `S(p,r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SplitParams {
    pub p: usize,
    pub r: usize,
}

impl SplitParams {
    pub fn new(p: usize, r: usize) -> Result<Self> {
        if p + r < 2 {
            return Err(Error::Parameter(format!(
                "S({p},{r}): p + r must be at least 2"
            )));
        }
        if p + r > MAX_ORDER {
            return Err(Error::Capacity(format!(
                "split graph order {} exceeds {MAX_ORDER}",
                p + r
            )));
        }
        Ok(Self { p, r })
    }

    pub fn edge_count(&self) -> usize {
        choose2(self.p) + self.p * self.r
    }
}

/// `H(p,q,r)` with star center 0, leaves `1..=q`, isolates `p..p+r`.
pub fn h_graph(params: HParams) -> Result<Graph> {
    params.validate()?;
    let mut g = Graph::complete(params.p)?.disjoint_union(&Graph::empty(params.r)?)?;
    for leaf in 1..=params.q {
        g.set_edge(0, leaf, false);
    }
    Ok(g)
}

/// `S(p,r)`: clique on `0..p`, independent set on `p..p+r`.
pub fn s_graph(params: SplitParams) -> Result<Graph> {
    let SplitParams { p, r } = SplitParams::new(params.p, params.r)?;
    Graph::complete(p)?.join(&Graph::empty(r)?)
}

/// `Q(p,r,x,y)`: triangles on `{0,1,2}, {3,4,5}, ...`, then edges on the
/// next `2y` vertices, all removed from `K_p`; isolates follow.
pub fn q_graph(params: QParams) -> Result<Graph> {
    let QParams { p, r, x, y } = QParams::new(params.p, params.r, params.x, params.y)?;
    let mut g = Graph::complete(p)?.disjoint_union(&Graph::empty(r)?)?;
    remove_packing(&mut g, 0, x, y);
    Ok(g)
}

/// Delete `x` triangles then `y` edges, vertex-disjoint, starting at `start`.
fn remove_packing(g: &mut Graph, start: usize, x: usize, y: usize) {
    for i in 0..x {
        let a = start + 3 * i;
        g.set_edge(a, a + 1, false);
        g.set_edge(a, a + 2, false);
        g.set_edge(a + 1, a + 2, false);
    }
    let base = start + 3 * x;
    for i in 0..y {
        g.set_edge(base + 2 * i, base + 2 * i + 1, false);
    }
}

/// Add `x` triangles then `y` edges, vertex-disjoint, starting at `start`.
fn add_packing(g: &mut Graph, start: usize, x: usize, y: usize) {
    for i in 0..x {
        let a = start + 3 * i;
        g.set_edge(a, a + 1, true);
        g.set_edge(a, a + 2, true);
        g.set_edge(a + 1, a + 2, true);
    }
    let base = start + 3 * x;
    for i in 0..y {
        g.set_edge(base + 2 * i, base + 2 * i + 1, true);
    }
}

fn check_pair(n: usize, m: usize) -> Result<()> {
    if n > MAX_ORDER {
        return Err(Error::Capacity(format!("{n} vertices exceeds {MAX_ORDER}")));
    }
    if m > choose2(n) {
        return Err(Error::Range(format!(
            "{m} edges is more than C({n},2) = {}",
            choose2(n)
        )));
    }
    Ok(())
}

/// Smallest `p` with `C(p,2) >= m`.
pub fn min_clique_for(m: usize) -> usize {
    let mut p = 0;
    while choose2(p) < m {
        p += 1;
    }
    p
}

/// The UEP graph on `n` vertices and `m` edges, as `H(p, C(p,2)-m, n-p)` with `p` minimal.
pub fn uep_witness(n: usize, m: usize) -> Result<Graph> {
    check_pair(n, m)?;
    let p = min_clique_for(m);
    h_graph(HParams::new(p, choose2(p) - m, n - p)?)
}

/// Run the elimination process on `K_n` literally, yielding the graph after
/// each deletion (edge counts `C(n,2), C(n,2)-1, ..., 0`).
///
/// Vertices are isolated in index order; within one vertex, the edge toward
/// the highest-indexed remaining neighbor goes first.
pub fn uep_process(n: usize) -> Result<impl Iterator<Item = Graph>> {
    let mut g = Graph::complete(n)?;
    let mut first = true;
    Ok(std::iter::from_fn(move || {
        if first {
            first = false;
            return Some(g.clone());
        }
        let v = (0..g.order()).find(|&v| g.degree(v) > 0)?;
        let u = 63 - g.neighbors(v).leading_zeros() as usize;
        g.set_edge(v, u, false);
        Some(g.clone())
    }))
}

/// Split `t` deletions into `x` triangles and `y` edges that pack
/// vertex-disjointly into `K_n`: `3x + y = t` and `3x + 2y <= n`.
///
/// Takes as many triangles as possible, `x = t / 3`, `y = t % 3`. The packing
/// then spans `t + t % 3 <= t + 2 <= n` vertices.
pub fn k3k2_decompose(n: usize, t: usize) -> Result<(usize, usize)> {
    if n < 2 {
        return Err(Error::Range(format!(
            "triangle/edge packing needs n >= 2, got {n}"
        )));
    }
    if t > n - 2 {
        return Err(Error::Range(format!("t = {t} exceeds n - 2 = {}", n - 2)));
    }
    Ok((t / 3, t % 3))
}

/// `Q(p, n-p, x, y)` with `p` minimal such that `C(p,2) >= m` and the
/// `t = C(p,2) - m` deletions split by [`k3k2_decompose`].
pub fn k3k2_witness(n: usize, m: usize) -> Result<Graph> {
    check_pair(n, m)?;
    let p = min_clique_for(m);
    let t = choose2(p) - m;
    let (x, y) = if p < 2 { (0, 0) } else { k3k2_decompose(p, t)? };
    q_graph(QParams::new(p, n - p, x, y)?)
}

/// Edge count of `K_p` joined to `n-p` independent vertices.
fn split_base(n: usize, p: usize) -> usize {
    choose2(p) + p * (n - p)
}

/// Graph on `n >= 3` vertices and `m` edges with no induced `P_3 ∪ K_1` and
/// no induced `K_4 ∪ K_1`.
///
/// Below `C(n,2) - 1` edges: `K_p` joined to a triangle/edge packing on the
/// other `n-p` vertices, where `p` is the unique value in `0..=n-3` whose
/// window `[base(p), base(p) + n-p-2]` holds `m`. The top two counts use
/// `K_n` minus an edge and `K_n`.
pub fn split_pack_witness(n: usize, m: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Range(format!("split packing needs n >= 3, got {n}")));
    }
    check_pair(n, m)?;
    let total = choose2(n);
    if m == total {
        return Graph::complete(n);
    }
    if m == total - 1 {
        return Ok(Graph::complete(n)?.without_edge(n - 2, n - 1));
    }
    let (p, k) = split_window(n, m)
        .ok_or_else(|| Error::Internal(format!("no split window holds m = {m} at n = {n}")))?;
    let (a, b) = k3k2_decompose(n - p, k)?;
    let mut g = Graph::complete(p)?.join(&Graph::empty(n - p)?)?;
    add_packing(&mut g, p, a, b);
    Ok(g)
}

/// `(p, k)` with `m = base(p) + k`, `0 <= k <= n-p-2`, `p <= n-3`.
pub fn split_window(n: usize, m: usize) -> Option<(usize, usize)> {
    (0..=n.checked_sub(3)?).find_map(|p| {
        let base = split_base(n, p);
        (base <= m && m <= base + (n - p - 2)).then(|| (p, m - base))
    })
}

/// `m` disjoint edges plus `n - 2m` isolated vertices.
pub fn matching_witness(n: usize, m: usize) -> Result<Graph> {
    if n > MAX_ORDER {
        return Err(Error::Capacity(format!("{n} vertices exceeds {MAX_ORDER}")));
    }
    if 2 * m > n {
        return Err(Error::Range(format!(
            "{m} disjoint edges do not fit on {n} vertices"
        )));
    }
    Graph::matching(m)?.disjoint_union(&Graph::empty(n - 2 * m)?)
}
