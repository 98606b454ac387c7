//! Small simple undirected graphs stored as symmetric bit matrices.
//!
//! Row `v` of the matrix is the neighbor set of `v` packed into a `u64`, so
//! the vertex count is capped at [`MAX_ORDER`]. Every constructor validates
//! its input and the resulting value is never mutated afterwards.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 64;

/// `n choose 2`.
#[inline]
pub const fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Mask with the lowest `n` bits set.
#[inline]
pub const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterate over the indices of the set bits of `mask`, lowest first.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

fn check_order(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        return Err(Error::Capacity(format!(
            "graph order {order} exceeds the supported maximum of {MAX_ORDER}"
        )));
    }
    Ok(())
}

/// A simple undirected graph on at most 64 vertices.
///
/// Equality is labeled equality: two graphs compare equal only when they have
/// the same order and the same adjacency matrix. Use
/// [`is_isomorphic`](crate::iso::is_isomorphic) or
/// [`canonical_form`](crate::iso::canonical_form) for structural comparison.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self> {
        check_order(order)?;
        Ok(Self {
            rows: vec![0; order],
        })
    }

    /// Complete graph on `order` vertices.
    pub fn complete(order: usize) -> Result<Self> {
        check_order(order)?;
        let all = low_bits(order);
        Ok(Self {
            rows: (0..order).map(|v| all & !(1u64 << v)).collect(),
        })
    }

    /// Build a graph from an explicit edge list. Duplicate edges collapse.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(order)?;
        for &(u, v) in edges {
            if u == v {
                return Err(Error::Validation(format!("loop at vertex {u}")));
            }
            if u >= order || v >= order {
                return Err(Error::Validation(format!(
                    "edge {u}-{v} has an endpoint outside 0..{order}"
                )));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Build a graph from neighbor bit rows, checking symmetry and the zero diagonal.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        check_order(rows.len())?;
        let order = rows.len();
        let mask = low_bits(order);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::Validation(format!(
                    "row {v} has bits outside 0..{order}"
                )));
            }
            if row >> v & 1 == 1 {
                return Err(Error::Validation(format!("loop at vertex {v}")));
            }
            for u in bits(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::Validation(format!(
                        "adjacency is not symmetric at {v}-{u}"
                    )));
                }
            }
        }
        Ok(Self { rows })
    }

    /// Path on `k` vertices (`k - 1` edges).
    pub fn path(k: usize) -> Result<Self> {
        let edges: Vec<_> = (1..k).map(|v| (v - 1, v)).collect();
        Self::from_edges(k, &edges)
    }

    /// Cycle on `k >= 3` vertices.
    pub fn cycle(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::Parameter(format!(
                "a cycle needs at least 3 vertices, got {k}"
            )));
        }
        let edges: Vec<_> = (0..k).map(|v| (v, (v + 1) % k)).collect();
        Self::from_edges(k, &edges)
    }

    /// Star `K_{1,k}` with center 0 and `k` leaves.
    pub fn star(k: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
        Self::from_edges(k + 1, &edges)
    }

    /// `k` disjoint edges, `2k` vertices.
    pub fn matching(k: usize) -> Result<Self> {
        let edges: Vec<_> = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
        Self::from_edges(2 * k, &edges)
    }

    /// The claw `K_{1,3}`.
    pub fn claw() -> Self {
        Self::star(3).expect("claw fits")
    }

    /// Triangle `{0,1,2}` with pendant vertex 3 attached to 0.
    pub fn paw() -> Self {
        Self::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).expect("paw fits")
    }

    /// `K_4` minus the edge 2-3.
    pub fn diamond() -> Self {
        Self::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).expect("diamond fits")
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Number of non-adjacent vertex pairs.
    pub fn non_edge_count(&self) -> usize {
        choose2(self.order()) - self.edge_count()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    /// Neighbor set of `v` as a bit mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.order())
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, &row)| bits(row & !low_bits(u + 1)).map(move |v| (u, v)))
    }

    /// Vertices with no neighbors.
    pub fn isolated_vertices(&self) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, &r)| r == 0)
            .fold(0, |acc, (v, _)| acc | 1u64 << v)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn complement(&self) -> Self {
        let all = self.vertex_mask();
        Self {
            rows: self
                .rows
                .iter()
                .enumerate()
                .map(|(v, &r)| !r & all & !(1u64 << v))
                .collect(),
        }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        check_order(self.order() + other.order())?;
        let shift = self.order();
        let rows = self
            .rows
            .iter()
            .copied()
            .chain(other.rows.iter().map(|&r| r << shift))
            .collect();
        Ok(Self { rows })
    }

    /// Disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Self) -> Result<Self> {
        check_order(self.order() + other.order())?;
        let (a, b) = (self.order(), other.order());
        let a_mask = low_bits(a);
        let b_mask = low_bits(b) << a;
        let rows = self
            .rows
            .iter()
            .map(|&r| r | b_mask)
            .chain(other.rows.iter().map(|&r| (r << a) | a_mask))
            .collect();
        Ok(Self { rows })
    }

    /// Subgraph induced by `vertices`, relabeled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let rows = vertices
            .iter()
            .map(|&u| {
                vertices
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.has_edge(u, v))
                    .fold(0u64, |acc, (j, _)| acc | 1u64 << j)
            })
            .collect();
        Self { rows }
    }

    /// Relabel so that new vertex `i` is old vertex `order[i]`.
    ///
    /// `order` must be a permutation of `0..self.order()`.
    pub fn relabeled(&self, order: &[usize]) -> Self {
        debug_assert_eq!(order.len(), self.order());
        self.induced(order)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        if present {
            self.rows[u] |= 1u64 << v;
            self.rows[v] |= 1u64 << u;
        } else {
            self.rows[u] &= !(1u64 << v);
            self.rows[v] &= !(1u64 << u);
        }
    }

    /// Copy with the edge `u-v` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        g.set_edge(u, v, false);
        g
    }

    /// Append a vertex adjacent to exactly the vertices in `nbrs`.
    pub fn with_vertex(&self, nbrs: u64) -> Result<Self> {
        check_order(self.order() + 1)?;
        let new = self.order();
        debug_assert_eq!(nbrs & !self.vertex_mask(), 0);
        let mut rows: Vec<u64> = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, &r)| {
                if nbrs >> v & 1 == 1 {
                    r | 1u64 << new
                } else {
                    r
                }
            })
            .collect();
        rows.push(nbrs);
        Ok(Self { rows })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str(")")
    }
}
