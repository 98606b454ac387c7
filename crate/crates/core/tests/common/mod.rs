//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the search or canonical-labeling code under test.
#![allow(dead_code)]

use induced_free::graph::{choose2, Graph};
use proptest::prelude::*;

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Upper-triangle bit code of `g` relabeled by `perm` (new vertex i = old perm[i]).
pub fn code_under(g: &Graph, perm: &[usize]) -> u64 {
    let mut code = 0u64;
    let mut k = 0;
    for j in 1..perm.len() {
        for i in 0..j {
            if g.has_edge(perm[i], perm[j]) {
                code |= 1 << k;
            }
            k += 1;
        }
    }
    code
}

pub fn identity_code(g: &Graph) -> u64 {
    code_under(g, &(0..g.order()).collect::<Vec<_>>())
}

pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let target = identity_code(b);
    permutations(a.order())
        .iter()
        .any(|p| code_under(a, p) == target)
}

/// Minimum code over all relabelings: a canonical invariant by brute force.
pub fn brute_canonical_code(g: &Graph) -> u64 {
    permutations(g.order())
        .iter()
        .map(|p| code_under(g, p))
        .min()
        .unwrap_or(0)
}

/// Number of isomorphism classes on `n` vertices by orbit marking over all
/// labeled graphs.
pub fn brute_class_count(n: usize) -> usize {
    let total = 1usize << choose2(n);
    let perms = permutations(n);
    let mut seen = vec![false; total];
    let mut classes = 0;
    for code in 0..total {
        if seen[code] {
            continue;
        }
        classes += 1;
        let g = induced_free::enumeration::labeled_graph(n, code as u64);
        for p in &perms {
            seen[code_under(&g, p) as usize] = true;
        }
    }
    classes
}

/// Induced containment by scanning every ordered vertex subset.
pub fn brute_contains_induced(host: &Graph, pattern: &Graph) -> bool {
    let k = pattern.order();
    let n = host.order();
    if k > n {
        return false;
    }
    fn rec(host: &Graph, pattern: &Graph, map: &mut Vec<usize>, used: u64) -> bool {
        let i = map.len();
        if i == pattern.order() {
            return true;
        }
        for v in 0..host.order() {
            if used >> v & 1 == 1 {
                continue;
            }
            if (0..i).all(|j| pattern.has_edge(i, j) == host.has_edge(v, map[j])) {
                map.push(v);
                if rec(host, pattern, map, used | 1 << v) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    rec(host, pattern, &mut Vec::new(), 0)
}

pub fn plus_k1(g: &Graph) -> Graph {
    g.disjoint_union(&Graph::complete(1).unwrap()).unwrap()
}

/// Random graph on `lo..=hi` vertices with each edge present independently.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), choose2(n)).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Random graph together with a random permutation of its vertices.
pub fn arb_graph_and_perm(lo: usize, hi: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(lo, hi).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}
