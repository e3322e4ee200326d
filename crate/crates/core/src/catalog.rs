//! A fixed catalog of small graphs used by sweeps and tests.
//!
//! It holds every graph on at most five vertices up to isomorphism together
//! with named members of the families studied elsewhere in the crate.

use std::collections::BTreeMap;

use crate::graph::{x_labels, Graph};

/// A named catalog graph.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub graph: Graph,
}

/// Adjacency bitmask of `g` under the vertex order `perm`.
fn code_under(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.order();
    let mut code = 0u64;
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.adjacent(perm[i], perm[j]) {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                extend(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// Isomorphism-invariant code by brute force over vertex orders. Only
/// sensible for a handful of vertices.
pub fn small_canonical_code(g: &Graph) -> u64 {
    assert!(
        g.order() <= 8,
        "brute-force canonical code needs at most 8 vertices"
    );
    permutations(g.order())
        .iter()
        .map(|p| code_under(g, p))
        .max()
        .unwrap_or(0)
}

/// All graphs on `n` vertices up to isomorphism, ordered by edge count and
/// then canonical code.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(
        n <= 6,
        "exhaustive graph enumeration is limited to 6 vertices"
    );
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let perms = permutations(n);
    let mut seen: BTreeMap<(usize, u64), Graph> = BTreeMap::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_index_edges(x_labels(n), &edges).expect("valid edges");
        let code = perms.iter().map(|p| code_under(&g, p)).max().unwrap_or(0);
        seen.entry((edges.len(), code)).or_insert(g);
    }
    seen.into_values().collect()
}

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_index_edges(x_labels(10), &edges).expect("Petersen graph")
}

fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..a)
        .flat_map(|i| (a..a + b).map(move |j| (i, j)))
        .collect();
    Graph::from_index_edges(x_labels(a + b), &edges).expect("complete bipartite graph")
}

/// Named graphs with six to ten vertices.
pub fn named_graphs() -> Vec<CatalogEntry> {
    let ok = |r: crate::Result<Graph>| r.expect("catalog constructor");
    let entries = vec![
        ("C6", ok(Graph::cycle(6))),
        ("C7", ok(Graph::cycle(7))),
        ("C8", ok(Graph::cycle(8))),
        ("C6(1,2)", ok(Graph::circulant(6, 2))),
        ("C7(1,2)", ok(Graph::circulant(7, 2))),
        ("C8(1,2)", ok(Graph::circulant(8, 2))),
        ("C8(1,2,3)", ok(Graph::circulant(8, 3))),
        ("C9(1,2)", ok(Graph::circulant(9, 2))),
        ("P6", Graph::path(6)),
        ("P7", Graph::path(7)),
        ("P(6,2)", ok(Graph::banded_path(6, 2))),
        ("P(8,3)", ok(Graph::banded_path(8, 3))),
        ("K6", Graph::complete(6)),
        ("K3,3", complete_bipartite(3, 3)),
        ("K2,4", complete_bipartite(2, 4)),
        ("Petersen", petersen()),
        ("A(3,3)", ok(Graph::two_cliques(3, 3))),
        ("A(3,4)", ok(Graph::two_cliques(3, 4))),
        ("A(4,4)", ok(Graph::two_cliques(4, 4))),
        ("A(3,6)", ok(Graph::two_cliques(3, 6))),
        ("H3", ok(Graph::h_family(3))),
        ("H4", ok(Graph::h_family(4))),
        ("whisker(C3)", Graph::whisker(&ok(Graph::cycle(3)))),
        ("whisker(P3)", Graph::whisker(&Graph::path(3))),
        ("whisker(K4)", Graph::whisker(&Graph::complete(4))),
        ("whisker(C4)", Graph::whisker(&ok(Graph::cycle(4)))),
        (
            "P5+P2 linked",
            ok(Graph::linked_join(
                &Graph::path(5),
                &[1, 2, 4],
                &Graph::path(2),
                &[0, 1],
            )),
        ),
        (
            "K3+C4 join",
            Graph::join(&Graph::complete(3), &ok(Graph::cycle(4))),
        ),
        (
            "C5+K1 join",
            Graph::join(&ok(Graph::cycle(5)), &Graph::complete(1)),
        ),
    ];
    entries
        .into_iter()
        .map(|(name, graph)| CatalogEntry {
            name: name.to_string(),
            graph,
        })
        .collect()
}

/// Every graph on 1 to `small_max` vertices, then the named graphs.
pub fn catalog_with(small_max: usize) -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for n in 1..=small_max {
        for (k, graph) in all_graphs(n).into_iter().enumerate() {
            out.push(CatalogEntry {
                name: format!("n{n}#{k}"),
                graph,
            });
        }
    }
    out.extend(named_graphs());
    out
}

/// The default catalog: all graphs on at most five vertices plus the named graphs.
pub fn catalog() -> Vec<CatalogEntry> {
    catalog_with(5)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| all_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn petersen_shape() {
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(p.independence_number(), 4);
    }

    #[test]
    fn catalog_is_large_enough() {
        let c = catalog();
        assert!(c.len() >= 30);
        assert!(c.iter().all(|e| e.graph.order() <= 10));
    }

    #[test]
    fn canonical_code_is_invariant() {
        let a = Graph::from_index_edges(x_labels(4), &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_index_edges(x_labels(4), &[(3, 2), (2, 0)]).unwrap();
        assert_eq!(small_canonical_code(&a), small_canonical_code(&b));
        assert!(a.is_isomorphic(&b));
    }
}
