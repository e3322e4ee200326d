//! Free tree enumeration by level sequences.
//!
//! Follows the constant-time-per-tree scheme of Wright, Richmond, Odlyzko and
//! McKay: a rooted tree is a level sequence, and free trees are the rooted
//! trees whose sequence is canonical for a centre root.

use crate::graph::Graph;

/// Iterator over the non-isomorphic free trees on `order` vertices.
#[derive(Debug, Clone)]
pub struct FreeTrees {
    order: usize,
    layout: Option<Vec<usize>>,
    small: Option<Graph>,
}

/// All free trees on `order` vertices, one per isomorphism class.
pub fn free_trees(order: usize) -> FreeTrees {
    match order {
        0 => FreeTrees {
            order,
            layout: None,
            small: None,
        },
        1 | 2 => FreeTrees {
            order,
            layout: None,
            small: Some(Graph::path(order)),
        },
        _ => {
            // path of length order-1 rooted at its centre
            let half = order / 2;
            let mut layout: Vec<usize> = (0..=half).collect();
            layout.extend(1..order.div_ceil(2));
            FreeTrees {
                order,
                layout: Some(layout),
                small: None,
            }
        }
    }
}

impl Iterator for FreeTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if let Some(g) = self.small.take() {
            return Some(g);
        }
        let layout = next_tree(self.layout.take()?)?;
        self.layout = next_rooted_tree(&layout, None);
        let graph = layout_to_graph(&layout);
        debug_assert_eq!(graph.order(), self.order);
        Some(graph)
    }
}

fn next_rooted_tree(predecessor: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = p.unwrap_or_else(|| {
        let mut p = predecessor.len() - 1;
        while predecessor[p] == 1 {
            p -= 1;
        }
        p
    });
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while predecessor[q] != predecessor[p] - 1 {
        q -= 1;
    }
    let mut result = predecessor.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

/// The first layout at or after `candidate` that is canonical for a free tree.
fn next_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let left_height = left.iter().max().copied().unwrap_or(0);
    let rest_height = rest.iter().max().copied().unwrap_or(0);
    let valid = rest_height > left_height
        || (rest_height == left_height
            && (left.len() < rest.len() || (left.len() == rest.len() && left <= rest)));
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let height = new_left.iter().max().copied().unwrap_or(0);
        let len = next.len();
        for (slot, level) in next[len - height - 1..].iter_mut().zip(1..) {
            *slot = level;
        }
    }
    Some(next)
}

/// Splits a layout into the leftmost subtree of the root (re-rooted) and the
/// remaining tree.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut one_found = false;
    let mut m = None;
    for (i, &level) in layout.iter().enumerate() {
        if level == 1 {
            if one_found {
                m = Some(i);
                break;
            }
            one_found = true;
        }
    }
    let m = m.unwrap_or(layout.len());
    let left: Vec<usize> = layout[1..m].iter().map(|&x| x - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

fn layout_to_graph(layout: &[usize]) -> Graph {
    let mut edges = Vec::with_capacity(layout.len().saturating_sub(1));
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        if i > 0 {
            while stack.len() > level {
                stack.pop();
            }
            edges.push((*stack.last().unwrap(), i));
        }
        stack.truncate(level);
        stack.push(i);
    }
    Graph::from_index_edges(crate::graph::x_labels(layout.len()), &edges)
        .expect("level sequence describes a tree")
}

/// Canonical string of a free tree, equal for isomorphic trees.
///
/// Roots the tree at its centre (or both centres) and takes the smallest
/// AHU encoding.
pub fn tree_canonical_form(t: &Graph) -> String {
    assert!(t.is_tree(), "canonical form requested for a non-tree");
    let n = t.order();
    if n == 1 {
        return "()".into();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &u in t.neighbors(v) {
                degree[u] -= 1;
                if degree[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| ahu(t, c, usize::MAX))
        .min()
        .expect("a tree has a centre")
}

fn ahu(t: &Graph, v: usize, parent: usize) -> String {
    let mut children: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| ahu(t, u, v))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn counts_match_known_sequence() {
        let expected = [0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (n, &count) in expected.iter().enumerate() {
            let trees: Vec<Graph> = free_trees(n).collect();
            assert_eq!(trees.len(), count, "order {n}");
            let forms: BTreeSet<String> = trees
                .iter()
                .map(|t| {
                    assert!(t.is_tree());
                    assert_eq!(t.order(), n);
                    tree_canonical_form(t)
                })
                .collect();
            assert_eq!(forms.len(), count, "duplicates at order {n}");
        }
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let a =
            Graph::from_index_edges(crate::graph::x_labels(4), &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b =
            Graph::from_index_edges(crate::graph::x_labels(4), &[(2, 0), (0, 3), (3, 1)]).unwrap();
        let star =
            Graph::from_index_edges(crate::graph::x_labels(4), &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(tree_canonical_form(&a), tree_canonical_form(&b));
        assert_ne!(tree_canonical_form(&a), tree_canonical_form(&star));
    }
}
