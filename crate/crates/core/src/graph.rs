//! Finite simple graphs, the graph families used throughout the crate, and
//! the independent-set combinatorics behind cover ideals.
//!
//! Vertices are addressed by index; every vertex also carries a label which is
//! used for variable names when the graph is turned into a cover ideal.

use std::borrow::Borrow;
use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{Error, Result};

/// Vertex-labelled finite simple graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<BTreeSet<usize>>,
}

/// The maximal independent sets of a graph, canonically sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentSetFamily {
    sets: Vec<Vec<usize>>,
}

impl IndependentSetFamily {
    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Independence number `c(G)`.
    pub fn independence_number(&self) -> usize {
        self.sets.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Indices of the sets containing vertex `v`.
    pub fn containing(&self, v: usize) -> Vec<usize> {
        (0..self.sets.len())
            .filter(|&k| self.sets[k].binary_search(&v).is_ok())
            .collect()
    }
}

/// Labels `x1, …, xn`.
pub fn x_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl Graph {
    /// Graph with the given vertices and no edges.
    pub fn edgeless<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let adj = vec![BTreeSet::new(); labels.len()];
        Ok(Self { labels, adj })
    }

    /// Builds a graph from labels and label pairs. Repeated edges are merged.
    pub fn from_edge_list<S, E>(labels: impl IntoIterator<Item = S>, edges: E) -> Result<Self>
    where
        S: Into<String>,
        E: IntoIterator,
        E::Item: Borrow<(String, String)>,
    {
        let mut g = Self::edgeless(labels)?;
        let index: BTreeMap<String, usize> = g
            .labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        for e in edges {
            let (a, b) = e.borrow();
            let i = *index.get(a).ok_or_else(|| Error::UnknownLabel(a.clone()))?;
            let j = *index.get(b).ok_or_else(|| Error::UnknownLabel(b.clone()))?;
            if i == j {
                return Err(Error::LoopEdge(a.clone()));
            }
            g.add_edge(i, j);
        }
        Ok(g)
    }

    /// Same as [`Graph::from_edge_list`] with `&str` pairs.
    pub fn from_str_edges(labels: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        let pairs: Vec<(String, String)> = edges
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        Self::from_edge_list(labels.iter().copied(), &pairs)
    }

    /// Builds a graph from labels and index pairs.
    pub fn from_index_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::edgeless(labels)?;
        for &(i, j) in edges {
            for v in [i, j] {
                if v >= g.order() {
                    return Err(Error::InvalidVertex {
                        index: v,
                        order: g.order(),
                    });
                }
            }
            if i == j {
                return Err(Error::LoopEdge(g.labels[i].clone()));
            }
            g.add_edge(i, j);
        }
        Ok(g)
    }

    fn add_edge(&mut self, i: usize, j: usize) {
        self.adj[i].insert(j);
        self.adj[j].insert(i);
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    /// Edges as index pairs `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, n) in self.adj.iter().enumerate() {
            out.extend(n.range(i + 1..).map(|&j| (i, j)));
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                index: v,
                order: self.order(),
            })
        }
    }

    /// Induced subgraph on `keep`, in the order given.
    pub fn induced(&self, keep: &[usize]) -> Result<Graph> {
        let mut pos = vec![usize::MAX; self.order()];
        for (k, &v) in keep.iter().enumerate() {
            self.check_vertex(v)?;
            pos[v] = k;
        }
        let labels: Vec<String> = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let mut g = Graph::edgeless::<String>(labels)?;
        for (k, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                if pos[w] != usize::MAX {
                    g.adj[k].insert(pos[w]);
                }
            }
        }
        Ok(g)
    }

    /// `G ∖ {v}`.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.order()).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    pub fn is_connected(&self) -> bool {
        if self.order() == 0 {
            return true;
        }
        let mut seen = vec![false; self.order()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adj.iter().all(|s| s.len() + 1 == n)
    }

    // ---------------------------------------------------------------------
    // families

    /// Complete graph `K_n` on `x1, …, xn`.
    pub fn complete(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Graph::from_index_edges(x_labels(n), &edges).expect("valid construction")
    }

    /// Cycle `C_n`, `n ≥ 3`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::ParameterOutOfRange(format!(
                "cycle needs n >= 3, got {n}"
            )));
        }
        Graph::circulant(n, 1)
    }

    /// Path `P_n`.
    pub fn path(n: usize) -> Graph {
        Graph::banded_path(n, 1).expect("s = 1 is always valid")
    }

    /// `P_(n,s)`: vertices `x1..xn`, edges between indices at distance at most `s`.
    pub fn banded_path(n: usize, s: usize) -> Result<Graph> {
        if s < 1 {
            return Err(Error::ParameterOutOfRange(format!(
                "banded path needs s >= 1, got {s}"
            )));
        }
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n.min(i + s + 1)).map(move |j| (i, j)))
            .collect();
        Graph::from_index_edges(x_labels(n), &edges)
    }

    /// Circulant graph `C_n(1, …, s)` with `1 ≤ s ≤ ⌊n/2⌋`.
    pub fn circulant(n: usize, s: usize) -> Result<Graph> {
        if s < 1 || s > n / 2 {
            return Err(Error::ParameterOutOfRange(format!(
                "circulant needs 1 <= s <= floor(n/2), got n={n}, s={s}"
            )));
        }
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (1..=s).map(move |d| (i, (i + d) % n)))
            .collect();
        Graph::from_index_edges(x_labels(n), &edges)
    }

    /// Join `G1 ⊕ G2`: disjoint union plus every edge between the two vertex sets.
    ///
    /// If labels collide, the second graph's labels are primed until unique.
    pub fn join(g1: &Graph, g2: &Graph) -> Graph {
        let u1: Vec<usize> = (0..g1.order()).collect();
        let u2: Vec<usize> = (0..g2.order()).collect();
        if u1.is_empty() || u2.is_empty() {
            return Graph::disjoint_union(g1, g2, &[]);
        }
        Graph::linked_join(g1, &u1, g2, &u2).expect("full vertex sets are valid")
    }

    /// `G1 ⊕_{U1,U2} G2`: disjoint union plus all edges between `U1` and `U2`.
    pub fn linked_join(g1: &Graph, u1: &[usize], g2: &Graph, u2: &[usize]) -> Result<Graph> {
        if u1.is_empty() || u2.is_empty() {
            return Err(Error::ParameterOutOfRange(
                "linked join needs nonempty vertex subsets".into(),
            ));
        }
        for &v in u1 {
            g1.check_vertex(v)?;
        }
        for &v in u2 {
            g2.check_vertex(v)?;
        }
        let n1 = g1.order();
        let extra: Vec<(usize, usize)> = u1
            .iter()
            .flat_map(|&a| u2.iter().map(move |&b| (a, n1 + b)))
            .collect();
        Ok(Graph::disjoint_union(g1, g2, &extra))
    }

    fn disjoint_union(g1: &Graph, g2: &Graph, extra: &[(usize, usize)]) -> Graph {
        let mut labels = g1.labels.clone();
        let mut taken: HashSet<String> = labels.iter().cloned().collect();
        for l in &g2.labels {
            let fresh = fresh_label(l.clone(), &taken);
            taken.insert(fresh.clone());
            labels.push(fresh);
        }
        let n1 = g1.order();
        let mut edges: Vec<(usize, usize)> = g1.edges();
        edges.extend(g2.edges().into_iter().map(|(a, b)| (n1 + a, n1 + b)));
        edges.extend_from_slice(extra);
        Graph::from_index_edges(labels, &edges).expect("labels made unique")
    }

    /// Whiskering `G̃`: one pendant vertex `y_i` attached to every `x_i`.
    ///
    /// The new vertices follow the originals; a label `x…` becomes `y…`.
    pub fn whisker(g: &Graph) -> Graph {
        let n = g.order();
        let mut labels = g.labels.clone();
        let mut taken: HashSet<String> = labels.iter().cloned().collect();
        for l in &g.labels {
            let base = match l.strip_prefix('x') {
                Some(rest) => format!("y{rest}"),
                None => format!("{l}'"),
            };
            let fresh = fresh_label(base, &taken);
            taken.insert(fresh.clone());
            labels.push(fresh);
        }
        let mut edges = g.edges();
        edges.extend((0..n).map(|i| (i, n + i)));
        Graph::from_index_edges(labels, &edges).expect("labels made unique")
    }

    /// `A_{n,m}`: `K_n` on `x1..xn` and `K_m` on `{xn, y2, …, ym}` sharing `xn`.
    pub fn two_cliques(n: usize, m: usize) -> Result<Graph> {
        if n < 2 || m < n {
            return Err(Error::ParameterOutOfRange(format!(
                "two cliques needs m >= n >= 2, got n={n}, m={m}"
            )));
        }
        let mut labels = x_labels(n);
        labels.extend((2..=m).map(|j| format!("y{j}")));
        let ys: Vec<usize> = (n..n + m - 1).collect();
        let mut edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        for (k, &a) in ys.iter().enumerate() {
            edges.push((n - 1, a));
            edges.extend(ys[k + 1..].iter().map(|&b| (a, b)));
        }
        Graph::from_index_edges(labels, &edges)
    }

    /// `H_k` (`k ≥ 3`): the graph on `x1..x_{2k}` whose fiber cone relation
    /// ideal is principal, generated in degree `k`.
    ///
    /// `H_3` has maximal independent sets `{1,2} {3,4} {5,6} {1,3} {2,5} {4,6}`;
    /// `H_{j+1}` drops `{2j-2, 2j}` from `H_j` and adds
    /// `{2j+1, 2j+2} {2j-2, 2j+1} {2j, 2j+2}`.
    pub fn h_family(k: usize) -> Result<Graph> {
        if k < 3 {
            return Err(Error::ParameterOutOfRange(format!(
                "H family needs k >= 3, got {k}"
            )));
        }
        Graph::from_independent_sets(2 * k, &h_family_sets(k))
    }

    /// Graph on `x1..xn` whose edges are all pairs not contained in a listed set.
    ///
    /// Fails unless the listed sets are exactly the maximal independent sets
    /// of the result.
    pub fn from_independent_sets(n: usize, sets: &[Vec<usize>]) -> Result<Graph> {
        let mut inside = vec![vec![false; n]; n];
        for s in sets {
            for &v in s {
                if v >= n {
                    return Err(Error::InvalidVertex { index: v, order: n });
                }
            }
            for &a in s {
                for &b in s {
                    inside[a][b] = true;
                }
            }
        }
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !inside[i][j])
            .collect();
        let g = Graph::from_index_edges(x_labels(n), &edges)?;
        let mut wanted: Vec<Vec<usize>> = sets
            .iter()
            .map(|s| {
                let mut s = s.clone();
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        wanted.sort();
        wanted.dedup();
        if g.maximal_independent_sets().sets != wanted {
            return Err(Error::InconsistentIndependentSets(
                "listed sets are not the maximal independent sets of the induced graph".into(),
            ));
        }
        Ok(g)
    }

    // ---------------------------------------------------------------------
    // independent sets

    /// All maximal independent sets, via Bron–Kerbosch with pivoting on the
    /// complement graph.
    pub fn maximal_independent_sets(&self) -> IndependentSetFamily {
        let n = self.order();
        let non_adj: Vec<Vec<usize>> = (0..n)
            .map(|v| (0..n).filter(|&w| w != v && !self.adjacent(v, w)).collect())
            .collect();
        let mut out = Vec::new();
        let mut r = Vec::new();
        bron_kerbosch(&non_adj, &mut r, (0..n).collect(), Vec::new(), &mut out);
        for s in &mut out {
            s.sort_unstable();
        }
        out.sort();
        IndependentSetFamily { sets: out }
    }

    /// Independence number `c(G)`.
    pub fn independence_number(&self) -> usize {
        self.maximal_independent_sets().independence_number()
    }

    /// Whether `set` is independent in this graph.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(k, &a)| set[k + 1..].iter().all(|&b| !self.adjacent(a, b)))
    }

    /// Pairs `(i, j)`, `i < j`, with identical open neighbourhoods.
    pub fn equivalent_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.adj[i] == self.adj[j])
            .collect()
    }

    /// Deletes vertices with an equivalent lower-indexed partner until none remain.
    pub fn reduce(&self) -> Graph {
        let mut g = self.clone();
        while let Some(&(_, j)) = g.equivalent_pairs().iter().min_by_key(|&&(i, j)| (j, i)) {
            g = g.remove_vertex(j).expect("index from the same graph");
        }
        g
    }

    pub fn is_reduced(&self) -> bool {
        self.equivalent_pairs().is_empty()
    }

    /// `G_i`: induced subgraph on `V ∖ (N(x_i) ∪ {x_i})`.
    pub fn g_sub(&self, i: usize) -> Result<Graph> {
        self.check_vertex(i)?;
        let keep: Vec<usize> = (0..self.order())
            .filter(|&v| v != i && !self.adjacent(i, v))
            .collect();
        self.induced(&keep)
    }

    // ---------------------------------------------------------------------
    // predicates

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.edge_count() + 1 == self.order() && self.is_connected()
    }

    /// Whether deleting some vertex leaves a complete graph.
    ///
    /// Computed both directly and via independent sets (`c(G) ≤ 2` and all
    /// 2-element independent sets share a vertex); the two must agree.
    pub fn is_almost_complete(&self) -> bool {
        let direct = (0..self.order()).any(|v| {
            self.remove_vertex(v)
                .map(|g| g.is_complete())
                .unwrap_or(false)
        });
        let via_sets = self.almost_complete_by_independent_sets();
        assert_eq!(
            direct, via_sets,
            "almost-complete characterizations disagree"
        );
        direct
    }

    fn almost_complete_by_independent_sets(&self) -> bool {
        if self.order() == 0 {
            return false;
        }
        let family = self.maximal_independent_sets();
        if family.independence_number() > 2 {
            return false;
        }
        let pairs: Vec<(usize, usize)> = (0..self.order())
            .flat_map(|i| (i + 1..self.order()).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.adjacent(i, j))
            .collect();
        match pairs.split_first() {
            None => true,
            Some((&(a, b), rest)) => [a, b]
                .iter()
                .any(|&v| rest.iter().all(|&(c, d)| c == v || d == v)),
        }
    }

    /// Every vertex of degree at least 2 is adjacent to a leaf.
    pub fn every_internal_vertex_has_leaf(&self) -> bool {
        (0..self.order())
            .filter(|&v| self.degree(v) >= 2)
            .all(|v| self.adj[v].iter().any(|&w| self.degree(w) == 1))
    }

    /// If this graph is a whiskering `H̃`, the induced base graph `H`.
    ///
    /// Every base vertex must carry exactly one pendant leaf and every vertex
    /// must be a base vertex or its leaf. Components that are a single edge
    /// take the lower index as the base.
    pub fn whisker_base(&self) -> Option<Graph> {
        let n = self.order();
        if n == 0 || n % 2 == 1 {
            return None;
        }
        let mut role: Vec<Option<bool>> = vec![None; n]; // Some(true) = base
        for v in 0..n {
            if self.degree(v) == 1 {
                let w = *self.adj[v].iter().next().expect("degree one");
                if self.degree(w) == 1 {
                    let (b, l) = (v.min(w), v.max(w));
                    role[b] = Some(true);
                    role[l] = Some(false);
                } else {
                    role[v] = Some(false);
                }
            }
        }
        let mut base = Vec::new();
        for v in 0..n {
            if role[v] == Some(false) {
                continue;
            }
            let leaves = self.adj[v]
                .iter()
                .filter(|&&w| role[w] == Some(false) && self.degree(w) == 1)
                .count();
            if leaves != 1 {
                return None;
            }
            base.push(v);
        }
        if 2 * base.len() != n {
            return None;
        }
        self.induced(&base).ok()
    }

    /// Whether this graph is (isomorphic to) the whiskering of `h`.
    pub fn is_whiskering_of(&self, h: &Graph) -> bool {
        if self.order() != 2 * h.order() {
            return false;
        }
        if h.order() == 0 {
            return self.order() == 0;
        }
        self.whisker_base()
            .map(|b| b.is_isomorphic(h))
            .unwrap_or(false)
    }

    /// Brute-force isomorphism test with degree pruning; meant for small graphs.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        let n = self.order();
        if n != other.order() || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut d1: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut d2: Vec<usize> = (0..n).map(|v| other.degree(v)).collect();
        d1.sort_unstable();
        d2.sort_unstable();
        if d1 != d2 {
            return false;
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        iso_extend(self, other, 0, &mut map, &mut used)
    }
}

fn iso_extend(a: &Graph, b: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if v == a.order() {
        return true;
    }
    for w in 0..b.order() {
        if used[w] || a.degree(v) != b.degree(w) {
            continue;
        }
        let consistent = (0..v).all(|u| a.adjacent(u, v) == b.adjacent(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if iso_extend(a, b, v + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    map[v] = usize::MAX;
    false
}

fn fresh_label(mut label: String, taken: &HashSet<String>) -> String {
    while taken.contains(&label) {
        label.push('\'');
    }
    label
}

fn bron_kerbosch(
    non_adj: &[Vec<usize>],
    r: &mut Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let contains = |list: &[usize], v: usize| list.binary_search(&v).is_ok();
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&v| contains(&non_adj[u], v)).count())
        .expect("p is nonempty");
    let candidates: Vec<usize> = p
        .iter()
        .copied()
        .filter(|&v| !contains(&non_adj[pivot], v))
        .collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        let np: Vec<usize> = p
            .iter()
            .copied()
            .filter(|&w| contains(&non_adj[v], w))
            .collect();
        let nx: Vec<usize> = x
            .iter()
            .copied()
            .filter(|&w| contains(&non_adj[v], w))
            .collect();
        r.push(v);
        bron_kerbosch(non_adj, r, np, nx, out);
        r.pop();
        p.retain(|&w| w != v);
        let at = x.partition_point(|&w| w < v);
        x.insert(at, v);
    }
}

/// Independent sets defining `H_k`, 0-based.
pub fn h_family_sets(k: usize) -> Vec<Vec<usize>> {
    let mut sets: Vec<Vec<usize>> = vec![
        vec![1, 2],
        vec![3, 4],
        vec![5, 6],
        vec![1, 3],
        vec![2, 5],
        vec![4, 6],
    ];
    for j in 3..k {
        sets.retain(|s| s != &vec![2 * j - 2, 2 * j]);
        sets.push(vec![2 * j + 1, 2 * j + 2]);
        sets.push(vec![2 * j - 2, 2 * j + 1]);
        sets.push(vec![2 * j, 2 * j + 2]);
    }
    sets.into_iter()
        .map(|s| s.into_iter().map(|v| v - 1).collect())
        .collect()
}
