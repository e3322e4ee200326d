//! Monomials and monomial ideals: cover ideals, products, powers,
//! intersections and symbolic powers.
//!
//! An ideal is always stored through its minimal generating set, sorted in
//! descending graded-lexicographic order (higher degree first, then
//! lexicographically larger exponent vectors first). With that order the
//! generators of `J(A_{3,3})` come out as `x1x2y2y3, x1x3y2, x1x3y3, x2x3y2,
//! x2x3y3`, matching the usual hand-written listing.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Variables beyond this count are refused.
pub const MAX_VARIABLES: usize = 64;

/// Default cap on the number of monomial products an operation may form.
pub const DEFAULT_MAX_PRODUCTS: u128 = 5_000_000;

/// Environment variable overriding [`DEFAULT_MAX_PRODUCTS`].
pub const MAX_PRODUCTS_ENV: &str = "COVERLAB_MAX_PRODUCTS";

/// Capacity guards shared by ideal and fiber computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_products: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_products: DEFAULT_MAX_PRODUCTS,
        }
    }
}

impl Limits {
    /// Default limits, with `COVERLAB_MAX_PRODUCTS` applied when it parses.
    pub fn from_env() -> Self {
        let max_products = std::env::var(MAX_PRODUCTS_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_PRODUCTS);
        Self { max_products }
    }

    pub fn check(&self, what: &'static str, needed: u128) -> Result<()> {
        if needed > self.max_products {
            Err(Error::Capacity {
                what,
                needed,
                limit: self.max_products,
            })
        } else {
            Ok(())
        }
    }
}

/// `C(n, k)` in 128-bit arithmetic, saturating on overflow.
pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        match acc.checked_mul(n - i) {
            Some(v) => acc = v / (i + 1),
            None => return u128::MAX,
        }
    }
    acc
}

/// Monomial as a dense exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(vars: usize) -> Self {
        Self {
            exps: vec![0; vars],
        }
    }

    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    /// Product of the listed variables, each to the first power.
    pub fn squarefree(vars: usize, support: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Self::one(vars);
        for v in support {
            m.exps[v] = 1;
        }
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// Renders with the given variable names, e.g. `x1*x3^2`; the unit is `1`.
    pub fn render(&self, universe: &[String]) -> String {
        let parts: Vec<String> = self
            .exps
            .iter()
            .zip(universe)
            .filter(|(e, _)| **e > 0)
            .map(|(e, v)| {
                if *e == 1 {
                    v.clone()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// Descending graded-lexicographic order.
pub fn canonical_order(a: &Monomial, b: &Monomial) -> Ordering {
    b.degree()
        .cmp(&a.degree())
        .then_with(|| b.exps.cmp(&a.exps))
}

/// `d_α(f) = Σ α_i c_i`.
pub fn weighted_degree(f: &Monomial, alpha: &[u64]) -> Result<u64> {
    if alpha.len() != f.vars() {
        return Err(Error::LengthMismatch {
            expected: f.vars(),
            actual: alpha.len(),
        });
    }
    Ok(f.exps
        .iter()
        .zip(alpha)
        .map(|(&e, &a)| u64::from(e) * a)
        .sum())
}

/// Monomial ideal given by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    universe: Vec<String>,
    gens: Vec<Monomial>,
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.rendered_gens().join(", "))
    }
}

impl MonomialIdeal {
    /// Ideal generated by `monomials`, minimalized.
    pub fn new(universe: Vec<String>, monomials: Vec<Monomial>) -> Result<Self> {
        check_universe(universe.len())?;
        if let Some(m) = monomials.iter().find(|m| m.vars() != universe.len()) {
            return Err(Error::LengthMismatch {
                expected: universe.len(),
                actual: m.vars(),
            });
        }
        Ok(minimalize(universe, monomials))
    }

    pub fn unit(universe: Vec<String>) -> Result<Self> {
        let n = universe.len();
        Self::new(universe, vec![Monomial::one(n)])
    }

    pub fn zero(universe: Vec<String>) -> Result<Self> {
        Self::new(universe, Vec::new())
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn vars(&self) -> usize {
        self.universe.len()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// Number of minimal generators `μ(I)`.
    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn rendered_gens(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.render(&self.universe)).collect()
    }

    pub fn contains(&self, f: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(f))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Cover ideal `J(G)`, generated by `∏_{x ∉ U} x` over maximal independent sets `U`.
    pub fn cover_ideal(g: &Graph) -> Result<MonomialIdeal> {
        let n = g.order();
        check_universe(n)?;
        let gens = g
            .maximal_independent_sets()
            .sets()
            .iter()
            .map(|u| {
                let mut m = Monomial::squarefree(n, 0..n);
                for &v in u {
                    m.exps[v] = 0;
                }
                m
            })
            .collect();
        MonomialIdeal::new(g.labels().to_vec(), gens)
    }

    fn same_universe(&self, other: &MonomialIdeal) -> Result<()> {
        if self.universe == other.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    /// `I · J`, minimalized.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_universe(other)?;
        Limits::from_env().check("ideal product", (self.mu() as u128) * (other.mu() as u128))?;
        let mut prods = Vec::with_capacity(self.mu() * other.mu());
        for a in &self.gens {
            for b in &other.gens {
                prods.push(a.mul(b)?);
            }
        }
        Ok(minimalize(self.universe.clone(), prods))
    }

    /// `I^m` by repeated multiplication, minimalizing after each step.
    /// `m = 0` gives the unit ideal.
    pub fn power(&self, m: usize) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.universe.clone())?;
        for _ in 0..m {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I^m` from all `C(t+m-1, m)` multiset products of generators at once.
    pub fn power_by_multisets(&self, m: usize) -> Result<MonomialIdeal> {
        let t = self.mu() as u128;
        Limits::from_env().check(
            "multiset products",
            binomial((t + m as u128).saturating_sub(1), m as u128),
        )?;
        let n = self.vars();
        let mut out = BTreeSet::new();
        let mut stack: Vec<(usize, usize, Monomial)> = vec![(0, 0, Monomial::one(n))];
        while let Some((start, depth, acc)) = stack.pop() {
            if depth == m {
                out.insert(acc);
                continue;
            }
            for k in start..self.gens.len() {
                stack.push((k, depth + 1, acc.mul(&self.gens[k])?));
            }
        }
        Ok(minimalize(self.universe.clone(), out.into_iter().collect()))
    }

    /// `μ(I^m)`.
    pub fn mu_power(&self, m: usize) -> Result<usize> {
        Ok(self.power(m)?.mu())
    }

    /// `I ∩ J` from the minimalized pairwise lcms of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_universe(other)?;
        Limits::from_env().check(
            "intersection lcms",
            (self.mu() as u128) * (other.mu() as u128),
        )?;
        let lcms = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)))
            .collect();
        Ok(minimalize(self.universe.clone(), lcms))
    }

    /// `(x_i, x_j)^m` over the graph's variables.
    pub fn edge_ideal_power(g: &Graph, i: usize, j: usize, m: u32) -> Result<MonomialIdeal> {
        let n = g.order();
        let gens = (0..=m)
            .map(|a| {
                let mut e = vec![0; n];
                e[i] = a;
                e[j] = m - a;
                Monomial::new(e)
            })
            .collect();
        MonomialIdeal::new(g.labels().to_vec(), gens)
    }

    /// `J(G)^(m) = ⋂_{ij ∈ E} (x_i, x_j)^m`; the unit ideal for edgeless graphs.
    pub fn symbolic_power(g: &Graph, m: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(g.labels().to_vec())?;
        for (i, j) in g.edges() {
            acc = acc.intersect(&MonomialIdeal::edge_ideal_power(g, i, j, m)?)?;
        }
        Ok(acc)
    }
}

fn check_universe(n: usize) -> Result<()> {
    if n > MAX_VARIABLES {
        Err(Error::Capacity {
            what: "variables",
            needed: n as u128,
            limit: MAX_VARIABLES as u128,
        })
    } else {
        Ok(())
    }
}

/// Deduplicates and drops every monomial strictly divisible by another.
pub fn minimalize(universe: Vec<String>, mut monomials: Vec<Monomial>) -> MonomialIdeal {
    monomials.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    monomials.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(monomials.len());
    // Same-degree monomials divide each other only when equal, so only
    // strictly lower-degree survivors need checking.
    let mut lower_end = 0;
    for (k, m) in monomials.iter().enumerate() {
        if k > 0 && monomials[k - 1].degree() != m.degree() {
            lower_end = kept.len();
        }
        if !kept[..lower_end].iter().any(|g| g.divides(m)) {
            kept.push(m.clone());
        }
    }
    kept.sort_by(canonical_order);
    MonomialIdeal {
        universe,
        gens: kept,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uni(n: usize) -> Vec<String> {
        crate::graph::x_labels(n)
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn p5_cover_ideal() {
        let j = MonomialIdeal::cover_ideal(&Graph::path(5)).unwrap();
        let mut got = j.rendered_gens();
        got.sort();
        assert_eq!(got, vec!["x1*x3*x4", "x1*x3*x5", "x2*x3*x5", "x2*x4"]);
    }

    #[test]
    fn two_cliques_generators_in_canonical_order() {
        let j = MonomialIdeal::cover_ideal(&Graph::two_cliques(3, 3).unwrap()).unwrap();
        assert_eq!(
            j.rendered_gens(),
            vec![
                "x1*x2*y2*y3",
                "x1*x3*y2",
                "x1*x3*y3",
                "x2*x3*y2",
                "x2*x3*y3"
            ]
        );
    }

    #[test]
    fn edgeless_graph_gives_unit_ideal() {
        let g = Graph::edgeless(["a", "b", "c"]).unwrap();
        let j = MonomialIdeal::cover_ideal(&g).unwrap();
        assert!(j.is_unit());
        assert_eq!(j.rendered_gens(), vec!["1"]);
    }

    #[test]
    fn minimalize_examples() {
        let i = minimalize(uni(1), vec![mono(&[1]), mono(&[2])]);
        assert_eq!(i.gens(), &[mono(&[1])]);
        let i = minimalize(
            uni(3),
            vec![mono(&[1, 1, 0]), mono(&[0, 1, 1]), mono(&[1, 1, 1])],
        );
        assert_eq!(i.gens(), &[mono(&[1, 1, 0]), mono(&[0, 1, 1])]);
    }

    #[test]
    fn k3_products_are_all_minimal() {
        let j = MonomialIdeal::cover_ideal(&Graph::complete(3)).unwrap();
        let prods: Vec<Monomial> = j
            .gens()
            .iter()
            .enumerate()
            .flat_map(|(a, f)| j.gens()[a..].iter().map(move |g| f.mul(g).unwrap()))
            .collect();
        assert_eq!(prods.len(), 6);
        assert_eq!(minimalize(uni(3), prods).mu(), 6);
        assert_eq!(j.mu_power(2).unwrap(), 6);
    }

    #[test]
    fn two_cliques_square_has_fourteen_generators() {
        let j = MonomialIdeal::cover_ideal(&Graph::two_cliques(3, 3).unwrap()).unwrap();
        assert_eq!(j.mu_power(2).unwrap(), 14);
        assert_eq!(j.power_by_multisets(2).unwrap(), j.power(2).unwrap());
    }

    #[test]
    fn power_edge_cases() {
        let j = MonomialIdeal::cover_ideal(&Graph::path(5)).unwrap();
        assert_eq!(j.power(1).unwrap(), j);
        assert!(j.power(0).unwrap().is_unit());
        assert_eq!(j.power(3).unwrap(), j.power_by_multisets(3).unwrap());
    }

    #[test]
    fn symbolic_powers() {
        let p2 = Graph::path(2);
        let s = MonomialIdeal::symbolic_power(&p2, 2).unwrap();
        assert_eq!(s.rendered_gens(), vec!["x1^2", "x1*x2", "x2^2"]);
        for g in [Graph::path(5), Graph::cycle(5).unwrap(), Graph::complete(4)] {
            assert_eq!(
                MonomialIdeal::symbolic_power(&g, 1).unwrap(),
                MonomialIdeal::cover_ideal(&g).unwrap()
            );
        }
    }

    #[test]
    fn universe_mismatch_is_an_error() {
        let a = MonomialIdeal::cover_ideal(&Graph::complete(3)).unwrap();
        let b = MonomialIdeal::cover_ideal(&Graph::complete(4)).unwrap();
        assert_eq!(a.intersect(&b), Err(Error::UniverseMismatch));
    }

    #[test]
    fn weighted_degrees() {
        assert_eq!(weighted_degree(&Monomial::one(4), &[3, 1, 4, 1]), Ok(0));
        assert_eq!(weighted_degree(&mono(&[1, 0, 1, 0, 1]), &[1; 5]), Ok(3));
        assert_eq!(
            weighted_degree(&mono(&[0, 1, 0, 1, 0]), &[1, 1, 1, 2, 2]),
            Ok(3)
        );
        assert!(weighted_degree(&mono(&[1, 0]), &[1]).is_err());
    }

    #[test]
    fn universe_guard() {
        let g = Graph::edgeless(crate::graph::x_labels(65)).unwrap();
        assert!(matches!(
            MonomialIdeal::cover_ideal(&g),
            Err(Error::Capacity {
                what: "variables",
                ..
            })
        ));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
    }
}
