//! Fiber-cone invariants of quasi-equigenerated monomial ideals.
//!
//! For a quasi-equigenerated ideal `I = (f_1, …, f_t)` the fiber cone is the
//! monomial subalgebra `k[f_1, …, f_t]`, presented as `k[T_1, …, T_t]/𝓘` with
//! `𝓘` a homogeneous binomial (toric) ideal. Everything here is computed from
//! the exponent vectors:
//!
//! * the analytic spread `l(I)` is the rank of the exponent matrix, equal to
//!   the affine dimension of the exponent set plus one;
//! * `μ(I²) = C(t+1, 2) − b` where `b` counts quadratic minimal generators
//!   of `𝓘`, and `I` is Freiman iff `b = C(a+1, 2)` with `a = t − l`;
//! * low-degree minimal generators of `𝓘` come from fiber connectivity of
//!   generator multisets, see [`toric_profile`].

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grading::{quasi_witness, WeightWitness};
use crate::graph::Graph;
use crate::ideal::{binomial, Limits, Monomial, MonomialIdeal};
use crate::ratlin::{rank, RatMatrix};

/// Default degree bound for [`toric_profile`].
pub const DEFAULT_TORIC_DEGREE: usize = 4;

/// The fiber invariants of a quasi-equigenerated ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    /// `μ(I)`
    pub t: u64,
    /// analytic spread `l(I)`
    pub l: u64,
    /// `t − l`
    pub a: u64,
    /// `μ(I²)`
    pub mu2: u64,
    /// quadratic minimal generators of the defining ideal
    pub b: u64,
    pub freiman: bool,
    pub linear_type: bool,
    pub witness: WeightWitness,
}

impl FiberReport {
    /// Lower bound `l·μ(I) − C(l, 2)` for `μ(I²)`.
    pub fn freiman_bound(&self) -> u64 {
        freiman_bound(self.t, self.l)
    }
}

pub fn freiman_bound(t: u64, l: u64) -> u64 {
    l * t - (binomial(l as u128, 2) as u64)
}

fn exponent_matrix(ideal: &MonomialIdeal) -> RatMatrix {
    let rows: Vec<Vec<i64>> = ideal
        .gens()
        .iter()
        .map(|g| g.exponents().iter().map(|&e| i64::from(e)).collect())
        .collect();
    RatMatrix::from_int_rows(ideal.vars(), &rows)
}

/// Dimension of the smallest affine subspace containing the generator exponents.
pub fn affine_dimension(ideal: &MonomialIdeal) -> Result<usize> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    Ok(rank(&crate::grading::difference_matrix(ideal, 0)))
}

/// Analytic spread `l(I)`; `witness` must certify `I` as quasi-equigenerated.
///
/// Returns the affine dimension of the exponent set plus one. When the
/// common weighted degree is positive this is asserted equal to the rank of
/// the exponent matrix, since the exponents then lie on an affine hyperplane
/// missing the origin.
pub fn analytic_spread(ideal: &MonomialIdeal, witness: &WeightWitness) -> Result<usize> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !witness.certifies(ideal) {
        return Err(Error::NotQuasiEquigenerated);
    }
    let spread = affine_dimension(ideal)? + 1;
    if witness.common_degree > 0 {
        assert_eq!(
            rank(&exponent_matrix(ideal)),
            spread,
            "exponent rank differs from affine dimension + 1"
        );
    }
    Ok(spread)
}

fn require_witness(ideal: &MonomialIdeal) -> Result<WeightWitness> {
    quasi_witness(ideal)?.ok_or(Error::NotQuasiEquigenerated)
}

/// Assembles `t, l, a, μ(I²), b` and the Freiman and linear-type flags.
pub fn fiber_report(ideal: &MonomialIdeal) -> Result<FiberReport> {
    let witness = require_witness(ideal)?;
    let t = ideal.mu() as u64;
    let l = analytic_spread(ideal, &witness)? as u64;
    let mu2 = ideal.mu_power(2)? as u64;
    let pairs = binomial(t as u128 + 1, 2) as u64;
    assert!(mu2 <= pairs, "more generators of I^2 than products");
    let b = pairs - mu2;
    let a = t - l;
    let freiman = b as u128 == binomial(a as u128 + 1, 2);
    assert_eq!(
        freiman,
        mu2 == freiman_bound(t, l),
        "Freiman criteria via b and via mu(I^2) disagree"
    );
    Ok(FiberReport {
        t,
        l,
        a,
        mu2,
        b,
        freiman,
        linear_type: l == t,
        witness,
    })
}

/// `μ(I^j)` next to the value predicted for Freiman ideals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerCheck {
    pub j: usize,
    pub computed: u64,
    pub formula: i128,
}

impl PowerCheck {
    pub fn equal(&self) -> bool {
        i128::from(self.computed) == self.formula
    }
}

/// `C(l+j−2, j−1)·μ(I) − (j−1)·C(l+j−2, j)`.
pub fn freiman_power_formula(t: u64, l: u64, j: usize) -> i128 {
    let j = j as u128;
    let top = (l as u128 + j).saturating_sub(2);
    let first = binomial(top, j.saturating_sub(1)) as i128 * i128::from(t);
    let second = (j as i128 - 1) * binomial(top, j) as i128;
    first - second
}

/// Computed `μ(I^j)` against the Freiman power formula for `1 ≤ j ≤ j_max`.
pub fn herzog_power_check(ideal: &MonomialIdeal, j_max: usize) -> Result<Vec<PowerCheck>> {
    let witness = require_witness(ideal)?;
    let t = ideal.mu() as u64;
    let l = analytic_spread(ideal, &witness)? as u64;
    let limits = Limits::from_env();
    let mut out = Vec::with_capacity(j_max);
    let mut acc = MonomialIdeal::unit(ideal.universe().to_vec())?;
    for j in 1..=j_max {
        limits.check(
            "power generators",
            binomial(t as u128 + j as u128 - 1, j as u128),
        )?;
        acc = acc.product(ideal)?;
        out.push(PowerCheck {
            j,
            computed: acc.mu() as u64,
            formula: freiman_power_formula(t, l, j),
        });
    }
    Ok(out)
}

/// A binomial `T^lhs − T^rhs` given by multisets of 0-based generator indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ToricRelation {
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
}

impl ToricRelation {
    pub fn degree(&self) -> usize {
        self.lhs.len()
    }

    pub fn involves(&self, index: usize) -> bool {
        self.lhs.contains(&index) || self.rhs.contains(&index)
    }
}

/// Minimal binomial generators of the defining ideal up to a degree bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ToricProfile {
    pub max_degree: usize,
    /// degree → number of minimal generators, for every degree `2..=max_degree`
    pub counts: BTreeMap<usize, usize>,
    /// one representative per minimal generator, by increasing degree
    pub relations: Vec<ToricRelation>,
}

impl ToricProfile {
    pub fn count(&self, degree: usize) -> usize {
        self.counts.get(&degree).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total() == 0
    }

    pub fn relations_in_degree(&self, degree: usize) -> impl Iterator<Item = &ToricRelation> {
        self.relations.iter().filter(move |r| r.degree() == degree)
    }
}

/// Counts minimal generators of the defining toric ideal in degrees `2..=max_degree`.
///
/// In each degree `r` all size-`r` multisets of generator indices are grouped
/// by their summed exponent vector. Inside a fiber, two multisets are joined
/// when one is obtained from the other by replacing one side of an already
/// found lower-degree relation with the other side. Each fiber contributes
/// `components − 1` new minimal generators; the representative pairs the
/// smallest multiset of the first component with the smallest of each other
/// component.
pub fn toric_profile(ideal: &MonomialIdeal, max_degree: usize) -> Result<ToricProfile> {
    require_witness(ideal)?;
    if max_degree < 2 {
        return Err(Error::ParameterOutOfRange(format!(
            "toric degree bound must be at least 2, got {max_degree}"
        )));
    }
    let t = ideal.mu();
    Limits::from_env().check(
        "toric multisets",
        binomial((t + max_degree - 1) as u128, max_degree as u128),
    )?;

    let mut counts = BTreeMap::new();
    let mut relations: Vec<ToricRelation> = Vec::new();
    for r in 2..=max_degree {
        let fibers = group_fibers(ideal.gens(), r)?;
        let mut found = Vec::new();
        for members in fibers.values().filter(|m| m.len() > 1) {
            let comps = fiber_components(members, &relations);
            let rep = &comps[0][0];
            for other in &comps[1..] {
                found.push(ToricRelation {
                    lhs: rep.clone(),
                    rhs: other[0].clone(),
                });
            }
        }
        counts.insert(r, found.len());
        relations.extend(found);
    }
    Ok(ToricProfile {
        max_degree,
        counts,
        relations,
    })
}

/// All size-`r` multisets of generator indices, keyed by their exponent sum.
/// Multisets within a fiber are in lexicographic order.
fn group_fibers(gens: &[Monomial], r: usize) -> Result<BTreeMap<Vec<u32>, Vec<Vec<usize>>>> {
    let mut fibers: BTreeMap<Vec<u32>, Vec<Vec<usize>>> = BTreeMap::new();
    if gens.is_empty() {
        return Ok(fibers);
    }
    let n = gens[0].vars();
    let mut current = vec![0usize; r];
    loop {
        let mut sum = Monomial::one(n);
        for &k in &current {
            sum = sum.mul(&gens[k])?;
        }
        fibers
            .entry(sum.exponents().to_vec())
            .or_default()
            .push(current.clone());
        // next nondecreasing sequence
        let Some(pos) = (0..r).rev().find(|&p| current[p] + 1 < gens.len()) else {
            break;
        };
        let v = current[pos] + 1;
        for slot in &mut current[pos..] {
            *slot = v;
        }
    }
    Ok(fibers)
}

/// Connected components of a fiber under lower-degree relation moves, each
/// sorted, ordered by smallest member.
fn fiber_components(members: &[Vec<usize>], relations: &[ToricRelation]) -> Vec<Vec<Vec<usize>>> {
    let index: HashMap<&[usize], usize> = members
        .iter()
        .enumerate()
        .map(|(k, m)| (m.as_slice(), k))
        .collect();
    let mut parent: Vec<usize> = (0..members.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (k, u) in members.iter().enumerate() {
        for rel in relations {
            for (from, to) in [(&rel.lhs, &rel.rhs), (&rel.rhs, &rel.lhs)] {
                let Some(v) = substitute(u, from, to) else {
                    continue;
                };
                let target = *index
                    .get(v.as_slice())
                    .expect("relation moves stay inside the fiber");
                let (a, b) = (find(&mut parent, k), find(&mut parent, target));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut comps: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for (k, member) in members.iter().enumerate() {
        let root = find(&mut parent, k);
        comps.entry(root).or_default().push(member.clone());
    }
    let mut comps: Vec<Vec<Vec<usize>>> = comps.into_values().collect();
    for c in &mut comps {
        c.sort();
    }
    comps.sort_by(|a, b| a[0].cmp(&b[0]));
    comps
}

/// `(u ∖ from) ∪ to` when `from ⊆ u` as multisets; all inputs sorted.
fn substitute(u: &[usize], from: &[usize], to: &[usize]) -> Option<Vec<usize>> {
    let mut rest = Vec::with_capacity(u.len());
    let mut f = from.iter().peekable();
    for &x in u {
        match f.peek() {
            Some(&&y) if y == x => {
                f.next();
            }
            Some(&&y) if y < x => return None,
            _ => rest.push(x),
        }
    }
    if f.peek().is_some() {
        return None;
    }
    rest.extend_from_slice(to);
    rest.sort_unstable();
    Some(rest)
}

/// Vertices lying in exactly one maximal independent set, with that set.
pub fn unique_set_vertices(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let family = g.maximal_independent_sets();
    (0..g.order())
        .filter_map(|v| match family.containing(v).as_slice() {
            [only] => Some((v, family.sets()[*only].clone())),
            _ => None,
        })
        .collect()
}

/// Generators `h_U` flagged through a vertex lying only in `U`, and whether
/// any of them shows up in a toric relation up to the degree bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeGeneratorCheck {
    /// indices into the cover ideal's generators
    pub flagged: Vec<usize>,
    /// flagged indices that occur in some relation (must be empty)
    pub violations: Vec<usize>,
    pub max_degree: usize,
}

pub fn prime_generator_check(g: &Graph, max_degree: usize) -> Result<PrimeGeneratorCheck> {
    let ideal = MonomialIdeal::cover_ideal(g)?;
    let profile = toric_profile(&ideal, max_degree)?;
    let n = g.order();
    let mut flagged: Vec<usize> = unique_set_vertices(g)
        .into_iter()
        .map(|(_, set)| {
            let h = Monomial::squarefree(n, (0..n).filter(|v| !set.contains(v)));
            ideal
                .gens()
                .iter()
                .position(|f| *f == h)
                .expect("h_U is a minimal generator")
        })
        .collect();
    flagged.sort_unstable();
    flagged.dedup();
    let violations = flagged
        .iter()
        .copied()
        .filter(|&k| profile.relations.iter().any(|r| r.involves(k)))
        .collect();
    Ok(PrimeGeneratorCheck {
        flagged,
        violations,
        max_degree,
    })
}

/// Freiman property of `J(G1 ⊕ G2)`: computed directly and predicted as
/// "both Freiman and at least one of linear type".
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JoinFreimanCheck {
    pub direct: bool,
    pub freiman1: bool,
    pub freiman2: bool,
    pub linear1: bool,
    pub linear2: bool,
}

impl JoinFreimanCheck {
    pub fn predicted(&self) -> bool {
        self.freiman1 && self.freiman2 && (self.linear1 || self.linear2)
    }

    pub fn holds(&self) -> bool {
        self.direct == self.predicted()
    }
}

pub fn join_freiman_check(g1: &Graph, g2: &Graph) -> Result<JoinFreimanCheck> {
    let r1 = fiber_report(&MonomialIdeal::cover_ideal(g1)?)?;
    let r2 = fiber_report(&MonomialIdeal::cover_ideal(g2)?)?;
    let joined = fiber_report(&MonomialIdeal::cover_ideal(&Graph::join(g1, g2))?)?;
    Ok(JoinFreimanCheck {
        direct: joined.freiman,
        freiman1: r1.freiman,
        freiman2: r2.freiman,
        linear1: r1.linear_type,
        linear2: r2.linear_type,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cover(g: &Graph) -> MonomialIdeal {
        MonomialIdeal::cover_ideal(g).unwrap()
    }

    #[test]
    fn complete_graphs_are_linear_type() {
        for n in 1..=6 {
            let r = fiber_report(&cover(&Graph::complete(n))).unwrap();
            assert_eq!(r.l, n as u64);
            assert!(r.linear_type && r.freiman);
        }
    }

    #[test]
    fn two_cliques_three_three() {
        let ideal = cover(&Graph::two_cliques(3, 3).unwrap());
        let r = fiber_report(&ideal).unwrap();
        assert_eq!((r.t, r.l, r.a, r.mu2, r.b), (5, 4, 1, 14, 1));
        assert!(r.freiman && !r.linear_type);
        let p = toric_profile(&ideal, 3).unwrap();
        assert_eq!(p.counts, BTreeMap::from([(2, 1), (3, 0)]));
        // T2 T5 − T4 T3 with 1-based indices
        let rel = &p.relations[0];
        let mut sides = [rel.lhs.clone(), rel.rhs.clone()];
        sides.sort();
        assert_eq!(sides, [vec![1, 4], vec![2, 3]]);
    }

    #[test]
    fn two_cliques_four_four_is_not_freiman() {
        let r = fiber_report(&cover(&Graph::two_cliques(4, 4).unwrap())).unwrap();
        assert_eq!((r.a, r.b), (4, 9));
        assert!(!r.freiman);
    }

    #[test]
    fn h3_has_a_single_cubic_relation() {
        let g = Graph::h_family(3).unwrap();
        let ideal = cover(&g);
        let r = fiber_report(&ideal).unwrap();
        assert_eq!(r.b, 0);
        assert!(!r.freiman);
        let p = toric_profile(&ideal, 3).unwrap();
        assert_eq!(p.counts, BTreeMap::from([(2, 0), (3, 1)]));
        // the relation pairs {12, 34, 56} against {13, 25, 46}
        let rel = &p.relations[0];
        let as_sets = |side: &[usize]| {
            let mut v: Vec<Vec<usize>> = side
                .iter()
                .map(|&k| {
                    (0..6)
                        .filter(|&x| ideal.gens()[k].exponents()[x] == 0)
                        .map(|x| x + 1)
                        .collect()
                })
                .collect();
            v.sort();
            v
        };
        let mut sides = [as_sets(&rel.lhs), as_sets(&rel.rhs)];
        sides.sort();
        assert_eq!(
            sides,
            [
                vec![vec![1, 2], vec![3, 4], vec![5, 6]],
                vec![vec![1, 3], vec![2, 5], vec![4, 6]],
            ]
        );
    }

    #[test]
    fn non_quasi_inputs_are_rejected() {
        let c6 = cover(&Graph::cycle(6).unwrap());
        assert_eq!(fiber_report(&c6), Err(Error::NotQuasiEquigenerated));
        assert_eq!(toric_profile(&c6, 3), Err(Error::NotQuasiEquigenerated));
        let bogus = WeightWitness {
            alpha: vec![1; 6],
            common_degree: 4,
        };
        assert_eq!(
            analytic_spread(&c6, &bogus),
            Err(Error::NotQuasiEquigenerated)
        );
    }

    #[test]
    fn power_formula_collapses_at_one() {
        for (t, l) in [(5, 4), (1, 1), (10, 3)] {
            assert_eq!(freiman_power_formula(t, l, 1), i128::from(t));
        }
        let checks = herzog_power_check(&cover(&Graph::two_cliques(3, 4).unwrap()), 4).unwrap();
        assert!(checks.iter().all(PowerCheck::equal));
        let checks = herzog_power_check(&cover(&Graph::h_family(3).unwrap()), 2).unwrap();
        assert!(checks[1].computed as i128 > checks[1].formula);
    }

    #[test]
    fn substitution_moves() {
        assert_eq!(
            substitute(&[0, 1, 1, 3], &[1, 3], &[2, 2]),
            Some(vec![0, 1, 2, 2])
        );
        assert_eq!(substitute(&[0, 1, 3], &[1, 1], &[2, 2]), None);
        assert_eq!(substitute(&[0, 1], &[2], &[3]), None);
    }

    #[test]
    fn unique_set_vertices_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(unique_set_vertices(&c4).len(), 4);
        let k4 = Graph::complete(4);
        assert_eq!(unique_set_vertices(&k4).len(), 4);
        let check = prime_generator_check(&Graph::path(4), 4).unwrap();
        assert!(check.violations.is_empty());
    }

    #[test]
    fn joins() {
        let k1 = Graph::complete(1);
        let k2 = Graph::complete(2);
        assert!(join_freiman_check(&k2, &k2).unwrap().holds());
        let c = join_freiman_check(&Graph::two_cliques(3, 3).unwrap(), &k1).unwrap();
        assert!(c.direct && c.holds());
        let c = join_freiman_check(&Graph::h_family(3).unwrap(), &k1).unwrap();
        assert!(!c.direct && c.holds());
    }
}
