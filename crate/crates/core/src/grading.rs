//! Equigeneration and quasi-equigeneration of monomial ideals.
//!
//! An ideal `(f_1, …, f_t)` is quasi-equigenerated when some strictly positive
//! integer weight vector `α` gives every generator the same weighted degree.
//! Deciding that is a homogeneous linear feasibility problem on the
//! difference rows `f_j − f_1`, which [`crate::ratlin::positive_solution`]
//! settles exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::{weighted_degree, MonomialIdeal};
use crate::ratlin::{positive_solution, RatMatrix};

/// Positive weights `α` and the common weighted degree `d` they certify.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightWitness {
    pub alpha: Vec<u64>,
    pub common_degree: u64,
}

impl WeightWitness {
    /// Whether this witness really grades every generator of `ideal` to `common_degree`.
    pub fn certifies(&self, ideal: &MonomialIdeal) -> bool {
        self.alpha.len() == ideal.vars()
            && self.alpha.iter().all(|&a| a >= 1)
            && ideal
                .gens()
                .iter()
                .all(|g| weighted_degree(g, &self.alpha) == Ok(self.common_degree))
    }
}

fn nonzero(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        Err(Error::ZeroIdeal)
    } else {
        Ok(())
    }
}

/// All generators share one total degree.
pub fn is_equigenerated(ideal: &MonomialIdeal) -> Result<bool> {
    nonzero(ideal)?;
    let d = ideal.gens()[0].degree();
    Ok(ideal.gens().iter().all(|g| g.degree() == d))
}

/// All maximal independent sets of `g` have the same size; equivalent to
/// `J(G)` being equigenerated.
pub fn independent_sets_equicardinal(g: &Graph) -> bool {
    let fam = g.maximal_independent_sets();
    fam.sets().windows(2).all(|w| w[0].len() == w[1].len())
}

/// Rows `f_j − f_baseline` for every `j ≠ baseline`.
pub fn difference_matrix(ideal: &MonomialIdeal, baseline: usize) -> RatMatrix {
    let n = ideal.vars();
    let base = ideal.gens()[baseline].exponents();
    let mut entries = Vec::new();
    let mut rows = 0;
    for (j, g) in ideal.gens().iter().enumerate() {
        if j == baseline {
            continue;
        }
        rows += 1;
        entries.extend(
            g.exponents().iter().zip(base).map(|(&a, &b)| {
                BigRational::from_integer(BigInt::from(i64::from(a) - i64::from(b)))
            }),
        );
    }
    RatMatrix::new(rows, n, entries)
}

/// A verified weight witness, or `None` when the ideal is not quasi-equigenerated.
pub fn quasi_witness(ideal: &MonomialIdeal) -> Result<Option<WeightWitness>> {
    nonzero(ideal)?;
    if is_equigenerated(ideal)? {
        let alpha = vec![1; ideal.vars()];
        let common_degree = ideal.gens()[0].degree();
        return Ok(Some(WeightWitness {
            alpha,
            common_degree,
        }));
    }
    quasi_witness_with_baseline(ideal, 0)
}

/// Like [`quasi_witness`] but always solves the linear system, using
/// generator `baseline` for the difference rows.
pub fn quasi_witness_with_baseline(
    ideal: &MonomialIdeal,
    baseline: usize,
) -> Result<Option<WeightWitness>> {
    nonzero(ideal)?;
    if baseline >= ideal.mu() {
        return Err(Error::LengthMismatch {
            expected: ideal.mu(),
            actual: baseline,
        });
    }
    let Some(solution) = positive_solution(&difference_matrix(ideal, baseline)) else {
        return Ok(None);
    };
    let alpha = solution
        .iter()
        .map(|v| v.to_u64().ok_or(Error::WitnessTooLarge))
        .collect::<Result<Vec<u64>>>()?;
    let common_degree = weighted_degree(&ideal.gens()[0], &alpha)?;
    let witness = WeightWitness {
        alpha,
        common_degree,
    };
    assert!(
        witness.certifies(ideal),
        "solver returned an invalid witness"
    );
    Ok(Some(witness))
}

pub fn is_quasi_equigenerated(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(quasi_witness(ideal)?.is_some())
}

/// A closed-form expectation next to the computed value it predicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredicateCheck {
    pub theorem: &'static str,
    pub expected: bool,
    pub computed: bool,
}

impl PredicateCheck {
    pub fn holds(&self) -> bool {
        self.expected == self.computed
    }
}

/// Closed form for equigeneration of `J(P_(n,s))`: `n ≤ s+1` or `n = 2s+2`.
pub fn banded_path_equigenerated_expected(n: usize, s: usize) -> bool {
    n <= s + 1 || n == 2 * s + 2
}

/// Circulant bound as usually stated: `s ≥ (n−1)/3` or `s = (n−3)/4`.
pub fn circulant_quasi_printed_bound(n: usize, s: usize) -> bool {
    3 * s + 1 >= n || 4 * s + 3 == n
}

/// Circulant bound obtained from `G_1 = P_(n−2s−1, s)` and the banded-path
/// closed form: `s ≥ (n−2)/3` or `s = (n−3)/4`.
pub fn circulant_quasi_derived_bound(n: usize, s: usize) -> bool {
    3 * s + 2 >= n || 4 * s + 3 == n
}

/// Ground truth for `J(C_n(1..s))` against both closed forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CirculantQuasiCheck {
    pub n: usize,
    pub s: usize,
    pub computed_quasi: bool,
    pub computed_equigenerated: bool,
    pub g1_equigenerated: bool,
    pub printed_bound: bool,
    pub derived_bound: bool,
}

impl CirculantQuasiCheck {
    pub fn matches_derived(&self) -> bool {
        self.computed_quasi == self.derived_bound
    }

    pub fn printed_disagrees(&self) -> bool {
        self.computed_quasi != self.printed_bound
    }

    /// Quasi ⟺ equi ⟺ `J(G_1)` equi.
    pub fn equivalences_hold(&self) -> bool {
        self.computed_quasi == self.computed_equigenerated
            && self.computed_quasi == self.g1_equigenerated
    }
}

pub fn circulant_quasi_expected(n: usize, s: usize) -> Result<CirculantQuasiCheck> {
    let g = Graph::circulant(n, s)?;
    let ideal = MonomialIdeal::cover_ideal(&g)?;
    let g1 = MonomialIdeal::cover_ideal(&g.g_sub(0)?)?;
    Ok(CirculantQuasiCheck {
        n,
        s,
        computed_quasi: is_quasi_equigenerated(&ideal)?,
        computed_equigenerated: is_equigenerated(&ideal)?,
        g1_equigenerated: is_equigenerated(&g1)?,
        printed_bound: circulant_quasi_printed_bound(n, s),
        derived_bound: circulant_quasi_derived_bound(n, s),
    })
}

/// Tree criterion: `J(T)` is quasi-equigenerated iff every vertex of degree
/// at least two has a leaf neighbour.
pub fn tree_quasi_expected(t: &Graph) -> Result<PredicateCheck> {
    if !t.is_tree() {
        return Err(Error::ParameterOutOfRange("graph is not a tree".into()));
    }
    Ok(PredicateCheck {
        theorem: "tree-quasi-criterion",
        expected: t.every_internal_vertex_has_leaf(),
        computed: is_quasi_equigenerated(&MonomialIdeal::cover_ideal(t)?)?,
    })
}

/// Independence number two forces quasi-equigeneration. `None` when `c(G) ≠ 2`.
pub fn c2_implies_quasi(g: &Graph) -> Result<Option<PredicateCheck>> {
    if g.independence_number() != 2 {
        return Ok(None);
    }
    Ok(Some(PredicateCheck {
        theorem: "independence-two-quasi",
        expected: true,
        computed: is_quasi_equigenerated(&MonomialIdeal::cover_ideal(g)?)?,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cover(g: &Graph) -> MonomialIdeal {
        MonomialIdeal::cover_ideal(g).unwrap()
    }

    #[test]
    fn equigenerated_examples() {
        for n in 1..6 {
            assert!(is_equigenerated(&cover(&Graph::complete(n))).unwrap());
        }
        assert!(is_equigenerated(&cover(&Graph::cycle(7).unwrap())).unwrap());
        assert!(!is_equigenerated(&cover(&Graph::cycle(6).unwrap())).unwrap());
        let zero = MonomialIdeal::zero(vec!["x".into()]).unwrap();
        assert_eq!(is_equigenerated(&zero), Err(Error::ZeroIdeal));
        assert_eq!(quasi_witness(&zero), Err(Error::ZeroIdeal));
    }

    #[test]
    fn non_quasi_examples() {
        assert_eq!(quasi_witness(&cover(&Graph::path(5))).unwrap(), None);
        assert_eq!(
            quasi_witness(&cover(&Graph::cycle(6).unwrap())).unwrap(),
            None
        );
    }

    #[test]
    fn equigenerated_gets_all_ones() {
        let w = quasi_witness(&cover(&Graph::cycle(5).unwrap()))
            .unwrap()
            .unwrap();
        assert_eq!(w.alpha, vec![1; 5]);
        assert_eq!(w.common_degree, 3);
    }

    #[test]
    fn linked_join_counterexample_is_quasi() {
        // P5 joined to P2 along {x2, x3, x5}
        let g = Graph::linked_join(&Graph::path(5), &[1, 2, 4], &Graph::path(2), &[0, 1]).unwrap();
        let ideal = cover(&g);
        let w = quasi_witness(&ideal).unwrap().expect("quasi-equigenerated");
        assert!(w.certifies(&ideal));
        // weight 2 on x2, 1 elsewhere
        let alpha = vec![1, 2, 1, 1, 1, 1, 1];
        let common_degree = weighted_degree(&ideal.gens()[0], &alpha).unwrap();
        let hand = WeightWitness {
            alpha,
            common_degree,
        };
        assert!(hand.certifies(&ideal));
    }

    #[test]
    fn baseline_choice_does_not_matter() {
        let g = Graph::linked_join(&Graph::path(5), &[1, 2, 4], &Graph::path(2), &[0, 1]).unwrap();
        let ideal = cover(&g);
        for b in 0..ideal.mu() {
            assert!(quasi_witness_with_baseline(&ideal, b).unwrap().is_some());
        }
        let p5 = cover(&Graph::path(5));
        for b in 0..p5.mu() {
            assert!(quasi_witness_with_baseline(&p5, b).unwrap().is_none());
        }
    }

    #[test]
    fn circulant_bounds() {
        let c = circulant_quasi_expected(7, 1).unwrap();
        assert!(c.printed_bound && c.derived_bound && c.computed_quasi);
        let c = circulant_quasi_expected(6, 1).unwrap();
        assert!(!c.printed_bound && !c.derived_bound && !c.computed_quasi);
        let c = circulant_quasi_expected(5, 1).unwrap();
        assert!(!c.printed_bound && c.derived_bound && c.computed_quasi);
        assert!(c.printed_disagrees() && c.matches_derived());
    }

    #[test]
    fn predicates() {
        let t = tree_quasi_expected(&Graph::path(5)).unwrap();
        assert!(!t.expected && t.holds());
        assert!(tree_quasi_expected(&Graph::cycle(4).unwrap()).is_err());
        assert!(c2_implies_quasi(&Graph::cycle(5).unwrap())
            .unwrap()
            .unwrap()
            .holds());
        assert!(c2_implies_quasi(&Graph::path(5)).unwrap().is_none());
    }
}
