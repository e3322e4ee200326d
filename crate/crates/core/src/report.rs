//! Per-graph analysis reports.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::fiber::{
    fiber_report, herzog_power_check, prime_generator_check, toric_profile, FiberReport,
    PowerCheck, ToricProfile, DEFAULT_TORIC_DEGREE,
};
use crate::grading::{
    c2_implies_quasi, is_equigenerated, quasi_witness, tree_quasi_expected, PredicateCheck,
    WeightWitness,
};
use crate::graph::Graph;
use crate::ideal::MonomialIdeal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AnalysisOptions {
    pub max_toric_degree: usize,
    /// largest power checked against the Freiman power formula; 0 skips it
    pub powers: usize,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            max_toric_degree: DEFAULT_TORIC_DEGREE,
            powers: 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    pub independence_number: usize,
    pub reduced_vertices: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum FiberSection {
    NotQuasiEquigenerated,
    Computed {
        report: FiberReport,
        toric: ToricProfile,
        powers: Vec<PowerCheck>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub graph: GraphSummary,
    pub generators: Vec<String>,
    pub equigenerated: bool,
    pub quasi_witness: Option<WeightWitness>,
    pub fiber: FiberSection,
    pub verdicts: Vec<PredicateCheck>,
}

impl AnalysisReport {
    pub fn has_mismatch(&self) -> bool {
        self.verdicts.iter().any(|v| !v.holds())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let g = &self.graph;
        let _ = writeln!(
            s,
            "graph: {} vertices, {} edges, independence number {}, reduced to {} vertices",
            g.vertices, g.edges, g.independence_number, g.reduced_vertices
        );
        let _ = writeln!(s, "cover ideal ({} generators):", self.generators.len());
        for gen in &self.generators {
            let _ = writeln!(s, "  {gen}");
        }
        let _ = writeln!(s, "equigenerated: {}", self.equigenerated);
        match &self.quasi_witness {
            Some(w) => {
                let _ = writeln!(
                    s,
                    "quasi-equigenerated: weights {:?}, degree {}",
                    w.alpha, w.common_degree
                );
            }
            None => {
                let _ = writeln!(s, "quasi-equigenerated: no");
            }
        }
        match &self.fiber {
            FiberSection::NotQuasiEquigenerated => {
                let _ = writeln!(s, "fiber cone: not quasi-equigenerated");
            }
            FiberSection::Computed {
                report,
                toric,
                powers,
            } => {
                let _ = writeln!(
                    s,
                    "fiber cone: t={} l={} a={} mu2={} b={} freiman={} linear_type={}",
                    report.t,
                    report.l,
                    report.a,
                    report.mu2,
                    report.b,
                    report.freiman,
                    report.linear_type
                );
                let counts: Vec<String> = toric
                    .counts
                    .iter()
                    .map(|(d, c)| format!("{d}:{c}"))
                    .collect();
                let _ = writeln!(s, "toric generators by degree: {{{}}}", counts.join(", "));
                for r in &toric.relations {
                    let _ = writeln!(s, "  {} - {}", monomial_in_t(&r.lhs), monomial_in_t(&r.rhs));
                }
                for p in powers {
                    let _ = writeln!(
                        s,
                        "  mu(I^{}) = {} (formula {})",
                        p.j, p.computed, p.formula
                    );
                }
            }
        }
        let _ = writeln!(s, "verdicts:");
        for v in &self.verdicts {
            let _ = writeln!(
                s,
                "  [{}] {}: expected {}, computed {}",
                if v.holds() { "ok" } else { "MISMATCH" },
                v.theorem,
                v.expected,
                v.computed
            );
        }
        s
    }
}

/// `T1*T4^2` style rendering of a multiset of 0-based generator indices.
fn monomial_in_t(indices: &[usize]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut k = 0;
    while k < indices.len() {
        let run = indices[k..]
            .iter()
            .take_while(|&&x| x == indices[k])
            .count();
        parts.push(if run == 1 {
            format!("T{}", indices[k] + 1)
        } else {
            format!("T{}^{run}", indices[k] + 1)
        });
        k += run;
    }
    parts.join("*")
}

/// Full analysis of `g`. Capacity errors propagate unchanged.
pub fn analyze(g: &Graph, options: AnalysisOptions) -> Result<AnalysisReport> {
    let ideal = MonomialIdeal::cover_ideal(g)?;
    let witness = quasi_witness(&ideal)?;
    let mut verdicts = Vec::new();

    if let Some(check) = c2_implies_quasi(g)? {
        verdicts.push(check);
    }
    if g.order() >= 2 && g.is_tree() {
        verdicts.push(tree_quasi_expected(g)?);
    }

    let fiber = if witness.is_some() {
        let report = fiber_report(&ideal)?;
        let toric = toric_profile(&ideal, options.max_toric_degree)?;
        let powers = if options.powers >= 1 {
            herzog_power_check(&ideal, options.powers)?
        } else {
            Vec::new()
        };
        fiber_verdicts(g, &report, &toric, &powers, options, &mut verdicts)?;
        FiberSection::Computed {
            report,
            toric,
            powers,
        }
    } else {
        FiberSection::NotQuasiEquigenerated
    };

    Ok(AnalysisReport {
        graph: GraphSummary {
            vertices: g.order(),
            edges: g.edge_count(),
            independence_number: g.independence_number(),
            reduced_vertices: g.reduce().order(),
        },
        generators: ideal.rendered_gens(),
        equigenerated: is_equigenerated(&ideal)?,
        quasi_witness: witness,
        fiber,
        verdicts,
    })
}

fn fiber_verdicts(
    g: &Graph,
    report: &FiberReport,
    toric: &ToricProfile,
    powers: &[PowerCheck],
    options: AnalysisOptions,
    out: &mut Vec<PredicateCheck>,
) -> Result<()> {
    out.push(PredicateCheck {
        theorem: "freiman-inequality",
        expected: true,
        computed: report.mu2 >= report.freiman_bound(),
    });
    out.push(PredicateCheck {
        theorem: "quadratic-relations-count",
        expected: true,
        computed: toric.count(2) as u64 == report.b,
    });
    if report.linear_type {
        out.push(PredicateCheck {
            theorem: "linear-type-no-relations",
            expected: true,
            computed: toric.is_zero(),
        });
    }
    if report.freiman {
        out.push(PredicateCheck {
            theorem: "freiman-quadratic-generation",
            expected: true,
            computed: (3..=options.max_toric_degree).all(|d| toric.count(d) == 0),
        });
    }
    if g.order() >= 4 && g.is_almost_complete() {
        out.push(PredicateCheck {
            theorem: "almost-complete-linear-type",
            expected: true,
            computed: report.freiman && report.linear_type,
        });
    }
    if let Some(base) = g.whisker_base() {
        out.push(PredicateCheck {
            theorem: "whisker-freiman",
            expected: base.is_almost_complete(),
            computed: report.freiman,
        });
    }
    let primes = prime_generator_check(g, options.max_toric_degree)?;
    out.push(PredicateCheck {
        theorem: "unique-set-generators-prime",
        expected: true,
        computed: primes.violations.is_empty(),
    });
    if powers.len() >= 2 {
        out.push(PredicateCheck {
            theorem: "freiman-power-formula",
            expected: report.freiman,
            computed: powers.iter().all(PowerCheck::equal),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p5_has_no_fiber_section() {
        let r = analyze(&Graph::path(5), AnalysisOptions::default()).unwrap();
        assert_eq!(r.generators.len(), 4);
        assert_eq!(r.quasi_witness, None);
        assert_eq!(r.fiber, FiberSection::NotQuasiEquigenerated);
        assert!(!r.has_mismatch());
        assert!(r.to_json().contains("not_quasi_equigenerated"));
    }

    #[test]
    fn circulant_six_two_is_freiman() {
        let r = analyze(&Graph::circulant(6, 2).unwrap(), AnalysisOptions::default()).unwrap();
        let FiberSection::Computed { report, .. } = &r.fiber else {
            panic!("expected a fiber section");
        };
        assert!(report.freiman);
        assert!(!r.has_mismatch(), "{}", r.to_text());
    }

    #[test]
    fn edgeless_graph_gives_unit_ideal() {
        let g = Graph::edgeless(["a", "b"]).unwrap();
        let r = analyze(&g, AnalysisOptions::default()).unwrap();
        assert_eq!(r.generators, vec!["1".to_string()]);
        assert!(r.equigenerated);
        assert!(!r.has_mismatch());
    }

    #[test]
    fn reports_are_deterministic() {
        let g = Graph::h_family(3).unwrap();
        let a = analyze(&g, AnalysisOptions::default()).unwrap();
        let b = analyze(&g, AnalysisOptions::default()).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert!(a.to_text().contains("T1*T"));
    }

    #[test]
    fn t_monomials() {
        assert_eq!(monomial_in_t(&[0, 0, 3]), "T1^2*T4");
    }
}
