//! Parameter sweeps comparing computed invariants with closed forms.
//!
//! Every row names the closed form it tests through a stable identifier so
//! reports can be traced back to the statement being checked.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::catalog::{all_graphs, named_graphs};
use crate::error::{Error, Result};
use crate::fiber::fiber_report;
use crate::grading::{
    banded_path_equigenerated_expected, circulant_quasi_expected, is_equigenerated,
    is_quasi_equigenerated,
};
use crate::graph::Graph;
use crate::ideal::{binomial, MonomialIdeal};
use crate::trees::free_trees;

/// The available sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepCheck {
    QuasiCirculant,
    CircFreiman,
    Equipath,
    TwoCliques,
    WhiskerSpread,
    WhiskerFreiman,
    Trees,
}

impl SweepCheck {
    pub const ALL: [SweepCheck; 7] = [
        SweepCheck::QuasiCirculant,
        SweepCheck::CircFreiman,
        SweepCheck::Equipath,
        SweepCheck::TwoCliques,
        SweepCheck::WhiskerSpread,
        SweepCheck::WhiskerFreiman,
        SweepCheck::Trees,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SweepCheck::QuasiCirculant => "quasicirculant",
            SweepCheck::CircFreiman => "circ-freiman",
            SweepCheck::Equipath => "equipath",
            SweepCheck::TwoCliques => "two-cliques",
            SweepCheck::WhiskerSpread => "whisker-spread",
            SweepCheck::WhiskerFreiman => "whisker-freiman",
            SweepCheck::Trees => "trees",
        }
    }

    /// Default ranges for this sweep.
    pub fn default_range(self) -> SweepRange {
        let (n_min, n_max, s_max) = match self {
            SweepCheck::QuasiCirculant => (3, 14, None),
            SweepCheck::CircFreiman => (3, 12, None),
            SweepCheck::Equipath => (1, 14, Some(6)),
            SweepCheck::TwoCliques => (2, 6, None),
            SweepCheck::WhiskerSpread | SweepCheck::WhiskerFreiman => (1, 6, None),
            SweepCheck::Trees => (2, 9, None),
        };
        SweepRange {
            n_min,
            n_max,
            s_max,
        }
    }
}

impl fmt::Display for SweepCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepCheck {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SweepCheck::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::ParameterOutOfRange(format!("unknown sweep check `{s}`")))
    }
}

/// Parameter ranges. For `two-cliques`, `n` bounds both clique sizes; for
/// whisker sweeps it bounds the base order; for trees it bounds the tree order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepRange {
    pub n_min: usize,
    pub n_max: usize,
    pub s_max: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    Match,
    Mismatch,
    /// agrees with ground truth but a documented closed form disagrees
    Flagged,
    /// capacity exceeded
    Skipped,
    /// outside the hypothesis of the closed form
    #[serde(rename = "n/a")]
    NotApplicable,
}

impl RowStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RowStatus::Match => "match",
            RowStatus::Mismatch => "mismatch",
            RowStatus::Flagged => "flagged",
            RowStatus::Skipped => "skipped",
            RowStatus::NotApplicable => "n/a",
        }
    }
}

/// One sweep instance. Field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub check: String,
    pub instance: String,
    pub params: String,
    pub computed: String,
    pub expected: String,
    pub theorem: &'static str,
    pub status: RowStatus,
    pub discrepancy: String,
    pub note: String,
}

pub const CSV_COLUMNS: [&str; 9] = [
    "check",
    "instance",
    "params",
    "computed",
    "expected",
    "theorem",
    "status",
    "discrepancy",
    "note",
];

impl SweepRow {
    fn new(check: SweepCheck, instance: String, params: String, theorem: &'static str) -> Self {
        SweepRow {
            check: check.name().into(),
            instance,
            params,
            computed: String::new(),
            expected: String::new(),
            theorem,
            status: RowStatus::Match,
            discrepancy: String::new(),
            note: String::new(),
        }
    }

    fn compare<T: PartialEq + fmt::Display>(mut self, computed: T, expected: T) -> Self {
        self.status = if computed == expected {
            RowStatus::Match
        } else {
            RowStatus::Mismatch
        };
        self.computed = computed.to_string();
        self.expected = expected.to_string();
        self
    }

    fn failed(mut self, err: Error) -> Result<Self> {
        match err {
            Error::Capacity { .. } => {
                self.status = RowStatus::Skipped;
                self.note = err.to_string();
                Ok(self)
            }
            other => Err(other),
        }
    }

    pub fn values(&self) -> [String; 9] {
        [
            self.check.clone(),
            self.instance.clone(),
            self.params.clone(),
            self.computed.clone(),
            self.expected.clone(),
            self.theorem.to_string(),
            self.status.as_str().to_string(),
            self.discrepancy.clone(),
            self.note.clone(),
        ]
    }
}

/// Rows of one sweep in deterministic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepOutcome {
    pub check: SweepCheck,
    pub range: SweepRange,
    pub rows: Vec<SweepRow>,
}

impl SweepOutcome {
    pub fn count(&self, status: RowStatus) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }

    pub fn has_mismatch(&self) -> bool {
        self.count(RowStatus::Mismatch) > 0
    }
}

/// Runs `check` over `range`. Only capacity failures are absorbed (as
/// skipped rows); other errors abort the sweep.
pub fn run_sweep(check: SweepCheck, range: SweepRange) -> Result<SweepOutcome> {
    let rows = match check {
        SweepCheck::QuasiCirculant => quasi_circulant_rows(range)?,
        SweepCheck::CircFreiman => circ_freiman_rows(range)?,
        SweepCheck::Equipath => equipath_rows(range)?,
        SweepCheck::TwoCliques => two_cliques_rows(range)?,
        SweepCheck::WhiskerSpread => whisker_rows(range, false)?,
        SweepCheck::WhiskerFreiman => whisker_rows(range, true)?,
        SweepCheck::Trees => tree_rows(range)?,
    };
    Ok(SweepOutcome { check, range, rows })
}

fn circulant_params(range: SweepRange) -> impl Iterator<Item = (usize, usize)> {
    (range.n_min.max(3)..=range.n_max).flat_map(move |n| {
        let top = range.s_max.map_or(n / 2, |s| s.min(n / 2));
        (1..=top).map(move |s| (n, s))
    })
}

fn quasi_circulant_rows(range: SweepRange) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::new();
    for (n, s) in circulant_params(range) {
        let row = SweepRow::new(
            SweepCheck::QuasiCirculant,
            format!("C{n}(1..{s})"),
            format!("n={n} s={s}"),
            "circulant-quasi",
        );
        let c = match circulant_quasi_expected(n, s) {
            Ok(c) => c,
            Err(e) => {
                rows.push(row.failed(e)?);
                continue;
            }
        };
        let mut row = row.compare(c.computed_quasi, c.derived_bound);
        if !c.equivalences_hold() {
            row.status = RowStatus::Mismatch;
            row.note = format!(
                "quasi={} equigenerated={} G1-equigenerated={}",
                c.computed_quasi, c.computed_equigenerated, c.g1_equigenerated
            );
        }
        if c.printed_disagrees() {
            row.discrepancy = format!("printed-bound={}", c.printed_bound);
            if row.status == RowStatus::Match {
                row.status = RowStatus::Flagged;
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Closed form for Freiman circulants among the quasi-equigenerated ones.
pub fn circulant_freiman_expected(n: usize, s: usize) -> bool {
    2 * s + 4 > n || (n, s) == (5, 1) || (n, s) == (7, 1)
}

fn circ_freiman_rows(range: SweepRange) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::new();
    for (n, s) in circulant_params(range) {
        let mut row = SweepRow::new(
            SweepCheck::CircFreiman,
            format!("C{n}(1..{s})"),
            format!("n={n} s={s}"),
            "circulant-freiman",
        );
        let result = Graph::circulant(n, s)
            .and_then(|g| MonomialIdeal::cover_ideal(&g))
            .and_then(|ideal| {
                if is_quasi_equigenerated(&ideal)? {
                    fiber_report(&ideal).map(Some)
                } else {
                    Ok(None)
                }
            });
        match result {
            Ok(Some(report)) => {
                rows.push(row.compare(report.freiman, circulant_freiman_expected(n, s)))
            }
            Ok(None) => {
                row.status = RowStatus::NotApplicable;
                row.note = "not quasi-equigenerated".into();
                rows.push(row);
            }
            Err(e) => rows.push(row.failed(e)?),
        }
    }
    Ok(rows)
}

fn equipath_rows(range: SweepRange) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::new();
    let s_max = range.s_max.unwrap_or(range.n_max);
    for n in range.n_min.max(1)..=range.n_max {
        for s in 1..=s_max {
            let row = SweepRow::new(
                SweepCheck::Equipath,
                format!("P({n},{s})"),
                format!("n={n} s={s}"),
                "banded-path-equigenerated",
            );
            let computed = Graph::banded_path(n, s)
                .and_then(|g| MonomialIdeal::cover_ideal(&g))
                .and_then(|ideal| is_equigenerated(&ideal));
            match computed {
                Ok(v) => rows.push(row.compare(v, banded_path_equigenerated_expected(n, s))),
                Err(e) => rows.push(row.failed(e)?),
            }
        }
    }
    Ok(rows)
}

fn two_cliques_rows(range: SweepRange) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::new();
    let lo = range.n_min.max(2);
    for n in lo..=range.n_max {
        for m in n..=range.n_max {
            let row = SweepRow::new(
                SweepCheck::TwoCliques,
                format!("A({n},{m})"),
                format!("n={n} m={m}"),
                "two-cliques-fiber",
            );
            let report = Graph::two_cliques(n, m)
                .and_then(|g| MonomialIdeal::cover_ideal(&g))
                .and_then(|ideal| fiber_report(&ideal));
            match report {
                Ok(r) => {
                    let b = binomial(n as u128 - 1, 2) * binomial(m as u128 - 1, 2);
                    let computed = format!("l={} b={} freiman={}", r.l, r.b, r.freiman);
                    let expected = format!("l={} b={} freiman={}", n + m - 2, b, n <= 3);
                    rows.push(row.compare(computed, expected));
                }
                Err(e) => rows.push(row.failed(e)?),
            }
        }
    }
    Ok(rows)
}

/// Whisker bases: all graphs on `n_min..=min(n_max, 5)` vertices, then named
/// catalog graphs of order `6..=n_max`.
pub fn whisker_bases(range: SweepRange) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in range.n_min.max(1)..=range.n_max.min(5) {
        for (k, g) in all_graphs(n).into_iter().enumerate() {
            out.push((format!("n{n}#{k}"), g));
        }
    }
    if range.n_max >= 6 {
        for e in named_graphs() {
            let order = e.graph.order();
            if order >= 6.max(range.n_min) && order <= range.n_max {
                out.push((e.name, e.graph));
            }
        }
    }
    out
}

/// Number of independent sets of `g`, the empty set included, by subset enumeration.
pub fn count_independent_sets(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n <= 24, "subset enumeration limited to 24 vertices");
    (0u32..1 << n)
        .filter(|mask| {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            g.is_independent(&set)
        })
        .count() as u64
}

fn edge_summary(g: &Graph) -> String {
    let edges: Vec<String> = g
        .edges()
        .into_iter()
        .map(|(a, b)| format!("{}-{}", g.label(a), g.label(b)))
        .collect();
    format!("n={} edges=[{}]", g.order(), edges.join(" "))
}

fn whisker_rows(range: SweepRange, freiman: bool) -> Result<Vec<SweepRow>> {
    let check = if freiman {
        SweepCheck::WhiskerFreiman
    } else {
        SweepCheck::WhiskerSpread
    };
    let theorem = if freiman {
        "whisker-freiman"
    } else {
        "whisker-spread"
    };
    let mut rows = Vec::new();
    for (name, base) in whisker_bases(range) {
        let row = SweepRow::new(
            check,
            format!("whisker({name})"),
            edge_summary(&base),
            theorem,
        );
        let n = base.order() as u64;
        let result = MonomialIdeal::cover_ideal(&Graph::whisker(&base)).and_then(|ideal| {
            let equi = is_equigenerated(&ideal)?;
            let degree = ideal.gens()[0].degree();
            Ok((ideal.mu(), equi, degree, fiber_report(&ideal)?))
        });
        match result {
            Ok((mu, equi, degree, r)) => {
                let row = if freiman {
                    row.compare(r.freiman, base.is_almost_complete())
                } else {
                    let computed =
                        format!("mu={mu} equigenerated={equi} degree={degree} l={}", r.l);
                    let expected = format!(
                        "mu={} equigenerated=true degree={n} l={}",
                        count_independent_sets(&base),
                        n + 1
                    );
                    row.compare(computed, expected)
                };
                rows.push(row);
            }
            Err(e) => rows.push(row.failed(e)?),
        }
    }
    Ok(rows)
}

/// The reduced trees whose cover ideal is Freiman: `P2`, `P4` and the whiskered `P3`.
pub fn freiman_reduced_trees() -> [Graph; 3] {
    [
        Graph::path(2),
        Graph::path(4),
        Graph::whisker(&Graph::path(3)),
    ]
}

fn tree_rows(range: SweepRange) -> Result<Vec<SweepRow>> {
    let special = freiman_reduced_trees();
    let mut rows = Vec::new();
    for n in range.n_min.max(2)..=range.n_max {
        for (k, tree) in free_trees(n).filter(Graph::is_reduced).enumerate() {
            let row = SweepRow::new(
                SweepCheck::Trees,
                format!("T{n}#{k}"),
                edge_summary(&tree),
                "tree-quasi-criterion+reduced-tree-freiman",
            );
            let result = MonomialIdeal::cover_ideal(&tree).and_then(|ideal| {
                if is_quasi_equigenerated(&ideal)? {
                    Ok((true, fiber_report(&ideal)?.freiman))
                } else {
                    Ok((false, false))
                }
            });
            match result {
                Ok((quasi, freiman)) => {
                    let expected_freiman = special.iter().any(|s| s.is_isomorphic(&tree));
                    rows.push(row.compare(
                        format!("quasi={quasi} freiman={freiman}"),
                        format!(
                            "quasi={} freiman={expected_freiman}",
                            tree.every_internal_vertex_has_leaf()
                        ),
                    ));
                }
                Err(e) => rows.push(row.failed(e)?),
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for c in SweepCheck::ALL {
            assert_eq!(c.name().parse::<SweepCheck>().unwrap(), c);
        }
        assert!("nope".parse::<SweepCheck>().is_err());
    }

    #[test]
    fn small_sweeps_match() {
        for check in SweepCheck::ALL {
            let mut range = check.default_range();
            range.n_max = range.n_max.min(6);
            let out = run_sweep(check, range).unwrap();
            assert!(!out.rows.is_empty(), "{check}");
            assert!(!out.has_mismatch(), "{check}: {:?}", out.rows);
        }
    }

    #[test]
    fn c5_is_flagged() {
        let range = SweepRange {
            n_min: 5,
            n_max: 5,
            s_max: None,
        };
        let out = run_sweep(SweepCheck::QuasiCirculant, range).unwrap();
        let row = out.rows.iter().find(|r| r.instance == "C5(1..1)").unwrap();
        assert_eq!(row.status, RowStatus::Flagged);
        assert_eq!(row.computed, "true");
    }

    #[test]
    fn independent_set_counts() {
        assert_eq!(count_independent_sets(&Graph::complete(4)), 5);
        assert_eq!(count_independent_sets(&Graph::path(3)), 5);
        assert_eq!(count_independent_sets(&Graph::cycle(4).unwrap()), 7);
    }
}
