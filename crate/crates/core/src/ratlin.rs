//! Exact linear algebra over the rationals.
//!
//! Everything here works on [`BigRational`] entries, so results are exact no
//! matter how large intermediate pivots grow. The matrices that show up in
//! practice are tiny (one column per graph vertex, one row per generator), so
//! the implementations are dense and straightforward.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    /// Builds a matrix from row-major entries.
    ///
    /// Panics if `entries.len() != rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Self {
        assert_eq!(
            entries.len(),
            rows * cols,
            "entry count must be rows * cols"
        );
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![Rational::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from integer rows. `cols` is needed for the zero-row case.
    ///
    /// Panics if a row has the wrong length.
    pub fn from_int_rows<R: AsRef<[i64]>>(cols: usize, rows: &[R]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            let row = row.as_ref();
            assert_eq!(row.len(), cols, "ragged row");
            entries.extend(row.iter().map(|&v| Rational::from_integer(BigInt::from(v))));
        }
        Self::new(rows.len(), cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = m.get(lead, c).recip();
            for k in c..m.cols {
                let v = m.get(lead, k) * &inv;
                m.set(lead, k, v);
            }
            for r in 0..m.rows {
                if r == lead || m.get(r, c).is_zero() {
                    continue;
                }
                let factor = m.get(r, c).clone();
                for k in c..m.cols {
                    let v = m.get(r, k) - &factor * m.get(lead, k);
                    m.set(r, k, v);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Rank over the rationals.
pub fn rank(m: &RatMatrix) -> usize {
    m.rref().1.len()
}

/// Basis of the right null space `{v : Mv = 0}`, one vector per free column.
pub fn kernel_basis(m: &RatMatrix) -> Vec<Vec<Rational>> {
    let (r, pivots) = m.rref();
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rational::zero(); m.cols];
        v[free] = Rational::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(row, free).clone();
        }
        basis.push(v);
    }
    basis
}

/// Finds a strictly positive integer vector in the kernel of `m`, if one exists.
///
/// Solves `{Mα = 0, α ≥ 1}` with an exact phase-1 simplex using Bland's rule.
/// Because the system is homogeneous, feasibility over positive rationals and
/// over positive integers coincide; the returned vector has denominators
/// cleared and the common gcd divided out. The witness is re-checked before
/// it is returned.
pub fn positive_solution(m: &RatMatrix) -> Option<Vec<BigInt>> {
    let n = m.cols();
    if n == 0 {
        return if m.rows() == 0 || m.entries.iter().all(Zero::is_zero) {
            Some(Vec::new())
        } else {
            None
        };
    }
    // Independent rows only; α = 1 + β turns the system into Mβ = -M·1, β ≥ 0.
    let (reduced, pivots) = m.rref();
    let rows = pivots.len();
    let ones = vec![Rational::one(); n];
    let mut a = RatMatrix::zeros(rows, n);
    let mut b = Vec::with_capacity(rows);
    for r in 0..rows {
        let rhs = -reduced
            .row(r)
            .iter()
            .fold(Rational::zero(), |acc, x| acc + x);
        let flip = rhs.is_negative();
        for c in 0..n {
            let v = reduced.get(r, c).clone();
            a.set(r, c, if flip { -v } else { v });
        }
        b.push(if flip { -rhs } else { rhs });
    }
    let beta = phase_one(&a, &b)?;
    let alpha: Vec<Rational> = beta.iter().zip(&ones).map(|(x, o)| x + o).collect();
    let witness = normalize(&alpha);

    let check: Vec<Rational> = witness
        .iter()
        .map(|v| Rational::from_integer(v.clone()))
        .collect();
    assert!(
        m.apply(&check).iter().all(Zero::is_zero),
        "positive witness fails re-substitution"
    );
    assert!(witness.iter().all(|v| v >= &BigInt::one()));
    Some(witness)
}

/// Clears denominators by their lcm, then divides by the gcd of the entries.
fn normalize(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &gcd).collect()
}

/// Phase 1 of the simplex method for `{Ax = b, x ≥ 0}` with `b ≥ 0`.
///
/// Returns a feasible `x` or `None`. Artificial variables occupy columns
/// `n..n+m`; Bland's rule picks the lowest-index entering column and breaks
/// ratio ties by the lowest-index basic variable.
fn phase_one(a: &RatMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let m = a.rows();
    let n = a.cols();
    let width = n + m;
    if m == 0 {
        return Some(vec![Rational::zero(); n]);
    }
    // tableau rows: [A | I | b]
    let mut t: Vec<Vec<Rational>> = (0..m)
        .map(|r| {
            let mut row: Vec<Rational> = a.row(r).to_vec();
            row.extend((0..m).map(|k| {
                if k == r {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            row.push(b[r].clone());
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..width).collect();

    loop {
        // reduced cost of column j: c_j - sum over rows of c_B(i) * t[i][j]
        let entering = (0..width).find(|&j| {
            let cj = if j >= n {
                Rational::one()
            } else {
                Rational::zero()
            };
            let z = (0..m).fold(Rational::zero(), |acc, i| {
                if basis[i] >= n {
                    acc + &t[i][j]
                } else {
                    acc
                }
            });
            (cj - z).is_negative()
        });
        let Some(col) = entering else { break };

        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if !t[i][col].is_positive() {
                continue;
            }
            let ratio = &t[i][width] / &t[i][col];
            let better = match &leave {
                None => true,
                Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // Phase 1 objective is bounded below by zero, so a ratio always exists.
        let (prow, _) = leave.expect("phase-1 objective is bounded");

        let inv = t[prow][col].recip();
        for v in t[prow].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = t[prow].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == prow || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                *v = &*v - &factor * p;
            }
        }
        basis[prow] = col;
    }

    let infeasibility = (0..m)
        .filter(|&i| basis[i] >= n)
        .fold(Rational::zero(), |acc, i| acc + &t[i][width]);
    if infeasibility.is_positive() {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for i in 0..m {
        if basis[i] < n {
            x[basis[i]] = t[i][width].clone();
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from_integer(BigInt::from(v))
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RatMatrix::identity(3)), 3);
        assert_eq!(rank(&RatMatrix::zeros(2, 5)), 0);
        let p4 = RatMatrix::from_int_rows(4, &[[0, 1, 0, 1], [0, 1, 1, 0], [1, 0, 1, 0]]);
        assert_eq!(rank(&p4), 3);
    }

    #[test]
    fn kernel_of_single_difference() {
        let m = RatMatrix::from_int_rows(2, &[[1, -1]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0][0], k[0][1]);
        assert!(!k[0][0].is_zero());
        assert!(kernel_basis(&RatMatrix::identity(4)).is_empty());
    }

    /// Difference rows of J(P5) = (x1x3x5, x1x3x4, x2x4, x2x3x5) against the first generator.
    fn p5_differences() -> RatMatrix {
        let gens = [
            [1, 0, 1, 0, 1],
            [1, 0, 1, 1, 0],
            [0, 1, 0, 1, 0],
            [0, 1, 1, 0, 1],
        ];
        let rows: Vec<Vec<i64>> = gens[1..]
            .iter()
            .map(|g| g.iter().zip(&gens[0]).map(|(a, b)| a - b).collect())
            .collect();
        RatMatrix::from_int_rows(5, &rows)
    }

    #[test]
    fn p5_kernel_vectors_vanish_on_x3() {
        let k = kernel_basis(&p5_differences());
        assert!(!k.is_empty());
        for v in k {
            assert!(v[2].is_zero());
        }
        assert_eq!(positive_solution(&p5_differences()), None);
    }

    #[test]
    fn unconstrained_system_gives_all_ones() {
        let m = RatMatrix::zeros(0, 3);
        assert_eq!(
            positive_solution(&m),
            Some(vec![BigInt::one(), BigInt::one(), BigInt::one()])
        );
    }

    #[test]
    fn witness_is_normalized() {
        // a1 = 2 a2 forces (2, 1) up to scaling
        let m = RatMatrix::from_int_rows(2, &[[1, -2]]);
        assert_eq!(
            positive_solution(&m),
            Some(vec![BigInt::from(2), BigInt::from(1)])
        );
        // a1 + a2 = 0 has no positive solution
        let m = RatMatrix::from_int_rows(2, &[[1, 1]]);
        assert_eq!(positive_solution(&m), None);
    }

    #[test]
    fn apply_and_rref_agree_on_kernel() {
        let m = RatMatrix::from_int_rows(3, &[[1, 2, 3], [2, 4, 6], [1, 0, -1]]);
        assert_eq!(rank(&m), 2);
        for v in kernel_basis(&m) {
            assert!(m.apply(&v).iter().all(Zero::is_zero));
        }
        assert_eq!(m.apply(&[q(1), q(-2), q(1)]), vec![q(0), q(0), q(0)]);
    }
}
