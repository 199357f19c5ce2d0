//! Truncated formal power series in `q` with exact integer coefficients,
//! Gaussian binomials, inverse Pochhammer expansions, and the generating
//! series behind the counting identities.
//!
//! Every series carries a fixed truncation degree `N` and stores exactly
//! `N + 1` coefficients; arithmetic never consults higher degrees.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// A polynomial in `q` truncated at a fixed maximum degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSeries {
    coeffs: Vec<i64>,
}

impl QSeries {
    /// The zero series truncated at `max_degree`.
    pub fn zero(max_degree: usize) -> Self {
        QSeries {
            coeffs: vec![0; max_degree + 1],
        }
    }

    /// The multiplicative identity truncated at `max_degree`.
    pub fn one(max_degree: usize) -> Self {
        let mut s = QSeries::zero(max_degree);
        s.coeffs[0] = 1;
        s
    }

    /// `q^degree`, or zero if the degree exceeds the truncation.
    pub fn monomial(degree: usize, max_degree: usize) -> Self {
        let mut s = QSeries::zero(max_degree);
        if degree <= max_degree {
            s.coeffs[degree] = 1;
        }
        s
    }

    /// Builds a series from explicit coefficients (index = degree).
    pub fn from_coeffs(coeffs: Vec<i64>) -> Result<Self, Error> {
        if coeffs.is_empty() {
            return Err(Error::Invariant(
                "a series stores at least the constant term",
            ));
        }
        Ok(QSeries { coeffs })
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^degree`; 0 past the truncation degree.
    pub fn coeff(&self, degree: usize) -> i64 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check_degree(&self, other: &Self) -> Result<(), Error> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::DegreeMismatch {
                left: self.max_degree(),
                right: other.max_degree(),
            });
        }
        Ok(())
    }

    /// Coefficient-wise sum; both operands must share the truncation degree.
    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_degree(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(QSeries { coeffs })
    }

    /// Coefficient-wise difference.
    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.check_degree(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(QSeries { coeffs })
    }

    /// Cauchy product truncated at the shared maximum degree.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_degree(other)?;
        let n = self.coeffs.len();
        let mut coeffs = vec![0i64; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs[..n - i].iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(QSeries { coeffs })
    }

    /// Multiplication by `q^amount`: shifts coefficients up, truncating.
    pub fn shifted(&self, amount: usize) -> Self {
        let n = self.coeffs.len();
        let mut coeffs = vec![0i64; n];
        if amount < n {
            coeffs[amount..].copy_from_slice(&self.coeffs[..n - amount]);
        }
        QSeries { coeffs }
    }
}

impl fmt::Display for QSeries {
    /// Renders as `c0 + c1*q + c2*q^2 + ...`, skipping zero terms;
    /// the zero series prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let magnitude = c.unsigned_abs();
            match d {
                0 => write!(f, "{magnitude}")?,
                1 => write!(f, "{magnitude}*q")?,
                _ => write!(f, "{magnitude}*q^{d}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The Gaussian binomial coefficient as a truncated polynomial: the
/// coefficient of `q^w` counts partitions of `w` fitting in a
/// `k x (n - k)` box. Computed by the addition recurrence
/// `qbin(n, k) = qbin(n-1, k-1) + q^k * qbin(n-1, k)`, so all arithmetic
/// stays in the integers.
pub fn q_binomial(n: usize, k: usize, max_degree: usize) -> Result<QSeries, Error> {
    if k > n {
        return Err(Error::BinomialIndexOutOfRange { n, k });
    }
    // row[j] = qbin(i, j) for the current i, kept only up to j = k.
    let mut row = vec![QSeries::one(max_degree)];
    for i in 1..=n {
        let width = k.min(i);
        let mut next = Vec::with_capacity(width + 1);
        next.push(QSeries::one(max_degree));
        for j in 1..=width {
            let carried = row[j - 1].clone();
            let entry = match row.get(j) {
                Some(upper) => carried
                    .add(&upper.shifted(j))
                    .expect("triangle entries share the truncation degree"),
                None => carried,
            };
            next.push(entry);
        }
        row = next;
    }
    Ok(row[k].clone())
}

/// Truncated expansion of the infinite product `1 / (q^start; q)_inf`:
/// the coefficient of `q^n` counts partitions of `n` with all parts
/// `>= start`. Factors beyond the truncation degree contribute nothing.
pub fn q_pochhammer_inv(start: usize, max_degree: usize) -> Result<QSeries, Error> {
    if start == 0 {
        return Err(Error::PochhammerStartZero);
    }
    let mut coeffs = vec![0i64; max_degree + 1];
    coeffs[0] = 1;
    for part in start..=max_degree {
        for d in part..=max_degree {
            coeffs[d] += coeffs[d - part];
        }
    }
    Ok(QSeries { coeffs })
}

/// Truncated expansion of `1 / ((1-q)(1-q^2)...(1-q^bound))`: the
/// coefficient of `q^n` counts partitions of `n` with all parts
/// `<= bound`.
pub fn q_pochhammer_finite_inv(bound: usize, max_degree: usize) -> QSeries {
    let mut coeffs = vec![0i64; max_degree + 1];
    coeffs[0] = 1;
    for part in 1..=bound.min(max_degree) {
        for d in part..=max_degree {
            coeffs[d] += coeffs[d - part];
        }
    }
    QSeries { coeffs }
}

/// Weight generating series of the pointed-partition class with the given
/// `(arm, leg, coarm)` statistics: the coefficient of `q^n` equals the
/// number of pointed partitions of `n` in that class. The lowest nonzero
/// degree is `(coarm + 1) * (leg + 1) + arm`.
pub fn pointed_class_gf(arm: usize, leg: usize, coarm: usize, max_degree: usize) -> QSeries {
    let tail = q_pochhammer_inv(arm + 1, max_degree).expect("start is at least 1");
    let reduced_box = q_binomial(coarm + arm, arm, max_degree).expect("lower index within range");
    let leg_box = q_binomial(leg + arm, arm, max_degree).expect("lower index within range");
    let offset = (coarm + 1) * (leg + 1) + arm;
    tail.mul(&reduced_box)
        .and_then(|s| s.mul(&leg_box))
        .expect("factors share the truncation degree")
        .shifted(offset)
}

/// Difference between the two sides of the pealing count identity
///
/// ```text
/// 1/(q;q)_cols = qbin(cols + rows, rows) * sum_{t >= 0} q^{t (rows + 1)} qbin(cols - 1 + t, t)
/// ```
///
/// where `t` counts removed strips. The contract is that the result is
/// identically zero. Requires `box_cols >= 1`.
pub fn pealing_identity_gap(box_rows: usize, box_cols: usize, max_degree: usize) -> QSeries {
    assert!(box_cols >= 1, "the identity needs at least one column");
    let lhs = q_pochhammer_finite_inv(box_cols, max_degree);

    let mut strip_sum = QSeries::zero(max_degree);
    let mut t = 0;
    while t * (box_rows + 1) <= max_degree {
        let term = q_binomial(box_cols - 1 + t, t, max_degree)
            .expect("lower index within range")
            .shifted(t * (box_rows + 1));
        strip_sum = strip_sum.add(&term).expect("shared truncation degree");
        t += 1;
    }
    let rhs = q_binomial(box_cols + box_rows, box_rows, max_degree)
        .expect("lower index within range")
        .mul(&strip_sum)
        .expect("shared truncation degree");
    lhs.sub(&rhs).expect("shared truncation degree")
}
