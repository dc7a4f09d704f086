//! Tutte polynomials from the corank–nullity expansion
//! `T(x, y) = Σ_A (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)}`.

use std::fmt;

use serde::Serialize;

use super::matroid::MatroidModel;
use super::{check_size, FrontendError, DEFAULT_MAX_EDGES};
use crate::poly::{binomial, superscript};
use crate::subset::Subset;

/// Integer coefficients `t[i][j]` of `x^i y^j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TuttePolynomial {
    coeffs: Vec<Vec<i128>>,
}

impl TuttePolynomial {
    /// Expands over every subset of `0..n`; cost `2^n` rank calls.
    #[allow(clippy::needless_range_loop)]
    pub fn from_rank(n: usize, rank: impl Fn(Subset) -> usize) -> Self {
        let total = rank(Subset::full(n));
        // shifted[a][b] counts subsets with corank a and nullity b
        let mut shifted = vec![vec![0i128; n + 1]; total + 1];
        for s in Subset::all(n) {
            let r = rank(s);
            shifted[total - r][s.len() - r] += 1;
        }
        let mut coeffs = vec![vec![0i128; n + 1]; total + 1];
        for (a, row) in shifted.iter().enumerate() {
            for (b, &count) in row.iter().enumerate() {
                if count == 0 {
                    continue;
                }
                for i in 0..=a {
                    for j in 0..=b {
                        let sign = if (a - i + b - j) % 2 == 0 { 1 } else { -1 };
                        coeffs[i][j] += sign
                            * count
                            * binomial(a as i64, i as i64)
                            * binomial(b as i64, j as i64);
                    }
                }
            }
        }
        TuttePolynomial { coeffs }
    }

    pub fn coeff(&self, i: usize, j: usize) -> i128 {
        self.coeffs
            .get(i)
            .and_then(|row| row.get(j))
            .copied()
            .unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[Vec<i128>] {
        &self.coeffs
    }

    /// Coefficients of `T(x, 1)` in ascending powers of `x`.
    pub fn x_line(&self) -> Vec<i128> {
        trim(self.coeffs.iter().map(|row| row.iter().sum()).collect())
    }

    /// Coefficients of `T(1, y)` in ascending powers of `y`.
    pub fn y_line(&self) -> Vec<i128> {
        let width = self.coeffs.first().map_or(0, Vec::len);
        trim(
            (0..width)
                .map(|j| self.coeffs.iter().map(|row| row[j]).sum())
                .collect(),
        )
    }

    pub fn eval(&self, x: i128, y: i128) -> i128 {
        let mut total = 0;
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                total += c * x.pow(i as u32) * y.pow(j as u32);
            }
        }
        total
    }
}

fn trim(mut v: Vec<i128>) -> Vec<i128> {
    while v.len() > 1 && v.last() == Some(&0) {
        v.pop();
    }
    v
}

impl fmt::Display for TuttePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            for (j, &c) in self.coeffs[i].iter().enumerate() {
                if c == 0 {
                    continue;
                }
                if !first {
                    f.write_str(if c < 0 { "-" } else { "+" })?;
                } else if c < 0 {
                    f.write_str("-")?;
                }
                first = false;
                let c = c.abs();
                if c != 1 || (i == 0 && j == 0) {
                    write!(f, "{c}")?;
                }
                for (var, e) in [('x', i), ('y', j)] {
                    match e {
                        0 => {}
                        1 => write!(f, "{var}")?,
                        e => write!(f, "{var}{}", superscript(e))?,
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Tutte polynomial of a matroid given by its bases.
pub fn tutte_oracle(m: &MatroidModel) -> Result<TuttePolynomial, FrontendError> {
    check_size("ground set", m.n(), DEFAULT_MAX_EDGES)?;
    let table = m.rank_table();
    Ok(TuttePolynomial::from_rank(m.n(), |s| table[s.index()]))
}
