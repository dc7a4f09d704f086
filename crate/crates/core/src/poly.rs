//! Dense one-variable polynomials with nonnegative integer coefficients.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Variable {
    #[serde(rename = "x")]
    X,
    #[serde(rename = "y")]
    Y,
}

impl Variable {
    pub fn symbol(self) -> char {
        match self {
            Variable::X => 'x',
            Variable::Y => 'y',
        }
    }
}

/// `c_0 + c_1 v + c_2 v^2 + ...`, stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoeffPolynomial {
    coeffs: Vec<u64>,
    var: Variable,
}

impl CoeffPolynomial {
    pub fn new(mut coeffs: Vec<u64>, var: Variable) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        CoeffPolynomial { coeffs, var }
    }

    pub fn one(var: Variable) -> Self {
        CoeffPolynomial::new(vec![1], var)
    }

    pub fn var(&self) -> Variable {
        self.var
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `v^k`; zero past the degree.
    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs == [0]
    }

    /// Value at 1, the sum of the coefficients.
    pub fn eval_one(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// Same coefficients, other variable.
    #[must_use]
    pub fn renamed(&self, var: Variable) -> Self {
        CoeffPolynomial {
            coeffs: self.coeffs.clone(),
            var,
        }
    }

    /// `self + v^shift * other`.
    pub fn add_shifted(&mut self, other: &CoeffPolynomial, shift: usize) {
        let need = other.coeffs.len() + shift;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, 0);
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            self.coeffs[k + shift] += c;
        }
        *self = CoeffPolynomial::new(std::mem::take(&mut self.coeffs), self.var);
    }

    /// Space-separated ascending coefficients, e.g. `1 3 5 6 2`.
    pub fn coefficient_list(&self) -> String {
        self.coeffs
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub(crate) fn superscript(k: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    k.to_string()
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect()
}

impl fmt::Display for CoeffPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let v = self.var.symbol();
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "{v}")?,
                (1, c) => write!(f, "{c}{v}")?,
                (k, 1) => write!(f, "{v}{}", superscript(k))?,
                (k, c) => write!(f, "{c}{v}{}", superscript(k))?,
            }
        }
        Ok(())
    }
}

impl Serialize for CoeffPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("CoeffPolynomial", 3)?;
        st.serialize_field("variable", &self.var())?;
        st.serialize_field("coefficients", self.coeffs())?;
        st.serialize_field("pretty", &self.to_string())?;
        st.end()
    }
}

/// Exact binomial coefficient with `C(a, 0) = 1`, and `C(a, b) = 0` when
/// `b < 0` or `a < b`.
pub fn binomial(a: i64, b: i64) -> i128 {
    if b < 0 {
        return 0;
    }
    if b == 0 {
        return 1;
    }
    if a < b {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: i128 = 1;
    for k in 0..b {
        // acc * (a - k) is divisible by k + 1 at every step
        acc = acc * (a - k) as i128 / (k + 1) as i128;
    }
    acc
}
