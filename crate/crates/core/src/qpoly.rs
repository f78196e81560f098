//! Polynomials in `q` with exact integer coefficients, and the Gaussian
//! binomial.

use std::fmt;
use std::ops::{Add, Mul};

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::Error;

/// Dense polynomial in one variable `q`; `coeffs[k]` is the coefficient of
/// `q^k`.  No trailing zeros are stored, so the zero polynomial is empty.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct QPoly {
    coeffs: Vec<i64>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly { coeffs: vec![1] }
    }

    /// `c * q^k`.
    pub fn monomial(k: usize, c: i64) -> Self {
        if c == 0 {
            return QPoly::zero();
        }
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        QPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        let mut p = QPoly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add_monomial(&mut self, k: usize, c: i64) {
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, 0);
        }
        self.coeffs[k] += c;
        self.normalize();
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let mut coeffs = vec![0; self.coeffs.len().max(rhs.coeffs.len())];
        for (k, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeff(k) + rhs.coeff(k);
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

/// Binomial coefficient `C(a, b)` as an exact integer; 0 when `b > a`.
pub fn binomial(a: u64, b: u64) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut r = 1u64;
    for i in 0..b {
        r = r * (a - i) / (i + 1);
    }
    r
}

/// The Gaussian binomial `[a choose b]_q`, computed by the q-Pascal
/// recurrence `[a,b] = [a-1,b-1] + q^b [a-1,b]`.
pub fn q_binomial(a: u32, b: u32) -> Result<QPoly, Error> {
    if b > a {
        return Err(Error::QBinomialRange { a, b });
    }
    // row[j] = [a', j]_q for the current a'
    let mut row = vec![QPoly::one()];
    for ap in 1..=a {
        let width = ap.min(b) as usize;
        let mut next = Vec::with_capacity(width + 1);
        next.push(QPoly::one());
        for j in 1..=width {
            let upper = if j < row.len() { row[j].clone() } else { QPoly::zero() };
            let right = &upper * &QPoly::monomial(j, 1);
            next.push(&row[j - 1] + &right);
        }
        row = next;
    }
    Ok(row[b as usize].clone())
}
