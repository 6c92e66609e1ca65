//! Sparse multivariate polynomials with arbitrary-precision nonnegative
//! integer coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// An exponent vector of fixed arity.
pub type Exponents = Vec<u32>;

/// A polynomial in a fixed number of variables; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparsePolynomial {
    arity: usize,
    terms: BTreeMap<Exponents, BigUint>,
}

impl SparsePolynomial {
    pub fn zero(arity: usize) -> Self {
        SparsePolynomial { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(vec![0; arity], BigUint::one());
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> &BTreeMap<Exponents, BigUint> {
        &self.terms
    }

    pub fn coefficient(&self, e: &[u32]) -> BigUint {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// Adds `c · x^e`.
    pub fn add_term(&mut self, e: Exponents, c: BigUint) {
        assert_eq!(e.len(), self.arity, "exponent arity");
        if c.is_zero() {
            return;
        }
        *self.terms.entry(e).or_default() += c;
    }

    pub fn add_assign(&mut self, other: &SparsePolynomial) {
        assert_eq!(self.arity, other.arity, "polynomial arity");
        for (e, c) in &other.terms {
            *self.terms.entry(e.clone()).or_default() += c;
        }
    }

    pub fn mul(&self, other: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.arity, other.arity, "polynomial arity");
        let mut out = Self::zero(self.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// The product `f(x) g(y)` in the concatenated variable set `(x, y)`.
    pub fn tensor(&self, other: &SparsePolynomial) -> SparsePolynomial {
        let mut out = Self::zero(self.arity + other.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().chain(e2).copied().collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(&[u32]) -> bool) -> SparsePolynomial {
        SparsePolynomial {
            arity: self.arity,
            terms: self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    /// Keeps the terms of total degree at most `d`.
    pub fn truncate(&self, d: u32) -> SparsePolynomial {
        self.filter(|e| e.iter().sum::<u32>() <= d)
    }

    /// Sum of all coefficients.
    pub fn eval_ones(&self) -> BigUint {
        self.terms.values().sum()
    }

    /// Coefficientwise differences `(exponents, self coeff, other coeff)`.
    pub fn mismatches(&self, other: &SparsePolynomial) -> Vec<(Exponents, BigUint, BigUint)> {
        let keys: std::collections::BTreeSet<&Exponents> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter()
            .filter_map(|e| {
                let (a, b) = (self.coefficient(e), other.coefficient(e));
                (a != b).then(|| (e.clone(), a, b))
            })
            .collect()
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, p) })
                .collect();
            match (c.is_one(), vars.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (true, false) => write!(f, "{}", vars.join("*"))?,
                (false, false) => write!(f, "{c}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}
