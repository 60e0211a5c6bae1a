//! Exact truncated series in q with integer colour exponents.
//!
//! A series holds coefficients indexed by (q-degree ≤ N, exponent vector in
//! Z^n); coefficients are arbitrary-precision integers and every operation
//! is exact on the retained degrees, with degrees above N discarded.
//! The truncation N and the exponent width n are hard parameters of each
//! value: mixing series with different parameters is a caller bug and
//! panics rather than silently re-truncating.
//!
//! Also here: q-Pochhammer expansions (q^j; q^modulus)_∞ and their
//! inverses, and 1/(q;q)_∞ whose coefficients are the partition numbers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::colour::ColourMonomial;

/// A truncated multivariate series: exact on q-degrees 0..=truncation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    truncation: u32,
    colours: usize,
    terms: BTreeMap<(u32, ColourMonomial), BigInt>,
}

impl TruncatedSeries {
    pub fn zero(colours: usize, truncation: u32) -> Self {
        TruncatedSeries { truncation, colours, terms: BTreeMap::new() }
    }

    pub fn one(colours: usize, truncation: u32) -> Self {
        let mut s = Self::zero(colours, truncation);
        s.add_term(0, ColourMonomial::zero(colours), BigInt::one());
        s
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn colours(&self) -> usize {
        self.colours
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff · q^degree · monomial`; degrees above the truncation are dropped.
    pub fn add_term(&mut self, degree: u32, monomial: ColourMonomial, coeff: BigInt) {
        assert_eq!(monomial.0.len(), self.colours, "monomial width mismatch");
        if degree > self.truncation || coeff.is_zero() {
            return;
        }
        let key = (degree, monomial);
        if let Some(v) = self.terms.get_mut(&key) {
            *v += coeff;
            if v.is_zero() {
                self.terms.remove(&key);
            }
        } else {
            self.terms.insert(key, coeff);
        }
    }

    pub fn coeff(&self, degree: u32, monomial: &ColourMonomial) -> BigInt {
        self.terms.get(&(degree, monomial.clone())).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, ColourMonomial), &BigInt)> {
        self.terms.iter()
    }

    /// Sum of all coefficients at a given q-degree (colour variables set to 1).
    pub fn degree_total(&self, degree: u32) -> BigInt {
        self.terms
            .iter()
            .filter(|((d, _), _)| *d == degree)
            .map(|(_, c)| c.clone())
            .sum()
    }

    fn assert_compatible(&self, other: &TruncatedSeries) {
        assert_eq!(self.truncation, other.truncation, "mismatched series truncations");
        assert_eq!(self.colours, other.colours, "mismatched colour widths");
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        self.assert_compatible(other);
        let mut out = self.clone();
        for ((d, m), c) in &other.terms {
            out.add_term(*d, m.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        self.assert_compatible(other);
        let mut out = TruncatedSeries::zero(self.colours, self.truncation);
        for ((d1, m1), c1) in &self.terms {
            for ((d2, m2), c2) in &other.terms {
                let d = d1 + d2;
                if d > self.truncation {
                    continue;
                }
                out.add_term(d, m1.clone().sum(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scalar_mul(&self, k: &BigInt) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(self.colours, self.truncation);
        for ((d, m), c) in &self.terms {
            out.add_term(*d, m.clone(), c * k);
        }
        out
    }

    /// Multiplies in place by (1 − q^e) for e ≥ 1.
    fn mul_one_minus_q(&mut self, e: u32) {
        assert!(e >= 1);
        let snapshot: Vec<((u32, ColourMonomial), BigInt)> =
            self.terms.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        for ((d, m), c) in snapshot {
            if d + e <= self.truncation {
                self.add_term(d + e, m, -c);
            }
        }
    }

    fn terms_at_degree(&self, degree: u32) -> Vec<(ColourMonomial, BigInt)> {
        // an empty vector is the Ord-minimum among monomials of any width
        self.terms
            .range((degree, ColourMonomial(Vec::new()))..)
            .take_while(|((d, _), _)| *d == degree)
            .map(|((_, m), c)| (m.clone(), c.clone()))
            .collect()
    }

    /// Multiplies in place by 1/(1 − q^e) for e ≥ 1 (geometric resummation,
    /// exact on the retained degrees).
    fn mul_inv_one_minus_q(&mut self, e: u32) {
        assert!(e >= 1);
        // ascending degree sweep: coeff[d] += coeff[d−e] uses already-updated values
        for d in e..=self.truncation {
            for (m, c) in self.terms_at_degree(d - e) {
                self.add_term(d, m, c);
            }
        }
    }

    /// Serialises as the interchange JSON: an array of
    /// `{"q": d, "colour": [e_1, …, e_n], "coeff": "<integer>"}` records
    /// sorted by (q, colour lexicographic).
    pub fn to_json(&self) -> serde_json::Value {
        let arr: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|((d, m), c)| {
                serde_json::json!({
                    "q": d,
                    "colour": m.0,
                    "coeff": c.to_string(),
                })
            })
            .collect();
        serde_json::Value::Array(arr)
    }

    /// First degree at which the two series differ, with both coefficient
    /// sums at that degree; `None` when equal up to the shared truncation.
    pub fn first_mismatch(&self, other: &TruncatedSeries) -> Option<(u32, BigInt, BigInt)> {
        self.assert_compatible(other);
        for d in 0..=self.truncation {
            let keys: std::collections::BTreeSet<&ColourMonomial> = self
                .terms
                .iter()
                .chain(other.terms.iter())
                .filter(|((dd, _), _)| *dd == d)
                .map(|((_, m), _)| m)
                .collect();
            for m in keys {
                let a = self.coeff(d, m);
                let b = other.coeff(d, m);
                if a != b {
                    return Some((d, a, b));
                }
            }
        }
        None
    }
}

/// (q^j; q^modulus)_∞ = ∏_{t ≥ 0} (1 − q^{j + t·modulus}), truncated at `n`.
pub fn pochhammer(colours: usize, j: u32, modulus: u32, n: u32) -> TruncatedSeries {
    assert!(j >= 1 && modulus >= 1);
    let mut s = TruncatedSeries::one(colours, n);
    let mut e = j;
    while e <= n {
        s.mul_one_minus_q(e);
        e += modulus;
    }
    s
}

/// 1/(q^j; q^modulus)_∞ truncated at `n`.
pub fn pochhammer_inverse(colours: usize, j: u32, modulus: u32, n: u32) -> TruncatedSeries {
    assert!(j >= 1 && modulus >= 1);
    let mut s = TruncatedSeries::one(colours, n);
    let mut e = j;
    while e <= n {
        s.mul_inv_one_minus_q(e);
        e += modulus;
    }
    s
}

/// 1/(q;q)_∞: the generating function of the partition numbers.
pub fn inverse_euler(colours: usize, n: u32) -> TruncatedSeries {
    pochhammer_inverse(colours, 1, 1, n)
}
