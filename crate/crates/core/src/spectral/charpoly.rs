//! Exact characteristic polynomials of adjacency matrices.
//!
//! Coefficients are computed with the Faddeev-LeVerrier recurrence carried
//! out in arbitrary-precision integers; every division in the recurrence is
//! exact. Integrality of a spectrum is decided by synthetic division against
//! integer root candidates, never by rounding alone.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::CHARPOLY_MAX_ORDER;

/// Monic integer polynomial `det(xI - A)`, coefficients stored by ascending
/// degree (`coeffs[k]` multiplies `x^k`, `coeffs[p] = 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty() && coeffs.last().unwrap().is_one());
        CharPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Value at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Synthetic division by `(x - r)`: `Some(quotient)` when the remainder
    /// is exactly zero.
    pub fn divide_by_root(&self, r: i64) -> Option<CharPoly> {
        let r = BigInt::from(r);
        let n = self.degree();
        if n == 0 {
            return None;
        }
        let mut quotient = vec![BigInt::zero(); n];
        let mut carry = BigInt::zero();
        for k in (0..=n).rev() {
            let b = &self.coeffs[k] + &carry;
            if k == 0 {
                if !b.is_zero() {
                    return None;
                }
            } else {
                carry = &b * &r;
                quotient[k - 1] = b;
            }
        }
        Some(CharPoly { coeffs: quotient })
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "x")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for CharPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        // decimal strings, ascending degree, to avoid precision loss
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CharPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        let coeffs = strings
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if coeffs.is_empty() || !coeffs.last().unwrap().is_one() {
            return Err(serde::de::Error::custom("polynomial must be monic"));
        }
        Ok(CharPoly { coeffs })
    }
}

/// Exact characteristic polynomial of the adjacency matrix via
/// Faddeev-LeVerrier.
pub fn char_poly(g: &Graph) -> Result<CharPoly> {
    let n = g.order();
    if n > CHARPOLY_MAX_ORDER {
        return Err(Error::CharPolyCapacity {
            order: n,
            max: CHARPOLY_MAX_ORDER,
        });
    }
    let a: Vec<BigInt> = g.adjacency().iter().map(|&v| BigInt::from(v)).collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();

    // N_1 = A, c_{n-1} = -tr(N_1); then N_k = A (N_{k-1} + c_{n-k+1} I),
    // c_{n-k} = -tr(N_k)/k, the division being exact.
    let mut nmat = a.clone();
    coeffs[n - 1] = -trace(&nmat, n);
    for k in 2..=n {
        for i in 0..n {
            let c = coeffs[n - k + 1].clone();
            nmat[i * n + i] += c;
        }
        nmat = mul(&a, &nmat, n);
        let t = -trace(&nmat, n);
        let k_big = BigInt::from(k);
        debug_assert!((&t % &k_big).is_zero(), "Faddeev-LeVerrier division must be exact");
        coeffs[n - k] = t / k_big;
    }
    Ok(CharPoly { coeffs })
}

fn trace(m: &[BigInt], n: usize) -> BigInt {
    (0..n).map(|i| m[i * n + i].clone()).sum()
}

fn mul(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            if a[i * n + k].is_zero() {
                continue;
            }
            let aik = &a[i * n + k];
            for j in 0..n {
                if !b[k * n + j].is_zero() {
                    out[i * n + j] += aik * &b[k * n + j];
                }
            }
        }
    }
    out
}

/// Multiply two integer polynomials (ascending coefficients).
pub(crate) fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// Outcome of the exact integral-spectrum search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactSpectrum {
    /// All eigenvalues are integers; `(value, multiplicity)` sorted by
    /// descending value, multiplicities summing to the order.
    Integral(Vec<(i64, usize)>),
    /// Proven non-integral: some synthetic division left a remainder.
    NonIntegral,
}

/// Decide integrality exactly: round each numeric eigenvalue to its nearest
/// integer and synthetically divide the characteristic polynomial by the
/// resulting candidates. Integral iff the full degree is exhausted with zero
/// remainders.
pub fn exact_integer_spectrum(g: &Graph, numeric: &[f64]) -> Result<ExactSpectrum> {
    let poly = char_poly(g)?;
    Ok(exact_integer_spectrum_of(&poly, numeric))
}

pub(crate) fn exact_integer_spectrum_of(poly: &CharPoly, numeric: &[f64]) -> ExactSpectrum {
    let mut remaining = poly.clone();
    let mut roots: Vec<i64> = Vec::with_capacity(numeric.len());
    for &lambda in numeric {
        let r = lambda.round() as i64;
        match remaining.divide_by_root(r) {
            Some(q) => {
                roots.push(r);
                remaining = q;
            }
            None => return ExactSpectrum::NonIntegral,
        }
    }
    debug_assert_eq!(remaining.degree(), 0);
    roots.sort_unstable_by(|a, b| b.cmp(a));
    let mut grouped: Vec<(i64, usize)> = Vec::new();
    for r in roots {
        match grouped.last_mut() {
            Some((v, m)) if *v == r => *m += 1,
            _ => grouped.push((r, 1)),
        }
    }
    ExactSpectrum::Integral(grouped)
}

/// Exact energy of an integral spectrum: the sum of `|value| * multiplicity`.
pub fn integral_energy(spectrum: &[(i64, usize)]) -> i64 {
    spectrum
        .iter()
        .map(|&(v, m)| v.unsigned_abs() as i64 * m as i64)
        .sum()
}

/// Equal characteristic polynomials (and hence equal spectra), decided with
/// exact coefficients.
pub fn cospectral(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() {
        return Ok(false);
    }
    Ok(char_poly(g)? == char_poly(h)?)
}
