//! Numeric spectra, graph energy, and exact characteristic polynomials.

mod charpoly;
mod jacobi;

pub use charpoly::{
    char_poly, cospectral, exact_integer_spectrum, integral_energy, CharPoly, ExactSpectrum,
};
pub(crate) use charpoly::{exact_integer_spectrum_of, poly_mul};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::{CHARPOLY_MAX_ORDER, GROUP_GAP, INTEGER_SCREEN};

/// All eigenvalues of an adjacency matrix, sorted descending.
#[derive(Debug, Clone, Serialize)]
pub struct Spectrum {
    values: Vec<f64>,
    grouped: Vec<(f64, usize)>,
}

impl Spectrum {
    fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
        let grouped = cluster(&values, GROUP_GAP);
        Spectrum { values, grouped }
    }

    /// Regroup with a caller-chosen gap instead of the default.
    pub fn grouped_with_gap(&self, gap: f64) -> Vec<(f64, usize)> {
        cluster(&self.values, gap)
    }

    /// Eigenvalues with repetition, descending.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `(value, multiplicity)` groups clustered at the documented gap.
    pub fn grouped(&self) -> &[(f64, usize)] {
        &self.grouped
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max(&self) -> f64 {
        self.values[0]
    }

    pub fn min(&self) -> f64 {
        *self.values.last().unwrap()
    }

    /// Sum of absolute eigenvalues.
    pub fn energy(&self) -> f64 {
        self.values.iter().map(|v| v.abs()).sum()
    }

    /// True when every eigenvalue sits within the integer screen distance of
    /// an integer. A positive screen is only a candidate signal; callers
    /// confirm with exact arithmetic.
    pub fn integer_like(&self) -> bool {
        self.values
            .iter()
            .all(|v| (v - v.round()).abs() <= INTEGER_SCREEN)
    }
}

fn cluster(sorted_desc: &[f64], gap: f64) -> Vec<(f64, usize)> {
    let mut grouped: Vec<(f64, usize)> = Vec::new();
    for &v in sorted_desc {
        match grouped.last_mut() {
            Some((rep, m)) if (*rep - v).abs() <= gap => *m += 1,
            _ => grouped.push((v, 1)),
        }
    }
    grouped
}

/// Numeric spectrum of `g` via cyclic Jacobi, with trace and edge-count
/// consistency checks on the result.
pub fn spectrum(g: &Graph) -> Result<Spectrum> {
    let n = g.order();
    let a: Vec<f64> = g.adjacency().iter().map(|&v| v as f64).collect();
    let values = jacobi::symmetric_eigenvalues(a, n)?;
    let spec = Spectrum::new(values);

    let sum: f64 = spec.values().iter().sum();
    let sum_sq: f64 = spec.values().iter().map(|v| v * v).sum();
    let two_q = 2.0 * g.size() as f64;
    if sum.abs() > 1e-8 * n as f64 || (sum_sq - two_q).abs() > 1e-6 * n as f64 {
        return Err(Error::NumericFailure {
            sweeps: 0,
            residual: sum.abs().max((sum_sq - two_q).abs()),
        });
    }
    Ok(spec)
}

/// Graph energy: the sum of the absolute eigenvalues.
pub fn energy(g: &Graph) -> Result<f64> {
    Ok(spectrum(g)?.energy())
}

/// True iff the characteristic polynomial splits over the integers.
pub fn is_integral(g: &Graph) -> Result<bool> {
    let s = spectrum(g)?;
    Ok(matches!(
        exact_integer_spectrum(g, s.values())?,
        ExactSpectrum::Integral(_)
    ))
}

/// Exact integer energy for integral graphs, absent otherwise.
pub fn energy_closed_form(g: &Graph) -> Result<Option<i64>> {
    let s = spectrum(g)?;
    match exact_integer_spectrum(g, s.values())? {
        ExactSpectrum::Integral(roots) => Ok(Some(integral_energy(&roots))),
        ExactSpectrum::NonIntegral => Ok(None),
    }
}

/// Integrality analysis driven by a precomputed numeric spectrum: `None`
/// when the order is beyond the exact-arithmetic cap and the screen cannot
/// rule integrality out.
pub(crate) fn try_exact_spectrum(g: &Graph, spec: &Spectrum) -> Result<Option<ExactSpectrum>> {
    if g.order() <= CHARPOLY_MAX_ORDER {
        return Ok(Some(exact_integer_spectrum(g, spec.values())?));
    }
    // Beyond the cap, a failed integer screen is still conclusive: the
    // Jacobi residual is orders of magnitude below the screen distance.
    if !spec.integer_like() {
        return Ok(Some(ExactSpectrum::NonIntegral));
    }
    Ok(None)
}
