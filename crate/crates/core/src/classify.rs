//! Energy taxonomy of single graphs and certification of equienergetic
//! pairs.
//!
//! Equality of an energy with an integer target (the order, or `2(p-1)`)
//! is decided with exact arithmetic whenever the graph is integral and small
//! enough for the exact machinery; otherwise the relative tolerance applies
//! and the report is annotated as numeric.

use serde::Serialize;
use std::cmp::Ordering;

use crate::error::Result;
use crate::graph::Graph;
use crate::iso::is_isomorphic;
use crate::limits::{ISO_MAX_ORDER, REL_ENERGY_TOL};
use crate::spectral::{
    cospectral, integral_energy, spectrum, try_exact_spectrum, ExactSpectrum, Spectrum,
};

/// Energy classification of a single graph.
#[derive(Debug, Clone, Serialize)]
pub struct EnergyReport {
    pub order: usize,
    pub energy: f64,
    /// Exact integer energy, present when the graph is integral.
    pub energy_exact: Option<i64>,
    pub hypoenergetic: bool,
    pub orderenergetic: bool,
    pub nonhypoenergetic: bool,
    pub hyperenergetic: bool,
    /// `None` when integrality is undecidable at this order (beyond the
    /// exact-arithmetic cap with an integer-like spectrum).
    pub integral: Option<bool>,
    /// False when some *equality* verdict above was settled by the numeric
    /// tolerance instead of exact integer arithmetic. Strict inequalities
    /// with a clear numeric gap do not count against this: the eigensolver
    /// residual sits far below the tolerance.
    pub exact_arithmetic: bool,
}

impl EnergyReport {
    pub fn flag_names(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if self.hypoenergetic {
            v.push("hypoenergetic");
        }
        if self.orderenergetic {
            v.push("orderenergetic");
        }
        if self.nonhypoenergetic {
            v.push("nonhypoenergetic");
        }
        if self.hyperenergetic {
            v.push("hyperenergetic");
        }
        if self.integral == Some(true) {
            v.push("integral");
        }
        v
    }

    /// One CSV row: order, energy, then the flag set.
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.order,
            self.energy,
            self.hypoenergetic,
            self.orderenergetic,
            self.hyperenergetic,
            match self.integral {
                Some(b) => b.to_string(),
                None => "undecided".to_string(),
            },
            if self.exact_arithmetic { "exact" } else { "numeric" },
        )
    }
}

/// How the energy of a graph compares to an integer target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct EnergyVsTarget {
    pub ordering: Ordering,
    pub exact: bool,
}

/// Compare a numeric energy against an integer target, escalating to exact
/// arithmetic only when the numeric gap is inside the tolerance window.
/// A clear numeric gap is already conclusive: the eigensolver residual sits
/// far below the tolerance.
pub(crate) fn energy_vs_target(
    g: &Graph,
    spec: &Spectrum,
    exact: Option<&ExactSpectrum>,
    target: i64,
) -> Result<EnergyVsTarget> {
    let eps = spec.energy();
    let t = target as f64;
    if !crate::limits::rel_eq(eps, t, REL_ENERGY_TOL) {
        return Ok(EnergyVsTarget {
            ordering: if eps < t { Ordering::Less } else { Ordering::Greater },
            exact: false,
        });
    }
    let owned;
    let exact = match exact {
        Some(e) => Some(e),
        None => {
            owned = try_exact_spectrum(g, spec)?;
            owned.as_ref()
        }
    };
    match exact {
        Some(ExactSpectrum::Integral(roots)) => Ok(EnergyVsTarget {
            ordering: integral_energy(roots).cmp(&target),
            exact: true,
        }),
        // non-integral or undecided: the tolerance verdict stands, annotated
        _ => Ok(EnergyVsTarget {
            ordering: Ordering::Equal,
            exact: false,
        }),
    }
}

/// Full energy classification.
pub fn classify_energy(g: &Graph) -> Result<EnergyReport> {
    let spec = spectrum(g)?;
    let exact = try_exact_spectrum(g, &spec)?;
    classify_with(g, &spec, exact)
}

pub(crate) fn classify_with(
    g: &Graph,
    spec: &Spectrum,
    exact: Option<ExactSpectrum>,
) -> Result<EnergyReport> {
    let p = g.order();
    let vs_order = energy_vs_target(g, spec, exact.as_ref(), p as i64)?;
    let vs_complete = energy_vs_target(g, spec, exact.as_ref(), 2 * (p as i64 - 1))?;
    let (integral, energy_exact) = match &exact {
        Some(ExactSpectrum::Integral(roots)) => (Some(true), Some(integral_energy(roots))),
        Some(ExactSpectrum::NonIntegral) => (Some(false), None),
        None => (None, None),
    };
    let numeric_tie = |v: &EnergyVsTarget| v.ordering == Ordering::Equal && !v.exact;
    Ok(EnergyReport {
        order: p,
        energy: spec.energy(),
        energy_exact,
        hypoenergetic: vs_order.ordering == Ordering::Less,
        orderenergetic: vs_order.ordering == Ordering::Equal,
        nonhypoenergetic: vs_order.ordering != Ordering::Less,
        hyperenergetic: vs_complete.ordering == Ordering::Greater,
        integral,
        exact_arithmetic: !numeric_tie(&vs_order) && !numeric_tie(&vs_complete),
    })
}

/// Verdict for a pair of graphs under the equienergetic taxonomy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairVerdict {
    Equienergetic,
    Equiorderenergetic,
    Equihypoenergetic,
    NotEquienergetic,
    UndecidedIsomorphism,
}

/// Evidence collected when certifying a pair.
#[derive(Debug, Clone, Serialize)]
pub struct PairCertificate {
    pub same_order: bool,
    pub energies: (f64, f64),
    pub energies_exact: Option<(i64, i64)>,
    pub equal_energy: bool,
    pub cospectral: bool,
    /// Present only when decidable at the configured size (or implied by
    /// non-cospectrality).
    pub isomorphic: Option<bool>,
    pub verdict: PairVerdict,
    /// True when the energy-equality comparison ran on exact integers.
    pub exact_arithmetic: bool,
}

impl PairCertificate {
    /// True for any of the equienergetic verdicts (the refined ones imply
    /// the plain one).
    pub fn is_equienergetic(&self) -> bool {
        matches!(
            self.verdict,
            PairVerdict::Equienergetic
                | PairVerdict::Equiorderenergetic
                | PairVerdict::Equihypoenergetic
        )
    }
}

/// Certify a pair: order equality, energy equality (exact when both sides
/// are integral), exact cospectrality, and - where needed and feasible -
/// isomorphism. Non-cospectral pairs are non-isomorphic without any search.
pub fn certify_pair(g: &Graph, h: &Graph) -> Result<PairCertificate> {
    let rg = classify_energy(g)?;
    let rh = classify_energy(h)?;
    let same_order = rg.order == rh.order;

    let energies_exact = match (rg.energy_exact, rh.energy_exact) {
        (Some(a), Some(b)) => Some((a, b)),
        _ => None,
    };
    let (equal_energy, energy_exactly) = match energies_exact {
        Some((a, b)) => (a == b, true),
        None => (
            crate::limits::rel_eq(rg.energy, rh.energy, REL_ENERGY_TOL),
            false,
        ),
    };

    let mut cert = PairCertificate {
        same_order,
        energies: (rg.energy, rh.energy),
        energies_exact,
        equal_energy,
        cospectral: false,
        isomorphic: None,
        verdict: PairVerdict::NotEquienergetic,
        exact_arithmetic: energy_exactly,
    };

    if !same_order || !equal_energy {
        return Ok(cert);
    }

    cert.cospectral = cospectral(g, h)?;
    if !cert.cospectral {
        // different spectra already certify non-isomorphism
        cert.isomorphic = Some(false);
    } else if g.order() <= ISO_MAX_ORDER {
        match is_isomorphic(g, h) {
            Ok(iso) => cert.isomorphic = Some(iso),
            Err(_) => {
                cert.verdict = PairVerdict::UndecidedIsomorphism;
                return Ok(cert);
            }
        }
    } else {
        cert.verdict = PairVerdict::UndecidedIsomorphism;
        return Ok(cert);
    }

    cert.verdict = match cert.isomorphic {
        Some(false) => {
            if rg.orderenergetic && rh.orderenergetic {
                PairVerdict::Equiorderenergetic
            } else if rg.hypoenergetic && rh.hypoenergetic {
                PairVerdict::Equihypoenergetic
            } else {
                PairVerdict::Equienergetic
            }
        }
        // isomorphic graphs are excluded by the definition
        _ => PairVerdict::NotEquienergetic,
    };
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops;

    #[test]
    fn balanced_bipartite_is_orderenergetic() {
        let r = classify_energy(&Graph::complete_bipartite(3, 3).unwrap()).unwrap();
        assert!(r.orderenergetic && !r.hypoenergetic && r.nonhypoenergetic);
        assert!(!r.hyperenergetic);
        assert_eq!(r.integral, Some(true));
        assert_eq!(r.energy_exact, Some(6));
        assert!(r.exact_arithmetic);
    }

    #[test]
    fn star_is_hypoenergetic() {
        let r = classify_energy(&Graph::complete_bipartite(1, 3).unwrap()).unwrap();
        assert!(r.hypoenergetic && !r.orderenergetic && !r.nonhypoenergetic);
        assert_eq!(r.integral, Some(false));
        assert!((r.energy - 2.0 * 3f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn complete_graph_boundary() {
        // K4 has energy exactly 2(p-1): nonhypoenergetic but not hyper
        let r = classify_energy(&Graph::complete(4).unwrap()).unwrap();
        assert!(r.nonhypoenergetic && !r.hyperenergetic && !r.orderenergetic);
        assert_eq!(r.energy_exact, Some(6));
    }

    #[test]
    fn triangular_graph_is_hyperenergetic() {
        // vertices = 2-subsets of {0..4}, adjacent when the subsets meet;
        // spectrum {6, 1^4, -2^5}, energy 20 > 2(10-1)
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|a| ((a + 1)..5).map(move |b| (a, b)))
            .collect();
        let mut edges = Vec::new();
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
                if a == c || a == d || b == c || b == d {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(10, &edges, Some("T(5)".into())).unwrap();
        let r = classify_energy(&g).unwrap();
        assert!(r.hyperenergetic && r.nonhypoenergetic);
        assert_eq!(r.energy_exact, Some(20));
    }

    #[test]
    fn flags_are_mutually_consistent() {
        for g in [
            Graph::complete(5).unwrap(),
            Graph::cycle(7).unwrap(),
            Graph::complete_bipartite(2, 5).unwrap(),
            Graph::empty(4).unwrap(),
            Graph::canonical_superpath(3).unwrap(),
        ] {
            let r = classify_energy(&g).unwrap();
            let trichotomy = [
                r.hypoenergetic,
                r.orderenergetic,
                !r.hypoenergetic && !r.orderenergetic,
            ];
            assert_eq!(trichotomy.iter().filter(|&&b| b).count(), 1);
            assert_eq!(r.nonhypoenergetic, !r.hypoenergetic);
            if r.hyperenergetic {
                assert!(r.nonhypoenergetic);
            }
        }
    }

    #[test]
    fn duplicate_vs_shadow_pair() {
        // D(K2) and D_2(K2): energies 4 and 4, different spectra
        let k2 = Graph::complete(2).unwrap();
        let a = ops::duplicate(&k2).unwrap();
        let b = ops::shadow(&k2, 2).unwrap();
        let cert = certify_pair(&a, &b).unwrap();
        assert!(cert.is_equienergetic());
        assert!(!cert.cospectral);
        assert_eq!(cert.isomorphic, Some(false));
        assert_eq!(cert.energies_exact, Some((4, 4)));
        // both are orderenergetic (energy 4 on 4 vertices), so the refined
        // verdict applies
        assert_eq!(cert.verdict, PairVerdict::Equiorderenergetic);
    }

    #[test]
    fn self_pair_is_not_equienergetic() {
        let g = Graph::cycle(4).unwrap();
        let cert = certify_pair(&g, &g).unwrap();
        assert!(!cert.is_equienergetic());
        assert!(cert.cospectral);
        assert_eq!(cert.isomorphic, Some(true));
        assert_eq!(cert.verdict, PairVerdict::NotEquienergetic);
    }

    #[test]
    fn certificates_are_symmetric() {
        let k2 = Graph::complete(2).unwrap();
        let a = ops::duplicate(&k2).unwrap();
        let b = ops::shadow(&k2, 2).unwrap();
        let ab = certify_pair(&a, &b).unwrap();
        let ba = certify_pair(&b, &a).unwrap();
        assert_eq!(ab.verdict, ba.verdict);
        assert_eq!(ab.cospectral, ba.cospectral);
    }

    #[test]
    fn different_orders_never_pair() {
        let cert = certify_pair(
            &Graph::complete(3).unwrap(),
            &Graph::complete(4).unwrap(),
        )
        .unwrap();
        assert!(!cert.same_order);
        assert_eq!(cert.verdict, PairVerdict::NotEquienergetic);
    }

    #[test]
    fn cospectral_pair_beyond_cap_is_undecided() {
        // two copies of the same order-13 graph: cospectral, above the
        // isomorphism cap
        let g = Graph::cycle(13).unwrap();
        let h = Graph::cycle(13).unwrap();
        let cert = certify_pair(&g, &h).unwrap();
        assert_eq!(cert.verdict, PairVerdict::UndecidedIsomorphism);
    }
}
