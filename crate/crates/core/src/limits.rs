//! Capacity limits and the numeric tolerances used throughout the crate.

/// Default cap on the order of any constructed graph. Product constructions
/// (Kronecker, shadow, splitting, iterated duplicate) grow fast; failing
/// early beats a multi-gigabyte adjacency matrix.
pub const DEFAULT_MAX_ORDER: usize = 4096;

/// Exact characteristic polynomials (Faddeev-LeVerrier over big integers)
/// are accepted up to this order; coefficient growth makes larger instances
/// impractical.
pub const CHARPOLY_MAX_ORDER: usize = 150;

/// Default cap on exact isomorphism search.
pub const ISO_MAX_ORDER: usize = 12;

/// Backtrack-node budget for the isomorphism search.
pub const ISO_NODE_BUDGET: u64 = 10_000_000;

/// Relative tolerance for energy comparisons on the numeric path.
pub const REL_ENERGY_TOL: f64 = 1e-8;

/// Tolerance for matching individual eigenvalues between two routes.
pub const EIGEN_MATCH_TOL: f64 = 1e-8;

/// Absolute gap below which neighbouring eigenvalues are clustered into one
/// multiplicity group.
pub const GROUP_GAP: f64 = 1e-7;

/// Screen distance from the nearest integer below which an eigenvalue is
/// treated as an integer *candidate*. Candidates are always confirmed with
/// exact arithmetic; the screen only prunes hopeless cases.
pub const INTEGER_SCREEN: f64 = 1e-6;

/// Per-vertex factor for the Jacobi off-diagonal convergence target.
pub const JACOBI_OFF_PER_VERTEX: f64 = 1e-12;

/// Per-vertex factor for Newton power-sum cross checks.
pub const NEWTON_PER_VERTEX: f64 = 1e-6;

/// Maximum order at which a graph construction is allowed, honouring the
/// `GEL_MAX_ORDER` environment override.
pub fn max_order() -> usize {
    max_order_from(std::env::var("GEL_MAX_ORDER").ok().as_deref())
}

/// Pure helper behind [`max_order`]; invalid or missing values fall back to
/// the default.
pub fn max_order_from(raw: Option<&str>) -> usize {
    raw.and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(DEFAULT_MAX_ORDER)
}

/// Relative equality at tolerance `tol`, with an absolute floor of `tol`
/// around zero.
pub fn rel_eq(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * 1f64.max(a.abs()).max(b.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn max_order_parsing() {
        assert_eq!(max_order_from(None), DEFAULT_MAX_ORDER);
        assert_eq!(max_order_from(Some("512")), 512);
        assert_eq!(max_order_from(Some(" 7 ")), 7);
        assert_eq!(max_order_from(Some("0")), DEFAULT_MAX_ORDER);
        assert_eq!(max_order_from(Some("nope")), DEFAULT_MAX_ORDER);
    }

    #[test]
    fn rel_eq_scales() {
        assert!(rel_eq(1e6, 1e6 + 5e-3, 1e-8));
        assert!(!rel_eq(1.0, 1.0 + 1e-6, 1e-8));
        assert!(rel_eq(0.0, 1e-9, 1e-8));
    }
}
