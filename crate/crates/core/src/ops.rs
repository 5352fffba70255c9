//! Graph operations: Kronecker product, join, m-splitting, m-shadow,
//! duplicate and iterated duplicate.
//!
//! Vertex orderings are fixed so adjacency matrices are byte-reproducible:
//! Kronecker maps `(u, v)` to `u * |H| + v`; the block operations lay out
//! copy 0 (the original) first, then copies 1..m.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits;
use crate::spectral::{char_poly, CharPoly};

fn check_capacity(requested: usize) -> Result<usize> {
    let max = limits::max_order();
    if requested > max || requested == 0 {
        return Err(Error::Capacity { requested, max });
    }
    Ok(requested)
}

/// Kronecker (tensor) product: `(u1, u2) ~ (v1, v2)` iff `u1 ~ v1` and
/// `u2 ~ v2`; the adjacency matrix is the Kronecker product of the operands'.
pub fn kronecker(g: &Graph, h: &Graph) -> Result<Graph> {
    let (pg, ph) = (g.order(), h.order());
    let p = check_capacity(pg * ph)?;
    let mut adj = vec![0u8; p * p];
    for u1 in 0..pg {
        for v1 in 0..pg {
            if !g.has_edge(u1, v1) {
                continue;
            }
            for u2 in 0..ph {
                let row = (u1 * ph + u2) * p + v1 * ph;
                let hrow = h.row(u2);
                adj[row..row + ph].copy_from_slice(hrow);
            }
        }
    }
    Graph::from_adjacency(
        p,
        adj,
        Some(format!("kron({},{})", g.label_or_order(), h.label_or_order())),
    )
}

/// `K_{r,s} x G`, a convenience wrapper used by the hypoenergetic
/// constructions.
pub fn bipartite_kron(r: usize, s: usize, g: &Graph) -> Result<Graph> {
    kronecker(&Graph::complete_bipartite(r, s)?, g)
}

/// Join: disjoint union plus all cross edges.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let (pg, ph) = (g.order(), h.order());
    let p = check_capacity(pg + ph)?;
    let base = g.disjoint_union(h)?;
    let mut adj = base.adjacency().to_vec();
    for i in 0..pg {
        for j in pg..p {
            adj[i * p + j] = 1;
            adj[j * p + i] = 1;
        }
    }
    Graph::from_adjacency(
        p,
        adj,
        Some(format!("join({},{})", g.label_or_order(), h.label_or_order())),
    )
}

/// Characteristic polynomial of `join(g, h)` for regular operands, computed
/// from the component polynomials:
/// `phi(G1 v G2) = phi1 * phi2 / ((x - r1)(x - r2)) * ((x - r1)(x - r2) - n1 n2)`.
/// This is an independent route to the join spectrum and never builds the
/// join itself.
pub fn join_charpoly_regular(g: &Graph, h: &Graph) -> Result<CharPoly> {
    let r1 = g
        .regular_degree()
        .ok_or_else(|| Error::NotRegular(g.label_or_order()))? as i64;
    let r2 = h
        .regular_degree()
        .ok_or_else(|| Error::NotRegular(h.label_or_order()))? as i64;
    let p1 = char_poly(g)?;
    let p2 = char_poly(h)?;
    // the regular degree is always an eigenvalue, so both divisions are exact
    let q1 = p1
        .divide_by_root(r1)
        .expect("regular degree is an eigenvalue");
    let q2 = p2
        .divide_by_root(r2)
        .expect("regular degree is an eigenvalue");
    // (x - r1)(x - r2) - n1 n2, ascending coefficients
    let n1n2 = BigInt::from(g.order() as i64 * h.order() as i64);
    let cross = vec![
        BigInt::from(r1 * r2) - n1n2,
        BigInt::from(-(r1 + r2)),
        BigInt::one(),
    ];
    let prod = crate::spectral::poly_mul(&crate::spectral::poly_mul(q1.coeffs(), q2.coeffs()), &cross);
    Ok(CharPoly::from_coeffs(prod))
}

/// Kronecker product with a fixed (m+1) x (m+1) pattern matrix; every block
/// is either `A(g)` or zero.
fn pattern_product(g: &Graph, pattern: &[u8], k: usize, label: String) -> Result<Graph> {
    let pg = g.order();
    let p = check_capacity(k * pg)?;
    let mut adj = vec![0u8; p * p];
    for bi in 0..k {
        for bj in 0..k {
            if pattern[bi * k + bj] == 0 {
                continue;
            }
            for u in 0..pg {
                let row = (bi * pg + u) * p + bj * pg;
                adj[row..row + pg].copy_from_slice(g.row(u));
            }
        }
    }
    Graph::from_adjacency(p, adj, Some(label))
}

/// m-splitting: each vertex `v` gains `m` new twins adjacent to the
/// neighbourhood of `v`. Block pattern: the leading block row and column
/// carry `A(g)`, all other blocks are zero.
pub fn splitting(g: &Graph, m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::InvalidOrder {
            what: "splitting multiplicity",
            got: 0,
            min: 1,
        });
    }
    let k = m + 1;
    let mut pattern = vec![0u8; k * k];
    pattern[0] = 1;
    for j in 1..k {
        pattern[j] = 1;
        pattern[j * k] = 1;
    }
    pattern_product(g, &pattern, k, format!("spl({},{m})", g.label_or_order()))
}

/// m-shadow: adjacency `J_m (x) A(g)`; m interconnected copies of `g`.
pub fn shadow(g: &Graph, m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::InvalidOrder {
            what: "shadow multiplicity",
            got: 0,
            min: 1,
        });
    }
    let pattern = vec![1u8; m * m];
    pattern_product(g, &pattern, m, format!("shadow({},{m})", g.label_or_order()))
}

/// Duplicate (bipartite double): adjacency `[[0, A], [A, 0]]`; vertex `i`
/// pairs with `i + p`.
pub fn duplicate(g: &Graph) -> Result<Graph> {
    let pattern = [0u8, 1, 1, 0];
    pattern_product(g, &pattern, 2, format!("dup({})", g.label_or_order()))
}

/// Iterated duplicate; `m = 0` returns the graph unchanged.
pub fn duplicate_iter(g: &Graph, m: usize) -> Result<Graph> {
    // fail fast on the final order instead of midway through the iteration
    let target = g
        .order()
        .checked_shl(m as u32)
        .ok_or(Error::Capacity {
            requested: usize::MAX,
            max: limits::max_order(),
        })?;
    check_capacity(target)?;
    let mut out = g.clone();
    for _ in 0..m {
        out = duplicate(&out)?;
    }
    Ok(out.with_label(format!("dup({},{m})", g.label_or_order())))
}
