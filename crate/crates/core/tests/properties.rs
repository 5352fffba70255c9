//! Property-based invariants across the construction and spectral layers.

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use gel_core::graph::Graph;
use gel_core::io;
use gel_core::iso::is_isomorphic;
use gel_core::ops;
use gel_core::spectral::{char_poly, spectrum};

/// Random simple graph on 1..=max_order vertices.
fn arb_graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        let nbits = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), nbits).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in (i + 1)..n {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges, None).unwrap()
        })
    })
}

fn multiset_close(a: &[f64], b: &[f64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    x.sort_by(|p, q| p.partial_cmp(q).unwrap());
    y.sort_by(|p, q| p.partial_cmp(q).unwrap());
    x.iter().zip(&y).all(|(p, q)| (p - q).abs() <= tol)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_roundtrip(g in arb_graph(40)) {
        let enc = io::to_graph6(&g);
        let back = io::from_graph6(&enc).unwrap();
        prop_assert_eq!(back.adjacency(), g.adjacency());
    }

    #[test]
    fn edge_list_roundtrip(g in arb_graph(20)) {
        let text = io::to_edge_list(&g);
        let back = io::from_edge_list(&text).unwrap();
        prop_assert_eq!(back.adjacency(), g.adjacency());
    }

    #[test]
    fn union_spectrum_is_multiset_union(g in arb_graph(8), h in arb_graph(8)) {
        let u = g.disjoint_union(&h).unwrap();
        let mut parts = spectrum(&g).unwrap().values().to_vec();
        parts.extend_from_slice(spectrum(&h).unwrap().values());
        let total = spectrum(&u).unwrap();
        prop_assert!(multiset_close(total.values(), &parts, 1e-9));
    }

    #[test]
    fn duplicate_spectrum_is_symmetrized(g in arb_graph(8)) {
        let d = ops::duplicate(&g).unwrap();
        let base = spectrum(&g).unwrap();
        let mut expect = base.values().to_vec();
        expect.extend(base.values().iter().map(|v| -v));
        prop_assert!(multiset_close(spectrum(&d).unwrap().values(), &expect, 1e-9));
        // same char-poly as the Kronecker route
        let a = char_poly(&d).unwrap();
        let b = char_poly(&ops::kronecker(&g, &Graph::complete(2).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn kronecker_eigenvalue_law(g in arb_graph(5), h in arb_graph(5)) {
        let k = ops::kronecker(&g, &h).unwrap();
        let sg = spectrum(&g).unwrap();
        let sh = spectrum(&h).unwrap();
        let mut products: Vec<f64> = Vec::new();
        for &a in sg.values() {
            for &b in sh.values() {
                products.push(a * b);
            }
        }
        prop_assert!(multiset_close(spectrum(&k).unwrap().values(), &products, 1e-8));
    }

    #[test]
    fn shadow_and_splitting_energy_laws(g in arb_graph(7), m in 1usize..=5) {
        let base = spectrum(&g).unwrap().energy();
        let shadow = spectrum(&ops::shadow(&g, m).unwrap()).unwrap().energy();
        prop_assert!((shadow - m as f64 * base).abs() <= 1e-8 * (1.0 + shadow.abs()));
        let split = spectrum(&ops::splitting(&g, m).unwrap()).unwrap().energy();
        let factor = (1.0 + 4.0 * m as f64).sqrt();
        prop_assert!((split - factor * base).abs() <= 1e-8 * (1.0 + split.abs()));
    }

    #[test]
    fn charpoly_structure(g in arb_graph(8)) {
        let p = g.order();
        let c = char_poly(&g).unwrap();
        prop_assert_eq!(c.degree(), p);
        if p >= 1 {
            prop_assert!(c.coeffs()[p - 1].is_zero());
        }
        if p >= 2 {
            prop_assert_eq!(c.coeffs()[p - 2].clone(), BigInt::from(-(g.size() as i64)));
        }
        // exact evaluation agrees with a float Horner pass at integer points
        for t in -2i64..=2 {
            let exact = c.eval(&BigInt::from(t));
            let horner = c.coeffs().iter().rev().fold(0f64, |acc, ck| {
                acc * t as f64 + ck.to_string().parse::<f64>().unwrap()
            });
            let exact_f = exact.to_string().parse::<f64>().unwrap();
            prop_assert!((exact_f - horner).abs() <= 1e-6 * (1.0 + exact_f.abs()));
        }
    }

    #[test]
    fn permutation_invariance(g in arb_graph(8), seed in any::<u64>()) {
        // relabel by a pseudo-random permutation derived from the seed
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))
            .collect();
        let h = Graph::from_edges(n, &edges, None).unwrap();
        prop_assert!(is_isomorphic(&g, &h).unwrap());
        prop_assert_eq!(char_poly(&g).unwrap(), char_poly(&h).unwrap());
    }

    #[test]
    fn classify_flags_consistent(g in arb_graph(9)) {
        let r = gel_core::classify_energy(&g).unwrap();
        let trichotomy =
            [r.hypoenergetic, r.orderenergetic, !r.hypoenergetic && !r.orderenergetic];
        prop_assert_eq!(trichotomy.iter().filter(|&&b| b).count(), 1);
        prop_assert_eq!(r.nonhypoenergetic, !r.hypoenergetic);
        if r.hyperenergetic {
            prop_assert!(r.nonhypoenergetic);
        }
        if r.integral == Some(true) {
            let exact = r.energy_exact.unwrap() as f64;
            prop_assert!((exact - r.energy).abs() <= 1e-8 * (1.0 + exact));
            // the exact orderenergetic verdict agrees with the tolerance one
            let tolerance_verdict = (r.energy - r.order as f64).abs()
                <= 1e-8 * (r.order as f64).max(1.0);
            prop_assert_eq!(r.orderenergetic, tolerance_verdict);
        }
    }

    #[test]
    fn certify_is_symmetric(g in arb_graph(7), h in arb_graph(7)) {
        let ab = gel_core::certify_pair(&g, &h).unwrap();
        let ba = gel_core::certify_pair(&h, &g).unwrap();
        prop_assert_eq!(ab.verdict, ba.verdict);
        prop_assert_eq!(ab.cospectral, ba.cospectral);
        prop_assert_eq!(ab.same_order, ba.same_order);
        // non-cospectral pairs are never isomorphic
        if ab.same_order && !ab.cospectral {
            prop_assert_ne!(ab.isomorphic, Some(true));
        }
    }
}
