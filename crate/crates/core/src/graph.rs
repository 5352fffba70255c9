//! Simple undirected graphs over a dense symmetric 0/1 adjacency matrix,
//! plus the standard families used by the rest of the crate.

use crate::error::{Error, Result};
use crate::limits;

/// Immutable simple undirected graph. The adjacency matrix is stored dense
/// and row-major; entries are 0/1, the diagonal is zero and the matrix is
/// symmetric (enforced on construction).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    adj: Vec<u8>,
    label: Option<String>,
}

/// Block sizes of a superpath: the path vertex `i` is replaced by an
/// independent set of `parts[i]` vertices, consecutive blocks are fully
/// joined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperpathSpec {
    parts: Vec<usize>,
}

impl SuperpathSpec {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptySuperpath);
        }
        if let Some(&bad) = parts.iter().find(|&&a| a == 0) {
            return Err(Error::InvalidOrder {
                what: "superpath block",
                got: bad,
                min: 1,
            });
        }
        Ok(SuperpathSpec { parts })
    }

    /// The palindromic spec `(m, 1, m-1, 2, ..., 2, m-1, 1, m)` of length
    /// `2m`: within the first half, odd positions count down from `m` and
    /// even positions count up from `1`; the second half mirrors the first.
    /// Its blocks sum to `m(m+1)`.
    pub fn canonical(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidOrder {
                what: "canonical superpath",
                got: 0,
                min: 1,
            });
        }
        let mut half = Vec::with_capacity(m);
        for j in 1..=m {
            if j % 2 == 1 {
                half.push(m - (j - 1) / 2);
            } else {
                half.push(j / 2);
            }
        }
        let mut parts = half.clone();
        parts.extend(half.iter().rev());
        SuperpathSpec::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn order(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.parts.iter().eq(self.parts.iter().rev())
    }
}

impl Graph {
    fn with_capacity_checked(order: usize, what: &'static str) -> Result<Vec<u8>> {
        if order == 0 {
            return Err(Error::InvalidOrder {
                what,
                got: 0,
                min: 1,
            });
        }
        let max = limits::max_order();
        if order > max {
            return Err(Error::Capacity {
                requested: order,
                max,
            });
        }
        Ok(vec![0u8; order * order])
    }

    /// Build a graph from a raw adjacency matrix. The matrix must be square,
    /// symmetric, 0/1 and zero on the diagonal.
    pub fn from_adjacency(order: usize, adj: Vec<u8>, label: Option<String>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidOrder {
                what: "graph",
                got: 0,
                min: 1,
            });
        }
        assert_eq!(adj.len(), order * order, "adjacency size mismatch");
        for i in 0..order {
            assert_eq!(adj[i * order + i], 0, "nonzero diagonal at {i}");
            for j in 0..i {
                let a = adj[i * order + j];
                assert!(a <= 1, "non 0/1 entry at ({i},{j})");
                assert_eq!(a, adj[j * order + i], "asymmetric entry at ({i},{j})");
            }
        }
        Ok(Graph { order, adj, label })
    }

    /// Build from an edge list over `0..order`; loops are rejected,
    /// duplicate edges collapse.
    pub fn from_edges(
        order: usize,
        edges: &[(usize, usize)],
        label: Option<String>,
    ) -> Result<Self> {
        let mut adj = Self::with_capacity_checked(order, "graph")?;
        for &(u, v) in edges {
            assert!(u < order && v < order, "edge ({u},{v}) out of range");
            assert_ne!(u, v, "loop at {u}");
            adj[u * order + v] = 1;
            adj[v * order + u] = 1;
        }
        Ok(Graph { order, adj, label })
    }

    /// Complete graph `K_p`.
    pub fn complete(p: usize) -> Result<Self> {
        let mut adj = Self::with_capacity_checked(p, "complete graph")?;
        for i in 0..p {
            for j in 0..p {
                if i != j {
                    adj[i * p + j] = 1;
                }
            }
        }
        Ok(Graph {
            order: p,
            adj,
            label: Some(format!("K({p})")),
        })
    }

    /// Edgeless graph on `n` vertices (the complement of `K_n`).
    pub fn empty(n: usize) -> Result<Self> {
        let adj = Self::with_capacity_checked(n, "empty graph")?;
        Ok(Graph {
            order: n,
            adj,
            label: Some(format!("E({n})")),
        })
    }

    /// Cycle `C_p`, `p >= 3`.
    pub fn cycle(p: usize) -> Result<Self> {
        if p < 3 {
            return Err(Error::InvalidOrder {
                what: "cycle",
                got: p,
                min: 3,
            });
        }
        let mut adj = Self::with_capacity_checked(p, "cycle")?;
        for i in 0..p {
            let j = (i + 1) % p;
            adj[i * p + j] = 1;
            adj[j * p + i] = 1;
        }
        Ok(Graph {
            order: p,
            adj,
            label: Some(format!("C({p})")),
        })
    }

    /// Path `P_m` on `m` vertices.
    pub fn path(m: usize) -> Result<Self> {
        let mut adj = Self::with_capacity_checked(m, "path")?;
        for i in 1..m {
            adj[(i - 1) * m + i] = 1;
            adj[i * m + (i - 1)] = 1;
        }
        Ok(Graph {
            order: m,
            adj,
            label: Some(format!("P({m})")),
        })
    }

    /// Complete bipartite graph `K_{r,s}`; the first `r` indices form one
    /// class, the remaining `s` the other.
    pub fn complete_bipartite(r: usize, s: usize) -> Result<Self> {
        if r == 0 || s == 0 {
            return Err(Error::InvalidOrder {
                what: "complete bipartite class",
                got: r.min(s),
                min: 1,
            });
        }
        let p = r + s;
        let mut adj = Self::with_capacity_checked(p, "complete bipartite graph")?;
        for i in 0..r {
            for j in r..p {
                adj[i * p + j] = 1;
                adj[j * p + i] = 1;
            }
        }
        Ok(Graph {
            order: p,
            adj,
            label: Some(format!("KB({r},{s})")),
        })
    }

    /// Superpath: blocks are laid out contiguously left to right; a vertex in
    /// block `i` is adjacent to every vertex of blocks `i-1` and `i+1`.
    pub fn superpath(spec: &SuperpathSpec) -> Result<Self> {
        let p = spec.order();
        let mut adj = Self::with_capacity_checked(p, "superpath")?;
        let mut offsets = Vec::with_capacity(spec.parts().len() + 1);
        let mut acc = 0usize;
        offsets.push(0);
        for &a in spec.parts() {
            acc += a;
            offsets.push(acc);
        }
        for b in 1..spec.parts().len() {
            for u in offsets[b - 1]..offsets[b] {
                for v in offsets[b]..offsets[b + 1] {
                    adj[u * p + v] = 1;
                    adj[v * p + u] = 1;
                }
            }
        }
        let parts_str = spec
            .parts()
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(",");
        Ok(Graph {
            order: p,
            adj,
            label: Some(format!("SP({parts_str})")),
        })
    }

    /// The palindromic superpath of parameter `m` (order `m(m+1)`).
    pub fn canonical_superpath(m: usize) -> Result<Self> {
        let spec = SuperpathSpec::canonical(m)?;
        let mut g = Self::superpath(&spec)?;
        g.label = Some(format!("CSP({m})"));
        Ok(g)
    }

    /// Complement: edge iff non-edge, diagonal stays zero.
    pub fn complement(&self) -> Self {
        let p = self.order;
        let mut adj = vec![0u8; p * p];
        for i in 0..p {
            for j in 0..p {
                if i != j {
                    adj[i * p + j] = 1 - self.adj[i * p + j];
                }
            }
        }
        Graph {
            order: p,
            adj,
            label: Some(format!("comp({})", self.label_or_order())),
        }
    }

    /// Disjoint union; `self` occupies the lower indices, `other` follows.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let p = self.order + other.order;
        let mut adj = Self::with_capacity_checked(p, "disjoint union")?;
        for i in 0..self.order {
            for j in 0..self.order {
                adj[i * p + j] = self.adj[i * self.order + j];
            }
        }
        for i in 0..other.order {
            for j in 0..other.order {
                adj[(self.order + i) * p + (self.order + j)] = other.adj[i * other.order + j];
            }
        }
        Ok(Graph {
            order: p,
            adj,
            label: Some(format!(
                "union({},{})",
                self.label_or_order(),
                other.label_or_order()
            )),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|&a| a as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.order + v] != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|&a| a as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regular_degree(&self) -> Option<usize> {
        let degs = self.degrees();
        let r = degs[0];
        degs.iter().all(|&d| d == r).then_some(r)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.order];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for (v, &a) in self.row(u).iter().enumerate() {
                if a != 0 && !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.order
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.adj[i * self.order..(i + 1) * self.order]
    }

    pub fn adjacency(&self) -> &[u8] {
        &self.adj
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for i in 0..self.order {
            for j in (i + 1)..self.order {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label_or_order(&self) -> String {
        self.label
            .clone()
            .unwrap_or_else(|| format!("graph<{}>", self.order))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_shapes() {
        let k1 = Graph::complete(1).unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        let k3 = Graph::complete(3).unwrap();
        assert_eq!((k3.order(), k3.size()), (3, 3));
        assert!(matches!(
            Graph::complete(0),
            Err(Error::InvalidOrder { .. })
        ));
    }

    #[test]
    fn cycle_and_path() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.size(), 5);
        assert_eq!(c5.regular_degree(), Some(2));
        assert!(c5.is_connected());
        assert!(matches!(Graph::cycle(2), Err(Error::InvalidOrder { .. })));

        let p1 = Graph::path(1).unwrap();
        assert_eq!(p1.size(), 0);
        let p2 = Graph::path(2).unwrap();
        assert_eq!(p2.adjacency(), Graph::complete(2).unwrap().adjacency());
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.size(), 2);
    }

    #[test]
    fn bipartite_counts() {
        let g = Graph::complete_bipartite(3, 3).unwrap();
        assert_eq!((g.order(), g.size()), (6, 9));
        let star = Graph::complete_bipartite(1, 3).unwrap();
        assert_eq!(star.degrees(), vec![3, 1, 1, 1]);
        let k2 = Graph::complete_bipartite(1, 1).unwrap();
        assert_eq!(k2.adjacency(), Graph::complete(2).unwrap().adjacency());
    }

    #[test]
    fn superpath_blocks() {
        let sp = Graph::superpath(&SuperpathSpec::new(vec![2, 1, 1, 2]).unwrap()).unwrap();
        assert_eq!((sp.order(), sp.size()), (6, 5));
        assert_eq!(sp.max_degree(), 3);
        // blocks are independent sets
        assert!(!sp.has_edge(0, 1));
        assert!(sp.has_edge(0, 2) && sp.has_edge(1, 2));

        let tiny = Graph::superpath(&SuperpathSpec::new(vec![1, 1]).unwrap()).unwrap();
        assert_eq!(tiny.adjacency(), Graph::complete(2).unwrap().adjacency());

        assert!(matches!(
            SuperpathSpec::new(vec![]),
            Err(Error::EmptySuperpath)
        ));
        assert!(SuperpathSpec::new(vec![2, 0]).is_err());
    }

    #[test]
    fn canonical_superpath_specs() {
        assert_eq!(
            SuperpathSpec::canonical(4).unwrap().parts(),
            &[4, 1, 3, 2, 2, 3, 1, 4]
        );
        assert_eq!(SuperpathSpec::canonical(2).unwrap().parts(), &[2, 1, 1, 2]);
        assert_eq!(
            SuperpathSpec::canonical(3).unwrap().parts(),
            &[3, 1, 2, 2, 1, 3]
        );
        for m in 1..=12 {
            let spec = SuperpathSpec::canonical(m).unwrap();
            assert!(spec.is_palindromic());
            assert_eq!(spec.order(), m * (m + 1), "order identity at m={m}");
            assert_eq!(Graph::canonical_superpath(m).unwrap().order(), m * (m + 1));
        }
        assert!(Graph::canonical_superpath(0).is_err());
    }

    #[test]
    fn canonical_superpath_max_degree() {
        for m in 1..=8 {
            let g = Graph::canonical_superpath(m).unwrap();
            assert_eq!(g.max_degree(), 2 * m - 1, "max degree at m={m}");
        }
    }

    #[test]
    fn complement_identities() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.complement().adjacency(), Graph::empty(4).unwrap().adjacency());
        assert_eq!(
            Graph::empty(5).unwrap().complement().adjacency(),
            Graph::complete(5).unwrap().adjacency()
        );
        // complement of C4 is a perfect matching
        let m = Graph::cycle(4).unwrap().complement();
        assert_eq!(m.size(), 2);
        assert_eq!(m.degrees(), vec![1, 1, 1, 1]);
        assert!(m.has_edge(0, 2) && m.has_edge(1, 3));
    }

    #[test]
    fn union_is_block_diagonal() {
        let g = Graph::complete(2)
            .unwrap()
            .disjoint_union(&Graph::complete(2).unwrap())
            .unwrap();
        assert_eq!((g.order(), g.size()), (4, 2));
        assert!(g.has_edge(0, 1) && g.has_edge(2, 3));
        assert!(!g.has_edge(1, 2));
        assert!(!g.is_connected());
    }

    #[test]
    fn capacity_respected() {
        // default cap is 4096; a direct build beyond it must fail
        assert!(matches!(
            Graph::empty(5000),
            Err(Error::Capacity { .. })
        ));
    }
}
