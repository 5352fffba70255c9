//! Exact isomorphism testing for small graphs: iterated degree refinement
//! followed by class-respecting backtracking with a node budget.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::{ISO_MAX_ORDER, ISO_NODE_BUDGET};

/// Stable vertex colouring: start from degrees, then repeatedly split classes
/// by the multiset of neighbour colours until nothing changes.
fn refine_colors(g: &Graph) -> Vec<u32> {
    let n = g.order();
    let mut colors: Vec<u32> = g.degrees().iter().map(|&d| d as u32).collect();
    loop {
        let mut signatures: Vec<(u32, Vec<u32>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut neigh: Vec<u32> = (0..n)
                .filter(|&u| g.has_edge(v, u))
                .map(|u| colors[u])
                .collect();
            neigh.sort_unstable();
            signatures.push((colors[v], neigh));
        }
        let mut table: HashMap<&(u32, Vec<u32>), u32> = HashMap::new();
        let mut sorted: Vec<&(u32, Vec<u32>)> = signatures.iter().collect();
        sorted.sort();
        sorted.dedup();
        for (i, sig) in sorted.into_iter().enumerate() {
            table.insert(sig, i as u32);
        }
        let next: Vec<u32> = signatures.iter().map(|s| table[s]).collect();
        if next == colors {
            return colors;
        }
        colors = next;
    }
}

fn color_histogram(colors: &[u32]) -> Vec<(u32, usize)> {
    let mut hist: HashMap<u32, usize> = HashMap::new();
    for &c in colors {
        *hist.entry(c).or_default() += 1;
    }
    let mut out: Vec<(u32, usize)> = hist.into_iter().collect();
    out.sort_unstable();
    out
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    gc: Vec<u32>,
    hc: Vec<u32>,
    mapping: Vec<Option<usize>>,
    used: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn assign(&mut self, order: &[usize], pos: usize) -> Result<bool> {
        if pos == order.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::IsomorphismUndecidable(format!(
                "backtrack budget of {} nodes exhausted",
                self.budget
            )));
        }
        let v = order[pos];
        for w in 0..self.h.order() {
            if self.used[w] || self.gc[v] != self.hc[w] {
                continue;
            }
            let consistent = order[..pos].iter().all(|&u| {
                let mu = self.mapping[u].unwrap();
                self.g.has_edge(v, u) == self.h.has_edge(w, mu)
            });
            if !consistent {
                continue;
            }
            self.mapping[v] = Some(w);
            self.used[w] = true;
            if self.assign(order, pos + 1)? {
                return Ok(true);
            }
            self.mapping[v] = None;
            self.used[w] = false;
        }
        Ok(false)
    }
}

/// Exact isomorphism verdict for graphs within the search cap, using the
/// default node budget.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    is_isomorphic_budgeted(g, h, ISO_NODE_BUDGET)
}

/// Exact isomorphism verdict with a caller-chosen backtrack budget.
pub fn is_isomorphic_budgeted(g: &Graph, h: &Graph, budget: u64) -> Result<bool> {
    let n = g.order();
    if n != h.order() {
        return Ok(false);
    }
    if n > ISO_MAX_ORDER {
        return Err(Error::IsomorphismUndecidable(format!(
            "order {n} exceeds the search cap {ISO_MAX_ORDER}"
        )));
    }
    if g.size() != h.size() {
        return Ok(false);
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    let gc = refine_colors(g);
    let hc = refine_colors(h);
    if color_histogram(&gc) != color_histogram(&hc) {
        return Ok(false);
    }
    // map vertices in rarest-class-first order to fail early
    let hist: HashMap<u32, usize> = color_histogram(&gc).into_iter().collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (hist[&gc[v]], gc[v], v));

    let mut search = Search {
        g,
        h,
        gc,
        hc,
        mapping: vec![None; n],
        used: vec![false; n],
        nodes: 0,
        budget,
    };
    search.assign(&order, 0)
}
