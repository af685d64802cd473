//! Exact maximum weighted independent set by branch and reduce.
//!
//! This is the reference oracle for every class-specific solver, so it makes
//! no structural assumptions about its input.

use alloc::vec::Vec;

use crate::bits::Bits;
use crate::incompat::IncompatGraph;

use super::SolveError;

/// Node cap used by the brute-force routines unless overridden.
pub const DEFAULT_CAP: usize = 34;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MwisOptions {
    /// Largest node count accepted without `force`.
    pub cap: usize,
    pub force: bool,
}

impl Default for MwisOptions {
    fn default() -> Self {
        MwisOptions { cap: DEFAULT_CAP, force: false }
    }
}

impl MwisOptions {
    pub fn with_cap(cap: usize) -> Self {
        MwisOptions { cap, force: false }
    }

    pub fn forced() -> Self {
        MwisOptions { cap: DEFAULT_CAP, force: true }
    }

    pub(crate) fn admit(&self, nodes: usize) -> Result<(), SolveError> {
        if !self.force && nodes > self.cap {
            return Err(SolveError::CapExceeded { size: nodes, cap: self.cap });
        }
        Ok(())
    }
}

/// Optimum of a maximum weighted independent set search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MwisSolution {
    pub value: u64,
    /// Node indices, ascending.
    pub nodes: Vec<usize>,
    /// Search-tree nodes visited over all searches.
    pub explored: u64,
}

/// Exact MWIS of `h`. Among optimal sets the lexicographically smallest
/// (as ascending index sequences) is returned.
pub fn brute_mwis(h: &IncompatGraph, opts: MwisOptions) -> Result<MwisSolution, SolveError> {
    opts.admit(h.node_count())?;
    let adj: Vec<Vec<usize>> = (0..h.node_count()).map(|i| h.neighbors(i).to_vec()).collect();
    Ok(mwis_lex_smallest(h.weights(), &adj))
}

/// Exact MWIS value of `h` without a witness.
pub fn mwis_value(h: &IncompatGraph, opts: MwisOptions) -> Result<(u64, u64), SolveError> {
    opts.admit(h.node_count())?;
    let adj: Vec<Vec<usize>> = (0..h.node_count()).map(|i| h.neighbors(i).to_vec()).collect();
    let mut s = Search::new(h.weights(), &adj);
    let n = h.node_count();
    let v = s.solve(Bits::full(n));
    Ok((v, s.explored))
}

pub(crate) fn mwis_lex_smallest(weights: &[u64], adj: &[Vec<usize>]) -> MwisSolution {
    let n = weights.len();
    let mut s = Search::new(weights, adj);
    let mut cand = Bits::full(n);
    let opt = s.solve(cand.clone());
    let mut acc = 0;
    let mut nodes = Vec::new();
    // Greedily fix the smallest index that still admits an optimal completion.
    for i in 0..n {
        if !cand.contains(i) {
            continue;
        }
        let mut rest = cand.clone();
        rest.and_not_assign(&s.closed[i]);
        let with = acc + weights[i] + s.solve(rest.clone());
        if with == opt {
            acc += weights[i];
            nodes.push(i);
            cand = rest;
        } else {
            cand.remove(i);
        }
    }
    debug_assert_eq!(acc, opt);
    MwisSolution { value: opt, nodes, explored: s.explored }
}

struct Search<'a> {
    w: &'a [u64],
    adj: Vec<Bits>,
    closed: Vec<Bits>,
    explored: u64,
}

impl<'a> Search<'a> {
    fn new(w: &'a [u64], adj_lists: &[Vec<usize>]) -> Self {
        let n = w.len();
        let mut adj = Vec::with_capacity(n);
        let mut closed = Vec::with_capacity(n);
        for (i, list) in adj_lists.iter().enumerate() {
            let mut b = Bits::empty(n);
            for &j in list {
                b.insert(j);
            }
            let mut c = b.clone();
            c.insert(i);
            adj.push(b);
            closed.push(c);
        }
        Search { w, adj, closed, explored: 0 }
    }

    /// Exact optimum of the subgraph induced by `cand`.
    fn solve(&mut self, mut cand: Bits) -> u64 {
        let taken = self.reduce(&mut cand);
        if cand.is_empty() {
            return taken;
        }
        let comps = self.components(&cand);
        let mut total = taken;
        for comp in comps {
            let mut best = self.greedy(&comp);
            self.branch(comp, 0, &mut best);
            total += best;
        }
        total
    }

    fn branch(&mut self, mut cand: Bits, mut acc: u64, best: &mut u64) {
        self.explored += 1;
        acc += self.reduce(&mut cand);
        if cand.is_empty() {
            if acc > *best {
                *best = acc;
            }
            return;
        }
        if acc + self.clique_cover_bound(&cand) <= *best {
            return;
        }
        let comps = self.components(&cand);
        if comps.len() > 1 {
            let mut total = acc;
            for comp in comps {
                total += self.solve(comp);
            }
            if total > *best {
                *best = total;
            }
            return;
        }
        let v = cand
            .iter()
            .max_by_key(|&v| (self.adj[v].and_len(&cand), core::cmp::Reverse(v)))
            .expect("non-empty");
        let mut with = cand.clone();
        with.and_not_assign(&self.closed[v]);
        self.branch(with, acc + self.w[v], best);
        cand.remove(v);
        self.branch(cand, acc, best);
    }

    /// Applies safe reductions until none fires; returns the weight of the
    /// nodes forced into the solution.
    fn reduce(&self, cand: &mut Bits) -> u64 {
        let mut taken = 0;
        loop {
            let mut changed = false;
            let nodes: Vec<usize> = cand.iter().collect();
            for &v in &nodes {
                if !cand.contains(v) {
                    continue;
                }
                let nb = self.adj[v].and(cand);
                // v outweighs a clique neighborhood: take it
                let heaviest = nb.iter().map(|u| self.w[u]).max().unwrap_or(0);
                if self.w[v] >= heaviest && nb.iter().all(|u| nb.is_subset_of(&self.closed[u])) {
                    taken += self.w[v];
                    cand.and_not_assign(&self.closed[v]);
                    changed = true;
                    continue;
                }
                // v dominates a neighbor u: N[v] within N[u] and w(v) >= w(u)
                for u in nb.iter() {
                    if self.w[v] >= self.w[u] && self.closed[v].masked_subset_of(cand, &self.closed[u]) {
                        cand.remove(u);
                        changed = true;
                    }
                }
            }
            if !changed {
                return taken;
            }
        }
    }

    fn components(&self, cand: &Bits) -> Vec<Bits> {
        let mut rest = cand.clone();
        let mut out = Vec::new();
        while let Some(s) = rest.first() {
            let mut comp = Bits::empty(self.w.len());
            comp.insert(s);
            let mut frontier = comp.clone();
            rest.remove(s);
            while !frontier.is_empty() {
                let mut next = Bits::empty(self.w.len());
                for v in frontier.iter() {
                    next.or_assign(&self.adj[v]);
                }
                next = next.and(&rest);
                rest.and_not_assign(&next);
                comp.or_assign(&next);
                frontier = next;
            }
            out.push(comp);
        }
        out
    }

    /// Sum over a greedy clique cover of each clique's heaviest weight.
    fn clique_cover_bound(&self, cand: &Bits) -> u64 {
        let mut order: Vec<usize> = cand.iter().collect();
        order.sort_by_key(|&v| core::cmp::Reverse(self.w[v]));
        let mut cliques: Vec<Bits> = Vec::new();
        let mut bound = 0;
        for v in order {
            match cliques.iter_mut().find(|c| c.is_subset_of(&self.adj[v])) {
                Some(c) => c.insert(v),
                None => {
                    let mut c = Bits::empty(self.w.len());
                    c.insert(v);
                    cliques.push(c);
                    bound += self.w[v];
                }
            }
        }
        bound
    }

    /// Greedy heaviest-first independent set, used as the initial incumbent.
    fn greedy(&self, cand: &Bits) -> u64 {
        let mut order: Vec<usize> = cand.iter().collect();
        order.sort_by_key(|&v| (core::cmp::Reverse(self.w[v]), self.adj[v].and_len(cand)));
        let mut free = cand.clone();
        let mut total = 0;
        for v in order {
            if free.contains(v) {
                total += self.w[v];
                free.and_not_assign(&self.closed[v]);
            }
        }
        total
    }
}
