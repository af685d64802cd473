#![allow(dead_code)]

use maxstc_core::{Graph, GraphBuilder};

pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

/// Graph on `v0..v{n-1}` whose edges are picked by `bits` in row-major order
/// over pairs `i < j`.
pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let names = labels(n);
    let mut b = GraphBuilder::new();
    for l in &names {
        b.add_vertex(l).unwrap();
    }
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bits.get(k).copied().unwrap_or(false) {
                b.add_edge(&names[i], &names[j]).unwrap();
            }
            k += 1;
        }
    }
    b.build()
}

/// Brute-force MaxSTC by enumerating every labeling and checking every
/// wedge directly. Independent of the incompatibility graph and MWIS code.
pub fn enumerate_optimum(g: &Graph) -> u64 {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    assert!(m <= 20, "enumeration limited to 20 edges");
    let mut best = 0;
    for mask in 0u32..(1 << m) {
        let strong = |u: usize, v: usize| {
            edges.iter().position(|&e| e == (u.min(v), u.max(v))).is_some_and(|i| mask >> i & 1 == 1)
        };
        let valid = (0..g.vertex_count()).all(|v| {
            let nb = g.neighbor_indices(v);
            nb.iter().all(|&a| {
                nb.iter().all(|&b| a >= b || !strong(v, a) || !strong(v, b) || g.has_edge(a, b))
            })
        });
        if valid {
            let w: u64 = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| g.edge_weight(edges[i].0, edges[i].1)).sum();
            best = best.max(w);
        }
    }
    best
}

/// Every permutation of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}
