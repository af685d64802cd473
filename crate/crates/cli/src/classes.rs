//! Graph-class membership report. Every claim is re-checked before it is
//! printed.

use std::fmt::Write as _;

use maxstc_core::reductions::{split_obstruction, split_partition, SplitInstance};
use maxstc_core::solvers::cograph::{find_p4_or_c4, trivially_perfect_obstruction, QuartetKind};
use maxstc_core::solvers::{is_trivially_perfect, two_coloring};
use maxstc_core::{recognize, verify_umbrella, Graph};

/// A claim failed its independent re-check.
#[derive(Debug)]
pub struct Unverified(pub String);

fn check(ok: bool, what: &str) -> Result<(), Unverified> {
    if ok {
        Ok(())
    } else {
        Err(Unverified(what.to_string()))
    }
}

pub fn report(g: &Graph) -> Result<String, Unverified> {
    let mut out = String::new();
    writeln!(out, "proper-interval {}", proper_interval(g)?).unwrap();
    writeln!(out, "trivially-perfect {}", trivially_perfect(g)?).unwrap();
    writeln!(out, "bipartite {}", bipartite(g)?).unwrap();
    writeln!(out, "split {}", split(g)?).unwrap();
    Ok(out)
}

fn induced_edges(g: &Graph, vs: &[usize]) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if g.has_edge(vs[i], vs[j]) {
                e.push((i, j));
            }
        }
    }
    e
}

fn indices(g: &Graph, labels: &[String]) -> Vec<usize> {
    labels.iter().map(|l| g.index_of(l).expect("label from g")).collect()
}

fn find_claw(g: &Graph) -> Option<[usize; 4]> {
    for c in 0..g.vertex_count() {
        let nb = g.neighbor_indices(c);
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &d in &nb[j + 1..] {
                    if !g.has_edge(a, d) && !g.has_edge(b, d) {
                        return Some([c, a, b, d]);
                    }
                }
            }
        }
    }
    None
}

fn proper_interval(g: &Graph) -> Result<String, Unverified> {
    match recognize(g) {
        Ok(ord) => {
            let order: Vec<&str> = ord.order().iter().map(String::as_str).collect();
            check(verify_umbrella(g, &order).map(|c| c.is_valid()).unwrap_or(false), "umbrella ordering")?;
            Ok(format!("yes ordering {}", order.join(" ")))
        }
        Err(rej) => {
            if let Some(claw) = find_claw(g) {
                check(induced_edges(g, &claw) == [(0, 1), (0, 2), (0, 3)], "claw")?;
                let names: Vec<&str> = claw.iter().map(|&v| g.label(v)).collect();
                return Ok(format!("no claw {}", names.join(" ")));
            }
            let order: Vec<&str> = rej.candidate.iter().map(String::as_str).collect();
            check(!verify_umbrella(g, &order).map(|c| c.is_valid()).unwrap_or(true), "candidate violation")?;
            let (x, y, z) = &rej.witness;
            Ok(format!("no umbrella-violation {x} {y} {z} in candidate {}", order.join(" ")))
        }
    }
}

fn trivially_perfect(g: &Graph) -> Result<String, Unverified> {
    if is_trivially_perfect(g) {
        check(find_p4_or_c4(g).is_none(), "P4/C4-freeness")?;
        return Ok("yes".to_string());
    }
    let q = trivially_perfect_obstruction(g).ok_or_else(|| Unverified("P4/C4 witness".to_string()))?;
    let e = induced_edges(g, &indices(g, &q.vertices));
    let (kind, expected): (&str, &[(usize, usize)]) = match q.kind {
        QuartetKind::P4 => ("P4", &[(0, 1), (1, 2), (2, 3)]),
        QuartetKind::C4 => ("C4", &[(0, 1), (0, 3), (1, 2), (2, 3)]),
    };
    check(e == expected, "induced quartet")?;
    Ok(format!("no {kind} {}", q.vertices.join(" ")))
}

fn bipartite(g: &Graph) -> Result<String, Unverified> {
    match two_coloring(g) {
        Ok(side) => {
            check(g.edges().all(|(u, v)| side[u] != side[v]), "2-coloring")?;
            let part = |s: bool| {
                (0..g.vertex_count()).filter(|&v| side[v] == s).map(|v| g.label(v)).collect::<Vec<_>>().join(" ")
            };
            Ok(format!("yes coloring 0: {} | 1: {}", part(false), part(true)))
        }
        Err(cycle) => {
            let idx = indices(g, &cycle);
            let closed = (0..idx.len()).all(|i| g.has_edge(idx[i], idx[(i + 1) % idx.len()]));
            check(idx.len() % 2 == 1 && closed, "odd cycle")?;
            Ok(format!("no odd-cycle {}", cycle.join(" ")))
        }
    }
}

fn split(g: &Graph) -> Result<String, Unverified> {
    if let Some((clique, independent)) = split_partition(g) {
        let text = format!("yes clique {} | independent {}", clique.join(" "), independent.join(" "));
        check(SplitInstance::new(g.clone(), clique, independent).is_ok(), "split partition")?;
        return Ok(text);
    }
    let obs = split_obstruction(g).ok_or_else(|| Unverified("split obstruction".to_string()))?;
    let e = induced_edges(g, &indices(g, &obs));
    let kind = match (obs.len(), e.as_slice()) {
        (4, [(0, 1), (2, 3)]) => "2K2",
        (4, [(0, 1), (0, 3), (1, 2), (2, 3)]) => "C4",
        (5, [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]) => "C5",
        _ => return Err(Unverified("split obstruction shape".to_string())),
    };
    Ok(format!("no {kind} {}", obs.join(" ")))
}
