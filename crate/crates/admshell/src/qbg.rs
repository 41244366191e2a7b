//! The quantum Bruhat graph on the finite Weyl group.
//!
//! Edges w -> w s_alpha are Bruhat (length +1, weight 0) or quantum
//! (length +1 - <alpha^v, 2 rho>, weight alpha^v). Weights live in
//! simple-coroot coordinates. The weight function wt(u,v) is the common
//! weight of all shortest u -> v paths; `strict_check` verifies that
//! shortest-path weights are indeed well defined over the whole graph.

use rayon::prelude::*;

use crate::root_datum::RootDatum;
use crate::weyl::WeylElt;
use crate::AdmError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    Bruhat,
    Quantum,
}

#[derive(Debug, Clone)]
pub struct QbgEdge {
    pub source: WeylElt,
    pub target: WeylElt,
    /// The positive root alpha with target = source * s_alpha.
    pub root: usize,
    pub kind: EdgeKind,
    /// Simple-coroot coordinates; zero for Bruhat edges.
    pub weight: Vec<i64>,
}

#[derive(Debug)]
pub struct QbGraph {
    pub datum_id: u64,
    pub n: usize,
    pub rank: usize,
    pub edges: Vec<QbgEdge>,
    /// Outgoing edge indices per source vertex.
    pub adj: Vec<Vec<usize>>,
    /// `dist[u][v]` = shortest path edge count.
    pub dist: Vec<Vec<u32>>,
    /// `wt[u][v]` in simple-coroot coordinates.
    wt_table: Vec<Vec<Vec<i64>>>,
}

pub fn build_qbg(rd: &RootDatum) -> QbGraph {
    let weyl = &rd.weyl;
    let n = weyl.size();
    let mut edges = Vec::new();
    let mut adj = vec![Vec::new(); n];
    for w in 0..n {
        for a in 0..rd.num_positive {
            let ws = weyl.mul(w, weyl.reflection_of_root[a]);
            let diff = weyl.length(ws) as i64 - weyl.length(w) as i64;
            let kind = if diff == 1 {
                Some(EdgeKind::Bruhat)
            } else if diff == 1 - rd.coroot_two_rho(a) {
                Some(EdgeKind::Quantum)
            } else {
                None
            };
            if let Some(kind) = kind {
                let weight = match kind {
                    EdgeKind::Bruhat => vec![0; rd.rank],
                    EdgeKind::Quantum => rd.roots[a].coroot.clone(),
                };
                adj[w].push(edges.len());
                edges.push(QbgEdge {
                    source: w,
                    target: ws,
                    root: a,
                    kind,
                    weight,
                });
            }
        }
    }

    let per_source: Vec<(Vec<u32>, Vec<Vec<i64>>)> = (0..n)
        .into_par_iter()
        .map(|u| {
            let mut dist = vec![u32::MAX; n];
            let mut wt = vec![Vec::new(); n];
            dist[u] = 0;
            wt[u] = vec![0; rd.rank];
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(u);
            while let Some(x) = queue.pop_front() {
                for &ei in &adj[x] {
                    let e = &edges[ei];
                    if dist[e.target] == u32::MAX {
                        dist[e.target] = dist[x] + 1;
                        wt[e.target] = wt[x]
                            .iter()
                            .zip(&e.weight)
                            .map(|(&a, &b)| a + b)
                            .collect();
                        queue.push_back(e.target);
                    }
                }
            }
            (dist, wt)
        })
        .collect();
    let (dist, wt_table) = per_source.into_iter().unzip();

    QbGraph {
        datum_id: rd.id,
        n,
        rank: rd.rank,
        edges,
        adj,
        dist,
        wt_table,
    }
}

/// Coordinatewise gamma <= gamma' on coroot vectors.
pub fn leq_coordwise(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x <= y)
}

impl QbGraph {
    pub fn wt(&self, u: WeylElt, v: WeylElt) -> &[i64] {
        &self.wt_table[u][v]
    }

    pub fn has_edge(&self, u: WeylElt, v: WeylElt) -> bool {
        self.adj[u].iter().any(|&ei| self.edges[ei].target == v)
    }

    /// Assert that every shortest-path tree edge agrees with the stored
    /// weights: all shortest u -> v paths then share one weight.
    pub fn strict_check(&self) -> Result<(), AdmError> {
        for u in 0..self.n {
            let dist = &self.dist[u];
            let wt = &self.wt_table[u];
            for e in &self.edges {
                if dist[e.source] != u32::MAX && dist[e.source] + 1 == dist[e.target] {
                    let via: Vec<i64> = wt[e.source]
                        .iter()
                        .zip(&e.weight)
                        .map(|(&a, &b)| a + b)
                        .collect();
                    if via != wt[e.target] {
                        return Err(AdmError::TheoremViolation(format!(
                            "shortest paths {u} -> {} disagree in weight",
                            e.target
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// min over {u | wt(v,u) <= gamma}.
    From,
    /// max over {u | wt(u,v) <= gamma}.
    To,
}

/// The unique Bruhat-extremal element of a weight-bounded set. Failure of
/// uniqueness would falsify the theory and is reported, never silently fixed.
pub fn min_weight_bounded(
    g: &QbGraph,
    rd: &RootDatum,
    v: WeylElt,
    gamma: &[i64],
    side: Side,
) -> Result<WeylElt, AdmError> {
    let set: Vec<WeylElt> = (0..g.n)
        .filter(|&u| match side {
            Side::From => leq_coordwise(g.wt(v, u), gamma),
            Side::To => leq_coordwise(g.wt(u, v), gamma),
        })
        .collect();
    let weyl = &rd.weyl;
    let extremal: Vec<WeylElt> = set
        .iter()
        .copied()
        .filter(|&u| {
            set.iter().all(|&o| {
                o == u
                    || match side {
                        Side::From => !weyl.bruhat_leq(o, u) || weyl.bruhat_leq(u, o),
                        Side::To => !weyl.bruhat_leq(u, o) || weyl.bruhat_leq(o, u),
                    }
            })
        })
        .collect();
    if extremal.len() != 1 {
        return Err(AdmError::MinNotUnique(format!(
            "weight-bounded set at v={v} side={side:?} has {} extremal elements",
            extremal.len()
        )));
    }
    Ok(extremal[0])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathShape {
    /// All quantum edges before all Bruhat edges.
    DownUp,
    /// All Bruhat edges before all quantum edges.
    UpDown,
}

/// A shortest u -> v path whose edge kinds follow the requested shape.
/// Exhaustive DFS over the shortest-path DAG; absence would falsify the
/// down-up theorem and is reported.
pub fn downup_witness(
    g: &QbGraph,
    u: WeylElt,
    v: WeylElt,
    shape: PathShape,
) -> Result<Vec<usize>, AdmError> {
    let total = g.dist[u][v];
    let first_kind = match shape {
        PathShape::DownUp => EdgeKind::Quantum,
        PathShape::UpDown => EdgeKind::Bruhat,
    };
    // phase 0: still in the first kind; phase 1: switched to the second
    fn dfs(
        g: &QbGraph,
        u: WeylElt,
        x: WeylElt,
        v: WeylElt,
        total: u32,
        first_kind: EdgeKind,
        phase: u8,
        path: &mut Vec<usize>,
    ) -> bool {
        if x == v && path.len() as u32 == total {
            return true;
        }
        for &ei in &g.adj[x] {
            let e = &g.edges[ei];
            if g.dist[u][x] + 1 != g.dist[u][e.target]
                || g.dist[u][e.target] + g.dist[e.target][v] != total
            {
                continue;
            }
            let next_phase = if e.kind == first_kind { phase } else { 1 };
            if next_phase == 1 && e.kind == first_kind {
                continue;
            }
            path.push(ei);
            if dfs(g, u, e.target, v, total, first_kind, next_phase, path) {
                return true;
            }
            path.pop();
        }
        false
    }
    let mut path = Vec::new();
    if dfs(g, u, u, v, total, first_kind, 0, &mut path) {
        Ok(path)
    } else {
        Err(AdmError::NoWitness(format!(
            "no {shape:?} shortest path {u} -> {v}"
        )))
    }
}
