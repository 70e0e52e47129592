//! Interiors of short cycles.
//!
//! At each vertex of a cycle the rotation splits into a left sector (clockwise
//! from the previous cycle vertex to the next one) and a right sector. A side
//! of the cycle holds vertices iff some cycle vertex has a non-cycle neighbor
//! in the corresponding sector. The outer face lies on one side only; that
//! side is the exterior.

use std::collections::VecDeque;

use crate::graph::VertexId;

use super::PlaneGraph;

/// A triangle or 4-cycle together with the vertices strictly inside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortCycle {
    pub cycle: Vec<VertexId>,
    pub interior: Vec<VertexId>,
}

struct Ctx {
    on: Vec<bool>,
    // a predecessor of each outer-walk vertex along its outer walk
    outer_pred: Vec<Option<VertexId>>,
}

impl Ctx {
    fn new(g: &PlaneGraph) -> Self {
        let n = g.capacity();
        let mut on = vec![false; n];
        let mut outer_pred = vec![None; n];
        for w in g.outer_walks() {
            for (i, &v) in w.iter().enumerate() {
                on[v] = true;
                if w.len() > 1 && outer_pred[v].is_none() {
                    outer_pred[v] = Some(w[(i + w.len() - 1) % w.len()]);
                }
            }
        }
        Ctx { on, outer_pred }
    }
}

/// Vertices strictly inside the cycle `cycle` (consecutive vertices
/// adjacent, last adjacent to first), sorted. The component holding the cycle
/// is treated as its own plane, so "inside" means away from its outer face.
pub fn cycle_interior(g: &PlaneGraph, cycle: &[VertexId]) -> Vec<VertexId> {
    interior_with(g, &Ctx::new(g), cycle)
}

fn interior_with(g: &PlaneGraph, ctx: &Ctx, cycle: &[VertexId]) -> Vec<VertexId> {
    let k = cycle.len();
    let mut mark = Vec::new();
    if k > 4 {
        mark = vec![false; g.capacity()];
        for &c in cycle {
            mark[c] = true;
        }
    }
    let on_cycle = |v: VertexId| if k > 4 { mark[v] } else { cycle.contains(&v) };
    let mut left_seeds = Vec::new();
    let mut right_seeds = Vec::new();
    let mut exterior_left: Option<bool> = None;
    for i in 0..k {
        let v = cycle[i];
        let prev = cycle[(i + k - 1) % k];
        let next = cycle[(i + 1) % k];
        let rot = g.rotation(v);
        let d = rot.len();
        let ip = g.rot_index(v, prev).expect("cycle edge");
        let inx = g.rot_index(v, next).expect("cycle edge");
        let mut j = (ip + 1) % d;
        while j != inx {
            if !on_cycle(rot[j]) {
                left_seeds.push(rot[j]);
            }
            j = (j + 1) % d;
        }
        let mut j = (inx + 1) % d;
        while j != ip {
            if !on_cycle(rot[j]) {
                right_seeds.push(rot[j]);
            }
            j = (j + 1) % d;
        }
        if exterior_left.is_none() && ctx.on[v] {
            if let Some(p) = ctx.outer_pred[v] {
                // the outer corner at v starts just clockwise after p
                let ipp = g.rot_index(v, p).unwrap();
                let in_left = p == prev || (p != next && cw_between(ip, ipp, inx, d));
                exterior_left = Some(in_left);
            }
        }
    }
    let seeds = match (left_seeds.is_empty(), right_seeds.is_empty()) {
        (true, true) => return Vec::new(),
        (false, true) => match exterior_left {
            Some(true) | None => return Vec::new(),
            Some(false) => left_seeds,
        },
        (true, false) => match exterior_left {
            Some(false) | None => return Vec::new(),
            Some(true) => right_seeds,
        },
        (false, false) => match exterior_left {
            Some(true) => right_seeds,
            Some(false) => left_seeds,
            None => {
                let (left, hit) = flood(g, cycle, &left_seeds, Some(&ctx.on));
                if hit {
                    flood(g, cycle, &right_seeds, None).0
                } else {
                    return left;
                }
            }
        },
    };
    flood(g, cycle, &seeds, None).0
}

/// True iff position `x` lies strictly clockwise after `a` and before `b`.
fn cw_between(a: usize, x: usize, b: usize, d: usize) -> bool {
    let off = |y: usize| (y + d - a) % d;
    off(x) > 0 && off(x) < off(b)
}

/// Flood fill avoiding the cycle. Reports whether an `on` vertex was reached.
fn flood(
    g: &PlaneGraph,
    cycle: &[VertexId],
    seeds: &[VertexId],
    on: Option<&[bool]>,
) -> (Vec<VertexId>, bool) {
    let gr = g.graph();
    let mut seen = vec![false; g.capacity()];
    for &c in cycle {
        seen[c] = true;
    }
    let mut queue: VecDeque<VertexId> = VecDeque::new();
    let mut out = Vec::new();
    let mut hit = false;
    for &s in seeds {
        if !seen[s] {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        out.push(v);
        if on.is_some_and(|o| o[v]) {
            hit = true;
        }
        for &w in gr.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    out.sort_unstable();
    (out, hit)
}

/// The first triangle with a vertex in its interior, or failing that the
/// first such 4-cycle.
///
/// Triangles `(a, b, c)` with `a < b < c` are scanned lexicographically.
/// 4-cycles `a, b, c, d` are scanned by diagonal pair `(a, c)` with `a < c`,
/// then by `(b, d)` with `b < d`, all over common neighbors of `a` and `c`.
/// When `a` and `c` have three or more common neighbors one of the first three
/// such cycles has an interior, which bounds the work per pair.
pub fn first_short_cycle_with_interior(g: &PlaneGraph) -> Option<ShortCycle> {
    let ctx = Ctx::new(g);
    let gr = g.graph();
    let n = g.capacity();
    let mut mark = vec![false; n];
    for a in gr.vertices() {
        for &b in gr.neighbors(a) {
            mark[b] = true;
        }
        for &b in gr.neighbors(a).iter().filter(|&&b| b > a) {
            for &c in gr.neighbors(b).iter().filter(|&&c| c > b) {
                if mark[c] {
                    let cycle = vec![a, b, c];
                    let interior = interior_with(g, &ctx, &cycle);
                    if !interior.is_empty() {
                        return Some(ShortCycle { cycle, interior });
                    }
                }
            }
        }
        for &b in gr.neighbors(a) {
            mark[b] = false;
        }
    }
    let mut bucket: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    let mut touched = Vec::new();
    for a in gr.vertices() {
        for &b in gr.neighbors(a) {
            for &c in gr.neighbors(b) {
                if c > a {
                    if bucket[c].is_empty() {
                        touched.push(c);
                    }
                    bucket[c].push(b);
                }
            }
        }
        touched.sort_unstable();
        let mut found = None;
        'pairs: for &c in &touched {
            let bs = &mut bucket[c];
            bs.sort_unstable();
            for i in 0..bs.len() {
                for j in i + 1..bs.len() {
                    let cycle = vec![a, bs[i], c, bs[j]];
                    let interior = interior_with(g, &ctx, &cycle);
                    if !interior.is_empty() {
                        found = Some(ShortCycle { cycle, interior });
                        break 'pairs;
                    }
                }
            }
        }
        if found.is_some() {
            return found;
        }
        for &c in &touched {
            bucket[c].clear();
        }
        touched.clear();
    }
    None
}
