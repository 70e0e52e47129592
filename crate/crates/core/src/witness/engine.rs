//! Rule engine turning an instance into a DelSave witness.
//!
//! The engine keeps a work stack of pending subinstances and move blocks. A
//! rule inspects the instance on top, emits moves, and schedules smaller
//! subinstances. Moves are played at once on a running position over the
//! root `G - S`, so every subinstance can be checked against the charges it
//! will actually start from.

use std::fmt;

use thiserror::Error;

use crate::delsave::{verify, ChargeFn, Move, MoveError, Position, VerifyError, Witness};
use crate::graph::VertexId;
use crate::plane::{cycle_interior, first_short_cycle_with_interior, EmbedError, PlaneGraph};

use super::instance::{make_instance, Instance, InstanceError};

/// Names of the reduction rules, in priority order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    /// `G - S` is empty.
    R1,
    /// `G` is disconnected.
    R2,
    /// `|S| <= 1`: move a boundary vertex into `S`.
    R3,
    /// Cut vertex.
    R4,
    /// Chord of the outer cycle.
    R5,
    /// `I` can grow.
    R6,
    /// `G` is a cycle.
    R7,
    /// Triangle or 4-cycle with vertices inside.
    R8,
    /// Inner face of length at least 4.
    R9,
    /// `|S| = 2`.
    R10,
    /// 2-chord.
    R11,
    /// `v1` in `I`.
    R12,
    /// `v4` not in `I`.
    R13,
    /// No usable `x`.
    R14,
    /// No usable `y`.
    R15,
    /// The final configuration.
    R16,
}

impl RuleId {
    pub const ALL: [RuleId; 16] = [
        RuleId::R1,
        RuleId::R2,
        RuleId::R3,
        RuleId::R4,
        RuleId::R5,
        RuleId::R6,
        RuleId::R7,
        RuleId::R8,
        RuleId::R9,
        RuleId::R10,
        RuleId::R11,
        RuleId::R12,
        RuleId::R13,
        RuleId::R14,
        RuleId::R15,
        RuleId::R16,
    ];

    /// 1 for `R1` up to 16 for `R16`.
    pub fn number(self) -> usize {
        self as usize + 1
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R{}", self.number())
    }
}

/// One rule application with the size of the instance it fired on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleFiring {
    pub rule: RuleId,
    pub n: usize,
    pub m: usize,
    pub s: usize,
    pub i: usize,
}

impl fmt::Display for RuleFiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {} {}", self.rule, self.n, self.m, self.s, self.i)
    }
}

#[derive(Clone, Debug)]
pub struct EngineOutput {
    pub witness: Witness,
    pub trace: Vec<RuleFiring>,
}

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("{rule} produced an invalid subinstance: {source}")]
    BadSubinstance {
        rule: RuleId,
        #[source]
        source: InstanceError,
    },
    #[error("{rule} produced a subinstance that is not smaller")]
    NoProgress { rule: RuleId },
    #[error("{rule}: vertex {vertex} has charge {have:?} but its subinstance needs {need}")]
    ChargeShortfall {
        rule: RuleId,
        vertex: VertexId,
        have: Option<i64>,
        need: i64,
    },
    #[error("{rule} emitted an illegal move: {source}")]
    IllegalMove {
        rule: RuleId,
        #[source]
        source: MoveError,
    },
    #[error("{rule}: {msg}")]
    Broken { rule: RuleId, msg: String },
    #[error("no rule applies to {0:?}")]
    Stuck(Box<Instance>),
    #[error("edge insertion failed: {0}")]
    Embed(#[from] EmbedError),
    #[error("final witness rejected: {0}")]
    Verify(#[from] VerifyError),
}

/// `(|V|, 3|V| - 6 - |E|, 3 - |S|, |V(bd G) - S| - |I|)`, compared
/// lexicographically.
type Measure = (usize, i64, i64, i64);

fn measure(inst: &Instance) -> Measure {
    let g = inst.graph();
    let n = g.vertex_count() as i64;
    let m = g.edge_count() as i64;
    let b = inst.boundary();
    let free = b.vertices().iter().filter(|&&v| !inst.in_s(v)).count() as i64;
    (
        g.vertex_count(),
        3 * n - 6 - m,
        3 - inst.s().len() as i64,
        free - inst.i().len() as i64,
    )
}

enum Piece {
    Sub(PlaneGraph, Vec<VertexId>, Vec<VertexId>),
    Moves(Vec<Move>),
}

enum Work {
    Solve {
        g: PlaneGraph,
        s: Vec<VertexId>,
        i: Vec<VertexId>,
        origin: RuleId,
        bound: Measure,
    },
    Emit {
        origin: RuleId,
        moves: Vec<Move>,
    },
}

struct Engine {
    pos: Position,
    moves: Vec<Move>,
    trace: Vec<RuleFiring>,
}

/// Builds a witness that `G - S` is weakly `f`-degenerate, where `f` is the
/// instance charge. The result is verified before it is returned.
pub fn witness(inst: &Instance) -> Result<EngineOutput, EngineError> {
    let residual = inst.residual();
    let pos = Position::new(residual.clone(), inst.charges().clone())?;
    let mut eng = Engine {
        pos,
        moves: Vec::new(),
        trace: Vec::new(),
    };
    let mut stack: Vec<Work> = Vec::new();
    eng.solve(inst.clone(), &mut stack)?;
    while let Some(w) = stack.pop() {
        match w {
            Work::Solve {
                g,
                s,
                i,
                origin,
                bound,
            } => {
                let sub = make_instance(g, &s, &i)
                    .map_err(|source| EngineError::BadSubinstance { rule: origin, source })?;
                if measure(&sub) >= bound {
                    return Err(EngineError::NoProgress { rule: origin });
                }
                eng.check_charges(&sub, origin)?;
                eng.solve(sub, &mut stack)?;
            }
            Work::Emit { origin, moves } => eng.play(&moves, origin)?,
        }
    }
    let witness = Witness::new(eng.moves);
    verify(&residual, inst.charges(), &witness)?;
    Ok(EngineOutput {
        witness,
        trace: eng.trace,
    })
}

/// A witness that the plane graph `g` is weakly 4-degenerate, verified under
/// the constant charge 4.
pub fn witness_planar_4(g: &PlaneGraph) -> Result<EngineOutput, EngineError> {
    let inst = make_instance(g.clone(), &[], &[]).expect("empty S and I are always valid");
    let out = witness(&inst)?;
    verify(g.graph(), &ChargeFn::constant(g.graph(), 4), &out.witness)?;
    Ok(out)
}

impl Engine {
    fn check_charges(&self, sub: &Instance, rule: RuleId) -> Result<(), EngineError> {
        for (v, need) in sub.charges().iter() {
            let have = self.pos.charge().get(v);
            if have.is_none_or(|h| h < need) {
                return Err(EngineError::ChargeShortfall {
                    rule,
                    vertex: v,
                    have,
                    need,
                });
            }
        }
        if let Some(&v) = sub.s().iter().find(|&&v| self.pos.graph().contains(v)) {
            return Err(EngineError::Broken {
                rule,
                msg: format!("S vertex {v} has not been deleted"),
            });
        }
        Ok(())
    }

    fn play(&mut self, moves: &[Move], rule: RuleId) -> Result<(), EngineError> {
        for &m in moves {
            // a save along an edge that only exists in a supergraph becomes blank
            let save = m.save.filter(|&w| self.pos.graph().has_edge(m.vertex, w));
            let eff = Move {
                vertex: m.vertex,
                save,
            };
            self.pos
                .apply(eff)
                .map_err(|source| EngineError::IllegalMove { rule, source })?;
            self.moves.push(eff);
        }
        Ok(())
    }

    fn solve(&mut self, inst: Instance, stack: &mut Vec<Work>) -> Result<(), EngineError> {
        let bound = measure(&inst);
        let (rule, pieces) = apply_rule(&inst)?;
        self.trace.push(RuleFiring {
            rule,
            n: inst.graph().vertex_count(),
            m: inst.graph().edge_count(),
            s: inst.s().len(),
            i: inst.i().len(),
        });
        for p in pieces.into_iter().rev() {
            stack.push(match p {
                Piece::Sub(g, s, i) => Work::Solve {
                    g,
                    s,
                    i,
                    origin: rule,
                    bound,
                },
                Piece::Moves(moves) => Work::Emit {
                    origin: rule,
                    moves,
                },
            });
        }
        Ok(())
    }
}

fn mask_of(cap: usize, vs: impl IntoIterator<Item = VertexId>) -> Vec<bool> {
    let mut m = vec![false; cap];
    for v in vs {
        m[v] = true;
    }
    m
}

fn restrict(set: &[VertexId], mask: &[bool]) -> Vec<VertexId> {
    set.iter().copied().filter(|&v| mask[v]).collect()
}

fn without(set: &[VertexId], drop: &[VertexId]) -> Vec<VertexId> {
    set.iter().copied().filter(|v| !drop.contains(v)).collect()
}

fn with(set: &[VertexId], add: &[VertexId]) -> Vec<VertexId> {
    let mut out = set.to_vec();
    for &v in add {
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out.sort_unstable();
    out
}

/// Index in `walk` of the first vertex of the `S` block.
fn s_block_start(walk: &[VertexId], inst: &Instance) -> usize {
    let k = walk.len();
    (0..k)
        .find(|&j| inst.in_s(walk[j]) && !inst.in_s(walk[(j + k - 1) % k]))
        .unwrap_or(0)
}

fn broken(rule: RuleId, msg: impl Into<String>) -> EngineError {
    EngineError::Broken {
        rule,
        msg: msg.into(),
    }
}

fn apply_rule(inst: &Instance) -> Result<(RuleId, Vec<Piece>), EngineError> {
    use Piece::{Moves, Sub};
    use RuleId::*;

    let g = inst.graph();
    let gr = g.graph();
    let cap = g.capacity();
    let b = inst.boundary();
    let s = inst.s();
    let i = inst.i();

    if inst.charges().domain().next().is_none() {
        return Ok((R1, Vec::new()));
    }

    let comps = gr.components();
    if comps.len() > 1 {
        let pieces = comps
            .iter()
            .map(|c| {
                let m = mask_of(cap, c.iter().copied());
                Sub(g.induced(&m), restrict(s, &m), restrict(i, &m))
            })
            .collect();
        return Ok((R2, pieces));
    }

    if s.len() <= 1 {
        let u = match s.first() {
            None => b.vertices()[0],
            Some(&x) => *gr
                .neighbors(x)
                .iter()
                .find(|&&w| b.has_edge(x, w))
                .ok_or_else(|| broken(R3, "S vertex without boundary edge"))?,
        };
        return Ok((
            R3,
            vec![
                Moves(vec![Move::delete(u)]),
                Sub(g.clone(), with(s, &[u]), without(i, &[u])),
            ],
        ));
    }

    if let Some(&u) = gr.cut_vertices().first() {
        let mut keep = mask_of(cap, gr.vertices());
        keep[u] = false;
        let parts = gr.induced(&keep).components();
        let best = parts
            .iter()
            .min_by_key(|c| (c.iter().filter(|&&v| inst.in_s(v)).count(), c[0]))
            .unwrap();
        let mut m2 = mask_of(cap, best.iter().copied());
        m2[u] = true;
        let mut m1 = mask_of(cap, gr.vertices());
        for &v in best {
            m1[v] = false;
        }
        let s2 = if inst.in_s(u) { restrict(s, &m2) } else { vec![u] };
        return Ok((
            R4,
            vec![
                Sub(g.induced(&m1), restrict(s, &m1), restrict(i, &m1)),
                Sub(g.induced(&m2), s2, without(&restrict(i, &m2), &[u])),
            ],
        ));
    }

    // 2-connected from here on, so the outer boundary is a cycle
    let walk = b.walks[0].clone();
    let k = walk.len();
    let mut at = vec![usize::MAX; cap];
    for (j, &v) in walk.iter().enumerate() {
        at[v] = j;
    }
    let on = &b.on;

    // the side of the cycle closed by the path `close` from walk[to] back to
    // walk[from], including the arc walk[from..=to]
    let region = |from: usize, to: usize, close: &[VertexId]| -> Vec<bool> {
        let mut cyc = Vec::new();
        let mut j = from;
        loop {
            cyc.push(walk[j]);
            if j == to {
                break;
            }
            j = (j + 1) % k;
        }
        cyc.extend_from_slice(close);
        let inside = cycle_interior(g, &cyc);
        mask_of(cap, cyc.into_iter().chain(inside))
    };

    // a chord side is usable as G1 when every chord endpoint outside S keeps
    // all of its S-neighbors; only a tie in |S| leaves a choice
    let in_s = mask_of(cap, s.iter().copied());
    let keeps_s = |side: &[VertexId], a: VertexId, c: VertexId| {
        let m = mask_of(cap, side.iter().copied());
        [a, c].iter().filter(|&&p| !in_s[p]).all(|&p| {
            gr.neighbors(p).iter().all(|&w| !in_s[w] || m[w])
        })
    };
    // no vertex of I on the far side may see all of its new S
    let i_fits = |side: &[VertexId], a: VertexId, c: VertexId| {
        let m = mask_of(cap, side.iter().copied());
        let s2 = |w: VertexId| m[w] && (in_s[w] || w == a || w == c);
        i.iter()
            .filter(|&&v| m[v] && v != a && v != c)
            .all(|&v| gr.neighbors(v).iter().filter(|&&w| s2(w)).count() < 3)
    };
    type Split = (Vec<VertexId>, Vec<VertexId>, VertexId, VertexId);
    let mut best: Option<Split> = None;
    let mut fallback: Option<Split> = None;
    for (a, c) in gr.edges() {
        if !(on[a] && on[c]) || b.has_edge(a, c) {
            continue;
        }
        let m1 = region(at[a], at[c], &[]);
        let side_a: Vec<VertexId> = gr.vertices().filter(|&v| m1[v]).collect();
        let side_b: Vec<VertexId> = gr
            .vertices()
            .filter(|&v| !m1[v] || v == a || v == c)
            .collect();
        let tie = side_a.iter().filter(|&&v| in_s[v]).count()
            == side_b.iter().filter(|&&v| in_s[v]).count();
        let (s1, s2) = crate::plane::orient_sides(side_a, side_b, &in_s);
        let mut options = vec![(s1.clone(), s2.clone())];
        if tie {
            options.push((s2, s1));
        }
        for (s1, s2) in options {
            if !keeps_s(&s1, a, c) || !i_fits(&s2, a, c) {
                if fallback.is_none() {
                    fallback = Some((s1, s2, a, c));
                }
                continue;
            }
            if best.as_ref().is_none_or(|bst| s1.len() > bst.0.len()) {
                best = Some((s1, s2, a, c));
            }
        }
    }
    if let Some((s1, s2, a, c)) = best {
        let m1 = mask_of(cap, s1);
        let m2 = mask_of(cap, s2);
        return Ok((
            R5,
            vec![
                Sub(g.induced(&m1), restrict(s, &m1), restrict(i, &m1)),
                Sub(
                    g.induced(&m2),
                    with(&restrict(s, &m2), &[a, c]),
                    without(&restrict(i, &m2), &[a, c]),
                ),
            ],
        ));
    }
    if let Some((s1, s2, a, c)) = fallback {
        // the free chord endpoint sees S on both sides: delete it first and
        // put it into S on each side
        let w = if in_s[a] { c } else { a };
        let m1 = mask_of(cap, s1);
        let m2 = mask_of(cap, s2);
        return Ok((
            R5,
            vec![
                Moves(vec![Move::delete(w)]),
                Sub(
                    g.induced(&m1),
                    with(&restrict(s, &m1), &[w]),
                    without(&restrict(i, &m1), &[w]),
                ),
                Sub(
                    g.induced(&m2),
                    with(&restrict(s, &m2), &[w]),
                    without(&restrict(i, &m2), &[w]),
                ),
            ],
        ));
    }

    let deg_s = |v: VertexId| gr.neighbors(v).iter().filter(|&&w| inst.in_s(w)).count();
    for u in b.vertices() {
        if inst.in_s(u) || inst.in_i(u) {
            continue;
        }
        if gr.neighbors(u).iter().any(|&w| inst.in_i(w)) || deg_s(u) >= 3 {
            continue;
        }
        return Ok((R6, vec![Sub(g.clone(), s.to_vec(), with(i, &[u]))]));
    }

    let start = s_block_start(&walk, inst);
    if gr.vertices().all(|v| on[v]) {
        let moves = (0..k)
            .map(|j| walk[(start + s.len() + j) % k])
            .filter(|&v| !inst.in_s(v))
            .map(Move::delete)
            .collect();
        return Ok((R7, vec![Moves(moves)]));
    }

    if let Some(sc) = first_short_cycle_with_interior(g) {
        let a = *sc.cycle.iter().min().unwrap();
        let mut keep = mask_of(cap, gr.vertices());
        for &v in &sc.interior {
            keep[v] = false;
        }
        let s_star: Vec<VertexId> = sc.cycle.iter().copied().filter(|&v| v != a).collect();
        let m_star = mask_of(cap, sc.interior.iter().chain(&s_star).copied());
        return Ok((
            R8,
            vec![
                Sub(g.induced(&keep), s.to_vec(), i.to_vec()),
                Sub(g.induced(&m_star), s_star, Vec::new()),
            ],
        ));
    }

    let long_face = g
        .inner_faces()
        .into_iter()
        .filter(|f| f.len() >= 4)
        .map(|f| {
            let p = (0..f.len()).min_by_key(|&j| f[j]).unwrap();
            let mut r = f[p..].to_vec();
            r.extend_from_slice(&f[..p]);
            r
        })
        .min();
    if let Some(face) = long_face {
        let fk = face.len();
        let p = (0..fk)
            .filter(|&j| !on[face[j]])
            .min_by_key(|&j| face[j])
            .ok_or_else(|| broken(R9, "long inner face on the boundary"))?;
        let v = |d: usize| face[(p + d) % fk];
        let (u, w) = if !gr.has_edge(v(0), v(2)) {
            (v(0), v(2))
        } else if !gr.has_edge(v(1), v(3)) {
            (v(1), v(3))
        } else {
            return Err(broken(R9, "both diagonals present"));
        };
        let g2 = g.add_edge_in_face(u, w, &face)?;
        return Ok((R9, vec![Sub(g2, s.to_vec(), i.to_vec())]));
    }

    if s.len() == 2 {
        let before = walk[(start + k - 1) % k];
        let after = walk[(start + 2) % k];
        let u = before.min(after);
        return Ok((
            R10,
            vec![
                Moves(vec![Move::delete(u)]),
                Sub(g.clone(), with(s, &[u]), without(i, &[u])),
            ],
        ));
    }

    let u2 = walk[(start + 1) % k];
    for x in b.vertices() {
        for &y in gr.neighbors(x).iter().filter(|&&y| !on[y]) {
            for &z in gr.neighbors(y).iter().filter(|&&z| on[z] && z > x) {
                if gr.has_edge(x, z) || u2 == x || u2 == z {
                    continue;
                }
                // the arc from x to z that avoids u2 bounds the second side
                let (from, to) = {
                    let (px, pz, pu) = (at[x], at[z], at[u2]);
                    let fwd_has_u2 = (pu + k - px) % k < (pz + k - px) % k;
                    if fwd_has_u2 { (pz, px) } else { (px, pz) }
                };
                let inner: Vec<VertexId> = {
                    let mut v = Vec::new();
                    let mut j = (from + 1) % k;
                    while j != to {
                        v.push(walk[j]);
                        j = (j + 1) % k;
                    }
                    v
                };
                if let [a] = inner[..] {
                    if inst.in_i(a) && gr.has_edge(a, y) {
                        continue;
                    }
                }
                let m2 = region(from, to, &[y]);
                let mut m1 = mask_of(cap, gr.vertices());
                for v in gr.vertices() {
                    if m2[v] && v != x && v != y && v != z {
                        m1[v] = false;
                    }
                }
                let mut xyz = vec![x, y, z];
                xyz.sort_unstable();
                return Ok((
                    R11,
                    vec![
                        Sub(g.induced(&m1), s.to_vec(), restrict(i, &m1)),
                        Sub(g.induced(&m2), xyz, without(&restrict(i, &m2), &[x, z])),
                    ],
                ));
            }
        }
    }

    if s.len() != 3 || k < 5 {
        return Err(broken(R12, format!("expected |S| = 3 and a boundary of length at least 5, got {} and {k}", s.len())));
    }
    let t = k - 3;
    // v(j) for 1 <= j <= t + 1 in the given direction; v(t + 1) is u1
    let wr = &walk;
    let label = |rev: bool| {
        move |j: usize| -> VertexId {
            if rev {
                wr[(start + k - j) % k]
            } else {
                wr[(start + 2 + j) % k]
            }
        }
    };

    for rev in [false, true] {
        let v = label(rev);
        if !inst.in_i(v(1)) {
            continue;
        }
        let (v1, v2, v3) = (v(1), v(2), v(3));
        if !inst.in_i(v3) {
            return Ok((
                R12,
                vec![
                    Moves(vec![Move::delete(v1)]),
                    Sub(g.delete_vertices(&[v1]), s.to_vec(), with(&without(i, &[v1]), &[v2])),
                ],
            ));
        }
        let common: Vec<VertexId> = gr
            .neighbors(v1)
            .iter()
            .copied()
            .filter(|&w| gr.has_edge(v2, w))
            .collect();
        let mut i2 = without(i, &[v1]);
        if let Some(&u) = common.first() {
            if inst.in_s(u) {
                return Err(broken(R12, format!("common neighbor {u} of v1 and v2 lies in S")));
            }
            i2 = with(&i2, &[u]);
        }
        return Ok((
            R12,
            vec![
                Moves(vec![Move::save(v2, v3), Move::delete(v1)]),
                Sub(g.delete_vertices(&[v1, v2]), s.to_vec(), i2),
            ],
        ));
    }

    let v = label(false);
    if t < 3 {
        return Err(broken(R13, "boundary too short after R12"));
    }
    let (v1, v2, v3, v4) = (v(1), v(2), v(3), v(4));
    if !inst.in_i(v2) {
        return Err(broken(R13, format!("v2 = {v2} is not in I")));
    }
    if !inst.in_i(v4) {
        return Ok((
            R13,
            vec![
                Moves(vec![Move::delete(v2)]),
                Sub(g.delete_vertices(&[v2]), s.to_vec(), with(&without(i, &[v2]), &[v1, v3])),
            ],
        ));
    }

    let inner_common = |p: VertexId, q: VertexId| {
        gr.neighbors(p)
            .iter()
            .copied()
            .find(|&w| !on[w] && gr.has_edge(q, w))
    };
    let i_base = with(&without(i, &[v2]), &[v1]);

    let x = match inner_common(v2, v3) {
        Some(x) if gr.has_edge(x, v1) => x,
        other => {
            let i2 = match other {
                Some(x) => with(&i_base, &[x]),
                None => i_base,
            };
            return Ok((
                R14,
                vec![
                    Moves(vec![Move::save(v3, v4), Move::delete(v2)]),
                    Sub(g.delete_vertices(&[v2, v3]), s.to_vec(), i2),
                ],
            ));
        }
    };
    if let Some(&w) = gr
        .neighbors(x)
        .iter()
        .find(|&&w| on[w] && w != v1 && w != v2 && w != v3)
    {
        return Err(broken(R15, format!("x = {x} has another boundary neighbor {w}")));
    }

    let y = match inner_common(v3, x) {
        Some(y) if gr.has_edge(y, v4) => y,
        other => {
            let i2 = match other {
                Some(y) => with(&i_base, &[y]),
                None => i_base,
            };
            return Ok((
                R15,
                vec![
                    Moves(vec![Move::save(v3, v4), Move::save(x, v2)]),
                    Sub(g.delete_vertices(&[v2, v3, x]), s.to_vec(), i2),
                    Moves(vec![Move::delete(v2)]),
                ],
            ));
        }
    };

    let mut n2 = vec![v1, x, v3];
    n2.sort_unstable();
    let mut n3 = vec![v2, x, y, v4];
    n3.sort_unstable();
    if gr.neighbors(v2) != n2.as_slice() || gr.neighbors(v3) != n3.as_slice() {
        return Err(EngineError::Stuck(Box::new(inst.clone())));
    }
    Ok((
        R16,
        vec![
            Moves(vec![Move::save(x, v2)]),
            Sub(g.delete_vertices(&[v2, v3, x]), s.to_vec(), i_base),
            Moves(vec![Move::delete(v3), Move::delete(v2)]),
        ],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::tests::{cycle, k4, wheel};

    fn run(g: PlaneGraph, s: &[VertexId], i: &[VertexId]) -> EngineOutput {
        let inst = make_instance(g, s, i).unwrap();
        witness(&inst).unwrap()
    }

    #[test]
    fn triangle_all_in_s_is_empty() {
        let out = run(cycle(3), &[0, 1, 2], &[]);
        assert!(out.witness.is_empty());
        assert_eq!(out.trace[0].rule, RuleId::R1);
    }

    #[test]
    fn five_cycle_peels_a_path() {
        let out = run(cycle(5), &[0, 1, 2], &[3]);
        assert_eq!(out.witness.len(), 2);
        assert_eq!(out.trace.last().unwrap().rule, RuleId::R7);
    }

    #[test]
    fn wheels_and_k4() {
        for k in 3..=12 {
            let out = witness_planar_4(&wheel(k)).unwrap();
            assert_eq!(out.witness.len(), k + 1);
        }
        witness_planar_4(&k4()).unwrap();
    }

    #[test]
    fn rule_names() {
        assert_eq!(RuleId::R16.to_string(), "R16");
        let f = RuleFiring {
            rule: RuleId::R5,
            n: 7,
            m: 12,
            s: 3,
            i: 1,
        };
        assert_eq!(f.to_string(), "R5 7 12 3 1");
    }
}
