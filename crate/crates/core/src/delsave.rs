//! The DelSave game.
//!
//! A position is a graph together with an integer charge on each live vertex.
//! `DelSave(u, w)` deletes `u` and lowers the charge of every neighbor of `u`
//! by one, except that the neighbor `w` keeps its charge when the charge of
//! `u` exceeds that of `w`. A move is legal when no remaining charge becomes
//! negative. `Delete(u)` is DelSave with no save target.

use std::fmt;

use thiserror::Error;

use crate::graph::{SimpleGraph, VertexId};

/// Charges indexed by vertex id; `None` outside the domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargeFn {
    values: Vec<Option<i64>>,
}

impl ChargeFn {
    /// Empty domain over ids `0..capacity`.
    pub fn new(capacity: usize) -> Self {
        ChargeFn {
            values: vec![None; capacity],
        }
    }

    /// Every live vertex of `g` gets charge `d`.
    pub fn constant(g: &SimpleGraph, d: i64) -> Self {
        let mut f = ChargeFn::new(g.capacity());
        for v in g.vertices() {
            f.set(v, d);
        }
        f
    }

    /// Dense charges, vertex `i` gets `values[i]`.
    pub fn from_values(values: impl IntoIterator<Item = i64>) -> Self {
        ChargeFn {
            values: values.into_iter().map(Some).collect(),
        }
    }

    pub fn capacity(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, v: VertexId) -> Option<i64> {
        self.values.get(v).copied().flatten()
    }

    /// Charge of `v`; panics outside the domain.
    pub fn at(&self, v: VertexId) -> i64 {
        self.get(v)
            .unwrap_or_else(|| panic!("vertex {v} outside the charge domain"))
    }

    pub fn set(&mut self, v: VertexId, x: i64) {
        if v >= self.values.len() {
            self.values.resize(v + 1, None);
        }
        self.values[v] = Some(x);
    }

    pub fn remove(&mut self, v: VertexId) -> Option<i64> {
        self.values.get_mut(v).and_then(Option::take)
    }

    /// Vertices in the domain, ascending.
    pub fn domain(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.values.len()).filter(move |&v| self.values[v].is_some())
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, i64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter_map(|(v, x)| x.map(|x| (v, x)))
    }

    /// True iff both share a domain and `self <= other` everywhere on it.
    pub fn le(&self, other: &ChargeFn) -> bool {
        let n = self.values.len().max(other.values.len());
        (0..n).all(|v| match (self.get(v), other.get(v)) {
            (Some(a), Some(b)) => a <= b,
            (None, None) => true,
            _ => false,
        })
    }

    fn matches_graph(&self, g: &SimpleGraph) -> Result<(), VertexId> {
        let n = self.values.len().max(g.capacity());
        for v in 0..n {
            if g.contains(v) != self.get(v).is_some() {
                return Err(v);
            }
        }
        Ok(())
    }
}

/// One DelSave step. `save: None` is the blank target, i.e. a plain Delete.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Move {
    pub vertex: VertexId,
    pub save: Option<VertexId>,
}

impl Move {
    pub fn delete(u: VertexId) -> Self {
        Move {
            vertex: u,
            save: None,
        }
    }

    pub fn save(u: VertexId, w: VertexId) -> Self {
        Move {
            vertex: u,
            save: Some(w),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.save {
            None => write!(f, "del {}", self.vertex),
            Some(w) => write!(f, "save {} {}", self.vertex, w),
        }
    }
}

/// An ordered move list meant to remove every vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Witness {
    pub moves: Vec<Move>,
}

impl Witness {
    pub fn new(moves: Vec<Move>) -> Self {
        Witness { moves }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn save_count(&self) -> usize {
        self.moves.iter().filter(|m| m.save.is_some()).count()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("vertex {0} is not live")]
    NotLive(VertexId),
    #[error("save target {target} is not a neighbor of {vertex}")]
    BadTarget { vertex: VertexId, target: VertexId },
    #[error("deleting {vertex} drives the charge of {offending} negative")]
    Illegal {
        vertex: VertexId,
        offending: VertexId,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("charge domain does not match the graph at vertex {0}")]
    ChargeDomain(VertexId),
    #[error("initial charge of vertex {0} is negative")]
    NegativeCharge(VertexId),
    #[error("malformed witness: {0}")]
    Malformed(String),
    #[error("step {step}: {source}")]
    Step {
        step: usize,
        #[source]
        source: MoveError,
    },
}

impl VerifyError {
    /// Index of the failing move, if the failure is at a step.
    pub fn step(&self) -> Option<usize> {
        match self {
            VerifyError::Step { step, .. } => Some(*step),
            _ => None,
        }
    }
}

/// A graph with a charge on each live vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Position {
    graph: SimpleGraph,
    charge: ChargeFn,
}

/// What one applied move did.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepRecord {
    pub mv: Move,
    pub charge_before: i64,
    /// True when the target kept its charge.
    pub saved: bool,
    /// Neighbors whose charge dropped, with their new charges.
    pub lowered: Vec<(VertexId, i64)>,
}

impl Position {
    /// Pairs a graph with charges; the charge domain must be the live set.
    pub fn new(graph: SimpleGraph, charge: ChargeFn) -> Result<Self, VerifyError> {
        charge
            .matches_graph(&graph)
            .map_err(VerifyError::ChargeDomain)?;
        Ok(Position { graph, charge })
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn charge(&self) -> &ChargeFn {
        &self.charge
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    fn check_move(&self, u: VertexId, w: Option<VertexId>) -> Result<(), MoveError> {
        if !self.graph.contains(u) {
            return Err(MoveError::NotLive(u));
        }
        if let Some(w) = w {
            if !self.graph.has_edge(u, w) {
                return Err(MoveError::BadTarget {
                    vertex: u,
                    target: w,
                });
            }
        }
        Ok(())
    }

    fn spared(&self, u: VertexId, w: Option<VertexId>) -> Option<VertexId> {
        w.filter(|&w| self.charge.at(u) > self.charge.at(w))
    }

    /// The first neighbor that would go negative, if any.
    fn first_violation(&self, u: VertexId, w: Option<VertexId>) -> Option<VertexId> {
        let spared = self.spared(u, w);
        self.graph
            .neighbors(u)
            .iter()
            .copied()
            .find(|&v| Some(v) != spared && self.charge.at(v) < 1)
    }

    /// Applies a move in place if it is legal.
    pub fn apply(&mut self, mv: Move) -> Result<StepRecord, MoveError> {
        self.check_move(mv.vertex, mv.save)?;
        if let Some(v) = self.first_violation(mv.vertex, mv.save) {
            return Err(MoveError::Illegal {
                vertex: mv.vertex,
                offending: v,
            });
        }
        Ok(self.apply_raw(mv))
    }

    fn apply_raw(&mut self, mv: Move) -> StepRecord {
        let u = mv.vertex;
        let spared = self.spared(u, mv.save);
        let mut lowered = Vec::new();
        for &v in self.graph.neighbors(u) {
            if Some(v) != spared {
                let x = self.charge.at(v) - 1;
                lowered.push((v, x));
            }
        }
        for &(v, x) in &lowered {
            self.charge.set(v, x);
        }
        let charge_before = self.charge.remove(u).unwrap();
        self.graph.remove_vertex(u).unwrap();
        StepRecord {
            mv,
            charge_before,
            saved: spared.is_some(),
            lowered,
        }
    }
}

/// `DelSave(G, f, u, w)`: the position after deleting `u` with save target
/// `w`. Legality is not checked, so the result may hold negative charges.
pub fn del_save(pos: &Position, u: VertexId, w: Option<VertexId>) -> Result<Position, MoveError> {
    pos.check_move(u, w)?;
    let mut next = pos.clone();
    next.apply_raw(Move { vertex: u, save: w });
    Ok(next)
}

/// True iff the move is valid and leaves every remaining charge nonnegative.
pub fn is_legal(pos: &Position, u: VertexId, w: Option<VertexId>) -> bool {
    pos.check_move(u, w).is_ok() && pos.first_violation(u, w).is_none()
}

/// Audit log of a verified run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub initial: ChargeFn,
    pub steps: Vec<StepRecord>,
}

impl Trace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Charges of the remaining vertices after each step.
    pub fn snapshots(&self) -> Vec<ChargeFn> {
        let mut cur = self.initial.clone();
        let mut out = Vec::with_capacity(self.steps.len());
        for s in &self.steps {
            for &(v, x) in &s.lowered {
                cur.set(v, x);
            }
            cur.remove(s.mv.vertex);
            out.push(cur.clone());
        }
        out
    }

    /// One line per step: `step vertex charge_before [target]`, tab separated,
    /// steps numbered from 1.
    pub fn to_lines(&self) -> Vec<String> {
        self.steps
            .iter()
            .enumerate()
            .map(|(i, s)| match s.mv.save {
                None => format!("{}\t{}\t{}", i + 1, s.mv.vertex, s.charge_before),
                Some(w) => format!("{}\t{}\t{}\t{}", i + 1, s.mv.vertex, s.charge_before, w),
            })
            .collect()
    }
}

/// Plays `wit` from `(g, f)`, checking every step.
pub fn verify(g: &SimpleGraph, f: &ChargeFn, wit: &Witness) -> Result<Trace, VerifyError> {
    let mut pos = Position::new(g.clone(), f.clone())?;
    if let Some((v, _)) = f.iter().find(|&(_, x)| x < 0) {
        return Err(VerifyError::NegativeCharge(v));
    }
    let mut count = vec![0usize; g.capacity()];
    for m in &wit.moves {
        if !g.contains(m.vertex) {
            return Err(VerifyError::Malformed(format!(
                "vertex {} is not in the graph",
                m.vertex
            )));
        }
        count[m.vertex] += 1;
        if count[m.vertex] > 1 {
            return Err(VerifyError::Malformed(format!(
                "vertex {} is deleted twice",
                m.vertex
            )));
        }
    }
    if let Some(v) = g.vertices().find(|&v| count[v] == 0) {
        return Err(VerifyError::Malformed(format!("vertex {v} is never deleted")));
    }
    let mut steps = Vec::with_capacity(wit.moves.len());
    for (i, &m) in wit.moves.iter().enumerate() {
        let rec = pos
            .apply(m)
            .map_err(|source| VerifyError::Step { step: i, source })?;
        steps.push(rec);
    }
    Ok(Trace {
        initial: f.clone(),
        steps,
    })
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReuseError {
    #[error("new charges do not dominate the old ones")]
    NotDominated,
    #[error("witness fails under the original charges: {0}")]
    Base(VerifyError),
    #[error("witness fails under the larger charges: {0}")]
    Reuse(VerifyError),
}

/// Checks that a witness legal under `f` stays legal under `f2 >= f`.
pub fn reuse_monotone(
    g: &SimpleGraph,
    f: &ChargeFn,
    f2: &ChargeFn,
    wit: &Witness,
) -> Result<(Trace, Trace), ReuseError> {
    if !f.le(f2) {
        return Err(ReuseError::NotDominated);
    }
    let t1 = verify(g, f, wit).map_err(ReuseError::Base)?;
    let t2 = verify(g, f2, wit).map_err(ReuseError::Reuse)?;
    Ok((t1, t2))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProjectError {
    #[error("not a spanning subgraph: {0}")]
    NotSpanning(String),
    #[error("witness fails on the supergraph: {0}")]
    Super(VerifyError),
    #[error("projected witness fails on the subgraph: {0}")]
    Sub(VerifyError),
}

/// Replaces each save target whose edge is missing from `g_sub` by the blank
/// target. `g_sub` must be a spanning subgraph of `g_super`.
pub fn project(
    wit: &Witness,
    g_super: &SimpleGraph,
    g_sub: &SimpleGraph,
    f: &ChargeFn,
) -> Result<Witness, ProjectError> {
    if g_sub.vertices().ne(g_super.vertices()) {
        return Err(ProjectError::NotSpanning("vertex sets differ".into()));
    }
    if let Some((u, v)) = g_sub.edges().find(|&(u, v)| !g_super.has_edge(u, v)) {
        return Err(ProjectError::NotSpanning(format!(
            "edge {u}-{v} missing from the supergraph"
        )));
    }
    verify(g_super, f, wit).map_err(ProjectError::Super)?;
    let out = project_unchecked(wit, g_sub);
    verify(g_sub, f, &out).map_err(ProjectError::Sub)?;
    Ok(out)
}

pub(crate) fn project_unchecked(wit: &Witness, g_sub: &SimpleGraph) -> Witness {
    Witness::new(
        wit.moves
            .iter()
            .map(|m| Move {
                vertex: m.vertex,
                save: m.save.filter(|&w| g_sub.has_edge(m.vertex, w)),
            })
            .collect(),
    )
}

/// True iff both traces delete the same vertices in the same order and, after
/// every step, each remaining vertex has at least as much charge in the
/// subgraph run as in the supergraph run.
pub fn dominance_check(trace_sub: &Trace, trace_super: &Trace) -> bool {
    if trace_sub.len() != trace_super.len()
        || trace_sub
            .steps
            .iter()
            .zip(&trace_super.steps)
            .any(|(a, b)| a.mv.vertex != b.mv.vertex)
    {
        return false;
    }
    if !trace_super.initial.le(&trace_sub.initial) {
        return false;
    }
    trace_sub
        .snapshots()
        .iter()
        .zip(trace_super.snapshots().iter())
        .all(|(s, p)| p.le(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> SimpleGraph {
        SimpleGraph::from_edges(2, [(0, 1)]).unwrap()
    }

    fn path3() -> SimpleGraph {
        SimpleGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn c4() -> SimpleGraph {
        SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn save_triggers_only_on_strictly_larger_charge() {
        let pos = Position::new(k2(), ChargeFn::from_values([1, 0])).unwrap();
        let next = del_save(&pos, 0, Some(1)).unwrap();
        assert_eq!(next.charge().get(1), Some(0));
        let pos = Position::new(k2(), ChargeFn::from_values([1, 1])).unwrap();
        let next = del_save(&pos, 0, Some(1)).unwrap();
        assert_eq!(next.charge().get(1), Some(0));
        let single = Position::new(SimpleGraph::new(1), ChargeFn::from_values([0])).unwrap();
        assert!(del_save(&single, 0, None).unwrap().is_empty());
        assert_eq!(
            del_save(&pos, 0, Some(0)),
            Err(MoveError::BadTarget {
                vertex: 0,
                target: 0
            })
        );
    }

    #[test]
    fn legality_examples() {
        let p = Position::new(path3(), ChargeFn::from_values([0, 0, 0])).unwrap();
        assert!(!is_legal(&p, 1, None));
        let p = Position::new(path3(), ChargeFn::from_values([1, 0, 1])).unwrap();
        assert!(is_legal(&p, 1, None));
        let p = Position::new(k2(), ChargeFn::from_values([1, 0])).unwrap();
        assert!(is_legal(&p, 0, Some(1)));
        assert!(!is_legal(&p, 0, None));
    }

    #[test]
    fn verify_examples() {
        let all_delete = Witness::new((0..4).map(Move::delete).collect());
        assert!(verify(&c4(), &ChargeFn::constant(&c4(), 2), &all_delete).is_ok());
        let err = verify(&c4(), &ChargeFn::constant(&c4(), 1), &all_delete).unwrap_err();
        // 0 and 1 go first, then 2 would push 3 below zero
        assert_eq!(err.step(), Some(2));
        let wit = Witness::new(vec![Move::save(0, 1), Move::delete(1)]);
        let t = verify(&k2(), &ChargeFn::from_values([1, 0]), &wit).unwrap();
        assert!(t.steps[0].saved);
        assert_eq!(t.to_lines(), vec!["1\t0\t1\t1", "2\t1\t0"]);
    }

    #[test]
    fn verify_rejects_bad_coverage() {
        let f = ChargeFn::constant(&k2(), 1);
        let twice = Witness::new(vec![Move::delete(0), Move::delete(0)]);
        assert!(matches!(verify(&k2(), &f, &twice), Err(VerifyError::Malformed(_))));
        let short = Witness::new(vec![Move::delete(0)]);
        assert!(matches!(verify(&k2(), &f, &short), Err(VerifyError::Malformed(_))));
        let bad = ChargeFn::from_values([1]);
        assert!(matches!(
            verify(&k2(), &bad, &short),
            Err(VerifyError::ChargeDomain(1))
        ));
    }

    #[test]
    fn false_part_regression_on_k2() {
        // the same two moves are legal from (1,0) and from (1,1), and w is at 0
        // when it is deleted in both runs
        let wit = Witness::new(vec![Move::save(0, 1), Move::delete(1)]);
        let f = ChargeFn::from_values([1, 0]);
        let f2 = ChargeFn::from_values([1, 1]);
        let (t1, t2) = reuse_monotone(&k2(), &f, &f2, &wit).unwrap();
        assert_eq!(t1.steps[1].charge_before, 0);
        assert_eq!(t2.steps[1].charge_before, 0);
        assert!(t1.steps[0].saved);
        assert!(!t2.steps[0].saved);
    }

    #[test]
    fn monotone_reuse_examples() {
        let wit = Witness::new(vec![Move::save(0, 1), Move::delete(1)]);
        let f = ChargeFn::from_values([1, 0]);
        let (a, b) = reuse_monotone(&k2(), &f, &f, &wit).unwrap();
        assert_eq!(a, b);
        let c5 = SimpleGraph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let w = Witness::new((0..5).map(Move::delete).collect());
        assert!(reuse_monotone(&c5, &ChargeFn::constant(&c5, 2), &ChargeFn::constant(&c5, 3), &w)
            .is_ok());
        assert_eq!(
            reuse_monotone(&c5, &ChargeFn::constant(&c5, 3), &ChargeFn::constant(&c5, 2), &w),
            Err(ReuseError::NotDominated)
        );
    }

    #[test]
    fn projection_examples() {
        // triangle 0,1,2 with f = 1 and witness save(0,1), del 1, del 2
        let tri = SimpleGraph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let f = ChargeFn::constant(&tri, 1);
        let wit = Witness::new(vec![Move::save(0, 1), Move::delete(1), Move::delete(2)]);
        let sup = verify(&tri, &f, &wit);
        // f(0) = f(1), so the save fails and 2 drops to 0 then -1: illegal
        assert!(sup.is_err());
        let f = ChargeFn::from_values([2, 1, 2]);
        verify(&tri, &f, &wit).unwrap();
        let sub = SimpleGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let p = project(&wit, &tri, &sub, &f).unwrap();
        assert_eq!(p, wit);
        let ts = verify(&sub, &f, &p).unwrap();
        let tp = verify(&tri, &f, &wit).unwrap();
        assert!(dominance_check(&ts, &tp));

        // K2 plus isolated z, dropping the edge turns the save into a delete
        let g = SimpleGraph::from_edges(3, [(0, 1)]).unwrap();
        let f = ChargeFn::from_values([1, 0, 0]);
        let wit = Witness::new(vec![Move::save(0, 1), Move::delete(1), Move::delete(2)]);
        let sub = SimpleGraph::new(3);
        let p = project(&wit, &g, &sub, &f).unwrap();
        assert_eq!(p.moves[0], Move::delete(0));
        let ts = verify(&sub, &f, &p).unwrap();
        let tp = verify(&g, &f, &wit).unwrap();
        assert!(dominance_check(&ts, &tp));
    }
}
