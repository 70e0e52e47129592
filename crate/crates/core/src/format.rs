//! Text formats.
//!
//! * `.sg`: `n m`, then `m` lines `u v` with `u < v`.
//! * `.pg`: `n`, then one line `v: w1 w2 ...` per vertex giving its clockwise
//!   rotation, then `outer: v0 v1 ...` with the outer walk. A disconnected
//!   graph has one `outer:` line per component; an isolated vertex is its own
//!   walk.
//! * `.wit`: one move per line, `del u` or `save u w`.
//! * `.lst`: `v: c1 c2 ...`.
//!
//! Blank lines and lines starting with `#` are skipped everywhere.

use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::{Color, Coloring, ListAssignment};
use crate::delsave::{ChargeFn, Move, Witness};
use crate::graph::{SimpleGraph, VertexId};
use crate::plane::PlaneGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct FormatError {
    /// 1-based; 0 when the problem is not tied to one line.
    pub line: usize,
    pub msg: String,
}

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError {
        line,
        msg: msg.into(),
    })
}

/// Content lines with their 1-based numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn num<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T, FormatError> {
    tok.parse()
        .or_else(|_| err(line, format!("{what}: expected a number, got {tok:?}")))
}

fn nums<T: std::str::FromStr>(s: &str, line: usize, what: &str) -> Result<Vec<T>, FormatError> {
    s.split_whitespace().map(|t| num(t, line, what)).collect()
}

pub fn parse_sg(text: &str) -> Result<SimpleGraph, FormatError> {
    let mut it = lines(text);
    let Some((l0, head)) = it.next() else {
        return err(0, "empty file");
    };
    let hv: Vec<usize> = nums(head, l0, "header")?;
    let [n, m] = hv[..] else {
        return err(l0, "header must be `n m`");
    };
    let mut g = SimpleGraph::new(n);
    let mut count = 0;
    for (ln, l) in it {
        let e: Vec<usize> = nums(l, ln, "edge")?;
        let [u, v] = e[..] else {
            return err(ln, "edge must be `u v`");
        };
        if u >= v {
            return err(ln, format!("edge {u} {v}: need u < v"));
        }
        if v >= n {
            return err(ln, format!("vertex {v} out of range for n = {n}"));
        }
        if g.add_edge(u, v).is_err() {
            return err(ln, format!("edge {u} {v} listed twice"));
        }
        count += 1;
    }
    if count != m {
        return err(0, format!("header says {m} edges, found {count}"));
    }
    Ok(g)
}

pub fn write_sg(g: &SimpleGraph, header: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(h) = header {
        writeln!(out, "{h}").unwrap();
    }
    writeln!(out, "{} {}", g.capacity(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Splits `key: rest` and returns both halves.
fn keyed(l: &str, line: usize) -> Result<(&str, &str), FormatError> {
    match l.split_once(':') {
        Some((k, r)) => Ok((k.trim(), r)),
        None => err(line, "expected `key: values`"),
    }
}

pub fn parse_pg(text: &str) -> Result<PlaneGraph, FormatError> {
    let mut it = lines(text);
    let Some((l0, head)) = it.next() else {
        return err(0, "empty file");
    };
    let n: usize = num(head, l0, "vertex count")?;
    let mut rot: Vec<Option<Vec<VertexId>>> = vec![None; n];
    let mut walks = Vec::new();
    let mut outer_line = 0;
    for (ln, l) in it {
        let (k, rest) = keyed(l, ln)?;
        let vals: Vec<VertexId> = nums(rest, ln, k)?;
        if let Some(&w) = vals.iter().find(|&&w| w >= n) {
            return err(ln, format!("vertex {w} out of range for n = {n}"));
        }
        if k == "outer" {
            outer_line = ln;
            walks.push(vals);
            continue;
        }
        if outer_line != 0 {
            return err(ln, "rotation after the outer walk");
        }
        let v: usize = num(k, ln, "vertex")?;
        if v >= n {
            return err(ln, format!("vertex {v} out of range for n = {n}"));
        }
        if rot[v].is_some() {
            return err(ln, format!("vertex {v} has two rotation lines"));
        }
        let mut sorted = vals.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return err(ln, format!("rotation of {v} repeats a neighbor"));
        }
        if sorted.contains(&v) {
            return err(ln, format!("rotation of {v} contains {v}"));
        }
        rot[v] = Some(vals);
    }
    if let Some(v) = rot.iter().position(|r| r.is_none()) {
        return err(0, format!("no rotation line for vertex {v}"));
    }
    if outer_line == 0 {
        return err(0, "missing `outer:` line");
    }
    let rot: Vec<Vec<VertexId>> = rot.into_iter().map(Option::unwrap).collect();
    for (v, r) in rot.iter().enumerate() {
        if let Some(&w) = r.iter().find(|&&w| !rot[w].contains(&v)) {
            return err(0, format!("{w} is in the rotation of {v} but not the reverse"));
        }
    }
    PlaneGraph::from_outer_walks(rot, &walks).or_else(|e| err(outer_line, e.to_string()))
}

pub fn write_pg(g: &PlaneGraph, header: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(h) = header {
        writeln!(out, "{h}").unwrap();
    }
    writeln!(out, "{}", g.capacity()).unwrap();
    for v in 0..g.capacity() {
        write!(out, "{v}:").unwrap();
        if g.graph().contains(v) {
            for w in g.rotation(v) {
                write!(out, " {w}").unwrap();
            }
        }
        out.push('\n');
    }
    for w in g.outer_walks() {
        write!(out, "outer:").unwrap();
        for v in w {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_witness(text: &str) -> Result<Witness, FormatError> {
    let mut moves = Vec::new();
    for (ln, l) in lines(text) {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let mv = match toks[..] {
            ["del", u] => Move::delete(num(u, ln, "vertex")?),
            ["save", u, w] => Move::save(num(u, ln, "vertex")?, num(w, ln, "target")?),
            _ => return err(ln, format!("expected `del u` or `save u w`, got {l:?}")),
        };
        moves.push(mv);
    }
    Ok(Witness::new(moves))
}

pub fn write_witness(w: &Witness) -> String {
    w.moves.iter().map(|m| format!("{m}\n")).collect()
}

pub fn parse_lists(text: &str) -> Result<ListAssignment, FormatError> {
    let mut l = ListAssignment::new(0);
    for (ln, line) in lines(text) {
        let (k, rest) = keyed(line, ln)?;
        let v: usize = num(k, ln, "vertex")?;
        if l.get(v).is_some() {
            return err(ln, format!("vertex {v} has two lists"));
        }
        let cs: Vec<Color> = nums(rest, ln, "color")?;
        l.set(v, cs);
    }
    Ok(l)
}

pub fn write_lists(l: &ListAssignment) -> String {
    let mut out = String::new();
    for (v, cs) in l.iter() {
        write!(out, "{v}:").unwrap();
        for c in cs {
            write!(out, " {c}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// `v color` per colored vertex.
pub fn write_coloring(c: &Coloring) -> String {
    c.iter()
        .enumerate()
        .filter_map(|(v, c)| c.map(|c| format!("{v} {c}\n")))
        .collect()
}

/// `const:d`, or `charges:x0,x1,...` in vertex id order over the live
/// vertices of `g`.
pub fn parse_charges(spec: &str, g: &SimpleGraph) -> Result<ChargeFn, FormatError> {
    if let Some(d) = spec.strip_prefix("const:") {
        return Ok(ChargeFn::constant(g, num(d.trim(), 0, "constant charge")?));
    }
    let Some(list) = spec.strip_prefix("charges:") else {
        return err(0, format!("charges must be `const:d` or `charges:x,y,...`, got {spec:?}"));
    };
    let xs: Vec<i64> = list
        .split(',')
        .map(|t| num(t.trim(), 0, "charge"))
        .collect::<Result<_, _>>()?;
    let live: Vec<VertexId> = g.vertices().collect();
    if xs.len() != live.len() {
        return err(0, format!("{} charges for {} vertices", xs.len(), live.len()));
    }
    let mut f = ChargeFn::new(g.capacity());
    for (&v, &x) in live.iter().zip(&xs) {
        f.set(v, x);
    }
    Ok(f)
}

/// Graphviz rendering: `S` as boxes, `I` filled, and the position of each
/// vertex in `order` (1-based) appended to its label.
pub fn write_dot(
    g: &SimpleGraph,
    s: &[VertexId],
    i: &[VertexId],
    order: Option<&Witness>,
) -> String {
    let mut pos = vec![None; g.capacity()];
    if let Some(w) = order {
        for (k, m) in w.moves.iter().enumerate() {
            if m.vertex < pos.len() {
                pos[m.vertex] = Some(k + 1);
            }
        }
    }
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in g.vertices() {
        let label = match pos[v] {
            Some(k) => format!("{v} ({k})"),
            None => v.to_string(),
        };
        let mut attrs = vec![format!("label=\"{label}\"")];
        if s.contains(&v) {
            attrs.push("shape=box".into());
        }
        if i.contains(&v) {
            attrs.push("style=filled".into());
            attrs.push("fillcolor=lightgray".into());
        }
        writeln!(out, "  {v} [{}];", attrs.join(", ")).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{icosahedron, wheel};

    #[test]
    fn sg_round_trip_and_errors() {
        let g = SimpleGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let text = write_sg(&g, Some("# family=path n=3 seed=0"));
        assert_eq!(text, "# family=path n=3 seed=0\n3 2\n0 1\n1 2\n");
        assert_eq!(parse_sg(&text).unwrap(), g);
        assert_eq!(parse_sg("3 1\n1 0\n").unwrap_err().line, 2);
        assert_eq!(parse_sg("3 2\n0 1\n0 1\n").unwrap_err().line, 3);
        assert_eq!(parse_sg("3 1\n0 5\n").unwrap_err().line, 2);
        assert_eq!(parse_sg("3 2\n0 1\n").unwrap_err().line, 0);
        assert_eq!(parse_sg("x\n").unwrap_err().line, 1);
    }

    #[test]
    fn pg_round_trip_and_errors() {
        for g in [wheel(5).unwrap(), icosahedron()] {
            let text = write_pg(&g, None);
            assert_eq!(parse_pg(&text).unwrap(), g);
        }
        let tri = "3\n0: 1 2\n1: 2 0\n2: 0 1\n";
        assert!(parse_pg(&format!("{tri}outer: 0 2 1\n")).is_ok());
        assert_eq!(parse_pg(&format!("{tri}outer: 0 1\n")).unwrap_err().line, 5);
        let e = parse_pg("2\n0: 1\n1:\nouter: 0 1\n").unwrap_err();
        assert_eq!(e.line, 0);
        assert_eq!(parse_pg("2\n0: 1\n0: 1\n").unwrap_err().line, 3);
        let iso = parse_pg("2\n0:\n1:\nouter: 0\nouter: 1\n").unwrap();
        assert_eq!(iso.vertex_count(), 2);
    }

    #[test]
    fn witness_and_lists() {
        let w = parse_witness("# k2\nsave 0 1\ndel 1\n").unwrap();
        assert_eq!(w.moves, vec![Move::save(0, 1), Move::delete(1)]);
        assert_eq!(write_witness(&w), "save 0 1\ndel 1\n");
        assert_eq!(parse_witness("del\n").unwrap_err().line, 1);
        let l = parse_lists("0: 1 2\n1: 1\n").unwrap();
        assert_eq!(write_lists(&l), "0: 1 2\n1: 1\n");
        assert_eq!(parse_lists("0: 1\n0: 2\n").unwrap_err().line, 2);
    }

    #[test]
    fn charges() {
        let g = SimpleGraph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(parse_charges("charges:1,0", &g).unwrap(), ChargeFn::from_values([1, 0]));
        assert_eq!(parse_charges("const:4", &g).unwrap(), ChargeFn::constant(&g, 4));
        assert!(parse_charges("charges:1", &g).is_err());
        assert!(parse_charges("4", &g).is_err());
    }

    #[test]
    fn dot_marks_s_and_i() {
        let g = SimpleGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let w = Witness::new(vec![Move::delete(2), Move::delete(1), Move::delete(0)]);
        let d = write_dot(&g, &[0], &[2], Some(&w));
        assert!(d.contains("0 [label=\"0 (3)\", shape=box];"));
        assert!(d.contains("2 [label=\"2 (1)\", style=filled"));
        assert!(d.contains("1 -- 2;"));
    }
}
