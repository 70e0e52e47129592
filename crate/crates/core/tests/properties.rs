use proptest::prelude::*;

use wdeg_core::coloring::{color_from_witness, validate_coloring, ListAssignment, MaxChooser, MinChooser, RandomChooser};
use wdeg_core::delsave::{reuse_monotone, verify};
use wdeg_core::exact::{degeneracy, is_weakly_degenerate, weak_degeneracy};
use wdeg_core::format::{parse_pg, parse_sg, parse_witness, write_pg, write_sg, write_witness};
use wdeg_core::gen::{gnp, random_triangulation, sample_instance, SplitMix64};
use wdeg_core::plane::find_chords;
use wdeg_core::{make_instance, witness, ChargeFn, PlaneGraph, SimpleGraph};

fn small_graph() -> impl Strategy<Value = SimpleGraph> {
    (1usize..=8, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, p, s)| gnp(n, p, s))
}

fn charges_for(g: &SimpleGraph, xs: &[i64]) -> ChargeFn {
    let mut f = ChargeFn::new(g.capacity());
    for v in g.vertices() {
        f.set(v, xs[v % xs.len()]);
    }
    f
}

/// A triangulation with a few vertices removed, if it stays 2-connected.
fn near_triangulation(n: usize, seed: u64, drop: &[usize]) -> Option<PlaneGraph> {
    let g = random_triangulation(n, seed).unwrap();
    let drop: Vec<usize> = drop.iter().map(|d| d % n).collect();
    let h = g.delete_vertices(&drop);
    h.is_two_connected().then_some(h)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn faces_cover_every_dart_once(n in 3usize..30, seed in any::<u64>(), drop in prop::collection::vec(any::<usize>(), 0..4)) {
        let g = random_triangulation(n, seed).unwrap();
        let drop: Vec<usize> = drop.iter().map(|d| d % n).collect();
        let h = g.delete_vertices(&drop);
        prop_assert!(h.validate().is_ok());
        let faces = h.faces();
        let total: usize = faces.iter().map(Vec::len).sum();
        let gr = h.graph();
        if gr.is_connected() && gr.vertex_count() > 1 {
            prop_assert_eq!(total, 2 * gr.edge_count());
            prop_assert_eq!(gr.vertex_count() + faces.len(), gr.edge_count() + 2);
        }
    }

    #[test]
    fn chord_splits_rebuild_the_graph(n in 5usize..20, seed in any::<u64>(), drop in prop::collection::vec(any::<usize>(), 1..4)) {
        let Some(g) = near_triangulation(n, seed, &drop) else { return Ok(()) };
        for ell in 0..=2 {
            for p in find_chords(&g, &[], ell) {
                let (g1, g2) = g.split(&p).unwrap();
                let mut vs: Vec<usize> = g1.graph().vertices().chain(g2.graph().vertices()).collect();
                vs.sort_unstable();
                vs.dedup();
                prop_assert_eq!(vs, g.graph().vertices().collect::<Vec<_>>());
                let mut es: Vec<(usize, usize)> = g1.graph().edges().chain(g2.graph().edges()).collect();
                es.sort_unstable();
                es.dedup();
                prop_assert_eq!(es, g.graph().edges().collect::<Vec<_>>());
                prop_assert!(g1.vertex_count() < g.vertex_count());
                prop_assert!(g2.vertex_count() < g.vertex_count());
            }
        }
    }

    #[test]
    fn engine_handles_sampled_instances(n in 4usize..25, seed in any::<u64>(), drop in prop::collection::vec(any::<usize>(), 0..5), pick in any::<u64>()) {
        let Some(g) = near_triangulation(n, seed, &drop) else { return Ok(()) };
        let (s, i) = sample_instance(&g, &mut SplitMix64::new(pick));
        let inst = make_instance(g, &s, &i).unwrap();
        let out = witness(&inst);
        prop_assert!(out.is_ok(), "{:?}", out.err());
        let out = out.unwrap();
        prop_assert!(verify(&inst.residual(), inst.charges(), &out.witness).is_ok());
    }

    #[test]
    fn weak_degeneracy_is_monotone(g in small_graph()) {
        let (wd, _) = weak_degeneracy(&g).unwrap();
        for d in 0..=g.vertex_count() as i64 {
            let ok = is_weakly_degenerate(&g, &ChargeFn::constant(&g, d)).unwrap().is_some();
            prop_assert_eq!(ok, d >= wd as i64);
        }
        prop_assert!(wd <= degeneracy(&g).0);
    }

    #[test]
    fn witnesses_survive_larger_charges(g in small_graph(), xs in prop::collection::vec(0i64..4, 8), bump in prop::collection::vec(0i64..3, 8)) {
        let f = charges_for(&g, &xs);
        if let Some(w) = is_weakly_degenerate(&g, &f).unwrap() {
            let mut f2 = f.clone();
            for (v, x) in f.iter() {
                f2.set(v, x + bump[v]);
            }
            prop_assert!(reuse_monotone(&g, &f, &f2, &w).is_ok());
        }
    }

    #[test]
    fn any_chooser_colors_from_a_witness(g in small_graph(), xs in prop::collection::vec(0i64..4, 8), seed in any::<u64>()) {
        let f = charges_for(&g, &xs);
        if let Some(w) = is_weakly_degenerate(&g, &f).unwrap() {
            let mut rng = SplitMix64::new(seed);
            let mut lists = ListAssignment::new(g.capacity());
            let mut pool: Vec<u32> = (1..=8).collect();
            for (v, x) in f.iter() {
                rng.shuffle(&mut pool);
                lists.set(v, pool[..x as usize + 1].iter().copied());
            }
            for c in [
                color_from_witness(&g, &f, &w, &lists, &mut MinChooser),
                color_from_witness(&g, &f, &w, &lists, &mut MaxChooser),
                color_from_witness(&g, &f, &w, &lists, &mut RandomChooser(rng.clone())),
            ] {
                let c = c.unwrap();
                prop_assert!(validate_coloring(&g, &c, Some(&lists)));
            }
        }
    }

    #[test]
    fn text_formats_round_trip(n in 3usize..15, seed in any::<u64>(), g in small_graph()) {
        let pg = random_triangulation(n, seed).unwrap();
        prop_assert_eq!(parse_pg(&write_pg(&pg, Some("# x"))).unwrap(), pg);
        prop_assert_eq!(parse_sg(&write_sg(&g, None)).unwrap(), g.clone());
        let (_, w) = weak_degeneracy(&g).unwrap();
        prop_assert_eq!(parse_witness(&write_witness(&w)).unwrap(), w);
    }
}
