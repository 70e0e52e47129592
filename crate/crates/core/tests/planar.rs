use wdeg_core::delsave::verify;
use wdeg_core::gen::{
    apollonian, icosahedron, random_triangulation, sample_instance, triangulated_grid, wheel,
    SplitMix64,
};
use wdeg_core::{exact, make_instance, witness, witness_planar_4};

#[test]
fn wheels() {
    for n in 3..=50 {
        let g = wheel(n).unwrap();
        witness_planar_4(&g).unwrap_or_else(|e| panic!("W{n}: {e}"));
    }
}

#[test]
fn icosahedron_and_grid() {
    let out = witness_planar_4(&icosahedron()).unwrap();
    assert_eq!(out.witness.len(), 12);
    assert!(out.witness.save_count() > 0);
    witness_planar_4(&triangulated_grid(10, 10).unwrap()).unwrap();
}

#[test]
fn apollonian_corpus() {
    for n in [10, 50, 200, 500] {
        for seed in 0..5 {
            let g = apollonian(n, seed).unwrap();
            witness_planar_4(&g).unwrap_or_else(|e| panic!("apollonian {n} {seed}: {e}"));
        }
    }
}

#[test]
fn random_triangulations() {
    for seed in 0..200 {
        let n = 4 + (seed as usize % 9);
        let g = random_triangulation(n, seed).unwrap();
        witness_planar_4(&g).unwrap_or_else(|e| panic!("triangulation {n} {seed}: {e}"));
    }
}

#[test]
fn sampled_instances_agree_with_search() {
    let mut rng = SplitMix64::new(17);
    for seed in 0..200 {
        let n = 4 + (seed as usize % 6);
        let g = random_triangulation(n, 1000 + seed).unwrap();
        let (s, i) = sample_instance(&g, &mut rng);
        let inst = make_instance(g, &s, &i).unwrap();
        let out = witness(&inst).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        let res = inst.residual();
        verify(&res, inst.charges(), &out.witness).unwrap();
        assert!(exact::is_weakly_degenerate(&res, inst.charges()).unwrap().is_some());
    }
}

#[test]
fn near_triangulations_with_instances() {
    // deleting vertices of a triangulation leaves longer outer cycles
    let mut rng = SplitMix64::new(3);
    let mut tried = 0;
    for seed in 0..3000u64 {
        let n = 6 + (seed as usize % 10);
        let g = random_triangulation(n, seed).unwrap();
        let mut drop = Vec::new();
        for _ in 0..rng.below(4) {
            drop.push(rng.below(n));
        }
        let h = g.delete_vertices(&drop);
        if !h.is_two_connected() {
            continue;
        }
        let (s, i) = sample_instance(&h, &mut rng);
        let Ok(inst) = make_instance(h, &s, &i) else { continue };
        tried += 1;
        witness(&inst).unwrap_or_else(|e| panic!("seed {seed} drop {drop:?} s {s:?} i {i:?}: {e}"));
    }
    assert!(tried > 1000);
}
