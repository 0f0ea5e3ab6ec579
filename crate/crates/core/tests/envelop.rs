use std::time::Instant;

use rand::SeedableRng;
use zlab::envelop::*;
use zlab::{LieAlgebra, Variant};

const CAP: usize = 200_000;

fn pbw(n: usize, v: Variant, p: u32) -> Pbw {
    Pbw::new(&LieAlgebra::new(n, v, p).unwrap())
}

#[test]
fn centre_census() {
    for (v, p, d) in [(Variant::Gl, 2, 4), (Variant::Gl, 3, 6), (Variant::Sl, 3, 6)] {
        let start = Instant::now();
        let w = veldkamp_center_census(&pbw(2, v, p), d, CAP).unwrap();
        eprintln!("{v}2 p={p}: {} in {:?}", w["dims"], start.elapsed());
        let dims = w["dims"].as_array().unwrap();
        assert_eq!(dims[0], serde_json::json!([0, 1, 1]));
    }
}

#[test]
fn central_generators_postconditions() {
    for (v, p) in [(Variant::Gl, 3), (Variant::Gl, 5), (Variant::Sl, 3), (Variant::Sl, 5)] {
        let pbw = pbw(2, v, p);
        let m = if v == Variant::Gl { 2 } else { 1 };
        for i in 1..=m {
            let u = compute_u(&pbw, i, CAP).unwrap();
            assert!(pbw.is_central(&u.element));
            assert_eq!(pbw.gr(&u.element), u.symbol);
        }
        gr_compatibility_check(&pbw, CAP).unwrap();
    }
}

#[test]
fn gl3_central_generators() {
    let pbw = pbw(3, Variant::Gl, 5);
    for i in 1..=2 {
        compute_u(&pbw, i, CAP).unwrap();
    }
}

#[test]
fn eta_structure_up_to_rank_three() {
    for (n, v, p) in [
        (2, Variant::Gl, 2),
        (2, Variant::Gl, 3),
        (2, Variant::Gl, 5),
        (3, Variant::Gl, 2),
        (3, Variant::Gl, 3),
        (2, Variant::Sl, 3),
        (3, Variant::Sl, 2),
        (3, Variant::Sl, 3),
    ] {
        let pbw = pbw(n, v, p);
        jacobson_additivity_check(&pbw).unwrap();
        p_centre_centrality_check(&pbw).unwrap();
    }
}

#[test]
fn confluence_up_to_rank_three() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for n in 2..=3 {
        for p in [2, 3] {
            for v in [Variant::Gl, Variant::Sl] {
                pbw_confluence_check(&pbw(n, v, p), 500, &mut rng).unwrap();
            }
        }
    }
}

#[test]
fn group_invariants_are_central() {
    for (v, p) in [(Variant::Gl, 2), (Variant::Gl, 3), (Variant::Sl, 3), (Variant::Sl, 2)] {
        group_invariants_in_center_check(&pbw(2, v, p), 3, CAP).unwrap();
    }
}

#[test]
fn central_system_transport_and_direct() {
    for n in 2..=3 {
        for p in [2, 3] {
            central_system_check(&pbw(n, Variant::Gl, p)).unwrap();
        }
    }
    for p in [3, 5] {
        sl_central_generators_check(&pbw(2, Variant::Sl, p)).unwrap();
    }
    sl_central_generators_check(&pbw(3, Variant::Sl, 2)).unwrap();
}
