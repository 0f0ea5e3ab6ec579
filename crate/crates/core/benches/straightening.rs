//! Timings for PBW straightening and the centre computations.
//! Run with `cargo bench -p zlab`.

use std::hint::black_box;
use std::time::Instant;

use zlab::envelop::{center_basis, compute_u, Pbw};
use zlab::{LieAlgebra, Variant};

fn bench(name: &str, reps: u32, mut f: impl FnMut()) {
    f();
    let start = Instant::now();
    for _ in 0..reps {
        f();
    }
    println!("{name:<40} {:>12.3?} per iteration", start.elapsed() / reps);
}

fn main() {
    for (n, v, p) in [(2, Variant::Gl, 3), (3, Variant::Gl, 3), (3, Variant::Sl, 5)] {
        let alg = LieAlgebra::new(n, v, p).unwrap();
        let label = alg.name();
        bench(&format!("eta products, cold cache, {label}"), 5, || {
            let pbw = Pbw::new(&alg);
            let x = pbw.eta_of(&alg.basis_elem(0));
            let y = pbw.eta_of(&alg.basis_elem(alg.dim() - 1));
            black_box(pbw.mul(&x, &y));
        });
        let pbw = Pbw::new(&alg);
        let lower = pbw.pow(&pbw.generator(0), 3);
        let upper = pbw.pow(&pbw.generator(alg.dim() - 1), 3);
        bench(&format!("upper^3 * lower^3, warm cache, {label}"), 20, || {
            black_box(pbw.mul(&upper, &lower));
        });
    }
    let gl2 = LieAlgebra::new(2, Variant::Gl, 3).unwrap();
    bench("centre basis U_6, gl_2 p=3", 3, || {
        black_box(center_basis(&Pbw::new(&gl2), 6, 1_000_000).unwrap());
    });
    let gl3 = LieAlgebra::new(3, Variant::Gl, 5).unwrap();
    bench("u_2 for gl_3 p=5", 3, || {
        black_box(compute_u(&Pbw::new(&gl3), 2, 1_000_000).unwrap());
    });
}
