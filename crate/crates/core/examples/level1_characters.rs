//! The level-1 `ŝl_n` character of sector `k` two ways: a lattice theta
//! function over `(q)_∞^{n−1}`, and a sum of strip Schur polynomials graded
//! by energy.
//!
//! ```text
//! cargo run --example level1_characters -- 3 1 5
//! ```

use vertex_spectra::characters::{level1_decomposition, level1_strips, level1_theta, Variant};
use vertex_spectra::polyring::rational_text;

fn main() {
    run(std::env::args().skip(1).collect());
}

pub fn run(args: Vec<String>) {
    let args: Vec<usize> = args.iter().map(|s| s.parse().expect("integer")).collect();
    let (n, k, order) = (*args.first().unwrap_or(&3), *args.get(1).unwrap_or(&1), *args.get(2).unwrap_or(&5));

    let theta = level1_theta(n, k, order).unwrap();
    println!("n = {n}, k = {k}, offset {}", rational_text(theta.offset()));
    println!("weight multiplicities per q-power: {:?}", theta.eval_x_one());

    for (j, bs) in level1_strips(n, k, order.min(2), 0) {
        println!("  q^(Δ+{j})  s_{bs}");
    }
    for v in [Variant::A, Variant::B] {
        let d = level1_decomposition(n, k, order, v).unwrap();
        let cmp = theta.compare(&d).unwrap();
        println!("variant {v:?}: equal through order {} = {}", cmp.order, cmp.equal());
    }
}
