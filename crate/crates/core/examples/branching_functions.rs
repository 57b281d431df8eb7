//! Branching functions `b_λ(q)` of a level-1 module, read off from strip
//! Littlewood–Richardson counts, and their reassembly into the character.
//!
//! ```text
//! cargo run --example branching_functions -- 3 0 4
//! ```

use vertex_spectra::characters::{branching_functions, branching_sum, level1_decomposition, Variant};

fn main() {
    run(std::env::args().skip(1).collect());
}

pub fn run(args: Vec<String>) {
    let args: Vec<usize> = args.iter().map(|s| s.parse().expect("integer")).collect();
    let (n, k, order) = (*args.first().unwrap_or(&3), *args.get(1).unwrap_or(&0), *args.get(2).unwrap_or(&4));
    for (lambda, b) in branching_functions(n, k, order).unwrap() {
        println!("b_({lambda}) = {:?}", b.eval_x_one());
    }
    let total = branching_sum(n, k, order).unwrap();
    let strips = level1_decomposition(n, k, order, Variant::A).unwrap();
    println!("Σ b_λ s_λ = strip decomposition: {}", total.compare(&strips).unwrap().equal());
}
