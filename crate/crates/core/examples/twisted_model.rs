//! The signed-alphabet vertex model: `B_n` fundamental data, L-admissible
//! characters by enumeration, fiber and determinant, and the level-1
//! character as theta function and strip sum.
//!
//! ```text
//! cargo run --example twisted_model -- 2 1,2
//! ```

use vertex_spectra::twisted::{
    bn_fundamental_data, chi_twisted, chi_twisted_fiber, sl_determinant, twisted_decomposition,
    twisted_level1_theta, TwistedMethod, TwistedSpectrumPoint,
};

fn main() {
    run(std::env::args().skip(1).collect());
}

pub fn run(args: Vec<String>) {
    let n: usize = args.first().map_or(Ok(2), |s| s.parse()).expect("rank");
    let blocks: Vec<usize> = args
        .get(1)
        .map_or("1,2", String::as_str)
        .split(',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().expect("block length"))
        .collect();

    let data = bn_fundamental_data(n);
    println!("σ = {}", data.sigma);
    for m in 0..=2 * n {
        println!("dim t_{m} = {}", data.t(m as i64).eval_x_one().eval_one());
    }

    let h = TwistedSpectrumPoint::new(blocks).unwrap();
    let e = chi_twisted(&h, n);
    println!("h = {h}, κ = {}, energy {}", h.kappa(n), h.energy());
    println!("dim χ_h = {}", e.eval_x_one().eval_one());
    println!("fiber agrees: {}", chi_twisted_fiber(&h, n) == e);
    println!("determinant agrees: {}", sl_determinant(&h, n).unwrap() == e);

    let theta = twisted_level1_theta(n, 5).unwrap();
    let strips = twisted_decomposition(n, 5, TwistedMethod::Determinant).unwrap();
    println!("multiplicities {:?}", theta.eval_x_one());
    println!("theta = strip sum to order 5: {}", theta.compare(&strips).unwrap().equal());
}
