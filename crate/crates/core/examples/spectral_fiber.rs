//! A fiber of the local energy map: every configuration with the given energy
//! sequence, the tableau each one reads back to, and the fiber character
//! against the Schur polynomial of the strip.
//!
//! ```text
//! cargo run --example spectral_fiber -- 3 1,2
//! ```

use vertex_spectra::schur::schur_enumerative;
use vertex_spectra::spectra::{enumerate_fiber, fiber_character, phi_inverse, SpectrumPoint};

fn main() {
    run(std::env::args().skip(1).collect());
}

pub fn run(args: Vec<String>) {
    let n: usize = args.first().map_or(Ok(3), |s| s.parse()).expect("rank");
    let blocks: Vec<usize> = args
        .get(1)
        .map_or("1,2", String::as_str)
        .split(',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().expect("block length"))
        .collect();
    let h = SpectrumPoint::new(n, blocks).expect("1 <= m_i <= n");
    let kappa = h.kappa();
    println!("h = {h}, sector {}, κ(h) = {kappa} = {}", h.sector(), kappa.realize());
    println!("energy {} = closed form {}", h.energy(), h.energy_closed_form());

    let fiber = enumerate_fiber(&h);
    println!("{} configurations:", fiber.len());
    for s in &fiber {
        let t = phi_inverse(s).unwrap();
        println!("  {s}  tableau rows {:?}", t.rows());
    }
    let chi = fiber_character(&h, false);
    let s = schur_enumerative(&kappa.realize(), n, false);
    println!("fiber character = s_κ: {}", chi == s);
}
