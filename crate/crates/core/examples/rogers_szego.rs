//! Rogers–Szegő polynomials: the q-multinomial sum, its `e_i` recursion, the
//! strip sum `F_N`, the coefficients `A_{N,m}` and the finite-`N` partition
//! function approaching the level-1 character.
//!
//! ```text
//! cargo run --example rogers_szego -- 2 4
//! ```

use vertex_spectra::characters::{
    a_closed, a_coefficient, f_n, finite_character, polychronakos_partition, rogers_szego,
    rogers_szego_recursive, sp_n_partition,
};
use vertex_spectra::spectra::ground_energy;

fn main() {
    run(std::env::args().skip(1).collect());
}

pub fn run(args: Vec<String>) {
    let args: Vec<usize> = args.iter().map(|s| s.parse().expect("integer")).collect();
    let (n, big_n) = (*args.first().unwrap_or(&2), *args.get(1).unwrap_or(&4));

    let h = rogers_szego(big_n, n);
    println!("H_{big_n} = {h}");
    println!("recursion agrees: {}", rogers_szego_recursive(big_n, n) == h);
    println!("strip sum F_{big_n} agrees: {}", f_n(big_n, n) == h);
    for m in 1..=n.min(big_n) {
        println!("A_({big_n},{m}) = {}  (closed form agrees: {})", a_coefficient(big_n, m, n), a_closed(big_n, m).unwrap() == a_coefficient(big_n, m, n));
    }

    println!("E_{big_n} = {}", ground_energy(big_n, n));
    let z = polychronakos_partition(big_n, n, false);
    println!("q^E H(q^-1) = spectrum sum: {}", z.compare(&sp_n_partition(big_n, n, false)).unwrap().equal());
    for big in [big_n, big_n + n, big_n + 2 * n] {
        println!("N = {big:>2}: multiplicities {:?}", finite_character(big, n).truncate(4).eval_x_one());
    }
}
