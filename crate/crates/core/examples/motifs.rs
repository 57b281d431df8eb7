//! Motifs of the inverse-square spin chain: binary words without `n` adjacent
//! ones, their spectrum points, strips and energies.
//!
//! ```text
//! cargo run --example motifs -- 2 5
//! ```

use vertex_spectra::spectra::{enumerate_motifs, enumerate_sp_n, hs_eigenvalue, motif_energy, motif_to_spectrum};

fn main() {
    run(std::env::args().skip(1).collect());
}

pub fn run(args: Vec<String>) {
    let args: Vec<usize> = args.iter().map(|s| s.parse().expect("integer")).collect();
    let (n, big_n) = (*args.first().unwrap_or(&2), *args.get(1).unwrap_or(&5));
    let motifs = enumerate_motifs(big_n, n);
    println!("{} motifs, {} spectrum points", motifs.len(), enumerate_sp_n(big_n, n).len());
    for d in motifs {
        let h = motif_to_spectrum(&d, n).unwrap();
        println!(
            "{:?} -> {:?} κ = {} energy {} eigenvalue {}",
            d,
            h.blocks(),
            h.kappa(),
            motif_energy(&d, n).unwrap(),
            hs_eigenvalue(&d, big_n).unwrap()
        );
    }
}
