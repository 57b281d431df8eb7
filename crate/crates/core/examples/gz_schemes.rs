//! Semistandard tableaux of a skew shape as Gelfand–Zetlin schemes and back.
//!
//! ```text
//! cargo run --example gz_schemes
//! ```

use vertex_spectra::shapes::SkewDiagram;
use vertex_spectra::tableaux::{enumerate_sst, gz_from_sst, sst_from_gz, Alphabet, Tableau};

fn main() {
    run(std::env::args().skip(1).collect());
}

pub fn run(_args: Vec<String>) {
    let shape: SkewDiagram = "5,4,4,1/4,3,2".parse().unwrap();
    let t = Tableau::new(shape.clone(), vec![vec![2], vec![1], vec![2, 2], vec![3]], Alphabet::Standard(3)).unwrap();
    let g = gz_from_sst(&t, 3).unwrap();
    println!("tableau rows {:?} on {shape}", t.rows());
    for row in g.rows().iter().rev() {
        println!("  {row:?}");
    }
    println!("weight {:?} (doubled)", g.weight().doubled());

    let mut count = 0;
    for t in enumerate_sst(&shape, 3) {
        let g = gz_from_sst(&t, 3).unwrap();
        assert_eq!(sst_from_gz(&g).unwrap(), t);
        count += 1;
    }
    println!("{count} tableaux of {shape} over 3 letters all round-trip");
}
