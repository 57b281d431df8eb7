//! `K_{λ,(1^N)}(q)` as a sum over border strips weighted by
//! Littlewood–Richardson counts, checked against triangular extraction from
//! the q-multinomial generating function.
//!
//! ```text
//! cargo run --example kostka_foulkes -- 3,2,1
//! ```

use vertex_spectra::characters::{kostka_foulkes, kostka_oracle};
use vertex_spectra::shapes::Partition;

fn main() {
    run(std::env::args().skip(1).collect());
}

pub fn run(args: Vec<String>) {
    let lambda: Partition = args
        .first()
        .cloned()
        .unwrap_or_else(|| "3,2,1".into())
        .parse()
        .expect("partition like 3,2,1");
    let n = lambda.len().max(1);
    let r = kostka_foulkes(&lambda, n);
    println!("K_(λ={lambda}),(1^{}) (q) = {}", lambda.size(), r.polynomial);
    println!("{} contributing strips:", r.strips.len());
    for (bs, t, c) in &r.strips {
        println!("  {:<12} t = {t:<3} LR = {c}", bs.to_string());
    }
    println!("oracle agrees: {}", kostka_oracle(&lambda, n) == r.polynomial);
}
