//! Drinfel'd polynomial roots attached to the columns of a skew diagram.
//!
//! ```text
//! cargo run --example drinfeld -- 5,4,4,1/4,3,2 4
//! ```

use vertex_spectra::shapes::SkewDiagram;

fn main() {
    run(std::env::args().skip(1).collect());
}

pub fn run(args: Vec<String>) {
    let shape: SkewDiagram = args.first().map_or("5,4,4,1/4,3,2", String::as_str).parse().expect("shape");
    let n: usize = args.get(1).map_or(Ok(4), |s| s.parse()).expect("rank");
    for (i, roots) in shape.drinfeld_polynomials(n) {
        if roots.is_empty() {
            println!("P_{i}(u) = 1");
        } else {
            let factors: Vec<String> = roots.iter().map(|r| format!("(u - ({r}))")).collect();
            println!("P_{i}(u) = {}", factors.join(""));
        }
    }
}
