//! Skew Schur polynomials by tableau enumeration, Jacobi–Trudi and (for
//! border strips) the strip determinant, plus the conjugate/complement pair.
//!
//! ```text
//! cargo run --example skew_schur -- 5,5,4/4,3,2 3
//! ```

use vertex_spectra::schur::{schur, schur_conjugate, Method};
use vertex_spectra::shapes::SkewDiagram;

fn main() {
    run(std::env::args().skip(1).collect());
}

pub fn run(args: Vec<String>) {
    let shape: SkewDiagram = args.first().map_or("5,5,4/4,3,2", String::as_str).parse().expect("shape like 5,4/2");
    let n: usize = args.get(1).map_or(Ok(3), |s| s.parse()).expect("rank");

    let e = schur(&shape, n, false, Method::Enumeration).unwrap();
    let jt = schur(&shape, n, false, Method::JacobiTrudi).unwrap();
    println!("s_{shape}(x_1..x_{n}) = {e}");
    println!("jacobi-trudi agrees: {}", e == jt);
    match shape.as_border_strip() {
        Some(bs) => {
            let det = schur(&shape, n, false, Method::Strip).unwrap();
            println!("{shape} is the border strip {bs}; strip determinant agrees: {}", det == e);
        }
        None => println!("{shape} is not a border strip"),
    }
    println!("dimension s(1,…,1) = {}", e.eval_x_one().eval_one());

    if shape.is_rank(n) {
        let comp = shape.complement(n).unwrap();
        let c = schur_conjugate(&shape, n, true);
        let s_comp = schur(&comp, n, true, Method::Enumeration).unwrap();
        println!("complement {comp}; conjugate = complement mod x_1⋯x_n = 1: {}", c.determinant == s_comp);
    }
}
