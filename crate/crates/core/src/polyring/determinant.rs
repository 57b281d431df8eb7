//! Exact determinants over the Laurent polynomial ring.

use super::{LaurentPolynomial, RingContext};
use crate::error::{Error, Result};

/// Determinant by Laplace expansion over column subsets.
///
/// Row `i` is expanded against every set of `i` columns already used by the
/// rows above it; placing row `i` in column `j` contributes the sign
/// `(-1)^{#used columns > j}`. Cost is `O(2^r · r)` ring products, with zero
/// entries skipped, which suits the sparse banded matrices used here.
pub fn determinant(ctx: RingContext, m: &[Vec<LaurentPolynomial>]) -> Result<LaurentPolynomial> {
    let r = m.len();
    for row in m {
        if row.len() != r {
            return Err(Error::NotSquare { rows: r, cols: row.len() });
        }
        for entry in row {
            ctx.check(&entry.ctx())?;
        }
    }
    if r == 0 {
        return Ok(LaurentPolynomial::one(ctx));
    }
    if r > 24 {
        return Err(Error::Domain(format!("{r}x{r} determinant is too large")));
    }
    let mut layer: Vec<(u32, LaurentPolynomial)> = vec![(0, LaurentPolynomial::one(ctx))];
    for row in m {
        let mut next: std::collections::BTreeMap<u32, LaurentPolynomial> = Default::default();
        for (mask, acc) in &layer {
            for (j, entry) in row.iter().enumerate() {
                if mask & (1 << j) != 0 || entry.is_zero() {
                    continue;
                }
                let above = (mask >> (j + 1)).count_ones();
                let mut term = acc * entry;
                if above % 2 == 1 {
                    term = -&term;
                }
                let slot = next
                    .entry(mask | (1 << j))
                    .or_insert_with(|| LaurentPolynomial::zero(ctx));
                *slot += &term;
            }
        }
        layer = next.into_iter().filter(|(_, p)| !p.is_zero()).collect();
    }
    Ok(layer
        .pop()
        .map(|(_, p)| p)
        .unwrap_or_else(|| LaurentPolynomial::zero(ctx)))
}
