//! Elementary symmetric polynomials and `q`-factorial primitives.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{LaurentPolynomial, QPoly, RingContext};
use crate::error::{Error, Result};

/// `e_m(vars)`; zero for `m < 0` or `m > vars.len()`.
pub fn elementary_symmetric(ctx: RingContext, m: i64, vars: &[LaurentPolynomial]) -> LaurentPolynomial {
    if m < 0 || m as usize > vars.len() {
        return LaurentPolynomial::zero(ctx);
    }
    elementary_table(ctx, vars).swap_remove(m as usize)
}

/// `[e_0, e_1, …, e_{len}]` of `vars`, by the usual one-variable-at-a-time recursion.
pub fn elementary_table(ctx: RingContext, vars: &[LaurentPolynomial]) -> Vec<LaurentPolynomial> {
    let mut e = vec![LaurentPolynomial::one(ctx)];
    for v in vars {
        e.push(LaurentPolynomial::zero(ctx));
        for m in (1..e.len()).rev() {
            let term = &e[m - 1] * v;
            e[m] += &term;
        }
    }
    e
}

/// The variables `x_1..x_n` of a context.
pub fn variables(ctx: RingContext) -> Vec<LaurentPolynomial> {
    (0..ctx.n).map(|i| LaurentPolynomial::var(ctx, i)).collect()
}

/// `(q)_k = Π_{i=1}^{k} (1 − q^i)`.
pub fn q_pochhammer(k: usize) -> QPoly {
    let mut acc = QPoly::one();
    for i in 1..=k {
        acc = &acc * &(&QPoly::one() - &QPoly::q_pow(i as i32));
    }
    acc
}

/// `(q)_N / Π_i (q)_{k_i}` by exact division.
pub fn gaussian_multinomial(n: usize, parts: &[usize]) -> Result<QPoly> {
    if parts.iter().sum::<usize>() != n {
        return Err(Error::Domain(format!(
            "parts {parts:?} do not sum to {n}"
        )));
    }
    let mut acc = q_pochhammer(n);
    for &k in parts {
        acc = acc.div_exact(&q_pochhammer(k))?;
    }
    Ok(acc)
}

/// Coefficients of `(q)_∞^{-k}` up to `q^order`.
///
/// Partition numbers come from Euler's pentagonal recurrence; the `k`-th power
/// is a truncated convolution.
pub fn inverse_euler_power(k: usize, order: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); order + 1];
    p[0] = BigInt::one();
    for m in 1..=order {
        let mut acc = BigInt::zero();
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if j % 2 == 1 { 1 } else { -1 };
            acc += &p[m - g1] * sign;
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= m {
                acc += &p[m - g2] * sign;
            }
        }
        p[m] = acc;
    }
    let mut out = vec![BigInt::zero(); order + 1];
    out[0] = BigInt::one();
    for _ in 0..k {
        let mut next = vec![BigInt::zero(); order + 1];
        for (i, a) in out.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in p.iter().enumerate().take(order + 1 - i) {
                next[i + j] += a * b;
            }
        }
        out = next;
    }
    out
}
