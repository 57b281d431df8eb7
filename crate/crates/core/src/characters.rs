//! Character identities at level 1: Rogers–Szegő polynomials and the strip
//! sum `F_N`, the `ŝl_n` theta-function character against its border-strip
//! decomposition, the Polychronakos partition function, Kostka–Foulkes
//! polynomials and branching functions.
//!
//! The universal factor `q^{−c/24}` is omitted everywhere; series are compared
//! at offset `Δ_k = k(n−k)/2n`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::polyring::{
    gaussian_multinomial, inverse_euler_power, q_pochhammer, ExponentVector, LaurentPolynomial,
    QPoly, QSeries, RingContext,
};
use crate::schur::{kostka_number, schur_border_strip, schur_jacobi_trudi, Elementary};
use crate::shapes::{compositions, partitions_of, BorderStrip, Partition};
use crate::spectra::{delta, enumerate_sp_n, ground_energy};
use crate::tableaux::count_lr;

/// All `(k_1, …, k_n)` with `k_i ≥ 0` summing to `total`.
pub fn weak_compositions(total: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in 0..=rest {
            cur.push(k);
            go(rest - k, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(total, n, &mut Vec::new(), &mut out);
    }
    out
}

/// `H_N(q, x) = Σ_{k_1+⋯+k_n=N} [N; k_1, …, k_n]_q x^k` (no relation imposed).
pub fn rogers_szego(big_n: usize, n: usize) -> LaurentPolynomial {
    let ctx = RingContext::new(n, false);
    let mut acc = LaurentPolynomial::zero(ctx);
    for k in weak_compositions(big_n, n) {
        let c = gaussian_multinomial(big_n, &k).expect("parts sum to N");
        acc.add_term(ExponentVector::from_content(&k), c);
    }
    acc
}

/// `H_N` from `H_0 = 1` and
/// `H_N = Σ_{i=1}^{n} (−1)^{i+1} (q)_{N−1}/(q)_{N−i} e_i H_{N−i}`.
pub fn rogers_szego_recursive(big_n: usize, n: usize) -> LaurentPolynomial {
    let ctx = RingContext::new(n, false);
    let e = Elementary::new(ctx);
    let mut h = vec![LaurentPolynomial::one(ctx)];
    for m in 1..=big_n {
        let mut acc = LaurentPolynomial::zero(ctx);
        for i in 1..=n.min(m) {
            let ratio = q_pochhammer(m - 1)
                .div_exact(&q_pochhammer(m - i))
                .expect("(q)_{N-i} divides (q)_{N-1}");
            let term = (&e.get(i as i64) * &h[m - i]).scale(&ratio);
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        h.push(acc);
    }
    h.pop().unwrap()
}

/// `F_N = Σ q^{N(N+1)/2 − Σ_i (m_1+⋯+m_i)} s_{⟨m_1,…,m_r⟩}` over compositions
/// of `N` with parts at most `n`; `F_0 = 1`.
pub fn f_n(big_n: usize, n: usize) -> LaurentPolynomial {
    let ctx = RingContext::new(n, false);
    let mut acc = LaurentPolynomial::zero(ctx);
    let top = (big_n * (big_n + 1) / 2) as i64;
    for bs in compositions(big_n, n) {
        let prefix_sum: usize = bs
            .columns()
            .iter()
            .scan(0, |s, m| {
                *s += m;
                Some(*s)
            })
            .sum();
        let s = schur_border_strip(&bs, n, false);
        acc += &s.shift_q((top - prefix_sum as i64) as i32);
    }
    acc
}

/// Ordered partitions `(k_1, …, k_j)` of `m` with `1 ≤ k_i ≤ max_part`.
pub fn ordered_partitions(m: usize, max_part: usize) -> Vec<Vec<usize>> {
    compositions(m, max_part)
        .into_iter()
        .map(|bs| bs.columns().to_vec())
        .collect()
}

/// `c_{N,m}(k_1, …, k_j) = N(m−j) − m²/2 − m/2 + Σ_i i k_i`.
pub fn c_exponent(big_n: usize, m: usize, ks: &[usize]) -> i64 {
    let (big_n, m, j) = (big_n as i64, m as i64, ks.len() as i64);
    let weighted: i64 = ks.iter().enumerate().map(|(i, &k)| (i as i64 + 1) * k as i64).sum();
    big_n * (m - j) - (m * m + m) / 2 + weighted
}

/// `A_{N,m} = Σ_{(k_1,…,k_j)} (−1)^{j+1} q^{c_{N,m}(k)}` over ordered
/// partitions of `m` with parts at most `max_part`.
pub fn a_coefficient(big_n: usize, m: usize, max_part: usize) -> QPoly {
    let mut acc = QPoly::zero();
    for ks in ordered_partitions(m, max_part) {
        let sign = if ks.len() % 2 == 1 { 1 } else { -1 };
        acc.add_term(c_exponent(big_n, m, &ks) as i32, BigInt::from(sign));
    }
    acc
}

/// `(−1)^{m+1} (q)_{N−1} / (q)_{N−m}` for `1 ≤ m ≤ N`.
pub fn a_closed(big_n: usize, m: usize) -> Result<QPoly> {
    if m == 0 || m > big_n {
        return Err(Error::Domain(format!("need 1 <= m <= N, got m={m}, N={big_n}")));
    }
    let ratio = q_pochhammer(big_n - 1).div_exact(&q_pochhammer(big_n - m))?;
    Ok(if m % 2 == 1 { ratio } else { -ratio })
}

/// `(Δ_k`-relative exponent, strip)` pairs for the level-1 decomposition of
/// sector `k`, all strips with relative exponent at most `order`.
///
/// For `κ = ⟨m_1, …, m_r⟩` write `d_i = n − m_i ∈ [0, n−1]`, `d_r ≥ 1`, and
/// `D = Σ d_i`. Then `|κ| = rn − D` and the exponent
/// `|κ|(n−|κ|)/2n + t(κ)` equals `E = Σ_i d_i (i − ½) − D²/2n`.
///
/// Search box. Packing `D = a(n−1) + b` into the first columns minimizes
/// `Σ d_i (i − ½)`, which gives `E ≥ (n−1)a²/2n` with `a = ⌊D/(n−1)⌋`; so
/// `E ≤ Δ_k + M` bounds `D`. For a partial strip ending at column `i`, any
/// completion adds `F ≥ 1` more defect at columns `> i`, so
/// `E ≥ S + F(i + ½) − (D+F)²/2n`; this is concave in `F`, hence bounded below
/// by its values at the ends of `[1, D_max − D]`, and it grows linearly in `i`.
/// `d_slack` widens the `D` bound; results must not depend on it.
pub fn level1_strips(n: usize, k: usize, order: usize, d_slack: usize) -> Vec<(usize, BorderStrip)> {
    assert!(n >= 2 && k < n);
    let ni = n as i64;
    // everything scaled by 2n
    let bound = (k * (n - k)) as i64 + 2 * ni * order as i64;
    let mut a_max = 0i64;
    while (ni - 1) * (a_max + 1) * (a_max + 1) <= bound {
        a_max += 1;
    }
    let d_max = (a_max + 1) * (ni - 1) - 1 + d_slack as i64;
    let base = (k * (n - k)) as i64;
    let mut out = Vec::new();
    if k == 0 {
        out.push((0, BorderStrip::empty()));
    }
    // two_n_e(s2, d) = n·Σ d_i(2i−1) − D²
    let mut cols: Vec<usize> = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn go(
        n: i64,
        k: usize,
        bound: i64,
        base: i64,
        d_max: i64,
        s2: i64,
        d: i64,
        cols: &mut Vec<usize>,
        out: &mut Vec<(usize, BorderStrip)>,
    ) {
        let i = cols.len() as i64 + 1;
        for di in 0..n {
            if d + di > d_max {
                break;
            }
            let (s2n, dn) = (s2 + di * (2 * i - 1), d + di);
            cols.push((n - di) as usize);
            let value = n * s2n - dn * dn;
            let size: usize = cols.iter().sum();
            if di >= 1 && value <= bound && size % n as usize == k {
                let rel = value - base;
                debug_assert!(rel >= 0 && rel % (2 * n) == 0);
                out.push(((rel / (2 * n)) as usize, BorderStrip::new(cols.clone()).unwrap()));
            }
            let room = d_max - dn;
            if room >= 1 {
                let lb = |f: i64| n * (s2n + f * (2 * i + 1)) - (dn + f) * (dn + f);
                if lb(1).min(lb(room)) <= bound {
                    go(n, k, bound, base, d_max, s2n, dn, cols, out);
                }
            }
            cols.pop();
        }
    }
    go(ni, k, bound, base, d_max, 0, 0, &mut cols, &mut out);
    out.sort();
    out
}

/// Which form of the strip decomposition to assemble.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// `Σ_{|κ| ≡ k} q^{…} s_κ`.
    A,
    /// `Σ_{|κ| ≡ n−k} q^{…} s_{κ^c}`.
    B,
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(Variant::A),
            "b" => Ok(Variant::B),
            _ => Err(crate::error::parse_err(s, "expected a or b")),
        }
    }
}

/// `Σ_{l ∈ Z^n, Σl = k} q^{(Σ l_i² − k)/2} x^l / (q)_∞^{n−1}` at offset `Δ_k`,
/// relation mode.
pub fn level1_theta(n: usize, k: usize, order: usize) -> Result<QSeries> {
    check_sector(n, k)?;
    let ctx = RingContext::new(n, true);
    let mut s = QSeries::zero(ctx, delta(n, k), order);
    let limit = (2 * order + k) as i64;
    let mut l = Vec::with_capacity(n);
    fn go(n: usize, k: i64, limit: i64, sq: i64, sum: i64, l: &mut Vec<i64>, s: &mut QSeries) {
        if l.len() + 1 == n {
            let last = k - sum;
            let total = sq + last * last;
            if total <= limit {
                l.push(last);
                let v: Vec<i32> = l.iter().map(|&x| x as i32).collect();
                let mono = LaurentPolynomial::monomial(s.ctx(), ExponentVector::from_integer(&v), QPoly::one());
                s.add_at(((total - k) / 2) as usize, &mono).unwrap();
                l.pop();
            }
            return;
        }
        let mut r = 0;
        while (r + 1) * (r + 1) <= limit {
            r += 1;
        }
        for x in -r..=r {
            if sq + x * x > limit {
                continue;
            }
            l.push(x);
            go(n, k, limit, sq + x * x, sum + x, l, s);
            l.pop();
        }
    }
    go(n, k as i64, limit, 0, 0, &mut l, &mut s);
    Ok(s.mul_q_series(&inverse_euler_power(n - 1, order)))
}

fn check_sector(n: usize, k: usize) -> Result<()> {
    if n < 2 || k >= n {
        Err(Error::Domain(format!("need n >= 2 and 0 <= k < n, got n={n}, k={k}")))
    } else {
        Ok(())
    }
}

/// The border-strip side, variant a or b, at offset `Δ_k`, relation mode.
pub fn level1_decomposition(n: usize, k: usize, order: usize, variant: Variant) -> Result<QSeries> {
    level1_decomposition_with_slack(n, k, order, variant, 0)
}

/// As [`level1_decomposition`] with a widened strip search box.
pub fn level1_decomposition_with_slack(
    n: usize,
    k: usize,
    order: usize,
    variant: Variant,
    d_slack: usize,
) -> Result<QSeries> {
    check_sector(n, k)?;
    let ctx = RingContext::new(n, true);
    let mut s = QSeries::zero(ctx, delta(n, k), order);
    match variant {
        Variant::A => {
            for (j, bs) in level1_strips(n, k, order, d_slack) {
                s.add_at(j, &schur_border_strip(&bs, n, true))?;
            }
        }
        Variant::B => {
            let kb = (n - k) % n;
            // Δ_{n−k} = Δ_k, so the relative exponents carry over.
            for (j, bs) in level1_strips(n, kb, order, d_slack) {
                let comp = bs.realize().complement(n)?;
                s.add_at(j, &schur_jacobi_trudi(&comp, n, true))?;
            }
        }
    }
    Ok(s)
}

/// `Z_N^P = q^{E_N} H_N(q^{−1}, x)` as a series at offset 0 and order `E_N`.
pub fn polychronakos_partition(big_n: usize, n: usize, relation: bool) -> QSeries {
    let e_n = ground_energy(big_n, n);
    assert!(e_n.is_integer(), "E_N is an integer");
    let e_n = e_n.to_integer();
    let h = rogers_szego(big_n, n).with_relation(relation).invert_q().shift_q(e_n as i32);
    QSeries::from_polynomial(&h, Rational64::from(0), e_n as usize).expect("degrees lie in 0..=E_N")
}

/// `Σ_{h ∈ Sp_N} q^{Σ i(h_i − h^{(N̄)}_i)} s_{⟨m_1,…,m_r⟩}` with strips of size `N`.
pub fn sp_n_partition(big_n: usize, n: usize, relation: bool) -> QSeries {
    let ctx = RingContext::new(n, relation);
    let mut acc = LaurentPolynomial::zero(ctx);
    for h in enumerate_sp_n(big_n, n) {
        acc += &schur_border_strip(&h.kappa(), n, relation).shift_q(h.energy() as i32);
    }
    let order = ground_energy(big_n, n).to_integer().max(0) as usize;
    let top = acc.q_range().map_or(0, |(_, hi)| hi.max(0) as usize);
    QSeries::from_polynomial(&acc, Rational64::from(0), order.max(top)).expect("energies are nonnegative")
}

/// `q^{Δ_k + E_N} H_N(q^{−1}, x)` with `k = N mod n`, relation mode: the
/// finite-`N` approximation to the sector-`k` character.
pub fn finite_character(big_n: usize, n: usize) -> QSeries {
    let z = polychronakos_partition(big_n, n, true);
    z.shift_offset(delta(n, big_n % n))
}

/// Compares the first `window` coefficients of [`finite_character`] at `N`
/// and `N + n`. Errors if `E_N + 1 < window`, where the comparison would be
/// vacuous.
pub fn stabilization(big_n: usize, n: usize, window: usize) -> Result<crate::polyring::Comparison> {
    if ground_energy(big_n, n).to_integer() + 1 < window as i64 {
        return Err(Error::Domain(format!(
            "E_N = {} is too small for a window of {window}",
            ground_energy(big_n, n)
        )));
    }
    let a = finite_character(big_n, n).truncate(window.saturating_sub(1));
    let b = finite_character(big_n + n, n).truncate(window.saturating_sub(1));
    a.compare(&b)
}

/// A Kostka–Foulkes polynomial with the strips that produce it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostkaResult {
    pub lambda: Partition,
    pub polynomial: QPoly,
    /// `(κ, t(κ), C(κ, λ))` for each strip with `C > 0`.
    pub strips: Vec<(BorderStrip, usize, usize)>,
}

/// `Σ_κ q^{t(κ)} C(κ, λ)` over border strips of rank `n` with `|κ| = |λ|`.
pub fn kostka_foulkes(lambda: &Partition, n: usize) -> KostkaResult {
    let mut polynomial = QPoly::zero();
    let mut strips = Vec::new();
    for bs in compositions(lambda.size(), n) {
        let c = count_lr(&bs, lambda);
        if c > 0 {
            let t = bs.t_statistic();
            polynomial.add_term(t as i32, BigInt::from(c));
            strips.push((bs, t, c));
        }
    }
    KostkaResult {
        lambda: lambda.clone(),
        polynomial,
        strips,
    }
}

/// `K_{λ,(1^N)}(q)` for every `λ ⊢ N` with at most `n` parts, peeled from
/// `Σ_k q^{Σ k_i(k_i−1)/2} (q)_N / Π (q)_{k_i} x^k` in decreasing dominance
/// order using classical Kostka numbers.
pub fn kostka_oracle_table(big_n: usize, n: usize) -> BTreeMap<Partition, QPoly> {
    let parts = partitions_of(big_n, n);
    let mut out: BTreeMap<Partition, QPoly> = BTreeMap::new();
    // partitions_of lists in reverse lexicographic order, a linear extension of dominance
    for (idx, mu) in parts.iter().enumerate() {
        let ks: Vec<usize> = (0..n).map(|i| mu.get(i)).collect();
        let shift: usize = ks.iter().map(|k| k * k.saturating_sub(1) / 2).sum();
        let mut rhs = gaussian_multinomial(big_n, &ks).expect("parts sum to N").shift(shift as i32);
        for lam in &parts[..idx] {
            let kn = kostka_number(lam, &ks);
            if kn > 0 {
                rhs = &rhs - &out[lam].scale(&BigInt::from(kn));
            }
        }
        out.insert(mu.clone(), rhs);
    }
    out
}

/// `K_{λ,(1^{|λ|})}(q)` by triangular extraction; zero if `l(λ) > n`.
pub fn kostka_oracle(lambda: &Partition, n: usize) -> QPoly {
    kostka_oracle_table(lambda.size(), n)
        .remove(lambda)
        .unwrap_or_default()
}

/// `b^{Λ_k}_λ = Σ_κ q^{|κ|(n−|κ|)/2n + t(κ)} C(κ, λ + (j^n))`, `j = (|κ|−|λ|)/n`,
/// at offset `Δ_k`; coefficients are constants of the rank-`n` ring.
pub fn branching_function(k: usize, lambda: &Partition, n: usize, order: usize) -> Result<QSeries> {
    check_sector(n, k)?;
    if lambda.len() >= n || lambda.size() % n != k {
        return Err(Error::Domain(format!(
            "need l(λ) < n and |λ| ≡ k mod n, got λ={lambda}, n={n}, k={k}"
        )));
    }
    let ctx = RingContext::new(n, true);
    let mut s = QSeries::zero(ctx, delta(n, k), order);
    for (j, bs) in level1_strips(n, k, order, 0) {
        if bs.size() < lambda.size() {
            continue;
        }
        let pad = lambda.pad_columns(n, (bs.size() - lambda.size()) / n)?;
        let c = count_lr(&bs, &pad);
        if c > 0 {
            s.add_at(j, &LaurentPolynomial::constant(ctx, QPoly::from(c as i64)))?;
        }
    }
    Ok(s)
}

/// Every nonzero branching function of sector `k` up to `order`.
pub fn branching_functions(n: usize, k: usize, order: usize) -> Result<BTreeMap<Partition, QSeries>> {
    check_sector(n, k)?;
    let mut out = BTreeMap::new();
    let max_size = level1_strips(n, k, order, 0)
        .iter()
        .map(|(_, bs)| bs.size())
        .max()
        .unwrap_or(0);
    for size in (k..=max_size).step_by(n) {
        for lambda in partitions_of(size, n - 1) {
            let b = branching_function(k, &lambda, n, order)?;
            if b.coeffs().iter().any(|c| !c.is_zero()) {
                out.insert(lambda, b);
            }
        }
    }
    Ok(out)
}

/// `Σ_λ b_λ s_λ` in relation mode.
pub fn branching_sum(n: usize, k: usize, order: usize) -> Result<QSeries> {
    let ctx = RingContext::new(n, true);
    let mut acc = QSeries::zero(ctx, delta(n, k), order);
    for (lambda, b) in branching_functions(n, k, order)? {
        let s = crate::schur::schur_enumerative(&crate::shapes::SkewDiagram::straight(lambda), n, true);
        for (j, c) in b.coeffs().iter().enumerate() {
            if !c.is_zero() {
                acc.add_at(j, &(&s * c))?;
            }
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::SkewDiagram;

    fn ctx(n: usize) -> RingContext {
        RingContext::new(n, false)
    }

    fn schur(s: &str, n: usize) -> LaurentPolynomial {
        crate::schur::schur_enumerative(&s.parse::<SkewDiagram>().unwrap(), n, false)
    }

    #[test]
    fn small_rogers_szego() {
        let n = 3;
        assert_eq!(rogers_szego(0, n), LaurentPolynomial::one(ctx(n)));
        let x: Vec<LaurentPolynomial> = (0..n).map(|i| LaurentPolynomial::var(ctx(n), i)).collect();
        let h1 = crate::polyring::sum_all(ctx(n), &x);
        assert_eq!(rogers_szego(1, n), h1);
        let mut h2 = LaurentPolynomial::zero(ctx(n));
        for i in 0..n {
            h2 += &x[i].pow(2);
            for j in i + 1..n {
                h2 += &(&x[i] * &x[j]).scale(&QPoly::from_coeffs(&[1, 1]));
            }
        }
        assert_eq!(rogers_szego(2, n), h2);
        assert_eq!(rogers_szego(4, n).eval_q_one(), h1.pow(4));
    }

    #[test]
    fn recursion_matches() {
        for n in 1..4 {
            for big_n in 0..8 {
                assert_eq!(rogers_szego_recursive(big_n, n), rogers_szego(big_n, n), "n={n} N={big_n}");
            }
        }
    }

    #[test]
    fn printed_f_examples() {
        for n in 2..4 {
            assert_eq!(f_n(0, n), LaurentPolynomial::one(ctx(n)));
            assert_eq!(f_n(1, n), schur("1", n));
            let f2 = &schur("1,1", n).shift_q(1) + &schur("2", n);
            assert_eq!(f_n(2, n), f2);
            assert_eq!(f_n(3, n), rogers_szego(3, n));
        }
    }

    #[test]
    fn a_coefficients() {
        for big_n in 1..9 {
            assert!(a_coefficient(big_n, 1, 4).is_one());
        }
        assert_eq!(a_closed(3, 2).unwrap(), QPoly::from_coeffs(&[-1, 0, 1]));
        assert_eq!(a_coefficient(3, 2, 2), a_closed(3, 2).unwrap());
    }

    #[test]
    fn theta_leading_terms() {
        let t = level1_theta(2, 0, 3).unwrap();
        assert_eq!(t.coeff(0), &LaurentPolynomial::one(RingContext::new(2, true)));
        assert_eq!(level1_theta(2, 1, 3).unwrap().offset(), Rational64::new(1, 4));
    }

    #[test]
    fn decomposition_leading_terms() {
        let d = level1_decomposition(2, 1, 2, Variant::A).unwrap();
        assert_eq!(d.coeff(0), &crate::schur::schur_enumerative(&"1".parse().unwrap(), 2, true));
        let d = level1_decomposition(3, 0, 2, Variant::A).unwrap();
        assert_eq!(d.coeff(0), &LaurentPolynomial::one(RingContext::new(3, true)));
    }

    #[test]
    fn strip_search_box_is_large_enough() {
        for n in 2..5 {
            for k in 0..n {
                let plain = level1_strips(n, k, 5, 0);
                let wide = level1_strips(n, k, 5, 2 * n);
                assert_eq!(plain, wide, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn kostka_small() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert!(kostka_foulkes(&p("1"), 1).polynomial.is_one());
        assert!(kostka_foulkes(&p("1,1"), 2).polynomial.is_one());
        assert_eq!(kostka_foulkes(&p("2"), 2).polynomial, QPoly::q_pow(1));
        assert_eq!(kostka_oracle(&p("2"), 2), QPoly::q_pow(1));
        assert_eq!(kostka_oracle(&p("3"), 3), QPoly::q_pow(3));
    }

    #[test]
    fn kostka_worked_example() {
        let lambda: Partition = "3,2,1".parse().unwrap();
        let r = kostka_foulkes(&lambda, 3);
        assert_eq!(r.polynomial, QPoly::from_coeffs(&[0, 0, 0, 0, 1, 2, 2, 3, 3, 2, 2, 1]));
        assert_eq!(r.strips.len(), 14);
        assert_eq!(kostka_oracle(&lambda, 3), r.polynomial);
    }

    #[test]
    fn theta_equals_decomposition() {
        for (n, order) in [(2, 8), (3, 6), (4, 4)] {
            for k in 0..n {
                let theta = level1_theta(n, k, order).unwrap();
                for v in [Variant::A, Variant::B] {
                    let d = level1_decomposition(n, k, order, v).unwrap();
                    let cmp = theta.compare(&d).unwrap();
                    assert!(cmp.equal(), "n={n} k={k} {v:?}: {:?}", cmp.first_mismatch);
                }
            }
        }
    }

    #[test]
    fn branching_functions_reassemble() {
        for (n, k, order) in [(2, 0, 5), (2, 1, 5), (3, 1, 4)] {
            let d = level1_decomposition(n, k, order, Variant::A).unwrap();
            let b = branching_sum(n, k, order).unwrap();
            assert!(d.compare(&b).unwrap().equal(), "n={n} k={k}");
        }
    }

    #[test]
    fn polychronakos_three_ways() {
        for n in 2..4 {
            for big_n in 1..6 {
                let p = polychronakos_partition(big_n, n, false);
                let sp = sp_n_partition(big_n, n, false);
                let z = crate::spectra::z_vertex(big_n, n, false);
                let c = p.compare(&sp).unwrap();
                assert!(c.equal(), "n={n} N={big_n} {:?}\n{}\n{}", c.first_mismatch, p.pretty(), sp.pretty());
                let c = p.compare(&z).unwrap();
                assert!(c.equal(), "n={n} N={big_n} {:?}\n{}\n{}", c.first_mismatch, p.pretty(), z.pretty());
            }
        }
    }

    #[test]
    fn finite_characters_stabilize() {
        for n in 2..4 {
            for big_n in 2 * n..2 * n + 4 {
                assert!(stabilization(big_n, n, 3).unwrap().equal(), "n={n} N={big_n}");
                let theta = level1_theta(n, big_n % n, 2).unwrap();
                assert!(theta.compare(&finite_character(big_n, n)).unwrap().equal());
            }
        }
        assert!(!stabilization(3, 2, 3).unwrap().equal());
        assert!(stabilization(1, 2, 3).is_err());
    }

    #[test]
    fn ordered_partitions_split_term_by_term() {
        // appending a part 1 or incrementing the last part gives every ordered partition of m once
        for m in 2..=6 {
            for big_n in m..m + 3 {
                let mut rebuilt = Vec::new();
                for ks in ordered_partitions(m - 1, m) {
                    let c = c_exponent(big_n - 1, m - 1, &ks);
                    let mut a = ks.clone();
                    a.push(1);
                    assert_eq!(c_exponent(big_n, m, &a), c);
                    let mut b = ks.clone();
                    *b.last_mut().unwrap() += 1;
                    assert_eq!(c_exponent(big_n, m, &b), c + big_n as i64 - 1);
                    rebuilt.push(a);
                    rebuilt.push(b);
                }
                rebuilt.sort();
                let mut all = ordered_partitions(m, m);
                all.sort();
                assert_eq!(rebuilt, all);
                let factor = &QPoly::one() - &QPoly::q_pow(big_n as i32 - 1);
                assert_eq!(a_coefficient(big_n, m, m), -(&factor * &a_coefficient(big_n - 1, m - 1, m)));
            }
        }
    }

    #[test]
    fn rogers_szego_generating_function() {
        // x_{n+1} stands for t; both sides truncated at t^4 and q^6
        let (max_t, max_q) = (4i32, 6i32);
        for n in 2..4 {
            let big = RingContext::new(n + 1, false);
            let trunc = |p: &LaurentPolynomial| {
                LaurentPolynomial::from_terms(
                    big,
                    p.terms().filter(|(v, _)| v.doubled()[n] <= 2 * max_t).map(|(v, c)| {
                        let c = QPoly::from_terms(c.terms().filter(|(e, _)| *e <= max_q).map(|(e, x)| (e, x.clone())));
                        (v.clone(), c)
                    }),
                )
            };
            let t = LaurentPolynomial::var(big, n);
            let mut lhs = LaurentPolynomial::one(big);
            for i in 0..n {
                for j in 0..=max_q {
                    let u = (&t * &LaurentPolynomial::var(big, i)).shift_q(j);
                    let mut geo = LaurentPolynomial::one(big);
                    for a in 1..=max_t {
                        geo += &u.pow(a as u32);
                    }
                    lhs = trunc(&(&lhs * &geo));
                }
            }
            let mut rhs = LaurentPolynomial::zero(big);
            for big_n in 0..=max_t as usize {
                let inv: Vec<i64> = {
                    // 1/(q)_N to order max_q by long division
                    let p = q_pochhammer(big_n);
                    let mut out = vec![0i64; max_q as usize + 1];
                    for d in 0..=max_q as usize {
                        let mut c = if d == 0 { 1 } else { 0 };
                        for e in 1..=d {
                            let pe: i64 = p.coeff(e as i32).try_into().unwrap();
                            c -= pe * out[d - e];
                        }
                        out[d] = c;
                    }
                    out
                };
                let inv = QPoly::from_coeffs(&inv);
                let h = rogers_szego(big_n, n);
                let lifted = LaurentPolynomial::from_terms(
                    big,
                    h.terms().map(|(v, c)| {
                        let mut d = v.doubled().to_vec();
                        d.push(2 * big_n as i32);
                        (ExponentVector::from_doubled(d), c * &inv)
                    }),
                );
                rhs += &lifted;
            }
            assert_eq!(lhs, trunc(&rhs), "n={n}");
        }
    }
}
