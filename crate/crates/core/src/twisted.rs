//! The vertex model on the signed alphabet `1 ≺ ⋯ ≺ n ≺ 0 ≺ −n ≺ ⋯ ≺ −1`:
//! local energy, fibers, L-admissible characters, their determinant formula in
//! terms of `B_n` characters, and the level-1 character of the twisted affine
//! algebra as a theta function and as a strip sum.
//!
//! Weights are doubled exponent vectors (`−Λ̄_n` is `−1` in every coordinate);
//! no relation is imposed.

use std::fmt;

use num_rational::Rational64;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polyring::{
    elementary_table, inverse_euler_power, variables, determinant, ExponentVector, LaurentPolynomial,
    QPoly, QSeries, RingContext,
};
use crate::shapes::BorderStrip;
use crate::tableaux::{enumerate_l_admissible, Alphabet};

fn ctx(n: usize) -> RingContext {
    RingContext::new(n, false)
}

/// `H(a, b)`: 0 iff `a ≺ b` or `a = b = 0`.
pub fn local_energy_twisted(n: usize, a: i32, b: i32) -> u8 {
    let alpha = Alphabet::SignedB(n);
    if alpha.position(a) < alpha.position(b) || (a == 0 && b == 0) {
        0
    } else {
        1
    }
}

/// A configuration `(s_1, …, s_L, 0, 0, …)`; trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwistedConfiguration {
    n: usize,
    prefix: Vec<i32>,
}

impl TwistedConfiguration {
    pub fn new(n: usize, mut prefix: Vec<i32>) -> Result<Self> {
        let alpha = Alphabet::SignedB(n);
        if let Some(&a) = prefix.iter().find(|&&a| alpha.position(a).is_none()) {
            return Err(Error::Domain(format!("{a} is not a letter for n={n}")));
        }
        while prefix.last() == Some(&0) {
            prefix.pop();
        }
        Ok(Self { n, prefix })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn prefix(&self) -> &[i32] {
        &self.prefix
    }

    pub fn spin(&self, i: usize) -> i32 {
        self.prefix.get(i - 1).copied().unwrap_or(0)
    }

    /// `h_i = H(s_i, s_{i+1})` for `i = 1..=L`; zero afterwards.
    pub fn h_prefix(&self) -> Vec<u8> {
        (1..=self.prefix.len())
            .map(|i| local_energy_twisted(self.n, self.spin(i), self.spin(i + 1)))
            .collect()
    }

    /// `E = Σ_i i H(s_i, s_{i+1})`.
    pub fn energy(&self) -> i64 {
        self.h_prefix()
            .iter()
            .enumerate()
            .map(|(i, &h)| (i as i64 + 1) * h as i64)
            .sum()
    }

    /// `−Λ̄_n + Σ_i s_i`, doubled.
    pub fn weight(&self) -> ExponentVector {
        let mut w = vec![-1; self.n];
        for &a in &self.prefix {
            if a != 0 {
                w[a.unsigned_abs() as usize - 1] += 2 * a.signum();
            }
        }
        ExponentVector::from_doubled(w)
    }

    pub fn h_map(&self) -> TwistedSpectrumPoint {
        let mut blocks = Vec::new();
        let mut run = 0;
        for h in self.h_prefix() {
            run += 1;
            if h == 1 {
                blocks.push(run);
                run = 0;
            }
        }
        TwistedSpectrumPoint { blocks }
    }

    pub fn to_json(&self) -> Value {
        json!({"n": self.n, "prefix": self.prefix, "energy": self.energy()})
    }
}

impl fmt::Display for TwistedConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for a in &self.prefix {
            write!(f, "{a},")?;
        }
        write!(f, "0^∞)")
    }
}

/// `[m_1, …, m_r]`: the sequence with a 1 at positions `m_1, m_1+m_2, …` and
/// 0 elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwistedSpectrumPoint {
    blocks: Vec<usize>,
}

impl TwistedSpectrumPoint {
    pub fn new(blocks: Vec<usize>) -> Result<Self> {
        if blocks.contains(&0) {
            return Err(Error::Domain(format!("blocks must be positive: {blocks:?}")));
        }
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// Total length `m_1 + ⋯ + m_r` of the nonzero part.
    pub fn length(&self) -> usize {
        self.blocks.iter().sum()
    }

    pub fn sequence(&self) -> Vec<u8> {
        self.blocks
            .iter()
            .flat_map(|&m| std::iter::repeat_n(0, m - 1).chain(std::iter::once(1)))
            .collect()
    }

    /// `Σ_i i h_i`, read off the sequence.
    pub fn energy(&self) -> usize {
        self.sequence()
            .iter()
            .enumerate()
            .map(|(i, &h)| (i + 1) * h as usize)
            .sum()
    }

    /// `⟨m_1, …, m_r, 2n⟩`.
    pub fn kappa(&self, n: usize) -> BorderStrip {
        BorderStrip::new(self.blocks.clone()).unwrap().with_column(2 * n)
    }
}

impl fmt::Display for TwistedSpectrumPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|m| m.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Every configuration with local energy sequence `h`.
///
/// Past `P = m_1 + ⋯ + m_r` all `h_i` vanish, so the tail is a strictly
/// increasing run of letters from `1..n` followed by zeros. The search fixes
/// `s_1..s_P` against `h` and then the tail.
pub fn enumerate_twisted_fiber(h: &TwistedSpectrumPoint, n: usize) -> Vec<TwistedConfiguration> {
    let seq = h.sequence();
    let letters = Alphabet::SignedB(n).letters();
    let mut out = Vec::new();
    let mut word: Vec<i32> = Vec::new();
    fn tails(n: usize, start: i32, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        out.push(cur.clone());
        for a in start..=n as i32 {
            cur.push(a);
            tails(n, a + 1, cur, out);
            cur.pop();
        }
    }
    let mut all_tails = Vec::new();
    tails(n, 1, &mut Vec::new(), &mut all_tails);
    fn go(
        n: usize,
        seq: &[u8],
        letters: &[i32],
        tails: &[Vec<i32>],
        word: &mut Vec<i32>,
        out: &mut Vec<TwistedConfiguration>,
    ) {
        if word.len() == seq.len() {
            for tail in tails {
                let next = tail.first().copied().unwrap_or(0);
                let ok = match word.last() {
                    Some(&a) => local_energy_twisted(n, a, next) == seq[seq.len() - 1],
                    None => true,
                };
                if ok {
                    let mut full = word.clone();
                    full.extend(tail);
                    out.push(TwistedConfiguration::new(n, full).unwrap());
                }
            }
            return;
        }
        for &a in letters {
            if let Some(&prev) = word.last() {
                if local_energy_twisted(n, prev, a) != seq[word.len() - 1] {
                    continue;
                }
            }
            word.push(a);
            go(n, seq, letters, tails, word, out);
            word.pop();
        }
    }
    go(n, &seq, &letters, &all_tails, &mut word, &mut out);
    out
}

/// `χ_h` by summing weights over the fiber.
pub fn chi_twisted_fiber(h: &TwistedSpectrumPoint, n: usize) -> LaurentPolynomial {
    let mut acc = LaurentPolynomial::zero(ctx(n));
    for s in enumerate_twisted_fiber(h, n) {
        acc.add_term(s.weight(), QPoly::one());
    }
    acc
}

/// `s^L_{κ(h)}` by enumerating L-admissible tableaux.
pub fn chi_twisted(h: &TwistedSpectrumPoint, n: usize) -> LaurentPolynomial {
    let mut acc = LaurentPolynomial::zero(ctx(n));
    for t in enumerate_l_admissible(&h.kappa(n), n).expect("κ(h) ends in a 2n column") {
        acc.add_term(t.weight(), QPoly::one());
    }
    acc
}

/// `σ = Π_i (x_i^{1/2} + x_i^{−1/2})` and `t_m` for `0 ≤ m ≤ max_m`.
#[derive(Clone, Debug)]
pub struct BnFundamentalData {
    pub sigma: LaurentPolynomial,
    t: Vec<LaurentPolynomial>,
}

impl BnFundamentalData {
    /// `t_m`: zero for `m < 0`; `Σ_j e_{m−2j}(x, 1, x^{−1})` for `m < n`;
    /// `σ² − t_{2n−1−m}` for `m ≥ n`.
    pub fn t(&self, m: i64) -> LaurentPolynomial {
        if m < 0 {
            return LaurentPolynomial::zero(self.sigma.ctx());
        }
        let n = self.sigma.ctx().n as i64;
        if m < n {
            self.t[m as usize].clone()
        } else {
            &(&self.sigma * &self.sigma) - &self.t(2 * n - 1 - m)
        }
    }
}

pub fn bn_fundamental_data(n: usize) -> BnFundamentalData {
    let c = ctx(n);
    let mut sigma = LaurentPolynomial::one(c);
    for i in 0..n {
        let mut half = LaurentPolynomial::zero(c);
        for sign in [1, -1] {
            let mut v = vec![0; n];
            v[i] = sign;
            half.add_term(ExponentVector::from_doubled(v), QPoly::one());
        }
        sigma = &sigma * &half;
    }
    let x = variables(c);
    let mut z = x.clone();
    z.push(LaurentPolynomial::one(c));
    z.extend(x.iter().map(|v| v.invert_x()));
    let e = elementary_table(c, &z);
    let t = (0..n)
        .map(|m| {
            let mut acc = LaurentPolynomial::zero(c);
            for j in (m % 2..=m).step_by(2) {
                acc += &e[j];
            }
            acc
        })
        .collect();
    BnFundamentalData { sigma, t }
}

/// `σ · det M` where `M` is `(r+1)×(r+1)` with first row all 1s and, for
/// `i ≥ 1`, `M[i][i−1] = 1`, `M[i][j] = t_{m_{r−j+1}+⋯+m_{r−i+1}}` for `j ≥ i`.
pub fn sl_determinant(h: &TwistedSpectrumPoint, n: usize) -> Result<LaurentPolynomial> {
    sl_determinant_with(h, &bn_fundamental_data(n))
}

pub fn sl_determinant_with(h: &TwistedSpectrumPoint, data: &BnFundamentalData) -> Result<LaurentPolynomial> {
    let c = data.sigma.ctx();
    let m = h.blocks();
    let r = m.len();
    let mut matrix = vec![vec![LaurentPolynomial::zero(c); r + 1]; r + 1];
    matrix[0].iter_mut().for_each(|e| *e = LaurentPolynomial::one(c));
    for i in 1..=r {
        matrix[i][i - 1] = LaurentPolynomial::one(c);
        for j in i..=r {
            // 1-based m indices r−j+1 ..= r−i+1
            let s: usize = m[r - j..=r - i].iter().sum();
            matrix[i][j] = data.t(s as i64);
        }
    }
    Ok(&data.sigma * &determinant(c, &matrix)?)
}

/// How to evaluate `s^L_κ` inside the strip sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistedMethod {
    Enumeration,
    Determinant,
}

impl std::str::FromStr for TwistedMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "enum" => Ok(TwistedMethod::Enumeration),
            "det" => Ok(TwistedMethod::Determinant),
            _ => Err(crate::error::parse_err(s, "expected enum or det")),
        }
    }
}

/// `s^L_{κ(h)}` by the chosen method.
pub fn twisted_schur(h: &TwistedSpectrumPoint, n: usize, method: TwistedMethod) -> Result<LaurentPolynomial> {
    match method {
        TwistedMethod::Enumeration => Ok(chi_twisted(h, n)),
        TwistedMethod::Determinant => sl_determinant(h, n),
    }
}

/// All `[m_1, …, m_r]` with `t(⟨m_1, …, m_r, 2n⟩) = Σ_i (m_1+⋯+m_i) ≤ order`.
pub fn twisted_points(order: usize) -> Vec<TwistedSpectrumPoint> {
    fn go(budget: usize, acc: usize, cur: &mut Vec<usize>, out: &mut Vec<TwistedSpectrumPoint>) {
        out.push(TwistedSpectrumPoint { blocks: cur.clone() });
        // appending m raises every later prefix sum; the cheapest next step costs acc + m
        for m in 1.. {
            if acc + m > budget {
                break;
            }
            cur.push(m);
            // shift: the new column is m_{r+1}; Σ prefix sums grows by acc + m
            go(budget - (acc + m), acc + m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(order, 0, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `(q)_∞^{−n} Σ_{γ ∈ Z^n} q^{Σ γ_i(γ_i+1)/2} e^{Λ̄_n + γ}` to `order`.
pub fn twisted_level1_theta(n: usize, order: usize) -> Result<QSeries> {
    if n == 0 {
        return Err(Error::Domain("need n >= 1".into()));
    }
    let c = ctx(n);
    let mut s = QSeries::zero(c, Rational64::from(0), order);
    // γ(γ+1)/2 ≤ order
    let mut g = 0i64;
    while (g + 1) * (g + 2) / 2 <= order as i64 {
        g += 1;
    }
    let range: Vec<i64> = (-g - 1..=g).collect();
    let mut gamma = Vec::with_capacity(n);
    fn go(n: usize, order: i64, range: &[i64], e: i64, gamma: &mut Vec<i64>, s: &mut QSeries) {
        if gamma.len() == n {
            let w: Vec<i32> = gamma.iter().map(|&x| (1 + 2 * x) as i32).collect();
            let mono = LaurentPolynomial::monomial(s.ctx(), ExponentVector::from_doubled(w), QPoly::one());
            s.add_at(e as usize, &mono).unwrap();
            return;
        }
        for &x in range {
            let ex = e + x * (x + 1) / 2;
            if ex <= order {
                gamma.push(x);
                go(n, order, range, ex, gamma, s);
                gamma.pop();
            }
        }
    }
    go(n, order as i64, &range, 0, &mut gamma, &mut s);
    Ok(s.mul_q_series(&inverse_euler_power(n, order)))
}

/// `Σ_κ q^{t(κ)} s^L_κ` over strips ending in a `2n` column with `t(κ) ≤ order`.
pub fn twisted_decomposition(n: usize, order: usize, method: TwistedMethod) -> Result<QSeries> {
    if n == 0 {
        return Err(Error::Domain("need n >= 1".into()));
    }
    let data = bn_fundamental_data(n);
    let mut s = QSeries::zero(ctx(n), Rational64::from(0), order);
    for h in twisted_points(order) {
        let t = h.kappa(n).t_statistic();
        let value = match method {
            TwistedMethod::Enumeration => chi_twisted(&h, n),
            TwistedMethod::Determinant => sl_determinant_with(&h, &data)?,
        };
        s.add_at(t, &value)?;
    }
    Ok(s)
}

/// `Σ_s q^{E(s)} e^{wt(s)}` over all configurations with `E(s) ≤ order`,
/// grouped by fiber.
pub fn twisted_fiber_sum(n: usize, order: usize) -> Result<QSeries> {
    let mut s = QSeries::zero(ctx(n), Rational64::from(0), order);
    for h in twisted_points(order) {
        s.add_at(h.energy(), &chi_twisted_fiber(&h, n))?;
    }
    Ok(s)
}
