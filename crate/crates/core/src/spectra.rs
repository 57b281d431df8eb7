//! Spin configurations of the level-1 `sl_n` vertex model, the local energy
//! map and its fibers, and the finite truncations used for the
//! Haldane–Shastry motifs.
//!
//! A configuration is `(a_1, …, a_m, (1, 2, …, n)^∞)` stored as its finite
//! prefix; its sector is `m mod n`. Letter `a` stands for the weight `ε_a`.

use std::fmt;

use num_rational::Rational64;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polyring::{ExponentVector, LaurentPolynomial, QPoly, QSeries, RingContext};
use crate::shapes::{compositions, BorderStrip};
use crate::tableaux::{Alphabet, Tableau};

/// `H(a, b)`: `0` if `a < b`, else `1`.
pub fn local_energy(a: usize, b: usize) -> u8 {
    u8::from(a >= b)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinConfiguration {
    n: usize,
    prefix: Vec<usize>,
}

impl SpinConfiguration {
    /// Canonicalizes by trimming trailing copies of `(1, …, n)`.
    pub fn new(n: usize, prefix: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("rank must be positive".into()));
        }
        if let Some(&a) = prefix.iter().find(|&&a| a == 0 || a > n) {
            return Err(Error::Domain(format!("letter {a} outside 1..{n}")));
        }
        let mut prefix = prefix;
        let period: Vec<usize> = (1..=n).collect();
        while prefix.len() >= n && prefix[prefix.len() - n..] == period[..] {
            prefix.truncate(prefix.len() - n);
        }
        Ok(Self { n, prefix })
    }

    /// The boundary configuration `(1, …, k, (1, …, n)^∞)`.
    pub fn ground(n: usize, k: usize) -> Self {
        Self::new(n, (1..=k % n).collect()).expect("letters in range")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn prefix(&self) -> &[usize] {
        &self.prefix
    }

    pub fn sector(&self) -> usize {
        self.prefix.len() % self.n
    }

    /// `s_i` for `i ≥ 1`.
    pub fn spin(&self, i: usize) -> usize {
        let m = self.prefix.len();
        if i <= m {
            self.prefix[i - 1]
        } else {
            (i - m - 1) % self.n + 1
        }
    }

    /// `h_1, …, h_m` for the stored prefix; `h_m = 1` always.
    pub fn h_prefix(&self) -> Vec<u8> {
        (1..=self.prefix.len())
            .map(|i| local_energy(self.spin(i), self.spin(i + 1)))
            .collect()
    }

    /// `E = Σ_i i (H(s_i, s_{i+1}) − H(s^{(k)}_i, s^{(k)}_{i+1}))`; the summand
    /// vanishes beyond the prefix.
    pub fn energy(&self) -> i64 {
        let ground = Self::ground(self.n, self.sector());
        (1..=self.prefix.len())
            .map(|i| {
                let h = local_energy(self.spin(i), self.spin(i + 1)) as i64;
                let h0 = local_energy(ground.spin(i), ground.spin(i + 1)) as i64;
                i as i64 * (h - h0)
            })
            .sum()
    }

    /// Doubled content of the prefix, `Σ ε_{a_i}`.
    pub fn weight(&self) -> ExponentVector {
        let mut c = vec![0usize; self.n];
        for &a in &self.prefix {
            c[a - 1] += 1;
        }
        ExponentVector::from_content(&c)
    }

    /// The local energy map `h`.
    pub fn h_map(&self) -> SpectrumPoint {
        let blocks = blocks_of(&self.h_prefix());
        SpectrumPoint::new(self.n, blocks).expect("image of the energy map has bounded gaps")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "prefix": self.prefix,
            "sector": self.sector(),
            "energy": self.energy(),
            "x2": self.weight().doubled(),
        })
    }
}

impl fmt::Display for SpinConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.prefix.iter().map(usize::to_string).collect();
        let tail: Vec<String> = (1..=self.n).map(|a| a.to_string()).collect();
        write!(f, "({}|({})^inf)", p.join(","), tail.join(","))
    }
}

/// Splits a `0/1` word ending in `1` into block lengths `[m_1, …, m_r]`.
fn blocks_of(h: &[u8]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut run = 0;
    for &b in h {
        run += 1;
        if b == 1 {
            out.push(run);
            run = 0;
        }
    }
    debug_assert_eq!(run, 0, "word must end in 1");
    out
}

/// A point `h = (0^{m_1−1}1, …, 0^{m_r−1}1, (0^{n−1}1)^∞)` of the spectrum with
/// `1 ≤ m_i ≤ n` and `m_r ≠ n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpectrumPoint {
    n: usize,
    blocks: Vec<usize>,
}

impl SpectrumPoint {
    /// Validates the gap condition and strips trailing blocks equal to `n`.
    pub fn new(n: usize, mut blocks: Vec<usize>) -> Result<Self> {
        if let Some(&m) = blocks.iter().find(|&&m| m == 0 || m > n) {
            return Err(Error::Domain(format!(
                "block {m} violates 1 <= m <= {n} (at most n-1 consecutive zeros)"
            )));
        }
        while blocks.last() == Some(&n) {
            blocks.pop();
        }
        Ok(Self { n, blocks })
    }

    pub fn ground(n: usize, k: usize) -> Self {
        Self::new(n, if k.is_multiple_of(n) { vec![] } else { vec![k % n] }).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn sector(&self) -> usize {
        self.blocks.iter().sum::<usize>() % self.n
    }

    /// `h_1, …, h_len`.
    pub fn sequence(&self, len: usize) -> Vec<u8> {
        let mut h = Vec::with_capacity(len);
        let tail = std::iter::repeat(self.n);
        for m in self.blocks.iter().copied().chain(tail) {
            for j in 1..=m {
                if h.len() == len {
                    return h;
                }
                h.push(u8::from(j == m));
            }
        }
        h
    }

    /// The border strip `κ(h) = ⟨m_1, …, m_r⟩`.
    pub fn kappa(&self) -> BorderStrip {
        BorderStrip::new(self.blocks.clone()).expect("blocks are positive")
    }

    /// `Σ_i i (h_i − h^{(k)}_i)`, summed directly over the sequence.
    pub fn energy(&self) -> i64 {
        let m: usize = self.blocks.iter().sum();
        let h = self.sequence(m);
        let h0 = Self::ground(self.n, self.sector()).sequence(m);
        (0..m).map(|i| (i as i64 + 1) * (h[i] as i64 - h0[i] as i64)).sum()
    }

    /// Closed form of [`Self::energy`]: `|κ|(n−|κ|)/2n + t(κ) − Δ_k`.
    pub fn energy_closed_form(&self) -> Rational64 {
        let size = self.kappa().size() as i64;
        let n = self.n as i64;
        Rational64::new(size * (n - size), 2 * n) + Rational64::from(self.kappa().t_statistic() as i64)
            - delta(self.n, self.sector())
    }
}

impl fmt::Display for SpectrumPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<String> = self.blocks.iter().map(usize::to_string).collect();
        write!(f, "[{}]", b.join(","))
    }
}

/// `Δ_k = k(n−k)/2n`.
pub fn delta(n: usize, k: usize) -> Rational64 {
    Rational64::new((k * (n - k)) as i64, 2 * n as i64)
}

/// Reads a tableau of shape `κ(h)` in reading order as a configuration prefix.
pub fn phi(t: &Tableau, h: &SpectrumPoint) -> Result<SpinConfiguration> {
    if t.shape() != &h.kappa().realize() {
        return Err(Error::Domain(format!(
            "tableau shape {} is not the realization of {}",
            t.shape(),
            h.kappa()
        )));
    }
    let word = t.reading_word().into_iter().map(|a| a as usize).collect();
    SpinConfiguration::new(h.n(), word)
}

/// Writes a configuration's prefix back into the realized strip of `h(s)`.
pub fn phi_inverse(s: &SpinConfiguration) -> Result<Tableau> {
    let shape = s.h_map().kappa().realize();
    let order = crate::tableaux::reading_order(&shape);
    if order.len() != s.prefix().len() {
        return Err(Error::Domain("prefix length differs from the strip size".into()));
    }
    let mut rows: Vec<Vec<i32>> = (0..shape.outer().len())
        .map(|i| vec![0; shape.outer().get(i) - shape.inner().get(i)])
        .collect();
    for (&(i, j), &a) in order.iter().zip(s.prefix()) {
        rows[i][j - shape.inner().get(i)] = a as i32;
    }
    Tableau::new(shape, rows, Alphabet::Standard(s.n()))
}

/// All configurations with `h(s) = h`, found by scanning letter words of
/// length `|κ(h)|` against the local energy rule alone. Partial words are
/// abandoned as soon as an adjacent pair disagrees with `h`.
pub fn enumerate_fiber(h: &SpectrumPoint) -> Vec<SpinConfiguration> {
    let n = h.n();
    let len: usize = h.blocks().iter().sum();
    let target = h.sequence(len);
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(len);
    fn go(n: usize, len: usize, target: &[u8], word: &mut Vec<usize>, out: &mut Vec<SpinConfiguration>) {
        if word.len() == len {
            let s = SpinConfiguration::new(n, word.clone()).unwrap();
            if s.prefix().len() == len {
                out.push(s);
            }
            return;
        }
        for a in 1..=n {
            if let Some(&prev) = word.last() {
                if local_energy(prev, a) != target[word.len() - 1] {
                    continue;
                }
            }
            word.push(a);
            go(n, len, target, word, out);
            word.pop();
        }
    }
    go(n, len, &target, &mut word, &mut out);
    out
}

/// `χ_h = Σ_{s ∈ h^{-1}(h)} x^{wt(s)}`.
pub fn fiber_character(h: &SpectrumPoint, relation: bool) -> LaurentPolynomial {
    let ctx = RingContext::new(h.n(), relation);
    LaurentPolynomial::from_terms(
        ctx,
        enumerate_fiber(h).into_iter().map(|s| (s.weight(), QPoly::one())),
    )
}

/// A point of `Sp_N`: blocks summing to `N` with `1 ≤ m_i ≤ n`, last block
/// allowed to equal `n`. Its strip keeps all `N` boxes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteSpectrumPoint {
    n: usize,
    blocks: Vec<usize>,
}

impl FiniteSpectrumPoint {
    pub fn new(n: usize, blocks: Vec<usize>) -> Result<Self> {
        if let Some(&m) = blocks.iter().find(|&&m| m == 0 || m > n) {
            return Err(Error::Domain(format!("block {m} violates 1 <= m <= {n}")));
        }
        Ok(Self { n, blocks })
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn big_n(&self) -> usize {
        self.blocks.iter().sum()
    }

    pub fn kappa(&self) -> BorderStrip {
        BorderStrip::new(self.blocks.clone()).expect("blocks are positive")
    }

    /// `h_1, …, h_N`.
    pub fn sequence(&self) -> Vec<u8> {
        self.blocks
            .iter()
            .flat_map(|&m| (1..=m).map(move |j| u8::from(j == m)))
            .collect()
    }

    /// `Σ_{i ≤ N} i (h_i − h^{(N̄)}_i)`.
    pub fn energy(&self) -> i64 {
        let big_n = self.big_n();
        let ground = SpectrumPoint::ground(self.n, big_n % self.n).sequence(big_n);
        self.sequence()
            .iter()
            .zip(&ground)
            .enumerate()
            .map(|(i, (&h, &g))| (i as i64 + 1) * (h as i64 - g as i64))
            .sum()
    }
}

/// `Sp_N` as all compositions of `N` with parts at most `n`.
pub fn enumerate_sp_n(big_n: usize, n: usize) -> Vec<FiniteSpectrumPoint> {
    compositions(big_n, n)
        .into_iter()
        .map(|bs| FiniteSpectrumPoint {
            n,
            blocks: bs.columns().to_vec(),
        })
        .collect()
}

fn check_motif(d: &[u8], n: usize) -> Result<()> {
    if d.iter().any(|&b| b > 1) {
        return Err(Error::InvalidMotif(format!("{d:?} is not binary")));
    }
    let mut run = 0;
    for &b in d {
        run = if b == 1 { run + 1 } else { 0 };
        if run >= n {
            return Err(Error::InvalidMotif(format!("{d:?} has {n} consecutive ones")));
        }
    }
    Ok(())
}

/// `h_d = (1−d_1, …, 1−d_{N−1}, 1, …)` as a point of `Sp_N`, `N = |d| + 1`.
pub fn motif_to_spectrum(d: &[u8], n: usize) -> Result<FiniteSpectrumPoint> {
    check_motif(d, n)?;
    let mut h: Vec<u8> = d.iter().map(|&b| 1 - b).collect();
    h.push(1);
    FiniteSpectrumPoint::new(n, blocks_of(&h))
}

/// Motifs of length `N−1` with no run of `n` ones (`N ≥ 1`).
pub fn enumerate_motifs(big_n: usize, n: usize) -> Vec<Vec<u8>> {
    let len = big_n.saturating_sub(1);
    (0..1u64 << len)
        .map(|bits| (0..len).map(|i| ((bits >> i) & 1) as u8).collect::<Vec<u8>>())
        .filter(|d| check_motif(d, n).is_ok())
        .collect()
}

/// Haldane–Shastry eigenvalue `Σ_{i=1}^{N−1} i d_i (i d_i − N)`.
pub fn hs_eigenvalue(d: &[u8], big_n: usize) -> Result<i64> {
    if d.len() + 1 != big_n {
        return Err(Error::InvalidMotif(format!("motif length {} for N = {big_n}", d.len())));
    }
    let n = big_n as i64;
    Ok(d.iter()
        .enumerate()
        .map(|(i, &b)| {
            let id = (i as i64 + 1) * b as i64;
            id * (id - n)
        })
        .sum())
}

/// `E_d = −Σ i d_i + E_N`.
pub fn motif_energy(d: &[u8], n: usize) -> Result<i64> {
    check_motif(d, n)?;
    let big_n = d.len() + 1;
    let e_n = ground_energy(big_n, n);
    assert!(e_n.is_integer());
    Ok(e_n.to_integer() - d.iter().enumerate().map(|(i, &b)| (i as i64 + 1) * b as i64).sum::<i64>())
}

/// `E_N = (n−1)N²/2n − N̄(n−N̄)/2n`.
pub fn ground_energy(big_n: usize, n: usize) -> Rational64 {
    let (bn, nn) = (big_n as i64, n as i64);
    let nbar = bn % nn;
    Rational64::new((nn - 1) * bn * bn - nbar * (nn - nbar), 2 * nn)
}

/// `Z_N^vertex = Σ_{s ∈ S_N} q^{E(s)} x^{wt(s)}` by direct summation over the
/// `n^N` configurations `(a_1, …, a_N, (1, …, n)^∞)`.
pub fn z_vertex(big_n: usize, n: usize, relation: bool) -> QSeries {
    let ctx = RingContext::new(n, relation);
    let mut acc = LaurentPolynomial::zero(ctx);
    let mut word = vec![1usize; big_n];
    loop {
        let s = SpinConfiguration::new(n, word.clone()).unwrap();
        // the canonical form drops whole (1..n) blocks, which only matter without the relation
        let mut content = vec![0; n];
        word.iter().for_each(|&a| content[a - 1] += 1);
        acc.add_term(ExponentVector::from_content(&content), QPoly::q_pow(s.energy() as i32));
        let Some(pos) = word.iter().rposition(|&a| a < n) else {
            break;
        };
        word[pos] += 1;
        word[pos + 1..].iter_mut().for_each(|a| *a = 1);
    }
    let top = acc.q_range().map_or(0, |(_, hi)| hi.max(0) as usize);
    let order = top.max(ground_energy(big_n, n).to_integer() as usize);
    QSeries::from_polynomial(&acc, Rational64::from(0), order).expect("energies are nonnegative")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::enumerate_sst;

    #[test]
    fn local_energy_values() {
        assert_eq!(local_energy(1, 2), 0);
        assert_eq!(local_energy(2, 2), 1);
        assert_eq!(local_energy(3, 1), 1);
    }

    #[test]
    fn ground_states() {
        for n in 2..5 {
            for k in 0..n {
                let s = SpinConfiguration::ground(n, k);
                let h = s.h_map();
                assert_eq!(h.blocks(), if k == 0 { vec![] } else { vec![k] });
                assert_eq!(s.energy(), 0);
                let mut c = vec![0; n];
                c[..k].iter_mut().for_each(|x| *x = 1);
                assert_eq!(s.weight(), ExponentVector::from_content(&c));
            }
        }
    }

    #[test]
    fn two_one() {
        let s = SpinConfiguration::new(2, vec![2, 1]).unwrap();
        assert_eq!(s.h_map().blocks(), &[1, 1]);
        assert_eq!(s.energy(), 1);
        let rel = LaurentPolynomial::monomial(RingContext::new(2, true), s.weight(), QPoly::one());
        assert_eq!(rel, LaurentPolynomial::one(RingContext::new(2, true)));
        let padded = SpinConfiguration::new(2, vec![2, 1, 1, 2]).unwrap();
        assert_eq!(padded, s);
        assert_eq!(padded.energy(), 1);
    }

    #[test]
    fn trims_to_ground() {
        let s = SpinConfiguration::new(3, vec![1, 2, 3]).unwrap();
        assert!(s.prefix().is_empty());
        assert!(s.h_map().blocks().is_empty());
        let again = SpinConfiguration::new(3, s.prefix().to_vec()).unwrap();
        assert_eq!(again, s);
    }

    #[test]
    fn fibers() {
        let h = SpectrumPoint::new(2, vec![1, 1]).unwrap();
        let fiber = enumerate_fiber(&h);
        let prefixes: Vec<Vec<usize>> = fiber.iter().map(|s| s.prefix().to_vec()).collect();
        assert_eq!(prefixes, vec![vec![1, 1], vec![2, 1], vec![2, 2]]);
        assert_eq!(enumerate_fiber(&SpectrumPoint::ground(3, 0)).len(), 1);
    }

    #[test]
    fn phi_matches_fiber() {
        let h = SpectrumPoint::new(2, vec![1, 1]).unwrap();
        let shape = h.kappa().realize();
        let mut images: Vec<SpinConfiguration> = enumerate_sst(&shape, 2)
            .map(|t| phi(&t, &h).unwrap())
            .collect();
        images.sort();
        assert_eq!(images, enumerate_fiber(&h));
        for s in &images {
            assert_eq!(phi(&phi_inverse(s).unwrap(), &h).unwrap(), *s);
        }
    }

    #[test]
    fn column_filling_is_admissible() {
        // Numbering every column 1, 2, 3, … from the top always works.
        for blocks in [vec![1, 3, 2], vec![2, 2], vec![3, 1, 1]] {
            let h = SpectrumPoint::new(3, blocks).unwrap();
            let shape = h.kappa().realize();
            let rows: Vec<Vec<i32>> = (0..shape.outer().len())
                .map(|i| {
                    (shape.inner().get(i)..shape.outer().get(i))
                        .map(|j| (i - shape.column_rows(j).start + 1) as i32)
                        .collect()
                })
                .collect();
            let t = Tableau::new(shape, rows, Alphabet::Standard(3)).unwrap();
            assert_eq!(phi(&t, &h).unwrap().h_map(), h);
        }
    }

    #[test]
    fn closed_form_energy() {
        for n in 2..5 {
            for size in 0..8 {
                for bs in compositions(size, n) {
                    let h = SpectrumPoint::new(n, bs.columns().to_vec()).unwrap();
                    if h.blocks() != bs.columns() {
                        continue;
                    }
                    assert_eq!(Rational64::from(h.energy()), h.energy_closed_form(), "{h}");
                }
            }
        }
    }

    #[test]
    fn motifs() {
        assert_eq!(motif_to_spectrum(&[0, 0], 3).unwrap().blocks(), &[1, 1, 1]);
        assert_eq!(motif_to_spectrum(&[1, 1], 3).unwrap().blocks(), &[3]);
        assert_eq!(motif_to_spectrum(&[1, 0], 3).unwrap().blocks(), &[2, 1]);
        assert!(matches!(motif_to_spectrum(&[1, 1], 2), Err(Error::InvalidMotif(_))));
        for n in 2..4 {
            for big_n in 1..7 {
                assert_eq!(enumerate_motifs(big_n, n).len(), enumerate_sp_n(big_n, n).len());
            }
        }
        let sp2: Vec<Vec<usize>> = enumerate_sp_n(2, 2).iter().map(|h| h.blocks().to_vec()).collect();
        assert_eq!(sp2, vec![vec![1, 1], vec![2]]);
        assert_eq!(hs_eigenvalue(&[1, 0], 3).unwrap(), -2);
    }

    #[test]
    fn motif_energy_matches_spectrum() {
        for n in 2..4 {
            for big_n in 1..7 {
                for d in enumerate_motifs(big_n, n) {
                    let h = motif_to_spectrum(&d, n).unwrap();
                    assert_eq!(motif_energy(&d, n).unwrap(), h.energy());
                }
            }
        }
    }

    #[test]
    fn small_vertex_sums() {
        let z0 = z_vertex(0, 2, false);
        assert_eq!(z0.order(), 0);
        assert_eq!(z0.coeff(0), &LaurentPolynomial::one(RingContext::new(2, false)));
        for (big_n, n) in [(3, 2), (3, 3), (4, 2)] {
            let total: i64 = z_vertex(big_n, n, false)
                .eval_x_one()
                .iter()
                .map(|c| i64::try_from(c).unwrap())
                .sum();
            assert_eq!(total, (n as i64).pow(big_n as u32));
        }
        assert_eq!(ground_energy(2, 2), Rational64::from(1));
        assert_eq!(ground_energy(0, 3), Rational64::from(0));
    }
}
