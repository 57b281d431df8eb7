//! Partitions, skew diagrams and border strips.
//!
//! Cells are addressed zero-based as `(row, col)`, rows counted from the top and
//! columns from the left. Border strips are stored by their column lengths
//! `⟨m_1,…,m_r⟩`, listed from the rightmost column to the leftmost.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;

use crate::error::{parse_err, Error, Result};

/// A weakly decreasing sequence of positive integers; trailing zeros are dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part (zero-based), zero beyond the length.
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let width = self.get(0);
        Self((1..=width).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// Componentwise `self ⊇ other`.
    pub fn contains(&self, other: &Self) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.0[i] >= other.0[i])
    }

    /// Dominance order `self ⊵ other` for partitions of equal size.
    pub fn dominates(&self, other: &Self) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.get(i);
            b += other.get(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Adds `j` to each of the first `n` parts (the `(jⁿ)` shift used for padded contents).
    pub fn pad_columns(&self, n: usize, j: usize) -> Result<Self> {
        if self.len() > n {
            return Err(Error::Domain(format!("{self} has more than {n} parts")));
        }
        Self::new((0..n).map(|i| self.get(i) + j).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| parse_err(tok.trim(), "expected a nonnegative integer"))
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s)?).map_err(|_| parse_err(s, "parts must be weakly decreasing"))
    }
}

/// All partitions of `size` with at most `max_len` parts, in reverse
/// lexicographic order (which refines reverse dominance).
pub fn partitions_of(size: usize, max_len: usize) -> Vec<Partition> {
    fn go(rest: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(size, size, max_len, &mut Vec::new(), &mut out);
    out
}

/// The skew diagram `λ/μ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewDiagram {
    outer: Partition,
    inner: Partition,
}

impl SkewDiagram {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Domain(format!("{outer} does not contain {inner}")));
        }
        Ok(Self { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        Self {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn empty() -> Self {
        Self::straight(Partition::empty())
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Number of columns of the outer shape, `λ_1`.
    pub fn width(&self) -> usize {
        self.outer.get(0)
    }

    /// Cells `(row, col)` in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.outer.len())
            .flat_map(|i| (self.inner.get(i)..self.outer.get(i)).map(move |j| (i, j)))
            .collect()
    }

    pub fn contains_cell(&self, (i, j): (usize, usize)) -> bool {
        self.inner.get(i) <= j && j < self.outer.get(i)
    }

    /// `λ'_j − μ'_j` for `j = 0..λ_1`, left to right.
    pub fn column_lengths(&self) -> Vec<usize> {
        let (lc, mc) = (self.outer.conjugate(), self.inner.conjugate());
        (0..self.width()).map(|j| lc.get(j) - mc.get(j)).collect()
    }

    /// Rows of the cells in column `j`, top to bottom (a contiguous range).
    pub fn column_rows(&self, j: usize) -> std::ops::Range<usize> {
        let (lc, mc) = (self.outer.conjugate(), self.inner.conjugate());
        mc.get(j)..lc.get(j)
    }

    /// Every column has at most `n` cells.
    pub fn is_rank(&self, n: usize) -> bool {
        self.column_lengths().iter().all(|&c| c <= n)
    }

    /// Side-adjacent connectivity, by flood fill. The empty diagram counts as connected.
    pub fn is_connected(&self) -> bool {
        let cells: BTreeSet<(usize, usize)> = self.cells().into_iter().collect();
        let Some(&start) = cells.iter().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some((i, j)) = stack.pop() {
            let mut nbrs = vec![(i + 1, j), (i, j + 1)];
            if i > 0 {
                nbrs.push((i - 1, j));
            }
            if j > 0 {
                nbrs.push((i, j - 1));
            }
            for c in nbrs {
                if cells.contains(&c) && seen.insert(c) {
                    stack.push(c);
                }
            }
        }
        seen.len() == cells.len()
    }

    pub fn has_2x2_block(&self) -> bool {
        self.cells().into_iter().any(|(i, j)| {
            self.contains_cell((i + 1, j))
                && self.contains_cell((i, j + 1))
                && self.contains_cell((i + 1, j + 1))
        })
    }

    pub fn is_border_strip(&self) -> bool {
        self.is_connected() && !self.has_2x2_block()
    }

    /// Column lengths right to left, if this is a border strip.
    pub fn as_border_strip(&self) -> Option<BorderStrip> {
        if !self.is_border_strip() {
            return None;
        }
        let cols: Vec<usize> = self
            .column_lengths()
            .into_iter()
            .rev()
            .filter(|&c| c > 0)
            .collect();
        Some(BorderStrip(cols))
    }

    /// `(λ/μ)^c = μ̃/λ` with `μ̃ = (λ_1^n, μ_1, μ_2, …)`.
    pub fn complement(&self, n: usize) -> Result<Self> {
        if !self.is_rank(n) {
            return Err(Error::Domain(format!("{self} has a column longer than {n}")));
        }
        let w = self.width();
        let mut tilde = vec![w; n];
        tilde.extend_from_slice(self.inner.parts());
        Self::new(Partition::new(tilde)?, self.outer.clone())
    }

    /// Drinfel'd polynomial roots, keyed by `i = 1..n−1`.
    ///
    /// Column `j` (one-based) with `λ'_j − μ'_j = i` contributes the root
    /// `−(½(λ'_j+μ'_j) − j + ½) − b`. An empty list means `P_i = 1`.
    pub fn drinfeld_polynomials(&self, n: usize) -> BTreeMap<usize, Vec<DrinfeldRoot>> {
        let (lc, mc) = (self.outer.conjugate(), self.inner.conjugate());
        let mut out: BTreeMap<usize, Vec<DrinfeldRoot>> = (1..n).map(|i| (i, Vec::new())).collect();
        for j in 1..=self.width() {
            let (l, m) = (lc.get(j - 1) as i64, mc.get(j - 1) as i64);
            let i = (l - m) as usize;
            if let Some(roots) = out.get_mut(&i) {
                let constant = -(Rational64::new(l + m, 2) - Rational64::from(j as i64) + Rational64::new(1, 2));
                roots.push(DrinfeldRoot { constant, b_coeff: -1 });
            }
        }
        for roots in out.values_mut() {
            roots.sort();
        }
        out
    }
}

impl fmt::Display for SkewDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl FromStr for SkewDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (o, i) = s.split_once('/').unwrap_or((s, ""));
        let outer: Partition = o.parse()?;
        let inner: Partition = i.parse()?;
        SkewDiagram::new(outer, inner).map_err(|_| parse_err(s, "outer shape must contain inner shape"))
    }
}

/// A root `constant + b_coeff·b` of a Drinfel'd polynomial, `b` symbolic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DrinfeldRoot {
    pub constant: Rational64,
    pub b_coeff: i64,
}

impl fmt::Display for DrinfeldRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = match self.b_coeff {
            0 => String::new(),
            1 => "b".into(),
            -1 => "-b".into(),
            c => format!("{c}b"),
        };
        if self.constant == Rational64::from(0) {
            return write!(f, "{}", if b.is_empty() { "0".into() } else { b });
        }
        let b = if self.b_coeff > 0 { format!("+{b}") } else { b };
        write!(f, "{}{}", self.constant, b)
    }
}

/// A border strip by its column lengths `⟨m_1,…,m_r⟩`, rightmost column first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BorderStrip(Vec<usize>);

impl BorderStrip {
    pub fn new(columns: Vec<usize>) -> Result<Self> {
        if columns.contains(&0) {
            return Err(Error::Domain(format!("{columns:?} has an empty column")));
        }
        Ok(Self(columns))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn columns(&self) -> &[usize] {
        &self.0
    }

    /// Number of columns `r`.
    pub fn num_columns(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `t(κ) = Σ_{i=1}^{r−1} (r−i)·m_i`.
    pub fn t_statistic(&self) -> usize {
        let r = self.0.len();
        self.0.iter().enumerate().map(|(i, m)| (r - 1 - i) * m).sum()
    }

    /// The skew diagram with these column lengths, placed with its leftmost
    /// column starting in the top row of the outer shape's last column:
    /// `λ'_i = m_1+⋯+m_{r+1−i} − r + i`, `μ'_i = m_1+⋯+m_{r−i} − r + i`.
    pub fn realize(&self) -> SkewDiagram {
        let r = self.0.len();
        let prefix: Vec<usize> = std::iter::once(0)
            .chain(self.0.iter().scan(0, |acc, m| {
                *acc += m;
                Some(*acc)
            }))
            .collect();
        let lc: Vec<usize> = (1..=r).map(|i| prefix[r + 1 - i] + i - r).collect();
        let mc: Vec<usize> = (1..=r).map(|i| prefix[r - i] + i - r).collect();
        let outer = Partition::new(lc).expect("column data decreases").conjugate();
        let inner = Partition::new(mc).expect("column data decreases").conjugate();
        SkewDiagram::new(outer, inner).expect("realized strip is nested")
    }

    /// Appends a column on the left.
    pub fn with_column(&self, m: usize) -> Self {
        let mut c = self.0.clone();
        c.push(m);
        Self(c)
    }
}

impl fmt::Display for BorderStrip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "<{}>", cols.join(","))
    }
}

impl FromStr for BorderStrip {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('<')
            .and_then(|x| x.strip_suffix('>'))
            .unwrap_or(t);
        BorderStrip::new(parse_list(inner)?).map_err(|_| parse_err(s, "column lengths must be positive"))
    }
}

/// All compositions `⟨m_1,…,m_r⟩` of `size` with `1 ≤ m_i ≤ max_part`.
pub fn compositions(size: usize, max_part: usize) -> Vec<BorderStrip> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<BorderStrip>) {
        if rest == 0 {
            out.push(BorderStrip(cur.clone()));
            return;
        }
        for m in 1..=max.min(rest) {
            cur.push(m);
            go(rest - m, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(size, max_part, &mut Vec::new(), &mut out);
    out
}
