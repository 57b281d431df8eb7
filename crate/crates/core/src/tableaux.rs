//! Fillings of skew diagrams: semi-standard tableaux over `1..n`, admissible
//! tableaux over the signed alphabet, lattice-word counting and GZ schemes.
//!
//! Enumeration visits cells column by column from the right, top to bottom
//! inside a column. For border strips this is also the order in which the
//! boxes are read off as a spin configuration and as a lattice word.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polyring::ExponentVector;
use crate::shapes::{BorderStrip, Partition, SkewDiagram};

/// Letters of a filling. `Standard(n)` uses `1..n`; `SignedB(n)` uses
/// `1 ≺ ⋯ ≺ n ≺ 0 ≺ −n ≺ ⋯ ≺ −1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alphabet {
    Standard(usize),
    SignedB(usize),
}

impl Alphabet {
    pub fn rank(&self) -> usize {
        match *self {
            Alphabet::Standard(n) | Alphabet::SignedB(n) => n,
        }
    }

    /// Letters in increasing order.
    pub fn letters(&self) -> Vec<i32> {
        match *self {
            Alphabet::Standard(n) => (1..=n as i32).collect(),
            Alphabet::SignedB(n) => {
                let n = n as i32;
                (1..=n).chain(std::iter::once(0)).chain(-n..=-1).collect()
            }
        }
    }

    /// Position of a letter in the total order, or `None` if it is not a letter.
    pub fn position(&self, a: i32) -> Option<usize> {
        let n = self.rank() as i32;
        match *self {
            Alphabet::Standard(_) => (1..=n).contains(&a).then(|| a as usize - 1),
            Alphabet::SignedB(_) => match a {
                1.. if a <= n => Some(a as usize - 1),
                0 => Some(n as usize),
                _ if (-n..=-1).contains(&a) => Some((2 * n + 1 + a) as usize),
                _ => None,
            },
        }
    }

    fn lt(&self, a: i32, b: i32) -> bool {
        self.position(a) < self.position(b)
    }

    /// Vertical rule for `a` directly above `b`.
    pub fn column_ok(&self, a: i32, b: i32) -> bool {
        match self {
            Alphabet::Standard(_) => a < b,
            Alphabet::SignedB(_) => self.lt(a, b) || (a == 0 && b == 0),
        }
    }

    /// Horizontal rule for `b` directly left of `a`.
    pub fn row_ok(&self, b: i32, a: i32) -> bool {
        match self {
            Alphabet::Standard(_) => a >= b,
            Alphabet::SignedB(_) => !self.lt(a, b) && !(a == 0 && b == 0),
        }
    }
}

/// A filling of a skew diagram. `rows[i]` holds the entries of row `i`
/// left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewDiagram,
    rows: Vec<Vec<i32>>,
    alphabet: Alphabet,
    half_weight: Vec<(usize, usize)>,
}

impl Tableau {
    /// Builds a tableau from its rows and checks the filling rules.
    pub fn new(shape: SkewDiagram, rows: Vec<Vec<i32>>, alphabet: Alphabet) -> Result<Self> {
        let t = Self::unchecked(shape, rows, alphabet, Vec::new())?;
        if !t.is_valid() {
            return Err(Error::Domain("filling violates the row or column rule".into()));
        }
        Ok(t)
    }

    fn unchecked(
        shape: SkewDiagram,
        rows: Vec<Vec<i32>>,
        alphabet: Alphabet,
        half_weight: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let expect: Vec<usize> = (0..shape.outer().len())
            .map(|i| shape.outer().get(i) - shape.inner().get(i))
            .collect();
        let got: Vec<usize> = rows.iter().map(Vec::len).collect();
        if expect != got {
            return Err(Error::Domain(format!(
                "row lengths {got:?} do not fit shape {shape}"
            )));
        }
        if rows.iter().flatten().any(|&a| alphabet.position(a).is_none()) {
            return Err(Error::Domain("entry outside the alphabet".into()));
        }
        Ok(Self {
            shape,
            rows,
            alphabet,
            half_weight,
        })
    }

    pub fn shape(&self) -> &SkewDiagram {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<i32>] {
        &self.rows
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Cells whose letters count with half weight.
    pub fn half_weight_cells(&self) -> &[(usize, usize)] {
        &self.half_weight
    }

    pub fn entry(&self, (i, j): (usize, usize)) -> Option<i32> {
        if !self.shape.contains_cell((i, j)) {
            return None;
        }
        Some(self.rows[i][j - self.shape.inner().get(i)])
    }

    /// Checks every vertical and horizontal adjacency.
    pub fn is_valid(&self) -> bool {
        self.shape.cells().into_iter().all(|(i, j)| {
            let a = self.entry((i, j)).unwrap();
            let below = self.entry((i + 1, j)).is_none_or(|b| self.alphabet.column_ok(a, b));
            let right = self.entry((i, j + 1)).is_none_or(|c| self.alphabet.row_ok(a, c));
            below && right
        })
    }

    /// Letters in reading order: columns right to left, each top to bottom.
    pub fn reading_word(&self) -> Vec<i32> {
        reading_order(&self.shape)
            .into_iter()
            .map(|c| self.entry(c).unwrap())
            .collect()
    }

    /// Number of occurrences of each letter `1..n` (standard alphabet).
    pub fn content(&self) -> Vec<usize> {
        let mut c = vec![0; self.alphabet.rank()];
        for &a in self.rows.iter().flatten() {
            if a >= 1 {
                c[a as usize - 1] += 1;
            }
        }
        c
    }

    /// Doubled weight: `ε_a` per letter (`ε_0 = 0`, `ε_{−a} = −ε_a`), halved on
    /// the half-weight cells.
    pub fn weight(&self) -> ExponentVector {
        let mut w = vec![0i32; self.alphabet.rank()];
        for (i, j) in self.shape.cells() {
            let a = self.entry((i, j)).unwrap();
            if a == 0 {
                continue;
            }
            let unit = if self.half_weight.contains(&(i, j)) { 1 } else { 2 };
            let idx = a.unsigned_abs() as usize - 1;
            w[idx] += if a > 0 { unit } else { -unit };
        }
        ExponentVector::from_doubled(w)
    }

    /// Every prefix of the reading word has at least as many `a` as `a+1`.
    pub fn is_lattice_permutation(&self) -> bool {
        let mut counts = vec![0usize; self.alphabet.rank() + 2];
        for a in self.reading_word() {
            let a = a as usize;
            counts[a] += 1;
            if a >= 2 && counts[a] > counts[a - 1] {
                return false;
            }
        }
        true
    }

    pub fn to_json(&self) -> Value {
        json!({ "shape": self.shape.to_string(), "rows": self.rows })
    }
}

/// Cells in enumeration order: columns right to left, top to bottom within each.
pub fn reading_order(shape: &SkewDiagram) -> Vec<(usize, usize)> {
    (0..shape.width())
        .rev()
        .flat_map(|j| shape.column_rows(j).map(move |i| (i, j)))
        .collect()
}

/// Extra pruning applied during enumeration.
#[derive(Clone, Debug, Default)]
struct Restriction {
    content: Option<Vec<usize>>,
    lattice: bool,
}

/// Lazy backtracking over fillings of a fixed shape.
pub struct Fillings {
    shape: SkewDiagram,
    alphabet: Alphabet,
    cells: Vec<(usize, usize)>,
    above: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
    fixed: Vec<Option<i32>>,
    half_weight: Vec<(usize, usize)>,
    letters: Vec<i32>,
    restriction: Restriction,
    choice: Vec<usize>,
    counts: Vec<usize>,
    started: bool,
    done: bool,
}

impl Fillings {
    fn new(
        shape: SkewDiagram,
        alphabet: Alphabet,
        fixed_cells: BTreeMap<(usize, usize), i32>,
        half_weight: Vec<(usize, usize)>,
        restriction: Restriction,
    ) -> Self {
        let cells = reading_order(&shape);
        let index: BTreeMap<(usize, usize), usize> =
            cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let above = cells
            .iter()
            .map(|&(i, j)| i.checked_sub(1).and_then(|i| index.get(&(i, j)).copied()))
            .collect();
        let right = cells.iter().map(|&(i, j)| index.get(&(i, j + 1)).copied()).collect();
        let fixed = cells.iter().map(|c| fixed_cells.get(c).copied()).collect();
        let letters = alphabet.letters();
        let counts = vec![0; letters.len() + 2];
        Self {
            shape,
            alphabet,
            cells,
            above,
            right,
            fixed,
            half_weight,
            letters,
            restriction,
            choice: Vec::new(),
            counts,
            started: false,
            done: false,
        }
    }

    fn letter(&self, k: usize) -> i32 {
        self.fixed[k].unwrap_or_else(|| self.letters[self.choice[k]])
    }

    fn fits(&self, k: usize, a: i32) -> bool {
        if let Some(u) = self.above[k] {
            if !self.alphabet.column_ok(self.letter(u), a) {
                return false;
            }
        }
        if let Some(r) = self.right[k] {
            if !self.alphabet.row_ok(a, self.letter(r)) {
                return false;
            }
        }
        if let Alphabet::Standard(_) = self.alphabet {
            let a = a as usize;
            if let Some(content) = &self.restriction.content {
                if self.counts[a] + 1 > content.get(a - 1).copied().unwrap_or(0) {
                    return false;
                }
            }
            if self.restriction.lattice && a >= 2 && self.counts[a] + 1 > self.counts[a - 1] {
                return false;
            }
        }
        true
    }

    fn count(&mut self, a: i32, delta: isize) {
        if let Alphabet::Standard(_) = self.alphabet {
            let slot = &mut self.counts[a as usize];
            *slot = (*slot as isize + delta) as usize;
        }
    }

    /// Tries candidates for cell `k` from index `from`; pushes the first fit.
    fn place(&mut self, k: usize, from: usize) -> bool {
        let range = match self.fixed[k] {
            Some(_) if from == 0 => 0..1,
            Some(_) => return false,
            None => from..self.letters.len(),
        };
        for c in range {
            let a = self.fixed[k].unwrap_or(self.letters[c]);
            if self.fits(k, a) {
                self.choice.push(c);
                self.count(a, 1);
                return true;
            }
        }
        false
    }

    /// Backtracks to the next partial filling, then extends it greedily.
    fn advance(&mut self, mut resume: bool) -> bool {
        loop {
            if resume {
                let Some(c) = self.choice.pop() else {
                    return false;
                };
                let k = self.choice.len();
                let a = self.fixed[k].unwrap_or(self.letters[c]);
                self.count(a, -1);
                if !self.place(k, c + 1) {
                    continue;
                }
            }
            resume = true;
            while self.choice.len() < self.cells.len() {
                let k = self.choice.len();
                if !self.place(k, 0) {
                    break;
                }
            }
            if self.choice.len() == self.cells.len() {
                return true;
            }
        }
    }

    fn current(&self) -> Tableau {
        let mut rows: Vec<Vec<i32>> = (0..self.shape.outer().len())
            .map(|i| vec![0; self.shape.outer().get(i) - self.shape.inner().get(i)])
            .collect();
        for (k, &(i, j)) in self.cells.iter().enumerate() {
            rows[i][j - self.shape.inner().get(i)] = self.letter(k);
        }
        Tableau {
            shape: self.shape.clone(),
            rows,
            alphabet: self.alphabet,
            half_weight: self.half_weight.clone(),
        }
    }
}

impl Iterator for Fillings {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        let found = self.advance(self.started);
        self.started = true;
        if found {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

/// All semi-standard tableaux of `shape` over `1..n`.
pub fn enumerate_sst(shape: &SkewDiagram, n: usize) -> Fillings {
    Fillings::new(
        shape.clone(),
        Alphabet::Standard(n),
        BTreeMap::new(),
        Vec::new(),
        Restriction::default(),
    )
}

/// Semi-standard tableaux of `shape` with the given content.
pub fn enumerate_sst_with_content(shape: &SkewDiagram, content: &[usize]) -> Fillings {
    let n = content.len().max(1);
    Fillings::new(
        shape.clone(),
        Alphabet::Standard(n),
        BTreeMap::new(),
        Vec::new(),
        Restriction {
            content: Some(content.to_vec()),
            lattice: false,
        },
    )
}

/// Number of SST of shape `κ` and content `λ` whose reading word is a lattice word.
pub fn count_lr(strip: &BorderStrip, content: &Partition) -> usize {
    lr_tableaux(&strip.realize(), content).count()
}

/// The lattice-word SST of `shape` with content `content`, reading columns
/// right to left and top to bottom.
pub fn lr_tableaux(shape: &SkewDiagram, content: &Partition) -> Fillings {
    let n = content.len().max(1);
    let size_ok = shape.size() == content.size();
    let restriction = Restriction {
        content: Some(if size_ok { content.parts().to_vec() } else { vec![0; n] }),
        lattice: true,
    };
    let mut it = Fillings::new(
        shape.clone(),
        Alphabet::Standard(n),
        BTreeMap::new(),
        Vec::new(),
        restriction,
    );
    if !size_ok {
        it.done = true;
    }
    it
}

/// Admissible tableaux of `shape` over the signed alphabet.
pub fn enumerate_admissible(shape: &SkewDiagram, n: usize) -> Fillings {
    Fillings::new(
        shape.clone(),
        Alphabet::SignedB(n),
        BTreeMap::new(),
        Vec::new(),
        Restriction::default(),
    )
}

/// Admissible tableaux of the realized strip `κ = ⟨m_1,…,m_r⟩` with `m_r = 2n`,
/// whose leftmost column ends in the frozen letters `−n, …, −1` (top to
/// bottom). Those `n` cells carry half weight.
pub fn enumerate_l_admissible(strip: &BorderStrip, n: usize) -> Result<Fillings> {
    if strip.columns().last() != Some(&(2 * n)) {
        return Err(Error::Domain(format!(
            "{strip} must end with a column of length {}",
            2 * n
        )));
    }
    let shape = strip.realize();
    let bottom = shape.column_rows(0).end;
    let frozen: BTreeMap<(usize, usize), i32> = (0..n)
        .map(|k| ((bottom - n + k, 0), k as i32 - n as i32))
        .collect();
    let half = frozen.keys().copied().collect();
    Ok(Fillings::new(
        shape,
        Alphabet::SignedB(n),
        frozen,
        half,
        Restriction::default(),
    ))
}

/// Interlacing array `λ^{(0)} ⊂ λ^{(1)} ⊂ ⋯ ⊂ λ^{(n)}`; row `m` is padded
/// with zeros to length `N + m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GzScheme {
    rows: Vec<Vec<usize>>,
}

impl GzScheme {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::InvalidScheme("no rows".into()));
        };
        let base = first.len();
        for (m, row) in rows.iter().enumerate() {
            if row.len() != base + m {
                return Err(Error::InvalidScheme(format!(
                    "row {m} has length {} instead of {}",
                    row.len(),
                    base + m
                )));
            }
        }
        for m in 1..rows.len() {
            let (hi, lo) = (&rows[m], &rows[m - 1]);
            for i in 0..lo.len() {
                if !(hi[i] >= lo[i] && lo[i] >= hi[i + 1]) {
                    return Err(Error::InvalidScheme(format!(
                        "rows {} and {m} do not interlace at position {}",
                        m - 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Number of letters `n`.
    pub fn rank(&self) -> usize {
        self.rows.len() - 1
    }

    /// Doubled weight `Σ_m (|λ^{(m)}| − |λ^{(m−1)}|) ε_m`.
    pub fn weight(&self) -> ExponentVector {
        let sizes: Vec<usize> = self.rows.iter().map(|r| r.iter().sum()).collect();
        let content: Vec<usize> = sizes.windows(2).map(|w| w[1] - w[0]).collect();
        ExponentVector::from_content(&content)
    }
}

/// Rows `λ^{(m)} = μ ∪ {cells with entry ≤ m}`, padded to length `N + m`.
pub fn gz_from_sst(t: &Tableau, big_n: usize) -> Result<GzScheme> {
    let Alphabet::Standard(n) = t.alphabet() else {
        return Err(Error::Domain("GZ schemes need the standard alphabet".into()));
    };
    let shape = t.shape();
    let mut rows = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let len = big_n + m;
        if shape.outer().len() > big_n + n || shape.inner().len() > big_n {
            return Err(Error::Domain(format!("{shape} does not fit N = {big_n}")));
        }
        let row: Vec<usize> = (0..len)
            .map(|i| {
                let base = shape.inner().get(i);
                let extra = t
                    .rows()
                    .get(i)
                    .map_or(0, |r| r.iter().filter(|&&a| a as usize <= m).count());
                base + extra
            })
            .collect();
        rows.push(row);
    }
    GzScheme::new(rows)
}

/// Inscribes `m` in `λ^{(m)}/λ^{(m−1)}`.
pub fn sst_from_gz(g: &GzScheme) -> Result<Tableau> {
    let n = g.rank();
    let outer = Partition::new(g.rows[n].clone())?;
    let inner = Partition::new(g.rows[0].clone())?;
    let shape = SkewDiagram::new(outer, inner)?;
    let rows: Vec<Vec<i32>> = (0..shape.outer().len())
        .map(|i| {
            let mut row = Vec::new();
            for m in 1..=n {
                let lo = g.rows[m - 1].get(i).copied().unwrap_or(0);
                let hi = g.rows[m][i];
                row.extend(std::iter::repeat_n(m as i32, hi - lo));
            }
            row
        })
        .collect();
    Tableau::new(shape, rows, Alphabet::Standard(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn sd(s: &str) -> SkewDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn single_row_two_letters() {
        let all: Vec<Tableau> = enumerate_sst(&sd("2"), 2).collect();
        let rows: Vec<Vec<i32>> = all.iter().map(|t| t.rows()[0].clone()).collect();
        assert_eq!(rows, vec![vec![1, 1], vec![1, 2], vec![2, 2]]);
    }

    #[test]
    fn too_tall_and_empty() {
        assert_eq!(enumerate_sst(&sd("1,1,1"), 2).count(), 0);
        let empty: Vec<Tableau> = enumerate_sst(&SkewDiagram::empty(), 3).collect();
        assert_eq!(empty.len(), 1);
        assert_eq!(empty[0].weight(), ExponentVector::zero(3));
    }

    #[test]
    fn enumeration_is_valid_and_duplicate_free() {
        for s in ["3,2/1", "3,3,1/2", "2,2", "4,2,1/2,1"] {
            let all: Vec<Tableau> = enumerate_sst(&sd(s), 3).collect();
            assert!(all.iter().all(Tableau::is_valid));
            let set: HashSet<_> = all.iter().cloned().collect();
            assert_eq!(set.len(), all.len());
        }
        // hook-content count for (2,1) with three letters is 8
        assert_eq!(enumerate_sst(&sd("2,1"), 3).count(), 8);
    }

    #[test]
    fn worked_example_weight() {
        let t = Tableau::new(
            sd("5,4,4,1/4,3,2"),
            vec![vec![2], vec![1], vec![2, 2], vec![3]],
            Alphabet::Standard(3),
        )
        .unwrap();
        assert_eq!(t.weight(), ExponentVector::from_integer(&[1, 3, 1]));
    }

    #[test]
    fn lattice_counts() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        let bs = |v: Vec<usize>| BorderStrip::new(v).unwrap();
        assert_eq!(count_lr(&bs(vec![1]), &p("1")), 1);
        assert_eq!(count_lr(&bs(vec![2]), &p("2")), 0);
        assert_eq!(count_lr(&bs(vec![2]), &p("1,1")), 1);
        assert_eq!(count_lr(&bs(vec![1, 1]), &p("1")), 0);
        for t in lr_tableaux(&bs(vec![1, 2, 1]).realize(), &p("2,1,1")) {
            assert!(t.is_lattice_permutation());
        }
    }

    #[test]
    fn signed_order() {
        let a = Alphabet::SignedB(2);
        assert_eq!(a.letters(), vec![1, 2, 0, -2, -1]);
        assert!(a.column_ok(0, 0));
        assert!(!a.row_ok(0, 0));
        assert!(a.column_ok(0, -2));
        assert!(!a.column_ok(-1, 1));
        assert!(a.row_ok(1, -1));
    }

    #[test]
    fn l_admissible_single_column() {
        let all: Vec<Tableau> = enumerate_l_admissible(&BorderStrip::new(vec![2]).unwrap(), 1)
            .unwrap()
            .collect();
        assert_eq!(all.len(), 2);
        let tops: Vec<i32> = all.iter().map(|t| t.rows()[0][0]).collect();
        assert_eq!(tops, vec![1, 0]);
        let w: Vec<i32> = all.iter().map(|t| t.weight().doubled()[0]).collect();
        assert_eq!(w, vec![1, -1]);
        assert!(enumerate_l_admissible(&BorderStrip::new(vec![3]).unwrap(), 1).is_err());
    }

    #[test]
    fn zero_pairs() {
        let col = Tableau::new(sd("1,1"), vec![vec![0], vec![0]], Alphabet::SignedB(1));
        assert!(col.is_ok());
        let row = Tableau::new(sd("2"), vec![vec![0, 0]], Alphabet::SignedB(1));
        assert!(row.is_err());
    }

    #[test]
    fn worked_gz_example() {
        let t = Tableau::new(
            sd("5,4,4,1/4,3,2"),
            vec![vec![2], vec![1], vec![2, 2], vec![3]],
            Alphabet::Standard(3),
        )
        .unwrap();
        let g = gz_from_sst(&t, 3).unwrap();
        assert_eq!(
            g.rows(),
            &[
                vec![4, 3, 2],
                vec![4, 4, 2, 0],
                vec![5, 4, 4, 0, 0],
                vec![5, 4, 4, 1, 0, 0]
            ]
        );
        assert_eq!(sst_from_gz(&g).unwrap(), t);
        assert_eq!(g.weight(), t.weight());
    }

    #[test]
    fn gz_round_trip() {
        let shape = sd("3,2/1");
        let mut count = 0;
        for t in enumerate_sst(&shape, 2) {
            let g = gz_from_sst(&t, 2).unwrap();
            assert_eq!(sst_from_gz(&g).unwrap(), t);
            count += 1;
        }
        assert!(count > 0);
        let bad = GzScheme::new(vec![vec![1], vec![0, 0]]);
        assert!(matches!(bad, Err(Error::InvalidScheme(_))));
    }
}
