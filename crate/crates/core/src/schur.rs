//! Skew Schur functions by tableau enumeration, by the Jacobi–Trudi
//! determinant in elementary symmetric polynomials, and by the border-strip
//! determinant; conjugates and Schur expansions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{parse_err, Error, Result};
use crate::polyring::{
    determinant, elementary_table, variables, ExponentVector, LaurentPolynomial, QPoly, RingContext,
};
use crate::shapes::{partitions_of, BorderStrip, Partition, SkewDiagram};
use crate::tableaux::{enumerate_sst, enumerate_sst_with_content, lr_tableaux};

/// Which construction to use for `s_{λ/μ}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Enumeration,
    JacobiTrudi,
    Strip,
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "enum" => Ok(Method::Enumeration),
            "jt" => Ok(Method::JacobiTrudi),
            "strip" | "det" => Ok(Method::Strip),
            _ => Err(parse_err(s, "expected enum, jt or strip")),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Enumeration => "enum",
            Method::JacobiTrudi => "jt",
            Method::Strip => "strip",
        })
    }
}

/// `e_0..e_n` of `x_1..x_n`, indexed with zero outside that range.
pub struct Elementary {
    ctx: RingContext,
    table: Vec<LaurentPolynomial>,
}

impl Elementary {
    pub fn new(ctx: RingContext) -> Self {
        Self {
            ctx,
            table: elementary_table(ctx, &variables(ctx)),
        }
    }

    pub fn get(&self, m: i64) -> LaurentPolynomial {
        if m < 0 {
            return LaurentPolynomial::zero(self.ctx);
        }
        self.table
            .get(m as usize)
            .cloned()
            .unwrap_or_else(|| LaurentPolynomial::zero(self.ctx))
    }
}

/// `Σ_{T ∈ SST(λ/μ)} x^{wt(T)}`.
pub fn schur_enumerative(shape: &SkewDiagram, n: usize, relation: bool) -> LaurentPolynomial {
    let ctx = RingContext::new(n, relation);
    let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for t in enumerate_sst(shape, n) {
        *counts.entry(t.content()).or_default() += 1;
    }
    LaurentPolynomial::from_terms(
        ctx,
        counts
            .into_iter()
            .map(|(c, k)| (ExponentVector::from_content(&c), QPoly::from(k as i64))),
    )
}

/// `det(e_{λ'_i − μ'_j − i + j})_{1 ≤ i,j ≤ r}` with `r = max(λ_1, 1)`.
pub fn schur_jacobi_trudi(shape: &SkewDiagram, n: usize, relation: bool) -> LaurentPolynomial {
    let ctx = RingContext::new(n, relation);
    let e = Elementary::new(ctx);
    let (lc, mc) = (shape.outer().conjugate(), shape.inner().conjugate());
    let r = shape.width().max(1);
    let m: Vec<Vec<LaurentPolynomial>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| e.get(lc.get(i) as i64 - mc.get(j) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    determinant(ctx, &m).expect("square matrix in one context")
}

/// The `r×r` strip matrix: entry `(i, j)` for `j ≥ i` is `e_{m_{r−j+1}+⋯+m_{r−i+1}}`,
/// ones on the subdiagonal, zeros below it.
pub fn strip_matrix(bs: &BorderStrip, e: &Elementary) -> Vec<Vec<LaurentPolynomial>> {
    let m = bs.columns();
    let r = m.len();
    let zero = LaurentPolynomial::zero(e.ctx);
    let one = LaurentPolynomial::one(e.ctx);
    (1..=r)
        .map(|i| {
            (1..=r)
                .map(|j| {
                    if j + 1 == i {
                        one.clone()
                    } else if j >= i {
                        let s: usize = (r - j + 1..=r - i + 1).map(|l| m[l - 1]).sum();
                        e.get(s as i64)
                    } else {
                        zero.clone()
                    }
                })
                .collect()
        })
        .collect()
}

/// `s_{⟨m_1,…,m_r⟩}` as the determinant of [`strip_matrix`]; `1` for the empty strip.
pub fn schur_border_strip_det(bs: &BorderStrip, n: usize, relation: bool) -> LaurentPolynomial {
    let ctx = RingContext::new(n, relation);
    let e = Elementary::new(ctx);
    determinant(ctx, &strip_matrix(bs, &e)).expect("square matrix in one context")
}

/// `s_{⟨m_1,…,m_j⟩}` for `j = 0..r` via first-row expansion:
/// `s_j = Σ_{i=1}^{j} (−1)^{i+1} e_{m_j+⋯+m_{j−i+1}} s_{j−i}`.
pub fn strip_prefix_schurs(bs: &BorderStrip, e: &Elementary) -> Vec<LaurentPolynomial> {
    let m = bs.columns();
    let mut s = vec![LaurentPolynomial::one(e.ctx)];
    for j in 1..=m.len() {
        let mut acc = LaurentPolynomial::zero(e.ctx);
        let mut sum = 0;
        for i in 1..=j {
            sum += m[j - i];
            let term = &e.get(sum as i64) * &s[j - i];
            if i % 2 == 1 {
                acc += &term;
            } else {
                acc = &acc - &term;
            }
        }
        s.push(acc);
    }
    s
}

/// `s_{⟨m_1,…,m_r⟩}` by the first-row recursion.
pub fn schur_border_strip(bs: &BorderStrip, n: usize, relation: bool) -> LaurentPolynomial {
    let e = Elementary::new(RingContext::new(n, relation));
    strip_prefix_schurs(bs, &e).pop().unwrap()
}

/// Positions `i` (1-based) with `m_i + m_{i+1} ≥ n + 1`, where the strip
/// function splits into the product of the two halves.
pub fn factorization_points(bs: &BorderStrip, n: usize) -> Vec<usize> {
    bs.columns()
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] + w[1] > n)
        .map(|(i, _)| i + 1)
        .collect()
}

/// `s_{⟨m_1,…,m_i⟩} · s_{⟨m_{i+1},…,m_r⟩}`.
pub fn split_product(bs: &BorderStrip, i: usize, n: usize, relation: bool) -> Result<LaurentPolynomial> {
    let m = bs.columns();
    if i == 0 || i >= m.len() {
        return Err(Error::Domain(format!("cannot split {bs} after column {i}")));
    }
    let left = BorderStrip::new(m[..i].to_vec())?;
    let right = BorderStrip::new(m[i..].to_vec())?;
    Ok(&schur_border_strip(&left, n, relation) * &schur_border_strip(&right, n, relation))
}

/// `s_{λ/μ}` by the requested construction. `Strip` requires a border strip.
pub fn schur(shape: &SkewDiagram, n: usize, relation: bool, method: Method) -> Result<LaurentPolynomial> {
    match method {
        Method::Enumeration => Ok(schur_enumerative(shape, n, relation)),
        Method::JacobiTrudi => Ok(schur_jacobi_trudi(shape, n, relation)),
        Method::Strip => {
            let bs = shape
                .as_border_strip()
                .ok_or_else(|| Error::Domain(format!("{shape} is not a border strip")))?;
            Ok(schur_border_strip_det(&bs, n, relation))
        }
    }
}

/// The two expressions of the conjugate `s*_{λ/μ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugateSchur {
    /// `det(e_{n − λ'_i + μ'_j + i − j})`.
    pub determinant: LaurentPolynomial,
    /// `Σ_{T ∈ SST(λ/μ)} x^{−wt(T)}`.
    pub inverted_sum: LaurentPolynomial,
}

/// Both forms of `s*_{λ/μ}`. They coincide in relation mode; without the
/// relation the determinant equals `(x_1⋯x_n)^r` times the inverted sum,
/// `r = max(λ_1, 1)`.
pub fn schur_conjugate(shape: &SkewDiagram, n: usize, relation: bool) -> ConjugateSchur {
    let ctx = RingContext::new(n, relation);
    let e = Elementary::new(ctx);
    let (lc, mc) = (shape.outer().conjugate(), shape.inner().conjugate());
    let r = shape.width().max(1);
    let m: Vec<Vec<LaurentPolynomial>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    e.get(n as i64 - lc.get(i) as i64 + mc.get(j) as i64 + i as i64 - j as i64)
                })
                .collect()
        })
        .collect();
    ConjugateSchur {
        determinant: determinant(ctx, &m).expect("square matrix in one context"),
        inverted_sum: schur_enumerative(shape, n, relation).invert_x(),
    }
}

/// Classical Kostka number: SST of shape `λ` and content `μ`.
pub fn kostka_number(lambda: &Partition, mu: &[usize]) -> usize {
    enumerate_sst_with_content(&SkewDiagram::straight(lambda.clone()), mu).count()
}

/// Expansion `s_{λ/μ} = Σ_ν c_ν s_ν` over `ν` with at most `n` parts.
///
/// Border strips count lattice-word tableaux directly; other shapes peel off
/// the lexicographically leading monomial `x^ν`, which is always dominant.
pub fn lr_expand(shape: &SkewDiagram, n: usize) -> BTreeMap<Partition, BigInt> {
    if let Some(bs) = shape.as_border_strip() {
        let realized = bs.realize();
        return partitions_of(shape.size(), n)
            .into_iter()
            .filter_map(|nu| {
                let c = lr_tableaux(&realized, &nu).count();
                (c > 0).then(|| (nu, BigInt::from(c)))
            })
            .collect();
    }
    schur_expand(&schur_enumerative(shape, n, false))
}

/// Triangular extraction of Schur coefficients from a symmetric polynomial
/// with integer coefficients (relation mode off).
pub fn schur_expand(p: &LaurentPolynomial) -> BTreeMap<Partition, BigInt> {
    let n = p.ctx().n;
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    loop {
        let leading = rest.terms().next_back().map(|(v, c)| (v.clone(), c.clone()));
        let Some((v, c)) = leading else { break };
        let parts: Vec<usize> = v.doubled().iter().map(|&d| (d / 2) as usize).collect();
        let nu = Partition::new(parts).expect("leading monomial of a symmetric polynomial is dominant");
        let s = schur_enumerative(&SkewDiagram::straight(nu.clone()), n, false);
        let k = c.coeff(0);
        debug_assert!(c.len() == 1 && !k.is_zero());
        rest = &rest - &s.scale_int(&k);
        out.insert(nu, k);
    }
    out
}

/// `Σ_ν c_ν s_ν` for an expansion.
pub fn schur_sum(expansion: &BTreeMap<Partition, BigInt>, n: usize) -> LaurentPolynomial {
    let ctx = RingContext::new(n, false);
    let mut acc = LaurentPolynomial::zero(ctx);
    for (nu, c) in expansion {
        let s = schur_enumerative(&SkewDiagram::straight(nu.clone()), n, false);
        acc += &if c.is_one() { s } else { s.scale_int(c) };
    }
    acc
}
