//! Sparse multivariate Laurent polynomials in `x_1..x_n` with `QPoly` coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use super::QPoly;
use crate::error::{Error, Result};

/// Rank and whether `x_1 ⋯ x_n = 1` is imposed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingContext {
    pub n: usize,
    pub relation: bool,
}

impl RingContext {
    pub fn new(n: usize, relation: bool) -> Self {
        Self { n, relation }
    }

    pub fn check(&self, other: &RingContext) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ContextMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.relation { "on" } else { "off" };
        write!(f, "n={}, relation {}", self.n, rel)
    }
}

/// Exponents of `x_1..x_n`, each stored as twice its true value so that
/// half-integer weights are exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<i32>);

impl ExponentVector {
    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// From already doubled entries.
    pub fn from_doubled(doubled: Vec<i32>) -> Self {
        Self(doubled)
    }

    /// From true integer exponents.
    pub fn from_integer(exps: &[i32]) -> Self {
        Self(exps.iter().map(|e| 2 * e).collect())
    }

    /// Exponent vector of `x_1^{c_1} ⋯ x_n^{c_n}` for a content vector.
    pub fn from_content(content: &[usize]) -> Self {
        Self(content.iter().map(|&c| 2 * c as i32).collect())
    }

    pub fn doubled(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|a| -a).collect())
    }

    /// Representative in the given context: in relation mode the minimum
    /// entry is shifted to zero.
    pub fn canonical(mut self, relation: bool) -> Self {
        if relation {
            if let Some(&m) = self.0.iter().min() {
                self.0.iter_mut().for_each(|e| *e -= m);
            }
        }
        self
    }

    /// Whether every exponent is an integer.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|e| e % 2 == 0)
    }
}

/// `Σ c_v(q) x^v` over exponent vectors `v`; no zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPolynomial {
    ctx: RingContext,
    terms: BTreeMap<ExponentVector, QPoly>,
}

impl LaurentPolynomial {
    pub fn zero(ctx: RingContext) -> Self {
        Self {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: RingContext) -> Self {
        Self::constant(ctx, QPoly::one())
    }

    pub fn constant(ctx: RingContext, c: QPoly) -> Self {
        Self::monomial(ctx, ExponentVector::zero(ctx.n), c)
    }

    pub fn monomial(ctx: RingContext, v: ExponentVector, c: QPoly) -> Self {
        assert_eq!(v.len(), ctx.n, "exponent vector length must equal the rank");
        let mut p = Self::zero(ctx);
        p.add_term(v, c);
        p
    }

    /// The variable `x_{i+1}` (zero-based index `i`).
    pub fn var(ctx: RingContext, i: usize) -> Self {
        Self::var_pow(ctx, i, 1)
    }

    /// `x_{i+1}^e` (zero-based index `i`).
    pub fn var_pow(ctx: RingContext, i: usize, e: i32) -> Self {
        let mut v = vec![0; ctx.n];
        v[i] = 2 * e;
        Self::monomial(ctx, ExponentVector(v), QPoly::one())
    }

    pub fn from_terms(
        ctx: RingContext,
        terms: impl IntoIterator<Item = (ExponentVector, QPoly)>,
    ) -> Self {
        let mut p = Self::zero(ctx);
        for (v, c) in terms {
            p.add_term(v, c);
        }
        p
    }

    pub fn ctx(&self) -> RingContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &QPoly)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, v: &ExponentVector) -> QPoly {
        let v = v.clone().canonical(self.ctx.relation);
        self.terms.get(&v).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, v: ExponentVector, c: QPoly) {
        if c.is_zero() {
            return;
        }
        let v = v.canonical(self.ctx.relation);
        let slot = self.terms.entry(v.clone()).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&v);
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.ctx.check(&rhs.ctx)?;
        let mut out = self.clone();
        for (v, c) in &rhs.terms {
            out.add_term(v.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.ctx.check(&rhs.ctx)?;
        let mut out = self.clone();
        for (v, c) in &rhs.terms {
            out.add_term(v.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.ctx.check(&rhs.ctx)?;
        let mut out = Self::zero(self.ctx);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.add(b), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.ctx);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &QPoly) -> Self {
        Self::from_terms(self.ctx, self.terms.iter().map(|(v, x)| (v.clone(), x * c)))
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        Self::from_terms(
            self.ctx,
            self.terms.iter().map(|(v, x)| (v.clone(), x.scale(c))),
        )
    }

    /// Multiplies by `q^k`.
    pub fn shift_q(&self, k: i32) -> Self {
        Self {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|(v, c)| (v.clone(), c.shift(k)))
                .collect(),
        }
    }

    /// Substitutes `q → q⁻¹`.
    pub fn invert_q(&self) -> Self {
        Self {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|(v, c)| (v.clone(), c.invert_q()))
                .collect(),
        }
    }

    /// Substitutes `x_i → x_i⁻¹` for every `i`.
    pub fn invert_x(&self) -> Self {
        Self::from_terms(self.ctx, self.terms.iter().map(|(v, c)| (v.neg(), c.clone())))
    }

    /// Exchanges `x_{i+1}` and `x_{j+1}`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        Self::from_terms(
            self.ctx,
            self.terms.iter().map(|(v, c)| {
                let mut d = v.0.clone();
                d.swap(i, j);
                (ExponentVector(d), c.clone())
            }),
        )
    }

    /// Reinterprets in a context with the given relation flag. Turning the
    /// relation on is the reduction homomorphism.
    pub fn with_relation(&self, relation: bool) -> Self {
        let ctx = RingContext::new(self.ctx.n, relation);
        Self::from_terms(ctx, self.terms.iter().map(|(v, c)| (v.clone(), c.clone())))
    }

    /// Sets every `x_i = 1`.
    pub fn eval_x_one(&self) -> QPoly {
        let mut acc = QPoly::zero();
        for c in self.terms.values() {
            acc += c;
        }
        acc
    }

    /// Sets `q = 1`.
    pub fn eval_q_one(&self) -> Self {
        Self::from_terms(
            self.ctx,
            self.terms
                .iter()
                .map(|(v, c)| (v.clone(), QPoly::from(c.eval_one()))),
        )
    }

    /// Splits by powers of `q`: `self = Σ_e q^e · parts[e]` with `q`-free parts.
    pub fn split_q(&self) -> BTreeMap<i32, LaurentPolynomial> {
        let mut out: BTreeMap<i32, LaurentPolynomial> = BTreeMap::new();
        for (v, c) in &self.terms {
            for (e, x) in c.terms() {
                out.entry(e)
                    .or_insert_with(|| Self::zero(self.ctx))
                    .add_term(v.clone(), QPoly::from(x.clone()));
            }
        }
        out
    }

    /// Smallest and largest power of `q` occurring, if nonzero.
    pub fn q_range(&self) -> Option<(i32, i32)> {
        let lo = self.terms.values().filter_map(QPoly::min_degree).min()?;
        let hi = self.terms.values().filter_map(QPoly::max_degree).max()?;
        Some((lo, hi))
    }

    /// Whether no coefficient involves a nonzero power of `q`.
    pub fn is_q_free(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.terms().all(|(e, _)| e == 0))
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.checked_add(rhs).expect("ring context mismatch")
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        self.ctx.check(&rhs.ctx).expect("ring context mismatch");
        for (v, c) in &rhs.terms {
            self.add_term(v.clone(), c.clone());
        }
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.checked_sub(rhs).expect("ring context mismatch")
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.checked_mul(rhs).expect("ring context mismatch")
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(v, c)| (v.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $f(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

fn fmt_half(d: i32) -> String {
    if d % 2 == 0 {
        format!("{}", d / 2)
    } else {
        format!("({d}/2)")
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (v, c) in &self.terms {
            let mono: Vec<String> = v
                .0
                .iter()
                .enumerate()
                .filter(|(_, &d)| d != 0)
                .map(|(i, &d)| {
                    if d == 2 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, fmt_half(d))
                    }
                })
                .collect();
            let mono = mono.join("*");
            let single = c.len() == 1;
            let (neg, coeff_txt) = if single {
                let (e, x) = c.terms().next().unwrap();
                let unit = QPoly::monomial(e, x.abs());
                (x.is_negative(), unit.to_string())
            } else {
                (false, format!("({c})"))
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match (mono.is_empty(), coeff_txt.as_str()) {
                (true, t) => write!(f, "{t}")?,
                (false, "1") => write!(f, "{mono}")?,
                (false, t) => write!(f, "{t}*{mono}")?,
            }
        }
        Ok(())
    }
}

/// Sum of a sequence of polynomials sharing a context.
pub fn sum_all<'a>(
    ctx: RingContext,
    items: impl IntoIterator<Item = &'a LaurentPolynomial>,
) -> LaurentPolynomial {
    let mut acc = LaurentPolynomial::zero(ctx);
    for p in items {
        acc += p;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize, relation: bool) -> RingContext {
        RingContext::new(n, relation)
    }

    #[test]
    fn difference_of_squares() {
        let c = ctx(2, false);
        let x1 = LaurentPolynomial::var(c, 0);
        let x2 = LaurentPolynomial::var(c, 1);
        let lhs = &(&x1 + &x2) * &(&x1 - &x2);
        let rhs = &x1.pow(2) - &x2.pow(2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn relation_mode_product() {
        let c = ctx(2, true);
        let p = &LaurentPolynomial::var(c, 0) * &LaurentPolynomial::var(c, 1);
        assert_eq!(p, LaurentPolynomial::one(c));
    }

    #[test]
    fn additive_inverse_is_empty() {
        let c = ctx(2, false);
        let x1 = LaurentPolynomial::var(c, 0);
        let a = x1.scale(&QPoly::from_coeffs(&[1, 1]));
        let b = x1.scale(&QPoly::from_coeffs(&[-1, -1]));
        let s = &a + &b;
        assert!(s.is_zero());
        assert_eq!(s.len(), 0);
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let a = LaurentPolynomial::one(ctx(2, false));
        let b = LaurentPolynomial::one(ctx(2, true));
        let c = LaurentPolynomial::one(ctx(3, false));
        assert!(matches!(a.checked_add(&b), Err(Error::ContextMismatch { .. })));
        assert!(a.checked_mul(&c).is_err());
    }

    #[test]
    fn display_half_exponents() {
        let c = ctx(1, false);
        let p = LaurentPolynomial::from_terms(
            c,
            [
                (ExponentVector::from_doubled(vec![1]), QPoly::one()),
                (ExponentVector::from_doubled(vec![-1]), QPoly::one()),
            ],
        );
        assert_eq!(p.to_string(), "x1^(-1/2) + x1^(1/2)");
    }
}
