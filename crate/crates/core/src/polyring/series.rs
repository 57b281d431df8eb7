//! Truncated `q`-series `q^offset · Σ_{j=0}^{M} c_j q^j` with Laurent polynomial coefficients.

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};

use super::{LaurentPolynomial, RingContext};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    ctx: RingContext,
    offset: Rational64,
    coeffs: Vec<LaurentPolynomial>,
}

/// First coefficient at which two series differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: Rational64,
    pub lhs: LaurentPolynomial,
    pub rhs: LaurentPolynomial,
}

/// Outcome of comparing two series on their common window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub offset: Rational64,
    pub order: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl Comparison {
    pub fn equal(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

fn integer_gap(a: Rational64, b: Rational64) -> Result<i64> {
    let d = a - b;
    if d.is_integer() {
        Ok(d.to_integer())
    } else {
        Err(Error::OffsetMismatch {
            left: a.to_string(),
            right: b.to_string(),
        })
    }
}

impl QSeries {
    pub fn zero(ctx: RingContext, offset: Rational64, order: usize) -> Self {
        Self {
            ctx,
            offset,
            coeffs: vec![LaurentPolynomial::zero(ctx); order + 1],
        }
    }

    /// Spreads the `q`-dependence of `p` over the series: a term `c q^e x^v`
    /// lands at index `e`. Terms with `e > order` are dropped; negative `e`
    /// is a domain error.
    pub fn from_polynomial(p: &LaurentPolynomial, offset: Rational64, order: usize) -> Result<Self> {
        let mut s = Self::zero(p.ctx(), offset, order);
        for (e, part) in p.split_q() {
            if e < 0 {
                return Err(Error::Domain(format!(
                    "q-power {e} lies below the series offset"
                )));
            }
            s.add_at(e as usize, &part)?;
        }
        Ok(s)
    }

    pub fn ctx(&self) -> RingContext {
        self.ctx
    }

    pub fn offset(&self) -> Rational64 {
        self.offset
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[LaurentPolynomial] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &LaurentPolynomial {
        &self.coeffs[j]
    }

    /// Adds a `q`-free polynomial at `q^{offset + j}`; ignored beyond the order.
    pub fn add_at(&mut self, j: usize, p: &LaurentPolynomial) -> Result<()> {
        self.ctx.check(&p.ctx())?;
        if !p.is_q_free() {
            return Err(Error::Domain("series coefficients must be q-free".into()));
        }
        if let Some(slot) = self.coeffs.get_mut(j) {
            *slot += p;
        }
        Ok(())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut out = self.clone();
        out.coeffs.truncate(order + 1);
        out
    }

    fn reach(&self) -> Rational64 {
        self.offset + Rational64::from(self.order() as i64)
    }

    /// Re-expresses both operands on their common window.
    fn align(&self, other: &Self) -> Result<(Rational64, usize)> {
        self.ctx.check(&other.ctx)?;
        integer_gap(self.offset, other.offset)?;
        let offset = self.offset.min(other.offset);
        let reach = self.reach().min(other.reach());
        let order = (reach - offset).to_integer();
        if order < 0 {
            return Err(Error::Domain("series windows do not overlap".into()));
        }
        Ok((offset, order as usize))
    }

    /// Coefficient at absolute exponent `offset + j` of `other`'s frame.
    fn coeff_abs(&self, exponent: Rational64) -> LaurentPolynomial {
        let j = (exponent - self.offset).to_integer();
        if j < 0 || j as usize >= self.coeffs.len() {
            LaurentPolynomial::zero(self.ctx)
        } else {
            self.coeffs[j as usize].clone()
        }
    }

    fn combine(&self, other: &Self, sign: i64) -> Result<Self> {
        let (offset, order) = self.align(other)?;
        let mut out = Self::zero(self.ctx, offset, order);
        for j in 0..=order {
            let e = offset + Rational64::from(j as i64);
            let b = other.coeff_abs(e);
            let b = if sign < 0 { -&b } else { b };
            out.coeffs[j] = &self.coeff_abs(e) + &b;
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.combine(other, 1)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, -1)
    }

    /// Multiplies by a polynomial `p` whose own powers of `q` shift the
    /// coefficients; the product keeps this series' window.
    pub fn mul_polynomial(&self, p: &LaurentPolynomial) -> Result<Self> {
        self.ctx.check(&p.ctx())?;
        let mut out = Self::zero(self.ctx, self.offset, self.order());
        for (e, part) in p.split_q() {
            for (j, c) in self.coeffs.iter().enumerate() {
                let t = j as i64 + e as i64;
                if t < 0 {
                    return Err(Error::Domain("product reaches below the offset".into()));
                }
                if (t as usize) < out.coeffs.len() && !c.is_zero() {
                    let prod = c * &part;
                    out.coeffs[t as usize] += &prod;
                }
            }
        }
        Ok(out)
    }

    /// Multiplies by the integer power series `Σ c_j q^j`.
    pub fn mul_q_series(&self, c: &[BigInt]) -> Self {
        let mut out = Self::zero(self.ctx, self.offset, self.order());
        for (j, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (i, ci) in c.iter().enumerate() {
                if i + j > self.order() {
                    break;
                }
                if !ci.is_zero() {
                    out.coeffs[i + j] += &a.scale_int(ci);
                }
            }
        }
        out
    }

    /// Coefficientwise comparison on the common window.
    pub fn compare(&self, other: &Self) -> Result<Comparison> {
        let (offset, order) = self.align(other)?;
        let first_mismatch = (0..=order).find_map(|j| {
            let e = offset + Rational64::from(j as i64);
            let (l, r) = (self.coeff_abs(e), other.coeff_abs(e));
            (l != r).then_some(Mismatch {
                exponent: e,
                lhs: l,
                rhs: r,
            })
        });
        Ok(Comparison {
            offset,
            order,
            first_mismatch,
        })
    }

    /// Sets every `x_i = 1`; entry `j` is the integer coefficient of `q^{offset+j}`.
    pub fn eval_x_one(&self) -> Vec<BigInt> {
        self.coeffs
            .iter()
            .map(|c| c.eval_x_one().coeff(0))
            .collect()
    }

    /// The series as a single polynomial in `q` when the offset is an integer.
    pub fn to_polynomial(&self) -> Option<LaurentPolynomial> {
        if !self.offset.is_integer() {
            return None;
        }
        let base = self.offset.to_integer().to_i32()?;
        let mut acc = LaurentPolynomial::zero(self.ctx);
        for (j, c) in self.coeffs.iter().enumerate() {
            acc += &c.shift_q(base + j as i32);
        }
        Some(acc)
    }
}

/// Writes `Rational64` as `p/q`, always with an explicit denominator.
pub fn rational_text(r: Rational64) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer.
pub fn parse_rational(s: &str) -> Result<Rational64> {
    let bad = |reason: &str| crate::error::parse_err(s, reason);
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: i64 = p.parse().map_err(|_| bad("numerator is not an integer"))?;
    let q: i64 = q.parse().map_err(|_| bad("denominator is not an integer"))?;
    if q.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational64::new(p, q))
}

impl QSeries {
    /// Multiplies by `q^k`, keeping coefficients.
    pub fn shift_offset(&self, k: Rational64) -> Self {
        let mut out = self.clone();
        out.offset += k;
        out
    }

    /// `Σ_j c_j q^{offset+j}` with `q`-free coefficients in `QPoly` form, for display.
    pub fn pretty(&self) -> String {
        let mut parts = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.offset + Rational64::from(j as i64);
            parts.push(format!("q^({e})*[{c}]"));
        }
        if parts.is_empty() {
            format!("0 + O(q^({}))", self.reach() + 1)
        } else {
            format!("{} + O(q^({}))", parts.join(" + "), self.reach() + 1)
        }
    }
}
