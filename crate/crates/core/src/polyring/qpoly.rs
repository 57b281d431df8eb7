//! Integer Laurent polynomials in the single variable `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A finite sum `Σ c_e q^e` with `e ∈ Z` and arbitrary precision `c_e`.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPoly {
    terms: BTreeMap<i32, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c q^e`.
    pub fn monomial(e: i32, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        Self::monomial(e, 1)
    }

    /// Builds `Σ coeffs[i] q^i`.
    pub fn from_coeffs<T: Into<BigInt> + Clone>(coeffs: &[T]) -> Self {
        let mut p = Self::zero();
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(i as i32, c.clone().into());
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Iterates `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, e: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitutes `q → q⁻¹`.
    pub fn invert_q(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / d`, or an error if `d` does not divide `self`.
    ///
    /// Long division from the lowest degree upward; the remainder must vanish.
    pub fn div_exact(&self, d: &QPoly) -> Result<QPoly> {
        let (dlo, dlead) = match d.terms.iter().next() {
            Some((e, c)) => (*e, c.clone()),
            None => return Err(Error::InexactDivision("division by zero".into())),
        };
        let dhi = d.max_degree().unwrap();
        let mut rem = self.clone();
        let mut quot = QPoly::zero();
        while let Some(lo) = rem.min_degree() {
            let top = rem.max_degree().unwrap();
            if top - lo < dhi - dlo {
                return Err(Error::InexactDivision(format!("{self} by {d}")));
            }
            let c = rem.coeff(lo);
            let (qc, r) = c.div_rem(&dlead);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!("{self} by {d}")));
            }
            let e = lo - dlo;
            let step = QPoly::monomial(e, qc.clone());
            rem = &rem - &(&step * d);
            quot.add_term(e, qc);
        }
        Ok(quot)
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        Self::monomial(0, c)
    }
}

impl From<BigInt> for QPoly {
    fn from(c: BigInt) -> Self {
        Self::monomial(0, c)
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for QPoly {
            type Output = QPoly;
            fn $f(self, rhs: QPoly) -> QPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = abs.is_one();
            match *e {
                0 => write!(f, "{abs}")?,
                1 if unit => write!(f, "q")?,
                1 => write!(f, "{abs}*q")?,
                e if unit => write!(f, "q^{e}")?,
                e => write!(f, "{abs}*q^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = QPoly::from_coeffs(&[1, 1]);
        let b = QPoly::from_coeffs(&[1, -1]);
        assert_eq!(&a * &b, QPoly::from_coeffs(&[1, 0, -1]));
        assert!((&a - &a).is_zero());
        assert_eq!(a.invert_q().shift(1), a);
    }

    #[test]
    fn exact_division() {
        let a = QPoly::from_coeffs(&[1, 1]);
        let b = QPoly::from_coeffs(&[1, 0, 1]);
        let p = &a * &b;
        assert_eq!(p.div_exact(&a).unwrap(), b);
        assert_eq!(p.shift(-3).div_exact(&b.shift(2)).unwrap(), a.shift(-5));
        assert!(b.div_exact(&a).is_err());
        assert!(a.div_exact(&QPoly::zero()).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(QPoly::from_coeffs(&[1, -2, 0, 1]).to_string(), "1 - 2*q + q^3");
        assert_eq!(QPoly::monomial(-1, -1).to_string(), "-q^-1");
    }
}
