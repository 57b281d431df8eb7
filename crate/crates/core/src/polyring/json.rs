//! JSON encoding of polynomials and series.
//!
//! A polynomial is `{"n", "relation", "terms": [{"x2": [...], "q": [[e, c], ...]}]}`
//! where `x2` is the doubled exponent vector. Terms are listed in lexicographic
//! order of `x2`, `q`-powers ascending. Integers that do not fit in 64 bits are
//! written as decimal strings.

use num_bigint::BigInt;
use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::series::{parse_rational, rational_text};
use super::{ExponentVector, LaurentPolynomial, QPoly, QSeries, RingContext};
use crate::error::{parse_err, Result};

#[derive(Serialize, Deserialize)]
struct TermDoc {
    x2: Vec<i32>,
    q: Vec<(i32, Value)>,
}

#[derive(Serialize, Deserialize)]
struct PolyDoc {
    n: usize,
    relation: bool,
    terms: Vec<TermDoc>,
}

#[derive(Serialize, Deserialize)]
struct SeriesDoc {
    n: usize,
    relation: bool,
    offset: String,
    order: usize,
    coeffs: Vec<Vec<TermDoc>>,
}

fn int_value(c: &BigInt) -> Value {
    match i64::try_from(c) {
        Ok(v) => Value::from(v),
        Err(_) => Value::String(c.to_string()),
    }
}

fn value_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| parse_err(&n.to_string(), "coefficient is not an integer")),
        Value::String(s) => s
            .parse()
            .map_err(|_| parse_err(s, "coefficient is not an integer")),
        other => Err(parse_err(&other.to_string(), "coefficient is not an integer")),
    }
}

pub fn qpoly_value(c: &QPoly) -> Value {
    Value::Array(
        c.terms()
            .map(|(e, x)| Value::Array(vec![Value::from(e), int_value(x)]))
            .collect(),
    )
}

fn terms_doc(p: &LaurentPolynomial) -> Vec<TermDoc> {
    p.terms()
        .map(|(v, c)| TermDoc {
            x2: v.doubled().to_vec(),
            q: c.terms().map(|(e, x)| (e, int_value(x))).collect(),
        })
        .collect()
}

fn from_terms_doc(ctx: RingContext, terms: &[TermDoc]) -> Result<LaurentPolynomial> {
    let mut p = LaurentPolynomial::zero(ctx);
    for t in terms {
        if t.x2.len() != ctx.n {
            return Err(parse_err(&format!("{:?}", t.x2), "exponent vector has the wrong length"));
        }
        let mut c = QPoly::zero();
        for (e, x) in &t.q {
            c.add_term(*e, value_int(x)?);
        }
        p.add_term(ExponentVector::from_doubled(t.x2.clone()), c);
    }
    Ok(p)
}

pub fn polynomial_value(p: &LaurentPolynomial) -> Value {
    serde_json::to_value(PolyDoc {
        n: p.ctx().n,
        relation: p.ctx().relation,
        terms: terms_doc(p),
    })
    .expect("polynomial documents always serialize")
}

pub fn polynomial_from_value(v: &Value) -> Result<LaurentPolynomial> {
    let doc: PolyDoc = serde_json::from_value(v.clone())
        .map_err(|e| parse_err(&v.to_string(), e.to_string()))?;
    from_terms_doc(RingContext::new(doc.n, doc.relation), &doc.terms)
}

pub fn series_value(s: &QSeries) -> Value {
    serde_json::to_value(SeriesDoc {
        n: s.ctx().n,
        relation: s.ctx().relation,
        offset: rational_text(s.offset()),
        order: s.order(),
        coeffs: s.coeffs().iter().map(terms_doc).collect(),
    })
    .expect("series documents always serialize")
}

pub fn series_from_value(v: &Value) -> Result<QSeries> {
    let doc: SeriesDoc = serde_json::from_value(v.clone())
        .map_err(|e| parse_err(&v.to_string(), e.to_string()))?;
    let ctx = RingContext::new(doc.n, doc.relation);
    let offset: Rational64 = parse_rational(&doc.offset)?;
    if doc.coeffs.len() != doc.order + 1 {
        return Err(parse_err(&doc.order.to_string(), "order does not match coefficient count"));
    }
    let mut s = QSeries::zero(ctx, offset, doc.order);
    for (j, terms) in doc.coeffs.iter().enumerate() {
        s.add_at(j, &from_terms_doc(ctx, terms)?)?;
    }
    Ok(s)
}
