//! Identity checks packaged as machine-readable reports. Each check computes
//! both sides with library functions and records whether they agree.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::characters::{
    a_closed, a_coefficient, branching_sum, f_n, kostka_foulkes, kostka_oracle_table,
    level1_decomposition, level1_theta, polychronakos_partition, rogers_szego,
    rogers_szego_recursive, sp_n_partition, stabilization, Variant,
};
use crate::error::{Error, Result};
use crate::polyring::json::{polynomial_value, qpoly_value};
use crate::polyring::{rational_text, Comparison, LaurentPolynomial, QPoly};
use crate::schur::{
    factorization_points, schur_border_strip, schur_border_strip_det, schur_conjugate,
    schur_enumerative, schur_jacobi_trudi, split_product,
};
use crate::shapes::{partitions_of, BorderStrip, SkewDiagram};
use crate::spectra::{
    enumerate_fiber, enumerate_motifs, enumerate_sp_n, fiber_character, phi, z_vertex,
    SpectrumPoint,
};
use crate::tableaux::{enumerate_sst, gz_from_sst, sst_from_gz};
use crate::twisted::{
    chi_twisted, chi_twisted_fiber, sl_determinant, twisted_decomposition, twisted_fiber_sum,
    twisted_level1_theta, TwistedMethod, TwistedSpectrumPoint,
};

/// Series window `(offset, order)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Window {
    pub offset: String,
    pub order: usize,
}

/// Where two sides first differ. `exponent` is the power of `q`, absent for
/// scalar comparisons.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MismatchRecord {
    pub exponent: Option<String>,
    pub lhs: Value,
    pub rhs: Value,
}

/// One identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRecord {
    pub identity: String,
    pub parameters: Value,
    pub window: Option<Window>,
    pub equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<MismatchRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl ReportRecord {
    /// From a truncated series comparison.
    pub fn series(identity: &str, parameters: Value, cmp: &Comparison) -> Self {
        Self {
            identity: identity.into(),
            parameters,
            window: Some(Window {
                offset: rational_text(cmp.offset),
                order: cmp.order,
            }),
            equal: cmp.equal(),
            first_mismatch: cmp.first_mismatch.as_ref().map(|m| MismatchRecord {
                exponent: Some(rational_text(m.exponent)),
                lhs: polynomial_value(&m.lhs),
                rhs: polynomial_value(&m.rhs),
            }),
            wall_time_ms: None,
        }
    }

    /// Exact polynomial equality; a mismatch reports the lowest power of `q`
    /// whose `x`-coefficients differ.
    pub fn polynomials(identity: &str, parameters: Value, lhs: &LaurentPolynomial, rhs: &LaurentPolynomial) -> Self {
        let first_mismatch = if lhs == rhs {
            None
        } else {
            let (a, b) = (lhs.split_q(), rhs.split_q());
            let zero = LaurentPolynomial::zero(lhs.ctx());
            a.keys()
                .chain(b.keys())
                .copied()
                .collect::<std::collections::BTreeSet<i32>>()
                .into_iter()
                .find_map(|e| {
                    let (x, y) = (a.get(&e).unwrap_or(&zero), b.get(&e).unwrap_or(&zero));
                    (x != y).then(|| MismatchRecord {
                        exponent: Some(e.to_string()),
                        lhs: polynomial_value(x),
                        rhs: polynomial_value(y),
                    })
                })
        };
        Self::with_mismatch(identity, parameters, first_mismatch)
    }

    /// Equality of two already-serialized values.
    pub fn values(identity: &str, parameters: Value, lhs: Value, rhs: Value) -> Self {
        let first_mismatch = (lhs != rhs).then_some(MismatchRecord {
            exponent: None,
            lhs,
            rhs,
        });
        Self::with_mismatch(identity, parameters, first_mismatch)
    }

    fn with_mismatch(identity: &str, parameters: Value, first_mismatch: Option<MismatchRecord>) -> Self {
        Self {
            identity: identity.into(),
            parameters,
            window: None,
            equal: first_mismatch.is_none(),
            first_mismatch,
            wall_time_ms: None,
        }
    }
}

fn qpoly_eq(identity: &str, parameters: Value, lhs: &QPoly, rhs: &QPoly) -> ReportRecord {
    ReportRecord::values(identity, parameters, qpoly_value(lhs), qpoly_value(rhs))
}

/// Level-1 theta function against the strip decomposition.
pub fn djkmo(n: usize, k: usize, order: usize, variant: Variant) -> Result<ReportRecord> {
    let theta = level1_theta(n, k, order)?;
    let strips = level1_decomposition(n, k, order, variant)?;
    let v = if variant == Variant::A { "a" } else { "b" };
    Ok(ReportRecord::series(
        "level1-theta = strip-decomposition",
        json!({"n": n, "k": k, "order": order, "variant": v}),
        &theta.compare(&strips)?,
    ))
}

/// `Σ_λ b_λ s_λ` against the strip decomposition.
pub fn branching(n: usize, k: usize, order: usize) -> Result<ReportRecord> {
    let strips = level1_decomposition(n, k, order, Variant::A)?;
    Ok(ReportRecord::series(
        "branching-sum = strip-decomposition",
        json!({"n": n, "k": k, "order": order}),
        &branching_sum(n, k, order)?.compare(&strips)?,
    ))
}

/// `F_N = H_N` without the relation.
pub fn rogers(n: usize, big_n: usize) -> ReportRecord {
    ReportRecord::polynomials(
        "strip-sum F_N = rogers-szego H_N",
        json!({"n": n, "N": big_n, "relation": false}),
        &f_n(big_n, n),
        &rogers_szego(big_n, n),
    )
}

/// The `e_i`-recursion for `H_N` against the q-multinomial sum.
pub fn rogers_recursion(n: usize, big_n: usize) -> ReportRecord {
    ReportRecord::polynomials(
        "rogers-szego recursion = q-multinomial sum",
        json!({"n": n, "N": big_n}),
        &rogers_szego_recursive(big_n, n),
        &rogers_szego(big_n, n),
    )
}

/// `A_{N,m}`: ordered-partition sum against the closed form for
/// `1 ≤ m ≤ min(n, N)`, and the recursion `A_{N,m} = −(1 − q^{N−1}) A_{N−1,m−1}`
/// for `2 ≤ m ≤ N`.
pub fn a_coefficients(n: usize, big_n: usize) -> Result<Vec<ReportRecord>> {
    let mut out = Vec::new();
    for m in 1..=n.min(big_n) {
        out.push(qpoly_eq(
            "A-coefficient sum = closed form",
            json!({"n": n, "N": big_n, "m": m}),
            &a_coefficient(big_n, m, n),
            &a_closed(big_n, m)?,
        ));
    }
    for m in 2..=big_n {
        let factor = &QPoly::one() - &QPoly::q_pow(big_n as i32 - 1);
        let rhs = -(&factor * &a_coefficient(big_n - 1, m - 1, big_n));
        out.push(qpoly_eq(
            "A-coefficient recursion",
            json!({"N": big_n, "m": m}),
            &a_coefficient(big_n, m, big_n),
            &rhs,
        ));
    }
    Ok(out)
}

/// Strip sum against triangular extraction, for every `λ ⊢ N` with at most
/// `n` parts.
pub fn kostka(big_n: usize, n: usize) -> Vec<ReportRecord> {
    let oracle = kostka_oracle_table(big_n, n);
    partitions_of(big_n, n)
        .into_iter()
        .map(|lambda| {
            let strips = kostka_foulkes(&lambda, n).polynomial;
            qpoly_eq(
                "kostka strip-sum = oracle",
                json!({"lambda": lambda.to_string(), "n": n}),
                &strips,
                &oracle[&lambda],
            )
        })
        .collect()
}

/// Enumeration against Jacobi–Trudi; for border strips also against the
/// strip determinant and the first-row recursion.
pub fn schur_methods(shape: &SkewDiagram, n: usize, relation: bool) -> Vec<ReportRecord> {
    let params = json!({"shape": shape.to_string(), "n": n, "relation": relation});
    let e = schur_enumerative(shape, n, relation);
    let mut out = vec![ReportRecord::polynomials(
        "schur enumeration = jacobi-trudi",
        params.clone(),
        &e,
        &schur_jacobi_trudi(shape, n, relation),
    )];
    if let Some(bs) = shape.as_border_strip() {
        out.push(ReportRecord::polynomials(
            "schur enumeration = strip determinant",
            params.clone(),
            &e,
            &schur_border_strip_det(&bs, n, relation),
        ));
        out.push(ReportRecord::polynomials(
            "strip determinant = first-row recursion",
            params,
            &schur_border_strip_det(&bs, n, relation),
            &schur_border_strip(&bs, n, relation),
        ));
    }
    out
}

/// Fiber character against `s_{κ(h)}`, and the tableau map as a
/// weight-preserving bijection onto the fiber.
pub fn spectral(h: &SpectrumPoint, relation: bool) -> Result<Vec<ReportRecord>> {
    let n = h.n();
    let params = json!({"n": n, "h": h.to_string(), "relation": relation});
    let shape = h.kappa().realize();
    let mut out = vec![ReportRecord::polynomials(
        "fiber character = schur of strip",
        params.clone(),
        &fiber_character(h, relation),
        &schur_enumerative(&shape, n, relation),
    )];
    let mut fiber: Vec<String> = enumerate_fiber(h).iter().map(|s| s.to_string()).collect();
    let mut image = Vec::new();
    let mut weights_ok = true;
    for t in enumerate_sst(&shape, n) {
        let s = phi(&t, h)?;
        weights_ok &= s.weight() == t.weight() && s.h_map() == *h;
        image.push(s.to_string());
    }
    fiber.sort();
    image.sort();
    let distinct = image.windows(2).all(|w| w[0] != w[1]);
    out.push(ReportRecord::values(
        "tableau map is a weight-preserving bijection onto the fiber",
        params,
        json!({"configurations": fiber}),
        json!({"configurations": if distinct && weights_ok { image } else { vec![] }}),
    ));
    Ok(out)
}

/// `q^{E_N} H_N(q^{−1})`, the `Sp_N` sum and the vertex partition function,
/// all without the relation; the motif count against `|Sp_N|`.
pub fn polychronakos(n: usize, big_n: usize) -> Result<Vec<ReportRecord>> {
    let params = json!({"n": n, "N": big_n, "relation": false});
    let p = polychronakos_partition(big_n, n, false);
    let sp = sp_n_partition(big_n, n, false);
    let z = z_vertex(big_n, n, false);
    let motifs = if big_n == 0 { 1 } else { enumerate_motifs(big_n, n).len() };
    Ok(vec![
        ReportRecord::series("polychronakos = spectrum sum", params.clone(), &p.compare(&sp)?),
        ReportRecord::series("polychronakos = vertex partition function", params.clone(), &p.compare(&z)?),
        ReportRecord::values(
            "motif count = |Sp_N|",
            params,
            json!(motifs),
            json!(enumerate_sp_n(big_n, n).len()),
        ),
    ])
}

/// First `window` coefficients of the finite-`N` character at `N` and `N + n`.
pub fn stabilize(n: usize, big_n: usize, window: usize) -> Result<ReportRecord> {
    Ok(ReportRecord::series(
        "finite character stabilizes from N to N+n",
        json!({"n": n, "N": big_n, "window": window}),
        &stabilization(big_n, n, window)?,
    ))
}

/// `s_κ = s_{left} s_{right}` at every admissible split.
pub fn factorization(bs: &BorderStrip, n: usize, relation: bool) -> Result<Vec<ReportRecord>> {
    let whole = schur_border_strip(bs, n, relation);
    factorization_points(bs, n)
        .into_iter()
        .map(|i| {
            Ok(ReportRecord::polynomials(
                "strip schur factorizes",
                json!({"strip": bs.to_string(), "n": n, "split": i}),
                &whole,
                &split_product(bs, i, n, relation)?,
            ))
        })
        .collect()
}

/// The conjugate determinant and the inverted sum against `s` of the
/// `n`-complement, relation mode.
pub fn conjugate(shape: &SkewDiagram, n: usize) -> Result<Vec<ReportRecord>> {
    let params = json!({"shape": shape.to_string(), "n": n, "relation": true});
    let c = schur_conjugate(shape, n, true);
    let comp = schur_enumerative(&shape.complement(n)?, n, true);
    Ok(vec![
        ReportRecord::polynomials("conjugate determinant = complement schur", params.clone(), &c.determinant, &comp),
        ReportRecord::polynomials("inverted schur = complement schur", params, &c.inverted_sum, &comp),
    ])
}

/// Round trip through GZ schemes with weights preserved, over all SST.
pub fn gz(shape: &SkewDiagram, n: usize) -> Result<ReportRecord> {
    let big_n = shape.outer().len();
    let (mut total, mut good) = (0usize, 0usize);
    for t in enumerate_sst(shape, n) {
        total += 1;
        let g = gz_from_sst(&t, big_n)?;
        if sst_from_gz(&g)? == t && g.weight() == t.weight() {
            good += 1;
        }
    }
    Ok(ReportRecord::values(
        "GZ round trip preserves tableau and weight",
        json!({"shape": shape.to_string(), "n": n}),
        json!(total),
        json!(good),
    ))
}

/// L-admissible enumeration, fiber brute force and the determinant formula.
pub fn twisted_schur_methods(h: &TwistedSpectrumPoint, n: usize) -> Result<Vec<ReportRecord>> {
    let params = json!({"n": n, "h": h.to_string()});
    let e = chi_twisted(h, n);
    Ok(vec![
        ReportRecord::polynomials("L-admissible sum = fiber character", params.clone(), &e, &chi_twisted_fiber(h, n)),
        ReportRecord::polynomials("L-admissible sum = sL determinant", params, &e, &sl_determinant(h, n)?),
    ])
}

/// Twisted theta function, strip decomposition and fiber sum.
pub fn twisted_identity(n: usize, order: usize) -> Result<Vec<ReportRecord>> {
    let params = json!({"n": n, "order": order});
    let theta = twisted_level1_theta(n, order)?;
    let det = twisted_decomposition(n, order, TwistedMethod::Determinant)?;
    let fib = twisted_fiber_sum(n, order)?;
    Ok(vec![
        ReportRecord::series("twisted theta = strip decomposition", params.clone(), &theta.compare(&det)?),
        ReportRecord::series("fiber sum = strip decomposition", params, &fib.compare(&det)?),
    ])
}

/// Bounds for the full check matrix; `quick` shrinks every range.
#[derive(Clone, Copy, Debug)]
pub struct SuiteBounds {
    pub djkmo_order: usize,
    pub djkmo_max_n: usize,
    pub rogers_max_n: usize,
    pub schur_max_size: usize,
    pub kostka_max: usize,
    pub poly_max_n: usize,
    pub twisted_order: usize,
}

impl SuiteBounds {
    pub fn new(quick: bool) -> Self {
        if quick {
            Self {
                djkmo_order: 4,
                djkmo_max_n: 3,
                rogers_max_n: 5,
                schur_max_size: 5,
                kostka_max: 5,
                poly_max_n: 5,
                twisted_order: 4,
            }
        } else {
            Self {
                djkmo_order: 6,
                djkmo_max_n: 4,
                rogers_max_n: 7,
                schur_max_size: 7,
                kostka_max: 6,
                poly_max_n: 6,
                twisted_order: 5,
            }
        }
    }
}

/// Runs every check family; `timing` attaches wall-clock times.
pub fn suite(bounds: SuiteBounds, timing: bool) -> Result<Vec<ReportRecord>> {
    let mut out: Vec<ReportRecord> = Vec::new();
    let mut push = |records: Vec<ReportRecord>, start: Instant| {
        for mut r in records {
            if timing {
                r.wall_time_ms = Some(start.elapsed().as_millis() as u64);
            }
            out.push(r);
        }
    };
    let start = Instant::now();
    let mut batch = Vec::new();
    for n in 2..=bounds.djkmo_max_n {
        for k in 0..n {
            for v in [Variant::A, Variant::B] {
                batch.push(djkmo(n, k, bounds.djkmo_order, v)?);
            }
        }
    }
    push(batch, start);

    let start = Instant::now();
    let mut batch = Vec::new();
    for n in 2..=3 {
        for big_n in 0..=bounds.rogers_max_n {
            batch.push(rogers(n, big_n));
            batch.push(rogers_recursion(n, big_n));
        }
    }
    for n in 1..=4 {
        for big_n in 1..=8 {
            batch.extend(a_coefficients(n, big_n)?);
        }
    }
    push(batch, start);

    let start = Instant::now();
    let mut batch = Vec::new();
    for size in 0..=bounds.kostka_max {
        batch.extend(kostka(size, size.max(1)));
    }
    push(batch, start);

    let start = Instant::now();
    let mut batch = Vec::new();
    for size in 0..=bounds.schur_max_size {
        for outer in partitions_of(size, 4) {
            if outer.get(0) > 4 {
                continue;
            }
            for inner_size in 0..=size {
                for inner in partitions_of(inner_size, outer.len()) {
                    if let Ok(shape) = SkewDiagram::new(outer.clone(), inner) {
                        for n in 1..=3 {
                            batch.extend(schur_methods(&shape, n, false));
                        }
                    }
                }
            }
        }
    }
    push(batch, start);

    let start = Instant::now();
    let mut batch = Vec::new();
    for n in 2..=3 {
        for size in 0..=5 {
            for bs in spectrum_strips(size, n) {
                let h = SpectrumPoint::new(n, bs.columns().to_vec())?;
                batch.extend(spectral(&h, false)?);
            }
        }
        for big_n in 0..=bounds.poly_max_n {
            batch.extend(polychronakos(n, big_n)?);
        }
        for big_n in 2 * n..2 * n + 2 {
            batch.push(stabilize(n, big_n, 3)?);
        }
    }
    push(batch, start);

    let start = Instant::now();
    let mut batch = Vec::new();
    for n in 1..=2 {
        batch.extend(twisted_identity(n, bounds.twisted_order)?);
    }
    push(batch, start);
    Ok(out)
}

/// Column lists of spectrum points with `|κ| = size`: parts at most `n`, the
/// last one below `n`.
pub fn spectrum_strips(size: usize, n: usize) -> Vec<BorderStrip> {
    crate::shapes::compositions(size, n)
        .into_iter()
        .filter(|bs| bs.columns().last().is_none_or(|&m| m < n))
        .collect()
}

/// Collapses a list of reports into one JSON document.
pub fn summary(records: &[ReportRecord]) -> Value {
    let failed = records.iter().filter(|r| !r.equal).count();
    let by_identity: BTreeMap<&str, usize> = records.iter().fold(BTreeMap::new(), |mut m, r| {
        *m.entry(r.identity.as_str()).or_default() += 1;
        m
    });
    json!({
        "equal": failed == 0,
        "checks": records.len(),
        "failed": failed,
        "identities": by_identity,
        "reports": records,
    })
}

/// Domain check shared by callers that accept a rank from the user.
pub fn require(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(msg.into()))
    }
}
