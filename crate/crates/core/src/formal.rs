//! Raising operator engine over abstract Chern symbols.
//!
//! Expands products of factors `(1 - R_ij)` and `(1 - R_ij)(1 + R_ij)^{-1}`
//! applied to monomials `c_alpha`, producing polynomials in the symbols
//! `c_r` (or `tau_r`, `tau'_k` for the typed case), with exact coefficients
//! whose denominators are powers of two.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{internal, validation, Result};
use crate::rational::{has_pow2_denominator, q_int, q_one, q_ratio, Q};
use crate::shapes::{order_ideal, IdealVariant, OrderIdeal, Shape};
use num_traits::Zero;

/// An abstract symbol appearing in a [`FormalPoly`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    /// Chern class symbol `c_r`, `r >= 1`.
    C(u32),
    /// Special class `tau_r` (type D), `r >= 1`.
    Tau(u32),
    /// Special class `tau'_k` (type D, second family).
    TauPrime(u32),
    /// Second Chern family `d_r` for formal differences.
    D(u32),
}

impl Symbol {
    pub fn render(&self) -> String {
        match self {
            Symbol::C(r) => format!("c{r}"),
            Symbol::Tau(r) => format!("t{r}"),
            Symbol::TauPrime(r) => format!("t'{r}"),
            Symbol::D(r) => format!("d{r}"),
        }
    }

    fn json_tag(&self) -> (&'static str, u32) {
        match self {
            Symbol::C(r) => ("c", *r),
            Symbol::Tau(r) => ("tau", *r),
            Symbol::TauPrime(r) => ("tau'", *r),
            Symbol::D(r) => ("d", *r),
        }
    }
}

/// A multiset of symbols: the factors of one monomial, kept sorted.
pub type SymMonomial = Vec<Symbol>;

/// A polynomial in abstract symbols with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FormalPoly {
    pub terms: BTreeMap<SymMonomial, Q>,
}

impl FormalPoly {
    pub fn zero() -> Self {
        FormalPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        FormalPoly::term(vec![], q_one())
    }

    pub fn term(mut mono: SymMonomial, c: Q) -> Self {
        mono.sort_unstable();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        FormalPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mut mono: SymMonomial, c: &Q) {
        if c.is_zero() {
            return;
        }
        mono.sort_unstable();
        let entry = self.terms.entry(mono.clone()).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn add(&self, other: &FormalPoly) -> FormalPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &FormalPoly) -> FormalPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> FormalPoly {
        if c.is_zero() {
            return FormalPoly::zero();
        }
        FormalPoly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul(&self, other: &FormalPoly) -> FormalPoly {
        let mut out = FormalPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut m = ma.clone();
                m.extend(mb.iter().copied());
                out.add_term(m, &(ca * cb));
            }
        }
        out
    }

    /// Asserts the power-of-two denominator invariant.
    pub fn check_dyadic(&self) -> Result<()> {
        for (m, c) in &self.terms {
            if !has_pow2_denominator(c) {
                return Err(internal(format!(
                    "coefficient {c} of {m:?} has a non-dyadic denominator"
                )));
            }
        }
        Ok(())
    }

    /// Degree of a monomial = sum of symbol indices.
    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.iter().map(|s| s.json_tag().1).sum())
            .max()
            .unwrap_or(0)
    }

    /// JSON form: list of {"coeff": [num, den], "mono": [["c", 5], ...]},
    /// terms sorted by degree then lexicographically.
    pub fn to_json(&self) -> Value {
        let mut entries: Vec<(&SymMonomial, &Q)> = self.terms.iter().collect();
        entries.sort_by_key(|(m, _)| {
            (m.iter().map(|s| s.json_tag().1).sum::<u32>(), (*m).clone())
        });
        let list: Vec<Value> = entries
            .into_iter()
            .map(|(m, c)| {
                let mono: Vec<Value> =
                    m.iter().map(|s| json!([s.json_tag().0, s.json_tag().1])).collect();
                json!({
                    "coeff": [c.numer().to_string(), c.denom().to_string()],
                    "mono": mono,
                })
            })
            .collect();
        Value::Array(list)
    }

    /// Plain text rendering, e.g. `c5*c4*c2 - c6*c3*c2`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut entries: Vec<(&SymMonomial, &Q)> = self.terms.iter().collect();
        entries.sort_by_key(|(m, _)| {
            (std::cmp::Reverse(m.iter().map(|s| s.json_tag().1).sum::<u32>()), (*m).clone())
        });
        let mut out = String::new();
        for (i, (m, c)) in entries.iter().enumerate() {
            let mono = if m.is_empty() {
                "1".to_string()
            } else {
                let mut factors: Vec<String> = Vec::new();
                let mut iter = m.iter().rev().peekable();
                while let Some(s) = iter.next() {
                    let mut e = 1;
                    while iter.peek() == Some(&s) {
                        iter.next();
                        e += 1;
                    }
                    factors.push(if e == 1 { s.render() } else { format!("{}^{e}", s.render()) });
                }
                factors.join("*")
            };
            let neg = c < &&Q::zero();
            let abs = if neg { -(*c).clone() } else { (*c).clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if abs == q_one() && !m.is_empty() {
                out.push_str(&mono);
            } else if m.is_empty() {
                out.push_str(&crate::rational::q_display(&abs));
            } else {
                out.push_str(&format!("{}*{}", crate::rational::q_display(&abs), mono));
            }
        }
        out
    }
}

/// Description of a raising operator product applied to `ell` rows.
#[derive(Debug, Clone)]
pub struct RaisingSpec {
    /// Number of rows acted on (including trailing zeros if desired).
    pub rows: usize,
    /// Pairs carrying the factor `(1 - R)(1 + R)^{-1}`; all other pairs
    /// `i < j <= rows` carry `(1 - R)`.
    pub double_pairs: OrderIdeal,
    /// Star action data for eta polynomials: the distinguished row `d`
    /// (1-based, least row with `lambda_d = k`) and the shape's type.
    pub star: Option<StarData>,
}

#[derive(Debug, Clone, Copy)]
pub struct StarData {
    pub row: usize,
    pub type_tag: u8,
    pub k: u32,
}

/// Expands `R^spec` applied to `c_alpha`.
///
/// Pairs are processed grouped by their second index, descending; within a
/// group the exponent of `R_ij` is bounded by the current value of row `j`,
/// which only decreases inside the group.
pub fn expand_raising(spec: &RaisingSpec, alpha: &[i64]) -> Result<FormalPoly> {
    if alpha.len() != spec.rows {
        return Err(validation("alpha length must equal the row count"));
    }
    let ell = spec.rows;
    let mut pairs: Vec<(usize, usize, bool)> = Vec::new();
    for j in (2..=ell).rev() {
        for i in 1..j {
            let double = spec.double_pairs.contains(i as u32, j as u32);
            pairs.push((i, j, double));
        }
    }
    let mut out = FormalPoly::zero();
    let mut current: Vec<i64> = alpha.to_vec();
    let mut exponents: Vec<usize> = vec![0; pairs.len()];

    fn coeff_for(double: bool, m: usize) -> Q {
        if m == 0 {
            q_one()
        } else if double {
            if m.is_multiple_of(2) {
                q_int(2)
            } else {
                q_int(-2)
            }
        } else if m == 1 {
            q_int(-1)
        } else {
            Q::zero()
        }
    }

    fn rec(
        pairs: &[(usize, usize, bool)],
        idx: usize,
        current: &mut Vec<i64>,
        exponents: &mut Vec<usize>,
        spec: &RaisingSpec,
        out: &mut FormalPoly,
    ) {
        if idx == pairs.len() {
            if current.iter().any(|&v| v < 0) {
                return;
            }
            let mut coeff = q_one();
            for (p, &(_, _, double)) in pairs.iter().enumerate() {
                coeff *= coeff_for(double, exponents[p]);
            }
            if coeff.is_zero() {
                return;
            }
            emit_term(spec, current, exponents, pairs, &coeff, out);
            return;
        }
        let (i, j, double) = pairs[idx];
        let room = current[j - 1].max(0) as usize;
        let max_m = if double { room } else { room.min(1) };
        for m in 0..=max_m {
            if m > 0 {
                current[i - 1] += 1;
                current[j - 1] -= 1;
            }
            exponents[idx] = m;
            rec(pairs, idx + 1, current, exponents, spec, out);
        }
        current[i - 1] -= max_m as i64;
        current[j - 1] += max_m as i64;
        exponents[idx] = 0;
    }

    rec(&pairs, 0, &mut current, &mut exponents, spec, &mut out);
    out.check_dyadic()?;
    Ok(out)
}

/// Builds one output term, applying the star substitution when present.
fn emit_term(
    spec: &RaisingSpec,
    target: &[i64],
    exponents: &[usize],
    pairs: &[(usize, usize, bool)],
    coeff: &Q,
    out: &mut FormalPoly,
) {
    match spec.star {
        None => {
            let mono: SymMonomial = target
                .iter()
                .filter(|&&a| a > 0)
                .map(|&a| Symbol::C(a as u32))
                .collect();
            out.add_term(mono, coeff);
        }
        Some(star) => {
            let touches_d = pairs
                .iter()
                .enumerate()
                .any(|(p, &(i, j, _))| exponents[p] > 0 && (i == star.row || j == star.row));
            if touches_d {
                // R touches row d: (1/2) c_{R lambda}, converted via the
                // c -> tau dictionary.
                let mut poly = FormalPoly::term(vec![], coeff * q_ratio(1, 2));
                for &a in target.iter().filter(|&&a| a > 0) {
                    poly = poly.mul(&c_to_tau(a as u32, star.k));
                }
                for (m, c) in poly.terms {
                    out.add_term(m, &c);
                }
            } else {
                // tau_k (type 1) or tau'_k (type 2) times the monomial with
                // row d deleted.
                let lead = if star.type_tag == 1 {
                    Symbol::Tau(star.k)
                } else {
                    Symbol::TauPrime(star.k)
                };
                let mut poly = FormalPoly::term(vec![lead], coeff.clone());
                for (r, &a) in target.iter().enumerate() {
                    if r + 1 == star.row || a <= 0 {
                        continue;
                    }
                    poly = poly.mul(&c_to_tau(a as u32, star.k));
                }
                for (m, c) in poly.terms {
                    out.add_term(m, &c);
                }
            }
        }
    }
}

/// The dictionary `c_r = tau_r` (r < k), `tau_k + tau'_k` (r = k),
/// `2 tau_r` (r > k).
fn c_to_tau(r: u32, k: u32) -> FormalPoly {
    use std::cmp::Ordering::*;
    match r.cmp(&k) {
        Less => FormalPoly::term(vec![Symbol::Tau(r)], q_one()),
        Equal => {
            let mut p = FormalPoly::term(vec![Symbol::Tau(k)], q_one());
            p.add_term(vec![Symbol::TauPrime(k)], &q_one());
            p
        }
        Greater => FormalPoly::term(vec![Symbol::Tau(r)], q_int(2)),
    }
}

/// Theta polynomial `Theta_lambda(c) = R^lambda c_lambda` for a k-strict
/// shape.
pub fn theta_formal(shape: &Shape) -> Result<FormalPoly> {
    let ell = shape.len();
    let ideal = order_ideal(shape, IdealVariant::C).restrict_rows(ell as u32);
    let spec = RaisingSpec { rows: ell, double_pairs: ideal, star: None };
    let alpha: Vec<i64> = shape.parts.iter().map(|&p| p as i64).collect();
    expand_raising(&spec, &alpha)
}

/// Eta polynomial `H_lambda(c) = 2^{-l_k(lambda)} R^lambda * c_lambda` for a
/// typed k-strict shape, expressed in the tau symbols.
pub fn eta_formal(shape: &Shape) -> Result<FormalPoly> {
    if !shape.is_properly_typed() {
        return Err(validation("eta needs a properly typed k-strict shape"));
    }
    let k = shape.k.as_int();
    let ell = shape.len();
    let ideal = order_ideal(shape, IdealVariant::CPrime).restrict_rows(ell as u32);
    let star = if shape.type_tag > 0 {
        let row = shape
            .parts
            .iter()
            .position(|&p| p == k)
            .expect("typed shape must have a part equal to k")
            + 1;
        Some(StarData { row, type_tag: shape.type_tag, k })
    } else {
        None
    };
    let spec = RaisingSpec { rows: ell, double_pairs: ideal, star };
    let alpha: Vec<i64> = shape.parts.iter().map(|&p| p as i64).collect();
    let raw = if shape.type_tag > 0 {
        expand_raising(&spec, &alpha)?
    } else {
        // Type 0: plain expansion, then convert c to tau.
        let mut converted = FormalPoly::zero();
        for (m, c) in expand_raising(&spec, &alpha)?.terms {
            let mut poly = FormalPoly::term(vec![], c);
            for s in m {
                if let Symbol::C(r) = s {
                    poly = poly.mul(&c_to_tau(r, k));
                } else {
                    poly = poly.mul(&FormalPoly::term(vec![s], q_one()));
                }
            }
            for (m2, c2) in poly.terms {
                converted.add_term(m2, &c2);
            }
        }
        converted
    };
    let scaled = raw.scale(&crate::rational::q_pow2(-(shape.len_k() as i32)));
    scaled.check_dyadic()?;
    Ok(scaled)
}

/// Q-polynomial in Pfaffian form.
pub fn q_pfaffian(shape: &Shape) -> Result<FormalPoly> {
    if !shape.is_strict() {
        return Err(validation("q_pfaffian needs a strict partition"));
    }
    let parts: Vec<i64> = shape.parts.iter().map(|&p| p as i64).collect();
    Ok(q_pfaffian_parts(&parts))
}

fn q_two_row(a: i64, b: i64) -> FormalPoly {
    // c_a c_b - 2 c_{a+1} c_{b-1} + 2 c_{a+2} c_{b-2} - ...
    let mut out = FormalPoly::zero();
    if a < 0 || b < 0 {
        return out;
    }
    for j in 0..=b {
        let coeff = if j == 0 {
            q_one()
        } else if j % 2 == 0 {
            q_int(2)
        } else {
            q_int(-2)
        };
        let mut mono = Vec::new();
        if a + j > 0 {
            mono.push(Symbol::C((a + j) as u32));
        }
        if b - j > 0 {
            mono.push(Symbol::C((b - j) as u32));
        }
        out.add_term(mono, &coeff);
    }
    out
}

fn q_pfaffian_parts(parts: &[i64]) -> FormalPoly {
    match parts.len() {
        0 => FormalPoly::one(),
        1 => {
            if parts[0] == 0 {
                FormalPoly::one()
            } else {
                FormalPoly::term(vec![Symbol::C(parts[0] as u32)], q_one())
            }
        }
        2 => q_two_row(parts[0], parts[1]),
        _ => {
            let mut padded = parts.to_vec();
            if padded.len() % 2 == 1 {
                padded.push(0);
            }
            // Pfaffian expansion along the first row.
            let mut out = FormalPoly::zero();
            for j in 1..padded.len() {
                let entry = q_two_row(padded[0], padded[j]);
                let mut rest = padded.clone();
                rest.remove(j);
                rest.remove(0);
                let sub = q_pfaffian_parts(&rest);
                let signed =
                    if j % 2 == 1 { entry.mul(&sub) } else { entry.mul(&sub).scale(&q_int(-1)) };
                out = out.add(&signed);
            }
            out
        }
    }
}

/// Coefficients `g_r` or `h_r` of the formal difference series, for
/// `0 <= r <= degree`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DifferenceSeries {
    /// `(sum c_i t^i)(sum d_i t^i)^{-1}`.
    G,
    /// `(sum (-1)^i c_i t^i)^{-1} (sum (-1)^i d_i t^i)`.
    H,
}

pub fn difference_series(which: DifferenceSeries, degree: usize) -> Vec<FormalPoly> {
    let c = |r: usize, sign: bool| -> FormalPoly {
        if r == 0 {
            FormalPoly::one()
        } else {
            let q = if sign && r % 2 == 1 { q_int(-1) } else { q_one() };
            FormalPoly::term(vec![Symbol::C(r as u32)], q)
        }
    };
    let d = |r: usize, sign: bool| -> FormalPoly {
        if r == 0 {
            FormalPoly::one()
        } else {
            let q = if sign && r % 2 == 1 { q_int(-1) } else { q_one() };
            FormalPoly::term(vec![Symbol::D(r as u32)], q)
        }
    };
    // Invert a series with constant term 1: b_0 = 1,
    // b_r = -sum_{i=1..r} a_i b_{r-i}.
    let invert = |a: &dyn Fn(usize) -> FormalPoly, degree: usize| -> Vec<FormalPoly> {
        let mut b: Vec<FormalPoly> = vec![FormalPoly::one()];
        for r in 1..=degree {
            let mut acc = FormalPoly::zero();
            for i in 1..=r {
                acc = acc.add(&a(i).mul(&b[r - i]));
            }
            b.push(acc.scale(&q_int(-1)));
        }
        b
    };
    match which {
        DifferenceSeries::G => {
            let dinv = invert(&|i| d(i, false), degree);
            (0..=degree)
                .map(|r| {
                    let mut acc = FormalPoly::zero();
                    for i in 0..=r {
                        acc = acc.add(&c(i, false).mul(&dinv[r - i]));
                    }
                    acc
                })
                .collect()
        }
        DifferenceSeries::H => {
            let cinv = invert(&|i| c(i, true), degree);
            (0..=degree)
                .map(|r| {
                    let mut acc = FormalPoly::zero();
                    for i in 0..=r {
                        acc = acc.add(&cinv[r - i].mul(&d(i, true)));
                    }
                    acc
                })
                .collect()
        }
    }
}
