//! Concrete multivariate polynomials with exact rational coefficients.
//!
//! Variables are named strings in a fixed order; terms are kept in graded
//! lexicographic order for serialization.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{internal, validation, Result};
use crate::rational::{q_display, q_one, Q};

/// Graded-lex key: compare by total degree, then lexicographically by
/// exponent vector (larger exponent on earlier variable first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expo(pub Vec<u32>);

impl Expo {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl PartialOrd for Expo {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Expo {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// A multivariate polynomial over named variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    pub vars: Vec<String>,
    pub terms: BTreeMap<Expo, Q>,
}

impl MPoly {
    pub fn zero(vars: Vec<String>) -> Self {
        MPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Vec<String>, c: Q) -> Self {
        let mut p = MPoly::zero(vars);
        if !c.is_zero() {
            let n = p.vars.len();
            p.terms.insert(Expo(vec![0; n]), c);
        }
        p
    }

    pub fn one(vars: Vec<String>) -> Self {
        MPoly::constant(vars, q_one())
    }

    pub fn var(vars: Vec<String>, name: &str) -> Result<Self> {
        let idx = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| validation(format!("unknown variable {name}")))?;
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        let mut p = MPoly::zero(vars);
        p.terms.insert(Expo(e), q_one());
        Ok(p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.degree()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: &Q) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(e.len(), self.vars.len());
        let key = Expo(e);
        let entry = self.terms.entry(key.clone()).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn check_vars(&self, other: &MPoly) {
        assert_eq!(self.vars, other.vars, "variable lists must match");
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        self.check_vars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.0.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.check_vars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.0.clone(), &-c.clone());
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.vars.clone());
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        self.check_vars(other);
        let mut out = MPoly::zero(self.vars.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.0.iter().zip(&eb.0).map(|(a, b)| a + b).collect();
                out.add_term(e, &(ca * cb));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut out = MPoly::one(self.vars.clone());
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Substitutes each variable by the given polynomial (all over the target
    /// variable list).
    pub fn substitute(&self, images: &[MPoly], target_vars: Vec<String>) -> MPoly {
        assert_eq!(images.len(), self.vars.len());
        let mut out = MPoly::zero(target_vars.clone());
        for (e, c) in &self.terms {
            let mut term = MPoly::constant(target_vars.clone(), c.clone());
            for (i, &exp) in e.0.iter().enumerate() {
                if exp > 0 {
                    term = term.mul(&images[i].pow(exp));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Swaps two variables (by index).
    pub fn swap_vars(&self, i: usize, j: usize) -> MPoly {
        let mut out = MPoly::zero(self.vars.clone());
        for (e, c) in &self.terms {
            let mut v = e.0.clone();
            v.swap(i, j);
            out.add_term(v, c);
        }
        out
    }

    /// Exact division; fails if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &MPoly) -> Result<MPoly> {
        self.check_vars(divisor);
        if divisor.is_zero() {
            return Err(internal("division by zero polynomial"));
        }
        let (lead_e, lead_c) = divisor.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.vars.clone());
        while !rem.is_zero() {
            let (re, rc) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
            if re.0.iter().zip(&lead_e.0).any(|(a, b)| a < b) {
                return Err(internal("non-exact polynomial division"));
            }
            let qe: Vec<u32> = re.0.iter().zip(&lead_e.0).map(|(a, b)| a - b).collect();
            let qc = &rc / &lead_c;
            let mut mono = MPoly::zero(self.vars.clone());
            mono.add_term(qe.clone(), &qc);
            quot.add_term(qe, &qc);
            rem = rem.sub(&mono.mul(divisor));
        }
        Ok(quot)
    }

    /// Determinant of a square matrix of polynomials (cofactor expansion).
    pub fn det(matrix: &[Vec<MPoly>], vars: Vec<String>) -> MPoly {
        let n = matrix.len();
        if n == 0 {
            return MPoly::one(vars);
        }
        fn rec(matrix: &[Vec<MPoly>], cols: &[usize], row: usize, vars: &[String]) -> MPoly {
            if cols.is_empty() {
                return MPoly::one(vars.to_vec());
            }
            let mut total = MPoly::zero(vars.to_vec());
            for idx in 0..cols.len() {
                let col = cols[idx];
                let entry = &matrix[row][col];
                if entry.is_zero() {
                    continue;
                }
                let mut rest = cols.to_vec();
                rest.remove(idx);
                let sub = rec(matrix, &rest, row + 1, vars);
                let signed = if idx % 2 == 0 { entry.mul(&sub) } else { entry.mul(&sub).neg() };
                total = total.add(&signed);
            }
            total
        }
        let cols: Vec<usize> = (0..n).collect();
        rec(matrix, &cols, 0, &vars)
    }

    /// Checks invariance under swapping adjacent variables within the index
    /// range `[lo, hi)`.
    pub fn symmetric_in_range(&self, lo: usize, hi: usize) -> bool {
        (lo..hi.saturating_sub(1)).all(|i| self.swap_vars(i, i + 1) == *self)
    }

    /// JSON form: {"vars": [...], "terms": [{"e": [...], "c": [num, den]}]}.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| {
                json!({
                    "e": e.0,
                    "c": [c.numer().to_string(), c.denom().to_string()],
                })
            })
            .collect();
        json!({ "vars": self.vars, "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<MPoly> {
        let vars: Vec<String> = v["vars"]
            .as_array()
            .ok_or_else(|| validation("missing vars"))?
            .iter()
            .map(|s| s.as_str().unwrap_or_default().to_string())
            .collect();
        let mut out = MPoly::zero(vars);
        for t in v["terms"].as_array().ok_or_else(|| validation("missing terms"))? {
            let e: Vec<u32> = t["e"]
                .as_array()
                .ok_or_else(|| validation("missing exponents"))?
                .iter()
                .map(|x| x.as_u64().unwrap_or(0) as u32)
                .collect();
            let c = t["c"].as_array().ok_or_else(|| validation("missing coefficient"))?;
            let num: num_bigint::BigInt = c[0]
                .as_str()
                .ok_or_else(|| validation("bad numerator"))?
                .parse()
                .map_err(|_| validation("bad numerator"))?;
            let den: num_bigint::BigInt = c[1]
                .as_str()
                .ok_or_else(|| validation("bad denominator"))?
                .parse()
                .map_err(|_| validation("bad denominator"))?;
            out.add_term(e, &Q::new(num, den));
        }
        Ok(out)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // Highest degree first reads better.
        for (e, c) in self.terms.iter().rev() {
            let mut mono = String::new();
            for (i, &exp) in e.0.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(&self.vars[i]);
                if exp > 1 {
                    mono.push_str(&format!("^{exp}"));
                }
            }
            let coeff_abs = c.abs();
            let sign = c.is_negative();
            if first {
                if sign {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_empty() {
                write!(f, "{}", q_display(&coeff_abs))?;
            } else if coeff_abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{}", q_display(&coeff_abs), mono)?;
            }
        }
        Ok(())
    }
}

/// Standard variable list `x1..xm, y1..yk, z1..zn`.
pub fn xyz_vars(m: usize, k: usize, n: usize) -> Vec<String> {
    let mut vars = Vec::new();
    for i in 1..=m {
        vars.push(format!("x{i}"));
    }
    for i in 1..=k {
        vars.push(format!("y{i}"));
    }
    for i in 1..=n {
        vars.push(format!("z{i}"));
    }
    vars
}
