//! Degeneracy locus Chern class formulas: rank condition tables, formula
//! emission over named vector bundles, and evaluation through Chern roots.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{precondition, validation, Result};
use crate::mpoly::MPoly;
use crate::rational::{q_int, q_one, q_pow2};
use crate::schubops::borel_vars;
use crate::shapes::{KIndex, LieType, Shape};
use crate::split::{split_terms, SplitProblem};
use crate::sym::conjugate;
use crate::weyl::{EmbedVariant, Group, SignedPermutation};

/// A formal Z-linear combination of named vector bundles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleExpr {
    /// (sign, bundle name, rank); sign is +1 or -1.
    pub parts: Vec<(i32, String, i64)>,
}

impl BundleExpr {
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, (sign, name, _)) in self.parts.iter().enumerate() {
            if *sign < 0 {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            out.push_str(name);
        }
        out
    }
}

/// The kind of one factor in a locus formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorKind {
    /// Schur polynomial `s_shape`.
    S,
    /// Theta polynomial (types B/C).
    Theta,
    /// Eta polynomial (type D).
    Eta,
}

/// One factor: a tagged polynomial applied to a bundle expression, in both
/// the quotient-bundle and difference presentations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocusFactor {
    pub kind: FactorKind,
    pub shape: Shape,
    /// Shape used in the quotient form (conjugated for the z-side slots).
    pub quotient_shape: Shape,
    pub arg_quotient: BundleExpr,
    pub arg_difference: BundleExpr,
}

/// A degeneracy locus formula.
#[derive(Debug, Clone)]
pub struct LocusFormula {
    pub lie_type: LieType,
    pub w: SignedPermutation,
    pub n: u32,
    pub a_seq: Vec<KIndex>,
    pub b_seq: Vec<KIndex>,
    /// Power of two scaling the whole formula (type B: -s(w)).
    pub pow2: i32,
    pub terms: Vec<(i64, Vec<LocusFactor>)>,
}

fn bundle(sign: i32, name: impl Into<String>, rank: i64) -> (i32, String, i64) {
    (sign, name.into(), rank)
}

/// A plain partition as a shape (k large enough to impose no strictness).
fn plain_shape(parts: Vec<u32>) -> Shape {
    let k = parts.first().copied().unwrap_or(0);
    Shape::untyped(parts, k).expect("plain partitions always validate")
}

/// The integer table `d_w(r, s)` of rank conditions defining the locus.
pub fn rank_conditions(
    w: &SignedPermutation,
    lie_type: LieType,
    n: u32,
    a_seq: &[KIndex],
) -> Result<Vec<Vec<u32>>> {
    for win in a_seq.windows(2) {
        if win[0].as_int() >= win[1].as_int() {
            return Err(validation("a-sequence must increase"));
        }
    }
    if a_seq.iter().any(|a| a.as_int() >= n) {
        return Err(validation("a-sequence entries must be below n"));
    }
    let embedded: SignedPermutation;
    let (rows, cols): (usize, usize);
    match lie_type {
        LieType::A => {
            if w.group() != Group::A {
                return Err(validation("type A table needs a permutation"));
            }
            embedded = w.to_rank(n as usize)?;
            rows = a_seq.len();
            cols = n as usize;
        }
        LieType::C => {
            if w.group() != Group::BC {
                return Err(validation("type C table needs a signed permutation"));
            }
            embedded = w.to_rank(n as usize)?.embed_symmetric(EmbedVariant::Phi)?;
            rows = a_seq.len();
            cols = 2 * n as usize;
        }
        LieType::B => {
            if w.group() != Group::BC {
                return Err(validation("type B table needs a signed permutation"));
            }
            embedded = w.to_rank(n as usize)?.embed_symmetric(EmbedVariant::PhiPrime)?;
            rows = a_seq.len();
            cols = 2 * n as usize + 1;
        }
        LieType::D => {
            if w.group() != Group::D {
                return Err(validation("type D table needs an even-signed permutation"));
            }
            let w0 = SignedPermutation::longest_element(Group::BC, n as usize);
            let conj = w0
                .compose(&w.retype(Group::BC)?.to_rank(n as usize)?)?
                .compose(&w0)?;
            embedded = conj.embed_symmetric(EmbedVariant::Phi)?;
            rows = a_seq.len();
            cols = 2 * n as usize;
        }
    }
    let mut table = vec![vec![0u32; cols]; rows];
    for (r, a) in a_seq.iter().enumerate() {
        let bound = match lie_type {
            LieType::A => a.as_int() as usize,
            _ => (n - a.as_int()) as usize,
        };
        for s in 1..=cols {
            let threshold = match lie_type {
                LieType::A => n as i64 - s as i64,
                LieType::B => 2 * n as i64 + 1 - s as i64,
                _ => 2 * n as i64 - s as i64,
            };
            table[r][s - 1] =
                (1..=bound).filter(|&i| embedded.value_at(i) > threshold).count() as u32;
        }
    }
    Ok(table)
}

/// Emits the degeneracy locus formula for `w`.
pub fn emit_locus(
    w: &SignedPermutation,
    lie_type: LieType,
    n: u32,
    a_seq: &[KIndex],
    b_seq: &[KIndex],
) -> Result<LocusFormula> {
    if a_seq.iter().chain(b_seq).any(|k| k.as_int() >= n) {
        return Err(validation("sequence entries must be below n"));
    }
    let split_type = if lie_type == LieType::B { LieType::C } else { lie_type };
    let problem = SplitProblem::new(split_type, w.clone(), a_seq.to_vec(), b_seq.to_vec())?;
    let terms = split_terms(&problem)?;
    let q = problem.q();
    let aval = |t: usize| -> i64 { a_seq[t - 1].as_int() as i64 };
    let bval = |t: usize| -> i64 { b_seq[t - 1].as_int() as i64 };
    let n = n as i64;
    // Ambient and flag ranks by type.
    let (e_rank, f_shift) = match lie_type {
        LieType::A => (n, 0),
        LieType::C | LieType::D => (2 * n, 0),
        LieType::B => (2 * n + 1, 1),
    };
    let e_r_rank = |r: usize| -> i64 {
        match lie_type {
            LieType::A => aval(r),
            _ => n - aval(r),
        }
    };
    let mut out_terms = Vec::new();
    for term in terms {
        let mut factors = Vec::new();
        for (j, shape) in term.shapes.iter().enumerate() {
            let slot = j + 1;
            if slot < q {
                // z-side Schur factor.
                let (arg_diff, arg_quot) = match lie_type {
                    LieType::A => {
                        let hi = n - bval(q - slot);
                        let lo = n - bval(q + 1 - slot);
                        (
                            BundleExpr {
                                parts: vec![bundle(1, format!("F_{hi}"), hi), bundle(-1, format!("F_{lo}"), lo)],
                            },
                            BundleExpr {
                                parts: vec![bundle(1, format!("F_{hi}"), hi), bundle(-1, format!("F_{lo}"), lo)],
                            },
                        )
                    }
                    _ => {
                        let lo = n + f_shift + bval(q - slot);
                        let hi = n + f_shift + bval(q + 1 - slot);
                        (
                            BundleExpr {
                                parts: vec![bundle(1, format!("F_{lo}"), lo), bundle(-1, format!("F_{hi}"), hi)],
                            },
                            BundleExpr {
                                // Qhat_{q+1-slot} = F_{n-b_{q-slot}}/F_{n-b_{q+1-slot}}
                                parts: vec![
                                    bundle(1, format!("F_{}", n - bval(q - slot)), n - bval(q - slot)),
                                    bundle(-1, format!("F_{}", n - bval(q + 1 - slot)), n - bval(q + 1 - slot)),
                                ],
                            },
                        )
                    }
                };
                let (kind, shape_out, qshape) = match lie_type {
                    LieType::A => (
                        FactorKind::S,
                        plain_shape(conjugate(&shape.parts)),
                        plain_shape(conjugate(&shape.parts)),
                    ),
                    _ => (
                        FactorKind::S,
                        shape.clone(),
                        plain_shape(conjugate(&shape.parts)),
                    ),
                };
                factors.push(LocusFactor {
                    kind,
                    shape: shape_out,
                    quotient_shape: qshape,
                    arg_quotient: arg_quot,
                    arg_difference: arg_diff,
                });
            } else if slot == q {
                let fidx = n + f_shift - if lie_type == LieType::A { bval(1) } else { 0 };
                let arg = BundleExpr {
                    parts: vec![
                        bundle(1, "E".to_string(), e_rank),
                        bundle(-1, "E_1".to_string(), e_r_rank(1)),
                        bundle(-1, format!("F_{fidx}"), fidx),
                    ],
                };
                let quot = match lie_type {
                    LieType::A => arg.clone(),
                    _ => BundleExpr {
                        parts: vec![
                            bundle(1, "Q_1".to_string(), e_rank - e_r_rank(1)),
                            bundle(-1, format!("F_{fidx}"), fidx),
                        ],
                    },
                };
                let (kind, shape_out) = match lie_type {
                    LieType::A => (FactorKind::S, plain_shape(conjugate(&shape.parts))),
                    LieType::B | LieType::C => (FactorKind::Theta, shape.clone()),
                    LieType::D => (FactorKind::Eta, shape.clone()),
                };
                factors.push(LocusFactor {
                    kind,
                    shape: shape_out,
                    quotient_shape: shape.clone(),
                    arg_quotient: quot,
                    arg_difference: arg,
                });
            } else {
                // y-side Schur factor: E_{i} - E_{i+1} with i = slot - q.
                let i = slot - q;
                let (hi_name, hi_rank) = if i == 1 && lie_type == LieType::A {
                    ("E_1".to_string(), e_r_rank(1))
                } else {
                    (format!("E_{i}"), e_r_rank(i))
                };
                let _ = (hi_name, hi_rank);
                let arg = BundleExpr {
                    parts: vec![
                        bundle(1, format!("E_{i}"), e_r_rank(i)),
                        bundle(-1, format!("E_{}", i + 1), e_r_rank(i + 1)),
                    ],
                };
                let quot = BundleExpr {
                    parts: vec![bundle(1, format!("Q_{}", i + 1), (e_r_rank(i) - e_r_rank(i + 1)).abs())],
                };
                let shape_out = match lie_type {
                    LieType::A => plain_shape(conjugate(&shape.parts)),
                    _ => shape.clone(),
                };
                factors.push(LocusFactor {
                    kind: FactorKind::S,
                    shape: shape_out,
                    quotient_shape: shape.clone(),
                    arg_quotient: quot,
                    arg_difference: arg,
                });
            }
        }
        out_terms.push((term.coeff as i64, factors));
    }
    let pow2 = if lie_type == LieType::B { -(w.sign_changes() as i32) } else { 0 };
    Ok(LocusFormula {
        lie_type,
        w: w.clone(),
        n: n as u32,
        a_seq: a_seq.to_vec(),
        b_seq: b_seq.to_vec(),
        pow2,
        terms: out_terms,
    })
}

impl LocusFormula {
    /// LaTeX rendering in the difference form.
    pub fn latex(&self) -> String {
        let mut out = String::new();
        if self.pow2 != 0 {
            out.push_str(&format!("2^{{{}}}", self.pow2));
        }
        for (i, (coeff, factors)) in self.terms.iter().enumerate() {
            if i > 0 || *coeff < 0 {
                out.push_str(if *coeff < 0 { " - " } else { " + " });
            }
            let abs = coeff.abs();
            if abs != 1 {
                out.push_str(&format!("{abs}\\,"));
            }
            for f in factors {
                if f.shape.is_empty() {
                    continue;
                }
                let head = match f.kind {
                    FactorKind::S => "s",
                    FactorKind::Theta => {
                        if self.lie_type == LieType::B {
                            "\\Theta'"
                        } else {
                            "\\Theta"
                        }
                    }
                    FactorKind::Eta => "H",
                };
                let parts = f
                    .shape
                    .parts
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                out.push_str(&format!("{head}_{{({parts})}}({})", f.arg_difference.render()));
            }
            if factors.iter().all(|f| f.shape.is_empty()) {
                out.push('1');
            }
        }
        if self.terms.is_empty() {
            out.push('0');
        }
        out
    }

    /// JSON rendering, schema `locus-v1`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(coeff, factors)| {
                let fs: Vec<Value> = factors
                    .iter()
                    .map(|f| {
                        json!({
                            "kind": match f.kind {
                                FactorKind::S => "s",
                                FactorKind::Theta => "theta",
                                FactorKind::Eta => "eta",
                            },
                            "shape": f.shape.to_json(),
                            "quotient_shape": f.quotient_shape.to_json(),
                            "arg": f.arg_difference.render(),
                            "arg_quotient": f.arg_quotient.render(),
                        })
                    })
                    .collect();
                json!({ "coeff": coeff, "factors": fs })
            })
            .collect();
        json!({
            "schema": "locus-v1",
            "type": match self.lie_type {
                LieType::A => "A",
                LieType::B => "B",
                LieType::C => "C",
                LieType::D => "D",
            },
            "w": self.w.one_line(),
            "n": self.n,
            "a": self.a_seq.iter().map(|k| k.as_int()).collect::<Vec<_>>(),
            "b": self.b_seq.iter().map(|k| k.as_int()).collect::<Vec<_>>(),
            "pow2": self.pow2,
            "terms": terms,
        })
    }
}

/// Chern root assignments: bundle name to a list of linear forms.
pub type RootMap = BTreeMap<String, Vec<MPoly>>;

/// The standard root assignment in the Borel presentation variables.
pub fn standard_roots(lie_type: LieType, n: u32, a_seq: &[KIndex]) -> RootMap {
    let vars = borel_vars(n as usize);
    let x = |i: i64| MPoly::var(vars.clone(), &format!("X{i}")).unwrap();
    let y = |i: i64| MPoly::var(vars.clone(), &format!("Y{i}")).unwrap();
    let n = n as i64;
    let mut map = RootMap::new();
    match lie_type {
        LieType::A => {
            // E_r = V_{a_r} has roots -x_1 .. -x_{a_r}; F_s has roots
            // -y_{n-s+1} .. -y_n; E = V_n.
            map.insert("E".into(), (1..=n).map(|i| x(i).neg()).collect());
            for (r, a) in a_seq.iter().enumerate() {
                let ar = a.as_int() as i64;
                map.insert(format!("E_{}", r + 1), (1..=ar).map(|i| x(i).neg()).collect());
            }
            for s in 1..=n {
                map.insert(format!("F_{s}"), (n - s + 1..=n).map(|i| y(i).neg()).collect());
            }
        }
        LieType::C | LieType::D => {
            let mut e_roots: Vec<MPoly> = (1..=n).map(&x).collect();
            e_roots.extend((1..=n).map(|i| x(i).neg()));
            map.insert("E".into(), e_roots);
            // E_0: the maximal isotropic subbundle, roots -x_1 .. -x_n.
            map.insert("E_0".into(), (1..=n).map(|i| x(i).neg()).collect());
            for (r, a) in a_seq.iter().enumerate() {
                let ar = a.as_int() as i64;
                map.insert(format!("E_{}", r + 1), (ar + 1..=n).map(|i| x(i).neg()).collect());
            }
            for s in 1..=n {
                map.insert(format!("F_{s}"), (n - s + 1..=n).map(|i| y(i).neg()).collect());
            }
            for s in 1..=n {
                let mut roots: Vec<MPoly> = (1..=n).map(|i| y(i).neg()).collect();
                roots.extend((1..=s).map(&y));
                map.insert(format!("F_{}", n + s), roots);
            }
            // Quotients.
            let a1 = a_seq[0].as_int() as i64;
            let mut q1: Vec<MPoly> = (1..=n).map(&x).collect();
            q1.extend((1..=a1).map(|i| x(i).neg()));
            map.insert("Q_1".into(), q1);
            for r in 2..=a_seq.len() {
                let lo = a_seq[r - 2].as_int() as i64;
                let hi = a_seq[r - 1].as_int() as i64;
                map.insert(format!("Q_{r}"), (lo + 1..=hi).map(|i| x(i).neg()).collect());
            }
        }
        LieType::B => {
            let zero = MPoly::zero(vars.clone());
            let mut e_roots: Vec<MPoly> = (1..=n).map(&x).collect();
            e_roots.extend((1..=n).map(|i| x(i).neg()));
            e_roots.push(zero.clone());
            map.insert("E".into(), e_roots);
            map.insert("E_0".into(), (1..=n).map(|i| x(i).neg()).collect());
            for (r, a) in a_seq.iter().enumerate() {
                let ar = a.as_int() as i64;
                map.insert(format!("E_{}", r + 1), (ar + 1..=n).map(|i| x(i).neg()).collect());
            }
            for s in 1..=n {
                map.insert(format!("F_{s}"), (n - s + 1..=n).map(|i| y(i).neg()).collect());
            }
            for s in 0..=n {
                let mut roots: Vec<MPoly> = (1..=n).map(|i| y(i).neg()).collect();
                roots.push(zero.clone());
                roots.extend((1..=s).map(&y));
                map.insert(format!("F_{}", n + 1 + s), roots);
            }
            let a1 = a_seq[0].as_int() as i64;
            let mut q1: Vec<MPoly> = (1..=n).map(&x).collect();
            q1.push(zero);
            q1.extend((1..=a1).map(|i| x(i).neg()));
            map.insert("Q_1".into(), q1);
            for r in 2..=a_seq.len() {
                let lo = a_seq[r - 2].as_int() as i64;
                let hi = a_seq[r - 1].as_int() as i64;
                map.insert(format!("Q_{r}"), (lo + 1..=hi).map(|i| x(i).neg()).collect());
            }
        }
    }
    map
}

/// Truncated Chern series of a bundle expression from its roots.
fn chern_series(expr: &BundleExpr, roots: &RootMap, vars: &[String], degree: usize) -> Result<Vec<MPoly>> {
    let mut acc = vec![MPoly::one(vars.to_vec())];
    acc.resize(degree + 1, MPoly::zero(vars.to_vec()));
    for (sign, name, rank) in &expr.parts {
        let rs = roots
            .get(name)
            .ok_or_else(|| precondition(format!("no root assignment for bundle {name}")))?;
        if rs.len() as i64 != *rank {
            return Err(precondition(format!(
                "bundle {name} has {} roots but declared rank {rank}",
                rs.len()
            )));
        }
        if *sign > 0 {
            for root in rs {
                let mut next = acc.clone();
                for d in (0..degree).rev() {
                    if !acc[d].is_zero() {
                        let add = acc[d].mul(root);
                        next[d + 1] = next[d + 1].add(&add);
                    }
                }
                acc = next;
            }
        } else {
            for root in rs {
                // Divide by (1 + root t): b_d = a_d - root * b_{d-1}.
                let mut b = vec![MPoly::zero(vars.to_vec()); degree + 1];
                b[0] = acc[0].clone();
                for d in 1..=degree {
                    b[d] = acc[d].sub(&root.mul(&b[d - 1]));
                }
                acc = b;
            }
        }
    }
    Ok(acc)
}

/// Evaluates one factor through the Chern root hooks.
fn evaluate_factor(
    f: &LocusFactor,
    _lie_type: LieType,
    roots: &RootMap,
    vars: &[String],
    a1: u32,
) -> Result<MPoly> {
    let degree = (f.shape.weight() + f.shape.len() as u32 * f.shape.len() as u32) as usize + 2;
    let g = chern_series(&f.arg_difference, roots, vars, degree)?;
    let gval = |r: i64| -> MPoly {
        if r < 0 {
            MPoly::zero(vars.to_vec())
        } else if (r as usize) < g.len() {
            g[r as usize].clone()
        } else {
            MPoly::zero(vars.to_vec())
        }
    };
    match f.kind {
        FactorKind::S => {
            // s_lambda(c - d) = det(h_{lambda_i + j - i}) with the h series
            // = 1/s(-t).
            let ell = f.shape.len();
            if ell == 0 {
                return Ok(MPoly::one(vars.to_vec()));
            }
            // h series: invert sum (-1)^i c_i t^i.
            let mut h = vec![MPoly::one(vars.to_vec())];
            for r in 1..=degree {
                let mut acc = MPoly::zero(vars.to_vec());
                for i in 1..=r {
                    let sign = if i % 2 == 1 { q_int(-1) } else { q_one() };
                    acc = acc.add(&gval(i as i64).scale(&sign).mul(&h[r - i]));
                }
                h.push(acc.neg());
            }
            let hval = |r: i64| -> MPoly {
                if r < 0 {
                    MPoly::zero(vars.to_vec())
                } else {
                    h.get(r as usize).cloned().unwrap_or_else(|| MPoly::zero(vars.to_vec()))
                }
            };
            let matrix: Vec<Vec<MPoly>> = (1..=ell)
                .map(|i| {
                    (1..=ell)
                        .map(|j| hval(f.shape.part(i) as i64 + j as i64 - i as i64))
                        .collect()
                })
                .collect();
            Ok(MPoly::det(&matrix, vars.to_vec()))
        }
        FactorKind::Theta => {
            let formal = crate::formal::theta_formal(&f.shape)?;
            crate::polyring::specialize(
                &formal,
                &|s| match s {
                    crate::formal::Symbol::C(r) => Some(gval(r as i64)),
                    _ => None,
                },
                vars.to_vec(),
            )
        }
        FactorKind::Eta => {
            let formal = crate::formal::eta_formal(&f.shape)?;
            let k = f.shape.k.as_int();
            // tau_k and tau'_k evaluate through the auxiliary bundle
            // E_0 - E_1 (the k-th Chern class of the two isotropic
            // families).
            let aux = BundleExpr {
                parts: vec![bundle(1, "E_0".to_string(), 0), bundle(-1, "E_1".to_string(), 0)],
            };
            // Rank hints are unknown here; rebuild with true ranks.
            let aux = BundleExpr {
                parts: aux
                    .parts
                    .iter()
                    .map(|(s, nm, _)| (*s, nm.clone(), roots.get(nm).map(|r| r.len() as i64).unwrap_or(0)))
                    .collect(),
            };
            let e_series = chern_series(&aux, roots, vars, k.max(a1) as usize + 1)?;
            let ek = e_series.get(k as usize).cloned().unwrap_or_else(|| MPoly::zero(vars.to_vec()));
            let half = crate::rational::q_ratio(1, 2);
            crate::polyring::specialize(
                &formal,
                &|s| match s {
                    crate::formal::Symbol::C(r) => Some(gval(r as i64)),
                    crate::formal::Symbol::Tau(r) if r < k => Some(gval(r as i64)),
                    crate::formal::Symbol::Tau(r) if r == k => {
                        Some(gval(r as i64).add(&ek).scale(&half))
                    }
                    crate::formal::Symbol::Tau(r) => Some(gval(r as i64).scale(&half)),
                    crate::formal::Symbol::TauPrime(r) if r == k => {
                        Some(gval(r as i64).sub(&ek).scale(&half))
                    }
                    _ => None,
                },
                vars.to_vec(),
            )
        }
    }
}

/// Evaluates a locus formula through Chern roots, producing a polynomial in
/// the Borel presentation variables.
pub fn evaluate_locus(formula: &LocusFormula, roots: &RootMap) -> Result<MPoly> {
    let vars = borel_vars(formula.n as usize);
    let mut out = MPoly::zero(vars.clone());
    let a1 = formula.a_seq[0].as_int();
    for (coeff, factors) in &formula.terms {
        let mut term = MPoly::constant(vars.clone(), q_int(*coeff));
        for f in factors {
            term = term.mul(&evaluate_factor(f, formula.lie_type, roots, &vars, a1)?);
        }
        out = out.add(&term);
    }
    Ok(out.scale(&q_pow2(formula.pow2)))
}
