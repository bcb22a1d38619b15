//! Concrete symmetric polynomial families and basis expansions.
//!
//! Provides the generating-series families (`q_r`, `vartheta_r`,
//! `eta_k`/`eta'_k`, supersymmetric `h_r` and Schur polynomials) both as
//! finite-variable [`MPoly`] values and as stable [`SymPoly`]/[`MixedPoly`]
//! values, together with specialization of formal polynomials and expansion
//! in the Schur Q-function basis.

use std::collections::BTreeMap;

use crate::error::{internal, validation, Result};
use crate::formal::{FormalPoly, Symbol};
use crate::mpoly::MPoly;
use crate::rational::{q_int, q_one, q_pow2, q_ratio, Q};
use crate::shapes::Shape;
use crate::sym::{
    gen_q_sym, normalize_partition, partition_weight, MixedPoly, Partition, SymPoly, VarB,
};
use num_traits::Zero;

// ---------------------------------------------------------------------------
// Finite-variable families (MPoly).
// ---------------------------------------------------------------------------

/// Multiplies truncated power series with MPoly coefficients.
fn series_mul(a: &[MPoly], b: &[MPoly], degree: usize) -> Vec<MPoly> {
    let vars = a[0].vars.clone();
    let mut out = vec![MPoly::zero(vars); degree + 1];
    #[allow(clippy::needless_range_loop)]
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j > degree {
                break;
            }
            out[i + j] = out[i + j].add(&ai.mul(bj));
        }
    }
    out
}

fn var_series(vars: &[String], name: &str, degree: usize, factor: SeriesFactor) -> Vec<MPoly> {
    let x = MPoly::var(vars.to_vec(), name).unwrap();
    let one = MPoly::one(vars.to_vec());
    let mut out = vec![one; degree + 1];
    let mut pw = MPoly::one(vars.to_vec());
    #[allow(clippy::needless_range_loop)]
    for r in 1..=degree {
        pw = pw.mul(&x);
        out[r] = match factor {
            // (1 + x t)/(1 - x t) = 1 + 2 x t + 2 x^2 t^2 + ...
            SeriesFactor::QRatio => pw.scale(&q_int(2)),
            // 1 + x t
            SeriesFactor::Linear => {
                if r == 1 {
                    pw.clone()
                } else {
                    MPoly::zero(vars.to_vec())
                }
            }
            // 1/(1 - x t) = 1 + x t + x^2 t^2 + ...
            SeriesFactor::Geometric => pw.clone(),
            // 1 - x t
            SeriesFactor::LinearNeg => {
                if r == 1 {
                    pw.neg()
                } else {
                    MPoly::zero(vars.to_vec())
                }
            }
        };
    }
    out
}

#[derive(Clone, Copy)]
enum SeriesFactor {
    QRatio,
    Linear,
    Geometric,
    LinearNeg,
}

/// `q_r(x_1..x_m)`: coefficient of `t^r` in `prod (1+x_i t)/(1-x_i t)`.
pub fn gen_q(r: i64, m: usize) -> MPoly {
    let vars = crate::mpoly::xyz_vars(m, 0, 0);
    if r < 0 {
        return MPoly::zero(vars);
    }
    let degree = r as usize;
    let mut series = vec![MPoly::one(vars.clone())];
    series.resize(degree + 1, MPoly::zero(vars.clone()));
    series[0] = MPoly::one(vars.clone());
    let mut acc = series;
    for i in 1..=m {
        let f = var_series(&vars, &format!("x{i}"), degree, SeriesFactor::QRatio);
        acc = series_mul(&acc, &f, degree);
    }
    acc[degree].clone()
}

/// `vartheta_r(x_1..x_m; y_1..y_k)`: coefficient of `t^r` in
/// `prod (1+x_i t)/(1-x_i t) prod (1+y_j t)`.
pub fn gen_theta_series(r: i64, m: usize, k: usize) -> MPoly {
    let vars = crate::mpoly::xyz_vars(m, k, 0);
    if r < 0 {
        return MPoly::zero(vars);
    }
    let degree = r as usize;
    let mut acc = vec![MPoly::one(vars.clone())];
    acc.resize(degree + 1, MPoly::zero(vars.clone()));
    acc[0] = MPoly::one(vars.clone());
    for i in 1..=m {
        let f = var_series(&vars, &format!("x{i}"), degree, SeriesFactor::QRatio);
        acc = series_mul(&acc, &f, degree);
    }
    for j in 1..=k {
        let f = var_series(&vars, &format!("y{j}"), degree, SeriesFactor::Linear);
        acc = series_mul(&acc, &f, degree);
    }
    acc[degree].clone()
}

/// The pair `(eta_k, eta'_k)` in `m` x-variables and `k` y-variables.
pub fn eta_generators(k: usize, m: usize) -> (MPoly, MPoly) {
    assert!(k >= 1);
    let vars = crate::mpoly::xyz_vars(m, k, 0);
    let theta = gen_theta_series(k as i64, m, k);
    // e_k(y_1..y_k) = y_1 ... y_k.
    let mut ek = MPoly::one(vars.clone());
    for j in 1..=k {
        ek = ek.mul(&MPoly::var(vars.clone(), &format!("y{j}")).unwrap());
    }
    let half = q_ratio(1, 2);
    let eta = theta.scale(&half).add(&ek.scale(&half));
    let eta_prime = theta.scale(&half).sub(&ek.scale(&half));
    (eta, eta_prime)
}

/// Supersymmetric complete function `h_r(Y_(m)/Z_(n))`:
/// coefficient of `t^r` in `prod (1-y_i t)^{-1} prod (1-z_j t)`.
pub fn supersym_h(r: i64, m: usize, n: usize) -> MPoly {
    let vars = crate::mpoly::xyz_vars(0, m, n);
    if r < 0 {
        return MPoly::zero(vars);
    }
    let degree = r as usize;
    let mut acc = vec![MPoly::one(vars.clone())];
    acc.resize(degree + 1, MPoly::zero(vars.clone()));
    acc[0] = MPoly::one(vars.clone());
    for i in 1..=m {
        let f = var_series(&vars, &format!("y{i}"), degree, SeriesFactor::Geometric);
        acc = series_mul(&acc, &f, degree);
    }
    for j in 1..=n {
        let f = var_series(&vars, &format!("z{j}"), degree, SeriesFactor::LinearNeg);
        acc = series_mul(&acc, &f, degree);
    }
    acc[degree].clone()
}

/// Supersymmetric Schur polynomial `s_lambda(Y_(m)/Z_(n)) = det(h_{lambda_i+j-i})`.
pub fn schur_super(parts: &Partition, m: usize, n: usize) -> MPoly {
    let vars = crate::mpoly::xyz_vars(0, m, n);
    let ell = parts.len();
    if ell == 0 {
        return MPoly::one(vars);
    }
    let matrix: Vec<Vec<MPoly>> = (1..=ell)
        .map(|i| {
            (1..=ell)
                .map(|j| supersym_h(parts[i - 1] as i64 + j as i64 - i as i64, m, n))
                .collect()
        })
        .collect();
    MPoly::det(&matrix, vars)
}

/// Schur polynomial via the alternant quotient
/// `det(y_i^{mu_j + d - j}) / det(y_i^{d - j})`; an oracle independent of
/// the Jacobi-Trudi route.
pub fn alternant_schur_oracle(mu: &Partition, d: usize) -> Result<MPoly> {
    if mu.len() > d {
        return Err(validation("need at least l(mu) variables"));
    }
    let vars = crate::mpoly::xyz_vars(0, d, 0);
    let power = |i: usize, e: i64| -> MPoly {
        let mut p = MPoly::one(vars.clone());
        let y = MPoly::var(vars.clone(), &format!("y{i}")).unwrap();
        for _ in 0..e {
            p = p.mul(&y);
        }
        p
    };
    let part = |j: usize| -> i64 { mu.get(j - 1).copied().unwrap_or(0) as i64 };
    let numer: Vec<Vec<MPoly>> = (1..=d)
        .map(|i| (1..=d).map(|j| power(i, part(j) + d as i64 - j as i64)).collect())
        .collect();
    let denom: Vec<Vec<MPoly>> = (1..=d)
        .map(|i| (1..=d).map(|j| power(i, d as i64 - j as i64)).collect())
        .collect();
    let numer = MPoly::det(&numer, vars.clone());
    let denom = MPoly::det(&denom, vars);
    numer.div_exact(&denom)
}

/// Substitution homomorphism: replaces every symbol of `f` by its image.
pub fn specialize(f: &FormalPoly, assign: &dyn Fn(Symbol) -> Option<MPoly>, vars: Vec<String>) -> Result<MPoly> {
    let mut out = MPoly::zero(vars.clone());
    for (mono, c) in &f.terms {
        let mut term = MPoly::constant(vars.clone(), c.clone());
        for s in mono {
            let img = assign(*s).ok_or_else(|| validation(format!("no image for symbol {}", s.render())))?;
            term = term.mul(&img);
        }
        out = out.add(&term);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Stable families (SymPoly / MixedPoly).
// ---------------------------------------------------------------------------

/// `e_i` of a block of concrete y/z variables, as a MixedPoly monomial sum.
pub fn e_block(i: usize, block: VarB, vars: &[u32]) -> MixedPoly {
    if i > vars.len() {
        return MixedPoly::zero();
    }
    let mut out = MixedPoly::zero();
    let mut idx: Vec<usize> = (0..i).collect();
    loop {
        let mono: Vec<_> = idx.iter().map(|&p| ((block, vars[p]), 1u32)).collect();
        out.add_term(vec![], mono, &q_one());
        // next combination
        let mut pos = i;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if idx[pos] + (i - pos) < vars.len() {
                idx[pos] += 1;
                for t in pos + 1..i {
                    idx[t] = idx[t - 1] + 1;
                }
                break;
            }
        }
    }
}

/// `vartheta_r(X; Y_(k)) = sum_i q_{r-i}(X) e_i(y_1..y_k)` as a MixedPoly.
pub fn theta_mixed(r: i64, k: u32) -> MixedPoly {
    if r < 0 {
        return MixedPoly::zero();
    }
    let yvars: Vec<u32> = (1..=k).collect();
    let mut out = MixedPoly::zero();
    for i in 0..=(r.min(k as i64)) {
        let qpart = gen_q_sym(r - i);
        let epart = e_block(i as usize, VarB::Y, &yvars);
        out = out.add(&epart.mul_sym(&qpart));
    }
    out
}

/// The stable pair `(eta_k, eta'_k)`.
pub fn eta_mixed(k: u32) -> (MixedPoly, MixedPoly) {
    let yvars: Vec<u32> = (1..=k).collect();
    let theta = theta_mixed(k as i64, k);
    let ek = e_block(k as usize, VarB::Y, &yvars);
    let half = q_ratio(1, 2);
    let eta = theta.scale(&half).add(&ek.scale(&half));
    let eta_p = theta.scale(&half).sub(&ek.scale(&half));
    (eta, eta_p)
}

/// Schur Q-function `Q_lambda(X)` as a stable symmetric function.
pub fn q_lambda_sym(parts: &Partition) -> SymPoly {
    let shape = Shape::untyped(parts.clone(), 0).expect("strict partition");
    let formal = crate::formal::q_pfaffian(&shape).expect("strict partition");
    let mut out = SymPoly::zero();
    for (mono, c) in &formal.terms {
        let mut term = SymPoly::monomial(vec![], c.clone());
        for s in mono {
            match s {
                Symbol::C(r) => term = term.mul(&gen_q_sym(*r as i64)),
                _ => unreachable!("Q_lambda uses only c symbols"),
            }
        }
        out = out.add(&term);
    }
    out
}

/// Schur P-function `P_lambda = 2^{-l(lambda)} Q_lambda`.
pub fn p_lambda_sym(parts: &Partition) -> SymPoly {
    q_lambda_sym(parts).scale(&q_pow2(-(parts.len() as i32)))
}

/// Theta polynomial `Theta_lambda(X; Y_(k))` as a MixedPoly, built from the
/// raising operator expansion by specializing `c_r` to `vartheta_r`.
pub fn theta_lambda_mixed(shape: &Shape) -> Result<MixedPoly> {
    let k = shape.k.as_int();
    let formal = crate::formal::theta_formal(shape)?;
    let mut out = MixedPoly::zero();
    for (mono, c) in &formal.terms {
        let mut term = MixedPoly::term(vec![], vec![], c.clone());
        for s in mono {
            match s {
                Symbol::C(r) => term = term.mul(&theta_mixed(*r as i64, k)),
                _ => unreachable!("theta uses only c symbols"),
            }
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// Eta polynomial `H_lambda(X; Y_(k))` as a MixedPoly, by specializing the
/// tau symbols: `tau_r -> vartheta_r` (r < k), `eta_k`/`eta'_k` (r = k),
/// `(1/2) vartheta_r` (r > k).
pub fn eta_lambda_mixed(shape: &Shape) -> Result<MixedPoly> {
    let k = shape.k.as_int();
    let formal = crate::formal::eta_formal(shape)?;
    let (eta, eta_p) = if k >= 1 { eta_mixed(k) } else { (MixedPoly::zero(), MixedPoly::zero()) };
    let mut out = MixedPoly::zero();
    for (mono, c) in &formal.terms {
        let mut term = MixedPoly::term(vec![], vec![], c.clone());
        for s in mono {
            let img = match s {
                Symbol::Tau(r) if *r < k => theta_mixed(*r as i64, k),
                Symbol::Tau(r) if *r == k => eta.clone(),
                Symbol::Tau(r) => theta_mixed(*r as i64, k).scale(&q_ratio(1, 2)),
                Symbol::TauPrime(r) => {
                    if *r != k {
                        return Err(internal("tau' index must equal k"));
                    }
                    eta_p.clone()
                }
                Symbol::C(r) => theta_mixed(*r as i64, k),
                Symbol::D(_) => return Err(internal("unexpected d symbol in eta")),
            };
            term = term.mul(&img);
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// Supersymmetric Schur polynomial over explicit y/z index blocks, as a
/// MixedPoly (x-free).
pub fn schur_super_mixed(parts: &Partition, yblock: &[u32], zblock: &[u32]) -> MixedPoly {
    let ell = parts.len();
    if ell == 0 {
        return MixedPoly::one();
    }
    let h = |r: i64| -> MixedPoly { h_super_mixed(r, yblock, zblock) };
    // det(h_{lambda_i + j - i}) by cofactor expansion.
    fn det(m: &[Vec<MixedPoly>]) -> MixedPoly {
        let n = m.len();
        if n == 0 {
            return MixedPoly::one();
        }
        fn rec(m: &[Vec<MixedPoly>], row: usize, cols: &[usize]) -> MixedPoly {
            if cols.is_empty() {
                return MixedPoly::one();
            }
            let mut total = MixedPoly::zero();
            for idx in 0..cols.len() {
                let col = cols[idx];
                if m[row][col].is_zero() {
                    continue;
                }
                let mut rest = cols.to_vec();
                rest.remove(idx);
                let sub = rec(m, row + 1, &rest);
                let term = m[row][col].mul(&sub);
                total = if idx % 2 == 0 { total.add(&term) } else { total.sub(&term) };
            }
            total
        }
        let cols: Vec<usize> = (0..n).collect();
        rec(m, 0, &cols)
    }
    let matrix: Vec<Vec<MixedPoly>> = (0..ell)
        .map(|i| (0..ell).map(|j| h(parts[i] as i64 + j as i64 - i as i64)).collect())
        .collect();
    det(&matrix)
}

/// `h_r` of the formal difference of two explicit variable blocks.
pub fn h_super_mixed(r: i64, yblock: &[u32], zblock: &[u32]) -> MixedPoly {
    if r < 0 {
        return MixedPoly::zero();
    }
    if r == 0 {
        return MixedPoly::one();
    }
    let degree = r as usize;
    // Series product over single-variable factors.
    let mut acc: Vec<MixedPoly> = vec![MixedPoly::one()];
    acc.resize(degree + 1, MixedPoly::zero());
    for &i in yblock {
        let mut next = vec![MixedPoly::zero(); degree + 1];
        for d in 0..=degree {
            if acc[d].is_zero() {
                continue;
            }
            for e in 0..=degree - d {
                let mono = vec![((VarB::Y, i), e as u32)];
                let mono: Vec<_> = mono.into_iter().filter(|&(_, e)| e > 0).collect();
                next[d + e] = next[d + e].add(&acc[d].mul_mono(&mono, &q_one()));
            }
        }
        acc = next;
    }
    for &j in zblock {
        let mut next = vec![MixedPoly::zero(); degree + 1];
        for d in 0..=degree {
            if acc[d].is_zero() {
                continue;
            }
            next[d] = next[d].add(&acc[d]);
            if d < degree {
                let mono = vec![((VarB::Z, j), 1u32)];
                next[d + 1] = next[d + 1].add(&acc[d].mul_mono(&mono, &q_int(-1)));
            }
        }
        acc = next;
    }
    acc[degree].clone()
}

/// Expands a stable symmetric function in the basis of Schur Q-functions.
pub fn q_basis_expand_sym(f: &SymPoly) -> Result<BTreeMap<Partition, Q>> {
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while !rest.is_zero() {
        // Largest weight, then lexicographically largest partition.
        let mu = rest
            .terms
            .keys()
            .max_by(|a, b| {
                partition_weight(a)
                    .cmp(&partition_weight(b))
                    .then_with(|| a.cmp(b))
            })
            .unwrap()
            .clone();
        if !mu.windows(2).all(|w| w[0] > w[1]) {
            return Err(validation(format!(
                "not in the span of Schur Q-functions: leading term m_{mu:?}"
            )));
        }
        let coeff = rest.terms[&mu].clone() / q_pow2(mu.len() as i32);
        let q = q_lambda_sym(&mu);
        rest = rest.sub(&q.scale(&coeff));
        if !rest.terms.contains_key(&mu) {
            out.insert(mu, coeff);
        } else {
            return Err(internal("leading term did not cancel in Q expansion"));
        }
    }
    out.retain(|_, c: &mut Q| !c.is_zero());
    Ok(out)
}

/// Expands in the Schur P-function basis.
pub fn p_basis_expand_sym(f: &SymPoly) -> Result<BTreeMap<Partition, Q>> {
    let mut out = q_basis_expand_sym(f)?;
    for (mu, c) in out.iter_mut() {
        *c *= q_pow2(mu.len() as i32);
    }
    Ok(out)
}

/// Reads a symmetric MPoly in pure x-variables into the stable monomial
/// basis, verifying symmetry.
pub fn mpoly_to_sym(f: &MPoly) -> Result<SymPoly> {
    let m = f.vars.len();
    let mut out = SymPoly::zero();
    for (e, c) in &f.terms {
        let sorted: Vec<u32> = {
            let mut v = e.0.clone();
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        };
        if sorted == e.0 {
            out.add_term(normalize_partition(sorted), c);
        }
    }
    // Verify: re-expanding the candidate in m variables recovers f.
    let mut expanded = MPoly::zero(f.vars.clone());
    for (mu, c) in &out.terms {
        for arrangement in SymPoly::monomial(mu.clone(), q_one()).expand_in_vars(m) {
            expanded.add_term(arrangement.0, &(c * &arrangement.1));
        }
    }
    if &expanded != f {
        return Err(validation("polynomial is not symmetric in its variables"));
    }
    Ok(out)
}

/// Expansion of a symmetric x-polynomial (in `m >= deg` variables) in the
/// Q-function basis.
pub fn q_basis_expand(f: &MPoly) -> Result<BTreeMap<Partition, Q>> {
    let sym = mpoly_to_sym(f)?;
    if (f.vars.len() as u32) < sym.degree() {
        return Err(validation("need at least deg(f) variables for a faithful expansion"));
    }
    q_basis_expand_sym(&sym)
}

/// Restriction of a MixedPoly to concrete variables `x1..xm` plus the y/z
/// variables it mentions.
pub fn mixed_to_mpoly(f: &MixedPoly, m: usize) -> MPoly {
    let mut ky = 0u32;
    let mut kz = 0u32;
    for (_, mono) in f.terms.keys() {
        for &((b, i), _) in mono {
            match b {
                VarB::Y => ky = ky.max(i),
                VarB::Z => kz = kz.max(i),
            }
        }
    }
    let vars = crate::mpoly::xyz_vars(m, ky as usize, kz as usize);
    let mut out = MPoly::zero(vars.clone());
    for ((mu, mono), c) in &f.terms {
        let xparts = SymPoly::monomial(mu.clone(), q_one()).expand_in_vars(m);
        for (xe, xc) in xparts {
            let mut e = vec![0u32; vars.len()];
            e[..m].copy_from_slice(&xe);
            for &((b, i), exp) in mono {
                let pos = match b {
                    VarB::Y => m + i as usize - 1,
                    VarB::Z => m + ky as usize + i as usize - 1,
                };
                e[pos] = exp;
            }
            out.add_term(e, &(c * &xc));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::xyz_vars;
    use crate::shapes::KIndex;

    #[test]
    fn q_family_examples() {
        assert_eq!(gen_q(0, 3), MPoly::one(xyz_vars(3, 0, 0)));
        assert_eq!(gen_q(-2, 3), MPoly::zero(xyz_vars(3, 0, 0)));
        // q_1(x1, x2) = 2x1 + 2x2.
        let vars = xyz_vars(2, 0, 0);
        let x1 = MPoly::var(vars.clone(), "x1").unwrap();
        let x2 = MPoly::var(vars.clone(), "x2").unwrap();
        assert_eq!(gen_q(1, 2), x1.add(&x2).scale(&q_int(2)));
        // q_1^2 = 2 q_2 for every variable count.
        for m in 0..=4usize {
            let q1 = gen_q(1, m);
            let q2 = gen_q(2, m);
            assert_eq!(q1.mul(&q1), q2.scale(&q_int(2)), "m = {m}");
        }
    }

    #[test]
    fn theta_series_examples() {
        // k = 0 reduces to q_r.
        for r in 0..=4i64 {
            assert_eq!(gen_theta_series(r, 3, 0), gen_q(r, 3));
        }
        // r=1, m=1, k=1: 2x1 + y1.
        let vars = xyz_vars(1, 1, 0);
        let x1 = MPoly::var(vars.clone(), "x1").unwrap();
        let y1 = MPoly::var(vars.clone(), "y1").unwrap();
        assert_eq!(gen_theta_series(1, 1, 1), x1.scale(&q_int(2)).add(&y1));
    }

    #[test]
    fn theta_series_is_q_e_convolution() {
        // vartheta_r = sum_i q_{r-i}(X) e_i(Y_(k)), checked stably.
        for k in 0..=3u32 {
            for r in 0..=6i64 {
                let lhs = theta_mixed(r, k);
                // Right side built independently from e_block and gen_q_sym.
                let yvars: Vec<u32> = (1..=k).collect();
                let mut rhs = MixedPoly::zero();
                for i in 0..=r.min(k as i64) {
                    rhs = rhs.add(&e_block(i as usize, VarB::Y, &yvars).mul_sym(&gen_q_sym(r - i)));
                }
                assert_eq!(lhs, rhs);
                // And concretely in 3 x-variables.
                let conc = mixed_to_mpoly(&lhs, 3);
                let mut direct = gen_theta_series(r, 3, k as usize);
                // Align variable lists (mixed_to_mpoly omits unused y's).
                if conc.vars != direct.vars {
                    let images: Vec<MPoly> = direct
                        .vars
                        .iter()
                        .map(|v| {
                            if conc.vars.contains(v) {
                                MPoly::var(conc.vars.clone(), v).unwrap()
                            } else {
                                MPoly::zero(conc.vars.clone())
                            }
                        })
                        .collect();
                    direct = direct.substitute(&images, conc.vars.clone());
                }
                assert_eq!(conc, direct, "r={r} k={k}");
            }
        }
    }

    #[test]
    fn eta_generator_examples() {
        let (eta, eta_p) = eta_generators(1, 1);
        let vars = xyz_vars(1, 1, 0);
        let x1 = MPoly::var(vars.clone(), "x1").unwrap();
        let y1 = MPoly::var(vars.clone(), "y1").unwrap();
        assert_eq!(eta_p, x1);
        assert_eq!(eta, x1.add(&y1));
        // eta'_k = (1/2) sum_{i<k} q_{k-i} e_i and eta + eta' = theta_k.
        for k in 1..=3usize {
            let m = 2;
            let (eta, eta_p) = eta_generators(k, m);
            assert_eq!(eta.add(&eta_p), gen_theta_series(k as i64, m, k));
            let vars = xyz_vars(m, k, 0);
            let mut rhs = MPoly::zero(vars.clone());
            for i in 0..k {
                // q_{k-i}(X) e_i(Y), both placed on the same variable list.
                let q = gen_q((k - i) as i64, m);
                let q = q.substitute(
                    &(0..m)
                        .map(|t| MPoly::var(vars.clone(), &format!("x{}", t + 1)).unwrap())
                        .collect::<Vec<_>>(),
                    vars.clone(),
                );
                let ei = {
                    let block: Vec<u32> = (1..=k as u32).collect();
                    mixed_to_mpoly(&e_block(i, VarB::Y, &block), 0)
                };
                let ei = ei.substitute(
                    &ei.vars
                        .iter()
                        .map(|v| MPoly::var(vars.clone(), v).unwrap())
                        .collect::<Vec<_>>(),
                    vars.clone(),
                );
                rhs = rhs.add(&q.mul(&ei));
            }
            assert_eq!(eta_p.scale(&q_int(2)), rhs, "k = {k}");
        }
    }

    #[test]
    fn supersym_h_examples() {
        assert_eq!(supersym_h(0, 2, 2), MPoly::one(xyz_vars(0, 2, 2)));
        let vars = xyz_vars(0, 2, 1);
        let h1 = supersym_h(1, 2, 1);
        let y1 = MPoly::var(vars.clone(), "y1").unwrap();
        let y2 = MPoly::var(vars.clone(), "y2").unwrap();
        let z1 = MPoly::var(vars.clone(), "z1").unwrap();
        assert_eq!(h1, y1.add(&y2).sub(&z1));
        // n = 0: complete homogeneous in Y.
        let h2 = supersym_h(2, 2, 0);
        let vars = xyz_vars(0, 2, 0);
        let y1 = MPoly::var(vars.clone(), "y1").unwrap();
        let y2 = MPoly::var(vars.clone(), "y2").unwrap();
        let want = y1.mul(&y1).add(&y1.mul(&y2)).add(&y2.mul(&y2));
        assert_eq!(h2, want);
    }

    #[test]
    fn schur_super_examples() {
        assert_eq!(schur_super(&vec![1], 2, 1), supersym_h(1, 2, 1));
        // s_lambda(0/Z) = (-1)^{|lambda|} s_{conjugate}(Z).
        for parts in [vec![2u32], vec![1, 1], vec![2, 1], vec![3, 1]] {
            let left = schur_super(&parts, 0, 3);
            let conj = crate::sym::conjugate(&parts);
            let right = schur_super(&conj, 3, 0);
            // Rename y -> z to compare.
            let vars = xyz_vars(0, 0, 3);
            let right = right.substitute(
                &(1..=3)
                    .map(|i| MPoly::var(vars.clone(), &format!("z{i}")).unwrap())
                    .collect::<Vec<_>>(),
                vars.clone(),
            );
            let w: u32 = parts.iter().sum();
            let sign = if w % 2 == 0 { q_one() } else { q_int(-1) };
            assert_eq!(left, right.scale(&sign), "lambda = {parts:?}");
        }
    }

    #[test]
    fn alternant_oracle_matches_jacobi_trudi() {
        assert_eq!(
            alternant_schur_oracle(&vec![], 2).unwrap(),
            MPoly::one(xyz_vars(0, 2, 0))
        );
        let s1 = alternant_schur_oracle(&vec![1], 2).unwrap();
        let vars = xyz_vars(0, 2, 0);
        let y1 = MPoly::var(vars.clone(), "y1").unwrap();
        let y2 = MPoly::var(vars.clone(), "y2").unwrap();
        assert_eq!(s1, y1.add(&y2));
        // Oracle equivalence sweep: |mu| <= 6, d <= 4.
        for d in 1..=4usize {
            for w in 0..=6u32 {
                for mu in crate::sym::partitions_bounded(w, 6, d as u32) {
                    let alt = alternant_schur_oracle(&mu, d).unwrap();
                    let jt = schur_super(&mu, d, 0);
                    assert_eq!(alt, jt, "mu = {mu:?}, d = {d}");
                }
            }
        }
    }

    #[test]
    fn specialization_examples() {
        // Constant 1 -> 1.
        let one = FormalPoly::one();
        let vars = xyz_vars(2, 0, 0);
        assert_eq!(
            specialize(&one, &|_| None, vars.clone()).unwrap(),
            MPoly::one(vars.clone())
        );
        // q_pfaffian((2,1)) with c_r -> q_r(x1..x3) equals Q_(2,1)(x1..x3).
        let sh = Shape::untyped(vec![2, 1], 0).unwrap();
        let pf = crate::formal::q_pfaffian(&sh).unwrap();
        let vars3 = xyz_vars(3, 0, 0);
        let conc = specialize(
            &pf,
            &|s| match s {
                Symbol::C(r) => Some(gen_q(r as i64, 3)),
                _ => None,
            },
            vars3.clone(),
        )
        .unwrap();
        let stable = mixed_to_mpoly(&MixedPoly::from_sym(&q_lambda_sym(&vec![2, 1])), 3);
        assert_eq!(conc, stable);
    }

    #[test]
    fn theta_lambda_two_routes_agree() {
        // Specializing the formal raising expansion concretely agrees with
        // the stable MixedPoly route, for the worked (3,1,1) example.
        let sh = Shape::untyped(vec![3, 1, 1], 1).unwrap();
        let formal = crate::formal::theta_formal(&sh).unwrap();
        let m = 5;
        let vars = xyz_vars(m, 1, 0);
        let conc = specialize(
            &formal,
            &|s| match s {
                Symbol::C(r) => Some(gen_theta_series(r as i64, m, 1)),
                _ => None,
            },
            vars.clone(),
        )
        .unwrap();
        let stable = mixed_to_mpoly(&theta_lambda_mixed(&sh).unwrap(), m);
        assert_eq!(conc, stable);
    }

    #[test]
    fn crels_hold_for_q_specialization() {
        // c_r^2 + 2 sum_{i=1}^r (-1)^i c_{r+i} c_{r-i} = 0 at k = 0, stably.
        for r in 1..=6i64 {
            let mut acc = gen_q_sym(r).mul(&gen_q_sym(r));
            for i in 1..=r {
                let prod = gen_q_sym(r + i).mul(&gen_q_sym(r - i));
                let signed = if i % 2 == 1 { prod.scale(&q_int(-2)) } else { prod.scale(&q_int(2)) };
                acc = acc.add(&signed);
            }
            assert!(acc.is_zero(), "r = {r}");
        }
        // And concretely in a few variables.
        for r in 1..=3i64 {
            let m = 6;
            let mut acc = gen_q(r, m).mul(&gen_q(r, m));
            for i in 1..=r {
                let prod = gen_q(r + i, m).mul(&gen_q(r - i, m));
                let signed = if i % 2 == 1 { prod.scale(&q_int(-2)) } else { prod.scale(&q_int(2)) };
                acc = acc.add(&signed);
            }
            assert!(acc.is_zero(), "r = {r}");
        }
    }

    #[test]
    fn q_basis_expansion() {
        // q_1 -> {(1): 1}.
        let f = mixed_to_mpoly(&MixedPoly::from_sym(&gen_q_sym(1)), 2);
        let exp = q_basis_expand(&f).unwrap();
        assert_eq!(exp.len(), 1);
        assert_eq!(exp[&vec![1u32]], q_one());
        // q_1^2 -> {(2): 2}.
        let f = mixed_to_mpoly(&MixedPoly::from_sym(&gen_q_sym(1).mul(&gen_q_sym(1))), 2);
        let exp = q_basis_expand(&f).unwrap();
        assert_eq!(exp.len(), 1);
        assert_eq!(exp[&vec![2u32]], q_int(2));
        // Roundtrip on all strict lambda with |lambda| <= 8.
        for w in 1..=8u32 {
            for parts in crate::sym::partitions_bounded(w, 8, 8) {
                if !parts.windows(2).all(|p| p[0] > p[1]) {
                    continue;
                }
                let exp = q_basis_expand_sym(&q_lambda_sym(&parts)).unwrap();
                assert_eq!(exp.len(), 1, "lambda = {parts:?}");
                assert_eq!(exp[&parts], q_one());
            }
        }
        // Something outside Gamma errors out.
        let e2 = crate::sym::gen_e_sym(2);
        assert!(q_basis_expand_sym(&e2).is_err());
    }

    #[test]
    fn p_equals_half_power_q() {
        for w in 1..=8u32 {
            for parts in crate::sym::partitions_bounded(w, 8, 8) {
                if !parts.windows(2).all(|p| p[0] > p[1]) {
                    continue;
                }
                let p = p_lambda_sym(&parts);
                let q = q_lambda_sym(&parts);
                assert_eq!(p.scale(&q_pow2(parts.len() as i32)), q);
            }
        }
    }

    #[test]
    fn eta_lambda_at_k0_is_p_function() {
        for parts in [vec![1u32], vec![2, 1], vec![3, 2], vec![3, 2, 1]] {
            let sh = Shape::new(parts.clone(), KIndex::Box, 0).unwrap();
            let h = eta_lambda_mixed(&sh).unwrap();
            assert_eq!(h, MixedPoly::from_sym(&p_lambda_sym(&parts)), "lambda = {parts:?}");
        }
    }

    #[test]
    fn families_are_symmetric_in_their_blocks() {
        let q3 = gen_q(3, 3);
        assert!(q3.symmetric_in_range(0, 3));
        let th = gen_theta_series(3, 2, 2);
        assert!(th.symmetric_in_range(0, 2));
        assert!(th.symmetric_in_range(2, 4));
        let h = supersym_h(3, 2, 2);
        assert!(h.symmetric_in_range(0, 2));
        assert!(h.symmetric_in_range(2, 4));
    }

    #[test]
    fn e_block_enumeration() {
        let e2 = e_block(2, VarB::Y, &[1, 2, 3]);
        assert_eq!(e2.terms.len(), 3);
        let e0 = e_block(0, VarB::Y, &[1, 2]);
        assert_eq!(e0, MixedPoly::one());
        assert!(e_block(3, VarB::Y, &[1]).is_zero());
    }
}
