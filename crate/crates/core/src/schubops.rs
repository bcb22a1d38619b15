//! Divided difference operators on `Gamma[Y,Z]`, the involution exchanging
//! the y and z alphabets, geometrization maps into the Borel presentation,
//! and equality modulo the presentation ideal by fixed-point substitution.

use std::collections::BTreeMap;

use crate::error::{internal, validation, Result};
use crate::mpoly::MPoly;
use crate::rational::{q_int, q_one, q_ratio};
use crate::shapes::LieType;
use crate::sym::{MixedPoly, SymPoly, VarB, YzMono};
use crate::weyl::Letter;

/// Axis on which a divided difference acts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Y,
    Z,
}

fn mono_get(mono: &YzMono, v: (VarB, u32)) -> u32 {
    mono.iter().find(|&&(mv, _)| mv == v).map(|&(_, e)| e).unwrap_or(0)
}

fn mono_set(mono: &YzMono, v: (VarB, u32), e: u32) -> YzMono {
    let mut map: BTreeMap<(VarB, u32), u32> = mono.iter().copied().collect();
    if e == 0 {
        map.remove(&v);
    } else {
        map.insert(v, e);
    }
    map.into_iter().collect()
}

/// The simple reflection `s_i` (i >= 1) acting on the y variables.
pub fn s_i_y(f: &MixedPoly, i: u32) -> MixedPoly {
    f.map_yz(|(b, j)| {
        if b == VarB::Y && j == i {
            ((VarB::Y, i + 1), 1)
        } else if b == VarB::Y && j == i + 1 {
            ((VarB::Y, i), 1)
        } else {
            ((b, j), 1)
        }
    })
}

/// `s_0` acting on `Gamma[Y,Z]`: sends `y_1` to `-y_1` and prepends `y_1`
/// to the symmetric alphabet, per `s_0(q_r(X)) = q_r(y_1, x_1, ...)`.
pub fn s_0_y(f: &MixedPoly) -> MixedPoly {
    let mut out = MixedPoly::zero();
    for ((mu, mono), c) in &f.terms {
        let a = mono_get(mono, (VarB::Y, 1));
        let sign = if a % 2 == 1 { q_int(-1) } else { q_one() };
        let split = SymPoly::monomial(mu.clone(), q_one()).split_variable();
        for (d, g) in split {
            for (nu, gc) in &g.terms {
                let new_mono = mono_set(mono, (VarB::Y, 1), a + d);
                out.add_term(nu.clone(), new_mono, &(c * gc * &sign));
            }
        }
    }
    out
}

/// `s_box` acting on `Gamma'[Y,Z]`: maps `(y_1, y_2)` to `(-y_2, -y_1)` and
/// prepends both variables to the symmetric alphabet.
pub fn s_box_y(f: &MixedPoly) -> MixedPoly {
    let mut out = MixedPoly::zero();
    for ((mu, mono), c) in &f.terms {
        let a = mono_get(mono, (VarB::Y, 1));
        let b = mono_get(mono, (VarB::Y, 2));
        let sign = if (a + b) % 2 == 1 { q_int(-1) } else { q_one() };
        // Swap existing exponents.
        let swapped = mono_set(&mono_set(mono, (VarB::Y, 1), b), (VarB::Y, 2), a);
        // Split off two alphabet variables.
        for (d2, g2) in SymPoly::monomial(mu.clone(), q_one()).split_variable() {
            for (nu2, c2) in &g2.terms {
                for (d1, g1) in SymPoly::monomial(nu2.clone(), q_one()).split_variable() {
                    for (nu1, c1) in &g1.terms {
                        let m1 = mono_get(&swapped, (VarB::Y, 1)) + d1;
                        let m2 = mono_get(&swapped, (VarB::Y, 2)) + d2;
                        let new_mono =
                            mono_set(&mono_set(&swapped, (VarB::Y, 1), m1), (VarB::Y, 2), m2);
                        out.add_term(nu1.clone(), new_mono, &(c * c2 * c1 * &sign));
                    }
                }
            }
        }
    }
    out
}

/// The ring involution `omega`: `y_j -> -z_j`, `z_j -> -y_j`, fixing the
/// symmetric part.
pub fn omega_involution(f: &MixedPoly) -> MixedPoly {
    f.map_yz(|(b, j)| match b {
        VarB::Y => ((VarB::Z, j), -1),
        VarB::Z => ((VarB::Y, j), -1),
    })
}

/// Divided difference on the y axis for `i >= 1`:
/// `(f - s_i f)/(y_i - y_{i+1})`, computed termwise.
fn divided_difference_simple_y(f: &MixedPoly, i: u32) -> MixedPoly {
    let vi = (VarB::Y, i);
    let vj = (VarB::Y, i + 1);
    let mut out = MixedPoly::zero();
    for ((mu, mono), c) in &f.terms {
        let a = mono_get(mono, vi);
        let b = mono_get(mono, vj);
        if a == b {
            continue;
        }
        let (lo, hi, coeff) = if a > b { (b, a, c.clone()) } else { (a, b, -c.clone()) };
        for t in lo..hi {
            let m = mono_set(&mono_set(mono, vi, t), vj, hi + lo - 1 - t);
            out.add_term(mu.clone(), m, &coeff);
        }
    }
    out
}

/// `partial_0^y f = (f - s_0 f)/(-2 y_1)`.
fn divided_difference_zero_y(f: &MixedPoly) -> Result<MixedPoly> {
    let numer = f.sub(&s_0_y(f));
    let mut out = MixedPoly::zero();
    for ((mu, mono), c) in &numer.terms {
        let a = mono_get(mono, (VarB::Y, 1));
        if a == 0 {
            return Err(internal("numerator of partial_0 not divisible by y_1"));
        }
        let m = mono_set(mono, (VarB::Y, 1), a - 1);
        out.add_term(mu.clone(), m, &(c * q_ratio(-1, 2)));
    }
    Ok(out)
}

/// `partial_box^y f = (f - s_box f)/(-(y_1 + y_2))`.
fn divided_difference_box_y(f: &MixedPoly) -> Result<MixedPoly> {
    let numer = f.sub(&s_box_y(f));
    // Exact division by (y_1 + y_2), viewing the numerator as a polynomial
    // in y_1 with MixedPoly coefficients.
    let mut slices: BTreeMap<u32, MixedPoly> = BTreeMap::new();
    for ((mu, mono), c) in &numer.terms {
        let a = mono_get(mono, (VarB::Y, 1));
        let rest = mono_set(mono, (VarB::Y, 1), 0);
        slices.entry(a).or_insert_with(MixedPoly::zero).add_term(mu.clone(), rest, c);
    }
    let top = slices.keys().next_back().copied().unwrap_or(0);
    if top == 0 {
        if !numer.is_zero() {
            return Err(internal("numerator of partial_box not divisible by y_1 + y_2"));
        }
        return Ok(MixedPoly::zero());
    }
    let y2 = MixedPoly::var(VarB::Y, 2);
    let mut q: Vec<MixedPoly> = vec![MixedPoly::zero(); top as usize];
    let get = |slices: &BTreeMap<u32, MixedPoly>, j: u32| -> MixedPoly {
        slices.get(&j).cloned().unwrap_or_else(MixedPoly::zero)
    };
    // f_j = q_{j-1} + y_2 q_j, so q_{j-1} = f_j - y_2 q_j downwards.
    let mut next = MixedPoly::zero();
    for j in (1..=top).rev() {
        let fj = get(&slices, j);
        let qj = fj.sub(&y2.mul(&next));
        q[(j - 1) as usize] = qj.clone();
        next = qj;
    }
    if get(&slices, 0) != y2.mul(&q[0]) {
        return Err(internal("non-exact division by y_1 + y_2"));
    }
    // Reassemble the quotient and negate.
    let mut out = MixedPoly::zero();
    for (j, slice) in q.iter().enumerate() {
        for ((mu, mono), c) in &slice.terms {
            let m = mono_set(mono, (VarB::Y, 1), j as u32);
            out.add_term(mu.clone(), m, &-c.clone());
        }
    }
    Ok(out)
}

/// Divided difference operator on `Gamma[Y,Z]` (or its type A / type D
/// analogues).
pub fn divided_difference(f: &MixedPoly, axis: Axis, i: Letter) -> Result<MixedPoly> {
    match axis {
        Axis::Y => match i {
            Letter::Idx(0) => divided_difference_zero_y(f),
            Letter::Box => divided_difference_box_y(f),
            Letter::Idx(i) => Ok(divided_difference_simple_y(f, i)),
        },
        Axis::Z => {
            let inner = omega_involution(f);
            let d = divided_difference(&inner, Axis::Y, i)?;
            Ok(omega_involution(&d))
        }
    }
}

/// Geometrized variable lists: `X1..Xn, Y1..Yn`.
pub fn borel_vars(n: usize) -> Vec<String> {
    let mut vars = Vec::new();
    for i in 1..=n {
        vars.push(format!("X{i}"));
    }
    for i in 1..=n {
        vars.push(format!("Y{i}"));
    }
    vars
}

/// `xi_r = sum_i e_i(X_n) h_{r-i}(Y_n)`: the image of `q_r` under the
/// geometrization maps of types C and D.
pub fn xi_poly(r: i64, n: usize) -> MPoly {
    let vars = borel_vars(n);
    if r < 0 {
        return MPoly::zero(vars);
    }
    let degree = r as usize;
    // Elementary series prod (1 + X_i t) and complete series prod 1/(1-Y_i t).
    let mut acc = vec![MPoly::one(vars.clone())];
    acc.resize(degree + 1, MPoly::zero(vars.clone()));
    for i in 1..=n {
        let x = MPoly::var(vars.clone(), &format!("X{i}")).unwrap();
        let mut next = acc.clone();
        for d in 0..degree {
            if !acc[d].is_zero() {
                next[d + 1] = next[d + 1].add(&acc[d].mul(&x));
            }
        }
        acc = next;
    }
    for i in 1..=n {
        let y = MPoly::var(vars.clone(), &format!("Y{i}")).unwrap();
        let mut next = vec![MPoly::zero(vars.clone()); degree + 1];
        for d in 0..=degree {
            if acc[d].is_zero() {
                continue;
            }
            let mut pw = MPoly::one(vars.clone());
            for e in 0..=degree - d {
                next[d + e] = next[d + e].add(&acc[d].mul(&pw));
                pw = pw.mul(&y);
            }
        }
        acc = next;
    }
    acc[degree].clone()
}

/// Geometrization: maps an element of `Gamma[Y,Z]` (type C), `Gamma'[Y,Z]`
/// (type D), or `Z[Y,Z]` (type A) into the Borel presentation variables.
pub fn geometrize(f: &MixedPoly, lie_type: LieType, n: usize) -> Result<MPoly> {
    let vars = borel_vars(n);
    let zero = MPoly::zero(vars.clone());
    let xvar = |i: u32| -> MPoly {
        if i as usize <= n {
            MPoly::var(vars.clone(), &format!("X{i}")).unwrap()
        } else {
            zero.clone()
        }
    };
    let yvar = |i: u32| -> MPoly {
        if i as usize <= n {
            MPoly::var(vars.clone(), &format!("Y{i}")).unwrap()
        } else {
            zero.clone()
        }
    };
    let mono_image = |mono: &YzMono, type_a: bool| -> MPoly {
        let mut img = MPoly::one(vars.clone());
        for &((b, i), e) in mono {
            let base = match (b, type_a) {
                (VarB::Y, true) => xvar(i),
                (VarB::Z, true) => yvar(i),
                (VarB::Y, false) => xvar(i).neg(),
                (VarB::Z, false) => yvar(i),
            };
            img = img.mul(&base.pow(e));
        }
        img
    };
    match lie_type {
        LieType::A => {
            if !f.is_x_free() {
                return Err(validation("type A geometrization needs an x-free polynomial"));
            }
            let mut out = MPoly::zero(vars.clone());
            for ((_, mono), c) in &f.terms {
                out = out.add(&mono_image(mono, true).scale(c));
            }
            Ok(out)
        }
        LieType::C | LieType::D => {
            // Group terms by the y/z monomial and expand each symmetric part
            // in the Q-function basis.
            let mut by_mono: BTreeMap<YzMono, SymPoly> = BTreeMap::new();
            for ((mu, mono), c) in &f.terms {
                by_mono
                    .entry(mono.clone())
                    .or_insert_with(SymPoly::zero)
                    .add_term(mu.clone(), c);
            }
            let mut out = MPoly::zero(vars.clone());
            for (mono, sym) in by_mono {
                let expansion = crate::polyring::q_basis_expand_sym(&sym)?;
                for (lambda, coeff) in expansion {
                    // Q_lambda as a polynomial in the q_r, with q_r -> xi_r.
                    let sh = crate::shapes::Shape::untyped(lambda.clone(), 0)
                        .map_err(|_| internal("Q expansion produced a non-strict shape"))?;
                    let formal = crate::formal::q_pfaffian(&sh)?;
                    let img = crate::polyring::specialize(
                        &formal,
                        &|s| match s {
                            crate::formal::Symbol::C(r) => Some(xi_poly(r as i64, n)),
                            _ => None,
                        },
                        vars.clone(),
                    )?;
                    out = out.add(&img.scale(&coeff).mul(&mono_image(&mono, false)));
                }
            }
            Ok(out)
        }
        LieType::B => Err(validation("type B geometrization is handled through type C")),
    }
}

/// Signed permutation substitutions for [`ideal_equal`].
fn substitutions(lie_type: LieType, n: usize, exhaustive: bool, seed: u64) -> Vec<(Vec<usize>, Vec<i32>)> {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }
    let mut subs = Vec::new();
    if exhaustive {
        for p in perms(n) {
            let sign_patterns: u32 = 1 << n;
            for mask in 0..sign_patterns {
                let signs: Vec<i32> =
                    (0..n).map(|i| if mask & (1 << i) != 0 { -1 } else { 1 }).collect();
                let neg = signs.iter().filter(|&&s| s < 0).count();
                let ok = match lie_type {
                    LieType::A => neg == 0,
                    LieType::B | LieType::C => true,
                    LieType::D => neg % 2 == 0,
                };
                if ok {
                    subs.push((p.clone(), signs));
                }
            }
        }
    } else {
        // Deterministic linear congruential sampling.
        let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize
        };
        for _ in 0..64 {
            let mut p: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                let j = next() % (i + 1);
                p.swap(i, j);
            }
            let mut signs: Vec<i32> = (0..n).map(|_| if next() % 2 == 0 { 1 } else { -1 }).collect();
            match lie_type {
                LieType::A => signs.iter_mut().for_each(|s| *s = 1),
                LieType::D => {
                    let neg = signs.iter().filter(|&&s| s < 0).count();
                    if neg % 2 == 1 {
                        signs[0] = -signs[0];
                    }
                }
                _ => {}
            }
            subs.push((p, signs));
        }
    }
    subs
}

/// Equality modulo the radical of the presentation ideal, decided by
/// substituting `Y_i := eps_i X_{sigma(i)}` over the appropriate group
/// (exhaustively for `n <= 3`, otherwise 64 seeded samples; the seed comes
/// from `SCHUBERT_SEED` when set).
pub fn ideal_equal(f: &MPoly, g: &MPoly, lie_type: LieType, n: usize) -> Result<bool> {
    let vars = borel_vars(n);
    if f.vars != vars || g.vars != vars {
        return Err(validation("ideal_equal expects polynomials in the Borel variables"));
    }
    let diff = f.sub(g);
    if diff.is_zero() {
        return Ok(true);
    }
    let exhaustive = n <= 3 || (lie_type == LieType::A && n <= 5);
    let seed = std::env::var("SCHUBERT_SEED")
        .ok()
        .and_then(|s| s.parse::<u64>().ok())
        .unwrap_or(0x5eed);
    for (perm, signs) in substitutions(lie_type, n, exhaustive, seed) {
        // Build images: X_i -> X_i, Y_i -> signs[i-1] * X_{perm[i-1]+1}.
        let mut images = Vec::with_capacity(2 * n);
        for i in 1..=n {
            images.push(MPoly::var(vars.clone(), &format!("X{i}")).unwrap());
        }
        for i in 1..=n {
            let target = MPoly::var(vars.clone(), &format!("X{}", perm[i - 1] + 1)).unwrap();
            images.push(if signs[i - 1] < 0 { target.neg() } else { target });
        }
        let image = diff.substitute(&images, vars.clone());
        if !image.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The presentation ideal generators, for membership spot checks.
pub fn ideal_generators(lie_type: LieType, n: usize) -> Vec<MPoly> {
    let vars = borel_vars(n);
    let e_of = |squares: bool, block_x: bool, i: usize| -> MPoly {
        // e_i of (X_1.., or Y_1..), optionally of the squares.
        let mut acc = vec![MPoly::one(vars.clone())];
        acc.resize(i + 1, MPoly::zero(vars.clone()));
        for t in 1..=n {
            let name = if block_x { format!("X{t}") } else { format!("Y{t}") };
            let v = MPoly::var(vars.clone(), &name).unwrap();
            let v = if squares { v.mul(&v) } else { v };
            let mut next = acc.clone();
            for d in (0..i).rev() {
                if !acc[d].is_zero() {
                    next[d + 1] = next[d + 1].add(&acc[d].mul(&v));
                }
            }
            acc = next;
        }
        acc[i].clone()
    };
    let mut gens = Vec::new();
    match lie_type {
        LieType::A => {
            for i in 1..=n {
                gens.push(e_of(false, true, i).sub(&e_of(false, false, i)));
            }
        }
        LieType::B | LieType::C => {
            for i in 1..=n {
                gens.push(e_of(true, true, i).sub(&e_of(true, false, i)));
            }
        }
        LieType::D => {
            for i in 1..n {
                gens.push(e_of(true, true, i).sub(&e_of(true, false, i)));
            }
            let mut px = MPoly::one(vars.clone());
            let mut py = MPoly::one(vars.clone());
            for t in 1..=n {
                px = px.mul(&MPoly::var(vars.clone(), &format!("X{t}")).unwrap());
                py = py.mul(&MPoly::var(vars.clone(), &format!("Y{t}")).unwrap());
            }
            gens.push(px.sub(&py));
        }
    }
    gens
}

/// Checks that the x-part of `f` lies in `Gamma` (is a Z-combination of
/// Schur Q-functions) slice by slice.
pub fn assert_in_gamma(f: &MixedPoly) -> Result<()> {
    let mut by_mono: BTreeMap<YzMono, SymPoly> = BTreeMap::new();
    for ((mu, mono), c) in &f.terms {
        by_mono.entry(mono.clone()).or_insert_with(SymPoly::zero).add_term(mu.clone(), c);
    }
    for sym in by_mono.values() {
        crate::polyring::q_basis_expand_sym(sym)?;
    }
    Ok(())
}
