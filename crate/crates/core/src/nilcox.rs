//! NilCoxeter algebras of the classical Weyl groups and the double Schubert
//! polynomials built from products of their generating factors.
//!
//! An algebra element is a finitely supported map from group elements to
//! coefficients; the product uses `u_v u_w = u_{vw}` when lengths add and 0
//! otherwise.  The x-alphabet factors `C(x_1)C(x_2)...` are processed one
//! variable at a time, absorbing each variable into the stable symmetric
//! part of the coefficients, so results live in `Gamma[Y,Z]` with no
//! truncation.

use std::collections::{BTreeMap, HashMap};

use crate::error::{internal, validation, Result};
use crate::mpoly::MPoly;
use crate::rational::{q_one, q_pow2, Q};
use crate::shapes::LieType;
use crate::sym::{MixedPoly, Partition, SymPoly, VarB, YzMono};
use crate::weyl::{Group, Letter, SignedPermutation};
use num_traits::Zero;

/// A nilCoxeter algebra element with [`MixedPoly`] coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct NCElement {
    pub group: Group,
    pub rank: usize,
    pub support: BTreeMap<SignedPermutation, MixedPoly>,
}

impl NCElement {
    pub fn one(group: Group, rank: usize) -> Self {
        let mut support = BTreeMap::new();
        support.insert(SignedPermutation::identity(group, rank), MixedPoly::one());
        NCElement { group, rank, support }
    }

    pub fn coefficient(&self, w: &SignedPermutation) -> MixedPoly {
        self.support.get(w).cloned().unwrap_or_else(MixedPoly::zero)
    }

    fn insert(&mut self, w: SignedPermutation, add: &MixedPoly) {
        if add.is_zero() {
            return;
        }
        let entry = self.support.entry(w).or_insert_with(MixedPoly::zero);
        *entry = entry.add(add);
        if entry.is_zero() {
            // Leave removal to cleanup passes; empty coefficients are rare.
        }
    }

    fn cleanup(&mut self) {
        self.support.retain(|_, c| !c.is_zero());
    }

    /// Right multiplication by `(1 + c * mono * u_a)`.
    pub fn mul_linear_factor(&self, a: Letter, mono: &YzMono, c: &Q, max_len: Option<usize>) -> NCElement {
        let mut out = self.clone();
        for (v, poly) in &self.support {
            if v.length() >= self.longest() {
                continue;
            }
            let vs = v.right_mul_simple(a);
            if vs.length() <= v.length() {
                continue;
            }
            if let Some(cap) = max_len {
                if vs.length() > cap {
                    continue;
                }
            }
            out.insert(vs, &poly.mul_mono(mono, c));
        }
        out.cleanup();
        out
    }

    fn longest(&self) -> usize {
        match self.group {
            Group::A => self.rank * (self.rank - 1) / 2,
            Group::BC => self.rank * self.rank,
            Group::D => self.rank * (self.rank - 1),
        }
    }

    /// General bilinear product using length additivity.
    pub fn multiply(&self, other: &NCElement) -> Result<NCElement> {
        if self.group != other.group || self.rank != other.rank {
            return Err(validation("algebra mismatch in nilCoxeter product"));
        }
        let mut out = NCElement { group: self.group, rank: self.rank, support: BTreeMap::new() };
        for (v, pv) in &self.support {
            for (w, pw) in &other.support {
                let prod = v.compose(w)?;
                if prod.length() == v.length() + w.length() {
                    out.insert(prod, &pv.mul(pw));
                }
            }
        }
        out.cleanup();
        Ok(out)
    }
}

/// Factor letters of one `C(t)` block at rank `n`:
/// `u_{n-1}, ..., u_1, u_0, u_0, u_1, ..., u_{n-1}`.
fn c_block_letters(n: usize) -> Vec<Letter> {
    let mut letters: Vec<Letter> = (1..n as u32).rev().map(Letter::Idx).collect();
    letters.push(Letter::Idx(0));
    letters.push(Letter::Idx(0));
    letters.extend((1..n as u32).map(Letter::Idx));
    letters
}

/// Factor letters of one `D(t)` block at rank `n`:
/// `u_{n-1}, ..., u_2, u_1, u_box, u_2, ..., u_{n-1}`.
fn d_block_letters(n: usize) -> Vec<Letter> {
    if n < 2 {
        return vec![];
    }
    let mut letters: Vec<Letter> = (2..n as u32).rev().map(Letter::Idx).collect();
    letters.push(Letter::Idx(1));
    letters.push(Letter::Box);
    letters.extend((2..n as u32).map(Letter::Idx));
    letters
}

/// Coefficients during a block: (partition, power of the fresh variable,
/// y/z monomial) -> rational.
type BlockPoly = BTreeMap<(Partition, u32, YzMono), Q>;

fn to_block(poly: &MixedPoly) -> BlockPoly {
    poly.terms
        .iter()
        .map(|((mu, mono), c)| ((mu.clone(), 0u32, mono.clone()), c.clone()))
        .collect()
}

/// Absorbs the block variable into the symmetric alphabet.
///
/// Solves `sum_nu c_nu m_nu(X + t) = f(X, t)` using
/// `m_nu(X + t) = m_nu(X) + sum_{p in distinct parts} m_{nu \ p}(X) t^p`,
/// and verifies every witness equation.  `prior_vars` is the number of
/// alphabet variables already absorbed: partitions longer than that vanish
/// at the current truncation and contribute no `t^0` witness.
fn absorb_block(f: &BlockPoly, prior_vars: usize) -> Result<MixedPoly> {
    let mut values: BTreeMap<(Partition, YzMono), Q> = BTreeMap::new();
    let mut witnesses: BTreeMap<(Partition, YzMono), usize> = BTreeMap::new();
    for ((mu, d, mono), c) in f {
        let mut nu = mu.clone();
        if *d > 0 {
            nu.push(*d);
            nu.sort_unstable_by(|a, b| b.cmp(a));
        }
        let key = (nu, mono.clone());
        match values.get(&key) {
            None => {
                values.insert(key.clone(), c.clone());
            }
            Some(existing) if existing == c => {}
            Some(existing) => {
                return Err(internal(format!(
                    "inconsistent absorb witnesses: {existing} vs {c}"
                )));
            }
        }
        *witnesses.entry(key).or_insert(0) += 1;
    }
    for ((nu, mono), count) in &witnesses {
        let mut distinct = nu.clone();
        distinct.dedup();
        let expected = distinct.len() + usize::from(nu.len() <= prior_vars);
        if *count != expected {
            return Err(internal(format!(
                "absorb witness count {count} != {expected} for {nu:?} {mono:?}"
            )));
        }
    }
    let mut out = MixedPoly::zero();
    for ((nu, mono), c) in values {
        out.add_term(nu, mono, &c);
    }
    Ok(out)
}

/// Multiplies the accumulator by one x-block (`C` or `D`), absorbing the
/// block variable afterwards.
fn apply_x_block(
    acc: &NCElement,
    letters: &[Letter],
    max_len: Option<usize>,
    prior_vars: usize,
) -> Result<NCElement> {
    let mut support: BTreeMap<SignedPermutation, BlockPoly> = acc
        .support
        .iter()
        .map(|(w, p)| (w.clone(), to_block(p)))
        .collect();
    for &a in letters {
        let snapshot: Vec<(SignedPermutation, BlockPoly)> =
            support.iter().map(|(w, p)| (w.clone(), p.clone())).collect();
        for (v, poly) in snapshot {
            let vs = v.right_mul_simple(a);
            if vs.length() <= v.length() {
                continue;
            }
            if let Some(cap) = max_len {
                if vs.length() > cap {
                    continue;
                }
            }
            let entry = support.entry(vs).or_default();
            for ((mu, d, mono), c) in &poly {
                let key = (mu.clone(), d + 1, mono.clone());
                let slot = entry.entry(key.clone()).or_insert_with(Q::zero);
                *slot += c;
                if slot.is_zero() {
                    entry.remove(&key);
                }
            }
        }
    }
    let mut out = NCElement { group: acc.group, rank: acc.rank, support: BTreeMap::new() };
    for (w, block) in support {
        let block: BlockPoly = block.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if block.is_empty() {
            continue;
        }
        out.support.insert(w, absorb_block(&block, prior_vars)?);
    }
    out.cleanup();
    Ok(out)
}

/// Which variable groups to include in a Schubert polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchubertVars {
    pub x_blocks: usize,
    pub with_y: bool,
    pub with_z: bool,
}

/// The double Schubert polynomial of `w`, as an element of `Gamma[Y,Z]`
/// (type C), `Gamma'[Y,Z]` (type D), `2^{-s(w)} Gamma[Y,Z]` (type B), or
/// `Z[Y,Z]` (type A).
///
/// `vars.x_blocks` is the number of `C(x_i)` (or `D(x_i)`) factors; it must
/// be at least `l(w)` so the symmetric part is exact.
pub fn double_schubert_stable(
    w: &SignedPermutation,
    lie_type: LieType,
    vars: SchubertVars,
) -> Result<MixedPoly> {
    let expected_group = match lie_type {
        LieType::A => Group::A,
        LieType::B | LieType::C => Group::BC,
        LieType::D => Group::D,
    };
    if w.group() != expected_group {
        return Err(validation(format!(
            "element {w} does not live in the Weyl group of type {lie_type:?}"
        )));
    }
    let use_x = lie_type != LieType::A;
    if use_x && vars.x_blocks < w.length() {
        return Err(validation(format!(
            "{} x-variables are too few for an element of length {}",
            vars.x_blocks,
            w.length()
        )));
    }
    let n = w.rank();
    let cap = Some(w.length());
    let mut acc = NCElement::one(w.group(), n);
    if vars.with_z {
        // A-tilde_{n-1}(z_{n-1}) ... A-tilde_1(z_1); each
        // A-tilde_i(t) = (1 - t u_i)(1 - t u_{i+1}) ... (1 - t u_{n-1}).
        for i in (1..n as u32).rev() {
            let mono = crate::sym::yz_var(VarB::Z, i);
            let minus_one = -q_one();
            for a in i..n as u32 {
                acc = acc.mul_linear_factor(Letter::Idx(a), &mono, &minus_one, cap);
            }
        }
    }
    if use_x {
        let letters = match lie_type {
            LieType::D => d_block_letters(n),
            _ => c_block_letters(n),
        };
        for j in 0..vars.x_blocks {
            acc = apply_x_block(&acc, &letters, cap, j)?;
        }
    }
    if vars.with_y {
        // A_1(y_1) ... A_{n-1}(y_{n-1}); each
        // A_i(t) = (1 + t u_{n-1})(1 + t u_{n-2}) ... (1 + t u_i).
        for i in 1..n as u32 {
            let mono = crate::sym::yz_var(VarB::Y, i);
            let one = q_one();
            for a in (i..n as u32).rev() {
                acc = acc.mul_linear_factor(Letter::Idx(a), &mono, &one, cap);
            }
        }
    }
    let mut result = acc.coefficient(w);
    if lie_type == LieType::B {
        result = result.scale(&q_pow2(-(w.sign_changes() as i32)));
    }
    Ok(result)
}

/// Convenience wrapper with default variable counts: `l(w)` x-variables and
/// all y/z variables present.
pub fn double_schubert_full(w: &SignedPermutation, lie_type: LieType) -> Result<MixedPoly> {
    double_schubert_stable(
        w,
        lie_type,
        SchubertVars { x_blocks: w.length(), with_y: true, with_z: true },
    )
}

/// Single (Billey-Haiman style) polynomial: z variables absent.
pub fn single_schubert_stable(w: &SignedPermutation, lie_type: LieType) -> Result<MixedPoly> {
    double_schubert_stable(
        w,
        lie_type,
        SchubertVars { x_blocks: w.length(), with_y: true, with_z: false },
    )
}

/// The concrete polynomial in `x_count` x-variables plus y/z variables,
/// refusing unfaithful truncations.
pub fn double_schubert(
    w: &SignedPermutation,
    lie_type: LieType,
    x_count: usize,
    with_y: bool,
    with_z: bool,
) -> Result<MPoly> {
    if lie_type != LieType::A && x_count < w.length() {
        return Err(validation(format!(
            "x_count {x_count} below l(w) = {}; result would not be faithful",
            w.length()
        )));
    }
    let stable = double_schubert_stable(
        w,
        lie_type,
        SchubertVars { x_blocks: x_count.max(w.length()), with_y, with_z },
    )?;
    let m = if lie_type == LieType::A { 0 } else { x_count };
    Ok(crate::polyring::mixed_to_mpoly(&stable, m))
}

/// Stanley symmetric function `F_w = <C(X), w>` (type C) or `<D(X), w>`
/// (type D).
pub fn stanley_function_stable(w: &SignedPermutation) -> Result<SymPoly> {
    let lie = match w.group() {
        Group::A => LieType::A,
        Group::BC => LieType::C,
        Group::D => LieType::D,
    };
    if w.group() == Group::A {
        return Err(validation("Stanley functions here take type B/C/D input"));
    }
    let mixed = double_schubert_stable(
        w,
        lie,
        SchubertVars { x_blocks: w.length(), with_y: false, with_z: false },
    )?;
    for (_, mono) in mixed.terms.keys() {
        if !mono.is_empty() {
            return Err(internal("Stanley function has stray y/z variables"));
        }
    }
    Ok(mixed.sym_part())
}

/// Concrete Stanley function in `m >= l(w)` variables.
pub fn stanley_function(w: &SignedPermutation, m: usize) -> Result<MPoly> {
    if m < w.length() {
        return Err(validation(format!(
            "m = {m} below l(w) = {}; result would not be faithful",
            w.length()
        )));
    }
    Ok(crate::polyring::mixed_to_mpoly(
        &MixedPoly::from_sym(&stanley_function_stable(w)?),
        m,
    ))
}

/// `C(t)` as an explicit element with coefficients in the single y-variable
/// `y_i` (used by the commutation tests).
pub fn c_of_variable(group: Group, n: usize, var: (VarB, u32)) -> NCElement {
    let letters = match group {
        Group::D => d_block_letters(n),
        _ => c_block_letters(n),
    };
    let mono = vec![(var, 1)];
    let mut acc = NCElement::one(group, n);
    for a in letters {
        acc = acc.mul_linear_factor(a, &mono, &q_one(), None);
    }
    acc
}

/// Memoized Stanley functions, used heavily by the verification suites.
static STANLEY_CACHE: once_cell::sync::Lazy<
    std::sync::Mutex<HashMap<SignedPermutation, SymPoly>>,
> = once_cell::sync::Lazy::new(|| std::sync::Mutex::new(HashMap::new()));

pub fn stanley_function_cached(w: &SignedPermutation) -> Result<SymPoly> {
    let key = w.to_rank(w.essential_rank().max(1))?;
    if let Some(hit) = STANLEY_CACHE.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let value = stanley_function_stable(&key)?;
    STANLEY_CACHE.lock().unwrap().insert(key, value.clone());
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_int;
    use crate::sym::gen_q_sym;
    use crate::weyl::all_elements;

    fn bc(values: &[i64]) -> SignedPermutation {
        SignedPermutation::new(Group::BC, values.to_vec()).unwrap()
    }

    fn a_perm(values: &[i64]) -> SignedPermutation {
        SignedPermutation::new(Group::A, values.to_vec()).unwrap()
    }

    #[test]
    fn nilcoxeter_relations() {
        // u_1 * u_1 = 0.
        let n = 3;
        let mut u1 = NCElement { group: Group::BC, rank: n, support: BTreeMap::new() };
        let s1 = SignedPermutation::identity(Group::BC, n).right_mul_simple(Letter::Idx(1));
        u1.support.insert(s1, MixedPoly::one());
        assert!(u1.multiply(&u1).unwrap().support.is_empty());
        // u_0 u_1 u_0 u_1 = u_1 u_0 u_1 u_0.
        let word = |ls: &[u32]| -> SignedPermutation {
            let mut w = SignedPermutation::identity(Group::BC, n);
            for &l in ls {
                w = w.right_mul_simple(Letter::Idx(l));
            }
            w
        };
        assert_eq!(word(&[0, 1, 0, 1]), word(&[1, 0, 1, 0]));
        // Type D: u_box u_2 u_box = u_2 u_box u_2 and u_box u_1 = u_1 u_box.
        let dword = |ls: &[Letter]| -> SignedPermutation {
            let mut w = SignedPermutation::identity(Group::D, 3);
            for &l in ls {
                w = w.right_mul_simple(l);
            }
            w
        };
        let b = Letter::Box;
        let i1 = Letter::Idx(1);
        let i2 = Letter::Idx(2);
        assert_eq!(dword(&[b, i2, b]), dword(&[i2, b, i2]));
        assert_eq!(dword(&[b, i1]), dword(&[i1, b]));
    }

    #[test]
    fn squared_zero_factor() {
        // (1 + t u_0)(1 + t u_0) = 1 + 2 t u_0.
        let n = 1;
        let acc = NCElement::one(Group::BC, n);
        let mono = crate::sym::yz_var(VarB::Y, 1);
        let once = acc.mul_linear_factor(Letter::Idx(0), &mono, &q_one(), None);
        let twice = once.mul_linear_factor(Letter::Idx(0), &mono, &q_one(), None);
        let s0 = SignedPermutation::new(Group::BC, vec![-1]).unwrap();
        assert_eq!(
            twice.coefficient(&s0),
            MixedPoly::term(vec![], mono.clone(), q_int(2))
        );
    }

    #[test]
    fn identity_coefficient_is_one() {
        let id = SignedPermutation::identity(Group::BC, 3);
        assert_eq!(double_schubert_full(&id, LieType::C).unwrap(), MixedPoly::one());
    }

    #[test]
    fn c_s0_is_q1() {
        let s0 = bc(&[-1, 2, 3]);
        let got = double_schubert_full(&s0, LieType::C).unwrap();
        assert_eq!(got, MixedPoly::from_sym(&gen_q_sym(1)));
    }

    #[test]
    fn f_s1_is_q1() {
        let s1 = bc(&[2, 1, 3]);
        let f = stanley_function_stable(&s1).unwrap();
        assert_eq!(f, gen_q_sym(1));
    }

    #[test]
    fn type_a_double_schubert_321() {
        let w = a_perm(&[3, 2, 1]);
        let got = double_schubert_full(&w, LieType::A).unwrap();
        // (y1 - z1)(y1 - z2)(y2 - z1).
        let y = |i: u32| MixedPoly::var(VarB::Y, i);
        let z = |i: u32| MixedPoly::var(VarB::Z, i);
        let want = y(1)
            .sub(&z(1))
            .mul(&y(1).sub(&z(2)))
            .mul(&y(2).sub(&z(1)));
        assert_eq!(got, want);
    }

    #[test]
    fn type_a_longest_element_product_formula() {
        for n in 2..=5usize {
            let w0 = SignedPermutation::longest_element(Group::A, n);
            let got = double_schubert_full(&w0, LieType::A).unwrap();
            let mut want = MixedPoly::one();
            for i in 1..=n as u32 {
                for j in 1..=n as u32 {
                    if i + j <= n as u32 {
                        want = want.mul(&MixedPoly::var(VarB::Y, i).sub(&MixedPoly::var(VarB::Z, j)));
                    }
                }
            }
            assert_eq!(got, want, "n = {n}");
        }
    }

    #[test]
    fn against_concrete_two_variable_product() {
        // <C(z_101) C(z_102), w> computed with plain linear factors agrees
        // with the absorbed stable Stanley function restricted to two
        // variables, for every w in W_2.
        let n = 2;
        let c1 = c_of_variable(Group::BC, n, (VarB::Z, 101));
        let c2 = c_of_variable(Group::BC, n, (VarB::Z, 102));
        let prod = c1.multiply(&c2).unwrap();
        for w in all_elements(Group::BC, n) {
            let stable = stanley_function_stable(&w).unwrap();
            let expanded = stable.expand_in_vars(2);
            let direct = prod.coefficient(&w);
            let mut want = MixedPoly::zero();
            for (e, c) in expanded {
                let mono: YzMono = [(101u32, e[0]), (102u32, e[1])]
                    .into_iter()
                    .filter(|&(_, p)| p > 0)
                    .map(|(i, p)| ((VarB::Z, i), p))
                    .collect();
                want.add_term(vec![], mono, &c);
            }
            assert_eq!(direct, want, "w = {w}");
        }
        // Rank 3 sample: three concrete variables against the stable
        // representation, for every element of W_3.
        let e1 = c_of_variable(Group::BC, 3, (VarB::Z, 101));
        let e2 = c_of_variable(Group::BC, 3, (VarB::Z, 102));
        let e3 = c_of_variable(Group::BC, 3, (VarB::Z, 103));
        let prod3 = e1.multiply(&e2).unwrap().multiply(&e3).unwrap();
        for w in all_elements(Group::BC, 3) {
            let stable = stanley_function_cached(&w).unwrap();
            let expanded = stable.expand_in_vars(3);
            let direct = prod3.coefficient(&w);
            let mut want = MixedPoly::zero();
            for (e, c) in expanded {
                let mono: YzMono = [(101u32, e[0]), (102u32, e[1]), (103u32, e[2])]
                    .into_iter()
                    .filter(|&(_, p)| p > 0)
                    .map(|(i, p)| ((VarB::Z, i), p))
                    .collect();
                want.add_term(vec![], mono, &c);
            }
            assert_eq!(direct, want, "w = {w}");
        }
        // Same check in type D on W~_2.
        let d1 = c_of_variable(Group::D, 2, (VarB::Z, 101));
        let d2 = c_of_variable(Group::D, 2, (VarB::Z, 102));
        let prod = d1.multiply(&d2).unwrap();
        for w in all_elements(Group::D, 2) {
            let stable = stanley_function_stable(&w).unwrap();
            let expanded = stable.expand_in_vars(2);
            let direct = prod.coefficient(&w);
            let mut want = MixedPoly::zero();
            for (e, c) in expanded {
                let mono: YzMono = [(101u32, e[0]), (102u32, e[1])]
                    .into_iter()
                    .filter(|&(_, p)| p > 0)
                    .map(|(i, p)| ((VarB::Z, i), p))
                    .collect();
                want.add_term(vec![], mono, &c);
            }
            assert_eq!(direct, want, "w = {w}");
        }
    }

    #[test]
    fn c_factors_commute() {
        for n in 2..=4usize {
            let a = c_of_variable(Group::BC, n, (VarB::Y, 90));
            let b = c_of_variable(Group::BC, n, (VarB::Y, 91));
            assert_eq!(a.multiply(&b).unwrap(), b.multiply(&a).unwrap(), "n = {n}");
        }
        // Type D factors commute as well.
        for n in 2..=3usize {
            let a = c_of_variable(Group::D, n, (VarB::Y, 90));
            let b = c_of_variable(Group::D, n, (VarB::Y, 91));
            assert_eq!(a.multiply(&b).unwrap(), b.multiply(&a).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn stability_under_rank_embedding() {
        for w in all_elements(Group::BC, 2) {
            let small = double_schubert_full(&w, LieType::C).unwrap();
            let big = double_schubert_full(&w.to_rank(3).unwrap(), LieType::C).unwrap();
            assert_eq!(small, big, "w = {w}");
        }
        for w in all_elements(Group::D, 2) {
            let small = double_schubert_full(&w, LieType::D).unwrap();
            let big = double_schubert_full(&w.to_rank(3).unwrap(), LieType::D).unwrap();
            assert_eq!(small, big, "w = {w}");
        }
    }

    #[test]
    fn factorization_identity_small() {
        // C_w(X;Y,Z) = sum over reduced uv = w with u in S_infty of
        // A_{u^{-1}}(-Z) C_v(X;Y), for all w in W_2.
        use crate::weyl::{left_factor_pairs, SlotPredicate};
        for w in all_elements(Group::BC, 2) {
            let lhs = double_schubert_full(&w, LieType::C).unwrap();
            let mut rhs = MixedPoly::zero();
            for (u, v) in left_factor_pairs(&w) {
                if !SlotPredicate::symmetric().matches(&u) {
                    continue;
                }
                let ua = u.inverse().retype(Group::A).unwrap();
                let au = single_schubert_stable(&ua, LieType::A).unwrap();
                // Y -> -Z.
                let au_negz = au.map_yz(|(b, i)| {
                    assert_eq!(b, VarB::Y);
                    ((VarB::Z, i), -1)
                });
                let cv = single_schubert_stable(&v, LieType::C).unwrap();
                rhs = rhs.add(&au_negz.mul(&cv));
            }
            assert_eq!(lhs, rhs, "w = {w}");
        }
    }

    #[test]
    fn type_b_scaling() {
        let w = bc(&[-2, 1, 3]);
        let c = double_schubert_full(&w, LieType::C).unwrap();
        let b = double_schubert_full(&w, LieType::B).unwrap();
        assert_eq!(b.scale(&q_pow2(w.sign_changes() as i32)), c);
    }

    #[test]
    fn xtoy_small_cases() {
        // Theorem: C_{w_lambda}(X;Y) with y_{>k} = 0 equals
        // Theta_lambda(X;Y_(k)), here for all shapes in W_3.
        use crate::polyring::{eta_lambda_mixed, theta_lambda_mixed};
        use crate::shapes::*;
        let n = 3u32;
        for k in 0..n {
            for shape in all_k_strict_in_rectangle(k, n) {
                let w = shape_to_grassmannian(&shape, LieType::C, n).unwrap();
                let lhs = single_schubert_stable(&w, LieType::C)
                    .unwrap()
                    .set_y_zero_above(k);
                let rhs = theta_lambda_mixed(&shape).unwrap();
                assert_eq!(lhs, rhs, "lambda = {:?}, k = {k}", shape.parts);
            }
        }
        let mut ks = vec![KIndex::Box];
        for k in 1..n {
            ks.push(KIndex::K(k));
        }
        for k in ks {
            for shape in all_typed_k_strict_in_rectangle(k, n) {
                let w = shape_to_grassmannian(&shape, LieType::D, n).unwrap();
                let lhs = single_schubert_stable(&w, LieType::D)
                    .unwrap()
                    .set_y_zero_above(k.as_int());
                let rhs = eta_lambda_mixed(&shape).unwrap();
                assert_eq!(lhs, rhs, "lambda = {:?}, k = {k:?}, t = {}", shape.parts, shape.type_tag);
            }
        }
    }

    #[test]
    fn rank_one_edge_cases() {
        // W_1 = {1, s_0}: C(t) = (1 + t u_0)^2.
        let id = SignedPermutation::identity(Group::BC, 1);
        assert_eq!(double_schubert_full(&id, LieType::C).unwrap(), MixedPoly::one());
        let s0 = SignedPermutation::new(Group::BC, vec![-1]).unwrap();
        assert_eq!(
            double_schubert_full(&s0, LieType::C).unwrap(),
            MixedPoly::from_sym(&gen_q_sym(1))
        );
        // W~_1 is trivial.
        let idd = SignedPermutation::identity(Group::D, 1);
        assert_eq!(double_schubert_full(&idd, LieType::D).unwrap(), MixedPoly::one());
        // Type B at rank 1 halves the single sign change.
        let b = double_schubert_full(&s0, LieType::B).unwrap();
        assert_eq!(b.scale(&q_int(2)), MixedPoly::from_sym(&gen_q_sym(1)));
    }

    #[test]
    fn refuses_unfaithful_truncation() {
        let w = bc(&[-1, 2]);
        assert!(double_schubert(&w, LieType::C, 0, true, true).is_err());
        let p = double_schubert(&w, LieType::C, 1, true, false).unwrap();
        assert_eq!(p.to_string(), "2*x1");
    }
}
