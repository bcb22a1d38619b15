//! Symmetric functions in a stable (infinite) alphabet, and mixed
//! polynomials whose coefficients are symmetric functions.
//!
//! Elements of the ring of symmetric functions are stored on the basis of
//! monomial symmetric functions `m_mu`, indexed by partitions.  This
//! representation is stable: no truncation to a finite variable count is
//! performed, so identities verified here hold at every truncation.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use once_cell::sync::Lazy;

use crate::rational::{q_int, q_one, Q};
use num_traits::Zero;

/// A partition: weakly decreasing positive parts.
pub type Partition = Vec<u32>;

/// Sorts parts decreasingly and drops zeros.
pub fn normalize_partition(mut parts: Vec<u32>) -> Partition {
    parts.retain(|&p| p > 0);
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

pub fn partition_weight(p: &Partition) -> u32 {
    p.iter().sum()
}

/// Conjugate (transpose) partition.
pub fn conjugate(p: &Partition) -> Partition {
    if p.is_empty() {
        return vec![];
    }
    (1..=p[0]).map(|c| p.iter().filter(|&&x| x >= c).count() as u32).collect()
}

/// All partitions of `n` with parts at most `max_part` and at most
/// `max_len` parts.
pub fn partitions_bounded(n: u32, max_part: u32, max_len: u32) -> Vec<Partition> {
    fn rec(n: u32, max_part: u32, max_len: u32, acc: &mut Partition, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        if max_len == 0 {
            return;
        }
        let top = max_part.min(n);
        for p in (1..=top).rev() {
            acc.push(p);
            rec(n - p, p, max_len - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `n`.
pub fn partitions(n: u32) -> Vec<Partition> {
    partitions_bounded(n, n.max(1), n.max(1))
}

/// A symmetric function with rational coefficients, on the monomial basis.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymPoly {
    pub terms: BTreeMap<Partition, Q>,
}

impl SymPoly {
    pub fn zero() -> Self {
        SymPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        SymPoly::monomial(vec![], q_one())
    }

    pub fn monomial(mu: Partition, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(normalize_partition(mu), c);
        }
        SymPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mu: Partition, c: &Q) {
        if c.is_zero() {
            return;
        }
        let key = normalize_partition(mu);
        let entry = self.terms.entry(key.clone()).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn cleanup(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            *out.terms.entry(mu.clone()).or_insert_with(Q::zero) += c;
        }
        out.cleanup();
        out
    }

    pub fn sub(&self, other: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            *out.terms.entry(mu.clone()).or_insert_with(Q::zero) -= c;
        }
        out.cleanup();
        out
    }

    pub fn scale(&self, c: &Q) -> SymPoly {
        if c.is_zero() {
            return SymPoly::zero();
        }
        SymPoly { terms: self.terms.iter().map(|(mu, a)| (mu.clone(), a * c)).collect() }
    }

    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        let mut out = SymPoly::zero();
        for (mu, a) in &self.terms {
            for (nu, b) in &other.terms {
                let ab = a * b;
                for (rho, n) in mono_mul(mu, nu) {
                    *out.terms.entry(rho).or_insert_with(Q::zero) += &ab * q_int(n as i64);
                }
            }
        }
        out.cleanup();
        out
    }

    /// Maximal total degree among terms.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(partition_weight).max().unwrap_or(0)
    }

    /// Splits off one alphabet variable `t`:
    /// `f(X + t) = sum_d g_d(X) t^d`, returned as pairs `(d, g_d)`.
    ///
    /// Uses `m_mu(X + t) = m_mu(X) + sum_{d in distinct parts} m_{mu \ d}(X) t^d`.
    pub fn split_variable(&self) -> BTreeMap<u32, SymPoly> {
        let mut out: BTreeMap<u32, SymPoly> = BTreeMap::new();
        for (mu, c) in &self.terms {
            out.entry(0).or_insert_with(SymPoly::zero).add_term(mu.clone(), c);
            let mut seen = Vec::new();
            for (i, &d) in mu.iter().enumerate() {
                if seen.contains(&d) {
                    continue;
                }
                seen.push(d);
                let mut rest = mu.clone();
                rest.remove(i);
                out.entry(d).or_insert_with(SymPoly::zero).add_term(rest, c);
            }
        }
        out.retain(|_, g| !g.is_zero());
        out
    }

    /// Restricts to `m` concrete variables, as exponent-vector terms.
    pub fn expand_in_vars(&self, m: usize) -> BTreeMap<Vec<u32>, Q> {
        let mut out: BTreeMap<Vec<u32>, Q> = BTreeMap::new();
        for (mu, c) in &self.terms {
            if mu.len() > m {
                continue;
            }
            for arrangement in arrangements(mu, m) {
                *out.entry(arrangement).or_insert_with(Q::zero) += c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Evaluates at a concrete rational alphabet.
    pub fn eval(&self, alphabet: &[Q]) -> Q {
        let mut total = Q::zero();
        for (mu, c) in &self.terms {
            total += c * eval_monomial_sym(mu, alphabet);
        }
        total
    }
}

fn eval_monomial_sym(mu: &Partition, alphabet: &[Q]) -> Q {
    // Sum over distinct arrangements of mu into the alphabet slots.
    fn rec(mu: &Partition, i: usize, used: &mut Vec<bool>, alphabet: &[Q]) -> Q {
        if i == mu.len() {
            return q_one();
        }
        let mut total = Q::zero();
        for s in 0..alphabet.len() {
            if used[s] {
                continue;
            }
            used[s] = true;
            let sub = rec(mu, i + 1, used, alphabet);
            used[s] = false;
            let mut pw = q_one();
            for _ in 0..mu[i] {
                pw *= &alphabet[s];
            }
            total += pw * sub;
        }
        total
    }
    // Equal parts would be overcounted by ordered placement; divide by
    // multiplicities factorial.
    let raw = rec(mu, 0, &mut vec![false; alphabet.len()], alphabet);
    let mut denom = 1i64;
    let mut run = 1i64;
    for i in 1..mu.len() {
        if mu[i] == mu[i - 1] {
            run += 1;
            denom *= run;
        } else {
            run = 1;
        }
    }
    raw / q_int(denom)
}

/// Distinct arrangements of the parts of `mu` (padded with zeros) into `m`
/// ordered slots.
fn arrangements(mu: &Partition, m: usize) -> Vec<Vec<u32>> {
    fn rec(values: &[(u32, usize)], slot: usize, m: usize, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slot == m {
            if values.iter().all(|&(_, cnt)| cnt == 0) {
                out.push(acc.clone());
            }
            return;
        }
        let remaining: usize = values.iter().map(|&(_, c)| c).sum();
        if remaining > m - slot {
            return;
        }
        // zero in this slot
        acc.push(0);
        rec(values, slot + 1, m, acc, out);
        acc.pop();
        let mut vals = values.to_vec();
        for i in 0..vals.len() {
            if vals[i].1 == 0 {
                continue;
            }
            vals[i].1 -= 1;
            acc.push(vals[i].0);
            rec(&vals, slot + 1, m, acc, out);
            acc.pop();
            vals[i].1 += 1;
        }
    }
    let mut values: Vec<(u32, usize)> = Vec::new();
    for &p in mu {
        if let Some(v) = values.iter_mut().find(|v| v.0 == p) {
            v.1 += 1;
        } else {
            values.push((p, 1));
        }
    }
    let mut out = Vec::new();
    rec(&values, 0, m, &mut Vec::new(), &mut out);
    out
}

type MonoProduct = Vec<(Partition, u64)>;

static MONO_MUL_CACHE: Lazy<Mutex<HashMap<(Partition, Partition), MonoProduct>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Product of two monomial symmetric functions:
/// `m_mu * m_nu = sum_rho N^rho_{mu,nu} m_rho`.
pub fn mono_mul(mu: &Partition, nu: &Partition) -> MonoProduct {
    if mu.is_empty() {
        return vec![(nu.clone(), 1)];
    }
    if nu.is_empty() {
        return vec![(mu.clone(), 1)];
    }
    let key = (mu.clone(), nu.clone());
    if let Some(hit) = MONO_MUL_CACHE.lock().unwrap().get(&key) {
        return hit.clone();
    }
    // Candidate target partitions: merge each part of mu either alone or
    // onto one part of nu.
    let mut candidates: Vec<Partition> = Vec::new();
    fn gen(mu: &[u32], i: usize, rem_nu: &mut Vec<u32>, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == mu.len() {
            let mut rho = acc.clone();
            rho.extend(rem_nu.iter().copied());
            let rho = normalize_partition(rho);
            if !out.contains(&rho) {
                out.push(rho);
            }
            return;
        }
        // mu_i in its own slot
        acc.push(mu[i]);
        gen(mu, i + 1, rem_nu, acc, out);
        acc.pop();
        // mu_i added onto a remaining distinct nu part
        let mut tried: Vec<u32> = Vec::new();
        for j in 0..rem_nu.len() {
            let v = rem_nu[j];
            if tried.contains(&v) {
                continue;
            }
            tried.push(v);
            rem_nu.remove(j);
            acc.push(mu[i] + v);
            gen(mu, i + 1, rem_nu, acc, out);
            acc.pop();
            rem_nu.insert(j, v);
        }
    }
    gen(mu, 0, &mut nu.clone(), &mut Vec::new(), &mut candidates);

    let mut result = Vec::new();
    for rho in candidates {
        let n = count_splittings(&rho, mu, nu);
        if n > 0 {
            result.push((rho, n));
        }
    }
    result.sort();
    MONO_MUL_CACHE.lock().unwrap().insert(key, result.clone());
    result
}

/// Number of vector pairs `(alpha, beta)` over the slots of `rho` with
/// `alpha + beta = rho`, the nonzero entries of `alpha` forming the multiset
/// `mu` and those of `beta` forming `nu`.
fn count_splittings(rho: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    fn rec(rho: &[u32], slot: usize, rem_mu: &mut Vec<u32>, rem_nu: &mut Vec<u32>) -> u64 {
        if slot == rho.len() {
            return if rem_mu.is_empty() && rem_nu.is_empty() { 1 } else { 0 };
        }
        let target = rho[slot];
        let mut total = 0;
        // alpha part: 0 or a distinct value from rem_mu
        let mut alpha_opts: Vec<Option<u32>> = vec![None];
        let mut seen = Vec::new();
        for &v in rem_mu.iter() {
            if v <= target && !seen.contains(&v) {
                seen.push(v);
                alpha_opts.push(Some(v));
            }
        }
        for a in alpha_opts {
            let b = target - a.unwrap_or(0);
            let ok_b = if b == 0 { true } else { rem_nu.contains(&b) };
            if !ok_b {
                continue;
            }
            if let Some(av) = a {
                let pos = rem_mu.iter().position(|&x| x == av).unwrap();
                rem_mu.remove(pos);
            }
            if b > 0 {
                let pos = rem_nu.iter().position(|&x| x == b).unwrap();
                rem_nu.remove(pos);
            }
            total += rec(rho, slot + 1, rem_mu, rem_nu);
            if let Some(av) = a {
                rem_mu.push(av);
                rem_mu.sort_unstable_by(|x, y| y.cmp(x));
            }
            if b > 0 {
                rem_nu.push(b);
                rem_nu.sort_unstable_by(|x, y| y.cmp(x));
            }
        }
        total
    }
    rec(rho, 0, &mut mu.clone(), &mut nu.clone())
}

/// `q_r(X)`: coefficient of `t^r` in `prod (1+x_i t)/(1-x_i t)`.
/// On the monomial basis, `q_r = sum_{mu |- r} 2^{l(mu)} m_mu`.
pub fn gen_q_sym(r: i64) -> SymPoly {
    if r < 0 {
        return SymPoly::zero();
    }
    if r == 0 {
        return SymPoly::one();
    }
    let mut out = SymPoly::zero();
    for mu in partitions(r as u32) {
        let c = q_int(1i64 << mu.len());
        out.add_term(mu, &c);
    }
    out
}

/// Elementary symmetric function `e_r = m_{1^r}`.
pub fn gen_e_sym(r: i64) -> SymPoly {
    if r < 0 {
        return SymPoly::zero();
    }
    SymPoly::monomial(vec![1; r as usize], q_one())
}

/// Complete homogeneous symmetric function `h_r = sum_{mu |- r} m_mu`.
pub fn gen_h_sym(r: i64) -> SymPoly {
    if r < 0 {
        return SymPoly::zero();
    }
    if r == 0 {
        return SymPoly::one();
    }
    let mut out = SymPoly::zero();
    for mu in partitions(r as u32) {
        out.add_term(mu, &q_one());
    }
    out
}

/// Power sum `p_r = m_{(r)}`.
pub fn gen_p_sym(r: u32) -> SymPoly {
    SymPoly::monomial(vec![r], q_one())
}

// ---------------------------------------------------------------------------
// Mixed polynomials: symmetric in X, polynomial in y/z variables.
// ---------------------------------------------------------------------------

/// Variable blocks for the polynomial part of a [`MixedPoly`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarB {
    Y,
    Z,
}

/// A monomial in y/z variables: sorted list of ((block, index), exponent).
pub type YzMono = Vec<((VarB, u32), u32)>;

pub fn yz_one() -> YzMono {
    vec![]
}

pub fn yz_var(b: VarB, i: u32) -> YzMono {
    vec![((b, i), 1)]
}

pub fn yz_mul(a: &YzMono, b: &YzMono) -> YzMono {
    let mut map: BTreeMap<(VarB, u32), u32> = a.iter().copied().collect();
    for &(v, e) in b {
        *map.entry(v).or_insert(0) += e;
    }
    map.into_iter().filter(|&(_, e)| e > 0).collect()
}

/// An element of `Lambda ⊗ Q[y_1, y_2, ..., z_1, z_2, ...]`: a polynomial in
/// y/z whose coefficients are stable symmetric functions in X.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MixedPoly {
    pub terms: BTreeMap<(Partition, YzMono), Q>,
}

impl MixedPoly {
    pub fn zero() -> Self {
        MixedPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        MixedPoly::term(vec![], yz_one(), q_one())
    }

    pub fn term(mu: Partition, mono: YzMono, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((normalize_partition(mu), mono), c);
        }
        MixedPoly { terms }
    }

    pub fn from_sym(s: &SymPoly) -> Self {
        let mut out = MixedPoly::zero();
        for (mu, c) in &s.terms {
            out.terms.insert((mu.clone(), yz_one()), c.clone());
        }
        out
    }

    pub fn var(b: VarB, i: u32) -> Self {
        MixedPoly::term(vec![], yz_var(b, i), q_one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mu: Partition, mono: YzMono, c: &Q) {
        if c.is_zero() {
            return;
        }
        let key = (normalize_partition(mu), mono);
        let entry = self.terms.entry(key.clone()).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &MixedPoly) -> MixedPoly {
        let mut out = self.clone();
        for ((mu, mono), c) in &other.terms {
            out.add_term(mu.clone(), mono.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &MixedPoly) -> MixedPoly {
        let mut out = self.clone();
        for ((mu, mono), c) in &other.terms {
            let neg = -c.clone();
            out.add_term(mu.clone(), mono.clone(), &neg);
        }
        out
    }

    pub fn scale(&self, c: &Q) -> MixedPoly {
        if c.is_zero() {
            return MixedPoly::zero();
        }
        MixedPoly { terms: self.terms.iter().map(|(k, a)| (k.clone(), a * c)).collect() }
    }

    pub fn mul(&self, other: &MixedPoly) -> MixedPoly {
        let mut out = MixedPoly::zero();
        for ((mu, am), a) in &self.terms {
            for ((nu, bm), b) in &other.terms {
                let ab = a * b;
                let mono = yz_mul(am, bm);
                for (rho, n) in mono_mul(mu, nu) {
                    out.add_term(rho, mono.clone(), &(&ab * q_int(n as i64)));
                }
            }
        }
        out
    }

    pub fn mul_sym(&self, s: &SymPoly) -> MixedPoly {
        self.mul(&MixedPoly::from_sym(s))
    }

    pub fn mul_mono(&self, mono: &YzMono, c: &Q) -> MixedPoly {
        let mut out = MixedPoly::zero();
        for ((mu, am), a) in &self.terms {
            out.add_term(mu.clone(), yz_mul(am, mono), &(a * c));
        }
        out
    }

    /// The purely symmetric part (coefficient of the empty y/z monomial).
    pub fn sym_part(&self) -> SymPoly {
        let mut out = SymPoly::zero();
        for ((mu, mono), c) in &self.terms {
            if mono.is_empty() {
                out.add_term(mu.clone(), c);
            }
        }
        out
    }

    /// True if no term involves the symmetric (X) part.
    pub fn is_x_free(&self) -> bool {
        self.terms.keys().all(|(mu, _)| mu.is_empty())
    }

    /// Substitutes `y_j = 0` for all `j > k`.
    pub fn set_y_zero_above(&self, k: u32) -> MixedPoly {
        let mut out = MixedPoly::zero();
        for ((mu, mono), c) in &self.terms {
            if mono.iter().any(|&((b, i), _)| b == VarB::Y && i > k) {
                continue;
            }
            out.add_term(mu.clone(), mono.clone(), c);
        }
        out
    }

    /// Substitutes `z_j = 0` for all `j > k`.
    pub fn set_z_zero_above(&self, k: u32) -> MixedPoly {
        let mut out = MixedPoly::zero();
        for ((mu, mono), c) in &self.terms {
            if mono.iter().any(|&((b, i), _)| b == VarB::Z && i > k) {
                continue;
            }
            out.add_term(mu.clone(), mono.clone(), c);
        }
        out
    }

    /// Total degree (x-weight plus y/z degree) maximum.
    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|(mu, mono)| partition_weight(mu) + mono.iter().map(|&(_, e)| e).sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    /// Applies a map on y/z variables given by `f((block, index)) ->
    /// (new variable, sign)`, leaving the symmetric part untouched.
    pub fn map_yz(&self, f: impl Fn((VarB, u32)) -> ((VarB, u32), i32)) -> MixedPoly {
        let mut out = MixedPoly::zero();
        for ((mu, mono), c) in &self.terms {
            let mut map: BTreeMap<(VarB, u32), u32> = BTreeMap::new();
            let mut sign = 1i32;
            for &(v, e) in mono {
                let (nv, s) = f(v);
                if s < 0 && e % 2 == 1 {
                    sign = -sign;
                }
                *map.entry(nv).or_insert(0) += e;
            }
            let mono2: YzMono = map.into_iter().collect();
            let c2 = if sign < 0 { -c.clone() } else { c.clone() };
            out.add_term(mu.clone(), mono2, &c2);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_ratio;

    #[test]
    fn partition_utilities() {
        assert_eq!(conjugate(&vec![3, 1, 1]), vec![3, 1, 1]);
        assert_eq!(conjugate(&vec![4, 2]), vec![2, 2, 1, 1]);
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions_bounded(5, 3, 2), vec![vec![3, 2]]);
    }

    #[test]
    fn mono_products_against_expansion() {
        // Verify m_mu * m_nu by brute expansion in enough variables.
        let cases = vec![
            (vec![1], vec![1]),
            (vec![2], vec![1, 1]),
            (vec![2, 1], vec![1]),
            (vec![2, 2], vec![2, 1]),
            (vec![1, 1], vec![1, 1]),
            (vec![3, 1], vec![2, 2]),
        ];
        for (mu, nu) in cases {
            let nvars = mu.len() + nu.len();
            let a = SymPoly::monomial(mu.clone(), q_one());
            let b = SymPoly::monomial(nu.clone(), q_one());
            let prod = a.mul(&b);
            let lhs = prod.expand_in_vars(nvars);
            // brute force
            let ea = a.expand_in_vars(nvars);
            let eb = b.expand_in_vars(nvars);
            let mut rhs: BTreeMap<Vec<u32>, Q> = BTreeMap::new();
            for (xa, ca) in &ea {
                for (xb, cb) in &eb {
                    let sum: Vec<u32> = xa.iter().zip(xb).map(|(p, q)| p + q).collect();
                    *rhs.entry(sum).or_insert_with(Q::zero) += ca * cb;
                }
            }
            rhs.retain(|_, c| !c.is_zero());
            assert_eq!(lhs, rhs, "mu={mu:?} nu={nu:?}");
        }
    }

    #[test]
    fn q_relation_q1_squared_is_2_q2() {
        let q1 = gen_q_sym(1);
        let q2 = gen_q_sym(2);
        assert_eq!(q1.mul(&q1), q2.scale(&q_int(2)));
    }

    #[test]
    fn split_variable_roundtrip() {
        // q_3(X + t) coefficient check: q_3(X,t) = q3 + 2t q2 + 2t^2 q1 + 2t^3.
        let q3 = gen_q_sym(3);
        let split = q3.split_variable();
        assert_eq!(split[&0], gen_q_sym(3));
        assert_eq!(split[&1], gen_q_sym(2).scale(&q_int(2)));
        assert_eq!(split[&2], gen_q_sym(1).scale(&q_int(2)));
        assert_eq!(split[&3], SymPoly::one().scale(&q_int(2)));
    }

    #[test]
    fn eval_simple() {
        // e_2(1, 2, 3) = 11, h_2(1,2) = 1+4+2 = 7.
        let e2 = gen_e_sym(2);
        assert_eq!(e2.eval(&[q_int(1), q_int(2), q_int(3)]), q_int(11));
        let h2 = gen_h_sym(2);
        assert_eq!(h2.eval(&[q_int(1), q_int(2)]), q_int(7));
        let half = q_ratio(1, 2);
        let p2 = gen_p_sym(2);
        assert_eq!(p2.eval(&[half.clone()]), q_ratio(1, 4));
    }
}
