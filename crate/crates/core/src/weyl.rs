//! Signed permutation Weyl groups of types A, B/C, and D.
//!
//! Elements are stored in one-line notation, a sequence of nonzero integers
//! whose absolute values permute 1..n; a negative entry carries a bar.  The
//! group `W_n` (types B and C) is generated by `s_0, s_1, ..., s_{n-1}`, its
//! subgroup `S_n` (type A) by the `s_i` with `i >= 1`, and the type D group
//! by `s_box = s_0 s_1 s_0` together with the `s_i`, `i >= 1`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Mutex;

use once_cell::sync::Lazy;
use serde_json::{json, Value};

use crate::error::{validation, Result};

/// The ambient group family of a signed permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    /// Symmetric group (all entries positive).
    A,
    /// Hyperoctahedral group, Weyl group of B_n and C_n.
    BC,
    /// Even-signed subgroup, Weyl group of D_n.
    D,
}

impl Group {
    pub fn letter(self) -> &'static str {
        match self {
            Group::A => "A",
            Group::BC => "C",
            Group::D => "D",
        }
    }
}

/// Index of a simple reflection: `s_box` (type D only), or `s_i` for `i >= 0`
/// (with `s_0` only in types B/C).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    Box,
    Idx(u32),
}

impl Letter {
    /// Total order with `box < 1 < 2 < ...` and `0 < 1 < 2 < ...`; `box` and
    /// `0` never occur in the same group.
    fn order_key(self) -> i64 {
        match self {
            Letter::Box => 0,
            Letter::Idx(i) => i as i64,
        }
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Box => write!(f, "B"),
            Letter::Idx(i) => write!(f, "{i}"),
        }
    }
}

/// A reduced word: sequence of simple reflection indices whose product has
/// length equal to the word length.
pub type ReducedWord = Vec<Letter>;

/// A signed permutation in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    group: Group,
    values: Vec<i64>,
}

impl SignedPermutation {
    /// Builds and validates an element from one-line notation.
    pub fn new(group: Group, values: Vec<i64>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 {
                return Err(validation("zero entry in one-line notation"));
            }
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n {
                return Err(validation(format!("entry {v} out of range for rank {n}")));
            }
            if seen[a - 1] {
                return Err(validation(format!("duplicate absolute value {a}")));
            }
            seen[a - 1] = true;
        }
        let negatives = values.iter().filter(|&&v| v < 0).count();
        match group {
            Group::A if negatives > 0 => {
                return Err(validation("type A elements must have all entries positive"))
            }
            Group::D if negatives % 2 == 1 => {
                return Err(validation("type D elements need an even number of barred entries"))
            }
            _ => {}
        }
        Ok(SignedPermutation { group, values })
    }

    pub fn identity(group: Group, n: usize) -> Self {
        SignedPermutation { group, values: (1..=n as i64).collect() }
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Entry at 1-based position, using the stability convention that
    /// positions beyond the rank are fixed points.
    pub fn value_at(&self, i: usize) -> i64 {
        if i == 0 {
            panic!("positions are 1-based");
        }
        if i <= self.values.len() {
            self.values[i - 1]
        } else {
            i as i64
        }
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v == i as i64 + 1)
    }

    /// Re-embeds into rank `n` by adjoining fixed points (or dropping
    /// trailing fixed points when possible).
    pub fn to_rank(&self, n: usize) -> Result<Self> {
        let mut values = self.values.clone();
        while values.len() > n {
            if *values.last().unwrap() == values.len() as i64 {
                values.pop();
            } else {
                return Err(validation(format!(
                    "cannot shrink {self} to rank {n}: position {} is not a fixed point",
                    values.len()
                )));
            }
        }
        while values.len() < n {
            values.push(values.len() as i64 + 1);
        }
        SignedPermutation::new(self.group, values)
    }

    /// Smallest rank containing all non-fixed positions.
    pub fn essential_rank(&self) -> usize {
        let mut n = self.values.len();
        while n > 0 && self.values[n - 1] == n as i64 {
            n -= 1;
        }
        n
    }

    /// Reinterprets the element in another group family (validating the
    /// membership constraints).
    pub fn retype(&self, group: Group) -> Result<Self> {
        SignedPermutation::new(group, self.values.clone())
    }

    /// Number of barred entries, written `s(w)`.
    pub fn sign_changes(&self) -> usize {
        self.values.iter().filter(|&&v| v < 0).count()
    }

    /// Coxeter length.
    ///
    /// Closed form: inversions of the integer sequence, plus `sum |w_i|` over
    /// barred entries (types B/C) or `sum (|w_i| - 1)` (type D).
    pub fn length(&self) -> usize {
        let v = &self.values;
        let mut inv = 0usize;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    inv += 1;
                }
            }
        }
        let neg: i64 = v.iter().filter(|&&x| x < 0).map(|&x| -x).sum();
        match self.group {
            Group::A => inv,
            Group::BC => inv + neg as usize,
            Group::D => inv + (neg as usize - self.sign_changes()),
        }
    }

    /// Simple reflections available in this group for this rank.
    pub fn simple_letters(&self) -> Vec<Letter> {
        let n = self.rank() as u32;
        let mut out = Vec::new();
        match self.group {
            Group::A => {}
            Group::BC => out.push(Letter::Idx(0)),
            Group::D => out.push(Letter::Box),
        }
        for i in 1..n {
            out.push(Letter::Idx(i));
        }
        out
    }

    /// Right action of the simple reflection `s_r`.
    pub fn right_mul_simple(&self, r: Letter) -> SignedPermutation {
        let mut v = self.values.clone();
        match r {
            Letter::Box => {
                assert!(self.group == Group::D && v.len() >= 2);
                let (a, b) = (v[0], v[1]);
                v[0] = -b;
                v[1] = -a;
            }
            Letter::Idx(0) => {
                assert!(self.group == Group::BC && !v.is_empty());
                v[0] = -v[0];
            }
            Letter::Idx(i) => {
                let i = i as usize;
                assert!(i < v.len(), "s_{i} out of rank {}", v.len());
                v.swap(i - 1, i);
            }
        }
        SignedPermutation { group: self.group, values: v }
    }

    /// Left action of the simple reflection `s_a` (acts on values).
    pub fn left_mul_simple(&self, r: Letter) -> SignedPermutation {
        let map = |x: i64| -> i64 {
            match r {
                Letter::Box => match x {
                    1 => -2,
                    2 => -1,
                    -1 => 2,
                    -2 => 1,
                    _ => x,
                },
                Letter::Idx(0) => match x {
                    1 => -1,
                    -1 => 1,
                    _ => x,
                },
                Letter::Idx(i) => {
                    let i = i as i64;
                    if x == i {
                        i + 1
                    } else if x == i + 1 {
                        i
                    } else if x == -i {
                        -(i + 1)
                    } else if x == -(i + 1) {
                        -i
                    } else {
                        x
                    }
                }
            }
        };
        let v = self.values.iter().map(|&x| map(x)).collect();
        SignedPermutation { group: self.group, values: v }
    }

    /// Group product `self * other`, acting as `(uv)(i) = u(v(i))`.
    pub fn compose(&self, other: &SignedPermutation) -> Result<SignedPermutation> {
        if self.group != other.group {
            return Err(validation("group mismatch in product"));
        }
        let n = self.rank().max(other.rank());
        let u = self.to_rank(n)?;
        let v = other.to_rank(n)?;
        let values = (1..=n)
            .map(|i| {
                let x = v.values[i - 1];
                let ux = u.values[x.unsigned_abs() as usize - 1];
                if x < 0 {
                    -ux
                } else {
                    ux
                }
            })
            .collect();
        SignedPermutation::new(self.group, values)
    }

    pub fn inverse(&self) -> SignedPermutation {
        let n = self.rank();
        let mut values = vec![0i64; n];
        for (i, &v) in self.values.iter().enumerate() {
            let a = v.unsigned_abs() as usize;
            values[a - 1] = if v < 0 { -(i as i64 + 1) } else { i as i64 + 1 };
        }
        SignedPermutation { group: self.group, values }
    }

    /// Does `s_r` shorten on the right, i.e. `l(w s_r) < l(w)`?
    ///
    /// For `r >= 1` this is `w_r > w_{r+1}`; for `r = 0` it is `w_1 < 0`;
    /// for `box` it is `w_1 + w_2 < 0`.
    pub fn has_descent(&self, r: Letter) -> bool {
        match r {
            Letter::Box => self.value_at(1) + self.value_at(2) < 0,
            Letter::Idx(0) => self.value_at(1) < 0,
            Letter::Idx(i) => self.value_at(i as usize) > self.value_at(i as usize + 1),
        }
    }

    /// All right descent positions.
    pub fn descents(&self) -> Vec<Letter> {
        self.simple_letters().into_iter().filter(|&r| self.has_descent(r)).collect()
    }

    /// Canonical reduced word: repeatedly remove the smallest available
    /// descent.
    pub fn reduced_word(&self) -> ReducedWord {
        let mut w = self.clone();
        let mut rev = Vec::new();
        while !w.is_identity() {
            let r = *w
                .descents()
                .first()
                .expect("non-identity element must have a descent");
            w = w.right_mul_simple(r);
            rev.push(r);
        }
        rev.reverse();
        rev
    }

    /// Product of simple reflections given by a word.
    pub fn from_word(group: Group, n: usize, word: &[Letter]) -> SignedPermutation {
        let mut w = SignedPermutation::identity(group, n);
        for &a in word {
            w = w.right_mul_simple(a);
        }
        w
    }

    /// Right action of the reflection `t_{ij}` (swap positions, `i < j`).
    pub fn reflect_t(&self, i: usize, j: usize) -> Result<SignedPermutation> {
        if i >= j {
            return Err(validation("t_{ij} requires i < j"));
        }
        let n = self.rank().max(j);
        let mut w = self.to_rank(n)?;
        w.values.swap(i - 1, j - 1);
        Ok(w)
    }

    /// Right action of `tbar_{ij}` (`i <= j`): swap positions and bar both;
    /// `tbar_{ii}` bars position `i`.
    pub fn reflect_tbar(&self, i: usize, j: usize) -> Result<SignedPermutation> {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        let n = self.rank().max(j);
        let w = self.to_rank(n)?;
        let mut values = w.values;
        if i == j {
            values[i - 1] = -values[i - 1];
        } else {
            let (a, b) = (values[i - 1], values[j - 1]);
            values[i - 1] = -b;
            values[j - 1] = -a;
        }
        SignedPermutation::new(self.group, values)
    }

    /// One-line text form, e.g. `3,-1,-2`.
    pub fn one_line(&self) -> String {
        self.values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    }

    /// Parses the comma-separated one-line form.
    pub fn parse(group: Group, text: &str) -> Result<SignedPermutation> {
        let values: Result<Vec<i64>> = text
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<i64>()
                    .map_err(|_| validation(format!("bad entry '{s}' in one-line notation")))
            })
            .collect();
        SignedPermutation::new(group, values?)
    }

    pub fn to_json(&self) -> Value {
        json!({ "type": self.group.letter(), "values": self.values })
    }

    pub fn from_json(v: &Value) -> Result<SignedPermutation> {
        let ty = v["type"].as_str().ok_or_else(|| validation("missing type"))?;
        let group = match ty {
            "A" => Group::A,
            "B" | "C" => Group::BC,
            "D" => Group::D,
            _ => return Err(validation(format!("unknown type {ty}"))),
        };
        let values: Vec<i64> = v["values"]
            .as_array()
            .ok_or_else(|| validation("missing values"))?
            .iter()
            .map(|x| x.as_i64().unwrap_or(0))
            .collect();
        SignedPermutation::new(group, values)
    }

    /// The longest element of the finite group at this rank.
    pub fn longest_element(group: Group, n: usize) -> SignedPermutation {
        match group {
            Group::A => SignedPermutation { group, values: (1..=n as i64).rev().collect() },
            Group::BC => SignedPermutation { group, values: (1..=n as i64).map(|i| -i).collect() },
            Group::D => {
                let mut values: Vec<i64> = (1..=n as i64).map(|i| -i).collect();
                if n % 2 == 1 {
                    values[0] = 1;
                }
                SignedPermutation { group, values }
            }
        }
    }

    /// Embedding into the symmetric group: `phi: W_n -> S_{2n}` or
    /// `phi': W_n -> S_{2n+1}`.
    pub fn embed_symmetric(&self, variant: EmbedVariant) -> Result<SignedPermutation> {
        if self.group == Group::A {
            return Err(validation("embed_symmetric expects a type B/C/D element"));
        }
        let n = self.rank();
        let m = match variant {
            EmbedVariant::Phi => 2 * n,
            EmbedVariant::PhiPrime => 2 * n + 1,
        };
        let offset = match variant {
            EmbedVariant::Phi => n as i64,
            EmbedVariant::PhiPrime => n as i64 + 1,
        };
        let mut values = vec![0i64; m];
        for i in 1..=n {
            let w = self.values[n - i];
            values[i - 1] = if w > 0 { n as i64 + 1 - w } else { offset - w };
        }
        if let EmbedVariant::PhiPrime = variant {
            values[n] = n as i64 + 1;
        }
        // Mirror half: omega_i + omega_{m+1-i} = m+1.
        for i in 1..=n {
            values[m - i] = m as i64 + 1 - values[i - 1];
        }
        SignedPermutation::new(Group::A, values)
    }
}

/// Which symmetric group embedding to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbedVariant {
    /// `phi: W_n -> S_{2n}` (types C and D).
    Phi,
    /// `phi': W_n -> S_{2n+1}` (type B).
    PhiPrime,
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.one_line())
    }
}

/// Membership predicate for one slot of a reduced factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SlotPredicate {
    /// Require the factor to lie in `S_infty` (no barred entries).
    pub symmetric_only: bool,
    /// Require the factor to fix `1..=m` pointwise.
    pub fixes_up_to: u32,
}

impl SlotPredicate {
    pub fn any() -> Self {
        SlotPredicate { symmetric_only: false, fixes_up_to: 0 }
    }

    pub fn symmetric() -> Self {
        SlotPredicate { symmetric_only: true, fixes_up_to: 0 }
    }

    pub fn symmetric_fixing(m: u32) -> Self {
        SlotPredicate { symmetric_only: true, fixes_up_to: m }
    }

    pub fn matches(&self, w: &SignedPermutation) -> bool {
        if self.symmetric_only && w.sign_changes() > 0 {
            return false;
        }
        (1..=self.fixes_up_to as usize).all(|i| w.value_at(i) == i as i64)
    }
}

/// All `(u, v)` with `u v = w` and `l(u) + l(v) = l(w)`.
pub fn left_factor_pairs(w: &SignedPermutation) -> Vec<(SignedPermutation, SignedPermutation)> {
    let mut level: BTreeSet<(SignedPermutation, SignedPermutation)> = BTreeSet::new();
    level.insert((SignedPermutation::identity(w.group(), w.rank()), w.clone()));
    let mut out: Vec<(SignedPermutation, SignedPermutation)> = Vec::new();
    while !level.is_empty() {
        let mut next = BTreeSet::new();
        for (u, v) in &level {
            out.push((u.clone(), v.clone()));
            for r in v.simple_letters() {
                // Left descent of v: l(s_r v) < l(v) gives uv = (u s_r)(s_r v).
                let sv = v.left_mul_simple(r);
                if sv.length() < v.length() {
                    next.insert((u.right_mul_simple(r), sv));
                }
            }
        }
        level = next;
    }
    out
}

type FactorKey = (SignedPermutation, Vec<SlotPredicate>);

static FACTORIZATION_CACHE: Lazy<Mutex<HashMap<FactorKey, Vec<Vec<SignedPermutation>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// All reduced factorizations `w = u_1 ... u_p` with each `u_i` matching its
/// slot predicate.  Deterministic order.
pub fn reduced_factorizations(
    w: &SignedPermutation,
    slots: &[SlotPredicate],
) -> Vec<Vec<SignedPermutation>> {
    assert!(!slots.is_empty());
    let key = (w.clone(), slots.to_vec());
    if let Some(hit) = FACTORIZATION_CACHE.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let result = if slots.len() == 1 {
        if slots[0].matches(w) {
            vec![vec![w.clone()]]
        } else {
            vec![]
        }
    } else {
        let mut out = Vec::new();
        for (u, v) in left_factor_pairs(w) {
            if !slots[0].matches(&u) {
                continue;
            }
            for mut tail in reduced_factorizations(&v, &slots[1..]) {
                let mut tuple = vec![u.clone()];
                tuple.append(&mut tail);
                out.push(tuple);
            }
        }
        out.sort();
        out
    };
    FACTORIZATION_CACHE.lock().unwrap().insert(key, result.clone());
    result
}

/// All elements of the group at rank `n` (by BFS over right multiplication).
pub fn all_elements(group: Group, n: usize) -> Vec<SignedPermutation> {
    let mut seen = BTreeSet::new();
    let mut frontier = vec![SignedPermutation::identity(group, n)];
    seen.insert(frontier[0].clone());
    while let Some(w) = frontier.pop() {
        for r in w.simple_letters() {
            let ws = w.right_mul_simple(r);
            if seen.insert(ws.clone()) {
                frontier.push(ws);
            }
        }
    }
    seen.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bc(values: &[i64]) -> SignedPermutation {
        SignedPermutation::new(Group::BC, values.to_vec()).unwrap()
    }

    /// Independent length oracle: count the steps needed to sort to the
    /// identity by right multiplication with descents.
    fn length_oracle(w: &SignedPermutation) -> usize {
        let mut w = w.clone();
        let mut steps = 0;
        while !w.is_identity() {
            let r = w.descents()[0];
            w = w.right_mul_simple(r);
            steps += 1;
        }
        steps
    }

    #[test]
    fn length_examples() {
        assert_eq!(SignedPermutation::identity(Group::BC, 3).length(), 0);
        assert_eq!(bc(&[3, -1, -2]).length(), 6);
        assert_eq!(bc(&[1, 2, -3]).length(), 5);
    }

    #[test]
    fn length_matches_oracle_exhaustively() {
        for group in [Group::A, Group::BC, Group::D] {
            let n = if group == Group::A { 4 } else { 3 };
            for w in all_elements(group, n) {
                assert_eq!(w.length(), length_oracle(&w), "w = {w}");
            }
        }
    }

    #[test]
    fn reduced_word_examples() {
        assert!(SignedPermutation::identity(Group::BC, 2).reduced_word().is_empty());
        let w = bc(&[3, -1, -2]);
        let word = w.reduced_word();
        assert_eq!(word.len(), 6);
        assert_eq!(SignedPermutation::from_word(Group::BC, 3, &word), w);
        // Paper's word for the same element.
        let paper = [0, 1, 0, 1, 2, 1].map(Letter::Idx);
        assert_eq!(SignedPermutation::from_word(Group::BC, 3, &paper), w);
        let s1 = SignedPermutation::new(Group::A, vec![2, 1, 3]).unwrap();
        assert_eq!(s1.reduced_word(), vec![Letter::Idx(1)]);
    }

    #[test]
    fn reduced_word_length_matches_for_all_of_w3() {
        for w in all_elements(Group::BC, 3) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(SignedPermutation::from_word(Group::BC, 3, &word), w);
        }
        for w in all_elements(Group::D, 3) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(SignedPermutation::from_word(Group::D, 3, &word), w);
        }
    }

    #[test]
    fn descent_examples() {
        assert!(SignedPermutation::identity(Group::BC, 3).descents().is_empty());
        let w = bc(&[3, -1, 2]);
        assert_eq!(w.descents(), vec![Letter::Idx(1)]);
    }

    #[test]
    fn length_changes_by_one_under_simple_reflection() {
        for group in [Group::A, Group::BC, Group::D] {
            let n = if group == Group::A { 4 } else { 3 };
            for w in all_elements(group, n) {
                for r in w.simple_letters() {
                    let d = w.right_mul_simple(r).length() as i64 - w.length() as i64;
                    assert_eq!(d.abs(), 1);
                }
            }
        }
    }

    #[test]
    fn reflections() {
        let w = bc(&[1, 2]);
        assert_eq!(w.reflect_tbar(1, 1).unwrap(), bc(&[-1, 2]));
        let w = bc(&[1, 4, 3, 2, 6, 5]);
        assert_eq!(w.reflect_t(2, 4).unwrap(), bc(&[1, 2, 3, 4, 6, 5]));
        // tbar is an involution
        let w = bc(&[3, -1, -2]);
        assert_eq!(w.reflect_tbar(1, 3).unwrap().reflect_tbar(1, 3).unwrap(), w);
    }

    #[test]
    fn factorizations() {
        let id = SignedPermutation::identity(Group::BC, 2);
        let f = reduced_factorizations(&id, &[SlotPredicate::any(), SlotPredicate::any()]);
        assert_eq!(f, vec![vec![id.clone(), id.clone()]]);

        // w = s_1 s_2 in S_3 has exactly (1,w), (s1, s2), (w, 1).
        let w = SignedPermutation::new(Group::A, vec![2, 3, 1]).unwrap();
        let f = reduced_factorizations(&w, &[SlotPredicate::any(), SlotPredicate::any()]);
        assert_eq!(f.len(), 3);
        for tuple in &f {
            let prod = tuple[0].compose(&tuple[1]).unwrap();
            assert_eq!(prod, w);
            assert_eq!(tuple[0].length() + tuple[1].length(), w.length());
        }
    }

    #[test]
    fn factorization_count_matches_brute_force() {
        // Cardinality of 2-slot factorizations equals a brute-force count of
        // weak order pairs, for every w in W_3.
        let all = all_elements(Group::BC, 3);
        for w in &all {
            if w.length() > 6 {
                continue;
            }
            let fast = reduced_factorizations(w, &[SlotPredicate::any(), SlotPredicate::any()]).len();
            let brute = all
                .iter()
                .filter(|u| {
                    let v = u.inverse().compose(w).unwrap();
                    u.length() + v.length() == w.length()
                })
                .count();
            assert_eq!(fast, brute, "w = {w}");
        }
    }

    #[test]
    fn embeddings() {
        let id = SignedPermutation::identity(Group::BC, 3);
        assert_eq!(
            id.embed_symmetric(EmbedVariant::Phi).unwrap(),
            SignedPermutation::identity(Group::A, 6)
        );
        let w = SignedPermutation::new(Group::BC, vec![-1]).unwrap();
        assert_eq!(
            w.embed_symmetric(EmbedVariant::Phi).unwrap(),
            SignedPermutation::new(Group::A, vec![2, 1]).unwrap()
        );
        // Mirror identity for phi
        for w in all_elements(Group::BC, 2) {
            let img = w.embed_symmetric(EmbedVariant::Phi).unwrap();
            let m = 4;
            for i in 1..=m {
                assert_eq!(img.value_at(i) + img.value_at(m + 1 - i), m as i64 + 1);
            }
            let img = w.embed_symmetric(EmbedVariant::PhiPrime).unwrap();
            let m = 5;
            for i in 1..=m {
                assert_eq!(img.value_at(i) + img.value_at(m + 1 - i), m as i64 + 1);
            }
        }
    }

    #[test]
    fn embedding_is_length_compatible_monomorphism() {
        let all = all_elements(Group::BC, 2);
        for u in &all {
            for v in &all {
                let uv = u.compose(v).unwrap();
                if u.length() + v.length() == uv.length() {
                    let lhs = uv.embed_symmetric(EmbedVariant::Phi).unwrap();
                    let rhs = u
                        .embed_symmetric(EmbedVariant::Phi)
                        .unwrap()
                        .compose(&v.embed_symmetric(EmbedVariant::Phi).unwrap())
                        .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn stability_under_rank_embedding() {
        for w in all_elements(Group::BC, 3) {
            let w4 = w.to_rank(4).unwrap();
            assert_eq!(w.length(), w4.length());
            assert_eq!(w.descents(), w4.descents());
            assert_eq!(w.reduced_word(), w4.reduced_word());
        }
    }

    #[test]
    fn parse_and_json() {
        let w = SignedPermutation::parse(Group::BC, "3,-1,-2").unwrap();
        assert_eq!(w, bc(&[3, -1, -2]));
        let j = w.to_json();
        assert_eq!(j["type"], "C");
        assert_eq!(SignedPermutation::from_json(&j).unwrap(), w);
        assert!(SignedPermutation::parse(Group::BC, "1,1,2").is_err());
        assert!(SignedPermutation::parse(Group::A, "1,-2").is_err());
        assert!(SignedPermutation::parse(Group::D, "1,-2,3").is_err());
    }
}
