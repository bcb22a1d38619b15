//! Transition trees and (mixed) Stanley coefficients, with the
//! Fomin-Greene and Kraskiewicz tableau counts as independent oracles.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use once_cell::sync::Lazy;
use serde_json::{json, Value};

use crate::error::{internal, precondition, validation, Result};
use crate::shapes::{grassmannian_to_shape, KIndex, Shape};
use crate::weyl::{Group, Letter, SignedPermutation};

/// Which transition recursion to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeKind {
    A,
    C,
    D,
}

/// A transition tree.  Nodes all share the root's length; leaves are
/// k-Grassmannian and carry their shapes.
#[derive(Debug, Clone)]
pub struct TransitionTree {
    pub root: SignedPermutation,
    pub kind: TreeKind,
    pub k: KIndex,
    pub children: BTreeMap<SignedPermutation, Vec<SignedPermutation>>,
    pub leaves: Vec<(SignedPermutation, Shape)>,
}

impl TransitionTree {
    /// Leaf multiset grouped by shape.
    pub fn shape_counts(&self) -> BTreeMap<Shape, u64> {
        let mut out = BTreeMap::new();
        for (_, shape) in &self.leaves {
            *out.entry(shape.clone()).or_insert(0) += 1;
        }
        out
    }

    /// Nested JSON rendering {"node": "...", "children": [...]}.
    pub fn to_json(&self) -> Value {
        fn rec(tree: &TransitionTree, node: &SignedPermutation) -> Value {
            let kids = tree.children.get(node).cloned().unwrap_or_default();
            if kids.is_empty() {
                json!({ "node": node.one_line() })
            } else {
                let child_values: Vec<Value> = kids.iter().map(|c| rec(tree, c)).collect();
                json!({ "node": node.one_line(), "children": child_values })
            }
        }
        rec(self, &self.root)
    }

    /// DOT export for documentation figures.
    pub fn to_dot(&self) -> String {
        let mut lines = vec!["digraph tree {".to_string()];
        let mut stack = vec![(self.root.clone(), 0usize)];
        let mut counter = 0usize;
        let mut ids: Vec<(SignedPermutation, usize)> = vec![];
        fn walk(
            tree: &TransitionTree,
            node: &SignedPermutation,
            parent: Option<usize>,
            counter: &mut usize,
            lines: &mut Vec<String>,
        ) {
            let my_id = *counter;
            *counter += 1;
            lines.push(format!("  n{} [label=\"{}\"];", my_id, node.one_line()));
            if let Some(p) = parent {
                lines.push(format!("  n{} -> n{};", p, my_id));
            }
            for c in tree.children.get(node).cloned().unwrap_or_default() {
                walk(tree, &c, Some(my_id), counter, lines);
            }
        }
        walk(self, &self.root, None, &mut counter, &mut lines);
        let _ = (&mut stack, &mut ids);
        lines.push("}".to_string());
        lines.join("\n")
    }
}

/// Is `w` increasing up to `k` (no descents below `k`)?
pub fn increasing_up_to(w: &SignedPermutation, k: KIndex) -> bool {
    match (w.group(), k) {
        (Group::A, _) => true,
        (_, KIndex::Box) | (_, KIndex::K(0)) => true,
        (Group::D, KIndex::K(1)) => true,
        (_, KIndex::K(k)) => w.descents().iter().all(|r| match r {
            Letter::Box => false,
            Letter::Idx(i) => *i >= k,
        }),
    }
}

fn largest_descent(w: &SignedPermutation) -> Option<Letter> {
    w.descents().into_iter().max()
}

/// Children of a type A node; applies the `1 x omega` shift when the plain
/// rule yields no children.
fn children_a(w: &SignedPermutation) -> Result<Vec<SignedPermutation>> {
    let mut cur = w.clone();
    for _shift in 0..w.rank() + 2 {
        let r = match largest_descent(&cur) {
            Some(Letter::Idx(r)) => r as usize,
            _ => return Err(internal("children_a called on a Grassmannian node")),
        };
        let n = cur.rank();
        let s = (r + 1..=n)
            .filter(|&i| cur.value_at(i) < cur.value_at(r))
            .max()
            .ok_or_else(|| internal("descent without a matching s"))?;
        let wts = cur.reflect_t(r, s)?;
        let mut kids = Vec::new();
        for i in 1..r {
            let cand = wts.reflect_t(i, r)?;
            if cand.length() == cur.length() {
                kids.push(cand);
            }
        }
        kids.sort();
        kids.dedup();
        if !kids.is_empty() {
            return Ok(kids);
        }
        // Shift: prepend a fixed point, moving all values up by one.
        let mut values = vec![1i64];
        values.extend(cur.values().iter().map(|&v| v + 1));
        cur = SignedPermutation::new(Group::A, values)?;
    }
    Err(internal("type A shift failed to produce children"))
}

/// Children of a type C or D node.
fn children_cd(w: &SignedPermutation, kind: TreeKind) -> Result<Vec<SignedPermutation>> {
    let r = match largest_descent(w) {
        Some(Letter::Idx(r)) => r as usize,
        _ => return Err(internal("children_cd needs a positive largest descent")),
    };
    let n = w.rank();
    let s = (r + 1..=n)
        .filter(|&i| w.value_at(i) < w.value_at(r))
        .max()
        .ok_or_else(|| internal("descent without a matching s"))?;
    let wts = w.reflect_t(r, s)?;
    let mut kids = Vec::new();
    for i in 1..r {
        let cand = wts.reflect_t(i, r)?;
        if cand.length() == w.length() {
            kids.push(cand);
        }
    }
    // Barred reflections tbar_{ir}.  A bar on position i > rank puts the
    // value -i into the element, contributing at least i-1 to the length,
    // so the scan below is exhaustive.
    let window = n.max(s).max(w.length() + 2);
    for i in 1..=window {
        if kind == TreeKind::D && i == r {
            continue;
        }
        let cand = match wts.reflect_tbar(i.min(r), i.max(r)) {
            Ok(c) => c,
            Err(_) => continue, // odd sign count in type D
        };
        if cand.length() == w.length() {
            kids.push(cand);
        }
    }
    kids.sort();
    kids.dedup();
    Ok(kids)
}

fn is_leaf(w: &SignedPermutation, kind: TreeKind, k: KIndex) -> bool {
    match kind {
        TreeKind::A => {
            w.is_identity() || w.descents().len() <= 1
        }
        TreeKind::C => {
            if w.is_identity() {
                return true;
            }
            largest_descent(w) == Some(k.letter())
        }
        TreeKind::D => {
            if w.is_identity() {
                return true;
            }
            let r = largest_descent(w);
            match k {
                KIndex::K(1) => r == Some(Letter::Box) || r == Some(Letter::Idx(1)),
                _ => r == Some(k.letter()),
            }
        }
    }
}

fn leaf_shape(w: &SignedPermutation, kind: TreeKind, k: KIndex) -> Result<Shape> {
    match kind {
        TreeKind::A => {
            let m = match largest_descent(w) {
                Some(Letter::Idx(m)) => m,
                _ => 0,
            };
            // Canonical plain form so that equal partitions from different
            // descent positions share one key.
            let shape = grassmannian_to_shape(w, KIndex::K(m))?;
            Ok(Shape::plain(shape.parts))
        }
        _ => grassmannian_to_shape(w, k),
    }
}

/// Builds the transition tree `T(omega)`, `T^k(w)`, or `T-tilde^k(w)`.
pub fn transition_tree(w: &SignedPermutation, kind: TreeKind, k: KIndex) -> Result<TransitionTree> {
    match kind {
        TreeKind::A => {
            if w.group() != Group::A {
                return Err(validation("type A tree needs a permutation"));
            }
        }
        TreeKind::C => {
            if w.group() != Group::BC {
                return Err(validation("type C tree needs a signed permutation"));
            }
            if !increasing_up_to(w, k) {
                return Err(precondition(format!("{w} is not increasing up to {k:?}")));
            }
        }
        TreeKind::D => {
            if w.group() != Group::D {
                return Err(validation("type D tree needs an even-signed permutation"));
            }
            if !increasing_up_to(w, k) {
                return Err(precondition(format!("{w} is not increasing up to {k:?}")));
            }
        }
    }
    let mut tree = TransitionTree {
        root: w.clone(),
        kind,
        k,
        children: BTreeMap::new(),
        leaves: Vec::new(),
    };
    let budget = (w.length() + 1) * (w.rank() + 2) * (w.rank() + 2) * 64;
    let mut visited = 0usize;
    build(&mut tree, w.clone(), &mut visited, budget)?;
    Ok(tree)
}

fn build(
    tree: &mut TransitionTree,
    node: SignedPermutation,
    visited: &mut usize,
    budget: usize,
) -> Result<()> {
    *visited += 1;
    if *visited > budget {
        return Err(internal("transition tree exceeded its safety depth"));
    }
    if node.length() != tree.root.length() {
        return Err(internal("tree node changed length"));
    }
    if is_leaf(&node, tree.kind, tree.k) {
        let shape = leaf_shape(&node, tree.kind, tree.k)?;
        tree.leaves.push((node, shape));
        return Ok(());
    }
    let kids = match tree.kind {
        TreeKind::A => children_a(&node)?,
        _ => children_cd(&node, tree.kind)?,
    };
    if kids.is_empty() {
        return Err(internal(format!("non-leaf node {node} has no children")));
    }
    tree.children.insert(node, kids.clone());
    for kid in kids {
        build(tree, kid, visited, budget)?;
    }
    Ok(())
}

/// Stanley coefficients: leaf counts by shape.
pub fn stanley_coeffs(
    w: &SignedPermutation,
    kind: TreeKind,
    k: KIndex,
) -> Result<BTreeMap<Shape, u64>> {
    Ok(transition_tree(w, kind, k)?.shape_counts())
}

type ShapeCounts = BTreeMap<Shape, u64>;

static COEFF_CACHE: Lazy<Mutex<HashMap<(SignedPermutation, KIndex), ShapeCounts>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Cached Stanley coefficients with the tree kind inferred from the group.
pub fn stanley_coeffs_cached(
    w: &SignedPermutation,
    k: KIndex,
) -> Result<BTreeMap<Shape, u64>> {
    let kind = match w.group() {
        Group::A => TreeKind::A,
        Group::BC => TreeKind::C,
        Group::D => TreeKind::D,
    };
    let key = (w.clone(), k);
    if let Some(hit) = COEFF_CACHE.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let value = stanley_coeffs(w, kind, k)?;
    COEFF_CACHE.lock().unwrap().insert(key, value.clone());
    Ok(value)
}

// ---------------------------------------------------------------------------
// Tableau oracles.
// ---------------------------------------------------------------------------

/// Fomin-Greene count: semistandard tableaux of shape `conjugate(lambda)`
/// whose column word (bottom to top, left to right) is a reduced word for
/// `omega`.
pub fn fg_tableau_count(omega: &SignedPermutation, lambda: &Shape) -> Result<u64> {
    if omega.group() != Group::A {
        return Err(validation("Fomin-Greene counting needs a permutation"));
    }
    if lambda.weight() as usize != omega.length() {
        return Ok(0);
    }
    let shape = lambda.conjugate_parts();
    let ncols = shape.first().copied().unwrap_or(0) as usize;
    let col_height = |c: usize| -> usize { shape.iter().filter(|&&p| p as usize >= c).count() };
    // Cells in column-word order: per column (left to right), bottom to top.
    let mut cells: Vec<(usize, usize)> = Vec::new(); // (row, col), 1-based
    for c in 1..=ncols {
        for r in (1..=col_height(c)).rev() {
            cells.push((r, c));
        }
    }
    let maxletter = omega.rank() as u32 - 1;
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&p| vec![0; p as usize]).collect();
    let target = omega.clone();

    fn rec(
        cells: &[(usize, usize)],
        idx: usize,
        grid: &mut Vec<Vec<u32>>,
        acc: &SignedPermutation,
        target: &SignedPermutation,
        maxletter: u32,
        count: &mut u64,
    ) {
        if idx == cells.len() {
            if acc == target {
                *count += 1;
            }
            return;
        }
        let (r, c) = cells[idx];
        // Semistandard constraints with already-filled neighbours: the cell
        // below (r+1, c) is filled and must be strictly larger; the left
        // neighbour (r, c-1) is filled and must be weakly smaller.
        let lower_bound_left = if c >= 2 { grid[r - 1][c - 2] } else { 1 };
        let upper_bound_below = if grid.len() > r && grid[r].len() >= c && grid[r][c - 1] != 0 {
            grid[r][c - 1] - 1
        } else {
            maxletter
        };
        for v in lower_bound_left.max(1)..=upper_bound_below {
            // The column word letter s_v must extend a reduced word.
            let next = acc.right_mul_simple(Letter::Idx(v));
            if next.length() != acc.length() + 1 {
                continue;
            }
            grid[r - 1][c - 1] = v;
            rec(cells, idx + 1, grid, &next, target, maxletter, count);
            grid[r - 1][c - 1] = 0;
        }
    }

    let mut count = 0;
    let acc = SignedPermutation::identity(Group::A, omega.rank());
    rec(&cells, 0, &mut grid, &acc, &target, maxletter, &mut count);
    Ok(count)
}

/// All reduced words of `w` (letters), memoized.
pub fn reduced_words(w: &SignedPermutation) -> Vec<Vec<Letter>> {
    static CACHE: Lazy<Mutex<HashMap<SignedPermutation, Vec<Vec<Letter>>>>> =
        Lazy::new(|| Mutex::new(HashMap::new()));
    if let Some(hit) = CACHE.lock().unwrap().get(w) {
        return hit.clone();
    }
    let mut out = Vec::new();
    if w.is_identity() {
        out.push(vec![]);
    } else {
        for r in w.descents() {
            let shorter = w.right_mul_simple(r);
            for mut word in reduced_words(&shorter) {
                word.push(r);
                out.push(word);
            }
        }
    }
    out.sort();
    CACHE.lock().unwrap().insert(w.clone(), out.clone());
    out
}

fn unimodal(seq: &[i64]) -> bool {
    let mut i = 0;
    while i + 1 < seq.len() && seq[i] > seq[i + 1] {
        i += 1;
    }
    while i + 1 < seq.len() && seq[i] < seq[i + 1] {
        i += 1;
    }
    i + 1 >= seq.len().max(1)
}

/// Length of the longest unimodal subsequence.
fn longest_unimodal(seq: &[i64]) -> usize {
    let n = seq.len();
    if n == 0 {
        return 0;
    }
    // dec[p]: longest strictly decreasing subsequence ending at p.
    let mut dec = vec![1usize; n];
    for p in 0..n {
        for q in 0..p {
            if seq[q] > seq[p] {
                dec[p] = dec[p].max(dec[q] + 1);
            }
        }
    }
    // inc[p]: longest strictly increasing subsequence starting at p.
    let mut inc = vec![1usize; n];
    for p in (0..n).rev() {
        for q in p + 1..n {
            if seq[q] > seq[p] {
                inc[p] = inc[p].max(inc[q] + 1);
            }
        }
    }
    (0..n).map(|p| dec[p] + inc[p] - 1).max().unwrap()
}

/// Kraskiewicz (standard decomposition) tableau count for `w` in `W_infty`
/// and a strict partition `lambda`: fillings whose row word (bottom row
/// first) is a reduced word for `w` and whose i-th row is a maximum length
/// unimodal subsequence of the word read so far.
pub fn kraskiewicz_count(w: &SignedPermutation, lambda: &Shape) -> Result<u64> {
    if w.group() != Group::BC {
        return Err(validation("Kraskiewicz counting needs a signed permutation"));
    }
    if !lambda.is_strict() {
        return Ok(0);
    }
    if lambda.weight() as usize != w.length() {
        return Ok(0);
    }
    let rows = lambda.len();
    let mut count = 0u64;
    for word in reduced_words(w) {
        let letters: Vec<i64> = word
            .iter()
            .map(|l| match l {
                Letter::Idx(i) => *i as i64,
                Letter::Box => unreachable!("type C words have no box letter"),
            })
            .collect();
        // Row word t_r ... t_1: the first lambda_r letters are row r.
        let mut ok = true;
        let mut pos = 0usize;
        for i in (1..=rows).rev() {
            let len = lambda.part(i) as usize;
            let row = &letters[pos..pos + len];
            pos += len;
            if !unimodal(row) {
                ok = false;
                break;
            }
            if longest_unimodal(&letters[..pos]) != len {
                ok = false;
                break;
            }
        }
        if ok && pos == letters.len() {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::all_elements;

    fn a_perm(values: &[i64]) -> SignedPermutation {
        SignedPermutation::new(Group::A, values.to_vec()).unwrap()
    }

    fn bc(values: &[i64]) -> SignedPermutation {
        SignedPermutation::new(Group::BC, values.to_vec()).unwrap()
    }

    #[test]
    fn identity_tree_is_single_node() {
        let id = SignedPermutation::identity(Group::A, 3);
        let tree = transition_tree(&id, TreeKind::A, KIndex::K(0)).unwrap();
        assert_eq!(tree.leaves.len(), 1);
        assert!(tree.children.is_empty());
    }

    #[test]
    fn paper_tree_143265() {
        let w = a_perm(&[1, 4, 3, 2, 6, 5]);
        let tree = transition_tree(&w, TreeKind::A, KIndex::K(0)).unwrap();
        assert_eq!(tree.leaves.len(), 3, "three leaves / tableaux");
        // Regression of the derived leaf shapes.
        let counts = tree.shape_counts();
        let shapes: Vec<Vec<u32>> = counts.keys().map(|s| s.parts.clone()).collect();
        assert_eq!(shapes, vec![vec![2, 1, 1], vec![2, 2], vec![3, 1]]);
        let total: u64 = counts.values().sum();
        assert_eq!(total, 3);
    }

    #[test]
    fn paper_tree_3m12645() {
        // w = 3 -1 2 6 4 5, k = 1: leaf shapes (2,1,1,1), (5), (3,1,1) x2,
        // (4,1), (3,2).
        let w = bc(&[3, -1, 2, 6, 4, 5]);
        let counts = stanley_coeffs(&w, TreeKind::C, KIndex::K(1)).unwrap();
        let expect: Vec<(Vec<u32>, u64)> = vec![
            (vec![2, 1, 1, 1], 1),
            (vec![3, 1, 1], 2),
            (vec![3, 2], 1),
            (vec![4, 1], 1),
            (vec![5], 1),
        ];
        let got: Vec<(Vec<u32>, u64)> =
            counts.iter().map(|(s, c)| (s.parts.clone(), *c)).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn grassmannian_input_gives_single_leaf() {
        use crate::shapes::{all_k_strict_in_rectangle, shape_to_grassmannian, LieType};
        for shape in all_k_strict_in_rectangle(1, 4) {
            let w = shape_to_grassmannian(&shape, LieType::C, 4).unwrap();
            let counts = stanley_coeffs(&w, TreeKind::C, KIndex::K(1)).unwrap();
            assert_eq!(counts.len(), 1);
            assert_eq!(counts[&shape], 1);
        }
    }

    #[test]
    fn node_weight_invariant() {
        // sum over shapes of count * |shape| = leaf count * l(root).
        let w = bc(&[3, -1, 2, 6, 4, 5]);
        let counts = stanley_coeffs(&w, TreeKind::C, KIndex::K(1)).unwrap();
        let leaves: u64 = counts.values().sum();
        let weighted: u64 = counts.iter().map(|(s, c)| *c * s.weight() as u64).sum();
        assert_eq!(weighted, leaves * w.length() as u64);
    }

    #[test]
    fn fg_count_examples() {
        // A simple reflection has one tableau of shape (1).
        let s2 = a_perm(&[1, 3, 2]);
        let sh1 = Shape::untyped(vec![1], 0).unwrap();
        assert_eq!(fg_tableau_count(&s2, &sh1).unwrap(), 1);
        // 143265: three tableaux in total.
        let w = a_perm(&[1, 4, 3, 2, 6, 5]);
        let mut total = 0;
        for wt in 0..=4u32 {
            let _ = wt;
        }
        for parts in crate::sym::partitions_bounded(w.length() as u32, 6, 6) {
            let sh = Shape::untyped(parts.clone(), parts.first().copied().unwrap_or(0)).unwrap();
            total += fg_tableau_count(&w, &sh).unwrap();
        }
        assert_eq!(total, 3);
    }

    #[test]
    fn fg_counts_match_trees_on_s4() {
        for w in all_elements(Group::A, 4) {
            let counts = stanley_coeffs(&w, TreeKind::A, KIndex::K(0)).unwrap();
            for parts in crate::sym::partitions_bounded(w.length() as u32, 6, 6) {
                let sh = Shape::untyped(parts.clone(), parts.first().copied().unwrap_or(0)).unwrap();
                let from_tree = counts
                    .iter()
                    .find(|(s, _)| s.parts == parts)
                    .map(|(_, c)| *c)
                    .unwrap_or(0);
                let from_tableaux = fg_tableau_count(&w, &sh).unwrap();
                assert_eq!(from_tree, from_tableaux, "w = {w}, lambda = {parts:?}");
            }
        }
    }

    #[test]
    fn kraskiewicz_examples() {
        let s0 = bc(&[-1, 2]);
        let sh1 = Shape::untyped(vec![1], 0).unwrap();
        assert_eq!(kraskiewicz_count(&s0, &sh1).unwrap(), 1);
        // Non-strict shapes count zero.
        let w = bc(&[-2, -1]);
        let sh11 = Shape::untyped(vec![1, 1], 1).unwrap();
        assert_eq!(kraskiewicz_count(&w, &sh11).unwrap(), 0);
    }

    #[test]
    fn kraskiewicz_matches_trees_on_w2() {
        for w in all_elements(Group::BC, 2) {
            let counts = stanley_coeffs(&w, TreeKind::C, KIndex::K(0)).unwrap();
            for parts in crate::sym::partitions_bounded(w.length() as u32, 9, 9) {
                if !parts.windows(2).all(|p| p[0] > p[1]) {
                    continue;
                }
                let sh = Shape::untyped(parts.clone(), 0).unwrap();
                let from_tree = counts
                    .iter()
                    .find(|(s, _)| s.parts == parts)
                    .map(|(_, c)| *c)
                    .unwrap_or(0);
                assert_eq!(
                    kraskiewicz_count(&w, &sh).unwrap(),
                    from_tree,
                    "w = {w}, lambda = {parts:?}"
                );
            }
        }
    }

    #[test]
    fn f_to_q_expansion_small() {
        // F_w = sum e^w_lambda Q_lambda for all w in W_2.
        use crate::nilcox::stanley_function_cached;
        use crate::polyring::q_basis_expand_sym;
        use crate::rational::q_int;
        for w in all_elements(Group::BC, 2) {
            let f = stanley_function_cached(&w).unwrap();
            let expansion = q_basis_expand_sym(&f).unwrap();
            let counts = stanley_coeffs_cached(&w, KIndex::K(0)).unwrap();
            let as_map: BTreeMap<Vec<u32>, crate::rational::Q> = counts
                .iter()
                .map(|(s, c)| (s.parts.clone(), q_int(*c as i64)))
                .collect();
            assert_eq!(expansion, as_map, "w = {w}");
        }
    }

    #[test]
    fn d_type_p_expansion_small() {
        // <D(X), w> expanded in the P basis has the d^w coefficients.
        use crate::nilcox::stanley_function_cached;
        use crate::polyring::p_basis_expand_sym;
        use crate::rational::q_int;
        for w in all_elements(Group::D, 2) {
            let f = stanley_function_cached(&w).unwrap();
            let expansion = p_basis_expand_sym(&f).unwrap();
            let counts = stanley_coeffs_cached(&w, KIndex::Box).unwrap();
            let as_map: BTreeMap<Vec<u32>, crate::rational::Q> = counts
                .iter()
                .map(|(s, c)| (s.parts.clone(), q_int(*c as i64)))
                .collect();
            assert_eq!(expansion, as_map, "w = {w}");
        }
    }

    #[test]
    fn shift_invariance_of_type_a_shapes() {
        // Leaf shapes are unchanged when the root is shifted by 1 x omega.
        let w = a_perm(&[2, 1, 4, 3]);
        let counts = stanley_coeffs(&w, TreeKind::A, KIndex::K(0)).unwrap();
        let mut values = vec![1i64];
        values.extend(w.values().iter().map(|&v| v + 1));
        let shifted = SignedPermutation::new(Group::A, values).unwrap();
        let counts2 = stanley_coeffs(&shifted, TreeKind::A, KIndex::K(0)).unwrap();
        let a: Vec<(Vec<u32>, u64)> = counts.iter().map(|(s, c)| (s.parts.clone(), *c)).collect();
        let b: Vec<(Vec<u32>, u64)> = counts2.iter().map(|(s, c)| (s.parts.clone(), *c)).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn json_and_dot_outputs() {
        let w = a_perm(&[1, 4, 3, 2, 6, 5]);
        let tree = transition_tree(&w, TreeKind::A, KIndex::K(0)).unwrap();
        let j = tree.to_json();
        assert_eq!(j["node"], "1,4,3,2,6,5");
        assert!(tree.to_dot().starts_with("digraph"));
    }
}
