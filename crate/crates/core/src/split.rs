//! Splitting coefficients and the splitting formulas that express a double
//! Schubert polynomial as a sum of products of Schur / theta / eta
//! polynomials in disjoint groups of variables.

use std::collections::BTreeMap;

use crate::error::{precondition, unsupported, validation, Result};
use crate::shapes::{KIndex, LieType, Shape};
use crate::sym::MixedPoly;
use crate::transition::stanley_coeffs_cached;
use crate::weyl::{Group, Letter, SignedPermutation, SlotPredicate};
use crate::rational::{q_int, Q};
use num_traits::Zero;

/// A splitting problem: an element together with two compatible descent
/// sequences.
#[derive(Debug, Clone)]
pub struct SplitProblem {
    pub lie_type: LieType,
    pub w: SignedPermutation,
    pub a_seq: Vec<KIndex>,
    pub b_seq: Vec<KIndex>,
}

fn kindex_value(k: KIndex) -> u32 {
    k.as_int()
}

/// Descents of `w` are listed among the sequence (type D allows an
/// implicit box when `a_1 = 1`).
fn compatible(w: &SignedPermutation, seq: &[KIndex], lie_type: LieType) -> bool {
    let descents = w.descents();
    let listed = |r: Letter| -> bool {
        seq.iter().any(|k| k.letter() == r)
    };
    match lie_type {
        LieType::D => {
            let box_allowed = seq.first() == Some(&KIndex::K(1)) || seq.contains(&KIndex::Box);
            descents.iter().all(|&r| match r {
                Letter::Box => box_allowed || listed(r),
                _ => listed(r),
            })
        }
        _ => descents.iter().all(|&r| listed(r)),
    }
}

impl SplitProblem {
    pub fn new(
        lie_type: LieType,
        w: SignedPermutation,
        a_seq: Vec<KIndex>,
        b_seq: Vec<KIndex>,
    ) -> Result<SplitProblem> {
        let expected_group = match lie_type {
            LieType::A => Group::A,
            LieType::B | LieType::C => Group::BC,
            LieType::D => Group::D,
        };
        if w.group() != expected_group {
            return Err(validation("element does not match the Lie type"));
        }
        if a_seq.is_empty() || b_seq.is_empty() {
            return Err(validation("descent sequences must be nonempty"));
        }
        for win in a_seq.windows(2) {
            if kindex_value(win[0]) >= kindex_value(win[1]) {
                return Err(validation("a-sequence must increase"));
            }
        }
        for win in b_seq.windows(2) {
            if kindex_value(win[0]) >= kindex_value(win[1]) {
                return Err(validation("b-sequence must increase"));
            }
        }
        if lie_type == LieType::A && kindex_value(a_seq[0]) == 0 {
            return Err(validation("type A requires a_1 > 0"));
        }
        if !compatible(&w, &a_seq, lie_type) {
            return Err(precondition(format!("{w} is not compatible with the a-sequence")));
        }
        if !compatible(&w.inverse(), &b_seq, lie_type) {
            return Err(precondition(format!(
                "{} is not compatible with the b-sequence",
                w.inverse()
            )));
        }
        Ok(SplitProblem { lie_type, w, a_seq, b_seq })
    }

    pub fn p(&self) -> usize {
        self.a_seq.len()
    }

    pub fn q(&self) -> usize {
        self.b_seq.len()
    }

    /// Theorem hypothesis on `b_1`: 0 in types B/C, box in type D.
    fn check_b1(&self) -> Result<()> {
        match self.lie_type {
            LieType::A => Ok(()),
            LieType::B | LieType::C => {
                if self.b_seq[0] == KIndex::K(0) {
                    Ok(())
                } else {
                    Err(unsupported(
                        "splitting in types B/C needs b_1 = 0; the general case is open",
                    ))
                }
            }
            LieType::D => {
                if self.b_seq[0] == KIndex::Box {
                    Ok(())
                } else {
                    Err(unsupported(
                        "splitting in type D needs b_1 = box; the general case is open",
                    ))
                }
            }
        }
    }

    /// Slot predicates for the reduced factorization
    /// `w = u_1 ... u_{p+q-1}`.
    fn slot_predicates(&self) -> Vec<SlotPredicate> {
        let p = self.p();
        let q = self.q();
        let mut slots = Vec::with_capacity(p + q - 1);
        for j in 1..=p + q - 1 {
            if j < q {
                slots.push(SlotPredicate::symmetric_fixing(kindex_value(self.b_seq[q - j - 1 + 1 - 1])));
            } else if j == q {
                slots.push(SlotPredicate::any());
            } else {
                slots.push(SlotPredicate::symmetric_fixing(kindex_value(self.a_seq[j - q - 1])));
            }
        }
        slots
    }

    /// The variable blocks `Y_t = {y_{a_{t-1}+1}, ..., y_{a_t}}` and
    /// `Z_t = {z_{b_{t-1}+1}, ..., z_{b_t}}`.
    pub fn y_block(&self, t: usize) -> Vec<u32> {
        let lo = if t == 1 { 0 } else { kindex_value(self.a_seq[t - 2]) };
        let hi = kindex_value(self.a_seq[t - 1]);
        (lo + 1..=hi).collect()
    }

    pub fn z_block(&self, t: usize) -> Vec<u32> {
        let lo = if t == 1 { 0 } else { kindex_value(self.b_seq[t - 2]) };
        let hi = kindex_value(self.b_seq[t - 1]);
        (lo + 1..=hi).collect()
    }
}

/// One term of the structured splitting result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitTerm {
    pub coeff: u64,
    pub shapes: Vec<Shape>,
}

/// Enumerates all splitting terms with nonzero coefficients.
pub fn split_terms(problem: &SplitProblem) -> Result<Vec<SplitTerm>> {
    problem.check_b1()?;
    let p = problem.p();
    let q = problem.q();
    let nslots = p + q - 1;
    let slots = problem.slot_predicates();
    let middle_k = problem.a_seq[0];
    let mut acc: BTreeMap<Vec<Shape>, u64> = BTreeMap::new();
    for factorization in crate::weyl::reduced_factorizations(&problem.w, &slots) {
        // Per-slot Stanley coefficient tables.
        let mut tables: Vec<BTreeMap<Shape, u64>> = Vec::with_capacity(nslots);
        let mut dead = false;
        for (j, u) in factorization.iter().enumerate() {
            let slot = j + 1;
            if slot == q {
                if !crate::transition::increasing_up_to(u, middle_k) {
                    dead = true;
                    break;
                }
                tables.push(stanley_coeffs_cached(u, middle_k)?);
            } else {
                let ua = u.retype(Group::A)?.to_rank(u.essential_rank().max(1))?;
                tables.push(stanley_coeffs_cached(&ua, KIndex::K(0))?);
            }
        }
        if dead {
            continue;
        }
        // Distribute products.
        fn walk(
            tables: &[BTreeMap<Shape, u64>],
            idx: usize,
            shapes: &mut Vec<Shape>,
            coeff: u64,
            acc: &mut BTreeMap<Vec<Shape>, u64>,
        ) {
            if idx == tables.len() {
                *acc.entry(shapes.clone()).or_insert(0) += coeff;
                return;
            }
            for (shape, c) in &tables[idx] {
                shapes.push(shape.clone());
                walk(tables, idx + 1, shapes, coeff * c, acc);
                shapes.pop();
            }
        }
        walk(&tables, 0, &mut Vec::new(), 1, &mut acc);
    }
    Ok(acc
        .into_iter()
        .filter(|(_, c)| *c > 0)
        .map(|(shapes, coeff)| SplitTerm { coeff, shapes })
        .collect())
}

/// The splitting coefficient of one shape sequence.
pub fn split_coeff(problem: &SplitProblem, shapes: &[Shape]) -> Result<u64> {
    if shapes.len() != problem.p() + problem.q() - 1 {
        return Err(validation("shape sequence has the wrong number of slots"));
    }
    let weight: u32 = shapes.iter().map(|s| s.weight()).sum();
    if weight as usize != problem.w.length() {
        return Err(precondition("shape weights must sum to l(w)"));
    }
    let terms = split_terms(problem)?;
    Ok(terms
        .into_iter()
        .filter(|t| {
            t.shapes.len() == shapes.len()
                && t.shapes
                    .iter()
                    .zip(shapes)
                    .all(|(a, b)| a.parts == b.parts && a.type_tag == b.type_tag)
        })
        .map(|t| t.coeff)
        .sum())
}

/// Assembles the right-hand side of the splitting formula as a polynomial.
pub fn split_formula(problem: &SplitProblem) -> Result<MixedPoly> {
    let terms = split_terms(problem)?;
    let q = problem.q();
    let mut out = MixedPoly::zero();
    for term in terms {
        let mut poly = MixedPoly::term(vec![], vec![], q_int(term.coeff as i64));
        for (j, shape) in term.shapes.iter().enumerate() {
            let slot = j + 1;
            let factor = if slot < q {
                // s_{lambda^j}(0 / Z_{q+1-j}).
                let zb = problem.z_block(q + 1 - slot);
                crate::polyring::schur_super_mixed(&shape.parts, &[], &zb)
            } else if slot == q {
                match problem.lie_type {
                    LieType::A => {
                        let yb = problem.y_block(1);
                        let zb = problem.z_block(1);
                        crate::polyring::schur_super_mixed(&shape.parts, &yb, &zb)
                    }
                    LieType::B | LieType::C => crate::polyring::theta_lambda_mixed(shape)?,
                    LieType::D => crate::polyring::eta_lambda_mixed(shape)?,
                }
            } else {
                // s_{lambda^j}(Y_{j-q+1}).
                let yb = problem.y_block(slot - q + 1);
                crate::polyring::schur_super_mixed(&shape.parts, &yb, &[])
            };
            poly = poly.mul(&factor);
        }
        out = out.add(&poly);
    }
    Ok(out)
}

/// Exact rank over Q of the MixedPoly family (for the uniqueness check).
pub fn exact_rank(polys: &[MixedPoly]) -> usize {
    let mut keys: Vec<(crate::sym::Partition, crate::sym::YzMono)> = Vec::new();
    for p in polys {
        for k in p.terms.keys() {
            if !keys.contains(k) {
                keys.push(k.clone());
            }
        }
    }
    let mut rows: Vec<Vec<Q>> = polys
        .iter()
        .map(|p| keys.iter().map(|k| p.terms.get(k).cloned().unwrap_or_else(Q::zero)).collect())
        .collect();
    // Gaussian elimination.
    let mut rank = 0;
    let ncols = keys.len();
    for col in 0..ncols {
        let pivot = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
        let Some(pivot) = pivot else { continue };
        rows.swap(rank, pivot);
        let pv = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = &rows[r][col] / &pv;
                #[allow(clippy::needless_range_loop)]
                for c2 in col..ncols {
                    let sub = &rows[rank][c2] * &factor;
                    rows[r][c2] -= sub;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// All admissible a-sequences for `w` at rank bound `n` (supersets of the
/// descent set with entries below `n`).
pub fn admissible_sequences(w: &SignedPermutation, n: u32, lie_type: LieType) -> Vec<Vec<KIndex>> {
    let mut universe: Vec<KIndex> = Vec::new();
    match lie_type {
        LieType::A => universe.extend((1..n).map(KIndex::K)),
        LieType::B | LieType::C => universe.extend((0..n).map(KIndex::K)),
        LieType::D => {
            universe.push(KIndex::Box);
            universe.extend((1..n).map(KIndex::K));
        }
    }
    let mut out = Vec::new();
    let total = 1usize << universe.len();
    for mask in 0..total {
        let seq: Vec<KIndex> = universe
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, k)| *k)
            .collect();
        if seq.is_empty() {
            continue;
        }
        // In type D, box and 1 cannot both appear as "positions": the box
        // and node 1 are parallel nodes; both are allowed in a sequence
        // ordered by value with box < 1. Keep sequences sorted by value and
        // reject box+K(1)... they have equal numeric value 0 vs 1; box=0 < 1
        // so the pair is fine.
        if compatible(w, &seq, lie_type) {
            out.push(seq);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nilcox::double_schubert_full;
    use crate::weyl::all_elements;

    fn bc(values: &[i64]) -> SignedPermutation {
        SignedPermutation::new(Group::BC, values.to_vec()).unwrap()
    }

    fn k(i: u32) -> KIndex {
        KIndex::K(i)
    }

    #[test]
    fn single_slot_reduces_to_mixed_stanley() {
        // p = q = 1: the coefficient is e^w_lambda itself.  Both w and its
        // inverse must be compatible, so take a 0-Grassmannian element with
        // increasing inverse.
        let w = bc(&[-1, 2, 3]);
        let problem =
            SplitProblem::new(LieType::C, w.clone(), vec![k(0)], vec![k(0)]).unwrap();
        let terms = split_terms(&problem).unwrap();
        let coeffs = stanley_coeffs_cached(&w, k(0)).unwrap();
        assert_eq!(terms.len(), coeffs.len());
        for t in &terms {
            assert_eq!(t.shapes.len(), 1);
            assert_eq!(coeffs[&t.shapes[0]], t.coeff);
        }
    }

    #[test]
    fn paper_example_a() {
        // w = 3 -1 -2, b = (0 < 1), a = (1 < 2):
        // C_w = Theta^{(1)}_{(4,2)} + Theta^{(1)}_{(3,2)} y_2
        //       - z_1 Theta^{(1)}_{(3,2)}.
        let w = bc(&[3, -1, -2]);
        let problem =
            SplitProblem::new(LieType::C, w.clone(), vec![k(1), k(2)], vec![k(0), k(1)]).unwrap();
        let mut terms = split_terms(&problem).unwrap();
        terms.sort_by_key(|t| t.shapes.iter().map(|s| s.parts.clone()).collect::<Vec<_>>());
        // Expect three terms: (-, (4,2), -), (-, (3,2), (1)), ((1), (3,2), -).
        assert_eq!(terms.len(), 3);
        let shapes: Vec<Vec<Vec<u32>>> = terms
            .iter()
            .map(|t| t.shapes.iter().map(|s| s.parts.clone()).collect())
            .collect();
        assert!(shapes.contains(&vec![vec![], vec![4, 2], vec![]]));
        assert!(shapes.contains(&vec![vec![], vec![3, 2], vec![1]]));
        assert!(shapes.contains(&vec![vec![1], vec![3, 2], vec![]]));
        assert!(terms.iter().all(|t| t.coeff == 1));
        // And the assembled formula equals the double Schubert polynomial.
        let lhs = double_schubert_full(&w, LieType::C).unwrap();
        assert_eq!(split_formula(&problem).unwrap(), lhs);
    }

    #[test]
    fn paper_example_b() {
        // w = 1 2 -3, b = (0 < 2), a = (2):
        // C_w = Theta^{(2)}_5 - e_1^z Theta^{(2)}_4 + e_2^z Theta^{(2)}_3.
        let w = bc(&[1, 2, -3]);
        let problem =
            SplitProblem::new(LieType::C, w.clone(), vec![k(2)], vec![k(0), k(2)]).unwrap();
        let terms = split_terms(&problem).unwrap();
        assert_eq!(terms.len(), 3);
        let got: Vec<(Vec<u32>, Vec<u32>, u64)> = terms
            .iter()
            .map(|t| (t.shapes[0].parts.clone(), t.shapes[1].parts.clone(), t.coeff))
            .collect();
        assert!(got.contains(&(vec![], vec![5], 1)));
        assert!(got.contains(&(vec![1], vec![4], 1)));
        assert!(got.contains(&(vec![2], vec![3], 1)));
        let lhs = double_schubert_full(&w, LieType::C).unwrap();
        assert_eq!(split_formula(&problem).unwrap(), lhs);
        // The other two sequences from the same example.
        for a_seq in [vec![k(1), k(2)], vec![k(0), k(2)]] {
            let problem = SplitProblem::new(LieType::C, w.clone(), a_seq, vec![k(0), k(2)]).unwrap();
            assert_eq!(split_formula(&problem).unwrap(), lhs);
        }
    }

    #[test]
    fn zero_split_structure() {
        // a_1 = 0 in type C: every middle factor is a Q-function.
        let w = bc(&[2, -1, 3]);
        let problem = SplitProblem::new(LieType::C, w.clone(), vec![k(0), k(1)], vec![k(0)]).unwrap();
        for t in split_terms(&problem).unwrap() {
            assert!(t.shapes[0].is_strict());
        }
        let lhs = double_schubert_full(&w, LieType::C).unwrap();
        assert_eq!(split_formula(&problem).unwrap(), lhs);
    }

    #[test]
    fn grassmannian_single_term() {
        // w = w_lambda k-Grassmannian, a = (k), b = (0): single term
        // Theta_lambda.
        use crate::shapes::{shape_to_grassmannian, Shape};
        let shape = Shape::untyped(vec![2], 1).unwrap();
        let w = shape_to_grassmannian(&shape, LieType::C, 2).unwrap();
        assert_eq!(w.values(), &[2, -1]);
        let problem = SplitProblem::new(LieType::C, w, vec![k(1)], vec![k(0)]).unwrap();
        let terms = split_terms(&problem).unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].coeff, 1);
        assert_eq!(terms[0].shapes[0], shape);
        assert_eq!(
            split_formula(&problem).unwrap(),
            crate::polyring::theta_lambda_mixed(&shape).unwrap()
        );
    }

    #[test]
    fn b1_hypothesis_enforced() {
        let w = bc(&[2, 1]);
        let problem = SplitProblem::new(LieType::C, w, vec![k(1)], vec![k(1)]).unwrap();
        assert!(matches!(split_formula(&problem), Err(crate::Error::Unsupported(_))));
    }

    #[test]
    fn theorem5_all_of_w2_and_s3() {
        // Type C on W_2, every admissible a-sequence with b_1 = 0.
        for w in all_elements(Group::BC, 2) {
            let lhs = double_schubert_full(&w, LieType::C).unwrap();
            for a_seq in admissible_sequences(&w, 2, LieType::C) {
                for b_seq in admissible_sequences(&w.inverse(), 2, LieType::C) {
                    if b_seq[0] != k(0) {
                        continue;
                    }
                    let problem =
                        SplitProblem::new(LieType::C, w.clone(), a_seq.clone(), b_seq.clone())
                            .unwrap();
                    assert_eq!(split_formula(&problem).unwrap(), lhs, "w={w} a={a_seq:?} b={b_seq:?}");
                }
            }
        }
        // Type A on S_3 (a_1 > 0; b_1 any).
        for w in all_elements(Group::A, 3) {
            let lhs = double_schubert_full(&w, LieType::A).unwrap();
            for a_seq in admissible_sequences(&w, 3, LieType::A) {
                for b_seq in admissible_sequences(&w.inverse(), 3, LieType::A) {
                    let problem =
                        SplitProblem::new(LieType::A, w.clone(), a_seq.clone(), b_seq.clone())
                            .unwrap();
                    assert_eq!(split_formula(&problem).unwrap(), lhs, "w={w} a={a_seq:?} b={b_seq:?}");
                }
            }
        }
        // Type D on W~_2 with b_1 = box.
        for w in all_elements(Group::D, 2) {
            let lhs = double_schubert_full(&w, LieType::D).unwrap();
            for a_seq in admissible_sequences(&w, 2, LieType::D) {
                for b_seq in admissible_sequences(&w.inverse(), 2, LieType::D) {
                    if b_seq[0] != KIndex::Box {
                        continue;
                    }
                    let problem =
                        SplitProblem::new(LieType::D, w.clone(), a_seq.clone(), b_seq.clone())
                            .unwrap();
                    assert_eq!(split_formula(&problem).unwrap(), lhs, "w={w} a={a_seq:?} b={b_seq:?}");
                }
            }
        }
    }

    #[test]
    fn refinement_leaves_formula_unchanged() {
        let w = bc(&[1, 2, -3]);
        let base = SplitProblem::new(LieType::C, w.clone(), vec![k(2)], vec![k(0), k(2)]).unwrap();
        let refined =
            SplitProblem::new(LieType::C, w.clone(), vec![k(0), k(1), k(2)], vec![k(0), k(2)])
                .unwrap();
        assert_eq!(split_formula(&base).unwrap(), split_formula(&refined).unwrap());
    }

    #[test]
    fn uniqueness_by_rank() {
        // The products appearing in a splitting formula are linearly
        // independent, so the coefficient family is unique.
        let w = bc(&[3, -1, -2]);
        let problem =
            SplitProblem::new(LieType::C, w.clone(), vec![k(1), k(2)], vec![k(0), k(1)]).unwrap();
        let terms = split_terms(&problem).unwrap();
        let q = problem.q();
        let polys: Vec<MixedPoly> = terms
            .iter()
            .map(|t| {
                let mut poly = MixedPoly::one();
                for (j, shape) in t.shapes.iter().enumerate() {
                    let slot = j + 1;
                    let factor = if slot < q {
                        crate::polyring::schur_super_mixed(
                            &shape.parts,
                            &[],
                            &problem.z_block(q + 1 - slot),
                        )
                    } else if slot == q {
                        crate::polyring::theta_lambda_mixed(shape).unwrap()
                    } else {
                        crate::polyring::schur_super_mixed(
                            &shape.parts,
                            &problem.y_block(slot - q + 1),
                            &[],
                        )
                    };
                    poly = poly.mul(&factor);
                }
                poly
            })
            .collect();
        assert_eq!(exact_rank(&polys), polys.len());
    }
}
