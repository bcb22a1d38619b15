//! End-to-end verification suites: worked-example goldens and the theorem
//! cross-check batteries.  Each suite returns a short summary on success
//! and a diagnostic on the first failure.

use std::collections::BTreeMap;

use crate::formal::{theta_formal, FormalPoly, Symbol};
use crate::nilcox::{
    double_schubert_full, single_schubert_stable, stanley_function_cached, SchubertVars,
};
use crate::polyring::{
    eta_lambda_mixed, gen_q, q_basis_expand_sym, q_lambda_sym, theta_lambda_mixed,
};
use crate::rational::{q_int, q_one};
use crate::schubops::{divided_difference, geometrize, ideal_equal, Axis};
use crate::shapes::{
    all_k_strict_in_rectangle, all_typed_k_strict_in_rectangle, grassmannian_to_shape,
    shape_to_grassmannian, KIndex, LieType, Shape,
};
use crate::split::{admissible_sequences, split_formula, SplitProblem};
use crate::sym::{MixedPoly, VarB};
use crate::transition::{
    fg_tableau_count, kraskiewicz_count, stanley_coeffs_cached, transition_tree, TreeKind,
};
use crate::weyl::{all_elements, Group, Letter, SignedPermutation};

pub type SuiteOutcome = Result<String, String>;

fn fail(msg: impl Into<String>) -> SuiteOutcome {
    Err(msg.into())
}

fn formal_from(terms: &[(&[Symbol], i64)]) -> FormalPoly {
    let mut p = FormalPoly::zero();
    for (m, c) in terms {
        p.add_term(m.to_vec(), &q_int(*c));
    }
    p
}

fn bc(values: &[i64]) -> SignedPermutation {
    SignedPermutation::new(Group::BC, values.to_vec()).unwrap()
}

fn kx(i: u32) -> KIndex {
    KIndex::K(i)
}

fn yvar(i: u32) -> MixedPoly {
    MixedPoly::var(VarB::Y, i)
}

fn zvar(i: u32) -> MixedPoly {
    MixedPoly::var(VarB::Z, i)
}

fn q_fn(parts: &[u32]) -> MixedPoly {
    MixedPoly::from_sym(&q_lambda_sym(&parts.to_vec()))
}

fn theta_k(parts: &[u32], k: u32) -> MixedPoly {
    theta_lambda_mixed(&Shape::untyped(parts.to_vec(), k).unwrap()).unwrap()
}

/// Criterion 1: worked-example goldens.
pub fn suite_goldens() -> SuiteOutcome {
    use Symbol::{Tau, TauPrime, C};
    // Determinant expansion of [X_(5,4,2)].
    let spec = crate::formal::RaisingSpec {
        rows: 3,
        double_pairs: Default::default(),
        star: None,
    };
    let got = crate::formal::expand_raising(&spec, &[5, 4, 2]).map_err(|e| e.to_string())?;
    let want = formal_from(&[
        (&[C(5), C(4), C(2)], 1),
        (&[C(6), C(3), C(2)], -1),
        (&[C(5), C(5), C(1)], -1),
        (&[C(7), C(3), C(1)], 1),
        (&[C(6), C(5)], 1),
        (&[C(7), C(4)], -1),
    ]);
    if got != want {
        return fail("determinant expansion of c_(5,4,2) is wrong");
    }
    // Theta expansion of (3,1,1) at k = 1.
    let got = theta_formal(&Shape::untyped(vec![3, 1, 1], 1).unwrap()).map_err(|e| e.to_string())?;
    let want = formal_from(&[
        (&[C(3), C(1), C(1)], 1),
        (&[C(4), C(1)], -1),
        (&[C(3), C(2)], -1),
    ]);
    if got != want {
        return fail("theta expansion of (3,1,1) at k=1 is wrong");
    }
    // Typed eta expansion of (3,1,1), type 2, k = 1.
    let got = crate::formal::eta_formal(&Shape::new(vec![3, 1, 1], kx(1), 2).unwrap())
        .map_err(|e| e.to_string())?;
    let want = formal_from(&[
        (&[Tau(3), TauPrime(1), Tau(1)], 1),
        (&[Tau(3), TauPrime(1), TauPrime(1)], 1),
        (&[Tau(4), TauPrime(1)], -2),
        (&[Tau(3), Tau(2)], -1),
        (&[Tau(5)], 1),
    ]);
    if got != want {
        return fail("typed eta expansion of (3,1,1) is wrong");
    }
    // A_{321} = (y1-z1)(y1-z2)(y2-z1).
    let w321 = SignedPermutation::new(Group::A, vec![3, 2, 1]).unwrap();
    let got = double_schubert_full(&w321, LieType::A).map_err(|e| e.to_string())?;
    let want = yvar(1)
        .sub(&zvar(1))
        .mul(&yvar(1).sub(&zvar(2)))
        .mul(&yvar(2).sub(&zvar(1)));
    if got != want {
        return fail("A_321 is wrong");
    }
    // A_{w_0} = prod_{i+j <= n} (y_i - z_j) for n <= 5.
    for n in 2..=5usize {
        let w0 = SignedPermutation::longest_element(Group::A, n);
        let got = double_schubert_full(&w0, LieType::A).map_err(|e| e.to_string())?;
        let mut want = MixedPoly::one();
        for i in 1..=n as u32 {
            for j in 1..=n as u32 {
                if i + j <= n as u32 {
                    want = want.mul(&yvar(i).sub(&zvar(j)));
                }
            }
        }
        if got != want {
            return fail(format!("A_(longest) product formula fails at n = {n}"));
        }
    }
    // Splitting example (a): w = 3 -1 -2, b = (0,1).
    let w = bc(&[3, -1, -2]);
    let lhs = double_schubert_full(&w, LieType::C).map_err(|e| e.to_string())?;
    let p1 = SplitProblem::new(LieType::C, w.clone(), vec![kx(1), kx(2)], vec![kx(0), kx(1)])
        .map_err(|e| e.to_string())?;
    let rhs1 = theta_k(&[4, 2], 1)
        .add(&theta_k(&[3, 2], 1).mul(&yvar(2)))
        .sub(&zvar(1).mul(&theta_k(&[3, 2], 1)));
    if split_formula(&p1).map_err(|e| e.to_string())? != rhs1 || lhs != rhs1 {
        return fail("splitting example (a), a = (1,2), does not match");
    }
    let p2 = SplitProblem::new(
        LieType::C,
        w.clone(),
        vec![kx(0), kx(1), kx(2)],
        vec![kx(0), kx(1)],
    )
    .map_err(|e| e.to_string())?;
    let y1 = yvar(1);
    let inner = q_fn(&[3, 2])
        .add(&q_fn(&[3, 1]).mul(&y1))
        .add(&q_fn(&[2, 1]).mul(&y1).mul(&y1));
    let rhs2 = q_fn(&[4, 2])
        .add(&q_fn(&[4, 1]).mul(&y1))
        .add(&q_fn(&[3, 2]).mul(&y1))
        .add(&q_fn(&[3, 1]).mul(&y1).mul(&y1))
        .add(&inner.mul(&yvar(2)))
        .sub(&zvar(1).mul(&inner));
    if split_formula(&p2).map_err(|e| e.to_string())? != rhs2 || lhs != rhs2 {
        return fail("splitting example (a), a = (0,1,2), does not match");
    }
    // Splitting example (b): w = 1 2 -3, b = (0,2).
    let w = bc(&[1, 2, -3]);
    let lhs = double_schubert_full(&w, LieType::C).map_err(|e| e.to_string())?;
    let e1z = zvar(1).add(&zvar(2));
    let e2z = zvar(1).mul(&zvar(2));
    let pb1 = SplitProblem::new(LieType::C, w.clone(), vec![kx(2)], vec![kx(0), kx(2)])
        .map_err(|e| e.to_string())?;
    let rhs = theta_k(&[5], 2)
        .sub(&e1z.mul(&theta_k(&[4], 2)))
        .add(&e2z.mul(&theta_k(&[3], 2)));
    if split_formula(&pb1).map_err(|e| e.to_string())? != rhs || lhs != rhs {
        return fail("splitting example (b), a = (2), does not match");
    }
    let pb2 = SplitProblem::new(LieType::C, w.clone(), vec![kx(1), kx(2)], vec![kx(0), kx(2)])
        .map_err(|e| e.to_string())?;
    let y2 = yvar(2);
    let rhs = theta_k(&[5], 1)
        .add(&theta_k(&[4], 1).mul(&y2))
        .sub(&e1z.mul(&theta_k(&[4], 1).add(&theta_k(&[3], 1).mul(&y2))))
        .add(&e2z.mul(&theta_k(&[3], 1).add(&theta_k(&[2], 1).mul(&y2))));
    if split_formula(&pb2).map_err(|e| e.to_string())? != rhs || lhs != rhs {
        return fail("splitting example (b), a = (1,2), does not match");
    }
    let pb3 = SplitProblem::new(LieType::C, w.clone(), vec![kx(0), kx(2)], vec![kx(0), kx(2)])
        .map_err(|e| e.to_string())?;
    let e1y = yvar(1).add(&yvar(2));
    let e2y = yvar(1).mul(&yvar(2));
    let rhs = q_fn(&[5])
        .add(&q_fn(&[4]).mul(&e1y))
        .add(&q_fn(&[3]).mul(&e2y))
        .sub(&e1z.mul(&q_fn(&[4]).add(&q_fn(&[3]).mul(&e1y)).add(&q_fn(&[2]).mul(&e2y))))
        .add(&e2z.mul(&q_fn(&[3]).add(&q_fn(&[2]).mul(&e1y)).add(&q_fn(&[1]).mul(&e2y))));
    if split_formula(&pb3).map_err(|e| e.to_string())? != rhs || lhs != rhs {
        return fail("splitting example (b), a = (0,2), does not match");
    }
    // C_{3 -1 2 6 4 5}(X;Y_(1)) = Theta_{2111} + Theta_5 + 2 Theta_{311}
    //                           + Theta_{41} + Theta_{32}.
    let w = bc(&[3, -1, 2, 6, 4, 5]);
    let lhs = single_schubert_stable(&w, LieType::C)
        .map_err(|e| e.to_string())?
        .set_y_zero_above(1);
    let rhs = theta_k(&[2, 1, 1, 1], 1)
        .add(&theta_k(&[5], 1))
        .add(&theta_k(&[3, 1, 1], 1).scale(&q_int(2)))
        .add(&theta_k(&[4, 1], 1))
        .add(&theta_k(&[3, 2], 1));
    if lhs != rhs {
        return fail("mixed Stanley expansion of 3 -1 2 6 4 5 does not match");
    }
    Ok("worked-example goldens reproduced".to_string())
}

/// Criterion 2: bijection suite for rectangles up to n = 5.
pub fn suite_bijection(nmax: u32) -> SuiteOutcome {
    let mut count = 0usize;
    for n in 2..=nmax {
        for k in 0..n {
            for shape in all_k_strict_in_rectangle(k, n) {
                let w = shape_to_grassmannian(&shape, LieType::C, n).map_err(|e| e.to_string())?;
                if w.length() as u32 != shape.weight() {
                    return fail(format!("|lambda| != l(w) for {:?} (type C)", shape.parts));
                }
                let back = grassmannian_to_shape(&w, kx(k)).map_err(|e| e.to_string())?;
                if back != shape {
                    return fail(format!("roundtrip failed for {:?} (type C)", shape.parts));
                }
                count += 1;
            }
        }
        let mut ks = vec![KIndex::Box];
        for k in 1..n {
            ks.push(kx(k));
        }
        for k in ks {
            for shape in all_typed_k_strict_in_rectangle(k, n) {
                let w = shape_to_grassmannian(&shape, LieType::D, n).map_err(|e| e.to_string())?;
                if w.length() as u32 != shape.weight() {
                    return fail(format!("|lambda| != l(w) for {:?} (type D)", shape.parts));
                }
                let back = grassmannian_to_shape(&w, k).map_err(|e| e.to_string())?;
                if back != shape {
                    return fail(format!("roundtrip failed for {:?} (type D)", shape.parts));
                }
                count += 1;
            }
        }
    }
    // The two worked bijection examples.
    let shape = Shape::untyped(vec![7, 4, 3, 1, 1], 3).unwrap();
    let w = shape_to_grassmannian(&shape, LieType::C, 8).map_err(|e| e.to_string())?;
    if w != SignedPermutation::parse(Group::BC, "3,5,8,-4,-1,2,6,7").unwrap() {
        return fail("type C worked bijection example fails");
    }
    let shape = Shape::new(vec![7, 5, 3, 2], kx(3), 2).unwrap();
    let w = shape_to_grassmannian(&shape, LieType::D, 8).map_err(|e| e.to_string())?;
    if w != SignedPermutation::parse(Group::D, "-2,6,7,-5,-3,-1,4,8").unwrap() {
        return fail("type D worked bijection example fails");
    }
    Ok(format!("{count} shapes roundtripped with |lambda| = l(w)"))
}

/// Criterion 3: Grassmannian Schubert polynomials equal theta/eta
/// polynomials, for all shapes of W_nmax / W~_nmax.
pub fn suite_xtoy(nmax: u32) -> SuiteOutcome {
    let mut count = 0usize;
    for k in 0..nmax {
        for shape in all_k_strict_in_rectangle(k, nmax) {
            let w = shape_to_grassmannian(&shape, LieType::C, nmax).map_err(|e| e.to_string())?;
            let lhs = single_schubert_stable(&w, LieType::C)
                .map_err(|e| e.to_string())?
                .set_y_zero_above(k);
            let rhs = theta_lambda_mixed(&shape).map_err(|e| e.to_string())?;
            if lhs != rhs {
                return fail(format!("C_(w_lambda) != Theta_lambda for {:?}, k={k}", shape.parts));
            }
            count += 1;
        }
    }
    let mut ks = vec![KIndex::Box];
    for k in 1..nmax {
        ks.push(kx(k));
    }
    for k in ks {
        for shape in all_typed_k_strict_in_rectangle(k, nmax) {
            let w = shape_to_grassmannian(&shape, LieType::D, nmax).map_err(|e| e.to_string())?;
            let lhs = single_schubert_stable(&w, LieType::D)
                .map_err(|e| e.to_string())?
                .set_y_zero_above(k.as_int());
            let rhs = eta_lambda_mixed(&shape).map_err(|e| e.to_string())?;
            if lhs != rhs {
                return fail(format!(
                    "D_(w_lambda) != H_lambda for {:?}, k={k:?}, type {}",
                    shape.parts, shape.type_tag
                ));
            }
            count += 1;
        }
    }
    Ok(format!("{count} Grassmannian elements matched their theta/eta polynomials"))
}

/// Criterion 4: the divided difference characterization.
pub fn suite_uniq(n: usize) -> SuiteOutcome {
    let mut checks = 0usize;
    for (group, lie) in [(Group::BC, LieType::C), (Group::A, LieType::A), (Group::D, LieType::D)]
    {
        let rank = if group == Group::A { n + 1 } else { n };
        for w in all_elements(group, rank) {
            let cw = double_schubert_full(&w, lie).map_err(|e| e.to_string())?;
            let constant = cw.terms.get(&(vec![], vec![])).cloned().unwrap_or_else(
                || q_int(0),
            );
            let want = if w.is_identity() { q_one() } else { q_int(0) };
            if constant != want {
                return fail(format!("constant term of {w} is wrong"));
            }
            for r in w.simple_letters() {
                let dy = divided_difference(&cw, Axis::Y, r).map_err(|e| e.to_string())?;
                let ws = w.right_mul_simple(r);
                let want = if ws.length() < w.length() {
                    double_schubert_full(&ws, lie).map_err(|e| e.to_string())?
                } else {
                    MixedPoly::zero()
                };
                if dy != want {
                    return fail(format!("partial^y_{r} fails at {w} ({lie:?})"));
                }
                let dz = divided_difference(&cw, Axis::Z, r).map_err(|e| e.to_string())?;
                let sw = w.left_mul_simple(r);
                let want = if sw.length() < w.length() {
                    double_schubert_full(&sw, lie).map_err(|e| e.to_string())?
                } else {
                    MixedPoly::zero()
                };
                if dz != want {
                    return fail(format!("partial^z_{r} fails at {w} ({lie:?})"));
                }
                checks += 2;
            }
        }
    }
    Ok(format!("{checks} divided difference equations verified"))
}

/// Criterion 5: splitting formulas equal double Schubert polynomials.
pub fn suite_split(n: usize) -> SuiteOutcome {
    let mut checks = 0usize;
    // Type C with b_1 = 0, every admissible a-sequence.
    for w in all_elements(Group::BC, n) {
        let lhs = double_schubert_full(&w, LieType::C).map_err(|e| e.to_string())?;
        let binv_min: Vec<KIndex> = minimal_b(&w, LieType::C);
        for a_seq in admissible_sequences(&w, n as u32, LieType::C) {
            let problem = SplitProblem::new(LieType::C, w.clone(), a_seq.clone(), binv_min.clone())
                .map_err(|e| e.to_string())?;
            let rhs = split_formula(&problem).map_err(|e| e.to_string())?;
            if rhs != lhs {
                return fail(format!("type C splitting fails at w={w}, a={a_seq:?}"));
            }
            checks += 1;
        }
    }
    // Type A on S_{n+1}.
    for w in all_elements(Group::A, n + 1) {
        let lhs = double_schubert_full(&w, LieType::A).map_err(|e| e.to_string())?;
        let b = minimal_b(&w, LieType::A);
        for a_seq in admissible_sequences(&w, n as u32 + 1, LieType::A) {
            let problem = SplitProblem::new(LieType::A, w.clone(), a_seq.clone(), b.clone())
                .map_err(|e| e.to_string())?;
            let rhs = split_formula(&problem).map_err(|e| e.to_string())?;
            if rhs != lhs {
                return fail(format!("type A splitting fails at w={w}, a={a_seq:?}"));
            }
            checks += 1;
        }
    }
    // Type D with b_1 = box.
    for w in all_elements(Group::D, n) {
        let lhs = double_schubert_full(&w, LieType::D).map_err(|e| e.to_string())?;
        let b = minimal_b(&w, LieType::D);
        for a_seq in admissible_sequences(&w, n as u32, LieType::D) {
            let problem = SplitProblem::new(LieType::D, w.clone(), a_seq.clone(), b.clone())
                .map_err(|e| e.to_string())?;
            let rhs = split_formula(&problem).map_err(|e| e.to_string())?;
            if rhs != lhs {
                return fail(format!("type D splitting fails at w={w}, a={a_seq:?}"));
            }
            checks += 1;
        }
    }
    Ok(format!("{checks} splitting identities verified"))
}

/// Minimal b-sequence: the descents of the inverse, forced to start at 0
/// (type C) or box (type D).
pub fn minimal_b(w: &SignedPermutation, lie_type: LieType) -> Vec<KIndex> {
    let mut b: Vec<KIndex> = w
        .inverse()
        .descents()
        .into_iter()
        .map(|r| match r {
            Letter::Box => KIndex::Box,
            Letter::Idx(i) => kx(i),
        })
        .collect();
    match lie_type {
        LieType::A => {
            if b.is_empty() {
                b.push(kx(1));
            }
        }
        LieType::B | LieType::C => {
            if !b.contains(&kx(0)) {
                b.insert(0, kx(0));
            }
        }
        LieType::D => {
            if !b.contains(&KIndex::Box) {
                b.insert(0, KIndex::Box);
            }
            // A descent at 1 together with box stays; sequences are ordered
            // by numeric value with box first.
            b.sort();
            b.dedup();
        }
    }
    b
}

/// Minimal a-sequence: the descent set itself.
pub fn minimal_a(w: &SignedPermutation, lie_type: LieType) -> Vec<KIndex> {
    let mut a: Vec<KIndex> = w
        .descents()
        .into_iter()
        .map(|r| match r {
            Letter::Box => KIndex::Box,
            Letter::Idx(i) => kx(i),
        })
        .collect();
    if a.is_empty() {
        a.push(match lie_type {
            LieType::A => kx(1),
            LieType::D => KIndex::Box,
            _ => kx(0),
        });
    }
    a
}

/// Criterion 6: transition versus tableau oracles and the F = sum e Q
/// expansion.
pub fn suite_transition(n: usize) -> SuiteOutcome {
    let mut checks = 0usize;
    // Eq. FtoQ on W_n.
    for w in all_elements(Group::BC, n) {
        let f = stanley_function_cached(&w).map_err(|e| e.to_string())?;
        let expansion = q_basis_expand_sym(&f).map_err(|e| e.to_string())?;
        let counts = stanley_coeffs_cached(&w, kx(0)).map_err(|e| e.to_string())?;
        let as_map: BTreeMap<Vec<u32>, crate::rational::Q> = counts
            .iter()
            .map(|(s, c)| (s.parts.clone(), q_int(*c as i64)))
            .collect();
        if expansion != as_map {
            return fail(format!("F_w != sum e^w_lambda Q_lambda at w = {w}"));
        }
        checks += 1;
    }
    // Fomin-Greene counts on S_{n+2}.
    for w in all_elements(Group::A, n + 2) {
        let counts = stanley_coeffs_cached(&w, kx(0)).map_err(|e| e.to_string())?;
        for parts in crate::sym::partitions_bounded(w.length() as u32, 10, 10) {
            let sh = Shape::untyped(parts.clone(), parts.first().copied().unwrap_or(0)).unwrap();
            let from_tree = counts
                .iter()
                .find(|(s, _)| s.parts == parts)
                .map(|(_, c)| *c)
                .unwrap_or(0);
            let from_tableaux = fg_tableau_count(&w, &sh).map_err(|e| e.to_string())?;
            if from_tree != from_tableaux {
                return fail(format!("Fomin-Greene mismatch at w = {w}, lambda = {parts:?}"));
            }
            checks += 1;
        }
    }
    // Kraskiewicz counts on W_n.
    for w in all_elements(Group::BC, n) {
        let counts = stanley_coeffs_cached(&w, kx(0)).map_err(|e| e.to_string())?;
        for parts in crate::sym::partitions_bounded(w.length() as u32, 12, 12) {
            if !parts.windows(2).all(|p| p[0] > p[1]) {
                continue;
            }
            let sh = Shape::untyped(parts.clone(), 0).unwrap();
            let from_tree = counts
                .iter()
                .find(|(s, _)| s.parts == parts)
                .map(|(_, c)| *c)
                .unwrap_or(0);
            if kraskiewicz_count(&w, &sh).map_err(|e| e.to_string())? != from_tree {
                return fail(format!("Kraskiewicz mismatch at w = {w}, lambda = {parts:?}"));
            }
            checks += 1;
        }
    }
    // Type D: <D(X), w> expanded in the P basis has the d^w coefficients.
    for w in all_elements(Group::D, n) {
        let f = stanley_function_cached(&w).map_err(|e| e.to_string())?;
        let expansion = crate::polyring::p_basis_expand_sym(&f).map_err(|e| e.to_string())?;
        let counts = stanley_coeffs_cached(&w, KIndex::Box).map_err(|e| e.to_string())?;
        let as_map: BTreeMap<Vec<u32>, crate::rational::Q> = counts
            .iter()
            .map(|(s, c)| (s.parts.clone(), q_int(*c as i64)))
            .collect();
        if expansion != as_map {
            return fail(format!("P-basis expansion mismatch at w = {w}"));
        }
        checks += 1;
    }
    // The 143265 figure: three leaves.
    let w = SignedPermutation::new(Group::A, vec![1, 4, 3, 2, 6, 5]).unwrap();
    let tree = transition_tree(&w, TreeKind::A, kx(0)).map_err(|e| e.to_string())?;
    if tree.leaves.len() != 3 {
        return fail("the 143265 tree does not have three leaves");
    }
    Ok(format!("{checks} transition cross-checks passed"))
}

/// Criterion 7: relations, Pfaffian agreement, interpolation.
pub fn suite_relations() -> SuiteOutcome {
    // (crels) at k = 0: q_r^2 + 2 sum (-1)^i q_{r+i} q_{r-i} = 0 in 8
    // variables for r <= 6.
    for r in 1..=6i64 {
        let m = 8;
        let mut acc = gen_q(r, m).mul(&gen_q(r, m));
        for i in 1..=r {
            let prod = gen_q(r + i, m).mul(&gen_q(r - i, m));
            let signed = if i % 2 == 1 { prod.scale(&q_int(-2)) } else { prod.scale(&q_int(2)) };
            acc = acc.add(&signed);
        }
        if !acc.is_zero() {
            return fail(format!("q-relation fails for r = {r} in 8 variables"));
        }
    }
    // Pfaffian = raising operator for strict lambda, |lambda| <= 10, l <= 4.
    let mut count = 0usize;
    for weight in 0..=10u32 {
        for parts in crate::sym::partitions_bounded(weight, 10, 4) {
            if !parts.windows(2).all(|p| p[0] > p[1]) {
                continue;
            }
            let sh = Shape::untyped(parts.clone(), 0).unwrap();
            if theta_formal(&sh).map_err(|e| e.to_string())?
                != crate::formal::q_pfaffian(&sh).map_err(|e| e.to_string())?
            {
                return fail(format!("Pfaffian mismatch for lambda = {parts:?}"));
            }
            count += 1;
        }
    }
    // Interpolation regimes.
    let sh = Shape::untyped(vec![2, 2, 1], 3).unwrap();
    let det = {
        let spec = crate::formal::RaisingSpec {
            rows: 3,
            double_pairs: Default::default(),
            star: None,
        };
        crate::formal::expand_raising(&spec, &[2, 2, 1]).map_err(|e| e.to_string())?
    };
    if theta_formal(&sh).map_err(|e| e.to_string())? != det {
        return fail("Jacobi-Trudi regime of the interpolation fails");
    }
    let sh = Shape::untyped(vec![5, 3, 2], 1).unwrap();
    let pf = crate::formal::q_pfaffian(&Shape::untyped(vec![5, 3, 2], 0).unwrap())
        .map_err(|e| e.to_string())?;
    if theta_formal(&sh).map_err(|e| e.to_string())? != pf {
        return fail("Pfaffian regime of the interpolation fails");
    }
    Ok(format!("relations, {count} Pfaffian agreements, and both interpolation regimes hold"))
}

/// Criterion 8: geometrization round trip through the locus formulas.
pub fn suite_geometrization(n: usize) -> SuiteOutcome {
    let mut checks = 0usize;
    // Type C at rank n.
    for w in all_elements(Group::BC, n) {
        let a = minimal_a(&w, LieType::C);
        let b = minimal_b(&w, LieType::C);
        let formula = crate::locus::emit_locus(&w, LieType::C, n as u32, &a, &b)
            .map_err(|e| e.to_string())?;
        let roots = crate::locus::standard_roots(LieType::C, n as u32, &a);
        let lhs = crate::locus::evaluate_locus(&formula, &roots).map_err(|e| e.to_string())?;
        let rhs = geometrize(
            &double_schubert_full(&w, LieType::C).map_err(|e| e.to_string())?,
            LieType::C,
            n,
        )
        .map_err(|e| e.to_string())?;
        if !ideal_equal(&lhs, &rhs, LieType::C, n).map_err(|e| e.to_string())? {
            return fail(format!("type C locus round trip fails at w = {w}"));
        }
        checks += 1;
    }
    // Type D at rank n.
    for w in all_elements(Group::D, n) {
        let a = minimal_a(&w, LieType::D);
        let b = minimal_b(&w, LieType::D);
        let formula = crate::locus::emit_locus(&w, LieType::D, n as u32, &a, &b)
            .map_err(|e| e.to_string())?;
        let roots = crate::locus::standard_roots(LieType::D, n as u32, &a);
        let lhs = crate::locus::evaluate_locus(&formula, &roots).map_err(|e| e.to_string())?;
        let rhs = geometrize(
            &double_schubert_full(&w, LieType::D).map_err(|e| e.to_string())?,
            LieType::D,
            n,
        )
        .map_err(|e| e.to_string())?;
        if !ideal_equal(&lhs, &rhs, LieType::D, n).map_err(|e| e.to_string())? {
            return fail(format!("type D locus round trip fails at w = {w}"));
        }
        checks += 1;
    }
    // Type A on S_{n+1}.
    for w in all_elements(Group::A, n + 1) {
        let a = minimal_a(&w, LieType::A);
        let b = minimal_b(&w, LieType::A);
        let formula = crate::locus::emit_locus(&w, LieType::A, n as u32 + 1, &a, &b)
            .map_err(|e| e.to_string())?;
        let roots = crate::locus::standard_roots(LieType::A, n as u32 + 1, &a);
        let lhs = crate::locus::evaluate_locus(&formula, &roots).map_err(|e| e.to_string())?;
        let rhs = geometrize(
            &double_schubert_full(&w, LieType::A).map_err(|e| e.to_string())?,
            LieType::A,
            n + 1,
        )
        .map_err(|e| e.to_string())?;
        if !ideal_equal(&lhs, &rhs, LieType::A, n + 1).map_err(|e| e.to_string())? {
            return fail(format!("type A locus round trip fails at w = {w}"));
        }
        checks += 1;
    }
    Ok(format!("{checks} locus formulas matched the geometrized Schubert polynomials"))
}

/// Extra nilCoxeter invariants at rank 3: the factorization identity and
/// the mixed Stanley expansion.
pub fn suite_nilcox_identities(n: usize) -> SuiteOutcome {
    use crate::weyl::{left_factor_pairs, SlotPredicate};
    let mut checks = 0usize;
    // C_w(X;Y,Z) = sum over reduced uv = w, u in S_infty, of
    // A_{u^{-1}}(-Z) C_v(X;Y).
    for w in all_elements(Group::BC, n) {
        let lhs = double_schubert_full(&w, LieType::C).map_err(|e| e.to_string())?;
        let mut rhs = MixedPoly::zero();
        for (u, v) in left_factor_pairs(&w) {
            if !SlotPredicate::symmetric().matches(&u) {
                continue;
            }
            let ua = u.inverse().retype(Group::A).map_err(|e| e.to_string())?;
            let au = single_schubert_stable(&ua, LieType::A).map_err(|e| e.to_string())?;
            let au_negz = au.map_yz(|(b, i)| {
                debug_assert_eq!(b, VarB::Y);
                ((VarB::Z, i), -1)
            });
            let cv = single_schubert_stable(&v, LieType::C).map_err(|e| e.to_string())?;
            rhs = rhs.add(&au_negz.mul(&cv));
        }
        if lhs != rhs {
            return fail(format!("factorization identity fails at w = {w}"));
        }
        checks += 1;
    }
    // C_w(X;Y_(k)) = sum e^w_lambda Theta_lambda(X;Y_(k)) for w increasing
    // up to k.
    for w in all_elements(Group::BC, n) {
        for k in 0..n as u32 {
            if !crate::transition::increasing_up_to(&w, kx(k)) {
                continue;
            }
            let lhs = single_schubert_stable(&w, LieType::C)
                .map_err(|e| e.to_string())?
                .set_y_zero_above(k);
            let mut rhs = MixedPoly::zero();
            for (shape, c) in stanley_coeffs_cached(&w, kx(k)).map_err(|e| e.to_string())? {
                let theta = theta_lambda_mixed(&shape).map_err(|e| e.to_string())?;
                rhs = rhs.add(&theta.scale(&q_int(c as i64)));
            }
            if lhs != rhs {
                return fail(format!("mixed Stanley expansion fails at w = {w}, k = {k}"));
            }
            checks += 1;
        }
    }
    // Type D: D_w(X;Y_(k)) = sum d^w_lambda H_lambda for w increasing up
    // to k.
    for w in all_elements(Group::D, n) {
        let mut ks = vec![KIndex::Box, kx(1)];
        for k in 2..n as u32 {
            ks.push(kx(k));
        }
        for k in ks {
            if !crate::transition::increasing_up_to(&w, k) {
                continue;
            }
            let lhs = single_schubert_stable(&w, LieType::D)
                .map_err(|e| e.to_string())?
                .set_y_zero_above(k.as_int());
            let mut rhs = MixedPoly::zero();
            for (shape, c) in stanley_coeffs_cached(&w, k).map_err(|e| e.to_string())? {
                let eta = eta_lambda_mixed(&shape).map_err(|e| e.to_string())?;
                rhs = rhs.add(&eta.scale(&q_int(c as i64)));
            }
            if lhs != rhs {
                return fail(format!("type D mixed Stanley expansion fails at w = {w}, k = {k:?}"));
            }
            checks += 1;
        }
    }
    Ok(format!("{checks} nilCoxeter identities verified"))
}

/// Criterion 9: stability and x-symmetry.
pub fn suite_stability(n: usize) -> SuiteOutcome {
    let mut checks = 0usize;
    for w in all_elements(Group::BC, n) {
        let small = double_schubert_full(&w, LieType::C).map_err(|e| e.to_string())?;
        let big = double_schubert_full(&w.to_rank(n + 1).unwrap(), LieType::C)
            .map_err(|e| e.to_string())?;
        if small != big {
            return fail(format!("stability fails at w = {w}"));
        }
        checks += 1;
    }
    for w in all_elements(Group::D, n) {
        let small = double_schubert_full(&w, LieType::D).map_err(|e| e.to_string())?;
        let big = double_schubert_full(&w.to_rank(n + 1).unwrap(), LieType::D)
            .map_err(|e| e.to_string())?;
        if small != big {
            return fail(format!("type D stability fails at w = {w}"));
        }
        checks += 1;
    }
    // Concrete x-symmetry of a sampled polynomial.
    let w = bc(&[3, -1, -2]);
    let conc = crate::nilcox::double_schubert(&w, LieType::C, w.length(), true, true)
        .map_err(|e| e.to_string())?;
    if !conc.symmetric_in_range(0, w.length()) {
        return fail("concrete double Schubert polynomial is not symmetric in x");
    }
    // Extra x-variables do not change the polynomial (stable representation
    // restricted at larger m agrees after renaming).
    let stable = double_schubert_full(&w, LieType::C).map_err(|e| e.to_string())?;
    let bigger = crate::nilcox::double_schubert_stable(
        &w,
        LieType::C,
        SchubertVars { x_blocks: w.length() + 2, with_y: true, with_z: true },
    )
    .map_err(|e| e.to_string())?;
    if stable != bigger {
        return fail("adding x-variables changed the stable polynomial");
    }
    checks += 2;
    Ok(format!("{checks} stability and symmetry checks passed"))
}

/// Named suites in acceptance order.
pub fn suite_names() -> Vec<&'static str> {
    vec![
        "goldens",
        "bijection",
        "xtoy",
        "uniq",
        "dbleacd",
        "transition",
        "relations",
        "geometrization",
        "stability",
        "nilcox",
    ]
}

/// Runs one suite at its default (acceptance) size, or a scaled-down size
/// via `n`.
pub fn run_suite(name: &str, n: Option<u32>) -> SuiteOutcome {
    match name {
        "goldens" => suite_goldens(),
        "bijection" => suite_bijection(n.unwrap_or(5)),
        "xtoy" => suite_xtoy(n.unwrap_or(4)),
        "uniq" => suite_uniq(n.unwrap_or(3) as usize),
        "dbleacd" => suite_split(n.unwrap_or(3) as usize),
        "transition" => suite_transition(n.unwrap_or(3) as usize),
        "relations" => suite_relations(),
        "geometrization" => suite_geometrization(n.unwrap_or(3) as usize),
        "stability" => suite_stability(n.unwrap_or(3) as usize),
        "nilcox" => suite_nilcox_identities(n.unwrap_or(3) as usize),
        other => Err(format!("unknown suite '{other}'")),
    }
}
