#[test]
fn index_set_matches_bijection_type_d() {
    use schubert_core::shapes::*;
    for n in 2..=6u32 {
        for kk in 1..n {
            let k = KIndex::K(kk);
            for shape in all_typed_k_strict_in_rectangle(k, n) {
                let w = shape_to_grassmannian(&shape, LieType::D, n).unwrap();
                let m = n - kk;
                let p_from_w: Vec<u32> = (1..=m).map(|j| {
                    let v = w.value_at((kk + j) as usize);
                    (if v < 0 { n as i64 + v + 1 } else { n as i64 + v }) as u32
                }).collect();
                let p = index_set(&shape, n, LieType::D).unwrap();
                assert_eq!(p, p_from_w, "n={n} k={kk} lam={:?} t={}", shape.parts, shape.type_tag);
            }
        }
    }
}
