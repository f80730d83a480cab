use std::collections::BTreeSet;

use perfcone_core::cones::{catalog, catalog_cone, cone_dim, Cone, CATALOG_MAX_DIM};
use perfcone_core::invariants::{
    hilbert_free, koszul_check, koszul_check_direct, molien, sp_invariant_dim, KOSZUL_MAX_TOTAL,
};
use perfcone_core::linalg::IntMatrix;
use perfcone_core::stabilizers::{invariant_dim_degree1, stabilizer_action, sym2_action, GroupAction};
use perfcone_core::{Int, Rat, RatMatrix, TruncatedSeries};
use proptest::prelude::*;

fn named_cones(max_dim: usize) -> Vec<Cone> {
    catalog(max_dim).unwrap().into_iter().filter_map(|e| e.cone).filter(|c| cone_dim(c) <= max_dim).collect()
}

/// Number of orbits of degree-`k` monomials in `n` variables under the given
/// permutations; for a permutation action this is the invariant dimension.
fn monomial_orbits(perms: &[Vec<usize>], n: usize, k: usize) -> usize {
    fn monos(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            monos(n, k, v, cur, out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    monos(n, k, 0, &mut Vec::new(), &mut all);
    let canon = |m: &Vec<usize>| {
        perms
            .iter()
            .map(|p| {
                let mut img: Vec<usize> = m.iter().map(|&v| p[v]).collect();
                img.sort_unstable();
                img
            })
            .min()
            .unwrap()
    };
    all.iter().map(canon).collect::<BTreeSet<_>>().len()
}

fn permutation_matrices(n: usize) -> Vec<RatMatrix> {
    perfcone_core::linalg::permutations(n)
        .into_iter()
        .map(|p| RatMatrix::from_fn(n, n, |r, c| Rat::from_integer(Int::from(i64::from(p[c] == r)))))
        .collect()
}

#[test]
fn stabilizer_orders() {
    let order = |n: &str| stabilizer_action(&catalog_cone(n).unwrap()).unwrap().order();
    assert_eq!(order("K3"), 6);
    assert_eq!(order("C4"), 24);
    assert_eq!(order("NS"), 120);
    for (i, f) in [1, 2, 6, 24, 120].into_iter().enumerate() {
        assert_eq!(order(&vec!["1"; i + 1].join("+")), f);
    }
}

#[test]
fn codim_five_invariants() {
    let dims: Vec<usize> = ["K4-1", "K3+1+1", "C4+1", "C5", "1+1+1+1+1", "NS"]
        .iter()
        .map(|n| invariant_dim_degree1(&catalog_cone(n).unwrap()).unwrap())
        .collect();
    assert_eq!(dims, [2, 2, 2, 1, 1, 1]);
}

#[test]
fn actions_are_groups_with_consistent_fixed_spaces() {
    for c in named_cones(CATALOG_MAX_DIM) {
        let g = stabilizer_action(&c).unwrap();
        // closure is quadratic in the order; the 720-element groups are skipped
        assert!(g.order() > 120 || g.is_closed(), "{:?}", c.name());
        assert_eq!(g.fixed_dim().unwrap(), g.fixed_dim_by_kernel(), "{:?}", c.name());
    }
}

#[test]
fn molien_matches_monomial_orbit_counts() {
    for c in named_cones(CATALOG_MAX_DIM) {
        let g = stabilizer_action(&c).unwrap();
        let m = molien(&g, 4).unwrap();
        let n = c.generators().len();
        for k in 0..=4 {
            assert_eq!(m.coeff(k), Int::from(monomial_orbits(g.permutations(), n, k)), "{:?} degree {k}", c.name());
        }
        assert_eq!(m.coeff(1), Int::from(invariant_dim_degree1(&c).unwrap()));
    }
}

#[test]
fn molien_of_full_symmetric_actions_is_free() {
    for c in named_cones(CATALOG_MAX_DIM) {
        let g = stabilizer_action(&c).unwrap();
        let n = c.generators().len();
        if g.order() as u64 != (1..=n as u64).product::<u64>() {
            continue;
        }
        let degrees: Vec<usize> = (1..=n).collect();
        assert_eq!(molien(&g, 12).unwrap(), hilbert_free(&degrees, 12), "{:?}", c.name());
    }
}

#[test]
fn molien_of_permutation_groups() {
    let s3 = GroupAction::from_matrices(3, permutation_matrices(3)).unwrap();
    assert_eq!(molien(&s3, 6).unwrap(), TruncatedSeries::from_i64(&[1, 1, 2, 3, 4, 5, 7], 6));
    let s4 = GroupAction::from_matrices(4, permutation_matrices(4)).unwrap();
    assert_eq!(molien(&s4, 3).unwrap(), TruncatedSeries::from_i64(&[1, 1, 2, 3], 3));
    assert_eq!(molien(&GroupAction::trivial(2), 4).unwrap(), hilbert_free(&[1, 1], 4));
}

#[test]
fn koszul_strands_for_small_cones() {
    for c in named_cones(5) {
        let report = koszul_check(&c, KOSZUL_MAX_TOTAL).unwrap();
        assert!(report.passes(), "{:?}", c.name());
        let free = hilbert_free(&vec![1; report.m_rank - report.w_rank], KOSZUL_MAX_TOTAL);
        assert_eq!(report.bottom_row(), free.coeffs().to_vec(), "{:?}", c.name());
    }
}

#[test]
fn koszul_methods_agree_where_direct_is_feasible() {
    for name in ["1", "1+1", "K3", "1+1+1", "C4", "K3+1"] {
        let c = catalog_cone(name).unwrap();
        let direct = koszul_check_direct(&c, 4, 4000).unwrap();
        let adapted = koszul_check(&c, 4).unwrap();
        let n = direct.strands.len();
        assert!(n >= 3, "{name}");
        assert_eq!(direct.strands, adapted.strands[..n].to_vec(), "{name}");
    }
}

#[test]
fn sp_invariant_examples() {
    assert_eq!(sp_invariant_dim(1, 1), Int::from(1));
    assert_eq!(sp_invariant_dim(2, 1), Int::from(3));
    assert_eq!(sp_invariant_dim(4, 0), Int::from(1));
}

#[test]
fn sym2_action_is_a_homomorphism() {
    let a = IntMatrix::from_i64_rows(&[&[1, 1, 0], &[0, 1, 0], &[0, 2, 1]]);
    let b = IntMatrix::from_i64_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]]);
    let ab = a.mul(&b).unwrap();
    let lhs = sym2_action(&ab, 3).unwrap();
    let rhs = sym2_action(&a, 3).unwrap().mul(&sym2_action(&b, 3).unwrap()).unwrap();
    assert!(lhs == rhs || lhs == sym2_action(&b, 3).unwrap().mul(&sym2_action(&a, 3).unwrap()).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Moving a cone by a unimodular change of coordinates keeps its invariant series.
    #[test]
    fn molien_is_invariant_under_conjugation(
        idx in 0usize..13,
        ops in prop::collection::vec((0usize..5, 0usize..5, -2i64..=2), 1..6),
    ) {
        let cones = named_cones(5);
        let c = &cones[idx % cones.len()];
        let n = c.genus_rank();
        let mut p = IntMatrix::identity(n);
        for (i, j, k) in ops {
            let (i, j) = (i % n, j % n);
            if i != j {
                let mut e = IntMatrix::identity(n);
                e[(i, j)] = Int::from(k);
                p = e.mul(&p).unwrap();
            }
        }
        let moved = c.transform(&p).unwrap();
        let (g1, g2) = (stabilizer_action(c).unwrap(), stabilizer_action(&moved).unwrap());
        prop_assert_eq!(g1.order(), g2.order());
        prop_assert_eq!(molien(&g1, 6).unwrap(), molien(&g2, 6).unwrap());
    }
}
