use perfcone_core::cones::{
    catalog, catalog_cone, cone_dim, cone_rank, cones_equivalent, graphical_cone, is_basic, is_matroidal,
    is_simplicial, orth_lattice, Cone, Graph,
};
use perfcone_core::linalg::{ints, IntMatrix};
use perfcone_core::Error;
use proptest::prelude::*;

#[test]
fn named_invariants() {
    let k3 = catalog_cone("K3").unwrap();
    assert_eq!((cone_dim(&k3), cone_rank(&k3)), (3, 2));
    assert!(is_basic(&k3));
    assert_eq!(cone_rank(&catalog_cone("C4").unwrap()), 3);
    assert_eq!(cone_rank(&catalog_cone("NS").unwrap()), 5);
    for i in 1..=6 {
        let name = vec!["1"; i].join("+");
        let c = catalog_cone(&name).unwrap();
        assert_eq!((cone_dim(&c), cone_rank(&c)), (i, i));
        assert!(is_matroidal(&c));
    }
}

#[test]
fn catalog_counts_per_dimension() {
    let cat = catalog(6).unwrap();
    let count = |d: usize| cat.iter().filter(|e| e.dim == d).map(|e| e.multiplicity).sum::<usize>();
    assert_eq!((1..=6).map(count).collect::<Vec<_>>(), [1, 1, 2, 3, 6, 13]);
    assert!(matches!(catalog(7), Err(Error::CatalogIncomplete(_))));
}

#[test]
fn catalog_flags_and_bounds() {
    let cat = catalog(6).unwrap();
    for e in &cat {
        assert!(e.rank <= e.dim && e.dim <= e.rank * (e.rank + 1) / 2, "{}", e.name);
        if e.matroidal == Some(true) {
            assert_eq!(e.simplicial, Some(true), "{}", e.name);
        }
        if let Some(ok) = e.flags_consistent() {
            assert!(ok, "{}", e.name);
        }
        if e.dim <= 5 {
            assert_eq!(e.simplicial, Some(true));
            assert_eq!(e.matroidal, Some(e.name != "NS"), "{}", e.name);
        }
    }
    let genus = |r: usize, m: bool| cat.iter().filter(|e| e.dim == 6 && e.rank == r && e.matroidal == Some(m)).count();
    assert_eq!((genus(3, true), genus(4, true), genus(5, true), genus(5, false)), (1, 4, 4, 1));
    assert_eq!((genus(6, true), genus(6, false)), (1, 2));
}

#[test]
fn catalog_representatives_are_inequivalent() {
    let cones: Vec<Cone> = catalog(6).unwrap().into_iter().filter_map(|e| e.cone).collect();
    for (a, ca) in cones.iter().enumerate() {
        for (b, cb) in cones.iter().enumerate() {
            if ca.genus_rank() != cb.genus_rank() {
                continue;
            }
            assert_eq!(cones_equivalent(ca, cb).is_some(), a == b, "{:?} {:?}", ca.name(), cb.name());
        }
    }
}

#[test]
fn equivalence_witness_maps_generators() {
    let k3 = catalog_cone("K3").unwrap();
    let graph = graphical_cone(&Graph::complete(3), 0).unwrap();
    let q = cones_equivalent(&k3, &graph).unwrap();
    // ξ ↦ ᵗQ⁻¹ ξ sends generators onto generators
    let p = perfcone_core::linalg::invert_unimodular(&q).unwrap().transpose();
    let image = k3.transform(&p).unwrap();
    let mut a: Vec<_> = image.generators().to_vec();
    let mut b: Vec<_> = graph.generators().to_vec();
    a.sort();
    b.sort();
    assert_eq!(a, b);
    assert_eq!(cones_equivalent(&k3, &k3).unwrap(), IntMatrix::identity(2));
    let c5 = catalog_cone("C5").unwrap();
    let ns = catalog_cone("NS").unwrap();
    assert!(c5.genus_rank() != ns.genus_rank() || cones_equivalent(&c5, &ns).is_none());
}

#[test]
fn graphical_cones() {
    let c4 = graphical_cone(&Graph::cycle(4), 0).unwrap();
    assert!(cones_equivalent(&c4, &catalog_cone("C4").unwrap()).is_some());
    let edge = graphical_cone(&Graph::new(2, &[(0, 1)]).unwrap(), 0).unwrap();
    assert_eq!(edge.generators(), &[ints(&[1])]);
    assert!(matches!(graphical_cone(&Graph::new(4, &[(0, 1), (2, 3)]).unwrap(), 0), Err(Error::DisconnectedGraph)));
}

#[test]
fn orth_lattices() {
    let std2 = catalog_cone("1+1").unwrap();
    assert_eq!(orth_lattice(&std2), vec![ints(&[0, 0, 1])]);
    assert!(orth_lattice(&catalog_cone("K3").unwrap()).is_empty());
    assert_eq!(orth_lattice(&catalog_cone("1+1+1").unwrap()).len(), 3);
}

#[test]
fn dependent_generators() {
    let c = Cone::from_i64(2, &[&[1, 0], &[0, 1], &[1, 1], &[1, -1]]).unwrap();
    assert!(!is_simplicial(&c));
    assert!(!is_basic(&c));
}

/// Random trees on `k + 1` vertices, each vertex attached to an earlier one.
fn tree() -> impl Strategy<Value = Graph> {
    (1usize..=5).prop_flat_map(|k| {
        prop::collection::vec(any::<prop::sample::Index>(), k).prop_map(move |parents| {
            let edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(v, p)| (p.index(v + 1), v + 1)).collect();
            Graph::new(k + 1, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn trees_give_standard_cones(t in tree()) {
        let k = t.vertices() - 1;
        let c = graphical_cone(&t, 0).unwrap();
        let name = vec!["1"; k].join("+");
        prop_assert!(cones_equivalent(&c, &catalog_cone(&name).unwrap()).is_some());
    }
}
