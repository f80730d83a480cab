use perfcone::catalog_text::{parse_catalog, write_catalog, write_entry};
use perfcone_core::cones::{catalog, CatalogEntry, Cone, CATALOG_MAX_DIM};
use perfcone_core::Int;
use proptest::prelude::*;

#[test]
fn shipped_catalog_round_trips() {
    let shipped = catalog(CATALOG_MAX_DIM).unwrap();
    let text = write_catalog(&shipped);
    let parsed = parse_catalog(&text).unwrap();
    assert_eq!(parsed, shipped);
    assert_eq!(write_catalog(&parsed), text);
}

#[test]
fn placeholder_block() {
    let e = catalog(CATALOG_MAX_DIM).unwrap().into_iter().find(|e| e.name == "N6a").unwrap();
    assert_eq!(
        write_entry(&e),
        "placeholder N6a\nrank 6\ndim 6\nmatroidal false\nsimplicial true\nbasic true\nseries 1\nmultiplicity 1\nend\n"
    );
}

#[test]
fn unknown_flags_survive() {
    let mut e = catalog(2).unwrap().pop().unwrap();
    e.basic = None;
    e.multiplicity = 3;
    let text = write_entry(&e);
    assert!(text.contains("basic unknown\n"));
    assert_eq!(parse_catalog(&text).unwrap(), vec![e]);
}

fn small_cone() -> impl Strategy<Value = Option<Cone>> {
    (1usize..=4)
        .prop_flat_map(|r| (Just(r), prop::collection::vec(prop::collection::vec(-3i64..=3, r), r..=r + 3)))
        .prop_map(|(r, gens)| {
            Cone::new(r, gens.into_iter().map(|g| g.into_iter().map(Int::from).collect()).collect()).ok()
        })
}

proptest! {
    #[test]
    fn random_cones_round_trip(cone in small_cone()) {
        let Some(cone) = cone else { return Ok(()) };
        let e = CatalogEntry::from_cone("x", cone);
        let text = write_entry(&e);
        let parsed = parse_catalog(&text).unwrap();
        prop_assert_eq!(&parsed, &vec![e]);
        prop_assert_eq!(write_catalog(&parsed), text);
    }
}
