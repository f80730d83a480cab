use std::collections::BTreeSet;

use perfcone_core::brackets::{
    algebra_dimension_bounds, cone_to_bracket, count_pure_strata, count_strata_monomials, enumerate_brackets, multiply,
    oracle_expand, BracketClass, ClassSum, Expression,
};
use perfcone_core::cones::catalog_cone;
use perfcone_core::{Int, Rat};

fn classes(list: &[&str]) -> BTreeSet<BracketClass> {
    list.iter().map(|s| s.parse().unwrap()).collect()
}

fn enumerated(d: u32) -> BTreeSet<BracketClass> {
    enumerate_brackets(d).unwrap().into_iter().collect()
}

const QUARTICS: &[&str] =
    &["{1^4}", "{1^32}", "{1^22^2}", "{1^223(123)}", "{1^223}", "{1234(123)}", "{1234(1234)}", "{1234}"];

const QUINTICS: &[&str] = &[
    "{1^5}",
    "{1^42}",
    "{1^32^2}",
    "{1^323}",
    "{1^323(123)}",
    "{1^22^23}",
    "{1^22^23(123)}",
    "{1^2234}",
    "{1^2234(1234)}",
    "{1^2234(123)}",
    "{1^2234(234)}",
    "{12345}",
    "{12345(12345)}",
    "{12345(1234)}",
    "{12345(123)}",
    "{12345(123,145)}",
];

const SEXTICS: &[&str] = &[
    "{1^6}",
    "{1^52}",
    "{1^42^2}",
    "{1^32^3}",
    "{1^423}",
    "{1^423(123)}",
    "{1^32^23}",
    "{1^32^23(123)}",
    "{1^22^23^2}",
    "{1^22^23^2(123)}",
    "{1^3234}",
    "{1^3234(1234)}",
    "{1^3234(123)}",
    "{1^3234(234)}",
    "{1^22^234}",
    "{1^22^234(1234)}",
    "{1^22^234(123)}",
    "{1^22^234(134)}",
    "{1^22345}",
    "{1^22345(12345)}",
    "{1^22345(1234)}",
    "{1^22345(2345)}",
    "{1^22345(123)}",
    "{1^22345(234)}",
    "{1^22345(123,145)}",
    "{1^22345(123,245)}",
    "{123456}",
    "{123456(123456)}",
    "{123456(12345)}",
    "{123456(1234)}",
    "{123456(1234,1256)}",
    "{123456(1234,156)}",
    "{123456(123)}",
    "{123456(123,145)}",
    "{123456(123,145,246)}",
    "{123456(123,456)}",
];

#[test]
fn class_counts_by_degree() {
    let counts: Vec<usize> = (1..=6).map(|d| enumerate_brackets(d).unwrap().len()).collect();
    assert_eq!(counts, [1, 2, 4, 8, 16, 36]);
    assert!(enumerate_brackets(99).is_err());
}

#[test]
fn listed_classes_match_enumeration() {
    assert_eq!(classes(QUARTICS), enumerated(4));
    assert_eq!(classes(QUINTICS), enumerated(5));
    assert_eq!(classes(SEXTICS), enumerated(6));
    assert_eq!(classes(SEXTICS).len(), SEXTICS.len());
}

#[test]
fn rendering_round_trips() {
    for d in 1..=6 {
        for c in enumerate_brackets(d).unwrap() {
            let again: BracketClass = c.to_string().parse().unwrap();
            assert_eq!(again, c, "{c}");
        }
    }
}

#[test]
fn beta_one_cubed() {
    let e: Expression = "{1}^3".parse().unwrap();
    let want: Expression = "{1^3} + 3{1^22} + 6{123} + 6{123(123)}".parse().unwrap();
    assert_eq!(e.evaluate().unwrap(), want.evaluate().unwrap());
}

#[test]
fn products_are_commutative_and_associative_in_low_degree() {
    let d1 = enumerate_brackets(1).unwrap();
    let d2 = enumerate_brackets(2).unwrap();
    for a in d1.iter().chain(&d2) {
        for b in d2.iter() {
            let (a, b) = (ClassSum::from(a.clone()), ClassSum::from(b.clone()));
            assert_eq!(multiply(&a, &b).unwrap(), multiply(&b, &a).unwrap());
        }
    }
    let x = ClassSum::from(d1[0].clone());
    for y in &d2 {
        let y = ClassSum::from(y.clone());
        let left = multiply(&multiply(&x, &y).unwrap(), &x).unwrap();
        let right = multiply(&x, &multiply(&y, &x).unwrap()).unwrap();
        assert_eq!(left, right);
    }
}

#[test]
fn structure_constants_agree_with_oracle() {
    let all: Vec<BracketClass> = (1..=4).flat_map(|d| enumerate_brackets(d).unwrap()).collect();
    let mut checked = 0;
    for (i, a) in all.iter().enumerate() {
        for b in &all[i..] {
            if a.degree() + b.degree() > 4 {
                continue;
            }
            let (a, b) = (ClassSum::from(a.clone()), ClassSum::from(b.clone()));
            assert_eq!(multiply(&a, &b).unwrap(), oracle_expand(4, &[a.clone(), b.clone()]).unwrap(), "{a} * {b}");
            checked += 1;
        }
    }
    assert_eq!(checked, 10);
}

#[test]
fn oracle_respects_coefficients() {
    let half = Rat::new(Int::from(1), Int::from(2));
    let one = ClassSum::from("{1}".parse::<BracketClass>().unwrap());
    let got = oracle_expand(3, &[one.scale(&half), one.clone()]).unwrap();
    assert_eq!(got, multiply(&one, &one).unwrap().scale(&half));
}

#[test]
fn strata_of_cones() {
    let cases = [
        ("1", "{1}"),
        ("1+1", "{12}"),
        ("K3", "{123(123)}"),
        ("1+1+1", "{123}"),
        ("K3+1", "{1234(123)}"),
        ("C4", "{1234(1234)}"),
        ("1+1+1+1", "{1234}"),
        ("1+1+1+1+1", "{12345}"),
        ("K3+1+1", "{12345(123)}"),
        ("C4+1", "{12345(1234)}"),
        ("K4-1", "{12345(123,145)}"),
        ("C5", "{12345(12345)}"),
        ("NS", "{12345(12345)}"),
    ];
    for (cone, class) in cases {
        let got = cone_to_bracket(&catalog_cone(cone).unwrap()).unwrap();
        assert_eq!(got, class.parse().unwrap(), "{cone}");
    }
}

#[test]
fn pure_strata_counts() {
    let ordered: Vec<Int> = (1..=6).map(|n| count_pure_strata(2 * n).unwrap()).collect();
    assert_eq!(ordered, [1, 2, 4, 8, 16, 37].map(Int::from));
    assert_eq!(count_strata_monomials(12).unwrap(), Int::from(36));
    assert!(count_pure_strata(3).is_err());
}

#[test]
fn degree_twelve_bounds() {
    let (boundary, strata) = algebra_dimension_bounds(12).unwrap();
    assert_eq!(boundary.lambda_part, Int::from(43));
    assert_eq!(boundary.pure_part, Int::from(36));
    assert_eq!(boundary.total, Int::from(79));
    assert_eq!(strata.total, Int::from(80));
    let (boundary, _) = algebra_dimension_bounds(10).unwrap();
    assert_eq!((boundary.lambda_part, boundary.total), (Int::from(21), Int::from(37)));
}
