//! The acceptance criteria as runnable checks.
//!
//! Criteria 1 and 2 expect exactly one disagreement with the reference
//! degree-12 table (the `β_2^0` cell); it is reported as a flag and does not
//! fail the criterion. Any other disagreement does.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use perfcone_core::betti::{
    assemble, consistency_report, lambda_series, std_identity_check, Space, MAX_CATALOG_DEGREE,
};
use perfcone_core::brackets::{
    algebra_dimension_bounds, cone_to_bracket, count_pure_strata, enumerate_brackets, multiply, oracle_expand,
    BracketClass, ClassSum, DimensionBound, Expression,
};
use perfcone_core::cones::{catalog, catalog_cone, cone_dim, cones_equivalent, is_matroidal, Cone};
use perfcone_core::invariants::{hilbert_free, koszul_check, molien, KOSZUL_MAX_TOTAL};
use perfcone_core::stabilizers::{invariant_dim_degree1, stabilizer_action};
use perfcone_core::voronoi::{classify_faces, enumerate_perfect};
use perfcone_core::{Int, Result, TruncatedSeries};

/// Genus at which products are compared against the brute-force expansion.
pub const ORACLE_GENUS: usize = 5;

const CUBICS: &[&str] = &["{1^3}", "{1^22}", "{123}", "{123(123)}"];

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

/// Result of one criterion.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub passed: bool,
    /// Short summary, or the list of mismatches on failure.
    pub detail: String,
    /// Expected, documented discrepancies observed while checking.
    pub flags: Vec<String>,
    pub elapsed: Duration,
}

pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    check: fn(&mut Tally) -> Result<()>,
}

impl Criterion {
    pub fn evaluate(&self) -> Outcome {
        let start = Instant::now();
        let mut t = Tally::default();
        if let Err(e) = (self.check)(&mut t) {
            t.failures.push(format!("error: {e}"));
        }
        let passed = t.failures.is_empty();
        let detail = if passed { t.notes.join("; ") } else { t.failures.join("; ") };
        Outcome { passed, detail, flags: t.flags, elapsed: start.elapsed() }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.passed { "PASS" } else { "FAIL" })
    }
}

#[derive(Default)]
struct Tally {
    failures: Vec<String>,
    notes: Vec<String>,
    flags: Vec<String>,
}

impl Tally {
    fn eq<T: PartialEq + fmt::Debug>(&mut self, what: &str, got: T, want: T) {
        if got != want {
            self.failures.push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }

    fn holds(&mut self, what: &str, ok: bool) {
        if !ok {
            self.failures.push(format!("{what} does not hold"));
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

fn coeffs(s: &TruncatedSeries, degrees: impl Iterator<Item = usize>) -> Vec<Int> {
    degrees.map(|k| s.coeff(k)).collect()
}

fn evens(s: &TruncatedSeries, upto: usize) -> Vec<Int> {
    coeffs(s, (0..=upto).step_by(2))
}

fn joined(v: &[Int]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub const CRITERIA: [Criterion; 12] = [
    Criterion { id: 1, title: "Perf stable Betti totals and degree-12 breakdown", check: perf_totals },
    Criterion { id: 2, title: "Matroidal stable Betti totals", check: matr_totals },
    Criterion { id: 3, title: "Betti numbers of the open rank-2 stratum", check: beta_two },
    Criterion { id: 4, title: "Bracket classes in degrees 1-6", check: bracket_classes },
    Criterion { id: 5, title: "Bracket products and brute-force expansion", check: bracket_products },
    Criterion { id: 6, title: "Strata counts and algebra dimension bounds", check: strata_counts },
    Criterion { id: 7, title: "Stabilizer images and degree-1 invariants", check: stabilizers },
    Criterion { id: 8, title: "Molien series and Koszul strands", check: molien_suite },
    Criterion { id: 9, title: "Series identities for Std, partial and Satake", check: series_identities },
    Criterion { id: 10, title: "Voronoi walk and face classification", check: voronoi_walk },
    Criterion { id: 11, title: "Strata classes of named cones", check: cone_classes },
    Criterion { id: 12, title: "Matroidal flags of named cones", check: matroidal_flags },
];

fn perf_totals(t: &mut Tally) -> Result<()> {
    let perf = assemble(Space::Perf, MAX_CATALOG_DEGREE)?;
    t.eq("even totals 0..10", evens(&perf.totals, 10), ints(&[1, 2, 4, 9, 18, 38]));
    let odd = coeffs(&perf.totals, (1..=MAX_CATALOG_DEGREE).step_by(2));
    t.eq("odd totals", odd, vec![Int::from(0); 7]);
    let rep = consistency_report()?;
    let cells: Vec<(String, usize, Int, Int)> =
        rep.flagged.iter().map(|c| (c.row.clone(), c.degree, c.computed.clone(), c.reference.clone())).collect();
    t.eq("table cells differing", cells, vec![("beta_2^0".to_string(), 12, Int::from(19), Int::from(18))]);
    t.eq("degree-12 total", perf.total(12), Int::from(84));
    t.holds("total discrepancy equals flagged cell", rep.totals_explained());
    for c in &rep.flagged {
        t.flags.push(format!(
            "{} at degree {}: computed {}, table {} (expected)",
            c.row, c.degree, c.computed, c.reference
        ));
    }
    t.note(format!(
        "totals {}; {} of {} table cells agree",
        joined(&evens(&perf.totals, 12)),
        rep.cells_checked - rep.flagged.len(),
        rep.cells_checked
    ));
    Ok(())
}

fn matr_totals(t: &mut Tally) -> Result<()> {
    let matr = assemble(Space::Matr, 12)?;
    t.eq("even totals 0..10", evens(&matr.totals, 10), ints(&[1, 2, 4, 9, 18, 37]));
    t.eq("degree-12 total", matr.total(12), Int::from(79));
    let rep = consistency_report()?;
    let diffs: Vec<(usize, Int, Int)> =
        rep.matr_total_diffs.iter().map(|d| (d.degree, d.computed.clone(), d.reference.clone())).collect();
    t.eq("total differences", diffs, vec![(12, Int::from(79), Int::from(78))]);
    t.holds("difference equals the flagged cell", rep.totals_explained());
    t.note(format!("totals {}", joined(&evens(&matr.totals, 12))));
    Ok(())
}

fn beta_two(t: &mut Tally) -> Result<()> {
    let b = assemble(Space::BetaOpen(2), 8)?;
    t.eq("even degrees 0..8", evens(&b.totals, 8), ints(&[1, 3, 6, 11, 19]));
    t.note(joined(&evens(&b.totals, 8)));
    Ok(())
}

fn class_set(list: &[&str]) -> Result<BTreeSet<BracketClass>> {
    list.iter().map(|s| s.parse()).collect()
}

fn bracket_classes(t: &mut Tally) -> Result<()> {
    let counts: Vec<usize> = (1..=6).map(|d| enumerate_brackets(d).map(|v| v.len())).collect::<Result<_>>()?;
    t.eq("class counts", counts.clone(), vec![1, 2, 4, 8, 16, 36]);
    for (d, list) in [(3, CUBICS), (4, QUARTICS), (5, QUINTICS), (6, SEXTICS)] {
        let listed = class_set(list)?;
        t.eq(&format!("listed degree-{d} classes distinct"), listed.len(), list.len());
        let found: BTreeSet<BracketClass> = enumerate_brackets(d)?.into_iter().collect();
        t.holds(&format!("degree-{d} list equals enumeration"), listed == found);
    }
    t.note(format!("counts {counts:?}"));
    Ok(())
}

fn evaluated(s: &str) -> Result<ClassSum> {
    s.parse::<Expression>()?.evaluate()
}

fn bracket_products(t: &mut Tally) -> Result<()> {
    t.eq("{1}^3", evaluated("{1}^3")?, evaluated("{1^3} + 3{1^22} + 6{123} + 6{123(123)}")?);
    t.eq("{1}{12}", evaluated("{1}*{12}")?, evaluated("{1^22} + 3{123} + 3{123(123)}")?);
    let all: Vec<BracketClass> = (1..=4).map(enumerate_brackets).collect::<Result<Vec<_>>>()?.concat();
    let mut pairs = 0;
    for (i, a) in all.iter().enumerate() {
        for b in &all[i..] {
            if a.degree() + b.degree() > 5 {
                continue;
            }
            let (a, b) = (ClassSum::from(a.clone()), ClassSum::from(b.clone()));
            let fast = multiply(&a, &b)?;
            let brute = oracle_expand(ORACLE_GENUS, &[a.clone(), b.clone()])?;
            if fast != brute {
                t.failures.push(format!("{a} * {b}: structure constants give {fast}, expansion gives {brute}"));
            }
            pairs += 1;
        }
    }
    t.note(format!("{pairs} products agree at g={ORACLE_GENUS}"));
    Ok(())
}

fn strata_counts(t: &mut Tally) -> Result<()> {
    let counts: Vec<Int> = (2..=12).step_by(2).map(count_pure_strata).collect::<Result<_>>()?;
    t.eq("pure strata counts", counts.clone(), ints(&[1, 2, 4, 8, 16, 37]));
    let (boundary, strata) = algebra_dimension_bounds(12)?;
    let triple = |b: &DimensionBound| (b.lambda_part.clone(), b.pure_part.clone(), b.total.clone());
    t.eq("boundary algebra bound", triple(&boundary), (Int::from(43), Int::from(36), Int::from(79)));
    t.eq("strata algebra bound", triple(&strata), (Int::from(43), Int::from(37), Int::from(80)));
    t.note(format!("counts {}; bounds 79 and 80", joined(&counts)));
    Ok(())
}

fn stabilizers(t: &mut Tally) -> Result<()> {
    let order = |n: &str| -> Result<usize> { Ok(stabilizer_action(&catalog_cone(n)?)?.order()) };
    t.eq("K3", order("K3")?, 6);
    t.eq("C4", order("C4")?, 24);
    t.eq("NS", order("NS")?, 120);
    for (i, f) in [1, 2, 6, 24, 120].into_iter().enumerate() {
        let name = vec!["1"; i + 1].join("+");
        t.eq(&name, order(&name)?, f);
    }
    let dims: Vec<usize> = ["K4-1", "K3+1+1", "C4+1", "C5", "1+1+1+1+1", "NS"]
        .iter()
        .map(|n| invariant_dim_degree1(&catalog_cone(n)?))
        .collect::<Result<_>>()?;
    t.eq("codim-5 degree-1 invariants", dims.clone(), vec![2, 2, 2, 1, 1, 1]);
    t.note(format!("invariant dims {dims:?}"));
    Ok(())
}

fn named_cones(max_dim: usize) -> Result<Vec<Cone>> {
    Ok(catalog(max_dim)?.into_iter().filter_map(|e| e.cone).collect())
}

fn molien_suite(t: &mut Tally) -> Result<()> {
    const DEPTH: usize = 12;
    let mut free = 0;
    let cones = named_cones(6)?;
    for c in &cones {
        let name = c.name().unwrap_or("?");
        let g = stabilizer_action(c)?;
        let m = molien(&g, DEPTH)?;
        t.holds(&format!("{name}: nonnegative Molien coefficients"), m.is_nonnegative());
        let n = c.generators().len();
        if g.order() as u64 == (1..=n as u64).product::<u64>() {
            free += 1;
            t.eq(
                &format!("{name}: Molien of full symmetric action"),
                m,
                hilbert_free(&(1..=n).collect::<Vec<_>>(), DEPTH),
            );
        }
    }
    let mut koszul = 0;
    for c in cones.iter().filter(|c| cone_dim(c) <= 5) {
        let r = koszul_check(c, KOSZUL_MAX_TOTAL)?;
        t.holds(&format!("{}: Koszul strands", c.name().unwrap_or("?")), r.passes());
        koszul += 1;
    }
    t.note(format!(
        "{} actions, {free} full symmetric; {koszul} Koszul checks to total {KOSZUL_MAX_TOTAL}",
        cones.len()
    ));
    Ok(())
}

fn series_identities(t: &mut Tally) -> Result<()> {
    t.holds("Std identity to degree 20", std_identity_check(20));
    t.eq(
        "universal:1 vs partial",
        assemble(Space::Universal(1), 20)?.totals,
        assemble(Space::MumfordPartial, 20)?.totals,
    );
    t.eq("Satake vs lambda series", assemble(Space::Satake, 30)?.totals, lambda_series(30));
    t.note("Std to 20, partial to 20, Satake to 30");
    Ok(())
}

fn voronoi_walk(t: &mut Tally) -> Result<()> {
    let classes: Vec<usize> = (2..=4).map(|g| enumerate_perfect(g).map(|v| v.len())).collect::<Result<_>>()?;
    t.eq("perfect form classes g=2..4", classes.clone(), vec![1, 1, 2]);
    let top = |faces: &[Cone], g: usize| faces.iter().filter(|f| cone_dim(f) == 6 && f.genus_rank() == g).count();
    let g3 = classify_faces(3, 6)?;
    let g4 = classify_faces(4, 6)?;
    t.eq("dim-6 rank-3 classes", top(&g3, 3), 1);
    t.eq("dim-6 rank-4 classes", top(&g4, 4), 4);
    // every face of rank <= 4 already occurs in genus 4
    let small: Vec<&Cone> = g4.iter().filter(|f| cone_dim(f) <= 5).collect();
    let expected: Vec<Cone> = named_cones(5)?.into_iter().filter(|c| c.genus_rank() <= 4).collect();
    t.eq("dim <= 5 face classes", small.len(), expected.len());
    for c in &expected {
        if !small.iter().any(|f| cones_equivalent(f, c).is_some()) {
            t.failures.push(format!("{} not found among faces", c.name().unwrap_or("?")));
        }
    }
    t.note(format!("classes {classes:?}; {} faces of dim <= 5 match the catalog", small.len()));
    Ok(())
}

fn cone_classes(t: &mut Tally) -> Result<()> {
    for (name, class) in [
        ("K3", "{123(123)}"),
        ("C4", "{1234(1234)}"),
        ("K3+1", "{1234(123)}"),
        ("K4-1", "{12345(123,145)}"),
        ("C5", "{12345(12345)}"),
        ("NS", "{12345(12345)}"),
    ] {
        t.eq(name, cone_to_bracket(&catalog_cone(name)?)?, class.parse()?);
    }
    t.note("6 identities");
    Ok(())
}

fn matroidal_flags(t: &mut Tally) -> Result<()> {
    let cones = named_cones(5)?;
    for c in &cones {
        let name = c.name().unwrap_or("?");
        t.eq(name, is_matroidal(c), name != "NS");
    }
    t.note(format!("{} cones", cones.len()));
    Ok(())
}
