//! Assembly of stable Betti numbers from per-stratum series.
//!
//! Degrees are cohomological. For the compactifications the degree `k`
//! entry is the dimension of `H^(top-k)`; for the open strata `β_i^0` and the
//! series-defined spaces it is the dimension of `H^k`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Zero;

use crate::cones::{catalog, CatalogEntry, CATALOG_MAX_DIM};
use crate::invariants::{hilbert_free, molien};
use crate::stabilizers::stabilizer_action;
use crate::{Error, Int, Result, TruncatedSeries};

/// Highest degree the shipped catalog determines for the compactifications.
pub const MAX_CATALOG_DEGREE: usize = 2 * CATALOG_MAX_DIM + 1;

/// Largest `n` accepted for the `n`-fold universal family.
pub const MAX_UNIVERSAL_POWER: usize = 8;

/// Largest torus rank `i` for which `β_i^0` is fully covered by the catalog.
pub const MAX_BETA_OPEN_RANK: usize = 3;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Space {
    Perf,
    Matr,
    Simp,
    Smooth,
    Std,
    Satake,
    MumfordPartial,
    BetaOpen(usize),
    Universal(usize),
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Perf => f.write_str("perf"),
            Space::Matr => f.write_str("matr"),
            Space::Simp => f.write_str("simp"),
            Space::Smooth => f.write_str("smooth"),
            Space::Std => f.write_str("std"),
            Space::Satake => f.write_str("satake"),
            Space::MumfordPartial => f.write_str("partial"),
            Space::BetaOpen(i) => write!(f, "beta{i}"),
            Space::Universal(n) => write!(f, "universal:{n}"),
        }
    }
}

impl FromStr for Space {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_count = |t: &str| t.parse::<usize>().map_err(|_| Error::Unknown(format!("space {s}")));
        match s {
            "perf" => Ok(Space::Perf),
            "matr" => Ok(Space::Matr),
            "simp" => Ok(Space::Simp),
            "smooth" => Ok(Space::Smooth),
            "std" => Ok(Space::Std),
            "satake" => Ok(Space::Satake),
            "partial" => Ok(Space::MumfordPartial),
            _ => {
                if let Some(n) = s.strip_prefix("universal:") {
                    Ok(Space::Universal(parse_count(n)?))
                } else if let Some(i) = s.strip_prefix("beta") {
                    Ok(Space::BetaOpen(parse_count(i)?))
                } else {
                    Err(Error::Unknown(format!("space {s}")))
                }
            }
        }
    }
}

/// One named contribution to a Betti table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiRow {
    pub name: String,
    pub values: TruncatedSeries,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiReport {
    pub space: Space,
    pub max_deg: usize,
    pub rows: Vec<BettiRow>,
    pub totals: TruncatedSeries,
}

impl BettiReport {
    fn from_rows(space: Space, max_deg: usize, rows: Vec<BettiRow>) -> Self {
        let mut totals = TruncatedSeries::zero(max_deg);
        for r in &rows {
            totals = totals.add(&r.values);
        }
        BettiReport { space, max_deg, rows, totals }
    }

    pub fn total(&self, k: usize) -> Int {
        self.totals.coeff(k)
    }

    pub fn row(&self, name: &str) -> Option<&TruncatedSeries> {
        self.rows.iter().find(|r| r.name == name).map(|r| &r.values)
    }
}

/// `Π_{m>=0} 1/(1 - t^(4m+2))`: the odd λ-classes in degrees 2, 6, 10, ...
pub fn lambda_series(max_deg: usize) -> TruncatedSeries {
    let degrees: Vec<usize> = (0..).map(|m| 4 * m + 2).take_while(|&d| d <= max_deg).collect();
    hilbert_free(&degrees, max_deg)
}

/// Highest degree up to which [`stratum_series`] is determined for `e`.
pub fn stratum_series_depth(e: &CatalogEntry) -> Option<usize> {
    match (&e.cone, &e.invariant_series_override) {
        (_, Some(s)) => Some(2 * s.max_deg() + 1),
        (Some(_), None) => None,
        (None, None) => Some(0),
    }
}

/// Stable cohomology series of the stratum of `e`: λ-series times the
/// invariant series of `Sym•(Span σ)` with `Span σ` in degree 2.
pub fn stratum_series(e: &CatalogEntry, max_deg: usize) -> Result<TruncatedSeries> {
    if let Some(depth) = stratum_series_depth(e) {
        if max_deg > depth {
            return Err(Error::CatalogIncomplete(format!("for {} beyond degree {depth}", e.name)));
        }
    }
    let invariant = match (&e.invariant_series_override, &e.cone) {
        (Some(s), _) => s.clone(),
        (None, Some(c)) => molien(&stabilizer_action(c)?, max_deg / 2)?,
        (None, None) => return Err(Error::CatalogIncomplete(format!("for {}", e.name))),
    };
    let s = lambda_series(max_deg).mul(&invariant.substitute_power(2, max_deg));
    Ok(s.scale(&Int::from(e.multiplicity)))
}

/// Table row a catalog entry is grouped into for the compactifications.
fn table_row(e: &CatalogEntry) -> String {
    match (e.rank, e.dim) {
        (1, _) => "beta_1^0".to_string(),
        (2, _) => "beta_2^0".to_string(),
        (3, 3) => "sigma_1+1+1".to_string(),
        (_, d) => format!("codim {d} strata"),
    }
}

/// Row names of the compactification breakdown, in display order.
pub fn table_row_names() -> Vec<String> {
    let mut v: Vec<String> = ["A_g", "beta_1^0", "beta_2^0", "sigma_1+1+1"].iter().map(|s| s.to_string()).collect();
    for d in 4..=CATALOG_MAX_DIM {
        v.push(format!("codim {d} strata"));
    }
    v
}

fn selected(space: Space, e: &CatalogEntry) -> bool {
    match space {
        Space::Matr => e.matroidal == Some(true),
        Space::Simp => e.simplicial == Some(true),
        Space::Smooth => e.basic == Some(true),
        _ => true,
    }
}

/// Adds `entry`'s series shifted by `2 * shift_dim` to the row `name`.
fn accumulate(rows: &mut Vec<BettiRow>, name: &str, s: TruncatedSeries) {
    match rows.iter_mut().find(|r| r.name == name) {
        Some(r) => r.values = r.values.add(&s),
        None => rows.push(BettiRow { name: name.to_string(), values: s }),
    }
}

fn shifted_stratum(e: &CatalogEntry, shift: usize, max_deg: usize) -> Result<TruncatedSeries> {
    if shift > max_deg {
        return Ok(TruncatedSeries::zero(max_deg));
    }
    Ok(stratum_series(e, max_deg - shift)?.shift_into(shift, max_deg))
}

pub fn assemble(space: Space, max_deg: usize) -> Result<BettiReport> {
    let mut rows: Vec<BettiRow> = Vec::new();
    match space {
        Space::Perf | Space::Matr | Space::Simp | Space::Smooth => {
            if max_deg > MAX_CATALOG_DEGREE {
                return Err(Error::CatalogIncomplete(format!("beyond degree {}", MAX_CATALOG_DEGREE - 1)));
            }
            for name in table_row_names() {
                rows.push(BettiRow { name, values: TruncatedSeries::zero(max_deg) });
            }
            rows[0].values = lambda_series(max_deg);
            for e in catalog(CATALOG_MAX_DIM)? {
                if selected(space, &e) {
                    let s = shifted_stratum(&e, 2 * e.dim, max_deg)?;
                    accumulate(&mut rows, &table_row(&e), s);
                }
            }
        }
        Space::Std => {
            rows.push(BettiRow { name: "A_g".to_string(), values: lambda_series(max_deg) });
            for i in 1..=max_deg / 2 {
                let invariant = hilbert_free(&(1..=i).collect::<Vec<_>>(), max_deg / 2);
                let s = lambda_series(max_deg).mul(&invariant.substitute_power(2, max_deg));
                let name = format!("sigma_{}", vec!["1"; i].join("+"));
                rows.push(BettiRow { name, values: s.shift(2 * i) });
            }
        }
        Space::Satake => rows.push(BettiRow { name: "A_g".to_string(), values: lambda_series(max_deg) }),
        Space::MumfordPartial => {
            rows.push(BettiRow { name: "A_g".to_string(), values: lambda_series(max_deg) });
            let sigma1 = catalog(1)?.remove(0);
            rows.push(BettiRow { name: "beta_1^0".to_string(), values: shifted_stratum(&sigma1, 2, max_deg)? });
        }
        Space::BetaOpen(i) => {
            if i == 0 || i > MAX_BETA_OPEN_RANK {
                return Err(Error::OutOfRange(format!("beta{i}: supported torus ranks are 1..={MAX_BETA_OPEN_RANK}")));
            }
            for e in catalog(CATALOG_MAX_DIM)?.into_iter().filter(|e| e.rank == i) {
                let s = shifted_stratum(&e, 2 * (e.dim - i), max_deg)?;
                rows.push(BettiRow { name: format!("sigma_{}", e.name), values: s });
            }
        }
        Space::Universal(n) => {
            if n > MAX_UNIVERSAL_POWER {
                return Err(Error::OutOfRange(format!("universal:{n}: at most {MAX_UNIVERSAL_POWER}")));
            }
            let fibre = hilbert_free(&vec![2; n * (n + 1) / 2], max_deg);
            rows.push(BettiRow { name: format!("X_g^{n}"), values: lambda_series(max_deg).mul(&fibre) });
        }
    }
    Ok(BettiReport::from_rows(space, max_deg, rows))
}

/// Checks `Σ_i t^(2i) λ Π_{j<=i} 1/(1-t^(2j)) = λ Π_{i>=1} 1/(1-t^(2i))`
/// through `max_deg`.
pub fn std_identity_check(max_deg: usize) -> bool {
    let degrees: Vec<usize> = (1..=max_deg / 2).map(|i| 2 * i).collect();
    std_identity_check_with(max_deg, &degrees)
}

/// The same identity with an explicit generator-degree list on the right.
pub fn std_identity_check_with(max_deg: usize, rhs_degrees: &[usize]) -> bool {
    let lambda = lambda_series(max_deg);
    let mut lhs = TruncatedSeries::zero(max_deg);
    for i in 0..=max_deg / 2 {
        let free: Vec<usize> = (1..=i).map(|j| 2 * j).collect();
        lhs = lhs.add(&lambda.mul(&hilbert_free(&free, max_deg)).shift(2 * i));
    }
    let rhs = lambda.mul(&hilbert_free(rhs_degrees, max_deg));
    lhs == rhs
}

/// Reference rows of the degree-0..12 breakdown of the compactification,
/// even degrees only; `None` marks an empty cell.
pub const REFERENCE_TABLE: [(&str, [Option<u32>; 7]); 7] = [
    ("A_g", [Some(1), Some(1), Some(1), Some(2), Some(2), Some(3), Some(4)]),
    ("beta_1^0", [None, Some(1), Some(2), Some(3), Some(5), Some(7), Some(10)]),
    ("beta_2^0", [None, None, Some(1), Some(3), Some(6), Some(11), Some(18)]),
    ("sigma_1+1+1", [None, None, None, Some(1), Some(2), Some(4), Some(8)]),
    ("codim 4 strata", [None, None, None, None, Some(3), Some(7), Some(15)]),
    ("codim 5 strata", [None, None, None, None, None, Some(6), Some(15)]),
    ("codim 6 strata", [None, None, None, None, None, None, Some(13)]),
];

/// Reference totals in even degrees 0..12.
pub const REFERENCE_PERF_TOTALS: [u32; 7] = [1, 2, 4, 9, 18, 38, 83];
pub const REFERENCE_MATR_TOTALS: [u32; 7] = [1, 2, 4, 9, 18, 37, 78];
/// Reference Betti numbers of `β_2^0` in even degrees 0..8.
pub const REFERENCE_BETA2: [u32; 5] = [1, 3, 6, 11, 19];

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellDiff {
    pub row: String,
    pub degree: usize,
    pub computed: Int,
    pub reference: Int,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConsistencyReport {
    /// Number of nonempty reference cells compared.
    pub cells_checked: usize,
    /// Breakdown cells that differ from the reference table.
    pub flagged: Vec<CellDiff>,
    /// Perf totals that differ from the reference totals.
    pub perf_total_diffs: Vec<CellDiff>,
    /// Matroidal totals that differ from the reference totals.
    pub matr_total_diffs: Vec<CellDiff>,
    /// Whether `β_2^0` matches its reference Betti numbers.
    pub beta2_matches: bool,
}

impl ConsistencyReport {
    /// Every total discrepancy equals the sum of the flagged breakdown cells
    /// in that degree.
    pub fn totals_explained(&self) -> bool {
        let explained = |diffs: &[CellDiff]| {
            diffs.iter().all(|d| {
                let flagged: Int =
                    self.flagged.iter().filter(|f| f.degree == d.degree).map(|f| &f.computed - &f.reference).sum();
                &d.computed - &d.reference == flagged
            })
        };
        explained(&self.perf_total_diffs) && explained(&self.matr_total_diffs)
    }
}

fn diffs(row: &str, computed: &TruncatedSeries, reference: &[u32]) -> Vec<CellDiff> {
    reference
        .iter()
        .enumerate()
        .filter_map(|(j, &r)| {
            let c = computed.coeff(2 * j);
            let r = Int::from(r);
            (c != r).then(|| CellDiff { row: row.to_string(), degree: 2 * j, computed: c, reference: r })
        })
        .collect()
}

/// Recomputes the degree-0..12 breakdown and compares it with the reference table.
pub fn consistency_report() -> Result<ConsistencyReport> {
    let perf = assemble(Space::Perf, 12)?;
    let matr = assemble(Space::Matr, 12)?;
    let mut flagged = Vec::new();
    let mut cells_checked = 0;
    for (name, cells) in REFERENCE_TABLE {
        let computed = perf.row(name).ok_or_else(|| Error::Inconsistent(format!("missing row {name}")))?;
        for (j, cell) in cells.iter().enumerate() {
            let c = computed.coeff(2 * j);
            match cell {
                Some(r) => {
                    cells_checked += 1;
                    let r = Int::from(*r);
                    if c != r {
                        flagged.push(CellDiff { row: name.to_string(), degree: 2 * j, computed: c, reference: r });
                    }
                }
                None if !c.is_zero() => {
                    flagged.push(CellDiff { row: name.to_string(), degree: 2 * j, computed: c, reference: Int::zero() })
                }
                None => {}
            }
        }
    }
    let beta2 = assemble(Space::BetaOpen(2), 8)?;
    Ok(ConsistencyReport {
        cells_checked,
        flagged,
        perf_total_diffs: diffs("total", &perf.totals, &REFERENCE_PERF_TOTALS),
        matr_total_diffs: diffs("total", &matr.totals, &REFERENCE_MATR_TOTALS),
        beta2_matches: diffs("beta_2^0", &beta2.totals, &REFERENCE_BETA2).is_empty(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn even(s: &TruncatedSeries, upto: usize) -> Vec<i64> {
        (0..=upto).step_by(2).map(|k| i64::try_from(s.coeff(k)).unwrap()).collect()
    }

    #[test]
    fn lambda_coefficients() {
        let l = lambda_series(14);
        assert_eq!(even(&l, 14), vec![1, 1, 1, 2, 2, 3, 4, 5]);
        assert!((1..14).step_by(2).all(|k| l.coeff(k).is_zero()));
    }

    #[test]
    fn space_names_round_trip() {
        for s in ["perf", "matr", "simp", "smooth", "std", "satake", "partial", "beta2", "universal:3"] {
            assert_eq!(s.parse::<Space>().unwrap().to_string(), s);
        }
        assert!("nope".parse::<Space>().is_err());
    }

    #[test]
    fn std_identity_and_negative_control() {
        assert!(std_identity_check(0));
        assert!(std_identity_check(20));
        assert!(!std_identity_check_with(20, &[2, 4, 8, 10]));
    }
}
