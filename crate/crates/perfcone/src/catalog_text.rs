//! Text serialization of catalog entries.
//!
//! One block per entry:
//!
//! ```text
//! cone K3
//! rank 2
//! dim 3
//! gen 1 0
//! gen 0 1
//! gen 1 -1
//! matroidal true
//! simplicial true
//! basic true
//! multiplicity 1
//! end
//! ```
//!
//! Entries without generators open with `placeholder <name>` instead and may
//! carry a `series` line with the known prefix of their invariant series.
//! Flags are `true`, `false` or `unknown`. Blank lines and lines starting
//! with `#` are ignored. [`write_catalog`] output parses back to the same
//! entries and re-serializes to the same bytes.

use std::fmt::Write as _;

use perfcone_core::cones::{CatalogEntry, Cone};
use perfcone_core::{Error, Int, Result, TruncatedSeries};

fn flag(f: Option<bool>) -> &'static str {
    match f {
        Some(true) => "true",
        Some(false) => "false",
        None => "unknown",
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn write_entry(e: &CatalogEntry) -> String {
    let mut out = String::new();
    let head = if e.cone.is_some() { "cone" } else { "placeholder" };
    let _ = writeln!(out, "{head} {}", e.name);
    let _ = writeln!(out, "rank {}", e.rank);
    let _ = writeln!(out, "dim {}", e.dim);
    if let Some(c) = &e.cone {
        for g in c.generators() {
            let _ = writeln!(out, "gen {}", join(g));
        }
    }
    let _ = writeln!(out, "matroidal {}", flag(e.matroidal));
    let _ = writeln!(out, "simplicial {}", flag(e.simplicial));
    let _ = writeln!(out, "basic {}", flag(e.basic));
    if let Some(s) = &e.invariant_series_override {
        let _ = writeln!(out, "series {}", join(s.coeffs()));
    }
    let _ = writeln!(out, "multiplicity {}", e.multiplicity);
    out.push_str("end\n");
    out
}

/// Blocks separated by one blank line.
pub fn write_catalog(entries: &[CatalogEntry]) -> String {
    entries.iter().map(write_entry).collect::<Vec<_>>().join("\n")
}

#[derive(Default)]
struct Block {
    name: String,
    placeholder: bool,
    rank: Option<usize>,
    dim: Option<usize>,
    gens: Vec<Vec<Int>>,
    matroidal: Option<Option<bool>>,
    simplicial: Option<Option<bool>>,
    basic: Option<Option<bool>>,
    series: Option<Vec<Int>>,
    multiplicity: Option<usize>,
}

fn err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

fn parse_num<T: std::str::FromStr>(line: usize, s: &str) -> Result<T> {
    s.parse().map_err(|_| err(line, format!("bad number {s:?}")))
}

fn parse_flag(line: usize, s: &str) -> Result<Option<bool>> {
    match s {
        "true" => Ok(Some(true)),
        "false" => Ok(Some(false)),
        "unknown" => Ok(None),
        _ => Err(err(line, format!("bad flag {s:?}"))),
    }
}

fn parse_ints(line: usize, s: &str) -> Result<Vec<Int>> {
    s.split_whitespace().map(|t| parse_num(line, t)).collect()
}

impl Block {
    fn finish(self, line: usize) -> Result<CatalogEntry> {
        let missing = |k: &str| err(line, format!("entry {} lacks {k}", self.name));
        let rank = self.rank.ok_or_else(|| missing("rank"))?;
        let cone = if self.placeholder {
            if !self.gens.is_empty() {
                return Err(err(line, format!("placeholder {} has generators", self.name)));
            }
            None
        } else {
            Some(Cone::new(rank, self.gens).map_err(|e| err(line, e))?.with_name(self.name.clone()))
        };
        Ok(CatalogEntry {
            rank,
            dim: self.dim.ok_or_else(|| missing("dim"))?,
            matroidal: self.matroidal.ok_or_else(|| missing("matroidal"))?,
            simplicial: self.simplicial.ok_or_else(|| missing("simplicial"))?,
            basic: self.basic.ok_or_else(|| missing("basic"))?,
            invariant_series_override: self.series.map(|c| {
                let n = c.len().saturating_sub(1);
                TruncatedSeries::new(c, n)
            }),
            multiplicity: self.multiplicity.ok_or_else(|| missing("multiplicity"))?,
            cone,
            name: self.name,
        })
    }
}

pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    let mut entries = Vec::new();
    let mut open: Option<Block> = None;
    for (i, raw) in text.lines().enumerate() {
        let n = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).map_or((line, ""), |(k, r)| (k, r.trim()));
        match (key, open.as_mut()) {
            ("cone" | "placeholder", None) => {
                if rest.is_empty() {
                    return Err(err(n, "entry without a name"));
                }
                open = Some(Block { name: rest.to_string(), placeholder: key == "placeholder", ..Block::default() });
            }
            ("cone" | "placeholder", Some(_)) => return Err(err(n, "missing end")),
            ("end", Some(_)) => entries.push(open.take().expect("open block").finish(n)?),
            (_, None) => return Err(err(n, format!("{key} outside an entry"))),
            ("rank", Some(b)) => b.rank = Some(parse_num(n, rest)?),
            ("dim", Some(b)) => b.dim = Some(parse_num(n, rest)?),
            ("gen", Some(b)) => b.gens.push(parse_ints(n, rest)?),
            ("matroidal", Some(b)) => b.matroidal = Some(parse_flag(n, rest)?),
            ("simplicial", Some(b)) => b.simplicial = Some(parse_flag(n, rest)?),
            ("basic", Some(b)) => b.basic = Some(parse_flag(n, rest)?),
            ("series", Some(b)) => b.series = Some(parse_ints(n, rest)?),
            ("multiplicity", Some(b)) => b.multiplicity = Some(parse_num(n, rest)?),
            (k, Some(_)) => return Err(err(n, format!("unknown key {k:?}"))),
        }
    }
    if open.is_some() {
        return Err(Error::Parse("unterminated entry at end of input".into()));
    }
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_blocks() {
        assert!(parse_catalog("rank 2\n").is_err());
        assert!(parse_catalog("cone X\nrank 1\n").is_err());
        assert!(parse_catalog(
            "cone X\nrank 1\ndim 1\ngen 2\nmatroidal true\nsimplicial true\nbasic true\nmultiplicity 1\nend\n"
        )
        .is_err());
        assert!(parse_catalog("cone X\nrank 1\ncolour red\nend\n").is_err());
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let text = "# one ray\n\ncone 1\nrank 1\ndim 1\ngen 1\nmatroidal true\nsimplicial true\nbasic true\nmultiplicity 1\nend\n";
        let e = parse_catalog(text).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].cone.as_ref().unwrap().name(), Some("1"));
    }
}
