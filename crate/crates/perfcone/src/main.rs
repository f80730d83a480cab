use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand};
use perfcone::catalog_text::{write_catalog, write_entry};
use perfcone::report::{render, OutputFormat};
use perfcone::verify::CRITERIA;
use perfcone_core::betti::{assemble, Space};
use perfcone_core::brackets::{
    algebra_dimension_bounds, cone_to_bracket, count_pure_strata, enumerate_brackets, DimensionBound, Expression,
};
use perfcone_core::cones::{
    catalog, catalog_cone, catalog_entry, cone_dim, cones_equivalent, is_matroidal, CatalogEntry, Cone, CATALOG_MAX_DIM,
};
use perfcone_core::invariants::{koszul_check, molien};
use perfcone_core::stabilizers::{invariant_dim_degree1, stabilizer_action};
use perfcone_core::voronoi::{classify_faces, domain, enumerate_perfect, facets};

/// Stable cohomology of perfect cone compactifications of A_g.
#[derive(Parser)]
#[command(name = "perfcone", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stable Betti numbers of a space.
    Betti {
        /// perf, matr, simp, smooth, std, satake, partial, beta<i> or universal:<n>
        #[arg(long)]
        space: String,
        #[arg(long)]
        max_degree: usize,
        /// One row per stratum instead of totals only.
        #[arg(long)]
        breakdown: bool,
        #[arg(long, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// The shipped cone catalog.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
    /// Image of the stabilizer of a catalog cone acting on its span.
    Stabilizer { name: String },
    /// Molien series of the stabilizer action of a catalog cone.
    Molien {
        name: String,
        #[arg(long)]
        max_degree: usize,
    },
    /// Koszul strands of the orthogonal lattice of a catalog cone.
    Koszul {
        name: String,
        #[arg(long)]
        max_total: usize,
    },
    /// Bracket classes of boundary strata.
    Brackets {
        #[command(subcommand)]
        command: BracketCommand,
    },
    /// Number of pure strata classes in a degree.
    StrataCount {
        #[arg(short = 'd', long)]
        degree: usize,
    },
    /// Perfect forms and the cones of their Voronoi domains.
    Voronoi {
        #[command(subcommand)]
        command: VoronoiCommand,
    },
    /// Run the acceptance checks.
    Verify,
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// One line per entry.
    List,
    /// One entry in catalog text format.
    Show {
        name: String,
        /// Recompute the flags from the generators.
        #[arg(long)]
        check_flags: bool,
    },
    /// The whole catalog in catalog text format.
    Export,
}

#[derive(Subcommand)]
enum BracketCommand {
    /// All classes of a degree.
    Enum {
        #[arg(short = 'd', long)]
        degree: u32,
    },
    /// Expand an expression such as "{1}^2 * {12} - 3{123}".
    Multiply { expr: String },
    /// Class of the stratum of a catalog cone.
    OfCone { name: String },
    /// Dimension bounds for the boundary and strata algebras.
    Bounds {
        #[arg(short = 'd', long)]
        degree: usize,
    },
    /// Expand an expression by brute force over explicit indices in genus g.
    Oracle {
        #[arg(short = 'g', long)]
        genus: usize,
        expr: String,
    },
}

#[derive(Subcommand)]
enum VoronoiCommand {
    /// Perfect forms up to equivalence.
    Enumerate {
        #[arg(short = 'g', long)]
        genus: usize,
        /// Emit the Voronoi domains as catalog entries.
        #[arg(long)]
        catalog: bool,
    },
    /// Inequivalent cones of the decomposition up to a dimension.
    Faces {
        #[arg(short = 'g', long)]
        genus: usize,
        #[arg(long)]
        max_dim: usize,
        /// Emit the cones as catalog entries.
        #[arg(long)]
        catalog: bool,
    },
}

fn yes_no(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "?",
    }
}

fn catalog_list() -> Result<String> {
    let mut out = format!(
        "{:<14} {:>4} {:>3} {:>4}  {:<9} {:<10} {}\n",
        "name", "rank", "dim", "gens", "matroidal", "simplicial", "basic"
    );
    for e in catalog(CATALOG_MAX_DIM)? {
        let gens = e.cone.as_ref().map_or("-".to_string(), |c| c.generators().len().to_string());
        out.push_str(&format!(
            "{:<14} {:>4} {:>3} {:>4}  {:<9} {:<10} {}\n",
            e.name,
            e.rank,
            e.dim,
            gens,
            yes_no(e.matroidal),
            yes_no(e.simplicial),
            yes_no(e.basic)
        ));
    }
    Ok(out)
}

fn catalog_show(name: &str, check_flags: bool) -> Result<String> {
    let e = catalog_entry(name)?;
    let mut out = write_entry(&e);
    if check_flags {
        match e.flags_consistent() {
            Some(true) => out.push_str("flags consistent\n"),
            Some(false) => bail!("flags of {name} disagree with its generators"),
            None => out.push_str("flags not checkable: no generators\n"),
        }
    }
    Ok(out)
}

fn stabilizer(name: &str) -> Result<String> {
    let c = catalog_cone(name)?;
    let g = stabilizer_action(&c)?;
    let orbits: Vec<String> = g
        .generator_orbits()
        .iter()
        .map(|o| format!("{{{}}}", o.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")))
        .collect();
    Ok(format!(
        "order {}\ngenerator orbits {}\ndegree-1 invariants {}\n",
        g.order(),
        orbits.join(" "),
        invariant_dim_degree1(&c)?
    ))
}

fn koszul(name: &str, max_total: usize) -> Result<String> {
    let r = koszul_check(&catalog_cone(name)?, max_total)?;
    let mut out = format!("rank M {}\nrank W {}\n", r.m_rank, r.w_rank);
    for s in &r.strands {
        let h: Vec<String> = s.homology.iter().map(ToString::to_string).collect();
        out.push_str(&format!("total {} homology {}\n", s.total, h.join(" ")));
    }
    out.push_str(if r.passes() { "acyclic above position 0\n" } else { "not acyclic above position 0\n" });
    Ok(out)
}

fn bound_line(label: &str, b: &DimensionBound) -> String {
    format!("{label} lambda {} pure {} total {}\n", b.lambda_part, b.pure_part, b.total)
}

fn brackets(cmd: BracketCommand) -> Result<String> {
    Ok(match cmd {
        BracketCommand::Enum { degree } => enumerate_brackets(degree)?.iter().map(|c| format!("{c}\n")).collect(),
        BracketCommand::Multiply { expr } => format!("{}\n", expr.parse::<Expression>()?.evaluate()?),
        BracketCommand::OfCone { name } => format!("{}\n", cone_to_bracket(&catalog_cone(&name)?)?),
        BracketCommand::Bounds { degree } => {
            let (boundary, strata) = algebra_dimension_bounds(degree)?;
            bound_line("boundary", &boundary) + &bound_line("strata", &strata)
        }
        BracketCommand::Oracle { genus, expr } => format!("{}\n", expr.parse::<Expression>()?.evaluate_oracle(genus)?),
    })
}

/// Catalog name of an equivalent shipped cone, if any.
fn known_name(c: &Cone, shipped: &[CatalogEntry]) -> Option<String> {
    shipped
        .iter()
        .filter_map(|e| e.cone.as_ref().map(|k| (e, k)))
        .find(|(_, k)| k.genus_rank() == c.genus_rank() && cones_equivalent(k, c).is_some())
        .map(|(e, _)| e.name.clone())
}

fn voronoi(cmd: VoronoiCommand) -> Result<String> {
    let mut out = String::new();
    match cmd {
        VoronoiCommand::Enumerate { genus, catalog: as_catalog } => {
            let mut entries = Vec::new();
            for (k, p) in enumerate_perfect(genus)?.iter().enumerate() {
                let dom = domain(p)?;
                if as_catalog {
                    entries.push(CatalogEntry::from_cone(&format!("P{genus}.{}", k + 1), dom));
                    continue;
                }
                out.push_str(&format!(
                    "form {}: minimum {}, {} minimal vector pairs, {} facets\n",
                    k + 1,
                    p.minimum(),
                    p.min_vectors().len(),
                    facets(&dom)?.len()
                ));
                let m = p.form().matrix();
                for r in 0..m.rows() {
                    let row: Vec<String> = m.row(r).iter().map(ToString::to_string).collect();
                    out.push_str(&format!("  {}\n", row.join(" ")));
                }
            }
            if as_catalog {
                out = write_catalog(&entries);
            }
        }
        VoronoiCommand::Faces { genus, max_dim, catalog: as_catalog } => {
            let shipped = if max_dim <= CATALOG_MAX_DIM { catalog(max_dim)? } else { catalog(CATALOG_MAX_DIM)? };
            let mut entries = Vec::new();
            for (k, c) in classify_faces(genus, max_dim)?.into_iter().enumerate() {
                let name = known_name(&c, &shipped).unwrap_or_else(|| format!("F{}.{}", cone_dim(&c), k + 1));
                if as_catalog {
                    entries.push(CatalogEntry::from_cone(&name, c));
                    continue;
                }
                out.push_str(&format!(
                    "{:<14} dim {} rank {} gens {} matroidal {} class {}\n",
                    name,
                    cone_dim(&c),
                    c.genus_rank(),
                    c.generators().len(),
                    yes_no(Some(is_matroidal(&c))),
                    cone_to_bracket(&c)?
                ));
            }
            if as_catalog {
                out = write_catalog(&entries);
            }
        }
    }
    Ok(out)
}

/// Prints the criteria matrix; fails if any criterion fails.
fn verify() -> Result<()> {
    let mut failed = Vec::new();
    let mut flags = Vec::new();
    for c in &CRITERIA {
        let o = c.evaluate();
        println!("{o} {:>2} {}: {}", c.id, c.title, o.detail);
        if !o.passed {
            failed.push(c.id);
        }
        flags.extend(o.flags);
    }
    for f in &flags {
        println!("FLAG {f}");
    }
    if !failed.is_empty() {
        bail!("criteria {failed:?} failed");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    let out = match cli.command {
        Command::Betti { space, max_degree, breakdown, format } => {
            let space: Space = space.parse()?;
            render(&assemble(space, max_degree)?, breakdown, format)
        }
        Command::Catalog { command } => match command {
            CatalogCommand::List => catalog_list()?,
            CatalogCommand::Show { name, check_flags } => catalog_show(&name, check_flags)?,
            CatalogCommand::Export => write_catalog(&catalog(CATALOG_MAX_DIM)?),
        },
        Command::Stabilizer { name } => stabilizer(&name)?,
        Command::Molien { name, max_degree } => {
            let g = stabilizer_action(&catalog_cone(&name)?)?;
            format!("{}\n", molien(&g, max_degree)?)
        }
        Command::Koszul { name, max_total } => koszul(&name, max_total)?,
        Command::Brackets { command } => brackets(command)?,
        Command::StrataCount { degree } => format!("{}\n", count_pure_strata(degree)?),
        Command::Voronoi { command } => voronoi(command)?,
        Command::Verify => return verify(),
    };
    print!("{out}");
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
