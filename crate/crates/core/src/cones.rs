//! Cones of the perfect cone decomposition and the catalog of orbit
//! representatives of dimension at most 6.
//!
//! A cone of rank `i` lives in `Sym²(R^i)` and is spanned by rank-one forms
//! `ξ ξᵀ`; it is stored by its primitive, sign-canonical vectors `ξ ∈ Z^i`.
//! Points of `Sym²(Z^i)` are symmetric integer matrices, written in the
//! coordinates `(M_11, ..., M_ii, M_12, M_13, ..., M_(i-1)i)`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::linalg::{
    self, combinations, inverse, max_minors, rat_vec, saturate, sign_canonical, solve_rational, spans_saturated, Int,
    IntMatrix, Rat, RatMatrix,
};
use crate::{Error, Result, TruncatedSeries};

/// Dimension of `Sym²(R^i)`.
pub fn sym2_dim(i: usize) -> usize {
    i * (i + 1) / 2
}

/// Index pairs of the `Sym²` coordinates: diagonal first, then `r < s` lexicographically.
pub fn sym2_pairs(i: usize) -> Vec<(usize, usize)> {
    let mut pairs: Vec<(usize, usize)> = (0..i).map(|k| (k, k)).collect();
    for r in 0..i {
        for s in r + 1..i {
            pairs.push((r, s));
        }
    }
    pairs
}

/// Coordinates of `ξ ξᵀ`.
pub fn rank_one_coords(xi: &[Int]) -> Vec<Int> {
    sym2_pairs(xi.len()).into_iter().map(|(r, s)| &xi[r] * &xi[s]).collect()
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cone {
    rank: usize,
    generators: Vec<Vec<Int>>,
    name: Option<String>,
}

impl Cone {
    /// Validates and sign-canonicalizes the generators, which must be primitive,
    /// pairwise distinct up to sign, and span `R^rank`.
    pub fn new(rank: usize, generators: Vec<Vec<Int>>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidCone("no generators".into()));
        }
        let mut seen = BTreeSet::new();
        let mut canon = Vec::with_capacity(generators.len());
        for g in generators {
            if g.len() != rank {
                return Err(Error::InvalidCone(format!("generator of length {} in rank {rank}", g.len())));
            }
            if !linalg::gcd_all(&g).is_one() {
                return Err(Error::InvalidCone("generator is not primitive".into()));
            }
            let g = sign_canonical(&g);
            if !seen.insert(g.clone()) {
                return Err(Error::InvalidCone("duplicate generator".into()));
            }
            canon.push(g);
        }
        let r = IntMatrix::from_rows(canon.clone(), rank)?.rank();
        if r != rank {
            return Err(Error::InvalidCone(format!("generators span rank {r}, expected {rank}")));
        }
        Ok(Cone { rank, generators: canon, name: None })
    }

    pub fn from_i64(rank: usize, generators: &[&[i64]]) -> Result<Self> {
        Self::new(rank, generators.iter().map(|g| linalg::ints(g)).collect())
    }

    /// Cone spanned by vectors of `Z^g` that need not span `R^g`, rewritten in
    /// a basis of the saturation of their span.
    pub fn in_own_span(vectors: &[Vec<Int>]) -> Result<Self> {
        let basis = saturate(vectors);
        let b = RatMatrix::from_columns(&basis.iter().map(|v| rat_vec(v)).collect::<Vec<_>>(), vectors[0].len())?;
        let coords = vectors
            .iter()
            .map(|v| {
                let x = solve_rational(&b, &rat_vec(v))
                    .ok_or_else(|| Error::Inconsistent("vector outside its span".into()))?;
                x.iter()
                    .map(|c| {
                        if c.is_integer() {
                            Ok(c.to_integer())
                        } else {
                            Err(Error::Inconsistent("saturation".into()))
                        }
                    })
                    .collect()
            })
            .collect::<Result<Vec<Vec<Int>>>>()?;
        Self::new(basis.len(), coords)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// The ambient rank `i` (the cone lives in `Sym²(R^i)`).
    pub fn genus_rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[Vec<Int>] {
        &self.generators
    }

    /// Generator forms as rows in `Sym²` coordinates.
    pub fn form_matrix(&self) -> IntMatrix {
        let rows = self.generators.iter().map(|g| rank_one_coords(g)).collect();
        IntMatrix::from_rows(rows, sym2_dim(self.rank)).expect("uniform length")
    }

    /// Image of the cone under `ξ ↦ p ξ`.
    pub fn transform(&self, p: &IntMatrix) -> Result<Self> {
        let gens = self.generators.iter().map(|g| p.mul_vec(g)).collect::<Result<Vec<_>>>()?;
        let mut c = Self::new(self.rank, gens)?;
        c.name = self.name.clone();
        Ok(c)
    }
}

pub fn cone_dim(c: &Cone) -> usize {
    c.form_matrix().rank()
}

pub fn cone_rank(c: &Cone) -> usize {
    IntMatrix::from_rows(c.generators.clone(), c.rank).expect("uniform length").rank()
}

pub fn is_simplicial(c: &Cone) -> bool {
    cone_dim(c) == c.generators.len()
}

/// Generators are part of a Z-basis of `Sym²(Z^i)`.
pub fn is_basic(c: &Cone) -> bool {
    is_simplicial(c) && spans_saturated(&c.form_matrix().to_rows())
}

/// Generators are the rank-one forms of the columns of a unimodular matrix.
pub fn is_matroidal(c: &Cone) -> bool {
    let gens = &c.generators;
    if !spans_saturated(gens) {
        return false;
    }
    // Rank equals the ambient rank and the span is saturated, so the columns
    // are already written in a basis of their span.
    let a = IntMatrix::from_columns(gens, c.rank).expect("uniform length");
    let r = c.rank;
    let n = gens.len();
    let Some(basis) = combinations(n, r)
        .into_iter()
        .find(|s| a.submatrix(&(0..r).collect::<Vec<_>>(), s).determinant().expect("square").abs().is_one())
    else {
        return false;
    };
    let rows: Vec<usize> = (0..r).collect();
    let inv = linalg::invert_unimodular(&a.submatrix(&rows, &basis)).expect("unit determinant");
    let rest: Vec<usize> = (0..n).filter(|j| !basis.contains(j)).collect();
    let b = inv.mul(&a.submatrix(&rows, &rest)).expect("shapes");
    (1..=r.min(rest.len())).all(|k| max_minors(&b, k).iter().all(|m| m.abs() <= Int::one()))
}

/// Basis of `W = σ^⊥ ∩ M`: integral functionals on `Sym²(Z^i)` (dual to the
/// matrix-entry coordinates) vanishing on every generator.
pub fn orth_lattice(c: &Cone) -> Vec<Vec<Int>> {
    let k = linalg::integer_kernel(&c.form_matrix());
    if k.is_empty() {
        return k;
    }
    let (h, _) = linalg::hnf(&IntMatrix::from_rows(k, sym2_dim(c.rank)).expect("rows"));
    h.to_rows().into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect()
}

/// Simple undirected graph on vertices `0..vertices`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &(a, b) in edges {
            if a == b || a >= vertices || b >= vertices {
                return Err(Error::InvalidCone(format!("bad edge ({a},{b})")));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidCone(format!("repeated edge ({a},{b})")));
            }
        }
        Ok(Graph { vertices, edges: edges.to_vec() })
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|k| (k, (k + 1) % n)).collect();
        Self::new(n, &edges).expect("cycle of length >= 3")
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = combinations(n, 2).into_iter().map(|p| (p[0], p[1])).collect();
        Self::new(n, &edges).expect("simple")
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices == 0 {
            return false;
        }
        let mut reached = vec![false; self.vertices];
        let mut stack = vec![0];
        reached[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && !reached[y] {
                        reached[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        reached.into_iter().all(|r| r)
    }
}

/// Cone of the forms `(x_a - x_b)²` over the edges of `g` (the last vertex
/// variable set to zero), plus `plus_ones` further squares of new variables.
pub fn graphical_cone(g: &Graph, plus_ones: usize) -> Result<Cone> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let base = g.vertices - 1;
    let rank = base + plus_ones;
    let mut gens = Vec::new();
    for &(a, b) in &g.edges {
        let mut v = vec![Int::zero(); rank];
        if a < base {
            v[a] += 1;
        }
        if b < base {
            v[b] -= 1;
        }
        gens.push(v);
    }
    for k in 0..plus_ones {
        let mut v = vec![Int::zero(); rank];
        v[base + k] = Int::one();
        gens.push(v);
    }
    Cone::new(rank, gens)
}

/// Data preserved (up to the signs `ε_j ε_k`) by lattice maps between generator
/// sets: `G_jk = ξ_jᵀ S⁻¹ ξ_k` with `S = Σ ξ ξᵀ`.
fn gram_invariant(c: &Cone) -> Vec<Vec<Rat>> {
    let i = c.rank;
    let mut s = RatMatrix::zeros(i, i);
    for g in &c.generators {
        for r in 0..i {
            for t in 0..i {
                s[(r, t)] += Rat::from_integer(&g[r] * &g[t]);
            }
        }
    }
    let s_inv = inverse(&s).expect("generators span");
    let ys: Vec<Vec<Rat>> = c.generators.iter().map(|g| s_inv.mul_vec(&rat_vec(g)).expect("shape")).collect();
    c.generators.iter().map(|a| ys.iter().map(|y| linalg::dot(&rat_vec(a), y)).collect()).collect()
}

/// Lattice maps `P ∈ GL(i, Z)` sending every generator of `src` to `±` a
/// generator of `dst` (a bijection of rank-one forms). One representative of
/// each pair `±P` is returned; stops after `limit` maps if given.
pub(crate) fn generator_maps(src: &Cone, dst: &Cone, limit: Option<usize>) -> Vec<IntMatrix> {
    let n = src.generators.len();
    if src.rank != dst.rank || n != dst.generators.len() {
        return Vec::new();
    }
    let i = src.rank;
    // greedy independent subset of source generators, in order
    let mut basis: Vec<usize> = Vec::new();
    for j in 0..n {
        let mut trial: Vec<Vec<Int>> = basis.iter().map(|&b| src.generators[b].clone()).collect();
        trial.push(src.generators[j].clone());
        if IntMatrix::from_rows(trial, i).expect("rows").rank() == basis.len() + 1 {
            basis.push(j);
        }
        if basis.len() == i {
            break;
        }
    }
    let b_mat = RatMatrix::from_columns(&basis.iter().map(|&b| rat_vec(&src.generators[b])).collect::<Vec<_>>(), i)
        .expect("shape");
    let b_inv = inverse(&b_mat).expect("independent");
    let gs = gram_invariant(src);
    let gd = gram_invariant(dst);
    let targets: BTreeMap<Vec<Int>, usize> = dst.generators.iter().cloned().enumerate().map(|(k, g)| (g, k)).collect();

    let mut out = Vec::new();
    let mut chosen: Vec<(usize, bool)> = Vec::new();
    search(
        &SearchCtx { src, dst, basis: &basis, b_inv: &b_inv, gs: &gs, gd: &gd, targets: &targets, limit },
        &mut chosen,
        &mut out,
    );
    out
}

struct SearchCtx<'a> {
    src: &'a Cone,
    dst: &'a Cone,
    basis: &'a [usize],
    b_inv: &'a RatMatrix,
    gs: &'a [Vec<Rat>],
    gd: &'a [Vec<Rat>],
    targets: &'a BTreeMap<Vec<Int>, usize>,
    limit: Option<usize>,
}

fn search(ctx: &SearchCtx<'_>, chosen: &mut Vec<(usize, bool)>, out: &mut Vec<IntMatrix>) {
    if ctx.limit.is_some_and(|l| out.len() >= l) {
        return;
    }
    let a = chosen.len();
    if a == ctx.basis.len() {
        if let Some(p) = complete_map(ctx, chosen) {
            out.push(p);
        }
        return;
    }
    let ba = ctx.basis[a];
    for t in 0..ctx.dst.generators.len() {
        if chosen.iter().any(|&(u, _)| u == t) || ctx.gs[ba][ba] != ctx.gd[t][t] {
            continue;
        }
        for neg in [false, true] {
            if a == 0 && neg {
                continue;
            }
            let consistent = chosen.iter().enumerate().all(|(c, &(tc, nc))| {
                let v = &ctx.gd[tc][t];
                let v = if nc != neg { -v } else { v.clone() };
                ctx.gs[ctx.basis[c]][ba] == v
            });
            if consistent {
                chosen.push((t, neg));
                search(ctx, chosen, out);
                chosen.pop();
            }
        }
    }
}

fn complete_map(ctx: &SearchCtx<'_>, chosen: &[(usize, bool)]) -> Option<IntMatrix> {
    let i = ctx.src.rank;
    let cols: Vec<Vec<Rat>> = chosen
        .iter()
        .map(|&(t, neg)| {
            let v = rat_vec(&ctx.dst.generators[t]);
            if neg {
                v.into_iter().map(|x| -x).collect()
            } else {
                v
            }
        })
        .collect();
    let y = RatMatrix::from_columns(&cols, i).ok()?;
    let p = y.mul(ctx.b_inv).ok()?.to_int()?;
    if !p.determinant().ok()?.abs().is_one() {
        return None;
    }
    let mut hit = vec![false; ctx.dst.generators.len()];
    for g in &ctx.src.generators {
        let img = sign_canonical(&p.mul_vec(g).ok()?);
        let &k = ctx.targets.get(&img)?;
        if hit[k] {
            return None;
        }
        hit[k] = true;
    }
    Some(p)
}

/// A matrix `Q ∈ GL(i, Z)` whose action `M ↦ ᵗQ⁻¹ M Q⁻¹` maps the generator
/// forms of `c1` bijectively onto those of `c2`.
pub fn cones_equivalent(c1: &Cone, c2: &Cone) -> Option<IntMatrix> {
    let p = generator_maps(c1, c2, Some(1)).into_iter().next()?;
    // forms ξξᵀ move to (Pξ)(Pξ)ᵀ, i.e. ᵗQ⁻¹ = P
    Some(linalg::invert_unimodular(&p).expect("unimodular").transpose())
}

/// Catalog record for one `GL`-orbit of cones.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CatalogEntry {
    pub name: String,
    /// Generators, or `None` for an entry known only by its counts and flags.
    pub cone: Option<Cone>,
    pub rank: usize,
    pub dim: usize,
    pub matroidal: Option<bool>,
    pub simplicial: Option<bool>,
    pub basic: Option<bool>,
    /// Known prefix of the invariant series of `Sym•(Span σ)` in the grading
    /// where `Span σ` sits in degree 1.
    pub invariant_series_override: Option<TruncatedSeries>,
    /// Number of orbits the entry stands for.
    pub multiplicity: usize,
}

impl CatalogEntry {
    /// Entry for a cone with generators; flags are computed.
    pub fn from_cone(name: &str, cone: Cone) -> Self {
        let cone = cone.with_name(name);
        CatalogEntry {
            name: name.to_string(),
            rank: cone_rank(&cone),
            dim: cone_dim(&cone),
            matroidal: Some(is_matroidal(&cone)),
            simplicial: Some(is_simplicial(&cone)),
            basic: Some(is_basic(&cone)),
            invariant_series_override: None,
            multiplicity: 1,
            cone: Some(cone),
        }
    }

    /// Entry without generators. Every cone of dimension below 10 is basic,
    /// so only matroidality varies; the invariant series is known in degree 0.
    pub fn placeholder(name: &str, rank: usize, dim: usize, matroidal: bool) -> Self {
        CatalogEntry {
            name: name.to_string(),
            cone: None,
            rank,
            dim,
            matroidal: Some(matroidal),
            simplicial: Some(true),
            basic: Some(true),
            invariant_series_override: Some(TruncatedSeries::one(0)),
            multiplicity: 1,
        }
    }

    pub fn is_placeholder(&self) -> bool {
        self.cone.is_none()
    }

    /// Recomputes the flags from the generators; `None` for placeholders.
    pub fn flags_consistent(&self) -> Option<bool> {
        let c = self.cone.as_ref()?;
        Some(
            self.rank == cone_rank(c)
                && self.dim == cone_dim(c)
                && self.matroidal == Some(is_matroidal(c))
                && self.simplicial == Some(is_simplicial(c))
                && self.basic == Some(is_basic(c)),
        )
    }
}

/// Deepest cone dimension the catalog covers.
pub const CATALOG_MAX_DIM: usize = 6;

fn named(name: &str, rank: usize, gens: &[&[i64]]) -> CatalogEntry {
    CatalogEntry::from_cone(name, Cone::from_i64(rank, gens).expect("catalog cone"))
}

fn graph_entry(name: &str, g: Graph, plus_ones: usize) -> CatalogEntry {
    CatalogEntry::from_cone(name, graphical_cone(&g, plus_ones).expect("connected"))
}

fn standard(i: usize) -> CatalogEntry {
    let name = vec!["1"; i].join("+");
    let gens = (0..i)
        .map(|k| {
            let mut v = vec![Int::zero(); i];
            v[k] = Int::one();
            v
        })
        .collect();
    CatalogEntry::from_cone(&name, Cone::new(i, gens).expect("standard cone"))
}

/// Orbit representatives of cones of dimension `1..=max_dim`, ordered by
/// dimension and then by rank.
pub fn catalog(max_dim: usize) -> Result<Vec<CatalogEntry>> {
    if max_dim > CATALOG_MAX_DIM {
        return Err(Error::CatalogIncomplete(format!("beyond cone dimension {CATALOG_MAX_DIM}")));
    }
    let mut out = Vec::new();
    for d in 1..=max_dim {
        out.extend(catalog_dim(d));
    }
    Ok(out)
}

fn catalog_dim(d: usize) -> Vec<CatalogEntry> {
    match d {
        1 => vec![standard(1)],
        2 => vec![standard(2)],
        3 => vec![named("K3", 2, &[&[1, 0], &[0, 1], &[1, -1]]), standard(3)],
        4 => vec![
            named("C4", 3, &[&[1, 0, 0], &[0, 1, 0], &[1, 0, -1], &[0, 1, -1]]),
            named("K3+1", 3, &[&[1, 0, 0], &[0, 1, 0], &[1, -1, 0], &[0, 0, 1]]),
            standard(4),
        ],
        5 => vec![
            named("K4-1", 3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 0, -1], &[0, 1, -1]]),
            named("K3+1+1", 4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[1, -1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]),
            named("C4+1", 4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[1, 0, -1, 0], &[0, 1, -1, 0], &[0, 0, 0, 1]]),
            named("C5", 4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[1, 0, 0, -1], &[0, 1, -1, 0], &[0, 0, 1, -1]]),
            standard(5),
            named(
                "NS",
                5,
                &[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0], &[0, 0, 1, 0, 0], &[0, 0, 0, 1, 0], &[-1, -1, -1, -1, 2]],
            ),
        ],
        6 => {
            let edges = |n: usize, e: &[(usize, usize)]| Graph::new(n, e).expect("simple graph");
            vec![
                graph_entry("K4", Graph::complete(4), 0),
                graph_entry("K3+K3", edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]), 0),
                graph_entry("K4-1+1", edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]), 1),
                graph_entry("Theta(1,2,3)", edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 1)]), 0),
                graph_entry("K2,3", edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]), 0),
                graph_entry("C6", Graph::cycle(6), 0),
                graph_entry("C5+1", Graph::cycle(5), 1),
                graph_entry("C4+1+1", Graph::cycle(4), 2),
                graph_entry("K3+1+1+1", Graph::cycle(3), 3),
                CatalogEntry::placeholder("N5", 5, 6, false),
                standard(6),
                CatalogEntry::placeholder("N6a", 6, 6, false),
                CatalogEntry::placeholder("N6b", 6, 6, false),
            ]
        }
        _ => Vec::new(),
    }
}

/// Looks up a catalog entry by name.
pub fn catalog_entry(name: &str) -> Result<CatalogEntry> {
    catalog(CATALOG_MAX_DIM)?.into_iter().find(|e| e.name == name).ok_or_else(|| Error::Unknown(name.to_string()))
}

/// Convenience for catalog cones with generators.
pub fn catalog_cone(name: &str) -> Result<Cone> {
    catalog_entry(name)?.cone.ok_or_else(|| Error::InvalidCone(format!("{name} has no generators")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_invariants_of_small_cones() {
        let k3 = catalog_cone("K3").unwrap();
        assert_eq!((cone_rank(&k3), cone_dim(&k3)), (2, 3));
        assert!(is_basic(&k3));
        let c4 = catalog_cone("C4").unwrap();
        assert_eq!(cone_rank(&c4), 3);
        assert_eq!(cone_rank(&catalog_cone("NS").unwrap()), 5);
        assert_eq!(cone_dim(&catalog_cone("1").unwrap()), 1);
    }

    #[test]
    fn orth_lattice_of_standard_cones() {
        let w = orth_lattice(&catalog_cone("1+1").unwrap());
        assert_eq!(w, vec![linalg::ints(&[0, 0, 1])]);
        assert_eq!(orth_lattice(&catalog_cone("1+1+1").unwrap()).len(), 3);
        assert!(orth_lattice(&catalog_cone("K3").unwrap()).is_empty());
    }

    #[test]
    fn rejects_bad_generators() {
        assert!(Cone::from_i64(2, &[&[2, 0], &[0, 1]]).is_err());
        assert!(Cone::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1]]).is_err());
        assert!(Cone::from_i64(2, &[&[1, 0]]).is_err());
        assert_eq!(graphical_cone(&Graph::new(3, &[(0, 1)]).unwrap(), 0), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn dependent_generators_are_not_simplicial() {
        let c = Cone::from_i64(2, &[&[1, 0], &[0, 1], &[1, 1], &[1, -1]]).unwrap();
        assert!(!is_simplicial(&c));
        assert!(!is_basic(&c));
    }

    #[test]
    fn single_edge_is_the_rank_one_cone() {
        let c = graphical_cone(&Graph::complete(2), 0).unwrap();
        assert_eq!(c.generators(), &[linalg::ints(&[1])]);
    }

    #[test]
    fn catalog_depth_is_enforced() {
        assert!(matches!(catalog(7), Err(Error::CatalogIncomplete(_))));
    }
}
