//! Stabilizers of cones in `GL(i, Z)` and their action on `Span(σ)`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::cones::{cone_rank, generator_maps, rank_one_coords, sym2_dim, sym2_pairs, Cone};
use crate::linalg::{rank, rat_vec, sign_canonical, solve_rational, Int, IntMatrix, Rat, RatMatrix};
use crate::{Error, Result};

/// Finite group acting linearly on a `dim`-dimensional space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAction {
    dim: usize,
    elements: Vec<RatMatrix>,
    /// For each element, the permutation it induces on the cone generators.
    permutations: Vec<Vec<usize>>,
}

impl GroupAction {
    /// Group given by explicit matrices; checks closure and invertibility.
    pub fn from_matrices(dim: usize, elements: Vec<RatMatrix>) -> Result<Self> {
        let mut uniq: Vec<RatMatrix> = Vec::new();
        for e in elements {
            if e.rows() != dim || !e.is_square() {
                return Err(Error::Shape(format!("{}x{} element in dimension {dim}", e.rows(), e.cols())));
            }
            if !uniq.contains(&e) {
                uniq.push(e);
            }
        }
        let g = GroupAction { dim, elements: uniq, permutations: Vec::new() };
        if !g.is_closed() || !g.elements.contains(&RatMatrix::identity(dim)) {
            return Err(Error::Inconsistent("matrices do not form a group".into()));
        }
        Ok(g)
    }

    /// Trivial group acting on a `dim`-dimensional space.
    pub fn trivial(dim: usize) -> Self {
        GroupAction { dim, elements: alloc::vec![RatMatrix::identity(dim)], permutations: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[RatMatrix] {
        &self.elements
    }

    /// Induced permutations of the cone generators (empty for groups not built
    /// from a cone).
    pub fn permutations(&self) -> &[Vec<usize>] {
        &self.permutations
    }

    /// Products of elements stay in the set.
    pub fn is_closed(&self) -> bool {
        let keys: BTreeSet<&[Rat]> = self.elements.iter().map(|e| e.entries()).collect();
        self.elements.iter().all(|a| self.elements.iter().all(|b| keys.contains(a.mul(b).expect("square").entries())))
    }

    /// Orbits of the generators under the induced permutations.
    pub fn generator_orbits(&self) -> Vec<Vec<usize>> {
        let Some(n) = self.permutations.first().map(Vec::len) else {
            return Vec::new();
        };
        let mut seen = alloc::vec![false; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit: Vec<usize> = self.permutations.iter().map(|p| p[start]).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &k in &orbit {
                seen[k] = true;
            }
            orbits.push(orbit);
        }
        orbits
    }

    /// Dimension of the fixed subspace, by averaging traces.
    pub fn fixed_dim(&self) -> Result<usize> {
        let mut sum = Rat::zero();
        for e in &self.elements {
            sum += e.trace();
        }
        let avg = sum / Rat::from_integer(Int::from(self.order()));
        if !avg.is_integer() {
            return Err(Error::Inconsistent("averaged trace is not an integer".into()));
        }
        usize::try_from(avg.to_integer()).map_err(|_| Error::Inconsistent("negative averaged trace".into()))
    }

    /// Dimension of the fixed subspace as the common kernel of all `g - 1`.
    pub fn fixed_dim_by_kernel(&self) -> usize {
        let d = self.dim;
        let mut rows = Vec::new();
        for e in &self.elements {
            for i in 0..d {
                rows.push((0..d).map(|j| if i == j { &e[(i, j)] - Rat::one() } else { e[(i, j)].clone() }).collect());
            }
        }
        let m = RatMatrix::from_rows(rows, d).expect("rows");
        d - rank(&m)
    }
}

/// Image of the stabilizer `{Q ∈ GL(i, Z) : Q σ = σ}` acting on `Span(σ)`.
///
/// The basis of `Span(σ)` is the first maximal independent subset of the
/// generator forms. Elements acting trivially (such as `-1`) are identified.
pub fn stabilizer_action(c: &Cone) -> Result<GroupAction> {
    if cone_rank(c) != c.genus_rank() {
        return Err(Error::InvalidCone("generators do not span the ambient space".into()));
    }
    let forms: Vec<Vec<Int>> = c.generators().iter().map(|g| rank_one_coords(g)).collect();
    let m = sym2_dim(c.genus_rank());
    let mut basis: Vec<usize> = Vec::new();
    for (j, _) in forms.iter().enumerate() {
        let mut trial: Vec<Vec<Rat>> = basis.iter().map(|&b| rat_vec(&forms[b])).collect();
        trial.push(rat_vec(&forms[j]));
        if rank(&RatMatrix::from_rows(trial, m)?) == basis.len() + 1 {
            basis.push(j);
        }
    }
    let d = basis.len();
    let b_mat = RatMatrix::from_columns(&basis.iter().map(|&b| rat_vec(&forms[b])).collect::<Vec<_>>(), m)?;
    let coords: Vec<Vec<Rat>> = forms
        .iter()
        .map(|f| solve_rational(&b_mat, &rat_vec(f)).ok_or_else(|| Error::Inconsistent("form outside span".into())))
        .collect::<Result<_>>()?;

    let index: BTreeMap<&Vec<Int>, usize> = c.generators().iter().enumerate().map(|(k, g)| (g, k)).collect();
    let mut perms: BTreeSet<Vec<usize>> = BTreeSet::new();
    for p in generator_maps(c, c, None) {
        let perm = c
            .generators()
            .iter()
            .map(|g| {
                let img = sign_canonical(&p.mul_vec(g).expect("shape"));
                index.get(&img).copied().ok_or_else(|| Error::Inconsistent("map leaves the cone".into()))
            })
            .collect::<Result<Vec<usize>>>()?;
        perms.insert(perm);
    }
    let permutations: Vec<Vec<usize>> = perms.into_iter().collect();
    let elements = permutations
        .iter()
        .map(|perm| RatMatrix::from_columns(&basis.iter().map(|&b| coords[perm[b]].clone()).collect::<Vec<_>>(), d))
        .collect::<Result<Vec<_>>>()?;
    Ok(GroupAction { dim: d, elements, permutations })
}

/// Matrix of the substitution `x_j ↦ Σ_a q_ja x_a` on `Sym²`, in the basis `T_k = x_k²`,
/// `P_jk = 2 x_j x_k` (`j < k`), ordered as [`sym2_pairs`]. With the convention
/// `P_kk = 2 T_k`, the image of `P_jk` is `Σ_a Σ_b q_ja q_kb P_ab`.
pub fn sym2_action(q: &IntMatrix, i: usize) -> Result<RatMatrix> {
    if q.rows() != i || q.cols() != i {
        return Err(Error::Shape(format!("expected {i}x{i} matrix")));
    }
    let pairs = sym2_pairs(i);
    let pos: BTreeMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let n = pairs.len();
    let mut out = RatMatrix::zeros(n, n);
    for (col, &(j, k)) in pairs.iter().enumerate() {
        for a in 0..i {
            for b in 0..i {
                let c = &q[(j, a)] * &q[(k, b)];
                if c.is_zero() {
                    continue;
                }
                let (lo, hi) = (a.min(b), a.max(b));
                // image of T_j is (Σ q_ja x_a)², half of the P_jj expansion
                let mut coeff = Rat::from_integer(c);
                if j == k {
                    coeff /= Rat::from_integer(Int::from(2));
                }
                if lo == hi {
                    coeff *= Rat::from_integer(Int::from(2));
                }
                out[(pos[&(lo, hi)], col)] += coeff;
            }
        }
    }
    Ok(out)
}

/// Dimension of the `G(σ)`-invariant part of `Span(σ)`.
pub fn invariant_dim_degree1(c: &Cone) -> Result<usize> {
    stabilizer_action(c)?.fixed_dim()
}
