//! Molien series, free Hilbert series, Koszul strands and `Sp`-invariant counts.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cones::{orth_lattice, sym2_dim, Cone};
use crate::linalg::{binomial, combinations, rank, Int, IntMatrix, Rat, RatMatrix};
use crate::stabilizers::GroupAction;
use crate::{Error, Result, TruncatedSeries};

/// Coefficients of `det(1 - t a)`, from degree 0 to `d`, by Faddeev–LeVerrier.
pub fn reversed_charpoly(a: &RatMatrix) -> Vec<Rat> {
    let d = a.rows();
    // c[k] is the coefficient of λ^(d-k) in det(λ - a), so also of t^k in det(1 - t a)
    let mut c = vec![Rat::one()];
    let mut m = RatMatrix::zeros(d, d);
    for k in 1..=d {
        let mut next = a.mul(&m).expect("square");
        for i in 0..d {
            next[(i, i)] += &c[k - 1];
        }
        m = next;
        let am = a.mul(&m).expect("square");
        c.push(-am.trace() / Rat::from_integer(Int::from(k)));
    }
    c
}

/// `(1/|G|) Σ_g 1/det(1 - t ρ(g))`, truncated at `max_deg`.
pub fn molien(g: &GroupAction, max_deg: usize) -> Result<TruncatedSeries> {
    let mut classes: BTreeMap<Vec<Rat>, usize> = BTreeMap::new();
    for e in g.elements() {
        *classes.entry(reversed_charpoly(e)).or_default() += 1;
    }
    let mut total = vec![Rat::zero(); max_deg + 1];
    for (poly, count) in classes {
        if !poly[0].is_one() {
            return Err(Error::NotInvertible);
        }
        // power-series inverse of a polynomial with constant term 1
        let mut inv = vec![Rat::zero(); max_deg + 1];
        inv[0] = Rat::one();
        for k in 1..=max_deg {
            let mut acc = Rat::zero();
            for j in 1..poly.len().min(k + 1) {
                acc += &poly[j] * &inv[k - j];
            }
            inv[k] = -acc;
        }
        let w = Rat::from_integer(Int::from(count));
        for (t, x) in total.iter_mut().zip(inv) {
            *t += x * &w;
        }
    }
    let order = Rat::from_integer(Int::from(g.order()));
    let coeffs = total
        .into_iter()
        .enumerate()
        .map(|(k, x)| {
            let v = x / &order;
            if !v.is_integer() || v.is_negative() {
                return Err(Error::Inconsistent(format!("Molien coefficient {v} in degree {k}")));
            }
            Ok(v.to_integer())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TruncatedSeries::new(coeffs, max_deg))
}

/// `Π 1/(1 - t^d)` over `degrees`.
pub fn hilbert_free(degrees: &[usize], max_deg: usize) -> TruncatedSeries {
    TruncatedSeries::free_algebra(degrees, max_deg)
}

/// `dim Sym^l(Sym² Q^n) = C(n(n+1)/2 + l - 1, l)`.
pub fn sp_invariant_dim(n: usize, l: usize) -> Int {
    let m = sym2_dim(n) as u64;
    if l == 0 {
        return Int::one();
    }
    binomial(m + l as u64 - 1, l as u64)
}

/// Homology of one strand of the Koszul complex `⋀^q W ⊗ Sym^r M`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KoszulStrand {
    /// `r + q`.
    pub total: usize,
    /// `dim ⋀^q W ⊗ Sym^(total-q) M` for `q = 0..=min(total, rank W)`.
    pub chain_dims: Vec<Int>,
    /// Homology dimension at each position `q`.
    pub homology: Vec<Int>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KoszulReport {
    /// Rank of `M`, the dual of `Sym²(Z^i)`.
    pub m_rank: usize,
    /// Rank of `W = σ^⊥ ∩ M`.
    pub w_rank: usize,
    pub strands: Vec<KoszulStrand>,
}

impl KoszulReport {
    /// Homology in position 0 of each strand, i.e. `dim Sym^k(M/W)`.
    pub fn bottom_row(&self) -> Vec<Int> {
        self.strands.iter().map(|s| s.homology[0].clone()).collect()
    }

    /// Positions `q >= 1` are acyclic and the bottom row equals `dim Sym^k(Q^(m-w))`.
    pub fn passes(&self) -> bool {
        let u = (self.m_rank - self.w_rank) as u64;
        self.strands
            .iter()
            .all(|s| s.homology.iter().skip(1).all(Zero::is_zero) && s.homology[0] == sym_dim(u, s.total as u64))
    }
}

/// `dim Sym^k(Q^n)`.
fn sym_dim(n: u64, k: u64) -> Int {
    if n == 0 {
        return if k == 0 { Int::one() } else { Int::zero() };
    }
    binomial(n + k - 1, k)
}

/// Maximal total degree accepted by the Koszul checks.
pub const KOSZUL_MAX_TOTAL: usize = 8;

/// Koszul strands for `W ⊂ M`, computed in a basis of `M ⊗ Q` that extends a
/// basis of `W` by coordinate functionals.
///
/// In such a basis the differential preserves the multidegree in all `N`
/// variables, so each strand splits into blocks indexed by a multidegree
/// `α`; the block is the Koszul complex of the Boolean lattice on the
/// support of the `W`-part of `α`. Block ranks are computed exactly once per
/// support size, and the block dimensions are checked to add up to the
/// dimensions of the whole strand.
pub fn koszul_check(c: &Cone, max_total: usize) -> Result<KoszulReport> {
    if max_total > KOSZUL_MAX_TOTAL {
        return Err(Error::OutOfRange(format!("total degree {max_total} exceeds {KOSZUL_MAX_TOTAL}")));
    }
    let w_basis = orth_lattice(c);
    let n_m = sym2_dim(c.genus_rank());
    let w = w_basis.len();
    adapted_basis(&w_basis, n_m)?;
    let u = n_m - w;

    // homology of the Boolean Koszul block on s variables, per position q
    let blocks: Vec<Vec<usize>> = (0..=w.min(max_total)).map(boolean_koszul_homology).collect();

    let mut strands = Vec::new();
    for n in 0..=max_total {
        let top = n.min(w);
        let mut chain_dims = Vec::new();
        let mut homology = Vec::new();
        for q in 0..=top {
            let whole = binomial(w as u64, q as u64) * sym_dim(n_m as u64, (n - q) as u64);
            let mut from_blocks = Int::zero();
            let mut h = Int::zero();
            for (s, block) in blocks.iter().enumerate().take(top + 1).skip(q) {
                let count = multidegree_count(w, u, n, s);
                from_blocks += &count * binomial(s as u64, q as u64);
                h += &count * Int::from(block[q]);
            }
            if from_blocks != whole {
                return Err(Error::Inconsistent(format!("strand {n}, position {q}: blocks {from_blocks} vs {whole}")));
            }
            chain_dims.push(whole);
            homology.push(h);
        }
        strands.push(KoszulStrand { total: n, chain_dims, homology });
    }
    Ok(KoszulReport { m_rank: n_m, w_rank: w, strands })
}

/// Completes a basis of `W` by coordinate vectors to a basis of `Q^n`.
fn adapted_basis(w_basis: &[Vec<Int>], n: usize) -> Result<IntMatrix> {
    let mut rows: Vec<Vec<Int>> = w_basis.to_vec();
    for k in 0..n {
        if rows.len() == n {
            break;
        }
        let mut e = vec![Int::zero(); n];
        e[k] = Int::one();
        let mut trial = rows.clone();
        trial.push(e);
        if IntMatrix::from_rows(trial.clone(), n)?.rank() == trial.len() {
            rows = trial;
        }
    }
    let m = IntMatrix::from_rows(rows, n)?;
    if m.rank() != n {
        return Err(Error::Inconsistent("W basis is not linearly independent".into()));
    }
    Ok(m)
}

/// Number of exponent vectors on `w + u` variables of total degree `n` whose
/// first `w` entries have exactly `s` nonzero values.
fn multidegree_count(w: usize, u: usize, n: usize, s: usize) -> Int {
    if s > n {
        return Int::zero();
    }
    // choose the support, then distribute n among s (>= 1) and u (>= 0) slots
    let slots = (s + u) as u64;
    let spread = if slots == 0 {
        if n == 0 {
            Int::one()
        } else {
            Int::zero()
        }
    } else {
        binomial(n as u64 - s as u64 + slots - 1, slots - 1)
    };
    binomial(w as u64, s as u64) * spread
}

/// Homology dimensions of `0 → ⋀^s → ... → ⋀^0` over the subsets of an
/// `s`-element set, with the Koszul differential `e_S ↦ Σ ± e_(S - j)`.
fn boolean_koszul_homology(s: usize) -> Vec<usize> {
    let subsets: Vec<Vec<Vec<usize>>> = (0..=s).map(|q| combinations(s, q)).collect();
    // rank of d_q : ⋀^q → ⋀^(q-1)
    let mut ranks = vec![0; s + 2];
    for q in 1..=s {
        let index: BTreeMap<&Vec<usize>, usize> = subsets[q - 1].iter().enumerate().map(|(k, v)| (v, k)).collect();
        let mut m = RatMatrix::zeros(subsets[q - 1].len(), subsets[q].len());
        for (col, set) in subsets[q].iter().enumerate() {
            for j in 0..set.len() {
                let mut rest = set.clone();
                rest.remove(j);
                let sign = if j % 2 == 0 { Rat::one() } else { -Rat::one() };
                m[(index[&rest], col)] = sign;
            }
        }
        ranks[q] = rank(&m);
    }
    (0..=s).map(|q| subsets[q].len() - ranks[q] - ranks[q + 1]).collect()
}

/// Koszul strands built directly in the coordinate basis of `M`, using the
/// actual `W` vectors in the differential. Strands whose chain groups exceed
/// `max_cells` are skipped.
pub fn koszul_check_direct(c: &Cone, max_total: usize, max_cells: usize) -> Result<KoszulReport> {
    let w_basis = orth_lattice(c);
    let n_m = sym2_dim(c.genus_rank());
    let w = w_basis.len();
    let mut strands = Vec::new();
    for n in 0..=max_total {
        let top = n.min(w);
        let dims: Vec<Int> =
            (0..=top).map(|q| binomial(w as u64, q as u64) * sym_dim(n_m as u64, (n - q) as u64)).collect();
        if dims.iter().any(|d| d.to_usize().map_or(true, |d| d > max_cells)) {
            break;
        }
        let monos: Vec<Vec<Vec<usize>>> = (0..=n).map(|r| monomials(n_m, r)).collect();
        let wedges: Vec<Vec<Vec<usize>>> = (0..=top).map(|q| combinations(w, q)).collect();
        let mut ranks = vec![0; top + 2];
        for q in 1..=top {
            let r = n - q;
            let target_mono: BTreeMap<&Vec<usize>, usize> =
                monos[r + 1].iter().enumerate().map(|(k, v)| (v, k)).collect();
            let target_wedge: BTreeMap<&Vec<usize>, usize> =
                wedges[q - 1].iter().enumerate().map(|(k, v)| (v, k)).collect();
            let rows = wedges[q - 1].len() * monos[r + 1].len();
            let cols = wedges[q].len() * monos[r].len();
            let mut m = RatMatrix::zeros(rows, cols);
            for (wi, set) in wedges[q].iter().enumerate() {
                for (mi, mono) in monos[r].iter().enumerate() {
                    let col = wi * monos[r].len() + mi;
                    for j in 0..set.len() {
                        let mut rest = set.clone();
                        let wj = rest.remove(j);
                        let sign = if j % 2 == 0 { 1 } else { -1 };
                        for (var, coeff) in w_basis[wj].iter().enumerate() {
                            if coeff.is_zero() {
                                continue;
                            }
                            let mut prod = mono.clone();
                            let pos = prod.partition_point(|&x| x <= var);
                            prod.insert(pos, var);
                            let row = target_wedge[&rest] * monos[r + 1].len() + target_mono[&prod];
                            m[(row, col)] += Rat::from_integer(coeff * Int::from(sign));
                        }
                    }
                }
            }
            ranks[q] = rank(&m);
        }
        let homology = (0..=top).map(|q| &dims[q] - Int::from(ranks[q] + ranks[q + 1])).collect();
        strands.push(KoszulStrand { total: n, chain_dims: dims, homology });
    }
    Ok(KoszulReport { m_rank: n_m, w_rank: w, strands })
}

/// Monomials of degree `r` in `n` variables as sorted variable lists, in
/// lexicographic order.
fn monomials(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(n: usize, r: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(n, r, v, cur, out);
            cur.pop();
        }
    }
    rec(n, r, 0, &mut cur, &mut out);
    out
}
