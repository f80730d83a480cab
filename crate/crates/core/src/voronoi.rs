//! Voronoi reduction theory for small `g`: minimal vectors, perfect domains,
//! the neighbor walk and the faces of the perfect cone decomposition.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::cones::{cone_dim, cones_equivalent, generator_maps, rank_one_coords, sym2_dim, sym2_pairs, Cone};
use crate::linalg::{dot, inverse, invert_unimodular, primitive, primitive_from_rat, rank, rat_vec, sign_canonical};
use crate::{Error, Int, IntMatrix, Rat, RatMatrix, Result};

/// Largest genus handled by [`enumerate_perfect`] and [`classify_faces`].
pub const MAX_WALK_GENUS: usize = 4;

/// Positive-definite symmetric integer matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticForm {
    matrix: IntMatrix,
}

impl QuadraticForm {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_square() || matrix != matrix.transpose() {
            return Err(Error::Shape("quadratic form must be a symmetric square matrix".into()));
        }
        if ldl(&matrix.to_rat()).is_none() {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(QuadraticForm { matrix })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::new(IntMatrix::from_i64_rows(rows))
    }

    /// The root form of `A_g`: 2 on the diagonal, 1 elsewhere.
    pub fn a_root(g: usize) -> Self {
        let m = IntMatrix::from_fn(g, g, |r, s| Int::from(if r == s { 2 } else { 1 }));
        QuadraticForm { matrix: m }
    }

    /// Gram matrix of the `D_4` root lattice.
    pub fn d4_root() -> Self {
        Self::from_i64_rows(&[&[2, -1, 0, 0], &[-1, 2, -1, -1], &[0, -1, 2, 0], &[0, -1, 0, 2]])
            .expect("positive definite")
    }

    pub fn genus(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// `ξᵀ Q ξ`.
    pub fn evaluate(&self, xi: &[Int]) -> Int {
        dot(xi, &self.matrix.mul_vec(xi).expect("shape"))
    }

    /// Rescaled to a primitive integer matrix.
    pub fn normalized(&self) -> Self {
        QuadraticForm { matrix: primitive_matrix(&self.matrix.to_rat()) }
    }

    /// `ᵗU Q U`.
    pub fn transform(&self, u: &IntMatrix) -> Result<Self> {
        let m = u.transpose().mul(&self.matrix)?.mul(u)?;
        Self::new(m)
    }
}

fn primitive_matrix(m: &RatMatrix) -> IntMatrix {
    let entries = primitive_from_rat(m.entries());
    IntMatrix::from_fn(m.rows(), m.cols(), |r, s| entries[r * m.cols() + s].clone())
}

/// Decomposition `Q[x] = Σ_i d_i (x_i + Σ_{j>i} m_ij x_j)²`, or `None` when
/// some pivot is not positive.
fn ldl(q: &RatMatrix) -> Option<(Vec<Rat>, RatMatrix)> {
    let g = q.rows();
    let mut d: Vec<Rat> = Vec::with_capacity(g);
    let mut m = RatMatrix::zeros(g, g);
    for i in 0..g {
        let mut di = q[(i, i)].clone();
        for k in 0..i {
            di -= &d[k] * &m[(k, i)] * &m[(k, i)];
        }
        if !di.is_positive() {
            return None;
        }
        for j in i + 1..g {
            let mut x = q[(i, j)].clone();
            for k in 0..i {
                x -= &d[k] * &m[(k, i)] * &m[(k, j)];
            }
            m[(i, j)] = x / &di;
        }
        d.push(di);
    }
    Some((d, m))
}

fn evaluate_rat(q: &RatMatrix, xi: &[Int]) -> Rat {
    let x = rat_vec(xi);
    dot(&x, &q.mul_vec(&x).expect("shape"))
}

/// All nonzero `x` (one of each pair `±x`) with `Q[x] <= bound`, with their values.
fn short_vectors(q: &RatMatrix, bound: &Rat) -> Result<Vec<(Rat, Vec<Int>)>> {
    let (d, m) = ldl(q).ok_or(Error::NotPositiveDefinite)?;
    let g = q.rows();
    let mut out = Vec::new();
    let mut x = vec![Int::zero(); g];
    enumerate_level(g, &d, &m, bound, &Rat::zero(), &mut x, &mut out);
    Ok(out)
}

fn enumerate_level(
    level: usize,
    d: &[Rat],
    m: &RatMatrix,
    bound: &Rat,
    partial: &Rat,
    x: &mut Vec<Int>,
    out: &mut Vec<(Rat, Vec<Int>)>,
) {
    if level == 0 {
        if x.iter().any(|v| !v.is_zero()) && sign_canonical(x) == *x {
            out.push((partial.clone(), x.clone()));
        }
        return;
    }
    let i = level - 1;
    let mut center = Rat::zero();
    for j in i + 1..x.len() {
        center -= &m[(i, j)] * Rat::from_integer(x[j].clone());
    }
    let room = bound - partial;
    if room.is_negative() {
        return;
    }
    let t = &room / &d[i];
    let s = t.floor().to_integer().sqrt() + Int::one();
    let lo = center.floor().to_integer() - &s;
    let hi = center.ceil().to_integer() + &s;
    let mut xi = lo;
    while xi <= hi {
        let diff = Rat::from_integer(xi.clone()) - &center;
        let value = partial + &d[i] * &diff * &diff;
        if &value <= bound {
            x[i] = xi.clone();
            enumerate_level(i, d, m, bound, &value, x, out);
        }
        xi += 1;
    }
    x[i] = Int::zero();
}

/// Arithmetic minimum and minimal vectors (up to sign) of a rational form.
fn minimum_rat(q: &RatMatrix) -> Result<(Rat, Vec<Vec<Int>>)> {
    let bound = (0..q.rows()).map(|i| q[(i, i)].clone()).min().ok_or(Error::Shape("empty form".into()))?;
    let found = short_vectors(q, &bound)?;
    let mu = found.iter().map(|(v, _)| v.clone()).min().expect("unit vectors lie within the bound");
    let mut vs: Vec<Vec<Int>> = found.into_iter().filter(|(v, _)| *v == mu).map(|(_, x)| x).collect();
    vs.sort();
    Ok((mu, vs))
}

/// Arithmetic minimum `μ(Q)` and the minimal vectors, one of each `±ξ`.
pub fn min_vectors(q: &QuadraticForm) -> Result<(Int, Vec<Vec<Int>>)> {
    let (mu, vs) = minimum_rat(&q.matrix.to_rat())?;
    Ok((mu.to_integer(), vs))
}

/// Perfect form, stored as a primitive integer matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PerfectForm {
    form: QuadraticForm,
    minimum: Int,
    min_vectors: Vec<Vec<Int>>,
}

impl PerfectForm {
    /// Normalizes `q` and checks that its minimal vectors determine it.
    pub fn new(q: &QuadraticForm) -> Result<Self> {
        let form = q.normalized();
        let (minimum, min_vectors) = min_vectors(&form)?;
        let g = form.genus();
        let rows: Vec<Vec<Int>> = min_vectors.iter().map(|v| rank_one_coords(v)).collect();
        if IntMatrix::from_rows(rows, sym2_dim(g))?.rank() != sym2_dim(g) {
            return Err(Error::NotPerfect);
        }
        Ok(PerfectForm { form, minimum, min_vectors })
    }

    pub fn form(&self) -> &QuadraticForm {
        &self.form
    }

    pub fn minimum(&self) -> &Int {
        &self.minimum
    }

    pub fn min_vectors(&self) -> &[Vec<Int>] {
        &self.min_vectors
    }

    pub fn genus(&self) -> usize {
        self.form.genus()
    }
}

/// The Voronoi domain: the cone spanned by `ξξᵀ` over the minimal vectors.
pub fn domain(p: &PerfectForm) -> Result<Cone> {
    Cone::new(p.genus(), p.min_vectors.clone())
}

/// Facet of a full-dimensional cone in `Sym²`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Facet {
    /// Inner normal in the coordinates dual to [`rank_one_coords`], primitive.
    pub normal: Vec<Int>,
    /// Indices of the generators lying on the facet.
    pub tight: Vec<usize>,
}

/// Facets of a full-dimensional cone, by the double description method.
pub fn facets(c: &Cone) -> Result<Vec<Facet>> {
    let d = sym2_dim(c.genus_rank());
    if cone_dim(c) != d {
        return Err(Error::InvalidCone("cone is not full-dimensional".into()));
    }
    let rays: Vec<Vec<Int>> = c.generators().iter().map(|g| rank_one_coords(g)).collect();
    let normals = dual_extreme_rays(&rays, d)?;
    let mut out: Vec<Facet> = normals
        .into_iter()
        .map(|normal| {
            let tight = (0..rays.len()).filter(|&k| dot(&rays[k], &normal).is_zero()).collect();
            Facet { normal, tight }
        })
        .collect();
    out.sort_by(|a, b| a.tight.cmp(&b.tight));
    Ok(out)
}

/// Extreme rays of `{y : ⟨a, y⟩ >= 0 for every row a}`, for rows spanning `R^d`.
fn dual_extreme_rays(rows: &[Vec<Int>], d: usize) -> Result<Vec<Vec<Int>>> {
    if rows.len() > 128 {
        return Err(Error::OutOfRange("more than 128 rays".into()));
    }
    let mut basis: Vec<usize> = Vec::new();
    for k in 0..rows.len() {
        let mut trial: Vec<Vec<Int>> = basis.iter().map(|&b| rows[b].clone()).collect();
        trial.push(rows[k].clone());
        if IntMatrix::from_rows(trial, d)?.rank() == basis.len() + 1 {
            basis.push(k);
        }
    }
    if basis.len() != d {
        return Err(Error::InvalidCone("rays do not span".into()));
    }
    let a_b = RatMatrix::from_rows(basis.iter().map(|&b| rat_vec(&rows[b])).collect(), d)?;
    let inv = inverse(&a_b).expect("independent rows");
    let zero_set = |y: &[Int], done: &[usize]| -> u128 {
        done.iter().filter(|&&k| dot(&rows[k], y).is_zero()).fold(0, |z, &k| z | 1 << k)
    };
    let mut done: Vec<usize> = basis.clone();
    // the simplicial start: columns of the inverse
    let mut current: Vec<(Vec<Int>, u128)> = (0..d)
        .map(|j| {
            let y = primitive_from_rat(&inv.column(j));
            let z = zero_set(&y, &done);
            (y, z)
        })
        .collect();
    for (k, row) in rows.iter().enumerate() {
        if basis.contains(&k) {
            continue;
        }
        let values: Vec<Int> = current.iter().map(|(y, _)| dot(row, y)).collect();
        let mut next: Vec<(Vec<Int>, u128)> = Vec::new();
        for (idx, (y, z)) in current.iter().enumerate() {
            if !values[idx].is_negative() {
                let z = if values[idx].is_zero() { z | 1 << k } else { *z };
                next.push((y.clone(), z));
            }
        }
        for (p, (yp, zp)) in current.iter().enumerate() {
            if !values[p].is_positive() {
                continue;
            }
            for (n, (yn, zn)) in current.iter().enumerate() {
                if !values[n].is_negative() {
                    continue;
                }
                let common = zp & zn;
                if (common.count_ones() as usize) + 2 < d {
                    continue;
                }
                let adjacent = current.iter().enumerate().all(|(r, (_, zr))| r == p || r == n || zr & common != common);
                if !adjacent {
                    continue;
                }
                let y: Vec<Int> = yn.iter().zip(yp).map(|(a, b)| &values[p] * a - &values[n] * b).collect();
                next.push((primitive(&y), common | 1 << k));
            }
        }
        done.push(k);
        current = next;
    }
    let mut out: Vec<Vec<Int>> = current.into_iter().map(|(y, _)| y).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Symmetric matrix `R` with `ξᵀ R ξ = 2 ⟨normal, ξξᵀ⟩`.
fn normal_matrix(normal: &[Int], g: usize) -> RatMatrix {
    let mut r = RatMatrix::zeros(g, g);
    for (k, &(a, b)) in sym2_pairs(g).iter().enumerate() {
        let y = Rat::from_integer(normal[k].clone());
        if a == b {
            r[(a, a)] = &y + &y;
        } else {
            r[(a, b)] = y.clone();
            r[(b, a)] = y;
        }
    }
    r
}

fn add_scaled(q: &RatMatrix, r: &RatMatrix, u: &Rat) -> RatMatrix {
    RatMatrix::from_fn(q.rows(), q.cols(), |i, j| &q[(i, j)] + u * &r[(i, j)])
}

/// Upper bound on the halvings and doublings in the line search.
const LINE_SEARCH_STEPS: usize = 256;

/// The perfect form sharing the facet `f` with the domain of `p`: the point
/// `Q + λR` at which vectors with `R[ξ] < 0` first reach the minimum.
pub fn neighbor(p: &PerfectForm, f: &Facet) -> Result<PerfectForm> {
    let g = p.genus();
    if f.normal.len() != sym2_dim(g) {
        return Err(Error::Shape("facet normal has the wrong length".into()));
    }
    let q = p.form.matrix.to_rat();
    let r = normal_matrix(&f.normal, g);
    let mu = Rat::from_integer(p.minimum.clone());
    for (k, v) in p.min_vectors.iter().enumerate() {
        let value = evaluate_rat(&r, v);
        if value.is_negative() || (value.is_zero() != f.tight.contains(&k)) {
            return Err(Error::InvalidCone("not a facet of this domain".into()));
        }
    }
    // bisect for a step where the form is positive definite with a smaller
    // minimum; `lo` is known to be too short, `hi` to leave the cone
    let two = Rat::from_integer(Int::from(2));
    let mut lo = Rat::zero();
    let mut hi: Option<Rat> = None;
    let mut u = Rat::one();
    let mut steps = 0;
    loop {
        steps += 1;
        if steps > LINE_SEARCH_STEPS {
            return Err(Error::InvalidCone("line search failed: not a facet".into()));
        }
        let trial = add_scaled(&q, &r, &u);
        if ldl(&trial).is_none() {
            u = (&lo + &u) / &two;
            hi = Some(u.clone() * &two - &lo);
            continue;
        }
        if minimum_rat(&trial)?.0 >= mu {
            lo = u.clone();
            u = match &hi {
                Some(h) => (&u + h) / &two,
                None => &u * &two,
            };
            continue;
        }
        break;
    }
    // shrink to the first contact with a new vector
    loop {
        steps += 1;
        if steps > LINE_SEARCH_STEPS {
            return Err(Error::InvalidCone("line search failed: not a facet".into()));
        }
        let trial = add_scaled(&q, &r, &u);
        let below: Vec<Vec<Int>> =
            short_vectors(&trial, &mu)?.into_iter().filter(|(v, _)| *v < mu).map(|(_, x)| x).collect();
        if below.is_empty() {
            return PerfectForm::new(&QuadraticForm::new(primitive_matrix(&trial))?);
        }
        for x in below {
            let rx = evaluate_rat(&r, &x);
            let step = (evaluate_rat(&q, &x) - &mu) / -rx;
            if step < u {
                u = step;
            }
        }
    }
}

/// `U` with `ᵗU Q1 U = Q2` after normalizing both forms, if one exists.
pub fn form_equivalence(p1: &PerfectForm, p2: &PerfectForm) -> Option<IntMatrix> {
    if p1.genus() != p2.genus()
        || p1.min_vectors.len() != p2.min_vectors.len()
        || p1.form.matrix.determinant().ok()? != p2.form.matrix.determinant().ok()?
    {
        return None;
    }
    let (d1, d2) = (domain(p1).ok()?, domain(p2).ok()?);
    // M(Q2) = U⁻¹ M(Q1), so maps of minimal vectors give U⁻¹
    generator_maps(&d1, &d2, None).into_iter().find_map(|pinv| {
        let u = invert_unimodular(&pinv).ok()?;
        let image = u.transpose().mul(&p1.form.matrix).ok()?.mul(&u).ok()?;
        (image == p2.form.matrix).then_some(u)
    })
}

pub fn equivalent_forms(p1: &PerfectForm, p2: &PerfectForm) -> bool {
    form_equivalence(p1, p2).is_some()
}

fn check_genus(g: usize) -> Result<()> {
    if g == 0 || g > MAX_WALK_GENUS {
        return Err(Error::OutOfRange(format!("genus {g} is out of desk-scale scope (1..={MAX_WALK_GENUS})")));
    }
    Ok(())
}

/// Representatives of the perfect forms in genus `g`, by the neighbor walk
/// starting from `A_g`.
pub fn enumerate_perfect(g: usize) -> Result<Vec<PerfectForm>> {
    check_genus(g)?;
    let mut found = vec![PerfectForm::new(&QuadraticForm::a_root(g))?];
    let mut next = 0;
    while next < found.len() {
        let p = found[next].clone();
        next += 1;
        for f in facets(&domain(&p)?)? {
            // in genus 1 the only facet is the origin, on the boundary
            if f.tight.is_empty() {
                continue;
            }
            let n = neighbor(&p, &f)?;
            if !found.iter().any(|known| equivalent_forms(known, &n)) {
                found.push(n);
            }
        }
    }
    Ok(found)
}

/// Faces of a full-dimensional cone as sorted generator index sets, from the
/// domain itself down to single rays.
pub fn faces(c: &Cone) -> Result<Vec<Vec<usize>>> {
    let fs = facets(c)?;
    let all: Vec<usize> = (0..c.generators().len()).collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    seen.insert(all.clone());
    let mut frontier = vec![all];
    while let Some(face) = frontier.pop() {
        for f in &fs {
            let meet: Vec<usize> = face.iter().copied().filter(|k| f.tight.contains(k)).collect();
            if !meet.is_empty() && seen.insert(meet.clone()) {
                frontier.push(meet);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Cheap invariants of a cone up to `GL`-equivalence.
fn face_key(c: &Cone) -> (usize, usize, usize, bool) {
    (cone_dim(c), c.genus_rank(), c.generators().len(), crate::cones::is_matroidal(c))
}

/// `GL(g, Z)`-classes of cones of the perfect cone decomposition in genus `g`
/// with dimension at most `max_dim`, each written in its own span.
pub fn classify_faces(g: usize, max_dim: usize) -> Result<Vec<Cone>> {
    check_genus(g)?;
    let mut classes: Vec<Cone> = Vec::new();
    for p in enumerate_perfect(g)? {
        let dom = domain(&p)?;
        for face in faces(&dom)? {
            let gens: Vec<Vec<Int>> = face.iter().map(|&k| dom.generators()[k].clone()).collect();
            let rows: Vec<Vec<Rat>> = gens.iter().map(|v| rat_vec(&rank_one_coords(v))).collect();
            if rank(&RatMatrix::from_rows(rows, sym2_dim(g))?) > max_dim {
                continue;
            }
            let c = Cone::in_own_span(&gens)?;
            let key = face_key(&c);
            let known = classes.iter().any(|k| face_key(k) == key && cones_equivalent(k, &c).is_some());
            if !known {
                classes.push(c);
            }
        }
    }
    classes.sort_by_key(|c| (cone_dim(c), c.genus_rank(), c.generators().len()));
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ints;

    #[test]
    fn identity_minimum() {
        let q = QuadraticForm::from_i64_rows(&[&[1, 0], &[0, 1]]).unwrap();
        let (mu, vs) = min_vectors(&q).unwrap();
        assert_eq!(mu, Int::one());
        assert_eq!(vs, vec![ints(&[0, 1]), ints(&[1, 0])]);
    }

    #[test]
    fn rejects_indefinite() {
        assert_eq!(QuadraticForm::from_i64_rows(&[&[1, 2], &[2, 1]]), Err(Error::NotPositiveDefinite));
        assert!(QuadraticForm::from_i64_rows(&[&[1, 2], &[0, 1]]).is_err());
    }

    #[test]
    fn a2_domain_has_three_facets() {
        let p = PerfectForm::new(&QuadraticForm::a_root(2)).unwrap();
        assert_eq!(p.min_vectors().len(), 3);
        let fs = facets(&domain(&p).unwrap()).unwrap();
        assert_eq!(fs.len(), 3);
        for f in &fs {
            assert!(equivalent_forms(&p, &neighbor(&p, f).unwrap()));
        }
    }

    #[test]
    fn scaled_forms_are_equivalent() {
        let a = PerfectForm::new(&QuadraticForm::a_root(2)).unwrap();
        let b = PerfectForm::new(&QuadraticForm::from_i64_rows(&[&[4, 2], &[2, 4]]).unwrap()).unwrap();
        assert!(equivalent_forms(&a, &b));
        assert_eq!(b.form().matrix(), &IntMatrix::from_i64_rows(&[&[2, 1], &[1, 2]]));
    }

    #[test]
    fn non_perfect_rejected() {
        let q = QuadraticForm::from_i64_rows(&[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(PerfectForm::new(&q), Err(Error::NotPerfect));
    }
}
