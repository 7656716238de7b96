//! Ideal decomposition and Cartan type of subalgebras given as subspaces of
//! an ambient [`LieAlgebra`].

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{kernel, rref, Matrix, Rational, Scalar, Subspace, C64};

const RETRIES: usize = 8;

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| Scalar::real(Rational::new(rng.gen_range(-9..10), rng.gen_range(1..4)))).collect()
}

fn lift(h: &Subspace, sub: &Subspace) -> Subspace {
    let vecs: Vec<Vec<Scalar>> = sub.basis_dense().iter().map(|c| h.combine(c)).collect();
    Subspace::span(h.ambient(), &vecs)
}

/// Minimal ideals of the subalgebra `h`, with seed 0.
pub fn split_commuting_ideals(g: &LieAlgebra, h: &Subspace) -> Result<Vec<Subspace>> {
    split_commuting_ideals_seeded(g, h, 0)
}

/// Minimal ideals of a reductive subalgebra `h`: one line per basis vector of
/// the center, then the simple ideals of the derived algebra. The ideals are
/// the eigenspaces of a generic element of the centroid, which is found from
/// a cyclic vector of the adjoint module.
pub fn split_commuting_ideals_seeded(g: &LieAlgebra, h: &Subspace, seed: u64) -> Result<Vec<Subspace>> {
    let a = g.subalgebra(h)?;
    let n = a.dim();
    let z = a.center();
    let d = a.derived();
    if z.dim() + d.dim() != n || z.intersect(&d)?.dim() != 0 {
        return Err(Error::NotSemisimple(format!(
            "center ({}) and derived algebra ({}) do not split a {n}-dimensional algebra",
            z.dim(),
            d.dim()
        )));
    }
    let mut out: Vec<Subspace> = z.basis().iter().map(|v| lift(h, &Subspace::span_sparse(n, [v]))).collect();
    if d.dim() > 0 {
        let ad = a.subalgebra(&d)?;
        for ideal in split_semisimple(&ad, seed)? {
            out.push(lift(h, &lift(&d, &ideal)));
        }
    }
    Ok(out)
}

/// Simple ideals of a centerless algebra equal to its derived algebra.
///
/// The centroid (operators commuting with every ad x) is computed in floating
/// point from an orthonormal Krylov basis; the projectors onto the eigenspaces
/// of a generic centroid element are rounded to Gaussian rationals and then
/// verified exactly (idempotent, summing to 1, commuting with every ad eᵢ).
fn split_semisimple(a: &LieAlgebra, seed: u64) -> Result<Vec<Subspace>> {
    let n = a.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ads: Vec<Matrix> = (0..n).map(|i| a.ad_basis(i)).collect();
    for _ in 0..RETRIES {
        let gens: Vec<DMatrix<C64>> = (0..2).map(|_| to_float(&a.ad(&small_vector(&mut rng, n)))).collect();
        let v = DVector::from_fn(n, |_, _| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        let Some(projectors) = float_centroid_projectors(&gens, v, &mut rng) else { continue };
        let Some(exact) = projectors.iter().map(round_matrix).collect::<Option<Vec<Matrix>>>() else { continue };
        if !exact_projectors_ok(&exact, &ads) {
            continue;
        }
        return Ok(exact.iter().map(|p| Subspace::span(n, &p.transpose().to_dense())).collect());
    }
    Err(Error::Inconsistent("no generic centroid element found".into()))
}

fn small_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| Scalar::int(rng.gen_range(-2..3))).collect()
}

/// Orthonormal Krylov basis qₖ of v under the generators, with matrices Mₖ
/// such that T qₖ = Mₖ (T v) for every T commuting with the generators.
fn krylov(gens: &[DMatrix<C64>], v: DVector<C64>) -> Option<(Vec<DVector<C64>>, Vec<DMatrix<C64>>)> {
    let n = v.len();
    let nv = v.norm();
    let mut qs = vec![v / C64::new(nv, 0.0)];
    let mut ms = vec![DMatrix::<C64>::identity(n, n) / C64::new(nv, 0.0)];
    let mut p = 0;
    while p < qs.len() && qs.len() < n {
        for g in gens {
            let gq = g * &qs[p];
            let mut u = gq.clone();
            let mut m = g * &ms[p];
            for _ in 0..2 {
                for j in 0..qs.len() {
                    let r = qs[j].dotc(&u);
                    u -= &qs[j] * r;
                    m -= &ms[j] * r;
                }
            }
            let rho = u.norm();
            if rho > 1e-8 * gq.norm().max(1.0) {
                qs.push(u / C64::new(rho, 0.0));
                ms.push(m / C64::new(rho, 0.0));
                if qs.len() == n {
                    break;
                }
            }
        }
        p += 1;
    }
    (qs.len() == n).then_some((qs, ms))
}

fn float_centroid_projectors(gens: &[DMatrix<C64>], v: DVector<C64>, rng: &mut ChaCha8Rng) -> Option<Vec<DMatrix<C64>>> {
    let (qs, ms) = krylov(gens, v)?;
    let n = qs.len();
    let q = DMatrix::from_columns(&qs);
    // T qₖ = Mₖ w with w = T v; T g = g T gives Σⱼ (Qᴴ g Q)ⱼₖ Mⱼ w = g Mₖ w.
    let mut eqs = DMatrix::<C64>::zeros(gens.len() * n * n, n);
    for (gi, g) in gens.iter().enumerate() {
        let coeff = q.adjoint() * g * &q;
        for k in 0..n {
            let mut block = -(g * &ms[k]);
            for j in 0..n {
                let c = coeff[(j, k)];
                if c.norm() > 1e-14 {
                    block += &ms[j] * c;
                }
            }
            eqs.view_mut(((gi * n + k) * n, 0), (n, n)).copy_from(&block);
        }
    }
    let svd = eqs.svd(false, true);
    let vt = svd.v_t?;
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let null: Vec<DVector<C64>> = svd
        .singular_values
        .iter()
        .enumerate()
        .filter(|(_, s)| **s < 1e-9 * smax)
        .map(|(i, _)| vt.row(i).adjoint())
        .collect();
    let k = null.len();
    if k == 0 {
        return None;
    }
    if k == 1 {
        return Some(vec![DMatrix::identity(n, n)]);
    }
    let mut w = DVector::<C64>::zeros(n);
    for nv in &null {
        w += nv * C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    }
    let mw = DMatrix::from_columns(&ms.iter().map(|m| m * &w).collect::<Vec<_>>());
    let t = mw * q.adjoint();
    let ev: Vec<C64> = t.clone().schur().eigenvalues()?.iter().copied().collect();
    let mut centers: Vec<C64> = Vec::new();
    let scale = ev.iter().map(|z| z.norm()).fold(1e-300, f64::max);
    for z in ev {
        if !centers.iter().any(|c| (c - z).norm() < 1e-6 * scale) {
            centers.push(z);
        }
    }
    if centers.len() != k {
        return None;
    }
    let id = DMatrix::<C64>::identity(n, n);
    Some(
        (0..k)
            .map(|i| {
                let mut p = id.clone();
                for j in (0..k).filter(|&j| j != i) {
                    p = p * (&t - &id * centers[j]) / (centers[i] - centers[j]);
                }
                p
            })
            .collect(),
    )
}

fn round_real(x: f64) -> Option<Rational> {
    [1i64, 10, 100, 1_000, 10_000, 100_000, 1_000_000]
        .iter()
        .filter_map(|&d| Rational::approximate(x, d))
        .find(|r| (r.to_f64() - x).abs() < 1e-7 * x.abs().max(1.0))
}

fn round_matrix(m: &DMatrix<C64>) -> Option<Matrix> {
    let mut t = Vec::new();
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let z = m[(i, j)];
            let c = Scalar::new(round_real(z.re)?, round_real(z.im)?);
            if !c.is_zero() {
                t.push((i, j, c));
            }
        }
    }
    Some(Matrix::from_triplets(m.nrows(), m.ncols(), t))
}

fn exact_projectors_ok(ps: &[Matrix], ads: &[Matrix]) -> bool {
    let n = ads.len();
    let mut sum = Matrix::zeros(n, n);
    for p in ps {
        if &(p * p) != p || p.is_zero() || ads.iter().any(|d| !p.commutator(d).is_zero()) {
            return false;
        }
        sum = &sum + p;
    }
    sum == Matrix::identity(n)
}

fn to_float(m: &Matrix) -> DMatrix<C64> {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| m.get(i, j).to_complex())
}

fn float_eigenvalues(m: &Matrix) -> Option<Vec<C64>> {
    let ev = to_float(m).schur().eigenvalues()?;
    Some(ev.iter().copied().collect())
}

/// Rank, number of roots and Dynkin label of a simple Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleType {
    pub rank: usize,
    pub root_count: usize,
    pub label: String,
}

/// Type of a simple subalgebra, with seed 0.
pub fn classify_simple_type(g: &LieAlgebra, h: &Subspace) -> Result<SimpleType> {
    classify_simple_type_seeded(g, h, 0)
}

/// Cartan subalgebra = centralizer of a generic element; roots from the
/// eigenvectors of its ad; lengths from the inverse Killing form on the
/// Cartan subalgebra. All Cartan integers are checked to be integers.
pub fn classify_simple_type_seeded(g: &LieAlgebra, h: &Subspace, seed: u64) -> Result<SimpleType> {
    let a = g.subalgebra(h)?;
    let n = a.dim();
    let km = a.killing_matrix();
    if rref(&km).0 != n {
        return Err(Error::NotSemisimple("Killing form is degenerate".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRIES {
        let x = random_vector(&mut rng, n);
        let adx = a.ad(&x);
        let cartan = kernel(&adx);
        let r = cartan.dim();
        let hb = cartan.basis_dense();
        if (0..r).any(|i| (i + 1..r).any(|j| a.bracket(&hb[i], &hb[j]).iter().any(|c| !c.is_zero()))) {
            continue;
        }
        let Some(roots) = roots(&a, &adx, &hb) else { continue };
        let kh = DMatrix::from_fn(r, r, |i, j| a.killing(&hb[i], &hb[j]).to_complex());
        let Some(khinv) = kh.try_inverse() else { continue };
        let form = |p: &DVector<C64>, q: &DVector<C64>| (p.transpose() * &khinv * q)[(0, 0)];
        let lengths: Vec<C64> = roots.iter().map(|p| form(p, p)).collect();
        if lengths.iter().any(|l| l.norm() < 1e-9) {
            continue;
        }
        let integral = roots.iter().enumerate().all(|(i, p)| {
            roots.iter().enumerate().all(|(j, q)| {
                let c = form(p, q) * 2.0 / lengths[j];
                c.im.abs() < 1e-6 && (c.re - c.re.round()).abs() < 1e-6 && c.re.abs() < 3.5 || i == j && (c.re - 2.0).abs() < 1e-6
            })
        });
        if !integral {
            continue;
        }
        let longest = lengths.iter().map(|l| l.norm()).fold(0.0, f64::max);
        let long = lengths.iter().filter(|l| (l.norm() - longest).abs() < 1e-6 * longest).count();
        let label = dynkin_label(r, roots.len(), long);
        return Ok(SimpleType { rank: r, root_count: roots.len(), label });
    }
    Err(Error::Inconsistent("no regular element found".into()))
}

/// Root functionals on the Cartan basis `hb`, from eigenvectors of `adx`.
fn roots(a: &LieAlgebra, adx: &Matrix, hb: &[Vec<Scalar>]) -> Option<Vec<DVector<C64>>> {
    let n = a.dim();
    let r = hb.len();
    let f = to_float(adx);
    let scale = f.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let ev = float_eigenvalues(adx)?;
    let nonzero: Vec<C64> = ev.into_iter().filter(|z| z.norm() > 1e-8 * scale).collect();
    if nonzero.len() != n - r {
        return None;
    }
    for (i, p) in nonzero.iter().enumerate() {
        if nonzero[..i].iter().any(|q| (p - q).norm() < 1e-6 * scale) {
            return None;
        }
    }
    let adh: Vec<DMatrix<C64>> = hb.iter().map(|h| to_float(&a.ad(h))).collect();
    let mut out = Vec::new();
    for lam in nonzero {
        let shifted = &f - DMatrix::identity(n, n) * lam;
        let svd = shifted.svd(false, true);
        let vt = svd.v_t?;
        let (k, _) = svd.singular_values.iter().enumerate().min_by(|p, q| p.1.total_cmp(q.1))?;
        let e: DVector<C64> = vt.row(k).adjoint();
        let root = DVector::from_fn(r, |i, _| {
            let he = &adh[i] * &e;
            e.dotc(&he) / e.dotc(&e)
        });
        out.push(root);
    }
    Some(out)
}

/// Label from rank, root count and the number of long roots.
pub fn dynkin_label(rank: usize, roots: usize, long: usize) -> String {
    let l = rank;
    let laced = long == roots;
    let name = match (laced, roots) {
        (true, r) if r == l * (l + 1) && l != 3 || (l == 3 && r == 12) => format!("A{l}"),
        (true, r) if l >= 4 && r == 2 * l * (l - 1) => format!("D{l}"),
        (true, 72) if l == 6 => "E6".into(),
        (true, 126) if l == 7 => "E7".into(),
        (true, 240) if l == 8 => "E8".into(),
        (false, 12) if l == 2 => "G2".into(),
        (false, 48) if l == 4 => "F4".into(),
        (false, r) if r == 2 * l * l && long == 2 * l * (l - 1) => format!("B{l}"),
        (false, r) if r == 2 * l * l && long == 2 * l => format!("C{l}"),
        _ => format!("unknown(rank {l}, {roots} roots, {long} long)"),
    };
    // A₃ = D₃ and B₂ = C₂ are reported under the first name
    if name == "C2" {
        "B2".into()
    } else {
        name
    }
}

/// Minimal ideals with the type of each non-abelian one.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub center_dim: usize,
    pub factors: Vec<(Subspace, SimpleType)>,
}

pub fn classify_semisimple(g: &LieAlgebra, h: &Subspace, seed: u64) -> Result<Decomposition> {
    let ideals = split_commuting_ideals_seeded(g, h, seed)?;
    let mut center_dim = 0;
    let mut factors = Vec::new();
    for ideal in ideals {
        if ideal.dim() == 1 {
            center_dim += 1;
            continue;
        }
        let t = classify_simple_type_seeded(g, &ideal, seed)?;
        factors.push((ideal, t));
    }
    Ok(Decomposition { center_dim, factors })
}

/// Every bracket between different ideals vanishes.
pub fn ideals_commute(g: &LieAlgebra, ideals: &[Subspace]) -> bool {
    for (i, p) in ideals.iter().enumerate() {
        for q in &ideals[i + 1..] {
            for x in p.basis() {
                for y in q.basis() {
                    if !g.bracket_sparse(x, y).is_empty() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 𝔰𝔩₂ ⊕ 𝔰𝔩₂ ⊕ C with basis (h, e, f, h′, e′, f′, z).
    fn sl2_sum() -> LieAlgebra {
        LieAlgebra::from_bracket(7, |i, j| {
            let base = |k: usize| if k < 3 { 0 } else if k < 6 { 3 } else { 6 };
            if i == 6 || j == 6 || base(i) != base(j) {
                return Vec::new();
            }
            let o = base(i);
            let (a, b) = (i - o, j - o);
            match (a, b) {
                (0, 1) => vec![(o + 1, Scalar::int(2))],
                (1, 0) => vec![(o + 1, Scalar::int(-2))],
                (0, 2) => vec![(o + 2, Scalar::int(-2))],
                (2, 0) => vec![(o + 2, Scalar::int(2))],
                (1, 2) => vec![(o, Scalar::ONE)],
                (2, 1) => vec![(o, Scalar::int(-1))],
                _ => Vec::new(),
            }
        })
    }

    #[test]
    fn splits_two_sl2_and_center() {
        let g = sl2_sum();
        let ideals = split_commuting_ideals(&g, &Subspace::full(7)).unwrap();
        let mut dims: Vec<usize> = ideals.iter().map(Subspace::dim).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 3, 3]);
        assert!(ideals_commute(&g, &ideals));
        let d = classify_semisimple(&g, &Subspace::full(7), 0).unwrap();
        assert_eq!(d.center_dim, 1);
        assert!(d.factors.iter().all(|(_, t)| t.label == "A1" && t.root_count == 2));
    }

    #[test]
    fn abelian_plane_splits_into_lines() {
        let g = LieAlgebra::from_bracket(2, |_, _| Vec::new());
        let ideals = split_commuting_ideals(&g, &Subspace::full(2)).unwrap();
        assert_eq!(ideals.len(), 2);
        assert!(ideals.iter().all(|i| i.dim() == 1));
    }

    #[test]
    fn solvable_algebra_is_rejected() {
        // [x, y] = y
        let g = LieAlgebra::from_bracket(2, |i, j| match (i, j) {
            (0, 1) => vec![(1, Scalar::ONE)],
            (1, 0) => vec![(1, Scalar::int(-1))],
            _ => Vec::new(),
        });
        assert!(matches!(split_commuting_ideals(&g, &Subspace::full(2)), Err(Error::NotSemisimple(_))));
        assert!(matches!(classify_simple_type(&g, &Subspace::full(2)), Err(Error::NotSemisimple(_))));
    }

    #[test]
    fn labels() {
        assert_eq!(dynkin_label(4, 24, 24), "D4");
        assert_eq!(dynkin_label(1, 2, 2), "A1");
        assert_eq!(dynkin_label(3, 12, 12), "A3");
        assert_eq!(dynkin_label(4, 48, 24), "F4");
        assert_eq!(dynkin_label(3, 18, 12), "B3");
        assert_eq!(dynkin_label(3, 18, 6), "C3");
        assert_eq!(dynkin_label(2, 8, 4), "B2");
    }
}
