//! Recognition and structure discovery: deciding whether a ring is the
//! 2-dimensional non-nilpotent soluble algebra or a split `sl2`, computing
//! derivation spaces (of rings and of finite field extensions), and a greedy
//! search for large soluble subrings.
//!
//! Recognition verdicts are one-sided: `NotIsomorphic` always carries a
//! structural certificate, and trial-budget exhaustion yields
//! `Inconclusive`, never a false negative.

use crate::constructions::{change_basis, make_ga1, make_sl2};
use crate::field::{square_root, Field, Scalar};
use crate::linalg::{vec_is_zero, vec_scale, Matrix};
use crate::ring::LieRing;
use crate::structure::{self, is_soluble, quotient, subring_closure};
use crate::subspace::Subspace;
use crate::{Error, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Number of seeded random elements tried by the regular-element search
/// before giving up, when exhaustive enumeration is out of reach.
pub const RANDOM_TRIAL_BUDGET: usize = 4096;

/// Outcome of a recognition attempt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Recognized,
    NotIsomorphic,
    Inconclusive,
}

/// Full recognition result. When `verdict` is `Recognized`, `isomorphism`
/// holds an invertible matrix whose rows express the model basis in the
/// input coordinates: transporting the input table through it reproduces the
/// model table exactly (re-verified before returning).
#[derive(Clone, Debug)]
pub struct RecognitionReport {
    pub verdict: Verdict,
    /// Name of the model algebra: `"sl2"` or `"ga1"`.
    pub target_label: String,
    pub isomorphism: Option<Matrix>,
    /// Bracket identities checked during verification, with both sides.
    pub certificate: Vec<String>,
    /// Present for `NotIsomorphic` (the structural obstruction) and
    /// `Inconclusive` (why the search stopped).
    pub failure_reason: Option<String>,
}

impl RecognitionReport {
    pub fn recognized(&self) -> bool {
        self.verdict == Verdict::Recognized
    }

    fn not_isomorphic(target: &str, reason: &str) -> RecognitionReport {
        RecognitionReport {
            verdict: Verdict::NotIsomorphic,
            target_label: target.into(),
            isomorphism: None,
            certificate: Vec::new(),
            failure_reason: Some(reason.into()),
        }
    }

    fn inconclusive(target: &str, reason: &str) -> RecognitionReport {
        RecognitionReport {
            verdict: Verdict::Inconclusive,
            target_label: target.into(),
            isomorphism: None,
            certificate: Vec::new(),
            failure_reason: Some(reason.into()),
        }
    }
}

fn render_vec(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.render()).collect();
    format!("({})", parts.join(", "))
}

/// Checks that transporting `l` through the basis given by `rows` reproduces
/// `model` exactly; returns the checked identities on success.
fn verify_transport(
    l: &LieRing,
    rows: &Matrix,
    model: &LieRing,
    names: &[&str],
) -> Option<Vec<String>> {
    let transported = change_basis(l, rows).ok()?;
    let mut certificate = Vec::new();
    for i in 0..model.dim() {
        for j in (i + 1)..model.dim() {
            let got = transported.basis_bracket(i, j);
            let want = model.basis_bracket(i, j);
            if got != want {
                return None;
            }
            certificate.push(format!(
                "[{}, {}] = {} (model: {})",
                names[i],
                names[j],
                render_vec(&got),
                render_vec(&want),
            ));
        }
    }
    Some(certificate)
}

/// Decides whether a 2-dimensional ring is the non-nilpotent soluble
/// algebra with `[h, e] = e`. A 2-dimensional ring is either abelian
/// (rejected with a nilpotence certificate) or isomorphic to it, in which
/// case the derived line and a solution of `[h, e] = e` produce the
/// isomorphism.
pub fn recognize_ga1(l: &LieRing) -> Result<RecognitionReport> {
    if matches!(l.field().characteristic(), 2 | 3) {
        return Err(Error::UnsupportedCharacteristic(
            "recognition requires characteristic outside {2, 3}".into(),
        ));
    }
    if l.dim() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "ga1 recognition needs dimension 2, got {}",
            l.dim()
        )));
    }
    let f = l.field().clone();
    if l.is_abelian_ring() {
        return Ok(RecognitionReport::not_isomorphic("ga1", "nilpotent"));
    }
    // The derived subring is the line spanned by [b_0, b_1].
    let derived = structure::derived_subring(l);
    assert_eq!(derived.dim(), 1, "non-abelian 2-dim ring has a derived line");
    let e = derived.basis_rows().next().expect("derived line").to_vec();
    // Solve [h, e] = e, i.e. (-ad_e)·h = e.
    let neg_ad_e = l.ad_matrix(&e).scale(&f.from_int(-1));
    let h = neg_ad_e
        .solve(&e)
        .expect("the derived line of a non-abelian 2-dim ring is always reachable");
    let rows = Matrix::from_rows(f.clone(), vec![h, e], 2).expect("element rows");
    let model = make_ga1(&f);
    let certificate = verify_transport(l, &rows, &model, &["h", "e"])
        .expect("constructed basis satisfies the model table");
    Ok(RecognitionReport {
        verdict: Verdict::Recognized,
        target_label: "ga1".into(),
        isomorphism: Some(rows),
        certificate,
        failure_reason: None,
    })
}

/// Decides whether a 3-dimensional ring is split `sl2`. The search looks
/// for a regular element `h` whose adjoint spectrum is `{0, c, -c}` with
/// one-dimensional eigenspaces — first among basis vectors, then pairwise
/// basis sums, then (over small finite fields) every projective point, or
/// otherwise seeded random elements up to [`RANDOM_TRIAL_BUDGET`]. On a
/// hit, `h` is rescaled so the spectrum is `{0, ±2}`, `e` spans the
/// 2-eigenspace, `f` is solved from `[e, f] = h`, and the transported table
/// is verified against the model before reporting success.
pub fn recognize_sl2(l: &LieRing, seed: u64) -> Result<RecognitionReport> {
    if matches!(l.field().characteristic(), 2 | 3) {
        return Err(Error::UnsupportedCharacteristic(
            "recognition requires characteristic outside {2, 3}".into(),
        ));
    }
    if l.dim() != 3 {
        return Err(Error::DimensionMismatch(format!(
            "sl2 recognition needs dimension 3, got {}",
            l.dim()
        )));
    }
    let f = l.field().clone();
    let full = Subspace::full(&f, 3);
    if structure::is_nilpotent(l, &full)? {
        return Ok(RecognitionReport::not_isomorphic("sl2", "nilpotent"));
    }
    if is_soluble(l, &full)? {
        return Ok(RecognitionReport::not_isomorphic("sl2", "soluble"));
    }

    let mut candidates: Vec<Vec<Scalar>> = (0..3).map(|i| l.basis_element(i)).collect();
    for i in 0..3 {
        for j in (i + 1)..3 {
            let mut v = l.basis_element(i);
            for (a, b) in v.iter_mut().zip(l.basis_element(j)) {
                *a = f.add(a, &b);
            }
            candidates.push(v);
        }
    }
    // Small finite fields admit a complete sweep of projective points, which
    // upgrades search failure from "inconclusive" to a definite obstruction.
    let projective = f
        .order()
        .map(|q| (q * q * q - 1) / (q - 1))
        .filter(|&count| count <= RANDOM_TRIAL_BUDGET as u64);
    let exhaustive = projective.is_some();
    match projective {
        Some(count) => {
            let q = f.order().expect("finite");
            for mut idx in 0..count {
                let mut v = vec![f.zero(); 3];
                let mut lead = 0;
                loop {
                    let block = q.pow((2 - lead) as u32);
                    if idx < block {
                        break;
                    }
                    idx -= block;
                    lead += 1;
                }
                v[lead] = f.one();
                for pos in (lead + 1..3).rev() {
                    v[pos] = f.element_at(idx % q);
                    idx /= q;
                }
                candidates.push(v);
            }
        }
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..RANDOM_TRIAL_BUDGET {
                let v: Vec<Scalar> = (0..3).map(|_| f.random(&mut rng)).collect();
                if !vec_is_zero(&f, &v) {
                    candidates.push(v);
                }
            }
        }
    }

    for x in &candidates {
        if vec_is_zero(&f, x) {
            continue;
        }
        if let Some(report) = try_split_regular(l, x) {
            return Ok(report);
        }
    }
    if exhaustive {
        Ok(RecognitionReport::not_isomorphic(
            "sl2",
            "no element has adjoint spectrum {0, c, -c} with 1-dimensional eigenspaces \
             (exhaustive sweep of projective points)",
        ))
    } else {
        Ok(RecognitionReport::inconclusive(
            "sl2",
            "trial budget exhausted without finding a split regular element",
        ))
    }
}

/// Attempts to complete `x` into a recognition witness: requires the
/// characteristic polynomial of `ad_x` to be `t³ - c²t` with `c ≠ 0` (split
/// spectrum `{0, c, -c}`), all three eigenspaces one-dimensional.
fn try_split_regular(l: &LieRing, x: &[Scalar]) -> Option<RecognitionReport> {
    let f = l.field().clone();
    let m = l.ad_matrix(x);
    // char poly of a 3×3 matrix: t³ - tr·t² + c1·t - det.
    let tr = f.add(&f.add(m.get(0, 0), m.get(1, 1)), m.get(2, 2));
    if !f.is_zero(&tr) {
        return None;
    }
    let minor = |a: usize, b: usize| -> Scalar {
        f.sub(
            &f.mul(m.get(a, a), m.get(b, b)),
            &f.mul(m.get(a, b), m.get(b, a)),
        )
    };
    let c1 = f.add(&f.add(&minor(0, 1), &minor(0, 2)), &minor(1, 2));
    let det = {
        let t0 = f.mul(m.get(0, 0), &minor(1, 2));
        let t1 = f.mul(
            m.get(0, 1),
            &f.sub(
                &f.mul(m.get(1, 0), m.get(2, 2)),
                &f.mul(m.get(1, 2), m.get(2, 0)),
            ),
        );
        let t2 = f.mul(
            m.get(0, 2),
            &f.sub(
                &f.mul(m.get(1, 0), m.get(2, 1)),
                &f.mul(m.get(1, 1), m.get(2, 0)),
            ),
        );
        f.add(&f.sub(&t0, &t1), &t2)
    };
    if !f.is_zero(&det) {
        return None;
    }
    // Want char poly t³ - c²·t, i.e. c² = -c1 with c ≠ 0.
    let c = square_root(&f, &f.neg(&c1))?;
    if f.is_zero(&c) {
        return None;
    }
    let e0 = m.kernel();
    let ec = m.eigenspace(&c);
    let emc = m.eigenspace(&f.neg(&c));
    if e0.rows() != 1 || ec.rows() != 1 || emc.rows() != 1 {
        return None;
    }
    // Rescale so the spectrum becomes {0, ±2}; the eigenvectors of ad_x for
    // ±c are exactly those of ad_h for ±2.
    let two_over_c = f.div(&f.from_int(2), &c).expect("c is nonzero");
    let h = vec_scale(&f, &two_over_c, x);
    let e = ec.row_vec(0);
    let f0 = emc.row_vec(0);
    // [e, f0] must be a nonzero multiple μ·h; then f = f0/μ.
    let w = l.bracket(&e, &f0);
    let pivot = h.iter().position(|s| !f.is_zero(s))?;
    let mu = f.div(&w[pivot], &h[pivot]).expect("h has a unit pivot");
    if f.is_zero(&mu) || w != vec_scale(&f, &mu, &h) {
        return None;
    }
    let inv_mu = f.inv(&mu).expect("mu is nonzero");
    let f_vec = vec_scale(&f, &inv_mu, &f0);

    let rows = Matrix::from_rows(f.clone(), vec![h, e, f_vec], 3).expect("element rows");
    if !rows.is_invertible() {
        return None;
    }
    let model = make_sl2(&f);
    let certificate = verify_transport(l, &rows, &model, &["h", "e", "f"])?;
    Some(RecognitionReport {
        verdict: Verdict::Recognized,
        target_label: "sl2".into(),
        isomorphism: Some(rows),
        certificate,
        failure_reason: None,
    })
}

/// Space of derivations of `l`: linear maps `D` with
/// `D[x, y] = [Dx, y] + [x, Dy]`. Rows of the result are row-major
/// flattened `dim × dim` matrices, echelonized.
pub fn derivation_space(l: &LieRing) -> Matrix {
    let f = l.field().clone();
    let n = l.dim();
    let unknowns = n * n;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let cij = l.basis_bracket(i, j);
            for r in 0..n {
                let mut row = vec![f.zero(); unknowns];
                // D(c_ij)_r = Σ_s D[r][s]·c_ij[s]
                for s in 0..n {
                    row[r * n + s] = f.add(&row[r * n + s], &cij[s]);
                }
                // -[D b_i, b_j]_r = -Σ_s D[s][i]·[b_s, b_j]_r
                for s in 0..n {
                    let br = l.basis_bracket(s, j)[r].clone();
                    row[s * n + i] = f.sub(&row[s * n + i], &br);
                }
                // -[b_i, D b_j]_r = -Σ_s D[s][j]·[b_i, b_s]_r
                for s in 0..n {
                    let br = l.basis_bracket(i, s)[r].clone();
                    row[s * n + j] = f.sub(&row[s * n + j], &br);
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Matrix::identity(f, unknowns);
    }
    Matrix::from_rows(f, rows, unknowns).expect("constraint rows").kernel()
}

/// Space of derivations of a finite field `F_{p^k}` viewed as an
/// `F_p`-algebra on its power basis: `F_p`-linear maps `D` with
/// `D(xy) = x·D(y) + y·D(x)`. Rows are flattened `k × k` matrices over
/// `F_p`. Finite extensions are separable, so this is always zero; the
/// computation verifies it rather than assuming it.
pub fn field_derivation_space(ext: &Field) -> Matrix {
    let p = ext.characteristic();
    assert!(p > 0, "field derivations are computed for finite fields");
    let k = ext.degree();
    let base = Field::prime(p).expect("characteristic is prime");
    let coords = |s: &Scalar| -> Vec<u64> {
        match s {
            Scalar::Fp(c) => vec![*c],
            Scalar::Ext(cs) => cs.clone(),
            Scalar::Rat(_) => unreachable!("finite field scalar"),
        }
    };
    let basis_elem = |i: usize| if k == 1 { ext.one() } else { ext.monomial(i) };
    // mult[i]: the k×k matrix of multiplication by t^i; column s holds the
    // coordinates of t^i · t^s.
    let mult: Vec<Vec<Vec<u64>>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|s| coords(&ext.mul(&basis_elem(i), &basis_elem(s))))
                .collect()
        })
        .collect();
    let unknowns = k * k;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..k {
        for j in i..k {
            let vij = coords(&ext.mul(&basis_elem(i), &basis_elem(j)));
            for r in 0..k {
                let mut row = vec![base.zero(); unknowns];
                for s in 0..k {
                    // D(t^i t^j)_r − (P_i·D e_j)_r − (P_j·D e_i)_r = 0
                    row[r * k + s] = base.add(&row[r * k + s], &Scalar::Fp(vij[s]));
                    let pi = Scalar::Fp(mult[i][s][r]);
                    row[s * k + j] = base.sub(&row[s * k + j], &pi);
                    let pj = Scalar::Fp(mult[j][s][r]);
                    row[s * k + i] = base.sub(&row[s * k + i], &pj);
                }
                rows.push(row);
            }
        }
    }
    Matrix::from_rows(base, rows, unknowns).expect("constraint rows").kernel()
}

/// Greedily grows a soluble subring containing `x`: starting from the
/// closure of `span(x)`, repeatedly scans basis vectors and a bounded pool
/// of seeded random elements, adjoining any candidate whose subring closure
/// with the current space stays soluble, until a full pass adds nothing.
/// The result is always a soluble subring; maximality is greedy, not
/// certified.
pub fn find_soluble_through(l: &LieRing, x: &[Scalar], seed: u64) -> Subspace {
    const RANDOM_POOL: usize = 32;
    let f = l.field().clone();
    let n = l.dim();
    let mut current =
        subring_closure(l, &Subspace::from_vecs(&f, vec![x.to_vec()], n));
    assert!(
        is_soluble(l, &current).expect("closure is a subring"),
        "a single element generates a soluble (1-dimensional) subring"
    );
    let mut candidates: Vec<Vec<Scalar>> = (0..n).map(|i| l.basis_element(i)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_POOL {
        let v: Vec<Scalar> = (0..n).map(|_| f.random(&mut rng)).collect();
        if !vec_is_zero(&f, &v) {
            candidates.push(v);
        }
    }
    loop {
        let mut grew = false;
        for c in &candidates {
            if current.contains_vec(c) {
                continue;
            }
            let extended = current.sum(&Subspace::from_vecs(&f, vec![c.clone()], n));
            let closed = subring_closure(l, &extended);
            if is_soluble(l, &closed).expect("closure is a subring") {
                current = closed;
                grew = true;
            }
        }
        if !grew {
            return current;
        }
    }
}

/// Center of the ring (elements commuting with everything).
pub fn center(l: &LieRing) -> Subspace {
    structure::center(l)
}

/// Quotient by the center. The center is always an ideal, so this cannot
/// fail structurally.
pub fn central_quotient(l: &LieRing) -> LieRing {
    let z = structure::center(l);
    quotient(l, &z).expect("the center is an ideal").ring
}
