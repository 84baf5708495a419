//! Checkable structural facts about centralizers, adjoint images,
//! eigenspace lifting, and codimension-one subrings, each packaged as a
//! verifier that reports hypotheses and conclusions separately, plus a
//! seeded randomized sweep that hammers the whole battery across a catalog
//! of rings.
//!
//! Each checker returns a [`LemmaVerdict`]. `hypothesis_met == false` with
//! `holds == true` is a vacuous pass and is reported, never dropped; a
//! precondition violation (wrong characteristic, input not a subring, …) is
//! an error, not a verdict.

use crate::field::Scalar;
use crate::linalg::Matrix;
use crate::ring::LieRing;
use crate::structure::{
    self, bracket_span, centralizer_c, image_b, is_abelian, is_ideal, is_nilpotent, is_subring,
    normalizer, simplicity_with_bound,
};
use crate::subspace::Subspace;
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::fmt;

/// Identifies which structural fact a verdict speaks about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaId {
    CentralizerTower,
    ImageAbelianIdeal,
    IteratedImageBracket,
    EigenspaceLifting,
    QuotientCentralizerNilpotent,
    CodimOneDichotomy,
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            LemmaId::CentralizerTower => "centralizer-tower",
            LemmaId::ImageAbelianIdeal => "image-abelian-ideal",
            LemmaId::IteratedImageBracket => "iterated-image-bracket",
            LemmaId::EigenspaceLifting => "eigenspace-lifting",
            LemmaId::QuotientCentralizerNilpotent => "quotient-centralizer-nilpotent",
            LemmaId::CodimOneDichotomy => "codim-one-dichotomy",
        };
        f.write_str(name)
    }
}

/// Outcome of one lemma check. `counterexample` is present exactly when
/// `holds` is false and carries enough detail to replay the instance.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaVerdict {
    pub lemma_id: LemmaId,
    pub hypothesis_met: bool,
    pub holds: bool,
    /// Deterministic description of the instance that was checked.
    pub witness: String,
    pub counterexample: Option<String>,
}

impl LemmaVerdict {
    fn pass(lemma_id: LemmaId, hypothesis_met: bool, witness: String) -> LemmaVerdict {
        LemmaVerdict { lemma_id, hypothesis_met, holds: true, witness, counterexample: None }
    }

    fn fail(lemma_id: LemmaId, witness: String, detail: String) -> LemmaVerdict {
        LemmaVerdict {
            lemma_id,
            hypothesis_met: true,
            holds: false,
            witness,
            counterexample: Some(detail),
        }
    }
}

fn render_vec(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.render()).collect();
    format!("({})", parts.join(", "))
}

fn require_odd_characteristic(l: &LieRing) -> Result<()> {
    if l.field().characteristic() == 2 {
        return Err(Error::UnsupportedCharacteristic(
            "this check needs characteristic different from 2".into(),
        ));
    }
    Ok(())
}

/// If the n-step centralizer of `h` is abelian, the (n+1)-step centralizer
/// is closed under the bracket.
///
/// Hypothesis: `C_h^n` abelian. Conclusion: `C_h^{n+1}` is a subring.
/// Works over any field.
pub fn check_centralizer_tower(l: &LieRing, h: &[Scalar], n: usize) -> Result<LemmaVerdict> {
    l.validate_element(h)?;
    let cn = centralizer_c(l, h, n);
    let hypothesis_met = is_abelian(l, &cn);
    let cn1 = centralizer_c(l, h, n + 1);
    let witness = format!(
        "h={}, n={}, dim C^n={}, dim C^(n+1)={}",
        render_vec(h),
        n,
        cn.dim(),
        cn1.dim()
    );
    if !hypothesis_met {
        return Ok(LemmaVerdict::pass(LemmaId::CentralizerTower, false, witness));
    }
    if is_subring(l, &cn1) {
        Ok(LemmaVerdict::pass(LemmaId::CentralizerTower, true, witness))
    } else {
        Ok(LemmaVerdict::fail(
            LemmaId::CentralizerTower,
            witness,
            format!("C^{} is abelian but C^{} is not bracket-closed", n, n + 1),
        ))
    }
}

/// When the 2-step centralizer of `a` is everything, the adjoint image
/// `B_a = [a, L]` is an abelian subring absorbed by the centralizer:
/// `[B_a, C_a] ⊆ B_a`.
///
/// Hypothesis: `C_a^2 = L`. Requires characteristic ≠ 2.
pub fn check_image_abelian_ideal(l: &LieRing, a: &[Scalar]) -> Result<LemmaVerdict> {
    require_odd_characteristic(l)?;
    l.validate_element(a)?;
    let c2 = centralizer_c(l, a, 2);
    let hypothesis_met = c2.is_full();
    let b = image_b(l, a, 1);
    let c = centralizer_c(l, a, 1);
    let witness = format!(
        "a={}, dim C^2={}, dim B={}, dim C={}",
        render_vec(a),
        c2.dim(),
        b.dim(),
        c.dim()
    );
    if !hypothesis_met {
        return Ok(LemmaVerdict::pass(LemmaId::ImageAbelianIdeal, false, witness));
    }
    let mut problems: Vec<&str> = Vec::new();
    if !is_abelian(l, &b) {
        problems.push("B is not abelian");
    }
    if !is_subring(l, &b) {
        problems.push("B is not bracket-closed");
    }
    let mixed = bracket_span(l, &b, &c);
    if !mixed.basis_rows().all(|row| b.contains_vec(row)) {
        problems.push("[B, C] is not contained in B");
    }
    if problems.is_empty() {
        Ok(LemmaVerdict::pass(LemmaId::ImageAbelianIdeal, true, witness))
    } else {
        Ok(LemmaVerdict::fail(LemmaId::ImageAbelianIdeal, witness, problems.join("; ")))
    }
}

/// For an abelian subring `A` and a single generator `x`, the iterated
/// bracket spaces `A_0 = span(x)`, `A_{k+1} = [A, A_k]` satisfy
/// `[A_n, A_n] ⊆ [A, L]`.
///
/// Requires characteristic ≠ 2 and `A` an abelian subring.
pub fn check_iterated_image_bracket(
    l: &LieRing,
    a_space: &Subspace,
    x: &[Scalar],
    n: usize,
) -> Result<LemmaVerdict> {
    require_odd_characteristic(l)?;
    l.validate_element(x)?;
    if !is_subring(l, a_space) {
        return Err(Error::Precondition("A must be a subring".into()));
    }
    if !is_abelian(l, a_space) {
        return Err(Error::Precondition("A must be abelian".into()));
    }
    let f = l.field();
    let mut a_n = Subspace::from_vecs(f, vec![x.to_vec()], l.dim());
    for _ in 0..n {
        a_n = bracket_span(l, a_space, &a_n);
    }
    let target = bracket_span(l, a_space, &Subspace::full(f, l.dim()));
    let commutators = bracket_span(l, &a_n, &a_n);
    let witness = format!(
        "dim A={}, x={}, n={}, dim A_n={}, dim [A_n,A_n]={}, dim [A,L]={}",
        a_space.dim(),
        render_vec(x),
        n,
        a_n.dim(),
        commutators.dim(),
        target.dim()
    );
    if commutators.basis_rows().all(|row| target.contains_vec(row)) {
        Ok(LemmaVerdict::pass(LemmaId::IteratedImageBracket, true, witness))
    } else {
        Ok(LemmaVerdict::fail(
            LemmaId::IteratedImageBracket,
            witness,
            "[A_n, A_n] escapes [A, L]".into(),
        ))
    }
}

/// An eigenvalue of the map induced by `ad_h` on `V/V'` lifts to a genuine
/// eigenvalue of `ad_h` on the whole ring.
///
/// Hypothesis: the induced map on `V/V'` has a nonzero `k`-eigenspace.
/// Conclusion: `ad_h` has a nonzero `k`-eigenspace in `L`. Preconditions:
/// `V' ⊆ V` and both are `ad_h`-invariant.
pub fn check_eigenspace_lifting(
    l: &LieRing,
    v: &Subspace,
    v_prime: &Subspace,
    h: &[Scalar],
    k: &Scalar,
) -> Result<LemmaVerdict> {
    l.validate_element(h)?;
    if !v_prime.basis_rows().all(|row| v.contains_vec(row)) {
        return Err(Error::Precondition("V' must be contained in V".into()));
    }
    let ad = l.ad_matrix(h);
    for (name, space) in [("V", v), ("V'", v_prime)] {
        for row in space.basis_rows() {
            if !space.contains_vec(&ad.apply(row)) {
                return Err(Error::Precondition(format!("{name} is not ad_h-invariant")));
            }
        }
    }
    let f = l.field().clone();
    // Coordinates of the induced map: express ad_h of each V-basis vector
    // in V-coordinates, then project modulo V'-inside-V.
    let v_dim = v.dim();
    let inner: Vec<Vec<Scalar>> = v_prime
        .basis_rows()
        .map(|row| v.coordinates(row).expect("V' sits inside V"))
        .collect();
    let inner_space = Subspace::from_vecs(&f, inner, v_dim);
    let positions = inner_space.complement_positions();
    let residual = inner_space.residual_matrix();
    let quo_dim = positions.len();
    let mut induced = Matrix::zeros(f.clone(), quo_dim, quo_dim);
    for (j, row) in v.basis_rows().enumerate() {
        let image = v.coordinates(&ad.apply(row)).expect("V is ad_h-invariant");
        let reduced = residual.apply(&image);
        // Column j of the induced map holds the class of ad_h(v_j); only
        // classes of complement basis vectors are needed.
        if let Some(col) = positions.iter().position(|&p| p == j) {
            for (r, &p) in positions.iter().enumerate() {
                induced.set(r, col, reduced[p].clone());
            }
        }
    }
    let quo_eigen = induced.eigenspace(k);
    let hypothesis_met = quo_dim > 0 && quo_eigen.rows() > 0;
    let full_eigen = ad.eigenspace(k);
    let witness = format!(
        "h={}, k={}, dim V={}, dim V'={}, dim quotient eigenspace={}, dim ring eigenspace={}",
        render_vec(h),
        k.render(),
        v.dim(),
        v_prime.dim(),
        quo_eigen.rows(),
        full_eigen.rows()
    );
    if !hypothesis_met {
        return Ok(LemmaVerdict::pass(LemmaId::EigenspaceLifting, false, witness));
    }
    if full_eigen.rows() > 0 {
        Ok(LemmaVerdict::pass(LemmaId::EigenspaceLifting, true, witness))
    } else {
        Ok(LemmaVerdict::fail(
            LemmaId::EigenspaceLifting,
            witness,
            "quotient eigenvalue does not lift to the ring".into(),
        ))
    }
}

/// In a simple ring, the largest subspace of a proper subring `H` that
/// brackets all of `L` into `H` is a nilpotent subring.
///
/// Preconditions: `L` simple (spot-checked by ideal spinning) and `H` a
/// proper subring. The set `I = {x ∈ H : [x, L] ⊆ H}` is automatically a
/// subring, and the verdict asks whether it is nilpotent.
pub fn check_quotient_centralizer_nilpotent(l: &LieRing, h: &Subspace) -> Result<LemmaVerdict> {
    // Basis elements and a short random spin suffice as a simplicity
    // screen here; callers wanting certainty run the full spin themselves.
    if !simplicity_with_bound(l, 0, 100_000).simple {
        return Err(Error::Precondition("the ambient ring must be simple".into()));
    }
    if h.is_full() {
        return Err(Error::Precondition("H must be a proper subring".into()));
    }
    if !is_subring(l, h) {
        return Err(Error::Precondition("H must be a subring".into()));
    }
    let f = l.field().clone();
    let dim = l.dim();
    let h_dim = h.dim();
    let i_space = if h_dim == 0 {
        Subspace::zero(&f, dim)
    } else {
        // x = Σ t_i a_i lies in I iff residual_H([a_i, b_j]) summed with
        // weights t is zero for every ring basis vector b_j.
        let residual = h.residual_matrix();
        let mut rows: Vec<Vec<Scalar>> = vec![vec![f.zero(); h_dim]; dim * dim];
        for (i, a) in h.basis_rows().enumerate() {
            for j in 0..dim {
                let reduced = residual.apply(&l.bracket(a, &l.basis_element(j)));
                for (r, val) in reduced.into_iter().enumerate() {
                    rows[j * dim + r][i] = val;
                }
            }
        }
        let coeffs = Matrix::from_rows(f.clone(), rows, h_dim)
            .expect("constraint rows")
            .kernel();
        let members: Vec<Vec<Scalar>> = (0..coeffs.rows())
            .map(|r| {
                let t = coeffs.row(r);
                let mut x = vec![f.zero(); dim];
                for (ti, a) in t.iter().zip(h.basis_rows()) {
                    for (xs, as_) in x.iter_mut().zip(a) {
                        *xs = f.add(xs, &f.mul(ti, as_));
                    }
                }
                x
            })
            .collect();
        Subspace::from_vecs(&f, members, dim)
    };
    assert!(is_subring(l, &i_space), "I is bracket-closed by the Jacobi identity");
    let witness = format!("dim H={}, dim I={}", h_dim, i_space.dim());
    if is_nilpotent(l, &i_space).expect("I is a subring") {
        Ok(LemmaVerdict::pass(LemmaId::QuotientCentralizerNilpotent, true, witness))
    } else {
        Ok(LemmaVerdict::fail(
            LemmaId::QuotientCentralizerNilpotent,
            witness,
            "I is a non-nilpotent subring".into(),
        ))
    }
}

/// A subring of codimension one is an ideal or self-normalizing.
///
/// Precondition: `H` a subring with `dim H = dim L - 1`.
pub fn check_codim_one_dichotomy(l: &LieRing, h: &Subspace) -> Result<LemmaVerdict> {
    if !is_subring(l, h) {
        return Err(Error::Precondition("H must be a subring".into()));
    }
    if h.dim() + 1 != l.dim() {
        return Err(Error::Precondition(format!(
            "H must have codimension 1, got dim {} in dim {}",
            h.dim(),
            l.dim()
        )));
    }
    let ideal = is_ideal(l, h);
    let norm = normalizer(l, h);
    let self_normalizing = &norm == h;
    let witness = format!(
        "dim H={}, ideal={}, dim normalizer={}",
        h.dim(),
        ideal,
        norm.dim()
    );
    if ideal || self_normalizing {
        Ok(LemmaVerdict::pass(LemmaId::CodimOneDichotomy, true, witness))
    } else {
        Ok(LemmaVerdict::fail(
            LemmaId::CodimOneDichotomy,
            witness,
            "H is neither an ideal nor self-normalizing".into(),
        ))
    }
}

fn random_element(l: &LieRing, rng: &mut ChaCha8Rng) -> Vec<Scalar> {
    let f = l.field();
    loop {
        let v: Vec<Scalar> = (0..l.dim()).map(|_| f.random(rng)).collect();
        if !v.iter().all(|s| f.is_zero(s)) {
            return v;
        }
    }
}

fn random_eigenvalue(l: &LieRing, rng: &mut ChaCha8Rng) -> Scalar {
    let f = l.field();
    match f.order() {
        Some(q) => f.element_at(rng.random_range(0..q.min(7))),
        None => f.from_int(rng.random_range(-3..=3)),
    }
}

/// Runs `trials` randomized lemma checks across the catalog, drawing
/// instances from a seeded generator. Output is deterministic per seed.
/// Stops at the first failing verdict (which is included, with replay
/// details); `trials = 0` yields an empty report.
pub fn randomized_lemma_sweep(
    catalog: &[(String, LieRing)],
    trials: u64,
    seed: u64,
) -> Vec<LemmaVerdict> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut verdicts = Vec::new();
    if catalog.is_empty() {
        return verdicts;
    }
    // Settle which entries pass the simplicity screen once; the per-trial
    // generators only need the boolean.
    let simple: Vec<bool> = catalog
        .iter()
        .map(|(_, l)| simplicity_with_bound(l, 0, 100_000).simple)
        .collect();
    const LEMMAS: [LemmaId; 6] = [
        LemmaId::CentralizerTower,
        LemmaId::ImageAbelianIdeal,
        LemmaId::IteratedImageBracket,
        LemmaId::EigenspaceLifting,
        LemmaId::QuotientCentralizerNilpotent,
        LemmaId::CodimOneDichotomy,
    ];
    for trial in 0..trials {
        let entry = rng.random_range(0..catalog.len());
        let (name, l) = &catalog[entry];
        let first = rng.random_range(0..LEMMAS.len());
        let mut verdict: Option<LemmaVerdict> = None;
        for offset in 0..LEMMAS.len() {
            let lemma = LEMMAS[(first + offset) % LEMMAS.len()];
            verdict = try_random_instance(l, lemma, simple[entry], &mut rng);
            if verdict.is_some() {
                break;
            }
        }
        let mut verdict = verdict.expect("the centralizer tower check always has an instance");
        verdict.witness = format!("trial {trial}: {name}: {}", verdict.witness);
        if let Some(detail) = verdict.counterexample.take() {
            verdict.counterexample =
                Some(format!("{detail} (replay: seed={seed}, trial={trial}, ring={name})"));
        }
        let failed = !verdict.holds;
        verdicts.push(verdict);
        if failed {
            break;
        }
    }
    verdicts
}

/// Draws one instance of `lemma` on `l` if its preconditions can be met;
/// consumes randomness deterministically either way.
fn try_random_instance(
    l: &LieRing,
    lemma: LemmaId,
    l_is_simple: bool,
    rng: &mut ChaCha8Rng,
) -> Option<LemmaVerdict> {
    let f = l.field().clone();
    match lemma {
        LemmaId::CentralizerTower => {
            let h = random_element(l, rng);
            let n = rng.random_range(1..=2);
            Some(check_centralizer_tower(l, &h, n).expect("no preconditions"))
        }
        LemmaId::ImageAbelianIdeal => {
            if f.characteristic() == 2 {
                return None;
            }
            let a = random_element(l, rng);
            Some(check_image_abelian_ideal(l, &a).expect("characteristic was screened"))
        }
        LemmaId::IteratedImageBracket => {
            if f.characteristic() == 2 {
                return None;
            }
            // A single nonzero vector always spans an abelian subring; the
            // center is a larger abelian choice when it is nonzero.
            let a_space = if rng.random_range(0..4) == 0 {
                let z = structure::center(l);
                if z.dim() > 0 {
                    z
                } else {
                    Subspace::from_vecs(&f, vec![random_element(l, rng)], l.dim())
                }
            } else {
                Subspace::from_vecs(&f, vec![random_element(l, rng)], l.dim())
            };
            let x = random_element(l, rng);
            let n = rng.random_range(0..=2);
            Some(
                check_iterated_image_bracket(l, &a_space, &x, n)
                    .expect("A is abelian by construction"),
            )
        }
        LemmaId::EigenspaceLifting => {
            let h = random_element(l, rng);
            let k = random_eigenvalue(l, rng);
            let full = Subspace::full(&f, l.dim());
            let zero = Subspace::zero(&f, l.dim());
            // All of these are ad_h-invariant, and each pair is nested.
            let (v, v_prime) = match rng.random_range(0..4) {
                0 => (full, image_b(l, &h, 1)),
                1 => (full, centralizer_c(l, &h, 1)),
                2 => (full, zero),
                _ => (centralizer_c(l, &h, 1), zero),
            };
            Some(
                check_eigenspace_lifting(l, &v, &v_prime, &h, &k)
                    .expect("V and V' are invariant by construction"),
            )
        }
        LemmaId::QuotientCentralizerNilpotent => {
            if !l_is_simple {
                return None;
            }
            // A single vector spans a 1-dimensional (hence proper) subring;
            // occasionally grow it by closure when that stays proper.
            let x = random_element(l, rng);
            let mut h = Subspace::from_vecs(&f, vec![x], l.dim());
            if rng.random_range(0..2) == 0 {
                let y = random_element(l, rng);
                let grown = structure::subring_closure(l, &h.sum(&Subspace::from_vecs(
                    &f,
                    vec![y],
                    l.dim(),
                )));
                if !grown.is_full() {
                    h = grown;
                }
            }
            Some(check_quotient_centralizer_nilpotent(l, &h).expect("screened simple and proper"))
        }
        LemmaId::CodimOneDichotomy => {
            // Hyperplanes are kernels of covectors; keep one that happens
            // to be bracket-closed.
            for _ in 0..8 {
                let w = random_element(l, rng);
                let hyper =
                    Subspace::from_rows(&Matrix::from_rows(f.clone(), vec![w], l.dim())
                        .expect("one row")
                        .kernel());
                if hyper.dim() + 1 == l.dim() && is_subring(l, &hyper) {
                    return Some(
                        check_codim_one_dichotomy(l, &hyper).expect("checked the preconditions"),
                    );
                }
            }
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        catalog, direct_sum, make_abelian, make_ga1, make_heisenberg, make_sl2, make_witt,
    };
    use crate::field::Field;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    fn span(l: &LieRing, indices: &[usize]) -> Subspace {
        Subspace::from_vecs(
            l.field(),
            indices.iter().map(|&i| l.basis_element(i)).collect(),
            l.dim(),
        )
    }

    #[test]
    fn tower_holds_on_sl2_and_heisenberg() {
        let sl2 = make_sl2(&f5());
        let v = check_centralizer_tower(&sl2, &sl2.basis_element(0), 1).unwrap();
        assert!(v.hypothesis_met && v.holds);

        let h3 = make_heisenberg(&f5());
        let v = check_centralizer_tower(&h3, &h3.basis_element(0), 1).unwrap();
        assert!(v.hypothesis_met && v.holds);
    }

    #[test]
    fn tower_reports_vacuous_cases() {
        // Centralizing an element of the abelian summand contains all of
        // sl2, so the hypothesis fails.
        let l = direct_sum(&make_sl2(&f5()), &make_abelian(&f5(), 1));
        let v = check_centralizer_tower(&l, &l.basis_element(3), 1).unwrap();
        assert!(!v.hypothesis_met);
        assert!(v.holds);
        assert!(v.counterexample.is_none());
    }

    #[test]
    fn image_abelian_holds_on_heisenberg_and_is_vacuous_on_sl2() {
        let h3 = make_heisenberg(&f5());
        let v = check_image_abelian_ideal(&h3, &h3.basis_element(0)).unwrap();
        assert!(v.hypothesis_met, "ad_x squares to zero in the Heisenberg ring");
        assert!(v.holds);

        let sl2 = make_sl2(&f5());
        let v = check_image_abelian_ideal(&sl2, &sl2.basis_element(1)).unwrap();
        assert!(!v.hypothesis_met, "C_e^2 is the Borel, not everything");
        assert!(v.holds);
    }

    #[test]
    fn image_abelian_rejects_characteristic_two() {
        let f2 = Field::prime(2).unwrap();
        let l = make_heisenberg(&f2);
        assert!(matches!(
            check_image_abelian_ideal(&l, &l.basis_element(0)),
            Err(Error::UnsupportedCharacteristic(_))
        ));
    }

    #[test]
    fn iterated_bracket_spec_instances() {
        let sl2 = make_sl2(&f5());
        let a = span(&sl2, &[1]); // span(e)
        let v = check_iterated_image_bracket(&sl2, &a, &sl2.basis_element(2), 1).unwrap();
        assert!(v.holds);

        let a = span(&sl2, &[0]); // span(h)
        let v = check_iterated_image_bracket(&sl2, &a, &sl2.basis_element(1), 2).unwrap();
        assert!(v.holds);

        let witt = make_witt(5).unwrap();
        let a = span(&witt, &[2]); // e_1
        let v = check_iterated_image_bracket(&witt, &a, &witt.basis_element(0), 2).unwrap();
        assert!(v.holds);
    }

    #[test]
    fn iterated_bracket_enforces_preconditions() {
        let sl2 = make_sl2(&f5());
        let not_closed = span(&sl2, &[1, 2]); // span(e, f) brackets to h
        assert!(matches!(
            check_iterated_image_bracket(&sl2, &not_closed, &sl2.basis_element(0), 1),
            Err(Error::Precondition(_))
        ));
        let not_abelian = span(&sl2, &[0, 1]); // the Borel
        assert!(matches!(
            check_iterated_image_bracket(&sl2, &not_abelian, &sl2.basis_element(2), 1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn lifting_holds_on_sl2_and_ga1() {
        let sl2 = make_sl2(&f5());
        let h = sl2.basis_element(0);
        let v_space = span(&sl2, &[0, 1]); // span(h, e)
        let v_prime = span(&sl2, &[1]); // span(e)
        let zero = sl2.field().zero();
        let v = check_eigenspace_lifting(&sl2, &v_space, &v_prime, &h, &zero).unwrap();
        assert!(v.hypothesis_met && v.holds);

        let ga1 = make_ga1(&f5());
        let full = Subspace::full(ga1.field(), 2);
        let v_prime = span(&ga1, &[1]);
        let v = check_eigenspace_lifting(&ga1, &full, &v_prime, &ga1.basis_element(0), &zero)
            .unwrap();
        assert!(v.hypothesis_met && v.holds);
    }

    #[test]
    fn lifting_is_vacuous_when_v_equals_v_prime() {
        let sl2 = make_sl2(&f5());
        let v_space = span(&sl2, &[1]);
        let two = sl2.field().from_int(2);
        let v = check_eigenspace_lifting(&sl2, &v_space, &v_space, &sl2.basis_element(0), &two)
            .unwrap();
        assert!(!v.hypothesis_met);
        assert!(v.holds);
    }

    #[test]
    fn lifting_rejects_non_invariant_subspaces() {
        let sl2 = make_sl2(&f5());
        let full = Subspace::full(sl2.field(), 3);
        let v_prime = span(&sl2, &[0]); // span(h) is not ad_e-invariant
        let zero = sl2.field().zero();
        assert!(matches!(
            check_eigenspace_lifting(&sl2, &full, &v_prime, &sl2.basis_element(1), &zero),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn quotient_centralizer_instances_on_simple_rings() {
        let sl2 = make_sl2(&f5());
        let borel = span(&sl2, &[0, 1]);
        let v = check_quotient_centralizer_nilpotent(&sl2, &borel).unwrap();
        assert!(v.holds);
        assert!(v.witness.contains("dim I=1"), "I = span(e): {}", v.witness);

        let cartan = span(&sl2, &[0]);
        let v = check_quotient_centralizer_nilpotent(&sl2, &cartan).unwrap();
        assert!(v.holds);
        assert!(v.witness.contains("dim I=0"), "{}", v.witness);

        let witt = make_witt(5).unwrap();
        let positive = span(&witt, &[1, 2, 3, 4]); // e_0 .. e_3
        let v = check_quotient_centralizer_nilpotent(&witt, &positive).unwrap();
        assert!(v.holds);
        assert!(v.witness.contains("dim I=3"), "I = span(e_1,e_2,e_3): {}", v.witness);
    }

    #[test]
    fn quotient_centralizer_enforces_preconditions() {
        let h3 = make_heisenberg(&f5());
        let line = span(&h3, &[2]);
        assert!(matches!(
            check_quotient_centralizer_nilpotent(&h3, &line),
            Err(Error::Precondition(_))
        ));
        let sl2 = make_sl2(&f5());
        let full = Subspace::full(sl2.field(), 3);
        assert!(matches!(
            check_quotient_centralizer_nilpotent(&sl2, &full),
            Err(Error::Precondition(_))
        ));
        let not_subring = span(&sl2, &[1, 2]);
        assert!(matches!(
            check_quotient_centralizer_nilpotent(&sl2, &not_subring),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn dichotomy_on_known_codimension_one_subrings() {
        let sl2 = make_sl2(&f5());
        let borel = span(&sl2, &[0, 1]);
        let v = check_codim_one_dichotomy(&sl2, &borel).unwrap();
        assert!(v.holds);
        assert!(v.witness.contains("ideal=false"), "self-normalizing side: {}", v.witness);

        let witt = make_witt(5).unwrap();
        let positive = span(&witt, &[1, 2, 3, 4]);
        let v = check_codim_one_dichotomy(&witt, &positive).unwrap();
        assert!(v.holds);

        // sl2 ⊕ span(e) inside sl2 ⊕ ga1 is an ideal of codimension 1.
        let l = direct_sum(&make_sl2(&f5()), &make_ga1(&f5()));
        let ideal_side = span(&l, &[0, 1, 2, 4]);
        let v = check_codim_one_dichotomy(&l, &ideal_side).unwrap();
        assert!(v.holds);
        assert!(v.witness.contains("ideal=true"), "{}", v.witness);

        let h3 = make_heisenberg(&f5());
        let contains_center = span(&h3, &[0, 2]);
        let v = check_codim_one_dichotomy(&h3, &contains_center).unwrap();
        assert!(v.holds);
    }

    #[test]
    fn dichotomy_enforces_preconditions() {
        let sl2 = make_sl2(&f5());
        assert!(matches!(
            check_codim_one_dichotomy(&sl2, &span(&sl2, &[0])),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            check_codim_one_dichotomy(&sl2, &span(&sl2, &[1, 2])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn sweep_is_deterministic_and_clean() {
        let cat = catalog();
        let run1 = randomized_lemma_sweep(&cat, 40, 7);
        let run2 = randomized_lemma_sweep(&cat, 40, 7);
        assert_eq!(run1.len(), 40);
        let json1 = serde_json::to_string(&run1).unwrap();
        let json2 = serde_json::to_string(&run2).unwrap();
        assert_eq!(json1, json2, "sweep output must be byte-identical per seed");
        for v in &run1 {
            assert!(v.holds, "unexpected counterexample: {:?}", v);
        }
    }

    #[test]
    fn sweep_with_zero_trials_is_empty() {
        let cat = catalog();
        assert!(randomized_lemma_sweep(&cat, 0, 0).is_empty());
    }
}
