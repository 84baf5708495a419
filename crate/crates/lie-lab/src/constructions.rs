//! Named Lie-ring constructors and basis-change combinators.
//!
//! Every constructor returns a table that passes [`LieRing::verify_jacobi`];
//! the combinators transport tables along direct sums, subring restrictions,
//! and invertible basis changes.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, Scalar};
use crate::linalg::{row_times_matrix, vec_is_zero, Matrix};
use crate::ring::LieRing;
use crate::rootsys::{make_chevalley, RootSystem};
use crate::subspace::Subspace;
use crate::{Error, Result};

/// `sl2`: basis `(h, e, f)` with `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
/// Valid over any field; in characteristic 2 the table degenerates (`h`
/// becomes central) but is still well-formed.
pub fn make_sl2(field: &Field) -> LieRing {
    LieRing::from_int_pairs(
        field.clone(),
        3,
        &[((0, 1), &[0, 2, 0]), ((0, 2), &[0, 0, -2]), ((1, 2), &[1, 0, 0])],
    )
}

/// `ga1`: basis `(h, e)` with `[h, e] = e` — the non-nilpotent soluble ring
/// of dimension 2.
pub fn make_ga1(field: &Field) -> LieRing {
    LieRing::from_int_pairs(field.clone(), 2, &[((0, 1), &[0, 1])])
}

/// `heisenberg`: basis `(x, y, z)` with `[x, y] = z` and `z` central.
pub fn make_heisenberg(field: &Field) -> LieRing {
    LieRing::from_int_pairs(field.clone(), 3, &[((0, 1), &[0, 0, 1])])
}

/// The abelian ring of dimension `n`.
pub fn make_abelian(field: &Field, n: usize) -> LieRing {
    LieRing::abelian(field.clone(), n)
}

/// Witt ring `W(1;1)` over `F_p`: basis `e_{-1}, …, e_{p-2}` with
/// `[e_i, e_j] = (j - i) e_{i+j}`, sums outside the index range truncated to
/// zero (polynomial-degree truncation, not reduction mod p).
pub fn make_witt(p: u64) -> Result<LieRing> {
    if p < 5 {
        return Err(Error::UnsupportedCharacteristic(format!(
            "witt requires p >= 5, got {p}"
        )));
    }
    let field = Field::prime(p)?;
    let dim = p as usize;
    let mut pairs = Vec::new();
    for m in 0..dim {
        for n in (m + 1)..dim {
            // positions m, n carry indices i = m-1, j = n-1
            let coeff = (n - m) as i64;
            let target = m + n - 1; // position of index i+j = m+n-2
            if target < dim {
                let mut v = vec![0i64; dim];
                v[target] = coeff;
                pairs.push(((m, n), v));
            }
        }
    }
    let pairs_ref: Vec<((usize, usize), Vec<Scalar>)> = pairs
        .into_iter()
        .map(|((m, n), v)| ((m, n), v.into_iter().map(|c| field.from_int(c)).collect()))
        .collect();
    let ring = LieRing::from_pairs(field, dim, pairs_ref)?;
    debug_assert!(ring.verify_jacobi().holds);
    Ok(ring)
}

/// Witt basis position of index `i` in `-1..p-2`.
pub fn witt_position(i: i64) -> usize {
    (i + 1) as usize
}

/// The Frobenius `x -> x^p` of `F_{p^k}` as a k×k matrix over `F_p` in the
/// power basis (column `i` holds the coefficients of `t^i` raised to `p`).
pub fn frobenius_matrix(ext: &Field) -> Matrix {
    let p = ext.characteristic();
    let k = ext.degree();
    assert!(k > 1, "frobenius matrix needs a proper extension");
    let fp = Field::prime(p).expect("characteristic is prime");
    let mut m = Matrix::zeros(fp, k, k);
    for i in 0..k {
        let image = ext.pow(&ext.monomial(i), p);
        let Scalar::Ext(coeffs) = image else { unreachable!("extension arithmetic") };
        for (r, c) in coeffs.iter().enumerate() {
            m.set(r, i, Scalar::Fp(*c));
        }
    }
    m
}

/// Twisted `ga1` relative to the extension `F_{p^k}/F_p` with the Frobenius
/// twist. See [`make_ga1_twisted_with`] for the general linear twist.
pub fn make_ga1_twisted(p: u64, k: usize) -> Result<LieRing> {
    let ext = Field::extension(p, k)?;
    if k < 2 {
        return Err(Error::InvalidField(
            "twisted ga1 requires extension degree k >= 2".into(),
        ));
    }
    make_ga1_twisted_with(&ext, &frobenius_matrix(&ext))
}

/// Twisted `ga1`: the `2k`-dimensional `F_p`-ring of pairs
/// `(x, y) ∈ F_{p^k}²` with bracket
/// `[(x₁,y₁),(x₂,y₂)] = (0, α(x₁)y₂ − α(x₂)y₁)`,
/// where `α` is any `F_p`-linear map given as a k×k matrix over `F_p` in the
/// power basis. Its center is `ker α ⊕ 0` whenever `α ≠ 0`.
///
/// Basis order: the x-part monomials `t^0..t^{k-1}` first, then the y-part.
pub fn make_ga1_twisted_with(ext: &Field, alpha: &Matrix) -> Result<LieRing> {
    let p = ext.characteristic();
    let k = ext.degree();
    if k < 2 {
        return Err(Error::InvalidField(
            "twisted ga1 requires extension degree k >= 2".into(),
        ));
    }
    let fp = Field::prime(p)?;
    if alpha.rows() != k || alpha.cols() != k || alpha.field() != &fp {
        return Err(Error::DimensionMismatch(format!(
            "alpha must be a {k}x{k} matrix over F_{p}"
        )));
    }
    let dim = 2 * k;
    // alpha(t^i) as field elements, taken from the matrix columns.
    let alpha_of_monomial: Vec<Scalar> = (0..k)
        .map(|i| {
            let coeffs: Vec<u64> = (0..k)
                .map(|r| match alpha.get(r, i) {
                    Scalar::Fp(v) => *v,
                    _ => unreachable!("alpha validated over F_p"),
                })
                .collect();
            Scalar::Ext(coeffs)
        })
        .collect();
    let mut pairs = Vec::new();
    for i in 0..k {
        for j in 0..k {
            // [ (t^i, 0), (0, t^j) ] = (0, alpha(t^i) * t^j)
            let prod = ext.mul(&alpha_of_monomial[i], &ext.monomial(j));
            let Scalar::Ext(coeffs) = prod else { unreachable!("extension arithmetic") };
            let mut v = vec![fp.zero(); dim];
            for (r, c) in coeffs.iter().enumerate() {
                v[k + r] = Scalar::Fp(*c);
            }
            pairs.push(((i, k + j), v));
        }
    }
    LieRing::from_pairs(fp, dim, pairs)
}

/// Direct sum: block-diagonal bracket table on the concatenated bases.
pub fn direct_sum(a: &LieRing, b: &LieRing) -> LieRing {
    assert!(a.field() == b.field(), "direct sum requires a common field");
    let f = a.field().clone();
    let (da, db) = (a.dim(), b.dim());
    let dim = da + db;
    let mut pairs = Vec::new();
    for (i, j, c) in a.nonzero_pairs() {
        let mut v = vec![f.zero(); dim];
        v[..da].clone_from_slice(c);
        pairs.push(((i, j), v));
    }
    for (i, j, c) in b.nonzero_pairs() {
        let mut v = vec![f.zero(); dim];
        v[da..].clone_from_slice(c);
        pairs.push(((da + i, da + j), v));
    }
    LieRing::from_pairs(f, dim, pairs).expect("block table is well-formed")
}

/// Structure constants of a bracket-closed subspace on its own echelon basis.
pub fn restrict_to_subring(l: &LieRing, s: &Subspace) -> Result<LieRing> {
    let f = l.field().clone();
    let m = s.dim();
    let rows: Vec<&[Scalar]> = s.basis_rows().collect();
    let mut pairs = Vec::new();
    for a in 0..m {
        for b in (a + 1)..m {
            let w = l.bracket(rows[a], rows[b]);
            let coords = s.coordinates(&w).ok_or(Error::NotASubring)?;
            pairs.push(((a, b), coords));
        }
    }
    LieRing::from_pairs(f, m, pairs)
}

/// Transports the table to the basis whose rows are `g` (new basis vectors
/// expressed in the old coordinates). Composing two changes multiplies the
/// matrices in reverse order: `change_basis(change_basis(L, g), h) =
/// change_basis(L, h·g)`.
pub fn change_basis(l: &LieRing, g: &Matrix) -> Result<LieRing> {
    assert!(g.field() == l.field(), "basis change over a different field");
    assert!(g.rows() == l.dim() && g.cols() == l.dim(), "basis change must be square");
    let g_inv = g.inverse().map_err(|_| Error::SingularMatrix)?;
    let f = l.field().clone();
    let dim = l.dim();
    let mut pairs = Vec::new();
    for i in 0..dim {
        for j in (i + 1)..dim {
            let w = l.bracket(g.row(i), g.row(j));
            let coords = row_times_matrix(&f, &w, &g_inv);
            if !vec_is_zero(&f, &coords) {
                pairs.push(((i, j), coords));
            }
        }
    }
    LieRing::from_pairs(f, dim, pairs)
}

/// Seeded random invertible basis change; returns the transported ring and
/// the matrix used. Deterministic per seed.
pub fn random_basis_change(l: &LieRing, seed: u64) -> (LieRing, Matrix) {
    let f = l.field().clone();
    let dim = l.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut g = Matrix::zeros(f.clone(), dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                g.set(i, j, f.random(&mut rng));
            }
        }
        if g.is_invertible() {
            let moved = change_basis(l, &g).expect("invertible change succeeds");
            return (moved, g);
        }
    }
}

/// The named catalog used by the lemma sweeps and the identity test batteries.
pub fn catalog() -> Vec<(String, LieRing)> {
    let f5 = Field::prime(5).unwrap();
    let f7 = Field::prime(7).unwrap();
    let f25 = Field::extension(5, 2).unwrap();
    let q = Field::rationals();
    let mut out: Vec<(String, LieRing)> = vec![
        ("sl2(F_5)".into(), make_sl2(&f5)),
        ("sl2(F_7)".into(), make_sl2(&f7)),
        ("sl2(F_25)".into(), make_sl2(&f25)),
        ("sl2(Q)".into(), make_sl2(&q)),
        ("ga1(F_5)".into(), make_ga1(&f5)),
        ("ga1(F_7)".into(), make_ga1(&f7)),
        ("ga1(Q)".into(), make_ga1(&q)),
        ("ga1-twisted(5,2)".into(), make_ga1_twisted(5, 2).unwrap()),
        ("heisenberg(F_5)".into(), make_heisenberg(&f5)),
        ("heisenberg(Q)".into(), make_heisenberg(&q)),
        ("witt(5)".into(), make_witt(5).unwrap()),
        ("witt(7)".into(), make_witt(7).unwrap()),
        ("abelian(3, F_5)".into(), make_abelian(&f5, 3)),
        ("sl2+ga1(F_5)".into(), direct_sum(&make_sl2(&f5), &make_ga1(&f5))),
    ];
    out.push((
        "chevalley:A2(F_5)".into(),
        make_chevalley(&RootSystem::from_label("A2").unwrap(), &f5).unwrap(),
    ));
    out.push((
        "chevalley:B2(F_7)".into(),
        make_chevalley(&RootSystem::from_label("B2").unwrap(), &f7).unwrap(),
    ));
    out
}

/// Builds a construction by its CLI name: `sl2`, `ga1`, `ga1-twisted`,
/// `heisenberg`, `witt`, `chevalley:A2`, `abelian:n`.
pub fn construct(name: &str, field: &Field) -> Result<LieRing> {
    match name {
        "sl2" => Ok(make_sl2(field)),
        "ga1" => Ok(make_ga1(field)),
        "heisenberg" => Ok(make_heisenberg(field)),
        "ga1-twisted" => {
            let p = field.characteristic();
            if p == 0 {
                return Err(Error::UnsupportedConstruction(
                    "ga1-twisted needs a finite field F_{p^k}, k >= 2".into(),
                ));
            }
            make_ga1_twisted(p, field.degree())
        }
        "witt" => {
            let p = field.characteristic();
            if p == 0 || field.degree() != 1 {
                return Err(Error::UnsupportedConstruction(
                    "witt is defined over prime fields".into(),
                ));
            }
            make_witt(p)
        }
        _ => {
            if let Some(label) = name.strip_prefix("chevalley:") {
                let phi = RootSystem::from_label(label)?;
                return make_chevalley(&phi, field);
            }
            if let Some(n) = name.strip_prefix("abelian:") {
                let n: usize = n.parse().map_err(|_| {
                    Error::UnsupportedConstruction(format!("bad abelian dimension {n:?}"))
                })?;
                return Ok(make_abelian(field, n));
            }
            Err(Error::UnsupportedConstruction(name.into()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vec;
    use crate::structure;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn witt_brackets_match_the_defining_formula() {
        let w = make_witt(5).unwrap();
        assert_eq!(w.dim(), 5);
        assert!(w.verify_jacobi().holds);
        // [e_0, e_1] = (1 - 0) e_1.
        let b = w.basis_bracket(witt_position(0), witt_position(1));
        assert_eq!(b, unit_vec(&f5(), 5, witt_position(1)));
        // [e_{-1}, e_2] = 3 e_1.
        let b = w.basis_bracket(witt_position(-1), witt_position(2));
        let mut expect = vec![f5().zero(); 5];
        expect[witt_position(1)] = f5().from_int(3);
        assert_eq!(b, expect);
        // [e_2, e_3] lands outside the index range: zero.
        let b = w.basis_bracket(witt_position(2), witt_position(3));
        assert!(vec_is_zero(&f5(), &b));
    }

    #[test]
    fn witt_rejects_small_characteristic() {
        assert!(make_witt(3).is_err());
        assert!(make_witt(2).is_err());
        assert!(make_witt(7).is_ok());
    }

    #[test]
    fn twisted_ga1_frobenius_brackets() {
        let l = make_ga1_twisted(5, 2).unwrap();
        assert_eq!(l.dim(), 4);
        assert_eq!(l.field(), &f5());
        assert!(l.verify_jacobi().holds);
        // x-part and y-part are each abelian.
        assert!(vec_is_zero(&f5(), &l.basis_bracket(0, 1)));
        assert!(vec_is_zero(&f5(), &l.basis_bracket(2, 3)));
        // [ (1,0), (0,1) ] = (0, 1^5 * 1) = (0, 1).
        let b = l.basis_bracket(0, 2);
        assert_eq!(b, vec![f5().zero(), f5().zero(), f5().one(), f5().zero()]);
        // [ (t,0), (0,1) ] = (0, t^5). Over F_25 = F_5[t]/(t^2+2): t^2 = 3,
        // so t^5 = t * 3^2 = 4t.
        let b = l.basis_bracket(1, 2);
        assert_eq!(b, vec![f5().zero(), f5().zero(), f5().zero(), f5().from_int(4)]);
    }

    #[test]
    fn twisted_ga1_with_zero_alpha_is_abelian() {
        let ext = Field::extension(5, 2).unwrap();
        let zero = Matrix::zeros(f5(), 2, 2);
        let l = make_ga1_twisted_with(&ext, &zero).unwrap();
        assert!(l.is_abelian_ring());
    }

    #[test]
    fn direct_sum_blocks_do_not_interact() {
        let s = direct_sum(&make_sl2(&f5()), &make_sl2(&f5()));
        assert_eq!(s.dim(), 6);
        assert!(s.verify_jacobi().holds);
        assert!(vec_is_zero(&f5(), &s.basis_bracket(0, 3)));
        assert!(vec_is_zero(&f5(), &s.basis_bracket(2, 5)));
        // Second block carries the sl2 table shifted by 3.
        assert_eq!(s.basis_bracket(3, 4)[4], f5().from_int(2));
    }

    #[test]
    fn change_basis_with_identity_is_identity() {
        let l = make_sl2(&f5());
        let id = Matrix::identity(f5(), 3);
        assert_eq!(change_basis(&l, &id).unwrap(), l);
    }

    #[test]
    fn change_basis_composes_contravariantly() {
        let l = make_sl2(&f5());
        let g = Matrix::from_ints(f5(), &[&[1, 1, 0], &[0, 1, 0], &[2, 0, 1]]);
        let h = Matrix::from_ints(f5(), &[&[1, 0, 3], &[0, 1, 0], &[0, 4, 1]]);
        let two_step = change_basis(&change_basis(&l, &g).unwrap(), &h).unwrap();
        let one_step = change_basis(&l, &h.mul(&g)).unwrap();
        assert_eq!(two_step, one_step);
    }

    #[test]
    fn change_basis_rejects_singular_matrices() {
        let l = make_sl2(&f5());
        let g = Matrix::from_ints(f5(), &[&[1, 1, 0], &[2, 2, 0], &[0, 0, 1]]);
        assert!(matches!(change_basis(&l, &g), Err(Error::SingularMatrix)));
    }

    #[test]
    fn random_basis_change_is_seeded_and_preserves_jacobi() {
        let l = make_sl2(&f5());
        let (a, ga) = random_basis_change(&l, 42);
        let (b, gb) = random_basis_change(&l, 42);
        assert_eq!(a, b);
        assert_eq!(ga, gb);
        assert!(a.verify_jacobi().holds);
        let (c, _) = random_basis_change(&l, 43);
        // Different seed, almost surely a different table.
        assert_ne!(a, c);
    }

    #[test]
    fn restriction_recovers_subring_structure() {
        let l = make_sl2(&f5());
        // Borel span(h, e) of sl2: [h, e] = 2e.
        let s = Subspace::from_rows(&Matrix::from_ints(f5(), &[&[1, 0, 0], &[0, 1, 0]]));
        let r = restrict_to_subring(&l, &s).unwrap();
        assert_eq!(r.dim(), 2);
        assert_eq!(r.basis_bracket(0, 1), vec![f5().zero(), f5().from_int(2)]);
        // span(e, f) is not closed: [e, f] = h.
        let bad = Subspace::from_rows(&Matrix::from_ints(f5(), &[&[0, 1, 0], &[0, 0, 1]]));
        assert!(matches!(restrict_to_subring(&l, &bad), Err(Error::NotASubring)));
    }

    #[test]
    fn every_catalog_entry_passes_jacobi() {
        for (name, ring) in catalog() {
            assert!(ring.verify_jacobi().holds, "jacobi fails for {name}");
        }
    }

    #[test]
    fn construct_by_name_dispatches() {
        assert_eq!(construct("sl2", &f5()).unwrap(), make_sl2(&f5()));
        assert_eq!(construct("abelian:4", &f5()).unwrap().dim(), 4);
        assert!(construct("nosuch", &f5()).is_err());
        let f25 = Field::extension(5, 2).unwrap();
        assert_eq!(construct("ga1-twisted", &f25).unwrap().dim(), 4);
        assert!(construct("witt", &Field::rationals()).is_err());
    }

    #[test]
    fn direct_sum_derived_series_is_componentwise() {
        let f = f5();
        let l = direct_sum(&make_sl2(&f), &make_ga1(&f));
        let full = Subspace::full(&f, 5);
        let series = structure::derived_series(&l, &full).unwrap();
        // sl2 is perfect, ga1 has derived span(e) then 0: the sum stabilizes
        // at sl2 ⊕ span(e) after one step, then sl2 ⊕ 0.
        assert_eq!(series[0].dim(), 5);
        assert_eq!(series[1].dim(), 4);
        assert_eq!(series[2].dim(), 3);
        assert_eq!(series.len(), 3);
    }
}
