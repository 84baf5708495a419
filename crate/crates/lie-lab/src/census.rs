//! Brute-force census of 3-dimensional bracket tables over a prime field:
//! enumerate all p⁹ antisymmetric tables, keep the ones satisfying the
//! Jacobi identity, test the survivors for simplicity, and run every simple
//! table through the `sl2` recognizer. The enumeration is chunked so the
//! data-parallel and sequential paths produce identical reports.
//!
//! The dimension-3 trick that makes this cheap: writing `a = [b₁,b₂]`,
//! `b = [b₁,b₃]`, `c = [b₂,b₃]` as rows, the Jacobi defect collapses to a
//! single vector identity, and a Jacobi table is simple exactly when the
//! three rows are linearly independent (a proper quotient would be a
//! perfect ring of dimension ≤ 2, which does not exist).

use crate::analysis::recognize_sl2;
use crate::field::{Field, Scalar};
use crate::ring::LieRing;
use crate::structure;
use crate::{Error, Result};
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Tuning knobs for a census run.
#[derive(Clone, Copy, Debug)]
pub struct CensusOptions {
    /// Seed forwarded to the recognizer (only consulted over fields too
    /// large for its exhaustive sweep, which never happens here).
    pub seed: u64,
    /// Hard ceiling on the number of tables a run may enumerate.
    pub max_tables: u64,
}

impl Default for CensusOptions {
    fn default() -> CensusOptions {
        CensusOptions { seed: 0, max_tables: 100_000_000 }
    }
}

/// Aggregate report of one census run. `recognized_sl2_count` plus the
/// number of `unrecognized` tables always equals `simple_count`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CensusResult {
    pub field: String,
    pub characteristic: u64,
    pub dimension: usize,
    pub total_tables: u64,
    pub jacobi_count: u64,
    pub simple_count: u64,
    pub recognized_sl2_count: u64,
    /// Simple tables the recognizer failed on, as raw digit tuples
    /// `(c12, c13, c23)` flattened; expected to stay empty.
    pub unrecognized: Vec<[u64; 9]>,
}

/// Census entry point by dimension. Only dimension 3 is within the
/// enumeration budget: dimension 4 would need p¹⁸ tables (over 3·10¹² even
/// for p = 5), which is rejected rather than attempted.
pub fn census(dim: usize, p: u64, options: CensusOptions) -> Result<CensusResult> {
    match dim {
        3 => census_dim3(p, options),
        4 => Err(Error::BudgetExceeded(
            "a dimension-4 census enumerates p^18 tables, which is out of the desk-scale \
             budget; dimension 3 is the supported census"
                .into(),
        )),
        other => Err(Error::UnsupportedConstruction(format!(
            "no census is defined for dimension {other}"
        ))),
    }
}

/// Full census of 3-dimensional tables over `F_p`.
pub fn census_dim3(p: u64, options: CensusOptions) -> Result<CensusResult> {
    if matches!(p, 2 | 3) {
        return Err(Error::UnsupportedCharacteristic(
            "the census requires characteristic outside {2, 3}".into(),
        ));
    }
    let field = Field::prime(p)?;
    let total = p
        .checked_pow(9)
        .filter(|&t| t <= options.max_tables)
        .ok_or_else(|| {
            Error::BudgetExceeded(format!("p = {p} is too large for the configured budget"))
        })?;

    const CHUNK: u64 = 1 << 16;
    let chunks: Vec<(u64, u64)> = (0..total)
        .step_by(CHUNK as usize)
        .map(|lo| (lo, (lo + CHUNK).min(total)))
        .collect();

    #[cfg(feature = "parallel")]
    let partials: Vec<Partial> = chunks
        .par_iter()
        .map(|&(lo, hi)| scan_range(&field, p, lo, hi, options.seed))
        .collect();
    #[cfg(not(feature = "parallel"))]
    let partials: Vec<Partial> = chunks
        .iter()
        .map(|&(lo, hi)| scan_range(&field, p, lo, hi, options.seed))
        .collect();

    let mut merged = Partial::default();
    for part in partials {
        merged.jacobi += part.jacobi;
        merged.simple += part.simple;
        merged.recognized += part.recognized;
        merged.unrecognized.extend(part.unrecognized);
    }
    assert_eq!(
        merged.recognized + merged.unrecognized.len() as u64,
        merged.simple,
        "every simple table is either recognized or listed"
    );
    Ok(CensusResult {
        field: field.render(),
        characteristic: p,
        dimension: 3,
        total_tables: total,
        jacobi_count: merged.jacobi,
        simple_count: merged.simple,
        recognized_sl2_count: merged.recognized,
        unrecognized: merged.unrecognized,
    })
}

#[derive(Default)]
struct Partial {
    jacobi: u64,
    simple: u64,
    recognized: u64,
    unrecognized: Vec<[u64; 9]>,
}

/// Digits of `index` base `p`, least significant first: entries 0..3 are
/// `[b₁,b₂]`, 3..6 are `[b₁,b₃]`, 6..9 are `[b₂,b₃]`.
fn digits(p: u64, mut index: u64) -> [u64; 9] {
    let mut out = [0u64; 9];
    for slot in out.iter_mut() {
        *slot = index % p;
        index /= p;
    }
    out
}

/// Jacobi identity specialized to dimension 3: with rows `a, b, c` as in
/// [`digits`], the lone Jacobi sum equals
/// `-(b₁+c₂)·a + (a₁-c₃)·b + (a₂+b₃)·c` and the identity holds exactly
/// when that vector vanishes.
fn fast_jacobi(p: u64, t: &[u64; 9]) -> bool {
    let (a, b, c) = (&t[0..3], &t[3..6], &t[6..9]);
    let coef_a = (2 * p - b[0] - c[1]) % p;
    let coef_b = (a[0] + p - c[2]) % p;
    let coef_c = (a[1] + b[2]) % p;
    (0..3).all(|r| (coef_a * a[r] + coef_b * b[r] + coef_c * c[r]) % p == 0)
}

/// Determinant of the 3×3 matrix with rows `a, b, c`, reduced mod `p`.
/// Nonzero exactly when the table is perfect, which for Jacobi tables of
/// dimension 3 is equivalent to simplicity.
fn fast_simple(p: u64, t: &[u64; 9]) -> bool {
    let m = |r: usize, c: usize| t[3 * r + c];
    let pos = m(0, 0) * m(1, 1) * m(2, 2) + m(0, 1) * m(1, 2) * m(2, 0)
        + m(0, 2) * m(1, 0) * m(2, 1);
    let neg = m(0, 2) * m(1, 1) * m(2, 0) + m(0, 1) * m(1, 0) * m(2, 2)
        + m(0, 0) * m(1, 2) * m(2, 1);
    // Entries are < p ≤ 7, so both halves stay far below u64 overflow.
    (pos + 3 * p * p * p - neg) % p != 0
}

fn build_ring(field: &Field, t: &[u64; 9]) -> LieRing {
    let coeffs = |lo: usize| -> Vec<Scalar> { t[lo..lo + 3].iter().map(|&d| Scalar::Fp(d)).collect() };
    LieRing::from_pairs(
        field.clone(),
        3,
        [((0, 1), coeffs(0)), ((0, 2), coeffs(3)), ((1, 2), coeffs(6))],
    )
    .expect("digit tables are reduced mod p")
}

fn scan_range(field: &Field, p: u64, lo: u64, hi: u64, seed: u64) -> Partial {
    let mut part = Partial::default();
    for index in lo..hi {
        let t = digits(p, index);
        if !fast_jacobi(p, &t) {
            continue;
        }
        part.jacobi += 1;
        if !fast_simple(p, &t) {
            continue;
        }
        part.simple += 1;
        let ring = build_ring(field, &t);
        debug_assert!(ring.verify_jacobi().holds);
        // Simple rings are centerless and perfect; any violation here means
        // the fast filters and the general machinery disagree.
        assert_eq!(structure::center(&ring).dim(), 0, "simple tables are centerless");
        assert!(
            structure::derived_subring(&ring).is_full(),
            "simple tables are perfect"
        );
        let report = recognize_sl2(&ring, seed).expect("dimension 3, characteristic > 3");
        if report.recognized() {
            part.recognized += 1;
        } else {
            part.unrecognized.push(t);
        }
    }
    part
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_small_characteristics_and_large_primes() {
        assert!(matches!(
            census_dim3(2, CensusOptions::default()),
            Err(Error::UnsupportedCharacteristic(_))
        ));
        assert!(matches!(
            census_dim3(3, CensusOptions::default()),
            Err(Error::UnsupportedCharacteristic(_))
        ));
        assert!(matches!(
            census_dim3(11, CensusOptions::default()),
            Err(Error::BudgetExceeded(_))
        ));
        let tiny = CensusOptions { max_tables: 1000, ..CensusOptions::default() };
        assert!(matches!(census_dim3(5, tiny), Err(Error::BudgetExceeded(_))));
        assert!(matches!(census_dim3(6, CensusOptions::default()), Err(Error::InvalidField(_))));
    }

    #[test]
    fn dimension_dispatch() {
        assert!(matches!(
            census(4, 5, CensusOptions::default()),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(matches!(
            census(2, 5, CensusOptions::default()),
            Err(Error::UnsupportedConstruction(_))
        ));
    }

    #[test]
    fn fast_filters_agree_with_the_general_machinery_on_a_prefix() {
        // A contiguous slab of small indices plus a stride through the rest
        // of the space: compare the digit-level filters against full ring
        // construction, ideal spinning included.
        let p = 5u64;
        let field = Field::prime(p).unwrap();
        let total = p.pow(9);
        let indices = (0..4000u64).chain((0..300).map(|k| (k * 6_700_417) % total));
        for index in indices {
            let t = digits(p, index);
            let ring = build_ring(&field, &t);
            let jacobi = ring.verify_jacobi().holds;
            assert_eq!(fast_jacobi(p, &t), jacobi, "index {index}");
            if jacobi {
                let simple = structure::is_simple(&ring);
                assert_eq!(fast_simple(p, &t), simple, "index {index}");
            }
        }
    }

    proptest! {
        #[test]
        fn fast_jacobi_matches_table_verification(
            index in 0u64..1_953_125,
            p in prop::sample::select(vec![5u64, 7]),
        ) {
            let index = index % p.pow(9);
            let t = digits(p, index);
            let field = Field::prime(p).unwrap();
            let ring = build_ring(&field, &t);
            prop_assert_eq!(fast_jacobi(p, &t), ring.verify_jacobi().holds);
        }
    }

    #[test]
    fn digit_order_is_little_endian_per_pair() {
        let t = digits(5, 2 + 5 * 3 + 25 * 4);
        assert_eq!(t[0..3], [2, 3, 4]);
        assert_eq!(t[3..9], [0, 0, 0, 0, 0, 0]);
    }
}
