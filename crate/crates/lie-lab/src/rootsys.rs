//! Root systems and Chevalley bases. A [`RootSystem`] is built from a type
//! label (`A1`–`A4`, `B2`, `B3`, `C2`, `C3`, `D4`, `G2`) by generating the
//! positive roots from an explicit integral realization of the simple roots,
//! then fixing structure constants `N_{α,β}` through the extraspecial-pair
//! sign convention. The resulting table is integral, is checked against the
//! Jacobi identity over the rationals, and instantiates over any field
//! through [`make_chevalley`].

use crate::field::Field;
use crate::ring::LieRing;
use crate::{Error, Result};
use num_rational::Ratio;
use std::collections::{BTreeMap, BTreeSet};

type Q = Ratio<i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Root {
    /// Coordinates in the ambient integral realization.
    euclid: Vec<i64>,
    /// Coefficients over the simple roots.
    simple: Vec<i64>,
}

impl Root {
    fn height(&self) -> i64 {
        self.simple.iter().sum()
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn vadd(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn vsub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn vneg(a: &[i64]) -> Vec<i64> {
    a.iter().map(|x| -x).collect()
}

/// A simple root system with a fixed Chevalley-basis structure-constant
/// table over the integers.
#[derive(Clone, Debug)]
pub struct RootSystem {
    label: String,
    rank: usize,
    simple_roots: Vec<Vec<i64>>,
    /// Positive roots ordered by height, then lexicographically by
    /// simple-root coefficients.
    positive: Vec<Root>,
    index: BTreeMap<Vec<i64>, usize>,
    /// `N_{α,β}` for ordered pairs of positive-root indices `(a, b)` with
    /// `a < b` and `β_a + β_b` a root.
    n_table: BTreeMap<(usize, usize), i64>,
    /// Nonzero brackets of the Chevalley basis, as integer coefficient rows.
    table: Vec<((usize, usize), Vec<i64>)>,
}

impl RootSystem {
    /// Builds the root system named by `label` and fixes its Chevalley
    /// structure constants. Supported labels: `A1`–`A4`, `B2`, `B3`, `C2`,
    /// `C3`, `D4`, `G2`.
    pub fn from_label(label: &str) -> Result<RootSystem> {
        let unsupported = || {
            Error::UnsupportedConstruction(format!(
                "unknown root system {label:?}; supported: A1-A4, B2, B3, C2, C3, D4, G2"
            ))
        };
        let mut chars = label.chars();
        let letter = chars.next().ok_or_else(unsupported)?;
        let rank: usize = chars.as_str().parse().map_err(|_| unsupported())?;
        let simple_roots = simple_roots_for(letter, rank).ok_or_else(unsupported)?;

        let mut sys = RootSystem {
            label: label.to_string(),
            rank,
            simple_roots,
            positive: Vec::new(),
            index: BTreeMap::new(),
            n_table: BTreeMap::new(),
            table: Vec::new(),
        };
        sys.generate_positive_roots();
        sys.fill_structure_constants();
        sys.build_integral_table();

        // The integral table must be a Lie table; every finite-field
        // instantiation inherits the identity from the rational one.
        let rational = instantiate(&sys, &Field::rationals());
        assert!(
            rational.verify_jacobi().holds,
            "Chevalley table for {label} must satisfy Jacobi over the rationals"
        );
        Ok(sys)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive.len()
    }

    /// Dimension of the associated Lie ring: rank + two root vectors per
    /// positive root.
    pub fn dimension(&self) -> usize {
        self.rank + 2 * self.positive.len()
    }

    /// The nonzero brackets of the Chevalley basis over the integers, in the
    /// basis order `h_1..h_n, e_{β_1}.., f_{β_1}..`.
    pub fn integral_table(&self) -> &[((usize, usize), Vec<i64>)] {
        &self.table
    }

    /// Positive roots as coefficient vectors over the simple roots, in
    /// height-then-lex order.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        self.positive.iter().map(|r| r.simple.clone()).collect()
    }

    fn norm2(&self, v: &[i64]) -> i64 {
        dot(v, v)
    }

    fn is_root(&self, v: &[i64]) -> bool {
        self.index.contains_key(v) || self.index.contains_key(&vneg(v))
    }

    /// Signed lookup: `+1` with the index for a positive root, `-1` for the
    /// negative of one.
    fn find_root(&self, v: &[i64]) -> Option<(i64, usize)> {
        if let Some(&i) = self.index.get(v) {
            return Some((1, i));
        }
        self.index.get(&vneg(v)).map(|&i| (-1, i))
    }

    /// `⟨β, α_i^∨⟩ = 2(β, α_i)/(α_i, α_i)`; integral for any root β.
    fn cartan_pairing(&self, beta: &[i64], i: usize) -> i64 {
        let ai = &self.simple_roots[i];
        let num = 2 * dot(beta, ai);
        let den = self.norm2(ai);
        assert_eq!(num % den, 0, "Cartan pairing must be integral");
        num / den
    }

    /// Height-by-height closure: a positive root β extends to β + α_i
    /// exactly when the α_i-string through β continues upward, i.e. when
    /// `q - ⟨β, α_i^∨⟩ > 0` with q the depth of the downward string.
    fn generate_positive_roots(&mut self) {
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: Vec<Root> = Vec::new();
        for (i, alpha) in self.simple_roots.iter().enumerate() {
            let mut simple = vec![0i64; self.rank];
            simple[i] = 1;
            let root = Root { euclid: alpha.clone(), simple };
            seen.insert(alpha.clone());
            queue.push(root);
        }
        let mut at = 0;
        while at < queue.len() {
            let beta = queue[at].clone();
            at += 1;
            for i in 0..self.rank {
                let alpha = self.simple_roots[i].clone();
                let mut q = 0;
                let mut down = vsub(&beta.euclid, &alpha);
                while seen.contains(&down) || seen.contains(&vneg(&down)) {
                    q += 1;
                    down = vsub(&down, &alpha);
                }
                let p = q - self.cartan_pairing(&beta.euclid, i);
                if p > 0 {
                    let up = vadd(&beta.euclid, &alpha);
                    if seen.insert(up.clone()) {
                        let mut simple = beta.simple.clone();
                        simple[i] += 1;
                        queue.push(Root { euclid: up, simple });
                    }
                }
            }
        }
        queue.sort_by_key(|r| (r.height(), r.simple.clone()));
        for (i, r) in queue.iter().enumerate() {
            self.index.insert(r.euclid.clone(), i);
        }
        self.positive = queue;
    }

    /// Depth of the α-string through β: the largest `k ≥ 0` with `β - kα`
    /// still a root.
    fn string_depth(&self, beta: usize, alpha: usize) -> i64 {
        let a = self.positive[alpha].euclid.clone();
        let mut k = 0;
        let mut down = vsub(&self.positive[beta].euclid, &a);
        while self.is_root(&down) {
            k += 1;
            down = vsub(&down, &a);
        }
        k
    }

    /// `N` for a pair of positive roots in either order; zero when the sum
    /// is not a root.
    fn n_pos(&self, table: &BTreeMap<(usize, usize), i64>, i: usize, j: usize) -> Q {
        if i == j {
            return Q::from(0);
        }
        if i > j {
            return -self.n_pos(table, j, i);
        }
        let sum = vadd(&self.positive[i].euclid, &self.positive[j].euclid);
        if !self.is_root(&sum) {
            return Q::from(0);
        }
        Q::from(*table.get(&(i, j)).expect("structure constants are filled in height order"))
    }

    /// `N` for arbitrary signed roots `(sign, index)`, reduced to the
    /// positive-pair table. Opposite roots give 0 (the Cartan part of the
    /// bracket is handled separately).
    fn n_signed(
        &self,
        table: &BTreeMap<(usize, usize), i64>,
        x: (i64, usize),
        y: (i64, usize),
    ) -> Q {
        match (x.0 > 0, y.0 > 0) {
            (true, true) => self.n_pos(table, x.1, y.1),
            (false, false) => -self.n_pos(table, x.1, y.1),
            (false, true) => -self.n_signed(table, y, x),
            (true, false) => {
                let (s, m) = (x.1, y.1);
                if s == m {
                    return Q::from(0);
                }
                let diff = vsub(&self.positive[s].euclid, &self.positive[m].euclid);
                match self.find_root(&diff) {
                    None => Q::from(0),
                    // σ - μ = ν > 0: N_{σ,-μ} = -(ν,ν)/(σ,σ) · N_{μ,ν}.
                    Some((1, v)) => {
                        let ratio = Q::new(
                            self.norm2(&self.positive[v].euclid),
                            self.norm2(&self.positive[s].euclid),
                        );
                        -ratio * self.n_pos(table, m, v)
                    }
                    // μ - σ = ν > 0: N_{σ,-μ} = -(ν,ν)/(μ,μ) · N_{σ,ν}.
                    Some((-1, v)) => {
                        let ratio = Q::new(
                            self.norm2(&self.positive[v].euclid),
                            self.norm2(&self.positive[m].euclid),
                        );
                        -ratio * self.n_pos(table, s, v)
                    }
                    Some(_) => unreachable!("find_root signs are ±1"),
                }
            }
        }
    }

    /// Fixes all `N_{α,β}` for positive special pairs. Extraspecial pairs
    /// (minimal first component for their sum) get `+(p+1)` where `p` is the
    /// string depth; every other special pair is forced by the four-root
    /// Jacobi relation against its sum's extraspecial pair.
    fn fill_structure_constants(&mut self) {
        let mut table: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for g in 0..self.positive.len() {
            let gamma = self.positive[g].euclid.clone();
            let mut specials: Vec<(usize, usize)> = Vec::new();
            for a in 0..g {
                for b in (a + 1)..g {
                    if vadd(&self.positive[a].euclid, &self.positive[b].euclid) == gamma {
                        specials.push((a, b));
                    }
                }
            }
            let Some(&(a1, b1)) = specials.first() else {
                continue; // simple root
            };
            let p1 = self.string_depth(b1, a1);
            table.insert((a1, b1), p1 + 1);

            for &(a, b) in &specials[1..] {
                // From the quadruple relation on (α₁, β₁, -α, -β):
                //   N_{α,β} = (γ,γ)/N_{α₁,β₁} · (T2 + T3).
                let d2 = vsub(&self.positive[b1].euclid, &self.positive[a].euclid);
                let t2 = if self.is_root(&d2) {
                    self.n_signed(&table, (1, b1), (-1, a))
                        * self.n_signed(&table, (1, a1), (-1, b))
                        / Q::from(self.norm2(&d2))
                } else {
                    Q::from(0)
                };
                let d3 = vsub(&self.positive[a1].euclid, &self.positive[a].euclid);
                let t3 = if self.is_root(&d3) {
                    self.n_signed(&table, (-1, a), (1, a1))
                        * self.n_signed(&table, (1, b1), (-1, b))
                        / Q::from(self.norm2(&d3))
                } else {
                    Q::from(0)
                };
                let value = Q::from(self.norm2(&gamma)) / Q::from(table[&(a1, b1)]) * (t2 + t3);
                assert!(value.is_integer(), "structure constants must be integral");
                let value = value.to_integer();
                let depth = self.string_depth(b, a);
                assert_eq!(value.abs(), depth + 1, "|N| must match the root string");
                table.insert((a, b), value);
            }
        }
        self.n_table = table;
    }

    fn build_integral_table(&mut self) {
        let n = self.rank;
        let p = self.positive.len();
        let dim = self.dimension();
        let e = |j: usize| n + j;
        let f = |j: usize| n + p + j;
        let mut rows: Vec<((usize, usize), Vec<i64>)> = Vec::new();
        let mut push = |i: usize, j: usize, row: Vec<i64>| {
            if row.iter().any(|&c| c != 0) {
                rows.push(((i, j), row));
            }
        };

        for i in 0..n {
            for j in 0..p {
                let c = self.cartan_pairing(&self.positive[j].euclid, i);
                let mut row = vec![0i64; dim];
                row[e(j)] = c;
                push(i, e(j), row);
                let mut row = vec![0i64; dim];
                row[f(j)] = -c;
                push(i, f(j), row);
            }
        }
        for i in 0..p {
            for j in (i + 1)..p {
                let sum = vadd(&self.positive[i].euclid, &self.positive[j].euclid);
                if let Some(&s) = self.index.get(&sum) {
                    let nij = self.n_signed(&self.n_table, (1, i), (1, j));
                    assert!(nij.is_integer());
                    let mut row = vec![0i64; dim];
                    row[e(s)] = nij.to_integer();
                    push(e(i), e(j), row);
                    let mut row = vec![0i64; dim];
                    row[f(s)] = -nij.to_integer();
                    push(f(i), f(j), row);
                }
            }
        }
        for i in 0..p {
            for j in 0..p {
                if i == j {
                    // [e_β, f_β] = h_β = Σ c_m (α_m, α_m)/(β, β) · h_m.
                    let beta = &self.positive[i];
                    let bb = self.norm2(&beta.euclid);
                    let mut row = vec![0i64; dim];
                    for m in 0..n {
                        let num = beta.simple[m] * self.norm2(&self.simple_roots[m]);
                        assert_eq!(num % bb, 0, "coroot coefficients must be integral");
                        row[m] = num / bb;
                    }
                    push(e(i), f(i), row);
                    continue;
                }
                let diff = vsub(&self.positive[i].euclid, &self.positive[j].euclid);
                if let Some((sign, d)) = self.find_root(&diff) {
                    let val = self.n_signed(&self.n_table, (1, i), (-1, j));
                    assert!(val.is_integer());
                    let mut row = vec![0i64; dim];
                    let pos = if sign > 0 { e(d) } else { f(d) };
                    row[pos] = val.to_integer();
                    push(e(i), f(j), row);
                }
            }
        }
        rows.sort_by_key(|(ij, _)| *ij);
        self.table = rows;
    }
}

/// Simple-root realizations with integer coordinates; the bilinear form is
/// the ordinary dot product.
fn simple_roots_for(letter: char, rank: usize) -> Option<Vec<Vec<i64>>> {
    let chain = |n: usize, m: usize| -> Vec<Vec<i64>> {
        // e_i - e_{i+1} for i = 0..n-1 inside R^m.
        (0..n)
            .map(|i| {
                let mut v = vec![0i64; m];
                v[i] = 1;
                v[i + 1] = -1;
                v
            })
            .collect()
    };
    match (letter, rank) {
        ('A', 1..=4) => Some(chain(rank, rank + 1)),
        ('B', 2..=3) => {
            let mut roots = chain(rank - 1, rank);
            let mut last = vec![0i64; rank];
            last[rank - 1] = 1;
            roots.push(last);
            Some(roots)
        }
        ('C', 2..=3) => {
            let mut roots = chain(rank - 1, rank);
            let mut last = vec![0i64; rank];
            last[rank - 1] = 2;
            roots.push(last);
            Some(roots)
        }
        ('D', 4) => {
            let mut roots = chain(rank - 1, rank);
            let mut last = vec![0i64; rank];
            last[rank - 2] = 1;
            last[rank - 1] = 1;
            roots.push(last);
            Some(roots)
        }
        ('G', 2) => Some(vec![vec![1, -1, 0], vec![-2, 1, 1]]),
        _ => None,
    }
}

fn instantiate(sys: &RootSystem, field: &Field) -> LieRing {
    let pairs: Vec<((usize, usize), &[i64])> =
        sys.integral_table().iter().map(|((i, j), row)| ((*i, *j), row.as_slice())).collect();
    LieRing::from_int_pairs(field.clone(), sys.dimension(), &pairs)
}

/// Instantiates the Chevalley basis of `sys` over `field`. Basis order:
/// Cartan elements `h_1..h_n`, then `e_β` over the positive roots in
/// height-then-lex order, then `f_β` in the same order. Valid over any
/// field; small characteristics may degenerate structurally (the table
/// still satisfies Jacobi).
pub fn make_chevalley(sys: &RootSystem, field: &Field) -> Result<LieRing> {
    Ok(instantiate(sys, field))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::make_sl2;
    use crate::field::Scalar;

    #[test]
    fn positive_root_counts() {
        let expect = [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("A4", 10),
            ("B2", 4),
            ("B3", 9),
            ("C2", 4),
            ("C3", 9),
            ("D4", 12),
            ("G2", 6),
        ];
        for (label, count) in expect {
            let sys = RootSystem::from_label(label).unwrap();
            assert_eq!(sys.num_positive_roots(), count, "root count for {label}");
        }
    }

    #[test]
    fn ring_dimensions() {
        let expect =
            [("A1", 3), ("A2", 8), ("A3", 15), ("A4", 24), ("B2", 10), ("B3", 21), ("C3", 21), ("D4", 28), ("G2", 14)];
        for (label, dim) in expect {
            let sys = RootSystem::from_label(label).unwrap();
            assert_eq!(sys.dimension(), dim, "dimension for {label}");
        }
    }

    #[test]
    fn unknown_labels_are_rejected() {
        for label in ["E8", "F4", "A9", "B1", "D5", "", "Z3", "A"] {
            assert!(RootSystem::from_label(label).is_err(), "{label} should be rejected");
        }
    }

    #[test]
    fn a1_reproduces_sl2() {
        let sys = RootSystem::from_label("A1").unwrap();
        for field in [Field::prime(5).unwrap(), Field::prime(7).unwrap(), Field::rationals()] {
            let chev = make_chevalley(&sys, &field).unwrap();
            let sl2 = make_sl2(&field);
            assert_eq!(chev.dim(), sl2.dim());
            for i in 0..3 {
                for j in (i + 1)..3 {
                    assert_eq!(chev.basis_bracket(i, j), sl2.basis_bracket(i, j));
                }
            }
        }
    }

    #[test]
    fn all_labels_satisfy_jacobi_over_small_primes() {
        for label in ["A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2"] {
            let sys = RootSystem::from_label(label).unwrap();
            for p in [5, 7] {
                let ring = make_chevalley(&sys, &Field::prime(p).unwrap()).unwrap();
                assert!(ring.verify_jacobi().holds, "{label} over F_{p}");
            }
        }
    }

    #[test]
    fn a2_structure_constants_are_units() {
        let sys = RootSystem::from_label("A2").unwrap();
        for (_, value) in &sys.n_table {
            assert_eq!(value.abs(), 1, "simply-laced constants are ±1");
        }
    }

    #[test]
    fn g2_reaches_a_constant_of_three() {
        let sys = RootSystem::from_label("G2").unwrap();
        let max = sys.n_table.values().map(|v| v.abs()).max().unwrap();
        assert_eq!(max, 3, "the long root string in G2 forces |N| = 3");
    }

    #[test]
    fn cartan_brackets_are_diagonal() {
        let sys = RootSystem::from_label("B2").unwrap();
        let field = Field::prime(7).unwrap();
        let ring = make_chevalley(&sys, &field).unwrap();
        // [h_i, h_j] = 0 and [h_i, e_β] is a multiple of e_β.
        assert!(crate::linalg::vec_is_zero(&field, &ring.basis_bracket(0, 1)));
        for j in 2..ring.dim() {
            let w = ring.basis_bracket(0, j);
            for (pos, c) in w.iter().enumerate() {
                if pos != j {
                    assert!(field.is_zero(c), "ad h_1 must be diagonal");
                }
            }
        }
    }

    #[test]
    fn e_f_pairs_return_coroots() {
        // In A2 the highest root θ = α1 + α2 has h_θ = h_1 + h_2.
        let sys = RootSystem::from_label("A2").unwrap();
        let field = Field::rationals();
        let ring = make_chevalley(&sys, &field).unwrap();
        // Positive order: α1/α2 at height 1 (lex), θ last. e-block starts at
        // index 2, f-block at 5; θ is positive index 2.
        let w = ring.basis_bracket(2 + 2, 5 + 2);
        let expected: Vec<Scalar> =
            [1, 1, 0, 0, 0, 0, 0, 0].iter().map(|&c| field.from_int(c)).collect();
        assert_eq!(w, expected);
    }

    #[test]
    fn chevalley_rings_are_perfect_over_f5() {
        for label in ["A2", "B2", "G2"] {
            let sys = RootSystem::from_label(label).unwrap();
            let ring = make_chevalley(&sys, &Field::prime(5).unwrap()).unwrap();
            let derived = crate::structure::derived_subring(&ring);
            assert!(derived.is_full(), "{label} must be perfect over F_5");
        }
    }
}
