//! Exact scalar arithmetic over the supported ground fields: prime fields
//! `F_p`, extensions `F_{p^k}` presented on a power basis modulo a monic
//! irreducible polynomial, and the rationals.
//!
//! A [`Scalar`] is a bare value; it does not know which field it belongs to.
//! All arithmetic is performed through a [`Field`], which keeps every
//! representation canonical: residues lie in `0..p`, extension elements are
//! coefficient vectors of length `k` (ascending degree), and rationals are
//! reduced fractions with positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;

use crate::{Error, Result};

/// A scalar value in one of the supported representations.
///
/// Equality is representation equality; since each [`Field`] keeps values
/// canonical, this coincides with field-element equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    /// Residue in `0..p`.
    Fp(u64),
    /// Power-basis coefficients `a_0 + a_1 t + … + a_{k-1} t^{k-1}`, each in `0..p`.
    Ext(Vec<u64>),
    /// Reduced fraction with positive denominator.
    Rat(BigRational),
}

impl Scalar {
    /// Renders the scalar in a compact human-readable form: `3` for prime
    /// fields, `[a0,a1,…]` for extensions, `num/den` for rationals.
    pub fn render(&self) -> String {
        match self {
            Scalar::Fp(v) => v.to_string(),
            Scalar::Ext(cs) => {
                let body: Vec<String> = cs.iter().map(|c| c.to_string()).collect();
                format!("[{}]", body.join(","))
            }
            Scalar::Rat(r) => format!("{}/{}", r.numer(), r.denom()),
        }
    }
}

impl std::fmt::Display for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

/// A ground field: `F_p`, `F_{p^k}`, or the rationals.
///
/// The struct is cheap to clone and compare; two fields are interchangeable
/// exactly when they are equal (same characteristic, degree, and modulus).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Field {
    /// 0 encodes the rationals.
    characteristic: u64,
    /// 1 for prime fields and the rationals.
    degree: usize,
    /// Monic modulus of length `degree + 1`, ascending degree; present iff `degree > 1`.
    modulus: Option<Vec<u64>>,
}

impl Field {
    /// The field of rational numbers.
    pub fn rationals() -> Field {
        Field { characteristic: 0, degree: 1, modulus: None }
    }

    /// The prime field `F_p`. Fails unless `p` is prime.
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Field { characteristic: p, degree: 1, modulus: None })
    }

    /// The extension field `F_{p^k}` with the default modulus: the first
    /// monic irreducible polynomial of degree `k`, scanning coefficient
    /// vectors lexicographically from the highest-degree coefficient down to
    /// the constant term. For example `F_25` uses `t^2 + 2` and `F_49` uses
    /// `t^2 + 1`.
    pub fn extension(p: u64, k: usize) -> Result<Field> {
        if k == 0 {
            return Err(Error::InvalidField("extension degree must be positive".into()));
        }
        if k == 1 {
            return Field::prime(p);
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        let modulus = default_modulus(p, k);
        Ok(Field { characteristic: p, degree: k, modulus: Some(modulus) })
    }

    /// The extension field `F_{p^k}` with an explicit monic modulus given as
    /// ascending-degree coefficients of length `k + 1`. Fails if the modulus
    /// is not monic or not irreducible over `F_p`.
    pub fn extension_with_modulus(p: u64, modulus: Vec<u64>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if modulus.len() < 3 {
            return Err(Error::InvalidField(
                "modulus must have degree at least 2".into(),
            ));
        }
        let k = modulus.len() - 1;
        let modulus: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        if modulus[k] != 1 {
            return Err(Error::InvalidField("modulus must be monic".into()));
        }
        if !poly_is_irreducible(&modulus, p) {
            return Err(Error::InvalidField(format!(
                "modulus {} is reducible over F_{p}",
                render_poly(&modulus)
            )));
        }
        Ok(Field { characteristic: p, degree: k, modulus: Some(modulus) })
    }

    /// Field characteristic; 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    /// Extension degree over the prime field; 1 for `F_p` and the rationals.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Modulus coefficients (ascending degree) for proper extensions.
    pub fn modulus(&self) -> Option<&[u64]> {
        self.modulus.as_deref()
    }

    /// Number of elements, or `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        if self.characteristic == 0 {
            None
        } else {
            Some(self.characteristic.pow(self.degree as u32))
        }
    }

    pub fn is_rational(&self) -> bool {
        self.characteristic == 0
    }

    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    /// Image of an integer under the canonical map `Z -> field`.
    pub fn from_int(&self, n: i64) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            p => {
                let r = n.rem_euclid(p as i64) as u64;
                if self.degree == 1 {
                    Scalar::Fp(r)
                } else {
                    let mut cs = vec![0; self.degree];
                    cs[0] = r;
                    Scalar::Ext(cs)
                }
            }
        }
    }

    /// The power-basis monomial `t^i` of an extension field.
    pub fn monomial(&self, i: usize) -> Scalar {
        assert!(self.degree > 1, "monomial requires a proper extension field");
        assert!(i < self.degree, "monomial degree out of range");
        let mut cs = vec![0; self.degree];
        cs[i] = 1;
        Scalar::Ext(cs)
    }

    /// Constructs an extension element from ascending-degree coefficients.
    pub fn from_coefficients(&self, coeffs: &[i64]) -> Result<Scalar> {
        if self.degree == 1 {
            return Err(Error::InvalidField(
                "coefficient vectors are only valid for extension fields".into(),
            ));
        }
        if coeffs.len() != self.degree {
            return Err(Error::InvalidField(format!(
                "expected {} coefficients, got {}",
                self.degree,
                coeffs.len()
            )));
        }
        let p = self.characteristic as i64;
        Ok(Scalar::Ext(coeffs.iter().map(|c| c.rem_euclid(p) as u64).collect()))
    }

    /// Constructs a rational from a numerator/denominator pair.
    pub fn from_fraction(&self, num: i64, den: i64) -> Result<Scalar> {
        if !self.is_rational() {
            return Err(Error::InvalidField("fractions are only valid over Q".into()));
        }
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::Rat(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }

    /// Checks that a scalar is a canonical value of this field.
    pub fn validate(&self, s: &Scalar) -> bool {
        match (self.characteristic, self.degree, s) {
            (0, _, Scalar::Rat(_)) => true,
            (p, 1, Scalar::Fp(v)) if p > 0 => *v < p,
            (p, k, Scalar::Ext(cs)) if p > 0 && k > 1 => {
                cs.len() == k && cs.iter().all(|c| *c < p)
            }
            _ => false,
        }
    }

    pub fn is_zero(&self, s: &Scalar) -> bool {
        match s {
            Scalar::Fp(v) => *v == 0,
            Scalar::Ext(cs) => cs.iter().all(|c| *c == 0),
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % self.characteristic),
            (Scalar::Ext(x), Scalar::Ext(y)) => {
                let p = self.characteristic;
                Scalar::Ext(x.iter().zip(y).map(|(u, v)| (u + v) % p).collect())
            }
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            _ => panic!("scalar representation mismatch in add"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Fp(x) => Scalar::Fp(if *x == 0 { 0 } else { self.characteristic - x }),
            Scalar::Ext(cs) => {
                let p = self.characteristic;
                Scalar::Ext(cs.iter().map(|c| if *c == 0 { 0 } else { p - c }).collect())
            }
            Scalar::Rat(r) => Scalar::Rat(-r),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u128 * *y as u128) % self.characteristic as u128) as u64)
            }
            (Scalar::Ext(x), Scalar::Ext(y)) => {
                let m = self.modulus.as_ref().expect("extension field has a modulus");
                Scalar::Ext(poly_mul_mod(x, y, m, self.characteristic))
            }
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            _ => panic!("scalar representation mismatch in mul"),
        }
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(match a {
            Scalar::Fp(x) => Scalar::Fp(mod_inverse(*x, self.characteristic)),
            Scalar::Ext(cs) => {
                let m = self.modulus.as_ref().expect("extension field has a modulus");
                Scalar::Ext(poly_inv_mod(cs, m, self.characteristic))
            }
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Exponentiation by squaring; `pow(0, 0) = 1`.
    pub fn pow(&self, a: &Scalar, mut e: u64) -> Scalar {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// The element with the given index in the canonical enumeration of a
    /// finite field: indices are base-`p` digit vectors, least significant
    /// digit first. Index 0 is zero, index 1 is one.
    pub fn element_at(&self, index: u64) -> Scalar {
        let p = self.characteristic;
        assert!(p > 0, "element_at requires a finite field");
        if self.degree == 1 {
            assert!(index < p);
            Scalar::Fp(index)
        } else {
            let mut cs = vec![0; self.degree];
            let mut rest = index;
            for c in cs.iter_mut() {
                *c = rest % p;
                rest /= p;
            }
            assert!(rest == 0, "element index out of range");
            Scalar::Ext(cs)
        }
    }

    /// Iterates over all elements of a finite field in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Scalar> + '_ {
        let order = self.order().expect("elements() requires a finite field");
        (0..order).map(move |i| self.element_at(i))
    }

    /// Uniform random element. For the rationals, draws a fraction with
    /// numerator in `-9..=9` and denominator in `1..=9`, which is enough to
    /// scramble bases while keeping entries small.
    pub fn random(&self, rng: &mut impl Rng) -> Scalar {
        match self.order() {
            Some(q) => self.element_at(rng.random_range(0..q)),
            None => {
                let num = rng.random_range(-9i64..=9);
                let den = rng.random_range(1i64..=9);
                Scalar::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
            }
        }
    }

    /// Renders the field itself: `F_5`, `F_25 = F_5[t]/(t^2+2)`, or `Q`.
    pub fn render(&self) -> String {
        match (self.characteristic, self.degree) {
            (0, _) => "Q".into(),
            (p, 1) => format!("F_{p}"),
            (p, k) => format!(
                "F_{} = F_{p}[t]/({})",
                p.pow(k as u32),
                render_poly(self.modulus.as_ref().expect("proper extension"))
            ),
        }
    }
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Extended Euclid on (a, p); p prime and a nonzero mod p.
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert!(r0 == 1, "inverse of a multiple of p");
    s0.rem_euclid(p as i128) as u64
}

/// Multiplies two power-basis coefficient vectors and reduces modulo the
/// monic `modulus` (ascending degree, length k+1). Result has length k.
fn poly_mul_mod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u64; 2 * k - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] as u128 + ai as u128 * bj as u128).rem_euclid(p as u128) as u64;
        }
    }
    // Reduce t^d = -(modulus minus leading term) * t^{d-k} from the top down.
    for d in (k..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for (j, &mj) in modulus.iter().take(k).enumerate() {
            let sub = (c as u128 * mj as u128) % p as u128;
            prod[d - k + j] = ((prod[d - k + j] as u128 + p as u128 * p as u128 - sub) % p as u128) as u64;
        }
    }
    prod.truncate(k);
    prod
}

/// Degree of a coefficient vector, or None for the zero polynomial.
fn poly_degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|c| *c != 0)
}

/// Remainder of `a` modulo monic-scaled `b` over `F_p` (b need not be monic).
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = poly_degree(b).expect("division by zero polynomial");
    let lead_inv = mod_inverse(b[db], p);
    let mut r = a.to_vec();
    while let Some(dr) = poly_degree(&r) {
        if dr < db {
            break;
        }
        let factor = (r[dr] as u128 * lead_inv as u128 % p as u128) as u64;
        for j in 0..=db {
            let sub = factor as u128 * b[j] as u128 % p as u128;
            r[dr - db + j] =
                ((r[dr - db + j] as u128 + p as u128 * p as u128 - sub) % p as u128) as u64;
        }
    }
    r
}

fn poly_is_zero(a: &[u64]) -> bool {
    a.iter().all(|c| *c == 0)
}

/// Inverse of `a` modulo the monic irreducible `modulus` via extended Euclid.
fn poly_inv_mod(a: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let k = modulus.len() - 1;
    // Invariants: r0 = s0*a (mod modulus), r1 = s1*a (mod modulus).
    let mut r0: Vec<u64> = modulus.to_vec();
    let mut r1: Vec<u64> = a.to_vec();
    let mut s0: Vec<u64> = vec![0; k + 1];
    let mut s1: Vec<u64> = {
        let mut v = vec![0; k + 1];
        v[0] = 1;
        v
    };
    while !poly_is_zero(&r1) {
        let (q, r) = poly_divmod(&r0, &r1, p);
        let s = poly_sub(&s0, &poly_mul_plain(&q, &s1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    let d = poly_degree(&r0).expect("gcd of nonzero inputs");
    debug_assert!(d == 0, "modulus must be irreducible");
    let scale = mod_inverse(r0[0], p);
    let mut out = poly_rem(&s0, modulus, p);
    for c in out.iter_mut() {
        *c = (*c as u128 * scale as u128 % p as u128) as u64;
    }
    out.resize(k, 0);
    out
}

fn poly_divmod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = poly_degree(b).expect("division by zero polynomial");
    let lead_inv = mod_inverse(b[db], p);
    let mut r = a.to_vec();
    let da = match poly_degree(&r) {
        Some(d) => d,
        None => return (vec![0], r),
    };
    if da < db {
        return (vec![0], r);
    }
    let mut q = vec![0u64; da - db + 1];
    for dr in (db..=da).rev() {
        if r[dr] == 0 {
            continue;
        }
        let factor = (r[dr] as u128 * lead_inv as u128 % p as u128) as u64;
        q[dr - db] = factor;
        for j in 0..=db {
            let sub = factor as u128 * b[j] as u128 % p as u128;
            r[dr - db + j] =
                ((r[dr - db + j] as u128 + p as u128 * p as u128 - sub) % p as u128) as u64;
        }
    }
    (q, r)
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect()
}

fn poly_mul_plain(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u128 + ai as u128 * bj as u128) % p as u128) as u64;
        }
    }
    out
}

/// Irreducibility over `F_p` by trial division against every monic polynomial
/// of degree between 1 and deg/2. Desk-scale degrees only.
fn poly_is_irreducible(f: &[u64], p: u64) -> bool {
    let d = match poly_degree(f) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if d == 1 {
        return true;
    }
    for divisor_degree in 1..=d / 2 {
        let count = p.pow(divisor_degree as u32);
        for idx in 0..count {
            // Monic divisor t^divisor_degree + (digits of idx, ascending).
            let mut g = vec![0u64; divisor_degree + 1];
            let mut rest = idx;
            for c in g.iter_mut().take(divisor_degree) {
                *c = rest % p;
                rest /= p;
            }
            g[divisor_degree] = 1;
            if poly_is_zero(&poly_rem(f, &g, p)) {
                return false;
            }
        }
    }
    true
}

/// First monic irreducible of degree `k` over `F_p`, scanning coefficient
/// vectors lexicographically from the highest-degree coefficient down to the
/// constant term: F_25 gets t^2+2, F_49 gets t^2+1, F_125 gets t^3+t+1.
fn default_modulus(p: u64, k: usize) -> Vec<u64> {
    let count = p.pow(k as u32);
    for idx in 0..count {
        // The constant term is the fastest-changing digit, so the scan is
        // lexicographic on (c_{k-1}, …, c_1, c_0).
        let mut f = vec![0u64; k + 1];
        let mut rest = idx;
        for c in f.iter_mut().take(k) {
            *c = rest % p;
            rest /= p;
        }
        f[k] = 1;
        if poly_is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

fn render_poly(f: &[u64]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, &c) in f.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let term = match (i, c) {
            (0, c) => format!("{c}"),
            (1, 1) => "t".into(),
            (1, c) => format!("{c}t"),
            (i, 1) => format!("t^{i}"),
            (i, c) => format!("{c}t^{i}"),
        };
        parts.push(term);
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

/// Exact square root in the field, if one exists. Finite fields are scanned
/// exhaustively (orders at desk scale); over the rationals both numerator and
/// denominator must be perfect squares.
pub fn square_root(field: &Field, a: &Scalar) -> Option<Scalar> {
    match field.order() {
        Some(q) => {
            assert!(q <= 1_000_000, "square root scan requires field order <= 10^6");
            (0..q).map(|i| field.element_at(i)).find(|c| &field.mul(c, c) == a)
        }
        None => {
            let Scalar::Rat(r) = a else { panic!("rational field expects Rat scalars") };
            if r.is_negative() {
                return None;
            }
            let num = r.numer().sqrt();
            let den = r.denom().sqrt();
            if &(&num * &num) == r.numer() && &(&den * &den) == r.denom() {
                Some(Scalar::Rat(BigRational::new(num, den)))
            } else {
                None
            }
        }
    }
}
