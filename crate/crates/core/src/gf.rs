//! Finite fields GF(p^k) with q = p^k <= 256.
//!
//! Elements are stored as their index `c0 + c1*p + ... + c_{k-1}*p^{k-1}`
//! where `c0 + c1*x + ...` is the canonical polynomial representative.
//! Index order therefore coincides with lexicographic order on the
//! coefficient vector with the constant term varying fastest.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub const MAX_ORDER: u32 = 256;

/// One fixed irreducible monic modulus per supported extension, constant
/// coefficient first, leading 1 omitted.
const BUILTIN_MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1]),
    (2, 3, &[1, 1, 0]),
    (2, 4, &[1, 1, 0, 0]),
    (2, 5, &[1, 0, 1, 0, 0]),
    (2, 6, &[1, 1, 0, 0, 0, 0]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0]),
    (2, 8, &[1, 1, 0, 1, 1, 0, 0, 0]),
    (3, 2, &[1, 0]),
    (3, 3, &[1, 2, 0]),
    (3, 4, &[2, 0, 0, 2]),
    (3, 5, &[1, 2, 0, 0, 0]),
    (5, 2, &[2, 0]),
    (5, 3, &[1, 1, 0]),
    (7, 2, &[1, 0]),
    (11, 2, &[1, 0]),
    (13, 2, &[2, 0]),
];

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, k)` with `q = p^k`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// All prime powers in `2..=limit`.
pub fn prime_powers_up_to(limit: u32) -> Vec<u32> {
    (2..=limit).filter(|&q| prime_power(q).is_some()).collect()
}

/// Characteristic, degree and (for k > 1) the defining modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
    k: u32,
    /// Monic modulus, constant term first, leading coefficient included.
    /// Empty for prime fields.
    modulus: Vec<u32>,
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1)
    }

    /// GF(p^k) with the built-in modulus.
    pub fn new(p: u32, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        check_order(p, k)?;
        if k == 1 {
            return Ok(FieldSpec { p, k, modulus: Vec::new() });
        }
        let (_, _, tail) =
            BUILTIN_MODULI.iter().find(|(pp, kk, _)| *pp == p && *kk == k).ok_or(Error::UnsupportedOrder { p, k })?;
        let mut modulus = tail.to_vec();
        modulus.push(1);
        Self::with_modulus(p, modulus)
    }

    /// Field of order `q` with the built-in modulus.
    pub fn from_order(q: u32) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or(Error::InvalidArgument("q must be a prime power >= 2"))?;
        Self::new(p, k)
    }

    /// GF(p^k) defined by an explicit monic modulus of degree k
    /// (constant term first). The modulus is checked for irreducibility.
    pub fn with_modulus(p: u32, mut modulus: Vec<u32>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if modulus.len() < 3 {
            // degree 0/1 moduli describe the prime field itself
            return Err(Error::BadModulus { expected: 2, p });
        }
        let k = (modulus.len() - 1) as u32;
        check_order(p, k)?;
        if modulus.iter().any(|&c| c >= p) || *modulus.last().unwrap() != 1 {
            return Err(Error::BadModulus { expected: k, p });
        }
        if !poly_is_irreducible(p, &modulus) {
            return Err(Error::ReducibleModulus(p));
        }
        modulus.shrink_to_fit();
        Ok(FieldSpec { p, k, modulus })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.p.pow(self.k)
    }

    pub fn modulus(&self) -> Option<&[u32]> {
        (self.k > 1).then_some(self.modulus.as_slice())
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q={}^{}", self.p, self.k)?;
        if let Some(m) = self.modulus() {
            write!(f, " modulus=[")?;
            for (i, c) in m.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

fn check_order(p: u32, k: u32) -> Result<()> {
    if k == 0 || p.checked_pow(k).is_none_or(|q| q > MAX_ORDER) {
        return Err(Error::UnsupportedOrder { p, k });
    }
    Ok(())
}

/// Remainder of `a` modulo monic `m` over GF(p); both constant-first.
fn poly_rem(p: u32, a: &[u32], m: &[u32]) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().unwrap();
        if lead == 0 {
            continue;
        }
        let off = r.len() - dm;
        for (i, &c) in m[..dm].iter().enumerate() {
            r[off + i] = (r[off + i] + (p - c) * lead % p) % p;
        }
    }
    r
}

/// Exhaustive trial division by every monic polynomial of degree <= k/2.
pub fn poly_is_irreducible(p: u32, m: &[u32]) -> bool {
    let k = m.len() - 1;
    for d in 1..=k / 2 {
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut f = Vec::with_capacity(d + 1);
            let mut t = idx;
            for _ in 0..d {
                f.push(t % p);
                t /= p;
            }
            f.push(1);
            if poly_rem(p, m, &f).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// An element of GF(q), stored by index. Only meaningful together with the
/// [`Gf`] it was produced by.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u8);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn index(self) -> u32 {
        self.0 as u32
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug)]
struct Tables {
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

/// Arithmetic context for one finite field. Cloning is cheap.
#[derive(Clone, Debug)]
pub struct Gf {
    spec: FieldSpec,
    q: usize,
    t: Arc<Tables>,
}

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for Gf {}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl Gf {
    pub fn new(spec: FieldSpec) -> Self {
        let q = spec.order() as usize;
        let p = spec.p;
        let k = spec.k as usize;
        let decode = |mut i: usize| {
            let mut c = vec![0u32; k];
            for slot in c.iter_mut() {
                *slot = (i % p as usize) as u32;
                i /= p as usize;
            }
            c
        };
        let encode = |c: &[u32]| c.iter().rev().fold(0usize, |acc, &d| acc * p as usize + d as usize);
        let coeffs: Vec<Vec<u32>> = (0..q).map(decode).collect();

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for x in 0..q {
            for y in 0..q {
                let s: Vec<u32> = coeffs[x].iter().zip(&coeffs[y]).map(|(a, b)| (a + b) % p).collect();
                add[x * q + y] = encode(&s) as u8;
                let mut prod = vec![0u32; 2 * k - 1];
                for (i, a) in coeffs[x].iter().enumerate() {
                    for (j, b) in coeffs[y].iter().enumerate() {
                        prod[i + j] = (prod[i + j] + a * b) % p;
                    }
                }
                let r = if k == 1 { prod } else { poly_rem(p, &prod, &spec.modulus) };
                let mut r = r;
                r.resize(k, 0);
                mul[x * q + y] = encode(&r) as u8;
            }
        }
        let neg = (0..q).map(|x| (0..q).find(|&y| add[x * q + y] == 0).unwrap() as u8).collect();
        let inv =
            (0..q).map(|x| if x == 0 { 0 } else { (1..q).find(|&y| mul[x * q + y] == 1).unwrap() as u8 }).collect();
        Gf { spec, q, t: Arc::new(Tables { add, mul, neg, inv }) }
    }

    pub fn from_order(q: u32) -> Result<Self> {
        Ok(Self::new(FieldSpec::from_order(q)?))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.spec.p
    }

    #[inline]
    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    #[inline]
    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// Element by index, validated against the field order.
    pub fn element(&self, index: u32) -> Result<FieldElement> {
        if (index as usize) < self.q {
            Ok(FieldElement(index as u8))
        } else {
            Err(Error::ElementOutOfRange { value: index, q: self.q as u32 })
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        let p = self.spec.p as i64;
        FieldElement(n.rem_euclid(p) as u8)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        let p = self.spec.p;
        if coeffs.len() != self.spec.k as usize {
            return Err(Error::DimensionMismatch { expected: self.spec.k as usize, got: coeffs.len() });
        }
        if let Some(&bad) = coeffs.iter().find(|&&c| c >= p) {
            return Err(Error::ElementOutOfRange { value: bad, q: p });
        }
        let idx = coeffs.iter().rev().fold(0u32, |acc, &c| acc * p + c);
        Ok(FieldElement(idx as u8))
    }

    pub fn coeffs(&self, x: FieldElement) -> Vec<u32> {
        let p = self.spec.p;
        let mut i = x.index();
        (0..self.spec.k)
            .map(|_| {
                let c = i % p;
                i /= p;
                c
            })
            .collect()
    }

    #[inline]
    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        FieldElement(self.t.add[x.0 as usize * self.q + y.0 as usize])
    }

    #[inline]
    pub fn neg(&self, x: FieldElement) -> FieldElement {
        FieldElement(self.t.neg[x.0 as usize])
    }

    #[inline]
    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        FieldElement(self.t.mul[x.0 as usize * self.q + y.0 as usize])
    }

    pub fn inv(&self, x: FieldElement) -> Result<FieldElement> {
        if x.is_zero() {
            Err(Error::NotInvertible)
        } else {
            Ok(FieldElement(self.t.inv[x.0 as usize]))
        }
    }

    pub fn div(&self, x: FieldElement, y: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(x, self.inv(y)?))
    }

    pub fn pow(&self, mut x: FieldElement, mut e: u64) -> FieldElement {
        let mut r = self.one();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, x);
            }
            x = self.mul(x, x);
            e >>= 1;
        }
        r
    }

    /// Range-checked arithmetic for values arriving from outside the crate.
    pub fn checked(&self, op: ArithOp, x: FieldElement, y: FieldElement) -> Result<FieldElement> {
        for v in [x, y] {
            if v.0 as usize >= self.q {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(match op {
            ArithOp::Add => self.add(x, y),
            ArithOp::Sub => self.sub(x, y),
            ArithOp::Mul => self.mul(x, y),
        })
    }

    /// All q elements, lexicographic on coefficients with constant term fastest.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.q).map(|i| FieldElement(i as u8))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (1..self.q).map(|i| FieldElement(i as u8))
    }

    /// Square root by search; only used for characteristic-2 radicals where
    /// squaring is a bijection.
    pub(crate) fn sqrt(&self, x: FieldElement) -> Option<FieldElement> {
        self.elements().find(|&s| self.mul(s, s) == x)
    }

    /// Text literal: an integer for prime fields, `[c0,c1,...]` otherwise.
    pub fn format(&self, x: FieldElement) -> alloc::string::String {
        use alloc::string::ToString;
        if self.spec.k == 1 {
            return x.index().to_string();
        }
        let mut s = alloc::string::String::from("[");
        for (i, c) in self.coeffs(x).iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&c.to_string());
        }
        s.push(']');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> Gf {
        Gf::from_order(q).unwrap()
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = gf(7);
        let (three, five) = (f.element(3).unwrap(), f.element(5).unwrap());
        assert_eq!(f.add(three, five).index(), 1);
        assert_eq!(f.mul(three, five).index(), 1);
        assert_eq!(f.inv(three).unwrap().index(), 5);
        assert_eq!(f.inv(f.zero()), Err(Error::NotInvertible));
        assert_eq!(gf(2).inv(FieldElement::ONE).unwrap(), FieldElement::ONE);
    }

    #[test]
    fn gf4_reduction() {
        let f = gf(4);
        assert_eq!(f.spec().modulus(), Some(&[1, 1, 1][..]));
        let x = f.from_coeffs(&[0, 1]).unwrap();
        let x_plus_1 = f.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(f.mul(x, x), x_plus_1);
        assert_eq!(f.inv(x).unwrap(), x_plus_1);
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(gf(2).elements().map(|e| e.index()).collect::<Vec<_>>(), [0, 1]);
        assert_eq!(gf(3).elements().map(|e| e.index()).collect::<Vec<_>>(), [0, 1, 2]);
        let f = gf(4);
        let coeffs: Vec<Vec<u32>> = f.elements().map(|e| f.coeffs(e)).collect();
        assert_eq!(coeffs, [vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]);
        for q in prime_powers_up_to(256) {
            let f = gf(q);
            let mut all: Vec<_> = f.elements().collect();
            all.dedup();
            assert_eq!(all.len(), q as usize);
        }
    }

    #[test]
    fn builtin_moduli_irreducible() {
        for &(p, k, tail) in BUILTIN_MODULI {
            let mut m = tail.to_vec();
            m.push(1);
            assert!(poly_is_irreducible(p, &m), "p={p} k={k}");
        }
        for q in prime_powers_up_to(256) {
            FieldSpec::from_order(q).unwrap();
        }
    }

    #[test]
    fn rejects_bad_specs() {
        assert_eq!(FieldSpec::new(4, 1), Err(Error::NotPrime(4)));
        assert!(FieldSpec::new(2, 9).is_err());
        assert_eq!(FieldSpec::with_modulus(2, vec![1, 0, 1]), Err(Error::ReducibleModulus(2)));
        assert!(FieldSpec::from_order(1).is_err());
        assert!(FieldSpec::from_order(6).is_err());
    }

    #[test]
    fn custom_modulus_gives_field() {
        // x^2 + 2x + 2 over GF(3)
        let f = Gf::new(FieldSpec::with_modulus(3, vec![2, 2, 1]).unwrap());
        for x in f.nonzero_elements() {
            assert_eq!(f.mul(x, f.inv(x).unwrap()), f.one());
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = gf(q);
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_is_involution() {
        for q in prime_powers_up_to(256) {
            let f = gf(q);
            for x in f.nonzero_elements() {
                let y = f.inv(x).unwrap();
                assert_eq!(f.mul(x, y), f.one());
                assert_eq!(f.inv(y).unwrap(), x);
            }
        }
    }

    #[test]
    fn checked_rejects_foreign_elements() {
        let f = gf(3);
        let big = gf(7).element(5).unwrap();
        assert_eq!(f.checked(ArithOp::Add, big, f.one()), Err(Error::FieldMismatch));
        assert_eq!(f.checked(ArithOp::Mul, f.one(), f.one()), Ok(f.one()));
    }
}
