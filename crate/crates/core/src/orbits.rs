//! White-vector counts, group orders, projective normalisation and the
//! reduction of an Albert vector to its canonical orbit representative.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::albert::{Albert, AlbertVector, Color};
use crate::error::{Error, Result};
use crate::gf::{prime_power, FieldElement};
use crate::octonion::Octonion;
use crate::se6::{apply_generator, GeneratorSpec};

fn check_q(q: u32) -> Result<BigUint> {
    match prime_power(q) {
        Some(_) => Ok(BigUint::from(q)),
        None => Err(Error::InvalidArgument("q must be a prime power")),
    }
}

/// `q^n - 1`.
fn qm1(q: &BigUint, n: u32) -> BigUint {
    q.pow(n) - 1u32
}

fn exact_div(n: &BigUint, d: &BigUint) -> BigUint {
    let (quot, rem) = n.div_rem(d);
    assert!(rem == BigUint::ZERO, "division is exact by a polynomial identity");
    quot
}

/// `(q^12 - 1)(q^9 - 1)/(q^4 - 1)`.
pub fn count_white_formula(q: u32) -> Result<BigUint> {
    let q = check_q(q)?;
    Ok(exact_div(&(qm1(&q, 12) * qm1(&q, 9)), &qm1(&q, 4)))
}

/// White vectors in `J_10^{abC}`, in `J_26^{abABC}` minus `J_10^{abC}`, and
/// outside `J_26^{abABC}` (i.e. with `c != 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhiteStrata {
    pub n10: BigUint,
    pub n26_minus_10: BigUint,
    pub outside: BigUint,
    pub total: BigUint,
}

pub fn count_white_stratified(q: u32) -> Result<WhiteStrata> {
    let qb = check_q(q)?;
    let n10 = qm1(&qb, 5) * (qb.pow(4) + 1u32);
    let n26_minus_10 = qb.pow(5) * qm1(&qb, 8) * (qb.pow(3) + 1u32);
    let outside = qb.pow(16) * qm1(&qb, 1);
    let total = &n10 + &n26_minus_10 + &outside;
    Ok(WhiteStrata { n10, n26_minus_10, outside, total })
}

/// `(q^12 - 1)(q^9 - 1)/((q^4 - 1)(q - 1))`.
pub fn count_white_points(q: u32) -> Result<BigUint> {
    let vectors = count_white_formula(q)?;
    Ok(exact_div(&vectors, &qm1(&BigUint::from(q), 1)))
}

/// `q^36 (q^12-1)(q^9-1)(q^8-1)(q^6-1)(q^5-1)(q^2-1)`.
pub fn order_se6(q: u32) -> Result<BigUint> {
    let q = check_q(q)?;
    Ok([12, 9, 8, 6, 5, 2].iter().fold(q.pow(36), |acc, &n| acc * qm1(&q, n)))
}

/// `order_se6(q) / gcd(3, q - 1)`.
pub fn order_e6(q: u32) -> Result<BigUint> {
    let se6 = order_se6(q)?;
    Ok(exact_div(&se6, &BigUint::from(3u32.gcd(&(q - 1)))))
}

/// `q^20 (q^8-1)(q^6-1)(q^5-1)(q^4-1)(q^2-1)`.
pub fn spin10_factor(q: u32) -> Result<BigUint> {
    let q = check_q(q)?;
    Ok([8, 6, 5, 4, 2].iter().fold(q.pow(20), |acc, &n| acc * qm1(&q, n)))
}

/// Whether `order_se6 / (points * q^16 * (q-1))` is exact and equals
/// [`spin10_factor`].
pub fn stabilizer_order_consistency(q: u32) -> Result<bool> {
    let qb = check_q(q)?;
    let denom = count_white_points(q)? * qb.pow(16) * qm1(&qb, 1);
    let (s, rem) = order_se6(q)?.div_rem(&denom);
    Ok(rem == BigUint::ZERO && s == spin10_factor(q)?)
}

/// The white vector scaled so its first non-zero coordinate is 1.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WhitePointId(AlbertVector);

impl WhitePointId {
    pub fn new(j: &Albert, v: &AlbertVector) -> Result<Self> {
        if !j.whiteness_conditions(v)? {
            return Err(Error::NotWhite);
        }
        Ok(Self::normalize_unchecked(j, v))
    }

    /// Projective normalisation without the whiteness check; `v` must be non-zero.
    pub fn normalize_unchecked(j: &Albert, v: &AlbertVector) -> Self {
        let lead = v.coords().into_iter().find(|c| !c.is_zero()).expect("non-zero vector");
        let inv = j.field().inv(lead).expect("non-zero");
        WhitePointId(j.scale(inv, v))
    }

    pub fn representative(&self) -> &AlbertVector {
        &self.0
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum CanonicalKind {
    /// `(0,0,1|0,0,0)`.
    White,
    /// `(0,1,1|0,0,0)`.
    Grey,
    /// `(lambda,1,1|0,0,0)`, `lambda != 0`.
    Black(FieldElement),
}

impl CanonicalKind {
    pub fn color(self) -> Color {
        match self {
            CanonicalKind::White => Color::White,
            CanonicalKind::Grey => Color::Grey,
            CanonicalKind::Black(_) => Color::Black,
        }
    }

    pub fn representative(self) -> AlbertVector {
        let (z, o) = (FieldElement::ZERO, FieldElement::ONE);
        match self {
            CanonicalKind::White => AlbertVector::diagonal(z, z, o),
            CanonicalKind::Grey => AlbertVector::diagonal(z, o, o),
            CanonicalKind::Black(l) => AlbertVector::diagonal(l, o, o),
        }
    }
}

/// A representative together with a word mapping the input onto it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub kind: CanonicalKind,
    pub word: Vec<GeneratorSpec>,
}

impl CanonicalForm {
    pub fn representative(&self) -> AlbertVector {
        self.kind.representative()
    }
}

struct Reducer<'a> {
    j: &'a Albert,
    v: AlbertVector,
    word: Vec<GeneratorSpec>,
}

impl Reducer<'_> {
    fn push(&mut self, g: GeneratorSpec) {
        self.v = apply_generator(self.j, &g, &self.v).expect("reduction emits valid generators");
        self.word.push(g);
    }

    fn rotate_until(&mut self, pred: impl Fn(&AlbertVector) -> bool) {
        for _ in 0..3 {
            if pred(&self.v) {
                return;
            }
            self.push(GeneratorSpec::TAU);
        }
        unreachable!("some rotation satisfies the predicate");
    }

    /// Applies `L_{e_j}` for the first basis `e_j` with `T(C e_j) != 0`;
    /// since `N(e_j) = 0` this sets `a` to `a + T(C e_j)`.
    fn l_with_nonzero_trace(&mut self) {
        let o = self.j.octonions();
        let e = (0..8)
            .map(Octonion::basis)
            .find(|e| !o.trace_of_product(&self.v.oct_c, e).is_zero())
            .expect("the norm form is non-degenerate and C != 0");
        self.push(GeneratorSpec::l(e));
    }

    /// `(a,b,c) -> (a, b/n, cn)`; no-op for `n = 1`.
    fn scale_bc(&mut self, n: FieldElement) {
        if n == FieldElement::ONE {
            return;
        }
        let u = self.j.octonions().with_norm(n);
        self.push(GeneratorSpec::pscale(u));
    }

    /// `(a,b,c) -> (a/n, bn, c)`, via the scaling conjugated by `tau`.
    fn scale_ab(&mut self, n: FieldElement) {
        if n == FieldElement::ONE {
            return;
        }
        self.push(GeneratorSpec::TAU);
        self.scale_bc(n);
        self.push(GeneratorSpec::TAU);
        self.push(GeneratorSpec::TAU);
    }
}

/// Maps `x` to exactly one of the three canonical diagonal vectors.
pub fn reduce_to_canonical(j: &Albert, x: &AlbertVector) -> Result<CanonicalForm> {
    if x.is_zero() {
        return Err(Error::ZeroVector);
    }
    let f = j.field();
    let o = j.octonions();
    let mut r = Reducer { j, v: *x, word: Vec::new() };
    let scalars_zero = |v: &AlbertVector| v.a.is_zero() && v.b.is_zero() && v.c.is_zero();

    if scalars_zero(&r.v) {
        r.rotate_until(|v| !v.oct_c.is_zero());
        r.l_with_nonzero_trace();
    }
    r.rotate_until(|v| !v.c.is_zero());
    let cinv = f.inv(r.v.c).expect("c != 0");
    // M''_x adds cx to B
    if !r.v.oct_b.is_zero() {
        r.push(GeneratorSpec::mpp(o.scale(f.neg(cinv), &r.v.oct_b)));
    }
    // L'_x adds c conj(x) to A
    if !r.v.oct_a.is_zero() {
        r.push(GeneratorSpec::lp(o.scale(f.neg(cinv), &o.conj(&r.v.oct_a))));
    }
    // now (a,b,c|0,0,C); L_x keeps A = B = 0 here
    if r.v.a.is_zero() && !r.v.oct_c.is_zero() {
        r.l_with_nonzero_trace();
    }
    // M_x adds ax to C
    if !r.v.oct_c.is_zero() {
        let ainv = f.inv(r.v.a).expect("a != 0");
        r.push(GeneratorSpec::m(o.scale(f.neg(ainv), &r.v.oct_c)));
    }
    debug_assert!(r.v.octonions().iter().all(Octonion::is_zero));

    let nonzero = [r.v.a, r.v.b, r.v.c].iter().filter(|s| !s.is_zero()).count();
    let kind = match nonzero {
        1 => {
            r.rotate_until(|v| !v.c.is_zero());
            r.scale_bc(f.inv(r.v.c).expect("c != 0"));
            CanonicalKind::White
        }
        2 => {
            r.rotate_until(|v| v.a.is_zero());
            r.scale_bc(f.inv(r.v.c).expect("c != 0"));
            r.scale_ab(f.inv(r.v.b).expect("b != 0"));
            CanonicalKind::Grey
        }
        3 => {
            r.scale_bc(f.inv(r.v.c).expect("c != 0"));
            r.scale_ab(f.inv(r.v.b).expect("b != 0"));
            CanonicalKind::Black(r.v.a)
        }
        _ => unreachable!("the generators are invertible, so the vector stays non-zero"),
    };
    debug_assert_eq!(r.v, kind.representative());
    Ok(CanonicalForm { kind, word: r.word })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{prime_powers_up_to, Gf};
    use crate::octonion::{E_1, E_M1};
    use crate::se6::apply_word;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn white_counts() {
        assert_eq!(count_white_formula(2).unwrap(), big(139503));
        assert_eq!(count_white_formula(3).unwrap(), big(130747526));
        assert!(count_white_formula(1).is_err());
        assert!(count_white_formula(6).is_err());
        let s = count_white_stratified(2).unwrap();
        assert_eq!((s.n10, s.n26_minus_10, s.outside, s.total), (big(527), big(73440), big(65536), big(139503)));
        assert_eq!(count_white_points(2).unwrap(), big(139503));
        assert_eq!(count_white_points(3).unwrap(), big(65373763));
    }

    #[test]
    fn stratified_sum_and_points() {
        for q in prime_powers_up_to(16) {
            let s = count_white_stratified(q).unwrap();
            assert_eq!(s.total, count_white_formula(q).unwrap(), "q={q}");
            assert_eq!(count_white_points(q).unwrap() * big(q as u64 - 1), s.total);
        }
    }

    #[test]
    fn orders() {
        assert_eq!(order_se6(2).unwrap(), order_e6(2).unwrap());
        assert_eq!(order_se6(4).unwrap(), order_e6(4).unwrap() * big(3));
        for q in prime_powers_up_to(16) {
            let (_, rem) = order_se6(q).unwrap().div_rem(&count_white_points(q).unwrap());
            assert_eq!(rem, BigUint::ZERO, "q={q}");
            assert!(stabilizer_order_consistency(q).unwrap(), "q={q}");
        }
    }

    #[test]
    fn white_point_ids() {
        let j = Albert::new(Gf::from_order(5).unwrap());
        let f = j.field();
        let w = AlbertVector::diagonal(f.zero(), f.zero(), f.from_int(3));
        let id = WhitePointId::new(&j, &w).unwrap();
        assert_eq!(*id.representative(), AlbertVector::diagonal(f.zero(), f.zero(), f.one()));
        assert_eq!(WhitePointId::new(&j, &j.scale(f.from_int(2), &w)).unwrap(), id);
        assert!(WhitePointId::new(&j, &AlbertVector::diagonal(f.zero(), f.one(), f.one())).is_err());
    }

    #[test]
    fn reduction_examples() {
        let j = Albert::new(Gf::from_order(3).unwrap());
        let f = j.field();
        let (z, o) = (f.zero(), f.one());
        let white = reduce_to_canonical(&j, &AlbertVector::diagonal(z, z, o)).unwrap();
        assert_eq!(white.kind, CanonicalKind::White);
        assert!(white.word.is_empty());
        let e = AlbertVector { oct_a: Octonion::basis(E_M1), ..AlbertVector::ZERO };
        assert_eq!(reduce_to_canonical(&j, &e).unwrap().kind, CanonicalKind::White);
        assert_eq!(reduce_to_canonical(&j, &AlbertVector::diagonal(o, o, o)).unwrap().kind, CanonicalKind::Black(o));
        assert_eq!(reduce_to_canonical(&j, &AlbertVector::diagonal(z, o, o)).unwrap().kind, CanonicalKind::Grey);
        assert_eq!(reduce_to_canonical(&j, &AlbertVector::ZERO), Err(Error::ZeroVector));
    }

    #[test]
    fn reduction_words_reach_representative() {
        for q in [2, 3, 4, 5] {
            let j = Albert::new(Gf::from_order(q).unwrap());
            let o = j.octonions();
            let f = j.field();
            let inputs = [
                AlbertVector { oct_c: Octonion::basis(E_1), ..AlbertVector::ZERO },
                AlbertVector { oct_b: Octonion::one(), a: f.one(), ..AlbertVector::ZERO },
                AlbertVector {
                    a: f.from_int(2),
                    oct_a: Octonion::basis(E_M1),
                    oct_b: o.with_norm(f.from_int(3)),
                    oct_c: Octonion::basis(E_1),
                    ..AlbertVector::ZERO
                },
            ];
            for x in inputs {
                let cf = reduce_to_canonical(&j, &x).unwrap();
                assert_eq!(apply_word(&j, &cf.word, &x).unwrap(), cf.representative());
                assert_eq!(cf.kind.color(), j.classify(&x).unwrap());
                if let CanonicalKind::Black(l) = cf.kind {
                    assert_eq!(l, j.delta(&x));
                }
            }
        }
    }
}
