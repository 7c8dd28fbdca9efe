//! The split octonion algebra over GF(q) in the basis
//! `e_{-1}, e_{wb}, e_w, e_0, e_{-0}, e_{-w}, e_{-wb}, e_1`
//! (`w` = omega, `wb` = omega bar).

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, Gf};
use crate::linalg::Matrix;

pub const E_M1: usize = 0;
pub const E_WB: usize = 1;
pub const E_W: usize = 2;
pub const E_0: usize = 3;
pub const E_M0: usize = 4;
pub const E_MW: usize = 5;
pub const E_MWB: usize = 6;
pub const E_1: usize = 7;

/// Short names of the basis vectors, in coordinate order.
pub const BASIS_NAMES: [&str; 8] = ["e-1", "ewb", "ew", "e0", "e-0", "e-w", "e-wb", "e1"];

/// `MUL_TABLE[i][j] = s * (k + 1)` encodes `e_i e_j = s e_k`; 0 is the zero product.
#[rustfmt::skip]
pub const MUL_TABLE: [[i8; 8]; 8] = [
    //  e-1 ewb  ew  e0 e-0 e-w e-wb  e1
    [   0,  0,  0,  0,  1,  2, -3, -4], // e-1
    [   0,  0, -1,  2,  0,  0, -5,  6], // ewb
    [   0,  1,  0,  3,  0, -5,  0, -7], // ew
    [   1,  0,  0,  4,  0,  6,  7,  0], // e0
    [   0,  2,  3,  0,  5,  0,  0,  8], // e-0
    [  -2,  0, -4,  0,  6,  0,  8,  0], // e-w
    [   3, -4,  0,  0,  7, -8,  0,  0], // e-wb
    [  -5, -6,  7,  8,  0,  0,  0,  0], // e1
];

/// Index permutation negating every subscript (including 0).
pub const NEGATE_SUBSCRIPTS: [usize; 8] = [E_1, E_MWB, E_MW, E_M0, E_0, E_W, E_WB, E_M1];
/// Index permutation multiplying every subscript by omega: 1 -> w -> wb -> 1.
pub const OMEGA_SUBSCRIPTS: [usize; 8] = [E_MW, E_1, E_WB, E_0, E_M0, E_MWB, E_M1, E_W];

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Octonion(pub [FieldElement; 8]);

impl Octonion {
    pub const ZERO: Octonion = Octonion([FieldElement::ZERO; 8]);

    pub fn basis(i: usize) -> Octonion {
        let mut c = [FieldElement::ZERO; 8];
        c[i] = FieldElement::ONE;
        Octonion(c)
    }

    pub fn one() -> Octonion {
        let mut c = [FieldElement::ZERO; 8];
        c[E_0] = FieldElement::ONE;
        c[E_M0] = FieldElement::ONE;
        Octonion(c)
    }

    pub fn coords(&self) -> &[FieldElement; 8] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }
}

/// Operations of the split octonion algebra over a fixed field.
#[derive(Clone, Debug)]
pub struct Octonions {
    f: Gf,
}

impl Octonions {
    pub fn new(f: Gf) -> Self {
        Octonions { f }
    }

    pub fn field(&self) -> &Gf {
        &self.f
    }

    /// `lambda * 1_O`.
    pub fn scalar(&self, lambda: FieldElement) -> Octonion {
        let mut c = [FieldElement::ZERO; 8];
        c[E_0] = lambda;
        c[E_M0] = lambda;
        Octonion(c)
    }

    pub fn add(&self, x: &Octonion, y: &Octonion) -> Octonion {
        Octonion(core::array::from_fn(|i| self.f.add(x.0[i], y.0[i])))
    }

    pub fn sub(&self, x: &Octonion, y: &Octonion) -> Octonion {
        Octonion(core::array::from_fn(|i| self.f.sub(x.0[i], y.0[i])))
    }

    pub fn neg(&self, x: &Octonion) -> Octonion {
        Octonion(core::array::from_fn(|i| self.f.neg(x.0[i])))
    }

    pub fn scale(&self, s: FieldElement, x: &Octonion) -> Octonion {
        Octonion(core::array::from_fn(|i| self.f.mul(s, x.0[i])))
    }

    pub fn mul(&self, x: &Octonion, y: &Octonion) -> Octonion {
        let f = &self.f;
        let mut out = [FieldElement::ZERO; 8];
        for (i, &xi) in x.0.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, &yj) in y.0.iter().enumerate() {
                let e = MUL_TABLE[i][j];
                if e == 0 || yj.is_zero() {
                    continue;
                }
                let k = (e.unsigned_abs() - 1) as usize;
                let t = f.mul(xi, yj);
                out[k] = if e > 0 { f.add(out[k], t) } else { f.sub(out[k], t) };
            }
        }
        Octonion(out)
    }

    pub fn conj(&self, x: &Octonion) -> Octonion {
        let f = &self.f;
        let mut out = [FieldElement::ZERO; 8];
        for (i, o) in out.iter_mut().enumerate() {
            *o = match i {
                E_0 => x.0[E_M0],
                E_M0 => x.0[E_0],
                _ => f.neg(x.0[i]),
            };
        }
        Octonion(out)
    }

    pub fn norm(&self, x: &Octonion) -> FieldElement {
        let f = &self.f;
        let c = &x.0;
        let terms = [(E_M1, E_1), (E_WB, E_MWB), (E_W, E_MW), (E_0, E_M0)];
        terms.iter().fold(f.zero(), |acc, &(i, j)| f.add(acc, f.mul(c[i], c[j])))
    }

    pub fn trace(&self, x: &Octonion) -> FieldElement {
        self.f.add(x.0[E_0], x.0[E_M0])
    }

    /// Polar form `N(x+y) - N(x) - N(y)`.
    pub fn polar(&self, x: &Octonion, y: &Octonion) -> FieldElement {
        let f = &self.f;
        let (a, b) = (&x.0, &y.0);
        let terms = [(E_M1, E_1), (E_WB, E_MWB), (E_W, E_MW), (E_0, E_M0)];
        terms.iter().fold(f.zero(), |acc, &(i, j)| f.add(acc, f.add(f.mul(a[i], b[j]), f.mul(a[j], b[i]))))
    }

    /// `T(x y)` without forming the full product.
    pub fn trace_of_product(&self, x: &Octonion, y: &Octonion) -> FieldElement {
        // T(xy) = <x, conj(y)>
        self.polar(x, &self.conj(y))
    }

    pub fn inverse(&self, x: &Octonion) -> Result<Octonion> {
        let n = self.norm(x);
        let inv = self.f.inv(n).map_err(|_| Error::NotInvertible)?;
        Ok(self.scale(inv, &self.conj(x)))
    }

    /// The field element `mu` if `x = mu * 1_O`.
    pub fn as_scalar(&self, x: &Octonion) -> Result<FieldElement> {
        let mu = x.0[E_0];
        let scalar = x.0[E_M0] == mu && x.0.iter().enumerate().all(|(i, c)| i == E_0 || i == E_M0 || c.is_zero());
        if scalar {
            Ok(mu)
        } else {
            Err(Error::NotScalar)
        }
    }

    /// Matrix of `y -> x y` acting on row vectors.
    pub fn left_mul_matrix(&self, x: &Octonion) -> Matrix {
        self.matrix_of(|e| self.mul(x, e))
    }

    /// Matrix of `y -> y x` acting on row vectors.
    pub fn right_mul_matrix(&self, x: &Octonion) -> Matrix {
        self.matrix_of(|e| self.mul(e, x))
    }

    fn matrix_of(&self, map: impl Fn(&Octonion) -> Octonion) -> Matrix {
        let mut m = Matrix::zeros(8, 8);
        for i in 0..8 {
            m.row_mut(i).copy_from_slice(&map(&Octonion::basis(i)).0);
        }
        m
    }

    /// Bases (RREF) of `{y : conj(x) y = 0}` and `{y : y conj(x) = 0}`.
    pub fn annihilators(&self, x: &Octonion) -> Result<(Vec<Octonion>, Vec<Octonion>)> {
        if x.is_zero() || !self.norm(x).is_zero() {
            return Err(Error::NotIsotropic);
        }
        let xb = self.conj(x);
        let to_oct = |v: Vec<FieldElement>| Octonion(core::array::from_fn(|i| v[i]));
        let left = self.left_mul_matrix(&xb).left_kernel(&self.f).into_iter().map(to_oct).collect();
        let right = self.right_mul_matrix(&xb).left_kernel(&self.f).into_iter().map(to_oct).collect();
        Ok((left, right))
    }

    /// Whether `(x y) z = x (y z)` for every basis octonion `z`, which by
    /// linearity covers every `z`.
    pub fn is_sociable_pair(&self, x: &Octonion, y: &Octonion) -> bool {
        let xy = self.mul(x, y);
        (0..8).all(|i| {
            let z = Octonion::basis(i);
            self.mul(&xy, &z) == self.mul(x, &self.mul(y, &z))
        })
    }

    /// Dimension of `{c : c e_i = e_i c for all i}`.
    pub fn centre_dimension(&self) -> usize {
        let mut rows = Vec::new();
        for i in 0..8 {
            let e = Octonion::basis(i);
            let m = self.left_mul_matrix(&e).sub(&self.f, &self.right_mul_matrix(&e));
            // c commutes with e iff c * (R_e - L_e) = 0 with row-vector maps
            for r in 0..8 {
                rows.push(m.row(r).to_vec());
            }
        }
        // stack the 8 conditions side by side: c * [M_0 | M_1 | ...] = 0
        let mut big = Matrix::zeros(8, 64);
        for blk in 0..8 {
            for r in 0..8 {
                for (c, &x) in rows[blk * 8 + r].iter().enumerate() {
                    big.set(r, blk * 8 + c, x);
                }
            }
        }
        big.left_kernel(&self.f).len()
    }

    /// A unit `u` with `N(u) = lambda`; exists for every lambda in the split algebra.
    pub fn with_norm(&self, lambda: FieldElement) -> Octonion {
        let mut c = [FieldElement::ZERO; 8];
        c[E_0] = lambda;
        c[E_M0] = FieldElement::ONE;
        Octonion(c)
    }

    /// Every octonion over the field, in lexicographic coordinate order with
    /// the first coordinate fastest.
    pub fn all(&self) -> impl Iterator<Item = Octonion> + '_ {
        let q = self.f.order() as u64;
        (0..q.pow(8)).map(move |mut n| {
            Octonion(core::array::from_fn(|_| {
                let c = (n % q) as u32;
                n /= q;
                self.f.element(c).expect("in range")
            }))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::span_dim;

    fn alg(q: u32) -> Octonions {
        Octonions::new(Gf::from_order(q).unwrap())
    }

    fn e(i: usize) -> Octonion {
        Octonion::basis(i)
    }

    #[test]
    fn table_entries() {
        let o = alg(5);
        assert_eq!(o.mul(&e(E_1), &e(E_W)), e(E_MWB));
        assert_eq!(o.mul(&e(E_W), &e(E_1)), o.neg(&e(E_MWB)));
        assert_eq!(o.mul(&e(E_M1), &e(E_1)), o.neg(&e(E_0)));
        assert_eq!(o.mul(&e(E_M1), &e(E_M0)), e(E_M1));
        assert_eq!(o.mul(&e(E_0), &e(E_0)), e(E_0));
        assert_eq!(o.mul(&e(E_1), &e(E_0)), e(E_1));
        // the table gives e_{-0} e_1 = e_1, consistent with e_0 e_1 = 0 and 1 = e_0 + e_{-0}
        assert_eq!(o.mul(&e(E_M0), &e(E_1)), e(E_1));
    }

    #[test]
    fn table_symmetries() {
        // Both subscript maps are automorphisms of the table.
        for perm in [NEGATE_SUBSCRIPTS, OMEGA_SUBSCRIPTS] {
            for i in 0..8 {
                for j in 0..8 {
                    let src = MUL_TABLE[i][j];
                    let dst = MUL_TABLE[perm[i]][perm[j]];
                    if src == 0 {
                        assert_eq!(dst, 0, "{i} {j}");
                    } else {
                        let k = (src.unsigned_abs() - 1) as usize;
                        assert_eq!(dst.signum(), src.signum(), "{i} {j}");
                        assert_eq!((dst.unsigned_abs() - 1) as usize, perm[k], "{i} {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn table_generated_by_rules() {
        // Closure of the three itemised products under the two subscript maps
        // reproduces every non-zero entry of the table.
        let seeds = [(E_1, E_W, 7i8), (E_W, E_1, -7), (E_1, E_0, 8), (E_M0, E_1, 8), (E_M1, E_1, -4), (E_0, E_0, 4)];
        let mut table = [[0i8; 8]; 8];
        let mut frontier: Vec<(usize, usize, i8)> = seeds.to_vec();
        while let Some((i, j, s)) = frontier.pop() {
            if table[i][j] != 0 {
                assert_eq!(table[i][j], s);
                continue;
            }
            table[i][j] = s;
            for perm in [NEGATE_SUBSCRIPTS, OMEGA_SUBSCRIPTS] {
                let k = (s.unsigned_abs() - 1) as usize;
                let img = (perm[k] as i8 + 1) * s.signum();
                frontier.push((perm[i], perm[j], img));
            }
        }
        // unit rules e_0 x + e_{-0} x = x fill the remaining idempotent entries
        for i in 0..8 {
            for j in 0..8 {
                if table[i][j] != 0 {
                    assert_eq!(table[i][j], MUL_TABLE[i][j], "{i} {j}");
                }
            }
        }
        let o = alg(3);
        for i in 0..8 {
            assert_eq!(o.mul(&Octonion::one(), &e(i)), e(i));
            assert_eq!(o.mul(&e(i), &Octonion::one()), e(i));
        }
    }

    #[test]
    fn conj_norm_trace() {
        let o = alg(5);
        assert_eq!(o.conj(&e(E_0)), e(E_M0));
        assert_eq!(o.conj(&e(E_1)), o.neg(&e(E_1)));
        assert_eq!(o.conj(&Octonion::one()), Octonion::one());
        assert_eq!(o.norm(&e(E_0)), FieldElement::ZERO);
        assert_eq!(o.trace(&e(E_0)), FieldElement::ONE);
        assert_eq!(o.norm(&Octonion::one()), FieldElement::ONE);
        assert_eq!(o.trace(&Octonion::one()).index(), 2);
        assert_eq!(o.norm(&o.add(&e(E_M1), &e(E_1))), FieldElement::ONE);
        assert_eq!(o.polar(&e(E_0), &e(E_M0)), FieldElement::ONE);
        assert_eq!(o.polar(&e(E_1), &e(E_0)), FieldElement::ZERO);
    }

    #[test]
    fn inverses() {
        let o = alg(3);
        assert_eq!(o.inverse(&Octonion::one()).unwrap(), Octonion::one());
        let x = o.sub(&e(E_0), &e(E_M0));
        let xi = o.inverse(&x).unwrap();
        assert_eq!(xi, x);
        assert_eq!(o.mul(&x, &xi), Octonion::one());
        assert_eq!(o.inverse(&e(E_1)), Err(Error::NotInvertible));
    }

    #[test]
    fn as_scalar_accessor() {
        let o = alg(7);
        let s = o.f.from_int(3);
        assert_eq!(o.as_scalar(&o.scalar(s)), Ok(s));
        assert_eq!(o.as_scalar(&e(E_0)), Err(Error::NotScalar));
    }

    #[test]
    fn annihilator_examples() {
        let o = alg(2);
        for x in [e(E_1), e(E_0)] {
            let (l, r) = o.annihilators(&x).unwrap();
            assert_eq!((l.len(), r.len()), (4, 4));
            let xb = o.conj(&x);
            assert!(l.iter().all(|y| o.mul(&xb, y).is_zero()));
            assert!(r.iter().all(|y| o.mul(y, &xb).is_zero()));
        }
        assert_eq!(o.annihilators(&Octonion::one()), Err(Error::NotIsotropic));
        assert_eq!(o.annihilators(&Octonion::ZERO), Err(Error::NotIsotropic));
    }

    #[test]
    fn sociable_pairs() {
        let o = alg(3);
        assert!(o.is_sociable_pair(&Octonion::one(), &Octonion::one()));
        // e_0, e_{-0} span a commutative associative subalgebra containing 1
        assert!(o.is_sociable_pair(&e(E_0), &e(E_M0)));
        assert!(!o.is_sociable_pair(&e(E_1), &e(E_W)));
    }

    #[test]
    fn centre_is_scalars() {
        for q in [2, 3, 4, 5] {
            assert_eq!(alg(q).centre_dimension(), 1, "q={q}");
        }
    }

    #[test]
    fn not_commutative() {
        let o = alg(2);
        // over GF(2) the sign in e_1 e_w = -e_w e_1 disappears, but e_0 e_1 != e_1 e_0
        assert_ne!(o.mul(&e(E_0), &e(E_1)), o.mul(&e(E_1), &e(E_0)));
    }

    #[test]
    fn with_norm_hits_every_value() {
        let o = alg(9);
        for l in o.f.elements() {
            assert_eq!(o.norm(&o.with_norm(l)), l);
        }
    }

    #[test]
    fn left_multiplication_rank() {
        let o = alg(3);
        let rows: Vec<Vec<FieldElement>> = (0..8).map(|i| o.mul(&e(E_1), &e(i)).0.to_vec()).collect();
        assert_eq!(span_dim(&o.f, &rows), 4);
    }
}
