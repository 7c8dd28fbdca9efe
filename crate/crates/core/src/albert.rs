//! The 27-dimensional Albert space `J` of vectors `(a,b,c | A,B,C)`, its cubic
//! determinant, the mixed form and the white/grey/black colouring.
//!
//! Flat coordinate order is `(a, b, c, A[0..8], B[0..8], C[0..8])`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, Gf};
use crate::linalg::Matrix;
use crate::octonion::{Octonion, Octonions};

pub const DIM: usize = 27;

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlbertVector {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub oct_a: Octonion,
    pub oct_b: Octonion,
    pub oct_c: Octonion,
}

impl AlbertVector {
    pub const ZERO: AlbertVector = AlbertVector {
        a: FieldElement::ZERO,
        b: FieldElement::ZERO,
        c: FieldElement::ZERO,
        oct_a: Octonion::ZERO,
        oct_b: Octonion::ZERO,
        oct_c: Octonion::ZERO,
    };

    pub fn new(
        a: FieldElement,
        b: FieldElement,
        c: FieldElement,
        oct_a: Octonion,
        oct_b: Octonion,
        oct_c: Octonion,
    ) -> Self {
        AlbertVector { a, b, c, oct_a, oct_b, oct_c }
    }

    /// `(a,b,c | 0,0,0)`.
    pub fn diagonal(a: FieldElement, b: FieldElement, c: FieldElement) -> Self {
        AlbertVector { a, b, c, ..Self::ZERO }
    }

    /// The `i`-th standard basis vector.
    pub fn basis(i: usize) -> Self {
        let mut coords = [FieldElement::ZERO; DIM];
        coords[i] = FieldElement::ONE;
        Self::from_coords(&coords)
    }

    pub fn coords(&self) -> [FieldElement; DIM] {
        let mut out = [FieldElement::ZERO; DIM];
        out[0] = self.a;
        out[1] = self.b;
        out[2] = self.c;
        out[3..11].copy_from_slice(&self.oct_a.0);
        out[11..19].copy_from_slice(&self.oct_b.0);
        out[19..27].copy_from_slice(&self.oct_c.0);
        out
    }

    pub fn from_coords(c: &[FieldElement]) -> Self {
        assert_eq!(c.len(), DIM, "an Albert vector has 27 coordinates");
        let oct = |off: usize| Octonion(core::array::from_fn(|i| c[off + i]));
        AlbertVector { a: c[0], b: c[1], c: c[2], oct_a: oct(3), oct_b: oct(11), oct_c: oct(19) }
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|x| x.is_zero())
    }

    pub fn octonions(&self) -> [Octonion; 3] {
        [self.oct_a, self.oct_b, self.oct_c]
    }
}

impl fmt::Display for AlbertVector {
    /// Index form: field elements are shown by their table index.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{}|", self.a.index(), self.b.index(), self.c.index())?;
        for (k, o) in self.octonions().iter().enumerate() {
            if k > 0 {
                f.write_str(";")?;
            }
            if o.is_zero() {
                f.write_str("0")?;
            } else {
                f.write_str("[")?;
                for (i, x) in o.0.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{}", x.index())?;
                }
                f.write_str("]")?;
            }
        }
        f.write_str(")")
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    White,
    Grey,
    Black,
}

impl Color {
    pub fn name(self) -> &'static str {
        match self {
            Color::White => "white",
            Color::Grey => "grey",
            Color::Black => "black",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A coordinate subspace of `J`, given by a 27-bit support mask.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    mask: u32,
}

const MASK_A: u32 = 1;
const MASK_B: u32 = 1 << 1;
const MASK_C: u32 = 1 << 2;
const MASK_OA: u32 = 0xff << 3;
const MASK_OB: u32 = 0xff << 11;
const MASK_OC: u32 = 0xff << 19;

impl Subspace {
    pub const fn from_mask(mask: u32) -> Self {
        Subspace { mask: mask & ((1 << DIM) - 1) }
    }

    /// `(a,b,0 | 0,0,C)`.
    pub const fn j10_abc() -> Self {
        Self::from_mask(MASK_A | MASK_B | MASK_OC)
    }

    /// `(0,0,c | A,B,0)`.
    pub const fn j17_cab() -> Self {
        Self::from_mask(MASK_C | MASK_OA | MASK_OB)
    }

    /// `(a,b,0 | A,B,C)`.
    pub const fn j26_ababc() -> Self {
        Self::from_mask(MASK_A | MASK_B | MASK_OA | MASK_OB | MASK_OC)
    }

    pub const fn j8_a() -> Self {
        Self::from_mask(MASK_OA)
    }

    pub const fn j8_b() -> Self {
        Self::from_mask(MASK_OB)
    }

    pub const fn j8_c() -> Self {
        Self::from_mask(MASK_OC)
    }

    pub const fn whole() -> Self {
        Self::from_mask(u32::MAX)
    }

    pub fn mask(self) -> u32 {
        self.mask
    }

    pub fn dim(self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn contains(self, x: &AlbertVector) -> bool {
        x.coords().iter().enumerate().all(|(i, c)| c.is_zero() || self.mask >> i & 1 == 1)
    }

    pub fn basis(self) -> Vec<AlbertVector> {
        (0..DIM).filter(|i| self.mask >> i & 1 == 1).map(AlbertVector::basis).collect()
    }
}

/// Arithmetic on `J` over a fixed field.
#[derive(Clone, Debug)]
pub struct Albert {
    o: Octonions,
}

impl Albert {
    pub fn new(f: Gf) -> Self {
        Albert { o: Octonions::new(f) }
    }

    pub fn field(&self) -> &Gf {
        self.o.field()
    }

    pub fn octonions(&self) -> &Octonions {
        &self.o
    }

    pub fn add(&self, x: &AlbertVector, y: &AlbertVector) -> AlbertVector {
        let f = self.field();
        AlbertVector {
            a: f.add(x.a, y.a),
            b: f.add(x.b, y.b),
            c: f.add(x.c, y.c),
            oct_a: self.o.add(&x.oct_a, &y.oct_a),
            oct_b: self.o.add(&x.oct_b, &y.oct_b),
            oct_c: self.o.add(&x.oct_c, &y.oct_c),
        }
    }

    pub fn sub(&self, x: &AlbertVector, y: &AlbertVector) -> AlbertVector {
        self.add(x, &self.neg(y))
    }

    pub fn neg(&self, x: &AlbertVector) -> AlbertVector {
        self.scale(self.field().neg(self.field().one()), x)
    }

    pub fn scale(&self, s: FieldElement, x: &AlbertVector) -> AlbertVector {
        let f = self.field();
        AlbertVector {
            a: f.mul(s, x.a),
            b: f.mul(s, x.b),
            c: f.mul(s, x.c),
            oct_a: self.o.scale(s, &x.oct_a),
            oct_b: self.o.scale(s, &x.oct_b),
            oct_c: self.o.scale(s, &x.oct_c),
        }
    }

    /// `abc - aN(A) - bN(B) - cN(C) + T((AB)C)`.
    pub fn delta(&self, x: &AlbertVector) -> FieldElement {
        let (f, o) = (self.field(), &self.o);
        let mut d = f.mul(f.mul(x.a, x.b), x.c);
        d = f.sub(d, f.mul(x.a, o.norm(&x.oct_a)));
        d = f.sub(d, f.mul(x.b, o.norm(&x.oct_b)));
        d = f.sub(d, f.mul(x.c, o.norm(&x.oct_c)));
        f.add(d, o.trace_of_product(&o.mul(&x.oct_a, &x.oct_b), &x.oct_c))
    }

    /// The coefficient of `t` in `delta(X + tY)`; linear in `Y`, quadratic in `X`.
    pub fn mixed_form(&self, y: &AlbertVector, x: &AlbertVector) -> FieldElement {
        let (f, o) = (self.field(), &self.o);
        let (ya, yb, yc) = (&y.oct_a, &y.oct_b, &y.oct_c);
        let (xa, xb, xc) = (&x.oct_a, &x.oct_b, &x.oct_c);
        let mut m = f.mul(f.mul(x.b, x.c), y.a);
        m = f.add(m, f.mul(f.mul(x.a, x.c), y.b));
        m = f.add(m, f.mul(f.mul(x.a, x.b), y.c));
        m = f.sub(m, f.mul(y.a, o.norm(xa)));
        m = f.sub(m, f.mul(y.b, o.norm(xb)));
        m = f.sub(m, f.mul(y.c, o.norm(xc)));
        // D conj(A) + A conj(D) is the scalar <D, A>
        m = f.sub(m, f.mul(x.a, o.polar(ya, xa)));
        m = f.sub(m, f.mul(x.b, o.polar(yb, xb)));
        m = f.sub(m, f.mul(x.c, o.polar(yc, xc)));
        let t = o.add(&o.add(&o.mul(&o.mul(ya, xb), xc), &o.mul(&o.mul(yb, xc), xa)), &o.mul(&o.mul(yc, xa), xb));
        f.add(m, o.trace(&t))
    }

    /// Whether `Y -> M(Y, X)` vanishes on every standard basis vector.
    pub fn is_white_by_definition(&self, x: &AlbertVector) -> bool {
        (0..DIM).all(|i| self.mixed_form(&AlbertVector::basis(i), x).is_zero())
    }

    /// Colour by the defining functional test; the zero vector has none.
    pub fn classify(&self, x: &AlbertVector) -> Result<Color> {
        if x.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(if self.is_white_by_definition(x) {
            Color::White
        } else if self.delta(x).is_zero() {
            Color::Grey
        } else {
            Color::Black
        })
    }

    /// Colour using the six whiteness equations instead of 27 functionals.
    pub fn classify_fast(&self, x: &AlbertVector) -> Result<Color> {
        Ok(if self.whiteness_conditions(x)? {
            Color::White
        } else if self.delta(x).is_zero() {
            Color::Grey
        } else {
            Color::Black
        })
    }

    /// `N(A)=bc, N(B)=ca, N(C)=ab, AB=c conj(C), BC=a conj(A), CA=b conj(B)`.
    pub fn whiteness_conditions(&self, x: &AlbertVector) -> Result<bool> {
        if x.is_zero() {
            return Err(Error::ZeroVector);
        }
        let (f, o) = (self.field(), &self.o);
        let (a, b, c) = (x.a, x.b, x.c);
        let (xa, xb, xc) = (&x.oct_a, &x.oct_b, &x.oct_c);
        Ok(o.norm(xa) == f.mul(b, c)
            && o.norm(xb) == f.mul(c, a)
            && o.norm(xc) == f.mul(a, b)
            && o.mul(xa, xb) == o.scale(c, &o.conj(xc))
            && o.mul(xb, xc) == o.scale(a, &o.conj(xa))
            && o.mul(xc, xa) == o.scale(b, &o.conj(xb)))
    }

    /// Basis of the radical of `X -> M(W, X)`.
    pub fn radical_17(&self, w: &AlbertVector) -> Result<Vec<AlbertVector>> {
        if w.is_zero() {
            return Err(Error::ZeroVector);
        }
        if !self.whiteness_conditions(w)? {
            return Err(Error::NotWhite);
        }
        let basis = quadratic_radical(self.field(), DIM, |x| self.mixed_form(w, &AlbertVector::from_coords(x)));
        Ok(basis.iter().map(|v| AlbertVector::from_coords(v)).collect())
    }

    /// Over GF(2), basis of the radical of `X -> delta(X + W) - delta(X)`.
    pub fn shift_radical_f2(&self, w: &AlbertVector) -> Result<Vec<AlbertVector>> {
        if self.field().order() != 2 {
            return Err(Error::InvalidArgument("the shifted-determinant radical is defined over GF(2) only"));
        }
        let dw = |x: &[FieldElement]| {
            let x = AlbertVector::from_coords(x);
            self.field().sub(self.delta(&self.add(&x, w)), self.delta(&x))
        };
        let basis = quadratic_radical(self.field(), DIM, dw);
        Ok(basis.iter().map(|v| AlbertVector::from_coords(v)).collect())
    }

    /// `ab - N(C)` on `J_10^{abC}`.
    pub fn q10(&self, x: &AlbertVector) -> Result<FieldElement> {
        if !Subspace::j10_abc().contains(x) {
            return Err(Error::OutsideSubspace);
        }
        let f = self.field();
        Ok(f.sub(f.mul(x.a, x.b), self.o.norm(&x.oct_c)))
    }

    pub fn q8(&self, c: &Octonion) -> FieldElement {
        self.o.norm(c)
    }

    /// Evaluates the four-term determinant combination for `M(X, Y)` and
    /// compares it with the mixed form.
    pub fn polarization_check(&self, x: &AlbertVector, y: &AlbertVector, alpha: FieldElement) -> Result<bool> {
        let f = self.field();
        if f.order() == 2 {
            return Err(Error::InvalidArgument("polarization needs at least three field elements"));
        }
        let one = f.one();
        if alpha.is_zero() || alpha == one {
            return Err(Error::InvalidParameter("alpha must differ from 0 and 1"));
        }
        let am1 = f.sub(alpha, one);
        let inv = |v| f.inv(v).expect("non-zero by the alpha check");
        let t1 = f.mul(self.delta(&self.add(x, &self.scale(alpha, y))), inv(f.mul(alpha, am1)));
        let t2 = f.mul(self.delta(&self.add(x, y)), inv(am1));
        let t3 = f.mul(self.delta(x), inv(alpha));
        let t4 = f.mul(f.add(alpha, one), self.delta(y));
        let lhs = f.sub(f.add(f.sub(t1, t2), t3), t4);
        Ok(lhs == self.mixed_form(x, y))
    }
}

/// Radical `{x : Q(x) = 0, Q(x+y) - Q(x) - Q(y) = 0 for all y}` of a function
/// `Q` on `F^dim` that is quadratic up to a GF(2)-linear term, in RREF.
///
/// On the kernel of the polar form `Q` is additive with `Q(tx) = t^2 Q(x)`, so
/// in characteristic 2 `sqrt(Q)` is linear there and the radical is its kernel.
pub fn quadratic_radical(f: &Gf, dim: usize, q: impl Fn(&[FieldElement]) -> FieldElement) -> Vec<Vec<FieldElement>> {
    let unit = |i: usize| {
        let mut v = vec![FieldElement::ZERO; dim];
        v[i] = f.one();
        v
    };
    let diag: Vec<FieldElement> = (0..dim).map(|i| q(&unit(i))).collect();
    let mut gram = Matrix::zeros(dim, dim);
    for i in 0..dim {
        for j in i + 1..dim {
            let mut v = unit(i);
            v[j] = f.one();
            let b = f.sub(f.sub(q(&v), diag[i]), diag[j]);
            gram.set(i, j, b);
            gram.set(j, i, b);
        }
        gram.set(i, i, f.add(diag[i], diag[i]));
    }
    let kernel = gram.right_kernel(f);
    if f.characteristic() != 2 || kernel.is_empty() {
        return kernel;
    }
    let roots: Vec<FieldElement> = kernel
        .iter()
        .map(|k| f.sqrt(q(k)).expect("every element of a field of characteristic 2 is a square"))
        .collect();
    let functional = Matrix::from_rows(&[roots]).expect("single row");
    let coeffs = functional.right_kernel(f);
    let vectors = coeffs
        .iter()
        .map(|c| {
            let mut v = vec![FieldElement::ZERO; dim];
            for (ci, k) in c.iter().zip(&kernel) {
                for (vj, kj) in v.iter_mut().zip(k) {
                    *vj = f.add(*vj, f.mul(*ci, *kj));
                }
            }
            v
        })
        .collect();
    crate::linalg::canonical_basis(f, vectors)
}
