//! Quadratic spaces over GF(q), reflections, the quasideterminant and the
//! stabiliser element built from an isometry of a smaller space.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, Gf};
use crate::linalg::Matrix;
use crate::octonion::{Octonion, Octonions};

/// A quadratic space on `F^dim`: `gram` is the polar form, `qdiag[i] = Q(b_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadSpace {
    f: Gf,
    gram: Matrix,
    qdiag: Vec<FieldElement>,
}

impl QuadSpace {
    /// Validates symmetry, `gram[i][i] = 2 qdiag[i]` and non-singularity.
    pub fn new(f: Gf, gram: Matrix, qdiag: Vec<FieldElement>) -> Result<Self> {
        let n = gram.rows();
        if gram.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, got: gram.cols() });
        }
        if qdiag.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: qdiag.len() });
        }
        let symmetric = (0..n).all(|i| (0..n).all(|j| gram.get(i, j) == gram.get(j, i)));
        let diagonal = (0..n).all(|i| gram.get(i, i) == f.add(qdiag[i], qdiag[i]));
        if !symmetric || !diagonal {
            return Err(Error::InvalidArgument("gram matrix is not the polar form of the given quadratic form"));
        }
        if gram.rank(&f) < n {
            return Err(Error::SingularForm);
        }
        Ok(QuadSpace { f, gram, qdiag })
    }

    /// The octonion norm form in the fixed basis.
    pub fn octonions(o: &Octonions) -> Self {
        let f = o.field().clone();
        let mut gram = Matrix::zeros(8, 8);
        for i in 0..8 {
            for j in 0..8 {
                gram.set(i, j, o.polar(&Octonion::basis(i), &Octonion::basis(j)));
            }
        }
        let qdiag = (0..8).map(|i| o.norm(&Octonion::basis(i))).collect();
        QuadSpace::new(f, gram, qdiag).expect("the norm form is non-singular")
    }

    /// `dim/2` hyperbolic planes with basis order `(v1, ..., vm, w_m, ..., w_1)`.
    pub fn hyperbolic(f: Gf, dim: usize) -> Result<Self> {
        if !dim.is_multiple_of(2) {
            return Err(Error::InvalidArgument("hyperbolic space needs even dimension"));
        }
        let mut gram = Matrix::zeros(dim, dim);
        for i in 0..dim {
            gram.set(i, dim - 1 - i, f.one());
        }
        let qdiag = vec![f.zero(); dim];
        QuadSpace::new(f, gram, qdiag)
    }

    pub fn field(&self) -> &Gf {
        &self.f
    }

    pub fn dim(&self) -> usize {
        self.qdiag.len()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn qdiag(&self) -> &[FieldElement] {
        &self.qdiag
    }

    pub fn polar(&self, x: &[FieldElement], y: &[FieldElement]) -> FieldElement {
        let gy = self.gram.transpose().apply(&self.f, y);
        x.iter().zip(&gy).fold(self.f.zero(), |acc, (&a, &b)| self.f.add(acc, self.f.mul(a, b)))
    }

    pub fn q(&self, x: &[FieldElement]) -> FieldElement {
        let f = &self.f;
        let mut acc = f.zero();
        for i in 0..self.dim() {
            if x[i].is_zero() {
                continue;
            }
            acc = f.add(acc, f.mul(f.mul(x[i], x[i]), self.qdiag[i]));
            for j in i + 1..self.dim() {
                acc = f.add(acc, f.mul(f.mul(x[i], x[j]), self.gram.get(i, j)));
            }
        }
        acc
    }

    /// Whether `m` (row convention) preserves `Q` on basis vectors and the
    /// polar form on basis pairs, which together determine `Q` everywhere.
    pub fn is_isometry(&self, m: &Matrix) -> bool {
        let n = self.dim();
        if m.rows() != n || m.cols() != n {
            return false;
        }
        (0..n).all(|i| self.q(m.row(i)) == self.qdiag[i])
            && (0..n).all(|i| (i + 1..n).all(|j| self.polar(m.row(i), m.row(j)) == self.gram.get(i, j)))
    }
}

/// An isometry of a [`QuadSpace`], acting on row vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthoElement {
    matrix: Matrix,
}

impl OrthoElement {
    pub fn new(space: &QuadSpace, matrix: Matrix) -> Result<Self> {
        if space.is_isometry(&matrix) && matrix.rank(space.field()) == space.dim() {
            Ok(OrthoElement { matrix })
        } else {
            Err(Error::NotIsometry)
        }
    }

    pub fn identity(space: &QuadSpace) -> Self {
        OrthoElement { matrix: Matrix::identity(space.dim()) }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, space: &QuadSpace, x: &[FieldElement]) -> Vec<FieldElement> {
        self.matrix.apply(space.field(), x)
    }

    /// `self` followed by `other`.
    pub fn then(&self, space: &QuadSpace, other: &OrthoElement) -> OrthoElement {
        OrthoElement { matrix: self.matrix.mul(space.field(), &other.matrix).expect("same dimension") }
    }
}

/// `x -> x - f(x,v)/Q(v) v`.
pub fn reflection(space: &QuadSpace, v: &[FieldElement]) -> Result<OrthoElement> {
    let f = space.field();
    let qv = space.q(v);
    let inv = f.inv(qv).map_err(|_| Error::InvalidArgument("reflection vector must be anisotropic"))?;
    let n = space.dim();
    let mut m = Matrix::identity(n);
    for i in 0..n {
        let mut e = vec![f.zero(); n];
        e[i] = f.one();
        let s = f.mul(space.polar(&e, v), inv);
        for (j, &vj) in v.iter().enumerate() {
            m.set(i, j, f.sub(m.get(i, j), f.mul(s, vj)));
        }
    }
    Ok(OrthoElement { matrix: m })
}

/// `dim Im(I - g) mod 2`, defined in characteristic 2.
pub fn qdet(space: &QuadSpace, g: &OrthoElement) -> Result<u8> {
    let f = space.field();
    if f.characteristic() != 2 {
        return Err(Error::WrongCharacteristic { expected: 2 });
    }
    let rank = Matrix::identity(space.dim()).sub(f, g.matrix()).rank(f);
    Ok((rank % 2) as u8)
}

/// `W + <v1, v2>` with `(v1, v2)` a hyperbolic pair orthogonal to `W`, in
/// basis order `(v1, w_1..w_n, v2)`.
pub fn extend_hyperbolic(w: &QuadSpace) -> QuadSpace {
    let f = w.field().clone();
    let n = w.dim();
    let mut gram = Matrix::zeros(n + 2, n + 2);
    gram.set(0, n + 1, f.one());
    gram.set(n + 1, 0, f.one());
    for i in 0..n {
        for j in 0..n {
            gram.set(i + 1, j + 1, w.gram().get(i, j));
        }
    }
    let mut qdiag = vec![f.zero()];
    qdiag.extend_from_slice(w.qdiag());
    qdiag.push(f.zero());
    QuadSpace::new(f, gram, qdiag).expect("orthogonal sum of non-singular spaces")
}

/// The element of the stabiliser of `v1` acting on `W` by `a` and sending
/// `v2` to `(-Q_W(u1) | u1 | 1)`; acts on `extend_hyperbolic(w)`.
pub fn hat_element(w: &QuadSpace, a: &OrthoElement, u1: &[FieldElement]) -> Result<OrthoElement> {
    let f = w.field();
    let n = w.dim();
    if u1.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: u1.len() });
    }
    if !w.is_isometry(a.matrix()) {
        return Err(Error::NotIsometry);
    }
    // (A B u1^T)_i = f_W(A_i, u1)
    let mut m = Matrix::zeros(n + 2, n + 2);
    m.set(0, 0, f.one());
    for i in 0..n {
        let row = a.matrix().row(i);
        m.set(i + 1, 0, f.neg(w.polar(row, u1)));
        for (j, &x) in row.iter().enumerate() {
            m.set(i + 1, j + 1, x);
        }
    }
    m.set(n + 1, 0, f.neg(w.q(u1)));
    for (j, &x) in u1.iter().enumerate() {
        m.set(n + 1, j + 1, x);
    }
    m.set(n + 1, n + 1, f.one());
    Ok(OrthoElement { matrix: m })
}
