//! Generators of `SE6(F)` acting on `J`, their 27x27 matrices and words.
//!
//! Each generator is the map `X -> conj(M)^T X M` for a 3x3 octonion matrix
//! `M`, with `X` laid out as
//!
//! ```text
//!     [ a        C        conj(B) ]
//!     [ conj(C)  b        A       ]
//!     [ B        conj(A)  c       ]
//! ```
//!
//! Closed forms below were expanded from that conjugation once; every family
//! entry is in a sociable subalgebra, so the bracketing is irrelevant.
//! Maps act on row vectors and words apply left to right.

use alloc::vec::Vec;
use core::fmt;

use crate::albert::{Albert, AlbertVector, DIM};
use crate::error::{Error, Result};
use crate::gf::FieldElement;
use crate::linalg::Matrix;
use crate::octonion::{Octonion, Octonions};
use crate::ortho::{reflection, QuadSpace};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorKind {
    M,
    Mp,
    Mpp,
    L,
    Lp,
    Lpp,
    Pu,
    Pup,
    Pupp,
    PScale,
    Delta,
    Tau,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 12] = [
        GeneratorKind::M,
        GeneratorKind::Mp,
        GeneratorKind::Mpp,
        GeneratorKind::L,
        GeneratorKind::Lp,
        GeneratorKind::Lpp,
        GeneratorKind::Pu,
        GeneratorKind::Pup,
        GeneratorKind::Pupp,
        GeneratorKind::PScale,
        GeneratorKind::Delta,
        GeneratorKind::Tau,
    ];

    /// The six unipotent families `M, M', M'', L, L', L''`.
    pub const UNIPOTENT: [GeneratorKind; 6] = [
        GeneratorKind::M,
        GeneratorKind::Mp,
        GeneratorKind::Mpp,
        GeneratorKind::L,
        GeneratorKind::Lp,
        GeneratorKind::Lpp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::M => "M",
            GeneratorKind::Mp => "Mp",
            GeneratorKind::Mpp => "Mpp",
            GeneratorKind::L => "L",
            GeneratorKind::Lp => "Lp",
            GeneratorKind::Lpp => "Lpp",
            GeneratorKind::Pu => "Pu",
            GeneratorKind::Pup => "Pup",
            GeneratorKind::Pupp => "Pupp",
            GeneratorKind::PScale => "Pscale",
            GeneratorKind::Delta => "delta",
            GeneratorKind::Tau => "tau",
        }
    }

    /// Case-insensitive inverse of [`GeneratorKind::name`].
    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name().eq_ignore_ascii_case(s))
    }

    pub fn has_param(self) -> bool {
        !matches!(self, GeneratorKind::Delta | GeneratorKind::Tau)
    }

    pub fn is_unipotent(self) -> bool {
        Self::UNIPOTENT.contains(&self)
    }

    pub fn is_norm_one(self) -> bool {
        matches!(self, GeneratorKind::Pu | GeneratorKind::Pup | GeneratorKind::Pupp)
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A generator kind with its octonion parameter (`None` for `Delta`, `Tau`).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub param: Option<Octonion>,
}

impl GeneratorSpec {
    pub const DELTA: GeneratorSpec = GeneratorSpec { kind: GeneratorKind::Delta, param: None };
    pub const TAU: GeneratorSpec = GeneratorSpec { kind: GeneratorKind::Tau, param: None };

    /// Unvalidated; see [`GeneratorSpec::validate`].
    pub fn new(kind: GeneratorKind, param: Octonion) -> Self {
        GeneratorSpec { kind, param: kind.has_param().then_some(param) }
    }

    pub fn m(x: Octonion) -> Self {
        Self::new(GeneratorKind::M, x)
    }

    pub fn mp(x: Octonion) -> Self {
        Self::new(GeneratorKind::Mp, x)
    }

    pub fn mpp(x: Octonion) -> Self {
        Self::new(GeneratorKind::Mpp, x)
    }

    pub fn l(x: Octonion) -> Self {
        Self::new(GeneratorKind::L, x)
    }

    pub fn lp(x: Octonion) -> Self {
        Self::new(GeneratorKind::Lp, x)
    }

    pub fn lpp(x: Octonion) -> Self {
        Self::new(GeneratorKind::Lpp, x)
    }

    pub fn pu(u: Octonion) -> Self {
        Self::new(GeneratorKind::Pu, u)
    }

    pub fn pup(u: Octonion) -> Self {
        Self::new(GeneratorKind::Pup, u)
    }

    pub fn pupp(u: Octonion) -> Self {
        Self::new(GeneratorKind::Pupp, u)
    }

    pub fn pscale(u: Octonion) -> Self {
        Self::new(GeneratorKind::PScale, u)
    }

    pub fn validate(&self, o: &Octonions) -> Result<()> {
        match (self.kind.has_param(), self.param) {
            (true, None) => return Err(Error::InvalidParameter("generator requires an octonion parameter")),
            (false, Some(_)) => return Err(Error::InvalidParameter("delta and tau take no parameter")),
            _ => {}
        }
        let range_ok = self.param.is_none_or(|p| p.0.iter().all(|c| (c.index() as usize) < o.field().order()));
        if !range_ok {
            return Err(Error::FieldMismatch);
        }
        let n = self.param.map(|p| o.norm(&p));
        if self.kind.is_norm_one() && n != Some(o.field().one()) {
            return Err(Error::InvalidParameter("P-family parameter must have norm 1"));
        }
        if self.kind == GeneratorKind::PScale && n.is_none_or(|n| n.is_zero()) {
            return Err(Error::InvalidParameter("scaling parameter must have non-zero norm"));
        }
        Ok(())
    }

    fn x(&self) -> Octonion {
        self.param.unwrap_or(Octonion::ZERO)
    }
}

/// Closed-form action of a validated generator.
pub fn apply_generator(j: &Albert, g: &GeneratorSpec, v: &AlbertVector) -> Result<AlbertVector> {
    g.validate(j.octonions())?;
    Ok(act(j, g, v))
}

fn act(j: &Albert, g: &GeneratorSpec, v: &AlbertVector) -> AlbertVector {
    let o = j.octonions();
    let f = j.field();
    let x = g.x();
    let xb = o.conj(&x);
    let nx = o.norm(&x);
    let AlbertVector { a, b, c, oct_a: ca, oct_b: cb, oct_c: cc } = *v;
    let add = |p: &Octonion, q: &Octonion| o.add(p, q);
    let mul = |p: &Octonion, q: &Octonion| o.mul(p, q);
    let tr = |p: &Octonion, q: &Octonion| o.trace_of_product(p, q);
    // s + t N(x) + T(p q)
    let shift = |s: FieldElement, t: FieldElement, p: &Octonion, q: &Octonion| f.add(f.add(s, f.mul(t, nx)), tr(p, q));
    match g.kind {
        // (a, b + aN(x) + T(conj(x) C), c | A + conj(x) conj(B), B, C + ax)
        GeneratorKind::M => AlbertVector::new(
            a,
            shift(b, a, &xb, &cc),
            c,
            add(&ca, &mul(&xb, &o.conj(&cb))),
            cb,
            add(&cc, &o.scale(a, &x)),
        ),
        // (a, b, c + bN(x) + T(conj(x) A) | A + bx, B + conj(x) conj(C), C)
        GeneratorKind::Mp => AlbertVector::new(
            a,
            b,
            shift(c, b, &xb, &ca),
            add(&ca, &o.scale(b, &x)),
            add(&cb, &mul(&xb, &o.conj(&cc))),
            cc,
        ),
        // (a + cN(x) + T(conj(x) B), b, c | A, B + cx, C + conj(x) conj(A))
        GeneratorKind::Mpp => AlbertVector::new(
            shift(a, c, &xb, &cb),
            b,
            c,
            ca,
            add(&cb, &o.scale(c, &x)),
            add(&cc, &mul(&xb, &o.conj(&ca))),
        ),
        // (a + bN(x) + T(Cx), b, c | A, B + conj(A) x, C + b conj(x))
        GeneratorKind::L => AlbertVector::new(
            shift(a, b, &cc, &x),
            b,
            c,
            ca,
            add(&cb, &mul(&o.conj(&ca), &x)),
            add(&cc, &o.scale(b, &xb)),
        ),
        // (a, b + cN(x) + T(Ax), c | A + c conj(x), B, C + conj(B) x)
        GeneratorKind::Lp => AlbertVector::new(
            a,
            shift(b, c, &ca, &x),
            c,
            add(&ca, &o.scale(c, &xb)),
            cb,
            add(&cc, &mul(&o.conj(&cb), &x)),
        ),
        // (a, b, c + aN(x) + T(Bx) | A + conj(C) x, B + a conj(x), C)
        GeneratorKind::Lpp => AlbertVector::new(
            a,
            b,
            shift(c, a, &cb, &x),
            add(&ca, &mul(&o.conj(&cc), &x)),
            add(&cb, &o.scale(a, &xb)),
            cc,
        ),
        // (a,b,c | uA, Bu, conj(u) C conj(u))
        GeneratorKind::Pu => AlbertVector::new(a, b, c, mul(&x, &ca), mul(&cb, &x), mul(&mul(&xb, &cc), &xb)),
        // (a,b,c | conj(u) A conj(u), uB, Cu)
        GeneratorKind::Pup => AlbertVector::new(a, b, c, mul(&mul(&xb, &ca), &xb), mul(&x, &cb), mul(&cc, &x)),
        // (a,b,c | Au, conj(u) B conj(u), uC)
        GeneratorKind::Pupp => AlbertVector::new(a, b, c, mul(&ca, &x), mul(&mul(&xb, &cb), &xb), mul(&x, &cc)),
        // diag(1, u^-1, u): (a, b/N, cN | uAu/N, conj(u) B, C u^-1)
        GeneratorKind::PScale => {
            let ninv = f.inv(nx).expect("validated: N(u) != 0");
            let uinv = o.scale(ninv, &xb);
            AlbertVector::new(
                a,
                f.mul(b, ninv),
                f.mul(c, nx),
                o.scale(ninv, &mul(&mul(&x, &ca), &x)),
                mul(&xb, &cb),
                mul(&cc, &uinv),
            )
        }
        GeneratorKind::Delta => AlbertVector::new(b, a, c, o.conj(&cb), o.conj(&ca), o.conj(&cc)),
        GeneratorKind::Tau => AlbertVector::new(c, a, b, cc, ca, cb),
    }
}

/// A linear map of `J` acting on row vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlbertMap {
    matrix: Matrix,
    /// Non-zero entries `(row, col, value)`, row-major.
    sparse: Vec<(u8, u8, FieldElement)>,
    /// Entries of row `r` are `sparse[row_start[r]..row_start[r + 1]]`.
    row_start: [u16; DIM + 1],
}

impl AlbertMap {
    pub fn from_matrix(matrix: Matrix) -> Result<Self> {
        if matrix.rows() != DIM || matrix.cols() != DIM {
            return Err(Error::DimensionMismatch { expected: DIM, got: matrix.rows().max(matrix.cols()) });
        }
        let mut sparse = Vec::new();
        let mut row_start = [0u16; DIM + 1];
        for (r, start) in row_start.iter_mut().take(DIM).enumerate() {
            *start = sparse.len() as u16;
            for c in 0..DIM {
                let v = matrix.get(r, c);
                if !v.is_zero() {
                    sparse.push((r as u8, c as u8, v));
                }
            }
        }
        row_start[DIM] = sparse.len() as u16;
        Ok(AlbertMap { matrix, sparse, row_start })
    }

    pub fn identity() -> Self {
        Self::from_matrix(Matrix::identity(DIM)).expect("27x27")
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn apply(&self, j: &Albert, v: &AlbertVector) -> AlbertVector {
        let f = j.field();
        let x = v.coords();
        let mut out = [FieldElement::ZERO; DIM];
        for &(r, c, m) in &self.sparse {
            let xr = x[r as usize];
            if !xr.is_zero() {
                out[c as usize] = f.add(out[c as usize], f.mul(xr, m));
            }
        }
        AlbertVector::from_coords(&out)
    }

    /// Images of the standard basis vectors, one per row.
    pub fn rows(&self) -> Vec<AlbertVector> {
        (0..DIM).map(|r| AlbertVector::from_coords(self.matrix.row(r))).collect()
    }
}

/// Matrix whose `i`-th row is the image of the `i`-th basis vector.
pub fn generator_matrix(j: &Albert, g: &GeneratorSpec) -> Result<AlbertMap> {
    g.validate(j.octonions())?;
    let mut m = Matrix::zeros(DIM, DIM);
    for i in 0..DIM {
        let img = act(j, g, &AlbertVector::basis(i));
        m.row_mut(i).copy_from_slice(&img.coords());
    }
    AlbertMap::from_matrix(m)
}

/// `f` followed by `g`.
pub fn compose(j: &Albert, f: &AlbertMap, g: &AlbertMap) -> AlbertMap {
    let field = j.field();
    let mut m = Matrix::zeros(DIM, DIM);
    for &(r, k, a) in &f.sparse {
        let k = k as usize;
        for &(_, c, b) in &g.sparse[g.row_start[k] as usize..g.row_start[k + 1] as usize] {
            let (r, c) = (r as usize, c as usize);
            m.set(r, c, field.add(m.get(r, c), field.mul(a, b)));
        }
    }
    AlbertMap::from_matrix(m).expect("27x27")
}

pub fn invert(j: &Albert, f: &AlbertMap) -> Result<AlbertMap> {
    AlbertMap::from_matrix(f.matrix.inverse(j.field())?)
}

/// Left-to-right product of the generator actions.
pub fn word_to_map(j: &Albert, word: &[GeneratorSpec]) -> Result<AlbertMap> {
    let mut acc = AlbertMap::identity();
    for g in word {
        acc = compose(j, &acc, &generator_matrix(j, g)?);
    }
    Ok(acc)
}

/// Applies each generator of `word` in turn.
pub fn apply_word(j: &Albert, word: &[GeneratorSpec], v: &AlbertVector) -> Result<AlbertVector> {
    word.iter().try_fold(*v, |acc, g| apply_generator(j, g, &acc))
}

/// Whether `delta(X f) = delta(X)` for every `X` yielded by `inputs`.
pub fn preserves_delta_on(j: &Albert, f: &AlbertMap, inputs: impl IntoIterator<Item = AlbertVector>) -> bool {
    inputs.into_iter().all(|x| j.delta(&f.apply(j, &x)) == j.delta(&x))
}

/// Inverse of a unipotent generator: the same family at `-x`.
pub fn unipotent_inverse(j: &Albert, g: &GeneratorSpec) -> Option<GeneratorSpec> {
    g.kind.is_unipotent().then(|| GeneratorSpec::new(g.kind, j.octonions().neg(&g.x())))
}

/// The six commutator identities: for each `(R, S, T)` below,
/// `R_{-1}^{-1} S_x R_{-1} S_x^{-1}` acts as `T_x`.
pub const COMMUTATOR_TRIPLES: [(GeneratorKind, GeneratorKind, GeneratorKind); 6] = [
    (GeneratorKind::Lpp, GeneratorKind::Lp, GeneratorKind::M),
    (GeneratorKind::L, GeneratorKind::Lpp, GeneratorKind::Mp),
    (GeneratorKind::Lp, GeneratorKind::L, GeneratorKind::Mpp),
    (GeneratorKind::Mp, GeneratorKind::Mpp, GeneratorKind::L),
    (GeneratorKind::Mpp, GeneratorKind::M, GeneratorKind::Lp),
    (GeneratorKind::M, GeneratorKind::Mp, GeneratorKind::Lpp),
];

/// Checks one commutator identity as a matrix equation; inverses come from
/// Gaussian elimination.
pub fn commutator_identity_holds(
    j: &Albert,
    triple: (GeneratorKind, GeneratorKind, GeneratorKind),
    x: &Octonion,
) -> Result<bool> {
    let o = j.octonions();
    let minus_one = o.neg(&Octonion::one());
    let (r, s, t) = triple;
    let rm = generator_matrix(j, &GeneratorSpec::new(r, minus_one))?;
    let sx = generator_matrix(j, &GeneratorSpec::new(s, *x))?;
    let lhs = [invert(j, &rm)?, sx.clone(), rm, invert(j, &sx)?]
        .iter()
        .fold(AlbertMap::identity(), |acc, m| compose(j, &acc, m));
    Ok(lhs == generator_matrix(j, &GeneratorSpec::new(t, *x))?)
}

/// All six commutator identities at parameter `x`.
pub fn commutator_identities_check(j: &Albert, x: &Octonion) -> Result<bool> {
    for t in COMMUTATOR_TRIPLES {
        if !commutator_identity_holds(j, t, x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Compares `C -> conj(u) C conj(u)` with the reflection in `u` followed by
/// the reflection in `1`, on all eight basis octonions.
pub fn q8_reflection_check(j: &Albert, u: &Octonion) -> Result<bool> {
    let o = j.octonions();
    let g = GeneratorSpec::pu(*u);
    g.validate(o)?;
    let space = QuadSpace::octonions(o);
    let r_u = reflection(&space, &u.0)?;
    let r_1 = reflection(&space, &Octonion::one().0)?;
    let both = r_u.then(&space, &r_1);
    Ok((0..8).all(|i| {
        let e = Octonion::basis(i);
        let via_pu = act(j, &g, &AlbertVector { oct_c: e, ..AlbertVector::ZERO }).oct_c;
        both.apply(&space, &e.0) == via_pu.0.to_vec()
    }))
}

/// Coordinates of `(v1, v4, v3, v2)`: `v1 = (1,0,0|0)`, `v2 = (0,1,0|0)`,
/// `v3 = (0,0,0|0,0,e-1)`, `v4 = (0,0,0|0,0,e1)`.
pub const V4_COORDS: [usize; 4] = [0, 26, 19, 1];

/// Restriction of `f` to the span of [`V4_COORDS`], or `None` if that span is
/// not invariant.
pub fn restrict_to_v4(f: &AlbertMap) -> Option<[[FieldElement; 4]; 4]> {
    let mut out = [[FieldElement::ZERO; 4]; 4];
    for (i, &r) in V4_COORDS.iter().enumerate() {
        let row = f.matrix().row(r);
        for (c, v) in row.iter().enumerate() {
            match V4_COORDS.iter().position(|&k| k == c) {
                Some(jj) => out[i][jj] = *v,
                None if !v.is_zero() => return None,
                None => {}
            }
        }
    }
    Some(out)
}
