//! Bit-packed kernels over GF(2).
//!
//! An octonion is a `u8` with coordinate `i` at bit `i`. An Albert vector is
//! a `u32`: bits 0..3 are `a, b, c`, bits 3..11 `A`, 11..19 `B`, 19..27 `C`.
//! Signs vanish, so conjugation only swaps the `e0` and `e-0` bits.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::albert::{AlbertVector, DIM};
use crate::error::{Error, Result};
use crate::gf::{FieldElement, Gf};
use crate::octonion::{Octonion, Octonions, E_0, E_M0};
use crate::se6::AlbertMap;

/// Number of vectors in `J` over GF(2).
pub const SPACE_SIZE: u32 = 1 << DIM;

const CHUNK: u32 = 9;
const CHUNK_MASK: u32 = (1 << CHUNK) - 1;

/// Multiplication, norm, trace and conjugation tables of `O` over GF(2).
pub struct F2Tables {
    mul: Box<[u8]>,
    norm: [u8; 256],
    trace: [u8; 256],
    conj: [u8; 256],
}

pub fn pack_octonion(x: &Octonion) -> u8 {
    x.0.iter().enumerate().fold(0, |acc, (i, c)| acc | ((c.index() as u8 & 1) << i))
}

pub fn unpack_octonion(x: u8) -> Octonion {
    Octonion(core::array::from_fn(|i| if x >> i & 1 == 1 { FieldElement::ONE } else { FieldElement::ZERO }))
}

/// Packs the coordinates of a GF(2) vector.
pub fn pack(v: &AlbertVector) -> u32 {
    v.coords().iter().enumerate().fold(0, |acc, (i, c)| acc | ((c.index() & 1) << i))
}

pub fn unpack(v: u32) -> AlbertVector {
    let c: Vec<FieldElement> =
        (0..DIM).map(|i| if v >> i & 1 == 1 { FieldElement::ONE } else { FieldElement::ZERO }).collect();
    AlbertVector::from_coords(&c)
}

#[inline]
fn parts(v: u32) -> (u8, u8, u8, u8, u8, u8) {
    ((v & 1) as u8, (v >> 1 & 1) as u8, (v >> 2 & 1) as u8, (v >> 3) as u8, (v >> 11) as u8, (v >> 19) as u8)
}

impl F2Tables {
    pub fn new() -> Self {
        let o = Octonions::new(Gf::from_order(2).expect("GF(2)"));
        let mut mul = alloc::vec![0u8; 1 << 16].into_boxed_slice();
        let mut norm = [0u8; 256];
        let mut trace = [0u8; 256];
        let mut conj = [0u8; 256];
        for x in 0..=255u8 {
            let ox = unpack_octonion(x);
            norm[x as usize] = o.norm(&ox).index() as u8;
            trace[x as usize] = o.trace(&ox).index() as u8;
            conj[x as usize] = pack_octonion(&o.conj(&ox));
            for y in 0..=255u8 {
                mul[(x as usize) << 8 | y as usize] = pack_octonion(&o.mul(&ox, &unpack_octonion(y)));
            }
        }
        F2Tables { mul, norm, trace, conj }
    }

    #[inline]
    pub fn mul(&self, x: u8, y: u8) -> u8 {
        self.mul[(x as usize) << 8 | y as usize]
    }

    #[inline]
    pub fn norm(&self, x: u8) -> u8 {
        self.norm[x as usize]
    }

    #[inline]
    pub fn trace(&self, x: u8) -> u8 {
        self.trace[x as usize]
    }

    #[inline]
    pub fn conj(&self, x: u8) -> u8 {
        self.conj[x as usize]
    }

    /// The determinant of a packed vector.
    #[inline]
    pub fn delta(&self, v: u32) -> u8 {
        let (a, b, c, xa, xb, xc) = parts(v);
        (a & b & c)
            ^ (a & self.norm(xa))
            ^ (b & self.norm(xb))
            ^ (c & self.norm(xc))
            ^ self.trace(self.mul(self.mul(xa, xb), xc))
    }

    /// The six whiteness equations; the zero vector passes trivially.
    #[inline]
    pub fn white_conditions(&self, v: u32) -> bool {
        let (a, b, c, xa, xb, xc) = parts(v);
        let scaled = |s: u8, x: u8| if s == 1 { self.conj(x) } else { 0 };
        self.norm(xa) == b & c
            && self.norm(xb) == c & a
            && self.norm(xc) == a & b
            && self.mul(xa, xb) == scaled(c, xc)
            && self.mul(xb, xc) == scaled(a, xa)
            && self.mul(xc, xa) == scaled(b, xb)
    }
}

impl Default for F2Tables {
    fn default() -> Self {
        Self::new()
    }
}

/// A GF(2)-linear map of `J` stored as images of 9-bit coordinate chunks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PackedMap {
    rows: [u32; DIM],
    chunks: Box<[[u32; 1 << CHUNK]; 3]>,
}

impl core::fmt::Debug for PackedMap {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("PackedMap").field("rows", &self.rows).finish()
    }
}

impl PackedMap {
    /// `rows[i]` is the image of the `i`-th basis vector.
    pub fn from_rows(rows: [u32; DIM]) -> Self {
        let mut chunks = Box::new([[0u32; 1 << CHUNK]; 3]);
        for (k, table) in chunks.iter_mut().enumerate() {
            for bits in 1..(1u32 << CHUNK) {
                let low = bits.trailing_zeros();
                table[bits as usize] = table[(bits & (bits - 1)) as usize] ^ rows[(k as u32 * CHUNK + low) as usize];
            }
        }
        PackedMap { rows, chunks }
    }

    pub fn from_map(f: &Gf, m: &AlbertMap) -> Result<Self> {
        if f.order() != 2 {
            return Err(Error::InvalidArgument("packed maps are defined over GF(2) only"));
        }
        let rows = core::array::from_fn(|i| pack(&AlbertVector::from_coords(m.matrix().row(i))));
        Ok(Self::from_rows(rows))
    }

    pub fn identity() -> Self {
        Self::from_rows(core::array::from_fn(|i| 1 << i))
    }

    pub fn rows(&self) -> &[u32; DIM] {
        &self.rows
    }

    #[inline]
    pub fn apply(&self, v: u32) -> u32 {
        self.chunks[0][(v & CHUNK_MASK) as usize]
            ^ self.chunks[1][(v >> CHUNK & CHUNK_MASK) as usize]
            ^ self.chunks[2][(v >> (2 * CHUNK)) as usize & CHUNK_MASK as usize]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &PackedMap) -> PackedMap {
        Self::from_rows(core::array::from_fn(|i| other.apply(self.rows[i])))
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, &r)| r == 1 << i)
    }
}

/// The packed bit of the `e0` / `e-0` coordinates of `A`, for tests of the layout.
pub const A_E0_BIT: u32 = 3 + E_0 as u32;
pub const A_EM0_BIT: u32 = 3 + E_M0 as u32;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::albert::Albert;
    use crate::se6::{generator_matrix, GeneratorSpec};

    fn j2() -> Albert {
        Albert::new(Gf::from_order(2).unwrap())
    }

    #[test]
    fn pack_round_trip() {
        for v in [0u32, 1, 0x7ff_ffff, 0x123_4567, 1 << 26] {
            assert_eq!(pack(&unpack(v)), v);
        }
        assert_eq!(
            pack(&AlbertVector { oct_a: Octonion::one(), ..AlbertVector::ZERO }),
            1 << A_E0_BIT | 1 << A_EM0_BIT
        );
    }

    #[test]
    fn kernels_agree_with_generic() {
        let j = j2();
        let t = F2Tables::new();
        let mut s = 12345u32;
        for _ in 0..3000 {
            s = s.wrapping_mul(1664525).wrapping_add(1013904223);
            let v = s >> 5;
            let x = unpack(v);
            assert_eq!(t.delta(v) as u32, j.delta(&x).index());
            if v != 0 {
                assert_eq!(t.white_conditions(v), j.whiteness_conditions(&x).unwrap());
            }
        }
    }

    #[test]
    fn packed_maps_agree() {
        let j = j2();
        let x = unpack_octonion(0b1010_0110);
        let m = generator_matrix(&j, &GeneratorSpec::lpp(x)).unwrap();
        let p = PackedMap::from_map(j.field(), &m).unwrap();
        let tau = PackedMap::from_map(j.field(), &generator_matrix(&j, &GeneratorSpec::TAU).unwrap()).unwrap();
        assert!(tau.then(&tau).then(&tau).is_identity());
        let mut s = 7u32;
        for _ in 0..500 {
            s = s.wrapping_mul(1664525).wrapping_add(1013904223);
            let v = s >> 5;
            assert_eq!(unpack(p.apply(v)), m.apply(&j, &unpack(v)));
        }
        assert!(PackedMap::identity().is_identity());
        assert!(PackedMap::from_map(&Gf::from_order(3).unwrap(), &m).is_err());
    }
}
