//! Exhaustive and sampled passes over the Albert space.

use albert_e6_core::albert::{Albert, AlbertVector, Subspace};
use albert_e6_core::error::{Error, Result};
use albert_e6_core::gf::FieldElement;
use albert_e6_core::packed::{unpack, F2Tables, PackedMap, SPACE_SIZE};
use albert_e6_core::se6::AlbertMap;
use rayon::prelude::*;

use crate::sample::sampled;

/// Largest `q^dim` a generic exhaustive pass accepts.
pub const GENERIC_BUDGET: u64 = 1 << 24;

const C_BIT: u32 = 1 << 2;
/// Bits of `A` and `B` in the packed layout.
const AB_BITS: u32 = 0xffff << 3;

/// White vectors over GF(2) found by brute force, split by stratum.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WhiteCounts {
    /// In `J_10^{abC}`: `c = 0` and `A = B = 0`.
    pub n10: u64,
    /// In `J_26^{abABC}` (`c = 0`) but not in `J_10^{abC}`.
    pub n26_minus_10: u64,
    /// `c != 0`.
    pub outside: u64,
}

impl WhiteCounts {
    pub fn total(&self) -> u64 {
        self.n10 + self.n26_minus_10 + self.outside
    }

    fn add(self, o: Self) -> Self {
        WhiteCounts {
            n10: self.n10 + o.n10,
            n26_minus_10: self.n26_minus_10 + o.n26_minus_10,
            outside: self.outside + o.outside,
        }
    }
}

/// Counts the non-zero white vectors of `J` by testing every packed vector.
/// Only GF(2) is within budget.
pub fn count_white_enumerate(q: u32) -> Result<WhiteCounts> {
    if q != 2 {
        return Err(Error::BudgetExceeded("exhaustive white counting is limited to q = 2"));
    }
    let t = F2Tables::new();
    Ok((1..SPACE_SIZE)
        .into_par_iter()
        .fold(WhiteCounts::default, |mut acc, v| {
            if t.white_conditions(v) {
                if v & C_BIT != 0 {
                    acc.outside += 1;
                } else if v & AB_BITS != 0 {
                    acc.n26_minus_10 += 1;
                } else {
                    acc.n10 += 1;
                }
            }
            acc
        })
        .reduce(WhiteCounts::default, WhiteCounts::add))
}

/// Calls `visit` on every vector of `sub` in lexicographic order of the field
/// enumeration, last coordinate fastest.
pub fn for_each_in_subspace(j: &Albert, sub: Subspace, mut visit: impl FnMut(&AlbertVector)) -> Result<()> {
    let f = j.field();
    let q = f.order() as u64;
    let coords: Vec<usize> = (0..27).filter(|&i| sub.mask() >> i & 1 == 1).collect();
    if q.checked_pow(coords.len() as u32).is_none_or(|n| n > GENERIC_BUDGET) {
        return Err(Error::BudgetExceeded("subspace has too many vectors"));
    }
    let mut digits = vec![0u32; coords.len()];
    let mut c = [FieldElement::ZERO; 27];
    loop {
        for (&i, &d) in coords.iter().zip(&digits) {
            c[i] = f.element(d).expect("digit below q");
        }
        visit(&AlbertVector::from_coords(&c));
        let mut k = digits.len();
        loop {
            if k == 0 {
                return Ok(());
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < q as u32 {
                break;
            }
            digits[k] = 0;
        }
    }
}

/// Non-zero white vectors of `sub`, by generic enumeration.
pub fn count_white_in_subspace(j: &Albert, sub: Subspace) -> Result<u64> {
    let mut n = 0;
    for_each_in_subspace(j, sub, |v| {
        if !v.is_zero() && j.whiteness_conditions(v).expect("non-zero") {
            n += 1;
        }
    })?;
    Ok(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaMode {
    Exhaustive,
    Sampled(u64),
}

/// Outcome of a determinant-preservation pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaCheck {
    pub checked: u64,
    pub failures: u64,
    pub counterexample: Option<AlbertVector>,
}

impl DeltaCheck {
    pub fn holds(&self) -> bool {
        self.failures == 0
    }
}

/// Packed GF(2) pass over all `2^27` vectors.
pub fn preserves_delta_packed(t: &F2Tables, m: &PackedMap) -> DeltaCheck {
    let failures = (0..SPACE_SIZE).into_par_iter().filter(|&v| t.delta(m.apply(v)) != t.delta(v)).count() as u64;
    let counterexample = if failures == 0 {
        None
    } else {
        (0..SPACE_SIZE).into_par_iter().find_first(|&v| t.delta(m.apply(v)) != t.delta(v)).map(unpack)
    };
    DeltaCheck { checked: SPACE_SIZE as u64, failures, counterexample }
}

/// Checks `delta(X f) = delta(X)`; exhaustive mode is limited to GF(2).
pub fn preserves_delta(j: &Albert, f: &AlbertMap, mode: DeltaMode, seed: u64) -> Result<DeltaCheck> {
    match mode {
        DeltaMode::Exhaustive => {
            let m = PackedMap::from_map(j.field(), f)
                .map_err(|_| Error::BudgetExceeded("exhaustive determinant checks are limited to q = 2"))?;
            Ok(preserves_delta_packed(&F2Tables::new(), &m))
        }
        DeltaMode::Sampled(n) => {
            let (failures, counterexample) = sampled(n, seed, |s| {
                let x = s.vector(j);
                (j.delta(&f.apply(j, &x)) != j.delta(&x)).then_some(x)
            });
            Ok(DeltaCheck { checked: n, failures, counterexample })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use albert_e6_core::gf::Gf;
    use albert_e6_core::linalg::Matrix;
    use albert_e6_core::octonion::{Octonion, E_1};
    use albert_e6_core::se6::{generator_matrix, GeneratorSpec};

    fn alb(q: u32) -> Albert {
        Albert::new(Gf::from_order(q).unwrap())
    }

    #[test]
    fn j10_counts_by_small_enumeration() {
        // (q^5 - 1)(q^4 + 1)
        assert_eq!(count_white_in_subspace(&alb(2), Subspace::j10_abc()).unwrap(), 31 * 17);
        assert_eq!(count_white_in_subspace(&alb(3), Subspace::j10_abc()).unwrap(), 242 * 82);
        assert!(count_white_in_subspace(&alb(3), Subspace::whole()).is_err());
    }

    #[test]
    fn subspace_enumeration_order() {
        let j = alb(2);
        let mut seen = Vec::new();
        for_each_in_subspace(&j, Subspace::from_mask(0b101), |v| seen.push((v.a.index(), v.c.index()))).unwrap();
        assert_eq!(seen, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
    }

    #[test]
    fn enumeration_rejects_large_fields() {
        assert!(matches!(count_white_enumerate(3), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn delta_modes() {
        let j = alb(5);
        let f = j.field();
        let two = AlbertMap::from_matrix(Matrix::identity(27).scale(f, f.from_int(2))).unwrap();
        assert!(!preserves_delta(&j, &two, DeltaMode::Sampled(200), 1).unwrap().holds());
        assert!(preserves_delta(&j, &AlbertMap::identity(), DeltaMode::Sampled(200), 1).unwrap().holds());
        let m = generator_matrix(&j, &GeneratorSpec::m(Octonion::basis(E_1))).unwrap();
        assert!(preserves_delta(&j, &m, DeltaMode::Sampled(500), 2).unwrap().holds());
        assert!(matches!(preserves_delta(&j, &m, DeltaMode::Exhaustive, 0), Err(Error::BudgetExceeded(_))));
    }
}
