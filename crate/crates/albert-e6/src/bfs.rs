//! Breadth-first orbit search on white points.
//!
//! Both searches expand one level at a time: images of the whole frontier are
//! computed in parallel, then merged into the visited set. The visited set
//! after each level is a function of the previous level only, so orbits and
//! level counts are independent of the thread count.

use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, Ordering};

use albert_e6_core::albert::{Albert, AlbertVector};
use albert_e6_core::error::{Error, Result};
use albert_e6_core::octonion::{Octonion, Octonions};
use albert_e6_core::orbits::WhitePointId;
use albert_e6_core::packed::{PackedMap, SPACE_SIZE};
use albert_e6_core::se6::{generator_matrix, AlbertMap, GeneratorKind, GeneratorSpec};
use rayon::prelude::*;

/// Default cap on the number of projective points a generic search may visit.
pub const DEFAULT_BUDGET: usize = 5_000_000;

/// Closure of `<start>` under `gens`, as projective ids.
pub fn white_point_orbit_bfs(
    j: &Albert,
    start: &AlbertVector,
    gens: &[GeneratorSpec],
    budget: usize,
) -> Result<HashSet<WhitePointId>> {
    let start = WhitePointId::new(j, start)?;
    let maps: Vec<AlbertMap> = gens.iter().map(|g| generator_matrix(j, g)).collect::<Result<_>>()?;
    // bounds the candidate buffer to about 2^22 images
    let chunk = ((1usize << 22) / maps.len().max(1)).max(1);
    let mut visited = HashSet::from([start]);
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for part in frontier.chunks(chunk) {
            let candidates: Vec<WhitePointId> = part
                .par_iter()
                .flat_map_iter(|p| {
                    maps.iter().map(|m| WhitePointId::normalize_unchecked(j, &m.apply(j, p.representative())))
                })
                .filter(|p| !visited.contains(p))
                .collect();
            for p in candidates {
                if visited.insert(p) {
                    next.push(p);
                }
            }
            if visited.len() > budget {
                return Err(Error::BudgetExceeded("orbit exceeds the point budget"));
            }
        }
        frontier = next;
    }
    Ok(visited)
}

/// Visited set of a packed GF(2) search; over GF(2) points and non-zero
/// vectors coincide.
pub struct PackedOrbit {
    bits: Vec<u64>,
    size: u64,
    levels: u32,
}

impl PackedOrbit {
    pub fn contains(&self, v: u32) -> bool {
        self.bits[(v >> 6) as usize] >> (v & 63) & 1 == 1
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    /// Number of non-empty frontiers expanded, the start included.
    pub fn levels(&self) -> u32 {
        self.levels
    }

    /// Members in increasing packed order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.bits
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| (i as u32) << 6 | b))
    }
}

/// Closure of the packed vector `start` under `gens`.
pub fn packed_orbit(gens: &[PackedMap], start: u32) -> PackedOrbit {
    let visited: Vec<AtomicU64> = (0..SPACE_SIZE / 64).map(|_| AtomicU64::new(0)).collect();
    let mark = |v: u32| {
        let bit = 1u64 << (v & 63);
        visited[(v >> 6) as usize].fetch_or(bit, Ordering::Relaxed) & bit == 0
    };
    mark(start);
    let mut size = 1u64;
    let mut levels = 0;
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        levels += 1;
        // generators outermost keeps each map's tables hot in cache
        let next: Vec<Vec<u32>> =
            gens.par_iter().map(|g| frontier.iter().map(|&v| g.apply(v)).filter(|&w| mark(w)).collect()).collect();
        frontier = next.concat();
        size += frontier.len() as u64;
    }
    let bits = visited.into_iter().map(AtomicU64::into_inner).collect();
    PackedOrbit { bits, size, levels }
}

/// All generators of the given kinds at every parameter.
pub fn generators_over_all(o: &Octonions, kinds: &[GeneratorKind]) -> Vec<GeneratorSpec> {
    let params: Vec<Octonion> = o.all().collect();
    kinds.iter().flat_map(|&k| params.iter().map(move |&x| GeneratorSpec::new(k, x))).collect()
}

/// Every unipotent generator at every parameter, together with `delta` and `tau`.
pub fn full_generating_set(o: &Octonions) -> Vec<GeneratorSpec> {
    let mut gens = generators_over_all(o, &GeneratorKind::UNIPOTENT);
    gens.extend([GeneratorSpec::DELTA, GeneratorSpec::TAU]);
    gens
}

/// Generators fixing `(0,0,1|0;0;0)`: `M, L, M', L''` at every parameter and
/// `P''_u` at every norm-one `u`.
pub fn white_stabiliser_generators(o: &Octonions) -> Vec<GeneratorSpec> {
    let one = o.field().one();
    let mut gens = generators_over_all(o, &[GeneratorKind::M, GeneratorKind::L, GeneratorKind::Mp, GeneratorKind::Lpp]);
    gens.extend(o.all().filter(|u| o.norm(u) == one).map(GeneratorSpec::pupp));
    gens
}

/// Packed forms of `gens`; requires GF(2).
pub fn pack_generators(j: &Albert, gens: &[GeneratorSpec]) -> Result<Vec<PackedMap>> {
    gens.par_iter().map(|g| PackedMap::from_map(j.field(), &generator_matrix(j, g)?)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use albert_e6_core::gf::Gf;
    use albert_e6_core::packed::pack;

    fn alb(q: u32) -> Albert {
        Albert::new(Gf::from_order(q).unwrap())
    }

    #[test]
    fn tau_orbit_is_the_three_axes() {
        let j = alb(2);
        let f = j.field();
        let (z, o) = (f.zero(), f.one());
        let orbit = white_point_orbit_bfs(&j, &AlbertVector::diagonal(z, z, o), &[GeneratorSpec::TAU], 10).unwrap();
        let want: HashSet<WhitePointId> = [(o, z, z), (z, o, z), (z, z, o)]
            .iter()
            .map(|&(a, b, c)| WhitePointId::new(&j, &AlbertVector::diagonal(a, b, c)).unwrap())
            .collect();
        assert_eq!(orbit, want);
    }

    #[test]
    fn empty_generator_set_gives_singleton() {
        let j = alb(3);
        let f = j.field();
        let w = AlbertVector::diagonal(f.zero(), f.zero(), f.from_int(2));
        assert_eq!(white_point_orbit_bfs(&j, &w, &[], 10).unwrap().len(), 1);
        let grey = AlbertVector::diagonal(f.zero(), f.one(), f.one());
        assert_eq!(white_point_orbit_bfs(&j, &grey, &[], 10), Err(Error::NotWhite));
    }

    #[test]
    fn budget_is_enforced() {
        let j = alb(3);
        let f = j.field();
        let w = AlbertVector::diagonal(f.zero(), f.zero(), f.one());
        let gens = generators_over_all(j.octonions(), &[GeneratorKind::M, GeneratorKind::L]);
        let err = white_point_orbit_bfs(&j, &w, &[&gens[..], &[GeneratorSpec::TAU]].concat(), 50);
        assert!(matches!(err, Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn packed_and_generic_agree_on_a_small_orbit() {
        let j = alb(2);
        let f = j.field();
        let o = j.octonions();
        let w = AlbertVector::diagonal(f.one(), f.zero(), f.zero());
        // L''_x sends (1,0,0|0;0;0) to (1,0,N(x)|0;conj(x);0) and M'_x fixes those
        let gens = generators_over_all(o, &[GeneratorKind::Mp, GeneratorKind::Lpp]);
        let generic = white_point_orbit_bfs(&j, &w, &gens, 1 << 20).unwrap();
        let packed = packed_orbit(&pack_generators(&j, &gens).unwrap(), pack(&w));
        assert_eq!(generic.len(), 256);
        assert_eq!(generic.len() as u64, packed.size());
        assert!(generic.iter().all(|p| packed.contains(pack(p.representative()))));
        assert_eq!(packed.iter().count() as u64, packed.size());
    }
}
