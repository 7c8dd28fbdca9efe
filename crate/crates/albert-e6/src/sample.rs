//! Seeded random elements. Sampled checks split their work into fixed-size
//! chunks and give chunk `i` the ChaCha stream `i`, so results never depend on
//! the number of worker threads.

use albert_e6_core::albert::{Albert, AlbertVector};
use albert_e6_core::gf::{FieldElement, Gf};
use albert_e6_core::octonion::{Octonion, Octonions};
use albert_e6_core::se6::{apply_generator, GeneratorKind, GeneratorSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Samples per independent stream.
pub const CHUNK: u64 = 1024;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { rng }
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.rng.gen_range(0..n)
    }

    pub fn element(&mut self, f: &Gf) -> FieldElement {
        f.element(self.rng.gen_range(0..f.order() as u32)).expect("in range")
    }

    pub fn nonzero_element(&mut self, f: &Gf) -> FieldElement {
        f.element(self.rng.gen_range(1..f.order() as u32)).expect("in range")
    }

    pub fn octonion(&mut self, o: &Octonions) -> Octonion {
        Octonion(std::array::from_fn(|_| self.element(o.field())))
    }

    pub fn nonzero_octonion(&mut self, o: &Octonions) -> Octonion {
        loop {
            let x = self.octonion(o);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// Uniform over octonions of norm `n != 0`: `x -> x v` with `N(v) = n / N(x)`
    /// is a bijection between the norm-`N(x)` and norm-`n` spheres.
    pub fn with_norm(&mut self, o: &Octonions, n: FieldElement) -> Octonion {
        let f = o.field();
        loop {
            let x = self.octonion(o);
            let nx = o.norm(&x);
            if !nx.is_zero() {
                let v = o.with_norm(f.div(n, nx).expect("N(x) != 0"));
                return o.mul(&x, &v);
            }
        }
    }

    pub fn norm_one(&mut self, o: &Octonions) -> Octonion {
        self.with_norm(o, o.field().one())
    }

    pub fn vector(&mut self, j: &Albert) -> AlbertVector {
        let f = j.field();
        let c: Vec<FieldElement> = (0..27).map(|_| self.element(f)).collect();
        AlbertVector::from_coords(&c)
    }

    pub fn nonzero_vector(&mut self, j: &Albert) -> AlbertVector {
        loop {
            let v = self.vector(j);
            if !v.is_zero() {
                return v;
            }
        }
    }

    pub fn unipotent(&mut self, o: &Octonions) -> GeneratorSpec {
        let kind = GeneratorKind::UNIPOTENT[self.below(6) as usize];
        GeneratorSpec::new(kind, self.octonion(o))
    }

    /// A white vector: a random scalar multiple of the image of
    /// `(0,0,1|0;0;0)` under a random word of unipotent generators and `tau`.
    pub fn white_vector(&mut self, j: &Albert) -> AlbertVector {
        let f = j.field();
        let mut v = AlbertVector::diagonal(f.zero(), f.zero(), f.one());
        for _ in 0..24 {
            let g = if self.below(4) == 0 { GeneratorSpec::TAU } else { self.unipotent(j.octonions()) };
            v = apply_generator(j, &g, &v).expect("valid generator");
        }
        j.scale(self.nonzero_element(f), &v)
    }
}

/// Runs `check` on `n` sampled cases split into [`CHUNK`]-sized streams and
/// returns the number of failures together with the first failing case in
/// sample order.
pub fn sampled<T, F>(n: u64, seed: u64, check: F) -> (u64, Option<T>)
where
    T: Send,
    F: Fn(&mut Sampler) -> Option<T> + Sync,
{
    let chunks = n.div_ceil(CHUNK);
    let per_chunk: Vec<(u64, Option<T>)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut s = Sampler::new(seed, c);
            let len = CHUNK.min(n - c * CHUNK);
            let mut failures = 0;
            let mut first = None;
            for _ in 0..len {
                if let Some(bad) = check(&mut s) {
                    failures += 1;
                    first.get_or_insert(bad);
                }
            }
            (failures, first)
        })
        .collect();
    let failures = per_chunk.iter().map(|(k, _)| k).sum();
    (failures, per_chunk.into_iter().find_map(|(_, first)| first))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible() {
        let o = Octonions::new(Gf::from_order(5).unwrap());
        let mut s = Sampler::new(9, 3);
        let a: Vec<Octonion> = (0..5).map(|_| s.octonion(&o)).collect();
        let mut s = Sampler::new(9, 3);
        let b: Vec<Octonion> = (0..5).map(|_| s.octonion(&o)).collect();
        assert_eq!(a, b);
        let mut other = Sampler::new(9, 4);
        assert_ne!(other.octonion(&o), a[0]);
    }

    #[test]
    fn norms_and_whiteness() {
        for q in [2, 3, 4, 5] {
            let j = Albert::new(Gf::from_order(q).unwrap());
            let o = j.octonions();
            let mut s = Sampler::new(1, 0);
            for _ in 0..50 {
                assert_eq!(o.norm(&s.norm_one(o)), o.field().one());
                let n = s.nonzero_element(o.field());
                assert_eq!(o.norm(&s.with_norm(o, n)), n);
                assert!(j.whiteness_conditions(&s.white_vector(&j)).unwrap());
            }
        }
    }

    #[test]
    fn sampled_counts_failures_in_order() {
        let (fails, first) = sampled(3000, 5, |s| {
            let x = s.below(10);
            (x == 0).then_some(x)
        });
        assert!(fails > 0);
        assert_eq!(first, Some(0));
        let (fails, first) = sampled::<(), _>(100, 5, |_| None);
        assert_eq!((fails, first), (0, None));
    }
}
