//! Verification suites selectable from the command line.

use albert_e6_core::albert::Albert;
use albert_e6_core::error::Result;

use crate::checks::{self, Check, Law};
use crate::enumerate::DeltaMode;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// Moufang and alternative laws.
    Moufang,
    /// Composition, quadratic, conjugation and trace laws.
    Conjugation,
    /// Determinant preservation by every generator kind.
    Generators,
    /// The six commutator identities.
    Commutators,
    /// The abelian M'/L'' group.
    F16,
    /// P_u on the C block as a product of two reflections.
    Reflections,
    /// White-vector counts.
    Counts,
    /// Group-order identities.
    Orders,
    /// Annihilator dimensions of isotropic octonions.
    Annihilators,
    /// 17-dimensional radicals of white vectors.
    Radicals,
    /// Factorizations of P_u.
    Factorization,
    /// Reduction to canonical form.
    Reduction,
    /// The polarization identity for the mixed form.
    Polarization,
    /// White-point orbits over GF(2).
    Transitivity,
    /// Every suite above.
    All,
}

impl Suite {
    pub const EACH: [Suite; 14] = [
        Suite::Moufang,
        Suite::Conjugation,
        Suite::Generators,
        Suite::Commutators,
        Suite::F16,
        Suite::Reflections,
        Suite::Counts,
        Suite::Orders,
        Suite::Annihilators,
        Suite::Radicals,
        Suite::Factorization,
        Suite::Reduction,
        Suite::Polarization,
        Suite::Transitivity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Moufang => "moufang",
            Suite::Conjugation => "conjugation",
            Suite::Generators => "generators",
            Suite::Commutators => "commutators",
            Suite::F16 => "f16",
            Suite::Reflections => "reflections",
            Suite::Counts => "counts",
            Suite::Orders => "orders",
            Suite::Annihilators => "annihilators",
            Suite::Radicals => "radicals",
            Suite::Factorization => "factorization",
            Suite::Reduction => "reduction",
            Suite::Polarization => "polarization",
            Suite::Transitivity => "transitivity",
            Suite::All => "all",
        }
    }

    /// Sample count used when none is given; matrix-level checks cost far
    /// more per case than vector-level ones.
    pub fn default_samples(self) -> u64 {
        match self {
            Suite::Commutators | Suite::Factorization => 200,
            Suite::F16 | Suite::Reflections | Suite::Radicals => 1000,
            _ => 10_000,
        }
    }
}

fn skipped(name: &str, why: &str) -> Check {
    Check::new(name, true, 0, format!("skipped: {why}"))
}

/// Runs `suite` over the field of `j`. `samples` overrides the default count.
pub fn run_suite(suite: Suite, j: &Albert, seed: u64, samples: Option<u64>) -> Result<Vec<Check>> {
    let q = j.field().order() as u32;
    let o = j.octonions();
    let n = samples.unwrap_or(suite.default_samples());
    Ok(match suite {
        Suite::All => {
            let mut out = Vec::new();
            for s in Suite::EACH {
                out.extend(run_suite(s, j, seed, samples)?);
            }
            out
        }
        Suite::Moufang => checks::octonion_laws(o, &[Law::Moufang, Law::Alternative], n, seed),
        Suite::Conjugation => checks::octonion_laws(
            o,
            &[Law::Composition, Law::Quadratic, Law::Conjugation, Law::TraceAssociativity],
            n,
            seed,
        ),
        Suite::Generators => {
            let mode = if q == 2 { DeltaMode::Exhaustive } else { DeltaMode::Sampled(n) };
            checks::delta_preservation(j, mode, seed)?
        }
        Suite::Commutators => checks::commutators(j, n, seed),
        Suite::F16 if q == 2 => checks::f16_structure_f2()?,
        Suite::F16 => checks::f16_structure_sampled(j, n, seed)?,
        Suite::Reflections => vec![checks::reflections(j, n, seed)],
        Suite::Counts => checks::white_counts(q)?,
        Suite::Orders => checks::orders(q.max(16))?,
        Suite::Annihilators => vec![checks::annihilator_dimensions(o, n, seed)],
        Suite::Radicals => checks::radicals(j, n.min(200), seed)?,
        Suite::Factorization => checks::factorizations(j, n, seed)?,
        Suite::Reduction => vec![checks::reduction(j, n, seed)],
        Suite::Polarization => vec![checks::polarization(j, n, seed)],
        Suite::Transitivity if q == 2 => {
            let mut out = vec![checks::transitivity_f2()?];
            out.extend(checks::stabiliser_transitivity_f2()?);
            out
        }
        Suite::Transitivity => vec![skipped("white-point-transitivity", "exhaustive orbits are limited to q = 2")],
    })
}
