//! Acceptance criteria. Prints one PASS/FAIL line per criterion, followed by
//! the individual checks, and exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use albert_e6::checks::{self, Check, Law};
use albert_e6::enumerate::{count_white_enumerate, count_white_in_subspace, DeltaMode};
use albert_e6_core::albert::{Albert, Subspace};
use albert_e6_core::error::Result;
use albert_e6_core::gf::Gf;

const SEED: u64 = 0x00a1_be27;

fn alb(q: u32) -> Albert {
    Albert::new(Gf::from_order(q).expect("supported order"))
}

struct Criterion {
    id: u32,
    title: &'static str,
    tolerance: &'static str,
    run: fn() -> Result<Vec<Check>>,
}

fn c1_white_count() -> Result<Vec<Check>> {
    let counts = count_white_enumerate(2)?;
    Ok(vec![checks::white_count_f2(&counts)])
}

fn c2_strata() -> Result<Vec<Check>> {
    let counts = count_white_enumerate(2)?;
    let mut out = checks::white_strata_f2(&counts);
    let small = count_white_in_subspace(&alb(2), Subspace::j10_abc())?;
    out.push(Check::new(
        "stratum-J10 by 2^10 generic enumeration",
        small == counts.n10,
        1 << 10,
        format!("generic {small}, packed {}", counts.n10),
    ));
    Ok(out)
}

fn c3_transitivity() -> Result<Vec<Check>> {
    Ok(vec![checks::transitivity_f2()?])
}

fn c4_delta() -> Result<Vec<Check>> {
    let mut out = checks::delta_preservation(&alb(2), DeltaMode::Exhaustive, SEED)?;
    for q in [3, 4, 5] {
        out.extend(checks::delta_preservation(&alb(q), DeltaMode::Sampled(1_000_000), SEED)?);
    }
    Ok(out)
}

fn c5_octonion_laws() -> Result<Vec<Check>> {
    let mut out = checks::octonion_laws(alb(2).octonions(), &Law::ALL, 0, SEED);
    for q in [3, 5] {
        out.extend(checks::octonion_laws(alb(q).octonions(), &Law::ALL, 100_000, SEED));
    }
    Ok(out)
}

fn c6_annihilators() -> Result<Vec<Check>> {
    Ok([2, 3].iter().map(|&q| checks::annihilator_dimensions(alb(q).octonions(), 0, SEED)).collect())
}

fn c7_radicals() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for q in [2, 3] {
        out.extend(checks::radicals(&alb(q), 100, SEED)?);
    }
    Ok(out)
}

fn c8_factorizations() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for q in [2, 3, 5] {
        out.extend(checks::factorizations(&alb(q), 1000, SEED)?);
    }
    Ok(out)
}

fn c9_commutators() -> Result<Vec<Check>> {
    let mut out = checks::commutators(&alb(2), 0, SEED);
    out.extend(checks::commutators(&alb(3), 0, SEED));
    Ok(out)
}

fn c10_f16() -> Result<Vec<Check>> {
    checks::f16_structure_f2()
}

fn c11_reflections() -> Result<Vec<Check>> {
    Ok(vec![checks::reflections(&alb(3), 0, SEED), checks::reflections(&alb(5), 1000, SEED)])
}

fn c12_reduction() -> Result<Vec<Check>> {
    Ok([2, 3, 5].iter().map(|&q| checks::reduction(&alb(q), 100_000, SEED)).collect())
}

fn c13_orders() -> Result<Vec<Check>> {
    checks::orders(16)
}

fn c14_polarization() -> Result<Vec<Check>> {
    Ok([3, 5, 7].iter().map(|&q| checks::polarization(&alb(q), 10_000, SEED)).collect())
}

const CRITERIA: [Criterion; 14] = [
    Criterion {
        id: 1,
        title: "white-vector count over GF(2) by brute force equals closed form and strata sum",
        tolerance: "exact",
        run: c1_white_count,
    },
    Criterion { id: 2, title: "per-stratum white counts over GF(2)", tolerance: "exact", run: c2_strata },
    Criterion {
        id: 3,
        title: "white-point orbit over GF(2) has 139503 points",
        tolerance: "exact",
        run: c3_transitivity,
    },
    Criterion {
        id: 4,
        title: "determinant preserved by all 12 generator kinds (GF(2) exhaustive, 10^6 samples for q = 3, 4, 5)",
        tolerance: "exact per case",
        run: c4_delta,
    },
    Criterion {
        id: 5,
        title: "octonion identities (GF(2) pairs and basis triples, 10^5 triples for q = 3, 5)",
        tolerance: "exact",
        run: c5_octonion_laws,
    },
    Criterion {
        id: 6,
        title: "annihilators of non-zero isotropic octonions are 4-dimensional over GF(2), GF(3)",
        tolerance: "exact",
        run: c6_annihilators,
    },
    Criterion {
        id: 7,
        title: "17-dimensional radicals and the GF(2) white/grey separation",
        tolerance: "exact",
        run: c7_radicals,
    },
    Criterion {
        id: 8,
        title: "P_u factorization and P_u P'_u P''_u = 1 (all u over GF(2), GF(3); 10^3 over GF(5))",
        tolerance: "exact",
        run: c8_factorizations,
    },
    Criterion {
        id: 9,
        title: "six commutator identities at every parameter over GF(2) and GF(3)",
        tolerance: "exact",
        run: c9_commutators,
    },
    Criterion {
        id: 10,
        title: "M'/L'' words over GF(2): 65536 distinct commuting maps, additive",
        tolerance: "exact",
        run: c10_f16,
    },
    Criterion {
        id: 11,
        title: "P_u on C is two reflections (all u over GF(3), 10^3 over GF(5))",
        tolerance: "exact",
        run: c11_reflections,
    },
    Criterion {
        id: 12,
        title: "reduction to canonical form, 10^5 vectors for q = 2, 3, 5",
        tolerance: "exact",
        run: c12_reduction,
    },
    Criterion { id: 13, title: "group-order identities for prime powers q <= 16", tolerance: "exact", run: c13_orders },
    Criterion {
        id: 14,
        title: "polarization identity, 10^4 cases for q = 3, 5, 7",
        tolerance: "exact",
        run: c14_polarization,
    },
];

fn main() -> ExitCode {
    let mut failed = Vec::new();
    for c in &CRITERIA {
        let started = Instant::now();
        let result = (c.run)();
        let secs = started.elapsed().as_secs_f64();
        match result {
            Ok(checks) => {
                let ok = !checks.is_empty() && checks.iter().all(|k| k.passed);
                let cases: u64 = checks.iter().map(|k| k.cases).sum();
                println!(
                    "{} [{:2}] {} (tolerance: {}; {} checks, {cases} cases, {secs:.1}s)",
                    if ok { "PASS" } else { "FAIL" },
                    c.id,
                    c.title,
                    c.tolerance,
                    checks.len()
                );
                for k in &checks {
                    println!("       {} {}: {}", if k.passed { "ok  " } else { "FAIL" }, k.name, k.detail);
                }
                if !ok {
                    failed.push(c.id);
                }
            }
            Err(e) => {
                println!("FAIL [{:2}] {} (tolerance: {}): error: {e}", c.id, c.title, c.tolerance);
                failed.push(c.id);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", CRITERIA.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
