//! Named verification checks. Each returns one or more [`Check`] records;
//! the suites and the acceptance harness call these with their own scopes.

use std::collections::HashSet;

use albert_e6_core::albert::{Albert, AlbertVector, Color, Subspace};
use albert_e6_core::error::Result;
use albert_e6_core::gf::{prime_powers_up_to, FieldElement, Gf};
use albert_e6_core::octonion::{Octonion, Octonions, E_1, E_M1};
use albert_e6_core::orbits::{
    count_white_formula, count_white_points, count_white_stratified, order_e6, order_se6, reduce_to_canonical,
    stabilizer_order_consistency, CanonicalKind,
};
use albert_e6_core::packed::{pack, pack_octonion, unpack, F2Tables, PackedMap, SPACE_SIZE};
use albert_e6_core::se6::{
    apply_generator, commutator_identity_holds, generator_matrix, q8_reflection_check, word_to_map, GeneratorKind,
    GeneratorSpec, COMMUTATOR_TRIPLES,
};
use num_bigint::BigUint;
use rayon::prelude::*;

use crate::bfs::{full_generating_set, pack_generators, packed_orbit, white_stabiliser_generators};
use crate::enumerate::{count_white_enumerate, preserves_delta, preserves_delta_packed, DeltaMode, WhiteCounts};
use crate::sample::sampled;
use crate::text::{format_octonion, format_vector};

/// Largest parameter space walked exhaustively by the generic checks.
pub const EXHAUSTIVE_OCTONIONS: usize = 6561;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Number of cases examined.
    pub cases: u64,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, cases: u64, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, cases, detail: detail.into() }
    }

    fn counted(name: impl Into<String>, cases: u64, failures: u64, first: Option<String>) -> Self {
        let detail = match first {
            None => format!("{cases} cases, 0 failures"),
            Some(c) => format!("{cases} cases, {failures} failures, first: {c}"),
        };
        Check::new(name, failures == 0, cases, detail)
    }
}

/// Checks `pred` on every item, in parallel.
fn over_all<T: Sync>(name: &str, items: &[T], show: impl Fn(&T) -> String, pred: impl Fn(&T) -> bool + Sync) -> Check {
    let failures = items.par_iter().filter(|x| !pred(x)).count() as u64;
    let first = (failures > 0).then(|| items.iter().find(|x| !pred(x)).map(&show)).flatten();
    Check::counted(name, items.len() as u64, failures, first)
}

fn field_tag(f: &Gf) -> String {
    format!("GF({})", f.order())
}

fn all_or_sampled(o: &Octonions, samples: u64, seed: u64, filter: impl Fn(&Octonion) -> bool + Sync) -> Vec<Octonion> {
    let q = o.field().order();
    if q.pow(8) <= EXHAUSTIVE_OCTONIONS {
        return o.all().filter(|x| filter(x)).collect();
    }
    let mut s = crate::sample::Sampler::new(seed, u64::MAX);
    let mut out = Vec::with_capacity(samples as usize);
    while (out.len() as u64) < samples {
        let x = s.octonion(o);
        if filter(&x) {
            out.push(x);
        }
    }
    out
}

fn norm_one_params(o: &Octonions, samples: u64, seed: u64) -> Vec<Octonion> {
    let q = o.field().order();
    if q.pow(8) <= EXHAUSTIVE_OCTONIONS {
        let one = o.field().one();
        return o.all().filter(|u| o.norm(u) == one).collect();
    }
    let mut s = crate::sample::Sampler::new(seed, u64::MAX);
    (0..samples).map(|_| s.norm_one(o)).collect()
}

// ---------------------------------------------------------------- counting

/// Brute-force GF(2) count against the closed form and the stratum formulas.
pub fn white_count_f2(counts: &WhiteCounts) -> Check {
    let formula = count_white_formula(2).expect("prime power");
    let strata = count_white_stratified(2).expect("prime power");
    let total = BigUint::from(counts.total());
    let passed = total == formula && total == strata.total;
    Check::new(
        "white-count-enumerated",
        passed,
        SPACE_SIZE as u64 - 1,
        format!(
            "enumerated {} of {} non-zero vectors; closed form {formula}; strata sum {}+{}+{} = {}",
            counts.total(),
            SPACE_SIZE - 1,
            strata.n10,
            strata.n26_minus_10,
            strata.outside,
            strata.total
        ),
    )
}

/// Each enumerated GF(2) stratum against its own formula.
pub fn white_strata_f2(counts: &WhiteCounts) -> Vec<Check> {
    let s = count_white_stratified(2).expect("prime power");
    [
        ("stratum-J10", counts.n10, s.n10, "(q^5-1)(q^4+1)"),
        ("stratum-J26-minus-J10", counts.n26_minus_10, s.n26_minus_10, "q^5(q^8-1)(q^3+1)"),
        ("stratum-outside-J26", counts.outside, s.outside, "q^16(q-1)"),
    ]
    .into_iter()
    .map(|(name, got, want, formula)| {
        Check::new(name, BigUint::from(got) == want, 1, format!("enumerated {got}, {formula} = {want}"))
    })
    .collect()
}

/// Closed-form identities between the white counts at `q`.
pub fn white_count_formulas(q: u32) -> Result<Check> {
    let formula = count_white_formula(q)?;
    let strata = count_white_stratified(q)?;
    let points = count_white_points(q)?;
    let passed = strata.total == formula && &points * BigUint::from(q - 1) == formula;
    Ok(Check::new(
        format!("white-count-formulas q={q}"),
        passed,
        1,
        format!("closed form {formula}; strata total {}; points {points}", strata.total),
    ))
}

/// Enumeration, closed form and strata at `q`; brute force only at `q = 2`.
pub fn white_counts(q: u32) -> Result<Vec<Check>> {
    let mut out = vec![white_count_formulas(q)?];
    if q == 2 {
        let counts = count_white_enumerate(2)?;
        out.push(white_count_f2(&counts));
        out.extend(white_strata_f2(&counts));
    }
    Ok(out)
}

// ---------------------------------------------------------------- orbits

/// Orbit of `<(0,0,1|0;0;0)>` under every unipotent generator, `delta` and `tau`.
pub fn transitivity_f2() -> Result<Check> {
    let j = Albert::new(Gf::from_order(2)?);
    let gens = pack_generators(&j, &full_generating_set(j.octonions()))?;
    let start = AlbertVector::diagonal(FieldElement::ZERO, FieldElement::ZERO, FieldElement::ONE);
    let orbit = packed_orbit(&gens, pack(&start));
    let points = count_white_points(2)?;
    Ok(Check::new(
        "white-point-transitivity",
        BigUint::from(orbit.size()) == points,
        gens.len() as u64,
        format!(
            "{} generators, orbit of {} points in {} levels, expected {points}",
            gens.len(),
            orbit.size(),
            orbit.levels()
        ),
    ))
}

/// Orbits of the stabiliser of `X = <(0,0,1|0;0;0)>`: from `<(0,0,0|e-1;0;0)>`
/// they cover the white points of `J_17^{cAB}` other than `X`, and from
/// `<(1,0,0|0;0;0)>` the white points outside `J_17^{cAB}`.
pub fn stabiliser_transitivity_f2() -> Result<Vec<Check>> {
    let j = Albert::new(Gf::from_order(2)?);
    let gens = pack_generators(&j, &white_stabiliser_generators(j.octonions()))?;
    let x = pack(&AlbertVector::diagonal(FieldElement::ZERO, FieldElement::ZERO, FieldElement::ONE));
    let inner_start = pack(&AlbertVector { oct_a: Octonion::basis(E_M1), ..AlbertVector::ZERO });
    let outer_start = pack(&AlbertVector::diagonal(FieldElement::ONE, FieldElement::ZERO, FieldElement::ZERO));
    let inner = packed_orbit(&gens, inner_start);
    let outer = packed_orbit(&gens, outer_start);
    let t = F2Tables::new();
    let j17 = Subspace::j17_cab().mask();
    // (white in J17 other than X, white outside J17, misplaced)
    let (n_in, n_out, bad) = (1..SPACE_SIZE)
        .into_par_iter()
        .filter(|&v| t.white_conditions(v))
        .fold(
            || (0u64, 0u64, 0u64),
            |(a, b, c), v| {
                let want_inner = v & !j17 == 0 && v != x;
                let want_outer = v & !j17 != 0;
                let ok = inner.contains(v) == want_inner && outer.contains(v) == want_outer;
                (a + want_inner as u64, b + want_outer as u64, c + !ok as u64)
            },
        )
        .reduce(|| (0, 0, 0), |p, q| (p.0 + q.0, p.1 + q.1, p.2 + q.2));
    let gens_note = format!("{} stabiliser generators", gens.len());
    Ok(vec![
        Check::new(
            "stabiliser-orbit-inside-J17",
            inner.size() == n_in && bad == 0,
            n_in,
            format!("{gens_note}; orbit {} points, white points of J17 other than X: {n_in}", inner.size()),
        ),
        Check::new(
            "stabiliser-orbit-outside-J17",
            outer.size() == n_out && bad == 0,
            n_out,
            format!("{gens_note}; orbit {} points, white points outside J17: {n_out}; misplaced {bad}", outer.size()),
        ),
    ])
}

// ---------------------------------------------------------------- generators

/// A fixed non-trivial parameter for each generator kind.
pub fn fixed_parameter(j: &Albert, kind: GeneratorKind) -> GeneratorSpec {
    let o = j.octonions();
    let f = j.field();
    if !kind.has_param() {
        return GeneratorSpec { kind, param: None };
    }
    // N(lambda e0 + e-0 + e1) = lambda since the e-1 coordinate is zero
    let with_e1 = |lambda| o.add(&o.with_norm(lambda), &Octonion::basis(E_1));
    let x = match kind {
        GeneratorKind::Pu | GeneratorKind::Pup | GeneratorKind::Pupp => with_e1(f.one()),
        GeneratorKind::PScale => with_e1(f.element(f.order() as u32 - 1).expect("q - 1 < q")),
        _ => {
            let mut x = Octonion::basis(E_M1);
            x.0[2] = f.one();
            x.0[4] = f.element(f.order() as u32 - 1).expect("q - 1 < q");
            x.0[7] = f.one();
            x
        }
    };
    GeneratorSpec::new(kind, x)
}

/// Determinant preservation for one representative of every generator kind.
pub fn delta_preservation(j: &Albert, mode: DeltaMode, seed: u64) -> Result<Vec<Check>> {
    let f = j.field();
    let packed = (mode == DeltaMode::Exhaustive).then(F2Tables::new);
    GeneratorKind::ALL
        .iter()
        .map(|&kind| {
            let g = fixed_parameter(j, kind);
            let m = generator_matrix(j, &g)?;
            let r = match &packed {
                Some(t) => preserves_delta_packed(t, &PackedMap::from_map(f, &m)?),
                None => preserves_delta(j, &m, mode, seed ^ kind as u64)?,
            };
            let scope = match mode {
                DeltaMode::Exhaustive => "exhaustive",
                DeltaMode::Sampled(_) => "sampled",
            };
            let param = g.param.map(|x| format!(" at {}", format_octonion(f, &x))).unwrap_or_default();
            Ok(Check::counted(
                format!("delta-preserved {} {} {scope}", field_tag(f), kind.name()),
                r.checked,
                r.failures,
                r.counterexample.map(|v| format!("{}{param}", format_vector(f, &v))),
            ))
        })
        .collect()
}

// ---------------------------------------------------------------- octonions

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Law {
    Composition,
    Quadratic,
    Conjugation,
    Moufang,
    Alternative,
    TraceAssociativity,
}

impl Law {
    pub const ALL: [Law; 6] =
        [Law::Composition, Law::Quadratic, Law::Conjugation, Law::Moufang, Law::Alternative, Law::TraceAssociativity];

    pub fn name(self) -> &'static str {
        match self {
            Law::Composition => "composition",
            Law::Quadratic => "quadratic",
            Law::Conjugation => "conjugation",
            Law::Moufang => "moufang",
            Law::Alternative => "alternative",
            Law::TraceAssociativity => "trace-associativity",
        }
    }

    /// Whether the law involves at most two octonions.
    fn is_binary(self) -> bool {
        matches!(self, Law::Composition | Law::Quadratic | Law::Conjugation | Law::Alternative)
    }

    pub fn holds(self, o: &Octonions, x: &Octonion, y: &Octonion, z: &Octonion) -> bool {
        let f = o.field();
        let m = |a: &Octonion, b: &Octonion| o.mul(a, b);
        match self {
            Law::Composition => o.norm(&m(x, y)) == f.mul(o.norm(x), o.norm(y)),
            Law::Quadratic => {
                let lhs = o.add(&o.sub(&m(x, x), &o.scale(o.trace(x), x)), &o.scalar(o.norm(x)));
                lhs.is_zero()
            }
            Law::Conjugation => {
                o.conj(&m(x, y)) == m(&o.conj(y), &o.conj(x))
                    && o.conj(&o.conj(x)) == *x
                    && o.add(x, &o.conj(x)) == o.scalar(o.trace(x))
                    && m(x, &o.conj(x)) == o.scalar(o.norm(x))
                    && o.trace(&m(x, y)) == o.trace(&m(y, x))
            }
            Law::Moufang => {
                m(x, &m(y, &m(x, z))) == m(&m(&m(x, y), x), z)
                    && m(&m(&m(z, x), y), x) == m(z, &m(x, &m(y, x)))
                    && m(&m(x, y), &m(z, x)) == m(&m(x, &m(y, z)), x)
            }
            Law::Alternative => m(&m(x, x), y) == m(x, &m(x, y)) && m(&m(y, x), x) == m(y, &m(x, x)),
            Law::TraceAssociativity => o.trace(&m(&m(x, y), z)) == o.trace(&m(x, &m(y, z))),
        }
    }
}

/// Checks `laws` on all basis triples, on every pair (with the third argument
/// running over the basis) when `q = 2`, and on `samples` random triples.
pub fn octonion_laws(o: &Octonions, laws: &[Law], samples: u64, seed: u64) -> Vec<Check> {
    let f = o.field();
    let tag = field_tag(f);
    let basis: Vec<Octonion> = (0..8).map(Octonion::basis).collect();
    let show3 = |t: &(Octonion, Octonion, Octonion)| {
        format!("({}, {}, {})", format_octonion(f, &t.0), format_octonion(f, &t.1), format_octonion(f, &t.2))
    };
    let mut out = Vec::new();
    for &law in laws {
        let triples: Vec<(Octonion, Octonion, Octonion)> =
            (0..512).map(|n| (basis[n & 7], basis[n >> 3 & 7], basis[n >> 6])).collect();
        out.push(over_all(&format!("{} {tag} basis triples", law.name()), &triples, show3, |(x, y, z)| {
            law.holds(o, x, y, z)
        }));
        if f.order() == 2 {
            let all: Vec<Octonion> = o.all().collect();
            let scope = if law.is_binary() { "all pairs" } else { "all pairs x basis" };
            let failures: u64 = all
                .par_iter()
                .map(|x| {
                    all.iter().map(|y| basis.iter().filter(|z| !law.holds(o, x, y, z)).count() as u64).sum::<u64>()
                })
                .sum();
            let cases = (all.len() * all.len() * basis.len()) as u64;
            out.push(Check::counted(format!("{} {tag} {scope}", law.name()), cases, failures, None));
        }
        if samples > 0 {
            let (failures, first) = sampled(samples, seed ^ law as u64, |s| {
                let t = (s.octonion(o), s.octonion(o), s.octonion(o));
                (!law.holds(o, &t.0, &t.1, &t.2)).then_some(t)
            });
            out.push(Check::counted(
                format!("{} {tag} random triples", law.name()),
                samples,
                failures,
                first.as_ref().map(show3),
            ));
        }
    }
    out
}

/// `dim(Ox) = dim(xO) = 4` for every non-zero isotropic `x` (sampled above
/// the exhaustive budget).
pub fn annihilator_dimensions(o: &Octonions, samples: u64, seed: u64) -> Check {
    let f = o.field();
    let xs = all_or_sampled(o, samples, seed, |x| !x.is_zero() && o.norm(x).is_zero());
    let rank = |m: albert_e6_core::linalg::Matrix| m.rank(f);
    over_all(
        &format!("annihilator-dimensions {}", field_tag(f)),
        &xs,
        |x| format_octonion(f, x),
        |x| rank(o.left_mul_matrix(x)) == 4 && rank(o.right_mul_matrix(x)) == 4,
    )
}

// ---------------------------------------------------------------- radicals

/// 17-dimensional radicals of random white vectors, the two described
/// radicals, and over GF(2) the white/grey separation by the shifted form.
pub fn radicals(j: &Albert, samples: u64, seed: u64) -> Result<Vec<Check>> {
    let f = j.field();
    let o = j.octonions();
    let tag = field_tag(f);
    let (failures, first) = sampled(samples, seed, |s| {
        let w = s.white_vector(j);
        let dim = j.radical_17(&w).map(|r| r.len()).unwrap_or(0);
        (dim != 17).then(|| format!("{} has radical of dimension {dim}", format_vector(f, &w)))
    });
    let mut out = vec![Check::counted(format!("radical-dimension {tag} random white"), samples, failures, first)];

    // <(0,0,1|0;0;0)>: the radical is J_17^{cAB}
    let (z, one) = (f.zero(), f.one());
    let rad = j.radical_17(&AlbertVector::diagonal(z, z, one))?;
    let j17 = Subspace::j17_cab();
    out.push(Check::new(
        format!("radical-of-(0,0,1) {tag}"),
        rad.len() == 17 && rad.iter().all(|v| j17.contains(v)),
        1,
        format!("dimension {}, contained in J17(cAB): {}", rad.len(), rad.iter().all(|v| j17.contains(v))),
    ));

    // <(0,0,0|0;0;e1)>: {(a,b,0|A,B,C) : e1 A = B e1 = 0, T(e1 conj C) = 0}
    let e1 = Octonion::basis(E_1);
    let rad = j.radical_17(&AlbertVector { oct_c: e1, ..AlbertVector::ZERO })?;
    let inside = rad.iter().all(|v| {
        v.c.is_zero()
            && o.mul(&e1, &v.oct_a).is_zero()
            && o.mul(&v.oct_b, &e1).is_zero()
            && o.trace_of_product(&e1, &o.conj(&v.oct_c)).is_zero()
    });
    out.push(Check::new(
        format!("radical-of-(0,0,0|0;0;e1) {tag}"),
        rad.len() == 17 && inside,
        1,
        format!(
            "dimension {} (described space has 2+4+4+7 = 17), all basis vectors satisfy the description: {inside}",
            rad.len()
        ),
    ));

    if f.order() == 2 {
        let white = j.shift_radical_f2(&AlbertVector::diagonal(z, z, one))?.len();
        let grey = j.shift_radical_f2(&AlbertVector::diagonal(z, one, one))?.len();
        out.push(Check::new(
            "shifted-radical GF(2) white/grey",
            white == 17 && grey == 9,
            2,
            format!("white {white}, grey {grey}"),
        ));
    }
    Ok(out)
}

// ---------------------------------------------------------------- matrices

/// `P_u = M_{u-1} L_1 M_{u^-1 - 1} L_{-u}` and `P_u P'_u P''_u = 1`.
pub fn factorizations(j: &Albert, samples: u64, seed: u64) -> Result<Vec<Check>> {
    let o = j.octonions();
    let f = j.field();
    let tag = field_tag(f);
    let us = norm_one_params(o, samples, seed);
    let one = Octonion::one();
    let product = |u: &Octonion| -> Result<bool> {
        let uinv = o.inverse(u)?;
        let word = [
            GeneratorSpec::m(o.sub(u, &one)),
            GeneratorSpec::l(one),
            GeneratorSpec::m(o.sub(&uinv, &one)),
            GeneratorSpec::l(o.neg(u)),
        ];
        Ok(word_to_map(j, &word)? == generator_matrix(j, &GeneratorSpec::pu(*u))?)
    };
    let triple = |u: &Octonion| -> Result<bool> {
        Ok(word_to_map(j, &[GeneratorSpec::pu(*u), GeneratorSpec::pup(*u), GeneratorSpec::pupp(*u)])?.is_identity())
    };
    let show = |u: &Octonion| format_octonion(f, u);
    Ok(vec![
        over_all(&format!("Pu-factorization {tag}"), &us, show, |u| product(u).unwrap_or(false)),
        over_all(&format!("Pu-Pup-Pupp-identity {tag}"), &us, show, |u| triple(u).unwrap_or(false)),
    ])
}

/// The six commutator identities as matrix equations.
pub fn commutators(j: &Albert, samples: u64, seed: u64) -> Vec<Check> {
    let o = j.octonions();
    let f = j.field();
    let xs = all_or_sampled(o, samples, seed, |_| true);
    COMMUTATOR_TRIPLES
        .iter()
        .map(|&t| {
            let name = format!("commutator {}-{}-{} {}", t.0.name(), t.1.name(), t.2.name(), field_tag(f));
            over_all(&name, &xs, |x| format_octonion(f, x), |x| commutator_identity_holds(j, t, x).unwrap_or(false))
        })
        .collect()
}

/// Over GF(2): the words `M'_x L''_y` give 65536 distinct maps, the
/// generators commute pairwise and both families are additive.
pub fn f16_structure_f2() -> Result<Vec<Check>> {
    let j = Albert::new(Gf::from_order(2)?);
    let o = j.octonions();
    let all: Vec<Octonion> = o.all().collect();
    let mp = pack_generators(&j, &all.iter().map(|&x| GeneratorSpec::mp(x)).collect::<Vec<_>>())?;
    let lpp = pack_generators(&j, &all.iter().map(|&x| GeneratorSpec::lpp(x)).collect::<Vec<_>>())?;
    let rows = |a: &PackedMap, b: &PackedMap| -> [u32; 27] { std::array::from_fn(|i| b.apply(a.rows()[i])) };
    let pairs: Vec<(usize, usize)> = (0..256).flat_map(|x| (0..256).map(move |y| (x, y))).collect();

    let distinct: HashSet<[u32; 27]> = pairs.par_iter().map(|&(x, y)| rows(&mp[x], &lpp[y])).collect();
    let commuting = pairs
        .par_iter()
        .filter(|&&(x, y)| {
            rows(&mp[x], &lpp[y]) != rows(&lpp[y], &mp[x])
                || rows(&mp[x], &mp[y]) != rows(&mp[y], &mp[x])
                || rows(&lpp[x], &lpp[y]) != rows(&lpp[y], &lpp[x])
        })
        .count() as u64;
    let index = |x: &Octonion| pack_octonion(x) as usize;
    let additive = pairs
        .par_iter()
        .filter(|&&(x, y)| {
            let s = index(&o.add(&all[x], &all[y]));
            rows(&mp[x], &mp[y]) != *mp[s].rows() || rows(&lpp[x], &lpp[y]) != *lpp[s].rows()
        })
        .count() as u64;
    // direct spot check on products of the 65536 elements
    let elems: Vec<PackedMap> = (0..256)
        .step_by(17)
        .flat_map(|x| (0..256).step_by(13).map(move |y| (x, y)))
        .map(|(x, y)| PackedMap::from_rows(rows(&mp[x], &lpp[y])))
        .collect();
    let direct = elems
        .par_iter()
        .map(|a| elems.iter().filter(|b| a.then(b).rows() != b.then(a).rows()).count() as u64)
        .sum::<u64>();
    Ok(vec![
        Check::new(
            "F16 distinct maps",
            distinct.len() == 65536,
            65536,
            format!("{} distinct maps among the words M'_x L''_y", distinct.len()),
        ),
        Check::counted("F16 generators commute", 3 * 65536, commuting, None),
        Check::counted("F16 additivity", 2 * 65536, additive, None),
        Check::counted("F16 sampled elements commute", (elems.len() * elems.len()) as u64, direct, None),
    ])
}

/// Additivity and commuting of the `M'`, `L''` families on sampled pairs.
pub fn f16_structure_sampled(j: &Albert, samples: u64, seed: u64) -> Result<Vec<Check>> {
    let o = j.octonions();
    let f = j.field();
    let tag = field_tag(f);
    let (fail_add, first_add) = sampled(samples, seed, |s| {
        let (x, y) = (s.octonion(o), s.octonion(o));
        let ok = [GeneratorKind::Mp, GeneratorKind::Lpp].iter().all(|&k| {
            word_to_map(j, &[GeneratorSpec::new(k, x), GeneratorSpec::new(k, y)]).ok()
                == generator_matrix(j, &GeneratorSpec::new(k, o.add(&x, &y))).ok()
        });
        (!ok).then(|| format!("x={}, y={}", format_octonion(f, &x), format_octonion(f, &y)))
    });
    let (fail_comm, first_comm) = sampled(samples, seed ^ 1, |s| {
        let (x, y) = (GeneratorSpec::mp(s.octonion(o)), GeneratorSpec::lpp(s.octonion(o)));
        let ok = word_to_map(j, &[x, y]).ok() == word_to_map(j, &[y, x]).ok();
        (!ok).then(|| crate::text::format_word(f, &[x, y]))
    });
    Ok(vec![
        Check::counted(format!("F16 additivity {tag} sampled"), samples, fail_add, first_add),
        Check::counted(format!("F16 commuting {tag} sampled"), samples, fail_comm, first_comm),
    ])
}

/// `C -> conj(u) C conj(u)` equals the reflection in `u` then in `1`.
pub fn reflections(j: &Albert, samples: u64, seed: u64) -> Check {
    let f = j.field();
    let us = norm_one_params(j.octonions(), samples, seed);
    over_all(
        &format!("P_u-as-two-reflections {}", field_tag(f)),
        &us,
        |u| format_octonion(f, u),
        |u| q8_reflection_check(j, u).unwrap_or(false),
    )
}

// ---------------------------------------------------------------- reduction

/// Reduction of random non-zero vectors: the word reaches the representative,
/// `delta` is constant along the word, colour is preserved and a black
/// representative carries `delta(X)`.
pub fn reduction(j: &Albert, samples: u64, seed: u64) -> Check {
    let f = j.field();
    let (failures, first) = sampled(samples, seed, |s| {
        let x = s.nonzero_vector(j);
        let ok = (|| -> Result<bool> {
            let cf = reduce_to_canonical(j, &x)?;
            let d = j.delta(&x);
            let mut v = x;
            for g in &cf.word {
                v = apply_generator(j, g, &v)?;
                if j.delta(&v) != d {
                    return Ok(false);
                }
            }
            let black_ok = match cf.kind {
                CanonicalKind::Black(l) => l == d,
                _ => true,
            };
            Ok(v == cf.representative() && j.classify(&x)? == cf.kind.color() && black_ok)
        })()
        .unwrap_or(false);
        (!ok).then(|| format_vector(f, &x))
    });
    Check::counted(format!("reduction {}", field_tag(f)), samples, failures, first)
}

/// Colour counts of sampled reductions, for reports.
pub fn reduction_colours(j: &Albert, samples: u64, seed: u64) -> [u64; 3] {
    let mut counts = [0u64; 3];
    let mut s = crate::sample::Sampler::new(seed, 0);
    for _ in 0..samples {
        let x = s.nonzero_vector(j);
        let c = j.classify_fast(&x).expect("non-zero");
        counts[match c {
            Color::White => 0,
            Color::Grey => 1,
            Color::Black => 2,
        }] += 1;
    }
    counts
}

// ---------------------------------------------------------------- orders

/// Orbit-stabiliser consistency and the `E6`/`SE6` ratio for every prime
/// power up to `limit`.
pub fn orders(limit: u32) -> Result<Vec<Check>> {
    prime_powers_up_to(limit)
        .into_iter()
        .map(|q| {
            let consistent = stabilizer_order_consistency(q)?;
            let gcd = if (q - 1) % 3 == 0 { 3u32 } else { 1 };
            let se6 = order_se6(q)?;
            let e6 = order_e6(q)?;
            let ratio_ok = &e6 * BigUint::from(gcd) == se6;
            Ok(Check::new(
                format!("orders q={q}"),
                consistent && ratio_ok,
                1,
                format!("|SE6| = {se6}; |E6| = |SE6|/{gcd}; stabiliser identity {consistent}"),
            ))
        })
        .collect()
}

// ---------------------------------------------------------------- forms

/// The four-term determinant combination reproduces the mixed form.
pub fn polarization(j: &Albert, samples: u64, seed: u64) -> Check {
    let f = j.field();
    let tag = field_tag(f);
    if f.order() < 3 {
        return Check::new(format!("polarization {tag}"), true, 0, "not applicable: needs alpha outside {0, 1}");
    }
    let (failures, first) = sampled(samples, seed, |s| {
        let (x, y) = (s.vector(j), s.vector(j));
        let alpha = loop {
            let a = s.element(f);
            if !a.is_zero() && a != f.one() {
                break a;
            }
        };
        (!j.polarization_check(&x, &y, alpha).unwrap_or(false))
            .then(|| format!("X={}, Y={}, alpha={}", format_vector(f, &x), format_vector(f, &y), f.format(alpha)))
    });
    Check::counted(format!("polarization {tag}"), samples, failures, first)
}

/// Exhaustive white-vector test against the definition on `J_10^{abC}`.
pub fn whiteness_lemma_on_j10(j: &Albert) -> Result<Check> {
    let mut cases = 0;
    let mut failures = 0;
    crate::enumerate::for_each_in_subspace(j, Subspace::j10_abc(), |v| {
        if !v.is_zero() {
            cases += 1;
            if j.whiteness_conditions(v).expect("non-zero") != j.is_white_by_definition(v) {
                failures += 1;
            }
        }
    })?;
    Ok(Check::counted(format!("whiteness-lemma {} J10", field_tag(j.field())), cases, failures, None))
}

/// Packed whiteness against the generic test on sampled vectors.
pub fn packed_kernels_agree(samples: u64, seed: u64) -> Result<Check> {
    let j = Albert::new(Gf::from_order(2)?);
    let t = F2Tables::new();
    let (failures, first) = sampled(samples, seed, |s| {
        let v = (s.below(SPACE_SIZE as u64 - 1) + 1) as u32;
        let x = unpack(v);
        let ok = t.white_conditions(v) == j.whiteness_conditions(&x).unwrap_or(false)
            && t.delta(v) as u32 == j.delta(&x).index();
        (!ok).then_some(v)
    });
    Ok(Check::counted("packed-kernels GF(2)", samples, failures, first.map(|v| format!("{v:#x}"))))
}
