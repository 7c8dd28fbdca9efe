use albert_e6::text::{
    format_element, format_octonion, format_vector, format_word, parse_element, parse_field, parse_octonion,
    parse_vector, parse_word,
};
use albert_e6_core::albert::{Albert, AlbertVector};
use albert_e6_core::gf::{FieldElement, Gf};
use albert_e6_core::octonion::Octonion;
use albert_e6_core::se6::{GeneratorKind, GeneratorSpec};
use proptest::prelude::*;

const ORDERS: [u32; 7] = [2, 3, 4, 5, 8, 9, 25];

fn field() -> impl Strategy<Value = Gf> {
    prop::sample::select(ORDERS.to_vec()).prop_map(|q| Gf::from_order(q).unwrap())
}

fn elem(f: &Gf, raw: u32) -> FieldElement {
    f.element(raw % f.order() as u32).unwrap()
}

fn oct(f: &Gf, raw: &[u32]) -> Octonion {
    Octonion(std::array::from_fn(|i| elem(f, raw[i])))
}

/// Raw coordinates with many zeros, so `0` octonions show up often.
fn raw(n: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(prop_oneof![Just(0u32), any::<u32>()], n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn element_round_trip(f in field(), x in any::<u32>()) {
        let x = elem(&f, x);
        prop_assert_eq!(parse_element(&f, &format_element(&f, x)).unwrap(), x);
    }

    #[test]
    fn octonion_round_trip(f in field(), r in raw(8)) {
        let o = Albert::new(f.clone());
        let x = oct(&f, &r);
        let s = format_octonion(&f, &x);
        prop_assert_eq!(parse_octonion(o.octonions(), &s).unwrap(), x);
    }

    #[test]
    fn vector_round_trip(f in field(), r in raw(27)) {
        let j = Albert::new(f.clone());
        let c: Vec<FieldElement> = r.iter().map(|&x| elem(&f, x)).collect();
        let v = AlbertVector::from_coords(&c);
        let s = format_vector(&f, &v);
        prop_assert_eq!(parse_vector(&j, &s).unwrap(), v);
    }

    #[test]
    fn word_round_trip(f in field(), picks in prop::collection::vec((0usize..8, raw(8)), 0..6)) {
        let j = Albert::new(f.clone());
        let o = j.octonions();
        let word: Vec<GeneratorSpec> = picks
            .iter()
            .map(|(k, r)| match k {
                6 => GeneratorSpec::TAU,
                7 => GeneratorSpec::DELTA,
                _ => GeneratorSpec::new(GeneratorKind::UNIPOTENT[*k], oct(&f, r)),
            })
            .collect();
        let s = format_word(&f, &word);
        prop_assert_eq!(parse_word(o, &s).unwrap(), word);
    }

    #[test]
    fn truncated_vectors_are_rejected_with_position(f in field(), r in raw(27), cut in 0usize..64) {
        let j = Albert::new(f.clone());
        let c: Vec<FieldElement> = r.iter().map(|&x| elem(&f, x)).collect();
        let s = format_vector(&f, &AlbertVector::from_coords(&c));
        let cut = cut % s.len();
        let err = parse_vector(&j, &s[..cut]).unwrap_err();
        prop_assert!(err.position <= cut);
    }
}

#[test]
fn field_spellings_agree() {
    for (a, b) in [("9", "3^2"), ("q=8", "2^3"), ("q=25", "q=5^2")] {
        assert_eq!(parse_field(a, None).unwrap(), parse_field(b, None).unwrap());
    }
    assert!(parse_field("6", None).is_err());
    assert!(parse_field("512", None).is_err());
    assert!(parse_field("4", Some("[1,1,1]")).is_ok());
    assert!(parse_field("4", Some("[1,0,1]")).is_err());
}

#[test]
fn named_and_listed_octonions_agree() {
    let j = Albert::new(Gf::from_order(3).unwrap());
    let o = j.octonions();
    let named = parse_octonion(o, "2*e-1 + ew - e1 + 1").unwrap();
    let listed = parse_octonion(o, "[2,0,1,1,1,0,0,2]").unwrap();
    assert_eq!(named, listed);
}
