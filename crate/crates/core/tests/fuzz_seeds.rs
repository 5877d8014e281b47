//! Replays the checked-in fuzz corpus through the same properties the fuzz
//! targets assert.

use std::fs;
use std::path::PathBuf;

use terwilliger::codes::{parse_generator_matrix, InnerProduct};
use terwilliger::exactnum::CycNum;
use terwilliger::matgroup::{generate_group, parse_generator_file};

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<(String, Vec<u8>)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let e = e.unwrap();
            (
                e.file_name().to_string_lossy().into_owned(),
                fs::read(e.path()).unwrap(),
            )
        })
        .collect();
    out.sort();
    assert!(!out.is_empty());
    out
}

#[test]
fn cycnum_seeds_round_trip() {
    let mut parsed = 0;
    for (name, data) in seeds("cycnum_parse") {
        let text = std::str::from_utf8(&data).unwrap();
        if let Ok(v) = CycNum::parse(text) {
            assert_eq!(CycNum::parse(&v.to_text()).unwrap(), v, "{name}");
            parsed += 1;
        }
    }
    assert!(parsed >= 5);
}

#[test]
fn generator_seeds() {
    let mut orders = Vec::new();
    for (name, data) in seeds("generator_file") {
        let Ok(gens) = parse_generator_file(std::str::from_utf8(&data).unwrap()) else {
            continue;
        };
        if let Ok(g) = generate_group(&gens, 64) {
            assert_eq!(
                g.conjugacy_classes().sizes().iter().sum::<usize>(),
                g.order(),
                "{name}"
            );
            orders.push((name, g.order()));
        }
    }
    assert_eq!(
        orders,
        [
            ("group_four".to_string(), 12),
            ("group_one".to_string(), 16),
            ("identity".to_string(), 1)
        ]
    );
}

#[test]
fn code_matrix_seeds() {
    let mut ok = 0;
    for (name, data) in seeds("code_matrix") {
        let (&selector, rest) = data.split_first().unwrap();
        let q = [2u8, 3, 4][usize::from(selector % 3)];
        let Ok(code) = parse_generator_matrix(std::str::from_utf8(rest).unwrap(), q) else {
            continue;
        };
        let dual = code.dual(InnerProduct::Euclidean);
        assert_eq!(code.dimension() + dual.dimension(), code.length(), "{name}");
        let dist = code.weight_distribution().unwrap();
        assert_eq!(
            dist.iter().sum::<u64>(),
            u64::from(q).pow(code.dimension() as u32)
        );
        ok += 1;
    }
    assert_eq!(ok, 4);
}

mod random_inputs {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(512))]

        #[test]
        fn cycnum_text(text in "[-+*/^() 0-9ziwsqrt23]{0,40}") {
            if let Ok(v) = CycNum::parse(&text) {
                prop_assert_eq!(CycNum::parse(&v.to_text()).unwrap(), v);
            }
        }

        #[test]
        fn generator_text(text in r#"\[\[\[("[-0-9/*a-z ]{0,8}",?){0,2}\],?\[("[-0-9/*a-z ]{0,8}",?){0,2}\]\]\]"#) {
            if let Ok(gens) = parse_generator_file(&text) {
                if let Ok(g) = generate_group(&gens, 32) {
                    prop_assert_eq!(g.conjugacy_classes().sizes().iter().sum::<usize>(), g.order());
                }
            }
        }

        #[test]
        fn code_text(q in prop::sample::select(vec![2u8, 3, 4]), text in r"\[(\[([-0-9,\[\] ]){0,12}\],?){0,4}\]") {
            if let Ok(code) = parse_generator_matrix(&text, q) {
                let dual = code.dual(InnerProduct::Euclidean);
                prop_assert_eq!(code.dimension() + dual.dimension(), code.length());
            }
        }
    }
}
