#![no_main]

use libfuzzer_sys::fuzz_target;
use terwilliger::codes::{parse_generator_matrix, InnerProduct};

fuzz_target!(|data: &[u8]| {
    let Some((&selector, rest)) = data.split_first() else {
        return;
    };
    let q = [2u8, 3, 4][usize::from(selector % 3)];
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let Ok(code) = parse_generator_matrix(text, q) else {
        return;
    };
    let dual = code.dual(InnerProduct::Euclidean);
    assert_eq!(code.dimension() + dual.dimension(), code.length());
    if code.dimension() <= 8 {
        let dist = code.weight_distribution().expect("small code");
        assert_eq!(
            dist.iter().sum::<u64>(),
            u64::from(q).pow(code.dimension() as u32)
        );
        assert_eq!(dist[0], 1);
    }
});
