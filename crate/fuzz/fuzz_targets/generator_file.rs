#![no_main]

use libfuzzer_sys::fuzz_target;
use terwilliger::matgroup::{generate_group, parse_generator_file};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(gens) = parse_generator_file(text) {
        if let Ok(group) = generate_group(&gens, 64) {
            let classes = group.conjugacy_classes();
            assert_eq!(classes.sizes().iter().sum::<usize>(), group.order());
        }
    }
});
