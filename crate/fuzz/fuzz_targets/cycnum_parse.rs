#![no_main]

use libfuzzer_sys::fuzz_target;
use terwilliger::exactnum::CycNum;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(v) = CycNum::parse(text) {
        // canonical text must read back to the same element
        let again = CycNum::parse(&v.to_text()).expect("canonical form parses");
        assert_eq!(again, v);
    }
});
