#![no_main]

use libfuzzer_sys::fuzz_target;
use semiclassical::perm::Permutation;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    for barred in [false, true] {
        if let Ok(p) = Permutation::parse_one_line_json(text, barred) {
            assert_eq!(Permutation::from_one_line(&p.one_line(), barred).expect("one-line round trip"), p);
        }
    }
});
