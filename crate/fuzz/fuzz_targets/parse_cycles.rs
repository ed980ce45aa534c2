#![no_main]

use libfuzzer_sys::fuzz_target;
use semiclassical::perm::Permutation;

// Accepted input re-parses from its own rendering to the same permutation.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = Permutation::parse_cycles(text, None) {
        let again = Permutation::parse_cycles(&p.to_string(), Some(p.ground())).expect("rendering parses");
        assert_eq!(again, p);
    }
});
