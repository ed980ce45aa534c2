#![no_main]

use libfuzzer_sys::fuzz_target;
use semiclassical::perm::CycleType;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(c) = CycleType::parse(text) {
        assert!(c.parts().windows(2).all(|w| w[0] >= w[1]), "parts are sorted");
        assert!(c.parts().iter().all(|&p| p > 0));
    }
});
