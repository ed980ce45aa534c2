#![no_main]

use libfuzzer_sys::fuzz_target;
use semiclassical::correlator::parse_elements;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(es) = parse_elements(text) {
        let rendered = es.iter().map(ToString::to_string).collect::<Vec<_>>().join(";");
        assert_eq!(parse_elements(&rendered).expect("rendering parses"), es);
    }
});
