#![no_main]

use coxpoly::diagram::Diagram;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(d) = Diagram::parse(text) {
        let again = Diagram::parse(&d.to_string()).expect("rendered diagram must parse");
        assert_eq!(again, d);
    }
});
