#![no_main]

use coxpoly::coxeter::coxeter_poly;
use coxpoly::diagram::Diagram;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(name) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(d) = Diagram::from_name(name) {
        if d.len() <= 10 {
            let p = coxeter_poly(&d);
            assert_eq!(p.invert_var(), p);
        }
    }
});
