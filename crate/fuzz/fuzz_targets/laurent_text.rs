#![no_main]

use coxpoly::algebra::{IntLaurent, ZPoly};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = IntLaurent::parse(text, "q") {
        assert_eq!(IntLaurent::parse(&p.to_string(), "q").unwrap(), p);
    }
    if let Ok(p) = ZPoly::parse(text, "z") {
        assert_eq!(ZPoly::parse(&p.render("z"), "z").unwrap(), p);
    }
});
