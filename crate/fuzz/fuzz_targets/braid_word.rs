#![no_main]

use coxpoly::braid::BraidWord;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(b) = text.parse::<BraidWord>() {
        let again = BraidWord::parse(b.strands(), &b.to_string()).expect("rendered word must parse");
        assert_eq!(again, b);
        assert_eq!(b.inverse().inverse(), b);
    }
    if let Some((&first, rest)) = data.split_first() {
        if let Ok(rest) = std::str::from_utf8(rest) {
            let _ = BraidWord::parse(usize::from(first % 8), rest);
        }
    }
});
