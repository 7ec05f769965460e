//! Replays the checked-in fuzz seeds through the same round-trip properties
//! the fuzz targets assert, so they run under a plain `cargo test`.

use std::path::PathBuf;

use coxpoly::algebra::{IntLaurent, ZPoly};
use coxpoly::braid::BraidWord;
use coxpoly::coxeter::coxeter_poly;
use coxpoly::diagram::Diagram;

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<String> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| std::fs::read_to_string(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn diagram_file_seeds() {
    for text in seeds("diagram_file") {
        let d = Diagram::parse(&text).unwrap();
        assert_eq!(Diagram::parse(&d.to_string()).unwrap(), d);
    }
}

#[test]
fn diagram_name_seeds() {
    for name in seeds("diagram_name") {
        let d = Diagram::from_name(&name).unwrap();
        let p = coxeter_poly(&d);
        assert_eq!(p.invert_var(), p, "{name}");
    }
}

#[test]
fn braid_word_seeds() {
    for text in seeds("braid_word") {
        let b: BraidWord = text.parse().unwrap();
        assert_eq!(BraidWord::parse(b.strands(), &b.to_string()).unwrap(), b);
        assert_eq!(b.inverse().inverse(), b);
    }
}

#[test]
fn laurent_text_seeds() {
    for text in seeds("laurent_text") {
        if let Ok(p) = IntLaurent::parse(&text, "q") {
            assert_eq!(IntLaurent::parse(&p.to_string(), "q").unwrap(), p);
        }
        if let Ok(p) = ZPoly::parse(&text, "z") {
            assert_eq!(ZPoly::parse(&p.render("z"), "z").unwrap(), p);
        }
    }
}

mod garbage {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn parsers_never_panic(text in "[ 0-9qzsn^*+\\-:#\n]{0,40}") {
            if let Ok(d) = Diagram::parse(&text) {
                prop_assert_eq!(Diagram::parse(&d.to_string()).unwrap(), d);
            }
            let _ = Diagram::from_name(&text);
            if let Ok(b) = text.parse::<BraidWord>() {
                prop_assert_eq!(BraidWord::parse(b.strands(), &b.to_string()).unwrap(), b);
            }
            if let Ok(p) = IntLaurent::parse(&text, "q") {
                prop_assert_eq!(IntLaurent::parse(&p.to_string(), "q").unwrap(), p);
            }
            if let Ok(p) = ZPoly::parse(&text, "z") {
                prop_assert_eq!(ZPoly::parse(&p.render("z"), "z").unwrap(), p);
            }
        }
    }
}
