#![no_main]
use libfuzzer_sys::fuzz_target;
use posetlab::io::{parse_pmod, parse_poset, write_pmod};
use std::sync::Arc;

// Input is a poset and a module separated by a `%%` line. Without the
// separator the module is read over a fixed square.
const SQUARE: &str = "poset square\nelements: a b c d\ncover a b\ncover a c\ncover b d\ncover c d\n";

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let (poset, module) = text.split_once("\n%%\n").unwrap_or((SQUARE, text));
    let Ok(p) = parse_poset(poset) else { return };
    let p = Arc::new(p);
    if let Ok(m) = parse_pmod(module, p.clone()) {
        let back = parse_pmod(&write_pmod(&m), p).expect("written modules parse");
        assert_eq!(back, m);
    }
});
