#![no_main]
use libfuzzer_sys::fuzz_target;
use posetlab::io::{parse_poset, write_poset};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_poset(text) {
        let out = write_poset(&p);
        let back = parse_poset(&out).expect("written posets parse");
        assert_eq!(back, p);
    }
});
