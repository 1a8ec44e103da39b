#![no_main]
use libfuzzer_sys::fuzz_target;
use posetlab::io::{parse_diagram, write_diagram};
use posetlab::poset::expand_diagram;
use std::collections::HashMap;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(d) = parse_diagram(text) else { return };
    let back = parse_diagram(&write_diagram(&d)).expect("written diagrams parse");
    assert_eq!(back, d);
    // Cap the expansion so the target stays fast.
    if d.vertices.len() <= 12 {
        let _ = expand_diagram(&d, &HashMap::new());
    }
});
