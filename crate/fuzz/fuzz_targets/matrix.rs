#![no_main]
use libfuzzer_sys::fuzz_target;
use posetlab::io::parse_matrix;
use posetlab::Field;

fuzz_target!(|data: &[u8]| {
    let Some((&p, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let field = [Field::GF2, Field::new(3).unwrap(), Field::new(7).unwrap()][p as usize % 3];
    if let Ok(m) = parse_matrix(text, field, 1) {
        let _ = m.rank();
    }
});
