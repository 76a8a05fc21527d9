#![no_main]

use libfuzzer_sys::fuzz_target;

// First byte selects the universe size, the rest is the JSON document.
fuzz_target!(|data: &[u8]| {
    let Some((&first, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let n = first as usize;
    if let Ok(p) = geodex::io::parse_partition_json(text, n) {
        let mut seen = vec![false; n];
        for cell in p.cells() {
            for &v in cell {
                assert!(v < n && !seen[v]);
                seen[v] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
    }
});
