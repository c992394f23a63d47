#![no_main]

use ergobound_cli::output::{read_csv, write_records_csv};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(records) = read_csv(data) else { return };
    // anything that parses must survive a write/read cycle unchanged
    let mut buf = Vec::new();
    write_records_csv(&records, &mut buf).expect("writing to a Vec cannot fail");
    let again = read_csv(buf.as_slice()).expect("own output parses");
    assert_eq!(again.len(), records.len());
    for (a, b) in again.iter().zip(&records) {
        assert_eq!(a.sweep_parameter, b.sweep_parameter);
        assert_eq!(a.value.map(f64::to_bits), b.value.map(f64::to_bits));
        assert_eq!(a.tight_bound.map(f64::to_bits), b.tight_bound.map(f64::to_bits));
    }
});
