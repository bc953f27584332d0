#![no_main]

use libfuzzer_sys::fuzz_target;
use spectra_core::cache;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    // decoders must reject garbage without panicking; accepted files have
    // consistent shapes by construction
    let _ = cache::decode_chartable(s);
    let _ = cache::decode_seminormal(s);
});
