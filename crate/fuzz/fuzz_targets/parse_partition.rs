#![no_main]

use libfuzzer_sys::fuzz_target;
use spectra_core::partition::Partition;
use std::str::FromStr;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = Partition::from_str(s) {
        // invariants: positive weakly decreasing parts, display roundtrip
        assert!(p.parts().iter().all(|&x| x > 0));
        assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
        let again = Partition::from_str(&p.to_string()).unwrap();
        assert_eq!(again, p);
        let _ = p.conjugate().conjugate();
        let _ = p.oddcols();
        if p.sum() <= 12 {
            let _ = p.dimension();
        }
    }
});
