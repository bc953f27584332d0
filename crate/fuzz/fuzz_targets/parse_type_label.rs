#![no_main]

use libfuzzer_sys::fuzz_target;
use spectra_core::rootsys::{CoxeterType, OrbitSelector, RootSystem};
use std::str::FromStr;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let _ = OrbitSelector::from_str(s);
    if let Ok(ctype) = CoxeterType::from_str(s) {
        // keep the closure small inside the fuzzer
        let small = ctype.rank() <= 4
            && match ctype {
                CoxeterType::I2(m) => m <= 16,
                _ => true,
            };
        if small {
            if let Ok(rs) = RootSystem::build(ctype) {
                assert_eq!(rs.positive.len(), ctype.positive_root_count());
                assert!(!rs.hyperplane_orbits().is_empty());
            }
        }
    }
});
