use spectra_core::blocks::{simultaneous_table, TwoBlocksTraceData};
use spectra_core::tables::Family;
use std::time::Instant;

fn main() {
    for n in [5usize, 6, 7] {
        let t0 = Instant::now();
        let t = simultaneous_table(n, Family::Columns).unwrap();
        println!("columns n={n}: {} rows in {:.2?}", t.rows.len(), t0.elapsed());
        let t1 = Instant::now();
        let t2 = simultaneous_table(n, Family::TwoBlocks).unwrap();
        println!("two-blocks n={n}: {} rows in {:.2?}", t2.rows.len(), t1.elapsed());
    }
    let t3 = Instant::now();
    let d = TwoBlocksTraceData::new(8);
    let tab = d.table();
    println!("two-blocks trace n=8: {} rows in {:.2?}", tab.rows.len(), t3.elapsed());
}
