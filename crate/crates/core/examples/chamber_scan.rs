//! Cell counts, simpliciality and determinant classes at every rank-2
//! chamber of a cycle.
//!
//! cargo run --release -p frieze-core --example chamber_scan -- 1,3,1,5,1,3,1,5,1,3,1,5

use frieze_core::affine3::{chamber_scan, DomainConfig};
use frieze_core::QuiddityCycle;

fn main() {
    let arg = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "1,3,1,5,1,3,1,5,1,3,1,5".into());
    let entries: Vec<i64> = arg
        .split(',')
        .map(|s| s.trim().parse().expect("integer entry"))
        .collect();
    let c = QuiddityCycle::from_i64s(&entries).expect("quiddity cycle");
    let scan = chamber_scan(&c, &DomainConfig::unit()).expect("scan");
    for s in &scan {
        let dets = s
            .det_classes
            .as_ref()
            .map(|h| {
                h.iter()
                    .map(|(r, k)| format!("{r}:{k}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .unwrap_or_else(|| "-".into());
        println!(
            "chamber {:>2}  cells {:>4}  simplicial {:<5}  det {}",
            s.chamber, s.cells, s.simplicial, dets
        );
    }
    let first = &scan[0];
    let same = scan.iter().all(|s| {
        s.cells == first.cells
            && s.simplicial == first.simplicial
            && s.det_classes == first.det_classes
    });
    println!("chamber independent: {same}");
}
