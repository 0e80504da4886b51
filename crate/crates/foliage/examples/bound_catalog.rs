//! Evaluating the Noether-type bounds on an invariant record.

use foliage::bounds::{evaluate_bounds, ImageRecord, InvariantRecord, MapKind, SurfaceClass};
use foliage::numeric::int;
use foliage::Result;

fn main() -> Result<()> {
    let rec = InvariantRecord::new(int(18), 11, MapKind::GenericallyFinite { degree: 1 }, SurfaceClass::K3)
        .with_image(ImageRecord { degree: 18, class: SurfaceClass::K3, flags: Default::default() });
    for e in evaluate_bounds(&rec)?.entries.iter().filter(|e| e.applicable) {
        let rhs = e.rhs.as_ref().map_or(String::new(), |r| format!("{:.4}", r.to_f64()));
        let status = e.status.map_or("-", |s| s.name());
        println!("{:<9} lhs {:<4} {} {rhs:<9} {status}", e.id, e.lhs.clone().unwrap_or_default(), e.relation.symbol());
    }
    Ok(())
}
