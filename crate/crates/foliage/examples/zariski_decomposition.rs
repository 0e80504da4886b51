//! Zariski decomposition of a divisor against two negative curves.

use foliage::foliation::CurveRecord;
use foliage::lattice::{make_surface, SurfaceSpec};
use foliage::numeric::int;
use foliage::zariski::{check_axioms, zariski_decompose};
use foliage::Result;

fn main() -> Result<()> {
    let gram = vec![
        vec![int(6), int(-1), int(0)],
        vec![int(-1), int(-2), int(1)],
        vec![int(0), int(1), int(-3)],
    ];
    let l = make_surface(SurfaceSpec::Abstract {
        basis: vec!["X".into(), "C1".into(), "C2".into()],
        gram,
        canonical: vec![int(0); 3],
        chi: int(1),
    })?;
    let d = l.generator("X")?;
    let curves = vec![CurveRecord::single("C1", l.generator("C1")?), CurveRecord::single("C2", l.generator("C2")?)];
    let z = zariski_decompose(&l, &d, &curves)?;
    for (label, c) in &z.n_coeffs {
        println!("N coefficient on {label}: {c}");
    }
    println!("P² = {}", z.volume);
    println!("axioms hold: {}", check_axioms(&l, &d, &curves, &z)?.holds());
    Ok(())
}
