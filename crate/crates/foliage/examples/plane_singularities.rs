//! Singular points of a quadratic vector field with four invariant lines.

use foliage::numeric::{BiPoly, QuadExt, Ring};
use foliage::plane::PlaneFoliation;
use foliage::Result;

fn main() -> Result<()> {
    let lambda = QuadExt::sqrt_of(2);
    let x = BiPoly::<QuadExt>::x();
    let y = BiPoly::<QuadExt>::y();
    let one = BiPoly::constant(QuadExt::one());
    let linear = x.scale(&lambda).add(&y.scale(&QuadExt::one().plus(&lambda))).add(&BiPoly::constant(lambda.clone()));
    let f = PlaneFoliation::new(x.mul(&linear), y.mul(&y.add(&one)), 2)?;
    println!("degree {}", f.degree());
    for (name, line) in [("x", x.clone()), ("y", y.clone()), ("x + y + 1", x.add(&y).add(&one)), ("x − y", x.sub(&y))] {
        println!("{name} = 0 invariant: {}", f.is_invariant_curve(&line));
    }
    println!("line at infinity invariant: {}", f.line_at_infinity_invariant());
    for s in f.find_singularities()? {
        let class = s.classification().map_or("unknown", |c| c.name());
        println!("{:<16} ({}, {})  mult {}  {class}", s.chart.name(), s.x.display(), s.y.display(), s.multiplicity);
    }
    Ok(())
}
