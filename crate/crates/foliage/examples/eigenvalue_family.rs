//! Eigenvalue quotients of the two-parameter family, symbolic and numeric.

use foliage::plane::formal::{check_interior_numeric, check_symbolic, FamilyCase, Formula};
use foliage::Result;

fn main() -> Result<()> {
    for d in [2, 3] {
        for case in [FamilyCase::Origin, FamilyCase::XAxis, FamilyCase::YAxis] {
            let stated = check_symbolic(case, d, Formula::Stated)?.holds;
            let recomputed = check_symbolic(case, d, Formula::Recomputed)?.holds;
            println!("d = {d} {:<8} stated {stated:<5} recomputed {recomputed}", case.name());
        }
        for formula in [Formula::Stated, Formula::Recomputed] {
            let n = check_interior_numeric(d, 2, 3, formula, 1e-9)?;
            println!("d = {d} interior {formula:?}: {} points, max deviation {:.3e}", n.points, n.max_deviation);
        }
    }
    Ok(())
}
