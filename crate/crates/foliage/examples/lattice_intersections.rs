//! Intersection numbers, Riemann–Roch and a double cover of a Hirzebruch surface.

use foliage::lattice::{blow_up, chi_of_class, finite_cover, h0_closed_form, make_surface, SurfaceSpec};
use foliage::Result;

fn main() -> Result<()> {
    let f1 = make_surface(SurfaceSpec::Hirzebruch(1))?;
    let k = f1.canonical_class();
    println!("F_1: K² = {}, χ(O) = {}", f1.square(&k)?, f1.chi);
    let d = f1.class_int(&[2, 3]);
    println!("D = 2C0 + 3G: D² = {}, χ(D) = {}, h⁰(D) = {:?}", f1.square(&d)?, chi_of_class(&f1, &d)?, h0_closed_form(&f1, &d));

    let blown = blow_up(&f1, 2);
    println!("after two blow-ups: basis {:?}, K² = {}", blown.basis, blown.square(&blown.canonical_class())?);

    let cover = finite_cover(&f1, 2, &f1.class_int(&[3, 4]), &[])?;
    println!("double cover branched in 2·(3C0 + 4G): K² = {}, χ = {}", cover.square(&cover.canonical_class())?, cover.chi);
    Ok(())
}
