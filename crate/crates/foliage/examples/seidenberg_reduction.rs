//! Blow-up trees of three germs at the origin.

use foliage::numeric::{BiPoly, QuadExt, Ring};
use foliage::plane::blowup::reduce_germ;
use foliage::plane::DEFAULT_DEPTH_CAP;
use foliage::Result;

fn germ(a: &[((u32, u32), i64)], b: &[((u32, u32), i64)]) -> (BiPoly<QuadExt>, BiPoly<QuadExt>) {
    let p = |t: &[((u32, u32), i64)]| BiPoly::from_terms(t.iter().map(|&(e, c)| (e, QuadExt::from_int(c))));
    (p(a), p(b))
}

fn main() -> Result<()> {
    let cases = [
        ("x∂x + y∂y", germ(&[((1, 0), 1)], &[((0, 1), 1)])),
        ("x∂x − y∂y", germ(&[((1, 0), 1)], &[((0, 1), -1)])),
        ("y∂x + x²∂y", germ(&[((0, 1), 1)], &[((2, 0), 1)])),
    ];
    for (name, field) in cases {
        let node = reduce_germ(&field, 0, "root".into(), 0, DEFAULT_DEPTH_CAP)?;
        println!("{name}: {} blow-ups, K coefficients {:?}", node.blowup_count(), node.kf_coefficients());
        println!("  {}", node.signature());
    }
    Ok(())
}
