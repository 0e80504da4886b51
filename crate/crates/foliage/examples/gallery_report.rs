//! Rebuilds the worked examples and compares them with their closed forms.

use foliage::gallery::{acceptance_cases, build_example, verify_example, GalleryId};
use foliage::Result;

fn main() -> Result<()> {
    let mut ids = acceptance_cases();
    ids.push(GalleryId::Ex6_5 { gb: 2, m: 1, g: 2 });
    for id in ids {
        let r = verify_example(&build_example(id)?)?;
        let row: Vec<String> = r
            .quantities
            .iter()
            .map(|(q, c)| {
                let e = c.engine.as_ref().map_or("-".into(), ToString::to_string);
                let p = c.paper.as_ref().map_or("-".into(), ToString::to_string);
                format!("{q} {e}/{p} {}", c.status.name())
            })
            .collect();
        println!("{id:<24} {}", row.join("  "));
    }
    Ok(())
}
