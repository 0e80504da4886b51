//! Negative-part coefficients along F-chains.

use foliage::zariski::{chain_negative_part, ChainSpec};

fn main() {
    for e in [vec![2], vec![2, 2], vec![2, 2, 2, 2], vec![3, 2, 5], vec![5, 4, 3, 2]] {
        let y = chain_negative_part(&ChainSpec::foliation_chain(e.clone()));
        let shown: Vec<String> = y.iter().map(ToString::to_string).collect();
        println!("e = {e:?}: N = [{}]", shown.join(", "));
    }
}
