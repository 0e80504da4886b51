mod common;

use foliage::numeric::{int, rat, solve_linear_system, Rational};
use foliage::zariski::{chain_negative_part, check_axioms, zariski_decompose, ChainSpec};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

#[test]
fn iterative_solver_matches_subset_enumeration() {
    let mut rng = common::seeded(0x5eed_2a71);
    for _ in 0..200 {
        let cfg = common::random_negative_definite(&mut rng, 6);
        let oracle = common::enumerate_decompositions(&cfg.gram, &cfg.d_dot);
        assert_eq!(oracle.len(), 1, "gram {:?} d {:?}", cfg.gram, cfg.d_dot);
        let z = zariski_decompose(&cfg.lattice, &cfg.d, &cfg.candidates).unwrap();
        let engine: Vec<Rational> = z.n_coeffs.iter().map(|(_, c)| c.clone()).collect();
        assert_eq!(engine, oracle[0], "gram {:?} d {:?}", cfg.gram, cfg.d_dot);
        assert!(z.residual_negative.is_empty());
        let axioms = check_axioms(&cfg.lattice, &cfg.d, &cfg.candidates, &z).unwrap();
        assert!(axioms.holds(), "{axioms:?}");
    }
}

#[test]
fn nef_divisor_has_empty_negative_part() {
    let cfg = common::build_config(vec![vec![-2, 1], vec![1, -3]], vec![0, 2]);
    let z = zariski_decompose(&cfg.lattice, &cfg.d, &cfg.candidates).unwrap();
    assert!(z.support().is_empty());
    assert_eq!(z.volume, int(10));
}

#[test]
fn single_negative_curve() {
    let cfg = common::build_config(vec![vec![-3]], vec![-2]);
    let z = zariski_decompose(&cfg.lattice, &cfg.d, &cfg.candidates).unwrap();
    assert_eq!(z.coefficient("C1"), Some(&rat(2, 3)));
    assert_eq!(z.volume, int(10) + rat(4, 3));
}

fn chain_strategy() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(2i64..=5, 1..=8)
}

proptest! {
    #[test]
    fn chain_closed_form_matches_linear_solver(e in chain_strategy()) {
        let spec = ChainSpec::foliation_chain(e.clone());
        let y = chain_negative_part(&spec);
        let direct = solve_linear_system(&spec.gram(), &spec.kf_dot).unwrap().unique().unwrap();
        prop_assert_eq!(&y, &direct);
        for v in &y {
            prop_assert!(v.is_positive() && *v < Rational::one());
        }
    }

    #[test]
    fn all_two_chain_is_linear(r in 1usize..=8) {
        let y = chain_negative_part(&ChainSpec::foliation_chain(vec![2; r]));
        for (j, v) in y.iter().enumerate() {
            prop_assert_eq!(v.clone(), rat((r - j) as i64, r as i64 + 1));
        }
    }

    #[test]
    fn chain_with_general_rhs(e in chain_strategy(), seed in any::<u64>()) {
        let kf: Vec<Rational> = (0..e.len()).map(|j| int(((seed >> (j * 3)) % 5) as i64 - 2)).collect();
        let spec = ChainSpec::new(e, kf);
        let direct = solve_linear_system(&spec.gram(), &spec.kf_dot).unwrap().unique().unwrap();
        prop_assert_eq!(chain_negative_part(&spec), direct);
    }
}

#[test]
fn empty_chain_has_no_coefficients() {
    let spec = ChainSpec::foliation_chain(vec![]);
    assert!(chain_negative_part(&spec).is_empty());
    assert!(spec.kf_dot.iter().all(Zero::is_zero));
}
