use std::sync::OnceLock;

use doubleaut::autdouble::{build_aut_default, multiply, AutDG};
use doubleaut::groups::library::quaternion;
use doubleaut::modaction::{act, all_labels, LabelSpace};
use proptest::prelude::*;

fn q8() -> &'static (AutDG, LabelSpace) {
    static CELL: OnceLock<(AutDG, LabelSpace)> = OnceLock::new();
    CELL.get_or_init(|| {
        let g = quaternion(8);
        (build_aut_default(&g).unwrap(), all_labels(&g).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn flip_is_an_involutive_anti_homomorphism(i in 0u128..3072, j in 0u128..3072) {
        let (a, _) = q8();
        let g = a.group();
        let x = a.element(i).unwrap().unwrap();
        let y = a.element(j).unwrap().unwrap();
        let fx = x.flip(g).unwrap();
        prop_assert_eq!(&fx.flip(g).unwrap(), &x);
        let lhs = multiply(g, &x, &y).unwrap().flip(g).unwrap();
        let rhs = multiply(g, &y.flip(g).unwrap(), &fx).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn factored_index_round_trips(i in 0u128..3072) {
        let (a, _) = q8();
        let f = a.factored_element(i).unwrap();
        let q = f.recompose(a.group()).unwrap();
        prop_assert_eq!(a.index_of_factored(&a.factorize(&q).unwrap()), Some(i));
    }

    #[test]
    fn module_action_composes(i in 0u128..3072, j in 0u128..3072, l in 0usize..22) {
        let (a, space) = q8();
        let g = a.group();
        let x = a.element(i).unwrap().unwrap();
        let y = a.element(j).unwrap().unwrap();
        let label = &space.labels()[l];
        let once = act(space, &x, &act(space, &y, label).unwrap()).unwrap();
        let both = act(space, &multiply(g, &x, &y).unwrap(), label).unwrap();
        prop_assert_eq!(once, both);
        prop_assert_eq!(once.dim, label.dim);
    }
}
