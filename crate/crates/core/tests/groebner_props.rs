mod common;

use common::{nonzero_coeff, nonzero_poly, poly, vars};
use conelift::groebner::{
    buchberger, combine, is_unit_ideal, reduce, reduce_with_cofactors, Ideal,
};
use conelift::{MonomialOrder, Polynomial};
use proptest::prelude::*;

fn gens() -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec(nonzero_poly(vars(2), 3, 2), 1..=3)
}

fn order() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![Just(MonomialOrder::Grevlex), Just(MonomialOrder::Lex)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn remainder_differs_by_a_combination(
        f in poly(vars(2), 4, 3),
        basis in gens(),
    ) {
        let (cofactors, r) = reduce_with_cofactors(&f, &basis);
        prop_assert_eq!(&f - &r, combine(&cofactors, &basis));
        prop_assert_eq!(r, reduce(&f, &basis));
    }

    #[test]
    fn s_pairs_reduce_to_zero(g in gens(), ord in order()) {
        let gens: Vec<Polynomial> = g.iter().map(|p| p.with_order(ord)).collect();
        let basis = buchberger(&gens, ord);
        prop_assert!(basis.s_pairs_reduce_to_zero());
        prop_assert!(basis.is_reduced());
        for p in &gens {
            prop_assert!(basis.reduce(p).is_zero());
        }
    }

    #[test]
    fn unit_ideal_invariance(g in gens(), c in nonzero_coeff(), rot in 0usize..3) {
        let base = is_unit_ideal(&g).unit;
        let mut permuted = g.clone();
        let len = permuted.len();
        permuted.rotate_left(rot % len);
        permuted.reverse();
        prop_assert_eq!(is_unit_ideal(&permuted).unit, base);
        let mut scaled = g.clone();
        scaled[0] = scaled[0].scale(&c);
        prop_assert_eq!(is_unit_ideal(&scaled).unit, base);
    }

    #[test]
    fn membership_is_closed_under_multiples(
        g in gens(),
        pick in 0usize..3,
        m in poly(vars(2), 3, 2),
    ) {
        let f = g[pick % g.len()].clone();
        let ideal = Ideal::new(g, MonomialOrder::Grevlex).unwrap().with_cached_basis();
        prop_assert!(ideal.contains(&f));
        prop_assert!(ideal.contains(&(&f * &m)));
    }

    #[test]
    fn bases_are_deterministic(g in gens()) {
        let a = buchberger(&g, MonomialOrder::Grevlex);
        let b = buchberger(&g, MonomialOrder::Grevlex);
        prop_assert_eq!(format!("{a:?}"), format!("{b:?}"));
        prop_assert_eq!(a.to_string(), b.to_string());
    }
}
