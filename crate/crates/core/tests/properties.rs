use proptest::prelude::*;

use topzeta::algebra::{BiPoly, Rat};
use topzeta::germ::{germ_localize, parse_poly};
use topzeta::resolution::{resolve_germ, ResolutionGraph};
use topzeta::zeta::zeta_top;

fn small_poly(max_degree: u32) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((-4i64..=4, 0..=max_degree, 0..=max_degree), 1..6).prop_map(|terms| {
        BiPoly::from_terms(
            terms
                .into_iter()
                .map(|(c, i, j)| ((i, j), Rat::from_integer(c.into()))),
        )
    })
}

/// Germs built as `y^a + c x^b` times a line, all with rational centers.
fn germ_poly() -> impl Strategy<Value = BiPoly> {
    (1u32..=3, 1u32..=5, prop::sample::select(vec![-2i64, -1, 1, 3]), 0i64..=2).prop_map(|(a, b, c, line)| {
        let base = BiPoly::from_terms([
            ((0, a), Rat::from_integer(1.into())),
            ((b, 0), Rat::from_integer(c.into())),
        ]);
        match line {
            0 => base,
            1 => base * BiPoly::x(),
            _ => base * BiPoly::from_int_terms(&[(1, 1, 0), (-1, 0, 1)]),
        }
    })
}

fn graph_of(p: &BiPoly) -> ResolutionGraph {
    resolve_germ(&germ_localize(p).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn parse_round_trip(p in small_poly(5)) {
        prop_assert_eq!(parse_poly(&p.to_expr()).unwrap(), p);
    }

    #[test]
    fn multiplying_by_a_unit_keeps_the_germ(p in germ_poly(), c in 1i64..=3, a in -2i64..=2, b in -2i64..=2) {
        let unit = BiPoly::from_int_terms(&[(c, 0, 0), (a, 1, 0), (b, 0, 1)]);
        let g = graph_of(&p);
        let h = graph_of(&(&p * &unit));
        prop_assert_eq!(zeta_top(&g), zeta_top(&h));
        prop_assert_eq!(g.exceptionals, h.exceptionals);
        prop_assert_eq!(g.edges, h.edges);
    }

    #[test]
    fn multiplicity_is_additive(p in germ_poly(), q in germ_poly()) {
        let mp = germ_localize(&p).unwrap().multiplicity();
        let mq = germ_localize(&q).unwrap().multiplicity();
        prop_assert_eq!(germ_localize(&(&p * &q)).unwrap().multiplicity(), mp + mq);
    }

    #[test]
    fn graph_json_round_trip(p in germ_poly()) {
        let g = graph_of(&p);
        let text = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(serde_json::from_str::<ResolutionGraph>(&text).unwrap(), g);
    }

    #[test]
    fn zeta_at_zero_is_one(p in germ_poly()) {
        prop_assert_eq!(zeta_top(&graph_of(&p)).eval(&Rat::from_integer(0.into())), Some(Rat::from_integer(1.into())));
    }
}
