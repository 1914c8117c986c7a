mod common;

use num_bigint::BigInt;
use num_rational::Ratio;
use proptest::prelude::*;

use zerotwist::plumbing::{standard_graph, PlumbingGraph, SeifertData};
use zerotwist::Rational;

use common::{det_cofactor, matrix_of};

fn seifert() -> impl Strategy<Value = SeifertData> {
    (
        -4i64..=1,
        prop::collection::vec((1i64..30, 2i64..30), 1..=4),
    )
        .prop_filter_map("coprime proper ratios", |(e0, legs)| {
            let ratios = legs
                .into_iter()
                .filter(|(p, q)| p < q && num_integer::gcd(*p, *q) == 1)
                .map(|(p, q)| Rational::new(p, q).unwrap())
                .collect::<Vec<_>>();
            SeifertData::new(e0, ratios).ok()
        })
}

fn euler(data: &SeifertData) -> Ratio<i128> {
    data.ratios().iter().fold(Ratio::from_integer(data.e0() as i128), |acc, r| {
        acc + Ratio::new(r.numer() as i128, r.denom() as i128)
    })
}

fn leading_minors_alternate(g: &PlumbingGraph) -> bool {
    let q = matrix_of(g);
    (1..=q.len()).all(|k| {
        let sub: Vec<Vec<i64>> = q[..k].iter().map(|r| r[..k].to_vec()).collect();
        let d = det_cofactor(&sub);
        if k % 2 == 1 { d < BigInt::from(0) } else { d > BigInt::from(0) }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn determinant_matches_cofactor(data in seifert()) {
        let g = standard_graph(&data).unwrap();
        prop_assume!(g.vertex_count() <= 9);
        prop_assert_eq!(g.determinant(), det_cofactor(&matrix_of(&g)));
    }

    #[test]
    fn definiteness_matches_euler_number(data in seifert()) {
        let g = standard_graph(&data).unwrap();
        let e = euler(&data);
        prop_assert_eq!(g.is_negative_definite(), e < Ratio::from_integer(0));
        if g.vertex_count() <= 9 {
            prop_assert_eq!(g.is_negative_definite(), leading_minors_alternate(&g));
        }
    }

    #[test]
    fn dual_negates_euler_number(data in seifert()) {
        prop_assert_eq!(euler(&data.dual()), -euler(&data));
        prop_assert_eq!(data.dual().dual(), data.clone());
    }

    #[test]
    fn seifert_text_round_trip(data in seifert()) {
        prop_assert_eq!(data.to_string().parse::<SeifertData>().unwrap(), data.clone());
        let json = serde_json::to_string(&data).unwrap();
        prop_assert_eq!(serde_json::from_str::<SeifertData>(&json).unwrap(), data);
    }
}
