use proptest::prelude::*;

use krawkit::arith::{choose, int, nu2};
use krawkit::binomial::{double_binomial, pochhammer_binomial, stirling_binomial, SumForm, Variant};
use krawkit::central::{catalan, central, sequences, CatalanRoute, CentralRoute};
use krawkit::dyadic::{epsilon_pair, predict_consolidated, predict_parity};
use krawkit::krawtchouk::{krawtchouk_at_two, krawtchouk_half};
use krawkit::reduction::{reduce_general, reduce_theorem1, reduce_transposed, Parity};
use krawkit::verify::{Summary, SweepSpec};
use krawkit::{build_table, krawtchouk_direct, Error};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn single_doubling_matches_direct(m in 0i64..=48, a in 0i64..=96, b in 0i64..=48) {
        let (p, j) = (a % (2 * m + 1), b % (m + 1));
        let direct = krawtchouk_direct(2 * m, p, 2 * j).unwrap();
        prop_assert_eq!(&reduce_theorem1(m, p, j).unwrap(), &direct);
        if let Ok(v) = reduce_transposed(m, j, p) {
            prop_assert_eq!(v, krawtchouk_direct(2 * m, 2 * j, p).unwrap());
        }
    }

    #[test]
    fn chain_reduction_matches_direct(m in 1i64..=6, r in 1u32..=3, s in 1u32..=3, a in 0i64..=64, b in 0i64..=64) {
        let order = m << r;
        let p = a % (order + 1);
        let j = b % ((order >> s) + 1);
        let direct = krawtchouk_direct(order, p, j << s).unwrap();
        let pruned = reduce_general(m, p, r, s, j, true).unwrap();
        let full = reduce_general(m, p, r, s, j, false).unwrap();
        prop_assert_eq!(&pruned.total, &direct);
        prop_assert_eq!(&full.total, &direct);
        prop_assert!(pruned.term_count <= full.term_count);
    }

    #[test]
    fn closed_points_match_direct(n in 2i64..=64, a in 0i64..=64) {
        let p = a % (n + 1);
        prop_assert_eq!(krawtchouk_at_two(n, p).unwrap(), krawtchouk_direct(n, p, 2).unwrap());
        if n % 2 == 0 {
            prop_assert_eq!(krawtchouk_half(n, p).unwrap(), krawtchouk_direct(n, p, n / 2).unwrap());
        }
    }

    #[test]
    fn binomial_routes_match_direct(m in 0i64..=80, a in 0i64..=80) {
        let q = a % (m + 1);
        for form in [SumForm::First, SumForm::Second] {
            prop_assert_eq!(double_binomial(m, q, Parity::Even, form).unwrap(), choose(2 * m, 2 * q));
        }
        for variant in Variant::ALL {
            let (top, bottom) = variant.target(m, q);
            if bottom <= top {
                prop_assert_eq!(pochhammer_binomial(m, q, variant).unwrap(), choose(top, bottom));
            }
        }
        prop_assert_eq!(stirling_binomial(m, q).unwrap(), choose(2 * m, 2 * q));
    }

    #[test]
    fn valuation_is_the_two_adic_order(m in 1i64..=500, a in 0i64..=500) {
        let q = a % (m + 1);
        prop_assert_eq!(Some(epsilon_pair(m, q).unwrap()), nu2(&choose(m, q)));
    }

    #[test]
    fn consolidated_and_parity_claims_hold(m in 1i64..=200, a in 1i64..=200, r in 1u32..=8, s in 0u8..=1, t in 0u8..=1) {
        let q = 1 + (a - 1) % m;
        prop_assert!(predict_consolidated(m, q, r, s, t).unwrap().verify().holds);
        prop_assert!(predict_parity(m, q, r, s).unwrap().verify().holds);
    }

    #[test]
    fn central_routes_agree(m in 0i64..=300) {
        let direct = central(m, CentralRoute::Direct).unwrap();
        for route in CentralRoute::ALL {
            match central(m, route) {
                Ok(v) => prop_assert_eq!(&v, &direct, "{:?}", route),
                Err(e) => prop_assert!(matches!(e, Error::RangeViolation(_)), "{:?}: {}", route, e),
            }
        }
        prop_assert_eq!(&central(2 * m, CentralRoute::Reduce4q).unwrap(), &central(2 * m, CentralRoute::Direct).unwrap());
    }

    #[test]
    fn catalan_routes_agree(n in 2i64..=300) {
        let direct = catalan(n, CatalanRoute::Direct).unwrap();
        for route in CatalanRoute::ALL {
            prop_assert_eq!(&catalan(n, route).unwrap(), &direct, "{:?}", route);
        }
        prop_assert_eq!(central(n, CentralRoute::Direct).unwrap(), direct * (n + 1));
    }
}

#[test]
fn table_invariants_up_to_64() {
    for n in 1..=64 {
        let table = build_table(n);
        assert!(table.invariant_violations().is_empty(), "n = {n}");
        assert_eq!(table.row_sum(0), int(n + 1));
    }
}

#[test]
fn cached_sequences_satisfy_their_recurrences() {
    let cache = sequences();
    cache.ensure(200);
    assert!(cache.invariants_hold());
    for n in 0..=200usize {
        assert_eq!(cache.central(n), cache.catalan(n) * (n as i64 + 1));
    }
}

#[test]
fn worked_values() {
    assert_eq!(krawtchouk_direct(8, 4, 4).unwrap(), int(6));
    assert_eq!(
        reduce_general(3, 6, 4, 3, 5, true).unwrap().total,
        krawtchouk_direct(48, 6, 40).unwrap()
    );
    assert_eq!(central(8, CentralRoute::HalfRecursion).unwrap(), int(12870));
    assert_eq!(catalan(8, CatalanRoute::Touchard).unwrap(), int(1430));
    assert_eq!(catalan(16, CatalanRoute::Callan).unwrap(), int(35_357_670));
}

#[test]
fn sweeps_are_reproducible() {
    let run = || SweepSpec::new("thm-2.2").with_range("m", 0, 6).run().unwrap();
    let (a, b) = (run(), run());
    assert_eq!(a, b);
    assert_eq!(Summary::of(&a).fail, 0);
}
