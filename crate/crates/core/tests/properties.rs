use kgroth::expand::{expand_in_keys, expand_in_lascoux, expand_in_schur};
use kgroth::families::{schur, stable_groth};
use kgroth::kjdt::{left_key, SlideState};
use kgroth::tableaux::staircase_increasing;
use kgroth::{BetaScalar, Composition, FamilyCache, MVPolynomial, Partition, Permutation};
use proptest::prelude::*;

fn arb_poly() -> impl Strategy<Value = MVPolynomial> {
    prop::collection::vec((prop::collection::vec(0u32..4, 3), 0usize..3, -50i64..=50), 0..8).prop_map(
        |terms| {
            let mut p = MVPolynomial::zero(3);
            for (e, k, c) in terms {
                p += &MVPolynomial::monomial(e, BetaScalar::monomial(c, k));
            }
            p
        },
    )
}

fn arb_comp() -> impl Strategy<Value = Composition> {
    prop::collection::vec(0usize..3, 0..4).prop_map(Composition::new)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn text_and_json_round_trip(p in arb_poly()) {
        let back: MVPolynomial = p.to_string().parse().unwrap();
        prop_assert_eq!(&back, &p);
        let json = serde_json::to_string(&p.to_json()).unwrap();
        let back = MVPolynomial::from_json(&serde_json::from_str(&json).unwrap()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn pi_kills_symmetric_times(p in arb_poly(), i in 1usize..3) {
        let sym = &p + &p.swap_vars(i);
        let g = &sym * &MVPolynomial::var(i, 3).mul_var(i + 1);
        prop_assert!(g.is_symmetric_in(i));
        prop_assert_eq!(g.pi(i), g.scale(&BetaScalar::monomial(-1, 1)));
        prop_assert_eq!(g.pi_tilde(i), g);
    }

    /// A random integer combination of Lascoux polynomials of one adjusted
    /// degree comes back out of the Lascoux expansion unchanged.
    #[test]
    fn lascoux_expansion_recovers_combination(
        terms in prop::collection::vec((arb_comp(), 0usize..2, -3i64..=3), 1..4),
    ) {
        let cache = FamilyCache::new();
        let g = terms.iter().map(|(a, _, _)| a.size()).min().unwrap();
        let mut f = MVPolynomial::zero(3);
        let mut want = std::collections::BTreeMap::new();
        for (a, _, c) in &terms {
            let k = a.size() - g;
            f += &cache.lascoux(a).scale(&BetaScalar::monomial(*c, k));
            *want.entry(a.clone()).or_insert(0i64) += c;
        }
        want.retain(|_, c| *c != 0);
        let e = expand_in_lascoux(&cache, &f, 3).unwrap();
        prop_assert_eq!(e.terms().len(), want.len());
        for (a, c) in want {
            prop_assert_eq!(e.coeff_at(&a, a.size() - g), c.into());
        }
        prop_assert_eq!(e.reconstruct(&cache, 3), f);
    }

    #[test]
    fn key_expansion_reconstructs(p in arb_poly()) {
        let cache = FamilyCache::new();
        let e = expand_in_keys(&cache, &p, 3).unwrap();
        prop_assert_eq!(e.reconstruct(&cache, 3), p);
    }

    /// LDS is unchanged by any sequence of leftmost slides, and the left
    /// key keeps the shape.
    #[test]
    fn rectification_invariants(idx in 0usize..1000, extra in 0usize..3) {
        let pool = staircase_increasing(5);
        let t = pool[idx % pool.len()].clone().into_inner();
        let s = SlideState::from_tableau(&t, t.rows().len().max(1) + extra, t.num_cols().max(1) + extra).unwrap();
        for state in s.rev_krect_leftmost_trace() {
            prop_assert_eq!(state.lds(), t.lds());
        }
        let k = left_key(&t);
        prop_assert_eq!(k.shape(), t.shape());
        prop_assert!(k.is_key());
    }
}

#[test]
fn schur_expansion_of_products() {
    // s_1 * s_1 = s_2 + s_11 in three variables.
    let s1 = schur(&Partition::new(vec![1]).unwrap(), 3);
    let e = expand_in_schur(&(&s1 * &s1), 3, None).unwrap();
    assert_eq!(e.to_string(), "1·s[1,1] + 1·s[2]");
}

#[test]
fn stable_groth_is_symmetric() {
    for w in Permutation::all(4) {
        let g = stable_groth(&w, 3);
        assert!(g.is_symmetric_in(1) && g.is_symmetric_in(2), "{w}");
    }
}
