use std::collections::BTreeSet;

use proptest::prelude::*;

use rankone_core::branching::freudenthal::{freudenthal_oracle, weyl_orbit};
use rankone_core::branching::{restrict_to_m, KLabel, KTypeWeight};
use rankone_core::collingwood_tables::{build_table, SubquotientLabel};
use rankone_core::group_data::Sign;
use rankone_core::inf_char::{casimir_scalar, inf_character, resonance_pair, SpectralValue};
use rankone_core::plancherel::{check_regularity, pole_set};
use rankone_core::resolver::{resolve_all, OrbitLabel};
use rankone_core::weyl_orbits::{canonicalize, find_inducing_matches};
use rankone_core::{build_case, CaseId, Family, GroupCase, HalfInt, HalfIntVec, Rational};

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![
        Just(Family::Real),
        Just(Family::Complex),
        Just(Family::Quaternionic)
    ]
}

/// A K-type label valid for the given case, kept small enough to branch fast.
fn k_label(id: CaseId) -> BoxedStrategy<KLabel> {
    let n = id.n;
    match id.family {
        Family::Real => (0..=n, any::<bool>())
            .prop_map(move |(p, neg)| {
                let sign = (p == n).then_some(if neg { Sign::Neg } else { Sign::Pos });
                KLabel::Real { p, sign }
            })
            .boxed(),
        Family::Complex => (0..=n)
            .prop_flat_map(move |a| (Just(a), 0..=n - a))
            .prop_map(|(a, b)| KLabel::Complex { a, b })
            .boxed(),
        Family::Quaternionic => (0..=n.min(2))
            .prop_flat_map(move |r| (Just(r), 0..=(n - r).min(3), 0..=4usize))
            .prop_map(|(r, s, t)| KLabel::Quaternionic { r, s, t })
            .boxed(),
    }
}

fn case_and_tau(max_n: usize) -> impl Strategy<Value = (CaseId, KLabel)> {
    (family(), 2..=max_n)
        .prop_map(|(f, n)| CaseId::new(f, n))
        .prop_flat_map(|id| (Just(id), k_label(id)))
}

fn setup(id: CaseId, label: KLabel) -> (GroupCase, KTypeWeight) {
    let g = build_case(id).unwrap();
    let tau = KTypeWeight::from_label(&g, label).unwrap();
    (g, tau)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rho_splits_orthogonally(f in family(), n in 2usize..=12) {
        let g = build_case(CaseId::new(f, n)).unwrap();
        prop_assert_eq!(g.rho_a.try_add(&g.rho_m).unwrap(), g.rho.clone());
        prop_assert_eq!(g.rho_a.inner(&g.rho_m).unwrap(), Rational::from_integer(0));
    }

    #[test]
    fn canonical_form_is_weyl_invariant(
        f in family(),
        n in 2usize..=6,
        coords in prop::collection::vec(-9i64..=9, 7),
        word in prop::collection::vec(any::<prop::sample::Index>(), 1..16),
    ) {
        let g = build_case(CaseId::new(f, n)).unwrap();
        let v = HalfIntVec::from_doubled(coords[..g.dim()].to_vec());
        let mut w = v.clone();
        for i in &word {
            w = w.reflect(i.get(&g.pos_roots)).unwrap();
        }
        prop_assert_eq!(canonicalize(&g, &w), canonicalize(&g, &v));
    }

    #[test]
    fn poles_are_regular_and_casimir_agrees((id, label) in case_and_tau(6)) {
        let (g, tau) = setup(id, label);
        for sigma in restrict_to_m(&g, &tau).unwrap().m_types() {
            for p in pole_set(&g, sigma).unwrap().up_to(5) {
                prop_assert!(check_regularity(&g, sigma, p.q).unwrap());
                let z = resonance_pair(&g, sigma, p.q).unwrap().z;
                prop_assert_eq!(casimir_scalar(&g, sigma, SpectralValue::Imaginary(p.q)).unwrap(), z);
                let gamma = inf_character(&g, sigma, p.q).unwrap().coords;
                prop_assert_eq!(z, g.rho.norm_sq() - gamma.norm_sq());
            }
        }
    }

    #[test]
    fn branching_matches_weight_oracle((id, label) in case_and_tau(5)) {
        let (g, tau) = setup(id, label);
        prop_assume!(tau.dimension(&g) <= 10_000);
        let rule = restrict_to_m(&g, &tau).unwrap();
        prop_assert_eq!(freudenthal_oracle(&g, &tau).unwrap(), rule.clone());
        if id.family != Family::Quaternionic {
            prop_assert!(rule.entries.iter().all(|e| e.multiplicity == 1));
        }
        prop_assert_eq!(rule.total_dimension(&g), tau.dimension(&g));
    }

    #[test]
    fn inducing_matches_agree_with_orbit_search((id, label) in case_and_tau(4)) {
        let (g, tau) = setup(id, label);
        let rule = restrict_to_m(&g, &tau).unwrap();
        let deltas: Vec<_> = rule.m_types().cloned().collect();
        for sigma in &deltas {
            let q = pole_set(&g, sigma).unwrap().up_to(0)[0].q;
            let gamma = inf_character(&g, sigma, q).unwrap().coords;
            let orbit: BTreeSet<HalfIntVec> = weyl_orbit(&g.simple_roots, &gamma).into_iter().collect();
            let bound = gamma.doubled().iter().map(|d| d.abs()).max().unwrap() + 2;
            let mut brute = BTreeSet::new();
            for delta in &deltas {
                for d in 1..=bound {
                    let qp = HalfInt::from_doubled(d);
                    if orbit.contains(&inf_character(&g, delta, qp).unwrap().coords) {
                        brute.insert((delta.coords.clone(), qp));
                    }
                }
            }
            let fast: BTreeSet<(HalfIntVec, HalfInt)> = find_inducing_matches(&g, &gamma, &deltas)
                .unwrap()
                .into_iter()
                .map(|m| (m.delta.coords, m.q_prime))
                .collect();
            prop_assert_eq!(fast, brute);
        }
    }

    #[test]
    fn finite_constituents_are_exactly_the_trivial_quotient((id, label) in case_and_tau(5)) {
        let (g, tau) = setup(id, label);
        prop_assume!(tau.dimension(&g) <= 100_000);
        let table = build_table(&g).unwrap();
        for o in resolve_all(&g, &tau, 2).unwrap() {
            let Ok(rep) = o.result else { continue };
            for c in &rep.constituents {
                prop_assert_eq!(c.finite_dim, c.subquotient == SubquotientLabel::ps(0, 1));
                prop_assert_eq!(c.finite_dim, c.wavefront == OrbitLabel::Zero);
                prop_assert_eq!(c.finite_dim, table.gk_dim(&c.subquotient) == 0);
            }
        }
    }
}
