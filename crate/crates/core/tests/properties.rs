use proptest::prelude::*;

use spq_core::domino::DominoTableau;
use spq_core::hmap::{h_map, TableauPair};
use spq_core::involution::{SignedInvolution, SimpleRoot};
use spq_core::io::{parse_sigma, render_sigma};
use spq_core::signed::SignedTableau;

/// A uniformly chosen parameter of rank 1..=7.
fn sigma() -> impl Strategy<Value = SignedInvolution> {
    (1usize..=7).prop_flat_map(|n| {
        let all: Vec<SignedInvolution> = SignedInvolution::enumerate_all(n).collect();
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #[test]
    fn text_round_trip(s in sigma()) {
        prop_assert_eq!(parse_sigma(&render_sigma(&s)).unwrap(), s);
    }

    #[test]
    fn json_round_trips(s in sigma()) {
        let h = h_map(&s).unwrap();
        prop_assert_eq!(DominoTableau::from_json(&h.t1.to_json()).unwrap(), h.t1.clone());
        for m in h.t2_class.members() {
            prop_assert_eq!(&SignedTableau::from_json(&m.to_json()).unwrap(), m);
        }
        prop_assert_eq!(TableauPair::from_json(&h.to_json()).unwrap(), h);
    }

    #[test]
    fn shape_and_signature(s in sigma()) {
        let h = h_map(&s).unwrap();
        let (p, q) = s.signature();
        prop_assert!(h.t1.shape().is_doubled());
        prop_assert_eq!(h.t1.shape().size(), 2 * s.n());
        for m in h.t2_class.members() {
            prop_assert_eq!(m.signature(), (2 * p, 2 * q));
        }
        prop_assert_eq!(h.tau(), s.tau());
    }

    #[test]
    fn cross_action_is_an_involution(s in sigma(), k in 0usize..7) {
        let r = if k == 0 { SimpleRoot::Long } else { SimpleRoot::Short(k) };
        prop_assume!(r.valid_for(s.n()));
        prop_assert_eq!(s.cross_action(r).cross_action(r), s);
    }

    #[test]
    fn wall_cross_flips_tau(s in sigma()) {
        for (a, b) in SimpleRoot::adjacent_pairs(s.n()) {
            if s.in_tau(a) || !s.in_tau(b) {
                continue;
            }
            let out = s.wall_cross(a, b).unwrap();
            let expected = if a.is_long() || b.is_long() { 1..=2 } else { 1..=1 };
            prop_assert!(expected.contains(&out.len()));
            for t in out {
                prop_assert!(t.in_tau(a) && !t.in_tau(b));
            }
        }
    }
}
