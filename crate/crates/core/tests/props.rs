//! Property-based invariants over randomly drawn small descriptors.

use proptest::prelude::*;

use koethe::group::{materialize_group, GroupDescriptor};
use koethe::group_ring::build_group_ring;
use koethe::ring::ideal::{ideal_generated, Sidedness};
use koethe::ring::radical::lift_idempotent;
use koethe::ring::{materialize_ring, RingDescriptor};

fn small_group() -> impl Strategy<Value = GroupDescriptor> {
    prop_oneof![
        (1usize..=8).prop_map(GroupDescriptor::cyclic),
        (1usize..=4).prop_map(GroupDescriptor::symmetric),
        (1usize..=4).prop_map(|n| GroupDescriptor::dihedral(2 * n)),
        Just(GroupDescriptor::Quaternion8),
        (1usize..=3, 2usize..=4).prop_map(|(a, b)| GroupDescriptor::direct_product(vec![
            GroupDescriptor::cyclic(a),
            GroupDescriptor::cyclic(b),
        ])),
    ]
}

fn small_ring() -> impl Strategy<Value = RingDescriptor> {
    prop_oneof![
        (2usize..=9).prop_map(RingDescriptor::zmod),
        Just(RingDescriptor::galois_field(2, 1)),
        Just(RingDescriptor::galois_field(2, 2)),
        Just(RingDescriptor::galois_field(2, 3)),
        Just(RingDescriptor::galois_field(3, 1)),
        Just(RingDescriptor::galois_field(3, 2)),
        Just(RingDescriptor::galois_field(5, 1)),
        (2usize..=4, 2usize..=4).prop_map(|(a, b)| RingDescriptor::Product {
            factors: vec![RingDescriptor::zmod(a), RingDescriptor::zmod(b)],
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Materialization is deterministic: two builds agree entry by entry.
    #[test]
    fn group_materialization_is_deterministic(d in small_group()) {
        let a = materialize_group(&d).unwrap();
        let b = materialize_group(&d).unwrap();
        prop_assert_eq!(a.order(), b.order());
        for i in 0..a.order() {
            prop_assert_eq!(a.inverse(i), b.inverse(i));
            for j in 0..a.order() {
                prop_assert_eq!(a.product(i, j), b.product(i, j));
            }
        }
    }

    /// The subgroup count is invariant under relabeling of the elements.
    #[test]
    fn subgroup_count_is_relabeling_invariant(d in small_group(), seed in any::<u64>()) {
        let g = materialize_group(&d).unwrap();
        let n = g.order();
        // Deterministic Fisher-Yates from the seed.
        let mut sigma: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            sigma.swap(i, j);
        }
        let mut inv = vec![0usize; n];
        for (i, &s) in sigma.iter().enumerate() {
            inv[s] = i;
        }
        let relabeled: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| inv[g.product(sigma[i], sigma[j])]).collect())
            .collect();
        let h = materialize_group(&GroupDescriptor::FromTable { product: relabeled }).unwrap();
        prop_assert_eq!(
            g.subgroups(64).unwrap().len(),
            h.subgroups(64).unwrap().len()
        );
    }

    /// Mixed-radix encoding of group-ring elements round-trips.
    #[test]
    fn group_ring_encoding_round_trips(rd in small_ring(), n in 1usize..=3) {
        let r = materialize_ring(&rd, 65536).unwrap();
        let g = materialize_group(&GroupDescriptor::cyclic(n)).unwrap();
        if (r.size() as u128).pow(g.order() as u32) <= 4096 {
            let s = build_group_ring(&r, &g, 65536).unwrap();
            let meta = s.group_ring_meta().unwrap();
            for x in 0..s.size() {
                prop_assert_eq!(meta.encode(&meta.decode(x)), x);
            }
        }
    }

    /// A product ring is abelian exactly when every factor is.
    #[test]
    fn abelian_product_law(a in small_ring(), b in small_ring()) {
        let ra = materialize_ring(&a, 65536).unwrap();
        let rb = materialize_ring(&b, 65536).unwrap();
        let prod = materialize_ring(
            &RingDescriptor::Product { factors: vec![a, b] },
            65536,
        )
        .unwrap();
        prop_assert_eq!(
            prod.is_abelian_ring(),
            ra.is_abelian_ring() && rb.is_abelian_ring()
        );
    }

    /// The quotient by the radical is semiprimitive and the radical is
    /// nilpotent of index bounded by the ring size.
    #[test]
    fn radical_quotient_is_semiprimitive(rd in small_ring()) {
        let r = materialize_ring(&rd, 65536).unwrap();
        let radical = r.jacobson_radical().clone();
        prop_assert!(radical.nilpotency_index <= r.size().max(1));
        if radical.ideal.size() < r.size() {
            let q = r.quotient_ring(&radical.ideal).unwrap();
            prop_assert!(q.ring.is_semiprimitive());
        }
    }

    /// When n·1 is not a unit, some prime divisor q of n generates a proper
    /// two-sided ideal whose quotient has characteristic exactly q, and some
    /// two-sided ideal above it has a domain quotient of characteristic q.
    /// (The concrete ideal R·(q·1)·R itself need not have a domain quotient:
    /// Z2 x Z2 with q = 2 gives the whole ring back.)
    #[test]
    fn non_invertible_integers_expose_a_prime_quotient(rd in small_ring(), n in 2usize..=12) {
        let r = materialize_ring(&rd, 65536).unwrap();
        if r.size() > 1 && !r.is_n_one_unit(n) {
            let q = (2..=n)
                .find(|&q| koethe::group::is_prime(q) && n % q == 0 && !r.is_n_one_unit(q))
                .expect("a non-invertible prime divisor exists");
            let q_one = r.n_times(r.one(), q);
            let ideal = ideal_generated(&r, &[q_one], Sidedness::TwoSided);
            prop_assert!(ideal.size() < r.size(), "ideal must be proper");
            let quotient = r.quotient_ring(&ideal).unwrap().ring;
            prop_assert_eq!(quotient.characteristic(), q);
            // Existence form: some proper two-sided ideal has a domain
            // quotient of characteristic q.
            let found = koethe::ring::ideal::all_ideals(&r, Sidedness::TwoSided, 100_000)
                .unwrap()
                .into_iter()
                .filter(|i| i.size() < r.size() && ideal.members.is_subset(&i.members))
                .any(|i| {
                    let qr = r.quotient_ring(&i).unwrap().ring;
                    let m = qr.size();
                    let domain = m > 1
                        && (1..m).all(|x| (1..m).all(|y| qr.mul(x, y) != 0));
                    domain && qr.characteristic() == q
                });
            prop_assert!(found, "no domain quotient of characteristic {} found", q);
        }
    }

    /// Idempotents of R/J lift through the cubic iteration with the
    /// logarithmic iteration bound, projecting back correctly.
    #[test]
    fn idempotents_lift_modulo_the_radical(rd in small_ring()) {
        let r = materialize_ring(&rd, 65536).unwrap();
        let radical = r.jacobson_radical().clone();
        if radical.ideal.is_zero() || radical.ideal.size() == r.size() {
            return Ok(());
        }
        let q = r.quotient_ring(&radical.ideal).unwrap();
        let bound = (radical.nilpotency_index as f64).log2().ceil() as usize;
        for ebar in q.ring.idempotents() {
            let x0 = q.reps[ebar];
            let lift = lift_idempotent(&r, &radical.ideal, x0).unwrap();
            prop_assert_eq!(r.mul(lift.idempotent, lift.idempotent), lift.idempotent);
            prop_assert!(radical.ideal.members.contains(r.sub(lift.idempotent, x0)));
            prop_assert!(lift.iterations <= bound.max(1));
        }
    }
}
