use deltoid::ground::{
    enumerate_ads, enumerate_group, eulerian_b, gale_leq, gale_leq_segments, maximal_ads, weyl_act, AdmissibleSet,
    SignedIndex, SignedPermutation,
};
use deltoid::Error;
use proptest::prelude::*;

fn s(n: usize, e: &[i32]) -> AdmissibleSet {
    AdmissibleSet::from_signed(n, e).unwrap()
}

fn w(images: &[i32]) -> SignedPermutation {
    SignedPermutation::from_images(images.to_vec()).unwrap()
}

#[test]
fn admissible_sets_reject_pairs() {
    assert!(AdmissibleSet::from_signed(2, &[1, -1]).is_err());
    assert!(AdmissibleSet::from_signed(2, &[3]).is_err());
    assert_eq!(s(3, &[2, -3, 1]).to_signed(), vec![-3, 1, 2]);
    assert_eq!(s(2, &[1, -2]).bar(), s(2, &[-1, 2]));
    assert_eq!(s(2, &[1, -2]).e_vector(), vec![1, -1]);
}

#[test]
fn signed_index_bar_is_an_involution() {
    let i = SignedIndex::from_i32(-3).unwrap();
    assert_eq!(i.bar().bar(), i);
    assert_eq!(i.bar().to_i32(), 3);
    assert!(SignedIndex::from_i32(0).is_err());
}

#[test]
fn gale_examples() {
    assert!(gale_leq(&s(1, &[-1]), &s(1, &[1])).unwrap());
    assert!(gale_leq(&s(2, &[-1, 2]), &s(2, &[1, 2])).unwrap());
    // sorted: (2̄, 1) against (1̄, 2), so comparable both ways of checking
    assert!(gale_leq(&s(2, &[1, -2]), &s(2, &[-1, 2])).unwrap());
    assert!(gale_leq_segments(&s(2, &[1, -2]), &s(2, &[-1, 2])).unwrap());
    assert!(!gale_leq(&s(2, &[-1, 2]), &s(2, &[1, -2])).unwrap());
    assert!(!gale_leq(&s(2, &[1, -2]), &s(2, &[-1, -2])).unwrap());
    assert!(matches!(gale_leq(&s(2, &[1]), &s(2, &[1, 2])), Err(Error::InvalidArgument(_))));
}

#[test]
fn gale_forms_agree_and_order_is_partial() {
    for n in 1..=4 {
        let all = maximal_ads(n);
        let bottom = s(n, &(1..=n as i32).map(|i| -i).collect::<Vec<_>>());
        for a in &all {
            assert!(gale_leq(&bottom, a).unwrap());
            assert!(gale_leq(a, a).unwrap());
            for b in &all {
                let ab = gale_leq(a, b).unwrap();
                assert_eq!(ab, gale_leq_segments(a, b).unwrap(), "{a:?} {b:?}");
                if ab && a != b {
                    assert!(!gale_leq(b, a).unwrap());
                }
                for c in &all {
                    if ab && gale_leq(b, c).unwrap() {
                        assert!(gale_leq(a, c).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn weyl_examples() {
    assert_eq!(weyl_act(&SignedPermutation::identity(2), &s(2, &[1, -2])).unwrap(), s(2, &[1, -2]));
    assert_eq!(weyl_act(&SignedPermutation::tau_last(2).unwrap(), &s(2, &[1, 2])).unwrap(), s(2, &[1, -2]));
    assert_eq!(weyl_act(&w(&[2, 1]), &s(2, &[1, -2])).unwrap(), s(2, &[2, -1]));
    assert!(weyl_act(&w(&[2, 1]), &s(3, &[1])).is_err());
}

#[test]
fn descents() {
    assert_eq!(SignedPermutation::identity(2).descent_count(), 0);
    assert_eq!(w(&[-1, 2]).descent_count(), 1);
    // oracle: count directly from the total order with w(0) = 0
    for n in 1..=4 {
        let mut hist = vec![0u64; n + 1];
        for g in enumerate_group(n).unwrap() {
            let mut prev = 0;
            let mut d = 0;
            for &x in g.images() {
                if prev > x {
                    d += 1;
                }
                prev = x;
            }
            assert_eq!(g.descent_count(), d);
            hist[d] += 1;
        }
        assert_eq!(hist.iter().sum::<u64>(), (1..=n as u64).product::<u64>() << n);
        assert_eq!(eulerian_b(n).unwrap(), hist);
    }
    assert_eq!(eulerian_b(2).unwrap(), vec![1, 6, 1]);
}

#[test]
fn enumeration_sizes() {
    assert_eq!(enumerate_group(2).unwrap().len(), 8);
    assert_eq!(enumerate_group(4).unwrap().len(), 384);
    assert_eq!(enumerate_ads(3, 3).unwrap().len(), 8);
    // lexicographic on (pos, neg)
    assert_eq!(enumerate_ads(1, 1).unwrap(), vec![s(1, &[-1]), s(1, &[1])]);
    assert_eq!(enumerate_ads(4, 2).unwrap().len(), 6 * 4);
    assert!(matches!(enumerate_group(40), Err(Error::ResourceLimit { .. })));
}

fn perm(n: usize) -> impl Strategy<Value = SignedPermutation> {
    let order = Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle();
    (order, proptest::collection::vec(any::<bool>(), n)).prop_map(|(imgs, signs)| {
        let imgs = imgs.into_iter().zip(signs).map(|(x, neg)| if neg { -x } else { x }).collect();
        SignedPermutation::from_images(imgs).unwrap()
    })
}

proptest! {
    #[test]
    fn weyl_act_is_an_action(a in perm(4), b in perm(4), bits in 0u32..81) {
        // decode a base-3 digit string into an admissible set
        let mut e = Vec::new();
        let mut k = bits;
        for i in 1..=4 {
            match k % 3 { 1 => e.push(i), 2 => e.push(-i), _ => {} }
            k /= 3;
        }
        let set = s(4, &e);
        let ab = a.compose(&b);
        prop_assert_eq!(weyl_act(&ab, &set).unwrap(), weyl_act(&a, &weyl_act(&b, &set).unwrap()).unwrap());
        prop_assert_eq!(weyl_act(&a.inverse(), &weyl_act(&a, &set).unwrap()).unwrap(), set.clone());
        prop_assert_eq!(weyl_act(&a, &set.bar()).unwrap(), weyl_act(&a, &set).unwrap().bar());
    }
}
