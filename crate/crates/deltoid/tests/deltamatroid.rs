use deltoid::deltamatroid::{enumerate_deltamatroids, DeltaMatroid};
use deltoid::ground::{enumerate_group, maximal_ads, weyl_act, AdmissibleSet, SignedPermutation};
use deltoid::matroid::Matroid;
use deltoid::suite::random_deltamatroids;
use deltoid::Error;
use proptest::prelude::*;

fn dm(n: usize, sets: &[&[i32]]) -> DeltaMatroid {
    let sets: Vec<Vec<i32>> = sets.iter().map(|s| s.to_vec()).collect();
    DeltaMatroid::from_signed(n, &sets).unwrap()
}

fn set(n: usize, e: &[i32]) -> AdmissibleSet {
    AdmissibleSet::from_signed(n, e).unwrap()
}

fn circle() -> DeltaMatroid {
    dm(2, &[&[1, 2], &[-1, -2]])
}

/// ±1 vertex of a feasible bitset.
fn vertex(n: usize, b: u32) -> Vec<i64> {
    (0..n).map(|i| if b >> i & 1 == 1 { 1 } else { -1 }).collect()
}

/// Is [a, b] an edge of conv(vs)? Searches for a functional maximized exactly on {a, b}.
fn is_edge(vs: &[Vec<i64>], a: usize, b: usize) -> bool {
    let n = vs[0].len();
    let grid = 5i64.pow(n as u32);
    (0..grid).any(|code| {
        let mut c = code;
        let w: Vec<i64> = (0..n)
            .map(|_| {
                let x = c % 5 - 2;
                c /= 5;
                x
            })
            .collect();
        let dot = |v: &Vec<i64>| v.iter().zip(&w).map(|(x, y)| x * y).sum::<i64>();
        let top = dot(&vs[a]);
        top == dot(&vs[b]) && vs.iter().enumerate().all(|(k, v)| k == a || k == b || dot(v) < top)
    })
}

/// Edge-direction test: no edge may join vertices differing in three or more coordinates.
fn edge_oracle(n: usize, family: &[u32]) -> bool {
    let vs: Vec<Vec<i64>> = family.iter().map(|&b| vertex(n, b)).collect();
    for a in 0..vs.len() {
        for b in a + 1..vs.len() {
            if (family[a] ^ family[b]).count_ones() >= 3 && is_edge(&vs, a, b) {
                return false;
            }
        }
    }
    true
}

#[test]
fn exchange_axiom_matches_edge_directions() {
    for n in 1..=3usize {
        let m = 1u32 << n;
        let mut count = 0;
        for mask in 1u32..(1 << m) {
            let family: Vec<u32> = (0..m).filter(|b| mask >> b & 1 == 1).collect();
            let by_exchange = DeltaMatroid::from_bitsets(n, family.iter().copied()).is_ok();
            assert_eq!(by_exchange, edge_oracle(n, &family), "n = {n}, family {family:?}");
            count += by_exchange as usize;
        }
        assert_eq!(count, enumerate_deltamatroids(n).unwrap().len());
    }
}

#[test]
fn enumeration_counts() {
    // frozen from the edge-direction oracle above
    assert_eq!(enumerate_deltamatroids(0).unwrap().len(), 1);
    assert_eq!(enumerate_deltamatroids(1).unwrap().len(), 3);
    assert_eq!(enumerate_deltamatroids(2).unwrap().len(), 15);
    assert_eq!(enumerate_deltamatroids(3).unwrap().len(), 155);
    assert!(matches!(enumerate_deltamatroids(4), Err(Error::ResourceLimit { .. })));
}

#[test]
fn validation_examples() {
    dm(1, &[&[1], &[-1]]);
    assert!(circle().is_even());
    // every family on n = 2 is a delta-matroid
    dm(2, &[&[1, 2], &[-1, -2], &[1, -2]]);
    let bad = DeltaMatroid::from_signed(3, &[vec![1, 2, 3], vec![-1, -2, -3]]);
    assert!(matches!(bad, Err(Error::NotADeltaMatroid(_))));
    assert!(DeltaMatroid::from_signed(2, &[vec![1]]).is_err());
    assert!(DeltaMatroid::from_signed(2, &[]).is_err());
}

#[test]
fn minors_examples() {
    let pm = dm(1, &[&[1], &[-1]]);
    let p = pm.project(1).unwrap();
    assert_eq!(p.n(), 0);
    assert_eq!(p.feasible().len(), 1);
    assert_eq!(circle().project(1).unwrap(), dm(1, &[&[1], &[-1]]));
    assert_eq!(circle().contract(1).unwrap(), dm(1, &[&[1]]));
    assert_eq!(circle().delete(1).unwrap(), dm(1, &[&[-1]]));
    // 1 is a coloop of D⁺: deletion falls back to contraction
    let plus = dm(1, &[&[1]]);
    assert_eq!(plus.delete(1).unwrap(), plus.contract(1).unwrap());
}

#[test]
fn dual_product_twist_examples() {
    let plus = dm(1, &[&[1]]);
    let minus = dm(1, &[&[-1]]);
    assert_eq!(plus.dual(), minus);
    assert_eq!(plus.product(&minus), dm(2, &[&[1, -2]]));
    assert_eq!(plus.twist(&SignedPermutation::tau_last(1).unwrap()).unwrap(), minus);
    assert!(plus.twist(&SignedPermutation::identity(2)).is_err());
}

#[test]
fn distance_examples() {
    let c = circle();
    assert_eq!(c.distance(&set(2, &[1, 2])).unwrap(), 0);
    assert_eq!(c.distance(&set(2, &[1, -2])).unwrap(), 1);
    assert_eq!(dm(1, &[&[1]]).distance(&set(1, &[-1])).unwrap(), 1);
    assert!(c.distance(&set(2, &[1])).is_err());
}

#[test]
fn from_matroid_examples() {
    let u12 = Matroid::uniform(1, 2).unwrap();
    assert_eq!(DeltaMatroid::from_bases(&u12).unwrap(), dm(2, &[&[1, -2], &[-1, 2]]));
    assert_eq!(DeltaMatroid::from_independents(&u12).unwrap(), dm(2, &[&[-1, -2], &[1, -2], &[-1, 2]]));
    assert_eq!(DeltaMatroid::from_bases(&Matroid::uniform(1, 1).unwrap()).unwrap(), dm(1, &[&[1]]));
    for k in 0..=5 {
        for r in 0..=k {
            let m = Matroid::uniform(r, k).unwrap();
            assert!(DeltaMatroid::from_bases(&m).is_ok());
            assert!(DeltaMatroid::from_independents(&m).is_ok());
        }
    }
}

#[test]
fn extremal_feasible_examples() {
    let pm = dm(1, &[&[1], &[-1]]);
    assert_eq!(pm.w_min_feasible(&SignedPermutation::identity(1)), set(1, &[-1]));
    assert_eq!(pm.w_min_feasible(&SignedPermutation::tau_last(1).unwrap()), set(1, &[1]));
    assert_eq!(circle().w_min_feasible(&SignedPermutation::identity(2)), set(2, &[-1, -2]));
}

/// Brute force: minimize Σ_k λ_k ⟨e_{w(1)}+…+e_{w(k)}, x⟩ over the feasible vertices.
fn brute_min(d: &DeltaMatroid, w: &SignedPermutation) -> AdmissibleSet {
    let n = d.n();
    let mut func = vec![0i64; n];
    for (k, &img) in w.images().iter().enumerate() {
        let weight = (n - k) as i64;
        let i = img.unsigned_abs() as usize - 1;
        func[i] += if img > 0 { weight } else { -weight };
    }
    let best = d
        .feasible()
        .iter()
        .copied()
        .min_by_key(|&b| vertex(n, b).iter().zip(&func).map(|(x, y)| x * y).sum::<i64>())
        .unwrap();
    AdmissibleSet::maximal(n, best)
}

#[test]
fn extremal_feasible_sets_match_brute_force() {
    for n in 1..=3 {
        let group = enumerate_group(n).unwrap();
        for d in enumerate_deltamatroids(n).unwrap() {
            for w in &group {
                assert_eq!(d.w_min_feasible(w), brute_min(&d, w), "{d} {w:?}");
                // the maximum of D is the bar of the minimum of the dual
                assert_eq!(d.w_max_feasible(w).bar(), d.dual().w_min_feasible(w));
                // twisting moves the extremal set along
                let moved = d.twist(w).unwrap();
                for v in group.iter().step_by(7) {
                    let lhs = moved.w_min_feasible(&w.compose(v));
                    assert_eq!(lhs, weyl_act(w, &d.w_min_feasible(v)).unwrap());
                }
            }
        }
    }
}

#[test]
fn loops_coloops_cornered() {
    let ip = DeltaMatroid::from_independents(&Matroid::uniform(1, 2).unwrap()).unwrap();
    let (w, m) = ip.is_cornered().unwrap();
    assert_eq!(w, SignedPermutation::identity(2));
    assert_eq!(m, Matroid::uniform(1, 2).unwrap());
    assert!(!circle().is_standard_cornered());
    assert_eq!(dm(1, &[&[-1]]).loops(), vec![1]);
    assert_eq!(dm(1, &[&[1]]).coloops(), vec![1]);
}

#[test]
fn cornered_witnesses_are_correct() {
    for n in 1..=3 {
        for d in enumerate_deltamatroids(n).unwrap() {
            if let Some((w, m)) = d.is_cornered() {
                let ip = DeltaMatroid::from_independents(&m).unwrap();
                assert_eq!(d.twist(&w).unwrap(), ip, "{d}");
            }
        }
    }
}

#[test]
fn signed_round_trip() {
    for d in enumerate_deltamatroids(3).unwrap() {
        let back = DeltaMatroid::from_signed(3, &d.to_signed()).unwrap();
        assert_eq!(back, d);
        let sets: Vec<AdmissibleSet> = d.feasible_sets();
        assert!(sets.iter().all(|s| s.is_maximal()));
        assert_eq!(sets.len(), d.feasible().len());
    }
    assert_eq!(maximal_ads(3).len(), 8);
}

fn random_dm() -> impl Strategy<Value = DeltaMatroid> {
    (2usize..=4, any::<u64>()).prop_map(|(n, seed)| random_deltamatroids(n, 1, seed).unwrap().remove(0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn projections_commute(d in random_dm(), i in 1usize..=4, j in 1usize..=4) {
        let n = d.n();
        prop_assume!(i <= n && j <= n && i < j);
        // after removing i < j, element j is relabeled j − 1
        let a = d.project(i).unwrap().project(j - 1).unwrap();
        let b = d.project(j).unwrap().project(i).unwrap();
        prop_assert_eq!(a, b);
        let a = d.project(i).unwrap().contract(j - 1).unwrap();
        let b = d.contract(j).unwrap().project(i).unwrap();
        prop_assert_eq!(a, b);
        let a = d.project(i).unwrap().delete(j - 1).unwrap();
        let b = d.delete(j).unwrap().project(i).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn dual_swaps_delete_and_contract(d in random_dm(), i in 1usize..=4) {
        prop_assume!(i <= d.n());
        prop_assert_eq!(d.delete(i).unwrap().dual(), d.dual().contract(i).unwrap());
        prop_assert_eq!(d.dual().dual(), d);
    }

    #[test]
    fn products_are_delta_matroids(a in random_dm(), b in random_dm()) {
        let p = a.product(&b);
        prop_assert_eq!(p.n(), a.n() + b.n());
        prop_assert_eq!(p.feasible().len(), a.feasible().len() * b.feasible().len());
        prop_assert!(DeltaMatroid::from_bitsets(p.n(), p.feasible().iter().copied()).is_ok());
    }
}
