use deltoid::deltamatroid::{enumerate_deltamatroids, DeltaMatroid};
use deltoid::envelope::*;
use deltoid::ground::group;
use deltoid::matroid::Matroid;
use deltoid::represent::{adjacency_delta, circ_uniform, circ_uniform_matrix, FqMatrix, Graph};

fn dm(n: usize, sets: &[&[i32]]) -> DeltaMatroid {
    DeltaMatroid::from_signed(n, &sets.iter().map(|s| s.to_vec()).collect::<Vec<_>>()).unwrap()
}

fn mat(ground: &[i32], bases: &[&[i32]]) -> Matroid {
    Matroid::new(ground.to_vec(), &bases.iter().map(|b| b.to_vec()).collect::<Vec<_>>()).unwrap()
}

#[test]
fn env_support_examples() {
    let m = mat(&[1, -1], &[&[1], &[-1]]);
    assert_eq!(env_support(&m).unwrap(), vec![1, 1]);
    let pt = mat(&[1, -1], &[&[1]]);
    // rays in canonical order: {1}, {1̄}
    let h = env_support(&pt).unwrap();
    assert_eq!(h.len(), 2);
    assert!(h.contains(&1) && h.contains(&-1));
    assert!(env_support(&mat(&[1, 2], &[&[1]])).is_err());
}

#[test]
fn enveloping_examples() {
    let dpm = dm(1, &[&[1], &[-1]]);
    assert!(is_enveloping(&mat(&[1, -1], &[&[1], &[-1]]), &dpm).unwrap());
    assert!(!is_enveloping(&mat(&[1, -1], &[&[1]]), &dpm).unwrap());
    let u12 = Matroid::uniform(1, 2).unwrap();
    let p = DeltaMatroid::from_bases(&u12).unwrap();
    assert!(is_enveloping(&envelope_base(&u12).unwrap(), &p).unwrap());
}

#[test]
fn canonical_constructions() {
    let u11 = Matroid::uniform(1, 1).unwrap();
    assert_eq!(envelope_base(&u11).unwrap().bases_labels(), vec![vec![1]]);
    let u01 = Matroid::uniform(0, 1).unwrap();
    assert_eq!(envelope_base(&u01).unwrap().bases_labels(), vec![vec![-1]]);
    assert!(is_enveloping(&envelope_base(&u01).unwrap(), &DeltaMatroid::from_bases(&u01).unwrap()).unwrap());
    let u12 = Matroid::uniform(1, 2).unwrap();
    let e = envelope_indep(&u12).unwrap();
    assert!(is_enveloping(&e, &DeltaMatroid::from_independents(&u12).unwrap()).unwrap());
    for k in 0..=4 {
        for r in 0..=k {
            let m = Matroid::uniform(r, k).unwrap();
            assert!(is_enveloping(&envelope_base(&m).unwrap(), &DeltaMatroid::from_bases(&m).unwrap()).unwrap());
            assert!(is_enveloping(&envelope_indep(&m).unwrap(), &DeltaMatroid::from_independents(&m).unwrap()).unwrap());
        }
    }
}

#[test]
fn representation_envelopes() {
    let id = FqMatrix::new(2, vec![vec![1, 0, 0, 0, 0], vec![0, 1, 0, 0, 0]]).unwrap();
    let d = dm(2, &[&[1, 2]]);
    assert!(find_envelope(&d, &Strategy::Rep(id)).unwrap().is_some());
    for g in Graph::all(3) {
        let l = g.adjacency_matrix();
        let d = adjacency_delta(&g).unwrap();
        let w = find_envelope(&d, &Strategy::Rep(l.to_b_type())).unwrap().unwrap();
        assert_eq!(w.matroid, envelope_from_rep(&l).unwrap());
    }
    for (r, n) in [(1, 3), (2, 3), (2, 4), (3, 5)] {
        let l = circ_uniform_matrix(r, n, 0).unwrap();
        let d = circ_uniform(r, n).unwrap();
        assert!(find_envelope(&d, &Strategy::Rep(l)).unwrap().is_some());
    }
}

#[test]
fn lemmas_hold_for_witnesses() {
    let u12 = Matroid::uniform(1, 2).unwrap();
    for d in [DeltaMatroid::from_bases(&u12).unwrap(), DeltaMatroid::from_independents(&u12).unwrap(), dm(1, &[&[-1]])] {
        let w = find_envelope(&d, &Strategy::Auto).unwrap().unwrap();
        assert!(check_envelope_lemmas(&w).unwrap().passed());
    }
}

#[test]
fn witnesses_survive_operations() {
    for n in 1..=2 {
        for d in enumerate_deltamatroids(n).unwrap() {
            let Some(w) = find_envelope(&d, &Strategy::Auto).unwrap() else { continue };
            assert!(check_envelope_lemmas(&w).unwrap().passed(), "{d}");
            for g in group(n).unwrap().elements() {
                twist_witness(&w, g).unwrap();
            }
            dual_witness(&w).unwrap();
            product_witness(&w, &w).unwrap();
            for i in 1..=n {
                contract_witness(&w, i).unwrap();
                delete_witness(&w, i).unwrap();
            }
        }
    }
}

#[test]
fn every_small_delta_matroid_is_envelopable() {
    for n in 0..=2 {
        for d in enumerate_deltamatroids(n).unwrap() {
            assert!(find_envelope(&d, &Strategy::Auto).unwrap().is_some(), "{d}");
        }
    }
}
