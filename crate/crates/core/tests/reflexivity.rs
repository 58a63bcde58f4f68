use newton_ehrhart::reflexivity::{
    gorenstein_index_geometric, grothendieck_reflexive_classifier, is_reflexive_geometric, schur_gorenstein_classifier,
    schur_reflexive_classifier,
};
use newton_ehrhart::sweep::{grothendieck_sweep, schur_sweep};
use newton_ehrhart::{gorenstein_index, hstar, Partition, PolytopeHandle, Verdict};

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

#[test]
fn figure_values() {
    let a = PolytopeHandle::schur(p(&[2, 2, 0, 0]));
    let b = PolytopeHandle::schur(p(&[3, 1, 0, 0]));
    assert_eq!(hstar(&a).unwrap().to_string(), "1,15,15,1");
    assert_eq!(hstar(&b).unwrap().to_string(), "1,27,31,1");
    assert!(is_reflexive_geometric(&a).unwrap().is_reflexive());
    assert_eq!(is_reflexive_geometric(&b).unwrap().verdict, Verdict::NotReflexive);
}

#[test]
fn schur_classifiers_agree_with_geometry() {
    let cases = schur_sweep(10, 5).unwrap();
    assert!((2..=5).all(|m| cases.iter().any(|c| c.lambda.m() == m && c.lambda.weight() == 10)));
    let bad: Vec<_> = cases.iter().filter(|c| !c.reflexive_agrees() || !c.gorenstein_agrees()).collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn grothendieck_classifier_agrees_with_geometry() {
    let cases = grothendieck_sweep(8, 4, &[1, 2, 3]).unwrap();
    let bad: Vec<_> = cases.iter().filter(|c| !c.agrees()).collect();
    assert!(bad.is_empty(), "{bad:?}");
    assert!(cases.iter().any(|c| c.reflexive_geometric));
}

#[test]
fn classifiers_ignore_translation() {
    for v in [[2u32, 1, 0], [3, 0, 0], [2, 2, 0], [3, 1, 0], [1, 1, 0]] {
        let l = p(&v);
        for c in 1..=3 {
            let t = l.translate(c).unwrap();
            assert_eq!(schur_reflexive_classifier(&l).unwrap(), schur_reflexive_classifier(&t).unwrap());
            assert_eq!(schur_gorenstein_classifier(&l).unwrap(), schur_gorenstein_classifier(&t).unwrap());
            let a = is_reflexive_geometric(&PolytopeHandle::schur(l.clone())).unwrap().is_reflexive();
            let b = is_reflexive_geometric(&PolytopeHandle::schur(t)).unwrap().is_reflexive();
            assert_eq!(a, b);
        }
    }
}

#[test]
fn hypersimplices() {
    for n in 2..=8usize {
        for k in 1..n {
            let mut v = vec![0u32; n];
            v[..k].iter_mut().for_each(|x| *x = 1);
            let h = PolytopeHandle::schur(p(&v));
            let expect = n == 2 * k || k == 1 || k == n - 1;
            let by_hstar = gorenstein_index(&hstar(&h).unwrap());
            assert_eq!(by_hstar.is_some(), expect, "Δ({k},{n})");
            assert_eq!(schur_gorenstein_classifier(&p(&v)).unwrap(), expect);
            assert_eq!(gorenstein_index_geometric(&h).unwrap(), by_hstar);
        }
    }
}

#[test]
fn grothendieck_examples() {
    assert!(grothendieck_reflexive_classifier(1, &p(&[4, 4, 0])).unwrap());
    assert!(is_reflexive_geometric(&PolytopeHandle::grothendieck(1, p(&[4, 4, 0])).unwrap()).unwrap().is_reflexive());
    assert!(!grothendieck_reflexive_classifier(1, &p(&[2, 1, 0])).unwrap());
    assert!(grothendieck_reflexive_classifier(1, &p(&[3, 2, 1])).is_err());
    let d = is_reflexive_geometric(&PolytopeHandle::schur(p(&[0, 0, 0]))).unwrap();
    assert_eq!(d.verdict, Verdict::Degenerate);
}
