use std::collections::HashSet;

use newton_ehrhart::partitions::{partitions_between, partitions_of};
use newton_ehrhart::symfun::skew_strict_fillings_count;
use newton_ehrhart::{dominates, dominating_sequence, in_a, make_partition, reduce_by_translation, Error, Partition};
use num_traits::Zero;

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn all_lambdas(max_n: u64, max_m: usize) -> Vec<Partition> {
    (1..=max_m).flat_map(|m| (0..=max_n).flat_map(move |n| partitions_of(n, m, n as u32))).collect()
}

/// Every state reachable by adding legal boxes in any order; returns the
/// states with no legal move.
fn terminal_states(h: u32, lambda: &[u32]) -> HashSet<Vec<u32>> {
    let mut seen = HashSet::new();
    let mut stack = vec![lambda.to_vec()];
    let mut terminal = HashSet::new();
    while let Some(cur) = stack.pop() {
        if !seen.insert(cur.clone()) {
            continue;
        }
        let mut moved = false;
        for r in 0..cur.len() {
            let ok = (cur[r] - lambda[r]) < h * r as u32 && (r == 0 || cur[r - 1] > cur[r]);
            if ok {
                let mut next = cur.clone();
                next[r] += 1;
                stack.push(next);
                moved = true;
            }
        }
        if !moved {
            terminal.insert(cur);
        }
    }
    terminal
}

#[test]
fn make_partition_examples() {
    assert_eq!(make_partition(&[2, 1], 3).unwrap(), p(&[2, 1, 0]));
    assert_eq!(make_partition(&[3], 3).unwrap(), p(&[3, 0, 0]));
    match make_partition(&[1, 2], 2) {
        Err(Error::InvalidPartition { index, .. }) => assert_eq!(index, 1),
        other => panic!("unexpected {other:?}"),
    }
    assert!(make_partition(&[2, -1], 3).is_err());
    assert!(make_partition(&[1, 1, 1, 1], 3).is_err());
    assert_ne!(p(&[2, 1, 0]), p(&[2, 1]));
}

#[test]
fn dominance_examples() {
    assert!(dominates(&p(&[2, 2, 0]), &p(&[2, 1, 1])).unwrap());
    assert!(!dominates(&p(&[2, 1, 1]), &p(&[2, 2, 0])).unwrap());
    for l in all_lambdas(5, 3) {
        assert!(dominates(&l, &l).unwrap());
    }
    assert!(dominates(&p(&[2, 1]), &p(&[2, 1, 0])).is_err());
}

#[test]
fn reduction_examples() {
    assert_eq!(reduce_by_translation(&p(&[3, 2, 1])), (p(&[2, 1, 0]), 1));
    assert_eq!(reduce_by_translation(&p(&[2, 1, 0])), (p(&[2, 1, 0]), 0));
    assert_eq!(reduce_by_translation(&p(&[5, 5, 5])), (p(&[0, 0, 0]), 5));
}

#[test]
fn sequence_examples() {
    let s = dominating_sequence(1, &p(&[2, 1, 0])).unwrap();
    let seq: Vec<String> = s.partitions().iter().map(|x| x.to_string()).collect();
    assert_eq!(seq, ["2,1,0", "2,2,0", "2,2,1", "2,2,2"]);
    assert_eq!(s.n(), 3);
    let s = dominating_sequence(2, &p(&[3, 0])).unwrap();
    let seq: Vec<String> = s.partitions().iter().map(|x| x.to_string()).collect();
    assert_eq!(seq, ["3,0", "3,1", "3,2"]);
    assert_eq!(dominating_sequence(3, &p(&[4])).unwrap().n(), 0);
}

#[test]
fn greedy_order_is_forced() {
    for h in 1..=3 {
        for l in all_lambdas(6, 4) {
            let s = dominating_sequence(h, &l).unwrap();
            let terminal = terminal_states(h, l.parts());
            assert_eq!(terminal.len(), 1, "h={h} λ={l}");
            assert!(terminal.contains(s.top().parts()), "h={h} λ={l}");
            // closed form for the increments
            let lam = l.parts();
            let mut a = vec![0u32; lam.len()];
            for r in 1..lam.len() {
                a[r] = (h * r as u32).min(lam[r - 1] + a[r - 1] - lam[r]);
            }
            assert_eq!(s.increments(), a.as_slice());
            // invariants of the recorded data
            assert_eq!(s.increments()[0], 0);
            assert_eq!(*s.prefix_increments().last().unwrap(), s.n());
            for (k, w) in s.partitions().windows(2).enumerate() {
                assert_eq!(w[1].weight(), w[0].weight() + 1, "step {k}");
                assert!(w[0].is_contained_in(&w[1]));
            }
            // rows fill in order, so λ^(b_i) has rows 1..i complete
            for (i, &bi) in s.prefix_increments().iter().enumerate() {
                let layer = s.layer(bi).unwrap();
                for r in 0..=i {
                    assert_eq!(layer.parts()[r], s.top().parts()[r]);
                }
            }
        }
    }
}

#[test]
fn layers_dominate_the_interval() {
    for h in 1..=2 {
        for l in all_lambdas(5, 4) {
            let s = dominating_sequence(h, &l).unwrap();
            let between = partitions_between(&l, s.top()).unwrap();
            for mu in &between {
                let k = (mu.weight() - l.weight()) as usize;
                assert!(dominates(s.layer(k).unwrap(), mu).unwrap(), "h={h} λ={l} μ={mu}");
            }
            let top_weight: Vec<&Partition> = between.iter().filter(|m| m.weight() == s.top().weight()).collect();
            assert_eq!(top_weight, vec![s.top()]);
        }
    }
}

#[test]
fn a_set_is_exactly_the_nonzero_coefficients() {
    // b_{h,λμ} > 0 exactly on the interval [λ, λ^(N)] inside a larger box
    for h in 1..=2u32 {
        for l in all_lambdas(4, 3) {
            let s = dominating_sequence(h, &l).unwrap();
            let roomy: Vec<u32> = l.parts().iter().map(|&x| x + 2 * h + 1).collect();
            let roomy = Partition::new(roomy.iter().map(|_| roomy[0]).collect()).unwrap();
            for mu in partitions_between(&l, &roomy).unwrap() {
                let b = skew_strict_fillings_count(h, &l, &mu).unwrap();
                assert_eq!(!b.is_zero(), in_a(h, &l, &mu).unwrap(), "h={h} λ={l} μ={mu}");
                assert_eq!(in_a(h, &l, &mu).unwrap(), mu.is_contained_in(s.top()));
            }
        }
    }
    assert!(in_a(1, &p(&[2, 1, 0]), &p(&[2, 2, 1])).unwrap());
    assert!(!in_a(1, &p(&[2, 1, 0]), &p(&[3, 1, 0])).unwrap());
}

#[test]
fn sequence_commutes_with_dilation() {
    for h in 1..=2 {
        for l in all_lambdas(6, 4) {
            let top = dominating_sequence(h, &l).unwrap().top().clone();
            for t in 1..=3 {
                let dil = dominating_sequence(t * h, &l.dilate(t).unwrap()).unwrap();
                assert_eq!(dil.top(), &top.dilate(t).unwrap(), "h={h} λ={l} t={t}");
            }
        }
    }
}
