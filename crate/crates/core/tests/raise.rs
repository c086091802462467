use std::collections::{BTreeSet, VecDeque};

use grothlab::poly::schubert_and_grothendieck;
use grothlab::raise::{raise_to, raise_weight_with, RaiseOptions};
use grothlab::{max_weight_formula, pipe_dreams, trace, Permutation, PipeDream, WeightVector};

fn fireworks(n: usize) -> impl Iterator<Item = Permutation> {
    Permutation::all(n).filter(Permutation::is_fireworks)
}

#[test]
fn every_deficient_row_can_be_raised_in_s5() {
    let opts = RaiseOptions { check_steps: true };
    let mut raised = 0;
    for w in fireworks(5) {
        let top = max_weight_formula(&w).unwrap();
        for p in pipe_dreams(&w) {
            let wt = p.weight();
            for a in (1..=5).filter(|&a| wt[a - 1] < top[a - 1]) {
                let (q, _) = raise_weight_with(&p, &w, a, opts)
                    .unwrap_or_else(|e| panic!("{w} row {a}: {e}\n{}", p.to_ascii()));
                let qw = q.weight();
                assert_eq!(trace(&q).demazure, w);
                assert_eq!(qw[a - 1], wt[a - 1] + 1);
                for b in 1..a {
                    assert_eq!(q.row_mask(b), p.row_mask(b));
                }
                for b in a + 1..=5 {
                    assert!(qw[b - 1] <= wt[b - 1]);
                }
                raised += 1;
            }
        }
    }
    assert_eq!(raised, 979);
}

/// All weights reachable from reduced dreams by repeated raising.
fn reachable_weights(w: &Permutation, opts: RaiseOptions) -> BTreeSet<WeightVector> {
    let n = w.n();
    let top = max_weight_formula(w).unwrap();
    let mut seen: BTreeSet<PipeDream> = BTreeSet::new();
    let mut queue: VecDeque<PipeDream> = pipe_dreams(w).filter(|p| trace(p).reduced).collect();
    seen.extend(queue.iter().cloned());
    while let Some(p) = queue.pop_front() {
        let wt = p.weight();
        for a in (1..=n).filter(|&a| wt[a - 1] < top[a - 1]) {
            let (q, _) = raise_weight_with(&p, w, a, opts).unwrap_or_else(|e| panic!("{w} row {a}: {e}"));
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen.iter().map(PipeDream::weight).collect()
}

#[test]
fn raising_reaches_the_whole_support_in_s6() {
    let opts = RaiseOptions { check_steps: false };
    for w in fireworks(6) {
        let got = reachable_weights(&w, opts);
        let (_, g) = schubert_and_grothendieck(&w);
        let want: BTreeSet<WeightVector> = g.support().iter().cloned().collect();
        assert_eq!(got, want, "{w}");
    }
}

#[test]
fn raise_to_the_maximal_weight() {
    let w: Permutation = "3162754".parse().unwrap();
    let top = max_weight_formula(&w).unwrap();
    assert_eq!(top, [4, 3, 3, 2, 2, 1, 0].into());
    let reduced: Vec<PipeDream> = pipe_dreams(&w).filter(|p| trace(p).reduced).take(5).collect();
    assert!(!reduced.is_empty());
    for p in &reduced {
        let target: WeightVector = [3, 2, 2, 2, 1, 1, 0].into();
        if p.weight().le(&target) {
            let q = raise_to(p, &w, &target).unwrap();
            assert_eq!(q.weight(), target);
            assert_eq!(trace(&q).demazure, w);
        }
        let q = raise_to(p, &w, &top).unwrap();
        assert_eq!(q.weight(), top);
    }
}
