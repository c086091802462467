//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Runs under `cargo test` with the default harness disabled so the report
//! is always printed.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use grothlab::convex::{
    check_groth_lower_bounded, check_layered_domination, check_m_convex, check_main_support,
    check_psp_formula, check_psp_inclusion, check_schub_support,
};
use grothlab::poly::{grothendieck_rec, poly_from_pipe_dreams, schubert_rec};
use grothlab::raise::lemmas::check_all_tile_lemmas;
use grothlab::raise::{raise_weight_with, RaiseOptions};
use grothlab::sweep::{psp_pairs, random_diagrams_n};
use grothlab::{
    max_weight_formula, pipe_dreams, rothe_diagram, trace, ExponentVector, Permutation, PipeDream,
    SparsePolynomial,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn poly(n: usize, terms: &[(&[u32], i64)]) -> SparsePolynomial {
    SparsePolynomial::from_terms(n, terms.iter().map(|(e, c)| (ExponentVector(e.to_vec()), *c))).unwrap()
}

fn fireworks(n: usize) -> Vec<Permutation> {
    Permutation::all(n).filter(Permutation::is_fireworks).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_values_2413() -> Outcome {
    let w = perm("2413");
    let s = poly_from_pipe_dreams(&w, true);
    let g = poly_from_pipe_dreams(&w, false);
    let s_want = poly(4, &[(&[1, 2, 0, 0], 1), (&[2, 1, 0, 0], 1)]);
    let g_want = poly(4, &[(&[1, 2, 0, 0], 1), (&[2, 1, 0, 0], 1), (&[2, 2, 0, 0], -1)]);
    ensure(s == s_want, || format!("S = {s}"))?;
    ensure(g == g_want, || format!("G = {g}"))?;
    let all: Vec<PipeDream> = pipe_dreams(&w).collect();
    let reduced = all.iter().filter(|p| trace(p).reduced).count();
    ensure(all.len() == 3 && reduced == 2, || format!("|PD| = {}, reduced {reduced}", all.len()))?;
    Ok(format!("G = {g}, |PD| = 3 (2 reduced)"))
}

fn c2_max_weight_31542() -> Outcome {
    let w = perm("31542");
    let want: ExponentVector = [3, 2, 2, 1, 0].into();
    let closure = rothe_diagram(&w).upward_closure().row_weight();
    let formula = max_weight_formula(&w).map_err(|e| e.to_string())?;
    ensure(closure == want && formula == want, || format!("closure {closure}, formula {formula}"))?;
    Ok(format!("{want} by closure and by formula"))
}

fn c3_tiling_3162754() -> Outcome {
    let p = PipeDream::new(
        7,
        [(1, 1), (1, 2), (1, 5), (2, 2), (2, 3), (3, 3), (3, 4), (4, 2), (4, 3), (5, 1), (6, 1)],
    )
    .map_err(|e| e.to_string())?;
    let tr = trace(&p);
    let fakes: BTreeSet<_> = [(4, 2), (5, 1), (6, 1)].into_iter().collect();
    ensure(tr.demazure == perm("3162754"), || format!("demazure {}", tr.demazure))?;
    ensure(tr.weight == [3, 2, 2, 2, 1, 1, 0].into(), || format!("weight {}", tr.weight))?;
    ensure(tr.fake_crosses == fakes, || format!("fakes {:?}", tr.fake_crosses))?;
    Ok("3162754, weight (3,2,2,2,1,1,0), fakes {(4,2),(5,1),(6,1)}".into())
}

fn c4_oracle_equivalence() -> Outcome {
    let mut k = 0;
    for w in Permutation::all(5) {
        ensure(poly_from_pipe_dreams(&w, true) == schubert_rec(&w), || format!("Schubert differs at {w}"))?;
        ensure(poly_from_pipe_dreams(&w, false) == grothendieck_rec(&w), || format!("Grothendieck differs at {w}"))?;
        k += 1;
    }
    Ok(format!("{k} permutations"))
}

fn c5_main_support() -> Outcome {
    let ws = fireworks(6);
    for w in &ws {
        let c = check_main_support(w).map_err(|e| e.to_string())?;
        ensure(c.ok(), || format!("{w}: {c:?}"))?;
    }
    Ok(format!("{} fireworks permutations", ws.len()))
}

fn surgery_sweep(opts: RaiseOptions) -> Outcome {
    let mut k = 0;
    for w in fireworks(5) {
        let top = max_weight_formula(&w).unwrap();
        for p in pipe_dreams(&w) {
            let wt = p.weight();
            for a in (1..=5).filter(|&a| wt[a - 1] < top[a - 1]) {
                let (q, _) = raise_weight_with(&p, &w, a, opts).map_err(|e| format!("{w} row {a}: {e}"))?;
                let qw = q.weight();
                let ok = trace(&q).demazure == w
                    && (1..a).all(|b| q.row_mask(b) == p.row_mask(b))
                    && qw[a - 1] == wt[a - 1] + 1
                    && (a + 1..=5).all(|b| qw[b - 1] <= wt[b - 1]);
                ensure(ok, || format!("{w} row {a}: {wt} -> {qw}"))?;
                k += 1;
            }
        }
    }
    Ok(format!("{k} raises"))
}

fn c6_surgery() -> Outcome {
    surgery_sweep(RaiseOptions::default())
}

fn c7_m_convex() -> Outcome {
    let ws = fireworks(6);
    for w in &ws {
        let (_, witness) = check_m_convex(w).map_err(|e| e.to_string())?;
        ensure(witness.is_none(), || format!("{w}: {witness:?}"))?;
    }
    Ok(format!("{} fireworks permutations", ws.len()))
}

fn c8_layered() -> Outcome {
    let ws = fireworks(6);
    for w in &ws {
        let r = check_layered_domination(w).map_err(|e| e.to_string())?;
        ensure(r.ok, || format!("{r:?}"))?;
    }
    Ok(format!("{} fireworks permutations", ws.len()))
}

fn c9_schubert_support() -> Outcome {
    let mut k = 0;
    for w in Permutation::all(6) {
        let r = check_schub_support(&w);
        ensure(r.ok, || format!("{r:?}"))?;
        k += 1;
    }
    Ok(format!("{k} permutations"))
}

fn c10_spanning_sets() -> Outcome {
    let diagrams = random_diagrams_n(5, 20240601, 200);
    for d in &diagrams {
        let r = check_psp_formula(d);
        ensure(r.ok, || format!("{r:?}"))?;
    }
    let pairs = psp_pairs(5);
    for (a, b) in &pairs {
        let ok = check_psp_inclusion(a, b, 5).map_err(|e| e.to_string())?;
        ensure(ok, || format!("A={a:?} B={b:?}"))?;
    }
    Ok(format!("{} diagrams, {} (A,B) pairs", diagrams.len(), pairs.len()))
}

fn c11_lemmas() -> Outcome {
    let mut dreams = 0;
    for w in Permutation::all(5) {
        for p in pipe_dreams(&w) {
            check_all_tile_lemmas(&p, &trace(&p)).map_err(|e| format!("{w}: {e}"))?;
            dreams += 1;
        }
        let r = check_groth_lower_bounded(&w);
        ensure(r.ok, || format!("{r:?}"))?;
    }
    let raises = surgery_sweep(RaiseOptions { check_steps: true })?;
    Ok(format!("{dreams} dreams of S_5; every step of {raises}"))
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria: [Criterion; 11] = [
        ("polynomials and pipe dreams of 2413", c1_values_2413, secs(1)),
        ("maximal weight of 31542", c2_max_weight_31542, secs(1)),
        ("tracing a tiling of 3162754", c3_tiling_3162754, secs(1)),
        ("pipe dreams = recursion on S_5", c4_oracle_equivalence, secs(30)),
        ("3-way support equality, fireworks S_6", c5_main_support, secs(600)),
        ("weight raising sweep, fireworks S_5", c6_surgery, secs(300)),
        ("M-convex homogenized support, fireworks S_6", c7_m_convex, secs(300)),
        ("layered domination, fireworks S_6", c8_layered, secs(300)),
        ("Schubert support = column base sumset, S_6", c9_schubert_support, secs(120)),
        ("spanning-set formula and inclusion", c10_spanning_sets, secs(60)),
        ("structural lemmas on S_5 and every surgery step", c11_lemmas, Duration::MAX),
    ];
    let mut failed = 0;
    for (k, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let in_time = took <= *limit;
        let bound = if *limit == Duration::MAX { "no bound".to_string() } else { format!("< {}s", limit.as_secs()) };
        let (status, detail) = match (&outcome, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("{d}; over time bound")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} criterion {:>2}: {name} [{:.2}s, {bound}] {detail}", k + 1, took.as_secs_f64());
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
