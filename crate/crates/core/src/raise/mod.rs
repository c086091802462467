//! Weight-raising surgery on pipe dreams of fireworks permutations.
//!
//! Given `P ∈ PD(w)` and a row `a` whose cross count is below the maximum
//! `wt(D̄(w))_a`, [`raise_weight`] produces `Q ∈ PD(w)` that agrees with `P`
//! above row `a`, has one more cross in row `a`, and no more crosses than `P`
//! in any later row.
//!
//! The surgery starts from a bump tile `T` in row `a` whose primary pipe `i`
//! is not a left-to-right maximum of `w`, with secondary pipe `j`:
//!
//! - case 0, `i < j`: the pipes have already crossed, so turning `T` into a
//!   cross adds a fake crossing and nothing else changes;
//! - case 1, `i > j` and `i` is primary of no real cross below row `a`: `i`
//!   and `j` cross at some `T'` below; cross at `T` instead, uncross `T'`, and
//!   bump every fake cross on `i` or `j` between the two;
//! - case 2, `i` is primary of a real cross below row `a`: with `T'` the
//!   highest one and `ℓ` its secondary pipe, let `S` be the tile in row `a`
//!   where `ℓ` is primary, `m` its secondary pipe and `S'` the real crossing of
//!   `ℓ` and `m`; perform the case 1 rewiring on `S`, `S'`.
//!
//! Case 1 and 2 rewirings may cost a fake cross in row `a`; the step is then
//! repeated, with `T` moving left (case 1) or `S` moving toward `T` (case 2).

pub mod lemmas;

use serde::Serialize;
use thiserror::Error;

use crate::perm::{max_weight_formula, Permutation};
use crate::pipedream::{trace, travel_key, PipeDream, Tile, TraceResult};
use crate::vector::WeightVector;

use lemmas::{check_all_tile_lemmas, check_crosses_both, highest_real_cross_below, tiles_between};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(into = "u8")]
pub enum SurgeryCase {
    Zero,
    One,
    Two,
}

impl From<SurgeryCase> for u8 {
    fn from(c: SurgeryCase) -> u8 {
        c as u8
    }
}

/// Pipes involved in one step. `l` and `m` are only set in case 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepPipes {
    pub i: usize,
    pub j: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RaiseStep {
    pub case: SurgeryCase,
    /// Bump tile in row `a` whose primary pipe is `i`.
    #[serde(rename = "T")]
    pub t: Tile,
    /// Case 1: crossing of `i` and `j`. Case 2: highest real cross below row `a` with primary `i`.
    #[serde(rename = "T_prime", skip_serializing_if = "Option::is_none")]
    pub t_prime: Option<Tile>,
    #[serde(rename = "S", skip_serializing_if = "Option::is_none")]
    pub s: Option<Tile>,
    #[serde(rename = "S_prime", skip_serializing_if = "Option::is_none")]
    pub s_prime: Option<Tile>,
    pub pipes: StepPipes,
    /// Tiles turned into crosses.
    pub crossed: Vec<Tile>,
    /// Tiles turned into bumps.
    pub bumped: Vec<Tile>,
    /// Cross count of row `a` after this step.
    pub row_weight: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RaiseTrace {
    pub perm: Permutation,
    pub row: usize,
    pub start: PipeDream,
    pub steps: Vec<RaiseStep>,
    #[serde(rename = "final")]
    pub result: PipeDream,
}

#[derive(Debug, Clone, Error)]
pub enum RaiseError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {message}")]
    InvariantViolation { message: String, trace: Box<RaiseTrace> },
}

#[derive(Debug, Clone, Copy)]
pub struct RaiseOptions {
    /// Re-trace after every step and check the pipe lemmas on every intermediate dream.
    pub check_steps: bool,
}

impl Default for RaiseOptions {
    fn default() -> Self {
        RaiseOptions { check_steps: cfg!(debug_assertions) }
    }
}

fn precondition(msg: impl Into<String>) -> RaiseError {
    RaiseError::Precondition(msg.into())
}

fn validate(p: &PipeDream, w: &Permutation) -> Result<WeightVector, RaiseError> {
    if p.n() != w.n() {
        return Err(precondition(format!("pipe dream has size {}, permutation {}", p.n(), w.n())));
    }
    let top = max_weight_formula(w).map_err(|e| precondition(e.to_string()))?;
    let demazure = trace(p).demazure;
    if &demazure != w {
        return Err(precondition(format!("pipe dream traces to {demazure}, not {w}")));
    }
    Ok(top)
}

pub fn raise_weight(p: &PipeDream, w: &Permutation, a: usize) -> Result<(PipeDream, RaiseTrace), RaiseError> {
    raise_weight_with(p, w, a, RaiseOptions::default())
}

pub fn raise_weight_with(
    p: &PipeDream,
    w: &Permutation,
    a: usize,
    opts: RaiseOptions,
) -> Result<(PipeDream, RaiseTrace), RaiseError> {
    let top = validate(p, w)?;
    if a == 0 || a > w.n() {
        return Err(precondition(format!("row {a} is outside 1..={}", w.n())));
    }
    let start_wt = p.weight();
    if start_wt[a - 1] >= top[a - 1] {
        return Err(precondition(format!(
            "row {a} already has the maximal {} crosses (maximal weight {top})",
            top[a - 1]
        )));
    }
    Surgery::new(p, w, a, opts).run(&start_wt)
}

struct Surgery<'a> {
    w: &'a Permutation,
    a: usize,
    n: usize,
    opts: RaiseOptions,
    cur: PipeDream,
    trace: RaiseTrace,
}

impl<'a> Surgery<'a> {
    fn new(p: &PipeDream, w: &'a Permutation, a: usize, opts: RaiseOptions) -> Self {
        Surgery {
            w,
            a,
            n: w.n(),
            opts,
            cur: p.clone(),
            trace: RaiseTrace {
                perm: w.clone(),
                row: a,
                start: p.clone(),
                steps: Vec::new(),
                result: p.clone(),
            },
        }
    }

    fn fail(&self, message: impl Into<String>) -> RaiseError {
        let mut trace = self.trace.clone();
        trace.result = self.cur.clone();
        RaiseError::InvariantViolation { message: message.into(), trace: Box::new(trace) }
    }

    fn run(mut self, start_wt: &WeightVector) -> Result<(PipeDream, RaiseTrace), RaiseError> {
        let a = self.a;
        let goal = start_wt[a - 1] + 1;
        let tr = trace(&self.cur);

        // bump tile in row a, primary pipe not a left-to-right maximum; smallest column wins
        let pick = (1..=self.n - a)
            .map(|c| (a, c))
            .filter(|&t| !self.cur.is_cross(t))
            .map(|t| (t, tr.pipes(t).primary))
            .find(|&(_, i)| !self.w.is_left_to_right_max(self.w.position_of(i)));
        let Some((_, i)) = pick else {
            return Err(self.fail(format!("no bump tile in row {a} carries a non-maximal pipe")));
        };

        let cap = 4 * self.n * self.n;
        let mut last: Option<(SurgeryCase, usize)> = None;
        for _ in 0..cap {
            let tr = trace(&self.cur);
            if self.opts.check_steps {
                check_all_tile_lemmas(&self.cur, &tr).map_err(|e| self.fail(e))?;
            }
            let Some(t) = tr.primary_tile_in_row(i, a) else {
                return Err(self.fail(format!("pipe {i} no longer passes down through row {a}")));
            };
            if self.cur.is_cross(t) {
                return Err(self.fail(format!("tile {t:?} of pipe {i} is already a cross")));
            }
            let j = tr.pipes(t).secondary;

            let step = if i < j {
                self.case_zero(t, i, j)
            } else if let Some(t_prime) = highest_real_cross_below(&tr, i, a) {
                let step = self.case_two(&tr, t, t_prime, i, j)?;
                let gap = step.s.unwrap().1 - t.1;
                if let Some((SurgeryCase::Two, prev)) = last {
                    if gap >= prev {
                        return Err(self.fail(format!("case 2 gap did not shrink ({prev} -> {gap})")));
                    }
                }
                last = Some((SurgeryCase::Two, gap));
                step
            } else {
                if let Some((SurgeryCase::One, prev)) = last {
                    if t.1 >= prev {
                        return Err(self.fail(format!("case 1 tile did not move left ({prev} -> {})", t.1)));
                    }
                }
                last = Some((SurgeryCase::One, t.1));
                self.case_one(&tr, t, i, j)?
            };

            let row_weight = step.row_weight;
            let case = step.case;
            self.trace.steps.push(step);
            if row_weight == goal {
                return self.finish(start_wt);
            }
            if row_weight != goal - 1 {
                return Err(self.fail(format!("row {a} weight became {row_weight}")));
            }
            if self.opts.check_steps {
                let tr = trace(&self.cur);
                let again = highest_real_cross_below(&tr, i, a).is_some();
                match case {
                    SurgeryCase::One if again => {
                        return Err(self.fail(format!("after case 1, pipe {i} is primary of a real cross below row {a}")))
                    }
                    SurgeryCase::Two if !again => {
                        return Err(self.fail(format!("after case 2, pipe {i} lost its real cross below row {a}")))
                    }
                    _ => {}
                }
            }
        }
        Err(self.fail(format!("no termination within {cap} steps")))
    }

    fn case_zero(&mut self, t: Tile, i: usize, j: usize) -> RaiseStep {
        self.cur.set_tile(t, true);
        RaiseStep {
            case: SurgeryCase::Zero,
            t,
            t_prime: None,
            s: None,
            s_prime: None,
            pipes: StepPipes { i, j, l: None, m: None },
            crossed: vec![t],
            bumped: vec![],
            row_weight: self.cur.weight()[self.a - 1],
        }
    }

    fn case_one(&mut self, tr: &TraceResult, t: Tile, i: usize, j: usize) -> Result<RaiseStep, RaiseError> {
        // i and j must cross below row a, with j primary
        let t_prime = match tr.crossing_of(i, j) {
            Some(x) if x.0 > self.a && tr.pipes(x).primary == j => x,
            other => {
                return Err(self.fail(format!("case 1: pipes {i},{j} at {t:?} cross at {other:?}")))
            }
        };
        let bumped = self.rewire(tr, t, t_prime, i, j)?;
        Ok(RaiseStep {
            case: SurgeryCase::One,
            t,
            t_prime: Some(t_prime),
            s: None,
            s_prime: None,
            pipes: StepPipes { i, j, l: None, m: None },
            crossed: vec![t],
            bumped,
            row_weight: self.cur.weight()[self.a - 1],
        })
    }

    fn case_two(
        &mut self,
        tr: &TraceResult,
        t: Tile,
        t_prime: Tile,
        i: usize,
        j: usize,
    ) -> Result<RaiseStep, RaiseError> {
        let a = self.a;
        let l = tr.pipes(t_prime).secondary;
        let Some(s) = tr.primary_tile_in_row(l, a) else {
            return Err(self.fail(format!("case 2: pipe {l} has no tile in row {a}")));
        };
        if self.opts.check_steps {
            // ℓ is primary of no cross tile in rows [a, a')
            for r in a..t_prime.0 {
                if let Some(x) = tr.primary_tile_in_row(l, r) {
                    if self.cur.is_cross(x) {
                        return Err(self.fail(format!("exists-bump: pipe {l} is primary of cross {x:?}")));
                    }
                }
            }
        }
        if self.cur.is_cross(s) {
            return Err(self.fail(format!("case 2: tile {s:?} is a cross")));
        }
        if s.1 <= t.1 {
            return Err(self.fail(format!("case 2: tile {s:?} is not right of {t:?}")));
        }
        let m = tr.pipes(s).secondary;
        let s_prime = match tr.crossing_of(l, m) {
            Some(x)
                if l > m
                    && travel_key(x) > travel_key(s)
                    && (travel_key(x) < travel_key(t_prime) || (m == i && x == t_prime)) =>
            {
                x
            }
            other => {
                return Err(self.fail(format!(
                    "exists-bump: pipes {l},{m} at {s:?} cross at {other:?}, not before {t_prime:?}"
                )))
            }
        };
        let bumped = self.rewire(tr, s, s_prime, l, m)?;
        Ok(RaiseStep {
            case: SurgeryCase::Two,
            t,
            t_prime: Some(t_prime),
            s: Some(s),
            s_prime: Some(s_prime),
            pipes: StepPipes { i, j, l: Some(l), m: Some(m) },
            crossed: vec![s],
            bumped,
            row_weight: self.cur.weight()[a - 1],
        })
    }

    /// Crosses at `from`, uncrosses `to`, and bumps the fake crosses on pipes
    /// `x` or `y` between them. Returns the tiles turned into bumps.
    fn rewire(&mut self, tr: &TraceResult, from: Tile, to: Tile, x: usize, y: usize) -> Result<Vec<Tile>, RaiseError> {
        if self.opts.check_steps {
            check_crosses_both(tr, x, y, from, to).map_err(|e| self.fail(format!("case-2-propagates: {e}")))?;
        }
        let fakes: Vec<Tile> = tiles_between(self.n, from, to)
            .filter(|&b| tr.is_fake(b))
            .filter(|&b| {
                let pp = tr.pipes(b);
                [pp.primary, pp.secondary].iter().any(|&q| q == x || q == y)
            })
            .collect();
        self.cur.set_tile(from, true);
        for &f in &fakes {
            self.cur.set_tile(f, false);
        }
        self.cur.set_tile(to, false);
        if self.opts.check_steps {
            let after = trace(&self.cur).demazure;
            if &after != self.w {
                return Err(self.fail(format!("case-2-propagates: rewiring {from:?}..{to:?} changed the permutation to {after}")));
            }
        }
        let mut bumped = fakes;
        bumped.push(to);
        bumped.sort_by_key(|&b| travel_key(b));
        Ok(bumped)
    }

    fn finish(mut self, start_wt: &WeightVector) -> Result<(PipeDream, RaiseTrace), RaiseError> {
        let a = self.a;
        let q = self.cur.clone();
        let tr = trace(&q);
        if &tr.demazure != self.w {
            return Err(self.fail(format!("result traces to {}", tr.demazure)));
        }
        let wt = q.weight();
        let ok = (1..=self.n).all(|b| match b.cmp(&a) {
            std::cmp::Ordering::Less => wt[b - 1] == start_wt[b - 1] && q.row_mask(b) == self.trace.start.row_mask(b),
            std::cmp::Ordering::Equal => wt[b - 1] == start_wt[b - 1] + 1,
            std::cmp::Ordering::Greater => wt[b - 1] <= start_wt[b - 1],
        });
        if !ok {
            return Err(self.fail(format!("result weight {wt} does not raise {start_wt} at row {a}")));
        }
        self.trace.result = q.clone();
        Ok((q, self.trace))
    }
}

/// Raises `p` to a pipe dream of weight exactly `target` by raising the
/// smallest deficient row until none is left.
pub fn raise_to(p: &PipeDream, w: &Permutation, target: &WeightVector) -> Result<PipeDream, RaiseError> {
    raise_to_with(p, w, target, RaiseOptions::default())
}

pub fn raise_to_with(
    p: &PipeDream,
    w: &Permutation,
    target: &WeightVector,
    opts: RaiseOptions,
) -> Result<PipeDream, RaiseError> {
    let top = validate(p, w)?;
    if target.len() != w.n() {
        return Err(precondition(format!("target {target} has the wrong length")));
    }
    if !target.le(&top) {
        return Err(precondition(format!("target {target} exceeds the maximal weight {top}")));
    }
    if !p.weight().le(target) {
        return Err(precondition(format!("target {target} lies below the weight {}", p.weight())));
    }
    let mut q = p.clone();
    loop {
        let wt = q.weight();
        let Some(a) = (1..=w.n()).find(|&b| wt[b - 1] != target[b - 1]) else {
            return Ok(q);
        };
        if wt[a - 1] > target[a - 1] {
            let trace = RaiseTrace { perm: w.clone(), row: a, start: q.clone(), steps: vec![], result: q };
            return Err(RaiseError::InvariantViolation {
                message: format!("row {a} overshot the target {target}"),
                trace: Box::new(trace),
            });
        }
        q = raise_weight_with(&q, w, a, opts)?.0;
    }
}
