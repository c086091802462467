//! Local structure of pipes in a pipe dream, as checkable predicates.
//!
//! Each check returns `Err` with a description of the first violation found.
//! They are evaluated on live pipe dreams by the surgery in [`super`] and swept
//! over whole symmetric groups by the tests.

use crate::perm::Permutation;
use crate::pipedream::{travel_key, PipeDream, Tile, TraceResult};

pub type LemmaResult = Result<(), String>;

/// Tiles strictly after `from` and strictly before `to` in travel order.
pub fn tiles_between(n: usize, from: Tile, to: Tile) -> impl Iterator<Item = Tile> {
    let (lo, hi) = if travel_key(from) <= travel_key(to) { (from, to) } else { (to, from) };
    (1..=n)
        .flat_map(move |r| (1..=n - r).map(move |c| (r, c)))
        .filter(move |&t| travel_key(t) > travel_key(lo) && travel_key(t) < travel_key(hi))
}

/// Whether `v` is a left-to-right maximum of `w(from) w(from+1) … w(n)`.
fn is_suffix_ltr_max(w: &Permutation, from: usize, v: usize) -> bool {
    let pos = w.position_of(v);
    pos >= from && (from..pos).all(|k| w.get(k) < v)
}

/// Every cross tile in row `r` has a primary pipe that is not a
/// left-to-right maximum of `w(r) … w(n)`.
pub fn check_good_pipes(p: &PipeDream, tr: &TraceResult) -> LemmaResult {
    let w = &tr.demazure;
    for t in p.crosses() {
        let primary = tr.pipes(t).primary;
        if is_suffix_ltr_max(w, t.0, primary) {
            return Err(format!("cross {t:?} has primary pipe {primary}, a left-to-right maximum"));
        }
    }
    Ok(())
}

/// For a dream of maximal weight: a tile is a cross iff its primary pipe is
/// not the initial term of a descending run.
pub fn check_good_pipes_only(p: &PipeDream, tr: &TraceResult) -> LemmaResult {
    let w = &tr.demazure;
    for t in p.tiles() {
        let primary = tr.pipes(t).primary;
        let initial = w.is_run_initial(w.position_of(primary));
        if p.is_cross(t) == initial {
            return Err(format!("tile {t:?} (primary {primary}) breaks the cross/initial-term rule"));
        }
    }
    Ok(())
}

/// The highest real cross strictly below `row` whose primary pipe is `pipe`.
pub fn highest_real_cross_below(tr: &TraceResult, pipe: usize, row: usize) -> Option<Tile> {
    let n = tr.demazure.n();
    (row + 1..=n)
        .filter_map(|r| tr.primary_tile_in_row(pipe, r))
        .find(|&t| tr.is_real(t))
}

/// Bump tile `t` in row `r` whose primary pipe `i` is primary of a real cross
/// below; with `T'` the highest such cross (row `r'`) and `j` its secondary pipe:
/// (1) `j` is primary of no cross tile in rows `[r, r')`;
/// (2) any tile in rows `[r, r')` with primary `j` and secondary `k` has
///     `j > k`, and `k` really crosses `j` before `T'` (at `T'` itself when `k = i`).
pub fn check_exists_bump(p: &PipeDream, tr: &TraceResult, t: Tile) -> LemmaResult {
    if p.is_cross(t) {
        return Ok(());
    }
    let i = tr.pipes(t).primary;
    let Some(t_prime) = highest_real_cross_below(tr, i, t.0) else {
        return Ok(());
    };
    let j = tr.pipes(t_prime).secondary;
    for r in t.0..t_prime.0 {
        let Some(s) = tr.primary_tile_in_row(j, r) else { continue };
        if p.is_cross(s) {
            return Err(format!("pipe {j} is primary of cross {s:?} above {t_prime:?}"));
        }
        let k = tr.pipes(s).secondary;
        if j <= k {
            return Err(format!("tile {s:?}: primary {j} is not larger than secondary {k}"));
        }
        match tr.crossing_of(j, k) {
            Some(x) if travel_key(x) < travel_key(t_prime) || (k == i && x == t_prime) => {}
            other => {
                return Err(format!("pipes {j},{k} at {s:?} cross at {other:?}, not before {t_prime:?}"))
            }
        }
    }
    Ok(())
}

/// Bump tile `t` in row `r` whose pipes `i`, `j` never really cross: every pipe
/// `k` exiting on the left between them crosses `i` in a row `> r` or `j` in a row `≥ r`.
pub fn check_three_in_a_tile(p: &PipeDream, tr: &TraceResult, t: Tile) -> LemmaResult {
    if p.is_cross(t) {
        return Ok(());
    }
    let pipes = tr.pipes(t);
    let (i, j) = (pipes.primary, pipes.secondary);
    if tr.crossing_of(i, j).is_some() {
        return Ok(());
    }
    let w = &tr.demazure;
    let (lo, hi) = {
        let (a, b) = (w.position_of(i), w.position_of(j));
        (a.min(b), a.max(b))
    };
    for row in lo + 1..hi {
        let k = w.get(row);
        let with_i = tr.crossing_of(k, i).is_some_and(|x| x.0 > t.0);
        let with_j = tr.crossing_of(k, j).is_some_and(|x| x.0 >= t.0);
        if !with_i && !with_j {
            return Err(format!("pipe {k} exits between {i} and {j} at {t:?} without crossing either"));
        }
    }
    Ok(())
}

/// Pipes `x`, `y` between tiles `from` and `to`: any other pipe that really
/// crosses one of them strictly between the tiles also crosses the other there.
pub fn check_crosses_both(tr: &TraceResult, x: usize, y: usize, from: Tile, to: Tile) -> LemmaResult {
    let n = tr.demazure.n();
    let inside = |t: Option<Tile>| {
        t.is_some_and(|t| tiles_between(n, from, to).any(|b| b == t))
    };
    for k in (1..=n).filter(|&k| k != x && k != y) {
        let kx = inside(tr.crossing_of(k, x));
        let ky = inside(tr.crossing_of(k, y));
        if kx != ky {
            return Err(format!(
                "pipe {k} crosses only one of {x},{y} between {from:?} and {to:?}"
            ));
        }
    }
    Ok(())
}

/// All per-tile lemmas on one pipe dream.
pub fn check_all_tile_lemmas(p: &PipeDream, tr: &TraceResult) -> LemmaResult {
    check_good_pipes(p, tr)?;
    for t in p.tiles() {
        check_exists_bump(p, tr, t)?;
        check_three_in_a_tile(p, tr, t)?;
    }
    Ok(())
}
