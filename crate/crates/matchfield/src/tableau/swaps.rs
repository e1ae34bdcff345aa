//! Explicit swap sequences between row-wise equal tableaux.
//!
//! Both tableaux are rewritten towards each other: identical columns are set
//! aside, each part `T_X`, `T_Y` is brought to semi-standard form, and then
//! the leftmost column is aligned (type ≥ 2 columns by exchanging tails,
//! type 0/1 tableaux by first aligning the first two rows). The moves applied
//! to the second tableau are replayed in reverse at the end.

use std::fmt;

use itertools::Itertools;

use crate::combinatorics::{le, meet_join, Subset};
use crate::error::{domain, Error, Result};
use crate::matching_field::MatchingField;

use super::{row_content_of, Tableau};

/// One swap: columns `a` and `b` are replaced, all other columns untouched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwapStep {
    pub columns: (usize, usize),
    /// Display rows (0-based) whose entries moved between the two columns.
    pub rows: Vec<usize>,
    pub before: Tableau,
    pub after: Tableau,
}

impl fmt::Display for SwapStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "columns {},{} rows {}: {} -> {}",
            self.columns.0 + 1,
            self.columns.1 + 1,
            self.rows.iter().map(|r| r + 1).join(","),
            self.before,
            self.after
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub steps: Vec<SwapStep>,
    /// Column `p` of the target sits at position `permutation[p]` of the
    /// final tableau.
    pub permutation: Vec<usize>,
    /// The step budget `(differing cells)²` this run was checked against.
    pub bound: usize,
}

impl Derivation {
    pub fn final_tableau<'a>(&'a self, start: &'a Tableau) -> &'a Tableau {
        self.steps.last().map_or(start, |s| &s.after)
    }
}

struct Side {
    mf: MatchingField,
    cols: Vec<Subset>,
    steps: Vec<SwapStep>,
}

impl Side {
    fn tableau(&self) -> Tableau {
        Tableau {
            mf: self.mf,
            columns: self.cols.clone(),
        }
    }

    fn replace(&mut self, a: usize, na: Subset, b: usize, nb: Subset) {
        let before = self.tableau();
        let (da, dna) = (self.mf.display(&self.cols[a]), self.mf.display(&na));
        let rows = (0..self.mf.k()).filter(|&r| da[r] != dna[r]).collect();
        self.cols[a] = na;
        self.cols[b] = nb;
        self.steps.push(SwapStep {
            columns: (a, b),
            rows,
            before,
            after: self.tableau(),
        });
    }

    /// Exchanges the given display rows between columns `a` and `b` when both
    /// results are valid columns of the field.
    fn exchange(&mut self, a: usize, b: usize, rows: &[usize]) -> bool {
        let mut da = self.mf.display(&self.cols[a]);
        let mut db = self.mf.display(&self.cols[b]);
        for &r in rows {
            std::mem::swap(&mut da[r], &mut db[r]);
        }
        match (self.mf.from_display(&da), self.mf.from_display(&db)) {
            (Ok(na), Ok(nb)) if na != self.cols[a] => {
                self.replace(a, na, b, nb);
                true
            }
            _ => false,
        }
    }

    fn disp(&self, p: usize) -> Vec<usize> {
        self.mf.display(&self.cols[p])
    }

    fn is_y(&self, p: usize) -> bool {
        self.mf.column_type(&self.cols[p]) == 1 && self.mf.k() >= 2
    }

    /// Compare-exchange sweeps from right to left until the part is
    /// semi-standard. Returns whether anything changed.
    fn semistandardize(&mut self, part: &[usize]) -> bool {
        let mut changed = false;
        loop {
            let mut pass = false;
            for w in (0..part.len().saturating_sub(1)).rev() {
                let (p, q) = (part[w], part[w + 1]);
                if !le(&self.cols[p], &self.cols[q]) {
                    let (m, j) = meet_join(&self.cols[p], &self.cols[q]).expect("same shape");
                    self.replace(p, m, q, j);
                    pass = true;
                }
            }
            if !pass {
                return changed;
            }
            changed = true;
        }
    }
}

/// Positions of `a` and `b` left unmatched after pairing identical columns.
fn unmatched(a: &[Subset], b: &[Subset]) -> (Vec<usize>, Vec<usize>) {
    let mut used = vec![false; b.len()];
    let mut left = Vec::new();
    for (p, c) in a.iter().enumerate() {
        match (0..b.len()).find(|&q| !used[q] && &b[q] == c) {
            Some(q) => used[q] = true,
            None => left.push(p),
        }
    }
    let right = (0..b.len()).filter(|&q| !used[q]).collect();
    (left, right)
}

enum Who {
    Fwd,
    Bwd,
}

fn pick<'a>(who: &Who, f: &'a mut Side, b: &'a mut Side) -> &'a mut Side {
    match who {
        Who::Fwd => f,
        Who::Bwd => b,
    }
}

/// Leftmost-column alignment for a leftmost column of type ≥ 2.
fn align_high_type(f: &mut Side, b: &mut Side, xf: &[usize], xb: &[usize]) -> bool {
    let k = f.mf.k();
    let (pa, pb) = (xf[0], xb[0]);
    let (da, db) = (f.disp(pa), b.disp(pb));
    let Some(j) = (0..k).find(|&r| da[r] != db[r]) else {
        return false;
    };
    // The side holding the larger entry receives the smaller one.
    let (who, target, want) = if da[j] < db[j] {
        (Who::Bwd, pb, da[j])
    } else {
        (Who::Fwd, pa, db[j])
    };
    let side = pick(&who, f, b);
    let rows: Vec<usize> = if j == 1 { vec![1] } else { (j..k).collect() };
    let candidates: Vec<usize> = {
        let (mut ys, mut xs): (Vec<usize>, Vec<usize>) = (0..side.cols.len())
            .filter(|&c| c != target)
            .partition(|&c| side.is_y(c));
        ys.append(&mut xs);
        ys
    };
    for c in candidates {
        if side.disp(c)[j] == want && side.exchange(target, c, &rows) {
            return true;
        }
    }
    false
}

/// First-two-rows alignment for tableaux with columns of type 0 and 1 only.
/// Returns `None` when the first two rows already agree.
fn align_first_rows(
    f: &mut Side,
    b: &mut Side,
    (xf, yf): (&[usize], &[usize]),
    (xb, yb): (&[usize], &[usize]),
) -> Option<bool> {
    let i = (0..yf.len().min(yb.len())).find(|&i| f.disp(yf[i])[0] != b.disp(yb[i])[0])?;
    let (a1, b1) = (f.disp(yf[i])[0], b.disp(yb[i])[0]);
    // T holds the column A with the smaller first entry.
    let (t_is_fwd, pa, pb) = if a1 < b1 {
        (true, yf[i], yb[i])
    } else {
        (false, yb[i], yf[i])
    };
    let (t, tp, tx, tpx) = if t_is_fwd {
        (f, b, xf, xb)
    } else {
        (b, f, xb, xf)
    };
    let (da, db) = (t.disp(pa), tp.disp(pb));
    let (a1, b1) = (da[0], db[0]);
    let Some(ci) = tpx.iter().position(|&c| tp.disp(c)[0] == a1) else {
        return Some(false);
    };
    let pc = tpx[ci];
    let dc = tp.disp(pc);
    if b1 < dc[1] {
        return Some(tp.exchange(pb, pc, &[0]));
    }
    let Some(&pd) = tx.get(ci) else {
        return Some(false);
    };
    let d1 = t.disp(pd)[0];
    let a3 = da.get(2).copied().unwrap_or(usize::MAX);
    if d1 < a3 {
        return Some(t.exchange(pd, pa, &[0]));
    }
    let Some(&pe) = tpx.iter().find(|&&e| e != pc && tp.disp(e)[0] == d1) else {
        return Some(false);
    };
    Some(tp.exchange(pc, pe, &[0]))
}

/// Finishes the leftmost type-0 column once the first two rows agree.
fn align_low_type(f: &mut Side, b: &mut Side, xf: &[usize], xb: &[usize]) -> bool {
    let k = f.mf.k();
    let (pa, pb) = (xf[0], xb[0]);
    let (da, db) = (f.disp(pa), b.disp(pb));
    let Some(i) = (0..k).find(|&r| da[r] != db[r]) else {
        return false;
    };
    let (who, target, want) = if da[i] < db[i] {
        (Who::Bwd, pb, da[i])
    } else {
        (Who::Fwd, pa, db[i])
    };
    let side = pick(&who, f, b);
    let rows: Vec<usize> = (i..k).collect();
    let candidates: Vec<usize> = {
        let (mut ys, mut xs): (Vec<usize>, Vec<usize>) = (0..side.cols.len())
            .filter(|&c| c != target)
            .partition(|&c| side.is_y(c));
        ys.append(&mut xs);
        ys
    };
    for c in candidates {
        if side.disp(c)[i] == want && side.exchange(target, c, &rows) {
            return true;
        }
    }
    false
}

/// Generic move: rebuild one unmatched target column inside `from` using
/// two unmatched columns, completing the pair with whatever is left.
fn fallback(from: &mut Side, active: &[usize], goals: &[Subset]) -> bool {
    let mf = from.mf;
    for goal in goals {
        let g = mf.display(goal);
        for (&p, &q) in active.iter().tuple_combinations() {
            let (dp, dq) = (from.disp(p), from.disp(q));
            let mut rest = Vec::with_capacity(mf.k());
            for r in 0..mf.k() {
                if dp[r] == g[r] {
                    rest.push(dq[r]);
                } else if dq[r] == g[r] {
                    rest.push(dp[r]);
                } else {
                    break;
                }
            }
            if rest.len() == mf.k() {
                if let Ok(c) = mf.from_display(&rest) {
                    from.replace(p, goal.clone(), q, c);
                    return true;
                }
            }
        }
    }
    false
}

fn parts(side: &Side, active: &[usize]) -> (Vec<usize>, Vec<usize>) {
    active.iter().partition(|&&p| !side.is_y(p))
}

/// A sequence of swaps rewriting `t` into a column permutation of `target`.
pub fn swap_sequence(t: &Tableau, target: &Tableau) -> Result<Derivation> {
    if t.mf != target.mf || t.len() != target.len() {
        return domain("swap_sequence needs tableaux over one field with equal column counts");
    }
    if t.row_content() != target.row_content() {
        return domain(format!("{t} and {target} are not row-wise equal"));
    }
    let mf = t.mf;
    let (u, _) = unmatched(&t.columns, &target.columns);
    let cells = u.len() * mf.k();
    let bound = cells * cells;

    let mut f = Side {
        mf,
        cols: t.columns.clone(),
        steps: Vec::new(),
    };
    let mut b = Side {
        mf,
        cols: target.columns.clone(),
        steps: Vec::new(),
    };
    let cap = 4 * bound + 16;
    loop {
        if f.steps.len() + b.steps.len() > cap {
            return Err(Error::Check(format!(
                "no derivation found from {t} to {target}"
            )));
        }
        let (af, ab) = unmatched(&f.cols, &b.cols);
        if af.is_empty() {
            break;
        }
        if af.len() == 2 {
            let (g0, g1) = (b.cols[ab[0]].clone(), b.cols[ab[1]].clone());
            f.replace(af[0], g0, af[1], g1);
            continue;
        }
        debug_assert_eq!(
            row_content_of(&mf, &af.iter().map(|&p| f.cols[p].clone()).collect_vec()),
            row_content_of(&mf, &ab.iter().map(|&p| b.cols[p].clone()).collect_vec())
        );
        let (xf, yf) = parts(&f, &af);
        let (xb, yb) = parts(&b, &ab);
        let mut changed = f.semistandardize(&xf);
        changed |= f.semistandardize(&yf);
        changed |= b.semistandardize(&xb);
        changed |= b.semistandardize(&yb);
        if changed {
            continue;
        }
        let progressed = if xf.is_empty() || xb.is_empty() {
            false
        } else if mf.column_type(&f.cols[xf[0]]) >= 2 {
            align_high_type(&mut f, &mut b, &xf, &xb)
        } else {
            match align_first_rows(&mut f, &mut b, (&xf, &yf), (&xb, &yb)) {
                Some(done) => done,
                None => align_low_type(&mut f, &mut b, &xf, &xb),
            }
        };
        if progressed {
            continue;
        }
        let goals = ab.iter().map(|&p| b.cols[p].clone()).collect_vec();
        if fallback(&mut f, &af, &goals) {
            continue;
        }
        return Err(Error::Check(format!(
            "no swap applies between {t} and {target}"
        )));
    }

    // Replay the target-side moves backwards in the forward frame.
    let mut used = vec![false; f.cols.len()];
    let permutation: Vec<usize> = b
        .cols
        .iter()
        .map(|c| {
            let p = (0..f.cols.len())
                .find(|&p| !used[p] && &f.cols[p] == c)
                .expect("matched");
            used[p] = true;
            p
        })
        .collect();
    let mut steps = f.steps;
    let mut current = Tableau {
        mf,
        columns: f.cols,
    };
    for step in b.steps.into_iter().rev() {
        let (a, c) = step.columns;
        let (pa, pc) = (permutation[a], permutation[c]);
        let before = current.clone();
        current.set_columns(
            pa,
            step.before.columns[a].clone(),
            pc,
            step.before.columns[c].clone(),
        );
        steps.push(SwapStep {
            columns: (pa, pc),
            rows: step.rows,
            before,
            after: current.clone(),
        });
    }
    Ok(Derivation {
        steps,
        permutation,
        bound,
    })
}
