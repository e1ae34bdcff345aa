//! Matching field tableaux: columns are subsets displayed in the order the
//! matching field prescribes.

mod classify;
mod semistandard;
mod swaps;

use std::fmt;

use itertools::Itertools;

pub use classify::{classify2, enumerate_tl, normalize2, ClassTag, TableauClass};
pub use semistandard::{from_semistandard, to_semistandard};
pub use swaps::{swap_sequence, Derivation, SwapStep};

use crate::combinatorics::Subset;
use crate::error::{domain, Error, Result};
use crate::matching_field::{MatchingField, Permutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    mf: MatchingField,
    columns: Vec<Subset>,
}

impl Tableau {
    pub fn new(mf: MatchingField, columns: Vec<Subset>) -> Result<Self> {
        for c in &columns {
            mf.check_subset(c)?;
        }
        Ok(Tableau { mf, columns })
    }

    /// Parses `"2,3,4|1,2,6|3,4,5"`. Each column may be written in display
    /// order or sorted ascending.
    pub fn parse(mf: MatchingField, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Tableau {
                mf,
                columns: Vec::new(),
            });
        }
        let columns = text
            .split('|')
            .map(|col| {
                let entries: Vec<usize> = col
                    .split(',')
                    .map(|p| p.trim().parse::<usize>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|e| Error::Parse(format!("bad column {col:?}: {e}")))?;
                if entries.windows(2).all(|w| w[0] < w[1]) {
                    Subset::new(entries, mf.n()).and_then(|s| mf.check_subset(&s).map(|_| s))
                } else {
                    mf.from_display(&entries)
                }
                .map_err(|e| Error::Parse(e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Tableau { mf, columns })
    }

    pub fn mf(&self) -> MatchingField {
        self.mf
    }

    pub fn columns(&self) -> &[Subset] {
        &self.columns
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Display grid, one `Vec` per column.
    pub fn grid(&self) -> Vec<Vec<usize>> {
        self.columns.iter().map(|c| self.mf.display(c)).collect()
    }

    /// Positions of the columns with permutation `(12)`, i.e. `T_Y`.
    pub fn y_positions(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&p| self.mf.permutation_of(&self.columns[p]) == Permutation::Swap12)
            .collect()
    }

    /// Positions of all other columns, i.e. `T_X`.
    pub fn x_positions(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&p| self.mf.permutation_of(&self.columns[p]) == Permutation::Identity)
            .collect()
    }

    pub(crate) fn set_columns(&mut self, a: usize, ca: Subset, b: usize, cb: Subset) {
        self.columns[a] = ca;
        self.columns[b] = cb;
    }

    /// Sorted multiset of each display row.
    pub fn row_content(&self) -> Vec<Vec<usize>> {
        row_content_of(&self.mf, &self.columns)
    }
}

pub(crate) fn row_content_of(mf: &MatchingField, columns: &[Subset]) -> Vec<Vec<usize>> {
    let mut rows = vec![Vec::with_capacity(columns.len()); mf.k()];
    for c in columns {
        for (r, x) in mf.display(c).into_iter().enumerate() {
            rows[r].push(x);
        }
    }
    for r in &mut rows {
        r.sort_unstable();
    }
    rows
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            self.grid().iter().map(|col| col.iter().join(",")).join("|")
        )
    }
}

pub fn make_tableau(mf: MatchingField, subsets: Vec<Subset>) -> Result<Tableau> {
    Tableau::new(mf, subsets)
}

/// Row-wise equal and identical outside at most two column positions.
pub fn is_swap(t: &Tableau, u: &Tableau) -> Result<bool> {
    if t.mf != u.mf || t.len() != u.len() {
        return domain("is_swap needs tableaux over the same field with equal column counts");
    }
    let differing = t
        .columns
        .iter()
        .zip(&u.columns)
        .filter(|(a, b)| a != b)
        .count();
    Ok(differing <= 2 && t.row_content() == u.row_content())
}
