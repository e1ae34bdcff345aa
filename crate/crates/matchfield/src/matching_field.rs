//! Block diagonal matching fields `B_ℓ` and their inducing weight matrices.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::combinatorics::{enumerate_subsets, Subset};
use crate::error::{domain, Error, Result};

/// The block diagonal matching field with blocks `{1..ℓ}` and `{ℓ+1..n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MatchingField {
    k: usize,
    n: usize,
    ell: usize,
}

/// The permutation a block diagonal field attaches to a subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Permutation {
    Identity,
    /// The transposition `(12)`: `i_1` is displayed in row 2, `i_2` in row 1.
    Swap12,
}

impl Permutation {
    /// Row (0-based) holding the `r`-th smallest entry (0-based).
    pub fn row_of(self, r: usize) -> usize {
        match (self, r) {
            (Permutation::Swap12, 0) => 1,
            (Permutation::Swap12, 1) => 0,
            _ => r,
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Permutation::Identity => write!(f, "id"),
            Permutation::Swap12 => write!(f, "(12)"),
        }
    }
}

impl MatchingField {
    pub fn new(k: usize, n: usize, ell: usize) -> Result<Self> {
        if k < 1 || k > n {
            return domain(format!("need 1 <= k <= n, got k={k}, n={n}"));
        }
        if ell > n {
            return domain(format!("need 0 <= ell <= n, got ell={ell}, n={n}"));
        }
        Ok(MatchingField { k, n, ell })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Membership in the first block `B_{ℓ,1} = {1, …, ℓ}`.
    pub fn in_first_block(&self, x: usize) -> bool {
        x <= self.ell
    }

    pub fn check_subset(&self, s: &Subset) -> Result<()> {
        if s.k() != self.k || s.n() != self.n {
            return domain(format!(
                "subset {s} has shape (k={}, n={}), field expects (k={}, n={})",
                s.k(),
                s.n(),
                self.k,
                self.n
            ));
        }
        Ok(())
    }

    pub fn subsets(&self) -> Vec<Subset> {
        enumerate_subsets(self.k, self.n).expect("shape validated at construction")
    }

    /// `|I ∩ B_{ℓ,1}|`.
    pub fn column_type(&self, s: &Subset) -> usize {
        s.entries()
            .iter()
            .filter(|&&x| self.in_first_block(x))
            .count()
    }

    pub fn permutation_of(&self, s: &Subset) -> Permutation {
        if s.k() >= 2 && self.column_type(s) == 1 {
            Permutation::Swap12
        } else {
            Permutation::Identity
        }
    }

    /// Entries of `s` listed top to bottom as they appear in a tableau column.
    pub fn display(&self, s: &Subset) -> Vec<usize> {
        let mut col = s.entries().to_vec();
        if self.permutation_of(s) == Permutation::Swap12 {
            col.swap(0, 1);
        }
        col
    }

    /// Inverse of [`display`](Self::display): accepts a column only if it is
    /// exactly how this field displays the underlying subset.
    pub fn from_display(&self, col: &[usize]) -> Result<Subset> {
        if col.len() != self.k {
            return domain(format!("column {col:?} must have {} entries", self.k));
        }
        let s = Subset::from_unsorted(col.to_vec(), self.n)?;
        if self.display(&s) != col {
            return domain(format!(
                "column {col:?} is not in matching-field order (expected {:?})",
                self.display(&s)
            ));
        }
        Ok(s)
    }

    /// The canonical inducing matrix `M_ℓ`.
    pub fn weight_matrix(&self) -> WeightMatrix {
        let (k, n, ell) = (self.k, self.n, self.ell);
        let rows = (1..=k)
            .map(|i| {
                match i {
                1 => vec![0; n],
                2 => (1..=n)
                    .map(|c| if c <= ell { ell + 1 - c } else { n + ell + 1 - c } as i64)
                    .collect(),
                _ => (1..=n).map(|c| ((i - 1) * (n + 1 - c)) as i64).collect(),
            }
            })
            .collect();
        WeightMatrix { rows }
    }

    /// Weight of `P_I` under `M_ℓ`; errors if the minimum term is not unique.
    pub fn plucker_weight(&self, s: &Subset) -> Result<i64> {
        self.check_subset(s)?;
        let term = self.weight_matrix().min_term(s)?;
        if !term.unique {
            return Err(Error::Coherence {
                subset: s.to_string(),
                reason: format!("minimum weight {} attained more than once", term.weight),
            });
        }
        Ok(term.weight)
    }

    /// Weight of every Plücker variable, keyed by subset.
    pub fn weight_vector(&self) -> Result<BTreeMap<Subset, i64>> {
        let m = self.weight_matrix();
        self.subsets()
            .into_iter()
            .map(|s| {
                let t = m.min_term(&s)?;
                if !t.unique {
                    return Err(Error::Coherence {
                        subset: s.to_string(),
                        reason: "non-unique minimum".into(),
                    });
                }
                Ok((s, t.weight))
            })
            .collect()
    }

    /// Checks that `M_ℓ` induces this field: for every subset the minimum
    /// term is unique and uses the prescribed permutation.
    pub fn verify_coherence(&self) -> Vec<Violation> {
        let m = self.weight_matrix();
        let mut out = Vec::new();
        for s in self.subsets() {
            let term = m.min_term(&s).expect("shape matches");
            let expected: Vec<usize> = (0..self.k)
                .map(|r| self.permutation_of(&s).row_of(r))
                .collect();
            if !term.unique {
                out.push(Violation {
                    subset: s.clone(),
                    reason: format!("minimum weight {} attained more than once", term.weight),
                });
            } else if term.rows != expected {
                out.push(Violation {
                    subset: s.clone(),
                    reason: format!(
                        "minimum uses rows {:?}, field prescribes {:?}",
                        term.rows, expected
                    ),
                });
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub subset: Subset,
    pub reason: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.subset, self.reason)
    }
}

/// An integer `k × n` matrix used to weight the terms of each maximal minor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMatrix {
    rows: Vec<Vec<i64>>,
}

/// The lowest-weight term of a minor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinTerm {
    pub weight: i64,
    /// `rows[r]` is the row (0-based) holding the `r`-th smallest entry.
    pub rows: Vec<usize>,
    pub unique: bool,
}

impl WeightMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return domain("weight matrix must be non-empty");
        }
        if rows.iter().any(|r| r.len() != rows[0].len()) {
            return domain("weight matrix rows must have equal length");
        }
        Ok(WeightMatrix { rows })
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows[0].len()
    }

    /// Minimum over all `k!` terms `Σ_r M[σ(r)][i_r]`.
    pub fn min_term(&self, s: &Subset) -> Result<MinTerm> {
        if s.k() != self.k() || s.n() != self.n() {
            return domain(format!(
                "subset {s} does not fit a {}x{} matrix",
                self.k(),
                self.n()
            ));
        }
        let cols: Vec<usize> = s.entries().iter().map(|&c| c - 1).collect();
        let mut best: Option<MinTerm> = None;
        for sigma in (0..self.k()).permutations(self.k()) {
            let w: i64 = sigma
                .iter()
                .zip(&cols)
                .map(|(&r, &c)| self.rows[r][c])
                .sum();
            match &mut best {
                Some(b) if w > b.weight => {}
                Some(b) if w == b.weight => b.unique = false,
                _ => {
                    best = Some(MinTerm {
                        weight: w,
                        rows: sigma,
                        unique: true,
                    })
                }
            }
        }
        Ok(best.expect("k >= 1 gives at least one term"))
    }
}
