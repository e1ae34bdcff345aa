//! Subsets of `[n]`, the component-wise order, meets and joins.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;

use crate::error::{domain, Error, Result};

/// A strictly increasing `k`-tuple drawn from `{1, …, n}`.
///
/// Entries are always stored sorted; matching field orderings are applied
/// only when a subset is displayed as a tableau column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    entries: Vec<usize>,
    n: usize,
}

impl Subset {
    pub fn new(entries: Vec<usize>, n: usize) -> Result<Self> {
        if entries.is_empty() {
            return domain("subset must be non-empty");
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return domain(format!("entries {entries:?} are not strictly increasing"));
        }
        if entries[0] < 1 || entries[entries.len() - 1] > n {
            return domain(format!("entries {entries:?} must lie in 1..={n}"));
        }
        Ok(Subset { entries, n })
    }

    /// Builds a subset from entries in any order.
    pub fn from_unsorted(mut entries: Vec<usize>, n: usize) -> Result<Self> {
        entries.sort_unstable();
        Subset::new(entries, n)
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn k(&self) -> usize {
        self.entries.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The `t`-th smallest entry, 1-based as in `i_t`.
    pub fn at(&self, t: usize) -> usize {
        self.entries[t - 1]
    }

    pub fn contains(&self, x: usize) -> bool {
        self.entries.binary_search(&x).is_ok()
    }

    /// Parses `"135"` (digits, only when `n ≤ 9`) or `"2,4,11"`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        let entries: Vec<usize> = if text.contains(',') {
            text.split(',')
                .map(|p| p.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Parse(format!("bad subset {text:?}: {e}")))?
        } else if n <= 9 {
            text.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Parse(format!("bad subset {text:?}")))?
        } else {
            vec![text
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad subset {text:?}: {e}")))?]
        };
        Subset::new(entries, n).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n <= 9 {
            write!(f, "{}", self.entries.iter().join(""))
        } else {
            write!(f, "{}", self.entries.iter().join(","))
        }
    }
}

/// A Grassmannian permutation `w = (w_1 < … < w_k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrassPerm(pub Subset);

impl GrassPerm {
    pub fn new(entries: Vec<usize>, n: usize) -> Result<Self> {
        Subset::new(entries, n).map(GrassPerm)
    }

    pub fn as_subset(&self) -> &Subset {
        &self.0
    }

    pub fn entries(&self) -> &[usize] {
        self.0.entries()
    }
}

impl fmt::Display for GrassPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    LessEq,
    GreaterEq,
    Equal,
    Incomparable,
}

fn check_same_shape(a: &Subset, b: &Subset) -> Result<()> {
    if a.k() != b.k() || a.n() != b.n() {
        return domain(format!(
            "subsets {a} (k={}, n={}) and {b} (k={}, n={}) have different shapes",
            a.k(),
            a.n(),
            b.k(),
            b.n()
        ));
    }
    Ok(())
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// All `k`-subsets of `[n]` in lexicographic order.
pub fn enumerate_subsets(k: usize, n: usize) -> Result<Vec<Subset>> {
    if k < 1 || k > n {
        return domain(format!("need 1 <= k <= n, got k={k}, n={n}"));
    }
    Ok((1..=n)
        .combinations(k)
        .map(|entries| Subset { entries, n })
        .collect())
}

/// Component-wise comparison.
pub fn compare(a: &Subset, b: &Subset) -> Result<Comparison> {
    check_same_shape(a, b)?;
    let mut le = true;
    let mut ge = true;
    for (x, y) in a.entries.iter().zip(&b.entries) {
        match x.cmp(y) {
            Ordering::Less => ge = false,
            Ordering::Greater => le = false,
            Ordering::Equal => {}
        }
    }
    Ok(match (le, ge) {
        (true, true) => Comparison::Equal,
        (true, false) => Comparison::LessEq,
        (false, true) => Comparison::GreaterEq,
        (false, false) => Comparison::Incomparable,
    })
}

/// `a ≤ b` component-wise, for subsets of equal shape.
pub fn le(a: &Subset, b: &Subset) -> bool {
    a.entries.iter().zip(&b.entries).all(|(x, y)| x <= y)
}

/// `(a ∧ b, a ∨ b)`: component-wise minimum and maximum.
pub fn meet_join(a: &Subset, b: &Subset) -> Result<(Subset, Subset)> {
    check_same_shape(a, b)?;
    let (lo, hi): (Vec<usize>, Vec<usize>) = a
        .entries
        .iter()
        .zip(&b.entries)
        .map(|(&x, &y)| (x.min(y), x.max(y)))
        .unzip();
    Ok((
        Subset {
            entries: lo,
            n: a.n,
        },
        Subset {
            entries: hi,
            n: a.n,
        },
    ))
}

/// Number of unordered pairs `{I, J}` that are incomparable.
pub fn count_incomparable_pairs(k: usize, n: usize) -> Result<u64> {
    let subsets = enumerate_subsets(k, n)?;
    Ok(subsets
        .iter()
        .tuple_combinations()
        .filter(|(a, b)| !le(a, b) && !le(b, a))
        .count() as u64)
}

/// Number of ordered pairs `(I, J)` with `I ≤ J`, including `I = J`.
pub fn count_comparable_pairs(k: usize, n: usize) -> Result<u64> {
    let subsets = enumerate_subsets(k, n)?;
    Ok(subsets
        .iter()
        .cartesian_product(subsets.iter())
        .filter(|(a, b)| le(a, b))
        .count() as u64)
}
