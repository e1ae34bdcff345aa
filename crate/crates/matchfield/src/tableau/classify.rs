//! The canonical two-column tableaux `𝒯_ℓ` and the normal form map onto them.

use std::fmt;

use crate::combinatorics::{le, meet_join, Subset};
use crate::error::Result;
use crate::matching_field::{MatchingField, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassTag {
    Type1,
    Type2,
    Type3A,
    Type3B,
    Type3C,
    Type3D,
}

/// A class of `𝒯_ℓ`; `param` is `r` for 3B and `s` for 3C/3D.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TableauClass {
    pub tag: ClassTag,
    pub param: Option<usize>,
}

impl TableauClass {
    fn plain(tag: ClassTag) -> Self {
        TableauClass { tag, param: None }
    }

    fn with(tag: ClassTag, p: usize) -> Self {
        TableauClass {
            tag,
            param: Some(p),
        }
    }
}

impl fmt::Display for TableauClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.tag {
            ClassTag::Type1 => "1",
            ClassTag::Type2 => "2",
            ClassTag::Type3A => "3A",
            ClassTag::Type3B => "3B",
            ClassTag::Type3C => "3C",
            ClassTag::Type3D => "3D",
        };
        match self.param {
            Some(p) => write!(f, "{name}({p})"),
            None => write!(f, "{name}"),
        }
    }
}

/// `min{t ≥ from : j_{t+1} > i_t}` with `j_{k+1} = ∞`. Rows `from+1..=r`
/// are forced: `j_t ≤ i_{t-1}` leaves `I` no room to take `j_t`.
pub(crate) fn first_rise(i: &Subset, j: &Subset, from: usize) -> usize {
    let k = i.k();
    (from..k).find(|&t| j.at(t + 1) > i.at(t)).unwrap_or(k)
}

fn tail_le(i: &Subset, j: &Subset, from: usize) -> bool {
    (from..=i.k()).all(|t| i.at(t) <= j.at(t))
}

/// The class of the ordered tableau `T_{IJ}` when it belongs to `𝒯_ℓ`.
pub fn classify2(mf: &MatchingField, i: &Subset, j: &Subset) -> Option<TableauClass> {
    let k = i.k();
    match (mf.permutation_of(i), mf.permutation_of(j)) {
        (Permutation::Identity, Permutation::Identity) => {
            le(i, j).then(|| TableauClass::plain(ClassTag::Type1))
        }
        (Permutation::Swap12, Permutation::Swap12) => {
            le(i, j).then(|| TableauClass::plain(ClassTag::Type2))
        }
        (Permutation::Identity, Permutation::Swap12) => None,
        (Permutation::Swap12, Permutation::Identity) => {
            // I has i_1 in the first block and the rest in the second.
            let s = mf.column_type(j);
            if s == 0 {
                if i.at(2) <= j.at(1) && tail_le(i, j, 3) {
                    return Some(TableauClass::plain(ClassTag::Type3A));
                }
                if j.at(2) <= i.at(2) {
                    let r = first_rise(i, j, 2);
                    if forced_then_ordered(i, j, 2, r) {
                        return Some(TableauClass::with(ClassTag::Type3B, r));
                    }
                }
                None
            } else {
                let r = first_rise(i, j, s);
                if !forced_then_ordered(i, j, s, r) {
                    return None;
                }
                if i.at(1) <= j.at(1) {
                    Some(TableauClass::with(ClassTag::Type3C, s))
                } else if i.at(1) >= j.at(2) {
                    Some(TableauClass::with(ClassTag::Type3D, s))
                } else {
                    debug_assert!(k >= 2);
                    None
                }
            }
        }
    }
}

/// `i_t > j_t` on the forced rows `from+1..=r`, `i_t ≤ j_t` below them.
fn forced_then_ordered(i: &Subset, j: &Subset, from: usize, r: usize) -> bool {
    (from + 1..=r).all(|t| i.at(t) > j.at(t)) && tail_le(i, j, r + 1)
}

fn subset(entries: Vec<usize>, n: usize) -> Subset {
    Subset::new(entries, n).expect("normal form construction keeps entries increasing")
}

/// Keeps the first `keep` entries of each side and takes min/max afterwards.
fn split_min_max(i: &Subset, j: &Subset, keep: usize) -> (Subset, Subset) {
    let k = i.k();
    let mut a = Vec::with_capacity(k);
    let mut b = Vec::with_capacity(k);
    for t in 1..=k {
        if t <= keep {
            a.push(i.at(t));
            b.push(j.at(t));
        } else {
            a.push(i.at(t).min(j.at(t)));
            b.push(i.at(t).max(j.at(t)));
        }
    }
    (subset(a, i.n()), subset(b, i.n()))
}

/// The unique member of `𝒯_ℓ` row-wise equal to `T_{IJ}`.
pub fn normalize2(mf: &MatchingField, i: &Subset, j: &Subset) -> Result<(Subset, Subset)> {
    mf.check_subset(i)?;
    mf.check_subset(j)?;
    let (pi, pj) = (mf.permutation_of(i), mf.permutation_of(j));
    if pi == pj {
        return meet_join(i, j);
    }
    let (i, j) = if pi == Permutation::Swap12 {
        (i, j)
    } else {
        (j, i)
    };
    let (k, n) = (i.k(), i.n());
    let s = mf.column_type(j);
    if s == 0 {
        if i.at(2) < j.at(2) {
            let mut a = vec![i.at(1), i.at(2).min(j.at(1))];
            let mut b = vec![i.at(2).max(j.at(1)), j.at(2)];
            for t in 3..=k {
                a.push(i.at(t).min(j.at(t)));
                b.push(i.at(t).max(j.at(t)));
            }
            Ok((subset(a, n), subset(b, n)))
        } else {
            Ok(split_min_max(i, j, first_rise(i, j, 2)))
        }
    } else if i.at(1) <= j.at(1) {
        Ok(split_min_max(i, j, first_rise(i, j, s)))
    } else if i.at(1) < j.at(2) {
        // Exchange i_1 and j_2, which share the second display row.
        let mut a = i.entries().to_vec();
        let mut b = j.entries().to_vec();
        std::mem::swap(&mut a[0], &mut b[1]);
        let (a, b) = (subset(a, n), subset(b, n));
        let r = first_rise(&a, &b, s);
        Ok(split_min_max(&a, &b, r))
    } else {
        Ok(split_min_max(i, j, first_rise(i, j, s)))
    }
}

/// All ordered pairs in `𝒯_ℓ`, in lexicographic order.
pub fn enumerate_tl(mf: &MatchingField) -> Vec<(Subset, Subset)> {
    let subsets = mf.subsets();
    let mut out = Vec::new();
    for i in &subsets {
        for j in &subsets {
            if classify2(mf, i, j).is_some() {
                out.push((i.clone(), j.clone()));
            }
        }
    }
    out
}
