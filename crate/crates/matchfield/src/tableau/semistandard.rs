//! The bijection between `𝒯_ℓ` and two-column semi-standard tableaux.
//!
//! A two-column semi-standard tableau is represented by its columns
//! `(left, right)` as sorted subsets with `left ≤ right` component-wise.

use crate::combinatorics::{le, Subset};
use crate::error::{domain, Result};
use crate::matching_field::MatchingField;

use super::classify::{classify2, first_rise, ClassTag};

/// Moves rows `2..=m` of each column to the other column.
fn cross(a: &Subset, b: &Subset, m: usize) -> (Subset, Subset) {
    let k = a.k();
    let mut x = Vec::with_capacity(k);
    let mut y = Vec::with_capacity(k);
    for t in 1..=k {
        if (2..=m).contains(&t) {
            x.push(b.at(t));
            y.push(a.at(t));
        } else {
            x.push(a.at(t));
            y.push(b.at(t));
        }
    }
    (
        Subset::new(x, a.n()).expect("crossed column stays increasing"),
        Subset::new(y, a.n()).expect("crossed column stays increasing"),
    )
}

/// `(a_1..a_m, b_{m+1}..b_k)` and `(b_1..b_m, a_{m+1}..a_k)`.
fn exchange_head(a: &Subset, b: &Subset, m: usize) -> (Subset, Subset) {
    let k = a.k();
    let x = (1..=k)
        .map(|t| if t <= m { a.at(t) } else { b.at(t) })
        .collect();
    let y = (1..=k)
        .map(|t| if t <= m { b.at(t) } else { a.at(t) })
        .collect();
    (
        Subset::new(x, a.n()).expect("exchanged column stays increasing"),
        Subset::new(y, a.n()).expect("exchanged column stays increasing"),
    )
}

/// `S(T)` for `T = T_{IJ} ∈ 𝒯_ℓ`.
pub fn to_semistandard(mf: &MatchingField, i: &Subset, j: &Subset) -> Result<(Subset, Subset)> {
    mf.check_subset(i)?;
    mf.check_subset(j)?;
    let Some(class) = classify2(mf, i, j) else {
        return domain(format!(
            "({i}, {j}) is not a canonical tableau for l={}",
            mf.ell()
        ));
    };
    Ok(match (class.tag, class.param) {
        (ClassTag::Type1 | ClassTag::Type2 | ClassTag::Type3A, _) => (i.clone(), j.clone()),
        (ClassTag::Type3B, Some(r)) => cross(i, j, r),
        (ClassTag::Type3C, Some(s)) => cross(i, j, first_rise(i, j, s)),
        // The first rows are exchanged as well: j_1 < j_2 ≤ i_1.
        (ClassTag::Type3D, Some(s)) => exchange_head(j, i, first_rise(i, j, s)),
        _ => unreachable!("3B/3C/3D always carry a parameter"),
    })
}

/// `S⁻¹`: the unique member of `𝒯_ℓ` mapped to the semi-standard tableau
/// with columns `(left, right)`.
pub fn from_semistandard(
    mf: &MatchingField,
    left: &Subset,
    right: &Subset,
) -> Result<(Subset, Subset)> {
    mf.check_subset(left)?;
    mf.check_subset(right)?;
    if !le(left, right) {
        return domain(format!(
            "columns {left} | {right} do not have weakly increasing rows"
        ));
    }
    let (a, b) = (left, right);
    if a.k() == 1 {
        return Ok((a.clone(), b.clone()));
    }
    let blue = |x: usize| mf.in_first_block(x);
    let (a1, a2, b1, b2) = (blue(a.at(1)), blue(a.at(2)), blue(b.at(1)), blue(b.at(2)));
    let pair = match (a1, a2, b1, b2) {
        // i_1 in the first block only: types 3A / 3B.
        (true, false, false, false) => {
            if a.at(2) <= b.at(1) {
                (a.clone(), b.clone())
            } else {
                let k = a.k();
                let r = (2..k).find(|&t| a.at(t + 1) > b.at(t)).unwrap_or(k);
                cross(a, b, r)
            }
        }
        // i_1, i_2, j_1 in the first block, j_2 in the second: 3C / 3D.
        (true, true, true, false) => {
            let s = mf.column_type(a);
            let k = a.k();
            let r = (s..k).find(|&t| a.at(t + 1) > b.at(t)).unwrap_or(k);
            if b.at(1) < a.at(2) {
                cross(a, b, r)
            } else {
                exchange_head(b, a, r)
            }
        }
        // Types 1 and 2: the preimage is the tableau itself.
        _ => (a.clone(), b.clone()),
    };
    debug_assert!(classify2(mf, &pair.0, &pair.1).is_some());
    Ok(pair)
}
