//! Schubert degenerations `G_{k,n,ℓ,w}`: vanishing sets, the zero / toric /
//! non-toric classification, and summary tables.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;

use crate::combinatorics::{binomial, enumerate_subsets, le, GrassPerm, Subset};
use crate::error::{domain, Error, Result};
use crate::ideal::{matching_field_generators, Binomial};
use crate::matching_field::MatchingField;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tag {
    Zero,
    Toric,
    NonToric,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tag::Zero => "Zero",
            Tag::Toric => "Toric",
            Tag::NonToric => "NonToric",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A generator with exactly one side surviving; `monomial` is that side.
    Monomial {
        monomial: (Subset, Subset),
        generator: Binomial,
    },
    /// A generator with both sides surviving.
    Relation(Binomial),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub tag: Tag,
    pub witness: Option<Witness>,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag)?;
        match &self.witness {
            Some(Witness::Monomial {
                monomial: (a, b),
                generator,
            }) => {
                write!(f, "\tmonomial {a},{b} from {generator}")
            }
            Some(Witness::Relation(b)) => write!(f, "\trelation {b}"),
            None => Ok(()),
        }
    }
}

fn check_perm(w: &GrassPerm, k: usize, n: usize) -> Result<()> {
    if w.as_subset().k() != k || w.as_subset().n() != n {
        return domain(format!(
            "permutation {w} does not have shape (k={k}, n={n})"
        ));
    }
    Ok(())
}

/// `S_{w,k}`: the subsets `I` with `I ≰ w`.
pub fn vanishing_set(w: &GrassPerm, k: usize, n: usize) -> Result<BTreeSet<Subset>> {
    check_perm(w, k, n)?;
    Ok(enumerate_subsets(k, n)?
        .into_iter()
        .filter(|i| !le(i, w.as_subset()))
        .collect())
}

/// `Z_{k,n}`: the `n` permutations giving the zero ideal.
pub fn zero_set(k: usize, n: usize) -> Result<BTreeSet<GrassPerm>> {
    if k < 1 || k > n {
        return domain(format!("need 1 <= k <= n, got k={k}, n={n}"));
    }
    let mut out = BTreeSet::new();
    for i in k..=n {
        let mut e: Vec<usize> = (1..k).collect();
        e.push(i);
        out.insert(GrassPerm::new(e, n)?);
    }
    if k < n {
        for i in 1..k {
            let e = (1..=k + 1).filter(|&x| x != i).collect();
            out.insert(GrassPerm::new(e, n)?);
        }
    }
    Ok(out)
}

/// The combinatorial characterization, without witnesses.
pub fn classify_closed_form(mf: &MatchingField, w: &GrassPerm) -> Result<Classification> {
    let (k, n, ell) = (mf.k(), mf.n(), mf.ell());
    check_perm(w, k, n)?;
    let tag = if zero_set(k, n)?.contains(w) {
        Tag::Zero
    } else {
        let e = w.entries();
        let w1 = e[0];
        let nontoric = ell != 0
            && (2..=n.saturating_sub(k)).contains(&w1)
            && w1 != ell
            && e[1..].iter().all(|&x| x > ell && x != w1 + 1);
        if nontoric {
            Tag::NonToric
        } else {
            Tag::Toric
        }
    };
    Ok(Classification { tag, witness: None })
}

/// Substitutes `P_I = 0` for `I ∈ S_{w,k}` into the generators of the
/// matching field ideal.
pub fn classify_with_generators(generators: &[Binomial], w: &GrassPerm) -> Classification {
    let alive = |i: &Subset| le(i, w.as_subset());
    let mut relation = None;
    for g in generators {
        let l = alive(&g.lhs.0) && alive(&g.lhs.1);
        let r = alive(&g.rhs.0) && alive(&g.rhs.1);
        match (l, r) {
            (true, true) if relation.is_none() => relation = Some(g.clone()),
            (true, false) | (false, true) => {
                let monomial = if l { g.lhs.clone() } else { g.rhs.clone() };
                return Classification {
                    tag: Tag::NonToric,
                    witness: Some(Witness::Monomial {
                        monomial,
                        generator: g.clone(),
                    }),
                };
            }
            _ => {}
        }
    }
    match relation {
        Some(b) => Classification {
            tag: Tag::Toric,
            witness: Some(Witness::Relation(b)),
        },
        None => Classification {
            tag: Tag::Zero,
            witness: None,
        },
    }
}

pub fn classify_bruteforce(mf: &MatchingField, w: &GrassPerm) -> Result<Classification> {
    check_perm(w, mf.k(), mf.n())?;
    Ok(classify_with_generators(&matching_field_generators(mf)?, w))
}

/// Brute force for every `w`, cross-checked against the closed form.
pub fn classify_all(mf: &MatchingField) -> Result<Vec<(GrassPerm, Classification)>> {
    let gens = matching_field_generators(mf)?;
    enumerate_subsets(mf.k(), mf.n())?
        .into_par_iter()
        .map(|s| {
            let w = GrassPerm(s);
            let brute = classify_with_generators(&gens, &w);
            let closed = classify_closed_form(mf, &w)?;
            if brute.tag != closed.tag {
                return Err(Error::Check(format!(
                    "k={} n={} l={} w={w}: substitution gives {}, closed form gives {}",
                    mf.k(),
                    mf.n(),
                    mf.ell(),
                    brute.tag,
                    closed.tag
                )));
            }
            Ok((w, brute))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SummaryCounts {
    pub toric: u64,
    pub zero: u64,
    pub nontoric: u64,
}

impl SummaryCounts {
    pub fn total(&self) -> u64 {
        self.toric + self.zero + self.nontoric
    }
}

/// `n²`, `2·C(n−1, k+1)` and the remainder of the `n·C(n,k)` pairs.
pub fn summary_counts_formula(k: usize, n: usize) -> Result<SummaryCounts> {
    if k < 1 || k >= n {
        return domain(format!("summary counts need 1 <= k < n, got k={k}, n={n}"));
    }
    let zero = (n * n) as u64;
    let nontoric = 2 * binomial(n - 1, k + 1);
    let toric = n as u64 * binomial(n, k) - zero - nontoric;
    Ok(SummaryCounts {
        toric,
        zero,
        nontoric,
    })
}

/// Counts over `ℓ ∈ {0, …, n−1}` and all `w`, classified pair by pair and
/// checked against the formula.
pub fn summary_counts(k: usize, n: usize) -> Result<SummaryCounts> {
    let f = summary_counts_formula(k, n)?;
    let mut c = SummaryCounts {
        toric: 0,
        zero: 0,
        nontoric: 0,
    };
    for ell in 0..n {
        let mf = MatchingField::new(k, n, ell)?;
        for (_, cl) in classify_all(&mf)? {
            match cl.tag {
                Tag::Zero => c.zero += 1,
                Tag::Toric => c.toric += 1,
                Tag::NonToric => c.nontoric += 1,
            }
        }
    }
    if c != f {
        return Err(Error::Check(format!(
            "k={k} n={n}: counted {c:?}, formula {f:?}"
        )));
    }
    Ok(c)
}

/// `100 · toric / (n·C(n,k))` rounded half-up.
pub fn percent_toric(k: usize, n: usize) -> Result<u64> {
    let c = summary_counts_formula(k, n)?;
    Ok((200 * c.toric + c.total()) / (2 * c.total()))
}

/// The same percentage rounded half to even.
pub fn percent_toric_half_even(k: usize, n: usize) -> Result<u64> {
    let c = summary_counts_formula(k, n)?;
    let (q, r) = ((100 * c.toric) / c.total(), (100 * c.toric) % c.total());
    Ok(match (2 * r).cmp(&c.total()) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Equal => q + q % 2,
    })
}

/// A row of the toric-permutation table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub label: String,
    pub perms: Vec<GrassPerm>,
}

fn colex(w: &GrassPerm) -> Vec<usize> {
    w.entries().iter().rev().copied().collect()
}

/// Toric permutations for the diagonal field, then `ℓ = n−1` down to `1`,
/// in colexicographic order, followed by the zero set in lexicographic order.
pub fn toric_table(k: usize, n: usize) -> Result<Vec<TableRow>> {
    let ells: Vec<usize> = std::iter::once(0).chain((1..n).rev()).collect();
    let mut rows = ells
        .par_iter()
        .map(|&ell| {
            let mf = MatchingField::new(k, n, ell)?;
            let perms = classify_all(&mf)?
                .into_iter()
                .filter(|(_, c)| c.tag == Tag::Toric)
                .map(|(w, _)| w)
                .sorted_by_key(colex)
                .collect();
            let label = if ell == 0 {
                "Diagonal".to_string()
            } else {
                format!("B{ell}")
            };
            Ok(TableRow { label, perms })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.push(TableRow {
        label: "Zero".into(),
        perms: zero_set(k, n)?.into_iter().collect(),
    });
    Ok(rows)
}

/// One line per row: label, a tab, then the permutations separated by spaces.
pub fn render_table(rows: &[TableRow]) -> String {
    rows.iter()
        .map(|r| format!("{}\t{}\n", r.label, r.perms.iter().join(" ")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(entries: &[usize], n: usize) -> GrassPerm {
        GrassPerm::new(entries.to_vec(), n).unwrap()
    }

    fn names(set: &BTreeSet<Subset>) -> Vec<String> {
        set.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn vanishing_examples() {
        assert!(vanishing_set(&w(&[3, 4], 4), 2, 4).unwrap().is_empty());
        assert_eq!(
            names(&vanishing_set(&w(&[1, 3], 4), 2, 4).unwrap()),
            ["14", "23", "24", "34"]
        );
        let v = vanishing_set(&w(&[1, 3, 5], 6), 3, 6).unwrap();
        assert_eq!(v.len(), 15);
        for alive in ["123", "124", "125", "134", "135"] {
            assert!(!v.contains(&Subset::parse(alive, 6).unwrap()));
        }
    }

    #[test]
    fn vanishing_is_monotone() {
        let perms = enumerate_subsets(3, 6).unwrap();
        for a in &perms {
            for b in &perms {
                if le(a, b) {
                    let va = vanishing_set(&GrassPerm(a.clone()), 3, 6).unwrap();
                    let vb = vanishing_set(&GrassPerm(b.clone()), 3, 6).unwrap();
                    assert!(vb.is_subset(&va));
                }
            }
        }
    }

    #[test]
    fn zero_set_examples() {
        let show = |k, n| {
            zero_set(k, n)
                .unwrap()
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(show(2, 4), ["12", "13", "14", "23"]);
        assert_eq!(show(3, 6), ["123", "124", "125", "126", "134", "234"]);
        for n in 2..=10 {
            for k in 1..=n.min(5) {
                if k < n {
                    assert_eq!(zero_set(k, n).unwrap().len(), n);
                }
            }
        }
    }

    #[test]
    fn classification_examples() {
        let mf = MatchingField::new(3, 6, 3).unwrap();
        assert_eq!(
            classify_closed_form(&mf, &w(&[2, 4, 6], 6)).unwrap().tag,
            Tag::NonToric
        );
        let mf = MatchingField::new(2, 4, 2).unwrap();
        assert_eq!(
            classify_closed_form(&mf, &w(&[2, 4], 4)).unwrap().tag,
            Tag::Toric
        );
        let mf = MatchingField::new(2, 4, 1).unwrap();
        let c = classify_bruteforce(&mf, &w(&[2, 4], 4)).unwrap();
        assert_eq!(c.tag, Tag::NonToric);
        let Some(Witness::Monomial {
            monomial: (a, b),
            generator,
        }) = c.witness
        else {
            panic!("missing witness");
        };
        let alive = |s: &Subset| le(s, w(&[2, 4], 4).as_subset());
        assert!(alive(&a) && alive(&b));
        let sides = [&generator.lhs, &generator.rhs];
        assert_eq!(
            sides.iter().filter(|(x, y)| alive(x) && alive(y)).count(),
            1
        );
        let mf = MatchingField::new(3, 6, 0).unwrap();
        assert_eq!(
            classify_bruteforce(&mf, &w(&[4, 5, 6], 6)).unwrap().tag,
            Tag::Toric
        );
        for ell in 0..=5 {
            let mf = MatchingField::new(4, 5, ell).unwrap();
            assert_eq!(
                classify_closed_form(&mf, &w(&[1, 2, 3, 5], 5)).unwrap().tag,
                Tag::Zero
            );
        }
    }

    #[test]
    fn closed_form_matches_substitution() {
        for n in 2..=7 {
            for k in 1..=n.min(4) {
                for ell in 0..=n {
                    classify_all(&MatchingField::new(k, n, ell).unwrap()).unwrap();
                }
            }
        }
    }

    #[test]
    fn diagonal_survivors_are_meet_join_relations() {
        let mf = MatchingField::new(3, 6, 0).unwrap();
        let gens = matching_field_generators(&mf).unwrap();
        for (w, c) in classify_all(&mf).unwrap() {
            assert_ne!(c.tag, Tag::NonToric);
            let alive = |s: &Subset| le(s, w.as_subset());
            for g in &gens {
                let r = alive(&g.rhs.0) && alive(&g.rhs.1);
                let l = alive(&g.lhs.0) && alive(&g.lhs.1);
                assert!(!r || l);
                if r {
                    assert_eq!(
                        g.lhs,
                        crate::combinatorics::meet_join(&g.rhs.0, &g.rhs.1).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn summary_examples() {
        let c = summary_counts(3, 6).unwrap();
        assert_eq!((c.toric, c.zero, c.nontoric), (74, 36, 10));
        let c = summary_counts(2, 4).unwrap();
        assert_eq!((c.toric, c.zero, c.nontoric), (6, 16, 2));
        let c = summary_counts(2, 5).unwrap();
        assert_eq!((c.toric, c.zero, c.nontoric), (17, 25, 8));
        assert_eq!(percent_toric(2, 4).unwrap(), 25);
        assert_eq!(percent_toric(3, 6).unwrap(), 62);
        assert_eq!(percent_toric(4, 7).unwrap(), 75);
    }

    #[test]
    fn small_table() {
        let text = render_table(&toric_table(2, 4).unwrap());
        assert_eq!(
            text,
            "Diagonal\t24 34\nB3\t34\nB2\t24 34\nB1\t34\nZero\t12 13 14 23\n"
        );
    }
}
