//! Quadratic binomial generators of matching field ideals, the degree-two
//! dimension count, and minimal generating sets of initial forms over `ℚ`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{enumerate_subsets, le, meet_join, Subset};
use crate::error::{domain, Result};
use crate::matching_field::MatchingField;
use crate::tableau::{classify2, normalize2, row_content_of};

/// `P_I P_J − sign · P_{I'} P_{J'}`. `lhs` is the canonical side, `rhs` the
/// pair that is not canonical in either order. Both pairs are stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    pub lhs: (Subset, Subset),
    pub rhs: (Subset, Subset),
    pub sign: i8,
}

fn sorted_pair(a: Subset, b: Subset) -> (Subset, Subset) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl Binomial {
    fn new(lhs: (Subset, Subset), rhs: (Subset, Subset)) -> Self {
        Binomial {
            lhs: sorted_pair(lhs.0, lhs.1),
            rhs: sorted_pair(rhs.0, rhs.1),
            sign: 1,
        }
    }

    pub fn lhs_monomial(&self) -> Vec<Subset> {
        vec![self.lhs.0.clone(), self.lhs.1.clone()]
    }

    pub fn rhs_monomial(&self) -> Vec<Subset> {
        vec![self.rhs.0.clone(), self.rhs.1.clone()]
    }

    /// Weights of the two monomials under `w`.
    pub fn weights(&self, w: &BTreeMap<Subset, i64>) -> (i64, i64) {
        (
            w[&self.lhs.0] + w[&self.lhs.1],
            w[&self.rhs.0] + w[&self.rhs.1],
        )
    }

    pub fn to_polynomial(&self, weights: Arc<BTreeMap<Subset, i64>>) -> Result<WeightedPolynomial> {
        let minus_sign = BigRational::from_integer((-self.sign).into());
        WeightedPolynomial::new(
            vec![
                (BigRational::one(), self.lhs_monomial()),
                (minus_sign, self.rhs_monomial()),
            ],
            weights,
        )
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.sign > 0 { "-" } else { "+" };
        write!(
            f,
            "{},{} {op} {},{}",
            self.lhs.0, self.lhs.1, self.rhs.0, self.rhs.1
        )
    }
}

#[derive(Serialize)]
struct BinomialJson {
    lhs: [Vec<usize>; 2],
    rhs: [Vec<usize>; 2],
    sign: i8,
}

impl Serialize for Binomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BinomialJson {
            lhs: [self.lhs.0.entries().to_vec(), self.lhs.1.entries().to_vec()],
            rhs: [self.rhs.0.entries().to_vec(), self.rhs.1.entries().to_vec()],
            sign: self.sign,
        }
        .serialize(s)
    }
}

fn unordered_pairs(subsets: &[Subset]) -> impl ParallelIterator<Item = (usize, usize)> + '_ {
    (0..subsets.len())
        .into_par_iter()
        .flat_map_iter(move |a| (a + 1..subsets.len()).map(move |b| (a, b)))
}

/// `P_I P_J − P_{I∧J} P_{I∨J}` over incomparable pairs, written with the
/// meet/join side first.
pub fn diagonal_generators(k: usize, n: usize) -> Result<Vec<Binomial>> {
    let subsets = enumerate_subsets(k, n)?;
    unordered_pairs(&subsets)
        .filter(|&(a, b)| !le(&subsets[a], &subsets[b]) && !le(&subsets[b], &subsets[a]))
        .map(|(a, b)| {
            let mj = meet_join(&subsets[a], &subsets[b])?;
            Ok(Binomial::new(mj, (subsets[a].clone(), subsets[b].clone())))
        })
        .collect()
}

/// One binomial per unordered pair outside the canonical tableaux, paired
/// with its normal form.
pub fn matching_field_generators(mf: &MatchingField) -> Result<Vec<Binomial>> {
    let subsets = mf.subsets();
    unordered_pairs(&subsets)
        .filter(|&(a, b)| {
            let (i, j) = (&subsets[a], &subsets[b]);
            classify2(mf, i, j).is_none() && classify2(mf, j, i).is_none()
        })
        .map(|(a, b)| {
            let (i, j) = (&subsets[a], &subsets[b]);
            Ok(Binomial::new(normalize2(mf, i, j)?, (i.clone(), j.clone())))
        })
        .collect()
}

/// Number of distinct degree-two monomial images: distinct row contents over
/// all unordered pairs `{I, J}` including `I = J`.
pub fn degree2_dimension(mf: &MatchingField) -> usize {
    let subsets = mf.subsets();
    let mut seen = HashSet::new();
    for a in 0..subsets.len() {
        for b in a..subsets.len() {
            seen.insert(row_content_of(
                mf,
                &[subsets[a].clone(), subsets[b].clone()],
            ));
        }
    }
    seen.len()
}

/// A sorted multiset of variables.
pub type Monomial = Vec<Subset>;

/// A polynomial in Plücker variables with exact rational coefficients and a
/// weight on each variable.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedPolynomial {
    terms: BTreeMap<Monomial, BigRational>,
    weights: Arc<BTreeMap<Subset, i64>>,
}

impl WeightedPolynomial {
    /// Sums like terms and drops zero coefficients. Every variable needs a weight.
    pub fn new(
        terms: Vec<(BigRational, Monomial)>,
        weights: Arc<BTreeMap<Subset, i64>>,
    ) -> Result<Self> {
        let mut map: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (c, mut m) in terms {
            if let Some(v) = m.iter().find(|v| !weights.contains_key(*v)) {
                return domain(format!("variable {v} has no weight"));
            }
            m.sort();
            *map.entry(m).or_insert_with(BigRational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(WeightedPolynomial {
            terms: map,
            weights,
        })
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomial_weight(&self, m: &Monomial) -> i64 {
        m.iter().map(|v| self.weights[v]).sum()
    }

    /// Minimum term weight.
    pub fn weight(&self) -> Option<i64> {
        self.terms.keys().map(|m| self.monomial_weight(m)).min()
    }

    /// Common degree of all terms, `None` if the degrees differ or `self` is zero.
    pub fn degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(Vec::len);
        let d = degrees.next()?;
        degrees.all(|e| e == d).then_some(d)
    }

    fn with_terms(&self, terms: BTreeMap<Monomial, BigRational>) -> Self {
        WeightedPolynomial {
            terms,
            weights: Arc::clone(&self.weights),
        }
    }

    fn sub_scaled(&self, other: &Self, r: &BigRational) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            *terms.entry(m.clone()).or_insert_with(BigRational::zero) -= c * r;
        }
        terms.retain(|_, c| !c.is_zero());
        self.with_terms(terms)
    }
}

impl fmt::Display for WeightedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if idx > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            let vars: Vec<String> = m.iter().map(|v| format!("P{v}")).collect();
            write!(f, "{}", vars.join("*"))?;
        }
        Ok(())
    }
}

/// The terms of minimum weight.
pub fn initial_form(p: &WeightedPolynomial) -> Result<WeightedPolynomial> {
    let Some(d) = p.weight() else {
        return domain("the zero polynomial has no initial form");
    };
    let terms = p
        .terms
        .iter()
        .filter(|(m, _)| p.monomial_weight(m) == d)
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect();
    Ok(p.with_terms(terms))
}

/// Coefficients `r` with `target = Σ r_i basis_i`, or `None`. Exact row
/// reduction over the union of the supports.
fn solve_combination(
    basis: &[&WeightedPolynomial],
    target: &WeightedPolynomial,
) -> Option<Vec<BigRational>> {
    let mut monomials: Vec<&Monomial> = basis
        .iter()
        .flat_map(|p| p.terms.keys())
        .chain(target.terms.keys())
        .collect();
    monomials.sort();
    monomials.dedup();
    let cols = basis.len();
    let coeff = |p: &WeightedPolynomial, m: &Monomial| {
        p.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    };
    let mut rows: Vec<Vec<BigRational>> = monomials
        .iter()
        .map(|m| {
            let mut row: Vec<BigRational> = basis.iter().map(|p| coeff(p, m)).collect();
            row.push(coeff(target, m));
            row
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= p * &f;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut sol = vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = rows[i][cols].clone();
    }
    Some(sol)
}

fn common_degree(polys: &[WeightedPolynomial]) -> Result<Option<usize>> {
    let mut degree = None;
    for p in polys {
        let Some(d) = p.degree() else {
            return domain(format!("polynomial {p} is zero or not homogeneous"));
        };
        match degree {
            Some(e) if e != d => return domain(format!("mixed degrees {e} and {d}")),
            _ => degree = Some(d),
        }
    }
    Ok(degree)
}

/// Equal-degree forms generate a minimal set exactly when none lies in the
/// span of the others; spans split by weight, so rank is checked per weight.
pub fn initial_forms_independent(polys: &[WeightedPolynomial]) -> Result<bool> {
    common_degree(polys)?;
    let forms: Vec<WeightedPolynomial> = polys.iter().map(initial_form).collect::<Result<_>>()?;
    let mut by_weight: BTreeMap<i64, Vec<&WeightedPolynomial>> = BTreeMap::new();
    for f in &forms {
        by_weight
            .entry(f.weight().expect("initial forms are nonzero"))
            .or_default()
            .push(f);
    }
    Ok(by_weight
        .values()
        .all(|group| (0..group.len()).all(|t| solve_combination(&group[..t], group[t]).is_none())))
}

/// Rewrites a minimal generating set of equal-degree homogeneous polynomials
/// so that the initial forms are a minimal generating set as well.
///
/// Whenever `in(g_t)` is a combination `Σ r_i in(g_i)` of earlier initial
/// forms of the same weight, `g_t` is replaced by `g_t − Σ r_i g_i`, which
/// stays in the ideal and has strictly larger weight.
pub fn minimal_initial_generators(polys: &[WeightedPolynomial]) -> Result<Vec<WeightedPolynomial>> {
    common_degree(polys)?;
    let mut g: Vec<WeightedPolynomial> = polys.to_vec();
    let mut forms: Vec<WeightedPolynomial> = Vec::with_capacity(g.len());
    for t in 0..g.len() {
        loop {
            let form = initial_form(&g[t])?;
            let w = form.weight();
            let same: Vec<usize> = (0..t).filter(|&i| forms[i].weight() == w).collect();
            let basis: Vec<&WeightedPolynomial> = same.iter().map(|&i| &forms[i]).collect();
            let Some(r) = solve_combination(&basis, &form) else {
                forms.push(form);
                break;
            };
            let mut next = g[t].clone();
            for (&i, ri) in same.iter().zip(&r) {
                if !ri.is_zero() {
                    next = next.sub_scaled(&g[i], ri);
                }
            }
            if next.is_zero() {
                return domain(format!(
                    "polynomial {} lies in the span of the earlier ones; the input is not minimal",
                    t + 1
                ));
            }
            g[t] = next;
        }
    }
    Ok(g)
}
