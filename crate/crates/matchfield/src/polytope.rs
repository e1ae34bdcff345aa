//! Matching field polytopes and their exact f-vectors.
//!
//! Points are projected onto their affine hull, facets are found by an
//! incremental beneath-beyond hull, and faces are the nonempty intersections
//! of facets. All arithmetic is on integers.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use itertools::Itertools;

use crate::error::{domain, Error, Result};
use crate::matching_field::MatchingField;

pub const MAX_POINTS: usize = 40;
pub const MAX_DIMENSION: usize = 12;

/// A `k × n` 0/1 grid with a single 1 per row, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexPoint {
    k: usize,
    n: usize,
    cells: Vec<u8>,
}

impl VertexPoint {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.cells[row * self.n + col]
    }

    pub fn coordinates(&self) -> Vec<i64> {
        self.cells.iter().map(|&c| c as i64).collect()
    }
}

impl fmt::Display for VertexPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.cells.chunks(self.n).map(|r| r.iter().join(""));
        write!(f, "{}", rows.format(" "))
    }
}

/// The exponent grid of the matching field monomial of each `k`-subset, in
/// lexicographic subset order.
pub fn polytope_vertices(mf: &MatchingField) -> Vec<VertexPoint> {
    let (k, n) = (mf.k(), mf.n());
    mf.subsets()
        .iter()
        .map(|s| {
            let mut cells = vec![0u8; k * n];
            for (r, x) in mf.display(s).into_iter().enumerate() {
                cells[r * n + x - 1] = 1;
            }
            VertexPoint { k, n, cells }
        })
        .collect()
}

/// `(f_0, …, f_{d−1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    /// `Σ (−1)^i f_i = 1 − (−1)^d`.
    pub fn satisfies_euler(&self) -> bool {
        let d = self.dimension();
        let alt: i64 = self
            .0
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum();
        alt == if d.is_multiple_of(2) { 0 } else { 2 }
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(" "))
    }
}

pub fn f_vector(points: &[VertexPoint]) -> Result<FVector> {
    let coords: Vec<Vec<i64>> = points.iter().map(VertexPoint::coordinates).collect();
    f_vector_of_points(&coords)
}

/// Exact f-vector of the convex hull of integer points.
pub fn f_vector_of_points(points: &[Vec<i64>]) -> Result<FVector> {
    if points.is_empty() {
        return domain("no points");
    }
    if points.len() > MAX_POINTS {
        return Err(Error::Resource(format!(
            "{} points exceed the limit of {MAX_POINTS}",
            points.len()
        )));
    }
    let distinct: Vec<Vec<i64>> = points.iter().cloned().unique().collect();
    let projected = project_to_affine_hull(&distinct)?;
    let d = projected[0].len();
    if d == 0 {
        return domain("all points coincide");
    }
    if d > MAX_DIMENSION {
        return Err(Error::Resource(format!(
            "dimension {d} exceeds the limit of {MAX_DIMENSION}"
        )));
    }
    let hull = Hull::build(&projected)?;
    let faces = hull.faces();
    let mut f = vec![0u64; d];
    for face in &faces {
        let dim = affine_rank(&projected, *face) - 1;
        if dim < d {
            f[dim] += 1;
        }
    }
    Ok(FVector(f))
}

/// Rank by fraction-free elimination. Entries stay minors of the input.
fn rank(mut m: Vec<Vec<i128>>) -> usize {
    pivot_columns(&mut m).len()
}

/// Brings `m` to echelon form in place and returns its pivot columns.
fn pivot_columns(m: &mut [Vec<i128>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| m[i][c] != 0) else {
            return 0;
        };
        if p != c {
            m.swap(c, p);
            sign = -sign;
        }
        for i in c + 1..n {
            for j in c + 1..n {
                m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) / prev;
            }
        }
        prev = m[c][c];
    }
    if n == 0 {
        1
    } else {
        sign * m[n - 1][n - 1]
    }
}

fn differences(points: &[Vec<i64>], idx: impl IntoIterator<Item = usize>) -> Vec<Vec<i128>> {
    let mut it = idx.into_iter();
    let Some(first) = it.next() else {
        return Vec::new();
    };
    let base = &points[first];
    it.map(|i| {
        points[i]
            .iter()
            .zip(base)
            .map(|(&a, &b)| (a - b) as i128)
            .collect()
    })
    .collect()
}

/// Number of affinely independent points among the set bits of `set`.
fn affine_rank(points: &[Vec<i64>], set: u64) -> usize {
    if set == 0 {
        return 0;
    }
    1 + rank(differences(points, bits(set)))
}

fn bits(set: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| set >> i & 1 == 1)
}

/// Keeps the coordinates at the pivot columns of the difference vectors;
/// the projection is injective on the affine hull.
fn project_to_affine_hull(points: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let dim = points[0].len();
    if points.iter().any(|p| p.len() != dim) {
        return domain("points have different lengths");
    }
    let mut diffs = differences(points, 0..points.len());
    let keep = pivot_columns(&mut diffs);
    Ok(points
        .iter()
        .map(|p| keep.iter().map(|&c| p[c]).collect())
        .collect())
}

#[derive(Debug, Clone)]
struct Facet {
    normal: Vec<i64>,
    offset: i64,
    /// Points of the current hull lying on the facet.
    points: u64,
}

impl Facet {
    fn eval(&self, p: &[i64]) -> i64 {
        self.normal.iter().zip(p).map(|(a, x)| a * x).sum::<i64>() - self.offset
    }
}

struct Hull<'a> {
    points: &'a [Vec<i64>],
    d: usize,
    facets: Vec<Facet>,
    added: u64,
}

impl<'a> Hull<'a> {
    fn build(points: &'a [Vec<i64>]) -> Result<Self> {
        let d = points[0].len();
        let mut simplex = vec![0usize];
        for i in 1..points.len() {
            if simplex.len() == d + 1 {
                break;
            }
            let mut trial = simplex.clone();
            trial.push(i);
            if rank(differences(points, trial.iter().copied())) == trial.len() - 1 {
                simplex = trial;
            }
        }
        if simplex.len() != d + 1 {
            return Err(Error::Check(
                "affine hull projection lost full dimension".into(),
            ));
        }
        let mut hull = Hull {
            points,
            d,
            facets: Vec::new(),
            added: 0,
        };
        for &i in &simplex {
            hull.added |= 1 << i;
        }
        for &skip in &simplex {
            let through: Vec<usize> = simplex.iter().copied().filter(|&i| i != skip).collect();
            let facet = hull.facet_through(&through, skip)?;
            hull.facets.push(facet);
        }
        for i in 0..points.len() {
            if hull.added >> i & 1 == 0 {
                hull.insert(i)?;
            }
        }
        Ok(hull)
    }

    /// The hyperplane through `through` (affine rank `d`), oriented so that
    /// point `inside` satisfies `a·x ≤ b`.
    fn facet_through(&self, through: &[usize], inside: usize) -> Result<Facet> {
        let d = self.d;
        let rows = differences(self.points, through.iter().copied());
        let mut basis: Vec<Vec<i128>> = Vec::new();
        for row in rows {
            let mut trial = basis.clone();
            trial.push(row);
            if rank(trial.clone()) == trial.len() {
                basis = trial;
            }
            if basis.len() == d - 1 {
                break;
            }
        }
        if basis.len() != d - 1 {
            return Err(Error::Check("facet points do not span a hyperplane".into()));
        }
        let mut normal: Vec<i128> = (0..d)
            .map(|c| {
                let minor: Vec<Vec<i128>> = basis
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != c)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                if c % 2 == 0 {
                    det(minor)
                } else {
                    -det(minor)
                }
            })
            .collect();
        let g = normal.iter().fold(0i128, |g, &x| gcd(g, x.abs()));
        for x in &mut normal {
            *x /= g;
        }
        let normal: Vec<i64> = normal
            .into_iter()
            .map(|x| i64::try_from(x).map_err(|_| Error::Resource("facet normal overflow".into())))
            .collect::<Result<_>>()?;
        let offset: i64 = normal
            .iter()
            .zip(&self.points[through[0]])
            .map(|(a, x)| a * x)
            .sum();
        let mut facet = Facet {
            normal,
            offset,
            points: 0,
        };
        if facet.eval(&self.points[inside]) > 0 {
            facet.normal.iter_mut().for_each(|a| *a = -*a);
            facet.offset = -facet.offset;
        }
        facet.points = self.on_plane(&facet, self.added);
        Ok(facet)
    }

    fn on_plane(&self, facet: &Facet, among: u64) -> u64 {
        bits(among)
            .filter(|&i| facet.eval(&self.points[i]) == 0)
            .fold(0, |acc, i| acc | 1 << i)
    }

    fn insert(&mut self, p: usize) -> Result<()> {
        let pt = &self.points[p];
        let side: Vec<i64> = self.facets.iter().map(|f| f.eval(pt)).collect();
        self.added |= 1 << p;
        if side.iter().all(|&s| s <= 0) {
            for (f, &s) in self.facets.iter_mut().zip(&side) {
                if s == 0 {
                    f.points |= 1 << p;
                }
            }
            return Ok(());
        }
        // A point of the old hull strictly inside the new one.
        let interior = bits(self.added & !(1 << p))
            .next()
            .expect("hull has points");
        let mut new_facets: Vec<Facet> = Vec::new();
        let mut seen: HashSet<(Vec<i64>, i64)> = HashSet::new();
        for (a, fa) in self.facets.iter().enumerate() {
            if side[a] <= 0 {
                continue;
            }
            for (b, fb) in self.facets.iter().enumerate() {
                if side[b] >= 0 {
                    continue;
                }
                let ridge = fa.points & fb.points;
                if (ridge.count_ones() as usize) < self.d - 1
                    || affine_rank(self.points, ridge) != self.d - 1
                {
                    continue;
                }
                let through: Vec<usize> = bits(ridge).chain(std::iter::once(p)).collect();
                let inside = bits(fb.points ^ (fb.points & ridge))
                    .next()
                    .unwrap_or(interior);
                let facet = self.facet_through(&through, inside)?;
                if seen.insert((facet.normal.clone(), facet.offset)) {
                    new_facets.push(facet);
                }
            }
        }
        let mut kept: Vec<Facet> = Vec::new();
        for (f, &s) in self.facets.iter().zip(&side) {
            if s < 0 {
                kept.push(f.clone());
            } else if s == 0 {
                let mut g = f.clone();
                g.points |= 1 << p;
                seen.insert((g.normal.clone(), g.offset));
                kept.push(g);
            }
        }
        for f in new_facets {
            if !kept
                .iter()
                .any(|g| g.normal == f.normal && g.offset == f.offset)
            {
                kept.push(f);
            }
        }
        self.facets = kept;
        Ok(())
    }

    /// All nonempty faces as point sets: the polytope and every nonempty
    /// intersection of facets.
    fn faces(&self) -> BTreeSet<u64> {
        let facet_sets: Vec<u64> = self.facets.iter().map(|f| f.points).collect();
        let mut faces: BTreeSet<u64> = facet_sets.iter().copied().collect();
        let mut frontier: Vec<u64> = faces.iter().copied().collect();
        while let Some(face) = frontier.pop() {
            for &f in &facet_sets {
                let meet = face & f;
                if meet != 0 && faces.insert(meet) {
                    frontier.push(meet);
                }
            }
        }
        faces.insert(self.added);
        faces
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binomial;

    #[test]
    fn vertex_examples() {
        let v = polytope_vertices(&MatchingField::new(3, 6, 0).unwrap());
        assert_eq!(v.len(), 20);
        assert_eq!(v.iter().unique().count(), 20);
        let v = polytope_vertices(&MatchingField::new(1, 3, 0).unwrap());
        assert_eq!(
            v.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            ["100", "010", "001"]
        );
        let mf = MatchingField::new(2, 4, 2).unwrap();
        let v = polytope_vertices(&mf);
        // {1,3} is the second subset; 1 sits in row 2 and 3 in row 1.
        assert_eq!(v[1].to_string(), "0010 1000");
        assert_eq!(v[1].get(1, 0), 1);
        assert_eq!(v[1].get(0, 2), 1);
    }

    fn unit(d: usize, i: usize) -> Vec<i64> {
        (0..d).map(|j| (i == j) as i64).collect()
    }

    #[test]
    fn simplex_and_cube() {
        for d in 1..=6 {
            let mut pts: Vec<Vec<i64>> = vec![vec![0; d]];
            pts.extend((0..d).map(|i| unit(d, i)));
            let f = f_vector_of_points(&pts).unwrap();
            let expected: Vec<u64> = (0..d).map(|i| binomial(d + 1, i + 1)).collect();
            assert_eq!(f.0, expected);
            assert!(f.satisfies_euler());
        }
        let cube: Vec<Vec<i64>> = (0..8)
            .map(|m| (0..3).map(|b| (m >> b) & 1).collect())
            .collect();
        assert_eq!(f_vector_of_points(&cube).unwrap().0, vec![8, 12, 6]);
        let cube4: Vec<Vec<i64>> = (0..16)
            .map(|m| (0..4).map(|b| (m >> b) & 1).collect())
            .collect();
        assert_eq!(f_vector_of_points(&cube4).unwrap().0, vec![16, 32, 24, 8]);
    }

    #[test]
    fn interior_and_embedded_points() {
        // A square embedded in 3-space, plus its centre scaled by 2.
        let pts = vec![
            vec![0, 0, 5],
            vec![2, 0, 5],
            vec![0, 2, 5],
            vec![2, 2, 5],
            vec![1, 1, 5],
        ];
        assert_eq!(f_vector_of_points(&pts).unwrap().0, vec![4, 4]);
        // Octahedron: non-simplicial input order and coplanar quadruples.
        let mut oct = Vec::new();
        for i in 0..3 {
            for s in [-1, 1] {
                let mut p = vec![0; 3];
                p[i] = s;
                oct.push(p);
            }
        }
        assert_eq!(f_vector_of_points(&oct).unwrap().0, vec![6, 12, 8]);
    }

    #[test]
    fn guards() {
        assert!(matches!(
            f_vector_of_points(&[vec![1, 2], vec![1, 2]]),
            Err(Error::Domain(_))
        ));
        let many: Vec<Vec<i64>> = (0..41).map(|i| vec![i, i * i]).collect();
        assert!(matches!(f_vector_of_points(&many), Err(Error::Resource(_))));
        let mf = MatchingField::new(4, 8, 0).unwrap();
        assert!(matches!(
            f_vector(&polytope_vertices(&mf)),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn small_grassmannian_polytopes() {
        for ell in 0..=4 {
            let f = f_vector(&polytope_vertices(&MatchingField::new(2, 4, ell).unwrap())).unwrap();
            assert!(f.satisfies_euler());
            assert_eq!(f.0[0], 6);
        }
    }

    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn euler_on_random_cube_subsets(points in proptest::collection::vec(0u32..32, 6..14)) {
            let pts: Vec<Vec<i64>> =
                points.iter().map(|m| (0..5).map(|b| (m >> b & 1) as i64).collect()).collect();
            match f_vector_of_points(&pts) {
                Ok(f) => {
                    prop_assert!(f.satisfies_euler(), "{f}");
                    prop_assert_eq!(f.0[0] as usize, pts.iter().unique().count());
                }
                Err(Error::Domain(_)) => prop_assert!(pts.iter().unique().count() == 1),
                Err(e) => prop_assert!(false, "{e}"),
            }
        }
    }
}
