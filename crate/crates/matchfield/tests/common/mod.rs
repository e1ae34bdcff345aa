#![allow(dead_code)]

use itertools::Itertools;
use matchfield::tableau::Tableau;
use matchfield::{MatchingField, Subset};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn s(entries: &[usize], n: usize) -> Subset {
    Subset::new(entries.to_vec(), n).unwrap()
}

/// Every ordered pair of columns row-wise equal to columns `a`, `b`.
pub fn row_equal_pairs(mf: &MatchingField, a: &Subset, b: &Subset) -> Vec<(Subset, Subset)> {
    let (da, db) = (mf.display(a), mf.display(b));
    (0..mf.k())
        .map(|_| [false, true])
        .multi_cartesian_product()
        .filter_map(|flips| {
            let (x, y): (Vec<usize>, Vec<usize>) = flips
                .iter()
                .enumerate()
                .map(|(r, &f)| if f { (db[r], da[r]) } else { (da[r], db[r]) })
                .unzip();
            Some((mf.from_display(&x).ok()?, mf.from_display(&y).ok()?))
        })
        .collect()
}

/// A random tableau and a row-wise equal partner reached by random swaps
/// followed by a random column shuffle.
pub fn random_pair<R: Rng>(rng: &mut R) -> (Tableau, Tableau) {
    let n = rng.gen_range(2..=10);
    let k = rng.gen_range(1..=n.min(5));
    let ell = rng.gen_range(0..=n);
    let mf = MatchingField::new(k, n, ell).unwrap();
    let subsets = mf.subsets();
    let cols = rng.gen_range(1..=6);
    let start: Vec<Subset> = (0..cols)
        .map(|_| subsets.choose(rng).unwrap().clone())
        .collect();
    let mut other = start.clone();
    for _ in 0..rng.gen_range(0..=12) {
        if cols < 2 {
            break;
        }
        let p = rng.gen_range(0..cols);
        let q = (p + rng.gen_range(1..cols)) % cols;
        let options = row_equal_pairs(&mf, &other[p], &other[q]);
        let (x, y) = options.choose(rng).unwrap().clone();
        other[p] = x;
        other[q] = y;
    }
    other.shuffle(rng);
    (
        Tableau::new(mf, start).unwrap(),
        Tableau::new(mf, other).unwrap(),
    )
}
