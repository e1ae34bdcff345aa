mod common;

use matchfield::tableau::{is_swap, swap_sequence, Tableau};
use matchfield::MatchingField;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn random_row_equal_pairs_are_connected_by_swaps() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..3000 {
        let (t, u) = common::random_pair(&mut rng);
        let d = swap_sequence(&t, &u).unwrap_or_else(|e| panic!("{t} -> {u}: {e}"));
        let mut cur = t.clone();
        for step in &d.steps {
            assert_eq!(step.before, cur);
            assert!(is_swap(&step.before, &step.after).unwrap());
            cur = step.after.clone();
        }
        for (p, &q) in d.permutation.iter().enumerate() {
            assert_eq!(cur.columns()[q], u.columns()[p]);
        }
        assert!(
            d.steps.len() <= d.bound,
            "{t} -> {u}: {} steps, bound {}",
            d.steps.len(),
            d.bound
        );
    }
}

#[test]
fn four_by_eight_derivation_starts_with_tail_exchange() {
    let mf = MatchingField::new(4, 8, 1).unwrap();
    let t = Tableau::parse(mf, "2,3,6,7|4,5,6,8|5,6,7,8|3,1,4,5").unwrap();
    let u = Tableau::parse(mf, "2,3,4,5|4,5,6,7|5,6,7,8|3,1,6,8").unwrap();
    let d = swap_sequence(&t, &u).unwrap();
    assert_eq!(
        d.steps[0].after.to_string(),
        "2,3,4,5|4,5,6,8|5,6,7,8|3,1,6,7"
    );
    assert_eq!(d.steps[0].rows, vec![2, 3]);
    assert_eq!(d.steps.len(), 2);
}
