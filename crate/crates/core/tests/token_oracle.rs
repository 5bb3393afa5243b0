//! The linter's co-markability analysis agrees with an exhaustive
//! Karp–Miller exploration on every small workflow graph.

mod common;

use common::oracle::{co_markable_pairs, compare, families, Family, Kind, Tally};
use rayon::prelude::*;

/// The acceptance target repeats the comparison up to 8 nodes (about half
/// a minute); 7 keeps this suite quick.
const MAX_NODES: usize = 7;

fn fam(kinds: &[Kind], edges: &[(usize, usize)]) -> Family {
    Family { kinds: kinds.to_vec(), edges: edges.to_vec() }
}

#[test]
fn oracle_on_hand_examples() {
    use Kind::*;
    // start -> AND split -> AND join -> end: both branches marked together.
    let diamond = fam(&[Start, AndSplit, AndJoin, End], &[(0, 1), (1, 2), (1, 2), (2, 3)]);
    assert!(co_markable_pairs(&diamond).contains(&(1, 2)));
    // XOR split into AND join: never together.
    let bad = fam(&[Start, XorSplit, AndJoin, End], &[(0, 1), (1, 2), (1, 2), (2, 3)]);
    assert!(!co_markable_pairs(&bad).contains(&(1, 2)));
    // A loop through an AND split pumps tokens without bound.
    let pump = fam(
        &[Start, XorJoin, AndSplit, End],
        &[(0, 1), (1, 2), (2, 1), (2, 3)],
    );
    let co = co_markable_pairs(&pump);
    assert!(co.contains(&(1, 3)), "{co:?}");
}

#[test]
fn families_are_well_formed() {
    let all = families(5);
    assert!(!all.is_empty());
    for f in &all {
        let mut ins = vec![0; f.kinds.len()];
        let mut outs = vec![0; f.kinds.len()];
        for &(a, b) in &f.edges {
            outs[a] += 1;
            ins[b] += 1;
        }
        assert_eq!(f.kinds.iter().filter(|k| **k == Kind::Start).count(), 1);
        for (n, k) in f.kinds.iter().enumerate() {
            let want_in = match k {
                Kind::Start => 0,
                Kind::XorJoin | Kind::AndJoin => 2,
                _ => 1,
            };
            let want_out = match k {
                Kind::End => 0,
                Kind::XorSplit | Kind::AndSplit => 2,
                _ => 1,
            };
            assert_eq!((ins[n], outs[n]), (want_in, want_out), "{f:?}");
        }
    }
}

#[test]
fn co_markability_matches_oracle() {
    let all = families(MAX_NODES);
    let tally = all
        .par_iter()
        .map(compare)
        .reduce(Tally::default, Tally::merge);
    println!("{} graphs, {} join pairs, {} disagreements", tally.graphs, tally.pairs, tally.disagreements.len());
    assert!(tally.pairs > 0);
    assert!(
        tally.disagreements.is_empty(),
        "{} disagreement(s), first: {}",
        tally.disagreements.len(),
        tally.disagreements[0]
    );
}
