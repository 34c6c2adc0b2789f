use proptest::prelude::*;

use qcft::inflation::{
    deflate, find_inflated_occurrences, find_occurrences, inflate, letter_counts, mqa_build, perron_eigenvalue,
    scale_factor, Letter, LetterSequence, ParseFailure, SubstitutionMatrix, SubstitutionRule,
};
use qcft::TilingParams;

fn word(s: &str) -> LetterSequence {
    LetterSequence::linear(s).unwrap()
}

/// Letter counts by iterating the 2x2 count recursion by hand.
fn counts_by_recursion(steps: u32) -> (u64, u64) {
    let (mut a, mut b) = (5u64, 0u64);
    for _ in 0..steps {
        (a, b) = (3 * a + b, 2 * a + b);
    }
    (a, b)
}

#[test]
fn image_words() {
    assert_eq!(inflate(&word("b")).to_string(), "ab");
    assert_eq!(inflate(&word("a")).to_string(), "abaab");
    assert_eq!(inflate(&word("bab")).to_string(), "ababaabab");
    let aaa = inflate(&word("aaa")).to_string();
    assert_eq!(aaa, "abaababaababaab");
    assert_eq!(&aaa[3..12], "ababaabab");
}

#[test]
fn deflation_examples() {
    assert_eq!(deflate(&word("ab")).unwrap().to_string(), "b");
    assert_eq!(deflate(&word("ababaabab")).unwrap().to_string(), "bab");
    assert!(matches!(deflate(&word("aa")), Err(ParseFailure::NoParse { .. })));
}

#[test]
fn layer_lengths_and_counts() {
    let stack = mqa_build(LetterSequence::seed(5), 4);
    let lengths: Vec<usize> = stack.layers().iter().map(LetterSequence::len).collect();
    assert_eq!(lengths, [5, 25, 95, 355, 1325]);
    for (i, layer) in stack.layers().iter().enumerate() {
        let (a, b) = counts_by_recursion(i as u32);
        assert_eq!(letter_counts(layer), (a as usize, b as usize));
    }
    assert_eq!(letter_counts(stack.layer(2)), (55, 40));
    assert_eq!(letter_counts(stack.layer(4)), (765, 560));
    assert_eq!(mqa_build(LetterSequence::seed(5), 0).layers().len(), 1);
}

#[test]
fn scale_factors_match_perron_roots() {
    assert!((scale_factor(&TilingParams::pentagon()).unwrap() - (2.0 + 3f64.sqrt())).abs() < 1e-12);
    assert!((scale_factor(&TilingParams::new(4, 4).unwrap()).unwrap() - 1.0).abs() < 1e-12);
    assert!((scale_factor(&TilingParams::new(3, 7).unwrap()).unwrap() - 2.618033988749895).abs() < 1e-12);
    assert!(scale_factor(&TilingParams::new(3, 3).unwrap()).is_err());
    assert!((perron_eigenvalue(&SubstitutionMatrix::identity()) - 1.0).abs() < 1e-12);
    for (n, k) in [(5, 4), (4, 5), (6, 4), (5, 5), (7, 4)] {
        let rule = SubstitutionRule::for_tiling(n, k).unwrap();
        let lambda = scale_factor(&TilingParams::new(n, k).unwrap()).unwrap();
        assert!((perron_eigenvalue(&rule.matrix()) - lambda).abs() < 1e-9, "{{{n},{k}}}");
    }
}

#[test]
fn growth_ratio_settles_at_lambda() {
    let lambda = 2.0 + 3f64.sqrt();
    for seed in ["a", "b", "ab", "bbbab", "aaaaa"] {
        let stack = mqa_build(LetterSequence::parse(seed, true, 0).unwrap(), 5);
        let ratio = stack.layer(5).len() as f64 / stack.layer(4).len() as f64;
        assert!((ratio / lambda - 1.0).abs() < 0.01, "seed {seed}: {ratio}");
    }
}

#[test]
fn local_scaling_blocks() {
    let stack = mqa_build(LetterSequence::seed(5), 5);
    let block = word("ababaababa");
    for i in 0..5 {
        let occurrences = find_occurrences(block.letters(), stack.layer(i + 1)).len();
        assert!(occurrences >= letter_counts(stack.layer(i)).0);
    }
    let target = inflate(&word("aabab"));
    let hits = find_inflated_occurrences(&word("bab"), &target);
    // "bab" sits at letters 2..5 of "aabab", whose image starts at 5 + 5.
    assert!(hits.contains(&10));
    for h in hits {
        assert_eq!(&target.to_string()[h..h + 9], "ababaabab");
    }
    let every = find_occurrences(&[], stack.layer(1));
    assert_eq!(every.len(), stack.layer(1).len());
}

#[test]
fn parent_maps_are_monotone_and_onto() {
    let stack = mqa_build(LetterSequence::seed(5), 4);
    for layer in 1..=4 {
        let parents = stack.parents(layer);
        assert!(parents.windows(2).all(|w| w[0].parent <= w[1].parent));
        let last = parents.last().unwrap().parent;
        assert_eq!(last + 1, stack.layer(layer - 1).len());
        for (pos, link) in parents.iter().enumerate() {
            let letter = stack.layer(layer - 1).at(link.parent);
            let image = stack.rule().image(letter);
            assert_eq!(image[link.offset], stack.layer(layer).at(pos));
        }
    }
}

fn letters() -> impl Strategy<Value = String> {
    proptest::collection::vec(prop_oneof![Just('a'), Just('b')], 1..40).prop_map(|v| v.into_iter().collect())
}

proptest! {
    #[test]
    fn inflate_deflate_round_trip(s in letters()) {
        let w = word(&s);
        prop_assert_eq!(deflate(&inflate(&w)).unwrap(), w);
    }

    #[test]
    fn inflated_length_follows_matrix_rows(s in letters()) {
        let w = word(&s);
        let (a, b) = letter_counts(&w);
        prop_assert_eq!(inflate(&w).len(), 5 * a + 2 * b);
    }

    #[test]
    fn inflated_words_contain_no_bb(s in letters()) {
        let image = inflate(&word(&s)).to_string();
        prop_assert!(!image.contains("bb"));
        prop_assert!(image.starts_with('a'));
        prop_assert!(image.ends_with('b'));
    }
}

#[test]
fn letters_round_trip_chars() {
    for l in [Letter::A, Letter::B] {
        assert_eq!(Letter::from_char(l.as_char()).unwrap(), l);
    }
    assert!(Letter::from_char('c').is_err());
}
