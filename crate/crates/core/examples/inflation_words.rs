//! Vertex-inflation words: images, deflation, letter statistics and the
//! multi-scale stack of layers with parent links.
//!
//! ```text
//! cargo run --example inflation_words
//! ```

use qcft::inflation::{
    deflate, find_occurrences, inflate, letter_counts, mqa_build, perron_eigenvalue, scale_factor, LetterSequence,
    SubstitutionRule,
};
use qcft::TilingParams;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rule = SubstitutionRule::pentagon();
    println!("a -> {}", LetterSequence::new(rule.image(qcft::Letter::A).to_vec(), false, 0)?);
    println!("b -> {}", LetterSequence::new(rule.image(qcft::Letter::B).to_vec(), false, 0)?);
    println!("matrix {:?}, Perron root {:.12}", rule.matrix().m, perron_eigenvalue(&rule.matrix()));
    println!("lambda(5,4) = {:.12}", scale_factor(&TilingParams::pentagon())?);

    let bab = LetterSequence::linear("bab")?;
    let image = inflate(&bab);
    println!("{bab} -> {image} -> back {}", deflate(&image)?);
    match deflate(&LetterSequence::linear("aa")?) {
        Ok(w) => println!("aa deflates to {w}"),
        Err(e) => println!("aa has no preimage: {e:?}"),
    }

    let stack = mqa_build(LetterSequence::seed(5), 5);
    for (i, layer) in stack.layers().iter().enumerate() {
        let (a, b) = letter_counts(layer);
        println!("layer {i}: L = {:>5}  N_a = {a:>5}  N_b = {b:>5}  N_b/L = {:.6}", layer.len(), b as f64 / layer.len() as f64);
    }
    println!("limit 1 - 1/sqrt(3) = {:.6}", 1.0 - 1.0 / 3f64.sqrt());

    let block = LetterSequence::linear("ababaababa")?;
    for i in 0..5 {
        println!(
            "ababaababa occurs {:>4} times in layer {}, layer {i} has {:>4} a letters",
            find_occurrences(block.letters(), stack.layer(i + 1)).len(),
            i + 1,
            letter_counts(stack.layer(i)).0
        );
    }

    let link = stack.parent(4, 700);
    println!(
        "letter 700 of layer 4 is letter {} of the image of letter {} of layer 3; its layer-1 ancestor is {}",
        link.offset,
        link.parent,
        stack.ancestor(4, 700, 3)
    );
    Ok(())
}
