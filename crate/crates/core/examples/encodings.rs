//! Combinatorial descriptions of spans: matrices of natural numbers, tuples
//! of words, shuffles and the ordered variant for spans of ordered maps.

use ncprop::doublecat::DoubleKind;
use ncprop::qprop::{
    all_spans, mon_span_of_words, mon_words_of_span, qf_from_matrix, qf_to_matrix, qfas_decode, qfas_encode,
    shuffle_to_word, word_to_shuffle, NatMatrix,
};
use ncprop::verify::EXAMPLE_WORD;
use ncprop::Result;

fn main() -> Result<()> {
    let a = NatMatrix::new(2, 2, vec![vec![1, 2], vec![0, 1]])?;
    let b = NatMatrix::new(2, 2, vec![vec![0, 1], vec![3, 1]])?;
    let product = qf_to_matrix(&qf_from_matrix(&a).after(&qf_from_matrix(&b))?)?;
    println!("span composition as matrices: {:?} (direct product {:?})", product.entries(), a.mul(&b)?.entries());

    let span = all_spans(DoubleKind::Fas2, 1, 2, 4)[7].clone();
    let words = mon_words_of_span(&span)?;
    println!("span 1 -> 2 with apex 4 as a word: {:?}", words.words());
    println!("  round trip: {}", mon_span_of_words(&words) == span);

    let shuffle = word_to_shuffle(&EXAMPLE_WORD, 2)?;
    println!("word {EXAMPLE_WORD:?} as a shuffle of type {:?}: {:?}", shuffle.block_type(), shuffle.images());
    println!("  round trip: {}", shuffle_to_word(&shuffle) == EXAMPLE_WORD);

    let spans = all_spans(DoubleKind::Fas, 2, 2, 2);
    let encoded: Result<Vec<_>> = spans.iter().map(qfas_encode).collect();
    let encoded = encoded?;
    let back = encoded.iter().map(qfas_decode).collect::<Result<Vec<_>>>()?;
    println!("{} ordered spans 2 -> 2 with apex 2, all recovered: {}", spans.len(), back == spans);
    println!("counts of the first: {:?}", encoded[0].counts().entries());
    Ok(())
}
