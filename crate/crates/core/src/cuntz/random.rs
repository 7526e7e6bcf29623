//! Seeded random elements of `H_n` for the property suites.

use rand::seq::SliceRandom;
use rand::Rng;

use super::TableMap;
use crate::words::{PrefixCode, Word};

/// Default bound on sampled word lengths: keeps tables at most 81 rows.
pub fn default_max_len(n: usize) -> usize {
    if n <= 2 {
        4
    } else {
        3
    }
}

pub fn random_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters((0..len).map(|_| rng.gen_range(0..n as u8)).collect::<Vec<_>>())
}

fn expand_random<R: Rng>(rng: &mut R, code: &PrefixCode, max_len: usize) -> Option<PrefixCode> {
    let open: Vec<&Word> = code.words().iter().filter(|w| w.len() < max_len).collect();
    let x = open.choose(rng)?;
    Some(code.caret_expand(x).expect("x is a code word"))
}

/// A maximal prefix code from random caret expansions.
pub fn random_maximal_code<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> PrefixCode {
    let mut code = PrefixCode::trivial(n);
    while !rng.gen_bool(0.25) {
        match expand_random(rng, &code, max_len) {
            Some(next) => code = next,
            None => break,
        }
    }
    code
}

/// A non-empty prefix code: a random subset of a random maximal code.
pub fn random_prefix_code<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> PrefixCode {
    let full = random_maximal_code(rng, n, max_len);
    let mut words: Vec<Word> = full.words().iter().filter(|_| rng.gen_bool(0.6)).cloned().collect();
    if words.is_empty() {
        words.push(full.words().choose(rng).expect("non-empty").clone());
    }
    PrefixCode::new(n, words).expect("subset of a prefix code")
}

/// A total element: maximal domain code, arbitrary images.
pub fn random_total<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> TableMap {
    let x = random_maximal_code(rng, n, max_len);
    let pairs = x
        .words()
        .iter()
        .map(|w| (w.clone(), random_word(rng, n, max_len)))
        .collect();
    TableMap::from_pairs(n, pairs)
}

/// Any element, zero included: a random restriction of a random total
/// element.
pub fn random_table<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> TableMap {
    let f = random_total(rng, n, max_len);
    let pairs = f.pairs().iter().filter(|_| rng.gen_bool(0.7)).cloned().collect();
    TableMap::from_pairs(n, pairs)
}

/// A unit of `C_n`: a bijection between two maximal codes of equal size.
pub fn random_unit<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> TableMap {
    let x = random_maximal_code(rng, n, max_len);
    let steps = (x.len() - 1) / (n - 1);
    let mut y = PrefixCode::trivial(n);
    for _ in 0..steps {
        y = expand_random(rng, &y, max_len).expect("a code smaller than x can still expand");
    }
    let mut images = y.words().to_vec();
    images.shuffle(rng);
    TableMap::from_pairs(n, x.words().iter().cloned().zip(images).collect())
}

/// A partial unit: a random restriction of a random unit.
pub fn random_partial_unit<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> TableMap {
    let u = random_unit(rng, n, max_len);
    let pairs = u.pairs().iter().filter(|_| rng.gen_bool(0.7)).cloned().collect();
    TableMap::from_pairs(n, pairs)
}
