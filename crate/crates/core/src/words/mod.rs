//! Words over `{a_1, ..., a_n}`, prefix codes and carets.
//!
//! Letters print as `a`..`h` (so `n <= 8`) and the empty word prints as
//! `~`. Words compare length first, then lexicographically.

mod polycyclic;

pub use polycyclic::{
    orthogonal_set_check, pn_inverse, pn_left_compatible, pn_leq, pn_mul, pn_star, BasicMap,
};

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};

/// Largest supported alphabet.
pub const MAX_ALPHABET: usize = 8;

pub fn check_alphabet(n: usize) -> Result<()> {
    if !(2..=MAX_ALPHABET).contains(&n) {
        return Err(Error::Precondition(format!(
            "alphabet size {} outside 2..={}",
            n, MAX_ALPHABET
        )));
    }
    Ok(())
}

/// A finite word; letters are `0..n` with the alphabet size carried by
/// the surrounding context.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: impl Into<Vec<u8>>) -> Self {
        Word(letters.into())
    }

    pub fn letter(c: u8) -> Self {
        Word(vec![c])
    }

    /// Parses `~` or a string over `a..`, rejecting letters outside an
    /// `n`-letter alphabet.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        if text == "~" {
            return Ok(Word::empty());
        }
        if text.is_empty() {
            return Err(Error::parse("word", "empty literal; use `~` for the empty word"));
        }
        text.chars()
            .map(|ch| {
                let c = (ch as u32).wrapping_sub('a' as u32);
                if (c as usize) < n && ch.is_ascii_lowercase() {
                    Ok(c as u8)
                } else {
                    Err(Error::parse(
                        "word",
                        format!("`{}` is not a letter of a {}-letter alphabet", ch, n),
                    ))
                }
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn child(&self, c: u8) -> Word {
        let mut v = self.0.clone();
        v.push(c);
        Word(v)
    }

    /// `self` is a (not necessarily proper) prefix of `other`.
    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    /// The `z` with `self = prefix z`.
    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        self.0.strip_prefix(prefix.0.as_slice()).map(|s| Word(s.to_vec()))
    }

    /// Drops the last letter.
    pub fn parent(&self) -> Option<Word> {
        let (_, rest) = self.0.split_last()?;
        Some(Word(rest.to_vec()))
    }

    pub fn last(&self) -> Option<u8> {
        self.0.last().copied()
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    /// Every word of length at most `max_len`, in word order.
    pub fn all_up_to(n: usize, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            layer = layer
                .iter()
                .flat_map(|w| (0..n as u8).map(move |c| w.child(c)))
                .collect();
            out.extend(layer.iter().cloned());
        }
        out
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("~");
        }
        for &c in &self.0 {
            write!(f, "{}", (b'a' + c) as char)?;
        }
        Ok(())
    }
}

/// How two words sit in the prefix order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    /// The first word is a proper prefix of the second.
    LeftPrefix,
    /// The second word is a proper prefix of the first.
    RightPrefix,
    Equal,
    Incomparable,
}

pub fn comparable(x: &Word, y: &Word) -> Comparison {
    if x == y {
        Comparison::Equal
    } else if x.is_prefix_of(y) {
        Comparison::LeftPrefix
    } else if y.is_prefix_of(x) {
        Comparison::RightPrefix
    } else {
        Comparison::Incomparable
    }
}

pub fn are_comparable(x: &Word, y: &Word) -> bool {
    comparable(x, y) != Comparison::Incomparable
}

/// The first pair of distinct positions holding comparable words.
pub fn comparable_pair(words: &[Word]) -> Option<(usize, usize)> {
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            if are_comparable(&words[i], &words[j]) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Pairwise prefix-incomparable (repeated words count as comparable).
pub fn is_prefix_code(words: &[Word]) -> bool {
    comparable_pair(words).is_none()
}

/// A finite set of pairwise prefix-incomparable words, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrefixCode {
    n: usize,
    words: Vec<Word>,
}

impl PrefixCode {
    pub fn new(n: usize, mut words: Vec<Word>) -> Result<Self> {
        check_alphabet(n)?;
        if let Some(w) = words.iter().flat_map(|w| w.letters()).find(|&&c| c as usize >= n) {
            return Err(Error::Precondition(format!(
                "letter {} outside a {}-letter alphabet",
                w, n
            )));
        }
        words.sort();
        if let Some((i, j)) = comparable_pair(&words) {
            return Err(Error::Precondition(format!(
                "{} and {} are prefix-comparable",
                words[i], words[j]
            )));
        }
        Ok(PrefixCode { n, words })
    }

    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let inner = text.trim();
        let inner = inner
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .unwrap_or(inner);
        let words = inner
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| Word::parse(s, n))
            .collect::<Result<Vec<_>>>()?;
        PrefixCode::new(n, words)
    }

    /// `{ε}`.
    pub fn trivial(n: usize) -> Self {
        PrefixCode {
            n,
            words: vec![Word::empty()],
        }
    }

    pub fn alphabet(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search(w).is_ok()
    }

    /// Trie test: the code is non-empty and every proper prefix of a code
    /// word has all `n` children on the way to the leaves.
    pub fn is_maximal(&self) -> bool {
        if self.words.is_empty() {
            return false;
        }
        let mut internal: HashSet<Word> = HashSet::new();
        for w in &self.words {
            for len in 0..w.len() {
                internal.insert(w.prefix(len));
            }
        }
        let code: HashSet<&Word> = self.words.iter().collect();
        internal.iter().all(|p| {
            (0..self.n as u8).all(|c| {
                let child = p.child(c);
                internal.contains(&child) || code.contains(&child)
            })
        })
    }

    /// `Σ n^(-|x|)` over the code, exactly.
    pub fn kraft_sum(&self) -> BigRational {
        let n = BigInt::from(self.n);
        self.words.iter().fold(BigRational::zero(), |acc, w| {
            acc + BigRational::new(BigInt::one(), num::pow(n.clone(), w.len()))
        })
    }

    pub fn is_maximal_by_kraft(&self) -> bool {
        self.kraft_sum().is_one()
    }

    /// `X \ {x} ∪ xA_n`.
    pub fn caret_expand(&self, x: &Word) -> Result<Self> {
        if !self.contains(x) {
            return Err(Error::Precondition(format!("{} is not in the code", x)));
        }
        let mut words: Vec<Word> = self.words.iter().filter(|w| *w != x).cloned().collect();
        words.extend((0..self.n as u8).map(|c| x.child(c)));
        words.sort();
        Ok(PrefixCode { n: self.n, words })
    }

    /// `(X \ xA_n) ∪ {x}`; needs every `x a_i` in the code.
    pub fn caret_reduce(&self, x: &Word) -> Result<Self> {
        let children: Vec<Word> = (0..self.n as u8).map(|c| x.child(c)).collect();
        if let Some(missing) = children.iter().find(|c| !self.contains(c)) {
            return Err(Error::Precondition(format!(
                "cannot reduce the caret at {}: {} is not in the code",
                x, missing
            )));
        }
        let mut words: Vec<Word> = self
            .words
            .iter()
            .filter(|w| !children.contains(w))
            .cloned()
            .collect();
        words.push(x.clone());
        words.sort();
        Ok(PrefixCode { n: self.n, words })
    }

    /// Words `x` whose whole caret `xA_n` lies in the code, in order.
    pub fn reducible_carets(&self) -> Vec<Word> {
        let parents: BTreeSet<Word> = self.words.iter().filter_map(Word::parent).collect();
        parents
            .into_iter()
            .filter(|p| (0..self.n as u8).all(|c| self.contains(&p.child(c))))
            .collect()
    }
}

impl fmt::Display for PrefixCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.words.iter().map(Word::to_string).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

/// All maximal prefix codes over `n` letters with at most `max_words`
/// words, generated top-down: a maximal code is `{ε}` or the union of
/// `a_i X_i` for maximal codes `X_i`.
pub fn maximal_codes_by_splitting(n: usize, max_words: usize) -> Vec<PrefixCode> {
    fn go(n: usize, budget: usize) -> Vec<Vec<Word>> {
        if budget == 0 {
            return Vec::new();
        }
        let mut out = vec![vec![Word::empty()]];
        if budget < n {
            return out;
        }
        // distribute the budget over n subtrees, each using at least one word
        let mut partial: Vec<Vec<Word>> = vec![Vec::new()];
        for c in 0..n {
            let remaining_children = n - c - 1;
            let mut next = Vec::new();
            for acc in &partial {
                let room = budget - acc.len() - remaining_children;
                for sub in go(n, room) {
                    let mut v = acc.clone();
                    v.extend(sub.iter().map(|w| Word::letter(c as u8).concat(w)));
                    next.push(v);
                }
            }
            partial = next;
        }
        out.extend(partial);
        out
    }
    let mut codes: Vec<PrefixCode> = go(n, max_words)
        .into_iter()
        .map(|mut words| {
            words.sort();
            PrefixCode { n, words }
        })
        .collect();
    codes.sort();
    codes
}

/// All maximal prefix codes reachable from `{ε}` by caret expansions,
/// keeping codes with at most `max_words` words.
pub fn maximal_codes_by_expansion(n: usize, max_words: usize) -> Vec<PrefixCode> {
    let mut seen: BTreeSet<PrefixCode> = BTreeSet::new();
    let mut frontier = vec![PrefixCode::trivial(n)];
    while let Some(code) = frontier.pop() {
        if code.len() > max_words || !seen.insert(code.clone()) {
            continue;
        }
        for x in code.words() {
            let expanded = code.caret_expand(x).expect("x is a code word");
            if expanded.len() <= max_words {
                frontier.push(expanded);
            }
        }
    }
    seen.into_iter().collect()
}
