//! The monoids `H_n` and `C_n` as finite tables `f^X_Y`, where the entry
//! `x_i > y_i` sends `x_i w` to `y_i w` for every infinite `w`.
//!
//! Products are function composition read right to left:
//! `f.compose(g)` applies `g` first. The empty table is zero.

mod cantor;
pub mod random;

pub use cantor::{endo_check, zero_simplifying_witness, CantorTerm, EndoReport};

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::words::{
    check_alphabet, comparable, comparable_pair, is_prefix_code, BasicMap, Comparison, PrefixCode,
    Word,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TableMap {
    n: usize,
    /// `(x, y)` pairs sorted by `x`; the `x` form a prefix code.
    pairs: Vec<(Word, Word)>,
}

impl TableMap {
    /// Validates and sorts the table; does not reduce it.
    pub fn make(n: usize, pairs: Vec<(Word, Word)>) -> Result<Self> {
        check_alphabet(n)?;
        for (x, y) in &pairs {
            if x.letters().iter().chain(y.letters()).any(|&c| c as usize >= n) {
                return Err(Error::Structure(format!(
                    "entry {}>{} uses a letter outside a {}-letter alphabet",
                    x, y, n
                )));
            }
        }
        let table = TableMap::from_pairs(n, pairs);
        let domain: Vec<Word> = table.domain().cloned().collect();
        if let Some((i, j)) = comparable_pair(&domain) {
            return Err(Error::Structure(format!(
                "domain words {} and {} are prefix-comparable",
                domain[i], domain[j]
            )));
        }
        Ok(table)
    }

    /// Sorts without validation; callers guarantee a prefix-code domain.
    fn from_pairs(n: usize, mut pairs: Vec<(Word, Word)>) -> Self {
        pairs.sort();
        TableMap { n, pairs }
    }

    /// Parses `"[x1>y1, x2>y2]"`; `"[]"` is zero.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        let inner = text
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::parse("table", format!("`{}` is not bracketed", text)))?;
        let mut pairs = Vec::new();
        for item in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (x, y) = item
                .split_once('>')
                .ok_or_else(|| Error::parse("table", format!("`{}` is not of the form x>y", item)))?;
            pairs.push((Word::parse(x, n)?, Word::parse(y, n)?));
        }
        TableMap::make(n, pairs)
    }

    pub fn zero(n: usize) -> Self {
        TableMap { n, pairs: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        TableMap {
            n,
            pairs: vec![(Word::empty(), Word::empty())],
        }
    }

    /// The table with the single entry of a basic map.
    pub fn from_basic(n: usize, f: &BasicMap) -> Self {
        match f {
            BasicMap::Zero => TableMap::zero(n),
            BasicMap::Map { y, x } => TableMap {
                n,
                pairs: vec![(x.clone(), y.clone())],
            },
        }
    }

    pub fn alphabet(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(Word, Word)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn domain(&self) -> impl Iterator<Item = &Word> {
        self.pairs.iter().map(|(x, _)| x)
    }

    pub fn images(&self) -> impl Iterator<Item = &Word> {
        self.pairs.iter().map(|(_, y)| y)
    }

    pub fn domain_code(&self) -> PrefixCode {
        PrefixCode::new(self.n, self.domain().cloned().collect()).expect("domain is a prefix code")
    }

    /// Longest word appearing in the table.
    pub fn max_word_len(&self) -> usize {
        self.pairs
            .iter()
            .map(|(x, y)| x.len().max(y.len()))
            .max()
            .unwrap_or(0)
    }

    /// Evaluates on a finite probe word: `Some(y z)` when `w = x z` for a
    /// domain word `x`, `None` when `w` has no domain word as prefix.
    pub fn apply(&self, w: &Word) -> Option<Word> {
        self.pairs
            .iter()
            .find_map(|(x, y)| w.strip_prefix(x).map(|z| y.concat(&z)))
    }

    /// Agreement on every word of length `len`; with `len` at least the
    /// longest domain word of both tables this decides equality.
    pub fn agrees_on_probes(&self, other: &TableMap, len: usize) -> bool {
        let mut layer = vec![Word::empty()];
        for _ in 0..len {
            layer = layer
                .iter()
                .flat_map(|w| (0..self.n as u8).map(move |c| w.child(c)))
                .collect();
        }
        layer.iter().all(|w| self.apply(w) == other.apply(w))
    }

    /// Semantic equality decided by probing.
    pub fn same_function(&self, other: &TableMap) -> bool {
        let len = self
            .domain()
            .chain(other.domain())
            .map(Word::len)
            .max()
            .unwrap_or(0);
        self.agrees_on_probes(other, len)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &TableMap) -> TableMap {
        assert_eq!(self.n, other.n, "composing tables over different alphabets");
        let mut pairs = Vec::new();
        for (u, v) in &other.pairs {
            for (x, y) in &self.pairs {
                match comparable(v, x) {
                    // v = x z
                    Comparison::RightPrefix | Comparison::Equal => {
                        let z = v.strip_prefix(x).expect("x prefixes v");
                        pairs.push((u.clone(), y.concat(&z)));
                    }
                    // x = v z
                    Comparison::LeftPrefix => {
                        let z = x.strip_prefix(v).expect("v prefixes x");
                        pairs.push((u.concat(&z), y.clone()));
                    }
                    Comparison::Incomparable => {}
                }
            }
        }
        TableMap::from_pairs(self.n, pairs)
    }

    /// `f^X_X`.
    pub fn star(&self) -> TableMap {
        TableMap {
            n: self.n,
            pairs: self.pairs.iter().map(|(x, _)| (x.clone(), x.clone())).collect(),
        }
    }

    /// The images form a prefix code.
    pub fn is_partial_unit(&self) -> bool {
        let images: Vec<Word> = self.images().cloned().collect();
        is_prefix_code(&images)
    }

    pub fn invert(&self) -> Option<TableMap> {
        self.is_partial_unit().then(|| {
            TableMap::from_pairs(
                self.n,
                self.pairs.iter().map(|(x, y)| (y.clone(), x.clone())).collect(),
            )
        })
    }

    pub fn is_total(&self) -> bool {
        self.domain_code().is_maximal()
    }

    pub fn is_unit(&self) -> bool {
        self.is_total()
            && self.is_partial_unit()
            && PrefixCode::new(self.n, self.images().cloned().collect())
                .map(|y| y.is_maximal())
                .unwrap_or(false)
    }

    /// Carets `xA_n` inside the domain whose images are `yA_n` for one
    /// common `y`, listed by `x` in word order.
    pub fn collapsible_carets(&self) -> Vec<Word> {
        let parents: BTreeSet<Word> = self.domain().filter_map(Word::parent).collect();
        parents
            .into_iter()
            .filter(|p| self.caret_image(p).is_some())
            .collect()
    }

    fn caret_image(&self, p: &Word) -> Option<Word> {
        let mut common: Option<Word> = None;
        for c in 0..self.n as u8 {
            let child = p.child(c);
            let i = self.pairs.binary_search_by(|(x, _)| x.cmp(&child)).ok()?;
            let y = &self.pairs[i].1;
            if y.last() != Some(c) {
                return None;
            }
            let base = y.parent().expect("non-empty");
            match &common {
                None => common = Some(base),
                Some(b) if *b == base => {}
                Some(_) => return None,
            }
        }
        common
    }

    /// Replaces the caret at `p` by the single entry `p > y`.
    pub fn collapse_caret(&self, p: &Word) -> Option<TableMap> {
        let y = self.caret_image(p)?;
        let mut pairs: Vec<(Word, Word)> = self
            .pairs
            .iter()
            .filter(|(x, _)| x.parent().as_ref() != Some(p))
            .cloned()
            .collect();
        pairs.push((p.clone(), y));
        Some(TableMap::from_pairs(self.n, pairs))
    }

    /// Collapses carets, first in word order, until none applies.
    pub fn reduce(&self) -> TableMap {
        let mut current = self.clone();
        while let Some(p) = current.collapsible_carets().into_iter().next() {
            current = current.collapse_caret(&p).expect("caret is collapsible");
        }
        current
    }

    pub fn is_reduced(&self) -> bool {
        self.collapsible_carets().is_empty()
    }

    /// Equality of the denoted functions, via reduced forms.
    pub fn equals(&self, other: &TableMap) -> bool {
        self.n == other.n && self.reduce() == other.reduce()
    }

    /// Natural order: `self = other · star(self)`.
    pub fn leq(&self, other: &TableMap) -> bool {
        self.equals(&other.compose(&self.star()))
    }

    /// Wherever the domains overlap the two maps agree.
    pub fn left_compatible(&self, other: &TableMap) -> bool {
        self.pairs.iter().all(|(x, y)| {
            other.pairs.iter().all(|(u, v)| match comparable(x, u) {
                Comparison::Incomparable => true,
                // u = x z: f sends u w to y z w
                Comparison::LeftPrefix | Comparison::Equal => {
                    let z = u.strip_prefix(x).expect("x prefixes u");
                    *v == y.concat(&z)
                }
                // x = u z: g sends x w to v z w
                Comparison::RightPrefix => {
                    let z = x.strip_prefix(u).expect("u prefixes x");
                    *y == v.concat(&z)
                }
            })
        })
    }

    /// Union of two left-compatible maps, reduced.
    pub fn join(&self, other: &TableMap) -> Option<TableMap> {
        if self.n != other.n || !self.left_compatible(other) {
            return None;
        }
        let mut pairs = self.pairs.clone();
        for (u, v) in &other.pairs {
            if self.domain().any(|x| x.is_prefix_of(u)) {
                continue;
            }
            let covered: Vec<Word> = self.domain().filter_map(|x| x.strip_prefix(u)).collect();
            for s in complement_cover(self.n, &covered) {
                pairs.push((u.concat(&s), v.concat(&s)));
            }
        }
        Some(TableMap::from_pairs(self.n, pairs).reduce())
    }

    /// Join of many pairwise left-compatible maps; zero for none.
    pub fn join_all<'a>(n: usize, maps: impl IntoIterator<Item = &'a TableMap>) -> Option<TableMap> {
        maps.into_iter()
            .try_fold(TableMap::zero(n), |acc, f| acc.join(f))
    }
}

/// A prefix code covering exactly the infinite words that avoid every
/// cylinder `zA^ω` for `z` in `code` (itself a prefix code).
fn complement_cover(n: usize, code: &[Word]) -> Vec<Word> {
    if code.is_empty() {
        return vec![Word::empty()];
    }
    if code.iter().any(Word::is_empty) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for c in 0..n as u8 {
        let head = Word::letter(c);
        let sub: Vec<Word> = code.iter().filter_map(|z| z.strip_prefix(&head)).collect();
        out.extend(complement_cover(n, &sub).into_iter().map(|s| head.concat(&s)));
    }
    out
}

impl fmt::Display for TableMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.pairs.iter().map(|(x, y)| format!("{}>{}", x, y)).collect();
        write!(f, "[{}]", items.join(", "))
    }
}
