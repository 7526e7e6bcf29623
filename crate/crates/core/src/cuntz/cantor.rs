//! The Cantor algebra structure on the total elements of `H_n`.
//!
//! `alpha(f, i)` is `w ↦ f(a_i w)` and `lambda_op(f_1, ..., f_n)` is
//! `a_i w ↦ f_i(w)`.

use std::fmt;

use rand::Rng;
use serde::Serialize;

use super::random::random_total;
use super::TableMap;
use crate::error::{Error, Result};
use crate::words::{PrefixCode, Word};

impl TableMap {
    fn require_total(&self, what: &str) -> Result<()> {
        if self.is_total() {
            Ok(())
        } else {
            Err(Error::Precondition(format!("{} needs a total element, got {}", what, self)))
        }
    }

    /// `w ↦ f(a_i w)`, reduced. `i` counts letters from zero.
    pub fn alpha(&self, i: u8) -> Result<TableMap> {
        self.require_total("alpha")?;
        if i as usize >= self.n {
            return Err(Error::Precondition(format!(
                "letter index {} outside a {}-letter alphabet",
                i, self.n
            )));
        }
        let shift = TableMap {
            n: self.n,
            pairs: vec![(Word::empty(), Word::letter(i))],
        };
        Ok(self.compose(&shift).reduce())
    }

    /// `alpha` along every letter of `u`, left to right.
    pub fn alpha_word(&self, u: &Word) -> Result<TableMap> {
        u.letters().iter().try_fold(self.clone(), |f, &c| f.alpha(c))
    }

    /// `a_i w ↦ f_i(w)`, reduced.
    pub fn lambda_op(parts: &[TableMap]) -> Result<TableMap> {
        let n = parts
            .first()
            .map(TableMap::alphabet)
            .ok_or_else(|| Error::Precondition("lambda needs arguments".into()))?;
        if parts.len() != n {
            return Err(Error::Structure(format!(
                "lambda over {} letters takes {} arguments, got {}",
                n,
                n,
                parts.len()
            )));
        }
        let mut pairs = Vec::new();
        for (i, f) in parts.iter().enumerate() {
            if f.n != n {
                return Err(Error::Precondition("lambda arguments over different alphabets".into()));
            }
            f.require_total("lambda")?;
            let unshift = TableMap {
                n,
                pairs: vec![(Word::letter(i as u8), Word::empty())],
            };
            // domains a_i X_i are disjoint, so the join is the union
            pairs.extend(f.compose(&unshift).pairs);
        }
        Ok(TableMap::from_pairs(n, pairs).reduce())
    }
}

/// Terms over one generator `x` in the Cantor-algebra signature.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CantorTerm {
    Generator,
    /// `base.u`: apply `alpha` along the letters of `u`.
    Alpha(Box<CantorTerm>, Word),
    Lambda(Vec<CantorTerm>),
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    n: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn expect(&mut self, want: &[char]) -> Result<char> {
        self.skip_ws();
        match self.chars.next() {
            Some(c) if want.contains(&c) => Ok(c),
            Some(c) => Err(Error::parse("term", format!("expected one of {:?}, found `{}`", want, c))),
            None => Err(Error::parse("term", format!("expected one of {:?}, found end of input", want))),
        }
    }

    fn term(&mut self) -> Result<CantorTerm> {
        self.skip_ws();
        let mut t = match self.chars.peek() {
            Some('x') => {
                self.chars.next();
                CantorTerm::Generator
            }
            Some('(') => {
                self.chars.next();
                let mut children = vec![self.term()?];
                while self.expect(&[',', ')'])? == ',' {
                    children.push(self.term()?);
                }
                self.expect(&['L', 'λ'])?;
                if children.len() != self.n {
                    return Err(Error::Structure(format!(
                        "lambda over {} letters takes {} arguments, got {}",
                        self.n,
                        self.n,
                        children.len()
                    )));
                }
                CantorTerm::Lambda(children)
            }
            Some(&c) => return Err(Error::parse("term", format!("unexpected `{}`", c))),
            None => return Err(Error::parse("term", "unexpected end of input")),
        };
        loop {
            self.skip_ws();
            if self.chars.peek() != Some(&'.') {
                return Ok(t);
            }
            self.chars.next();
            let mut word = String::new();
            while let Some(&c) = self.chars.peek() {
                if c.is_ascii_lowercase() && c != 'x' || c == '~' {
                    word.push(c);
                    self.chars.next();
                } else {
                    break;
                }
            }
            t = CantorTerm::Alpha(Box::new(t), Word::parse(&word, self.n)?);
        }
    }
}

impl CantorTerm {
    /// Parses `x`, `TERM.WORD` and `(TERM, ..., TERM)L` (`λ` also accepted).
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut p = Parser {
            chars: text.chars().peekable(),
            n,
        };
        let t = p.term()?;
        p.skip_ws();
        if let Some(c) = p.chars.next() {
            return Err(Error::parse("term", format!("trailing input at `{}`", c)));
        }
        Ok(t)
    }

    pub fn eval(&self, n: usize) -> Result<TableMap> {
        match self {
            CantorTerm::Generator => Ok(TableMap::identity(n)),
            CantorTerm::Alpha(base, u) => base.eval(n)?.alpha_word(u),
            CantorTerm::Lambda(children) => {
                if children.len() != n {
                    return Err(Error::Structure(format!(
                        "lambda over {} letters takes {} arguments, got {}",
                        n,
                        n,
                        children.len()
                    )));
                }
                let parts = children.iter().map(|c| c.eval(n)).collect::<Result<Vec<_>>>()?;
                TableMap::lambda_op(&parts)
            }
        }
    }

    /// A term evaluating to `f`: `x.y` for `[~>y]`, otherwise a lambda of
    /// the terms for `alpha(f, i)`.
    pub fn term_for(f: &TableMap) -> Result<CantorTerm> {
        f.require_total("term_for")?;
        if let [(x, y)] = f.pairs() {
            if x.is_empty() {
                return Ok(if y.is_empty() {
                    CantorTerm::Generator
                } else {
                    CantorTerm::Alpha(Box::new(CantorTerm::Generator), y.clone())
                });
            }
        }
        let children = (0..f.alphabet() as u8)
            .map(|i| CantorTerm::term_for(&f.alpha(i)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(CantorTerm::Lambda(children))
    }

    /// The maximal prefix code of the tree of lambda nodes, with each
    /// innermost lambda (all arguments non-lambda) counted as a leaf.
    pub fn skeleton_code(&self, n: usize) -> Result<PrefixCode> {
        fn walk(t: &CantorTerm, path: Word, out: &mut Vec<Word>) {
            match t {
                CantorTerm::Lambda(children)
                    if children.iter().any(|c| matches!(c, CantorTerm::Lambda(_))) =>
                {
                    for (i, c) in children.iter().enumerate() {
                        walk(c, path.child(i as u8), out);
                    }
                }
                _ => out.push(path),
            }
        }
        let mut words = Vec::new();
        walk(self, Word::empty(), &mut words);
        PrefixCode::new(n, words)
    }
}

impl fmt::Display for CantorTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CantorTerm::Generator => f.write_str("x"),
            CantorTerm::Alpha(base, u) => write!(f, "{}.{}", base, u),
            CantorTerm::Lambda(children) => {
                f.write_str("(")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{}", c)?;
                }
                f.write_str(")L")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EndoReport {
    pub samples: usize,
    pub failures: usize,
    /// Description of the first failing sample.
    pub first_failure: Option<String>,
}

impl EndoReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Checks on random total samples that `θ(f) = g ∘ f` commutes with every
/// `alpha` and with `lambda_op`. `max_len` bounds sample word lengths.
pub fn endo_check<R: Rng>(
    g: &TableMap,
    samples: usize,
    max_len: usize,
    rng: &mut R,
) -> Result<EndoReport> {
    g.require_total("endo_check")?;
    let n = g.alphabet();
    let theta = |f: &TableMap| g.compose(f).reduce();
    let mut failures = 0;
    let mut first_failure = None;
    for _ in 0..samples {
        let f = random_total(rng, n, max_len);
        let mut bad: Option<String> = None;
        for i in 0..n as u8 {
            if !theta(&f.alpha(i)?).equals(&theta(&f).alpha(i)?) {
                bad.get_or_insert_with(|| format!("alpha_{} on {}", i, f));
            }
        }
        let parts: Vec<TableMap> = (0..n).map(|_| random_total(rng, n, max_len)).collect();
        let lhs = theta(&TableMap::lambda_op(&parts)?);
        let rhs = TableMap::lambda_op(&parts.iter().map(theta).collect::<Vec<_>>())?;
        if !lhs.equals(&rhs) {
            let shown: Vec<String> = parts.iter().map(TableMap::to_string).collect();
            bad.get_or_insert_with(|| format!("lambda on ({})", shown.join(", ")));
        }
        if let Some(b) = bad {
            failures += 1;
            first_failure.get_or_insert(b);
        }
    }
    Ok(EndoReport {
        samples,
        failures,
        first_failure,
    })
}

/// The total element `[~ > x_1]` for the first word `x_1` of `code`; its
/// image lies inside `x_1 A^ω`, so restricting it to the domain of `code`
/// loses nothing.
pub fn zero_simplifying_witness(code: &PrefixCode) -> Result<TableMap> {
    let first = code
        .words()
        .first()
        .ok_or_else(|| Error::Precondition("the prefix code must be non-empty".into()))?;
    TableMap::make(code.alphabet(), vec![(Word::empty(), first.clone())])
}
