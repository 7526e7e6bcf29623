//! The polycyclic monoid `P_n`: basic maps `y x⁻¹` (acting as `xw ↦ yw`)
//! together with zero.

use std::fmt;

use super::{comparable, Comparison, Word};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasicMap {
    Zero,
    /// `y x⁻¹`, sending `xw` to `yw`.
    Map { y: Word, x: Word },
}

impl BasicMap {
    pub fn new(y: Word, x: Word) -> Self {
        BasicMap::Map { y, x }
    }

    pub fn identity() -> Self {
        BasicMap::new(Word::empty(), Word::empty())
    }

    /// `x x⁻¹`.
    pub fn idempotent(x: Word) -> Self {
        BasicMap::new(x.clone(), x)
    }

    /// Parses `"x>y"` (the map `xw ↦ yw`) or `"0"`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        if text == "0" {
            return Ok(BasicMap::Zero);
        }
        let (x, y) = text
            .split_once('>')
            .ok_or_else(|| Error::parse("basic-map", format!("`{}` is not of the form x>y", text)))?;
        Ok(BasicMap::new(Word::parse(y, n)?, Word::parse(x, n)?))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, BasicMap::Zero)
    }

    /// Product `self · other`: apply `other` first.
    pub fn mul(&self, other: &BasicMap) -> BasicMap {
        let (BasicMap::Map { y, x }, BasicMap::Map { y: v, x: u }) = (self, other) else {
            return BasicMap::Zero;
        };
        match comparable(x, v) {
            Comparison::Incomparable => BasicMap::Zero,
            // v = xz
            Comparison::LeftPrefix | Comparison::Equal => {
                let z = v.strip_prefix(x).expect("x prefixes v");
                BasicMap::new(y.concat(&z), u.clone())
            }
            // x = vz
            Comparison::RightPrefix => {
                let z = x.strip_prefix(v).expect("v prefixes x");
                BasicMap::new(y.clone(), u.concat(&z))
            }
        }
    }

    /// `x x⁻¹` for `y x⁻¹`.
    pub fn star(&self) -> BasicMap {
        match self {
            BasicMap::Zero => BasicMap::Zero,
            BasicMap::Map { x, .. } => BasicMap::idempotent(x.clone()),
        }
    }

    pub fn inverse(&self) -> BasicMap {
        match self {
            BasicMap::Zero => BasicMap::Zero,
            BasicMap::Map { y, x } => BasicMap::new(x.clone(), y.clone()),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        match self {
            BasicMap::Zero => true,
            BasicMap::Map { y, x } => y == x,
        }
    }

    /// The `p` with `(y, x) = (v p, u p)` when `self ≤ other`. Zero sits
    /// below everything with `p` undefined, reported as `Some(None)`.
    pub fn leq_witness(&self, other: &BasicMap) -> Option<Option<Word>> {
        match (self, other) {
            (BasicMap::Zero, _) => Some(None),
            (_, BasicMap::Zero) => None,
            (BasicMap::Map { y, x }, BasicMap::Map { y: v, x: u }) => {
                let p = y.strip_prefix(v)?;
                (u.concat(&p) == *x).then_some(Some(p))
            }
        }
    }

    pub fn leq(&self, other: &BasicMap) -> bool {
        self.leq_witness(other).is_some()
    }

    /// `self · other⁻¹` is an idempotent (zero included).
    pub fn left_compatible(&self, other: &BasicMap) -> bool {
        self.mul(&other.inverse()).is_idempotent()
    }
}

impl fmt::Display for BasicMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasicMap::Zero => f.write_str("0"),
            BasicMap::Map { y, x } => write!(f, "{}>{}", x, y),
        }
    }
}

pub fn pn_mul(f: &BasicMap, g: &BasicMap) -> BasicMap {
    f.mul(g)
}

pub fn pn_leq(f: &BasicMap, g: &BasicMap) -> bool {
    f.leq(g)
}

pub fn pn_star(f: &BasicMap) -> BasicMap {
    f.star()
}

pub fn pn_inverse(f: &BasicMap) -> BasicMap {
    f.inverse()
}

pub fn pn_left_compatible(f: &BasicMap, g: &BasicMap) -> bool {
    f.left_compatible(g)
}

/// The idempotents `x x⁻¹` for `x` in `words` are pairwise orthogonal.
pub fn orthogonal_set_check(words: &[Word]) -> bool {
    let idempotents: Vec<BasicMap> = words.iter().cloned().map(BasicMap::idempotent).collect();
    (0..idempotents.len()).all(|i| {
        (i + 1..idempotents.len()).all(|j| idempotents[i].mul(&idempotents[j]).is_zero())
    })
}
