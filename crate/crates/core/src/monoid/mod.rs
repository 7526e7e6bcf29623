//! Finite right restriction monoids given by explicit tables.
//!
//! Elements are dense indices `0..size`; names are display metadata only.
//! Products are read as composition of partial functions, so `mul(a, b)`
//! is "apply `b`, then `a`".

mod axioms;
mod cayley;
mod classify;
mod generators;
mod io;
mod iso;
mod order;

pub use axioms::{Axiom, AxiomReport, Violation};
pub use cayley::{cayley_embed, CayleyEmbedding, PartialMap};
pub use classify::Classification;
pub use generators::{build_boolean_algebra, build_i, build_pt, two_element, MAX_GENERATOR_DEGREE};
pub use iso::{find_isomorphism, is_isomorphism, DEFAULT_ISO_BOUND};

use crate::error::{Error, Result};

/// A monoid with a star operation, stored as a multiplication table.
///
/// Construction only validates the shape of the tables; whether the
/// result is a right restriction monoid is decided by
/// [`FiniteRRMonoid::check_axioms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRRMonoid {
    name: String,
    elements: Vec<String>,
    mul: Vec<usize>,
    star: Vec<usize>,
    one: usize,
    zero: Option<usize>,
}

impl FiniteRRMonoid {
    /// Builds a candidate monoid from its tables, rejecting ragged rows
    /// and out-of-range indices.
    pub fn from_parts(
        name: impl Into<String>,
        elements: Vec<String>,
        mul: Vec<Vec<usize>>,
        star: Vec<usize>,
        one: usize,
        zero: Option<usize>,
    ) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::Structure("monoid has no elements".into()));
        }
        if mul.len() != n {
            return Err(Error::Structure(format!(
                "mul has {} rows, expected {}",
                mul.len(),
                n
            )));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in mul.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Structure(format!(
                    "mul row {} has {} columns, expected {}",
                    i,
                    row.len(),
                    n
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::Structure(format!(
                        "mul[{}][{}] = {} is out of range",
                        i, j, v
                    )));
                }
                flat.push(v);
            }
        }
        if star.len() != n {
            return Err(Error::Structure(format!(
                "star has {} entries, expected {}",
                star.len(),
                n
            )));
        }
        if let Some((i, &v)) = star.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(Error::Structure(format!("star[{}] = {} is out of range", i, v)));
        }
        if one >= n {
            return Err(Error::Structure(format!("one = {} is out of range", one)));
        }
        if let Some(z) = zero {
            if z >= n {
                return Err(Error::Structure(format!("zero = {} is out of range", z)));
            }
        }
        Ok(FiniteRRMonoid {
            name: name.into(),
            elements,
            mul: flat,
            star,
            one,
            zero,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.size()
    }

    pub fn element_name(&self, a: usize) -> &str {
        &self.elements[a]
    }

    pub fn element_names(&self) -> &[String] {
        &self.elements
    }

    /// Index of the element with the given display name.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size() + b]
    }

    #[inline]
    pub fn star(&self, a: usize) -> usize {
        self.star[a]
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn mul_row(&self, a: usize) -> &[usize] {
        let n = self.size();
        &self.mul[a * n..(a + 1) * n]
    }

    pub fn star_table(&self) -> &[usize] {
        &self.star
    }

    /// Product of a sequence, left to right.
    pub fn product(&self, items: &[usize]) -> usize {
        items.iter().fold(self.one, |acc, &x| self.mul(acc, x))
    }

    pub fn is_projection(&self, a: usize) -> bool {
        self.star(a) == a
    }

    pub fn is_total(&self, a: usize) -> bool {
        self.star(a) == self.one
    }

    pub fn projections(&self) -> Vec<usize> {
        self.elements().filter(|&a| self.is_projection(a)).collect()
    }

    pub fn total_elements(&self) -> Vec<usize> {
        self.elements().filter(|&a| self.is_total(a)).collect()
    }

    /// Returns a copy with one multiplication entry replaced.
    pub fn with_mul_entry(&self, a: usize, b: usize, value: usize) -> Result<Self> {
        let n = self.size();
        if a >= n || b >= n || value >= n {
            return Err(Error::Structure(format!(
                "mutation ({}, {}) -> {} is out of range",
                a, b, value
            )));
        }
        let mut out = self.clone();
        out.mul[a * n + b] = value;
        Ok(out)
    }

    /// Returns a copy with one star entry replaced.
    pub fn with_star_entry(&self, a: usize, value: usize) -> Result<Self> {
        let n = self.size();
        if a >= n || value >= n {
            return Err(Error::Structure(format!(
                "mutation star({}) -> {} is out of range",
                a, value
            )));
        }
        let mut out = self.clone();
        out.star[a] = value;
        Ok(out)
    }

    /// The submonoid on `members` (which must be closed under `mul` and
    /// `star` and contain `one`), re-indexed in the order given.
    pub fn submonoid(&self, name: impl Into<String>, members: &[usize]) -> Result<Self> {
        let mut index = vec![usize::MAX; self.size()];
        for (i, &m) in members.iter().enumerate() {
            index[m] = i;
        }
        let lookup = |x: usize| -> Result<usize> {
            match index.get(x) {
                Some(&i) if i != usize::MAX => Ok(i),
                _ => Err(Error::Precondition(format!(
                    "subset is not closed: {} is missing",
                    self.element_name(x)
                ))),
            }
        };
        let mut mul = Vec::with_capacity(members.len());
        for &a in members {
            let row = members
                .iter()
                .map(|&b| lookup(self.mul(a, b)))
                .collect::<Result<Vec<_>>>()?;
            mul.push(row);
        }
        let star = members
            .iter()
            .map(|&a| lookup(self.star(a)))
            .collect::<Result<Vec<_>>>()?;
        let one = lookup(self.one)?;
        let zero = match self.zero {
            Some(z) if index[z] != usize::MAX => Some(index[z]),
            _ => None,
        };
        let names = members
            .iter()
            .map(|&m| self.elements[m].clone())
            .collect();
        FiniteRRMonoid::from_parts(name, names, mul, star, one, zero)
    }
}
