//! Natural partial order, compatibility, meets and joins, partial units.

use super::FiniteRRMonoid;
use crate::error::{Error, Result};

impl FiniteRRMonoid {
    /// `a <= b` iff `a = b a*`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.mul(b, self.star(a)) == a
    }

    /// `a b* = b a*`.
    pub fn left_compatible(&self, a: usize, b: usize) -> bool {
        self.mul(a, self.star(b)) == self.mul(b, self.star(a))
    }

    /// `a* b* = 0`; requires a zero.
    pub fn left_orthogonal(&self, a: usize, b: usize) -> bool {
        Some(self.mul(self.star(a), self.star(b))) == self.zero()
    }

    /// Compatibility in the inverse-semigroup sense: `a ~l b` and
    /// `a^-1 ~l b^-1`. Elements without an inverse are never compatible.
    pub fn compatible(&self, a: usize, b: usize) -> bool {
        if !self.left_compatible(a, b) {
            return false;
        }
        match (self.inverse_of(a), self.inverse_of(b)) {
            (Some(ai), Some(bi)) => self.left_compatible(ai, bi),
            _ => false,
        }
    }

    /// The meet `a ∧ b = a b*` of a left-compatible pair.
    pub fn meet_of_compatible(&self, a: usize, b: usize) -> Result<usize> {
        if !self.left_compatible(a, b) {
            return Err(Error::Precondition(format!(
                "{} and {} are not left-compatible",
                self.element_name(a),
                self.element_name(b)
            )));
        }
        Ok(self.mul(a, self.star(b)))
    }

    pub fn down_set(&self, a: usize) -> Vec<usize> {
        self.elements().filter(|&x| self.leq(x, a)).collect()
    }

    pub fn up_set(&self, a: usize) -> Vec<usize> {
        self.elements().filter(|&x| self.leq(a, x)).collect()
    }

    /// Least upper bound of `items` in the natural partial order, found
    /// by exhaustive search. `None` when the set has no upper bound or
    /// no least one. The empty set joins to the zero, when present.
    pub fn join_all(&self, items: &[usize]) -> Option<usize> {
        if items.is_empty() {
            return self.zero();
        }
        let upper: Vec<usize> = self
            .elements()
            .filter(|&c| items.iter().all(|&a| self.leq(a, c)))
            .collect();
        upper
            .iter()
            .copied()
            .find(|&u| upper.iter().all(|&v| self.leq(u, v)))
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.join_all(&[a, b])
    }

    /// The element `b` with `b a = a*` and `a b = b*`, if any. Unique when
    /// it exists.
    pub fn inverse_of(&self, a: usize) -> Option<usize> {
        let sa = self.star(a);
        self.elements()
            .find(|&b| self.mul(b, a) == sa && self.mul(a, b) == self.star(b))
    }

    pub fn is_partial_unit(&self, a: usize) -> bool {
        self.inverse_of(a).is_some()
    }

    /// All partial units, in index order.
    pub fn partial_units(&self) -> Vec<usize> {
        self.elements().filter(|&a| self.is_partial_unit(a)).collect()
    }

    /// Inverse for every element, `None` where there is none.
    pub fn inverse_table(&self) -> Vec<Option<usize>> {
        self.elements().map(|a| self.inverse_of(a)).collect()
    }

    /// Units: partial units whose star and whose inverse's star are `one`.
    pub fn units(&self) -> Vec<usize> {
        self.elements()
            .filter(|&a| {
                self.is_total(a) && self.inverse_of(a).is_some_and(|b| self.is_total(b))
            })
            .collect()
    }

    /// The complement of a projection `e`: the projection `f` with
    /// `ef = 0` and `e ∨ f = 1`.
    pub fn complement(&self, e: usize) -> Option<usize> {
        let zero = self.zero()?;
        self.projections().into_iter().find(|&f| {
            self.mul(e, f) == zero && self.join(e, f) == Some(self.one())
        })
    }

    /// Rewrites a left-compatible family as a left-orthogonal family with
    /// the same join, each new element below the old one. Requires a
    /// Boolean monoid.
    pub fn left_orthogonalize(&self, items: &[usize]) -> Result<Vec<usize>> {
        let zero = self
            .zero()
            .ok_or_else(|| Error::Precondition("monoid has no zero".into()))?;
        for (i, &a) in items.iter().enumerate() {
            for &b in &items[i + 1..] {
                if !self.left_compatible(a, b) {
                    return Err(Error::Precondition(format!(
                        "{} and {} are not left-compatible",
                        self.element_name(a),
                        self.element_name(b)
                    )));
                }
            }
        }
        let target = self.join_all(items).ok_or_else(|| {
            Error::Precondition("the family has no join".into())
        })?;
        let mut out = Vec::with_capacity(items.len());
        // `covered` is the join of the stars of the elements produced so far.
        let mut covered = zero;
        for &a in items {
            let rest = self.complement(covered).ok_or_else(|| {
                Error::Precondition(format!(
                    "projection {} has no complement",
                    self.element_name(covered)
                ))
            })?;
            let b = self.mul(a, rest);
            covered = self.join(covered, self.star(b)).ok_or_else(|| {
                Error::Precondition("projections lack a join".into())
            })?;
            out.push(b);
        }
        if self.join_all(&out) != Some(target) {
            return Err(Error::Precondition(
                "monoid is not Boolean: orthogonalized join differs".into(),
            ));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use crate::monoid::{build_i, build_pt, two_element};

    #[test]
    fn leq_examples() {
        let pt = build_pt(2).unwrap();
        let f = pt.index_of("21").unwrap();
        let g = pt.index_of("2-").unwrap();
        assert!(pt.leq(f, f));
        assert!(pt.leq(g, f));
        assert!(!pt.leq(f, g));
        let e = pt.index_of("1-").unwrap();
        assert!(!pt.leq(pt.one(), e));
    }

    #[test]
    fn compatibility_examples() {
        let i2 = build_i(2).unwrap();
        let a = i2.index_of("2-").unwrap();
        let b = i2.index_of("-1").unwrap();
        assert!(i2.left_compatible(a, a));
        assert!(i2.left_compatible(a, b));

        let pt = build_pt(2).unwrap();
        let f = pt.index_of("11").unwrap();
        let g = pt.index_of("12").unwrap();
        assert!(!pt.left_compatible(f, g));
    }

    #[test]
    fn meet_examples() {
        let pt = build_pt(2).unwrap();
        let f = pt.index_of("21").unwrap();
        let r = pt.index_of("2-").unwrap();
        assert_eq!(pt.meet_of_compatible(f, f).unwrap(), f);
        assert_eq!(pt.meet_of_compatible(f, r).unwrap(), r);
        assert_eq!(pt.star(r), pt.mul(pt.star(f), pt.star(r)));

        let i2 = build_i(2).unwrap();
        let e1 = i2.index_of("1-").unwrap();
        let e2 = i2.index_of("-2").unwrap();
        assert_eq!(i2.meet_of_compatible(e1, e2).unwrap(), i2.zero().unwrap());

        let f = pt.index_of("11").unwrap();
        let g = pt.index_of("12").unwrap();
        assert!(pt.meet_of_compatible(f, g).is_err());
    }

    #[test]
    fn partial_units_of_pt2_are_i2() {
        let pt = build_pt(2).unwrap();
        let units: Vec<&str> = pt
            .partial_units()
            .into_iter()
            .map(|a| pt.element_name(a))
            .collect();
        assert_eq!(units, ["--", "1-", "12", "2-", "21", "-1", "-2"]);
        for e in pt.projections() {
            assert_eq!(pt.inverse_of(e), Some(e));
        }
        let i3 = build_i(3).unwrap();
        assert_eq!(i3.partial_units().len(), 34);
    }

    #[test]
    fn orthogonalize_examples() {
        let pt = build_pt(2).unwrap();
        let zero = pt.zero().unwrap();
        let p = pt.index_of("1-").unwrap();
        assert_eq!(pt.left_orthogonalize(&[p]).unwrap(), vec![p]);
        assert_eq!(pt.left_orthogonalize(&[p, p]).unwrap(), vec![p, zero]);
        let f = pt.index_of("21").unwrap();
        let g = pt.index_of("2-").unwrap();
        assert_eq!(pt.left_orthogonalize(&[f, g]).unwrap(), vec![f, zero]);

        let h = pt.index_of("11").unwrap();
        assert!(pt.left_orthogonalize(&[f, h]).is_err());
    }

    #[test]
    fn joins_in_two_element() {
        let m = two_element();
        assert_eq!(m.join(0, 1), Some(1));
        assert_eq!(m.join_all(&[]), Some(0));
    }
}
