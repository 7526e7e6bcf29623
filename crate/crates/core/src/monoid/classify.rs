use serde::Serialize;

use super::FiniteRRMonoid;

/// Structural flags of a finite right restriction monoid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub is_inverse: bool,
    pub is_distributive: bool,
    pub is_boolean: bool,
    pub is_etale: bool,
    /// `None` when the monoid has no zero: additive ideals need one.
    pub is_zero_simplifying: Option<bool>,
    pub is_fundamental: bool,
    pub projections: usize,
    pub partial_units: usize,
    pub total_elements: usize,
}

impl FiniteRRMonoid {
    /// Every left-compatible pair has a join, and multiplication on the
    /// right distributes over it. Inverse monoids are judged by
    /// compatible pairs instead.
    pub fn is_distributive(&self) -> bool {
        let n = self.size();
        let inverse = self.partial_units().len() == n;
        for a in 0..n {
            for b in a + 1..n {
                let related = if inverse {
                    self.compatible(a, b)
                } else {
                    self.left_compatible(a, b)
                };
                if !related {
                    continue;
                }
                let Some(j) = self.join(a, b) else {
                    return false;
                };
                for c in 0..n {
                    if self.join(self.mul(a, c), self.mul(b, c)) != Some(self.mul(j, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Projections form a Boolean algebra: a zero exists and every
    /// principal projection ideal is complemented.
    fn projections_boolean(&self) -> bool {
        let Some(zero) = self.zero() else {
            return false;
        };
        let projections = self.projections();
        projections.iter().all(|&f| {
            projections
                .iter()
                .filter(|&&e| self.leq(e, f))
                .all(|&e| {
                    projections.iter().any(|&c| {
                        self.leq(c, f) && self.mul(e, c) == zero && self.join(e, c) == Some(f)
                    })
                })
        })
    }

    /// Every element is the join of the partial units below it.
    fn joins_of_partial_units(&self, units: &[usize]) -> bool {
        self.elements().all(|a| {
            let below: Vec<usize> = units.iter().copied().filter(|&u| self.leq(u, a)).collect();
            self.join_all(&below) == Some(a)
        })
    }

    /// Additive ideal of the partial units generated by `seed`: closed
    /// under two-sided multiplication by partial units and compatible
    /// binary joins.
    fn additive_ideal(&self, units: &[usize], seed: usize) -> Vec<bool> {
        let mut member = vec![false; self.size()];
        let mut queue = vec![seed];
        member[seed] = true;
        let mut found = vec![seed];
        while let Some(x) = queue.pop() {
            let mut fresh = Vec::new();
            for &s in units {
                for &t in units {
                    fresh.push(self.mul(self.mul(s, x), t));
                }
            }
            for &y in &found {
                if self.compatible(x, y) {
                    if let Some(j) = self.join(x, y) {
                        fresh.push(j);
                    }
                }
            }
            for y in fresh {
                if !member[y] {
                    member[y] = true;
                    found.push(y);
                    queue.push(y);
                }
            }
        }
        member
    }

    fn zero_simplifying(&self, units: &[usize]) -> Option<bool> {
        let zero = self.zero()?;
        Some(units.iter().filter(|&&a| a != zero).all(|&a| {
            let ideal = self.additive_ideal(units, a);
            units.iter().all(|&u| ideal[u])
        }))
    }

    /// The action `e ↦ (eg)*` of units on projections is faithful.
    fn fundamental(&self) -> bool {
        let projections = self.projections();
        self.units().into_iter().all(|g| {
            g == self.one()
                || projections
                    .iter()
                    .any(|&e| self.star(self.mul(e, g)) != e)
        })
    }

    /// Computes every flag of [`Classification`]. The monoid is assumed
    /// to pass [`FiniteRRMonoid::check_axioms`].
    pub fn classify(&self) -> Classification {
        let units = self.partial_units();
        let is_inverse = units.len() == self.size();
        let is_distributive = self.is_distributive();
        let is_boolean = is_distributive && self.projections_boolean();
        let is_etale = is_boolean && self.joins_of_partial_units(&units);
        Classification {
            is_inverse,
            is_distributive,
            is_boolean,
            is_etale,
            is_zero_simplifying: self.zero_simplifying(&units),
            is_fundamental: self.fundamental(),
            projections: self.projections().len(),
            partial_units: units.len(),
            total_elements: self.total_elements().len(),
        }
    }
}
