//! Acceptable sets, the completion `R(S)`, the closure nucleus
//! `A ↦ A^∨` and the companion `Etale(S)` of a finite Boolean inverse
//! monoid, together with the theorems relating them.

mod completion;
mod nucleus;
mod theorems;

pub use completion::{
    completion, judge_extension, rejected_perturbations, universal_extension, Completion,
    UniversalExtension, DEFAULT_CAP,
};
pub use nucleus::{
    check_nucleus, closure_nucleus, quotient_map, reconstruct_projection_pure, NucleusLaw,
    NucleusReport, NucleusViolation, ReconstructionReport, ThetaStarChecks,
};
pub use theorems::{
    extend_hom, fixed_point_check, inv_iso_report, verify_inv_iso, ExtendedHom, FixedPointReport, InvIsoReport,
};

use std::collections::{BTreeSet, HashMap};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::monoid::FiniteRRMonoid;

/// A non-empty, downward closed, pairwise left-compatible set of
/// elements of a host monoid, stored as a bitmask over its indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AcceptableSet(FixedBitSet);

impl AcceptableSet {
    fn empty(size: usize) -> Self {
        AcceptableSet(FixedBitSet::with_capacity(size))
    }

    pub fn contains(&self, a: usize) -> bool {
        self.0.contains(a)
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_subset(&self, other: &AcceptableSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &AcceptableSet) -> AcceptableSet {
        let mut s = self.0.clone();
        s.union_with(&other.0);
        AcceptableSet(s)
    }

    /// Members with no other member strictly above them.
    pub fn maximal_members(&self, m: &FiniteRRMonoid) -> Vec<usize> {
        self.members()
            .filter(|&a| !self.members().any(|b| b != a && m.leq(a, b)))
            .collect()
    }

    /// `{f, g}` from the element names of the maximal members, sorted.
    pub fn render(&self, m: &FiniteRRMonoid) -> String {
        let mut names: Vec<&str> = self
            .maximal_members(m)
            .into_iter()
            .map(|a| m.element_name(a))
            .collect();
        names.sort();
        format!("{{{}}}", names.join(", "))
    }

    /// Checks the defining conditions against `m`.
    pub fn is_acceptable_in(&self, m: &FiniteRRMonoid) -> bool {
        !self.is_empty()
            && self
                .members()
                .all(|a| m.elements().all(|x| !m.leq(x, a) || self.contains(x)))
            && self
                .members()
                .all(|a| self.members().all(|b| m.left_compatible(a, b)))
    }
}

/// Precomputed order, compatibility and join tables of a host monoid.
pub(crate) struct Host<'a> {
    pub m: &'a FiniteRRMonoid,
    down: Vec<AcceptableSet>,
    left_compat: Vec<FixedBitSet>,
    /// `Some(a ∨ b)` for compatible pairs with a join.
    joins: Vec<Vec<Option<usize>>>,
    compat: Vec<FixedBitSet>,
}

impl<'a> Host<'a> {
    pub fn new(m: &'a FiniteRRMonoid) -> Self {
        let n = m.size();
        let down = m
            .elements()
            .map(|a| {
                let mut s = FixedBitSet::with_capacity(n);
                for x in m.down_set(a) {
                    s.insert(x);
                }
                AcceptableSet(s)
            })
            .collect();
        let mut left_compat = vec![FixedBitSet::with_capacity(n); n];
        let mut compat = vec![FixedBitSet::with_capacity(n); n];
        let mut joins = vec![vec![None; n]; n];
        #[allow(clippy::needless_range_loop)]
        for a in 0..n {
            for b in 0..n {
                if m.left_compatible(a, b) {
                    left_compat[a].insert(b);
                }
                if m.compatible(a, b) {
                    compat[a].insert(b);
                    if b >= a {
                        let j = m.join(a, b);
                        joins[a][b] = j;
                        joins[b][a] = j;
                    }
                }
            }
        }
        Host {
            m,
            down,
            left_compat,
            joins,
            compat,
        }
    }

    pub fn down(&self, a: usize) -> &AcceptableSet {
        &self.down[a]
    }

    pub fn left_compatible(&self, a: usize, b: usize) -> bool {
        self.left_compat[a].contains(b)
    }

    pub fn compatible(&self, a: usize, b: usize) -> bool {
        self.compat[a].contains(b)
    }

    fn incompatible_pair(&self, items: &[usize]) -> Option<(usize, usize)> {
        for (i, &a) in items.iter().enumerate() {
            for &b in &items[i + 1..] {
                if !self.left_compatible(a, b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    fn pair_error(&self, (a, b): (usize, usize)) -> Error {
        Error::Precondition(format!(
            "{} and {} are not left-compatible",
            self.m.element_name(a),
            self.m.element_name(b)
        ))
    }

    pub fn down_closure(&self, items: &[usize]) -> Result<AcceptableSet> {
        if items.is_empty() {
            return Err(Error::Precondition("acceptable sets are non-empty".into()));
        }
        if let Some(pair) = self.incompatible_pair(items) {
            return Err(self.pair_error(pair));
        }
        Ok(items
            .iter()
            .fold(AcceptableSet::empty(self.m.size()), |acc, &a| acc.union(&self.down[a])))
    }

    /// Adds joins of compatible pairs until nothing changes.
    pub fn closure(&self, set: &AcceptableSet) -> Result<AcceptableSet> {
        let mut out = set.clone();
        let mut members: Vec<usize> = out.members().collect();
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            let mut j = 0;
            while j < members.len() {
                let b = members[j];
                j += 1;
                if a == b || !self.compatible(a, b) {
                    continue;
                }
                let c = self.joins[a][b].ok_or_else(|| {
                    Error::Structure(format!(
                        "compatible elements {} and {} have no join",
                        self.m.element_name(a),
                        self.m.element_name(b)
                    ))
                })?;
                if !out.contains(c) {
                    out.0.insert(c);
                    members.push(c);
                }
            }
            i += 1;
        }
        Ok(out)
    }

    /// Setwise product `AB`.
    pub fn product(&self, a: &AcceptableSet, b: &AcceptableSet) -> AcceptableSet {
        let mut out = AcceptableSet::empty(self.m.size());
        for x in a.members() {
            for y in b.members() {
                out.0.insert(self.m.mul(x, y));
            }
        }
        out
    }

    /// `A* = {a* : a ∈ A}`.
    pub fn star(&self, a: &AcceptableSet) -> AcceptableSet {
        let mut out = AcceptableSet::empty(self.m.size());
        for x in a.members() {
            out.0.insert(self.m.star(x));
        }
        out
    }

    pub fn is_down_closed(&self, a: &AcceptableSet) -> bool {
        a.members().all(|x| self.down[x].is_subset(a))
    }

    /// Every set reachable from the principal ideals by adjoining one more
    /// principal ideal, closing with `finish` at each step.
    pub fn enumerate(
        &self,
        cap: usize,
        finish: impl Fn(AcceptableSet) -> Result<AcceptableSet>,
    ) -> Result<Vec<AcceptableSet>> {
        let mut seen: BTreeSet<AcceptableSet> = BTreeSet::new();
        let mut stack = Vec::new();
        for a in self.m.elements() {
            let s = finish(self.down[a].clone())?;
            if seen.insert(s.clone()) {
                stack.push(s);
            }
        }
        while let Some(s) = stack.pop() {
            let maxima = s.maximal_members(self.m);
            for a in self.m.elements() {
                if s.contains(a) || !maxima.iter().all(|&b| self.left_compatible(a, b)) {
                    continue;
                }
                let t = finish(s.union(&self.down[a]))?;
                if seen.insert(t.clone()) {
                    if seen.len() > cap {
                        return Err(Error::Resource(format!(
                            "more than {} acceptable sets; raise the cap to continue",
                            cap
                        )));
                    }
                    stack.push(t);
                }
            }
        }
        let mut sets: Vec<AcceptableSet> = seen.into_iter().collect();
        sets.sort_by_key(|s| (s.len(), s.members().collect::<Vec<_>>()));
        Ok(sets)
    }
}

/// Smallest acceptable set containing `items`.
pub fn down_closure(m: &FiniteRRMonoid, items: &[usize]) -> Result<AcceptableSet> {
    Host::new(m).down_closure(items)
}

/// `A^∨`: closure of an acceptable set under joins of compatible pairs.
pub fn nucleus_closure(m: &FiniteRRMonoid, set: &AcceptableSet) -> Result<AcceptableSet> {
    Host::new(m).closure(set)
}

/// The companion monoid with the closed sets behind each element.
#[derive(Debug, Clone)]
pub struct Companion {
    pub monoid: FiniteRRMonoid,
    /// `sets[i]` is the closed acceptable set of element `i`.
    pub sets: Vec<AcceptableSet>,
    /// `iota[a]` is the element `a^↓`.
    pub iota: Vec<usize>,
}

impl Companion {
    pub fn index_of(&self, set: &AcceptableSet) -> Option<usize> {
        self.sets.iter().position(|s| s == set)
    }
}

/// Assembles a monoid over `sets` from set-level operations.
pub(crate) fn build_monoid(
    name: String,
    names: Vec<String>,
    sets: &[AcceptableSet],
    mul: impl Fn(&AcceptableSet, &AcceptableSet) -> Result<AcceptableSet>,
    star: impl Fn(&AcceptableSet) -> Result<AcceptableSet>,
    one: &AcceptableSet,
    zero: Option<&AcceptableSet>,
) -> Result<FiniteRRMonoid> {
    let index: HashMap<&AcceptableSet, usize> = sets.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let lookup = |s: &AcceptableSet, what: &str| {
        index.get(s).copied().ok_or_else(|| {
            Error::Structure(format!("{} leaves the enumerated family of sets", what))
        })
    };
    let mut table = Vec::with_capacity(sets.len());
    for a in sets {
        let row = sets
            .iter()
            .map(|b| lookup(&mul(a, b)?, "product"))
            .collect::<Result<Vec<_>>>()?;
        table.push(row);
    }
    let star_table = sets
        .iter()
        .map(|a| lookup(&star(a)?, "star"))
        .collect::<Result<Vec<_>>>()?;
    let one = lookup(one, "identity")?;
    let zero = zero.map(|z| lookup(z, "zero")).transpose()?;
    FiniteRRMonoid::from_parts(name, names, table, star_table, one, zero)
}

/// `Etale(M)`: the closed acceptable sets of a finite Boolean inverse
/// monoid under `A·B = (AB)^∨` and `A° = (A*)^∨`.
pub fn etale_of(m: &FiniteRRMonoid) -> Result<Companion> {
    etale_of_capped(m, DEFAULT_CAP)
}

/// [`etale_of`] with an explicit bound on the number of closed sets.
pub fn etale_of_capped(m: &FiniteRRMonoid, cap: usize) -> Result<Companion> {
    let class = m.classify();
    if !(class.is_inverse && class.is_boolean) {
        return Err(Error::Precondition(format!(
            "{} is not a Boolean inverse monoid",
            m.name()
        )));
    }
    let host = Host::new(m);
    let sets = host.enumerate(cap, |s| host.closure(&s))?;
    let names = sets.iter().map(|s| s.render(m)).collect();
    let one = host.down(m.one()).clone();
    let zero = m.zero().map(|z| host.down(z).clone());
    let monoid = build_monoid(
        format!("Etale({})", m.name()),
        names,
        &sets,
        |a, b| host.closure(&host.product(a, b)),
        |a| host.closure(&host.star(a)),
        &one,
        zero.as_ref(),
    )?;
    let iota = m
        .elements()
        .map(|a| sets.iter().position(|s| s == host.down(a)).expect("principal ideals are closed"))
        .collect();
    Ok(Companion { monoid, sets, iota })
}
