use rand::Rng;
use serde::Serialize;

use super::{build_monoid, AcceptableSet, Host};
use crate::error::{Error, Result};
use crate::monoid::FiniteRRMonoid;

/// Default bound on the number of acceptable sets enumerated.
pub const DEFAULT_CAP: usize = 4096;

/// `R(M)` with the acceptable set behind each element.
#[derive(Debug, Clone)]
pub struct Completion {
    pub monoid: FiniteRRMonoid,
    pub sets: Vec<AcceptableSet>,
    /// `iota[a]` is the element `a^↓`.
    pub iota: Vec<usize>,
}

impl Completion {
    pub fn index_of(&self, set: &AcceptableSet) -> Option<usize> {
        self.sets.iter().position(|s| s == set)
    }
}

/// All acceptable sets of `m` under setwise product and `A* = {a*}`,
/// with identity `1^↓`. Fails once more than `cap` sets turn up.
pub fn completion(m: &FiniteRRMonoid, cap: usize) -> Result<Completion> {
    let host = Host::new(m);
    let sets = host.enumerate(cap, Ok)?;
    let names = sets.iter().map(|s| s.render(m)).collect();
    let one = host.down(m.one()).clone();
    let zero = m.zero().map(|z| host.down(z).clone());
    let acceptable = |s: AcceptableSet, what: &str| {
        if host.is_down_closed(&s) {
            Ok(s)
        } else {
            Err(Error::Structure(format!("{} of acceptable sets is not an order ideal", what)))
        }
    };
    let monoid = build_monoid(
        format!("R({})", m.name()),
        names,
        &sets,
        |a, b| acceptable(host.product(a, b), "product"),
        |a| acceptable(host.star(a), "star"),
        &one,
        zero.as_ref(),
    )?;
    let iota = m
        .elements()
        .map(|a| sets.iter().position(|s| s == host.down(a)).expect("principal ideals are acceptable"))
        .collect();
    Ok(Completion { monoid, sets, iota })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniversalExtension {
    /// `beta[i]` is the image in the target of completion element `i`.
    pub beta: Vec<usize>,
    pub extends_alpha: bool,
    pub preserves_mul: bool,
    pub preserves_star: bool,
    pub preserves_joins: bool,
}

impl UniversalExtension {
    pub fn passed(&self) -> bool {
        self.extends_alpha && self.preserves_mul && self.preserves_star && self.preserves_joins
    }
}

fn check_hom(m: &FiniteRRMonoid, t: &FiniteRRMonoid, alpha: &[usize]) -> Result<()> {
    if alpha.len() != m.size() || alpha.iter().any(|&x| x >= t.size()) {
        return Err(Error::Precondition("map does not fit the two monoids".into()));
    }
    if alpha[m.one()] != t.one() {
        return Err(Error::Precondition("map does not send one to one".into()));
    }
    for a in m.elements() {
        if alpha[m.star(a)] != t.star(alpha[a]) {
            return Err(Error::Precondition(format!(
                "map does not preserve star at {}",
                m.element_name(a)
            )));
        }
        for b in m.elements() {
            if alpha[m.mul(a, b)] != t.mul(alpha[a], alpha[b]) {
                return Err(Error::Precondition(format!(
                    "map does not preserve the product ({}, {})",
                    m.element_name(a),
                    m.element_name(b)
                )));
            }
        }
    }
    Ok(())
}

/// Checks that `beta` extends `alpha` along `iota` and preserves products,
/// star and the joins `A ∪ B` of left-compatible pairs.
pub fn judge_extension(
    r: &Completion,
    t: &FiniteRRMonoid,
    alpha: &[usize],
    beta: &[usize],
) -> UniversalExtension {
    let rm = &r.monoid;
    let extends_alpha = r.iota.iter().enumerate().all(|(a, &i)| beta[i] == alpha[a]);
    let preserves_star = rm.elements().all(|x| beta[rm.star(x)] == t.star(beta[x]));
    let preserves_mul = rm
        .elements()
        .all(|x| rm.elements().all(|y| beta[rm.mul(x, y)] == t.mul(beta[x], beta[y])));
    let preserves_joins = (0..r.sets.len()).all(|i| {
        (i..r.sets.len()).all(|j| match r.index_of(&r.sets[i].union(&r.sets[j])) {
            Some(u) => t.join(beta[i], beta[j]) == Some(beta[u]),
            None => true,
        })
    });
    UniversalExtension {
        beta: beta.to_vec(),
        extends_alpha,
        preserves_mul,
        preserves_star,
        preserves_joins,
    }
}

/// `β(A) = ⋁ α(a)` over `a ∈ A`, for a homomorphism `α: M → T` into a
/// monoid with the needed joins.
pub fn universal_extension(
    m: &FiniteRRMonoid,
    r: &Completion,
    t: &FiniteRRMonoid,
    alpha: &[usize],
) -> Result<UniversalExtension> {
    check_hom(m, t, alpha)?;
    let beta = r
        .sets
        .iter()
        .map(|s| {
            let images: Vec<usize> = s.members().map(|a| alpha[a]).collect();
            t.join_all(&images).ok_or_else(|| {
                Error::Structure(format!("the images of {} have no join in {}", s.render(m), t.name()))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(judge_extension(r, t, alpha, &beta))
}

/// Changes one random entry of `beta` at a time and counts how many of
/// `trials` perturbed maps fail [`judge_extension`].
pub fn rejected_perturbations<R: Rng>(
    r: &Completion,
    t: &FiniteRRMonoid,
    alpha: &[usize],
    beta: &[usize],
    trials: usize,
    rng: &mut R,
) -> usize {
    if t.size() < 2 {
        return trials;
    }
    (0..trials)
        .filter(|_| {
            let mut other = beta.to_vec();
            let i = rng.gen_range(0..other.len());
            let shift = rng.gen_range(1..t.size());
            other[i] = (other[i] + shift) % t.size();
            !judge_extension(r, t, alpha, &other).passed()
        })
        .count()
}
