use std::fmt;

use serde::Serialize;

use super::{Companion, Completion, Host};
use crate::error::{Error, Result};
use crate::monoid::{find_isomorphism, is_isomorphism, FiniteRRMonoid, DEFAULT_ISO_BOUND};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum NucleusLaw {
    /// `a ≤ ν(a)`
    N1,
    /// `a ≤ b ⇒ ν(a) ≤ ν(b)`
    N2,
    /// `ν(ν(a)) = ν(a)`
    N3,
    /// `ν(a)ν(b) ≤ ν(ab)`
    N4,
    /// projections go to projections
    N5,
    /// `ν(a*) = ν(ν(a)*)`
    N6,
}

impl fmt::Display for NucleusLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NucleusViolation {
    pub law: NucleusLaw,
    pub witness: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NucleusReport {
    pub passed: bool,
    /// Laws with at least one failure, in law order.
    pub violated: Vec<NucleusLaw>,
    pub first_violation: Option<NucleusViolation>,
}

/// Checks N1-N6 for `nu` (an endofunction on element indices) over every
/// element of `s`.
pub fn check_nucleus(s: &FiniteRRMonoid, nu: &[usize]) -> NucleusReport {
    assert_eq!(nu.len(), s.size(), "nucleus must be defined on every element");
    let mut found: Vec<NucleusViolation> = Vec::new();
    let mut note = |law: NucleusLaw, witness: &[usize]| {
        if !found.iter().any(|v| v.law == law) {
            found.push(NucleusViolation {
                law,
                witness: witness.iter().map(|&a| s.element_name(a).to_string()).collect(),
            });
        }
    };
    for a in s.elements() {
        if !s.leq(a, nu[a]) {
            note(NucleusLaw::N1, &[a]);
        }
        if nu[nu[a]] != nu[a] {
            note(NucleusLaw::N3, &[a]);
        }
        if s.is_projection(a) && !s.is_projection(nu[a]) {
            note(NucleusLaw::N5, &[a]);
        }
        if nu[s.star(a)] != nu[s.star(nu[a])] {
            note(NucleusLaw::N6, &[a]);
        }
        for b in s.elements() {
            if s.leq(a, b) && !s.leq(nu[a], nu[b]) {
                note(NucleusLaw::N2, &[a, b]);
            }
            if !s.leq(s.mul(nu[a], nu[b]), nu[s.mul(a, b)]) {
                note(NucleusLaw::N4, &[a, b]);
            }
        }
    }
    let first_violation = found.first().cloned();
    let mut violated: Vec<NucleusLaw> = found.iter().map(|v| v.law).collect();
    violated.sort_by_key(|l| *l as u8);
    NucleusReport {
        passed: violated.is_empty(),
        violated,
        first_violation,
    }
}

/// `A ↦ A^∨` as an endofunction on the elements of `R(M)`.
pub fn closure_nucleus(m: &FiniteRRMonoid, r: &Completion) -> Result<Vec<usize>> {
    let host = Host::new(m);
    r.sets
        .iter()
        .map(|s| {
            let c = host.closure(s)?;
            r.index_of(&c)
                .ok_or_else(|| Error::Structure(format!("closure of {} is not acceptable", s.render(m))))
        })
        .collect()
}

/// `A ↦ A^∨` as a map from `R(M)` onto `Etale(M)`.
pub fn quotient_map(m: &FiniteRRMonoid, r: &Completion, c: &Companion) -> Result<Vec<usize>> {
    let host = Host::new(m);
    r.sets
        .iter()
        .map(|s| {
            let closed = host.closure(s)?;
            c.index_of(&closed)
                .ok_or_else(|| Error::Structure(format!("closure of {} is not in the companion", s.render(m))))
        })
        .collect()
}

/// The listed properties of `θ_*` and the two composite identities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaStarChecks {
    pub projections_to_projections: bool,
    pub order_preserving: bool,
    pub submultiplicative: bool,
    pub inflationary: bool,
    pub deflationary: bool,
    pub theta_identity: bool,
    pub theta_star_identity: bool,
}

impl ThetaStarChecks {
    pub fn all(&self) -> bool {
        self.projections_to_projections
            && self.order_preserving
            && self.submultiplicative
            && self.inflationary
            && self.deflationary
            && self.theta_identity
            && self.theta_star_identity
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReconstructionReport {
    pub pure: bool,
    /// A pair with left-compatible images that is not itself
    /// left-compatible.
    pub purity_witness: Option<(String, String)>,
    pub theta_star: Option<ThetaStarChecks>,
    pub nucleus: Option<NucleusReport>,
    pub closed_elements: Option<usize>,
    pub s_nu_axioms: Option<bool>,
    /// `s ↦ θ(s)` is an isomorphism from the closed elements onto `T`.
    pub isomorphic: Option<bool>,
    /// Independent isomorphism search agrees.
    pub search_agrees: Option<bool>,
    pub note: Option<String>,
}

impl ReconstructionReport {
    /// Whenever purity holds every derived check passes.
    pub fn consistent(&self) -> bool {
        !self.pure
            || (self.theta_star.as_ref().is_some_and(ThetaStarChecks::all)
                && self.nucleus.as_ref().is_some_and(|n| n.passed)
                && self.s_nu_axioms == Some(true)
                && self.isomorphic == Some(true)
                && self.search_agrees == Some(true))
    }
}

fn check_theta(s: &FiniteRRMonoid, t: &FiniteRRMonoid, theta: &[usize]) -> Result<()> {
    if theta.len() != s.size() || theta.iter().any(|&x| x >= t.size()) {
        return Err(Error::Precondition("map does not fit the two monoids".into()));
    }
    let mut hit = vec![false; t.size()];
    for &x in theta {
        hit[x] = true;
    }
    if let Some(missed) = hit.iter().position(|h| !h) {
        return Err(Error::Precondition(format!(
            "map is not surjective: {} has no preimage",
            t.element_name(missed)
        )));
    }
    if theta[s.one()] != t.one() {
        return Err(Error::Precondition("map does not send one to one".into()));
    }
    for a in s.elements() {
        if theta[s.star(a)] != t.star(theta[a]) {
            return Err(Error::Precondition(format!(
                "map does not preserve star at {}",
                s.element_name(a)
            )));
        }
        for b in s.elements() {
            if theta[s.mul(a, b)] != t.mul(theta[a], theta[b]) {
                return Err(Error::Precondition(format!(
                    "map does not preserve the product ({}, {})",
                    s.element_name(a),
                    s.element_name(b)
                )));
            }
            if b > a && s.left_compatible(a, b) {
                if let Some(j) = s.join(a, b) {
                    if t.join(theta[a], theta[b]) != Some(theta[j]) {
                        return Err(Error::Precondition(format!(
                            "map does not preserve the join of {} and {}",
                            s.element_name(a),
                            s.element_name(b)
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Rebuilds `T` from a surjective homomorphism `θ: S → T` through the
/// nucleus `θ_* θ`, reporting each step. Purity failure is reported, not
/// raised.
pub fn reconstruct_projection_pure(
    s: &FiniteRRMonoid,
    t: &FiniteRRMonoid,
    theta: &[usize],
) -> Result<ReconstructionReport> {
    check_theta(s, t, theta)?;
    let mut report = ReconstructionReport {
        pure: true,
        purity_witness: None,
        theta_star: None,
        nucleus: None,
        closed_elements: None,
        s_nu_axioms: None,
        isomorphic: None,
        search_agrees: None,
        note: None,
    };
    'outer: for a in s.elements() {
        for b in s.elements() {
            if t.left_compatible(theta[a], theta[b]) && !s.left_compatible(a, b) {
                report.pure = false;
                report.purity_witness =
                    Some((s.element_name(a).to_string(), s.element_name(b).to_string()));
                break 'outer;
            }
        }
    }
    if !report.pure {
        return Ok(report);
    }

    let mut theta_star = Vec::with_capacity(t.size());
    for y in t.elements() {
        let below: Vec<usize> = s.elements().filter(|&x| t.leq(theta[x], y)).collect();
        match s.join_all(&below) {
            Some(j) => theta_star.push(j),
            None => {
                report.note = Some(format!(
                    "the preimage of the principal ideal of {} has no join",
                    t.element_name(y)
                ));
                return Ok(report);
            }
        }
    }
    let ts = &theta_star;
    report.theta_star = Some(ThetaStarChecks {
        projections_to_projections: t
            .elements()
            .all(|y| !t.is_projection(y) || s.is_projection(ts[y])),
        order_preserving: t
            .elements()
            .all(|x| t.elements().all(|y| !t.leq(x, y) || s.leq(ts[x], ts[y]))),
        submultiplicative: t
            .elements()
            .all(|x| t.elements().all(|y| s.leq(s.mul(ts[x], ts[y]), ts[t.mul(x, y)]))),
        inflationary: s.elements().all(|x| s.leq(x, ts[theta[x]])),
        deflationary: t.elements().all(|y| t.leq(theta[ts[y]], y)),
        theta_identity: s.elements().all(|x| theta[ts[theta[x]]] == theta[x]),
        theta_star_identity: t.elements().all(|y| ts[theta[ts[y]]] == ts[y]),
    });

    let nu: Vec<usize> = s.elements().map(|x| ts[theta[x]]).collect();
    report.nucleus = Some(check_nucleus(s, &nu));

    let closed: Vec<usize> = s.elements().filter(|&x| nu[x] == x).collect();
    report.closed_elements = Some(closed.len());
    let position = |x: usize| closed.binary_search(&x).ok();
    let lookup = |x: usize| {
        position(x).ok_or_else(|| Error::Structure(format!("{} is not closed", s.element_name(x))))
    };
    let s_nu = (|| -> Result<FiniteRRMonoid> {
        let mul = closed
            .iter()
            .map(|&a| closed.iter().map(|&b| lookup(nu[s.mul(a, b)])).collect())
            .collect::<Result<Vec<Vec<usize>>>>()?;
        let star = closed
            .iter()
            .map(|&a| lookup(nu[s.star(a)]))
            .collect::<Result<Vec<_>>>()?;
        let names = closed.iter().map(|&a| s.element_name(a).to_string()).collect();
        let zero = s.zero().map(|z| lookup(nu[z])).transpose()?;
        FiniteRRMonoid::from_parts(
            format!("{}_nu", s.name()),
            names,
            mul,
            star,
            lookup(nu[s.one()])?,
            zero,
        )
    })();
    let s_nu = match s_nu {
        Ok(m) => m,
        Err(e) => {
            report.note = Some(e.to_string());
            return Ok(report);
        }
    };
    report.s_nu_axioms = Some(s_nu.check_axioms().passed);
    let alpha: Vec<usize> = closed.iter().map(|&a| theta[a]).collect();
    let iso = is_isomorphism(&s_nu, t, &alpha);
    report.isomorphic = Some(iso);
    let found = find_isomorphism(&s_nu, t, DEFAULT_ISO_BOUND.max(s_nu.size()))?;
    report.search_agrees = Some(found.is_some() == iso);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::companion::{completion, etale_of, DEFAULT_CAP};
    use crate::monoid::{build_boolean_algebra, build_i, build_pt};

    #[test]
    fn identity_is_a_nucleus() {
        let pt = build_pt(2).unwrap();
        let id: Vec<usize> = pt.elements().collect();
        assert!(check_nucleus(&pt, &id).passed);
    }

    #[test]
    fn closure_is_a_nucleus_on_r_i2() {
        let i2 = build_i(2).unwrap();
        let r = completion(&i2, DEFAULT_CAP).unwrap();
        let nu = closure_nucleus(&i2, &r).unwrap();
        let report = check_nucleus(&r.monoid, &nu);
        assert!(report.passed, "{:?}", report);
    }

    #[test]
    fn constant_one_is_not_a_nucleus() {
        let i2 = build_i(2).unwrap();
        let r = completion(&i2, DEFAULT_CAP).unwrap();
        let constant = vec![r.monoid.one(); r.monoid.size()];
        let report = check_nucleus(&r.monoid, &constant);
        assert!(!report.passed);
        // one is a projection and absorbs itself, so only inflation fails
        assert_eq!(report.violated, vec![NucleusLaw::N1]);
        assert!(report.first_violation.is_some());
    }

    #[test]
    fn identity_reconstruction() {
        let b = build_boolean_algebra(2).unwrap();
        let id: Vec<usize> = b.elements().collect();
        let report = reconstruct_projection_pure(&b, &b, &id).unwrap();
        assert!(report.pure && report.consistent());
        assert_eq!(report.closed_elements, Some(b.size()));
    }

    #[test]
    fn quotient_of_r_i2() {
        let i2 = build_i(2).unwrap();
        let r = completion(&i2, DEFAULT_CAP).unwrap();
        let c = etale_of(&i2).unwrap();
        let theta = quotient_map(&i2, &r, &c).unwrap();
        let report = reconstruct_projection_pure(&r.monoid, &c.monoid, &theta).unwrap();
        assert!(report.pure, "{:?}", report);
        assert!(report.consistent(), "{:?}", report);
        assert_eq!(report.closed_elements, Some(9));
    }

    #[test]
    fn star_breaking_map_rejected() {
        let pt = build_pt(2).unwrap();
        let i2 = build_i(2).unwrap();
        let r = completion(&i2, DEFAULT_CAP).unwrap();
        let c = etale_of(&i2).unwrap();
        let mut theta = quotient_map(&i2, &r, &c).unwrap();
        let z = r.monoid.zero().unwrap();
        theta[z] = c.monoid.one();
        assert!(matches!(
            reconstruct_projection_pure(&r.monoid, &c.monoid, &theta),
            Err(Error::Precondition(_))
        ));
        assert_eq!(pt.size(), c.monoid.size());
    }
}
