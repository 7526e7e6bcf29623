use serde::Serialize;

use super::{etale_of, Companion, Host};
use crate::error::{Error, Result};
use crate::monoid::{find_isomorphism, FiniteRRMonoid};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvIsoReport {
    pub size: usize,
    pub companion_size: usize,
    pub companion_partial_units: usize,
    /// The partial units of the companion are exactly the sets `a^↓`.
    pub partial_units_are_principal: bool,
    /// `a ↦ a^↓` preserves products, star and one.
    pub iota_homomorphism: bool,
    pub iota_injective: bool,
}

impl InvIsoReport {
    pub fn isomorphic(&self) -> bool {
        self.partial_units_are_principal && self.iota_homomorphism && self.iota_injective
    }
}

/// Checks that `a ↦ a^↓` is an isomorphism from `m` onto the partial
/// units of its companion.
pub fn verify_inv_iso(m: &FiniteRRMonoid) -> Result<InvIsoReport> {
    let c = etale_of(m)?;
    Ok(inv_iso_report(m, &c))
}

pub fn inv_iso_report(m: &FiniteRRMonoid, c: &Companion) -> InvIsoReport {
    let e = &c.monoid;
    let mut units = e.partial_units();
    units.sort();
    let mut principal = c.iota.clone();
    principal.sort();
    principal.dedup();
    let iota = &c.iota;
    InvIsoReport {
        size: m.size(),
        companion_size: e.size(),
        companion_partial_units: units.len(),
        partial_units_are_principal: units == principal,
        iota_homomorphism: iota[m.one()] == e.one()
            && m.elements().all(|a| iota[m.star(a)] == e.star(iota[a]))
            && m.elements()
                .all(|a| m.elements().all(|b| iota[m.mul(a, b)] == e.mul(iota[a], iota[b]))),
        iota_injective: principal.len() == m.size(),
    }
}

/// The extension `φ` of a homomorphism of Boolean inverse monoids to
/// their companions.
#[derive(Debug, Clone)]
pub struct ExtendedHom {
    pub source: Companion,
    pub target: Companion,
    /// `phi[i]` is the image of source companion element `i`.
    pub phi: Vec<usize>,
    pub restricts_to_theta: bool,
    pub preserves_mul: bool,
    pub preserves_star: bool,
    pub preserves_joins: bool,
    pub injective: bool,
}

impl ExtendedHom {
    pub fn passed(&self) -> bool {
        self.restricts_to_theta && self.preserves_mul && self.preserves_star && self.preserves_joins
    }
}

fn check_boolean_hom(m: &FiniteRRMonoid, n: &FiniteRRMonoid, theta: &[usize]) -> Result<()> {
    if theta.len() != m.size() || theta.iter().any(|&x| x >= n.size()) {
        return Err(Error::Precondition("map does not fit the two monoids".into()));
    }
    if theta[m.one()] != n.one() {
        return Err(Error::Precondition("map does not send one to one".into()));
    }
    for a in m.elements() {
        if theta[m.star(a)] != n.star(theta[a]) {
            return Err(Error::Precondition(format!(
                "map does not preserve star at {}",
                m.element_name(a)
            )));
        }
        for b in m.elements() {
            if theta[m.mul(a, b)] != n.mul(theta[a], theta[b]) {
                return Err(Error::Precondition(format!(
                    "map does not preserve the product ({}, {})",
                    m.element_name(a),
                    m.element_name(b)
                )));
            }
        }
    }
    for a in m.elements() {
        for b in a + 1..m.size() {
            if !m.compatible(a, b) {
                continue;
            }
            if let Some(j) = m.join(a, b) {
                if n.join(theta[a], theta[b]) != Some(theta[j]) {
                    return Err(Error::Precondition(format!(
                        "map does not preserve the join of {} and {}",
                        m.element_name(a),
                        m.element_name(b)
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Extends `θ: M → N` to `φ: Etale(M) → Etale(N)` by
/// `φ(A) = (θ(A)^↓)^∨`.
pub fn extend_hom(m: &FiniteRRMonoid, n: &FiniteRRMonoid, theta: &[usize]) -> Result<ExtendedHom> {
    check_boolean_hom(m, n, theta)?;
    let source = etale_of(m)?;
    let target = etale_of(n)?;
    let host = Host::new(n);
    let phi = source
        .sets
        .iter()
        .map(|s| {
            let images: Vec<usize> = s.members().map(|a| theta[a]).collect();
            let closed = host.closure(&host.down_closure(&images)?)?;
            target
                .index_of(&closed)
                .ok_or_else(|| Error::Structure("image is not a closed set".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let (e, f) = (&source.monoid, &target.monoid);
    let restricts_to_theta = m
        .elements()
        .all(|a| phi[source.iota[a]] == target.iota[theta[a]]);
    let preserves_star = e.elements().all(|x| phi[e.star(x)] == f.star(phi[x]));
    let preserves_mul = e
        .elements()
        .all(|x| e.elements().all(|y| phi[e.mul(x, y)] == f.mul(phi[x], phi[y])));
    let preserves_joins = e.elements().all(|x| {
        (x + 1..e.size()).all(|y| {
            !e.left_compatible(x, y)
                || match e.join(x, y) {
                    Some(j) => f.join(phi[x], phi[y]) == Some(phi[j]),
                    None => true,
                }
        })
    });
    let mut sorted = phi.clone();
    sorted.sort();
    sorted.dedup();
    let injective = sorted.len() == phi.len();
    Ok(ExtendedHom {
        source,
        target,
        phi,
        restricts_to_theta,
        preserves_mul,
        preserves_star,
        preserves_joins,
        injective,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedPointReport {
    pub size: usize,
    pub companion_size: usize,
    /// `Etale(M) ≅ M`.
    pub companion_isomorphic: bool,
    /// Every left-compatible pair of `M` is compatible.
    pub left_compatible_implies_compatible: bool,
    /// A left-compatible pair that is not compatible.
    pub witness: Option<(String, String)>,
}

impl FixedPointReport {
    pub fn agree(&self) -> bool {
        self.companion_isomorphic == self.left_compatible_implies_compatible
    }

    pub fn holds(&self) -> bool {
        self.companion_isomorphic && self.left_compatible_implies_compatible
    }
}

/// Decides `Etale(M) ≅ M` by search and, independently, whether
/// left-compatibility implies compatibility in `M`.
pub fn fixed_point_check(m: &FiniteRRMonoid) -> Result<FixedPointReport> {
    let c = etale_of(m)?;
    let bound = m.size().max(c.monoid.size());
    let companion_isomorphic = find_isomorphism(&c.monoid, m, bound)?.is_some();
    let mut witness = None;
    'outer: for a in m.elements() {
        for b in m.elements() {
            if m.left_compatible(a, b) && !m.compatible(a, b) {
                witness = Some((m.element_name(a).to_string(), m.element_name(b).to_string()));
                break 'outer;
            }
        }
    }
    Ok(FixedPointReport {
        size: m.size(),
        companion_size: c.monoid.size(),
        companion_isomorphic,
        left_compatible_implies_compatible: witness.is_none(),
        witness,
    })
}
