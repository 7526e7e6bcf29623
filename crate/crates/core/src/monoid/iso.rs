//! Backtracking isomorphism search between small monoids.

use super::FiniteRRMonoid;
use crate::error::{Error, Result};

/// Default cap on the number of elements accepted by [`find_isomorphism`].
pub const DEFAULT_ISO_BOUND: usize = 128;

/// Order/star profile of one element; an isomorphism preserves it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Signature {
    projection: bool,
    one: bool,
    zero: bool,
    partial_unit: bool,
    idempotent: bool,
    below: usize,
    above: usize,
    star_fiber: usize,
    star_below: usize,
}

fn signatures(m: &FiniteRRMonoid) -> Vec<Signature> {
    let n = m.size();
    let mut fiber = vec![0usize; n];
    for a in 0..n {
        fiber[m.star(a)] += 1;
    }
    m.elements()
        .map(|a| Signature {
            projection: m.is_projection(a),
            one: a == m.one(),
            zero: Some(a) == m.zero(),
            partial_unit: m.is_partial_unit(a),
            idempotent: m.mul(a, a) == a,
            below: m.elements().filter(|&x| m.leq(x, a)).count(),
            above: m.elements().filter(|&x| m.leq(a, x)).count(),
            star_fiber: fiber[m.star(a)],
            star_below: m.elements().filter(|&x| m.leq(x, m.star(a))).count(),
        })
        .collect()
}

struct Search<'a> {
    m: &'a FiniteRRMonoid,
    n: &'a FiniteRRMonoid,
    sig_m: Vec<Signature>,
    sig_n: Vec<Signature>,
}

impl Search<'_> {
    fn assign(&self, map: &mut [Option<usize>], used: &mut [bool], a: usize, b: usize) -> bool {
        match map[a] {
            Some(x) => return x == b,
            None => {
                if used[b] || self.sig_m[a] != self.sig_n[b] {
                    return false;
                }
            }
        }
        map[a] = Some(b);
        used[b] = true;
        true
    }

    /// Closes the partial map under products and star; false on conflict.
    fn propagate(&self, map: &mut [Option<usize>], used: &mut [bool]) -> bool {
        loop {
            let assigned: Vec<(usize, usize)> = map
                .iter()
                .enumerate()
                .filter_map(|(a, b)| b.map(|b| (a, b)))
                .collect();
            let before = assigned.len();
            for &(a, fa) in &assigned {
                if !self.assign(map, used, self.m.star(a), self.n.star(fa)) {
                    return false;
                }
                for &(b, fb) in &assigned {
                    if !self.assign(map, used, self.m.mul(a, b), self.n.mul(fa, fb)) {
                        return false;
                    }
                }
            }
            if map.iter().filter(|x| x.is_some()).count() == before {
                return true;
            }
        }
    }

    fn extend(&self, map: Vec<Option<usize>>, used: Vec<bool>) -> Option<Vec<usize>> {
        let Some(a) = map.iter().position(Option::is_none) else {
            return Some(map.into_iter().map(|x| x.unwrap()).collect());
        };
        for b in 0..self.n.size() {
            if used[b] || self.sig_m[a] != self.sig_n[b] {
                continue;
            }
            let mut map2 = map.clone();
            let mut used2 = used.clone();
            if self.assign(&mut map2, &mut used2, a, b) && self.propagate(&mut map2, &mut used2) {
                if let Some(found) = self.extend(map2, used2) {
                    return Some(found);
                }
            }
        }
        None
    }
}

/// Checks that `map` is a bijection `m → n` preserving `mul`, `star`
/// and `one`.
pub fn is_isomorphism(m: &FiniteRRMonoid, n: &FiniteRRMonoid, map: &[usize]) -> bool {
    if m.size() != n.size() || map.len() != m.size() {
        return false;
    }
    let mut hit = vec![false; n.size()];
    for &b in map {
        if b >= n.size() || std::mem::replace(&mut hit[b], true) {
            return false;
        }
    }
    map[m.one()] == n.one()
        && m.elements().all(|a| map[m.star(a)] == n.star(map[a]))
        && m.elements()
            .all(|a| m.elements().all(|b| map[m.mul(a, b)] == n.mul(map[a], map[b])))
}

/// Searches for a bijection preserving `mul` and `star`. Returns
/// `Ok(None)` when none exists.
pub fn find_isomorphism(
    m: &FiniteRRMonoid,
    n: &FiniteRRMonoid,
    bound: usize,
) -> Result<Option<Vec<usize>>> {
    if m.size() > bound || n.size() > bound {
        return Err(Error::Resource(format!(
            "isomorphism search limited to {} elements (got {} and {})",
            bound,
            m.size(),
            n.size()
        )));
    }
    if m.size() != n.size() {
        return Ok(None);
    }
    let search = Search {
        m,
        n,
        sig_m: signatures(m),
        sig_n: signatures(n),
    };
    let mut a = search.sig_m.clone();
    let mut b = search.sig_n.clone();
    a.sort();
    b.sort();
    if a != b {
        return Ok(None);
    }
    let mut map = vec![None; m.size()];
    let mut used = vec![false; n.size()];
    if !search.assign(&mut map, &mut used, m.one(), n.one())
        || !search.propagate(&mut map, &mut used)
    {
        return Ok(None);
    }
    let found = search.extend(map, used);
    debug_assert!(found.as_ref().is_none_or(|f| is_isomorphism(m, n, f)));
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{build_boolean_algebra, build_i, build_pt};

    #[test]
    fn self_isomorphism() {
        let i2 = build_i(2).unwrap();
        let map = find_isomorphism(&i2, &i2, DEFAULT_ISO_BOUND).unwrap().unwrap();
        assert!(is_isomorphism(&i2, &i2, &map));
    }

    #[test]
    fn different_sizes() {
        let i2 = build_i(2).unwrap();
        let pt = build_pt(2).unwrap();
        assert_eq!(find_isomorphism(&i2, &pt, DEFAULT_ISO_BOUND).unwrap(), None);
    }

    #[test]
    fn same_size_not_isomorphic() {
        let pt = build_pt(2).unwrap();
        let tot = pt.submonoid("Tot", &pt.total_elements()).unwrap();
        let b2 = build_boolean_algebra(2).unwrap();
        assert_eq!(tot.size(), b2.size());
        assert_eq!(find_isomorphism(&tot, &b2, DEFAULT_ISO_BOUND).unwrap(), None);
    }

    #[test]
    fn bound() {
        let pt = build_pt(3).unwrap();
        assert!(matches!(
            find_isomorphism(&pt, &pt, 10),
            Err(Error::Resource(_))
        ));
    }
}
