//! Corpus generators: full partial-function monoids, symmetric inverse
//! monoids, and finite Boolean algebras.

use super::FiniteRRMonoid;
use crate::error::{Error, Result};

/// Largest `n` accepted by [`build_pt`] and [`build_i`].
pub const MAX_GENERATOR_DEGREE: usize = 4;

/// A partial self-map of `{0..n}`; `None` marks points outside the domain.
type Graph = Vec<Option<usize>>;

fn all_partial_maps(n: usize) -> Vec<Graph> {
    let mut out: Vec<Graph> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * (n + 1));
        for g in &out {
            for image in std::iter::once(None).chain((0..n).map(Some)) {
                let mut h = g.clone();
                h.push(image);
                next.push(h);
            }
        }
        out = next;
    }
    out
}

fn graph_pairs(g: &Graph) -> Vec<(usize, usize)> {
    g.iter()
        .enumerate()
        .filter_map(|(x, y)| y.map(|y| (x, y)))
        .collect()
}

fn is_injective(g: &Graph) -> bool {
    let mut seen = vec![false; g.len()];
    for y in g.iter().flatten() {
        if std::mem::replace(&mut seen[*y], true) {
            return false;
        }
    }
    true
}

/// Points are printed 1-based; `-` marks an undefined point.
fn graph_name(g: &Graph) -> String {
    g.iter()
        .map(|y| match y {
            Some(y) => char::from_digit((y + 1) as u32, 10).unwrap_or('?'),
            None => '-',
        })
        .collect()
}

fn monoid_of_maps(name: String, mut maps: Vec<Graph>) -> Result<FiniteRRMonoid> {
    maps.sort_by_key(graph_pairs);
    let n_points = maps.first().map_or(0, |g| g.len());
    let index: std::collections::HashMap<Graph, usize> = maps
        .iter()
        .enumerate()
        .map(|(i, g)| (g.clone(), i))
        .collect();
    let compose = |f: &Graph, g: &Graph| -> Graph {
        // apply g, then f
        g.iter().map(|y| y.and_then(|y| f[y])).collect()
    };
    let domain_identity = |f: &Graph| -> Graph {
        f.iter()
            .enumerate()
            .map(|(x, y)| y.map(|_| x))
            .collect()
    };
    let mul = maps
        .iter()
        .map(|f| maps.iter().map(|g| index[&compose(f, g)]).collect())
        .collect();
    let star = maps.iter().map(|f| index[&domain_identity(f)]).collect();
    let identity: Graph = (0..n_points).map(Some).collect();
    let empty: Graph = vec![None; n_points];
    let names = maps.iter().map(graph_name).collect();
    FiniteRRMonoid::from_parts(
        name,
        names,
        mul,
        star,
        index[&identity],
        Some(index[&empty]),
    )
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 || n > MAX_GENERATOR_DEGREE {
        return Err(Error::Resource(format!(
            "degree {} outside supported range 1..={}",
            n, MAX_GENERATOR_DEGREE
        )));
    }
    Ok(())
}

/// All partial self-maps of an `n`-set, `(n+1)^n` elements, ordered
/// lexicographically by their graphs.
pub fn build_pt(n: usize) -> Result<FiniteRRMonoid> {
    check_degree(n)?;
    monoid_of_maps(format!("PT{}", n), all_partial_maps(n))
}

/// All partial bijections of an `n`-set.
pub fn build_i(n: usize) -> Result<FiniteRRMonoid> {
    check_degree(n)?;
    let maps = all_partial_maps(n).into_iter().filter(is_injective).collect();
    monoid_of_maps(format!("I{}", n), maps)
}

/// The monoid `{0, 1}`.
pub fn two_element() -> FiniteRRMonoid {
    FiniteRRMonoid::from_parts(
        "two",
        vec!["0".into(), "1".into()],
        vec![vec![0, 0], vec![0, 1]],
        vec![0, 1],
        1,
        Some(0),
    )
    .expect("static table")
}

/// The Boolean algebra of subsets of a `k`-set under intersection, with
/// every element a projection.
pub fn build_boolean_algebra(k: usize) -> Result<FiniteRRMonoid> {
    if k > 6 {
        return Err(Error::Resource(format!(
            "Boolean algebra on {} atoms exceeds the bound of 6",
            k
        )));
    }
    let size = 1usize << k;
    let names = (0..size)
        .map(|m| {
            let atoms: Vec<String> = (0..k)
                .filter(|i| m & (1 << i) != 0)
                .map(|i| (i + 1).to_string())
                .collect();
            format!("{{{}}}", atoms.join(","))
        })
        .collect();
    let mul = (0..size)
        .map(|a| (0..size).map(|b| a & b).collect())
        .collect();
    FiniteRRMonoid::from_parts(
        format!("B{}", k),
        names,
        mul,
        (0..size).collect(),
        size - 1,
        Some(0),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn factorial(k: usize) -> usize {
        (1..=k).product()
    }

    #[test]
    fn sizes() {
        for n in 1..=3 {
            assert_eq!(build_pt(n).unwrap().size(), (n + 1).pow(n as u32));
            let expected: usize = (0..=n)
                .map(|k| binomial(n, k) * binomial(n, k) * factorial(k))
                .sum();
            assert_eq!(build_i(n).unwrap().size(), expected);
        }
        assert_eq!(build_pt(2).unwrap().size(), 9);
        assert_eq!(build_i(2).unwrap().size(), 7);
        assert_eq!(build_i(3).unwrap().size(), 34);
    }

    #[test]
    fn canonical_order() {
        let pt = build_pt(2).unwrap();
        let names: Vec<&str> = pt.element_names().iter().map(String::as_str).collect();
        assert_eq!(names, ["--", "1-", "11", "12", "2-", "21", "22", "-1", "-2"]);
        assert_eq!(pt.element_name(pt.one()), "12");
        assert_eq!(pt.zero(), Some(0));
    }

    #[test]
    fn degree_bounds() {
        assert!(matches!(build_pt(0), Err(Error::Resource(_))));
        assert!(matches!(build_i(5), Err(Error::Resource(_))));
    }

    #[test]
    fn boolean_algebra() {
        let b = build_boolean_algebra(2).unwrap();
        assert_eq!(b.size(), 4);
        assert!(b.check_axioms().passed);
        assert_eq!(b.element_name(b.one()), "{1,2}");
    }
}
