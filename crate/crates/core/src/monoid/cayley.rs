use super::FiniteRRMonoid;

/// A partial self-map of the element set of a monoid.
pub type PartialMap = Vec<Option<usize>>;

/// The representation `a ↦ (x ↦ ax on a*S)` together with the results
/// of checking that it is an embedding.
#[derive(Debug, Clone)]
pub struct CayleyEmbedding {
    pub images: Vec<PartialMap>,
    pub injective: bool,
    pub preserves_mul: bool,
    pub preserves_star: bool,
}

impl CayleyEmbedding {
    pub fn is_embedding(&self) -> bool {
        self.injective && self.preserves_mul && self.preserves_star
    }
}

fn compose(f: &PartialMap, g: &PartialMap) -> PartialMap {
    g.iter().map(|y| y.and_then(|y| f[y])).collect()
}

fn domain_identity(f: &PartialMap) -> PartialMap {
    f.iter()
        .enumerate()
        .map(|(x, y)| y.map(|_| x))
        .collect()
}

pub fn cayley_embed(m: &FiniteRRMonoid) -> CayleyEmbedding {
    let n = m.size();
    let images: Vec<PartialMap> = m
        .elements()
        .map(|a| {
            let sa = m.star(a);
            let mut domain = vec![false; n];
            for s in 0..n {
                domain[m.mul(sa, s)] = true;
            }
            (0..n)
                .map(|x| domain[x].then(|| m.mul(a, x)))
                .collect()
        })
        .collect();

    let mut seen = std::collections::HashSet::new();
    let injective = images.iter().all(|f| seen.insert(f.clone()));
    let preserves_mul = m.elements().all(|a| {
        m.elements()
            .all(|b| images[m.mul(a, b)] == compose(&images[a], &images[b]))
    });
    let preserves_star = m
        .elements()
        .all(|a| images[m.star(a)] == domain_identity(&images[a]));
    CayleyEmbedding {
        images,
        injective,
        preserves_mul,
        preserves_star,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{build_i, build_pt};

    #[test]
    fn one_is_identity_and_projections_fix_their_ideal() {
        let pt = build_pt(2).unwrap();
        let emb = cayley_embed(&pt);
        assert!(emb.is_embedding());
        let id: PartialMap = (0..pt.size()).map(Some).collect();
        assert_eq!(emb.images[pt.one()], id);
        for e in pt.projections() {
            for (x, y) in emb.images[e].iter().enumerate() {
                if let Some(y) = y {
                    assert_eq!(*y, x);
                }
            }
        }
    }

    #[test]
    fn i2_swap() {
        let i2 = build_i(2).unwrap();
        let emb = cayley_embed(&i2);
        assert!(emb.is_embedding());
        let swap = i2.index_of("21").unwrap();
        assert_eq!(
            compose(&emb.images[swap], &emb.images[swap]),
            emb.images[i2.one()]
        );
    }
}
