//! Structural predicates on graphs and vertex sets.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::profile::{self, EnumerationOptions, Profile};
use crate::vertex_set::VertexSet;

/// Partial map `u -> ū`, defined where `u` has exactly one eccentric vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EccentricMap {
    bar: Vec<Option<usize>>,
}

impl EccentricMap {
    pub fn get(&self, u: usize) -> Option<usize> {
        self.bar[u]
    }

    pub fn is_total(&self) -> bool {
        self.bar.iter().all(Option::is_some)
    }

    /// `{ū : u in s}`; `None` if some member of `s` has no unique eccentric
    /// vertex.
    pub fn image(&self, s: VertexSet) -> Option<VertexSet> {
        s.iter().map(|u| self.bar[u]).collect::<Option<Vec<_>>>().map(|v| v.into_iter().collect())
    }
}

pub fn unique_eccentric_map(g: &Graph) -> EccentricMap {
    let bar = (0..g.n())
        .map(|v| {
            let ev = g.eccentric_vertices(v);
            (ev.len() == 1).then(|| ev.iter().next().unwrap())
        })
        .collect();
    EccentricMap { bar }
}

pub fn is_self_centered(g: &Graph) -> bool {
    g.radius() == g.diameter()
}

pub fn is_uev(g: &Graph) -> bool {
    unique_eccentric_map(g).is_total()
}

/// Center-critical by exhaustion: no proper nonempty profile reproduces
/// the classical center.
pub fn is_center_critical_bruteforce(g: &Graph, opts: EnumerationOptions) -> Result<bool> {
    opts.check(g)?;
    let center = g.center();
    let full = g.vertices().bits();
    Ok((1..full).all(|m| {
        let s = Profile::new(g, VertexSet::from_bits(m)).expect("nonzero in-range mask");
        profile::s_center(g, s) != center
    }))
}

/// Center-critical via the structural characterization: self-centered and
/// UEV.
pub fn is_center_critical(g: &Graph) -> bool {
    is_self_centered(g) && is_uev(g)
}

/// The antipode map of an even graph: every vertex has a unique eccentric
/// vertex, at distance exactly `diam`.
fn even_map(g: &Graph) -> Option<Vec<usize>> {
    let diam = g.diameter();
    let map = unique_eccentric_map(g);
    (0..g.n())
        .map(|u| map.get(u).filter(|&b| g.distance(u, b) == diam))
        .collect()
}

pub fn is_even(g: &Graph) -> bool {
    even_map(g).is_some()
}

pub fn is_balanced(g: &Graph) -> bool {
    even_map(g).is_some_and(|bar| (0..g.n()).all(|u| g.degree(u) == g.degree(bar[u])))
}

pub fn is_harmonic(g: &Graph) -> bool {
    even_map(g).is_some_and(|bar| g.edges().all(|(u, v)| g.has_edge(bar[u], bar[v])))
}

pub fn is_symmetric_even(g: &Graph) -> bool {
    let diam = g.diameter();
    even_map(g).is_some_and(|bar| {
        (0..g.n()).all(|u| (0..g.n()).all(|v| g.distance(u, v) + g.distance(u, bar[v]) == diam))
    })
}

/// Every block induces a clique.
pub fn is_block_graph(g: &Graph) -> bool {
    g.block_decomposition().blocks.iter().all(|&b| {
        b.iter().all(|u| b.difference(g.closed_neighborhood(u)).is_empty())
    })
}

/// Every vertex outside `s` has a neighbour in `s`.
pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    s.complement(g.n()).iter().all(|v| !g.neighbors(v).intersection(s).is_empty())
}

/// `{x in s : N(x) ⊆ s}`.
pub fn interior_vertices(g: &Graph, s: VertexSet) -> VertexSet {
    s.iter().filter(|&x| g.neighbors(x).is_subset(s)).collect()
}

/// `s` contains no interior vertex.
pub fn is_boundary(g: &Graph, s: VertexSet) -> bool {
    interior_vertices(g, s).is_empty()
}

/// Dominating and boundary at once.
pub fn is_dominating_boundary(g: &Graph, s: VertexSet) -> bool {
    is_dominating(g, s) && is_boundary(g, s)
}

/// `{ū : u in s}` in a UEV graph.
pub fn profile_eccentric_image(g: &Graph, s: VertexSet) -> Result<VertexSet> {
    g.check_set(s)?;
    let map = unique_eccentric_map(g);
    if !map.is_total() {
        return Err(Error::NotUev);
    }
    Ok(map.image(s).expect("map is total"))
}

/// All structural flags of a graph. Serializes as a flat object with keys in
/// sorted order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub balanced: bool,
    pub block_graph: bool,
    pub center_critical: bool,
    pub even: bool,
    pub harmonic: bool,
    pub self_centered: bool,
    pub symmetric_even: bool,
    pub uev: bool,
}

pub fn classify(g: &Graph) -> Classification {
    let c = Classification {
        balanced: is_balanced(g),
        block_graph: is_block_graph(g),
        center_critical: is_center_critical(g),
        even: is_even(g),
        harmonic: is_harmonic(g),
        self_centered: is_self_centered(g),
        symmetric_even: is_symmetric_even(g),
        uev: is_uev(g),
    };
    debug_assert!(!c.symmetric_even || c.harmonic);
    debug_assert!(!c.harmonic || c.balanced);
    debug_assert_eq!(c.center_critical, c.self_centered && c.uev);
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{self, desk_corpus};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn self_centered_examples() {
        assert!(is_self_centered(&generators::cycle(6).unwrap()));
        assert!(!is_self_centered(&generators::path(4).unwrap()));
        assert!(is_self_centered(&generators::complete_bipartite(3, 3).unwrap()));
    }

    #[test]
    fn uev_examples() {
        let c6 = generators::cycle(6).unwrap();
        assert!(is_uev(&c6));
        assert_eq!(unique_eccentric_map(&c6).get(0), Some(3));
        assert!(!is_uev(&generators::complete(3).unwrap()));
        let p5 = generators::path(5).unwrap();
        assert!(!is_uev(&p5));
        assert_eq!(unique_eccentric_map(&p5).get(2), None);
        // even paths are UEV without being self-centered
        assert!(is_uev(&generators::path(6).unwrap()));
    }

    #[test]
    fn center_critical_examples() {
        let opts = EnumerationOptions::default();
        // odd cycles are self-centered but every vertex has two antipodes;
        // S = {0,1,2,3} already reproduces the center V of C_5
        let c5 = generators::cycle(5).unwrap();
        assert!(!is_center_critical_bruteforce(&c5, opts).unwrap());
        assert!(!is_center_critical(&c5));
        let s = Profile::from_vertices(&c5, &[0, 1, 2, 3]).unwrap();
        assert_eq!(profile::s_center(&c5, s), c5.vertices());
        assert!(!is_center_critical(&generators::cycle(7).unwrap()));

        assert!(!is_center_critical_bruteforce(&generators::path(3).unwrap(), opts).unwrap());
        assert!(!is_center_critical_bruteforce(&generators::complete(4).unwrap(), opts).unwrap());
        let c6 = generators::cycle(6).unwrap();
        assert!(is_center_critical_bruteforce(&c6, opts).unwrap());
        assert!(is_center_critical(&c6));
        assert!(is_center_critical(&generators::complete_bipartite(2, 2).unwrap()));
        assert!(!is_center_critical(&generators::wheel(7).unwrap()));
    }

    #[test]
    fn even_family_examples() {
        for g in [generators::cycle(8).unwrap(), generators::hypercube(3).unwrap()] {
            assert!(is_symmetric_even(&g));
            assert!(is_harmonic(&g) && is_balanced(&g) && is_even(&g));
        }
        let c5 = generators::cycle(5).unwrap();
        assert!(!is_even(&c5) && !is_balanced(&c5) && !is_symmetric_even(&c5));
        // UEV but the antipode of an inner vertex is not at distance diam
        assert!(!is_even(&generators::path(4).unwrap()));
    }

    #[test]
    fn block_graph_examples() {
        assert!(is_block_graph(&generators::path(6).unwrap()));
        let bowtie = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert!(is_block_graph(&bowtie));
        assert!(!is_block_graph(&generators::cycle(4).unwrap()));
        assert!(is_block_graph(&Graph::new(1, &[]).unwrap()));
    }

    #[test]
    fn dominating_and_boundary_examples() {
        let c6 = generators::cycle(6).unwrap();
        assert!(is_dominating(&c6, set(&[0, 3])));
        assert_eq!(interior_vertices(&c6, set(&[0, 1, 2])), set(&[1]));
        assert!(!is_boundary(&c6, set(&[0, 1, 2])));
        assert!(!is_dominating(&c6, VertexSet::EMPTY));
        assert!(is_boundary(&c6, VertexSet::EMPTY));
        assert!(is_dominating_boundary(&c6, set(&[0, 2, 4])));
    }

    #[test]
    fn eccentric_image_examples() {
        let c6 = generators::cycle(6).unwrap();
        assert_eq!(profile_eccentric_image(&c6, set(&[0, 1])).unwrap(), set(&[3, 4]));
        let q3 = generators::hypercube(3).unwrap();
        assert_eq!(profile_eccentric_image(&q3, set(&[0b000])).unwrap(), set(&[0b111]));
        let c8 = generators::cycle(8).unwrap();
        assert_eq!(profile_eccentric_image(&c8, VertexSet::EMPTY).unwrap(), VertexSet::EMPTY);
        assert_eq!(
            profile_eccentric_image(&generators::cycle(5).unwrap(), set(&[0])),
            Err(Error::NotUev)
        );
    }

    #[test]
    fn classification_json_is_flat_and_sorted() {
        let json = serde_json::to_string(&classify(&generators::cycle(6).unwrap())).unwrap();
        assert_eq!(
            json,
            r#"{"balanced":true,"block_graph":false,"center_critical":true,"even":true,"harmonic":true,"self_centered":true,"symmetric_even":true,"uev":true}"#
        );
    }

    #[test]
    fn corpus_invariants() {
        for entry in desk_corpus() {
            let g = &entry.graph;
            let c = classify(g);
            assert!(!c.symmetric_even || c.harmonic, "{}", entry.label);
            assert!(!c.harmonic || c.balanced, "{}", entry.label);
            if c.symmetric_even {
                let map = unique_eccentric_map(g);
                for u in 0..g.n() {
                    assert_eq!(map.get(map.get(u).unwrap()), Some(u), "{}", entry.label);
                }
            }
            // UEV graphs: self-centered iff every vertex is someone's antipode
            if c.uev {
                let all_eccentric = (0..g.n())
                    .fold(VertexSet::EMPTY, |acc, v| acc.union(g.eccentric_vertices(v)))
                    == g.vertices();
                assert_eq!(c.self_centered, all_eccentric, "{}", entry.label);
            }
        }
    }
}
