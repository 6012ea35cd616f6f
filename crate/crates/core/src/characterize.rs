//! Closed-form center-set families and membership tests for specific graph
//! classes, and their comparison against exhaustive enumeration.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::classify;
use crate::error::{Error, Result};
use crate::generators;
use crate::graph::Graph;
use crate::profile::{self, CenterSetFamily, EnumerationOptions, Profile};
use crate::vertex_set::VertexSet;

/// A graph class with a known center-set characterization.
///
/// Parameterized classes refer to the canonical labelings produced by
/// [`generators`]; the `n` of `Wheel` and `OddCycle` is the vertex count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassSpec {
    BlockGraph,
    Complete(usize),
    Tree,
    CompleteBipartite(usize, usize),
    KnMinusE(usize),
    Wheel(usize),
    OddCycle(usize),
    SymmetricEven,
}

impl ClassSpec {
    pub fn tag(&self) -> &'static str {
        match self {
            ClassSpec::BlockGraph => "block-graph",
            ClassSpec::Complete(_) => "complete",
            ClassSpec::Tree => "tree",
            ClassSpec::CompleteBipartite(..) => "complete-bipartite",
            ClassSpec::KnMinusE(_) => "kn-minus-e",
            ClassSpec::Wheel(_) => "wheel",
            ClassSpec::OddCycle(_) => "odd-cycle",
            ClassSpec::SymmetricEven => "symmetric-even",
        }
    }

    pub const TAGS: [&'static str; 8] = [
        "block-graph",
        "complete",
        "tree",
        "complete-bipartite",
        "kn-minus-e",
        "wheel",
        "odd-cycle",
        "symmetric-even",
    ];

    /// Builds a spec from a CLI tag and its optional `m`, `n` parameters.
    pub fn from_tag(tag: &str, m: Option<usize>, n: Option<usize>) -> Result<Self> {
        let need = |p: Option<usize>, name: &str| {
            p.ok_or_else(|| Error::BadParams(format!("class {tag} needs --{name}")))
        };
        Ok(match tag {
            "block-graph" => ClassSpec::BlockGraph,
            "tree" => ClassSpec::Tree,
            "symmetric-even" => ClassSpec::SymmetricEven,
            "complete" => ClassSpec::Complete(need(n, "n")?),
            "complete-bipartite" => ClassSpec::CompleteBipartite(need(m, "m")?, need(n, "n")?),
            "kn-minus-e" => ClassSpec::KnMinusE(need(n, "n")?),
            "wheel" => ClassSpec::Wheel(need(n, "n")?),
            "odd-cycle" => ClassSpec::OddCycle(need(n, "n")?),
            other => return Err(Error::BadParams(format!("unknown class {other:?}"))),
        })
    }

    /// Canonical instance for parameterized classes.
    pub fn canonical_graph(&self) -> Result<Graph> {
        match *self {
            ClassSpec::Complete(n) => generators::complete(n),
            ClassSpec::CompleteBipartite(m, n) => generators::complete_bipartite(m, n),
            ClassSpec::KnMinusE(n) => generators::kn_minus_e(n),
            ClassSpec::Wheel(n) => generators::wheel(n),
            ClassSpec::OddCycle(n) => generators::cycle(n),
            _ => Err(Error::BadParams(format!("class {} needs an explicit graph", self.tag()))),
        }
    }

    /// Degenerate parameters handled by a more general characterization:
    /// `K_{1,n}` and `K_3 - e` are trees, `W_4` is `K_4`.
    pub fn routed(self) -> Self {
        match self {
            ClassSpec::CompleteBipartite(m, n) if m.min(n) == 1 => ClassSpec::Tree,
            ClassSpec::KnMinusE(3) => ClassSpec::Tree,
            ClassSpec::Wheel(4) => ClassSpec::Complete(4),
            other => other,
        }
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSpec::Complete(n) => write!(f, "complete(n={n})"),
            ClassSpec::CompleteBipartite(m, n) => write!(f, "complete-bipartite(m={m},n={n})"),
            ClassSpec::KnMinusE(n) => write!(f, "kn-minus-e(n={n})"),
            ClassSpec::Wheel(n) => write!(f, "wheel(n={n})"),
            ClassSpec::OddCycle(n) => write!(f, "odd-cycle(n={n})"),
            other => f.write_str(other.tag()),
        }
    }
}

impl FromStr for ClassSpec {
    type Err = Error;

    /// Parses the bare tags of the unparameterized classes.
    fn from_str(s: &str) -> Result<Self> {
        ClassSpec::from_tag(s, None, None)
    }
}

fn singletons(n: usize) -> impl Iterator<Item = VertexSet> {
    (0..n).map(VertexSet::singleton)
}

/// Singletons plus the vertex set of every block.
pub fn predicted_block_graph(g: &Graph) -> Result<CenterSetFamily> {
    if !classify::is_block_graph(g) {
        return Err(Error::NotBlockGraph);
    }
    let blocks = g.block_decomposition().blocks;
    Ok(singletons(g.n()).chain(blocks).collect())
}

/// Singletons and `V` for `K_n`.
pub fn predicted_complete(n: usize) -> Result<CenterSetFamily> {
    if n == 0 {
        return Err(Error::BadParams("K_n needs n >= 1".into()));
    }
    Ok(singletons(n).chain([VertexSet::full(n)]).collect())
}

/// Singletons and the endpoints of every edge, for a tree.
pub fn predicted_tree(g: &Graph) -> Result<CenterSetFamily> {
    if g.edge_count() + 1 != g.n() {
        return Err(Error::ClassMismatch("tree".into()));
    }
    let edges = g.edges().map(|(u, v)| [u, v].into_iter().collect());
    Ok(singletons(g.n()).chain(edges).collect())
}

/// `V`, `X`, `Y`, singletons and all cross pairs `{x, y}` of `K_{m,n}`
/// with `X = 0..m`, `Y = m..m+n`.
pub fn predicted_complete_bipartite(m: usize, n: usize) -> Result<CenterSetFamily> {
    if m < 2 || n < 2 {
        return Err(Error::BadParams("K_{m,n} characterization needs m, n > 1".into()));
    }
    let total = m + n;
    let x = VertexSet::full(m);
    let y = VertexSet::full(total).difference(x);
    let cross = (0..m).flat_map(|a| (m..total).map(move |b| [a, b].into_iter().collect()));
    Ok(singletons(total).chain([VertexSet::full(total), x, y]).chain(cross).collect())
}

/// Singletons, `V \ {x}`, `V \ {y}`, `V \ {x, y}` and `V` for `K_n - xy`
/// with `x = n-2`, `y = n-1`.
pub fn predicted_kn_minus_e(n: usize) -> Result<CenterSetFamily> {
    if n < 4 {
        return Err(Error::BadParams("K_n - e characterization needs n >= 4".into()));
    }
    let v = VertexSet::full(n);
    let (x, y) = (VertexSet::singleton(n - 2), VertexSet::singleton(n - 1));
    Ok(singletons(n)
        .chain([v.difference(x), v.difference(y), v.difference(x.union(y)), v])
        .collect())
}

/// Center sets of the wheel on `n` vertices (rim `0..n-1`, hub `n-1`):
/// singletons, hub plus one rim vertex, hub plus a rim edge, hub plus a rim
/// path of length two, and for `n = 5` the two diagonals of the 4-rim with
/// the hub.
pub fn predicted_wheel(n: usize) -> Result<CenterSetFamily> {
    if n < 5 {
        return Err(Error::BadParams("wheel characterization needs n >= 5".into()));
    }
    let rim = n - 1;
    let hub = VertexSet::singleton(rim);
    let with_hub = |vs: &[usize]| vs.iter().copied().collect::<VertexSet>().union(hub);
    let mut sets: Vec<VertexSet> = singletons(n).collect();
    for i in 0..rim {
        let (prev, next) = ((i + rim - 1) % rim, (i + 1) % rim);
        sets.push(with_hub(&[i]));
        sets.push(with_hub(&[i, next]));
        sets.push(with_hub(&[prev, i, next]));
    }
    if n == 5 {
        sets.push(with_hub(&[0, 2]));
        sets.push(with_hub(&[1, 3]));
    }
    Ok(sets.into_iter().collect())
}

/// Center-set test for the odd cycle `C_n`: `a = V`, or `a` has no two
/// vertices at cyclic distance two.
pub fn odd_cycle_is_center_set(n: usize, a: VertexSet) -> Result<bool> {
    if n < 5 || n.is_multiple_of(2) || n > 63 {
        return Err(Error::BadParams(format!("odd cycle length must be odd in 5..=63, got {n}")));
    }
    if a.is_empty() || !a.is_subset(VertexSet::full(n)) {
        return Err(Error::BadParams("set must be a nonempty subset of the cycle".into()));
    }
    Ok(odd_cycle_predicate(n, a))
}

fn odd_cycle_predicate(n: usize, a: VertexSet) -> bool {
    let full = VertexSet::full(n).bits();
    let bits = a.bits();
    let shifted = ((bits >> 2) | (bits << (n - 2))) & full;
    bits == full || bits & shifted == 0
}

/// Center-set test for a symmetric even graph: `a = V`, or no closed
/// neighbourhood lies inside `a`.
pub fn symmetric_even_is_center_set(g: &Graph, a: VertexSet) -> Result<bool> {
    if !classify::is_symmetric_even(g) {
        return Err(Error::NotSymmetricEven);
    }
    g.check_set(a)?;
    if a.is_empty() {
        return Err(Error::EmptyProfile);
    }
    Ok(symmetric_even_predicate(g, a))
}

fn symmetric_even_predicate(g: &Graph, a: VertexSet) -> bool {
    a == g.vertices() || (0..g.n()).all(|x| !g.closed_neighborhood(x).is_subset(a))
}

/// S-center of a dominating profile in a symmetric even graph, computed as
/// the antipodes of the complement of `s`, and cross-checked against the
/// direct S-center.
///
/// `s = V` has an empty complement; its S-center is `V` (symmetric even
/// graphs are self-centered) and that is what is returned.
pub fn dominating_profile_center(g: &Graph, s: Profile) -> Result<VertexSet> {
    if !classify::is_symmetric_even(g) {
        return Err(Error::NotSymmetricEven);
    }
    let members = s.members();
    if !classify::is_dominating(g, members) {
        return Err(Error::NotDominating);
    }
    let direct = profile::s_center(g, s);
    if members == g.vertices() {
        return Ok(g.vertices());
    }
    let image = classify::profile_eccentric_image(g, members.complement(g.n()))?;
    if image != direct {
        return Err(Error::Counterexample(format!(
            "profile {members}: antipodes of complement {image} differ from S-center {direct}"
        )));
    }
    Ok(image)
}

/// Outcome of checking dominating-boundary duality for one profile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DbReport {
    pub s_in_db: bool,
    pub center: VertexSet,
    pub center_in_db: bool,
    pub round_trip_ok: bool,
}

/// For a symmetric even graph: `s` is dominating-boundary exactly when its
/// S-center `s'` is, and then the S-center of `s'` is `s` again.
pub fn db_duality_check(g: &Graph, s: Profile) -> Result<DbReport> {
    if !classify::is_symmetric_even(g) {
        return Err(Error::NotSymmetricEven);
    }
    let members = s.members();
    let center = profile::s_center(g, s);
    let back = profile::s_center(g, Profile::new(g, center)?);
    let report = DbReport {
        s_in_db: classify::is_dominating_boundary(g, members),
        center,
        center_in_db: classify::is_dominating_boundary(g, center),
        round_trip_ok: back == members,
    };
    if report.s_in_db != report.center_in_db || (report.s_in_db && !report.round_trip_ok) {
        return Err(Error::Counterexample(format!("duality fails for profile {members}: {report:?}")));
    }
    Ok(report)
}

/// Predicted-versus-enumerated comparison for one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub class: String,
    pub n: usize,
    pub predicted_count: usize,
    pub enumerated_count: usize,
    /// Predicted but never produced by any profile.
    pub missing: Vec<VertexSet>,
    /// Produced by some profile but not predicted.
    pub unexpected: Vec<VertexSet>,
    pub pass: bool,
}

fn ensure(cond: bool, spec: ClassSpec) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::ClassMismatch(spec.to_string()))
    }
}

fn filter_powerset(g: &Graph, keep: impl Fn(VertexSet) -> bool) -> CenterSetFamily {
    (1..=g.vertices().bits()).map(VertexSet::from_bits).filter(|&a| keep(a)).collect()
}

/// The family the characterization of `spec` predicts for `g`, after
/// checking that `g` belongs to the class.
pub fn predicted_family(g: &Graph, spec: ClassSpec, opts: EnumerationOptions) -> Result<CenterSetFamily> {
    let spec = spec.routed();
    match spec {
        ClassSpec::BlockGraph => predicted_block_graph(g),
        ClassSpec::Tree => predicted_tree(g),
        ClassSpec::Complete(n) => {
            ensure(g.n() == n && g.edge_count() == n * (n - 1) / 2, spec)?;
            predicted_complete(n)
        }
        ClassSpec::CompleteBipartite(m, n) => {
            ensure(*g == spec.canonical_graph()?, spec)?;
            predicted_complete_bipartite(m, n)
        }
        ClassSpec::KnMinusE(n) => {
            ensure(*g == spec.canonical_graph()?, spec)?;
            predicted_kn_minus_e(n)
        }
        ClassSpec::Wheel(n) => {
            ensure(*g == spec.canonical_graph()?, spec)?;
            predicted_wheel(n)
        }
        ClassSpec::OddCycle(n) => {
            ensure(*g == spec.canonical_graph()?, spec)?;
            opts.check(g)?;
            odd_cycle_is_center_set(n, VertexSet::singleton(0))?;
            Ok(filter_powerset(g, |a| odd_cycle_predicate(n, a)))
        }
        ClassSpec::SymmetricEven => {
            if !classify::is_symmetric_even(g) {
                return Err(Error::NotSymmetricEven);
            }
            opts.check(g)?;
            Ok(filter_powerset(g, |a| symmetric_even_predicate(g, a)))
        }
    }
}

/// Compares the predicted family of `spec` with exhaustive enumeration.
pub fn verify_class(g: &Graph, spec: ClassSpec, opts: EnumerationOptions) -> Result<VerificationReport> {
    opts.check(g)?;
    let predicted = predicted_family(g, spec, opts)?;
    let enumerated = profile::enumerate_center_sets(g, opts)?;
    let (missing, unexpected) = predicted.symmetric_difference(&enumerated);
    Ok(VerificationReport {
        class: spec.routed().to_string(),
        n: g.n(),
        predicted_count: predicted.count(),
        enumerated_count: enumerated.count(),
        pass: missing.is_empty() && unexpected.is_empty(),
        missing,
        unexpected,
    })
}
