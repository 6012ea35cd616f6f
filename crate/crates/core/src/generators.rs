//! Graph family constructors and the fixed desk corpus used by the test
//! suites.
//!
//! Seeded generators draw from SplitMix64 (state initialised to the seed,
//! increment `0x9E3779B97F4A7C15`, output mix constants `0xBF58476D1CE4E5B9`
//! and `0x94D049BB133111EB`). A bounded draw `below(k)` is the high 64 bits of
//! `next_u64() * k`. Both are trivial to reproduce in other languages.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::characterize::ClassSpec;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Seed for the randomized generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Seed(pub u64);

struct Rng(SplitMix64);

impl Rng {
    fn new(seed: Seed) -> Self {
        Rng(SplitMix64::seed_from_u64(seed.0))
    }

    fn below(&mut self, bound: u64) -> u64 {
        ((self.0.next_u64() as u128 * bound as u128) >> 64) as u64
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParams(msg.into())
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(bad("path needs at least one vertex"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(bad("cycle needs at least three vertices"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(bad("complete graph needs at least one vertex"));
    }
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, &edges)
}

/// `K_{m,n}` with parts `X = 0..m` and `Y = m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(bad("both parts of K_{m,n} must be nonempty"));
    }
    let edges: Vec<_> = (0..m).flat_map(|x| (m..m + n).map(move |y| (x, y))).collect();
    Graph::new(m + n, &edges)
}

/// Star on `n` vertices, `K_{1,n-1}`, with the hub at 0.
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(bad("star needs at least two vertices"));
    }
    complete_bipartite(1, n - 1)
}

/// Wheel on `n` vertices: rim cycle `0..n-1` plus hub `n-1`.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(bad("wheel needs at least four vertices"));
    }
    let rim = n - 1;
    let mut edges: Vec<_> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
    edges.extend((0..rim).map(|i| (i, rim)));
    Graph::new(n, &edges)
}

/// `K_n` minus the edge between vertices `n-2` and `n-1`.
pub fn kn_minus_e(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(bad("K_n - e needs at least three vertices"));
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&e| e != (n - 2, n - 1))
        .collect();
    Graph::new(n, &edges)
}

/// `Q_d`; vertex labels are the `d`-bit words.
pub fn hypercube(d: usize) -> Result<Graph> {
    if d == 0 || d > 6 {
        return Err(bad("hypercube dimension must be in 1..=6"));
    }
    let n = 1usize << d;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b))))
        .filter(|&(u, v)| u < v)
        .collect();
    Graph::new(n, &edges)
}

/// Uniform labelled tree on `n` vertices by decoding a random Prüfer
/// sequence.
pub fn random_tree(n: usize, seed: Seed) -> Result<Graph> {
    match n {
        0 => return Err(bad("tree needs at least one vertex")),
        1 => return Graph::new(1, &[]),
        2 => return Graph::new(2, &[(0, 1)]),
        _ => {}
    }
    let mut rng = Rng::new(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.below(n as u64) as usize).collect();

    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf.min(c), leaf.max(c)));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges)
}

/// Glues `blocks` random cliques, each of size `2..=max_block`, in a tree
/// pattern: every new clique shares exactly one uniformly chosen existing
/// vertex. `random_block_graph(1, k, _)` with `k == 1` is `K_1`.
pub fn random_block_graph(blocks: usize, max_block: usize, seed: Seed) -> Result<Graph> {
    if blocks == 0 {
        return Err(bad("need at least one block"));
    }
    if max_block == 1 && blocks == 1 {
        return Graph::new(1, &[]);
    }
    if max_block < 2 {
        return Err(bad("blocks must have at least two vertices"));
    }
    let mut rng = Rng::new(seed);
    let mut n = 0usize;
    let mut edges = Vec::new();
    for b in 0..blocks {
        let size = 2 + rng.below((max_block - 1) as u64) as usize;
        let mut members = Vec::with_capacity(size);
        if b > 0 {
            members.push(rng.below(n as u64) as usize);
        }
        while members.len() < size {
            members.push(n);
            n += 1;
        }
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    Graph::new(n, &edges)
}

/// Erdős–Rényi `G(n, num/den)` redrawn until connected, at most
/// `RANDOM_CONNECTED_ATTEMPTS` times.
pub fn random_connected(n: usize, num: u64, den: u64, seed: Seed) -> Result<Graph> {
    if n == 0 || den == 0 || num > den {
        return Err(bad("need n >= 1 and 0 <= num/den <= 1"));
    }
    let mut rng = Rng::new(seed);
    for _ in 0..RANDOM_CONNECTED_ATTEMPTS {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.below(den) < num {
                    edges.push((u, v));
                }
            }
        }
        match Graph::new(n, &edges) {
            Ok(g) => return Ok(g),
            Err(Error::Disconnected) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenerationFailed(RANDOM_CONNECTED_ATTEMPTS))
}

pub const RANDOM_CONNECTED_ATTEMPTS: usize = 1000;

/// One named instance of the desk corpus.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub label: String,
    pub graph: Graph,
    /// The most specific class characterization that applies, if any.
    pub class: Option<ClassSpec>,
}

/// Seeds for the random members of the desk corpus.
pub const CORPUS_TREE_SEEDS: [u64; 5] = [11, 23, 37, 41, 59];
pub const CORPUS_BLOCK_SEEDS: [u64; 5] = [101, 202, 303, 404, 505];

/// The fixed corpus: cycles 3..=10, paths 2..=10, K_2..=K_8, K_{m,n} for
/// 1 <= m <= n <= 5, wheels on 5..=9 vertices, Q_1..=Q_3, K_n - e for
/// 4..=8, five seeded random trees and five seeded random block graphs.
pub fn desk_corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    let mut push = |label: String, graph: Result<Graph>, class: Option<ClassSpec>| {
        out.push(CorpusEntry { label, graph: graph.expect("corpus parameters are valid"), class });
    };

    for n in 3..=10 {
        let class = match n {
            3 => ClassSpec::Complete(3),
            _ if n % 2 == 1 => ClassSpec::OddCycle(n),
            _ => ClassSpec::SymmetricEven,
        };
        push(format!("C{n}"), cycle(n), Some(class));
    }
    for n in 2..=10 {
        push(format!("P{n}"), path(n), Some(ClassSpec::Tree));
    }
    for n in 2..=8 {
        push(format!("K{n}"), complete(n), Some(ClassSpec::Complete(n)));
    }
    for m in 1..=5 {
        for n in m..=5 {
            let class = if m == 1 { ClassSpec::Tree } else { ClassSpec::CompleteBipartite(m, n) };
            push(format!("K{m},{n}"), complete_bipartite(m, n), Some(class));
        }
    }
    for n in 5..=9 {
        push(format!("W{n}"), wheel(n), Some(ClassSpec::Wheel(n)));
    }
    for d in 1..=3 {
        push(format!("Q{d}"), hypercube(d), Some(ClassSpec::SymmetricEven));
    }
    for n in 4..=8 {
        push(format!("K{n}-e"), kn_minus_e(n), Some(ClassSpec::KnMinusE(n)));
    }
    for (i, &s) in CORPUS_TREE_SEEDS.iter().enumerate() {
        let n = 6 + i;
        push(format!("tree{n}-seed{s}"), random_tree(n, Seed(s)), Some(ClassSpec::Tree));
    }
    for (i, &s) in CORPUS_BLOCK_SEEDS.iter().enumerate() {
        let blocks = 2 + i % 2;
        push(
            format!("block{blocks}x4-seed{s}"),
            random_block_graph(blocks, 4, Seed(s)),
            Some(ClassSpec::BlockGraph),
        );
    }
    out
}
