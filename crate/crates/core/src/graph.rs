//! Simple connected undirected graphs, hop distances, classical
//! eccentricity/center machinery and block decomposition.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Hard limit on vertex count imposed by the `u64` set representation.
pub const MAX_VERTICES: usize = 64;

/// All-pairs hop distances of a connected graph.
///
/// Besides the raw table this keeps, for each vertex `v` and radius `r`, the
/// ball `{u : d(v, u) <= r}`. S-eccentricities are then a containment test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
    balls: Vec<Vec<VertexSet>>,
}

impl DistanceMatrix {
    fn from_adjacency(adj: &[VertexSet]) -> Result<Self> {
        let n = adj.len();
        let mut d = vec![u32::MAX; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            row[s] = 0;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for w in adj[u] {
                    if row[w] == u32::MAX {
                        row[w] = row[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            if row.contains(&u32::MAX) {
                return Err(Error::Disconnected);
            }
        }

        let balls = (0..n)
            .map(|v| {
                let row = &d[v * n..(v + 1) * n];
                let ecc = *row.iter().max().unwrap() as usize;
                let mut layers = vec![VertexSet::EMPTY; ecc + 1];
                for (u, &du) in row.iter().enumerate() {
                    layers[du as usize].insert(u);
                }
                let mut acc = VertexSet::EMPTY;
                layers
                    .into_iter()
                    .map(|layer| {
                        acc = acc.union(layer);
                        acc
                    })
                    .collect()
            })
            .collect();

        Ok(DistanceMatrix { n, d, balls })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// `{u : d(v, u) <= r}`; the whole vertex set once `r` reaches `e(v)`.
    pub fn ball(&self, v: usize, r: u32) -> VertexSet {
        let layers = &self.balls[v];
        layers[(r as usize).min(layers.len() - 1)]
    }

    /// Smallest `r` with `s` inside the ball of radius `r` around `v`,
    /// i.e. `max_{x in s} d(v, x)`. Returns 0 for the empty set.
    #[inline]
    pub fn max_distance_to(&self, v: usize, s: VertexSet) -> u32 {
        self.balls[v]
            .iter()
            .position(|&ball| s.is_subset(ball))
            .expect("last ball is the full vertex set") as u32
    }
}

/// Maximal 2-connected pieces (or bridges, or an isolated K_1) and the cut
/// vertices joining them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
}

impl BlockDecomposition {
    /// Index of a block containing all of `s`, if one exists.
    pub fn block_containing(&self, s: VertexSet) -> Option<usize> {
        self.blocks.iter().position(|&b| s.is_subset(b))
    }
}

/// An immutable simple, undirected, connected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    dist: DistanceMatrix,
    ecc: Vec<u32>,
}

impl Graph {
    /// Validates and builds a graph. Loops, duplicate edges, out-of-range
    /// endpoints and disconnected inputs are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidEdge { u, v, reason: "endpoint out of range" });
            }
            if u == v {
                return Err(Error::InvalidEdge { u, v, reason: "self-loop" });
            }
            if adj[u].contains(v) {
                return Err(Error::InvalidEdge { u, v, reason: "duplicate edge" });
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let dist = DistanceMatrix::from_adjacency(&adj)?;
        let ecc = (0..n).map(|v| *dist.row(v).iter().max().unwrap()).collect();
        Ok(Graph { adj, dist, ecc })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// `N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n() })
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.max() {
            Some(v) if v >= self.n() => Err(Error::InvalidVertex { vertex: v, n: self.n() }),
            _ => Ok(()),
        }
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    pub fn distance(&self, u: usize, v: usize) -> u32 {
        self.dist.get(u, v)
    }

    pub fn eccentricity(&self, v: usize) -> u32 {
        self.ecc[v]
    }

    pub fn eccentricities(&self) -> &[u32] {
        &self.ecc
    }

    pub fn radius(&self) -> u32 {
        *self.ecc.iter().min().unwrap()
    }

    pub fn diameter(&self) -> u32 {
        *self.ecc.iter().max().unwrap()
    }

    /// Vertices of minimum eccentricity.
    pub fn center(&self) -> VertexSet {
        let r = self.radius();
        (0..self.n()).filter(|&v| self.ecc[v] == r).collect()
    }

    /// `{u : d(v, u) = e(v)}`.
    pub fn eccentric_vertices(&self, v: usize) -> VertexSet {
        let e = self.ecc[v];
        let row = self.dist.row(v);
        (0..self.n()).filter(|&u| row[u] == e).collect()
    }

    /// Whether `s` induces a connected subgraph. The empty set does not.
    pub fn induces_connected(&self, s: VertexSet) -> bool {
        let Some(start) = s.iter().next() else {
            return false;
        };
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v].intersection(s));
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen == s
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            if p >= n || seen.contains(p) {
                return Err(Error::BadParams("relabeling is not a permutation".into()));
            }
            seen.insert(p);
        }
        if perm.len() != n {
            return Err(Error::BadParams("relabeling has the wrong length".into()));
        }
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::new(n, &edges)
    }

    /// Biconnected components via the lowpoint DFS with an edge stack.
    pub fn block_decomposition(&self) -> BlockDecomposition {
        let n = self.n();
        if n == 1 {
            return BlockDecomposition {
                blocks: vec![VertexSet::singleton(0)],
                cut_vertices: VertexSet::EMPTY,
            };
        }

        struct Dfs<'a> {
            g: &'a Graph,
            disc: Vec<u32>,
            low: Vec<u32>,
            time: u32,
            stack: Vec<(usize, usize)>,
            blocks: Vec<VertexSet>,
            cut: VertexSet,
        }

        impl Dfs<'_> {
            fn visit(&mut self, u: usize, parent: Option<usize>) {
                self.time += 1;
                self.disc[u] = self.time;
                self.low[u] = self.time;
                let mut children = 0;
                for w in self.g.adj[u] {
                    if self.disc[w] == 0 {
                        children += 1;
                        self.stack.push((u, w));
                        self.visit(w, Some(u));
                        self.low[u] = self.low[u].min(self.low[w]);
                        if self.low[w] >= self.disc[u] {
                            if parent.is_some() {
                                self.cut.insert(u);
                            }
                            let mut block = VertexSet::EMPTY;
                            while let Some((a, b)) = self.stack.pop() {
                                block.insert(a);
                                block.insert(b);
                                if (a, b) == (u, w) {
                                    break;
                                }
                            }
                            self.blocks.push(block);
                        }
                    } else if Some(w) != parent && self.disc[w] < self.disc[u] {
                        self.stack.push((u, w));
                        self.low[u] = self.low[u].min(self.disc[w]);
                    }
                }
                if parent.is_none() && children > 1 {
                    self.cut.insert(u);
                }
            }
        }

        let mut dfs = Dfs {
            g: self,
            disc: vec![0; n],
            low: vec![0; n],
            time: 0,
            stack: Vec::new(),
            blocks: Vec::new(),
            cut: VertexSet::EMPTY,
        };
        dfs.visit(0, None);
        let mut blocks = dfs.blocks;
        blocks.sort();
        BlockDecomposition { blocks, cut_vertices: dfs.cut }
    }
}

/// Parses the edge-list text format: a header line `n m`, then `m` lines
/// `u v` with 0-indexed endpoints. Blank lines and lines starting with `#`
/// are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    fn two_numbers(line: usize, l: &str) -> Result<(usize, usize)> {
        let fields: Vec<&str> = l.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse { line, msg: format!("expected two integers, got {l:?}") });
        }
        let parse = |f: &str| {
            f.parse::<usize>()
                .map_err(|e| Error::Parse { line, msg: format!("{f:?}: {e}") })
        };
        Ok((parse(fields[0])?, parse(fields[1])?))
    }

    let (line, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
    let (n, m) = two_numbers(line, header)?;
    let edges = lines.map(|(line, l)| two_numbers(line, l)).collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(Error::Parse {
            line,
            msg: format!("header declares {m} edges but {} were given", edges.len()),
        });
    }
    Graph::new(n, &edges)
}

/// Inverse of [`parse_edge_list`]; edges are written with `u < v` in
/// lexicographic order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
