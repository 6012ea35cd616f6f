//! S-eccentricity, S-centers and exhaustive center-set enumeration.
//!
//! The enumeration here is the brute-force oracle that the class
//! characterizations and counting formulas are checked against.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Default largest vertex count accepted by exhaustive enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 16;

/// A nonempty set of demand vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile(VertexSet);

impl Profile {
    pub fn new(g: &Graph, members: VertexSet) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::EmptyProfile);
        }
        g.check_set(members)?;
        Ok(Profile(members))
    }

    pub fn from_vertices(g: &Graph, vertices: &[usize]) -> Result<Self> {
        for &v in vertices {
            g.check_vertex(v)?;
        }
        Profile::new(g, vertices.iter().copied().collect())
    }

    pub fn members(self) -> VertexSet {
        self.0
    }
}

impl Serialize for Profile {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// Deduplicated center sets in canonical order (size, then lexicographic).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CenterSetFamily {
    sets: Vec<VertexSet>,
}

impl CenterSetFamily {
    pub fn count(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn contains(&self, a: VertexSet) -> bool {
        self.sets.binary_search(&a).is_ok()
    }

    /// `(self \ other, other \ self)`.
    pub fn symmetric_difference(&self, other: &Self) -> (Vec<VertexSet>, Vec<VertexSet>) {
        let only_self = self.sets.iter().filter(|s| !other.contains(**s)).copied().collect();
        let only_other = other.sets.iter().filter(|s| !self.contains(**s)).copied().collect();
        (only_self, only_other)
    }

    /// Number of member sets of each cardinality `0..=max`.
    pub fn size_histogram(&self) -> Vec<usize> {
        let top = self.sets.last().map_or(0, |s| s.len());
        let mut hist = vec![0; top + 1];
        for s in &self.sets {
            hist[s.len()] += 1;
        }
        hist
    }
}

impl FromIterator<VertexSet> for CenterSetFamily {
    fn from_iter<I: IntoIterator<Item = VertexSet>>(iter: I) -> Self {
        let sets: BTreeSet<VertexSet> = iter.into_iter().filter(|s| !s.is_empty()).collect();
        CenterSetFamily { sets: sets.into_iter().collect() }
    }
}

impl Serialize for CenterSetFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.sets.serialize(serializer)
    }
}

/// `max_{x in s} d(v, x)`.
pub fn profile_eccentricity(g: &Graph, s: Profile, v: usize) -> u32 {
    g.distances().max_distance_to(v, s.members())
}

/// S-center over a raw nonempty mask; no validation.
fn center_of_mask(g: &Graph, s: VertexSet) -> VertexSet {
    let dm = g.distances();
    let mut best = u32::MAX;
    let mut center = VertexSet::EMPTY;
    for v in 0..g.n() {
        let e = dm.max_distance_to(v, s);
        if e < best {
            best = e;
            center = VertexSet::singleton(v);
        } else if e == best {
            center.insert(v);
        }
    }
    center
}

/// Vertices of minimum S-eccentricity. Never empty.
pub fn s_center(g: &Graph, s: Profile) -> VertexSet {
    center_of_mask(g, s.members())
}

/// Controls the exhaustive subset searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Largest vertex count accepted.
    pub cap: usize,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions { cap: DEFAULT_ENUMERATION_CAP }
    }
}

impl EnumerationOptions {
    pub fn with_cap(cap: usize) -> Self {
        EnumerationOptions { cap }
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        // masks are u64 and the loop bound is 1 << n
        let hard = self.cap.min(63);
        if g.n() > hard {
            Err(Error::TooLarge { n: g.n(), cap: hard })
        } else {
            Ok(())
        }
    }
}

const CHUNK: u64 = 1 << 12;

/// Every S-center over all nonempty profiles `S ⊆ V`, including `S = V`.
///
/// The mask range is split into fixed chunks processed in parallel; the
/// result is canonical and does not depend on the worker count.
pub fn enumerate_center_sets(g: &Graph, opts: EnumerationOptions) -> Result<CenterSetFamily> {
    opts.check(g)?;
    let end = 1u64 << g.n();
    let chunks = end.div_ceil(CHUNK);
    let found: HashSet<u64> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = (c * CHUNK).max(1);
            let hi = ((c + 1) * CHUNK).min(end);
            (lo..hi).map(|m| center_of_mask(g, VertexSet::from_bits(m)).bits()).collect::<HashSet<_>>()
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(found.into_iter().map(VertexSet::from_bits).collect())
}

/// `cn(G)`, the number of distinct center sets.
pub fn center_number(g: &Graph, opts: EnumerationOptions) -> Result<usize> {
    enumerate_center_sets(g, opts).map(|f| f.count())
}

/// First profile whose S-center is exactly `a`, or `None` when `a` is not a
/// center set. Profiles are tried by increasing size, and within a size by
/// increasing bitmask value, so a singleton `{v}` is its own witness.
pub fn is_center_set(g: &Graph, a: VertexSet, opts: EnumerationOptions) -> Result<Option<Profile>> {
    opts.check(g)?;
    g.check_set(a)?;
    if a.is_empty() {
        return Err(Error::EmptyProfile);
    }
    Ok((1..=g.n())
        .flat_map(|k| masks_of_size(g.n(), k))
        .map(VertexSet::from_bits)
        .find(|&s| center_of_mask(g, s) == a)
        .map(Profile))
}

/// The `k`-bit masks below `2^n` in increasing order (Gosper's hack).
fn masks_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let end = 1u64 << n;
    let first = (1u64 << k) - 1;
    std::iter::successors(Some(first), |&m| {
        let c = m & m.wrapping_neg();
        let r = m + c;
        Some((((r ^ m) >> 2) / c) | r)
    })
    .take_while(move |&m| m < end)
}
