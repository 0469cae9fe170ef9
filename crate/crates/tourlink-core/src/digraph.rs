//! Oriented-graph value types and the surgeries used by every construction:
//! duals, relabelings, consistent edge contraction, vertex expansion, gluing,
//! and completion of a partial orientation to a tournament.
//!
//! Vertices are `0..n` internally; JSON, DOT and compact cycle notation are
//! 1-based at the boundary.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::Error;

/// Maximum vertex count accepted by the bit-packed tournament storage.
pub const MAX_VERTICES: usize = 4096;

fn check_vertex(n: usize, v: usize) -> Result<(), Error> {
    if v >= n {
        return Err(Error::Domain(format!("vertex {v} out of range for n={n}")));
    }
    Ok(())
}

/// Index of the unordered pair `{i, j}` (`i < j`) in column-major order:
/// `(0,1), (0,2), (1,2), (0,3), ...`. Block `j` holds all pairs ending at `j`,
/// which is what makes canonicalization prefix-prunable.
#[inline]
pub fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// A complete oriented graph: exactly one arc per unordered vertex pair.
///
/// Orientation is a bit per pair, set iff the arc points low index -> high
/// index.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tournament {
    n: usize,
    bits: Vec<u64>,
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament(n={}, arcs=[", self.n)?;
        for (idx, (u, v)) in self.arcs().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}>{}", u + 1, v + 1)?;
        }
        write!(f, "])")
    }
}

impl Tournament {
    fn words(n: usize) -> usize {
        (n * (n - 1) / 2).div_ceil(64)
    }

    /// The transitive tournament: every arc points low -> high.
    pub fn transitive(n: usize) -> Result<Self, Error> {
        if !(3..=MAX_VERTICES).contains(&n) {
            return Err(Error::Domain(format!("tournament size {n} out of range")));
        }
        let mut t = Tournament {
            n,
            bits: vec![0; Self::words(n)],
        };
        for j in 1..n {
            for i in 0..j {
                t.set_low_high(i, j, true);
            }
        }
        Ok(t)
    }

    /// Build a tournament from an explicit arc list; every pair must be
    /// covered exactly once.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self, Error> {
        let mut t = Tournament::transitive(n)?;
        let mut seen = vec![false; n * (n - 1) / 2];
        for &(u, v) in arcs {
            check_vertex(n, u)?;
            check_vertex(n, v)?;
            if u == v {
                return Err(Error::Domain(format!("self-loop at vertex {}", u + 1)));
            }
            let idx = pair_index(u.min(v), u.max(v));
            if seen[idx] {
                return Err(Error::Domain(format!(
                    "pair {{{}, {}}} oriented twice",
                    u.min(v) + 1,
                    u.max(v) + 1
                )));
            }
            seen[idx] = true;
            t.set_low_high(u.min(v), u.max(v), u < v);
        }
        if let Some(idx) = seen.iter().position(|&s| !s) {
            return Err(Error::Domain(format!("pair index {idx} left unoriented")));
        }
        Ok(t)
    }

    /// Decode the column-major orientation bitstring produced by
    /// [`orient_bits`](Self::orient_bits).
    pub fn from_orient_bits(n: usize, code: u64) -> Result<Self, Error> {
        if !(3..=11).contains(&n) {
            return Err(Error::Domain(format!("bit decoding supports 3..=11, got {n}")));
        }
        let m = n * (n - 1) / 2;
        let mut t = Tournament {
            n,
            bits: vec![0; Self::words(n)],
        };
        for j in 1..n {
            for i in 0..j {
                let idx = pair_index(i, j);
                // Bit 0 of the code is the most significant (first) pair.
                let bit = (code >> (m - 1 - idx)) & 1 == 1;
                t.set_low_high(i, j, bit);
            }
        }
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn set_low_high(&mut self, i: usize, j: usize, low_to_high: bool) {
        let idx = pair_index(i, j);
        if low_to_high {
            self.bits[idx / 64] |= 1u64 << (idx % 64);
        } else {
            self.bits[idx / 64] &= !(1u64 << (idx % 64));
        }
    }

    #[inline]
    fn low_high(&self, i: usize, j: usize) -> bool {
        let idx = pair_index(i, j);
        self.bits[idx / 64] >> (idx % 64) & 1 == 1
    }

    /// True iff the arc points `u -> v`.
    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        debug_assert!(u != v && u < self.n && v < self.n);
        if u < v {
            self.low_high(u, v)
        } else {
            !self.low_high(v, u)
        }
    }

    /// The single arc on the pair `{u, v}`, as `(tail, head)`.
    pub fn arc_direction(&self, u: usize, v: usize) -> Result<(usize, usize), Error> {
        check_vertex(self.n, u)?;
        check_vertex(self.n, v)?;
        if u == v {
            return Err(Error::Domain(format!("no arc on the pair {{{0}, {0}}}", u + 1)));
        }
        Ok(if self.has_arc(u, v) { (u, v) } else { (v, u) })
    }

    /// All arcs, ordered by unordered pair.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |j| {
            (0..j).map(move |i| if self.low_high(i, j) { (i, j) } else { (j, i) })
        })
    }

    pub fn in_degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| u != v && self.has_arc(u, v)).count()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.n - 1 - self.in_degree(v)
    }

    /// Reverse every arc. An involution.
    pub fn dual(&self) -> Tournament {
        let mut t = self.clone();
        let m = self.n * (self.n - 1) / 2;
        for w in 0..t.bits.len() {
            t.bits[w] = !t.bits[w];
        }
        if !m.is_multiple_of(64) {
            let last = t.bits.len() - 1;
            t.bits[last] &= (1u64 << (m % 64)) - 1;
        }
        t
    }

    /// Image under a vertex bijection: arc `sigma(u) -> sigma(v)` iff arc `u -> v`.
    pub fn relabel(&self, sigma: &[usize]) -> Result<Tournament, Error> {
        check_bijection(self.n, sigma)?;
        let mut t = Tournament {
            n: self.n,
            bits: vec![0; self.bits.len()],
        };
        for (u, v) in self.arcs() {
            let (a, b) = (sigma[u], sigma[v]);
            t.set_low_high(a.min(b), a.max(b), a < b);
        }
        Ok(t)
    }

    /// Induced subtournament on `verts`; vertex `verts[i]` becomes `i`.
    pub fn restrict(&self, verts: &[usize]) -> Result<Tournament, Error> {
        if verts.len() < 3 {
            return Err(Error::Domain("restriction needs at least 3 vertices".into()));
        }
        let mut distinct = BTreeSet::new();
        for &v in verts {
            check_vertex(self.n, v)?;
            if !distinct.insert(v) {
                return Err(Error::Domain(format!("duplicate vertex {} in restriction", v + 1)));
            }
        }
        let mut t = Tournament {
            n: verts.len(),
            bits: vec![0; Self::words(verts.len())],
        };
        for j in 1..verts.len() {
            for i in 0..j {
                t.set_low_high(i, j, self.has_arc(verts[i], verts[j]));
            }
        }
        Ok(t)
    }

    /// The column-major orientation bitstring as one integer, first pair most
    /// significant. Only for `n <= 11` (55 bits).
    pub fn orient_bits(&self) -> Result<u64, Error> {
        let m = self.n * (self.n - 1) / 2;
        if m > 64 {
            return Err(Error::UnsupportedSize(self.n));
        }
        let mut code = 0u64;
        for j in 1..self.n {
            for i in 0..j {
                code = (code << 1) | u64::from(self.low_high(i, j));
            }
        }
        Ok(code)
    }

    /// Forget that every pair is oriented.
    pub fn as_oriented(&self) -> OrientedGraph {
        OrientedGraph {
            n: self.n,
            arcs: self.arcs().collect(),
        }
    }
}

fn check_bijection(n: usize, sigma: &[usize]) -> Result<(), Error> {
    if sigma.len() != n {
        return Err(Error::Domain(format!(
            "permutation length {} does not match n={n}",
            sigma.len()
        )));
    }
    let mut seen = vec![false; n];
    for &s in sigma {
        if s >= n || seen[s] {
            return Err(Error::Domain("not a bijection on 0..n".into()));
        }
        seen[s] = true;
    }
    Ok(())
}

/// An unoriented simple cycle given by its vertex labels, up to rotation and
/// reflection.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclePattern {
    verts: Vec<usize>,
}

impl fmt::Debug for CyclePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.verts {
            write!(f, "{}", v + 1)?;
        }
        Ok(())
    }
}

impl CyclePattern {
    pub fn new(verts: Vec<usize>) -> Result<Self, Error> {
        if verts.len() < 3 {
            return Err(Error::Domain(format!(
                "cycle pattern needs >= 3 vertices, got {}",
                verts.len()
            )));
        }
        let distinct: BTreeSet<_> = verts.iter().collect();
        if distinct.len() != verts.len() {
            return Err(Error::Domain("cycle pattern repeats a vertex".into()));
        }
        Ok(CyclePattern { verts })
    }

    pub fn verts(&self) -> &[usize] {
        &self.verts
    }

    #[allow(clippy::len_without_is_empty)] // a cycle pattern is never empty
    pub fn len(&self) -> usize {
        self.verts.len()
    }

    /// Consecutive pairs in the stored traversal direction, including the
    /// closing edge.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.verts.len();
        (0..k).map(move |i| (self.verts[i], self.verts[(i + 1) % k]))
    }

    pub fn contains(&self, v: usize) -> bool {
        self.verts.contains(&v)
    }

    pub fn is_disjoint(&self, other: &CyclePattern) -> bool {
        self.verts.iter().all(|v| !other.contains(*v))
    }

    /// Image under a label map.
    pub fn map(&self, sigma: &[usize]) -> Result<CyclePattern, Error> {
        let verts = self
            .verts
            .iter()
            .map(|&v| {
                sigma
                    .get(v)
                    .copied()
                    .ok_or_else(|| Error::Domain(format!("label {} outside map", v + 1)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        CyclePattern::new(verts)
    }

    /// Lexicographically least rotation/reflection starting at the minimum
    /// label; equal patterns canonicalize identically.
    pub fn canonical(&self) -> CyclePattern {
        let k = self.verts.len();
        let mut best: Option<Vec<usize>> = None;
        for start in 0..k {
            for dir in [1isize, -1] {
                let mut cand = Vec::with_capacity(k);
                for step in 0..k as isize {
                    let idx = (start as isize + dir * step).rem_euclid(k as isize);
                    cand.push(self.verts[idx as usize]);
                }
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        CyclePattern { verts: best.unwrap() }
    }
}

/// True iff some traversal direction of `p` realizes every consecutive pair
/// as a forward arc of `t`.
pub fn is_consistent(t: &Tournament, p: &CyclePattern) -> Result<bool, Error> {
    for &v in p.verts() {
        check_vertex(t.n(), v)?;
    }
    let fwd = p.edges().all(|(a, b)| t.has_arc(a, b));
    let bwd = p.edges().all(|(a, b)| t.has_arc(b, a));
    Ok(fwd || bwd)
}

/// True iff a partial orientation already contradicts *both* traversal
/// directions of `p`: no completion can make `p` consistent.
pub fn killed_by_partial(arcs: &[(usize, usize)], p: &CyclePattern) -> Result<bool, Error> {
    let mut set = BTreeSet::new();
    for &(u, v) in arcs {
        if u == v {
            return Err(Error::Domain(format!("self-loop at vertex {}", u + 1)));
        }
        if set.contains(&(v, u)) {
            return Err(Error::Domain(format!(
                "conflicting arcs on pair {{{}, {}}}",
                u.min(v) + 1,
                u.max(v) + 1
            )));
        }
        set.insert((u, v));
    }
    let fwd_dead = p.edges().any(|(a, b)| set.contains(&(b, a)));
    let bwd_dead = p.edges().any(|(a, b)| set.contains(&(a, b)));
    Ok(fwd_dead && bwd_dead)
}

/// A simple cycle with a designated traversal direction, checked against a
/// host tournament.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedCycle {
    verts: Vec<usize>,
}

impl DirectedCycle {
    /// Every consecutive pair must be a forward arc of `t`.
    pub fn in_tournament(t: &Tournament, verts: Vec<usize>) -> Result<Self, Error> {
        let pattern = CyclePattern::new(verts.clone())?;
        for (a, b) in pattern.edges() {
            check_vertex(t.n(), a)?;
            if !t.has_arc(a, b) {
                return Err(Error::Domain(format!(
                    "edge {} -> {} is not an arc of the tournament",
                    a + 1,
                    b + 1
                )));
            }
        }
        Ok(DirectedCycle { verts })
    }

    pub fn verts(&self) -> &[usize] {
        &self.verts
    }

    pub fn pattern(&self) -> CyclePattern {
        CyclePattern::new(self.verts.clone()).expect("directed cycle is a valid pattern")
    }
}

/// Arc orientation policy for [`OrientedGraph::complete_to_tournament`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CompletionPolicy {
    /// Every free pair gets the arc low index -> high index.
    #[default]
    LowToHigh,
    HighToLow,
}

/// A partial tournament: at most one arc per unordered pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedGraph {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
}

impl OrientedGraph {
    pub fn new(n: usize) -> Self {
        OrientedGraph {
            n,
            arcs: BTreeSet::new(),
        }
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self, Error> {
        let mut g = OrientedGraph::new(n);
        for &(u, v) in arcs {
            g.add_arc(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<(), Error> {
        check_vertex(self.n, u)?;
        check_vertex(self.n, v)?;
        if u == v {
            return Err(Error::Domain(format!("self-loop at vertex {}", u + 1)));
        }
        if self.arcs.contains(&(v, u)) {
            return Err(Error::Domain(format!(
                "pair {{{}, {}}} would carry both directions",
                u.min(v) + 1,
                u.max(v) + 1
            )));
        }
        self.arcs.insert((u, v));
        Ok(())
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }

    pub fn has_pair(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn neighbors(&self, v: usize) -> BTreeSet<usize> {
        self.arcs
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn out_neighbors(&self, v: usize) -> BTreeSet<usize> {
        self.arcs
            .iter()
            .filter_map(|&(a, b)| (a == v).then_some(b))
            .collect()
    }

    pub fn in_neighbors(&self, v: usize) -> BTreeSet<usize> {
        self.arcs
            .iter()
            .filter_map(|&(a, b)| (b == v).then_some(a))
            .collect()
    }

    /// Contract the arc `v -> w`, allowed only when `v` is a sink or `w` is a
    /// source in the graph minus that arc. The merged vertex keeps the lower
    /// of the two indices; higher vertices shift down by one. Returns the new
    /// graph and the old -> new vertex map.
    pub fn consistent_edge_contraction(
        &self,
        v: usize,
        w: usize,
    ) -> Result<(OrientedGraph, Vec<usize>), Error> {
        if !self.has_arc(v, w) {
            return Err(Error::Domain(format!(
                "arc {} -> {} not present",
                v + 1,
                w + 1
            )));
        }
        let v_sink = !self.arcs.iter().any(|&(a, b)| a == v && b != w);
        let w_source = !self.arcs.iter().any(|&(a, b)| b == w && a != v);
        if !v_sink && !w_source {
            return Err(Error::ContractionNotConsistent {
                v: v + 1,
                w: w + 1,
            });
        }
        let keep = v.min(w);
        let drop = v.max(w);
        let mut map = Vec::with_capacity(self.n);
        for old in 0..self.n {
            map.push(match old.cmp(&drop) {
                std::cmp::Ordering::Less => old,
                std::cmp::Ordering::Equal => keep,
                std::cmp::Ordering::Greater => old - 1,
            });
        }
        let mut g = OrientedGraph::new(self.n - 1);
        for &(a, b) in &self.arcs {
            if (a, b) == (v, w) {
                continue;
            }
            let (na, nb) = (map[a], map[b]);
            if na == nb {
                continue; // arc multiplicities collapse to one
            }
            if g.has_arc(nb, na) {
                return Err(Error::Domain(format!(
                    "contraction would orient pair {{{}, {}}} both ways",
                    na.min(nb) + 1,
                    na.max(nb) + 1
                )));
            }
            g.arcs.insert((na, nb));
        }
        Ok((g, map))
    }

    /// Replace `v` by the arc `d1 -> d2`. Neighbors in `in_side` attach by an
    /// arc into `d1`; neighbors in `out_side` receive an arc out of `d2`. The
    /// two sides must partition `v`'s neighborhood. `d1` reuses `v`'s index,
    /// `d2` is the new vertex `n`.
    pub fn vertex_expansion(
        &self,
        v: usize,
        in_side: &BTreeSet<usize>,
        out_side: &BTreeSet<usize>,
    ) -> Result<(OrientedGraph, usize, usize), Error> {
        check_vertex(self.n, v)?;
        let nbrs = self.neighbors(v);
        if !in_side.is_disjoint(out_side) {
            return Err(Error::Domain("expansion sides overlap".into()));
        }
        let union: BTreeSet<usize> = in_side.union(out_side).copied().collect();
        if union != nbrs {
            return Err(Error::Domain(
                "expansion sides do not partition the neighborhood".into(),
            ));
        }
        let (d1, d2) = (v, self.n);
        let mut g = OrientedGraph::new(self.n + 1);
        for &(a, b) in &self.arcs {
            if a != v && b != v {
                g.arcs.insert((a, b));
            }
        }
        g.add_arc(d1, d2)?;
        for &u in in_side {
            g.add_arc(u, d1)?;
        }
        for &u in out_side {
            g.add_arc(d2, u)?;
        }
        Ok((g, d1, d2))
    }

    /// Orient every free pair per the policy; existing arcs are preserved.
    pub fn complete_to_tournament(&self, policy: CompletionPolicy) -> Result<Tournament, Error> {
        let mut arcs: Vec<(usize, usize)> = self.arcs.iter().copied().collect();
        for j in 1..self.n {
            for i in 0..j {
                if !self.has_pair(i, j) {
                    arcs.push(match policy {
                        CompletionPolicy::LowToHigh => (i, j),
                        CompletionPolicy::HighToLow => (j, i),
                    });
                }
            }
        }
        Tournament::from_arcs(self.n, &arcs)
    }
}

/// Disjoint union of `graphs` with the given vertex classes identified.
///
/// Each class lists `(graph index, vertex)` members; classes must be disjoint.
/// Merged vertices come first in class order, then the remaining vertices of
/// each graph in order. Returns the glued graph and, per input graph, the
/// old -> new vertex map.
pub fn glue(
    graphs: &[OrientedGraph],
    identifications: &[Vec<(usize, usize)>],
) -> Result<(OrientedGraph, Vec<Vec<usize>>), Error> {
    let mut class_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (c, class) in identifications.iter().enumerate() {
        for &(g, v) in class {
            if g >= graphs.len() {
                return Err(Error::Domain(format!("glue refers to missing graph {g}")));
            }
            check_vertex(graphs[g].n(), v)?;
            if class_of.insert((g, v), c).is_some() {
                return Err(Error::Domain(format!(
                    "vertex {} of graph {g} appears in two merge classes",
                    v + 1
                )));
            }
        }
    }
    let mut maps: Vec<Vec<usize>> = Vec::with_capacity(graphs.len());
    let mut next = identifications.len();
    for (g, graph) in graphs.iter().enumerate() {
        let mut map = Vec::with_capacity(graph.n());
        for v in 0..graph.n() {
            if let Some(&c) = class_of.get(&(g, v)) {
                map.push(c);
            } else {
                map.push(next);
                next += 1;
            }
        }
        maps.push(map);
    }
    let mut out = OrientedGraph::new(next);
    for (g, graph) in graphs.iter().enumerate() {
        for (a, b) in graph.arcs() {
            let (na, nb) = (maps[g][a], maps[g][b]);
            if na == nb {
                return Err(Error::Domain(format!(
                    "glue collapses arc {} -> {} of graph {g} to a loop",
                    a + 1,
                    b + 1
                )));
            }
            if out.has_arc(nb, na) {
                return Err(Error::GlueConflict {
                    u: na.min(nb) + 1,
                    v: na.max(nb) + 1,
                });
            }
            out.arcs.insert((na, nb));
        }
    }
    Ok((out, maps))
}

// ---------------------------------------------------------------------------
// wire formats

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    arcs: Vec<[usize; 2]>,
}

fn arcs_json<I: Iterator<Item = (usize, usize)>>(n: usize, arcs: I) -> String {
    let g = GraphJson {
        n,
        arcs: arcs.map(|(u, v)| [u + 1, v + 1]).collect(),
    };
    serde_json::to_string(&g).expect("graph serialization cannot fail")
}

fn arcs_from_json(s: &str) -> Result<(usize, Vec<(usize, usize)>), Error> {
    let g: GraphJson = serde_json::from_str(s)?;
    let mut arcs = Vec::with_capacity(g.arcs.len());
    for [u, v] in g.arcs {
        if u == 0 || v == 0 {
            return Err(Error::Domain("JSON vertices are 1-based".into()));
        }
        arcs.push((u - 1, v - 1));
    }
    Ok((g.n, arcs))
}

impl Tournament {
    pub fn to_json(&self) -> String {
        arcs_json(self.n, self.arcs())
    }

    pub fn from_json(s: &str) -> Result<Self, Error> {
        let (n, arcs) = arcs_from_json(s)?;
        Tournament::from_arcs(n, &arcs)
    }

    pub fn to_dot(&self) -> String {
        to_dot(self.n, self.arcs())
    }
}

impl OrientedGraph {
    pub fn to_json(&self) -> String {
        arcs_json(self.n, self.arcs())
    }

    pub fn from_json(s: &str) -> Result<Self, Error> {
        let (n, arcs) = arcs_from_json(s)?;
        OrientedGraph::from_arcs(n, &arcs)
    }

    pub fn to_dot(&self) -> String {
        to_dot(self.n, self.arcs())
    }
}

fn to_dot<I: Iterator<Item = (usize, usize)>>(n: usize, arcs: I) -> String {
    use std::fmt::Write;
    let mut s = String::from("digraph {\n");
    for v in 0..n {
        writeln!(s, "  v{};", v + 1).unwrap();
    }
    for (u, v) in arcs {
        writeln!(s, "  v{} -> v{};", u + 1, v + 1).unwrap();
    }
    s.push_str("}\n");
    s
}
