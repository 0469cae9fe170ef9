//! Deterministic generators for the explicit tournament constructions, each
//! paired with a structural validator checking exactly the orientation
//! properties the corresponding argument consumes.
//!
//! Free pairs are always completed with the low -> high policy, so builds are
//! reproducible byte for byte.

use std::collections::{BTreeMap, BTreeSet};

use crate::digraph::{
    glue, CompletionPolicy, OrientedGraph, Tournament,
};
use crate::Error;

/// A generated graph with its construction arcs, its completion to a
/// tournament, and a map from role names (`x1`, `a2`, `d1`, `alpha`, ...)
/// to vertex ids.
#[derive(Clone, Debug)]
pub struct NamedConstruction {
    pub name: String,
    /// Construction arcs only, before completion.
    pub core: OrientedGraph,
    pub tournament: Tournament,
    pub roles: BTreeMap<String, usize>,
    /// Free-form records, e.g. which copy reverses the shared-edge
    /// convention.
    pub notes: Vec<String>,
}

impl NamedConstruction {
    pub fn role(&self, name: &str) -> usize {
        *self
            .roles
            .get(name)
            .unwrap_or_else(|| panic!("construction {} has no role {name}", self.name))
    }

    fn fail(&self, reason: impl Into<String>) -> Error {
        Error::ValidationFailed {
            name: self.name.clone(),
            reason: reason.into(),
        }
    }
}

/// Incremental builder for literal constructions: vertices are created on
/// first mention and remembered by role name.
struct Builder {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
    arcs: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            names: Vec::new(),
            index: BTreeMap::new(),
            arcs: Vec::new(),
        }
    }

    fn vertex(&mut self, name: &str) -> usize {
        if let Some(&v) = self.index.get(name) {
            return v;
        }
        let v = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), v);
        v
    }

    fn arc(&mut self, from: &str, to: &str) {
        let f = self.vertex(from);
        let t = self.vertex(to);
        self.arcs.push((f, t));
    }

    fn finish(self, name: &str) -> Result<NamedConstruction, Error> {
        let core = OrientedGraph::from_arcs(self.names.len(), &self.arcs)?;
        let tournament = core.complete_to_tournament(CompletionPolicy::LowToHigh)?;
        Ok(NamedConstruction {
            name: name.to_string(),
            core,
            tournament,
            roles: self.index,
            notes: Vec::new(),
        })
    }
}

fn arc_or(t: &Tournament, u: usize, v: usize, c: &NamedConstruction, what: &str) -> Result<(), Error> {
    if t.has_arc(u, v) {
        Ok(())
    } else {
        Err(c.fail(format!("missing arc {what}: {} -> {}", u + 1, v + 1)))
    }
}

// ---------------------------------------------------------------------------
// the 8-vertex linked tournament

/// The 8-vertex tournament built on an oriented `K_{3,3,2}`: arcs from `x`
/// and `y` to every `a_i`, from every `b_j` to `x` and `y`, and from every
/// `a_i` to every `b_j`.
pub fn build_il8() -> Result<NamedConstruction, Error> {
    let mut b = Builder::new();
    for v in ["x", "y", "a1", "a2", "a3", "b1", "b2", "b3"] {
        b.vertex(v);
    }
    for ai in ["a1", "a2", "a3"] {
        b.arc("x", ai);
        b.arc("y", ai);
        for bj in ["b1", "b2", "b3"] {
            b.arc(ai, bj);
        }
    }
    for bj in ["b1", "b2", "b3"] {
        b.arc(bj, "x");
        b.arc(bj, "y");
    }
    b.finish("il8")
}

/// All 18 triangles `(x, a_i, b_j)` and `(y, a_k, b_l)` must be consistently
/// oriented.
pub fn validate_il8(t: &Tournament, roles: &BTreeMap<String, usize>) -> Result<(), Error> {
    let c = NamedConstruction {
        name: "il8".into(),
        core: OrientedGraph::new(0),
        tournament: t.clone(),
        roles: roles.clone(),
        notes: Vec::new(),
    };
    for apex in ["x", "y"] {
        let ap = c.role(apex);
        for i in 1..=3 {
            for j in 1..=3 {
                let a = c.role(&format!("a{i}"));
                let bv = c.role(&format!("b{j}"));
                arc_or(t, ap, a, &c, "apex -> a")?;
                arc_or(t, a, bv, &c, "a -> b")?;
                arc_or(t, bv, ap, &c, "b -> apex")?;
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// the 12-vertex knotted tournament

/// The 12-vertex tournament whose every embedding yields the ring-of-four
/// witness: transitive order on the `x`/`y` block, with the `a` and `b`
/// blocks wired so every triangle ring can be closed.
pub fn build_ik12() -> Result<NamedConstruction, Error> {
    let mut b = Builder::new();
    let xs = ["x1", "x2", "x3"];
    let ys = ["y1", "y2", "y3"];
    let avs = ["a1", "a2", "a3"];
    let bvs = ["b1", "b2", "b3"];
    for v in xs.iter().chain(&ys).chain(&avs).chain(&bvs) {
        b.vertex(v);
    }
    for (i, xi) in xs.iter().enumerate() {
        for yj in &ys {
            b.arc(xi, yj);
        }
        for xj in &xs[i + 1..] {
            b.arc(xi, xj);
        }
    }
    for (i, yi) in ys.iter().enumerate() {
        for yj in &ys[i + 1..] {
            b.arc(yi, yj);
        }
        for aj in &avs {
            b.arc(yi, aj);
        }
    }
    for ai in &avs {
        b.arc("x3", ai);
        for bj in &bvs {
            b.arc(ai, bj);
        }
    }
    for bi in &bvs {
        b.arc("y3", bi);
        for xj in &xs {
            b.arc(bi, xj);
        }
        b.arc(bi, "y1");
    }
    b.finish("ik12")
}

/// Structural checks consumed by the ring argument: the `x`/`y` block is
/// transitive with `y3` a sink of every triangle containing it, every `b_i`
/// beats every `x_s`, and every possible ring-exit vertex beats every `a_j`.
pub fn validate_ik12(t: &Tournament, roles: &BTreeMap<String, usize>) -> Result<(), Error> {
    let c = NamedConstruction {
        name: "ik12".into(),
        core: OrientedGraph::new(0),
        tournament: t.clone(),
        roles: roles.clone(),
        notes: Vec::new(),
    };
    let k6: Vec<usize> = ["x1", "x2", "x3", "y1", "y2", "y3"]
        .iter()
        .map(|r| c.role(r))
        .collect();
    let y3 = c.role("y3");
    for i in 0..6 {
        for j in i + 1..6 {
            for k in j + 1..6 {
                let tri = [k6[i], k6[j], k6[k]];
                let has_source = tri
                    .iter()
                    .any(|&s| tri.iter().all(|&o| o == s || t.has_arc(s, o)));
                let has_sink = tri
                    .iter()
                    .any(|&s| tri.iter().all(|&o| o == s || t.has_arc(o, s)));
                if !has_source || !has_sink {
                    return Err(c.fail("a triangle of the x/y block is a directed cycle"));
                }
                if tri.contains(&y3) && !tri.iter().all(|&o| o == y3 || t.has_arc(o, y3)) {
                    return Err(c.fail("y3 is not a sink of a triangle containing it"));
                }
            }
        }
    }
    for i in 1..=3 {
        let bi = c.role(&format!("b{i}"));
        for s in ["x1", "x2", "x3"] {
            arc_or(t, bi, c.role(s), &c, "b_i -> x_s")?;
        }
    }
    for exit in ["x3", "y1", "y2"] {
        for j in 1..=3 {
            arc_or(t, c.role(exit), c.role(&format!("a{j}")), &c, "exit -> a_j")?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// ring-of-four witness

/// A triangle of the witness ring: transitively oriented in the host
/// tournament, decomposing into the two consistent paths `source -> sink` and
/// `source -> mid -> sink`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessTriangle {
    pub source: usize,
    pub mid: usize,
    pub sink: usize,
}

impl WitnessTriangle {
    pub fn new(source: usize, mid: usize, sink: usize) -> Self {
        WitnessTriangle { source, mid, sink }
    }

    fn verts(&self) -> [usize; 3] {
        [self.source, self.mid, self.sink]
    }
}

/// Build the ring of four triangles with identified junctions: delete every
/// other arc and contract each connector arc by a consistent edge
/// contraction. Connector `i` runs from the sink of triangle `i` to the
/// source of triangle `i + 1`; `None` means the two triangles already share
/// that junction vertex.
///
/// Every violated precondition surfaces as a witness failure: it signals a
/// bad triangle/connector selection, not an embedding fact.
pub fn build_d4_witness(
    t: &Tournament,
    triangles: &[WitnessTriangle; 4],
    connectors: &[Option<(usize, usize)>; 4],
) -> Result<OrientedGraph, Error> {
    for tri in triangles {
        for (a, b) in [
            (tri.source, tri.mid),
            (tri.mid, tri.sink),
            (tri.source, tri.sink),
        ] {
            if !t.has_arc(a, b) {
                return Err(Error::WitnessFailure(format!(
                    "triangle {:?} is not transitively oriented: missing {} -> {}",
                    tri.verts(),
                    a + 1,
                    b + 1
                )));
            }
        }
    }
    // junction sharing is allowed only between consecutive triangles, and
    // only at sink_i = source_{i+1} when the connector is absent
    for i in 0..4 {
        let next = (i + 1) % 4;
        let (ti, tn) = (&triangles[i], &triangles[next]);
        let shared: Vec<usize> = ti
            .verts()
            .iter()
            .copied()
            .filter(|v| tn.verts().contains(v))
            .collect();
        match connectors[i] {
            None => {
                if shared != vec![ti.sink] || ti.sink != tn.source {
                    return Err(Error::WitnessFailure(format!(
                        "triangles {i} and {next} must share exactly the junction sink/source"
                    )));
                }
            }
            Some((a, b)) => {
                if !shared.is_empty() {
                    return Err(Error::WitnessFailure(format!(
                        "triangles {i} and {next} share a vertex but a connector was given"
                    )));
                }
                if a != ti.sink || b != tn.source {
                    return Err(Error::WitnessFailure(format!(
                        "connector {i} must run sink -> source, got {} -> {}",
                        a + 1,
                        b + 1
                    )));
                }
                if !t.has_arc(a, b) {
                    return Err(Error::WitnessFailure(format!(
                        "connector arc {} -> {} is not in the tournament",
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
    }
    // non-consecutive triangles must be disjoint
    for i in 0..4 {
        for j in i + 1..4 {
            let consecutive = (i + 1) % 4 == j || (j + 1) % 4 == i;
            if !consecutive
                && triangles[i]
                    .verts()
                    .iter()
                    .any(|v| triangles[j].verts().contains(v))
            {
                return Err(Error::WitnessFailure(format!(
                    "non-consecutive triangles {i} and {j} share a vertex"
                )));
            }
        }
    }

    // reindex the used vertices and keep only triangle + connector arcs
    let mut verts: BTreeSet<usize> = BTreeSet::new();
    for tri in triangles {
        verts.extend(tri.verts());
    }
    let index: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut g = OrientedGraph::new(verts.len());
    for tri in triangles {
        for (a, b) in [
            (tri.source, tri.mid),
            (tri.mid, tri.sink),
            (tri.source, tri.sink),
        ] {
            if !g.has_arc(index[&a], index[&b]) {
                g.add_arc(index[&a], index[&b])
                    .map_err(|e| Error::WitnessFailure(e.to_string()))?;
            }
        }
    }
    let mut pending: Vec<(usize, usize)> = Vec::new();
    for conn in connectors.iter().flatten() {
        g.add_arc(index[&conn.0], index[&conn.1])
            .map_err(|e| Error::WitnessFailure(e.to_string()))?;
        pending.push((index[&conn.0], index[&conn.1]));
    }
    // contract connectors; every contraction must satisfy the sink/source
    // condition, and each one renumbers the remaining vertices
    while let Some((v, w)) = pending.pop() {
        let (next, map) = g
            .consistent_edge_contraction(v, w)
            .map_err(|e| Error::WitnessFailure(e.to_string()))?;
        g = next;
        for p in pending.iter_mut() {
            *p = (map[p.0], map[p.1]);
        }
    }
    if g.n() != 8 || g.arc_count() != 12 {
        return Err(Error::WitnessFailure(format!(
            "contracted witness has {} vertices and {} arcs, expected 8 and 12",
            g.n(),
            g.arc_count()
        )));
    }
    Ok(g)
}

/// A ring selection: four witness triangles and their connector arcs
/// (`None` where consecutive triangles share the junction vertex).
pub type WitnessSelection = ([WitnessTriangle; 4], [Option<(usize, usize)>; 4]);

/// Every admissible triangle/connector selection in the 12-vertex
/// construction: the ten disjoint triangle pairs of the transitive `x`/`y`
/// block, the nine `(y3, a_m, b_n)` closing triangles, and the two disjoint
/// split triangles of the `a`/`b` block.
pub fn ik12_witness_choices(c: &NamedConstruction) -> Vec<WitnessSelection> {
    let t = &c.tournament;
    let k6: Vec<usize> = ["x1", "x2", "x3", "y1", "y2", "y3"]
        .iter()
        .map(|r| c.role(r))
        .collect();
    let y3 = c.role("y3");
    let avs: Vec<usize> = (1..=3).map(|i| c.role(&format!("a{i}"))).collect();
    let bvs: Vec<usize> = (1..=3).map(|i| c.role(&format!("b{i}"))).collect();

    let order = |tri: &[usize; 3]| -> WitnessTriangle {
        // the x/y block is transitive, so sort by beats-relation
        let mut v = *tri;
        v.sort_by(|&a, &b| {
            if t.has_arc(a, b) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        WitnessTriangle::new(v[0], v[1], v[2])
    };

    let mut out = Vec::new();
    // T3 contains y3; T1 is the complementary triple of the block
    for i in 0..6 {
        for j in i + 1..6 {
            if k6[i] == y3 || k6[j] == y3 {
                continue;
            }
            let t3 = order(&[k6[i], k6[j], y3]);
            let t1_verts: Vec<usize> = k6
                .iter()
                .copied()
                .filter(|v| ![k6[i], k6[j], y3].contains(v))
                .collect();
            let t1 = order(&[t1_verts[0], t1_verts[1], t1_verts[2]]);
            for &am in &avs {
                for &bn in &bvs {
                    let t4 = WitnessTriangle::new(y3, am, bn);
                    for &ai in avs.iter().filter(|&&a| a != am) {
                        let free_b: Vec<usize> =
                            bvs.iter().copied().filter(|&b| b != bn).collect();
                        let (bj, bl) = if t.has_arc(free_b[0], free_b[1]) {
                            (free_b[0], free_b[1])
                        } else {
                            (free_b[1], free_b[0])
                        };
                        let t2 = WitnessTriangle::new(ai, bj, bl);
                        // ring T1 -> T2 -> T3 -> T4 -> T1, with T3 and T4
                        // sharing y3 as junction
                        out.push((
                            [t1, t2, t3, t4],
                            [
                                Some((t1.sink, t2.source)),
                                Some((t2.sink, t3.source)),
                                None,
                                Some((t4.sink, t1.source)),
                            ],
                        ));
                    }
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// 3-linked 23-vertex tournament and its ring powers

/// The 9-vertex expanded `K_{3,3,2}` block: `c1` expanded into the arc
/// `d1 -> d2`, with `B` attached to `d1` and `A` fed from `d2`.
fn build_block_d() -> Result<NamedConstruction, Error> {
    let mut b = Builder::new();
    let avs = ["a1", "a2", "a3"];
    let bvs = ["b1", "b2", "b3"];
    for v in avs.iter().chain(&bvs) {
        b.vertex(v);
    }
    b.vertex("c1");
    b.vertex("c2");
    for ai in &avs {
        for bj in &bvs {
            b.arc(ai, bj);
        }
        b.arc("c1", ai);
        b.arc("c2", ai);
    }
    for bj in &bvs {
        b.arc(bj, "c1");
        b.arc(bj, "c2");
    }
    let k332 = OrientedGraph::from_arcs(b.names.len(), &b.arcs)?;
    let c1 = b.index["c1"];
    let in_side: BTreeSet<usize> = bvs.iter().map(|v| b.index[*v]).collect();
    let out_side: BTreeSet<usize> = avs.iter().map(|v| b.index[*v]).collect();
    let (core, d1, d2) = k332.vertex_expansion(c1, &in_side, &out_side)?;
    let mut roles = b.index.clone();
    roles.remove("c1");
    roles.insert("d1".into(), d1);
    roles.insert("d2".into(), d2);
    let tournament = core.complete_to_tournament(CompletionPolicy::LowToHigh)?;
    Ok(NamedConstruction {
        name: "blockD".into(),
        core,
        tournament,
        roles,
        notes: Vec::new(),
    })
}

/// Three copies of the expanded block glued along `d1 d2`, completed to the
/// 23-vertex tournament. The emitted graph stores the shared arc as
/// `d1 -> d2`; the third copy's reversed internal convention is recorded as a
/// note, not as a second arc.
pub fn build_3linked23() -> Result<NamedConstruction, Error> {
    let block = build_block_d()?;
    let copies = [block.clone(), block.clone(), block.clone()];
    let d1 = block.role("d1");
    let d2 = block.role("d2");
    let ids = vec![
        vec![(0, d1), (1, d1), (2, d1)],
        vec![(0, d2), (1, d2), (2, d2)],
    ];
    let cores: Vec<OrientedGraph> = copies.iter().map(|c| c.core.clone()).collect();
    let (core, maps) = glue(&cores, &ids)?;
    let mut roles = BTreeMap::new();
    roles.insert("d1".to_string(), 0);
    roles.insert("d2".to_string(), 1);
    for (ci, prefix) in ["D1", "D2", "D3"].iter().enumerate() {
        for (role, &v) in &copies[ci].roles {
            if role != "d1" && role != "d2" {
                roles.insert(format!("{prefix}.{role}"), maps[ci][v]);
            }
        }
    }
    let tournament = core.complete_to_tournament(CompletionPolicy::LowToHigh)?;
    Ok(NamedConstruction {
        name: "l3-23".into(),
        core,
        tournament,
        roles,
        notes: vec![
            "copy D3 plays the reversed-edge role: its internal convention orients the shared \
             edge d2 -> d1, while the emitted graph stores d1 -> d2"
                .into(),
        ],
    })
}

/// Per-copy block structure of the 23-vertex graph: `A -> B`, `B -> d1`,
/// `d2 -> A`, `B -> c2 -> A`, and the shared arc `d1 -> d2`.
pub fn validate_3linked23(c: &NamedConstruction) -> Result<(), Error> {
    let t = &c.tournament;
    if t.n() != 23 {
        return Err(c.fail(format!("expected 23 vertices, got {}", t.n())));
    }
    let d1 = c.role("d1");
    let d2 = c.role("d2");
    arc_or(t, d1, d2, c, "d1 -> d2")?;
    for prefix in ["D1", "D2", "D3"] {
        for i in 1..=3 {
            let a = c.role(&format!("{prefix}.a{i}"));
            let c2 = c.role(&format!("{prefix}.c2"));
            arc_or(t, d2, a, c, "d2 -> A")?;
            arc_or(t, c2, a, c, "c2 -> A")?;
            for j in 1..=3 {
                let bv = c.role(&format!("{prefix}.b{j}"));
                arc_or(t, a, bv, c, "A -> B")?;
                arc_or(t, bv, d1, c, "B -> d1")?;
                arc_or(t, bv, c2, c, "B -> c2")?;
            }
        }
    }
    check_core_restriction(c)
}

/// `k`-linked ring: 3 (k=4) or 7 (k=5) copies of the 23-vertex tournament
/// with `d1` of one copy identified to `d2` of the next, completed.
pub fn build_klinked(k: usize) -> Result<NamedConstruction, Error> {
    let copies_n = match k {
        4 => 3,
        5 => 7,
        _ => return Err(Error::Domain(format!("k-linked ring supports k in {{4, 5}}, got {k}"))),
    };
    let h = build_3linked23()?;
    let d1 = h.role("d1");
    let d2 = h.role("d2");
    let cores: Vec<OrientedGraph> = (0..copies_n).map(|_| h.tournament.as_oriented()).collect();
    // junction i merges d1 of copy i with d2 of copy i+1
    let ids: Vec<Vec<(usize, usize)>> = (0..copies_n)
        .map(|i| vec![(i, d1), ((i + 1) % copies_n, d2)])
        .collect();
    let (core, maps) = glue(&cores, &ids)?;
    let mut roles = BTreeMap::new();
    for (i, map) in maps.iter().enumerate() {
        roles.insert(format!("j{}", i + 1), map[d1]);
        for (role, &v) in &h.roles {
            roles.insert(format!("H{}.{role}", i + 1), map[v]);
        }
    }
    let tournament = core.complete_to_tournament(CompletionPolicy::LowToHigh)?;
    Ok(NamedConstruction {
        name: if k == 4 { "l4-66" } else { "l5-154" }.into(),
        core,
        tournament,
        roles,
        notes: Vec::new(),
    })
}

/// The junction identifications must form a single cycle through all copies,
/// and every copy must retain its block structure.
pub fn validate_klinked(c: &NamedConstruction, k: usize) -> Result<(), Error> {
    let copies_n = if k == 4 { 3 } else { 7 };
    let expect = 23 * copies_n - copies_n;
    if c.tournament.n() != expect {
        return Err(c.fail(format!("expected {expect} vertices, got {}", c.tournament.n())));
    }
    // single ring: copy i's d1 is copy i+1's d2
    for i in 1..=copies_n {
        let next = i % copies_n + 1;
        if c.role(&format!("H{i}.d1")) != c.role(&format!("H{next}.d2")) {
            return Err(c.fail("junctions do not form a single ring"));
        }
        let ji = c.role(&format!("j{i}"));
        if ji != c.role(&format!("H{i}.d1")) {
            return Err(c.fail("junction role mismatch"));
        }
    }
    let junctions: BTreeSet<usize> = (1..=copies_n)
        .map(|i| c.role(&format!("j{i}")))
        .collect();
    if junctions.len() != copies_n {
        return Err(c.fail("junction vertices are not distinct"));
    }
    let t = &c.tournament;
    for i in 1..=copies_n {
        let d1 = c.role(&format!("H{i}.d1"));
        let d2 = c.role(&format!("H{i}.d2"));
        arc_or(t, d1, d2, c, "copy d1 -> d2")?;
        for p in 1..=3 {
            for q in 1..=3 {
                let a = c.role(&format!("H{i}.D{p}.a{q}"));
                arc_or(t, d2, a, c, "copy d2 -> A")?;
                let b = c.role(&format!("H{i}.D{p}.b{q}"));
                arc_or(t, b, d1, c, "copy B -> d1")?;
            }
        }
    }
    check_core_restriction(c)
}

// ---------------------------------------------------------------------------
// building block T' on 8 vertices and the n-linked ring

/// The 8-vertex block: `A -> B`, `B -> c2`, `c2 -> A`, `A -> c1`,
/// `c1 -> B`.
pub fn build_tprime8() -> Result<NamedConstruction, Error> {
    let mut b = Builder::new();
    let avs = ["a1", "a2", "a3"];
    let bvs = ["b1", "b2", "b3"];
    for v in avs.iter().chain(&bvs) {
        b.vertex(v);
    }
    b.vertex("c1");
    b.vertex("c2");
    for ai in &avs {
        for bj in &bvs {
            b.arc(ai, bj);
        }
        b.arc(ai, "c1");
        b.arc("c2", ai);
    }
    for bj in &bvs {
        b.arc(bj, "c2");
        b.arc("c1", bj);
    }
    b.finish("tprime8")
}

/// Every triangle `(c2, a_j, b_k)` is a consistent cycle and every triangle
/// `(a_j, c1, b_k)` decomposes into the two consistent paths `a_j -> b_k`
/// and `a_j -> c1 -> b_k`.
pub fn validate_tprime8(t: &Tournament, roles: &BTreeMap<String, usize>) -> Result<(), Error> {
    let c = NamedConstruction {
        name: "tprime8".into(),
        core: OrientedGraph::new(0),
        tournament: t.clone(),
        roles: roles.clone(),
        notes: Vec::new(),
    };
    let c1 = c.role("c1");
    let c2 = c.role("c2");
    for j in 1..=3 {
        for k in 1..=3 {
            let a = c.role(&format!("a{j}"));
            let b = c.role(&format!("b{k}"));
            arc_or(t, c2, a, &c, "c2 -> a")?;
            arc_or(t, a, b, &c, "a -> b")?;
            arc_or(t, b, c2, &c, "b -> c2")?;
            arc_or(t, a, c1, &c, "a -> c1")?;
            arc_or(t, c1, b, &c, "c1 -> b")?;
        }
    }
    Ok(())
}

/// `(2n-3)^2` copies of the 8-vertex block in a directed ring: every
/// `b`-vertex of copy `i` beats every `a`-vertex of copy `i+1`. Completed to
/// a tournament on `8(2n-3)^2` vertices.
pub fn build_nlinked(n: usize) -> Result<NamedConstruction, Error> {
    if n < 2 {
        return Err(Error::Domain(format!("n-linked ring needs n >= 2, got {n}")));
    }
    let m = (2 * n - 3) * (2 * n - 3);
    let block = build_tprime8()?;
    let cores: Vec<OrientedGraph> = (0..m).map(|_| block.core.clone()).collect();
    let (mut core, maps) = glue(&cores, &[])?;
    if m > 1 {
        for i in 0..m {
            let next = (i + 1) % m;
            for k in 1..=3 {
                for j in 1..=3 {
                    let b = maps[i][block.role(&format!("b{k}"))];
                    let a = maps[next][block.role(&format!("a{j}"))];
                    core.add_arc(b, a)?;
                }
            }
        }
    }
    let mut roles = BTreeMap::new();
    for (i, map) in maps.iter().enumerate() {
        for (role, &v) in &block.roles {
            roles.insert(format!("T{}.{role}", i + 1), map[v]);
        }
    }
    let tournament = core.complete_to_tournament(CompletionPolicy::LowToHigh)?;
    Ok(NamedConstruction {
        name: "nlinked".into(),
        core,
        tournament,
        roles,
        notes: Vec::new(),
    })
}

pub fn validate_nlinked(c: &NamedConstruction, n: usize) -> Result<(), Error> {
    let m = (2 * n - 3) * (2 * n - 3);
    if c.tournament.n() != 8 * m {
        return Err(c.fail(format!("expected {} vertices, got {}", 8 * m, c.tournament.n())));
    }
    for i in 1..=m {
        let roles: BTreeMap<String, usize> = ["a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2"]
            .iter()
            .map(|r| (r.to_string(), c.role(&format!("T{i}.{r}"))))
            .collect();
        validate_tprime8(&c.tournament, &roles)?;
        if m > 1 {
            let next = i % m + 1;
            for k in 1..=3 {
                for j in 1..=3 {
                    let b = c.role(&format!("T{i}.b{k}"));
                    let a = c.role(&format!("T{next}.a{j}"));
                    arc_or(&c.tournament, b, a, c, "b_ik -> a_(i+1)j")?;
                }
            }
        }
    }
    check_core_restriction(c)
}

// ---------------------------------------------------------------------------
// 14-vertex knotted block and the 107-vertex link-with-knot tournament

/// The 14-vertex block: the 12-vertex knotted wiring plus the consistent
/// 2-path `y3 -> alpha -> y3'`, with `y3'` feeding every `a_j` and `b_i`.
pub fn build_tprime14() -> Result<NamedConstruction, Error> {
    let mut b = Builder::new();
    let xs = ["x1", "x2", "x3"];
    let ys = ["y1", "y2", "y3"];
    let avs = ["a1", "a2", "a3"];
    let bvs = ["b1", "b2", "b3"];
    for v in xs.iter().chain(&ys) {
        b.vertex(v);
    }
    b.vertex("alpha");
    b.vertex("y3p");
    for v in avs.iter().chain(&bvs) {
        b.vertex(v);
    }
    b.arc("y3", "alpha");
    b.arc("alpha", "y3p");
    for aj in &avs {
        b.arc("y3p", aj);
    }
    for bi in &bvs {
        b.arc("y3p", bi);
    }
    for (i, xi) in xs.iter().enumerate() {
        for yj in &ys {
            b.arc(xi, yj);
        }
        for xj in &xs[i + 1..] {
            b.arc(xi, xj);
        }
    }
    for (i, yi) in ys.iter().enumerate() {
        for yj in &ys[i + 1..] {
            b.arc(yi, yj);
        }
        for aj in &avs {
            b.arc(yi, aj);
        }
    }
    for ai in &avs {
        b.arc("x3", ai);
        for bj in &bvs {
            b.arc(ai, bj);
        }
    }
    for bi in &bvs {
        for xj in &xs {
            b.arc(bi, xj);
        }
        b.arc(bi, "y1");
    }
    b.finish("tprime14")
}

/// `y3` is a sink of every `x`/`y`-block triangle containing it, `y3'` is the
/// source of every `(y3', a_m, b_n)` triangle, and `alpha` carries exactly
/// its two construction arcs before completion.
pub fn validate_tprime14(c: &NamedConstruction) -> Result<(), Error> {
    let t = &c.tournament;
    if t.n() != 14 {
        return Err(c.fail(format!("expected 14 vertices, got {}", t.n())));
    }
    let y3 = c.role("y3");
    let k6: Vec<usize> = ["x1", "x2", "x3", "y1", "y2", "y3"]
        .iter()
        .map(|r| c.role(r))
        .collect();
    for &u in &k6 {
        if u != y3 && !t.has_arc(u, y3) {
            return Err(c.fail("y3 is not a sink of the x/y block"));
        }
    }
    let y3p = c.role("y3p");
    for m in 1..=3 {
        for n in 1..=3 {
            let a = c.role(&format!("a{m}"));
            let b = c.role(&format!("b{n}"));
            arc_or(t, y3p, a, c, "y3' -> a_m")?;
            arc_or(t, y3p, b, c, "y3' -> b_n")?;
            arc_or(t, a, b, c, "a_m -> b_n")?;
        }
    }
    let alpha = c.role("alpha");
    let deg = c.core.neighbors(alpha).len();
    if deg != 2 {
        return Err(c.fail(format!("alpha has {deg} construction arcs, expected 2")));
    }
    arc_or(t, y3, alpha, c, "y3 -> alpha")?;
    arc_or(t, alpha, y3p, c, "alpha -> y3'")?;
    check_core_restriction(c)
}

/// Nine copies of the 14-vertex block with all `alpha` identified, the `y3`
/// endpoints merged three by three into `v1 v2 v3`, the `y3'` endpoints into
/// `w1 w2 w3`, and a fresh vertex `beta` with `beta -> w_i` and
/// `v_i -> beta`. 107 vertices after completion.
pub fn build_linkknot107() -> Result<NamedConstruction, Error> {
    let block = build_tprime14()?;
    let alpha = block.role("alpha");
    let y3 = block.role("y3");
    let y3p = block.role("y3p");
    let cores: Vec<OrientedGraph> = (0..9).map(|_| block.core.clone()).collect();
    let mut ids: Vec<Vec<(usize, usize)>> = Vec::new();
    ids.push((0..9).map(|i| (i, alpha)).collect()); // class 0: alpha
    for g in 0..3 {
        ids.push((3 * g..3 * g + 3).map(|i| (i, y3)).collect()); // classes 1-3: v_g
    }
    for g in 0..3 {
        ids.push((0..3).map(|r| (3 * r + g, y3p)).collect()); // classes 4-6: w_g
    }
    let (glued, maps) = glue(&cores, &ids)?;
    // append beta and its arcs
    let beta = glued.n();
    let mut arcs: Vec<(usize, usize)> = glued.arcs().collect();
    for g in 0..3usize {
        arcs.push((beta, 4 + g)); // beta -> w_g
        arcs.push((1 + g, beta)); // v_g -> beta
    }
    let core = OrientedGraph::from_arcs(beta + 1, &arcs)?;
    let mut roles = BTreeMap::new();
    roles.insert("alpha".to_string(), 0);
    for g in 0..3 {
        roles.insert(format!("v{}", g + 1), 1 + g);
        roles.insert(format!("w{}", g + 1), 4 + g);
    }
    roles.insert("beta".to_string(), beta);
    for (i, map) in maps.iter().enumerate() {
        for (role, &v) in &block.roles {
            if !["alpha", "y3", "y3p"].contains(&role.as_str()) {
                roles.insert(format!("T{}.{role}", i + 1), map[v]);
            }
        }
    }
    let tournament = core.complete_to_tournament(CompletionPolicy::LowToHigh)?;
    Ok(NamedConstruction {
        name: "linkknot107".into(),
        core,
        tournament,
        roles,
        notes: Vec::new(),
    })
}

/// The `{alpha, beta, v_i, w_i}` subgraph matches the `K_{3,3,2}` pattern up
/// to the in-copy paths, and for every `(w_i, v_j)` pair exactly one copy
/// supplies a consistent construction path from `w_i` back to `v_j` avoiding
/// `alpha` and `beta`.
pub fn validate_linkknot107(c: &NamedConstruction) -> Result<(), Error> {
    let t = &c.tournament;
    if t.n() != 107 {
        return Err(c.fail(format!("expected 107 vertices, got {}", t.n())));
    }
    let alpha = c.role("alpha");
    let beta = c.role("beta");
    for g in 1..=3 {
        let v = c.role(&format!("v{g}"));
        let w = c.role(&format!("w{g}"));
        arc_or(t, v, alpha, c, "v_i -> alpha")?;
        arc_or(t, alpha, w, c, "alpha -> w_i")?;
        arc_or(t, v, beta, c, "v_i -> beta")?;
        arc_or(t, beta, w, c, "beta -> w_i")?;
    }
    // consistent path w_i -> ... -> v_j in the construction arcs of the
    // unique copy joining them
    for wi in 1..=3usize {
        for vj in 1..=3usize {
            let copy = 3 * (vj - 1) + wi; // 1-based copy index
            let w = c.role(&format!("w{wi}"));
            let v = c.role(&format!("v{vj}"));
            let copy_verts: BTreeSet<usize> = c
                .roles
                .iter()
                .filter(|(name, _)| name.starts_with(&format!("T{copy}.")))
                .map(|(_, &id)| id)
                .collect();
            let mut reach = BTreeSet::from([w]);
            let mut frontier = vec![w];
            while let Some(u) = frontier.pop() {
                for x in c.core.out_neighbors(u) {
                    if x == alpha || x == beta {
                        continue;
                    }
                    if (copy_verts.contains(&x) || x == v) && reach.insert(x) {
                        frontier.push(x);
                    }
                }
            }
            if !reach.contains(&v) {
                return Err(c.fail(format!(
                    "no construction path from w{wi} to v{vj} inside copy {copy}"
                )));
            }
        }
    }
    check_core_restriction(c)
}

// ---------------------------------------------------------------------------
// disjoint linking on 14 vertices

/// `K_{5,5,4}` oriented `C -> A -> B -> C`, completed to 14 vertices.
pub fn build_dlp14() -> Result<NamedConstruction, Error> {
    let mut b = Builder::new();
    let avs: Vec<String> = (1..=5).map(|i| format!("a{i}")).collect();
    let bvs: Vec<String> = (1..=5).map(|i| format!("b{i}")).collect();
    let cvs: Vec<String> = (1..=4).map(|i| format!("c{i}")).collect();
    for v in avs.iter().chain(&bvs).chain(&cvs) {
        b.vertex(v);
    }
    for ci in &cvs {
        for ai in &avs {
            b.arc(ci, ai);
        }
    }
    for ai in &avs {
        for bi in &bvs {
            b.arc(ai, bi);
        }
    }
    for bi in &bvs {
        for ci in &cvs {
            b.arc(bi, ci);
        }
    }
    b.finish("dlp14")
}

/// Two vertex-disjoint oriented multipartite blocks, each with every
/// `(c, a, b)` triangle consistently oriented: the `K_{3,3,2}` block on the
/// low indices and the `K_{2,2,2}` remnant on the high ones.
pub fn validate_dlp14(c: &NamedConstruction) -> Result<(), Error> {
    let t = &c.tournament;
    if t.n() != 14 {
        return Err(c.fail(format!("expected 14 vertices, got {}", t.n())));
    }
    let triangle = |ci: usize, ai: usize, bi: usize| -> Result<(), Error> {
        arc_or(t, ci, ai, c, "c -> a")?;
        arc_or(t, ai, bi, c, "a -> b")?;
        arc_or(t, bi, ci, c, "b -> c")
    };
    for i in 1..=2 {
        for a in 1..=3 {
            for b in 1..=3 {
                triangle(c.role(&format!("c{i}")), c.role(&format!("a{a}")), c.role(&format!("b{b}")))?;
            }
        }
    }
    for i in 3..=4 {
        for a in 4..=5 {
            for b in 4..=5 {
                triangle(c.role(&format!("c{i}")), c.role(&format!("a{a}")), c.role(&format!("b{b}")))?;
            }
        }
    }
    check_core_restriction(c)
}

// ---------------------------------------------------------------------------
// shared checks and the registry

/// Completion must never alter a construction arc.
fn check_core_restriction(c: &NamedConstruction) -> Result<(), Error> {
    for (a, b) in c.core.arcs() {
        if !c.tournament.has_arc(a, b) {
            return Err(c.fail(format!(
                "completion reversed the construction arc {} -> {}",
                a + 1,
                b + 1
            )));
        }
    }
    Ok(())
}

/// Construction names accepted by the CLI.
pub const NAMES: &[&str] = &[
    "il8",
    "ik12",
    "l3-23",
    "l4-66",
    "l5-154",
    "tprime8",
    "nlinked",
    "tprime14",
    "linkknot107",
    "dlp14",
];

/// Build a construction by name. `nlinked` requires the link count `n`.
pub fn build(name: &str, n: Option<usize>) -> Result<NamedConstruction, Error> {
    match name {
        "il8" => build_il8(),
        "ik12" => build_ik12(),
        "l3-23" => build_3linked23(),
        "l4-66" => build_klinked(4),
        "l5-154" => build_klinked(5),
        "tprime8" => build_tprime8(),
        "nlinked" => {
            let n = n.ok_or_else(|| Error::Domain("nlinked requires --n".into()))?;
            build_nlinked(n)
        }
        "tprime14" => build_tprime14(),
        "linkknot107" => build_linkknot107(),
        "dlp14" => build_dlp14(),
        other => Err(Error::Domain(format!("unknown construction '{other}'"))),
    }
}

/// Run the structural validator matching a construction's name.
pub fn validate(c: &NamedConstruction, n: Option<usize>) -> Result<(), Error> {
    match c.name.as_str() {
        "il8" => {
            validate_il8(&c.tournament, &c.roles)?;
            check_core_restriction(c)
        }
        "ik12" => {
            validate_ik12(&c.tournament, &c.roles)?;
            check_core_restriction(c)
        }
        "l3-23" => validate_3linked23(c),
        "l4-66" => validate_klinked(c, 4),
        "l5-154" => validate_klinked(c, 5),
        "tprime8" => {
            validate_tprime8(&c.tournament, &c.roles)?;
            check_core_restriction(c)
        }
        "nlinked" => {
            let n = n.ok_or_else(|| Error::Domain("nlinked validation requires n".into()))?;
            validate_nlinked(c, n)
        }
        "tprime14" => validate_tprime14(c),
        "linkknot107" => validate_linkknot107(c),
        "dlp14" => validate_dlp14(c),
        other => Err(Error::Domain(format!("no validator for '{other}'"))),
    }
}
