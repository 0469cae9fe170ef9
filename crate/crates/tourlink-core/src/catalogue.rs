//! Embedding link/knot catalogues and certificate search.
//!
//! A catalogue lists every non-split link and every knotted cycle of one
//! fixed spatial embedding of `K_n` (trusted data). A certificate for a
//! tournament is a labeling of the catalogue's vertices by tournament
//! vertices under which every catalogued link has an inconsistently oriented
//! component and every catalogued knot is inconsistently oriented; such a
//! labeling witnesses a link-free (knot-free) embedding of the tournament.

use std::collections::BTreeMap;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::digraph::{is_consistent, CyclePattern, Tournament};
use crate::iso::canonical_form;
use crate::Error;

/// One entry of the paper's compact digit notation: either a knotted cycle or
/// a two-component link.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompactEntry {
    Knot(CyclePattern),
    Link(CyclePattern, CyclePattern),
}

fn parse_component(s: &str) -> Result<CyclePattern, Error> {
    if s.len() < 3 {
        return Err(Error::Parse(format!(
            "component '{s}' is shorter than 3 vertices"
        )));
    }
    let mut verts = Vec::with_capacity(s.len());
    for ch in s.chars() {
        let d = ch
            .to_digit(10)
            .filter(|&d| d >= 1)
            .ok_or_else(|| Error::Parse(format!("invalid digit '{ch}' in '{s}'")))?;
        let v = d as usize - 1;
        if verts.contains(&v) {
            return Err(Error::Parse(format!("repeated vertex {d} in '{s}'")));
        }
        verts.push(v);
    }
    CyclePattern::new(verts)
}

/// Parse compact notation such as `457-236` (link) or `15862347` (knot).
pub fn parse_compact(s: &str) -> Result<CompactEntry, Error> {
    let parts: Vec<&str> = s.split('-').collect();
    match parts.as_slice() {
        [one] => Ok(CompactEntry::Knot(parse_component(one)?)),
        [a, b] => Ok(CompactEntry::Link(parse_component(a)?, parse_component(b)?)),
        _ => Err(Error::Parse(format!("'{s}' has more than one hyphen"))),
    }
}

fn to_compact(p: &CyclePattern) -> String {
    p.verts().iter().map(|v| (v + 1).to_string()).collect()
}

/// A named embedding of `K_n` together with its complete list of non-split
/// links and knotted cycles.
#[derive(Clone, Debug)]
pub struct EmbeddingCatalogue {
    pub name: String,
    pub n: usize,
    pub links: Vec<(CyclePattern, CyclePattern)>,
    pub knots: Vec<CyclePattern>,
}

#[derive(Serialize, Deserialize)]
struct CatalogueJson {
    name: String,
    n: usize,
    links: Vec<String>,
    knots: Vec<String>,
}

static FMELLOR_K7: &str = include_str!("../data/fmellor_k7.json");
static AMT_K8: &str = include_str!("../data/amt_k8.json");
static CG_K7: &str = include_str!("../data/cg_k7.json");

impl EmbeddingCatalogue {
    pub fn from_json(s: &str) -> Result<Self, Error> {
        let raw: CatalogueJson = serde_json::from_str(s)?;
        let mut links = Vec::with_capacity(raw.links.len());
        for entry in &raw.links {
            match parse_compact(entry)? {
                CompactEntry::Link(a, b) => links.push((a, b)),
                CompactEntry::Knot(_) => {
                    return Err(Error::Parse(format!("link entry '{entry}' has no hyphen")))
                }
            }
        }
        let mut knots = Vec::with_capacity(raw.knots.len());
        for entry in &raw.knots {
            match parse_compact(entry)? {
                CompactEntry::Knot(p) => knots.push(p),
                CompactEntry::Link(..) => {
                    return Err(Error::Parse(format!("knot entry '{entry}' contains a hyphen")))
                }
            }
        }
        let cat = EmbeddingCatalogue {
            name: raw.name,
            n: raw.n,
            links,
            knots,
        };
        cat.validate()?;
        Ok(cat)
    }

    pub fn to_json(&self) -> String {
        let raw = CatalogueJson {
            name: self.name.clone(),
            n: self.n,
            links: self
                .links
                .iter()
                .map(|(a, b)| format!("{}-{}", to_compact(a), to_compact(b)))
                .collect(),
            knots: self.knots.iter().map(to_compact).collect(),
        };
        serde_json::to_string_pretty(&raw).expect("catalogue serialization cannot fail")
    }

    /// Label range, link disjointness, and canonical-form deduplication.
    pub fn validate(&self) -> Result<(), Error> {
        let check_labels = |p: &CyclePattern| -> Result<(), Error> {
            for &v in p.verts() {
                if v >= self.n {
                    return Err(Error::Domain(format!(
                        "catalogue {} uses label {} beyond n={}",
                        self.name,
                        v + 1,
                        self.n
                    )));
                }
            }
            Ok(())
        };
        let mut seen = std::collections::BTreeSet::new();
        for (a, b) in &self.links {
            check_labels(a)?;
            check_labels(b)?;
            if !a.is_disjoint(b) {
                return Err(Error::Domain(format!(
                    "link {}-{} has overlapping components",
                    to_compact(a),
                    to_compact(b)
                )));
            }
            let key = {
                let mut pair = [a.canonical(), b.canonical()];
                pair.sort();
                (pair[0].clone(), Some(pair[1].clone()))
            };
            if !seen.insert(key) {
                return Err(Error::Domain(format!(
                    "duplicate link entry {}-{}",
                    to_compact(a),
                    to_compact(b)
                )));
            }
        }
        for k in &self.knots {
            check_labels(k)?;
            if !seen.insert((k.canonical(), None)) {
                return Err(Error::Domain(format!("duplicate knot entry {}", to_compact(k))));
            }
        }
        Ok(())
    }

    /// A built-in catalogue by name, honoring the `TOURLINK_DATA_DIR`
    /// override.
    pub fn builtin(name: &str) -> Result<Self, Error> {
        let (file, fallback) = match name {
            "FMellorK7" => ("fmellor_k7.json", FMELLOR_K7),
            "AMTK8" => ("amt_k8.json", AMT_K8),
            "CGK7" => ("cg_k7.json", CG_K7),
            other => return Err(Error::Domain(format!("unknown catalogue '{other}'"))),
        };
        if let Ok(dir) = std::env::var("TOURLINK_DATA_DIR") {
            let path: PathBuf = [dir.as_str(), file].iter().collect();
            if path.exists() {
                return Self::from_json(&std::fs::read_to_string(path)?);
            }
        }
        Self::from_json(fallback)
    }

    pub fn fmellor_k7() -> Self {
        Self::builtin("FMellorK7").expect("built-in catalogue is valid")
    }

    pub fn amt_k8() -> Self {
        Self::builtin("AMTK8").expect("built-in catalogue is valid")
    }

    pub fn cg_k7() -> Self {
        Self::builtin("CGK7").expect("built-in catalogue is valid")
    }
}

/// How a tournament was certified link-free or knot-free.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    /// A direct labeling into the catalogued embedding.
    EmbeddingLabeling,
    /// A vertex of full in- or out-degree was discarded and the remainder
    /// certified recursively.
    ApexReduction,
}

/// A verified witness: `labeling[label]` is the tournament vertex carrying
/// catalogue label `label` (0-based internally, 1-based in JSON).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub labeling: Vec<usize>,
    pub apex: Option<usize>,
    /// The certificate applies to the dual of the tournament it was searched
    /// for.
    pub dualized: bool,
}

/// True iff under `sigma` every link entry has an inconsistent component and
/// every knot entry is inconsistent.
pub fn is_certified_labeling(
    t: &Tournament,
    sigma: &[usize],
    cat: &EmbeddingCatalogue,
) -> Result<bool, Error> {
    if t.n() != cat.n || sigma.len() != cat.n {
        return Err(Error::Domain(format!(
            "labeling size mismatch: tournament n={}, catalogue n={}",
            t.n(),
            cat.n
        )));
    }
    for (a, b) in &cat.links {
        if is_consistent(t, &a.map(sigma)?)? && is_consistent(t, &b.map(sigma)?)? {
            return Ok(false);
        }
    }
    for k in &cat.knots {
        if is_consistent(t, &k.map(sigma)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// labeling search

struct PatternState {
    fwd_dead: bool,
    bwd_dead: bool,
    undecided: usize,
    /// Index of the other component for link patterns.
    partner: Option<usize>,
    is_knot: bool,
}

impl PatternState {
    fn killed(&self) -> bool {
        self.fwd_dead && self.bwd_dead
    }
}

struct Searcher<'a> {
    t: &'a Tournament,
    n: usize,
    patterns: Vec<PatternState>,
    /// For each unordered label pair, the patterns traversing it and whether
    /// their forward direction runs min -> max.
    pair_entries: BTreeMap<(usize, usize), Vec<(usize, bool)>>,
    /// Labels in assignment order, most-constrained first.
    order: Vec<usize>,
    assigned: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl Searcher<'_> {
    fn new<'a>(t: &'a Tournament, cat: &EmbeddingCatalogue) -> Searcher<'a> {
        let n = cat.n;
        let mut patterns = Vec::new();
        let mut pair_entries: BTreeMap<(usize, usize), Vec<(usize, bool)>> = BTreeMap::new();
        let mut freq = vec![0usize; n];
        let push = |p: &CyclePattern,
                        partner: Option<usize>,
                        is_knot: bool,
                        patterns: &mut Vec<PatternState>,
                        pair_entries: &mut BTreeMap<(usize, usize), Vec<(usize, bool)>>,
                        freq: &mut Vec<usize>| {
            let idx = patterns.len();
            for (a, b) in p.edges() {
                let key = (a.min(b), a.max(b));
                pair_entries.entry(key).or_default().push((idx, a < b));
            }
            for &v in p.verts() {
                freq[v] += 1;
            }
            patterns.push(PatternState {
                fwd_dead: false,
                bwd_dead: false,
                undecided: p.len(),
                partner,
                is_knot,
            });
        };
        for (a, b) in &cat.links {
            let ia = patterns.len();
            push(a, Some(ia + 1), false, &mut patterns, &mut pair_entries, &mut freq);
            push(b, Some(ia), false, &mut patterns, &mut pair_entries, &mut freq);
        }
        for k in &cat.knots {
            push(k, None, true, &mut patterns, &mut pair_entries, &mut freq);
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(freq[v]));
        Searcher {
            t,
            n,
            patterns,
            pair_entries,
            order,
            assigned: vec![None; n],
            used: vec![false; t.n()],
        }
    }

    /// Apply the consequences of assigning `label -> vertex`. Returns the
    /// undo trail, or `None` when the assignment is already infeasible.
    fn decide(&mut self, label: usize) -> Option<Vec<(usize, bool, bool)>> {
        let mut trail = Vec::new();
        let mut feasible = true;
        for other in 0..self.n {
            if other == label {
                continue;
            }
            let Some(ov) = self.assigned[other] else {
                continue;
            };
            let key = (label.min(other), label.max(other));
            let Some(entries) = self.pair_entries.get(&key) else {
                continue;
            };
            let lv = self.assigned[label].unwrap();
            let (minv, maxv) = if label < other { (lv, ov) } else { (ov, lv) };
            let actual_min_to_max = self.t.has_arc(minv, maxv);
            for &(q, fwd_min_to_max) in entries {
                let st = &mut self.patterns[q];
                trail.push((q, st.fwd_dead, st.bwd_dead));
                st.undecided -= 1;
                if actual_min_to_max == fwd_min_to_max {
                    st.bwd_dead = true;
                } else {
                    st.fwd_dead = true;
                }
                if st.undecided == 0 && !st.killed() {
                    // fully decided and consistent
                    if st.is_knot {
                        feasible = false;
                    } else if let Some(p) = st.partner {
                        let ps = &self.patterns[p];
                        if ps.undecided == 0 && !ps.killed() {
                            feasible = false;
                        }
                    }
                }
            }
        }
        if feasible {
            Some(trail)
        } else {
            self.undo(label, trail);
            None
        }
    }

    fn undo(&mut self, _label: usize, trail: Vec<(usize, bool, bool)>) {
        for &(q, fwd, bwd) in trail.iter().rev() {
            let st = &mut self.patterns[q];
            st.undecided += 1;
            st.fwd_dead = fwd;
            st.bwd_dead = bwd;
        }
    }

    fn dfs(&mut self, pos: usize) -> bool {
        if pos == self.n {
            return true;
        }
        let label = self.order[pos];
        for v in 0..self.t.n() {
            if self.used[v] {
                continue;
            }
            self.used[v] = true;
            self.assigned[label] = Some(v);
            if let Some(trail) = self.decide(label) {
                if self.dfs(pos + 1) {
                    return true;
                }
                self.undo(label, trail);
            }
            self.assigned[label] = None;
            self.used[v] = false;
        }
        false
    }
}

/// Exhaustive labeling search with dead-direction pruning. Returns the first
/// certified labeling in a deterministic order, if any exists.
pub fn search_labeling(t: &Tournament, cat: &EmbeddingCatalogue) -> Option<Vec<usize>> {
    if t.n() != cat.n {
        return None;
    }
    let mut s = Searcher::new(t, cat);
    if s.dfs(0) {
        let sigma: Vec<usize> = s.assigned.iter().map(|a| a.unwrap()).collect();
        debug_assert!(is_certified_labeling(t, &sigma, cat).unwrap());
        Some(sigma)
    } else {
        None
    }
}

/// A vertex of full in- or out-degree, if any. No consistently oriented cycle
/// can pass through such a vertex.
pub fn apex_vertex(t: &Tournament) -> Option<usize> {
    (0..t.n()).find(|&v| t.in_degree(v) == t.n() - 1 || t.out_degree(v) == t.n() - 1)
}

/// Find a certificate for `t` against `cat`, searching all labelings with
/// pruning. With `allow_apex`, a tournament one vertex larger than the
/// catalogue may be certified by discarding an apex vertex and certifying the
/// 7-vertex remainder against the Conway-Gordon catalogue.
pub fn find_certificate(
    t: &Tournament,
    cat: &EmbeddingCatalogue,
    allow_apex: bool,
) -> Option<Certificate> {
    if allow_apex && t.n() == cat.n {
        if let Some(apex) = apex_vertex(t) {
            let rest: Vec<usize> = (0..t.n()).filter(|&v| v != apex).collect();
            if rest.len() == 7 {
                let sub = t.restrict(&rest).expect("apex remainder is valid");
                let inner = cg_certificate(&sub);
                let labeling = inner.labeling.iter().map(|&v| rest[v]).collect();
                return Some(Certificate {
                    kind: CertificateKind::ApexReduction,
                    labeling,
                    apex: Some(apex),
                    dualized: false,
                });
            }
        }
    }
    if t.n() != cat.n {
        return None;
    }
    search_labeling(t, cat).map(|labeling| Certificate {
        kind: CertificateKind::EmbeddingLabeling,
        labeling,
        apex: None,
        dualized: false,
    })
}

/// A Conway-Gordon certificate for any 7-vertex tournament: the identity
/// labeling, or, when the identity image of the Hamiltonian knot pattern is
/// consistently oriented, the labeling with the images of 6 and 7 swapped.
/// The swap breaks the forward traversal at the 7-6 step and the backward
/// traversal at the 5-4 step, so this always succeeds.
pub fn cg_certificate(t: &Tournament) -> Certificate {
    assert_eq!(t.n(), 7, "Conway-Gordon certificates are for 7 vertices");
    let pattern = CyclePattern::new((0..7).collect()).unwrap();
    let identity: Vec<usize> = (0..7).collect();
    let sigma = if !is_consistent(t, &pattern.map(&identity).unwrap()).unwrap() {
        identity
    } else {
        let swapped = vec![0, 1, 2, 3, 4, 6, 5];
        debug_assert!(!is_consistent(t, &pattern.map(&swapped).unwrap()).unwrap());
        swapped
    };
    Certificate {
        kind: CertificateKind::EmbeddingLabeling,
        labeling: sigma,
        apex: None,
        dualized: false,
    }
}

/// The constructive AMT labeling for an 8-vertex tournament whose maximum
/// in-degree is 4, 5, or 6: pick a vertex of maximal in-degree as 1, an
/// out-neighbor 6 beating some in-neighbor 4, in-neighbors 5, 8 with the arc
/// 8 -> 5, and a further in-neighbor 7. The resulting partial orientation
/// (arcs 41, 51, 71, 81, 85, 64) kills all 29 knotted cycles.
pub fn amt_recipe_labeling(t: &Tournament) -> Option<Vec<usize>> {
    assert_eq!(t.n(), 8);
    let v = (0..8).max_by_key(|&v| (t.in_degree(v), std::cmp::Reverse(v)))?;
    let d = t.in_degree(v);
    if !(4..=6).contains(&d) {
        return None;
    }
    let w_set: Vec<usize> = (0..8).filter(|&u| u != v && t.has_arc(u, v)).collect();
    let (u6, w4) = (0..8)
        .filter(|&u| u != v && t.has_arc(v, u))
        .find_map(|u| w_set.iter().find(|&&w| t.has_arc(u, w)).map(|&w| (u, w)))?;
    let rest: Vec<usize> = w_set.iter().copied().filter(|&w| w != w4).collect();
    debug_assert!(rest.len() >= 3);
    let (w8, w5) = if t.has_arc(rest[0], rest[1]) {
        (rest[0], rest[1])
    } else {
        (rest[1], rest[0])
    };
    let w7 = rest[2];
    let mut labeling = vec![usize::MAX; 8];
    labeling[0] = v; // label 1
    labeling[5] = u6; // label 6
    labeling[3] = w4; // label 4
    labeling[4] = w5; // label 5
    labeling[7] = w8; // label 8
    labeling[6] = w7; // label 7
    let leftover: Vec<usize> = (0..8).filter(|x| !labeling.contains(x)).collect();
    debug_assert_eq!(leftover.len(), 2);
    labeling[1] = leftover[0]; // label 2
    labeling[2] = leftover[1]; // label 3
    Some(labeling)
}

/// The six arcs the AMT recipe forces, in catalogue labels (0-based):
/// 4->1, 5->1, 7->1, 8->1, 8->5, 6->4.
pub fn amt_recipe_arcs() -> Vec<(usize, usize)> {
    vec![(3, 0), (4, 0), (6, 0), (7, 0), (7, 4), (5, 3)]
}

/// The FMellor labeling recipe for a 7-vertex tournament with a vertex of
/// in-degree 5: label that vertex 7 and its unique out-neighbor 3, then label
/// two vertices whose arcs to vertex 2 match in direction as 4 and 5.
pub fn fmellor_indeg5_labeling(t: &Tournament) -> Option<Vec<usize>> {
    assert_eq!(t.n(), 7);
    let v = (0..7).find(|&v| t.in_degree(v) == 5)?;
    let w = (0..7).find(|&u| u != v && t.has_arc(v, u))?;
    let rest: Vec<usize> = (0..7).filter(|&u| u != v && u != w).collect();
    let two = rest[0];
    let others = &rest[1..];
    let (a, b) = others
        .iter()
        .flat_map(|&x| others.iter().map(move |&y| (x, y)))
        .find(|&(x, y)| {
            x < y
                && (t.has_arc(two, x) && t.has_arc(two, y)
                    || t.has_arc(x, two) && t.has_arc(y, two))
        })?;
    let leftovers: Vec<usize> = others.iter().copied().filter(|&x| x != a && x != b).collect();
    let mut labeling = vec![usize::MAX; 7];
    labeling[6] = v; // label 7
    labeling[2] = w; // label 3
    labeling[1] = two; // label 2
    labeling[3] = a; // label 4
    labeling[4] = b; // label 5
    labeling[0] = leftovers[0]; // label 1
    labeling[5] = leftovers[1]; // label 6
    Some(labeling)
}

/// The sixteen candidate 7-vertex tournaments of the in-degree-4, `w = w' = 4`
/// subcase, deduplicated by canonical form: all arcs fixed except the
/// triangle {1, 5, 6} and the pair {2, 3}. These are exactly the classes the
/// alternate embedding handles instead of the FMellor embedding.
pub fn residual_family() -> Vec<Tournament> {
    // 0-based translation of: 1->7 4->7 5->7 6->7 7->2 7->3 4->2 4->3
    // 2->1 2->5 2->6 3->1 3->5 3->6 5->4 1->4 6->4
    let base = [
        (0, 6),
        (3, 6),
        (4, 6),
        (5, 6),
        (6, 1),
        (6, 2),
        (3, 1),
        (3, 2),
        (1, 0),
        (1, 4),
        (1, 5),
        (2, 0),
        (2, 4),
        (2, 5),
        (4, 3),
        (0, 3),
        (5, 3),
    ];
    let triangle = [(0usize, 4usize), (0, 5), (4, 5)];
    let mut seen = std::collections::BTreeSet::new();
    let mut family = Vec::new();
    for flip23 in [false, true] {
        for mask in 0..8u32 {
            let mut arcs: Vec<(usize, usize)> = base.to_vec();
            arcs.push(if flip23 { (2, 1) } else { (1, 2) });
            for (bit, &(a, b)) in triangle.iter().enumerate() {
                arcs.push(if mask >> bit & 1 == 1 { (b, a) } else { (a, b) });
            }
            let t = Tournament::from_arcs(7, &arcs).expect("residual arcs form a tournament");
            let form = canonical_form(&t).expect("n=7 canonicalizes");
            if seen.insert(form) {
                family.push(t);
            }
        }
    }
    family
}

/// True iff `t` is isomorphic, possibly after dualizing, to a member of the
/// residual family.
pub fn in_residual_family(t: &Tournament) -> bool {
    if t.n() != 7 {
        return false;
    }
    let forms: std::collections::BTreeSet<_> = residual_family()
        .iter()
        .map(|r| canonical_form(r).unwrap())
        .collect();
    forms.contains(&canonical_form(t).unwrap())
        || forms.contains(&canonical_form(&t.dual()).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{killed_by_partial, CompletionPolicy, OrientedGraph};

    #[test]
    fn parse_compact_entries() {
        let CompactEntry::Link(a, b) = parse_compact("457-236").unwrap() else {
            panic!("expected a link");
        };
        assert_eq!(a.verts(), &[3, 4, 6]);
        assert_eq!(b.verts(), &[1, 2, 5]);

        let CompactEntry::Knot(k) = parse_compact("15862347").unwrap() else {
            panic!("expected a knot");
        };
        assert_eq!(k.verts(), &[0, 4, 7, 5, 1, 2, 3, 6]);

        assert!(parse_compact("457-455").is_err());
        assert!(parse_compact("45-236").is_err());
        assert!(parse_compact("457-236-145").is_err());
        assert!(parse_compact("4x7").is_err());
    }

    #[test]
    fn builtin_catalogue_counts() {
        let fm = EmbeddingCatalogue::fmellor_k7();
        assert_eq!((fm.n, fm.links.len(), fm.knots.len()), (7, 21, 0));
        let amt = EmbeddingCatalogue::amt_k8();
        assert_eq!((amt.n, amt.links.len(), amt.knots.len()), (8, 0, 29));
        let cg = EmbeddingCatalogue::cg_k7();
        assert_eq!((cg.n, cg.links.len(), cg.knots.len()), (7, 0, 1));
        assert_eq!(cg.knots[0].verts(), &[0, 1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn catalogue_round_trip_and_validation() {
        let fm = EmbeddingCatalogue::fmellor_k7();
        let again = EmbeddingCatalogue::from_json(&fm.to_json()).unwrap();
        assert_eq!(again.links.len(), 21);

        let bad = r#"{"name":"x","n":7,"links":["123-345"],"knots":[]}"#;
        assert!(EmbeddingCatalogue::from_json(bad).is_err());
        let dup = r#"{"name":"x","n":7,"links":[],"knots":["123","231"]}"#;
        assert!(EmbeddingCatalogue::from_json(dup).is_err());
    }

    #[test]
    fn transitive_tournament_identity_certificate() {
        // no consistent cycle at all, so the identity labeling certifies
        let t = Tournament::transitive(7).unwrap();
        let cat = EmbeddingCatalogue::fmellor_k7();
        let id: Vec<usize> = (0..7).collect();
        assert!(is_certified_labeling(&t, &id, &cat).unwrap());
        let cert = find_certificate(&t, &cat, false).unwrap();
        assert!(is_certified_labeling(&t, &cert.labeling, &cat).unwrap());
    }

    #[test]
    fn amt_constructive_labeling_is_certified() {
        // identity-labeled tournament carrying exactly the recipe's six arcs
        let mut g = OrientedGraph::new(8);
        for (a, b) in amt_recipe_arcs() {
            g.add_arc(a, b).unwrap();
        }
        let t = g.complete_to_tournament(CompletionPolicy::LowToHigh).unwrap();
        let id: Vec<usize> = (0..8).collect();
        let cat = EmbeddingCatalogue::amt_k8();
        assert!(is_certified_labeling(&t, &id, &cat).unwrap());
    }

    #[test]
    fn recipe_arcs_kill_every_amt_knot() {
        let arcs = amt_recipe_arcs();
        for k in &EmbeddingCatalogue::amt_k8().knots {
            assert!(killed_by_partial(&arcs, k).unwrap(), "knot {k:?} survives");
        }
    }

    #[test]
    fn cg_certificate_on_consistent_hamiltonian() {
        // arcs i -> i+1 cyclically, completed; the identity image is the
        // consistent cycle, so the swap must fire
        let mut g = OrientedGraph::new(7);
        for i in 0..7 {
            g.add_arc(i, (i + 1) % 7).unwrap();
        }
        let t = g.complete_to_tournament(CompletionPolicy::LowToHigh).unwrap();
        let cert = cg_certificate(&t);
        assert_eq!(cert.labeling, vec![0, 1, 2, 3, 4, 6, 5]);
        assert!(is_certified_labeling(&t, &cert.labeling, &EmbeddingCatalogue::cg_k7()).unwrap());

        let trans = Tournament::transitive(7).unwrap();
        assert_eq!(cg_certificate(&trans).labeling, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn apex_reduction_certificate() {
        // rotational tournament on 0..6 (no apex there) plus vertex 7
        // beaten by everyone
        let mut arcs = Vec::new();
        for i in 0..7usize {
            for d in [1, 2, 4] {
                arcs.push((i, (i + d) % 7));
            }
            arcs.push((i, 7));
        }
        let t = Tournament::from_arcs(8, &arcs).unwrap();
        let cert = find_certificate(&t, &EmbeddingCatalogue::amt_k8(), true).unwrap();
        assert_eq!(cert.kind, CertificateKind::ApexReduction);
        assert_eq!(cert.apex, Some(7));
    }

    #[test]
    fn residual_family_shape() {
        let family = residual_family();
        assert!(family.len() <= 16);
        assert!(!family.is_empty());
        for t in &family {
            let max_in = (0..7).map(|v| t.in_degree(v)).max().unwrap();
            assert_eq!(max_in, 4);
            assert_eq!(t.in_degree(6), 4, "vertex 7 attains the max in-degree");
            let max_out = (0..7).map(|v| t.dual().out_degree(v)).max().unwrap();
            assert_eq!(max_out, 4);
            assert!(in_residual_family(t));
        }
    }

    #[test]
    fn fmellor_indeg5_recipe_certifies() {
        // construct a tournament with an in-degree-5 vertex and check the recipe
        let mut g = OrientedGraph::new(7);
        for v in 0..5 {
            g.add_arc(v, 6).unwrap();
        }
        g.add_arc(6, 5).unwrap();
        let t = g.complete_to_tournament(CompletionPolicy::LowToHigh).unwrap();
        let sigma = fmellor_indeg5_labeling(&t).unwrap();
        assert!(is_certified_labeling(&t, &sigma, &EmbeddingCatalogue::fmellor_k7()).unwrap());
    }
}
