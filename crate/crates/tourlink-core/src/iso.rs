//! Canonical forms and isomorph-free enumeration of tournaments.
//!
//! The canonical form of a tournament is the minimum, over all vertex
//! relabelings, of its column-major orientation bitstring. Minimization runs
//! as a depth-first search over partial labelings with prefix pruning: the
//! bitstring is grouped so that placing one more vertex appends one block of
//! bits, and any partial labeling whose prefix already exceeds the best known
//! value is cut.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::digraph::Tournament;
use crate::Error;

/// Relabel-invariant key for a tournament isomorphism class, totally ordered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    bits: u64,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// The canonical representative tournament of this class.
    pub fn representative(&self) -> Tournament {
        Tournament::from_orient_bits(self.n, self.bits)
            .expect("canonical form stores a valid code")
    }

    pub fn to_hex(&self) -> String {
        format!("{:02}:{:016x}", self.n, self.bits)
    }
}

struct MinSearch<'a> {
    t: &'a Tournament,
    n: usize,
    total_bits: u32,
    best: u64,
    perm: Vec<usize>,
    used: Vec<bool>,
}

impl MinSearch<'_> {
    /// Bits contributed by placing vertex `v` at position `level`: pairs
    /// `(0, level) .. (level-1, level)`, most significant first. Bit set iff
    /// the arc runs earlier-position -> v.
    fn block(&self, v: usize, level: usize) -> u64 {
        let mut b = 0u64;
        for pos in 0..level {
            b = (b << 1) | u64::from(self.t.has_arc(self.perm[pos], v));
        }
        b
    }

    fn dfs(&mut self, level: usize, prefix: u64, prefix_bits: u32) {
        if level == self.n {
            if prefix < self.best {
                self.best = prefix;
            }
            return;
        }
        for v in 0..self.n {
            if self.used[v] {
                continue;
            }
            let block = self.block(v, level);
            let new_bits = prefix_bits + level as u32;
            let new_prefix = (prefix << level) | block;
            // compare against the same-length prefix of the best complete value
            if new_prefix > self.best >> (self.total_bits - new_bits) {
                continue;
            }
            self.used[v] = true;
            self.perm[level] = v;
            self.dfs(level + 1, new_prefix, new_bits);
            self.used[v] = false;
        }
    }
}

/// Minimum orientation bitstring over all relabelings. Supports `n <= 10`.
pub fn canonical_form(t: &Tournament) -> Result<CanonicalForm, Error> {
    let n = t.n();
    if n > 10 {
        return Err(Error::UnsupportedSize(n));
    }
    let total_bits = (n * (n - 1) / 2) as u32;
    let mut search = MinSearch {
        t,
        n,
        total_bits,
        best: t.orient_bits()?,
        perm: vec![0; n],
        used: vec![false; n],
    };
    search.dfs(0, 0, 0);
    Ok(CanonicalForm {
        n,
        bits: search.best,
    })
}

/// All `n!` vertex bijections in lexicographic order. Supports `n <= 8`.
pub fn all_labelings(n: usize) -> Result<Vec<Vec<usize>>, Error> {
    if n > 8 {
        return Err(Error::UnsupportedSize(n));
    }
    Ok((0..n).permutations(n).collect())
}

/// One canonical representative per isomorphism class of tournaments on `n`
/// vertices, in canonical-form order. Supports `3 <= n <= 8`.
///
/// Classes on `k+1` vertices are generated by extending each `k`-vertex
/// representative with one new vertex in all `2^k` ways and canonicalizing;
/// this keeps the candidate count far below the `2^(n choose 2)` raw
/// orientations.
pub fn enumerate_tournaments(n: usize) -> Result<Vec<Tournament>, Error> {
    let forms = enumerate_forms(n)?;
    Ok(forms.iter().map(|f| f.representative()).collect())
}

/// Canonical forms of all isomorphism classes on `n` vertices, sorted.
pub fn enumerate_forms(n: usize) -> Result<Vec<CanonicalForm>, Error> {
    if !(3..=8).contains(&n) {
        return Err(Error::UnsupportedSize(n));
    }
    let mut classes: BTreeSet<CanonicalForm> = BTreeSet::new();
    for code in 0..8u64 {
        let t = Tournament::from_orient_bits(3, code)?;
        classes.insert(canonical_form(&t)?);
    }
    for k in 3..n {
        let mut next: BTreeSet<CanonicalForm> = BTreeSet::new();
        for form in &classes {
            let base = form.representative();
            for ext in 0..(1u64 << k) {
                let mut arcs: Vec<(usize, usize)> = base.arcs().collect();
                for i in 0..k {
                    if ext >> i & 1 == 1 {
                        arcs.push((i, k));
                    } else {
                        arcs.push((k, i));
                    }
                }
                let t = Tournament::from_arcs(k + 1, &arcs)?;
                next.insert(canonical_form(&t)?);
            }
        }
        classes = next;
    }
    Ok(classes.into_iter().collect())
}
