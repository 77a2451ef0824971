//! Isomorph-free generation of cancellative 3-graphs on few vertices.
//!
//! Generation goes level by level in the number of edges. Every class on
//! `m + 1` edges arises from a class on `m` edges by adding one edge,
//! because deleting an edge keeps a graph cancellative. Each level is
//! therefore built by extending every representative of the previous level
//! by every admissible triple, and duplicates are removed by canonical key.
//! Extensions of one level are independent and run through [`Exec`].

mod verify;

use std::collections::BTreeMap;

use crate::cancellative::extension_keeps_cancellative;
use crate::canonical::{canonical_form, CanonicalKey};
use crate::error::{Error, Result};
use crate::hypergraph::{Edge, UniformHypergraph};
use crate::par::Exec;

pub use verify::{
    verify_corollary_identity, verify_edge_extremal, verify_lambda1, verify_spectral_extremal,
    ClassRecord, CorollarySummary, EnumerationReport, Lambda1Summary, SpectralOptions, Verdict,
};

pub const MIN_ENUM_N: usize = 3;
pub const MAX_ENUM_N: usize = 7;

/// One isomorphism class of cancellative 3-graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CancellativeClass {
    pub key: CanonicalKey,
    /// The canonical representative.
    pub graph: UniformHypergraph,
    /// No edge can be added while staying cancellative.
    pub maximal: bool,
}

pub(crate) fn check_enum_range(n: usize) -> Result<()> {
    if !(MIN_ENUM_N..=MAX_ENUM_N).contains(&n) {
        return Err(Error::UnsupportedSize {
            what: "n",
            value: n,
            supported: "3 <= n <= 7 for exhaustive enumeration",
        });
    }
    Ok(())
}

fn all_triples(n: usize) -> Vec<Edge> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// All cancellative classes on `n` vertices (the empty graph included),
/// sorted by key.
pub fn cancellative_classes(n: usize, exec: Exec) -> Result<Vec<CancellativeClass>> {
    check_enum_range(n)?;
    let triples = all_triples(n);
    let empty = UniformHypergraph::empty(n);
    let (k0, g0) = canonical_form(&empty)?;
    let mut done: BTreeMap<CanonicalKey, (UniformHypergraph, bool)> = BTreeMap::new();
    let mut level: Vec<(CanonicalKey, UniformHypergraph)> = vec![(k0, g0)];

    while !level.is_empty() {
        let extended: Vec<Result<Vec<(CanonicalKey, UniformHypergraph)>>> =
            exec.map(&level, |(_, g)| {
                triples
                    .iter()
                    .filter(|e| !g.contains_edge(**e) && extension_keeps_cancellative(g, e))
                    .map(|e| canonical_form(&g.with_edge(*e)?))
                    .collect()
            });
        let mut next: BTreeMap<CanonicalKey, UniformHypergraph> = BTreeMap::new();
        for ((key, g), ext) in level.into_iter().zip(extended) {
            let ext = ext?;
            done.insert(key, (g, ext.is_empty()));
            for (k, h) in ext {
                next.entry(k).or_insert(h);
            }
        }
        level = next.into_iter().collect();
    }
    Ok(done
        .into_iter()
        .map(|(key, (graph, maximal))| CancellativeClass {
            key,
            graph,
            maximal,
        })
        .collect())
}

/// Calls `callback` once per cancellative isomorphism class on `n`
/// vertices (in key order) and returns the number of classes.
pub fn enumerate_cancellative<F>(n: usize, exec: Exec, mut callback: F) -> Result<usize>
where
    F: FnMut(&CanonicalKey, &UniformHypergraph),
{
    let classes = cancellative_classes(n, exec)?;
    for c in &classes {
        callback(&c.key, &c.graph);
    }
    Ok(classes.len())
}
