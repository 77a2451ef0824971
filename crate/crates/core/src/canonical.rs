//! Isomorphism-class keys for small 3-graphs.
//!
//! A labeling of the vertices turns the edge set into a bit string indexed
//! by triples in colex order (`(a, b, c)` with `a < b < c` ordered by `c`,
//! then `b`, then `a`). The key is the extremal bit string over all
//! labelings; the search only visits labelings that
//!
//! * respect an isomorphism-invariant ordered vertex partition (degree,
//!   refined by the colors seen in each link), and
//! * never place a vertex before a smaller-index *twin* (a vertex whose
//!   transposition with it is an automorphism) that is still unplaced.
//!
//! Colex order makes the bits of triples inside the first `k` labels a
//! prefix of the string, so partial labelings whose prefix already loses
//! are cut off.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Edge, UniformHypergraph};

/// Largest vertex count accepted by [`canonical_key`].
pub const MAX_CANONICAL_N: usize = 10;

/// Bytes identifying an isomorphism class: the vertex count followed by
/// the edge bit string (big-endian, colex triple order). Serialized as
/// lowercase hex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct CanonicalKey(Vec<u8>);

impl From<CanonicalKey> for String {
    fn from(k: CanonicalKey) -> String {
        k.to_hex()
    }
}

impl TryFrom<String> for CanonicalKey {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        Self::from_hex(&s)
    }
}

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidArgument(format!("bad key {s:?}: {msg}"));
        if s.len() % 2 != 0 {
            return Err(bad("odd length"));
        }
        let bytes = (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&s[i..i + 2], 16).map_err(|_| bad("not hex")))
            .collect::<Result<Vec<u8>>>()?;
        let key = Self(bytes);
        key.to_hypergraph()?;
        Ok(key)
    }

    /// The canonical representative this key encodes.
    pub fn to_hypergraph(&self) -> Result<UniformHypergraph> {
        let bad = |msg: &str| Error::InvalidArgument(format!("malformed key: {msg}"));
        let (&n, rest) = self.0.split_first().ok_or_else(|| bad("empty"))?;
        let n = n as usize;
        if n > MAX_CANONICAL_N {
            return Err(bad("vertex count too large"));
        }
        if rest.len() != key_len(n) {
            return Err(bad("wrong length"));
        }
        let mut buf = [0u8; 16];
        buf[..rest.len()].copy_from_slice(rest);
        let bits = u128::from_be_bytes(buf);
        let mut edges = Vec::new();
        for c in 2..n {
            for b in 1..c {
                for a in 0..b {
                    if bits & bit(colex_index(a, b, c)) != 0 {
                        edges.push([a, b, c]);
                    }
                }
            }
        }
        edges.sort_unstable();
        Ok(UniformHypergraph::from_canonical_parts(n, edges))
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

fn key_len(n: usize) -> usize {
    binom3(n).div_ceil(8)
}

fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

fn binom3(k: usize) -> usize {
    if k < 3 {
        0
    } else {
        k * (k - 1) * (k - 2) / 6
    }
}

fn colex_index(a: usize, b: usize, c: usize) -> usize {
    binom3(c) + binom2(b) + a
}

fn bit(idx: usize) -> u128 {
    1u128 << (127 - idx)
}

fn prefix_mask(len: usize) -> u128 {
    if len == 0 {
        0
    } else {
        !0u128 << (128 - len)
    }
}

/// Isomorphism-invariant ordered coloring: degree (descending), refined
/// by the multiset of color pairs in each link until stable.
fn refined_colors(g: &UniformHypergraph, inc: &[Vec<(usize, usize)>]) -> Vec<usize> {
    let n = g.n();
    let degrees: Vec<usize> = inc.iter().map(Vec::len).collect();
    let mut colors = rank_by(n, |v| std::cmp::Reverse(degrees[v]));
    let mut classes = count_classes(&colors);
    loop {
        let sigs: Vec<(usize, Vec<(usize, usize)>)> = (0..n)
            .map(|v| {
                let mut s: Vec<(usize, usize)> = inc[v]
                    .iter()
                    .map(|&(a, b)| {
                        let (x, y) = (colors[a], colors[b]);
                        if x <= y {
                            (x, y)
                        } else {
                            (y, x)
                        }
                    })
                    .collect();
                s.sort_unstable();
                (colors[v], s)
            })
            .collect();
        let next = rank_by(n, |v| sigs[v].clone());
        let next_classes = count_classes(&next);
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn rank_by<K: Ord, F: Fn(usize) -> K>(n: usize, key: F) -> Vec<usize> {
    let keys: Vec<K> = (0..n).map(&key).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut rank = vec![0; n];
    let mut r = 0;
    for i in 0..n {
        if i > 0 && keys[order[i]] != keys[order[i - 1]] {
            r += 1;
        }
        rank[order[i]] = r;
    }
    rank
}

fn count_classes(colors: &[usize]) -> usize {
    colors.iter().max().map_or(0, |m| m + 1)
}

/// `twin_rep[v]`: smallest vertex `w` such that swapping `v` and `w` is
/// an automorphism.
fn twin_representatives(g: &UniformHypergraph, colors: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut rep: Vec<usize> = (0..n).collect();
    for v in 0..n {
        for w in 0..v {
            if rep[w] != w || colors[w] != colors[v] {
                continue;
            }
            let swaps_ok = g.edges().iter().all(|e| {
                let hv = e.contains(&v);
                let hw = e.contains(&w);
                if hv == hw {
                    return true;
                }
                let swapped = e.map(|x| {
                    if x == v {
                        w
                    } else if x == w {
                        v
                    } else {
                        x
                    }
                });
                g.contains_edge(swapped)
            });
            if swaps_ok {
                rep[v] = w;
                break;
            }
        }
    }
    rep
}

struct Search<'a> {
    n: usize,
    inc: &'a [Vec<(usize, usize)>],
    colors: Vec<usize>,
    /// Color that must sit at each label position.
    slot_color: Vec<usize>,
    twin_rep: Vec<usize>,
    label: Vec<Option<usize>>,
    best: Option<(u128, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, bits: u128) {
        if pos == self.n {
            let better = match &self.best {
                None => true,
                Some((b, _)) => bits > *b,
            };
            if better {
                let perm = self.label.iter().map(|l| l.unwrap()).collect();
                self.best = Some((bits, perm));
            }
            return;
        }
        let want = self.slot_color[pos];
        let mask = prefix_mask(binom3(pos + 1));
        for v in 0..self.n {
            if self.label[v].is_some() || self.colors[v] != want {
                continue;
            }
            let rep = self.twin_rep[v];
            if (0..v).any(|u| self.twin_rep[u] == rep && self.label[u].is_none()) {
                continue;
            }
            let mut next = bits;
            for &(a, b) in &self.inc[v] {
                if let (Some(la), Some(lb)) = (self.label[a], self.label[b]) {
                    let (x, y) = if la < lb { (la, lb) } else { (lb, la) };
                    next |= bit(colex_index(x, y, pos));
                }
            }
            if let Some((best, _)) = &self.best {
                if (next & mask).cmp(&(best & mask)) == Ordering::Less {
                    continue;
                }
            }
            self.label[v] = Some(pos);
            self.run(pos + 1, next);
            self.label[v] = None;
        }
    }
}

/// Canonical key together with a labeling `perm` (vertex `v` gets label
/// `perm[v]`) that maps `g` onto the representative.
pub fn canonical_labeling(g: &UniformHypergraph) -> Result<(CanonicalKey, Vec<usize>)> {
    let n = g.n();
    if n > MAX_CANONICAL_N {
        return Err(Error::UnsupportedSize {
            what: "n",
            value: n,
            supported: "n <= 10 for canonical keys",
        });
    }
    let inc = g.incidence();
    let colors = refined_colors(g, &inc);
    let mut slot_color = colors.clone();
    slot_color.sort_unstable();
    let twin_rep = twin_representatives(g, &colors);
    let mut search = Search {
        n,
        inc: &inc,
        colors,
        slot_color,
        twin_rep,
        label: vec![None; n],
        best: None,
    };
    search.run(0, 0);
    let (bits, perm) = search.best.expect("at least one labeling is visited");
    let mut bytes = Vec::with_capacity(1 + key_len(n));
    bytes.push(n as u8);
    bytes.extend_from_slice(&bits.to_be_bytes()[..key_len(n)]);
    Ok((CanonicalKey(bytes), perm))
}

/// Key identifying the isomorphism class of `g` (`n <= 10`).
pub fn canonical_key(g: &UniformHypergraph) -> Result<CanonicalKey> {
    canonical_labeling(g).map(|(k, _)| k)
}

/// The canonical representative of `g`'s class, with its key.
pub fn canonical_form(g: &UniformHypergraph) -> Result<(CanonicalKey, UniformHypergraph)> {
    let (key, perm) = canonical_labeling(g)?;
    let edges: Vec<Edge> = g.edges().iter().map(|e| e.map(|v| perm[v])).collect();
    let h = UniformHypergraph::new(g.n(), edges)?;
    Ok((key, h))
}
