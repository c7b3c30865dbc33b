//! Exact canonical forms for edge-coloured cliques.
//!
//! Internally colourings are compared as *colex* strings: the edge list
//! ordered by increasing higher endpoint, i.e. (0,1), (0,2), (1,2), (0,3),
//! (1,3), (2,3), ... In this order the string of K_m is a prefix of the
//! string of K_{m+1}, which is what makes the orderly enumeration in the
//! search module work: restricting a canonical colouring to its first m
//! vertices yields a canonical colouring.
//!
//! The canonical representative of a colouring is the lexicographic minimum
//! of its colex string over all n! vertex relabelings. Colours are never
//! permuted: a colouring and its colour-swap are distinct objects unless
//! some vertex bijection happens to identify them. The minimum is found by
//! a position-by-position branch and bound over permutation prefixes; the
//! per-colour degree profile orders the candidates so a small labelling is
//! found early and most branches die on the prefix comparison.

use crate::colouring::{edge_index, pairs, Colouring};

/// Default cap for exact canonicalisation (n! search).
pub const DEFAULT_CAP: usize = 10;

/// Index of the pair (u, v), u < v, in colex order.
#[inline]
pub(crate) fn colex_index(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

pub(crate) fn row_major_to_colex(n: usize, edges: &[u32]) -> Vec<u32> {
    let mut colex = vec![0u32; edges.len()];
    for (u, v) in pairs(n) {
        colex[colex_index(u, v)] = edges[edge_index(n, u, v)];
    }
    colex
}

pub(crate) fn colex_to_row_major(n: usize, colex: &[u32]) -> Vec<u32> {
    let mut edges = vec![0u32; colex.len()];
    for (u, v) in pairs(n) {
        edges[edge_index(n, u, v)] = colex[colex_index(u, v)];
    }
    edges
}

/// Rebuild a colouring from a colex string.
pub(crate) fn colouring_from_colex(n: usize, s: usize, colex: &[u32]) -> Colouring {
    Colouring::new(n, s, colex_to_row_major(n, colex)).expect("valid colex string")
}

#[inline]
fn colex_col(colex: &[u32], u: usize, v: usize) -> u32 {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    colex[colex_index(a, b)]
}

struct MinSearch<'a> {
    n: usize,
    colex: &'a [u32],
    best: Vec<u32>,
    cur: Vec<u32>,
    perm: Vec<usize>,
    used: Vec<bool>,
    order: Vec<usize>,
}

impl<'a> MinSearch<'a> {
    fn place(&mut self, pos: usize) {
        if pos == self.n {
            if self.cur < self.best {
                self.best.copy_from_slice(&self.cur);
            }
            return;
        }
        let start = pos * (pos + 1) / 2 - pos; // == colex index of (0, pos)
        for oi in 0..self.n {
            let w = self.order[oi];
            if self.used[w] {
                continue;
            }
            for i in 0..pos {
                self.cur[start + i] = colex_col(self.colex, self.perm[i], w);
            }
            let len = start + pos;
            if self.cur[..len] > self.best[..len] {
                continue; // every completion is lexicographically larger
            }
            self.perm[pos] = w;
            self.used[w] = true;
            self.place(pos + 1);
            self.used[w] = false;
        }
    }
}

/// Lexicographic minimum of the colex string over all vertex relabelings.
pub fn canonical_colex(n: usize, colex: &[u32]) -> Vec<u32> {
    assert_eq!(colex.len(), n * (n - 1) / 2);
    if n <= 1 {
        return colex.to_vec();
    }
    // try vertices with small incident colour profiles first
    let mut keys: Vec<(Vec<u32>, usize)> = (0..n)
        .map(|v| {
            let mut incident: Vec<u32> =
                (0..n).filter(|&u| u != v).map(|u| colex_col(colex, u, v)).collect();
            incident.sort_unstable();
            (incident, v)
        })
        .collect();
    keys.sort();
    let order: Vec<usize> = keys.into_iter().map(|(_, v)| v).collect();

    let mut search = MinSearch {
        n,
        colex,
        best: colex.to_vec(),
        cur: vec![0u32; colex.len()],
        perm: vec![usize::MAX; n],
        used: vec![false; n],
        order,
    };
    search.place(0);
    search.best
}

/// True iff `colex` is already the canonical representative of its class.
/// Exits as soon as any relabeling produces a smaller string.
pub fn is_canonical_colex(n: usize, colex: &[u32]) -> bool {
    assert_eq!(colex.len(), n * (n - 1) / 2);
    if n <= 2 {
        return true;
    }
    // quick reject: the first entry must be the smallest colour present
    let min_colour = *colex.iter().min().expect("nonempty");
    if colex[0] > min_colour {
        return false;
    }
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut cur = vec![0u32; colex.len()];
    !smaller_exists(n, colex, &mut perm, &mut used, &mut cur, 0)
}

fn smaller_exists(
    n: usize,
    colex: &[u32],
    perm: &mut [usize],
    used: &mut [bool],
    cur: &mut [u32],
    pos: usize,
) -> bool {
    if pos == n {
        return false; // full permutation with string equal to the input
    }
    let start = pos * (pos + 1) / 2 - pos;
    for w in 0..n {
        if used[w] {
            continue;
        }
        for i in 0..pos {
            cur[start + i] = colex_col(colex, perm[i], w);
        }
        let len = start + pos;
        match cur[..len].cmp(&colex[..len]) {
            std::cmp::Ordering::Greater => continue,
            std::cmp::Ordering::Less => return true,
            std::cmp::Ordering::Equal => {
                perm[pos] = w;
                used[w] = true;
                if smaller_exists(n, colex, perm, used, cur, pos + 1) {
                    return true;
                }
                used[w] = false;
            }
        }
    }
    false
}
