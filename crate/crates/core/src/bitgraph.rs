//! Undirected graphs on `0..n` stored as bitmask adjacency rows.
//!
//! Rows are `words_per_row` machine words each, packed into one flat vector.
//! This is the working representation for every solver in the crate; n is
//! desk-scale (hundreds), so no effort is spent on anything fancier.

/// Number of 64-bit words needed for `n` bits.
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Iterate the set bit positions of a word slice.
pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        std::iter::successors(Some(w), |&w| Some(w & (w - 1)))
            .take_while(|&w| w != 0)
            .map(move |w| wi * 64 + w.trailing_zeros() as usize)
    })
}

pub(crate) fn count_bits(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl BitGraph {
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        BitGraph { n, words, rows: vec![0; n * words] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = BitGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn words_per_row(&self) -> usize {
        self.words
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        count_bits(self.row(v))
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbours(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Complement within the clique on the same vertex set (no loops).
    pub fn complement(&self) -> BitGraph {
        let mut g = BitGraph::new(self.n);
        for v in 0..self.n {
            for w in 0..self.words {
                g.rows[v * self.words + w] = !self.rows[v * self.words + w];
            }
            // clear the loop bit and the padding above n
            g.rows[v * self.words + v / 64] &= !(1u64 << (v % 64));
            if self.n % 64 != 0 {
                g.rows[v * self.words + self.words - 1] &= (1u64 << (self.n % 64)) - 1;
            }
        }
        g
    }

    /// Subgraph induced by `verts`; vertex i of the result is `verts[i]`.
    pub fn induced(&self, verts: &[usize]) -> BitGraph {
        let mut g = BitGraph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Connected components, each sorted ascending; components ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for u in self.neighbours(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_and_complement() {
        let g = BitGraph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]);
        assert!(g.has_edge(1, 0) && g.has_edge(2, 1) && g.has_edge(4, 3));
        assert!(!g.has_edge(0, 2) && !g.has_edge(0, 0));
        assert_eq!(g.edge_count(), 3);
        let c = g.complement();
        assert_eq!(c.edge_count(), 10 - 3);
        assert!(c.has_edge(0, 2) && !c.has_edge(0, 1));
        for v in 0..5 {
            assert!(!c.has_edge(v, v));
        }
    }

    #[test]
    fn components_and_induced() {
        let g = BitGraph::from_edges(6, &[(0, 1), (1, 2), (4, 5)]);
        let comps = g.components();
        assert_eq!(comps, vec![vec![0, 1, 2], vec![3], vec![4, 5]]);
        let h = g.induced(&[0, 1, 4, 5]);
        assert_eq!(h.edge_count(), 2);
        assert!(h.has_edge(0, 1) && h.has_edge(2, 3));
    }

    #[test]
    fn multiword_rows() {
        let n = 130;
        let mut g = BitGraph::new(n);
        g.add_edge(0, 129);
        g.add_edge(64, 65);
        assert!(g.has_edge(129, 0) && g.has_edge(65, 64));
        assert_eq!(g.degree(129), 1);
        assert_eq!(g.complement().degree(129), n - 2);
        assert_eq!(iter_bits(g.row(0)).collect::<Vec<_>>(), vec![129]);
    }
}
