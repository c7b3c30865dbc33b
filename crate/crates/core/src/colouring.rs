//! Edge-coloured cliques: the colouring type, colour classes, forbidden
//! patterns and palettes, plus the `ehc v1` text format.
//!
//! A [`Colouring`] stores the upper triangle of the colour matrix row-major:
//! pairs (0,1), (0,2), ..., (0,n-1), (1,2), ... with colours `1..=s`.
//! Colours may go unused; the palette size `s` is part of the value and is
//! significant (a colouring using 2 of 3 colours is not the same object as
//! the same edges with s = 2).

use crate::bitgraph::BitGraph;
use crate::canon;
use crate::{Error, Result};

/// Row-major index of the pair (u, v), u < v, among the C(n,2) edges.
pub(crate) fn edge_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// All pairs (u, v), u < v, in row-major order (the storage order).
pub(crate) fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// An s-edge-colouring of the complete graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Colouring {
    n: usize,
    s: usize,
    edges: Vec<u32>,
}

/// One colour's graph `G_i`.
#[derive(Clone, Debug)]
pub struct ColourClass {
    pub colour: u32,
    pub graph: BitGraph,
}

impl Colouring {
    /// Build a colouring from the row-major edge colour list.
    pub fn new(n: usize, s: usize, edges: Vec<u32>) -> Result<Self> {
        if n == 0 || s == 0 {
            return Err(Error::BadParameters(format!("n={n}, s={s}; both must be positive")));
        }
        let expected = n * (n - 1) / 2;
        if edges.len() != expected {
            return Err(Error::EdgeCountMismatch { n, expected, got: edges.len() });
        }
        if let Some(&colour) = edges.iter().find(|&&c| c == 0 || c as usize > s) {
            return Err(Error::ColourOutOfRange { colour, s });
        }
        Ok(Colouring { n, s, edges })
    }

    /// The colouring of K_n with every edge the same colour.
    pub fn constant(n: usize, s: usize, colour: u32) -> Result<Self> {
        Colouring::new(n, s, vec![colour; n * (n - 1) / 2])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Palette size (colours are 1..=s; not all need be used).
    pub fn s(&self) -> usize {
        self.s
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Raw row-major colour list.
    pub fn edge_colours(&self) -> &[u32] {
        &self.edges
    }

    /// Colour of the edge {u, v}; symmetric in its arguments.
    pub fn colour_of(&self, u: usize, v: usize) -> Result<u32> {
        if u == v || u >= self.n || v >= self.n {
            return Err(Error::BadVertexPair { u, v, n: self.n });
        }
        Ok(self.col(u, v))
    }

    /// Unchecked access for hot paths; u != v, both < n.
    #[inline]
    pub(crate) fn col(&self, u: usize, v: usize) -> u32 {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges[edge_index(self.n, a, b)]
    }

    pub(crate) fn set_col(&mut self, u: usize, v: usize, colour: u32) {
        debug_assert!(colour >= 1 && colour as usize <= self.s);
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        let idx = edge_index(self.n, a, b);
        self.edges[idx] = colour;
    }

    /// The graph of one colour.
    pub fn class_graph(&self, colour: u32) -> BitGraph {
        let mut g = BitGraph::new(self.n);
        for (u, v) in pairs(self.n) {
            if self.edges[edge_index(self.n, u, v)] == colour {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// All s colour classes; class i holds exactly the edges coloured i, so
    /// the classes partition the edge set of K_n (empty classes included).
    pub fn colour_classes(&self) -> Vec<ColourClass> {
        (1..=self.s as u32)
            .map(|colour| ColourClass { colour, graph: self.class_graph(colour) })
            .collect()
    }

    /// |c|: the number of colours with a nonempty class.
    pub fn used_colours(&self) -> usize {
        self.used_colour_set().len()
    }

    /// Sorted list of colours that actually appear.
    pub fn used_colour_set(&self) -> Vec<u32> {
        let mut seen = vec![false; self.s + 1];
        for &c in &self.edges {
            seen[c as usize] = true;
        }
        (1..=self.s as u32).filter(|&c| seen[c as usize]).collect()
    }

    /// Per-vertex colour degree vectors: `cd[v][c-1]` counts edges of colour
    /// c at vertex v.
    pub(crate) fn colour_degrees(&self) -> Vec<Vec<u32>> {
        let mut cd = vec![vec![0u32; self.s]; self.n];
        for (u, v) in pairs(self.n) {
            let c = self.edges[edge_index(self.n, u, v)] as usize - 1;
            cd[u][c] += 1;
            cd[v][c] += 1;
        }
        cd
    }

    /// Relabel vertices: vertex u of `self` becomes `perm[u]` in the result.
    pub fn relabel(&self, perm: &[usize]) -> Colouring {
        assert_eq!(perm.len(), self.n);
        let mut edges = vec![0u32; self.edges.len()];
        for (u, v) in pairs(self.n) {
            let (a, b) = if perm[u] < perm[v] { (perm[u], perm[v]) } else { (perm[v], perm[u]) };
            edges[edge_index(self.n, a, b)] = self.edges[edge_index(self.n, u, v)];
        }
        Colouring { n: self.n, s: self.s, edges }
    }

    /// Induced sub-colouring on `verts` (same palette).
    pub fn restrict(&self, verts: &[usize]) -> Colouring {
        let k = verts.len();
        let mut edges = Vec::with_capacity(k * (k - 1) / 2);
        for (i, j) in pairs(k) {
            edges.push(self.col(verts[i], verts[j]));
        }
        Colouring { n: k, s: self.s, edges }
    }

    /// Same edges under a larger palette.
    pub fn widen_palette(&self, s: usize) -> Result<Colouring> {
        if s < self.s {
            return Err(Error::BadParameters(format!(
                "cannot shrink palette from {} to {s}",
                self.s
            )));
        }
        Ok(Colouring { n: self.n, s, edges: self.edges.clone() })
    }

    /// Canonical byte string: equal for two colourings iff some vertex
    /// bijection maps one onto the other with colours fixed (colours are
    /// never permuted). Exact brute force with pruning, capped at n <= 10.
    pub fn canonical_form(&self) -> Result<Vec<u8>> {
        self.canonical_form_capped(canon::DEFAULT_CAP)
    }

    pub fn canonical_form_capped(&self, cap: usize) -> Result<Vec<u8>> {
        if self.n > cap {
            return Err(Error::CanonicalCapExceeded { n: self.n, cap });
        }
        if self.s > u8::MAX as usize {
            return Err(Error::BadParameters(format!(
                "canonical form supports s <= 255, got s={}",
                self.s
            )));
        }
        let colex = canon::row_major_to_colex(self.n, &self.edges);
        let min = canon::canonical_colex(self.n, &colex);
        Ok(min.into_iter().map(|c| c as u8).collect())
    }

    /// Serialise to `ehc v1` text.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str("ehc 1\n");
        out.push_str(&format!("{} {}\n", self.n, self.s));
        for u in 0..self.n.saturating_sub(1) {
            let row: Vec<String> =
                (u + 1..self.n).map(|v| self.edges[edge_index(self.n, u, v)].to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parse `ehc v1` text. Blank lines and lines starting with '#' are
    /// ignored; row breaks are not significant beyond ordering.
    pub fn parse(text: &str) -> Result<Colouring> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
        if header.split_whitespace().collect::<Vec<_>>() != ["ehc", "1"] {
            return Err(Error::Parse(format!("bad header {header:?}, expected \"ehc 1\"")));
        }
        let dims = lines.next().ok_or_else(|| Error::Parse("missing dimension line".into()))?;
        let mut it = dims.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad dimension line {dims:?}")))?;
        let s: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad dimension line {dims:?}")))?;
        if it.next().is_some() {
            return Err(Error::Parse(format!("trailing tokens on dimension line {dims:?}")));
        }
        let mut edges = Vec::with_capacity(n.saturating_mul(n.saturating_sub(1)) / 2);
        for line in lines {
            for tok in line.split_whitespace() {
                let c: u32 =
                    tok.parse().map_err(|_| Error::Parse(format!("bad colour token {tok:?}")))?;
                edges.push(c);
            }
        }
        Colouring::new(n, s, edges)
    }
}

/// A forbidden colour pattern: a small colouring (k >= 2) to exclude.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Pattern(Colouring);

impl Pattern {
    pub fn new(c: Colouring) -> Result<Pattern> {
        if c.n() < 2 {
            return Err(Error::BadParameters(format!("pattern needs k >= 2 vertices, got {}", c.n())));
        }
        Ok(Pattern(c))
    }

    /// Number of pattern vertices.
    pub fn k(&self) -> usize {
        self.0.n()
    }

    pub fn colouring(&self) -> &Colouring {
        &self.0
    }
}

impl std::ops::Deref for Pattern {
    type Target = Colouring;
    fn deref(&self) -> &Colouring {
        &self.0
    }
}

/// A forbidden palette: a colour histogram (t_1, ..., t_{s'}) on a k-clique.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Palette {
    k: usize,
    counts: Vec<usize>,
}

impl Palette {
    pub fn new(k: usize, counts: Vec<usize>) -> Result<Palette> {
        if k < 2 {
            return Err(Error::BadPalette(format!("clique size k={k} too small")));
        }
        if counts.is_empty() {
            return Err(Error::BadPalette("empty count tuple".into()));
        }
        let total: usize = counts.iter().sum();
        if total != k * (k - 1) / 2 {
            return Err(Error::BadPalette(format!(
                "counts sum to {total}, need k(k-1)/2 = {}",
                k * (k - 1) / 2
            )));
        }
        Ok(Palette { k, counts })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns;

    fn rainbow3() -> Colouring {
        Colouring::new(3, 3, vec![1, 2, 3]).unwrap()
    }

    #[test]
    fn new_colouring_basics() {
        let single = Colouring::new(2, 1, vec![1]).unwrap();
        assert_eq!((single.n(), single.s()), (2, 1));
        assert_eq!(rainbow3().edge_colours(), &[1, 2, 3]);
        assert!(matches!(
            Colouring::new(3, 2, vec![1, 1, 4]),
            Err(Error::ColourOutOfRange { colour: 4, s: 2 })
        ));
        assert!(matches!(
            Colouring::new(3, 2, vec![1, 1]),
            Err(Error::EdgeCountMismatch { expected: 3, got: 2, .. })
        ));
        assert!(Colouring::new(0, 1, vec![]).is_err());
    }

    #[test]
    fn colour_of_is_symmetric() {
        let c = rainbow3();
        assert_eq!(c.colour_of(0, 1).unwrap(), 1);
        assert_eq!(c.colour_of(2, 1).unwrap(), 3);
        assert_eq!(c.colour_of(1, 2).unwrap(), c.colour_of(2, 1).unwrap());
        assert!(c.colour_of(0, 0).is_err());
        assert!(c.colour_of(0, 3).is_err());
    }

    #[test]
    fn classes_partition_the_edges() {
        // monochromatic K_4 with an unused second colour
        let mono = Colouring::constant(4, 2, 1).unwrap();
        let classes = mono.colour_classes();
        assert_eq!(classes.len(), 2);
        assert_eq!(classes[0].graph.edge_count(), 6);
        assert_eq!(classes[1].graph.edge_count(), 0);
        assert_eq!(mono.used_colours(), 1);

        let rb = rainbow3();
        assert!(rb.colour_classes().iter().all(|cl| cl.graph.edge_count() == 1));
        assert_eq!(rb.used_colours(), 3);

        // both classes of the double-P4 colouring are 3-edge paths
        let dp = patterns::double_p4();
        assert_eq!(dp.used_colours(), 2);
        for class in dp.colour_classes() {
            assert_eq!(class.graph.edge_count(), 3);
            let mut degs: Vec<usize> = (0..4).map(|v| class.graph.degree(v)).collect();
            degs.sort_unstable();
            assert_eq!(degs, vec![1, 1, 2, 2]);
            assert_eq!(class.graph.components().len(), 1);
        }
    }

    #[test]
    fn restriction_and_relabel() {
        let dp = patterns::double_p4();
        let tri = dp.restrict(&[0, 1, 3]);
        assert_eq!(tri.n(), 3);
        assert_eq!(tri.colour_of(0, 1).unwrap(), dp.colour_of(0, 1).unwrap());
        assert_eq!(tri.colour_of(1, 2).unwrap(), dp.colour_of(1, 3).unwrap());

        let perm = vec![2, 0, 1];
        let r = rainbow3().relabel(&perm);
        assert_eq!(r.colour_of(2, 0).unwrap(), 1);
        assert_eq!(r.colour_of(2, 1).unwrap(), 2);
        assert_eq!(r.colour_of(0, 1).unwrap(), 3);
    }

    #[test]
    fn serialize_round_trip() {
        let rb = rainbow3();
        assert_eq!(rb.serialize(), "ehc 1\n3 3\n1 2\n3\n");
        assert_eq!(Colouring::parse(&rb.serialize()).unwrap(), rb);

        let dp = patterns::double_p4().colouring().clone();
        let text = dp.serialize();
        assert_eq!(Colouring::parse(&text).unwrap(), dp);

        // comments and blank lines are ignored
        let noisy = "# a comment\n\nehc 1\n# dims\n4 2\n1 2 2\n1 2\n1\n";
        assert_eq!(Colouring::parse(noisy).unwrap(), dp);

        // single vertex: header only
        let k1 = Colouring::new(1, 2, vec![]).unwrap();
        assert_eq!(Colouring::parse(&k1.serialize()).unwrap(), k1);
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(Colouring::parse("").is_err());
        assert!(Colouring::parse("ehc 2\n3 3\n1 2\n3\n").is_err());
        assert!(Colouring::parse("ehc 1\n3 3\n1 2\n").is_err()); // 2 entries for n=3
        assert!(Colouring::parse("ehc 1\n3 2\n1 2\n3\n").is_err()); // colour out of range
        assert!(Colouring::parse("ehc 1\n3\n1 2\n3\n").is_err());
        assert!(Colouring::parse("ehc 1\n3 3\n1 x\n3\n").is_err());
    }

    #[test]
    fn widen_palette_keeps_edges() {
        let rb = rainbow3();
        let wide = rb.widen_palette(5).unwrap();
        assert_eq!(wide.s(), 5);
        assert_eq!(wide.edge_colours(), rb.edge_colours());
        assert!(rb.widen_palette(2).is_err());
    }

    #[test]
    fn palette_validation() {
        let p = Palette::new(3, vec![2, 1]).unwrap();
        assert_eq!(p.counts(), &[2, 1]);
        assert!(Palette::new(3, vec![2, 2]).is_err());
        assert!(Palette::new(3, vec![]).is_err());
        assert!(Palette::new(1, vec![0]).is_err());
    }

    #[test]
    fn pattern_needs_two_vertices() {
        assert!(Pattern::new(Colouring::new(1, 1, vec![]).unwrap()).is_err());
        assert!(Pattern::new(rainbow3()).is_ok());
    }
}
