//! Labeled simple graphs and the Lights Out game played on them.
//!
//! Vertices are 0-based in this API; the CLI, JSON output and the C ABI
//! present them 1-based. The edge set is a bit-set over vertex pairs
//! `{i, j}` with `i < j`, ordered by `(j, i)` ascending. That is the graph6
//! column order, so `(0,1), (0,2), (1,2), (0,3), ...`.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{self, Gf2Matrix, Gf2Vector};

/// Largest vertex count accepted by [`canonical_form`].
pub const CANONICAL_FORM_MAX_N: usize = 8;

/// Number of unordered pairs of `n` vertices.
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of `{i, j}` in the pair ordering.
#[inline]
pub fn pair_index(i: usize, j: usize) -> usize {
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    debug_assert!(lo != hi);
    hi * (hi - 1) / 2 + lo
}

/// Inverse of [`pair_index`].
pub fn pair_at(index: usize) -> (usize, usize) {
    // largest hi with hi*(hi-1)/2 <= index
    let mut hi = (((8 * index + 1) as f64).sqrt() as usize).div_ceil(2);
    while hi * (hi - 1) / 2 > index {
        hi -= 1;
    }
    while (hi + 1) * hi / 2 <= index {
        hi += 1;
    }
    (index - hi * (hi - 1) / 2, hi)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n >= 1, "graphs have at least one vertex");
        Self {
            n,
            edges: vec![0; pair_count(n).div_ceil(64)],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for p in 0..pair_count(n) {
            g.set_pair(p, true);
        }
        g
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("graphs have at least one vertex"));
        }
        let mut g = Self::empty(n);
        for (i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    /// Cycle through `0, 1, ..., n-1`; a single vertex or edge for `n < 3`.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.set_pair(pair_index(0, n - 1), true);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 1..n {
            g.set_pair(pair_index(i - 1, i), true);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        self.check_pair(i, j)?;
        self.set_pair(pair_index(i, j), true);
        Ok(())
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) -> Result<()> {
        self.check_pair(i, j)?;
        self.set_pair(pair_index(i, j), false);
        Ok(())
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        if i == j {
            return Err(Error::invalid(format!("self-loop at vertex {i}")));
        }
        if i >= self.n || j >= self.n {
            return Err(Error::invalid(format!(
                "edge ({i}, {j}) out of range for {} vertices",
                self.n
            )));
        }
        Ok(())
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && i < self.n && j < self.n && self.pair(pair_index(i, j))
    }

    #[inline]
    pub fn pair(&self, index: usize) -> bool {
        (self.edges[index / 64] >> (index % 64)) & 1 == 1
    }

    #[inline]
    pub fn set_pair(&mut self, index: usize, value: bool) {
        assert!(
            index < pair_count(self.n),
            "pair index {index} out of range"
        );
        let mask = 1u64 << (index % 64);
        if value {
            self.edges[index / 64] |= mask;
        } else {
            self.edges[index / 64] &= !mask;
        }
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Edges as `(i, j)` with `i < j`, in pair order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges
            .iter()
            .enumerate()
            .flat_map(|(w, &word)| BitIter(word).map(move |b| pair_at(w * 64 + b)))
    }

    /// Adjacency rows packed like [`Gf2Matrix`] rows: `n * ceil(n/64)` words.
    pub fn adjacency_words(&self) -> Vec<u64> {
        let stride = self.n.div_ceil(64);
        let mut rows = vec![0u64; self.n * stride];
        for (i, j) in self.edges() {
            rows[i * stride + j / 64] |= 1 << (j % 64);
            rows[j * stride + i / 64] |= 1 << (i % 64);
        }
        rows
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(u, v))
    }

    /// Adjacency plus identity.
    pub fn neighborhood_matrix(&self) -> Gf2Matrix {
        let mut m = Gf2Matrix::identity(self.n);
        for (i, j) in self.edges() {
            m.set(i, j, true);
            m.set(j, i, true);
        }
        m
    }

    /// Every initial configuration can be switched off; holds exactly when the
    /// neighborhood matrix is invertible.
    pub fn is_universally_solvable(&self) -> bool {
        let n = self.n;
        let stride = n.div_ceil(64);
        let mut rows = self.adjacency_words();
        for i in 0..n {
            rows[i * stride + i / 64] |= 1 << (i % 64);
        }
        match stride {
            1 => gf2::rank_packed(&mut rows, n) == n,
            2 => {
                let mut packed: Vec<u128> = rows
                    .chunks_exact(2)
                    .map(|w| w[0] as u128 | (w[1] as u128) << 64)
                    .collect();
                gf2::rank_packed(&mut packed, n) == n
            }
            _ => self.neighborhood_matrix().is_invertible(),
        }
    }

    /// A press set that switches `config` off, or `None` if there is none.
    pub fn solve_configuration(&self, config: &Configuration) -> Result<Option<Vec<usize>>> {
        if config.n != self.n {
            return Err(Error::invalid(format!(
                "configuration has {} vertices, graph has {}",
                config.n, self.n
            )));
        }
        let x = self.neighborhood_matrix().solve(&config.to_vector())?;
        Ok(x.map(|x| x.ones().collect()))
    }

    /// Lights toggled by pressing each vertex of `presses` once.
    pub fn press(&self, presses: &[usize]) -> Result<Configuration> {
        let mut lit = vec![false; self.n];
        for &v in presses {
            if v >= self.n {
                return Err(Error::invalid(format!("vertex {v} out of range")));
            }
            lit[v] ^= true;
            for u in self.neighbors(v) {
                lit[u] ^= true;
            }
        }
        Ok(Configuration {
            n: self.n,
            on: lit
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| i)
                .collect(),
        })
    }

    /// Depth-first traversal from vertex 0, always stepping to the smallest
    /// unvisited neighbor.
    pub fn is_connected(&self) -> bool {
        let stride = self.n.div_ceil(64);
        let adj = self.adjacency_words();
        connected_from_rows(&adj, self.n, stride)
    }

    /// The relabeled graph with edges `{g(i), g(j)}`.
    pub fn apply_permutation(&self, g: &Permutation) -> Result<Graph> {
        if g.degree() != self.n {
            return Err(Error::invalid(format!(
                "permutation of degree {} applied to graph on {} vertices",
                g.degree(),
                self.n
            )));
        }
        let mut out = Graph::empty(self.n);
        for (i, j) in self.edges() {
            out.set_pair(pair_index(g.image(i), g.image(j)), true);
        }
        Ok(out)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (i, j)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", i + 1, j + 1)?;
        }
        write!(f, "])")
    }
}

pub(crate) fn connected_from_rows(adj: &[u64], n: usize, stride: usize) -> bool {
    let mut visited = vec![0u64; stride];
    visited[0] = 1;
    let mut seen = 1;
    let mut stack = Vec::with_capacity(n);
    stack.push(0usize);
    while let Some(&v) = stack.last() {
        let row = &adj[v * stride..(v + 1) * stride];
        let next = row
            .iter()
            .zip(&visited)
            .enumerate()
            .find_map(|(w, (&a, &s))| {
                let free = a & !s;
                (free != 0).then(|| w * 64 + free.trailing_zeros() as usize)
            });
        match next {
            Some(u) => {
                visited[u / 64] |= 1 << (u % 64);
                seen += 1;
                stack.push(u);
            }
            None => {
                stack.pop();
            }
        }
    }
    seen == n
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// The set of lit vertices at the start of a game.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration {
    n: usize,
    on: Vec<usize>,
}

impl Configuration {
    pub fn new(n: usize, on: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut on: Vec<usize> = on.into_iter().collect();
        if let Some(&v) = on.iter().find(|&&v| v >= n) {
            return Err(Error::invalid(format!(
                "vertex {v} out of range for {n} vertices"
            )));
        }
        on.sort_unstable();
        on.dedup();
        Ok(Self { n, on })
    }

    pub fn all_on(n: usize) -> Self {
        Self {
            n,
            on: (0..n).collect(),
        }
    }

    pub fn from_vector(v: &Gf2Vector) -> Self {
        Self {
            n: v.len(),
            on: v.ones().collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn on_set(&self) -> &[usize] {
        &self.on
    }

    pub fn to_vector(&self) -> Gf2Vector {
        Gf2Vector::from_ones(self.n, self.on.iter().copied()).expect("validated on construction")
    }
}

/// A bijection of `{0, ..., n-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::invalid(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Self { images })
    }

    /// Builds a permutation of degree `n` from disjoint cycles of 0-based labels.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (k, &v) in cycle.iter().enumerate() {
                if v >= n || std::mem::replace(&mut used[v], true) {
                    return Err(Error::invalid(format!(
                        "cycles {cycles:?} are not disjoint in 0..{n}"
                    )));
                }
                images[v] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Self { images: inv }
    }

    /// `counts[i - 1]` is the number of cycles of length `i`.
    pub fn cycle_type(&self) -> Vec<u32> {
        let n = self.degree();
        let mut counts = vec![0u32; n];
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = self.images[v];
                len += 1;
            }
            counts[len - 1] += 1;
        }
        counts
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut v = start;
            let mut first = true;
            while !seen[v] {
                seen[v] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", v + 1)?;
                first = false;
                v = self.images[v];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Lexicographically smallest upper-triangle adjacency string, in pair
/// order, over all relabelings. Brute force over `n!` permutations.
pub fn canonical_form(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if n > CANONICAL_FORM_MAX_N {
        return Err(Error::UnsupportedSize {
            what: "canonical form vertex count",
            value: n,
            limit: CANONICAL_FORM_MAX_N,
        });
    }
    let key = canonical_key(&small_adjacency(g), n);
    let len = pair_count(n);
    Ok((0..len)
        .map(|k| {
            if key >> (len - 1 - k) & 1 == 1 {
                '1'
            } else {
                '0'
            }
        })
        .collect())
}

pub(crate) fn small_adjacency(g: &Graph) -> [u8; 8] {
    let mut adj = [0u8; 8];
    for (i, j) in g.edges() {
        adj[i] |= 1 << j;
        adj[j] |= 1 << i;
    }
    adj
}

/// Minimal key over relabelings; the first pair is the most significant bit.
pub(crate) fn canonical_key(adj: &[u8; 8], n: usize) -> u32 {
    let key_of = |p: &[usize; 8]| -> u32 {
        let mut key = 0u32;
        for hi in 1..n {
            let row = adj[p[hi]];
            for &lo in &p[..hi] {
                key = key << 1 | (row >> lo & 1) as u32;
            }
        }
        key
    };
    // Heap's algorithm
    let mut p = [0, 1, 2, 3, 4, 5, 6, 7];
    let mut c = [0usize; 8];
    let mut best = key_of(&p);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            best = best.min(key_of(&p));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn star4() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn pair_order_matches_graph6_columns() {
        let expected = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3), (0, 4)];
        for (k, &(i, j)) in expected.iter().enumerate() {
            assert_eq!(pair_index(i, j), k);
            assert_eq!(pair_index(j, i), k);
            assert_eq!(pair_at(k), (i, j));
        }
        for k in 0..pair_count(200) {
            let (i, j) = pair_at(k);
            assert!(i < j);
            assert_eq!(pair_index(i, j), k);
        }
    }

    #[test]
    fn neighborhood_matrix_examples() {
        let c4 = Graph::cycle(4).neighborhood_matrix();
        let expected =
            Gf2Matrix::from_rows(&[[1u8, 1, 0, 1], [1, 1, 1, 0], [0, 1, 1, 1], [1, 0, 1, 1]])
                .unwrap();
        assert_eq!(c4, expected);
        assert_eq!(
            Graph::empty(6).neighborhood_matrix(),
            Gf2Matrix::identity(6)
        );
        let star =
            Gf2Matrix::from_rows(&[[1u8, 1, 1, 1], [1, 1, 0, 0], [1, 0, 1, 0], [1, 0, 0, 1]])
                .unwrap();
        assert_eq!(star4().neighborhood_matrix(), star);
        assert!(star.is_symmetric());
    }

    #[test]
    fn solvability_examples() {
        assert!(Graph::path(4).is_universally_solvable());
        assert!(Graph::cycle(4).is_universally_solvable());
        assert!(!Graph::complete(2).is_universally_solvable());
        assert!(Graph::empty(1).is_universally_solvable());
        assert!(!star4().is_universally_solvable());
        assert!(!Graph::complete(4).is_universally_solvable());
    }

    #[test]
    fn fast_path_agrees_with_matrix_rank() {
        let mut state = 0x9E3779B97F4A7C15u64;
        for n in [3, 17, 64, 65, 100, 128, 129, 150] {
            for _ in 0..20 {
                let mut g = Graph::empty(n);
                for p in 0..pair_count(n) {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    g.set_pair(p, state & 1 == 1);
                }
                assert_eq!(
                    g.is_universally_solvable(),
                    g.neighborhood_matrix().is_invertible()
                );
            }
        }
    }

    #[test]
    fn solve_configuration_examples() {
        let k3 = Graph::complete(3);
        let presses = k3
            .solve_configuration(&Configuration::all_on(3))
            .unwrap()
            .unwrap();
        assert_eq!(presses, vec![0]);
        assert_eq!(k3.press(&presses).unwrap(), Configuration::all_on(3));

        let g = Graph::cycle(5);
        assert_eq!(
            g.solve_configuration(&Configuration::new(5, []).unwrap())
                .unwrap(),
            Some(vec![])
        );

        let k2 = Graph::complete(2);
        let c = Configuration::new(2, [0]).unwrap();
        for presses in [vec![], vec![0], vec![1], vec![0, 1]] {
            assert_ne!(k2.press(&presses).unwrap(), c);
        }
        assert_eq!(k2.solve_configuration(&c).unwrap(), None);

        let err = k2
            .solve_configuration(&Configuration::all_on(3))
            .unwrap_err();
        assert!(matches!(err, Error::InvalidArgument(_)));
    }

    #[test]
    fn connectivity_examples() {
        assert!(Graph::path(4).is_connected());
        assert!(!Graph::from_edges(4, [(0, 1), (2, 3)])
            .unwrap()
            .is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(!Graph::empty(2).is_connected());
        assert!(Graph::path(130).is_connected());
    }

    #[test]
    fn permutation_examples() {
        let p4 = Graph::path(4);
        assert_eq!(p4.apply_permutation(&Permutation::identity(4)).unwrap(), p4);
        let swap = Permutation::from_cycles(4, &[&[0, 3]]).unwrap();
        let image = p4.apply_permutation(&swap).unwrap();
        assert_eq!(
            image,
            Graph::from_edges(4, [(3, 1), (1, 2), (2, 0)]).unwrap()
        );
        assert!(p4.apply_permutation(&Permutation::identity(5)).is_err());
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![2, 0]).is_err());
        assert!(Permutation::from_cycles(3, &[&[0, 1], &[1, 2]]).is_err());
        let g = Permutation::from_cycles(5, &[&[0, 1, 2], &[3, 4]]).unwrap();
        assert_eq!(g.cycle_type(), vec![0, 1, 1, 0, 0]);
        assert_eq!(format!("{g:?}"), "(1 2 3)(4 5)");
    }

    #[test]
    fn canonical_form_examples() {
        assert_eq!(canonical_form(&Graph::empty(4)).unwrap(), "000000");
        assert!(matches!(
            canonical_form(&Graph::empty(9)),
            Err(Error::UnsupportedSize { .. })
        ));
        let forms: HashSet<String> = (0..64u32)
            .map(|mask| {
                let mut g = Graph::empty(4);
                for p in 0..6 {
                    g.set_pair(p, mask >> p & 1 == 1);
                }
                canonical_form(&g).unwrap()
            })
            .collect();
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn canonical_form_counts_small_n() {
        // Unlabeled graph counts 1, 2, 4, 11, 34, 156.
        let expected = [1usize, 2, 4, 11, 34, 156];
        for n in 1..=6 {
            let pairs = pair_count(n);
            let mut keys = HashSet::new();
            for mask in 0u32..(1 << pairs) {
                let mut adj = [0u8; 8];
                for p in 0..pairs {
                    if mask >> p & 1 == 1 {
                        let (i, j) = pair_at(p);
                        adj[i] |= 1 << j;
                        adj[j] |= 1 << i;
                    }
                }
                keys.insert(canonical_key(&adj, n));
            }
            assert_eq!(keys.len(), expected[n - 1], "n = {n}");
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
            (1..=max_n).prop_flat_map(|n| {
                proptest::collection::vec(any::<bool>(), pair_count(n)).prop_map(move |bits| {
                    let mut g = Graph::empty(n);
                    for (p, b) in bits.into_iter().enumerate() {
                        g.set_pair(p, b);
                    }
                    g
                })
            })
        }

        fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Permutation)> {
            graph(max_n).prop_flat_map(|g| {
                let n = g.vertex_count();
                (
                    Just(g),
                    Just((0..n).collect::<Vec<_>>())
                        .prop_shuffle()
                        .prop_map(|v| Permutation::from_images(v).unwrap()),
                )
            })
        }

        fn union_find_connected(g: &Graph) -> bool {
            let n = g.vertex_count();
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(p: &mut [usize], x: usize) -> usize {
                let mut r = x;
                while p[r] != r {
                    r = p[r];
                }
                let mut x = x;
                while p[x] != r {
                    let next = p[x];
                    p[x] = r;
                    x = next;
                }
                r
            }
            for (i, j) in g.edges() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
            let root = find(&mut parent, 0);
            (0..n).all(|v| find(&mut parent, v) == root)
        }

        proptest! {
            #[test]
            fn solvability_is_relabeling_invariant((g, p) in graph_and_perm(40)) {
                let h = g.apply_permutation(&p).unwrap();
                prop_assert_eq!(g.is_universally_solvable(), h.is_universally_solvable());
                prop_assert_eq!(g.edge_count(), h.edge_count());
                prop_assert_eq!(g.is_connected(), h.is_connected());
            }

            #[test]
            fn canonical_form_is_orbit_constant((g, p) in graph_and_perm(7)) {
                let h = g.apply_permutation(&p).unwrap();
                prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
            }

            #[test]
            fn presses_resimulate(g in graph(30), seed in any::<u64>()) {
                let n = g.vertex_count();
                let c = Configuration::new(n, (0..n).filter(|&i| seed.rotate_right(i as u32) & 1 == 1)).unwrap();
                if let Some(presses) = g.solve_configuration(&c).unwrap() {
                    prop_assert_eq!(g.press(&presses).unwrap(), c);
                } else {
                    prop_assert!(!g.is_universally_solvable());
                }
                // all-on is always solvable
                let all = Configuration::all_on(n);
                let presses = g.solve_configuration(&all).unwrap();
                prop_assert!(presses.is_some());
                prop_assert_eq!(g.press(&presses.unwrap()).unwrap(), all);
            }

            #[test]
            fn edges_roundtrip(g in graph(70)) {
                let h = Graph::from_edges(g.vertex_count(), g.edges()).unwrap();
                prop_assert_eq!(h, g);
            }
        }

        #[test]
        fn connectivity_matches_union_find() {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
            for n in [5usize, 10, 20] {
                // edge probability near the connectivity threshold
                let p = (n as f64).ln() / n as f64;
                for _ in 0..10_000 {
                    let mut g = Graph::empty(n);
                    for k in 0..pair_count(n) {
                        g.set_pair(k, rng.gen_bool(p));
                    }
                    assert_eq!(g.is_connected(), union_find_connected(&g));
                }
            }
        }
    }
}
