//! Simple graphs on at most 16 vertices, the `a`/`b` string codec, and
//! canonical forms up to isomorphism and complementation.
//!
//! Pair `(i, j)` with `i > j` (0-based) is stored at bit `i(i-1)/2 + j`, which
//! is also its position in the code string: rows `i = 1..n`, columns `j < i`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::Error;

/// Largest order a `Graph` can hold.
pub const MAX_ORDER: usize = 16;

/// Largest order accepted by `canonicalize`.
pub const MAX_CANON_ORDER: usize = 12;

/// Largest order accepted by `enumerate_classes`.
pub const MAX_ENUM_ORDER: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    bits: u128,
}

/// A graph code: one letter per vertex pair, `a` adjacent and `b` not.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GraphCode(String);

impl GraphCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }

    /// Order of a graph with this code, if the length is triangular.
    pub fn order(&self) -> Option<usize> {
        order_for_len(self.0.len())
    }
}

impl fmt::Display for GraphCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for GraphCode {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

pub fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `n` with `n(n-1)/2 = len`.
pub fn order_for_len(len: usize) -> Option<usize> {
    (1..=MAX_ORDER).find(|&n| pairs(n) == len)
}

#[inline]
fn pair_index(i: usize, j: usize) -> usize {
    let (i, j) = if i > j { (i, j) } else { (j, i) };
    i * (i - 1) / 2 + j
}

fn full_mask(n: usize) -> u128 {
    let p = pairs(n);
    if p == 128 {
        u128::MAX
    } else {
        (1u128 << p) - 1
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!((1..=MAX_ORDER).contains(&n), "graph order {n} out of range");
        Graph { n, bits: 0 }
    }

    pub fn complete(n: usize) -> Self {
        Graph { n, bits: full_mask(n) }.checked()
    }

    fn checked(self) -> Self {
        assert!((1..=MAX_ORDER).contains(&self.n), "graph order {} out of range", self.n);
        self
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(i, j) in edges {
            g.set_edge(i, j, true);
        }
        g
    }

    /// Graph on `n` vertices from its packed pair bits.
    pub fn from_bits(n: usize, bits: u128) -> Self {
        Graph { n, bits: bits & full_mask(n) }.checked()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.bits >> pair_index(i, j) & 1 == 1
    }

    pub fn set_edge(&mut self, i: usize, j: usize, on: bool) {
        assert!(i != j && i < self.n && j < self.n, "bad vertex pair ({i}, {j})");
        let m = 1u128 << pair_index(i, j);
        if on {
            self.bits |= m;
        } else {
            self.bits &= !m;
        }
    }

    pub fn edge_count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_complete(&self) -> bool {
        self.bits == full_mask(self.n)
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// Neighbourhood bitmasks, one per vertex.
    pub fn rows(&self) -> Vec<u32> {
        let mut rows = vec![0u32; self.n];
        for i in 1..self.n {
            for j in 0..i {
                if self.has_edge(i, j) {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
            }
        }
        rows
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_edge(u, v)).count()
    }

    pub fn complement(&self) -> Graph {
        Graph { n: self.n, bits: !self.bits & full_mask(self.n) }
    }

    /// The graph with vertex `i` renamed to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut h = Graph::empty(self.n);
        for i in 1..self.n {
            for j in 0..i {
                if self.has_edge(i, j) {
                    h.set_edge(perm[i], perm[j], true);
                }
            }
        }
        h
    }

    /// Induced subgraph on `verts`, in the given order.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut h = Graph::empty(verts.len());
        for i in 1..verts.len() {
            for j in 0..i {
                if self.has_edge(verts[i], verts[j]) {
                    h.set_edge(i, j, true);
                }
            }
        }
        h
    }

    /// The graph with vertex `v` removed.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {})", self.n, encode(self))
    }
}

pub fn decode(code: &str, n: usize) -> Result<Graph, Error> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let found = code.chars().count();
    if found != pairs(n) {
        return Err(Error::LengthMismatch { expected: pairs(n), found });
    }
    let mut bits = 0u128;
    for (k, c) in code.chars().enumerate() {
        match c {
            'a' => bits |= 1 << k,
            'b' => {}
            other => return Err(Error::BadAlphabet(other)),
        }
    }
    Ok(Graph { n, bits })
}

/// Decode a code whose order is implied by its length.
pub fn decode_auto(code: &str) -> Result<Graph, Error> {
    let len = code.chars().count();
    let n = order_for_len(len).ok_or(Error::LengthMismatch { expected: pairs(2), found: len })?;
    decode(code, n)
}

pub fn encode(g: &Graph) -> GraphCode {
    GraphCode((0..pairs(g.n)).map(|k| if g.bits >> k & 1 == 1 { 'a' } else { 'b' }).collect())
}

pub fn complement(g: &Graph) -> Graph {
    g.complement()
}

/// Every component is a clique.
pub fn is_clique_union(g: &Graph) -> bool {
    let rows = g.rows();
    (0..g.n).all(|v| {
        let closed = rows[v] | 1 << v;
        (0..g.n).filter(|&u| closed >> u & 1 == 1).all(|u| rows[u] | 1 << u == closed)
    })
}

/// All one-vertex extensions: vertex `n` joined to each subset of `0..n`.
pub fn extensions(g: &Graph) -> Vec<Graph> {
    let n = g.n;
    assert!(n < MAX_ORDER, "cannot extend a graph of order {n}");
    let base = pairs(n);
    (0..1u128 << n).map(|nb| Graph { n: n + 1, bits: g.bits | nb << base }).collect()
}

// ---------------------------------------------------------------------------
// Canonical labelling by individualization and refinement.

type Partition = Vec<Vec<usize>>;

/// Split cells by neighbour counts into each cell until nothing changes.
fn refine(rows: &[u32], part: &mut Partition) {
    loop {
        let mut changed = false;
        let mut w = 0;
        while w < part.len() {
            let mask: u32 = part[w].iter().fold(0, |m, &v| m | 1 << v);
            let mut next: Partition = Vec::with_capacity(part.len());
            for cell in part.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell.iter().map(|&v| ((rows[v] & mask).count_ones(), v)).collect();
                keyed.sort_unstable();
                let mut start = 0;
                for k in 1..=keyed.len() {
                    if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                        next.push(keyed[start..k].iter().map(|&(_, v)| v).collect());
                        start = k;
                    }
                }
            }
            if next.len() != part.len() {
                changed = true;
                *part = next;
            }
            w += 1;
        }
        if !changed {
            return;
        }
    }
}

/// Code of the graph relabelled so that `lab[p]` sits at position `p`;
/// the first pair is the most significant bit, `1` meaning non-adjacent.
fn leaf_code(rows: &[u32], lab: &[usize]) -> u128 {
    let mut code = 0u128;
    for i in 1..lab.len() {
        for j in 0..i {
            code = code << 1 | u128::from(rows[lab[i]] >> lab[j] & 1 == 0);
        }
    }
    code
}

struct Search<'a> {
    rows: &'a [u32],
    best: Option<(u128, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn run(&mut self, part: Partition, prefix: &mut Vec<usize>) {
        let Some(target) = part.iter().position(|c| c.len() > 1) else {
            let lab: Vec<usize> = part.iter().map(|c| c[0]).collect();
            self.leaf(lab);
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &part[target] {
            if tried.iter().any(|&w| self.same_orbit(prefix, w, v)) {
                continue;
            }
            tried.push(v);
            let mut child = part.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&u| u != v).collect();
            child[target] = vec![v];
            child.insert(target + 1, rest);
            refine(self.rows, &mut child);
            prefix.push(v);
            self.run(child, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, lab: Vec<usize>) {
        let code = leaf_code(self.rows, &lab);
        match &self.best {
            None => self.best = Some((code, lab)),
            Some((best, best_lab)) => {
                if code == *best {
                    let mut sigma = vec![0; lab.len()];
                    for (p, &v) in best_lab.iter().enumerate() {
                        sigma[v] = lab[p];
                    }
                    self.autos.push(sigma);
                } else if code < *best {
                    self.best = Some((code, lab));
                }
            }
        }
    }

    /// Are `w` and `v` in one orbit of the known automorphisms fixing `prefix`?
    fn same_orbit(&self, prefix: &[usize], w: usize, v: usize) -> bool {
        let n = self.rows.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for s in self.autos.iter().filter(|s| prefix.iter().all(|&x| s[x] == x)) {
            for x in 0..n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, s[x]));
                parent[a] = b;
            }
        }
        find(&mut parent, w) == find(&mut parent, v)
    }
}

/// Canonical relabelling: returns the canonical graph and the permutation
/// `perm` with `canonical = g.permute(perm)`.
pub fn canonicalize(g: &Graph) -> Result<(Graph, Vec<usize>), Error> {
    if g.n > MAX_CANON_ORDER {
        return Err(Error::OrderTooLarge(g.n));
    }
    let rows = g.rows();
    let mut part: Partition = vec![(0..g.n).collect()];
    refine(&rows, &mut part);
    let mut search = Search { rows: &rows, best: None, autos: Vec::new() };
    search.run(part, &mut Vec::new());
    let (_, lab) = search.best.expect("search reaches a leaf");
    let mut perm = vec![0; g.n];
    for (p, &v) in lab.iter().enumerate() {
        perm[v] = p;
    }
    Ok((g.permute(&perm), perm))
}

fn canonical_code(g: &Graph) -> Result<GraphCode, Error> {
    Ok(encode(&canonicalize(g)?.0))
}

/// The smaller of the canonical codes of `g` and its complement.
pub fn class_key(g: &Graph) -> Result<GraphCode, Error> {
    let a = canonical_code(g)?;
    let b = canonical_code(&g.complement())?;
    Ok(a.min(b))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool, Error> {
    Ok(g.n == h.n && canonical_code(g)? == canonical_code(h)?)
}

pub fn is_self_complementary(g: &Graph) -> Result<bool, Error> {
    is_isomorphic(g, &g.complement())
}

/// One representative per class of graphs up to isomorphism and
/// complementation, sorted by class key. Each representative is the
/// canonical graph whose code is the key.
pub fn enumerate_classes(n: usize) -> Result<Vec<Graph>, Error> {
    if n == 0 || n > MAX_ENUM_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    if n == 1 {
        return Ok(vec![Graph::empty(1)]);
    }
    let mut found: BTreeMap<GraphCode, Graph> = BTreeMap::new();
    for c in enumerate_classes(n - 1)? {
        for base in [c, c.complement()] {
            for h in extensions(&base) {
                let key = class_key(&h)?;
                found.entry(key).or_insert(h);
            }
        }
    }
    found
        .into_keys()
        .map(|k| decode(k.as_str(), n))
        .collect()
}
