//! Colored multigraphs: the combinatorial substrate for the bracket engine.
//!
//! A [`ColoredGraph`] is a multigraph (loops and parallel edges allowed) whose
//! edges carry a color (chain or sheaf) and a nonzero signed integer length.
//! A chain of length `t` stands for a series path of `|t|` same-sign crossings,
//! a sheaf for a parallel bundle of them; the sign of `t` is the crossing sign.
//! An optional ordered marked vertex pair `(u, v)` designates the gluing sites
//! for surgery families.
//!
//! The edge list order is significant: it is the canonical edge order used by
//! the activities classification of the spanning-tree expansion.

use crate::error::{Error, Result};
use serde::Deserialize;
use std::fmt;

/// Edge color: `Chain` (series bigon path) or `Sheaf` (parallel bundle).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    /// Series path of same-sign crossings.
    Chain,
    /// Parallel bundle of same-sign crossings.
    Sheaf,
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Color::Chain => write!(f, "chain"),
            Color::Sheaf => write!(f, "sheaf"),
        }
    }
}

/// One colored edge with signed length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    /// First endpoint (vertex id).
    pub u: usize,
    /// Second endpoint (vertex id). `u == v` is a loop.
    pub v: usize,
    /// Chain or sheaf.
    pub color: Color,
    /// Signed length (number of crossings with sign); never zero.
    pub t: i64,
}

/// A colored multigraph with an optional marked vertex pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    /// Number of vertices; ids are `0..vcount`.
    pub vcount: usize,
    /// Edge list; the list order is the canonical edge order.
    pub edges: Vec<Edge>,
    /// Optional ordered marked pair `(u, v)` for surgery gluing.
    pub marked: Option<(usize, usize)>,
}

/// An edge subset of a specific graph, as a bitmask over the edge list.
///
/// Interpreted as the spanning subgraph keeping all vertices and the edges
/// whose bit is set.
pub type EdgeSubset = u64;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEdge {
    u: usize,
    v: usize,
    color: String,
    t: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGraph {
    vertices: usize,
    edges: Vec<RawEdge>,
    #[serde(default)]
    marked: Option<[usize; 2]>,
}

/// Union-find over vertex ids, used for component counting.
struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

impl ColoredGraph {
    /// Builds and validates a graph from parts.
    pub fn new(
        vcount: usize,
        edges: Vec<Edge>,
        marked: Option<(usize, usize)>,
    ) -> Result<Self> {
        let g = ColoredGraph {
            vcount,
            edges,
            marked,
        };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<()> {
        if self.vcount == 0 {
            return Err(Error::GraphFormat("graph must have at least one vertex".into()));
        }
        if self.edges.len() > 63 {
            return Err(Error::GraphFormat(format!(
                "at most 63 edges supported (got {})",
                self.edges.len()
            )));
        }
        for (i, e) in self.edges.iter().enumerate() {
            if e.u >= self.vcount || e.v >= self.vcount {
                return Err(Error::GraphFormat(format!(
                    "edge {i} references vertex out of range (vertices: {})",
                    self.vcount
                )));
            }
            if e.t == 0 {
                return Err(Error::GraphFormat(format!(
                    "edge {i} has length 0; a length-0 chain/sheaf is not a twist class"
                )));
            }
        }
        if let Some((u, v)) = self.marked {
            if u >= self.vcount || v >= self.vcount {
                return Err(Error::GraphFormat("marked vertex out of range".into()));
            }
            if u == v {
                return Err(Error::GraphFormat("marked vertices must be distinct".into()));
            }
        }
        Ok(())
    }

    /// Parses the structured text format:
    /// `{"vertices": N, "edges": [{"u":0,"v":1,"color":"chain","t":-2}], "marked": [0,1]}`.
    /// Unknown fields are rejected.
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawGraph = serde_json::from_str(text)
            .map_err(|e| Error::GraphFormat(format!("malformed graph file: {e}")))?;
        let edges = raw
            .edges
            .into_iter()
            .enumerate()
            .map(|(i, re)| {
                let color = match re.color.as_str() {
                    "chain" => Color::Chain,
                    "sheaf" => Color::Sheaf,
                    other => {
                        return Err(Error::GraphFormat(format!(
                            "edge {i}: unknown color {other:?} (expected \"chain\" or \"sheaf\")"
                        )))
                    }
                };
                Ok(Edge {
                    u: re.u,
                    v: re.v,
                    color,
                    t: re.t,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        ColoredGraph::new(raw.vertices, edges, raw.marked.map(|[u, v]| (u, v)))
    }

    /// Number of edges.
    pub fn ecount(&self) -> usize {
        self.edges.len()
    }

    /// The bitmask selecting every edge.
    pub fn full_subset(&self) -> EdgeSubset {
        if self.edges.is_empty() {
            0
        } else {
            (1u64 << self.edges.len()) - 1
        }
    }

    /// Number of connected components `k(S)` of the spanning subgraph with
    /// edge set `S` (all vertices kept, isolated ones counted).
    pub fn components(&self, s: EdgeSubset) -> usize {
        let mut dsu = Dsu::new(self.vcount);
        let mut k = self.vcount;
        for (i, e) in self.edges.iter().enumerate() {
            if s >> i & 1 == 1 && dsu.union(e.u, e.v) {
                k -= 1;
            }
        }
        k
    }

    /// Cyclomatic number `n(S) = |S| - vcount + k(S)` of the spanning subgraph.
    pub fn cyclomatic(&self, s: EdgeSubset) -> usize {
        let edges = s.count_ones() as usize;
        edges + self.components(s) - self.vcount
    }

    /// Whether the marked pair (or the given pair) is connected inside the
    /// spanning subgraph with edge set `s`.
    pub fn pair_connected(&self, s: EdgeSubset, u: usize, v: usize) -> bool {
        let mut dsu = Dsu::new(self.vcount);
        for (i, e) in self.edges.iter().enumerate() {
            if s >> i & 1 == 1 {
                dsu.union(e.u, e.v);
            }
        }
        dsu.find(u) == dsu.find(v)
    }

    /// Enumerates all spanning trees of a connected graph, each as an edge
    /// bitmask. The count is cross-checked against the matrix-tree determinant.
    pub fn spanning_trees(&self) -> Result<Vec<EdgeSubset>> {
        if self.components(self.full_subset()) != 1 {
            return Err(Error::NotConnected);
        }
        let e = self.edges.len();
        let need = self.vcount - 1;
        let mut out = Vec::new();
        // Depth-first choice over edges, tracking how many are still selectable.
        fn rec(
            g: &ColoredGraph,
            idx: usize,
            chosen: EdgeSubset,
            count: usize,
            need: usize,
            out: &mut Vec<EdgeSubset>,
        ) {
            if count == need {
                // Exactly vcount-1 edges and acyclic iff it has vcount-1 unions succeed;
                // check connectivity (equivalently acyclicity at this edge count).
                if g.components(chosen) == 1 {
                    out.push(chosen);
                }
                return;
            }
            if idx >= g.edges.len() || g.edges.len() - idx < need - count {
                return;
            }
            // Skip loops: they can never be in a tree.
            let e = &g.edges[idx];
            if e.u != e.v {
                rec(g, idx + 1, chosen | 1 << idx, count + 1, need, out);
            }
            rec(g, idx + 1, chosen, count, need, out);
        }
        rec(self, 0, 0, 0, need, &mut out);
        // Deterministic order: ascending bitmask (DFS above emits in a fixed
        // order already; sort to make the contract explicit).
        out.sort_unstable();
        let det = self.matrix_tree_count()?;
        if out.len() as i128 != det {
            return Err(Error::Domain(format!(
                "spanning tree enumeration ({}) disagrees with matrix-tree determinant ({det})",
                out.len()
            )));
        }
        if e == 0 && self.vcount == 1 {
            // Single vertex: the empty tree is the unique spanning tree.
            debug_assert_eq!(out, vec![0]);
        }
        Ok(out)
    }

    /// Spanning tree count via the matrix-tree theorem (fraction-free
    /// Bareiss elimination over i128; loops ignored, parallels counted).
    pub fn matrix_tree_count(&self) -> Result<i128> {
        if self.components(self.full_subset()) != 1 {
            return Err(Error::NotConnected);
        }
        let n = self.vcount;
        if n == 1 {
            return Ok(1);
        }
        // Reduced Laplacian (delete last row/column).
        let m = n - 1;
        let mut a = vec![vec![0i128; m]; m];
        for e in &self.edges {
            if e.u == e.v {
                continue;
            }
            let (u, v) = (e.u, e.v);
            if u < m {
                a[u][u] += 1;
            }
            if v < m {
                a[v][v] += 1;
            }
            if u < m && v < m {
                a[u][v] -= 1;
                a[v][u] -= 1;
            }
        }
        // Bareiss fraction-free Gaussian elimination.
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..m {
            if a[k][k] == 0 {
                let swap = (k + 1..m).find(|&r| a[r][k] != 0);
                match swap {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(0),
                }
            }
            for i in k + 1..m {
                for j in k + 1..m {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
                a[i][k] = 0;
            }
            prev = a[k][k];
        }
        Ok(sign * a[m - 1][m - 1])
    }

    /// Activities of every edge with respect to a spanning tree `f`.
    ///
    /// Tree edges are internally active (`IA`) iff they are the least-index
    /// edge of their fundamental cut; non-tree edges are externally active
    /// (`EA`) iff they are the least-index edge of their fundamental cycle.
    pub fn activities(&self, f: EdgeSubset) -> Result<Vec<Activity>> {
        // f must be a spanning tree: vcount-1 edges, connected, no loops.
        if f.count_ones() as usize != self.vcount - 1 || self.components(f) != 1 {
            return Err(Error::Domain("activities: subset is not a spanning tree".into()));
        }
        let e = self.edges.len();
        let mut tags = vec![Activity::ExternallyInactive; e];
        for (i, tag) in tags.iter_mut().enumerate() {
            if f >> i & 1 == 1 {
                // Fundamental cut of tree edge i: edges joining the two
                // components of f - i.
                let cut_sides = {
                    let mut dsu = Dsu::new(self.vcount);
                    for (j, ej) in self.edges.iter().enumerate() {
                        if f >> j & 1 == 1 && j != i {
                            dsu.union(ej.u, ej.v);
                        }
                    }
                    let ei = &self.edges[i];
                    let side = dsu.find(ei.u);
                    let other = dsu.find(ei.v);
                    (dsu, side, other)
                };
                let (mut dsu, side, other) = cut_sides;
                debug_assert_ne!(side, other);
                let least = (0..e).find(|&j| {
                    let ej = &self.edges[j];
                    let (a, b) = (dsu.find(ej.u), dsu.find(ej.v));
                    (a == side && b == other) || (a == other && b == side)
                });
                *tag = if least == Some(i) {
                    Activity::InternallyActive
                } else {
                    Activity::InternallyInactive
                };
            } else {
                // Fundamental cycle of non-tree edge i: i plus the tree path
                // between its endpoints. A loop's cycle is just itself.
                let ei = &self.edges[i];
                let cyc_member = |j: usize, g: &ColoredGraph| -> bool {
                    if j == i {
                        return true;
                    }
                    if f >> j & 1 == 0 {
                        return false;
                    }
                    // Tree edge j lies on the cycle iff removing it from f
                    // separates ei.u from ei.v.
                    let mut dsu = Dsu::new(g.vcount);
                    for (l, el) in g.edges.iter().enumerate() {
                        if f >> l & 1 == 1 && l != j {
                            dsu.union(el.u, el.v);
                        }
                    }
                    dsu.find(ei.u) != dsu.find(ei.v)
                };
                let least = (0..e).find(|&j| cyc_member(j, self));
                *tag = if least == Some(i) {
                    Activity::ExternallyActive
                } else {
                    Activity::ExternallyInactive
                };
            }
        }
        Ok(tags)
    }

    /// Replaces every edge by unit-length edges: a chain of length `t`
    /// becomes a series path of `|t|` chain edges of length `sign(t)` through
    /// fresh vertices; a sheaf becomes `|t|` parallel sheaf edges of length
    /// `sign(t)`. The marked pair is preserved.
    pub fn expand_to_unit(&self) -> ColoredGraph {
        let mut vcount = self.vcount;
        let mut edges = Vec::new();
        for e in &self.edges {
            let n = e.t.unsigned_abs() as usize;
            let sign = e.t.signum();
            match e.color {
                Color::Sheaf => {
                    for _ in 0..n {
                        edges.push(Edge {
                            u: e.u,
                            v: e.v,
                            color: Color::Sheaf,
                            t: sign,
                        });
                    }
                }
                Color::Chain => {
                    let mut prev = e.u;
                    for i in 0..n {
                        let next = if i + 1 == n {
                            e.v
                        } else {
                            vcount += 1;
                            vcount - 1
                        };
                        edges.push(Edge {
                            u: prev,
                            v: next,
                            color: Color::Chain,
                            t: sign,
                        });
                        prev = next;
                    }
                }
            }
        }
        ColoredGraph {
            vcount,
            edges,
            marked: self.marked,
        }
    }

    /// Glues a tangle across the base's marked pair: disjoint union with the
    /// The same template with edge lengths replaced by `n` (edge order),
    /// re-validated (every length must be nonzero).
    pub fn with_lengths(&self, n: &[i64]) -> Result<ColoredGraph> {
        if n.len() != self.edges.len() {
            return Err(Error::Domain(format!(
                "length vector has {} entries for {} edges",
                n.len(),
                self.edges.len()
            )));
        }
        let edges = self
            .edges
            .iter()
            .zip(n)
            .map(|(e, &t)| Edge { u: e.u, v: e.v, color: e.color, t })
            .collect();
        ColoredGraph::new(self.vcount, edges, self.marked)
    }

    /// tangle's `u` identified to the base's `u` and `v` to `v`. The result is
    /// marked at the same pair; edge order is base edges then tangle edges.
    pub fn glue(&self, tangle: &ColoredGraph) -> Result<ColoredGraph> {
        let (bu, bv) = self.marked.ok_or(Error::MissingMarked)?;
        let (tu, tv) = tangle.marked.ok_or(Error::MissingMarked)?;
        // Tangle vertices map: tu -> bu, tv -> bv, others -> fresh ids.
        let mut map = vec![usize::MAX; tangle.vcount];
        map[tu] = bu;
        map[tv] = bv;
        let mut next = self.vcount;
        for (i, slot) in map.iter_mut().enumerate() {
            if i != tu && i != tv {
                *slot = next;
                next += 1;
            }
        }
        let mut edges = self.edges.clone();
        edges.extend(tangle.edges.iter().map(|e| Edge {
            u: map[e.u],
            v: map[e.v],
            color: e.color,
            t: e.t,
        }));
        ColoredGraph::new(next, edges, Some((bu, bv)))
    }
}

/// Activity tag of an edge with respect to a spanning tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Activity {
    /// Tree edge, least-index in its fundamental cut.
    InternallyActive,
    /// Tree edge, not least-index in its fundamental cut.
    InternallyInactive,
    /// Non-tree edge, least-index in its fundamental cycle.
    ExternallyActive,
    /// Non-tree edge, not least-index in its fundamental cycle.
    ExternallyInactive,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(vc: usize, edges: &[(usize, usize, Color, i64)], marked: Option<(usize, usize)>) -> ColoredGraph {
        ColoredGraph::new(
            vc,
            edges
                .iter()
                .map(|&(u, v, color, t)| Edge { u, v, color, t })
                .collect(),
            marked,
        )
        .unwrap()
    }

    #[test]
    fn parse_roundtrip_and_validation() {
        let hopf = ColoredGraph::parse(
            r#"{"vertices": 2, "edges": [{"u":0,"v":1,"color":"sheaf","t":2}], "marked":[0,1]}"#,
        )
        .unwrap();
        assert_eq!(hopf.vcount, 2);
        assert_eq!(hopf.edges[0].color, Color::Sheaf);
        assert_eq!(hopf.marked, Some((0, 1)));

        // Out-of-range vertex.
        let bad = ColoredGraph::parse(
            r#"{"vertices": 2, "edges": [{"u":0,"v":5,"color":"sheaf","t":2}]}"#,
        );
        assert!(matches!(bad, Err(Error::GraphFormat(_))));

        // Zero length rejected.
        let zero = ColoredGraph::parse(
            r#"{"vertices": 2, "edges": [{"u":0,"v":1,"color":"chain","t":0}]}"#,
        );
        assert!(matches!(zero, Err(Error::GraphFormat(_))));

        // Unknown color and unknown field rejected.
        assert!(ColoredGraph::parse(
            r#"{"vertices": 2, "edges": [{"u":0,"v":1,"color":"purple","t":1}]}"#
        )
        .is_err());
        assert!(ColoredGraph::parse(
            r#"{"vertices": 2, "edges": [], "extra": 1}"#
        )
        .is_err());
    }

    #[test]
    fn components_and_cyclomatic() {
        let tri = g(3, &[(0, 1, Color::Chain, 1), (1, 2, Color::Chain, 1), (2, 0, Color::Chain, 1)], None);
        assert_eq!(tri.components(0), 3);
        assert_eq!(tri.components(tri.full_subset()), 1);
        assert_eq!(tri.components(0b001), 2);
        assert_eq!(tri.cyclomatic(tri.full_subset()), 1);
        assert_eq!(tri.cyclomatic(0b011), 0);

        let lp = g(1, &[(0, 0, Color::Sheaf, 1)], None);
        assert_eq!(lp.cyclomatic(1), 1);

        let par = g(2, &[(0, 1, Color::Chain, 1), (0, 1, Color::Chain, 1)], None);
        assert_eq!(par.cyclomatic(par.full_subset()), 1);
    }

    #[test]
    fn spanning_tree_enumeration_matches_determinant() {
        let tri = g(3, &[(0, 1, Color::Chain, 1), (1, 2, Color::Chain, 1), (2, 0, Color::Chain, 1)], None);
        assert_eq!(tri.spanning_trees().unwrap().len(), 3);

        let par3 = g(2, &[(0, 1, Color::Chain, 1), (0, 1, Color::Chain, 1), (0, 1, Color::Chain, 1)], None);
        assert_eq!(par3.spanning_trees().unwrap().len(), 3);

        let c4 = g(4, &[(0, 1, Color::Chain, 1), (1, 2, Color::Chain, 1), (2, 3, Color::Chain, 1), (3, 0, Color::Chain, 1)], None);
        assert_eq!(c4.spanning_trees().unwrap().len(), 4);

        let disconnected = g(3, &[(0, 1, Color::Chain, 1)], None);
        assert!(matches!(disconnected.spanning_trees(), Err(Error::NotConnected)));

        // Loop never enters a tree.
        let with_loop = g(2, &[(0, 0, Color::Sheaf, 1), (0, 1, Color::Chain, 1)], None);
        let trees = with_loop.spanning_trees().unwrap();
        assert_eq!(trees, vec![0b10]);
    }

    #[test]
    fn activities_two_parallel_edges() {
        let par = g(2, &[(0, 1, Color::Chain, 1), (0, 1, Color::Chain, 1)], None);
        // Tree {e0}: e0 is least in its cut {e0,e1} -> IA; e1's cycle is
        // {e0,e1}, least is e0 != e1 -> EI.
        let tags = par.activities(0b01).unwrap();
        assert_eq!(tags[0], Activity::InternallyActive);
        assert_eq!(tags[1], Activity::ExternallyInactive);
        // Tree {e1}: e1's cut is {e0,e1}, least is e0 != e1 -> II; e0's cycle
        // is {e0,e1}, least is e0 -> EA.
        let tags = par.activities(0b10).unwrap();
        assert_eq!(tags[1], Activity::InternallyInactive);
        assert_eq!(tags[0], Activity::ExternallyActive);
    }

    #[test]
    fn activities_bridge_always_internally_active() {
        let path = g(3, &[(0, 1, Color::Chain, 1), (1, 2, Color::Sheaf, 2)], None);
        let tags = path.activities(0b11).unwrap();
        assert_eq!(tags[0], Activity::InternallyActive);
        assert_eq!(tags[1], Activity::InternallyActive);
    }

    #[test]
    fn activities_partition_property() {
        // Every edge gets exactly one tag; tree edges only IA/II, non-tree only EA/EI.
        let theta = g(
            2,
            &[(0, 1, Color::Chain, 1), (0, 1, Color::Sheaf, 2), (0, 1, Color::Chain, -1)],
            None,
        );
        for f in theta.spanning_trees().unwrap() {
            let tags = theta.activities(f).unwrap();
            for (i, tag) in tags.iter().enumerate() {
                let in_tree = f >> i & 1 == 1;
                match tag {
                    Activity::InternallyActive | Activity::InternallyInactive => assert!(in_tree),
                    Activity::ExternallyActive | Activity::ExternallyInactive => assert!(!in_tree),
                }
            }
        }
    }

    #[test]
    fn expand_to_unit_shapes() {
        let sheaf2 = g(2, &[(0, 1, Color::Sheaf, 2)], Some((0, 1)));
        let ex = sheaf2.expand_to_unit();
        assert_eq!(ex.vcount, 2);
        assert_eq!(ex.edges.len(), 2);
        assert!(ex.edges.iter().all(|e| e.t == 1 && e.color == Color::Sheaf));

        let chain3 = g(2, &[(0, 1, Color::Chain, 3)], None);
        let ex = chain3.expand_to_unit();
        assert_eq!(ex.vcount, 4); // two fresh vertices
        assert_eq!(ex.edges.len(), 3);
        assert!(ex.edges.iter().all(|e| e.t == 1));

        let chainm2 = g(2, &[(0, 1, Color::Chain, -2)], None);
        let ex = chainm2.expand_to_unit();
        assert_eq!(ex.vcount, 3);
        assert_eq!(ex.edges.len(), 2);
        assert!(ex.edges.iter().all(|e| e.t == -1));
    }

    #[test]
    fn glue_counts_and_order() {
        let base = g(2, &[], Some((0, 1)));
        let tangle = g(2, &[(0, 1, Color::Sheaf, 2)], Some((0, 1)));
        let once = base.glue(&tangle).unwrap();
        assert_eq!(once.vcount, 2); // 2 + 2 - 2
        assert_eq!(once.edges.len(), 1);
        assert_eq!(once.marked, Some((0, 1)));

        let theta = g(3, &[(0, 2, Color::Chain, -2), (2, 1, Color::Sheaf, -1)], Some((0, 1)));
        let glued = once.glue(&theta).unwrap();
        assert_eq!(glued.vcount, once.vcount + theta.vcount - 2);
        assert_eq!(glued.edges.len(), 3);
        // Base edges come first.
        assert_eq!(glued.edges[0].color, Color::Sheaf);

        let unmarked = g(2, &[], None);
        assert!(matches!(unmarked.glue(&tangle), Err(Error::MissingMarked)));
    }
}
