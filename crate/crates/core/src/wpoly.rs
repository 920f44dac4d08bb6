//! The W-polynomial engine.
//!
//! Three formulations of the colored-graph polynomial `W(G)` evaluated at
//! `t = z₁ = z₂ = d` over per-edge weights `(x, y)`:
//!
//! * [`w_subset`] — the spanning-subgraph sum (reference path),
//! * [`w_delcon`] — deletion–contraction with loop/bridge/series/parallel
//!   reductions (collapses series-parallel graphs with no branching),
//! * [`w_spantree`] — the spanning-tree expansion over edge activities.
//!
//! [`kauffman_bracket`] instantiates the weights with [`bracket_weights`] and
//! reduces the result to an honest Laurent polynomial; [`bracket_oracle`] is
//! an independent Kauffman state sum on the unit expansion that shares none
//! of the d-ring bookkeeping. [`jones`] applies the writhe normalization.

use crate::error::{Error, Result};
use crate::graph::{Activity, Color, ColoredGraph};
use crate::laurent::{DRingElem, LaurentPoly};

/// Per-edge weight pairs `(x, y)`, one per edge in edge-list order.
#[derive(Debug, Clone)]
pub struct EdgeWeights {
    /// `pairs[i]` is the `(x, y)` weight of edge `i`.
    pub pairs: Vec<(DRingElem, DRingElem)>,
}

impl EdgeWeights {
    /// Weights for every edge of `g` under the Kauffman-bracket substitution.
    pub fn bracket_for(g: &ColoredGraph) -> Result<Self> {
        let pairs = g
            .edges
            .iter()
            .map(|e| bracket_weights(e.color, e.t))
            .collect::<Result<Vec<_>>>()?;
        Ok(EdgeWeights { pairs })
    }
}

/// The bracket weight substitution for a colored edge of signed length `t`:
///
/// * chain: `x = A^t`,                        `y = ((−A⁻³)^t − A^t) / d`
/// * sheaf: `x = ((−A³)^t − A^{−t}) / d`,     `y = A^{−t}`
///
/// Both divisions are exact for every `t ≠ 0`; an inexact division would
/// signal an arithmetic bug and is surfaced as an error.
pub fn bracket_weights(color: Color, t: i64) -> Result<(DRingElem, DRingElem)> {
    if t == 0 {
        return Err(Error::Domain("edge length 0 has no bracket weight".into()));
    }
    let d = LaurentPoly::d();
    let (x, y) = match color {
        Color::Chain => {
            let x = LaurentPoly::monomial(1, t);
            let num = &LaurentPoly::neg_power_of_a(-3, t) - &x;
            (x, num.exact_div(&d)?)
        }
        Color::Sheaf => {
            let y = LaurentPoly::monomial(1, -t);
            let num = &LaurentPoly::neg_power_of_a(3, t) - &y;
            (num.exact_div(&d)?, y)
        }
    };
    Ok((DRingElem::from_laurent(x), DRingElem::from_laurent(y)))
}

/// Spanning-subgraph formulation:
/// `W(G) = d^{k(G)−1} · Σ_S (Π_{e∈S} x_e)(Π_{e∉S} y_e) · d^{k(S)−k(G)} · d^{n(S)}`.
pub fn w_subset(g: &ColoredGraph, w: &EdgeWeights) -> DRingElem {
    let e = g.ecount();
    let kg = g.components(g.full_subset()) as i64;
    let mut total = DRingElem::zero();
    // Depth-first product accumulation: 2^(E+1) multiplications total.
    fn rec(
        g: &ColoredGraph,
        w: &EdgeWeights,
        i: usize,
        mask: u64,
        acc: &DRingElem,
        kg: i64,
        total: &mut DRingElem,
    ) {
        if i == g.ecount() {
            let ks = g.components(mask) as i64;
            let ns = g.cyclomatic(mask) as i64;
            *total = total.add(&acc.mul(&DRingElem::d_pow(ks - kg + ns)));
            return;
        }
        rec(g, w, i + 1, mask | 1 << i, &acc.mul(&w.pairs[i].0), kg, total);
        rec(g, w, i + 1, mask, &acc.mul(&w.pairs[i].1), kg, total);
    }
    debug_assert!(e <= 24, "subset enumeration is for small graphs");
    rec(g, w, 0, 0, &DRingElem::one(), kg, &mut total);
    DRingElem::d_pow(kg - 1).mul(&total)
}

/// Weighted multigraph state for the deletion–contraction recursion.
#[derive(Debug, Clone)]
struct WGraph {
    vs: usize,
    edges: Vec<(usize, usize, DRingElem, DRingElem)>,
}

impl WGraph {
    fn from(g: &ColoredGraph, w: &EdgeWeights) -> Self {
        WGraph {
            vs: g.vcount,
            edges: g
                .edges
                .iter()
                .zip(&w.pairs)
                .map(|(e, (x, y))| (e.u, e.v, x.clone(), y.clone()))
                .collect(),
        }
    }

    /// Removes vertex `w` (which must have no incident edges) by renaming the
    /// last vertex onto it.
    fn drop_isolated(&mut self, w: usize) {
        let last = self.vs - 1;
        if w != last {
            for e in &mut self.edges {
                if e.0 == last {
                    e.0 = w;
                }
                if e.1 == last {
                    e.1 = w;
                }
            }
        }
        self.vs -= 1;
    }

    /// Contracts edge `i` (endpoints must differ): merges its endpoints.
    fn contract(&mut self, i: usize) {
        let (a, b, _, _) = self.edges[i].clone();
        debug_assert_ne!(a, b);
        self.edges.remove(i);
        let (keep, gone) = (a.min(b), a.max(b));
        for e in &mut self.edges {
            if e.0 == gone {
                e.0 = keep;
            }
            if e.1 == gone {
                e.1 = keep;
            }
        }
        self.drop_isolated(gone);
    }

    /// True iff edge `i` is a bridge (its endpoints are disconnected without it).
    fn is_bridge(&self, i: usize) -> bool {
        let (a, b, _, _) = &self.edges[i];
        if a == b {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.vs).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (j, e) in self.edges.iter().enumerate() {
            if j != i {
                let (ra, rb) = (find(&mut parent, e.0), find(&mut parent, e.1));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
        find(&mut parent, *a) != find(&mut parent, *b)
    }
}

/// Deletion–contraction formulation with exact local reductions:
///
/// * loop `e`: factor `x·d + y`, delete;
/// * bridge `e`: factor `x + d·y`, contract;
/// * parallel pair: merge to one edge with `(x₁x₂d + x₁y₂ + x₂y₁, y₁y₂)`;
/// * series pair at a degree-2 vertex: merge with `(x₁x₂, x₁y₂ + x₂y₁ + d·y₁y₂)`;
/// * no edges: `d^{V−1}`.
///
/// Any graph whose reductions stall (a non-series-parallel core) is split by
/// `x·W(G/e) + y·W(G−e)` on its last edge. Each rule is an identity of the
/// spanning-subgraph sum, so the two formulations agree exactly.
pub fn w_delcon(g: &ColoredGraph, w: &EdgeWeights) -> DRingElem {
    fn go(mut g: WGraph) -> DRingElem {
        let mut factor = DRingElem::one();
        let d = DRingElem::d_pow(1);
        'reduce: loop {
            // Loops.
            if let Some(i) = g.edges.iter().position(|e| e.0 == e.1) {
                let (_, _, x, y) = g.edges.remove(i);
                factor = factor.mul(&x.mul(&d).add(&y));
                continue;
            }
            // Parallel pairs.
            for i in 0..g.edges.len() {
                for j in i + 1..g.edges.len() {
                    let (a, b) = (g.edges[i].0, g.edges[i].1);
                    let (c, e2) = (g.edges[j].0, g.edges[j].1);
                    if (a, b) == (c, e2) || (a, b) == (e2, c) {
                        let (_, _, x2, y2) = g.edges.remove(j);
                        let (_, _, x1, y1) = g.edges[i].clone();
                        let x = x1.mul(&x2).mul(&d).add(&x1.mul(&y2)).add(&x2.mul(&y1));
                        let y = y1.mul(&y2);
                        g.edges[i].2 = x;
                        g.edges[i].3 = y;
                        continue 'reduce;
                    }
                }
            }
            // Series pairs: a vertex of degree exactly 2 with two distinct edges.
            let mut deg = vec![0usize; g.vs];
            for e in &g.edges {
                deg[e.0] += 1;
                deg[e.1] += 1;
            }
            if let Some(wv) = (0..g.vs).find(|&v| deg[v] == 2) {
                let inc: Vec<usize> = (0..g.edges.len())
                    .filter(|&i| g.edges[i].0 == wv || g.edges[i].1 == wv)
                    .collect();
                // Loops were cleared above, so the two slots are distinct edges.
                let (i, j) = (inc[0], inc[1]);
                let (a1, b1, x1, y1) = g.edges[i].clone();
                let (a2, b2, x2, y2) = g.edges[j].clone();
                let u = if a1 == wv { b1 } else { a1 };
                let v = if a2 == wv { b2 } else { a2 };
                let x = x1.mul(&x2);
                let y = x1.mul(&y2).add(&x2.mul(&y1)).add(&d.mul(&y1).mul(&y2));
                // Remove j first (j > i), then i, then the dead vertex.
                g.edges.remove(j);
                g.edges.remove(i);
                g.edges.push((u, v, x, y));
                g.drop_isolated(wv);
                continue;
            }
            // Bridges.
            if let Some(i) = (0..g.edges.len()).find(|&i| g.is_bridge(i)) {
                let (_, _, x, y) = g.edges[i].clone();
                factor = factor.mul(&x.add(&d.mul(&y)));
                g.contract(i);
                continue;
            }
            break;
        }
        if g.edges.is_empty() {
            return factor.mul(&DRingElem::d_pow(g.vs as i64 - 1));
        }
        // Branch on the last remaining edge of the irreducible core.
        let i = g.edges.len() - 1;
        let (_, _, x, y) = g.edges[i].clone();
        let mut contracted = g.clone();
        contracted.contract(i);
        let mut deleted = g;
        deleted.edges.remove(i);
        factor.mul(&x.mul(&go(contracted)).add(&y.mul(&go(deleted))))
    }
    go(WGraph::from(g, w))
}

/// Spanning-tree expansion over edge activities:
/// `W(G) = d^{k(G)−1} Σ_F Π_{IA}(x+d·y) · Π_{EA}(d·x+y) · Π_{II} x · Π_{EI} y`.
pub fn w_spantree(g: &ColoredGraph, w: &EdgeWeights) -> Result<DRingElem> {
    let trees = g.spanning_trees()?;
    let d = DRingElem::d_pow(1);
    let mut total = DRingElem::zero();
    for f in trees {
        let tags = g.activities(f)?;
        let mut term = DRingElem::one();
        for (i, tag) in tags.iter().enumerate() {
            let (x, y) = &w.pairs[i];
            let factor = match tag {
                Activity::InternallyActive => x.add(&d.mul(y)),
                Activity::InternallyInactive => x.clone(),
                Activity::ExternallyActive => d.mul(x).add(y),
                Activity::ExternallyInactive => y.clone(),
            };
            term = term.mul(&factor);
        }
        total = total.add(&term);
    }
    Ok(total)
}

/// The Kauffman bracket of the colored graph: the subset-formula value under
/// [`bracket_weights`], reduced to a pure Laurent polynomial. A residual power
/// of `d` after reduction is a conventions bug and errors as a normalization
/// failure. Large graphs are routed through the deletion–contraction path,
/// which is exactly equal and collapses series-parallel inputs in polynomial
/// time.
pub fn kauffman_bracket(g: &ColoredGraph) -> Result<LaurentPoly> {
    let w = EdgeWeights::bracket_for(g)?;
    let val = if g.ecount() <= 14 {
        w_subset(g, &w)
    } else {
        w_delcon(g, &w)
    };
    val.to_laurent()
}

/// Independent Kauffman state sum on the unit expansion:
/// `Σ_S (Π_{e∈S} A^{s_e}) (Π_{e∉S} A^{−s_e}) · d^{|S| + 2k(S) − V − 1}`,
/// where `s_e = sign(t_e)` and the exponent of `d` is always ≥ 0. No d-ring
/// arithmetic is involved; powers of `d` are multiplied out directly.
pub fn bracket_oracle(g: &ColoredGraph) -> Result<LaurentPoly> {
    for e in &g.edges {
        if e.t == 0 {
            return Err(Error::Domain("edge length 0 has no bracket weight".into()));
        }
    }
    let unit = g.expand_to_unit();
    let e = unit.ecount();
    if e > 26 {
        return Err(Error::Domain(format!(
            "oracle state sum limited to 26 unit crossings (got {e})"
        )));
    }
    let v = unit.vcount as i64;
    // Precomputed powers of d as plain Laurent polynomials.
    let max_dexp = (e as i64 + 2 * unit.vcount as i64 - v - 1).max(0) as usize;
    let mut dpow = Vec::with_capacity(max_dexp + 1);
    dpow.push(LaurentPoly::one());
    for j in 1..=max_dexp {
        dpow.push(&dpow[j - 1] * &LaurentPoly::d());
    }
    let signs: Vec<i64> = unit.edges.iter().map(|ed| ed.t.signum()).collect();
    let mut total = LaurentPoly::zero();
    for mask in 0u64..(1u64 << e) {
        let mut aexp = 0i64;
        for (i, s) in signs.iter().enumerate() {
            aexp += if mask >> i & 1 == 1 { *s } else { -*s };
        }
        let k = unit.components(mask) as i64;
        let dexp = mask.count_ones() as i64 + 2 * k - v - 1;
        debug_assert!(dexp >= 0);
        total = &total + &dpow[dexp as usize].mul_monomial(1, aexp);
    }
    Ok(total)
}

/// Jones normalization: multiplies the bracket by `(−A³)^{−writhe}` and
/// substitutes `A = q⁻¹`. The result is a Laurent polynomial in `q`, whose
/// exponents are quarter-powers of the classical variable (`q⁴ = t`).
pub fn jones(bracket: &LaurentPoly, writhe: i64) -> LaurentPoly {
    let unit = LaurentPoly::neg_power_of_a(3, -writhe);
    (bracket * &unit).substitute_a_inv()
}
