//! The multivariate twist polynomial.
//!
//! [`twist_polynomial`] computes `P(A, x₁, …, x_E) = d^E · W(G)` where the
//! W-polynomial is taken with per-edge symbolic weights
//!
//! * chain `i` → `(x = 1,          y = (x_i − 1)/d)`
//! * sheaf `i` → `(x = (x_i − 1)/d, y = 1)`
//!
//! Expanding the subset sum, the term of a subset `S` is
//! `Π_{i∈F(S)}(x_i − 1) · d^{E − |F(S)| + k(S) + n(S) − 1}` with
//! `F(S) = {chains ∉ S} ∪ {sheafs ∈ S}`; the exponent is provably ≥ 0
//! (`|F(S)| ≤ E` and `k(S) ≥ 1`), so every coefficient is an honest Laurent
//! polynomial with no residual `d` denominator.
//!
//! [`specialize_twist`] recovers the Kauffman bracket:
//! `⟨G(n)⟩ = A^{σ(r)} · P(A, (−A⁻⁴)^{r_1}, …) / d^E` with `r_i = n_i` on
//! chains and `r_i = −n_i` on sheafs, `σ(r) = Σ r_i`. [`p_statistic`] is the
//! spanning-tree maximum of `#{sheafs ∈ F} + #{chains ∉ F}`, and
//! [`norm_bound_scan`] exhibits the boundedness of `‖d^p · ⟨G(t)⟩‖²` over
//! sample grids.

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, EdgeSubset};
use crate::laurent::LaurentPoly;
use crate::wpoly::kauffman_bracket;
use num_bigint::BigUint;
use std::collections::BTreeMap;
use std::fmt;

/// A multilinear polynomial in `x₁ … x_k` with Laurent-polynomial
/// coefficients in `A`. Exponent vectors have length `k` with entries in
/// `{0, 1}`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiPoly {
    k: usize,
    terms: BTreeMap<Vec<u8>, LaurentPoly>,
}

impl MultiPoly {
    fn new(k: usize) -> Self {
        MultiPoly { k, terms: BTreeMap::new() }
    }

    /// Number of `x`-variables.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of stored (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of the monomial with 0/1 exponent vector `expo`.
    pub fn coeff(&self, expo: &[u8]) -> LaurentPoly {
        self.terms.get(expo).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    /// Terms in ascending lexicographic order of the exponent vector.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &LaurentPoly)> {
        self.terms.iter()
    }

    fn add_term(&mut self, expo: Vec<u8>, c: &LaurentPoly) {
        debug_assert_eq!(expo.len(), self.k);
        let entry = self.terms.entry(expo);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c.clone());
                }
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }
}

impl fmt::Display for MultiPoly {
    /// Terms ascending in the exponent vector, each as `(coeff)` or
    /// `(coeff)*x1*x3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (expo, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, e) in expo.iter().enumerate() {
                if *e != 0 {
                    write!(f, "*x{}", i + 1)?;
                }
            }
        }
        Ok(())
    }
}

/// The twist polynomial of the colored graph (variables indexed by edge
/// order). Coefficients are `d`-free by construction; a negative `d`
/// exponent would indicate a conventions bug and errors out.
pub fn twist_polynomial(g: &ColoredGraph) -> Result<MultiPoly> {
    let e = g.ecount();
    if e > 16 {
        return Err(Error::Domain(format!(
            "twist polynomial expansion limited to 16 edges (got {e})"
        )));
    }
    let mut dpow: Vec<LaurentPoly> = vec![LaurentPoly::one()];
    let mut out = MultiPoly::new(e);
    for s in 0u64..(1u64 << e) {
        let mut fmask: EdgeSubset = 0;
        for (i, ed) in g.edges.iter().enumerate() {
            let in_s = s >> i & 1 == 1;
            let in_f = match ed.color {
                Color::Chain => !in_s,
                Color::Sheaf => in_s,
            };
            if in_f {
                fmask |= 1 << i;
            }
        }
        let fsize = fmask.count_ones() as i64;
        let ks = g.components(s) as i64;
        let ns = g.cyclomatic(s) as i64;
        let dexp = e as i64 - fsize + ks + ns - 1;
        if dexp < 0 {
            return Err(Error::NormalizationFailure(format!(
                "negative d-exponent {dexp} in twist polynomial term"
            )));
        }
        while (dpow.len() as i64) <= dexp {
            let next = dpow.last().unwrap() * &LaurentPoly::d();
            dpow.push(next);
        }
        let dp = &dpow[dexp as usize];
        // Π_{i∈F}(x_i − 1) = Σ_{T ⊆ F} (−1)^{|F|−|T|} x^T, by submask walk.
        let mut t = fmask;
        loop {
            let sign: i64 = if (fsize - t.count_ones() as i64) % 2 == 1 { -1 } else { 1 };
            let expo: Vec<u8> = (0..e).map(|i| (t >> i & 1) as u8).collect();
            out.add_term(expo, &dp.mul_monomial(sign, 0));
            if t == 0 {
                break;
            }
            t = (t - 1) & fmask;
        }
    }
    Ok(out)
}

/// Specializes the twist polynomial back to the Kauffman bracket of the
/// graph with edge lengths `n`: substitutes `x_i = (−A⁻⁴)^{r_i}`, multiplies
/// by `A^{σ(r)}`, and divides exactly by `d^E`. The result equals
/// `kauffman_bracket` of the relabeled graph; an inexact division signals a
/// conventions bug.
pub fn specialize_twist(p: &MultiPoly, g: &ColoredGraph, n: &[i64]) -> Result<LaurentPoly> {
    if n.len() != g.ecount() || p.k() != g.ecount() {
        return Err(Error::Domain(format!(
            "length vector has {} entries for {} edges",
            n.len(),
            g.ecount()
        )));
    }
    if n.contains(&0) {
        return Err(Error::Domain("edge length 0 has no bracket weight".into()));
    }
    let r: Vec<i64> = g
        .edges
        .iter()
        .zip(n)
        .map(|(ed, &ni)| match ed.color {
            Color::Chain => ni,
            Color::Sheaf => -ni,
        })
        .collect();
    let sigma: i64 = r.iter().sum();
    let mut total = LaurentPoly::zero();
    for (expo, c) in p.terms() {
        let rsum: i64 = expo
            .iter()
            .enumerate()
            .filter(|(_, e)| **e != 0)
            .map(|(i, _)| r[i])
            .sum();
        // Π_{i∈T} (−A⁻⁴)^{r_i} = (−A⁻⁴)^{Σ_{i∈T} r_i}
        total = &total + &(c * &LaurentPoly::neg_power_of_a(-4, rsum));
    }
    total = total.mul_monomial(1, sigma);
    let de = LaurentPoly::d().pow(g.ecount() as i64)?;
    total.exact_div(&de).map_err(|_| {
        Error::NormalizationFailure("twist specialization not divisible by d^E".into())
    })
}

/// The spanning-tree statistic `p = max_F (#{sheafs ∈ F} + #{chains ∉ F})`,
/// together with a witnessing spanning tree. Errors on disconnected input.
pub fn p_statistic(g: &ColoredGraph) -> Result<(usize, EdgeSubset)> {
    let trees = g.spanning_trees()?;
    let mut best: Option<(usize, EdgeSubset)> = None;
    for f in trees {
        let mut pf = 0usize;
        for (i, ed) in g.edges.iter().enumerate() {
            let in_f = f >> i & 1 == 1;
            match (ed.color, in_f) {
                (Color::Sheaf, true) | (Color::Chain, false) => pf += 1,
                _ => {}
            }
        }
        if best.is_none_or(|(b, _)| pf > b) {
            best = Some((pf, f));
        }
    }
    best.ok_or(Error::NotConnected)
}

/// Report of a coefficient-norm boundedness scan: the squared l2 norm of
/// `d^p · ⟨G(t)⟩` per sample length vector, and the maximum over the grid.
#[derive(Debug, Clone)]
pub struct NormScanReport {
    /// The p-statistic of the template graph.
    pub p: usize,
    /// Largest squared coefficient norm across the samples.
    pub max_norm_sq: BigUint,
    /// `(sample lengths, squared norm)` per sample, in input order.
    pub rows: Vec<(Vec<i64>, BigUint)>,
}

/// Computes `‖d^p · ⟨G(t)⟩‖²` for each sample length vector `t` and reports
/// the maximum, exhibiting the uniform coefficient-norm bound empirically.
pub fn norm_bound_scan(g: &ColoredGraph, samples: &[Vec<i64>]) -> Result<NormScanReport> {
    let (p, _) = p_statistic(g)?;
    let dp = LaurentPoly::d().pow(p as i64)?;
    let mut rows = Vec::with_capacity(samples.len());
    let mut max_norm_sq = BigUint::from(0u32);
    for sample in samples {
        let relabeled = g.with_lengths(sample)?;
        let bracket = kauffman_bracket(&relabeled)?;
        let norm = (&bracket * &dp).l2_norm_sq();
        if norm > max_norm_sq {
            max_norm_sq = norm.clone();
        }
        rows.push((sample.clone(), norm));
    }
    Ok(NormScanReport { p, max_norm_sq, rows })
}
