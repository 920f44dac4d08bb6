//! Cross-module identity checks: symmetries and algebraic laws that tie the
//! bracket engine, the twist machinery, the transfer-matrix closed forms,
//! and the curve analysis together.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wpoly_core::{
    builtin_family, equimodular_points, family_closed_form, jones, kauffman_bracket,
    matrix_power_check, normalized_lambda_pair, p_statistic, state_sums, tangle_coeffs, Color,
    ColoredGraph, DRingElem, Edge, LaurentPoly, Tolerances,
};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_graph(rng: &mut ChaCha8Rng, max_v: usize, max_e: usize, tmax: i64) -> ColoredGraph {
    let v = rng.gen_range(1..=max_v);
    let ecount = rng.gen_range(0..=max_e);
    let edges = (0..ecount)
        .map(|_| {
            let u = rng.gen_range(0..v);
            let w = rng.gen_range(0..v);
            let color = if rng.gen_bool(0.5) { Color::Chain } else { Color::Sheaf };
            let mut t = 0;
            while t == 0 {
                t = rng.gen_range(-tmax..=tmax);
            }
            Edge { u, v: w, color, t }
        })
        .collect();
    ColoredGraph::new(v, edges, None).unwrap()
}

fn random_laurent(rng: &mut ChaCha8Rng) -> LaurentPoly {
    loop {
        let terms: Vec<(i64, BigInt)> = (0..rng.gen_range(1..=4))
            .map(|_| (rng.gen_range(-3..=3), BigInt::from(rng.gen_range(-4..=4))))
            .collect();
        let p = LaurentPoly::from_terms(terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Negating every twist count mirrors the diagram, which inverts A in the
/// bracket.
#[test]
fn mirror_symmetry_under_length_negation() {
    let mut r = rng(7001);
    for _ in 0..60 {
        let g = random_graph(&mut r, 5, 7, 4);
        let mirrored: Vec<i64> = g.edges.iter().map(|e| -e.t).collect();
        let gm = g.with_lengths(&mirrored).unwrap();
        assert_eq!(
            kauffman_bracket(&gm).unwrap(),
            kauffman_bracket(&g).unwrap().substitute_a_inv()
        );
    }
}

/// The bracket and the p-statistic are invariant under edge reordering.
#[test]
fn edge_order_invariance() {
    let mut r = rng(7002);
    for _ in 0..40 {
        let g = random_graph(&mut r, 5, 7, 3);
        let b = kauffman_bracket(&g).unwrap();
        let p = if g.components(g.full_subset()) == 1 && g.ecount() > 0 {
            Some(p_statistic(&g).unwrap().0)
        } else {
            None
        };
        let mut edges = g.edges.clone();
        edges.shuffle(&mut r);
        let shuffled = ColoredGraph::new(g.vcount, edges, None).unwrap();
        assert_eq!(kauffman_bracket(&shuffled).unwrap(), b);
        if let Some(p) = p {
            assert_eq!(p_statistic(&shuffled).unwrap().0, p);
        }
    }
}

/// A chain of t crossings is an unknot diagram of writhe −t: the Jones
/// normalization collapses it to 1.
#[test]
fn jones_of_twisted_unknots_is_one() {
    for t in [1i64, -1, 2, -3, 4, 5] {
        let g = ColoredGraph::new(
            2,
            vec![Edge { u: 0, v: 1, color: Color::Chain, t }],
            None,
        )
        .unwrap();
        let bracket = kauffman_bracket(&g).unwrap();
        assert_eq!(jones(&bracket, -t), LaurentPoly::one(), "t = {t}");
    }
}

/// Exact division undoes multiplication on random Laurent polynomials.
#[test]
fn exact_division_inverts_multiplication() {
    let mut r = rng(7003);
    for _ in 0..200 {
        let f = random_laurent(&mut r);
        let g = random_laurent(&mut r);
        assert_eq!((&f * &g).exact_div(&g).unwrap(), f);
    }
}

/// Ring laws in the d-localized ring: commutativity, distributivity, and
/// compatibility with the plain Laurent ring.
#[test]
fn d_ring_laws() {
    let mut r = rng(7004);
    for _ in 0..100 {
        let make = |r: &mut ChaCha8Rng| {
            DRingElem::from_laurent(random_laurent(r)).mul(&DRingElem::d_pow(r.gen_range(-2..=2)))
        };
        let x = make(&mut r);
        let y = make(&mut r);
        let z = make(&mut r);
        assert_eq!(x.mul(&y), y.mul(&x));
        assert_eq!(x.add(&y).mul(&z), x.mul(&z).add(&y.mul(&z)));
        assert_eq!(x.add(&x.neg()), DRingElem::zero());
    }
}

/// The two marked state sums partition the full state sum:
/// S₁ + S₂ = d^(V+1) ⟨G⟩.
#[test]
fn state_sums_partition_the_bracket() {
    let mut r = rng(7005);
    let mut checked = 0;
    while checked < 30 {
        let g = random_graph(&mut r, 5, 8, 3);
        if g.vcount < 2 {
            continue;
        }
        let marked = ColoredGraph::new(g.vcount, g.edges.clone(), Some((0, g.vcount - 1))).unwrap();
        let (s1, s2) = state_sums(&marked).unwrap();
        let bracket = kauffman_bracket(&g).unwrap();
        let rhs = DRingElem::from_laurent(bracket).mul(&DRingElem::d_pow(g.vcount as i64 + 1));
        assert_eq!(s1.add(&s2), rhs);
        checked += 1;
    }
}

/// The closed form of the transfer matrix power matches literal matrix
/// iteration on every built-in tangle.
#[test]
fn transfer_matrix_power_closed_form() {
    for name in ["twist", "2-1", "2-2", "3-2", "3-3", "2-2-2", "3-2-2", "pretzel:3,2"] {
        let fam = builtin_family(name).unwrap();
        let (a11, a12, a21, _) = tangle_coeffs(&fam.tangle).unwrap();
        assert!(a21.is_zero(), "{name}: a21 != 0");
        assert!(matrix_power_check(&a11, &a12, 5), "{name}: matrix power mismatch at n = 5");
    }
}

/// At every reported equimodular point, the invariant
/// t* = (λ₁+λ₂)²/(λ₁λ₂) is real, lies in [0, 4], and recovers the slice
/// parameter that produced the point.
#[test]
fn equimodular_points_recover_t() {
    let tols = Tolerances::default();
    for name in ["2-1", "3-2", "2-2-2"] {
        let fam = builtin_family(name).unwrap();
        let form = family_closed_form(&fam.base, &fam.tangle).unwrap();
        let (a, b) = normalized_lambda_pair(&form.lambda1, &form.lambda2).unwrap();
        let grid = [0.0, 0.8, 1.25, 2.0, 3.15, 4.0];
        let pts = equimodular_points(&form.lambda1, &form.lambda2, &grid, &tols).unwrap();
        assert!(!pts.is_empty());
        for p in &pts {
            let l1 = a.eval_complex(p.z, 0.0).unwrap();
            let l2 = b.eval_complex(p.z, 0.0).unwrap();
            let prod = l1 * l2;
            if prod.norm() < 1e-10 {
                continue;
            }
            let sum = l1 + l2;
            let tstar = sum * sum / prod;
            assert!(
                tstar.im.abs() <= 1e-6 * (1.0 + tstar.re.abs()),
                "{name}: t* not real at t = {}: {tstar}",
                p.t
            );
            assert!(
                (-1e-6..=4.0 + 1e-6).contains(&tstar.re),
                "{name}: t* = {} outside [0, 4]",
                tstar.re
            );
            assert!(
                (tstar.re - p.t).abs() <= 1e-6 * (1.0 + p.t),
                "{name}: t* = {} but slice t = {}",
                tstar.re,
                p.t
            );
        }
    }
}

/// The p-statistic witness tree realizes the reported maximum.
#[test]
fn p_statistic_witness_is_consistent() {
    let mut r = rng(7006);
    let mut checked = 0;
    while checked < 40 {
        let g = random_graph(&mut r, 5, 8, 3);
        if g.components(g.full_subset()) != 1 || g.ecount() == 0 {
            continue;
        }
        let (p, witness) = p_statistic(&g).unwrap();
        let mut recount = 0usize;
        for (i, edge) in g.edges.iter().enumerate() {
            let in_tree = witness & (1 << i) != 0;
            match edge.color {
                Color::Sheaf if in_tree => recount += 1,
                Color::Chain if !in_tree => recount += 1,
                _ => {}
            }
        }
        assert_eq!(recount, p, "witness does not realize the reported p");
        // The witness is a spanning tree: acyclic and spanning.
        assert_eq!(g.components(witness), 1);
        assert_eq!(g.cyclomatic(witness), 0);
        checked += 1;
    }
}
