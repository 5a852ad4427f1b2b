mod common;

use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use npk::exact_poly::{div_exact, int, poly_gcd, squarefree_part, sylvester_resultant, Rat, UniPoly};
use npk::expr::parse_rational_expr;
use npk::implicitize::{fiber_degree, implicit_equation, implicit_equation_symbolic, map_degree};
use npk::lattice::{
    boundary_lattice_points, content, double_area, family_of_polygon, interior_lattice_points, minkowski_sum,
    polygon_from_family, support, LatticePolygon, LatticeVector,
};
use npk::newton_pipeline::{newton_pushforward, tropical_data};
use npk::ratfunc::{coprime_factorization, make_rational, order_family, Parametrization};
use npk::synth::{edge_data, synthesize};

fn small_poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-9i64..=9, 1..=max_deg + 1).prop_map(|c| UniPoly::from_ints(&c))
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    small_poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn seed() -> impl Strategy<Value = u64> {
    any::<u64>()
}

fn polygon() -> impl Strategy<Value = LatticePolygon> {
    seed().prop_map(|s| random_polygon(&mut ChaCha8Rng::seed_from_u64(s), 6, 4))
}

fn points() -> impl Strategy<Value = Vec<LatticeVector>> {
    prop::collection::vec((-5i64..=5, -5i64..=5).prop_map(|(m, n)| LatticeVector::new(m, n)), 1..8)
}

fn parametrization() -> impl Strategy<Value = Parametrization> {
    seed().prop_map(|s| random_parametrization(&mut ChaCha8Rng::seed_from_u64(s)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gcd_divides_both(a in nonzero_poly(4), b in nonzero_poly(4)) {
        let g = poly_gcd(&a, &b).unwrap();
        prop_assert!(a.div_rem(&g).unwrap().1.is_zero());
        prop_assert!(b.div_rem(&g).unwrap().1.is_zero());
        prop_assert!(g.leading() == int(1));
    }

    #[test]
    fn exact_division_inverts_multiplication(a in nonzero_poly(4), b in nonzero_poly(4)) {
        prop_assert_eq!(div_exact(&(&a * &b), &b).unwrap(), a);
    }

    #[test]
    fn squarefree_part_has_simple_roots(a in nonzero_poly(3), b in nonzero_poly(2)) {
        let p = &(&a * &a) * &b;
        let s = squarefree_part(&p).unwrap();
        if !s.is_constant() {
            prop_assert!(poly_gcd(&s, &s.derivative()).unwrap().is_constant());
        }
        prop_assert!(p.div_rem(&s).unwrap().1.is_zero());
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(a in nonzero_poly(3), b in nonzero_poly(3)) {
        let (m, n) = (a.deg(), b.deg());
        let r = sylvester_resultant(a.coeffs(), b.coeffs(), m, n).unwrap();
        prop_assert_eq!(r.is_zero(), !poly_gcd(&a, &b).unwrap().is_constant());
    }

    #[test]
    fn resultant_antisymmetry(a in nonzero_poly(3), b in nonzero_poly(3)) {
        let (m, n) = (a.deg(), b.deg());
        let ab = sylvester_resultant(a.coeffs(), b.coeffs(), m, n).unwrap();
        let ba = sylvester_resultant(b.coeffs(), a.coeffs(), n, m).unwrap();
        let sign = if (m * n) % 2 == 0 { int(1) } else { int(-1) };
        prop_assert_eq!(ab, sign * ba);
    }

    #[test]
    fn factorization_reconstructs(rho in parametrization()) {
        let ps = coprime_factorization(&rho);
        ps.validate().unwrap();
        let (f, g) = ps.reconstruct().unwrap();
        prop_assert_eq!(&f, rho.f());
        prop_assert_eq!(&g, rho.g());
        let fam = order_family(&ps);
        let sum = fam.entries().iter().fold(LatticeVector::ZERO, |acc, &(v, k)| acc + (k as i64) * v);
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn evaluated_resultant_matches_symbolic(rho in parametrization()) {
        prop_assume!(rho.f().height() + rho.g().height() <= 6);
        prop_assert_eq!(implicit_equation(&rho).unwrap(), implicit_equation_symbolic(&rho).unwrap());
    }

    #[test]
    fn map_degree_matches_fiber_count(rho in parametrization()) {
        prop_assert_eq!(map_degree(&rho).unwrap(), fiber_degree(&rho).unwrap());
    }

    #[test]
    fn implicit_equation_vanishes_on_the_curve(rho in parametrization(), t0 in -20i64..20) {
        let r = implicit_equation(&rho).unwrap();
        if let Some((x, y)) = rho.eval(&Rat::from_integer(t0.into())) {
            prop_assert!(r.eval(&x, &y).is_zero());
        }
    }

    #[test]
    fn tropical_multiplicities_are_edge_lengths(rho in parametrization()) {
        let push = newton_pushforward(&rho).unwrap();
        let mut rays = tropical_data(&rho).rays;
        let mut edges: Vec<_> = push.edges().iter().map(|e| (e.normal, e.length)).collect();
        if push.is_polygon() {
            rays.sort();
            edges.sort();
            prop_assert_eq!(rays, edges);
        }
    }

    #[test]
    fn support_is_additive(a in points(), b in points(), w in (-4i64..=4, -4i64..=4)) {
        let (p, q) = (LatticePolygon::hull(&a).unwrap(), LatticePolygon::hull(&b).unwrap());
        let w = LatticeVector::new(w.0, w.1);
        prop_assert_eq!(support(&minkowski_sum(&p, &q), w), support(&p, w) + support(&q, w));
        prop_assert_eq!(minkowski_sum(&p, &q), minkowski_sum(&q, &p));
    }

    #[test]
    fn content_scales(q in polygon(), k in 1i64..5) {
        prop_assert_eq!(content(&q.scale(k)).unwrap(), k * content(&q).unwrap());
    }

    #[test]
    fn family_round_trip(q in polygon()) {
        prop_assert_eq!(polygon_from_family(&family_of_polygon(&q).unwrap()).unwrap(), q.clone());
        let balance = edge_data(&q).unwrap().iter().fold(LatticeVector::ZERO, |acc, e| acc + e.length * e.normal);
        prop_assert!(balance.is_zero());
    }

    #[test]
    fn pick_formula(q in polygon()) {
        let b = boundary_lattice_points(&q).unwrap();
        let i = interior_lattice_points(&q);
        prop_assert_eq!(2 * i + b - 2, double_area(&q));
        prop_assert_eq!((i + b) as usize, q.lattice_points().len());
    }

    #[test]
    fn printed_functions_reparse(num in nonzero_poly(4), den in nonzero_poly(3)) {
        let f = make_rational(num, den).unwrap();
        prop_assert_eq!(parse_rational_expr(&f.to_string()).unwrap(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn synthesis_round_trip(q in polygon(), s in seed()) {
        let rho = synthesize(&q, s).unwrap();
        prop_assert_eq!(newton_pushforward(&rho).unwrap(), q.clone());
        prop_assert_eq!(map_degree(&rho).unwrap(), 1);
    }
}
