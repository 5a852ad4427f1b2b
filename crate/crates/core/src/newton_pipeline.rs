//! Newton polygons predicted from multiplicities, and the identities that
//! tie them to the resultant oracle.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{degenerate, Result};
use crate::exact_poly::Rat;
use crate::implicitize::map_degree;
use crate::lattice::{
    divide, minkowski_sum, polygon_from_family, rect_triangle, support, BalancedFamily, LatticePolygon, LatticeVector,
};
use crate::ratfunc::{coprime_factorization, order_family, Parametrization};

/// `deg(ρ)·N(curve) = P((ord_v ρ)_v)`, computed from a coprime factorization
/// without any root finding.
pub fn newton_pushforward(rho: &Parametrization) -> Result<LatticePolygon> {
    polygon_from_family(&order_family(&coprime_factorization(rho)))
}

/// `(N(curve), deg ρ)`. The degree comes from the resultant oracle.
pub fn curve_newton(rho: &Parametrization) -> Result<(LatticePolygon, u32)> {
    let push = newton_pushforward(rho)?;
    let delta = map_degree(rho)?;
    Ok((divide(&push, delta as i64)?, delta))
}

/// Both sides of the support-function identity at `σ = (σ₁, σ₂)`.
///
/// `lhs = h(N;σ) + h(N;(−σ₁,0)) + h(N;(0,−σ₂))` on the reduced curve polygon
/// `N`; `rhs = (1/deg ρ)·Σ_v max{0, −ord_v(g)·s·σ₁, −ord_v(f)·s·σ₂}` with
/// `s = sign(σ₁σ₂)`, each place weighted by its degree.
pub fn support_identity(rho: &Parametrization, sigma: LatticeVector) -> Result<(i64, Rat)> {
    Ok(support_identity_all(rho, &[sigma])?.remove(0))
}

/// [`support_identity`] at several directions, sharing one oracle call.
pub fn support_identity_all(rho: &Parametrization, sigmas: &[LatticeVector]) -> Result<Vec<(i64, Rat)>> {
    if sigmas.iter().any(|s| s.m == 0 || s.n == 0) {
        return Err(degenerate("support identity needs both entries of sigma nonzero"));
    }
    let (curve, delta) = curve_newton(rho)?;
    let ps = coprime_factorization(rho);
    Ok(sigmas
        .iter()
        .map(|&sigma| {
            let lhs = support(&curve, sigma)
                + support(&curve, LatticeVector::new(-sigma.m, 0))
                + support(&curve, LatticeVector::new(0, -sigma.n));
            let s = (sigma.m * sigma.n).signum();
            let term = |d: i64, e: i64| 0.max(-e * s * sigma.m).max(-d * s * sigma.n);
            let total: i64 = ps.places.iter().map(|p| p.poly.deg() as i64 * term(p.d, p.e)).sum::<i64>()
                + term(ps.infinity.m, ps.infinity.n);
            (lhs, Rat::new(total.into(), (delta as i64).into()))
        })
        .collect())
}

/// `(η(g), η(f))`: the sides of the minimal rectangle around the pushforward
/// polygon.
pub fn minimal_rectangle(rho: &Parametrization) -> (usize, usize) {
    (rho.g().height(), rho.f().height())
}

/// Directions on which two polygons are compared: the primitive vectors of
/// `[−2, 2]²` plus every edge normal of the given polygons.
fn test_directions(polys: &[&LatticePolygon]) -> Vec<LatticeVector> {
    let mut dirs: Vec<LatticeVector> =
        (-2..=2).flat_map(|m| (-2..=2).map(move |n| LatticeVector::new(m, n))).filter(|v| v.is_primitive()).collect();
    for q in polys {
        dirs.extend(q.edges().iter().map(|e| e.normal));
    }
    dirs.sort();
    dirs.dedup();
    dirs
}

/// The right-triangle side of the rectangle decomposition:
/// `Σ_v R_{ord_v}`, anchored at the origin.
pub fn rect_triangle_sum(rho: &Parametrization) -> LatticePolygon {
    let ps = coprime_factorization(rho);
    ps.places
        .iter()
        .map(|p| rect_triangle(LatticeVector::new(p.d, p.e)).scale(p.poly.deg() as i64))
        .chain(std::iter::once(rect_triangle(ps.infinity)))
        .fold(LatticePolygon::point(), |acc, r| minkowski_sum(&acc, &r))
}

/// Checks `N − box(N) = Σ_v R_v` for the pushforward polygon `N` by
/// comparing support functions, using `h(A − B; σ) = h(A; σ) + h(B; −σ)`.
pub fn rectangle_decomposition_check(rho: &Parametrization) -> Result<bool> {
    let push = newton_pushforward(rho)?;
    let bbox = push.bounding_box();
    let rhs = rect_triangle_sum(rho);
    let lhs = minkowski_sum(&push, &bbox.reflect());
    Ok(test_directions(&[&lhs, &rhs]).into_iter().all(|s| support(&push, s) + support(&bbox, -s) == support(&rhs, s)))
}

fn corollary_polygon(vectors: &[(i64, i64)]) -> Result<LatticePolygon> {
    let family = BalancedFamily::from_vectors(vectors.iter().map(|&(m, n)| LatticeVector::new(m, n)))?;
    if family.is_empty() {
        return Err(degenerate("every vector of the family is zero"));
    }
    polygon_from_family(&family)
}

fn check_supports(d: i64, big_d: i64, e: i64, big_e: i64) -> Result<()> {
    if big_d < d || big_e < e {
        return Err(degenerate(format!("support bounds need D >= d and E >= e, got d={d} D={big_d} e={e} E={big_e}")));
    }
    Ok(())
}

/// Pushforward polygon of `(p, q)` for Laurent polynomials supported on
/// `[d, D]` and `[e, E]` with nonzero extreme coefficients and `gcd(p, q) = 1`.
pub fn generic_laurent(d: i64, big_d: i64, e: i64, big_e: i64) -> Result<LatticePolygon> {
    check_supports(d, big_d, e, big_e)?;
    corollary_polygon(&[(big_d - d, 0), (0, big_e - e), (-big_d, -big_e), (d, e)])
}

/// Pushforward polygon of `(p/r, q/r)` with `deg r = F` and `p, q, r`
/// pairwise coprime.
pub fn generic_same_denominator(d: i64, big_d: i64, e: i64, big_e: i64, f: i64) -> Result<LatticePolygon> {
    check_supports(d, big_d, e, big_e)?;
    if f < 0 {
        return Err(degenerate("denominator degree must be nonnegative"));
    }
    corollary_polygon(&[(big_d - d, 0), (0, big_e - e), (f - big_d, f - big_e), (d, e), (-f, -f)])
}

/// Pushforward polygon of `(p/r, q/s)` with `deg r = F`, `deg s = G` and
/// `p, q, r, s` pairwise coprime.
pub fn generic_different_denominators(
    d: i64,
    big_d: i64,
    e: i64,
    big_e: i64,
    f: i64,
    g: i64,
) -> Result<LatticePolygon> {
    check_supports(d, big_d, e, big_e)?;
    if f < 0 || g < 0 {
        return Err(degenerate("denominator degrees must be nonnegative"));
    }
    corollary_polygon(&[(big_d - d, 0), (0, big_e - e), (f - big_d, g - big_e), (d, e), (-f, 0), (0, -g)])
}

/// Rays of the tropical curve: primitive directions of the order vectors,
/// each with the summed lattice length along it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TropicalCurveData {
    pub rays: Vec<(LatticeVector, i64)>,
}

impl TropicalCurveData {
    pub fn is_balanced(&self) -> bool {
        self.rays.iter().fold(LatticeVector::ZERO, |acc, &(v, k)| acc + k * v).is_zero()
    }
}

pub fn tropical_data(rho: &Parametrization) -> TropicalCurveData {
    TropicalCurveData { rays: order_family(&coprime_factorization(rho)).grouped() }
}

/// Whether the identity `lhs = rhs` of [`support_identity`] holds.
pub fn support_identity_holds(rho: &Parametrization, sigma: LatticeVector) -> Result<bool> {
    let (lhs, rhs) = support_identity(rho, sigma)?;
    Ok((Rat::from_integer(lhs.into()) - rhs).is_zero())
}
