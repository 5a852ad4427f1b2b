//! Parametrizations realizing a prescribed polygon, and the invariants of
//! the space of curves with that polygon.

use std::collections::HashSet;

use num_integer::Integer;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{degenerate, Error, Result};
use crate::exact_poly::{int, Rat, UniPoly};
use crate::implicitize::{bivariate_newton, implicit_equation, reduced_part};
use crate::lattice::{boundary_lattice_points, LatticePolygon, LatticeVector};
use crate::ratfunc::{make_rational, Parametrization, Place, PlaceSystem, RationalFunction};

/// Reseeds allowed before [`Error::GenericityFailure`].
pub const MAX_ATTEMPTS: u32 = 8;

/// Primitive inner normal of an edge together with its lattice length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeDatum {
    pub normal: LatticeVector,
    pub length: i64,
}

impl EdgeDatum {
    pub fn is_outside(&self) -> bool {
        !self.normal.is_nonnegative()
    }
}

/// One edge datum per edge, counterclockwise.
pub fn edge_data(q: &LatticePolygon) -> Result<Vec<EdgeDatum>> {
    if !q.is_polygon() {
        return Err(degenerate("edge data needs a nondegenerate polygon"));
    }
    Ok(q.edges().iter().map(|e| EdgeDatum { normal: e.normal, length: e.length }).collect())
}

/// `u = (α, β, p₁, …, p_r)` with each `p_i` given by its roots.
///
/// An edge may list fewer than `ℓ_i` roots; the missing ones sit at infinity.
/// At most one edge may do so, which keeps the polygon unchanged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SynthesisPoint {
    pub alpha: Rat,
    pub beta: Rat,
    pub roots: Vec<Vec<Rat>>,
}

impl SynthesisPoint {
    pub fn validate(&self, edges: &[EdgeDatum]) -> Result<()> {
        if self.alpha.is_zero() || self.beta.is_zero() {
            return Err(degenerate("alpha and beta must be nonzero"));
        }
        if self.roots.len() != edges.len() {
            return Err(degenerate(format!("{} root lists for {} edges", self.roots.len(), edges.len())));
        }
        let mut short = 0;
        let mut seen = HashSet::new();
        for (rs, e) in self.roots.iter().zip(edges) {
            if rs.len() as i64 > e.length {
                return Err(degenerate(format!("edge of length {} given {} roots", e.length, rs.len())));
            }
            if (rs.len() as i64) < e.length {
                short += 1;
            }
            let own: HashSet<&Rat> = rs.iter().collect();
            if own.iter().any(|r| !seen.insert(*r)) {
                return Err(degenerate("two edges share a root"));
            }
        }
        if short > 1 {
            return Err(degenerate("more than one edge has roots at infinity"));
        }
        Ok(())
    }

    /// The factorization `f = α·Π p_i^{m_i}`, `g = β·Π p_i^{n_i}`.
    pub fn place_system(&self, edges: &[EdgeDatum]) -> Result<PlaceSystem> {
        self.validate(edges)?;
        let places: Vec<Place> = self
            .roots
            .iter()
            .zip(edges)
            .filter(|(rs, _)| !rs.is_empty())
            .map(|(rs, e)| Place { poly: UniPoly::from_roots(rs), d: e.normal.m, e: e.normal.n })
            .collect();
        let finite = places.iter().fold(LatticeVector::ZERO, |acc, p| acc + p.weighted_order());
        Ok(PlaceSystem { alpha: self.alpha.clone(), beta: self.beta.clone(), places, infinity: -finite })
    }
}

/// `ρ_u`.
pub fn rho_from_point(edges: &[EdgeDatum], u: &SynthesisPoint) -> Result<Parametrization> {
    let (f, g) = u.place_system(edges)?.reconstruct()?;
    Parametrization::new(f, g)
}

/// How a synthesis point is drawn for a polygon.
pub trait RootStrategy: Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    /// Whether the strategy can realize the polygon at all.
    fn applies(&self, edges: &[EdgeDatum]) -> bool;

    fn sample(&self, edges: &[EdgeDatum], rng: &mut ChaCha8Rng, attempt: u32) -> SynthesisPoint;
}

/// Distinct integers drawn from a pool that widens with each attempt.
fn distinct_integers(rng: &mut ChaCha8Rng, count: usize, start: i64, attempt: u32) -> Vec<Rat> {
    let mut pool: Vec<i64> = (start..start + count as i64 + 3 * attempt as i64).collect();
    pool.shuffle(rng);
    pool.into_iter().take(count).map(int).collect()
}

fn assign(edges: &[EdgeDatum], finite: &[usize], mut values: Vec<Rat>) -> Vec<Vec<Rat>> {
    let mut roots = vec![Vec::new(); edges.len()];
    for &i in finite {
        let rest = values.split_off(edges[i].length as usize);
        roots[i] = values;
        values = rest;
    }
    roots
}

fn point(roots: Vec<Vec<Rat>>) -> SynthesisPoint {
    SynthesisPoint { alpha: Rat::one(), beta: Rat::one(), roots }
}

/// Every edge gets `ℓ_i` finite roots; nothing sits at infinity.
pub struct GenericRoots;

impl RootStrategy for GenericRoots {
    fn name(&self) -> &'static str {
        "generic"
    }

    fn description(&self) -> &'static str {
        "distinct integer roots on every edge"
    }

    fn applies(&self, _edges: &[EdgeDatum]) -> bool {
        true
    }

    fn sample(&self, edges: &[EdgeDatum], rng: &mut ChaCha8Rng, attempt: u32) -> SynthesisPoint {
        let total: i64 = edges.iter().map(|e| e.length).sum();
        let finite: Vec<usize> = (0..edges.len()).collect();
        point(assign(edges, &finite, distinct_integers(rng, total as usize, 0, attempt)))
    }
}

/// The single edge with a normal outside the positive quadrant is sent to
/// infinity, so both coordinates are polynomials.
pub struct PolynomialRoots;

impl RootStrategy for PolynomialRoots {
    fn name(&self) -> &'static str {
        "polynomial"
    }

    fn description(&self) -> &'static str {
        "polynomial coordinates: the outside edge sits at infinity"
    }

    fn applies(&self, edges: &[EdgeDatum]) -> bool {
        edges.iter().filter(|e| e.is_outside()).count() == 1
    }

    fn sample(&self, edges: &[EdgeDatum], rng: &mut ChaCha8Rng, attempt: u32) -> SynthesisPoint {
        let finite: Vec<usize> = (0..edges.len()).filter(|&i| !edges[i].is_outside()).collect();
        let total: i64 = finite.iter().map(|&i| edges[i].length).sum();
        point(assign(edges, &finite, distinct_integers(rng, total as usize, 0, attempt)))
    }
}

/// Up to two outside edges: one sits at infinity, the other at zero, so
/// both coordinates are Laurent polynomials.
pub struct LaurentRoots;

impl RootStrategy for LaurentRoots {
    fn name(&self) -> &'static str {
        "laurent"
    }

    fn description(&self) -> &'static str {
        "Laurent coordinates: outside edges sit at zero and infinity"
    }

    fn applies(&self, edges: &[EdgeDatum]) -> bool {
        matches!(edges.iter().filter(|e| e.is_outside()).count(), 1 | 2)
    }

    fn sample(&self, edges: &[EdgeDatum], rng: &mut ChaCha8Rng, attempt: u32) -> SynthesisPoint {
        let outside: Vec<usize> = (0..edges.len()).filter(|&i| edges[i].is_outside()).collect();
        let at_zero = outside.get(1).copied();
        let finite: Vec<usize> = (0..edges.len()).filter(|&i| !edges[i].is_outside()).collect();
        let total: i64 = finite.iter().map(|&i| edges[i].length).sum();
        let mut roots = assign(edges, &finite, distinct_integers(rng, total as usize, 1, attempt));
        if let Some(i) = at_zero {
            roots[i] = vec![Rat::zero(); edges[i].length as usize];
        }
        point(roots)
    }
}

/// Checks with the resultant oracle that `ρ` is birational onto a curve
/// whose Newton polygon is `q`.
pub fn certify(q: &LatticePolygon, rho: &Parametrization) -> Result<bool> {
    let r = implicit_equation(rho)?;
    if bivariate_newton(&r)? != q.normalized() {
        return Ok(false);
    }
    Ok(reduced_part(&r)?.1 == 1)
}

fn attempt_seed(seed: u64, attempt: u32) -> u64 {
    seed.wrapping_add((attempt as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Draws synthesis points with `strategy` until the oracle certifies one.
pub fn synthesize_with(
    q: &LatticePolygon,
    seed: u64,
    strategy: &dyn RootStrategy,
) -> Result<(SynthesisPoint, Parametrization)> {
    let edges = edge_data(q)?;
    if !strategy.applies(&edges) {
        return Err(degenerate(format!("the {} strategy does not apply to {q}", strategy.name())));
    }
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(attempt_seed(seed, attempt));
        let u = strategy.sample(&edges, &mut rng, attempt);
        let rho = rho_from_point(&edges, &u)?;
        if certify(q, &rho)? {
            return Ok((u, rho));
        }
    }
    Err(Error::GenericityFailure { attempts: MAX_ATTEMPTS as usize })
}

/// A birational parametrization whose curve has Newton polygon `q`.
pub fn synthesize(q: &LatticePolygon, seed: u64) -> Result<Parametrization> {
    Ok(synthesize_with(q, seed, &GenericRoots)?.1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Realizability {
    pub as_curve: bool,
    pub by_laurent: bool,
    pub by_polynomials: bool,
}

/// Which kinds of parametrization can produce a curve with polygon `q`,
/// read off the number of inner normals outside the positive quadrant.
pub fn realizability(q: &LatticePolygon) -> Result<Realizability> {
    let outside = edge_data(q)?.iter().filter(|e| e.is_outside()).count();
    Ok(Realizability { as_curve: true, by_laurent: matches!(outside, 1 | 2), by_polynomials: outside == 1 })
}

/// A segment of direction `(a, b)` and lattice length `k` is the polygon of
/// `(x^a y^b − ξ)^k`, a curve only when `k = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SegmentAnalysis {
    pub content: i64,
    pub as_curve: bool,
    pub a: i64,
    pub b: i64,
}

impl SegmentAnalysis {
    /// `(c, d)` with `c·a + d·b = 1`.
    pub fn bezout(&self) -> (i64, i64) {
        let g = self.a.extended_gcd(&self.b);
        (g.x * g.gcd, g.y * g.gcd)
    }

    /// `t ↦ (ξ^c t^b, ξ^d t^{−a})`, which traces `x^a y^b = ξ`.
    pub fn sample_parametrization(&self, xi: &Rat) -> Result<Parametrization> {
        if xi.is_zero() {
            return Err(degenerate("xi must be nonzero"));
        }
        let (c, d) = self.bezout();
        let monomial = |coef: Rat, k: i64| -> Result<RationalFunction> {
            let t = UniPoly::monomial(coef, k.unsigned_abs() as usize);
            if k >= 0 {
                make_rational(t, UniPoly::one())
            } else {
                make_rational(UniPoly::constant(t.leading()), UniPoly::monomial(Rat::one(), k.unsigned_abs() as usize))
            }
        };
        let pow = |k: i64| {
            if k >= 0 {
                num_traits::pow(xi.clone(), k as usize)
            } else {
                num_traits::pow(xi.recip(), (-k) as usize)
            }
        };
        Parametrization::new(monomial(pow(c), self.b)?, monomial(pow(d), -self.a)?)
    }
}

pub fn segment_analysis(s: &LatticePolygon) -> Result<SegmentAnalysis> {
    if s.is_polygon() || s.is_point() {
        return Err(degenerate("segment analysis needs a segment"));
    }
    let v = s.vertices();
    let (dir, k) = (v[1] - v[0]).primitive();
    let dir = if dir.m < 0 || (dir.m == 0 && dir.n < 0) { -dir } else { dir };
    Ok(SegmentAnalysis { content: k, as_curve: k == 1, a: dir.m, b: dir.n })
}

/// Dimension of the space of rational curves with polygon `q`.
pub fn dim_mq(q: &LatticePolygon) -> Result<i64> {
    if q.is_point() {
        return Err(degenerate("no curve has a point as Newton polygon"));
    }
    if !q.is_polygon() {
        return Ok(1);
    }
    Ok(boundary_lattice_points(q)? - 1)
}

/// Coefficients of the implicit equation of `ρ_u` at every lattice point of
/// `q`, row-major by `y` then `x`, as a normalized projective point.
pub fn xi_sample(q: &LatticePolygon, u: &SynthesisPoint) -> Result<Vec<Rat>> {
    let edges = edge_data(q)?;
    let r = implicit_equation(&rho_from_point(&edges, u)?)?;
    let points = q.lattice_points();
    let min_x = points.iter().map(|p| p.m).min().unwrap_or(0);
    let min_y = points.iter().map(|p| p.n).min().unwrap_or(0);
    Ok(points.iter().map(|p| r.coeff(p.m - min_x, p.n - min_y)).collect())
}
