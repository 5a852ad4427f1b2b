//! Exact lattice-polygon geometry.
//!
//! Polygons are convex hulls of integer points. All comparisons are exact
//! integer cross products; nothing here touches floating point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{degenerate, Error, Result};

/// An integer vector, also used for lattice points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct LatticeVector {
    pub m: i64,
    pub n: i64,
}

impl LatticeVector {
    pub const ZERO: Self = Self { m: 0, n: 0 };

    pub const fn new(m: i64, n: i64) -> Self {
        Self { m, n }
    }

    pub fn is_zero(self) -> bool {
        self.m == 0 && self.n == 0
    }

    pub fn dot(self, other: Self) -> i64 {
        self.m * other.m + self.n * other.n
    }

    pub fn cross(self, other: Self) -> i64 {
        self.m * other.n - self.n * other.m
    }

    /// Number of lattice steps along the vector: `gcd(|m|, |n|)`.
    pub fn lattice_length(self) -> i64 {
        self.m.gcd(&self.n)
    }

    /// Primitive vector in the same direction together with the lattice
    /// length. Zero maps to `(0, 0)`.
    pub fn primitive(self) -> (Self, i64) {
        let len = self.lattice_length();
        if len == 0 {
            (Self::ZERO, 0)
        } else {
            (Self::new(self.m / len, self.n / len), len)
        }
    }

    pub fn is_primitive(self) -> bool {
        self.lattice_length() == 1
    }

    /// Rotation by −90°: `(a, b) ↦ (b, −a)`.
    pub fn rotate_cw(self) -> Self {
        Self::new(self.n, -self.m)
    }

    /// Rotation by +90°: `(a, b) ↦ (−b, a)`.
    pub fn rotate_ccw(self) -> Self {
        Self::new(-self.n, self.m)
    }

    /// Lies in the closed positive quadrant.
    pub fn is_nonnegative(self) -> bool {
        self.m >= 0 && self.n >= 0
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

impl Add for LatticeVector {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.m + o.m, self.n + o.n)
    }
}

impl Sub for LatticeVector {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.m - o.m, self.n - o.n)
    }
}

impl Neg for LatticeVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.m, -self.n)
    }
}

impl Mul<LatticeVector> for i64 {
    type Output = LatticeVector;
    fn mul(self, v: LatticeVector) -> LatticeVector {
        LatticeVector::new(self * v.m, self * v.n)
    }
}

fn half_plane(v: LatticeVector) -> u8 {
    if v.n > 0 || (v.n == 0 && v.m > 0) {
        0
    } else {
        1
    }
}

/// Orders nonzero vectors by their angle in `[0, 2π)`.
pub fn angle_cmp(a: LatticeVector, b: LatticeVector) -> Ordering {
    half_plane(a).cmp(&half_plane(b)).then_with(|| 0.cmp(&a.cross(b)))
}

/// Lowest point first, ties broken by smaller `m`.
fn bottom_left_cmp(a: &LatticeVector, b: &LatticeVector) -> Ordering {
    (a.n, a.m).cmp(&(b.n, b.m))
}

/// Finite family of weighted integer vectors summing to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedFamily {
    entries: Vec<(LatticeVector, u64)>,
}

impl BalancedFamily {
    /// Zero vectors and zero weights are dropped; the remainder must balance.
    pub fn new(entries: impl IntoIterator<Item = (LatticeVector, u64)>) -> Result<Self> {
        let entries: Vec<_> = entries.into_iter().filter(|(v, w)| !v.is_zero() && *w > 0).collect();
        let sum = entries.iter().fold(LatticeVector::ZERO, |acc, &(v, w)| acc + (w as i64) * v);
        if !sum.is_zero() {
            return Err(Error::UnbalancedFamily(sum.m, sum.n));
        }
        Ok(Self { entries })
    }

    /// Unit weights.
    pub fn from_vectors(vectors: impl IntoIterator<Item = LatticeVector>) -> Result<Self> {
        Self::new(vectors.into_iter().map(|v| (v, 1)))
    }

    pub fn entries(&self) -> &[(LatticeVector, u64)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries grouped by primitive direction, each with its summed lattice
    /// length, sorted by angle.
    pub fn grouped(&self) -> Vec<(LatticeVector, i64)> {
        let mut groups: Vec<(LatticeVector, i64)> = Vec::new();
        for &(v, w) in &self.entries {
            let (dir, len) = v.primitive();
            let len = len * w as i64;
            match groups.iter_mut().find(|(d, _)| *d == dir) {
                Some(g) => g.1 += len,
                None => groups.push((dir, len)),
            }
        }
        groups.sort_by(|a, b| angle_cmp(a.0, b.0));
        groups
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolygonKind {
    Point,
    Segment,
    Polygon,
}

/// One edge of a lattice polygon, oriented counterclockwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub start: LatticeVector,
    pub vector: LatticeVector,
    /// Primitive inner normal.
    pub normal: LatticeVector,
    pub length: i64,
}

/// Convex lattice polygon, possibly a segment or a point.
///
/// Vertices run counterclockwise from the lowest (then leftmost) vertex with
/// no three consecutive vertices collinear. Constructors normalize the
/// translation so the polygon touches both axes from inside the first
/// quadrant; [`rect_triangle`] and [`LatticePolygon::hull`] are the
/// exceptions and keep their anchor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LatticePolygon {
    vertices: Vec<LatticeVector>,
    kind: PolygonKind,
}

impl fmt::Debug for LatticePolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[", self.kind)?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Display for LatticePolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// JSON encoding shared with the CLI: `{"vertices": [[x, y], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonJson {
    pub vertices: Vec<[i64; 2]>,
}

impl LatticePolygon {
    /// Convex hull of the given points, kept at its position. Empty input is
    /// degenerate.
    pub fn hull(points: &[LatticeVector]) -> Result<Self> {
        let mut pts = points.to_vec();
        pts.sort_by_key(|a| (a.m, a.n));
        pts.dedup();
        if pts.is_empty() {
            return Err(degenerate("convex hull of no points"));
        }
        if pts.len() == 1 {
            return Ok(Self { vertices: pts, kind: PolygonKind::Point });
        }
        // Monotone chain; strict turns drop collinear points.
        let mut lower: Vec<LatticeVector> = Vec::new();
        for &p in &pts {
            while lower.len() >= 2
                && (lower[lower.len() - 1] - lower[lower.len() - 2]).cross(p - lower[lower.len() - 1]) <= 0
            {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<LatticeVector> = Vec::new();
        for &p in pts.iter().rev() {
            while upper.len() >= 2
                && (upper[upper.len() - 1] - upper[upper.len() - 2]).cross(p - upper[upper.len() - 1]) <= 0
            {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        let mut vertices = lower;
        vertices.extend(upper);
        if vertices.len() == 2 {
            vertices.sort_by(bottom_left_cmp);
            return Ok(Self { vertices, kind: PolygonKind::Segment });
        }
        let start = vertices.iter().enumerate().min_by(|a, b| bottom_left_cmp(a.1, b.1)).map(|(i, _)| i).unwrap_or(0);
        vertices.rotate_left(start);
        Ok(Self { vertices, kind: PolygonKind::Polygon })
    }

    /// Normalized convex hull of the points.
    pub fn from_points(points: &[LatticeVector]) -> Result<Self> {
        Ok(Self::hull(points)?.normalized())
    }

    pub fn point() -> Self {
        Self { vertices: vec![LatticeVector::ZERO], kind: PolygonKind::Point }
    }

    pub fn from_json(json: &PolygonJson) -> Result<Self> {
        let pts: Vec<_> = json.vertices.iter().map(|&[x, y]| LatticeVector::new(x, y)).collect();
        Self::from_points(&pts)
    }

    pub fn to_json(&self) -> PolygonJson {
        PolygonJson { vertices: self.vertices.iter().map(|v| [v.m, v.n]).collect() }
    }

    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    pub fn kind(&self) -> PolygonKind {
        self.kind
    }

    pub fn is_polygon(&self) -> bool {
        self.kind == PolygonKind::Polygon
    }

    pub fn is_point(&self) -> bool {
        self.kind == PolygonKind::Point
    }

    pub fn translate(&self, by: LatticeVector) -> Self {
        Self { vertices: self.vertices.iter().map(|&v| v + by).collect(), kind: self.kind }
    }

    /// Translated so that the minimal coordinates are both zero.
    pub fn normalized(&self) -> Self {
        let min_m = self.vertices.iter().map(|v| v.m).min().unwrap_or(0);
        let min_n = self.vertices.iter().map(|v| v.n).min().unwrap_or(0);
        self.translate(LatticeVector::new(-min_m, -min_n))
    }

    pub fn is_normalized(&self) -> bool {
        self.vertices.iter().map(|v| v.m).min() == Some(0) && self.vertices.iter().map(|v| v.n).min() == Some(0)
    }

    /// Equality modulo translation.
    pub fn same_shape(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    /// Counterclockwise edges. A segment has two opposite edges, a point none.
    pub fn edges(&self) -> Vec<Edge> {
        let k = self.vertices.len();
        if k < 2 {
            return Vec::new();
        }
        (0..k)
            .map(|i| {
                let start = self.vertices[i];
                let vector = self.vertices[(i + 1) % k] - start;
                let (dir, length) = vector.primitive();
                Edge { start, vector, normal: dir.rotate_ccw(), length }
            })
            .collect()
    }

    /// Dilation by a nonnegative integer about the origin.
    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::point();
        }
        assert!(k > 0, "negative dilation");
        Self { vertices: self.vertices.iter().map(|&v| k * v).collect(), kind: self.kind }
    }

    /// Point reflection `−Q`.
    pub fn reflect(&self) -> Self {
        let pts: Vec<_> = self.vertices.iter().map(|&v| -v).collect();
        Self::hull(&pts).expect("nonempty")
    }

    /// Minimal axis-parallel rectangle containing the polygon.
    pub fn bounding_box(&self) -> Self {
        let (lo_m, hi_m) = min_max(self.vertices.iter().map(|v| v.m));
        let (lo_n, hi_n) = min_max(self.vertices.iter().map(|v| v.n));
        Self::hull(&[
            LatticeVector::new(lo_m, lo_n),
            LatticeVector::new(hi_m, lo_n),
            LatticeVector::new(hi_m, hi_n),
            LatticeVector::new(lo_m, hi_n),
        ])
        .expect("nonempty")
    }

    /// `(width, height)` of the bounding box.
    pub fn extent(&self) -> (i64, i64) {
        let (lo_m, hi_m) = min_max(self.vertices.iter().map(|v| v.m));
        let (lo_n, hi_n) = min_max(self.vertices.iter().map(|v| v.n));
        (hi_m - lo_m, hi_n - lo_n)
    }

    pub fn contains(&self, p: LatticeVector) -> bool {
        match self.kind {
            PolygonKind::Point => p == self.vertices[0],
            PolygonKind::Segment => {
                let (a, b) = (self.vertices[0], self.vertices[1]);
                (b - a).cross(p - a) == 0 && (p - a).dot(b - a) >= 0 && (p - b).dot(a - b) >= 0
            }
            PolygonKind::Polygon => self.edges().iter().all(|e| e.vector.cross(p - e.start) >= 0),
        }
    }

    /// All lattice points of the polygon in row-major order (by `n`, then `m`).
    pub fn lattice_points(&self) -> Vec<LatticeVector> {
        let (lo_m, hi_m) = min_max(self.vertices.iter().map(|v| v.m));
        let (lo_n, hi_n) = min_max(self.vertices.iter().map(|v| v.n));
        let mut out = Vec::new();
        for n in lo_n..=hi_n {
            for m in lo_m..=hi_m {
                let p = LatticeVector::new(m, n);
                if self.contains(p) {
                    out.push(p);
                }
            }
        }
        out
    }
}

fn min_max(it: impl Iterator<Item = i64>) -> (i64, i64) {
    it.fold((i64::MAX, i64::MIN), |(lo, hi), x| (lo.min(x), hi.max(x)))
}

fn walk(start: LatticeVector, steps: impl IntoIterator<Item = LatticeVector>) -> Vec<LatticeVector> {
    let mut pts = vec![start];
    let mut cur = start;
    for s in steps {
        cur = cur + s;
        pts.push(cur);
    }
    pts
}

/// Rotates the vectors of `family` by −90° and concatenates them
/// counterclockwise. Parallel vectors merge into one edge; an all-collinear
/// family collapses to a segment.
pub fn polygon_from_family(family: &BalancedFamily) -> Result<LatticePolygon> {
    if family.is_empty() {
        return Err(degenerate("empty balanced family"));
    }
    let mut steps: Vec<LatticeVector> = family.grouped().into_iter().map(|(dir, len)| len * dir.rotate_cw()).collect();
    steps.sort_by(|a, b| angle_cmp(*a, *b));
    LatticePolygon::from_points(&walk(LatticeVector::ZERO, steps))
}

/// Edge normals weighted by edge lengths: the inverse of
/// [`polygon_from_family`].
pub fn family_of_polygon(q: &LatticePolygon) -> Result<BalancedFamily> {
    BalancedFamily::new(q.edges().into_iter().map(|e| (e.normal, e.length as u64)))
}

/// Support function `max ⟨w, u⟩` over the polygon.
pub fn support(q: &LatticePolygon, w: LatticeVector) -> i64 {
    q.vertices().iter().map(|&u| w.dot(u)).max().expect("polygon has a vertex")
}

/// Minkowski sum by merging the two edge sequences by angle. Position is
/// kept: the lowest vertex of the sum is the sum of the lowest vertices.
pub fn minkowski_sum(a: &LatticePolygon, b: &LatticePolygon) -> LatticePolygon {
    let start = a.vertices()[0] + b.vertices()[0];
    let mut steps: Vec<LatticeVector> = a.edges().iter().chain(b.edges().iter()).map(|e| e.vector).collect();
    steps.sort_by(|x, y| angle_cmp(*x, *y));
    LatticePolygon::hull(&walk(start, steps)).expect("nonempty")
}

/// Largest `c` with `Q / c` a lattice polygon up to translation: the gcd of
/// the edge lengths.
pub fn content(q: &LatticePolygon) -> Result<i64> {
    if q.is_point() {
        return Err(degenerate("content of a point"));
    }
    Ok(q.edges().iter().fold(0, |g, e| g.gcd(&e.length)))
}

/// The polygon `Q / k`, normalized.
pub fn divide(q: &LatticePolygon, k: i64) -> Result<LatticePolygon> {
    if k <= 0 {
        return Err(degenerate("division by a non-positive integer"));
    }
    if q.is_point() {
        return Ok(LatticePolygon::point());
    }
    let c = content(q)?;
    if c % k != 0 {
        return Err(Error::NotDivisible(format!("{k} does not divide the content {c} of {q}")));
    }
    let steps = q.edges().into_iter().map(|e| LatticeVector::new(e.vector.m / k, e.vector.n / k));
    LatticePolygon::from_points(&walk(LatticeVector::ZERO, steps))
}

/// `Card(∂Q ∩ ℤ²)` for a polygon; `ℓ(S) + 1` for a segment.
pub fn boundary_lattice_points(q: &LatticePolygon) -> Result<i64> {
    match q.kind() {
        PolygonKind::Point => Err(degenerate("boundary of a point")),
        PolygonKind::Segment => Ok(q.edges()[0].length + 1),
        PolygonKind::Polygon => Ok(q.edges().iter().map(|e| e.length).sum()),
    }
}

/// Twice the area, from the shoelace formula.
pub fn double_area(q: &LatticePolygon) -> i64 {
    let v = q.vertices();
    (0..v.len()).map(|i| v[i].cross(v[(i + 1) % v.len()])).sum()
}

/// Interior lattice points by Pick's theorem.
pub fn interior_lattice_points(q: &LatticePolygon) -> i64 {
    if !q.is_polygon() {
        return 0;
    }
    let b = boundary_lattice_points(q).expect("polygon");
    (double_area(q) - b + 2) / 2
}

/// The anchored right triangle attached to an order vector
/// `v = (ord f, ord g)`. Not normalized.
pub fn rect_triangle(v: LatticeVector) -> LatticePolygon {
    let (of, og) = (v.m, v.n);
    let legs = [LatticeVector::new(-og, 0), LatticeVector::new(0, -of)];
    let corner = if of * og >= 0 { LatticeVector::ZERO } else { LatticeVector::new(-og, -of) };
    LatticePolygon::hull(&[corner, legs[0], legs[1]]).expect("nonempty")
}

/// Degree of the closure in the projective plane of a curve with Newton
/// polygon `Q`.
pub fn torus_degree(q: &LatticePolygon) -> i64 {
    let q = q.normalized();
    support(&q, LatticeVector::new(1, 1))
        + support(&q, LatticeVector::new(-1, 0))
        + support(&q, LatticeVector::new(0, -1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(m: i64, n: i64) -> LatticeVector {
        LatticeVector::new(m, n)
    }

    fn poly(pts: &[(i64, i64)]) -> LatticePolygon {
        LatticePolygon::from_points(&pts.iter().map(|&(m, n)| v(m, n)).collect::<Vec<_>>()).unwrap()
    }

    fn verts(q: &LatticePolygon) -> Vec<(i64, i64)> {
        q.vertices().iter().map(|p| (p.m, p.n)).collect()
    }

    fn kite() -> LatticePolygon {
        poly(&[(0, 0), (2, 0), (2, 1), (1, 2)])
    }

    fn unit_triangle() -> LatticePolygon {
        poly(&[(0, 0), (1, 0), (0, 1)])
    }

    #[test]
    fn hull_orders_from_lowest_vertex() {
        let q = poly(&[(1, 2), (2, 1), (0, 0), (2, 0), (1, 1), (1, 0)]);
        assert_eq!(verts(&q), vec![(0, 0), (2, 0), (2, 1), (1, 2)]);
        assert_eq!(q.kind(), PolygonKind::Polygon);
        let s = poly(&[(3, 0), (0, 2), (3, 0)]);
        assert_eq!(verts(&s), vec![(3, 0), (0, 2)]);
        assert_eq!(s.kind(), PolygonKind::Segment);
        assert_eq!(poly(&[(5, 5)]), LatticePolygon::point());
    }

    #[test]
    fn family_example_one() {
        let fam = BalancedFamily::new([(v(-1, -1), 1), (v(-1, 0), 1), (v(0, 1), 2), (v(2, -1), 1)]).unwrap();
        assert_eq!(polygon_from_family(&fam).unwrap(), kite());
    }

    #[test]
    fn family_collinear_is_segment() {
        let fam = BalancedFamily::from_vectors([v(0, 1), v(0, -1)]).unwrap();
        assert_eq!(verts(&polygon_from_family(&fam).unwrap()), vec![(0, 0), (1, 0)]);
        let fam = BalancedFamily::from_vectors([v(0, 2), v(0, -1), v(0, -1)]).unwrap();
        assert_eq!(verts(&polygon_from_family(&fam).unwrap()), vec![(0, 0), (2, 0)]);
    }

    #[test]
    fn family_three_places() {
        let fam = BalancedFamily::from_vectors([v(1, 1), v(-2, 2), v(1, -3)]).unwrap();
        assert_eq!(verts(&polygon_from_family(&fam).unwrap()), vec![(1, 0), (3, 2), (0, 1)]);
    }

    #[test]
    fn family_errors() {
        assert_eq!(BalancedFamily::from_vectors([v(1, 0)]), Err(Error::UnbalancedFamily(1, 0)));
        let empty = BalancedFamily::from_vectors([v(0, 0)]).unwrap();
        assert!(matches!(polygon_from_family(&empty), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn support_examples() {
        assert_eq!(support(&kite(), v(1, 1)), 3);
        assert_eq!(support(&unit_triangle(), v(1, 1)), 1);
        assert_eq!(support(&kite(), v(-1, 0)), 0);
    }

    #[test]
    fn minkowski_examples() {
        let h = poly(&[(0, 0), (1, 0)]);
        let vert = poly(&[(0, 0), (0, 1)]);
        assert_eq!(minkowski_sum(&h, &vert), poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]));
        assert_eq!(minkowski_sum(&kite(), &LatticePolygon::point()), kite());
    }

    #[test]
    fn content_examples() {
        assert_eq!(content(&unit_triangle()).unwrap(), 1);
        assert_eq!(content(&unit_triangle().scale(2)).unwrap(), 2);
        assert_eq!(content(&kite()).unwrap(), 1);
        assert!(content(&LatticePolygon::point()).is_err());
    }

    #[test]
    fn divide_examples() {
        assert_eq!(divide(&unit_triangle().scale(2), 2).unwrap(), unit_triangle());
        assert_eq!(divide(&kite(), 1).unwrap(), kite());
        assert_eq!(verts(&divide(&poly(&[(0, 0), (2, 2)]), 2).unwrap()), vec![(0, 0), (1, 1)]);
        assert!(matches!(divide(&kite(), 2), Err(Error::NotDivisible(_))));
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(boundary_lattice_points(&unit_triangle()).unwrap(), 3);
        // Edge lengths 2, 1, 1, 1.
        assert_eq!(boundary_lattice_points(&kite()).unwrap(), 5);
        assert_eq!(boundary_lattice_points(&poly(&[(2, 0), (1, 2), (0, 1)])).unwrap(), 3);
        assert_eq!(boundary_lattice_points(&poly(&[(0, 0), (3, 3)])).unwrap(), 4);
        assert!(boundary_lattice_points(&LatticePolygon::point()).is_err());
    }

    #[test]
    fn boundary_count_matches_enumeration() {
        for q in [kite(), unit_triangle().scale(3), poly(&[(2, 0), (1, 2), (0, 1)])] {
            let on_boundary = q
                .lattice_points()
                .into_iter()
                .filter(|&p| q.edges().iter().any(|e| e.vector.cross(p - e.start) == 0))
                .count() as i64;
            assert_eq!(boundary_lattice_points(&q).unwrap(), on_boundary);
            assert_eq!(interior_lattice_points(&q), q.lattice_points().len() as i64 - on_boundary);
        }
    }

    #[test]
    fn rect_triangle_examples() {
        assert_eq!(verts(&rect_triangle(v(-1, -1))), vec![(0, 0), (1, 0), (0, 1)]);
        assert_eq!(verts(&rect_triangle(v(2, -1))), vec![(0, -2), (1, -2), (1, 0)]);
        assert_eq!(verts(&rect_triangle(v(0, 0))), vec![(0, 0)]);
        // Both branches agree when one order vanishes.
        assert_eq!(verts(&rect_triangle(v(0, -3))), vec![(0, 0), (3, 0)]);
    }

    #[test]
    fn torus_degree_examples() {
        assert_eq!(torus_degree(&kite()), 3);
        assert_eq!(torus_degree(&unit_triangle()), 1);
        assert_eq!(torus_degree(&poly(&[(0, 0), (1, 0), (1, 1), (0, 1)])), 2);
    }

    #[test]
    fn edges_carry_inner_normals() {
        let e = kite().edges();
        let data: Vec<_> = e.iter().map(|e| (e.normal, e.length)).collect();
        assert_eq!(data, vec![(v(0, 1), 2), (v(-1, 0), 1), (v(-1, -1), 1), (v(2, -1), 1)]);
    }

    #[test]
    fn lattice_points_row_major() {
        let q = poly(&[(2, 0), (1, 2), (0, 1)]);
        assert_eq!(q.lattice_points(), vec![v(2, 0), v(0, 1), v(1, 1), v(1, 2)]);
    }

    #[test]
    fn json_round_trip() {
        let q = kite();
        let text = serde_json::to_string(&q.to_json()).unwrap();
        assert_eq!(text, r#"{"vertices":[[0,0],[2,0],[2,1],[1,2]]}"#);
        let back: PolygonJson = serde_json::from_str(&text).unwrap();
        assert_eq!(LatticePolygon::from_json(&back).unwrap(), q);
    }
}
