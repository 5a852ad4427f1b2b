//! The resultant oracle: the equation of the pushforward cycle of a
//! parametrization, its reduced part and the degree of the map.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{degenerate, Error, Result};
use crate::exact_poly::{interpolate, poly_gcd, sylvester_resultant, Rat, Ring, UniPoly};
use crate::lattice::{LatticePolygon, LatticeVector};
use crate::ratfunc::Parametrization;

/// Sparse Laurent polynomial in `x, y` with rational coefficients. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(i64, i64), Rat>,
}

impl BivariatePolynomial {
    pub fn from_terms(terms: impl IntoIterator<Item = ((i64, i64), Rat)>) -> Self {
        let mut out = Self::zero();
        for (exp, c) in terms {
            out.add_term(exp, c);
        }
        out
    }

    pub fn monomial(i: i64, j: i64, c: Rat) -> Self {
        Self::from_terms([((i, j), c)])
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, Rat::one())
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, Rat::one())
    }

    fn add_term(&mut self, exp: (i64, i64), c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: i64, j: i64) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn support(&self) -> Vec<LatticeVector> {
        self.terms.keys().map(|&(i, j)| LatticeVector::new(i, j)).collect()
    }

    fn exponent_range(&self, pick: impl Fn(&(i64, i64)) -> i64) -> Option<(i64, i64)> {
        let lo = self.terms.keys().map(&pick).min()?;
        let hi = self.terms.keys().map(&pick).max()?;
        Some((lo, hi))
    }

    /// Width of the support in `x`; for a normalized polynomial the
    /// `x`-degree.
    pub fn deg_x(&self) -> i64 {
        self.exponent_range(|e| e.0).map_or(0, |(lo, hi)| hi - lo)
    }

    pub fn deg_y(&self) -> i64 {
        self.exponent_range(|e| e.1).map_or(0, |(lo, hi)| hi - lo)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, a)| (e, a * c)))
    }

    pub fn shift(&self, di: i64, dj: i64) -> Self {
        Self { terms: self.terms.iter().map(|(&(i, j), c)| ((i + di, j + dj), c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `∂/∂y`, also for negative exponents.
    pub fn derivative_y(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(i, j), c)| ((i, j - 1), c * Rat::from_integer(BigInt::from(j)))))
    }

    pub fn derivative_x(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(i, j), c)| ((i - 1, j), c * Rat::from_integer(BigInt::from(i)))))
    }

    fn pow_rat(base: &Rat, e: i64) -> Rat {
        let p = num_traits::pow(base.clone(), e.unsigned_abs() as usize);
        if e < 0 {
            p.recip()
        } else {
            p
        }
    }

    /// Value at `(x0, y0)`. Negative exponents need nonzero coordinates.
    pub fn eval(&self, x0: &Rat, y0: &Rat) -> Rat {
        self.terms.iter().map(|(&(i, j), c)| c * Self::pow_rat(x0, i) * Self::pow_rat(y0, j)).sum()
    }

    /// Strips the monomial factor, scales to integer coefficients with gcd 1
    /// and makes the coefficient at the lexicographically greatest exponent
    /// positive. Two polynomials differing by a unit of the Laurent ring
    /// normalize identically.
    pub fn normalized(&self) -> Self {
        let Some((min_i, _)) = self.exponent_range(|e| e.0) else {
            return Self::zero();
        };
        let (min_j, _) = self.exponent_range(|e| e.1).expect("nonempty");
        let lcm_den = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> =
            self.terms.values().map(|c| (c * Rat::from_integer(lcm_den.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let lead_negative = ints.last().expect("nonempty").is_negative();
        let g = if lead_negative { -g } else { g };
        Self {
            terms: self
                .terms
                .keys()
                .zip(ints)
                .map(|(&(i, j), c)| ((i - min_i, j - min_j), Rat::from_integer(c / &g)))
                .collect(),
        }
    }

    /// Writes the polynomial in `x`, `y`, highest exponent first.
    pub fn fmt_xy(&self) -> String {
        if self.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (&(i, j), c) in self.terms.iter().rev() {
            let negative = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut mono = Vec::new();
            for (var, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => mono.push(var.to_string()),
                    _ => mono.push(format!("{var}^{e}")),
                }
            }
            let mono = mono.join("*");
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }

    pub fn to_json(&self) -> BivariateJson {
        BivariateJson {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| TermJson { i, j, c: format!("{}/{}", c.numer(), c.denom()) })
                .collect(),
        }
    }

    pub fn from_json(json: &BivariateJson) -> Result<Self> {
        let mut out = Self::zero();
        for t in &json.terms {
            let c = parse_rat(&t.c)
                .ok_or_else(|| Error::Parse { offset: 0, message: format!("bad coefficient {:?}", t.c) })?;
            out.add_term((t.i, t.j), c);
        }
        Ok(out)
    }
}

fn parse_rat(s: &str) -> Option<Rat> {
    match s.split_once('/') {
        Some((p, q)) => {
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rat::new(p.trim().parse().ok()?, q))
        }
        None => Some(Rat::from_integer(s.trim().parse().ok()?)),
    }
}

/// `{"terms": [{"i": .., "j": .., "c": "p/q"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BivariateJson {
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub i: i64,
    pub j: i64,
    pub c: String,
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_xy())
    }
}

impl fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bivariate({self})")
    }
}

impl Add<&BivariatePolynomial> for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub<&BivariatePolynomial> for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul<&BivariatePolynomial> for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut acc: BTreeMap<(i64, i64), Rat> = BTreeMap::new();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                *acc.entry((i1 + i2, j1 + j2)).or_insert_with(Rat::zero) += a * b;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        BivariatePolynomial { terms: acc }
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Add for BivariatePolynomial {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for BivariatePolynomial {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for BivariatePolynomial {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for BivariatePolynomial {
    type Output = Self;
    fn neg(self) -> Self {
        -&self
    }
}

impl Zero for BivariatePolynomial {
    fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for BivariatePolynomial {
    fn one() -> Self {
        Self::constant(Rat::one())
    }
}

impl Ring for BivariatePolynomial {
    /// Exact division by repeatedly cancelling the lexicographically leading
    /// term. Quotient exponents are bounded below by the difference of the
    /// minimal exponents, which keeps the loop finite for Laurent input.
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (&lead_exp, lead_c) = divisor.terms.iter().next_back()?;
        let floor_i = self.exponent_range(|e| e.0).map_or(0, |r| r.0) - divisor.exponent_range(|e| e.0)?.0;
        let floor_j = self.exponent_range(|e| e.1).map_or(0, |r| r.0) - divisor.exponent_range(|e| e.1)?.0;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((&(ri, rj), rc)) = rem.terms.iter().next_back() {
            let (qi, qj) = (ri - lead_exp.0, rj - lead_exp.1);
            if qi < floor_i || qj < floor_j {
                return None;
            }
            let qc = rc / lead_c;
            let step = Self::monomial(qi, qj, qc.clone());
            rem = &rem - &(&step * divisor);
            quot.add_term((qi, qj), qc);
        }
        Some(quot)
    }
}

/// The pushforward equation `Res_{D,E}(f_den·x − f_num, g_den·y − g_num; t)`
/// with `D = η(f)`, `E = η(g)`, normalized. Equals a unit times
/// `E_C^{deg ρ}` where `E_C` is the reduced equation of the image curve.
///
/// The determinant is evaluated on the grid `{0..E} × {0..D}` and
/// interpolated, which is exact because `deg_x ≤ E` and `deg_y ≤ D`.
pub fn implicit_equation(rho: &Parametrization) -> Result<BivariatePolynomial> {
    let (f, g) = (rho.f(), rho.g());
    if f.is_constant() && g.is_constant() {
        return Err(degenerate("both coordinates are constant"));
    }
    let (d, e) = (f.height(), g.height());
    let linear = |num: &UniPoly, den: &UniPoly, v: &Rat, deg: usize| -> Vec<Rat> {
        (0..=deg).map(|k| &den.coeff(k) * v - num.coeff(k)).collect()
    };
    let xs: Vec<Rat> = (0..=e as i64).map(|i| Rat::from_integer(i.into())).collect();
    let ys: Vec<Rat> = (0..=d as i64).map(|j| Rat::from_integer(j.into())).collect();
    let mut by_x = Vec::with_capacity(xs.len());
    for x0 in &xs {
        let p = linear(f.num(), f.den(), x0, d);
        let values = ys
            .iter()
            .map(|y0| sylvester_resultant(&p, &linear(g.num(), g.den(), y0, e), d, e))
            .collect::<Result<Vec<_>>>()?;
        by_x.push(interpolate(&ys, &values)?);
    }
    let mut terms = Vec::new();
    for j in 0..=d {
        let column: Vec<Rat> = by_x.iter().map(|p| p.coeff(j)).collect();
        let cx = interpolate(&xs, &column)?;
        terms.extend(cx.coeffs().iter().enumerate().map(|(i, c)| ((i as i64, j as i64), c.clone())));
    }
    let r = BivariatePolynomial::from_terms(terms);
    if r.is_zero() {
        return Err(Error::VerificationMismatch(format!("resultant of {rho} vanished identically")));
    }
    Ok(r.normalized())
}

/// The same resultant computed symbolically, by fraction-free elimination
/// over `ℚ[x, y]`. Slower; kept as an independent check.
pub fn implicit_equation_symbolic(rho: &Parametrization) -> Result<BivariatePolynomial> {
    let (f, g) = (rho.f(), rho.g());
    if f.is_constant() && g.is_constant() {
        return Err(degenerate("both coordinates are constant"));
    }
    let linear = |num: &UniPoly, den: &UniPoly, var: &BivariatePolynomial, deg: usize| -> Vec<BivariatePolynomial> {
        (0..=deg).map(|k| &var.scale(&den.coeff(k)) - &BivariatePolynomial::constant(num.coeff(k))).collect()
    };
    let (d, e) = (f.height(), g.height());
    let p = linear(f.num(), f.den(), &BivariatePolynomial::x(), d);
    let q = linear(g.num(), g.den(), &BivariatePolynomial::y(), e);
    let r = sylvester_resultant(&p, &q, d, e)?;
    if r.is_zero() {
        return Err(Error::VerificationMismatch(format!("resultant of {rho} vanished identically")));
    }
    Ok(r.normalized())
}

/// Exact `k`-th root of a normalized polynomial, found one lex-leading term
/// at a time from `R − E^k`.
pub fn perfect_root(r: &BivariatePolynomial, k: u32) -> Option<BivariatePolynomial> {
    if k == 1 {
        return Some(r.clone());
    }
    let ki = k as i64;
    let (&(i0, j0), c0) = r.terms.iter().next_back()?;
    if i0 % ki != 0 || j0 % ki != 0 || !c0.is_integer() {
        return None;
    }
    let root = c0.numer().nth_root(k);
    if num_traits::pow(root.clone(), k as usize) != *c0.numer() {
        return None;
    }
    let lead = (i0 / ki, j0 / ki);
    let mut e = BivariatePolynomial::monomial(lead.0, lead.1, Rat::from_integer(root.clone()));
    let denom = Rat::from_integer(BigInt::from(k) * num_traits::pow(root, k as usize - 1));
    let (shift_i, shift_j) = (lead.0 * (ki - 1), lead.1 * (ki - 1));
    let mut last = lead;
    let budget = r.len() * (r.deg_x() as usize + r.deg_y() as usize + 2);
    for _ in 0..budget {
        let residual = r - &e.pow(k);
        let Some((&(a, b), c)) = residual.terms.iter().next_back() else {
            return Some(e);
        };
        let next = (a - shift_i, b - shift_j);
        if next.0 < 0 || next.1 < 0 || next >= last {
            return None;
        }
        e = &e + &BivariatePolynomial::monomial(next.0, next.1, c / &denom);
        last = next;
    }
    None
}

/// Reduction of a pushforward equation, which is always a unit times a
/// power of an irreducible polynomial: `(E, δ)` with `E^δ = R` up to a unit
/// and `δ` maximal.
pub fn reduced_part(r: &BivariatePolynomial) -> Result<(BivariatePolynomial, u32)> {
    if r.is_empty() || r.is_monomial() {
        return Err(degenerate("reduced part of a monomial"));
    }
    let r = r.normalized();
    let k = crate::lattice::content(&bivariate_newton(&r)?)?;
    for delta in (1..=k).rev().filter(|d| k % d == 0) {
        if let Some(e) = perfect_root(&r, delta as u32) {
            let e = e.normalized();
            if e.pow(delta as u32).normalized() != r {
                return Err(Error::VerificationMismatch(format!("({e})^{delta} does not reproduce {r}")));
            }
            return Ok((e, delta as u32));
        }
    }
    unreachable!("every polynomial is its own first power")
}

/// `deg ρ`: the multiplicity of the pushforward equation.
pub fn map_degree(rho: &Parametrization) -> Result<u32> {
    Ok(reduced_part(&implicit_equation(rho)?)?.1)
}

/// `deg ρ` counted directly as the size of a generic fibre: the degree of
/// `gcd(f_num(s)·f_den(t₀) − f_num(t₀)·f_den(s), same for g)`, minimized
/// over several sample points `t₀`.
pub fn fiber_degree(rho: &Parametrization) -> Result<u32> {
    let fibre = |num: &UniPoly, den: &UniPoly, t0: &Rat| -> Option<UniPoly> {
        let d0 = den.eval(t0);
        if d0.is_zero() {
            return None;
        }
        Some(&num.scale(&d0) - &den.scale(&num.eval(t0)))
    };
    let samples = [(2, 7), (-3, 5), (5, 3), (11, 13), (-17, 4), (23, 9)];
    let mut best: Option<usize> = None;
    for (n, d) in samples {
        let t0 = Rat::new(n.into(), d.into());
        let (Some(a), Some(b)) = (fibre(rho.f().num(), rho.f().den(), &t0), fibre(rho.g().num(), rho.g().den(), &t0))
        else {
            continue;
        };
        let deg = poly_gcd(&a, &b)?.deg();
        best = Some(best.map_or(deg, |b| b.min(deg)));
    }
    let deg = best.ok_or_else(|| degenerate("every sample point is a pole"))?;
    Ok(deg as u32)
}

/// Newton polygon: convex hull of the exponent support, normalized.
pub fn bivariate_newton(f: &BivariatePolynomial) -> Result<LatticePolygon> {
    if f.is_empty() {
        return Err(degenerate("Newton polygon of zero"));
    }
    LatticePolygon::from_points(&f.support())
}
