//! Rational functions in one variable and the gcd-only coprime partial
//! factorization that yields the order vectors of a parametrization.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{degenerate, Error, Result};
use crate::exact_poly::{poly_gcd, squarefree_part, Rat, UniPoly};
use crate::lattice::{BalancedFamily, LatticeVector};

/// `num / den` with `gcd(num, den) = 1`, `den` monic and `num ≠ 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn constant(c: Rat) -> Result<Self> {
        make_rational(UniPoly::constant(c), UniPoly::one())
    }

    pub fn from_poly(p: UniPoly) -> Result<Self> {
        make_rational(p, UniPoly::one())
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// `deg(num) − deg(den)`.
    pub fn degree(&self) -> i64 {
        self.num.deg() as i64 - self.den.deg() as i64
    }

    /// `max(deg(num), deg(den))`.
    pub fn height(&self) -> usize {
        self.num.deg().max(self.den.deg())
    }

    /// Value at `t0`, or `None` at a pole.
    pub fn eval(&self, t0: &Rat) -> Option<Rat> {
        let d = self.den.eval(t0);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(t0) / d)
        }
    }

    /// Field operations. Each one renormalizes; a zero result is degenerate.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        make_rational(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        make_rational(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        make_rational(&(&self.num * &other.den) + &(&other.num * &self.den), &self.den * &other.den)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        make_rational(&(&self.num * &other.den) - &(&other.num * &self.den), &self.den * &other.den)
    }

    pub fn neg(&self) -> Self {
        Self { num: -&self.num, den: self.den.clone() }
    }

    pub fn powi(&self, k: i64) -> Self {
        let (num, den) = if k >= 0 { (&self.num, &self.den) } else { (&self.den, &self.num) };
        let e = k.unsigned_abs() as u32;
        make_rational(num.pow(e), den.pow(e)).expect("powers of coprime nonzero polynomials")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

/// Cancels the common factor and makes the denominator monic.
pub fn make_rational(num: UniPoly, den: UniPoly) -> Result<RationalFunction> {
    if num.is_zero() {
        return Err(degenerate("rational function with zero numerator"));
    }
    if den.is_zero() {
        return Err(degenerate("division by the zero function"));
    }
    let g = poly_gcd(&num, &den)?;
    let num = num.div_exact(&g)?;
    let den = den.div_exact(&g)?;
    let lc_inv = den.leading().recip();
    Ok(RationalFunction { num: num.scale(&lc_inv), den: den.scale(&lc_inv) })
}

/// `(deg f, η(f))`.
pub fn degree_and_height(f: &RationalFunction) -> (i64, usize) {
    (f.degree(), f.height())
}

/// A rational map `t ↦ (f(t), g(t))` with at least one nonconstant
/// coordinate.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Parametrization {
    f: RationalFunction,
    g: RationalFunction,
}

impl Parametrization {
    pub fn new(f: RationalFunction, g: RationalFunction) -> Result<Self> {
        if f.is_constant() && g.is_constant() {
            return Err(degenerate("both coordinates are constant"));
        }
        Ok(Self { f, g })
    }

    pub fn f(&self) -> &RationalFunction {
        &self.f
    }

    pub fn g(&self) -> &RationalFunction {
        &self.g
    }

    /// The point `(f(t0), g(t0))`, or `None` at a pole.
    pub fn eval(&self, t0: &Rat) -> Option<(Rat, Rat)> {
        Some((self.f.eval(t0)?, self.g.eval(t0)?))
    }

    /// Both coordinates are polynomials.
    pub fn is_polynomial(&self) -> bool {
        self.f.den.is_one() && self.g.den.is_one()
    }

    /// Both coordinates are Laurent polynomials: denominators are powers of `t`.
    pub fn is_laurent(&self) -> bool {
        let monomial = |p: &UniPoly| p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
        monomial(&self.f.den) && monomial(&self.g.den)
    }
}

impl fmt::Display for Parametrization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.f, self.g)
    }
}

/// A factor `p` of the parametrization with `f ~ p^d`, `g ~ p^e`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Place {
    pub poly: UniPoly,
    pub d: i64,
    pub e: i64,
}

impl Place {
    /// `deg(p)·(d, e)`: the summed order vectors of the roots of `p`.
    pub fn weighted_order(&self) -> LatticeVector {
        (self.poly.deg() as i64) * LatticeVector::new(self.d, self.e)
    }
}

/// `f = α·Π p^d`, `g = β·Π p^e` over pairwise coprime monic `p`, together
/// with the order vector at infinity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlaceSystem {
    pub alpha: Rat,
    pub beta: Rat,
    pub places: Vec<Place>,
    pub infinity: LatticeVector,
}

impl PlaceSystem {
    /// Rebuilds `(f, g)` from the factors.
    pub fn reconstruct(&self) -> Result<(RationalFunction, RationalFunction)> {
        let build = |scalar: &Rat, exp: &dyn Fn(&Place) -> i64| -> Result<RationalFunction> {
            let mut num = UniPoly::constant(scalar.clone());
            let mut den = UniPoly::one();
            for pl in &self.places {
                let k = exp(pl);
                if k > 0 {
                    num = &num * &pl.poly.pow(k as u32);
                } else if k < 0 {
                    den = &den * &pl.poly.pow((-k) as u32);
                }
            }
            make_rational(num, den)
        };
        Ok((build(&self.alpha, &|p| p.d)?, build(&self.beta, &|p| p.e)?))
    }

    /// Checks every structural invariant; used by tests and by callers that
    /// build systems by hand.
    pub fn validate(&self) -> Result<()> {
        if self.alpha.is_zero() || self.beta.is_zero() {
            return Err(degenerate("zero leading scalar"));
        }
        let mut total = self.infinity;
        for (i, pl) in self.places.iter().enumerate() {
            if pl.poly.is_constant() || !pl.poly.leading().is_one() {
                return Err(degenerate(format!("place {} is not monic of positive degree", pl.poly)));
            }
            if pl.d == 0 && pl.e == 0 {
                return Err(degenerate(format!("place {} carries the zero vector", pl.poly)));
            }
            for other in &self.places[i + 1..] {
                if !poly_gcd(&pl.poly, &other.poly)?.is_one() {
                    return Err(degenerate(format!("places {} and {} are not coprime", pl.poly, other.poly)));
                }
            }
            total = total + pl.weighted_order();
        }
        if !total.is_zero() {
            return Err(Error::UnbalancedFamily(total.m, total.n));
        }
        Ok(())
    }
}

fn monic_parts(p: &UniPoly) -> (Rat, UniPoly) {
    let lc = p.leading();
    (lc.clone(), p.scale(&lc.recip()))
}

/// Splits `f` and `g` over pairwise coprime factors using gcds only.
///
/// Starting from the four numerator/denominator entries, any two entries
/// sharing a nonconstant gcd are divided by it and the gcd is appended with
/// the sum of their exponent pairs. Total degree drops at every step.
pub fn coprime_factorization(rho: &Parametrization) -> PlaceSystem {
    let (alpha, f_num) = monic_parts(rho.f.num());
    let (beta, g_num) = monic_parts(rho.g.num());
    let mut work: Vec<(UniPoly, i64, i64)> =
        vec![(f_num, 1, 0), (rho.f.den().clone(), -1, 0), (g_num, 0, 1), (rho.g.den().clone(), 0, -1)];
    work.retain(|(p, _, _)| !p.is_constant());

    'refine: loop {
        for i in 0..work.len() {
            for j in i + 1..work.len() {
                let g = poly_gcd(&work[i].0, &work[j].0).expect("entries are nonzero");
                if g.is_constant() {
                    continue;
                }
                let (d, e) = (work[i].1 + work[j].1, work[i].2 + work[j].2);
                work[i].0 = work[i].0.div_exact(&g).expect("gcd divides");
                work[j].0 = work[j].0.div_exact(&g).expect("gcd divides");
                work.push((g, d, e));
                work.retain(|(p, d, e)| !p.is_constant() && (*d, *e) != (0, 0));
                continue 'refine;
            }
        }
        break;
    }

    let mut places: Vec<Place> = work.into_iter().map(|(poly, d, e)| perfect_power_place(poly, d, e)).collect();
    places.sort_by(|a, b| (a.poly.deg(), a.poly.coeffs()).cmp(&(b.poly.deg(), b.poly.coeffs())));
    let infinity = LatticeVector::new(-rho.f.degree(), -rho.g.degree());
    let ps = PlaceSystem { alpha, beta, places, infinity };
    debug_assert!(ps.validate().is_ok());
    ps
}

/// Rewrites `s^k` with exponents `(d, e)` as `s` with `(k·d, k·e)`.
fn perfect_power_place(poly: UniPoly, d: i64, e: i64) -> Place {
    let s = squarefree_part(&poly).expect("nonzero place");
    let k = poly.deg() / s.deg();
    if k > 1 && s.pow(k as u32) == poly {
        Place { poly: s, d: d * k as i64, e: e * k as i64 }
    } else {
        Place { poly, d, e }
    }
}

/// One vector `deg(p)·(d, e)` per place plus the nonzero infinity vector.
pub fn order_family(ps: &PlaceSystem) -> BalancedFamily {
    let vectors = ps.places.iter().map(Place::weighted_order).chain(std::iter::once(ps.infinity));
    BalancedFamily::from_vectors(vectors).expect("orders of a rational map balance")
}
