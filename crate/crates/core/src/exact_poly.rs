//! Exact rational scalars, dense univariate polynomials over them, and
//! Sylvester resultants over any exact commutative coefficient ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{degenerate, Error, Result};

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator.
pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// A commutative integral domain with exact arithmetic. Division is only
/// ever asked for when the quotient is known to exist (Bareiss elimination).
pub trait Ring: Sized + Clone + PartialEq + fmt::Debug + Zero + One + Sub<Output = Self> + Neg<Output = Self> {
    /// Exact quotient, or `None` when `divisor` does not divide `self`.
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
}

impl Ring for Rat {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            None
        } else {
            Some(self / divisor)
        }
    }
}

/// Dense univariate polynomial in `t` with rational coefficients, ascending
/// degree. The zero polynomial has no coefficients and degree `None`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c·t^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `t`.
    pub fn t() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    /// `t − a`.
    pub fn linear_root(a: &Rat) -> Self {
        Self::new(vec![-a.clone(), Rat::one()])
    }

    /// Monic polynomial with the given roots, counted with repetition.
    pub fn from_roots(roots: &[Rat]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| &acc * &Self::linear_root(r))
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Degree, with `None` standing for the zero polynomial's −∞.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, with the zero polynomial mapped to 0. Only for callers that
    /// have already excluded zero.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero constant or zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Scaled to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lc = self.leading();
        self.scale(&lc.recip())
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * int(k as i64)).collect())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let Some(dd) = divisor.degree() else {
            return Err(degenerate("division by the zero polynomial"));
        };
        let lc_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rat::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * b;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient `q` with `q·divisor = self`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible(format!("{divisor} does not divide {self}")))
        }
    }

    /// Writes the polynomial in the CLI expression grammar using `var` as the
    /// indeterminate.
    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push(if negative { '-' } else { '+' });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
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
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("t"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

/// Monic greatest common divisor by the Euclidean remainder sequence.
pub fn poly_gcd(a: &UniPoly, b: &UniPoly) -> Result<UniPoly> {
    if a.is_zero() && b.is_zero() {
        return Err(degenerate("gcd of two zero polynomials"));
    }
    let (mut x, mut y) = (a.monic(), b.monic());
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y)?;
        x = y;
        y = r.monic();
    }
    Ok(x.monic())
}

pub fn div_exact(a: &UniPoly, b: &UniPoly) -> Result<UniPoly> {
    a.div_exact(b)
}

/// Monic `a / gcd(a, a')`: same roots as `a`, each simple.
pub fn squarefree_part(a: &UniPoly) -> Result<UniPoly> {
    if a.is_zero() {
        return Err(degenerate("squarefree part of the zero polynomial"));
    }
    if a.is_constant() {
        return Ok(UniPoly::one());
    }
    let g = poly_gcd(a, &a.derivative())?;
    Ok(a.div_exact(&g)?.monic())
}

/// The polynomial of degree below `xs.len()` through the points
/// `(xs[i], ys[i])`, by Newton divided differences.
pub fn interpolate(xs: &[Rat], ys: &[Rat]) -> Result<UniPoly> {
    if xs.len() != ys.len() {
        return Err(degenerate("interpolation needs as many values as nodes"));
    }
    let mut dd = ys.to_vec();
    for k in 1..xs.len() {
        for i in (k..xs.len()).rev() {
            let step = &xs[i] - &xs[i - k];
            if step.is_zero() {
                return Err(degenerate("interpolation nodes must be distinct"));
            }
            dd[i] = (&dd[i] - &dd[i - 1]) / step;
        }
    }
    let mut out = UniPoly::zero();
    for k in (0..xs.len()).rev() {
        out = &(&out * &UniPoly::linear_root(&xs[k])) + &UniPoly::constant(dd[k].clone());
    }
    Ok(out)
}

/// Determinant by fraction-free (Bareiss) elimination. Every division is
/// exact in an integral domain.
pub fn det_bareiss<R: Ring>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut sign_flip = false;
    let mut prev = R::one();
    #[allow(clippy::needless_range_loop)]
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return R::zero();
            };
            m.swap(k, swap);
            sign_flip = !sign_flip;
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            let lead = m[i][k].clone();
            for j in k + 1..n {
                let num = pivot.clone() * m[i][j].clone() - lead.clone() * m[k][j].clone();
                m[i][j] = num.div_exact(&prev).expect("Bareiss step must divide exactly in an integral domain");
            }
            m[i][k] = R::zero();
        }
        prev = pivot;
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

fn true_degree<R: Ring>(coeffs: &[R]) -> Option<usize> {
    coeffs.iter().rposition(|c| !c.is_zero())
}

/// The `(m+n)×(m+n)` Sylvester matrix of `p` (formal degree `m`) and `q`
/// (formal degree `n`), coefficients given in ascending order. Row `i < n`
/// holds `p`'s coefficients from the leading one, shifted right by `i`; the
/// remaining `m` rows do the same for `q`.
pub fn sylvester_matrix<R: Ring>(p: &[R], q: &[R], m: usize, n: usize) -> Result<Vec<Vec<R>>> {
    for (coeffs, formal) in [(p, m), (q, n)] {
        if let Some(actual) = true_degree(coeffs) {
            if actual > formal {
                return Err(Error::BadFormalDegree { formal, actual });
            }
        }
    }
    let size = m + n;
    let coeff = |c: &[R], k: usize| c.get(k).cloned().unwrap_or_else(R::zero);
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![R::zero(); size];
        for k in 0..=m {
            row[i + k] = coeff(p, m - k);
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![R::zero(); size];
        for k in 0..=n {
            row[i + k] = coeff(q, n - k);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// `Res_{m,n}(p, q)`: determinant of the Sylvester matrix.
pub fn sylvester_resultant<R: Ring>(p: &[R], q: &[R], m: usize, n: usize) -> Result<R> {
    Ok(det_bareiss(sylvester_matrix(p, q, m, n)?))
}
