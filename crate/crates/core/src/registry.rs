//! Named algorithm variants, selectable at runtime.

use crate::error::Result;
use crate::implicitize::{bivariate_newton, implicit_equation, implicit_equation_symbolic};
use crate::lattice::LatticePolygon;
use crate::newton_pipeline::newton_pushforward;
use crate::ratfunc::Parametrization;
use crate::synth::{GenericRoots, LaurentRoots, PolynomialRoots, RootStrategy};

/// A way of computing the pushforward polygon `deg(ρ)·N(curve)`.
pub trait PolygonMethod: Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn pushforward(&self, rho: &Parametrization) -> Result<LatticePolygon>;
}

/// From the zero/pole multiplicities of a coprime factorization.
pub struct OrdersMethod;

impl PolygonMethod for OrdersMethod {
    fn name(&self) -> &'static str {
        "orders"
    }

    fn description(&self) -> &'static str {
        "polygon of the order vectors of a coprime factorization"
    }

    fn pushforward(&self, rho: &Parametrization) -> Result<LatticePolygon> {
        newton_pushforward(rho)
    }
}

/// Newton polygon of the resultant, evaluated and interpolated.
pub struct ResultantMethod;

impl PolygonMethod for ResultantMethod {
    fn name(&self) -> &'static str {
        "resultant"
    }

    fn description(&self) -> &'static str {
        "Newton polygon of the Sylvester resultant, by evaluation and interpolation"
    }

    fn pushforward(&self, rho: &Parametrization) -> Result<LatticePolygon> {
        bivariate_newton(&implicit_equation(rho)?)
    }
}

/// Newton polygon of the resultant, by symbolic elimination.
pub struct SymbolicResultantMethod;

impl PolygonMethod for SymbolicResultantMethod {
    fn name(&self) -> &'static str {
        "symbolic"
    }

    fn description(&self) -> &'static str {
        "Newton polygon of the Sylvester resultant, by fraction-free elimination over Q[x, y]"
    }

    fn pushforward(&self, rho: &Parametrization) -> Result<LatticePolygon> {
        bivariate_newton(&implicit_equation_symbolic(rho)?)
    }
}

static POLYGON_METHODS: [&dyn PolygonMethod; 3] = [&OrdersMethod, &ResultantMethod, &SymbolicResultantMethod];

static ROOT_STRATEGIES: [&dyn RootStrategy; 3] = [&GenericRoots, &PolynomialRoots, &LaurentRoots];

pub fn polygon_methods() -> &'static [&'static dyn PolygonMethod] {
    &POLYGON_METHODS
}

pub fn polygon_method(name: &str) -> Option<&'static dyn PolygonMethod> {
    POLYGON_METHODS.iter().copied().find(|m| m.name() == name)
}

pub fn root_strategies() -> &'static [&'static dyn RootStrategy] {
    &ROOT_STRATEGIES
}

pub fn root_strategy(name: &str) -> Option<&'static dyn RootStrategy> {
    ROOT_STRATEGIES.iter().copied().find(|s| s.name() == name)
}
