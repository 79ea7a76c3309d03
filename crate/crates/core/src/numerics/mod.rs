//! Root finding, endpoint-singular quadrature and fixed-step ODE integration.

pub mod ode;
pub mod quadrature;
pub mod roots;
pub mod special;

pub use ode::{integrate_ode, rk4_step, OdeState};
pub use quadrature::{integrate_reduced, integrate_singular, GaussLegendre, SingularIntegral};
pub use roots::{bracketed_root, BracketedProblem};
