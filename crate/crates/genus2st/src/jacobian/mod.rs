//! Jacobian group arithmetic and accelerated `c2` computation: Mumford
//! representation with Cantor composition, scalar multiplication,
//! baby-step/giant-step order search in the Weil window, the Hasse-Witt
//! congruence, and the twist-pair order formulas.

pub mod backend;
pub mod cantor;
pub mod cartier;
pub mod field;
pub mod order;
pub mod pattern;

pub use backend::{jacobian_order_from_c1, trace_datum, Backend, JacConfig};
pub use cantor::{Jacobian, MumfordDivisor};
pub use order::{
    jac_order_ext, twist_pair_c1c2, twist_pair_coeffs, OrderWindow,
};
