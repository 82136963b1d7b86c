//! The polynomial spaces `V(m, l, k)` and `U(m, l, k)`: parameters,
//! exponents, first-order operators, construction, divided Wronskians,
//! duality and closed-form differential equations for small rank.

mod construct;
mod duality;
mod exponents;
mod ode;
mod operators;
mod params;

pub use construct::{
    base_space_v0, build_u, build_u_from_v, build_v, build_v_with_chain, divided_wronskian,
    divided_wronskian_of, omit_one_wronskians, orders_at, wronskian_law, Kind, PolySpace,
};
pub use duality::{pairing, u_inclusion_project, Pairing};
pub use exponents::{e_u, e_v, exponents, ExponentData};
pub use ode::{ode_operator, OdeOperator};
pub use operators::{
    apply_d_chain, apply_d_chain_gf, op_d, op_dvee, weight_forms, weight_polys, DiffOp,
    FirstOrderOp,
};
pub use params::{ascending_chain, Params};
