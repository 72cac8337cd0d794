//! Exact arithmetic in ℚ(p, q) and the quantum integers built on it.

mod gcd;
pub mod poly;
mod qint;
mod ratfunc;

pub use gcd::gcd;
pub use poly::{Exp, Poly};
pub use qint::{pq_int, pq_int_normalized, q_int};
pub use ratfunc::RatFunc;

/// The four field operations, as a value for table-driven callers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn arith(x: &RatFunc, y: &RatFunc, op: ArithOp) -> Result<RatFunc, crate::Error> {
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Div => x.checked_div(y)?,
    })
}
