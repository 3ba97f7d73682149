//! Exact measures for definable sets over the field of Puiseux series.
//!
//! Real-valued measures cannot tell an infinitesimally thin box from the
//! empty set. This crate measures monomial-cell sets inside the unit
//! cube of the Puiseux field exactly, with values in an ordered semiring
//! that keeps the infinitesimal information: a set is `Zero`,
//! infinitesimal of a definite rational level, or of a definite standard
//! size. A coarser tropical variant measures arbitrarily positioned
//! bounded sets by level alone.
//!
//! The pieces:
//!
//! * [`puiseux`]: exact scalar arithmetic, order, valuation, standard part.
//! * [`semiring`]: the value semirings and the class map.
//! * [`sets`]: boxes, monomial cells, unions, standard parts.
//! * [`measure`]: the measure engine with certified level bracketing and
//!   an exact Lebesgue path for standard-size sets.
//! * [`transforms`]: unit-Jacobian maps and the invariance harness.
//! * [`dsl`]: a small text format for scalars, sets and maps, plus the
//!   `pxm` command-line interface.

pub mod interval;
pub mod puiseux;
pub mod rat;
pub mod semiring;
pub mod sets;
