//! Maximal rigid interval-decomposable representations of the continuous
//! type-A quiver on `[0,1]`: compatibility of intervals, interval modules
//! over linear quivers, type-α representations and their finite images, and
//! exact counts.

pub mod cli;
pub mod correspondence;
pub mod counting;
pub mod finite;
pub mod interval;
pub mod type_alpha;
