//! Scalar traits shared by the generic matrix and polynomial code.

use std::fmt::Debug;

use num_integer::Integer;
use num_traits::{Num, Signed};

/// Anything the dense matrix and polynomial routines can compute with:
/// integers, exact rationals, floats and complex numbers all qualify.
pub trait Scalar: Clone + Num + Debug {}

impl<T: Clone + Num + Debug> Scalar for T {}

/// A Euclidean scalar with signs, used for the Smith and Hermite forms.
pub trait IntScalar: Scalar + Integer + Signed {}

impl<T: Scalar + Integer + Signed> IntScalar for T {}
