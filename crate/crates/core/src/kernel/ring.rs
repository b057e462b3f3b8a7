use std::fmt::Debug;

/// Commutative ring with identity, as needed by the generic polynomial type.
///
/// Method names avoid `add`/`mul` so they never shadow `std::ops` in scope.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}
