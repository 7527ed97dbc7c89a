use std::fmt::Debug;
use std::hash::Hash;

/// Exact field operations used by the linear algebra kernels.
///
/// Values carry enough information to build the additive and multiplicative
/// identities of their own field, so kernels never need a separate context.
pub trait Field: Clone + Eq + Hash + Debug + Send + Sync + 'static {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero; callers test `is_zero` first.
    fn inv(&self) -> Self;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    /// `self - a * b`, the elimination update.
    fn sub_mul(&self, a: &Self, b: &Self) -> Self {
        self.sub(&a.mul(b))
    }
}
