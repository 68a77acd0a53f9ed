//! Independent structure-constant oracles for abelian groups.
//!
//! These compute tensor and exterior square orders straight from invariant
//! factors, never touching a realized nu(G) or chi(G). The harness compares
//! them against the enumerated subgroup orders, which keeps the two routes
//! independent.

/// Order of `A (x)_Z A` for an abelian group with the given invariant
/// factors (any order, prime powers or not): the tensor of two cyclic
/// groups of orders m and n is cyclic of order gcd(m, n).
pub fn tensor_square_order(invariants: &[u64]) -> u64 {
    let mut total = 1u64;
    for &a in invariants {
        for &b in invariants {
            total *= crate::subgroup::gcd(a, b);
        }
    }
    total
}

/// Order of the exterior square of an abelian group with the given
/// invariant factors; this is the Schur multiplier of the group.
pub fn exterior_square_order(invariants: &[u64]) -> u64 {
    let mut total = 1u64;
    for (i, &a) in invariants.iter().enumerate() {
        for &b in &invariants[i + 1..] {
            total *= crate::subgroup::gcd(a, b);
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_of_elementary_abelian_rank_three() {
        assert_eq!(tensor_square_order(&[2, 2, 2]), 512);
    }

    #[test]
    fn tensor_of_cyclic_is_itself() {
        assert_eq!(tensor_square_order(&[16]), 16);
        assert_eq!(tensor_square_order(&[27]), 27);
    }

    #[test]
    fn tensor_of_mixed_invariants() {
        // (4,2): gcd matrix 4,2 / 2,2 -> product 32.
        assert_eq!(tensor_square_order(&[4, 2]), 32);
        assert_eq!(tensor_square_order(&[9, 3]), 243);
        assert_eq!(tensor_square_order(&[4, 2, 2]), 1024);
    }

    #[test]
    fn exterior_squares() {
        assert_eq!(exterior_square_order(&[2, 2, 2]), 8);
        assert_eq!(exterior_square_order(&[3, 3]), 3);
        assert_eq!(exterior_square_order(&[16]), 1);
        assert_eq!(exterior_square_order(&[9, 3]), 3);
    }
}
