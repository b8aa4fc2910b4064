//! Exhaustive enumeration over small finite-field spaces.
//!
//! Everything here is deliberately brute force: these routines certify
//! minimality and irreducibility claims at desk scale and act as oracles
//! for the structural algorithms.

use crate::matrix::MatrixExact;
use crate::scalar::{FieldTag, Scalar};
use crate::subspace::SubspaceBasis;

/// All vectors of GF(p)^dim in lexicographic order (first coordinate most
/// significant), the zero vector first.
pub fn all_vectors(p: u64, dim: usize) -> Vec<Vec<Scalar>> {
    let field = FieldTag::GF(p);
    let total = (p as u128).checked_pow(dim as u32).expect("vector count overflow");
    assert!(total <= 1 << 24, "enumeration space too large");
    let mut out = Vec::with_capacity(total as usize);
    let mut digits = vec![0u64; dim];
    loop {
        out.push(
            digits
                .iter()
                .map(|&d| Scalar::from_integer(field, d as i64))
                .collect(),
        );
        let mut i = dim;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// All nonzero vectors of GF(p)^dim in lexicographic order.
pub fn nonzero_vectors(p: u64, dim: usize) -> Vec<Vec<Scalar>> {
    let mut v = all_vectors(p, dim);
    v.remove(0);
    v
}

/// Every subspace of GF(p)^ambient, enumerated as reduced row-echelon
/// bases grouped by pivot set. Each subspace appears exactly once.
pub fn all_subspaces(p: u64, ambient: usize) -> Vec<SubspaceBasis> {
    let field = FieldTag::GF(p);
    let mut out = vec![SubspaceBasis::zero(field, ambient)];
    for k in 1..=ambient {
        for pivots in combinations(ambient, k) {
            // free entries sit right of their pivot, off the pivot columns
            let mut free_slots = Vec::new();
            for (r, &pc) in pivots.iter().enumerate() {
                for c in (pc + 1)..ambient {
                    if !pivots.contains(&c) {
                        free_slots.push((r, c));
                    }
                }
            }
            let fills = all_vectors(p, free_slots.len());
            for fill in fills {
                let mut m = MatrixExact::zero(field, k, ambient);
                for (r, &pc) in pivots.iter().enumerate() {
                    m.set(r, pc, Scalar::one(field));
                }
                for (&(r, c), value) in free_slots.iter().zip(fill) {
                    m.set(r, c, value);
                }
                out.push(
                    SubspaceBasis::span(field, ambient, &(0..k).map(|r| m.row(r)).collect::<Vec<_>>())
                        .expect("enumerated rows are consistent"),
                );
            }
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vector_counts() {
        assert_eq!(all_vectors(2, 3).len(), 8);
        assert_eq!(nonzero_vectors(3, 2).len(), 8);
    }

    #[test]
    fn first_nonzero_vector_is_the_last_unit_vector() {
        let v = nonzero_vectors(2, 3);
        assert!(v[0][0].is_zero() && v[0][1].is_zero() && v[0][2].is_one());
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        // GF(2)^3: 1 + 7 + 7 + 1
        assert_eq!(all_subspaces(2, 3).len(), 16);
        // GF(3)^2: 1 + 4 + 1
        assert_eq!(all_subspaces(3, 2).len(), 6);
    }

    #[test]
    fn enumerated_subspaces_are_distinct() {
        let spaces = all_subspaces(2, 3);
        for (a, x) in spaces.iter().enumerate() {
            for y in spaces.iter().skip(a + 1) {
                assert_ne!(x, y);
            }
        }
    }
}
