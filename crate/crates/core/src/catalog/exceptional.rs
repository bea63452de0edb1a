//! Simply connected exceptional data in coroot coordinates, Bourbaki
//! numbering.

use num_bigint::BigInt;

use crate::error::Result;
use crate::intlin::{IntMatrix, RatVector};
use crate::rootdata::RootDatum;

/// Cartan matrix `C[i][j] = ⟨αⱼ, αᵢ^∨⟩` of a simply laced `E_n` diagram.
fn cartan_e(n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut edges = vec![(0, 2), (1, 3)];
    edges.extend((2..n - 1).map(|i| (i, i + 1)));
    for (a, b) in edges {
        c[a][b] = -1;
        c[b][a] = -1;
    }
    c
}

pub(crate) fn cartan(group: &str) -> Vec<Vec<i64>> {
    match group {
        "e6" => cartan_e(6),
        "e7" => cartan_e(7),
        "e8" => cartan_e(8),
        "f4" => vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, 0],
            vec![0, -2, 2, -1],
            vec![0, 0, -1, 2],
        ],
        "g2" => vec![vec![2, -3], vec![-1, 2]],
        _ => unreachable!("exceptional group names are validated by the parser"),
    }
}

/// The simply connected datum: coroots are the standard basis, roots the
/// columns of the Cartan matrix.
pub(crate) fn simply_connected(group: &str) -> Result<RootDatum> {
    let c = cartan(group);
    let n = c.len();
    let roots: Vec<Vec<i64>> = (0..n).map(|j| (0..n).map(|i| c[i][j]).collect()).collect();
    let coroots: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|k| i64::from(k == i)).collect())
        .collect();
    RootDatum::new(n, &roots, &coroots)
}

/// `½ω_k^∨` for the Bourbaki node `k` (1-based), `ω_k^∨ = C⁻ᵀe_k`.
pub(crate) fn half_coweight(group: &str, k: usize) -> RatVector {
    let c = IntMatrix::from_rows(&cartan(group)).transpose();
    let n = c.nrows();
    let e: Vec<_> = (0..n)
        .map(|i| BigInt::from(u8::from(i + 1 == k)).into())
        .collect();
    RatVector::from_rationals(&c.solve_rational(&e).expect("Cartan matrix is invertible")).half()
}

/// The diagram automorphism of `E₆` (`1↔6`, `3↔5`).
pub(crate) const E6_FLIP: [usize; 6] = [5, 1, 4, 3, 2, 0];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        for (g, count) in [("e6", 72), ("e7", 126), ("e8", 240), ("f4", 48), ("g2", 12)] {
            let d = simply_connected(g).unwrap();
            assert_eq!(d.root_system().len(), count, "{g}");
            assert_eq!(d.type_label(), g.to_uppercase());
        }
    }

    #[test]
    fn coweights() {
        // ω₁^∨ of G₂ is 2α₁^∨ + 3α₂^∨.
        assert_eq!(half_coweight("g2", 1), RatVector::from_i64(&[2, 3], 2));
    }
}
