//! Closed-form table values, computed without the cohomology engine.

use crate::error::{Error, Result};

/// `δ(p, q)` for `p, q mod 4`.
pub const SPIN_DELTA: [[u64; 4]; 4] = [[3, 2, 2, 2], [2, 1, 1, 0], [2, 1, 0, 0], [2, 0, 0, 0]];

/// Family keys accepted by [`expected_h1_formula`] and [`expected_pi0_formula`].
pub const FAMILIES: [&str; 16] = [
    "sl_R", "sl_H", "su", "sp_R", "sp", "so", "so*", "spin", "spin*", "psl_R", "psl_H", "psu",
    "pso", "pso*", "psp_R", "psp",
];

fn arity(family: &str, params: &[u64]) -> Result<()> {
    let want = match family {
        "su" | "sp" | "so" | "spin" | "psu" | "pso" | "psp" => 2,
        _ => 1,
    };
    if params.len() != want {
        return Err(Error::InvalidSignature(format!(
            "{family} takes {want} parameters, got {}",
            params.len()
        )));
    }
    Ok(())
}

/// `|H¹(σ, G)|` from the tables, for `params` `[n]` or `[p, q]`
/// (`n` is the matrix size parameter: `sp_R` and `so*` take `n` for `2n`).
pub fn expected_h1_formula(family: &str, params: &[u64]) -> Result<u64> {
    if !FAMILIES.contains(&family) {
        return Err(Error::UnknownFamily(family.to_string()));
    }
    arity(family, params)?;
    let a = params[0];
    let b = params.get(1).copied().unwrap_or(0);
    Ok(match family {
        "sl_R" | "sp_R" => 1,
        "sl_H" | "so*" | "spin*" => 2,
        "su" | "so" => a / 2 + b / 2 + 1,
        "sp" => a + b + 1,
        "spin" => (a + b) / 4 + SPIN_DELTA[(a % 4) as usize][(b % 4) as usize],
        "psl_R" => {
            if a.is_multiple_of(2) {
                2
            } else {
                1
            }
        }
        "psl_H" => 2,
        "psu" => (a + b) / 2 + 1,
        "pso" => pso_h1(a, b)?,
        "pso*" => {
            if a.is_multiple_of(2) {
                a / 2 + 3
            } else {
                (a - 1) / 2 + 2
            }
        }
        "psp_R" => a / 2 + 2,
        "psp" => (a + b) / 2 + 2,
        _ => unreachable!("family list checked above"),
    })
}

fn pso_h1(p: u64, q: u64) -> Result<u64> {
    if p + q < 3 {
        return Err(Error::InvalidSignature(format!(
            "PSO({p},{q}) needs p+q >= 3"
        )));
    }
    let n = p + q;
    Ok(match (p % 2, q % 2) {
        (1, 1) => (n + 2) / 4,
        (0, 0) if n.is_multiple_of(4) => n / 4 + 3,
        (0, 0) => (n - 2) / 4 + 2,
        _ => n.div_ceil(2),
    })
}

/// `|π₀(G(ℝ))|` from the adjoint tables.
pub fn expected_pi0_formula(family: &str, params: &[u64]) -> Result<u64> {
    if !FAMILIES.contains(&family) {
        return Err(Error::UnknownFamily(family.to_string()));
    }
    arity(family, params)?;
    let a = params[0];
    let b = params.get(1).copied().unwrap_or(0);
    Ok(match family {
        "psl_R" | "pso*" => {
            if a.is_multiple_of(2) {
                2
            } else {
                1
            }
        }
        "psl_H" => 1,
        "psu" | "psp" => {
            if a == b {
                2
            } else {
                1
            }
        }
        "pso" => {
            if a * b == 0 || (a % 2 == 1 && b % 2 == 1 && a != b) {
                1
            } else if a == b && a.is_multiple_of(2) {
                4
            } else {
                2
            }
        }
        "psp_R" => 2,
        _ => {
            return Err(Error::UnknownFamily(format!(
                "{family} has no tabulated component group"
            )))
        }
    })
}

/// Counts signatures `(r, s)` with `r + s = p + q` sharing the discriminant
/// sign and real Hasse invariant of `(p, q)`; definite signatures count twice.
pub fn spin_quadratic_oracle(p: u64, q: u64) -> u64 {
    let n = p + q;
    let disc = |s: u64| s % 2;
    let hasse = |s: u64| (s * s.saturating_sub(1) / 2) % 2;
    (0..=n)
        .filter(|&s| disc(s) == disc(q) && hasse(s) == hasse(q))
        .map(|s| if s == 0 || s == n { 2 } else { 1 })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin_values() {
        assert_eq!(expected_h1_formula("spin", &[5, 3]).unwrap(), 2);
        assert_eq!(expected_h1_formula("spin", &[3, 3]).unwrap(), 1);
        assert_eq!(spin_quadratic_oracle(2, 0), 2);
        assert_eq!(spin_quadratic_oracle(1, 1), 1);
        assert_eq!(spin_quadratic_oracle(4, 4), 5);
        for (i, row) in SPIN_DELTA.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(*x, SPIN_DELTA[j][i]);
            }
        }
    }

    #[test]
    fn classical_values() {
        assert_eq!(expected_h1_formula("su", &[2, 1]).unwrap(), 2);
        assert_eq!(expected_h1_formula("psp_R", &[3]).unwrap(), 3);
        assert_eq!(expected_h1_formula("pso", &[3, 1]).unwrap(), 1);
        assert_eq!(expected_pi0_formula("pso", &[2, 2]).unwrap(), 4);
        assert!(matches!(
            expected_h1_formula("xx", &[1]),
            Err(Error::UnknownFamily(_))
        ));
        assert!(matches!(
            expected_h1_formula("su", &[1]),
            Err(Error::InvalidSignature(_))
        ));
    }
}
