//! Helpers shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::Rng;

use galh1::intlin::IntMatrix;

pub fn small(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.rows()
        .map(|r| r.iter().map(|x| x.to_i64().expect("small entry")).collect())
        .collect()
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// A random unimodular matrix and its inverse, as a product of elementary
/// row operations with coefficients in `[-2, 2]`.
pub fn random_unimodular(rng: &mut StdRng, n: usize, steps: usize) -> (IntMatrix, IntMatrix) {
    let mut u = IntMatrix::identity(n);
    let mut inv = IntMatrix::identity(n);
    if n < 2 {
        if rng.gen_bool(0.5) {
            u = u.neg();
            inv = inv.neg();
        }
        return (u, inv);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = [-2i64, -1, 1, 2][rng.gen_range(0..4)];
        // E = I + c·e_ij, E⁻¹ = I − c·e_ij.
        let mut e = IntMatrix::identity(n);
        e.set(i, j, BigInt::from(c));
        let mut e_inv = IntMatrix::identity(n);
        e_inv.set(i, j, BigInt::from(-c));
        u = e.mul(&u);
        inv = inv.mul(&e_inv);
    }
    (u, inv)
}

/// A random involution of `ℤⁿ`: a conjugate of a block sum of `(1)`,
/// `(−1)` and the coordinate swap.
pub fn random_involution(rng: &mut StdRng, n: usize) -> IntMatrix {
    let mut d = IntMatrix::zeros(n, n);
    let mut i = 0;
    while i < n {
        match rng.gen_range(0..3) {
            2 if i + 1 < n => {
                d.set(i, i + 1, BigInt::from(1));
                d.set(i + 1, i, BigInt::from(1));
                i += 2;
            }
            k => {
                d.set(i, i, BigInt::from(if k == 0 { 1 } else { -1 }));
                i += 1;
            }
        }
    }
    let (u, inv) = random_unimodular(rng, n, 3);
    u.mul(&d).mul(&inv)
}

/// Every root with its coroot, by closing the simple pairs under the simple
/// reflections.
pub fn root_pairs(roots: &[Vec<i64>], coroots: &[Vec<i64>]) -> Vec<(Vec<i64>, Vec<i64>)> {
    let dot = |a: &[i64], b: &[i64]| -> i64 { a.iter().zip(b).map(|(x, y)| x * y).sum() };
    let mut pairs: Vec<(Vec<i64>, Vec<i64>)> =
        roots.iter().cloned().zip(coroots.iter().cloned()).collect();
    let mut k = 0;
    while k < pairs.len() {
        for (a, c) in roots.iter().zip(coroots) {
            let (r, rc) = pairs[k].clone();
            let p = dot(&r, c);
            let q = dot(a, &rc);
            let image: Vec<i64> = r.iter().zip(a).map(|(x, y)| x - p * y).collect();
            let co: Vec<i64> = rc.iter().zip(c).map(|(x, y)| x - q * y).collect();
            if !pairs.iter().any(|(s, _)| *s == image) {
                pairs.push((image, co));
            }
        }
        k += 1;
    }
    pairs
}

/// `|H¹|` by listing `F(ζ)` and the orbits of the reflections in all
/// imaginary roots, with `i128` arithmetic and linear search.
///
/// `F(ζ)` is built from `X^τ = ½((1+τ)X ∩ 2ℤⁿ)` taken modulo `(1+τ)X`.
pub fn brute_h1(
    roots: &[Vec<i64>],
    coroots: &[Vec<i64>],
    tau: &[Vec<i64>],
    zeta: &[i64],
    zeta_den: i64,
) -> usize {
    use galh1::oracle::{brute_orbits, reflection_matrix, HalfQuotient};
    let n = tau.len();
    let den = 2 * zeta_den as i128;
    let q = HalfQuotient::one_plus(tau, den);
    let cols: Vec<Vec<i128>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| (tau[i][j] + i64::from(i == j)) as i128)
                .collect()
        })
        .collect();
    let mut points = Vec::new();
    for bits in 0..1u64 << n {
        let mut y = vec![0i128; n];
        for (j, c) in cols.iter().enumerate() {
            if bits >> j & 1 == 1 {
                for i in 0..n {
                    y[i] += c[i];
                }
            }
        }
        if y.iter().any(|x| x % 2 != 0) {
            continue;
        }
        // u = (ζ + y/2) / 2 over the denominator 2·zeta_den.
        let num: Vec<i128> = (0..n)
            .map(|i| zeta[i] as i128 + y[i] / 2 * zeta_den as i128)
            .collect();
        let p = q.point(&num);
        if !points.contains(&p) {
            points.push(p);
        }
    }
    let imaginary: Vec<Vec<Vec<i64>>> = root_pairs(roots, coroots)
        .into_iter()
        .filter(|(a, _)| (0..n).all(|j| (0..n).map(|i| tau[i][j] * a[i]).sum::<i64>() == a[j]))
        .map(|(a, c)| reflection_matrix(&a, &c))
        .collect();
    let gens: Vec<_> = imaginary
        .iter()
        .map(|m| |p: &galh1::oracle::HalfPoint| q.mapped(p, m))
        .collect();
    brute_orbits(&points, &gens).expect("closed").len()
}

/// A random finite `ℤⁿ / R` with `R` stable under a random involution.
pub fn random_tate_instance(rng: &mut StdRng) -> (IntMatrix, Vec<Vec<i64>>) {
    let n = rng.gen_range(1..=3);
    let tau = random_involution(rng, n);
    let t = small(&tau);
    let m = rng.gen_range(2..=6);
    let mut rels: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { m } else { 0 }).collect())
        .collect();
    for _ in 0..rng.gen_range(0..=2) {
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
        let tv: Vec<i64> = t
            .iter()
            .map(|r| r.iter().zip(&v).map(|(a, b)| a * b).sum())
            .collect();
        rels.push(v);
        rels.push(tv);
    }
    (tau, rels)
}

fn small_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<i64>> {
    rows.iter()
        .map(|r| r.iter().map(|x| x.to_i64().expect("small entry")).collect())
        .collect()
}

/// [`brute_h1`] on a catalog form.
pub fn brute_h1_form(f: &galh1::catalog::NamedForm) -> usize {
    let zeta = f.zeta.zeta();
    let num: Vec<i64> = zeta
        .numerators()
        .iter()
        .map(|x| x.to_i64().unwrap())
        .collect();
    brute_h1(
        &small_rows(f.datum.simple_roots()),
        &small_rows(f.datum.simple_coroots()),
        &small(f.ic.tau0()),
        &num,
        zeta.denominator().to_i64().unwrap(),
    )
}
