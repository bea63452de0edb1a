//! Brute-force reference implementations for tests.
//!
//! Nothing here calls into `intlin`, `rootdata` or `cohomology`: arithmetic
//! is plain `i128` with its own echelon routine, groups are enumerated
//! element by element and orbits are grown by naive closure.

use std::collections::HashSet;

use crate::error::{Error, Result};

/// Cap on enumerated group orders.
pub const BRUTE_CAP: u128 = 1_000_000;

/// `ℤⁿ / span(relations)` with an involution acting on `ℤⁿ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAbelianPresentation {
    pub n: usize,
    pub relations: Vec<Vec<i64>>,
    pub involution: Vec<Vec<i64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TateDegree {
    /// `G^τ / (1+τ)G`.
    H0,
    /// `ker(1+τ) / (1−τ)G`.
    H1,
}

/// Row echelon basis of a subgroup of `ℤⁿ`: pivots positive, strictly
/// increasing pivot columns, entries above each pivot reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    n: usize,
    rows: Vec<(usize, Vec<i128>)>,
}

impl Echelon {
    pub fn new(n: usize, generators: &[Vec<i128>]) -> Self {
        let mut pending: Vec<Vec<i128>> = generators
            .iter()
            .filter(|g| g.iter().any(|&x| x != 0))
            .cloned()
            .collect();
        let mut rows: Vec<(usize, Vec<i128>)> = Vec::new();
        for col in 0..n {
            loop {
                let mut live: Vec<usize> = (0..pending.len())
                    .filter(|&i| pending[i][col] != 0)
                    .collect();
                if live.len() <= 1 {
                    break;
                }
                live.sort_by_key(|&i| pending[i][col].abs());
                let p = pending[live[0]].clone();
                for &i in &live[1..] {
                    let q = pending[i][col] / p[col];
                    for k in 0..n {
                        pending[i][k] -= q * p[k];
                    }
                }
                pending.retain(|g| g.iter().any(|&x| x != 0));
            }
            if let Some(i) = pending.iter().position(|g| g[col] != 0) {
                let mut r = pending.remove(i);
                if r[col] < 0 {
                    r.iter_mut().for_each(|x| *x = -*x);
                }
                rows.push((col, r));
            }
        }
        let mut e = Echelon { n, rows };
        for i in 0..e.rows.len() {
            let (col, r) = e.rows[i].clone();
            for j in 0..i {
                let q = e.rows[j].1[col].div_euclid(r[col]);
                for k in 0..n {
                    e.rows[j].1[k] -= q * r[k];
                }
            }
        }
        e
    }

    pub fn is_full_rank(&self) -> bool {
        self.rows.len() == self.n
    }

    /// `|ℤⁿ / L|` for a full rank `L`.
    pub fn index(&self) -> Option<u128> {
        self.is_full_rank()
            .then(|| self.rows.iter().map(|(c, r)| r[*c] as u128).product())
    }

    /// Canonical coset representative with `0 ≤ xⱼ < pivotⱼ` on pivot columns.
    pub fn reduce(&self, v: &[i128]) -> Vec<i128> {
        let mut x = v.to_vec();
        for (col, r) in &self.rows {
            let q = x[*col].div_euclid(r[*col]);
            for k in 0..self.n {
                x[k] -= q * r[k];
            }
        }
        x
    }

    pub fn contains(&self, v: &[i128]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }
}

fn apply(m: &[Vec<i64>], v: &[i128]) -> Vec<i128> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(&a, &b)| a as i128 * b).sum())
        .collect()
}

fn widen(v: &[i64]) -> Vec<i128> {
    v.iter().map(|&x| x as i128).collect()
}

/// All elements of `ℤⁿ / L` as canonical representatives.
fn enumerate(e: &Echelon) -> Result<Vec<Vec<i128>>> {
    let order = e.index().ok_or_else(|| Error::TooLarge {
        size: "infinite".into(),
        cap: BRUTE_CAP.to_string(),
    })?;
    if order > BRUTE_CAP {
        return Err(Error::TooLarge {
            size: order.to_string(),
            cap: BRUTE_CAP.to_string(),
        });
    }
    let bounds: Vec<i128> = e.rows.iter().map(|(c, r)| r[*c]).collect();
    let mut out = vec![vec![0i128; e.n]];
    for (k, &b) in bounds.iter().enumerate() {
        let mut next = Vec::with_capacity(out.len() * b as usize);
        for x in &out {
            for t in 0..b {
                let mut y = x.clone();
                y[k] = t;
                next.push(y);
            }
        }
        out = next;
    }
    Ok(out.into_iter().map(|x| e.reduce(&x)).collect())
}

/// Order of `Ĥ⁰` or `Ĥ¹` of the involution on the presented group, by
/// listing every element.
pub fn brute_tate(pres: &FiniteAbelianPresentation, which: TateDegree) -> Result<u64> {
    let n = pres.n;
    let t = &pres.involution;
    if t.len() != n || t.iter().any(|r| r.len() != n) {
        return Err(Error::NotInvolution);
    }
    for k in 0..n {
        let mut e = vec![0i128; n];
        e[k] = 1;
        if apply(t, &apply(t, &e)) != e {
            return Err(Error::NotInvolution);
        }
    }
    let rel: Vec<Vec<i128>> = pres.relations.iter().map(|r| widen(r)).collect();
    let e = Echelon::new(n, &rel);
    if rel.iter().any(|r| !e.contains(&apply(t, r))) {
        return Err(Error::ActionNotDescending);
    }
    let elements = enumerate(&e)?;
    let zero = vec![0i128; n];
    let plus = |x: &Vec<i128>| -> Vec<i128> {
        e.reduce(
            &x.iter()
                .zip(apply(t, x))
                .map(|(a, b)| a + b)
                .collect::<Vec<_>>(),
        )
    };
    let minus = |x: &Vec<i128>| -> Vec<i128> {
        e.reduce(
            &x.iter()
                .zip(apply(t, x))
                .map(|(a, b)| a - b)
                .collect::<Vec<_>>(),
        )
    };
    let (num, den) = match which {
        TateDegree::H0 => {
            let fixed = elements
                .iter()
                .filter(|x| e.reduce(&apply(t, x)) == **x)
                .count();
            let image: HashSet<Vec<i128>> = elements.iter().map(plus).collect();
            (fixed, image.len())
        }
        TateDegree::H1 => {
            let kernel = elements.iter().filter(|x| plus(x) == zero).count();
            let image: HashSet<Vec<i128>> = elements.iter().map(minus).collect();
            (kernel, image.len())
        }
    };
    Ok((num / den) as u64)
}

/// Number of elements killed by `m` in `ℤⁿ / span(relations)`, for
/// `m = 1, …, max_m`; these counts determine the group up to isomorphism.
pub fn brute_torsion_profile(n: usize, relations: &[Vec<i64>], max_m: u64) -> Result<Vec<u64>> {
    let e = Echelon::new(n, &relations.iter().map(|r| widen(r)).collect::<Vec<_>>());
    let elements = enumerate(&e)?;
    Ok((1..=max_m)
        .map(|m| {
            elements
                .iter()
                .filter(|x| e.contains(&x.iter().map(|&a| a * m as i128).collect::<Vec<_>>()))
                .count() as u64
        })
        .collect())
}

/// Partitions `points` into orbits of the group generated by `gens`.
///
/// Every orbit member is pushed through every generator and the image is
/// located by linear search with `==`. Orbits are returned as ascending
/// index lists ordered by smallest member.
pub fn brute_orbits<T, F>(points: &[T], gens: &[F]) -> Result<Vec<Vec<usize>>>
where
    T: PartialEq,
    F: Fn(&T) -> T,
{
    let mut seen = vec![false; points.len()];
    let mut orbits = Vec::new();
    for start in 0..points.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < orbit.len() {
            for g in gens {
                let image = g(&points[orbit[k]]);
                let j = points
                    .iter()
                    .position(|p| *p == image)
                    .ok_or(Error::NotClosed)?;
                if !orbit.contains(&j) {
                    orbit.push(j);
                    seen[j] = true;
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    Ok(orbits)
}

/// Points `u = num/den` of `ℚⁿ` with a fixed denominator, identified when
/// `2(u − u')` lies in a lattice `L`.
#[derive(Clone, Debug)]
pub struct HalfQuotient {
    den: i128,
    scaled: Echelon,
}

/// A point of a [`HalfQuotient`]; equality is equality of classes.
#[derive(Clone, Debug)]
pub struct HalfPoint {
    key: Vec<i128>,
    num: Vec<i128>,
}

impl PartialEq for HalfPoint {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}

impl HalfQuotient {
    /// `L` spanned by `generators`, points with denominator `den`.
    pub fn new(n: usize, generators: &[Vec<i128>], den: i128) -> Self {
        let scaled: Vec<Vec<i128>> = generators
            .iter()
            .map(|g| g.iter().map(|x| x * den).collect())
            .collect();
        HalfQuotient {
            den,
            scaled: Echelon::new(n, &scaled),
        }
    }

    /// `L = (1+τ)ℤⁿ`, the lattice defining equality in `F(ζ)`.
    pub fn one_plus(tau: &[Vec<i64>], den: i128) -> Self {
        let n = tau.len();
        let cols: Vec<Vec<i128>> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| tau[i][j] as i128 + i128::from(i == j))
                    .collect()
            })
            .collect();
        Self::new(n, &cols, den)
    }

    pub fn den(&self) -> i128 {
        self.den
    }

    /// The point `num / den`.
    pub fn point(&self, num: &[i128]) -> HalfPoint {
        let doubled: Vec<i128> = num.iter().map(|x| 2 * x).collect();
        HalfPoint {
            key: self.scaled.reduce(&doubled),
            num: num.to_vec(),
        }
    }

    /// The image of a point under an integer matrix.
    pub fn mapped(&self, p: &HalfPoint, m: &[Vec<i64>]) -> HalfPoint {
        self.point(&apply(m, &p.num))
    }
}

/// `s_α(v) = v − ⟨α, v⟩α^∨` as a matrix.
pub fn reflection_matrix(root: &[i64], coroot: &[i64]) -> Vec<Vec<i64>> {
    let n = root.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| i64::from(i == j) - coroot[i] * root[j])
                .collect()
        })
        .collect()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|r| {
            (0..n)
                .map(|j| r.iter().zip(b).map(|(x, row)| x * row[j]).sum())
                .collect()
        })
        .collect()
}

/// Every element of the group generated by `gens`, by closure from the
/// identity.
pub fn enumerate_group(n: usize, gens: &[Vec<Vec<i64>>], cap: usize) -> Result<Vec<Vec<Vec<i64>>>> {
    let id: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut elements = vec![id];
    let mut seen: HashSet<Vec<Vec<i64>>> = elements.iter().cloned().collect();
    let mut k = 0;
    while k < elements.len() {
        for g in gens {
            let w = mat_mul(g, &elements[k]);
            if seen.insert(w.clone()) {
                if elements.len() >= cap {
                    return Err(Error::TooLarge {
                        size: format!(">{cap}"),
                        cap: cap.to_string(),
                    });
                }
                elements.push(w);
            }
        }
        k += 1;
    }
    Ok(elements)
}

/// Orbits of the full Weyl group on the 2-torsion `½X₊/X₊` of the torus,
/// with `X₊ = ℤⁿ` and the Weyl group listed element by element.
pub fn h2_mod_w(simple_roots: &[Vec<i64>], simple_coroots: &[Vec<i64>], n: usize) -> Result<usize> {
    let gens: Vec<Vec<Vec<i64>>> = simple_roots
        .iter()
        .zip(simple_coroots)
        .map(|(a, c)| reflection_matrix(a, c))
        .collect();
    let group = enumerate_group(n, &gens, 100_000)?;
    let points: Vec<Vec<i64>> = (0..1u64 << n)
        .map(|bits| (0..n).map(|k| ((bits >> k) & 1) as i64).collect())
        .collect();
    let maps: Vec<_> = group
        .iter()
        .map(|w| {
            move |v: &Vec<i64>| -> Vec<i64> {
                w.iter()
                    .map(|r| {
                        r.iter()
                            .zip(v)
                            .map(|(a, b)| a * b)
                            .sum::<i64>()
                            .rem_euclid(2)
                    })
                    .collect()
            }
        })
        .collect();
    Ok(brute_orbits(&points, &maps)?.len())
}

/// All roots, by closing the simple roots under the simple reflections
/// acting on characters (`λ ↦ λ − ⟨λ, αᵢ^∨⟩αᵢ`).
pub fn brute_roots(
    simple_roots: &[Vec<i64>],
    simple_coroots: &[Vec<i64>],
    cap: usize,
) -> Result<Vec<Vec<i64>>> {
    let mut roots: Vec<Vec<i64>> = simple_roots.to_vec();
    let mut k = 0;
    while k < roots.len() {
        for (a, c) in simple_roots.iter().zip(simple_coroots) {
            let p: i64 = roots[k].iter().zip(c).map(|(x, y)| x * y).sum();
            let image: Vec<i64> = roots[k].iter().zip(a).map(|(x, y)| x - p * y).collect();
            if !roots.contains(&image) {
                if roots.len() >= cap {
                    return Err(Error::TooLarge {
                        size: format!(">{cap}"),
                        cap: cap.to_string(),
                    });
                }
                roots.push(image);
            }
        }
        k += 1;
    }
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(
        n: usize,
        relations: Vec<Vec<i64>>,
        involution: Vec<Vec<i64>>,
    ) -> FiniteAbelianPresentation {
        FiniteAbelianPresentation {
            n,
            relations,
            involution,
        }
    }

    #[test]
    fn tate_examples() {
        let p = pres(
            2,
            vec![vec![2, 0], vec![0, 2]],
            vec![vec![1, 0], vec![0, 1]],
        );
        assert_eq!(brute_tate(&p, TateDegree::H0).unwrap(), 4);
        let p = pres(1, vec![vec![4]], vec![vec![-1]]);
        assert_eq!(brute_tate(&p, TateDegree::H1).unwrap(), 2);
        let p = pres(1, vec![vec![3]], vec![vec![1]]);
        assert_eq!(brute_tate(&p, TateDegree::H0).unwrap(), 1);
        let p = pres(1, vec![], vec![vec![1]]);
        assert!(matches!(
            brute_tate(&p, TateDegree::H0),
            Err(Error::TooLarge { .. })
        ));
        let p = pres(
            2,
            vec![vec![2, 0], vec![0, 1]],
            vec![vec![0, 1], vec![1, 0]],
        );
        assert_eq!(
            brute_tate(&p, TateDegree::H0),
            Err(Error::ActionNotDescending)
        );
    }

    #[test]
    fn orbit_examples() {
        let id = |x: &i32| *x;
        assert_eq!(brute_orbits(&[1, 2, 3, 4], &[id]).unwrap().len(), 4);
        let pts = vec![(1, 1), (1, -1), (-1, 1), (-1, -1)];
        let swap = |p: &(i32, i32)| (p.1, p.0);
        assert_eq!(brute_orbits(&pts, &[swap]).unwrap().len(), 3);
        let neg = |x: &i32| -x;
        assert_eq!(brute_orbits(&[1, 2], &[neg]), Err(Error::NotClosed));
    }

    #[test]
    fn weyl_examples() {
        // SL₂, X₊ = ℤ: H₂ = {0, ½}, W fixes both.
        assert_eq!(h2_mod_w(&[vec![2]], &[vec![1]], 1).unwrap(), 2);
        let a2_roots = vec![vec![2, -1], vec![-1, 2]];
        let coroots = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(brute_roots(&a2_roots, &coroots, 100).unwrap().len(), 6);
        let gens: Vec<_> = a2_roots
            .iter()
            .zip(&coroots)
            .map(|(a, c)| reflection_matrix(a, c))
            .collect();
        assert_eq!(enumerate_group(2, &gens, 100).unwrap().len(), 6);
    }

    #[test]
    fn half_points() {
        // F(0) for compact SL₂: L = 2ℤ, so u and u + 1 agree.
        let q = HalfQuotient::one_plus(&[vec![1]], 2);
        assert_eq!(q.point(&[0]), q.point(&[2]));
        assert_ne!(q.point(&[0]), q.point(&[1]));
        assert_eq!(q.mapped(&q.point(&[1]), &[vec![-1]]), q.point(&[1]));
    }

    #[test]
    fn echelon_reduction() {
        let e = Echelon::new(2, &[vec![2, 1], vec![0, 3]]);
        assert_eq!(e.index(), Some(6));
        assert!(e.contains(&[2, 4]));
        assert!(!e.contains(&[1, 0]));
        assert_eq!(e.reduce(&[5, 0]), e.reduce(&[1, -2]));
    }
}
