//! Cartan matrix validation and Dynkin type detection.

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// One connected component of a Dynkin diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanComponent {
    /// One of `A B C D E F G`.
    pub family: char,
    pub rank: usize,
    /// Simple-root indices of the component, ascending.
    pub nodes: Vec<usize>,
}

impl CartanComponent {
    /// Number of positive roots of this type.
    pub fn positive_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            'A' => n * (n + 1) / 2,
            'B' | 'C' => n * n,
            'D' => n * (n - 1),
            'E' => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            'F' => 24,
            _ => 6,
        }
    }
}

impl fmt::Display for CartanComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Checks that `c` (with `c[i][j] = ⟨αⱼ, αᵢ^∨⟩`) is a Cartan matrix of finite
/// type and returns its components, ordered by smallest node.
pub fn cartan_type(c: &[Vec<i64>]) -> Result<Vec<CartanComponent>> {
    let l = c.len();
    for (i, row) in c.iter().enumerate() {
        if row.len() != l {
            return Err(Error::NotFiniteType("pairing matrix is not square".into()));
        }
        if row[i] != 2 {
            return Err(Error::NotFiniteType(format!(
                "diagonal entry {i} is {}",
                row[i]
            )));
        }
        for j in 0..l {
            if i == j {
                continue;
            }
            if row[j] > 0 {
                return Err(Error::NotFiniteType(format!("entry ({i},{j}) is positive")));
            }
            if (row[j] == 0) != (c[j][i] == 0) {
                return Err(Error::NotFiniteType(format!(
                    "entries ({i},{j}) and ({j},{i}) disagree on zero"
                )));
            }
        }
    }
    let components = connected_components(c);
    let sym = symmetrizer(c, &components)?;
    // D·C is symmetric; finite type iff it is positive definite.
    let b: Vec<Vec<BigRational>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| &sym[i] * BigRational::from_integer(c[i][j].into()))
                .collect()
        })
        .collect();
    if !positive_definite(b) {
        return Err(Error::NotFiniteType(
            "symmetrized matrix is not positive definite".into(),
        ));
    }
    Ok(components
        .into_iter()
        .map(|nodes| classify(c, &sym, nodes))
        .collect())
}

fn connected_components(c: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let l = c.len();
    let mut seen = vec![false; l];
    let mut out = Vec::new();
    for start in 0..l {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for j in 0..l {
                if !seen[j] && c[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Positive `dᵢ` with `dᵢ cᵢⱼ = dⱼ cⱼᵢ`, normalized to minimum 1 per component.
fn symmetrizer(c: &[Vec<i64>], components: &[Vec<usize>]) -> Result<Vec<BigRational>> {
    let l = c.len();
    let mut d: Vec<Option<BigRational>> = vec![None; l];
    for comp in components {
        d[comp[0]] = Some(BigRational::from_integer(1.into()));
        let mut stack = vec![comp[0]];
        while let Some(i) = stack.pop() {
            let di = d[i].clone().expect("set");
            for &j in comp {
                if j == i || c[i][j] == 0 {
                    continue;
                }
                let dj = &di * BigRational::new(c[i][j].into(), c[j][i].into());
                match &d[j] {
                    Some(x) if *x != dj => {
                        return Err(Error::NotFiniteType("matrix is not symmetrizable".into()))
                    }
                    Some(_) => {}
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                }
            }
        }
        let min = comp
            .iter()
            .map(|&i| d[i].clone().expect("set"))
            .min()
            .expect("nonempty");
        for &i in comp {
            d[i] = d[i].take().map(|x| x / &min);
        }
    }
    Ok(d.into_iter().map(|x| x.expect("set")).collect())
}

/// Sylvester's criterion by exact Gaussian elimination.
fn positive_definite(mut a: Vec<Vec<BigRational>>) -> bool {
    let n = a.len();
    for k in 0..n {
        if !a[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    true
}

fn classify(c: &[Vec<i64>], sym: &[BigRational], nodes: Vec<usize>) -> CartanComponent {
    let n = nodes.len();
    let edges: Vec<(usize, usize)> = nodes
        .iter()
        .flat_map(|&i| nodes.iter().map(move |&j| (i, j)))
        .filter(|&(i, j)| i < j && c[i][j] != 0)
        .collect();
    let multi = edges
        .iter()
        .map(|&(i, j)| c[i][j] * c[j][i])
        .max()
        .unwrap_or(1);
    let family = match multi {
        3 => 'G',
        2 if n == 4 => {
            // F₄ has its double bond in the middle, C₄/B₄ at an end.
            let (i, j) = *edges
                .iter()
                .find(|&&(i, j)| c[i][j] * c[j][i] == 2)
                .expect("edge");
            let deg = |v: usize| edges.iter().filter(|&&(a, b)| a == v || b == v).count();
            if deg(i) == 2 && deg(j) == 2 {
                'F'
            } else {
                b_or_c(sym, &nodes)
            }
        }
        2 => b_or_c(sym, &nodes),
        _ => {
            let deg = |v: usize| edges.iter().filter(|&&(a, b)| a == v || b == v).count();
            match nodes.iter().find(|&&v| deg(v) == 3) {
                None => 'A',
                Some(&branch) => {
                    let mut arms: Vec<usize> = edges
                        .iter()
                        .filter_map(|&(a, b)| match (a == branch, b == branch) {
                            (true, _) => Some(b),
                            (_, true) => Some(a),
                            _ => None,
                        })
                        .map(|start| arm_length(&edges, branch, start))
                        .collect();
                    arms.sort_unstable();
                    if arms[1] == 1 {
                        'D'
                    } else {
                        'E'
                    }
                }
            }
        }
    };
    CartanComponent {
        family,
        rank: n,
        nodes,
    }
}

/// `B` has a single short simple root, `C` a single long one; rank 2 is `C`.
fn b_or_c(sym: &[BigRational], nodes: &[usize]) -> char {
    let max = nodes.iter().map(|&i| &sym[i]).max().expect("nonempty");
    let long = nodes.iter().filter(|&&i| &sym[i] == max).count();
    if long == 1 {
        'C'
    } else {
        'B'
    }
}

fn arm_length(edges: &[(usize, usize)], from: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, start, 1);
    loop {
        let next = edges.iter().find_map(|&(a, b)| {
            if a == cur && b != prev {
                Some(b)
            } else if b == cur && a != prev {
                Some(a)
            } else {
                None
            }
        });
        match next {
            Some(v) => {
                prev = cur;
                cur = v;
                len += 1;
            }
            None => return len,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(c: &[Vec<i64>]) -> Vec<String> {
        cartan_type(c)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    #[test]
    fn detects_types() {
        assert_eq!(names(&[vec![2, -1], vec![-1, 2]]), ["A2"]);
        assert_eq!(names(&[vec![2, -1], vec![-3, 2]]), ["G2"]);
        assert_eq!(names(&[vec![2, -1], vec![-2, 2]]), ["C2"]);
        assert_eq!(names(&[vec![2, 0], vec![0, 2]]), ["A1", "A1"]);
        let b3 = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]];
        let c3 = vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]];
        assert_eq!(names(&b3), ["B3"]);
        assert_eq!(names(&c3), ["C3"]);
        let d4 = vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, -1],
            vec![0, -1, 2, 0],
            vec![0, -1, 0, 2],
        ];
        assert_eq!(names(&d4), ["D4"]);
        let f4 = vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -2, 0],
            vec![0, -1, 2, -1],
            vec![0, 0, -1, 2],
        ];
        assert_eq!(names(&f4), ["F4"]);
    }

    #[test]
    fn rejects_affine_and_malformed() {
        let affine_a2 = vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
        assert!(matches!(
            cartan_type(&affine_a2),
            Err(Error::NotFiniteType(_))
        ));
        assert!(cartan_type(&[vec![2, -2], vec![-2, 2]]).is_err());
        assert!(cartan_type(&[vec![2, 1], vec![1, 2]]).is_err());
        assert!(cartan_type(&[vec![2, -1], vec![0, 2]]).is_err());
        assert!(cartan_type(&[]).unwrap().is_empty());
    }
}
