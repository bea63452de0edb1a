//! Text format for custom groups.
//!
//! One `key = value` pair per line; `#` starts a comment; blank lines are
//! ignored. Integer rows are separated by `;`, entries by spaces or commas.
//!
//! ```text
//! name = SL(3) compact
//! rank = 2
//! simple_roots = 2 -1; -1 2
//! simple_coroots = 1 0; 0 1
//! delta_perm = 0 1          # optional, default identity
//! tau0 = 1 0; 0 1           # optional, default derived from delta_perm
//! zeta = 0 0                # optional, entries "a" or "a/b", default 0
//! ```

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::cohomology::InvariantCocharacter;
use crate::error::{Error, Result};
use crate::innerclass::InnerClass;
use crate::intlin::{parse_rational, IntMatrix, RatVector};
use crate::rootdata::RootDatum;

const KEYS: [&str; 7] = [
    "name",
    "rank",
    "simple_roots",
    "simple_coroots",
    "delta_perm",
    "tau0",
    "zeta",
];

/// A parsed group file.
#[derive(Clone, Debug)]
pub struct GroupSpec {
    pub datum: RootDatum,
    pub ic: InnerClass,
    pub zeta: InvariantCocharacter,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn entries(s: &str) -> impl Iterator<Item = &str> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
}

fn int_rows(line: usize, s: &str) -> Result<Vec<Vec<BigInt>>> {
    s.split(';')
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .map(|r| {
            entries(r)
                .map(|t| {
                    t.parse::<BigInt>()
                        .map_err(|_| parse_err(line, format!("not an integer: {t:?}")))
                })
                .collect()
        })
        .collect()
}

/// Parses a group file and validates the datum, inner class and `ζ`.
pub fn parse_group(text: &str) -> Result<GroupSpec> {
    let mut fields: BTreeMap<&str, (usize, &str)> = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| parse_err(line, "expected key = value"))?;
        let key = key.trim();
        if !KEYS.contains(&key) {
            return Err(parse_err(line, format!("unknown key {key:?}")));
        }
        if fields.insert(key, (line, value.trim())).is_some() {
            return Err(parse_err(line, format!("duplicate key {key:?}")));
        }
    }
    let required = |key: &str| {
        fields
            .get(key)
            .copied()
            .ok_or_else(|| parse_err(0, format!("missing key {key:?}")))
    };
    let (line, rank) = required("rank")?;
    let rank: usize = rank
        .parse()
        .map_err(|_| parse_err(line, format!("bad rank {rank:?}")))?;
    let (line, roots) = required("simple_roots")?;
    let roots = int_rows(line, roots)?;
    let (line, coroots) = required("simple_coroots")?;
    let coroots = int_rows(line, coroots)?;
    let name = fields.get("name").map(|(_, v)| v.to_string());
    let datum = RootDatum::from_big(rank, roots, coroots, name)?;
    let l = datum.semisimple_rank();
    let perm: Vec<usize> = match fields.get("delta_perm") {
        Some(&(line, v)) => entries(v)
            .map(|t| {
                t.parse()
                    .map_err(|_| parse_err(line, format!("not an index: {t:?}")))
            })
            .collect::<Result<_>>()?,
        None => (0..l).collect(),
    };
    let ic = match fields.get("tau0") {
        Some(&(line, v)) => {
            let rows = int_rows(line, v)?;
            if rows.len() != rank || rows.iter().any(|r| r.len() != rank) {
                return Err(parse_err(line, format!("tau0 must be {rank}x{rank}")));
            }
            InnerClass::new(datum.clone(), perm, IntMatrix::from_big_rows(rows, rank))?
        }
        None if perm.iter().enumerate().all(|(i, &p)| i == p) && perm.len() == l => {
            InnerClass::compact(datum.clone())
        }
        None => InnerClass::from_diagram(datum.clone(), perm)?,
    };
    let zeta = match fields.get("zeta") {
        Some(&(line, v)) => {
            let xs = entries(v)
                .map(|t| {
                    parse_rational(t)
                        .ok_or_else(|| parse_err(line, format!("not a rational: {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if xs.len() != rank {
                return Err(parse_err(line, format!("zeta needs {rank} entries")));
            }
            InvariantCocharacter::new(
                ic.clone(),
                if xs.is_empty() {
                    RatVector::zero(0)
                } else {
                    RatVector::from_rationals(&xs)
                },
            )?
        }
        None => InvariantCocharacter::trivial(ic.clone()),
    };
    Ok(GroupSpec { datum, ic, zeta })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sl3() {
        let g = parse_group(
            "# SL3\nrank = 2\nsimple_roots = 2 -1; -1 2\nsimple_coroots = 1 0; 0 1\nzeta = 0 0\n",
        )
        .unwrap();
        assert_eq!(g.datum.type_label(), "A2");
        assert!(g.ic.is_equal_rank());
        let outer = parse_group(
            "rank = 2\nsimple_roots = 2,-1; -1,2\nsimple_coroots = 1 0; 0 1\ndelta_perm = 1 0",
        )
        .unwrap();
        assert!(!outer.ic.is_equal_rank());
    }

    #[test]
    fn reports_lines() {
        let e = parse_group("rank = 1\nsimple_roots = 2\nsimple_coroots = x").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        let e = parse_group("rank = 1\nbogus = 2").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = parse_group("rank = 1\nsimple_roots = 2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 0, .. }));
        let e =
            parse_group("rank = 1\nsimple_roots = 2\nsimple_coroots = 1\nzeta = 1/3").unwrap_err();
        assert!(matches!(e, Error::InvalidCocharacter(_)));
    }
}
