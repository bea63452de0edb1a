//! Named real forms of the classical and exceptional groups, with their
//! inner classes, strong representatives and tabulated counts.
//!
//! Strong representatives `u` (so `x = exp(2πiu)`, `ζ = (1+τ₀)u`):
//!
//! * `su(p,q)`: `uᵢ = q/2n` for `i ≤ p`, `q/2n − ½` after, on the sum-zero
//!   lattice of `ℤⁿ`; `sl(2,R)` is `su(1,1)`.
//! * `sl(n,R)`, `n ≥ 3`: `τ₀(v) = −reverse(v)`, `u = 0` for `n` odd and
//!   `u = (¼^m, −¼^m)` for `n = 2m`; `sl(n,H)`: `u = 0` in `A_{2n−1}` with
//!   the same `τ₀` (compact `A₁` for `n = 1`).
//! * `sp(p,q)`: `u = (0^p, ½^q)`; `sp(2n,R)`: `u = (¼^n)`, so `z = −I`.
//! * `so(p,q)` and `spin(p,q)` with `p+q` odd: `u = (0^{n−b}, ½^b)` where
//!   `2b` is the even one of `p, q`; with `p, q` even: `b = q/2`; with
//!   `p, q` odd: `τ₀ = diag(1, …, 1, −1)` and `u = (0^{n−1−b}, ½^b, 0)`,
//!   `b = (q−1)/2`. `Spin` uses the even-sum sublattice of `ℤⁿ`.
//! * `so*(2n)`, `spin*(2n)`: `u = (¼^n)`; `pso*'(2n)`: `u = (¼^{n−1}, −¼)`,
//!   the image of `pso*(2n)` under the outer automorphism of `D_n`.
//! * Exceptional, equal rank: `u = ½ω_k^∨` with Bourbaki node `k`:
//!   `e6.quaternionic` 2, `e6.hermitian` 1, `e7.split` 2,
//!   `e7.quaternionic` 1, `e7.hermitian` 7, `e8.split` 1,
//!   `e8.quaternionic` 8, `f4.split` 1, `f4.b4` 4, `g2.split` 2; compact
//!   forms `u = 0`. `e6.quasicompact` is `u = 0` in the outer class and
//!   `e6.split` the other class of `F(0)` there.
//! * Adjoint forms push `u` forward along the adjoint quotient.

mod classical;
mod exceptional;
mod expected;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::cohomology::{h1_count, GeneratorSet, InvariantCocharacter};
use crate::error::{Error, Result};
use crate::fibers::transport;
use crate::innerclass::InnerClass;
use crate::intlin::{IntMatrix, RatVector};
use crate::rootdata::{isogeny_datum, IsogenyKind, IsogenyMap, RootDatum};
use classical::{antidiagonal, blocks, halves, last_sign, su_rep, Ambient};

pub use expected::{
    expected_h1_formula, expected_pi0_formula, spin_quadratic_oracle, FAMILIES, SPIN_DELTA,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExceptionalGroup {
    E6,
    E7,
    E8,
    F4,
    G2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExceptionalForm {
    Split,
    Quaternionic,
    Hermitian,
    Compact,
    Quasicompact,
    B4,
}

impl ExceptionalGroup {
    pub const ALL: [ExceptionalGroup; 5] = [
        ExceptionalGroup::E6,
        ExceptionalGroup::E7,
        ExceptionalGroup::E8,
        ExceptionalGroup::F4,
        ExceptionalGroup::G2,
    ];

    pub fn key(self) -> &'static str {
        match self {
            ExceptionalGroup::E6 => "e6",
            ExceptionalGroup::E7 => "e7",
            ExceptionalGroup::E8 => "e8",
            ExceptionalGroup::F4 => "f4",
            ExceptionalGroup::G2 => "g2",
        }
    }

    pub fn rank(self) -> usize {
        match self {
            ExceptionalGroup::E6 => 6,
            ExceptionalGroup::E7 => 7,
            ExceptionalGroup::E8 => 8,
            ExceptionalGroup::F4 => 4,
            ExceptionalGroup::G2 => 2,
        }
    }

    /// Forms in table order with `(sc count, adjoint count, adjoint π₀)`.
    pub fn forms(self) -> &'static [(ExceptionalForm, u64, u64, Option<u64>)] {
        use ExceptionalForm::*;
        match self {
            ExceptionalGroup::E6 => &[
                (Quaternionic, 3, 3, None),
                (Hermitian, 3, 3, None),
                (Compact, 3, 3, None),
                (Split, 2, 2, None),
                (Quasicompact, 2, 2, None),
            ],
            ExceptionalGroup::E7 => &[
                (Split, 2, 4, Some(2)),
                (Quaternionic, 4, 4, Some(1)),
                (Hermitian, 2, 4, Some(2)),
                (Compact, 4, 4, Some(1)),
            ],
            ExceptionalGroup::E8 => &[
                (Split, 3, 3, None),
                (Quaternionic, 3, 3, None),
                (Compact, 3, 3, None),
            ],
            ExceptionalGroup::F4 => &[(Split, 3, 3, None), (B4, 3, 3, None), (Compact, 3, 3, None)],
            ExceptionalGroup::G2 => &[(Split, 2, 2, None), (Compact, 2, 2, None)],
        }
    }

    /// Bourbaki node `k` with `u = ½ω_k^∨`, or `None` for `u = 0`.
    fn node(self, form: ExceptionalForm) -> Option<usize> {
        use ExceptionalForm::*;
        match (self, form) {
            (ExceptionalGroup::E6, Quaternionic) => Some(2),
            (ExceptionalGroup::E6, Hermitian) => Some(1),
            (ExceptionalGroup::E7, Split) => Some(2),
            (ExceptionalGroup::E7, Quaternionic) => Some(1),
            (ExceptionalGroup::E7, Hermitian) => Some(7),
            (ExceptionalGroup::E8, Split) => Some(1),
            (ExceptionalGroup::E8, Quaternionic) => Some(8),
            (ExceptionalGroup::F4, Split) => Some(1),
            (ExceptionalGroup::F4, B4) => Some(4),
            (ExceptionalGroup::G2, Split) => Some(2),
            _ => None,
        }
    }

    /// Whether the form lies in the inner class with a nontrivial diagram
    /// automorphism.
    fn is_outer(self, form: ExceptionalForm) -> bool {
        self == ExceptionalGroup::E6
            && matches!(form, ExceptionalForm::Split | ExceptionalForm::Quasicompact)
    }
}

impl ExceptionalForm {
    pub fn key(self) -> &'static str {
        match self {
            ExceptionalForm::Split => "split",
            ExceptionalForm::Quaternionic => "quaternionic",
            ExceptionalForm::Hermitian => "hermitian",
            ExceptionalForm::Compact => "compact",
            ExceptionalForm::Quasicompact => "quasicompact",
            ExceptionalForm::B4 => "b4",
        }
    }
}

/// A parsed real form name; `Display` gives the canonical spelling.
///
/// Size parameters are stored as written except for `sp(2n,R)`,
/// `so*(2n)`, `spin*(2n)` and their adjoint versions, which store `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormName {
    SlR(usize),
    SlH(usize),
    Su(usize, usize),
    SpR(usize),
    Sp(usize, usize),
    So(usize, usize),
    SoStar(usize),
    Spin(usize, usize),
    SpinStar(usize),
    PslR(usize),
    PslH(usize),
    Psu(usize, usize),
    Pso(usize, usize),
    PsoStar(usize),
    /// The second `PSO*(2n)`, `n` even, related to the first by an outer
    /// but not an inner automorphism.
    PsoStarPrime(usize),
    PspR(usize),
    Psp(usize, usize),
    Exceptional {
        group: ExceptionalGroup,
        form: ExceptionalForm,
        adjoint: bool,
    },
}

impl fmt::Display for FormName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FormName::*;
        match *self {
            SlR(n) => write!(f, "sl({n},R)"),
            SlH(n) => write!(f, "sl({n},H)"),
            Su(p, q) => write!(f, "su({p},{q})"),
            SpR(n) => write!(f, "sp({},R)", 2 * n),
            Sp(p, q) => write!(f, "sp({p},{q})"),
            So(p, q) => write!(f, "so({p},{q})"),
            SoStar(n) => write!(f, "so*({})", 2 * n),
            Spin(p, q) => write!(f, "spin({p},{q})"),
            SpinStar(n) => write!(f, "spin*({})", 2 * n),
            PslR(n) => write!(f, "psl({n},R)"),
            PslH(n) => write!(f, "psl({n},H)"),
            Psu(p, q) => write!(f, "psu({p},{q})"),
            Pso(p, q) => write!(f, "pso({p},{q})"),
            PsoStar(n) => write!(f, "pso*({})", 2 * n),
            PsoStarPrime(n) => write!(f, "pso*'({})", 2 * n),
            PspR(n) => write!(f, "psp({},R)", 2 * n),
            Psp(p, q) => write!(f, "psp({p},{q})"),
            Exceptional {
                group,
                form,
                adjoint,
            } => {
                write!(
                    f,
                    "{}{}.{}",
                    if adjoint { "ad." } else { "" },
                    group.key(),
                    form.key()
                )
            }
        }
    }
}

fn invalid(name: &str, why: &str) -> Error {
    Error::InvalidSignature(format!("{name}: {why}"))
}

impl FromStr for FormName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let name: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let unknown = || Error::UnknownName(s.trim().to_string());
        let parsed = if let Some((group, form)) =
            name.strip_prefix("ad.").unwrap_or(&name).split_once('.')
        {
            let group = ExceptionalGroup::ALL
                .into_iter()
                .find(|g| g.key() == group)
                .ok_or_else(unknown)?;
            let form = group
                .forms()
                .iter()
                .map(|f| f.0)
                .find(|f| f.key() == form)
                .ok_or_else(unknown)?;
            FormName::Exceptional {
                group,
                form,
                adjoint: name.starts_with("ad."),
            }
        } else {
            let (head, rest) = name.split_once('(').ok_or_else(unknown)?;
            let args: Vec<&str> = rest
                .strip_suffix(')')
                .ok_or_else(unknown)?
                .split(',')
                .collect();
            let num = |a: &str| a.parse::<usize>().map_err(|_| unknown());
            let even = |a: &str| -> Result<usize> {
                let m = num(a)?;
                if m % 2 == 1 {
                    return Err(invalid(&name, "size must be even"));
                }
                Ok(m / 2)
            };
            use FormName::*;
            match (head, args.as_slice()) {
                ("sl", [n, "R"]) => SlR(num(n)?),
                ("sl", [n, "H"]) => SlH(num(n)?),
                ("sp", [n, "R"]) => SpR(even(n)?),
                ("psl", [n, "R"]) => PslR(num(n)?),
                ("psl", [n, "H"]) => PslH(num(n)?),
                ("psp", [n, "R"]) => PspR(even(n)?),
                ("so*", [n]) => SoStar(even(n)?),
                ("spin*", [n]) => SpinStar(even(n)?),
                ("pso*", [n]) => PsoStar(even(n)?),
                ("pso*'", [n]) => PsoStarPrime(even(n)?),
                (head, [p, q]) => {
                    let (p, q) = (num(p)?, num(q)?);
                    match head {
                        "su" => Su(p, q),
                        "sp" => Sp(p, q),
                        "so" => So(p, q),
                        "spin" => Spin(p, q),
                        "psu" => Psu(p, q),
                        "pso" => Pso(p, q),
                        "psp" => Psp(p, q),
                        _ => return Err(unknown()),
                    }
                }
                _ => return Err(unknown()),
            }
        };
        parsed.validate()?;
        Ok(parsed)
    }
}

impl FormName {
    fn validate(&self) -> Result<()> {
        use FormName::*;
        let name = self.to_string();
        let (size, min) = match *self {
            SlR(n) | SlH(n) | SpR(n) | SoStar(n) | SpinStar(n) | PslH(n) | PspR(n) => (n, 1),
            Su(p, q) | Sp(p, q) | So(p, q) | Psp(p, q) => (p + q, 1),
            PslR(n) | PsoStar(n) => (n, 2),
            Spin(p, q) | Psu(p, q) => (p + q, 2),
            Pso(p, q) => (p + q, 3),
            PsoStarPrime(n) => {
                if n % 2 == 1 {
                    return Err(invalid(&name, "the second form exists only for n even"));
                }
                (n, 2)
            }
            Exceptional { .. } => return Ok(()),
        };
        if size < min {
            return Err(invalid(&name, &format!("size {size} is below {min}")));
        }
        Ok(())
    }

    pub fn is_adjoint(&self) -> bool {
        use FormName::*;
        match *self {
            PslR(_) | PslH(_) | Psu(..) | Pso(..) | PsoStar(_) | PsoStarPrime(_) | PspR(_)
            | Psp(..) => true,
            Exceptional { adjoint, .. } => adjoint,
            _ => false,
        }
    }

    /// The simply connected form covering an adjoint one.
    pub fn cover(&self) -> Option<FormName> {
        use FormName::*;
        Some(match *self {
            PslR(n) => SlR(n),
            PslH(n) => SlH(n),
            Psu(p, q) => Su(p, q),
            Pso(p, q) => Spin(p, q),
            PsoStar(n) | PsoStarPrime(n) => SpinStar(n),
            PspR(n) => SpR(n),
            Psp(p, q) => Sp(p, q),
            Exceptional {
                group,
                form,
                adjoint: true,
            } => Exceptional {
                group,
                form,
                adjoint: false,
            },
            _ => return None,
        })
    }

    /// Rank of the maximal torus.
    pub fn rank(&self) -> usize {
        use FormName::*;
        match *self {
            SlR(n) | PslR(n) => n - 1,
            SlH(n) | PslH(n) => 2 * n - 1,
            Su(p, q) | Psu(p, q) => p + q - 1,
            SpR(n) | PspR(n) | SoStar(n) | SpinStar(n) | PsoStar(n) | PsoStarPrime(n) => n,
            Sp(p, q) | Psp(p, q) => p + q,
            So(p, q) | Spin(p, q) | Pso(p, q) => (p + q) / 2,
            Exceptional { group, .. } => group.rank(),
        }
    }

    /// Family key and parameters for [`expected_h1_formula`].
    pub fn family(&self) -> Option<(&'static str, Vec<u64>)> {
        use FormName::*;
        let one = |k: &'static str, n: usize| Some((k, vec![n as u64]));
        let two = |k: &'static str, p: usize, q: usize| Some((k, vec![p as u64, q as u64]));
        match *self {
            SlR(n) => one("sl_R", n),
            SlH(n) => one("sl_H", n),
            Su(p, q) => two("su", p, q),
            SpR(n) => one("sp_R", n),
            Sp(p, q) => two("sp", p, q),
            So(p, q) => two("so", p, q),
            SoStar(n) => one("so*", n),
            Spin(p, q) => two("spin", p, q),
            SpinStar(n) => one("spin*", n),
            PslR(n) => one("psl_R", n),
            PslH(n) => one("psl_H", n),
            Psu(p, q) => two("psu", p, q),
            Pso(p, q) => two("pso", p, q),
            PsoStar(n) | PsoStarPrime(n) => one("pso*", n),
            PspR(n) => one("psp_R", n),
            Psp(p, q) => two("psp", p, q),
            Exceptional { .. } => None,
        }
    }

    fn exceptional_row(&self) -> Option<(u64, u64, Option<u64>)> {
        let FormName::Exceptional { group, form, .. } = *self else {
            return None;
        };
        group
            .forms()
            .iter()
            .find(|r| r.0 == form)
            .map(|r| (r.1, r.2, r.3))
    }

    /// The tabulated `|H¹(σ, G)|`.
    pub fn expected_h1(&self) -> Option<u64> {
        match self.family() {
            Some((family, params)) => expected_h1_formula(family, &params).ok(),
            None => self
                .exceptional_row()
                .map(|(sc, ad, _)| if self.is_adjoint() { ad } else { sc }),
        }
    }

    /// The tabulated `|π₀(G(ℝ))|`, listed for adjoint forms only.
    pub fn expected_pi0(&self) -> Option<u64> {
        if !self.is_adjoint() {
            return None;
        }
        match self.family() {
            Some((family, params)) => expected_pi0_formula(family, &params).ok(),
            None => self.exceptional_row().and_then(|(_, _, pi0)| pi0),
        }
    }
}

/// A real form with everything needed to count its class.
#[derive(Clone, Debug)]
pub struct NamedForm {
    pub name: FormName,
    pub datum: RootDatum,
    pub ic: InnerClass,
    pub zeta: InvariantCocharacter,
    /// Strong representative `u` with `(1+τ₀)u = ζ`.
    pub strong_rep: RatVector,
    pub expected_h1: Option<u64>,
    pub expected_pi0: Option<u64>,
    /// For adjoint forms: the simply connected cover and the isogeny.
    pub cover: Option<(Box<NamedForm>, IsogenyMap)>,
}

/// Parses `name` and builds the form.
pub fn named_real_form(name: &str) -> Result<NamedForm> {
    build(name.parse()?)
}

pub fn build(name: FormName) -> Result<NamedForm> {
    name.validate()?;
    if let Some(sc) = name.cover() {
        return build_adjoint(name, build(sc)?);
    }
    let (ic, u) = match name {
        FormName::Exceptional { group, form, .. } => exceptional_form(group, form)?,
        _ => classical_form(name)?,
    };
    finish(name, ic, u, None)
}

fn finish(
    name: FormName,
    ic: InnerClass,
    u: RatVector,
    cover: Option<(Box<NamedForm>, IsogenyMap)>,
) -> Result<NamedForm> {
    let datum = ic.datum().clone().with_name(name.to_string());
    let ic = InnerClass::new(datum.clone(), ic.perm().to_vec(), ic.tau0().clone())?;
    let zeta = IntMatrix::identity(datum.rank())
        .add(ic.tau0())
        .apply_rat(&u);
    let zeta = InvariantCocharacter::new(ic.clone(), zeta)?;
    Ok(NamedForm {
        name,
        datum,
        ic,
        zeta,
        strong_rep: u,
        expected_h1: name.expected_h1(),
        expected_pi0: name.expected_pi0(),
        cover,
    })
}

fn build_adjoint(name: FormName, mut sc: NamedForm) -> Result<NamedForm> {
    if let FormName::PsoStarPrime(n) = name {
        let u = Ambient::type_d(n, true).coordinates(&blocks(&[(n - 1, 1, 4), (1, -1, 4)]));
        sc = finish(sc.name, sc.ic, u, None)?;
    }
    let (_, f) = isogeny_datum(sc.ic.datum(), IsogenyKind::Adjoint)?;
    let (ic, _) = transport(&f, &sc.ic, &sc.zeta)?;
    let u = f.lattice_map().apply_rat(&sc.strong_rep);
    finish(name, ic, u, Some((Box::new(sc), f)))
}

/// The inner class on `a` with ambient involution `t` (identity if `None`).
fn inner_class(a: &Ambient, t: Option<IntMatrix>) -> Result<InnerClass> {
    let d = a.datum()?;
    let Some(t) = t else {
        return Ok(InnerClass::compact(d));
    };
    let tau = a.restrict(&t);
    let perm = d
        .simple_coroots()
        .iter()
        .map(|c| {
            let image = tau.apply(c);
            d.simple_coroots()
                .iter()
                .position(|x| *x == image)
                .ok_or(Error::NotBasedCompatible(0))
        })
        .collect::<Result<Vec<_>>>()?;
    InnerClass::new(d, perm, tau)
}

fn classical_form(name: FormName) -> Result<(InnerClass, RatVector)> {
    use FormName::*;
    let (a, t, u) = match name {
        SlR(1) => (Ambient::type_a(1), None, blocks(&[(1, 0, 1)])),
        SlR(2) => (Ambient::type_a(2), None, su_rep(1, 1)),
        SlR(n) => {
            let u = if n % 2 == 0 {
                blocks(&[(n / 2, 1, 4), (n / 2, -1, 4)])
            } else {
                blocks(&[(n, 0, 1)])
            };
            (Ambient::type_a(n), Some(antidiagonal(n)), u)
        }
        SlH(1) => (Ambient::type_a(2), None, blocks(&[(2, 0, 1)])),
        SlH(n) => (
            Ambient::type_a(2 * n),
            Some(antidiagonal(2 * n)),
            blocks(&[(2 * n, 0, 1)]),
        ),
        Su(p, q) => (Ambient::type_a(p + q), None, su_rep(p, q)),
        SpR(n) => (Ambient::type_c(n), None, blocks(&[(n, 1, 4)])),
        Sp(p, q) => (Ambient::type_c(p + q), None, halves(p + q, q)),
        So(p, q) => orthogonal(p, q, false),
        Spin(p, q) => orthogonal(p, q, true),
        SoStar(n) => (Ambient::type_d(n, false), None, blocks(&[(n, 1, 4)])),
        SpinStar(n) => (Ambient::type_d(n, true), None, blocks(&[(n, 1, 4)])),
        _ => unreachable!("adjoint and exceptional names are built elsewhere"),
    };
    let u = a.coordinates(&u);
    Ok((inner_class(&a, t)?, u))
}

fn orthogonal(p: usize, q: usize, spin: bool) -> (Ambient, Option<IntMatrix>, RatVector) {
    let n = (p + q) / 2;
    match (p % 2, q % 2) {
        (1, 1) => (
            Ambient::type_d(n, spin),
            Some(last_sign(n)),
            blocks(&[(n - 1 - (q - 1) / 2, 0, 1), ((q - 1) / 2, 1, 2), (1, 0, 1)]),
        ),
        (0, 0) => (Ambient::type_d(n, spin), None, halves(n, q / 2)),
        _ => {
            let b = if p.is_multiple_of(2) { p / 2 } else { q / 2 };
            if n == 0 {
                return (Ambient::type_a(1), None, blocks(&[(1, 0, 1)]));
            }
            (Ambient::type_b(n, spin), None, halves(n, b))
        }
    }
}

fn exceptional_form(
    group: ExceptionalGroup,
    form: ExceptionalForm,
) -> Result<(InnerClass, RatVector)> {
    let key = group.key();
    let d = exceptional::simply_connected(key)?;
    let n = d.rank();
    if group.is_outer(form) {
        let ic = InnerClass::from_diagram(d, exceptional::E6_FLIP.to_vec())?;
        let zero = RatVector::zero(n);
        if form == ExceptionalForm::Quasicompact {
            return Ok((ic, zero));
        }
        // The split form is the class of F(0) not containing u = 0.
        let r = h1_count(&InvariantCocharacter::trivial(ic.clone()), GeneratorSet::Wi)?;
        let f = crate::cohomology::strong_class_set(&InvariantCocharacter::trivial(ic.clone()))?;
        let zero_rep = f.canonical(&zero);
        let u = r
            .representatives
            .into_iter()
            .find(|u| *u != zero_rep)
            .ok_or(Error::UnknownName("e6.split".into()))?;
        return Ok((ic, u));
    }
    let u = match group.node(form) {
        Some(k) => exceptional::half_coweight(key, k),
        None => RatVector::zero(n),
    };
    Ok((InnerClass::compact(d), u))
}

/// The four tables, as lists of names.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Table {
    /// Simply connected classical groups; `n ≤ N`, `p+q ≤ N`.
    Classical,
    /// `Spin(p,q)` with `p+q ≤ 2N`, `Spin*(2n)` with `n ≤ N`.
    Spin,
    /// Simply connected exceptional groups of rank `≤ N`.
    Exceptional,
    /// Adjoint classical and exceptional groups of rank `≤ N`.
    Adjoint,
}

impl Table {
    pub const ALL: [Table; 4] = [
        Table::Classical,
        Table::Spin,
        Table::Exceptional,
        Table::Adjoint,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Table::Classical => "classical",
            Table::Spin => "spin",
            Table::Exceptional => "exceptional",
            Table::Adjoint => "adjoint",
        }
    }
}

fn signatures(lo: usize, hi: usize) -> impl Iterator<Item = (usize, usize)> {
    (lo..=hi).flat_map(|s| (0..=s).map(move |q| (s - q, q)))
}

/// Names in a table, with the bound `max` as documented on [`Table`].
pub fn table_names(table: Table, max: usize) -> Vec<FormName> {
    use FormName::*;
    let mut out = Vec::new();
    match table {
        Table::Classical => {
            out.extend((1..=max).map(SlR));
            out.extend(signatures(1, max).map(|(p, q)| Su(p, q)));
            out.extend((1..=max).map(SlH));
            out.extend((1..=max).map(SpR));
            out.extend(signatures(1, max).map(|(p, q)| Sp(p, q)));
            out.extend(signatures(1, max).map(|(p, q)| So(p, q)));
            out.extend((1..=max).map(SoStar));
        }
        Table::Spin => {
            out.extend(signatures(2, 2 * max).map(|(p, q)| Spin(p, q)));
            out.extend((1..=max).map(SpinStar));
        }
        Table::Exceptional | Table::Adjoint => {
            let adjoint = table == Table::Adjoint;
            if adjoint {
                out.extend((2..=max + 1).map(PslR));
                out.extend((1..=max.div_ceil(2)).filter(|n| 2 * n - 1 <= max).map(PslH));
                out.extend(signatures(2, max + 1).map(|(p, q)| Psu(p, q)));
                out.extend(signatures(3, 2 * max + 1).map(|(p, q)| Pso(p, q)));
                for n in 2..=max {
                    out.push(PsoStar(n));
                    if n % 2 == 0 {
                        out.push(PsoStarPrime(n));
                    }
                }
                out.extend((1..=max).map(PspR));
                out.extend(signatures(1, max).map(|(p, q)| Psp(p, q)));
            }
            for group in ExceptionalGroup::ALL
                .into_iter()
                .filter(|g| g.rank() <= max)
            {
                out.extend(group.forms().iter().map(|r| Exceptional {
                    group,
                    form: r.0,
                    adjoint,
                }));
            }
        }
    }
    out
}

/// Number of roots with `⟨α, 2u⟩` even: the roots of `K` for an equal rank form.
pub fn compact_root_count(form: &NamedForm) -> usize {
    let two_u = form.strong_rep.double();
    let sys = form.datum.root_system();
    sys.roots
        .iter()
        .filter(|a| (two_u.pair(a).to_integer() % BigInt::from(2)) == BigInt::from(0))
        .count()
}
