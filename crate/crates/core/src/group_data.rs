//! Structural data for Spin(2n,1), SU(n,1) and Sp(n,1).
//!
//! Roots of `g` and `m` live in the ambient coordinates of a compact Cartan
//! `h` containing the split direction `alpha`. Roots of `k` live in the
//! coordinates used for K-type highest weights, which differ per family:
//!
//! * Spin(2n): the usual `D_n` coordinates.
//! * U(n): `n` coordinates plus one slot for the determinant character, so the
//!   weight `(a_1..a_n | a_{n+1})` has total sum zero.
//! * Sp(n) x Sp(1): `n` coordinates for Sp(n), one for Sp(1).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_coords::{HalfInt, HalfIntVec, Rational};

pub const MIN_RANK: usize = 2;
pub const DEFAULT_MAX_RANK: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    Real,
    Complex,
    Quaternionic,
}

impl Family {
    pub fn group_name(self, n: usize) -> String {
        match self {
            Family::Real => format!("Spin({},1)", 2 * n),
            Family::Complex => format!("SU({n},1)"),
            Family::Quaternionic => format!("Sp({n},1)"),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Real => "REAL",
            Family::Complex => "COMPLEX",
            Family::Quaternionic => "QUATERNIONIC",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "real" | "r" | "spin" => Ok(Family::Real),
            "complex" | "c" | "su" => Ok(Family::Complex),
            "quaternionic" | "h" | "q" | "sp" => Ok(Family::Quaternionic),
            _ => Err(Error::InvalidInput(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CaseId {
    pub family: Family,
    pub n: usize,
}

impl CaseId {
    pub const fn new(family: Family, n: usize) -> Self {
        CaseId { family, n }
    }

    /// Dimension of the ambient coordinates of `h*`.
    pub fn ambient_dim(&self) -> usize {
        match self.family {
            Family::Real => self.n,
            Family::Complex | Family::Quaternionic => self.n + 1,
        }
    }

    /// Dimension of the coordinates used for K-type weights.
    pub fn k_dim(&self) -> usize {
        self.ambient_dim()
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Pos,
    #[serde(rename = "-")]
    Neg,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupCase {
    pub id: CaseId,
    pub pos_roots: Vec<HalfIntVec>,
    pub pos_roots_m: Vec<HalfIntVec>,
    pub pos_roots_k: Vec<HalfIntVec>,
    pub simple_roots: Vec<HalfIntVec>,
    pub simple_roots_m: Vec<HalfIntVec>,
    pub simple_roots_k: Vec<HalfIntVec>,
    pub alpha: HalfIntVec,
    pub rho: HalfIntVec,
    pub rho_m: HalfIntVec,
    pub rho_a: HalfIntVec,
    pub rho_k: HalfIntVec,
    pub rho_alpha: HalfInt,
    pub mult_alpha: usize,
    pub mult_half_alpha: usize,
}

pub fn build_case(id: CaseId) -> Result<GroupCase> {
    build_case_with_limit(id, DEFAULT_MAX_RANK)
}

pub fn build_case_with_limit(id: CaseId, max_n: usize) -> Result<GroupCase> {
    if id.n < MIN_RANK || id.n > max_n {
        return Err(Error::OutOfRange {
            n: id.n,
            min: MIN_RANK,
            max: max_n,
        });
    }
    let n = id.n;
    let d = id.ambient_dim();
    let e = |i: usize| HalfIntVec::unit(d, i);

    let (pos_roots, pos_roots_m, alpha, mult_alpha, mult_half_alpha, rho_alpha) = match id.family {
        Family::Real => {
            let all = type_bc_roots(d, 0, false);
            let m = type_bc_roots(d, 1, false);
            (
                all,
                m,
                e(0),
                2 * n - 1,
                0,
                HalfInt::from_doubled(2 * n as i64 - 1),
            )
        }
        Family::Complex => {
            let all = type_a_roots(d, 0, d);
            let m = type_a_roots(d, 1, d - 1);
            let alpha = &e(0) - &e(d - 1);
            (all, m, alpha, 1, 2 * n - 2, HalfInt::from_doubled(n as i64))
        }
        Family::Quaternionic => {
            let all = type_bc_roots(d, 0, true);
            let mut m = type_bc_roots(d, 2, true);
            m.push(&e(0) - &e(1));
            let alpha = &e(0) + &e(1);
            (
                all,
                m,
                alpha,
                3,
                4 * n - 4,
                HalfInt::from_doubled(2 * n as i64 + 1),
            )
        }
    };

    let k = id.k_dim();
    let ek = |i: usize| HalfIntVec::unit(k, i);
    let pos_roots_k = match id.family {
        Family::Real => type_d_roots(k),
        Family::Complex => type_a_roots(k, 0, k - 1),
        Family::Quaternionic => {
            let mut roots = type_bc_roots(k - 1, 0, true)
                .into_iter()
                .map(|r| pad(&r, k))
                .collect::<Vec<_>>();
            roots.push(ek(k - 1).scale_int(2));
            roots
        }
    };

    let pos_roots = sorted_roots(pos_roots);
    let pos_roots_m = sorted_roots(pos_roots_m);
    let pos_roots_k = sorted_roots(pos_roots_k);
    let rho = half_sum(&pos_roots, d);
    let rho_m = half_sum(&pos_roots_m, d);
    let rho_k = half_sum(&pos_roots_k, k);
    let rho_a = &rho - &rho_m;

    Ok(GroupCase {
        id,
        simple_roots: simple_roots(&pos_roots),
        simple_roots_m: simple_roots(&pos_roots_m),
        simple_roots_k: simple_roots(&pos_roots_k),
        pos_roots,
        pos_roots_m,
        pos_roots_k,
        alpha,
        rho,
        rho_m,
        rho_a,
        rho_k,
        rho_alpha,
        mult_alpha,
        mult_half_alpha,
    })
}

impl GroupCase {
    pub fn n(&self) -> usize {
        self.id.n
    }

    pub fn family(&self) -> Family {
        self.id.family
    }

    pub fn dim(&self) -> usize {
        self.id.ambient_dim()
    }

    /// Roots of `g` not in `m`; these pair nontrivially with `alpha`.
    pub fn noncompact_part(&self) -> impl Iterator<Item = &HalfIntVec> {
        self.pos_roots
            .iter()
            .filter(|r| !self.pos_roots_m.contains(r))
    }

    /// Coordinate of `lambda` along `alpha`: `<lambda, alpha> / <alpha, alpha>`.
    pub fn lambda_alpha(&self, lambda: &HalfIntVec) -> Result<Rational> {
        Ok(lambda.inner(&self.alpha)? / self.alpha.norm_sq())
    }

    pub fn positive_system_signs(&self, v: &HalfIntVec) -> Result<Vec<Sign>> {
        positive_system_signs(self, v)
    }

    pub fn is_regular(&self, v: &HalfIntVec) -> bool {
        self.pos_roots
            .iter()
            .all(|r| v.inner_unchecked(r) != Rational::from_integer(0))
    }
}

/// Sign of `<v, beta>` for each positive root, in the fixed root order.
pub fn positive_system_signs(case: &GroupCase, v: &HalfIntVec) -> Result<Vec<Sign>> {
    case.pos_roots
        .iter()
        .map(|r| {
            let p = v.inner(r)?;
            if p > Rational::from_integer(0) {
                Ok(Sign::Pos)
            } else if p < Rational::from_integer(0) {
                Ok(Sign::Neg)
            } else {
                Err(Error::SingularCharacter)
            }
        })
        .collect()
}

/// Half the sum of a list of roots.
pub fn half_sum(roots: &[HalfIntVec], dim: usize) -> HalfIntVec {
    let mut total = HalfIntVec::zeros(dim);
    for r in roots {
        total += r;
    }
    HalfIntVec::from_doubled(total.doubled().iter().map(|d| d / 2).collect())
}

/// Positive roots that are not a sum of two positive roots.
pub fn simple_roots(pos: &[HalfIntVec]) -> Vec<HalfIntVec> {
    pos.iter()
        .filter(|beta| {
            !pos.iter().any(|g| {
                let rest = *beta - g;
                pos.contains(&rest)
            })
        })
        .cloned()
        .collect()
}

fn sorted_roots(mut roots: Vec<HalfIntVec>) -> Vec<HalfIntVec> {
    roots.sort_by(|a, b| b.cmp(a));
    roots.dedup();
    roots
}

fn pad(v: &HalfIntVec, dim: usize) -> HalfIntVec {
    let mut d = v.doubled().to_vec();
    d.resize(dim, 0);
    HalfIntVec::from_doubled(d)
}

/// `e_i - e_j` for `from <= i < j < to`.
fn type_a_roots(dim: usize, from: usize, to: usize) -> Vec<HalfIntVec> {
    let mut out = Vec::new();
    for i in from..to {
        for j in i + 1..to {
            out.push(&HalfIntVec::unit(dim, i) - &HalfIntVec::unit(dim, j));
        }
    }
    out
}

fn type_d_roots(dim: usize) -> Vec<HalfIntVec> {
    let mut out = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let (a, b) = (HalfIntVec::unit(dim, i), HalfIntVec::unit(dim, j));
            out.push(&a - &b);
            out.push(&a + &b);
        }
    }
    out
}

/// `e_i +- e_j` together with `e_i` (type B) or `2 e_i` (type C), using the
/// coordinates `from..dim`.
fn type_bc_roots(dim: usize, from: usize, long: bool) -> Vec<HalfIntVec> {
    let mut out = Vec::new();
    for i in from..dim {
        let a = HalfIntVec::unit(dim, i);
        for j in i + 1..dim {
            let b = HalfIntVec::unit(dim, j);
            out.push(&a - &b);
            out.push(&a + &b);
        }
        out.push(if long { a.scale_int(2) } else { a });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hv(d: &[i64]) -> HalfIntVec {
        HalfIntVec::from_doubled(d.to_vec())
    }

    #[test]
    fn real_three() {
        let c = build_case(CaseId::new(Family::Real, 3)).unwrap();
        assert_eq!(c.pos_roots.len(), 9);
        assert_eq!(c.rho, hv(&[5, 3, 1]));
        assert_eq!(c.rho_m, hv(&[0, 3, 1]));
        assert_eq!(c.rho_k, hv(&[4, 2, 0]));
        assert_eq!(c.rho_alpha, HalfInt::from_doubled(5));
    }

    #[test]
    fn complex_three() {
        let c = build_case(CaseId::new(Family::Complex, 3)).unwrap();
        assert_eq!(c.pos_roots.len(), 6);
        assert_eq!(c.rho, hv(&[3, 1, -1, -3]));
        assert_eq!(c.rho_m, hv(&[0, 1, -1, 0]));
        assert_eq!(c.alpha.norm_sq(), Rational::from_integer(2));
    }

    #[test]
    fn quaternionic_four() {
        let c = build_case(CaseId::new(Family::Quaternionic, 4)).unwrap();
        assert_eq!(c.rho, hv(&[10, 8, 6, 4, 2]));
        assert_eq!(c.rho_m, hv(&[1, -1, 6, 4, 2]));
        assert_eq!(c.rho_k, hv(&[8, 6, 4, 2, 2]));
        assert_eq!(c.simple_roots_m.len(), 4);
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(
            build_case(CaseId::new(Family::Real, 1)),
            Err(Error::OutOfRange { .. })
        ));
        assert!(build_case_with_limit(CaseId::new(Family::Real, 13), 12).is_err());
    }

    #[test]
    fn singular_vector_rejected() {
        let c = build_case(CaseId::new(Family::Real, 2)).unwrap();
        assert_eq!(
            positive_system_signs(&c, &hv(&[2, 2])),
            Err(Error::SingularCharacter)
        );
        assert_eq!(
            positive_system_signs(&c, &hv(&[3, -1])).unwrap(),
            c.pos_roots
                .iter()
                .map(|r| if hv(&[3, -1]).inner(r).unwrap() > 0.into() {
                    Sign::Pos
                } else {
                    Sign::Neg
                })
                .collect::<Vec<_>>()
        );
    }
}
