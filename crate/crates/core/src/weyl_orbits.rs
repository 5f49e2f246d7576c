//! Weyl group orbits of infinitesimal characters.
//!
//! The Weyl group is the signed permutation group for Spin(2n,1) and
//! Sp(n,1), and the symmetric group on `n+1` letters for SU(n,1). Orbits are
//! compared through canonical forms: sorted absolute values in the first two
//! cases, sorted coordinates in the last.

use serde::{Deserialize, Serialize};

use crate::branching::MTypeWeight;
use crate::error::Result;
use crate::exact_coords::{HalfInt, HalfIntVec};
use crate::group_data::{CaseId, Family, GroupCase};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitCanonicalForm {
    pub case: CaseId,
    pub key: Vec<HalfInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducingMatch {
    pub delta: MTypeWeight,
    pub q_prime: HalfInt,
}

pub fn canonicalize(case: &GroupCase, v: &HalfIntVec) -> OrbitCanonicalForm {
    let key = match case.family() {
        Family::Real | Family::Quaternionic => v.abs_sorted_desc(),
        Family::Complex => v.sorted_desc(),
    };
    OrbitCanonicalForm { case: case.id, key }
}

pub fn same_orbit(case: &GroupCase, a: &HalfIntVec, b: &HalfIntVec) -> bool {
    canonicalize(case, a) == canonicalize(case, b)
}

/// Removes each element of `sub` once from `pool`; `None` if some is missing.
fn multiset_minus(pool: &[HalfInt], sub: &[HalfInt]) -> Option<Vec<HalfInt>> {
    let mut rest = pool.to_vec();
    for x in sub {
        let pos = rest.iter().position(|y| y == x)?;
        rest.swap_remove(pos);
    }
    rest.sort_unstable_by(|a, b| b.cmp(a));
    Some(rest)
}

/// Every `(delta, q')` with `q' > 0` and `q' alpha + delta + rho_m` in the
/// Weyl orbit of `gamma`.
pub fn find_inducing_matches(
    case: &GroupCase,
    gamma: &HalfIntVec,
    candidates: &[MTypeWeight],
) -> Result<Vec<InducingMatch>> {
    let mut out = Vec::new();
    for delta in candidates {
        let v = delta.coords.try_add(&case.rho_m)?;
        if let Some(q_prime) = solve_q(case, gamma, &v) {
            if q_prime > HalfInt::ZERO {
                out.push(InducingMatch {
                    delta: delta.clone(),
                    q_prime,
                });
            }
        }
    }
    Ok(out)
}

fn solve_q(case: &GroupCase, gamma: &HalfIntVec, v: &HalfIntVec) -> Option<HalfInt> {
    let n = case.n();
    match case.family() {
        Family::Real => {
            let sub: Vec<HalfInt> = v.coords()[1..].iter().map(|x| x.abs()).collect();
            let rest = multiset_minus(&gamma.abs_sorted_desc(), &sub)?;
            Some(rest[0])
        }
        Family::Complex => {
            let sub = v.coords()[1..n].to_vec();
            let rest = multiset_minus(&gamma.coords(), &sub)?;
            let (a, b) = (rest[0], rest[1]);
            // The two free slots are `c + q` and `c - q`.
            let c = v.get(0);
            if (a + b) != c * 2 {
                return None;
            }
            HalfInt::from_rational((a - b).to_rational() / 2).ok()
        }
        Family::Quaternionic => {
            let sub: Vec<HalfInt> = v.coords()[2..].iter().map(|x| x.abs()).collect();
            let rest = multiset_minus(&gamma.abs_sorted_desc(), &sub)?;
            let (a, b) = (rest[0], rest[1]);
            // The two free slots are `q + s` and `q - s`.
            let s = v.get(0);
            let q = a - s;
            ((q - s).abs() == b).then_some(q)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branching::MLabel;
    use crate::group_data::build_case;
    use crate::inf_char::inf_character;

    #[test]
    fn canonical_forms() {
        let g = build_case(CaseId::new(Family::Quaternionic, 2)).unwrap();
        let v = HalfIntVec::from_ints(&[-1, 3, 2]);
        assert_eq!(
            canonicalize(&g, &v).key,
            vec![
                HalfInt::from_int(3),
                HalfInt::from_int(2),
                HalfInt::from_int(1)
            ]
        );
        let g = build_case(CaseId::new(Family::Complex, 2)).unwrap();
        assert!(same_orbit(
            &g,
            &HalfIntVec::from_ints(&[1, 0, -1]),
            &HalfIntVec::from_ints(&[-1, 1, 0])
        ));
    }

    #[test]
    fn self_match_is_found() {
        let g = build_case(CaseId::new(Family::Quaternionic, 4)).unwrap();
        let s = MTypeWeight::from_label(
            &g,
            MLabel::Quaternionic {
                a: 0,
                b: 1,
                c: HalfInt::from_doubled(3),
            },
        )
        .unwrap();
        let q = HalfInt::from_doubled(13);
        let gamma = inf_character(&g, &s, q).unwrap().coords;
        let m = find_inducing_matches(&g, &gamma, std::slice::from_ref(&s)).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].q_prime, q);
    }
}
