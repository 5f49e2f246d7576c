//! Poles of the Plancherel density on the imaginary axis.
//!
//! For an M-type `sigma` with `v = sigma + rho_m`, the polynomial part of the
//! density is the product of `<q alpha + v, eta>` over the positive roots
//! `eta` outside `m`. Its zeros on the positive axis are `|<eta, v>| /
//! |<eta, alpha>|`. The non-polynomial factor has simple poles on one of the
//! lattices `Z_{>0}` or `Z_{>0} - 1/2`; the poles of the density are the
//! lattice points that the polynomial does not cancel.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::branching::MTypeWeight;
use crate::error::{Error, Result};
use crate::exact_coords::{HalfInt, HalfIntVec};
use crate::group_data::{CaseId, GroupCase};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpectralParam {
    pub q: HalfInt,
    pub pole_index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoleSet {
    pub case: CaseId,
    pub sigma: MTypeWeight,
    /// `0` for the integer lattice, `1/2` for the half-integer one.
    pub lattice_offset: HalfInt,
    pub zeros: BTreeSet<HalfInt>,
}

impl PoleSet {
    pub fn is_lattice_point(&self, q: HalfInt) -> bool {
        q > HalfInt::ZERO && (q - self.lattice_offset).is_integer()
    }

    pub fn contains(&self, q: HalfInt) -> bool {
        self.is_lattice_point(q) && !self.zeros.contains(&q)
    }

    /// All poles in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = SpectralParam> + '_ {
        let start = if self.lattice_offset.is_zero() {
            HalfInt::ONE
        } else {
            self.lattice_offset
        };
        (0..)
            .map(move |k| start + HalfInt::ONE * k)
            .filter(|q| !self.zeros.contains(q))
            .enumerate()
            .map(|(pole_index, q)| SpectralParam { q, pole_index })
    }

    /// Poles with index `0..=max_k`.
    pub fn up_to(&self, max_k: usize) -> Vec<SpectralParam> {
        self.iter().take(max_k + 1).collect()
    }

    pub fn index_of(&self, q: HalfInt) -> Option<usize> {
        if !self.contains(q) {
            return None;
        }
        self.iter().find(|p| p.q == q).map(|p| p.pole_index)
    }
}

/// Zeros `q >= 0` of the polynomial factor of the density.
pub fn polynomial_zeros(case: &GroupCase, sigma: &MTypeWeight) -> Result<BTreeSet<HalfInt>> {
    let v = &sigma.coords + &case.rho_m;
    let mut out = BTreeSet::new();
    for eta in case.noncompact_part() {
        let a = eta.inner(&case.alpha)?;
        if a.is_zero() {
            return Err(Error::Internal(format!(
                "root {eta} outside m is orthogonal to alpha"
            )));
        }
        let q = (eta.inner(&v)? / a).abs();
        out.insert(
            HalfInt::from_rational(q)
                .map_err(|_| Error::Internal(format!("non half-integral zero for root {eta}")))?,
        );
    }
    Ok(out)
}

pub fn pole_set(case: &GroupCase, sigma: &MTypeWeight) -> Result<PoleSet> {
    let zeros = polynomial_zeros(case, sigma)?;
    let positive: Vec<HalfInt> = zeros.iter().copied().filter(|q| !q.is_zero()).collect();
    let lattice_offset = match positive.first() {
        None => HalfInt::ZERO,
        Some(first) => {
            if positive
                .iter()
                .any(|q| q.is_integer() != first.is_integer())
            {
                return Err(Error::Internal(format!(
                    "zeros of the density for {sigma} mix integral and half-integral values"
                )));
            }
            if first.is_integer() {
                HalfInt::ZERO
            } else {
                HalfInt::HALF
            }
        }
    };
    Ok(PoleSet {
        case: case.id,
        sigma: sigma.clone(),
        lattice_offset,
        zeros,
    })
}

/// Whether `q alpha + sigma + rho_m` is regular for `g`.
pub fn check_regularity(case: &GroupCase, sigma: &MTypeWeight, q: HalfInt) -> Result<bool> {
    let gamma = spectral_point(case, sigma, q)?;
    Ok(case.is_regular(&gamma))
}

pub(crate) fn spectral_point(
    case: &GroupCase,
    sigma: &MTypeWeight,
    q: HalfInt,
) -> Result<HalfIntVec> {
    let v = sigma.coords.try_add(&case.rho_m)?;
    let shift = case.alpha.scale_half(q)?;
    v.try_add(&shift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branching::MLabel;
    use crate::group_data::{build_case, Family};

    fn h(d: i64) -> HalfInt {
        HalfInt::from_doubled(d)
    }

    #[test]
    fn real_three_sigma_one() {
        let g = build_case(CaseId::new(Family::Real, 3)).unwrap();
        let s = MTypeWeight::from_label(&g, MLabel::Real { l: 1 }).unwrap();
        let p = pole_set(&g, &s).unwrap();
        let qs: Vec<HalfInt> = p.up_to(3).iter().map(|x| x.q).collect();
        assert_eq!(qs, vec![h(3), h(7), h(9), h(11)]);
        assert!(!p.contains(h(5)));
    }

    #[test]
    fn complex_trivial_in_rank_two_uses_integers() {
        let g = build_case(CaseId::new(Family::Complex, 2)).unwrap();
        let s = MTypeWeight::from_label(&g, MLabel::Complex { l: 0, m: 0 }).unwrap();
        let p = pole_set(&g, &s).unwrap();
        let qs: Vec<HalfInt> = p.up_to(2).iter().map(|x| x.q).collect();
        assert_eq!(qs, vec![h(2), h(4), h(6)]);
    }

    #[test]
    fn quaternionic_sigma_001() {
        let n = 5;
        let g = build_case(CaseId::new(Family::Quaternionic, n)).unwrap();
        let s = MTypeWeight::from_label(
            &g,
            MLabel::Quaternionic {
                a: 0,
                b: 0,
                c: h(2),
            },
        )
        .unwrap();
        let p = pole_set(&g, &s).unwrap();
        assert_eq!(p.up_to(0)[0].q, h(2 * n as i64 + 3));
        for pole in p.up_to(6) {
            assert!(check_regularity(&g, &s, pole.q).unwrap());
        }
    }
}
