//! Infinitesimal characters, Casimir values and resonance data.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::branching::{KTypeWeight, MTypeWeight};
use crate::error::{Error, Result};
use crate::exact_coords::{rational_serde, HalfInt, HalfIntVec, Rational};
use crate::group_data::{CaseId, GroupCase};
use crate::plancherel::{pole_set, spectral_point};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InfChar {
    pub case: CaseId,
    pub coords: HalfIntVec,
}

/// A point of the spectral line: `i q` on the imaginary axis or a real `nu`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectralValue {
    Imaginary(HalfInt),
    Real(Rational),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResonancePair {
    pub q: HalfInt,
    /// Eigenvalue of the Casimir operator on the residue.
    #[serde(with = "rational_serde")]
    pub z: Rational,
    /// The spectral parameter squared, `-q^2 <alpha, alpha>`.
    #[serde(with = "rational_serde")]
    pub zeta_sq: Rational,
}

pub fn embed_m_weight(case: &GroupCase, sigma: &MTypeWeight) -> Result<HalfIntVec> {
    if sigma.case != case.id {
        return Err(Error::InvalidInput(format!(
            "M-type of {} used with {}",
            sigma.case, case.id
        )));
    }
    Ok(sigma.coords.clone())
}

/// `gamma = q alpha + sigma + rho_m`.
pub fn inf_character(case: &GroupCase, sigma: &MTypeWeight, q: HalfInt) -> Result<InfChar> {
    embed_m_weight(case, sigma)?;
    Ok(InfChar {
        case: case.id,
        coords: spectral_point(case, sigma, q)?,
    })
}

/// Scalar by which the Casimir acts on the principal series at `value`.
pub fn casimir_scalar(
    case: &GroupCase,
    sigma: &MTypeWeight,
    value: SpectralValue,
) -> Result<Rational> {
    let v = embed_m_weight(case, sigma)?.try_add(&case.rho_m)?;
    let alpha_sq = case.alpha.norm_sq();
    let along = match value {
        SpectralValue::Imaginary(q) => -(q.to_rational() * q.to_rational()) * alpha_sq,
        SpectralValue::Real(nu) => nu * nu * alpha_sq,
    };
    Ok(case.rho.norm_sq() - v.norm_sq() + along)
}

pub fn resonance_pair(case: &GroupCase, sigma: &MTypeWeight, q: HalfInt) -> Result<ResonancePair> {
    let poles = pole_set(case, sigma)?;
    if !poles.contains(q) {
        return Err(Error::NotAPole { q });
    }
    let gamma = inf_character(case, sigma, q)?.coords;
    let z = case.rho.norm_sq() - gamma.norm_sq();
    let v = &sigma.coords + &case.rho_m;
    let zeta_sq = z - case.rho.norm_sq() + v.norm_sq();
    if zeta_sq.is_zero() {
        return Err(Error::Internal("resonance at the origin".into()));
    }
    Ok(ResonancePair { q, z, zeta_sq })
}

/// `|mu + 2 rho_k|^2`.
pub fn vogan_norm(case: &GroupCase, mu: &KTypeWeight) -> Result<Rational> {
    let shifted = mu.coords.try_add(&case.rho_k.scale_int(2))?;
    Ok(shifted.norm_sq())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branching::{KLabel, MLabel};
    use crate::group_data::{build_case, Family};

    #[test]
    fn quaternionic_sigma_042_gamma() {
        let n = 7;
        let g = build_case(CaseId::new(Family::Quaternionic, n)).unwrap();
        let s = MTypeWeight::from_label(
            &g,
            MLabel::Quaternionic {
                a: 0,
                b: 4,
                c: HalfInt::from_int(2),
            },
        )
        .unwrap();
        let q = HalfInt::from_doubled(2 * n as i64 - 3);
        let gamma = inf_character(&g, &s, q).unwrap().coords;
        assert_eq!(gamma, HalfIntVec::from_ints(&[8, 3, 7, 6, 5, 4, 2, 1]));
    }

    #[test]
    fn casimir_agrees_with_gamma() {
        let g = build_case(CaseId::new(Family::Complex, 4)).unwrap();
        let s = MTypeWeight::from_label(&g, MLabel::Complex { l: 1, m: 2 }).unwrap();
        let q = HalfInt::from_doubled(1);
        let gamma = inf_character(&g, &s, q).unwrap().coords;
        let z = casimir_scalar(&g, &s, SpectralValue::Imaginary(q)).unwrap();
        assert_eq!(z, g.rho.norm_sq() - gamma.norm_sq());
    }

    #[test]
    fn trivial_residue_has_zero_casimir() {
        let g = build_case(CaseId::new(Family::Real, 4)).unwrap();
        let s = MTypeWeight::from_label(&g, MLabel::Real { l: 0 }).unwrap();
        let r = resonance_pair(&g, &s, g.rho_alpha).unwrap();
        assert!(r.z.is_zero());
        assert!(matches!(
            resonance_pair(&g, &s, HalfInt::from_int(1)),
            Err(Error::NotAPole { .. })
        ));
    }

    #[test]
    fn vogan_norm_of_trivial() {
        let g = build_case(CaseId::new(Family::Real, 3)).unwrap();
        let t = KTypeWeight::from_label(&g, KLabel::Real { p: 0, sign: None }).unwrap();
        assert_eq!(vogan_norm(&g, &t).unwrap(), Rational::from_integer(20));
    }
}
