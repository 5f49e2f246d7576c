//! K-types of differential forms and the end-to-end residue report.
//!
//! The bundle of `p`-forms on `G/K` is induced from the K-module
//! `Lambda^p` of the tangent space. Its irreducible pieces are:
//!
//! * Spin(2n,1): `tau_p` for `p < n`, and `tau_n^+ + tau_n^-` for `p = n`;
//! * SU(n,1): `sum over q+r = p, k <= min(q,r)` of `tau_{q-k,r-k}`;
//! * Sp(n,1): `tau_2 = tau_{0,2,2} + tau_{0,0,2} + tau_{1,0,0}`.
//!
//! Degrees above `n` are folded by Hodge duality `p -> 2n - p` in the real
//! and complex cases. Other quaternionic K-types are accepted directly.

use serde::{Deserialize, Serialize};

use crate::branching::{BranchEntry, KLabel, KTypeWeight};
use crate::error::{Error, Result};
use crate::exact_coords::HalfInt;
use crate::group_data::{CaseId, Family, GroupCase, Sign};
use crate::resolver::{resolve_all, ResidueRep, Resolver};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PFormKind {
    Degree { p: usize },
    Direct { tau: KLabel },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PFormSpec {
    pub case: CaseId,
    #[serde(flatten)]
    pub kind: PFormKind,
}

impl PFormSpec {
    pub fn degree(case: CaseId, p: usize) -> Result<Self> {
        let max = match case.family {
            Family::Real | Family::Complex => 2 * case.n,
            Family::Quaternionic => 2,
        };
        if p > max || (case.family == Family::Quaternionic && p == 1) {
            return Err(Error::OutOfRange { n: p, min: 0, max });
        }
        Ok(PFormSpec {
            case,
            kind: PFormKind::Degree { p },
        })
    }

    pub fn direct(case: CaseId, tau: KLabel) -> Result<Self> {
        let ok = matches!(
            (case.family, tau),
            (Family::Real, KLabel::Real { .. })
                | (Family::Complex, KLabel::Complex { .. })
                | (Family::Quaternionic, KLabel::Quaternionic { .. })
        );
        if !ok {
            return Err(Error::InvalidInput(format!(
                "{tau} is not a K-type label for {case}"
            )));
        }
        Ok(PFormSpec {
            case,
            kind: PFormKind::Direct { tau },
        })
    }

    /// The degree after Hodge folding, for a degree request.
    pub fn folded_degree(&self) -> Option<usize> {
        match self.kind {
            PFormKind::Degree { p } if p > self.case.n => Some(2 * self.case.n - p),
            PFormKind::Degree { p } => Some(p),
            PFormKind::Direct { .. } => None,
        }
    }
}

/// Labels of the irreducible K-types requested, in display order.
pub fn plabels(spec: &PFormSpec) -> Vec<KLabel> {
    let n = spec.case.n;
    let p = match spec.kind {
        PFormKind::Direct { tau } => return vec![tau],
        PFormKind::Degree { .. } => spec.folded_degree().unwrap_or(0),
    };
    match spec.case.family {
        Family::Real if p == n => vec![
            KLabel::Real {
                p,
                sign: Some(Sign::Pos),
            },
            KLabel::Real {
                p,
                sign: Some(Sign::Neg),
            },
        ],
        Family::Real => vec![KLabel::Real { p, sign: None }],
        Family::Complex => {
            let mut out = Vec::new();
            for k in 0..=p / 2 {
                for q in (k..=p - k).rev() {
                    out.push(KLabel::Complex {
                        a: q - k,
                        b: p - q - k,
                    });
                }
            }
            out
        }
        Family::Quaternionic if p == 0 => vec![KLabel::Quaternionic { r: 0, s: 0, t: 0 }],
        Family::Quaternionic => vec![
            KLabel::Quaternionic { r: 0, s: 2, t: 2 },
            KLabel::Quaternionic { r: 0, s: 0, t: 2 },
            KLabel::Quaternionic { r: 1, s: 0, t: 0 },
        ],
    }
}

pub fn ptypes(case: &GroupCase, spec: &PFormSpec) -> Result<Vec<KTypeWeight>> {
    if spec.case != case.id {
        return Err(Error::InvalidInput(format!(
            "p-form request for {} used with {}",
            spec.case, case.id
        )));
    }
    plabels(spec)
        .into_iter()
        .map(|l| KTypeWeight::from_label(case, l))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueRow {
    pub sigma: crate::branching::MTypeWeight,
    pub q: HalfInt,
    pub pole_index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residue: Option<ResidueRep>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KTypeReport {
    pub tau: KTypeWeight,
    pub dimension: u128,
    pub restriction: Vec<BranchEntry>,
    pub residues: Vec<ResidueRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PFormReport {
    pub spec: PFormSpec,
    pub ktypes: Vec<KTypeReport>,
}

/// Branching, poles up to index `max_k` and residues for every K-type of
/// the request.
pub fn report(case: &GroupCase, spec: &PFormSpec, max_k: usize) -> Result<PFormReport> {
    let mut ktypes = Vec::new();
    for tau in ptypes(case, spec)? {
        let restriction = Resolver::new(case, &tau)?.branching().entries.clone();
        let residues = resolve_all(case, &tau, max_k)?
            .into_iter()
            .map(|o| {
                let (residue, error) = match o.result {
                    Ok(r) => (Some(r), None),
                    Err(e) => (None, Some(e.to_string())),
                };
                ResidueRow {
                    sigma: o.sigma,
                    q: o.q,
                    pole_index: o.pole_index,
                    residue,
                    error,
                }
            })
            .collect();
        ktypes.push(KTypeReport {
            dimension: tau.dimension(case),
            tau,
            restriction,
            residues,
        });
    }
    Ok(PFormReport {
        spec: *spec,
        ktypes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_data::build_case;

    #[test]
    fn complex_two_forms() {
        let id = CaseId::new(Family::Complex, 4);
        let labels = plabels(&PFormSpec::degree(id, 2).unwrap());
        let expect = [(2, 0), (1, 1), (0, 2), (0, 0)];
        assert_eq!(labels.len(), 4);
        for (l, (a, b)) in labels.iter().zip(expect) {
            assert_eq!(*l, KLabel::Complex { a, b });
        }
        assert_eq!(plabels(&PFormSpec::degree(id, 6).unwrap()), labels);
    }

    #[test]
    fn real_middle_degree_splits() {
        let id = CaseId::new(Family::Real, 3);
        assert_eq!(plabels(&PFormSpec::degree(id, 3).unwrap()).len(), 2);
        assert_eq!(
            plabels(&PFormSpec::degree(id, 4).unwrap()),
            vec![KLabel::Real { p: 2, sign: None }]
        );
        assert!(PFormSpec::degree(id, 7).is_err());
    }

    #[test]
    fn quaternionic_ranges() {
        let id = CaseId::new(Family::Quaternionic, 3);
        assert!(PFormSpec::degree(id, 1).is_err());
        assert!(PFormSpec::direct(id, KLabel::Complex { a: 0, b: 0 }).is_err());
        let g = build_case(id).unwrap();
        let r = report(&g, &PFormSpec::degree(id, 2).unwrap(), 1).unwrap();
        assert_eq!(r.ktypes.len(), 3);
        assert!(r
            .ktypes
            .iter()
            .all(|k| k.residues.iter().all(|row| row.error.is_none())));
    }
}
