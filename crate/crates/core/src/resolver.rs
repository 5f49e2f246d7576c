//! Identification of residue representations.
//!
//! For a K-type `tau`, an M-type `sigma` of `tau` and a pole `q`, the
//! residue lives in the principal series `I(sigma, q)`. Its constituents are
//! found by moving every principal series `I(delta, q')` with `delta` in
//! `tau|_M` and the same infinitesimal character to the trivial block, and
//! keeping the Langlands quotients that occur in all of them and nowhere
//! else. When no Langlands quotient qualifies, a discrete series is chosen.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::branching::{restrict_to_m, BranchingResult, KTypeWeight, MTypeWeight};
use crate::collingwood_tables::{
    build_table, match_trivial, SubquotientLabel, TrivialCharacterTable,
};
use crate::error::{Error, Result};
use crate::exact_coords::{HalfInt, HalfIntVec};
use crate::group_data::GroupCase;
use crate::inf_char::{inf_character, resonance_pair, ResonancePair};
use crate::plancherel::{pole_set, PoleSet};
use crate::weyl_orbits::{canonicalize, find_inducing_matches};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum OrbitLabel {
    Zero,
    Minimal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ConstituentKind {
    Langlands {
        sigma: MTypeWeight,
        q: HalfInt,
    },
    DiscreteSeries {
        hc_index: usize,
        hc_param: HalfIntVec,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "flag", rename_all = "snake_case")]
pub enum Flag {
    /// Two published values exist for the GK dimension of this subquotient.
    GkDiscrepancy { reported: usize, alternative: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constituent {
    pub kind: ConstituentKind,
    pub subquotient: SubquotientLabel,
    pub finite_dim: bool,
    pub gk_dim: usize,
    pub wavefront: OrbitLabel,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<Flag>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceMatch {
    pub delta: MTypeWeight,
    pub q_prime: HalfInt,
    pub chamber: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    pub gamma: HalfIntVec,
    pub chamber: (usize, usize),
    pub matches: Vec<TraceMatch>,
    pub candidates: Vec<SubquotientLabel>,
    pub cover: Vec<SubquotientLabel>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub discrete_series_rule: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueRep {
    pub tau: KTypeWeight,
    pub sigma: MTypeWeight,
    pub q: HalfInt,
    pub pole_index: usize,
    pub resonance: ResonancePair,
    pub constituents: Vec<Constituent>,
    pub trace: Trace,
}

/// One entry of a batch run; failures stay attached to their input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueOutcome {
    pub sigma: MTypeWeight,
    pub q: HalfInt,
    pub pole_index: usize,
    pub result: Result<ResidueRep>,
}

/// Per-`tau` state shared by all resolutions.
#[derive(Debug, Clone)]
pub struct Resolver<'a> {
    case: &'a GroupCase,
    tau: KTypeWeight,
    table: TrivialCharacterTable,
    branching: BranchingResult,
    poles: BTreeMap<HalfIntVec, PoleSet>,
}

impl<'a> Resolver<'a> {
    pub fn new(case: &'a GroupCase, tau: &KTypeWeight) -> Result<Self> {
        let branching = restrict_to_m(case, tau)?;
        let poles = branching
            .m_types()
            .map(|s| Ok((s.coords.clone(), pole_set(case, s)?)))
            .collect::<Result<_>>()?;
        Ok(Resolver {
            case,
            tau: tau.clone(),
            table: build_table(case)?,
            branching,
            poles,
        })
    }

    pub fn branching(&self) -> &BranchingResult {
        &self.branching
    }

    pub fn table(&self) -> &TrivialCharacterTable {
        &self.table
    }

    pub fn poles(&self, sigma: &MTypeWeight) -> Option<&PoleSet> {
        self.poles.get(&sigma.coords)
    }

    /// M-types of `tau` in label order.
    pub fn m_types(&self) -> Vec<MTypeWeight> {
        let mut out: Vec<MTypeWeight> = self.branching.m_types().cloned().collect();
        out.sort_by(|a, b| (a.label, &a.coords).cmp(&(b.label, &b.coords)));
        out
    }

    pub fn resolve(&self, sigma: &MTypeWeight, q: HalfInt) -> Result<ResidueRep> {
        let case = self.case;
        let multiplicity = self.branching.multiplicity(&sigma.coords);
        if multiplicity == 0 {
            return Err(Error::InvalidInput(format!(
                "{sigma} does not occur in {}",
                self.tau
            )));
        }
        let poles = &self.poles[&sigma.coords];
        let pole_index = poles.index_of(q).ok_or(Error::NotAPole { q })?;
        let resonance = resonance_pair(case, sigma, q)?;

        let gamma = inf_character(case, sigma, q)?.coords;
        let chamber = match_trivial(&self.table, case, &gamma)?;

        let candidates_m: Vec<MTypeWeight> = self.branching.m_types().cloned().collect();
        let mut matches = Vec::new();
        for m in find_inducing_matches(case, &gamma, &candidates_m)? {
            let g = inf_character(case, &m.delta, m.q_prime)?.coords;
            matches.push(TraceMatch {
                chamber: match_trivial(&self.table, case, &g)?,
                delta: m.delta,
                q_prime: m.q_prime,
            });
        }
        let matched: BTreeSet<(usize, usize)> = matches.iter().map(|m| m.chamber).collect();
        if !matched.contains(&chamber) {
            return Err(Error::Internal(
                "the query is missing from its own matches".into(),
            ));
        }

        let candidates: Vec<SubquotientLabel> = matched
            .iter()
            .map(|&(i, j)| SubquotientLabel::ps(i, j))
            .filter(|l| self.table.occurrences(l).is_subset(&matched))
            .collect();

        let mut trace = Trace {
            gamma: gamma.clone(),
            chamber,
            matches,
            candidates: candidates.clone(),
            cover: Vec::new(),
            discrete_series_rule: None,
        };

        let mut bounds: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for m in &trace.matches {
            let mult = self.branching.multiplicity(&m.delta.coords);
            let entry = bounds.entry(m.chamber).or_insert(0);
            *entry = (*entry).max(mult);
        }
        let constituents = match self.minimum_cover(&candidates, &bounds)? {
            Some(cover) => {
                trace.cover = cover.clone();
                let own = self.table.diagram(chamber)?;
                let picked: Vec<SubquotientLabel> =
                    cover.into_iter().filter(|l| own.contains(l)).collect();
                if picked.is_empty() {
                    return Err(Error::Internal("cover misses the query diagram".into()));
                }
                if picked.len() > multiplicity as usize {
                    return Err(Error::AmbiguousComposition(format!(
                        "{} constituents for an M-type of multiplicity {multiplicity}",
                        picked.len()
                    )));
                }
                picked
                    .into_iter()
                    .map(|label| self.langlands_constituent(label, &trace.matches))
                    .collect::<Result<Vec<_>>>()?
            }
            None => {
                let (constituent, rule) = self.discrete_series(&gamma, &matched)?;
                trace.discrete_series_rule = Some(rule);
                vec![constituent]
            }
        };

        Ok(ResidueRep {
            tau: self.tau.clone(),
            sigma: sigma.clone(),
            q,
            pole_index,
            resonance,
            constituents,
            trace,
        })
    }

    /// The unique smallest set of candidates meeting every matched diagram.
    fn minimum_cover(
        &self,
        candidates: &[SubquotientLabel],
        matched: &BTreeMap<(usize, usize), u32>,
    ) -> Result<Option<Vec<SubquotientLabel>>> {
        // By Frobenius reciprocity `tau` occurs in a matched principal series
        // as often as the inducing M-type occurs in `tau`, so a diagram can
        // hold at most that many constituents.
        let covers = |set: &[SubquotientLabel]| {
            matched.iter().all(|(&c, &mult)| {
                let d = &self.table.diagrams[&c];
                let hits = set.iter().filter(|l| d.contains(l)).count();
                hits >= 1 && hits <= mult as usize
            })
        };
        for size in 1..=candidates.len() {
            let found: Vec<Vec<SubquotientLabel>> = subsets(candidates, size)
                .into_iter()
                .filter(|s| covers(s))
                .collect();
            match found.len() {
                0 => continue,
                1 => return Ok(found.into_iter().next()),
                _ => {
                    let shown: Vec<String> = found
                        .iter()
                        .map(|s| {
                            s.iter()
                                .map(|l| l.to_string())
                                .collect::<Vec<_>>()
                                .join("+")
                        })
                        .collect();
                    return Err(Error::AmbiguousComposition(format!(
                        "several minimal covers: {}",
                        shown.join(", ")
                    )));
                }
            }
        }
        Ok(None)
    }

    fn make_constituent(&self, kind: ConstituentKind, label: SubquotientLabel) -> Constituent {
        let finite_dim = self.table.is_finite_dim(&label);
        let gk_dim = self.table.gk_dim(&label);
        let flags = self
            .table
            .gk_alternative(&label)
            .map(|alternative| Flag::GkDiscrepancy {
                reported: gk_dim,
                alternative,
            })
            .into_iter()
            .collect();
        Constituent {
            kind,
            subquotient: label,
            finite_dim,
            gk_dim,
            wavefront: if finite_dim {
                OrbitLabel::Zero
            } else {
                OrbitLabel::Minimal
            },
            flags,
        }
    }

    fn langlands_constituent(
        &self,
        label: SubquotientLabel,
        matches: &[TraceMatch],
    ) -> Result<Constituent> {
        let chamber = label
            .chamber()
            .ok_or_else(|| Error::Internal(format!("{label} is not a Langlands quotient")))?;
        let m = matches
            .iter()
            .find(|m| m.chamber == chamber)
            .ok_or_else(|| Error::Internal(format!("no inducing data for {label}")))?;
        let kind = ConstituentKind::Langlands {
            sigma: m.delta.clone(),
            q: m.q_prime,
        };
        Ok(self.make_constituent(kind, label))
    }

    fn discrete_series(
        &self,
        gamma: &HalfIntVec,
        matched: &BTreeSet<(usize, usize)>,
    ) -> Result<(Constituent, String)> {
        let mut common: Option<BTreeSet<usize>> = None;
        for c in matched {
            let here: BTreeSet<usize> = self.table.diagrams[c]
                .labels()
                .filter_map(|l| match l {
                    SubquotientLabel::Ds { index } => Some(*index),
                    SubquotientLabel::Ps { .. } => None,
                })
                .collect();
            common = Some(match common {
                None => here,
                Some(prev) => prev.intersection(&here).copied().collect(),
            });
        }
        let common: Vec<usize> = common.unwrap_or_default().into_iter().collect();
        let (index, rule) = match common.as_slice() {
            [] => {
                return Err(Error::AmbiguousDiscreteSeries {
                    candidates: Vec::new(),
                });
            }
            [only] => (
                *only,
                "unique discrete series common to all matched diagrams".to_string(),
            ),
            _ => {
                let passing: Vec<usize> = common
                    .iter()
                    .copied()
                    .filter(|&l| self.blattner_admits(gamma, l))
                    .collect();
                match passing.as_slice() {
                    [only] => (
                        *only,
                        "only candidate whose lowest K-type lies below tau".to_string(),
                    ),
                    _ => return Err(Error::AmbiguousDiscreteSeries { candidates: common }),
                }
            }
        };
        let hc_param = self.hc_parameter(gamma, index)?;
        let kind = ConstituentKind::DiscreteSeries {
            hc_index: index,
            hc_param,
        };
        Ok((
            self.make_constituent(kind, SubquotientLabel::ds(index)),
            rule,
        ))
    }

    /// The element of the orbit of `gamma` in the chamber of `DS(index)`.
    fn hc_parameter(&self, gamma: &HalfIntVec, index: usize) -> Result<HalfIntVec> {
        let base = &self.table.ds_chars[&index];
        let rho_key = canonicalize(self.case, &self.case.rho).key;
        let gamma_key = canonicalize(self.case, gamma).key;
        let abs_based = self.case.family() != crate::group_data::Family::Complex;
        let coords =
            base.coords()
                .into_iter()
                .map(|x| {
                    let probe = if abs_based { x.abs() } else { x };
                    let rank = rho_key.iter().position(|&y| y == probe).ok_or_else(|| {
                        Error::Internal(format!("{base} is not in the orbit of rho"))
                    })?;
                    let value = gamma_key[rank];
                    Ok(if abs_based && x < HalfInt::ZERO {
                        -value
                    } else {
                        value
                    })
                })
                .collect::<Result<Vec<_>>>()?;
        Ok(HalfIntVec::from_halfints(&coords))
    }

    /// Whether `tau` minus the lowest K-type of `DS(index)` at `gamma` is a
    /// sum of positive noncompact roots.
    fn blattner_admits(&self, gamma: &HalfIntVec, index: usize) -> bool {
        let Ok(lambda) = self.hc_parameter(gamma, index) else {
            return false;
        };
        let compact: BTreeSet<HalfIntVec> = self
            .case
            .pos_roots_k
            .iter()
            .flat_map(|r| [r.clone(), -r])
            .collect();
        let noncompact: Vec<HalfIntVec> = self
            .case
            .pos_roots
            .iter()
            .flat_map(|r| [r.clone(), -r])
            .filter(|r| !compact.contains(r))
            .filter(|r| r.inner_unchecked(&lambda) > 0.into())
            .collect();
        let dim = lambda.dim();
        let mut rho_n = HalfIntVec::zeros(dim);
        for r in &noncompact {
            rho_n += r;
        }
        let rho_n = HalfIntVec::from_doubled(rho_n.doubled().iter().map(|d| d / 2).collect());
        let lowest = &(&lambda + &rho_n) - &self.case.rho_k;
        let target = &self.tau.coords - &lowest;
        in_cone(&target, &noncompact, &lambda, 0)
    }
}

fn in_cone(target: &HalfIntVec, gens: &[HalfIntVec], lambda: &HalfIntVec, from: usize) -> bool {
    if target.is_zero() {
        return true;
    }
    if target.inner_unchecked(lambda) <= 0.into() {
        return false;
    }
    (from..gens.len()).any(|i| in_cone(&(target - &gens[i]), gens, lambda, i))
}

fn subsets<T: Clone>(items: &[T], size: usize) -> Vec<Vec<T>> {
    if size == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, x) in items.iter().enumerate() {
        for mut rest in subsets(&items[i + 1..], size - 1) {
            rest.insert(0, x.clone());
            out.push(rest);
        }
    }
    out
}

pub fn resolve(
    case: &GroupCase,
    tau: &KTypeWeight,
    sigma: &MTypeWeight,
    q: HalfInt,
) -> Result<ResidueRep> {
    Resolver::new(case, tau)?.resolve(sigma, q)
}

/// Every `(sigma, pole)` with pole index at most `max_k`, ordered by `sigma`
/// label and then by `q`.
pub fn resolve_all(
    case: &GroupCase,
    tau: &KTypeWeight,
    max_k: usize,
) -> Result<Vec<ResidueOutcome>> {
    let resolver = Resolver::new(case, tau)?;
    let mut out = Vec::new();
    for sigma in resolver.m_types() {
        let poles = resolver
            .poles(&sigma)
            .expect("pole set for each M-type")
            .up_to(max_k);
        for p in poles {
            out.push(ResidueOutcome {
                sigma: sigma.clone(),
                q: p.q,
                pole_index: p.pole_index,
                result: resolver.resolve(&sigma, p.q),
            });
        }
    }
    Ok(out)
}
