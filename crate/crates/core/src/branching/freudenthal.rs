//! Freudenthal's multiplicity formula and a branching oracle built on it.
//!
//! Multiplicities are computed for dominant weights only, then spread over
//! Weyl orbits when a full character is needed. Arithmetic runs on doubled
//! coordinates, so all pairings are integers (four times the true value).

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::exact_coords::HalfIntVec;
use crate::group_data::{Family, GroupCase};

use super::{BranchingResult, KTypeWeight};

pub const DEFAULT_DIMENSION_BOUND: u128 = 5_000_000;

fn raw_inner(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn reflect_raw(v: &mut [i64], root: &[i64]) {
    let k = 2 * raw_inner(v, root) / raw_inner(root, root);
    for (x, r) in v.iter_mut().zip(root) {
        *x -= k * r;
    }
}

/// Moves `w` into the closed dominant chamber by simple reflections.
pub fn dominant_representative(simple_roots: &[HalfIntVec], w: &HalfIntVec) -> HalfIntVec {
    let mut v = w.doubled().to_vec();
    dominant_in_place(simple_roots, &mut v);
    HalfIntVec::from_doubled(v)
}

fn dominant_in_place(simple_roots: &[HalfIntVec], v: &mut [i64]) {
    loop {
        let mut moved = false;
        for a in simple_roots {
            if raw_inner(v, a.doubled()) < 0 {
                reflect_raw(v, a.doubled());
                moved = true;
            }
        }
        if !moved {
            return;
        }
    }
}

/// Weyl orbit of `w` under the group generated by `simple_roots`.
pub fn weyl_orbit(simple_roots: &[HalfIntVec], w: &HalfIntVec) -> Vec<HalfIntVec> {
    let mut seen: HashSet<Vec<i64>> = HashSet::from([w.doubled().to_vec()]);
    let mut queue = VecDeque::from([w.doubled().to_vec()]);
    while let Some(v) = queue.pop_front() {
        for a in simple_roots {
            let mut u = v.clone();
            reflect_raw(&mut u, a.doubled());
            if seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    let mut out: Vec<HalfIntVec> = seen.into_iter().map(HalfIntVec::from_doubled).collect();
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDiagram {
    pub highest: HalfIntVec,
    pub simple_roots: Vec<HalfIntVec>,
    /// Multiplicities of the dominant weights.
    pub dominant: BTreeMap<HalfIntVec, u64>,
}

impl WeightDiagram {
    pub fn compute(
        pos_roots: &[HalfIntVec],
        simple_roots: &[HalfIntVec],
        highest: &HalfIntVec,
    ) -> Result<Self> {
        let dim = highest.dim();
        let mut rho2 = vec![0i64; dim];
        for r in pos_roots {
            for (x, y) in rho2.iter_mut().zip(r.doubled()) {
                *x += y;
            }
        }
        // `rho2` is 2 rho in doubled units; pairings below carry that factor.
        let lam = highest.doubled().to_vec();
        if simple_roots
            .iter()
            .any(|a| raw_inner(&lam, a.doubled()) < 0)
        {
            return Err(Error::InvalidWeight(format!("{highest} is not dominant")));
        }

        let mut dominant: BTreeSet<Vec<i64>> = BTreeSet::from([lam.clone()]);
        let mut queue = VecDeque::from([lam.clone()]);
        while let Some(mu) = queue.pop_front() {
            for beta in pos_roots {
                let nu: Vec<i64> = mu.iter().zip(beta.doubled()).map(|(a, b)| a - b).collect();
                if simple_roots
                    .iter()
                    .all(|a| raw_inner(&nu, a.doubled()) >= 0)
                    && dominant.insert(nu.clone())
                {
                    queue.push_back(nu);
                }
            }
        }

        let height = |v: &[i64]| raw_inner(v, &rho2);
        let mut order: Vec<Vec<i64>> = dominant.into_iter().collect();
        order.sort_by_key(|v| std::cmp::Reverse(height(v)));

        let top = height(&lam);
        let shifted_norm = |v: &[i64]| {
            let s: Vec<i64> = v.iter().zip(&rho2).map(|(a, r)| 2 * a + r).collect();
            raw_inner(&s, &s)
        };
        let lam_norm = shifted_norm(&lam);

        let mut mult: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
        mult.insert(lam.clone(), 1);
        for mu in order.iter().skip(1) {
            let mut sum: i64 = 0;
            for beta in pos_roots {
                let b = beta.doubled();
                let mut cur: Vec<i64> = mu.iter().zip(b).map(|(x, y)| x + y).collect();
                while height(&cur) <= top {
                    let mut rep = cur.clone();
                    dominant_in_place(simple_roots, &mut rep);
                    if let Some(&m) = mult.get(&rep) {
                        sum += m as i64 * raw_inner(&cur, b);
                    }
                    for (x, y) in cur.iter_mut().zip(b) {
                        *x += y;
                    }
                }
            }
            // `den` is 16 (|lam + rho|^2 - |mu + rho|^2) and `sum` is 4 times the true sum.
            let den = lam_norm - shifted_norm(mu);
            let num = 2 * sum * 4;
            if den <= 0 || num % den != 0 {
                return Err(Error::Internal(format!(
                    "Freudenthal recursion failed at {}",
                    HalfIntVec::from_doubled(mu.clone())
                )));
            }
            let m = num / den;
            if m > 0 {
                mult.insert(mu.clone(), m as u64);
            }
        }

        Ok(WeightDiagram {
            highest: highest.clone(),
            simple_roots: simple_roots.to_vec(),
            dominant: mult
                .into_iter()
                .map(|(k, v)| (HalfIntVec::from_doubled(k), v))
                .collect(),
        })
    }

    pub fn multiplicity(&self, w: &HalfIntVec) -> u64 {
        let rep = dominant_representative(&self.simple_roots, w);
        self.dominant.get(&rep).copied().unwrap_or(0)
    }

    /// Every weight with its multiplicity.
    pub fn all_weights(&self) -> Vec<(HalfIntVec, u64)> {
        let mut out = Vec::new();
        for (dom, &m) in &self.dominant {
            for w in weyl_orbit(&self.simple_roots, dom) {
                out.push((w, m));
            }
        }
        out.sort();
        out
    }

    pub fn dimension(&self) -> u64 {
        self.dominant
            .iter()
            .map(|(w, m)| m * weyl_orbit(&self.simple_roots, w).len() as u64)
            .sum()
    }
}

/// Sends a weight in K coordinates to the `h*` coordinates of `M`.
pub fn project_k_to_m(case: &GroupCase, w: &HalfIntVec) -> HalfIntVec {
    let n = case.n();
    let d = w.doubled();
    let out = match case.family() {
        Family::Real => {
            let mut v = vec![0];
            v.extend_from_slice(&d[..n - 1]);
            v
        }
        Family::Complex => {
            // Doubled coordinates: `2c = w_1 + w_{n+1}`.
            let c = (d[0] + d[n]) / 2;
            let mut v = vec![c];
            v.extend_from_slice(&d[1..n]);
            v.push(c);
            v
        }
        Family::Quaternionic => {
            let c = (d[0] + d[n]) / 2;
            let mut v = vec![c, -c];
            v.extend_from_slice(&d[1..n]);
            v
        }
    };
    HalfIntVec::from_doubled(out)
}

/// Decomposes `tau|_M` from weight multiplicities alone.
pub fn freudenthal_oracle(case: &GroupCase, tau: &KTypeWeight) -> Result<BranchingResult> {
    freudenthal_oracle_bounded(case, tau, DEFAULT_DIMENSION_BOUND)
}

pub fn freudenthal_oracle_bounded(
    case: &GroupCase,
    tau: &KTypeWeight,
    bound: u128,
) -> Result<BranchingResult> {
    let dim = tau.dimension(case);
    if dim > bound {
        return Err(Error::DimensionBoundExceeded { dim, bound });
    }
    let k_diag = WeightDiagram::compute(&case.pos_roots_k, &case.simple_roots_k, &tau.coords)?;

    let m_dominant = |v: &HalfIntVec| {
        case.simple_roots_m
            .iter()
            .all(|a| raw_inner(v.doubled(), a.doubled()) >= 0)
    };
    let mut remaining: BTreeMap<HalfIntVec, i64> = BTreeMap::new();
    for (w, m) in k_diag.all_weights() {
        let p = project_k_to_m(case, &w);
        if m_dominant(&p) {
            *remaining.entry(p).or_insert(0) += m as i64;
        }
    }

    let rho_m = case.rho_m.doubled().to_vec();
    let mut found: BTreeMap<HalfIntVec, u32> = BTreeMap::new();
    while let Some(top) = remaining
        .keys()
        .max_by_key(|w| (raw_inner(w.doubled(), &rho_m), (*w).clone()))
        .cloned()
    {
        let k = remaining[&top];
        if k <= 0 {
            return Err(Error::Internal(format!("negative multiplicity at {top}")));
        }
        let m_diag = WeightDiagram::compute(&case.pos_roots_m, &case.simple_roots_m, &top)?;
        for (w, m) in &m_diag.dominant {
            let entry = remaining.get_mut(w).ok_or_else(|| {
                Error::Internal(format!("missing weight {w} while peeling {top}"))
            })?;
            *entry -= k * *m as i64;
            if *entry < 0 {
                return Err(Error::Internal(format!("negative multiplicity at {w}")));
            }
        }
        remaining.retain(|_, v| *v != 0);
        found.insert(top, k as u32);
    }
    BranchingResult::from_map(case, tau, found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branching::{weyl_dimension, KLabel};
    use crate::group_data::{build_case, CaseId};

    #[test]
    fn adjoint_of_sp2() {
        let g = build_case(CaseId::new(Family::Quaternionic, 2)).unwrap();
        let tau = KTypeWeight::from_label(&g, KLabel::Quaternionic { r: 1, s: 0, t: 0 }).unwrap();
        let d = WeightDiagram::compute(&g.pos_roots_k, &g.simple_roots_k, &tau.coords).unwrap();
        assert_eq!(d.multiplicity(&HalfIntVec::zeros(3)), 2);
        assert_eq!(d.dimension(), 10);
    }

    #[test]
    fn dimension_matches_weyl() {
        let g = build_case(CaseId::new(Family::Real, 4)).unwrap();
        let lam = HalfIntVec::from_ints(&[2, 1, 1, -1]);
        let d = WeightDiagram::compute(&g.pos_roots_k, &g.simple_roots_k, &lam).unwrap();
        assert_eq!(
            d.dimension() as u128,
            weyl_dimension(&g.pos_roots_k, &g.rho_k, &lam)
        );
    }

    #[test]
    fn oracle_matches_rule_small() {
        let g = build_case(CaseId::new(Family::Quaternionic, 3)).unwrap();
        let tau = KTypeWeight::from_label(&g, KLabel::Quaternionic { r: 1, s: 1, t: 2 }).unwrap();
        let rule = crate::branching::restrict_to_m(&g, &tau).unwrap();
        let oracle = freudenthal_oracle(&g, &tau).unwrap();
        assert_eq!(rule, oracle);
    }

    #[test]
    fn bound_is_enforced() {
        let g = build_case(CaseId::new(Family::Real, 3)).unwrap();
        let tau = KTypeWeight::new(&g, HalfIntVec::from_ints(&[5, 3, 1])).unwrap();
        assert!(matches!(
            freudenthal_oracle_bounded(&g, &tau, 10),
            Err(Error::DimensionBoundExceeded { .. })
        ));
    }
}
