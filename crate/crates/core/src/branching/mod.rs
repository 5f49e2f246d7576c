//! K-types, M-types and the restriction of a K-type to M.
//!
//! `restrict_to_m` applies the closed-form interlacing rules of each family.
//! `freudenthal::freudenthal_oracle` recomputes the same decomposition from
//! weight multiplicities and is used to cross-check the rules.

pub mod freudenthal;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_coords::{HalfInt, HalfIntVec, Rational};
use crate::group_data::{CaseId, Family, GroupCase, Sign};

pub use freudenthal::{freudenthal_oracle, WeightDiagram};

/// Named K-types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KLabel {
    /// `tau_p = e_1 + ... + e_p`; for `p = n` a sign picks `tau_n^+` or `tau_n^-`.
    Real { p: usize, sign: Option<Sign> },
    /// `tau_{a,b}`: `b` ones followed by `a` minus ones on the U(n) part.
    Complex { a: usize, b: usize },
    /// `tau_{r,s,t}`: `(2^r, 1^s, 0, ..)` on Sp(n), `t` on Sp(1).
    Quaternionic { r: usize, s: usize, t: usize },
}

impl fmt::Display for KLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KLabel::Real { p, sign: None } => write!(f, "tau_{p}"),
            KLabel::Real {
                p,
                sign: Some(Sign::Pos),
            } => write!(f, "tau_{p}^+"),
            KLabel::Real {
                p,
                sign: Some(Sign::Neg),
            } => write!(f, "tau_{p}^-"),
            KLabel::Complex { a, b } => write!(f, "tau_({a},{b})"),
            KLabel::Quaternionic { r, s, t } => write!(f, "tau_({r},{s},{t})"),
        }
    }
}

/// Named M-types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MLabel {
    /// `sigma_l = e_2 + ... + e_{l+1}`.
    Real { l: usize },
    /// `sigma_{l,m}`: `m` ones and `l` minus ones on the U(n-1) part.
    Complex { l: usize, m: usize },
    /// `sigma_{a,b,c}`: `(2^a, 1^b, 0, ..)` on Sp(n-1), highest weight `c`
    /// (dimension `2c+1`) on the diagonal Sp(1).
    Quaternionic { a: usize, b: usize, c: HalfInt },
}

impl fmt::Display for MLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MLabel::Real { l } => write!(f, "sigma_{l}"),
            MLabel::Complex { l, m } => write!(f, "sigma_({l},{m})"),
            MLabel::Quaternionic { a, b, c } => write!(f, "sigma_({a},{b},{c})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KTypeWeight {
    pub case: CaseId,
    pub coords: HalfIntVec,
    pub label: Option<KLabel>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MTypeWeight {
    pub case: CaseId,
    /// Highest weight embedded in the ambient coordinates of `h*`.
    pub coords: HalfIntVec,
    pub label: Option<MLabel>,
}

impl PartialOrd for MTypeWeight {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MTypeWeight {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.case, &self.coords).cmp(&(other.case, &other.coords))
    }
}

fn decreasing(v: &[i64]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

fn same_parity(v: &[i64]) -> bool {
    v.iter().all(|d| d % 2 == 0) || v.iter().all(|d| d % 2 != 0)
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidWeight(msg.into())
}

impl KTypeWeight {
    pub fn new(case: &GroupCase, coords: HalfIntVec) -> Result<Self> {
        let id = case.id;
        if coords.dim() != id.k_dim() {
            return Err(Error::DimensionMismatch {
                left: coords.dim(),
                right: id.k_dim(),
            });
        }
        let d = coords.doubled();
        let n = id.n;
        match id.family {
            Family::Real => {
                if !same_parity(d) {
                    return Err(invalid(
                        "Spin weights must be all integral or all half-integral",
                    ));
                }
                if !decreasing(&d[..n - 1]) || d[n - 2] < d[n - 1].abs() {
                    return Err(invalid(format!("{coords} is not D_{n}-dominant")));
                }
            }
            Family::Complex => {
                if !coords.all_integral() {
                    return Err(invalid("U(n) weights must be integral"));
                }
                if d.iter().sum::<i64>() != 0 {
                    return Err(invalid("U(n) weight coordinates must sum to zero"));
                }
                if !decreasing(&d[..n]) {
                    return Err(invalid(format!("{coords} is not U({n})-dominant")));
                }
            }
            Family::Quaternionic => {
                if !coords.all_integral() {
                    return Err(invalid("Sp(n) x Sp(1) weights must be integral"));
                }
                if !decreasing(&d[..n]) || d[n - 1] < 0 || d[n] < 0 {
                    return Err(invalid(format!("{coords} is not Sp({n}) x Sp(1)-dominant")));
                }
            }
        }
        let label = infer_k_label(id, &coords);
        Ok(KTypeWeight {
            case: id,
            coords,
            label,
        })
    }

    pub fn from_label(case: &GroupCase, label: KLabel) -> Result<Self> {
        let id = case.id;
        let n = id.n;
        let dim = id.k_dim();
        let mut d = vec![0i64; dim];
        match (id.family, label) {
            (Family::Real, KLabel::Real { p, sign }) => {
                if p > n || (p == n) != sign.is_some() {
                    return Err(invalid(format!("{label} is not a K-type of {id}")));
                }
                d[..p].fill(2);
                if sign == Some(Sign::Neg) {
                    d[n - 1] = -2;
                }
            }
            (Family::Complex, KLabel::Complex { a, b }) => {
                if a + b > n {
                    return Err(invalid(format!("{label} needs a + b <= {n}")));
                }
                d[..b].fill(2);
                d[n - a..n].fill(-2);
                d[n] = 2 * (a as i64 - b as i64);
            }
            (Family::Quaternionic, KLabel::Quaternionic { r, s, t }) => {
                if r + s > n {
                    return Err(invalid(format!("{label} needs r + s <= {n}")));
                }
                d[..r].fill(4);
                d[r..r + s].fill(2);
                d[n] = 2 * t as i64;
            }
            _ => return Err(invalid(format!("{label} does not belong to {id}"))),
        }
        let mut w = KTypeWeight::new(case, HalfIntVec::from_doubled(d))?;
        w.label = Some(label);
        Ok(w)
    }

    pub fn dimension(&self, case: &GroupCase) -> u128 {
        weyl_dimension(&case.pos_roots_k, &case.rho_k, &self.coords)
    }
}

impl fmt::Display for KTypeWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(l) => write!(f, "{l}"),
            None => write!(f, "{}", self.coords),
        }
    }
}

fn infer_k_label(id: CaseId, coords: &HalfIntVec) -> Option<KLabel> {
    let n = id.n;
    let d = coords.doubled();
    match id.family {
        Family::Real => {
            if !d.iter().all(|&x| x == 0 || x.abs() == 2) {
                return None;
            }
            let p = d.iter().filter(|&&x| x != 0).count();
            if p == n {
                let sign = if d[n - 1] > 0 { Sign::Pos } else { Sign::Neg };
                Some(KLabel::Real {
                    p,
                    sign: Some(sign),
                })
            } else if d.iter().all(|&x| x >= 0) {
                Some(KLabel::Real { p, sign: None })
            } else {
                None
            }
        }
        Family::Complex => {
            let head = &d[..n];
            if !head.iter().all(|&x| x.abs() <= 2) {
                return None;
            }
            let b = head.iter().filter(|&&x| x == 2).count();
            let a = head.iter().filter(|&&x| x == -2).count();
            Some(KLabel::Complex { a, b })
        }
        Family::Quaternionic => {
            let head = &d[..n];
            if !head.iter().all(|&x| x <= 4) {
                return None;
            }
            let r = head.iter().filter(|&&x| x == 4).count();
            let s = head.iter().filter(|&&x| x == 2).count();
            Some(KLabel::Quaternionic {
                r,
                s,
                t: (d[n] / 2) as usize,
            })
        }
    }
}

impl MTypeWeight {
    pub fn new(case: &GroupCase, coords: HalfIntVec) -> Result<Self> {
        let id = case.id;
        if coords.dim() != id.ambient_dim() {
            return Err(Error::DimensionMismatch {
                left: coords.dim(),
                right: id.ambient_dim(),
            });
        }
        let d = coords.doubled();
        let n = id.n;
        match id.family {
            Family::Real => {
                let tail = &d[1..];
                if d[0] != 0 || !same_parity(tail) || !decreasing(tail) || tail[n - 2] < 0 {
                    return Err(invalid(format!(
                        "{coords} is not a Spin({}) highest weight",
                        2 * n - 1
                    )));
                }
            }
            Family::Complex => {
                let mid = &d[1..n];
                if d[0] != d[n]
                    || !mid.iter().all(|x| x % 2 == 0)
                    || !decreasing(mid)
                    || d.iter().sum::<i64>() != 0
                {
                    return Err(invalid(format!("{coords} is not an M-type of {id}")));
                }
            }
            Family::Quaternionic => {
                let tail = &d[2..];
                if d[0] != -d[1]
                    || d[0] < 0
                    || !tail.iter().all(|x| x % 2 == 0)
                    || !decreasing(tail)
                    || tail[n - 2] < 0
                {
                    return Err(invalid(format!("{coords} is not an M-type of {id}")));
                }
            }
        }
        let label = infer_m_label(id, &coords);
        Ok(MTypeWeight {
            case: id,
            coords,
            label,
        })
    }

    pub fn from_label(case: &GroupCase, label: MLabel) -> Result<Self> {
        let id = case.id;
        let n = id.n;
        let dim = id.ambient_dim();
        let mut d = vec![0i64; dim];
        match (id.family, label) {
            (Family::Real, MLabel::Real { l }) => {
                if l > n - 1 {
                    return Err(invalid(format!("{label} needs l <= {}", n - 1)));
                }
                d[1..=l].fill(2);
            }
            (Family::Complex, MLabel::Complex { l, m }) => {
                if l + m > n - 1 {
                    return Err(invalid(format!("{label} needs l + m <= {}", n - 1)));
                }
                d[1..=m].fill(2);
                d[n - l..n].fill(-2);
                let shift = l as i64 - m as i64;
                d[0] = shift;
                d[n] = shift;
            }
            (Family::Quaternionic, MLabel::Quaternionic { a, b, c }) => {
                if a + b > n - 1 || c < HalfInt::ZERO {
                    return Err(invalid(format!("{label} is not an M-type of {id}")));
                }
                d[0] = c.doubled();
                d[1] = -c.doubled();
                d[2..2 + a].fill(4);
                d[2 + a..2 + a + b].fill(2);
            }
            _ => return Err(invalid(format!("{label} does not belong to {id}"))),
        }
        let mut w = MTypeWeight::new(case, HalfIntVec::from_doubled(d))?;
        w.label = Some(label);
        Ok(w)
    }

    pub fn dimension(&self, case: &GroupCase) -> u128 {
        weyl_dimension(&case.pos_roots_m, &case.rho_m, &self.coords)
    }
}

impl fmt::Display for MTypeWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(l) => write!(f, "{l}"),
            None => write!(f, "{}", self.coords),
        }
    }
}

fn infer_m_label(id: CaseId, coords: &HalfIntVec) -> Option<MLabel> {
    let n = id.n;
    let d = coords.doubled();
    match id.family {
        Family::Real => {
            let tail = &d[1..];
            tail.iter()
                .all(|&x| x == 0 || x == 2)
                .then(|| MLabel::Real {
                    l: tail.iter().filter(|&&x| x == 2).count(),
                })
        }
        Family::Complex => {
            let mid = &d[1..n];
            if !mid.iter().all(|&x| x.abs() <= 2) {
                return None;
            }
            Some(MLabel::Complex {
                l: mid.iter().filter(|&&x| x == -2).count(),
                m: mid.iter().filter(|&&x| x == 2).count(),
            })
        }
        Family::Quaternionic => {
            let tail = &d[2..];
            if !tail.iter().all(|&x| x <= 4) {
                return None;
            }
            Some(MLabel::Quaternionic {
                a: tail.iter().filter(|&&x| x == 4).count(),
                b: tail.iter().filter(|&&x| x == 2).count(),
                c: HalfInt::from_doubled(d[0]),
            })
        }
    }
}

/// The highest weight of `sigma_{a,b,c}` in the ambient labelling where the
/// diagonal Sp(1) sits on `e_1 + e_{n+1}` and Sp(n-1) on `e_2 .. e_n`.
pub fn quaternionic_label_weight(n: usize, a: usize, b: usize, c: HalfInt) -> HalfIntVec {
    let mut d = vec![0i64; n + 1];
    d[0] = c.doubled();
    d[n] = c.doubled();
    d[1..1 + a].fill(4);
    d[1 + a..1 + a + b].fill(2);
    HalfIntVec::from_doubled(d)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchEntry {
    pub sigma: MTypeWeight,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchingResult {
    pub case: CaseId,
    pub tau: KTypeWeight,
    pub entries: Vec<BranchEntry>,
}

impl BranchingResult {
    fn from_map(
        case: &GroupCase,
        tau: &KTypeWeight,
        map: BTreeMap<HalfIntVec, u32>,
    ) -> Result<Self> {
        let mut entries = map
            .into_iter()
            .filter(|(_, m)| *m > 0)
            .map(|(coords, multiplicity)| {
                Ok(BranchEntry {
                    sigma: MTypeWeight::new(case, coords)?,
                    multiplicity,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        entries.sort_by(|x, y| y.sigma.coords.cmp(&x.sigma.coords));
        Ok(BranchingResult {
            case: case.id,
            tau: tau.clone(),
            entries,
        })
    }

    pub fn multiplicity(&self, sigma: &HalfIntVec) -> u32 {
        self.entries
            .iter()
            .find(|e| &e.sigma.coords == sigma)
            .map_or(0, |e| e.multiplicity)
    }

    pub fn m_types(&self) -> impl Iterator<Item = &MTypeWeight> {
        self.entries.iter().map(|e| &e.sigma)
    }

    pub fn total_dimension(&self, case: &GroupCase) -> u128 {
        self.entries
            .iter()
            .map(|e| e.multiplicity as u128 * e.sigma.dimension(case))
            .sum()
    }
}

/// Decomposes `tau|_M` with the interlacing rule of the family.
pub fn restrict_to_m(case: &GroupCase, tau: &KTypeWeight) -> Result<BranchingResult> {
    if tau.case != case.id {
        return Err(Error::InvalidInput(format!(
            "K-type belongs to {}, not {}",
            tau.case, case.id
        )));
    }
    let map = match case.family() {
        Family::Real => restrict_real(case.n(), tau.coords.doubled()),
        Family::Complex => restrict_complex(case.n(), tau.coords.doubled()),
        Family::Quaternionic => restrict_quaternionic(case.n(), tau.coords.doubled()),
    };
    BranchingResult::from_map(case, tau, map)
}

/// All `b` with `hi[i] >= b[i] >= lo[i]`, stepping by 2 in doubled units.
fn boxes(hi: &[i64], lo: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for (&h, &l) in hi.iter().zip(lo) {
        let mut next = Vec::new();
        for prefix in &out {
            let mut x = l;
            while x <= h {
                let mut p = prefix.clone();
                p.push(x);
                next.push(p);
                x += 2;
            }
        }
        out = next;
    }
    out
}

fn restrict_real(n: usize, a: &[i64]) -> BTreeMap<HalfIntVec, u32> {
    let hi: Vec<i64> = a[..n - 1].to_vec();
    let mut lo: Vec<i64> = a[1..].to_vec();
    lo[n - 2] = a[n - 1].abs();
    let mut out = BTreeMap::new();
    for b in boxes(&hi, &lo) {
        let mut d = vec![0];
        d.extend(b);
        out.insert(HalfIntVec::from_doubled(d), 1);
    }
    out
}

fn restrict_complex(n: usize, a: &[i64]) -> BTreeMap<HalfIntVec, u32> {
    let hi: Vec<i64> = a[..n - 1].to_vec();
    let lo: Vec<i64> = a[1..n].to_vec();
    let mut out = BTreeMap::new();
    for b in boxes(&hi, &lo) {
        let c = -b.iter().sum::<i64>() / 2;
        let mut d = vec![c];
        d.extend(&b);
        d.push(c);
        out.insert(HalfIntVec::from_doubled(d), 1);
    }
    out
}

/// Highest weights (doubled Sp(1) weights) in a tensor product of Sp(1)
/// irreducibles, with multiplicity.
fn sp1_tensor(factors: &[i64]) -> BTreeMap<i64, u32> {
    let mut acc = BTreeMap::from([(0i64, 1u32)]);
    for &k in factors {
        let mut next = BTreeMap::new();
        for (&j, &m) in &acc {
            let mut d = (j - k).abs();
            while d <= j + k {
                *next.entry(d).or_insert(0) += m;
                d += 2;
            }
        }
        acc = next;
    }
    acc
}

fn restrict_quaternionic(n: usize, w: &[i64]) -> BTreeMap<HalfIntVec, u32> {
    // Work in ordinary integer units.
    let lam: Vec<i64> = w[..n].iter().map(|x| x / 2).collect();
    let t = w[n] / 2;
    let lam_at = |i: usize| if i < n { lam[i] } else { 0 };
    let hi: Vec<i64> = (0..n - 1).map(|i| lam[i]).collect();
    let lo: Vec<i64> = (0..n - 1).map(|i| lam_at(i + 2)).collect();
    let mut out = BTreeMap::new();
    for mu in boxes_int(&hi, &lo) {
        if !decreasing(&mu) {
            continue;
        }
        let mut seq: Vec<i64> = lam.iter().chain(&mu).copied().collect();
        seq.push(0);
        seq.sort_unstable_by(|x, y| y.cmp(x));
        let mut factors: Vec<i64> = seq.chunks(2).map(|p| p[0] - p[1]).collect();
        factors.push(t);
        for (diag, mult) in sp1_tensor(&factors) {
            // `diag` is the Sp(1) highest weight in integer units, i.e. `2c`.
            let mut d = vec![diag, -diag];
            d.extend(mu.iter().map(|x| 2 * x));
            *out.entry(HalfIntVec::from_doubled(d)).or_insert(0) += mult;
        }
    }
    out
}

fn boxes_int(hi: &[i64], lo: &[i64]) -> Vec<Vec<i64>> {
    let hi2: Vec<i64> = hi.iter().map(|x| 2 * x).collect();
    let lo2: Vec<i64> = lo.iter().map(|x| 2 * x).collect();
    boxes(&hi2, &lo2)
        .into_iter()
        .map(|b| b.into_iter().map(|x| x / 2).collect())
        .collect()
}

/// Weyl dimension formula `prod <lambda + rho, beta> / <rho, beta>`.
pub fn weyl_dimension(pos_roots: &[HalfIntVec], rho: &HalfIntVec, lambda: &HalfIntVec) -> u128 {
    let shifted = lambda + rho;
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for beta in pos_roots {
        let a: Rational = shifted.inner_unchecked(beta);
        let b: Rational = rho.inner_unchecked(beta);
        // Both pairings share the denominator 4 at most, so scale to integers.
        let a4 = (a * 4).to_integer() as i128;
        let b4 = (b * 4).to_integer() as i128;
        num *= a4;
        den *= b4;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    (num / den) as u128
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_data::build_case;

    fn case(f: Family, n: usize) -> GroupCase {
        build_case(CaseId::new(f, n)).unwrap()
    }

    fn labels(r: &BranchingResult) -> Vec<MLabel> {
        let mut v: Vec<MLabel> = r.m_types().map(|m| m.label.unwrap()).collect();
        v.sort();
        v
    }

    #[test]
    fn real_tau_p() {
        let g = case(Family::Real, 4);
        let tau = KTypeWeight::from_label(&g, KLabel::Real { p: 2, sign: None }).unwrap();
        let r = restrict_to_m(&g, &tau).unwrap();
        assert_eq!(
            labels(&r),
            vec![MLabel::Real { l: 1 }, MLabel::Real { l: 2 }]
        );
        let top = KTypeWeight::from_label(
            &g,
            KLabel::Real {
                p: 4,
                sign: Some(Sign::Neg),
            },
        )
        .unwrap();
        let r = restrict_to_m(&g, &top).unwrap();
        assert_eq!(labels(&r), vec![MLabel::Real { l: 3 }]);
    }

    #[test]
    fn complex_tau_ab() {
        let g = case(Family::Complex, 4);
        let tau = KTypeWeight::from_label(&g, KLabel::Complex { a: 1, b: 2 }).unwrap();
        assert_eq!(tau.coords, HalfIntVec::from_ints(&[1, 1, 0, -1, -1]));
        let r = restrict_to_m(&g, &tau).unwrap();
        assert_eq!(
            labels(&r),
            vec![
                MLabel::Complex { l: 0, m: 1 },
                MLabel::Complex { l: 0, m: 2 },
                MLabel::Complex { l: 1, m: 1 },
                MLabel::Complex { l: 1, m: 2 },
            ]
        );
    }

    #[test]
    fn complex_boundary_has_three_types() {
        let g = case(Family::Complex, 3);
        let tau = KTypeWeight::from_label(&g, KLabel::Complex { a: 1, b: 2 }).unwrap();
        let r = restrict_to_m(&g, &tau).unwrap();
        assert_eq!(
            labels(&r),
            vec![
                MLabel::Complex { l: 0, m: 1 },
                MLabel::Complex { l: 0, m: 2 },
                MLabel::Complex { l: 1, m: 1 },
            ]
        );
    }

    #[test]
    fn quaternionic_tau_022() {
        let g = case(Family::Quaternionic, 4);
        let tau = KTypeWeight::from_label(&g, KLabel::Quaternionic { r: 0, s: 2, t: 2 }).unwrap();
        let r = restrict_to_m(&g, &tau).unwrap();
        let h = HalfInt::from_doubled;
        assert_eq!(
            labels(&r),
            vec![
                MLabel::Quaternionic {
                    a: 0,
                    b: 0,
                    c: h(2)
                },
                MLabel::Quaternionic {
                    a: 0,
                    b: 1,
                    c: h(1)
                },
                MLabel::Quaternionic {
                    a: 0,
                    b: 1,
                    c: h(3)
                },
                MLabel::Quaternionic {
                    a: 0,
                    b: 2,
                    c: h(2)
                },
            ]
        );
        assert!(r.entries.iter().all(|e| e.multiplicity == 1));
        assert_eq!(r.total_dimension(&g), tau.dimension(&g));
    }

    #[test]
    fn weyl_dimensions() {
        let g = case(Family::Quaternionic, 2);
        let tau = KTypeWeight::from_label(&g, KLabel::Quaternionic { r: 1, s: 0, t: 0 }).unwrap();
        // Sym^2 of C^4 for Sp(2).
        assert_eq!(tau.dimension(&g), 10);
        let g = case(Family::Real, 3);
        let tau = KTypeWeight::from_label(
            &g,
            KLabel::Real {
                p: 3,
                sign: Some(Sign::Pos),
            },
        )
        .unwrap();
        assert_eq!(tau.dimension(&g), 10);
    }

    #[test]
    fn labels_round_trip() {
        let g = case(Family::Quaternionic, 6);
        let lab = MLabel::Quaternionic {
            a: 1,
            b: 3,
            c: HalfInt::from_doubled(5),
        };
        let m = MTypeWeight::from_label(&g, lab).unwrap();
        assert_eq!(
            MTypeWeight::new(&g, m.coords.clone()).unwrap().label,
            Some(lab)
        );
    }

    #[test]
    fn rejects_non_dominant() {
        let g = case(Family::Real, 3);
        assert!(KTypeWeight::new(&g, HalfIntVec::from_ints(&[0, 1, 0])).is_err());
        assert!(KTypeWeight::new(&g, HalfIntVec::from_doubled(vec![1, 1, 0])).is_err());
        let g = case(Family::Complex, 2);
        assert!(KTypeWeight::new(&g, HalfIntVec::from_ints(&[1, 0, 0])).is_err());
    }
}
