//! Composition series of principal series with trivial infinitesimal
//! character.
//!
//! Each chamber `(i, j)` gives a principal series `pi_{i,j}` with Langlands
//! quotient `PS(i,j)`. A diagram lists the layers of the socle filtration
//! from the top down; the top layer is always the Langlands quotient.
//! Discrete series are labelled `DS(l)`, with Harish-Chandra parameters in
//! K coordinates.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_coords::{HalfInt, HalfIntVec};
use crate::group_data::{positive_system_signs, CaseId, Family, GroupCase, Sign};
use crate::weyl_orbits::same_orbit;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SubquotientLabel {
    Ps { i: usize, j: usize },
    Ds { index: usize },
}

impl SubquotientLabel {
    pub fn ps(i: usize, j: usize) -> Self {
        SubquotientLabel::Ps { i, j }
    }

    pub fn ds(index: usize) -> Self {
        SubquotientLabel::Ds { index }
    }

    pub fn chamber(&self) -> Option<(usize, usize)> {
        match *self {
            SubquotientLabel::Ps { i, j } => Some((i, j)),
            SubquotientLabel::Ds { .. } => None,
        }
    }
}

impl fmt::Display for SubquotientLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubquotientLabel::Ps { i, j } => write!(f, "PS({i},{j})"),
            SubquotientLabel::Ds { index } => write!(f, "DS({index})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionDiagram {
    pub series: (usize, usize),
    pub layers: Vec<Vec<SubquotientLabel>>,
}

impl CompositionDiagram {
    fn new(series: (usize, usize), lower: Vec<Vec<SubquotientLabel>>) -> Self {
        let mut layers = vec![vec![SubquotientLabel::ps(series.0, series.1)]];
        layers.extend(lower);
        CompositionDiagram { series, layers }
    }

    pub fn top(&self) -> SubquotientLabel {
        self.layers[0][0]
    }

    pub fn labels(&self) -> impl Iterator<Item = &SubquotientLabel> {
        self.layers.iter().flatten()
    }

    pub fn contains(&self, label: &SubquotientLabel) -> bool {
        self.labels().any(|l| l == label)
    }
}

/// Gelfand-Kirillov dimension `a n + b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GkFormula {
    pub coeff_n: i64,
    pub constant: i64,
}

impl GkFormula {
    const fn new(coeff_n: i64, constant: i64) -> Self {
        GkFormula { coeff_n, constant }
    }

    pub fn eval(&self, n: usize) -> usize {
        (self.coeff_n * n as i64 + self.constant) as usize
    }
}

#[derive(Debug, Clone)]
pub struct TrivialCharacterTable {
    pub case: CaseId,
    pub ps_chars: BTreeMap<(usize, usize), HalfIntVec>,
    pub ds_chars: BTreeMap<usize, HalfIntVec>,
    pub diagrams: BTreeMap<(usize, usize), CompositionDiagram>,
    sign_index: HashMap<Vec<Sign>, (usize, usize)>,
    occurrences: BTreeMap<SubquotientLabel, BTreeSet<(usize, usize)>>,
}

impl TrivialCharacterTable {
    pub fn diagram(&self, chamber: (usize, usize)) -> Result<&CompositionDiagram> {
        self.diagrams
            .get(&chamber)
            .ok_or_else(|| Error::Internal(format!("no diagram for chamber {chamber:?}")))
    }

    /// Chambers whose principal series contains `label`.
    pub fn occurrences(&self, label: &SubquotientLabel) -> BTreeSet<(usize, usize)> {
        self.occurrences.get(label).cloned().unwrap_or_default()
    }

    pub fn labels(&self) -> impl Iterator<Item = SubquotientLabel> + '_ {
        self.ps_chars
            .keys()
            .map(|&(i, j)| SubquotientLabel::ps(i, j))
            .chain(self.ds_chars.keys().map(|&l| SubquotientLabel::ds(l)))
    }

    pub fn gk_formula(&self, label: &SubquotientLabel) -> GkFormula {
        use SubquotientLabel::{Ds, Ps};
        let n = self.case.n;
        match (self.case.family, *label) {
            (_, Ps { i: 0, j: 1 }) => GkFormula::new(0, 0),
            (Family::Real, _) => GkFormula::new(2, -1),
            (Family::Complex, Ps { i: 0, .. }) | (Family::Complex, Ps { j: 1, .. }) => {
                GkFormula::new(1, 0)
            }
            (Family::Complex, Ds { index }) if index == 0 || index == n => GkFormula::new(1, 0),
            (Family::Complex, _) => GkFormula::new(2, -1),
            (Family::Quaternionic, Ps { i: 0, .. }) | (Family::Quaternionic, Ps { i: 1, j: 2 }) => {
                GkFormula::new(2, 1)
            }
            (Family::Quaternionic, Ds { index: 0 }) => GkFormula::new(2, 1),
            (Family::Quaternionic, _) => GkFormula::new(4, -1),
        }
    }

    pub fn gk_dim(&self, label: &SubquotientLabel) -> usize {
        self.gk_formula(label).eval(self.case.n)
    }

    /// A competing published value for the GK dimension, when one exists.
    pub fn gk_alternative(&self, label: &SubquotientLabel) -> Option<usize> {
        let f = self.gk_formula(label);
        (self.case.family == Family::Quaternionic && f == GkFormula::new(4, -1))
            .then(|| GkFormula::new(4, -2).eval(self.case.n))
    }

    pub fn is_finite_dim(&self, label: &SubquotientLabel) -> bool {
        *label == SubquotientLabel::ps(0, 1)
    }

    pub fn report(&self) -> TableReport {
        TableReport {
            case: self.case,
            principal_series: self
                .diagrams
                .values()
                .map(|d| {
                    let label = d.top();
                    PsRow {
                        i: d.series.0,
                        j: d.series.1,
                        gamma: self.ps_chars[&d.series].clone(),
                        layers: d.layers.clone(),
                        gk_dim: self.gk_dim(&label),
                        gk_alternative: self.gk_alternative(&label),
                        finite_dim: self.is_finite_dim(&label),
                    }
                })
                .collect(),
            discrete_series: self
                .ds_chars
                .iter()
                .map(|(&index, hc)| DsRow {
                    index,
                    hc_param: hc.clone(),
                    gk_dim: self.gk_dim(&SubquotientLabel::ds(index)),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsRow {
    pub i: usize,
    pub j: usize,
    pub gamma: HalfIntVec,
    pub layers: Vec<Vec<SubquotientLabel>>,
    pub gk_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gk_alternative: Option<usize>,
    pub finite_dim: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DsRow {
    pub index: usize,
    pub hc_param: HalfIntVec,
    pub gk_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub case: CaseId,
    pub principal_series: Vec<PsRow>,
    pub discrete_series: Vec<DsRow>,
}

pub fn build_table(case: &GroupCase) -> Result<TrivialCharacterTable> {
    let n = case.n();
    let (ps_chars, ds_chars, diagrams) = match case.family() {
        Family::Real => real_data(n),
        Family::Complex => complex_data(n),
        Family::Quaternionic => quaternionic_data(n),
    };

    let mut sign_index = HashMap::new();
    for (&chamber, gamma) in &ps_chars {
        if !same_orbit(case, gamma, &case.rho) {
            return Err(Error::Internal(format!(
                "chamber {chamber:?} is not in the orbit of rho"
            )));
        }
        let signs = positive_system_signs(case, gamma)?;
        if sign_index.insert(signs, chamber).is_some() {
            return Err(Error::Internal(format!(
                "chamber {chamber:?} repeats a Weyl chamber"
            )));
        }
    }

    let mut occurrences: BTreeMap<SubquotientLabel, BTreeSet<(usize, usize)>> = BTreeMap::new();
    for (&chamber, d) in &diagrams {
        for label in d.labels() {
            let known = match label {
                SubquotientLabel::Ps { i, j } => ps_chars.contains_key(&(*i, *j)),
                SubquotientLabel::Ds { index } => ds_chars.contains_key(index),
            };
            if !known {
                return Err(Error::Internal(format!(
                    "diagram {chamber:?} mentions unknown {label}"
                )));
            }
            occurrences.entry(*label).or_default().insert(chamber);
        }
    }
    if diagrams.len() != ps_chars.len() {
        return Err(Error::Internal(
            "diagram count differs from chamber count".into(),
        ));
    }

    Ok(TrivialCharacterTable {
        case: case.id,
        ps_chars,
        ds_chars,
        diagrams,
        sign_index,
        occurrences,
    })
}

/// Chamber of the trivial block with the same positive system as `gamma`.
pub fn match_trivial(
    table: &TrivialCharacterTable,
    case: &GroupCase,
    gamma: &HalfIntVec,
) -> Result<(usize, usize)> {
    let signs = positive_system_signs(case, gamma)?;
    table
        .sign_index
        .get(&signs)
        .copied()
        .ok_or(Error::NoChamberMatch)
}

type TableData = (
    BTreeMap<(usize, usize), HalfIntVec>,
    BTreeMap<usize, HalfIntVec>,
    BTreeMap<(usize, usize), CompositionDiagram>,
);

fn ps(i: usize, j: usize) -> SubquotientLabel {
    SubquotientLabel::ps(i, j)
}

fn ds(l: usize) -> SubquotientLabel {
    SubquotientLabel::ds(l)
}

fn real_data(n: usize) -> TableData {
    let n_i = n as i64;
    let mut ps_chars = BTreeMap::new();
    let mut diagrams = BTreeMap::new();
    for i in 1..=n {
        let mut d = vec![0i64; n];
        d[0] = 2 * (n_i - i as i64) + 1;
        for j in 2..=n {
            let j_i = j as i64;
            d[j - 1] = if j <= i {
                2 * n_i - 2 * j_i + 3
            } else {
                2 * n_i - 2 * j_i + 1
            };
        }
        ps_chars.insert((0, i), HalfIntVec::from_doubled(d));
        let lower = if i < n {
            vec![vec![ps(0, i + 1)]]
        } else {
            vec![vec![ds(0), ds(1)]]
        };
        diagrams.insert((0, i), CompositionDiagram::new((0, i), lower));
    }
    let top: Vec<i64> = (0..n).map(|l| 2 * (n_i - l as i64) - 1).collect();
    let mut other = top.clone();
    other[n - 1] = -1;
    let ds_chars = BTreeMap::from([
        (0, HalfIntVec::from_doubled(top)),
        (1, HalfIntVec::from_doubled(other)),
    ]);
    (ps_chars, ds_chars, diagrams)
}

fn complex_data(n: usize) -> TableData {
    // Doubled entries of rho: rho_l = (n - 2l + 2) / 2 for l = 1..n+1.
    let rho = |l: usize| n as i64 - 2 * l as i64 + 2;
    let mut ps_chars = BTreeMap::new();
    let mut diagrams = BTreeMap::new();
    for i in 0..n {
        for j in 1..=n - i {
            let (first, last) = (i + 1, n - j + 2);
            let mut d = vec![rho(first)];
            d.extend((1..=n + 1).filter(|&l| l != first && l != last).map(rho));
            d.push(rho(last));
            ps_chars.insert((i, j), HalfIntVec::from_doubled(d));

            let lower = if j == n - i {
                vec![vec![ds(i), ds(i + 1)]]
            } else if j == n - i - 1 {
                vec![vec![ps(i + 1, j), ps(i, j + 1)], vec![ds(i + 1)]]
            } else {
                vec![vec![ps(i + 1, j), ps(i, j + 1)], vec![ps(i + 1, j + 1)]]
            };
            diagrams.insert((i, j), CompositionDiagram::new((i, j), lower));
        }
    }
    let mut ds_chars = BTreeMap::new();
    for i in 0..=n {
        let mut d: Vec<i64> = (1..=n + 1).filter(|&l| l != i + 1).map(rho).collect();
        d.push(rho(i + 1));
        ds_chars.insert(i, HalfIntVec::from_doubled(d));
    }
    (ps_chars, ds_chars, diagrams)
}

fn quaternionic_data(n: usize) -> TableData {
    let n_i = n as i64;
    let mut ps_chars = BTreeMap::new();
    let mut diagrams = BTreeMap::new();
    let mut chambers = Vec::new();
    for i in 0..n {
        for j in i + 1..=2 * n - i {
            chambers.push((i, j));
        }
    }
    for &(i, j) in &chambers {
        let first = n_i + 1 - i as i64;
        let second = if j <= n {
            n_i + 1 - j as i64
        } else {
            n_i - j as i64
        };
        let mut d = vec![first, second];
        let used = [first.abs(), second.abs()];
        d.extend((1..=n_i + 1).rev().filter(|v| !used.contains(v)));
        let coords: Vec<HalfInt> = d.into_iter().map(HalfInt::from_int).collect();
        ps_chars.insert((i, j), HalfIntVec::from_halfints(&coords));
        diagrams.insert(
            (i, j),
            CompositionDiagram::new((i, j), quaternionic_lower(n, i, j)),
        );
    }
    let mut ds_chars = BTreeMap::new();
    for i in 0..=n {
        let mut d: Vec<i64> = (1..=n)
            .map(|l| {
                if l <= i {
                    n_i - l as i64 + 2
                } else {
                    n_i - l as i64 + 1
                }
            })
            .collect();
        d.push(n_i - i as i64 + 1);
        ds_chars.insert(i, HalfIntVec::from_ints(&d));
    }
    (ps_chars, ds_chars, diagrams)
}

fn quaternionic_lower(n: usize, i: usize, j: usize) -> Vec<Vec<SubquotientLabel>> {
    if j == 2 * n - i {
        return vec![vec![ds(i), ds(i + 1)]];
    }
    if (i, j) == (n - 1, n) {
        return vec![vec![ps(n - 1, n + 1)]];
    }
    if j == 2 * n - i - 1 {
        return vec![vec![ps(i + 1, j), ps(i, j + 1)], vec![ds(i + 1)]];
    }
    if (i, j) == (n - 2, n) {
        return vec![
            vec![ps(n - 2, n + 1), ps(n - 1, n), ds(n)],
            vec![ps(n - 1, n + 1)],
        ];
    }
    if (i, j) == (n - 2, n - 1) {
        return vec![vec![ps(n - 2, n)], vec![ds(n)]];
    }
    match j - i {
        1 => vec![vec![ps(i, j + 1)], vec![ps(i + 2, j + 2)]],
        2 => vec![
            vec![ps(i + 2, j + 1), ps(i, j + 1), ps(i + 1, j)],
            vec![ps(i + 1, j + 1)],
        ],
        _ => vec![vec![ps(i + 1, j), ps(i, j + 1)], vec![ps(i + 1, j + 1)]],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_data::build_case;

    fn table(f: Family, n: usize) -> (GroupCase, TrivialCharacterTable) {
        let g = build_case(CaseId::new(f, n)).unwrap();
        let t = build_table(&g).unwrap();
        (g, t)
    }

    #[test]
    fn chamber_counts() {
        for n in 2..=6 {
            assert_eq!(table(Family::Real, n).1.ps_chars.len(), n);
            assert_eq!(table(Family::Complex, n).1.ps_chars.len(), n * (n + 1) / 2);
            assert_eq!(table(Family::Quaternionic, n).1.ps_chars.len(), n * (n + 1));
        }
    }

    #[test]
    fn rho_is_the_finite_dimensional_chamber() {
        for f in [Family::Real, Family::Complex, Family::Quaternionic] {
            let (g, t) = table(f, 4);
            assert_eq!(match_trivial(&t, &g, &g.rho).unwrap(), (0, 1));
            assert!(t.is_finite_dim(&t.diagram((0, 1)).unwrap().top()));
        }
    }

    #[test]
    fn quaternionic_small_rank_diagrams() {
        let (_, t) = table(Family::Quaternionic, 2);
        assert_eq!(
            t.diagram((0, 2)).unwrap().layers,
            vec![
                vec![ps(0, 2)],
                vec![ps(0, 3), ps(1, 2), ds(2)],
                vec![ps(1, 3)]
            ]
        );
        assert_eq!(t.gk_alternative(&ps(1, 3)), Some(6));
        assert_eq!(t.gk_dim(&ps(1, 2)), 5);
    }

    #[test]
    fn ps_characters_examples() {
        let (_, t) = table(Family::Quaternionic, 7);
        assert_eq!(
            t.ps_chars[&(0, 5)],
            HalfIntVec::from_ints(&[8, 3, 7, 6, 5, 4, 2, 1])
        );
        assert_eq!(
            t.ps_chars[&(1, 9)],
            HalfIntVec::from_ints(&[7, -2, 8, 6, 5, 4, 3, 1])
        );
        let (_, t) = table(Family::Complex, 3);
        assert_eq!(t.ds_chars[&1], HalfIntVec::from_doubled(vec![3, -1, -3, 1]));
    }
}
