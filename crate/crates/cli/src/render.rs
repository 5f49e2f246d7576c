//! Plain-text forms of the command results.

use std::fmt::Write;

use rankone_core::branching::{BranchingResult, KTypeWeight, MTypeWeight};
use rankone_core::collingwood_tables::TableReport;
use rankone_core::exact_coords::format_rational;
use rankone_core::golden::SuiteResult;
use rankone_core::pforms::{PFormReport, ResidueRow};
use rankone_core::plancherel::PoleSet;
use rankone_core::resolver::{Constituent, ConstituentKind, Flag, ResidueRep};
use rankone_core::{GroupCase, HalfInt, HalfIntVec};

fn list<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn vectors(vs: &[HalfIntVec]) -> String {
    list(vs)
}

pub fn case_info(g: &GroupCase) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}  ({})", g.family().group_name(g.n()), g.id);
    let _ = writeln!(s, "  dim h*          {}", g.dim());
    let _ = writeln!(s, "  alpha           {}", g.alpha);
    let _ = writeln!(s, "  rho             {}", g.rho);
    let _ = writeln!(s, "  rho_m           {}", g.rho_m);
    let _ = writeln!(s, "  rho_a           {}", g.rho_a);
    let _ = writeln!(s, "  rho_k           {}", g.rho_k);
    let _ = writeln!(s, "  rho_alpha       {}", g.rho_alpha);
    let _ = writeln!(s, "  mult alpha      {}", g.mult_alpha);
    let _ = writeln!(s, "  mult alpha/2    {}", g.mult_half_alpha);
    let _ = writeln!(
        s,
        "  positive roots  {} (m: {}, k: {})",
        g.pos_roots.len(),
        g.pos_roots_m.len(),
        g.pos_roots_k.len()
    );
    let _ = writeln!(s, "  simple roots    {}", vectors(&g.simple_roots));
    let _ = writeln!(s, "  simple roots m  {}", vectors(&g.simple_roots_m));
    let _ = writeln!(s, "  simple roots k  {}", vectors(&g.simple_roots_k));
    s
}

pub fn branch(
    g: &GroupCase,
    tau: &KTypeWeight,
    rule: &BranchingResult,
    oracle: Option<bool>,
) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{} {} = {}, dimension {}",
        g.id,
        tau,
        tau.coords,
        tau.dimension(g)
    );
    let _ = writeln!(
        s,
        "{:<20} {:<28} {:>5} {:>10}",
        "sigma", "coords", "mult", "dim"
    );
    for e in &rule.entries {
        let _ = writeln!(
            s,
            "{:<20} {:<28} {:>5} {:>10}",
            e.sigma.to_string(),
            e.sigma.coords.to_string(),
            e.multiplicity,
            e.sigma.dimension(g)
        );
    }
    let _ = writeln!(s, "{} M-types", rule.entries.len());
    if let Some(agree) = oracle {
        let _ = writeln!(
            s,
            "weight oracle: {}",
            if agree { "agrees" } else { "DISAGREES" }
        );
    }
    s
}

pub fn poles(sigma: &MTypeWeight, set: &PoleSet, qs: &[HalfInt]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} = {}", sigma, sigma.coords);
    let _ = writeln!(s, "lattice offset  {}", set.lattice_offset);
    let _ = writeln!(s, "zeros           {}", list(&set.zeros));
    let _ = writeln!(s, "{:>4}  q", "k");
    for (k, q) in qs.iter().enumerate() {
        let _ = writeln!(s, "{k:>4}  {q}");
    }
    s
}

fn constituent(c: &Constituent) -> String {
    let what = match &c.kind {
        ConstituentKind::Langlands { sigma, q } => format!("L({sigma}, {q})"),
        ConstituentKind::DiscreteSeries { hc_index, hc_param } => {
            format!("discrete series {hc_index}, HC parameter {hc_param}")
        }
    };
    let size = if c.finite_dim {
        "finite".to_string()
    } else {
        format!("GK {}", c.gk_dim)
    };
    let mut out = format!(
        "{} {what} {size} wavefront {:?}",
        c.subquotient, c.wavefront
    );
    for f in &c.flags {
        match f {
            Flag::GkDiscrepancy {
                reported,
                alternative,
            } => {
                let _ = write!(out, " [GK {reported} or {alternative}]");
            }
        }
    }
    out
}

fn trace(s: &mut String, rep: &ResidueRep) {
    let t = &rep.trace;
    let _ = writeln!(s, "      gamma {} in chamber {:?}", t.gamma, t.chamber);
    for m in &t.matches {
        let _ = writeln!(
            s,
            "      match {} q'={} chamber {:?}",
            m.delta, m.q_prime, m.chamber
        );
    }
    let _ = writeln!(s, "      candidates {}", list(&t.candidates));
    let _ = writeln!(s, "      cover {}", list(&t.cover));
    if let Some(rule) = &t.discrete_series_rule {
        let _ = writeln!(s, "      discrete series: {rule}");
    }
}

pub fn residues(tau: &KTypeWeight, rows: &[ResidueRow], with_trace: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} = {}", tau, tau.coords);
    for row in rows {
        let head = format!("  {} k={} q={}", row.sigma, row.pole_index, row.q);
        match (&row.residue, &row.error) {
            (Some(rep), _) => {
                let _ = writeln!(
                    s,
                    "{head} z={} zeta^2={}",
                    format_rational(&rep.resonance.z),
                    format_rational(&rep.resonance.zeta_sq)
                );
                for c in &rep.constituents {
                    let _ = writeln!(s, "    {}", constituent(c));
                }
                if with_trace {
                    trace(&mut s, rep);
                }
            }
            (None, Some(err)) => {
                let _ = writeln!(s, "{head}\n    error: {err}");
            }
            (None, None) => {
                let _ = writeln!(s, "{head}");
            }
        }
    }
    s
}

pub fn pforms(report: &PFormReport, with_trace: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}: {} K-types", report.spec.case, report.ktypes.len());
    for k in &report.ktypes {
        let _ = writeln!(s, "\n{} dimension {}", k.tau, k.dimension);
        let restriction = k
            .restriction
            .iter()
            .map(|e| match e.multiplicity {
                1 => e.sigma.to_string(),
                m => format!("{m} {}", e.sigma),
            })
            .collect::<Vec<_>>();
        let _ = writeln!(s, "restriction to M: {}", restriction.join(" + "));
        s.push_str(&residues(&k.tau, &k.residues, with_trace));
    }
    s
}

pub fn table(report: &TableReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{}: principal series with trivial infinitesimal character",
        report.case
    );
    for row in &report.principal_series {
        let gk = match row.gk_alternative {
            Some(alt) => format!("{} (or {alt})", row.gk_dim),
            None => row.gk_dim.to_string(),
        };
        let layers: Vec<String> = row.layers.iter().map(list).collect();
        let _ = writeln!(
            s,
            "  PS({},{})  gamma {}  GK {}{}  layers {}",
            row.i,
            row.j,
            row.gamma,
            gk,
            if row.finite_dim { " finite" } else { "" },
            layers.join(" / ")
        );
    }
    for row in &report.discrete_series {
        let _ = writeln!(
            s,
            "  DS({})  HC parameter {}  GK {}",
            row.index, row.hc_param, row.gk_dim
        );
    }
    s
}

pub fn selftest(suites: &[SuiteResult]) -> String {
    let mut s = String::new();
    for suite in suites {
        let devs = if suite.deviations.is_empty() {
            String::new()
        } else {
            format!(" deviations: {}", list(&suite.deviations))
        };
        let _ = writeln!(
            s,
            "{} criterion {} {}: {} checks{devs}",
            if suite.passed() { "PASS" } else { "FAIL" },
            suite.criterion,
            suite.name,
            suite.checked
        );
        for f in &suite.failures {
            let _ = writeln!(s, "    {f}");
        }
    }
    s
}
