//! End-to-end check pipelines and their text/TSV rendering.
//!
//! A report bundles the chromatic-criticality decision, the
//! transversal-criticality decision at order three, and the set-pair
//! consequences of the latter. Renderers are deterministic: same input,
//! same bytes, regardless of worker count.

use num::One;

use crate::certify::{
    check_chromatic_critical_jobs, verify_bundle, BundleVerification, CriticalityReport,
};
use crate::corpus::{builtin_h9, H9_CERT_BUNDLE, H9_EDGE_LIST};
use crate::error::{Error, Result};
use crate::hypergraph::{emit_edge_list, Hypergraph};
use crate::setpairs::{
    bollobas_sum, edge_bound, permutation_event_audit, setpair_system_from_verdict,
    verify_cross_intersecting, ExactRational, PermutationAudit, SetPairSystem,
};
use crate::transversal::{check_tau_critical_jobs, TauCriticalVerdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportMode {
    Chromatic,
    Transversal,
    Full,
}

impl ReportMode {
    fn wants_chromatic(self) -> bool {
        matches!(self, ReportMode::Chromatic | ReportMode::Full)
    }

    fn wants_transversal(self) -> bool {
        matches!(self, ReportMode::Transversal | ReportMode::Full)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Tsv,
}

#[derive(Clone, Debug)]
pub struct ChromaticSection {
    pub report: CriticalityReport,
    /// Self-check: the freshly generated bundle replayed through the
    /// verifier, when the verdict produced one.
    pub bundle_verified: Option<bool>,
    pub pass: bool,
}

/// Consequences drawn from a positive transversal-criticality verdict.
#[derive(Clone, Debug)]
pub struct SetPairChecks {
    pub cross_intersecting: bool,
    pub sum: ExactRational,
    pub sum_le_one: bool,
    pub edge_count: usize,
    pub edge_bound: u64,
    pub within_edge_bound: bool,
    pub min_degree_le_six: bool,
}

#[derive(Clone, Debug)]
pub struct TransversalSection {
    pub verdict: TauCriticalVerdict,
    /// Present exactly when the verdict is critical.
    pub checks: Option<SetPairChecks>,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct ReportOutcome {
    pub mode: ReportMode,
    pub chromatic: Option<ChromaticSection>,
    pub transversal: Option<TransversalSection>,
    /// Every requested section passed.
    pub pass: bool,
}

/// Runs the checks selected by `mode`. The transversal half tests
/// criticality of order three on 3-uniform input and, on success, extracts
/// the set-pair system and checks the weight sum, the ten-edge bound, and
/// the degree consequence.
pub fn run_report(h: &Hypergraph, mode: ReportMode, jobs: usize) -> Result<ReportOutcome> {
    let chromatic = if mode.wants_chromatic() {
        let report = check_chromatic_critical_jobs(h, jobs)?;
        let bundle_verified = report.bundle.as_ref().map(|b| verify_bundle(h, b).pass);
        let pass = report.verdict && bundle_verified == Some(true);
        Some(ChromaticSection {
            report,
            bundle_verified,
            pass,
        })
    } else {
        None
    };

    let transversal = if mode.wants_transversal() {
        let verdict = check_tau_critical_jobs(h, 3, 3, jobs)?;
        let checks = if verdict.is_critical {
            let sys = setpair_system_from_verdict(&verdict)?;
            let sum = bollobas_sum(&sys);
            let bound = edge_bound(3, 3);
            Some(SetPairChecks {
                cross_intersecting: verify_cross_intersecting(&sys),
                sum_le_one: sum <= ExactRational::one(),
                sum,
                edge_count: h.edge_count(),
                edge_bound: bound,
                within_edge_bound: h.edge_count() as u64 <= bound,
                min_degree_le_six: h.min_degree().is_none_or(|d| d <= 6),
            })
        } else {
            None
        };
        let pass = verdict.is_critical
            && checks.as_ref().is_some_and(|c| {
                c.cross_intersecting && c.sum_le_one && c.within_edge_bound && c.min_degree_le_six
            });
        Some(TransversalSection {
            verdict,
            checks,
            pass,
        })
    } else {
        None
    };

    let pass =
        chromatic.as_ref().is_none_or(|s| s.pass) && transversal.as_ref().is_none_or(|s| s.pass);
    Ok(ReportOutcome {
        mode,
        chromatic,
        transversal,
        pass,
    })
}

/// Everything the `bollobas` pipeline learns about one hypergraph.
#[derive(Clone, Debug)]
pub struct BollobasReport {
    pub system: SetPairSystem,
    pub cross_intersecting: bool,
    pub sum: ExactRational,
    pub sum_le_one: bool,
    /// Full enumeration of ground-set orderings; skipped when the ground
    /// set is too large.
    pub audit: Option<PermutationAudit>,
    pub pass: bool,
}

/// Extracts the set-pair system of a transversal-critical 3-uniform
/// hypergraph, evaluates the weight sum, and re-derives the inequality by
/// brute force when the ground set allows it.
pub fn run_bollobas(h: &Hypergraph) -> Result<BollobasReport> {
    let system = crate::setpairs::extract_setpair_system(h)?;
    let cross_intersecting = verify_cross_intersecting(&system);
    let sum = bollobas_sum(&system);
    let sum_le_one = sum <= ExactRational::one();
    let audit = match permutation_event_audit(&system) {
        Ok(a) => Some(a),
        Err(Error::GroundTooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    let audit_ok = audit
        .as_ref()
        .is_none_or(|a| a.pairwise_disjoint && a.events.iter().all(|e| e.exact));
    let pass = cross_intersecting && sum_le_one && audit_ok;
    Ok(BollobasReport {
        system,
        cross_intersecting,
        sum,
        sum_le_one,
        audit,
        pass,
    })
}

/// Confirms the compiled-in golden data still matches the code paths that
/// recompute it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeedCheck {
    /// Emitting the built-in nine-vertex instance reproduces the shipped
    /// listing byte for byte.
    pub edge_list_intact: bool,
    /// The shipped certificate bundle verifies completely against it.
    pub certificates_pass: bool,
    pub pass: bool,
}

pub fn seed_check() -> SeedCheck {
    let h9 = builtin_h9();
    let edge_list_intact = emit_edge_list(&h9) == H9_EDGE_LIST;
    let certificates_pass = match crate::certify::parse_bundle(H9_CERT_BUNDLE) {
        Ok(bundle) => verify_bundle(&h9, &bundle).pass,
        Err(_) => false,
    };
    SeedCheck {
        edge_list_intact,
        certificates_pass,
        pass: edge_list_intact && certificates_pass,
    }
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn tf(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn degrees_cell(report: &CriticalityReport) -> String {
    if report.degrees.is_empty() {
        return "-".to_string();
    }
    report
        .degrees
        .iter()
        .map(|(v, d)| format!("{v}:{d}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn min_degree_cell(report: &CriticalityReport) -> String {
    report
        .min_degree
        .map_or_else(|| "-".to_string(), |d| d.to_string())
}

fn count_true<I: Iterator<Item = bool>>(iter: I) -> usize {
    iter.filter(|&b| b).count()
}

/// Full multi-line report.
pub fn render_report(o: &ReportOutcome, format: Format) -> String {
    let mut out = String::new();
    if let Some(s) = &o.chromatic {
        let r = &s.report;
        let edges_ok = count_true(r.edge_critical.values().copied());
        let verts_ok = count_true(r.vertex_critical.values().copied());
        let entries = r
            .bundle
            .as_ref()
            .map_or(0, |b| b.edge_certs.len() + b.vertex_certs.len());
        match format {
            Format::Text => {
                out.push_str(&format!("chromatic number: {}\n", r.chi));
                out.push_str(&format!("min degree: {}\n", min_degree_cell(r)));
                out.push_str(&format!("degrees: {}\n", degrees_cell(r)));
                out.push_str(&format!("isolated vertices: {}\n", r.isolated));
                out.push_str(&format!(
                    "edge deletions 2-colourable: {}/{}\n",
                    edges_ok,
                    r.edge_critical.len()
                ));
                out.push_str(&format!(
                    "vertex deletions 2-colourable: {}/{}\n",
                    verts_ok,
                    r.vertex_critical.len()
                ));
                out.push_str(&format!("certificates generated: {entries}\n"));
                if let Some(ok) = s.bundle_verified {
                    out.push_str(&format!("certificates verified: {}\n", yn(ok)));
                }
                out.push_str(&format!("critically 3-chromatic: {}\n", yn(s.pass)));
            }
            Format::Tsv => {
                out.push_str(&format!("chromatic.chi\t{}\n", r.chi));
                out.push_str(&format!("chromatic.min_degree\t{}\n", min_degree_cell(r)));
                out.push_str(&format!("chromatic.degrees\t{}\n", degrees_cell(r)));
                out.push_str(&format!("chromatic.isolated\t{}\n", r.isolated));
                out.push_str(&format!("chromatic.edges_ok\t{edges_ok}\n"));
                out.push_str(&format!(
                    "chromatic.edges_total\t{}\n",
                    r.edge_critical.len()
                ));
                out.push_str(&format!("chromatic.vertices_ok\t{verts_ok}\n"));
                out.push_str(&format!(
                    "chromatic.vertices_total\t{}\n",
                    r.vertex_critical.len()
                ));
                out.push_str(&format!("chromatic.bundle_entries\t{entries}\n"));
                if let Some(ok) = s.bundle_verified {
                    out.push_str(&format!("chromatic.bundle_verified\t{}\n", tf(ok)));
                }
                out.push_str(&format!("chromatic.verdict\t{}\n", tf(s.pass)));
            }
        }
    }
    if let Some(s) = &o.transversal {
        let v = &s.verdict;
        let dropping = v.per_edge.iter().filter(|d| d.tau_after < v.t).count();
        match format {
            Format::Text => {
                out.push_str(&format!(
                    "transversal number: {} (witness {})\n",
                    v.tau, v.tau_witness
                ));
                out.push_str(&format!(
                    "edge deletions dropping below {}: {}/{}\n",
                    v.t,
                    dropping,
                    v.per_edge.len()
                ));
                out.push_str(&format!(
                    "transversal-critical of order {}: {}\n",
                    v.t,
                    yn(v.is_critical)
                ));
            }
            Format::Tsv => {
                out.push_str(&format!("transversal.tau\t{}\n", v.tau));
                out.push_str(&format!("transversal.tau_witness\t{}\n", v.tau_witness));
                out.push_str(&format!("transversal.edges_dropping\t{dropping}\n"));
                out.push_str(&format!("transversal.edges_total\t{}\n", v.per_edge.len()));
                out.push_str(&format!("transversal.verdict\t{}\n", tf(v.is_critical)));
            }
        }
        if let Some(c) = &s.checks {
            match format {
                Format::Text => {
                    out.push_str(&format!(
                        "set pairs cross-intersecting: {}\n",
                        yn(c.cross_intersecting)
                    ));
                    out.push_str(&format!(
                        "weight sum: {} (at most 1: {})\n",
                        c.sum,
                        yn(c.sum_le_one)
                    ));
                    out.push_str(&format!(
                        "edges: {} (bound {}, within: {})\n",
                        c.edge_count,
                        c.edge_bound,
                        yn(c.within_edge_bound)
                    ));
                    out.push_str(&format!(
                        "min degree at most 6: {}\n",
                        yn(c.min_degree_le_six)
                    ));
                }
                Format::Tsv => {
                    out.push_str(&format!(
                        "setpairs.cross_intersecting\t{}\n",
                        tf(c.cross_intersecting)
                    ));
                    out.push_str(&format!("setpairs.sum\t{}\n", c.sum));
                    out.push_str(&format!("setpairs.sum_le_one\t{}\n", tf(c.sum_le_one)));
                    out.push_str(&format!("setpairs.edge_count\t{}\n", c.edge_count));
                    out.push_str(&format!("setpairs.edge_bound\t{}\n", c.edge_bound));
                    out.push_str(&format!(
                        "setpairs.within_edge_bound\t{}\n",
                        tf(c.within_edge_bound)
                    ));
                    out.push_str(&format!(
                        "setpairs.min_degree_le_six\t{}\n",
                        tf(c.min_degree_le_six)
                    ));
                }
            }
        }
    }
    match format {
        Format::Text => out.push_str(&format!("all requested checks: {}\n", yn(o.pass))),
        Format::Tsv => out.push_str(&format!("report.pass\t{}\n", tf(o.pass))),
    }
    out
}

/// Verdict lines only, for the `critical` command.
pub fn render_verdicts(o: &ReportOutcome, format: Format) -> String {
    let mut out = String::new();
    if let Some(s) = &o.chromatic {
        match format {
            Format::Text => out.push_str(&format!("critically 3-chromatic: {}\n", yn(s.pass))),
            Format::Tsv => out.push_str(&format!("chromatic.verdict\t{}\n", tf(s.pass))),
        }
    }
    if let Some(s) = &o.transversal {
        match format {
            Format::Text => out.push_str(&format!(
                "transversal-critical of order {}: {}\n",
                s.verdict.t,
                yn(s.pass)
            )),
            Format::Tsv => out.push_str(&format!("transversal.verdict\t{}\n", tf(s.pass))),
        }
    }
    if o.mode == ReportMode::Full {
        match format {
            Format::Text => out.push_str(&format!("all requested checks: {}\n", yn(o.pass))),
            Format::Tsv => out.push_str(&format!("report.pass\t{}\n", tf(o.pass))),
        }
    }
    out
}

/// Pair table, weight sum, and the ordering audit.
pub fn render_bollobas(r: &BollobasReport, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            out.push_str(&format!("pairs: {}\n", r.system.len()));
            for (i, p) in r.system.pairs().iter().enumerate() {
                out.push_str(&format!("pair {}: A = {}, B = {}\n", i + 1, p.a, p.b));
            }
            out.push_str(&format!(
                "cross-intersecting: {}\n",
                yn(r.cross_intersecting)
            ));
            out.push_str(&format!(
                "weight sum: {} (at most 1: {})\n",
                r.sum,
                yn(r.sum_le_one)
            ));
            match &r.audit {
                Some(a) => {
                    out.push_str(&format!(
                        "audit: {} orderings of {}, pairwise disjoint: {}\n",
                        a.total,
                        a.ground,
                        yn(a.pairwise_disjoint)
                    ));
                    for (i, e) in a.events.iter().enumerate() {
                        out.push_str(&format!(
                            "audit pair {}: count = {}, exact share: {}\n",
                            i + 1,
                            e.count,
                            yn(e.exact)
                        ));
                    }
                    out.push_str(&format!("audit covered: {}/{}\n", a.covered, a.total));
                }
                None => out.push_str("audit: skipped (ground set too large)\n"),
            }
            out.push_str(&format!("pass: {}\n", yn(r.pass)));
        }
        Format::Tsv => {
            out.push_str(&format!("bollobas.pairs\t{}\n", r.system.len()));
            for (i, p) in r.system.pairs().iter().enumerate() {
                out.push_str(&format!("bollobas.pair.{}.a\t{}\n", i + 1, p.a));
                out.push_str(&format!("bollobas.pair.{}.b\t{}\n", i + 1, p.b));
            }
            out.push_str(&format!(
                "bollobas.cross_intersecting\t{}\n",
                tf(r.cross_intersecting)
            ));
            out.push_str(&format!("bollobas.sum\t{}\n", r.sum));
            out.push_str(&format!("bollobas.sum_le_one\t{}\n", tf(r.sum_le_one)));
            match &r.audit {
                Some(a) => {
                    out.push_str(&format!("audit.total\t{}\n", a.total));
                    out.push_str(&format!("audit.ground\t{}\n", a.ground));
                    out.push_str(&format!(
                        "audit.pairwise_disjoint\t{}\n",
                        tf(a.pairwise_disjoint)
                    ));
                    for (i, e) in a.events.iter().enumerate() {
                        out.push_str(&format!("audit.pair.{}.count\t{}\n", i + 1, e.count));
                        out.push_str(&format!("audit.pair.{}.exact\t{}\n", i + 1, tf(e.exact)));
                    }
                    out.push_str(&format!("audit.covered\t{}\n", a.covered));
                }
                None => out.push_str("audit.skipped\ttrue\n"),
            }
            out.push_str(&format!("bollobas.pass\t{}\n", tf(r.pass)));
        }
    }
    out
}

/// Per-certificate results of replaying a bundle, failures and gaps spelt
/// out line by line.
pub fn render_verification(v: &BundleVerification, format: Format) -> String {
    let edges_ok = count_true(v.edge_results.iter().map(|&(_, ok)| ok));
    let verts_ok = count_true(v.vertex_results.iter().map(|&(_, ok)| ok));
    let mut out = String::new();
    match format {
        Format::Text => {
            out.push_str(&format!(
                "edge certificates: {}/{}\n",
                edges_ok,
                v.edge_results.len()
            ));
            out.push_str(&format!(
                "vertex certificates: {}/{}\n",
                verts_ok,
                v.vertex_results.len()
            ));
            for &(e, ok) in &v.edge_results {
                if !ok {
                    out.push_str(&format!("failed edge certificate: {e}\n"));
                }
            }
            for &(x, ok) in &v.vertex_results {
                if !ok {
                    out.push_str(&format!("failed vertex certificate: {x}\n"));
                }
            }
            for e in &v.missing_edges {
                out.push_str(&format!("missing edge certificate: {e}\n"));
            }
            for x in &v.missing_vertices {
                out.push_str(&format!("missing vertex certificate: {x}\n"));
            }
            out.push_str(&format!("bundle valid and complete: {}\n", yn(v.pass)));
        }
        Format::Tsv => {
            out.push_str(&format!("verify.edges_ok\t{edges_ok}\n"));
            out.push_str(&format!("verify.edges_total\t{}\n", v.edge_results.len()));
            out.push_str(&format!("verify.vertices_ok\t{verts_ok}\n"));
            out.push_str(&format!(
                "verify.vertices_total\t{}\n",
                v.vertex_results.len()
            ));
            for &(e, ok) in &v.edge_results {
                if !ok {
                    out.push_str(&format!("verify.failed.edge\t{e}\n"));
                }
            }
            for &(x, ok) in &v.vertex_results {
                if !ok {
                    out.push_str(&format!("verify.failed.vertex\t{x}\n"));
                }
            }
            for e in &v.missing_edges {
                out.push_str(&format!("verify.missing.edge\t{e}\n"));
            }
            for x in &v.missing_vertices {
                out.push_str(&format!("verify.missing.vertex\t{x}\n"));
            }
            out.push_str(&format!("verify.pass\t{}\n", tf(v.pass)));
        }
    }
    out
}

pub fn render_seed(s: &SeedCheck, format: Format) -> String {
    match format {
        Format::Text => format!(
            "seed edge list intact: {}\nseed certificates verified: {}\nseed check: {}\n",
            yn(s.edge_list_intact),
            yn(s.certificates_pass),
            yn(s.pass)
        ),
        Format::Tsv => format!(
            "seed.edge_list_intact\t{}\nseed.certificates_pass\t{}\nseed.pass\t{}\n",
            tf(s.edge_list_intact),
            tf(s.certificates_pass),
            tf(s.pass)
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::complete_uniform;
    use crate::vset::VertexSet;

    #[test]
    fn complete_5_3_passes_the_full_pipeline() {
        let k53 = complete_uniform(5, 3).unwrap();
        let o = run_report(&k53, ReportMode::Full, 1).unwrap();
        assert!(o.pass);
        let c = o.chromatic.as_ref().unwrap();
        assert_eq!(c.report.chi, 3);
        assert_eq!(c.bundle_verified, Some(true));
        let t = o.transversal.as_ref().unwrap();
        assert!(t.verdict.is_critical);
        let checks = t.checks.as_ref().unwrap();
        assert!(checks.cross_intersecting);
        assert_eq!(checks.sum, ExactRational::one());
        assert_eq!(checks.edge_count, 10);
        assert_eq!(checks.edge_bound, 10);
        assert!(checks.within_edge_bound);
        assert!(checks.min_degree_le_six);
    }

    #[test]
    fn nine_vertex_example_is_chromatic_but_not_transversal_critical() {
        let h9 = builtin_h9();
        let o = run_report(&h9, ReportMode::Full, 1).unwrap();
        assert!(!o.pass);
        assert!(o.chromatic.as_ref().unwrap().pass);
        let t = o.transversal.as_ref().unwrap();
        assert!(!t.pass);
        assert!(!t.verdict.is_critical);
        assert!(t.checks.is_none());

        let solo = run_report(&h9, ReportMode::Chromatic, 1).unwrap();
        assert!(solo.pass);
        assert!(solo.transversal.is_none());
    }

    #[test]
    fn single_edge_fails_both_halves() {
        let lone = Hypergraph::new(3, vec![VertexSet::from_vertices(&[1, 2, 3])]).unwrap();
        let o = run_report(&lone, ReportMode::Full, 1).unwrap();
        assert!(!o.pass);
        assert!(!o.chromatic.as_ref().unwrap().pass);
        assert!(!o.transversal.as_ref().unwrap().pass);
    }

    #[test]
    fn bollobas_pipeline_on_the_extremal_instance() {
        let k53 = complete_uniform(5, 3).unwrap();
        let r = run_bollobas(&k53).unwrap();
        assert!(r.pass);
        assert_eq!(r.system.len(), 10);
        assert_eq!(r.sum, ExactRational::one());
        let audit = r.audit.unwrap();
        assert_eq!(audit.total, 120);
        assert!(audit.pairwise_disjoint);

        let lone = Hypergraph::new(3, vec![VertexSet::from_vertices(&[1, 2, 3])]).unwrap();
        assert!(matches!(run_bollobas(&lone), Err(Error::NotTauCritical(3))));
    }

    #[test]
    fn seed_data_is_intact() {
        let s = seed_check();
        assert!(s.edge_list_intact);
        assert!(s.certificates_pass);
        assert!(s.pass);
    }

    #[test]
    fn rendering_is_deterministic_and_keyed() {
        let k53 = complete_uniform(5, 3).unwrap();
        let a = run_report(&k53, ReportMode::Full, 1).unwrap();
        let b = run_report(&k53, ReportMode::Full, 4).unwrap();
        for format in [Format::Text, Format::Tsv] {
            assert_eq!(render_report(&a, format), render_report(&b, format));
        }
        let tsv = render_report(&a, Format::Tsv);
        assert!(tsv.contains("chromatic.chi\t3\n"));
        assert!(tsv.contains("setpairs.sum\t1\n"));
        assert!(tsv.contains("report.pass\ttrue\n"));
        let text = render_report(&a, Format::Text);
        assert!(text.contains("all requested checks: yes\n"));
        assert!(text.ends_with('\n'));

        let verdicts = render_verdicts(&a, Format::Text);
        assert_eq!(
            verdicts,
            "critically 3-chromatic: yes\ntransversal-critical of order 3: yes\nall requested checks: yes\n"
        );
    }
}
