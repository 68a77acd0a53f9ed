//! The versioned JSON report schema and its deterministic serialization.
//!
//! Field names and verdict strings are part of the output contract. Two
//! runs with the same seed and budgets produce byte-identical files: all
//! maps are ordered, entry order follows corpus order, and no field
//! depends on timing or iteration order of hash containers.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::pgroup::CheckReport;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "vacuous")]
    Vacuous,
    #[serde(rename = "skipped(oversize)")]
    SkippedOversize,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail => write!(f, "fail"),
            Verdict::Vacuous => write!(f, "vacuous"),
            Verdict::SkippedOversize => write!(f, "skipped(oversize)"),
        }
    }
}

/// One check outcome as it appears in the report.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub check_id: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckRecord {
    pub fn from_check(c: &CheckReport) -> Self {
        let verdict = if c.is_vacuous() {
            Verdict::Vacuous
        } else if c.conclusion_held {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        CheckRecord {
            check_id: c.check_id.clone(),
            verdict,
            witness: c.witness.clone(),
        }
    }

    pub fn skipped(id: impl Into<String>, witness: impl Into<String>) -> Self {
        CheckRecord {
            check_id: id.into(),
            verdict: Verdict::SkippedOversize,
            witness: Some(witness.into()),
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ConstructionOrders {
    pub g: Option<u64>,
    pub nu: Option<u64>,
    pub tensor: Option<u64>,
    pub delta: Option<u64>,
    pub mu: Option<u64>,
    pub schur_multiplier: Option<u64>,
    pub chi: Option<u64>,
    pub l: Option<u64>,
    pub d: Option<u64>,
    pub w: Option<u64>,
    pub r: Option<u64>,
    pub t: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryReport {
    pub group: String,
    pub construction_orders: ConstructionOrders,
    pub checks: Vec<CheckRecord>,
    /// Per-theorem verdicts, keyed by "A", "B", "C", "construction",
    /// "cross", "lemmas".
    pub verdicts: BTreeMap<String, Verdict>,
}

impl EntryReport {
    /// Aggregates a block of checks into one verdict: any failure fails,
    /// any skip (without failure) skips, all-vacuous is vacuous.
    pub fn aggregate(records: &[CheckRecord]) -> Verdict {
        if records.iter().any(|r| r.verdict == Verdict::Fail) {
            return Verdict::Fail;
        }
        if records.iter().any(|r| r.verdict == Verdict::SkippedOversize) {
            return Verdict::SkippedOversize;
        }
        if records.iter().all(|r| r.verdict == Verdict::Vacuous) && !records.is_empty() {
            return Verdict::Vacuous;
        }
        Verdict::Pass
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub seed: u64,
    pub profile: String,
    /// Paper-claim coverage: claim id -> check ids present in this report.
    pub coverage: BTreeMap<String, Vec<String>>,
    pub entries: Vec<EntryReport>,
}

impl Report {
    pub fn any_failure(&self) -> bool {
        self.entries.iter().any(|e| {
            e.checks.iter().any(|c| c.verdict == Verdict::Fail)
                || e.verdicts.values().any(|v| *v == Verdict::Fail)
        })
    }

    pub fn any_oversize(&self) -> bool {
        self.entries.iter().any(|e| {
            e.checks.iter().any(|c| c.verdict == Verdict::SkippedOversize)
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    /// Human-readable rendering, derived from the JSON structure.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        use std::fmt::Write;
        for e in &self.entries {
            let o = &e.construction_orders;
            let fmt_opt = |v: Option<u64>| v.map_or("-".to_string(), |x| x.to_string());
            writeln!(
                out,
                "{}: |G|={} |nu|={} |[G,G^phi]|={} |mu|={} |Delta|={} |M|={} |chi|={} |L|={} |D|={} |W|={} |R|={} |T|={}",
                e.group,
                fmt_opt(o.g),
                fmt_opt(o.nu),
                fmt_opt(o.tensor),
                fmt_opt(o.mu),
                fmt_opt(o.delta),
                fmt_opt(o.schur_multiplier),
                fmt_opt(o.chi),
                fmt_opt(o.l),
                fmt_opt(o.d),
                fmt_opt(o.w),
                fmt_opt(o.r),
                fmt_opt(o.t),
            )
            .unwrap();
            for (theorem, verdict) in &e.verdicts {
                writeln!(out, "  {theorem}: {verdict}").unwrap();
            }
            for c in &e.checks {
                if c.verdict == Verdict::Fail || c.verdict == Verdict::SkippedOversize {
                    writeln!(
                        out,
                        "  ! {} -> {}{}",
                        c.check_id,
                        c.verdict,
                        c.witness.as_deref().map(|w| format!(" ({w})")).unwrap_or_default()
                    )
                    .unwrap();
                }
            }
        }
        out
    }
}

/// The paper-claim coverage table: every claim the harness tracks, with
/// the check-id prefixes that witness it.
pub fn claim_table() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        ("nu_defining_relations", vec!["nu_relations_sampled", "nu_block_embedding"]),
        ("tensor_square_as_commutator", vec!["nu_order_identity", "abelian_tensor_oracle"]),
        ("exact_sequence_delta_mu_schur", vec!["delta_in_mu", "schur_abelian_oracle"]),
        ("mu_central_kernel_of_rho", vec!["mu_central", "rho_tensor_image_is_derived"]),
        ("chi_defining_relations", vec!["chi_order_identity_d"]),
        ("chi_maps_onto_g_with_kernel_l", vec!["chi_order_identity_l"]),
        ("chi_maps_onto_t_with_kernel_w", vec!["chi_order_identity_t", "w_is_abelian"]),
        ("l_and_d_commute", vec!["l_d_commute"]),
        ("w_is_l_meet_d", vec!["w_equals_l_meet_d"]),
        ("r_is_normal_bracket", vec!["r_is_normal"]),
        ("quotient_iso_nu_delta_chi_r", vec!["cross_nu_delta_chi_r_order", "cross_nu_delta_chi_r_fingerprint"]),
        ("schur_via_w_over_r", vec!["cross_schur_w_r_vs_mu_delta"]),
        ("powerful_definition", vec!["tag_powerful"]),
        ("potent_definition", vec!["tag_potent", "potent_iff_powerful_small_p"]),
        ("embedded_definitions", vec!["self_embedding_iff_potent"]),
        ("power_abelian_conditions", vec!["power_abelian_1", "power_abelian_2", "power_abelian_3"]),
        ("lemma_2_2_normal", vec!["lemma_normal"]),
        ("hall_collection_formula", vec!["hall_collection"]),
        ("lemma_2_3_power_commutator", vec!["lemma_power_commutator"]),
        ("lemma_2_4_potent_lcs", vec!["lemma_potent_lcs"]),
        ("prop_3_1_tec", vec!["prop_tec"]),
        ("nr1_lcs_decomposition", vec!["lcs_nu_decomposition"]),
        ("jjj_omega_exponent_bound", vec!["omega_exponent_bound"]),
        ("theorem_a_tensor_potently_embedded", vec!["thmA_a"]),
        ("theorem_a_gamma_potently_embedded", vec!["thmA_b"]),
        ("theorem_b_exponent_bound", vec!["thmB_a"]),
        ("theorem_b_potent_nu", vec!["thmB_b"]),
        ("corollary_nu_potent_p_ge_5", vec!["corB_nu_potent"]),
        ("corollary_exp_schur_mu_divide", vec!["corB_exp_schur_divides", "corB_exp_mu_divides"]),
        ("theorem_c_powerfully_embedded", vec!["thmC_chi_derived", "thmC_d_embedded"]),
        ("remark_4_2_counterexample", vec!["remark42"]),
        ("corollary_chi_potent_p_ge_5", vec!["corC_chi_potent", "corC_exp_chi_divides"]),
        ("generator_triples_experiment", vec!["generator_triples_agreement"]),
    ]
}

/// Builds the coverage map for a finished report and verifies every claim
/// has at least one witnessing check id present.
pub fn coverage_map(entries: &[EntryReport]) -> BTreeMap<String, Vec<String>> {
    let mut present: Vec<&str> = Vec::new();
    for e in entries {
        for c in &e.checks {
            present.push(&c.check_id);
        }
    }
    let mut map = BTreeMap::new();
    for (claim, prefixes) in claim_table() {
        let mut ids: Vec<String> = present
            .iter()
            .filter(|id| prefixes.iter().any(|p| id.starts_with(p)))
            .map(|s| s.to_string())
            .collect();
        ids.sort();
        ids.dedup();
        map.insert(claim.to_string(), ids);
    }
    map
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_strings_are_exact() {
        assert_eq!(serde_json::to_string(&Verdict::Pass).unwrap(), "\"pass\"");
        assert_eq!(
            serde_json::to_string(&Verdict::SkippedOversize).unwrap(),
            "\"skipped(oversize)\""
        );
    }

    #[test]
    fn aggregate_rules() {
        let pass = CheckRecord {
            check_id: "x".into(),
            verdict: Verdict::Pass,
            witness: None,
        };
        let vac = CheckRecord {
            check_id: "y".into(),
            verdict: Verdict::Vacuous,
            witness: None,
        };
        let fail = CheckRecord {
            check_id: "z".into(),
            verdict: Verdict::Fail,
            witness: None,
        };
        let skip = CheckRecord {
            check_id: "s".into(),
            verdict: Verdict::SkippedOversize,
            witness: None,
        };
        assert_eq!(EntryReport::aggregate(&[pass.clone(), vac.clone()]), Verdict::Pass);
        assert_eq!(EntryReport::aggregate(&[vac.clone()]), Verdict::Vacuous);
        assert_eq!(EntryReport::aggregate(&[pass.clone(), fail]), Verdict::Fail);
        assert_eq!(EntryReport::aggregate(&[pass, skip, vac]), Verdict::SkippedOversize);
    }
}
