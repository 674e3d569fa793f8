//! Machine-checkable certificates.
//!
//! A certificate embeds enough to rebuild its graph from scratch (family
//! descriptor plus transform chain, never raw adjacency alone), a chromatic
//! witness whose optimality is re-derivable from the recorded clique number,
//! the infeasible list assignment, and a digest of the canonical graph
//! serialization. Verification rebuilds, revalidates, and re-solves
//! everything; nothing is trusted from the file.

mod observ;
mod registry;

pub use observ::{
    find_edge_coloring, observ_search, GadgetSpec, GadgetVertex, ObservBudget, ObservReport,
    ObservWitness,
};
pub use registry::{instantiate, CertParams, TheoremId, TheoremInstance};

use crate::error::{Error, Result};
use crate::families::FamilyDescriptor;
use crate::graph::StructureReport;
use crate::io;
use crate::solver::{
    chromatic_number, list_colorable, validate_coloring, Coloring, ListAssignment, SolveOptions,
};
use crate::transforms::{apply_chain, TransformOp};
use serde::{Deserialize, Serialize};

pub const CERT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SolverStats {
    pub chi_nodes: u64,
    pub chi_millis: u64,
    pub infeasibility_nodes: Option<u64>,
    pub infeasibility_millis: Option<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: u32,
    pub theorem: String,
    pub provenance: String,
    pub family: FamilyDescriptor,
    pub transform_chain: Vec<TransformOp>,
    pub structure: StructureReport,
    pub chi: u32,
    pub chi_witness: Coloring,
    /// The list assignment claimed infeasible on the transformed graph,
    /// when the theorem makes one.
    pub infeasible_lists: Option<ListAssignment>,
    pub solver_stats: SolverStats,
    pub graph_digest: String,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        let cert: Certificate = serde_json::from_str(text)?;
        if cert.schema_version != CERT_SCHEMA_VERSION {
            return Err(Error::Format {
                what: "certificate",
                detail: format!("schema version {} unsupported", cert.schema_version),
            });
        }
        Ok(cert)
    }
}

/// Builds the family, applies the transforms, solves everything, and emits
/// a self-contained certificate. Fails loudly on any verdict that
/// contradicts the registered claim.
pub fn make_certificate(
    id: TheoremId,
    params: &CertParams,
    opts: &SolveOptions,
) -> Result<Certificate> {
    let inst = instantiate(id, params, opts)?;
    let target = &inst.target;
    let chi_result = chromatic_number(target, opts)?;
    if chi_result.chi != inst.expected_chi {
        return Err(Error::ClaimMismatch(format!(
            "{}: chromatic number {} but the claim says {}",
            id.id(),
            chi_result.chi,
            inst.expected_chi
        )));
    }
    let structure = target.structure_report()?;
    if structure.clique_number != chi_result.chi {
        return Err(Error::ClaimMismatch(format!(
            "{}: clique number {} does not certify the chromatic lower bound {}",
            id.id(),
            structure.clique_number,
            chi_result.chi
        )));
    }
    let mut stats = SolverStats {
        chi_nodes: chi_result.nodes,
        chi_millis: chi_result.millis,
        infeasibility_nodes: None,
        infeasibility_millis: None,
    };
    if let Some(lists) = &inst.lists {
        let verdict = list_colorable(target, lists, opts)?;
        if verdict.is_unknown() {
            return Err(Error::BudgetExceeded { op: "make_certificate" });
        }
        if verdict.is_feasible() {
            return Err(Error::ClaimMismatch(format!(
                "{}: the list assignment is feasible, contradicting the claim",
                id.id()
            )));
        }
        stats.infeasibility_nodes = Some(verdict.nodes);
        stats.infeasibility_millis = Some(verdict.millis);
    }
    Ok(Certificate {
        schema_version: CERT_SCHEMA_VERSION,
        theorem: id.id().into(),
        provenance: inst.provenance,
        family: inst.family,
        transform_chain: inst.chain,
        structure,
        chi: chi_result.chi,
        chi_witness: chi_result.witness,
        infeasible_lists: inst.lists,
        solver_stats: stats,
        graph_digest: io::graph_digest(target),
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyReport {
    pub ok: bool,
    pub failures: Vec<String>,
}

/// Rebuilds the graph from the family descriptor and transform chain,
/// checks the digest, revalidates the chromatic witness (optimality via
/// the recorded exact clique number), and re-runs the infeasibility solve
/// from scratch.
pub fn verify_certificate(cert: &Certificate, opts: &SolveOptions) -> Result<VerifyReport> {
    let mut failures = Vec::new();
    let base = cert.family.build()?;
    let target = apply_chain(&base, &cert.transform_chain)?;
    if io::graph_digest(&target) != cert.graph_digest {
        failures.push("graph digest does not match the rebuild".into());
    }
    let structure = target.structure_report()?;
    if structure != cert.structure {
        failures.push("structure report does not match the rebuild".into());
    }
    match validate_coloring(&target, &cert.chi_witness, None) {
        Ok(report) if report.ok => {}
        Ok(report) => {
            for (a, b) in &report.violated_edges {
                failures.push(format!("chi witness violates edge {a} -- {b}"));
            }
        }
        Err(e) => failures.push(format!("chi witness invalid: {e}")),
    }
    if cert.chi_witness.colors_used().len() > cert.chi as usize {
        failures.push("chi witness uses more colors than claimed".into());
    }
    if structure.clique_number != cert.chi {
        failures.push(format!(
            "clique number {} does not certify the claimed chromatic number {}",
            structure.clique_number, cert.chi
        ));
    }
    if let Some(lists) = &cert.infeasible_lists {
        match lists.validate_against(&target) {
            Ok(()) => {
                let verdict = list_colorable(&target, lists, opts)?;
                if verdict.is_unknown() {
                    failures.push("infeasibility re-solve exceeded its budget".into());
                } else if verdict.is_feasible() {
                    failures.push(
                        "claimed-infeasible assignment is feasible; a coloring exists".into(),
                    );
                }
            }
            Err(e) => failures.push(format!("stored list assignment invalid: {e}")),
        }
    }
    Ok(VerifyReport {
        ok: failures.is_empty(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thm21_certificate_round_trips_and_verifies() {
        let opts = SolveOptions::default();
        let cert = make_certificate(TheoremId::Thm21, &CertParams::default(), &opts).unwrap();
        assert_eq!(cert.chi, 4);
        assert!(cert.infeasible_lists.is_some());
        let text = cert.to_json();
        let back = Certificate::from_json(&text).unwrap();
        let report = verify_certificate(&back, &opts).unwrap();
        assert!(report.ok, "failures: {:?}", report.failures);
    }

    #[test]
    fn tampered_witness_is_rejected() {
        let opts = SolveOptions::default();
        let mut cert = make_certificate(TheoremId::Thm21, &CertParams::default(), &opts).unwrap();
        let victim = cert.chi_witness.0.keys().next().cloned().unwrap();
        let old = cert.chi_witness.get(&victim).unwrap();
        cert.chi_witness.insert(victim, old % 4 + 1);
        let report = verify_certificate(&cert, &opts).unwrap();
        assert!(!report.ok);
        assert!(report
            .failures
            .iter()
            .any(|f| f.contains("witness violates edge")));
    }

    #[test]
    fn tampered_digest_is_rejected() {
        let opts = SolveOptions::default();
        let mut cert = make_certificate(TheoremId::Thm21, &CertParams::default(), &opts).unwrap();
        cert.graph_digest = format!("00{}", &cert.graph_digest[2..]);
        let report = verify_certificate(&cert, &opts).unwrap();
        assert!(!report.ok);
        assert!(report.failures.iter().any(|f| f.contains("digest")));
    }

    #[test]
    fn wrong_params_fail_loudly() {
        let opts = SolveOptions::default();
        let params = CertParams {
            n: Some(10),
            k: None,
        };
        // 10 is not divisible by 4: the claim does not apply
        assert!(make_certificate(TheoremId::Thm21, &params, &opts).is_err());
    }
}
