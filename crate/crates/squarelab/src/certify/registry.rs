//! The theorem registry: one row per reproducible claim, mapping an id to
//! its family builder, transform chain, expected chromatic number, and list
//! assignment. Adding a family means adding a row here.

use crate::error::{Error, Result};
use crate::families::{
    self, FamilyDescriptor, FamilyName, LatinSquare,
};
use crate::graph::Graph;
use crate::solver::{self, ListAssignment, SolveOptions};
use crate::transforms::{apply_chain, TransformOp};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremId {
    Thm21,
    Thm22,
    Thm31,
    Thm33,
    Sec32,
    Lp3,
    Lp2,
    Thm41,
    Cor32,
    Cor34,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::Thm21,
        TheoremId::Thm22,
        TheoremId::Thm31,
        TheoremId::Thm33,
        TheoremId::Sec32,
        TheoremId::Lp3,
        TheoremId::Lp2,
        TheoremId::Thm41,
        TheoremId::Cor32,
        TheoremId::Cor34,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TheoremId::Thm21 => "thm-2.1",
            TheoremId::Thm22 => "thm-2.2",
            TheoremId::Thm31 => "thm-3.1",
            TheoremId::Thm33 => "thm-3.3",
            TheoremId::Sec32 => "sec-3.2",
            TheoremId::Lp3 => "thm-lp3",
            TheoremId::Lp2 => "thm-lp2",
            TheoremId::Thm41 => "thm-4.1",
            TheoremId::Cor32 => "cor-3.2",
            TheoremId::Cor34 => "cor-3.4",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown theorem id {s:?}")))
    }
}

/// Optional parameters accepted by `make_certificate`; each theorem fills
/// in its own defaults.
#[derive(Clone, Copy, Debug, Default)]
pub struct CertParams {
    pub n: Option<i64>,
    pub k: Option<i64>,
}

/// Everything needed to state and check one theorem instance.
pub struct TheoremInstance {
    pub theorem: TheoremId,
    pub family: FamilyDescriptor,
    pub chain: Vec<TransformOp>,
    pub target: Graph,
    pub expected_chi: u32,
    pub lists: Option<ListAssignment>,
    pub provenance: String,
}

fn claim_mismatch(what: impl Into<String>) -> Error {
    Error::ClaimMismatch(what.into())
}

fn check(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(claim_mismatch(what.to_string()))
    }
}

fn round_robin_latin(order: usize) -> Result<LatinSquare> {
    let rounds = families::one_factorization(order)?;
    families::latin_from_factorization(order, &rounds)
}

/// Builds the instance for a theorem id, running the structural checks the
/// claim depends on. Solver-facing checks (chromatic number, list
/// infeasibility) stay in `make_certificate`.
pub fn instantiate(id: TheoremId, params: &CertParams, opts: &SolveOptions) -> Result<TheoremInstance> {
    match id {
        TheoremId::Thm21 => {
            let n = params.n.unwrap_or(8);
            let family = FamilyDescriptor::new(FamilyName::Girth6Cubic, &[n]);
            if !family.claims_applicable() {
                return Err(Error::Parameter(format!(
                    "thm-2.1 needs n >= 8 divisible by 4, got {n}"
                )));
            }
            let base = family.build()?;
            check(base.n() == 2 * n as usize, "order 2n")?;
            check(base.regular_degree() == Some(3), "cubic")?;
            check(base.is_bipartite().is_some(), "bipartite")?;
            check(base.girth() == Some(6), "girth 6, in particular no 4-cycle")?;
            let chain = vec![TransformOp::Square];
            let target = apply_chain(&base, &chain)?;
            let lists = families::lists_thm21(&base, n)?;
            Ok(TheoremInstance {
                theorem: id,
                family,
                chain,
                target,
                expected_chi: 4,
                lists: Some(lists),
                provenance: format!(
                    "square of the girth-6 cubic bipartite ring on {} vertices: chromatic \
                     number 4, yet the 4-lists over 5 colors admit no coloring",
                    2 * n
                ),
            })
        }
        TheoremId::Thm22 => {
            let n = params.n.unwrap_or(12);
            let family = FamilyDescriptor::new(FamilyName::PlanarCubic, &[n]);
            if !family.claims_applicable() {
                return Err(Error::Parameter(format!(
                    "thm-2.2 needs n >= 12 divisible by 4, got {n}"
                )));
            }
            let base = family.build()?;
            check(base.regular_degree() == Some(3), "cubic")?;
            check(base.is_bipartite().is_some(), "bipartite")?;
            let chain = vec![TransformOp::Square];
            let target = apply_chain(&base, &chain)?;
            let lists = families::lists_thm22(&base, n)?;
            Ok(TheoremInstance {
                theorem: id,
                family,
                chain,
                target,
                expected_chi: 4,
                lists: Some(lists),
                provenance: format!(
                    "square of the consecutive-spoke cubic bipartite ring on {} vertices \
                     (drawn planar): chromatic number 4, 4-lists over 5 colors infeasible",
                    2 * n
                ),
            })
        }
        TheoremId::Thm31 => {
            let family = FamilyDescriptor::new(FamilyName::Complete, &[4]);
            let chain = vec![TransformOp::Subdivide, TransformOp::Line, TransformOp::Square];
            let base = family.build()?;
            let line = apply_chain(&base, &chain[..2])?;
            check(line.n() == 12, "L(S(K4)) has order 12")?;
            check(line.regular_degree() == Some(3), "cubic")?;
            check(line.is_claw_free()?, "claw-free")?;
            let target = crate::transforms::square(&line)?;
            let search = solver::search_bad_permutation_lsk4(opts)?;
            let perm = *search
                .infeasible
                .first()
                .ok_or_else(|| claim_mismatch("no infeasible bar-list distribution found"))?;
            let lists = families::lists_lsk4(&search.square, &search.independent_sets, &perm)?;
            Ok(TheoremInstance {
                theorem: id,
                family,
                chain,
                target,
                expected_chi: 4,
                lists: Some(lists),
                provenance: "square of the line graph of the subdivided K4 (cubic, claw-free, \
                             order 12): chromatic number 4; distributing the three bar-lists \
                             over its four maximum independent sets yields an infeasible \
                             4-list assignment over 5 colors"
                    .into(),
            })
        }
        TheoremId::Thm33 => {
            let family = FamilyDescriptor::new(FamilyName::Complete, &[6]);
            let chain = vec![TransformOp::Subdivide, TransformOp::Line, TransformOp::Square];
            let base = family.build()?;
            let line = apply_chain(&base, &chain[..2])?;
            check(line.n() == 30, "L(S(K6)) has order 30")?;
            check(line.regular_degree() == Some(5), "5-regular")?;
            check(line.is_claw_free()?, "claw-free")?;
            let target = crate::transforms::square(&line)?;
            let latin = round_robin_latin(6)?;
            let lists = families::lists_lsk6(&line, &latin)?;
            Ok(TheoremInstance {
                theorem: id,
                family,
                chain,
                target,
                expected_chi: 6,
                lists: Some(lists),
                provenance: "square of the line graph of the subdivided K6 (5-regular, \
                             claw-free, order 30): chromatic number 6; the symmetric \
                             Latin-square lists of size 6 over colors 0..6 are infeasible"
                    .into(),
            })
        }
        TheoremId::Sec32 => {
            let family = FamilyDescriptor::new(FamilyName::GenPetersen, &[5, 2]);
            let chain = vec![TransformOp::Line, TransformOp::Square];
            let base = family.build()?;
            let target = apply_chain(&base, &chain)?;
            check(target.n() == 15, "15 vertices")?;
            check(
                target.complete_multipartite_parts()? == Some(vec![3, 3, 3, 3, 3]),
                "square of the Petersen line graph is complete multipartite 3x5",
            )?;
            Ok(TheoremInstance {
                theorem: id,
                family,
                chain,
                target,
                expected_chi: 5,
                lists: None,
                provenance: "square of the line graph of the Petersen graph: the complete \
                             multipartite graph with five parts of size 3, chromatic number 5"
                    .into(),
            })
        }
        TheoremId::Lp3 => {
            let n = params.n.unwrap_or(15);
            let family = FamilyDescriptor::new(FamilyName::GenPetersen, &[n, 3]);
            let chain = vec![TransformOp::Line, TransformOp::Square];
            let base = family.build()?;
            let line = crate::transforms::line_graph(&base);
            check(line.regular_degree() == Some(4), "4-regular")?;
            check(line.is_claw_free()?, "claw-free")?;
            let target = crate::transforms::square(&line)?;
            let lists = families::lists_lp3(&line, n)?;
            Ok(TheoremInstance {
                theorem: id,
                family,
                chain,
                target,
                expected_chi: 5,
                lists: Some(lists),
                provenance: format!(
                    "square of the line graph of P({n},3): chromatic number 5; tail bar-lists \
                     of size 5 over 6 colors are infeasible"
                ),
            })
        }
        TheoremId::Lp2 => {
            let n = params.n.unwrap_or(10);
            let family = FamilyDescriptor::new(FamilyName::GenPetersen, &[n, 2]);
            let chain = vec![TransformOp::Line, TransformOp::Square];
            let base = family.build()?;
            let line = crate::transforms::line_graph(&base);
            check(line.regular_degree() == Some(4), "4-regular")?;
            check(line.is_claw_free()?, "claw-free")?;
            let target = crate::transforms::square(&line)?;
            let lists = families::lists_lp2(&line, n)?;
            Ok(TheoremInstance {
                theorem: id,
                family,
                chain,
                target,
                expected_chi: 5,
                lists: Some(lists),
                provenance: format!(
                    "square of the line graph of P({n},2): chromatic number 5; the uniform \
                     bar-lists of size 5 over 6 colors are infeasible"
                ),
            })
        }
        TheoremId::Thm41 => {
            let k = params.k.unwrap_or(3);
            let family = FamilyDescriptor::new(FamilyName::Sharpness, &[k]);
            let base = family.build()?;
            check(base.n() == (4 * k - 2) as usize, "order 4k-2")?;
            check(
                base.regular_degree() == Some(2 * k as usize - 2),
                "(2k-2)-regular",
            )?;
            let lists = families::lists_sharpness(&base, k)?;
            Ok(TheoremInstance {
                theorem: id,
                family,
                chain: Vec::new(),
                target: base,
                expected_chi: k as u32,
                lists: Some(lists),
                provenance: format!(
                    "the (2k-2)-regular sharpness construction at k={k}: chromatic number k \
                     equals half the maximum degree plus one, yet the k-lists over k+1 \
                     colors are infeasible"
                ),
            })
        }
        TheoremId::Cor32 => {
            let n = params.n.unwrap_or(1);
            instantiate_chain(id, 4, n, opts)
        }
        TheoremId::Cor34 => {
            let n = params.n.unwrap_or(1);
            instantiate_chain(id, 6, n, opts)
        }
    }
}

/// The chained corollary families: replace the edge v_{1,2} v_{2,1} of
/// L(S(K_t)) by a chain of n copies of K_t minus an edge, carry a base
/// infeasible assignment whose two endpoints share a list, and put that
/// shared list on every chain vertex.
fn instantiate_chain(id: TheoremId, t: i64, n: i64, opts: &SolveOptions) -> Result<TheoremInstance> {
    let family = FamilyDescriptor::new(FamilyName::ChainedLine, &[t, n]);
    let base = family.build()?;
    check(
        base.regular_degree() == Some(t as usize - 1),
        "(t-1)-regular",
    )?;
    check(base.is_claw_free()?, "claw-free")?;
    let chain = vec![TransformOp::Square];
    let target = apply_chain(&base, &chain)?;

    let end_x = families::lsk_vertex(1, 2);
    let end_y = families::lsk_vertex(2, 1);
    let lists = if t == 6 {
        let lsk = crate::transforms::line_graph(&crate::transforms::subdivision(
            &families::complete_graph(6)?,
        ));
        let latin = round_robin_latin(6)?;
        let base_lists = families::lists_lsk6(&lsk, &latin)?;
        families::lists_chained(&base, &base_lists)?
    } else {
        // Among the infeasible bar-list distributions of the K4 case, pick
        // the first whose replaced-edge endpoints share a list AND whose
        // chained extension re-verifies infeasible.
        let search = solver::search_bad_permutation_lsk4(opts)?;
        let sq = &search.square;
        let (xi, yi) = (
            sq.require_vertex(&end_x)?,
            sq.require_vertex(&end_y)?,
        );
        let mut chosen = None;
        for perm in &search.infeasible {
            let base_lists = families::lists_lsk4(sq, &search.independent_sets, perm)?;
            if base_lists.get(sq.label(xi)) != base_lists.get(sq.label(yi)) {
                continue;
            }
            let candidate = families::lists_chained(&base, &base_lists)?;
            let verdict = solver::list_colorable(&target, &candidate, opts)?;
            if verdict.is_unknown() {
                return Err(Error::BudgetExceeded { op: "cor-3.2" });
            }
            if verdict.is_infeasible() {
                chosen = Some(candidate);
                break;
            }
        }
        chosen.ok_or_else(|| {
            claim_mismatch("no chained extension of an infeasible K4 distribution re-verified")
        })?
    };
    let chi = t as u32;
    Ok(TheoremInstance {
        theorem: id,
        family,
        chain,
        target,
        expected_chi: chi,
        lists: Some(lists),
        provenance: format!(
            "square of the chained {}-regular claw-free family (t={t}, n={n}): chromatic \
             number {chi}; extending the base assignment by the shared list on the chain \
             vertices stays infeasible",
            t - 1
        ),
    })
}
