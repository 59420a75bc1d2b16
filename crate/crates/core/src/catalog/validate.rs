use super::{FamilyRecord, Rationality, Status};
use crate::cubic::{family_dimension, is_symplectic};
use crate::discriminant::{
    classify_by_rank, has_labelling, satisfies_star, satisfies_star_star, RankVerdict,
};
use crate::lattice::transcendental_rank;

/// Outcome of one recomputation against a recorded claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub check: String,
    pub passed: bool,
    pub claimed: String,
    pub recomputed: String,
}

impl CheckResult {
    fn new(
        check: impl Into<String>,
        passed: bool,
        claimed: impl ToString,
        recomputed: impl ToString,
    ) -> Self {
        CheckResult {
            check: check.into(),
            passed,
            claimed: claimed.to_string(),
            recomputed: recomputed.to_string(),
        }
    }
}

fn list(ds: &[u64]) -> String {
    if ds.is_empty() {
        return "none".into();
    }
    ds.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

/// Runs every check the record's data permits. Failures are results.
///
/// Rules applied to the recorded statuses:
/// * a membership `d` satisfying the Hodge condition forces `hodge = yes`, and
///   `hodge = yes` needs such a `d` or `rank A >= 12`;
/// * a membership with a twisted witness forces `twisted = yes`, and
///   `twisted = yes` needs one;
/// * `twisted = yes` forces `motivic = yes`; `hodge = yes` rules out
///   `twisted = no` and `motivic = no`;
/// * `motivic = yes` needs a transcendental lattice of rank at most 21;
/// * `rank A = 1` forces every status to `no`, `rank A >= 12` forces
///   `hodge = yes`;
/// * `rational` rules out `hodge = no`, `conjecturally_irrational` rules out
///   `hodge = yes`.
pub fn validate_record(r: &FamilyRecord) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let st = r.k3_status;

    if let (Some(a), Some(k)) = (r.automorphism, r.eigenvalue_k) {
        match family_dimension(&a, k) {
            Ok(dim) => {
                if let Some(claimed) = r.claimed_dimension {
                    out.push(CheckResult::new(
                        "dimension",
                        !dim.degenerate && dim.value == claimed,
                        claimed,
                        dim.value,
                    ));
                }
                let symp = is_symplectic(&a, k);
                out.push(CheckResult::new(
                    "symplectic",
                    symp == r.symplectic,
                    r.symplectic,
                    symp,
                ));
                out.push(CheckResult::new(
                    "nontrivial_action",
                    !a.is_trivial_action(),
                    "nontrivial",
                    if a.is_trivial_action() {
                        "trivial"
                    } else {
                        "nontrivial"
                    },
                ));
            }
            Err(e) => out.push(CheckResult::new("eigenvalue", false, k, e)),
        }
    }

    for &d in &r.divisor_memberships {
        out.push(CheckResult::new(
            format!("labelling[{d}]"),
            has_labelling(d),
            true,
            has_labelling(d),
        ));
    }

    let labelled: Vec<u64> = r
        .divisor_memberships
        .iter()
        .copied()
        .filter(|&d| has_labelling(d))
        .collect();
    let star: Vec<u64> = labelled
        .iter()
        .copied()
        .filter(|&d| satisfies_star(d))
        .collect();
    let witnessed: Vec<String> = labelled
        .iter()
        .filter_map(|&d| {
            let w = satisfies_star_star(d).ok().flatten()?;
            Some(format!("{d}:({},{},{})", w.f, w.g, w.n))
        })
        .collect();
    let rank = r.rank_a_claim.map(|c| c.effective());
    let verdict = rank
        .and_then(|x| classify_by_rank(x as i64).ok())
        .map(|c| c.verdict);
    let rank_forces = verdict == Some(RankVerdict::ForcesHodgeK3);

    let star_desc = format!(
        "star at [{}]{}",
        list(&star),
        if rank_forces { ", rank >= 12" } else { "" }
    );
    let hodge_ok = match st.hodge {
        Status::Yes => !star.is_empty() || rank_forces,
        Status::No | Status::Unknown => star.is_empty(),
    };
    out.push(CheckResult::new(
        "hodge_vs_star",
        hodge_ok,
        st.hodge.as_str(),
        star_desc,
    ));

    let twisted_desc = if witnessed.is_empty() {
        "no witness".to_string()
    } else {
        format!("witness {}", witnessed.join(" "))
    };
    let twisted_ok = match st.twisted {
        Status::Yes => !witnessed.is_empty(),
        Status::No | Status::Unknown => witnessed.is_empty(),
    };
    out.push(CheckResult::new(
        "twisted_vs_star_star",
        twisted_ok,
        st.twisted.as_str(),
        twisted_desc,
    ));

    let implied_ok = !(st.twisted == Status::Yes && st.motivic != Status::Yes)
        && !(st.hodge == Status::Yes && (st.twisted == Status::No || st.motivic == Status::No));
    out.push(CheckResult::new(
        "status_implications",
        implied_ok,
        format!(
            "hodge={} twisted={} motivic={}",
            st.hodge.as_str(),
            st.twisted.as_str(),
            st.motivic.as_str()
        ),
        "hodge => twisted, motivic; twisted => motivic",
    ));

    if let Some(rank) = rank {
        if st.motivic == Status::Yes {
            let tr = transcendental_rank(rank as i64).unwrap_or(u32::MAX);
            out.push(CheckResult::new(
                "motivic_transcendental_rank",
                tr <= 21,
                "<= 21",
                tr,
            ));
        }
    }

    if let Some(v) = verdict {
        let ok = match v {
            RankVerdict::VeryGeneral => {
                st.hodge == Status::No
                    && st.twisted == Status::No
                    && st.motivic == Status::No
                    && r.divisor_memberships.is_empty()
            }
            RankVerdict::ForcesHodgeK3 => st.hodge == Status::Yes,
            RankVerdict::Unconstrained => true,
        };
        out.push(CheckResult::new(
            "rank_rule",
            ok,
            st.hodge.as_str(),
            v.as_str(),
        ));
    }

    let rational_ok = match r.rationality {
        Rationality::Rational => st.hodge != Status::No,
        Rationality::ConjecturallyIrrational => st.hodge != Status::Yes,
        Rationality::Open => true,
    };
    out.push(CheckResult::new(
        "rationality_vs_hodge",
        rational_ok,
        r.rationality.as_str(),
        format!("hodge={}", st.hodge.as_str()),
    ));

    out
}
