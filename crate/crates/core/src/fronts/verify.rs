use std::collections::BTreeSet;

use serde::Serialize;

use super::{Front, FrontElement, InfSet, Schema};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub window: u64,
    pub members_checked: usize,
    /// A windowed member with an entry outside the base.
    pub member_outside_base: Option<FrontElement>,
    /// A base point below the window that starts no member.
    pub uncovered_base_point: Option<u64>,
    /// `(s, t)` with `s` a proper initial segment of `t`, both members.
    pub initial_segment_violation: Option<(FrontElement, FrontElement)>,
    /// Samples on which reading off a member failed, with the error.
    pub density_failures: Vec<(String, String)>,
    pub samples: usize,
}

impl VerifyReport {
    pub fn base_consistent(&self) -> bool {
        self.member_outside_base.is_none() && self.uncovered_base_point.is_none()
    }

    pub fn initial_segment_free(&self) -> bool {
        self.initial_segment_violation.is_none()
    }

    pub fn dense(&self) -> bool {
        self.density_failures.is_empty()
    }

    pub fn all_pass(&self) -> bool {
        self.base_consistent() && self.initial_segment_free() && self.dense()
    }
}

/// Checks the explicit front conditions on `[0, window)` and on the sampled
/// infinite sets.
pub fn front_verify(front: &Front, samples: &[InfSet], window: u64) -> VerifyReport {
    let members: Vec<FrontElement> = match front.schema() {
        Schema::Family(family) => family
            .iter()
            .filter(|m| m.iter().all(|&x| x < window))
            .cloned()
            .collect(),
        _ => front.members_below(window),
    };
    let member_outside_base = members
        .iter()
        .find(|m| m.iter().any(|&x| !front.base().contains(x)))
        .cloned();

    let uncovered_base_point = if front.is_trivial() {
        None
    } else {
        front.base().below(window).into_iter().find(|&n| {
            let from_n = InfSet::explicit(vec![n], front.base().after(n)).expect("single element");
            !matches!(front.step(&from_n), Ok(step) if step.member.first() == Some(&n))
        })
    };

    let set: BTreeSet<&FrontElement> = members.iter().collect();
    let initial_segment_violation = members.iter().find_map(|t| {
        (0..t.len())
            .map(|l| t[..l].to_vec())
            .find(|p| set.contains(p))
            .map(|p| (p, t.clone()))
    });

    let density_failures = samples
        .iter()
        .filter_map(|y| match front.step(y) {
            Ok(step) if front.member(&step.member) && y.prefix(step.modulus) == step.member => None,
            Ok(step) => Some((
                y.to_string(),
                format!("{:?} is not a member prefix", step.member),
            )),
            Err(e) => Some((y.to_string(), e.to_string())),
        })
        .collect();

    VerifyReport {
        window,
        members_checked: members.len(),
        member_outside_base,
        uncovered_base_point,
        initial_segment_violation,
        density_failures,
        samples: samples.len(),
    }
}
