//! Equality analysis for `alpha_k(G) >= (k-1)/k * (n - omega(G))`.
//!
//! A graph is *good* when the bound is attained. For `k = 4` goodness is
//! equivalent to three structural conditions: cycles pairwise
//! vertex-disjoint, every cycle of length `1 (mod 4)`, and every component
//! of the graph left after deleting cycle vertices lies in `R_{|T|/4}`.
//! This module evaluates both sides and reports disagreements.

use num_rational::Ratio;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::alpha::alpha_number;
use crate::cycles::{disjoint_cycles, shrink, CycleList, NotDisjoint};
use crate::extremal::{is_in_r, RCertificate};
use crate::graph::Graph;

pub type Rational = Ratio<i64>;

pub(crate) fn ser_ratio<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn ser_ratios<S: Serializer>(rs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(rs.iter().map(|r| r.to_string()))
}

/// `(k-1)(n - omega) / k`, exact.
pub fn lower_bound(n: usize, omega: usize, k: usize) -> Rational {
    Rational::new((k as i64 - 1) * (n as i64 - omega as i64), k as i64)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterizationError {
    #[error("graph does not attain the bound (alpha = {alpha}, bound = {bound})")]
    NotGood { alpha: usize, bound: Rational },
    #[error("graph cycles are not vertex-disjoint: {0}")]
    NotDisjoint(NotDisjoint),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    Holds,
    Fails,
    /// Not evaluated because the cycles are not vertex-disjoint.
    FailedByPrecondition,
}

impl Condition {
    pub fn holds(self) -> bool {
        self == Condition::Holds
    }

    fn from_bool(b: bool) -> Self {
        if b {
            Condition::Holds
        } else {
            Condition::Fails
        }
    }
}

/// A component of the off-cycle graph, in host vertex labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaComponent {
    pub vertices: Vec<usize>,
    pub certificate: Option<RCertificate>,
}

/// Evaluation of the structural conditions for a given `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralVerdict {
    pub k: usize,
    pub cond_disjoint: bool,
    pub cond_cycle_lengths: Condition,
    pub cond_gamma: Condition,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_disjoint: Option<NotDisjoint>,
    pub cycles: CycleList,
    pub gamma_components: Vec<GammaComponent>,
}

impl StructuralVerdict {
    pub fn holds(&self) -> bool {
        self.cond_disjoint && self.cond_cycle_lengths.holds() && self.cond_gamma.holds()
    }

    /// Short label of the first failing condition, if any.
    pub fn failed_condition(&self) -> Option<&'static str> {
        if !self.cond_disjoint {
            Some("cycles_not_disjoint")
        } else if !self.cond_cycle_lengths.holds() {
            Some("cycle_length")
        } else if !self.cond_gamma.holds() {
            Some("gamma_component")
        } else {
            None
        }
    }
}

/// Checks the structural conditions with modulus `k`: disjoint cycles,
/// lengths `≡ 1 (mod k)`, off-cycle components of order `≡ 0 (mod k)` that
/// partition into connected `k`-blocks.
pub fn evaluate_structure(g: &Graph, k: usize) -> StructuralVerdict {
    let cycles = match disjoint_cycles(g) {
        Ok(c) => c,
        Err(e) => {
            return StructuralVerdict {
                k,
                cond_disjoint: false,
                cond_cycle_lengths: Condition::FailedByPrecondition,
                cond_gamma: Condition::FailedByPrecondition,
                not_disjoint: Some(e),
                cycles: CycleList::default(),
                gamma_components: Vec::new(),
            }
        }
    };
    let lengths_ok = cycles.iter().all(|c| c.len() % k == 1 % k);
    let sh = shrink(g).expect("cycles already known to be disjoint");
    let gamma = &sh.gamma;
    let mut gamma_components = Vec::new();
    let mut gamma_ok = true;
    for part in gamma.graph.components() {
        let sub = gamma.graph.induced(&part).expect("component in range");
        let cert = is_in_r(&sub.graph, k).expect("gamma components are trees");
        let host = |v: usize| gamma.new_to_old[sub.new_to_old[v]];
        let cert = cert.map(|c| RCertificate {
            k: c.k,
            blocks: c.blocks.iter().map(|b| b.iter().map(|&v| host(v)).collect()).collect(),
            attach_order: c.attach_order,
            attach_edges: c.attach_edges.iter().map(|&(a, b)| (host(a), host(b))).collect(),
        });
        gamma_ok &= cert.is_some();
        gamma_components.push(GammaComponent {
            vertices: gamma.lift(part),
            certificate: cert,
        });
    }
    StructuralVerdict {
        k,
        cond_disjoint: true,
        cond_cycle_lengths: Condition::from_bool(lengths_ok),
        cond_gamma: Condition::from_bool(gamma_ok),
        not_disjoint: None,
        cycles,
        gamma_components,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub alpha: usize,
    #[serde(serialize_with = "ser_ratio")]
    pub bound: Rational,
    pub holds: bool,
}

impl BoundCheck {
    pub fn equality(&self) -> bool {
        Rational::from_integer(self.alpha as i64) == self.bound
    }
}

/// Compares `alpha_k(G)` against the `k`-bound.
pub fn check_bound_k(g: &Graph, k: usize) -> BoundCheck {
    let alpha = alpha_number(g, k).expect("k >= 2");
    let bound = lower_bound(g.n(), g.omega(), k);
    BoundCheck {
        alpha,
        bound,
        holds: Rational::from_integer(alpha as i64) >= bound,
    }
}

/// `alpha_4(G)` against `3(n - omega)/4`. `holds == false` would
/// contradict the proven bound.
pub fn check_bound(g: &Graph) -> BoundCheck {
    check_bound_k(g, 4)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentVerdict {
    pub vertices: Vec<usize>,
    pub omega: usize,
    #[serde(serialize_with = "ser_ratio")]
    pub bound_value: Rational,
    pub alpha_value: Option<usize>,
    pub direct_good: Option<bool>,
    pub structural_good: bool,
}

/// Direct and structural goodness verdicts for `k = 4`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoodnessReport {
    pub n: usize,
    pub m: usize,
    pub omega: usize,
    #[serde(serialize_with = "ser_ratio")]
    pub bound_value: Rational,
    pub alpha_value: Option<usize>,
    pub direct_good: Option<bool>,
    pub cond_disjoint: bool,
    pub cond_cycle_lengths: Condition,
    pub cond_gamma: Condition,
    pub structural_good: bool,
    /// `Some(false)` flags a disagreement between the direct and structural
    /// verdicts.
    pub consistent: Option<bool>,
    pub components: Vec<ComponentVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub explanation: Option<StructuralVerdict>,
}

impl GoodnessReport {
    pub fn without_explanation(mut self) -> Self {
        self.explanation = None;
        self
    }
}

fn structural_report(g: &Graph, with_alpha: bool) -> GoodnessReport {
    let verdict = evaluate_structure(g, 4);
    let mut components = Vec::new();
    let mut alpha_total = 0;
    for part in g.components() {
        let sub = g.induced(&part).expect("component in range").graph;
        let bound = lower_bound(sub.n(), sub.omega(), 4);
        let alpha = with_alpha.then(|| alpha_number(&sub, 4).expect("k = 4"));
        alpha_total += alpha.unwrap_or(0);
        components.push(ComponentVerdict {
            vertices: part,
            omega: sub.omega(),
            bound_value: bound,
            alpha_value: alpha,
            direct_good: alpha.map(|a| Rational::from_integer(a as i64) == bound),
            structural_good: evaluate_structure(&sub, 4).holds(),
        });
    }
    let bound_value = lower_bound(g.n(), g.omega(), 4);
    let alpha_value = with_alpha.then_some(alpha_total);
    let direct_good = alpha_value.map(|a| Rational::from_integer(a as i64) == bound_value);
    let structural_good = verdict.holds();
    GoodnessReport {
        n: g.n(),
        m: g.m(),
        omega: g.omega(),
        bound_value,
        alpha_value,
        direct_good,
        cond_disjoint: verdict.cond_disjoint,
        cond_cycle_lengths: verdict.cond_cycle_lengths,
        cond_gamma: verdict.cond_gamma,
        structural_good,
        consistent: direct_good.map(|d| d == structural_good),
        components,
        explanation: Some(verdict),
    }
}

/// Structural conditions only; no solver call.
pub fn check_good_structural(g: &Graph) -> GoodnessReport {
    structural_report(g, false)
}

/// Both verdicts. Components are solved separately and summed.
pub fn check_good(g: &Graph) -> GoodnessReport {
    structural_report(g, true)
}

/// `alpha_4(G) = alpha_4(Gamma_G) + sum over cycles of 3(|C| - 1)/4`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub gamma_alpha: usize,
    #[serde(serialize_with = "ser_ratios")]
    pub cycle_terms: Vec<Rational>,
    #[serde(serialize_with = "ser_ratio")]
    pub total: Rational,
    pub alpha: usize,
}

/// Splits `alpha_4` of a good graph into its off-cycle and cycle parts.
pub fn decompose_alpha(g: &Graph) -> Result<Decomposition, CharacterizationError> {
    let alpha = alpha_number(g, 4).expect("k = 4");
    let bound = lower_bound(g.n(), g.omega(), 4);
    if Rational::from_integer(alpha as i64) != bound {
        return Err(CharacterizationError::NotGood { alpha, bound });
    }
    let sh = shrink(g).map_err(CharacterizationError::NotDisjoint)?;
    let gamma_alpha = alpha_number(sh.gamma_graph(), 4).expect("k = 4");
    let cycle_terms: Vec<Rational> = sh
        .cycles
        .iter()
        .map(|c| Rational::new(3 * (c.len() as i64 - 1), 4))
        .collect();
    let total = cycle_terms
        .iter()
        .fold(Rational::from_integer(gamma_alpha as i64), |acc, t| acc + t);
    Ok(Decomposition {
        gamma_alpha,
        cycle_terms,
        total,
        alpha,
    })
}
