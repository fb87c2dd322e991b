use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Inclusive integer window; `max: None` means unbounded above.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub min: usize,
    pub max: Option<usize>,
}

impl Window {
    pub const fn between(min: usize, max: usize) -> Self {
        Self { min, max: Some(max) }
    }

    pub const fn at_least(min: usize) -> Self {
        Self { min, max: None }
    }

    pub fn contains(&self, x: usize) -> bool {
        x >= self.min && self.max.is_none_or(|m| x <= m)
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.max {
            Some(m) => write!(f, "[{}, {}]", self.min, m),
            None => write!(f, "[{}, inf)", self.min),
        }
    }
}

/// Windows on the partition of the residual around a degree-6 vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionWindow {
    pub base_degree: usize,
    pub h21: Window,
    pub boundary_edges: Window,
    /// Residual vertices of degree 8 inside the residual graph.
    pub residual_degree8: Window,
}

/// Distance-layer windows around vertices of a given degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerWindow {
    pub base_degree: usize,
    pub layer2: Window,
    pub layer3: Window,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityRule {
    pub min_connectivity: usize,
    pub equals_min_degree: bool,
    pub requires_diameter2: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProfileKind {
    Gamma41,
    Omega40,
    Custom,
}

/// Thresholds for one target family. `None` disables the clause that reads
/// it, which the report records as not-applicable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetParams {
    pub kind: ProfileKind,
    pub clique_bound: usize,
    pub independence_bound: usize,
    pub order: usize,
    /// Custom profiles reuse no proven constants.
    pub extrapolated: bool,
    pub neighbor_degree_sum_threshold: Option<usize>,
    pub union_neighborhood_bound: Option<usize>,
    pub degree_window: Option<Window>,
    pub edge_window: Option<Window>,
    pub diameter_window: Option<Window>,
    pub min_max_degree_count: Option<usize>,
    pub max_degree6_count: Option<usize>,
    /// At most two degree-6 vertices, adjacent, when the diameter is 2.
    pub diam2_degree6_pair_rule: bool,
    pub partition: Option<PartitionWindow>,
    /// Degree sequence must be one of the combined sequences when the diameter
    /// is 2 and a degree-6 vertex exists.
    pub diam2_sequence_rule: bool,
    pub layers: Option<LayerWindow>,
    pub connectivity: Option<ConnectivityRule>,
    pub smallest_cut_rule: bool,
    /// At most this many degree-6 vertices in any `N(v)` when the diameter is 2.
    pub neighborhood_degree6_cap: Option<usize>,
    /// Forbid degree-6 vertices in the residual of a degree-6 vertex.
    pub strict: bool,
}

impl TargetParams {
    pub fn gamma41() -> Self {
        Self {
            kind: ProfileKind::Gamma41,
            clique_bound: 3,
            independence_bound: 10,
            order: 41,
            extrapolated: false,
            neighbor_degree_sum_threshold: Some(12),
            union_neighborhood_bound: None,
            degree_window: Some(Window::between(6, 9)),
            edge_window: Some(Window::between(172, 184)),
            diameter_window: Some(Window::between(2, 3)),
            min_max_degree_count: Some(16),
            max_degree6_count: Some(6),
            diam2_degree6_pair_rule: true,
            partition: Some(PartitionWindow {
                base_degree: 6,
                h21: Window::between(20, 24),
                boundary_edges: Window::between(44, 48),
                residual_degree8: Window::between(20, 24),
            }),
            diam2_sequence_rule: true,
            layers: None,
            connectivity: Some(ConnectivityRule {
                min_connectivity: 6,
                equals_min_degree: true,
                requires_diameter2: false,
            }),
            smallest_cut_rule: false,
            neighborhood_degree6_cap: None,
            strict: false,
        }
    }

    pub fn omega40() -> Self {
        Self {
            kind: ProfileKind::Omega40,
            clique_bound: 3,
            independence_bound: 10,
            order: 40,
            extrapolated: false,
            neighbor_degree_sum_threshold: Some(11),
            union_neighborhood_bound: Some(11),
            degree_window: Some(Window::between(4, 9)),
            edge_window: Some(Window::at_least(161)),
            diameter_window: Some(Window::between(2, 3)),
            min_max_degree_count: None,
            max_degree6_count: None,
            diam2_degree6_pair_rule: false,
            partition: None,
            diam2_sequence_rule: false,
            layers: Some(LayerWindow {
                base_degree: 4,
                layer2: Window::between(19, 24),
                layer3: Window::between(11, 17),
            }),
            connectivity: Some(ConnectivityRule {
                min_connectivity: 6,
                equals_min_degree: true,
                requires_diameter2: true,
            }),
            smallest_cut_rule: true,
            neighborhood_degree6_cap: Some(2),
            strict: false,
        }
    }

    /// Only the Ramsey and order clauses apply.
    pub fn custom(s: usize, t: usize, n: usize) -> Self {
        Self {
            kind: ProfileKind::Custom,
            clique_bound: s,
            independence_bound: t,
            order: n,
            extrapolated: true,
            neighbor_degree_sum_threshold: None,
            union_neighborhood_bound: None,
            degree_window: None,
            edge_window: None,
            diameter_window: None,
            min_max_degree_count: None,
            max_degree6_count: None,
            diam2_degree6_pair_rule: false,
            partition: None,
            diam2_sequence_rule: false,
            layers: None,
            connectivity: None,
            smallest_cut_rule: false,
            neighborhood_degree6_cap: None,
            strict: false,
        }
    }

    pub fn with_strict(mut self, strict: bool) -> Self {
        self.strict = strict;
        self
    }

    pub fn name(&self) -> String {
        match self.kind {
            ProfileKind::Gamma41 => "gamma41".to_string(),
            ProfileKind::Omega40 => "omega40".to_string(),
            ProfileKind::Custom => format!(
                "custom:{},{},{}",
                self.clique_bound, self.independence_bound, self.order
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown profile {0:?}; expected gamma41, omega40 or custom:S,T,N")]
pub struct ProfileParseError(pub String);

impl FromStr for TargetParams {
    type Err = ProfileParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "gamma41" => return Ok(Self::gamma41()),
            "omega40" => return Ok(Self::omega40()),
            _ => {}
        }
        let err = || ProfileParseError(s.to_string());
        let rest = s.strip_prefix("custom:").ok_or_else(err)?;
        let nums: Vec<usize> = rest
            .split(',')
            .map(|p| p.trim().parse().map_err(|_| err()))
            .collect::<Result<_, _>>()?;
        match nums[..] {
            [s, t, n] => Ok(Self::custom(s, t, n)),
            _ => Err(err()),
        }
    }
}
