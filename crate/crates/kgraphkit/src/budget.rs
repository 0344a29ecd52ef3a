use crate::degree::DegreeVector;
use crate::error::{Error, Result};

/// Search bounds for the semi-decidable analyses.
///
/// `degree_bound` caps path degrees explored per color, `presentation_bound`
/// caps total path length in enumeration fallbacks, and `saturation_bound`
/// caps per-color fixpoint rounds (per color, the vertex count suffices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BudgetConfig {
    pub degree_bound: DegreeVector,
    pub presentation_bound: u32,
    pub saturation_bound: Vec<u32>,
}

impl BudgetConfig {
    pub fn new(
        degree_bound: DegreeVector,
        presentation_bound: u32,
        saturation_bound: Vec<u32>,
    ) -> Result<Self> {
        if presentation_bound == 0
            || degree_bound.0.iter().any(|&c| c == 0)
            || saturation_bound.iter().any(|&c| c == 0)
            || saturation_bound.len() != degree_bound.rank()
        {
            return Err(Error::InvalidBudget);
        }
        Ok(BudgetConfig {
            degree_bound,
            presentation_bound,
            saturation_bound,
        })
    }

    pub fn defaults(rank: usize, vertex_count: usize) -> Self {
        BudgetConfig {
            degree_bound: DegreeVector(vec![6; rank]),
            presentation_bound: 8,
            saturation_bound: vec![(vertex_count.max(1)) as u32; rank],
        }
    }
}

/// Budget components read from a file header or the environment; unset
/// components fall back to the defaults for the graph at hand.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PartialBudget {
    pub degree_bound: Option<Vec<u32>>,
    pub presentation_bound: Option<u32>,
    pub saturation_bound: Option<Vec<u32>>,
}

impl PartialBudget {
    pub fn is_empty(&self) -> bool {
        self.degree_bound.is_none()
            && self.presentation_bound.is_none()
            && self.saturation_bound.is_none()
    }

    /// Later layers win componentwise: `self` overridden by `over`.
    pub fn overlay(&self, over: &PartialBudget) -> PartialBudget {
        PartialBudget {
            degree_bound: over.degree_bound.clone().or_else(|| self.degree_bound.clone()),
            presentation_bound: over.presentation_bound.or(self.presentation_bound),
            saturation_bound: over
                .saturation_bound
                .clone()
                .or_else(|| self.saturation_bound.clone()),
        }
    }

    pub fn resolve(&self, rank: usize, vertex_count: usize) -> Result<BudgetConfig> {
        let defaults = BudgetConfig::defaults(rank, vertex_count);
        let degree = match &self.degree_bound {
            Some(v) => {
                let v = broadcast(v, rank)?;
                DegreeVector(v)
            }
            None => defaults.degree_bound,
        };
        let saturation = match &self.saturation_bound {
            Some(v) => broadcast(v, rank)?,
            None => defaults.saturation_bound,
        };
        BudgetConfig::new(
            degree,
            self.presentation_bound.unwrap_or(defaults.presentation_bound),
            saturation,
        )
    }

    /// Parses `KGRAPHKIT_BUDGET`, e.g. `degree=3,3 presentation=6 saturation=10`.
    pub fn from_env_str(s: &str) -> Result<PartialBudget> {
        let mut out = PartialBudget::default();
        for tok in s.split_whitespace() {
            let (key, val) = tok
                .split_once('=')
                .ok_or_else(|| Error::Precondition(format!("bad budget token `{tok}`")))?;
            match key {
                "degree" => out.degree_bound = Some(parse_components(val)?),
                "presentation" => {
                    out.presentation_bound =
                        Some(val.parse().map_err(|_| Error::InvalidBudget)?)
                }
                "saturation" => out.saturation_bound = Some(parse_components(val)?),
                _ => return Err(Error::Precondition(format!("bad budget key `{key}`"))),
            }
        }
        Ok(out)
    }
}

fn parse_components(val: &str) -> Result<Vec<u32>> {
    val.split(',')
        .map(|c| c.trim().parse::<u32>().map_err(|_| Error::InvalidBudget))
        .collect()
}

/// A single component broadcasts to every color; otherwise length must match.
fn broadcast(v: &[u32], rank: usize) -> Result<Vec<u32>> {
    if v.len() == rank {
        Ok(v.to_vec())
    } else if v.len() == 1 {
        Ok(vec![v[0]; rank])
    } else {
        Err(Error::BadDegree {
            expected: rank,
            got: v.len(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_components() {
        assert!(BudgetConfig::new(DegreeVector(vec![0, 1]), 4, vec![3, 3]).is_err());
        assert!(BudgetConfig::new(DegreeVector(vec![1, 1]), 0, vec![3, 3]).is_err());
        assert!(BudgetConfig::new(DegreeVector(vec![1, 1]), 4, vec![3]).is_err());
        assert!(BudgetConfig::new(DegreeVector(vec![1, 1]), 4, vec![3, 3]).is_ok());
    }

    #[test]
    fn overlay_precedence() {
        let base = PartialBudget {
            degree_bound: Some(vec![2, 2]),
            presentation_bound: Some(5),
            saturation_bound: None,
        };
        let over = PartialBudget {
            degree_bound: None,
            presentation_bound: Some(9),
            saturation_bound: Some(vec![7]),
        };
        let merged = base.overlay(&over);
        assert_eq!(merged.degree_bound, Some(vec![2, 2]));
        assert_eq!(merged.presentation_bound, Some(9));
        let resolved = merged.resolve(2, 4).unwrap();
        assert_eq!(resolved.degree_bound, DegreeVector(vec![2, 2]));
        assert_eq!(resolved.presentation_bound, 9);
        assert_eq!(resolved.saturation_bound, vec![7, 7]);
    }

    #[test]
    fn env_string_parses() {
        let b = PartialBudget::from_env_str("degree=3,4 presentation=6").unwrap();
        assert_eq!(b.degree_bound, Some(vec![3, 4]));
        assert_eq!(b.presentation_bound, Some(6));
        assert_eq!(b.saturation_bound, None);
        assert!(PartialBudget::from_env_str("degree=x").is_err());
    }

    #[test]
    fn defaults_scale_with_graph() {
        let d = BudgetConfig::defaults(2, 5);
        assert_eq!(d.degree_bound, DegreeVector(vec![6, 6]));
        assert_eq!(d.saturation_bound, vec![5, 5]);
    }
}
