//! Replayable construction traces.
//!
//! A [`Certificate`] lists primitive graphs and the operations combining
//! them, followed by claims about the resulting graphs. Verification
//! rebuilds every step from the primitives, compares the last one with the
//! shipped graph, and re-evaluates each claim with integer arithmetic.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::{cartesian_sum, double_composition, tensor_product, GadgetVariant, Part};
use crate::graph::{Graph, GraphError};
use crate::poly::{abs_profile, is_unimodal, IntPoly, PolyError, ProfileMode};
use crate::spectral::{
    charpoly, forest_charpoly, spectrum_divides, Certification, DivisibilityMode, Limits,
    SpectralError,
};

#[derive(Debug, Error)]
pub enum CertificateError {
    #[error("malformed certificate JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("step {step} refers to step {reference}, which does not precede it")]
    BadReference { step: usize, reference: usize },
    #[error("claim {claim} targets missing step {target}")]
    BadTarget { claim: usize, target: usize },
    #[error("certificate has no steps")]
    Empty,
    #[error("step {step}: {source}")]
    Step {
        step: usize,
        #[source]
        source: GraphError,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// One construction step. Operands are indices of earlier steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum Step {
    Primitive { graph6: String, origin: String },
    CartesianSum { left: usize, right: usize },
    TensorProduct { left: usize, right: usize },
    DoubleComposition { base: usize, parts: Vec<PartRef> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartRef {
    pub graph: usize,
    pub part_vertex: usize,
    pub base_vertex: usize,
}

/// Where each part of a composition was attached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attachment {
    pub step: usize,
    pub part: usize,
    pub part_vertex: usize,
    pub base_vertex: usize,
}

/// A property of the graph built at step `target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Claim {
    /// `poly` divides the characteristic polynomial at the stated level.
    Divides {
        target: usize,
        poly: String,
        mode: DivisibilityMode,
        level: Certification,
    },
    Connected {
        target: usize,
    },
    Tree {
        target: usize,
    },
    /// `factor * cofactor` is the characteristic polynomial and its
    /// coefficient profile is unimodal.
    UnimodalProduct {
        target: usize,
        factor: String,
        cofactor: String,
        profile: ProfileMode,
    },
}

impl Claim {
    pub fn target(&self) -> usize {
        match self {
            Claim::Divides { target, .. }
            | Claim::Connected { target }
            | Claim::Tree { target }
            | Claim::UnimodalProduct { target, .. } => *target,
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = |csv: &str| {
            IntPoly::from_csv(csv)
                .map(|p| p.to_string())
                .unwrap_or_else(|_| csv.to_string())
        };
        match self {
            Claim::Divides {
                target,
                poly: p,
                mode,
                level,
            } => write!(
                f,
                "{} divides P(step {target}) [{}, {level}]",
                poly(p),
                match mode {
                    DivisibilityMode::Exact => "exact",
                    DivisibilityMode::Kernel => "kernel",
                }
            ),
            Claim::Connected { target } => write!(f, "step {target} is connected"),
            Claim::Tree { target } => write!(f, "step {target} is a tree"),
            Claim::UnimodalProduct {
                target,
                factor,
                cofactor,
                ..
            } => write!(
                f,
                "P(step {target}) = ({}) * ({}) with unimodal profile",
                poly(factor),
                poly(cofactor)
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub steps: Vec<Step>,
    pub claims: Vec<Claim>,
    pub final_graph6: String,
    pub gadget_variant: Option<GadgetVariant>,
    pub attachment_choices: Vec<Attachment>,
}

/// Outcome of one verification check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            write!(f, "{mark} {}", c.name)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, CertificateError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Switches every divisibility claim to `mode`.
    pub fn set_divides_mode(&mut self, new_mode: DivisibilityMode) {
        for claim in &mut self.claims {
            if let Claim::Divides { mode, .. } = claim {
                *mode = new_mode;
            }
        }
    }

    /// Rebuilds every step from the primitives.
    pub fn replay(&self) -> Result<Vec<Graph>, CertificateError> {
        let mut built: Vec<Graph> = Vec::with_capacity(self.steps.len());
        for (i, step) in self.steps.iter().enumerate() {
            let get = |r: usize| {
                built
                    .get(r)
                    .ok_or(CertificateError::BadReference { step: i, reference: r })
            };
            let wrap = |source| CertificateError::Step { step: i, source };
            let g = match step {
                Step::Primitive { graph6, .. } => Graph::from_graph6(graph6).map_err(wrap)?,
                Step::CartesianSum { left, right } => cartesian_sum(get(*left)?, get(*right)?),
                Step::TensorProduct { left, right } => tensor_product(get(*left)?, get(*right)?),
                Step::DoubleComposition { base, parts } => {
                    let parts = parts
                        .iter()
                        .map(|p| {
                            Ok(Part {
                                graph: get(p.graph)?.clone(),
                                part_vertex: p.part_vertex,
                                base_vertex: p.base_vertex,
                            })
                        })
                        .collect::<Result<Vec<_>, CertificateError>>()?;
                    double_composition(get(*base)?, &parts).map_err(wrap)?
                }
            };
            built.push(g);
        }
        Ok(built)
    }

    /// Replays the steps and re-evaluates every claim. Claims about the
    /// last step are evaluated on the shipped graph.
    pub fn verify(&self, limits: &Limits) -> Result<VerifyReport, CertificateError> {
        if self.steps.is_empty() {
            return Err(CertificateError::Empty);
        }
        let mut built = self.replay()?;
        let shipped = Graph::from_graph6(&self.final_graph6)?;
        let last = built.len() - 1;
        let mut checks = vec![Check {
            name: "replay reproduces the final graph".into(),
            passed: built[last] == shipped,
            detail: if built[last] == shipped {
                String::new()
            } else {
                format!(
                    "replayed {} vertices and {} edges, shipped {} vertices and {} edges",
                    built[last].order(),
                    built[last].edge_count(),
                    shipped.order(),
                    shipped.edge_count()
                )
            },
        }];
        checks.push(self.check_attachments());
        built[last] = shipped;
        for (i, claim) in self.claims.iter().enumerate() {
            let g = built.get(claim.target()).ok_or(CertificateError::BadTarget {
                claim: i,
                target: claim.target(),
            })?;
            let (passed, detail) = evaluate(claim, g, limits)?;
            checks.push(Check {
                name: format!("claim {i}: {claim}"),
                passed,
                detail,
            });
        }
        Ok(VerifyReport { checks })
    }

    fn check_attachments(&self) -> Check {
        let mut recorded = Vec::new();
        for (i, step) in self.steps.iter().enumerate() {
            if let Step::DoubleComposition { parts, .. } = step {
                for (j, p) in parts.iter().enumerate() {
                    recorded.push(Attachment {
                        step: i,
                        part: j,
                        part_vertex: p.part_vertex,
                        base_vertex: p.base_vertex,
                    });
                }
            }
        }
        let passed = recorded == self.attachment_choices;
        Check {
            name: "attachment choices match the composition steps".into(),
            passed,
            detail: String::new(),
        }
    }
}

fn graph_charpoly(g: &Graph) -> IntPoly {
    forest_charpoly(g).unwrap_or_else(|| charpoly(g))
}

fn evaluate(claim: &Claim, g: &Graph, limits: &Limits) -> Result<(bool, String), CertificateError> {
    Ok(match claim {
        Claim::Divides {
            poly, mode, level, ..
        } => {
            let f = IntPoly::from_csv(poly)?;
            let verdict = spectrum_divides(&f, g, *mode, limits)?;
            (
                verdict.level >= *level,
                format!("re-verified as {}", verdict.level),
            )
        }
        Claim::Connected { .. } => {
            let ok = g.is_connected().unwrap_or(false);
            (ok, String::new())
        }
        Claim::Tree { .. } => (g.is_tree(), format!("{} vertices, {} edges", g.order(), g.edge_count())),
        Claim::UnimodalProduct {
            factor,
            cofactor,
            profile,
            ..
        } => {
            let product = &IntPoly::from_csv(factor)? * &IntPoly::from_csv(cofactor)?;
            if product != graph_charpoly(g) {
                (false, "product differs from the characteristic polynomial".into())
            } else {
                let ok = is_unimodal(&abs_profile(&product, *profile));
                (ok, if ok { String::new() } else { "profile is not unimodal".into() })
            }
        }
    })
}

/// Accumulates steps while a construction runs.
#[derive(Debug, Default)]
pub struct CertificateBuilder {
    steps: Vec<Step>,
    graphs: Vec<Graph>,
    claims: Vec<Claim>,
    gadget_variant: Option<GadgetVariant>,
}

impl CertificateBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn graph(&self, step: usize) -> &Graph {
        &self.graphs[step]
    }

    pub fn last(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn set_gadget(&mut self, variant: GadgetVariant) {
        self.gadget_variant = Some(variant);
    }

    pub fn primitive(&mut self, g: &Graph, origin: impl Into<String>) -> Result<usize, GraphError> {
        self.steps.push(Step::Primitive {
            graph6: g.to_graph6()?,
            origin: origin.into(),
        });
        self.graphs.push(g.clone());
        Ok(self.last())
    }

    pub fn cartesian_sum(&mut self, left: usize, right: usize) -> usize {
        let g = cartesian_sum(&self.graphs[left], &self.graphs[right]);
        self.push(Step::CartesianSum { left, right }, g)
    }

    pub fn tensor_product(&mut self, left: usize, right: usize) -> usize {
        let g = tensor_product(&self.graphs[left], &self.graphs[right]);
        self.push(Step::TensorProduct { left, right }, g)
    }

    pub fn double_composition(
        &mut self,
        base: usize,
        parts: &[PartRef],
    ) -> Result<usize, GraphError> {
        let owned: Vec<Part> = parts
            .iter()
            .map(|p| Part {
                graph: self.graphs[p.graph].clone(),
                part_vertex: p.part_vertex,
                base_vertex: p.base_vertex,
            })
            .collect();
        let g = double_composition(&self.graphs[base], &owned)?;
        Ok(self.push(
            Step::DoubleComposition {
                base,
                parts: parts.to_vec(),
            },
            g,
        ))
    }

    fn push(&mut self, step: Step, g: Graph) -> usize {
        self.steps.push(step);
        self.graphs.push(g);
        self.last()
    }

    pub fn claim(&mut self, claim: Claim) {
        self.claims.push(claim);
    }

    pub fn finish(self) -> Result<(Graph, Certificate), GraphError> {
        let final_graph = self.graphs.last().cloned().ok_or(GraphError::EmptyGraph)?;
        let mut attachment_choices = Vec::new();
        for (i, step) in self.steps.iter().enumerate() {
            if let Step::DoubleComposition { parts, .. } = step {
                for (j, p) in parts.iter().enumerate() {
                    attachment_choices.push(Attachment {
                        step: i,
                        part: j,
                        part_vertex: p.part_vertex,
                        base_vertex: p.base_vertex,
                    });
                }
            }
        }
        let cert = Certificate {
            final_graph6: final_graph.to_graph6()?,
            steps: self.steps,
            claims: self.claims,
            gadget_variant: self.gadget_variant,
            attachment_choices,
        };
        Ok((final_graph, cert))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Certificate {
        let mut b = CertificateBuilder::new();
        let k2 = b.primitive(&Graph::path(2), "user").unwrap();
        let sum = b.cartesian_sum(k2, k2);
        b.claim(Claim::Divides {
            target: sum,
            poly: "-4,0,1".into(),
            mode: DivisibilityMode::Exact,
            level: Certification::ExactDivides,
        });
        b.claim(Claim::Connected { target: sum });
        b.finish().unwrap().1
    }

    #[test]
    fn round_trip_and_verify() {
        let cert = example();
        let text = cert.to_json();
        let back = Certificate::from_json(&text).unwrap();
        assert_eq!(back, cert);
        let report = back.verify(&Limits::default()).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.checks.len(), 4);
    }

    #[test]
    fn tampered_final_graph_fails() {
        let mut cert = example();
        let g = Graph::from_graph6(&cert.final_graph6).unwrap();
        cert.final_graph6 = g.toggle_edge(0, 3).unwrap().to_graph6().unwrap();
        let report = cert.verify(&Limits::default()).unwrap();
        assert!(!report.passed());
        let failed: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
        assert!(failed.iter().any(|n| n.starts_with("replay")));
        assert!(failed.iter().any(|n| n.starts_with("claim 0")), "{failed:?}");
    }

    #[test]
    fn dangling_reference_is_an_error() {
        let mut cert = example();
        cert.steps[1] = Step::CartesianSum { left: 0, right: 5 };
        assert!(matches!(
            cert.verify(&Limits::default()),
            Err(CertificateError::BadReference { step: 1, reference: 5 })
        ));
    }
}
