//! Deterministic generators for the extremal constructions, each paired with
//! its recorded closed-form invariants for cross-checking.
//!
//! Six families are built, all variations on a chain of joined layers:
//!
//! - `T`: a maximal planar, 3-connected chain of triangles (order `3k+2`,
//!   `n ≡ 5 (mod 6)`), radius-vs-proximity witness.
//! - `Q`: the quadrangulation `K1 + [K̄2]^k + K1` (order `2k+2`,
//!   `n ≡ 0 (mod 4)`).
//! - `MOP`: a maximal outerplanar chain of edges (order `2k+2`,
//!   `n ≡ 0 (mod 4)`).
//! - `Gnk` / `GnkBar`: `K1 + [K_κ]^ℓ + K1` and `K1 + [K̄_κ]^ℓ + K1`
//!   (`n ≡ κ+2 (mod 2κ)`), remoteness-minus-proximity sharpness witnesses.
//! - `DiamExtremal`: `K1 + [K_κ]^* + K_big + [K_κ]^* + K1`, attaining the
//!   diameter-constrained proximity lower bound at every `d ≤ (n−2)/κ + 1`.
//!
//! Generators return a [`FamilyGraph`] whose label map names the structural
//! vertices (`b0`, `a3`, `u`, `v`, `m1`, …) so reports can cite the intended
//! median and remote vertices. Closed forms carry per-field provenance: a
//! [`Provenance::KnownDiscrepancy`] field stores the recorded formula *and*
//! the directly computed value side by side instead of asserting either.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::rat::{rat, Rat};

/// Family tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyName {
    T,
    Q,
    #[serde(rename = "MOP")]
    Mop,
    Gnk,
    GnkBar,
    DiamExtremal,
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            FamilyName::T => "T",
            FamilyName::Q => "Q",
            FamilyName::Mop => "MOP",
            FamilyName::Gnk => "Gnk",
            FamilyName::GnkBar => "GnkBar",
            FamilyName::DiamExtremal => "DiamExtremal",
        };
        f.write_str(text)
    }
}

impl FromStr for FamilyName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "t" => Ok(FamilyName::T),
            "q" => Ok(FamilyName::Q),
            "mop" => Ok(FamilyName::Mop),
            "gnk" => Ok(FamilyName::Gnk),
            "gnkbar" | "gnk-bar" => Ok(FamilyName::GnkBar),
            "diamextremal" | "diam-extremal" => Ok(FamilyName::DiamExtremal),
            other => Err(format!(
                "unknown family '{other}' (expected T, Q, MOP, Gnk, GnkBar, or DiamExtremal)"
            )),
        }
    }
}

/// A fully parameterized family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub name: FamilyName,
    pub n: usize,
    /// Connectivity parameter κ (Gnk, GnkBar, DiamExtremal).
    pub kappa: Option<usize>,
    /// Diameter parameter (DiamExtremal only).
    pub d: Option<usize>,
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={}", self.name, self.n)?;
        if let Some(k) = self.kappa {
            write!(f, ", kappa={k}")?;
        }
        if let Some(d) = self.d {
            write!(f, ", d={d}")?;
        }
        write!(f, ")")
    }
}

/// Generation and admissibility errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("sequential sum of an empty part list")]
    EmptyPartList,
    #[error("family {family} does not take parameter {param}")]
    UnexpectedParam { family: FamilyName, param: &'static str },
    #[error("family {family} requires parameter {param}")]
    MissingParam { family: FamilyName, param: &'static str },
    #[error("{spec} is inadmissible: {requirement}")]
    Inadmissible { spec: FamilySpec, requirement: String },
}

impl FamilySpec {
    pub fn t(n: usize) -> Self {
        FamilySpec { name: FamilyName::T, n, kappa: None, d: None }
    }

    pub fn q(n: usize) -> Self {
        FamilySpec { name: FamilyName::Q, n, kappa: None, d: None }
    }

    pub fn mop(n: usize) -> Self {
        FamilySpec { name: FamilyName::Mop, n, kappa: None, d: None }
    }

    pub fn gnk(n: usize, kappa: usize) -> Self {
        FamilySpec { name: FamilyName::Gnk, n, kappa: Some(kappa), d: None }
    }

    pub fn gnk_bar(n: usize, kappa: usize) -> Self {
        FamilySpec { name: FamilyName::GnkBar, n, kappa: Some(kappa), d: None }
    }

    pub fn diam_extremal(n: usize, kappa: usize, d: usize) -> Self {
        FamilySpec { name: FamilyName::DiamExtremal, n, kappa: Some(kappa), d: Some(d) }
    }

    /// Admissibility: parameter presence plus the congruence/range conditions
    /// under which the construction is defined.
    ///
    /// # Errors
    ///
    /// Names the missing/stray parameter or the violated congruence.
    pub fn validate(&self) -> Result<(), FamilyError> {
        let need_kappa = matches!(
            self.name,
            FamilyName::Gnk | FamilyName::GnkBar | FamilyName::DiamExtremal
        );
        if need_kappa && self.kappa.is_none() {
            return Err(FamilyError::MissingParam { family: self.name, param: "kappa" });
        }
        if !need_kappa && self.kappa.is_some() {
            return Err(FamilyError::UnexpectedParam { family: self.name, param: "kappa" });
        }
        let need_d = self.name == FamilyName::DiamExtremal;
        if need_d && self.d.is_none() {
            return Err(FamilyError::MissingParam { family: self.name, param: "d" });
        }
        if !need_d && self.d.is_some() {
            return Err(FamilyError::UnexpectedParam { family: self.name, param: "d" });
        }
        let fail = |requirement: String| {
            Err(FamilyError::Inadmissible { spec: *self, requirement })
        };
        match self.name {
            FamilyName::T => {
                if self.n < 11 || self.n % 6 != 5 {
                    return fail(format!("requires n ≡ 5 (mod 6) and n ≥ 11; got n = {}", self.n));
                }
            }
            FamilyName::Q | FamilyName::Mop => {
                if self.n < 8 || self.n % 4 != 0 {
                    return fail(format!("requires n ≡ 0 (mod 4) and n ≥ 8; got n = {}", self.n));
                }
            }
            FamilyName::Gnk | FamilyName::GnkBar => {
                let kappa = self.kappa.unwrap();
                if kappa == 0 {
                    return fail("requires kappa ≥ 1".to_string());
                }
                if self.n < kappa + 2 || (self.n - kappa - 2) % (2 * kappa) != 0 {
                    return fail(format!(
                        "requires n ≡ κ+2 (mod 2κ), i.e. n ≡ {} (mod {}); got n = {}",
                        kappa + 2,
                        2 * kappa,
                        self.n
                    ));
                }
            }
            FamilyName::DiamExtremal => {
                let kappa = self.kappa.unwrap();
                let d = self.d.unwrap();
                if kappa == 0 {
                    return fail("requires kappa ≥ 1".to_string());
                }
                if d < 2 {
                    return fail(format!("requires d ≥ 2; got d = {d}"));
                }
                if self.n < kappa * (d - 1) + 2 {
                    return fail(format!(
                        "requires d ≤ (n−2)/κ + 1, i.e. n ≥ κ(d−1)+2 = {}; got n = {}",
                        kappa * (d - 1) + 2,
                        self.n
                    ));
                }
            }
        }
        Ok(())
    }
}

/// A generated family member with its vertex label map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyGraph {
    pub spec: FamilySpec,
    pub graph: Graph,
    /// Structural vertex names (`b0`, `a3`, `u`, `v`, …) → vertex index.
    pub labels: BTreeMap<String, usize>,
}

impl FamilyGraph {
    /// Looks up a named vertex.
    ///
    /// # Panics
    ///
    /// Panics when the label does not exist for this family.
    pub fn vertex(&self, label: &str) -> usize {
        *self
            .labels
            .get(label)
            .unwrap_or_else(|| panic!("family {} has no label '{label}'", self.spec))
    }
}

/// Per-field provenance of a closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// The formula is asserted as exact and is verdict-bearing.
    Asserted,
    /// The recorded formula is known to disagree with direct computation;
    /// both values are stored, neither is asserted.
    KnownDiscrepancy,
}

/// One closed-form field with provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    /// The recorded formula's value at this spec.
    pub value: Rat,
    pub provenance: Provenance,
    /// Directly computed value, present exactly for known-discrepancy fields.
    pub computed: Option<Rat>,
}

impl ClosedForm {
    fn asserted(value: Rat) -> Self {
        ClosedForm { value, provenance: Provenance::Asserted, computed: None }
    }
}

/// The four distance parameters in closed form, where recorded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForms {
    pub family: FamilySpec,
    pub rad: Option<ClosedForm>,
    pub diam: Option<ClosedForm>,
    pub pi: Option<ClosedForm>,
    pub rho: Option<ClosedForm>,
}

/// Disjoint union of `parts` plus a complete join between consecutive parts;
/// vertex labels concatenate in part order.
///
/// # Errors
///
/// Rejects an empty part list.
///
/// # Examples
///
/// ```
/// use plandist::{families::sequential_sum, Graph};
///
/// let k1 = Graph::complete(1);
/// let k2 = sequential_sum(&[k1.clone(), k1.clone()]).unwrap();
/// assert_eq!(k2.edge_count(), 1);
///
/// let empty2 = Graph::from_edges(2, &[]).unwrap();
/// let c4 = sequential_sum(&[k1.clone(), empty2, k1]).unwrap();
/// assert_eq!((c4.n(), c4.edge_count()), (4, 4));
/// ```
pub fn sequential_sum(parts: &[Graph]) -> Result<Graph, FamilyError> {
    if parts.is_empty() {
        return Err(FamilyError::EmptyPartList);
    }
    let n = parts.iter().map(Graph::n).sum();
    let mut edges = Vec::new();
    let mut offset = 0;
    let mut prev: Option<std::ops::Range<usize>> = None;
    for part in parts {
        let range = offset..offset + part.n();
        for (u, v) in part.edges() {
            edges.push((offset + u, offset + v));
        }
        if let Some(p) = prev {
            for a in p {
                for b in range.clone() {
                    edges.push((a, b));
                }
            }
        }
        prev = Some(range);
        offset += part.n();
    }
    Ok(Graph::from_edges(n, &edges).expect("offset edges are in range"))
}

/// Generates the family member named by `spec`, with its label map.
///
/// # Errors
///
/// Propagates [`FamilySpec::validate`] rejections.
///
/// # Examples
///
/// ```
/// use plandist::families::{generate, FamilySpec};
///
/// let t11 = generate(&FamilySpec::t(11)).unwrap();
/// assert_eq!(t11.graph.n(), 11);
/// assert_eq!(t11.graph.edge_count(), 27); // 3n − 6
/// assert_eq!(t11.vertex("b0"), 0);
/// ```
pub fn generate(spec: &FamilySpec) -> Result<FamilyGraph, FamilyError> {
    spec.validate()?;
    let (graph, labels) = match spec.name {
        FamilyName::T => t_graph(spec.n),
        FamilyName::Q => q_graph(spec.n),
        FamilyName::Mop => mop_graph(spec.n),
        FamilyName::Gnk => layered(spec.n, spec.kappa.unwrap(), true),
        FamilyName::GnkBar => layered(spec.n, spec.kappa.unwrap(), false),
        FamilyName::DiamExtremal => diam_extremal(spec.n, spec.kappa.unwrap(), spec.d.unwrap()),
    };
    debug_assert_eq!(graph.n(), spec.n);
    Ok(FamilyGraph { spec: *spec, graph, labels })
}

/// Chain of triangles: `b0`, then `k = (n−2)/3` triangles `a_i b_i c_i`, then
/// `b_{k+1}`. The `b` spine is attached from above for small `i` and from
/// below past the midpoint, keeping the graph maximal planar.
fn t_graph(n: usize) -> (Graph, BTreeMap<String, usize>) {
    let k = (n - 2) / 3;
    let a = |i: usize| 3 * i - 2;
    let b = |i: usize| 3 * i - 1;
    let c = |i: usize| 3 * i;
    let b0 = 0;
    let b_last = 3 * k + 1;

    let mut labels = BTreeMap::new();
    labels.insert("b0".to_string(), b0);
    for i in 1..=k {
        labels.insert(format!("a{i}"), a(i));
        labels.insert(format!("b{i}"), b(i));
        labels.insert(format!("c{i}"), c(i));
    }
    labels.insert(format!("b{}", k + 1), b_last);

    let mut edges = Vec::new();
    for i in 1..=k {
        edges.extend([(a(i), b(i)), (b(i), c(i)), (a(i), c(i))]);
    }
    edges.extend([(b0, a(1)), (b0, b(1)), (b0, c(1))]);
    for i in 1..k {
        edges.extend([(a(i), a(i + 1)), (b(i), b(i + 1)), (c(i), c(i + 1)), (c(i), a(i + 1))]);
    }
    for i in 1..=(k - 1) / 2 {
        edges.extend([(a(i), b(i + 1)), (c(i), b(i + 1))]);
    }
    for i in (k + 1) / 2..k {
        edges.extend([(b(i), a(i + 1)), (b(i), c(i + 1))]);
    }
    // The construction's closing list repeats the three b0 edges; the
    // duplicate normalizer collapses them.
    edges.extend([(b0, a(1)), (b0, b(1)), (b0, c(1))]);
    edges.extend([(a(k), b_last), (b(k), b_last), (c(k), b_last)]);

    (Graph::from_edges(n, &edges).expect("labels are in range"), labels)
}

/// Quadrangulation `K1 + [K̄2]^k + K1` with `k = (n−2)/2`; layer `i` holds
/// `a_i` and `b_i`, the endpoints are `b0` and `b_{k+1}`.
fn q_graph(n: usize) -> (Graph, BTreeMap<String, usize>) {
    let k = (n - 2) / 2;
    let mut parts = vec![Graph::complete(1)];
    parts.extend(std::iter::repeat_n(Graph::from_edges(2, &[]).unwrap(), k));
    parts.push(Graph::complete(1));
    let graph = sequential_sum(&parts).expect("non-empty part list");

    let mut labels = BTreeMap::new();
    labels.insert("b0".to_string(), 0);
    for i in 1..=k {
        labels.insert(format!("a{i}"), 2 * i - 1);
        labels.insert(format!("b{i}"), 2 * i);
    }
    labels.insert(format!("b{}", k + 1), n - 1);
    (graph, labels)
}

/// Chain of edges: `b0`, then `k = (n−2)/2` edges `a_i b_i`, then `b_{k+1}`,
/// with the same asymmetric spine attachment as the triangle chain; maximal
/// outerplanar.
fn mop_graph(n: usize) -> (Graph, BTreeMap<String, usize>) {
    let k = (n - 2) / 2;
    let a = |i: usize| 2 * i - 1;
    let b = |i: usize| 2 * i;
    let b0 = 0;
    let b_last = 2 * k + 1;

    let mut labels = BTreeMap::new();
    labels.insert("b0".to_string(), b0);
    for i in 1..=k {
        labels.insert(format!("a{i}"), a(i));
        labels.insert(format!("b{i}"), b(i));
    }
    labels.insert(format!("b{}", k + 1), b_last);

    let mut edges = Vec::new();
    for i in 1..=k {
        edges.push((a(i), b(i)));
    }
    edges.extend([(b0, a(1)), (b0, b(1))]);
    for i in 1..k {
        edges.extend([(a(i), a(i + 1)), (b(i), b(i + 1))]);
    }
    for i in 1..=(k - 1) / 2 {
        edges.push((a(i), b(i + 1)));
    }
    for i in (k + 1) / 2..k {
        edges.push((b(i), a(i + 1)));
    }
    edges.extend([(a(k), b_last), (b(k), b_last)]);

    (Graph::from_edges(n, &edges).expect("labels are in range"), labels)
}

/// `K1 + [K_κ]^ℓ + K1` (cliques) or `K1 + [K̄_κ]^ℓ + K1` (independent sets),
/// `ℓ = (n−2)/κ`. Labels: `u` (left end), `w` (right end), `x{i}_{j}` for
/// member `j` of copy `i`, and `v` aliases the first vertex of the middle
/// copy `(ℓ+1)/2` — the designated minimum-status vertex.
fn layered(n: usize, kappa: usize, cliques: bool) -> (Graph, BTreeMap<String, usize>) {
    let ell = (n - 2) / kappa;
    let layer = if cliques {
        Graph::complete(kappa)
    } else {
        Graph::from_edges(kappa, &[]).unwrap()
    };
    let mut parts = vec![Graph::complete(1)];
    parts.extend(std::iter::repeat_n(layer, ell));
    parts.push(Graph::complete(1));
    let graph = sequential_sum(&parts).expect("non-empty part list");

    let mut labels = BTreeMap::new();
    labels.insert("u".to_string(), 0);
    for i in 1..=ell {
        for j in 1..=kappa {
            labels.insert(format!("x{i}_{j}"), 1 + (i - 1) * kappa + (j - 1));
        }
    }
    labels.insert("w".to_string(), n - 1);
    labels.insert("v".to_string(), 1 + ((ell + 1) / 2 - 1) * kappa);
    (graph, labels)
}

/// `K1 + [K_κ]^{ℓ−1} + K_mid + [K_κ]^{ℓ−1} + K1` for even `d` (`ℓ = d/2`),
/// with one extra left layer for odd `d` (`ℓ = (d−1)/2`);
/// `mid = n − κ(d−2) − 2`. Labels: `u`/`w` ends, `l{i}_{j}`/`r{i}_{j}` side
/// layers, `m{j}` middle clique, `v` aliases `m1` (a median vertex).
fn diam_extremal(n: usize, kappa: usize, d: usize) -> (Graph, BTreeMap<String, usize>) {
    let (left_layers, right_layers) = if d % 2 == 0 {
        (d / 2 - 1, d / 2 - 1)
    } else {
        ((d - 1) / 2, (d - 1) / 2 - 1)
    };
    let mid = n - kappa * (d - 2) - 2;
    let layer = Graph::complete(kappa);
    let mut parts = vec![Graph::complete(1)];
    parts.extend(std::iter::repeat_n(layer.clone(), left_layers));
    parts.push(Graph::complete(mid));
    parts.extend(std::iter::repeat_n(layer, right_layers));
    parts.push(Graph::complete(1));
    let graph = sequential_sum(&parts).expect("non-empty part list");

    let mut labels = BTreeMap::new();
    labels.insert("u".to_string(), 0);
    let mut next = 1;
    for i in 1..=left_layers {
        for j in 1..=kappa {
            labels.insert(format!("l{i}_{j}"), next);
            next += 1;
        }
    }
    labels.insert("v".to_string(), next);
    for j in 1..=mid {
        labels.insert(format!("m{j}"), next);
        next += 1;
    }
    for i in 1..=right_layers {
        for j in 1..=kappa {
            labels.insert(format!("r{i}_{j}"), next);
            next += 1;
        }
    }
    labels.insert("w".to_string(), n - 1);
    (graph, labels)
}

/// Evaluates the recorded closed forms at `spec`, exactly.
///
/// Fields the construction's source leaves unstated are `None`. The `Q`
/// family's proximity formula is stored as a known discrepancy: its value
/// disagrees with direct computation already at `n = 8` (formula `24/7`,
/// breadth-first search `10/7`), so both are returned and neither is
/// verdict-bearing downstream.
///
/// # Errors
///
/// Propagates [`FamilySpec::validate`] rejections.
pub fn closed_forms(spec: &FamilySpec) -> Result<ClosedForms, FamilyError> {
    spec.validate()?;
    let n = spec.n as i64;
    let forms = match spec.name {
        FamilyName::T => ClosedForms {
            family: *spec,
            rad: Some(ClosedForm::asserted(rat(n + 1, 6))),
            diam: Some(ClosedForm::asserted(rat(n + 1, 3))),
            pi: Some(ClosedForm::asserted(rat(n + 1, 12) + rat(2, n - 1))),
            rho: Some(ClosedForm::asserted(rat(n + 2, 6) + rat(1, 3 * (n - 1)))),
        },
        FamilyName::Q => {
            let computed = generate(spec)
                .expect("spec already validated")
                .graph
                .param_summary()
                .expect("family graphs are connected")
                .proximity;
            ClosedForms {
                family: *spec,
                rad: Some(ClosedForm::asserted(rat(n, 4))),
                diam: Some(ClosedForm::asserted(rat(n, 2))),
                pi: Some(ClosedForm {
                    value: rat(n + 17, 8) + rat(17, 8 * (n - 1)),
                    provenance: Provenance::KnownDiscrepancy,
                    computed: Some(computed),
                }),
                rho: Some(ClosedForm::asserted(rat(n + 1, 4) + rat(1, 4 * (n - 1)))),
            }
        }
        FamilyName::Mop => ClosedForms {
            family: *spec,
            rad: Some(ClosedForm::asserted(rat(n, 4))),
            diam: Some(ClosedForm::asserted(rat(n, 2))),
            pi: Some(ClosedForm::asserted(rat(n + 1, 8) + rat(9, 8 * (n - 1)))),
            rho: Some(ClosedForm::asserted(rat(n + 1, 4) + rat(1, 4 * (n - 1)))),
        },
        FamilyName::Gnk | FamilyName::GnkBar => {
            let k = spec.kappa.unwrap() as i64;
            let pi = if spec.name == FamilyName::Gnk {
                rat(n + 1, 4 * k) + rat(3 * (k * k - 1), 4 * k * (n - 1))
            } else {
                rat(n + 1, 4 * k) + rat(7 * k * k - 4 * k - 3, 4 * k * (n - 1))
            };
            ClosedForms {
                family: *spec,
                rad: None,
                diam: Some(ClosedForm::asserted(rat(n + k - 2, k))),
                pi: Some(ClosedForm::asserted(pi)),
                rho: Some(ClosedForm::asserted(
                    rat(n + k - 1, 2 * k) + rat(k - 1, 2 * k * (n - 1)),
                )),
            }
        }
        FamilyName::DiamExtremal => {
            let k = spec.kappa.unwrap() as i64;
            let d = spec.d.unwrap() as i64;
            let base = rat(k * (d - 3) * (d - 3), 4 * (n - 1)) + rat(1, 1);
            let pi = if d % 2 == 0 {
                base + rat(4 * (d - 2) - k, 4 * (n - 1))
            } else {
                base + rat(d - 2, n - 1)
            };
            ClosedForms {
                family: *spec,
                rad: None,
                diam: Some(ClosedForm::asserted(rat(d, 1))),
                pi: Some(ClosedForm::asserted(pi)),
                rho: None,
            }
        }
    };
    Ok(forms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::vertex_connectivity;
    use crate::planar::classify;

    fn summary(fam: &FamilyGraph) -> crate::graph::ParamSummary {
        fam.graph.param_summary().unwrap()
    }

    #[test]
    fn sequential_sum_small_shapes() {
        let k1 = Graph::complete(1);
        assert_eq!(sequential_sum(&[k1.clone()]).unwrap(), k1);
        assert_eq!(
            sequential_sum(&[k1.clone(), k1.clone()]).unwrap(),
            Graph::complete(2)
        );

        // K1 + K̄2 + K1 is a 4-cycle 0-1-3-2-0.
        let c4 = sequential_sum(&[k1.clone(), Graph::from_edges(2, &[]).unwrap(), k1.clone()])
            .unwrap();
        assert_eq!(c4.edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);

        // K1 + K2 + K2 + K1: internal 1+1 edges, joins 2+4+2.
        let g = sequential_sum(&[k1.clone(), Graph::complete(2), Graph::complete(2), k1]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 10));

        assert_eq!(sequential_sum(&[]), Err(FamilyError::EmptyPartList));
    }

    #[test]
    fn t11_matches_hand_computed_invariants() {
        let fam = generate(&FamilySpec::t(11)).unwrap();
        let g = &fam.graph;
        assert_eq!((g.n(), g.edge_count()), (11, 27));
        assert!(g.had_duplicate_edges(), "the closing list re-adds b0's edges");
        assert_eq!(vertex_connectivity(g).kappa, 3);
        let flags = classify(g);
        assert!(flags.maximal_planar && flags.planar && !flags.outerplanar);

        // k = 3: median vertex b2, remote vertex b0.
        assert_eq!(g.status(fam.vertex("b2")).unwrap(), 12);
        assert_eq!(g.status(fam.vertex("b0")).unwrap(), 22);
        let s = summary(&fam);
        assert_eq!(s.proximity, rat(6, 5));
        assert_eq!(s.remoteness, rat(11, 5));
        assert_eq!((s.radius, s.diameter), (2, 4));
        assert!(s.median_vertices.contains(&fam.vertex("b2")));
        assert!(s.remote_vertices.contains(&fam.vertex("b0")));
    }

    #[test]
    fn t_closed_forms_match_computation() {
        for n in [11, 17, 23] {
            let spec = FamilySpec::t(n);
            let forms = closed_forms(&spec).unwrap();
            let s = summary(&generate(&spec).unwrap());
            assert_eq!(forms.rad.unwrap().value, Rat::from_integer(s.radius as i64));
            assert_eq!(forms.diam.unwrap().value, Rat::from_integer(s.diameter as i64));
            assert_eq!(forms.pi.unwrap().value, s.proximity, "pi at n={n}");
            assert_eq!(forms.rho.unwrap().value, s.remoteness, "rho at n={n}");
        }
    }

    #[test]
    fn q8_is_a_quadrangulation_with_discrepant_pi() {
        let spec = FamilySpec::q(8);
        let fam = generate(&spec).unwrap();
        let g = &fam.graph;
        assert_eq!((g.n(), g.edge_count()), (8, 12));
        assert!(classify(g).quadrangulation);
        assert_eq!(vertex_connectivity(g).kappa, 2);

        // k = 3: the formula's designated vertex is b2.
        assert_eq!(g.status(fam.vertex("b2")).unwrap(), 10);
        let s = summary(&fam);
        assert_eq!(s.proximity, rat(10, 7));
        assert_eq!(s.remoteness, rat(16, 7));
        assert_eq!((s.radius, s.diameter), (2, 4));

        let forms = closed_forms(&spec).unwrap();
        let pi = forms.pi.unwrap();
        assert_eq!(pi.provenance, Provenance::KnownDiscrepancy);
        assert_eq!(pi.value, rat(24, 7), "recorded formula value");
        assert_eq!(pi.computed, Some(rat(10, 7)), "direct computation");
        assert_eq!(forms.rho.unwrap().value, rat(16, 7));
        assert_eq!(forms.rad.unwrap().value, rat(2, 1));
        assert_eq!(forms.diam.unwrap().value, rat(4, 1));
    }

    #[test]
    fn q_rho_rad_diam_formulas_hold_at_larger_orders() {
        for n in [12, 16, 20] {
            let spec = FamilySpec::q(n);
            let forms = closed_forms(&spec).unwrap();
            let s = summary(&generate(&spec).unwrap());
            assert_eq!(forms.rad.unwrap().value, Rat::from_integer(s.radius as i64));
            assert_eq!(forms.diam.unwrap().value, Rat::from_integer(s.diameter as i64));
            assert_eq!(forms.rho.unwrap().value, s.remoteness, "rho at n={n}");
            // The recorded pi formula stays discrepant; the computed field
            // tracks the direct value.
            let pi = forms.pi.unwrap();
            assert_eq!(pi.computed, Some(s.proximity));
            assert_ne!(pi.value, s.proximity);
        }
    }

    #[test]
    fn mop8_matches_hand_computed_invariants() {
        let spec = FamilySpec::mop(8);
        let fam = generate(&spec).unwrap();
        let g = &fam.graph;
        assert_eq!((g.n(), g.edge_count()), (8, 13));
        assert!(classify(g).maximal_outerplanar);

        assert_eq!(g.status(fam.vertex("b2")).unwrap(), 9);
        assert_eq!(g.status(fam.vertex("b0")).unwrap(), 16);
        let s = summary(&fam);
        assert_eq!(s.proximity, rat(9, 7));
        assert_eq!(s.remoteness, rat(16, 7));
        assert_eq!((s.radius, s.diameter), (2, 4));
    }

    #[test]
    fn mop_closed_forms_match_computation() {
        for n in [8, 12, 16] {
            let spec = FamilySpec::mop(n);
            let forms = closed_forms(&spec).unwrap();
            let s = summary(&generate(&spec).unwrap());
            assert_eq!(forms.rad.unwrap().value, Rat::from_integer(s.radius as i64));
            assert_eq!(forms.diam.unwrap().value, Rat::from_integer(s.diameter as i64));
            assert_eq!(forms.pi.unwrap().value, s.proximity, "pi at n={n}");
            assert_eq!(forms.rho.unwrap().value, s.remoteness, "rho at n={n}");
        }
    }

    #[test]
    fn gnk_and_gnkbar_attain_their_remoteness_proximity_gaps() {
        // Three admissible orders per κ with ℓ ≥ 3 (the ℓ = 1 degenerate
        // member is skipped: its designated vertices stop being extremal).
        for kappa in 1..=5usize {
            let ns: Vec<usize> = (1..)
                .map(|j| kappa * (2 * j + 1) + 2)
                .take(3)
                .collect();
            for &n in &ns {
                for (spec, bipartite) in [
                    // Clique layers of size 1 are independent sets too, so
                    // Gnk at κ = 1 is the (bipartite) path.
                    (FamilySpec::gnk(n, kappa), kappa == 1),
                    (FamilySpec::gnk_bar(n, kappa), true),
                ] {
                    let fam = generate(&spec).unwrap();
                    let s = summary(&fam);
                    let forms = closed_forms(&spec).unwrap();
                    assert_eq!(forms.pi.unwrap().value, s.proximity, "{spec} pi");
                    assert_eq!(forms.rho.unwrap().value, s.remoteness, "{spec} rho");
                    assert_eq!(
                        forms.diam.unwrap().value,
                        Rat::from_integer(s.diameter as i64),
                        "{spec} diam"
                    );
                    assert_eq!(fam.graph.is_bipartite(), bipartite, "{spec}");
                    // The designated vertices really are the extremes.
                    assert_eq!(s.mean_status(fam.vertex("v")), s.proximity);
                    assert_eq!(s.mean_status(fam.vertex("u")), s.remoteness);
                }
            }
        }
    }

    #[test]
    fn gnk_12_2_gap_is_17_over_11() {
        let forms = closed_forms(&FamilySpec::gnk(12, 2)).unwrap();
        let gap = forms.rho.unwrap().value - forms.pi.unwrap().value;
        assert_eq!(gap, rat(17, 11));
        let s = summary(&generate(&FamilySpec::gnk(12, 2)).unwrap());
        assert_eq!(s.remoteness - s.proximity, rat(17, 11));
    }

    #[test]
    fn diam_extremal_attains_the_proximity_bound() {
        let cases = [
            (14, 2, 4, rat(15, 13)),
            (14, 2, 5, rat(18, 13)),
            (14, 2, 2, rat(1, 1)),
            (11, 3, 3, rat(11, 10)),
            (20, 1, 11, rat(44, 19)),
        ];
        for (n, kappa, d, want_pi) in cases {
            let spec = FamilySpec::diam_extremal(n, kappa, d);
            let fam = generate(&spec).unwrap();
            let s = summary(&fam);
            assert_eq!(s.diameter, d, "{spec}");
            assert_eq!(s.proximity, want_pi, "{spec}");
            assert_eq!(closed_forms(&spec).unwrap().pi.unwrap().value, want_pi, "{spec}");
            assert_eq!(s.mean_status(fam.vertex("v")), s.proximity, "{spec}");
        }

        // Middle clique of DiamExtremal(14, κ=2, d=4) is K8.
        let fam = generate(&FamilySpec::diam_extremal(14, 2, 4)).unwrap();
        let mids = fam.labels.keys().filter(|k| k.starts_with('m')).count();
        assert_eq!(mids, 8);
    }

    #[test]
    fn inadmissible_specs_name_their_violation() {
        let err = |spec: FamilySpec| spec.validate().unwrap_err().to_string();
        assert!(err(FamilySpec::t(12)).contains("n ≡ 5 (mod 6)"));
        assert!(err(FamilySpec::q(10)).contains("n ≡ 0 (mod 4)"));
        assert!(err(FamilySpec::mop(4)).contains("n ≥ 8"));
        assert!(err(FamilySpec::gnk(12, 3)).contains("n ≡ 5 (mod 6)"));
        assert!(err(FamilySpec::diam_extremal(10, 3, 5)).contains("n ≥ κ(d−1)+2 = 14"));
        assert!(err(FamilySpec::diam_extremal(10, 3, 1)).contains("d ≥ 2"));

        let missing = FamilySpec { name: FamilyName::Gnk, n: 12, kappa: None, d: None };
        assert_eq!(
            missing.validate(),
            Err(FamilyError::MissingParam { family: FamilyName::Gnk, param: "kappa" })
        );
        let stray = FamilySpec { name: FamilyName::T, n: 11, kappa: Some(3), d: None };
        assert_eq!(
            stray.validate(),
            Err(FamilyError::UnexpectedParam { family: FamilyName::T, param: "kappa" })
        );
    }

    #[test]
    fn family_names_round_trip_through_display() {
        for name in [
            FamilyName::T,
            FamilyName::Q,
            FamilyName::Mop,
            FamilyName::Gnk,
            FamilyName::GnkBar,
            FamilyName::DiamExtremal,
        ] {
            assert_eq!(name.to_string().parse::<FamilyName>().unwrap(), name);
        }
        assert_eq!("gnk-bar".parse::<FamilyName>().unwrap(), FamilyName::GnkBar);
        assert!("K5".parse::<FamilyName>().is_err());
    }

    /// Every admissible spec with n ≤ 40, κ ≤ 5 delivers the promised order,
    /// class flags, and connectivity.
    #[test]
    fn all_admissible_specs_deliver_their_promises() {
        let mut checked = 0usize;

        for n in (11..=40).filter(|n| n % 6 == 5) {
            let fam = generate(&FamilySpec::t(n)).unwrap();
            assert_eq!(fam.graph.n(), n);
            assert!(classify(&fam.graph).maximal_planar, "T({n})");
            assert_eq!(vertex_connectivity(&fam.graph).kappa, 3, "T({n})");
            checked += 1;
        }

        for n in (8..=40).filter(|n| n % 4 == 0) {
            let q = generate(&FamilySpec::q(n)).unwrap();
            assert_eq!(q.graph.n(), n);
            assert!(classify(&q.graph).quadrangulation, "Q({n})");

            let mop = generate(&FamilySpec::mop(n)).unwrap();
            assert_eq!(mop.graph.n(), n);
            assert!(classify(&mop.graph).maximal_outerplanar, "MOP({n})");
            checked += 2;
        }

        for kappa in 1..=5usize {
            for n in (kappa + 2..=40).step_by(2 * kappa) {
                let ell = (n - 2) / kappa;
                let gnk = generate(&FamilySpec::gnk(n, kappa)).unwrap();
                assert_eq!(gnk.graph.n(), n);
                assert_eq!(vertex_connectivity(&gnk.graph).kappa, kappa, "Gnk({n},{kappa})");

                let bar = generate(&FamilySpec::gnk_bar(n, kappa)).unwrap();
                assert_eq!(bar.graph.n(), n);
                assert!(bar.graph.is_bipartite(), "GnkBar({n},{kappa})");
                // At ℓ = 1 the bipartite member degenerates to K_{2,κ}, whose
                // connectivity is min(2, κ); from ℓ ≥ 3 on it is κ-connected.
                let expected = if ell == 1 { kappa.min(2) } else { kappa };
                assert_eq!(
                    vertex_connectivity(&bar.graph).kappa,
                    expected,
                    "GnkBar({n},{kappa})"
                );
                checked += 2;
            }

            for n in 3..=40usize {
                for d in 2..=(n - 2) / kappa + 1 {
                    let spec = FamilySpec::diam_extremal(n, kappa, d);
                    let fam = generate(&spec).unwrap();
                    assert_eq!(fam.graph.n(), n);
                    let dm = fam.graph.distance_matrix();
                    let diam = (0..n).filter_map(|v| dm.eccentricity(v)).max().unwrap();
                    assert_eq!(diam, d, "{spec}");
                    assert!(vertex_connectivity(&fam.graph).kappa >= kappa, "{spec}");
                    checked += 1;
                }
            }
        }

        assert!(checked > 500, "expected a broad sweep, got {checked} specs");
    }
}
