//! Every inequality of the registry as a predicate on one graph.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Pow, ToPrimitive};
use serde::Serialize;
use serde_json::json;

use super::structure::{is_clique_bound_extremal, is_complete_bipartite, is_turan, turan};
use crate::combinatorics::{clique_number, clique_profile, has_clique, turan_clique_closed_form};
use crate::graph::emit_graph6;
use crate::partition::{exact_feasible, min_edges_to_r_partite_seeded, Mode};
use crate::pspectral::{
    lagrangian, lagrangian_by_replicator, p_spectral_radius, Certification, PSpectralConfig, PValue,
};
use crate::spectral::{floor_half_n_radius, lambda, q};
use crate::{Error, Graph, Result};

/// Tolerance for float comparisons of exactly computed quantities.
pub const FLOAT_TOL: f64 = 1e-9;
/// Slack for comparisons involving optimiser lower bounds.
pub const OPTIMIZER_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum BoundId {
    TuranEdges,
    SpectralTuran,
    EdgeFromSpectralChain,
    ZykovCliques,
    RayleighSandwich,
    Eq6,
    NikiforovCliqueBound,
    CliqueChain,
    PSpectralSandwich,
    PSpectralMonotone,
    KangNikiforovTuran,
    KNEdgeBound,
    QTuran,
    QVsLambda,
    DegreeTuran,
    NeighborhoodIntersection,
    FurediDr,
    BaloghDrProfile,
    SpectralSubadditivity,
    MotzkinStraus,
}

impl BoundId {
    pub const ALL: [BoundId; 20] = [
        BoundId::TuranEdges,
        BoundId::SpectralTuran,
        BoundId::EdgeFromSpectralChain,
        BoundId::ZykovCliques,
        BoundId::RayleighSandwich,
        BoundId::Eq6,
        BoundId::NikiforovCliqueBound,
        BoundId::CliqueChain,
        BoundId::PSpectralSandwich,
        BoundId::PSpectralMonotone,
        BoundId::KangNikiforovTuran,
        BoundId::KNEdgeBound,
        BoundId::QTuran,
        BoundId::QVsLambda,
        BoundId::DegreeTuran,
        BoundId::NeighborhoodIntersection,
        BoundId::FurediDr,
        BoundId::BaloghDrProfile,
        BoundId::SpectralSubadditivity,
        BoundId::MotzkinStraus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::TuranEdges => "TuranEdges",
            BoundId::SpectralTuran => "SpectralTuran",
            BoundId::EdgeFromSpectralChain => "EdgeFromSpectralChain",
            BoundId::ZykovCliques => "ZykovCliques",
            BoundId::RayleighSandwich => "RayleighSandwich",
            BoundId::Eq6 => "Eq6",
            BoundId::NikiforovCliqueBound => "NikiforovCliqueBound",
            BoundId::CliqueChain => "CliqueChain",
            BoundId::PSpectralSandwich => "PSpectralSandwich",
            BoundId::PSpectralMonotone => "PSpectralMonotone",
            BoundId::KangNikiforovTuran => "KangNikiforovTuran",
            BoundId::KNEdgeBound => "KNEdgeBound",
            BoundId::QTuran => "QTuran",
            BoundId::QVsLambda => "QVsLambda",
            BoundId::DegreeTuran => "DegreeTuran",
            BoundId::NeighborhoodIntersection => "NeighborhoodIntersection",
            BoundId::FurediDr => "FurediDr",
            BoundId::BaloghDrProfile => "BaloghDrProfile",
            BoundId::SpectralSubadditivity => "SpectralSubadditivity",
            BoundId::MotzkinStraus => "MotzkinStraus",
        }
    }

    /// Whether the bound is stated for `K_{r+1}`-free graphs (and needs `r`).
    pub fn needs_r(self) -> bool {
        !matches!(
            self,
            BoundId::RayleighSandwich
                | BoundId::Eq6
                | BoundId::NikiforovCliqueBound
                | BoundId::PSpectralSandwich
                | BoundId::PSpectralMonotone
                | BoundId::QVsLambda
                | BoundId::MotzkinStraus
        )
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    /// Case-insensitive; `-` and `_` are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| *c != '-' && *c != '_')
            .map(|c| c.to_ascii_lowercase())
            .collect();
        BoundId::ALL
            .into_iter()
            .find(|id| id.name().to_ascii_lowercase() == key)
            .ok_or_else(|| Error::Usage(format!("unknown bound id {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    Holds,
    Equality,
    Violated,
    Indeterminate,
}

/// A side of an inequality: integers and exact rationals stay exact.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Quantity {
    Int(i64),
    Real(f64),
    /// Exact value too large for `i64`, or a rational `"p/q"`.
    Exact(String),
}

impl Quantity {
    pub fn count(x: u128) -> Self {
        i64::try_from(x).map_or_else(|_| Quantity::Exact(x.to_string()), Quantity::Int)
    }

    pub fn as_f64(&self) -> f64 {
        match self {
            Quantity::Int(x) => *x as f64,
            Quantity::Real(x) => *x,
            Quantity::Exact(s) => match s.split_once('/') {
                Some((a, b)) => a.parse::<f64>().unwrap_or(f64::NAN) / b.parse::<f64>().unwrap_or(f64::NAN),
                None => s.parse().unwrap_or(f64::NAN),
            },
        }
    }
}

impl From<usize> for Quantity {
    fn from(x: usize) -> Self {
        Quantity::count(x as u128)
    }
}

impl From<f64> for Quantity {
    fn from(x: f64) -> Self {
        Quantity::Real(x)
    }
}

/// One line of report output; field order is the serialisation order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub bound_id: BoundId,
    pub graph6: String,
    pub status: Status,
    pub lhs: Option<Quantity>,
    pub rhs: Option<Quantity>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl BoundReport {
    fn new(id: BoundId, g: &Graph, status: Status, lhs: impl Into<Quantity>, rhs: impl Into<Quantity>) -> Self {
        BoundReport {
            bound_id: id,
            graph6: emit_graph6(g),
            status,
            lhs: Some(lhs.into()),
            rhs: Some(rhs.into()),
            witness: None,
            note: None,
        }
    }

    fn indeterminate(id: BoundId, g: &Graph, note: impl Into<String>) -> Self {
        BoundReport {
            bound_id: id,
            graph6: emit_graph6(g),
            status: Status::Indeterminate,
            lhs: None,
            rhs: None,
            witness: None,
            note: Some(note.into()),
        }
    }

    fn witness(mut self, w: serde_json::Value) -> Self {
        self.witness = Some(w);
        self
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// JSON line with stable key order.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BoundParams {
    pub r: Option<usize>,
    /// Clique size for `ZykovCliques`; defaults to `r`.
    pub s: Option<usize>,
    /// Defaults to 2.
    pub p: Option<PValue>,
    /// Smaller exponent for `PSpectralMonotone`; defaults to 1.
    pub q: Option<PValue>,
    /// Edge deficit for `FurediDr`; defaults to `max(0, e(T_r(n)) − m)`.
    pub t: Option<usize>,
    pub pspectral: PSpectralConfig,
}

impl BoundParams {
    pub fn with_r(r: usize) -> Self {
        BoundParams {
            r: Some(r),
            ..Default::default()
        }
    }

    fn r(&self, id: BoundId) -> Result<usize> {
        match self.r {
            Some(r) if r >= 1 => Ok(r),
            Some(_) => Err(Error::Usage(format!("{id} needs r >= 1"))),
            None => Err(Error::Usage(format!("{id} needs parameter r"))),
        }
    }

    fn p(&self) -> PValue {
        self.p.unwrap_or(PValue::Finite(2.0))
    }
}

/// Three-way float comparison of `lhs ≤ rhs`.
fn compare(lhs: f64, rhs: f64, tol: f64) -> Status {
    if (lhs - rhs).abs() <= tol {
        Status::Equality
    } else if lhs < rhs {
        Status::Holds
    } else {
        Status::Violated
    }
}

fn compare_int(lhs: u128, rhs: u128) -> Status {
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Less => Status::Holds,
        std::cmp::Ordering::Equal => Status::Equality,
        std::cmp::Ordering::Greater => Status::Violated,
    }
}

/// Equality only counts when the structural characterisation also holds.
fn characterized(status: Status, holds: bool) -> Status {
    if status == Status::Equality && !holds {
        Status::Violated
    } else {
        status
    }
}

fn turan_edges(r: usize, n: usize) -> usize {
    turan(r, n).m()
}

fn kfree_or<F: FnOnce() -> Result<BoundReport>>(id: BoundId, g: &Graph, r: usize, body: F) -> Result<BoundReport> {
    if has_clique(g, r + 1) {
        Ok(BoundReport::indeterminate(
            id,
            g,
            format!("hypothesis fails: graph contains K_{}", r + 1),
        ))
    } else {
        body()
    }
}

fn pspectral(g: &Graph, p: PValue, params: &BoundParams) -> Result<crate::pspectral::PSpectralResult> {
    p_spectral_radius(g, p, &params.pspectral)
}

pub fn check(id: BoundId, g: &Graph, params: &BoundParams) -> Result<BoundReport> {
    let n = g.n();
    let m = g.m();
    let nf = n as f64;
    let mf = m as f64;
    match id {
        BoundId::TuranEdges => {
            let r = params.r(id)?;
            kfree_or(id, g, r, || {
                let rhs = turan_edges(r, n);
                let status = characterized(compare_int(m as u128, rhs as u128), is_turan(g, r));
                Ok(BoundReport::new(id, g, status, m, rhs))
            })
        }
        BoundId::SpectralTuran => {
            let r = params.r(id)?;
            kfree_or(id, g, r, || {
                let (l, lt) = (lambda(g), lambda(&turan(r, n)));
                let status = characterized(compare(l, lt, FLOAT_TOL), is_turan(g, r));
                Ok(BoundReport::new(id, g, status, l, lt))
            })
        }
        BoundId::EdgeFromSpectralChain => {
            let r = params.r(id)?;
            kfree_or(id, g, r, || {
                let t = turan(r, n);
                let mid = floor_half_n_radius(g, lambda(g));
                let top = floor_half_n_radius(&t, lambda(&t));
                let status = if m as u64 > mid.value || mid.value > top.value {
                    Status::Violated
                } else if m as u64 == top.value {
                    characterized(Status::Equality, is_turan(g, r))
                } else {
                    Status::Holds
                };
                Ok(BoundReport::new(id, g, status, m, top.value as usize).witness(json!({
                    "floor_half_n_lambda": mid.value,
                    "exact_escalations": u8::from(mid.escalated) + u8::from(top.escalated),
                })))
            })
        }
        BoundId::ZykovCliques => {
            let r = params.r(id)?;
            let s = params.s.unwrap_or(r);
            if s == 0 {
                return Err(Error::Usage("ZykovCliques needs s >= 1".into()));
            }
            kfree_or(id, g, r, || {
                let re = r.min(n);
                let lhs = clique_profile(g, s).k(s);
                let rhs = turan_clique_closed_form(re, n, s)?;
                let status = compare_int(lhs, rhs);
                // k_1 = n always, and for s > r both sides vanish
                let status = if (2..=re).contains(&s) {
                    characterized(status, is_turan(g, r))
                } else {
                    status
                };
                Ok(
                    BoundReport::new(id, g, status, Quantity::count(lhs), Quantity::count(rhs))
                        .witness(json!({ "s": s })),
                )
            })
        }
        BoundId::RayleighSandwich => {
            let l = lambda(g);
            let lower = 2.0 * mf / nf;
            let upper = (2.0 * mf).sqrt();
            let low = compare(lower, l, FLOAT_TOL);
            let high = compare(l, upper, FLOAT_TOL);
            let status = if low == Status::Violated || high == Status::Violated {
                Status::Violated
            } else if low == Status::Equality || high == Status::Equality {
                // lower tight: regular; upper tight: complete bipartite plus isolated vertices
                let ok_low = low != Status::Equality || g.is_regular();
                let ok_high = high != Status::Equality
                    || m == 0
                    || super::structure::without_isolated(g).is_some_and(|h| is_complete_bipartite(&h));
                characterized(Status::Equality, ok_low && ok_high)
            } else {
                Status::Holds
            };
            Ok(BoundReport::new(id, g, status, l, upper).witness(json!({ "lower": lower })))
        }
        BoundId::Eq6 => {
            let l = lambda(g);
            let rhs = (2.0 * mf * (1.0 - 1.0 / nf)).sqrt();
            let complete = m == n * (n - 1) / 2;
            let status = characterized(compare(l, rhs, FLOAT_TOL), complete || m == 0);
            Ok(BoundReport::new(id, g, status, l, rhs))
        }
        BoundId::NikiforovCliqueBound => {
            let l = lambda(g);
            let w = clique_number(g);
            let rhs = (2.0 * mf * (1.0 - 1.0 / w as f64)).sqrt();
            let status = compare(l, rhs, FLOAT_TOL);
            let report = if m == 0 {
                BoundReport::new(id, g, status, l, rhs).note("edgeless: both sides vanish")
            } else {
                BoundReport::new(id, g, characterized(status, is_clique_bound_extremal(g)), l, rhs)
            };
            Ok(report.witness(json!({ "omega": w })))
        }
        BoundId::CliqueChain => {
            let r = params.r(id)?;
            kfree_or(id, g, r, || Ok(clique_chain(g, r)))
        }
        BoundId::PSpectralSandwich => {
            let p = params.p();
            let res = pspectral(g, p, params)?;
            let inv = p.reciprocal();
            let lower = 2.0 * mf * nf.powf(-2.0 * inv);
            let upper = if m == 0 { 0.0 } else { (2.0 * mf).powf(1.0 - inv) };
            let low = compare(lower, res.value, FLOAT_TOL);
            let high = compare(res.value, upper, FLOAT_TOL);
            let status = if low == Status::Violated || high == Status::Violated {
                Status::Violated
            } else if low == Status::Equality || high == Status::Equality {
                Status::Equality
            } else {
                Status::Holds
            };
            Ok(BoundReport::new(id, g, status, res.value, upper).witness(json!({
                "p": p,
                "lower": lower,
                "certified": res.certified,
                "vector": res.witness,
            })))
        }
        BoundId::PSpectralMonotone => {
            let p = params.p();
            let qv = params.q.unwrap_or(PValue::Finite(1.0));
            if qv.reciprocal() < p.reciprocal() {
                return Err(Error::Usage(format!(
                    "PSpectralMonotone needs q <= p, got q={qv}, p={p}"
                )));
            }
            let lp = pspectral(g, p, params)?.value;
            let lq = pspectral(g, qv, params)?.value;
            let lhs = lp * nf.powf(2.0 * p.reciprocal());
            let rhs = lq * nf.powf(2.0 * qv.reciprocal());
            let mut status = compare(lhs, rhs, OPTIMIZER_TOL);
            let mut second = serde_json::Value::Null;
            // the power form is 1^∞ at p = ∞ and 0/0 without edges
            if let (PValue::Finite(pf), true) = (p, m > 0) {
                let qf = match qv {
                    PValue::Finite(x) => x,
                    PValue::Infinity => pf,
                };
                let a = (lp / (2.0 * mf)).powf(pf);
                let b = (lq / (2.0 * mf)).powf(qf);
                let s2 = compare(a, b, OPTIMIZER_TOL);
                if s2 == Status::Violated || (s2 == Status::Holds && status == Status::Equality) {
                    status = if s2 == Status::Violated { s2 } else { status };
                }
                second = json!({ "lhs": a, "rhs": b });
            }
            Ok(BoundReport::new(id, g, status, lhs, rhs).witness(json!({ "p": p, "q": qv, "power_form": second })))
        }
        BoundId::KangNikiforovTuran => {
            let r = params.r(id)?;
            let p = params.p();
            if p == PValue::Finite(1.0) {
                return Ok(BoundReport::indeterminate(id, g, "hypothesis fails: needs p > 1"));
            }
            kfree_or(id, g, r, || {
                let a = pspectral(g, p, params)?;
                let b = pspectral(&turan(r, n), p, params)?;
                let best_effort = a.certified == Certification::MultiStartBestEffort
                    || b.certified == Certification::MultiStartBestEffort;
                let tol =
                    if a.certified == Certification::ExactClosedForm && b.certified == Certification::ExactClosedForm {
                        FLOAT_TOL
                    } else {
                        OPTIMIZER_TOL
                    };
                let raw = compare(a.value, b.value, tol);
                let report = match raw {
                    Status::Equality if !is_turan(g, r) => BoundReport::new(id, g, Status::Holds, a.value, b.value)
                        .note("within optimiser tolerance of the Turán value"),
                    Status::Violated if best_effort => BoundReport::new(id, g, Status::Indeterminate, a.value, b.value)
                        .note("exceeds a best-effort Turán value"),
                    s => BoundReport::new(id, g, s, a.value, b.value),
                };
                Ok(report.witness(json!({ "p": p, "certified": [a.certified, b.certified] })))
            })
        }
        BoundId::KNEdgeBound => {
            let r = params.r(id)?;
            let p = params.p();
            kfree_or(id, g, r, || {
                let res = pspectral(g, p, params)?;
                let inv = p.reciprocal();
                let rhs = if m == 0 {
                    0.0
                } else {
                    (2.0 * mf).powf(1.0 - inv) * (1.0 - 1.0 / r as f64).powf(inv)
                };
                let status = compare(res.value, rhs, FLOAT_TOL);
                Ok(BoundReport::new(id, g, status, res.value, rhs)
                    .witness(json!({ "p": p, "certified": res.certified })))
            })
        }
        BoundId::QTuran => {
            let r = params.r(id)?;
            kfree_or(id, g, r, || {
                let (qg, qt) = (q(g), q(&turan(r, n)));
                let shape = if r == 2 && n >= 2 {
                    is_complete_bipartite(g)
                } else {
                    is_turan(g, r)
                };
                let status = characterized(compare(qg, qt, FLOAT_TOL), shape);
                Ok(BoundReport::new(id, g, status, qg, qt))
            })
        }
        BoundId::QVsLambda => {
            let (l, qg) = (lambda(g), q(g));
            Ok(BoundReport::new(id, g, compare(2.0 * l, qg, FLOAT_TOL), 2.0 * l, qg))
        }
        BoundId::DegreeTuran => {
            let r = params.r(id)?;
            kfree_or(id, g, r, || {
                let rhs = n - n.div_ceil(r.min(n));
                let status = compare_int(g.min_degree() as u128, rhs as u128);
                Ok(BoundReport::new(id, g, status, g.min_degree(), rhs).witness(json!({ "is_turan": is_turan(g, r) })))
            })
        }
        BoundId::NeighborhoodIntersection => {
            let r = params.r(id)?;
            Ok(neighborhood_intersection(g, r))
        }
        BoundId::FurediDr => {
            let r = params.r(id)?;
            if r < 2 {
                return Err(Error::Usage("FurediDr needs r >= 2".into()));
            }
            kfree_or(id, g, r, || {
                let et = turan_edges(r, n);
                let t = params.t.unwrap_or(et.saturating_sub(m));
                if m + t < et {
                    return Ok(BoundReport::indeterminate(
                        id,
                        g,
                        format!("hypothesis fails: e = {m} < e(T_r(n)) - t = {}", et - t),
                    ));
                }
                let mode = if exact_feasible(n, r) {
                    Mode::Exact
                } else {
                    Mode::Heuristic
                };
                let d = min_edges_to_r_partite_seeded(g, r, mode, params.pspectral.seed)?;
                // t is a free parameter, not a sharp value: no equality case
                let status = if d.value <= t { Status::Holds } else { Status::Violated };
                let report = if status == Status::Violated && mode == Mode::Heuristic {
                    BoundReport::new(id, g, Status::Indeterminate, d.value, t).note("heuristic upper bound exceeds t")
                } else {
                    BoundReport::new(id, g, status, d.value, t)
                };
                Ok(report.witness(json!({ "mode": mode, "blocks": d.assignment.blocks() })))
            })
        }
        BoundId::BaloghDrProfile => {
            let r = params.r(id)?;
            if r < 2 {
                return Err(Error::Usage("BaloghDrProfile needs r >= 2".into()));
            }
            kfree_or(id, g, r, || {
                if n < 3 * r * r {
                    return Ok(BoundReport::indeterminate(
                        id,
                        g,
                        format!("hypothesis fails: n < 3r^2 = {}", 3 * r * r),
                    ));
                }
                let et = turan_edges(r, n);
                let delta = et.saturating_sub(m) as f64 / (nf * nf);
                let cap = 1e-7 * (r as f64).powi(-12);
                if delta > cap {
                    return Ok(BoundReport::indeterminate(
                        id,
                        g,
                        format!("hypothesis fails: delta = {delta:e} > {cap:e}"),
                    ));
                }
                let mode = if exact_feasible(n, r) {
                    Mode::Exact
                } else {
                    Mode::Heuristic
                };
                let d = min_edges_to_r_partite_seeded(g, r, mode, params.pspectral.seed)?;
                let rhs = 2.0 * r as f64 / (3.0 * 3f64.sqrt()) * delta.powf(1.5) * nf * nf;
                let status = compare(d.value as f64, rhs, FLOAT_TOL);
                Ok(BoundReport::new(id, g, status, d.value, rhs)
                    .witness(json!({ "delta": delta, "mode": mode }))
                    .note("leading term only; the o(1) correction is not evaluated"))
            })
        }
        BoundId::SpectralSubadditivity => {
            let r = params.r(id)?.max(2);
            let mode = if exact_feasible(n, r) {
                Mode::Exact
            } else {
                Mode::Heuristic
            };
            let d = min_edges_to_r_partite_seeded(g, r, mode, params.pspectral.seed)?;
            let block = &d.assignment.block_of;
            let (cross, inside): (Vec<_>, Vec<_>) = g.edges().partition(|&(u, v)| block[u] != block[v]);
            let (a, b) = (g.spanning_subgraph(&cross), g.spanning_subgraph(&inside));
            let lhs = lambda(g);
            let rhs = lambda(&a) + lambda(&b);
            Ok(
                BoundReport::new(id, g, compare(lhs, rhs, FLOAT_TOL), lhs, rhs).witness(json!({
                    "cross_edges": cross.len(),
                    "internal_edges": inside.len(),
                    "blocks": d.assignment.blocks(),
                })),
            )
        }
        BoundId::MotzkinStraus => {
            let exact = lagrangian(g);
            let exact_f = *exact.numer() as f64 / *exact.denom() as f64;
            let (value, x) = lagrangian_by_replicator(g, &params.pspectral);
            let rhs = Quantity::Exact(format!("{}/{}", exact.numer(), exact.denom()));
            let report = if value > exact_f + FLOAT_TOL {
                BoundReport::new(id, g, Status::Violated, value, rhs)
            } else if exact_f - value <= OPTIMIZER_TOL {
                BoundReport::new(id, g, Status::Equality, value, rhs)
            } else {
                BoundReport::new(id, g, Status::Indeterminate, value, rhs)
                    .note("optimiser stopped below the clique value")
            };
            Ok(report.witness(json!({ "vector": x })))
        }
    }
}

/// Checks every bound in registry order.
pub fn check_all(g: &Graph, params: &BoundParams) -> Result<Vec<BoundReport>> {
    BoundId::ALL.iter().map(|&id| check(id, g, params)).collect()
}

/// `(k_{i+1}/C(r,i+1))^{1/(i+1)} ≤ (k_i/C(r,i))^{1/i}`, compared exactly as
/// `k_{i+1}^i · C(r,i)^{i+1} ≤ k_i^{i+1} · C(r,i+1)^i`.
fn clique_chain(g: &Graph, r: usize) -> BoundReport {
    let id = BoundId::CliqueChain;
    let profile = clique_profile(g, r);
    let binom = |k: usize| -> BigInt {
        (0..k).fold(BigInt::from(1), |acc, i| {
            acc * BigInt::from(r - i) / BigInt::from(i + 1)
        })
    };
    let terms: Vec<f64> = (1..=r)
        .map(|i| (profile.k(i) as f64 / binom(i).to_f64().unwrap_or(f64::NAN)).powf(1.0 / i as f64))
        .collect();
    let mut all_equal = true;
    let mut violated_at = None;
    for i in 1..r {
        let ki = BigInt::from(profile.k(i));
        let kj = BigInt::from(profile.k(i + 1));
        let left = Pow::pow(&kj, i as u32) * Pow::pow(binom(i), (i + 1) as u32);
        let right = Pow::pow(&ki, (i + 1) as u32) * Pow::pow(binom(i + 1), i as u32);
        if left > right {
            violated_at.get_or_insert(i);
        }
        if left != right {
            all_equal = false;
        }
    }
    let status = if violated_at.is_some() {
        Status::Violated
    } else if r >= 2 && all_equal {
        characterized(Status::Equality, is_turan(g, r) && g.n() % r == 0)
    } else {
        Status::Holds
    };
    let mut report = BoundReport::new(id, g, status, terms[r - 1], terms[0]).witness(json!({ "terms": terms }));
    if let Some(i) = violated_at {
        report = report.note(format!("link {} > {} fails", i + 1, i));
    }
    report
}

/// For `δ(G) ≥ n − ⌈n/r⌉ + 1`: every `r` vertices have at least
/// `Σ|N(u_i)| − (r−1)n ≥ 1` common neighbours, and `G` contains `K_{r+1}`.
fn neighborhood_intersection(g: &Graph, r: usize) -> BoundReport {
    const MAX_SUBSETS: u128 = 1_000_000;
    let id = BoundId::NeighborhoodIntersection;
    let n = g.n();
    if r > n {
        return BoundReport::indeterminate(id, g, "hypothesis fails: fewer than r vertices");
    }
    let need = n - n.div_ceil(r) + 1;
    if g.min_degree() < need {
        return BoundReport::indeterminate(
            id,
            g,
            format!("hypothesis fails: min degree {} < {need}", g.min_degree()),
        );
    }
    let subsets = (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128);
    if subsets > MAX_SUBSETS {
        return BoundReport::indeterminate(id, g, format!("{subsets} vertex subsets exceed the enumeration cap"));
    }
    let mut min_common = usize::MAX;
    let mut min_bound = i64::MAX;
    let mut bad: Option<Vec<usize>> = None;
    let mut pick: Vec<usize> = (0..r).collect();
    loop {
        let common = (0..n).filter(|&w| pick.iter().all(|&u| g.has_edge(u, w))).count();
        let bound = pick.iter().map(|&u| g.degree(u) as i64).sum::<i64>() - (r as i64 - 1) * n as i64;
        min_common = min_common.min(common);
        min_bound = min_bound.min(bound);
        if (common as i64) < bound || bound < 1 {
            bad.get_or_insert_with(|| pick.clone());
        }
        // next r-subset in lexicographic order
        let Some(i) = (0..r).rev().find(|&i| pick[i] < n - r + i) else {
            break;
        };
        pick[i] += 1;
        for j in (i + 1)..r {
            pick[j] = pick[j - 1] + 1;
        }
    }
    let clique = has_clique(g, r + 1);
    let status = if bad.is_none() && clique {
        Status::Holds
    } else {
        Status::Violated
    };
    BoundReport::new(id, g, status, min_common, Quantity::Int(min_bound)).witness(json!({
        "contains_clique": clique,
        "failing_vertices": bad,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::FamilySpec;

    fn build(spec: FamilySpec) -> Graph {
        spec.construct().unwrap()
    }

    fn status(id: BoundId, g: &Graph, r: Option<usize>) -> Status {
        let params = BoundParams {
            r,
            ..Default::default()
        };
        check(id, g, &params).unwrap().status
    }

    #[test]
    fn spec_examples() {
        let c5 = build(FamilySpec::Cycle(5));
        let r = check(BoundId::TuranEdges, &c5, &BoundParams::with_r(2)).unwrap();
        assert_eq!(r.status, Status::Holds);
        assert_eq!((r.lhs, r.rhs), (Some(Quantity::Int(5)), Some(Quantity::Int(6))));
        let k22 = build(FamilySpec::Turan { r: 2, n: 4 });
        assert_eq!(status(BoundId::NikiforovCliqueBound, &k22, None), Status::Equality);
        let t38 = build(FamilySpec::Turan { r: 3, n: 8 });
        let d = check(BoundId::DegreeTuran, &t38, &BoundParams::with_r(3)).unwrap();
        assert_eq!(d.status, Status::Equality);
        assert_eq!(d.lhs, Some(Quantity::Int(5)));
        assert_eq!(status(BoundId::QVsLambda, &c5, None), Status::Equality);
        let params = BoundParams {
            r: Some(2),
            t: Some(1),
            ..Default::default()
        };
        for g in crate::combinatorics::enumerate_free(5, &build(FamilySpec::Complete(3))).unwrap() {
            if g.m() >= 5 {
                assert_eq!(
                    check(BoundId::FurediDr, &g, &params).unwrap().status,
                    Status::Holds,
                    "{g}"
                );
            }
        }
    }

    #[test]
    fn c5_registry_has_no_violation() {
        let c5 = build(FamilySpec::Cycle(5));
        for rep in check_all(&c5, &BoundParams::with_r(2)).unwrap() {
            assert!(
                matches!(rep.status, Status::Holds | Status::Equality | Status::Indeterminate),
                "{}",
                rep.to_json_line()
            );
        }
    }

    #[test]
    fn hypothesis_failure_is_indeterminate() {
        let k4 = build(FamilySpec::Complete(4));
        let rep = check(BoundId::TuranEdges, &k4, &BoundParams::with_r(2)).unwrap();
        assert_eq!(rep.status, Status::Indeterminate);
        assert!(rep.note.unwrap().contains("K_3"));
        assert!(matches!(
            check(BoundId::TuranEdges, &k4, &BoundParams::default()),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn equality_requires_the_characterisation() {
        // C_4 plus an isolated vertex is not complete regular multipartite
        // with ω ≥ 3 but is complete bipartite plus an isolated vertex
        let g = build(FamilySpec::DisjointUnion(
            build(FamilySpec::Cycle(4)),
            Graph::empty(1).unwrap(),
        ));
        assert_eq!(status(BoundId::NikiforovCliqueBound, &g, None), Status::Equality);
        let t = build(FamilySpec::Turan { r: 3, n: 6 });
        assert_eq!(status(BoundId::CliqueChain, &t, Some(3)), Status::Equality);
        assert_eq!(
            status(BoundId::CliqueChain, &build(FamilySpec::Cycle(5)), Some(2)),
            Status::Holds
        );
        assert_eq!(status(BoundId::EdgeFromSpectralChain, &t, Some(3)), Status::Equality);
    }

    #[test]
    fn report_lines_have_stable_key_order() {
        let c5 = build(FamilySpec::Cycle(5));
        let line = check(BoundId::TuranEdges, &c5, &BoundParams::with_r(2))
            .unwrap()
            .to_json_line();
        assert_eq!(
            line,
            r#"{"bound_id":"TuranEdges","graph6":"Dhc","status":"Holds","lhs":5,"rhs":6}"#
        );
    }

    #[test]
    fn ids_parse_loosely() {
        assert_eq!("turan-edges".parse::<BoundId>().unwrap(), BoundId::TuranEdges);
        assert_eq!("KNEdgeBound".parse::<BoundId>().unwrap(), BoundId::KNEdgeBound);
        assert!("nope".parse::<BoundId>().is_err());
    }
}
