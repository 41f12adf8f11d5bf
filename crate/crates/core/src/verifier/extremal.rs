//! Exhaustive extremal searches over F-free isomorphism classes, and the
//! stability profile of a scanned family.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::bounds::{Quantity, FLOAT_TOL, OPTIMIZER_TOL};
use super::structure::{complete_multipartite_forms, turan};
use crate::combinatorics::{
    canonical_form, clique_profile, contains_subgraph, enumerate_corpus, enumerate_free, Containment,
};
use crate::graph::emit_graph6;
use crate::partition::{edit_distance_to_turan_seeded, exact_feasible, min_edges_to_r_partite_seeded, Mode};
use crate::pspectral::{p_spectral_radius, PSpectralConfig, PValue};
use crate::spectral::{lambda, spectral_radius, MatrixKind};
use crate::{Error, FamilySpec, Graph, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Objective {
    Edges,
    Lambda,
    Q,
    /// Minimum degree.
    Delta,
    Ks(usize),
    LambdaP(PValue),
    AAlpha(f64),
}

impl Objective {
    fn integral(self) -> bool {
        matches!(self, Objective::Edges | Objective::Delta | Objective::Ks(_))
    }

    /// Tie tolerance between two classes.
    fn tolerance(self) -> f64 {
        match self {
            Objective::LambdaP(p) if p != PValue::Finite(2.0) => OPTIMIZER_TOL,
            _ => FLOAT_TOL,
        }
    }

    pub fn evaluate(self, g: &Graph, config: &PSpectralConfig) -> Result<Quantity> {
        Ok(match self {
            Objective::Edges => g.m().into(),
            Objective::Delta => g.min_degree().into(),
            Objective::Ks(s) => Quantity::count(clique_profile(g, s).k(s)),
            Objective::Lambda => lambda(g).into(),
            Objective::Q => spectral_radius(g, MatrixKind::SignlessLaplacian)?.into(),
            Objective::AAlpha(a) => spectral_radius(g, MatrixKind::AAlpha(a))?.into(),
            Objective::LambdaP(p) => p_spectral_radius(g, p, config)?.value.into(),
        })
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Objective::Edges => f.write_str("edges"),
            Objective::Lambda => f.write_str("lambda"),
            Objective::Q => f.write_str("q"),
            Objective::Delta => f.write_str("delta"),
            Objective::Ks(s) => write!(f, "ks={s}"),
            Objective::LambdaP(p) => write!(f, "lp={p}"),
            Objective::AAlpha(a) => write!(f, "aalpha={a}"),
        }
    }
}

impl Serialize for Objective {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Usage(format!("unknown objective {s:?}"));
        let (head, arg) = match s.split_once('=') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        Ok(match (head.to_ascii_lowercase().as_str(), arg) {
            ("edges", None) => Objective::Edges,
            ("lambda", None) => Objective::Lambda,
            ("q", None) => Objective::Q,
            ("delta", None) => Objective::Delta,
            ("ks", Some(a)) => Objective::Ks(a.parse().map_err(|_| bad())?),
            ("lp", Some(a)) => Objective::LambdaP(a.parse()?),
            ("aalpha", Some(a)) => {
                let alpha: f64 = a.parse().map_err(|_| bad())?;
                if !(0.0..=1.0).contains(&alpha) {
                    return Err(Error::Usage(format!("alpha must lie in [0, 1], got {alpha}")));
                }
                Objective::AAlpha(alpha)
            }
            _ => return Err(bad()),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalRecord {
    pub n: usize,
    pub objective: Objective,
    /// graph6 of the forbidden graph.
    pub forbidden: String,
    pub best_value: Quantity,
    /// Canonical graph6 of every class attaining the best value, sorted.
    pub extremal_classes: Vec<String>,
    pub unique: bool,
    pub classes_scanned: usize,
}

impl ExtremalRecord {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serialises")
    }
}

/// Every `forbidden`-free class on `n` vertices, from the internal catalog
/// or from a graph6 corpus.
pub fn free_classes(n: usize, forbidden: &Graph, corpus: Option<&Path>) -> Result<Vec<Graph>> {
    let Some(path) = corpus else {
        return enumerate_free(n, forbidden);
    };
    let all = enumerate_corpus(path, n, |_| true)?;
    let verdicts: Vec<Result<bool>> = all
        .par_iter()
        .map(|g| match contains_subgraph(g, forbidden)? {
            Containment::Free => Ok(true),
            Containment::Found(_) => Ok(false),
            Containment::Indeterminate { nodes } => Err(Error::Capacity(format!(
                "containment of {} in {} undecided after {nodes} nodes",
                emit_graph6(forbidden),
                emit_graph6(g)
            ))),
        })
        .collect();
    let mut out = Vec::new();
    for (g, keep) in all.into_iter().zip(verdicts) {
        if keep? {
            out.push(g);
        }
    }
    Ok(out)
}

pub fn extremal_search(
    n: usize,
    forbidden: &Graph,
    objective: Objective,
    corpus: Option<&Path>,
    config: &PSpectralConfig,
) -> Result<ExtremalRecord> {
    let classes = free_classes(n, forbidden, corpus)?;
    extremal_over(n, forbidden, &classes, objective, config)
}

fn extremal_over(
    n: usize,
    forbidden: &Graph,
    classes: &[Graph],
    objective: Objective,
    config: &PSpectralConfig,
) -> Result<ExtremalRecord> {
    if classes.is_empty() {
        return Err(Error::Domain(format!(
            "no {}-free graph on {n} vertices",
            emit_graph6(forbidden)
        )));
    }
    let values = classes
        .par_iter()
        .map(|g| objective.evaluate(g, config))
        .collect::<Result<Vec<_>>>()?;
    let (best, mut winners) = if objective.integral() {
        let key = |q: &Quantity| match q {
            Quantity::Int(x) => *x as i128,
            Quantity::Exact(s) => s.parse().expect("integral objective"),
            Quantity::Real(_) => unreachable!("integral objective"),
        };
        let top = values.iter().map(key).max().expect("nonempty");
        let idx = (0..classes.len())
            .find(|&i| key(&values[i]) == top)
            .expect("max attained");
        let winners: Vec<&Graph> = (0..classes.len())
            .filter(|&i| key(&values[i]) == top)
            .map(|i| &classes[i])
            .collect();
        (values[idx].clone(), winners)
    } else {
        let top = values.iter().map(Quantity::as_f64).fold(f64::NEG_INFINITY, f64::max);
        let tol = objective.tolerance() * top.abs().max(1.0);
        let winners: Vec<&Graph> = (0..classes.len())
            .filter(|&i| top - values[i].as_f64() <= tol)
            .map(|i| &classes[i])
            .collect();
        (Quantity::Real(top), winners)
    };
    winners.dedup();
    let mut extremal_classes: Vec<String> = winners.iter().map(|g| canonical_form(g).as_str().to_owned()).collect();
    extremal_classes.sort();
    extremal_classes.dedup();
    Ok(ExtremalRecord {
        n,
        objective,
        forbidden: emit_graph6(forbidden),
        best_value: best,
        unique: extremal_classes.len() == 1,
        extremal_classes,
        classes_scanned: classes.len(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeficitKind {
    /// `e(T_r(n)) − e(G)`.
    Edges,
    /// `λ(T_r(n)) − λ(G)`.
    Lambda,
    /// `k_s(T_r(n)) − k_s(G)`.
    Ks(usize),
}

impl FromStr for DeficitKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "edges" => Ok(DeficitKind::Edges),
            "lambda" => Ok(DeficitKind::Lambda),
            t => t
                .strip_prefix("ks=")
                .and_then(|a| a.parse().ok())
                .map(DeficitKind::Ks)
                .ok_or_else(|| Error::Usage(format!("unknown deficit kind {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StabilityPoint {
    pub graph6: String,
    pub deficit: Quantity,
    /// Edit distance to `T_r(n)`.
    pub edit_distance: usize,
    /// Fewest deletions leaving an `r`-partite graph.
    pub dr_value: usize,
    /// Both partition values are exact (otherwise heuristic upper bounds).
    pub exact: bool,
}

impl StabilityPoint {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("point serialises")
    }
}

/// One point per `forbidden`-free class, sorted by deficit then graph6.
pub fn stability_scan(
    n: usize,
    forbidden: &Graph,
    r: usize,
    kind: DeficitKind,
    corpus: Option<&Path>,
    seed: u64,
) -> Result<Vec<StabilityPoint>> {
    if r < 2 || r > n {
        return Err(Error::Domain(format!(
            "stability scan needs 2 <= r <= n, got r = {r}, n = {n}"
        )));
    }
    let classes = free_classes(n, forbidden, corpus)?;
    let t = turan(r, n);
    let mode = if exact_feasible(n, r) {
        Mode::Exact
    } else {
        Mode::Heuristic
    };
    let (t_lambda, t_ks) = (lambda(&t), kind_ks(kind).map(|s| clique_profile(&t, s).k(s)));
    let mut points = classes
        .par_iter()
        .map(|g| {
            let deficit = match kind {
                DeficitKind::Edges => Quantity::Int(t.m() as i64 - g.m() as i64),
                DeficitKind::Lambda => {
                    let d = t_lambda - lambda(g);
                    Quantity::Real(if d.abs() <= FLOAT_TOL { 0.0 } else { d })
                }
                DeficitKind::Ks(s) => {
                    let (a, b) = (t_ks.expect("ks kind"), clique_profile(g, s).k(s));
                    if a >= b {
                        Quantity::count(a - b)
                    } else {
                        Quantity::Exact(format!("-{}", b - a))
                    }
                }
            };
            let edit = edit_distance_to_turan_seeded(g, r, mode, seed)?;
            let dr = min_edges_to_r_partite_seeded(g, r, mode, seed)?;
            Ok(StabilityPoint {
                graph6: emit_graph6(g),
                deficit,
                edit_distance: edit.value,
                dr_value: dr.value,
                exact: mode == Mode::Exact,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    points.sort_by(|a, b| {
        a.deficit
            .as_f64()
            .total_cmp(&b.deficit.as_f64())
            .then_with(|| a.graph6.cmp(&b.graph6))
    });
    Ok(points)
}

fn kind_ks(kind: DeficitKind) -> Option<usize> {
    match kind {
        DeficitKind::Ks(s) => Some(s),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlphaRecord {
    pub alpha: f64,
    pub record: ExtremalRecord,
    /// Classes predicted by the trichotomy around `α = 1 − 1/r`.
    pub expected: Vec<String>,
    pub matches: bool,
}

/// `λ(A_α)` maximisers among `K_{r+1}`-free classes, for each `α`: `T_r(n)`
/// below `1 − 1/r`, every complete `r`-partite graph at it, `S_{n,r−1}` above.
pub fn a_alpha_extremal_search(n: usize, r: usize, alphas: &[f64], corpus: Option<&Path>) -> Result<Vec<AlphaRecord>> {
    if r < 2 || r > n {
        return Err(Error::Domain(format!("need 2 <= r <= n, got r = {r}, n = {n}")));
    }
    let forbidden = FamilySpec::Complete(r + 1).construct()?;
    let classes = free_classes(n, &forbidden, corpus)?;
    let threshold = 1.0 - 1.0 / r as f64;
    let config = PSpectralConfig::default();
    alphas
        .iter()
        .map(|&alpha| {
            let record = extremal_over(n, &forbidden, &classes, Objective::AAlpha(alpha), &config)?;
            let expected: Vec<String> = if (alpha - threshold).abs() <= 1e-12 {
                complete_multipartite_forms(n, r)
                    .iter()
                    .map(|f| f.as_str().to_owned())
                    .collect()
            } else {
                let g = if alpha < threshold {
                    turan(r, n)
                } else {
                    FamilySpec::Split { n, k: r - 1 }.construct()?
                };
                vec![canonical_form(&g).as_str().to_owned()]
            };
            let mut expected = expected;
            expected.sort();
            let matches = expected == record.extremal_classes;
            Ok(AlphaRecord {
                alpha,
                record,
                expected,
                matches,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(spec: FamilySpec) -> Graph {
        spec.construct().unwrap()
    }

    fn canon(spec: FamilySpec) -> String {
        canonical_form(&build(spec)).as_str().to_owned()
    }

    #[test]
    fn spec_examples() {
        let cfg = PSpectralConfig::default();
        let k3 = build(FamilySpec::Complete(3));
        let rec = extremal_search(5, &k3, Objective::Edges, None, &cfg).unwrap();
        assert_eq!(rec.best_value, Quantity::Int(6));
        assert!(rec.unique);
        assert_eq!(rec.extremal_classes, vec![canon(FamilySpec::Turan { r: 2, n: 5 })]);

        let rec = extremal_search(5, &k3, Objective::Q, None, &cfg).unwrap();
        let mut want = vec![
            canon(FamilySpec::CompleteMultipartite(vec![1, 4])),
            canon(FamilySpec::CompleteMultipartite(vec![2, 3])),
        ];
        want.sort();
        assert_eq!(rec.extremal_classes, want);
        assert!(!rec.unique);

        let k4 = build(FamilySpec::Complete(4));
        let rec = extremal_search(6, &k4, Objective::Ks(3), None, &cfg).unwrap();
        assert_eq!(rec.best_value, Quantity::Int(8));
        assert_eq!(rec.extremal_classes, vec![canon(FamilySpec::Turan { r: 3, n: 6 })]);
    }

    #[test]
    fn stability_examples() {
        let k3 = build(FamilySpec::Complete(3));
        let pts = stability_scan(6, &k3, 2, DeficitKind::Edges, None, 0).unwrap();
        let t = emit_graph6(&canonical_graph(&build(FamilySpec::Turan { r: 2, n: 6 })));
        let p = pts.iter().find(|p| p.graph6 == t).unwrap();
        assert_eq!((p.deficit.clone(), p.edit_distance), (Quantity::Int(0), 0));

        let pts = stability_scan(5, &k3, 2, DeficitKind::Edges, None, 0).unwrap();
        let c5 = emit_graph6(&canonical_graph(&build(FamilySpec::Cycle(5))));
        let p = pts.iter().find(|p| p.graph6 == c5).unwrap();
        assert_eq!(
            (p.deficit.clone(), p.edit_distance, p.dr_value),
            (Quantity::Int(1), 3, 1)
        );
        assert!(pts.windows(2).all(|w| w[0].deficit.as_f64() <= w[1].deficit.as_f64()));

        let pts = stability_scan(6, &k3, 2, DeficitKind::Lambda, None, 0).unwrap();
        let p = pts.iter().find(|p| p.graph6 == t).unwrap();
        assert_eq!(p.deficit, Quantity::Real(0.0));
    }

    fn canonical_graph(g: &Graph) -> Graph {
        crate::combinatorics::canon::canonical_graph(g).0
    }

    #[test]
    fn alpha_trichotomy_examples() {
        let recs = a_alpha_extremal_search(6, 2, &[0.0, 0.5, 0.75], None).unwrap();
        assert!(recs.iter().all(|r| r.matches), "{recs:#?}");
        assert!(recs[0].record.unique);
        assert_eq!(recs[1].record.extremal_classes.len(), 3);
        assert_eq!(
            recs[2].record.extremal_classes,
            vec![canon(FamilySpec::CompleteMultipartite(vec![1, 5]))]
        );
    }

    #[test]
    fn objectives_parse() {
        assert_eq!("ks=3".parse::<Objective>().unwrap(), Objective::Ks(3));
        assert_eq!(
            "lp=inf".parse::<Objective>().unwrap(),
            Objective::LambdaP(PValue::Infinity)
        );
        assert_eq!("LAMBDA".parse::<Objective>().unwrap(), Objective::Lambda);
        assert!("aalpha=2".parse::<Objective>().is_err());
        assert!("volume".parse::<Objective>().is_err());
    }
}
