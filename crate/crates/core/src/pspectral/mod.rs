//! The p-spectral radius `λ^(p)(G) = max 2·Σ_{ij∈E} x_i x_j` over
//! nonnegative `x` with `‖x‖_p = 1`.
//!
//! `p = ∞` and `p = 1` have exact values (`2m` and `1 − 1/ω`). For other `p`
//! a nonlinear power iteration is run from several seeds and the best value
//! is kept; the objective is never allowed to decrease between iterates.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::combinatorics::{clique_number, max_clique};
use crate::{Error, Graph, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PValue {
    Finite(f64),
    Infinity,
}

impl PValue {
    pub fn new(p: f64) -> Result<Self> {
        if p.is_infinite() && p > 0.0 {
            Ok(PValue::Infinity)
        } else if p.is_finite() && p >= 1.0 {
            Ok(PValue::Finite(p))
        } else {
            Err(Error::Domain(format!("p must be >= 1 or infinite, got {p}")))
        }
    }

    /// `1/p`, zero at infinity.
    pub fn reciprocal(self) -> f64 {
        match self {
            PValue::Finite(p) => 1.0 / p,
            PValue::Infinity => 0.0,
        }
    }
}

impl fmt::Display for PValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PValue::Finite(p) => write!(f, "{p}"),
            PValue::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for PValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(PValue::Infinity),
            t => {
                let p: f64 = t.parse().map_err(|_| Error::Usage(format!("invalid p value {t:?}")))?;
                PValue::new(p)
            }
        }
    }
}

impl Serialize for PValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            PValue::Finite(p) => s.serialize_f64(*p),
            PValue::Infinity => s.serialize_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Certification {
    ExactClosedForm,
    /// Stationary point of an iteration whose limit is the global maximum for `p ≥ 2`.
    GlobalByConvergenceTheory,
    /// Best of several local searches; a lower bound only.
    MultiStartBestEffort,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PSpectralConfig {
    /// Random Dirichlet seeds on top of the deterministic ones.
    pub restarts: usize,
    pub max_iters: usize,
    /// Objective gain below which 50 consecutive iterations count as a stall.
    pub tol: f64,
    pub seed: u64,
}

impl Default for PSpectralConfig {
    fn default() -> Self {
        PSpectralConfig {
            restarts: 8,
            max_iters: 100_000,
            tol: 1e-12,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PSpectralResult {
    pub p: PValue,
    pub value: f64,
    /// Nonnegative, unit p-norm.
    pub witness: Vec<f64>,
    /// `max |(Ax)_i − value·x_i^{p−1}|` over the support of the witness.
    pub kkt_residual: f64,
    pub certified: Certification,
    /// False when the best run hit `max_iters` before stalling.
    pub converged: bool,
}

/// `2·Σ_{ij∈E} x_i x_j`.
pub fn objective(g: &Graph, x: &[f64]) -> f64 {
    2.0 * g.edges().map(|(u, v)| x[u] * x[v]).sum::<f64>()
}

/// `1 − 1/ω(g)`, or 0 for an edgeless graph.
pub fn lagrangian(g: &Graph) -> Rational64 {
    if g.m() == 0 {
        return Rational64::from_integer(0);
    }
    let w = clique_number(g) as i64;
    Rational64::new(w - 1, w)
}

pub fn p_spectral_radius(g: &Graph, p: PValue, config: &PSpectralConfig) -> Result<PSpectralResult> {
    let n = g.n();
    if g.m() == 0 {
        let mut witness = vec![0.0; n];
        witness[0] = 1.0;
        return Ok(exact(p, 0.0, witness));
    }
    match p {
        PValue::Infinity => Ok(exact(p, 2.0 * g.m() as f64, vec![1.0; n])),
        PValue::Finite(1.0) => {
            let clique = max_clique(g);
            let mut witness = vec![0.0; n];
            for &v in &clique {
                witness[v] = 1.0 / clique.len() as f64;
            }
            let l = lagrangian(g);
            let value = *l.numer() as f64 / *l.denom() as f64;
            Ok(exact(p, value, witness))
        }
        PValue::Finite(q) if q > 1.0 => {
            let best = seeds(g, q, config)
                .into_par_iter()
                .map(|x| power_iteration(g, q, x, config))
                .reduce_with(|a, b| if b.value > a.value { b } else { a })
                .expect("at least one seed");
            let kkt_residual = kkt_residual(g, q, &best.x, best.value);
            Ok(PSpectralResult {
                p,
                value: best.value,
                witness: best.x,
                kkt_residual,
                certified: if q >= 2.0 {
                    Certification::GlobalByConvergenceTheory
                } else {
                    Certification::MultiStartBestEffort
                },
                converged: best.converged,
            })
        }
        PValue::Finite(q) => Err(Error::Domain(format!("p must be >= 1, got {q}"))),
    }
}

fn exact(p: PValue, value: f64, witness: Vec<f64>) -> PSpectralResult {
    PSpectralResult {
        p,
        value,
        witness,
        kkt_residual: 0.0,
        certified: Certification::ExactClosedForm,
        converged: true,
    }
}

fn p_normalize(x: &mut [f64], p: f64) {
    let norm = x.iter().map(|v| v.powf(p)).sum::<f64>().powf(1.0 / p);
    x.iter_mut().for_each(|v| *v /= norm);
}

/// Uniform, degree-weighted, each smoothed vertex indicator, then
/// `config.restarts` Dirichlet(1, …, 1) draws.
fn seeds(g: &Graph, p: f64, config: &PSpectralConfig) -> Vec<Vec<f64>> {
    const SMOOTHING: f64 = 1e-3;
    let n = g.n();
    let mut out = vec![vec![1.0; n], (0..n).map(|v| g.degree(v) as f64 + SMOOTHING).collect()];
    for v in 0..n {
        let mut x = vec![SMOOTHING; n];
        x[v] = 1.0;
        out.push(x);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.restarts {
        out.push((0..n).map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect());
    }
    for x in &mut out {
        p_normalize(x, p);
    }
    out
}

struct Run {
    value: f64,
    x: Vec<f64>,
    converged: bool,
}

fn adjacency_times(g: &Graph, x: &[f64]) -> Vec<f64> {
    (0..g.n()).map(|v| g.neighbors(v).map(|u| x[u]).sum()).collect()
}

/// `x ← normalize_p((Ax + x^{p−1})^{1/(p−1)})`. Fixed points satisfy the
/// stationarity condition; a step that lowers the objective is halved
/// toward the current iterate until it does not.
fn power_iteration(g: &Graph, p: f64, mut x: Vec<f64>, config: &PSpectralConfig) -> Run {
    const STALL_WINDOW: usize = 50;
    let mut value = objective(g, &x);
    let mut history = std::collections::VecDeque::with_capacity(STALL_WINDOW + 1);
    history.push_back(value);
    for _ in 0..config.max_iters {
        let ax = adjacency_times(g, &x);
        let mut next: Vec<f64> = ax
            .iter()
            .zip(&x)
            .map(|(a, v)| (a + v.powf(p - 1.0)).powf(1.0 / (p - 1.0)))
            .collect();
        p_normalize(&mut next, p);
        let mut next_value = objective(g, &next);
        let mut t = 1.0;
        while next_value < value && t > 1e-6 {
            t /= 2.0;
            next = x.iter().zip(&next).map(|(a, b)| a + t * (b - a)).collect();
            p_normalize(&mut next, p);
            next_value = objective(g, &next);
        }
        if next_value < value {
            break;
        }
        x = next;
        value = next_value;
        history.push_back(value);
        if history.len() > STALL_WINDOW {
            let old = history.pop_front().expect("window");
            if value - old < config.tol {
                return Run {
                    value,
                    x,
                    converged: true,
                };
            }
        }
    }
    let converged = history.len() >= 2 && {
        let old = history.front().copied().unwrap_or(value);
        value - old < config.tol
    };
    Run { value, x, converged }
}

fn kkt_residual(g: &Graph, p: f64, x: &[f64], value: f64) -> f64 {
    let top = x.iter().copied().fold(0.0, f64::max);
    let ax = adjacency_times(g, x);
    x.iter()
        .zip(&ax)
        .filter(|(v, _)| **v > 1e-6 * top)
        .map(|(v, a)| (a - value * v.powf(p - 1.0)).abs())
        .fold(0.0, f64::max)
}

/// Maximises `2·Σ x_i x_j` on the simplex by replicator dynamics
/// `x_i ← x_i (Ax)_i / xᵀAx` from the same seeds as the p-iteration; an
/// optimiser-side estimate of `λ^(1)` to compare with [`lagrangian`].
pub fn lagrangian_by_replicator(g: &Graph, config: &PSpectralConfig) -> (f64, Vec<f64>) {
    if g.m() == 0 {
        let mut x = vec![0.0; g.n()];
        x[0] = 1.0;
        return (0.0, x);
    }
    seeds(g, 1.0, config)
        .into_par_iter()
        .map(|mut x| {
            let mut value = objective(g, &x);
            let mut stall = 0;
            for _ in 0..config.max_iters {
                let ax = adjacency_times(g, &x);
                let f: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
                if f <= 0.0 {
                    break;
                }
                x = x.iter().zip(&ax).map(|(a, b)| a * b / f).collect();
                let next = objective(g, &x);
                stall = if next - value < config.tol { stall + 1 } else { 0 };
                value = next;
                if stall >= 50 {
                    break;
                }
            }
            (value, x)
        })
        .reduce_with(|a, b| if b.0 > a.0 { b } else { a })
        .expect("at least one seed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::lambda;
    use crate::FamilySpec;

    fn build(spec: FamilySpec) -> Graph {
        spec.construct().unwrap()
    }

    fn radius(g: &Graph, p: f64) -> PSpectralResult {
        p_spectral_radius(g, PValue::new(p).unwrap(), &PSpectralConfig::default()).unwrap()
    }

    #[test]
    fn spec_examples() {
        let k2 = build(FamilySpec::Complete(2));
        for p in [1.0, 1.5, 2.0, 3.0, 7.0] {
            let want = 2f64.powf(1.0 - 2.0 / p);
            assert!((radius(&k2, p).value - want).abs() < 1e-9, "p={p}");
        }
        let c5 = build(FamilySpec::Cycle(5));
        assert_eq!(radius(&c5, 1.0).value, 0.5);
        let k3 = build(FamilySpec::Complete(3));
        let r = radius(&k3, 3.0);
        assert!((r.value - 6.0 * 3f64.powf(-2.0 / 3.0)).abs() < 1e-9);
        assert_eq!(r.certified, Certification::GlobalByConvergenceTheory);
        let inf = p_spectral_radius(&c5, PValue::Infinity, &PSpectralConfig::default()).unwrap();
        assert_eq!(inf.value, 10.0);
        assert_eq!(inf.certified, Certification::ExactClosedForm);
        assert!(PValue::new(0.5).is_err());
        assert_eq!("inf".parse::<PValue>().unwrap(), PValue::Infinity);
    }

    #[test]
    fn lagrangian_values() {
        assert_eq!(lagrangian(&build(FamilySpec::Complete(4))), Rational64::new(3, 4));
        assert_eq!(lagrangian(&build(FamilySpec::Cycle(5))), Rational64::new(1, 2));
        assert_eq!(lagrangian(&Graph::empty(5).unwrap()), Rational64::from_integer(0));
    }

    #[test]
    fn k3_grid_oracle() {
        // dense grid over the positive octant of the 3-norm sphere
        let k3 = build(FamilySpec::Complete(3));
        let steps = 400;
        let mut best: f64 = 0.0;
        for i in 0..=steps {
            for j in 0..=(steps - i) {
                let (a, b) = (i as f64 / steps as f64, j as f64 / steps as f64);
                let c = 1.0 - a - b;
                // (a, b, c) on the simplex mapped to the 3-sphere
                let x = [a.cbrt(), b.cbrt(), c.max(0.0).cbrt()];
                best = best.max(objective(&k3, &x));
            }
        }
        let v = radius(&k3, 3.0).value;
        assert!(v >= best - 1e-12 && v - best < 1e-3);
    }

    #[test]
    fn p2_matches_eigensolver() {
        for g in [
            build(FamilySpec::Cycle(6)),
            build(FamilySpec::Wheel(7)),
            build(FamilySpec::Turan { r: 2, n: 7 }),
            build(FamilySpec::Friendship(7)),
            build(FamilySpec::DisjointUnion(
                build(FamilySpec::Complete(3)),
                build(FamilySpec::Cycle(4)),
            )),
        ] {
            let r = radius(&g, 2.0);
            assert!(
                (r.value - lambda(&g)).abs() < 1e-8,
                "{g}: {} vs {}",
                r.value,
                lambda(&g)
            );
            assert!(r.kkt_residual < 1e-6);
            assert!(r.converged);
            let norm: f64 = r.witness.iter().map(|v| v * v).sum();
            assert!((norm - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn replicator_finds_the_clique_number() {
        for g in [
            build(FamilySpec::Wheel(6)),
            build(FamilySpec::Book(3)),
            build(FamilySpec::Split { n: 9, k: 4 }),
            build(FamilySpec::Cycle(7)),
        ] {
            let (v, x) = lagrangian_by_replicator(&g, &PSpectralConfig::default());
            let l = lagrangian(&g);
            assert!((v - *l.numer() as f64 / *l.denom() as f64).abs() < 1e-6, "{g}");
            assert!((x.iter().sum::<f64>() - 1.0).abs() < 1e-9);
        }
    }
}
