//! Spectra of the adjacency matrix `A`, the signless Laplacian `Q = D + A`
//! and `A_α = αD + (1 − α)A`.

mod eigen;
pub mod exact;

use serde::Serialize;

pub use eigen::{symmetric_eigenvalues, JACOBI_MAX_ORDER};
pub use exact::{floor_half_n_radius, radius_at_least, ExactFloor};

use crate::{Error, Graph, Result};

/// Largest order accepted by the dense solvers.
pub const MAX_SPECTRUM_ORDER: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum MatrixKind {
    Adjacency,
    SignlessLaplacian,
    AAlpha(f64),
}

impl MatrixKind {
    fn check(self) -> Result<()> {
        match self {
            MatrixKind::AAlpha(a) if !(0.0..=1.0).contains(&a) => {
                Err(Error::Domain(format!("alpha must lie in [0, 1], got {a}")))
            }
            _ => Ok(()),
        }
    }

    /// Dense row-major matrix of this kind for `g`.
    pub fn matrix(self, g: &Graph) -> Result<Vec<f64>> {
        self.check()?;
        let n = g.n();
        let (diag, off) = match self {
            MatrixKind::Adjacency => (0.0, 1.0),
            MatrixKind::SignlessLaplacian => (1.0, 1.0),
            MatrixKind::AAlpha(a) => (a, 1.0 - a),
        };
        let mut m = vec![0.0; n * n];
        for (u, v) in g.edges() {
            m[u * n + v] = off;
            m[v * n + u] = off;
        }
        if diag != 0.0 {
            for v in 0..n {
                m[v * n + v] = diag * g.degree(v) as f64;
            }
        }
        Ok(m)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumResult {
    /// Descending.
    pub eigenvalues: Vec<f64>,
    pub radius: f64,
    /// Nonnegative unit eigenvector for the radius; `None` when disconnected.
    pub perron_vector: Option<Vec<f64>>,
    /// `max_i |(Mx)_i − radius·x_i|` for the computed top eigenvector.
    pub residual: f64,
    /// Radius of each connected component, in component order.
    pub component_radii: Vec<f64>,
}

fn check_order(g: &Graph) -> Result<()> {
    if g.n() > MAX_SPECTRUM_ORDER {
        return Err(Error::Capacity(format!(
            "dense spectrum limited to n <= {MAX_SPECTRUM_ORDER}, got {}",
            g.n()
        )));
    }
    Ok(())
}

/// Largest eigenvalue only; cheaper than [`spectrum`].
pub fn spectral_radius(g: &Graph, kind: MatrixKind) -> Result<f64> {
    check_order(g)?;
    let m = kind.matrix(g)?;
    Ok(symmetric_eigenvalues(m, g.n())[0])
}

/// Adjacency spectral radius `λ(g)`.
pub fn lambda(g: &Graph) -> f64 {
    spectral_radius(g, MatrixKind::Adjacency).expect("adjacency spectrum")
}

/// Signless Laplacian spectral radius `q(g)`.
pub fn q(g: &Graph) -> f64 {
    spectral_radius(g, MatrixKind::SignlessLaplacian).expect("signless Laplacian spectrum")
}

pub fn spectrum(g: &Graph, kind: MatrixKind) -> Result<SpectrumResult> {
    check_order(g)?;
    let n = g.n();
    let m = kind.matrix(g)?;
    let eigenvalues = symmetric_eigenvalues(m.clone(), n);
    let radius = eigenvalues[0];
    let x = top_eigenvector(&m, n, radius);
    let mx = eigen::mat_vec(&m, n, &x);
    let residual = mx
        .iter()
        .zip(&x)
        .map(|(a, b)| (a - radius * b).abs())
        .fold(0.0, f64::max);
    let components = g.components();
    let (perron_vector, component_radii) = if components.len() == 1 {
        let mut p: Vec<f64> = x.iter().map(|v| v.abs()).collect();
        let norm = p.iter().map(|v| v * v).sum::<f64>().sqrt();
        p.iter_mut().for_each(|v| *v /= norm);
        (Some(p), vec![radius])
    } else {
        let radii = components
            .iter()
            .map(|c| spectral_radius(&g.induced(c).expect("component"), kind))
            .collect::<Result<Vec<_>>>()?;
        (None, radii)
    };
    Ok(SpectrumResult {
        eigenvalues,
        radius,
        perron_vector,
        residual,
        component_radii,
    })
}

/// Inverse iteration with the shift just above `radius`, where `σI − M` is
/// positive definite and Cholesky applies.
fn top_eigenvector(m: &[f64], n: usize, radius: f64) -> Vec<f64> {
    let mut delta = 1e-9 * radius.abs().max(1.0);
    let factor = loop {
        let mut shifted: Vec<f64> = m.iter().map(|v| -v).collect();
        for i in 0..n {
            shifted[i * n + i] += radius + delta;
        }
        if eigen::cholesky(&mut shifted, n) {
            break shifted;
        }
        delta *= 10.0;
    };
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    for _ in 0..4 {
        eigen::cholesky_solve(&factor, n, &mut x);
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        x.iter_mut().for_each(|v| *v /= norm);
    }
    let sum: f64 = x.iter().sum();
    if sum < 0.0 {
        x.iter_mut().for_each(|v| *v = -*v);
    }
    x
}

/// Independent estimate of the radius by power iteration on `M + sI`, with
/// `s` large enough that the top eigenvalue dominates in modulus.
pub fn power_iteration_radius(g: &Graph, kind: MatrixKind, tol: f64, max_iters: usize) -> Result<f64> {
    let n = g.n();
    let m = kind.matrix(g)?;
    let shift = 1.0 + g.max_degree() as f64;
    let mut x: Vec<f64> = (0..n).map(|v| 1.0 + g.degree(v) as f64).collect();
    let mut prev = f64::NAN;
    for _ in 0..max_iters {
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        x.iter_mut().for_each(|v| *v /= norm);
        let mx = eigen::mat_vec(&m, n, &x);
        let rayleigh: f64 = mx.iter().zip(&x).map(|(a, b)| a * b).sum();
        if (rayleigh - prev).abs() <= tol * rayleigh.abs().max(1.0) {
            return Ok(rayleigh);
        }
        prev = rayleigh;
        x = mx.iter().zip(&x).map(|(a, b)| a + shift * b).collect();
    }
    Ok(prev)
}

/// Families with a closed-form signless Laplacian radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum QFamily {
    Friendship(usize),
    Split { n: usize, k: usize },
}

pub fn closed_form_q(family: QFamily) -> Result<f64> {
    match family {
        QFamily::Friendship(n) if n >= 3 => {
            let n = n as f64;
            Ok(if n as usize % 2 == 1 {
                (n + 2.0 + (n * n - 4.0 * n + 12.0).sqrt()) / 2.0
            } else {
                (n + 1.0 + (n * n - 2.0 * n + 9.0).sqrt()) / 2.0
            })
        }
        QFamily::Split { n, k } if k >= 1 && n > k => {
            let (n, k) = (n as f64, k as f64);
            let b = n + 2.0 * k - 2.0;
            Ok((b + (b * b - 8.0 * k * k + 8.0 * k).sqrt()) / 2.0)
        }
        other => Err(Error::Domain(format!("no closed form for {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::FamilySpec;

    fn build(spec: FamilySpec) -> Graph {
        spec.construct().unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn spec_examples() {
        let c5 = build(FamilySpec::Cycle(5));
        assert!(close(spectrum(&c5, MatrixKind::Adjacency).unwrap().radius, 2.0, 1e-12));
        assert!(close(
            spectrum(&c5, MatrixKind::SignlessLaplacian).unwrap().radius,
            4.0,
            1e-12
        ));
        let k22 = build(FamilySpec::Turan { r: 2, n: 4 });
        assert!(close(lambda(&k22), 2.0, 1e-12));
        let k5 = build(FamilySpec::Complete(5));
        assert!(close(
            spectral_radius(&k5, MatrixKind::AAlpha(0.3)).unwrap(),
            4.0,
            1e-12
        ));
        assert!(spectral_radius(&k5, MatrixKind::AAlpha(1.5)).is_err());
    }

    #[test]
    fn closed_forms_match_solver() {
        assert!(close(
            closed_form_q(QFamily::Friendship(5)).unwrap(),
            (7.0 + 17f64.sqrt()) / 2.0,
            1e-14
        ));
        assert!(close(
            closed_form_q(QFamily::Friendship(6)).unwrap(),
            (7.0 + 33f64.sqrt()) / 2.0,
            1e-14
        ));
        assert!(close(
            closed_form_q(QFamily::Split { n: 10, k: 2 }).unwrap(),
            6.0 + 128f64.sqrt() / 2.0,
            1e-14
        ));
        for n in [3, 4, 5, 6, 11, 70, 71] {
            let g = build(FamilySpec::Friendship(n));
            assert!(
                close(q(&g), closed_form_q(QFamily::Friendship(n)).unwrap(), 1e-9),
                "F_{n}"
            );
        }
        for (n, k) in [(5, 1), (10, 2), (80, 7)] {
            let g = build(FamilySpec::Split { n, k });
            assert!(close(q(&g), closed_form_q(QFamily::Split { n, k }).unwrap(), 1e-9));
        }
        assert!(closed_form_q(QFamily::Split { n: 3, k: 3 }).is_err());
        assert!(closed_form_q(QFamily::Friendship(2)).is_err());
    }

    #[test]
    fn trace_and_residual_invariants() {
        for g in [
            build(FamilySpec::Wheel(9)),
            build(FamilySpec::Book(4)),
            build(FamilySpec::Split { n: 90, k: 3 }),
            build(FamilySpec::Cycle(120)),
        ] {
            let m2 = 2.0 * g.m() as f64;
            let a = spectrum(&g, MatrixKind::Adjacency).unwrap();
            assert!(a.eigenvalues.iter().sum::<f64>().abs() < 1e-9);
            assert!(close(a.eigenvalues.iter().map(|x| x * x).sum(), m2, 1e-8));
            assert!(a.residual < 1e-9, "{}", a.residual);
            let p = a.perron_vector.as_ref().unwrap();
            assert!(p.iter().all(|&v| v >= 0.0));
            let qs = spectrum(&g, MatrixKind::SignlessLaplacian).unwrap();
            assert!(close(qs.eigenvalues.iter().sum(), m2, 1e-8));
            assert!(2.0 * a.radius <= qs.radius + 1e-9);
            let half = spectral_radius(&g, MatrixKind::AAlpha(0.5)).unwrap();
            assert!(close(2.0 * half, qs.radius, 1e-9));
            let zero = spectral_radius(&g, MatrixKind::AAlpha(0.0)).unwrap();
            assert!(close(zero, a.radius, 1e-12));
        }
    }

    #[test]
    fn power_iteration_agrees() {
        for g in [
            build(FamilySpec::Friendship(9)),
            build(FamilySpec::Turan { r: 3, n: 11 }),
            build(FamilySpec::Cycle(9)),
        ] {
            for kind in [
                MatrixKind::Adjacency,
                MatrixKind::SignlessLaplacian,
                MatrixKind::AAlpha(0.7),
            ] {
                let s = spectrum(&g, kind).unwrap().radius;
                let p = power_iteration_radius(&g, kind, 1e-15, 200_000).unwrap();
                assert!(close(s, p, 1e-10), "{g} {kind:?}: {s} vs {p}");
            }
        }
    }

    #[test]
    fn disconnected_graphs_report_components() {
        let g = build(FamilySpec::DisjointUnion(
            build(FamilySpec::Complete(4)),
            build(FamilySpec::Cycle(5)),
        ));
        let s = spectrum(&g, MatrixKind::Adjacency).unwrap();
        assert!(s.perron_vector.is_none());
        assert_eq!(s.component_radii.len(), 2);
        assert!(close(s.radius, 3.0, 1e-12));
        assert!(close(s.component_radii[1], 2.0, 1e-12));
    }

    #[test]
    fn turan_radius_window() {
        for r in 2..=6 {
            for n in r..=40 {
                let t = build(FamilySpec::Turan { r, n });
                let (nf, rf) = (n as f64, r as f64);
                let l = lambda(&t);
                assert!(l <= (1.0 - 1.0 / rf) * nf + 1e-10);
                assert!(l >= (1.0 - 1.0 / rf) * nf - rf / (4.0 * nf) - 1e-10);
            }
        }
    }
}
