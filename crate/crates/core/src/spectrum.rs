//! Eigenvalue computations for incidence and Cayley graphs.
//!
//! Two independent routes are provided and cross-checked by the test
//! suites:
//!
//! 1. [`spectrum_direct`]: cyclic Jacobi diagonalization of the full
//!    adjacency matrix (dense, symmetric, ≤ 128 vertices), with an explicit
//!    residual bound `‖Av − λv‖∞ ≤ 1e-8` on every eigenpair.
//! 2. [`spectrum_via_underlying`]: for a valid cell family, the incidence
//!    graph spectrum is `±√(θ + ℓ)` over eigenvalues `θ ≠ −ℓ` of the
//!    underlying one-sided graph (vertices sharing a block), padded with
//!    zeros — a consequence of the walk identity `NNᵀ = A + ℓI`.

use crate::cells::{CellFamily, Validity};
use crate::graph::{self, SimpleGraph};
use crate::{Error, Result};

/// Maximum vertex count for dense eigensolves.
pub const MAX_SPECTRUM_VERTICES: usize = 128;

/// Multiplicity clustering tolerance.
pub const CLUSTER_TOL: f64 = 1e-6;

/// Eigenvalues with multiplicities, sorted in descending value order.
#[derive(Debug, Clone)]
pub struct SpectrumSummary {
    pub eigenvalues: Vec<(f64, usize)>,
    pub n: usize,
}

impl SpectrumSummary {
    pub fn multiplicity_sum(&self) -> usize {
        self.eigenvalues.iter().map(|&(_, m)| m).sum()
    }

    /// Largest eigenvalue.
    pub fn top(&self) -> f64 {
        self.eigenvalues.first().map(|&(v, _)| v).unwrap_or(0.0)
    }

    /// True when the spectrum is symmetric about zero (a certificate of
    /// bipartiteness for connected graphs).
    pub fn symmetric_about_zero(&self) -> bool {
        let evs = &self.eigenvalues;
        let len = evs.len();
        (0..len).all(|i| {
            let (v, m) = evs[i];
            let (w, mm) = evs[len - 1 - i];
            (v + w).abs() <= 10.0 * CLUSTER_TOL && m == mm
        })
    }

    /// Compare against another spectrum within `tol`.
    pub fn matches(&self, other: &SpectrumSummary, tol: f64) -> bool {
        self.n == other.n
            && self.eigenvalues.len() == other.eigenvalues.len()
            && self
                .eigenvalues
                .iter()
                .zip(&other.eigenvalues)
                .all(|(&(v, m), &(w, mm))| (v - w).abs() <= tol && m == mm)
    }

    /// Exact-looking label for an eigenvalue: integers and square roots of
    /// integers are snapped, anything else is printed to 6 decimals.
    pub fn label(value: f64) -> String {
        let rounded = value.round();
        if (value - rounded).abs() < CLUSTER_TOL {
            return format!("{}", rounded as i64);
        }
        let square = value * value;
        let sq_round = square.round();
        if sq_round > 0.0 && (square - sq_round).abs() < 100.0 * CLUSTER_TOL {
            let m = sq_round as i64;
            return if value >= 0.0 {
                format!("sqrt({m})")
            } else {
                format!("-sqrt({m})")
            };
        }
        format!("{value:.6}")
    }
}

impl std::fmt::Display for SpectrumSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .eigenvalues
            .iter()
            .map(|&(v, m)| format!("{}^{}", Self::label(v), m))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Eigenvalues and eigenvectors of a dense symmetric matrix (row-major,
/// `n x n`) by cyclic Jacobi rotations. Returns `(values, vectors)` with
/// `vectors` row-major; column `j` is the eigenvector of `values[j]`.
pub fn jacobi_eigen(matrix: &[f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    assert_eq!(matrix.len(), n * n, "matrix shape");
    let mut a = matrix.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    if n <= 1 {
        return (a.iter().step_by(n.max(1) + 1).copied().collect(), v);
    }
    for _sweep in 0..100 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[p * n + q] * a[p * n + q];
            }
        }
        if off.sqrt() < 1e-11 {
            break;
        }
        for p in 0..(n - 1) {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (theta * theta + 1.0).sqrt())
                } else {
                    -1.0 / (-theta + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // Update A = Jᵀ A J on rows/columns p and q.
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    // Residual check against the original matrix: ‖Mv − λv‖∞ ≤ 1e-8.
    for j in 0..n {
        let lambda = values[j];
        let mut worst = 0.0f64;
        for i in 0..n {
            let mut mv = 0.0;
            for k in 0..n {
                mv += matrix[i * n + k] * v[k * n + j];
            }
            worst = worst.max((mv - lambda * v[i * n + j]).abs());
        }
        assert!(
            worst <= 1e-8,
            "eigenpair residual {worst:.3e} exceeds 1e-8 (n = {n})"
        );
    }
    (values, v)
}

/// Cluster raw eigenvalues into (value, multiplicity) pairs, descending.
pub fn cluster(raw: &[f64]) -> Vec<(f64, usize)> {
    let mut sorted = raw.to_vec();
    sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let mut out: Vec<(f64, usize)> = Vec::new();
    for &x in &sorted {
        match out.last_mut() {
            Some((v, m)) if (*v - x).abs() <= CLUSTER_TOL => {
                // Running mean keeps the cluster centered.
                *v = (*v * *m as f64 + x) / (*m as f64 + 1.0);
                *m += 1;
            }
            _ => out.push((x, 1)),
        }
    }
    // Snap near-integers and near-zero values exactly.
    for (v, _) in &mut out {
        let r = v.round();
        if (*v - r).abs() < CLUSTER_TOL {
            *v = r;
        }
    }
    out
}

/// Spectrum of an arbitrary graph by dense diagonalization.
pub fn spectrum_direct(graph: &SimpleGraph) -> Result<SpectrumSummary> {
    let n = graph.n();
    if n > MAX_SPECTRUM_VERTICES {
        return Err(Error::GraphTooLarge(n));
    }
    let (values, _) = jacobi_eigen(&graph.adjacency_f64(), n);
    Ok(SpectrumSummary {
        eigenvalues: cluster(&values),
        n,
    })
}

/// Spectrum of the incidence graph of a valid family, computed from the
/// underlying one-sided graph without ever forming the incidence graph:
/// each eigenvalue `θ ≠ −ℓ` of the underlying graph contributes the pair
/// `±√(θ + ℓ)`, and zero absorbs the rest of the dimension count.
pub fn spectrum_via_underlying(family: &CellFamily) -> Result<SpectrumSummary> {
    family.require(Validity::BcayValid)?;
    let n = family.group().order();
    let ell = family.ell();
    let k = family.k().expect("valid family has uniform cell size");
    let b = n * ell / k;
    let underlying = graph::underlying_cayley(family)?;
    let (theta, _) = jacobi_eigen(&underlying.adjacency_f64(), n);
    let theta_clusters = cluster(&theta);
    let mut eigenvalues: Vec<(f64, usize)> = Vec::new();
    let mut kernel_mult = 0usize;
    for &(t, m) in &theta_clusters {
        let shifted = t + ell as f64;
        if shifted.abs() <= 100.0 * CLUSTER_TOL {
            kernel_mult += m;
        } else {
            debug_assert!(
                shifted > 0.0,
                "NNᵀ = A + ℓI is positive semidefinite; found eigenvalue {shifted}"
            );
            let root = shifted.sqrt();
            eigenvalues.push((root, m));
            eigenvalues.push((-root, m));
        }
    }
    // Rank of the biadjacency matrix is n - kernel_mult, and the nonzero
    // spectrum pairs up, so zero fills the remaining b - n + 2*kernel_mult
    // dimensions (never negative: the rank is also at most b).
    let zero_mult = (b + 2 * kernel_mult)
        .checked_sub(n)
        .expect("biadjacency rank cannot exceed the block count");
    if zero_mult > 0 {
        eigenvalues.push((0.0, zero_mult));
    }
    eigenvalues.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
    let summary = SpectrumSummary {
        eigenvalues,
        n: n + b,
    };
    debug_assert_eq!(summary.multiplicity_sum(), n + b);
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::validate_family;
    use crate::graph::build_bcay;
    use crate::group::FiniteGroup;

    fn complete_graph(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    fn cycle_graph(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    #[test]
    fn complete_graph_spectrum() {
        let s = spectrum_direct(&complete_graph(4)).unwrap();
        assert_eq!(s.eigenvalues.len(), 2);
        assert!((s.eigenvalues[0].0 - 3.0).abs() < 1e-9 && s.eigenvalues[0].1 == 1);
        assert!((s.eigenvalues[1].0 + 1.0).abs() < 1e-9 && s.eigenvalues[1].1 == 3);
        assert!(!s.symmetric_about_zero());
    }

    #[test]
    fn cycle_spectrum() {
        let s = spectrum_direct(&cycle_graph(6)).unwrap();
        // 2, 1, 1, -1, -1, -2.
        let expect = [(2.0, 1), (1.0, 2), (-1.0, 2), (-2.0, 1)];
        assert_eq!(s.eigenvalues.len(), 4);
        for ((v, m), (ev, em)) in s.eigenvalues.iter().zip(expect) {
            assert!((v - ev).abs() < 1e-9);
            assert_eq!(*m, em);
        }
        assert!(s.symmetric_about_zero());
        assert_eq!(s.to_string(), "2^1, 1^2, -1^2, -2^1");
    }

    #[test]
    fn star_and_petersen() {
        let mut star = SimpleGraph::new(5);
        for leaf in 1..5 {
            star.add_edge(0, leaf);
        }
        let s = spectrum_direct(&star).unwrap();
        assert_eq!(s.eigenvalues.len(), 3);
        assert!((s.eigenvalues[0].0 - 2.0).abs() < 1e-9);
        assert_eq!(s.eigenvalues[1], (0.0, 3));
        assert!((s.eigenvalues[2].0 + 2.0).abs() < 1e-9);

        let mut petersen = SimpleGraph::new(10);
        for i in 0..5 {
            petersen.add_edge(i, (i + 1) % 5);
            petersen.add_edge(5 + i, 5 + (i + 2) % 5);
            petersen.add_edge(i, 5 + i);
        }
        let s = spectrum_direct(&petersen).unwrap();
        let expect = [(3.0, 1), (1.0, 5), (-2.0, 4)];
        for ((v, m), (ev, em)) in s.eigenvalues.iter().zip(expect) {
            assert!((v - ev).abs() < 1e-9);
            assert_eq!(*m, em);
        }
    }

    #[test]
    fn heawood_two_routes_agree() {
        let g = FiniteGroup::cyclic(7).unwrap();
        let family =
            validate_family(&g, &[vec![0, 1, 3], vec![0, 2, 6], vec![0, 4, 5]]).unwrap();
        let direct = spectrum_direct(build_bcay(&family).unwrap().graph()).unwrap();
        let formula = spectrum_via_underlying(&family).unwrap();
        assert!(direct.matches(&formula, 1e-6), "{direct} vs {formula}");
        // ±3 once, ±√2 six times.
        assert_eq!(direct.eigenvalues.len(), 4);
        assert_eq!(
            direct.to_string(),
            "3^1, sqrt(2)^6, -sqrt(2)^6, -3^1"
        );
    }

    #[test]
    fn star_family_formula_handles_kernel() {
        // One subgroup cell on Z12: disconnected union of stars; the
        // underlying graph has eigenvalue -ℓ with positive multiplicity.
        let g = FiniteGroup::cyclic(12).unwrap();
        let family = validate_family(&g, &[vec![0, 4, 8]]).unwrap();
        let direct = spectrum_direct(build_bcay(&family).unwrap().graph()).unwrap();
        let formula = spectrum_via_underlying(&family).unwrap();
        assert!(direct.matches(&formula, 1e-6), "{direct} vs {formula}");
        assert_eq!(formula.n, 16);
    }

    #[test]
    fn label_snapping() {
        assert_eq!(SpectrumSummary::label(3.0000001), "3");
        assert_eq!(SpectrumSummary::label(-2.9999999), "-3");
        assert_eq!(SpectrumSummary::label(std::f64::consts::SQRT_2), "sqrt(2)");
        assert_eq!(SpectrumSummary::label(-(6.0f64.sqrt())), "-sqrt(6)");
        assert_eq!(SpectrumSummary::label(1.2345678), "1.234568");
    }
}
