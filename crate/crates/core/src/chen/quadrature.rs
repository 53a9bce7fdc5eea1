//! Gauss–Legendre panel rule with its spectral integration matrix.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use gauss_quad::legendre::GaussLegendre;

/// An n-point Gauss–Legendre rule on [-1, 1] together with the matrix
/// `integ[i][j] = ∫_{-1}^{x_i} ℓ_j(x) dx` of the Lagrange basis ℓ_j on the
/// nodes. Applying the matrix to nodal values integrates their interpolant
/// from the left end of the panel up to every node.
#[derive(Debug)]
pub struct PanelRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    integ: Vec<f64>,
}

impl PanelRule {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "a panel rule needs at least two nodes");
        let gl = GaussLegendre::new(n).expect("n >= 2");
        let mut pairs: Vec<(f64, f64)> = gl.as_node_weight_pairs().to_vec();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        let nodes: Vec<f64> = pairs.iter().map(|p| p.0).collect();
        let weights: Vec<f64> = pairs.iter().map(|p| p.1).collect();

        let bary = barycentric_weights(&nodes);
        let mut integ = vec![0.0; n * n];
        let mut basis = vec![0.0; n];
        for i in 0..n {
            let half = 0.5 * (nodes[i] + 1.0);
            for (xk, wk) in nodes.iter().zip(&weights) {
                let y = -1.0 + half * (xk + 1.0);
                lagrange_basis(&nodes, &bary, y, &mut basis);
                for j in 0..n {
                    integ[i * n + j] += half * wk * basis[j];
                }
            }
        }
        PanelRule {
            nodes,
            weights,
            integ,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integ_row(&self, i: usize) -> &[f64] {
        let n = self.len();
        &self.integ[i * n..(i + 1) * n]
    }

    /// Shared rule for `n` nodes.
    pub fn cached(n: usize) -> Arc<PanelRule> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<PanelRule>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().expect("panel rule cache poisoned");
        guard
            .entry(n)
            .or_insert_with(|| Arc::new(PanelRule::new(n)))
            .clone()
    }
}

fn barycentric_weights(x: &[f64]) -> Vec<f64> {
    (0..x.len())
        .map(|j| {
            let prod: f64 = (0..x.len())
                .filter(|&k| k != j)
                .map(|k| x[j] - x[k])
                .product();
            1.0 / prod
        })
        .collect()
}

fn lagrange_basis(x: &[f64], bary: &[f64], y: f64, out: &mut [f64]) {
    if let Some(hit) = x.iter().position(|&xj| xj == y) {
        out.iter_mut().for_each(|v| *v = 0.0);
        out[hit] = 1.0;
        return;
    }
    let mut denom = 0.0;
    for j in 0..x.len() {
        let t = bary[j] / (y - x[j]);
        out[j] = t;
        denom += t;
    }
    out.iter_mut().for_each(|v| *v /= denom);
}
