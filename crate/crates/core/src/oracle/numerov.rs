//! Numerov recurrences for `u'' = f(r) u` on a uniform grid, with
//! `f(r) = k (V_eff(r) - E)` and `k = 2μ/ħ²`.

/// Magnitude above which the running solution is rescaled.
const RESCALE_ABOVE: f64 = 1e200;

/// `k · V_eff` tabulated once per problem; `f_i = kv[i] - k E`.
#[derive(Debug, Clone)]
pub(crate) struct Tabulated {
    pub h: f64,
    pub k: f64,
    pub kv: Vec<f64>,
    pub u0: f64,
    pub u1: f64,
}

impl Tabulated {
    fn weight(&self, i: usize, energy: f64) -> f64 {
        self.h * self.h * (self.kv[i] - self.k * energy) / 12.0
    }

    /// Sign changes of the outward solution over the whole grid.
    ///
    /// By Sturm oscillation this equals the number of eigenvalues below
    /// `energy` for the problem with `u = 0` at the outer edge.
    pub fn count_nodes(&self, energy: f64) -> usize {
        let n = self.kv.len();
        let (mut prev, mut curr) = (self.u0, self.u1);
        let mut t_prev = self.weight(0, energy);
        let mut t_curr = self.weight(1, energy);
        let mut nodes = 0;
        let mut last_sign = sign_of(curr).or(sign_of(prev));
        for i in 1..n - 1 {
            let t_next = self.weight(i + 1, energy);
            let next = ((2.0 + 10.0 * t_curr) * curr - (1.0 - t_prev) * prev) / (1.0 - t_next);
            if let Some(s) = sign_of(next) {
                if last_sign.is_some_and(|l| l != s) {
                    nodes += 1;
                }
                last_sign = Some(s);
            }
            prev = curr;
            curr = next;
            t_prev = t_curr;
            t_curr = t_next;
            if curr.abs() > RESCALE_ABOVE {
                prev /= RESCALE_ABOVE;
                curr /= RESCALE_ABOVE;
            }
        }
        nodes
    }

    /// Full outward solution.
    pub fn outward(&self, energy: f64, stop: usize) -> Vec<f64> {
        let n = self.kv.len();
        let stop = stop.min(n - 1);
        let mut u = vec![0.0; stop + 1];
        u[0] = self.u0;
        if stop == 0 {
            return u;
        }
        u[1] = self.u1;
        for i in 1..stop {
            let (tp, tc, tn) = (
                self.weight(i - 1, energy),
                self.weight(i, energy),
                self.weight(i + 1, energy),
            );
            u[i + 1] = ((2.0 + 10.0 * tc) * u[i] - (1.0 - tp) * u[i - 1]) / (1.0 - tn);
            if u[i + 1].abs() > RESCALE_ABOVE {
                u[..=i + 1].iter_mut().for_each(|v| *v /= RESCALE_ABOVE);
            }
        }
        u
    }

    /// Inward solution from the last grid point down to `stop`, started on
    /// the decaying exponential `e^(-κr)` when the edge is classically
    /// forbidden. Entries below `stop` are zero.
    pub fn inward(&self, energy: f64, stop: usize) -> Vec<f64> {
        let n = self.kv.len();
        let mut v = vec![0.0; n];
        let kappa2 = self.kv[n - 1] - self.k * energy;
        if kappa2 > 0.0 {
            v[n - 1] = 1.0;
            v[n - 2] = (kappa2.sqrt() * self.h).exp();
        } else {
            v[n - 1] = 0.0;
            v[n - 2] = 1.0;
        }
        for i in (stop + 1..n - 1).rev() {
            let (tp, tc, tn) = (
                self.weight(i + 1, energy),
                self.weight(i, energy),
                self.weight(i - 1, energy),
            );
            v[i - 1] = ((2.0 + 10.0 * tc) * v[i] - (1.0 - tp) * v[i + 1]) / (1.0 - tn);
            if v[i - 1].abs() > RESCALE_ABOVE {
                v[i - 1..].iter_mut().for_each(|x| *x /= RESCALE_ABOVE);
            }
        }
        v
    }
}

fn sign_of(x: f64) -> Option<bool> {
    if x > 0.0 {
        Some(true)
    } else if x < 0.0 {
        Some(false)
    } else {
        None
    }
}
