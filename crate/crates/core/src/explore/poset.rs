use crate::error::{Error, Result};

/// A partial order on finitely many labelled elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    leq: Vec<bool>,
}

impl FinitePoset {
    /// Takes the reflexive-transitive closure of `leq` and fails if the
    /// result is not antisymmetric.
    pub fn new(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let mut m: Vec<bool> = (0..n * n).map(|k| k / n == k % n || leq(k / n, k % n)).collect();
        for k in 0..n {
            for i in 0..n {
                if m[i * n + k] {
                    for j in 0..n {
                        if m[k * n + j] {
                            m[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if m[i * n + j] && m[j * n + i] {
                    return Err(Error::Precondition(format!("{} and {} are identified", labels[i], labels[j])));
                }
            }
        }
        Ok(FinitePoset { labels, leq: m })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.len() + j]
    }

    pub fn upper_bounds(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.leq(i, k) && self.leq(j, k)).collect()
    }

    pub fn lower_bounds(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.leq(k, i) && self.leq(k, j)).collect()
    }

    /// Least upper bound, if it exists.
    pub fn join(&self, i: usize, j: usize) -> Option<usize> {
        let ub = self.upper_bounds(i, j);
        ub.iter().copied().find(|&k| ub.iter().all(|&u| self.leq(k, u)))
    }

    /// Greatest lower bound, if it exists.
    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        let lb = self.lower_bounds(i, j);
        lb.iter().copied().find(|&k| lb.iter().all(|&l| self.leq(l, k)))
    }

    /// Covering pairs `(upper, lower)`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for hi in 0..n {
            for lo in 0..n {
                if hi != lo
                    && self.leq(lo, hi)
                    && !(0..n).any(|m| m != hi && m != lo && self.leq(lo, m) && self.leq(m, hi))
                {
                    out.push((hi, lo));
                }
            }
        }
        out
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| (0..self.len()).all(|j| j == i || !self.leq(j, i))).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| (0..self.len()).all(|j| j == i || !self.leq(i, j))).collect()
    }
}
