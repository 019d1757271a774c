//! Finite complete lattices given by their full order relation.

use serde::{Deserialize, Serialize};

/// Why an order relation fails to be a finite lattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum LatticeDefect {
    Empty,
    NotReflexive(usize),
    NotAntisymmetric(usize, usize),
    NotTransitive(usize, usize, usize),
    NoJoin(usize, usize),
    NoMeet(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    leq: Vec<Vec<bool>>,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    /// Validates `leq` (a full relation, not a covering relation) and
    /// tabulates binary joins and meets.
    pub fn from_order(leq: Vec<Vec<bool>>) -> Result<Self, LatticeDefect> {
        let n = leq.len();
        if n == 0 {
            return Err(LatticeDefect::Empty);
        }
        if let Some(a) = (0..n).find(|&a| !leq[a][a]) {
            return Err(LatticeDefect::NotReflexive(a));
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(LatticeDefect::NotAntisymmetric(a, b));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if !leq[a][b] {
                    continue;
                }
                for c in 0..n {
                    if leq[b][c] && !leq[a][c] {
                        return Err(LatticeDefect::NotTransitive(a, b, c));
                    }
                }
            }
        }
        let least_of = |candidates: Vec<usize>| -> Option<usize> {
            candidates
                .iter()
                .copied()
                .find(|&c| candidates.iter().all(|&d| leq[c][d]))
        };
        let greatest_of = |candidates: Vec<usize>| -> Option<usize> {
            candidates
                .iter()
                .copied()
                .find(|&c| candidates.iter().all(|&d| leq[d][c]))
        };
        let mut join = vec![vec![0; n]; n];
        let mut meet = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                let uppers = (0..n).filter(|&c| leq[a][c] && leq[b][c]).collect();
                join[a][b] = least_of(uppers).ok_or(LatticeDefect::NoJoin(a, b))?;
                let lowers = (0..n).filter(|&c| leq[c][a] && leq[c][b]).collect();
                meet[a][b] = greatest_of(lowers).ok_or(LatticeDefect::NoMeet(a, b))?;
            }
        }
        let bottom = (0..n).fold(0, |acc, a| meet[acc][a]);
        let top = (0..n).fold(0, |acc, a| join[acc][a]);
        Ok(FiniteLattice {
            leq,
            join,
            meet,
            bottom,
            top,
        })
    }

    pub fn len(&self) -> usize {
        self.leq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leq.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn order(&self) -> &[Vec<bool>] {
        &self.leq
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn join_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.bottom, |acc, a| self.join[acc][a])
    }

    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.top, |acc, a| self.meet[acc][a])
    }

    /// `u ≪ v` via the complement form: `u ≪ v` iff `v ≰ ⋁{w | u ≰ w}`.
    pub fn totally_below(&self, u: usize, v: usize) -> bool {
        let cover = self.join_all((0..self.len()).filter(|&w| !self.leq[u][w]));
        !self.leq[v][cover]
    }

    /// `⇓v`, everything totally below `v`.
    pub fn way_below_set(&self, v: usize) -> Vec<usize> {
        (0..self.len()).filter(|&u| self.totally_below(u, v)).collect()
    }

    /// Whether `v = ⋁⇓v`.
    pub fn approximated_from_below(&self, v: usize) -> bool {
        self.join_all(self.way_below_set(v)) == v
    }

    /// First pair `(a, b)` with `c ∧ (a ∨ b) ≠ (c ∧ a) ∨ (c ∧ b)`.
    pub fn meet_distributivity_witness(&self, c: usize) -> Option<(usize, usize)> {
        let n = self.len();
        for a in 0..n {
            for b in a + 1..n {
                let lhs = self.meet(c, self.join(a, b));
                let rhs = self.join(self.meet(c, a), self.meet(c, b));
                if lhs != rhs {
                    return Some((a, b));
                }
            }
        }
        None
    }
}
