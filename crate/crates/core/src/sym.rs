//! Index systems for `Sym²P`, `Sym²(Sym²P)` and `Sym⁴P` over a basis `p_0..p_{m-1}`,
//! all enumerated as sorted multisets in lexicographic order.

use std::collections::HashMap;

use num_traits::One;

use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Sorted `k`-element multisets of `0..m` in lexicographic order.
pub fn multisets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(m: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..m {
            cur.push(x);
            go(m, k, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

#[derive(Clone, Debug)]
pub struct SymIndex {
    m: usize,
    /// Basis of `Sym²P`: `p_i p_j` with `i <= j`.
    pub pairs: Vec<(usize, usize)>,
    /// Basis of `Sym²(Sym²P)`: `s_a · s_b` with `a <= b` indexing `pairs`.
    pub pair_pairs: Vec<(usize, usize)>,
    /// Basis of `Sym⁴P`: monomials `p_i p_j p_k p_l`, `i <= j <= k <= l`.
    pub quartics: Vec<[usize; 4]>,
    pair_lookup: HashMap<(usize, usize), usize>,
    pair_pair_lookup: HashMap<(usize, usize), usize>,
    quartic_lookup: HashMap<[usize; 4], usize>,
}

impl SymIndex {
    pub fn new(m: usize) -> Self {
        let pairs: Vec<(usize, usize)> = multisets(m, 2).into_iter().map(|v| (v[0], v[1])).collect();
        let pair_pairs: Vec<(usize, usize)> = multisets(pairs.len(), 2)
            .into_iter()
            .map(|v| (v[0], v[1]))
            .collect();
        let quartics: Vec<[usize; 4]> = multisets(m, 4)
            .into_iter()
            .map(|v| [v[0], v[1], v[2], v[3]])
            .collect();
        let pair_lookup = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        let pair_pair_lookup = pair_pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        let quartic_lookup = quartics.iter().enumerate().map(|(k, &q)| (q, k)).collect();
        SymIndex {
            m,
            pairs,
            pair_pairs,
            quartics,
            pair_lookup,
            pair_pair_lookup,
            quartic_lookup,
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Index of `p_i p_j` in either order.
    pub fn pair(&self, i: usize, j: usize) -> usize {
        self.pair_lookup[&(i.min(j), i.max(j))]
    }

    /// Index of `s_a · s_b` in either order.
    pub fn pair_pair(&self, a: usize, b: usize) -> usize {
        self.pair_pair_lookup[&(a.min(b), a.max(b))]
    }

    pub fn quartic(&self, mut idx: [usize; 4]) -> usize {
        idx.sort_unstable();
        self.quartic_lookup[&idx]
    }

    /// Coordinates of `(p_i p_j)·(p_k p_l)` in `Sym²(Sym²P)`.
    pub fn element(&self, i: usize, j: usize, k: usize, l: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::from_integer(0.into()); self.pair_pairs.len()];
        v[self.pair_pair(self.pair(i, j), self.pair(k, l))] = Scalar::one();
        v
    }
}

/// `(p_i p_j)·(p_k p_l) ↦ p_i p_j p_k p_l`, as a `dim Sym⁴P × dim Sym²(Sym²P)` matrix.
pub fn symmetrization_map(m: usize) -> Matrix {
    let idx = SymIndex::new(m);
    symmetrization_matrix(&idx)
}

pub(crate) fn symmetrization_matrix(idx: &SymIndex) -> Matrix {
    let mut mat = Matrix::zeros(idx.quartics.len(), idx.pair_pairs.len());
    for (col, &(a, b)) in idx.pair_pairs.iter().enumerate() {
        let (i, j) = idx.pairs[a];
        let (k, l) = idx.pairs[b];
        mat[(idx.quartic([i, j, k, l]), col)] = Scalar::one();
    }
    mat
}
