//! Integer Smith normal form over arbitrary-precision integers, and the
//! homology of a bounded chain complex of free abelian groups.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Dense integer matrix, row major.
#[derive(Debug, Clone)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        IntMatrix { rows, cols, data: entries.iter().map(|&e| BigInt::from(e)).collect() }
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }

    pub fn add_assign(&mut self, i: usize, j: usize, v: &BigInt) {
        let e = self.at_mut(i, j);
        *e += v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    // row[a] -= q * row[b]
    fn row_sub(&mut self, a: usize, b: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = q * self.at(b, j);
            *self.at_mut(a, j) -= v;
        }
    }

    fn col_sub(&mut self, a: usize, b: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = q * self.at(i, b);
            *self.at_mut(i, a) -= v;
        }
    }
}

/// Diagonal of the Smith normal form: nonzero invariant factors
/// `d1 | d2 | ..`, each positive.
pub fn smith_invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let mut m = m.clone();
    let mut factors = Vec::new();
    let mut k = 0usize;
    while k < m.rows && k < m.cols {
        // find a pivot of minimal absolute value in the trailing block
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..m.rows {
            for j in k..m.cols {
                if m.at(i, j).is_zero() {
                    continue;
                }
                match pivot {
                    None => pivot = Some((i, j)),
                    Some((pi, pj)) => {
                        if m.at(i, j).abs() < m.at(pi, pj).abs() {
                            pivot = Some((i, j));
                        }
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap_rows(k, pi);
        m.swap_cols(k, pj);
        // clear row and column k; restart if a remainder shrinks the pivot
        loop {
            let mut dirty = false;
            for i in k + 1..m.rows {
                if !m.at(i, k).is_zero() {
                    let q = m.at(i, k) / m.at(k, k);
                    m.row_sub(i, k, &q);
                    if !m.at(i, k).is_zero() {
                        m.swap_rows(k, i);
                        dirty = true;
                    }
                }
            }
            for j in k + 1..m.cols {
                if !m.at(k, j).is_zero() {
                    let q = m.at(k, j) / m.at(k, k);
                    m.col_sub(j, k, &q);
                    if !m.at(k, j).is_zero() {
                        m.swap_cols(k, j);
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }
        // enforce divisibility of the trailing block by the pivot
        let mut retry = false;
        'scan: for i in k + 1..m.rows {
            for j in k + 1..m.cols {
                if !(m.at(i, j) % m.at(k, k)).is_zero() {
                    // fold row i into row k and redo the elimination at k
                    for c in 0..m.cols {
                        let v = m.at(i, c).clone();
                        *m.at_mut(k, c) += v;
                    }
                    retry = true;
                    break 'scan;
                }
            }
        }
        if retry {
            continue;
        }
        if m.at(k, k).is_negative() {
            let v = -m.at(k, k).clone();
            *m.at_mut(k, k) = v;
        }
        factors.push(m.at(k, k).clone());
        k += 1;
    }
    factors
}

/// Homology of a chain complex `C_0 <- C_1 <- .. <- C_n` given by ranks and
/// boundary matrices (`boundary[k]: C_{k+1} -> C_k`, a `ranks[k] x
/// ranks[k+1]` matrix). Degree `k` homology is valid for `k < n` when the
/// complex is truncated above `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: usize,
    /// invariant factors > 1
    pub torsion: Vec<BigInt>,
}

pub fn chain_homology(ranks: &[usize], boundaries: &[IntMatrix], upto: usize) -> Vec<HomologyGroup> {
    assert_eq!(boundaries.len() + 1, ranks.len());
    let factors: Vec<Vec<BigInt>> = boundaries.iter().map(smith_invariant_factors).collect();
    let rank_of = |k: usize| -> usize {
        if k == 0 || k > boundaries.len() {
            0
        } else {
            factors[k - 1].len()
        }
    };
    let mut out = Vec::new();
    for k in 0..=upto {
        let betti = ranks[k] - rank_of(k) - rank_of(k + 1);
        let torsion: Vec<BigInt> = if k + 1 <= boundaries.len() {
            factors[k].iter().filter(|d| **d > BigInt::from(1)).cloned().collect()
        } else {
            Vec::new()
        };
        out.push(HomologyGroup { betti, torsion });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_snf() {
        let m = IntMatrix::from_i64(2, 2, &[2, 4, 4, 6]);
        let f = smith_invariant_factors(&m);
        assert_eq!(f, vec![BigInt::from(2), BigInt::from(2)]);

        let m = IntMatrix::from_i64(3, 3, &[2, 0, 0, 0, 3, 0, 0, 0, 0]);
        let f = smith_invariant_factors(&m);
        assert_eq!(f, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn snf_divisibility_chain() {
        let m = IntMatrix::from_i64(4, 4, &[-6, 111, -36, 6, 5, -672, 210, 74, 0, -255, 81, 24, -7, 255, -81, -10]);
        let f = smith_invariant_factors(&m);
        assert_eq!(f, vec![BigInt::from(1), BigInt::from(3), BigInt::from(21)]);
    }

    #[test]
    fn circle_homology() {
        // S^1 as 1 vertex, 1 edge: boundary C_1 -> C_0 is zero
        let ranks = vec![1usize, 1];
        let boundaries = vec![IntMatrix::zero(1, 1)];
        let h = chain_homology(&ranks, &boundaries, 1);
        assert_eq!(h[0], HomologyGroup { betti: 1, torsion: vec![] });
        assert_eq!(h[1], HomologyGroup { betti: 1, torsion: vec![] });
    }

    #[test]
    fn rp2_style_torsion() {
        // 1 vertex, 1 edge, 1 face with boundary multiplication by 2
        let ranks = vec![1usize, 1, 1];
        let boundaries = vec![IntMatrix::zero(1, 1), IntMatrix::from_i64(1, 1, &[2])];
        let h = chain_homology(&ranks, &boundaries, 1);
        assert_eq!(h[0], HomologyGroup { betti: 1, torsion: vec![] });
        assert_eq!(h[1], HomologyGroup { betti: 0, torsion: vec![BigInt::from(2)] });
    }
}
