//! Smith normal form over ℤ with unimodular transforms.

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// `U · M · V = D`, with `U`, `V` unimodular and `D` diagonal, nonnegative,
/// `d_1 | d_2 | …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithNormalForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithNormalForm {
    pub fn invariant_factors(&self) -> Vec<i64> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)])
            .filter(|&x| x != 0)
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Computes the Smith normal form. Elimination runs in checked 128-bit
/// arithmetic; `Error::Overflow` if an entry of `U`, `D` or `V` does not fit
/// back into `i64`.
pub fn smith_normal_form(m: &IntMatrix) -> Result<SmithNormalForm> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = Work::from(m);
    let mut u = Work::identity(rows);
    let mut v = Work::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = a.smallest_nonzero(t) else {
                return finish(&u, &a, &v);
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let p = a.get(t, t);
            let mut dirty = false;
            for i in t + 1..rows {
                let q = a.get(i, t) / p;
                if q != 0 {
                    a.add_row_multiple(i, t, -q)?;
                    u.add_row_multiple(i, t, -q)?;
                }
                dirty |= a.get(i, t) != 0;
            }
            for j in t + 1..cols {
                let q = a.get(t, j) / p;
                if q != 0 {
                    a.add_col_multiple(j, t, -q)?;
                    v.add_col_multiple(j, t, -q)?;
                }
                dirty |= a.get(t, j) != 0;
            }
            if dirty {
                // a remainder smaller than the pivot survived; re-pivot on it
                continue;
            }
            // pivot must divide the rest of the block
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a.get(i, j) % p != 0));
            match offender {
                Some(i) => {
                    a.add_row_multiple(t, i, 1)?;
                    u.add_row_multiple(t, i, 1)?;
                }
                None => break,
            }
        }
        if a.get(t, t) < 0 {
            a.add_row_multiple(t, t, -2)?;
            u.add_row_multiple(t, t, -2)?;
        }
    }
    finish(&u, &a, &v)
}

fn finish(u: &Work, d: &Work, v: &Work) -> Result<SmithNormalForm> {
    Ok(SmithNormalForm {
        u: u.to_matrix()?,
        d: d.to_matrix()?,
        v: v.to_matrix()?,
    })
}

/// Row-major 128-bit working copy.
struct Work {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl Work {
    fn from(m: &IntMatrix) -> Self {
        let data = m.to_rows().into_iter().flatten().map(i128::from).collect();
        Self {
            rows: m.rows(),
            cols: m.cols(),
            data,
        }
    }

    fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Self { rows: n, cols: n, data }
    }

    fn get(&self, i: usize, j: usize) -> i128 {
        self.data[i * self.cols + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn add_row_multiple(&mut self, dst: usize, src: usize, k: i128) -> Result<()> {
        for j in 0..self.cols {
            let x = self.get(src, j).checked_mul(k).ok_or(Error::Overflow)?;
            let y = &mut self.data[dst * self.cols + j];
            *y = y.checked_add(x).ok_or(Error::Overflow)?;
        }
        Ok(())
    }

    fn add_col_multiple(&mut self, dst: usize, src: usize, k: i128) -> Result<()> {
        for i in 0..self.rows {
            let x = self.get(i, src).checked_mul(k).ok_or(Error::Overflow)?;
            let y = &mut self.data[i * self.cols + dst];
            *y = y.checked_add(x).ok_or(Error::Overflow)?;
        }
        Ok(())
    }

    fn smallest_nonzero(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(i128, usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = self.get(i, j).abs();
                if x != 0 && best.is_none_or(|(b, _, _)| x < b) {
                    best = Some((x, i, j));
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn to_matrix(&self) -> Result<IntMatrix> {
        let mut m = IntMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = i64::try_from(self.get(i, j)).map_err(|_| Error::Overflow)?;
            }
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> SmithNormalForm {
        let snf = smith_normal_form(m).unwrap();
        assert_eq!(&(&snf.u * m) * &snf.v, snf.d, "U M V != D for {m:?}");
        assert_eq!(snf.u.determinant().abs(), 1);
        assert_eq!(snf.v.determinant().abs(), 1);
        for i in 0..snf.d.rows() {
            for j in 0..snf.d.cols() {
                if i != j {
                    assert_eq!(snf.d[(i, j)], 0);
                }
            }
        }
        let f = snf.invariant_factors();
        assert!(f.iter().all(|&x| x > 0));
        assert!(f.windows(2).all(|w| w[1] % w[0] == 0));
        snf
    }

    #[test]
    fn diag_two_three() {
        let snf = check(&IntMatrix::from_rows(&[[2, 0], [0, 3]]));
        assert_eq!(snf.invariant_factors(), vec![1, 6]);
    }

    #[test]
    fn zero_and_identity() {
        let z = IntMatrix::zeros(3, 2);
        let snf = check(&z);
        assert!(snf.d.is_zero());
        assert_eq!(snf.u, IntMatrix::identity(3));
        assert_eq!(snf.v, IntMatrix::identity(2));

        let snf = check(&IntMatrix::identity(4));
        assert_eq!(snf.d, IntMatrix::identity(4));
    }

    #[test]
    fn rectangular_and_degenerate() {
        check(&IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]));
        check(&IntMatrix::from_rows(&[[0, 0, 5], [0, 0, 0]]));
        let snf = check(&IntMatrix::from_rows(&[[4, 6], [6, 9]]));
        assert_eq!(snf.invariant_factors(), vec![1]);
        check(&IntMatrix::zeros(0, 0));
        check(&IntMatrix::zeros(0, 3));
    }

    #[test]
    fn known_invariant_factors() {
        // classic textbook example: diag(2, 6, 12)
        let snf = check(&IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]));
        assert_eq!(snf.invariant_factors(), vec![2, 6, 12]);
    }
}
