//! Seifert classes: solutions `a ∈ H_1(S, ∂S)` of `[b] = a - φ_*(a)`.
//!
//! The linear system `D_φ · a = [b]` is solved over ℤ through the Smith
//! normal form. The full coset is returned, as a particular solution plus
//! an integer kernel basis. The particular solution is normalised to the
//! smallest sup-norm in its coset, ties broken by l1-norm and then by
//! lexicographic order of the coordinates, and the kernel basis is put in
//! Hermite normal form, so output is independent of the elimination path.

use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::monodromy::TwistWord;
use crate::snf::smith_normal_form;
use crate::surface::{RelClass, SurfaceSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeifertSolution {
    pub particular: RelClass,
    pub kernel_basis: Vec<RelClass>,
}

impl SeifertSolution {
    pub fn kernel_rank(&self) -> usize {
        self.kernel_basis.len()
    }

    pub fn is_unique(&self) -> bool {
        self.kernel_basis.is_empty()
    }
}

/// A particular solution and an integer kernel basis.
pub type IntegerSolution = (Vec<i64>, Vec<Vec<i64>>);

/// Solves `D · a = rhs` over ℤ: `Ok(None)` when no integer solution exists,
/// otherwise the normalised particular solution and the kernel basis.
pub fn solve_integer_system(d: &IntMatrix, rhs: &[i64]) -> Result<Option<IntegerSolution>> {
    if d.rows() != rhs.len() {
        return Err(Error::DimensionMismatch {
            expected: d.rows(),
            got: rhs.len(),
        });
    }
    let snf = smith_normal_form(d)?;
    let rank = snf.rank();
    let c = (0..d.rows())
        .map(|i| wide_dot(snf.u.row(i), rhs.iter().map(|&x| i128::from(x))))
        .collect::<Result<Vec<i128>>>()?;
    if c[rank..].iter().any(|&x| x != 0) {
        return Ok(None);
    }
    let mut z = vec![0i128; d.cols()];
    for (i, (zi, &ci)) in z.iter_mut().zip(&c).take(rank).enumerate() {
        let di = i128::from(snf.d[(i, i)]);
        if ci % di != 0 {
            return Ok(None);
        }
        *zi = ci / di;
    }
    let kernel: Vec<Vec<i64>> = (rank..d.cols()).map(|j| snf.v.column(j)).collect();
    let kernel = hermite_rows(kernel);
    let mut particular = (0..d.cols())
        .map(|i| wide_dot(snf.v.row(i), z.iter().copied()))
        .collect::<Result<Vec<i128>>>()?;
    // Bring the pivot coordinates into range before leaving 128 bits.
    for v in &kernel {
        let pc = v.iter().position(|&x| x != 0).expect("zero kernel vector");
        let q = particular[pc].div_euclid(i128::from(v[pc]));
        for (x, &y) in particular.iter_mut().zip(v) {
            *x = q
                .checked_mul(i128::from(y))
                .and_then(|t| x.checked_sub(t))
                .ok_or(Error::Overflow)?;
        }
    }
    let particular = particular
        .into_iter()
        .map(|x| i64::try_from(x).map_err(|_| Error::Overflow))
        .collect::<Result<Vec<i64>>>()?;
    Ok(Some((reduce_coset(particular, &kernel), kernel)))
}

fn wide_dot(row: &[i64], v: impl Iterator<Item = i128>) -> Result<i128> {
    row.iter().zip(v).try_fold(0i128, |acc, (&a, b)| {
        i128::from(a)
            .checked_mul(b)
            .and_then(|t| acc.checked_add(t))
            .ok_or(Error::Overflow)
    })
}

pub fn solve_seifert_class(phi: &TwistWord, word: &BraidWord, surface: &SurfaceSpec) -> Result<SeifertSolution> {
    let d = phi.abs_difference_map(surface)?;
    let b = word.homology_class(surface)?;
    let (particular, kernel) = solve_integer_system(&d, b.coords())?.ok_or(Error::NotNullHomologous)?;
    Ok(SeifertSolution {
        particular: surface.rel_class(particular)?,
        kernel_basis: kernel
            .into_iter()
            .map(|k| surface.rel_class(k))
            .collect::<Result<_>>()?,
    })
}

pub fn is_null_homologous(phi: &TwistWord, word: &BraidWord, surface: &SurfaceSpec) -> bool {
    solve_seifert_class(phi, word, surface).is_ok()
}

/// Checks that `a` satisfies `[b] = a - φ_*(a)`.
pub fn check_seifert_class(phi: &TwistWord, word: &BraidWord, surface: &SurfaceSpec, a: &RelClass) -> Result<()> {
    let a = surface.rel_class(a.coords().to_vec())?;
    let d = phi.abs_difference_map(surface)?;
    let b = word.homology_class(surface)?;
    if d.mul_vec(a.coords()) != b.coords() {
        return Err(Error::InvalidSeifertClass);
    }
    Ok(())
}

/// Row-style Hermite normal form of a set of independent integer vectors:
/// echelon form, positive pivots, entries above each pivot in `[0, pivot)`.
fn hermite_rows(vectors: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    if vectors.is_empty() {
        return vectors;
    }
    let mut m = IntMatrix::from_rows(&vectors);
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Euclid down column c among rows r..
        loop {
            let pivot = (r..rows).filter(|&i| m[(i, c)] != 0).min_by_key(|&i| m[(i, c)].abs());
            let Some(p) = pivot else { break };
            m.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..rows {
                let q = m[(i, c)] / m[(r, c)];
                if q != 0 {
                    m.add_row_multiple(i, r, -q);
                }
                done &= m[(i, c)] == 0;
            }
            if done {
                break;
            }
        }
        if m[(r, c)] == 0 {
            continue;
        }
        if m[(r, c)] < 0 {
            m.negate_row(r);
        }
        let p = m[(r, c)];
        for i in 0..r {
            let q = m[(i, c)].div_euclid(p);
            if q != 0 {
                m.add_row_multiple(i, r, -q);
            }
        }
        r += 1;
    }
    m.to_rows().into_iter().take(r).collect()
}

fn sup_norm(v: &[i64]) -> i64 {
    v.iter().map(|x| x.abs()).max().unwrap_or(0)
}

fn l1_norm(v: &[i64]) -> i64 {
    v.iter().map(|x| x.abs()).sum()
}

fn better(a: &[i64], b: &[i64]) -> bool {
    (sup_norm(a), l1_norm(a), a) < (sup_norm(b), l1_norm(b), b)
}

/// The minimum of `(sup-norm, l1-norm, lex)` over `p + span_ℤ(basis)`, where
/// `basis` is in row Hermite form.
fn reduce_coset(mut p: Vec<i64>, basis: &[Vec<i64>]) -> Vec<i64> {
    if basis.is_empty() {
        return p;
    }
    // A good starting point keeps the exact search box small: round against
    // a reduced basis, then descend along it.
    let reduced = lll(basis.to_vec());
    p = babai(p, &reduced);
    let mut steps = reduced.clone();
    for i in 0..reduced.len() {
        for j in i + 1..reduced.len() {
            steps.push(reduced[i].iter().zip(&reduced[j]).map(|(x, y)| x + y).collect());
            steps.push(reduced[i].iter().zip(&reduced[j]).map(|(x, y)| x - y).collect());
        }
    }
    loop {
        let mut improved = false;
        for v in &steps {
            for sign in [1i64, -1] {
                let cand: Vec<i64> = p.iter().zip(v).map(|(x, y)| x + sign * y).collect();
                if better(&cand, &p) {
                    p = cand;
                    improved = true;
                }
            }
        }
        if !improved {
            break;
        }
    }
    let pivots: Vec<usize> = basis
        .iter()
        .map(|v| v.iter().position(|&x| x != 0).expect("zero kernel vector"))
        .collect();
    // First pin down the minimal sup-norm, then break ties exhaustively.
    let mut best = p;
    while sup_norm(&best) > 0 {
        let mut current = best.clone();
        match find_within(&mut current, basis, &pivots, 0, sup_norm(&best) - 1) {
            Some(found) => best = found,
            None => break,
        }
    }
    let mut current = best.clone();
    search(&mut current, basis, &pivots, 0, &mut best);
    best
}

fn dotf(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn gram_schmidt(basis: &[Vec<i64>]) -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
    let k = basis.len();
    let mut star: Vec<Vec<f64>> = Vec::with_capacity(k);
    let mut mu = vec![vec![0.0; k]; k];
    for i in 0..k {
        let bi: Vec<f64> = basis[i].iter().map(|&x| x as f64).collect();
        let mut v = bi.clone();
        for j in 0..i {
            mu[i][j] = dotf(&bi, &star[j]) / dotf(&star[j], &star[j]);
            for (x, y) in v.iter_mut().zip(&star[j]) {
                *x -= mu[i][j] * y;
            }
        }
        star.push(v);
    }
    (star, mu)
}

/// LLL reduction (δ = 3/4) of independent integer vectors. Floating point is
/// enough at the dimensions and magnitudes that occur here; the result only
/// picks a starting point and never decides the final answer.
fn lll(mut b: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let k = b.len();
    let mut i = 1;
    let mut guard = 0;
    while i < k && guard < 10_000 {
        guard += 1;
        for j in (0..i).rev() {
            let (_, mu) = gram_schmidt(&b);
            let q = mu[i][j].round() as i64;
            if q != 0 {
                let bj = b[j].clone();
                shift(&mut b[i], &bj, -q);
            }
        }
        let (star, mu) = gram_schmidt(&b);
        let lhs = dotf(&star[i], &star[i]);
        let rhs = (0.75 - mu[i][i - 1] * mu[i][i - 1]) * dotf(&star[i - 1], &star[i - 1]);
        if lhs >= rhs {
            i += 1;
        } else {
            b.swap(i, i - 1);
            i = (i - 1).max(1);
        }
    }
    b
}

/// Babai nearest-plane rounding of `p` against the lattice spanned by `basis`.
fn babai(mut p: Vec<i64>, basis: &[Vec<i64>]) -> Vec<i64> {
    let (star, _) = gram_schmidt(basis);
    for j in (0..basis.len()).rev() {
        let pf: Vec<f64> = p.iter().map(|&x| x as f64).collect();
        let q = (dotf(&pf, &star[j]) / dotf(&star[j], &star[j])).round() as i64;
        if q != 0 {
            shift(&mut p, &basis[j], -q);
        }
    }
    p
}

/// Range of `c` with `|base + c w| ≤ bound`, for `w > 0`.
fn coefficient_range(base: i64, w: i64, bound: i64) -> std::ops::RangeInclusive<i64> {
    let lo = (-bound - base).div_euclid(w) + i64::from((-bound - base).rem_euclid(w) != 0);
    let hi = (bound - base).div_euclid(w);
    lo..=hi
}

fn shift(cur: &mut [i64], v: &[i64], c: i64) {
    for (x, y) in cur.iter_mut().zip(v) {
        *x += c * y;
    }
}

/// Any coset element of sup-norm at most `bound`. Fixing the first `level`
/// echelon coefficients settles every coordinate before the next pivot.
fn find_within(cur: &mut Vec<i64>, basis: &[Vec<i64>], pivots: &[usize], level: usize, bound: i64) -> Option<Vec<i64>> {
    let settled = pivots.get(level).copied().unwrap_or(cur.len());
    if cur[..settled].iter().any(|x| x.abs() > bound) {
        return None;
    }
    if level == basis.len() {
        return Some(cur.clone());
    }
    let (v, pc) = (&basis[level], pivots[level]);
    for c in coefficient_range(cur[pc], v[pc], bound) {
        shift(cur, v, c);
        let hit = find_within(cur, basis, pivots, level + 1, bound);
        shift(cur, v, -c);
        if hit.is_some() {
            return hit;
        }
    }
    None
}

/// Exhaustive search at the (already minimal) sup-norm of `best`, pruning on
/// the l1-norm of settled coordinates.
fn search(cur: &mut Vec<i64>, basis: &[Vec<i64>], pivots: &[usize], level: usize, best: &mut Vec<i64>) {
    let bound = sup_norm(best);
    let settled = pivots.get(level).copied().unwrap_or(cur.len());
    if cur[..settled].iter().any(|x| x.abs() > bound) || l1_norm(&cur[..settled]) > l1_norm(best) {
        return;
    }
    if level == basis.len() {
        if better(cur, best) {
            *best = cur.clone();
        }
        return;
    }
    let (v, pc) = (&basis[level], pivots[level]);
    for c in coefficient_range(cur[pc], v[pc], bound) {
        shift(cur, v, c);
        search(cur, basis, pivots, level + 1, best);
        shift(cur, v, -c);
    }
}
