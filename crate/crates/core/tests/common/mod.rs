//! Random instance generators and brute-force oracles shared by the
//! integration tests. Oracles here avoid the library's own code paths.

#![allow(dead_code)]

use obsl::{AbsClass, BraidWord, Generator, IntMatrix, Letter, RelClass, SurfaceSpec, TwistFactor, TwistWord};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_surface(rng: &mut ChaCha8Rng, max_genus: u32, max_boundary: u32) -> SurfaceSpec {
    let g = rng.gen_range(0..=max_genus);
    let r = rng.gen_range(1..=max_boundary);
    SurfaceSpec::new(g, r).unwrap()
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn random_vector(rng: &mut ChaCha8Rng, len: usize, bound: i64) -> Vec<i64> {
    (0..len).map(|_| rng.gen_range(-bound..=bound)).collect()
}

/// Zero or primitive, entries in `[-bound, bound]`.
pub fn random_curve(rng: &mut ChaCha8Rng, s: &SurfaceSpec, bound: i64) -> AbsClass {
    loop {
        let v = random_vector(rng, s.rank(), bound);
        if v.iter().fold(0, |g, &x| gcd(g, x)) <= 1 {
            return s.abs_class(v).unwrap();
        }
    }
}

pub fn random_twist_word(rng: &mut ChaCha8Rng, s: &SurfaceSpec, max_len: usize) -> TwistWord {
    let len = rng.gen_range(0..=max_len);
    TwistWord::new(
        (0..len)
            .map(|_| {
                let curve = random_curve(rng, s, 2);
                let mut power = rng.gen_range(1..=3);
                if rng.gen_bool(0.5) {
                    power = -power;
                }
                TwistFactor::new(curve, power).unwrap()
            })
            .collect(),
    )
}

/// A shuffled word on `n` strands whose homology class is `class`, padded
/// with cancelling ρ pairs and σ letters.
pub fn random_word_with_class(rng: &mut ChaCha8Rng, s: &SurfaceSpec, n: usize, class: &[i64]) -> BraidWord {
    let mut letters = Vec::new();
    for (j, &c) in class.iter().enumerate() {
        for _ in 0..c.unsigned_abs() {
            letters.push(Letter::rho(j + 1, c.signum()));
        }
    }
    if s.rank() > 0 {
        for _ in 0..rng.gen_range(0..=3) {
            let j = rng.gen_range(1..=s.rank());
            letters.push(Letter::rho(j, 1));
            letters.push(Letter::rho(j, -1));
        }
    }
    if n > 1 {
        for _ in 0..rng.gen_range(0..=6) {
            let e = if rng.gen_bool(0.5) { 1 } else { -1 };
            letters.push(Letter::sigma(rng.gen_range(1..n), e));
        }
    }
    letters.shuffle(rng);
    BraidWord::new(n, letters).unwrap()
}

pub fn random_sigma_word(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> BraidWord {
    if n == 1 {
        return BraidWord::trivial(1).unwrap();
    }
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| Letter::sigma(rng.gen_range(1..n), if rng.gen_bool(0.5) { 1 } else { -1 }))
        .collect();
    BraidWord::new(n, letters).unwrap()
}

pub fn random_rel(rng: &mut ChaCha8Rng, s: &SurfaceSpec, bound: i64) -> RelClass {
    s.rel_class(random_vector(rng, s.rank(), bound)).unwrap()
}

pub fn random_abs(rng: &mut ChaCha8Rng, s: &SurfaceSpec, bound: i64) -> AbsClass {
    s.abs_class(random_vector(rng, s.rank(), bound)).unwrap()
}

/// A null-homologous instance: `(φ, a, b)` with `[b] = D_φ a`.
pub fn random_null_homologous(
    rng: &mut ChaCha8Rng,
    s: &SurfaceSpec,
    max_twists: usize,
) -> (TwistWord, RelClass, BraidWord) {
    let phi = random_twist_word(rng, s, max_twists);
    let a = random_rel(rng, s, 2);
    let class = phi.abs_difference_map(s).unwrap().mul_vec(a.coords());
    let n = rng.gen_range(1..=4);
    let b = random_word_with_class(rng, s, n, &class);
    (phi, a, b)
}

// ---- oracles ----

/// Intersection matrix written out from the basis convention.
pub fn oracle_form(s: &SurfaceSpec) -> Vec<Vec<i64>> {
    let n = s.rank();
    let mut j = vec![vec![0; n]; n];
    let r = s.boundary() as usize;
    for t in 0..s.genus() as usize {
        // one-based ρ_{r+2t}, ρ_{r+2t+1}
        let p = r + 2 * t - 1;
        j[p][p + 1] = -1;
        j[p + 1][p] = 1;
    }
    j
}

pub fn oracle_pair(j: &[Vec<i64>], x: &[i64], y: &[i64]) -> i64 {
    let mut total = 0;
    for a in 0..x.len() {
        for b in 0..y.len() {
            total += x[a] * j[a][b] * y[b];
        }
    }
    total
}

/// `Σ ε_i - Σ_{j<i} ε_i ε_j [b_j]·[b_i]` by explicit enumeration of pairs.
pub fn oracle_gen_exp(s: &SurfaceSpec, word: &BraidWord) -> i64 {
    let j = oracle_form(s);
    let mut units: Vec<(Option<usize>, i64)> = Vec::new();
    for l in word.letters() {
        for _ in 0..l.exponent.abs() {
            let g = match l.generator {
                Generator::Sigma(_) => None,
                Generator::Rho(r) => Some(r - 1),
            };
            units.push((g, l.exponent.signum()));
        }
    }
    let class = |g: Option<usize>| {
        let mut v = vec![0; s.rank()];
        if let Some(i) = g {
            v[i] = 1;
        }
        v
    };
    let mut total: i64 = units.iter().map(|u| u.1).sum();
    for i in 0..units.len() {
        for jj in 0..i {
            total -= units[i].1 * units[jj].1 * oracle_pair(&j, &class(units[jj].0), &class(units[i].0));
        }
    }
    total
}

/// Searches the box `‖a‖∞ ≤ bound` for an integer solution of `D a = rhs`.
pub fn oracle_box_solve(d: &IntMatrix, rhs: &[i64], bound: i64) -> Option<Vec<i64>> {
    let n = d.cols();
    let mut a = vec![-bound; n];
    loop {
        if d.mul_vec(&a) == rhs {
            return Some(a);
        }
        let mut i = 0;
        loop {
            if i == n {
                return None;
            }
            if a[i] < bound {
                a[i] += 1;
                break;
            }
            a[i] = -bound;
            i += 1;
        }
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

fn minor_det(m: &IntMatrix, rows: &[usize], cols: &[usize]) -> i128 {
    // Laplace expansion; sizes here are at most 6.
    if rows.is_empty() {
        return 1;
    }
    let mut total = 0i128;
    for (idx, &c) in cols.iter().enumerate() {
        let entry = m[(rows[0], c)] as i128;
        if entry == 0 {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let sign = if idx % 2 == 0 { 1 } else { -1 };
        total += sign * entry * minor_det(m, &rows[1..], &rest);
    }
    total
}

fn gcd128(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd128(b, a % b)
    }
}

/// Invariant factors from determinantal divisors: `d_1 ⋯ d_k` is the gcd of
/// all `k × k` minors.
pub fn oracle_invariant_factors(m: &IntMatrix) -> Vec<i64> {
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=m.rows().min(m.cols()) {
        let mut g = 0i128;
        for rows in combinations(m.rows(), k) {
            for cols in combinations(m.cols(), k) {
                g = gcd128(g, minor_det(m, &rows, &cols));
            }
        }
        if g == 0 {
            break;
        }
        out.push((g / prev) as i64);
        prev = g;
    }
    out
}
