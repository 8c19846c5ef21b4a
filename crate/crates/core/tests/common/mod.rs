#![allow(dead_code)]

use std::io::Write;

use npirred::valuation::SeriesCoefficient;
use npirred::IntPoly;
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Degree in `1..=max_degree`, coefficients in `[-bound, bound]`, nonzero
/// constant and leading terms.
pub fn random_poly(rng: &mut ChaCha8Rng, max_degree: usize, bound: i64) -> IntPoly {
    let n = rng.gen_range(1..=max_degree);
    let mut c: Vec<i64> = (0..=n).map(|_| rng.gen_range(-bound..=bound)).collect();
    for i in [0, n] {
        while c[i] == 0 {
            c[i] = rng.gen_range(-bound..=bound);
        }
    }
    IntPoly::from_i64s(&c)
}

/// `(g, h, g*h)` with `g*h` primitive.
pub fn reducible_corpus(seed: u64, count: usize) -> Vec<(IntPoly, IntPoly, IntPoly)> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let g = random_poly(&mut rng, 4, 9);
        let h = random_poly(&mut rng, 4, 9);
        let f = &g * &h;
        if f.is_primitive() {
            out.push((g, h, f));
        }
    }
    out
}

/// `p^k + p^k phi_m + p^{k-1} x^m phi_m + ... + p x^{(k-1)m} phi_m + x^{km+1} + x^{km+2}`
/// with `phi_m = x + ... + x^m`.
pub fn block_family(p: i64, k: u32, m: usize) -> IntPoly {
    let n = k as usize * m + 2;
    let mut c = vec![BigInt::from(0); n + 1];
    c[0] = BigInt::from(p).pow(k);
    for t in 1..=k as usize {
        for s in 1..=m {
            c[(k as usize - t) * m + s] = BigInt::from(p).pow(t as u32);
        }
    }
    c[n - 1] = BigInt::from(1);
    c[n] = BigInt::from(1);
    IntPoly::new(c)
}

pub fn u_pow(k: usize) -> SeriesCoefficient {
    let mut t = vec![0i64; k + 1];
    t[k] = 1;
    SeriesCoefficient::from_i64s(&t)
}

pub fn series_poly_mul(a: &[SeriesCoefficient], b: &[SeriesCoefficient]) -> Vec<SeriesCoefficient> {
    let mut out = vec![SeriesCoefficient::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    while out.len() > 1 && out.last().is_some_and(SeriesCoefficient::is_zero) {
        out.pop();
    }
    out
}

/// The bivariate family with `u = 1/x`:
/// `u^l (1 + y^{j-l}) + u^{j-l-1} y^l + y^j + y^{j+l} + (1 - u^{j-l-1}) y^{2j-l} + y^{2j}`,
/// returned with its two factors `1 + y^{j-l}` and
/// `u^l + u^{j-l-1} y^l + (1 - u^{j-l-1}) y^j + y^{j+l}`.
pub fn bivariate_family(
    ell: usize,
    j: usize,
) -> (Vec<SeriesCoefficient>, Vec<SeriesCoefficient>, Vec<SeriesCoefficient>) {
    let e = j - ell - 1;
    let one = SeriesCoefficient::one();
    let one_minus = &one + &(&SeriesCoefficient::from_i64s(&[-1]) * &u_pow(e));
    let mut f = vec![SeriesCoefficient::zero(); 2 * j + 1];
    f[0] = u_pow(ell);
    f[j - ell] = u_pow(ell);
    f[ell] = u_pow(e);
    f[j] = one.clone();
    f[j + ell] = one.clone();
    f[2 * j - ell] = one_minus.clone();
    f[2 * j] = one.clone();

    let mut left = vec![SeriesCoefficient::zero(); j - ell + 1];
    left[0] = one.clone();
    left[j - ell] = one.clone();
    let mut right = vec![SeriesCoefficient::zero(); j + ell + 1];
    right[0] = u_pow(ell);
    right[ell] = u_pow(e);
    right[j] = one_minus;
    right[j + ell] = one;
    (f, left, right)
}

/// Writes straight to the process's stderr so the line is visible even
/// when the test harness captures output.
pub fn report_line(line: &str) {
    let mut err = std::io::stderr();
    let _ = writeln!(err, "{line}");
}
