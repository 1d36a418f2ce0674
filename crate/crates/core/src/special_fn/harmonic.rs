use super::consts::{factorial, EULER_GAMMA};
use super::gamma::{digamma, is_nonpositive_integer, polygamma};
use super::zeta::zeta_int;
use crate::compensated::CompensatedSum;
use crate::error::{Error, Result};

/// Harmonic number H_n.
pub fn harmonic(n: u64) -> f64 {
    gen_harmonic(n, 1)
}

/// Generalized harmonic number H_n^(m) = sum_{k=1}^n k^(-m).
pub fn gen_harmonic(n: u64, m: u32) -> f64 {
    // small terms first
    (1..=n).rev().map(|k| (k as f64).powi(-(m as i32))).collect::<CompensatedSum>().value()
}

/// Harmonic numbers extended to real index through psi and polygamma.
pub fn extended_harmonic(eta: f64, m: u32) -> Result<f64> {
    if m == 0 {
        return Err(Error::domain("extended_harmonic", "order m must be >= 1"));
    }
    if is_nonpositive_integer(eta + 1.0) {
        return Err(Error::Pole { func: "extended_harmonic", at: eta });
    }
    if m == 1 {
        return Ok(EULER_GAMMA + digamma(eta + 1.0)?);
    }
    let sign = if (m - 1).is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(zeta_int(m) + sign / factorial(m - 1) * polygamma(m - 1, eta + 1.0)?)
}

/// Precomputed H_n, H_n^(2), H_n^(3) for n = 0..=n_max.
#[derive(Debug, Clone)]
pub struct HarmonicCache {
    h1: Vec<f64>,
    h2: Vec<f64>,
    h3: Vec<f64>,
}

impl HarmonicCache {
    pub fn new(n_max: usize) -> Self {
        let mut h1 = Vec::with_capacity(n_max + 1);
        let mut h2 = Vec::with_capacity(n_max + 1);
        let mut h3 = Vec::with_capacity(n_max + 1);
        let (mut s1, mut s2, mut s3) = (CompensatedSum::new(), CompensatedSum::new(), CompensatedSum::new());
        h1.push(0.0);
        h2.push(0.0);
        h3.push(0.0);
        for k in 1..=n_max {
            let inv = 1.0 / k as f64;
            s1.add(inv);
            s2.add(inv * inv);
            s3.add(inv * inv * inv);
            h1.push(s1.value());
            h2.push(s2.value());
            h3.push(s3.value());
        }
        Self { h1, h2, h3 }
    }

    pub fn n_max(&self) -> usize {
        self.h1.len() - 1
    }

    #[inline]
    pub fn h1(&self, n: usize) -> f64 {
        self.h1[n]
    }

    #[inline]
    pub fn h2(&self, n: usize) -> f64 {
        self.h2[n]
    }

    #[inline]
    pub fn h3(&self, n: usize) -> f64 {
        self.h3[n]
    }

    /// H_n^(m) for m in 1..=3.
    pub fn get(&self, n: usize, m: u32) -> f64 {
        match m {
            1 => self.h1[n],
            2 => self.h2[n],
            3 => self.h3[n],
            _ => panic!("HarmonicCache holds orders 1..=3, got {m}"),
        }
    }
}
