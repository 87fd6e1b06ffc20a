//! Hilbert series of quotients by monomial ideals, via the standard
//! pivot-variable recursion, plus exact conversion to Hilbert functions
//! and rational-coefficient Hilbert polynomials.

use num::{BigInt, BigRational, Zero};

use crate::ring::Monomial;

/// The series of `R/I` as `numerator(T) / (1-T)^{n_vars}` with integer
/// numerator. The numerator depends only on the leading-term ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: Vec<i64>,
    n_vars: usize,
}

impl HilbertSeries {
    pub fn from_monomial_generators(gens: &[Monomial], n_vars: usize) -> Self {
        let minimal = minimalize(gens.to_vec());
        let num = numerator(minimal);
        let numerator = num
            .into_iter()
            .map(|c| i64::try_from(c).expect("numerator coefficient fits i64"))
            .collect();
        HilbertSeries { numerator, n_vars }
    }

    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero_ring(&self) -> bool {
        self.numerator.iter().all(|&c| c == 0)
    }

    /// Value of the Hilbert function of `R/I` at degree `d`.
    pub fn hilbert_function(&self, d: i64) -> i128 {
        if d < 0 {
            return 0;
        }
        let n = self.n_vars as i64;
        let mut acc: i128 = 0;
        for (k, &c) in self.numerator.iter().enumerate() {
            let shift = d - k as i64;
            if shift < 0 {
                break;
            }
            acc += c as i128 * binom_i128(n - 1 + shift, n - 1);
        }
        acc
    }

    /// `(krull_dim of R/I, degree)`: cancel the `(1-T)` factors of the
    /// numerator; what remains evaluated at 1 is the degree. The zero ring
    /// reports `(-1, 0)`.
    pub fn dimension_degree(&self) -> (i64, i64) {
        if self.is_zero_ring() {
            return (-1, 0);
        }
        let mut num: Vec<i64> = self.numerator.clone();
        let mut cancelled = 0usize;
        loop {
            let at_one: i64 = num.iter().sum();
            if at_one != 0 {
                let dim = self.n_vars as i64 - cancelled as i64;
                return (dim, at_one.abs());
            }
            // synthetic division by (1 - T)
            let mut quotient = vec![0i64; num.len().saturating_sub(1)];
            let mut carry = 0i64;
            for k in 0..num.len().saturating_sub(1) {
                carry += num[k];
                quotient[k] = carry;
            }
            num = quotient;
            cancelled += 1;
            if num.is_empty() {
                return (-1, 0);
            }
        }
    }

    /// Coefficients (constant first) of the Hilbert polynomial, exact
    /// rationals. Agrees with the Hilbert function in all large degrees.
    pub fn hilbert_polynomial(&self) -> Vec<BigRational> {
        let n = self.n_vars;
        if n == 0 {
            return vec![BigRational::zero()];
        }
        let mut acc = vec![BigRational::zero(); n.max(1)];
        for (k, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            // binom(d - k + n - 1, n - 1) as a polynomial in d
            let b = binom_poly(n - 1, -(k as i64));
            let c = BigRational::from(BigInt::from(c));
            for (i, coeff) in b.into_iter().enumerate() {
                acc[i] += coeff * &c;
            }
        }
        while acc.len() > 1 && acc.last().map(|c| c.is_zero()) == Some(true) {
            acc.pop();
        }
        acc
    }
}

/// `binom(d + shift + m, m)` expanded as a polynomial in `d` of degree `m`
/// (coefficients constant-first): the product of `(d + shift + i) / i`.
fn binom_poly(m: usize, shift: i64) -> Vec<BigRational> {
    let mut poly = vec![BigRational::from(BigInt::from(1))];
    for i in 1..=m {
        let constant = BigRational::new(BigInt::from(shift + i as i64), BigInt::from(i));
        let scale = BigRational::new(BigInt::from(1), BigInt::from(i));
        // poly *= (d/i + constant)
        let mut next = vec![BigRational::zero(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k] += c * &constant;
            next[k + 1] += c * &scale;
        }
        poly = next;
    }
    poly
}

pub fn binom_i128(n: i64, k: i64) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|kept| kept.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator of the series of `R/<gens>` for a minimal monomial generating
/// set: split on a pivot variable, with coprime products as the base case.
fn numerator(gens: Vec<Monomial>) -> Vec<i128> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![0];
    }
    let pairwise_coprime = (0..gens.len()).all(|i| {
        (i + 1..gens.len()).all(|j| gens[i].is_coprime(&gens[j]))
    });
    if pairwise_coprime {
        let mut acc = vec![1i128];
        for g in &gens {
            let d = g.degree() as usize;
            let mut factor = vec![0i128; d + 1];
            factor[0] = 1;
            factor[d] = -1;
            acc = poly_mul(&acc, &factor);
        }
        return acc;
    }
    // pivot: the variable occurring most often
    let n = gens[0].n_vars();
    let mut counts = vec![0usize; n];
    for g in &gens {
        for v in g.support() {
            counts[v] += 1;
        }
    }
    let pivot = counts
        .iter()
        .enumerate()
        .max_by_key(|(_, &c)| c)
        .map(|(v, _)| v)
        .expect("nonempty ring");
    let pivot_mono = Monomial::var(n, pivot);

    // I + (x_v)
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exp(pivot) == 0).cloned().collect();
    plus.push(pivot_mono.clone());
    // I : x_v
    let quot: Vec<Monomial> = gens
        .iter()
        .map(|g| match g.checked_div(&pivot_mono) {
            Some(h) => h,
            None => g.clone(),
        })
        .collect();

    let a = numerator(minimalize(plus));
    let b = numerator(minimalize(quot));
    // H = H(I + p) + T^{deg p} * H(I : p)
    let mut acc = vec![0i128; a.len().max(b.len() + 1)];
    for (k, &c) in a.iter().enumerate() {
        acc[k] += c;
    }
    for (k, &c) in b.iter().enumerate() {
        acc[k + 1] += c;
    }
    while acc.len() > 1 && *acc.last().unwrap() == 0 {
        acc.pop();
    }
    acc
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Brute-force Hilbert function of `R/<gens>`: count degree-`d` monomials
/// divisible by no generator. Independent of the series recursion; used as
/// an oracle in tests.
pub fn hilbert_function_brute_force(gens: &[Monomial], n_vars: usize, d: u32) -> i128 {
    crate::ring::monomials_of_degree(n_vars, d)
        .into_iter()
        .filter(|m| !gens.iter().any(|g| g.divides(m)))
        .count() as i128
}
