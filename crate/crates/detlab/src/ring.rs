//! Coefficient fields, monomials, monomial orders, and sparse multivariate
//! polynomial arithmetic.
//!
//! Everything is exact: coefficients live in a prime field `F_p` (default
//! p = 32003) or in `Q`. Polynomials keep their terms strictly sorted in
//! the ring's monomial order, with no zero coefficients, so the zero
//! polynomial is the empty term list.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num::{BigInt, BigRational, One, Zero};
use smallvec::SmallVec;

/// The coefficient field of a ring: `F_p` for a prime `p`, or the rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
}

pub const DEFAULT_PRIME: u64 = 32003;

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime(p) => *p,
            FieldSpec::Rationals => 0,
        }
    }
}

/// A total order on monomials refining divisibility.
///
/// `Block(k)` eliminates the first `k` variables: any monomial involving
/// one of them sorts above every monomial in the remaining variables
/// (both blocks are compared degree-reverse-lexicographically).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    Block(usize),
}

#[derive(Debug)]
struct RingData {
    n_vars: usize,
    field: FieldSpec,
    order: MonomialOrder,
}

/// Shared ring context: variable count, coefficient field, monomial order.
///
/// Cheap to clone. Two polynomials may be combined only when their rings
/// agree in all three components; arithmetic panics otherwise.
#[derive(Clone)]
pub struct Ring(Arc<RingData>);

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Ring(n={}, {:?}, {:?})",
            self.0.n_vars, self.0.field, self.0.order
        )
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.0.n_vars == other.0.n_vars
            && self.0.field == other.0.field
            && self.0.order == other.0.order
    }
}
impl Eq for Ring {}

impl Ring {
    pub fn new(n_vars: usize, field: FieldSpec, order: MonomialOrder) -> Self {
        if let FieldSpec::Prime(p) = field {
            assert!(p >= 2 && is_prime(p), "field characteristic must be prime");
            assert!(p < (1u64 << 31), "prime too large for machine arithmetic");
        }
        Ring(Arc::new(RingData { n_vars, field, order }))
    }

    /// `F_32003[x0..x{n-1}]` with degrevlex.
    pub fn fp(n_vars: usize) -> Self {
        Ring::new(n_vars, FieldSpec::Prime(DEFAULT_PRIME), MonomialOrder::DegRevLex)
    }

    pub fn fp_p(n_vars: usize, p: u64) -> Self {
        Ring::new(n_vars, FieldSpec::Prime(p), MonomialOrder::DegRevLex)
    }

    pub fn rationals(n_vars: usize) -> Self {
        Ring::new(n_vars, FieldSpec::Rationals, MonomialOrder::DegRevLex)
    }

    pub fn n_vars(&self) -> usize {
        self.0.n_vars
    }

    pub fn field(&self) -> &FieldSpec {
        &self.0.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Ring::new(self.0.n_vars, self.0.field.clone(), order)
    }

    pub fn with_vars(&self, n_vars: usize) -> Ring {
        Ring::new(n_vars, self.0.field.clone(), self.0.order)
    }

    pub fn same_context(&self, other: &Ring) -> bool {
        self == other
    }

    pub fn var_name(&self, i: usize) -> String {
        format!("x{i}")
    }

    // ---- coefficient arithmetic ----------------------------------------

    pub fn czero(&self) -> Coeff {
        match self.0.field {
            FieldSpec::Prime(_) => Coeff::Fp(0),
            FieldSpec::Rationals => Coeff::Rat(Box::new(BigRational::zero())),
        }
    }

    pub fn cone(&self) -> Coeff {
        match self.0.field {
            FieldSpec::Prime(_) => Coeff::Fp(1),
            FieldSpec::Rationals => Coeff::Rat(Box::new(BigRational::one())),
        }
    }

    pub fn cfrom_i64(&self, v: i64) -> Coeff {
        match self.0.field {
            FieldSpec::Prime(p) => {
                let m = v.rem_euclid(p as i64) as u64;
                Coeff::Fp(m)
            }
            FieldSpec::Rationals => Coeff::Rat(Box::new(BigRational::from(BigInt::from(v)))),
        }
    }

    pub fn cfrom_ratio(&self, num: i64, den: i64) -> Coeff {
        assert!(den != 0, "zero denominator");
        match self.0.field {
            FieldSpec::Prime(_) => {
                let n = self.cfrom_i64(num);
                let d = self.cfrom_i64(den);
                self.cmul(&n, &self.cinv(&d))
            }
            FieldSpec::Rationals => Coeff::Rat(Box::new(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
        }
    }

    pub fn cis_zero(&self, c: &Coeff) -> bool {
        match c {
            Coeff::Fp(v) => *v == 0,
            Coeff::Rat(r) => r.is_zero(),
        }
    }

    pub fn cadd(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self.0.field.clone(), a, b) {
            (FieldSpec::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp((x + y) % p),
            (FieldSpec::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => {
                Coeff::Rat(Box::new(&**x + &**y))
            }
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn csub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self.0.field.clone(), a, b) {
            (FieldSpec::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp((x + p - y) % p),
            (FieldSpec::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => {
                Coeff::Rat(Box::new(&**x - &**y))
            }
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn cneg(&self, a: &Coeff) -> Coeff {
        match (self.0.field.clone(), a) {
            (FieldSpec::Prime(p), Coeff::Fp(x)) => Coeff::Fp(if *x == 0 { 0 } else { p - x }),
            (FieldSpec::Rationals, Coeff::Rat(x)) => Coeff::Rat(Box::new(-&**x)),
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn cmul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self.0.field.clone(), a, b) {
            (FieldSpec::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp(x * y % p),
            (FieldSpec::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => {
                Coeff::Rat(Box::new(&**x * &**y))
            }
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn cinv(&self, a: &Coeff) -> Coeff {
        match (self.0.field.clone(), a) {
            (FieldSpec::Prime(p), Coeff::Fp(x)) => {
                assert!(*x != 0, "division by zero");
                Coeff::Fp(mod_inverse(*x, p))
            }
            (FieldSpec::Rationals, Coeff::Rat(x)) => {
                assert!(!x.is_zero(), "division by zero");
                Coeff::Rat(Box::new(x.recip()))
            }
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn cdiv(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.cmul(a, &self.cinv(b))
    }

    pub fn cis_one(&self, c: &Coeff) -> bool {
        match c {
            Coeff::Fp(v) => *v == 1,
            Coeff::Rat(r) => r.is_one(),
        }
    }

    // ---- monomial comparison -------------------------------------------

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(
            a.n_vars(),
            self.0.n_vars,
            "monomial does not belong to this ring"
        );
        assert_eq!(a.n_vars(), b.n_vars(), "mismatched variable counts");
        compare_in_order(self.0.order, a, b)
    }
}

fn degrevlex_range(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    let da: u64 = a.exps[lo..hi].iter().map(|&e| e as u64).sum();
    let db: u64 = b.exps[lo..hi].iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (lo..hi).rev() {
        let d = a.exps[i] as i64 - b.exps[i] as i64;
        if d != 0 {
            // last nonzero difference negative means `a` is larger
            return if d < 0 { Ordering::Greater } else { Ordering::Less };
        }
    }
    Ordering::Equal
}

pub(crate) fn compare_in_order(order: MonomialOrder, a: &Monomial, b: &Monomial) -> Ordering {
    let n = a.n_vars();
    match order {
        MonomialOrder::DegRevLex => degrevlex_range(a, b, 0, n),
        MonomialOrder::Lex => {
            for i in 0..n {
                match a.exps[i].cmp(&b.exps[i]) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
            }
            Ordering::Equal
        }
        MonomialOrder::Block(k) => {
            let k = k.min(n);
            match degrevlex_range(a, b, 0, k) {
                Ordering::Equal => degrevlex_range(a, b, k, n),
                ord => ord,
            }
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "inverse of non-unit");
    t.rem_euclid(p as i64) as u64
}

/// An exact field element. `Fp` values are canonical in `0..p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Fp(u64),
    Rat(Box<BigRational>),
}

impl Coeff {
    /// Balanced integer lift for display: `Fp` values above `p/2` print
    /// as negative.
    pub fn display_string(&self, field: &FieldSpec) -> String {
        match (self, field) {
            (Coeff::Fp(v), FieldSpec::Prime(p)) => {
                if *v > p / 2 {
                    format!("-{}", p - v)
                } else {
                    format!("{v}")
                }
            }
            (Coeff::Rat(r), _) => format!("{}", r),
            _ => unreachable!("coefficient does not match field"),
        }
    }
}

/// Exponent vector. Total degree is the sum of the entries; exponents are
/// unsigned machine integers and overflow is a hard error (panic).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 16]>,
}

impl Monomial {
    pub fn one(n_vars: usize) -> Self {
        Monomial { exps: smallvec::smallvec![0; n_vars] }
    }

    pub fn var(n_vars: usize, i: usize) -> Self {
        assert!(i < n_vars);
        let mut m = Monomial::one(n_vars);
        m.exps[i] = 1;
        m
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        Monomial { exps: SmallVec::from_slice(exps) }
    }

    pub fn n_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.n_vars(), other.n_vars(), "mismatched variable counts");
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("monomial exponent overflow"))
            .collect();
        Monomial { exps }
    }

    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        assert_eq!(self.n_vars(), other.n_vars(), "mismatched variable counts");
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial { exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Monomial { exps }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn pow(&self, k: u16) -> Monomial {
        let exps = self
            .exps
            .iter()
            .map(|&e| e.checked_mul(k).expect("monomial exponent overflow"))
            .collect();
        Monomial { exps }
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Insert `count` fresh variables (exponent 0) at position `at`.
    pub fn insert_vars(&self, at: usize, count: usize) -> Monomial {
        let mut exps = SmallVec::with_capacity(self.exps.len() + count);
        exps.extend_from_slice(&self.exps[..at]);
        exps.extend(std::iter::repeat_n(0, count));
        exps.extend_from_slice(&self.exps[at..]);
        Monomial { exps }
    }

    /// Remove variable `at`; its exponent must be zero.
    pub fn remove_var(&self, at: usize) -> Monomial {
        assert_eq!(self.exps[at], 0, "removing a variable that occurs");
        let mut exps = self.exps.clone();
        exps.remove(at);
        Monomial { exps }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: Coeff,
}

/// Homogeneity degree of a polynomial. The zero polynomial is homogeneous
/// of every degree, reported as `Any`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomDeg {
    Any,
    Deg(u32),
}

impl HomDeg {
    pub fn matches(&self, d: u32) -> bool {
        match self {
            HomDeg::Any => true,
            HomDeg::Deg(e) => *e == d,
        }
    }

    pub fn degree(&self) -> Option<u32> {
        match self {
            HomDeg::Any => None,
            HomDeg::Deg(d) => Some(*d),
        }
    }
}

/// Sparse multivariate polynomial: terms strictly decreasing in the ring's
/// monomial order, no zero coefficients.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}
impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Polynomial::constant(ring, ring.cone())
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        if ring.cis_zero(&c) {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![Term { mono: Monomial::one(ring.n_vars()), coeff: c }],
        }
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![Term { mono: Monomial::var(ring.n_vars(), i), coeff: ring.cone() }],
        }
    }

    pub fn term(ring: &Ring, c: Coeff, m: Monomial) -> Self {
        assert_eq!(m.n_vars(), ring.n_vars());
        if ring.cis_zero(&c) {
            return Polynomial::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![Term { mono: m, coeff: c }] }
    }

    /// Build from unsorted (monomial, coefficient) pairs, combining equal
    /// monomials and dropping zeros.
    pub fn from_pairs(ring: &Ring, pairs: Vec<(Monomial, Coeff)>) -> Self {
        let mut terms: Vec<Term> =
            pairs.into_iter().map(|(mono, coeff)| Term { mono, coeff }).collect();
        terms.sort_by(|a, b| ring.cmp_monomials(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = ring.cadd(&last.coeff, &t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !ring.cis_zero(&t.coeff));
        Polynomial { ring: ring.clone(), terms: out }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Total degree (max over terms); `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    /// Common total degree of all terms, `Any` for zero, `None` if mixed.
    pub fn is_homogeneous(&self) -> Option<HomDeg> {
        let mut it = self.terms.iter();
        let first = match it.next() {
            None => return Some(HomDeg::Any),
            Some(t) => t.mono.degree(),
        };
        for t in it {
            if t.mono.degree() != first {
                return None;
            }
        }
        Some(HomDeg::Deg(first))
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert!(
            self.ring == other.ring,
            "ring context mismatch: {:?} vs {:?}",
            self.ring,
            other.ring
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        self.merge_with(other, false, None)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        self.merge_with(other, true, None)
    }

    /// `self - c * x^m * other`: the division-step primitive.
    pub fn sub_mul_term(&self, c: &Coeff, m: &Monomial, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        self.merge_with(other, true, Some((c, m)))
    }

    fn merge_with(
        &self,
        other: &Polynomial,
        negate: bool,
        scale: Option<(&Coeff, &Monomial)>,
    ) -> Polynomial {
        let ring = &self.ring;
        let map_term = |t: &Term| -> Term {
            let (mono, coeff) = match scale {
                None => (t.mono.clone(), t.coeff.clone()),
                Some((c, m)) => (t.mono.mul(m), ring.cmul(&t.coeff, c)),
            };
            let coeff = if negate { ring.cneg(&coeff) } else { coeff };
            Term { mono, coeff }
        };
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0usize, 0usize);
        while i < self.terms.len() && j < other.terms.len() {
            let rhs = map_term(&other.terms[j]);
            match ring.cmp_monomials(&self.terms[i].mono, &rhs.mono) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(rhs);
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ring.cadd(&self.terms[i].coeff, &rhs.coeff);
                    if !ring.cis_zero(&c) {
                        out.push(Term { mono: rhs.mono, coeff: c });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        while j < other.terms.len() {
            out.push(map_term(&other.terms[j]));
            j += 1;
        }
        Polynomial { ring: ring.clone(), terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| Term { mono: t.mono.clone(), coeff: self.ring.cneg(&t.coeff) })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scalar_mul(&self, c: &Coeff) -> Polynomial {
        if self.ring.cis_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { mono: t.mono.clone(), coeff: self.ring.cmul(&t.coeff, c) })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Multiply by the single term `c * x^m`. Order-preserving, no re-sort.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if self.ring.cis_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { mono: t.mono.mul(m), coeff: self.ring.cmul(&t.coeff, c) })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        // multiply by the shorter factor termwise
        let (short, long) =
            if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        let mut acc = Polynomial::zero(&self.ring);
        for t in &short.terms {
            acc = acc.merge_with(long, false, Some((&t.coeff, &t.mono)));
        }
        // merge_with(Some) multiplies but does not negate when negate=false
        acc
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Make the leading coefficient 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                if self.ring.cis_one(lc) {
                    self.clone()
                } else {
                    let inv = self.ring.cinv(lc);
                    self.scalar_mul(&inv)
                }
            }
        }
    }

    /// Ring morphism sending `x_i` to `images[i]`. All images must share a
    /// common ring over the same field; the result lives there.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.n_vars(), "one image per variable");
        let target = images
            .first()
            .map(|p| p.ring().clone())
            .unwrap_or_else(|| self.ring.clone());
        for im in images {
            assert!(im.ring() == &target, "images live in different rings");
        }
        assert_eq!(
            target.field(),
            self.ring.field(),
            "substitution cannot change the coefficient field"
        );
        // cache powers per variable
        let max_exp: Vec<u16> = (0..self.ring.n_vars())
            .map(|i| self.terms.iter().map(|t| t.mono.exp(i)).max().unwrap_or(0))
            .collect();
        let mut powers: Vec<Vec<Polynomial>> = Vec::with_capacity(images.len());
        for (i, im) in images.iter().enumerate() {
            let mut v = vec![Polynomial::one(&target)];
            for k in 1..=max_exp[i] as usize {
                let next = v[k - 1].mul(im);
                v.push(next);
            }
            powers.push(v);
        }
        let mut acc = Polynomial::zero(&target);
        for t in &self.terms {
            let mut prod = Polynomial::constant(&target, coeff_into_field(&t.coeff));
            for i in 0..self.ring.n_vars() {
                let e = t.mono.exp(i) as usize;
                if e > 0 {
                    prod = prod.mul(&powers[i][e]);
                }
            }
            acc = acc.add(&prod);
        }
        acc
    }

    /// Specialize every variable to a scalar.
    pub fn eval(&self, point: &[Coeff]) -> Coeff {
        assert_eq!(point.len(), self.ring.n_vars());
        let mut acc = self.ring.czero();
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for i in 0..point.len() {
                for _ in 0..t.mono.exp(i) {
                    v = self.ring.cmul(&v, &point[i]);
                }
            }
            acc = self.ring.cadd(&acc, &v);
        }
        acc
    }

    /// Sparse view: coefficient of a given monomial.
    pub fn coeff_of(&self, m: &Monomial) -> Coeff {
        for t in &self.terms {
            if &t.mono == m {
                return t.coeff.clone();
            }
        }
        self.ring.czero()
    }

    /// Re-sort into a ring with a different monomial order (same variables
    /// and field).
    pub fn in_ring(&self, other: &Ring) -> Polynomial {
        assert_eq!(self.ring.n_vars(), other.n_vars());
        assert_eq!(self.ring.field(), other.field());
        if self.ring == *other {
            return self.clone();
        }
        let pairs = self.terms.iter().map(|t| (t.mono.clone(), t.coeff.clone())).collect();
        Polynomial::from_pairs(other, pairs)
    }

    /// Lift into a ring with `count` extra variables inserted at index `at`.
    pub fn insert_vars(&self, target: &Ring, at: usize, count: usize) -> Polynomial {
        assert_eq!(target.n_vars(), self.ring.n_vars() + count);
        assert_eq!(target.field(), self.ring.field());
        let pairs = self
            .terms
            .iter()
            .map(|t| (t.mono.insert_vars(at, count), t.coeff.clone()))
            .collect();
        Polynomial::from_pairs(target, pairs)
    }

    /// Project into a ring without variable `at`; the variable must not
    /// occur in any term.
    pub fn remove_var(&self, target: &Ring, at: usize) -> Polynomial {
        assert_eq!(target.n_vars() + 1, self.ring.n_vars());
        let pairs = self
            .terms
            .iter()
            .map(|t| (t.mono.remove_var(at), t.coeff.clone()))
            .collect();
        Polynomial::from_pairs(target, pairs)
    }

    /// Exact division: `Some(q)` with `self = q * g`, or `None`.
    pub fn checked_div(&self, g: &Polynomial) -> Option<Polynomial> {
        self.assert_same_ring(g);
        assert!(!g.is_zero(), "division by the zero polynomial");
        let ring = self.ring.clone();
        let g_lm = g.leading_monomial().unwrap().clone();
        let g_lc = g.leading_coeff().unwrap().clone();
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, Coeff)> = Vec::new();
        while let Some(lm) = rem.leading_monomial() {
            let m = lm.checked_div(&g_lm)?;
            let c = ring.cdiv(rem.leading_coeff().unwrap(), &g_lc);
            rem = rem.sub_mul_term(&c, &m, g);
            quot.push((m, c));
        }
        Some(Polynomial::from_pairs(&ring, quot))
    }
}

fn coeff_into_field(c: &Coeff) -> Coeff {
    c.clone()
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (idx, t) in self.terms.iter().enumerate() {
            let cs = t.coeff.display_string(field);
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono_str = monomial_display(&t.mono);
            if mono_str.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{mono_str}")?;
            } else {
                write!(f, "{mag}*{mono_str}")?;
            }
        }
        Ok(())
    }
}

fn monomial_display(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for i in 0..m.n_vars() {
        match m.exp(i) {
            0 => {}
            1 => parts.push(format!("x{i}")),
            e => parts.push(format!("x{i}^{e}")),
        }
    }
    parts.join("*")
}

/// Enumerate all monomials of total degree exactly `d` in `n` variables,
/// in a deterministic order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u16; n];
    fn rec(out: &mut Vec<Monomial>, current: &mut Vec<u16>, var: usize, left: u32) {
        if var + 1 == current.len() {
            current[var] = left as u16;
            out.push(Monomial::from_exps(current));
            return;
        }
        for e in (0..=left).rev() {
            current[var] = e as u16;
            rec(out, current, var + 1, left - e);
        }
    }
    if n == 0 {
        if d == 0 {
            out.push(Monomial::from_exps(&[]));
        }
        return out;
    }
    rec(&mut out, &mut current, 0, d);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_poly;

    fn rq(n: usize) -> Ring {
        Ring::rationals(n)
    }

    #[test]
    fn degrevlex_example() {
        let r = Ring::fp(3);
        // x0^2*x1 vs x0*x1*x2: equal degree, smaller last-variable exponent wins
        let a = parse_poly(&r, "x0^2*x1").unwrap();
        let b = parse_poly(&r, "x0*x1*x2").unwrap();
        assert_eq!(
            r.cmp_monomials(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()),
            Ordering::Greater
        );
    }

    #[test]
    fn order_reflexive() {
        for ord in [MonomialOrder::DegRevLex, MonomialOrder::Lex, MonomialOrder::Block(1)] {
            let r = Ring::new(3, FieldSpec::Prime(DEFAULT_PRIME), ord);
            let m = Monomial::from_exps(&[2, 1, 3]);
            assert_eq!(r.cmp_monomials(&m, &m), Ordering::Equal);
        }
    }

    #[test]
    fn block_order_eliminates() {
        let r = Ring::new(2, FieldSpec::Prime(DEFAULT_PRIME), MonomialOrder::Block(1));
        let x0 = Monomial::from_exps(&[1, 0]);
        let x1cubed = Monomial::from_exps(&[0, 3]);
        assert_eq!(r.cmp_monomials(&x0, &x1cubed), Ordering::Greater);
    }

    #[test]
    fn order_properties_exhaustive() {
        // antisymmetry, transitivity, multiplicativity up to degree 4 in 3 vars
        let mut monos = Vec::new();
        for d in 0..=4 {
            monos.extend(monomials_of_degree(3, d));
        }
        for ord in [MonomialOrder::DegRevLex, MonomialOrder::Lex, MonomialOrder::Block(1)] {
            let r = Ring::new(3, FieldSpec::Prime(DEFAULT_PRIME), ord);
            for a in &monos {
                for b in &monos {
                    let ab = r.cmp_monomials(a, b);
                    assert_eq!(ab, r.cmp_monomials(b, a).reverse());
                    if ab == Ordering::Equal {
                        assert_eq!(a, b);
                    }
                    // multiplicative
                    for c in monos.iter().take(10) {
                        assert_eq!(r.cmp_monomials(&a.mul(c), &b.mul(c)), ab);
                    }
                }
            }
            // transitivity via sort consistency
            let mut sorted = monos.clone();
            sorted.sort_by(|a, b| r.cmp_monomials(a, b));
            for w in sorted.windows(3) {
                if r.cmp_monomials(&w[0], &w[1]) != Ordering::Greater
                    && r.cmp_monomials(&w[1], &w[2]) != Ordering::Greater
                {
                    assert_ne!(r.cmp_monomials(&w[0], &w[2]), Ordering::Greater);
                }
            }
        }
    }

    #[test]
    fn product_of_sum_and_difference() {
        let r = rq(2);
        let f = parse_poly(&r, "x0 + x1").unwrap();
        let g = parse_poly(&r, "x0 - x1").unwrap();
        let expect = parse_poly(&r, "x0^2 - x1^2").unwrap();
        assert_eq!(f.mul(&g), expect);
    }

    #[test]
    fn add_zero_is_identity() {
        let r = Ring::fp(3);
        let p = parse_poly(&r, "x0^2*x1 - 3*x2^3 + 7").unwrap();
        assert_eq!(p.add(&Polynomial::zero(&r)), p);
    }

    #[test]
    fn freshmans_dream_char_two() {
        let r = Ring::fp_p(2, 2);
        let f = parse_poly(&r, "x0 + x1").unwrap();
        let expect = parse_poly(&r, "x0^2 + x1^2").unwrap();
        assert_eq!(f.pow(2), expect);
    }

    #[test]
    fn frobenius_on_random_elements() {
        use rand::Rng;
        for p in [5u64, 7, 11] {
            let r = Ring::fp_p(2, p);
            let mut rng = crate::rng::seeded(42);
            for _ in 0..50 {
                let a = Polynomial::term(
                    &r,
                    Coeff::Fp(rng.gen_range(0..p)),
                    Monomial::var(2, 0),
                );
                let b = Polynomial::term(
                    &r,
                    Coeff::Fp(rng.gen_range(0..p)),
                    Monomial::var(2, 1),
                );
                let lhs = a.add(&b).pow(p as u32);
                let rhs = a.pow(p as u32).add(&b.pow(p as u32));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn substitute_examples() {
        let r = Ring::fp(3);
        let p = parse_poly(&r, "x0*x2").unwrap();
        let images =
            vec![Polynomial::var(&r, 0), Polynomial::var(&r, 1), Polynomial::zero(&r)];
        assert!(p.substitute(&images).is_zero());

        // identity substitution
        let q = parse_poly(&r, "x0^3 - 2*x1*x2 + 5").unwrap();
        let id: Vec<_> = (0..3).map(|i| Polynomial::var(&r, i)).collect();
        assert_eq!(q.substitute(&id), q);
    }

    #[test]
    fn substitute_is_ring_morphism() {
        use rand::Rng;
        for field in [FieldSpec::Prime(DEFAULT_PRIME), FieldSpec::Rationals] {
            let r = Ring::new(3, field, MonomialOrder::DegRevLex);
            let mut rng = crate::rng::seeded(7);
            let trials = if matches!(r.field(), FieldSpec::Rationals) { 100 } else { 1000 };
            for _ in 0..trials {
                let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng| {
                    let mut pairs = Vec::new();
                    for _ in 0..3 {
                        let m = Monomial::from_exps(&[
                            rng.gen_range(0..3u16),
                            rng.gen_range(0..3u16),
                            rng.gen_range(0..2u16),
                        ]);
                        pairs.push((m, r.cfrom_i64(rng.gen_range(-4..5i64))));
                    }
                    Polynomial::from_pairs(&r, pairs)
                };
                let p = rand_poly(&mut rng);
                let q = rand_poly(&mut rng);
                let images: Vec<_> = (0..3).map(|_| rand_poly(&mut rng)).collect();
                assert_eq!(
                    p.add(&q).substitute(&images),
                    p.substitute(&images).add(&q.substitute(&images))
                );
                assert_eq!(
                    p.mul(&q).substitute(&images),
                    p.substitute(&images).mul(&q.substitute(&images))
                );
            }
        }
    }

    #[test]
    fn homogeneity() {
        let r = Ring::fp(4);
        assert_eq!(
            parse_poly(&r, "x0*x3 - x1*x2").unwrap().is_homogeneous(),
            Some(HomDeg::Deg(2))
        );
        assert_eq!(parse_poly(&r, "x0 + x1*x2").unwrap().is_homogeneous(), None);
        assert_eq!(Polynomial::zero(&r).is_homogeneous(), Some(HomDeg::Any));
        assert!(Polynomial::zero(&r).is_homogeneous().unwrap().matches(17));
    }

    #[test]
    fn checked_div_exact() {
        let r = Ring::fp(3);
        let f = parse_poly(&r, "x0^2 - x1^2").unwrap();
        let g = parse_poly(&r, "x0 - x1").unwrap();
        let q = f.checked_div(&g).unwrap();
        assert_eq!(q, parse_poly(&r, "x0 + x1").unwrap());
        assert!(parse_poly(&r, "x0^2 - x1^2 + 1").unwrap().checked_div(&g).is_none());
    }

    #[test]
    fn display_round_trip() {
        let r = Ring::fp(4);
        for s in ["x0^2*x1 - 3*x2^3", "0", "-x0 + 1", "2*x1^5 - x2*x3 + 16001"] {
            let p = parse_poly(&r, s).unwrap();
            let q = parse_poly(&r, &p.to_string()).unwrap();
            assert_eq!(p, q);
        }
    }
}
