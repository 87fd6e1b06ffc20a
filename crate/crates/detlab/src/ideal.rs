//! Ideal algebra and numerical invariants: sum, product, intersection,
//! quotient, saturation, equality, dimension and height, Hilbert
//! function/series/polynomial, minimal generator counts, hyperplane
//! sections, and Artinian reduction.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use num::BigRational;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, eliminate, GroebnerBasis};
use crate::hilbert::HilbertSeries;
use crate::linalg;
use crate::ring::{monomials_of_degree, Coeff, HomDeg, Monomial, Polynomial, Ring};
use crate::rng::{random_linear_form, seeded};

#[derive(Debug)]
struct Inner {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
    dim_height: OnceLock<(i64, i64)>,
    hilbert: OnceLock<HilbertSeries>,
}

/// A homogeneous ideal: generator list plus a lazily computed reduced
/// Gröbner basis and cached invariants. Cheap to clone; caches are
/// write-once and shared, so concurrent readers trigger at most one
/// computation.
#[derive(Clone)]
pub struct Ideal(Arc<Inner>);

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Ideal(")?;
        for (i, g) in self.0.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl Ideal {
    /// Build from homogeneous generators; zero generators are dropped.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            assert!(g.ring() == ring, "generator outside the ideal's ring");
            if g.is_zero() {
                continue;
            }
            if g.is_homogeneous().is_none() {
                return Err(Error::Precondition(format!(
                    "generators must be homogeneous, got `{g}`"
                )));
            }
            kept.push(g);
        }
        Ok(Ideal(Arc::new(Inner {
            ring: ring.clone(),
            gens: kept,
            gb: OnceLock::new(),
            dim_height: OnceLock::new(),
            hilbert: OnceLock::new(),
        })))
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, Vec::new()).expect("no generators")
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("constant generator")
    }

    /// The irrelevant maximal ideal `(x0, ..., x{n-1})`.
    pub fn irrelevant(ring: &Ring) -> Ideal {
        let gens = (0..ring.n_vars()).map(|i| Polynomial::var(ring, i)).collect();
        Ideal::new(ring, gens).expect("variables are homogeneous")
    }

    /// `m^t`: all monomials of total degree `t`.
    pub fn irrelevant_power(ring: &Ring, t: u32) -> Ideal {
        let gens = monomials_of_degree(ring.n_vars(), t)
            .into_iter()
            .map(|m| Polynomial::term(ring, ring.cone(), m))
            .collect();
        Ideal::new(ring, gens).expect("monomials are homogeneous")
    }

    /// Ideal of all `s x s` minors of a matrix.
    pub fn of_minors(m: &crate::matrix::PolyMatrix, s: usize) -> Result<Ideal> {
        Ideal::new(m.ring(), m.minors(s)?)
    }

    fn with_gb(ring: &Ring, gb: GroebnerBasis) -> Ideal {
        let inner = Inner {
            ring: ring.clone(),
            gens: gb.elements().to_vec(),
            gb: OnceLock::new(),
            dim_height: OnceLock::new(),
            hilbert: OnceLock::new(),
        };
        let _ = inner.gb.set(gb);
        Ideal(Arc::new(inner))
    }

    pub fn ring(&self) -> &Ring {
        &self.0.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.0.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.0.gens.is_empty()
    }

    /// Reduced Gröbner basis in the ring's order, computed once and cached.
    pub fn groebner_basis(&self) -> &GroebnerBasis {
        self.0.gb.get_or_init(|| buchberger(&self.0.gens, self.0.ring.order()))
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.groebner_basis().contains(p)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.generators().iter().all(|g| self.contains(g))
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.groebner_basis().is_unit_ideal()
    }

    /// True iff the reduced Gröbner bases coincide.
    pub fn equal(&self, other: &Ideal) -> bool {
        assert!(self.ring() == other.ring(), "ring context mismatch");
        self.groebner_basis().elements() == other.groebner_basis().elements()
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        assert!(self.ring() == other.ring(), "ring context mismatch");
        let mut gens = self.0.gens.clone();
        gens.extend(other.0.gens.iter().cloned());
        Ideal::new(&self.0.ring, gens).expect("generators stay homogeneous")
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        assert!(self.ring() == other.ring(), "ring context mismatch");
        let mut gens = Vec::with_capacity(self.0.gens.len() * other.0.gens.len());
        for f in &self.0.gens {
            for g in &other.0.gens {
                gens.push(f.mul(g));
            }
        }
        Ideal::new(&self.0.ring, gens).expect("products stay homogeneous")
    }

    pub fn square(&self) -> Ideal {
        self.product(self)
    }

    pub fn multiply_poly(&self, f: &Polynomial) -> Ideal {
        let gens = self.0.gens.iter().map(|g| g.mul(f)).collect();
        Ideal::new(&self.0.ring, gens).expect("multiples stay homogeneous")
    }

    /// Intersection via the auxiliary-variable construction
    /// `<t*I, (1-t)*J> ∩ k[x]` with one extra eliminated variable.
    pub fn intersect(&self, other: &Ideal) -> Ideal {
        assert!(self.ring() == other.ring(), "ring context mismatch");
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ideal::zero(&self.0.ring);
        }
        let ring = &self.0.ring;
        let ext = ring.with_vars(ring.n_vars() + 1);
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = Polynomial::one(&ext).sub(&t);
        let mut gens = Vec::new();
        for g in &self.0.gens {
            gens.push(g.insert_vars(&ext, 0, 1).mul(&t));
        }
        for g in &other.0.gens {
            gens.push(g.insert_vars(&ext, 0, 1).mul(&one_minus_t));
        }
        let eliminated = eliminate(&gens, 1);
        let projected: Vec<Polynomial> =
            eliminated.iter().map(|g| g.remove_var(ring, 0)).collect();
        // the elimination ideal is homogeneous even though the working
        // ideal is not; re-reducing restores homogeneous generators
        let gb = buchberger(&projected, ring.order());
        if gb.is_zero_ideal() {
            return Ideal::zero(ring);
        }
        Ideal::with_gb(ring, gb)
    }

    /// `(I : g)` computed as `(I ∩ (g)) / g`.
    pub fn quotient_poly(&self, g: &Polynomial) -> Ideal {
        assert!(g.ring() == self.ring(), "ring context mismatch");
        if g.is_zero() {
            return Ideal::unit(&self.0.ring);
        }
        if g.degree() == Some(0) {
            return self.clone();
        }
        assert!(g.is_homogeneous().is_some(), "quotient by a homogeneous polynomial");
        let principal = Ideal::new(&self.0.ring, vec![g.clone()]).expect("homogeneous");
        let meet = self.intersect(&principal);
        let gens = meet
            .generators()
            .iter()
            .map(|f| f.checked_div(g).expect("intersection elements are multiples"))
            .collect();
        Ideal::new(&self.0.ring, gens).expect("exact quotients stay homogeneous")
    }

    /// `(I : J) = ∩_{g in J} (I : g)`.
    pub fn quotient(&self, other: &Ideal) -> Ideal {
        assert!(self.ring() == other.ring(), "ring context mismatch");
        if other.is_zero_ideal() {
            return Ideal::unit(&self.0.ring);
        }
        let mut acc: Option<Ideal> = None;
        for g in other.generators() {
            let q = self.quotient_poly(g);
            acc = Some(match acc {
                None => q,
                Some(prev) => prev.intersect(&q),
            });
        }
        acc.expect("at least one generator")
    }

    /// Stable value of the iterated quotient `(I : J) : J : ...`.
    pub fn saturate(&self, other: &Ideal) -> Ideal {
        let mut current = self.clone();
        loop {
            let next = current.quotient(other);
            if next.equal(&current) {
                return current;
            }
            current = next;
        }
    }

    /// Saturation with respect to the irrelevant maximal ideal.
    pub fn saturate_irrelevant(&self) -> Ideal {
        self.saturate(&Ideal::irrelevant(&self.0.ring))
    }

    pub fn is_saturated(&self) -> bool {
        self.quotient(&Ideal::irrelevant(&self.0.ring)).equal(self)
    }

    /// Radical membership via the one-extra-variable trick:
    /// `f ∈ √I  iff  1 ∈ I + (1 - t*f)`.
    pub fn radical_contains(&self, f: &Polynomial) -> bool {
        assert!(f.ring() == self.ring(), "ring context mismatch");
        if f.is_zero() {
            return true;
        }
        let ring = &self.0.ring;
        let ext = ring.with_vars(ring.n_vars() + 1);
        let t = Polynomial::var(&ext, 0);
        let mut gens: Vec<Polynomial> =
            self.0.gens.iter().map(|g| g.insert_vars(&ext, 0, 1)).collect();
        gens.push(Polynomial::one(&ext).sub(&t.mul(&f.insert_vars(&ext, 0, 1))));
        buchberger(&gens, ext.order()).is_unit_ideal()
    }

    // ---- numerical invariants -------------------------------------------

    /// `(krull_dim of R/I, height)`. The unit ideal reports the sentinel
    /// `(-1, n_vars + 1)`; the zero ideal reports `(n_vars, 0)`.
    pub fn dimension(&self) -> (i64, i64) {
        *self.0.dim_height.get_or_init(|| {
            let n = self.0.ring.n_vars() as i64;
            let gb = self.groebner_basis();
            if gb.is_zero_ideal() {
                return (n, 0);
            }
            if gb.is_unit_ideal() {
                return (-1, n + 1);
            }
            let supports: Vec<Vec<usize>> =
                gb.leading_monomials().iter().map(|m| m.support()).collect();
            let dim = n - min_cover(&supports) as i64;
            (dim, n - dim)
        })
    }

    pub fn krull_dim(&self) -> i64 {
        self.dimension().0
    }

    pub fn height(&self) -> i64 {
        self.dimension().1
    }

    /// Hilbert series of `R/I`, from the leading-term ideal.
    pub fn hilbert_series(&self) -> &HilbertSeries {
        self.0.hilbert.get_or_init(|| {
            let gb = self.groebner_basis();
            HilbertSeries::from_monomial_generators(
                &gb.leading_monomials(),
                self.0.ring.n_vars(),
            )
        })
    }

    pub fn hilbert_function(&self, d: i64) -> i128 {
        self.hilbert_series().hilbert_function(d)
    }

    pub fn hilbert_polynomial(&self) -> Vec<BigRational> {
        self.hilbert_series().hilbert_polynomial()
    }

    /// Degree of the scheme cut out by the ideal.
    pub fn degree(&self) -> i64 {
        self.hilbert_series().dimension_degree().1
    }

    /// Graded minimal number of generators: in each degree `d`,
    /// `dim (I)_d - dim (m·I)_d`, computed as exact ranks of the spans of
    /// monomial multiples of the generators. Zero beyond the largest
    /// generator degree.
    pub fn mu_graded(&self) -> BTreeMap<u32, u64> {
        let mut out = BTreeMap::new();
        if self.0.gens.is_empty() {
            return out;
        }
        let ring = &self.0.ring;
        let degrees: Vec<u32> = self
            .0
            .gens
            .iter()
            .map(|g| g.degree().expect("nonzero generators"))
            .collect();
        let dmin = *degrees.iter().min().unwrap();
        let dmax = *degrees.iter().max().unwrap();
        for d in dmin..=dmax {
            // rows for (m I)_d first, then the degree-d generators
            let mut polys: Vec<Polynomial> = Vec::new();
            for (g, &e) in self.0.gens.iter().zip(&degrees) {
                if e < d {
                    for m in monomials_of_degree(ring.n_vars(), d - e) {
                        polys.push(g.mul_term(&ring.cone(), &m));
                    }
                }
            }
            let split = polys.len();
            for (g, &e) in self.0.gens.iter().zip(&degrees) {
                if e == d {
                    polys.push(g.clone());
                }
            }
            if polys.is_empty() {
                continue;
            }
            let rows = linalg::coefficient_rows(ring, &polys);
            let (rank_m_part, rank_total) = linalg::rank_two_stage(ring, rows, split);
            let mu_d = (rank_total - rank_m_part) as u64;
            if mu_d > 0 {
                out.insert(d, mu_d);
            }
        }
        out
    }

    /// Cardinality of a minimal homogeneous generating set.
    pub fn mu(&self) -> u64 {
        self.mu_graded().values().sum()
    }

    // ---- sections ---------------------------------------------------------

    /// Section by the hyperplane `H = 0`: substitute the pivot variable
    /// (largest index with nonzero coefficient) and drop it, producing
    /// `I + (H) / (H)` in one fewer variable.
    pub fn hyperplane_section(&self, h: &Polynomial) -> Result<Ideal> {
        assert!(h.ring() == self.ring(), "ring context mismatch");
        if h.is_zero() || h.is_homogeneous() != Some(HomDeg::Deg(1)) {
            return Err(Error::NotLinearForm);
        }
        let ring = &self.0.ring;
        let n = ring.n_vars();
        let pivot = (0..n)
            .rev()
            .find(|&i| !ring.cis_zero(&h.coeff_of(&Monomial::var(n, i))))
            .expect("nonzero linear form has a pivot");
        let c = h.coeff_of(&Monomial::var(n, pivot));
        // x_pivot = x_pivot - H / c  (kills the pivot variable)
        let image = Polynomial::var(ring, pivot).sub(&h.scalar_mul(&ring.cinv(&c)));
        let images: Vec<Polynomial> = (0..n)
            .map(|i| if i == pivot { image.clone() } else { Polynomial::var(ring, i) })
            .collect();
        let target = ring.with_vars(n - 1);
        let gens: Vec<Polynomial> = self
            .0
            .gens
            .iter()
            .map(|g| g.substitute(&images).remove_var(&target, pivot))
            .collect();
        Ideal::new(&target, gens)
    }

    /// Section plus a flag reporting whether the result is saturated.
    pub fn hyperplane_section_checked(&self, h: &Polynomial) -> Result<(Ideal, bool)> {
        let section = self.hyperplane_section(h)?;
        let saturated = section.is_saturated();
        Ok((section, saturated))
    }

    /// Iterated sections by seeded random linear forms until the quotient
    /// ring is Artinian. Each form must be a nonzerodivisor; after 10
    /// rejected draws in one step the seed is declared non-generic.
    /// Returns the reduction and the forms used (each in the ring it was
    /// drawn from).
    pub fn artinian_reduction(&self, seed: u64) -> Result<(Ideal, Vec<Polynomial>)> {
        let mut rng = seeded(seed);
        let mut current = self.clone();
        let mut forms = Vec::new();
        while current.krull_dim() > 0 {
            let mut stepped = false;
            for _ in 0..10 {
                let h = random_linear_form(current.ring(), &mut rng);
                if current.quotient_poly(&h).equal(&current) {
                    forms.push(h.clone());
                    current = current.hyperplane_section(&h)?;
                    stepped = true;
                    break;
                }
            }
            if !stepped {
                return Err(Error::NonGenericSeed(10));
            }
        }
        Ok((current, forms))
    }
}

/// Smallest number of variables meeting the support of every generator
/// (the height of a monomial ideal); branch and bound on the shortest
/// support.
fn min_cover(supports: &[Vec<usize>]) -> usize {
    // inclusion-minimal supports suffice
    let mut sets: Vec<Vec<usize>> = Vec::new();
    for s in supports {
        if !sets.iter().any(|t| t.iter().all(|v| s.contains(v))) {
            sets.retain(|t| !s.iter().all(|v| t.contains(v)));
            sets.push(s.clone());
        }
    }
    fn rec(sets: &[Vec<usize>], best: usize) -> usize {
        if sets.is_empty() {
            return 0;
        }
        if best == 0 {
            return usize::MAX;
        }
        let shortest = sets.iter().min_by_key(|s| s.len()).unwrap();
        let mut local = usize::MAX;
        for &v in shortest {
            let remaining: Vec<Vec<usize>> =
                sets.iter().filter(|s| !s.contains(&v)).cloned().collect();
            let sub = rec(&remaining, local.saturating_sub(1).min(best - 1));
            if sub != usize::MAX {
                local = local.min(1 + sub);
            }
        }
        local
    }
    rec(&sets, usize::MAX)
}

/// Sum of a family of ideals.
pub fn ideal_sum(ideals: &[Ideal]) -> Ideal {
    let first = ideals.first().expect("nonempty family");
    let mut acc = first.clone();
    for next in &ideals[1..] {
        acc = acc.sum(next);
    }
    acc
}

/// Intersection of a family of ideals.
pub fn ideal_intersection(ideals: &[Ideal]) -> Ideal {
    let first = ideals.first().expect("nonempty family");
    let mut acc = first.clone();
    for next in &ideals[1..] {
        acc = acc.intersect(next);
    }
    acc
}

/// A linear form given by its coefficient vector.
pub fn linear_form(ring: &Ring, coeffs: &[Coeff]) -> Polynomial {
    assert_eq!(coeffs.len(), ring.n_vars());
    let mut acc = Polynomial::zero(ring);
    for (i, c) in coeffs.iter().enumerate() {
        acc = acc.add(&Polynomial::var(ring, i).scalar_mul(c));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::hilbert_function_brute_force;
    use crate::io::parse_poly;

    fn ideal(ring: &Ring, gens: &[&str]) -> Ideal {
        let polys = gens.iter().map(|s| parse_poly(ring, s).unwrap()).collect();
        Ideal::new(ring, polys).unwrap()
    }

    fn veronese_ideal(ring: &Ring) -> Ideal {
        // 2x2 minors of the generic symmetric 3x3 matrix in 6 variables
        ideal(
            ring,
            &[
                "x0*x3 - x1^2",
                "x0*x4 - x1*x2",
                "x1*x4 - x2*x3",
                "x0*x5 - x2^2",
                "x1*x5 - x2*x4",
                "x3*x5 - x4^2",
            ],
        )
    }

    #[test]
    fn quotient_by_unit_ideal_is_identity() {
        let r = Ring::fp(3);
        let i = ideal(&r, &["x0*x1", "x2^2"]);
        let q = i.quotient(&Ideal::unit(&r));
        assert!(q.equal(&i));
    }

    #[test]
    fn equality_examples() {
        let r = Ring::fp(2);
        let a = ideal(&r, &["x0"]);
        let b = ideal(&r, &["x0^2"]);
        assert!(!a.equal(&b));
        let i = ideal(&r, &["x0*x1", "x0^2"]);
        assert!(i.equal(&i.sum(&Ideal::zero(&r))));
    }

    #[test]
    fn point_square_is_saturated() {
        // I_P^2 for the coordinate point P = [0:0:0:1] in P^3
        let r = Ring::fp(4);
        let p = ideal(&r, &["x0", "x1", "x2"]);
        let p2 = p.square();
        let q = p2.quotient(&Ideal::irrelevant(&r));
        assert!(q.equal(&p2));
        assert!(p2.is_saturated());
        assert!(p2.saturate_irrelevant().equal(&p2));
    }

    #[test]
    fn containment_lattice_properties() {
        let r = Ring::fp(4);
        let i = ideal(&r, &["x0*x1 - x2^2", "x1*x3"]);
        let j = ideal(&r, &["x0*x3", "x1^2 - x0*x2"]);
        let meet = i.intersect(&j);
        let join = i.sum(&j);
        let prod = i.product(&j);
        for g in meet.generators() {
            assert!(i.contains(g) && j.contains(g));
        }
        for g in i.generators() {
            assert!(join.contains(g));
        }
        for g in prod.generators() {
            assert!(meet.contains(g));
        }
    }

    #[test]
    fn dimension_examples() {
        let r = Ring::fp(3);
        let i = ideal(&r, &["x0*x1", "x0*x2"]);
        assert_eq!(i.dimension(), (2, 1));

        // squarefree degree-2 monomials in 5 variables: height 5 + 1 - 2 = 4
        let r5 = Ring::fp(5);
        let mut gens = Vec::new();
        for a in 0..5 {
            for b in (a + 1)..5 {
                gens.push(format!("x{a}*x{b}"));
            }
        }
        let refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
        let sq = ideal(&r5, &refs);
        assert_eq!(sq.height(), 4);

        // Veronese: codimension 3 in 6 variables
        let r6 = Ring::fp(6);
        assert_eq!(veronese_ideal(&r6).dimension(), (3, 3));

        assert_eq!(Ideal::zero(&r).dimension(), (3, 0));
        assert_eq!(Ideal::unit(&r).dimension(), (-1, 4));
    }

    #[test]
    fn hilbert_series_consistency_with_brute_force() {
        let r = Ring::fp(4);
        let samples = vec![
            ideal(&r, &["x0*x3 - x1*x2", "x0*x2 - x1^2", "x1*x3 - x2^2"]),
            ideal(&r, &["x0^2", "x1^3"]),
            Ideal::irrelevant_power(&r, 3),
            Ideal::zero(&r),
        ];
        for i in &samples {
            let gb = i.groebner_basis();
            let lt = gb.leading_monomials();
            for d in 0..=8 {
                assert_eq!(
                    i.hilbert_function(d as i64),
                    hilbert_function_brute_force(&lt, 4, d)
                );
            }
        }
    }

    #[test]
    fn hilbert_polynomial_agrees_with_function_eventually() {
        let r = Ring::fp(4);
        let i = ideal(&r, &["x0*x3 - x1*x2", "x0*x2 - x1^2", "x1*x3 - x2^2"]);
        let p = i.hilbert_polynomial();
        // twisted cubic: HP(d) = 3d + 1
        assert_eq!(p.len(), 2);
        for d in 6..11 {
            let val: BigRational = p
                .iter()
                .enumerate()
                .map(|(k, c)| {
                    c * BigRational::from(num::BigInt::from((d as i64).pow(k as u32)))
                })
                .sum();
            assert_eq!(val, BigRational::from(num::BigInt::from(i.hilbert_function(d))));
        }
    }

    #[test]
    fn quartic_normal_curve_hilbert_data() {
        // brute-force monomial counting up to degree 10 pins the function;
        // the polynomial 4t + 1 follows
        let r = Ring::fp(5);
        let i = ideal(
            &r,
            &[
                "x0*x2 - x1^2",
                "x0*x3 - x1*x2",
                "x0*x4 - x1*x3",
                "x1*x3 - x2^2",
                "x1*x4 - x2*x3",
                "x2*x4 - x3^2",
            ],
        );
        let lt = i.groebner_basis().leading_monomials();
        for d in 0..=10u32 {
            assert_eq!(
                i.hilbert_function(d as i64),
                hilbert_function_brute_force(&lt, 5, d)
            );
            if d >= 1 {
                assert_eq!(i.hilbert_function(d as i64), 4 * d as i128 + 1);
            }
        }
        let hp = i.hilbert_polynomial();
        let q = |v: i64| BigRational::from(num::BigInt::from(v));
        assert_eq!(hp, vec![q(1), q(4)]);
    }

    #[test]
    fn zero_ideal_hilbert_function_is_binomial() {
        let r = Ring::fp(5);
        let z = Ideal::zero(&r);
        for d in 0..6i64 {
            assert_eq!(z.hilbert_function(d), crate::hilbert::binom_i128(4 + d, 4));
        }
    }

    #[test]
    fn mu_examples() {
        // m^t in n variables has C(n+t-1, t) minimal generators
        for (n, t) in [(2u32, 2u32), (3, 2), (3, 3), (4, 2)] {
            let r = Ring::fp(n as usize);
            let i = Ideal::irrelevant_power(&r, t);
            assert_eq!(i.mu(), crate::matrix::binomial((n + t - 1) as u64, t as u64));
        }
        // principal ideal
        let r = Ring::fp(3);
        assert_eq!(ideal(&r, &["x0^2*x1 - x2^3"]).mu(), 1);
        // Veronese has 6 minimal generators, all in degree 2
        let r6 = Ring::fp(6);
        let v = veronese_ideal(&r6);
        assert_eq!(v.mu(), 6);
        assert_eq!(v.mu_graded().get(&2), Some(&6));
        // redundant generating sets do not inflate mu
        let redundant = ideal(&r, &["x0", "x0^2", "x0*x1 + x1^2", "x1^2"]);
        assert_eq!(redundant.mu(), 2);
    }

    #[test]
    fn hyperplane_section_drops_dimension() {
        let r6 = Ring::fp(6);
        let v = veronese_ideal(&r6);
        let r4 = Ring::fp(4);
        let tc = ideal(&r4, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]);
        for seed in 0..50u64 {
            let mut rng = seeded(seed);
            let target = if seed % 2 == 0 { &v } else { &tc };
            let h = random_linear_form(target.ring(), &mut rng);
            let s = target.hyperplane_section(&h).unwrap();
            assert_eq!(s.krull_dim(), target.krull_dim() - 1, "seed {seed}");
        }
    }

    #[test]
    fn section_of_veronese_is_a_quartic_curve() {
        let r6 = Ring::fp(6);
        let v = veronese_ideal(&r6);
        let h = random_linear_form(&r6, &mut seeded(17));
        let (s, saturated) = v.hyperplane_section_checked(&h).unwrap();
        assert!(saturated);
        let p = s.hilbert_polynomial();
        let four = BigRational::from(num::BigInt::from(4));
        let one = BigRational::from(num::BigInt::from(1));
        assert_eq!(p, vec![one, four]);
    }

    #[test]
    fn section_of_cone_recovers_the_base() {
        // cone over the twisted cubic: generators do not involve the last
        // variable; the section by it returns the curve
        let r5 = Ring::fp(5);
        let cone = ideal(&r5, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]);
        let h = Polynomial::var(&r5, 4);
        let s = cone.hyperplane_section(&h).unwrap();
        let r4 = Ring::fp(4);
        let base = ideal(&r4, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]);
        assert!(s.equal(&base));
    }

    #[test]
    fn artinian_reduction_of_artinian_ideal_is_identity() {
        let r = Ring::fp(3);
        let i = Ideal::irrelevant_power(&r, 4);
        let (red, forms) = i.artinian_reduction(1).unwrap();
        assert!(forms.is_empty());
        assert!(red.equal(&i));
    }

    #[test]
    fn artinian_reduction_of_veronese_is_square_of_max_ideal() {
        // three general sections of the Veronese surface leave m^2 in three
        // variables: the h-vector (1, 3) forces degree-2 vanishing
        let r6 = Ring::fp(6);
        let v = veronese_ideal(&r6);
        let (red, forms) = v.artinian_reduction(5).unwrap();
        assert_eq!(forms.len(), 3);
        let r3 = Ring::fp(3);
        assert!(red.equal(&Ideal::irrelevant_power(&r3, 2)));
    }

    #[test]
    fn radical_membership() {
        let r = Ring::fp(3);
        let i = ideal(&r, &["x0^2", "x1^3"]);
        assert!(i.radical_contains(&parse_poly(&r, "x0").unwrap()));
        assert!(i.radical_contains(&parse_poly(&r, "x0*x1 + x1^2").unwrap()));
        assert!(!i.radical_contains(&parse_poly(&r, "x2").unwrap()));
    }

    #[test]
    fn saturation_strips_irrelevant_components() {
        let r = Ring::fp(3);
        // (x0) ∩ m^2: saturates to (x0)
        let line = ideal(&r, &["x0"]);
        let fat = line.intersect(&Ideal::irrelevant_power(&r, 2));
        assert!(!fat.equal(&line));
        assert!(fat.saturate_irrelevant().equal(&line));
        assert!(!fat.is_saturated());
    }

    #[test]
    fn dimension_agrees_with_series_route() {
        let r = Ring::fp(5);
        let samples = vec![
            ideal(&r, &["x0*x1", "x2*x3", "x0*x4"]),
            ideal(&r, &["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]),
            Ideal::irrelevant_power(&r, 2),
            ideal(&r, &["x0"]),
        ];
        for i in &samples {
            assert_eq!(i.krull_dim(), i.hilbert_series().dimension_degree().0);
        }
    }

    #[test]
    fn dimension_of_random_monomial_ideals_matches_two_oracles() {
        use rand::Rng;
        // the covering recursion vs the series route vs brute-force
        // minimum covers over all variable subsets
        let brute_min_cover = |supports: &[Vec<usize>], n: usize| -> usize {
            let mut best = n + 1;
            for mask in 0u32..(1 << n) {
                let covers = supports.iter().all(|s| s.iter().any(|&v| mask & (1 << v) != 0));
                if covers {
                    best = best.min(mask.count_ones() as usize);
                }
            }
            best
        };
        for seed in 0..100u64 {
            let mut rng = seeded(seed);
            let n = rng.gen_range(2..=6usize);
            let r = Ring::fp(n);
            let mut gens = Vec::new();
            let mut supports = Vec::new();
            for _ in 0..rng.gen_range(1..=6) {
                let mut exps = vec![0u16; n];
                for e in exps.iter_mut() {
                    if rng.gen_bool(0.45) {
                        *e = rng.gen_range(1..=3);
                    }
                }
                if exps.iter().all(|&e| e == 0) {
                    continue;
                }
                let m = Monomial::from_exps(&exps);
                supports.push(m.support());
                gens.push(Polynomial::term(&r, r.cone(), m));
            }
            if gens.is_empty() {
                continue;
            }
            let i = Ideal::new(&r, gens).unwrap();
            let expected_dim = n as i64 - brute_min_cover(&supports, n) as i64;
            assert_eq!(i.krull_dim(), expected_dim, "seed {seed}");
            assert_eq!(
                i.krull_dim(),
                i.hilbert_series().dimension_degree().0,
                "seed {seed}"
            );
        }
    }
}
