//! Buchberger's algorithm, normal forms, elimination, and syzygies over
//! free modules.
//!
//! Plain Buchberger with the normal selection strategy (minimal lcm total
//! degree, ties by index), the coprimality criterion for ideals, a chain
//! criterion, and full interreduction at the end. Module computations use
//! a position-over-term extension of the ring order, positions compared
//! by index (lower index sorts higher), which is an elimination order on
//! the leading block of positions.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::ring::{Coeff, HomDeg, Monomial, MonomialOrder, Polynomial, Ring};

/// A Gröbner basis, reduced unless flagged otherwise: pairwise no leading
/// term divides another, every element fully reduced against the rest,
/// leading coefficients 1, sorted by leading monomial ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].degree() == Some(0)
    }

    /// Remainder of full division; zero iff the polynomial lies in the ideal.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        let p = p.in_ring(&self.ring);
        let mp = MPoly::from_poly(&p);
        let basis: Vec<MPoly> = self.elements.iter().map(MPoly::from_poly).collect();
        normal_form_m(&self.ring, &mp, &basis).into_poly(&self.ring)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Leading monomials of the basis (the minimal generators of the
    /// leading-term ideal when the basis is reduced).
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial().expect("basis elements are nonzero").clone())
            .collect()
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` with respect to
/// `order`. Deterministic for a fixed input sequence.
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder) -> GroebnerBasis {
    let ring = match gens.first() {
        None => {
            return GroebnerBasis {
                ring: Ring::fp(0).with_order(order),
                elements: Vec::new(),
                reduced: true,
            }
        }
        Some(g) => g.ring().with_order(order),
    };
    for g in gens {
        assert!(
            g.ring().n_vars() == ring.n_vars() && g.ring().field() == ring.field(),
            "generators share a ring context"
        );
    }
    let input: Vec<MPoly> =
        gens.iter().map(|g| MPoly::from_poly(&g.in_ring(&ring))).collect();
    let basis = buchberger_module(&ring, 1, &[0], input, true);
    let elements = basis.into_iter().map(|m| m.into_poly(&ring)).collect();
    GroebnerBasis { ring, elements, reduced: true }
}

/// S-polynomial of two ring elements; exposed for the acceptance property
/// that every S-pair of a returned basis reduces to zero.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let ring = f.ring().clone();
    assert!(g.ring() == &ring);
    let a = MPoly::from_poly(f);
    let b = MPoly::from_poly(g);
    s_poly_m(&ring, &a, &b).into_poly(&ring)
}

/// Generators of the intersection of the ideal with the subring omitting
/// the first `k` variables, read off an elimination basis. The output
/// lives in the input ring (the first `k` variables simply do not occur).
pub fn eliminate(gens: &[Polynomial], k: usize) -> Vec<Polynomial> {
    if gens.is_empty() {
        return Vec::new();
    }
    let gb = buchberger(gens, MonomialOrder::Block(k));
    let original = gens[0].ring().clone();
    gb.elements
        .iter()
        .filter(|g| {
            let lm = g.leading_monomial().expect("nonzero");
            (0..k).all(|i| lm.exp(i) == 0)
        })
        .map(|g| g.in_ring(&original))
        .collect()
}

// ---------------------------------------------------------------------------
// module elements

/// Element of a graded free module: one polynomial per rank position plus
/// the module's twists (position `i` carries a generator of degree
/// `twists[i]`).
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleElement {
    components: Vec<Polynomial>,
    twists: Vec<i64>,
}

impl ModuleElement {
    pub fn new(components: Vec<Polynomial>, twists: Vec<i64>) -> Self {
        assert_eq!(components.len(), twists.len(), "component count equals ambient rank");
        ModuleElement { components, twists }
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|p| p.is_zero())
    }

    /// Homogeneous degree with respect to the twists, if any.
    pub fn degree(&self) -> Option<i64> {
        let mut deg: Option<i64> = None;
        for (i, c) in self.components.iter().enumerate() {
            match c.is_homogeneous() {
                Some(HomDeg::Any) => {}
                Some(HomDeg::Deg(d)) => {
                    let total = d as i64 + self.twists[i];
                    match deg {
                        None => deg = Some(total),
                        Some(t) if t == total => {}
                        Some(_) => return None,
                    }
                }
                None => return None,
            }
        }
        deg.or(Some(i64::MIN)) // zero element: degree is unconstrained
    }
}

/// Generating set of the first syzygy module of `vectors`, which must be
/// homogeneous elements of a common free module. Output twists are the
/// degrees of the input vectors; the returned matrix of syzygies composes
/// with the input matrix to zero, exactly.
pub fn syzygies(vectors: &[ModuleElement]) -> Result<Vec<ModuleElement>> {
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    let rank = vectors[0].rank();
    let twists = vectors[0].twists().to_vec();
    let ring = vectors[0]
        .components
        .iter()
        .map(|p| p.ring().clone())
        .next()
        .expect("rank is positive");
    let mut degrees = Vec::with_capacity(vectors.len());
    for v in vectors {
        if v.rank() != rank || v.twists() != twists.as_slice() {
            return Err(Error::Precondition(
                "syzygy inputs live in different free modules".into(),
            ));
        }
        match v.degree() {
            Some(d) if d != i64::MIN => degrees.push(d),
            _ => return Err(Error::InhomogeneousModuleElement),
        }
    }

    // Tag each vector with a fresh unit position; an elimination basis of
    // the graphs yields the syzygies at the tag positions.
    let tagged: Vec<MPoly> = vectors
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut terms = Vec::new();
            for (pos, comp) in v.components.iter().enumerate() {
                let comp = comp.in_ring(&ring);
                for t in comp.terms() {
                    terms.push(MTerm {
                        pos: pos as u32,
                        mono: t.mono.clone(),
                        coeff: t.coeff.clone(),
                    });
                }
            }
            terms.push(MTerm {
                pos: (rank + i) as u32,
                mono: Monomial::one(ring.n_vars()),
                coeff: ring.cone(),
            });
            MPoly::new(&ring, terms)
        })
        .collect();

    let mut all_twists = twists.clone();
    all_twists.extend(degrees.iter().copied());
    // Pairs inside the tag block are skipped: the S-pair syzygies of the
    // leading block already generate the whole syzygy module, and not
    // completing the tag block keeps the output close to minimal.
    let basis = buchberger_loop(&ring, &all_twists, tagged, false, Some(rank));

    let raw: Vec<MPoly> = basis
        .into_iter()
        .filter(|e| !e.is_zero() && e.terms.iter().all(|t| t.pos as usize >= rank))
        .map(|e| {
            let terms = e
                .terms
                .into_iter()
                .map(|t| MTerm { pos: t.pos - rank as u32, ..t })
                .collect();
            MPoly { terms }
        })
        .collect();
    // span-safe cleanup: drop an element only when it reduces to zero
    // against the kept ones
    let mut syz: Vec<MPoly> = Vec::new();
    let mut sorted = raw;
    sorted.sort_by(|a, b| cmp_mterm(&ring, &a.terms[0], &b.terms[0]));
    for e in sorted {
        let nf = normal_form_m(&ring, &e, &syz);
        if !nf.is_zero() {
            syz.push(nf.monic(&ring));
        }
    }

    Ok(syz
        .into_iter()
        .map(|e| {
            let mut components = vec![Polynomial::zero(&ring); vectors.len()];
            for t in e.terms {
                let add = Polynomial::term(&ring, t.coeff, t.mono);
                components[t.pos as usize] = components[t.pos as usize].add(&add);
            }
            ModuleElement::new(components, degrees.clone())
        })
        .collect())
}

// ---------------------------------------------------------------------------
// internal machinery: sparse module polynomials

#[derive(Debug, Clone)]
pub(crate) struct MTerm {
    pub(crate) pos: u32,
    pub(crate) mono: Monomial,
    pub(crate) coeff: Coeff,
}

#[derive(Debug, Clone)]
pub(crate) struct MPoly {
    // sorted descending: position index ascending, then ring order descending
    pub(crate) terms: Vec<MTerm>,
}

fn cmp_mterm(ring: &Ring, a: &MTerm, b: &MTerm) -> Ordering {
    match a.pos.cmp(&b.pos) {
        Ordering::Less => Ordering::Greater, // lower position index sorts higher
        Ordering::Greater => Ordering::Less,
        Ordering::Equal => ring.cmp_monomials(&a.mono, &b.mono),
    }
}

impl MPoly {
    fn new(ring: &Ring, mut terms: Vec<MTerm>) -> Self {
        terms.sort_by(|a, b| cmp_mterm(ring, b, a));
        let mut out: Vec<MTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.pos == t.pos && last.mono == t.mono => {
                    last.coeff = ring.cadd(&last.coeff, &t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !ring.cis_zero(&t.coeff));
        MPoly { terms: out }
    }

    pub(crate) fn from_poly(p: &Polynomial) -> MPoly {
        MPoly {
            terms: p
                .terms()
                .iter()
                .map(|t| MTerm { pos: 0, mono: t.mono.clone(), coeff: t.coeff.clone() })
                .collect(),
        }
    }

    pub(crate) fn into_poly(self, ring: &Ring) -> Polynomial {
        debug_assert!(self.terms.iter().all(|t| t.pos == 0));
        Polynomial::from_pairs(ring, self.terms.into_iter().map(|t| (t.mono, t.coeff)).collect())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &MTerm {
        &self.terms[0]
    }

    fn monic(mut self, ring: &Ring) -> MPoly {
        if let Some(first) = self.terms.first() {
            if !ring.cis_one(&first.coeff) {
                let inv = ring.cinv(&first.coeff);
                for t in &mut self.terms {
                    t.coeff = ring.cmul(&t.coeff, &inv);
                }
            }
        }
        self
    }
}

/// `a - c * x^m * g`, merging sorted term lists.
fn sub_mul_m(ring: &Ring, a: &[MTerm], c: &Coeff, m: &Monomial, g: &[MTerm]) -> Vec<MTerm> {
    let mut out = Vec::with_capacity(a.len() + g.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() && j < g.len() {
        let gj = &g[j];
        let mapped_mono = gj.mono.mul(m);
        let key = MTerm { pos: gj.pos, mono: mapped_mono, coeff: ring.czero() };
        match cmp_mterm(ring, &a[i], &key) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let coeff = ring.cneg(&ring.cmul(&gj.coeff, c));
                out.push(MTerm { pos: key.pos, mono: key.mono, coeff });
                j += 1;
            }
            Ordering::Equal => {
                let coeff = ring.csub(&a[i].coeff, &ring.cmul(&gj.coeff, c));
                if !ring.cis_zero(&coeff) {
                    out.push(MTerm { pos: key.pos, mono: key.mono, coeff });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while j < g.len() {
        let gj = &g[j];
        out.push(MTerm {
            pos: gj.pos,
            mono: gj.mono.mul(m),
            coeff: ring.cneg(&ring.cmul(&gj.coeff, c)),
        });
        j += 1;
    }
    out
}

/// Full division: every term of the remainder is reducible by no basis lead.
fn normal_form_m(ring: &Ring, p: &MPoly, basis: &[MPoly]) -> MPoly {
    let mut rem: Vec<MTerm> = Vec::new();
    let mut work: Vec<MTerm> = p.terms.clone();
    'outer: while let Some(head) = work.first().cloned() {
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let gl = g.lead();
            if gl.pos == head.pos {
                if let Some(q) = head.mono.checked_div(&gl.mono) {
                    let c = ring.cdiv(&head.coeff, &gl.coeff);
                    work = sub_mul_m(ring, &work, &c, &q, &g.terms);
                    continue 'outer;
                }
            }
        }
        rem.push(head);
        work.remove(0);
    }
    MPoly { terms: rem }
}

fn s_poly_m(ring: &Ring, f: &MPoly, g: &MPoly) -> MPoly {
    let fl = f.lead();
    let gl = g.lead();
    assert_eq!(fl.pos, gl.pos, "S-pair requires matching lead positions");
    let lcm = fl.mono.lcm(&gl.mono);
    let mf = lcm.checked_div(&fl.mono).unwrap();
    let mg = lcm.checked_div(&gl.mono).unwrap();
    // (lcm/lt(f)) f - (lcm/lt(g)) g with monic normalization of both sides
    let cf = ring.cinv(&fl.coeff);
    let scaled_f: Vec<MTerm> = f
        .terms
        .iter()
        .map(|t| MTerm {
            pos: t.pos,
            mono: t.mono.mul(&mf),
            coeff: ring.cmul(&t.coeff, &cf),
        })
        .collect();
    let c = ring.cinv(&gl.coeff);
    MPoly { terms: sub_mul_m(ring, &scaled_f, &c, &mg, &g.terms) }
}

#[derive(PartialEq, Eq)]
struct PairKey {
    degree: i64,
    i: usize,
    j: usize,
}

impl Ord for PairKey {
    fn cmp(&self, other: &Self) -> Ordering {
        // BinaryHeap is a max-heap; invert for minimal degree first
        other
            .degree
            .cmp(&self.degree)
            .then(other.i.cmp(&self.i))
            .then(other.j.cmp(&self.j))
    }
}
impl PartialOrd for PairKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Buchberger on a free module of the given rank, with one twist per
/// position (used to order pairs by true homogeneous degree). Returns the
/// reduced basis. `product_criterion` must be enabled only for rank-1
/// (ideal) inputs.
pub(crate) fn buchberger_module(
    ring: &Ring,
    _rank: usize,
    twists: &[i64],
    input: Vec<MPoly>,
    product_criterion: bool,
) -> Vec<MPoly> {
    let basis = buchberger_loop(ring, twists, input, product_criterion, None);
    interreduce(ring, basis)
}

/// The completion loop, not interreduced. When `skip_tag_block` is set,
/// no pairs are formed between elements whose leads lie at positions at or
/// beyond the threshold: used by the syzygy computation, where those
/// elements are the found syzygies themselves.
fn buchberger_loop(
    ring: &Ring,
    twists: &[i64],
    input: Vec<MPoly>,
    product_criterion: bool,
    skip_tag_block: Option<usize>,
) -> Vec<MPoly> {
    let mut basis: Vec<MPoly> = Vec::new();
    for e in input {
        if !e.is_zero() {
            basis.push(e.monic(ring));
        }
    }

    let mut queue: BinaryHeap<PairKey> = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let push_pair = |queue: &mut BinaryHeap<PairKey>,
                     pending: &mut HashSet<(usize, usize)>,
                     basis: &[MPoly],
                     i: usize,
                     j: usize| {
        let (fi, fj) = (&basis[i], &basis[j]);
        let (li, lj) = (fi.lead(), fj.lead());
        if li.pos != lj.pos {
            return;
        }
        if let Some(m) = skip_tag_block {
            if li.pos as usize >= m {
                return;
            }
        }
        let degree = li.mono.lcm(&lj.mono).degree() as i64 + twists[li.pos as usize];
        queue.push(PairKey { degree, i, j });
        pending.insert((i, j));
    };

    for j in 1..basis.len() {
        for i in 0..j {
            push_pair(&mut queue, &mut pending, &basis, i, j);
        }
    }

    while let Some(PairKey { i, j, .. }) = queue.pop() {
        pending.remove(&(i, j));
        let (li, lj) = (basis[i].lead(), basis[j].lead());
        let lcm = li.mono.lcm(&lj.mono);

        // coprimality criterion (valid for ideals, not modules in general)
        if product_criterion && li.mono.is_coprime(&lj.mono) {
            continue;
        }
        // chain criterion: some k with lead dividing the lcm and both
        // flanking pairs already handled
        let mut skip = false;
        for (k, g) in basis.iter().enumerate() {
            if k == i || k == j {
                continue;
            }
            let lk = g.lead();
            if lk.pos != li.pos || !lk.mono.divides(&lcm) {
                continue;
            }
            let p1 = (i.min(k), i.max(k));
            let p2 = (j.min(k), j.max(k));
            if !pending.contains(&p1) && !pending.contains(&p2) {
                skip = true;
                break;
            }
        }
        if skip {
            continue;
        }

        let s = s_poly_m(ring, &basis[i], &basis[j]);
        let nf = normal_form_m(ring, &s, &basis);
        if !nf.is_zero() {
            let t = basis.len();
            basis.push(nf.monic(ring));
            for i2 in 0..t {
                push_pair(&mut queue, &mut pending, &basis, i2, t);
            }
        }
    }

    interreduce(ring, basis)
}

/// Prune elements whose lead is divisible by another lead, then tail-reduce
/// each survivor; leading coefficients stay 1.
pub(crate) fn interreduce(ring: &Ring, basis: Vec<MPoly>) -> Vec<MPoly> {
    let mut kept: Vec<MPoly> = Vec::new();
    // deterministic scan: smaller leads first so minimal leads survive
    let mut sorted = basis;
    sorted.sort_by(|a, b| cmp_mterm(ring, &a.terms[0], &b.terms[0]));
    for e in sorted {
        let l = e.lead();
        let redundant = kept.iter().any(|k| {
            let kl = k.lead();
            kl.pos == l.pos && kl.mono.divides(&l.mono)
        });
        if !redundant {
            kept.push(e);
        }
    }
    // leading terms are now pairwise indivisible, so a single tail-reduction
    // pass is final
    let snapshot = kept.clone();
    kept.into_iter()
        .enumerate()
        .map(|(idx, e)| {
            let others: Vec<MPoly> = snapshot
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != idx)
                .map(|(_, v)| v.clone())
                .collect();
            normal_form_m(ring, &e, &others).monic(ring)
        })
        .filter(|e| !e.is_zero())
        .collect()
}
