//! Dense exact linear algebra over the coefficient field: rank, scalar
//! determinants, and coefficient-matrix extraction from polynomial families.

use std::collections::HashMap;

use crate::ring::{Coeff, Monomial, Polynomial, Ring};

/// Rank by Gaussian elimination; consumes the rows.
pub fn rank(ring: &Ring, rows: Vec<Vec<Coeff>>) -> usize {
    let (_, r) = rank_two_stage(ring, rows, 0);
    r
}

/// Eliminate the first `split` rows, then the rest; returns
/// `(rank of the first block, rank of all rows)`.
pub fn rank_two_stage(
    ring: &Ring,
    mut rows: Vec<Vec<Coeff>>,
    split: usize,
) -> (usize, usize) {
    let ncols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    for row in &mut rows {
        row.resize(ncols, ring.czero());
    }
    let mut pivots: Vec<(usize, Vec<Coeff>)> = Vec::new(); // (pivot col, normalized row)
    let mut rank_at_split = 0;
    let total = rows.len();
    for (idx, mut row) in rows.into_iter().enumerate() {
        if idx == split {
            rank_at_split = pivots.len();
        }
        for (pc, prow) in &pivots {
            if !ring.cis_zero(&row[*pc]) {
                let f = row[*pc].clone();
                for c in *pc..ncols {
                    let delta = ring.cmul(&f, &prow[c]);
                    row[c] = ring.csub(&row[c], &delta);
                }
            }
        }
        if let Some(pc) = row.iter().position(|c| !ring.cis_zero(c)) {
            let inv = ring.cinv(&row[pc]);
            for c in pc..ncols {
                row[c] = ring.cmul(&row[c], &inv);
            }
            pivots.push((pc, row));
        }
    }
    if split >= total {
        rank_at_split = pivots.len();
    }
    (rank_at_split, pivots.len())
}

/// Determinant of a square scalar matrix.
pub fn scalar_det(ring: &Ring, m: &[Vec<Coeff>]) -> Coeff {
    let n = m.len();
    let mut a: Vec<Vec<Coeff>> = m.to_vec();
    let mut det = ring.cone();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !ring.cis_zero(&a[r][col]));
        let Some(p) = pivot else {
            return ring.czero();
        };
        if p != col {
            a.swap(p, col);
            det = ring.cneg(&det);
        }
        det = ring.cmul(&det, &a[col][col]);
        let inv = ring.cinv(&a[col][col]);
        for r in (col + 1)..n {
            if ring.cis_zero(&a[r][col]) {
                continue;
            }
            let f = ring.cmul(&a[r][col], &inv);
            for c in col..n {
                let delta = ring.cmul(&f, &a[col][c]);
                a[r][c] = ring.csub(&a[r][c], &delta);
            }
        }
    }
    det
}

/// Index the monomials occurring across a polynomial family and expand
/// each polynomial as a dense coefficient row.
pub fn coefficient_rows(ring: &Ring, polys: &[Polynomial]) -> Vec<Vec<Coeff>> {
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    for p in polys {
        for t in p.terms() {
            let next = index.len();
            index.entry(t.mono.clone()).or_insert(next);
        }
    }
    let ncols = index.len();
    polys
        .iter()
        .map(|p| {
            let mut row = vec![ring.czero(); ncols];
            for t in p.terms() {
                row[index[&t.mono]] = t.coeff.clone();
            }
            row
        })
        .collect()
}

/// Dimension of the span of a polynomial family.
pub fn span_dimension(ring: &Ring, polys: &[Polynomial]) -> usize {
    rank(ring, coefficient_rows(ring, polys))
}

/// Coefficient row of a linear form over the variable basis.
pub fn linear_form_coeffs(ring: &Ring, p: &Polynomial) -> Vec<Coeff> {
    let mut row = vec![ring.czero(); ring.n_vars()];
    for t in p.terms() {
        assert_eq!(t.mono.degree(), 1, "not a linear form");
        let var = t.mono.support()[0];
        row[var] = t.coeff.clone();
    }
    row
}
