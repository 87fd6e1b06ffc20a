//! Homogeneous polynomial matrices: degree matrices, minors with memoized
//! Laplace expansion, row/column surgery, and 1-genericity tests.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg;
use crate::par;
use crate::ring::{Coeff, HomDeg, Polynomial, Ring};
use crate::rng::{seeded, SeededRng};

/// A `t x q` grid of polynomials over a shared ring, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(ring: &Ring, rows: Vec<Vec<Polynomial>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged rows");
            for e in row {
                assert!(e.ring() == ring, "entry outside the matrix ring");
                entries.push(e);
            }
        }
        PolyMatrix { ring: ring.clone(), rows: nrows, cols: ncols, entries }
    }

    pub fn from_fn(
        ring: &Ring,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Polynomial,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { ring: ring.clone(), rows, cols, entries }
    }

    pub fn zero(ring: &Ring, rows: usize, cols: usize) -> Self {
        PolyMatrix::from_fn(ring, rows, cols, |_, _| Polynomial::zero(ring))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, p: Polynomial) {
        assert!(p.ring() == &self.ring);
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> Vec<Polynomial> {
        (0..self.cols).map(|j| self.entry(i, j).clone()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.entry(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ring, self.cols, self.rows, |i, j| self.entry(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "matrix shapes do not compose");
        PolyMatrix::from_fn(&self.ring, self.rows, other.cols, |i, j| {
            let mut acc = Polynomial::zero(&self.ring);
            for k in 0..self.cols {
                acc = acc.add(&self.entry(i, k).mul(other.entry(k, j)));
            }
            acc
        })
    }

    /// Left-multiply by an invertible scalar matrix: recombines rows.
    pub fn row_ops(&self, g: &[Vec<Coeff>]) -> Result<PolyMatrix> {
        assert_eq!(g.len(), self.rows, "operation matrix must be t x t");
        for row in g {
            assert_eq!(row.len(), self.rows);
        }
        if self.ring.cis_zero(&linalg::scalar_det(&self.ring, g)) {
            return Err(Error::Singular);
        }
        Ok(PolyMatrix::from_fn(&self.ring, self.rows, self.cols, |i, j| {
            let mut acc = Polynomial::zero(&self.ring);
            for k in 0..self.rows {
                acc = acc.add(&self.entry(k, j).scalar_mul(&g[i][k]));
            }
            acc
        }))
    }

    /// Right-multiply by an invertible scalar matrix: recombines columns.
    pub fn col_ops(&self, h: &[Vec<Coeff>]) -> Result<PolyMatrix> {
        assert_eq!(h.len(), self.cols, "operation matrix must be q x q");
        if self.ring.cis_zero(&linalg::scalar_det(&self.ring, h)) {
            return Err(Error::Singular);
        }
        Ok(PolyMatrix::from_fn(&self.ring, self.rows, self.cols, |i, j| {
            let mut acc = Polynomial::zero(&self.ring);
            for k in 0..self.cols {
                acc = acc.add(&self.entry(i, k).scalar_mul(&h[k][j]));
            }
            acc
        }))
    }

    pub fn delete_row(&self, i: usize) -> PolyMatrix {
        assert!(i < self.rows);
        PolyMatrix::from_fn(&self.ring, self.rows - 1, self.cols, |r, c| {
            self.entry(if r < i { r } else { r + 1 }, c).clone()
        })
    }

    pub fn delete_column(&self, j: usize) -> PolyMatrix {
        assert!(j < self.cols);
        PolyMatrix::from_fn(&self.ring, self.rows, self.cols - 1, |r, c| {
            self.entry(r, if c < j { c } else { c + 1 }).clone()
        })
    }

    /// Insert a column at position `j`; the result must stay homogeneous.
    pub fn insert_column(&self, j: usize, col: &[Polynomial]) -> Result<PolyMatrix> {
        assert!(j <= self.cols);
        assert_eq!(col.len(), self.rows, "column length must match row count");
        let rows = (0..self.rows)
            .map(|i| {
                let mut row = self.row(i);
                row.insert(j, col[i].clone());
                row
            })
            .collect();
        let out = PolyMatrix::new(&self.ring, rows);
        out.degree_matrix()?;
        Ok(out)
    }

    pub fn insert_row(&self, i: usize, row: &[Polynomial]) -> Result<PolyMatrix> {
        assert!(i <= self.rows);
        assert_eq!(row.len(), self.cols, "row length must match column count");
        let mut rows: Vec<Vec<Polynomial>> = (0..self.rows).map(|r| self.row(r)).collect();
        rows.insert(i, row.to_vec());
        let out = PolyMatrix::new(&self.ring, rows);
        out.degree_matrix()?;
        Ok(out)
    }

    /// All `s x s` minors, indexed by row subsets (lexicographic) and then
    /// column subsets (lexicographic). Shared sub-determinants are memoized
    /// across column subsets.
    pub fn minors(&self, s: usize) -> Result<Vec<Polynomial>> {
        if s == 0 || s > self.rows || s > self.cols {
            return Err(Error::Shape(format!(
                "minor size {s} out of range for a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if self.cols > 60 {
            return Err(Error::TooLarge(
                "minor extraction caps at 60 columns (subset bitmasks)".into(),
            ));
        }
        let row_sets = combinations(self.rows, s);
        let mut out = Vec::new();
        for rows in &row_sets {
            out.extend(self.minors_of_rows(rows));
        }
        Ok(out)
    }

    /// Maximal minors (size = row count; the matrix must be at least as
    /// wide as it is tall).
    pub fn maximal_minors(&self) -> Result<Vec<Polynomial>> {
        if self.rows > self.cols {
            return Err(Error::Shape(format!(
                "expected at least as many columns as rows, got {}x{}",
                self.rows, self.cols
            )));
        }
        self.minors(self.rows)
    }

    /// Determinants over all column subsets for a fixed row subset, by
    /// Laplace expansion along the last row of the prefix: level `l` holds
    /// the minors of the first `l` chosen rows, shared across supersets.
    fn minors_of_rows(&self, rows: &[usize]) -> Vec<Polynomial> {
        let s = rows.len();
        let mut level: HashMap<u64, Polynomial> = HashMap::new();
        level.insert(0u64, Polynomial::one(&self.ring));
        for l in 1..=s {
            let masks = combinations(self.cols, l);
            let prev = &level;
            let expand = |cols: Vec<usize>| {
                let mask = cols.iter().fold(0u64, |m, &c| m | (1 << c));
                let mut acc = Polynomial::zero(&self.ring);
                for (k, &j) in cols.iter().enumerate() {
                    let e = self.entry(rows[l - 1], j);
                    if e.is_zero() {
                        continue;
                    }
                    let sub = &prev[&(mask & !(1 << j))];
                    if sub.is_zero() {
                        continue;
                    }
                    let term = e.mul(sub);
                    // expansion along the last row: sign (-1)^{(l-1)+k}
                    acc = if (l - 1 + k) % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                }
                (mask, acc)
            };
            // fan out only when a level is wide enough to amortize the
            // scheduling cost
            let computed: Vec<(u64, Polynomial)> = if masks.len() >= 256 {
                par::par_map(masks, expand)
            } else {
                masks.into_iter().map(expand).collect()
            };
            level = computed.into_iter().collect();
        }
        let final_masks = combinations(self.cols, s);
        final_masks
            .into_iter()
            .map(|cols| {
                let mask = cols.iter().fold(0u64, |m, &c| m | (1 << c));
                level.remove(&mask).unwrap()
            })
            .collect()
    }

    /// Sequential sibling of [`minors`], used by the benchmark suite to
    /// compare against the data-parallel path.
    pub fn minors_sequential(&self, s: usize) -> Result<Vec<Polynomial>> {
        if s == 0 || s > self.rows || s > self.cols {
            return Err(Error::Shape("minor size out of range".into()));
        }
        let mut out = Vec::new();
        for rows in combinations(self.rows, s) {
            let mut level: HashMap<u64, Polynomial> = HashMap::new();
            level.insert(0u64, Polynomial::one(&self.ring));
            for l in 1..=rows.len() {
                let mut next = HashMap::new();
                for cols in combinations(self.cols, l) {
                    let mask = cols.iter().fold(0u64, |m, &c| m | (1 << c));
                    let mut acc = Polynomial::zero(&self.ring);
                    for (k, &j) in cols.iter().enumerate() {
                        let e = self.entry(rows[l - 1], j);
                        if e.is_zero() {
                            continue;
                        }
                        let term = e.mul(&level[&(mask & !(1 << j))]);
                        acc =
                            if (l - 1 + k) % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                    }
                    next.insert(mask, acc);
                }
                level = next;
            }
            for cols in combinations(self.cols, rows.len()) {
                let mask = cols.iter().fold(0u64, |m, &c| m | (1 << c));
                out.push(level[&mask].clone());
            }
        }
        Ok(out)
    }

    pub fn det(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::Shape("determinant of a non-square matrix".into()));
        }
        Ok(self.minors(self.rows)?.pop().expect("one minor"))
    }

    /// Recover the degree matrix. Degrees `a_j` (columns) and `b_i` (rows)
    /// are anchored at `b = 0` per connected component and normalized by
    /// sorting both ascending, so entries increase from right to left and
    /// from top to bottom in the transposed grid `u[j][i] = a_j - b_i`.
    pub fn degree_matrix(&self) -> Result<DegreeMatrix> {
        let t = self.rows;
        let q = self.cols;
        let mut deg = vec![vec![None; q]; t];
        for i in 0..t {
            for j in 0..q {
                match self.entry(i, j).is_homogeneous() {
                    None => {
                        return Err(Error::Inhomogeneous(format!(
                            "entry ({i}, {j}) is not homogeneous"
                        )))
                    }
                    Some(HomDeg::Any) => {}
                    Some(HomDeg::Deg(d)) => deg[i][j] = Some(d as i64),
                }
            }
        }
        // nodes 0..t are rows (b_i), t..t+q are columns (a_j); edges at
        // nonzero entries enforce a_j - b_i = deg
        let mut value = vec![None::<i64>; t + q];
        let mut ambiguous = false;
        for start in 0..t + q {
            if value[start].is_some() {
                continue;
            }
            if start > 0 {
                // a second connected component has no constraint tying it
                // to the anchor
                ambiguous = true;
            }
            value[start] = Some(0);
            let mut stack = vec![start];
            while let Some(node) = stack.pop() {
                let v = value[node].unwrap();
                if node < t {
                    for j in 0..q {
                        if let Some(d) = deg[node][j] {
                            let expect = v + d;
                            match value[t + j] {
                                None => {
                                    value[t + j] = Some(expect);
                                    stack.push(t + j);
                                }
                                Some(cur) if cur == expect => {}
                                Some(_) => {
                                    return Err(Error::Inhomogeneous(
                                        "entry degrees admit no consistent row/column degrees"
                                            .into(),
                                    ))
                                }
                            }
                        }
                    }
                } else {
                    let j = node - t;
                    for i in 0..t {
                        if let Some(d) = deg[i][j] {
                            let expect = v - d;
                            match value[i] {
                                None => {
                                    value[i] = Some(expect);
                                    stack.push(i);
                                }
                                Some(cur) if cur == expect => {}
                                Some(_) => {
                                    return Err(Error::Inhomogeneous(
                                        "entry degrees admit no consistent row/column degrees"
                                            .into(),
                                    ))
                                }
                            }
                        }
                    }
                }
            }
        }
        let mut b: Vec<i64> = (0..t).map(|i| value[i].unwrap()).collect();
        let mut a: Vec<i64> = (0..q).map(|j| value[t + j].unwrap()).collect();
        let mut row_perm: Vec<usize> = (0..t).collect();
        let mut col_perm: Vec<usize> = (0..q).collect();
        row_perm.sort_by_key(|&i| b[i]);
        col_perm.sort_by_key(|&j| a[j]);
        b.sort();
        a.sort();
        let u = a.iter().map(|&aj| b.iter().map(|&bi| aj - bi).collect()).collect();
        Ok(DegreeMatrix { a, b, u, normalized: true, ambiguous, row_perm, col_perm })
    }

    /// 1-genericity of a matrix of linear forms.
    ///
    /// `RowsCols` checks the rows and columns themselves exactly.
    /// `Generalized` samples random scalar combinations of rows and of
    /// columns: any dependent sample refutes exactly, otherwise the verdict
    /// is only "probably".
    pub fn is_one_generic(
        &self,
        mode: GenericityMode,
        trials: u32,
        seed: u64,
    ) -> Result<GenericityVerdict> {
        for e in &self.entries {
            match e.is_homogeneous() {
                Some(HomDeg::Any) | Some(HomDeg::Deg(1)) => {}
                _ => return Err(Error::NotLinear),
            }
        }
        let ring = &self.ring;
        let independent = |forms: &[Polynomial]| -> bool {
            if forms.iter().any(|f| f.is_zero()) {
                return false;
            }
            let rows: Vec<Vec<Coeff>> =
                forms.iter().map(|f| linalg::linear_form_coeffs(ring, f)).collect();
            linalg::rank(ring, rows) == forms.len()
        };
        match mode {
            GenericityMode::RowsCols => {
                for i in 0..self.rows {
                    if !independent(&self.row(i)) {
                        return Ok(GenericityVerdict::NotOneGeneric);
                    }
                }
                for j in 0..self.cols {
                    if !independent(&self.column(j)) {
                        return Ok(GenericityVerdict::NotOneGeneric);
                    }
                }
                Ok(GenericityVerdict::OneGeneric)
            }
            GenericityMode::Generalized => {
                let mut rng = seeded(seed);
                for _ in 0..trials {
                    let row = self.random_combination(true, &mut rng);
                    if !independent(&row) {
                        return Ok(GenericityVerdict::NotOneGeneric);
                    }
                    let col = self.random_combination(false, &mut rng);
                    if !independent(&col) {
                        return Ok(GenericityVerdict::NotOneGeneric);
                    }
                }
                Ok(GenericityVerdict::ProbablyOneGeneric)
            }
        }
    }

    fn random_combination(&self, of_rows: bool, rng: &mut SeededRng) -> Vec<Polynomial> {
        let count = if of_rows { self.rows } else { self.cols };
        let lambda: Vec<Coeff> = loop {
            let l: Vec<Coeff> =
                (0..count).map(|_| crate::rng::random_coeff(&self.ring, rng)).collect();
            if !l.iter().all(|c| self.ring.cis_zero(c)) {
                break l;
            }
        };
        let width = if of_rows { self.cols } else { self.rows };
        (0..width)
            .map(|j| {
                let mut acc = Polynomial::zero(&self.ring);
                for (k, c) in lambda.iter().enumerate() {
                    let e = if of_rows { self.entry(k, j) } else { self.entry(j, k) };
                    acc = acc.add(&e.scalar_mul(c));
                }
                acc
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenericityMode {
    RowsCols,
    Generalized,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenericityVerdict {
    OneGeneric,
    NotOneGeneric,
    ProbablyOneGeneric,
}

/// Degree data of a homogeneous matrix, in the transposed convention:
/// `u[j][i] = a_j - b_i` with the column degrees `a` and row degrees `b`
/// sorted ascending, so entries increase right-to-left and top-to-bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeMatrix {
    a: Vec<i64>,
    b: Vec<i64>,
    u: Vec<Vec<i64>>,
    normalized: bool,
    ambiguous: bool,
    row_perm: Vec<usize>,
    col_perm: Vec<usize>,
}

impl DegreeMatrix {
    /// Build directly from sorted degree data (for predicate evaluation).
    pub fn from_degrees(mut a: Vec<i64>, mut b: Vec<i64>) -> Self {
        let row_perm = (0..b.len()).collect();
        let col_perm = (0..a.len()).collect();
        a.sort();
        b.sort();
        let u = a.iter().map(|&aj| b.iter().map(|&bi| aj - bi).collect()).collect();
        DegreeMatrix { a, b, u, normalized: true, ambiguous: false, row_perm, col_perm }
    }

    /// The transposed grid: `q` rows by `t` columns.
    pub fn grid(&self) -> &[Vec<i64>] {
        &self.u
    }

    /// Entry `u_{j,i}` of the transposed grid, 1-based as in the standard
    /// convention.
    pub fn entry_transposed(&self, j: usize, i: usize) -> i64 {
        self.u[j - 1][i - 1]
    }

    /// Entry in the row-major orientation (rows `1..=t`, columns
    /// `0..q`), with entries decreasing left to right and increasing top
    /// to bottom.
    pub fn entry_row_major(&self, i: usize, j: usize) -> i64 {
        let q = self.a.len();
        let t = self.b.len();
        assert!((1..=t).contains(&i) && j < q, "degree matrix index out of range");
        self.a[q - 1 - j] - self.b[t - i]
    }

    /// Column degrees `a_1 <= ... <= a_q`.
    pub fn col_degrees(&self) -> &[i64] {
        &self.a
    }

    /// Row degrees `b_1 <= ... <= b_t`.
    pub fn row_degrees(&self) -> &[i64] {
        &self.b
    }

    pub fn n_cols_of_matrix(&self) -> usize {
        self.a.len()
    }

    pub fn n_rows_of_matrix(&self) -> usize {
        self.b.len()
    }

    pub fn is_ambiguous(&self) -> bool {
        self.ambiguous
    }

    pub fn row_permutation(&self) -> &[usize] {
        &self.row_perm
    }

    pub fn col_permutation(&self) -> &[usize] {
        &self.col_perm
    }
}

/// k-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Random invertible scalar matrix over the ring's field.
pub fn random_invertible(ring: &Ring, size: usize, rng: &mut SeededRng) -> Vec<Vec<Coeff>> {
    loop {
        let g: Vec<Vec<Coeff>> = (0..size)
            .map(|_| (0..size).map(|_| crate::rng::random_coeff(ring, rng)).collect())
            .collect();
        if !ring.cis_zero(&linalg::scalar_det(ring, &g)) {
            return g;
        }
    }
}

pub fn identity_scalar(ring: &Ring, size: usize) -> Vec<Vec<Coeff>> {
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| if i == j { ring.cone() } else { ring.czero() })
                .collect()
        })
        .collect()
}
