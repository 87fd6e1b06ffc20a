//! Minimal graded free resolutions, Betti tables, and the minor-ideal
//! invariant of the last resolution matrix.
//!
//! Resolutions are built by iterated syzygy computation; after each step
//! the whole complex is minimalized by cancelling constant entries, so the
//! next syzygy call sees a minimal generating set. Cancellation is exact:
//! locate a unit entry, clear its row and column by elementary operations
//! (fixing up the neighbouring matrices), and delete both.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{syzygies, ModuleElement};
use crate::ideal::Ideal;
use crate::matrix::PolyMatrix;
use crate::ring::{HomDeg, Polynomial, Ring};

/// A graded free resolution of an ideal `I`:
///
/// `0 -> F_{len-1} -> ... -> F_1 -> F_0 -> I -> 0`
///
/// `map(k)` is the matrix of `F_k -> F_{k-1}` (rows indexed by `F_{k-1}`,
/// columns by `F_k`); `generator_row` is the map `F_0 -> I`. Twists list
/// the generator degrees of each module.
#[derive(Debug, Clone)]
pub struct FreeResolution {
    ring: Ring,
    generators: Vec<Polynomial>,
    twists: Vec<Vec<i64>>,
    maps: Vec<PolyMatrix>,
    minimal: bool,
    complete: bool,
}

impl FreeResolution {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Number of free modules in the resolution of the ideal, which equals
    /// the projective dimension of `R/I`. The zero ideal has length 0.
    pub fn length(&self) -> usize {
        self.twists.len()
    }

    /// Generator degrees of `F_i`.
    pub fn twists(&self, i: usize) -> &[i64] {
        &self.twists[i]
    }

    pub fn rank(&self, i: usize) -> usize {
        self.twists[i].len()
    }

    /// Matrix of `F_k -> F_{k-1}` for `k >= 1`.
    pub fn map(&self, k: usize) -> &PolyMatrix {
        &self.maps[k - 1]
    }

    /// The row of minimal generators: the map `F_0 -> I`.
    pub fn generator_row(&self) -> &[Polynomial] {
        &self.generators
    }

    /// The deepest matrix `F_len -> F_{len-1}`; `None` for resolutions of
    /// length <= 1 (no matrices).
    pub fn last_map(&self) -> Option<&PolyMatrix> {
        self.maps.last()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// False when the length cap was hit before the kernel vanished.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Exact check that consecutive maps compose to zero (including the
    /// generator row against the first matrix).
    pub fn verify_complex(&self) -> bool {
        if let Some(first) = self.maps.first() {
            for j in 0..first.cols() {
                let mut acc = Polynomial::zero(&self.ring);
                for i in 0..first.rows() {
                    acc = acc.add(&self.generators[i].mul(first.entry(i, j)));
                }
                if !acc.is_zero() {
                    return false;
                }
            }
        }
        for w in self.maps.windows(2) {
            if !w[0].mul(&w[1]).is_zero() {
                return false;
            }
        }
        true
    }

    /// Betti numbers read off the twists of a minimal resolution.
    pub fn betti_table(&self) -> Result<BettiTable> {
        if !self.minimal {
            return Err(Error::NotMinimal);
        }
        let mut table = BTreeMap::new();
        for (i, tw) in self.twists.iter().enumerate() {
            for &j in tw {
                *table.entry((i, j)).or_insert(0u64) += 1;
            }
        }
        Ok(BettiTable { table })
    }
}

/// Graded Betti numbers `(homological index, internal degree) -> rank`,
/// indexed from the generators of the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    table: BTreeMap<(usize, i64), u64>,
}

impl BettiTable {
    pub fn from_entries(entries: &[(usize, i64, u64)]) -> Self {
        BettiTable {
            table: entries.iter().map(|&(i, j, r)| ((i, j), r)).collect(),
        }
    }

    pub fn entries(&self) -> &BTreeMap<(usize, i64), u64> {
        &self.table
    }

    pub fn rank(&self, i: usize, j: i64) -> u64 {
        self.table.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn total_rank(&self, i: usize) -> u64 {
        self.table.iter().filter(|((h, _), _)| *h == i).map(|(_, r)| r).sum()
    }

    pub fn homological_length(&self) -> usize {
        self.table.keys().map(|&(i, _)| i).max().map(|i| i + 1).unwrap_or(0)
    }

    /// Numerator of the Hilbert series of `R/I` predicted by the
    /// resolution: `1 + sum_i (-1)^{i+1} sum_j beta_{i,j} T^j`.
    pub fn hilbert_numerator(&self) -> Vec<i64> {
        let mut out = vec![1i64];
        for (&(i, j), &r) in &self.table {
            let j = usize::try_from(j).expect("ideal twists are positive");
            if out.len() <= j {
                out.resize(j + 1, 0);
            }
            out[j] += if i % 2 == 0 { -(r as i64) } else { r as i64 };
        }
        while out.len() > 1 && *out.last().unwrap() == 0 {
            out.pop();
        }
        out
    }
}

impl fmt::Display for BettiTable {
    /// Macaulay-style grid: rows are `internal degree - homological
    /// degree`, columns the homological degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.homological_length();
        if width == 0 {
            return writeln!(f, "(empty)");
        }
        let rows: Vec<i64> = {
            let mut v: Vec<i64> = self.table.keys().map(|&(i, j)| j - i as i64).collect();
            v.sort();
            v.dedup();
            v
        };
        write!(f, "      ")?;
        for i in 0..width {
            write!(f, "{i:>6}")?;
        }
        writeln!(f)?;
        for &r in &rows {
            write!(f, "{r:>4}: ")?;
            for i in 0..width {
                let v = self.rank(i, r + i as i64);
                if v == 0 {
                    write!(f, "{:>6}", ".")?;
                } else {
                    write!(f, "{v:>6}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Minimal graded free resolution of a homogeneous ideal by iterated
/// syzygies with interleaved minimalization. `max_length` defaults to
/// `n_vars + 1`; hitting the cap yields a partial complex flagged
/// incomplete.
pub fn free_resolution(ideal: &Ideal, max_length: Option<usize>) -> Result<FreeResolution> {
    let ring = ideal.ring().clone();
    if ideal.is_unit_ideal() {
        return Err(Error::Precondition("resolution of the unit ideal".into()));
    }
    let cap = max_length.unwrap_or(ring.n_vars() + 1);

    let mut state = Complex {
        ring: ring.clone(),
        generators: ideal.generators().to_vec(),
        twists: Vec::new(),
        maps: Vec::new(),
    };
    if state.generators.is_empty() {
        return Ok(FreeResolution {
            ring,
            generators: Vec::new(),
            twists: Vec::new(),
            maps: Vec::new(),
            minimal: true,
            complete: true,
        });
    }
    state.twists.push(
        state
            .generators
            .iter()
            .map(|g| g.degree().expect("nonzero generators") as i64)
            .collect(),
    );
    state.minimalize();

    let mut complete = false;
    while state.twists.len() <= cap {
        let level = state.twists.len() - 1;
        let vectors: Vec<ModuleElement> = if level == 0 {
            state
                .generators
                .iter()
                .map(|g| ModuleElement::new(vec![g.clone()], vec![0]))
                .collect()
        } else {
            let m = &state.maps[level - 1];
            let twists = state.twists[level - 1].clone();
            (0..m.cols())
                .map(|j| ModuleElement::new(m.column(j), twists.clone()))
                .collect()
        };
        let syz = syzygies(&vectors)?;
        if syz.is_empty() {
            complete = true;
            break;
        }
        let col_twists: Vec<i64> =
            syz.iter().map(|s| s.degree().expect("homogeneous syzygies")).collect();
        let matrix = PolyMatrix::from_fn(&ring, vectors.len(), syz.len(), |i, j| {
            syz[j].components()[i].clone()
        });
        state.maps.push(matrix);
        state.twists.push(col_twists);
        state.minimalize();
        state.prune_zero_columns();
        // minimalization can empty the deepest module
        if state.twists.last().map(|t| t.is_empty()) == Some(true) {
            state.twists.pop();
            state.maps.pop();
            complete = true;
            break;
        }
    }

    Ok(FreeResolution {
        ring,
        generators: state.generators,
        twists: state.twists,
        maps: state.maps,
        minimal: true,
        complete,
    })
}

struct Complex {
    ring: Ring,
    generators: Vec<Polynomial>,
    twists: Vec<Vec<i64>>,
    maps: Vec<PolyMatrix>,
}

impl Complex {
    /// Cancel unit entries until none remain. Row-major scan, deepest
    /// matrices first so redundant syzygy generators disappear before the
    /// next level is computed.
    fn minimalize(&mut self) {
        while let Some((k, i, j)) = self.find_unit() {
            self.cancel(k, i, j);
        }
    }

    /// Cancellation can leave a column of the deepest matrix identically
    /// zero (a redundant trivial relation); drop such columns before the
    /// next syzygy step.
    fn prune_zero_columns(&mut self) {
        let Some(last) = self.maps.last() else {
            return;
        };
        let zero_cols: Vec<usize> = (0..last.cols())
            .filter(|&j| (0..last.rows()).all(|i| last.entry(i, j).is_zero()))
            .collect();
        for &j in zero_cols.iter().rev() {
            let k = self.maps.len() - 1;
            self.maps[k] = self.maps[k].delete_column(j);
            self.twists[k + 1].remove(j);
        }
    }

    /// A unit entry of `maps[k]` is one of degree zero: the twist of its
    /// column equals the twist of its row.
    fn find_unit(&self) -> Option<(usize, usize, usize)> {
        for k in (0..self.maps.len()).rev() {
            let m = &self.maps[k];
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    let e = m.entry(i, j);
                    if !e.is_zero() && e.is_homogeneous() == Some(HomDeg::Deg(0)) {
                        return Some((k, i, j));
                    }
                }
            }
        }
        None
    }

    /// Split off the trivial subcomplex through the unit at `maps[k][i][j]`.
    fn cancel(&mut self, k: usize, i: usize, j: usize) {
        let ring = self.ring.clone();
        let c = self.maps[k].entry(i, j).clone();
        let c_inv = Polynomial::constant(&ring, ring.cinv(c.leading_coeff().unwrap()));

        // column operations clear row i; basis change of F_{k+1} updates
        // the rows of the next matrix
        let cols = self.maps[k].cols();
        let rows = self.maps[k].rows();
        let mut col_factors: Vec<Polynomial> = Vec::with_capacity(cols);
        for j2 in 0..cols {
            if j2 == j {
                col_factors.push(Polynomial::zero(&ring));
                continue;
            }
            let q = self.maps[k].entry(i, j2).mul(&c_inv);
            col_factors.push(q.clone());
            if !q.is_zero() {
                for i2 in 0..rows {
                    let new = self.maps[k].entry(i2, j2).sub(&q.mul(self.maps[k].entry(i2, j)));
                    self.maps[k].set_entry(i2, j2, new);
                }
            }
        }
        if k + 1 < self.maps.len() {
            let next_cols = self.maps[k + 1].cols();
            for j2 in 0..cols {
                if col_factors[j2].is_zero() {
                    continue;
                }
                for c2 in 0..next_cols {
                    let new = self.maps[k + 1]
                        .entry(j, c2)
                        .add(&col_factors[j2].mul(self.maps[k + 1].entry(j2, c2)));
                    self.maps[k + 1].set_entry(j, c2, new);
                }
            }
        }

        // row operations clear column j; basis change of F_k updates the
        // columns of the previous matrix (or the generator row)
        let mut row_factors: Vec<Polynomial> = Vec::with_capacity(rows);
        for i2 in 0..rows {
            if i2 == i {
                row_factors.push(Polynomial::zero(&ring));
                continue;
            }
            let q = self.maps[k].entry(i2, j).mul(&c_inv);
            row_factors.push(q.clone());
            if !q.is_zero() {
                // row i is zero outside column j, so only column j changes
                let new = self.maps[k].entry(i2, j).sub(&q.mul(&c));
                self.maps[k].set_entry(i2, j, new);
            }
        }
        if k == 0 {
            for i2 in 0..rows {
                if !row_factors[i2].is_zero() {
                    let add = row_factors[i2].mul(&self.generators[i2]);
                    self.generators[i] = self.generators[i].add(&add);
                }
            }
        } else {
            let prev_rows = self.maps[k - 1].rows();
            for i2 in 0..rows {
                if row_factors[i2].is_zero() {
                    continue;
                }
                for r2 in 0..prev_rows {
                    let new = self.maps[k - 1]
                        .entry(r2, i)
                        .add(&row_factors[i2].mul(self.maps[k - 1].entry(r2, i2)));
                    self.maps[k - 1].set_entry(r2, i, new);
                }
            }
        }

        // drop row i (basis of F_k) and column j (basis of F_{k+1})
        debug_assert!(
            k + 1 >= self.maps.len()
                || (0..self.maps[k + 1].cols())
                    .all(|c2| self.maps[k + 1].entry(j, c2).is_zero()),
            "cancelled column must be a zero row downstream"
        );
        self.maps[k] = self.maps[k].delete_row(i).delete_column(j);
        self.twists[k].remove(i);
        self.twists[k + 1].remove(j);
        if k == 0 {
            self.generators.remove(i);
        } else {
            self.maps[k - 1] = self.maps[k - 1].delete_column(i);
        }
        if k + 1 < self.maps.len() {
            self.maps[k + 1] = self.maps[k + 1].delete_row(j);
        }
    }
}

/// Arithmetic Cohen-Macaulayness of a saturated homogeneous ideal:
/// the projective dimension of `R/I` equals the height.
pub fn is_acm(ideal: &Ideal) -> Result<bool> {
    if !ideal.is_saturated() {
        return Err(Error::Unsaturated);
    }
    let res = free_resolution(ideal, None)?;
    Ok(res.length() as i64 == ideal.height())
}

/// Ideal of all `size x size` minors of the final resolution matrix — an
/// invariant of the ideal: invertible row/column operations on the last
/// map leave it unchanged.
pub fn last_map_minor_ideal(res: &FreeResolution, size: usize) -> Result<Ideal> {
    if !res.is_minimal() {
        return Err(Error::NotMinimal);
    }
    let last = res
        .last_map()
        .ok_or_else(|| Error::Precondition("resolution has no matrices".into()))?;
    if last.is_zero() {
        return Err(Error::Precondition("last resolution matrix is zero".into()));
    }
    Ideal::of_minors(last, size)
}
