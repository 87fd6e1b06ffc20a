//! Generators for the explicit objects used throughout the toolbox: the
//! banded power-ideal matrix, squarefree/Vandermonde matrices, the
//! symmetric matrix family, a reducible degree-(n+1) curve, basic double
//! links at ideal and matrix level, cone flat families, and the
//! ruling-lines curve on a smooth quadric.

use crate::error::{Error, Result};
use crate::ideal::{ideal_intersection, Ideal};
use crate::linalg;
use crate::matrix::PolyMatrix;
use crate::ring::{Coeff, FieldSpec, HomDeg, Polynomial, Ring};
use crate::rng::{random_linear_form_in, seeded};

/// One member of a flat family of ideals, tagged with its parameter value
/// and a stable provenance id (construction name plus parameters).
#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub parameter: Coeff,
    pub ideal: Ideal,
    pub provenance: String,
}

/// The banded `t x (t+n-1)` matrix with shifted copies of the variables:
/// its maximal minors generate `m^t` in `n` variables.
pub fn power_ideal_matrix(n: usize, t: usize, field: &FieldSpec) -> PolyMatrix {
    assert!(n >= 1 && t >= 1);
    let ring = Ring::new(n, field.clone(), crate::ring::MonomialOrder::DegRevLex);
    PolyMatrix::from_fn(&ring, t, t + n - 1, |i, j| {
        if j >= i && j < i + n {
            Polynomial::var(&ring, j - i)
        } else {
            Polynomial::zero(&ring)
        }
    })
}

/// The `d x (n+1)` matrix with entry `a_{ij} * x_j` where `A = (a_{ij})`
/// is Vandermonde in the given scalars: all maximal minors of `A` must be
/// nonzero, so the maximal minors of the result are nonzero multiples of
/// the squarefree monomials of degree `d`.
pub fn squarefree_matrix(
    n: usize,
    d: usize,
    alphas: &[Coeff],
    field: &FieldSpec,
) -> Result<PolyMatrix> {
    assert!(d >= 1 && d <= n + 1, "need 1 <= d <= n+1");
    let ring = Ring::new(n + 1, field.clone(), crate::ring::MonomialOrder::DegRevLex);
    if alphas.len() != d {
        return Err(Error::Precondition(format!("expected {d} scalars, got {}", alphas.len())));
    }
    for (i, a) in alphas.iter().enumerate() {
        if ring.cis_zero(a) {
            return Err(Error::Precondition("scalars must be nonzero".into()));
        }
        for b in &alphas[..i] {
            if a == b {
                return Err(Error::Precondition("scalars must be distinct".into()));
            }
        }
    }
    // Vandermonde rows (1, a_i, a_i^2, ..., a_i^n)
    let a_grid: Vec<Vec<Coeff>> = alphas
        .iter()
        .map(|a| {
            let mut row = Vec::with_capacity(n + 1);
            let mut acc = ring.cone();
            for _ in 0..=n {
                row.push(acc.clone());
                acc = ring.cmul(&acc, a);
            }
            row
        })
        .collect();
    // every maximal minor of A must be nonzero
    for cols in crate::matrix::combinations(n + 1, d) {
        let sub: Vec<Vec<Coeff>> = (0..d)
            .map(|i| cols.iter().map(|&j| a_grid[i][j].clone()).collect())
            .collect();
        if ring.cis_zero(&linalg::scalar_det(&ring, &sub)) {
            return Err(Error::Precondition(
                "a maximal minor of the scalar matrix vanishes; pick other scalars".into(),
            ));
        }
    }
    Ok(PolyMatrix::from_fn(&ring, d, n + 1, |i, j| {
        Polynomial::var(&ring, j).scalar_mul(&a_grid[i][j])
    }))
}

/// Default scalars `1, 2, ..., d` for [`squarefree_matrix`].
pub fn default_alphas(d: usize, field: &FieldSpec) -> Vec<Coeff> {
    let ring = Ring::new(1, field.clone(), crate::ring::MonomialOrder::DegRevLex);
    (1..=d as i64).map(|v| ring.cfrom_i64(v)).collect()
}

/// Variants of the symmetric-matrix family on `(t+1) x (t+1)` matrices.
#[derive(Debug, Clone)]
pub enum SymmetricVariant {
    /// Generic symmetric matrix in `binom(t+2, 2)` variables.
    X,
    /// The special antidiagonal (Hankel) specialization in `2t+1` variables.
    Y,
    /// The `t x (t+2)` catalecticant whose maximal minors generate the
    /// same ideal as the size-`t` minors of `Y`.
    U,
    /// Symmetric with random linear interior entries in `2t+1` variables.
    Z { seed: u64 },
    /// The pencil `s*Z + (1-s)*Y`.
    Zs { s: i64, seed: u64 },
}

/// Index of variable `x_{i,j}` (i <= j) in the lexicographic flattening
/// used for the generic symmetric matrix.
pub fn symmetric_var_index(t: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    // rows 0..i contribute (t+1-r) entries each
    (0..i).map(|r| t + 1 - r).sum::<usize>() + (j - i)
}

/// Build the chosen variant. `X` lives in `binom(t+2,2)` variables; the
/// others live in `2t+1` variables `x_0..x_{2t}` where `x_k` stands for
/// the antidiagonal entry of weight `k`.
pub fn symmetric_family(t: usize, variant: &SymmetricVariant, field: &FieldSpec) -> PolyMatrix {
    assert!(t >= 2, "the family starts at t = 2");
    let order = crate::ring::MonomialOrder::DegRevLex;
    match variant {
        SymmetricVariant::X => {
            let n = (t + 2) * (t + 1) / 2;
            let ring = Ring::new(n, field.clone(), order);
            PolyMatrix::from_fn(&ring, t + 1, t + 1, |i, j| {
                Polynomial::var(&ring, symmetric_var_index(t, i, j))
            })
        }
        SymmetricVariant::Y => {
            let ring = Ring::new(2 * t + 1, field.clone(), order);
            PolyMatrix::from_fn(&ring, t + 1, t + 1, |i, j| Polynomial::var(&ring, i + j))
        }
        SymmetricVariant::U => {
            let ring = Ring::new(2 * t + 1, field.clone(), order);
            PolyMatrix::from_fn(&ring, t, t + 2, |i, j| Polynomial::var(&ring, i + j))
        }
        SymmetricVariant::Z { seed } => symmetric_z(t, *seed, field),
        SymmetricVariant::Zs { s, seed } => {
            let ring = Ring::new(2 * t + 1, field.clone(), order);
            let s = ring.cfrom_i64(*s);
            let one_minus_s = ring.csub(&ring.cone(), &s);
            let z = symmetric_z(t, *seed, field);
            let y = symmetric_family(t, &SymmetricVariant::Y, field);
            PolyMatrix::from_fn(&ring, t + 1, t + 1, |i, j| {
                z.entry(i, j).scalar_mul(&s).add(&y.entry(i, j).scalar_mul(&one_minus_s))
            })
        }
    }
}

fn symmetric_z(t: usize, seed: u64, field: &FieldSpec) -> PolyMatrix {
    let ring = Ring::new(2 * t + 1, field.clone(), crate::ring::MonomialOrder::DegRevLex);
    let mut rng = seeded(seed);
    let all_vars: Vec<usize> = (0..2 * t + 1).collect();
    // interior entries L_{i,j} = L_{j,i} for 1 <= i <= j <= t-1
    let mut interior = vec![vec![Polynomial::zero(&ring); t + 1]; t + 1];
    for i in 1..t {
        for j in i..t {
            let form = random_linear_form_in(&ring, &all_vars, &mut rng);
            interior[i][j] = form.clone();
            interior[j][i] = form;
        }
    }
    PolyMatrix::from_fn(&ring, t + 1, t + 1, |i, j| {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        if i == 0 || j == t {
            // border keeps the coordinate variables: x_{0,j} |-> x_j,
            // x_{i,t} |-> x_{t+i}
            if i == 0 {
                Polynomial::var(&ring, j)
            } else {
                Polynomial::var(&ring, t + i)
            }
        } else {
            interior[i][j].clone()
        }
    })
}

/// The reducible degree-(n+1) curve: a cone over `n` coordinate points
/// joined with a line through a point of it, together with the squarefree
/// surface containing it.
#[derive(Debug, Clone)]
pub struct ReducibleCurve {
    /// `x0*(x2..x{n+1}) + (x_i x_j for 1 <= i < j <= n)`, by the closed
    /// formula.
    pub curve: Ideal,
    /// The same ideal computed independently as the intersection of the
    /// two component ideals.
    pub curve_by_intersection: Ideal,
    /// Ideal of the cone component.
    pub cone_component: Ideal,
    /// Ideal of the line component.
    pub line_component: Ideal,
    /// The surface cut out by the squarefree quadrics in
    /// `x0, x2, ..., x_n` (the ambient of the matrix-level double link).
    pub surface: Ideal,
}

/// Build the curve in `P^{n+1}` (ring with `n+2` variables).
pub fn n_plus_1_curve(n: usize, field: &FieldSpec) -> ReducibleCurve {
    assert!(n >= 2);
    let ring = Ring::new(n + 2, field.clone(), crate::ring::MonomialOrder::DegRevLex);
    let var = |i: usize| Polynomial::var(&ring, i);
    let mono = |i: usize, j: usize| var(i).mul(&var(j));

    // cone over the coordinate points of P^n other than [1:0:...:0]
    let mut cone_gens = vec![var(0)];
    for i in 1..=n {
        for j in (i + 1)..=n {
            cone_gens.push(mono(i, j));
        }
    }
    let cone_component = Ideal::new(&ring, cone_gens).expect("homogeneous");
    let line_component =
        Ideal::new(&ring, (2..=n + 1).map(var).collect()).expect("homogeneous");

    let mut curve_gens = Vec::new();
    for j in 2..=n + 1 {
        curve_gens.push(mono(0, j));
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            curve_gens.push(mono(i, j));
        }
    }
    let curve = Ideal::new(&ring, curve_gens).expect("homogeneous");
    let curve_by_intersection = cone_component.intersect(&line_component);

    let mut surface_gens = Vec::new();
    let surface_vars: Vec<usize> = std::iter::once(0).chain(2..=n).collect();
    for (k, &i) in surface_vars.iter().enumerate() {
        for &j in &surface_vars[k + 1..] {
            surface_gens.push(mono(i, j));
        }
    }
    let surface = Ideal::new(&ring, surface_gens).expect("homogeneous");

    ReducibleCurve { curve, curve_by_intersection, cone_component, line_component, surface }
}

/// `I_S + F * I_C` without any precondition checks.
pub(crate) fn bdl_ideal(i_c: &Ideal, i_s: &Ideal, f: &Polynomial) -> Ideal {
    i_s.sum(&i_c.multiply_poly(f))
}

/// Basic double link of `C` on `S` by the hypersurface `F`: checks
/// `I_S ⊆ I_C`, that `F` is homogeneous of positive degree, and the
/// algebraic properness surrogate `(I_S : F) = I_S`; returns the linked
/// ideal and a flag reporting whether it is saturated.
pub fn basic_double_link(
    i_c: &Ideal,
    i_s: &Ideal,
    f: &Polynomial,
) -> Result<(Ideal, bool)> {
    if !i_c.contains_ideal(i_s) {
        return Err(Error::Precondition("the surface ideal must sit inside the curve ideal".into()));
    }
    match f.is_homogeneous() {
        Some(HomDeg::Deg(d)) if d >= 1 => {}
        _ => {
            return Err(Error::Precondition(
                "the linking hypersurface must be homogeneous of positive degree".into(),
            ))
        }
    }
    if !i_s.quotient_poly(f).equal(i_s) {
        return Err(Error::Precondition(
            "the hypersurface is a zerodivisor modulo the surface ideal".into(),
        ));
    }
    let out = bdl_ideal(i_c, i_s, f);
    let saturated = out.is_saturated();
    Ok((out, saturated))
}

/// How the double-link matrix is assembled from the matrices of `C` and
/// `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BdlMode {
    /// `N` is `M` with one extra row at `row`; the output inserts a column
    /// that is zero except for `F` in that row, at position `insert_at`.
    RowAdded { row: usize, insert_at: usize },
    /// `N` is `M` with column `col` removed; the output re-inserts that
    /// column scaled by `F` at its original position.
    ColumnRemoved { col: usize },
}

/// The matrix `O` whose maximal minors generate `I_S + F * I_C`; the
/// identity is verified internally by a Gröbner-basis comparison.
pub fn bdl_matrix(
    m: &PolyMatrix,
    n: &PolyMatrix,
    f: &Polynomial,
    mode: BdlMode,
) -> Result<PolyMatrix> {
    assert!(m.ring() == n.ring(), "ring context mismatch");
    assert!(f.ring() == m.ring(), "ring context mismatch");
    let ring = m.ring().clone();
    let deg_f = match f.is_homogeneous() {
        Some(HomDeg::Deg(d)) if d >= 1 => d,
        _ => {
            return Err(Error::Precondition(
                "the linking form must be homogeneous of positive degree".into(),
            ))
        }
    };
    let out = match mode {
        BdlMode::RowAdded { row, insert_at } => {
            if n.rows() != m.rows() + 1 || n.cols() != m.cols() {
                return Err(Error::Shape(
                    "second matrix must be the first plus one row".into(),
                ));
            }
            if n.delete_row(row) != *m {
                return Err(Error::Shape(
                    "second matrix minus the named row must equal the first".into(),
                ));
            }
            if insert_at > n.cols() {
                return Err(Error::Shape("column insertion point out of range".into()));
            }
            // degree window: deg(n_{row, insert_at - 1}) <= deg F <=
            // deg(n_{row, insert_at}) where those entries exist
            let lower = if insert_at == 0 {
                None
            } else {
                n.entry(row, insert_at - 1).degree()
            };
            let upper =
                if insert_at == n.cols() { None } else { n.entry(row, insert_at).degree() };
            if let Some(lo) = lower {
                if deg_f < lo {
                    return Err(Error::Shape(format!(
                        "linking form degree {deg_f} below the column window (>= {lo})"
                    )));
                }
            }
            if let Some(hi) = upper {
                if deg_f > hi {
                    return Err(Error::Shape(format!(
                        "linking form degree {deg_f} above the column window (<= {hi})"
                    )));
                }
            }
            let col: Vec<Polynomial> = (0..n.rows())
                .map(|i| if i == row { f.clone() } else { Polynomial::zero(&ring) })
                .collect();
            n.insert_column(insert_at, &col)?
        }
        BdlMode::ColumnRemoved { col } => {
            if n.rows() != m.rows() || n.cols() + 1 != m.cols() {
                return Err(Error::Shape(
                    "second matrix must be the first minus one column".into(),
                ));
            }
            if m.delete_column(col) != *n {
                return Err(Error::Shape(
                    "first matrix minus the named column must equal the second".into(),
                ));
            }
            let scaled: Vec<Polynomial> =
                (0..m.rows()).map(|i| m.entry(i, col).mul(f)).collect();
            n.insert_column(col, &scaled)?
        }
    };
    // the displayed identity: maximal minors of O generate I_S + F * I_C
    let (i_c, i_s) = match mode {
        BdlMode::RowAdded { .. } => {
            (Ideal::of_minors(m, m.rows())?, Ideal::of_minors(n, n.rows())?)
        }
        BdlMode::ColumnRemoved { .. } => {
            (Ideal::of_minors(m, m.rows())?, Ideal::of_minors(n, n.rows())?)
        }
    };
    let expected = bdl_ideal(&i_c, &i_s, f);
    let produced = Ideal::of_minors(&out, out.rows())?;
    if !produced.equal(&expected) {
        return Err(Error::Precondition(
            "double-link matrix identity failed: minors do not generate I_S + F*I_C".into(),
        ));
    }
    Ok(out)
}

/// Scale the last variable by `s` in every generator: the flat family
/// degenerating a scheme to the cone over its section by the last
/// coordinate hyperplane. `s = 1` is the identity, `s = 0` the cone.
pub fn cone_family(ideal: &Ideal, s: &Coeff) -> FamilyMember {
    let ring = ideal.ring().clone();
    let n = ring.n_vars();
    let images: Vec<Polynomial> = (0..n)
        .map(|i| {
            if i + 1 == n {
                Polynomial::var(&ring, i).scalar_mul(s)
            } else {
                Polynomial::var(&ring, i)
            }
        })
        .collect();
    let gens = ideal.generators().iter().map(|g| g.substitute(&images)).collect();
    FamilyMember {
        parameter: s.clone(),
        ideal: Ideal::new(&ring, gens).expect("scaling preserves homogeneity"),
        provenance: format!("cone-family?s={}", s.display_string(ring.field())),
    }
}

/// The 3x3 pencil whose minors degenerate the Veronese surface to a cone
/// over the rational normal quartic as `s` goes to 0.
pub fn veronese_pencil_matrix(s: i64, field: &FieldSpec) -> PolyMatrix {
    let ring = Ring::new(6, field.clone(), crate::ring::MonomialOrder::DegRevLex);
    let s = ring.cfrom_i64(s);
    let one_minus_s = ring.csub(&ring.cone(), &s);
    let middle = Polynomial::var(&ring, 2)
        .scalar_mul(&one_minus_s)
        .add(&Polynomial::var(&ring, 3).scalar_mul(&s));
    let v = |i: usize| Polynomial::var(&ring, i);
    PolyMatrix::new(
        &ring,
        vec![
            vec![v(0), v(1), v(2)],
            vec![v(1), middle, v(4)],
            vec![v(2), v(4), v(5)],
        ],
    )
}

/// The Veronese ideal rewritten so that the degeneration direction is the
/// last variable: `cone_family` applied to this base runs the pencil.
pub fn veronese_cone_base(field: &FieldSpec) -> Ideal {
    let ring = Ring::new(6, field.clone(), crate::ring::MonomialOrder::DegRevLex);
    let v = |i: usize| Polynomial::var(&ring, i);
    let middle = v(2).add(&v(5));
    let m = PolyMatrix::new(
        &ring,
        vec![
            vec![v(0), v(1), v(2)],
            vec![v(1), middle, v(4)],
            vec![v(2), v(4), v(3)],
        ],
    );
    Ideal::of_minors(&m, 2).expect("homogeneous minors")
}

/// Union of `a` ruling lines from one family and `b` from the other on the
/// quadric `x0*x3 - x1*x2` in `P^3`, with distinct small parameters.
pub fn ruling_lines_curve(a: usize, b: usize, field: &FieldSpec) -> Ideal {
    let ring = Ring::new(4, field.clone(), crate::ring::MonomialOrder::DegRevLex);
    let v = |i: usize| Polynomial::var(&ring, i);
    let mut lines = Vec::new();
    // first ruling: { v x0 - u x2, v x1 - u x3 } at [u : v]
    for k in 0..a {
        let u = ring.cfrom_i64(1);
        let w = ring.cfrom_i64(k as i64);
        lines.push(
            Ideal::new(
                &ring,
                vec![
                    v(0).scalar_mul(&w).sub(&v(2).scalar_mul(&u)),
                    v(1).scalar_mul(&w).sub(&v(3).scalar_mul(&u)),
                ],
            )
            .expect("linear generators"),
        );
    }
    // second ruling: { t x0 - s x1, t x2 - s x3 } at [s : t]
    for k in 0..b {
        let s = ring.cfrom_i64(1);
        let t = ring.cfrom_i64((k + 1) as i64);
        lines.push(
            Ideal::new(
                &ring,
                vec![
                    v(0).scalar_mul(&t).sub(&v(1).scalar_mul(&s)),
                    v(2).scalar_mul(&t).sub(&v(3).scalar_mul(&s)),
                ],
            )
            .expect("linear generators"),
        );
    }
    ideal_intersection(&lines)
}

/// Generic `t x q` matrix of linear forms with seeded random coefficients.
pub fn generic_linear_matrix(
    t: usize,
    q: usize,
    n_vars: usize,
    seed: u64,
    field: &FieldSpec,
) -> PolyMatrix {
    let ring = Ring::new(n_vars, field.clone(), crate::ring::MonomialOrder::DegRevLex);
    let mut rng = seeded(seed);
    let all: Vec<usize> = (0..n_vars).collect();
    PolyMatrix::from_fn(&ring, t, q, |_, _| random_linear_form_in(&ring, &all, &mut rng))
}

/// The matrix of independent indeterminates, one per entry.
pub fn generic_matrix(t: usize, q: usize, field: &FieldSpec) -> PolyMatrix {
    let ring = Ring::new(t * q, field.clone(), crate::ring::MonomialOrder::DegRevLex);
    PolyMatrix::from_fn(&ring, t, q, |i, j| Polynomial::var(&ring, i * q + j))
}

/// Resolve a stable construction id like `symm.Y?t=3` or
/// `artin?n=2&t=2`. Used for provenance strings and the catalog.
pub fn by_id(id: &str, field: &FieldSpec) -> Result<ConstructionOutput> {
    let (name, params) = match id.split_once('?') {
        Some((n, p)) => (n, p),
        None => (id, ""),
    };
    let mut kv = std::collections::BTreeMap::new();
    for pair in params.split('&').filter(|s| !s.is_empty()) {
        let (k, v) = pair
            .split_once('=')
            .ok_or_else(|| Error::UnknownExample(id.to_string()))?;
        kv.insert(k.to_string(), v.to_string());
    }
    let get = |k: &str, default: i64| -> i64 {
        kv.get(k).and_then(|v| v.parse().ok()).unwrap_or(default)
    };
    match name {
        "artin" => Ok(ConstructionOutput::Matrix(power_ideal_matrix(
            get("n", 2) as usize,
            get("t", 2) as usize,
            field,
        ))),
        "sqfr" => {
            let d = get("d", 2) as usize;
            let m = squarefree_matrix(get("n", 4) as usize, d, &default_alphas(d, field), field)?;
            Ok(ConstructionOutput::Matrix(m))
        }
        "symm.X" => Ok(ConstructionOutput::Matrix(symmetric_family(
            get("t", 2) as usize,
            &SymmetricVariant::X,
            field,
        ))),
        "symm.Y" => Ok(ConstructionOutput::Matrix(symmetric_family(
            get("t", 2) as usize,
            &SymmetricVariant::Y,
            field,
        ))),
        "symm.U" => Ok(ConstructionOutput::Matrix(symmetric_family(
            get("t", 2) as usize,
            &SymmetricVariant::U,
            field,
        ))),
        "symm.Z" => Ok(ConstructionOutput::Matrix(symmetric_family(
            get("t", 2) as usize,
            &SymmetricVariant::Z { seed: get("seed", 0) as u64 },
            field,
        ))),
        "symm.Zs" => Ok(ConstructionOutput::Matrix(symmetric_family(
            get("t", 2) as usize,
            &SymmetricVariant::Zs { s: get("s", 2), seed: get("seed", 0) as u64 },
            field,
        ))),
        "npluscurve" => {
            Ok(ConstructionOutput::Ideal(n_plus_1_curve(get("n", 3) as usize, field).curve))
        }
        "veronese-pencil" => {
            Ok(ConstructionOutput::Matrix(veronese_pencil_matrix(get("s", 1), field)))
        }
        "ruling-lines" => Ok(ConstructionOutput::Ideal(ruling_lines_curve(
            get("a", 3) as usize,
            get("b", 6) as usize,
            field,
        ))),
        _ => Err(Error::UnknownExample(id.to_string())),
    }
}

#[derive(Debug, Clone)]
pub enum ConstructionOutput {
    Matrix(PolyMatrix),
    Ideal(Ideal),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_poly;
    use crate::resolution::free_resolution;

    const FP: FieldSpec = FieldSpec::Prime(crate::ring::DEFAULT_PRIME);

    #[test]
    fn power_matrix_display_case() {
        let m = power_ideal_matrix(2, 2, &FP);
        let r = m.ring().clone();
        let expect = PolyMatrix::new(
            &r,
            vec![
                vec![
                    Polynomial::var(&r, 0),
                    Polynomial::var(&r, 1),
                    Polynomial::zero(&r),
                ],
                vec![
                    Polynomial::zero(&r),
                    Polynomial::var(&r, 0),
                    Polynomial::var(&r, 1),
                ],
            ],
        );
        assert_eq!(m, expect);
        let minors = Ideal::of_minors(&m, 2).unwrap();
        assert!(minors.equal(&Ideal::irrelevant_power(&r, 2)));
    }

    #[test]
    fn power_matrix_single_row() {
        let m = power_ideal_matrix(4, 1, &FP);
        assert_eq!((m.rows(), m.cols()), (1, 4));
        let i = Ideal::of_minors(&m, 1).unwrap();
        assert!(i.equal(&Ideal::irrelevant(m.ring())));
    }

    #[test]
    fn power_matrix_generates_powers_of_max_ideal() {
        for (n, t) in [(2, 3), (3, 2), (4, 3)] {
            let m = power_ideal_matrix(n, t, &FP);
            let i = Ideal::of_minors(&m, t).unwrap();
            assert!(i.equal(&Ideal::irrelevant_power(m.ring(), t as u32)), "n={n} t={t}");
        }
    }

    #[test]
    fn squarefree_matrix_minors_are_squarefree_monomials() {
        let m = squarefree_matrix(2, 2, &default_alphas(2, &FP), &FP).unwrap();
        let r = m.ring().clone();
        let minors = m.maximal_minors().unwrap();
        let monos = ["x0*x1", "x0*x2", "x1*x2"];
        assert_eq!(minors.len(), 3);
        for (minor, mono) in minors.iter().zip(monos) {
            let target = parse_poly(&r, mono).unwrap();
            let ratio = minor.checked_div(&target).expect("scalar multiple");
            assert_eq!(ratio.degree(), Some(0));
        }
    }

    #[test]
    fn squarefree_degree_one_is_complete_intersection() {
        let m = squarefree_matrix(3, 1, &default_alphas(1, &FP), &FP).unwrap();
        let i = Ideal::of_minors(&m, 1).unwrap();
        assert!(i.equal(&Ideal::irrelevant(m.ring())));
    }

    #[test]
    fn squarefree_matrix_rejects_bad_scalars() {
        let r = Ring::fp(1);
        assert!(squarefree_matrix(3, 2, &[r.cfrom_i64(1), r.cfrom_i64(1)], &FP).is_err());
        assert!(squarefree_matrix(3, 2, &[r.cfrom_i64(0), r.cfrom_i64(1)], &FP).is_err());
    }

    #[test]
    fn squarefree_coordinate_points() {
        // n = 4, d = 2: the ideal of the 5 coordinate points of P^4
        let m = squarefree_matrix(4, 2, &default_alphas(2, &FP), &FP).unwrap();
        let i = Ideal::of_minors(&m, 2).unwrap();
        let r = m.ring();
        let mut gens = Vec::new();
        for a in 0..5usize {
            for b in (a + 1)..5 {
                gens.push(parse_poly(r, &format!("x{a}*x{b}")).unwrap());
            }
        }
        let expect = Ideal::new(r, gens).unwrap();
        assert!(i.equal(&expect));
    }

    #[test]
    fn symmetric_x_at_t2_is_the_veronese_matrix() {
        let x = symmetric_family(2, &SymmetricVariant::X, &FP);
        let r = x.ring().clone();
        let rows: Vec<Vec<Polynomial>> = (0..3)
            .map(|i| (0..3).map(|j| x.entry(i, j).clone()).collect())
            .collect();
        let v = |i: usize| Polynomial::var(&r, i);
        assert_eq!(
            rows,
            vec![
                vec![v(0), v(1), v(2)],
                vec![v(1), v(3), v(4)],
                vec![v(2), v(4), v(5)],
            ]
        );
    }

    #[test]
    fn symmetric_u_and_y_generate_the_same_ideal() {
        for t in [2usize, 3] {
            let y = symmetric_family(t, &SymmetricVariant::Y, &FP);
            let u = symmetric_family(t, &SymmetricVariant::U, &FP);
            let iy = Ideal::of_minors(&y, t).unwrap();
            let iu = Ideal::of_minors(&u, t).unwrap();
            assert!(iy.equal(&iu), "t = {t}");
        }
    }

    #[test]
    fn pencil_members_have_codimension_three() {
        for (s, seed) in [(2i64, 1u64), (7, 2), (-3, 3)] {
            let zs = symmetric_family(2, &SymmetricVariant::Zs { s, seed }, &FP);
            let i = Ideal::of_minors(&zs, 2).unwrap();
            assert_eq!(i.height(), 3, "s={s} seed={seed}");
        }
    }

    #[test]
    fn curve_formula_matches_intersection() {
        for n in [2usize, 3] {
            let c = n_plus_1_curve(n, &FP);
            assert!(c.curve.equal(&c.curve_by_intersection), "n = {n}");
            // the component sum is the coordinate point [0:1:0:...:0]
            let sum = c.cone_component.sum(&c.line_component);
            let r = c.curve.ring();
            let mut point_gens: Vec<Polynomial> = vec![Polynomial::var(r, 0)];
            point_gens.extend((2..=n + 1).map(|i| Polynomial::var(r, i)));
            let point = Ideal::new(r, point_gens).unwrap();
            assert!(sum.equal(&point));
        }
    }

    #[test]
    fn double_link_generators_match_displayed_form() {
        let n = 3;
        let c = n_plus_1_curve(n, &FP);
        let r = c.curve.ring().clone();
        let x1 = Polynomial::var(&r, 1);
        let (d, saturated) = basic_double_link(&c.curve, &c.surface, &x1).unwrap();
        assert!(saturated);
        let expect = Ideal::new(
            &r,
            vec![
                parse_poly(&r, "x0*x1*x4").unwrap(),
                parse_poly(&r, "x1^2*x2").unwrap(),
                parse_poly(&r, "x1^2*x3").unwrap(),
                parse_poly(&r, "x0*x2").unwrap(),
                parse_poly(&r, "x0*x3").unwrap(),
                parse_poly(&r, "x2*x3").unwrap(),
            ],
        )
        .unwrap();
        assert!(d.equal(&expect));
        // membership properties
        for g in c.surface.generators() {
            assert!(d.contains(g));
        }
        for g in c.curve.generators() {
            assert!(d.contains(&g.mul(&x1)));
        }
    }

    #[test]
    fn double_link_rejects_bad_inputs() {
        let c = n_plus_1_curve(3, &FP);
        let r = c.curve.ring().clone();
        // containment failure: swap roles
        assert!(basic_double_link(&c.surface, &c.curve, &Polynomial::var(&r, 1)).is_err());
        // degree-zero linking form
        assert!(basic_double_link(&c.curve, &c.surface, &Polynomial::one(&r)).is_err());
        // zerodivisor: x0 kills the surface component (x2,x3)-part? x0 is a
        // zerodivisor mod the squarefree surface ideal
        let x0 = Polynomial::var(&r, 0);
        assert!(basic_double_link(&c.curve, &c.surface, &x0).is_err());
    }

    #[test]
    fn raw_formula_with_unit_form_returns_the_curve() {
        let c = n_plus_1_curve(3, &FP);
        let r = c.curve.ring().clone();
        let one = Polynomial::one(&r);
        let d = bdl_ideal(&c.curve, &c.surface, &one);
        assert!(d.equal(&c.curve.sum(&c.surface)));
        assert!(d.equal(&c.curve)); // I_S ⊆ I_C
    }

    #[test]
    fn bdl_matrix_row_added_mode() {
        // M = 2x4 catalecticant (rational normal quartic), N = M plus the
        // next catalecticant row, O = N plus an (0,0,F) column
        let r = Ring::fp(6);
        let cat = |rows: usize| {
            PolyMatrix::from_fn(&r, rows, 4, |i, j| Polynomial::var(&r, i + j))
        };
        let m = cat(2);
        let n = cat(3);
        let f = parse_poly(&r, "x5").unwrap();
        let o = bdl_matrix(&m, &n, &f, BdlMode::RowAdded { row: 2, insert_at: 4 }).unwrap();
        assert_eq!((o.rows(), o.cols()), (3, 5));
        let i_c = Ideal::of_minors(&m, 2).unwrap();
        let i_s = Ideal::of_minors(&n, 3).unwrap();
        let i_o = Ideal::of_minors(&o, 3).unwrap();
        assert!(i_o.equal(&i_s.sum(&i_c.multiply_poly(&f))));
    }

    #[test]
    fn bdl_matrix_column_removed_mode() {
        let r = Ring::fp(6);
        let m = PolyMatrix::from_fn(&r, 2, 4, |i, j| Polynomial::var(&r, i + j));
        let n = m.delete_column(1);
        let f = parse_poly(&r, "x5").unwrap();
        let o = bdl_matrix(&m, &n, &f, BdlMode::ColumnRemoved { col: 1 }).unwrap();
        assert_eq!((o.rows(), o.cols()), (2, 4));
        let i_c = Ideal::of_minors(&m, 2).unwrap();
        let i_s = Ideal::of_minors(&n, 2).unwrap();
        let i_o = Ideal::of_minors(&o, 2).unwrap();
        assert!(i_o.equal(&i_s.sum(&i_c.multiply_poly(&f))));
    }

    #[test]
    fn bdl_matrix_degenerate_row_mode_extends_complete_intersection() {
        // N of a single row; M is the empty 0x3 matrix whose "maximal
        // minors" generate the unit ideal: the inserted F column extends
        // the complete intersection by F
        let r = Ring::fp(3);
        let n = PolyMatrix::from_fn(&r, 1, 3, |_, j| Polynomial::var(&r, j));
        let f = parse_poly(&r, "x0^2 + x1*x2").unwrap();
        let col = vec![f.clone()];
        let o = n.insert_column(3, &col).unwrap();
        let i_o = Ideal::of_minors(&o, 1).unwrap();
        let mut gens: Vec<Polynomial> = (0..3).map(|j| Polynomial::var(&r, j)).collect();
        gens.push(f);
        assert!(i_o.equal(&Ideal::new(&r, gens).unwrap()));
    }

    #[test]
    fn cone_family_endpoints() {
        let base = veronese_cone_base(&FP);
        let r = base.ring().clone();
        // s = 1 is the base itself
        let at_one = cone_family(&base, &r.cone());
        assert!(at_one.ideal.equal(&base));
        // s = 0 is the cone over the rational normal quartic: generators
        // free of the last variable
        let at_zero = cone_family(&base, &r.czero());
        for g in at_zero.ideal.generators() {
            for t in g.terms() {
                assert_eq!(t.mono.exp(5), 0);
            }
        }
        // the pencil matrix tells the same story
        let hankel_cone = Ideal::of_minors(&veronese_pencil_matrix(0, &FP), 2).unwrap();
        let veronese = Ideal::of_minors(&veronese_pencil_matrix(1, &FP), 2).unwrap();
        assert_eq!(hankel_cone.dimension(), veronese.dimension());
    }

    #[test]
    fn ruling_lines_curve_shape() {
        let i = ruling_lines_curve(3, 6, &FP);
        assert_eq!(i.dimension(), (2, 2));
        assert_eq!(i.degree(), 9);
        // the quadric is the only degree-2 element
        assert_eq!(i.mu_graded().get(&2), Some(&1));
        let r = i.ring();
        assert!(i.contains(&parse_poly(r, "x0*x3 - x1*x2").unwrap()));
    }

    #[test]
    fn construction_ids_resolve() {
        assert!(matches!(by_id("artin?n=2&t=2", &FP), Ok(ConstructionOutput::Matrix(_))));
        assert!(matches!(by_id("symm.Y?t=3", &FP), Ok(ConstructionOutput::Matrix(_))));
        assert!(matches!(by_id("npluscurve?n=3", &FP), Ok(ConstructionOutput::Ideal(_))));
        assert!(by_id("nope", &FP).is_err());
        assert!(by_id("sqfr?n=4&d=2", &FP).is_ok());
    }

    #[test]
    fn degree_additivity_of_double_links() {
        // deg(R/I_D) = deg(R/I_C) + deg(F) * deg(R/I_S) on the n = 3 case,
        // via Hilbert polynomials
        let c = n_plus_1_curve(3, &FP);
        let r = c.curve.ring().clone();
        let x1 = Polynomial::var(&r, 1);
        let (d, _) = basic_double_link(&c.curve, &c.surface, &x1).unwrap();
        assert_eq!(d.degree(), c.curve.degree() + 1 * c.surface.degree());
        // a quadric link doubles the surface contribution
        let f2 = parse_poly(&r, "x1^2 + x1*x4").unwrap();
        let (d2, _) = basic_double_link(&c.curve, &c.surface, &f2).unwrap();
        assert_eq!(d2.degree(), c.curve.degree() + 2 * c.surface.degree());
    }

    #[test]
    fn scheme_construction_outputs_are_saturated() {
        // the scheme-defining constructions hand back saturated ideals
        // (the Artinian families are excluded: no power of the maximal
        // ideal other than the first is saturated)
        let samples: Vec<Ideal> = vec![
            Ideal::of_minors(&squarefree_matrix(4, 2, &default_alphas(2, &FP), &FP).unwrap(), 2)
                .unwrap(),
            Ideal::of_minors(&symmetric_family(2, &SymmetricVariant::X, &FP), 2).unwrap(),
            Ideal::of_minors(&symmetric_family(2, &SymmetricVariant::U, &FP), 2).unwrap(),
            n_plus_1_curve(3, &FP).curve,
            n_plus_1_curve(3, &FP).surface,
            ruling_lines_curve(3, 6, &FP),
            veronese_cone_base(&FP),
        ];
        for i in &samples {
            assert!(i.is_saturated(), "{i:?}");
        }
    }

    #[test]
    fn cone_family_sections_are_constant() {
        let base = veronese_cone_base(&FP);
        let r = base.ring().clone();
        let h = Polynomial::var(&r, 5);
        let reference = cone_family(&base, &r.cone()).ideal.hyperplane_section(&h).unwrap();
        for s in [0i64, 9, 1] {
            let member = cone_family(&base, &r.cfrom_i64(s));
            let section = member.ideal.hyperplane_section(&h).unwrap();
            assert!(section.equal(&reference), "s = {s}");
        }
    }

    #[test]
    fn pencil_resolution_is_constant_in_s() {
        let base = veronese_cone_base(&FP);
        let r = base.ring().clone();
        let mut tables = Vec::new();
        for s in [0i64, 11, 1] {
            let member = cone_family(&base, &r.cfrom_i64(s));
            let res = free_resolution(&member.ideal, None).unwrap();
            tables.push(res.betti_table().unwrap());
        }
        assert_eq!(tables[0], tables[1]);
        assert_eq!(tables[1], tables[2]);
    }
}
