//! Sparse multivariate polynomials over exact scalars.
//!
//! One type serves the three rings of the theory: the forms S, the
//! derivation algebra T, and the coordinate ring R (identified with T); the
//! contraction operation decides which argument acts as operator. Monomials
//! are ordered graded-lex with x0 > x1 > …, which fixes every basis ordering
//! and makes printed output and reduced bases canonical.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{Scalar, ScalarField};

/// Exponent vector of fixed length `num_vars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn unit(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    pub fn variable(num_vars: usize, index: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise quotient when `rhs` divides `self`.
    pub fn checked_div(&self, rhs: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&rhs.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }
}

/// Graded-lex: compare total degree first, then exponent vectors
/// lexicographically (x0 most significant).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The monomials of one graded piece, listed in descending graded-lex order
/// (x0^d first). Length is the dimension of S_d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    num_vars: usize,
    degree: usize,
    monomials: Vec<Monomial>,
}

impl MonomialBasis {
    pub fn new(num_vars: usize, degree: usize) -> Self {
        let mut monomials = Vec::new();
        let mut current = vec![0u32; num_vars];
        fill_descending(&mut monomials, &mut current, 0, degree as u32, num_vars);
        MonomialBasis {
            num_vars,
            degree,
            monomials,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn iter(&self) -> impl Iterator<Item = &Monomial> {
        self.monomials.iter()
    }

    /// Position of a monomial in the descending graded-lex listing.
    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.monomials
            .binary_search_by(|probe| m.cmp(probe))
            .ok()
    }
}

fn fill_descending(
    out: &mut Vec<Monomial>,
    current: &mut Vec<u32>,
    var: usize,
    remaining: u32,
    num_vars: usize,
) {
    if var == num_vars - 1 {
        current[var] = remaining;
        out.push(Monomial(current.clone()));
        return;
    }
    let mut e = remaining;
    loop {
        current[var] = e;
        fill_descending(out, current, var + 1, remaining - e, num_vars);
        if e == 0 {
            break;
        }
        e -= 1;
    }
}

/// Conventional variable names: x; x,y; x,y,z; x,y,z,w; x,y,z,w,t; x0,x1,…
pub fn default_var_names(num_vars: usize) -> Vec<String> {
    match num_vars {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        4 => vec!["x".into(), "y".into(), "z".into(), "w".into()],
        5 => vec!["x".into(), "y".into(), "z".into(), "w".into(), "t".into()],
        n => (0..n).map(|i| format!("x{i}")).collect(),
    }
}

/// Sparse multivariate polynomial; stored coefficients are never zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    num_vars: usize,
    field: ScalarField,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero(num_vars: usize, field: ScalarField) -> Self {
        MultiPoly {
            num_vars,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, value: &Scalar) -> Self {
        let mut p = Self::zero(num_vars, value.field().clone());
        if !value.is_zero() {
            p.terms.insert(Monomial::unit(num_vars), value.clone());
        }
        p
    }

    pub fn variable(num_vars: usize, index: usize, field: ScalarField) -> Result<Self> {
        if index >= num_vars {
            return Err(Error::IndexOutOfRange {
                index,
                num_vars,
            });
        }
        let mut p = Self::zero(num_vars, field);
        let one = p.field.one();
        p.terms.insert(Monomial::variable(num_vars, index), one);
        Ok(p)
    }

    pub fn from_terms(
        num_vars: usize,
        field: ScalarField,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Result<Self> {
        let mut p = Self::zero(num_vars, field);
        for (m, c) in terms {
            if m.num_vars() != num_vars {
                return Err(Error::ArityMismatch {
                    expected: num_vars,
                    found: m.num_vars(),
                });
            }
            if c.field() != &p.field {
                return Err(Error::FieldMismatch);
            }
            if c.is_zero() {
                continue;
            }
            match p.terms.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = e.get().checked_add(&c)?;
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        e.insert(sum);
                    }
                }
            }
        }
        Ok(p)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn field(&self) -> &ScalarField {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Greatest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// `Some(d)` when the polynomial is nonzero and homogeneous of degree d.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    fn check_compatible(&self, rhs: &MultiPoly) -> Result<()> {
        if self.num_vars != rhs.num_vars {
            return Err(Error::ArityMismatch {
                expected: self.num_vars,
                found: rhs.num_vars,
            });
        }
        if self.field != rhs.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, rhs: &MultiPoly) -> Result<MultiPoly> {
        self.check_compatible(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            match out.terms.entry(m.clone()) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c.clone());
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = e.get().checked_add(c)?;
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        e.insert(sum);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &MultiPoly) -> Result<MultiPoly> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.checked_neg();
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Result<MultiPoly> {
        if c.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if c.is_zero() {
            return Ok(Self::zero(self.num_vars, self.field.clone()));
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.checked_mul(c)?;
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &MultiPoly) -> Result<MultiPoly> {
        self.check_compatible(rhs)?;
        let mut acc: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let m = m1.mul(m2);
                let c = c1.checked_mul(c2)?;
                match acc.entry(m) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let sum = e.get().checked_add(&c)?;
                        if sum.is_zero() {
                            e.remove();
                        } else {
                            e.insert(sum);
                        }
                    }
                }
            }
        }
        Ok(MultiPoly {
            num_vars: self.num_vars,
            field: self.field.clone(),
            terms: acc,
        })
    }

    pub fn pow(&self, mut n: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = Self::constant(self.num_vars, &self.field.one());
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base).expect("compatible by construction");
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base).expect("compatible by construction");
            }
        }
        acc
    }

    /// Formal partial derivative with respect to variable `index`.
    pub fn partial_derivative(&self, index: usize) -> Result<MultiPoly> {
        if index >= self.num_vars {
            return Err(Error::IndexOutOfRange {
                index,
                num_vars: self.num_vars,
            });
        }
        let mut out = Self::zero(self.num_vars, self.field.clone());
        for (m, c) in &self.terms {
            let e = m.exponents()[index];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[index] = e - 1;
            let factor = self
                .field
                .embed(&BigRational::from_integer(BigInt::from(e)));
            out.terms
                .insert(Monomial::new(exps), c.checked_mul(&factor)?);
        }
        Ok(out)
    }

    /// Substitution `x_i <- (A x)_i`; degrees are preserved because A is
    /// invertible.
    pub fn substitute_linear(&self, a: &LinearChange) -> Result<MultiPoly> {
        if a.size() != self.num_vars {
            return Err(Error::ArityMismatch {
                expected: self.num_vars,
                found: a.size(),
            });
        }
        if a.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        // images of the variables
        let mut images = Vec::with_capacity(self.num_vars);
        for i in 0..self.num_vars {
            let mut row = Self::zero(self.num_vars, self.field.clone());
            for j in 0..self.num_vars {
                let coeff = a.entry(i, j);
                if coeff.is_zero() {
                    continue;
                }
                let var = Self::variable(self.num_vars, j, self.field.clone())?;
                row = row.add(&var.scale(coeff)?)?;
            }
            images.push(row);
        }
        let mut out = Self::zero(self.num_vars, self.field.clone());
        for (m, c) in &self.terms {
            let mut term = Self::constant(self.num_vars, c);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e))?;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Scales so the graded-lex leading coefficient becomes 1.
    pub fn normalized(&self) -> MultiPoly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.invert().expect("leading coefficient nonzero");
                self.scale(&inv).expect("same field")
            }
        }
    }

    /// True when `self = c * rhs` for some nonzero scalar c.
    pub fn eq_up_to_scalar(&self, rhs: &MultiPoly) -> bool {
        if self.num_vars != rhs.num_vars || self.field != rhs.field {
            return false;
        }
        if self.is_zero() || rhs.is_zero() {
            return self.is_zero() && rhs.is_zero();
        }
        self.normalized() == rhs.normalized()
    }

    /// Coordinates with respect to a graded basis. The polynomial must be
    /// homogeneous of the basis degree (zero is allowed).
    pub fn to_vector(&self, basis: &MonomialBasis) -> Result<Vec<Scalar>> {
        if basis.num_vars() != self.num_vars {
            return Err(Error::ArityMismatch {
                expected: self.num_vars,
                found: basis.num_vars(),
            });
        }
        if !self.is_zero() {
            let d = self.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
            if d != basis.degree() {
                return Err(Error::DegreeMismatch(format!(
                    "polynomial has degree {d}, basis has degree {}",
                    basis.degree()
                )));
            }
        }
        let mut v = vec![self.field.zero(); basis.len()];
        for (m, c) in &self.terms {
            let idx = basis.index_of(m).expect("homogeneous of basis degree");
            v[idx] = c.clone();
        }
        Ok(v)
    }

    pub fn from_vector(
        coords: &[Scalar],
        basis: &MonomialBasis,
        field: ScalarField,
    ) -> Result<MultiPoly> {
        if coords.len() != basis.len() {
            return Err(Error::DegreeMismatch(format!(
                "vector length {} does not match basis size {}",
                coords.len(),
                basis.len()
            )));
        }
        Self::from_terms(
            basis.num_vars(),
            field,
            basis
                .iter()
                .cloned()
                .zip(coords.iter().cloned())
                .filter(|(_, c)| !c.is_zero()),
        )
    }

    /// Canonical text form: terms in descending graded-lex order with
    /// explicit `*` and `^`.
    pub fn to_text(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.num_vars, "one name per variable");
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let mono = format_monomial(m, names);
            match c.to_rational() {
                Some(r) => {
                    if out.is_empty() {
                        if r.is_negative() {
                            out.push('-');
                        }
                    } else if r.is_negative() {
                        out.push_str(" - ");
                    } else {
                        out.push_str(" + ");
                    }
                    let mag = r.abs();
                    if mono.is_empty() {
                        out.push_str(&mag.to_string());
                    } else if mag.is_one() {
                        out.push_str(&mono);
                    } else {
                        out.push_str(&format!("{mag}*{mono}"));
                    }
                }
                None => {
                    if !out.is_empty() {
                        out.push_str(" + ");
                    }
                    if mono.is_empty() {
                        out.push_str(&format!("({c})"));
                    } else {
                        out.push_str(&format!("({c})*{mono}"));
                    }
                }
            }
        }
        out
    }
}

fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{e}", names[i])),
        }
    }
    parts.join("*")
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text(&default_var_names(self.num_vars)))
    }
}

/// Invertible change of variables on the degree-one part.
///
/// Only invertibility is required, not determinant 1: every comparison in
/// this crate is made up to scalars, which absorbs the det factors.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearChange {
    size: usize,
    field: ScalarField,
    entries: Vec<Scalar>,
    det: Scalar,
}

impl LinearChange {
    pub fn new(size: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        if rows.len() != size || rows.iter().any(|r| r.len() != size) {
            return Err(Error::ArityMismatch {
                expected: size,
                found: rows.len(),
            });
        }
        let field = rows
            .first()
            .and_then(|r| r.first())
            .map(|s| s.field().clone())
            .ok_or(Error::SingularMatrix)?;
        let matrix = Matrix::from_rows(field.clone(), rows.clone())?;
        let det = matrix.det()?;
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(LinearChange {
            size,
            field,
            entries: rows.into_iter().flatten().collect(),
            det,
        })
    }

    pub fn from_integers(size: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            size,
            rows.iter()
                .map(|r| r.iter().map(|&n| Scalar::from_integer(n)).collect())
                .collect(),
        )
    }

    pub fn identity(size: usize, field: ScalarField) -> Self {
        let rows = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| if i == j { field.one() } else { field.zero() })
                    .collect()
            })
            .collect();
        Self::new(size, rows).expect("identity is invertible")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn field(&self) -> &ScalarField {
        &self.field
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.size + j]
    }

    pub fn determinant(&self) -> &Scalar {
        &self.det
    }

    fn to_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.size, self.size, self.field.clone());
        for i in 0..self.size {
            for j in 0..self.size {
                m.set(i, j, self.entry(i, j).clone());
            }
        }
        m
    }

    fn from_matrix(m: &Matrix) -> Self {
        let rows = (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| m.entry(i, j).clone()).collect())
            .collect();
        Self::new(m.rows(), rows).expect("matrix is invertible")
    }

    pub fn inverse(&self) -> LinearChange {
        let inv = self.to_matrix().inverse().expect("determinant nonzero");
        Self::from_matrix(&inv)
    }

    pub fn transpose(&self) -> LinearChange {
        Self::from_matrix(&self.to_matrix().transpose())
    }

    /// Matrix product `self * rhs`.
    pub fn compose(&self, rhs: &LinearChange) -> Result<LinearChange> {
        let prod = self.to_matrix().mul(&rhs.to_matrix())?;
        Ok(Self::from_matrix(&prod))
    }

    /// The contragredient `transpose(A)^{-1}`, the matrix by which dual
    /// coordinates transform.
    pub fn contragredient(&self) -> LinearChange {
        self.inverse().transpose()
    }
}

/// Exact determinant of a square matrix of polynomials by cofactor
/// expansion along the first row; fine at the sizes the theory needs
/// (at most 5x5).
pub fn poly_matrix_determinant(rows: &[Vec<MultiPoly>]) -> Result<MultiPoly> {
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(Error::ArityMismatch {
            expected: n,
            found: rows.iter().map(Vec::len).max().unwrap_or(0),
        });
    }
    let num_vars = rows[0][0].num_vars();
    let field = rows[0][0].field().clone();
    for row in rows {
        for p in row {
            if p.num_vars() != num_vars {
                return Err(Error::ArityMismatch {
                    expected: num_vars,
                    found: p.num_vars(),
                });
            }
            if p.field() != &field {
                return Err(Error::FieldMismatch);
            }
        }
    }
    det_recursive(rows, &(0..n).collect::<Vec<_>>(), 0, num_vars, &field)
}

fn det_recursive(
    rows: &[Vec<MultiPoly>],
    cols: &[usize],
    row: usize,
    num_vars: usize,
    field: &ScalarField,
) -> Result<MultiPoly> {
    if cols.len() == 1 {
        return Ok(rows[row][cols[0]].clone());
    }
    let mut acc = MultiPoly::zero(num_vars, field.clone());
    for (k, &col) in cols.iter().enumerate() {
        let entry = &rows[row][col];
        if entry.is_zero() {
            continue;
        }
        let remaining: Vec<usize> = cols.iter().copied().filter(|&c| c != col).collect();
        let minor = det_recursive(rows, &remaining, row + 1, num_vars, field)?;
        let signed = entry.mul(&minor)?;
        acc = if k % 2 == 0 {
            acc.add(&signed)?
        } else {
            acc.sub(&signed)?
        };
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars3() -> (MultiPoly, MultiPoly, MultiPoly) {
        let f = ScalarField::Rational;
        (
            MultiPoly::variable(3, 0, f.clone()).unwrap(),
            MultiPoly::variable(3, 1, f.clone()).unwrap(),
            MultiPoly::variable(3, 2, f).unwrap(),
        )
    }

    #[test]
    fn product_of_sum_and_difference() {
        let f = ScalarField::Rational;
        let x = MultiPoly::variable(2, 0, f.clone()).unwrap();
        let y = MultiPoly::variable(2, 1, f).unwrap();
        let p = x.add(&y).unwrap().mul(&x.sub(&y).unwrap()).unwrap();
        let expect = x.pow(2).sub(&y.pow(2)).unwrap();
        assert_eq!(p, expect);
    }

    #[test]
    fn example_cubic_expansion() {
        // (x+y)^3 + y^3 + z^3 = x^3 + 3x^2y + 3xy^2 + 2y^3 + z^3
        let (x, y, z) = vars3();
        let g = x.add(&y).unwrap().pow(3).add(&y.pow(3)).unwrap().add(&z.pow(3)).unwrap();
        assert_eq!(g.to_text(&default_var_names(3)), "x^3 + 3*x^2*y + 3*x*y^2 + 2*y^3 + z^3");
        assert_eq!(g.num_terms(), 5);
        let cancel = g.add(&g.neg()).unwrap();
        assert!(cancel.is_zero());
    }

    #[test]
    fn partial_derivatives() {
        let (x, y, z) = vars3();
        let fermat = x.pow(3).add(&y.pow(3)).unwrap().add(&z.pow(3)).unwrap();
        let dx = fermat.partial_derivative(0).unwrap();
        assert_eq!(dx.to_text(&default_var_names(3)), "3*x^2");
        let g = x.add(&y).unwrap().pow(3).add(&y.pow(3)).unwrap().add(&z.pow(3)).unwrap();
        let dgx = g.partial_derivative(0).unwrap();
        assert_eq!(dgx.to_text(&default_var_names(3)), "3*x^2 + 6*x*y + 3*y^2");
        assert!(y.pow(3).partial_derivative(0).unwrap().is_zero());
        assert!(matches!(
            x.partial_derivative(7),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn substitution_by_shear_gives_example_cubic() {
        let (x, y, z) = vars3();
        let fermat = x.pow(3).add(&y.pow(3)).unwrap().add(&z.pow(3)).unwrap();
        let a = LinearChange::from_integers(3, &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let g = fermat.substitute_linear(&a).unwrap();
        let expect = x.add(&y).unwrap().pow(3).add(&y.pow(3)).unwrap().add(&z.pow(3)).unwrap();
        assert_eq!(g, expect);
        // inverse composition is the identity substitution
        let back = g.substitute_linear(&a.inverse()).unwrap();
        assert_eq!(back, fermat);
        let id = LinearChange::identity(3, ScalarField::Rational);
        assert_eq!(fermat.substitute_linear(&id).unwrap(), fermat);
    }

    #[test]
    fn singular_linear_change_rejected() {
        let a = LinearChange::from_integers(2, &[&[1, 2], &[2, 4]]);
        assert_eq!(a.unwrap_err(), Error::SingularMatrix);
    }

    #[test]
    fn determinant_of_diagonal_and_one_by_one() {
        let (x, y, z) = vars3();
        let zero = MultiPoly::zero(3, ScalarField::Rational);
        let det = poly_matrix_determinant(&[
            vec![x.clone(), zero.clone(), zero.clone()],
            vec![zero.clone(), y.clone(), zero.clone()],
            vec![zero.clone(), zero.clone(), z.clone()],
        ])
        .unwrap();
        assert_eq!(det, x.mul(&y).unwrap().mul(&z).unwrap());
        let single = poly_matrix_determinant(&[vec![x.clone()]]).unwrap();
        assert_eq!(single, x);
    }

    #[test]
    fn determinant_row_swap_flips_sign() {
        let (x, y, z) = vars3();
        let zero = MultiPoly::zero(3, ScalarField::Rational);
        let rows = vec![
            vec![x.clone(), y.clone(), zero.clone()],
            vec![y.clone(), z.clone(), x.clone()],
            vec![zero.clone(), x.clone(), y.clone()],
        ];
        let mut swapped = rows.clone();
        swapped.swap(0, 1);
        let d1 = poly_matrix_determinant(&rows).unwrap();
        let d2 = poly_matrix_determinant(&swapped).unwrap();
        assert_eq!(d1, d2.neg());
    }

    #[test]
    fn hasse_determinant_with_parameter_variable() {
        // variables (x, y, z, a); the matrix of the pencil member scaled by 1/3:
        // det = (8 - 2a^3) xyz - 2a^2 (x^3 + y^3 + z^3)
        let f = ScalarField::Rational;
        let x = MultiPoly::variable(4, 0, f.clone()).unwrap();
        let y = MultiPoly::variable(4, 1, f.clone()).unwrap();
        let z = MultiPoly::variable(4, 2, f.clone()).unwrap();
        let a = MultiPoly::variable(4, 3, f.clone()).unwrap();
        let two = MultiPoly::constant(4, &Scalar::from_integer(2));
        let eight = MultiPoly::constant(4, &Scalar::from_integer(8));
        let neg_az = a.mul(&z).unwrap().neg();
        let neg_ay = a.mul(&y).unwrap().neg();
        let neg_ax = a.mul(&x).unwrap().neg();
        let rows = vec![
            vec![two.mul(&x).unwrap(), neg_az.clone(), neg_ay.clone()],
            vec![neg_az, two.mul(&y).unwrap(), neg_ax.clone()],
            vec![neg_ay, neg_ax, two.mul(&z).unwrap()],
        ];
        let det = poly_matrix_determinant(&rows).unwrap();
        let xyz = x.mul(&y).unwrap().mul(&z).unwrap();
        let fermat = x.pow(3).add(&y.pow(3)).unwrap().add(&z.pow(3)).unwrap();
        let expect = eight
            .sub(&two.mul(&a.pow(3)).unwrap())
            .unwrap()
            .mul(&xyz)
            .unwrap()
            .sub(&two.mul(&a.pow(2)).unwrap().mul(&fermat).unwrap())
            .unwrap();
        assert_eq!(det, expect);
    }

    #[test]
    fn basis_sizes_and_coordinates() {
        let b32 = MonomialBasis::new(3, 2);
        assert_eq!(b32.len(), 6);
        let b24 = MonomialBasis::new(2, 4);
        assert_eq!(b24.len(), 5);
        // x^2 + 2yz in coordinates
        let (x, y, z) = vars3();
        let p = x
            .pow(2)
            .add(&y.mul(&z).unwrap().scale(&Scalar::from_integer(2)).unwrap())
            .unwrap();
        let v = p.to_vector(&b32).unwrap();
        let strings: Vec<String> = v.iter().map(|s| s.to_string()).collect();
        assert_eq!(strings, vec!["1", "0", "0", "0", "2", "0"]);
        let back = MultiPoly::from_vector(&v, &b32, ScalarField::Rational).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn to_vector_rejects_inhomogeneous() {
        let (x, y, _) = vars3();
        let p = x.pow(2).add(&y).unwrap();
        assert_eq!(p.to_vector(&MonomialBasis::new(3, 2)), Err(Error::NotHomogeneous));
    }

    #[test]
    fn up_to_scalar_equality() {
        let (x, y, _) = vars3();
        let p = x.mul(&y).unwrap().scale(&Scalar::from_integer(216)).unwrap();
        let q = x.mul(&y).unwrap().scale(&Scalar::from_ratio(-1, 3)).unwrap();
        assert!(p.eq_up_to_scalar(&q));
        assert!(!p.eq_up_to_scalar(&x.pow(2)));
        let zero = MultiPoly::zero(3, ScalarField::Rational);
        assert!(zero.eq_up_to_scalar(&zero));
        assert!(!zero.eq_up_to_scalar(&p));
    }

    #[test]
    fn degree_of_product_adds() {
        let (x, y, z) = vars3();
        let p = x.add(&y).unwrap().pow(2);
        let q = z.pow(3);
        assert_eq!(
            p.mul(&q).unwrap().degree(),
            Some(p.degree().unwrap() + q.degree().unwrap())
        );
    }
}
