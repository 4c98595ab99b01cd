//! Exact field arithmetic over ℚ and over a simple extension ℚ(α).
//!
//! An extension is described by a monic squarefree minimal polynomial; its
//! elements are coefficient vectors reduced modulo that polynomial after
//! every operation, so equal values have identical representations and
//! structural equality is sound. Irreducibility is not verified: a reducible
//! modulus surfaces lazily as [`Error::NotInvertible`].

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::unipoly::UniPoly;

/// A simple algebraic extension ℚ(α), α a root of `minimal_polynomial`.
#[derive(Debug, PartialEq, Eq)]
pub struct NumberField {
    minimal_polynomial: UniPoly,
    symbol: String,
}

impl NumberField {
    /// The minimal polynomial must be monic of degree >= 1 and squarefree.
    pub fn new(minimal_polynomial: UniPoly, symbol: impl Into<String>) -> Result<Arc<Self>> {
        let deg = minimal_polynomial.degree().ok_or(Error::ZeroPolynomial)?;
        if deg < 1 {
            return Err(Error::DegreeMismatch(
                "minimal polynomial must have degree >= 1".into(),
            ));
        }
        if !minimal_polynomial.is_monic() {
            return Err(Error::DegreeMismatch(
                "minimal polynomial must be monic".into(),
            ));
        }
        if !minimal_polynomial.is_squarefree() {
            return Err(Error::DegreeMismatch(
                "minimal polynomial must be squarefree".into(),
            ));
        }
        Ok(Arc::new(NumberField {
            minimal_polynomial,
            symbol: symbol.into(),
        }))
    }

    /// ℚ(√d), the field with minimal polynomial `t^2 - d`.
    pub fn quadratic(d: &BigRational, symbol: impl Into<String>) -> Result<Arc<Self>> {
        let min = UniPoly::from_coeffs(vec![-d.clone(), BigRational::zero(), BigRational::one()]);
        Self::new(min, symbol)
    }

    pub fn minimal_polynomial(&self) -> &UniPoly {
        &self.minimal_polynomial
    }

    pub fn symbol(&self) -> &str {
        &self.symbol
    }

    pub fn degree(&self) -> usize {
        self.minimal_polynomial.degree().expect("degree >= 1")
    }

    /// The adjoined root α as a scalar.
    pub fn generator(self: &Arc<Self>) -> Scalar {
        ScalarField::Extension(Arc::clone(self)).element_from_coeffs(vec![
            BigRational::zero(),
            BigRational::one(),
        ])
    }
}

/// The coefficient field of a scalar: ℚ itself or a simple extension.
#[derive(Clone, Debug)]
pub enum ScalarField {
    Rational,
    Extension(Arc<NumberField>),
}

impl PartialEq for ScalarField {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ScalarField::Rational, ScalarField::Rational) => true,
            (ScalarField::Extension(a), ScalarField::Extension(b)) => {
                Arc::ptr_eq(a, b) || a == b
            }
            _ => false,
        }
    }
}

impl Eq for ScalarField {}

impl ScalarField {
    pub fn rational() -> Self {
        ScalarField::Rational
    }

    pub fn extension(field: Arc<NumberField>) -> Self {
        ScalarField::Extension(field)
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, ScalarField::Rational)
    }

    pub fn degree(&self) -> usize {
        match self {
            ScalarField::Rational => 1,
            ScalarField::Extension(nf) => nf.degree(),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.embed(&BigRational::zero())
    }

    pub fn one(&self) -> Scalar {
        self.embed(&BigRational::one())
    }

    /// Embeds a rational number into this field.
    pub fn embed(&self, r: &BigRational) -> Scalar {
        let mut coeffs = vec![BigRational::zero(); self.degree()];
        coeffs[0] = r.clone();
        Scalar {
            field: self.clone(),
            coeffs,
        }
    }

    pub fn embed_integer(&self, n: i64) -> Scalar {
        self.embed(&BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds an element from coefficients in the power basis of α,
    /// reducing modulo the minimal polynomial if needed.
    pub fn element_from_coeffs(&self, coeffs: Vec<BigRational>) -> Scalar {
        let reduced = self.reduce(UniPoly::from_coeffs(coeffs));
        let mut out = vec![BigRational::zero(); self.degree()];
        for (i, c) in reduced.coefficients().iter().enumerate() {
            out[i] = c.clone();
        }
        Scalar {
            field: self.clone(),
            coeffs: out,
        }
    }

    fn reduce(&self, p: UniPoly) -> UniPoly {
        match self {
            ScalarField::Rational => {
                debug_assert!(p.degree().unwrap_or(0) == 0);
                p
            }
            ScalarField::Extension(nf) => {
                if p.degree().unwrap_or(0) < nf.degree() {
                    p
                } else {
                    let (_, r) = p.div_rem(nf.minimal_polynomial()).expect("monic modulus");
                    r
                }
            }
        }
    }
}

/// An exact field element: a rational number, or an element of ℚ(α) stored
/// as a coefficient vector of length equal to the extension degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar {
    field: ScalarField,
    coeffs: Vec<BigRational>,
}

impl Scalar {
    pub fn from_rational(r: BigRational) -> Self {
        Scalar {
            field: ScalarField::Rational,
            coeffs: vec![r],
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn field(&self) -> &ScalarField {
        &self.field
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// `Some` when the element lies in the prime field ℚ.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-embeds a rational-valued scalar into another field.
    pub fn lift_to(&self, field: &ScalarField) -> Result<Scalar> {
        if &self.field == field {
            return Ok(self.clone());
        }
        match self.to_rational() {
            Some(r) => Ok(field.embed(&r)),
            None => Err(Error::FieldMismatch),
        }
    }

    fn check_field(&self, rhs: &Scalar) -> Result<()> {
        if self.field == rhs.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn as_unipoly(&self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.clone())
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar> {
        self.check_field(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Scalar {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.check_field(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Scalar {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        self.check_field(rhs)?;
        match &self.field {
            ScalarField::Rational => Ok(Scalar::from_rational(&self.coeffs[0] * &rhs.coeffs[0])),
            field => {
                let prod = self.as_unipoly().mul(&rhs.as_unipoly());
                Ok(field.element_from_coeffs(prod.coefficients().to_vec()))
            }
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        self.checked_mul(&rhs.invert()?)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the minimal polynomial. A non-constant gcd means the modulus is
    /// reducible; that is reported, not silently factored.
    pub fn invert(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match &self.field {
            ScalarField::Rational => Ok(Scalar::from_rational(self.coeffs[0].recip())),
            ScalarField::Extension(nf) => {
                let (g, s, _) = self.as_unipoly().extended_gcd(nf.minimal_polynomial());
                let gd = g.degree().unwrap_or(0);
                if gd > 0 {
                    return Err(Error::NotInvertible { gcd_degree: gd });
                }
                // g is monic constant 1: s * self ≡ 1 (mod min poly)
                Ok(self.field.element_from_coeffs(s.coefficients().to_vec()))
            }
        }
    }

    pub fn checked_neg(&self) -> Scalar {
        Scalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.checked_mul(&base).expect("same field");
            }
            n >>= 1;
            if n > 0 {
                base = base.checked_mul(&base).expect("same field");
            }
        }
        acc
    }

    /// Monic polynomial of least degree with this scalar as a root, found by
    /// Gaussian elimination on the power sequence 1, e, e², …
    pub fn annihilating_polynomial(&self) -> UniPoly {
        if let Some(r) = self.to_rational() {
            return UniPoly::from_coeffs(vec![-r, BigRational::one()]);
        }
        let n = self.field.degree();
        // rows[i] = coefficient vector of self^i
        let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(n + 1);
        let mut power = self.field.one();
        for _ in 0..=n {
            rows.push(power.coeffs.clone());
            power = power.checked_mul(self).expect("same field");
        }
        for k in 1..=n {
            if let Some(combo) = kernel_vector(&rows[..=k], n) {
                return UniPoly::from_coeffs(combo).monic();
            }
        }
        unreachable!("power sequence of length degree+1 is always dependent")
    }
}

/// Finds `c` with `sum_i c_i * rows[i] = 0` and `c` nonzero, if one exists.
/// Deterministic Gaussian elimination over ℚ; returns the combination with
/// the highest used power having coefficient 1.
fn kernel_vector(rows: &[Vec<BigRational>], width: usize) -> Option<Vec<BigRational>> {
    let k = rows.len();
    // transpose: unknowns are the combination coefficients
    let mut m: Vec<Vec<BigRational>> = (0..width)
        .map(|j| (0..k).map(|i| rows[i][j].clone()).collect())
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; k];
    let mut pivot_row = 0usize;
    for col in 0..k {
        let Some(sel) = (pivot_row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, sel);
        let inv = m[pivot_row][col].recip();
        for j in col..k {
            m[pivot_row][j] = &m[pivot_row][j] * &inv;
        }
        for r in 0..m.len() {
            if r != pivot_row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for j in col..k {
                    let delta = &factor * &m[pivot_row][j];
                    m[r][j] -= delta;
                }
            }
        }
        pivot_of_col[col] = Some(pivot_row);
        pivot_row += 1;
    }
    // the last column must be free for a dependence ending at the top power
    if pivot_of_col[k - 1].is_some() {
        return None;
    }
    let mut combo = vec![BigRational::zero(); k];
    combo[k - 1] = BigRational::one();
    for col in 0..k - 1 {
        if let Some(pr) = pivot_of_col[col] {
            combo[col] = -m[pr][k - 1].clone();
        }
    }
    Some(combo)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{r}");
        }
        let symbol = match &self.field {
            ScalarField::Extension(nf) => nf.symbol(),
            ScalarField::Rational => unreachable!("rational scalars print above"),
        };
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push('-');
            } else {
                out.push('+');
            }
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            if k > 0 {
                if show_coeff {
                    out.push('*');
                }
                out.push_str(symbol);
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn sqrt3_field() -> Arc<NumberField> {
        NumberField::new(UniPoly::from_integers(&[-3, 0, 1]), "a").unwrap()
    }

    #[test]
    fn rational_arithmetic() {
        let a = Scalar::from_ratio(1, 2);
        let b = Scalar::from_ratio(1, 3);
        assert_eq!(a.checked_add(&b).unwrap(), Scalar::from_ratio(5, 6));
        assert_eq!(Scalar::from_ratio(2, 3).invert().unwrap(), Scalar::from_ratio(3, 2));
    }

    #[test]
    fn reduction_by_minimal_polynomial() {
        let nf = sqrt3_field();
        let alpha = nf.generator();
        assert_eq!(alpha.checked_mul(&alpha).unwrap().to_rational(), Some(q(3, 1)));
    }

    #[test]
    fn quadratic_with_complex_root() {
        // β² - 2β + 4 = 0, the field housing 1 ± √3·i; (β-1)² = -3
        let nf = NumberField::new(UniPoly::from_integers(&[4, -2, 1]), "b").unwrap();
        let beta = nf.generator();
        let one = beta.field().one();
        let m = beta.checked_sub(&one).unwrap();
        assert_eq!(m.checked_mul(&m).unwrap().to_rational(), Some(q(-3, 1)));
    }

    #[test]
    fn inversion_in_extension() {
        // invert(1 + α) = (α - 1)/2 over ℚ(α), α² = 3
        let nf = sqrt3_field();
        let field = ScalarField::extension(Arc::clone(&nf));
        let e = field.element_from_coeffs(vec![q(1, 1), q(1, 1)]);
        let inv = e.invert().unwrap();
        assert_eq!(inv, field.element_from_coeffs(vec![q(-1, 2), q(1, 2)]));
        assert!(e.checked_mul(&inv).unwrap().is_one());
    }

    #[test]
    fn invert_zero_errors() {
        assert_eq!(Scalar::from_integer(0).invert(), Err(Error::DivisionByZero));
        let nf = sqrt3_field();
        let field = ScalarField::extension(nf);
        assert_eq!(field.zero().invert(), Err(Error::DivisionByZero));
    }

    #[test]
    fn reducible_modulus_surfaces_as_not_invertible() {
        // t² - 1 is squarefree but reducible; t - 1 is a zero divisor
        let nf = NumberField::new(UniPoly::from_integers(&[-1, 0, 1]), "u").unwrap();
        let field = ScalarField::extension(nf);
        let e = field.element_from_coeffs(vec![q(-1, 1), q(1, 1)]);
        assert_eq!(e.invert(), Err(Error::NotInvertible { gcd_degree: 1 }));
    }

    #[test]
    fn field_mismatch_detected() {
        let a = Scalar::from_integer(1);
        let b = sqrt3_field().generator();
        assert_eq!(a.checked_add(&b), Err(Error::FieldMismatch));
    }

    #[test]
    fn non_squarefree_modulus_rejected() {
        let sq = UniPoly::from_integers(&[1, 2, 1]); // (t+1)^2
        assert!(NumberField::new(sq, "a").is_err());
    }

    #[test]
    fn annihilating_polynomial_of_generator() {
        let nf = sqrt3_field();
        let alpha = nf.generator();
        assert_eq!(alpha.annihilating_polynomial(), UniPoly::from_integers(&[-3, 0, 1]));
        // 1 + α has minimal polynomial t² - 2t - 2
        let e = alpha.checked_add(&alpha.field().one()).unwrap();
        assert_eq!(e.annihilating_polynomial(), UniPoly::from_integers(&[-2, -2, 1]));
        // rational scalar: linear
        assert_eq!(
            Scalar::from_integer(5).annihilating_polynomial(),
            UniPoly::from_integers(&[-5, 1])
        );
    }

    #[test]
    fn display_forms() {
        let nf = sqrt3_field();
        let field = ScalarField::extension(nf);
        assert_eq!(field.element_from_coeffs(vec![q(1, 1), q(2, 1)]).to_string(), "1+2*a");
        assert_eq!(field.element_from_coeffs(vec![q(0, 1), q(-1, 2)]).to_string(), "-1/2*a");
        assert_eq!(field.embed(&q(-7, 3)).to_string(), "-7/3");
        assert_eq!(Scalar::from_ratio(22, 4).to_string(), "11/2");
    }
}
