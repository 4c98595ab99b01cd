//! Exact univariate polynomials and rational functions over ℚ.
//!
//! These drive the parameter algebra of the pencil families: equality
//! equations between rational functions of a parameter, rational-root
//! extraction, and squarefree decomposition. Roots beyond ℚ are surfaced
//! as squarefree residual factors; callers adjoin them via
//! [`crate::scalar::NumberField`].

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense univariate polynomial over ℚ, coefficients lowest degree first.
///
/// The leading coefficient is nonzero unless the polynomial is zero
/// (represented by an empty coefficient vector).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

fn trimmed(mut coeffs: Vec<BigRational>) -> Vec<BigRational> {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

impl UniPoly {
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        UniPoly {
            coeffs: trimmed(coeffs),
        }
    }

    /// Convenience constructor, coefficients lowest degree first.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `t`.
    pub fn variable() -> Self {
        Self::from_integers(&[0, 1])
    }

    /// `c * t^k`.
    pub fn monomial(k: usize, c: BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coefficient(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_some_and(One::is_one)
    }

    pub fn add(&self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coefficient(i) + rhs.coefficient(i));
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &UniPoly) -> UniPoly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> UniPoly {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn pow(&self, mut n: u32) -> UniPoly {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        if self.coeffs.len() < divisor.coeffs.len() {
            return Ok((Self::zero(), self.clone()));
        }
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] * &lead_inv;
            for i in 0..dd {
                let delta = &q * &divisor.coeffs[i];
                rem[k - dd + i] -= delta;
            }
            rem[k] = BigRational::zero();
            quot[k - dd] = q;
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Division known to be exact; used internally by gcd-based routines.
    fn exact_div(&self, divisor: &UniPoly) -> UniPoly {
        let (q, r) = self.div_rem(divisor).expect("exact_div by zero");
        debug_assert!(r.is_zero(), "exact_div left a remainder");
        q
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, rhs: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns monic `g` and `(s, t)` with `s*self + t*rhs = g`.
    pub fn extended_gcd(&self, rhs: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
        let mut r0 = self.clone();
        let mut r1 = rhs.clone();
        let mut s0 = Self::one();
        let mut s1 = Self::zero();
        let mut t0 = Self::zero();
        let mut t1 = Self::one();
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if let Some(lc) = r0.leading_coefficient().cloned() {
            let inv = lc.recip();
            (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
        } else {
            (r0, s0, t0)
        }
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect();
        Self::from_coeffs(out)
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading_coefficient() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// `self(g)` by Horner's rule.
    pub fn compose(&self, g: &UniPoly) -> UniPoly {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Self::constant(c.clone()));
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluate at a scalar; coefficients are embedded into the scalar's field.
    pub fn evaluate(&self, x: &Scalar) -> Result<Scalar> {
        let field = x.field().clone();
        let mut acc = field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(x)?.checked_add(&field.embed(c))?;
        }
        Ok(acc)
    }

    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.gcd(&self.derivative()).is_constant()
    }

    /// Yun's algorithm: `self = unit * prod factor_i ^ mult_i` with monic
    /// squarefree pairwise-coprime factors.
    pub fn squarefree_decomposition(&self) -> Result<(BigRational, Vec<(UniPoly, usize)>)> {
        let lc = self
            .leading_coefficient()
            .cloned()
            .ok_or(Error::ZeroPolynomial)?;
        let f = self.monic();
        if f.is_constant() {
            return Ok((lc, Vec::new()));
        }
        let mut factors = Vec::new();
        let d = f.gcd(&f.derivative());
        if d.is_constant() {
            return Ok((lc, vec![(f, 1)]));
        }
        let mut b = f.exact_div(&d);
        let mut c = f.derivative().exact_div(&d);
        let mut z = c.sub(&b.derivative());
        let mut i = 1usize;
        while !b.is_constant() {
            let a = b.gcd(&z);
            if a.degree().unwrap_or(0) > 0 {
                factors.push((a.clone(), i));
            }
            b = b.exact_div(&a);
            c = z.exact_div(&a);
            z = c.sub(&b.derivative());
            i += 1;
        }
        Ok((lc, factors))
    }

    /// All rational roots with multiplicities, by the rational-root theorem
    /// and repeated deflation. Exact and complete.
    pub fn rational_roots(&self) -> Result<Vec<(BigRational, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut p = self.clone();
        let mut roots: Vec<(BigRational, usize)> = Vec::new();

        // split off t^k
        let mut zero_mult = 0usize;
        while !p.coeffs.is_empty() && p.coeffs[0].is_zero() {
            p = Self::from_coeffs(p.coeffs[1..].to_vec());
            zero_mult += 1;
        }
        if zero_mult > 0 {
            roots.push((BigRational::zero(), zero_mult));
        }
        if p.is_constant() {
            roots.sort_by(|a, b| a.0.cmp(&b.0));
            return Ok(roots);
        }

        // clear denominators -> primitive integer polynomial
        let mut denom_lcm = BigInt::one();
        for c in &p.coeffs {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = p
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(denom_lcm.clone())).to_integer())
            .collect();
        let trailing = ints[0].magnitude().clone();
        let leading = ints.last().unwrap().magnitude().clone();

        let mut candidates: Vec<BigRational> = Vec::new();
        for num in divisors(&trailing) {
            for den in divisors(&leading) {
                let q = BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()));
                if !candidates.contains(&q) {
                    candidates.push(q.clone());
                    candidates.push(-q);
                }
            }
        }
        candidates.sort();

        for cand in candidates {
            if p.eval_rational(&cand).is_zero() {
                let lin = Self::from_coeffs(vec![-cand.clone(), BigRational::one()]);
                let mut mult = 0usize;
                loop {
                    let (q, r) = p.div_rem(&lin).expect("linear divisor");
                    if r.is_zero() {
                        p = q;
                        mult += 1;
                    } else {
                        break;
                    }
                }
                roots.push((cand, mult));
            }
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(roots)
    }

    /// Full desk-scale root analysis: rational roots plus squarefree residual
    /// factors with multiplicities.
    pub fn extract_roots(&self) -> Result<RootSet> {
        let lc = self
            .leading_coefficient()
            .cloned()
            .ok_or(Error::ZeroPolynomial)?;
        let rational_roots = self.rational_roots()?;
        // deflate all rational roots, then decompose what is left
        let mut residue = self.monic();
        for (r, m) in &rational_roots {
            let lin = Self::from_coeffs(vec![-r.clone(), BigRational::one()]);
            for _ in 0..*m {
                residue = residue.exact_div(&lin);
            }
        }
        let (_, residual_factors) = residue.squarefree_decomposition()?;
        Ok(RootSet {
            leading_coefficient: lc,
            rational_roots,
            residual_factors,
        })
    }

    /// Discriminant `b^2 - 4ac` of a quadratic, for adjoining its roots.
    pub fn quadratic_discriminant(&self) -> Option<BigRational> {
        if self.degree() != Some(2) {
            return None;
        }
        let a = self.coefficient(2);
        let b = self.coefficient(1);
        let c = self.coefficient(0);
        Some(&b * &b - BigRational::from_integer(BigInt::from(4)) * a * c)
    }

    pub fn to_string_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            if k > 0 {
                if show_coeff {
                    out.push('*');
                }
                out.push_str(var);
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with("t"))
    }
}

/// All positive divisors of `n` (trial division; inputs here are
/// trailing/leading coefficients of desk-scale polynomials).
fn divisors(n: &BigUint) -> Vec<BigUint> {
    let mut divs = Vec::new();
    if n.is_zero() {
        // only reachable for the zero coefficient of an already-deflated poly
        return vec![BigUint::one()];
    }
    let mut d = BigUint::one();
    loop {
        let dd = &d * &d;
        if dd > *n {
            break;
        }
        if (n % &d).is_zero() {
            divs.push(d.clone());
            let q = n / &d;
            if q != d {
                divs.push(q);
            }
        }
        d += BigUint::one();
    }
    divs.sort();
    divs
}

/// Rational roots paired with squarefree irrational residue, the exact
/// factorization data used by parameter-space analyses.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    pub leading_coefficient: BigRational,
    /// `(root, multiplicity)`, sorted ascending.
    pub rational_roots: Vec<(BigRational, usize)>,
    /// Monic squarefree factors of degree >= 2 with no rational roots,
    /// paired with their multiplicities.
    pub residual_factors: Vec<(UniPoly, usize)>,
}

impl RootSet {
    /// Total number of roots counted with multiplicity (= input degree).
    pub fn total_multiplicity(&self) -> usize {
        let rat: usize = self.rational_roots.iter().map(|(_, m)| m).sum();
        let res: usize = self
            .residual_factors
            .iter()
            .map(|(f, m)| f.degree().unwrap_or(0) * m)
            .sum();
        rat + res
    }

    /// Number of distinct roots over the algebraic closure.
    pub fn distinct_root_count(&self) -> usize {
        self.rational_roots.len()
            + self
                .residual_factors
                .iter()
                .map(|(f, _)| f.degree().unwrap_or(0))
                .sum::<usize>()
    }

    pub fn multiplicity_of_rational(&self, r: &BigRational) -> usize {
        self.rational_roots
            .iter()
            .find(|(root, _)| root == r)
            .map(|(_, m)| *m)
            .unwrap_or(0)
    }

    pub fn contains_rational(&self, r: &BigRational) -> bool {
        self.multiplicity_of_rational(r) > 0
    }

    /// Multiplies the factorization back together; equals the input exactly.
    pub fn reconstruct(&self) -> UniPoly {
        let mut p = UniPoly::constant(self.leading_coefficient.clone());
        for (r, m) in &self.rational_roots {
            let lin = UniPoly::from_coeffs(vec![-r.clone(), BigRational::one()]);
            p = p.mul(&lin.pow(*m as u32));
        }
        for (f, m) in &self.residual_factors {
            p = p.mul(&f.pow(*m as u32));
        }
        p
    }
}

/// Exact rational function over ℚ in one variable; numerator and denominator
/// are kept coprime with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFn {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFn {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFn {
                num: UniPoly::zero(),
                den: UniPoly::one(),
            });
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g);
        let mut den = den.exact_div(&g);
        let lc = den.leading_coefficient().expect("nonzero").clone();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RationalFn { num, den })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RationalFn {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn variable() -> Self {
        Self::from_poly(UniPoly::variable())
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn add(&self, rhs: &RationalFn) -> RationalFn {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        Self::new(num, den).expect("denominator nonzero")
    }

    pub fn sub(&self, rhs: &RationalFn) -> RationalFn {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> RationalFn {
        RationalFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &RationalFn) -> RationalFn {
        Self::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den)).expect("denominator nonzero")
    }

    pub fn div(&self, rhs: &RationalFn) -> Result<RationalFn> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }

    pub fn pow(&self, n: u32) -> RationalFn {
        RationalFn {
            num: self.num.pow(n),
            den: self.den.pow(n),
        }
    }

    pub fn scale(&self, c: &BigRational) -> RationalFn {
        Self::new(self.num.scale(c), self.den.clone()).expect("denominator nonzero")
    }

    /// `self(inner)`; fails only when `inner` is a constant sitting on a pole.
    pub fn compose(&self, inner: &RationalFn) -> Result<RationalFn> {
        let m = self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0));
        let homog = |p: &UniPoly| -> UniPoly {
            // sum_i p_i * P^i * Q^(m-i)
            let mut acc = UniPoly::zero();
            for i in 0..=m {
                let c = p.coefficient(i);
                if c.is_zero() {
                    continue;
                }
                let term = inner.num.pow(i as u32).mul(&inner.den.pow((m - i) as u32));
                acc = acc.add(&term.scale(&c));
            }
            acc
        };
        let num = homog(&self.num);
        let den = homog(&self.den);
        if den.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        Self::new(num, den)
    }

    /// Exact value in the field of `x`.
    pub fn evaluate(&self, x: &Scalar) -> Result<Scalar> {
        let den = self.den.evaluate(x)?;
        if den.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        let num = self.num.evaluate(x)?;
        num.checked_mul(&den.invert()?)
    }

    /// The polynomial equation `f = g`: numerator of `f - g` in lowest terms,
    /// together with the excluded parameter values (poles of either side).
    pub fn equality_equation(f: &RationalFn, g: &RationalFn) -> Result<EqualityEquation> {
        let diff = f.sub(g);
        let poles = f.den.mul(&g.den);
        Ok(EqualityEquation {
            numerator: diff.num.clone(),
            excluded: poles.extract_roots()?,
        })
    }

    pub fn to_string_with(&self, var: &str) -> String {
        if self.is_polynomial() {
            self.num.to_string_with(var)
        } else {
            format!(
                "({}) / ({})",
                self.num.to_string_with(var),
                self.den.to_string_with(var)
            )
        }
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with("t"))
    }
}

/// Result of [`RationalFn::equality_equation`]: solving `numerator = 0` away
/// from the `excluded` pole set solves `f = g`.
#[derive(Clone, Debug)]
pub struct EqualityEquation {
    pub numerator: UniPoly,
    pub excluded: RootSet,
}

impl EqualityEquation {
    /// Roots of the numerator that are admissible parameters (not poles).
    pub fn admissible_roots(&self) -> Result<RootSet> {
        let mut roots = self.numerator.extract_roots()?;
        roots
            .rational_roots
            .retain(|(r, _)| !self.excluded.contains_rational(r));
        let mut residuals = Vec::new();
        for (f, m) in roots.residual_factors.drain(..) {
            let mut f = f;
            for (ex, _) in &self.excluded.residual_factors {
                loop {
                    let g = f.gcd(ex);
                    if g.is_constant() {
                        break;
                    }
                    f = f.exact_div(&g);
                }
            }
            if f.degree().unwrap_or(0) >= 1 {
                residuals.push((f, m));
            }
        }
        roots.residual_factors = residuals;
        Ok(roots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn gcd_with_repeated_root() {
        // gcd(t^2 - 1, t^2 - 2t + 1) = t - 1
        let p = UniPoly::from_integers(&[-1, 0, 1]);
        let q = UniPoly::from_integers(&[1, -2, 1]);
        assert_eq!(p.gcd(&q), UniPoly::from_integers(&[-1, 1]));
    }

    #[test]
    fn gcd_with_zero_is_monic() {
        let p = UniPoly::from_integers(&[2, 0, 4]);
        assert_eq!(p.gcd(&UniPoly::zero()), p.monic());
        assert!(p.gcd(&UniPoly::zero()).is_monic());
    }

    #[test]
    fn division_splits_the_socle_equation() {
        // (t^3 - 6t - 4) / (t + 2) = t^2 - 2t - 2 exactly
        let p = UniPoly::from_integers(&[-4, -6, 0, 1]);
        let d = UniPoly::from_integers(&[2, 1]);
        let (quot, rem) = p.div_rem(&d).unwrap();
        assert!(rem.is_zero());
        assert_eq!(quot, UniPoly::from_integers(&[-2, -2, 1]));
    }

    #[test]
    fn extract_roots_socle_equation() {
        let p = UniPoly::from_integers(&[-4, -6, 0, 1]);
        let roots = p.extract_roots().unwrap();
        assert_eq!(roots.rational_roots, vec![(q(-2, 1), 1)]);
        assert_eq!(roots.residual_factors.len(), 1);
        assert_eq!(roots.residual_factors[0].0, UniPoly::from_integers(&[-2, -2, 1]));
        assert_eq!(roots.residual_factors[0].1, 1);
        assert_eq!(roots.reconstruct(), p);
    }

    #[test]
    fn extract_roots_cubed_quadratic() {
        // (t^2 + t + 1)^3: no rational roots, residual with multiplicity 3
        let p = UniPoly::from_integers(&[1, 1, 1]).pow(3);
        let roots = p.extract_roots().unwrap();
        assert!(roots.rational_roots.is_empty());
        assert_eq!(
            roots.residual_factors,
            vec![(UniPoly::from_integers(&[1, 1, 1]), 3)]
        );
        assert_eq!(roots.total_multiplicity(), 6);
    }

    #[test]
    fn extract_roots_t_squared() {
        let p = UniPoly::from_integers(&[0, 0, 1]);
        let roots = p.extract_roots().unwrap();
        assert_eq!(roots.rational_roots, vec![(BigRational::zero(), 2)]);
        assert!(roots.residual_factors.is_empty());
    }

    #[test]
    fn extract_roots_zero_errors() {
        assert_eq!(UniPoly::zero().extract_roots(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn rational_roots_with_fractions() {
        // (2t - 1)(t + 3)^2
        let p = UniPoly::from_integers(&[-1, 2]).mul(&UniPoly::from_integers(&[3, 1]).pow(2));
        let roots = p.rational_roots().unwrap();
        assert_eq!(roots, vec![(q(-3, 1), 2), (q(1, 2), 1)]);
    }

    #[test]
    fn equality_equation_simple() {
        // f = 1/t, g = t: numerator 1 - t^2, excluded {0}
        let f = RationalFn::new(UniPoly::one(), UniPoly::variable()).unwrap();
        let g = RationalFn::from_poly(UniPoly::variable());
        let eq = RationalFn::equality_equation(&f, &g).unwrap();
        assert_eq!(eq.numerator, UniPoly::from_integers(&[1, 0, -1]));
        assert!(eq.excluded.contains_rational(&BigRational::zero()));
        let adm = eq.admissible_roots().unwrap();
        assert_eq!(adm.rational_roots.len(), 2); // 1 and -1
    }

    #[test]
    fn equality_equation_equal_inputs() {
        let f = RationalFn::new(
            UniPoly::from_integers(&[1, 1]),
            UniPoly::from_integers(&[0, 0, 1]),
        )
        .unwrap();
        let eq = RationalFn::equality_equation(&f, &f).unwrap();
        assert!(eq.numerator.is_zero());
    }

    #[test]
    fn compose_substitutes() {
        // f = t^2, inner = (t+1)/t -> (t+1)^2/t^2
        let f = RationalFn::from_poly(UniPoly::from_integers(&[0, 0, 1]));
        let inner = RationalFn::new(UniPoly::from_integers(&[1, 1]), UniPoly::variable()).unwrap();
        let c = f.compose(&inner).unwrap();
        assert_eq!(c.numerator(), &UniPoly::from_integers(&[1, 2, 1]));
        assert_eq!(c.denominator(), &UniPoly::from_integers(&[0, 0, 1]));
    }

    #[test]
    fn display_descending_terms() {
        let p = UniPoly::from_integers(&[-4, -6, 0, 1]);
        assert_eq!(p.to_string(), "t^3 - 6*t - 4");
        assert_eq!(p.to_string_with("a"), "a^3 - 6*a - 4");
        assert_eq!(UniPoly::zero().to_string(), "0");
        assert_eq!(UniPoly::from_coeffs(vec![q(1, 2), q(-1, 3)]).to_string(), "-1/3*t + 1/2");
    }

    #[test]
    fn squarefree_reconstruction() {
        // 3 * (t-1)^2 * (t^2+1)
        let p = UniPoly::from_integers(&[-1, 1])
            .pow(2)
            .mul(&UniPoly::from_integers(&[1, 0, 1]))
            .scale(&q(3, 1));
        let (unit, factors) = p.squarefree_decomposition().unwrap();
        assert_eq!(unit, q(3, 1));
        let mut back = UniPoly::constant(unit);
        for (f, m) in &factors {
            assert!(f.is_squarefree());
            back = back.mul(&f.pow(*m as u32));
        }
        assert_eq!(back, p);
    }
}
