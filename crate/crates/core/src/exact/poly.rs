//! Univariate polynomials over the rationals and spectral helpers.
//!
//! Coefficients are stored lowest degree first with no trailing zeros.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::linalg::{Matrix, RowReducer};
use super::rational::Rational;
use crate::error::Error;

/// Trial division bound used when enumerating divisors of a constant term.
const TRIAL_DIVISION_LIMIT: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![Rational::one()] }
    }

    /// `t - root`
    pub fn linear(root: &Rational) -> Self {
        Poly::new(vec![-root, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().recip();
        Poly::new(self.coeffs.iter().map(|c| c * &inv).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let lead_inv = divisor.leading().recip();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Rational::from_integer(k as i64))
                .collect(),
        )
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            // keeping remainders monic curbs coefficient growth
            b = r.monic();
        }
        a.monic()
    }

    /// `f / gcd(f, f')`: same roots, each simple.
    pub fn square_free_part(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return Poly::one();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Multiplicity of `root` as a root of `self` (zero polynomial excluded).
    pub fn root_multiplicity(&self, root: &Rational) -> usize {
        let lin = Poly::linear(root);
        let mut p = self.clone();
        let mut m = 0;
        while !p.is_zero() && p.degree() > Some(0) {
            let (quot, rem) = p.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            p = quot;
            m += 1;
        }
        m
    }

    /// Distinct rational roots in increasing order.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let sf = self.square_free_part();
        let ints = primitive_integer_coeffs(&sf);
        let mut roots = Vec::new();
        let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
        if low > 0 {
            roots.push(Rational::zero());
        }
        let trimmed = &ints[low..];
        if trimmed.len() > 1 {
            let p_cands = divisors(&trimmed[0]);
            let q_cands = divisors(trimmed.last().unwrap());
            for p in &p_cands {
                for qd in &q_cands {
                    for sign in [1i32, -1] {
                        let mut num = p.clone();
                        if sign < 0 {
                            num = -num;
                        }
                        let cand = Rational::from_bigints(num, qd.clone());
                        if sf.eval(&cand).is_zero() && !roots.contains(&cand) {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

/// Scales a rational polynomial to an integer polynomial with content one.
fn primitive_integer_coeffs(p: &Poly) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for c in &p.coeffs {
        l = l.lcm(&c.denom());
    }
    let ints: Vec<BigInt> = p.coeffs.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &g).collect()
}

/// Positive divisors of `n`, from trial division up to a fixed bound.
///
/// A cofactor left over after trial division is treated as prime. For the
/// characteristic polynomials arising here (small integer spectra) this never
/// happens; a composite cofactor could only cause a missed root, which then
/// surfaces as a non-split spectrum rather than a wrong answer.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d: u64 = 2;
    while d <= TRIAL_DIVISION_LIMIT {
        let bd = BigInt::from(d);
        if &bd * &bd > n {
            break;
        }
        let mut e = 0;
        while (&n % &bd).is_zero() {
            n /= &bd;
            e += 1;
        }
        if e > 0 {
            factors.push((bd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        factors.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for base in &divs {
            let mut pow = base.clone();
            for _ in 0..=e {
                next.push(pow.clone());
                pow *= &p;
            }
        }
        divs = next;
    }
    divs
}

/// Characteristic polynomial `det(t I - m)` by the Faddeev–LeVerrier recurrence.
pub fn char_poly(m: &Matrix) -> Poly {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk = Matrix::zeros(n, n);
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = m.mul(&mk);
        let c = &coeffs[n - k + 1];
        if !c.is_zero() {
            next = next.shift(&-c);
        }
        let am = m.mul(&next);
        coeffs[n - k] = -(am.trace() / Rational::from_integer(k as i64));
        mk = next;
    }
    Poly::new(coeffs)
}

/// Rational eigenvalues with algebraic multiplicities, increasing.
///
/// Fails with [`Error::NonSplitSpectrum`] unless every eigenvalue is rational.
pub fn rational_eigenvalues(m: &Matrix) -> Result<Vec<(Rational, usize)>, Error> {
    let cp = char_poly(m);
    let roots = cp.rational_roots();
    let out: Vec<(Rational, usize)> =
        roots.into_iter().map(|r| (r.clone(), cp.root_multiplicity(&r))).collect();
    let total: usize = out.iter().map(|(_, k)| k).sum();
    if total != m.rows() {
        return Err(Error::NonSplitSpectrum { rational_multiplicity: total, dim: m.rows() });
    }
    Ok(out)
}

/// Minimal polynomial (monic) via linear dependence of `I, M, M^2, ...`.
pub fn minimal_poly(m: &Matrix) -> Poly {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return Poly::one();
    }
    let mut red = RowReducer::new(n * n);
    let mut powers: Vec<Matrix> = Vec::new();
    let mut p = Matrix::identity(n);
    loop {
        if !red.insert(p.entries()) {
            // p is a combination of the previous powers; solve for it
            let cols: Vec<Vec<Rational>> = powers.iter().map(|q| q.entries().to_vec()).collect();
            let a = Matrix::from_columns(n * n, &cols);
            let c = super::linalg::solve_linear(&a, p.entries())
                .expect("power lies in the span just tested");
            let mut coeffs: Vec<Rational> = c.into_iter().map(|x| -x).collect();
            coeffs.push(Rational::one());
            return Poly::new(coeffs);
        }
        let next = m.mul(&p);
        powers.push(p);
        p = next;
    }
}

/// How the spectrum of a matrix fails to be split and semisimple over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpectrumDefect {
    /// A rational eigenvalue with a nontrivial Jordan block.
    Repeated(Rational),
    /// The minimal polynomial has an irreducible factor of degree > 1.
    NonSplit,
}

/// Distinct eigenvalues when `m` is diagonalizable over the rationals.
pub fn diagonalizable_eigenvalues(m: &Matrix) -> Result<Vec<Rational>, SpectrumDefect> {
    let mp = minimal_poly(m);
    let roots = mp.rational_roots();
    for r in &roots {
        if mp.root_multiplicity(r) > 1 {
            return Err(SpectrumDefect::Repeated(r.clone()));
        }
    }
    if roots.len() != mp.degree().unwrap_or(0) {
        return Err(SpectrumDefect::NonSplit);
    }
    Ok(roots)
}

/// Exact small integer conversion, used for reporting.
pub fn to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{q, qi};

    fn poly(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| qi(x)).collect())
    }

    #[test]
    fn eigenvalues_of_examples() {
        let d = Matrix::diagonal(&[qi(1), qi(1), qi(-2)]);
        assert_eq!(rational_eigenvalues(&d).unwrap(), vec![(qi(-2), 1), (qi(1), 2)]);
        assert_eq!(rational_eigenvalues(&Matrix::zeros(4, 4)).unwrap(), vec![(qi(0), 4)]);
        let swap = Matrix::from_i64(2, 2, &[0, 1, 1, 0]);
        // char poly t^2 - 1
        assert_eq!(char_poly(&swap), poly(&[-1, 0, 1]));
        assert_eq!(rational_eigenvalues(&swap).unwrap(), vec![(qi(-1), 1), (qi(1), 1)]);
    }

    #[test]
    fn irrational_spectrum_is_rejected() {
        // t^2 - 2
        let m = Matrix::from_i64(2, 2, &[0, 2, 1, 0]);
        assert!(matches!(rational_eigenvalues(&m), Err(Error::NonSplitSpectrum { .. })));
        assert_eq!(diagonalizable_eigenvalues(&m), Err(SpectrumDefect::NonSplit));
    }

    #[test]
    fn fractional_roots() {
        // (2t - 1)(3t + 2) = 6t^2 + t - 2
        let p = poly(&[-2, 1, 6]);
        assert_eq!(p.rational_roots(), vec![q(-2, 3), q(1, 2)]);
    }

    #[test]
    fn repeated_roots_and_multiplicity() {
        // (t - 2)^3 t
        let p = poly(&[0, -8, 12, -6, 1]);
        assert_eq!(p.rational_roots(), vec![qi(0), qi(2)]);
        assert_eq!(p.root_multiplicity(&qi(2)), 3);
        assert_eq!(p.square_free_part(), poly(&[0, -2, 1]));
    }

    #[test]
    fn jordan_block_detected() {
        let j = Matrix::from_i64(2, 2, &[3, 1, 0, 3]);
        assert_eq!(minimal_poly(&j), poly(&[9, -6, 1]));
        assert_eq!(diagonalizable_eigenvalues(&j), Err(SpectrumDefect::Repeated(qi(3))));
        let d = Matrix::diagonal(&[qi(2), qi(0), qi(-2), qi(2)]);
        assert_eq!(diagonalizable_eigenvalues(&d).unwrap(), vec![qi(-2), qi(0), qi(2)]);
    }

    #[test]
    fn large_prime_constant_term() {
        // t - 1048583 (prime above the trial bound)
        let p = poly(&[-1_048_583, 1]);
        assert_eq!(p.rational_roots(), vec![qi(1_048_583)]);
    }
}
