//! Exact univariate polynomials over the rationals: Horner evaluation,
//! Sturm-sequence real-root isolation, and bisection refinement. The sign
//! computations that certify the case analysis are exact; floating point
//! enters only when a refined root is handed to the geometry.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::CertError;

/// Polynomial with exact rational coefficients, ascending by degree,
/// trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

fn big(x: i64) -> BigRational {
    BigRational::from(BigInt::from(x))
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Polynomial {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&c| big(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + rational_to_f64(c);
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::new(Vec::new());
        }
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * big(i as i64))
                .collect(),
        )
    }

    /// Remainder of exact polynomial division by `divisor`.
    fn rem(&self, divisor: &Polynomial) -> Polynomial {
        let d = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.coeffs[d].clone();
        let mut rem = self.coeffs.clone();
        while rem.len() > d {
            let k = rem.len() - 1;
            let factor = rem[k].clone() / lead.clone();
            if !factor.is_zero() {
                for i in 0..=d {
                    let adj = factor.clone() * divisor.coeffs[i].clone();
                    rem[k - d + i] -= adj;
                }
            }
            rem.pop();
        }
        Polynomial::new(rem)
    }

    /// Rescales so the leading coefficient has absolute value 1. Dividing by
    /// a positive constant preserves every sign pattern the Sturm chain uses.
    fn normalized(self) -> Polynomial {
        match self.coeffs.last() {
            None => self,
            Some(lc) => {
                let s = lc.abs();
                Polynomial::new(self.coeffs.into_iter().map(|c| c / s.clone()).collect())
            }
        }
    }

    fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
        let mut a = a.clone().normalized();
        let mut b = b.clone().normalized();
        while !b.is_zero() {
            let r = a.rem(&b).normalized();
            a = b;
            b = r;
        }
        a
    }

    /// Divides out repeated factors so every real root is simple.
    pub fn square_free(&self) -> Polynomial {
        let d = self.derivative();
        if d.is_zero() {
            return self.clone();
        }
        let g = Polynomial::gcd(self, &d);
        if g.degree() == Some(0) {
            return self.clone();
        }
        self.div_exact(&g)
    }

    fn div_exact(&self, divisor: &Polynomial) -> Polynomial {
        let d = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.coeffs[d].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1;
            let factor = rem[k].clone() / lead.clone();
            quot[k - d] = factor.clone();
            for i in 0..=d {
                let adj = factor.clone() * divisor.coeffs[i].clone();
                rem[k - d + i] -= adj;
            }
            rem.pop();
        }
        Polynomial::new(quot)
    }

    fn sturm_chain(&self) -> Vec<Polynomial> {
        let mut chain = vec![self.clone().normalized(), self.derivative().normalized()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg().normalized());
        }
        chain
    }

    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.into_iter().map(|c| -c).collect())
    }

    /// Upper bound on the absolute value of every real root (Cauchy bound).
    pub fn root_bound(&self) -> BigRational {
        let lead = self.coeffs.last().expect("nonzero polynomial").abs();
        let max = self
            .coeffs
            .iter()
            .map(|c| c.abs())
            .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
        BigRational::one() + max / lead
    }

    /// Isolates the real roots into disjoint half-open intervals `(lo, hi]`,
    /// sorted ascending, each containing exactly one simple root of the
    /// square-free part.
    pub fn isolate_real_roots(&self) -> Vec<(BigRational, BigRational)> {
        let sf = self.square_free();
        if sf.degree().map_or(true, |d| d == 0) {
            return Vec::new();
        }
        let chain = sf.sturm_chain();
        let variations = |x: &BigRational| -> usize {
            let signs: Vec<i8> = chain
                .iter()
                .map(|p| {
                    let v = p.eval(x);
                    if v.is_zero() {
                        0
                    } else if v.is_positive() {
                        1
                    } else {
                        -1
                    }
                })
                .filter(|&s| s != 0)
                .collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        let bound = sf.root_bound();
        let mut out = Vec::new();
        let mut stack = vec![(-bound.clone(), bound.clone())];
        while let Some((lo, hi)) = stack.pop() {
            let count = variations(&lo) - variations(&hi);
            match count {
                0 => {}
                1 => out.push((lo, hi)),
                _ => {
                    let mid = (&lo + &hi) / big(2);
                    stack.push((lo, mid.clone()));
                    stack.push((mid, hi));
                }
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// Shrinks a sign-changing bracket of the square-free part by bisection
    /// until it is narrower than `tol`. Both endpoints keep exact signs.
    fn refine(
        sf: &Polynomial,
        mut lo: BigRational,
        mut hi: BigRational,
        tol: &BigRational,
    ) -> (BigRational, BigRational) {
        let mut f_hi = sf.eval(&hi);
        if f_hi.is_zero() {
            return (hi.clone(), hi);
        }
        while &hi - &lo >= *tol {
            let mid = (&lo + &hi) / big(2);
            let f_mid = sf.eval(&mid);
            if f_mid.is_zero() {
                return (mid.clone(), mid);
            }
            if (f_mid.is_positive() && f_hi.is_positive())
                || (f_mid.is_negative() && f_hi.is_negative())
            {
                hi = mid;
                f_hi = f_mid;
            } else {
                lo = mid;
            }
        }
        (lo, hi)
    }

    /// Largest real root, bracketed exactly to width `tol` and returned as
    /// the bracket `(lo, hi)` with `hi - lo < tol`.
    pub fn largest_real_root_bracket(
        &self,
        tol: &BigRational,
    ) -> Result<(BigRational, BigRational), CertError> {
        let sf = self.square_free();
        let intervals = self.isolate_real_roots();
        let (lo, hi) = intervals.into_iter().last().ok_or(CertError::NoRealRoot)?;
        Ok(Polynomial::refine(&sf, lo, hi, tol))
    }

    /// Largest real root as f64, refined until the exact bracket is narrower
    /// than `tol`.
    pub fn largest_real_root(&self, tol: f64) -> Result<f64, CertError> {
        assert!(tol > 0.0 && tol.is_finite());
        let denom = ((2.0 / tol).ceil() as i128).max(1);
        let rtol = BigRational::new(BigInt::one(), BigInt::from(denom));
        let (lo, hi) = self.largest_real_root_bracket(&rtol)?;
        let mid = (lo + hi) / big(2);
        Ok(rational_to_f64(&mid))
    }
}

/// Lossy conversion; exact rationals from bisection have bounded magnitude
/// so the quotient of f64 conversions is safe here.
pub fn rational_to_f64(x: &BigRational) -> f64 {
    let numer = x.numer();
    let denom = x.denom();
    // Scale down huge integers in tandem to stay in f64 range.
    let nb = numer.bits() as i64;
    let db = denom.bits() as i64;
    let shift = (nb.max(db) - 900).max(0) as u64;
    let n = (numer >> shift).to_string().parse::<f64>().unwrap_or(f64::NAN);
    let d = (denom >> shift).to_string().parse::<f64>().unwrap_or(f64::NAN);
    n / d
}

/// The degree-12 polynomial whose largest root is the proven spanning
/// constant for aperture 2π/3.
pub fn spanner_polynomial() -> Polynomial {
    Polynomial::from_i64(&[
        -25, 90, -39, -246, 363, 138, -589, 216, 291, -204, -84, 6, 2,
    ])
}

/// The cubic `x^3 - 4x^2 + 2` whose sign decides the same-side path
/// inequality `2 + t(1 - mu) <= t`.
pub fn case1_cubic() -> Polynomial {
    Polynomial::from_i64(&[2, 0, -4, 1])
}
