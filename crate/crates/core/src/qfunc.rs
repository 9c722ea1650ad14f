//! Exact univariate polynomials and rational functions over the rationals.
//!
//! [`QPoly`] serves for both the field size `q` and the dimension-polynomial
//! variable `T`; callers pick the variable name only when printing.
//! [`QRatFunc`] is always stored reduced with a monic denominator, so
//! structural equality is mathematical equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    /// Low-to-high; no trailing zeros.
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    /// The indeterminate itself.
    pub fn x() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn monomial(c: BigRational, degree: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// `x^k - 1`.
    pub fn power_minus_one(k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[0] = -BigRational::one();
        coeffs[k] += BigRational::one();
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> QPoly {
        match self.leading() {
            Some(lead) => self.scale(&lead.recip()),
            None => QPoly::zero(),
        }
    }

    pub fn pow(&self, e: u32) -> QPoly {
        let mut acc = QPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &QPoly) -> Result<(QPoly, QPoly)> {
        let dlead = divisor.leading().ok_or(Error::DivisionByZero)?.clone();
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return Ok((QPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - ddeg];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + ddeg] / &dlead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[i + j] -= &c * d;
                }
            }
            quot[i] = c;
        }
        rem.truncate(ddeg);
        Ok((QPoly::from_coeffs(quot), QPoly::from_coeffs(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigRational {
        self.eval(&BigRational::from_integer(x.clone()))
    }

    /// Replaces the indeterminate `x` by `x^d`.
    pub fn substitute_power(&self, d: usize) -> QPoly {
        assert!(d >= 1, "substitution exponent must be positive");
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); (self.coeffs.len() - 1) * d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * d] = c.clone();
        }
        QPoly::from_coeffs(coeffs)
    }

    /// Renders with the given variable name, highest degree first.
    pub fn display_in<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, var }
    }
}

struct PolyDisplay<'a> {
    poly: &'a QPoly,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let abs = c.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let unit = abs.is_one();
            match deg {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !unit {
                        write!(f, "{abs}*")?;
                    }
                    f.write_str(self.var)?;
                    if deg > 1 {
                        write!(f, "^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("q"))
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        QPoly::from_coeffs(out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(QPoly, Add add, Sub sub, Mul mul);

/// A reduced fraction of polynomials with monic denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QRatFunc {
    num: QPoly,
    den: QPoly,
}

impl QRatFunc {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g)?;
        let (den, _) = den.div_rem(&g)?;
        let lead = den.leading().expect("nonzero denominator").recip();
        Ok(Self {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn zero() -> Self {
        Self {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    pub fn from_poly(p: QPoly) -> Self {
        Self {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<QRatFunc> {
        QRatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &QRatFunc) -> Result<QRatFunc> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        QRatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn substitute_power(&self, d: usize) -> QRatFunc {
        if d == 1 {
            return self.clone();
        }
        // Substitution keeps coprime pairs coprime and monic denominators monic.
        QRatFunc {
            num: self.num.substitute_power(d),
            den: self.den.substitute_power(d),
        }
    }

    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole(x.to_string()));
        }
        Ok(self.num.eval(x) / d)
    }

    /// The polynomial equal to this function, if the reduced denominator is constant.
    pub fn as_polynomial(&self) -> Result<QPoly> {
        if !self.den.is_constant() {
            return Err(Error::NotPolynomial(self.den.to_string()));
        }
        // Monic and constant means the denominator is exactly 1.
        Ok(self.num.clone())
    }
}

impl fmt::Display for QRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &QRatFunc {
    type Output = QRatFunc;

    fn add(self, rhs: &QRatFunc) -> QRatFunc {
        QRatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("product of nonzero denominators")
    }
}

impl Sub for &QRatFunc {
    type Output = QRatFunc;

    fn sub(self, rhs: &QRatFunc) -> QRatFunc {
        QRatFunc::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("product of nonzero denominators")
    }
}

impl Mul for &QRatFunc {
    type Output = QRatFunc;

    fn mul(self, rhs: &QRatFunc) -> QRatFunc {
        // Cross-cancel first so the final gcd works on smaller operands.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let exact = |a: &QPoly, g: &QPoly| {
            if g.is_zero() {
                a.clone()
            } else {
                a.div_rem(g).expect("nonzero gcd").0
            }
        };
        QRatFunc::new(
            &exact(&self.num, &g1) * &exact(&rhs.num, &g2),
            &exact(&self.den, &g2) * &exact(&rhs.den, &g1),
        )
        .expect("product of nonzero denominators")
    }
}

forward_owned!(QRatFunc, Add add, Sub sub, Mul mul);

/// `prod_{i=1}^n (q^i - 1)`; the constant 1 for `n = 0`.
pub fn phi(n: u32) -> QPoly {
    (1..=n as usize).fold(QPoly::one(), |acc, i| &acc * &QPoly::power_minus_one(i))
}

/// `q^eps(lambda) / prod_{boxes} (q^hook - 1)`.
pub fn psi(lambda: &Partition) -> QRatFunc {
    let num = QPoly::monomial(BigRational::one(), lambda.epsilon() as usize);
    let den = lambda
        .hook_lengths()
        .into_iter()
        .fold(QPoly::one(), |acc, h| &acc * &QPoly::power_minus_one(h as usize));
    QRatFunc::new(num, den).expect("hook product is nonzero")
}

/// `prod_{i=1}^n (q^i - 1)` at an integer `q`.
pub fn phi_at(n: u32, q: &BigInt) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * (q.pow(i) - 1u32))
}

/// `q^(n(n-1)/2) * phi_n(q)`, the order of `GL_n(F_q)`.
pub fn gl_order(n: u32, q: &BigInt) -> BigInt {
    q.pow(n * n.saturating_sub(1) / 2) * phi_at(n, q)
}

/// Formats a rational as `"num/den"`.
pub fn rational_to_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"num/den"` or a bare integer.
pub fn rational_from_str(s: &str) -> Result<BigRational> {
    let bad = |e: &dyn fmt::Display| Error::Parse(format!("bad rational {s:?}: {e}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|e| bad(&e))?;
            let d: BigInt = d.trim().parse().map_err(|e| bad(&e))?;
            if d.is_zero() {
                return Err(bad(&"zero denominator"));
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(
            s.trim().parse().map_err(|e| bad(&e))?,
        )),
    }
}
