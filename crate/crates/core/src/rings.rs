//! Exact coefficient arithmetic: multivariate Laurent polynomials in the
//! fixed variable set `{q, qn, q0, theta}`, arbitrary-precision rationals,
//! and the quadratic extension `Q(sqrt(d))` used by the reflection-equation
//! verifier.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type BigRational = num_rational::BigRational;

/// Commutative ring interface for coefficients of formal linear combinations.
pub trait Ring: Clone + Eq + Ord {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn is_zero(&self) -> bool;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn from_int(n: i64) -> Self;
}

impl Ring for BigRational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

/// Convenience constructor for exact rationals.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Index of a variable in the fixed ordered variable set.
pub const VAR_Q: usize = 0;
pub const VAR_QN: usize = 1;
pub const VAR_Q0: usize = 2;
pub const VAR_THETA: usize = 3;

/// Names used in the text form of a Laurent polynomial.
pub const VAR_NAMES: [&str; 4] = ["q", "qn", "q0", "t"];

/// Exponent vector: one signed exponent per variable in `{q, qn, q0, theta}`.
pub type Exponents = [i32; 4];

/// Multivariate Laurent polynomial with integer coefficients in the fixed
/// ordered variable set `{q, qn, q0, theta}`. `theta` never carries a
/// negative exponent.
///
/// The zero polynomial is the empty map; no stored term has coefficient
/// zero, so equality is structural.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial([0, 0, 0, 0], BigInt::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial([0, 0, 0, 0], BigInt::from(n))
    }

    /// A single term `coef * q^e0 qn^e1 q0^e2 theta^e3`.
    ///
    /// Panics if `theta` carries a negative exponent: theta is a formal
    /// parameter, not a unit of the ring.
    pub fn monomial(exp: Exponents, coef: BigInt) -> Self {
        assert!(exp[VAR_THETA] >= 0, "theta exponent must be nonnegative");
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(exp, coef);
        }
        LaurentPoly { terms }
    }

    /// The variable `q`, `qn`, `q0` or `theta` raised to `e`.
    pub fn var_pow(var: usize, e: i32) -> Self {
        let mut exp = [0i32; 4];
        exp[var] = e;
        Self::monomial(exp, BigInt::one())
    }

    /// The bulk loop weight `tau = -(q + q^-1)`.
    pub fn tau() -> Self {
        Self::var_pow(VAR_Q, 1)
            .add(&Self::var_pow(VAR_Q, -1))
            .neg()
    }

    /// `-(x + x^-1)` for a variable index (used with `qn` and `q0`).
    pub fn minus_x_plus_xinv(var: usize) -> Self {
        Self::var_pow(var, 1).add(&Self::var_pow(var, -1)).neg()
    }

    /// `q x^-1 + q^-1 x` for a variable index (used with `qn` and `q0`).
    pub fn q_mixed(var: usize) -> Self {
        let mut a = [0i32; 4];
        a[VAR_Q] = 1;
        a[var] = -1;
        let mut b = [0i32; 4];
        b[VAR_Q] = -1;
        b[var] = 1;
        Self::monomial(a, BigInt::one()).add(&Self::monomial(b, BigInt::one()))
    }

    /// Boundary weight `tau_p`: `-(qn + qn^-1)` if `p == n (mod 2)`, else
    /// `q qn^-1 + q^-1 qn`.
    pub fn tau_p(p: usize, n: usize) -> Self {
        if p % 2 == n % 2 {
            Self::minus_x_plus_xinv(VAR_QN)
        } else {
            Self::q_mixed(VAR_QN)
        }
    }

    /// Boundary weight `tau'_p`: `-(q0 + q0^-1)` if `p` even, else
    /// `q q0^-1 + q^-1 q0`.
    pub fn tau_p_prime(p: usize) -> Self {
        if p.is_multiple_of(2) {
            Self::minus_x_plus_xinv(VAR_Q0)
        } else {
            Self::q_mixed(VAR_Q0)
        }
    }

    pub fn theta() -> Self {
        Self::var_pow(VAR_THETA, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(*e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        LaurentPoly { terms }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut terms: BTreeMap<Exponents, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]];
                let entry = terms.entry(e).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact evaluation at a rational point. Every variable occurring with a
    /// nonzero exponent must be assigned; a variable with a negative exponent
    /// must be assigned a nonzero value.
    pub fn eval(&self, assignment: &[Option<BigRational>; 4]) -> Result<BigRational, EvalError> {
        let mut total: BigRational = num_traits::Zero::zero();
        for (exp, coef) in &self.terms {
            let mut term = BigRational::from_integer(coef.clone());
            for v in 0..4 {
                let e = exp[v];
                if e == 0 {
                    continue;
                }
                let val = assignment[v].as_ref().ok_or(EvalError::Unassigned(v))?;
                if e < 0 && num_traits::Zero::is_zero(val) {
                    return Err(EvalError::DivisionByZero(v));
                }
                let p = val.pow(e);
                term *= p;
            }
            total += term;
        }
        Ok(total)
    }

    /// Text form: sum of signed monomials, caret exponents, e.g. `-q - q^-1`.
    fn fmt_text(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Render highest q-degree first for readability.
        let items: Vec<(&Exponents, &BigInt)> = self.terms.iter().rev().collect();
        for (k, (exp, coef)) in items.iter().enumerate() {
            let mut vars = String::new();
            for v in 0..4 {
                if exp[v] == 0 {
                    continue;
                }
                if !vars.is_empty() {
                    vars.push('*');
                }
                vars.push_str(VAR_NAMES[v]);
                if exp[v] != 1 {
                    vars.push('^');
                    let mut buf = String::new();
                    fmt::write(&mut buf, format_args!("{}", exp[v]))?;
                    vars.push_str(&buf);
                }
            }
            let negative = coef.is_negative();
            let abs = coef.abs();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if vars.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", vars)?;
            } else {
                write!(f, "{}*{}", abs, vars)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_text(f)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_text(f)
    }
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        LaurentPoly::add(self, rhs)
    }
    fn neg(&self) -> Self {
        LaurentPoly::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        LaurentPoly::mul(self, rhs)
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn from_int(n: i64) -> Self {
        LaurentPoly::from_int(n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalError {
    /// Variable with nonzero exponent has no assigned value.
    Unassigned(usize),
    /// Negatively-powered variable assigned zero.
    DivisionByZero(usize),
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Unassigned(v) => write!(f, "variable {} is unassigned", VAR_NAMES[*v]),
            EvalError::DivisionByZero(v) => {
                write!(f, "variable {} has negative exponent and value 0", VAR_NAMES[*v])
            }
        }
    }
}

/// Element `a + b*C1` of the quadratic extension `Q(C1)` with `C1^2 = d`.
///
/// Two elements are composable only if the discriminants `d` agree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct QuadExt {
    pub a: BigRational,
    pub b: BigRational,
    pub d: BigRational,
}

impl QuadExt {
    pub fn new(a: BigRational, b: BigRational, d: BigRational) -> Self {
        QuadExt { a, b, d }
    }

    /// Embed a rational with the given discriminant.
    pub fn from_rat(a: BigRational, d: BigRational) -> Self {
        QuadExt {
            a,
            b: num_traits::Zero::zero(),
            d,
        }
    }

    /// The extension generator `C1` itself.
    pub fn generator(d: BigRational) -> Self {
        QuadExt {
            a: num_traits::Zero::zero(),
            b: num_traits::One::one(),
            d,
        }
    }

    pub fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(&self.a) && num_traits::Zero::is_zero(&self.b)
    }

    fn check_compat(&self, rhs: &Self) {
        assert_eq!(self.d, rhs.d, "mismatched quadratic extension discriminants");
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_compat(rhs);
        QuadExt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            d: self.d.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        QuadExt {
            a: -&self.a,
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// Product, reduced with `C1^2 = d` so `C1` appears to power <= 1.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_compat(rhs);
        QuadExt {
            a: &self.a * &rhs.a + &(&self.b * &rhs.b) * &self.d,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            d: self.d.clone(),
        }
    }

    /// Multiplicative inverse via the norm `a^2 - d b^2`.
    pub fn inv(&self) -> Option<Self> {
        let norm = &self.a * &self.a - &(&self.b * &self.b) * &self.d;
        if num_traits::Zero::is_zero(&norm) {
            return None;
        }
        Some(QuadExt {
            a: &self.a / &norm,
            b: -&self.b / &norm,
            d: self.d.clone(),
        })
    }

    pub fn div(&self, rhs: &Self) -> Option<Self> {
        self.check_compat(rhs);
        rhs.inv().map(|i| self.mul(&i))
    }
}

impl Ring for QuadExt {
    fn zero() -> Self {
        // The discriminant of an absolute constant is irrelevant; use 0.
        QuadExt::from_rat(num_traits::Zero::zero(), num_traits::Zero::zero())
    }
    fn one() -> Self {
        QuadExt::from_rat(num_traits::One::one(), num_traits::Zero::zero())
    }
    fn add(&self, rhs: &Self) -> Self {
        // Constants produced by `zero`/`one`/`from_int` carry d = 0; adopt
        // the other operand's discriminant in that case.
        if num_traits::Zero::is_zero(&self.d) && num_traits::Zero::is_zero(&self.b) {
            return QuadExt {
                a: &self.a + &rhs.a,
                b: rhs.b.clone(),
                d: rhs.d.clone(),
            };
        }
        if num_traits::Zero::is_zero(&rhs.d) && num_traits::Zero::is_zero(&rhs.b) {
            return QuadExt {
                a: &self.a + &rhs.a,
                b: self.b.clone(),
                d: self.d.clone(),
            };
        }
        QuadExt::add(self, rhs)
    }
    fn neg(&self) -> Self {
        QuadExt::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        if num_traits::Zero::is_zero(&self.d) && num_traits::Zero::is_zero(&self.b) {
            return QuadExt {
                a: &self.a * &rhs.a,
                b: &self.a * &rhs.b,
                d: rhs.d.clone(),
            };
        }
        if num_traits::Zero::is_zero(&rhs.d) && num_traits::Zero::is_zero(&rhs.b) {
            return QuadExt {
                a: &self.a * &rhs.a,
                b: &self.b * &rhs.a,
                d: self.d.clone(),
            };
        }
        QuadExt::mul(self, rhs)
    }
    fn is_zero(&self) -> bool {
        QuadExt::is_zero(self)
    }
    fn from_int(n: i64) -> Self {
        QuadExt::from_rat(BigRational::from_integer(BigInt::from(n)), num_traits::Zero::zero())
    }
}
