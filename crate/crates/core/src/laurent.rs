//! Sparse Laurent polynomials in `v` with integer coefficients.

use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    /// `c * v^e`.
    pub fn monomial(e: i32, c: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(e, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: i32, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert(0);
        *entry = entry.checked_add(c).expect("coefficient overflow");
        if *entry == 0 {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i32) -> i64 {
        self.coeffs.get(&e).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    /// The bar involution `v -> v^{-1}`.
    pub fn bar(&self) -> Self {
        LaurentPoly::from_terms(self.terms().map(|(e, c)| (-e, c)))
    }

    pub fn is_bar_symmetric(&self) -> bool {
        *self == self.bar()
    }

    /// Value at `v = 1`.
    pub fn at_one(&self) -> i64 {
        self.coeffs.values().fold(0i64, |a, &c| a.checked_add(c).expect("coefficient overflow"))
    }

    pub fn scale(&self, k: i64) -> Self {
        LaurentPoly::from_terms(
            self.terms().map(|(e, c)| (e, c.checked_mul(k).expect("coefficient overflow"))),
        )
    }

    /// Multiplication by `v^s`.
    pub fn shift(&self, s: i32) -> Self {
        LaurentPoly::from_terms(self.terms().map(|(e, c)| (e + s, c)))
    }

    /// Exact quotient, `None` if `divisor` does not divide `self` over `Z[v, v^{-1}]`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        let (dlo, dhi) = (divisor.min_degree()?, divisor.max_degree()?);
        let lead = divisor.coeff(dhi);
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some(top) = rem.max_degree() {
            if top - dhi < rem.min_degree()? - dlo {
                return None;
            }
            let c = rem.coeff(top);
            if c % lead != 0 {
                return None;
            }
            let term = LaurentPoly::monomial(top - dhi, c / lead);
            rem = &rem - &(&term * divisor);
            quot = &quot + &term;
        }
        Some(quot)
    }

    /// The balanced quantum integer `[k] = v^{k-1} + v^{k-3} + ... + v^{1-k}`.
    pub fn quantum_integer(k: u32) -> Self {
        let k = k as i32;
        LaurentPoly::from_terms((0..k).map(|t| (k - 1 - 2 * t, 1)))
    }

    /// `[k]! = [1][2]...[k]`.
    pub fn quantum_factorial(k: u32) -> Self {
        (1..=k).fold(LaurentPoly::one(), |acc, j| &acc * &LaurentPoly::quantum_integer(j))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    #[allow(clippy::suspicious_arithmetic_impl)] // exponents add
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, x) in self.terms() {
            for (b, y) in rhs.terms() {
                out.add_term(a + b, x.checked_mul(y).expect("coefficient overflow"));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " {} ", if *c < 0 { '-' } else { '+' })?;
            } else if *c < 0 {
                write!(f, "-")?;
            }
            let a = c.unsigned_abs();
            match (*e, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => write!(f, "v^{e}")?,
                _ => write!(f, "{a}v^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
