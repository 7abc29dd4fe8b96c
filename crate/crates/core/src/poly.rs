//! Sparse Laurent polynomials in one variable `t` with integer coefficients.
//!
//! Coefficients are `i64`. Every arithmetic step is checked and overflow
//! panics; in practice the Alexander polynomials handled here have
//! coefficients in {-1, 0, 1} and the intermediate products of the torus
//! quotient stay within a few units, so the bound is only reachable for
//! inputs whose exponent ranges would not fit in memory anyway.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    // exponent -> nonzero coefficient
    terms: BTreeMap<i64, i64>,
}

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b)
        .expect("coefficient overflow in Laurent polynomial arithmetic")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b)
        .expect("coefficient overflow in Laurent polynomial arithmetic")
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `coeff * t^exp`.
    pub fn monomial(coeff: i64, exp: i64) -> Self {
        Self::from_terms([(exp, coeff)])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs. Repeated
    /// exponents are summed and zero coefficients dropped.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            let entry = map.entry(e).or_insert(0);
            *entry = checked_add(*entry, c);
        }
        map.retain(|_, c| *c != 0);
        Self { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Maximum exponent with a nonzero coefficient.
    pub fn degree(&self) -> Result<i64> {
        self.terms
            .keys()
            .next_back()
            .copied()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Minimum exponent with a nonzero coefficient.
    pub fn min_degree(&self) -> Result<i64> {
        self.terms.keys().next().copied().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_coeff(&self) -> Result<i64> {
        self.terms
            .values()
            .next_back()
            .copied()
            .ok_or(Error::ZeroPolynomial)
    }

    /// `f(t) == f(t^-1)`.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(&e, &c)| self.coeff(-e) == c)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, &c)| (e.checked_add(k).expect("exponent overflow"), c))
                .collect(),
        }
    }

    /// The substitution `t -> t^p`.
    pub fn substitute_power(&self, p: u32) -> Self {
        assert!(p >= 1, "substitute_power needs p >= 1");
        let p = i64::from(p);
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, &c)| (e.checked_mul(p).expect("exponent overflow"), c))
                .collect(),
        }
    }

    /// Exact quotient `self / divisor` by descending long division.
    pub fn divide_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let d_top = divisor.degree()?;
        let d_low = divisor.min_degree()?;
        let d_lead = divisor.leading_coeff()?;

        let mut rem = self.terms.clone();
        let mut quotient = BTreeMap::new();

        // Once the remainder's top exponent drops below this, no quotient
        // term can cancel it without leaving something below the bottom.
        let floor = match self.min_degree() {
            Ok(low) => low - d_low + d_top,
            Err(_) => return Ok(LaurentPoly::zero()),
        };

        while let Some((&top, &c)) = rem.iter().next_back() {
            if top < floor || c % d_lead != 0 {
                return Err(Error::NotDivisible);
            }
            let q_exp = top - d_top;
            let q_coeff = c / d_lead;
            quotient.insert(q_exp, q_coeff);
            for (&e, &dc) in &divisor.terms {
                let slot = rem.entry(e + q_exp).or_insert(0);
                *slot = checked_add(*slot, -checked_mul(q_coeff, dc));
                if *slot == 0 {
                    rem.remove(&(e + q_exp));
                }
            }
        }
        Ok(LaurentPoly { terms: quotient })
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().chain(rhs.terms()))
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut acc: BTreeMap<i64, i64> = BTreeMap::new();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &rhs.terms {
                let e = e1.checked_add(e2).expect("exponent overflow");
                let slot = acc.entry(e).or_insert(0);
                *slot = checked_add(*slot, checked_mul(c1, c2));
            }
        }
        acc.retain(|_, c| *c != 0);
        LaurentPoly { terms: acc }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

/// Descending exponent order, e.g. `t^3 - t^2 + 1 - t^-2 + t^-3`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, &c)) in self.terms.iter().rev().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}")?;
                    }
                    if e == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Serialized as its textual rendering.
impl serde::Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
