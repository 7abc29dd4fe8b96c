//! Knot expressions for positive iterated torus knots and their classical
//! invariants.
//!
//! Accepted expressions:
//!
//! * `Unknot`
//! * `Torus(p, q)` with `gcd(p, q) = 1` and `2 <= p < q` after swapping into
//!   canonical order (`T(p, q) = T(q, p)`)
//! * `Cable(p, q, J)` with `gcd(p, q) = 1`, `p >= 2`, `q >= 1` and `J` a
//!   nontrivial accepted expression. Cables of the unknot are torus knots and
//!   must be written as such.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum KnotExpr {
    Unknot,
    Torus(i64, i64),
    Cable(i64, i64, Box<KnotExpr>),
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn half_product(p: i64, q: i64) -> i64 {
    (p - 1) * (q - 1) / 2
}

impl KnotExpr {
    pub fn torus(p: i64, q: i64) -> Self {
        KnotExpr::Torus(p, q)
    }

    pub fn cable(p: i64, q: i64, companion: KnotExpr) -> Self {
        KnotExpr::Cable(p, q, Box::new(companion))
    }

    pub fn is_cable(&self) -> bool {
        matches!(self, KnotExpr::Cable(..))
    }

    /// Unknot is 0, a torus knot 1, each cabling adds one.
    pub fn depth(&self) -> usize {
        match self {
            KnotExpr::Unknot => 0,
            KnotExpr::Torus(..) => 1,
            KnotExpr::Cable(_, _, j) => 1 + j.depth(),
        }
    }

    /// Checks every node and returns the canonical form of the expression.
    pub fn validate(&self) -> Result<KnotExpr> {
        match self {
            KnotExpr::Unknot => Ok(KnotExpr::Unknot),
            &KnotExpr::Torus(a, b) => {
                let (p, q) = if a > b { (b, a) } else { (a, b) };
                if p <= 1 {
                    let reason = if p == 1 || p == -1 {
                        "T(1,q) and T(p,1) are unknots; write U"
                    } else {
                        "parameters must be at least 2"
                    };
                    return Err(Error::invalid(self, reason));
                }
                if gcd(p, q) != 1 {
                    return Err(Error::invalid(self, format!("gcd({p},{q}) = {}", gcd(p, q))));
                }
                if p == q {
                    return Err(Error::invalid(self, "parameters must differ"));
                }
                Ok(KnotExpr::Torus(p, q))
            }
            KnotExpr::Cable(p, q, j) => {
                let (p, q) = (*p, *q);
                if p <= 1 {
                    return Err(Error::invalid(
                        self,
                        format!("cabling parameter p = {p} must exceed 1 (K_(1,q) = K)"),
                    ));
                }
                if q < 1 {
                    return Err(Error::invalid(self, format!("q = {q} must be positive")));
                }
                if gcd(p, q) != 1 {
                    return Err(Error::invalid(self, format!("gcd({p},{q}) = {}", gcd(p, q))));
                }
                if **j == KnotExpr::Unknot {
                    return Err(Error::invalid(
                        self,
                        "a cable of the unknot is a torus knot; write T(p,q)",
                    ));
                }
                Ok(KnotExpr::cable(p, q, j.validate()?))
            }
        }
    }

    /// Symmetrized Alexander polynomial.
    pub fn alexander(&self) -> Result<LaurentPoly> {
        Ok(self.validate()?.alexander_unchecked())
    }

    fn alexander_unchecked(&self) -> LaurentPoly {
        match self {
            KnotExpr::Unknot => LaurentPoly::one(),
            &KnotExpr::Torus(p, q) => torus_alexander(p, q),
            KnotExpr::Cable(p, q, j) => {
                let inner = j.alexander_unchecked().substitute_power(*p as u32);
                &inner * &torus_alexander(*p, *q)
            }
        }
    }

    /// Seifert genus, read off as the top degree of the Alexander polynomial.
    pub fn genus(&self) -> Result<i64> {
        self.alexander()?.degree()
    }

    pub fn tau(&self) -> Result<i64> {
        match self {
            KnotExpr::Unknot => Ok(0),
            &KnotExpr::Torus(p, q) => {
                if p < 1 || q < 1 {
                    return Err(Error::OutsideP(self.to_string()));
                }
                Ok(half_product(p, q))
            }
            KnotExpr::Cable(p, q, j) => {
                let (p, q) = (*p, *q);
                if p < 1 || q < 1 {
                    return Err(Error::OutsideP(self.to_string()));
                }
                Ok(p * j.tau()? + half_product(p, q))
            }
        }
    }
}

/// `t^(-(p-1)(q-1)/2) (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))`.
pub(crate) fn torus_alexander(p: i64, q: i64) -> LaurentPoly {
    let binomial = |n: i64| LaurentPoly::from_terms([(n, 1), (0, -1)]);
    let pq = p.checked_mul(q).expect("torus parameters overflow");
    let num = &binomial(pq) * &binomial(1);
    let den = &binomial(p) * &binomial(q);
    num.divide_exact(&den)
        .expect("torus knot quotient is always exact")
        .shift(-half_product(p, q))
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotExpr::Unknot => write!(f, "U"),
            KnotExpr::Torus(p, q) => write!(f, "T({p},{q})"),
            KnotExpr::Cable(p, q, j) => write!(f, "C({p},{q};{j})"),
        }
    }
}
