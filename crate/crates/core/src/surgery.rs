//! Rational surgery slopes and Heegaard Floer ranks of surgeries.
//!
//! For a knot `K` with `g(K) = tau(K)` and a positive reduced slope `a/b`,
//!
//! ```text
//! rank HF^(S^3_(a/b)(K)) = a + b s_K + t_K^(a/b),   t_K^(a/b) = 2 max(0, (2g - 1) b - a)
//! ```
//!
//! and `|H_1(S^3_(a/b)(K))| = a`, so the surgery is an L-space exactly when
//! the last two terms vanish.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::knots::{gcd, KnotExpr};
use crate::lspace::s_invariant;

/// A reduced fraction `a/b` with `b >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slope {
    a: i64,
    b: i64,
}

impl Slope {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidSlope {
            text: format!("{a}/{b}"),
            reason: reason.into(),
        };
        if b < 1 {
            return Err(invalid("denominator must be positive"));
        }
        if gcd(a, b) != 1 {
            return Err(invalid("numerator and denominator must be coprime"));
        }
        Ok(Self { a, b })
    }

    pub fn integer(a: i64) -> Self {
        Self { a, b: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.a
    }

    pub fn denominator(&self) -> i64 {
        self.b
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b == 1 {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{}/{}", self.a, self.b)
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses `A/B` or `A`. Syntax problems are parse errors; a well-formed but
/// unreduced or non-positive-denominator fraction is an `InvalidSlope`.
impl FromStr for Slope {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let parse_int = |part: &str, offset: usize| -> Result<i64> {
            let trimmed = part.trim();
            trimmed.parse::<i64>().map_err(|_| Error::Parse {
                pos: offset + part.find(trimmed).unwrap_or(0),
                msg: format!("expected an integer in slope, found {trimmed:?}"),
            })
        };
        match text.split_once('/') {
            None => Ok(Slope::integer(parse_int(text, 0)?)),
            Some((num, den)) => {
                let a = parse_int(num, 0)?;
                let b = parse_int(den, num.len() + 1)?;
                Slope::new(a, b).map_err(|e| match e {
                    Error::InvalidSlope { reason, .. } => Error::InvalidSlope {
                        text: text.trim().to_string(),
                        reason,
                    },
                    other => other,
                })
            }
        }
    }
}

pub fn torsion_t(genus: i64, slope: Slope) -> i64 {
    2 * ((2 * genus - 1) * slope.b - slope.a).max(0)
}

pub fn rank_surgery(expr: &KnotExpr, slope: Slope) -> Result<i64> {
    if slope.a < 1 {
        return Err(Error::NonPositiveSlope(slope.to_string()));
    }
    let expr = expr.validate()?;
    let s = s_invariant(&expr)?;
    let g = expr.genus()?;
    Ok(slope.a + slope.b * s + torsion_t(g, slope))
}

/// Order of the first homology of `S^3_(a/b)(K)`.
pub fn h1_order(slope: Slope) -> i64 {
    slope.a.abs()
}

pub fn is_lspace_surgery(expr: &KnotExpr, slope: Slope) -> Result<bool> {
    Ok(rank_surgery(expr, slope)? == h1_order(slope))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Summand {
    /// The lens space `L(p, q)`, whose rank is `p`.
    Lens { p: i64, q: i64 },
    KnotSurgery {
        #[serde(serialize_with = "crate::surgery::serialize_display")]
        knot: KnotExpr,
        slope: Slope,
    },
}

pub(crate) fn serialize_display<T: fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Summand::Lens { p, q } => write!(f, "L({p},{q})"),
            Summand::KnotSurgery { knot, slope } => write!(f, "S^3_{slope}({knot})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurgeryDescription {
    pub summands: Vec<Summand>,
    pub rank: i64,
    pub h1_order: i64,
}

/// `pq` surgery on `K_(p,q)` is `L(p,q) # S^3_(q/p)(K)`; ranks multiply under
/// connected sum.
pub fn cable_surgery_decomposition(expr: &KnotExpr) -> Result<SurgeryDescription> {
    let KnotExpr::Cable(p, q, companion) = expr.validate()? else {
        return Err(Error::NotACable(expr.to_string()));
    };
    let slope = Slope::new(q, p)?;
    let rank = p * rank_surgery(&companion, slope)?;
    Ok(SurgeryDescription {
        summands: vec![
            Summand::Lens { p, q },
            Summand::KnotSurgery {
                knot: *companion,
                slope,
            },
        ],
        rank,
        h1_order: p * h1_order(slope),
    })
}

/// The three sub-checks behind the cable criterion, for one cable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    /// `t_K^(q/p)` on the companion.
    pub torsion_companion: i64,
    /// `t^(pq)` on the cable.
    pub torsion_cable: i64,
    /// Rank formula on the cable at slope `pq`.
    pub rank_direct: i64,
    /// `p` times the rank formula on the companion at slope `q/p`.
    pub rank_decomposed: i64,
    pub s_cable: i64,
    /// `p^2 s_K + (p - 1) t_K^(q/p)`.
    pub s_recursion: i64,
}

impl IdentityReport {
    pub fn torsion_ok(&self) -> bool {
        self.torsion_companion == self.torsion_cable
    }

    pub fn rank_ok(&self) -> bool {
        self.rank_direct == self.rank_decomposed
    }

    pub fn s_ok(&self) -> bool {
        self.s_cable == self.s_recursion
    }

    pub fn holds(&self) -> bool {
        self.torsion_ok() && self.rank_ok() && self.s_ok()
    }
}

pub fn verify_main_identity(expr: &KnotExpr) -> Result<IdentityReport> {
    let cable = expr.validate()?;
    let KnotExpr::Cable(p, q, companion) = &cable else {
        return Err(Error::NotACable(expr.to_string()));
    };
    let (p, q) = (*p, *q);
    let companion_slope = Slope::new(q, p)?;
    let cable_slope = Slope::integer(p * q);

    let torsion_companion = torsion_t(companion.genus()?, companion_slope);
    let torsion_cable = torsion_t(cable.genus()?, cable_slope);
    let rank_direct = rank_surgery(&cable, cable_slope)?;
    let rank_decomposed = cable_surgery_decomposition(&cable)?.rank;
    let s_cable = s_invariant(&cable)?;
    let s_recursion = p * p * s_invariant(companion)? + (p - 1) * torsion_companion;

    Ok(IdentityReport {
        torsion_companion,
        torsion_cable,
        rank_direct,
        rank_decomposed,
        s_cable,
        s_recursion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> KnotExpr {
        KnotExpr::torus(2, 3)
    }

    fn slope(a: i64, b: i64) -> Slope {
        Slope::new(a, b).unwrap()
    }

    #[test]
    fn slope_construction() {
        assert_eq!(slope(7, 2).to_string(), "7/2");
        assert_eq!(slope(7, 1).to_string(), "7");
        assert!(matches!(Slope::new(4, 2), Err(Error::InvalidSlope { .. })));
        assert!(matches!(Slope::new(3, 0), Err(Error::InvalidSlope { .. })));
        assert!(matches!(Slope::new(3, -2), Err(Error::InvalidSlope { .. })));
    }

    #[test]
    fn slope_parsing() {
        assert_eq!("1/2".parse::<Slope>(), Ok(slope(1, 2)));
        assert_eq!(" 14 ".parse::<Slope>(), Ok(Slope::integer(14)));
        assert_eq!("-3/5".parse::<Slope>(), Ok(slope(-3, 5)));
        assert_eq!(
            "4/2".parse::<Slope>(),
            Err(Error::InvalidSlope {
                text: "4/2".into(),
                reason: "numerator and denominator must be coprime".into()
            })
        );
        assert!(matches!("1/x".parse::<Slope>(), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!("".parse::<Slope>(), Err(Error::Parse { .. })));
        assert!(matches!("1/2/3".parse::<Slope>(), Err(Error::Parse { .. })));
    }

    #[test]
    fn torsion_examples() {
        assert_eq!(torsion_t(1, Slope::integer(7)), 0);
        assert_eq!(torsion_t(1, slope(1, 2)), 2);
        for (a, b) in [(1, 1), (1, 7), (5, 3), (20, 19)] {
            assert_eq!(torsion_t(0, slope(a, b)), 0);
        }
        assert_eq!(torsion_t(5, slope(13, 2)), 10);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_surgery(&trefoil(), Slope::integer(1)), Ok(1));
        assert_eq!(rank_surgery(&trefoil(), slope(1, 2)), Ok(3));
        assert_eq!(rank_surgery(&KnotExpr::Unknot, slope(5, 3)), Ok(5));
        assert_eq!(
            rank_surgery(&KnotExpr::cable(2, 1, trefoil()), Slope::integer(2)),
            Ok(6)
        );
        assert!(matches!(
            rank_surgery(&trefoil(), Slope::integer(0)),
            Err(Error::NonPositiveSlope(_))
        ));
        assert!(matches!(
            rank_surgery(&trefoil(), slope(-1, 2)),
            Err(Error::NonPositiveSlope(_))
        ));
    }

    #[test]
    fn lspace_surgery_examples() {
        assert_eq!(is_lspace_surgery(&trefoil(), Slope::integer(7)), Ok(true));
        assert_eq!(is_lspace_surgery(&trefoil(), slope(1, 2)), Ok(false));
        let k = KnotExpr::cable(2, 7, trefoil());
        for a in 9..30 {
            assert_eq!(is_lspace_surgery(&k, Slope::integer(a)), Ok(true));
        }
        assert_eq!(is_lspace_surgery(&k, Slope::integer(8)), Ok(false));
    }

    #[test]
    fn decomposition_examples() {
        let d = cable_surgery_decomposition(&KnotExpr::cable(2, 7, trefoil())).unwrap();
        assert_eq!(
            d.summands,
            vec![
                Summand::Lens { p: 2, q: 7 },
                Summand::KnotSurgery {
                    knot: trefoil(),
                    slope: slope(7, 2)
                }
            ]
        );
        assert_eq!((d.rank, d.h1_order), (14, 14));

        let d = cable_surgery_decomposition(&KnotExpr::cable(2, 1, trefoil())).unwrap();
        assert_eq!(d.summands[1].to_string(), "S^3_1/2(T(2,3))");
        assert_eq!((d.rank, d.h1_order), (6, 2));

        assert!(matches!(
            cable_surgery_decomposition(&trefoil()),
            Err(Error::NotACable(_))
        ));
    }

    #[test]
    fn identity_examples() {
        let r = verify_main_identity(&KnotExpr::cable(2, 7, trefoil())).unwrap();
        assert!(r.holds());
        assert_eq!((r.rank_direct, r.rank_decomposed), (14, 14));

        let r = verify_main_identity(&KnotExpr::cable(2, 1, trefoil())).unwrap();
        assert!(r.holds());
        assert_eq!((r.rank_direct, r.rank_decomposed, r.s_cable), (6, 6, 2));

        let inner = KnotExpr::cable(2, 7, trefoil());
        let r = verify_main_identity(&KnotExpr::cable(2, 13, inner)).unwrap();
        assert!(r.holds());
        assert_eq!(r.s_cable, 10);

        assert!(matches!(
            verify_main_identity(&KnotExpr::Unknot),
            Err(Error::NotACable(_))
        ));
    }

    #[test]
    fn identity_report_flags_each_check() {
        let good = verify_main_identity(&KnotExpr::cable(2, 1, trefoil())).unwrap();
        let mut bad = good.clone();
        bad.rank_decomposed += 1;
        assert!(!bad.rank_ok() && bad.torsion_ok() && bad.s_ok() && !bad.holds());
        let mut bad = good.clone();
        bad.torsion_cable += 2;
        assert!(!bad.torsion_ok() && !bad.holds());
        let mut bad = good;
        bad.s_recursion += 1;
        assert!(!bad.s_ok() && !bad.holds());
    }
}
