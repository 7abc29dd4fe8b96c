//! The cable criterion for L-space knots, knot Floer ranks of L-space knots,
//! and the recursion for `s_K` over iterated cables.
//!
//! For a cable `K_(p,q)` the rank of `HF^(S^3_pq(K_(p,q)))` can be computed
//! two ways: directly from the rational surgery formula on the cable, or as
//! `p` times the formula on the companion at slope `q/p`. Equating the two
//! gives
//!
//! ```text
//! s(K_(p,q)) = p^2 s(K) + (p - 1) t_K^(q/p)
//! ```
//!
//! which is how `s` is computed here. Both terms on the right are
//! non-negative, so the cable has `s = 0` exactly when `s(K) = 0` and
//! `q/p >= 2g(K) - 1`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::knots::KnotExpr;
use crate::poly::LaurentPoly;
use crate::surgery::{torsion_t, Slope};

pub type HfkRanks = BTreeMap<i64, u64>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub alexander: LaurentPoly,
    pub genus: i64,
    pub tau: i64,
    pub s_invariant: i64,
    pub is_lspace: bool,
    /// Only present for L-space knots.
    pub hfk_ranks: Option<HfkRanks>,
}

/// Cable criterion applied recursively: `K_(p,q)` is an L-space knot iff `K`
/// is one and `q >= p (2g(K) - 1)`.
pub fn is_lspace_knot(expr: &KnotExpr) -> Result<bool> {
    match expr.validate()? {
        KnotExpr::Unknot | KnotExpr::Torus(..) => Ok(true),
        KnotExpr::Cable(p, q, j) => {
            if !is_lspace_knot(&j)? {
                return Ok(false);
            }
            let g = j.genus()?;
            Ok(q >= p * (2 * g - 1))
        }
    }
}

/// Necessary condition on the Alexander polynomial of an L-space knot:
/// symmetric, coefficients ±1 alternating in sign, top coefficient +1.
pub fn lspace_form_check(f: &LaurentPoly) -> Result<bool> {
    if f.leading_coeff()? != 1 || !f.is_symmetric() {
        return Ok(false);
    }
    let coeffs: Vec<i64> = f.terms().map(|(_, c)| c).collect();
    let unit = coeffs.iter().all(|c| c.abs() == 1);
    let alternating = coeffs.windows(2).all(|w| w[0] == -w[1]);
    Ok(unit && alternating)
}

/// Ranks of knot Floer homology per Alexander grading. For an L-space knot
/// they are the absolute values of the Alexander coefficients.
pub fn hfk_ranks(expr: &KnotExpr) -> Result<HfkRanks> {
    if !is_lspace_knot(expr)? {
        return Err(Error::NotLSpaceKnot(expr.to_string()));
    }
    Ok(ranks_from_alexander(&expr.alexander()?))
}

fn ranks_from_alexander(f: &LaurentPoly) -> HfkRanks {
    f.terms().map(|(e, c)| (e, c.unsigned_abs())).collect()
}

pub fn s_invariant(expr: &KnotExpr) -> Result<i64> {
    s_unchecked(&expr.validate()?)
}

fn s_unchecked(expr: &KnotExpr) -> Result<i64> {
    match expr {
        KnotExpr::Unknot | KnotExpr::Torus(..) => Ok(0),
        KnotExpr::Cable(p, q, j) => {
            let slope = Slope::new(*q, *p)?;
            let t = torsion_t(j.genus()?, slope);
            Ok(p * p * s_unchecked(j)? + (p - 1) * t)
        }
    }
}

pub fn invariant_report(expr: &KnotExpr) -> Result<InvariantReport> {
    let expr = expr.validate()?;
    let alexander = expr.alexander()?;
    let genus = alexander.degree()?;
    let tau = expr.tau()?;
    let s_invariant = s_invariant(&expr)?;
    let is_lspace = is_lspace_knot(&expr)?;
    let hfk_ranks = is_lspace.then(|| ranks_from_alexander(&alexander));
    Ok(InvariantReport {
        alexander,
        genus,
        tau,
        s_invariant,
        is_lspace,
        hfk_ranks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> KnotExpr {
        KnotExpr::torus(2, 3)
    }

    fn c2_7() -> KnotExpr {
        KnotExpr::cable(2, 7, trefoil())
    }

    #[test]
    fn criterion_examples() {
        assert!(is_lspace_knot(&c2_7()).unwrap());
        assert!(!is_lspace_knot(&KnotExpr::cable(2, 1, trefoil())).unwrap());
        assert!(!is_lspace_knot(&KnotExpr::cable(2, 13, c2_7())).unwrap());
        assert!(is_lspace_knot(&KnotExpr::cable(2, 19, c2_7())).unwrap());
        assert!(is_lspace_knot(&KnotExpr::Unknot).unwrap());
    }

    #[test]
    fn criterion_near_threshold() {
        // q = p(2g - 1) cannot occur with gcd(p, q) = 1, so check either side.
        let t34 = KnotExpr::torus(3, 4);
        assert!(is_lspace_knot(&KnotExpr::cable(2, 11, t34.clone())).unwrap());
        assert!(!is_lspace_knot(&KnotExpr::cable(2, 9, t34)).unwrap());
        assert!(is_lspace_knot(&KnotExpr::cable(3, 10, KnotExpr::torus(2, 5))).unwrap());
        assert!(!is_lspace_knot(&KnotExpr::cable(3, 8, KnotExpr::torus(2, 5))).unwrap());
    }

    #[test]
    fn form_check_examples() {
        let tre = trefoil().alexander().unwrap();
        assert_eq!(lspace_form_check(&tre), Ok(true));
        assert_eq!(lspace_form_check(&(&tre * &tre)), Ok(false));
        assert_eq!(lspace_form_check(&c2_7().alexander().unwrap()), Ok(true));
        assert_eq!(lspace_form_check(&LaurentPoly::one()), Ok(true));
        assert_eq!(lspace_form_check(&-tre), Ok(false));
        assert_eq!(
            lspace_form_check(&LaurentPoly::from_terms([(1, 1), (0, -1)])),
            Ok(false)
        );
        // symmetric, unit coefficients, but not alternating
        assert_eq!(
            lspace_form_check(&LaurentPoly::from_terms([(1, 1), (0, 1), (-1, 1)])),
            Ok(false)
        );
        assert_eq!(
            lspace_form_check(&LaurentPoly::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn hfk_examples() {
        assert_eq!(
            hfk_ranks(&trefoil()).unwrap(),
            HfkRanks::from([(1, 1), (0, 1), (-1, 1)])
        );
        assert_eq!(hfk_ranks(&KnotExpr::Unknot).unwrap(), HfkRanks::from([(0, 1)]));
        let r = hfk_ranks(&KnotExpr::torus(3, 4)).unwrap();
        assert_eq!(r.keys().copied().collect::<Vec<_>>(), vec![-3, -2, 0, 2, 3]);
        assert_eq!(r.values().sum::<u64>(), 5);
        assert!(matches!(
            hfk_ranks(&KnotExpr::cable(2, 1, trefoil())),
            Err(Error::NotLSpaceKnot(_))
        ));
    }

    #[test]
    fn s_examples() {
        assert_eq!(s_invariant(&trefoil()), Ok(0));
        assert_eq!(s_invariant(&KnotExpr::cable(2, 1, trefoil())), Ok(2));
        assert_eq!(s_invariant(&c2_7()), Ok(0));
        assert_eq!(s_invariant(&KnotExpr::cable(2, 13, c2_7())), Ok(10));
    }

    #[test]
    fn s_of_cable_over_non_lspace_companion() {
        // companion s = 2, genus 2; q/p = 3/2 < 3, t = 2 * (3*2 - 3) = 6
        let k = KnotExpr::cable(2, 3, KnotExpr::cable(2, 1, trefoil()));
        assert_eq!(s_invariant(&k), Ok(4 * 2 + 6));
        // even with q large, a non-L-space companion keeps s > 0
        let k = KnotExpr::cable(2, 99, KnotExpr::cable(2, 1, trefoil()));
        assert_eq!(s_invariant(&k), Ok(8));
        assert!(!is_lspace_knot(&k).unwrap());
    }

    #[test]
    fn report_examples() {
        let r = invariant_report(&trefoil()).unwrap();
        assert_eq!(r.alexander.to_string(), "t - 1 + t^-1");
        assert_eq!((r.genus, r.tau, r.s_invariant, r.is_lspace), (1, 1, 0, true));
        assert_eq!(r.hfk_ranks, Some(HfkRanks::from([(-1, 1), (0, 1), (1, 1)])));

        let r = invariant_report(&KnotExpr::Unknot).unwrap();
        assert_eq!(r.alexander, LaurentPoly::one());
        assert_eq!((r.genus, r.tau, r.s_invariant, r.is_lspace), (0, 0, 0, true));
        assert_eq!(r.hfk_ranks, Some(HfkRanks::from([(0, 1)])));

        let r = invariant_report(&KnotExpr::cable(2, 1, trefoil())).unwrap();
        assert_eq!((r.genus, r.tau, r.s_invariant, r.is_lspace), (2, 2, 2, false));
        assert_eq!(r.hfk_ranks, None);
    }
}
