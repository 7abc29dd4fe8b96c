//! Staircase model of the knot Floer complex of an L-space knot, its finite
//! `A^_s` slices, and homology over GF(2).
//!
//! Generators `x_0, ..., x_2n` sit at Alexander gradings `a_0 > ... > a_2n`
//! (the exponents of the Alexander polynomial). Each odd generator `x_(2i-1)`
//! has a horizontal arrow of length `a_(2i-2) - a_(2i-1)` to `x_(2i-2)` and a
//! vertical arrow of length `a_(2i-1) - a_(2i)` to `x_(2i)`.
//!
//! `A^_s` is the slice `max(i, j - s) = 0` of the complex. A generator of
//! grading `a` has exactly one translate there: `(0, a)` when `a <= s`,
//! `(s - a, s)` otherwise. An arrow survives when its displacement carries
//! the source placement onto the target placement; otherwise the target
//! translate lies below the slice and is quotiented away.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::knots::KnotExpr;
use crate::lspace::{is_lspace_knot, lspace_form_check};
use crate::poly::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Horizontal,
    Vertical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub direction: Direction,
    pub length: i64,
}

impl Arrow {
    fn displacement(&self) -> (i64, i64) {
        match self.direction {
            Direction::Horizontal => (-self.length, 0),
            Direction::Vertical => (0, -self.length),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Staircase {
    gradings: Vec<i64>,
}

impl Staircase {
    pub fn gradings(&self) -> &[i64] {
        &self.gradings
    }

    /// `b_k = a_(k-1) - a_k` for `k = 1..2n`.
    pub fn step_lengths(&self) -> Vec<i64> {
        self.gradings.windows(2).map(|w| w[0] - w[1]).collect()
    }

    pub fn genus(&self) -> i64 {
        self.gradings[0]
    }

    pub fn generator_count(&self) -> usize {
        self.gradings.len()
    }

    /// Plane coordinates from the walk starting at the origin.
    pub fn walk(&self) -> Vec<(i64, i64)> {
        let mut pos = vec![(0, 0)];
        for (k, b) in self.step_lengths().into_iter().enumerate() {
            let (i, j) = *pos.last().unwrap();
            // k is zero-based, so even k is an odd step index
            pos.push(if k % 2 == 0 { (i + b, j) } else { (i, j - b) });
        }
        pos
    }

    pub fn arrows(&self) -> Vec<Arrow> {
        let steps = self.step_lengths();
        (1..self.gradings.len())
            .step_by(2)
            .flat_map(|src| {
                [
                    Arrow {
                        source: src,
                        target: src - 1,
                        direction: Direction::Horizontal,
                        length: steps[src - 1],
                    },
                    Arrow {
                        source: src,
                        target: src + 1,
                        direction: Direction::Vertical,
                        length: steps[src],
                    },
                ]
            })
            .collect()
    }
}

pub fn build_staircase(f: &LaurentPoly) -> Result<Staircase> {
    if f.is_zero() || !lspace_form_check(f)? {
        return Err(Error::NotLSpaceForm(f.to_string()));
    }
    Ok(Staircase {
        gradings: f.terms().rev().map(|(e, _)| e).collect(),
    })
}

/// A finite chain complex over GF(2). `boundary` holds the nonzero entries
/// `(source, target)` of the differential.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChainComplexGF2 {
    pub generator_count: usize,
    pub boundary: BTreeSet<(usize, usize)>,
}

impl ChainComplexGF2 {
    pub fn new(generator_count: usize, boundary: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let boundary: BTreeSet<_> = boundary.into_iter().collect();
        assert!(
            boundary
                .iter()
                .all(|&(s, t)| s < generator_count && t < generator_count),
            "boundary entry out of range"
        );
        Self {
            generator_count,
            boundary,
        }
    }

    pub fn squares_to_zero(&self) -> bool {
        let mut outgoing: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(s, t) in &self.boundary {
            outgoing.entry(s).or_default().push(t);
        }
        let mut parity: BTreeMap<(usize, usize), bool> = BTreeMap::new();
        for &(s, mid) in &self.boundary {
            for &t in outgoing.get(&mid).into_iter().flatten() {
                *parity.entry((s, t)).or_default() ^= true;
            }
        }
        parity.values().all(|odd| !odd)
    }
}

/// Rank of the boundary matrix over GF(2) by Gaussian elimination on packed
/// rows.
fn rank_gf2(c: &ChainComplexGF2) -> usize {
    let words = c.generator_count.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = vec![vec![0; words]; c.generator_count];
    for &(s, t) in &c.boundary {
        rows[s][t / 64] |= 1 << (t % 64);
    }
    let mut rank = 0;
    for col in 0..c.generator_count {
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][w] & bit != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[w] & bit != 0 {
                row.iter_mut().zip(&pivot_row).for_each(|(x, y)| *x ^= y);
            }
        }
        rank += 1;
    }
    rank
}

/// Total homology rank: `n - 2 rank(d)`.
pub fn homology_rank_gf2(c: &ChainComplexGF2) -> Result<usize> {
    if !c.squares_to_zero() {
        return Err(Error::NotAComplex);
    }
    Ok(c.generator_count - 2 * rank_gf2(c))
}

/// One `A^_s` slice with the placement of every generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AHatComplex {
    pub s: i64,
    pub gradings: Vec<i64>,
    pub placements: Vec<(i64, i64)>,
    pub arrows: Vec<Arrow>,
    pub complex: ChainComplexGF2,
}

pub fn placement(grading: i64, s: i64) -> (i64, i64) {
    if grading <= s {
        (0, grading)
    } else {
        (s - grading, s)
    }
}

pub fn a_hat_complex(st: &Staircase, s: i64) -> AHatComplex {
    let placements: Vec<_> = st.gradings.iter().map(|&a| placement(a, s)).collect();
    let arrows: Vec<_> = st
        .arrows()
        .into_iter()
        .filter(|arrow| {
            let (x, y) = placements[arrow.source];
            let (dx, dy) = arrow.displacement();
            (x + dx, y + dy) == placements[arrow.target]
        })
        .collect();
    let complex = ChainComplexGF2::new(
        placements.len(),
        arrows.iter().map(|a| (a.source, a.target)),
    );
    AHatComplex {
        s,
        gradings: st.gradings.clone(),
        placements,
        arrows,
        complex,
    }
}

impl fmt::Display for AHatComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "s = {}", self.s)?;
        for (k, (a, (i, j))) in self.gradings.iter().zip(&self.placements).enumerate() {
            writeln!(f, "  x{k}  A={a}  at ({i},{j})")?;
        }
        for arrow in &self.arrows {
            let dir = match arrow.direction {
                Direction::Horizontal => "horizontal",
                Direction::Vertical => "vertical",
            };
            writeln!(
                f,
                "  x{} -> x{}  {dir} {}",
                arrow.source, arrow.target, arrow.length
            )?;
        }
        Ok(())
    }
}

/// Ranks of `H_*(A^_s)` for `s` in `[-g, g]`.
pub fn a_hat_ranks(st: &Staircase) -> Result<BTreeMap<i64, usize>> {
    let g = st.genus();
    (-g..=g)
        .map(|s| Ok((s, homology_rank_gf2(&a_hat_complex(st, s).complex)?)))
        .collect()
}

/// `sum_s (rank H_*(A^_s) - 1)`, computed from the staircase.
pub fn s_from_staircase(expr: &KnotExpr) -> Result<i64> {
    if !is_lspace_knot(expr)? {
        return Err(Error::NotLSpaceKnot(expr.to_string()));
    }
    let st = build_staircase(&expr.alexander()?)?;
    Ok(a_hat_ranks(&st)?
        .values()
        .map(|&r| r as i64 - 1)
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn staircase_of(expr: &KnotExpr) -> Staircase {
        build_staircase(&expr.alexander().unwrap()).unwrap()
    }

    fn trefoil() -> Staircase {
        staircase_of(&KnotExpr::torus(2, 3))
    }

    #[test]
    fn build_examples() {
        let st = trefoil();
        assert_eq!(st.gradings(), &[1, 0, -1]);
        assert_eq!(st.step_lengths(), vec![1, 1]);
        assert_eq!(st.arrows().len(), 2);
        assert!(st.arrows().iter().all(|a| a.source == 1));
        assert_eq!(st.walk(), vec![(0, 0), (1, 0), (1, -1)]);

        let unknot = build_staircase(&LaurentPoly::one()).unwrap();
        assert_eq!(unknot.generator_count(), 1);
        assert!(unknot.arrows().is_empty());

        let st = staircase_of(&KnotExpr::torus(3, 4));
        assert_eq!(st.gradings(), &[3, 2, 0, -2, -3]);
        assert_eq!(st.step_lengths(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn walk_matches_alexander_grading() {
        // j - i is the grading up to the constant g
        let st = staircase_of(&KnotExpr::cable(2, 7, KnotExpr::torus(2, 3)));
        for ((i, j), a) in st.walk().into_iter().zip(st.gradings()) {
            assert_eq!(j - i + st.genus(), *a);
        }
    }

    #[test]
    fn build_rejects_non_staircase_polynomials() {
        let f = LaurentPoly::from_terms([(1, 1), (0, -1), (-1, 1)]);
        assert!(matches!(
            build_staircase(&(&f * &f)),
            Err(Error::NotLSpaceForm(_))
        ));
        assert!(matches!(
            build_staircase(&LaurentPoly::zero()),
            Err(Error::NotLSpaceForm(_))
        ));
    }

    #[test]
    fn trefoil_slices() {
        let st = trefoil();
        let c0 = a_hat_complex(&st, 0);
        assert_eq!(c0.placements, vec![(-1, 0), (0, 0), (0, -1)]);
        assert_eq!(c0.complex.boundary, BTreeSet::from([(1, 0), (1, 2)]));
        assert_eq!(homology_rank_gf2(&c0.complex), Ok(1));

        let c1 = a_hat_complex(&st, 1);
        assert_eq!(c1.placements, vec![(0, 1), (0, 0), (0, -1)]);
        assert_eq!(c1.arrows.len(), 1);
        assert_eq!(c1.arrows[0].direction, Direction::Vertical);
        assert_eq!(homology_rank_gf2(&c1.complex), Ok(1));
    }

    #[test]
    fn large_s_keeps_only_vertical_arrows() {
        for expr in [KnotExpr::torus(3, 4), KnotExpr::torus(2, 9)] {
            let st = staircase_of(&expr);
            for s in [st.genus(), st.genus() + 3] {
                let c = a_hat_complex(&st, s);
                assert!(c.arrows.iter().all(|a| a.direction == Direction::Vertical));
                assert_eq!(c.arrows.len(), st.generator_count() / 2);
                assert_eq!(homology_rank_gf2(&c.complex), Ok(1));
            }
        }
    }

    #[test]
    fn homology_examples() {
        assert_eq!(homology_rank_gf2(&ChainComplexGF2::new(5, [])), Ok(5));
        let st = staircase_of(&KnotExpr::torus(3, 4));
        for s in -3..=3 {
            assert_eq!(homology_rank_gf2(&a_hat_complex(&st, s).complex), Ok(1));
        }
    }

    #[test]
    fn homology_rejects_non_complex() {
        let c = ChainComplexGF2::new(3, [(0, 1), (1, 2)]);
        assert!(!c.squares_to_zero());
        assert_eq!(homology_rank_gf2(&c), Err(Error::NotAComplex));
        // two paths 0 -> 3 cancel mod 2; the square is acyclic
        let c = ChainComplexGF2::new(4, [(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(homology_rank_gf2(&c), Ok(0));
    }

    #[test]
    fn s_from_staircase_examples() {
        let tre = KnotExpr::torus(2, 3);
        assert_eq!(s_from_staircase(&tre), Ok(0));
        assert_eq!(s_from_staircase(&KnotExpr::Unknot), Ok(0));
        assert_eq!(s_from_staircase(&KnotExpr::cable(2, 7, tre.clone())), Ok(0));
        assert!(matches!(
            s_from_staircase(&KnotExpr::cable(2, 1, tre)),
            Err(Error::NotLSpaceKnot(_))
        ));
    }

    #[test]
    fn debug_rendering() {
        let text = a_hat_complex(&trefoil(), 0).to_string();
        assert_eq!(
            text,
            "s = 0\n  x0  A=1  at (-1,0)\n  x1  A=0  at (0,0)\n  x2  A=-1  at (0,-1)\n  \
             x1 -> x0  horizontal 1\n  x1 -> x2  vertical 1\n"
        );
    }
}
