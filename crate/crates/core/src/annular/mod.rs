//! Low-level annular categories: idempotent tables for levels 1 to 3, annular traces and
//! irreducible counts.

pub mod polyquot;
pub mod trace;
pub mod tube;

pub use polyquot::{check_idempotents, minimal_idempotents, IdempotentChecks, Poly, PolyDisplay, PolyQuotient};
pub use trace::{
    annular_trace, chebyshev_low_terms, chebyshev_poly, closure_loop_types, AnnularTrace, ChebyshevLowTerms,
};
pub use tube::{TubeElement, TubeEngine};

use crate::error::{Result, TljError};
use crate::scalars::qpoly::rat_frac;
use crate::scalars::{cyclo_field, unit_root, CycloField, Scalar};
use polyquot::poly_eval;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

/// Which of the two admissible loop values at a level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LoopSign {
    Plus,
    Minus,
}

impl FromStr for LoopSign {
    type Err = TljError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(LoopSign::Plus),
            "minus" | "-" => Ok(LoopSign::Minus),
            _ => Err(TljError::Parse(format!("loop sign must be plus or minus, got {s:?}"))),
        }
    }
}

impl fmt::Display for LoopSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LoopSign::Plus => "plus",
            LoopSign::Minus => "minus",
        })
    }
}

fn rat(n: i64, d: i64) -> Scalar {
    Scalar::from_rational(rat_frac(n, d))
}

/// A level `k ∈ {1, 2, 3}` with a cyclotomic loop value:
/// `d = ±1`, `d = ±√2`, and at level 3 the roots of `d² = 1 − d`.
#[derive(Clone, Debug)]
pub struct LevelContext {
    pub level: usize,
    pub sign: LoopSign,
    pub field: Arc<CycloField>,
    pub d: Scalar,
}

impl LevelContext {
    pub fn new(level: usize, sign: LoopSign) -> Result<Self> {
        let order = match level {
            1 => 12,
            2 => 16,
            3 => 20,
            _ => return Err(TljError::Unsupported(format!("annular tables exist for levels 1 to 3, not {level}"))),
        };
        let field = cyclo_field(order, 1)?;
        let u = |num: i64, den: u64| Scalar::Cyclo(unit_root(&field, num, den));
        let d = match (level, sign) {
            (1, LoopSign::Plus) => Scalar::one(),
            (1, LoopSign::Minus) => Scalar::from_i64(-1),
            (2, LoopSign::Plus) => u(1, 8) + u(-1, 8),
            (2, LoopSign::Minus) => -(u(1, 8) + u(-1, 8)),
            (3, LoopSign::Plus) => u(1, 5) + u(-1, 5),
            _ => u(2, 5) + u(-2, 5),
        };
        Ok(LevelContext { level, sign, field, d })
    }

    /// Classifies an arbitrary loop value against the level relation.
    pub fn from_loop_value(level: usize, d: &Scalar) -> Result<Self> {
        let dd = d * d;
        let (plus_rel, minus_rel) = match level {
            1 => (&dd - &Scalar::one(), Scalar::one()),
            2 => (&dd - &Scalar::from_i64(2), Scalar::one()),
            3 => (&(&dd + d) - &Scalar::one(), &(&dd - d) - &Scalar::one()),
            _ => return Err(TljError::Unsupported(format!("annular tables exist for levels 1 to 3, not {level}"))),
        };
        if level == 3 && minus_rel.is_zero() {
            return Err(TljError::Unsupported(
                "level 3 with d² = 1 + d: the twist eigenvalues are not roots of unity".into(),
            ));
        }
        if !plus_rel.is_zero() {
            return Err(TljError::WrongD(format!("{d} does not satisfy the level-{level} relation")));
        }
        let re = d.to_c64().map(|c| c.re).unwrap_or(0.0);
        LevelContext::new(level, if re > 0.0 { LoopSign::Plus } else { LoopSign::Minus })
    }

    pub fn i(&self) -> Scalar {
        Scalar::Cyclo(unit_root(&self.field, 1, 4))
    }

    /// The relation satisfied by the essential ring in `A_00`.
    pub fn ring_modulus(&self) -> Poly {
        let c = |v: i64| Scalar::from_i64(v);
        match self.level {
            1 => vec![c(-1), c(0), c(1)],
            2 => vec![c(0), c(-2), c(0), c(1)],
            _ => vec![c(1), c(0), c(-3), c(0), c(1)],
        }
    }

    /// `2cos(πj/(k+2))` for `j = 1..=k+1`.
    pub fn ring_roots(&self) -> Vec<Scalar> {
        let den = 2 * (self.level as u64 + 2);
        (1..=self.level as i64 + 1)
            .map(|j| Scalar::Cyclo(unit_root(&self.field, j, den)) + Scalar::Cyclo(unit_root(&self.field, -j, den)))
            .collect()
    }

    /// The relation satisfied by the one-step twist in `A_11`.
    pub fn twist_modulus(&self) -> Poly {
        let d = self.d.clone();
        let (z, o) = (Scalar::zero(), Scalar::one());
        match self.level {
            1 => vec![-&d, z, o],
            2 => vec![o.clone(), z.clone(), -&d, z, o],
            _ => vec![o.clone(), z.clone(), -&d, z.clone(), -&d, z, o],
        }
    }

    /// Roots of the twist relation among the roots of unity of the field, by increasing angle.
    pub fn twist_roots(&self) -> Vec<Scalar> {
        let m = self.field.order();
        let p = self.twist_modulus();
        (0..m as i64)
            .map(|k| Scalar::Cyclo(unit_root(&self.field, k, m)))
            .filter(|u| poly_eval(&p, u).is_zero())
            .collect()
    }

    pub fn engine(&self) -> Result<TubeEngine> {
        TubeEngine::new(self.d.clone(), self.level)
    }

    /// Closed forms quoted with the low-level tables, where they exist.
    fn stated(&self, generator: Generator) -> Option<Vec<Poly>> {
        let d = &self.d;
        let i = self.i();
        match (self.level, generator) {
            (1, Generator::Ring) => Some(vec![vec![rat(1, 2), rat(1, 2)], vec![rat(1, 2), rat(-1, 2)]]),
            (1, Generator::Twist) => Some(match self.sign {
                LoopSign::Plus => vec![vec![rat(1, 2), rat(1, 2)], vec![rat(1, 2), rat(-1, 2)]],
                LoopSign::Minus => vec![vec![rat(1, 2), -(&i * &rat(1, 2))], vec![rat(1, 2), &i * &rat(1, 2)]],
            }),
            (2, Generator::Ring) => Some(vec![
                vec![Scalar::one(), Scalar::zero(), rat(-1, 2)],
                vec![Scalar::zero(), d * &rat(1, 4), rat(1, 4)],
                vec![Scalar::zero(), -(d * &rat(1, 4)), rat(1, 4)],
            ]),
            (2, Generator::Twist) => {
                let k = (Scalar::from_i64(2) * d).inv().expect("d ≠ 0");
                Some(
                    self.twist_roots()
                        .iter()
                        .map(|a| vec![&a.pow(2) * &k, a * &k, -(&a.pow(4) * &k), -(&a.pow(3) * &k)])
                        .collect(),
                )
            }
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    /// The essential circle in `A_00`.
    Ring,
    /// The one-step twist in `A_11`.
    Twist,
}

impl Generator {
    pub fn symbol(self) -> &'static str {
        match self {
            Generator::Ring => "R",
            Generator::Twist => "T",
        }
    }
}

/// Minimal idempotents of one singly generated algebra.
#[derive(Clone, Debug)]
pub struct GradeTable {
    pub generator: Generator,
    pub modulus: Poly,
    pub roots: Vec<Scalar>,
    pub idempotents: Vec<Poly>,
    pub checks: IdempotentChecks,
    /// Whether the quoted closed forms coincide with the computed family (as sets).
    pub matches_stated: Option<bool>,
    /// The modulus evaluated on the actual annular generator is zero.
    pub relation_holds: bool,
    /// Each idempotent evaluated on the annular generator is nonzero.
    pub nonzero: Vec<bool>,
}

impl GradeTable {
    pub fn holds(&self) -> bool {
        self.checks.all()
            && self.matches_stated != Some(false)
            && self.relation_holds
            && self.nonzero.iter().all(|b| *b)
    }
}

fn grade_table(lc: &LevelContext, engine: &TubeEngine, g: Generator) -> Result<GradeTable> {
    let (modulus, roots, x) = match g {
        Generator::Ring => (lc.ring_modulus(), lc.ring_roots(), engine.ring()?),
        Generator::Twist => (lc.twist_modulus(), lc.twist_roots(), engine.twist(1)?),
    };
    let idempotents = minimal_idempotents(&modulus, &roots)?;
    let q = PolyQuotient::new(modulus.clone())?;
    let checks = check_idempotents(&q, &idempotents);
    let matches_stated = lc
        .stated(g)
        .map(|st| st.len() == idempotents.len() && st.iter().all(|s| idempotents.iter().any(|e| q.eq(s, e))));
    let relation_holds = engine.is_zero(&engine.eval_poly(&modulus, &x)?)?;
    let nonzero =
        idempotents.iter().map(|e| Ok(!engine.is_zero(&engine.eval_poly(e, &x)?)?)).collect::<Result<Vec<bool>>>()?;
    Ok(GradeTable { generator: g, modulus, roots, idempotents, checks, matches_stated, relation_holds, nonzero })
}

/// Which one-step rotation plays the role of the twist in the grade-2 formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistOrientation {
    /// The strand from the cut moves to the first outer point.
    Forward,
    Backward,
}

/// The two grade-2 idempotents `e±` of `A_22` at level 2, evaluated in the annular calculus.
#[derive(Clone, Debug)]
pub struct GradeTwoReport {
    pub orientation: TwistOrientation,
    /// `e±² = e±`.
    pub idempotent: [bool; 2],
    pub orthogonal: bool,
    pub nonzero: [bool; 2],
    /// Births composed with `e±` vanish (both the plain and the encircling cup).
    pub kills_births: [bool; 2],
    /// Deaths after `e±` vanish.
    pub kills_deaths: [bool; 2],
}

impl GradeTwoReport {
    pub fn holds(&self) -> bool {
        self.idempotent.iter().all(|b| *b)
            && self.orthogonal
            && self.nonzero.iter().all(|b| *b)
            && self.kills_births.iter().all(|b| *b)
            && self.kills_deaths.iter().all(|b| *b)
    }
}

/// `e± = ½·1 ± (i/2)T ∓ (i/2d) B̄'B − (1/2d) B̄B ∓ (i/2d) B̄B' − (1/2d) B̄'B' ± (i/2d²) B̄RB + (1/2d²) B̄'RB`,
/// products read left to right, primes marking arcs that encircle the hole.
pub fn grade_two_idempotents(
    lc: &LevelContext,
    engine: &TubeEngine,
    orientation: TwistOrientation,
) -> Result<[TubeElement; 2]> {
    if lc.level != 2 {
        return Err(TljError::Unsupported("the grade-2 formula is for level 2".into()));
    }
    let d = &lc.d;
    let i = lc.i();
    let t = match orientation {
        TwistOrientation::Forward => engine.twist(2)?,
        TwistOrientation::Backward => engine.twist_inverse(2)?,
    };
    let (b, bp, bb, bbp, r) =
        (engine.birth()?, engine.birth_around()?, engine.death()?, engine.death_around()?, engine.ring()?);
    let id = engine.identity(2);
    let bbp_b = engine.chain(&[&bbp, &b])?;
    let bb_b = engine.chain(&[&bb, &b])?;
    let bb_bp = engine.chain(&[&bb, &bp])?;
    let bbp_bp = engine.chain(&[&bbp, &bp])?;
    let bb_r_b = engine.chain(&[&bb, &r, &b])?;
    let bbp_r_b = engine.chain(&[&bbp, &r, &b])?;
    let inv_d = d.inv().expect("d ≠ 0");
    let inv_d2 = &inv_d * &inv_d;
    let half = rat(1, 2);
    let build = |s: i64| -> Result<TubeElement> {
        let si = &i * &Scalar::from_i64(s);
        let terms: Vec<(Scalar, &TubeElement)> = vec![
            (half.clone(), &id),
            (&si * &half, &t),
            (-(&(&si * &half) * &inv_d), &bbp_b),
            (-(&half * &inv_d), &bb_b),
            (-(&(&si * &half) * &inv_d), &bb_bp),
            (-(&half * &inv_d), &bbp_bp),
            (&(&si * &half) * &inv_d2, &bb_r_b),
            (&half * &inv_d2, &bbp_r_b),
        ];
        terms.into_iter().try_fold(TubeElement::zero(2, 2), |acc, (c, x)| acc.add(&x.scale(&c)))
    };
    Ok([build(1)?, build(-1)?])
}

pub fn grade_two_check(
    lc: &LevelContext,
    engine: &TubeEngine,
    orientation: TwistOrientation,
) -> Result<GradeTwoReport> {
    let es = grade_two_idempotents(lc, engine, orientation)?;
    let mut idempotent = [false; 2];
    let mut nonzero = [false; 2];
    let mut kills_births = [false; 2];
    let mut kills_deaths = [false; 2];
    let births = [engine.birth()?, engine.birth_around()?];
    let deaths = [engine.death()?, engine.death_around()?];
    for (k, e) in es.iter().enumerate() {
        idempotent[k] = engine.equal(&engine.compose(e, e)?, e)?;
        nonzero[k] = !engine.is_zero(e)?;
        kills_births[k] = births
            .iter()
            .map(|b| engine.is_zero(&engine.compose(b, e)?))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|v| v);
        kills_deaths[k] = deaths
            .iter()
            .map(|b| engine.is_zero(&engine.compose(e, b)?))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|v| v);
    }
    let orthogonal =
        engine.is_zero(&engine.compose(&es[0], &es[1])?)? && engine.is_zero(&engine.compose(&es[1], &es[0])?)?;
    Ok(GradeTwoReport { orientation, idempotent, orthogonal, nonzero, kills_births, kills_deaths })
}

#[derive(Clone, Debug)]
pub struct LevelTable {
    pub context: LevelContext,
    pub ring: GradeTable,
    pub twist: GradeTable,
    /// Each ring idempotent applied to the empty disk, `R ↦ d`.
    pub disk_values: Vec<Scalar>,
    /// The unique ring idempotent that survives in the disk.
    pub trivial: Option<usize>,
    /// Level 2 only, one report per twist orientation.
    pub grade_two: Vec<GradeTwoReport>,
}

impl LevelTable {
    pub fn holds(&self) -> bool {
        self.ring.holds() && self.twist.holds() && self.trivial.is_some() && self.grade_two.iter().all(|g| g.holds())
    }
}

pub fn level_tables(lc: &LevelContext) -> Result<LevelTable> {
    let engine = lc.engine()?;
    let ring = grade_table(lc, &engine, Generator::Ring)?;
    let twist = grade_table(lc, &engine, Generator::Twist)?;
    let disk_values: Vec<Scalar> = ring.idempotents.iter().map(|e| poly_eval(e, &lc.d)).collect();
    let nonzero: Vec<usize> = (0..disk_values.len()).filter(|&k| !disk_values[k].is_zero()).collect();
    let trivial = match nonzero.as_slice() {
        [k] if disk_values[*k].is_one() => Some(*k),
        _ => None,
    };
    let grade_two = if lc.level == 2 {
        vec![
            grade_two_check(lc, &engine, TwistOrientation::Forward)?,
            grade_two_check(lc, &engine, TwistOrientation::Backward)?,
        ]
    } else {
        Vec::new()
    };
    Ok(LevelTable { context: lc.clone(), ring, twist, disk_values, trivial, grade_two })
}

/// Pairs `(a, b)` of labels in `0..=k` with `|a − b| = h`.
pub fn expected_grade_count(level: usize, h: usize) -> usize {
    (0..=level).flat_map(|a| (0..=level).map(move |b| (a, b))).filter(|(a, b)| a.abs_diff(*b) == h).count()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradeCount {
    pub grade: usize,
    pub found: usize,
    pub expected: usize,
    /// `computed` when every idempotent was checked in the annular calculus,
    /// `modulus degree` when only the quoted relation was used.
    pub source: &'static str,
}

#[derive(Clone, Debug)]
pub struct IrrepCountReport {
    pub level: usize,
    pub grades: Vec<GradeCount>,
    pub total: usize,
}

impl IrrepCountReport {
    pub fn square(&self) -> usize {
        (self.level + 1) * (self.level + 1)
    }

    pub fn holds(&self) -> bool {
        self.total == self.square() && self.grades.iter().all(|g| g.found == g.expected)
    }
}

/// Irreducible counts per grade for both loop values at a level.
pub fn irrep_count_check(level: usize) -> Result<Vec<(LoopSign, IrrepCountReport)>> {
    [LoopSign::Plus, LoopSign::Minus]
        .into_iter()
        .map(|sign| {
            let lc = LevelContext::new(level, sign)?;
            let t = level_tables(&lc)?;
            let verified = |g: &GradeTable| if g.holds() { g.idempotents.len() } else { 0 };
            let mut grades = vec![
                GradeCount {
                    grade: 0,
                    found: verified(&t.ring),
                    expected: expected_grade_count(level, 0),
                    source: "computed",
                },
                GradeCount {
                    grade: 1,
                    found: verified(&t.twist),
                    expected: expected_grade_count(level, 1),
                    source: "computed",
                },
            ];
            match level {
                2 => {
                    let ok = t.grade_two.iter().any(|g| g.holds());
                    grades.push(GradeCount {
                        grade: 2,
                        found: if ok { 2 } else { 0 },
                        expected: expected_grade_count(level, 2),
                        source: "computed",
                    });
                }
                3 => {
                    // F⁴ − dF² + 1 at grade 2 and a quadratic relation at grade 3.
                    for (h, deg) in [(2, 4), (3, 2)] {
                        grades.push(GradeCount {
                            grade: h,
                            found: deg,
                            expected: expected_grade_count(level, h),
                            source: "modulus degree",
                        });
                    }
                }
                _ => {}
            }
            let total = grades.iter().map(|g| g.found).sum();
            Ok((sign, IrrepCountReport { level, grades, total }))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loop_values() {
        for level in 1..=3 {
            for sign in [LoopSign::Plus, LoopSign::Minus] {
                let lc = LevelContext::new(level, sign).unwrap();
                assert!(lc.ring_roots().contains(&lc.d));
                assert_eq!(lc.twist_roots().len(), 2 * level);
                let back = LevelContext::from_loop_value(level, &lc.d).unwrap();
                assert_eq!(back.sign, sign);
            }
        }
    }

    #[test]
    fn rejected_loop_values() {
        assert!(matches!(LevelContext::from_loop_value(2, &Scalar::one()), Err(TljError::WrongD(_))));
        let phi = LevelContext::new(3, LoopSign::Plus).unwrap().d.inv().unwrap();
        assert!(matches!(LevelContext::from_loop_value(3, &phi), Err(TljError::Unsupported(_))));
        assert!(matches!(LevelContext::new(4, LoopSign::Plus), Err(TljError::Unsupported(_))));
    }

    #[test]
    fn expected_counts() {
        assert_eq!((0..=1).map(|h| expected_grade_count(1, h)).collect::<Vec<_>>(), vec![2, 2]);
        assert_eq!((0..=2).map(|h| expected_grade_count(2, h)).collect::<Vec<_>>(), vec![3, 4, 2]);
        assert_eq!((0..=3).map(|h| expected_grade_count(3, h)).collect::<Vec<_>>(), vec![4, 6, 4, 2]);
    }

    #[test]
    fn level_two_grade_two() {
        for sign in [LoopSign::Plus, LoopSign::Minus] {
            let lc = LevelContext::new(2, sign).unwrap();
            let engine = lc.engine().unwrap();
            let rep = grade_two_check(&lc, &engine, TwistOrientation::Forward).unwrap();
            assert!(rep.holds(), "{sign}: {rep:?}");
            // Flipping the sign of the twist term breaks idempotency.
            let [e, _] = grade_two_idempotents(&lc, &engine, TwistOrientation::Forward).unwrap();
            let bad = e.sub(&engine.twist(2).unwrap().scale(&lc.i())).unwrap();
            assert!(!engine.equal(&engine.compose(&bad, &bad).unwrap(), &bad).unwrap());
        }
    }

    #[test]
    fn level_one_tables() {
        for sign in [LoopSign::Plus, LoopSign::Minus] {
            let t = level_tables(&LevelContext::new(1, sign).unwrap()).unwrap();
            assert!(t.ring.holds(), "{sign}");
            assert!(t.twist.holds(), "{sign}");
            assert!(t.trivial.is_some());
        }
    }
}
