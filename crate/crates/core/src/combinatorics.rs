//! Exact counts for unary words and upper bounds on condensed neighborhoods.
//!
//! Everything is computed in arbitrary precision. Inequalities involving
//! half-integers are checked after scaling by a power of two so that both
//! sides are integers; those with factorial denominators use exact
//! rationals.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::exact::ExactScalar;

/// Binomial coefficient extended to all integers: `1` when `k = 0` (even for
/// negative `n`), `0` when `k < 0` or `n < k`.
pub fn binom_ext(n: i64, k: i64) -> BigUint {
    if k == 0 {
        BigUint::one()
    } else if k < 0 || n < k {
        BigUint::zero()
    } else {
        num_integer::binomial(BigUint::from(n as u64), BigUint::from(k as u64))
    }
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

fn pow(base: u64, exp: u64) -> BigUint {
    Pow::pow(BigUint::from(base), exp)
}

fn check_unary(w: u64, d: u64, s: u64) -> Result<()> {
    if s < 1 {
        return Err(Error::Range(format!("alphabet size must be at least 1, got {s}")));
    }
    if d > w {
        return Err(Error::Range(format!("need d <= w, got w={w} d={d}")));
    }
    Ok(())
}

fn unary_sum(w: u64, d: u64, s: u64, offset: i64) -> BigUint {
    (w - d..=w)
        .map(|m| {
            let k = d + m - w;
            binom_ext(m as i64 - offset, k as i64) * pow(s - 1, k)
        })
        .sum()
}

/// Size of the condensed `d`-neighborhood of a unary word of length `w`
/// over `s` symbols.
pub fn unary_cn_size(w: u64, d: u64, s: u64) -> Result<BigUint> {
    check_unary(w, d, s)?;
    Ok(unary_sum(w, d, s, 1))
}

/// Size of the super-condensed `d`-neighborhood of a unary word.
pub fn unary_scn_size(w: u64, d: u64, s: u64) -> Result<BigUint> {
    check_unary(w, d, s)?;
    Ok(unary_sum(w, d, s, 2))
}

/// Upper bound on `|CN(W, d)|` for any word of length `w`, `0 <= d < w`.
///
/// Sums over the number `i` of deleted query characters and `j` of
/// mismatches in a leftmost alignment; the remaining `d - i - j` edits are
/// insertions spread before the match columns.
pub fn bound_f(w: u64, d: u64, s: u64) -> Result<BigUint> {
    if s < 1 {
        return Err(Error::Range(format!("alphabet size must be at least 1, got {s}")));
    }
    if d >= w {
        return Err(Error::Range(format!("need d < w, got w={w} d={d}")));
    }
    let (w, d) = (w as i64, d as i64);
    let mut total = BigUint::zero();
    for i in 0..=d {
        let inner: BigUint = (0..=d - i)
            .map(|j| binom_ext(w - i - 1, j) * binom_ext(w + d - 2 * i - 2 * j - 1, d - i - j))
            .sum();
        total += binom_ext(w, i) * pow(s - 1, (d - i) as u64) * inner;
    }
    Ok(total)
}

/// `(2s-1)^d · w^d / d!` for `0 <= d <= w`, exact.
pub fn conjecture_bound(w: u64, d: u64, s: u64) -> Result<ExactScalar> {
    if s < 1 {
        return Err(Error::Range(format!("alphabet size must be at least 1, got {s}")));
    }
    if d > w {
        return Err(Error::Range(format!("need d <= w, got w={w} d={d}")));
    }
    ExactScalar::new(pow(2 * s - 1, d) * pow(w, d), factorial(d))
}

/// Both bounds at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub w: u64,
    pub d: u64,
    pub s: u64,
    /// Absent when `d = w`, outside the range of [`bound_f`].
    pub value_f: Option<BigUint>,
    pub conjecture_exact: ExactScalar,
    pub conjecture_floor: BigUint,
}

pub fn bound_report(w: u64, d: u64, s: u64) -> Result<BoundReport> {
    let conjecture_exact = conjecture_bound(w, d, s)?;
    let value_f = if d < w { Some(bound_f(w, d, s)?) } else { None };
    Ok(BoundReport {
        w,
        d,
        s,
        value_f,
        conjecture_floor: conjecture_exact.floor(),
        conjecture_exact,
    })
}

/// The individual identities and inequalities behind the closed-form bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProofStep {
    /// `(2s-1)^d w^d / d! = Σ_x (s-1)^{d-x} 2^{d-x} w^d / (x!(d-x)!)`.
    ExpansionIdentity,
    /// `(w-t+1)^2 <= (w+d/2+1/2)(w-d/2+3/2)` for `d > t >= d/4`, including
    /// the non-integer point `t = d/4`.
    ShiftedSquare,
    /// `(w+2t)(w+2t-1)(w-t+1)^2 <= (w+d/2+1/2)^3 (w-d/2+3/2)` for integer
    /// `0 <= t <= d/4`.
    QuarticProduct,
    /// `C(w,j) C(w+d-2j,d-j) <= (w+d/2+1/2)^{d-j} (w-d/2+3/2)^j / (j!(d-j)!)`.
    TermBound,
    /// `Σ_j C(w,j) C(w+d-2j,d-j) <= 2^d (w+1)^d / d!`, with the right side
    /// also checked against the sum of the term bounds.
    SummedTermBound,
    /// `C(w,x) Σ_j C(w-x-1,j) C(w+d-x-2j-1,d-x-j) <= 2^{d-x} w^d / (x!(d-x)!)`
    /// for `w > d >= x >= 0`.
    DeletionSumBound,
    /// `F(w,d,s) <= Σ_x (s-1)^{d-x} C(w,x) Σ_j ... <= (2s-1)^d w^d / d!`
    /// for `d < w`.
    BoundChain,
}

impl ProofStep {
    pub const ALL: [ProofStep; 7] = [
        ProofStep::ExpansionIdentity,
        ProofStep::ShiftedSquare,
        ProofStep::QuarticProduct,
        ProofStep::TermBound,
        ProofStep::SummedTermBound,
        ProofStep::DeletionSumBound,
        ProofStep::BoundChain,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            ProofStep::ExpansionIdentity => "expansion-identity",
            ProofStep::ShiftedSquare => "shifted-square",
            ProofStep::QuarticProduct => "quartic-product",
            ProofStep::TermBound => "term-bound",
            ProofStep::SummedTermBound => "summed-term-bound",
            ProofStep::DeletionSumBound => "deletion-sum-bound",
            ProofStep::BoundChain => "bound-chain",
        }
    }
}

impl fmt::Display for ProofStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepOutcome {
    pub step: ProofStep,
    pub tested: usize,
    /// Human-readable parameter tuples that violated the step.
    pub failures: Vec<String>,
}

impl StepOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCheckReport {
    pub w: u64,
    pub d: u64,
    pub s: u64,
    pub outcomes: Vec<StepOutcome>,
}

impl LemmaCheckReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(StepOutcome::passed)
    }

    pub fn outcome(&self, step: ProofStep) -> &StepOutcome {
        self.outcomes
            .iter()
            .find(|o| o.step == step)
            .expect("every step is reported")
    }
}

struct Recorder {
    outcome: StepOutcome,
}

impl Recorder {
    fn new(step: ProofStep) -> Self {
        Recorder {
            outcome: StepOutcome {
                step,
                tested: 0,
                failures: Vec::new(),
            },
        }
    }

    fn check(&mut self, ok: bool, tuple: impl FnOnce() -> String) {
        self.outcome.tested += 1;
        if !ok {
            self.outcome.failures.push(tuple());
        }
    }
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn ipow(base: i64, exp: i64) -> BigInt {
    Pow::pow(int(base), exp as u64)
}

fn ratio(numer: BigUint, denom: BigUint) -> BigRational {
    BigRational::new(numer.into(), denom.into())
}

/// `Σ_j C(w-x-1, j) C(w+d-x-2j-1-shift, d-x-j)`; `shift = x` gives the
/// inner sum of [`bound_f`], `shift = 0` the relaxed sum.
fn deletion_inner(w: i64, d: i64, x: i64, shift: i64) -> BigUint {
    (0..=d - x)
        .map(|j| binom_ext(w - x - 1, j) * binom_ext(w + d - x - 2 * j - 1 - shift, d - x - j))
        .sum()
}

/// Checks every identity and inequality used to derive the closed-form
/// bound from [`bound_f`], over all in-range auxiliary indices.
///
/// Requires `w >= d >= 1` and `s >= 2`. Steps that need `d < w` are
/// vacuous (zero tuples tested) at `d = w`.
pub fn verify_proof_lemmas(w: u64, d: u64, s: u64) -> Result<LemmaCheckReport> {
    if d < 1 || d > w || s < 2 {
        return Err(Error::Range(format!(
            "need w >= d >= 1 and s >= 2, got w={w} d={d} s={s}"
        )));
    }
    let (wi, di) = (w as i64, d as i64);
    // Twice the two half-integer factors.
    let a2 = 2 * wi + di + 1;
    let b2 = 2 * wi - di + 3;
    let conjecture = {
        let c = conjecture_bound(w, d, s)?;
        ratio(c.numer().clone(), c.denom().clone())
    };
    let mut outcomes = Vec::new();

    let mut r = Recorder::new(ProofStep::ExpansionIdentity);
    let expansion: BigRational = (0..=d)
        .map(|x| {
            ratio(
                pow(s - 1, d - x) * pow(2, d - x) * pow(w, d),
                factorial(x) * factorial(d - x),
            )
        })
        .sum();
    r.check(expansion == conjecture, || format!("w={w} d={d} s={s}"));
    outcomes.push(r.outcome);

    let mut r = Recorder::new(ProofStep::ShiftedSquare);
    // 4(w-t+1)^2 <= a2·b2 for integer t
    for t in 0..di {
        if 4 * t >= di {
            r.check(4 * ipow(wi - t + 1, 2) <= int(a2) * int(b2), || {
                format!("w={w} d={d} t={t}")
            });
        }
    }
    // t = d/4: 16(w - d/4 + 1)^2 = (4w - d + 4)^2 <= 4·a2·b2
    r.check(ipow(4 * wi - di + 4, 2) <= 4 * int(a2) * int(b2), || {
        format!("w={w} d={d} t={d}/4")
    });
    outcomes.push(r.outcome);

    let mut r = Recorder::new(ProofStep::QuarticProduct);
    for t in (0..).take_while(|t| 4 * t <= di) {
        let lhs = 16 * int(wi + 2 * t) * int(wi + 2 * t - 1) * ipow(wi - t + 1, 2);
        r.check(lhs <= ipow(a2, 3) * int(b2), || format!("w={w} d={d} t={t}"));
    }
    outcomes.push(r.outcome);

    let mut r = Recorder::new(ProofStep::TermBound);
    for j in 0..=di {
        let lhs = binom_ext(wi, j)
            * binom_ext(wi + di - 2 * j, di - j)
            * factorial(j as u64)
            * factorial((di - j) as u64)
            * pow(2, d);
        let rhs = Pow::pow(BigUint::from(a2 as u64), (di - j) as u64)
            * Pow::pow(BigUint::from(b2 as u64), j as u64);
        r.check(lhs <= rhs, || format!("w={w} d={d} j={j}"));
    }
    outcomes.push(r.outcome);

    let mut r = Recorder::new(ProofStep::SummedTermBound);
    let summed: BigUint = (0..=di)
        .map(|j| binom_ext(wi, j) * binom_ext(wi + di - 2 * j, di - j))
        .sum();
    let closed = ratio(pow(2, d) * pow(w + 1, d), factorial(d));
    r.check(ratio(summed, BigUint::one()) <= closed, || format!("w={w} d={d}"));
    let term_bounds: BigRational = (0..=d)
        .map(|j| {
            ratio(
                Pow::pow(BigUint::from(a2 as u64), d - j) * Pow::pow(BigUint::from(b2 as u64), j),
                factorial(j) * factorial(d - j) * pow(2, d),
            )
        })
        .sum();
    r.check(term_bounds == closed, || format!("w={w} d={d} (identity)"));
    outcomes.push(r.outcome);

    let mut r = Recorder::new(ProofStep::DeletionSumBound);
    if d < w {
        for x in 0..=di {
            let lhs = binom_ext(wi, x) * deletion_inner(wi, di, x, 0);
            let rhs = ratio(pow(2, d - x as u64) * pow(w, d), factorial(x as u64) * factorial(d - x as u64));
            r.check(ratio(lhs, BigUint::one()) <= rhs, || format!("w={w} d={d} x={x}"));
        }
    }
    outcomes.push(r.outcome);

    let mut r = Recorder::new(ProofStep::BoundChain);
    if d < w {
        let middle: BigUint = (0..=di)
            .map(|x| pow(s - 1, d - x as u64) * binom_ext(wi, x) * deletion_inner(wi, di, x, 0))
            .sum();
        let f = bound_f(w, d, s)?;
        r.check(f <= middle, || format!("w={w} d={d} s={s} (F <= middle)"));
        r.check(ratio(middle, BigUint::one()) <= conjecture, || {
            format!("w={w} d={d} s={s} (middle <= closed form)")
        });
    }
    outcomes.push(r.outcome);

    Ok(LemmaCheckReport { w, d, s, outcomes })
}
