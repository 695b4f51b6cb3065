//! Dedekind sums `s(α, β)` with the modulus first.
//!
//! The classical literature writes `s(h, k)` with modulus `k` second; here the
//! first argument is always the modulus, so `s(α, 1) = (α−1)(α−2)/(12α)`.
//!
//! Three evaluators are provided:
//!
//! * [`dedekind_sawtooth`]: exact brute force over `k = 1..α−1` of
//!   `((k/α))((kβ/α))`, `O(α)`.
//! * [`dedekind_fast`]: exact, `O(log α)` via periodicity and reciprocity.
//! * [`dedekind_cotangent`]: the cotangent sum in multi-precision floating
//!   point. It is a cross-check only and never feeds an invariant.

use std::ops::Range;

use astro_float::{BigFloat, Consts, RoundingMode};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Default working precision of [`dedekind_cotangent`], in bits.
pub const DEFAULT_COTANGENT_PRECISION: usize = 128;

/// Arguments of `s(alpha, beta)`: `alpha ≥ 1` and `gcd(alpha, beta) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DedekindArgs {
    alpha: i64,
    beta: i64,
}

impl DedekindArgs {
    pub fn new(alpha: i64, beta: i64) -> Result<Self> {
        if alpha < 1 || alpha.gcd(&beta) != 1 {
            return Err(Error::InvalidDedekindArgs { alpha, beta });
        }
        Ok(DedekindArgs { alpha, beta })
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }

    /// `β mod α` in `[0, α)`.
    fn reduced_beta(&self) -> u64 {
        self.beta.rem_euclid(self.alpha) as u64
    }
}

/// Exact `s(α, β)` by summing the sawtooth products directly.
pub fn dedekind_sawtooth(args: DedekindArgs) -> Rational {
    let alpha = args.alpha as u64;
    let numerator = sawtooth_numerator(args, 1..alpha);
    Rational::new(numerator, sawtooth_denominator(args))
}

/// `4α²`, the common denominator of every sawtooth product.
pub fn sawtooth_denominator(args: DedekindArgs) -> BigInt {
    let a = BigInt::from(args.alpha);
    4 * &a * &a
}

/// `Σ (2k − α)(2r_k − α)` over `k` in `ks`, where `r_k = kβ mod α` and terms
/// with `r_k = 0` are skipped.
///
/// Dividing the sum over `1..α` by [`sawtooth_denominator`] gives `s(α, β)`.
/// Disjoint ranges may be summed independently and added.
pub fn sawtooth_numerator(args: DedekindArgs, ks: Range<u64>) -> BigInt {
    let alpha = args.alpha as u64;
    let start = ks.start.max(1);
    let end = ks.end.min(alpha);
    if start >= end {
        return BigInt::zero();
    }
    let step = args.reduced_beta();
    let mut r = ((start as u128 * step as u128) % alpha as u128) as u64;
    let a = alpha as i128;

    let mut total = BigInt::zero();
    let mut acc: i128 = 0;
    for k in start..end {
        if r != 0 {
            let lhs = 2 * k as i128 - a;
            let rhs = 2 * r as i128 - a;
            match lhs.checked_mul(rhs) {
                Some(term) => match acc.checked_add(term) {
                    Some(next) => acc = next,
                    None => {
                        total += acc;
                        acc = term;
                    }
                },
                None => total += BigInt::from(lhs) * BigInt::from(rhs),
            }
        }
        // r < α and step < α, so the sum fits in u64 for any i64 modulus
        r += step;
        if r >= alpha {
            r -= alpha;
        }
    }
    total + acc
}

/// Exact `s(α, β)` in `O(log α)` steps.
///
/// Reduces `β` by oddness and periodicity, then alternates the reciprocity law
/// `s(a, b) + s(b, a) = −1/4 + (a² + b² + 1)/(12ab)` with reduction of the
/// new multiplier until the modulus reaches 1.
pub fn dedekind_fast(args: DedekindArgs) -> Rational {
    // i64::MIN has no negation; periodicity below covers it
    if args.beta < 0 && args.beta != i64::MIN {
        return -dedekind_fast(DedekindArgs { alpha: args.alpha, beta: -args.beta });
    }
    let mut a = BigInt::from(args.alpha);
    let mut b = BigInt::from(args.reduced_beta());
    let mut positive = true;
    let mut acc = Rational::zero();
    let quarter = Rational::new(1, 4);
    // loop invariant: s(original) = acc ± s(a, b) with 0 ≤ b < a
    while !b.is_zero() {
        let ab = &a * &b;
        let term = Rational::new(&a * &a + &b * &b + 1, 12 * &ab) - &quarter;
        if positive {
            acc = acc + term;
        } else {
            acc = acc - term;
        }
        positive = !positive;
        let r = &a % &b;
        a = b;
        b = r;
    }
    // b == 0 forces a == 1 by coprimality, and s(1, 0) = 0
    debug_assert!(a == BigInt::from(1));
    acc
}

/// `s(α, β) + s(β, α) − [−1/4 + (α² + β² + 1)/(12αβ)]`, both sums taken by
/// brute force. Always zero.
pub fn reciprocity_defect(alpha: i64, beta: i64) -> Result<Rational> {
    if alpha < 1 || beta < 1 {
        return Err(Error::InvalidDedekindArgs { alpha, beta });
    }
    let forward = dedekind_sawtooth(DedekindArgs::new(alpha, beta)?);
    let backward = dedekind_sawtooth(DedekindArgs::new(beta, alpha)?);
    let (a, b) = (BigInt::from(alpha), BigInt::from(beta));
    let rhs = Rational::new(&a * &a + &b * &b + 1, 12 * &a * &b) - Rational::new(1, 4);
    Ok(forward + backward - rhs)
}

/// Multi-precision approximation of a real number.
#[derive(Debug, Clone)]
pub struct ApproxReal(BigFloat);

impl ApproxReal {
    pub fn as_bigfloat(&self) -> &BigFloat {
        &self.0
    }

    pub fn to_f64(&self) -> f64 {
        bigfloat_to_f64(&self.0)
    }
}

fn bigfloat_to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let mut cc = Consts::new().expect("constants cache");
    x.format(astro_float::Radix::Dec, RoundingMode::ToEven, &mut cc)
        .ok()
        .and_then(|s| s.parse::<f64>().ok())
        .unwrap_or(f64::NAN)
}

/// Table of `cot(πj/α)` for `j = 0..α` (entry 0 unused), computed once per
/// modulus and shared by every multiplier.
pub struct CotangentTable {
    alpha: i64,
    working: usize,
    cot: Vec<BigFloat>,
}

impl CotangentTable {
    pub fn new(alpha: i64, precision: usize) -> Result<Self> {
        if alpha < 1 {
            return Err(Error::InvalidDedekindArgs { alpha, beta: 0 });
        }
        let precision = precision.max(1);
        // guard bits absorb the α-term summation and cancellation near the poles
        let working = (precision + 32 + (64 - (alpha as u64).leading_zeros() as usize) * 2)
            .max(128)
            .next_multiple_of(64);
        let rm = RoundingMode::ToEven;
        let mut cc = Consts::new().expect("constants cache");
        let pi = cc.pi(working, rm);
        let denom = BigFloat::from_i64(alpha, working);
        let mut cot = vec![BigFloat::from_i64(0, working); alpha as usize];
        // cot(π(α−j)/α) = −cot(πj/α)
        for j in 1..=(alpha as usize) / 2 {
            let angle = pi
                .mul(&BigFloat::from_u64(j as u64, working), working, rm)
                .div(&denom, working, rm);
            let c = angle.cos(working, rm, &mut cc);
            let s = angle.sin(working, rm, &mut cc);
            let value = c.div(&s, working, rm);
            cot[alpha as usize - j] = value.neg();
            cot[j] = value;
        }
        Ok(CotangentTable { alpha, working, cot })
    }

    /// `(1/4α) Σ_{k=1}^{α−1} cot(πk/α) cot(πkβ/α)`.
    pub fn dedekind(&self, beta: i64) -> Result<ApproxReal> {
        let args = DedekindArgs::new(self.alpha, beta)?;
        let rm = RoundingMode::ToEven;
        let alpha = self.alpha as u64;
        let step = args.reduced_beta();
        let mut sum = BigFloat::from_i64(0, self.working);
        let mut r = step;
        for k in 1..alpha {
            // r = kβ mod α is never 0 for 0 < k < α by coprimality
            let term = self.cot[k as usize].mul(&self.cot[r as usize], self.working, rm);
            sum = sum.add(&term, self.working, rm);
            r += step;
            if r >= alpha {
                r -= alpha;
            }
        }
        let scale = BigFloat::from_i64(4 * self.alpha, self.working);
        // kept at working precision, which is never below the requested one
        Ok(ApproxReal(sum.div(&scale, self.working, rm)))
    }
}

/// `s(α, β)` from the cotangent sum at `precision` bits.
pub fn dedekind_cotangent(args: DedekindArgs, precision: usize) -> ApproxReal {
    CotangentTable::new(args.alpha, precision)
        .and_then(|t| t.dedekind(args.beta))
        .expect("arguments already validated")
}

/// `6α·s(α, β)` as an integer. Returns `None` if the product is not integral,
/// which would contradict the classical divisibility property.
pub fn six_alpha_multiple(args: DedekindArgs, s: &Rational) -> Option<BigInt> {
    let scaled = s * &Rational::from(6 * args.alpha);
    scaled.is_integer().then(|| scaled.numer().clone())
}

/// Convenience for callers holding raw integers.
pub fn dedekind(alpha: i64, beta: i64) -> Result<Rational> {
    Ok(dedekind_fast(DedekindArgs::new(alpha, beta)?))
}

/// Number of reciprocity steps [`dedekind_fast`] takes; the Euclidean length
/// of `(α, β mod α)`.
pub fn fast_step_count(args: DedekindArgs) -> usize {
    let (mut a, mut b) = (args.alpha.unsigned_abs(), args.beta.unsigned_abs() % args.alpha as u64);
    let mut steps = 0;
    while b != 0 {
        (a, b) = (b, a % b);
        steps += 1;
    }
    steps
}
