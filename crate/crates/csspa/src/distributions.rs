//! Exponential primitives and the incremental order-statistics sampler.
//!
//! The strategic player splits its stake over arbitrarily many wallets, so
//! its credential scores in a round form the order statistics of infinitely
//! many exponential draws. Sampling those naively is impossible; instead the
//! k-th lowest score is the (k-1)-th plus an independent `Exp(alpha)`
//! increment, which [`ScoreSequence`] materializes lazily.

use rand::Rng;

use crate::error::{domain, Error, Result};

/// Rate of an exponential distribution.
///
/// A rate of exactly zero encodes the degenerate point mass at +infinity
/// (the score of a player holding no stake). It is a legal value to hold and
/// compare against, but can never be sampled.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rate(f64);

impl Rate {
    /// The degenerate point mass at +infinity.
    pub const ZERO: Rate = Rate(0.0);

    /// A nonnegative, finite rate. Zero is accepted and means [`Rate::ZERO`].
    pub fn new(value: f64) -> Result<Rate> {
        if !value.is_finite() || value < 0.0 {
            return Err(domain(format!("rate must be finite and >= 0, got {value}")));
        }
        Ok(Rate(value))
    }

    /// A strictly positive rate.
    pub fn positive(value: f64) -> Result<Rate> {
        if !value.is_finite() || value <= 0.0 {
            return Err(domain(format!("rate must be finite and > 0, got {value}")));
        }
        Ok(Rate(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// True for the point mass at +infinity.
    pub fn is_degenerate(self) -> bool {
        self.0 == 0.0
    }
}

/// Inverse CDF of `Exp(rate)` applied to the survival draw `u` in (0,1).
///
/// One uniform draw maps to exactly one sample, so trial reproducibility
/// reduces to reproducibility of the underlying stream.
pub(crate) fn exp_inverse_cdf(rate: Rate, u: f64) -> f64 {
    debug_assert!(u > 0.0 && u < 1.0);
    -u.ln() / rate.value()
}

/// One sample from `Exp(rate)` by inversion.
pub fn sample_exp<R: Rng + ?Sized>(rate: Rate, rng: &mut R) -> Result<f64> {
    if rate.is_degenerate() {
        return Err(domain("Exp(0) is a point mass at +infinity and cannot be sampled"));
    }
    let u: f64 = rng.sample(rand::distr::Open01);
    Ok(exp_inverse_cdf(rate, u))
}

/// Strictly increasing ladder of the lowest scores among infinitely many
/// wallets that jointly hold rate `base_rate`.
///
/// Entry 0 is marginally `Exp(base_rate)` and consecutive gaps are i.i.d.
/// `Exp(base_rate)`; more entries can be appended at any time without
/// disturbing the ones already drawn.
#[derive(Debug, Clone)]
pub struct ScoreSequence {
    scores: Vec<f64>,
    base_rate: Rate,
}

impl ScoreSequence {
    pub fn new(base_rate: Rate) -> Result<Self> {
        if base_rate.is_degenerate() {
            return Err(domain("score sequence needs a strictly positive base rate"));
        }
        Ok(ScoreSequence { scores: Vec::new(), base_rate })
    }

    pub fn base_rate(&self) -> Rate {
        self.base_rate
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<f64> {
        self.scores.get(index).copied()
    }

    pub fn first(&self) -> Option<f64> {
        self.scores.first().copied()
    }

    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    /// Appends one entry at the previous entry plus `delta`.
    ///
    /// A delta small enough to round the sum onto the previous entry would
    /// create an exact tie between two wallet scores, which the continuous
    /// model rules out, so it is reported as an error.
    pub fn append_increment(&mut self, delta: f64) -> Result<()> {
        if !delta.is_finite() || delta <= 0.0 {
            return Err(domain(format!("increment must be finite and > 0, got {delta}")));
        }
        let last = self.scores.last().copied().unwrap_or(0.0);
        let next = last + delta;
        if next <= last {
            return Err(Error::Tie(format!(
                "order statistic increment {delta} rounded away at {last}"
            )));
        }
        self.scores.push(next);
        Ok(())
    }

    /// Appends `k` fresh order statistics.
    pub fn extend<R: Rng + ?Sized>(&mut self, k: usize, rng: &mut R) -> Result<()> {
        for _ in 0..k {
            let delta = sample_exp(self.base_rate, rng)?;
            self.append_increment(delta)?;
        }
        Ok(())
    }
}

/// Probability that `Exp(rate_x) < Exp(rate_y)` for independent draws:
/// `rate_x / (rate_x + rate_y)`.
///
/// With one degenerate rate this correctly degenerates to 0 or 1 (the
/// point mass at +infinity never wins a comparison).
pub fn prob_first_smaller(rate_x: Rate, rate_y: Rate) -> f64 {
    debug_assert!(!(rate_x.is_degenerate() && rate_y.is_degenerate()));
    rate_x.value() / (rate_x.value() + rate_y.value())
}

/// Probability that exactly `j` adversary wallets score below the best
/// honest score: `alpha^j * (1 - alpha)`.
pub fn winner_pmf(alpha: f64, j: u32) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(domain(format!("stake fraction must lie in (0,1), got {alpha}")));
    }
    Ok(alpha.powi(j as i32) * (1.0 - alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn inverse_cdf_identities() {
        let e = (-1.0f64).exp();
        assert!((exp_inverse_cdf(Rate::new(1.0).unwrap(), e) - 1.0).abs() < 1e-15);
        assert!((exp_inverse_cdf(Rate::new(2.0).unwrap(), e) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn degenerate_rate_is_not_samplable() {
        let mut rng = rand::rng();
        assert!(matches!(sample_exp(Rate::ZERO, &mut rng), Err(Error::Domain(_))));
        assert!(Rate::new(0.0).unwrap().is_degenerate());
        assert!(Rate::positive(0.0).is_err());
        assert!(Rate::new(-1.0).is_err());
        assert!(Rate::new(f64::NAN).is_err());
    }

    #[test]
    fn score_sequence_accumulates_increments() {
        let mut seq = ScoreSequence::new(Rate::new(0.5).unwrap()).unwrap();
        for d in [0.2, 0.3, 0.1] {
            seq.append_increment(d).unwrap();
        }
        let expect = [0.2, 0.5, 0.6];
        for (s, e) in seq.scores().iter().zip(expect) {
            assert!((s - e).abs() < 1e-12);
        }

        let mut seq = ScoreSequence::new(Rate::new(1.0).unwrap()).unwrap();
        seq.append_increment(0.4).unwrap();
        seq.append_increment(0.05).unwrap();
        assert!((seq.get(1).unwrap() - 0.45).abs() < 1e-12);
    }

    #[test]
    fn vanishing_increment_is_a_tie() {
        let mut seq = ScoreSequence::new(Rate::new(1.0).unwrap()).unwrap();
        seq.append_increment(1.0).unwrap();
        // 1e-17 is below the float spacing at 1.0, so the sum rounds back.
        assert!(matches!(seq.append_increment(1e-17), Err(Error::Tie(_))));
        assert!(seq.append_increment(-0.1).is_err());
        assert_eq!(seq.len(), 1);
    }

    #[test]
    fn prob_first_smaller_examples() {
        let r = |v| Rate::new(v).unwrap();
        assert_eq!(prob_first_smaller(r(1.0), r(1.0)), 0.5);
        assert!((prob_first_smaller(r(0.3), r(0.7)) - 0.3).abs() < 1e-15);
        assert!((prob_first_smaller(r(0.2), r(0.6)) - 0.25).abs() < 1e-15);
        // Comparisons against the point mass at +infinity are deterministic.
        assert_eq!(prob_first_smaller(Rate::ZERO, r(0.4)), 0.0);
        assert_eq!(prob_first_smaller(r(0.4), Rate::ZERO), 1.0);
    }

    #[test]
    fn winner_pmf_examples() {
        assert_eq!(winner_pmf(0.5, 0).unwrap(), 0.5);
        assert_eq!(winner_pmf(0.5, 2).unwrap(), 0.125);
        assert!(winner_pmf(0.0, 1).is_err());
        assert!(winner_pmf(1.0, 1).is_err());
    }

    proptest! {
        // Partial sums of the winner pmf telescope to 1 - alpha^(J+1).
        #[test]
        fn winner_pmf_partial_sums(alpha in 0.01f64..0.99, j_max in 0u32..40) {
            let sum: f64 = (0..=j_max).map(|j| winner_pmf(alpha, j).unwrap()).sum();
            let closed = 1.0 - alpha.powi(j_max as i32 + 1);
            prop_assert!((sum - closed).abs() < 1e-12);
        }

        #[test]
        fn prob_first_smaller_is_complementary(x in 0.01f64..10.0, y in 0.01f64..10.0) {
            let rx = Rate::new(x).unwrap();
            let ry = Rate::new(y).unwrap();
            let p = prob_first_smaller(rx, ry) + prob_first_smaller(ry, rx);
            prop_assert!((p - 1.0).abs() < 1e-12);
        }

        #[test]
        fn order_stats_strictly_increase(seed in any::<u64>(), k in 1usize..64) {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut seq = ScoreSequence::new(Rate::new(0.3).unwrap()).unwrap();
            seq.extend(k, &mut rng).unwrap();
            prop_assert_eq!(seq.len(), k);
            for w in seq.scores().windows(2) {
                prop_assert!(w[0] < w[1]);
            }
        }
    }
}
