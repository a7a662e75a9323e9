//! Simulator and analytics for strategic leader election under
//! cryptographic self-selection.
//!
//! In each round of a cryptographic self-selection protocol every account
//! evaluates a verifiable random function on the round seed to obtain a
//! credential, broadcasts it (or withholds it), and the lowest-scoring
//! broadcast credential wins: its owner leads the round and the winning
//! credential becomes the next seed. A strategic player who controls an
//! `alpha` fraction of the stake can selectively withhold or reveal
//! credentials to steer future seeds toward rounds it wins.
//!
//! This crate models that game for a single strategic player against two
//! aggregate honest players and provides:
//!
//! - [`distributions`]: exponential primitives and the incremental
//!   order-statistics sampler that represents an adversary with arbitrarily
//!   many wallets,
//! - [`scoring`]: balanced and canonical scoring functions plus leader
//!   selection by minimum score,
//! - [`vrf`]: an ideal-VRF emulation with seeds as opaque path identities,
//! - [`game`]: the round engine with stopping-time detection,
//! - [`strategies`]: the honest baseline and the one-round lookahead
//!   strategy,
//! - [`branching`]: the seed-option tree whose height bounds how long a
//!   seed can stay biased,
//! - [`analytics`]: closed forms (lookahead revenue series, revenue upper
//!   bound, expected stopping-time bound),
//! - [`estimator`]: renewal-reward Monte Carlo revenue estimation with
//!   confidence intervals,
//! - [`mdp`]: a truncated value-function solver and binary search for the
//!   optimal long-run revenue rate,
//! - [`cli`]: table construction and CSV/JSON emission used by the `csspa`
//!   binary.
//!
//! Everything is deterministic given a master seed; independent trials own
//! independent ChaCha streams so runs parallelize without losing
//! reproducibility.

pub mod analytics;
pub mod branching;
pub mod cli;
pub mod distributions;
mod error;
pub mod estimator;
pub mod game;
pub mod mdp;
pub mod scoring;
pub mod strategies;
pub mod vrf;

pub use error::{Error, Result};
