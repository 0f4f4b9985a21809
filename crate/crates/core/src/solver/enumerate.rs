//! Stars-and-bars enumeration of configurations in colexicographic order.
//!
//! Colex order compares two configurations of equal length and size at the
//! last position where they differ, so the sequence starts with every pebble
//! stacked on vertex 0 and ends with every pebble stacked on vertex `n - 1`.

use rand::seq::index::sample;
use rand::Rng;

use crate::pebble::Configuration;

/// `binomial(a, b)`; panics if the value does not fit in a `u128`.
pub fn binomial(a: u64, b: u64) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 1..=u128::from(b) {
        // acc * (a - b + i) is divisible by i at every step
        acc = acc
            .checked_mul(u128::from(a - b) + i)
            .expect("binomial coefficient overflows u128")
            / i;
    }
    acc
}

/// Number of configurations of size `k` on `n` vertices.
pub fn config_count(n: usize, k: u64) -> u128 {
    assert!(n >= 1);
    binomial(k + n as u64 - 1, n as u64 - 1)
}

/// Advances `counts` to its colex successor. Returns `false` (leaving the
/// slice untouched) when `counts` is already the last configuration.
pub fn next_colex(counts: &mut [u32]) -> bool {
    let Some(first) = counts.iter().position(|&c| c > 0) else {
        return false;
    };
    if first + 1 == counts.len() {
        return false;
    }
    let carried = counts[first];
    counts[first] = 0;
    counts[first + 1] += 1;
    counts[0] = carried - 1;
    true
}

/// Iterator over every configuration of size `k` on `n` vertices, each
/// exactly once, in colex order.
#[derive(Debug, Clone)]
pub struct Compositions {
    next: Option<Vec<u32>>,
}

impl Iterator for Compositions {
    type Item = Configuration;

    fn next(&mut self) -> Option<Configuration> {
        let current = self.next.take()?;
        let mut successor = current.clone();
        if next_colex(&mut successor) {
            self.next = Some(successor);
        }
        Some(Configuration::new(current))
    }
}

pub fn enumerate_configs(n: usize, k: u32) -> Compositions {
    assert!(n >= 1, "configurations need at least one vertex");
    let mut first = vec![0; n];
    first[0] = k;
    Compositions { next: Some(first) }
}

/// The configuration at position `index` of the colex enumeration.
pub fn config_at(n: usize, k: u32, mut index: u128) -> Configuration {
    assert!(index < config_count(n, u64::from(k)), "index past the end");
    let mut counts = vec![0u32; n];
    let mut remaining = k;
    // Fix positions from the most significant (last) one down.
    for pos in (1..n).rev() {
        let mut value = 0;
        loop {
            let block = config_count(pos, u64::from(remaining - value));
            if index < block {
                break;
            }
            index -= block;
            value += 1;
        }
        counts[pos] = value;
        remaining -= value;
    }
    counts[0] = remaining;
    Configuration::new(counts)
}

/// Inverse of [`config_at`].
pub fn config_rank(config: &Configuration) -> u128 {
    let counts = config.counts();
    let mut remaining = config.size();
    let mut rank = 0u128;
    for pos in (1..counts.len()).rev() {
        for value in 0..u64::from(counts[pos]) {
            rank += config_count(pos, remaining - value);
        }
        remaining -= u64::from(counts[pos]);
    }
    rank
}

/// A uniformly random configuration of size `k` on `n` vertices.
pub fn random_config<R: Rng + ?Sized>(rng: &mut R, n: usize, k: u32) -> Configuration {
    assert!(n >= 1);
    let slots = k as usize + n - 1;
    let mut bars = sample(rng, slots, n - 1).into_vec();
    bars.sort_unstable();
    let mut counts = Vec::with_capacity(n);
    let mut prev = 0usize;
    for bar in bars {
        counts.push((bar - prev) as u32);
        prev = bar + 1;
    }
    counts.push((slots - prev) as u32);
    Configuration::new(counts)
}
