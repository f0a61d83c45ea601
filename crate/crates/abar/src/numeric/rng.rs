//! Reproducible random streams for Monte Carlo work.
//!
//! The generator is SplitMix64 (Steele–Lea–Vigna): a 64-bit counter
//! advanced by the golden-ratio increment, pushed through a fixed
//! avalanche mix. It is pure integer arithmetic — byte-identical on every
//! platform — and splittable: distinct `stream_id`s derive decorrelated
//! starting counters from the same seed, giving statistically independent
//! substreams for parallel workers. The exact algorithm is frozen by the
//! golden-sequence tests below; changing it is a breaking change to every
//! recorded (seed, stream_id) batch.

/// Golden-ratio increment of the SplitMix64 counter.
const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// Domain separator mixed into the stream id so that (seed, 0) and
/// (seed+1, 0) do not collide with (seed, 1) by simple arithmetic.
const STREAM_SALT: u64 = 0x6A09_E667_F3BC_C909; // frac(√2) bits

/// SplitMix64 finalizer: xor-shift/multiply avalanche of a 64-bit word.
#[inline]
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A seeded, reproducible stream of random numbers.
///
/// Identical `(seed, stream_id)` always reproduce the identical sequence,
/// across runs and platforms. A stream is single-owner: parallel consumers
/// each derive their own via a distinct `stream_id` rather than sharing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomStream {
    seed: u64,
    stream_id: u64,
    counter: u64,
}

impl RandomStream {
    /// Opens the stream identified by `(seed, stream_id)` at its start.
    pub fn new(seed: u64, stream_id: u64) -> Self {
        Self { seed, stream_id, counter: Self::initial_counter(seed, stream_id) }
    }

    /// The starting counter: both identifiers are avalanche-mixed before
    /// combination so related (seed, stream_id) pairs land far apart.
    fn initial_counter(seed: u64, stream_id: u64) -> u64 {
        mix64(seed).wrapping_add(mix64(stream_id ^ STREAM_SALT))
    }

    /// The seed this stream was opened with.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// The substream identifier this stream was opened with.
    pub fn stream_id(&self) -> u64 {
        self.stream_id
    }

    /// Jumps to the start of another substream of the same seed.
    pub fn set_stream(&mut self, stream_id: u64) {
        self.stream_id = stream_id;
        self.counter = Self::initial_counter(self.seed, stream_id);
    }

    /// Next raw 64-bit word.
    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.counter = self.counter.wrapping_add(GAMMA);
        mix64(self.counter)
    }

    /// Uniform draw strictly inside (0, 1): the top 53 bits select one of
    /// 2⁵³ equal cells and the value is that cell's midpoint, so neither
    /// endpoint is ever returned (0 would break log transforms, 1 would
    /// break quantile transforms).
    #[inline]
    pub fn uniform(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 0.5) * (1.0 / 9_007_199_254_740_992.0)
    }

    /// One draw from N(mean, sigma²) by the Box–Muller transform.
    ///
    /// Consumes exactly two uniforms per call and keeps no cached spare,
    /// so the stream position after n draws is always 2n — part of the
    /// frozen reproducibility contract.
    ///
    /// Panics if `sigma ≤ 0` or non-finite (domain error).
    #[inline]
    pub fn gaussian(&mut self, mean: f64, sigma: f64) -> f64 {
        assert!(sigma.is_finite() && sigma > 0.0, "gaussian sigma must be > 0 (got {sigma})");
        let u1 = self.uniform();
        let u2 = self.uniform();
        let radius = (-2.0 * u1.ln()).sqrt();
        mean + sigma * radius * (std::f64::consts::TAU * u2).cos()
    }

    /// One draw from Poisson(mean), counting unit-exponential arrivals
    /// until their sum exceeds `mean`. Exact for any mean; cost grows
    /// linearly with `mean`, which is fine at the cluster sizes used here.
    ///
    /// Panics if `mean` is negative or non-finite.
    pub fn poisson(&mut self, mean: f64) -> u64 {
        assert!(mean.is_finite() && mean >= 0.0, "poisson mean must be ≥ 0 (got {mean})");
        let mut count = 0u64;
        let mut acc = 0.0;
        loop {
            acc += -self.uniform().ln();
            if acc >= mean {
                return count;
            }
            count += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mix64_matches_published_splitmix64_vectors() {
        // Reference sequence of SplitMix64 from raw state 1234567 (counter
        // stepped by GAMMA, then mixed) — cross-checked against an
        // independent implementation of the published algorithm.
        let mut counter = 1234567u64;
        let expected = [
            6457827717110365317u64,
            3203168211198807973,
            9817491932198370423,
            4593380528125082431,
            16408922859458223821,
        ];
        for &e in &expected {
            counter = counter.wrapping_add(GAMMA);
            assert_eq!(mix64(counter), e);
        }

        // Same check from state 0.
        let mut counter = 0u64;
        let expected = [16294208416658607535u64, 7960286522194355700, 487617019471545679];
        for &e in &expected {
            counter = counter.wrapping_add(GAMMA);
            assert_eq!(mix64(counter), e);
        }
    }

    #[test]
    fn golden_sequence_is_frozen() {
        // First words of (seed=42, stream_id=0), computed once with an
        // independent implementation of the documented derivation. These
        // freeze the stream derivation + generator combination: if they
        // ever change, every recorded sample batch is invalidated.
        let golden = [
            7308329833442121176u64,
            7456363981255875973,
            6696715787896937208,
            457940365367394907,
            3155878744019272089,
            8741423202710421431,
        ];
        let mut s = RandomStream::new(42, 0);
        for g in &golden {
            assert_eq!(s.next_u64(), *g);
        }
        // set_stream jumps to the other substream's frozen start…
        let mut s = RandomStream::new(42, 1);
        assert_eq!(s.next_u64(), 903152759632025441);
        assert_eq!(s.next_u64(), 10754152730903735795);
        // …and back.
        s.set_stream(0);
        assert_eq!(s.next_u64(), golden[0]);

        // Frozen derived draws. The uniform is exact dyadic arithmetic and
        // must match bitwise; the gaussian goes through ln/cos whose last
        // ulp is libm's, so it gets a 1e-14 window.
        let mut s = RandomStream::new(42, 0);
        assert_eq!(s.uniform(), 0.3961853541329286);
        let mut s = RandomStream::new(42, 0);
        assert!((s.gaussian(5.0, 2.0) - 2.756654040560337).abs() < 1e-14);
    }

    #[test]
    fn identical_ids_reproduce_hundred_draws() {
        let mut a = RandomStream::new(777, 3);
        let mut b = RandomStream::new(777, 3);
        for _ in 0..100 {
            assert_eq!(a.gaussian(5.0, 1.0).to_bits(), b.gaussian(5.0, 1.0).to_bits());
        }
    }

    #[test]
    fn distinct_streams_disagree() {
        let mut a = RandomStream::new(777, 0);
        let mut b = RandomStream::new(777, 1);
        let same = (0..64).filter(|_| a.next_u64() == b.next_u64()).count();
        assert_eq!(same, 0);
    }

    #[test]
    fn uniform_stays_strictly_inside_unit_interval() {
        let mut s = RandomStream::new(1, 0);
        for _ in 0..10_000 {
            let u = s.uniform();
            assert!(u > 0.0 && u < 1.0);
        }
    }

    #[test]
    fn gaussian_sample_mean_converges() {
        // 10⁶ draws at (mean 5, σ 1): standard error 1e-3, window 5 SE.
        let mut s = RandomStream::new(2024, 0);
        let n = 1_000_000;
        let sum: f64 = (0..n).map(|_| s.gaussian(5.0, 1.0)).sum();
        let mean = sum / n as f64;
        assert!((mean - 5.0).abs() <= 5e-3, "mean {mean}");
    }

    #[test]
    fn gaussian_sample_variance_converges() {
        // 10⁶ draws at (mean 0, σ 2): sample variance within 2% of 4.
        let mut s = RandomStream::new(2025, 0);
        let n = 1_000_000;
        let mut sum = 0.0;
        let mut sum_sq = 0.0;
        for _ in 0..n {
            let x = s.gaussian(0.0, 2.0);
            sum += x;
            sum_sq += x * x;
        }
        let mean = sum / n as f64;
        let var = sum_sq / n as f64 - mean * mean;
        assert!((var - 4.0).abs() / 4.0 <= 0.02, "variance {var}");
    }

    #[test]
    #[should_panic(expected = "sigma must be > 0")]
    fn gaussian_rejects_non_positive_sigma() {
        RandomStream::new(0, 0).gaussian(0.0, 0.0);
    }

    #[test]
    fn poisson_mean_and_zero_cases() {
        let mut s = RandomStream::new(7, 0);
        assert_eq!(s.poisson(0.0), 0);
        // Poisson(1e-9) is ~always 0.
        assert_eq!(s.poisson(1e-9), 0);
        // 20000 draws at mean 200: SE of the mean = √200/√20000 = 0.1.
        let n = 20_000;
        let total: u64 = (0..n).map(|_| s.poisson(200.0)).sum();
        let mean = total as f64 / n as f64;
        assert!((mean - 200.0).abs() <= 0.5, "mean {mean}");
    }

    #[test]
    fn gaussian_draws_consume_exactly_two_uniforms() {
        let mut a = RandomStream::new(9, 0);
        let mut b = RandomStream::new(9, 0);
        let _ = a.gaussian(0.0, 1.0);
        let _ = b.uniform();
        let _ = b.uniform();
        assert_eq!(a.next_u64(), b.next_u64());
    }
}
