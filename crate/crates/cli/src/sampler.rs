//! Seeded random inputs. Each consumer picks its own ChaCha stream, so
//! adding draws to one suite never shifts another.

use lcm_core::{Fraction, LcmMonoid, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { rng }
    }

    /// A word of uniformly chosen length in `0..=max_len`.
    pub fn word(&mut self, generators: usize, max_len: usize) -> Vec<usize> {
        let len = self.rng.gen_range(0..=max_len);
        (0..len).map(|_| self.rng.gen_range(0..generators)).collect()
    }

    pub fn element<M: LcmMonoid + ?Sized>(&mut self, m: &M, max_len: usize) -> Result<M::Element> {
        let w = self.word(m.capabilities().generator_count, max_len);
        m.word(&w)
    }

    pub fn fraction<M: LcmMonoid + ?Sized>(&mut self, m: &M, max_len: usize) -> Result<Fraction<M::Element>> {
        Ok(Fraction::new(
            self.element(m, max_len)?,
            self.element(m, max_len)?,
        ))
    }

    /// Redraws until `num != den`, which for these instances means `z != 1`.
    pub fn nontrivial_fraction<M: LcmMonoid + ?Sized>(
        &mut self,
        m: &M,
        max_len: usize,
    ) -> Result<Fraction<M::Element>> {
        loop {
            let f = self.fraction(m, max_len.max(1))?;
            if f.num != f.den {
                return Ok(f);
            }
        }
    }
}
