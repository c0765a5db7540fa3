//! Deterministic sample generation.
//!
//! All checkers draw from a seeded ChaCha stream, so reports are
//! reproducible byte for byte for a fixed seed and index window.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cochain::{CKey, Cochain, WCochain};
use crate::generator::{GenId, VGen};
use crate::parity::Parity;
use crate::rational::rat;
use crate::rep::VElement;
use crate::w_infinity::{Family, WGen};
use crate::wedge::{wedge_normalize, WedgeTuple, WElement, WKey};

/// Samples w-infinity generators with |m| <= m_bound, i <= i_bound.
pub struct Sampler {
    rng: ChaCha8Rng,
    m_bound: i64,
    i_bound: i64,
}

impl Sampler {
    pub fn new(seed: u64, m_bound: i64, i_bound: i64) -> Sampler {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            m_bound,
            i_bound,
        }
    }

    pub fn wgen(&mut self) -> WGen {
        let family = Family::all()[self.rng.gen_range(0..4)];
        let m = self.rng.gen_range(-self.m_bound..=self.m_bound);
        let i = self.rng.gen_range(0..=self.i_bound);
        WGen::new(family, m, i)
    }

    pub fn gen(&mut self) -> GenId {
        self.wgen().id()
    }

    pub fn gen_tuple(&mut self, len: usize) -> Vec<GenId> {
        (0..len).map(|_| self.gen()).collect()
    }

    pub fn gen_tuples(&mut self, count: usize, len: usize) -> Vec<Vec<GenId>> {
        (0..count).map(|_| self.gen_tuple(len)).collect()
    }

    /// Samples for the Nambu identity: an (n-1)-tuple and an n-tuple.
    pub fn nambu_samples(&mut self, count: usize) -> Vec<(Vec<GenId>, Vec<GenId>)> {
        (0..count)
            .map(|_| (self.gen_tuple(2), self.gen_tuple(3)))
            .collect()
    }

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    /// Nonzero small scalar.
    pub fn scalar(&mut self) -> crate::rational::Rational {
        let mut v = 0;
        while v == 0 {
            v = self.rng.gen_range(-4..=4);
        }
        rat(v)
    }

    pub fn wgen_of_parity(&mut self, parity: Parity) -> WGen {
        let family = match parity {
            Parity::Even => [Family::L, Family::Lb][self.rng.gen_range(0..2)],
            Parity::Odd => [Family::H, Family::Hb][self.rng.gen_range(0..2)],
        };
        let m = self.rng.gen_range(-self.m_bound..=self.m_bound);
        let i = self.rng.gen_range(0..=self.i_bound);
        WGen::new(family, m, i)
    }

    /// A canonical nonzero wedge of two generators (arity 3).
    pub fn canonical_wedge(&mut self) -> WedgeTuple {
        loop {
            if let Some((_, w)) = wedge_normalize(&[self.gen(), self.gen()]) {
                return w;
            }
        }
    }

    /// Random sparse cochain with consistent value parities: for trivial
    /// coefficients the support has key parity equal to the cochain
    /// parity; for adjoint coefficients values are generators of parity
    /// |f| + |key|.
    pub fn random_cochain(
        &mut self,
        degree: usize,
        parity: Parity,
        adjoint: bool,
        entries: usize,
    ) -> Cochain {
        let mut f = Cochain::zero(degree, parity);
        let mut added = 0;
        while added < entries {
            let wedges: Vec<WedgeTuple> = (0..degree).map(|_| self.canonical_wedge()).collect();
            let z = self.gen();
            let key = CKey { wedges, z };
            let kpar = key.parity();
            if adjoint {
                let vpar = parity + kpar;
                let value = VElement::term(VGen::Wrapped(self.wgen_of_parity(vpar).id()), self.scalar());
                f.add_entry(key, value);
                added += 1;
            } else {
                if kpar != parity {
                    continue;
                }
                f.add_entry(key, VElement::term(VGen::Unit, self.scalar()));
                added += 1;
            }
        }
        f
    }

    /// Random sparse W-valued cochain with value parity |f| + |key|.
    pub fn random_wcochain(
        &mut self,
        degree: usize,
        parity: Parity,
        adjoint: bool,
        entries: usize,
    ) -> WCochain {
        let mut f = WCochain::zero(degree, parity);
        for _ in 0..entries {
            let key: Vec<WedgeTuple> = (0..degree).map(|_| self.canonical_wedge()).collect();
            let kpar: Parity = key.iter().map(|w| w.parity()).sum();
            let need = parity + kpar;
            let factor = self.gen();
            let value = if adjoint {
                let vpar = need + factor.parity();
                WElement::term(
                    WKey {
                        factors: vec![factor],
                        v: VGen::Wrapped(self.wgen_of_parity(vpar).id()),
                    },
                    self.scalar(),
                )
            } else {
                let factor = self.wgen_of_parity(need).id();
                WElement::term(
                    WKey {
                        factors: vec![factor],
                        v: VGen::Unit,
                    },
                    self.scalar(),
                )
            };
            f.add_entry(key, value);
        }
        f
    }
}

/// Samples tuples from a fixed generator pool (table algebras).
pub struct PoolSampler<'a> {
    rng: ChaCha8Rng,
    pool: &'a [GenId],
}

impl<'a> PoolSampler<'a> {
    pub fn new(seed: u64, pool: &'a [GenId]) -> PoolSampler<'a> {
        PoolSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            pool,
        }
    }

    pub fn gen(&mut self) -> GenId {
        self.pool[self.rng.gen_range(0..self.pool.len())].clone()
    }

    pub fn gen_tuple(&mut self, len: usize) -> Vec<GenId> {
        (0..len).map(|_| self.gen()).collect()
    }

    pub fn gen_tuples(&mut self, count: usize, len: usize) -> Vec<Vec<GenId>> {
        (0..count).map(|_| self.gen_tuple(len)).collect()
    }

    pub fn nambu_samples(&mut self, count: usize, arity: usize) -> Vec<(Vec<GenId>, Vec<GenId>)> {
        (0..count)
            .map(|_| (self.gen_tuple(arity - 1), self.gen_tuple(arity)))
            .collect()
    }
}
