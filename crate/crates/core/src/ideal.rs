//! Monomial fractional ideals of a numerical semigroup ring.
//!
//! An ideal is the set `E ⊂ Z` of exponents `n` with `t^n` in the ideal.
//! `E` is closed under adding elements of `H`, bounded below, and contains
//! every integer from some point on. It is stored as a membership window over
//! `[offset, tail_start)`; `offset` is the least element and `tail_start` is
//! the least `t` with `[t, ∞) ⊆ E`, so two ideals are equal exactly when
//! their windows are.
//!
//! All lengths are exponent counts: every graded piece is one dimensional, so
//! nothing depends on the coefficient field.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{parse_int_list, Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone)]
pub struct MonomialIdeal {
    semigroup: NumericalSemigroup,
    offset: i64,
    window: Vec<bool>,
    generators: OnceLock<Vec<i64>>,
}

impl MonomialIdeal {
    /// Builds an ideal from a membership predicate that is false below `lo`
    /// and true from `hi` on. The predicate must describe an `H`-closed set.
    pub(crate) fn from_predicate(
        h: &NumericalSemigroup,
        lo: i64,
        hi: i64,
        member: impl Fn(i64) -> bool,
    ) -> Self {
        let hi = hi.max(lo);
        let offset = (lo..hi).find(|&n| member(n)).unwrap_or(hi);
        let flags: Vec<bool> = (offset..hi).map(&member).collect();
        let len = flags.iter().rposition(|&m| !m).map_or(0, |p| p + 1);
        let mut window = flags;
        window.truncate(len);
        Self {
            semigroup: h.clone(),
            offset,
            window,
            generators: OnceLock::new(),
        }
    }

    /// The ideal generated by `t^g` for `g` in `exps`.
    pub fn from_generators(h: &NumericalSemigroup, exps: &[i64]) -> Result<Self> {
        let lo = *exps.iter().min().ok_or(Error::EmptyGenerators)?;
        let hi = lo + h.conductor();
        Ok(Self::from_predicate(h, lo, hi, |n| {
            exps.iter().any(|&g| h.contains(n - g))
        }))
    }

    /// The principal ideal `t^q R`.
    pub fn principal(h: &NumericalSemigroup, q: i64) -> Self {
        Self::from_predicate(h, q, q + h.conductor(), |n| h.contains(n - q))
    }

    /// `R` itself.
    pub fn ring(h: &NumericalSemigroup) -> Self {
        Self::principal(h, 0)
    }

    /// The normalization `V = k[[t]]`, i.e. every exponent `n >= 0`.
    pub fn normalization(h: &NumericalSemigroup) -> Self {
        Self::from_predicate(h, 0, 0, |n| n >= 0)
    }

    /// The canonical ideal: `t^n ∈ K_R` iff `a - n ∉ H`, where `a` is the
    /// Frobenius number. It satisfies `R ⊆ K_R ⊆ V`.
    pub fn canonical(h: &NumericalSemigroup) -> Self {
        let a = h.frobenius();
        Self::from_predicate(h, 0, a + 1, |n| !h.contains(a - n))
    }

    /// Parses a comma separated exponent list, e.g. `"0,1"` for `(1, t)`.
    pub fn parse(h: &NumericalSemigroup, s: &str) -> Result<Self> {
        Self::from_generators(h, &parse_int_list(s)?)
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn tail_start(&self) -> i64 {
        self.offset + self.window.len() as i64
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < self.offset {
            false
        } else {
            self.window.get((n - self.offset) as usize).copied().unwrap_or(true)
        }
    }

    /// Members of the window `[offset, tail_start)`.
    pub fn window_members(&self) -> impl Iterator<Item = i64> + '_ {
        (self.offset..self.tail_start()).filter(|&n| self.contains(n))
    }

    /// Exponents `n ∈ E` such that `n - h ∉ E` for every nonzero `h ∈ H`.
    pub fn minimal_generators(&self) -> &[i64] {
        self.generators.get_or_init(|| {
            let gens = self.semigroup.generators();
            let end = self.tail_start() + self.semigroup.multiplicity();
            (self.offset..end)
                .filter(|&n| self.contains(n) && gens.iter().all(|&g| !self.contains(n - g)))
                .collect()
        })
    }

    /// Minimal number of generators.
    pub fn mu(&self) -> usize {
        self.minimal_generators().len()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.semigroup == other.semigroup {
            Ok(())
        } else {
            Err(Error::SemigroupMismatch)
        }
    }

    /// `self : other = {x : x·other ⊆ self}`.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let gens = other.minimal_generators();
        let lo = self.offset - other.offset;
        let hi = self.tail_start() - other.offset;
        Ok(Self::from_predicate(&self.semigroup, lo, hi, |n| {
            gens.iter().all(|&g| self.contains(n + g))
        }))
    }

    /// Product ideal; its exponent set is the Minkowski sum.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let gens = self.minimal_generators();
        let lo = self.offset + other.offset;
        let hi = self.offset + other.tail_start();
        Ok(Self::from_predicate(&self.semigroup, lo, hi, |n| {
            gens.iter().any(|&g| other.contains(n - g))
        }))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let lo = self.offset.min(other.offset);
        let hi = self.tail_start().min(other.tail_start());
        Ok(Self::from_predicate(&self.semigroup, lo, hi, |n| {
            self.contains(n) || other.contains(n)
        }))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let lo = self.offset.max(other.offset);
        let hi = self.tail_start().max(other.tail_start());
        Ok(Self::from_predicate(&self.semigroup, lo, hi, |n| {
            self.contains(n) && other.contains(n)
        }))
    }

    /// `Hom(I, K_R)`, realized as `K_R : I`.
    pub fn dual(&self) -> Self {
        Self::canonical(&self.semigroup)
            .colon(self)
            .expect("canonical ideal shares the semigroup")
    }

    /// `self ⊇ other`.
    pub fn contains_ideal(&self, other: &Self) -> bool {
        if self.semigroup != other.semigroup || other.offset < self.offset {
            return false;
        }
        let end = self.tail_start().max(other.tail_start());
        (other.offset..end).all(|n| !other.contains(n) || self.contains(n))
    }

    /// Length of `self / sub` as the number of exponents in `self` but not in
    /// `sub`. Both sets contain a full tail, so the count is always finite.
    pub fn quotient_length(&self, sub: &Self) -> Result<u64> {
        Ok(self.quotient_exponents(sub)?.len() as u64)
    }

    /// Exponents in `self` but not in `sub`, ascending.
    pub fn quotient_exponents(&self, sub: &Self) -> Result<Vec<i64>> {
        self.check_same(sub)?;
        if !self.contains_ideal(sub) {
            return Err(Error::NotContained);
        }
        Ok((self.offset..sub.tail_start())
            .filter(|&n| self.contains(n) && !sub.contains(n))
            .collect())
    }

    /// Translates every exponent by `q`, i.e. multiplies by `t^q`.
    pub fn shift(&self, q: i64) -> Self {
        Self {
            semigroup: self.semigroup.clone(),
            offset: self.offset + q,
            window: self.window.clone(),
            generators: OnceLock::new(),
        }
    }

    /// Shifts so that the least exponent is 0; then `R ⊆ I ⊆ V`.
    pub fn normalize(&self) -> Self {
        self.shift(-self.offset)
    }

    /// Monomial ideals are compared up to multiplication by a power of `t`.
    pub fn is_shift_of(&self, other: &Self) -> bool {
        self.semigroup == other.semigroup && self.window == other.window
    }

    /// The same exponent set viewed over a larger semigroup `h`. Fails unless
    /// the set is closed under `h`.
    pub fn over(&self, h: &NumericalSemigroup) -> Result<Self> {
        let ideal = Self {
            semigroup: h.clone(),
            offset: self.offset,
            window: self.window.clone(),
            generators: OnceLock::new(),
        };
        let closed = ideal.window_members().all(|n| {
            h.generators().iter().all(|&g| ideal.contains(n + g))
        });
        if closed {
            Ok(ideal)
        } else {
            Err(Error::PreconditionNotMet("exponent set is not closed under the target semigroup"))
        }
    }

    /// The endomorphism ring `B = I : I` together with `I` and `K_B` over it.
    pub fn end_ring(&self) -> EndomorphismRing {
        let colon = self.colon(self).expect("same semigroup");
        debug_assert_eq!(colon.offset, 0);
        // B ⊆ V, and its minimal generators lie below conductor(B) + e(B) <= tail + e(H)
        let bound = colon.tail_start() + self.semigroup.multiplicity();
        let members: Vec<i64> = (1..=bound).filter(|&n| colon.contains(n)).collect();
        let semigroup = NumericalSemigroup::new(&members).expect("B contains H, so gcd is 1");
        let ideal = self.over(&semigroup).expect("I is a B-module");
        let canonical_over_r = Self::canonical(&self.semigroup)
            .colon(&colon)
            .and_then(|k| k.over(&semigroup))
            .expect("K_R : B is a B-module");
        EndomorphismRing {
            semigroup,
            ideal,
            canonical_over_r,
        }
    }

    pub fn record(&self) -> IdealRecord {
        IdealRecord {
            offset: self.offset,
            generators: self.minimal_generators().to_vec(),
            mu: self.mu(),
            tail_start: self.tail_start(),
        }
    }

    /// Rebuilds an ideal from its record, checking the derived fields.
    pub fn from_record(h: &NumericalSemigroup, record: &IdealRecord) -> Result<Self> {
        let ideal = Self::from_generators(h, &record.generators)?;
        if ideal.record() != *record {
            return Err(Error::Inconsistent(format!(
                "ideal record does not match generators {:?}",
                record.generators
            )));
        }
        Ok(ideal)
    }
}

/// `B = I : I` as a numerical semigroup, `I` as a `B`-ideal, and
/// `K_R : B`, which is a canonical ideal of `B` up to shift.
#[derive(Debug, Clone)]
pub struct EndomorphismRing {
    pub semigroup: NumericalSemigroup,
    pub ideal: MonomialIdeal,
    pub canonical_over_r: MonomialIdeal,
}

/// Serialized form of an ideal. The semigroup travels separately.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRecord {
    pub offset: i64,
    pub generators: Vec<i64>,
    pub mu: usize,
    pub tail_start: i64,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.semigroup == other.semigroup && self.offset == other.offset && self.window == other.window
    }
}

impl Eq for MonomialIdeal {}

impl std::hash::Hash for MonomialIdeal {
    fn hash<S: std::hash::Hasher>(&self, state: &mut S) {
        self.semigroup.hash(state);
        self.offset.hash(state);
        self.window.hash(state);
    }
}

/// Formats a monomial `t^n` the way it is usually written.
pub fn monomial(n: i64) -> String {
    match n {
        0 => "1".to_string(),
        1 => "t".to_string(),
        _ => format!("t^{n}"),
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.minimal_generators().iter().map(|&g| monomial(g)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.semigroup)
    }
}
