//! Numerical semigroups `H = <a_1, ..., a_l>` with gcd 1 and their elementary
//! invariants.
//!
//! Membership is answered from a table covering `[0, max(c, 2 a_l)]`; every
//! integer at or above the conductor `c` is a member and negative integers
//! never are.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{parse_int_list, Error, Result};

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

#[derive(Debug)]
struct Inner {
    generators: Vec<i64>,
    frobenius: i64,
    /// Apéry set with respect to the multiplicity, indexed by residue.
    apery: Vec<i64>,
    member: Vec<bool>,
}

/// A numerical semigroup, stored with its unique minimal generating set.
///
/// Cloning is cheap; the tables are shared.
#[derive(Clone)]
pub struct NumericalSemigroup {
    inner: Arc<Inner>,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `generators`.
    ///
    /// The list may be unsorted, contain duplicates or redundant elements; the
    /// stored generator list is always the minimal one.
    pub fn new(generators: &[i64]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&bad) = generators.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveGenerator(bad));
        }
        let g = generators.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }

        let mut sorted = generators.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let minimal = minimalize(&sorted);

        let e = minimal[0];
        let apery = apery_set(&minimal);
        let frobenius = apery.iter().max().copied().unwrap_or(0) - e;
        let conductor = frobenius + 1;
        let largest = *minimal.last().unwrap();
        let table_len = conductor.max(2 * largest) + 1;
        let member = (0..table_len)
            .map(|n| n >= apery[(n % e) as usize])
            .collect();

        Ok(Self {
            inner: Arc::new(Inner {
                generators: minimal,
                frobenius,
                apery,
                member,
            }),
        })
    }

    /// The semigroup of all nonnegative integers (multiplicity 1).
    pub fn naturals() -> Self {
        Self::new(&[1]).expect("<1> is a valid semigroup")
    }

    pub fn generators(&self) -> &[i64] {
        &self.inner.generators
    }

    /// The multiplicity `e`, i.e. the least positive member.
    pub fn multiplicity(&self) -> i64 {
        self.inner.generators[0]
    }

    /// Number of minimal generators.
    pub fn embedding_dimension(&self) -> usize {
        self.inner.generators.len()
    }

    /// The largest integer not in the semigroup; `-1` for the naturals.
    pub fn frobenius(&self) -> i64 {
        self.inner.frobenius
    }

    pub fn conductor(&self) -> i64 {
        self.inner.frobenius + 1
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        match self.inner.member.get(n as usize) {
            Some(&m) => m,
            None => true,
        }
    }

    /// Positive integers outside the semigroup, ascending.
    pub fn gaps(&self) -> Vec<i64> {
        (1..self.conductor()).filter(|&n| !self.contains(n)).collect()
    }

    pub fn genus(&self) -> usize {
        (1..self.conductor()).filter(|&n| !self.contains(n)).count()
    }

    /// Apéry set with respect to the multiplicity: the least member in each
    /// residue class modulo `e`, indexed by residue.
    pub fn apery_set(&self) -> &[i64] {
        &self.inner.apery
    }

    /// `n` is a pseudo-Frobenius number when `n` is a gap and `n + g` is a
    /// member for every generator `g`.
    pub fn is_pseudo_frobenius(&self, n: i64) -> bool {
        !self.contains(n) && self.generators().iter().all(|&g| self.contains(n + g))
    }

    /// Pseudo-Frobenius numbers, ascending. Their count is the type of the ring.
    pub fn pseudo_frobenius_numbers(&self) -> Vec<i64> {
        self.gaps()
            .into_iter()
            .filter(|&n| self.is_pseudo_frobenius(n))
            .collect()
    }

    /// Per-residue gap maxima `alpha_i`, the set they form, and its extremes.
    pub fn alpha_profile(&self) -> Result<AlphaProfile> {
        let e = self.multiplicity();
        if e == 1 {
            return Err(Error::MultiplicityOne);
        }
        let alphas: Vec<(i64, i64)> = (1..e)
            .map(|i| (i, self.inner.apery[i as usize] - e))
            .collect();
        let mut values: Vec<i64> = alphas.iter().map(|&(_, a)| a).collect();
        values.sort_unstable();
        debug_assert_eq!(values.len() as i64, e - 1);
        let b = values[0];
        let a = *values.last().unwrap();
        debug_assert_eq!(a, self.frobenius());
        Ok(AlphaProfile {
            alphas,
            values,
            b,
            a,
        })
    }

    /// True when the least per-residue maximum `b` satisfies `b + g ∈ H` for
    /// every generator `g`, i.e. `t^b` lies in `R : m`.
    pub fn min_alpha_in_socle(&self) -> Result<bool> {
        let profile = self.alpha_profile()?;
        Ok(self
            .generators()
            .iter()
            .all(|&g| self.contains(profile.b + g)))
    }

    pub fn ring_invariants(&self) -> RingInvariants {
        let e = self.multiplicity();
        let v = self.embedding_dimension();
        RingInvariants {
            multiplicity: e,
            embedding_dimension: v,
            maximal_embedding_dimension: v as i64 == e,
        }
    }

    /// Minimal generators of `H` greater than the Frobenius number; removing
    /// one of them yields a semigroup of genus one higher.
    fn removable_generators(&self) -> impl Iterator<Item = i64> + '_ {
        let f = self.frobenius();
        self.generators().iter().copied().filter(move |&g| g > f)
    }

    /// `H \ {g}` for a minimal generator `g > F(H)`.
    fn remove_generator(&self, g: i64) -> Self {
        let e = if g == self.multiplicity() {
            g + 1
        } else {
            self.multiplicity()
        };
        let mut gens: Vec<i64> = self
            .generators()
            .iter()
            .copied()
            .filter(|&x| x != g)
            .collect();
        gens.extend(g + 1..=g + e);
        Self::new(&gens).expect("removing a generator above the Frobenius number keeps gcd 1")
    }

    /// Every numerical semigroup with genus at most `max_genus` and
    /// multiplicity at most `max_multiplicity`, sorted by genus and then by
    /// generator list.
    pub fn all_up_to_genus(max_genus: usize, max_multiplicity: i64) -> Vec<Self> {
        let mut out = Vec::new();
        let mut level = vec![Self::naturals()];
        for genus in 0..=max_genus {
            let mut keep: Vec<Self> = level
                .iter()
                .filter(|h| h.multiplicity() <= max_multiplicity)
                .cloned()
                .collect();
            keep.sort_by(|x, y| x.generators().cmp(y.generators()));
            out.extend(keep);
            if genus == max_genus {
                break;
            }
            // multiplicity never decreases along the tree, so prune early
            level = level
                .iter()
                .flat_map(|h| {
                    h.removable_generators()
                        .map(|g| h.remove_generator(g))
                        .collect::<Vec<_>>()
                })
                .filter(|h| h.multiplicity() <= max_multiplicity)
                .collect();
        }
        out
    }

    pub fn record(&self) -> SemigroupRecord {
        SemigroupRecord {
            generators: self.generators().to_vec(),
            frobenius: self.frobenius(),
            conductor: self.conductor(),
            multiplicity: self.multiplicity(),
            genus: self.genus(),
            gaps: self.gaps(),
        }
    }

    /// Rebuilds a semigroup from its serialized record, checking that the
    /// derived fields agree with the generators.
    pub fn from_record(record: &SemigroupRecord) -> Result<Self> {
        let h = Self::new(&record.generators)?;
        if h.record() != *record {
            return Err(Error::Inconsistent(format!(
                "semigroup record does not match generators {:?}",
                record.generators
            )));
        }
        Ok(h)
    }
}

/// Drops every generator that lies in the semigroup of the smaller ones.
/// Input must be sorted and deduplicated.
fn minimalize(sorted: &[i64]) -> Vec<i64> {
    let max = *sorted.last().unwrap() as usize;
    let mut reach = vec![false; max + 1];
    reach[0] = true;
    let mut kept = Vec::new();
    for &g in sorted {
        if reach[g as usize] {
            continue;
        }
        kept.push(g);
        let g = g as usize;
        for n in g..=max {
            if reach[n - g] {
                reach[n] = true;
            }
        }
    }
    kept
}

/// Least member in each residue class modulo the smallest generator,
/// by shortest paths on the residue graph.
fn apery_set(generators: &[i64]) -> Vec<i64> {
    let e = generators[0];
    let mut dist = vec![i64::MAX; e as usize];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in &generators[1..] {
            let next = d + g;
            let nr = (next % e) as usize;
            if next < dist[nr] {
                dist[nr] = next;
                heap.push(Reverse((next, nr)));
            }
        }
    }
    dist
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.generators() == other.generators()
    }
}

impl Eq for NumericalSemigroup {}

impl std::hash::Hash for NumericalSemigroup {
    fn hash<S: std::hash::Hasher>(&self, state: &mut S) {
        self.generators().hash(state);
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{}", self)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators().iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", gens.join(","))
    }
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('<').trim_end_matches('>');
        Self::new(&parse_int_list(s)?)
    }
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.record().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NumericalSemigroup {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let record = SemigroupRecord::deserialize(deserializer)?;
        Self::from_record(&record).map_err(serde::de::Error::custom)
    }
}

/// Serialized form of a semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupRecord {
    pub generators: Vec<i64>,
    pub frobenius: i64,
    pub conductor: i64,
    pub multiplicity: i64,
    pub genus: usize,
    pub gaps: Vec<i64>,
}

/// For each residue `i` in `1..e`, the largest gap congruent to `i` modulo
/// `e`. `b` and `a` are the least and greatest of these; `a` is the
/// Frobenius number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaProfile {
    /// `(residue, alpha)` pairs in residue order.
    pub alphas: Vec<(i64, i64)>,
    /// The alphas as an ascending set.
    pub values: Vec<i64>,
    pub b: i64,
    pub a: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingInvariants {
    pub multiplicity: i64,
    pub embedding_dimension: usize,
    /// Embedding dimension equals multiplicity.
    pub maximal_embedding_dimension: bool,
}
