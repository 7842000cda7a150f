//! Classification of monomial ideals `I` by whether `I ⊗ Hom(I, K_R)` is
//! torsionfree, and exhaustive search over all monomial ideals of a ring.
//!
//! An ideal is a counterexample when the tensor product is torsionfree while
//! `I` is isomorphic neither to `R` (one generator) nor to `K_R` (dual has one
//! generator).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::semigroup::NumericalSemigroup;
use crate::torsion::torsion_length;

/// Default enumeration budget.
pub const DEFAULT_CAP: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealClassification {
    pub generators: Vec<i64>,
    pub mu: usize,
    pub mu_dual: usize,
    pub mu_canonical: usize,
    /// `I ≅ R`.
    pub is_principal: bool,
    /// `I ≅ K_R`.
    pub is_canonical: bool,
    /// `I·I^∨ = K_R` with `μ(I)·μ(I^∨) = μ(K_R)`.
    pub factors_canonical: bool,
    /// The same with `μ(I) = μ(I^∨) = 2` and `μ(K_R) = 4`.
    pub factors_canonical_2x2: bool,
    pub torsion_length: u64,
    pub torsionfree: bool,
    pub is_counterexample: bool,
    /// Counterexample status for the `Hom(I, R)` variant; only defined when
    /// `R` is Gorenstein.
    pub gorenstein_counterexample: Option<bool>,
    pub end_semigroup: NumericalSemigroup,
}

impl IdealClassification {
    pub fn class(&self) -> IdealClass {
        if self.is_principal {
            IdealClass::Principal
        } else if self.is_canonical {
            IdealClass::Canonical
        } else if self.torsionfree {
            IdealClass::Counterexample
        } else {
            IdealClass::Torsion
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IdealClass {
    Principal,
    Canonical,
    Torsion,
    Counterexample,
}

impl IdealClass {
    pub fn as_str(self) -> &'static str {
        match self {
            IdealClass::Principal => "principal",
            IdealClass::Canonical => "canonical",
            IdealClass::Torsion => "torsion",
            IdealClass::Counterexample => "counterexample",
        }
    }
}

/// Evidence for the factorization `I·I^∨ = K_R` with two-generated factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationEvidence {
    pub mu: usize,
    pub mu_dual: usize,
    pub mu_canonical: usize,
    pub product_is_canonical: bool,
    pub holds: bool,
}

pub fn factorization_evidence(i: &MonomialIdeal) -> FactorizationEvidence {
    let h = i.semigroup();
    let k = MonomialIdeal::canonical(h);
    let j = i.dual();
    let product_is_canonical = i.product(&j).expect("same semigroup") == k;
    let (mu, mu_dual, mu_canonical) = (i.mu(), j.mu(), k.mu());
    FactorizationEvidence {
        mu,
        mu_dual,
        mu_canonical,
        product_is_canonical,
        holds: product_is_canonical && mu == 2 && mu_dual == 2 && mu_canonical == 4,
    }
}

pub fn classify(i: &MonomialIdeal) -> IdealClassification {
    let h = i.semigroup();
    let k = MonomialIdeal::canonical(h);
    let j = i.dual();
    let (mu, mu_dual, mu_canonical) = (i.mu(), j.mu(), k.mu());
    let product_is_canonical = i.product(&j).expect("same semigroup") == k;
    let factors_canonical = product_is_canonical && mu * mu_dual == mu_canonical;
    let torsion = torsion_length(i, &j).expect("same semigroup");
    let is_principal = mu == 1;
    let is_canonical = mu_dual == 1;
    let is_counterexample = torsion.torsionfree && !is_principal && !is_canonical;
    // Gorenstein means K_R = R, so Hom(I, R) is the dual already computed
    let gorenstein_counterexample = (mu_canonical == 1).then_some(torsion.torsionfree && !is_principal);
    IdealClassification {
        generators: i.minimal_generators().to_vec(),
        mu,
        mu_dual,
        mu_canonical,
        is_principal,
        is_canonical,
        factors_canonical,
        factors_canonical_2x2: factors_canonical && mu == 2 && mu_dual == 2,
        torsion_length: torsion.length,
        torsionfree: torsion.torsionfree,
        is_counterexample,
        gorenstein_counterexample,
        end_semigroup: i.end_ring().semigroup,
    }
}

/// Exponents `c_1`, `c_2` with `I ~ (1, t^{c_1})` and `I^∨ ~ (1, t^{c_2})`,
/// when the 2x2 factorization holds.
fn factor_exponents(i: &MonomialIdeal) -> Result<(i64, i64)> {
    if !factorization_evidence(i).holds {
        return Err(Error::ConditionNotSatisfied);
    }
    let gi = i.minimal_generators();
    let j = i.dual();
    let gj = j.minimal_generators();
    Ok((gi[1] - gi[0], gj[1] - gj[0]))
}

/// With `b_1 = a - c_1`, `b_2 = a - c_2`, `b_3 = a - c_1 - c_2`, evaluates
/// `a ∉ H`, `2b_1 - a ∈ H`, `2b_2 - a ∈ H`, `b_2 + b_3 - a ∈ H`,
/// `b_1 + b_3 - a ∈ H` and `2b_2 - b_3 ∈ H`.
pub fn membership_conditions(i: &MonomialIdeal) -> Result<[bool; 6]> {
    let (c1, c2) = factor_exponents(i)?;
    let h = i.semigroup();
    let a = h.frobenius();
    let (b1, b2, b3) = (a - c1, a - c2, a - c1 - c2);
    Ok([
        !h.contains(a),
        h.contains(2 * b1 - a),
        h.contains(2 * b2 - a),
        h.contains(b2 + b3 - a),
        h.contains(b1 + b3 - a),
        h.contains(2 * b2 - b3),
    ])
}

/// With the factors ordered so that `c_1 < c_2`, evaluates
/// `2b_2 ≢ b_1 + b_3` and `2b_1 ≢ b_2 + b_3` modulo `e`.
pub fn residue_conditions(i: &MonomialIdeal) -> Result<[bool; 2]> {
    let (x, y) = factor_exponents(i)?;
    let (c1, c2) = (x.min(y), x.max(y));
    let h = i.semigroup();
    let (a, e) = (h.frobenius(), h.multiplicity());
    let (b1, b2, b3) = (a - c1, a - c2, a - c1 - c2);
    Ok([
        (2 * b2 - b1 - b3).rem_euclid(e) != 0,
        (2 * b1 - b2 - b3).rem_euclid(e) != 0,
    ])
}

/// The 2x2 factorization can only occur when `e >= 8`.
pub fn multiplicity_at_least_eight(i: &MonomialIdeal) -> Result<bool> {
    factor_exponents(i)?;
    Ok(i.semigroup().multiplicity() >= 8)
}

/// For `I` with `I·I^∨ = K_R`, `μ(I)·μ(I^∨) = μ(K_R)` and
/// `r = μ(I)`, `s = μ(I^∨)` both at least 2, evaluates `e > (r + 1)·s`.
pub fn multiplicity_bound(i: &MonomialIdeal) -> Result<bool> {
    let c = classify(i);
    if !c.factors_canonical {
        return Err(Error::PreconditionNotMet("I·I^∨ must equal K_R with μ(I)·μ(I^∨) = μ(K_R)"));
    }
    if c.mu < 2 || c.mu_dual < 2 {
        return Err(Error::PreconditionNotMet("μ(I) and μ(I^∨) must both be at least 2"));
    }
    let e = i.semigroup().multiplicity();
    Ok(e > ((c.mu + 1) * c.mu_dual) as i64)
}

/// `I² = t^q I` for some `q`, i.e. `E + E = q + E`.
pub fn is_stable(i: &MonomialIdeal) -> bool {
    i.product(i).expect("same semigroup") == i.shift(i.offset())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChangeOfRings {
    pub end_ring: NumericalSemigroup,
    pub over_r: IdealClassification,
    pub over_end_ring: IdealClassification,
    /// When `I ⊗ I^∨` is torsionfree over `R`, the same holds over `B` with
    /// `I·Hom_B(I, K_B) = K_B`, and `I ≅ B` or `I ≅ K_B` forces `I ≅ R` or
    /// `I ≅ K_R`. Vacuously true otherwise.
    pub consistent: bool,
}

/// Reclassifies `I` as an ideal of its endomorphism ring `B = I : I`.
pub fn change_of_rings(i: &MonomialIdeal) -> ChangeOfRings {
    let over_r = classify(i);
    let b = i.end_ring();
    let over_end_ring = classify(&b.ideal);
    let consistent = !over_r.torsionfree
        || (over_end_ring.torsionfree
            && over_end_ring.factors_canonical
            && (!(over_end_ring.is_principal || over_end_ring.is_canonical)
                || over_r.is_principal
                || over_r.is_canonical));
    ChangeOfRings {
        end_ring: b.semigroup,
        over_r,
        over_end_ring,
        consistent,
    }
}

/// Gap sets `U` closed upward under `H`: `g ∈ U`, `g + h` a gap ⇒ `g + h ∈ U`.
/// Sorted by size and then lexicographically.
fn gap_upsets(h: &NumericalSemigroup, cap: u64) -> Result<Vec<Vec<i64>>> {
    let gaps = h.gaps();
    let above: Vec<Vec<usize>> = gaps
        .iter()
        .map(|&g| {
            gaps.iter()
                .enumerate()
                .filter(|&(_, &x)| x > g && h.contains(x - g))
                .map(|(k, _)| k)
                .collect()
        })
        .collect();

    struct Walk<'a> {
        gaps: &'a [i64],
        above: &'a [Vec<usize>],
        chosen: Vec<bool>,
        out: Vec<Vec<i64>>,
        cap: u64,
    }

    impl Walk<'_> {
        // gaps are decided from the largest down, so every gap above `k`
        // is already fixed when `k` is considered
        fn visit(&mut self, k: usize) -> Result<()> {
            if k == 0 {
                if self.out.len() as u64 >= self.cap {
                    return Err(Error::EnumerationBudgetExceeded(self.cap));
                }
                let set = (0..self.gaps.len())
                    .filter(|&x| self.chosen[x])
                    .map(|x| self.gaps[x])
                    .collect();
                self.out.push(set);
                return Ok(());
            }
            let idx = k - 1;
            self.visit(idx)?;
            if self.above[idx].iter().all(|&x| self.chosen[x]) {
                self.chosen[idx] = true;
                self.visit(idx)?;
                self.chosen[idx] = false;
            }
            Ok(())
        }
    }

    let mut walk = Walk {
        gaps: &gaps,
        above: &above,
        chosen: vec![false; gaps.len()],
        out: Vec::new(),
        cap,
    };
    walk.visit(gaps.len())?;
    let mut out = walk.out;
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    Ok(out)
}

/// Every monomial ideal `R ⊆ I ⊆ V`, one per isomorphism class up to shift,
/// in deterministic order (number of gaps included, then lexicographic).
pub fn enumerate_ideals(h: &NumericalSemigroup, cap: u64) -> Result<Vec<MonomialIdeal>> {
    let c = h.conductor();
    Ok(gap_upsets(h, cap)?
        .into_iter()
        .map(|set| {
            MonomialIdeal::from_predicate(h, 0, c, |n| h.contains(n) || set.binary_search(&n).is_ok())
        })
        .collect())
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCounts {
    pub principal: usize,
    pub canonical: usize,
    pub torsion: usize,
    pub counterexample: usize,
}

impl ClassCounts {
    fn add(&mut self, class: IdealClass) {
        match class {
            IdealClass::Principal => self.principal += 1,
            IdealClass::Canonical => self.canonical += 1,
            IdealClass::Torsion => self.torsion += 1,
            IdealClass::Counterexample => self.counterexample += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.principal + self.canonical + self.torsion + self.counterexample
    }
}

/// One line of a search: the ideal and its headline invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRow {
    pub generators: Vec<i64>,
    pub mu: usize,
    pub mu_dual: usize,
    pub torsion_length: u64,
    pub class: IdealClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub semigroup: NumericalSemigroup,
    pub total: usize,
    pub counts: ClassCounts,
    pub counterexamples: Vec<IdealClassification>,
    pub factorization_hits: Vec<IdealClassification>,
    pub rows: Vec<IdealRow>,
}

pub fn search(h: &NumericalSemigroup, cap: u64) -> Result<SearchReport> {
    let ideals = enumerate_ideals(h, cap)?;
    let mut counts = ClassCounts::default();
    let mut counterexamples = Vec::new();
    let mut factorization_hits = Vec::new();
    let mut rows = Vec::with_capacity(ideals.len());
    for i in &ideals {
        let c = classify(i);
        let class = c.class();
        counts.add(class);
        rows.push(IdealRow {
            generators: c.generators.clone(),
            mu: c.mu,
            mu_dual: c.mu_dual,
            torsion_length: c.torsion_length,
            class,
        });
        if c.factors_canonical_2x2 {
            factorization_hits.push(c.clone());
        }
        if c.is_counterexample {
            counterexamples.push(c);
        }
    }
    Ok(SearchReport {
        semigroup: h.clone(),
        total: ideals.len(),
        counts,
        counterexamples,
        factorization_hits,
        rows,
    })
}

/// Per-semigroup line of a family scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub generators: Vec<i64>,
    pub multiplicity: i64,
    pub genus: usize,
    pub total: usize,
    pub counts: ClassCounts,
    pub factorization_hits: usize,
}

impl From<&SearchReport> for ScanRow {
    fn from(r: &SearchReport) -> Self {
        Self {
            generators: r.semigroup.generators().to_vec(),
            multiplicity: r.semigroup.multiplicity(),
            genus: r.semigroup.genus(),
            total: r.total,
            counts: r.counts,
            factorization_hits: r.factorization_hits.len(),
        }
    }
}

/// Searches every semigroup with multiplicity at most `mult_max` and genus at
/// most `genus_max`.
pub fn scan(mult_max: i64, genus_max: usize, cap: u64) -> Result<Vec<SearchReport>> {
    NumericalSemigroup::all_up_to_genus(genus_max, mult_max)
        .iter()
        .map(|h| search(h, cap))
        .collect()
}
