//! Length of the torsion submodule of `I ⊗ J` for monomial ideals.
//!
//! Two routes are provided:
//!
//! * [`torsion_two_generated`] uses the colon quotient `(J : I) / (R : I) J`,
//!   valid when `I` has two minimal generators.
//! * [`torsion_length`] works for any number of generators. Present `I` by
//!   the free module on its generators `t^{c_i}`. The kernel of that
//!   presentation is generated by the binomials
//!   `t^{d - c_i} e_i - t^{d - c_j} e_j`, one for every minimal exponent `d`
//!   of `(c_i + H) ∩ (c_j + H)`. Tensoring with `J` and taking degree `d`
//!   pieces, the torsion in degree `d` is `components - 1` of the graph on
//!   `{i : d - c_i ∈ J}` whose edges are the binomials of degree `d_g` with
//!   `d - d_g ∈ J`.
//!
//! The two routes grade their witnesses differently: the colon route reports
//! exponents `x` of `J : I`, the graded route reports tensor degrees
//! `d = x + c_0 + c_1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

/// A binomial relation between generators `i < j` of an ideal, living in
/// degree `degree`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyzygyGenerator {
    pub pair: (usize, usize),
    pub degree: i64,
}

/// Length and graded support of `T(I ⊗ J)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionReport {
    pub length: u64,
    pub torsionfree: bool,
    pub witness_degrees: Vec<i64>,
    /// `(degree, contribution)` for every degree with nonzero contribution.
    pub per_degree: Vec<(i64, u64)>,
}

impl TorsionReport {
    fn from_contributions(per_degree: Vec<(i64, u64)>) -> Self {
        let length = per_degree.iter().map(|&(_, k)| k).sum();
        Self {
            length,
            torsionfree: length == 0,
            witness_degrees: per_degree.iter().map(|&(d, _)| d).collect(),
            per_degree,
        }
    }
}

/// Generators of the syzygy module of `e_i ↦ t^{c_i}` over the minimal
/// generators of `I`, sorted by pair and then degree.
pub fn syzygy_generators(ideal: &MonomialIdeal) -> Vec<SyzygyGenerator> {
    let h = ideal.semigroup();
    let gens = ideal.minimal_generators();
    let mut out = Vec::new();
    for (i, &gi) in gens.iter().enumerate() {
        let left = MonomialIdeal::principal(h, gi);
        for (j, &gj) in gens.iter().enumerate().skip(i + 1) {
            let right = MonomialIdeal::principal(h, gj);
            let meet = left.intersection(&right).expect("same semigroup");
            out.extend(meet.minimal_generators().iter().map(|&degree| SyzygyGenerator {
                pair: (i, j),
                degree,
            }));
        }
    }
    out
}

/// `T(I ⊗ J)` via the graded binomial syzygies of `I`; works for any `μ(I)`.
pub fn torsion_length(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<TorsionReport> {
    if i.semigroup() != j.semigroup() {
        return Err(Error::SemigroupMismatch);
    }
    let gens = i.minimal_generators();
    if gens.len() < 2 {
        return Ok(TorsionReport::from_contributions(Vec::new()));
    }
    let syz = syzygy_generators(i);
    let start = gens[0] + j.offset();
    // past this degree every pair is joined, so the graph is connected
    let stop = syz.iter().map(|s| s.degree).max().unwrap() + j.tail_start();

    let mut parent: Vec<usize> = vec![0; gens.len()];
    let mut per_degree = Vec::new();
    for d in start..stop {
        let mut support = 0usize;
        for (k, &c) in gens.iter().enumerate() {
            parent[k] = k;
            if j.contains(d - c) {
                support += 1;
            } else {
                parent[k] = usize::MAX;
            }
        }
        if support < 2 {
            continue;
        }
        let mut components = support;
        for s in &syz {
            if j.contains(d - s.degree) && union(&mut parent, s.pair.0, s.pair.1) {
                components -= 1;
                if components == 1 {
                    break;
                }
            }
        }
        if components > 1 {
            per_degree.push((d, (components - 1) as u64));
        }
    }
    Ok(TorsionReport::from_contributions(per_degree))
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) -> bool {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra == rb {
        false
    } else {
        parent[ra] = rb;
        true
    }
}

/// `T(I ⊗ J) ≅ (J : I) / (R : I) J` for two-generated `I`. Witnesses are the
/// exponents of `J : I` missing from `(R : I) J`.
pub fn torsion_two_generated(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<TorsionReport> {
    if i.mu() != 2 {
        return Err(Error::NotTwoGenerated(i.mu()));
    }
    let r = MonomialIdeal::ring(i.semigroup());
    let top = j.colon(i)?;
    let bottom = r.colon(i)?.product(j)?;
    let missing = top.quotient_exponents(&bottom)?;
    Ok(TorsionReport::from_contributions(
        missing.into_iter().map(|x| (x, 1)).collect(),
    ))
}

/// `T(I ⊗ Hom(I, K_R))`.
pub fn torsion_self(i: &MonomialIdeal) -> TorsionReport {
    torsion_length(i, &i.dual()).expect("dual shares the semigroup")
}

/// Length of `(R : I^2) / (R : I)^2`, which measures `T(I ⊗ (R : I))` for
/// two-generated `I`. A principal ideal gives 0.
pub fn inverse_square_defect(i: &MonomialIdeal) -> Result<TorsionReport> {
    let mu = i.mu();
    if mu > 2 {
        return Err(Error::NotTwoGenerated(mu));
    }
    let r = MonomialIdeal::ring(i.semigroup());
    let inverse = r.colon(i)?;
    let top = r.colon(&i.product(i)?)?;
    let bottom = inverse.product(&inverse)?;
    let missing = top.quotient_exponents(&bottom)?;
    Ok(TorsionReport::from_contributions(
        missing.into_iter().map(|x| (x, 1)).collect(),
    ))
}
