//! Browser bindings for the `numsemi` demo page. Every entry point takes plain
//! strings and returns a JSON document, or an error message for the page to
//! show.

use numsemi::conjecture::{classify, search, IdealClassification};
use numsemi::ideal::IdealRecord;
use numsemi::semigroup::SemigroupRecord;
use numsemi::torsion::torsion_self;
use numsemi::{MonomialIdeal, NumericalSemigroup, TorsionReport};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest genus the page accepts; keeps searches interactive.
pub const MAX_GENUS: usize = 40;
const SEARCH_CAP: u64 = 1 << 16;
const MAX_LISTED: usize = 50;

fn parse_semigroup(gens: &str) -> Result<NumericalSemigroup, String> {
    let h: NumericalSemigroup = gens.parse().map_err(|e: numsemi::Error| e.to_string())?;
    if h.genus() > MAX_GENUS {
        return Err(format!("genus {} is above the demo limit of {MAX_GENUS}", h.genus()));
    }
    Ok(h)
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

/// Grid rows cover `0..rows * e`, enough to show the conductor and a full row
/// beyond it.
fn grid_rows(h: &NumericalSemigroup, reach: i64) -> i64 {
    let e = h.multiplicity();
    (reach.max(h.conductor()) + e) / e + 1
}

#[derive(Serialize)]
struct SemigroupView {
    semigroup: SemigroupRecord,
    embedding_dimension: usize,
    pseudo_frobenius: Vec<i64>,
    apery: Vec<i64>,
    ring_type: usize,
    columns: i64,
    rows: i64,
    members: Vec<bool>,
}

/// Membership grid with `e` columns, so residue classes line up vertically,
/// plus the headline invariants.
#[wasm_bindgen]
pub fn semigroup_view(gens: &str) -> Result<String, String> {
    let h = parse_semigroup(gens)?;
    let e = h.multiplicity();
    let rows = grid_rows(&h, 0);
    to_json(&SemigroupView {
        semigroup: h.record(),
        embedding_dimension: h.embedding_dimension(),
        pseudo_frobenius: h.pseudo_frobenius_numbers(),
        apery: h.apery_set().to_vec(),
        ring_type: MonomialIdeal::canonical(&h).mu(),
        columns: e,
        rows,
        members: (0..rows * e).map(|n| h.contains(n)).collect(),
    })
}

#[derive(Serialize)]
struct Layer {
    name: &'static str,
    ideal: IdealRecord,
    members: Vec<bool>,
}

#[derive(Serialize)]
struct IdealView {
    columns: i64,
    rows: i64,
    layers: Vec<Layer>,
    end_ring: Vec<i64>,
    torsion: TorsionReport,
    classification: IdealClassification,
}

/// The normalized ideal `I` with `K_R : I`, `R : I`, `I·(K_R : I)` and `K_R`,
/// each drawn over the same grid, together with the torsion of `I ⊗ I^∨`.
#[wasm_bindgen]
pub fn ideal_view(gens: &str, exps: &str) -> Result<String, String> {
    let h = parse_semigroup(gens)?;
    let i = MonomialIdeal::parse(&h, exps).map_err(|e| e.to_string())?.normalize();
    let r = MonomialIdeal::ring(&h);
    let k = MonomialIdeal::canonical(&h);
    let dual = i.dual();
    let inverse = r.colon(&i).map_err(|e| e.to_string())?;
    let product = i.product(&dual).map_err(|e| e.to_string())?;

    let named = [
        ("I", i.clone()),
        ("K_R : I", dual),
        ("R : I", inverse),
        ("I (K_R : I)", product),
        ("K_R", k),
    ];
    let reach = named.iter().map(|(_, x)| x.tail_start()).max().unwrap_or(0);
    let e = h.multiplicity();
    let rows = grid_rows(&h, reach);
    let layers = named
        .into_iter()
        .map(|(name, x)| Layer {
            name,
            ideal: x.record(),
            members: (0..rows * e).map(|n| x.contains(n)).collect(),
        })
        .collect();
    to_json(&IdealView {
        columns: e,
        rows,
        layers,
        end_ring: i.end_ring().semigroup.generators().to_vec(),
        torsion: torsion_self(&i),
        classification: classify(&i),
    })
}

#[derive(Serialize)]
struct SearchView {
    semigroup: SemigroupRecord,
    total: usize,
    principal: usize,
    canonical: usize,
    torsion: usize,
    counterexample: usize,
    factorizations: Vec<Vec<i64>>,
    counterexamples: Vec<Vec<i64>>,
    /// Histogram of torsion lengths over all ideals, indexed by length.
    torsion_histogram: Vec<usize>,
}

/// Classifies every monomial ideal of the semigroup.
#[wasm_bindgen]
pub fn search_summary(gens: &str) -> Result<String, String> {
    let h = parse_semigroup(gens)?;
    let rep = search(&h, SEARCH_CAP).map_err(|e| e.to_string())?;
    let mut torsion_histogram = Vec::new();
    for row in &rep.rows {
        let len = row.torsion_length as usize;
        if torsion_histogram.len() <= len {
            torsion_histogram.resize(len + 1, 0);
        }
        torsion_histogram[len] += 1;
    }
    let listed = |xs: &[IdealClassification]| -> Vec<Vec<i64>> {
        xs.iter().take(MAX_LISTED).map(|c| c.generators.clone()).collect()
    };
    to_json(&SearchView {
        semigroup: h.record(),
        total: rep.total,
        principal: rep.counts.principal,
        canonical: rep.counts.canonical,
        torsion: rep.counts.torsion,
        counterexample: rep.counts.counterexample,
        factorizations: listed(&rep.factorization_hits),
        counterexamples: listed(&rep.counterexamples),
        torsion_histogram,
    })
}
