//! Output in the three supported formats. JSON follows the library's serde
//! layout; CSV joins list-valued cells with `;` so no quoting is needed.

use std::fmt::Write as _;

use numsemi::conjecture::{IdealClassification, ScanRow, SearchReport};
use numsemi::ideal::{monomial, EndomorphismRing, IdealRecord};
use numsemi::semigroup::SemigroupRecord;
use numsemi::{MonomialIdeal, NumericalSemigroup, TorsionReport};
use serde::Serialize;

use crate::Format;

fn pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

pub trait Render {
    fn json(&self) -> String;
    fn table(&self) -> String;
    fn csv(&self) -> String;

    fn emit(&self, format: Format) {
        let text = match format {
            Format::Json => self.json(),
            Format::Table => self.table(),
            Format::Csv => self.csv(),
        };
        println!("{}", text.trim_end());
    }
}

fn list(xs: &[i64]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";")
}

fn angle(xs: &[i64]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("<{}>", parts.join(","))
}

fn monomials(xs: &[i64]) -> String {
    let parts: Vec<String> = xs.iter().map(|&x| monomial(x)).collect();
    format!("({})", parts.join(", "))
}

fn pairs(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<width$}  {v}");
    }
    out
}

#[derive(Serialize)]
pub struct InfoReport {
    #[serde(flatten)]
    semigroup: SemigroupRecord,
    embedding_dimension: usize,
    pseudo_frobenius: Vec<i64>,
    /// Per-residue gap maxima; empty for the naturals.
    alpha_set: Vec<i64>,
    b: Option<i64>,
    #[serde(rename = "type")]
    ring_type: usize,
    gorenstein: bool,
    maximal_embedding_dimension: bool,
    socle_hypothesis: Option<bool>,
}

impl InfoReport {
    pub fn new(h: &NumericalSemigroup) -> Self {
        let profile = h.alpha_profile().ok();
        let ring_type = MonomialIdeal::canonical(h).mu();
        Self {
            semigroup: h.record(),
            embedding_dimension: h.embedding_dimension(),
            pseudo_frobenius: h.pseudo_frobenius_numbers(),
            alpha_set: profile.as_ref().map(|p| p.values.clone()).unwrap_or_default(),
            b: profile.as_ref().map(|p| p.b),
            ring_type,
            gorenstein: ring_type == 1,
            maximal_embedding_dimension: h.ring_invariants().maximal_embedding_dimension,
            socle_hypothesis: h.min_alpha_in_socle().ok(),
        }
    }
}

fn optional<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

impl Render for InfoReport {
    fn json(&self) -> String {
        pretty(self)
    }

    fn table(&self) -> String {
        let s = &self.semigroup;
        pairs(&[
            ("generators", angle(&s.generators)),
            ("multiplicity", s.multiplicity.to_string()),
            ("embedding dimension", self.embedding_dimension.to_string()),
            ("frobenius", s.frobenius.to_string()),
            ("conductor", s.conductor.to_string()),
            ("genus", s.genus.to_string()),
            ("gaps", format!("{:?}", s.gaps)),
            ("pseudo-frobenius", format!("{:?}", self.pseudo_frobenius)),
            ("alpha set", format!("{:?}", self.alpha_set)),
            ("b", optional(&self.b)),
            ("type", self.ring_type.to_string()),
            ("gorenstein", self.gorenstein.to_string()),
            ("maximal embedding dim", self.maximal_embedding_dimension.to_string()),
            ("t^b in R:m", optional(&self.socle_hypothesis)),
        ])
    }

    fn csv(&self) -> String {
        let s = &self.semigroup;
        format!(
            "generators,multiplicity,embedding_dimension,frobenius,conductor,genus,gaps,pseudo_frobenius,alpha_set,b,type,gorenstein,maximal_embedding_dimension,socle_hypothesis\n\
             {},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            list(&s.generators),
            s.multiplicity,
            self.embedding_dimension,
            s.frobenius,
            s.conductor,
            s.genus,
            list(&s.gaps),
            list(&self.pseudo_frobenius),
            list(&self.alpha_set),
            self.b.map(|b| b.to_string()).unwrap_or_default(),
            self.ring_type,
            self.gorenstein,
            self.maximal_embedding_dimension,
            self.socle_hypothesis.map(|b| b.to_string()).unwrap_or_default(),
        )
    }
}

const IDEAL_HEADER: &str = "offset,generators,mu,tail_start";

fn ideal_row(r: &IdealRecord) -> String {
    format!("{},{},{},{}", r.offset, list(&r.generators), r.mu, r.tail_start)
}

impl Render for MonomialIdeal {
    fn json(&self) -> String {
        pretty(&self.record())
    }

    fn table(&self) -> String {
        let r = self.record();
        pairs(&[
            ("ideal", self.to_string()),
            ("semigroup", self.semigroup().to_string()),
            ("mu", r.mu.to_string()),
            ("offset", r.offset.to_string()),
            ("tail start", r.tail_start.to_string()),
        ])
    }

    fn csv(&self) -> String {
        format!("{IDEAL_HEADER}\n{}\n", ideal_row(&self.record()))
    }
}

#[derive(Serialize)]
pub struct EndRingReport {
    semigroup: SemigroupRecord,
    ideal: IdealRecord,
    canonical: IdealRecord,
}

impl From<EndomorphismRing> for EndRingReport {
    fn from(b: EndomorphismRing) -> Self {
        Self {
            semigroup: b.semigroup.record(),
            ideal: b.ideal.record(),
            canonical: b.canonical_over_r.record(),
        }
    }
}

impl Render for EndRingReport {
    fn json(&self) -> String {
        pretty(self)
    }

    fn table(&self) -> String {
        pairs(&[
            ("end ring", angle(&self.semigroup.generators)),
            ("frobenius", self.semigroup.frobenius.to_string()),
            ("genus", self.semigroup.genus.to_string()),
            ("ideal", monomials(&self.ideal.generators)),
            ("canonical", monomials(&self.canonical.generators)),
        ])
    }

    fn csv(&self) -> String {
        format!(
            "semigroup,frobenius,genus,ideal,canonical\n{},{},{},{},{}\n",
            list(&self.semigroup.generators),
            self.semigroup.frobenius,
            self.semigroup.genus,
            list(&self.ideal.generators),
            list(&self.canonical.generators),
        )
    }
}

impl Render for TorsionReport {
    fn json(&self) -> String {
        pretty(self)
    }

    fn table(&self) -> String {
        let mut out = pairs(&[
            ("length", self.length.to_string()),
            ("torsionfree", self.torsionfree.to_string()),
            ("witness degrees", format!("{:?}", self.witness_degrees)),
        ]);
        if self.length == 1 {
            out.push_str("torsion is R/m\n");
        }
        out
    }

    fn csv(&self) -> String {
        let mut out = String::from("degree,contribution\n");
        for (d, k) in &self.per_degree {
            let _ = writeln!(out, "{d},{k}");
        }
        out
    }
}

const CLASSIFY_HEADER: &str = "generators,mu,mu_dual,mu_canonical,principal,canonical,factors_canonical,factors_canonical_2x2,torsion_length,torsionfree,counterexample,gorenstein_counterexample,end_ring";

fn classify_row(c: &IdealClassification) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{}",
        list(&c.generators),
        c.mu,
        c.mu_dual,
        c.mu_canonical,
        c.is_principal,
        c.is_canonical,
        c.factors_canonical,
        c.factors_canonical_2x2,
        c.torsion_length,
        c.torsionfree,
        c.is_counterexample,
        c.gorenstein_counterexample.map(|b| b.to_string()).unwrap_or_default(),
        list(c.end_semigroup.generators()),
    )
}

impl Render for IdealClassification {
    fn json(&self) -> String {
        pretty(self)
    }

    fn table(&self) -> String {
        pairs(&[
            ("ideal", monomials(&self.generators)),
            ("class", self.class().as_str().to_string()),
            ("mu", self.mu.to_string()),
            ("mu of dual", self.mu_dual.to_string()),
            ("mu of K_R", self.mu_canonical.to_string()),
            ("I·I^∨ = K_R", self.factors_canonical.to_string()),
            ("2x2 factorization", self.factors_canonical_2x2.to_string()),
            ("torsion length", self.torsion_length.to_string()),
            ("torsionfree", self.torsionfree.to_string()),
            ("counterexample", self.is_counterexample.to_string()),
            ("R-dual counterexample", optional(&self.gorenstein_counterexample)),
            ("end ring", self.end_semigroup.to_string()),
        ])
    }

    fn csv(&self) -> String {
        format!("{CLASSIFY_HEADER}\n{}\n", classify_row(self))
    }
}

impl Render for SearchReport {
    fn json(&self) -> String {
        pretty(self)
    }

    fn table(&self) -> String {
        let c = &self.counts;
        let mut out = pairs(&[
            ("semigroup", self.semigroup.to_string()),
            ("ideals", self.total.to_string()),
            ("principal", c.principal.to_string()),
            ("canonical", c.canonical.to_string()),
            ("torsion", c.torsion.to_string()),
            ("counterexamples", c.counterexample.to_string()),
            ("2x2 factorizations", self.factorization_hits.len().to_string()),
        ]);
        for hit in &self.factorization_hits {
            let _ = writeln!(out, "  factorization {} torsion {}", monomials(&hit.generators), hit.torsion_length);
        }
        for cex in &self.counterexamples {
            let _ = writeln!(out, "  counterexample {}", monomials(&cex.generators));
        }
        out
    }

    fn csv(&self) -> String {
        let mut out = String::from("generators,mu,mu_dual,torsion_length,class\n");
        for r in &self.rows {
            let _ = writeln!(out, "{},{},{},{},{}", list(&r.generators), r.mu, r.mu_dual, r.torsion_length, r.class.as_str());
        }
        out
    }
}

#[derive(Serialize)]
pub struct ScanReport {
    pub mult_max: i64,
    pub genus_max: usize,
    pub rows: Vec<ScanRow>,
}

impl Render for ScanReport {
    fn json(&self) -> String {
        pretty(self)
    }

    fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<28} {:>5} {:>7} {:>8} {:>6}", "semigroup", "genus", "ideals", "torsion", "cex");
        let (mut ideals, mut cex, mut hits) = (0, 0, 0);
        for r in &self.rows {
            let gens = angle(&r.generators);
            let _ = writeln!(
                out,
                "{gens:<28} {:>5} {:>7} {:>8} {:>6}",
                r.genus, r.total, r.counts.torsion, r.counts.counterexample
            );
            ideals += r.total;
            cex += r.counts.counterexample;
            hits += r.factorization_hits;
        }
        let _ = writeln!(
            out,
            "{} semigroups with e <= {} and genus <= {}: {ideals} ideals, {cex} counterexamples, {hits} 2x2 factorizations",
            self.rows.len(),
            self.mult_max,
            self.genus_max
        );
        out
    }

    fn csv(&self) -> String {
        let mut out = String::from("generators,multiplicity,genus,ideals,principal,canonical,torsion,counterexample,factorization_hits\n");
        for r in &self.rows {
            let c = &r.counts;
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                list(&r.generators),
                r.multiplicity,
                r.genus,
                r.total,
                c.principal,
                c.canonical,
                c.torsion,
                c.counterexample,
                r.factorization_hits
            );
        }
        out
    }
}
