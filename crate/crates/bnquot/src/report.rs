//! Serializable views of engine results.
//!
//! Field order in every struct is the JSON key order; maps are emitted in a
//! fixed order so identical inputs give identical bytes.

use bnquot_core::{
    lab::{stratum_dimension, HomForm, KernelMatrix, SplittingType, SurveyTable},
    ledger::Discrepancy,
    porteous::ClassRecord,
    FormalBundle, PushforwardResult, RingElement, Scenario,
};
use serde::{ser::SerializeMap, Serialize, Serializer};

use crate::Failure;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub gen: String,
    pub exp: u16,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub coeff: String,
    pub monomial: Vec<Factor>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Element {
    pub text: String,
    pub terms: Vec<Term>,
}

impl From<&RingElement> for Element {
    fn from(z: &RingElement) -> Self {
        let ring = z.ring();
        let terms = z
            .terms()
            .map(|(m, c)| Term {
                coeff: c.to_string(),
                monomial: m
                    .factors()
                    .map(|(i, exp)| Factor {
                        gen: ring.generators()[i].name().to_string(),
                        exp,
                    })
                    .collect(),
            })
            .collect();
        Element {
            text: z.to_string(),
            terms,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bundle {
    pub rank: i64,
    #[serde(rename = "virtual")]
    pub is_virtual: bool,
    pub chern: Vec<Element>,
}

impl From<&FormalBundle> for Bundle {
    fn from(b: &FormalBundle) -> Self {
        Bundle {
            rank: b.rank(),
            is_virtual: b.is_virtual(),
            chern: b.chern_classes().iter().map(Element::from).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pushforward {
    pub bundle: Bundle,
    pub rank_formula_check: i64,
    pub discrepancy_notes: Vec<String>,
}

impl From<&PushforwardResult> for Pushforward {
    fn from(p: &PushforwardResult) -> Self {
        Pushforward {
            bundle: Bundle::from(&p.bundle),
            rank_formula_check: p.rank_formula_check,
            discrepancy_notes: p.discrepancy_notes.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LedgerEntry {
    pub id: String,
    pub subject: String,
    pub published: String,
    pub engine: String,
    pub difference: Option<String>,
    pub note: String,
}

impl From<&Discrepancy> for LedgerEntry {
    fn from(d: &Discrepancy) -> Self {
        LedgerEntry {
            id: d.id.clone(),
            subject: d.subject.clone(),
            published: d.published.clone(),
            engine: d.engine.clone(),
            difference: d.difference.clone(),
            note: d.note.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub genus: u32,
    pub degree: i64,
    pub segre: i64,
    pub a: i64,
    pub truncation: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Codim {
    pub expected: i64,
    pub expanded: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ranks {
    pub fiber_h0_dim: i64,
    pub source_rank: i64,
    pub target_rank: i64,
    pub pushforward: Option<i64>,
    pub large_d_ok: bool,
    pub euler_characteristic: i64,
    pub h0_threshold: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Existence {
    pub status: &'static str,
    pub rule: Option<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Class {
    pub codimension: u32,
    pub porteous: Element,
    pub minus_chern: Element,
    pub agree: bool,
    pub difference: Element,
    pub discrepancies: Vec<LedgerEntry>,
}

impl Class {
    fn new(record: &ClassRecord, discrepancies: &[Discrepancy]) -> Self {
        Class {
            codimension: record.codimension,
            porteous: Element::from(&record.porteous),
            minus_chern: Element::from(&record.minus_chern),
            agree: record.agree,
            difference: Element::from(&record.difference),
            discrepancies: discrepancies.iter().map(LedgerEntry::from).collect(),
        }
    }
}

/// Report of `class --genus g --degree d --segre s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumReport {
    pub params: Params,
    pub codim: Codim,
    pub ranks: Ranks,
    pub existence: Existence,
    pub pushforward: Option<Pushforward>,
    pub class: Option<Class>,
    pub note: Option<String>,
}

impl StratumReport {
    /// Runs the class pipeline when the expected codimension is positive; a
    /// non-positive codimension yields the arithmetic part only.
    pub fn build(sc: &Scenario) -> Result<Self, Failure> {
        let dims = sc.determinantal_dims();
        let expected = sc.expected_codimension();
        let existence = sc.existence();
        let mut report = StratumReport {
            params: Params {
                genus: sc.genus(),
                degree: sc.degree(),
                segre: sc.segre(),
                a: sc.a(),
                truncation: sc.truncation(),
            },
            codim: Codim {
                expected,
                expanded: sc.expanded_codimension(),
            },
            ranks: Ranks {
                fiber_h0_dim: dims.fiber_h0_dim,
                source_rank: dims.source_rank,
                target_rank: dims.target_rank,
                pushforward: None,
                large_d_ok: dims.large_d_ok,
                euler_characteristic: sc.euler_characteristic(),
                h0_threshold: sc.h0_threshold(),
            },
            existence: Existence {
                status: existence.label(),
                rule: existence.rule().map(|r| r.id()),
            },
            pushforward: None,
            class: None,
            note: None,
        };
        if expected <= 0 {
            report.note = Some(format!(
                "codimension 2g-s-1 = {expected} is not positive; there is no Porteous class to compute"
            ));
            return Ok(report);
        }
        let full = sc.brill_noether_class()?;
        report.ranks.pushforward = Some(full.pushforward_rank);
        report.pushforward = Some(Pushforward::from(&full.pushforward));
        report.class = Some(Class::new(&full.class, &full.discrepancies));
        Ok(report)
    }
}

/// Survey table; `counts` keys are `"(a,b)"` in splitting-type order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Survey {
    pub d: u32,
    #[serde(skip)]
    pub seed: u64,
    pub trials: u64,
    pub counts: Counts,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counts(pub Vec<(SplittingType, u64)>);

impl Serialize for Counts {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (split, n) in &self.0 {
            map.serialize_entry(&split.to_string(), n)?;
        }
        map.end()
    }
}

impl Survey {
    pub fn new(table: &SurveyTable, seed: u64) -> Self {
        Survey {
            d: table.degree,
            seed,
            trials: table.trials,
            counts: Counts(table.counts.iter().map(|(k, v)| (*k, *v)).collect()),
        }
    }
}

/// A matrix of binary forms: each entry lists the coefficients of
/// `y^e, x y^{e-1}, ..., x^e` as `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormMatrix {
    pub column_degrees: [u32; 2],
    pub entries: Vec<Vec<Vec<String>>>,
}

impl From<&KernelMatrix> for FormMatrix {
    fn from(k: &KernelMatrix) -> Self {
        let entries = (0..4)
            .map(|i| (0..2).map(|j| form_coeffs(k.entry(i, j))).collect())
            .collect();
        FormMatrix {
            column_degrees: k.column_degrees(),
            entries,
        }
    }
}

fn form_coeffs(f: &HomForm) -> Vec<String> {
    f.coeffs().iter().map(ToString::to_string).collect()
}

/// Report of `lab sample`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sample {
    pub d: u32,
    pub seed: u64,
    pub kernel: FormMatrix,
    pub splitting: String,
    pub segre_p1: i64,
    pub twisted_dual_sections: Vec<usize>,
    pub h0: usize,
    pub euler_check: bool,
}

impl Sample {
    pub fn new(k: &KernelMatrix, seed: u64) -> Result<Self, Failure> {
        let split = k.splitting_type()?;
        let d = k.degree();
        let twisted_dual_sections = (0..=i64::from(d))
            .map(|j| k.twisted_dual_sections(j))
            .collect::<Result<_, _>>()?;
        Ok(Sample {
            d,
            seed,
            kernel: FormMatrix::from(k),
            splitting: split.to_string(),
            segre_p1: split.segre(),
            twisted_dual_sections,
            h0: k.h0_twist(0)?,
            euler_check: k.euler_check()?,
        })
    }
}

/// Report of `lab dimension`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dimension {
    pub d: u32,
    pub a: u32,
    pub formula: i64,
    pub lab: i64,
    pub agree: bool,
}

impl Dimension {
    pub fn compute(d: u32, a: u32) -> Result<Self, Failure> {
        let s = stratum_dimension(d, a)?;
        Ok(Dimension {
            d,
            a,
            formula: s.formula,
            lab: s.lab,
            agree: s.agree,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use bnquot_core::scenario::{alpha, scenario_ring};

    #[test]
    fn element_json_shape() {
        let ring = scenario_ring(1, 6, Default::default()).unwrap();
        let a1 = alpha(&ring, 1);
        let e = Element::from(&(&a1 * &a1));
        assert_eq!(e.text, "-2*s1_1*s1_2*eta");
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(
            json,
            r#"{"text":"-2*s1_1*s1_2*eta","terms":[{"coeff":"-2","monomial":[{"gen":"s1_1","exp":1},{"gen":"s1_2","exp":1},{"gen":"eta","exp":1}]}]}"#
        );
    }

    #[test]
    fn survey_counts_keep_splitting_order() {
        let table = SurveyTable::from_results(
            12,
            [
                SplittingType { a: 2, b: 10 },
                SplittingType { a: 10, b: 2 },
                SplittingType { a: 6, b: 6 },
            ],
        );
        let json = serde_json::to_string(&Survey::new(&table, 1)).unwrap();
        assert_eq!(
            json,
            r#"{"d":12,"trials":3,"counts":{"(2,10)":1,"(6,6)":1,"(10,2)":1}}"#
        );
    }
}
