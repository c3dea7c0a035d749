//! JSON documents for artifacts, reports, traces and solution lists.
//!
//! Integers and rationals are always decimal strings (`"-3/2"`, `"7"`),
//! polynomials are arrays of coefficient strings in ascending degree.
//! Artifact files carry `"schema": "v1"`.

use power_forge_core::oracles::{Equation, FermatVariant, SolutionList};
use power_forge_core::verify::{Hit, HitViolation};
use power_forge_core::{
    parse_rational, ConstructionArtifacts, IntPoly, Integer, IntegerConstruction, PipelineRecord,
    PowerDecomposition, PowerSetInput, Rational, SProvenance, SelectionPolicy, TraceRecord,
    VerificationReport, Verdict,
};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const SCHEMA_VERSION: &str = "v1";

fn poly_doc(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

fn parse_int(s: &str) -> Result<Integer, CliError> {
    s.parse()
        .map_err(|_| CliError::Input(format!("not an integer: {s:?}")))
}

fn parse_q(s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| CliError::Input(e.to_string()))
}

fn parse_poly(coeffs: &[String]) -> Result<IntPoly, CliError> {
    let parsed = coeffs.iter().map(|c| parse_int(c)).collect::<Result<Vec<_>, _>>()?;
    let poly = IntPoly::from_coeffs(parsed);
    if poly.coeffs().len() != coeffs.len() {
        return Err(CliError::Input("polynomial has a zero leading coefficient".into()));
    }
    Ok(poly)
}

fn strings(qs: &[Rational]) -> Vec<String> {
    qs.iter().map(ToString::to_string).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerDoc {
    pub base: String,
    pub exponent: u32,
}

impl From<&PowerDecomposition> for PowerDoc {
    fn from(d: &PowerDecomposition) -> Self {
        PowerDoc {
            base: d.base.to_string(),
            exponent: d.exponent,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolicyDoc {
    pub t_max: u32,
    pub kappa_cap: u32,
    pub max_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DEstimateDoc {
    pub gamma: String,
    pub d_hat: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineDoc {
    /// `[a_i, c_i]`.
    pub pairs: Vec<[String; 2]>,
    pub k: u64,
    #[serde(rename = "F")]
    pub big_f: Vec<String>,
    pub deltas: Vec<String>,
    pub d_estimates: Vec<DEstimateDoc>,
    pub kappa: u32,
    pub s: u64,
    pub g: Vec<String>,
    pub h: Vec<String>,
    pub s_provenance: ProvenanceDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceDoc {
    pub method: String,
    pub t_max: Option<u32>,
    pub caveat: String,
}

impl From<SProvenance> for ProvenanceDoc {
    fn from(p: SProvenance) -> Self {
        let (method, t_max) = match p {
            SProvenance::EmptySet => ("empty_set", None),
            SProvenance::EmpiricalScan { t_max } => ("empirical_scan", Some(t_max)),
        };
        ProvenanceDoc {
            method: method.into(),
            t_max,
            caveat: p.caveat().into(),
        }
    }
}

impl ProvenanceDoc {
    fn parse(&self) -> Result<SProvenance, CliError> {
        match (self.method.as_str(), self.t_max) {
            ("empty_set", _) => Ok(SProvenance::EmptySet),
            ("empirical_scan", Some(t_max)) => Ok(SProvenance::EmpiricalScan { t_max }),
            _ => Err(CliError::Input(format!("unknown s provenance {:?}", self.method))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryDoc {
    pub degree: Option<usize>,
    pub max_coeff_bits: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalArtifactDoc {
    pub schema: String,
    pub set: Vec<String>,
    pub policy: PolicyDoc,
    pub f_s: Vec<String>,
    pub pipeline: Option<PipelineDoc>,
    pub summary: SummaryDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegerArtifactDoc {
    pub schema: String,
    pub set: Vec<String>,
    pub g: Vec<String>,
    pub h: Vec<String>,
    pub f_s: Vec<String>,
    pub summary: SummaryDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "lowercase")]
pub enum ArtifactDoc {
    Rational(RationalArtifactDoc),
    Integer(IntegerArtifactDoc),
}

/// A parsed artifact file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Artifact {
    Rational(ConstructionArtifacts),
    Integer(IntegerConstruction),
}

impl Artifact {
    pub fn to_doc(&self) -> ArtifactDoc {
        match self {
            Artifact::Rational(art) => ArtifactDoc::Rational(rational_doc(art)),
            Artifact::Integer(c) => ArtifactDoc::Integer(IntegerArtifactDoc {
                schema: SCHEMA_VERSION.into(),
                set: strings(&c.elements),
                g: poly_doc(&c.g),
                h: poly_doc(&c.h),
                f_s: poly_doc(&c.f),
                summary: summary(&c.f),
            }),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("artifact serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let doc: ArtifactDoc =
            serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed artifact: {e}")))?;
        Self::from_doc(&doc)
    }

    pub fn from_doc(doc: &ArtifactDoc) -> Result<Self, CliError> {
        let schema = match doc {
            ArtifactDoc::Rational(d) => &d.schema,
            ArtifactDoc::Integer(d) => &d.schema,
        };
        if schema != SCHEMA_VERSION {
            return Err(CliError::Input(format!("unsupported schema {schema:?}")));
        }
        match doc {
            ArtifactDoc::Rational(d) => parse_rational_doc(d).map(Artifact::Rational),
            ArtifactDoc::Integer(d) => {
                let g = parse_poly(&d.g)?;
                let h = parse_poly(&d.h)?;
                let f = parse_poly(&d.f_s)?;
                if g.mul(&h) != f {
                    return Err(CliError::Input("artifact f_s differs from g*h".into()));
                }
                Ok(Artifact::Integer(IntegerConstruction {
                    elements: d.set.iter().map(|s| parse_q(s)).collect::<Result<_, _>>()?,
                    g,
                    h,
                    f,
                }))
            }
        }
    }

    /// The input set as recorded in the artifact, revalidated.
    pub fn input_set(&self) -> Result<PowerSetInput, CliError> {
        match self {
            Artifact::Rational(a) => Ok(PowerSetInput::rational(a.elements.clone())?),
            Artifact::Integer(c) => Ok(PowerSetInput::integer(c.elements.clone())?),
        }
    }
}

fn summary(f: &IntPoly) -> SummaryDoc {
    SummaryDoc {
        degree: f.degree(),
        max_coeff_bits: f.max_coeff_bits(),
    }
}

fn rational_doc(art: &ConstructionArtifacts) -> RationalArtifactDoc {
    RationalArtifactDoc {
        schema: SCHEMA_VERSION.into(),
        set: strings(&art.elements),
        policy: PolicyDoc {
            t_max: art.policy.t_max,
            kappa_cap: art.policy.kappa_cap,
            max_degree: art.policy.max_degree,
        },
        f_s: poly_doc(&art.f_s),
        pipeline: art.pipeline.as_ref().map(|p| PipelineDoc {
            pairs: p
                .pairs
                .iter()
                .map(|(a, c)| [a.to_string(), c.to_string()])
                .collect(),
            k: p.k,
            big_f: poly_doc(&p.big_f),
            deltas: strings(&p.deltas),
            d_estimates: p
                .d_estimates
                .iter()
                .map(|(g, d)| DEstimateDoc {
                    gamma: g.to_string(),
                    d_hat: *d,
                })
                .collect(),
            kappa: p.kappa,
            s: p.s,
            g: poly_doc(&p.g),
            h: poly_doc(&p.h),
            s_provenance: p.provenance.into(),
        }),
        summary: summary(&art.f_s),
    }
}

fn parse_rational_doc(d: &RationalArtifactDoc) -> Result<ConstructionArtifacts, CliError> {
    let pipeline = match &d.pipeline {
        None => None,
        Some(p) => {
            let g = parse_poly(&p.g)?;
            let h = parse_poly(&p.h)?;
            Some(PipelineRecord {
                pairs: p
                    .pairs
                    .iter()
                    .map(|[a, c]| Ok((parse_int(a)?, parse_int(c)?)))
                    .collect::<Result<_, CliError>>()?,
                k: p.k,
                big_f: parse_poly(&p.big_f)?,
                deltas: p.deltas.iter().map(|s| parse_q(s)).collect::<Result<_, _>>()?,
                d_estimates: p
                    .d_estimates
                    .iter()
                    .map(|e| Ok((parse_q(&e.gamma)?, e.d_hat)))
                    .collect::<Result<_, CliError>>()?,
                kappa: p.kappa,
                s: p.s,
                g,
                h,
                provenance: p.s_provenance.parse()?,
            })
        }
    };
    let f_s = parse_poly(&d.f_s)?;
    if let Some(p) = &pipeline {
        if p.g.mul(&p.h) != f_s {
            return Err(CliError::Input("artifact f_s differs from g*h".into()));
        }
        if p.k == 0 || p.k % 4 != 0 {
            return Err(CliError::Input(format!("artifact k = {} is not a multiple of 4", p.k)));
        }
    }
    Ok(ConstructionArtifacts {
        elements: d.set.iter().map(|s| parse_q(s)).collect::<Result<_, _>>()?,
        policy: SelectionPolicy {
            t_max: d.policy.t_max,
            kappa_cap: d.policy.kappa_cap,
            max_degree: d.policy.max_degree,
        },
        f_s,
        pipeline,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HitDoc {
    pub x: String,
    pub value: String,
    pub witness: PowerDoc,
}

impl From<&Hit> for HitDoc {
    fn from(h: &Hit) -> Self {
        HitDoc {
            x: h.x.to_string(),
            value: h.value.to_string(),
            witness: (&h.witness).into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationDoc {
    pub x: String,
    pub reason: String,
}

impl From<&HitViolation> for ViolationDoc {
    fn from(v: &HitViolation) -> Self {
        ViolationDoc {
            x: v.x.to_string(),
            reason: v.reason.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub bound: u64,
    pub points_scanned: u64,
    pub verdict: String,
    pub hits: Vec<HitDoc>,
    pub missing: Vec<String>,
    pub extras: Vec<HitDoc>,
    pub invariant_violations: Vec<ViolationDoc>,
}

impl From<&VerificationReport> for ReportDoc {
    fn from(r: &VerificationReport) -> Self {
        ReportDoc {
            bound: r.bound,
            points_scanned: r.points_scanned,
            verdict: match r.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
            }
            .into(),
            hits: r.hits.iter().map(Into::into).collect(),
            missing: strings(&r.missing),
            extras: r.extras.iter().map(Into::into).collect(),
            invariant_violations: r.invariant_violations.iter().map(Into::into).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDoc {
    pub x: String,
    pub k: u64,
    pub u: String,
    pub v: String,
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    pub w: String,
    pub power_sum: String,
    pub lemma_2pow_ok: bool,
    pub lemma_not2_ok: bool,
    pub gcd_bw_ok: bool,
    pub identity_g_ok: bool,
    pub mod4_ok: bool,
    pub membership_ok: bool,
}

impl TraceDoc {
    pub fn new(rec: &TraceRecord, k: u64) -> Self {
        TraceDoc {
            x: rec.x.to_string(),
            k,
            u: rec.u.to_string(),
            v: rec.v.to_string(),
            a: rec.a.to_string(),
            b: rec.b.to_string(),
            w: rec.w.to_string(),
            power_sum: rec.power_sum.to_string(),
            lemma_2pow_ok: rec.lemma_2pow_ok,
            lemma_not2_ok: rec.lemma_not2_ok,
            gcd_bw_ok: rec.gcd_bw_ok,
            identity_g_ok: rec.identity_g_ok,
            mod4_ok: rec.mod4_ok,
            membership_ok: rec.membership_ok,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundDoc {
    pub variable: String,
    pub lo: String,
    pub hi: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionDoc {
    pub values: Vec<String>,
    pub witness: Option<PowerDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectDoc {
    pub mode: String,
    pub expected: Vec<Vec<String>>,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionListDoc {
    pub equation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    pub statement: String,
    pub variables: Vec<String>,
    pub search_box: Vec<BoundDoc>,
    pub solutions: Vec<SolutionDoc>,
    pub exhaustive: bool,
    pub resubstitution_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symmetry_note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expect: Option<ExpectDoc>,
}

impl From<&SolutionList> for SolutionListDoc {
    fn from(list: &SolutionList) -> Self {
        let variant = match &list.equation {
            Equation::Fermat(v) => Some(v.tag().to_string()),
            _ => None,
        };
        let symmetry_note = match &list.equation {
            Equation::Fermat(FermatVariant::CN | FermatVariant::TwoCN) => {
                Some("all signs of A, B listed; C is the positive root, -C also solves even n")
            }
            Equation::Fermat(FermatVariant::Sig24N) => {
                Some("all signs of a, b listed; c is the positive root, -c also solves even n")
            }
            Equation::Lebesgue => Some("all signs of X listed; both signs of Y for even n"),
            _ => None,
        };
        SolutionListDoc {
            equation: list.equation.tag().into(),
            variant,
            statement: list.equation.to_string(),
            variables: list.equation.variables().iter().map(|v| v.to_string()).collect(),
            search_box: list
                .search_box
                .iter()
                .map(|b| BoundDoc {
                    variable: b.variable.into(),
                    lo: b.lo.to_string(),
                    hi: b.hi.to_string(),
                })
                .collect(),
            solutions: list
                .solutions
                .iter()
                .map(|s| SolutionDoc {
                    values: s.values.iter().map(ToString::to_string).collect(),
                    witness: s.witness.as_ref().map(Into::into),
                })
                .collect(),
            exhaustive: list.exhaustive,
            resubstitution_ok: list.all_satisfy(),
            symmetry_note: symmetry_note.map(Into::into),
            expect: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerQueryDoc {
    pub value: String,
    pub decomposition: Option<PowerDoc>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use power_forge_core::{construct, construct_integer};

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn rational_artifact_round_trip() {
        let set = PowerSetInput::rational(vec![q("9/25"), q("-8/27")]).unwrap();
        let art = Artifact::Rational(construct(&set, SelectionPolicy::default()).unwrap());
        let json = art.to_json();
        assert!(json.contains("\"schema\": \"v1\""));
        assert!(json.contains("\"variant\": \"rational\""));
        assert_eq!(Artifact::from_json(&json).unwrap(), art);
    }

    #[test]
    fn integer_and_empty_round_trip() {
        let set = PowerSetInput::integer(vec![q("4"), q("8")]).unwrap();
        let art = Artifact::Integer(construct_integer(&set).unwrap());
        assert_eq!(Artifact::from_json(&art.to_json()).unwrap(), art);

        let empty = PowerSetInput::rational(vec![]).unwrap();
        let art = Artifact::Rational(construct(&empty, SelectionPolicy::default()).unwrap());
        let json = art.to_json();
        assert!(json.contains("\"f_s\": [\n    \"2\"\n  ]"));
        assert_eq!(Artifact::from_json(&json).unwrap(), art);
    }

    #[test]
    fn rejects_bad_documents() {
        let set = PowerSetInput::rational(vec![q("4")]).unwrap();
        let art = Artifact::Rational(construct(&set, SelectionPolicy::default()).unwrap());
        let mut doc = art.to_doc();
        if let ArtifactDoc::Rational(d) = &mut doc {
            d.f_s[0] = "1".into();
        }
        assert!(Artifact::from_doc(&doc).is_err());
        let json = art.to_json().replace("\"v1\"", "\"v0\"");
        assert!(Artifact::from_json(&json).is_err());
        assert!(Artifact::from_json("{").is_err());
        assert!(Artifact::from_json(r#"{"variant":"rational","schema":"v1"}"#).is_err());
    }

    #[test]
    fn decomposition_shape() {
        let d = power_forge_core::decompose_rational_power(&q("64/729")).unwrap();
        let json = serde_json::to_string(&PowerDoc::from(&d)).unwrap();
        assert_eq!(json, r#"{"base":"2/3","exponent":6}"#);
    }
}
