//! Input documents, deterministic reports, and the command implementations
//! behind the `coxcomb` binary.
//!
//! The input format is a single JSON document with 1-based generator indices
//! on the user surface; unknown keys are rejected. Reports are emitted
//! either as aligned text or as JSON with sorted keys, so identical inputs
//! produce identical bytes.

use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::bunch::{projectivize, BunchConeInput, BunchOptions};
use crate::cone::{Cone, FaceIndexSet};
use crate::invariants::{
    analyze, analyze_validated, build_rank1_quadric, build_rank2_quadric, quadric_checks,
    Analysis, FanoStatus, GorensteinStatus, Projectivity, Rank2Side,
};
use crate::matrix::Matrix;
use crate::ring::{Presentation, Relation};
use crate::{Error, Int, Rat, Result};

// ---------------------------------------------------------------------------
// input document
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub class_rank: usize,
    pub degrees: Vec<DegreeEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<RelationDoc>,
    pub bunch: Vec<BunchConeDoc>,
    #[serde(default, skip_serializing_if = "Flags::is_default")]
    pub flags: Flags,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fface_table: Option<Vec<Vec<usize>>>,
}

/// A degree column, or a degree column repeated `multiplicity` times.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DegreeEntry {
    Plain(Vec<i64>),
    Weighted(WeightedDegree),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightedDegree {
    pub vector: Vec<i64>,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDoc {
    pub terms: Vec<TermDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    /// Exact rational coefficient, e.g. `"1"`, `"-3"`, `"2/5"`.
    pub coeff: String,
    pub exponents: Vec<u64>,
}

/// A bunch cone: explicit generators in the grading lattice, or a witness
/// face given by 1-based generator indices.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BunchConeDoc {
    Generators(GeneratorsDoc),
    Face(FaceDoc),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorsDoc {
    pub generators: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaceDoc {
    pub face: Vec<usize>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Flags {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xhat_smooth: Option<bool>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub skip_maximality_check: bool,
}

impl Flags {
    fn is_default(&self) -> bool {
        self.xhat_smooth.is_none() && !self.skip_maximality_check
    }
}

pub fn parse_document(text: &str) -> Result<InputDocument> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn parse_rational(text: &str) -> Result<Rat> {
    let mut parts = text.splitn(2, '/');
    let numer = parts
        .next()
        .and_then(|s| Int::from_str(s.trim()).ok())
        .ok_or_else(|| Error::Parse(format!("bad rational coefficient {text:?}")))?;
    let denom = match parts.next() {
        Some(d) => Int::from_str(d.trim())
            .ok()
            .filter(|d| !num_traits::Zero::is_zero(d))
            .ok_or_else(|| Error::Parse(format!("bad rational coefficient {text:?}")))?,
        None => Int::from(1),
    };
    Ok(Ratio::new(numer, denom))
}

fn face_from_one_based(indices: &[usize], r: usize) -> Result<FaceIndexSet> {
    let mut zero_based = Vec::with_capacity(indices.len());
    for &i in indices {
        if i == 0 || i > r {
            return Err(Error::Parse(format!(
                "generator index {i} out of range 1..={r}"
            )));
        }
        zero_based.push(i - 1);
    }
    Ok(FaceIndexSet::new(zero_based))
}

impl InputDocument {
    /// Convert the document into core data: presentation, raw bunch input,
    /// and scan options derived from the flags.
    pub fn into_parts(
        &self,
        max_generators: Option<usize>,
        skip_maximality: bool,
    ) -> Result<(Presentation<Int>, Vec<BunchConeInput<Int>>, BunchOptions)> {
        let k = self.class_rank;
        let mut columns: Vec<Vec<Int>> = Vec::new();
        for entry in &self.degrees {
            let (vector, count) = match entry {
                DegreeEntry::Plain(v) => (v, 1),
                DegreeEntry::Weighted(w) => (&w.vector, w.multiplicity),
            };
            if vector.len() != k {
                return Err(Error::Parse(format!(
                    "degree vector of length {} instead of class_rank {k}",
                    vector.len()
                )));
            }
            if count == 0 {
                return Err(Error::Parse("degree multiplicity must be positive".into()));
            }
            let column: Vec<Int> = vector.iter().map(|&x| Int::from(x)).collect();
            for _ in 0..count {
                columns.push(column.clone());
            }
        }
        let r = columns.len();
        let degrees = Matrix::from_columns(k, &columns);
        let mut relations = Vec::new();
        for rel in &self.relations {
            let mut terms = Vec::new();
            for term in &rel.terms {
                terms.push((parse_rational(&term.coeff)?, term.exponents.clone()));
            }
            relations.push(Relation::new(terms));
        }
        let fface_table = match &self.fface_table {
            Some(rows) => {
                let mut faces = Vec::new();
                for row in rows {
                    faces.push(face_from_one_based(row, r)?);
                }
                Some(faces)
            }
            None => None,
        };
        let presentation =
            Presentation::validate(degrees, relations, self.flags.xhat_smooth, fface_table)?;
        let mut bunch_input = Vec::new();
        for cone in &self.bunch {
            bunch_input.push(match cone {
                BunchConeDoc::Generators(g) => BunchConeInput::Generators(
                    g.generators
                        .iter()
                        .map(|v| v.iter().map(|&x| Int::from(x)).collect())
                        .collect(),
                ),
                BunchConeDoc::Face(f) => BunchConeInput::Face(face_from_one_based(&f.face, r)?),
            });
        }
        let options = BunchOptions {
            max_generators: max_generators.unwrap_or(crate::ring::DEFAULT_FACE_SCAN_BOUND),
            skip_maximality_check: skip_maximality || self.flags.skip_maximality_check,
        };
        Ok((presentation, bunch_input, options))
    }
}

// ---------------------------------------------------------------------------
// report
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Report {
    pub schema: u32,
    pub presentation: PresentationSummary,
    pub dimension: usize,
    pub global_functions_constant: bool,
    /// 1-based generator index sets, ordered by size then lexicographically.
    pub relevant_faces: Vec<Vec<usize>>,
    pub covering_collection: Vec<Vec<usize>>,
    pub picard: PicardReport,
    pub cones: ConesReport,
    pub strata: Vec<StratumRow>,
    pub canonical_class: Vec<String>,
    pub gorenstein: String,
    pub fano: String,
    pub projective: String,
    pub q_factorial: bool,
    pub ambient_fan: FanReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quadric: Option<QuadricRow>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PresentationSummary {
    pub generators: usize,
    pub class_rank: usize,
    pub relations: usize,
    pub ring_dimension: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PicardReport {
    /// Canonical Hermite basis columns of the Picard sublattice.
    pub basis: Vec<Vec<String>>,
    pub index: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ConeRow {
    pub dim: usize,
    pub rays: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub lineality: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ConesReport {
    pub effective: ConeRow,
    pub moving: ConeRow,
    pub semiample: ConeRow,
    /// `"relative interior of the semiample cone"` or `"empty"`.
    pub ample: String,
    /// The Mori cone, in coordinates dual to `picard_span_basis`.
    pub mori: ConeRow,
    pub picard_span_basis: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct StratumRow {
    pub face: Vec<usize>,
    pub q_factorial: bool,
    pub factorial: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub smooth: Option<bool>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FanReport {
    pub ambient_rank: usize,
    pub maximal_cones: Vec<Vec<Vec<String>>>,
    pub complete: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct QuadricRow {
    pub degree: Vec<String>,
    pub rank: usize,
    pub full_rank: bool,
    pub auto_smooth: bool,
    pub class_rank_bound_holds: bool,
    pub ring_dim_bound_holds: bool,
}

fn vec_to_strings(v: &[Int]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn cone_row(c: &Cone<Int>) -> ConeRow {
    let mut rays = c.rays().to_vec();
    rays.sort();
    ConeRow {
        dim: c.dim(),
        rays: rays.iter().map(|r| vec_to_strings(r)).collect(),
        lineality: c.lineality_basis().iter().map(|l| vec_to_strings(l)).collect(),
    }
}

pub fn build_report(analysis: &Analysis<Int>) -> Report {
    let p = &analysis.presentation;
    let mut warnings: Vec<String> = p.warnings().to_vec();
    warnings.extend(analysis.bunch.warnings().iter().cloned());
    Report {
        schema: 1,
        presentation: PresentationSummary {
            generators: p.num_generators(),
            class_rank: p.class_rank(),
            relations: p.num_relations(),
            ring_dimension: p.ring_dimension(),
        },
        dimension: analysis.dimension,
        global_functions_constant: analysis.only_constants,
        relevant_faces: analysis.relevant.iter().map(|f| f.one_based()).collect(),
        covering_collection: analysis.covering.iter().map(|f| f.one_based()).collect(),
        picard: PicardReport {
            basis: analysis
                .picard
                .basis_columns()
                .iter()
                .map(|c| vec_to_strings(c))
                .collect(),
            index: analysis.picard_index.to_string(),
        },
        cones: ConesReport {
            effective: cone_row(&analysis.profile.effective),
            moving: cone_row(&analysis.profile.moving),
            semiample: cone_row(&analysis.profile.semiample),
            ample: if analysis.profile.ample_nonempty {
                "relative interior of the semiample cone".to_string()
            } else {
                "empty".to_string()
            },
            mori: cone_row(&analysis.profile.mori),
            picard_span_basis: analysis
                .profile
                .picard_span_basis
                .columns()
                .iter()
                .map(|c| vec_to_strings(c))
                .collect(),
        },
        strata: analysis
            .strata
            .iter()
            .map(|s| StratumRow {
                face: s.face.one_based(),
                q_factorial: s.q_factorial,
                factorial: s.factorial,
                smooth: s.smooth,
            })
            .collect(),
        canonical_class: vec_to_strings(&analysis.canonical),
        gorenstein: match analysis.gorenstein {
            GorensteinStatus::Gorenstein => "gorenstein",
            GorensteinStatus::QGorenstein => "q-gorenstein",
            GorensteinStatus::Neither => "neither",
        }
        .to_string(),
        fano: match analysis.fano {
            FanoStatus::Fano => "fano",
            FanoStatus::QFano => "q-fano",
            FanoStatus::NotFano => "not fano",
        }
        .to_string(),
        projective: match analysis.projectivity {
            Projectivity::Projective => "projective",
            Projectivity::NotProjective => "not projective",
            Projectivity::Undetermined => "undetermined",
        }
        .to_string(),
        q_factorial: analysis.q_factorial,
        ambient_fan: FanReport {
            ambient_rank: analysis.ambient_fan.ambient_rank(),
            maximal_cones: analysis
                .ambient_fan
                .maximal_cones()
                .iter()
                .map(|c| {
                    let mut rays = c.rays().to_vec();
                    rays.sort();
                    rays.iter().map(|r| vec_to_strings(r)).collect()
                })
                .collect(),
            complete: analysis.ambient_fan.is_complete(),
        },
        quadric: analysis.quadric.as_ref().map(|q| QuadricRow {
            degree: vec_to_strings(&q.degree),
            rank: q.rank,
            full_rank: q.full_rank,
            auto_smooth: q.auto_smooth,
            class_rank_bound_holds: q.class_rank_bound_holds,
            ring_dim_bound_holds: q.ring_dim_bound_holds,
        }),
        warnings,
    }
}

/// JSON rendering with sorted keys: parsing and re-serializing the output is
/// the identity.
pub fn render_json(report: &Report) -> String {
    let value = serde_json::to_value(report).expect("report serializes");
    let mut out = serde_json::to_string_pretty(&value).expect("value serializes");
    out.push('\n');
    out
}

fn fmt_vecs(vectors: &[Vec<String>]) -> String {
    if vectors.is_empty() {
        return "-".to_string();
    }
    vectors
        .iter()
        .map(|v| format!("({})", v.join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn fmt_faces(faces: &[Vec<usize>]) -> String {
    if faces.is_empty() {
        return "-".to_string();
    }
    faces
        .iter()
        .map(|f| {
            format!(
                "{{{}}}",
                f.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
            )
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let p = &report.presentation;
    out.push_str(&format!(
        "presentation        r = {} generators, class rank k = {}, {} relation(s), ring dimension {}\n",
        p.generators, p.class_rank, p.relations, p.ring_dimension
    ));
    out.push_str(&format!("dimension           {}\n", report.dimension));
    out.push_str(&format!(
        "global functions    {}\n",
        if report.global_functions_constant {
            "constants only"
        } else {
            "nonconstant functions exist"
        }
    ));
    out.push_str(&format!(
        "relevant faces      ({}) {}\n",
        report.relevant_faces.len(),
        fmt_faces(&report.relevant_faces)
    ));
    out.push_str(&format!(
        "covering collection ({}) {}\n",
        report.covering_collection.len(),
        fmt_faces(&report.covering_collection)
    ));
    out.push_str(&format!(
        "picard group        index {}, basis {}\n",
        report.picard.index,
        fmt_vecs(&report.picard.basis)
    ));
    out.push_str(&format!(
        "effective cone      {}\n",
        fmt_vecs(&report.cones.effective.rays)
    ));
    if !report.cones.effective.lineality.is_empty() {
        out.push_str(&format!(
            "  lineality         {}\n",
            fmt_vecs(&report.cones.effective.lineality)
        ));
    }
    out.push_str(&format!(
        "moving cone         {}\n",
        fmt_vecs(&report.cones.moving.rays)
    ));
    out.push_str(&format!(
        "semiample cone      {}\n",
        fmt_vecs(&report.cones.semiample.rays)
    ));
    out.push_str(&format!("ample cone          {}\n", report.cones.ample));
    out.push_str(&format!(
        "mori cone           {} (in the dual of the picard span {})\n",
        fmt_vecs(&report.cones.mori.rays),
        fmt_vecs(&report.cones.picard_span_basis)
    ));
    out.push_str(&format!(
        "canonical class     ({})\n",
        report.canonical_class.join(",")
    ));
    out.push_str(&format!(
        "verdicts            {}; {}; {}; {}\n",
        report.gorenstein,
        report.fano,
        report.projective,
        if report.q_factorial {
            "q-factorial"
        } else {
            "not q-factorial"
        }
    ));
    out.push_str("strata              face / q-factorial / factorial / smooth\n");
    for s in &report.strata {
        let face = format!(
            "{{{}}}",
            s.face
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        out.push_str(&format!(
            "  {:<18} {:<5} {:<5} {}\n",
            face,
            s.q_factorial,
            s.factorial,
            s.smooth.map_or("unknown".to_string(), |b| b.to_string())
        ));
    }
    out.push_str(&format!(
        "ambient fan         rank {}, {} maximal cone(s), complete: {}\n",
        report.ambient_fan.ambient_rank,
        report.ambient_fan.maximal_cones.len(),
        report.ambient_fan.complete
    ));
    for c in &report.ambient_fan.maximal_cones {
        out.push_str(&format!("  {}\n", fmt_vecs(c)));
    }
    if let Some(q) = &report.quadric {
        out.push_str(&format!(
            "quadric             degree ({}), rank {}{}, auto-smooth {}, bounds {}\n",
            q.degree.join(","),
            q.rank,
            if q.full_rank { " (full)" } else { "" },
            q.auto_smooth,
            q.class_rank_bound_holds && q.ring_dim_bound_holds
        ));
    }
    for w in &report.warnings {
        out.push_str(&format!("warning             {w}\n"));
    }
    out
}

// ---------------------------------------------------------------------------
// commands
// ---------------------------------------------------------------------------

/// `validate`: exit 0 on success; validation errors carry exit code 2.
pub fn cmd_validate(
    text: &str,
    max_generators: Option<usize>,
    skip_maximality: bool,
) -> Result<String> {
    let doc = parse_document(text)?;
    let (presentation, bunch_input, options) =
        doc.into_parts(max_generators, skip_maximality)?;
    let mut presentation = presentation;
    crate::invariants::apply_quadric_smoothness(&mut presentation);
    let bunch = crate::bunch::validate_bunch(&presentation, &bunch_input, &options)?;
    let mut out = format!(
        "valid bunched ring: {} generators, class rank {}, {} bunch cone(s)\n",
        presentation.num_generators(),
        presentation.class_rank(),
        bunch.len()
    );
    for w in presentation.warnings().iter().chain(bunch.warnings()) {
        out.push_str(&format!("warning: {w}\n"));
    }
    Ok(out)
}

/// `analyze`: full report, text or JSON.
pub fn cmd_analyze(
    text: &str,
    json: bool,
    max_generators: Option<usize>,
    skip_maximality: bool,
) -> Result<String> {
    let doc = parse_document(text)?;
    let (presentation, bunch_input, options) =
        doc.into_parts(max_generators, skip_maximality)?;
    let analysis = analyze(presentation, &bunch_input, &options)?;
    let report = build_report(&analysis);
    Ok(if json {
        render_json(&report)
    } else {
        render_text(&report)
    })
}

/// `fan`: the minimal ambient fan in the text export format.
pub fn cmd_fan(
    text: &str,
    max_generators: Option<usize>,
    skip_maximality: bool,
) -> Result<String> {
    let doc = parse_document(text)?;
    let (presentation, bunch_input, options) =
        doc.into_parts(max_generators, skip_maximality)?;
    let analysis = analyze(presentation, &bunch_input, &options)?;
    Ok(analysis.ambient_fan.export())
}

/// `projectivize`: emit a new document whose bunch makes the variety
/// projective.
pub fn cmd_projectivize(
    text: &str,
    max_generators: Option<usize>,
    skip_maximality: bool,
) -> Result<String> {
    let doc = parse_document(text)?;
    let (presentation, _, options) = doc.into_parts(max_generators, skip_maximality)?;
    let bunch = projectivize(&presentation, &options)?;
    let mut cones = Vec::new();
    for cone in bunch.cones() {
        let mut generators = Vec::new();
        for g in cone.generators() {
            let mut row = Vec::new();
            for x in &g {
                row.push(i64::try_from(x).map_err(|_| {
                    Error::Parse("projectivized bunch generator exceeds 64 bits".into())
                })?);
            }
            generators.push(row);
        }
        cones.push(BunchConeDoc::Generators(GeneratorsDoc { generators }));
    }
    let out = InputDocument {
        bunch: cones,
        ..doc
    };
    let value = serde_json::to_value(&out).map_err(|e| Error::Parse(e.to_string()))?;
    let mut rendered =
        serde_json::to_string_pretty(&value).map_err(|e| Error::Parse(e.to_string()))?;
    rendered.push('\n');
    Ok(rendered)
}

fn assert_claim(ok: bool, message: &str, failures: &mut Vec<String>) {
    if !ok {
        failures.push(message.to_string());
    }
}

fn finish_quadric(
    analysis: Analysis<Int>,
    failures: Vec<String>,
    json: bool,
) -> Result<String> {
    if !failures.is_empty() {
        return Err(Error::ClassificationMismatch(failures.join("; ")));
    }
    let report = build_report(&analysis);
    Ok(if json {
        render_json(&report)
    } else {
        render_text(&report)
    })
}

/// `quadric rank1`: build, analyze, and assert the rank-one classification:
/// Q-factorial, projective, Q-Fano, of dimension `sum(mu) - 2`.
pub fn cmd_quadric_rank1(
    weights: &[i64],
    multiplicities: &[usize],
    json: bool,
    max_generators: Option<usize>,
) -> Result<String> {
    let options = BunchOptions {
        max_generators: max_generators.unwrap_or(crate::ring::DEFAULT_FACE_SCAN_BOUND),
        skip_maximality_check: false,
    };
    let ws: Vec<Int> = weights.iter().map(|&w| Int::from(w)).collect();
    let (presentation, bunch) = build_rank1_quadric(&ws, multiplicities, &options)?;
    quadric_checks(&presentation)?;
    let analysis = analyze_validated(presentation, bunch, &options)?;
    let mut failures = Vec::new();
    let expected_dim: usize = multiplicities.iter().sum::<usize>() - 2;
    assert_claim(
        analysis.dimension == expected_dim,
        &format!(
            "dimension {} differs from {}",
            analysis.dimension, expected_dim
        ),
        &mut failures,
    );
    assert_claim(analysis.q_factorial, "expected a Q-factorial variety", &mut failures);
    assert_claim(
        analysis.projectivity == Projectivity::Projective,
        "expected a projective variety",
        &mut failures,
    );
    assert_claim(
        analysis.fano != FanoStatus::NotFano,
        "expected a Q-Fano variety",
        &mut failures,
    );
    finish_quadric(analysis, failures, json)
}

/// `quadric rank2`: build a side of the rank-two classification and assert
/// smoothness, projectivity, the dimension formula, and the Fano side.
pub fn cmd_quadric_rank2(
    side: Rank2Side,
    mu1: usize,
    mu2: usize,
    json: bool,
    max_generators: Option<usize>,
) -> Result<String> {
    let options = BunchOptions {
        max_generators: max_generators.unwrap_or(crate::ring::DEFAULT_FACE_SCAN_BOUND),
        skip_maximality_check: false,
    };
    let built = build_rank2_quadric::<Int>(side, mu1, mu2, &options);
    let (presentation, bunch) = match built {
        Ok(parts) => parts,
        Err(e @ (Error::MultiplicityOutOfRange(_) | Error::TooFewVariables(_))) => return Err(e),
        // the constructed data did not validate as an F-bunch: report it as
        // a failed classification claim rather than bad user input
        Err(e) => return Err(Error::ClassificationMismatch(e.to_string())),
    };
    quadric_checks(&presentation)?;
    let analysis = analyze_validated(presentation, bunch, &options)?;
    let mut failures = Vec::new();
    let expected_dim = match side {
        Rank2Side::Left => 2 * mu1 - 3,
        Rank2Side::Right => 2 * mu1 + mu2 - 3,
    };
    assert_claim(
        analysis.dimension == expected_dim,
        &format!(
            "dimension {} differs from {}",
            analysis.dimension, expected_dim
        ),
        &mut failures,
    );
    assert_claim(
        analysis.strata.iter().all(|s| s.smooth == Some(true)),
        "expected all strata smooth",
        &mut failures,
    );
    assert_claim(
        analysis.projectivity == Projectivity::Projective,
        "expected a projective variety",
        &mut failures,
    );
    let fano_expected = side == Rank2Side::Left;
    assert_claim(
        (analysis.fano == FanoStatus::Fano) == fano_expected,
        &format!(
            "Fano verdict {:?} contradicts the classification side",
            analysis.fano
        ),
        &mut failures,
    );
    finish_quadric(analysis, failures, json)
}
