//! The end-to-end classification pipeline and the verification report.
//!
//! Dimension by dimension, the pipeline lists one algebra per isomorphism
//! class: first the zero algebra and the direct sums of smaller
//! classes (those without central components) with zero algebras, then one
//! central extension per automorphism orbit of useful subspaces of `H^2`
//! of every smaller parent. Records carry their provenance and, when the
//! isomorphism oracle matches them to a catalog presentation, the catalog
//! label.
//!
//! `verify` replays the catalog's own presentation lists against the
//! computed classification and reports every discrepancy as a finding; it
//! never reconciles counts silently.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{Algebra, AlgebraJson};
use crate::catalog::{self, Presentation};
use crate::cohomology::h2;
use crate::field::{FieldElement, FieldSpec};
use crate::isomorphism::are_isomorphic;
use crate::orbits::{automorphism_group, central_extension, orbit_representatives_with};
use crate::{Error, Result};

/// How a classified algebra was produced.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Provenance {
    /// The one-dimensional zero algebra at the root of the recursion.
    Base,
    /// Central extension of a parent record by an orbit representative.
    Extension {
        parent: String,
        s: usize,
        orbit: usize,
        orbit_size: usize,
    },
    /// Direct sum of earlier records (zero algebras spelled out).
    DirectSum { summands: Vec<String> },
}

/// A catalog presentation matched to a record by the isomorphism oracle.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CatalogMatch {
    pub name: String,
    pub params: BTreeMap<String, u32>,
}

/// One isomorphism class in the output of `classify`.
#[derive(Debug, Clone)]
pub struct ClassificationRecord {
    pub label: String,
    pub algebra: Algebra,
    pub provenance: Provenance,
    pub catalog_match: Option<CatalogMatch>,
}

/// Serialisable view of a record.
#[derive(Debug, Clone, Serialize)]
pub struct RecordJson {
    pub label: String,
    pub algebra: AlgebraJson,
    pub provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub catalog_match: Option<CatalogMatch>,
}

impl ClassificationRecord {
    pub fn to_json(&self) -> RecordJson {
        RecordJson {
            label: self.label.clone(),
            algebra: self.algebra.to_json(),
            provenance: self.provenance.clone(),
            catalog_match: self.catalog_match.clone(),
        }
    }
}

fn check_guards(n: usize, field: &FieldSpec, commutative: bool) -> Result<()> {
    if n == 0 {
        return Err(Error::Unsupported("dimension must be at least 1".into()));
    }
    if field.q() > 9 {
        return Err(Error::Unsupported(format!(
            "field order {} exceeds the driver guard of 9",
            field.q()
        )));
    }
    if !commutative && n > 3 {
        return Err(Error::Unsupported(
            "the full (noncommutative) run is supported up to dimension 3".into(),
        ));
    }
    if n > 4 {
        return Err(Error::Unsupported(
            "classification is supported up to dimension 4".into(),
        ));
    }
    if n == 4 && field.q() > 5 {
        return Err(Error::Unsupported(
            "dimension 4 is supported for field orders up to 5".into(),
        ));
    }
    Ok(())
}

/// Classify the nilpotent associative algebras of dimension `n` over
/// `field`, up to isomorphism; with `commutative` set, only the commutative
/// ones. The output order, labels and provenance are deterministic.
pub fn classify(n: usize, field: &FieldSpec, commutative: bool) -> Result<Vec<ClassificationRecord>> {
    Ok(classify_with_classes(n, field, commutative)?.0)
}

fn classify_with_classes(
    n: usize,
    field: &FieldSpec,
    commutative: bool,
) -> Result<(Vec<ClassificationRecord>, Vec<PresentationClass>)> {
    check_guards(n, field, commutative)?;
    let mut lists: Vec<Vec<ClassificationRecord>> = Vec::new();
    let mut classes = presentation_classes(1, field, commutative)?;

    // Dimension 1: only the zero algebra.
    let base = ClassificationRecord {
        label: String::new(),
        algebra: Algebra::zero(field.clone(), 1),
        provenance: Provenance::Base,
        catalog_match: None,
    };
    lists.push(attach_catalog_labels(vec![base], 1, &classes)?);

    for d in 2..=n {
        let mut records: Vec<ClassificationRecord> = Vec::new();

        // The zero algebra of dimension d.
        let base_label = lists[0][0].label.clone();
        records.push(ClassificationRecord {
            label: String::new(),
            algebra: Algebra::zero(field.clone(), d),
            provenance: Provenance::DirectSum { summands: vec![base_label.clone(); d] },
            catalog_match: None,
        });

        // Direct sums B + (zero)^k for every smaller class B without
        // central components, largest zero part first.
        for k in (1..d).rev() {
            let parent_dim = d - k;
            for parent in &lists[parent_dim - 1] {
                if parent.algebra.has_central_component() {
                    continue;
                }
                let sum = parent
                    .algebra
                    .direct_sum(&Algebra::zero(field.clone(), k))
                    .expect("same field by construction");
                let mut summands = vec![parent.label.clone()];
                summands.extend(std::iter::repeat(base_label.clone()).take(k));
                records.push(ClassificationRecord {
                    label: String::new(),
                    algebra: sum,
                    provenance: Provenance::DirectSum { summands },
                    catalog_match: None,
                });
            }
        }

        // Central extensions: one per orbit of useful s-dimensional
        // subspaces, for every parent of dimension d - s.
        for parent_dim in (1..d).rev() {
            let s = d - parent_dim;
            for parent in &lists[parent_dim - 1] {
                let h = h2(&parent.algebra);
                if h.reps(commutative).len() < s {
                    continue;
                }
                let aut = automorphism_group(&parent.algebra)?;
                let orbits =
                    orbit_representatives_with(&parent.algebra, &h, &aut, s, commutative)?;
                for (orbit_idx, (omega, orbit_size)) in orbits.iter().enumerate() {
                    let cocycles: Vec<_> = (0..omega.dim())
                        .map(|i| h.lift(omega.basis_row(i), commutative))
                        .collect();
                    let ext = central_extension(&parent.algebra, &cocycles)?;
                    debug_assert!(ext.is_associative() && ext.is_nilpotent());
                    debug_assert!(!commutative || ext.is_commutative());
                    records.push(ClassificationRecord {
                        label: String::new(),
                        algebra: ext,
                        provenance: Provenance::Extension {
                            parent: parent.label.clone(),
                            s,
                            orbit: orbit_idx,
                            orbit_size: *orbit_size,
                        },
                    catalog_match: None,
                    });
                }
            }
        }

        classes = presentation_classes(d, field, commutative)?;
        let records = attach_catalog_labels(records, d, &classes)?;
        assert_pairwise_non_isomorphic(&records)?;
        lists.push(records);
    }

    Ok((lists.pop().expect("at least the base dimension"), classes))
}

/// Match records against the catalog presentations of their dimension and
/// assign labels: the catalog label when matched, otherwise a provenance
/// label.
fn attach_catalog_labels(
    mut records: Vec<ClassificationRecord>,
    dim: usize,
    classes: &[PresentationClass],
) -> Result<Vec<ClassificationRecord>> {
    for (idx, rec) in records.iter_mut().enumerate() {
        let mut matched = None;
        for class in classes {
            if are_isomorphic(&rec.algebra, &class.representative.algebra)?.is_some() {
                matched = Some(class);
                break;
            }
        }
        match matched {
            Some(class) => {
                rec.catalog_match = Some(CatalogMatch {
                    name: class.representative.name.to_string(),
                    params: class
                        .representative
                        .params
                        .iter()
                        .map(|(k, v)| (k.clone(), v.0))
                        .collect(),
                });
                rec.label = class.representative.label.clone();
            }
            None => {
                rec.label = fallback_label(rec, dim, idx);
            }
        }
    }
    Ok(records)
}

fn fallback_label(rec: &ClassificationRecord, dim: usize, idx: usize) -> String {
    match &rec.provenance {
        Provenance::Extension { parent, s, orbit, .. } => {
            format!("N_{dim}.{parent}.{s}.{orbit}")
        }
        Provenance::DirectSum { summands } => summands.join("\u{2295}"),
        Provenance::Base => format!("N_{dim}.{idx}"),
    }
}

fn assert_pairwise_non_isomorphic(records: &[ClassificationRecord]) -> Result<()> {
    for i in 0..records.len() {
        for j in i + 1..records.len() {
            if are_isomorphic(&records[i].algebra, &records[j].algebra)?.is_some() {
                panic!(
                    "internal error: classification emitted isomorphic records {} and {}",
                    records[i].label, records[j].label
                );
            }
        }
    }
    Ok(())
}

/// A group of catalog presentations that the oracle identified as one
/// isomorphism class; the representative is the first in catalog order.
pub struct PresentationClass {
    pub representative: Presentation,
    pub member_labels: Vec<String>,
}

/// Catalog presentations of one dimension bucketed into isomorphism
/// classes by the oracle.
pub fn presentation_classes(
    dim: usize,
    field: &FieldSpec,
    commutative: bool,
) -> Result<Vec<PresentationClass>> {
    let mut classes: Vec<PresentationClass> = Vec::new();
    for pres in catalog::instantiate_all(dim, field, commutative) {
        let mut found = false;
        for class in classes.iter_mut() {
            if are_isomorphic(&pres.algebra, &class.representative.algebra)?.is_some() {
                class.member_labels.push(pres.label.clone());
                found = true;
                break;
            }
        }
        if !found {
            classes.push(PresentationClass {
                member_labels: vec![pres.label.clone()],
                representative: pres,
            });
        }
    }
    Ok(classes)
}

/// The class count the catalog expects for a run, when its tables state one.
pub fn catalog_expected_count(n: usize, field: &FieldSpec, commutative: bool) -> Option<usize> {
    let q = field.q() as usize;
    match (n, commutative) {
        (1, _) => Some(1),
        (2, _) => Some(2),
        (3, false) => Some(if q % 2 == 1 { q + 6 } else { q + 5 }),
        (4, true) => Some(11),
        _ => None,
    }
}

/// The verification report: the computed classification matched against the
/// catalog presentation lists, with all discrepancies spelled out.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub dim: usize,
    pub p: u32,
    pub m: u32,
    pub q: u32,
    pub commutative: bool,
    /// Number of classes computed by the pipeline.
    pub computed_count: usize,
    /// Class count stated by the catalog tables, when they state one.
    pub catalog_expected_count: Option<usize>,
    /// Number of presentations the catalog lists for this run.
    pub presentation_count: usize,
    /// Number of isomorphism classes among those presentations, as decided
    /// by the oracle.
    pub presentation_class_count: usize,
    /// Catalog class label for every record, in output order.
    pub matches: Vec<RecordMatch>,
    /// Records that match no catalog presentation.
    pub unmatched_records: Vec<String>,
    /// Catalog classes not realised by any record.
    pub unmatched_classes: Vec<String>,
    /// Oracle verdict on A_{4,5}^0 vs A_{4,5}^1 (even characteristic,
    /// dimension 4 commutative runs only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a45_0_vs_1_isomorphic: Option<bool>,
    pub findings: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RecordMatch {
    pub record: String,
    pub catalog_class: Option<String>,
    pub class_members: Vec<String>,
}

/// Classify and compare against the catalog presentation lists.
///
/// The oracle already matched every record to a presentation class while
/// the classification was labelled, so the comparison here only resolves
/// those matches against the class list.
pub fn verify(n: usize, field: &FieldSpec, commutative: bool) -> Result<VerifyReport> {
    let (records, classes) = classify_with_classes(n, field, commutative)?;
    let presentation_count: usize = classes.iter().map(|c| c.member_labels.len()).sum();

    let mut matches = Vec::new();
    let mut unmatched_records = Vec::new();
    let mut class_used = vec![false; classes.len()];
    for rec in &records {
        let matched = rec.catalog_match.as_ref().map(|cm| {
            classes
                .iter()
                .position(|c| {
                    c.representative.name == cm.name
                        && c.representative
                            .params
                            .iter()
                            .map(|(k, v)| (k.clone(), v.0))
                            .collect::<BTreeMap<_, _>>()
                            == cm.params
                })
                .expect("catalog match names a presentation class")
        });
        match matched {
            Some(ci) => {
                class_used[ci] = true;
                matches.push(RecordMatch {
                    record: rec.label.clone(),
                    catalog_class: Some(classes[ci].representative.label.clone()),
                    class_members: classes[ci].member_labels.clone(),
                });
            }
            None => {
                unmatched_records.push(rec.label.clone());
                matches.push(RecordMatch {
                    record: rec.label.clone(),
                    catalog_class: None,
                    class_members: Vec::new(),
                });
            }
        }
    }
    let unmatched_classes: Vec<String> = classes
        .iter()
        .zip(&class_used)
        .filter(|(_, used)| !**used)
        .map(|(c, _)| c.representative.label.clone())
        .collect();

    let mut findings = Vec::new();
    let expected = catalog_expected_count(n, field, commutative);
    match expected {
        Some(e) if e == records.len() => findings.push(format!(
            "computed {} classes; the catalog tables state {e} (agreement)",
            records.len()
        )),
        Some(e) => findings.push(format!(
            "computed {} classes but the catalog tables state {e} (DISAGREEMENT)",
            records.len()
        )),
        None => findings.push(format!(
            "computed {} classes; the catalog tables state no total for this run",
            records.len()
        )),
    }
    let class_count = classes.len();
    if class_count != presentation_count {
        findings.push(format!(
            "the {presentation_count} catalog presentations collapse to {class_count} \
             isomorphism classes"
        ));
    }
    for r in &unmatched_records {
        findings.push(format!(
            "computed class `{r}` matches no catalog presentation for this run"
        ));
    }
    for c in &unmatched_classes {
        findings.push(format!("catalog class `{c}` was not produced by the pipeline"));
    }

    let mut a45 = None;
    if n == 4 && commutative && field.characteristic() == 2 {
        let p0 = BTreeMap::from([("alpha".to_string(), FieldElement(0))]);
        let p1 = BTreeMap::from([("alpha".to_string(), FieldElement(1))]);
        let a0 = catalog::build("A_{4,5}", &p0, field)?;
        let a1 = catalog::build("A_{4,5}", &p1, field)?;
        let iso = are_isomorphic(&a0, &a1)?.is_some();
        a45 = Some(iso);
        findings.push(if iso {
            "oracle verdict: A_{4,5}^0 and A_{4,5}^1 are isomorphic (one class), although \
             the catalog lists them as separate presentations"
                .to_string()
        } else {
            "oracle verdict: A_{4,5}^0 and A_{4,5}^1 are not isomorphic".to_string()
        });
    }

    Ok(VerifyReport {
        dim: n,
        p: field.p(),
        m: field.m(),
        q: field.q(),
        commutative,
        computed_count: records.len(),
        catalog_expected_count: expected,
        presentation_count,
        presentation_class_count: class_count,
        matches,
        unmatched_records,
        unmatched_classes,
        a45_0_vs_1_isomorphic: a45,
        findings,
    })
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "# verification: dimension {}{} over GF({}{})",
            self.dim,
            if self.commutative { " commutative" } else { "" },
            self.p,
            if self.m > 1 { format!("^{}", self.m) } else { String::new() },
        )?;
        writeln!(f)?;
        writeln!(f, "computed classes:            {}", self.computed_count)?;
        match self.catalog_expected_count {
            Some(e) => writeln!(f, "catalog expected count:      {e}")?,
            None => writeln!(f, "catalog expected count:      (none stated)")?,
        }
        writeln!(f, "catalog presentations:       {}", self.presentation_count)?;
        writeln!(f, "presentation classes:        {}", self.presentation_class_count)?;
        writeln!(f)?;
        writeln!(f, "| record | catalog class | presentations in class |")?;
        writeln!(f, "|---|---|---|")?;
        for m in &self.matches {
            writeln!(
                f,
                "| {} | {} | {} |",
                m.record,
                m.catalog_class.as_deref().unwrap_or("(none)"),
                m.class_members.join(", "),
            )?;
        }
        writeln!(f)?;
        writeln!(f, "findings:")?;
        for line in &self.findings {
            writeln!(f, "- {line}")?;
        }
        Ok(())
    }
}

/// Markdown table for a classification run, one row per record, products
/// rendered with catalog-style basis letters.
pub fn records_markdown(records: &[ClassificationRecord]) -> String {
    let mut out = String::new();
    out.push_str("| label | multiplication | parent | orbit size |\n");
    out.push_str("|---|---|---|---|\n");
    for rec in records {
        let (parent, orbit_size) = match &rec.provenance {
            Provenance::Base => ("-".to_string(), "-".to_string()),
            Provenance::Extension { parent, s, orbit_size, .. } => {
                (format!("{parent} (s={s})"), orbit_size.to_string())
            }
            Provenance::DirectSum { summands } => {
                (summands.join(" \u{2295} "), "-".to_string())
            }
        };
        out.push_str(&format!(
            "| {} | {} | {} | {} |\n",
            rec.label,
            multiplication_table(&rec.algebra),
            parent,
            orbit_size,
        ));
    }
    out
}

/// Human-readable nonzero products, e.g. `a*b = c + 2d`.
pub fn multiplication_table(a: &Algebra) -> String {
    const LETTERS: [&str; 5] = ["a", "b", "c", "d", "e"];
    let mut parts = Vec::new();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let terms: Vec<String> = (0..a.dim())
                .filter(|&k| a.sc(i, j, k).0 != 0)
                .map(|k| {
                    let c = a.sc(i, j, k).0;
                    if c == 1 {
                        LETTERS[k].to_string()
                    } else {
                        format!("{c}{}", LETTERS[k])
                    }
                })
                .collect();
            if !terms.is_empty() {
                parts.push(format!("{}*{} = {}", LETTERS[i], LETTERS[j], terms.join(" + ")));
            }
        }
    }
    if parts.is_empty() {
        "(all products zero)".to_string()
    } else {
        parts.join("; ")
    }
}
