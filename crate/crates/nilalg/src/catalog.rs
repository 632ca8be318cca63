//! The catalog of named presentations: multiplication tables for the known
//! isomorphism classes in dimensions 1 to 4, with their admissible
//! parameter ranges. The classifier uses these for labelling its output and
//! the verifier replays them as the reference lists.
//!
//! Basis letters `a, b, c, d` correspond to indices `0..4`; only nonzero
//! products are stated. Parameters are field elements given by encoding.

use std::collections::BTreeMap;

use crate::algebra::Algebra;
use crate::field::{FieldElement, FieldSpec};
use crate::{Error, Result};

/// Static description of one catalog family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EntryMeta {
    pub name: &'static str,
    pub dim: usize,
    /// Parameter names in the order they appear in labels.
    pub params: &'static [&'static str],
}

const ENTRIES: &[EntryMeta] = &[
    EntryMeta { name: "A_{1,1}", dim: 1, params: &[] },
    EntryMeta { name: "A_{2,1}", dim: 2, params: &[] },
    EntryMeta { name: "A_{2,2}", dim: 2, params: &[] },
    EntryMeta { name: "A_{3,1}", dim: 3, params: &[] },
    EntryMeta { name: "A_{3,2}", dim: 3, params: &[] },
    EntryMeta { name: "A_{3,3}", dim: 3, params: &["alpha"] },
    EntryMeta { name: "A_{3,4}", dim: 3, params: &["alpha"] },
    EntryMeta { name: "A_{3,5}", dim: 3, params: &[] },
    EntryMeta { name: "A_{3,6}", dim: 3, params: &[] },
    EntryMeta { name: "A_{4,1}", dim: 4, params: &[] },
    EntryMeta { name: "A_{4,2}", dim: 4, params: &[] },
    EntryMeta { name: "A_{4,3}", dim: 4, params: &["alpha"] },
    EntryMeta { name: "A_{4,4}", dim: 4, params: &[] },
    EntryMeta { name: "A_{4,5}", dim: 4, params: &["alpha"] },
    EntryMeta { name: "A_{4,6}", dim: 4, params: &["alpha", "beta"] },
    EntryMeta { name: "A_{4,7}", dim: 4, params: &[] },
    EntryMeta { name: "A_{4,8}", dim: 4, params: &[] },
    EntryMeta { name: "B_{4,1}", dim: 4, params: &["alpha"] },
];

pub fn entries() -> &'static [EntryMeta] {
    ENTRIES
}

pub fn entry(name: &str) -> Result<&'static EntryMeta> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownCatalogEntry(name.to_string()))
}

fn get_param(
    meta: &EntryMeta,
    params: &BTreeMap<String, FieldElement>,
    name: &str,
) -> Result<FieldElement> {
    params
        .get(name)
        .copied()
        .ok_or_else(|| Error::InvalidParameter(format!("{} requires `{name}`", meta.name)))
}

/// Build a catalog algebra over `field` with the given parameters.
pub fn build(
    name: &str,
    params: &BTreeMap<String, FieldElement>,
    field: &FieldSpec,
) -> Result<Algebra> {
    let meta = entry(name)?;
    for key in params.keys() {
        if !meta.params.contains(&key.as_str()) {
            return Err(Error::InvalidParameter(format!(
                "{} does not take `{key}`",
                meta.name
            )));
        }
    }
    for value in params.values() {
        if value.0 >= field.q() {
            return Err(Error::InvalidParameter(format!(
                "parameter encoding {} out of range for field of order {}",
                value.0,
                field.q()
            )));
        }
    }
    let one = field.element(1);
    let nonzero = |x: FieldElement, what: &str| -> Result<FieldElement> {
        if x.0 == 0 {
            Err(Error::InvalidParameter(format!("{name} requires {what} != 0")))
        } else {
            Ok(x)
        }
    };
    let a = match name {
        "A_{1,1}" => Algebra::zero(field.clone(), 1),
        "A_{2,1}" => Algebra::zero(field.clone(), 2),
        "A_{2,2}" => Algebra::from_products(field.clone(), 2, &[(0, 0, vec![(1, one)])]),
        "A_{3,1}" => Algebra::zero(field.clone(), 3),
        "A_{3,2}" => Algebra::from_products(field.clone(), 3, &[(0, 0, vec![(1, one)])]),
        "A_{3,3}" => {
            let alpha = nonzero(get_param(meta, params, "alpha")?, "alpha")?;
            Algebra::from_products(
                field.clone(),
                3,
                &[(0, 0, vec![(2, alpha)]), (1, 1, vec![(2, one)])],
            )
        }
        "A_{3,4}" => {
            let alpha = get_param(meta, params, "alpha")?;
            Algebra::from_products(
                field.clone(),
                3,
                &[
                    (0, 0, vec![(2, alpha)]),
                    (1, 1, vec![(2, one)]),
                    (0, 1, vec![(2, one)]),
                ],
            )
        }
        "A_{3,5}" => Algebra::from_products(
            field.clone(),
            3,
            &[
                (0, 1, vec![(2, one)]),
                (1, 0, vec![(2, field.neg(one))]),
            ],
        ),
        "A_{3,6}" => Algebra::from_products(
            field.clone(),
            3,
            &[
                (0, 0, vec![(1, one)]),
                (0, 1, vec![(2, one)]),
                (1, 0, vec![(2, one)]),
            ],
        ),
        "A_{4,1}" => Algebra::zero(field.clone(), 4),
        "A_{4,2}" => Algebra::from_products(field.clone(), 4, &[(0, 0, vec![(1, one)])]),
        "A_{4,3}" => {
            let alpha = nonzero(get_param(meta, params, "alpha")?, "alpha")?;
            Algebra::from_products(
                field.clone(),
                4,
                &[(0, 0, vec![(2, alpha)]), (1, 1, vec![(2, one)])],
            )
        }
        "A_{4,4}" => Algebra::from_products(
            field.clone(),
            4,
            &[
                (0, 0, vec![(1, one)]),
                (0, 1, vec![(2, one)]),
                (1, 0, vec![(2, one)]),
            ],
        ),
        "A_{4,5}" => {
            let alpha = get_param(meta, params, "alpha")?;
            let minus_alpha = field.neg(alpha);
            let mut products = vec![
                (0, 1, vec![(3, one)]),
                (1, 0, vec![(3, one)]),
                (1, 1, vec![(2, one)]),
            ];
            if minus_alpha.0 != 0 {
                products.push((0, 0, vec![(2, minus_alpha)]));
            }
            Algebra::from_products(field.clone(), 4, &products)
        }
        "A_{4,6}" => {
            let alpha = nonzero(get_param(meta, params, "alpha")?, "alpha")?;
            let beta = nonzero(get_param(meta, params, "beta")?, "beta")?;
            Algebra::from_products(
                field.clone(),
                4,
                &[
                    (0, 0, vec![(3, one)]),
                    (1, 1, vec![(3, alpha)]),
                    (2, 2, vec![(3, beta)]),
                ],
            )
        }
        "A_{4,7}" => Algebra::from_products(
            field.clone(),
            4,
            &[
                (0, 0, vec![(1, one)]),
                (0, 1, vec![(3, one)]),
                (1, 0, vec![(3, one)]),
                (2, 2, vec![(3, one)]),
            ],
        ),
        "A_{4,8}" => Algebra::from_products(
            field.clone(),
            4,
            &[
                (0, 0, vec![(1, one)]),
                (0, 1, vec![(2, one)]),
                (1, 0, vec![(2, one)]),
                (0, 2, vec![(3, one)]),
                (2, 0, vec![(3, one)]),
                (1, 1, vec![(3, one)]),
            ],
        ),
        "B_{4,1}" => {
            let alpha = get_param(meta, params, "alpha")?;
            let mut ab = vec![(2, one)];
            if alpha.0 != 0 {
                ab.push((3, alpha));
            }
            Algebra::from_products(
                field.clone(),
                4,
                &[
                    (0, 0, vec![(2, one)]),
                    (0, 1, ab.clone()),
                    (1, 0, ab),
                    (1, 1, vec![(3, one)]),
                ],
            )
        }
        _ => unreachable!("entry() already validated the name"),
    };
    let mut a = a;
    let letters = ["a", "b", "c", "d", "e"];
    a.set_labels(Some(letters[..a.dim()].iter().map(|s| s.to_string()).collect()));
    Ok(a)
}

/// Display label for an instantiation, e.g. `A_{3,3}^2` or `A_{4,6}^{1,2}`.
pub fn label(name: &str, params: &BTreeMap<String, FieldElement>) -> String {
    let meta = match entry(name) {
        Ok(m) => m,
        Err(_) => return name.to_string(),
    };
    match meta.params.len() {
        0 => name.to_string(),
        1 => format!("{}^{}", name, params[meta.params[0]].0),
        _ => {
            let vals: Vec<String> =
                meta.params.iter().map(|p| params[*p].0.to_string()).collect();
            format!("{}^{{{}}}", name, vals.join(","))
        }
    }
}

/// One instantiated presentation.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub label: String,
    pub name: &'static str,
    pub params: BTreeMap<String, FieldElement>,
    pub algebra: Algebra,
}

/// All presentations of the given dimension over `field`, each parameter
/// running through its admissible range, in deterministic order. With
/// `commutative_only` set, presentations that are not commutative over this
/// field are dropped (so in characteristic 2 the table of `A_{3,5}` stays).
/// `B_{4,1}` is listed only in characteristic 2.
pub fn instantiate_all(dim: usize, field: &FieldSpec, commutative_only: bool) -> Vec<Presentation> {
    let mut out = Vec::new();
    for meta in ENTRIES.iter().filter(|e| e.dim == dim) {
        if meta.name == "B_{4,1}" && field.characteristic() != 2 {
            continue;
        }
        for params in admissible_params(meta, field) {
            let algebra = build(meta.name, &params, field)
                .expect("admissible parameters always build");
            if commutative_only && !algebra.is_commutative() {
                continue;
            }
            out.push(Presentation {
                label: label(meta.name, &params),
                name: meta.name,
                params,
                algebra,
            });
        }
    }
    out
}

/// The admissible parameter assignments of a family over a field, in
/// ascending encoding order.
pub fn admissible_params(
    meta: &EntryMeta,
    field: &FieldSpec,
) -> Vec<BTreeMap<String, FieldElement>> {
    let range = |needs_nonzero: bool| -> Vec<FieldElement> {
        field
            .elements()
            .filter(|e| !needs_nonzero || e.0 != 0)
            .collect()
    };
    match meta.name {
        "A_{3,3}" | "A_{4,3}" => range(true)
            .into_iter()
            .map(|v| BTreeMap::from([("alpha".to_string(), v)]))
            .collect(),
        "A_{3,4}" | "A_{4,5}" | "B_{4,1}" => range(false)
            .into_iter()
            .map(|v| BTreeMap::from([("alpha".to_string(), v)]))
            .collect(),
        "A_{4,6}" => {
            let mut out = Vec::new();
            for a in range(true) {
                for b in range(true) {
                    out.push(BTreeMap::from([
                        ("alpha".to_string(), a),
                        ("beta".to_string(), b),
                    ]));
                }
            }
            out
        }
        _ => vec![BTreeMap::new()],
    }
}
