use ehrhart_core::eulerian::{
    a_j_polynomial_enumerate, b_l_polynomial_enumerate, b_polynomials, eulerian_a_enumerate, eulerian_b_enumerate,
};
use ehrhart_core::oracle::{count_series, ehrhart_via_oracle};
use ehrhart_core::polycore::{
    alternating_violation, count_distinct_real_roots, ehrhart_from_hstar, express_in_shifted_power_basis,
    first_asymmetry,
};
use ehrhart_core::zonotope::is_reflexive_by_ehrhart;
use ehrhart_core::{
    a_j_polynomial, a_polynomials, b_l_polynomial, ehrhart_zonotope, eulerian_a, eulerian_b, express_in_a_basis,
    hstar_typeb_zonotope, hstar_via_oracle, hstar_zonotope, is_in_zonotope_cone, is_real_rooted, is_unimodal,
    BoxValuationTable, GroundOrder, HStarVector, IntPolynomial, Matroid, Mode, Poly, RatPolynomial,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::error::{CliError, ExitKind};
use crate::input::{table_json, InputDocument};
use crate::json;
use crate::{EulerianMethod, Family, Method, Property};

fn oracle_table_check(doc: &InputDocument) -> Result<(), CliError> {
    if doc.explicit_table.is_some() {
        return Err(CliError::usage(
            "OracleNeedsDefaultTable",
            "the oracle counts lattice points; it cannot evaluate an explicit box_table",
        ));
    }
    Ok(())
}

fn disagreement(what: &str, formula: Value, oracle: Value) -> CliError {
    CliError::new(ExitKind::Disagreement, "MethodDisagreement", format!("formula and oracle {what} differ"))
        .with_details(json!({ "formula": formula, "oracle": oracle }))
}

pub fn ehrhart(doc: &InputDocument, method: Method) -> Result<Value, CliError> {
    let d = doc.spec.dim();
    let mut out = json!({
        "request": { "command": "ehrhart", "input": doc.echo(), "method": method.name() },
    });
    let formula = if method.uses_formula() {
        Some(ehrhart_zonotope(&doc.spec, &doc.table()?)?)
    } else {
        None
    };
    let oracle = if method.uses_oracle() {
        oracle_table_check(doc)?;
        let counts = count_series(&doc.spec, d as u64 + 1)?;
        out["counts"] = Value::Array(counts.counts().iter().map(json::int).collect());
        Some(ehrhart_via_oracle(&doc.spec)?)
    } else {
        None
    };
    let result: RatPolynomial = match (formula, oracle) {
        (Some(f), Some(o)) => {
            if f != o {
                return Err(disagreement("Ehrhart polynomials", json::poly(&f), json::poly(&o)));
            }
            out["agree"] = Value::Bool(true);
            f
        }
        (Some(f), None) => f,
        (None, Some(o)) => o,
        (None, None) => unreachable!("every method uses formula or oracle"),
    };
    out["ehrhart"] = json::poly(&result);
    Ok(out)
}

fn formula_hstar(doc: &InputDocument, table: &BoxValuationTable<BigRational>) -> Result<HStarVector<BigRational>, CliError> {
    Ok(match doc.spec.mode() {
        Mode::Standard => hstar_zonotope(&doc.spec, table)?,
        Mode::TypeB => hstar_typeb_zonotope(&doc.spec, table)?,
    })
}

pub fn hstar(doc: &InputDocument, method: Method, diagnostics: bool) -> Result<Value, CliError> {
    let mut out = json!({
        "request": {
            "command": "hstar",
            "diagnostics": diagnostics,
            "input": doc.echo(),
            "method": method.name(),
        },
    });
    let table = doc.table()?;
    let formula = if method.uses_formula() { Some(formula_hstar(doc, &table)?) } else { None };
    let oracle = if method.uses_oracle() {
        oracle_table_check(doc)?;
        Some(hstar_via_oracle(&doc.spec)?.to_rational())
    } else {
        None
    };
    let h = match (formula, oracle) {
        (Some(f), Some(o)) => {
            if f != o {
                return Err(disagreement("h* vectors", json::array(f.coeffs()), json::array(o.coeffs())));
            }
            out["agree"] = Value::Bool(true);
            f
        }
        (Some(f), None) => f,
        (None, Some(o)) => o,
        (None, None) => unreachable!("every method uses formula or oracle"),
    };
    out["hstar"] = json::array(h.coeffs());
    if doc.spec.mode() == Mode::Standard {
        out["c"] = Value::Array(express_in_a_basis(&h).iter().map(json::rational).collect());
    }
    if diagnostics {
        out["diagnostics"] = hstar_diagnostics(doc, &table)?;
    }
    Ok(out)
}

/// Bases with their internally passive sets, the box table, and for each
/// basis the terms `b(K)` feeding the refined Eulerian polynomial of index
/// `|IP(B) ∪ K| + 1`.
fn hstar_diagnostics(doc: &InputDocument, table: &BoxValuationTable<BigRational>) -> Result<Value, CliError> {
    let d = doc.spec.dim();
    let matroid = Matroid::new(doc.config());
    let mut multiplicities = vec![BigRational::zero(); d + 1];
    let mut bases = Vec::new();
    for (basis, passive) in matroid.bases_with_passive() {
        let mut terms = Vec::new();
        for (k, b) in table.iter().filter(|(k, _)| k.is_subset(basis)) {
            let index = passive.union(k).len() + 1;
            multiplicities[index - 1] += b;
            terms.push(json!({ "b": json::rational(b), "index": index, "set": json::set(k) }));
        }
        bases.push(json!({
            "basis": json::set(basis),
            "internally_passive": json::set(passive),
            "terms": terms,
        }));
    }
    let family = match doc.spec.mode() {
        Mode::Standard => "A",
        Mode::TypeB => "B",
    };
    Ok(json!({
        "bases": bases,
        "box_table": table_json(table),
        "eulerian_family": family,
        "multiplicities": multiplicities.iter().map(json::rational).collect::<Vec<_>>(),
        "rank": matroid.rank(),
    }))
}

/// Where the h* vector under test comes from.
pub enum CheckSource<'a> {
    File(&'a InputDocument),
    Literal { coeffs: Vec<BigRational>, degree: Option<usize> },
}

pub fn check(source: CheckSource<'_>, properties: &[Property]) -> Result<Value, CliError> {
    let mut request = Map::new();
    request.insert("command".into(), json!("check"));
    request.insert("properties".into(), json!(properties.iter().map(|p| p.name()).collect::<Vec<_>>()));
    let h = match source {
        CheckSource::File(doc) => {
            request.insert("input".into(), doc.echo());
            formula_hstar(doc, &doc.table()?)?
        }
        CheckSource::Literal { coeffs, degree } => {
            request.insert("hstar".into(), json::array(&coeffs));
            if let Some(d) = degree {
                request.insert("degree".into(), json!(d));
            }
            let d = degree.unwrap_or(coeffs.len().saturating_sub(1));
            HStarVector::from_poly(&Poly::new(coeffs), d)?
        }
    };
    let d = h.degree();
    let mut verdicts = Map::new();
    for &p in properties {
        verdicts.insert(p.name().into(), verdict(&h, p)?);
    }
    Ok(json!({
        "degree": d,
        "hstar": json::array(h.coeffs()),
        "properties": verdicts,
        "request": request,
    }))
}

fn verdict(h: &HStarVector<BigRational>, property: Property) -> Result<Value, CliError> {
    let d = h.degree();
    Ok(match property {
        Property::RealRooted => {
            let p = h.to_poly();
            json!({
                "degree": p.degree(),
                "distinct_real_roots": count_distinct_real_roots(&p)?,
                "holds": is_real_rooted(&p)?,
            })
        }
        Property::Unimodal => {
            let u = is_unimodal(h.coeffs())?;
            json!({ "holds": u.unimodal, "peaks": u.peaks, "violation": u.violation })
        }
        Property::AltInc => {
            let violation = alternating_violation(h.coeffs());
            json!({
                "holds": violation.is_none(),
                "violation": violation.map(|(i, j)| json!({
                    "inequality": format!("h_{i} <= h_{j}"),
                    "indices": [i, j],
                })),
            })
        }
        Property::Palindromic => {
            let first = first_asymmetry(h.coeffs());
            json!({ "first_asymmetry": first, "holds": first.is_none() })
        }
        Property::Reflexive => {
            let ehr = ehrhart_from_hstar(h);
            let coords = express_in_shifted_power_basis(&ehr, d)?;
            json!({
                "holds": is_reflexive_by_ehrhart(&ehr, d)?,
                "shifted_power_coordinates": json::array(&coords),
            })
        }
        Property::Cone => {
            let c = express_in_a_basis(h);
            json!({
                "c": c.iter().map(json::rational).collect::<Vec<_>>(),
                "holds": is_in_zonotope_cone(h),
            })
        }
    })
}

fn unsupported(family: Family, indexed: bool, method: EulerianMethod) -> CliError {
    let what = if indexed { "refined" } else { "full" };
    CliError::usage(
        "UnsupportedMethod",
        format!("method {} is not available for the {what} {} family", method.name(), family.name()),
    )
}

pub fn eulerian(
    family: Family,
    d: usize,
    index: Option<usize>,
    method: Option<EulerianMethod>,
) -> Result<Value, CliError> {
    use EulerianMethod::*;
    if d == 0 {
        return Err(CliError::math("IndexOutOfRange", "d must be at least 1"));
    }
    let method = method.unwrap_or(match (family, index) {
        (Family::B, Some(_)) => Identity,
        _ => Recurrence,
    });
    let p: IntPolynomial = match (family, index, method) {
        (Family::A, Some(j), Recurrence) => a_j_polynomial(d, j)?,
        (Family::A, Some(j), Enumerate) => a_j_polynomial_enumerate(d, j)?,
        (Family::A, None, Recurrence) => eulerian_a(d)?,
        (Family::A, None, Enumerate) => eulerian_a_enumerate(d)?,
        (Family::A, None, Identity) => a_polynomials(d).iter().fold(Poly::zero(), |acc, a| &acc + a),
        (Family::B, Some(l), Identity) => b_l_polynomial(d, l)?,
        (Family::B, Some(l), Enumerate) => b_l_polynomial_enumerate(d, l)?,
        (Family::B, None, Recurrence) => eulerian_b(d)?,
        (Family::B, None, Enumerate) => eulerian_b_enumerate(d)?,
        (Family::B, None, Identity) => {
            // signed permutations split by the sign of the last letter;
            // negating every sign sends des to d - des
            let positive = b_polynomials(d).iter().fold(Poly::zero(), |acc, b| &acc + b);
            &positive + &positive.reversed(d)?
        }
        (family, index, method) => return Err(unsupported(family, index.is_some(), method)),
    };
    let total: BigInt = p.coeff_sum();
    Ok(json!({
        "coefficients": json::poly(&p),
        "request": {
            "command": "eulerian",
            "d": d,
            "family": family.name(),
            "index": index,
            "method": method.name(),
        },
        "value_at_one": json::int(&total),
    }))
}

pub fn matroid(doc: &InputDocument, reverse: bool) -> Result<Value, CliError> {
    let order = if reverse { GroundOrder::Reversed } else { GroundOrder::Natural };
    let config = doc.config().with_order(order);
    let matroid = Matroid::new(&config);
    let (bases, passive): (Vec<Value>, Vec<Value>) =
        matroid.bases_with_passive().map(|(b, ip)| (json::set(b), json::set(ip))).unzip();
    let mut out = json!({
        "bases": bases,
        "coloop_free": config.is_coloop_free(),
        "coloops": json::set(config.coloops()),
        "independent_sets": matroid.independent_sets().iter().map(|&s| json::set(s)).collect::<Vec<_>>(),
        "internally_passive": passive,
        "rank": matroid.rank(),
        "request": {
            "command": "matroid",
            "input": doc.echo(),
            "order": if reverse { "reversed" } else { "natural" },
        },
    });
    if matroid.rank() == 0 {
        out["note"] = json!("rank 0: every generator is a loop and the empty set is the only basis");
    }
    Ok(out)
}
