//! Structured-text documents (JSON) for every input and output format.
//!
//! Rationals travel as exact strings like `"3/2"` or `"-4"`, never as
//! floats, so round trips are lossless and structured output is
//! byte-deterministic for identical invocations.

use crate::decimal::Decimal;
use crate::error::{Error, Result};
use crate::lattice::{DependenceWitness, PointSet, Polytope};
use crate::mixed::{InequalityReport, ReportValue};
use crate::bkk::RootCount;
use num::{BigInt, BigRational};
use serde::{Deserialize, Serialize};
use std::str::FromStr;

pub fn parse_rational(text: &str) -> Result<BigRational> {
    BigRational::from_str(text.trim()).map_err(|_| Error::BadRational {
        text: text.to_string(),
    })
}

pub fn format_rational(q: &BigRational) -> String {
    q.to_string()
}

/// A polytope or point set: `dim` plus a list of exact rational vectors.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointsDoc {
    pub dim: usize,
    pub points: Vec<Vec<String>>,
}

/// Several bodies sharing one ambient dimension (n-tuples stay atomic).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BodiesDoc {
    pub dim: usize,
    pub bodies: Vec<Vec<Vec<String>>>,
}

/// Formal differences of bodies.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VirtualsDoc {
    pub dim: usize,
    pub virtuals: Vec<VirtualEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VirtualEntry {
    pub plus: Vec<Vec<String>>,
    pub minus: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ValueDoc {
    pub value: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportDoc {
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
    pub exact: bool,
    pub margin: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub dependent: bool,
    pub subset: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CountDoc {
    pub value: String,
    pub method: String,
}

pub fn points_from_doc(doc: &PointsDoc) -> Result<Vec<Vec<BigRational>>> {
    doc.points
        .iter()
        .map(|p| p.iter().map(|s| parse_rational(s)).collect())
        .collect()
}

pub fn polytope_from_doc(doc: &PointsDoc) -> Result<Polytope> {
    Polytope::from_points(doc.dim, points_from_doc(doc)?)
}

pub fn pointset_from_doc(doc: &PointsDoc) -> Result<PointSet> {
    let rational = points_from_doc(doc)?;
    let mut integral = Vec::with_capacity(rational.len());
    for p in &rational {
        let mut row = Vec::with_capacity(p.len());
        for c in p {
            if !c.is_integer() {
                return Err(Error::BadRational {
                    text: format!("{c} (integer lattice point expected)"),
                });
            }
            row.push(c.to_integer());
        }
        integral.push(row);
    }
    PointSet::new(doc.dim, integral)
}

pub fn polytope_to_doc(p: &Polytope) -> PointsDoc {
    PointsDoc {
        dim: p.ambient_dim(),
        points: p
            .vertices()
            .iter()
            .map(|v| v.iter().map(format_rational).collect())
            .collect(),
    }
}

pub fn pointset_to_doc(s: &PointSet) -> PointsDoc {
    PointsDoc {
        dim: s.dim(),
        points: s
            .points()
            .iter()
            .map(|p| p.iter().map(BigInt::to_string).collect())
            .collect(),
    }
}

pub fn bodies_from_doc(doc: &BodiesDoc) -> Result<Vec<Polytope>> {
    doc.bodies
        .iter()
        .map(|body| {
            let sub = PointsDoc {
                dim: doc.dim,
                points: body.clone(),
            };
            polytope_from_doc(&sub)
        })
        .collect()
}

pub fn supports_from_doc(doc: &BodiesDoc) -> Result<Vec<PointSet>> {
    doc.bodies
        .iter()
        .map(|body| {
            let sub = PointsDoc {
                dim: doc.dim,
                points: body.clone(),
            };
            pointset_from_doc(&sub)
        })
        .collect()
}

pub fn virtuals_from_doc(doc: &VirtualsDoc) -> Result<Vec<crate::mixed::VirtualPolytope>> {
    doc.virtuals
        .iter()
        .map(|entry| {
            let plus = polytope_from_doc(&PointsDoc {
                dim: doc.dim,
                points: entry.plus.clone(),
            })?;
            let minus = polytope_from_doc(&PointsDoc {
                dim: doc.dim,
                points: entry.minus.clone(),
            })?;
            crate::mixed::VirtualPolytope::new(plus, minus)
        })
        .collect()
}

fn report_value_string(v: &ReportValue) -> String {
    match v {
        ReportValue::Rational(q) => format_rational(q),
        ReportValue::Decimal(d) => d.to_string(),
    }
}

pub fn report_to_doc(r: &InequalityReport) -> ReportDoc {
    ReportDoc {
        lhs: report_value_string(&r.lhs),
        rhs: report_value_string(&r.rhs),
        holds: r.holds,
        exact: r.exact,
        margin: report_value_string(&r.margin),
    }
}

pub fn witness_to_doc(w: &DependenceWitness) -> WitnessDoc {
    WitnessDoc {
        dependent: w.dependent,
        subset: w.subset.clone(),
    }
}

pub fn count_to_doc(c: &RootCount) -> CountDoc {
    CountDoc {
        value: c.value.to_string(),
        method: c.method.name().to_string(),
    }
}

pub fn decimal_to_value_doc(d: &Decimal) -> ValueDoc {
    ValueDoc {
        value: d.to_string(),
    }
}

pub fn rational_to_value_doc(q: &BigRational) -> ValueDoc {
    ValueDoc {
        value: format_rational(q),
    }
}
