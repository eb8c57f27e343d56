//! JSON serialization of the on-disk formats.
//!
//! Expansions and Fock series share one shape (the Fock side carries a
//! `"space": "fock"` tag); sampled functions record their quadrature order
//! and the gaussian-factored weighting convention. Term lists are written
//! in graded-lexicographic order and duplicate indices are rejected on
//! load.

use serde::{Deserialize, Serialize};

use crate::fock::{FockSeries, SampledFunction};
use crate::hermite::HermiteExpansion;
use crate::multi_index::MultiIndex;
use crate::quadrature::gauss_hermite;
use crate::radial::{RadialProfile, RadialReport};
use crate::scalar::{Cx, Scalar};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema error: {0}")]
    Schema(String),
}

fn schema(msg: impl Into<String>) -> IoError {
    IoError::Schema(msg.into())
}

#[derive(Serialize, Deserialize)]
struct TermDto {
    alpha: Vec<u32>,
    re: f64,
    im: f64,
}

#[derive(Serialize, Deserialize)]
struct ExpansionDto {
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    space: Option<String>,
    terms: Vec<TermDto>,
}

#[derive(Serialize, Deserialize)]
struct SampledDto {
    dim: usize,
    n: usize,
    weighting: String,
    values_re: Vec<f64>,
    values_im: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct ComplexDto {
    re: f64,
    im: f64,
}

#[derive(Serialize, Deserialize)]
struct ProfileDto {
    origin_dim: usize,
    c: Vec<ComplexDto>,
}

#[derive(Serialize, Deserialize)]
struct ReportDto {
    is_radial: bool,
    odd_mass: f64,
    shell_deviations: Vec<f64>,
    profile: Option<Vec<ComplexDto>>,
    tol: f64,
}

fn to_f64<R: Scalar>(x: R) -> f64 {
    x.to_f64().expect("scalar convertible to f64")
}

fn terms_dto<'a, R: Scalar>(
    terms: impl Iterator<Item = (&'a MultiIndex, &'a Cx<R>)>,
) -> Vec<TermDto> {
    terms
        .map(|(alpha, c)| TermDto {
            alpha: alpha.exponents().to_vec(),
            re: to_f64(c.re),
            im: to_f64(c.im),
        })
        .collect()
}

fn parse_terms<R: Scalar>(dto: &ExpansionDto) -> Result<Vec<(MultiIndex, Cx<R>)>, IoError> {
    if dto.dim < 1 {
        return Err(schema("dim must be at least 1"));
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::with_capacity(dto.terms.len());
    for t in &dto.terms {
        if t.alpha.len() != dto.dim {
            return Err(schema(format!(
                "alpha length {} does not match dim {}",
                t.alpha.len(),
                dto.dim
            )));
        }
        if !t.re.is_finite() || !t.im.is_finite() {
            return Err(schema("non-finite coefficient"));
        }
        let alpha = MultiIndex::new(t.alpha.clone());
        if !seen.insert(alpha.clone()) {
            return Err(schema(format!("duplicate alpha {alpha}")));
        }
        out.push((alpha, Cx::new(R::of(t.re), R::of(t.im))));
    }
    Ok(out)
}

pub fn expansion_to_json<R: Scalar>(f: &HermiteExpansion<R>) -> String {
    let dto = ExpansionDto {
        dim: f.dim(),
        space: None,
        terms: terms_dto(f.terms()),
    };
    serde_json::to_string_pretty(&dto).expect("serializable")
}

pub fn expansion_from_json<R: Scalar>(s: &str) -> Result<HermiteExpansion<R>, IoError> {
    let dto: ExpansionDto = serde_json::from_str(s)?;
    if let Some(space) = &dto.space {
        if space != "l2" {
            return Err(schema(format!(
                "expected a position-side expansion, found space tag {space:?}"
            )));
        }
    }
    let terms = parse_terms::<R>(&dto)?;
    let bound = terms.iter().map(|(a, _)| a.degree()).max().unwrap_or(0);
    let mut f = HermiteExpansion::new(dto.dim, bound);
    for (alpha, c) in terms {
        f.set(alpha, c).expect("validated term");
    }
    Ok(f)
}

pub fn fock_to_json<R: Scalar>(f: &FockSeries<R>) -> String {
    let dto = ExpansionDto {
        dim: f.dim(),
        space: Some("fock".to_string()),
        terms: terms_dto(f.terms()),
    };
    serde_json::to_string_pretty(&dto).expect("serializable")
}

pub fn fock_from_json<R: Scalar>(s: &str) -> Result<FockSeries<R>, IoError> {
    let dto: ExpansionDto = serde_json::from_str(s)?;
    match dto.space.as_deref() {
        Some("fock") => {}
        other => {
            return Err(schema(format!(
                "expected space tag \"fock\", found {other:?}"
            )))
        }
    }
    let terms = parse_terms::<R>(&dto)?;
    let bound = terms.iter().map(|(a, _)| a.degree()).max().unwrap_or(0);
    let mut f = FockSeries::new(dto.dim, bound);
    for (alpha, c) in terms {
        f.set(alpha, c).expect("validated term");
    }
    Ok(f)
}

pub fn sampled_to_json<R: Scalar>(f: &SampledFunction<R>) -> String {
    let dto = SampledDto {
        dim: f.dim(),
        n: f.order(),
        weighting: "gaussian-factored".to_string(),
        values_re: f.values().iter().map(|c| to_f64(c.re)).collect(),
        values_im: f.values().iter().map(|c| to_f64(c.im)).collect(),
    };
    serde_json::to_string_pretty(&dto).expect("serializable")
}

pub fn sampled_from_json<R: Scalar>(s: &str) -> Result<SampledFunction<R>, IoError> {
    let dto: SampledDto = serde_json::from_str(s)?;
    if dto.weighting != "gaussian-factored" {
        return Err(schema(format!(
            "unsupported weighting {:?}; expected \"gaussian-factored\"",
            dto.weighting
        )));
    }
    if dto.dim < 1 || dto.n < 1 {
        return Err(schema("dim and n must be at least 1"));
    }
    if dto.values_re.len() != dto.values_im.len() {
        return Err(schema("values_re and values_im lengths differ"));
    }
    let values: Vec<Cx<R>> = dto
        .values_re
        .iter()
        .zip(&dto.values_im)
        .map(|(&re, &im)| Cx::new(R::of(re), R::of(im)))
        .collect();
    SampledFunction::from_values(dto.dim, gauss_hermite::<R>(dto.n), values)
        .map_err(|e| schema(e.to_string()))
}

pub fn profile_to_json<R: Scalar>(p: &RadialProfile<R>) -> String {
    let dto = ProfileDto {
        origin_dim: p.origin_dim,
        c: p.c
            .iter()
            .map(|v| ComplexDto {
                re: to_f64(v.re),
                im: to_f64(v.im),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&dto).expect("serializable")
}

pub fn profile_from_json<R: Scalar>(s: &str) -> Result<RadialProfile<R>, IoError> {
    let dto: ProfileDto = serde_json::from_str(s)?;
    if dto.origin_dim < 1 {
        return Err(schema("origin_dim must be at least 1"));
    }
    if dto.c.is_empty() {
        return Err(schema("profile must have at least one coefficient"));
    }
    Ok(RadialProfile::new(
        dto.origin_dim,
        dto.c
            .iter()
            .map(|v| Cx::new(R::of(v.re), R::of(v.im)))
            .collect(),
    ))
}

pub fn report_to_json<R: Scalar>(r: &RadialReport<R>) -> String {
    let dto = ReportDto {
        is_radial: r.is_radial,
        odd_mass: to_f64(r.odd_mass),
        shell_deviations: r.shell_deviations.iter().map(|&d| to_f64(d)).collect(),
        profile: r.profile.as_ref().map(|p| {
            p.c.iter()
                .map(|v| ComplexDto {
                    re: to_f64(v.re),
                    im: to_f64(v.im),
                })
                .collect()
        }),
        tol: to_f64(r.tol),
    };
    serde_json::to_string_pretty(&dto).expect("serializable")
}
