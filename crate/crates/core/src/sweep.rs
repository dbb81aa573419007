//! Hull strata over the projective line of parameters `(lambda : mu)`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, FieldTower};
use crate::frob::FrobFamily;
use crate::gram::{canonical_representative, gram_of_operator, hull_by_adjoint, hull_dim};
use crate::linops::QPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParamField {
    Base,
    Top,
}

impl fmt::Display for ParamField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParamField::Base => "base",
            ParamField::Top => "top",
        })
    }
}

impl std::str::FromStr for ParamField {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "base" => Ok(ParamField::Base),
            "top" => Ok(ParamField::Top),
            _ => Err(Error::Parse(format!("unknown parameter field `{s}` (expected base or top)"))),
        }
    }
}

/// `lambda X + mu L` for a Frobenius twist or an arbitrary `L`.
#[derive(Clone, Debug)]
pub enum Family {
    Frobenius(FrobFamily),
    General(QPoly),
}

impl Family {
    pub fn frobenius(tower: &FieldTower, k: u32) -> Result<Self> {
        Ok(Family::Frobenius(FrobFamily::new(tower, k)?))
    }

    pub fn operator(&self, tower: &FieldTower, lambda: Elem, mu: Elem) -> QPoly {
        match self {
            Family::Frobenius(f) => f.phi(tower, lambda, mu),
            Family::General(l) => QPoly::identity(tower)
                .scale(tower, lambda)
                .add(tower, &l.scale(tower, mu))
                .expect("same tower"),
        }
    }

    fn describe(&self, tower: &FieldTower) -> String {
        match self {
            Family::Frobenius(f) => format!("lambda*X + mu*X^(q^{})", f.k),
            Family::General(l) => {
                let terms: Vec<String> = l
                    .coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, &c)| format!("({})*X^(q^{i})", tower.render(c)))
                    .collect();
                format!("lambda*X + mu*[{}]", if terms.is_empty() { "0".into() } else { terms.join(" + ") })
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointRecord {
    /// `infty` for `(1:0)`, otherwise the rendering of `rho` for `(rho:1)`.
    pub key: String,
    pub lambda: Elem,
    pub mu: Elem,
    pub dim_code: usize,
    pub hull_dim: usize,
    pub bijective: bool,
    /// Only for the Frobenius family.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eps: Option<(bool, bool)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub isotropic: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Descriptor {
    pub p: u32,
    pub r: u32,
    pub m: u32,
    pub q: u64,
    pub field: ParamField,
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StrataTable {
    pub descriptor: Descriptor,
    /// Hull dimension to number of projective points.
    pub counts: BTreeMap<usize, usize>,
    pub total: usize,
    pub lcd_density: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub records: Option<Vec<PointRecord>>,
}

impl StrataTable {
    pub fn count(&self, h: usize) -> usize {
        self.counts.get(&h).copied().unwrap_or(0)
    }

    pub fn non_bijective(&self) -> Option<usize> {
        self.records.as_ref().map(|r| r.iter().filter(|p| !p.bijective).count())
    }
}

fn parameter_values(tower: &FieldTower, field: ParamField, cap: u64) -> Result<Vec<Elem>> {
    let size = match field {
        ParamField::Base => tower.q(),
        ParamField::Top => tower.top().order(),
    };
    if size > cap {
        return Err(Error::SizeCapExceeded { size: size as u128, cap });
    }
    Ok(match field {
        ParamField::Base => tower.base().elements().map(|x| tower.from_base(x)).collect(),
        ParamField::Top => tower.top().elements().collect(),
    })
}

/// Hull at one parameter pair. Base-field pairs of a general family use the
/// Gram rank difference; everything else goes through the adjoint.
pub fn evaluate_point(
    tower: &FieldTower,
    family: &Family,
    field: ParamField,
    lambda: Elem,
    mu: Elem,
) -> Result<PointRecord> {
    let key = if mu.is_zero() { "infty".to_string() } else { tower.render(tower.top().div(lambda, mu).unwrap()) };
    match family {
        Family::Frobenius(fam) => {
            let r = fam.hull(tower, lambda, mu)?;
            Ok(PointRecord {
                key,
                lambda,
                mu,
                dim_code: r.dim_code,
                hull_dim: r.hull_dim,
                bijective: !r.eps1,
                eps: Some((r.eps1, r.eps2)),
                isotropic: r.isotropic,
            })
        }
        Family::General(_) => {
            let phi = family.operator(tower, lambda, mu);
            let rank = phi.rank(tower);
            let hull = match field {
                ParamField::Base if rank > 0 => hull_dim(tower, &phi, tower.polynomial_basis())?.hull_dim,
                _ => hull_by_adjoint(tower, &phi)?,
            };
            Ok(PointRecord {
                key,
                lambda,
                mu,
                dim_code: rank,
                hull_dim: hull,
                bijective: rank == tower.m() as usize,
                eps: None,
                isotropic: None,
            })
        }
    }
}

/// Sweeps `(1:0)` and then `(rho:1)` in field enumeration order.
pub fn sweep_p1(
    tower: &FieldTower,
    family: &Family,
    field: ParamField,
    cap: u64,
    keep_records: bool,
) -> Result<StrataTable> {
    let mut points = vec![(Elem::ONE, Elem::ZERO)];
    points.extend(parameter_values(tower, field, cap)?.into_iter().map(|rho| (rho, Elem::ONE)));
    let records: Vec<PointRecord> = points
        .par_iter()
        .map(|&(l, m)| evaluate_point(tower, family, field, l, m))
        .collect::<Result<_>>()?;
    let mut counts = BTreeMap::new();
    for r in &records {
        *counts.entry(r.hull_dim).or_insert(0) += 1;
    }
    let total = records.len();
    let lcd_density = counts.get(&0).copied().unwrap_or(0) as f64 / total as f64;
    let (k, d) = match family {
        Family::Frobenius(f) => (Some(f.k), Some(f.d)),
        Family::General(_) => (None, None),
    };
    Ok(StrataTable {
        descriptor: Descriptor {
            p: tower.p(),
            r: tower.r(),
            m: tower.m(),
            q: tower.q(),
            field,
            family: family.describe(tower),
            k,
            d,
        },
        counts,
        total,
        lcd_density,
        records: keep_records.then_some(records),
    })
}

/// `N_delta` over nonzero affine pairs `(lambda, mu)` of the chosen field.
///
/// For base-field pairs every projective point contributes exactly `q - 1`
/// pairs, which is checked against the projective table. For top-field pairs
/// only `F_q^*` scaling preserves the code, so the count is done pair by pair.
pub fn spectrum_affine(
    tower: &FieldTower,
    family: &Family,
    field: ParamField,
    cap: u64,
) -> Result<BTreeMap<usize, usize>> {
    let values = parameter_values(tower, field, cap)?;
    let pairs: Vec<(Elem, Elem)> = values
        .iter()
        .flat_map(|&l| values.iter().map(move |&m| (l, m)))
        .filter(|(l, m)| !(l.is_zero() && m.is_zero()))
        .collect();
    let hulls: Vec<usize> = pairs
        .par_iter()
        .map(|&(l, m)| evaluate_point(tower, family, field, l, m).map(|r| r.hull_dim))
        .collect::<Result<_>>()?;
    let mut counts = BTreeMap::new();
    for h in hulls {
        *counts.entry(h).or_insert(0usize) += 1;
    }
    let units = (tower.q() - 1) as usize;
    if counts.values().any(|&n| n % units != 0) {
        return Err(Error::Inconsistency("affine counts are not unions of F_q^* orbits".into()));
    }
    if field == ParamField::Base {
        let table = sweep_p1(tower, family, field, cap, false)?;
        let scaled: BTreeMap<usize, usize> = table.counts.iter().map(|(&h, &n)| (h, n * units)).collect();
        if scaled != counts {
            return Err(Error::Inconsistency("affine spectrum differs from (q-1) x projective strata".into()));
        }
    }
    Ok(counts)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EbitRow {
    pub ebits: usize,
    pub codes: usize,
    /// Frobenius family only: `(eps1, eps2)` case labels like `"11"` with their counts.
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub cases: BTreeMap<String, usize>,
    /// Frobenius family only: `"d"`, `"2d"` or empty.
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub multiple_of_d: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EbitReport {
    pub rows: Vec<EbitRow>,
    pub zero_cost_fraction: f64,
}

/// Entanglement cost per stratum: a code with hull dimension `h` needs `h` ebits.
pub fn ebit_report(table: &StrataTable) -> EbitReport {
    let d = table.descriptor.d.map(|d| d as usize);
    let rows = table
        .counts
        .iter()
        .map(|(&h, &n)| {
            let mut cases = BTreeMap::new();
            if let Some(records) = &table.records {
                for r in records.iter().filter(|r| r.hull_dim == h) {
                    if let Some((e1, e2)) = r.eps {
                        *cases.entry(format!("{}{}", e1 as u8, e2 as u8)).or_insert(0) += 1;
                    }
                }
            }
            let multiple_of_d = match d {
                Some(d) if h == d => "d".to_string(),
                Some(d) if h == 2 * d => "2d".to_string(),
                _ => String::new(),
            };
            EbitRow { ebits: h, codes: n, cases, multiple_of_d }
        })
        .collect();
    EbitReport { rows, zero_cost_fraction: table.lcd_density }
}

/// Strata over canonical representatives of `(GF(q^m)^{k+1} \ 0) / F_q^*` for
/// `Phi_alpha = sum alpha_i F_i`, hulls from the Gram matrix of each operator.
pub fn sweep_orbits(tower: &FieldTower, gens: &[QPoly], cap: u64) -> Result<BTreeMap<usize, usize>> {
    let n = tower.top().order();
    let size = (n as u128).pow(gens.len() as u32);
    if size > cap as u128 {
        return Err(Error::SizeCapExceeded { size, cap });
    }
    let reps: Vec<Vec<Elem>> = (1..size as u64)
        .map(|idx| {
            let mut v = Vec::with_capacity(gens.len());
            let mut x = idx;
            for _ in 0..gens.len() {
                v.push(Elem((x % n) as u32));
                x /= n;
            }
            v
        })
        .filter(|alpha| canonical_representative(tower, alpha).as_deref() == Ok(alpha.as_slice()))
        .collect();
    let hulls: Vec<usize> = reps
        .par_iter()
        .map(|alpha| {
            let phi = gens
                .iter()
                .zip(alpha)
                .fold(QPoly::zero(tower), |acc, (g, &a)| acc.add(tower, &g.scale(tower, a)).unwrap());
            let rank = phi.rank(tower);
            if rank == 0 {
                return Ok(0);
            }
            let g = gram_of_operator(tower, &phi, tower.polynomial_basis())?;
            Ok(rank - g.rank(tower.base()))
        })
        .collect::<Result<_>>()?;
    let mut counts = BTreeMap::new();
    for h in hulls {
        *counts.entry(h).or_insert(0usize) += 1;
    }
    Ok(counts)
}
