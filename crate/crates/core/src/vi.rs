//! Finite direct sums of free VI-modules `M(m)`.
//!
//! At level `n`, `M(m)_n` is the regular representation of `GL_m` induced
//! against the trivial representation of `GL_{n-m}`. From that level-wise
//! decomposition this module extracts the stable multiplicities `c(lambda)`,
//! the weight, and the polynomial `P` with `dim V_n = P(q^n)` for large `n`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grothendieck::{LabelledCount, VirtualRep};
use crate::irreps::{enumerate_irreps, generic_labels, IrrepLabel};
use crate::par;
use crate::partition::Partition;
use crate::qfunc::{rational_from_str, rational_to_string, QPoly};

/// `M(m_1) + ... + M(m_d)`, generators kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VIModuleSpec {
    generators: Vec<u32>,
}

impl VIModuleSpec {
    pub fn new(mut generators: Vec<u32>) -> Self {
        generators.sort_unstable();
        Self { generators }
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn max_generator(&self) -> u32 {
        self.generators.last().copied().unwrap_or(0)
    }
}

impl fmt::Display for VIModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.generators.iter().map(|m| format!("M({m})")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `prod_{i<m} (q^n - q^i)`: the number of injective linear maps `F_q^m -> F_q^n`.
pub fn injection_count_formula(m: u32, n: u32, q: u64) -> BigInt {
    if n < m {
        return BigInt::zero();
    }
    let q = BigInt::from(q);
    let qn = q.pow(n);
    (0..m).fold(BigInt::one(), |acc, i| acc * (&qn - q.pow(i)))
}

/// The regular representation of `GL_m(F_q)`: each irreducible with
/// multiplicity equal to its dimension.
pub fn regular_rep(m: u32, q: u64) -> VirtualRep {
    let labels = enumerate_irreps(m, q);
    let dims = par::map(&labels, |l| l.dim_at(q));
    VirtualRep::from_terms(m, labels.into_iter().zip(dims)).expect("labels have norm m")
}

/// `M(m)_n`; the zero representation when `n < m`.
pub fn free_module_level(m: u32, n: u32, q: u64) -> VirtualRep {
    if n < m {
        return VirtualRep::zero(n);
    }
    regular_rep(m, q).times_trivial(n - m)
}

/// Level `n` of a direct sum of free modules.
pub fn module_level(spec: &VIModuleSpec, n: u32, q: u64) -> VirtualRep {
    level_from_regulars(&regulars(spec, q), n)
}

// One regular representation per generator, computed once.
fn regulars(spec: &VIModuleSpec, q: u64) -> Vec<VirtualRep> {
    spec.generators.iter().map(|&m| regular_rep(m, q)).collect()
}

fn level_from_regulars(regulars: &[VirtualRep], n: u32) -> VirtualRep {
    regulars
        .iter()
        .filter(|reg| reg.level() <= n)
        .fold(VirtualRep::zero(n), |acc, reg| {
            acc.add(&reg.times_trivial(n - reg.level()))
                .expect("all summands at level n")
        })
}

/// `c(lambda, n)`: the multiplicity of `phi(lambda[n])` in `V`, keyed by the
/// stable label `lambda`.
pub fn stable_counts(v: &VirtualRep) -> BTreeMap<IrrepLabel, BigInt> {
    let mut out = BTreeMap::new();
    for (mu, mult) in v.terms() {
        let (lambda, _) = mu.unpad();
        *out.entry(lambda).or_insert_with(BigInt::zero) += mult;
    }
    out.retain(|_, m| !m.is_zero());
    out
}

/// First level from which stabilization is searched.
pub fn search_start(spec: &VIModuleSpec) -> u32 {
    2 * spec.max_generator() + 1
}

/// Last level at which stabilization must have been detected.
pub fn search_limit(spec: &VIModuleSpec) -> u32 {
    3 * spec.max_generator() + 4
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub q: u64,
    pub generators: Vec<u32>,
    pub stable: BTreeMap<IrrepLabel, BigInt>,
    pub onset: u32,
    pub weight: u32,
    /// Polynomial in `T`.
    pub dim_polynomial: QPoly,
}

/// Detects the onset of stable multiplicities and assembles the report.
///
/// Levels from `2 * max(m_i) + 1` on are scanned; the onset is the first level
/// whose stable-count map equals that of the next level. The result is
/// checked against the interlacing closed form before it is returned.
pub fn stable_multiplicities(spec: &VIModuleSpec, q: u64) -> Result<StabilityReport> {
    let regs = regulars(spec, q);
    let start = search_start(spec);
    let limit = search_limit(spec);
    let maps = par::map_range(u64::from(start), u64::from(limit) + 2, |n| {
        stable_counts(&level_from_regulars(&regs, n as u32))
    });
    let offset = maps
        .windows(2)
        .position(|w| w[0] == w[1])
        .ok_or(Error::NoStabilization(limit))?;
    let onset = start + offset as u32;
    let stable = maps[offset].clone();

    if let Some((label, mult)) = stable.iter().find(|(_, m)| **m <= BigInt::zero()) {
        return Err(Error::Internal(format!(
            "non-positive stable multiplicity {mult} for {label}"
        )));
    }
    let predicted = closed_form_multiplicities(spec, q);
    if predicted != stable {
        return Err(Error::Internal(format!(
            "detected stable multiplicities disagree with the interlacing closed form for {spec}"
        )));
    }

    let weight = stable.keys().map(IrrepLabel::norm).max().unwrap_or(0);
    let dim_polynomial = stable.iter().fold(QPoly::zero(), |acc, (lambda, c)| {
        let (p, _) = dim_polynomial_irrep(lambda, q);
        &acc + &p.scale(&BigRational::from_integer(c.clone()))
    });
    Ok(StabilityReport {
        q,
        generators: spec.generators.clone(),
        stable,
        onset,
        weight,
        dim_polynomial,
    })
}

/// `c(lambda) = sum_i sum_nu dim(nu)` over labels `nu` of norm `m_i` that agree
/// with `lambda` away from `iota` and whose `iota` partition interlaces:
/// `nu_1 >= lambda_1 >= nu_2 >= lambda_2 >= ...`.
pub fn closed_form_multiplicities(spec: &VIModuleSpec, q: u64) -> BTreeMap<IrrepLabel, BigInt> {
    let mut out: BTreeMap<IrrepLabel, BigInt> = BTreeMap::new();
    for &m in &spec.generators {
        for nu in enumerate_irreps(m, q) {
            let dim = nu.dim_at(q);
            for lambda_iota in interlacing_below(&nu.iota_part()) {
                *out.entry(nu.with_iota(lambda_iota)).or_insert_with(BigInt::zero) += &dim;
            }
        }
    }
    out
}

// All lambda with nu_{i+1} <= lambda_i <= nu_i for every row i of nu.
fn interlacing_below(nu: &Partition) -> Vec<Partition> {
    let mut out = vec![Vec::new()];
    for i in 0..nu.len() {
        let (lo, hi) = (nu.part(i + 1), nu.part(i));
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (lo..=hi).map(move |v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    out.into_iter().map(Partition::from_sorted).collect()
}

/// The polynomial `P` with `dim phi(lambda[n]) = P(q^n)` for all `n >= N`,
/// together with `N = |lambda| + lambda(iota)_1`.
///
/// The first-row hook lengths of `lambda[n]` are `n - r_j` for fixed offsets
/// `r_j`; with `s_1 < .. < s_m` the complement of the offsets in `0..N`,
/// `P(T) = c * prod (T / q^{s_i} - 1)`, and `c` is fixed by one exact
/// evaluation at `n = N`.
pub fn dim_polynomial_irrep(lambda: &IrrepLabel, q: u64) -> (QPoly, u32) {
    let m = lambda.norm();
    let onset = m + lambda.iota_part().first();
    let padded = lambda.pad(onset).expect("padding at the onset is defined");
    let first_row = padded.iota_part().first() as usize;
    let offsets: Vec<u32> = padded.iota_part().hook_lengths()[..first_row]
        .iter()
        .map(|h| onset - h)
        .collect();
    let complement: Vec<u32> = (0..onset).filter(|s| !offsets.contains(s)).collect();
    debug_assert_eq!(complement.len() as u32, m);

    let qb = BigInt::from(q);
    let at_onset = complement
        .iter()
        .fold(BigInt::one(), |acc, s| acc * (qb.pow(onset - s) - 1u32));
    let c = BigRational::new(padded.dim_at(q), at_onset);
    let poly = complement.iter().fold(QPoly::constant(c), |acc, &s| {
        let factor = QPoly::from_coeffs(vec![
            -BigRational::one(),
            BigRational::new(BigInt::one(), qb.pow(s)),
        ]);
        &acc * &factor
    });
    (poly, onset)
}

/// `P` with `dim V_n = P(q^n)` for `n >= N`, and that `N`.
pub fn dim_polynomial_module(spec: &VIModuleSpec, q: u64) -> Result<(QPoly, u32)> {
    let report = stable_multiplicities(spec, q)?;
    let onset = report
        .stable
        .keys()
        .map(|lambda| lambda.norm() + lambda.iota_part().first())
        .fold(report.onset, u32::max);
    Ok((report.dim_polynomial, onset))
}

/// `dim M(m)_n` as a polynomial in `q`, assembled over generic labels so that
/// the cuspidal counts enter as polynomials rather than numbers.
pub fn free_module_dim_symbolic(m: u32, n: u32) -> Result<QPoly> {
    if n < m {
        return Ok(QPoly::zero());
    }
    let generic = generic_labels(m);
    let terms = par::map(&generic, |(nu, count)| -> Result<QPoly> {
        let dim = nu.dim_symbolic()?;
        let induced = VirtualRep::irreducible(nu.clone())
            .times_trivial(n - m)
            .dim_symbolic()?;
        Ok(&(count * &dim) * &induced)
    });
    terms
        .into_iter()
        .try_fold(QPoly::zero(), |acc, t| Ok(&acc + &t?))
}

/// `prod_{i<m} (q^n - q^i)` as a polynomial in `q`.
pub fn injection_count_poly(m: u32, n: u32) -> QPoly {
    if n < m {
        return QPoly::zero();
    }
    (0..m).fold(QPoly::one(), |acc, i| {
        let one = BigRational::one();
        let factor = &QPoly::monomial(one.clone(), n as usize) - &QPoly::monomial(one, i as usize);
        &acc * &factor
    })
}

#[derive(Serialize, Deserialize)]
struct ReportJson {
    q: u64,
    generators: Vec<u32>,
    onset: u32,
    weight: u32,
    stable: Vec<LabelledCount>,
    #[serde(rename = "dim_poly_T")]
    dim_poly_t: Vec<String>,
}

impl Serialize for StabilityReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ReportJson {
            q: self.q,
            generators: self.generators.clone(),
            onset: self.onset,
            weight: self.weight,
            stable: self
                .stable
                .iter()
                .map(|(label, mult)| LabelledCount {
                    label: label.clone(),
                    mult: mult.to_string(),
                })
                .collect(),
            dim_poly_t: poly_to_strings(&self.dim_polynomial),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for StabilityReport {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = ReportJson::deserialize(deserializer)?;
        let stable = raw
            .stable
            .into_iter()
            .map(|t| {
                t.mult
                    .parse::<BigInt>()
                    .map(|m| (t.label, m))
                    .map_err(|e| D::Error::custom(format!("bad multiplicity: {e}")))
            })
            .collect::<std::result::Result<BTreeMap<_, _>, _>>()?;
        let dim_polynomial = poly_from_strings(&raw.dim_poly_t).map_err(D::Error::custom)?;
        Ok(StabilityReport {
            q: raw.q,
            generators: raw.generators,
            stable,
            onset: raw.onset,
            weight: raw.weight,
            dim_polynomial,
        })
    }
}

/// Coefficients low-to-high as `"num/den"` strings.
pub fn poly_to_strings(p: &QPoly) -> Vec<String> {
    p.coeffs().iter().map(rational_to_string).collect()
}

pub fn poly_from_strings(coeffs: &[String]) -> Result<QPoly> {
    Ok(QPoly::from_coeffs(
        coeffs
            .iter()
            .map(|s| rational_from_str(s))
            .collect::<Result<Vec<_>>>()?,
    ))
}
