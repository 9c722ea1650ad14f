//! Formal integer combinations of irreducible labels at a fixed level.
//!
//! Two operations carry the representation theory: [`VirtualRep::times_trivial`]
//! is parabolic induction against the trivial representation of `GL_r`, which
//! adds horizontal strips to the `iota` partition, and
//! [`VirtualRep::h_invariants`] takes invariants under the subgroup fixing
//! the first `m` basis vectors, which removes them.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::irreps::IrrepLabel;
use crate::par;
use crate::qfunc::QPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualRep {
    level: u32,
    terms: BTreeMap<IrrepLabel, BigInt>,
}

impl VirtualRep {
    pub fn zero(level: u32) -> Self {
        Self {
            level,
            terms: BTreeMap::new(),
        }
    }

    /// A single irreducible with multiplicity one.
    pub fn irreducible(label: IrrepLabel) -> Self {
        let level = label.norm();
        let mut v = Self::zero(level);
        v.terms.insert(label, BigInt::one());
        v
    }

    /// Builds from `(label, multiplicity)` pairs, summing repeats and dropping zeros.
    pub fn from_terms(
        level: u32,
        terms: impl IntoIterator<Item = (IrrepLabel, BigInt)>,
    ) -> Result<Self> {
        let mut v = Self::zero(level);
        for (label, mult) in terms {
            if label.norm() != level {
                return Err(Error::LevelMismatch(level, label.norm()));
            }
            v.add_term(label, mult);
        }
        Ok(v)
    }

    fn add_term(&mut self, label: IrrepLabel, mult: BigInt) {
        if mult.is_zero() {
            return;
        }
        let entry = self.terms.entry(label);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(mult);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += mult;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn terms(&self) -> &BTreeMap<IrrepLabel, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, label: &IrrepLabel) -> BigInt {
        self.terms.get(label).cloned().unwrap_or_default()
    }

    /// True when every multiplicity is non-negative.
    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|m| *m > BigInt::zero())
    }

    pub fn add(&self, other: &VirtualRep) -> Result<VirtualRep> {
        if self.level != other.level {
            return Err(Error::LevelMismatch(self.level, other.level));
        }
        let mut out = self.clone();
        for (label, mult) in &other.terms {
            out.add_term(label.clone(), mult.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> VirtualRep {
        if c.is_zero() {
            return VirtualRep::zero(self.level);
        }
        VirtualRep {
            level: self.level,
            terms: self
                .terms
                .iter()
                .map(|(l, m)| (l.clone(), m * c))
                .collect(),
        }
    }

    /// `V x iota_r`: every term `phi(nu)` spreads over the labels whose `iota`
    /// partition is `nu(iota)` plus a horizontal strip of size `r`.
    pub fn times_trivial(&self, r: u32) -> VirtualRep {
        if r == 0 {
            return self.clone();
        }
        let terms: Vec<(&IrrepLabel, &BigInt)> = self.terms.iter().collect();
        let pieces = par::map(&terms, |(label, mult)| {
            label
                .iota_part()
                .add_horizontal_strip(r)
                .into_iter()
                .map(|p| (label.with_iota(p), (*mult).clone()))
                .collect::<Vec<_>>()
        });
        let mut out = VirtualRep::zero(self.level + r);
        for (label, mult) in pieces.into_iter().flatten() {
            out.add_term(label, mult);
        }
        out
    }

    /// Invariants under `H_{m, n-m}` as a representation of `GL_m`: every term
    /// `phi(mu)` contributes to the labels obtained by removing a horizontal
    /// strip of size `n - m` from `mu(iota)`.
    pub fn h_invariants(&self, m: u32) -> Result<VirtualRep> {
        if m > self.level {
            return Err(Error::LevelTooHigh {
                target: m,
                source_level: self.level,
            });
        }
        let r = self.level - m;
        let mut out = VirtualRep::zero(m);
        for (label, mult) in &self.terms {
            for p in label.iota_part().remove_horizontal_strip(r) {
                out.add_term(label.with_iota(p), mult.clone());
            }
        }
        Ok(out)
    }

    /// `sum mult(mu) * dim(mu)` at `q`.
    pub fn dim_at(&self, q: u64) -> BigInt {
        let terms: Vec<(&IrrepLabel, &BigInt)> = self.terms.iter().collect();
        par::map(&terms, |(label, mult)| label.dim_at(q) * *mult)
            .into_iter()
            .sum()
    }

    /// `sum mult(mu) * dim(mu)` as a polynomial in `q`.
    pub fn dim_symbolic(&self) -> Result<QPoly> {
        let terms: Vec<(&IrrepLabel, &BigInt)> = self.terms.iter().collect();
        par::map(&terms, |(label, mult)| {
            label
                .dim_symbolic()
                .map(|d| d.scale(&BigRational::from_integer((*mult).clone())))
        })
        .into_iter()
        .try_fold(QPoly::zero(), |acc, d| Ok(&acc + &d?))
    }
}

impl fmt::Display for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 (level {})", self.level);
        }
        for (i, (label, mult)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{mult}*{label}")?;
        }
        Ok(())
    }
}

/// One `{"label": .., "mult": ".."}` entry; multiplicities are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelledCount {
    pub label: IrrepLabel,
    pub mult: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct VirtualRepJson {
    level: u32,
    terms: Vec<LabelledCount>,
}

impl Serialize for VirtualRep {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        VirtualRepJson {
            level: self.level,
            terms: self
                .terms
                .iter()
                .map(|(label, mult)| LabelledCount {
                    label: label.clone(),
                    mult: mult.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for VirtualRep {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = VirtualRepJson::deserialize(deserializer)?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| {
                t.mult
                    .parse::<BigInt>()
                    .map(|m| (t.label, m))
                    .map_err(|e| D::Error::custom(format!("bad multiplicity {:?}: {e}", t.mult)))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        VirtualRep::from_terms(raw.level, terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irreps::{enumerate_irreps, CuspidalSymbol};
    use crate::partition::Partition;
    use crate::qfunc::gl_order;

    fn part(raw: &[i64]) -> Partition {
        Partition::new(raw).unwrap()
    }

    fn iota(raw: &[i64]) -> IrrepLabel {
        IrrepLabel::iota(part(raw))
    }

    fn cusp2() -> IrrepLabel {
        IrrepLabel::new([(CuspidalSymbol::new(2, 0), part(&[1]))])
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn times_trivial_examples() {
        let v = VirtualRep::irreducible(iota(&[1]));
        let w = v.times_trivial(1);
        let expected =
            VirtualRep::from_terms(2, [(iota(&[2]), big(1)), (iota(&[1, 1]), big(1))]).unwrap();
        assert_eq!(w, expected);
        // total dimension q + 1, the number of lines in F_q^2
        for q in 2..=5u64 {
            assert_eq!(w.dim_at(q), big(q as i64 + 1));
        }
        assert_eq!(v.times_trivial(0), v);

        let c = VirtualRep::irreducible(cusp2()).times_trivial(2);
        let expected_label = cusp2().with_iota(part(&[2]));
        assert_eq!(c, VirtualRep::from_terms(4, [(expected_label, big(1))]).unwrap());
    }

    #[test]
    fn h_invariants_examples() {
        let v = VirtualRep::irreducible(iota(&[2, 1]));
        assert_eq!(
            v.h_invariants(2).unwrap(),
            VirtualRep::from_terms(2, [(iota(&[2]), big(1)), (iota(&[1, 1]), big(1))]).unwrap()
        );
        assert_eq!(v.h_invariants(3).unwrap(), v);
        let w = VirtualRep::irreducible(iota(&[1, 1]));
        assert!(w.h_invariants(0).unwrap().is_zero());
        assert_eq!(
            w.h_invariants(3),
            Err(Error::LevelTooHigh {
                target: 3,
                source_level: 2
            })
        );
        // a cuspidal block of norm 2 has no invariants at level 1
        assert!(VirtualRep::irreducible(cusp2()).h_invariants(1).unwrap().is_zero());
    }

    #[test]
    fn dimensions() {
        let v = VirtualRep::from_terms(2, [(iota(&[2]), big(1)), (iota(&[1, 1]), big(1))]).unwrap();
        assert_eq!(v.dim_at(2), big(3));
        assert_eq!(v.dim_symbolic().unwrap(), QPoly::from_ints(&[1, 1]));
        assert_eq!(VirtualRep::zero(3).dim_at(2), big(0));
        assert_eq!(VirtualRep::from_terms(3, [(iota(&[3]), big(5))]).unwrap().dim_at(7), big(5));
    }

    #[test]
    fn linear_arithmetic() {
        let v = VirtualRep::from_terms(1, [(iota(&[1]), big(3))]).unwrap();
        assert_eq!(v.add(&VirtualRep::zero(1)).unwrap(), v);
        assert!(v.add(&v.scale(&big(-1))).unwrap().is_zero());
        assert_eq!(
            v.scale(&big(2)),
            VirtualRep::from_terms(1, [(iota(&[1]), big(6))]).unwrap()
        );
        assert_eq!(v.add(&VirtualRep::zero(2)), Err(Error::LevelMismatch(1, 2)));
        assert!(VirtualRep::from_terms(2, [(iota(&[1]), big(1))]).is_err());
        // zero multiplicities are purged
        let z = VirtualRep::from_terms(1, [(iota(&[1]), big(2)), (iota(&[1]), big(-2))]).unwrap();
        assert!(z.terms().is_empty());
    }

    #[test]
    fn json_shape() {
        let v = VirtualRep::from_terms(2, [(iota(&[2]), big(1)), (cusp2(), big(-4))]).unwrap();
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(
            json,
            r#"{"level":2,"terms":[{"label":{"iota":[2]},"mult":"1"},{"label":{"c(2,0)":[1]},"mult":"-4"}]}"#
        );
        assert_eq!(serde_json::from_str::<VirtualRep>(&json).unwrap(), v);
    }

    #[test]
    fn frobenius_shadow() {
        for q in [2u64, 3] {
            for base in 0..=3u32 {
                for nu in enumerate_irreps(base, q) {
                    for r in 0..=3u32 {
                        let induced = VirtualRep::irreducible(nu.clone()).times_trivial(r);
                        for mu in enumerate_irreps(base + r, q) {
                            let restricted = VirtualRep::irreducible(mu.clone())
                                .h_invariants(base)
                                .unwrap();
                            assert_eq!(
                                induced.multiplicity(&mu),
                                restricted.multiplicity(&nu),
                                "nu={nu} mu={mu}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn induction_index() {
        // dim(nu x iota_r) = dim(nu) * |G_{m+r}| / (|G_m| |G_r| q^{mr})
        for q in [2u64, 3] {
            let qb = BigInt::from(q);
            for m in 0..=3u32 {
                for r in 0..=3u32 {
                    let index = gl_order(m + r, &qb)
                        / (gl_order(m, &qb) * gl_order(r, &qb) * qb.pow(m * r));
                    for nu in enumerate_irreps(m, q) {
                        let v = VirtualRep::irreducible(nu.clone());
                        assert_eq!(v.times_trivial(r).dim_at(q), nu.dim_at(q) * &index);
                    }
                }
            }
        }
    }

    #[test]
    fn iterated_induction_contains_single_step() {
        for q in [2u64, 3] {
            for m in 0..=3u32 {
                for nu in enumerate_irreps(m, q) {
                    let v = VirtualRep::irreducible(nu);
                    for total in 0..=4u32 {
                        for r in 0..=total {
                            let once = v.times_trivial(total);
                            let twice = v.times_trivial(r).times_trivial(total - r);
                            for (label, mult) in once.terms() {
                                assert!(twice.multiplicity(label) >= *mult);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn invariants_do_not_grow_dimension() {
        for q in [2u64, 3] {
            for n in 0..=4u32 {
                for mu in enumerate_irreps(n, q) {
                    let v = VirtualRep::irreducible(mu.clone());
                    for m in 0..=n {
                        assert!(v.h_invariants(m).unwrap().dim_at(q) <= mu.dim_at(q));
                    }
                }
            }
        }
    }
}
