//! Labels of irreducible representations of `GL_n(F_q)`.
//!
//! Cuspidal representations are never constructed: a [`CuspidalSymbol`] is an
//! abstract `(degree, index)` pair, and an [`IrrepLabel`] assigns a partition to
//! finitely many symbols. Everything downstream (dimensions, Pieri induction,
//! invariants) depends on a cuspidal only through its degree and on whether it
//! is the trivial character `iota = c(1,0)` of `GL_1`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::par;
use crate::partition::{partitions_of, Partition};
use crate::qfunc::{phi, phi_at, psi, QPoly, QRatFunc};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CuspidalSymbol {
    pub degree: u32,
    pub index: u32,
}

impl CuspidalSymbol {
    pub const IOTA: CuspidalSymbol = CuspidalSymbol {
        degree: 1,
        index: 0,
    };

    pub fn new(degree: u32, index: u32) -> Self {
        assert!(degree >= 1, "cuspidal degree must be positive");
        Self { degree, index }
    }

    pub fn is_iota(&self) -> bool {
        *self == Self::IOTA
    }
}

impl fmt::Display for CuspidalSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_iota() {
            f.write_str("iota")
        } else {
            write!(f, "c({},{})", self.degree, self.index)
        }
    }
}

impl FromStr for CuspidalSymbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "iota" {
            return Ok(Self::IOTA);
        }
        let bad = || Error::Parse(format!("cuspidal symbol must be iota or c(d,i): {s:?}"));
        let inner = s
            .strip_prefix("c(")
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (d, i) = inner.split_once(',').ok_or_else(bad)?;
        let degree: u32 = d.trim().parse().map_err(|_| bad())?;
        let index: u32 = i.trim().parse().map_err(|_| bad())?;
        if degree == 0 {
            return Err(bad());
        }
        Ok(Self { degree, index })
    }
}

fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Number of degree-`d` cuspidal symbols over `F_q`:
/// `(1/d) * sum_{e | d} mobius(d/e) * (q^e - 1)`.
pub fn cuspidal_count(d: u32, q: u64) -> u64 {
    assert!(d >= 1 && q >= 2);
    let q = BigInt::from(q);
    let total = (1..=d)
        .filter(|e| d.is_multiple_of(*e))
        .fold(BigInt::zero(), |acc, e| {
            acc + mobius(u64::from(d / e)) * (q.pow(e) - 1u32)
        });
    let (count, rem) = total.div_rem(&BigInt::from(d));
    debug_assert!(rem.is_zero());
    u64::try_from(count).expect("cuspidal count fits in u64")
}

/// [`cuspidal_count`] as a polynomial in `q`.
pub fn cuspidal_count_poly(d: u32) -> QPoly {
    let sum = (1..=d).filter(|e| d.is_multiple_of(*e)).fold(QPoly::zero(), |acc, e| {
        let term = QPoly::power_minus_one(e as usize)
            .scale(&BigRational::from_integer(mobius(u64::from(d / e)).into()));
        &acc + &term
    });
    sum.scale(&BigRational::new(BigInt::one(), BigInt::from(d)))
}

/// A function from cuspidal symbols to partitions with finite support.
/// Symbols mapped to the empty partition are never stored.
///
/// Labels order by their sorted support first, then by their partitions in
/// lexicographically decreasing order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IrrepLabel {
    support: BTreeMap<CuspidalSymbol, Partition>,
}

impl Ord for IrrepLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.support
            .keys()
            .cmp(other.support.keys())
            .then_with(|| other.support.values().cmp(self.support.values()))
    }
}

impl PartialOrd for IrrepLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl IrrepLabel {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(entries: impl IntoIterator<Item = (CuspidalSymbol, Partition)>) -> Self {
        let mut support = BTreeMap::new();
        for (rho, p) in entries {
            if !p.is_empty() {
                support.insert(rho, p);
            }
        }
        Self { support }
    }

    /// Label supported on `iota` alone.
    pub fn iota(p: Partition) -> Self {
        Self::new([(CuspidalSymbol::IOTA, p)])
    }

    pub fn support(&self) -> &BTreeMap<CuspidalSymbol, Partition> {
        &self.support
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn get(&self, rho: &CuspidalSymbol) -> Partition {
        self.support.get(rho).cloned().unwrap_or_default()
    }

    pub fn iota_part(&self) -> Partition {
        self.get(&CuspidalSymbol::IOTA)
    }

    /// Same label with the `iota` component replaced.
    pub fn with_iota(&self, p: Partition) -> IrrepLabel {
        let mut support = self.support.clone();
        if p.is_empty() {
            support.remove(&CuspidalSymbol::IOTA);
        } else {
            support.insert(CuspidalSymbol::IOTA, p);
        }
        IrrepLabel { support }
    }

    /// `sum_rho d(rho) * |mu(rho)|`.
    pub fn norm(&self) -> u32 {
        self.support
            .iter()
            .map(|(rho, p)| rho.degree * p.size())
            .sum()
    }

    /// Norm of the part of the label away from `iota`.
    pub fn non_iota_norm(&self) -> u32 {
        self.norm() - self.iota_part().size()
    }

    /// `lambda[n]`: prepends `n - |lambda|` to the `iota` partition.
    /// Defined when `n >= |lambda| + lambda(iota)_1`.
    pub fn pad(&self, n: u32) -> Result<IrrepLabel> {
        let norm = self.norm();
        let iota = self.iota_part();
        let required = norm + iota.first();
        if n < required {
            return Err(Error::PadUndefined { n, required });
        }
        let padded = iota
            .with_first_row(n - norm)
            .expect("first row dominates by the precondition");
        Ok(self.with_iota(padded))
    }

    /// The unique `(lambda, n)` with `lambda[n] = self` and `n = |self|`.
    pub fn unpad(&self) -> (IrrepLabel, u32) {
        (self.with_iota(self.iota_part().without_first_row()), self.norm())
    }

    /// Symbolic dimension of `phi(mu)` as a polynomial in `q`.
    pub fn dim_symbolic(&self) -> Result<QPoly> {
        let f = self
            .support
            .iter()
            .fold(QRatFunc::from_poly(phi(self.norm())), |acc, (rho, p)| {
                &acc * &psi(p).substitute_power(rho.degree as usize)
            });
        f.as_polynomial()
            .map_err(|e| Error::Internal(format!("hook formula for {self} did not reduce: {e}")))
    }

    /// Dimension of `phi(mu)` at an integer `q >= 2`, by exact evaluation of
    /// the hook formula.
    pub fn dim_at(&self, q: u64) -> BigInt {
        assert!(q >= 2, "field size must be at least 2");
        let qb = BigInt::from(q);
        let mut num = phi_at(self.norm(), &qb);
        let mut den = BigInt::one();
        for (rho, p) in &self.support {
            num *= qb.pow(rho.degree * p.epsilon());
            for h in p.hook_lengths() {
                den *= qb.pow(rho.degree * h) - 1u32;
            }
        }
        let (dim, rem) = num.div_rem(&den);
        assert!(rem.is_zero(), "hook formula for {self} is not integral at q={q}");
        dim
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (rho, p)) in self.support.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{rho}:{p}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for IrrepLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.support.len()))?;
        for (rho, p) in &self.support {
            map.serialize_entry(&rho.to_string(), p)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for IrrepLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct LabelVisitor;

        impl<'de> Visitor<'de> for LabelVisitor {
            type Value = IrrepLabel;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object mapping cuspidal symbols to partitions")
            }

            fn visit_map<A: MapAccess<'de>>(
                self,
                mut access: A,
            ) -> std::result::Result<IrrepLabel, A::Error> {
                let mut entries = BTreeMap::new();
                while let Some((key, p)) = access.next_entry::<String, Partition>()? {
                    let rho: CuspidalSymbol = key.parse().map_err(serde::de::Error::custom)?;
                    if entries.insert(rho, p).is_some() {
                        return Err(serde::de::Error::custom(format!("duplicate symbol {rho}")));
                    }
                }
                Ok(IrrepLabel::new(entries))
            }
        }

        deserializer.deserialize_map(LabelVisitor)
    }
}

impl FromStr for IrrepLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("bad label {s:?}: {e}")))
    }
}

/// Cuspidal symbols of degree at most `max_degree` over `F_q`, sorted.
pub fn cuspidal_alphabet(max_degree: u32, q: u64) -> Vec<CuspidalSymbol> {
    (1..=max_degree)
        .flat_map(|d| (0..cuspidal_count(d, q) as u32).map(move |i| CuspidalSymbol::new(d, i)))
        .collect()
}

/// All labels of norm `n` over the cuspidal alphabet of `F_q`, sorted.
pub fn enumerate_irreps(n: u32, q: u64) -> Vec<IrrepLabel> {
    let alphabet = cuspidal_alphabet(n, q);
    // Shard on the iota component; the remaining symbols are filled sequentially.
    let iota_choices: Vec<Partition> = (0..=n).flat_map(partitions_of).collect();
    let rest = &alphabet[1.min(alphabet.len())..];
    let shards = par::map(&iota_choices, |iota| {
        let mut out = Vec::new();
        let mut current = vec![(CuspidalSymbol::IOTA, iota.clone())];
        fill_labels(rest, n - iota.size(), &mut current, &mut out);
        out
    });
    let mut labels: Vec<IrrepLabel> = shards.into_iter().flatten().collect();
    labels.sort();
    labels
}

fn fill_labels(
    alphabet: &[CuspidalSymbol],
    remaining: u32,
    current: &mut Vec<(CuspidalSymbol, Partition)>,
    out: &mut Vec<IrrepLabel>,
) {
    if remaining == 0 {
        out.push(IrrepLabel::new(current.iter().cloned()));
        return;
    }
    for (j, rho) in alphabet.iter().enumerate() {
        if rho.degree > remaining {
            break;
        }
        for size in 1..=remaining / rho.degree {
            for p in partitions_of(size) {
                current.push((*rho, p));
                fill_labels(&alphabet[j + 1..], remaining - size * rho.degree, current, out);
                current.pop();
            }
        }
    }
}

/// Labels of norm `n` up to relabelling of the non-`iota` cuspidals, each
/// with the number of labels it stands for as a polynomial in `q`.
///
/// Representatives use indices `1, 2, ..` for degree-1 symbols other than
/// `iota` and `0, 1, ..` for higher degrees, with partitions assigned in
/// non-increasing order along the indices.
pub fn generic_labels(n: u32) -> Vec<(IrrepLabel, QPoly)> {
    let mut out = Vec::new();
    for iota_size in 0..=n {
        for iota in partitions_of(iota_size) {
            let mut current = vec![(CuspidalSymbol::IOTA, iota)];
            generic_rec(1, n - iota_size, &mut current, QPoly::one(), &mut out);
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn generic_rec(
    degree: u32,
    remaining: u32,
    current: &mut Vec<(CuspidalSymbol, Partition)>,
    count: QPoly,
    out: &mut Vec<(IrrepLabel, QPoly)>,
) {
    if remaining == 0 {
        out.push((IrrepLabel::new(current.iter().cloned()), count));
        return;
    }
    if degree > remaining {
        return;
    }
    let available = if degree == 1 {
        &cuspidal_count_poly(1) - &QPoly::one()
    } else {
        cuspidal_count_poly(degree)
    };
    let first_index = u32::from(degree == 1);
    let mut chosen = Vec::new();
    class_rec(
        degree,
        first_index,
        remaining,
        &available,
        &mut chosen,
        current,
        &count,
        out,
    );
}

// Chooses a non-increasing sequence of partitions for one degree class, then
// moves on to the next degree.
#[allow(clippy::too_many_arguments)]
fn class_rec(
    degree: u32,
    first_index: u32,
    remaining: u32,
    available: &QPoly,
    chosen: &mut Vec<Partition>,
    current: &mut Vec<(CuspidalSymbol, Partition)>,
    count: &QPoly,
    out: &mut Vec<(IrrepLabel, QPoly)>,
) {
    let class_count = multiset_count(available, chosen);
    let base = current.len();
    for (i, p) in chosen.iter().enumerate() {
        current.push((CuspidalSymbol::new(degree, first_index + i as u32), p.clone()));
    }
    generic_rec(degree + 1, remaining, current, count * &class_count, out);
    current.truncate(base);

    let max_size = remaining / degree;
    for size in 1..=max_size {
        for p in partitions_of(size) {
            if chosen.last().is_some_and(|last| &p > last) {
                continue;
            }
            chosen.push(p);
            class_rec(
                degree,
                first_index,
                remaining - size * degree,
                available,
                chosen,
                current,
                count,
                out,
            );
            chosen.pop();
        }
    }
}

// Number of ways to assign the multiset `chosen` to distinct symbols out of
// `available`: a falling factorial divided by the repeat factorials.
fn multiset_count(available: &QPoly, chosen: &[Partition]) -> QPoly {
    let mut acc = QPoly::one();
    for i in 0..chosen.len() {
        acc = &acc * &(available - &QPoly::from_int(i as i64));
    }
    let mut denom = BigInt::one();
    let mut run = 1u32;
    for i in 1..=chosen.len() {
        if i < chosen.len() && chosen[i] == chosen[i - 1] {
            run += 1;
        } else {
            denom *= (1..=run).fold(BigInt::one(), |a, k| a * k);
            run = 1;
        }
    }
    acc.scale(&BigRational::new(BigInt::one(), denom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfunc::gl_order;
    use proptest::prelude::*;

    fn part(raw: &[i64]) -> Partition {
        Partition::new(raw).unwrap()
    }

    fn c(d: u32, i: u32) -> CuspidalSymbol {
        CuspidalSymbol::new(d, i)
    }

    #[test]
    fn cuspidal_counts() {
        assert_eq!(cuspidal_count(1, 2), 1);
        assert_eq!(cuspidal_count(1, 5), 4);
        assert_eq!(cuspidal_count(2, 2), 1);
        assert_eq!(cuspidal_count(2, 3), 3);
        assert_eq!(cuspidal_count(3, 2), 2);
        assert_eq!(cuspidal_count(4, 2), 3);
        for d in 1..=6 {
            for q in 2..=7u64 {
                let poly = cuspidal_count_poly(d).eval_int(&BigInt::from(q));
                assert_eq!(poly, BigRational::from_integer(cuspidal_count(d, q).into()));
            }
        }
    }

    #[test]
    fn symbol_text() {
        assert_eq!(CuspidalSymbol::IOTA.to_string(), "iota");
        assert_eq!(c(2, 0).to_string(), "c(2,0)");
        assert_eq!("c(2,3)".parse::<CuspidalSymbol>().unwrap(), c(2, 3));
        assert_eq!("c(1,0)".parse::<CuspidalSymbol>().unwrap(), CuspidalSymbol::IOTA);
        assert!("c(0,1)".parse::<CuspidalSymbol>().is_err());
        assert!("rho".parse::<CuspidalSymbol>().is_err());
    }

    #[test]
    fn label_json() {
        let mu = IrrepLabel::new([(CuspidalSymbol::IOTA, part(&[2, 1])), (c(2, 0), part(&[1]))]);
        let json = serde_json::to_string(&mu).unwrap();
        assert_eq!(json, r#"{"iota":[2,1],"c(2,0)":[1]}"#);
        assert_eq!(json.parse::<IrrepLabel>().unwrap(), mu);
        assert_eq!(r#"{"c(2,0)":[1],"iota":[]}"#.parse::<IrrepLabel>().unwrap().norm(), 2);
        assert!(r#"{"iota":[1,2]}"#.parse::<IrrepLabel>().is_err());
    }

    #[test]
    fn norms() {
        assert_eq!(IrrepLabel::iota(part(&[2, 1])).norm(), 3);
        assert_eq!(IrrepLabel::new([(c(2, 0), part(&[1]))]).norm(), 2);
        assert_eq!(IrrepLabel::empty().norm(), 0);
    }

    #[test]
    fn pad_examples() {
        let lambda = IrrepLabel::iota(part(&[1]));
        assert_eq!(lambda.pad(3).unwrap(), IrrepLabel::iota(part(&[2, 1])));
        assert_eq!(IrrepLabel::empty().pad(4).unwrap(), IrrepLabel::iota(part(&[4])));
        assert_eq!(
            IrrepLabel::iota(part(&[2])).pad(3),
            Err(Error::PadUndefined { n: 3, required: 4 })
        );
        // pad to exactly the norm leaves the iota slot empty
        let cusp = IrrepLabel::new([(c(2, 0), part(&[1]))]);
        assert_eq!(cusp.pad(2).unwrap(), cusp);
    }

    #[test]
    fn unpad_examples() {
        assert_eq!(
            IrrepLabel::iota(part(&[2, 1])).unpad(),
            (IrrepLabel::iota(part(&[1])), 3)
        );
        assert_eq!(IrrepLabel::iota(part(&[4])).unpad(), (IrrepLabel::empty(), 4));
        let mu = IrrepLabel::new([(c(2, 0), part(&[1])), (CuspidalSymbol::IOTA, part(&[3]))]);
        assert_eq!(mu.unpad(), (IrrepLabel::new([(c(2, 0), part(&[1]))]), 5));
    }

    #[test]
    fn pad_unpad_inverse() {
        for norm in 0..=5 {
            for lambda in generic_labels(norm).into_iter().map(|(l, _)| l) {
                let start = lambda.norm() + lambda.iota_part().first();
                for n in start..=12 {
                    let mu = lambda.pad(n).unwrap();
                    assert_eq!(mu.norm(), n);
                    assert_eq!(mu.unpad(), (lambda.clone(), n));
                }
            }
        }
    }

    #[test]
    fn dimension_examples() {
        let q = QPoly::x();
        assert_eq!(IrrepLabel::iota(part(&[3])).dim_symbolic().unwrap(), QPoly::one());
        assert_eq!(IrrepLabel::iota(part(&[1, 1])).dim_symbolic().unwrap(), q);
        assert_eq!(
            IrrepLabel::new([(c(2, 0), part(&[1]))]).dim_symbolic().unwrap(),
            QPoly::from_ints(&[-1, 1])
        );
        assert_eq!(
            IrrepLabel::iota(part(&[2, 1])).dim_symbolic().unwrap(),
            QPoly::from_ints(&[0, 1, 1])
        );
        assert_eq!(IrrepLabel::empty().dim_symbolic().unwrap(), QPoly::one());
        assert_eq!(IrrepLabel::iota(part(&[1, 1])).dim_at(5), BigInt::from(5));
    }

    #[test]
    fn steinberg_dimension() {
        for n in 1..=5u32 {
            let steinberg = IrrepLabel::iota(Partition::new(&vec![1; n as usize]).unwrap());
            let expected = QPoly::monomial(BigRational::one(), (n * (n - 1) / 2) as usize);
            assert_eq!(steinberg.dim_symbolic().unwrap(), expected);
        }
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_irreps(1, 2), vec![IrrepLabel::iota(part(&[1]))]);
        assert_eq!(
            enumerate_irreps(2, 2),
            vec![
                IrrepLabel::iota(part(&[2])),
                IrrepLabel::iota(part(&[1, 1])),
                IrrepLabel::new([(c(2, 0), part(&[1]))]),
            ]
        );
        assert_eq!(enumerate_irreps(0, 3), vec![IrrepLabel::empty()]);
        assert_eq!(enumerate_irreps(1, 5).len(), 4);
    }

    #[test]
    fn sum_of_squares_small() {
        for q in 2..=5u64 {
            for n in 1..=4u32 {
                let labels = enumerate_irreps(n, q);
                assert!(labels.iter().all(|l| l.norm() == n));
                let total: BigInt = labels.iter().map(|l| l.dim_at(q).pow(2)).sum();
                assert_eq!(total, gl_order(n, &BigInt::from(q)), "n={n} q={q}");
            }
        }
    }

    #[test]
    fn symbolic_sum_of_squares() {
        // sum over generic labels of count(q) * dim(q)^2 = |GL_n(F_q)| identically in q
        for n in 0..=5u32 {
            let total = generic_labels(n).iter().fold(QPoly::zero(), |acc, (l, count)| {
                let d = l.dim_symbolic().unwrap();
                &acc + &(count * &(&d * &d))
            });
            let order = &QPoly::monomial(BigRational::one(), (n * n.saturating_sub(1) / 2) as usize)
                * &phi(n);
            assert_eq!(total, order, "n={n}");
        }
    }

    #[test]
    fn generic_counts_match_enumeration() {
        for n in 0..=4u32 {
            let generic = generic_labels(n);
            for q in 2..=4u64 {
                let total = generic.iter().fold(BigRational::zero(), |acc, (_, count)| {
                    acc + count.eval_int(&BigInt::from(q))
                });
                assert_eq!(
                    total,
                    BigRational::from_integer(enumerate_irreps(n, q).len().into()),
                    "n={n} q={q}"
                );
            }
        }
    }

    #[test]
    fn symbolic_numeric_consistency() {
        for q in 2..=4u64 {
            for n in 0..=4 {
                for l in enumerate_irreps(n, q) {
                    let sym = l.dim_symbolic().unwrap().eval_int(&BigInt::from(q));
                    let num = l.dim_at(q);
                    assert!(num > BigInt::zero());
                    assert_eq!(sym, BigRational::from_integer(num));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn enumeration_is_sorted_and_unique(n in 0u32..=4, q in 2u64..=4) {
            let labels = enumerate_irreps(n, q);
            prop_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
