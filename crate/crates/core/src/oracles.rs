//! Brute-force verifiers that share no code with the main computation.
//!
//! * Schur polynomials are built from semistandard tableaux in `k` variables
//!   and products are expanded back into the Schur basis by leading-term
//!   elimination, giving an independent check of the Pieri rule.
//! * Injective maps `F_p^m -> F_p^n` are counted by enumerating every matrix.
//! * Group orders are compared with the sum of squared irreducible dimensions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::irreps::enumerate_irreps;
use crate::par;
use crate::partition::{partitions_of, Partition};
use crate::qfunc::gl_order;

/// Largest `|lambda| + r` accepted by [`pieri_oracle_check`].
pub const PIERI_HORIZON: u32 = 12;

/// Largest matrix count enumerated by [`count_injections_bruteforce`].
pub const MATRIX_HORIZON: u64 = 10_000_000;

/// A polynomial in `k` variables as a map from exponent vectors to coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPolyMap {
    vars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SymPolyMap {
    pub fn one(vars: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; vars], BigInt::one());
        Self { vars, terms }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn mul(&self, other: &SymPolyMap) -> SymPolyMap {
        assert_eq!(self.vars, other.vars, "variable counts differ");
        let mut out = SymPolyMap {
            vars: self.vars,
            terms: BTreeMap::new(),
        };
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let exps = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *out.terms.entry(exps).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    /// Exchanges variables `i` and `j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> SymPolyMap {
        SymPolyMap {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.swap(i, j);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Total degree if every monomial has the same degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degrees.next().unwrap_or(0);
        degrees.all(|d| d == first).then_some(first)
    }

    /// Checks symmetry: every monomial orbit under permutation of the
    /// variables is fully present with a single coefficient.
    pub fn check_symmetric(&self) -> Result<()> {
        let mut orbits: BTreeMap<Vec<u32>, (BigInt, usize)> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut sorted = e.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let slot = orbits.entry(sorted.clone()).or_insert((c.clone(), 0));
            if slot.0 != *c {
                return Err(Error::NotSymmetric(format!(
                    "coefficients differ on the orbit of {sorted:?}"
                )));
            }
            slot.1 += 1;
        }
        for (sorted, (_, seen)) in &orbits {
            if *seen != orbit_size(sorted) {
                return Err(Error::NotSymmetric(format!(
                    "orbit of {sorted:?} is incomplete"
                )));
            }
        }
        Ok(())
    }

    /// Coefficients at the partition-shaped (non-increasing) exponents.
    pub fn dominant_part(&self) -> BTreeMap<Partition, BigInt> {
        self.terms
            .iter()
            .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
            .map(|(e, c)| (Partition::from_sorted(e.clone()), c.clone()))
            .collect()
    }
}

fn orbit_size(sorted: &[u32]) -> usize {
    let factorial = |n: usize| (1..=n).product::<usize>();
    let mut size = factorial(sorted.len());
    let mut i = 0;
    while i < sorted.len() {
        let j = (i..sorted.len()).find(|&j| sorted[j] != sorted[i]).unwrap_or(sorted.len());
        size /= factorial(j - i);
        i = j;
    }
    size
}

// Visits every semistandard tableau of `shape` with entries below `vars`,
// optionally with a prescribed content, passing its content vector.
fn for_each_ssyt(shape: &Partition, vars: usize, content: Option<&[u32]>, f: &mut dyn FnMut(&[u32])) {
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &row)| (0..row as usize).map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.parts().iter().map(|&r| vec![0; r as usize]).collect();
    let mut counts = vec![0u32; vars];
    fill_cell(&cells, 0, &mut grid, &mut counts, content, f);
}

fn fill_cell(
    cells: &[(usize, usize)],
    at: usize,
    grid: &mut Vec<Vec<usize>>,
    counts: &mut Vec<u32>,
    content: Option<&[u32]>,
    f: &mut dyn FnMut(&[u32]),
) {
    if at == cells.len() {
        f(counts);
        return;
    }
    let (i, j) = cells[at];
    let from_left = if j > 0 { grid[i][j - 1] } else { 0 };
    let from_above = if i > 0 { grid[i - 1][j] + 1 } else { 0 };
    for v in from_left.max(from_above)..counts.len() {
        if let Some(target) = content {
            if counts[v] >= target[v] {
                continue;
            }
        }
        grid[i][j] = v;
        counts[v] += 1;
        fill_cell(cells, at + 1, grid, counts, content, f);
        counts[v] -= 1;
    }
}

/// The Schur polynomial `s_lambda(x_1, .., x_k)` as a sum over semistandard tableaux.
pub fn schur_poly(lambda: &Partition, vars: usize) -> Result<SymPolyMap> {
    if vars < lambda.len() {
        return Err(Error::TooFewVariables {
            rows: lambda.len(),
            vars,
        });
    }
    let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for_each_ssyt(lambda, vars, None, &mut |content| {
        *terms.entry(content.to_vec()).or_insert_with(BigInt::zero) += 1;
    });
    Ok(SymPolyMap { vars, terms })
}

/// `h_r(x_1, .., x_k)`.
pub fn complete_homogeneous(r: u32, vars: usize) -> SymPolyMap {
    if r == 0 {
        return SymPolyMap::one(vars);
    }
    schur_poly(&Partition::from_sorted(vec![r]), vars).expect("one row fits in any k >= 1")
}

/// Kostka number: tableaux of `shape` with content `weight`.
pub fn kostka(shape: &Partition, weight: &Partition) -> u64 {
    if shape.size() != weight.size() {
        return 0;
    }
    let content: Vec<u32> = weight.parts().to_vec();
    let mut count = 0u64;
    for_each_ssyt(shape, content.len(), Some(&content), &mut |_| count += 1);
    count
}

/// Expands a symmetric homogeneous polynomial in the Schur basis.
///
/// Needs `k >= degree` for the expansion to be faithful.
pub fn schur_expand(p: &SymPolyMap) -> Result<BTreeMap<Partition, BigInt>> {
    let degree = p
        .homogeneous_degree()
        .ok_or_else(|| Error::InvalidArgument("polynomial is not homogeneous".into()))?;
    if (p.vars as u32) < degree {
        return Err(Error::TooFewVariables {
            rows: degree as usize,
            vars: p.vars,
        });
    }
    p.check_symmetric()?;
    expand_dominant(p.dominant_part(), p.vars)
}

/// Schur expansion from the partition-shaped coefficients of a symmetric
/// polynomial in `vars` variables, which determine it. The lexicographically
/// largest surviving exponent is always the next Schur index, carrying its
/// own coefficient; its Kostka row is then subtracted.
pub fn expand_dominant(
    mut residual: BTreeMap<Partition, BigInt>,
    vars: usize,
) -> Result<BTreeMap<Partition, BigInt>> {
    residual.retain(|_, c| !c.is_zero());
    let mut out = BTreeMap::new();
    while let Some((lead, c)) = residual.iter().next_back().map(|(l, c)| (l.clone(), c.clone())) {
        for alpha in partitions_of(lead.size()) {
            if alpha > lead || alpha.len() > vars {
                continue;
            }
            let k = kostka(&lead, &alpha);
            if k > 0 {
                *residual.entry(alpha).or_insert_with(BigInt::zero) -= &c * BigInt::from(k);
            }
        }
        residual.retain(|_, v| !v.is_zero());
        if residual.contains_key(&lead) {
            return Err(Error::Internal(format!("leading term {lead} did not cancel")));
        }
        out.insert(lead, c);
    }
    Ok(out)
}

/// Partition-shaped coefficients of `f * g`, computed monomial by monomial.
pub fn product_dominant_part(f: &SymPolyMap, g: &SymPolyMap) -> BTreeMap<Partition, BigInt> {
    assert_eq!(f.vars, g.vars, "variable counts differ");
    let degree = f.homogeneous_degree().unwrap_or(0) + g.homogeneous_degree().unwrap_or(0);
    let mut out = BTreeMap::new();
    for alpha in partitions_of(degree) {
        if alpha.len() > f.vars {
            continue;
        }
        let target: Vec<u32> = (0..f.vars).map(|i| alpha.part(i)).collect();
        let mut total = BigInt::zero();
        for (beta, cb) in &f.terms {
            if beta.iter().zip(&target).all(|(b, t)| b <= t) {
                let rest: Vec<u32> = target.iter().zip(beta).map(|(t, b)| t - b).collect();
                if let Some(cg) = g.terms.get(&rest) {
                    total += cb * cg;
                }
            }
        }
        if !total.is_zero() {
            out.insert(alpha, total);
        }
    }
    out
}

/// Checks `s_lambda * h_r = sum of s_mu` over `mu ~ lambda + r`, computing the
/// left side from tableaux in `|lambda| + r` variables.
pub fn pieri_oracle_check(lambda: &Partition, r: u32) -> Result<bool> {
    let degree = lambda.size() + r;
    if degree > PIERI_HORIZON {
        return Err(Error::Horizon(format!(
            "|lambda| + r = {degree} exceeds {PIERI_HORIZON}"
        )));
    }
    let vars = (degree as usize).max(1);
    let product = product_dominant_part(&schur_poly(lambda, vars)?, &complete_homogeneous(r, vars));
    let expansion = expand_dominant(product, vars)?;
    let expected: BTreeMap<Partition, BigInt> = lambda
        .add_horizontal_strip(r)
        .into_iter()
        .map(|mu| (mu, BigInt::one()))
        .collect();
    Ok(expansion == expected)
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

// Rank of an n x m matrix over F_p given column-major in `entries`.
fn rank_mod_p(mut cols: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = cols.first().map_or(0, Vec::len);
    let mut rank = 0;
    for row in 0..rows {
        let Some(pivot) = (rank..cols.len()).find(|&c| cols[c][row] != 0) else {
            continue;
        };
        cols.swap(rank, pivot);
        let inv = mod_pow(cols[rank][row], p - 2, p);
        let pivot_col = cols[rank].clone();
        for (c, col) in cols.iter_mut().enumerate() {
            if c != rank && col[row] != 0 {
                let factor = col[row] * inv % p;
                for (x, &y) in col.iter_mut().zip(&pivot_col) {
                    *x = (*x + p * p - factor * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Counts `n x m` matrices over `F_p` of rank `m` by enumerating all of them.
pub fn count_injections_bruteforce(m: u32, n: u32, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let cells = m * n;
    let total = p
        .checked_pow(cells)
        .filter(|&t| t <= MATRIX_HORIZON)
        .ok_or_else(|| {
            Error::Horizon(format!("{p}^{cells} matrices exceeds {MATRIX_HORIZON}"))
        })?;
    const CHUNK: u64 = 4096;
    let chunks = total.div_ceil(CHUNK);
    let counts = par::map_range(0, chunks, |chunk| {
        let lo = chunk * CHUNK;
        let hi = (lo + CHUNK).min(total);
        (lo..hi)
            .filter(|&code| {
                let mut digits = code;
                let cols: Vec<Vec<u64>> = (0..m)
                    .map(|_| {
                        (0..n)
                            .map(|_| {
                                let d = digits % p;
                                digits /= p;
                                d
                            })
                            .collect()
                    })
                    .collect();
                rank_mod_p(cols, p) == m as usize
            })
            .count() as u64
    });
    Ok(counts.into_iter().sum())
}

/// Outcome of comparing `sum dim^2` against `|GL_n(F_q)|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupOrderCheck {
    pub n: u32,
    pub q: u64,
    pub labels: usize,
    pub sum_of_squares: BigInt,
    pub group_order: BigInt,
    /// Matrix count by enumeration, when `q` is prime and small enough.
    pub brute_force: Option<u64>,
}

impl GroupOrderCheck {
    pub fn passed(&self) -> bool {
        self.sum_of_squares == self.group_order
            && self
                .brute_force
                .is_none_or(|b| BigInt::from(b) == self.group_order)
    }
}

pub fn group_order_report(n: u32, q: u64) -> GroupOrderCheck {
    let labels = enumerate_irreps(n, q);
    let sum_of_squares = par::map(&labels, |l| l.dim_at(q).pow(2u32)).into_iter().sum();
    let brute_force = if is_prime(q) {
        count_injections_bruteforce(n, n, q).ok()
    } else {
        None
    };
    GroupOrderCheck {
        n,
        q,
        labels: labels.len(),
        sum_of_squares,
        group_order: gl_order(n, &BigInt::from(q)),
        brute_force,
    }
}

pub fn group_order_check(n: u32, q: u64) -> bool {
    group_order_report(n, q).passed()
}
