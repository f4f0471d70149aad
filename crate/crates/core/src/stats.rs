//! Union and intersection statistics of a pair of families.
//!
//! Counting is exact: solution counts and binomials are big integers, the
//! relative quantities `u`, `c`, `m_S`, `m_A` are rationals with
//! denominator `n`, and a real logarithm enters only when the solution
//! density `t` is finally reported.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_integer::binomial;
use num_rational::Rational64;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::sets::{RecoveringPair, SetError, SubsetMask};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StatsError {
    #[error("statistics are undefined for an empty family")]
    EmptyFamily,
    #[error("repeated {side} component {mask} among full-union solutions: input is not a recovering pair")]
    MatchingRepeat { side: &'static str, mask: String },
    #[error(transparent)]
    Set(#[from] SetError),
}

/// How often each union size `|A ∪ B|` occurs over all pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnionHistogram {
    n: usize,
    counts: BTreeMap<usize, u64>,
}

impl UnionHistogram {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Counts keyed by union size, ascending.
    pub fn counts(&self) -> &BTreeMap<usize, u64> {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// The most frequent union size; ties break toward the smaller size.
    pub fn mode(&self) -> Option<usize> {
        let mut best: Option<(usize, u64)> = None;
        for (&size, &count) in &self.counts {
            if best.map_or(true, |(_, c)| count > c) {
                best = Some((size, count));
            }
        }
        best.map(|(s, _)| s)
    }
}

pub fn union_histogram(pair: &RecoveringPair) -> UnionHistogram {
    let mut counts = BTreeMap::new();
    for a in pair.a_family().members() {
        for b in pair.b_family().members() {
            *counts.entry(a.union(b).cardinality()).or_insert(0u64) += 1;
        }
    }
    UnionHistogram {
        n: pair.ground().size(),
        counts,
    }
}

/// Number of solutions of `A ∪ B = [n]`.
pub fn count_full_union_solutions(pair: &RecoveringPair) -> u64 {
    let full = pair.ground().full_mask();
    let mut count = 0;
    for a in pair.a_family().members() {
        for b in pair.b_family().members() {
            if a.union(b) == full {
                count += 1;
            }
        }
    }
    count
}

/// Number of solutions of `A ∪ B = C` for one fixed `C`.
pub fn solutions_per_union(pair: &RecoveringPair, c: &SubsetMask) -> u64 {
    let mut count = 0;
    for a in pair.a_family().members() {
        for b in pair.b_family().members() {
            if &a.union(b) == c {
                count += 1;
            }
        }
    }
    count
}

/// The full-union solutions, which in a recovering pair form a partial
/// matching: no `A` and no `B` is used twice. A repeat is returned as an
/// error carrying the offending component; it can only happen when the
/// input is not recovering.
pub fn full_union_matching(
    pair: &RecoveringPair,
) -> Result<Vec<(SubsetMask, SubsetMask)>, StatsError> {
    let full = pair.ground().full_mask();
    let mut used_a: Vec<&SubsetMask> = Vec::new();
    let mut used_b: Vec<&SubsetMask> = Vec::new();
    let mut matching = Vec::new();
    for a in pair.a_family().members() {
        for b in pair.b_family().members() {
            if a.union(b) != full {
                continue;
            }
            if used_a.contains(&a) {
                return Err(StatsError::MatchingRepeat {
                    side: "first",
                    mask: a.to_string(),
                });
            }
            if used_b.contains(&b) {
                return Err(StatsError::MatchingRepeat {
                    side: "second",
                    mask: b.to_string(),
                });
            }
            used_a.push(a);
            used_b.push(b);
            matching.push((a.clone(), b.clone()));
        }
    }
    Ok(matching)
}

/// `sum over pairs of 2^|A ∩ B|`, the intersection weight whose growth rate
/// separates the weighted conjecture from the plain one.
pub fn aharoni_sum(pair: &RecoveringPair) -> BigUint {
    let mut sum = BigUint::from(0u8);
    for a in pair.a_family().members() {
        for b in pair.b_family().members() {
            sum += BigUint::from(1u8) << a.intersection(b).cardinality();
        }
    }
    sum
}

/// Witness for two pair solutions with the same union and the same
/// intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CupcapWitness {
    pub a: SubsetMask,
    pub b: SubsetMask,
    pub a_prime: SubsetMask,
    pub b_prime: SubsetMask,
}

/// In a recovering pair, pairs with equal unions have pairwise distinct
/// intersections. Returns a witness when that fails.
pub fn check_cupcap(pair: &RecoveringPair) -> Result<(), CupcapWitness> {
    let mut seen: HashMap<(SubsetMask, SubsetMask), (usize, usize)> = HashMap::new();
    for (ai, a) in pair.a_family().members().iter().enumerate() {
        for (bi, b) in pair.b_family().members().iter().enumerate() {
            let key = (a.union(b), a.intersection(b));
            if let Some(&(pa, pb)) = seen.get(&key) {
                if pa != ai || pb != bi {
                    return Err(CupcapWitness {
                        a: pair.a_family().members()[pa].clone(),
                        b: pair.b_family().members()[pb].clone(),
                        a_prime: a.clone(),
                        b_prime: b.clone(),
                    });
                }
            } else {
                seen.insert(key, (ai, bi));
            }
        }
    }
    Ok(())
}

/// The structural statistics of a pair at a fixed ground size.
///
/// `u_mode` and `t_density` exist for every nonempty pair; the relative
/// member size `c`, the symmetric intersection size `m_s = 2c - u` and the
/// typical intersection size `m_a` require a completely uniform pair and
/// are `None` otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct PairStatistics {
    pub n: usize,
    /// Most frequent union size (ties toward smaller).
    pub mode_size: usize,
    /// Number of pairs attaining the mode size.
    pub mode_count: u64,
    pub u_mode: Rational64,
    /// Solves `average solutions per mode-size set = 2^(t * u * n)`.
    /// Negative for sparse pairs; zero, flagged degenerate, when the mode
    /// union is empty.
    pub t_density: f64,
    pub degenerate: bool,
    pub c: Option<Rational64>,
    pub m_s: Option<Rational64>,
    /// Mode-size unions whose solution count is at least half the average,
    /// in ascending mask order.
    pub crowded: Vec<SubsetMask>,
    pub m_a: Option<Rational64>,
}

/// Base-2 logarithm of a big integer, exact to f64 precision.
pub(crate) fn log2_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 53 {
        return x.to_f64().expect("small value").log2();
    }
    let top = (x >> (bits - 53)).to_f64().expect("53 bits fit");
    top.log2() + (bits - 53) as f64
}

/// Most frequent value in a nonempty slice, ties toward the smaller value.
fn mode_smallest(values: &[usize]) -> usize {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &v in values {
        *counts.entry(v).or_insert(0) += 1;
    }
    let best = counts.values().copied().max().expect("nonempty");
    *counts
        .iter()
        .find(|(_, &c)| c == best)
        .expect("max exists")
        .0
}

pub fn compute_statistics(pair: &RecoveringPair) -> Result<PairStatistics, StatsError> {
    if pair.a_family().is_empty() || pair.b_family().is_empty() {
        return Err(StatsError::EmptyFamily);
    }
    let n = pair.ground().size();
    let hist = union_histogram(pair);
    let mode_size = hist.mode().expect("nonempty histogram");
    let mode_count = hist.counts()[&mode_size];
    let u_mode = Rational64::new(mode_size as i64, n as i64);

    // average = mode_count / C(n, mode_size), exactly; t only at the end.
    let binom = binomial(BigUint::from(n), BigUint::from(mode_size));
    let degenerate = mode_size == 0;
    let t_density = if degenerate {
        0.0
    } else {
        (log2_biguint(&BigUint::from(mode_count)) - log2_biguint(&binom)) / mode_size as f64
    };

    // Group mode-size solutions by their union.
    let mut by_union: BTreeMap<SubsetMask, Vec<(usize, usize)>> = BTreeMap::new();
    for (ai, a) in pair.a_family().members().iter().enumerate() {
        for (bi, b) in pair.b_family().members().iter().enumerate() {
            let un = a.union(b);
            if un.cardinality() == mode_size {
                by_union.entry(un).or_default().push((ai, bi));
            }
        }
    }
    // Crowded: count >= average / 2, i.e. 2 * count * C(n, mode) >= mode_count.
    let crowded: Vec<SubsetMask> = by_union
        .iter()
        .filter(|(_, sols)| 2u32 * BigUint::from(sols.len()) * &binom >= BigUint::from(mode_count))
        .map(|(c, _)| c.clone())
        .collect();

    let uni = crate::sets::uniformity(pair.a_family(), pair.b_family())?;
    let (c, m_s, m_a) = match uni {
        crate::sets::Uniformity::CompletelyUniform { k } => {
            let c = Rational64::new(k as i64, n as i64);
            let m_s = Rational64::from_integer(2) * c - u_mode;
            let m_a = typical_intersection(pair, &by_union, &crowded)
                .map(|v| Rational64::new(v as i64, n as i64));
            (Some(c), Some(m_s), m_a)
        }
        _ => (None, None, None),
    };

    Ok(PairStatistics {
        n,
        mode_size,
        mode_count,
        u_mode,
        t_density,
        degenerate,
        c,
        m_s,
        crowded,
        m_a,
    })
}

/// The nested mode defining `m_A`: per first-family member used in a
/// crowded union, fix the smallest such union and take the most frequent
/// intersection size with the second components of its solutions; then take
/// the most frequent of those per-member values. All ties break low.
fn typical_intersection(
    pair: &RecoveringPair,
    by_union: &BTreeMap<SubsetMask, Vec<(usize, usize)>>,
    crowded: &[SubsetMask],
) -> Option<usize> {
    let mut per_member = Vec::new();
    for (ai, a) in pair.a_family().members().iter().enumerate() {
        // Crowded unions are in ascending mask order, so the first hit is
        // the smallest one using this member.
        let home = crowded
            .iter()
            .find(|c| by_union[*c].iter().any(|&(sa, _)| sa == ai));
        let Some(home) = home else { continue };
        let sizes: Vec<usize> = by_union[home]
            .iter()
            .map(|&(_, bi)| {
                a.intersection(&pair.b_family().members()[bi]).cardinality()
            })
            .collect();
        per_member.push(mode_smallest(&sizes));
    }
    if per_member.is_empty() {
        None
    } else {
        Some(mode_smallest(&per_member))
    }
}
