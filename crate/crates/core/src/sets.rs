//! Ground sets, subset bitmasks and the recovering-pair predicates.
//!
//! Elements are `1..=n` externally and bit positions `0..n` internally.
//! Verification hashes difference sets, so checking a pair costs one hash
//! operation per `(A, B)` pair instead of a loop over quadruples.

use std::cmp::Ordering;
use std::collections::hash_map::Entry;
use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

/// Largest supported ground set size.
pub const MAX_GROUND: usize = 1024;

const WORD_BITS: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SetError {
    #[error("ground set size must be between 1 and {MAX_GROUND}, got {0}")]
    GroundSize(usize),
    #[error("element {element} outside ground set of size {n}")]
    ElementRange { element: usize, n: usize },
    #[error("mask does not fit a ground set of size {n}")]
    MaskWidth { n: usize },
    #[error("invalid hex mask {0:?}")]
    BadHex(String),
    #[error("duplicate member {member} in family")]
    DuplicateMember { member: String },
    #[error("families live on different ground sets ({left} vs {right})")]
    GroundMismatch { left: usize, right: usize },
    #[error("empty family: uniformity is undefined")]
    EmptyFamily,
}

/// The ground set `[n] = {1, ..., n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self, SetError> {
        if n == 0 || n > MAX_GROUND {
            return Err(SetError::GroundSize(n));
        }
        Ok(GroundSet { n })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    fn words(&self) -> usize {
        (self.n + WORD_BITS - 1) / WORD_BITS
    }

    pub fn empty_mask(&self) -> SubsetMask {
        SubsetMask {
            words: vec![0; self.words()],
        }
    }

    pub fn full_mask(&self) -> SubsetMask {
        let mut words = vec![u64::MAX; self.words()];
        let spare = self.words() * WORD_BITS - self.n;
        if spare > 0 {
            *words.last_mut().unwrap() >>= spare;
        }
        SubsetMask { words }
    }
}

/// A subset of a ground set, stored as a little-endian bit vector.
///
/// Masks compare as the integers they encode (most significant word first),
/// which is the order used everywhere a "smallest" set must be picked
/// deterministically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    words: Vec<u64>,
}

impl SubsetMask {
    /// Builds a mask from 1-based elements. Order and repetition of the
    /// input slice are irrelevant; the result is the set of its entries.
    pub fn from_elements(ground: GroundSet, elements: &[usize]) -> Result<Self, SetError> {
        let mut mask = ground.empty_mask();
        for &e in elements {
            if e == 0 || e > ground.size() {
                return Err(SetError::ElementRange {
                    element: e,
                    n: ground.size(),
                });
            }
            mask.words[(e - 1) / WORD_BITS] |= 1u64 << ((e - 1) % WORD_BITS);
        }
        Ok(mask)
    }

    /// Builds a mask from the low `n` bits of `bits`. Only valid for ground
    /// sets of at most 64 elements; handy in tests and in the search engine.
    pub fn from_bits(ground: GroundSet, bits: u64) -> Result<Self, SetError> {
        if ground.size() < WORD_BITS && bits >> ground.size() != 0 {
            return Err(SetError::MaskWidth { n: ground.size() });
        }
        let mut mask = ground.empty_mask();
        mask.words[0] = bits;
        Ok(mask)
    }

    /// Parses the compact hexadecimal form produced by [`SubsetMask::to_hex`].
    pub fn from_hex(ground: GroundSet, hex: &str) -> Result<Self, SetError> {
        let digits = hex.strip_prefix("0x").unwrap_or(hex);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_hexdigit()) {
            return Err(SetError::BadHex(hex.to_string()));
        }
        let mut mask = ground.empty_mask();
        for (i, c) in digits.chars().rev().enumerate() {
            let nibble = c.to_digit(16).unwrap() as u64;
            if nibble == 0 {
                continue;
            }
            let bit = i * 4;
            if bit >= mask.words.len() * WORD_BITS {
                return Err(SetError::MaskWidth { n: ground.size() });
            }
            mask.words[bit / WORD_BITS] |= nibble << (bit % WORD_BITS);
        }
        // Reject bits beyond the ground set.
        let full = ground.full_mask();
        if !mask.is_subset_of(&full) {
            return Err(SetError::MaskWidth { n: ground.size() });
        }
        Ok(mask)
    }

    pub fn to_hex(&self) -> String {
        let mut s = String::from("0x");
        let mut started = false;
        for w in self.words.iter().rev() {
            if started {
                s.push_str(&format!("{w:016x}"));
            } else if *w != 0 {
                s.push_str(&format!("{w:x}"));
                started = true;
            }
        }
        if !started {
            s.push('0');
        }
        s
    }

    /// 1-based elements in ascending order.
    pub fn elements(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.cardinality());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out.push(wi * WORD_BITS + b + 1);
                bits &= bits - 1;
            }
        }
        out
    }

    pub fn contains(&self, element: usize) -> bool {
        if element == 0 {
            return false;
        }
        let bit = element - 1;
        self.words
            .get(bit / WORD_BITS)
            .map_or(false, |w| w >> (bit % WORD_BITS) & 1 == 1)
    }

    pub fn cardinality(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &SubsetMask) -> SubsetMask {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &SubsetMask) -> SubsetMask {
        self.zip_with(other, |a, b| a & b)
    }

    /// Set difference `self \ other`.
    pub fn difference(&self, other: &SubsetMask) -> SubsetMask {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn is_subset_of(&self, other: &SubsetMask) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
            && self.words[other.words.len().min(self.words.len())..]
                .iter()
                .all(|&w| w == 0)
    }

    pub fn complement_in(&self, ground: GroundSet) -> SubsetMask {
        ground.full_mask().difference(self)
    }

    /// Re-embeds the mask into `target`, shifting every element up by
    /// `offset`. Used by the disjoint-union product.
    pub fn embed(&self, offset: usize, target: GroundSet) -> Result<SubsetMask, SetError> {
        let mut out = target.empty_mask();
        for e in self.elements() {
            let shifted = e + offset;
            if shifted > target.size() {
                return Err(SetError::ElementRange {
                    element: shifted,
                    n: target.size(),
                });
            }
            out.words[(shifted - 1) / WORD_BITS] |= 1u64 << ((shifted - 1) % WORD_BITS);
        }
        Ok(out)
    }

    /// Low word of the bit vector; the whole mask when the ground set has at
    /// most 64 elements.
    pub fn low_bits(&self) -> u64 {
        self.words[0]
    }

    fn zip_with(&self, other: &SubsetMask, f: impl Fn(u64, u64) -> u64) -> SubsetMask {
        debug_assert_eq!(self.words.len(), other.words.len());
        SubsetMask {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl Ord for SubsetMask {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.words.len(), other.words.len());
        self.words.iter().rev().cmp(other.words.iter().rev())
    }
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// A family of distinct subsets of a common ground set, stored in ascending
/// mask order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    ground: GroundSet,
    members: Vec<SubsetMask>,
}

impl SetSystem {
    /// Validates and sorts the members. Duplicate sets are a hard error:
    /// silently deduplicating would change every size statistic downstream.
    pub fn new(ground: GroundSet, members: Vec<SubsetMask>) -> Result<Self, SetError> {
        let full = ground.full_mask();
        let mut seen = HashSet::with_capacity(members.len());
        for m in &members {
            if m.words.len() != full.words.len() || !m.is_subset_of(&full) {
                return Err(SetError::MaskWidth { n: ground.size() });
            }
            if !seen.insert(m.clone()) {
                return Err(SetError::DuplicateMember {
                    member: m.to_string(),
                });
            }
        }
        let mut members = members;
        members.sort_unstable();
        Ok(SetSystem { ground, members })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[SubsetMask] {
        &self.members
    }

    pub fn contains(&self, mask: &SubsetMask) -> bool {
        self.members.binary_search(mask).is_ok()
    }
}

/// Which of the two recovering conditions a witness violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `A \ B = A' \ B'` with `A != A'`.
    A,
    /// `B \ A = B' \ A'` with `B != B'`.
    B,
}

/// A concrete violating quadruple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolationWitness {
    pub side: Side,
    pub a: SubsetMask,
    pub b: SubsetMask,
    pub a_prime: SubsetMask,
    pub b_prime: SubsetMask,
}

/// Outcome of a pair predicate: either it holds or here is a counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated(ViolationWitness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&ViolationWitness> {
        match self {
            Verdict::Holds => None,
            Verdict::Violated(w) => Some(w),
        }
    }
}

fn check_grounds(a: &SetSystem, b: &SetSystem) -> Result<(), SetError> {
    if a.ground() != b.ground() {
        return Err(SetError::GroundMismatch {
            left: a.ground().size(),
            right: b.ground().size(),
        });
    }
    Ok(())
}

/// Checks `A \ B = A' \ B' => A = A'` over all quadruples, by hashing each
/// difference: a repeated difference with a different first set is exactly a
/// violation.
fn first_condition(a: &SetSystem, b: &SetSystem) -> Verdict {
    let mut seen: HashMap<SubsetMask, (usize, usize)> =
        HashMap::with_capacity(a.len() * b.len());
    for (ai, am) in a.members().iter().enumerate() {
        for (bi, bm) in b.members().iter().enumerate() {
            match seen.entry(am.difference(bm)) {
                Entry::Occupied(prev) => {
                    let &(pa, pb) = prev.get();
                    if pa != ai {
                        return Verdict::Violated(ViolationWitness {
                            side: Side::A,
                            a: a.members()[pa].clone(),
                            b: b.members()[pb].clone(),
                            a_prime: am.clone(),
                            b_prime: bm.clone(),
                        });
                    }
                }
                Entry::Vacant(slot) => {
                    slot.insert((ai, bi));
                }
            }
        }
    }
    Verdict::Holds
}

/// Both recovering conditions; the returned witness names the failing side.
pub fn is_recovering(a: &SetSystem, b: &SetSystem) -> Result<Verdict, SetError> {
    check_grounds(a, b)?;
    if let Verdict::Violated(w) = first_condition(a, b) {
        return Ok(Verdict::Violated(w));
    }
    if let Verdict::Violated(w) = first_condition(b, a) {
        // `first_condition(b, a)` found B \ A = B' \ A' with B != B'.
        return Ok(Verdict::Violated(ViolationWitness {
            side: Side::B,
            a: w.b,
            b: w.a,
            a_prime: w.b_prime,
            b_prime: w.a_prime,
        }));
    }
    Ok(Verdict::Holds)
}

/// Only the first recovering condition.
pub fn is_half_recovering(a: &SetSystem, b: &SetSystem) -> Result<bool, SetError> {
    check_grounds(a, b)?;
    Ok(first_condition(a, b).holds())
}

/// The cancellative relaxation: differences only need to be injective
/// against the *same* second set (`A \ B = A' \ B => A = A'` and dually).
pub fn is_cancellative(a: &SetSystem, b: &SetSystem) -> Result<Verdict, SetError> {
    check_grounds(a, b)?;
    let mut seen: HashMap<(SubsetMask, usize), usize> =
        HashMap::with_capacity(a.len() * b.len());
    for (ai, am) in a.members().iter().enumerate() {
        for (bi, bm) in b.members().iter().enumerate() {
            match seen.entry((am.difference(bm), bi)) {
                Entry::Occupied(prev) => {
                    let pa = *prev.get();
                    if pa != ai {
                        return Ok(Verdict::Violated(ViolationWitness {
                            side: Side::A,
                            a: a.members()[pa].clone(),
                            b: bm.clone(),
                            a_prime: am.clone(),
                            b_prime: bm.clone(),
                        }));
                    }
                }
                Entry::Vacant(slot) => {
                    slot.insert(ai);
                }
            }
        }
    }
    let mut seen: HashMap<(SubsetMask, usize), usize> =
        HashMap::with_capacity(a.len() * b.len());
    for (bi, bm) in b.members().iter().enumerate() {
        for (ai, am) in a.members().iter().enumerate() {
            match seen.entry((bm.difference(am), ai)) {
                Entry::Occupied(prev) => {
                    let pb = *prev.get();
                    if pb != bi {
                        return Ok(Verdict::Violated(ViolationWitness {
                            side: Side::B,
                            a: am.clone(),
                            b: b.members()[pb].clone(),
                            a_prime: am.clone(),
                            b_prime: bm.clone(),
                        }));
                    }
                }
                Entry::Vacant(slot) => {
                    slot.insert(bi);
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Size uniformity of a pair of families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Uniformity {
    NonUniform,
    /// Every member of both families has cardinality `k`.
    Uniform { k: usize },
    /// Uniform with equally sized families.
    CompletelyUniform { k: usize },
}

pub fn uniformity(a: &SetSystem, b: &SetSystem) -> Result<Uniformity, SetError> {
    check_grounds(a, b)?;
    if a.is_empty() || b.is_empty() {
        return Err(SetError::EmptyFamily);
    }
    let k = a.members()[0].cardinality();
    let all_k = a
        .members()
        .iter()
        .chain(b.members())
        .all(|m| m.cardinality() == k);
    if !all_k {
        return Ok(Uniformity::NonUniform);
    }
    if a.len() == b.len() {
        Ok(Uniformity::CompletelyUniform { k })
    } else {
        Ok(Uniformity::Uniform { k })
    }
}

/// Verification state carried by a [`RecoveringPair`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyStatus {
    Unverified,
    Recovering,
    Violated(ViolationWitness),
}

/// Two families on a shared ground set together with their verification
/// state. Constructions that are recovering by a lemma mark the pair as
/// such; anything read from the outside world starts out unverified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecoveringPair {
    a: SetSystem,
    b: SetSystem,
    status: VerifyStatus,
}

impl RecoveringPair {
    pub fn new(a: SetSystem, b: SetSystem) -> Result<Self, SetError> {
        check_grounds(&a, &b)?;
        Ok(RecoveringPair {
            a,
            b,
            status: VerifyStatus::Unverified,
        })
    }

    /// Marks the pair recovering without running the predicate. The caller
    /// must hold a proof (a constructive lemma); everything downstream
    /// trusts this flag.
    pub(crate) fn new_proven(a: SetSystem, b: SetSystem) -> Result<Self, SetError> {
        check_grounds(&a, &b)?;
        Ok(RecoveringPair {
            a,
            b,
            status: VerifyStatus::Recovering,
        })
    }

    pub fn ground(&self) -> GroundSet {
        self.a.ground()
    }

    pub fn a_family(&self) -> &SetSystem {
        &self.a
    }

    pub fn b_family(&self) -> &SetSystem {
        &self.b
    }

    pub fn status(&self) -> &VerifyStatus {
        &self.status
    }

    /// `|A| * |B|`, the quantity the `2^n` conjecture bounds.
    pub fn pair_size(&self) -> u128 {
        self.a.len() as u128 * self.b.len() as u128
    }

    /// Runs [`is_recovering`] and caches the outcome.
    pub fn verify(&mut self) -> &VerifyStatus {
        if matches!(self.status, VerifyStatus::Unverified) {
            self.status = match is_recovering(&self.a, &self.b).expect("grounds match") {
                Verdict::Holds => VerifyStatus::Recovering,
                Verdict::Violated(w) => VerifyStatus::Violated(w),
            };
        }
        &self.status
    }

    pub fn is_verified_recovering(&self) -> bool {
        matches!(self.status, VerifyStatus::Recovering)
    }

    /// Swaps the two families. The recovering property is symmetric, so the
    /// verification state carries over (with witness sides flipped).
    pub fn mirror(&self) -> RecoveringPair {
        let status = match &self.status {
            VerifyStatus::Violated(w) => VerifyStatus::Violated(ViolationWitness {
                side: match w.side {
                    Side::A => Side::B,
                    Side::B => Side::A,
                },
                a: w.b.clone(),
                b: w.a.clone(),
                a_prime: w.b_prime.clone(),
                b_prime: w.a_prime.clone(),
            }),
            s => s.clone(),
        };
        RecoveringPair {
            a: self.b.clone(),
            b: self.a.clone(),
            status,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ground(n: usize) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    fn mask(n: usize, elems: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(ground(n), elems).unwrap()
    }

    fn system(n: usize, fams: &[&[usize]]) -> SetSystem {
        SetSystem::new(ground(n), fams.iter().map(|f| mask(n, f)).collect()).unwrap()
    }

    #[test]
    fn ground_set_bounds() {
        assert!(GroundSet::new(0).is_err());
        assert!(GroundSet::new(MAX_GROUND).is_ok());
        assert!(GroundSet::new(MAX_GROUND + 1).is_err());
    }

    #[test]
    fn mask_roundtrips_elements() {
        let m = mask(70, &[1, 64, 65, 70]);
        assert_eq!(m.elements(), vec![1, 64, 65, 70]);
        assert_eq!(m.cardinality(), 4);
        assert!(m.contains(64));
        assert!(!m.contains(2));
    }

    #[test]
    fn mask_rejects_out_of_range_elements() {
        assert!(SubsetMask::from_elements(ground(5), &[6]).is_err());
        assert!(SubsetMask::from_elements(ground(5), &[0]).is_err());
    }

    #[test]
    fn hex_roundtrip() {
        let m = mask(70, &[1, 2, 65]);
        let h = m.to_hex();
        assert_eq!(SubsetMask::from_hex(ground(70), &h).unwrap(), m);
        assert_eq!(mask(8, &[]).to_hex(), "0x0");
        assert_eq!(SubsetMask::from_hex(ground(6), "0x3c").unwrap().elements(), vec![3, 4, 5, 6]);
        assert!(SubsetMask::from_hex(ground(4), "0x1f").is_err());
        assert!(SubsetMask::from_hex(ground(4), "zz").is_err());
    }

    #[test]
    fn set_operations() {
        let g = ground(6);
        let a = mask(6, &[1, 2, 3]);
        let b = mask(6, &[3, 4]);
        assert_eq!(a.union(&b).elements(), vec![1, 2, 3, 4]);
        assert_eq!(a.intersection(&b).elements(), vec![3]);
        assert_eq!(a.difference(&b).elements(), vec![1, 2]);
        assert_eq!(b.complement_in(g).elements(), vec![1, 2, 5, 6]);
        assert!(mask(6, &[1, 2]).is_subset_of(&a));
        assert!(!a.is_subset_of(&b));
    }

    #[test]
    fn mask_order_is_numeric() {
        let mut ms = vec![mask(6, &[6]), mask(6, &[1]), mask(6, &[1, 2]), mask(6, &[5])];
        ms.sort();
        assert_eq!(
            ms,
            vec![mask(6, &[1]), mask(6, &[1, 2]), mask(6, &[5]), mask(6, &[6])]
        );
    }

    #[test]
    fn embed_shifts_elements() {
        let m = mask(3, &[1, 3]);
        let e = m.embed(3, ground(6)).unwrap();
        assert_eq!(e.elements(), vec![4, 6]);
        assert!(m.embed(1022, ground(1024)).is_err());
    }

    #[test]
    fn system_sorts_and_rejects_duplicates() {
        let s = system(4, &[&[2], &[1]]);
        assert_eq!(s.members()[0].elements(), vec![1]);
        let dup = SetSystem::new(ground(4), vec![mask(4, &[1]), mask(4, &[1])]);
        assert!(matches!(dup, Err(SetError::DuplicateMember { .. })));
    }

    #[test]
    fn recovering_detects_violations_with_witness() {
        // {∅,{1}} against itself: ∅\{1} = {1}\{1} with distinct first sets.
        let fam = system(1, &[&[], &[1]]);
        let verdict = is_recovering(&fam, &fam).unwrap();
        let w = verdict.witness().expect("must be violated");
        assert_eq!(
            w.a.difference(&w.b),
            w.a_prime.difference(&w.b_prime)
        );
        assert_ne!(w.a, w.a_prime);
    }

    #[test]
    fn recovering_witness_on_b_side() {
        // A = {{1,2}}, B = {{3},{1,3}}: both B \ A differences are {3}.
        let a = system(3, &[&[1, 2]]);
        let b = system(3, &[&[3], &[1, 3]]);
        let verdict = is_recovering(&a, &b).unwrap();
        let w = verdict.witness().unwrap();
        assert_eq!(w.side, Side::B);
        assert_eq!(w.b.difference(&w.a), w.b_prime.difference(&w.a_prime));
        assert_ne!(w.b, w.b_prime);
    }

    #[test]
    fn cancellative_but_not_recovering() {
        // Classic separation: {{1},{2}} against itself.
        let fam = system(2, &[&[1], &[2]]);
        assert!(is_cancellative(&fam, &fam).unwrap().holds());
        assert!(!is_recovering(&fam, &fam).unwrap().holds());
        assert!(is_half_recovering(&fam, &fam).is_ok());
    }

    #[test]
    fn ground_mismatch_is_an_error() {
        let a = system(2, &[&[1]]);
        let b = system(3, &[&[1]]);
        assert!(matches!(
            is_recovering(&a, &b),
            Err(SetError::GroundMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn uniformity_classification() {
        let a = system(4, &[&[1, 2], &[3, 4]]);
        let b = system(4, &[&[2, 3], &[1, 4]]);
        assert_eq!(uniformity(&a, &b).unwrap(), Uniformity::CompletelyUniform { k: 2 });
        let b_short = system(4, &[&[2, 3]]);
        assert_eq!(uniformity(&a, &b_short).unwrap(), Uniformity::Uniform { k: 2 });
        let mixed = system(4, &[&[1], &[1, 2]]);
        assert_eq!(uniformity(&mixed, &b).unwrap(), Uniformity::NonUniform);
        let empty = SetSystem::new(ground(4), vec![]).unwrap();
        assert!(matches!(uniformity(&empty, &b), Err(SetError::EmptyFamily)));
    }

    #[test]
    fn pair_verify_caches_status() {
        let a = system(2, &[&[1]]);
        let b = system(2, &[&[2]]);
        let mut p = RecoveringPair::new(a, b).unwrap();
        assert!(matches!(p.status(), VerifyStatus::Unverified));
        assert!(matches!(p.verify(), VerifyStatus::Recovering));
        assert_eq!(p.pair_size(), 1);
        let m = p.mirror();
        assert!(m.is_verified_recovering());
        assert_eq!(m.a_family().members()[0].elements(), vec![2]);
    }
}
