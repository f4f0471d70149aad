//! Constructive sources of recovering pairs: canonical pairs, the hexad
//! pair on six elements, disjoint-union products, uniformization and a
//! seeded random generator for test corpora.

use rand::Rng;
use thiserror::Error;

use crate::sets::{
    is_recovering, GroundSet, RecoveringPair, SetError, SetSystem, SubsetMask, MAX_GROUND,
};

/// Largest family materialized by any construction.
pub const MAX_FAMILY: usize = 1 << 20;

/// Largest core (or co-core) size for [`canonical_pair`]; the family has
/// `2^|C|` members, so 20 keeps materialization around a million sets.
pub const MAX_CANONICAL_PART: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("canonical core and co-core must have at most {MAX_CANONICAL_PART} elements, got {part}")]
    CoreTooLarge { part: usize },
    #[error("product ground set would have {total} elements, limit is {MAX_GROUND}")]
    GroundOverflow { total: usize },
    #[error("product family would have {members} members, limit is {MAX_FAMILY}")]
    FamilyTooLarge { members: usize },
    #[error("product inputs must be verified recovering pairs")]
    UnverifiedInput,
    #[error("power exponent must be at least 1")]
    InvalidExponent,
    #[error(transparent)]
    Set(#[from] SetError),
}

/// All subsets of `within`, as masks on its ground set.
fn subsets_of(ground: GroundSet, within: &SubsetMask) -> Vec<SubsetMask> {
    let elements = within.elements();
    let mut out = Vec::with_capacity(1 << elements.len());
    for bits in 0u64..(1 << elements.len()) {
        let chosen: Vec<usize> = elements
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        out.push(SubsetMask::from_elements(ground, &chosen).expect("elements fit"));
    }
    out
}

/// The canonical pair for a core `C`: all subsets of `C` against all
/// subsets of its complement. Its size is exactly `2^n`.
pub fn canonical_pair(ground: GroundSet, core: &SubsetMask) -> Result<RecoveringPair, ConstructError> {
    let k = core.cardinality();
    let co = ground.size() - k;
    if k > MAX_CANONICAL_PART {
        return Err(ConstructError::CoreTooLarge { part: k });
    }
    if co > MAX_CANONICAL_PART {
        return Err(ConstructError::CoreTooLarge { part: co });
    }
    let a = SetSystem::new(ground, subsets_of(ground, core))?;
    let b = SetSystem::new(ground, subsets_of(ground, &core.complement_in(ground)))?;
    // A \ B = A and B \ A = B for disjoint supports, so differences
    // determine their sets outright.
    Ok(RecoveringPair::new_proven(a, b)?)
}

fn complement_family(ground: GroundSet, pairs: &[[usize; 2]]) -> SetSystem {
    let members = pairs
        .iter()
        .map(|p| {
            SubsetMask::from_elements(ground, p)
                .expect("elements fit")
                .complement_in(ground)
        })
        .collect();
    SetSystem::new(ground, members).expect("distinct complements")
}

/// The completely uniform pair of three 4-sets against three 4-sets on six
/// elements: complements of `{1,2},{3,4},{5,6}` against complements of
/// `{2,3},{4,5},{6,1}`. It has three full-union solutions, the best known
/// count per ground element.
pub fn hexad_pair() -> RecoveringPair {
    let g = GroundSet::new(6).expect("6 is a valid ground size");
    let a = complement_family(g, &[[1, 2], [3, 4], [5, 6]]);
    let b = complement_family(g, &[[2, 3], [4, 5], [6, 1]]);
    let mut pair = RecoveringPair::new(a, b).expect("same ground");
    assert!(
        matches!(pair.verify(), crate::sets::VerifyStatus::Recovering),
        "hexad pair must verify as recovering"
    );
    pair
}

/// The hexad pair with the empty set added to both families. Still
/// recovering, but its intersection weight `sum 2^|A∩B| = 67` exceeds
/// `2^6 = 64`, refuting the weighted strengthening of the conjecture.
pub fn aharoni_counterexample() -> RecoveringPair {
    let hexad = hexad_pair();
    let g = hexad.ground();
    let extend = |fam: &SetSystem| {
        let mut members = fam.members().to_vec();
        members.push(g.empty_mask());
        SetSystem::new(g, members).expect("empty set is new")
    };
    let mut pair = RecoveringPair::new(extend(hexad.a_family()), extend(hexad.b_family()))
        .expect("same ground");
    assert!(
        matches!(pair.verify(), crate::sets::VerifyStatus::Recovering),
        "extended hexad pair must verify as recovering"
    );
    pair
}

/// Disjoint-union product: the second pair is shifted past the first
/// pair's ground set and members are united pairwise. The product of
/// recovering pairs is recovering, so the result carries a proof.
pub fn product(
    left: &RecoveringPair,
    right: &RecoveringPair,
) -> Result<RecoveringPair, ConstructError> {
    if !left.is_verified_recovering() || !right.is_verified_recovering() {
        return Err(ConstructError::UnverifiedInput);
    }
    let n1 = left.ground().size();
    let total = n1 + right.ground().size();
    if total > MAX_GROUND {
        return Err(ConstructError::GroundOverflow { total });
    }
    let ground = GroundSet::new(total)?;
    let join = |f1: &SetSystem, f2: &SetSystem| -> Result<SetSystem, ConstructError> {
        let members = f1.len().checked_mul(f2.len()).unwrap_or(usize::MAX);
        if members > MAX_FAMILY {
            return Err(ConstructError::FamilyTooLarge { members });
        }
        let mut out = Vec::with_capacity(members);
        for m1 in f1.members() {
            let lifted = m1.embed(0, ground)?;
            for m2 in f2.members() {
                out.push(lifted.union(&m2.embed(n1, ground)?));
            }
        }
        Ok(SetSystem::new(ground, out)?)
    };
    let a = join(left.a_family(), right.a_family())?;
    let b = join(left.b_family(), right.b_family())?;
    Ok(RecoveringPair::new_proven(a, b)?)
}

/// `r`-fold product of a pair with itself.
pub fn power(pair: &RecoveringPair, r: u32) -> Result<RecoveringPair, ConstructError> {
    if r == 0 {
        return Err(ConstructError::InvalidExponent);
    }
    let mut acc = pair.clone();
    for _ in 1..r {
        acc = product(&acc, pair)?;
    }
    Ok(acc)
}

/// Product of a pair with its mirror image. The two families of the result
/// have equal size `|A||B|`, which turns uniform pairs into completely
/// uniform ones at the cost of doubling the ground set.
pub fn swap_and_multiply(pair: &RecoveringPair) -> Result<RecoveringPair, ConstructError> {
    product(pair, &pair.mirror())
}

/// Draws a verified recovering pair by rejection sampling: random families
/// with at most `max_members` sets each, redrawn until the predicate holds.
/// Singleton families always pass, so this terminates.
pub fn random_recovering_pair<R: Rng>(
    ground: GroundSet,
    max_members: usize,
    rng: &mut R,
) -> RecoveringPair {
    assert!(max_members >= 1, "need at least one member per family");
    // A family cannot hold more distinct members than the lattice has.
    let cap = if ground.size() < 20 {
        max_members.min(1usize << ground.size())
    } else {
        max_members
    };
    loop {
        let draw_family = |rng: &mut R| {
            let len = rng.gen_range(1..=cap);
            let mut members: Vec<SubsetMask> = Vec::with_capacity(len);
            while members.len() < len {
                let elems: Vec<usize> =
                    (1..=ground.size()).filter(|_| rng.gen_bool(0.5)).collect();
                let m = SubsetMask::from_elements(ground, &elems).expect("elements fit");
                if !members.contains(&m) {
                    members.push(m);
                }
            }
            SetSystem::new(ground, members).expect("distinct by construction")
        };
        let a = draw_family(rng);
        let b = draw_family(rng);
        if is_recovering(&a, &b).expect("same ground").holds() {
            return RecoveringPair::new_proven(a, b).expect("same ground");
        }
    }
}
