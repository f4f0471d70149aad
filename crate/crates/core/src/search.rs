//! Budgeted exhaustive search for extremal recovering pairs on small
//! ground sets.
//!
//! The ground set is capped at six elements so that the whole subset
//! lattice fits one machine word: a family is a set of `u64` masks and a
//! candidate pool is a 64-bit occupancy set. The engine grows the first
//! family as an ascending chain of masks, and at every chain it grows the
//! second family the same way, maintaining two difference maps that make
//! the recovering check against all earlier members a single pass over the
//! first family. Relabeling symmetry is factored out at the first two
//! chain positions; all deeper pruning uses bounds that never
//! underestimate what a completion could still achieve, so an exhausted
//! run is a proof of the reported maximum.

use std::time::{Duration, Instant};

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::constructions::{aharoni_counterexample, canonical_pair, hexad_pair};
use crate::sets::{GroundSet, RecoveringPair, SetError, SetSystem, SubsetMask};
use crate::stats::{aharoni_sum, count_full_union_solutions};

/// Largest ground set the engine accepts; beyond it the mask space no
/// longer fits a 64-bit occupancy set.
pub const MAX_SEARCH_GROUND: usize = 6;

const REJECTION_LOG_CAP: usize = 128;
const TIME_CHECK_MASK: u64 = 0xfff;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("search supports ground sets up to {MAX_SEARCH_GROUND} elements, got {n}")]
    GroundTooLarge { n: usize },
    #[error("at least one worker thread is required")]
    ZeroThreads,
    #[error(transparent)]
    Set(#[from] SetError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchObjective {
    /// Maximize `|A| * |B|`.
    MaxSize,
    /// Maximize the number of full-union solutions.
    MaxFullUnions,
    /// Maximize the intersection weight `sum of 2^|A ∩ B|`.
    MaxAharoni,
}

/// Limits on the exploration. `None` means unlimited. The node budget is
/// split evenly across worker threads.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub time_limit: Option<Duration>,
}

/// A pruning decision the engine took while extending the second family:
/// the candidate collided with the state under one of the two recovering
/// conditions. Events are recorded only until a fixed cap so that an
/// external check can replay them against a naive verifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RejectionEvent {
    pub a_masks: Vec<u64>,
    pub b_masks: Vec<u64>,
    pub candidate: u64,
    pub reason: RejectionReason,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectionReason {
    /// Adding the candidate would repeat a first-family difference.
    FirstCondition,
    /// Adding the candidate would repeat a second-family difference.
    SecondCondition,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub objective: SearchObjective,
    pub best_value: u64,
    /// A pair attaining `best_value`, re-verified after the run.
    pub witness: RecoveringPair,
    /// Chain nodes and candidate attempts explored.
    pub nodes: u64,
    /// True when the space was fully explored, making `best_value` exact.
    pub exhausted: bool,
    pub rejections: Vec<RejectionEvent>,
}

/// Result of checking one ground size in [`verify_conjecture_range`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureCheck {
    pub n: usize,
    pub max_pair_size: u64,
    /// True when the search exhausted and the maximum equals `2^n`.
    pub proves_power_of_two: bool,
    pub exhausted: bool,
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn build(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            build(prefix, rest, out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    build(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

fn apply_perm(mask: u64, perm: &[usize]) -> u64 {
    let mut out = 0;
    for (from, &to) in perm.iter().enumerate() {
        if mask >> from & 1 == 1 {
            out |= 1 << to;
        }
    }
    out
}

/// Per-permutation mask relabeling tables for the whole subset lattice.
fn perm_tables(n: usize) -> Vec<Vec<u64>> {
    let count = 1usize << n;
    all_permutations(n)
        .iter()
        .map(|p| (0..count as u64).map(|m| apply_perm(m, p)).collect())
        .collect()
}

/// A single mask is a canonical chain head iff it is the smallest in its
/// relabeling orbit, which is the low-bits mask of its popcount.
fn canonical_single(a: u64) -> bool {
    a == (1u64 << a.count_ones()) - 1
}

/// A two-mask prefix is canonical iff no relabeling sends it to a
/// lexicographically smaller sorted pair. A chain whose prefix fails this
/// is a relabeled copy of one that passes, so skipping it loses nothing.
fn canonical_prefix(a1: u64, a2: u64, tables: &[Vec<u64>]) -> bool {
    for table in tables {
        let (x, y) = (table[a1 as usize], table[a2 as usize]);
        let (lo, hi) = if x < y { (x, y) } else { (y, x) };
        if (lo, hi) < (a1, a2) {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, Copy)]
enum Task {
    /// A one-member first family; the second family is searched, the first
    /// is not extended (extensions are covered by `Chain` tasks).
    Single(u64),
    /// A two-mask canonical prefix; extended freely from here.
    Chain(u64, u64),
}

fn generate_tasks(n: usize) -> Vec<Task> {
    let tables = perm_tables(n);
    let count = 1u64 << n;
    let mut tasks = Vec::new();
    for a1 in 0..count {
        if !canonical_single(a1) {
            continue;
        }
        tasks.push(Task::Single(a1));
        for a2 in a1 + 1..count {
            if canonical_prefix(a1, a2, &tables) {
                tasks.push(Task::Chain(a1, a2));
            }
        }
    }
    tasks
}

const NO_OWNER: u8 = u8::MAX;
/// Separates the undo-stack segments of consecutive second-family members.
/// Difference masks never reach 255, so the entry is unambiguous.
const SENTINEL: (bool, u8) = (true, u8::MAX);

struct Engine {
    mask_count: u64,
    full: u64,
    objective: SearchObjective,
    max_nodes: u64,
    deadline: Option<Instant>,
    nodes: u64,
    stopped: bool,
    exhausted: bool,
    best_value: u64,
    best_witness: (Vec<u64>, Vec<u64>),
    a_chain: Vec<u64>,
    b_chain: Vec<u64>,
    /// `first_owner[d]` is the index in `a_chain` of the unique member the
    /// difference `d = a \ b` may come from; `second_owner` likewise for
    /// `d = b \ a` and `b_chain`.
    first_owner: [u8; 64],
    second_owner: [u8; 64],
    undo: Vec<(bool, u8)>,
    rejections: Vec<RejectionEvent>,
    rejection_cap: usize,
}

struct InnerPre {
    candidates: Vec<u64>,
    /// Objective gain of each candidate against the fixed first family.
    gains: Vec<u64>,
    /// `suffix[i]` bounds what candidates `i..` can still add.
    suffix: Vec<u64>,
}

impl Engine {
    fn new(
        n: usize,
        objective: SearchObjective,
        max_nodes: u64,
        deadline: Option<Instant>,
        seed_value: u64,
        seed_witness: (Vec<u64>, Vec<u64>),
        rejection_cap: usize,
    ) -> Self {
        Engine {
            mask_count: 1u64 << n,
            full: (1u64 << n) - 1,
            objective,
            max_nodes,
            deadline,
            nodes: 0,
            stopped: false,
            exhausted: true,
            best_value: seed_value,
            best_witness: seed_witness,
            a_chain: Vec::new(),
            b_chain: Vec::new(),
            first_owner: [NO_OWNER; 64],
            second_owner: [NO_OWNER; 64],
            undo: Vec::new(),
            rejections: Vec::new(),
            rejection_cap,
        }
    }

    fn check_stop(&mut self) -> bool {
        if self.stopped {
            return true;
        }
        if self.nodes >= self.max_nodes {
            self.stopped = true;
            self.exhausted = false;
            return true;
        }
        if let Some(deadline) = self.deadline {
            if self.nodes & TIME_CHECK_MASK == 0 && Instant::now() >= deadline {
                self.stopped = true;
                self.exhausted = false;
                return true;
            }
        }
        false
    }

    fn all_candidates(&self) -> u64 {
        if self.mask_count == 64 {
            u64::MAX
        } else {
            (1u64 << self.mask_count) - 1
        }
    }

    /// Drops every candidate that stops separating the first family once
    /// `a_new` joins it.
    fn cull(&self, cand: u64, a_new: u64) -> u64 {
        let mut kept = cand;
        let mut rest = cand;
        while rest != 0 {
            let b = rest.trailing_zeros() as u64;
            rest &= rest - 1;
            let d_new = a_new & !b;
            for &a in &self.a_chain {
                if a & !b == d_new {
                    kept &= !(1u64 << b);
                    break;
                }
            }
        }
        kept
    }

    /// Everything any completion below this chain node could still reach.
    fn subtree_bound(&self, cand: u64, can_extend: bool) -> u64 {
        let m = self.a_chain.len() as u64;
        let q = cand.count_ones() as u64;
        let rem = if can_extend {
            self.mask_count - 1 - *self.a_chain.last().expect("nonempty chain")
        } else {
            0
        };
        match self.objective {
            SearchObjective::MaxSize => (m + rem) * q,
            SearchObjective::MaxFullUnions => (m + rem).min(q),
            SearchObjective::MaxAharoni => (m + rem) * q * self.mask_count,
        }
    }

    fn run_task(&mut self, task: Task) {
        match task {
            Task::Single(a1) => {
                self.a_chain.push(a1);
                if !self.check_stop() {
                    self.nodes += 1;
                    if self.subtree_bound(self.all_candidates(), false) > self.best_value {
                        self.inner_root(self.all_candidates());
                    }
                }
                self.a_chain.pop();
            }
            Task::Chain(a1, a2) => {
                self.a_chain.push(a1);
                let cand = self.cull(self.all_candidates(), a2);
                self.a_chain.push(a2);
                self.chain_node(cand);
                self.a_chain.pop();
                self.a_chain.pop();
            }
        }
    }

    fn chain_node(&mut self, cand: u64) {
        if self.check_stop() {
            return;
        }
        self.nodes += 1;
        if self.subtree_bound(cand, true) <= self.best_value {
            return;
        }
        if self.subtree_bound(cand, false) > self.best_value {
            self.inner_root(cand);
        }
        let last = *self.a_chain.last().expect("nonempty chain");
        for a in last + 1..self.mask_count {
            let culled = self.cull(cand, a);
            self.a_chain.push(a);
            self.chain_node(culled);
            self.a_chain.pop();
            if self.stopped {
                return;
            }
        }
    }

    fn gain_of(&self, b: u64) -> u64 {
        match self.objective {
            SearchObjective::MaxSize => 1,
            SearchObjective::MaxFullUnions => {
                self.a_chain.iter().any(|&a| a | b == self.full) as u64
            }
            SearchObjective::MaxAharoni => self
                .a_chain
                .iter()
                .map(|&a| 1u64 << (a & b).count_ones())
                .sum(),
        }
    }

    fn inner_root(&mut self, cand: u64) {
        let mut pre = InnerPre {
            candidates: Vec::with_capacity(cand.count_ones() as usize),
            gains: Vec::new(),
            suffix: Vec::new(),
        };
        let mut rest = cand;
        while rest != 0 {
            let b = rest.trailing_zeros() as u64;
            rest &= rest - 1;
            pre.candidates.push(b);
            pre.gains.push(self.gain_of(b));
        }
        let mut acc = 0u64;
        pre.suffix = vec![0; pre.candidates.len() + 1];
        for i in (0..pre.candidates.len()).rev() {
            acc += pre.gains[i];
            pre.suffix[i] = acc;
        }
        self.inner(&pre, 0, 0);
    }

    /// The bound a run from candidate `idx` onward cannot exceed, given
    /// the value `cur` accumulated by the chosen second family so far.
    fn inner_bound(&self, pre: &InnerPre, idx: usize, cur: u64) -> u64 {
        let m = self.a_chain.len() as u64;
        match self.objective {
            SearchObjective::MaxSize => {
                m * (self.b_chain.len() as u64 + (pre.candidates.len() - idx) as u64)
            }
            SearchObjective::MaxFullUnions => (cur + pre.suffix[idx]).min(m),
            SearchObjective::MaxAharoni => cur + pre.suffix[idx],
        }
    }

    fn inner(&mut self, pre: &InnerPre, start: usize, cur: u64) {
        for idx in start..pre.candidates.len() {
            // The suffix shrinks as idx grows, so the first failure ends
            // the whole level.
            if self.inner_bound(pre, idx, cur) <= self.best_value {
                return;
            }
            if self.check_stop() {
                return;
            }
            self.nodes += 1;
            let b = pre.candidates[idx];
            if !self.try_push(b) {
                continue;
            }
            let next = cur + pre.gains[idx];
            let value = match self.objective {
                SearchObjective::MaxSize => self.a_chain.len() as u64 * self.b_chain.len() as u64,
                _ => next,
            };
            if value > self.best_value {
                self.best_value = value;
                self.best_witness = (self.a_chain.clone(), self.b_chain.clone());
            }
            self.inner(pre, idx + 1, next);
            self.pop_b();
            if self.stopped {
                return;
            }
        }
    }

    /// Validates the candidate against both difference maps, writing the
    /// new differences in place; on a collision everything written for the
    /// candidate is rolled back and the event is recorded.
    fn try_push(&mut self, b: u64) -> bool {
        let mark = self.undo.len();
        let b_index = self.b_chain.len() as u8;
        for (a_index, &a) in self.a_chain.iter().enumerate() {
            let d1 = (a & !b) as usize;
            match self.first_owner[d1] {
                NO_OWNER => {
                    self.first_owner[d1] = a_index as u8;
                    self.undo.push((true, d1 as u8));
                }
                owner if owner as usize == a_index => {}
                _ => {
                    self.reject(b, RejectionReason::FirstCondition, mark);
                    return false;
                }
            }
            let d2 = (b & !a) as usize;
            match self.second_owner[d2] {
                NO_OWNER => {
                    self.second_owner[d2] = b_index;
                    self.undo.push((false, d2 as u8));
                }
                owner if owner == b_index => {}
                _ => {
                    self.reject(b, RejectionReason::SecondCondition, mark);
                    return false;
                }
            }
        }
        self.b_chain.push(b);
        self.undo.push(SENTINEL);
        true
    }

    /// Unwinds map writes down to `mark`; the range never contains
    /// sentinels (they are only pushed after a completed member).
    fn rollback(&mut self, mark: usize) {
        while self.undo.len() > mark {
            let (is_first, d) = self.undo.pop().expect("undo entries");
            if is_first {
                self.first_owner[d as usize] = NO_OWNER;
            } else {
                self.second_owner[d as usize] = NO_OWNER;
            }
        }
    }

    fn pop_b(&mut self) {
        self.b_chain.pop();
        let sentinel = self.undo.pop();
        debug_assert_eq!(sentinel, Some(SENTINEL));
        while let Some(&entry) = self.undo.last() {
            if entry == SENTINEL {
                break;
            }
            self.undo.pop();
            let (is_first, d) = entry;
            if is_first {
                self.first_owner[d as usize] = NO_OWNER;
            } else {
                self.second_owner[d as usize] = NO_OWNER;
            }
        }
    }

    fn reject(&mut self, candidate: u64, reason: RejectionReason, mark: usize) {
        self.rollback(mark);
        if self.rejections.len() < self.rejection_cap {
            self.rejections.push(RejectionEvent {
                a_masks: self.a_chain.clone(),
                b_masks: self.b_chain.clone(),
                candidate,
                reason,
            });
        }
    }
}

fn seed_pair(ground: GroundSet, objective: SearchObjective) -> Result<RecoveringPair, SearchError> {
    let n = ground.size();
    match objective {
        SearchObjective::MaxSize => Ok(canonical_seed(ground)?),
        SearchObjective::MaxFullUnions => {
            if n == 6 {
                Ok(hexad_pair())
            } else {
                Ok(canonical_seed(ground)?)
            }
        }
        SearchObjective::MaxAharoni => {
            if n == 6 {
                Ok(aharoni_counterexample())
            } else {
                Ok(canonical_seed(ground)?)
            }
        }
    }
}

fn canonical_seed(ground: GroundSet) -> Result<RecoveringPair, SearchError> {
    let half: Vec<usize> = (1..=ground.size() / 2).collect();
    let core = SubsetMask::from_elements(ground, &half)?;
    Ok(canonical_pair(ground, &core).expect("small grounds fit the construction"))
}

fn seed_value(pair: &RecoveringPair, objective: SearchObjective) -> u64 {
    match objective {
        SearchObjective::MaxSize => pair.pair_size() as u64,
        SearchObjective::MaxFullUnions => count_full_union_solutions(pair),
        SearchObjective::MaxAharoni => aharoni_sum(pair).to_u64().expect("small ground set"),
    }
}

fn family_masks(system: &SetSystem) -> Vec<u64> {
    system.members().iter().map(|m| m.low_bits()).collect()
}

fn materialize(
    ground: GroundSet,
    masks: &(Vec<u64>, Vec<u64>),
) -> Result<RecoveringPair, SearchError> {
    let build = |ms: &[u64]| -> Result<SetSystem, SetError> {
        let members = ms
            .iter()
            .map(|&m| SubsetMask::from_bits(ground, m))
            .collect::<Result<Vec<_>, _>>()?;
        SetSystem::new(ground, members)
    };
    Ok(RecoveringPair::new(build(&masks.0)?, build(&masks.1)?)?)
}

/// Runs the budgeted search. With an unlimited budget the outcome is
/// exact; otherwise `exhausted` reports whether the space was fully swept.
/// The node budget is divided evenly among `threads` workers; single-mask
/// first families all go to the first worker, two-mask prefixes are dealt
/// round-robin. Starts from the best known construction as incumbent.
pub fn extremal_search(
    ground: GroundSet,
    objective: SearchObjective,
    budget: SearchBudget,
    threads: usize,
) -> Result<SearchOutcome, SearchError> {
    extremal_search_seeded(ground, objective, budget, threads, true)
}

/// Like [`extremal_search`] but with the incumbent seeding made explicit.
/// Without seeding the sweep starts from the one-member empty pair, which
/// only matters under a budget: exhaustive runs land on the same maximum
/// either way.
pub fn extremal_search_seeded(
    ground: GroundSet,
    objective: SearchObjective,
    budget: SearchBudget,
    threads: usize,
    seed_incumbents: bool,
) -> Result<SearchOutcome, SearchError> {
    let n = ground.size();
    if n > MAX_SEARCH_GROUND {
        return Err(SearchError::GroundTooLarge { n });
    }
    if threads == 0 {
        return Err(SearchError::ZeroThreads);
    }
    let seed = if seed_incumbents {
        seed_pair(ground, objective)?
    } else {
        materialize(ground, &(vec![0], vec![0]))?
    };
    let seed_val = seed_value(&seed, objective);
    let seed_masks = (family_masks(seed.a_family()), family_masks(seed.b_family()));

    let deadline = budget.time_limit.map(|limit| Instant::now() + limit);
    let per_worker_nodes = match budget.max_nodes {
        Some(total) => (total / threads as u64).max(1),
        None => u64::MAX,
    };

    let tasks = generate_tasks(n);
    let mut buckets: Vec<Vec<Task>> = vec![Vec::new(); threads];
    let mut next = 0usize;
    for task in tasks {
        match task {
            Task::Single(_) => buckets[0].push(task),
            Task::Chain(..) => {
                buckets[next % threads].push(task);
                next += 1;
            }
        }
    }

    let run_bucket = |bucket: &[Task]| -> Engine {
        let mut engine = Engine::new(
            n,
            objective,
            per_worker_nodes,
            deadline,
            seed_val,
            seed_masks.clone(),
            REJECTION_LOG_CAP,
        );
        for &task in bucket {
            engine.run_task(task);
            if engine.stopped {
                break;
            }
        }
        engine
    };

    let engines: Vec<Engine> = if threads == 1 {
        vec![run_bucket(&buckets[0])]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = buckets
                .iter()
                .map(|bucket| scope.spawn(|| run_bucket(bucket)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("search worker panicked"))
                .collect()
        })
    };

    let mut best_value = seed_val;
    let mut best_witness = seed_masks;
    let mut nodes = 0;
    let mut exhausted = true;
    let mut rejections = Vec::new();
    for engine in engines {
        nodes += engine.nodes;
        exhausted &= engine.exhausted;
        if engine.best_value > best_value
            || (engine.best_value == best_value && engine.best_witness < best_witness)
        {
            best_value = engine.best_value;
            best_witness = engine.best_witness;
        }
        for event in engine.rejections {
            if rejections.len() < REJECTION_LOG_CAP {
                rejections.push(event);
            }
        }
    }

    let mut witness = materialize(ground, &best_witness)?;
    witness.verify();
    assert!(
        witness.is_verified_recovering(),
        "search produced a witness that fails verification"
    );
    Ok(SearchOutcome {
        objective,
        best_value,
        witness,
        nodes,
        exhausted,
        rejections,
    })
}

/// Exhaustively confirms the pair-size maximum `2^n` for every ground size
/// up to `max_ground`.
pub fn verify_conjecture_range(
    max_ground: usize,
    threads: usize,
) -> Result<Vec<ConjectureCheck>, SearchError> {
    let mut checks = Vec::new();
    for n in 1..=max_ground {
        let ground = GroundSet::new(n)?;
        let outcome = extremal_search(
            ground,
            SearchObjective::MaxSize,
            SearchBudget::default(),
            threads,
        )?;
        checks.push(ConjectureCheck {
            n,
            max_pair_size: outcome.best_value,
            proves_power_of_two: outcome.exhausted && outcome.best_value == 1u64 << n,
            exhausted: outcome.exhausted,
        });
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_singles_are_low_bit_masks() {
        let singles: Vec<u64> = (0..8).filter(|&a| canonical_single(a)).collect();
        assert_eq!(singles, vec![0, 1, 3, 7]);
    }

    #[test]
    fn canonical_prefixes_respect_relabeling() {
        let tables = perm_tables(3);
        assert!(canonical_prefix(1, 2, &tables));
        // {2} and {3} relabel to {1} and {2}.
        assert!(!canonical_prefix(2, 4, &tables));
        assert!(canonical_prefix(0, 1, &tables));
        assert!(!canonical_prefix(0, 2, &tables));
    }

    #[test]
    fn culling_matches_the_direct_check() {
        let mut engine = Engine::new(
            3,
            SearchObjective::MaxSize,
            u64::MAX,
            None,
            0,
            (vec![], vec![]),
            0,
        );
        engine.a_chain = vec![0b011, 0b101];
        let a_new = 0b110;
        let culled = engine.cull(engine.all_candidates(), a_new);
        for b in 0..8u64 {
            let keeps = culled >> b & 1 == 1;
            let collides = [0b011u64, 0b101]
                .iter()
                .any(|&a| a & !b == a_new & !b);
            assert_eq!(keeps, !collides, "candidate {b}");
        }
    }

    #[test]
    fn seeds_match_known_values() {
        let g6 = GroundSet::new(6).unwrap();
        assert_eq!(
            seed_value(&seed_pair(g6, SearchObjective::MaxSize).unwrap(), SearchObjective::MaxSize),
            64
        );
        assert_eq!(
            seed_value(
                &seed_pair(g6, SearchObjective::MaxFullUnions).unwrap(),
                SearchObjective::MaxFullUnions
            ),
            3
        );
        assert_eq!(
            seed_value(
                &seed_pair(g6, SearchObjective::MaxAharoni).unwrap(),
                SearchObjective::MaxAharoni
            ),
            67
        );
    }

    #[test]
    fn small_grounds_are_solved_exactly() {
        for n in 1..=3 {
            let ground = GroundSet::new(n).unwrap();
            let size = extremal_search(
                ground,
                SearchObjective::MaxSize,
                SearchBudget::default(),
                1,
            )
            .unwrap();
            assert!(size.exhausted);
            assert_eq!(size.best_value, 1u64 << n, "size at n={n}");
            assert_eq!(size.witness.pair_size(), 1u128 << n);

            let unions = extremal_search(
                ground,
                SearchObjective::MaxFullUnions,
                SearchBudget::default(),
                1,
            )
            .unwrap();
            assert!(unions.exhausted);
            assert_eq!(unions.best_value, 1, "full unions at n={n}");

            let weight = extremal_search(
                ground,
                SearchObjective::MaxAharoni,
                SearchBudget::default(),
                1,
            )
            .unwrap();
            assert!(weight.exhausted);
            assert_eq!(weight.best_value, 1u64 << n, "weight at n={n}");
        }
    }

    #[test]
    fn node_budget_interrupts_the_sweep() {
        let ground = GroundSet::new(4).unwrap();
        let outcome = extremal_search(
            ground,
            SearchObjective::MaxSize,
            SearchBudget {
                max_nodes: Some(40),
                time_limit: None,
            },
            1,
        )
        .unwrap();
        assert!(!outcome.exhausted);
        assert!(outcome.best_value >= 16);
        assert!(outcome.nodes >= 40);
    }

    #[test]
    fn threaded_and_sequential_runs_agree() {
        let ground = GroundSet::new(3).unwrap();
        let one = extremal_search(
            ground,
            SearchObjective::MaxAharoni,
            SearchBudget::default(),
            1,
        )
        .unwrap();
        let four = extremal_search(
            ground,
            SearchObjective::MaxAharoni,
            SearchBudget::default(),
            4,
        )
        .unwrap();
        assert_eq!(one.best_value, four.best_value);
        assert!(one.exhausted && four.exhausted);
    }

    #[test]
    fn oversized_grounds_and_zero_threads_are_rejected() {
        let g7 = GroundSet::new(7).unwrap();
        assert!(matches!(
            extremal_search(g7, SearchObjective::MaxSize, SearchBudget::default(), 1),
            Err(SearchError::GroundTooLarge { n: 7 })
        ));
        let g3 = GroundSet::new(3).unwrap();
        assert!(matches!(
            extremal_search(g3, SearchObjective::MaxSize, SearchBudget::default(), 0),
            Err(SearchError::ZeroThreads)
        ));
    }

    #[test]
    fn conjecture_range_holds_through_three() {
        let checks = verify_conjecture_range(3, 1).unwrap();
        assert_eq!(checks.len(), 3);
        for (i, check) in checks.iter().enumerate() {
            assert_eq!(check.n, i + 1);
            assert!(check.proves_power_of_two);
            assert_eq!(check.max_pair_size, 1u64 << (i + 1));
        }
    }

    #[test]
    fn seeding_does_not_change_exhaustive_results() {
        let ground = GroundSet::new(3).unwrap();
        for objective in [
            SearchObjective::MaxSize,
            SearchObjective::MaxFullUnions,
            SearchObjective::MaxAharoni,
        ] {
            let seeded =
                extremal_search(ground, objective, SearchBudget::default(), 1).unwrap();
            let bare =
                extremal_search_seeded(ground, objective, SearchBudget::default(), 1, false)
                    .unwrap();
            assert!(bare.exhausted);
            assert_eq!(bare.best_value, seeded.best_value);
        }
    }
}
