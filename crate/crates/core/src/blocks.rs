//! Residues, block equivalence, and block generation by bead moves.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abacus::{eta, AbacusConfig, MultiAbacus};
use crate::beta::BetaSet;
use crate::error::{Error, Result};
use crate::partition::{multipartition_count, multipartitions};

/// Default bound on the number of candidate multipartitions the oracle will
/// enumerate.
pub const DEFAULT_ORACLE_LIMIT: u64 = 5_000_000;

/// Multiplicity of each residue `0..e` in a Young diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ResidueMultiset {
    counts: Vec<usize>,
}

impl ResidueMultiset {
    pub fn from_counts(counts: Vec<usize>) -> Self {
        ResidueMultiset { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn e(&self) -> usize {
        self.counts.len()
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

impl fmt::Display for ResidueMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for (i, &c) in self.counts.iter().enumerate().filter(|(_, &c)| c > 0) {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{i}↦{c}")?;
        }
        write!(f, "}}")
    }
}

/// Residues `s_k + y − x mod e` over all nodes `(x, y)` of all components.
pub fn residue_multiset(m: &MultiAbacus, e: usize) -> ResidueMultiset {
    let mut counts = vec![0usize; e];
    let e = e as i64;
    for c in m.components() {
        for (i, &len) in c.partition.parts().iter().enumerate() {
            let base = c.charge - (i as i64 + 1);
            if len as i64 >= e {
                let full = len as usize / e as usize;
                for slot in counts.iter_mut() {
                    *slot += full;
                }
            }
            for y in 1..=(len as i64 % e) {
                counts[(base + y).rem_euclid(e) as usize] += 1;
            }
        }
    }
    ResidueMultiset { counts }
}

/// Whether `x` and `y` lie in the same block. Both must carry the same
/// multicharge.
pub fn same_block(x: &MultiAbacus, y: &MultiAbacus, e: usize) -> Result<bool> {
    if x.charges() != y.charges() {
        return Err(Error::ChargeMismatch {
            left: x.charges(),
            right: y.charges(),
        });
    }
    Ok(x.size() == y.size() && residue_multiset(x, e) == residue_multiset(y, e))
}

/// Like [`same_block`], but differing multicharges give `false`.
pub fn equivalent(x: &MultiAbacus, y: &MultiAbacus, e: usize) -> bool {
    same_block(x, y, e).unwrap_or(false)
}

fn sets(m: &MultiAbacus) -> Vec<BetaSet> {
    m.components().iter().map(AbacusConfig::beta_set).collect()
}

fn rebuild(sets: &[BetaSet]) -> MultiAbacus {
    MultiAbacus::new(sets.iter().map(AbacusConfig::from_beta_set).collect()).expect("r ≥ 1")
}

/// All results of one `→₁` step: some bead moves down `e` positions in one
/// component, then some bead moves up `e` positions in any component.
pub fn move1_neighbors(m: &MultiAbacus, e: usize) -> Vec<MultiAbacus> {
    let base = sets(m);
    let step = e as i64;
    let mut out = HashSet::new();
    for k1 in 0..base.len() {
        for &b in base[k1].window() {
            if base[k1].contains(b - step) {
                continue;
            }
            let mut lowered = base.clone();
            lowered[k1] = base[k1].replace(b, b - step);
            for k2 in 0..base.len() {
                let set = &lowered[k2];
                for c in set.members_from(set.floor() - step) {
                    if set.contains(c + step) {
                        continue;
                    }
                    let mut next = lowered.clone();
                    next[k2] = set.replace(c, c + step);
                    if next != base {
                        out.insert(rebuild(&next));
                    }
                }
            }
        }
    }
    finish(m, out, e)
}

/// All results of one `→₂` step: for `b₁ ≡ b₂ (mod e)` and `h > 0` with
/// `b₁ ∈ B_{k₁}`, `b₁ + h ∉ B_{k₁}`, `b₂ ∉ B_{k₂}`, `b₂ + h ∈ B_{k₂}`, the bead
/// at `b₁` moves up to `b₁ + h` and the bead at `b₂ + h` moves down to `b₂`.
pub fn move2_neighbors(m: &MultiAbacus, e: usize) -> Vec<MultiAbacus> {
    let base = sets(m);
    let step = e as i64;
    let mut out = HashSet::new();
    for k2 in 0..base.len() {
        let s2 = &base[k2];
        for b2 in s2.floor()..s2.max() {
            if s2.contains(b2) {
                continue;
            }
            for h in 1..=s2.max() - b2 {
                if !s2.contains(b2 + h) {
                    continue;
                }
                for (k1, s1) in base.iter().enumerate() {
                    let lo = s1.floor() - h;
                    let mut b1 = lo + (b2 - lo).rem_euclid(step);
                    while b1 <= s1.max() {
                        let clash = k1 == k2 && (b1 == b2 + h || b1 + h == b2);
                        if !clash && s1.contains(b1) && !s1.contains(b1 + h) {
                            let mut next = base.clone();
                            next[k1] = s1.replace(b1, b1 + h);
                            next[k2] = next[k2].replace(b2 + h, b2);
                            if next != base {
                                out.insert(rebuild(&next));
                            }
                        }
                        b1 += step;
                    }
                }
            }
        }
    }
    finish(m, out, e)
}

fn finish(m: &MultiAbacus, out: HashSet<MultiAbacus>, e: usize) -> Vec<MultiAbacus> {
    let mut out: Vec<MultiAbacus> = out.into_iter().collect();
    out.sort();
    debug_assert!(
        out.iter().all(|y| equivalent(m, y, e)),
        "moves must preserve the block"
    );
    out
}

/// A block: an equivalence class of charged multipartitions with a fixed
/// multicharge. Members are ordered by their canonical JSON form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    e: usize,
    charges: Vec<i64>,
    n: usize,
    residues: ResidueMultiset,
    members: Vec<MultiAbacus>,
}

/// The sort key used for block members.
pub fn canonical_key(m: &MultiAbacus) -> String {
    serde_json::to_string(m).expect("multipartitions always serialize")
}

impl Block {
    /// Builds a block from a complete member list. The members must share
    /// their multicharge, size and residues.
    pub fn from_members(e: usize, mut members: Vec<MultiAbacus>) -> Result<Self> {
        let first = members
            .first()
            .ok_or(Error::ShapeMismatch {
                expected: 1,
                found: 0,
            })?
            .clone();
        for m in &members {
            if !same_block(&first, m, e)? {
                return Err(Error::Parse(format!("{m} is not in the block of {first}")));
            }
        }
        members.sort_by_cached_key(canonical_key);
        members.dedup();
        Ok(Block {
            e,
            charges: first.charges(),
            n: first.size(),
            residues: residue_multiset(&first, e),
            members,
        })
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn r(&self) -> usize {
        self.charges.len()
    }

    pub fn charges(&self) -> &[i64] {
        &self.charges
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn residues(&self) -> &ResidueMultiset {
        &self.residues
    }

    pub fn members(&self) -> &[MultiAbacus] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, m: &MultiAbacus) -> Option<usize> {
        let key = canonical_key(m);
        self.members
            .binary_search_by(|x| canonical_key(x).cmp(&key))
            .ok()
    }

    pub fn contains(&self, m: &MultiAbacus) -> bool {
        self.index_of(m).is_some()
    }

    /// Whether the member set is closed under both kinds of move.
    pub fn is_closed(&self) -> bool {
        let set: HashSet<&MultiAbacus> = self.members.iter().collect();
        self.members.iter().all(|m| {
            move1_neighbors(m, self.e)
                .iter()
                .chain(move2_neighbors(m, self.e).iter())
                .all(|y| set.contains(y))
        })
    }
}

/// The block of `seed`, found by breadth-first closure under `→₁` and `→₂`.
pub fn generate_block(seed: &MultiAbacus, e: usize) -> Block {
    let mut seen: HashSet<MultiAbacus> = HashSet::from([seed.clone()]);
    let mut queue = VecDeque::from([seed.clone()]);
    while let Some(m) = queue.pop_front() {
        for y in move1_neighbors(&m, e)
            .into_iter()
            .chain(move2_neighbors(&m, e))
        {
            if !seen.contains(&y) {
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Block::from_members(e, seen.into_iter().collect()).expect("closure stays inside one block")
}

fn check_limit(n: usize, r: usize, limit: u64) -> Result<()> {
    let candidates = multipartition_count(n, r);
    if candidates > limit as u128 {
        return Err(Error::ExplosionGuard { candidates, limit });
    }
    Ok(())
}

/// Brute force: every r-multipartition of `n` at multicharge `charges` whose
/// residues equal `target`. Returns `None` when nothing matches.
pub fn block_oracle(
    n: usize,
    charges: &[i64],
    e: usize,
    target: &ResidueMultiset,
    limit: u64,
) -> Result<Option<Block>> {
    check_limit(n, charges.len(), limit)?;
    let members: Vec<MultiAbacus> = multipartitions(n, charges.len())
        .into_iter()
        .map(|parts| MultiAbacus::from_parts(parts, charges.to_vec()).expect("lengths agree"))
        .filter(|m| residue_multiset(m, e) == *target)
        .collect();
    if members.is_empty() {
        return Ok(None);
    }
    Block::from_members(e, members).map(Some)
}

/// All blocks of r-multipartitions of `n` at multicharge `charges`, grouped
/// by residues.
pub fn all_blocks(n: usize, charges: &[i64], e: usize, limit: u64) -> Result<Vec<Block>> {
    check_limit(n, charges.len(), limit)?;
    let mut groups: BTreeMap<ResidueMultiset, Vec<MultiAbacus>> = BTreeMap::new();
    for parts in multipartitions(n, charges.len()) {
        let m = MultiAbacus::from_parts(parts, charges.to_vec()).expect("lengths agree");
        groups.entry(residue_multiset(&m, e)).or_default().push(m);
    }
    groups
        .into_values()
        .map(|ms| Block::from_members(e, ms))
        .collect()
}

/// `hk(λ)`: the sum of the e-weights of the components.
pub fn hook_weight(m: &MultiAbacus, e: usize) -> usize {
    m.components().iter().map(|c| eta(c, e).weight()).sum()
}

/// The largest hook weight of a member.
pub fn block_hk(b: &Block) -> usize {
    b.members
        .iter()
        .map(|m| hook_weight(m, b.e))
        .max()
        .unwrap_or(0)
}

/// The members attaining [`block_hk`].
pub fn r_circle(b: &Block) -> Vec<&MultiAbacus> {
    let hk = block_hk(b);
    b.members
        .iter()
        .filter(|m| hook_weight(m, b.e) == hk)
        .collect()
}

/// A block is a core block when no member has an e-rim hook in any component.
pub fn is_core_block(b: &Block) -> bool {
    block_hk(b) == 0
}

/// The runner charges `t^k` of every component of `m`.
pub fn runner_charges(m: &MultiAbacus, e: usize) -> Vec<Vec<i64>> {
    m.components().iter().map(|c| eta(c, e).charges).collect()
}

/// `(Σ_k t^k_i)_i`, which is constant across a block.
pub fn charge_sums(m: &MultiAbacus, e: usize) -> Vec<i64> {
    let mut sums = vec![0; e];
    for t in runner_charges(m, e) {
        for (s, x) in sums.iter_mut().zip(t) {
            *s += x;
        }
    }
    sums
}

fn require_core(b: &Block) -> Result<()> {
    let hk = block_hk(b);
    if hk > 0 {
        return Err(Error::NotACoreBlock(format!("block has hook weight {hk}")));
    }
    Ok(())
}

/// The base tuple `b` of a core block: every runner charge satisfies
/// `t^k_i = b_i + δ` with `δ ∈ {0, 1}`.
pub fn base_tuple(b: &Block) -> Result<Vec<i64>> {
    require_core(b)?;
    let all: Vec<Vec<i64>> = b
        .members
        .iter()
        .flat_map(|m| runner_charges(m, b.e))
        .collect();
    let base: Vec<i64> = (0..b.e)
        .map(|i| all.iter().map(|t| t[i]).min().expect("nonempty"))
        .collect();
    for t in &all {
        for (i, (&x, &lo)) in t.iter().zip(&base).enumerate() {
            if x - lo > 1 {
                return Err(Error::NotACoreBlock(format!(
                    "runner {i} charge {x} exceeds base {lo} by more than one"
                )));
            }
        }
    }
    Ok(base)
}

/// For a core block with no base tuple at its own multicharge: shifts `c_k`
/// such that moving component `k` to charge `s_k + e·c_k` produces one,
/// together with that base tuple. Such a shift leaves every residue unchanged.
pub fn recharged_base_tuple(b: &Block) -> Result<(Vec<i64>, Vec<i64>)> {
    require_core(b)?;
    let e = b.e();
    let charges: Vec<Vec<Vec<i64>>> = b.members().iter().map(|m| runner_charges(m, e)).collect();
    let first = &charges[0];
    let mut candidates: Vec<Vec<i64>> = vec![vec![0]];
    for k in 1..b.r() {
        let diffs: Vec<i64> = (0..e).map(|i| first[0][i] - first[k][i]).collect();
        let (lo, hi) = (
            diffs.iter().min().expect("e ≥ 1") - 1,
            diffs.iter().max().expect("e ≥ 1") + 1,
        );
        candidates = candidates
            .into_iter()
            .flat_map(|c| {
                (lo..=hi).map(move |x| {
                    let mut c = c.clone();
                    c.push(x);
                    c
                })
            })
            .collect();
    }
    candidates.sort_by_key(|c| (c.iter().map(|x| x.abs()).sum::<i64>(), c.clone()));
    for c in candidates {
        let shifted: Vec<Vec<i64>> = charges
            .iter()
            .flat_map(|ts| {
                ts.iter()
                    .zip(&c)
                    .map(|(t, ck)| t.iter().map(|x| x + ck).collect::<Vec<_>>())
            })
            .collect();
        let base: Vec<i64> = (0..e)
            .map(|i| shifted.iter().map(|t| t[i]).min().expect("nonempty"))
            .collect();
        if shifted
            .iter()
            .all(|t| t.iter().zip(&base).all(|(x, lo)| x - lo <= 1))
        {
            return Ok((c, base));
        }
    }
    Err(Error::NotACoreBlock(
        "no multicharge representative admits a base tuple".into(),
    ))
}

/// A core block whose members all have weakly increasing runner charges in
/// every component.
pub fn is_staircase_block(b: &Block) -> Result<bool> {
    require_core(b)?;
    Ok(b.members.iter().all(|m| {
        runner_charges(m, b.e)
            .iter()
            .all(|t| t.windows(2).all(|w| w[0] <= w[1]))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn multi(parts: &[&[u32]], charges: &[i64]) -> MultiAbacus {
        MultiAbacus::from_parts(parts.iter().map(|q| p(q)).collect(), charges.to_vec()).unwrap()
    }

    /// Residues node by node, straight from the definition.
    fn naive_residues(m: &MultiAbacus, e: usize) -> Vec<usize> {
        let mut counts = vec![0; e];
        for c in m.components() {
            for (x, y) in c.partition.nodes() {
                counts[(c.charge + y as i64 - x as i64).rem_euclid(e as i64) as usize] += 1;
            }
        }
        counts
    }

    #[test]
    fn residue_examples() {
        let x = multi(&[&[4, 3, 1], &[3, 3], &[1, 1]], &[0, 1, 0]);
        let y = multi(&[&[1, 1, 1], &[3, 3, 3, 3], &[1]], &[0, 1, 0]);
        assert_eq!(residue_multiset(&x, 3).counts(), &[6, 5, 5]);
        assert_eq!(residue_multiset(&y, 3).counts(), &[6, 5, 5]);
        assert!(same_block(&x, &y, 3).unwrap());
        assert_eq!(residue_multiset(&x, 3).to_string(), "{0↦6, 1↦5, 2↦5}");
        assert_eq!(residue_multiset(&multi(&[&[], &[]], &[4, 1]), 3).total(), 0);
        let shifted = multi(&[&[1, 1, 1], &[3, 3, 3, 3], &[1]], &[3, 4, -3]);
        assert_eq!(residue_multiset(&shifted, 3), residue_multiset(&y, 3));
    }

    #[test]
    fn residues_match_definition() {
        for n in 0..=6 {
            for parts in multipartitions(n, 2) {
                let m = MultiAbacus::from_parts(parts, vec![1, -3]).unwrap();
                for e in 2..=5 {
                    assert_eq!(
                        residue_multiset(&m, e).counts(),
                        naive_residues(&m, e).as_slice()
                    );
                }
            }
        }
    }

    #[test]
    fn same_block_examples() {
        let a = multi(&[&[2]], &[0]);
        let b = multi(&[&[1, 1]], &[0]);
        assert!(same_block(&a, &b, 2).unwrap());
        assert!(same_block(&a, &a, 2).unwrap());
        assert!(matches!(
            same_block(&a, &multi(&[&[2]], &[1]), 2),
            Err(Error::ChargeMismatch { .. })
        ));
        assert!(!equivalent(&a, &multi(&[&[2]], &[1]), 2));
    }

    #[test]
    fn move1_examples() {
        assert_eq!(
            move1_neighbors(&multi(&[&[2]], &[0]), 2),
            vec![multi(&[&[1, 1]], &[0])]
        );
        assert!(move1_neighbors(&multi(&[&[]], &[0]), 2).is_empty());
    }

    #[test]
    fn move2_four_runner_example() {
        let lambda = multi(&[&[6, 5, 2], &[6, 4, 3, 1]], &[-1, 2]);
        let mu = multi(&[&[5, 5, 2], &[6, 4, 3, 2]], &[-1, 2]);
        assert!(move2_neighbors(&lambda, 4).contains(&mu));
        assert!(move2_neighbors(&mu, 4).contains(&lambda));
    }

    #[test]
    fn generate_examples() {
        let b = generate_block(&multi(&[&[2]], &[0]), 2);
        assert_eq!(
            b.members(),
            &[multi(&[&[1, 1]], &[0]), multi(&[&[2]], &[0])]
        );
        let b = generate_block(&multi(&[&[2, 2, 1, 1], &[3, 1, 1, 1, 1, 1]], &[7, 9]), 3);
        assert_eq!(b.len(), 8);
        assert!(b.is_closed());
        let empty = multi(&[&[], &[]], &[3, 5]);
        assert_eq!(generate_block(&empty, 3).members(), &[empty]);
    }

    #[test]
    fn oracle_examples() {
        let seed = multi(&[&[1], &[], &[]], &[0, 0, 0]);
        let b = block_oracle(
            1,
            &[0, 0, 0],
            3,
            &residue_multiset(&seed, 3),
            DEFAULT_ORACLE_LIMIT,
        )
        .unwrap()
        .unwrap();
        assert_eq!(b.len(), 3);
        let b = block_oracle(0, &[0, 0], 3, &ResidueMultiset::from_counts(vec![0; 3]), 10)
            .unwrap()
            .unwrap();
        assert_eq!(b.len(), 1);
        let b = block_oracle(2, &[0], 2, &ResidueMultiset::from_counts(vec![1, 1]), 10)
            .unwrap()
            .unwrap();
        assert_eq!(
            b.members(),
            &[multi(&[&[1, 1]], &[0]), multi(&[&[2]], &[0])]
        );
        assert!(matches!(
            block_oracle(
                30,
                &[0, 0],
                2,
                &ResidueMultiset::from_counts(vec![15, 15]),
                1000
            ),
            Err(Error::ExplosionGuard { .. })
        ));
    }

    #[test]
    fn hook_weight_examples() {
        assert_eq!(hook_weight(&multi(&[&[4, 2, 2, 2]], &[6]), 3), 3);
        assert_eq!(hook_weight(&multi(&[&[2], &[1]], &[0, 0]), 3), 0);
        let b = generate_block(&multi(&[&[2]], &[0]), 2);
        assert_eq!(block_hk(&b), 1);
        assert_eq!(r_circle(&b).len(), 2);
        assert!(!is_core_block(&b));
        assert!(matches!(base_tuple(&b), Err(Error::NotACoreBlock(_))));
        assert!(is_staircase_block(&b).is_err());
    }

    #[test]
    fn core_block_examples() {
        let empty = generate_block(&multi(&[&[], &[]], &[0, 2]), 2);
        assert!(is_core_block(&empty));
        assert!(is_staircase_block(&empty).unwrap());
        assert_eq!(base_tuple(&empty).unwrap(), vec![0, 0]);
        let b = generate_block(&multi(&[&[1], &[]], &[0, 0]), 2);
        assert!(is_core_block(&b));
        assert_eq!(b.len(), 2);
        let base = base_tuple(&b).unwrap();
        for m in b.members() {
            for t in runner_charges(m, 2) {
                assert!(t
                    .iter()
                    .zip(&base)
                    .all(|(x, lo)| x - lo == 0 || x - lo == 1));
            }
        }
    }
}
