//! Scopes moves, charge shifts, and explicit chains of equivalences between
//! blocks.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::abacus::{eta, eta_inverse, AbacusConfig, MultiAbacus};
use crate::blocks::{
    base_tuple, generate_block, is_core_block, is_staircase_block, recharged_base_tuple,
    runner_charges, Block,
};
use crate::error::{Error, Result};
use crate::rouquier::{
    ggr_stretch_vector, is_r_rouquier_partition, is_rouquier_block, stretch, Charged,
};
use crate::uglov::fuse;

/// `υ`: raises every charge by one, leaving the partitions alone.
pub fn upsilon_shift<X: Charged>(x: &X) -> X {
    x.map_components(|c| {
        let mut c = c.clone();
        c.charge += 1;
        c
    })
}

/// `Υ_i`: exchanges runners `i` and `i + 1`. For `i = e − 1` runners `e − 1`
/// and `0` are exchanged and one bead moves from runner `e − 1` to runner `0`.
pub fn upsilon_swap<X: Charged>(x: &X, i: usize, e: usize) -> Result<X> {
    if e < 2 || i >= e {
        return Err(Error::ShapeMismatch {
            expected: e,
            found: i + 1,
        });
    }
    x.try_map_components(|c| {
        let mut d = eta(c, e);
        if i + 1 < e {
            d.quotient.swap(i, i + 1);
            d.charges.swap(i, i + 1);
        } else {
            d.quotient.swap(0, e - 1);
            let (t0, tl) = (d.charges[0], d.charges[e - 1]);
            d.charges[0] = tl + 1;
            d.charges[e - 1] = t0 - 1;
        }
        eta_inverse(&d, e)
    })
}

/// `M(i)`: zero on runners below `i`, one from `i` up.
pub fn m_vector(i: usize, e: usize) -> Vec<i64> {
    (0..e).map(|j| i64::from(j >= i)).collect()
}

/// The `i` with `M(i) = m`, if any.
pub fn m_index(m: &[i64]) -> Option<usize> {
    let i = m.iter().position(|&x| x != 0).unwrap_or(m.len());
    m.iter()
        .enumerate()
        .all(|(j, &x)| x == i64::from(j >= i))
        .then_some(i)
}

/// Per-member, per-component `(|ρ^k|, t^k)`.
fn weighted_charges(m: &MultiAbacus, e: usize) -> Vec<(i64, Vec<i64>)> {
    m.components()
        .iter()
        .map(|c| {
            let d = eta(c, e);
            (d.weight() as i64, d.charges)
        })
        .collect()
}

/// The Scopes condition for `Υ_i` on `b`: `|ρ^k| ≤ t^k_{i+1} − t^k_i`, or
/// `|ρ^k| ≤ t^k_0 − t^k_{e−1} + 1` when `i = e − 1`, for every member and
/// component.
pub fn scopes_move_valid(b: &Block, i: usize) -> bool {
    let e = b.e();
    if i >= e {
        return false;
    }
    b.members().iter().all(|m| {
        weighted_charges(m, e).iter().all(|(w, t)| {
            if i + 1 < e {
                *w <= t[i + 1] - t[i]
            } else {
                *w <= t[0] - t[e - 1] + 1
            }
        })
    })
}

/// Whether `b` and `Υ_i(b)` are related by a Scopes move, the condition
/// holding on either side.
pub fn scopes_related(b: &Block, i: usize) -> Result<bool> {
    if scopes_move_valid(b, i) {
        return Ok(true);
    }
    let image = image_block(b, &Step::Swap(i))?;
    Ok(scopes_move_valid(&image, i))
}

/// The hypothesis for stretching by `M(i)`: `t^k_y + 1 − t^k_x ≥ |ρ^k|` for
/// all `x < i ≤ y`, every member and every component.
pub fn l22_holds(b: &Block, i: usize) -> bool {
    let e = b.e();
    b.members().iter().all(|m| {
        weighted_charges(m, e)
            .iter()
            .all(|(w, t)| (0..i).all(|x| (i..e).all(|y| t[y] + 1 - t[x] >= *w)))
    })
}

/// One step of an [`EquivalenceChain`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Step {
    Swap(usize),
    Shift(u32),
    Stretch(Vec<i64>),
    /// Moves component `k` to charge `s_k + e·c_k`; residues are unchanged.
    Recharge(Vec<i64>),
}

impl Step {
    pub fn apply(&self, m: &MultiAbacus, e: usize) -> Result<MultiAbacus> {
        match self {
            Step::Swap(i) => upsilon_swap(m, *i, e),
            Step::Shift(times) => Ok((0..*times).fold(m.clone(), |x, _| upsilon_shift(&x))),
            Step::Stretch(v) => stretch(m, v, e),
            Step::Recharge(c) => {
                if c.len() != m.r() {
                    return Err(Error::ShapeMismatch {
                        expected: m.r(),
                        found: c.len(),
                    });
                }
                let mut shifts = c.iter();
                Ok(m.map_components(|x| {
                    AbacusConfig::new(
                        x.partition.clone(),
                        x.charge + e as i64 * shifts.next().expect("length checked"),
                    )
                }))
            }
        }
    }
}

/// `Π(M(i))` written as `υ^{e−i}` followed by runner swaps.
pub fn m_stretch_as_moves(i: usize, e: usize) -> Vec<Step> {
    let mut steps = Vec::new();
    if i == 0 || i >= e {
        if i == 0 {
            steps.push(Step::Shift(e as u32));
        }
        return steps;
    }
    steps.push(Step::Shift((e - i) as u32));
    for p in 0..i {
        for j in (p..e - i + p).rev() {
            steps.push(Step::Swap(j));
        }
    }
    steps
}

fn image_block(b: &Block, step: &Step) -> Result<Block> {
    let images = b
        .members()
        .iter()
        .map(|m| step.apply(m, b.e()))
        .collect::<Result<Vec<_>>>()?;
    Block::from_members(b.e(), images)
}

/// A sequence of moves from one block to another together with the induced
/// bijection between their members, as `(source index, target index)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceChain {
    pub e: usize,
    pub source: MultiAbacus,
    pub target: MultiAbacus,
    pub steps: Vec<Step>,
    pub pairing: Vec<(usize, usize)>,
}

struct Builder {
    e: usize,
    source: Block,
    current: Block,
    images: Vec<MultiAbacus>,
    steps: Vec<Step>,
}

impl Builder {
    fn new(b: &Block) -> Self {
        Builder {
            e: b.e(),
            source: b.clone(),
            current: b.clone(),
            images: b.members().to_vec(),
            steps: Vec::new(),
        }
    }

    fn push(&mut self, step: Step) -> Result<()> {
        validate(&self.current, &step, self.steps.len())?;
        self.images = self
            .images
            .iter()
            .map(|m| step.apply(m, self.e))
            .collect::<Result<_>>()?;
        self.current = image_block(&self.current, &step)?;
        self.steps.push(step);
        Ok(())
    }

    fn finish(self) -> (EquivalenceChain, Block) {
        let pairing = self
            .images
            .iter()
            .enumerate()
            .map(|(s, m)| {
                (
                    s,
                    self.current.index_of(m).expect("image lies in the target"),
                )
            })
            .collect();
        let chain = EquivalenceChain {
            e: self.e,
            source: self.source.members()[0].clone(),
            target: self.images[0].clone(),
            steps: self.steps,
            pairing,
        };
        (chain, self.current)
    }
}

fn invalid(step: usize, reason: impl Into<String>) -> Error {
    Error::InvalidStep {
        step,
        reason: reason.into(),
    }
}

/// Checks that `step` may be applied to `b`: swaps need a Scopes move,
/// stretches need either the `M(i)` hypothesis on a Rouquier block or
/// Rouquier blocks on both sides.
pub fn validate(b: &Block, step: &Step, index: usize) -> Result<()> {
    match step {
        Step::Shift(_) => Ok(()),
        Step::Recharge(c) => {
            if c.len() == b.r() {
                Ok(())
            } else {
                Err(invalid(
                    index,
                    format!("recharge has {} entries for {} components", c.len(), b.r()),
                ))
            }
        }
        Step::Swap(i) => {
            if scopes_related(b, *i)? {
                Ok(())
            } else {
                Err(invalid(
                    index,
                    format!("runner swap {i} is not a Scopes move"),
                ))
            }
        }
        Step::Stretch(v) => {
            if v.len() != b.e() {
                return Err(invalid(
                    index,
                    format!("stretch vector has {} entries", v.len()),
                ));
            }
            let rouquier = is_rouquier_block(b);
            if let Some(i) = m_index(v) {
                if rouquier && l22_holds(b, i) {
                    return Ok(());
                }
            }
            if rouquier && is_rouquier_block(&image_block(b, step)?) {
                return Ok(());
            }
            Err(invalid(
                index,
                format!("stretch by {v:?} is not justified on this block"),
            ))
        }
    }
}

/// Result of replaying a chain.
#[derive(Clone, Debug)]
pub struct Replay {
    pub source: Block,
    pub target: Block,
}

impl EquivalenceChain {
    /// Re-runs every step from the source block, re-validating each one and
    /// checking that images form full blocks, that quotient weights are
    /// preserved, and that the recorded pairing is the induced bijection.
    pub fn replay(&self) -> Result<Replay> {
        let e = self.e;
        let source = generate_block(&self.source, e);
        let last = self.steps.len();
        let mut current = source.clone();
        let mut images = source.members().to_vec();
        for (index, step) in self.steps.iter().enumerate() {
            validate(&current, step, index)?;
            let next = images
                .iter()
                .map(|m| step.apply(m, e))
                .collect::<Result<Vec<_>>>()?;
            for (before, after) in images.iter().zip(&next) {
                let weights = |m: &MultiAbacus| {
                    weighted_charges(m, e)
                        .into_iter()
                        .map(|(w, _)| w)
                        .collect::<Vec<_>>()
                };
                if weights(before) != weights(after) {
                    return Err(invalid(
                        index,
                        format!("quotient weights of {before} changed"),
                    ));
                }
            }
            let block = generate_block(&next[0], e);
            let set: HashSet<&MultiAbacus> = next.iter().collect();
            if set.len() != next.len()
                || block.len() != next.len()
                || !block.members().iter().all(|m| set.contains(m))
            {
                return Err(invalid(index, "image is not a full block"));
            }
            images = next;
            current = block;
        }
        if images[0] != self.target {
            return Err(invalid(
                last,
                format!("chain ends at {}, not at {}", images[0], self.target),
            ));
        }
        let expected: Vec<(usize, usize)> = images
            .iter()
            .enumerate()
            .map(|(s, m)| (s, current.index_of(m).expect("image lies in the block")))
            .collect();
        let mut seen_s = HashSet::new();
        let mut seen_t = HashSet::new();
        let bijective = self.pairing.len() == source.len()
            && self.pairing.len() == current.len()
            && self
                .pairing
                .iter()
                .all(|&(s, t)| seen_s.insert(s) && seen_t.insert(t));
        if !bijective || self.pairing != expected {
            return Err(invalid(last, "pairing is not the induced bijection"));
        }
        Ok(Replay {
            source,
            target: current,
        })
    }
}

/// Moves a core block to a staircase block: recharges components if the block
/// has no base tuple at its multicharge, sorts the base tuple with runner
/// swaps, then applies `M(i)` stretches where some component has
/// `t^k_{i−1} > t^k_i`.
pub fn reduce_to_staircase(b: &Block) -> Result<(EquivalenceChain, Block)> {
    let mut builder = Builder::new(b);
    if base_tuple(b).is_err() {
        let (shifts, _) = recharged_base_tuple(b)?;
        builder.push(Step::Recharge(shifts))?;
    }
    let e = b.e();
    let bound = e * e + 4 * e;
    loop {
        if builder.steps.len() > bound {
            return Err(invalid(
                builder.steps.len(),
                "staircase reduction did not terminate",
            ));
        }
        let base = base_tuple(&builder.current)?;
        if let Some(i) = (0..e - 1).find(|&i| base[i] > base[i + 1]) {
            builder.push(Step::Swap(i))?;
            continue;
        }
        if is_staircase_block(&builder.current)? {
            return Ok(builder.finish());
        }
        let descent = (1..e)
            .find(|&i| {
                builder
                    .current
                    .members()
                    .iter()
                    .any(|m| runner_charges(m, e).iter().any(|t| t[i - 1] > t[i]))
            })
            .expect("a non-staircase core block has a descent");
        builder.push(Step::Stretch(m_vector(descent, e)))?;
    }
}

fn fused_r_rouquier(b: &Block) -> bool {
    let e = b.e();
    let r = b.r();
    is_r_rouquier_partition(&fuse(&b.members()[0], e), e, r)
}

/// Whether `b` is a Rouquier block whose fused image is r-Rouquier.
pub fn is_normalized(b: &Block) -> bool {
    is_rouquier_block(b) && fused_r_rouquier(b)
}

/// Moves a core or Rouquier block to a Rouquier block whose fused image lies
/// in an r-Rouquier block, using only stretches `M(i)` after the staircase
/// reduction.
pub fn rouquier_normalize(b: &Block) -> Result<(EquivalenceChain, Block)> {
    let mut builder = if is_core_block(b) {
        let (prefix, staircase) = reduce_to_staircase(b)?;
        let mut builder = Builder::new(b);
        builder.steps = prefix.steps;
        builder.images = b
            .members()
            .iter()
            .map(|m| {
                builder
                    .steps
                    .iter()
                    .try_fold(m.clone(), |x, s| s.apply(&x, b.e()))
            })
            .collect::<Result<_>>()?;
        builder.current = staircase;
        builder
    } else if is_rouquier_block(b) {
        Builder::new(b)
    } else {
        return Err(Error::NotEligible);
    };
    let e = b.e();
    let rounds = ggr_stretch_vector(&builder.current)?
        .get(1)
        .copied()
        .unwrap_or(0)
        + 1;
    for _ in 0..rounds {
        if is_normalized(&builder.current) {
            break;
        }
        for i in 1..e {
            builder.push(Step::Stretch(m_vector(i, e)))?;
        }
    }
    if !is_normalized(&builder.current) {
        return Err(invalid(
            builder.steps.len(),
            "normalization did not reach an r-Rouquier image",
        ));
    }
    Ok(builder.finish())
}
