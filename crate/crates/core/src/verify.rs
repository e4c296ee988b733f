//! Property sweeps over all small blocks.
//!
//! Each suite runs a list of named checks and reports a pass/fail line per
//! check, with the first counterexample found.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::abacus::{
    abacus_to_partition, beta_set, e_core_and_weight, eta, eta_inverse, move_bead,
};
use crate::abacus::{AbacusConfig, EtaDecomposition, MultiAbacus};
use crate::blocks::{
    all_blocks, base_tuple, block_oracle, charge_sums, equivalent, generate_block, is_core_block,
    move1_neighbors, move2_neighbors, recharged_base_tuple, residue_multiset, runner_charges,
    Block, DEFAULT_ORACLE_LIMIT,
};
use crate::error::{Error, Result};
use crate::partition::{multipartition_count, multipartitions, Partition};
use crate::rouquier::{
    ggr_stretch_vector, is_r_rouquier_block, is_r_rouquier_partition, is_rouquier_block,
    is_rouquier_block_exhaustive, is_rouquier_multipartition, stretch,
};
use crate::scopes::{
    is_normalized, reduce_to_staircase, rouquier_normalize, scopes_related, upsilon_shift,
    upsilon_swap,
};
use crate::uglov::{fuse, level_rank, phi_block_decomposition, psi_k, split};

/// Sweep bounds: `2 ≤ e ≤ max_e`, `1 ≤ r ≤ max_r`, `0 ≤ n ≤ max_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_e: usize,
    pub max_r: usize,
    pub max_n: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_e: 3,
            max_r: 2,
            max_n: 6,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Roundtrip,
    Oracle,
    Uglov,
    Rouquier,
    Scopes,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "roundtrip" => Suite::Roundtrip,
            "oracle" => Suite::Oracle,
            "uglov" => Suite::Uglov,
            "rouquier" => Suite::Rouquier,
            "scopes" => Suite::Scopes,
            "all" => Suite::All,
            other => return Err(Error::Parse(format!("unknown suite {other:?}"))),
        })
    }
}

/// Outcome of one named property.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub checked: usize,
    pub counterexample: Option<String>,
    /// Soft checks report failures without failing the suite.
    pub soft: bool,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match (self.passed(), self.soft) {
            (true, _) => "PASS",
            (false, true) => "SOFT-FAIL",
            (false, false) => "FAIL",
        };
        write!(f, "{tag} {} ({} checked)", self.name, self.checked)?;
        if let Some(c) = &self.counterexample {
            write!(f, ": {c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed() || c.soft)
    }
}

struct Tally {
    name: &'static str,
    checked: usize,
    counterexample: Option<String>,
    soft: bool,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            checked: 0,
            counterexample: None,
            soft: false,
        }
    }

    fn soft(name: &'static str) -> Self {
        Tally {
            soft: true,
            ..Tally::new(name)
        }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(witness());
        }
    }

    fn done(self) -> Check {
        Check {
            name: self.name.to_string(),
            checked: self.checked,
            counterexample: self.counterexample,
            soft: self.soft,
        }
    }
}

/// Runs the named suite within `bounds`.
pub fn run(suite: Suite, bounds: Bounds) -> Report {
    let mut checks = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Roundtrip {
        checks.extend(roundtrip(bounds));
    }
    if all || suite == Suite::Oracle {
        checks.extend(oracle(bounds));
    }
    if all || suite == Suite::Uglov {
        checks.extend(uglov(bounds));
    }
    if all || suite == Suite::Rouquier {
        checks.extend(rouquier(bounds));
    }
    if all || suite == Suite::Scopes {
        checks.extend(scopes(bounds));
    }
    Report { checks }
}

/// Every reduced multicharge in `[0, e)^r`.
pub fn reduced_multicharges(e: usize, r: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..e as i64).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

/// All blocks with `2 ≤ e ≤ max_e`, `1 ≤ r ≤ max_r`, reduced multicharge and
/// `n ≤ max_n`, found by the residue filter.
pub fn sweep_blocks(bounds: Bounds) -> Vec<Block> {
    let mut out = Vec::new();
    for e in 2..=bounds.max_e {
        for r in 1..=bounds.max_r {
            for charges in reduced_multicharges(e, r) {
                for n in 0..=bounds.max_n {
                    out.extend(
                        all_blocks(n, &charges, e, DEFAULT_ORACLE_LIMIT).expect("bounded sweep"),
                    );
                }
            }
        }
    }
    out
}

/// Blocks of single abaci at charges `0 ≤ s < 2er` for each `2 ≤ r ≤ max(max_r, 2)`.
fn single_blocks(bounds: Bounds, r: usize) -> Vec<Block> {
    let mut out = Vec::new();
    for e in 2..=bounds.max_e {
        for s in 0..(2 * e * r) as i64 {
            for n in 0..=bounds.max_n {
                out.extend(all_blocks(n, &[s], e, DEFAULT_ORACLE_LIMIT).expect("bounded sweep"));
            }
        }
    }
    out
}

fn configs(max_size: usize, charge_span: i64) -> Vec<AbacusConfig> {
    let mut out = Vec::new();
    for n in 0..=max_size {
        for p in Partition::all(n) {
            for s in -charge_span..=charge_span {
                out.push(AbacusConfig::new(p.clone(), s));
            }
        }
    }
    out
}

fn roundtrip(bounds: Bounds) -> Vec<Check> {
    let size = 2 * bounds.max_n;
    let span = size as i64;
    let configs = configs(size, span);
    let max_e = bounds.max_e.max(6);
    let mut beta = Tally::new("beta-set round trip");
    let mut eta_rt = Tally::new("eta round trip");
    let mut conserve = Tally::new("eta charge conservation");
    let mut weight = Tally::new("weight identity");
    let mut moves = Tally::new("e-moves preserve the core and invert");
    for c in &configs {
        let (p, s) = abacus_to_partition(&beta_set(&c.partition, c.charge));
        beta.check(p == c.partition && s == c.charge, || format!("{c}"));
        for e in 2..=max_e {
            let d = eta(c, e);
            eta_rt.check(eta_inverse(&d, e).as_ref() == Ok(c), || {
                format!("{c} e={e}")
            });
            conserve.check(d.total_charge() == c.charge, || format!("{c} e={e}"));
            let (core, w) = e_core_and_weight(&c.partition, e);
            let (core_q, _) = e_core_and_weight(&core, e);
            weight.check(
                w == d.weight() && c.size() == core.size() + w * e && core_q == core,
                || format!("{c} e={e}"),
            );
            let set = c.beta_set();
            for &b in set.window() {
                if set.contains(b - e as i64) {
                    continue;
                }
                let down = move_bead(c, b, b - e as i64).expect("legal move");
                let back = move_bead(&down, b - e as i64, b).expect("legal move");
                moves.check(
                    down.size() + e == c.size()
                        && e_core_and_weight(&down.partition, e).0
                            == e_core_and_weight(&c.partition, e).0
                        && back == *c,
                    || format!("{c} e={e} bead {b}"),
                );
            }
        }
    }
    let mut inverse = Tally::new("split and fuse are inverse");
    for e in 2..=bounds.max_e {
        for r in 1..=bounds.max_r.max(3) {
            for n in 0..=bounds.max_n {
                for parts in multipartitions(n, r) {
                    for shift in -2..=2i64 {
                        let charges = (0..r as i64).map(|k| k * 3 - shift).collect();
                        let m =
                            MultiAbacus::from_parts(parts.clone(), charges).expect("lengths agree");
                        let c = fuse(&m, e);
                        inverse.check(
                            split(&c, r, e) == m && fuse(&split(&c, r, e), e) == c,
                            || format!("{m} e={e}"),
                        );
                    }
                }
            }
        }
    }
    vec![
        beta.done(),
        eta_rt.done(),
        conserve.done(),
        weight.done(),
        moves.done(),
        inverse.done(),
    ]
}

fn oracle(bounds: Bounds) -> Vec<Check> {
    let mut closure = Tally::new("closure equals residue filter");
    let mut cover = Tally::new("blocks partition the multipartitions");
    let mut preserve = Tally::new("moves stay inside the block");
    let mut symmetric = Tally::new("moves are symmetric");
    let mut sums = Tally::new("runner charge sums constant on blocks");
    let mut not_core_m1 = Tally::new("non-core Rouquier blocks have drops at most one");
    let mut fayers = Tally::new("core blocks have a base tuple after recharging");
    let mut literal = Tally::soft("core blocks have a base tuple at their own multicharge");
    for e in 2..=bounds.max_e {
        for r in 1..=bounds.max_r {
            for charges in reduced_multicharges(e, r) {
                for n in 0..=bounds.max_n {
                    let blocks =
                        all_blocks(n, &charges, e, DEFAULT_ORACLE_LIMIT).expect("bounded sweep");
                    let total: usize = blocks.iter().map(Block::len).sum();
                    let keys: HashSet<_> = blocks.iter().map(|b| b.residues().clone()).collect();
                    cover.check(
                        total as u128 == multipartition_count(n, r) && keys.len() == blocks.len(),
                        || format!("e={e} bs={charges:?} n={n}"),
                    );
                    for b in &blocks {
                        check_block(b, &mut closure, &mut preserve, &mut symmetric, &mut sums);
                        let oracle =
                            block_oracle(n, &charges, e, b.residues(), DEFAULT_ORACLE_LIMIT);
                        closure.check(oracle.ok().flatten().as_ref() == Some(b), || {
                            format!("oracle for {}", b.members()[0])
                        });
                        if is_core_block(b) {
                            literal.check(base_tuple(b).is_ok(), || format!("{}", b.members()[0]));
                            fayers.check(
                                base_tuple(b).is_ok() || recharged_base_tuple(b).is_ok(),
                                || format!("{}", b.members()[0]),
                            );
                        } else if is_rouquier_block(b) {
                            for m in b.members() {
                                let ok = runner_charges(m, e)
                                    .iter()
                                    .all(|t| (0..e).all(|i| (i + 1..e).all(|j| t[j] - t[i] >= -1)));
                                not_core_m1.check(ok, || format!("{m}"));
                            }
                        }
                    }
                }
            }
        }
    }
    vec![
        closure.done(),
        cover.done(),
        preserve.done(),
        symmetric.done(),
        sums.done(),
        not_core_m1.done(),
        fayers.done(),
        literal.done(),
    ]
}

fn check_block(
    b: &Block,
    closure: &mut Tally,
    preserve: &mut Tally,
    symmetric: &mut Tally,
    sums: &mut Tally,
) {
    let e = b.e();
    let seed = &b.members()[0];
    closure.check(generate_block(seed, e) == *b, || format!("{seed} e={e}"));
    let first = charge_sums(seed, e);
    for m in b.members() {
        sums.check(charge_sums(m, e) == first, || format!("{m} against {seed}"));
        let n1 = move1_neighbors(m, e);
        let n2 = move2_neighbors(m, e);
        for y in &n1 {
            preserve.check(
                b.contains(y) && residue_multiset(y, e) == *b.residues(),
                || format!("{m} →₁ {y}"),
            );
            symmetric.check(move1_neighbors(y, e).contains(m), || format!("{m} →₁ {y}"));
        }
        for y in &n2 {
            preserve.check(
                b.contains(y) && residue_multiset(y, e) == *b.residues(),
                || format!("{m} →₂ {y}"),
            );
            symmetric.check(move2_neighbors(y, e).contains(m), || format!("{m} →₂ {y}"));
        }
    }
}

/// The charge-16 pair: equivalent single abaci whose split images are not.
pub fn non_converse_witness() -> (AbacusConfig, AbacusConfig) {
    let lambda = AbacusConfig::new(
        Partition::new(vec![5, 3, 3, 2, 2, 2, 2, 2, 1, 1]).expect("valid"),
        16,
    );
    let one = Partition::new(vec![1]).expect("valid");
    let d = EtaDecomposition::new(vec![one.clone(), Partition::empty(), one], vec![3, 6, 7])
        .expect("valid");
    (lambda, eta_inverse(&d, 3).expect("three runners"))
}

fn uglov(bounds: Bounds) -> Vec<Check> {
    let mut preserve = Tally::new("fuse preserves blocks");
    for b in sweep_blocks(bounds) {
        let e = b.e();
        let image: Vec<MultiAbacus> = b.members().iter().map(|m| fuse(m, e).into()).collect();
        let target = generate_block(&image[0], e);
        for (m, y) in b.members().iter().zip(&image) {
            preserve.check(target.contains(y), || format!("{m} e={e}"));
        }
    }
    let mut psi = Tally::new("psi difference formula");
    for e in 2..=bounds.max_e.max(4) {
        for r in 1..=4usize {
            for k in 1..=r {
                for x in -12..12i64 {
                    for h in 1..20i64 {
                        let (i, ip, mp) = (
                            x.rem_euclid(e as i64),
                            h.rem_euclid(e as i64),
                            h.div_euclid(e as i64),
                        );
                        let (re, e64) = ((r * e) as i64, e as i64);
                        let expected = if i + ip < e64 {
                            mp * re + ip
                        } else {
                            mp * re + ip + (r as i64 - 1) * e64
                        };
                        psi.check(
                            psi_k(x + h, k, r, e) - psi_k(x, k, r, e) == expected,
                            || format!("x={x} h={h} k={k} r={r} e={e}"),
                        );
                    }
                }
            }
        }
    }
    let mut eqeq = Tally::new("eta classes match split classes");
    let mut parts = Tally::new("split images decompose into full blocks");
    for r in 2..=bounds.max_r.max(2) {
        for b in single_blocks(bounds, r) {
            let e = b.e();
            let decomposition = phi_block_decomposition(&b, r).expect("single abaci");
            let total: usize = decomposition.iter().map(Block::len).sum();
            parts.check(
                total == b.len()
                    && decomposition
                        .iter()
                        .all(|p| generate_block(&p.members()[0], e) == *p),
                || format!("{} r={r}", b.members()[0]),
            );
            let members: Vec<&AbacusConfig> =
                b.members().iter().map(|m| &m.components()[0]).collect();
            for (x, lx) in members.iter().enumerate() {
                let eta_x = eta(lx, e).to_multi();
                let split_x = split(lx, r, e);
                for ly in &members[x..] {
                    let left = equivalent(&eta_x, &eta(ly, e).to_multi(), r);
                    let right = equivalent(&split_x, &split(ly, r, e), e);
                    eqeq.check(left == right, || format!("{lx} vs {ly} e={e} r={r}"));
                }
            }
        }
    }
    let mut witness = Tally::new("charge-16 non-converse witness");
    let (lambda, mu) = non_converse_witness();
    witness.check(
        equivalent(&lambda.clone().into(), &mu.clone().into(), 3)
            && !equivalent(&split(&lambda, 2, 3), &split(&mu, 2, 3), 3),
        || format!("{lambda} and {mu}"),
    );
    let mut level = Tally::new("level-rank example forms one class");
    let images: Vec<MultiAbacus> = (0..3)
        .map(|k| {
            let mut parts = vec![Partition::empty(); 3];
            parts[k] = Partition::new(vec![1]).expect("valid");
            level_rank(
                &MultiAbacus::from_parts(parts, vec![0, 0, 0]).expect("valid"),
                3,
            )
            .to_multi()
        })
        .collect();
    level.check(images.iter().all(|d| equivalent(&images[0], d, 3)), || {
        format!("{images:?}")
    });
    vec![
        preserve.done(),
        psi.done(),
        eqeq.done(),
        parts.done(),
        witness.done(),
        level.done(),
    ]
}

fn rouquier(bounds: Bounds) -> Vec<Check> {
    let blocks = sweep_blocks(bounds);
    let mut circle = Tally::new("R° criterion matches all members");
    let mut not_rr = Tally::new("non-Rouquier multipartitions fuse outside r-Rouquier");
    let mut ggr = Tally::new("GGR stretch makes fused images r-Rouquier");
    let mut compat = Tally::new("stretch maps blocks onto blocks");
    let mut dmrr = Tally::new("Rouquier stretches keep quotients");
    let mut converse = Tally::soft("e=r=2 Rouquier blocks shift into 2-Rouquier (unproved)");
    for b in &blocks {
        let e = b.e();
        let r = b.r();
        circle.check(
            is_rouquier_block(b) == is_rouquier_block_exhaustive(b),
            || format!("{}", b.members()[0]),
        );
        if r >= 2 {
            for m in b.members() {
                if !is_rouquier_multipartition(m, e) {
                    not_rr.check(!is_r_rouquier_partition(&fuse(m, e), e, r), || {
                        format!("{m}")
                    });
                }
            }
        }
        match ggr_stretch_vector(b) {
            Ok(v) => {
                for m in b.members() {
                    let image = fuse(&stretch(m, &v, e).expect("length e"), e);
                    ggr.check(is_r_rouquier_partition(&image, e, r), || {
                        format!("{m} by {v:?}")
                    });
                }
            }
            Err(err) => ggr.check(false, || format!("{}: {err}", b.members()[0])),
        }
        for v in sample_vectors(e) {
            let image: Vec<MultiAbacus> = b
                .members()
                .iter()
                .map(|m| stretch(m, &v, e).expect("length e"))
                .collect();
            let target = generate_block(&image[0], e);
            compat.check(
                target.len() == b.len() && image.iter().all(|y| target.contains(y)),
                || format!("{} by {v:?}", b.members()[0]),
            );
            if is_rouquier_block(b) && is_rouquier_block(&target) {
                for (m, y) in b.members().iter().zip(&image) {
                    let same = m
                        .components()
                        .iter()
                        .zip(y.components())
                        .all(|(a, c)| eta(a, e).quotient == eta(c, e).quotient);
                    dmrr.check(same, || format!("{m} by {v:?}"));
                }
            }
        }
        if e == 2 && r == 2 && is_rouquier_block(b) {
            let seed = &b.members()[0];
            let found = (-6..=6).any(|a: i64| {
                (-6..=6).any(|c: i64| {
                    let charges = seed.charges();
                    let shifted = MultiAbacus::from_parts(
                        seed.partitions().cloned().collect(),
                        vec![charges[0] + 2 * a, charges[1] + 2 * c],
                    )
                    .expect("two components");
                    is_r_rouquier_partition(&fuse(&shifted, 2), 2, 2)
                })
            });
            converse.check(found, || format!("{seed}"));
        }
    }
    let mut rr = Tally::new("r-Rouquier classes split into Rouquier blocks");
    let mut contra = Tally::new("r-Rouquier partitions split to Rouquier multipartitions");
    for r in 2..=bounds.max_r.max(3) {
        for b in single_blocks(bounds, r) {
            if !is_r_rouquier_block(&b, r).expect("single abaci") {
                continue;
            }
            for part in phi_block_decomposition(&b, r).expect("single abaci") {
                rr.check(is_rouquier_block_exhaustive(&part), || {
                    format!("{} r={r}", part.members()[0])
                });
            }
            for m in b.members() {
                contra.check(
                    is_rouquier_multipartition(&split(&m.components()[0], r, b.e()), b.e()),
                    || format!("{m} r={r}"),
                );
            }
        }
    }
    vec![
        circle.done(),
        not_rr.done(),
        rr.done(),
        contra.done(),
        ggr.done(),
        compat.done(),
        dmrr.done(),
        converse.done(),
    ]
}

fn sample_vectors(e: usize) -> Vec<Vec<i64>> {
    let e = e as i64;
    vec![
        (0..e).map(|i| i * (i + 1) / 2).collect(),
        (0..e).map(|i| if i == 0 { 1 } else { 0 }).collect(),
        (0..e).map(|i| 2 - i).collect(),
    ]
}

fn scopes(bounds: Bounds) -> Vec<Check> {
    let mut charge = Tally::new("runner swaps and shifts keep charge bookkeeping");
    let mut moves = Tally::new("Scopes moves map blocks onto blocks");
    let mut stair = Tally::new("core blocks reduce to staircase blocks");
    let mut normal = Tally::new("core and Rouquier blocks normalize and replay");
    for b in sweep_blocks(bounds) {
        let e = b.e();
        for m in b.members() {
            for i in 0..e {
                let y = upsilon_swap(m, i, e).expect("i < e");
                let sums_match = m
                    .components()
                    .iter()
                    .zip(y.components())
                    .all(|(a, c)| a.charge == c.charge && eta(c, e).total_charge() == a.charge);
                charge.check(
                    sums_match && upsilon_swap(&y, i, e).as_ref() == Ok(m),
                    || format!("{m} i={i}"),
                );
            }
            let cycled = (0..e).fold(m.clone(), |x, _| upsilon_shift(&x));
            let ok = m
                .components()
                .iter()
                .zip(cycled.components())
                .all(|(a, c)| {
                    let (da, dc) = (eta(a, e), eta(c, e));
                    c.charge == a.charge + e as i64
                        && da.quotient == dc.quotient
                        && da.charges.iter().zip(&dc.charges).all(|(x, y)| y - x == 1)
                });
            charge.check(ok, || format!("{m} shifted {e} times"));
        }
        for i in 0..e {
            if scopes_related(&b, i).unwrap_or(false) {
                let image: Vec<MultiAbacus> = b
                    .members()
                    .iter()
                    .map(|m| upsilon_swap(m, i, e).expect("i < e"))
                    .collect();
                let target = generate_block(&image[0], e);
                moves.check(
                    target.len() == b.len() && image.iter().all(|y| target.contains(y)),
                    || format!("{} i={i}", b.members()[0]),
                );
            }
        }
        if is_core_block(&b) {
            let ok = reduce_to_staircase(&b).and_then(|(chain, target)| {
                let replay = chain.replay()?;
                Ok(replay.target == target && crate::blocks::is_staircase_block(&target)?)
            });
            stair.check(ok == Ok(true), || format!("{}: {ok:?}", b.members()[0]));
        }
        if is_core_block(&b) || is_rouquier_block(&b) {
            let ok = rouquier_normalize(&b).and_then(|(chain, target)| {
                let replay = chain.replay()?;
                let fused = generate_block(&fuse(&target.members()[0], e).into(), e);
                Ok(replay.target == target
                    && is_normalized(&target)
                    && is_r_rouquier_block(&fused, b.r())?)
            });
            normal.check(ok == Ok(true), || format!("{}: {ok:?}", b.members()[0]));
        }
    }
    vec![charge.done(), moves.done(), stair.done(), normal.done()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_bounds_pass() {
        let report = run(
            Suite::All,
            Bounds {
                max_e: 2,
                max_r: 1,
                max_n: 0,
            },
        );
        assert!(report.passed(), "{:#?}", report.checks);
    }

    #[test]
    fn suite_names() {
        assert_eq!("uglov".parse::<Suite>().unwrap(), Suite::Uglov);
        assert!("nope".parse::<Suite>().is_err());
        assert_eq!(reduced_multicharges(3, 2).len(), 9);
    }
}
