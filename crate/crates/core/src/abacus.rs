//! Charged partitions as β-sets, and the η map onto e-quotients and charge
//! vectors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::beta::BetaSet;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// A charged partition `(λ, s)`, identified with the β-set `B_s(λ)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AbacusConfig {
    pub partition: Partition,
    pub charge: i64,
}

impl AbacusConfig {
    pub fn new(partition: Partition, charge: i64) -> Self {
        AbacusConfig { partition, charge }
    }

    /// The empty partition at charge `s`.
    pub fn empty(s: i64) -> Self {
        AbacusConfig {
            partition: Partition::empty(),
            charge: s,
        }
    }

    pub fn beta_set(&self) -> BetaSet {
        beta_set(&self.partition, self.charge)
    }

    pub fn from_beta_set(b: &BetaSet) -> Self {
        let (partition, charge) = abacus_to_partition(b);
        AbacusConfig { partition, charge }
    }

    pub fn size(&self) -> usize {
        self.partition.size()
    }
}

impl fmt::Display for AbacusConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.partition, self.charge)
    }
}

/// `B_s(λ) = {λ_i − i + s : i ≥ 1}`.
pub fn beta_set(lambda: &Partition, s: i64) -> BetaSet {
    let len = lambda.len() as i64;
    let extras = lambda
        .parts()
        .iter()
        .zip(1..)
        .map(|(&p, i)| p as i64 - i + s);
    BetaSet::from_members(s - len, extras)
}

/// The unique `(λ, s)` with `B_s(λ) = b`.
pub fn abacus_to_partition(b: &BetaSet) -> (Partition, i64) {
    let window = b.window();
    let len = window.len() as i64;
    let parts = window
        .iter()
        .zip(1..)
        .map(|(&w, i)| (w - b.floor() - len + i) as u32)
        .collect();
    (Partition::from_sorted_unchecked(parts), b.floor() + len)
}

/// Moves the bead at `b` to the empty position `c`, removing (if `c < b`) or
/// adding a single `|b − c|`-rim hook.
pub fn move_bead(config: &AbacusConfig, b: i64, c: i64) -> Result<AbacusConfig> {
    let set = config.beta_set();
    if !set.contains(b) {
        return Err(Error::BeadAbsent(b));
    }
    if set.contains(c) {
        return Err(Error::PositionOccupied(c));
    }
    Ok(AbacusConfig::from_beta_set(&set.replace(b, c)))
}

/// An e-quotient `(ρ_0, …, ρ_{e−1})` together with the runner charges
/// `(t_0, …, t_{e−1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EtaDecomposition {
    pub quotient: Vec<Partition>,
    pub charges: Vec<i64>,
}

impl EtaDecomposition {
    pub fn new(quotient: Vec<Partition>, charges: Vec<i64>) -> Result<Self> {
        if quotient.len() != charges.len() {
            return Err(Error::ShapeMismatch {
                expected: quotient.len(),
                found: charges.len(),
            });
        }
        Ok(EtaDecomposition { quotient, charges })
    }

    /// `|ρ|`, the weight of the source partition.
    pub fn weight(&self) -> usize {
        self.quotient.iter().map(Partition::size).sum()
    }

    /// `Σ t_i`, the charge of the source.
    pub fn total_charge(&self) -> i64 {
        self.charges.iter().sum()
    }

    /// The same data read as a charged multipartition with `e` components.
    pub fn to_multi(&self) -> MultiAbacus {
        MultiAbacus::from_parts(self.quotient.clone(), self.charges.clone())
            .expect("quotient and charges have equal length")
    }

    pub fn from_multi(m: &MultiAbacus) -> Self {
        EtaDecomposition {
            quotient: m.partitions().cloned().collect(),
            charges: m.charges(),
        }
    }
}

impl fmt::Display for EtaDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(f, &self.quotient, &self.charges)
    }
}

fn fmt_tuple(f: &mut fmt::Formatter<'_>, parts: &[Partition], charges: &[i64]) -> fmt::Result {
    write!(f, "((")?;
    for (k, p) in parts.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, "),(")?;
    for (k, t) in charges.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{t}")?;
    }
    write!(f, "))")
}

/// `η(λ, s)`: splits the abacus into its `e` runners.
pub fn eta(config: &AbacusConfig, e: usize) -> EtaDecomposition {
    assert!(e >= 1, "e must be positive");
    let set = config.beta_set();
    let (quotient, charges) = (0..e)
        .map(|i| abacus_to_partition(&set.runner(i, e)))
        .unzip::<_, _, Vec<_>, Vec<_>>();
    debug_assert_eq!(charges.iter().sum::<i64>(), config.charge);
    EtaDecomposition { quotient, charges }
}

/// The inverse of [`eta`]; `e` must equal the number of runners in `d`.
pub fn eta_inverse(d: &EtaDecomposition, e: usize) -> Result<AbacusConfig> {
    if d.quotient.len() != e || d.charges.len() != e {
        return Err(Error::ShapeMismatch {
            expected: e,
            found: d.quotient.len().min(d.charges.len()),
        });
    }
    let runners: Vec<BetaSet> = d
        .quotient
        .iter()
        .zip(&d.charges)
        .map(|(p, &t)| beta_set(p, t))
        .collect();
    Ok(AbacusConfig::from_beta_set(&BetaSet::from_runners(
        &runners,
    )))
}

/// The e-core of `λ` and its e-weight.
pub fn e_core_and_weight(lambda: &Partition, e: usize) -> (Partition, usize) {
    let d = eta(&AbacusConfig::new(lambda.clone(), 0), e);
    let weight = d.weight();
    let emptied = EtaDecomposition {
        quotient: vec![Partition::empty(); e],
        charges: d.charges,
    };
    let core = eta_inverse(&emptied, e).expect("shape is e").partition;
    debug_assert_eq!(lambda.size() - core.size(), weight * e);
    (core, weight)
}

/// A charged multipartition `((λ^(1), …, λ^(r)), (s_1, …, s_r))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MultiRepr", into = "MultiRepr")]
pub struct MultiAbacus {
    components: Vec<AbacusConfig>,
}

#[derive(Serialize, Deserialize)]
struct MultiRepr {
    components: Vec<Partition>,
    charges: Vec<i64>,
}

impl TryFrom<MultiRepr> for MultiAbacus {
    type Error = Error;

    fn try_from(r: MultiRepr) -> Result<Self> {
        MultiAbacus::from_parts(r.components, r.charges)
    }
}

impl From<MultiAbacus> for MultiRepr {
    fn from(m: MultiAbacus) -> Self {
        MultiRepr {
            charges: m.charges(),
            components: m.components.into_iter().map(|c| c.partition).collect(),
        }
    }
}

impl MultiAbacus {
    /// Requires at least one component.
    pub fn new(components: Vec<AbacusConfig>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::ShapeMismatch {
                expected: 1,
                found: 0,
            });
        }
        Ok(MultiAbacus { components })
    }

    pub fn from_parts(partitions: Vec<Partition>, charges: Vec<i64>) -> Result<Self> {
        if partitions.len() != charges.len() {
            return Err(Error::ShapeMismatch {
                expected: charges.len(),
                found: partitions.len(),
            });
        }
        MultiAbacus::new(
            partitions
                .into_iter()
                .zip(charges)
                .map(|(p, s)| AbacusConfig::new(p, s))
                .collect(),
        )
    }

    /// The empty multipartition with multicharge `bs`.
    pub fn empty(charges: &[i64]) -> Result<Self> {
        MultiAbacus::new(charges.iter().map(|&s| AbacusConfig::empty(s)).collect())
    }

    pub fn components(&self) -> &[AbacusConfig] {
        &self.components
    }

    pub fn into_components(self) -> Vec<AbacusConfig> {
        self.components
    }

    pub fn partitions(&self) -> impl Iterator<Item = &Partition> {
        self.components.iter().map(|c| &c.partition)
    }

    pub fn charges(&self) -> Vec<i64> {
        self.components.iter().map(|c| c.charge).collect()
    }

    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(AbacusConfig::size).sum()
    }
}

impl From<AbacusConfig> for MultiAbacus {
    fn from(c: AbacusConfig) -> Self {
        MultiAbacus {
            components: vec![c],
        }
    }
}

impl fmt::Display for MultiAbacus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<Partition> = self.partitions().cloned().collect();
        fmt_tuple(f, &parts, &self.charges())
    }
}

/// Splits `"2,2,1,1|3,1"` into partitions; an empty segment is `∅`.
pub fn parse_components(s: &str) -> Result<Vec<Partition>> {
    s.split('|').map(str::parse).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn members(b: &BetaSet, lo: i64) -> Vec<i64> {
        b.members_from(lo)
    }

    #[test]
    fn beta_set_examples() {
        assert_eq!(beta_set(&Partition::empty(), 5), BetaSet::packed(5));
        assert_eq!(
            members(&beta_set(&p(&[4, 3, 1]), 3), -2),
            vec![6, 4, 1, -1, -2]
        );
        assert_eq!(beta_set(&p(&[4, 3, 1]), 3).floor(), 0);
        assert_eq!(
            members(&beta_set(&p(&[2, 2, 1, 1]), 7), -1),
            vec![8, 7, 5, 4, 2, 1, 0, -1]
        );
    }

    #[test]
    fn decode_examples() {
        assert_eq!(
            abacus_to_partition(&BetaSet::packed(-4)),
            (Partition::empty(), -4)
        );
        assert_eq!(
            abacus_to_partition(&BetaSet::from_members(0, [6, 4, 1])),
            (p(&[4, 3, 1]), 3)
        );
        assert_eq!(
            abacus_to_partition(&BetaSet::from_members(-3, [3, 1, -2])),
            (p(&[4, 3, 1]), 0)
        );
    }

    #[test]
    fn round_trip_small() {
        for n in 0..=12 {
            for lambda in Partition::all(n) {
                for s in -12..=12 {
                    assert_eq!(
                        abacus_to_partition(&beta_set(&lambda, s)),
                        (lambda.clone(), s)
                    );
                }
            }
        }
    }

    #[test]
    fn move_bead_examples() {
        let c = AbacusConfig::new(p(&[4, 3, 1]), 3);
        assert_eq!(
            move_bead(&c, 6, 5).unwrap(),
            AbacusConfig::new(p(&[3, 3, 1]), 3)
        );
        assert_eq!(
            move_bead(&AbacusConfig::new(p(&[2]), 1), 2, 0).unwrap(),
            AbacusConfig::empty(1)
        );
        assert_eq!(move_bead(&c, 4, 1), Err(Error::PositionOccupied(1)));
        assert_eq!(move_bead(&c, 5, 2), Err(Error::BeadAbsent(5)));
    }

    #[test]
    fn eta_examples() {
        let d = eta(&AbacusConfig::new(p(&[4, 2, 2, 2]), 6), 3);
        assert_eq!(d.quotient, vec![p(&[1, 1]), p(&[]), p(&[1])]);
        assert_eq!(d.charges, vec![3, 2, 1]);
        let d = eta(&AbacusConfig::new(p(&[4, 3, 2, 1]), 6), 3);
        assert_eq!(d.quotient, vec![p(&[1]), p(&[1]), p(&[1])]);
        assert_eq!(d.charges, vec![3, 2, 1]);
        let d = eta(&AbacusConfig::empty(0), 3);
        assert_eq!(d.quotient, vec![Partition::empty(); 3]);
        assert_eq!(d.charges, vec![0, 0, 0]);
    }

    #[test]
    fn eta_inverse_examples() {
        let d = EtaDecomposition::new(vec![Partition::empty(); 3], vec![3, 2, 1]).unwrap();
        assert_eq!(eta_inverse(&d, 3).unwrap(), AbacusConfig::new(p(&[1]), 6));
        let d = EtaDecomposition::new(vec![p(&[2]), p(&[]), p(&[])], vec![3, 6, 7]).unwrap();
        let c = eta_inverse(&d, 3).unwrap();
        assert_eq!(c, AbacusConfig::new(p(&[5, 3, 3, 2, 2, 2, 2, 2, 1, 1]), 16));
        assert_eq!(
            members(&c.beta_set(), -1),
            vec![20, 17, 16, 14, 13, 12, 11, 10, 8, 7, 5, 4, 3, 2, 1, 0, -1]
        );
        let d = EtaDecomposition::new(vec![Partition::empty(); 4], vec![0; 4]).unwrap();
        assert_eq!(eta_inverse(&d, 4).unwrap(), AbacusConfig::empty(0));
        assert!(eta_inverse(&d, 3).is_err());
    }

    #[test]
    fn core_examples() {
        assert_eq!(e_core_and_weight(&p(&[4, 2, 2, 2]), 3), (p(&[1]), 3));
        assert_eq!(e_core_and_weight(&p(&[4, 3, 1]), 3), (p(&[2]), 2));
        assert_eq!(
            e_core_and_weight(&Partition::empty(), 5),
            (Partition::empty(), 0)
        );
    }

    #[test]
    fn multi_serialization() {
        let m = MultiAbacus::from_parts(vec![p(&[2, 2, 1, 1]), p(&[])], vec![7, 9]).unwrap();
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(json, r#"{"components":[[2,2,1,1],[]],"charges":[7,9]}"#);
        assert_eq!(serde_json::from_str::<MultiAbacus>(&json).unwrap(), m);
        assert!(
            serde_json::from_str::<MultiAbacus>(r#"{"components":[[1]],"charges":[1,2]}"#).is_err()
        );
        assert_eq!(m.to_string(), "(((2^2,1^2),∅),(7,9))");
        let c = AbacusConfig::new(p(&[4, 3, 1]), 3);
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"partition":[4,3,1],"charge":3}"#
        );
    }

    #[test]
    fn component_syntax() {
        assert_eq!(
            parse_components("1||").unwrap(),
            vec![p(&[1]), p(&[]), p(&[])]
        );
        assert_eq!(
            parse_components("2,2,1,1|3,1,1,1,1,1").unwrap()[1],
            p(&[3, 1, 1, 1, 1, 1])
        );
        assert!(parse_components("1,2|").is_err());
    }
}
