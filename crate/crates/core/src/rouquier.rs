//! Rouquier and r-Rouquier predicates, and stretching.

use crate::abacus::{eta, eta_inverse, AbacusConfig, EtaDecomposition, MultiAbacus};
use crate::blocks::{r_circle, Block};
use crate::error::{Error, Result};
use crate::uglov::fuse;

/// Values built from charged abaci, acted on one component at a time.
pub trait Charged: Sized {
    fn try_map_components<F>(&self, f: F) -> Result<Self>
    where
        F: FnMut(&AbacusConfig) -> Result<AbacusConfig>;

    fn map_components<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&AbacusConfig) -> AbacusConfig,
    {
        self.try_map_components(|c| Ok(f(c))).expect("infallible")
    }
}

impl Charged for AbacusConfig {
    fn try_map_components<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(&AbacusConfig) -> Result<AbacusConfig>,
    {
        f(self)
    }
}

impl Charged for MultiAbacus {
    fn try_map_components<F>(&self, f: F) -> Result<Self>
    where
        F: FnMut(&AbacusConfig) -> Result<AbacusConfig>,
    {
        MultiAbacus::new(self.components().iter().map(f).collect::<Result<_>>()?)
    }
}

fn gaps_allow(d: &EtaDecomposition, slack: i64) -> bool {
    let w = d.weight() as i64;
    d.charges.windows(2).all(|t| w <= t[1] - t[0] + slack)
}

/// `wt(λ) ≤ t_{i+1} − t_i + 1` for every `0 ≤ i < e − 1`.
pub fn is_rouquier_partition(c: &AbacusConfig, e: usize) -> bool {
    gaps_allow(&eta(c, e), 1)
}

/// `wt(λ) ≤ t_{i+1} − t_i + r` for every `0 ≤ i < e − 1`.
pub fn is_r_rouquier_partition(c: &AbacusConfig, e: usize, r: usize) -> bool {
    gaps_allow(&eta(c, e), r as i64)
}

pub fn is_rouquier_multipartition(m: &MultiAbacus, e: usize) -> bool {
    m.components().iter().all(|c| is_rouquier_partition(c, e))
}

/// Whether every member of maximal hook weight is a Rouquier multipartition.
pub fn is_rouquier_block(b: &Block) -> bool {
    r_circle(b)
        .into_iter()
        .all(|m| is_rouquier_multipartition(m, b.e()))
}

/// Whether every member is a Rouquier multipartition.
pub fn is_rouquier_block_exhaustive(b: &Block) -> bool {
    b.members()
        .iter()
        .all(|m| is_rouquier_multipartition(m, b.e()))
}

/// For a block of single abaci: whether its members are r-Rouquier. All
/// members share their weight and runner charges, so one member decides.
pub fn is_r_rouquier_block(b: &Block, r: usize) -> Result<bool> {
    if b.r() != 1 {
        return Err(Error::ShapeMismatch {
            expected: 1,
            found: b.r(),
        });
    }
    Ok(is_r_rouquier_partition(
        &b.members()[0].components()[0],
        b.e(),
        r,
    ))
}

/// Adds `M_i` beads to runner `i` of every component, keeping the e-quotient.
pub fn stretch<X: Charged>(x: &X, m: &[i64], e: usize) -> Result<X> {
    if m.len() != e {
        return Err(Error::ShapeMismatch {
            expected: e,
            found: m.len(),
        });
    }
    x.try_map_components(|c| {
        let mut d = eta(c, e);
        for (t, dm) in d.charges.iter_mut().zip(m) {
            *t += dm;
        }
        eta_inverse(&d, e)
    })
}

/// A vector `(0, M, 2M, …, (e−1)M)` such that every stretched member of `b`
/// fuses to an r-Rouquier partition.
pub fn ggr_stretch_vector(b: &Block) -> Result<Vec<i64>> {
    let (e, r) = (b.e(), b.r() as i64);
    let fused: Vec<EtaDecomposition> = b.members().iter().map(|m| eta(&fuse(m, e), e)).collect();
    let scalar = if fused.iter().all(|d| gaps_allow(d, r)) {
        0
    } else {
        fused
            .iter()
            .map(|d| {
                let drop = d.charges.windows(2).map(|t| t[0] - t[1]).max().unwrap_or(0);
                ((drop + d.weight() as i64).max(0) + r - 1) / r
            })
            .max()
            .unwrap_or(0)
    };
    let vector: Vec<i64> = (0..e as i64).map(|i| i * scalar).collect();
    for m in b.members() {
        let image = fuse(&stretch(m, &vector, e)?, e);
        if !is_r_rouquier_partition(&image, e, b.r()) {
            return Err(Error::InvalidStep {
                step: 0,
                reason: format!("stretch by {vector:?} leaves {m} outside the r-Rouquier range"),
            });
        }
    }
    Ok(vector)
}
