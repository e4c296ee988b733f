//! Uglov's bijection between r-tuples of charged e-abaci and single charged
//! e-abaci.
//!
//! Bead `x = me + i` of component `k` is sent to `ψ_k(x) = ((m+1)r − k)e + i`.
//! Every integer is `ψ_k(x)` for exactly one pair `(k, x)`, so fusing is a
//! disjoint union and splitting reads each position back to its component.

use std::collections::BTreeMap;

use crate::abacus::{eta, AbacusConfig, EtaDecomposition, MultiAbacus};
use crate::beta::BetaSet;
use crate::blocks::{residue_multiset, Block};
use crate::error::{Error, Result};

/// `ψ_k(x)` for `1 ≤ k ≤ r`.
pub fn psi_k(x: i64, k: usize, r: usize, e: usize) -> i64 {
    debug_assert!((1..=r).contains(&k) && e >= 1);
    let (k, r, e) = (k as i64, r as i64, e as i64);
    let (m, i) = (x.div_euclid(e), x.rem_euclid(e));
    ((m + 1) * r - k) * e + i
}

/// The pair `(k, x)` with `ψ_k(x) = z`.
pub fn psi_preimage(z: i64, r: usize, e: usize) -> (usize, i64) {
    let (r, e) = (r as i64, e as i64);
    let (row, i) = (z.div_euclid(e), z.rem_euclid(e));
    let k = match (-row).rem_euclid(r) {
        0 => r,
        k => k,
    };
    let m = (row + k) / r - 1;
    (k as usize, m * e + i)
}

/// `Ψ_r`: merges the components of `m` into a single charged abacus.
pub fn fuse(m: &MultiAbacus, e: usize) -> AbacusConfig {
    let r = m.r();
    let sets: Vec<BetaSet> = m.components().iter().map(AbacusConfig::beta_set).collect();
    let below = sets
        .iter()
        .zip(1..)
        .map(|(b, k)| psi_k(b.floor(), k, r, e))
        .min()
        .expect("r ≥ 1");
    let mut extras = Vec::new();
    for (b, k) in sets.iter().zip(1..) {
        extras.extend(b.window().iter().map(|&x| psi_k(x, k, r, e)));
        let mut x = b.floor() - 1;
        while psi_k(x, k, r, e) >= below {
            extras.push(psi_k(x, k, r, e));
            x -= 1;
        }
    }
    AbacusConfig::from_beta_set(&BetaSet::from_members(below, extras))
}

/// `Φ_r`: the inverse of [`fuse`].
pub fn split(c: &AbacusConfig, r: usize, e: usize) -> MultiAbacus {
    let set = c.beta_set();
    let floor = set.floor();
    let mut extras = vec![Vec::new(); r];
    for &z in set.window() {
        let (k, x) = psi_preimage(z, r, e);
        extras[k - 1].push(x);
    }
    let components = extras
        .into_iter()
        .zip(1..)
        .map(|(xs, k)| {
            let mut below = floor.div_euclid(r as i64) - 2 * e as i64;
            while psi_k(below, k, r, e) >= floor {
                below -= e as i64;
            }
            while psi_k(below, k, r, e) < floor {
                below += 1;
            }
            AbacusConfig::from_beta_set(&BetaSet::from_members(below, xs))
        })
        .collect();
    MultiAbacus::new(components).expect("r ≥ 1")
}

/// `η ∘ Ψ_r`: sends the ≈_e-class of `m` onto a ≈_r-class of e-multipartitions.
pub fn level_rank(m: &MultiAbacus, e: usize) -> EtaDecomposition {
    eta(&fuse(m, e), e)
}

/// Splits every member of a block of single abaci into `r` components and
/// groups the images into blocks.
pub fn phi_block_decomposition(b: &Block, r: usize) -> Result<Vec<Block>> {
    if b.r() != 1 {
        return Err(Error::ShapeMismatch {
            expected: 1,
            found: b.r(),
        });
    }
    let e = b.e();
    let mut groups: BTreeMap<(Vec<i64>, Vec<usize>), Vec<MultiAbacus>> = BTreeMap::new();
    for m in b.members() {
        let image = split(&m.components()[0], r, e);
        let key = (
            image.charges(),
            residue_multiset(&image, e).counts().to_vec(),
        );
        groups.entry(key).or_default().push(image);
    }
    groups
        .into_values()
        .map(|ms| Block::from_members(e, ms))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{equivalent, generate_block};
    use crate::partition::Partition;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn multi(parts: &[&[u32]], charges: &[i64]) -> MultiAbacus {
        MultiAbacus::from_parts(parts.iter().map(|q| p(q)).collect(), charges.to_vec()).unwrap()
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi_k(0, 3, 3, 4), 0);
        assert_eq!(psi_k(7, 1, 2, 3), 16);
        assert_eq!(psi_k(7, 2, 2, 3), 13);
        for z in -50..50 {
            let (k, x) = psi_preimage(z, 3, 4);
            assert_eq!(psi_k(x, k, 3, 4), z);
        }
    }

    #[test]
    fn fuse_examples() {
        let m = multi(&[&[2, 2, 1, 1], &[3, 1, 1, 1, 1, 1]], &[7, 9]);
        let c = fuse(&m, 3);
        assert_eq!(c, AbacusConfig::new(p(&[5, 3, 3, 2, 2, 2, 2, 2, 1, 1]), 16));
        let d = eta(&c, 3);
        assert_eq!(d.quotient, vec![p(&[2]), p(&[]), p(&[])]);
        assert_eq!(d.charges, vec![3, 6, 7]);
        assert_eq!(split(&c, 2, 3), m);

        let c = AbacusConfig::new(p(&[4, 1, 1]), -2);
        assert_eq!(fuse(&MultiAbacus::from(c.clone()), 5), c);
        assert_eq!(split(&c, 1, 5), MultiAbacus::from(c));

        assert_eq!(
            fuse(&multi(&[&[1], &[], &[]], &[0, 0, 0]), 3),
            AbacusConfig::new(p(&[7]), 0)
        );
    }

    #[test]
    fn three_runner_picture() {
        let m = multi(
            &[&[5, 4, 3, 3, 2, 1, 1], &[6, 5, 4, 4, 4, 1], &[6, 3, 2]],
            &[10, 9, 6],
        );
        let c = fuse(&m, 3);
        assert_eq!(
            c,
            AbacusConfig::new(
                p(&[20, 19, 19, 18, 14, 14, 13, 13, 13, 10, 9, 6, 5, 5, 3, 2]),
                25
            )
        );
        assert_eq!(
            c.beta_set().members_from(-3),
            vec![
                44, 42, 41, 39, 34, 33, 31, 30, 29, 25, 23, 19, 17, 16, 13, 11, 8, 7, 6, 5, 4, 3,
                2, 1, 0, -1, -2, -3
            ]
        );
        assert_eq!(split(&c, 3, 3), m);
    }

    #[test]
    fn level_rank_examples() {
        let images: Vec<_> = [
            multi(&[&[1], &[], &[]], &[0, 0, 0]),
            multi(&[&[], &[1], &[]], &[0, 0, 0]),
            multi(&[&[], &[], &[1]], &[0, 0, 0]),
        ]
        .iter()
        .map(|m| level_rank(m, 3))
        .collect();
        assert_eq!(images[0].quotient, vec![p(&[2]), p(&[]), p(&[])]);
        assert_eq!(images[1].quotient, vec![p(&[1]), p(&[]), p(&[1])]);
        assert_eq!(images[2].quotient, vec![p(&[]), p(&[]), p(&[1, 1])]);
        for d in &images {
            assert_eq!(d.charges, vec![1, 0, -1]);
            assert!(equivalent(&images[0].to_multi(), &d.to_multi(), 3));
        }
    }

    #[test]
    fn non_converse_witness() {
        let lambda = AbacusConfig::new(p(&[5, 3, 3, 2, 2, 2, 2, 2, 1, 1]), 16);
        let d = EtaDecomposition::new(vec![p(&[1]), p(&[]), p(&[1])], vec![3, 6, 7]).unwrap();
        let mu = crate::abacus::eta_inverse(&d, 3).unwrap();
        assert!(equivalent(&lambda.clone().into(), &mu.clone().into(), 3));
        let (x, y) = (split(&lambda, 2, 3), split(&mu, 2, 3));
        assert_eq!(y, multi(&[&[3, 1, 1], &[2, 2, 1, 1]], &[9, 7]));
        assert!(!equivalent(&x, &y, 3));
    }

    #[test]
    fn decomposition_of_charge_16_class() {
        let b = generate_block(
            &AbacusConfig::new(p(&[5, 3, 3, 2, 2, 2, 2, 2, 1, 1]), 16).into(),
            3,
        );
        assert_eq!(b.len(), 9);
        let parts = phi_block_decomposition(&b, 2).unwrap();
        let mut sizes: Vec<usize> = parts.iter().map(Block::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 8]);
        for part in &parts {
            assert_eq!(generate_block(&part.members()[0], 3), *part);
        }
    }
}
