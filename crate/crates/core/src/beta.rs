//! Cofinite-below sets of integers.

use std::fmt;

/// A set of integers containing every `z` below some point and nothing above
/// some other point.
///
/// Stored canonically: `floor` is the smallest integer that is not a member,
/// and `window` lists the members above `floor` in decreasing order. Two equal
/// sets therefore have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BetaSet {
    floor: i64,
    window: Vec<i64>,
}

impl BetaSet {
    /// The set of all integers below `s`.
    pub fn packed(s: i64) -> Self {
        BetaSet {
            floor: s,
            window: Vec::new(),
        }
    }

    /// The set `{z : z < below} ∪ extras`. Duplicates are allowed.
    pub fn from_members(below: i64, extras: impl IntoIterator<Item = i64>) -> Self {
        let mut extras: Vec<i64> = extras.into_iter().filter(|&z| z >= below).collect();
        extras.sort_unstable();
        extras.dedup();
        let mut floor = below;
        let mut skip = 0;
        while skip < extras.len() && extras[skip] == floor {
            floor += 1;
            skip += 1;
        }
        let mut window = extras.split_off(skip);
        window.reverse();
        BetaSet { floor, window }
    }

    pub fn floor(&self) -> i64 {
        self.floor
    }

    /// Members above the floor, largest first.
    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// The largest member.
    pub fn max(&self) -> i64 {
        self.window.first().copied().unwrap_or(self.floor - 1)
    }

    pub fn contains(&self, z: i64) -> bool {
        z < self.floor || self.window.binary_search_by(|w| z.cmp(w)).is_ok()
    }

    /// Members `≥ lo`, largest first.
    pub fn members_from(&self, lo: i64) -> Vec<i64> {
        let mut out: Vec<i64> = self.window.iter().copied().filter(|&z| z >= lo).collect();
        out.extend((lo..self.floor).rev());
        out
    }

    /// The set with member `b` replaced by the non-member `c`.
    pub fn replace(&self, b: i64, c: i64) -> Self {
        debug_assert!(self.contains(b) && !self.contains(c));
        let lo = b.min(c).min(self.floor);
        let members = self
            .members_from(lo)
            .into_iter()
            .filter(|&z| z != b)
            .chain([c]);
        BetaSet::from_members(lo, members)
    }

    /// The beads on runner `i` of an `e`-abacus, relabelled `me + i ↦ m`.
    pub fn runner(&self, i: usize, e: usize) -> BetaSet {
        let (e, i) = (e as i64, i as i64);
        let below = (self.floor - i).div_euclid(e) + i64::from((self.floor - i).rem_euclid(e) != 0);
        let extras = self
            .window
            .iter()
            .filter(|&&z| z.rem_euclid(e) == i)
            .map(|&z| (z - i) / e);
        BetaSet::from_members(below, extras)
    }

    /// Reassembles an `e`-abacus from its runners, the inverse of [`BetaSet::runner`].
    pub fn from_runners(runners: &[BetaSet]) -> BetaSet {
        let e = runners.len() as i64;
        let below = runners
            .iter()
            .zip(0..)
            .map(|(b, i)| b.floor * e + i)
            .min()
            .expect("at least one runner");
        let mut extras = Vec::new();
        for (b, i) in runners.iter().zip(0..) {
            let start = (below - i).div_euclid(e) + i64::from((below - i).rem_euclid(e) != 0);
            extras.extend((start..b.floor).map(|m| m * e + i));
            extras.extend(b.window.iter().map(|&m| m * e + i));
        }
        BetaSet::from_members(below, extras)
    }
}

/// Lists the window and two packed members, e.g. `{6,4,1,-1,-2,…}`.
impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for z in &self.window {
            write!(f, "{z},")?;
        }
        write!(f, "{},{},…}}", self.floor - 1, self.floor - 2)
    }
}
