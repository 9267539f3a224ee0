//! Bipartitions `γ|γ̄` of `n` parties, identified with their complements.
//!
//! The canonical representative of each unordered split is the side that
//! contains party 0, so the `n`-party set has `2^(n-1) - 1` of them.

use std::fmt;

use crate::{Error, Result};

/// Upper bound on the party count accepted by enumeration.
pub const MAX_PARTIES: usize = 16;

/// A nonempty proper subset of parties, stored in canonical form (contains
/// party 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    n: usize,
    mask: u32,
}

impl Bipartition {
    /// Builds the bipartition with `members` on one side; the complement is
    /// taken if `members` does not contain party 0.
    pub fn new(n: usize, members: &[usize]) -> Result<Self> {
        check_party_count(n)?;
        let mut mask = 0u32;
        for &k in members {
            if k >= n {
                return Err(Error::InvalidBipartition(format!(
                    "party {k} out of range for {n} parties"
                )));
            }
            mask |= 1 << k;
        }
        Self::from_mask(n, mask)
    }

    /// Bit `k` of `mask` set means party `k` is on the first side.
    pub fn from_mask(n: usize, mask: u32) -> Result<Self> {
        check_party_count(n)?;
        let full = full_mask(n);
        if mask & !full != 0 {
            return Err(Error::InvalidBipartition(format!(
                "mask {mask:#b} has bits beyond {n} parties"
            )));
        }
        if mask == 0 || mask == full {
            return Err(Error::InvalidBipartition("both sides must be nonempty".into()));
        }
        let mask = if mask & 1 == 1 { mask } else { full & !mask };
        Ok(Self { n, mask })
    }

    pub fn parties(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn contains(&self, party: usize) -> bool {
        party < self.n && self.mask & (1 << party) != 0
    }

    /// Parties on the canonical side, ascending.
    pub fn members(&self) -> Vec<usize> {
        (0..self.n).filter(|&k| self.contains(k)).collect()
    }

    /// Parties on the other side, ascending.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.n).filter(|&k| !self.contains(k)).collect()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |parties: Vec<usize>| parties.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{{{}}}|{{{}}}", side(self.members()), side(self.complement()))
    }
}

/// All canonical bipartitions of `n` parties, ascending by bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartitionSet {
    n: usize,
    items: Vec<Bipartition>,
}

impl BipartitionSet {
    pub fn parties(&self) -> usize {
        self.n
    }

    pub fn items(&self) -> &[Bipartition] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Bipartition> {
        self.items.iter()
    }
}

impl<'a> IntoIterator for &'a BipartitionSet {
    type Item = &'a Bipartition;
    type IntoIter = std::slice::Iter<'a, Bipartition>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}

pub fn enumerate(n: usize) -> Result<BipartitionSet> {
    check_party_count(n)?;
    let full = full_mask(n);
    let items = (1..full).step_by(2).map(|mask| Bipartition { n, mask }).collect();
    Ok(BipartitionSet { n, items })
}

/// Number of bipartitions modulo complement, summed over cut sizes:
/// `Σ_{m<n/2} C(n,m)`, plus `C(n,n/2)/2` when `n` is even.
pub fn count(n: usize) -> Result<usize> {
    check_party_count(n)?;
    let below_half: usize = (1..=(n - 1) / 2).map(|m| binomial(n, m)).sum();
    if n.is_multiple_of(2) {
        Ok(below_half + binomial(n, n / 2) / 2)
    } else {
        Ok(below_half)
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn full_mask(n: usize) -> u32 {
    ((1u64 << n) - 1) as u32
}

fn check_party_count(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidBipartition(format!(
            "at least 2 parties are required, got {n}"
        )));
    }
    if n > MAX_PARTIES {
        return Err(Error::InvalidBipartition(format!(
            "at most {MAX_PARTIES} parties are supported, got {n}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_enumerations() {
        let two = enumerate(2).unwrap();
        assert_eq!(two.items(), &[Bipartition::new(2, &[0]).unwrap()]);

        let three: Vec<Vec<usize>> = enumerate(3).unwrap().iter().map(|b| b.members()).collect();
        assert_eq!(three, vec![vec![0], vec![0, 1], vec![0, 2]]);

        assert_eq!(enumerate(4).unwrap().len(), 7);
    }

    #[test]
    fn counts_follow_binomial_sums() {
        assert_eq!(count(2).unwrap(), 1);
        assert_eq!(count(3).unwrap(), 3);
        assert_eq!(count(4).unwrap(), 7);
        assert_eq!(count(5).unwrap(), 15);
        assert_eq!(count(6).unwrap(), 31);
    }

    #[test]
    fn too_few_or_too_many_parties() {
        assert!(enumerate(1).is_err());
        assert!(count(0).is_err());
        assert!(enumerate(17).is_err());
        assert_eq!(enumerate(16).unwrap().len(), (1 << 15) - 1);
    }

    #[test]
    fn canonical_form_takes_complement() {
        let b = Bipartition::new(3, &[2]).unwrap();
        assert_eq!(b.members(), vec![0, 1]);
        assert_eq!(b.complement(), vec![2]);
        assert_eq!(b, Bipartition::new(3, &[0, 1]).unwrap());
        assert_eq!(b.to_string(), "{0,1}|{2}");
    }

    #[test]
    fn rejects_trivial_sides() {
        assert!(Bipartition::new(3, &[]).is_err());
        assert!(Bipartition::new(3, &[0, 1, 2]).is_err());
        assert!(Bipartition::new(3, &[3]).is_err());
        assert!(Bipartition::from_mask(3, 0b1000).is_err());
    }
}
