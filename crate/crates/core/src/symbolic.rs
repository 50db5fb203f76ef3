//! Addresses over fundamental-domain labels.
//!
//! Only eventually periodic addresses are representable. They are kept in a
//! canonical form (primitive period, shortest preperiod) so that equality of
//! values is equality of sequences.
//!
//! Text syntax: `"0"` is the constant address `0 0 0 …`, `"3:0,1"` is the
//! address with preperiod `[3]` followed by the repeated word `[0, 1]`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::map::DomainLabel;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AddressError {
    #[error("address is empty")]
    Empty,
    #[error("malformed address {input:?}: {reason}")]
    Malformed { input: String, reason: String },
}

/// A finite word of labels, length ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteAddress {
    entries: Vec<i64>,
}

impl FiniteAddress {
    pub fn new(entries: Vec<i64>) -> Result<Self, AddressError> {
        if entries.is_empty() {
            return Err(AddressError::Empty);
        }
        Ok(FiniteAddress { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> DomainLabel {
        DomainLabel(self.entries[i])
    }

    pub fn last(&self) -> DomainLabel {
        DomainLabel(*self.entries.last().expect("nonempty"))
    }

    /// Drop the first `k` entries; `None` if nothing would remain.
    pub fn drop_front(&self, k: usize) -> Option<FiniteAddress> {
        (k < self.entries.len()).then(|| FiniteAddress {
            entries: self.entries[k..].to_vec(),
        })
    }
}

impl fmt::Display for FiniteAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.entries)
    }
}

/// An eventually periodic sequence `preperiod · period · period · …`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InfiniteAddress {
    preperiod: Vec<i64>,
    period: Vec<i64>,
}

impl InfiniteAddress {
    pub fn new(preperiod: Vec<i64>, period: Vec<i64>) -> Result<Self, AddressError> {
        if period.is_empty() {
            return Err(AddressError::Malformed {
                input: format!("{preperiod:?}:{period:?}"),
                reason: "period must be nonempty".into(),
            });
        }
        Ok(canonical(preperiod, period))
    }

    /// The purely periodic address repeating `word`.
    pub fn periodic(word: Vec<i64>) -> Result<Self, AddressError> {
        Self::new(Vec::new(), word)
    }

    pub fn constant(k: i64) -> Self {
        InfiniteAddress {
            preperiod: Vec::new(),
            period: vec![k],
        }
    }

    pub fn preperiod(&self) -> &[i64] {
        &self.preperiod
    }

    pub fn period_word(&self) -> &[i64] {
        &self.period
    }

    pub fn raw_entry(&self, i: usize) -> i64 {
        if i < self.preperiod.len() {
            self.preperiod[i]
        } else {
            self.period[(i - self.preperiod.len()) % self.period.len()]
        }
    }

    pub fn entry(&self, i: usize) -> DomainLabel {
        DomainLabel(self.raw_entry(i))
    }

    pub fn is_periodic(&self) -> bool {
        self.preperiod.is_empty()
    }

    /// Minimal `p` with `σ^p s = s`, or 0 when no shift fixes `s`.
    pub fn period(&self) -> usize {
        if self.preperiod.is_empty() {
            self.period.len()
        } else {
            0
        }
    }

    pub fn shift(&self) -> InfiniteAddress {
        if self.preperiod.is_empty() {
            let mut period = self.period.clone();
            period.rotate_left(1);
            InfiniteAddress {
                preperiod: Vec::new(),
                period,
            }
        } else {
            canonical(self.preperiod[1..].to_vec(), self.period.clone())
        }
    }

    pub fn shift_by(&self, k: usize) -> InfiniteAddress {
        if self.preperiod.is_empty() {
            let mut period = self.period.clone();
            let len = period.len();
            period.rotate_left(k % len);
            return InfiniteAddress {
                preperiod: Vec::new(),
                period,
            };
        }
        let mut s = self.clone();
        for _ in 0..k {
            s = s.shift();
        }
        s
    }

    /// First `ℓ_n = m(n-1)+1` entries.
    pub fn project(&self, n: usize, m: usize) -> FiniteAddress {
        assert!(n >= 1 && m >= 1, "project requires n >= 1 and m >= 1");
        self.prefix(m * (n - 1) + 1)
    }

    pub fn prefix(&self, len: usize) -> FiniteAddress {
        assert!(len >= 1);
        FiniteAddress {
            entries: (0..len).map(|i| self.raw_entry(i)).collect(),
        }
    }

    /// Largest absolute entry.
    pub fn max_abs_entry(&self) -> i64 {
        self.preperiod
            .iter()
            .chain(&self.period)
            .map(|k| k.abs())
            .max()
            .unwrap_or(0)
    }
}

fn canonical(mut preperiod: Vec<i64>, period: Vec<i64>) -> InfiniteAddress {
    let mut period = primitive_root(&period).to_vec();
    while let (Some(&a), Some(&b)) = (preperiod.last(), period.last()) {
        if a != b {
            break;
        }
        preperiod.pop();
        period.rotate_right(1);
    }
    InfiniteAddress { preperiod, period }
}

fn primitive_root(word: &[i64]) -> &[i64] {
    let n = word.len();
    for d in 1..n {
        if n.is_multiple_of(d) && (d..n).all(|i| word[i] == word[i - d]) {
            return &word[..d];
        }
    }
    word
}

/// All purely periodic addresses whose period divides `p` and whose entries
/// lie in `[-window, window]`, one per word of length `p`, in lexicographic
/// word order. There are exactly `(2·window+1)^p` of them.
pub fn enumerate_periodic(window: u32, p: usize) -> Vec<InfiniteAddress> {
    assert!(p >= 1, "period must be positive");
    let k = window as i64;
    let base = (2 * k + 1) as usize;
    let total = base.pow(p as u32);
    let mut out = Vec::with_capacity(total);
    let mut word = vec![-k; p];
    for _ in 0..total {
        out.push(canonical(Vec::new(), word.clone()));
        // odometer increment, last position fastest
        for pos in (0..p).rev() {
            if word[pos] < k {
                word[pos] += 1;
                break;
            }
            word[pos] = -k;
        }
    }
    out
}

/// Periodic addresses in the window whose exact period `q` satisfies
/// `m | q` and `q <= period_cap`, deduplicated and sorted.
pub fn periodic_addresses_for_cycle(window: u32, m: usize, period_cap: usize) -> Vec<InfiniteAddress> {
    let mut out: Vec<InfiniteAddress> = (1..=period_cap)
        .filter(|q| q % m == 0)
        .flat_map(|q| {
            enumerate_periodic(window, q)
                .into_iter()
                .filter(move |s| s.period() == q)
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

fn write_word(f: &mut fmt::Formatter<'_>, word: &[i64]) -> fmt::Result {
    for (i, k) in word.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{k}")?;
    }
    Ok(())
}

impl fmt::Display for InfiniteAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.preperiod.is_empty() {
            write_word(f, &self.preperiod)?;
            f.write_str(":")?;
        }
        write_word(f, &self.period)
    }
}

fn parse_word(input: &str, part: &str) -> Result<Vec<i64>, AddressError> {
    part.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>().map_err(|_| AddressError::Malformed {
                input: input.to_string(),
                reason: if tok.is_empty() {
                    "empty entry".to_string()
                } else {
                    format!("{tok:?} is not an integer label")
                },
            })
        })
        .collect()
}

impl FromStr for InfiniteAddress {
    type Err = AddressError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(AddressError::Empty);
        }
        let mut parts = s.split(':');
        let first = parts.next().unwrap_or_default();
        let second = parts.next();
        if parts.next().is_some() {
            return Err(AddressError::Malformed {
                input: s.to_string(),
                reason: "more than one ':'".into(),
            });
        }
        match second {
            None => InfiniteAddress::new(Vec::new(), parse_word(s, first)?),
            Some(period) => InfiniteAddress::new(parse_word(s, first)?, parse_word(s, period)?),
        }
    }
}

impl FromStr for FiniteAddress {
    type Err = AddressError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(AddressError::Empty);
        }
        FiniteAddress::new(parse_word(s, s)?)
    }
}

impl Serialize for InfiniteAddress {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Serialize for FiniteAddress {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> InfiniteAddress {
        s.parse().unwrap()
    }

    #[test]
    fn shift_examples() {
        assert_eq!(a("0").shift(), a("0"));
        assert_eq!(a("1:0").shift(), a("0"));
        assert_eq!(a("0,1").shift(), a("1,0"));
        assert_eq!(a("1:0").shift().period(), 1);
    }

    #[test]
    fn project_examples() {
        assert_eq!(a("0").project(1, 1).entries(), &[0]);
        assert_eq!(a("0").project(3, 2).entries(), &[0, 0, 0, 0, 0]);
        assert_eq!(a("2,1").project(2, 2).entries(), &[2, 1, 2]);
    }

    #[test]
    fn period_examples() {
        assert_eq!(a("0").period(), 1);
        assert_eq!(a("0,1").period(), 2);
        assert_eq!(a("3:0").period(), 0);
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_periodic(0, 2), vec![a("0")]);
        assert_eq!(enumerate_periodic(1, 1), vec![a("-1"), a("0"), a("1")]);
        let two = enumerate_periodic(1, 2);
        assert_eq!(two.len(), 9);
        assert_eq!(two.iter().filter(|s| s.period() == 1).count(), 3);
        assert_eq!(two.iter().filter(|s| s.period() == 2).count(), 6);
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(a("0,0,0"), a("0"));
        assert_eq!(a("1,0,1,0"), a("1,0"));
        assert_eq!(a("0:0"), a("0"));
        assert_eq!(a("1,0:1,0"), a("1,0"));
        assert_eq!(a("5,1:0,1"), a("5:1,0"));
        assert_eq!(a("5,1:0,1").to_string(), "5:1,0");
        assert_eq!(a("-3,2:7").to_string(), "-3,2:7");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("0,,1".parse::<InfiniteAddress>(), Err(AddressError::Malformed { .. })));
        assert!(matches!("".parse::<InfiniteAddress>(), Err(AddressError::Empty)));
        assert!("1:2:3".parse::<InfiniteAddress>().is_err());
        assert!("x".parse::<InfiniteAddress>().is_err());
        assert!(":1".parse::<InfiniteAddress>().is_err());
        assert!("1:".parse::<InfiniteAddress>().is_err());
    }

    #[test]
    fn cycle_address_set() {
        let all = periodic_addresses_for_cycle(1, 1, 3);
        assert_eq!(all.len(), 3 + 6 + 24);
        let twos = periodic_addresses_for_cycle(1, 2, 4);
        assert!(twos.iter().all(|s| s.period() % 2 == 0));
        assert_eq!(twos.len(), 6 + (81 - 9));
    }
}
