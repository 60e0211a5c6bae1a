//! The barred alphabet and primary-coloured integers.
//!
//! Letters are stored by rank in the total order 1 < 2 < … < m; the bar
//! involution sends rank r to m+1−r. For the crystal alphabet m = 2n and
//! the ranks n+1, …, 2n print as n̄, …, 1̄. Odd m is also allowed (the
//! odd-modulus experiments use it); its middle letter is fixed by the bar.
//!
//! A primary-coloured integer k_{c_u} is a size k with a letter u. The
//! order k_{c_u} ≥ l_{c_v} ⟺ k − l ≥ χ(u < v) coincides with the
//! lexicographic order on (size, rank), which is how it is implemented.
//! `succ` moves one step up in that order; m steps add one to the size.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A letter of the alphabet, stored as its rank in 1..=m.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Letter(u32);

impl Letter {
    pub fn rank(self) -> u32 {
        self.0
    }
}

/// The totally ordered alphabet {1 < … < m} with x̄ = m+1−x.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Alphabet {
    m: u32,
}

impl Alphabet {
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::Domain("alphabet must have at least one letter".into()));
        }
        Ok(Alphabet { m })
    }

    /// The alphabet 1 < … < n < n̄ < … < 1̄ attached to the rank-n crystal.
    pub fn for_crystal(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("crystal rank must be at least 2, got {n}")));
        }
        Alphabet::new(2 * n)
    }

    pub fn m(self) -> u32 {
        self.m
    }

    /// Rank of the half-way point: letters with rank above `m − rank` are barred.
    pub fn letter(self, rank: u32) -> Letter {
        assert!(rank >= 1 && rank <= self.m, "letter rank {rank} out of 1..={}", self.m);
        Letter(rank)
    }

    /// The plain letter j (rank j).
    pub fn unbarred(self, j: u32) -> Letter {
        self.letter(j)
    }

    /// The barred letter j̄ (rank m+1−j).
    pub fn barred(self, j: u32) -> Letter {
        self.bar(self.letter(j))
    }

    pub fn letters(self) -> impl Iterator<Item = Letter> {
        (1..=self.m).map(Letter)
    }

    /// The involution x ↦ x̄; `bar(bar(x)) = x`.
    pub fn bar(self, x: Letter) -> Letter {
        debug_assert!(x.0 >= 1 && x.0 <= self.m);
        Letter(self.m + 1 - x.0)
    }

    pub fn is_barred(self, x: Letter) -> bool {
        2 * x.0 > self.m + 1
    }

    pub fn display_letter(self, x: Letter) -> String {
        if self.is_barred(x) {
            // combining macron renders rank m+1-r as r̄
            format!("{}\u{304}", self.bar(x).0)
        } else {
            format!("{}", x.0)
        }
    }

    /// Smallest primary-coloured integer strictly greater than `a`.
    pub fn succ(self, a: PrimaryInt) -> PrimaryInt {
        if a.letter.0 < self.m {
            PrimaryInt { size: a.size, letter: Letter(a.letter.0 + 1) }
        } else {
            PrimaryInt { size: a.size + 1, letter: Letter(1) }
        }
    }

    /// Largest primary-coloured integer strictly smaller than `a`; inverse of `succ`.
    pub fn succ_inv(self, a: PrimaryInt) -> PrimaryInt {
        if a.letter.0 > 1 {
            PrimaryInt { size: a.size, letter: Letter(a.letter.0 - 1) }
        } else {
            PrimaryInt { size: a.size - 1, letter: Letter(self.m) }
        }
    }

    /// `succ` iterated `e` times; negative `e` iterates the inverse.
    pub fn succ_pow(self, a: PrimaryInt, e: i64) -> PrimaryInt {
        let m = i64::from(self.m);
        let pos = a.size * m + i64::from(a.letter.0) - 1 + e;
        let size = pos.div_euclid(m);
        let rank = pos.rem_euclid(m) + 1;
        PrimaryInt { size, letter: Letter(rank as u32) }
    }

    /// Number of `succ` steps from `low` up to `high` (negative if `high < low`).
    pub fn succ_gap(self, low: PrimaryInt, high: PrimaryInt) -> i64 {
        let m = i64::from(self.m);
        (high.size - low.size) * m + i64::from(high.letter.0) - i64::from(low.letter.0)
    }
}

/// A primary-coloured integer k_{c_u}.
///
/// The derived lexicographic order on (size, rank) realises
/// k_{c_u} ≥ l_{c_v} ⟺ k − l ≥ χ(u < v) and its strict companion
/// k_{c_u} > l_{c_v} ⟺ k − l ≥ χ(u ≤ v).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct PrimaryInt {
    pub size: i64,
    pub letter: Letter,
}

impl PrimaryInt {
    pub fn new(size: i64, letter: Letter) -> Self {
        PrimaryInt { size, letter }
    }

    pub fn display(self, ab: Alphabet) -> String {
        format!("{}_c{}", self.size, ab.display_letter(self.letter))
    }
}

/// k_{c_u} ≥ l_{c_v} in the primary order.
pub fn primary_ge(a: PrimaryInt, b: PrimaryInt) -> bool {
    a >= b
}

/// k_{c_u} > l_{c_v} in the primary order.
pub fn primary_gt(a: PrimaryInt, b: PrimaryInt) -> bool {
    a > b
}
