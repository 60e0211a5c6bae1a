//! Colours and coloured integers.
//!
//! Primary colours c_u are indexed by letters; secondary colours
//! c_{x,y} = c_x c_y are unordered products of two primary colours and are
//! stored with x ≤ y. The empty colour c_∅ is the colour of the empty
//! crystal vertex; c_∞ is a sentinel used only as the virtual final part
//! of certain partitions and never carries an exponent vector.
//!
//! Exponent vectors live in Z^n with c_j ↦ +e_j and c_j̄ ↦ −e_j, so
//! c_{x,x̄} has the zero vector (c_x̄ = c_x⁻¹) and c_∅ ↦ 0.

use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, Letter, PrimaryInt};

/// A colour: c_∅, primary c_u, secondary c_{x,y}, or the sentinel c_∞.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Colour {
    Empty,
    Primary(Letter),
    Secondary(Letter, Letter),
    Infinity,
}

impl Colour {
    /// Normalised secondary colour: the pair is stored sorted.
    pub fn secondary(x: Letter, y: Letter) -> Colour {
        if x <= y {
            Colour::Secondary(x, y)
        } else {
            Colour::Secondary(y, x)
        }
    }

    pub fn is_secondary(&self) -> bool {
        matches!(self, Colour::Secondary(_, _))
    }

    /// Letters (x, y) of a secondary colour; panics otherwise.
    pub fn secondary_letters(&self) -> (Letter, Letter) {
        match self {
            Colour::Secondary(x, y) => (*x, *y),
            other => panic!("expected a secondary colour, got {other:?}"),
        }
    }

    pub fn display(&self, ab: Alphabet) -> String {
        match self {
            Colour::Empty => "c∅".into(),
            Colour::Primary(u) => format!("c{}", ab.display_letter(*u)),
            Colour::Secondary(x, y) => {
                format!("c{},{}", ab.display_letter(*x), ab.display_letter(*y))
            }
            Colour::Infinity => "c∞".into(),
        }
    }
}

/// Exponent vector of a colour monomial in the basis e_1, …, e_n.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct ColourMonomial(pub Vec<i32>);

impl ColourMonomial {
    pub fn zero(n: usize) -> Self {
        ColourMonomial(vec![0; n])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add_assign(&mut self, other: &ColourMonomial) {
        assert_eq!(self.0.len(), other.0.len(), "mismatched monomial widths");
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b;
        }
    }

    pub fn sum(mut self, other: &ColourMonomial) -> Self {
        self.add_assign(other);
        self
    }
}

/// Exponent vector of the primary colour of one letter: +e_j for j, −e_j for j̄.
pub fn letter_monomial(n: u32, letter: Letter) -> ColourMonomial {
    let mut v = vec![0i32; n as usize];
    let r = letter.rank();
    assert!(r >= 1 && r <= 2 * n, "letter rank {r} outside the crystal alphabet of rank {n}");
    if r <= n {
        v[(r - 1) as usize] += 1;
    } else {
        v[(2 * n - r) as usize] -= 1;
    }
    ColourMonomial(v)
}

/// Exponent vector of a colour; c_∞ is rejected (it never enters a series).
pub fn colour_monomial(n: u32, colour: &Colour) -> ColourMonomial {
    match colour {
        Colour::Empty => ColourMonomial::zero(n as usize),
        Colour::Primary(u) => letter_monomial(n, *u),
        Colour::Secondary(x, y) => letter_monomial(n, *x).sum(&letter_monomial(n, *y)),
        Colour::Infinity => panic!("c_infinity has no colour monomial"),
    }
}

/// An integer with a colour, the building block of every partition model.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct ColouredInt {
    pub size: i64,
    pub colour: Colour,
}

impl ColouredInt {
    pub fn new(size: i64, colour: Colour) -> Self {
        ColouredInt { size, colour }
    }

    pub fn display(&self, ab: Alphabet) -> String {
        format!("{}_{{{}}}", self.size, self.colour.display(ab))
    }
}

/// A secondary-coloured integer k_{c_{x,y}} with x ≤ y, kept strongly typed
/// where a model only ever handles secondary colours.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SecondaryInt {
    pub size: i64,
    pub x: Letter,
    pub y: Letter,
}

impl SecondaryInt {
    pub fn new(size: i64, x: Letter, y: Letter) -> Self {
        let (x, y) = if x <= y { (x, y) } else { (y, x) };
        SecondaryInt { size, x, y }
    }

    pub fn colour(&self) -> Colour {
        Colour::Secondary(self.x, self.y)
    }

    pub fn as_coloured(&self) -> ColouredInt {
        ColouredInt::new(self.size, self.colour())
    }

    pub fn monomial(&self, n: u32) -> ColourMonomial {
        letter_monomial(n, self.x).sum(&letter_monomial(n, self.y))
    }

    pub fn display(&self, ab: Alphabet) -> String {
        self.as_coloured().display(ab)
    }
}

/// Primary view of a coloured integer, when its colour is primary.
pub fn as_primary(c: &ColouredInt) -> PrimaryInt {
    match c.colour {
        Colour::Primary(u) => PrimaryInt::new(c.size, u),
        other => panic!("expected a primary colour, got {other:?}"),
    }
}
