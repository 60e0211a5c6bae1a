//! Grounded partitions and the ρ-difference model.
//!
//! A grounded partition with ground index i is a finite sequence
//! (π_0, …, π_s) of crystal-coloured integers ending in the fixed part
//! π_s = 0_{c_{b_i}} (with π_{s−1} ≠ 0_{c_{b_i}} when s > 0) whose
//! adjacent sizes satisfy |π_j| − |π_{j+1}| = H(b_{j+1} ⊗ b_j) for the
//! exact relation ⋗, or ≥ for the relation ≫. Summing C(π) q^{|π|} over
//! the exact model gives e^{-Λ_i} ch L(Λ_i); the ≫ model gives the same
//! divided by (q;q)_∞.
//!
//! The ρ-model replaces the energy by the single closed formula
//! ρ(c_{x',y'}, c_{x,y}) = χ(x ≥ x') + χ(y ≥ y') − χ(y ≥ y' > x ≥ x')
//! on secondary colours, with the boundary against a virtual final part
//! 0_{c_∞} given by ρ_i(c_b, c_∞) = H(b_i ⊗ b) (and 1 on c_{b_i} itself).
//! Its generating function equals the exact model's.
//!
//! Enumeration is depth-first from the ground outward: the rightmost part
//! first, extending leftward over candidate (size, colour) pairs, pruned
//! by the remaining size budget. Difference conditions are local to
//! adjacent pairs, so the two-part window makes the search complete.

use num_bigint::BigInt;

use crate::alphabet::Alphabet;
use crate::colour::{Colour, ColouredInt, SecondaryInt};
use crate::crystal::{Crystal, Vertex};
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// Adjacency discipline of a grounded partition.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Relation {
    /// |π_j| − |π_{j+1}| equals the energy exactly (relation ⋗).
    Exact,
    /// |π_j| − |π_{j+1}| is at least the energy (relation ≫).
    AtLeast,
}

/// The minimal difference ρ between a larger part coloured `left` and the
/// smaller part coloured `right` immediately below it. Both colours must
/// be secondary; the primed pair of the defining formula is `left`.
pub fn rho(left: &Colour, right: &Colour) -> u8 {
    let (xp, yp) = left.secondary_letters();
    let (x, y) = right.secondary_letters();
    let chi = |b: bool| i64::from(b);
    let v = chi(x >= xp) + chi(y >= yp) - chi(y >= yp && yp > x && x >= xp);
    debug_assert!((0..=2).contains(&v));
    v as u8
}

/// Boundary value ρ_i(c, c_∞): the minimal size of the last real part of a
/// ρ-model partition with ground index i.
pub fn rho_boundary(crystal: &Crystal, i: u32, colour: &Colour) -> u8 {
    let g = crystal.ground(i);
    if *colour == crystal.colour_of(g) {
        1
    } else {
        crystal.min_diff(crystal.vertex_of_colour(colour), g)
    }
}

/// A grounded partition: real parts followed by the ground part, largest
/// part first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroundedPartition {
    parts: Vec<ColouredInt>,
    n: u32,
    ground: u32,
}

impl GroundedPartition {
    /// Builds and validates against the given relation.
    pub fn new(parts: Vec<ColouredInt>, n: u32, ground: u32, relation: Relation) -> Result<Self> {
        let p = GroundedPartition { parts, n, ground };
        p.validate(relation)?;
        Ok(p)
    }

    pub fn validate(&self, relation: Relation) -> Result<()> {
        let crystal = Crystal::new(self.n)?;
        if self.ground > self.n {
            return Err(Error::Domain(format!("ground index {} out of range", self.ground)));
        }
        let ground_part = ColouredInt::new(0, crystal.colour_of(crystal.ground(self.ground)));
        let s = self.parts.len();
        if s == 0 || self.parts[s - 1] != ground_part {
            return Err(Error::InvalidPartition("final part must be the ground part".into()));
        }
        if s > 1 && self.parts[s - 2] == ground_part {
            return Err(Error::InvalidPartition(
                "the part before the ground may not repeat the ground part".into(),
            ));
        }
        for w in self.parts.windows(2) {
            let (upper, lower) = (&w[0], &w[1]);
            let d = crystal.min_diff(
                crystal.vertex_of_colour(&upper.colour),
                crystal.vertex_of_colour(&lower.colour),
            );
            let gap = upper.size - lower.size;
            let ok = match relation {
                Relation::Exact => gap == i64::from(d),
                Relation::AtLeast => gap >= i64::from(d),
            };
            if !ok {
                return Err(Error::InvalidPartition(format!(
                    "difference {gap} violates the minimal difference {d}"
                )));
            }
        }
        Ok(())
    }

    /// All parts, ground included, largest first.
    pub fn parts(&self) -> &[ColouredInt] {
        &self.parts
    }

    /// The parts above the ground.
    pub fn real_parts(&self) -> &[ColouredInt] {
        &self.parts[..self.parts.len() - 1]
    }

    pub fn ground_index(&self) -> u32 {
        self.ground
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Total size |π|.
    pub fn size(&self) -> i64 {
        self.parts.iter().map(|p| p.size).sum()
    }

    /// Number of parts above the ground.
    pub fn len(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// C(π) as an exponent vector (the ground colour contributes nothing).
    pub fn monomial(&self) -> crate::colour::ColourMonomial {
        let mut m = crate::colour::ColourMonomial::zero(self.n as usize);
        for p in &self.parts {
            m.add_assign(&crate::colour::colour_monomial(self.n, &p.colour));
        }
        m
    }

    pub fn display(&self, ab: Alphabet) -> String {
        let body: Vec<String> = self.parts.iter().map(|p| p.display(ab)).collect();
        format!("({})", body.join(", "))
    }
}

/// A ρ-model partition: secondary-coloured real parts, largest first, with
/// the implicit final part 0_{c_{b_i}}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RhoPartition {
    parts: Vec<SecondaryInt>,
    n: u32,
    ground: u32,
}

impl RhoPartition {
    pub fn new(parts: Vec<SecondaryInt>, n: u32, ground: u32) -> Result<Self> {
        let p = RhoPartition { parts, n, ground };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let crystal = Crystal::new(self.n)?;
        if self.ground > self.n {
            return Err(Error::Domain(format!("ground index {} out of range", self.ground)));
        }
        for w in self.parts.windows(2) {
            let need = i64::from(rho(&w[0].colour(), &w[1].colour()));
            if w[0].size - w[1].size < need {
                return Err(Error::InvalidPartition(format!(
                    "difference {} violates rho = {need}",
                    w[0].size - w[1].size
                )));
            }
        }
        if let Some(last) = self.parts.last() {
            let need = i64::from(rho_boundary(&crystal, self.ground, &last.colour()));
            if last.size < need {
                return Err(Error::InvalidPartition(format!(
                    "final real part {} below the boundary {need}",
                    last.size
                )));
            }
        }
        Ok(())
    }

    pub fn parts(&self) -> &[SecondaryInt] {
        &self.parts
    }

    pub fn ground_index(&self) -> u32 {
        self.ground
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn size(&self) -> i64 {
        self.parts.iter().map(|p| p.size).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn monomial(&self) -> crate::colour::ColourMonomial {
        let mut m = crate::colour::ColourMonomial::zero(self.n as usize);
        for p in &self.parts {
            m.add_assign(&p.monomial(self.n));
        }
        m
    }

    pub fn display(&self, ab: Alphabet) -> String {
        let crystal = Crystal::new(self.n).unwrap();
        let mut body: Vec<String> = self.parts.iter().map(|p| p.display(ab)).collect();
        body.push(
            ColouredInt::new(0, crystal.colour_of(crystal.ground(self.ground))).display(ab),
        );
        format!("({})", body.join(", "))
    }
}

struct GroundedWalker<'a> {
    // mindiff[new][prev] = H(b_prev ⊗ b_new): the minimal difference when a
    // part coloured by vertex `new` is placed immediately above `prev`
    mindiff: Vec<Vec<u8>>,
    monos: Vec<Vec<i32>>,
    ground_idx: usize,
    relation: Relation,
    cap: u32,
    stack: Vec<(i64, usize)>,
    mono: Vec<i32>,
    total: u32,
    visit: &'a mut dyn FnMut(&[(i64, usize)], u32, &[i32]),
}

impl GroundedWalker<'_> {
    fn go(&mut self, prev_size: i64, prev_idx: usize) {
        (self.visit)(&self.stack, self.total, &self.mono);
        for new_idx in 0..self.mindiff.len() {
            let min_size = prev_size + i64::from(self.mindiff[new_idx][prev_idx]);
            let max_size = match self.relation {
                Relation::Exact => min_size,
                Relation::AtLeast => i64::from(self.cap - self.total),
            };
            let mut size = min_size;
            while size <= max_size && i64::from(self.total) + size <= i64::from(self.cap) {
                // the part next to the ground may not repeat the ground part
                if !(self.stack.is_empty() && size == 0 && new_idx == self.ground_idx) {
                    self.stack.push((size, new_idx));
                    self.total += size as u32;
                    for (a, b) in self.mono.iter_mut().zip(&self.monos[new_idx]) {
                        *a += b;
                    }
                    self.go(size, new_idx);
                    for (a, b) in self.mono.iter_mut().zip(&self.monos[new_idx]) {
                        *a -= b;
                    }
                    self.total -= size as u32;
                    self.stack.pop();
                }
                size += 1;
            }
        }
    }
}

/// Walks every grounded partition of total size ≤ `cap`; the callback
/// receives the real parts innermost-first as (size, vertex index into
/// `crystal.vertices()`), the total size, and the colour exponent vector.
pub fn walk_grounded(
    crystal: &Crystal,
    i: u32,
    relation: Relation,
    cap: u32,
    visit: &mut dyn FnMut(&[(i64, usize)], u32, &[i32]),
) {
    let vs = crystal.vertices();
    let ground_idx = vs.iter().position(|&b| b == crystal.ground(i)).expect("ground vertex");
    let mindiff: Vec<Vec<u8>> = vs
        .iter()
        .map(|&new| vs.iter().map(|&prev| crystal.min_diff(new, prev)).collect())
        .collect();
    let monos: Vec<Vec<i32>> = vs.iter().map(|&b| crystal.monomial_of(b).0).collect();
    let n = crystal.n() as usize;
    let mut walker = GroundedWalker {
        mindiff,
        monos,
        ground_idx,
        relation,
        cap,
        stack: Vec::new(),
        mono: vec![0; n],
        total: 0,
        visit,
    };
    walker.go(0, ground_idx);
}

/// Σ C(π) q^{|π|} over grounded partitions of size ≤ `cap`.
pub fn enumerate_grounded(crystal: &Crystal, i: u32, relation: Relation, cap: u32) -> TruncatedSeries {
    let mut series = TruncatedSeries::zero(crystal.n() as usize, cap);
    walk_grounded(crystal, i, relation, cap, &mut |_, total, mono| {
        series.add_term(total, crate::colour::ColourMonomial(mono.to_vec()), BigInt::from(1));
    });
    series
}

/// Materialising variant of [`walk_grounded`] for tests and round-trips.
pub fn visit_grounded(
    crystal: &Crystal,
    i: u32,
    relation: Relation,
    cap: u32,
    mut f: impl FnMut(GroundedPartition),
) {
    let vs = crystal.vertices();
    let ground_part = ColouredInt::new(0, crystal.colour_of(crystal.ground(i)));
    walk_grounded(crystal, i, relation, cap, &mut |stack, _, _| {
        let mut parts: Vec<ColouredInt> = stack
            .iter()
            .rev()
            .map(|&(size, idx)| ColouredInt::new(size, crystal.colour_of(vs[idx])))
            .collect();
        parts.push(ground_part);
        f(GroundedPartition { parts, n: crystal.n(), ground: i });
    });
}

struct RhoWalker<'a> {
    rho_tab: Vec<Vec<u8>>,
    boundary: Vec<u8>,
    monos: Vec<Vec<i32>>,
    cap: u32,
    stack: Vec<(i64, usize)>,
    mono: Vec<i32>,
    total: u32,
    visit: &'a mut dyn FnMut(&[(i64, usize)], u32, &[i32]),
}

impl RhoWalker<'_> {
    fn go(&mut self, prev: Option<(i64, usize)>) {
        (self.visit)(&self.stack, self.total, &self.mono);
        for new_idx in 0..self.rho_tab.len() {
            let min_size = match prev {
                None => i64::from(self.boundary[new_idx]),
                Some((ps, pi)) => ps + i64::from(self.rho_tab[new_idx][pi]),
            };
            let mut size = min_size;
            while i64::from(self.total) + size <= i64::from(self.cap) {
                self.stack.push((size, new_idx));
                self.total += size as u32;
                for (a, b) in self.mono.iter_mut().zip(&self.monos[new_idx]) {
                    *a += b;
                }
                self.go(Some((size, new_idx)));
                for (a, b) in self.mono.iter_mut().zip(&self.monos[new_idx]) {
                    *a -= b;
                }
                self.total -= size as u32;
                self.stack.pop();
                size += 1;
            }
        }
    }
}

/// All secondary colours of the rank-n crystal alphabet, in a fixed order.
pub fn secondary_colours(ab: Alphabet) -> Vec<(crate::alphabet::Letter, crate::alphabet::Letter)> {
    let mut out = Vec::new();
    for x in ab.letters() {
        for y in ab.letters().filter(|&y| y >= x) {
            out.push((x, y));
        }
    }
    out
}

/// Walks every ρ-model partition of total size ≤ `cap` (real parts
/// innermost-first as (size, index into `secondary_colours`)).
pub fn walk_rho(
    crystal: &Crystal,
    i: u32,
    cap: u32,
    visit: &mut dyn FnMut(&[(i64, usize)], u32, &[i32]),
) {
    let ab = crystal.alphabet();
    let cols = secondary_colours(ab);
    let colours: Vec<Colour> = cols.iter().map(|&(x, y)| Colour::Secondary(x, y)).collect();
    let rho_tab: Vec<Vec<u8>> = colours
        .iter()
        .map(|new| colours.iter().map(|prev| rho(new, prev)).collect())
        .collect();
    let boundary: Vec<u8> = colours.iter().map(|c| rho_boundary(crystal, i, c)).collect();
    let monos: Vec<Vec<i32>> =
        colours.iter().map(|c| crate::colour::colour_monomial(crystal.n(), c).0).collect();
    let mut walker = RhoWalker {
        rho_tab,
        boundary,
        monos,
        cap,
        stack: Vec::new(),
        mono: vec![0; crystal.n() as usize],
        total: 0,
        visit,
    };
    walker.go(None);
}

/// Σ C(π) q^{|π|} over the ρ-model, ground index i, size ≤ `cap`.
pub fn enumerate_rho(crystal: &Crystal, i: u32, cap: u32) -> TruncatedSeries {
    let mut series = TruncatedSeries::zero(crystal.n() as usize, cap);
    walk_rho(crystal, i, cap, &mut |_, total, mono| {
        series.add_term(total, crate::colour::ColourMonomial(mono.to_vec()), BigInt::from(1));
    });
    series
}

/// Materialising variant of [`walk_rho`].
pub fn visit_rho(crystal: &Crystal, i: u32, cap: u32, mut f: impl FnMut(RhoPartition)) {
    let cols = secondary_colours(crystal.alphabet());
    walk_rho(crystal, i, cap, &mut |stack, _, _| {
        let parts: Vec<SecondaryInt> = stack
            .iter()
            .rev()
            .map(|&(size, idx)| SecondaryInt::new(size, cols[idx].0, cols[idx].1))
            .collect();
        f(RhoPartition { parts, n: crystal.n(), ground: i });
    });
}

/// Walks every ≫_ρ chain (π_0, …, π_{s−1}, `last`) over the full set of
/// secondary-coloured integers, for an arbitrary fixed last part. The
/// callback receives the real parts innermost-first; the budget bounds the
/// sum of the positive real sizes. Used by the Frobenius and path models.
pub fn visit_rho_chain(
    ab: Alphabet,
    last: SecondaryInt,
    cap: u32,
    f: &mut dyn FnMut(&[SecondaryInt]),
) {
    let cols = secondary_colours(ab);
    let mut stack: Vec<SecondaryInt> = Vec::new();
    fn positive_total(stack: &[SecondaryInt]) -> i64 {
        stack.iter().map(|p| p.size.max(0)).sum()
    }
    fn go(
        cols: &[(crate::alphabet::Letter, crate::alphabet::Letter)],
        cap: u32,
        stack: &mut Vec<SecondaryInt>,
        prev: SecondaryInt,
        f: &mut dyn FnMut(&[SecondaryInt]),
    ) {
        f(stack);
        for &(x, y) in cols {
            let c = Colour::Secondary(x, y);
            let min_size = prev.size + i64::from(rho(&c, &prev.colour()));
            let mut size = min_size;
            while positive_total(stack) + size.max(0) <= i64::from(cap) {
                stack.push(SecondaryInt::new(size, x, y));
                go(cols, cap, stack, SecondaryInt::new(size, x, y), f);
                stack.pop();
                size += 1;
            }
        }
    }
    go(&cols, cap, &mut stack, last, f);
}
