//! Classification of the crystal colours and the ε/δ/γ data used by the
//! colour-deletion bijection.
//!
//! The colour set splits as C = C_sup ⊔ C_free ⊔ C_inf with
//!   C_free = {c_∅} ∪ {c_{x,x̄}},
//!   C_sup  = {c_{x,y} : ȳ < x ≤ y},
//!   C_inf  = {c_{x,y} : x ≤ y < x̄}.
//! δ sends a sup colour c_{x,y} to c_{ȳ,y} and an inf colour to c_{x,x̄};
//! γ picks the free colour whose insertion between a given pair is the
//! canonical forbidden one, with γ(c_{x,y}, c_{x',y'}) = c_{z,z̄},
//! z = max{x', ȳ}, on the sup × inf case.
//!
//! `check_well_defined` verifies the seven structural conditions that make
//! the deletion bijection work, exhaustively over the colour set, and
//! reports the first violation; it accepts injected δ/γ so defective data
//! can be used as a negative control in tests.

use crate::colour::Colour;
use crate::crystal::Crystal;

/// Which block of the decomposition a colour belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ColourClass {
    Sup,
    Free,
    Inf,
}

/// Block of a crystal colour (c_∅ or a secondary colour).
pub fn classify(crystal: &Crystal, c: &Colour) -> ColourClass {
    let ab = crystal.alphabet();
    match c {
        Colour::Empty => ColourClass::Free,
        Colour::Secondary(x, y) => {
            let yb = ab.bar(*y);
            if *x > yb {
                ColourClass::Sup
            } else if *x == yb {
                ColourClass::Free
            } else {
                ColourClass::Inf
            }
        }
        other => panic!("{other:?} cannot be classified"),
    }
}

/// δ on C_sup ⊔ C_inf.
pub fn delta(crystal: &Crystal, c: &Colour) -> Colour {
    let ab = crystal.alphabet();
    let (x, y) = c.secondary_letters();
    match classify(crystal, c) {
        ColourClass::Sup => Colour::secondary(ab.bar(y), y),
        ColourClass::Inf => Colour::secondary(x, ab.bar(x)),
        ColourClass::Free => panic!("delta is undefined on free colours"),
    }
}

/// γ on the sup × inf, sup², inf² pairs where an equal-or-one-apart
/// insertion exists.
pub fn gamma(crystal: &Crystal, c: &Colour, c2: &Colour) -> Colour {
    let ab = crystal.alphabet();
    match (classify(crystal, c), classify(crystal, c2)) {
        (ColourClass::Sup, ColourClass::Inf) => {
            let (_, y) = c.secondary_letters();
            let (xp, _) = c2.secondary_letters();
            let z = std::cmp::max(xp, ab.bar(y));
            Colour::secondary(z, ab.bar(z))
        }
        (ColourClass::Sup, ColourClass::Sup) => delta(crystal, c),
        (ColourClass::Inf, ColourClass::Inf) => delta(crystal, c2),
        (a, b) => panic!("gamma is undefined on ({a:?}, {b:?})"),
    }
}

/// ε_i(c, c'): the minimal difference of the ≫ model seen as a function on
/// C × (C ⊔ {c_∞}); on C² it is the energy-derived `min_diff`, against c_∞
/// it is H(b_i ⊗ b), except 1 on the ground colour itself.
pub fn epsilon(crystal: &Crystal, i: u32, c: &Colour, c2: &Colour) -> u8 {
    match c2 {
        Colour::Infinity => {
            if *c == crystal.colour_of(crystal.ground(i)) {
                1
            } else {
                crystal.min_diff(crystal.vertex_of_colour(c), crystal.ground(i))
            }
        }
        _ => crystal.min_diff(crystal.vertex_of_colour(c), crystal.vertex_of_colour(c2)),
    }
}

/// Outcome of the structural check: success or the first violated
/// condition (numbered 1–7) with a human-readable witness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WellDefinedReport {
    Ok,
    Violated { condition: u8, detail: String },
}

impl WellDefinedReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, WellDefinedReport::Ok)
    }
}

/// All crystal colours: c_∅ followed by the secondary colours.
pub fn colour_set(crystal: &Crystal) -> Vec<Colour> {
    crystal.vertices().iter().map(|&b| crystal.colour_of(b)).collect()
}

/// Exhaustively verifies the seven conditions on ε_i with the canonical
/// δ and γ.
pub fn check_well_defined(crystal: &Crystal, i: u32) -> WellDefinedReport {
    check_well_defined_with(
        crystal,
        i,
        &|c| delta(crystal, c),
        &|c, c2| gamma(crystal, c, c2),
    )
}

/// The same check with injected δ/γ (negative controls in tests).
pub fn check_well_defined_with(
    crystal: &Crystal,
    i: u32,
    delta_fn: &dyn Fn(&Colour) -> Colour,
    gamma_fn: &dyn Fn(&Colour, &Colour) -> Colour,
) -> WellDefinedReport {
    let colours = colour_set(crystal);
    let class = |c: &Colour| classify(crystal, c);
    let eps = |c: &Colour, c2: &Colour| epsilon(crystal, i, c, c2);
    let ab = crystal.alphabet();
    let show = |c: &Colour| c.display(ab);
    let fail = |condition: u8, detail: String| WellDefinedReport::Violated { condition, detail };

    use ColourClass::*;
    for c in &colours {
        for c2 in &colours {
            let e = eps(c, c2);
            match (class(c), class(c2)) {
                (Free, Free) => {
                    let want = u8::from(c != c2);
                    if e != want {
                        return fail(1, format!("eps({}, {}) = {e}, want {want}", show(c), show(c2)));
                    }
                }
                (Sup, Free) => {
                    if e > 1 || eps(c2, c) == 0 {
                        return fail(2, format!("range at ({}, {})", show(c), show(c2)));
                    }
                }
                (Free, Inf) => {
                    if e > 1 || eps(c2, c) == 0 {
                        return fail(3, format!("range at ({}, {})", show(c), show(c2)));
                    }
                }
                (Sup, Inf) => {
                    if e > 1 || eps(c2, c) == 0 {
                        return fail(4, format!("range at ({}, {})", show(c), show(c2)));
                    }
                    if e == 0 {
                        let g = gamma_fn(c, c2);
                        if class(&g) != Free || eps(c, &g) != 0 || eps(&g, c2) != 0 {
                            return fail(4, format!("gamma({}, {}) = {}", show(c), show(c2), show(&g)));
                        }
                    }
                }
                (Sup, Sup) => {
                    if e <= 1 {
                        let g = gamma_fn(c, c2);
                        if class(&g) != Free || eps(c, &g) != 0 || eps(&g, c2) != 1 {
                            return fail(5, format!("gamma({}, {}) = {}", show(c), show(c2), show(&g)));
                        }
                    }
                }
                (Inf, Inf) => {
                    if e <= 1 {
                        let g = gamma_fn(c, c2);
                        if class(&g) != Free || eps(c, &g) != 1 || eps(&g, c2) != 0 {
                            return fail(6, format!("gamma({}, {}) = {}", show(c), show(c2), show(&g)));
                        }
                    }
                }
                (Free, Sup) | (Inf, Free) | (Inf, Sup) => {
                    // ranges covered by the symmetric checks above
                }
            }
        }
        // existence of δ with the vanishing ε on the proper side
        match class(c) {
            Sup => {
                let d = delta_fn(c);
                if class(&d) != Free || eps(c, &d) != 0 {
                    return fail(2, format!("delta({}) = {}", show(c), show(&d)));
                }
            }
            Inf => {
                let d = delta_fn(c);
                if class(&d) != Free || eps(&d, c) != 0 {
                    return fail(3, format!("delta({}) = {}", show(c), show(&d)));
                }
            }
            Free => {}
        }
        // border conditions against c_∞
        let e_inf = eps(c, &Colour::Infinity);
        let ok = match class(c) {
            Free => e_inf == 1,
            Inf => (1..=2).contains(&e_inf),
            Sup => e_inf <= 1,
        };
        if !ok {
            return fail(7, format!("eps({}, c_inf) = {e_inf}", show(c)));
        }
    }
    // the deletion pivot c_∅ must keep distance one from everything else
    for c in &colours {
        if *c != Colour::Empty
            && (eps(c, &Colour::Empty) != 1 || eps(&Colour::Empty, c) != 1)
        {
            return fail(1, format!("c_emptyset not at distance 1 from {}", show(c)));
        }
    }
    WellDefinedReport::Ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grounded::{visit_grounded, Relation};

    #[test]
    fn classification_counts() {
        // |C_free| = n + 1, and sup/inf split the rest evenly
        for n in 2..=4u32 {
            let c = Crystal::new(n).unwrap();
            let colours = colour_set(&c);
            let free = colours.iter().filter(|c2| classify(&c, c2) == ColourClass::Free).count();
            let sup = colours.iter().filter(|c2| classify(&c, c2) == ColourClass::Sup).count();
            let inf = colours.iter().filter(|c2| classify(&c, c2) == ColourClass::Inf).count();
            assert_eq!(free, n as usize + 1);
            assert_eq!(sup, inf);
            assert_eq!(free + sup + inf, colours.len());
        }
    }

    #[test]
    fn well_defined_for_all_grounds() {
        for n in 2..=3u32 {
            let c = Crystal::new(n).unwrap();
            for i in 0..=n {
                assert_eq!(check_well_defined(&c, i), WellDefinedReport::Ok, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn mutated_delta_is_reported() {
        let c = Crystal::new(2).unwrap();
        let ab = c.alphabet();
        // swap the image of one sup colour to a wrong free colour
        let victim = Colour::secondary(ab.unbarred(2), ab.barred(1));
        let wrong = Colour::secondary(ab.unbarred(2), ab.barred(2));
        assert_ne!(delta(&c, &victim), wrong);
        let report = check_well_defined_with(
            &c,
            0,
            &|col| if col == &victim { wrong } else { delta(&c, col) },
            &|a, b| gamma(&c, a, b),
        );
        match report {
            WellDefinedReport::Violated { condition: 2, .. } => {}
            other => panic!("expected a condition-2 violation, got {other:?}"),
        }
    }

    /// Equal-size runs inside enumerated grounded partitions factor as sup
    /// colours, then one repeated free colour, then inf colours.
    #[test]
    fn equal_size_runs_have_the_sup_free_inf_shape() {
        let c = Crystal::new(2).unwrap();
        for i in 0..=2 {
            for rel in [Relation::Exact, Relation::AtLeast] {
                visit_grounded(&c, i, rel, 10, |p| {
                    let parts = p.parts();
                    let mut idx = 0;
                    while idx < parts.len() {
                        let mut end = idx;
                        while end < parts.len() && parts[end].size == parts[idx].size {
                            end += 1;
                        }
                        let run = &parts[idx..end];
                        // longest prefix of sup colours
                        let mut k = 0;
                        while k < run.len() && classify(&c, &run[k].colour) == ColourClass::Sup {
                            k += 1;
                        }
                        // one free colour, possibly repeated
                        let free_start = k;
                        while k < run.len()
                            && classify(&c, &run[k].colour) == ColourClass::Free
                            && run[k].colour == run[free_start].colour
                        {
                            k += 1;
                        }
                        // the rest must be inf colours
                        for part in &run[k..] {
                            assert_eq!(
                                classify(&c, &part.colour),
                                ColourClass::Inf,
                                "run shape broken in {:?}",
                                p
                            );
                        }
                        idx = end;
                    }
                });
            }
        }
    }
}
