//! Brute-force oracle: definition-level computations used to validate the
//! closed-form and formula-based code paths.
//!
//! Nothing in this module uses the Kunz inequality system, the special-gap
//! formulas, or the candidate-family machinery. Semigroups are materialized
//! as explicit element tables (additive-closure bitmaps over their
//! generators) and every question is answered straight from the definitions:
//!
//! * gaps are the missing entries of the table,
//! * `h` is a special gap iff `2h` and `h + a` (for every generator `a`)
//!   are elements,
//! * a coordinate vector is valid iff the least element of the closure in
//!   residue class `i` is exactly `m·x_i + i`,
//! * minimal decompositions come from exhaustive set cover over the
//!   semigroup's special gaps above the multiplicity.
//!
//! Everything here is exponential-ish and deliberately naive, so the entry
//! points enforce hard bounds ([`Error::BoundsExceeded`]) instead of
//! attempting large instances.

use crate::error::{Error, Result};
use crate::semigroup::KunzVector;

/// Largest multiplicity the oracle accepts.
pub const MAX_ORACLE_MULTIPLICITY: i64 = 6;

/// Largest coordinate-box volume (`∏ x_i`) the oracle scans. `32768 = 8^5`
/// keeps every definitional scan comfortably under a second.
pub const MAX_ORACLE_VOLUME: i64 = 32_768;

/// Most special gaps above the multiplicity a vector may have before the
/// exhaustive cover search is refused (masks are kept in a `u32`).
const MAX_COVER_UNIVERSE: usize = 24;

fn bounds_check(x: &KunzVector) -> Result<()> {
    if x.m() == 1 {
        return Err(Error::DegenerateMultiplicity(1));
    }
    if x.m() > MAX_ORACLE_MULTIPLICITY {
        return Err(Error::BoundsExceeded(format!(
            "oracle supports multiplicity <= {MAX_ORACLE_MULTIPLICITY}, got {}",
            x.m()
        )));
    }
    let volume: i64 = x.coords().iter().product();
    if volume > MAX_ORACLE_VOLUME {
        return Err(Error::BoundsExceeded(format!(
            "oracle supports coordinate boxes of volume <= {MAX_ORACLE_VOLUME}, got {volume}"
        )));
    }
    Ok(())
}

/// Additive closure of a set of positive generators, materialized as a
/// bitmap. The table is grown until it ends in `min(gens)` consecutive
/// elements, after which every larger integer is an element, so membership
/// queries beyond the table are answered `true`.
#[derive(Debug, Clone)]
pub struct ElementTable {
    present: Vec<bool>,
}

impl ElementTable {
    pub fn from_generators(gens: &[i64]) -> Self {
        debug_assert!(!gens.is_empty() && gens.iter().all(|&a| a >= 1));
        let m = *gens.iter().min().expect("nonempty") as usize;
        let max = *gens.iter().max().expect("nonempty") as usize;
        let mut bound = (2 * max + m).max(64);
        loop {
            let mut present = vec![false; bound + 1];
            present[0] = true;
            for n in 1..=bound {
                present[n] = gens
                    .iter()
                    .any(|&a| (a as usize) <= n && present[n - a as usize]);
            }
            // A run of m consecutive elements at the end makes every larger
            // integer an element (subtract m and induct).
            if present[bound + 1 - m..].iter().all(|&p| p) {
                return ElementTable { present };
            }
            bound *= 2;
        }
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        match usize::try_from(n) {
            Ok(i) if i < self.present.len() => self.present[i],
            _ => true, // beyond the stabilized tail
        }
    }

    /// All positive integers missing from the closure, ascending.
    pub fn gaps(&self) -> Vec<i64> {
        self.present
            .iter()
            .enumerate()
            .filter(|&(_, &p)| !p)
            .map(|(n, _)| n as i64)
            .collect()
    }
}

/// Gaps of the semigroup, computed from the additive closure of its
/// generators rather than from the classwise membership formula.
pub fn brute_gaps(x: &KunzVector) -> Result<Vec<i64>> {
    bounds_check(x)?;
    Ok(ElementTable::from_generators(&x.full_generators()).gaps())
}

/// Special gaps, straight from the definition: gaps `h` with `2h ∈ S` and
/// `h + s ∈ S` for every nonzero `s ∈ S` (checking the generators suffices,
/// since every nonzero element is a sum of generators).
pub fn brute_special_gaps(x: &KunzVector) -> Result<Vec<i64>> {
    bounds_check(x)?;
    let gens = x.full_generators();
    let table = ElementTable::from_generators(&gens);
    Ok(table
        .gaps()
        .into_iter()
        .filter(|&h| table.contains(2 * h) && gens.iter().all(|&a| table.contains(h + a)))
        .collect())
}

/// Special gaps strictly above the multiplicity — the universe the
/// decomposition machinery works over.
pub fn brute_special_gaps_over_multiplicity(x: &KunzVector) -> Result<Vec<i64>> {
    Ok(brute_special_gaps(x)?
        .into_iter()
        .filter(|&h| h > x.m())
        .collect())
}

/// Whether the semigroup cannot be written as an intersection of two
/// strictly larger semigroups of the same multiplicity — equivalently,
/// whether it has at most one special gap above the multiplicity.
pub fn brute_is_m_irreducible(x: &KunzVector) -> Result<bool> {
    Ok(brute_special_gaps_over_multiplicity(x)?.len() <= 1)
}

/// Definition-level validity check for a candidate coordinate vector:
/// build the additive closure of `{m} ∪ {m·c_i + i}` and test that the least
/// element in residue class `i` is exactly `m·c_i + i` for every class.
///
/// This deliberately avoids the inequality system that [`KunzVector::new`]
/// checks; the two must agree, and tests compare them.
pub fn is_semigroup_coords(m: i64, coords: &[i64]) -> Result<bool> {
    if m == 1 {
        return Err(Error::DegenerateMultiplicity(1));
    }
    if !(2..=MAX_ORACLE_MULTIPLICITY).contains(&m) {
        return Err(Error::BoundsExceeded(format!(
            "oracle supports multiplicity 2..={MAX_ORACLE_MULTIPLICITY}, got {m}"
        )));
    }
    if coords.len() as i64 != m - 1 {
        return Err(Error::CoordinateCount {
            m,
            expected: (m - 1) as usize,
            got: coords.len(),
        });
    }
    if coords.iter().any(|&c| c < 1) {
        return Ok(false);
    }
    let volume: i64 = coords.iter().product();
    if volume > MAX_ORACLE_VOLUME {
        return Err(Error::BoundsExceeded(format!(
            "oracle supports coordinate boxes of volume <= {MAX_ORACLE_VOLUME}, got {volume}"
        )));
    }
    let gens: Vec<i64> = std::iter::once(m)
        .chain(coords.iter().enumerate().map(|(idx, &c)| {
            let i = idx as i64 + 1;
            m * c + i
        }))
        .collect();
    let table = ElementTable::from_generators(&gens);
    for (idx, &c) in coords.iter().enumerate() {
        let i = idx as i64 + 1;
        let w = m * c + i;
        let mut n = i;
        while !table.contains(n) {
            n += m;
        }
        // The scan terminates at w at the latest: w is itself a generator.
        if n != w {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All semigroups containing this one that share its multiplicity, as
/// coordinate vectors: the valid vectors `y` with `1 <= y_i <= x_i`
/// componentwise, in ascending lexicographic order (the input itself is
/// included, last).
pub fn enumerate_oversemigroups(x: &KunzVector) -> Result<Vec<KunzVector>> {
    bounds_check(x)?;
    let mut out = Vec::new();
    let mut y: Vec<i64> = vec![1; x.coords().len()];
    loop {
        if is_semigroup_coords(x.m(), &y)? {
            out.push(
                KunzVector::new(x.m(), y.clone())
                    .expect("closure-valid vector must satisfy the inequality system"),
            );
        }
        // Odometer with the last coordinate fastest: ascending lex order.
        let mut pos = y.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            if y[pos] < x.coords()[pos] {
                y[pos] += 1;
                y[pos + 1..].fill(1);
                break;
            }
        }
    }
}

/// All minimal-cardinality decompositions of the semigroup into
/// intersections of `m`-irreducible semigroups of the same multiplicity,
/// by exhaustive search.
///
/// Candidate factors are every `m`-irreducible vector `y <= x` (including
/// `x` itself when it is `m`-irreducible). A selection decomposes `x`
/// exactly when every special gap of `x` above `m` is a gap of some factor:
/// if some special gap survived in every factor it would survive in the
/// intersection, and conversely any strictly larger intersection must
/// contain a maximal such survivor, which is necessarily a special gap.
/// The componentwise-maximum identity is asserted on every result anyway.
///
/// Each decomposition is sorted by vector, and the list of decompositions
/// is sorted lexicographically.
pub fn brute_minimal_decompositions(x: &KunzVector) -> Result<Vec<Vec<KunzVector>>> {
    bounds_check(x)?;
    let universe = brute_special_gaps_over_multiplicity(x)?;
    if universe.len() > MAX_COVER_UNIVERSE {
        return Err(Error::BoundsExceeded(format!(
            "oracle cover search supports at most {MAX_COVER_UNIVERSE} special gaps, got {}",
            universe.len()
        )));
    }
    let full: u32 = if universe.is_empty() {
        0
    } else {
        (1u32 << universe.len()) - 1
    };

    // Candidate factors with their coverage masks (bit k set = universe[k]
    // is a gap of the candidate).
    let mut candidates: Vec<(KunzVector, u32)> = Vec::new();
    for y in enumerate_oversemigroups(x)? {
        if !brute_is_m_irreducible(&y)? {
            continue;
        }
        let table = ElementTable::from_generators(&y.full_generators());
        let mut mask = 0u32;
        for (k, &h) in universe.iter().enumerate() {
            if !table.contains(h) {
                mask |= 1 << k;
            }
        }
        if mask != 0 || full == 0 {
            candidates.push((y, mask));
        }
    }

    for k in 1..=candidates.len() {
        let mut results: Vec<Vec<KunzVector>> = Vec::new();
        let mut chosen: Vec<usize> = Vec::with_capacity(k);
        search_covers(&candidates, full, k, 0, &mut chosen, &mut results);
        if !results.is_empty() {
            for decomposition in &mut results {
                let mut meet = decomposition[0].clone();
                for factor in &decomposition[1..] {
                    meet = meet.intersect(factor).expect("same multiplicity");
                }
                assert_eq!(
                    &meet, x,
                    "covering selection must intersect back to the input"
                );
                decomposition.sort();
            }
            results.sort();
            return Ok(results);
        }
    }
    unreachable!("every special gap is a gap of some m-irreducible oversemigroup");
}

fn search_covers(
    candidates: &[(KunzVector, u32)],
    full: u32,
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    results: &mut Vec<Vec<KunzVector>>,
) {
    if chosen.len() == k {
        let union = chosen.iter().fold(0u32, |acc, &i| acc | candidates[i].1);
        if union == full {
            results.push(chosen.iter().map(|&i| candidates[i].0.clone()).collect());
        }
        return;
    }
    let remaining = k - chosen.len();
    for i in start..=candidates.len().saturating_sub(remaining) {
        chosen.push(i);
        search_covers(candidates, full, k, i + 1, chosen, results);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kv(m: i64, coords: &[i64]) -> KunzVector {
        KunzVector::new(m, coords.to_vec()).unwrap()
    }

    #[test]
    fn closure_gaps_match_known_semigroups() {
        assert_eq!(
            brute_gaps(&kv(3, &[3, 4])).unwrap(),
            vec![1, 2, 4, 5, 7, 8, 11]
        );
        assert_eq!(
            brute_gaps(&kv(4, &[2, 1, 3])).unwrap(),
            vec![1, 2, 3, 5, 7, 11]
        );
        assert_eq!(brute_gaps(&kv(2, &[3])).unwrap(), vec![1, 3, 5]);
    }

    #[test]
    fn special_gaps_of_reference_vectors() {
        assert_eq!(brute_special_gaps(&kv(3, &[3, 4])).unwrap(), vec![7, 11]);
        assert_eq!(brute_special_gaps(&kv(3, &[13, 7])).unwrap(), vec![20, 37]);
        assert_eq!(
            brute_special_gaps(&kv(4, &[13, 15, 7])).unwrap(),
            vec![49, 58]
        );
        assert_eq!(
            brute_special_gaps(&kv(4, &[5, 4, 5])).unwrap(),
            vec![14, 17, 19]
        );
        assert_eq!(brute_special_gaps(&kv(4, &[2, 1, 3])).unwrap(), vec![11]);
        assert_eq!(brute_special_gaps(&kv(2, &[5])).unwrap(), vec![9]);
        assert_eq!(brute_special_gaps(&kv(3, &[1, 1])).unwrap(), vec![2]);
        // <5,6,8,9>: 3 and 4 satisfy the definition too, but only 7 lies
        // above the multiplicity.
        assert_eq!(
            brute_special_gaps(&kv(5, &[1, 2, 1, 1])).unwrap(),
            vec![3, 4, 7]
        );
        assert_eq!(
            brute_special_gaps_over_multiplicity(&kv(5, &[1, 2, 1, 1])).unwrap(),
            vec![7]
        );
    }

    #[test]
    fn full_tail_vector_has_special_gaps_below_multiplicity_only() {
        // {0, 4, 5, 6, ...}: both 2 and 3 satisfy the definition.
        assert_eq!(brute_special_gaps(&kv(4, &[1, 1, 1])).unwrap(), vec![2, 3]);
        assert_eq!(
            brute_special_gaps_over_multiplicity(&kv(4, &[1, 1, 1])).unwrap(),
            Vec::<i64>::new()
        );
    }

    #[test]
    fn closure_validity_agrees_with_hand_checked_vectors() {
        assert!(is_semigroup_coords(3, &[3, 4]).unwrap());
        assert!(is_semigroup_coords(4, &[13, 15, 7]).unwrap());
        assert!(!is_semigroup_coords(3, &[1, 3]).unwrap());
        assert!(!is_semigroup_coords(3, &[2, 5]).unwrap());
        assert!(!is_semigroup_coords(4, &[0, 1, 1]).unwrap());
    }

    #[test]
    fn oversemigroup_scan_of_three_ten_fourteen() {
        let got = enumerate_oversemigroups(&kv(3, &[3, 4])).unwrap();
        let expected: Vec<KunzVector> = [
            [1, 1],
            [1, 2],
            [2, 1],
            [2, 2],
            [2, 3],
            [2, 4],
            [3, 1],
            [3, 2],
            [3, 3],
            [3, 4],
        ]
        .iter()
        .map(|c| kv(3, c))
        .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn oversemigroup_scan_includes_the_input_itself() {
        let got = enumerate_oversemigroups(&kv(4, &[1, 1, 2])).unwrap();
        assert_eq!(got, vec![kv(4, &[1, 1, 1]), kv(4, &[1, 1, 2])]);
    }

    #[test]
    fn m_irreducibility_counts_special_gaps_above_m() {
        assert!(brute_is_m_irreducible(&kv(4, &[1, 1, 1])).unwrap());
        assert!(brute_is_m_irreducible(&kv(5, &[1, 2, 1, 1])).unwrap());
        assert!(brute_is_m_irreducible(&kv(2, &[5])).unwrap());
        assert!(!brute_is_m_irreducible(&kv(3, &[3, 4])).unwrap());
        assert!(!brute_is_m_irreducible(&kv(4, &[5, 4, 5])).unwrap());
    }

    #[test]
    fn minimal_decomposition_of_three_ten_fourteen_is_unique() {
        let got = brute_minimal_decompositions(&kv(3, &[3, 4])).unwrap();
        assert_eq!(got, vec![vec![kv(3, &[2, 4]), kv(3, &[3, 1])]]);
    }

    #[test]
    fn minimal_decomposition_of_three_twentythree_forty_is_unique() {
        let got = brute_minimal_decompositions(&kv(3, &[13, 7])).unwrap();
        assert_eq!(got, vec![vec![kv(3, &[4, 7]), kv(3, &[13, 6])]]);
    }

    #[test]
    fn decompositions_of_wide_gap_vector_pair_each_family_member() {
        let got = brute_minimal_decompositions(&kv(4, &[13, 15, 7])).unwrap();
        assert_eq!(got.len(), 4);
        assert!(got.iter().all(|d| d.len() == 2));
        assert!(got.contains(&vec![kv(4, &[8, 15, 7]), kv(4, &[13, 8, 4])]));
    }

    #[test]
    fn decompositions_of_three_gap_vector_need_three_factors() {
        let got = brute_minimal_decompositions(&kv(4, &[5, 4, 5])).unwrap();
        assert_eq!(got.len(), 9);
        assert!(got.iter().all(|d| d.len() == 3));
        let witness = vec![kv(4, &[2, 4, 2]), kv(4, &[4, 1, 5]), kv(4, &[5, 3, 1])];
        assert!(got.contains(&witness));
    }

    #[test]
    fn definitional_covers_exceed_the_distinct_frobenius_normal_form() {
        // Two of the four minimum covers of (3,2,4) are invisible to the
        // normal form the engine emits: one repeats the Frobenius number 15
        // and one uses (1,2,3), whose Frobenius number 11 is not a special
        // gap of the input.
        let x = kv(4, &[3, 2, 4]);
        assert_eq!(
            brute_special_gaps_over_multiplicity(&x).unwrap(),
            vec![6, 9, 15]
        );
        let got = brute_minimal_decompositions(&x).unwrap();
        assert_eq!(
            got,
            vec![
                vec![kv(4, &[1, 2, 1]), kv(4, &[3, 1, 4])],
                vec![kv(4, &[1, 2, 3]), kv(4, &[3, 1, 4])],
                vec![kv(4, &[2, 2, 4]), kv(4, &[3, 1, 1])],
                vec![kv(4, &[2, 2, 4]), kv(4, &[3, 1, 4])],
            ]
        );
        assert_eq!(kv(4, &[1, 2, 3]).frobenius(), 11);
    }

    #[test]
    fn m_irreducible_vectors_decompose_as_themselves() {
        for x in [kv(4, &[1, 1, 1]), kv(2, &[5]), kv(5, &[1, 2, 1, 1])] {
            assert_eq!(
                brute_minimal_decompositions(&x).unwrap(),
                vec![vec![x.clone()]]
            );
        }
    }

    #[test]
    fn oracle_refuses_large_instances() {
        assert!(matches!(
            brute_gaps(&kv(3, &[300, 300])),
            Err(Error::BoundsExceeded(_))
        ));
        let x = KunzVector::new(7, vec![1; 6]).unwrap();
        assert!(matches!(brute_gaps(&x), Err(Error::BoundsExceeded(_))));
        let naturals = KunzVector::new(1, vec![]).unwrap();
        assert!(matches!(
            brute_gaps(&naturals),
            Err(Error::DegenerateMultiplicity(1))
        ));
    }
}
