//! General-multiplicity engine: validation, special gaps, classification,
//! enumeration, candidate factors, and minimal decompositions.
//!
//! Everything here works for any multiplicity through coordinate arithmetic
//! (classwise membership thresholds), with cost governed by the coordinate
//! box `∏ x_i` for the decomposition scans. The closed-form fast paths for
//! multiplicities 3 and 4 live in [`crate::mult3`] and [`crate::mult4`]; the
//! definition-level cross-check lives in [`crate::oracle`].
//!
//! Key fact used throughout: every special gap of a semigroup is the
//! largest gap of its residue class, `h_i = m·(x_i - 1) + i = w_i - m`
//! (because `h + m ∈ S` forces `h ≥ w_i - m`, and `h ∉ S` forces
//! `h < w_i`). So special gaps are found by testing at most `m - 1`
//! candidates with the membership formula, and a selection of semigroups
//! containing `S` intersects back to exactly `S` if and only if each special
//! gap of `S` is a gap of some factor (a maximal survivor of the
//! intersection would itself be a special gap).

use crate::error::{Error, Result};
use crate::semigroup::{check_coords, KunzVector, Violation};

/// Coordinate boxes larger than this are refused by the decomposition and
/// candidate scans ([`Error::BoundsExceeded`]); cells cost `O(m^2)` each.
pub const MAX_ENGINE_VOLUME: i64 = 1 << 22;

/// Outcome of validating a candidate coordinate vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// The vector satisfies the inequality system; the semigroup is attached.
    Valid(KunzVector),
    /// The vector fails the inequality system; every violated inequality is
    /// listed.
    Invalid { violations: Vec<Violation> },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid(_))
    }
}

/// Check a coordinate vector against the Kunz inequality system, reporting
/// each violated inequality. Structural problems (bad multiplicity, wrong
/// coordinate count, overflow-scale entries) are errors, not violations.
pub fn validate(m: i64, coords: &[i64]) -> Result<Verdict> {
    match KunzVector::new(m, coords.to_vec()) {
        Ok(v) => Ok(Verdict::Valid(v)),
        Err(Error::InvalidKunz { violations }) => Ok(Verdict::Invalid { violations }),
        Err(e) => Err(e),
    }
}

/// The special gaps of a semigroup that exceed its multiplicity, ascending.
///
/// These are the gaps `h` with `2h ∈ S` and `h + s ∈ S` for every nonzero
/// `s ∈ S` — equivalently, the proper oversemigroups of `S` of the form
/// `S ∪ {h}`. The ones above the multiplicity are exactly the decrements
/// `x - e_i` that remain valid, and they drive the whole decomposition
/// theory; gaps below the multiplicity never matter there because adjoining
/// one changes the multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialGaps {
    gaps: Vec<i64>,
}

impl SpecialGaps {
    pub fn values(&self) -> &[i64] {
        &self.gaps
    }

    pub fn len(&self) -> usize {
        self.gaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gaps.is_empty()
    }

    pub fn contains(&self, h: i64) -> bool {
        self.gaps.binary_search(&h).is_ok()
    }

    pub fn into_values(self) -> Vec<i64> {
        self.gaps
    }
}

/// Is `h_i = w_i - m` (the largest gap in class `i`) a special gap?
fn class_gap_is_special(x: &KunzVector, i: i64) -> bool {
    let h = x.apery_element(i) - x.m();
    if h < 1 {
        return false;
    }
    // h is a gap of its class by construction; h + m = w_i ∈ S is automatic.
    x.contains(2 * h) && (1..x.m()).all(|j| x.contains(h + x.apery_element(j)))
}

/// Special gaps strictly above the multiplicity, ascending.
pub fn special_gaps(x: &KunzVector) -> SpecialGaps {
    let mut gaps: Vec<i64> = (1..x.m())
        .filter(|&i| x.coord(i) >= 2 && class_gap_is_special(x, i))
        .map(|i| x.apery_element(i) - x.m())
        .collect();
    gaps.sort_unstable();
    SpecialGaps { gaps }
}

/// All special gaps, including those below the multiplicity, ascending.
pub fn special_gaps_all(x: &KunzVector) -> Vec<i64> {
    let mut gaps: Vec<i64> = (1..x.m())
        .filter(|&i| class_gap_is_special(x, i))
        .map(|i| x.apery_element(i) - x.m())
        .collect();
    gaps.sort_unstable();
    gaps
}

/// Structural classification of a semigroup of multiplicity `m >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub multiplicity: i64,
    pub frobenius: i64,
    pub genus: i64,
    /// Special gaps above the multiplicity (ascending).
    pub special_gaps: Vec<i64>,
    /// Cannot be written as an intersection of two strictly larger
    /// numerical semigroups: genus equals `⌈(F+1)/2⌉`.
    pub irreducible: bool,
    pub symmetric: bool,
    pub pseudosymmetric: bool,
    /// Cannot be written as an intersection of two strictly larger
    /// semigroups of the same multiplicity: at most one special gap
    /// above `m`.
    pub m_irreducible: bool,
    pub m_symmetric: bool,
    pub m_pseudosymmetric: bool,
}

pub fn classify(x: &KunzVector) -> Result<Classification> {
    if x.m() == 1 {
        return Err(Error::DegenerateMultiplicity(1));
    }
    let m = x.m();
    let frobenius = x.frobenius();
    let genus = x.genus();
    let sg = special_gaps(x).into_values();
    let odd = frobenius % 2 != 0;
    let irreducible = genus == (frobenius + 2) / 2; // ⌈(F+1)/2⌉, F >= 1
    let m_irreducible = sg.len() <= 1;
    // Cross-check: the m-irreducible semigroups are exactly those of genus
    // ⌈(F+1)/2⌉, m-1 (full tail), or m (full tail minus one gap).
    debug_assert_eq!(
        m_irreducible,
        genus == (frobenius + 2) / 2 || genus == m - 1 || genus == m
    );
    Ok(Classification {
        multiplicity: m,
        frobenius,
        genus,
        special_gaps: sg,
        irreducible,
        symmetric: irreducible && odd,
        pseudosymmetric: irreducible && !odd,
        m_irreducible,
        m_symmetric: m_irreducible && odd,
        m_pseudosymmetric: m_irreducible && !odd,
    })
}

/// Lazy enumeration of every valid coordinate vector for multiplicity `m`
/// with `1 <= x_i <= bound`, in ascending lexicographic order.
pub struct KunzEnumeration {
    m: i64,
    bound: i64,
    next: Option<Vec<i64>>,
}

/// Enumerate the valid vectors in the box `[1, bound]^(m-1)`, ascending lex.
pub fn enumerate_kunz(m: i64, bound: i64) -> Result<KunzEnumeration> {
    if m < 1 {
        return Err(Error::InvalidMultiplicity(m));
    }
    if m == 1 {
        return Err(Error::DegenerateMultiplicity(1));
    }
    if bound < 1 {
        return Ok(KunzEnumeration {
            m,
            bound,
            next: None,
        });
    }
    // Fail fast if the largest cell would overflow.
    KunzVector::new(m, vec![bound; (m - 1) as usize])?;
    Ok(KunzEnumeration {
        m,
        bound,
        next: Some(vec![1; (m - 1) as usize]),
    })
}

impl Iterator for KunzEnumeration {
    type Item = KunzVector;

    fn next(&mut self) -> Option<KunzVector> {
        loop {
            let current = self.next.as_ref()?.clone();
            // Advance the odometer (last coordinate fastest).
            let cur = self.next.as_mut().expect("checked above");
            let mut pos = cur.len();
            loop {
                if pos == 0 {
                    self.next = None;
                    break;
                }
                pos -= 1;
                if cur[pos] < self.bound {
                    cur[pos] += 1;
                    cur[pos + 1..].fill(1);
                    break;
                }
            }
            if check_coords(self.m, &current).is_empty() {
                return Some(KunzVector::new(self.m, current).expect("validated"));
            }
        }
    }
}

/// Descending-lex scan of the box `1 <= z <= x` (componentwise), starting at
/// `x` itself.
struct DescendingBox {
    upper: Vec<i64>,
    cur: Option<Vec<i64>>,
}

impl DescendingBox {
    fn new(upper: &[i64]) -> Self {
        DescendingBox {
            upper: upper.to_vec(),
            cur: Some(upper.to_vec()),
        }
    }
}

impl Iterator for DescendingBox {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let current = self.cur.as_ref()?.clone();
        let cur = self.cur.as_mut().expect("checked above");
        let mut pos = cur.len();
        loop {
            if pos == 0 {
                self.cur = None;
                break;
            }
            pos -= 1;
            if cur[pos] > 1 {
                cur[pos] -= 1;
                for (slot, &hi) in cur[pos + 1..].iter_mut().zip(&self.upper[pos + 1..]) {
                    *slot = hi;
                }
                break;
            }
        }
        Some(current)
    }
}

fn ensure_box_within_bounds(x: &KunzVector) -> Result<()> {
    let mut volume: i128 = 1;
    for &c in x.coords() {
        volume *= c as i128;
        if volume > MAX_ENGINE_VOLUME as i128 {
            return Err(Error::BoundsExceeded(format!(
                "coordinate box exceeds {MAX_ENGINE_VOLUME} cells"
            )));
        }
    }
    Ok(())
}

/// Which special gaps (of the list `sg`) are gaps of `z`, as a bitmask.
pub(crate) fn coverage_mask(z: &KunzVector, sg: &[i64]) -> u32 {
    let mut mask = 0u32;
    for (k, &h) in sg.iter().enumerate() {
        if !z.contains(h) {
            mask |= 1 << k;
        }
    }
    mask
}

/// The candidate factors for removing the special gap `h`: every
/// `m`-irreducible semigroup containing this one (with the same
/// multiplicity) whose Frobenius number is exactly `h`.
///
/// Candidates are reported largest-first (descending coordinate
/// lexicographic order), i.e. smallest semigroup first.
pub fn candidates(x: &KunzVector, h: i64) -> Result<Vec<KunzVector>> {
    if x.m() == 1 {
        return Err(Error::DegenerateMultiplicity(1));
    }
    if !special_gaps(x).contains(h) {
        return Err(Error::NotASpecialGap(h));
    }
    ensure_box_within_bounds(x)?;
    let mut out = Vec::new();
    for z in DescendingBox::new(x.coords()) {
        if !check_coords(x.m(), &z).is_empty() {
            continue;
        }
        let z = KunzVector::new(x.m(), z).expect("validated");
        if z.frobenius() == h && special_gaps(&z).len() <= 1 {
            out.push(z);
        }
    }
    debug_assert!(!out.is_empty(), "every special gap has a removing factor");
    Ok(out)
}

/// All `m`-irreducible vectors `z <= x` that have at least one special gap
/// of `x` as a gap, paired with their coverage masks, ordered by Frobenius
/// number ascending and descending-lex within equal Frobenius. An optional
/// parity restricts the factors' Frobenius numbers.
fn covering_candidates(
    x: &KunzVector,
    sg: &[i64],
    parity: Option<Parity>,
) -> Result<Vec<(KunzVector, u32)>> {
    ensure_box_within_bounds(x)?;
    let mut found: Vec<(KunzVector, u32)> = Vec::new();
    for z in DescendingBox::new(x.coords()) {
        if !check_coords(x.m(), &z).is_empty() {
            continue;
        }
        let z = KunzVector::new(x.m(), z).expect("validated");
        if let Some(p) = parity {
            if !p.matches(z.frobenius()) {
                continue;
            }
        }
        if special_gaps(&z).len() > 1 {
            continue;
        }
        let mask = coverage_mask(&z, sg);
        if mask != 0 {
            found.push((z, mask));
        }
    }
    found.sort_by_key(|(z, _)| z.frobenius()); // stable: keeps descending-lex within ties
    Ok(found)
}

/// Exhaustive minimum-cardinality cover search over family-tagged
/// candidates `(vector, coverage mask, family index)`: selections using at
/// most one candidate per family whose coverage masks union to `full`,
/// found in ascending subset size and, within a size, in candidate-index
/// order (so the first result uses the earliest possible candidates).
pub(crate) fn minimal_covers(
    candidates: &[(KunzVector, u32, usize)],
    full: u32,
    stop_at_first: bool,
) -> Vec<Vec<KunzVector>> {
    // suffix_or[i] = union of all masks from index i on, for pruning.
    let mut suffix_or = vec![0u32; candidates.len() + 1];
    for i in (0..candidates.len()).rev() {
        suffix_or[i] = suffix_or[i + 1] | candidates[i].1;
    }
    let family_count = candidates
        .iter()
        .map(|&(_, _, fam)| fam + 1)
        .max()
        .unwrap_or(0);
    let mut results = Vec::new();
    for k in 1..=family_count.min(candidates.len()) {
        let mut chosen = Vec::with_capacity(k);
        cover_search(
            candidates,
            &suffix_or,
            full,
            k,
            0,
            0,
            0,
            &mut chosen,
            &mut results,
            stop_at_first,
        );
        if !results.is_empty() {
            return results;
        }
    }
    results
}

#[allow(clippy::too_many_arguments)]
fn cover_search(
    candidates: &[(KunzVector, u32, usize)],
    suffix_or: &[u32],
    full: u32,
    k: usize,
    start: usize,
    acc: u32,
    families_used: u32,
    chosen: &mut Vec<usize>,
    results: &mut Vec<Vec<KunzVector>>,
    stop_at_first: bool,
) {
    if stop_at_first && !results.is_empty() {
        return;
    }
    if chosen.len() == k {
        if acc == full {
            results.push(chosen.iter().map(|&i| candidates[i].0.clone()).collect());
        }
        return;
    }
    if acc | suffix_or[start] != full {
        return; // remaining candidates can no longer complete the cover
    }
    let remaining = k - chosen.len();
    for i in start..=candidates.len().saturating_sub(remaining) {
        let (_, mask, fam) = candidates[i];
        if families_used & (1 << fam) != 0 {
            continue; // at most one factor per special-gap family
        }
        chosen.push(i);
        cover_search(
            candidates,
            suffix_or,
            full,
            k,
            i + 1,
            acc | mask,
            families_used | (1 << fam),
            chosen,
            results,
            stop_at_first,
        );
        chosen.pop();
        if stop_at_first && !results.is_empty() {
            return;
        }
    }
}

fn decompose_impl(x: &KunzVector, stop_at_first: bool) -> Result<Vec<Vec<KunzVector>>> {
    if x.m() == 1 {
        return Err(Error::DegenerateMultiplicity(1));
    }
    let sg = special_gaps(x).into_values();
    if sg.len() <= 1 {
        return Ok(vec![vec![x.clone()]]);
    }
    assert!(sg.len() <= 32, "coverage masks are u32");
    ensure_box_within_bounds(x)?;
    // One box scan, bucketing the m-irreducible undervectors whose
    // Frobenius number is a special gap into per-gap families (members in
    // descending lexicographic order, matching `candidates`).
    let mut families: Vec<Vec<KunzVector>> = vec![Vec::new(); sg.len()];
    for z in DescendingBox::new(x.coords()) {
        if !check_coords(x.m(), &z).is_empty() {
            continue;
        }
        let z = KunzVector::new(x.m(), z).expect("validated");
        if special_gaps(&z).len() > 1 {
            continue;
        }
        if let Ok(fam) = sg.binary_search(&z.frobenius()) {
            families[fam].push(z);
        }
    }
    let mut pool: Vec<(KunzVector, u32, usize)> = Vec::new();
    for (fam, members) in families.into_iter().enumerate() {
        debug_assert!(!members.is_empty(), "every special gap has a family");
        for z in members {
            let mask = coverage_mask(&z, &sg);
            debug_assert!(mask & (1 << fam) != 0, "a factor removes its own gap");
            pool.push((z, mask, fam));
        }
    }
    let full = (1u32 << sg.len()) - 1;
    let results = minimal_covers(&pool, full, stop_at_first);
    assert!(
        !results.is_empty(),
        "every special gap has a removing factor"
    );
    for decomposition in &results {
        let mut meet = decomposition[0].clone();
        for factor in &decomposition[1..] {
            meet = meet.intersect(factor)?;
        }
        assert_eq!(&meet, x, "decomposition must intersect back to the input");
    }
    Ok(results)
}

/// One minimal decomposition of the semigroup into `m`-irreducible
/// semigroups of the same multiplicity (factors ordered by Frobenius
/// number ascending). An `m`-irreducible input decomposes as itself.
pub fn decompose(x: &KunzVector) -> Result<Vec<KunzVector>> {
    Ok(decompose_impl(x, true)?.swap_remove(0))
}

/// Every minimal decomposition in normal form: minimum-cardinality factor
/// lists drawn from the candidate families, at most one factor per special
/// gap, so the factors' Frobenius numbers are distinct special gaps of the
/// input. Each factor list is ordered by Frobenius ascending; lists are
/// ordered by which candidates they use, earliest first.
///
/// Some inputs admit further minimum-cardinality decompositions whose
/// factors repeat a Frobenius number or use one that is not a special gap;
/// [`crate::oracle::brute_minimal_decompositions`] enumerates that larger
/// definitional set, and cross-validation checks this normal-form list is
/// a subset of it with the same factor count.
pub fn decompose_all(x: &KunzVector) -> Result<Vec<Vec<KunzVector>>> {
    decompose_impl(x, false)
}

/// Number of distinct normal-form minimal decompositions.
pub fn decompose_count(x: &KunzVector) -> Result<usize> {
    Ok(decompose_all(x)?.len())
}

/// Requested parity for the factors' Frobenius numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn matches(self, n: i64) -> bool {
        (n.rem_euclid(2) == 1) == (self == Parity::Odd)
    }
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Parity::Odd => write!(f, "odd"),
            Parity::Even => write!(f, "even"),
        }
    }
}

/// Outcome of asking for a decomposition whose factors all have Frobenius
/// numbers of one parity (odd = intersection of `m`-symmetric semigroups,
/// even = intersection of `m`-pseudosymmetric ones).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityDecomposition {
    pub decomposable: bool,
    /// A decomposition with all factor Frobenius numbers of the requested
    /// parity (not necessarily of minimal cardinality), when one exists.
    pub witness: Option<Vec<KunzVector>>,
    /// A special gap that no factor of the requested parity can remove,
    /// when that is the obstruction.
    pub blocking_gap: Option<i64>,
}

/// Can the semigroup be written as an intersection of `m`-irreducible
/// semigroups (same multiplicity) whose Frobenius numbers all have the
/// given parity? No minimality is required of the witness.
pub fn decomposable_with_frobenius_parity(
    x: &KunzVector,
    parity: Parity,
) -> Result<ParityDecomposition> {
    if x.m() == 1 {
        return Err(Error::DegenerateMultiplicity(1));
    }
    let sg = special_gaps(x).into_values();
    if sg.len() <= 1 {
        // The only decomposition of an m-irreducible semigroup is itself.
        if parity.matches(x.frobenius()) {
            return Ok(ParityDecomposition {
                decomposable: true,
                witness: Some(vec![x.clone()]),
                blocking_gap: None,
            });
        }
        return Ok(ParityDecomposition {
            decomposable: false,
            witness: None,
            blocking_gap: sg.first().copied(),
        });
    }
    let pool = covering_candidates(x, &sg, Some(parity))?;
    let mut witness: Vec<KunzVector> = Vec::new();
    for (k, &h) in sg.iter().enumerate() {
        match pool.iter().find(|(_, mask)| mask & (1 << k) != 0) {
            Some((z, _)) => {
                if !witness.contains(z) {
                    witness.push(z.clone());
                }
            }
            None => {
                return Ok(ParityDecomposition {
                    decomposable: false,
                    witness: None,
                    blocking_gap: Some(h),
                });
            }
        }
    }
    let mut meet = witness[0].clone();
    for factor in &witness[1..] {
        meet = meet.intersect(factor)?;
    }
    assert_eq!(
        &meet, x,
        "covering witness must intersect back to the input"
    );
    Ok(ParityDecomposition {
        decomposable: true,
        witness: Some(witness),
        blocking_gap: None,
    })
}
