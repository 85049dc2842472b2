//! Closed-form fast path for multiplicity 3.
//!
//! A multiplicity-3 vector `(a, b) = (x_1, x_2)` is valid exactly when
//! `2a >= b` and `2b >= a - 1`, and everything about its special gaps and
//! decompositions collapses to inequalities in `a` and `b`:
//!
//! * the class-1 special gap `h_1 = 3a - 2` is present iff `a >= 2` and
//!   `2a >= b + 2`; the class-2 gap `h_2 = 3b - 1` iff `b >= 2` and
//!   `2b >= a + 1`;
//! * the factor removing `h_1` is the single vector `(a, ⌊a/2⌋)`, and the
//!   factor removing `h_2` is `(⌈b/2⌉, b)`;
//! * consequently a non-3-irreducible vector has exactly one minimal
//!   decomposition, with exactly two factors.
//!
//! Every formula here is checked against [`crate::engine`] (general box
//! scans) and [`crate::oracle`] (definition-level closures) by the property
//! suite.

use crate::engine::{self, Parity};
use crate::error::{Error, Result};
use crate::semigroup::KunzVector;

fn coords3(x: &KunzVector) -> Result<(i64, i64)> {
    if x.m() != 3 {
        return Err(Error::MultiplicityMismatch(3, x.m()));
    }
    Ok((x.coord(1), x.coord(2)))
}

fn kv3(a: i64, b: i64) -> KunzVector {
    KunzVector::new(3, vec![a, b]).expect("closed form must produce a valid vector")
}

/// Is the class-1 gap `3a - 2` a special gap (above the multiplicity)?
fn class1_special(a: i64, b: i64) -> bool {
    a >= 2 && 2 * a >= b + 2
}

/// Is the class-2 gap `3b - 1` a special gap (above the multiplicity)?
// The `+ 1` shape matches how the case conditions are stated (and quoted in
// the verification notes), so it is kept over clippy's `2b > a`.
#[allow(clippy::int_plus_one)]
fn class2_special(a: i64, b: i64) -> bool {
    b >= 2 && 2 * b >= a + 1
}

/// Special gaps above 3, ascending, by closed form.
pub fn special_gaps(x: &KunzVector) -> Result<Vec<i64>> {
    let (a, b) = coords3(x)?;
    let mut gaps = Vec::with_capacity(2);
    if class1_special(a, b) {
        gaps.push(3 * a - 2);
    }
    if class2_special(a, b) {
        gaps.push(3 * b - 1);
    }
    gaps.sort_unstable();
    Ok(gaps)
}

/// Closed-form 3-irreducibility: the vector is `(1,1)`, or exactly one of
/// the two class gaps is special. Equivalent to `special_gaps(x).len() <= 1`.
#[allow(clippy::int_plus_one)]
pub fn is_three_irreducible(x: &KunzVector) -> Result<bool> {
    let (a, b) = coords3(x)?;
    Ok((a, b) == (1, 1) || (2 * a >= b + 2 && 2 * b <= a) || (2 * b >= a + 1 && 2 * a <= b + 1))
}

/// The unique 3-irreducible vector `z <= x` whose Frobenius number is the
/// special gap `h` — the factor that removes `h`.
pub fn candidate(x: &KunzVector, h: i64) -> Result<KunzVector> {
    let (a, b) = coords3(x)?;
    if h == 3 * a - 2 && class1_special(a, b) {
        // Class 1: z_1 = a is forced; validity needs 2z_2 >= a - 1 and
        // 3-irreducibility needs 2z_2 <= a, pinning z_2 = ⌊a/2⌋.
        Ok(kv3(a, a.div_euclid(2)))
    } else if h == 3 * b - 1 && class2_special(a, b) {
        // Class 2 mirrors it: z_2 = b, z_1 = ⌈b/2⌉.
        Ok(kv3((b + 1).div_euclid(2), b))
    } else {
        Err(Error::NotASpecialGap(h))
    }
}

/// The minimal decomposition into 3-irreducible vectors, factors in class
/// order (class-1 factor first). It is unique at multiplicity 3; a
/// 3-irreducible input decomposes as itself.
pub fn decompose(x: &KunzVector) -> Result<Vec<KunzVector>> {
    let (a, b) = coords3(x)?;
    if is_three_irreducible(x)? {
        return Ok(vec![x.clone()]);
    }
    let f1 = candidate(x, 3 * a - 2)?;
    let f2 = candidate(x, 3 * b - 1)?;
    debug_assert_eq!(f1.intersect(&f2)?, *x);
    Ok(vec![f1, f2])
}

/// All minimal decompositions — always exactly one at multiplicity 3.
pub fn decompose_all(x: &KunzVector) -> Result<Vec<Vec<KunzVector>>> {
    Ok(vec![decompose(x)?])
}

/// Closed-form test for decomposability into 3-irreducible factors whose
/// Frobenius numbers all have the given parity.
///
/// `h_1 = 3a - 2` is odd iff `a` is odd, and `h_2 = 3b - 1` is odd iff `b`
/// is even; a non-3-irreducible vector needs both factors, so both gaps
/// must have the requested parity. A 3-irreducible vector only offers
/// itself.
pub fn decomposable_with_frobenius_parity(x: &KunzVector, parity: Parity) -> Result<bool> {
    let (a, b) = coords3(x)?;
    if is_three_irreducible(x)? {
        return Ok(parity.matches(x.frobenius()));
    }
    match parity {
        Parity::Odd => Ok(a % 2 == 1 && b % 2 == 0),
        Parity::Even => Ok(a % 2 == 0 && b % 2 == 1),
    }
}

/// The closed-form list of irreducible vectors `z <= x` (componentwise):
/// the three smallest-genus vectors that fit under `x`, plus the factor
/// family of each special gap. Defined for non-irreducible inputs.
///
/// Note: this published closed form can omit sporadic irreducible vectors
/// under `x` — e.g. `(2,3) <= (3,4)` is irreducible but not produced; see
/// DISCREPANCIES.md. The list is reported ascending-lexicographic.
pub fn irreducible_undercoordinates(x: &KunzVector) -> Result<Vec<KunzVector>> {
    let (a, b) = coords3(x)?;
    if engine::classify(x)?.irreducible {
        return Err(Error::InputIsIrreducible);
    }
    let mut out = std::collections::BTreeSet::new();
    out.insert(kv3(1, 1));
    if a >= 2 {
        out.insert(kv3(2, 1));
    }
    if b >= 2 {
        out.insert(kv3(1, 2));
    }
    if class1_special(a, b) {
        out.insert(candidate(x, 3 * a - 2)?);
    }
    if class2_special(a, b) {
        out.insert(candidate(x, 3 * b - 1)?);
    }
    Ok(out.into_iter().collect())
}
