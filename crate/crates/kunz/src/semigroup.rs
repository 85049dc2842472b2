//! Core types: generator sets, Kunz-coordinates vectors, and semigroups.
//!
//! The Kunz coordinates of a numerical semigroup `S` with multiplicity `m`
//! are `x_i = (w_i - i)/m` for `i = 1..m-1`, where `w_i` is the smallest
//! element of `S` congruent to `i` modulo `m` (the Apéry set of `m`). A
//! vector of positive integers arises this way if and only if it satisfies
//!
//! ```text
//! x_i >= 1                          for 1 <= i <= m-1
//! x_i + x_j >= x_{i+j}              for 1 <= i <= j <= m-1, i+j <= m-1
//! x_i + x_j + 1 >= x_{i+j-m}        for 1 <= i <= j <= m-1, i+j > m
//! ```
//!
//! (pairs with `i + j = m` are unconstrained: `w_i + w_j` is automatically a
//! multiple of `m` and every nonnegative multiple of `m` is in `S`).
//!
//! Membership is a classwise threshold: `n ∈ S` iff `n >= m·x_{n mod m} + (n
//! mod m)`, with `x_0 = 0`. Consequently the Frobenius number is
//! `max_i(m·x_i + i) - m`, the genus is `Σ x_i`, and intersecting two
//! semigroups of the same multiplicity takes the componentwise maximum of
//! their vectors.

use std::fmt;

use crate::error::{Error, Result};

/// Elements and Apéry values are kept well inside `i64` so that doubling a
/// gap or adding a generator can never wrap.
const MAX_APERY: i64 = i64::MAX / 8;

/// One violated inequality of the Kunz system, reported with 1-based
/// coordinate indices. `target` is the class on the right-hand side
/// (`i + j` or `i + j - m`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// `x_i >= 1` failed.
    NotPositive { i: usize },
    /// `x_i + x_j >= x_target` failed (for `i + j <= m - 1`, `target = i + j`).
    Pair { i: usize, j: usize, target: usize },
    /// `x_i + x_j >= x_target - 1` failed (for `i + j > m`, `target = i + j - m`).
    WrapPair { i: usize, j: usize, target: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::NotPositive { i } => write!(f, "x_{i} >= 1"),
            Violation::Pair { i, j, target } if i == j => write!(f, "2x_{i} >= x_{target}"),
            Violation::Pair { i, j, target } => write!(f, "x_{i} + x_{j} >= x_{target}"),
            Violation::WrapPair { i, j, target } if i == j => {
                write!(f, "2x_{i} >= x_{target} - 1")
            }
            Violation::WrapPair { i, j, target } => {
                write!(f, "x_{i} + x_{j} >= x_{target} - 1")
            }
        }
    }
}

/// Check a candidate coordinate vector against the Kunz inequality system.
///
/// Returns every violated inequality; an empty list means the vector is the
/// Kunz-coordinates vector of a (unique) numerical semigroup of multiplicity
/// `m`.
pub(crate) fn check_coords(m: i64, coords: &[i64]) -> Vec<Violation> {
    let n = coords.len();
    debug_assert_eq!(n as i64, m - 1);
    let x = |i: usize| coords[i - 1];
    let mut violations = Vec::new();
    for i in 1..=n {
        if x(i) < 1 {
            violations.push(Violation::NotPositive { i });
        }
    }
    for i in 1..=n {
        for j in i..=n {
            let s = i + j;
            if s < n + 1 {
                if x(i) + x(j) < x(s) {
                    violations.push(Violation::Pair { i, j, target: s });
                }
            } else if s > n + 1 {
                let target = s - n - 1;
                if x(i) + x(j) + 1 < x(target) {
                    violations.push(Violation::WrapPair { i, j, target });
                }
            }
        }
    }
    violations
}

/// A nonempty set of positive generators, stored sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    values: Vec<i64>,
}

impl GeneratorSet {
    /// Sort, deduplicate and validate the generators (nonempty, all >= 1).
    pub fn new(mut values: Vec<i64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&bad) = values.iter().find(|&&v| v < 1) {
            return Err(Error::NonPositiveGenerator(bad));
        }
        values.sort_unstable();
        values.dedup();
        Ok(GeneratorSet { values })
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Greatest common divisor of all generators.
    pub fn gcd(&self) -> i64 {
        self.values.iter().copied().fold(0, gcd)
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", join(&self.values))
    }
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn join(values: &[i64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// The Kunz-coordinates vector of a numerical semigroup of multiplicity `m`.
///
/// The invariant (coordinates positive, inequality system satisfied, Apéry
/// values within [`i64`] range) is established at construction; all other
/// operations rely on it. The degenerate semigroup ℕ is represented by
/// `m = 1` with an empty coordinate list; most algorithms reject it with
/// [`Error::DegenerateMultiplicity`].
///
/// Vectors order lexicographically (multiplicity first, then coordinates),
/// which fixes the enumeration and reporting order everywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KunzVector {
    m: i64,
    coords: Vec<i64>,
}

impl KunzVector {
    /// Validate and wrap a coordinate vector for multiplicity `m`.
    pub fn new(m: i64, coords: Vec<i64>) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidMultiplicity(m));
        }
        if coords.len() as i64 != m - 1 {
            return Err(Error::CoordinateCount {
                m,
                expected: (m - 1) as usize,
                got: coords.len(),
            });
        }
        // Guard the arithmetic every consumer performs — Apéry values, their
        // doubles, and the genus sum must stay inside i64 — before touching
        // the inequality system, so check_coords itself can add coordinates
        // without overflow.
        let mut genus: i64 = 0;
        for (idx, &c) in coords.iter().enumerate() {
            let i = idx as i64 + 1;
            let w = m
                .checked_mul(c)
                .and_then(|p| p.checked_add(i))
                .ok_or(Error::Overflow)?;
            if w > MAX_APERY {
                return Err(Error::Overflow);
            }
            genus = genus.checked_add(c).ok_or(Error::Overflow)?;
        }
        let violations = check_coords(m, &coords);
        if !violations.is_empty() {
            return Err(Error::InvalidKunz { violations });
        }
        Ok(KunzVector { m, coords })
    }

    /// Multiplicity of the semigroup (its smallest nonzero element).
    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Coordinate by residue class, with the convention `x_0 = 0`.
    /// `class` must lie in `0..m`.
    pub fn coord(&self, class: i64) -> i64 {
        debug_assert!((0..self.m).contains(&class));
        if class == 0 {
            0
        } else {
            self.coords[(class - 1) as usize]
        }
    }

    /// Smallest element of the semigroup in residue class `class` modulo `m`
    /// (`w_class = m·x_class + class`; `w_0 = 0`).
    pub fn apery_element(&self, class: i64) -> i64 {
        self.m * self.coord(class) + class
    }

    /// Frobenius number: the largest integer not in the semigroup
    /// (`-1` for ℕ).
    pub fn frobenius(&self) -> i64 {
        if self.m == 1 {
            return -1;
        }
        (1..self.m)
            .map(|i| self.apery_element(i))
            .max()
            .expect("m >= 2 has at least one class")
            - self.m
    }

    /// Genus: the number of gaps, `Σ x_i`.
    pub fn genus(&self) -> i64 {
        self.coords.iter().sum()
    }

    /// Classwise membership test: `n ∈ S` iff `n >= w_{n mod m}`.
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        n >= self.apery_element(n.rem_euclid(self.m))
    }

    /// All gaps (positive integers not in the semigroup), ascending.
    pub fn gaps(&self) -> Vec<i64> {
        let f = self.frobenius();
        let gaps: Vec<i64> = (1..=f).filter(|&n| !self.contains(n)).collect();
        debug_assert_eq!(gaps.len() as i64, self.genus());
        gaps
    }

    /// The canonical generating set `{m} ∪ {w_i : i = 1..m-1}` (not
    /// necessarily minimal), ascending.
    pub fn full_generators(&self) -> Vec<i64> {
        let mut gens: Vec<i64> = std::iter::once(self.m)
            .chain((1..self.m).map(|i| self.apery_element(i)))
            .collect();
        gens.sort_unstable();
        gens
    }

    /// The minimal generating set, ascending.
    ///
    /// An Apéry value `w_i` is a minimal generator exactly when it is not a
    /// sum of two nonzero elements, i.e. when `w_a + w_b > w_i` for every
    /// pair of nonzero classes with `a + b ≡ i (mod m)`; the multiplicity
    /// itself is always minimal.
    pub fn minimal_generators(&self) -> Vec<i64> {
        if self.m == 1 {
            return vec![1];
        }
        let mut gens = vec![self.m];
        for i in 1..self.m {
            let w_i = self.apery_element(i);
            let mut reducible = false;
            'pairs: for a in 1..self.m {
                for b in a..self.m {
                    if (a + b) % self.m == i && self.apery_element(a) + self.apery_element(b) <= w_i
                    {
                        reducible = true;
                        break 'pairs;
                    }
                }
            }
            if !reducible {
                gens.push(w_i);
            }
        }
        gens.sort_unstable();
        gens
    }

    /// Intersection of semigroups = componentwise maximum of their vectors.
    pub fn intersect(&self, other: &KunzVector) -> Result<KunzVector> {
        if self.m != other.m {
            return Err(Error::MultiplicityMismatch(self.m, other.m));
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| a.max(b))
            .collect();
        KunzVector::new(self.m, coords)
    }
}

impl fmt::Display for KunzVector {
    /// Rendered as `m:x_1,…,x_{m-1}`, the same shape the CLI accepts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.m, join(&self.coords))
    }
}

/// A numerical semigroup with its basic descriptors precomputed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semigroup {
    kunz: KunzVector,
    frobenius: i64,
    genus: i64,
    minimal_generators: Vec<i64>,
}

impl Semigroup {
    /// Realize a Kunz vector as a semigroup (descriptors computed eagerly).
    pub fn from_kunz(kunz: KunzVector) -> Self {
        let frobenius = kunz.frobenius();
        let genus = kunz.genus();
        let minimal_generators = kunz.minimal_generators();
        Semigroup {
            kunz,
            frobenius,
            genus,
            minimal_generators,
        }
    }

    /// Build the semigroup generated by a set of coprime positive integers.
    ///
    /// The Apéry set with respect to the least generator `m` is computed by
    /// shortest-path relaxation over the residue classes modulo `m`: each
    /// generator `a` is an edge `c → (c + a) mod m` of weight `a`, and `w_i`
    /// is the least weight of a path from class 0 to class `i`. Positive
    /// weights guarantee convergence in at most `m - 1` rounds.
    pub fn from_generators(gens: &GeneratorSet) -> Result<Self> {
        let g = gens.gcd();
        if g != 1 {
            return Err(Error::NonCoprimeGenerators { gcd: g });
        }
        let m = gens.values()[0];
        if m == 1 {
            return Ok(Semigroup::from_kunz(KunzVector::new(1, Vec::new())?));
        }
        let mu = m as usize;
        let mut w = vec![i64::MAX; mu];
        w[0] = 0;
        for _round in 0..mu {
            let mut changed = false;
            for class in 0..mu {
                if w[class] == i64::MAX {
                    continue;
                }
                for &a in gens.values() {
                    let t = w[class].checked_add(a).ok_or(Error::Overflow)?;
                    if t > MAX_APERY {
                        return Err(Error::Overflow);
                    }
                    let r = (t % m) as usize;
                    if t < w[r] {
                        w[r] = t;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        debug_assert!(
            w.iter().all(|&v| v != i64::MAX),
            "gcd = 1 reaches every residue class"
        );
        let coords = (1..m).map(|i| (w[i as usize] - i) / m).collect();
        Ok(Semigroup::from_kunz(KunzVector::new(m, coords)?))
    }

    pub fn kunz(&self) -> &KunzVector {
        &self.kunz
    }

    pub fn multiplicity(&self) -> i64 {
        self.kunz.m()
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn minimal_generators(&self) -> &[i64] {
        &self.minimal_generators
    }

    pub fn contains(&self, n: i64) -> bool {
        self.kunz.contains(n)
    }

    pub fn gaps(&self) -> Vec<i64> {
        self.kunz.gaps()
    }

    /// Apéry set of the semigroup with respect to one of its nonzero
    /// elements `s`: the least element of each residue class modulo `s`,
    /// reported as `(w_0 = 0, w_1, …, w_{s-1})`.
    pub fn apery_set(&self, s: i64) -> Result<Vec<i64>> {
        if s < 1 || !self.contains(s) {
            return Err(Error::NotAnElement(s));
        }
        let f = self.frobenius;
        let mut apery = Vec::with_capacity(s as usize);
        for r in 0..s {
            let mut n = r;
            // Some n ≡ r with n <= F + s is always an element.
            while !self.contains(n) {
                n += s;
                debug_assert!(n <= f + s);
            }
            apery.push(n);
        }
        Ok(apery)
    }
}

impl fmt::Display for Semigroup {
    /// Rendered as `<a,b,c>` over the minimal generators.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", join(&self.minimal_generators))
    }
}
