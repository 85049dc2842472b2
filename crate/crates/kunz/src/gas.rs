//! Semigroups generated by generalized arithmetic sequences,
//! `⟨m, mh + d, mh + 2d, …, mh + kd⟩`, for multiplicities 3 and 4.
//!
//! The Apéry set of such a semigroup has the closed form
//! `w_((j·d) mod m) = m·h·⌈j/k⌉ + j·d` for `j = 1..m-1`, so the Kunz
//! coordinates are `x_((j·d) mod m) = h·⌈j/k⌉ + ⌊j·d/m⌋`. [`GasSpec::build`]
//! computes the vector this way and asserts it against the generic
//! generator-closure path.
//!
//! Irreducibility depends only on `k` and `h`:
//! - `m = 3`: irreducible iff `k = 1` (symmetric, `F = 6h + 2d - 3`) or
//!   `k = 2` and `h = 1` (pseudosymmetric, `F = 2d`);
//! - `m = 4`: irreducible iff `k ∈ {1, 2}` (symmetric), never for `k = 3`.
//!
//! The classification closed form is validated against
//! [`crate::engine::classify`] on a grid by the property suite.

use crate::engine;
use crate::error::{Error, Result};
use crate::semigroup::{gcd, GeneratorSet, KunzVector, Semigroup};

/// Parameters of a generalized arithmetic sequence
/// `m, mh + d, mh + 2d, …, mh + kd`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GasSpec {
    m: i64,
    h: i64,
    d: i64,
    k: i64,
}

/// Irreducibility flags of a generalized-arithmetic-sequence semigroup,
/// decided in closed form from the parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GasClassification {
    pub irreducible: bool,
    pub symmetric: bool,
    pub pseudosymmetric: bool,
}

impl GasSpec {
    /// Validate parameters: `m ∈ {3, 4}`, `h ≥ 1`, `d ≥ 1` coprime to `m`,
    /// `1 ≤ k ≤ m - 1`.
    pub fn new(m: i64, h: i64, d: i64, k: i64) -> Result<Self> {
        if m != 3 && m != 4 {
            return Err(Error::InvalidSpec(format!(
                "multiplicity must be 3 or 4, got {m}"
            )));
        }
        if h < 1 {
            return Err(Error::InvalidSpec(format!("h must be at least 1, got {h}")));
        }
        if d < 1 {
            return Err(Error::InvalidSpec(format!("d must be at least 1, got {d}")));
        }
        let g = gcd(d, m);
        if g != 1 {
            return Err(Error::InvalidSpec(format!(
                "d must be coprime to the multiplicity: gcd({d}, {m}) = {g}"
            )));
        }
        if !(1..m).contains(&k) {
            return Err(Error::InvalidSpec(format!(
                "k must lie in 1..={}, got {k}",
                m - 1
            )));
        }
        Ok(GasSpec { m, h, d, k })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn h(&self) -> i64 {
        self.h
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    /// Quotient `⌊d/m⌋`, the step of the coordinate closed form.
    pub fn d_quotient(&self) -> i64 {
        self.d.div_euclid(self.m)
    }

    /// The generating set `m, mh + d, …, mh + kd`.
    pub fn generators(&self) -> Result<GeneratorSet> {
        let base = self.m.checked_mul(self.h).ok_or(Error::Overflow)?;
        let mut values = vec![self.m];
        for j in 1..=self.k {
            let term = j
                .checked_mul(self.d)
                .and_then(|jd| base.checked_add(jd))
                .ok_or(Error::Overflow)?;
            values.push(term);
        }
        GeneratorSet::new(values)
    }

    /// Kunz coordinates by the Apéry closed form
    /// `x_((j·d) mod m) = h·⌈j/k⌉ + ⌊j·d/m⌋`.
    pub fn kunz_closed_form(&self) -> Result<KunzVector> {
        let mut coords = vec![0i64; self.m as usize - 1];
        for j in 1..self.m {
            let class = (j * self.d).rem_euclid(self.m);
            debug_assert!(class != 0, "gcd(d, m) = 1 keeps j·d off class zero");
            let layers = (j + self.k - 1).div_euclid(self.k);
            let value = self
                .h
                .checked_mul(layers)
                .and_then(|hl| j.checked_mul(self.d).map(|jd| (hl, jd.div_euclid(self.m))))
                .and_then(|(hl, floor)| hl.checked_add(floor))
                .ok_or(Error::Overflow)?;
            coords[class as usize - 1] = value;
        }
        KunzVector::new(self.m, coords)
    }

    /// Build the semigroup from the closed form, asserting agreement with
    /// the generic generator-closure path.
    pub fn build(&self) -> Result<Semigroup> {
        let kunz = self.kunz_closed_form()?;
        let from_generators = Semigroup::from_generators(&self.generators()?)?;
        assert_eq!(
            &kunz,
            from_generators.kunz(),
            "closed-form coordinates must match the generator closure"
        );
        Ok(from_generators)
    }

    /// Closed-form irreducibility flags (see module docs).
    pub fn classification(&self) -> GasClassification {
        let (irreducible, symmetric, pseudosymmetric) = match (self.m, self.k) {
            (3, 1) => (true, true, false),
            (3, 2) if self.h == 1 => (true, false, true),
            (3, 2) => (false, false, false),
            (4, 1) | (4, 2) => (true, true, false),
            (4, 3) => (false, false, false),
            _ => unreachable!("validated parameters"),
        };
        GasClassification {
            irreducible,
            symmetric,
            pseudosymmetric,
        }
    }
}

/// Closed-form classification checked against the general engine; used by
/// tests and the verification pass.
pub fn classification_matches_engine(spec: &GasSpec) -> Result<bool> {
    let built = spec.build()?;
    let classified = engine::classify(built.kunz())?;
    let closed = spec.classification();
    Ok(closed.irreducible == classified.irreducible
        && closed.symmetric == classified.symmetric
        && closed.pseudosymmetric == classified.pseudosymmetric)
}
