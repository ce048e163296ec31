//! Characters of the pure braided Thompson group, their Σ-invariants, and
//! finiteness properties of subgroups containing the commutator subgroup.
//!
//! Characters are written in the basis (φ₀, φ₁, ω₀, ω₁):
//! φ₀, φ₁ compare first- and last-leaf depths of the two trees, ω₀ is the
//! winding number of the outermost strands and ω₁ the sum of winding numbers
//! of neighbouring strands.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagram::{Diagram, GroupElement};
use crate::error::{Error, Result};

/// `a·φ₀ + b·φ₁ + c·ω₀ + d·ω₁` with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Character {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Character {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        Character { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Character::new(rat(a), rat(b), rat(c), rat(d))
    }

    pub fn phi0() -> Self {
        Character::from_ints(1, 0, 0, 0)
    }

    pub fn phi1() -> Self {
        Character::from_ints(0, 1, 0, 0)
    }

    pub fn omega0() -> Self {
        Character::from_ints(0, 0, 1, 0)
    }

    pub fn omega1() -> Self {
        Character::from_ints(0, 0, 0, 1)
    }

    /// Parses four rationals such as `"1"`, `"-2/3"`.
    pub fn parse(a: &str, b: &str, c: &str, d: &str) -> Result<Self> {
        let p = |s: &str| {
            BigRational::from_str(s.trim())
                .map_err(|_| Error::Parse(format!("not a rational: {s:?}")))
        };
        Ok(Character::new(p(a)?, p(b)?, p(c)?, p(d)?))
    }

    pub fn coefficients(&self) -> [&BigRational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients().iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, t: &BigRational) -> Character {
        Character::new(&self.a * t, &self.b * t, &self.c * t, &self.d * t)
    }

    pub fn neg(&self) -> Character {
        self.scale(&rat(-1))
    }

    pub fn value(&self, image: &AbelianImage) -> BigRational {
        self.coefficients()
            .iter()
            .zip(image.0)
            .map(|(x, v)| *x * rat(v))
            .fold(BigRational::zero(), |acc, t| acc + t)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.a, self.b, self.c, self.d)
    }
}

#[derive(Serialize, Deserialize)]
struct RawCharacter {
    a: String,
    b: String,
    c: String,
    d: String,
}

impl Serialize for Character {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawCharacter {
            a: self.a.to_string(),
            b: self.b.to_string(),
            c: self.c.to_string(),
            d: self.d.to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Character {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawCharacter::deserialize(d)?;
        Character::parse(&raw.a, &raw.b, &raw.c, &raw.d).map_err(serde::de::Error::custom)
    }
}

/// Values `(φ₀, φ₁, ω₀, ω₁)` of an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct AbelianImage(pub [i64; 4]);

impl AbelianImage {
    pub fn add(&self, other: &AbelianImage) -> AbelianImage {
        AbelianImage(std::array::from_fn(|i| self.0[i] + other.0[i]))
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }
}

/// The image of a pure element in the abelianization.
pub fn abelian_image(g: &GroupElement) -> Result<AbelianImage> {
    abelian_image_of_diagram(g.diagram())
}

/// The same values read off any single-tree representative.
pub fn abelian_image_of_diagram(d: &Diagram) -> Result<AbelianImage> {
    let braid = d.braid();
    if !braid.is_pure() {
        return Err(Error::NotPure);
    }
    let (Some(neg), Some(pos)) = (d.neg_tree(), d.pos_tree()) else {
        return Err(Error::ShapeMismatch(
            "characters are defined on single-tree diagrams".into(),
        ));
    };
    let phi0 = pos.left_depth() as i64 - neg.left_depth() as i64;
    let phi1 = pos.right_depth() as i64 - neg.right_depth() as i64;
    let n = braid.strands();
    let (mut omega0, mut omega1) = (0, 0);
    if n >= 2 {
        omega0 = braid.winding_number(1, n)?;
        for i in 1..n {
            omega1 += braid.winding_number(i, i + 1)?;
        }
    }
    Ok(AbelianImage([phi0, phi1, omega0, omega1]))
}

pub fn evaluate(chi: &Character, g: &GroupElement) -> Result<BigRational> {
    Ok(chi.value(&abelian_image(g)?))
}

/// Where a character sits relative to the exceptional arc `[φ₀, φ₁]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SigmaRegion {
    /// A positive multiple of φ₀.
    Phi0Ray,
    /// A positive multiple of φ₁.
    Phi1Ray,
    /// `aφ₀ + bφ₁` with `a, b > 0`.
    ConvexHull,
    Outside,
}

impl SigmaRegion {
    pub fn describe(self) -> &'static str {
        match self {
            SigmaRegion::Phi0Ray => "ray of phi0",
            SigmaRegion::Phi1Ray => "ray of phi1",
            SigmaRegion::ConvexHull => "convex hull of phi0 and phi1",
            SigmaRegion::Outside => "outside the convex hull",
        }
    }
}

pub fn sigma_region(chi: &Character) -> Result<SigmaRegion> {
    if chi.is_zero() {
        return Err(Error::ZeroCharacter);
    }
    if !chi.c.is_zero() || !chi.d.is_zero() {
        return Ok(SigmaRegion::Outside);
    }
    Ok(match (chi.a.signum(), chi.b.signum()) {
        (a, b) if a.is_positive() && b.is_zero() => SigmaRegion::Phi0Ray,
        (a, b) if a.is_zero() && b.is_positive() => SigmaRegion::Phi1Ray,
        (a, b) if a.is_positive() && b.is_positive() => SigmaRegion::ConvexHull,
        _ => SigmaRegion::Outside,
    })
}

/// Is `[χ] ∈ Σ^m`? The only exceptions are φ₀ and φ₁ for `m = 1`, and the
/// closed arc between them for `m ≥ 2`.
pub fn sigma_membership(chi: &Character, m: u32) -> Result<bool> {
    if m == 0 {
        return Err(Error::Precondition("m must be at least 1".into()));
    }
    let region = sigma_region(chi)?;
    Ok(match region {
        SigmaRegion::Outside => true,
        SigmaRegion::ConvexHull => m == 1,
        SigmaRegion::Phi0Ray | SigmaRegion::Phi1Ray => false,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "not_F1")]
    NotF1,
    #[serde(rename = "F1_not_F2")]
    F1NotF2,
    #[serde(rename = "F_infinity")]
    FInfinity,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::NotF1 => "not_F1",
            Verdict::F1NotF2 => "F1_not_F2",
            Verdict::FInfinity => "F_infinity",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FinitenessReport {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Character>,
}

/// Classifies `H ⊇ [Fbr, Fbr]` from the abelian images of generators of `H`.
///
/// Only characters killing `H` matter, and among those only the ones in
/// the φ₀–φ₁ plane can leave Σ¹ or Σ², so it suffices to find the kernel of
/// the generators' (φ₀, φ₁) coordinates.
pub fn subgroup_finiteness(gens: &[AbelianImage]) -> FinitenessReport {
    let rows: Vec<(i128, i128)> = gens
        .iter()
        .map(|g| (g.0[0] as i128, g.0[1] as i128))
        .filter(|&(x, y)| x != 0 || y != 0)
        .collect();
    let not_f1 = |w: Character| FinitenessReport {
        verdict: Verdict::NotF1,
        witness: Some(w),
    };
    let Some(&(p, q)) = rows.first() else {
        return not_f1(Character::phi0());
    };
    // the only candidate direction is orthogonal to the first nonzero row
    let (a, b) = (-q, p);
    if rows.iter().any(|&(x, y)| a * x + b * y != 0) {
        return FinitenessReport {
            verdict: Verdict::FInfinity,
            witness: None,
        };
    }
    let g = num_integer::gcd(a, b);
    let (a, b) = (a / g, b / g);
    if b == 0 {
        return not_f1(Character::phi0());
    }
    if a == 0 {
        return not_f1(Character::phi1());
    }
    if (a > 0) == (b > 0) {
        FinitenessReport {
            verdict: Verdict::F1NotF2,
            witness: Some(Character::from_ints(a.abs() as i64, b.abs() as i64, 0, 0)),
        }
    } else {
        FinitenessReport {
            verdict: Verdict::FInfinity,
            witness: None,
        }
    }
}

/// `χ` on the full twist `[T, Δ_n², T]`.
pub fn center_character_value(chi: &Character, n: usize) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::Precondition("center pairing needs n >= 2".into()));
    }
    Ok(&chi.c + &chi.d * rat(n as i64 - 1))
}
