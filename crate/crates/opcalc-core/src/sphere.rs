//! The exact-rational sphere operad.
//!
//! The `n`th space is the one-point compactification of the open
//! `(n−1)`-simplex: points are positive rational tuples summing to 1, plus a
//! basepoint `∞` that absorbs every operation. The operad composition maps
//! scale blocks and are bijections with exact inverses, so associativity and
//! equivariance are rational identities checked with zero tolerance.
//!
//! The cube model `S^n = ((0,1)^n)⁺` is connected to the simplex model by a
//! `Σ_n`-equivariant piecewise-linear gauge: `(s, x) ↦ x·s` lands in the
//! corner region `K = {y_i > 0, Σy_i < 1}`, and a center-to-center radial
//! gauge carries `K` onto the open cube. Everything stays rational.
//!
//! Map descriptors model the loops that stabilization acts on: identity,
//! coordinate permutations, basepoint collapse, composition, and the
//! stabilization construction itself, which conjugates a map by the
//! composition homeomorphisms of the operad and records the stage point it
//! was smashed with. Evaluation is exact; map equalities are checked
//! pointwise on rational samples and grids, never by extensionality.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::combinat::{enumerate_compositions, OrderedComposition, Permutation};
use crate::{Error, Result};

/// Exact rational scalar.
pub type Frac = BigRational;

/// Convenience constructor for small rationals.
pub fn frac(num: i64, den: i64) -> Frac {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses an exact fraction string such as `"1/3"` or `"2"`.
pub fn parse_frac(s: &str) -> Result<Frac> {
    BigRational::from_str(s)
        .map_err(|e| Error::InvalidData(format!("bad fraction {s:?}: {e}")))
}

fn frac_string(x: &Frac) -> String {
    x.to_string()
}

/// A point of the open simplex: positive coordinates with exact sum 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct SimplexPoint {
    coords: Vec<Frac>,
}

impl TryFrom<Vec<String>> for SimplexPoint {
    type Error = Error;
    fn try_from(v: Vec<String>) -> Result<Self> {
        let coords = v
            .iter()
            .map(|s| parse_frac(s))
            .collect::<Result<Vec<_>>>()?;
        SimplexPoint::new(coords)
    }
}

impl From<SimplexPoint> for Vec<String> {
    fn from(p: SimplexPoint) -> Vec<String> {
        p.coords.iter().map(frac_string).collect()
    }
}

impl SimplexPoint {
    pub fn new(coords: Vec<Frac>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidData("simplex point needs arity ≥ 1".into()));
        }
        if coords.iter().any(|c| !c.is_positive()) {
            return Err(Error::InvalidData(
                "simplex coordinates must be strictly positive".into(),
            ));
        }
        let sum: Frac = coords.iter().sum();
        if !sum.is_one() {
            return Err(Error::InvalidData(format!(
                "simplex coordinates must sum to 1 exactly, got {sum}"
            )));
        }
        Ok(SimplexPoint { coords })
    }

    /// Parses from fraction strings.
    pub fn parse(parts: &[&str]) -> Result<Self> {
        SimplexPoint::new(
            parts
                .iter()
                .map(|s| parse_frac(s))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// The barycenter `(1/n, …, 1/n)`.
    pub fn barycenter(n: usize) -> Self {
        let c = frac(1, n as i64);
        SimplexPoint {
            coords: vec![c; n],
        }
    }

    /// The unique point of the 0-sphere `𝐒_1`.
    pub fn unary() -> Self {
        SimplexPoint {
            coords: vec![Frac::one()],
        }
    }

    pub fn arity(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Frac] {
        &self.coords
    }
}

impl fmt::Display for SimplexPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(frac_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A point of the compactified simplex: either a simplex point or `∞`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpherePoint {
    Basepoint(BasepointTag),
    Point(SimplexPoint),
}

/// Serialization tag for the basepoint (`"inf"`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum BasepointTag {
    #[serde(rename = "inf")]
    Inf,
}

impl SpherePoint {
    pub fn basepoint() -> Self {
        SpherePoint::Basepoint(BasepointTag::Inf)
    }

    pub fn point(p: SimplexPoint) -> Self {
        SpherePoint::Point(p)
    }

    pub fn as_point(&self) -> Option<&SimplexPoint> {
        match self {
            SpherePoint::Point(p) => Some(p),
            SpherePoint::Basepoint(_) => None,
        }
    }

    pub fn is_basepoint(&self) -> bool {
        matches!(self, SpherePoint::Basepoint(_))
    }

    pub fn arity(&self) -> Option<usize> {
        self.as_point().map(SimplexPoint::arity)
    }
}

/// A point of a smash power `𝐒_n^U`: one simplex factor per index, all of a
/// common arity, or the collapsed basepoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SmashSpherePoint {
    Basepoint(BasepointTag),
    Factors(Vec<SimplexPoint>),
}

impl SmashSpherePoint {
    /// Collapses to the basepoint if any factor is `∞`.
    pub fn from_points(points: Vec<SpherePoint>) -> Result<Self> {
        let mut factors = Vec::with_capacity(points.len());
        for p in points {
            match p {
                SpherePoint::Basepoint(_) => return Ok(SmashSpherePoint::basepoint()),
                SpherePoint::Point(q) => factors.push(q),
            }
        }
        SmashSpherePoint::new(factors)
    }

    pub fn new(factors: Vec<SimplexPoint>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidData("empty smash factor list".into()));
        }
        let arity = factors[0].arity();
        if factors.iter().any(|f| f.arity() != arity) {
            return Err(Error::ArityMismatch(
                "smash factors must share one arity".into(),
            ));
        }
        Ok(SmashSpherePoint::Factors(factors))
    }

    pub fn basepoint() -> Self {
        SmashSpherePoint::Basepoint(BasepointTag::Inf)
    }

    pub fn factors(&self) -> Option<&[SimplexPoint]> {
        match self {
            SmashSpherePoint::Factors(f) => Some(f),
            SmashSpherePoint::Basepoint(_) => None,
        }
    }

    pub fn index_size(&self) -> Option<usize> {
        self.factors().map(<[SimplexPoint]>::len)
    }

    pub fn arity(&self) -> Option<usize> {
        self.factors().map(|f| f[0].arity())
    }
}

/// A point of the open cube `(0,1)^n`, or `∞`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CubePoint {
    Basepoint(BasepointTag),
    Coords(CubeCoords),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct CubeCoords {
    coords: Vec<Frac>,
}

impl TryFrom<Vec<String>> for CubeCoords {
    type Error = Error;
    fn try_from(v: Vec<String>) -> Result<Self> {
        let coords = v
            .iter()
            .map(|s| parse_frac(s))
            .collect::<Result<Vec<_>>>()?;
        CubeCoords::new(coords)
    }
}

impl From<CubeCoords> for Vec<String> {
    fn from(c: CubeCoords) -> Vec<String> {
        c.coords.iter().map(frac_string).collect()
    }
}

impl CubeCoords {
    pub fn new(coords: Vec<Frac>) -> Result<Self> {
        let one = Frac::one();
        if coords
            .iter()
            .any(|z| !z.is_positive() || *z >= one)
        {
            return Err(Error::InvalidData(
                "cube coordinates must lie strictly in (0,1)".into(),
            ));
        }
        Ok(CubeCoords { coords })
    }

    pub fn coords(&self) -> &[Frac] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// Operad composition: scales block `i` of the output by `s_i`. Any `∞`
/// input absorbs. The output is automatically a valid simplex point.
pub fn gamma(s: &SpherePoint, ts: &[SpherePoint]) -> Result<SpherePoint> {
    let sp = match s.as_point() {
        None => return Ok(SpherePoint::basepoint()),
        Some(p) => p,
    };
    if sp.arity() != ts.len() {
        return Err(Error::ArityMismatch(format!(
            "outer arity {} with {} inner points",
            sp.arity(),
            ts.len()
        )));
    }
    let mut coords = Vec::new();
    for (si, t) in sp.coords().iter().zip(ts) {
        match t.as_point() {
            None => return Ok(SpherePoint::basepoint()),
            Some(tp) => {
                for tl in tp.coords() {
                    coords.push(si * tl);
                }
            }
        }
    }
    Ok(SpherePoint::Point(SimplexPoint { coords }))
}

/// The exact inverse of [`gamma`] for a given block structure: outer
/// coordinates are block sums, inner points are blocks renormalized.
/// Positivity is automatic from the input invariants.
pub fn gamma_inv(
    u: &SimplexPoint,
    blocks: &OrderedComposition,
) -> Result<(SimplexPoint, Vec<SimplexPoint>)> {
    if blocks.total() != u.arity() {
        return Err(Error::ArityMismatch(format!(
            "blocks sum to {} but the point has arity {}",
            blocks.total(),
            u.arity()
        )));
    }
    let mut outer = Vec::with_capacity(blocks.parts().len());
    let mut inners = Vec::with_capacity(blocks.parts().len());
    let mut off = 0;
    for &j in blocks.parts() {
        let block = &u.coords()[off..off + j];
        let s: Frac = block.iter().sum();
        inners.push(SimplexPoint {
            coords: block.iter().map(|c| c / &s).collect(),
        });
        outer.push(s);
        off += j;
    }
    Ok((SimplexPoint { coords: outer }, inners))
}

/// Coordinate permutation: the image of coordinate `i` sits at `σ(i)`. `∞`
/// is fixed. This is a left action.
pub fn permute(sigma: &Permutation, p: &SpherePoint) -> Result<SpherePoint> {
    let sp = match p.as_point() {
        None => return Ok(SpherePoint::basepoint()),
        Some(q) => q,
    };
    if sigma.size() != sp.arity() {
        return Err(Error::SizeMismatch {
            expected: sp.arity(),
            found: sigma.size(),
        });
    }
    let mut coords = vec![Frac::zero(); sp.arity()];
    for (i, c) in sp.coords().iter().enumerate() {
        coords[sigma.apply(i + 1) - 1] = c.clone();
    }
    Ok(SpherePoint::Point(SimplexPoint { coords }))
}

/// Factorwise composition of smash powers over a common index set; the
/// coordinate shuffle is implicit in applying `γ` factor by factor.
pub fn smash_gamma(
    s: &SmashSpherePoint,
    ts: &[SmashSpherePoint],
) -> Result<SmashSpherePoint> {
    let sf = match s.factors() {
        None => return Ok(SmashSpherePoint::basepoint()),
        Some(f) => f,
    };
    let u = sf.len();
    let mut t_factors = Vec::with_capacity(ts.len());
    for t in ts {
        match t.factors() {
            None => return Ok(SmashSpherePoint::basepoint()),
            Some(f) => {
                if f.len() != u {
                    return Err(Error::IndexMismatch(format!(
                        "factor indexed by {} elements among factors indexed by {u}",
                        f.len()
                    )));
                }
                t_factors.push(f);
            }
        }
    }
    let mut out = Vec::with_capacity(u);
    for i in 0..u {
        let inner: Vec<SpherePoint> = t_factors
            .iter()
            .map(|f| SpherePoint::Point(f[i].clone()))
            .collect();
        match gamma(&SpherePoint::Point(sf[i].clone()), &inner)? {
            SpherePoint::Point(p) => out.push(p),
            SpherePoint::Basepoint(_) => return Ok(SmashSpherePoint::basepoint()),
        }
    }
    SmashSpherePoint::new(out)
}

/// Boundary-hit parameter of the corner region `K = {y_i > 0, Σ y_i < 1}`
/// from its center along direction `d`: the largest `λ` with
/// `center + λ·d ∈ closure(K)`. `None` when `d = 0`.
fn lambda_corner(n: usize, d: &[Frac]) -> Option<Frac> {
    let center = frac(1, (n + 1) as i64);
    let mut best: Option<Frac> = None;
    let mut consider = |candidate: Frac| match &best {
        None => best = Some(candidate),
        Some(b) if candidate < *b => best = Some(candidate),
        _ => {}
    };
    for di in d {
        if di.is_negative() {
            consider(&center / &(-di.clone()));
        }
    }
    let dsum: Frac = d.iter().sum();
    if dsum.is_positive() {
        // Distance from the center to the facet Σy = 1 is 1/(n+1).
        consider(&center / &dsum);
    }
    best
}

/// Boundary-hit parameter of the open cube `(0,1)^n` from its center.
fn lambda_cube(d: &[Frac]) -> Option<Frac> {
    let half = frac(1, 2);
    let mut best: Option<Frac> = None;
    for di in d {
        if di.is_zero() {
            continue;
        }
        let candidate = &half / &di.abs();
        match &best {
            None => best = Some(candidate),
            Some(b) if candidate < *b => best = Some(candidate),
            _ => {}
        }
    }
    best
}

fn corner_center(n: usize) -> Vec<Frac> {
    vec![frac(1, (n + 1) as i64); n]
}

fn cube_center(n: usize) -> Vec<Frac> {
    vec![frac(1, 2); n]
}

/// The center-to-center radial gauge `K → (0,1)^n`: a point at relative
/// radius `ρ` along a ray maps to relative radius `ρ` along the same ray.
fn gauge_corner_to_cube(n: usize, y: &[Frac]) -> Vec<Frac> {
    let ck = corner_center(n);
    let d: Vec<Frac> = y.iter().zip(&ck).map(|(a, b)| a - b).collect();
    let (lk, lc) = match (lambda_corner(n, &d), lambda_cube(&d)) {
        (Some(lk), Some(lc)) => (lk, lc),
        _ => return cube_center(n),
    };
    let scale = lc / lk;
    cube_center(n)
        .iter()
        .zip(&d)
        .map(|(c, di)| c + &scale * di)
        .collect()
}

fn gauge_cube_to_corner(n: usize, z: &[Frac]) -> Vec<Frac> {
    let cc = cube_center(n);
    let d: Vec<Frac> = z.iter().zip(&cc).map(|(a, b)| a - b).collect();
    let (lk, lc) = match (lambda_corner(n, &d), lambda_cube(&d)) {
        (Some(lk), Some(lc)) => (lk, lc),
        _ => return corner_center(n),
    };
    let scale = lk / lc;
    corner_center(n)
        .iter()
        .zip(&d)
        .map(|(c, di)| c + &scale * di)
        .collect()
}

/// The adjoint homeomorphism toward the cube model: `(s, x) ↦ x·s` into the
/// corner region, then the radial gauge onto the open cube. Basepoints map
/// to `∞`. Bijective with exact rational inverse ([`coend_adjoint_inv`]),
/// and `Σ_n`-equivariant.
pub fn coend_adjoint(s: &SpherePoint, x: Option<&Frac>) -> Result<CubePoint> {
    let (sp, x) = match (s.as_point(), x) {
        (Some(sp), Some(x)) => (sp, x),
        _ => return Ok(CubePoint::Basepoint(BasepointTag::Inf)),
    };
    if !x.is_positive() || *x >= Frac::one() {
        return Err(Error::InvalidData(format!(
            "interval coordinate must lie in (0,1), got {x}"
        )));
    }
    let n = sp.arity();
    let y: Vec<Frac> = sp.coords().iter().map(|c| c * x).collect();
    let z = gauge_corner_to_cube(n, &y);
    Ok(CubePoint::Coords(CubeCoords::new(z)?))
}

/// Exact inverse of [`coend_adjoint`].
pub fn coend_adjoint_inv(z: &CubePoint) -> Result<(SpherePoint, Option<Frac>)> {
    let zc = match z {
        CubePoint::Basepoint(_) => return Ok((SpherePoint::basepoint(), None)),
        CubePoint::Coords(c) => c,
    };
    let n = zc.dim();
    let y = gauge_cube_to_corner(n, zc.coords());
    let x: Frac = y.iter().sum();
    let s: Vec<Frac> = y.iter().map(|yi| yi / &x).collect();
    Ok((SpherePoint::Point(SimplexPoint::new(s)?), Some(x)))
}

/// A based self-map of a smash of simplex spheres, as a composition tree.
/// Evaluation is exact on rational points; no extensionality is claimed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapDescriptor {
    /// The identity on `coords` smash factors.
    Identity { coords: usize },
    /// Permutes the smash factors (factor `i` moves to `σ(i)`).
    CoordPerm { perm: Permutation },
    /// The basepoint-constant map.
    Collapse { coords: usize },
    /// Apply the first map, then the second.
    Compose(Box<MapDescriptor>, Box<MapDescriptor>),
    /// The stabilization of `inner` along `j`-fold block structure, smashed
    /// with the recorded stage point of `𝐒_j^U`. Evaluation decomposes each
    /// factor with `gamma_inv`, applies `inner` to each of the `j` extracted
    /// copies, and recomposes with `gamma` at the decomposed outer points.
    Stabilized {
        inner: Box<MapDescriptor>,
        j: usize,
        stage: SmashSpherePoint,
    },
}

impl MapDescriptor {
    /// Number of smash factors the map acts on.
    pub fn coords(&self) -> usize {
        match self {
            MapDescriptor::Identity { coords } | MapDescriptor::Collapse { coords } => *coords,
            MapDescriptor::CoordPerm { perm } => perm.size(),
            MapDescriptor::Compose(f, _) => f.coords(),
            MapDescriptor::Stabilized { inner, .. } => inner.coords(),
        }
    }

    /// Evaluates on one sphere point per factor; a basepoint anywhere
    /// collapses the whole smash point.
    pub fn eval(&self, input: &[SpherePoint]) -> Result<Vec<SpherePoint>> {
        let k = self.coords();
        if input.len() != k {
            return Err(Error::TypeMismatch(format!(
                "map on {k} factors applied to {} factors",
                input.len()
            )));
        }
        if input.iter().any(SpherePoint::is_basepoint) {
            return Ok(vec![SpherePoint::basepoint(); k]);
        }
        match self {
            MapDescriptor::Identity { .. } => Ok(input.to_vec()),
            MapDescriptor::Collapse { .. } => Ok(vec![SpherePoint::basepoint(); k]),
            MapDescriptor::CoordPerm { perm } => {
                let arity0 = input[0].arity();
                if input.iter().any(|p| p.arity() != arity0) {
                    return Err(Error::TypeMismatch(
                        "coordinate permutation needs factors of equal arity".into(),
                    ));
                }
                let mut out = vec![SpherePoint::basepoint(); k];
                for (i, p) in input.iter().enumerate() {
                    out[perm.apply(i + 1) - 1] = p.clone();
                }
                Ok(out)
            }
            MapDescriptor::Compose(f, g) => {
                let mid = f.eval(input)?;
                g.eval(&mid)
            }
            MapDescriptor::Stabilized { inner, j, .. } => {
                // Decompose each factor into j equal blocks.
                let mut outers: Vec<SimplexPoint> = Vec::with_capacity(k);
                let mut pieces: Vec<Vec<SimplexPoint>> = Vec::with_capacity(k);
                for p in input {
                    let sp = p.as_point().expect("basepoint handled above");
                    if sp.arity() % j != 0 {
                        return Err(Error::TypeMismatch(format!(
                            "factor arity {} not divisible by j = {j}",
                            sp.arity()
                        )));
                    }
                    let m = sp.arity() / j;
                    let blocks = OrderedComposition::new(vec![m; *j])?;
                    let (o, t) = gamma_inv(sp, &blocks)?;
                    outers.push(o);
                    pieces.push(t);
                }
                // Apply the inner map to each extracted copy.
                let mut copies_out: Vec<Vec<SpherePoint>> = Vec::with_capacity(*j);
                for copy in 0..*j {
                    let x: Vec<SpherePoint> = pieces
                        .iter()
                        .map(|t| SpherePoint::Point(t[copy].clone()))
                        .collect();
                    let y = inner.eval(&x)?;
                    if y.iter().any(SpherePoint::is_basepoint) {
                        return Ok(vec![SpherePoint::basepoint(); k]);
                    }
                    copies_out.push(y);
                }
                // Recompose slotwise: the smash factor 𝐒_j^U is untouched by
                // the inner map, so each slot keeps its own outer point.
                let mut out = Vec::with_capacity(k);
                for v in 0..k {
                    let inner_points: Vec<SpherePoint> =
                        copies_out.iter().map(|y| y[v].clone()).collect();
                    out.push(gamma(
                        &SpherePoint::Point(outers[v].clone()),
                        &inner_points,
                    )?);
                }
                Ok(out)
            }
        }
    }

    /// The accumulated stage point of a tower of stabilizations: the
    /// recorded stage smashed onto the inner one through `γ`, factorwise.
    /// `None` for composites whose stage is not defined.
    pub fn stage(&self) -> Option<SmashSpherePoint> {
        match self {
            MapDescriptor::Identity { coords }
            | MapDescriptor::Collapse { coords } => Some(SmashSpherePoint::Factors(vec![
                SimplexPoint::unary();
                *coords
            ])),
            MapDescriptor::CoordPerm { perm } => Some(SmashSpherePoint::Factors(vec![
                SimplexPoint::unary();
                perm.size()
            ])),
            MapDescriptor::Compose(_, _) => None,
            MapDescriptor::Stabilized { inner, j, stage } => {
                let inner_stage = inner.stage()?;
                let copies = vec![inner_stage; *j];
                smash_gamma(stage, &copies).ok()
            }
        }
    }
}

/// Builds the stabilization of `f` along `j` blocks at the stage point `s`.
pub fn stabilize(f: &MapDescriptor, j: usize, s: &SmashSpherePoint) -> Result<MapDescriptor> {
    if j == 0 {
        return Err(Error::InvalidData("j must be positive".into()));
    }
    let factors = s
        .factors()
        .ok_or_else(|| Error::InvalidData("stage point must not be the basepoint".into()))?;
    if factors.len() != f.coords() {
        return Err(Error::TypeMismatch(format!(
            "stage indexed by {} factors for a map on {} factors",
            factors.len(),
            f.coords()
        )));
    }
    if factors.iter().any(|p| p.arity() != j) {
        return Err(Error::TypeMismatch(format!(
            "stage factors must have arity {j}"
        )));
    }
    Ok(MapDescriptor::Stabilized {
        inner: Box::new(f.clone()),
        j,
        stage: s.clone(),
    })
}

/// Pass/fail accounting for the sampled exact checks of this module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereCheckReport {
    pub checked: u64,
    pub failures: u64,
    pub witness: Option<String>,
}

impl SphereCheckReport {
    pub fn new() -> Self {
        SphereCheckReport {
            checked: 0,
            failures: 0,
            witness: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }
}

impl Default for SphereCheckReport {
    fn default() -> Self {
        SphereCheckReport::new()
    }
}

/// Uniform random positive-weight simplex point with weights up to
/// `max_weight`.
pub fn sample_simplex<R: Rng>(rng: &mut R, arity: usize, max_weight: u32) -> SimplexPoint {
    let weights: Vec<i64> = (0..arity)
        .map(|_| i64::from(rng.gen_range(1..=max_weight)))
        .collect();
    let total: i64 = weights.iter().sum();
    SimplexPoint {
        coords: weights
            .into_iter()
            .map(|w| frac(w, total))
            .collect(),
    }
}

/// Random rational in the open unit interval with denominator up to
/// `max_den`.
pub fn sample_unit_interval<R: Rng>(rng: &mut R, max_den: u32) -> Frac {
    let den = rng.gen_range(2..=max_den.max(2));
    let num = rng.gen_range(1..den);
    frac(i64::from(num), i64::from(den))
}

/// All simplex points of the given arity with common denominator up to
/// `max_den` (numerators ≥ 1).
pub fn simplex_grid(arity: usize, max_den: usize) -> Vec<SimplexPoint> {
    let mut out = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for den in arity..=max_den {
        for comp in enumerate_compositions(den, arity) {
            let p = SimplexPoint {
                coords: comp
                    .parts()
                    .iter()
                    .map(|&a| frac(a as i64, den as i64))
                    .collect(),
            };
            // Non-reduced weight vectors repeat points ((1,1) and (2,2)
            // both give the barycenter); keep one copy.
            if seen.insert(p.clone()) {
                out.push(p);
            }
        }
    }
    out
}

/// Report of the `𝐒₂ ∧ 𝐒₂ ∧ 𝐒₁ ≅ 𝐒₃` tower example: the two-step
/// decompose/recompose route agrees with the one-step route, the extracted
/// outer points satisfy the flattening identity, the stage points compose
/// through `γ` to the expected value, and the collapsed and permuted
/// variants behave as they must.
pub fn reproduce_tower_example() -> Result<SphereCheckReport> {
    let mut report = SphereCheckReport::new();
    let a = SimplexPoint::parse(&["1/2", "1/2"])?;
    let b = SimplexPoint::parse(&["1/2", "1/2"])?;
    let c = SimplexPoint::unary();

    // Stage algebra: γ(a; b, c) = (1/4, 1/4, 1/2).
    let composite_stage = gamma(
        &SpherePoint::Point(a.clone()),
        &[SpherePoint::Point(b.clone()), SpherePoint::Point(c.clone())],
    )?;
    let expected = SimplexPoint::parse(&["1/4", "1/4", "1/2"])?;
    report.record(
        composite_stage == SpherePoint::Point(expected.clone()),
        || format!("stage composite mismatch: {composite_stage:?}"),
    );

    for m in 1..=3usize {
        for w in simplex_grid(3 * m, 3 * m + 3) {
            // Two-step route: split (2m, m), then split the first piece
            // (m, m); the identity map acts on all pieces; recompose.
            let blocks_outer = OrderedComposition::new(vec![2 * m, m])?;
            let (o, ys) = gamma_inv(&w, &blocks_outer)?;
            let blocks_inner = OrderedComposition::new(vec![m, m])?;
            let (p, ts) = gamma_inv(&ys[0], &blocks_inner)?;
            let y1 = gamma(
                &SpherePoint::Point(p.clone()),
                &[
                    SpherePoint::Point(ts[0].clone()),
                    SpherePoint::Point(ts[1].clone()),
                ],
            )?;
            let two_step = gamma(
                &SpherePoint::Point(o.clone()),
                &[y1, SpherePoint::Point(ys[1].clone())],
            )?;

            // One-step route: split (m, m, m) and recompose.
            let blocks_flat = OrderedComposition::new(vec![m, m, m])?;
            let (q, us) = gamma_inv(&w, &blocks_flat)?;
            let one_step = gamma(
                &SpherePoint::Point(q.clone()),
                &us.iter()
                    .map(|t| SpherePoint::Point(t.clone()))
                    .collect::<Vec<_>>(),
            )?;

            let w_point = SpherePoint::Point(w.clone());
            report.record(two_step == w_point, || {
                format!("two-step route moved the point {w}")
            });
            report.record(one_step == w_point, || {
                format!("one-step route moved the point {w}")
            });

            // Flattening: the nested outer points compose to the flat one.
            let flattened = gamma(
                &SpherePoint::Point(o.clone()),
                &[
                    SpherePoint::Point(p.clone()),
                    SpherePoint::Point(SimplexPoint::unary()),
                ],
            )?;
            report.record(flattened == SpherePoint::Point(q.clone()), || {
                format!("outer flattening failed at {w}")
            });
        }
    }

    // Degenerate map: the basepoint-constant descriptor stays constant
    // through stabilization.
    let collapse = MapDescriptor::Collapse { coords: 1 };
    let stage3 = SmashSpherePoint::new(vec![expected.clone()])?;
    let stabilized = stabilize(&collapse, 3, &stage3)?;
    for w in simplex_grid(3, 6) {
        let out = stabilized.eval(&[SpherePoint::Point(w.clone())])?;
        report.record(out[0].is_basepoint(), || {
            format!("collapsed map produced a point at {w}")
        });
    }

    // Permuted variant: a swap inserted on the inner points agrees after
    // the induced block permutation on the output.
    let swap = Permutation::new(vec![2, 1])?;
    let block_perm = Permutation::block_permutation(&swap, &[2, 1]);
    let lhs = gamma(
        &permute(&swap, &SpherePoint::Point(a.clone()))?,
        &[SpherePoint::Point(c.clone()), SpherePoint::Point(b.clone())],
    )?;
    let rhs = permute(
        &block_perm,
        &gamma(
            &SpherePoint::Point(a),
            &[SpherePoint::Point(b), SpherePoint::Point(c)],
        )?,
    )?;
    report.record(lhs == rhs, || "permuted variant mismatch".to_string());

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn pt(parts: &[&str]) -> SpherePoint {
        SpherePoint::Point(SimplexPoint::parse(parts).unwrap())
    }

    #[test]
    fn gamma_block_products() {
        let out = gamma(&pt(&["1/2", "1/2"]), &[pt(&["1"]), pt(&["1/3", "2/3"])]).unwrap();
        assert_eq!(out, pt(&["1/2", "1/6", "1/3"]));
    }

    #[test]
    fn gamma_unary_unit() {
        let t = pt(&["2/5", "1/5", "2/5"]);
        assert_eq!(gamma(&pt(&["1"]), &[t.clone()]).unwrap(), t);
        // Unit points inside: gamma(s; 1, ..., 1) = s.
        let s = pt(&["1/4", "3/4"]);
        assert_eq!(gamma(&s, &[pt(&["1"]), pt(&["1"])]).unwrap(), s);
    }

    #[test]
    fn gamma_basepoint_absorbs() {
        let inf = SpherePoint::basepoint();
        assert!(gamma(&inf, &[]).unwrap().is_basepoint());
        assert!(gamma(&pt(&["1/2", "1/2"]), &[pt(&["1"]), inf])
            .unwrap()
            .is_basepoint());
    }

    #[test]
    fn gamma_arity_mismatch() {
        assert!(gamma(&pt(&["1/2", "1/2"]), &[pt(&["1"])]).is_err());
    }

    #[test]
    fn gamma_inv_round_trip_example() {
        let u = SimplexPoint::parse(&["1/2", "1/6", "1/3"]).unwrap();
        let blocks = OrderedComposition::new(vec![1, 2]).unwrap();
        let (s, ts) = gamma_inv(&u, &blocks).unwrap();
        assert_eq!(s, SimplexPoint::parse(&["1/2", "1/2"]).unwrap());
        assert_eq!(ts[0], SimplexPoint::parse(&["1"]).unwrap());
        assert_eq!(ts[1], SimplexPoint::parse(&["1/3", "2/3"]).unwrap());
        let back = gamma(
            &SpherePoint::Point(s),
            &ts.into_iter().map(SpherePoint::Point).collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(back, SpherePoint::Point(u));
    }

    #[test]
    fn gamma_inv_trivial_blocks() {
        let u = SimplexPoint::parse(&["1/2", "1/6", "1/3"]).unwrap();
        let whole = OrderedComposition::new(vec![3]).unwrap();
        let (s, ts) = gamma_inv(&u, &whole).unwrap();
        assert_eq!(s, SimplexPoint::unary());
        assert_eq!(ts[0], u);
        let singles = OrderedComposition::new(vec![1, 1, 1]).unwrap();
        let (s, ts) = gamma_inv(&u, &singles).unwrap();
        assert_eq!(s, u);
        assert!(ts.iter().all(|t| *t == SimplexPoint::unary()));
    }

    #[test]
    fn gamma_associativity_sampled() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let k = rng.gen_range(1..=3usize);
            let s = sample_simplex(&mut rng, k, 9);
            let js: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=3usize)).collect();
            let ts: Vec<SimplexPoint> =
                js.iter().map(|&j| sample_simplex(&mut rng, j, 9)).collect();
            let ls: Vec<Vec<usize>> = js
                .iter()
                .map(|&j| (0..j).map(|_| rng.gen_range(1..=2usize)).collect())
                .collect();
            let us: Vec<Vec<SimplexPoint>> = ls
                .iter()
                .map(|l| l.iter().map(|&d| sample_simplex(&mut rng, d, 9)).collect())
                .collect();
            // Route 1: gamma(gamma(s; t); all u) flattened.
            let st = gamma(
                &SpherePoint::Point(s.clone()),
                &ts.iter()
                    .map(|t| SpherePoint::Point(t.clone()))
                    .collect::<Vec<_>>(),
            )
            .unwrap();
            let flat_u: Vec<SpherePoint> = us
                .iter()
                .flat_map(|block| block.iter().map(|u| SpherePoint::Point(u.clone())))
                .collect();
            let route1 = gamma(&st, &flat_u).unwrap();
            // Route 2: gamma(s; gamma(t_i; u-block_i)).
            let collapsed: Vec<SpherePoint> = ts
                .iter()
                .zip(&us)
                .map(|(t, block)| {
                    gamma(
                        &SpherePoint::Point(t.clone()),
                        &block
                            .iter()
                            .map(|u| SpherePoint::Point(u.clone()))
                            .collect::<Vec<_>>(),
                    )
                    .unwrap()
                })
                .collect();
            let route2 = gamma(&SpherePoint::Point(s), &collapsed).unwrap();
            assert_eq!(route1, route2);
        }
    }

    #[test]
    fn permute_examples() {
        let swap = Permutation::new(vec![2, 1]).unwrap();
        assert_eq!(
            permute(&swap, &pt(&["1/3", "2/3"])).unwrap(),
            pt(&["2/3", "1/3"])
        );
        let id = Permutation::identity(2);
        let p = pt(&["1/4", "3/4"]);
        assert_eq!(permute(&id, &p).unwrap(), p);
        assert!(permute(&swap, &SpherePoint::basepoint())
            .unwrap()
            .is_basepoint());
    }

    #[test]
    fn permute_is_left_action() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for sigma in Permutation::enumerate(3) {
            for rho in Permutation::enumerate(3) {
                let p = SpherePoint::Point(sample_simplex(&mut rng, 3, 7));
                let step = permute(&rho, &permute(&sigma, &p).unwrap()).unwrap();
                let direct = permute(&rho.compose(&sigma), &p).unwrap();
                assert_eq!(step, direct);
            }
        }
    }

    #[test]
    fn gamma_equivariance_sampled() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let k = rng.gen_range(1..=3usize);
            let s = sample_simplex(&mut rng, k, 9);
            let js: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=3usize)).collect();
            let ts: Vec<SimplexPoint> =
                js.iter().map(|&j| sample_simplex(&mut rng, j, 9)).collect();
            for tau in Permutation::enumerate(k) {
                let tau_inv = tau.inverse();
                let permuted_inner: Vec<SpherePoint> = (1..=k)
                    .map(|t| SpherePoint::Point(ts[tau_inv.apply(t) - 1].clone()))
                    .collect();
                let lhs = gamma(&permute(&tau, &SpherePoint::Point(s.clone())).unwrap(), &permuted_inner)
                    .unwrap();
                let base = gamma(
                    &SpherePoint::Point(s.clone()),
                    &ts.iter()
                        .map(|t| SpherePoint::Point(t.clone()))
                        .collect::<Vec<_>>(),
                )
                .unwrap();
                let rhs = permute(&Permutation::block_permutation(&tau, &js), &base).unwrap();
                assert_eq!(lhs, rhs);
            }
            // Inner equivariance per slot.
            for slot in 0..k {
                let j = js[slot];
                for rho in Permutation::enumerate(j) {
                    let mut moved = ts.clone();
                    moved[slot] = match permute(&rho, &SpherePoint::Point(ts[slot].clone()))
                        .unwrap()
                    {
                        SpherePoint::Point(p) => p,
                        SpherePoint::Basepoint(_) => unreachable!(),
                    };
                    let lhs = gamma(
                        &SpherePoint::Point(s.clone()),
                        &moved
                            .iter()
                            .map(|t| SpherePoint::Point(t.clone()))
                            .collect::<Vec<_>>(),
                    )
                    .unwrap();
                    let mut sum_parts: Vec<Permutation> =
                        js.iter().map(|&p| Permutation::identity(p)).collect();
                    sum_parts[slot] = rho.clone();
                    let rhs = permute(
                        &Permutation::block_sum(&sum_parts),
                        &gamma(
                            &SpherePoint::Point(s.clone()),
                            &ts.iter()
                                .map(|t| SpherePoint::Point(t.clone()))
                                .collect::<Vec<_>>(),
                        )
                        .unwrap(),
                    )
                    .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn smash_gamma_reduces_to_gamma_on_one_index() {
        let s = SmashSpherePoint::new(vec![SimplexPoint::parse(&["1/2", "1/2"]).unwrap()]).unwrap();
        let t1 = SmashSpherePoint::new(vec![SimplexPoint::unary()]).unwrap();
        let t2 =
            SmashSpherePoint::new(vec![SimplexPoint::parse(&["1/3", "2/3"]).unwrap()]).unwrap();
        let out = smash_gamma(&s, &[t1, t2]).unwrap();
        assert_eq!(
            out.factors().unwrap()[0],
            SimplexPoint::parse(&["1/2", "1/6", "1/3"]).unwrap()
        );
    }

    #[test]
    fn smash_gamma_componentwise_and_basepoint() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let s_f: Vec<SimplexPoint> = (0..2).map(|_| sample_simplex(&mut rng, 2, 7)).collect();
        let t_f: Vec<SimplexPoint> = (0..2).map(|_| sample_simplex(&mut rng, 2, 7)).collect();
        let u_f: Vec<SimplexPoint> = (0..2).map(|_| sample_simplex(&mut rng, 1, 7)).collect();
        let s = SmashSpherePoint::new(s_f.clone()).unwrap();
        let t = SmashSpherePoint::new(t_f.clone()).unwrap();
        let u = SmashSpherePoint::new(u_f.clone()).unwrap();
        let out = smash_gamma(&s, &[t, u]).unwrap();
        for i in 0..2 {
            let expect = gamma(
                &SpherePoint::Point(s_f[i].clone()),
                &[
                    SpherePoint::Point(t_f[i].clone()),
                    SpherePoint::Point(u_f[i].clone()),
                ],
            )
            .unwrap();
            assert_eq!(SpherePoint::Point(out.factors().unwrap()[i].clone()), expect);
        }
        let bp = SmashSpherePoint::basepoint();
        assert!(smash_gamma(&s, &[bp, SmashSpherePoint::new(u_f).unwrap()])
            .unwrap()
            .factors()
            .is_none());
    }

    #[test]
    fn smash_gamma_index_mismatch() {
        let s = SmashSpherePoint::new(vec![SimplexPoint::unary()]).unwrap();
        let t = SmashSpherePoint::new(vec![SimplexPoint::unary(), SimplexPoint::unary()]).unwrap();
        assert!(smash_gamma(&s, &[t]).is_err());
    }

    #[test]
    fn coend_adjoint_dim1_is_identity_gauge() {
        // K and the cube coincide for n = 1, so (s,x) -> x exactly.
        for num in 1..=5i64 {
            let x = frac(num, 6);
            let z = coend_adjoint(&pt(&["1"]), Some(&x)).unwrap();
            match &z {
                CubePoint::Coords(c) => assert_eq!(c.coords()[0], x),
                CubePoint::Basepoint(_) => panic!("unexpected basepoint"),
            }
            let (s, xi) = coend_adjoint_inv(&z).unwrap();
            assert_eq!(s, pt(&["1"]));
            assert_eq!(xi.unwrap(), x);
        }
    }

    #[test]
    fn coend_adjoint_round_trip_sampled() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..300 {
            let n = rng.gen_range(1..=4usize);
            let s = sample_simplex(&mut rng, n, 9);
            let x = sample_unit_interval(&mut rng, 9);
            let z = coend_adjoint(&SpherePoint::Point(s.clone()), Some(&x)).unwrap();
            let (s2, x2) = coend_adjoint_inv(&z).unwrap();
            assert_eq!(s2, SpherePoint::Point(s));
            assert_eq!(x2.unwrap(), x);
        }
    }

    #[test]
    fn coend_adjoint_injective_on_grid() {
        let mut seen = std::collections::BTreeSet::new();
        for s in simplex_grid(2, 5) {
            for num in 1..=3i64 {
                let x = frac(num, 4);
                let z = coend_adjoint(&SpherePoint::Point(s.clone()), Some(&x)).unwrap();
                let key = format!("{z:?}");
                assert!(seen.insert(key), "collision at {s}, {x}");
            }
        }
    }

    #[test]
    fn coend_adjoint_barycenter_hits_diagonal() {
        for n in 1..=4usize {
            let s = SimplexPoint::barycenter(n);
            for num in 1..=4i64 {
                let x = frac(num, 5);
                let z = coend_adjoint(&SpherePoint::Point(s.clone()), Some(&x)).unwrap();
                match z {
                    CubePoint::Coords(c) => {
                        let first = &c.coords()[0];
                        assert!(c.coords().iter().all(|zi| zi == first));
                    }
                    CubePoint::Basepoint(_) => panic!("unexpected basepoint"),
                }
            }
        }
    }

    #[test]
    fn coend_adjoint_equivariance_sampled() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..50 {
            let n = rng.gen_range(2..=4usize);
            let s = sample_simplex(&mut rng, n, 9);
            let x = sample_unit_interval(&mut rng, 9);
            for sigma in Permutation::enumerate(n) {
                let lhs = coend_adjoint(
                    &permute(&sigma, &SpherePoint::Point(s.clone())).unwrap(),
                    Some(&x),
                )
                .unwrap();
                let rhs = match coend_adjoint(&SpherePoint::Point(s.clone()), Some(&x)).unwrap() {
                    CubePoint::Coords(c) => {
                        let mut out = vec![Frac::zero(); n];
                        for (i, z) in c.coords().iter().enumerate() {
                            out[sigma.apply(i + 1) - 1] = z.clone();
                        }
                        CubePoint::Coords(CubeCoords::new(out).unwrap())
                    }
                    b => b,
                };
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn coend_adjoint_basepoint() {
        assert!(matches!(
            coend_adjoint(&SpherePoint::basepoint(), None).unwrap(),
            CubePoint::Basepoint(_)
        ));
        assert!(matches!(
            coend_adjoint(&pt(&["1"]), None).unwrap(),
            CubePoint::Basepoint(_)
        ));
    }

    fn unary_stage(coords: usize, j: usize) -> SmashSpherePoint {
        SmashSpherePoint::new(vec![SimplexPoint::barycenter(j); coords]).unwrap()
    }

    #[test]
    fn stabilized_identity_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let f = MapDescriptor::Identity { coords: 2 };
        let st = stabilize(&f, 2, &unary_stage(2, 2)).unwrap();
        for _ in 0..100 {
            let input = vec![
                SpherePoint::Point(sample_simplex(&mut rng, 4, 9)),
                SpherePoint::Point(sample_simplex(&mut rng, 4, 9)),
            ];
            assert_eq!(st.eval(&input).unwrap(), input);
        }
    }

    #[test]
    fn stabilized_swap_swaps_blockwise() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let swap = MapDescriptor::CoordPerm {
            perm: Permutation::new(vec![2, 1]).unwrap(),
        };
        let st = stabilize(&swap, 2, &unary_stage(2, 2)).unwrap();
        for _ in 0..100 {
            let p = sample_simplex(&mut rng, 4, 9);
            let q = sample_simplex(&mut rng, 4, 9);
            let out = st
                .eval(&[SpherePoint::Point(p.clone()), SpherePoint::Point(q.clone())])
                .unwrap();
            // Under the structure decomposition, the pieces swap factors
            // while each factor keeps its own outer point.
            let blocks = OrderedComposition::new(vec![2, 2]).unwrap();
            let (op, tp) = gamma_inv(&p, &blocks).unwrap();
            let (oq, tq) = gamma_inv(&q, &blocks).unwrap();
            let expect0 = gamma(
                &SpherePoint::Point(op),
                &tq.iter()
                    .map(|t| SpherePoint::Point(t.clone()))
                    .collect::<Vec<_>>(),
            )
            .unwrap();
            let expect1 = gamma(
                &SpherePoint::Point(oq),
                &tp.iter()
                    .map(|t| SpherePoint::Point(t.clone()))
                    .collect::<Vec<_>>(),
            )
            .unwrap();
            assert_eq!(out, vec![expect0, expect1]);
        }
    }

    #[test]
    fn stabilize_strictly_associative() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        let f = MapDescriptor::CoordPerm {
            perm: Permutation::new(vec![2, 1]).unwrap(),
        };
        for _ in 0..50 {
            let s1 = SmashSpherePoint::new(vec![
                sample_simplex(&mut rng, 2, 9),
                sample_simplex(&mut rng, 2, 9),
            ])
            .unwrap();
            let s2 = SmashSpherePoint::new(vec![
                sample_simplex(&mut rng, 3, 9),
                sample_simplex(&mut rng, 3, 9),
            ])
            .unwrap();
            let nested = stabilize(&stabilize(&f, 2, &s1).unwrap(), 3, &s2).unwrap();
            let combined_stage = smash_gamma(&s2, &[s1.clone(), s1.clone(), s1.clone()]).unwrap();
            let flat = stabilize(&f, 6, &combined_stage).unwrap();
            for _ in 0..5 {
                let input = vec![
                    SpherePoint::Point(sample_simplex(&mut rng, 6, 9)),
                    SpherePoint::Point(sample_simplex(&mut rng, 6, 9)),
                ];
                assert_eq!(nested.eval(&input).unwrap(), flat.eval(&input).unwrap());
            }
            assert_eq!(nested.stage().unwrap(), flat.stage().unwrap());
        }
    }

    #[test]
    fn stabilize_type_checks() {
        let f = MapDescriptor::Identity { coords: 2 };
        // Wrong number of stage factors.
        assert!(stabilize(&f, 2, &unary_stage(1, 2)).is_err());
        // Wrong stage arity.
        assert!(stabilize(&f, 2, &unary_stage(2, 3)).is_err());
        // Basepoint stage.
        assert!(stabilize(&f, 2, &SmashSpherePoint::basepoint()).is_err());
        // Non-divisible input arity.
        let st = stabilize(&f, 2, &unary_stage(2, 2)).unwrap();
        let bad = vec![
            SpherePoint::Point(SimplexPoint::barycenter(3)),
            SpherePoint::Point(SimplexPoint::barycenter(3)),
        ];
        assert!(st.eval(&bad).is_err());
    }

    #[test]
    fn tower_example_passes() {
        let report = reproduce_tower_example().unwrap();
        assert!(report.passed(), "{:?}", report.witness);
        assert!(report.checked > 50);
    }

    #[test]
    fn rational_closure_on_random_pipelines() {
        // Outputs of every operation on rational inputs remain rational by
        // construction; this pins the invariant end to end on a pipeline.
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        for _ in 0..50 {
            let s = sample_simplex(&mut rng, 3, 9);
            let x = sample_unit_interval(&mut rng, 9);
            let blocks = OrderedComposition::new(vec![2, 1]).unwrap();
            let (o, ts) = gamma_inv(&s, &blocks).unwrap();
            let back = gamma(
                &SpherePoint::Point(o),
                &ts.into_iter().map(SpherePoint::Point).collect::<Vec<_>>(),
            )
            .unwrap();
            assert_eq!(back, SpherePoint::Point(s.clone()));
            let z = coend_adjoint(&back, Some(&x)).unwrap();
            let (s2, x2) = coend_adjoint_inv(&z).unwrap();
            assert_eq!(s2, SpherePoint::Point(s));
            assert_eq!(x2.unwrap(), x);
        }
    }

    #[test]
    fn sphere_point_json() {
        let p = pt(&["1/3", "2/3"]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"["1/3","2/3"]"#);
        let back: SpherePoint = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        let inf: SpherePoint = serde_json::from_str(r#""inf""#).unwrap();
        assert!(inf.is_basepoint());
    }
}
