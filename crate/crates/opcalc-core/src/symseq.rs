//! Symmetric sequences of finite pointed `Σ_n`-sets and the composition
//! product.
//!
//! A sequence is truncated at a chosen top level `N`; levels start at 1, so
//! partition blocks are always nonempty. Elements of wedges and smashes are
//! tagged tuples sharing a single implicit basepoint: any basepoint factor
//! collapses the whole tuple, so only non-basepoint tuples are materialized.
//!
//! Group actions are stored on the adjacent transpositions `s_1, …, s_{n−1}`
//! and validated against the Coxeter relations, which is exactly what is
//! needed for the generator maps to extend to `Σ_n`. Arbitrary permutations
//! act through [`crate::combinat::Permutation::adjacent_word`].

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::combinat::{
    enumerate_compositions, enumerate_partitions, induced_block_data, Permutation,
    UnorderedPartition,
};
use crate::{Error, Result};

/// A finite pointed set with a `Σ_n`-action. Only non-basepoint elements are
/// stored; the basepoint is implicit and fixed by the action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedSigmaSet {
    arity: usize,
    elements: Vec<String>,
    /// `gens[i-1]` is the action of the adjacent transposition `s_i`,
    /// recorded as an index map on `elements`.
    gens: Vec<Vec<usize>>,
}

impl PointedSigmaSet {
    /// Builds a level and validates that the generator maps are bijections
    /// satisfying the Coxeter relations of `Σ_n`.
    pub fn new(arity: usize, elements: Vec<String>, gens: Vec<Vec<usize>>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::InvalidData("arity must be positive".into()));
        }
        let mut sorted = elements.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != elements.len() {
            return Err(Error::InvalidData("duplicate element labels".into()));
        }
        if gens.len() != arity.saturating_sub(1) {
            return Err(Error::InvalidData(format!(
                "expected {} generator maps, found {}",
                arity - 1,
                gens.len()
            )));
        }
        let set = PointedSigmaSet {
            arity,
            elements,
            gens,
        };
        set.validate_action()?;
        Ok(set)
    }

    /// The trivial action on the given labels.
    pub fn trivial(arity: usize, elements: Vec<String>) -> Result<Self> {
        let id: Vec<usize> = (0..elements.len()).collect();
        let gens = vec![id; arity.saturating_sub(1)];
        PointedSigmaSet::new(arity, elements, gens)
    }

    fn validate_action(&self) -> Result<()> {
        let m = self.elements.len();
        for (i, g) in self.gens.iter().enumerate() {
            if g.len() != m || g.iter().any(|&v| v >= m) {
                return Err(Error::InvalidData(format!(
                    "generator s_{} is not a map on {} elements",
                    i + 1,
                    m
                )));
            }
        }
        let apply = |g: &[usize], x: usize| g[x];
        // s_i^2 = id
        for g in &self.gens {
            for x in 0..m {
                if apply(g, apply(g, x)) != x {
                    return Err(Error::InvalidData("action violates s_i^2 = id".into()));
                }
            }
        }
        // (s_i s_{i+1})^3 = id
        for w in self.gens.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            for x in 0..m {
                let mut y = x;
                for _ in 0..3 {
                    y = apply(a, apply(b, y));
                }
                if y != x {
                    return Err(Error::InvalidData(
                        "action violates the braid relation".into(),
                    ));
                }
            }
        }
        // (s_i s_j)^2 = id for |i-j| >= 2
        for i in 0..self.gens.len() {
            for j in i + 2..self.gens.len() {
                let (a, b) = (&self.gens[i], &self.gens[j]);
                for x in 0..m {
                    if apply(a, apply(b, apply(a, apply(b, x)))) != x {
                        return Err(Error::InvalidData(
                            "action violates distant commutation".into(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == label)
    }

    /// Acts by an arbitrary permutation via its adjacent-transposition word.
    pub fn act(&self, sigma: &Permutation, idx: usize) -> Result<usize> {
        if sigma.size() != self.arity {
            return Err(Error::SizeMismatch {
                expected: self.arity,
                found: sigma.size(),
            });
        }
        let mut x = idx;
        for i in sigma.adjacent_word() {
            x = self.gens[i - 1][x];
        }
        Ok(x)
    }
}

#[derive(Serialize, Deserialize)]
struct LevelRepr {
    n: usize,
    elements: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    action: BTreeMap<String, BTreeMap<String, String>>,
}

impl LevelRepr {
    fn into_level(self) -> Result<PointedSigmaSet> {
        let mut gens = Vec::new();
        for i in 1..self.n {
            let map = match self.action.get(&i.to_string()) {
                None => (0..self.elements.len()).collect(),
                Some(m) => {
                    let mut g = Vec::with_capacity(self.elements.len());
                    for label in &self.elements {
                        let target = m.get(label).unwrap_or(label);
                        let idx = self.elements.iter().position(|e| e == target).ok_or_else(
                            || {
                                Error::InvalidData(format!(
                                    "action sends {label} to unknown label {target}"
                                ))
                            },
                        )?;
                        g.push(idx);
                    }
                    g
                }
            };
            gens.push(map);
        }
        PointedSigmaSet::new(self.n, self.elements, gens)
    }

    fn from_level(level: &PointedSigmaSet) -> LevelRepr {
        let mut action = BTreeMap::new();
        for (i, g) in level.gens.iter().enumerate() {
            let nontrivial: BTreeMap<String, String> = g
                .iter()
                .enumerate()
                .filter(|(x, &y)| *x != y)
                .map(|(x, &y)| (level.elements[x].clone(), level.elements[y].clone()))
                .collect();
            if !nontrivial.is_empty() {
                action.insert((i + 1).to_string(), nontrivial);
            }
        }
        LevelRepr {
            n: level.arity,
            elements: level.elements.clone(),
            action,
        }
    }
}

/// A symmetric sequence truncated at `max_level`, with level `n` a pointed
/// `Σ_n`-set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SymSeqRepr", into = "SymSeqRepr")]
pub struct SymSeq {
    levels: Vec<PointedSigmaSet>,
}

#[derive(Serialize, Deserialize)]
struct SymSeqRepr {
    levels: Vec<LevelRepr>,
}

impl TryFrom<SymSeqRepr> for SymSeq {
    type Error = Error;
    fn try_from(r: SymSeqRepr) -> Result<Self> {
        let mut levels = Vec::new();
        for (i, lvl) in r.levels.into_iter().enumerate() {
            if lvl.n != i + 1 {
                return Err(Error::InvalidData(format!(
                    "levels must be listed as 1..N; found n={} at position {}",
                    lvl.n,
                    i + 1
                )));
            }
            levels.push(lvl.into_level()?);
        }
        SymSeq::new(levels)
    }
}

impl From<SymSeq> for SymSeqRepr {
    fn from(s: SymSeq) -> SymSeqRepr {
        SymSeqRepr {
            levels: s.levels.iter().map(LevelRepr::from_level).collect(),
        }
    }
}

impl SymSeq {
    pub fn new(levels: Vec<PointedSigmaSet>) -> Result<Self> {
        for (i, lvl) in levels.iter().enumerate() {
            if lvl.arity() != i + 1 {
                return Err(Error::InvalidData(format!(
                    "level {} has arity {}",
                    i + 1,
                    lvl.arity()
                )));
            }
        }
        if levels.is_empty() {
            return Err(Error::InvalidData(
                "a symmetric sequence needs level 1".into(),
            ));
        }
        Ok(SymSeq { levels })
    }

    pub fn max_level(&self) -> usize {
        self.levels.len()
    }

    pub fn level(&self, n: usize) -> Result<&PointedSigmaSet> {
        self.levels.get(n - 1).ok_or(Error::Truncation {
            needed: n,
            available: self.levels.len(),
        })
    }

    /// Non-basepoint cardinalities per level.
    pub fn cardinalities(&self) -> Vec<usize> {
        self.levels.iter().map(PointedSigmaSet::len).collect()
    }
}

/// The unit sequence: `S⁰` at level 1, basepoint only above.
pub fn unit_seq(max_level: usize) -> SymSeq {
    let mut levels = vec![PointedSigmaSet::trivial(1, vec!["u".into()]).unwrap()];
    for n in 2..=max_level {
        levels.push(PointedSigmaSet::trivial(n, Vec::new()).unwrap());
    }
    SymSeq { levels }
}

/// A non-basepoint element of `(A ∘ B)(n)`: a partition of `[n]`, an element
/// of `A(k)`, and one element of `B(n_i)` per canonical block.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CompositeElement {
    pub partition: UnorderedPartition,
    pub outer: usize,
    pub inner: Vec<usize>,
}

/// The composition product `A ∘ B` up to a level bound, materialized as a
/// symmetric sequence together with the structured elements behind each
/// label.
#[derive(Debug, Clone)]
pub struct ComposedProduct {
    a: SymSeq,
    b: SymSeq,
    seq: SymSeq,
    elements: Vec<Vec<CompositeElement>>,
    index: Vec<BTreeMap<CompositeElement, usize>>,
}

impl ComposedProduct {
    pub fn seq(&self) -> &SymSeq {
        &self.seq
    }

    pub fn elements(&self, n: usize) -> &[CompositeElement] {
        &self.elements[n - 1]
    }

    pub fn index_of(&self, n: usize, x: &CompositeElement) -> Option<usize> {
        self.index[n - 1].get(x).copied()
    }

    /// The `Σ_n`-action on composite elements, computed directly from the
    /// induced block data (independent of the generator tables stored in
    /// `seq`).
    pub fn act(&self, sigma: &Permutation, x: &CompositeElement) -> Result<CompositeElement> {
        act_composite(&self.a, &self.b, sigma, x)
    }
}

/// The action formula for `σ · (P, a, (b_i))`: the partition moves to `σP`,
/// the outer element is acted by the block-position permutation `τ`, and the
/// inner element coming from block `τ⁻¹(i)` is acted by its conjugated block
/// permutation.
pub fn act_composite(
    a: &SymSeq,
    b: &SymSeq,
    sigma: &Permutation,
    x: &CompositeElement,
) -> Result<CompositeElement> {
    if sigma.size() != x.partition.ground() {
        return Err(Error::SizeMismatch {
            expected: x.partition.ground(),
            found: sigma.size(),
        });
    }
    let (sp, tau, rhos) = induced_block_data(sigma, &x.partition)?;
    let k = x.partition.num_blocks();
    let outer = a.level(k)?.act(&tau, x.outer)?;
    let sizes = x.partition.block_sizes();
    let tau_inv = tau.inverse();
    let mut inner = Vec::with_capacity(k);
    for pos in 1..=k {
        let src = tau_inv.apply(pos) - 1;
        let level = b.level(sizes[src])?;
        inner.push(level.act(&rhos[src], x.inner[src])?);
    }
    Ok(CompositeElement {
        partition: sp,
        outer,
        inner,
    })
}

fn composite_label(a: &SymSeq, b: &SymSeq, x: &CompositeElement) -> String {
    let outer_label = &a.levels[x.partition.num_blocks() - 1].elements[x.outer];
    let inner_labels: Vec<&str> = x
        .partition
        .blocks()
        .iter()
        .zip(&x.inner)
        .map(|(block, &i)| b.levels[block.len() - 1].elements[i].as_str())
        .collect();
    format!(
        "[{}]{}({})",
        x.partition.display(),
        outer_label,
        inner_labels.join(",")
    )
}

/// The composition product `(A ∘ B)(n)` for `n ≤ max_level`: the wedge over
/// unordered partitions of `{1..n}` of `A(k) ∧ B(n_1) ∧ ⋯ ∧ B(n_k)`, with
/// the `Σ_n`-action induced by [`induced_block_data`].
pub fn compose_product(a: &SymSeq, b: &SymSeq, max_level: usize) -> Result<ComposedProduct> {
    if a.max_level() < max_level {
        return Err(Error::Truncation {
            needed: max_level,
            available: a.max_level(),
        });
    }
    if b.max_level() < max_level {
        return Err(Error::Truncation {
            needed: max_level,
            available: b.max_level(),
        });
    }
    let mut levels = Vec::with_capacity(max_level);
    let mut all_elements = Vec::with_capacity(max_level);
    let mut all_index = Vec::with_capacity(max_level);
    for n in 1..=max_level {
        let mut elements: Vec<CompositeElement> = Vec::new();
        for partition in enumerate_partitions(n, None) {
            let sizes = partition.block_sizes();
            let k = sizes.len();
            let outer_count = a.level(k)?.len();
            let inner_counts: Vec<usize> = sizes.iter().map(|&s| b.levels[s - 1].len()).collect();
            if inner_counts.iter().any(|&c| c == 0) {
                continue;
            }
            for outer in 0..outer_count {
                for inner in tuples(&inner_counts) {
                    elements.push(CompositeElement {
                        partition: partition.clone(),
                        outer,
                        inner,
                    });
                }
            }
        }
        let index: BTreeMap<CompositeElement, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        let labels: Vec<String> = elements.iter().map(|e| composite_label(a, b, e)).collect();
        let mut gens = Vec::new();
        for g in 1..n {
            let sigma = Permutation::adjacent_transposition(g, n);
            let mut map = Vec::with_capacity(elements.len());
            for e in &elements {
                let image = act_composite(a, b, &sigma, e)?;
                let target = index
                    .get(&image)
                    .ok_or_else(|| Error::InvalidData("action left the composed level".into()))?;
                map.push(*target);
            }
            gens.push(map);
        }
        levels.push(PointedSigmaSet::new(n, labels, gens)?);
        all_elements.push(elements);
        all_index.push(index);
    }
    Ok(ComposedProduct {
        a: a.clone(),
        b: b.clone(),
        seq: SymSeq { levels },
        elements: all_elements,
        index: all_index,
    })
}

/// The cardinality predicted for `(A ∘ B)(n)` by the partition sum
/// `Σ_P |A(k)| · Π |B(n_i)|`.
pub fn compose_cardinality(a: &SymSeq, b: &SymSeq, n: usize) -> Result<usize> {
    let mut total = 0;
    for partition in enumerate_partitions(n, None) {
        let k = partition.num_blocks();
        let mut summand = a.level(k)?.len();
        for block in partition.blocks() {
            summand *= b.level(block.len())?.len();
        }
        total += summand;
    }
    Ok(total)
}

/// The levelwise bijection `1 ∘ A ≅ A`: every element has the one-block
/// partition and the unit outside, so it is the relabeling `(P, u, (a)) ↦ a`.
pub fn unit_left_iso(a: &SymSeq, max_level: usize) -> Result<Vec<Vec<usize>>> {
    let unit = unit_seq(max_level);
    let composed = compose_product(&unit, a, max_level)?;
    let mut maps = Vec::new();
    for n in 1..=max_level {
        let mut map = Vec::new();
        for e in composed.elements(n) {
            if e.partition.num_blocks() != 1 {
                return Err(Error::InvalidData("unexpected summand in 1 ∘ A".into()));
            }
            map.push(e.inner[0]);
        }
        if map.len() != a.level(n)?.len() {
            return Err(Error::InvalidData("1 ∘ A is not identity-like".into()));
        }
        maps.push(map);
    }
    Ok(maps)
}

/// The levelwise bijection `A ∘ 1 ≅ A`: every element has the discrete
/// partition and units inside, so it is the relabeling `(P, a, (u…u)) ↦ a`.
pub fn unit_right_iso(a: &SymSeq, max_level: usize) -> Result<Vec<Vec<usize>>> {
    let unit = unit_seq(max_level);
    let composed = compose_product(a, &unit, max_level)?;
    let mut maps = Vec::new();
    for n in 1..=max_level {
        let mut map = Vec::new();
        for e in composed.elements(n) {
            if e.partition.num_blocks() != n {
                return Err(Error::InvalidData("unexpected summand in A ∘ 1".into()));
            }
            map.push(e.outer);
        }
        if map.len() != a.level(n)?.len() {
            return Err(Error::InvalidData("A ∘ 1 is not identity-like".into()));
        }
        maps.push(map);
    }
    Ok(maps)
}

/// The associator data `((A ∘ B) ∘ C) ≅ (A ∘ (B ∘ C))` with all four
/// composites materialized and the explicit levelwise regrouping bijection.
#[derive(Debug, Clone)]
pub struct AssociatorData {
    pub ab: ComposedProduct,
    pub ab_c: ComposedProduct,
    pub bc: ComposedProduct,
    pub a_bc: ComposedProduct,
    /// `maps[n-1][i]` is the index in `(A∘(B∘C))(n)` of the image of element
    /// `i` of `((A∘B)∘C)(n)`.
    pub maps: Vec<Vec<usize>>,
}

/// Builds the regrouping bijection: a partition of `[n]` refined by
/// partitions of its blocks corresponds to a coarse partition together with
/// refinement data. All identifications are order-preserving, so no
/// permutation twisting appears; equivariance is a consequence, not an
/// input.
pub fn associator(a: &SymSeq, b: &SymSeq, c: &SymSeq, max_level: usize) -> Result<AssociatorData> {
    let ab = compose_product(a, b, max_level)?;
    let ab_c = compose_product(ab.seq(), c, max_level)?;
    let bc = compose_product(b, c, max_level)?;
    let a_bc = compose_product(a, bc.seq(), max_level)?;

    let mut maps = Vec::with_capacity(max_level);
    for n in 1..=max_level {
        let mut map = Vec::with_capacity(ab_c.elements(n).len());
        for x in ab_c.elements(n) {
            let k = x.partition.num_blocks();
            let inner_ab = &ab.elements(k)[x.outer];
            let q = &inner_ab.partition; // partition of [k]
            let mut coarse_blocks: Vec<Vec<usize>> = Vec::with_capacity(q.num_blocks());
            let mut y_indices: Vec<usize> = Vec::with_capacity(q.num_blocks());
            for (j, d) in q.blocks().iter().enumerate() {
                // Union of the P-blocks named by this Q-block.
                let mut union: Vec<usize> = Vec::new();
                for &i in d {
                    union.extend(x.partition.blocks()[i - 1].iter().copied());
                }
                union.sort_unstable();
                // Re-express each constituent P-block inside [|union|] via the
                // order identification of the union.
                let sub_blocks: Vec<Vec<usize>> = d
                    .iter()
                    .map(|&i| {
                        x.partition.blocks()[i - 1]
                            .iter()
                            .map(|v| union.binary_search(v).unwrap() + 1)
                            .collect()
                    })
                    .collect();
                let s_j = UnorderedPartition::new(union.len(), sub_blocks)?;
                let y = CompositeElement {
                    partition: s_j,
                    outer: inner_ab.inner[j],
                    inner: d.iter().map(|&i| x.inner[i - 1]).collect(),
                };
                let y_idx = bc.index_of(union.len(), &y).ok_or_else(|| {
                    Error::InvalidData("regrouped inner element not found in B ∘ C".into())
                })?;
                coarse_blocks.push(union);
                y_indices.push(y_idx);
            }
            let coarse = UnorderedPartition::new(n, coarse_blocks)?;
            let target = CompositeElement {
                partition: coarse,
                outer: inner_ab.outer,
                inner: y_indices,
            };
            let target_idx = a_bc.index_of(n, &target).ok_or_else(|| {
                Error::InvalidData("regrouped element not found in A ∘ (B ∘ C)".into())
            })?;
            map.push(target_idx);
        }
        // Totality plus equal cardinality plus injectivity = bijection.
        let mut seen = vec![false; a_bc.elements(n).len()];
        for &t in &map {
            if seen[t] {
                return Err(Error::InvalidData("associator is not injective".into()));
            }
            seen[t] = true;
        }
        if map.len() != a_bc.elements(n).len() {
            return Err(Error::InvalidData("associator is not a bijection".into()));
        }
        maps.push(map);
    }
    Ok(AssociatorData {
        ab,
        ab_c,
        bc,
        a_bc,
        maps,
    })
}

/// Whiskers a levelwise bijection `X → Y` on the outer slot of a composite:
/// `(P, x, inner) ↦ (P, map(x), inner)` as index maps `X∘D → Y∘D`.
pub fn map_outer(
    bij: &[Vec<usize>],
    src: &ComposedProduct,
    dst: &ComposedProduct,
    max_level: usize,
) -> Result<Vec<Vec<usize>>> {
    let mut maps = Vec::with_capacity(max_level);
    for n in 1..=max_level {
        let mut map = Vec::with_capacity(src.elements(n).len());
        for x in src.elements(n) {
            let k = x.partition.num_blocks();
            let target = CompositeElement {
                partition: x.partition.clone(),
                outer: bij[k - 1][x.outer],
                inner: x.inner.clone(),
            };
            map.push(
                dst.index_of(n, &target)
                    .ok_or_else(|| Error::InvalidData("outer-whiskered element not found".into()))?,
            );
        }
        maps.push(map);
    }
    Ok(maps)
}

/// Whiskers a levelwise bijection `X → Y` on the inner slots:
/// `(P, a, (x_i)) ↦ (P, a, (map(x_i)))` as index maps `A∘X → A∘Y`.
pub fn map_inner(
    bij: &[Vec<usize>],
    src: &ComposedProduct,
    dst: &ComposedProduct,
    max_level: usize,
) -> Result<Vec<Vec<usize>>> {
    let mut maps = Vec::with_capacity(max_level);
    for n in 1..=max_level {
        let mut map = Vec::with_capacity(src.elements(n).len());
        for x in src.elements(n) {
            let sizes = x.partition.block_sizes();
            let target = CompositeElement {
                partition: x.partition.clone(),
                outer: x.outer,
                inner: x
                    .inner
                    .iter()
                    .zip(&sizes)
                    .map(|(&i, &s)| bij[s - 1][i])
                    .collect(),
            };
            map.push(
                dst.index_of(n, &target)
                    .ok_or_else(|| Error::InvalidData("inner-whiskered element not found".into()))?,
            );
        }
        maps.push(map);
    }
    Ok(maps)
}

/// Operad data: a symmetric sequence with a unit element and composition
/// tables `γ : O(k) ∧ O(j_1) ∧ ⋯ ∧ O(j_k) → O(Σj_i)` for every shape, given
/// on non-basepoint tuples (outputs may be the basepoint, recorded as
/// `None`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "OperadRepr", into = "OperadRepr")]
pub struct OperadData {
    seq: SymSeq,
    unit: usize,
    gamma: BTreeMap<(usize, Vec<usize>), BTreeMap<(usize, Vec<usize>), Option<usize>>>,
}

#[derive(Serialize, Deserialize)]
struct GammaEntryRepr {
    outer: String,
    inner: Vec<String>,
    out: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct GammaShapeRepr {
    k: usize,
    parts: Vec<usize>,
    table: Vec<GammaEntryRepr>,
}

#[derive(Serialize, Deserialize)]
struct OperadRepr {
    levels: Vec<LevelRepr>,
    unit: String,
    gamma: Vec<GammaShapeRepr>,
}

impl TryFrom<OperadRepr> for OperadData {
    type Error = Error;
    fn try_from(r: OperadRepr) -> Result<Self> {
        let seq: SymSeq = SymSeqRepr { levels: r.levels }.try_into()?;
        let unit = seq
            .level(1)?
            .index_of(&r.unit)
            .ok_or_else(|| Error::InvalidData(format!("unknown unit label {}", r.unit)))?;
        let mut gamma = BTreeMap::new();
        for shape in r.gamma {
            if shape.parts.len() != shape.k {
                return Err(Error::InvalidData(format!(
                    "shape k={} has {} parts",
                    shape.k,
                    shape.parts.len()
                )));
            }
            let total: usize = shape.parts.iter().sum();
            let out_level = seq.level(total)?;
            let outer_level = seq.level(shape.k)?;
            let mut table = BTreeMap::new();
            for entry in shape.table {
                let outer = outer_level.index_of(&entry.outer).ok_or_else(|| {
                    Error::InvalidData(format!("unknown outer label {}", entry.outer))
                })?;
                let mut inner = Vec::with_capacity(shape.k);
                for (label, &j) in entry.inner.iter().zip(&shape.parts) {
                    inner.push(seq.level(j)?.index_of(label).ok_or_else(|| {
                        Error::InvalidData(format!("unknown inner label {label}"))
                    })?);
                }
                let out = match entry.out {
                    None => None,
                    Some(label) => Some(out_level.index_of(&label).ok_or_else(|| {
                        Error::InvalidData(format!("unknown output label {label}"))
                    })?),
                };
                table.insert((outer, inner), out);
            }
            gamma.insert((shape.k, shape.parts), table);
        }
        Ok(OperadData { seq, unit, gamma })
    }
}

impl From<OperadData> for OperadRepr {
    fn from(o: OperadData) -> OperadRepr {
        let gamma = o
            .gamma
            .iter()
            .map(|((k, parts), table)| GammaShapeRepr {
                k: *k,
                parts: parts.clone(),
                table: table
                    .iter()
                    .map(|((outer, inner), out)| GammaEntryRepr {
                        outer: o.seq.levels[*k - 1].elements[*outer].clone(),
                        inner: inner
                            .iter()
                            .zip(parts)
                            .map(|(&i, &j)| o.seq.levels[j - 1].elements[i].clone())
                            .collect(),
                        out: out.map(|t| {
                            let total: usize = parts.iter().sum();
                            o.seq.levels[total - 1].elements[t].clone()
                        }),
                    })
                    .collect(),
            })
            .collect();
        OperadRepr {
            levels: o.seq.levels.iter().map(LevelRepr::from_level).collect(),
            unit: o.seq.levels[0].elements[o.unit].clone(),
            gamma,
        }
    }
}

impl OperadData {
    pub fn new(
        seq: SymSeq,
        unit: usize,
        gamma: BTreeMap<(usize, Vec<usize>), BTreeMap<(usize, Vec<usize>), Option<usize>>>,
    ) -> Self {
        OperadData { seq, unit, gamma }
    }

    pub fn seq(&self) -> &SymSeq {
        &self.seq
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    /// Looks up `γ` on possibly-basepoint arguments; the basepoint absorbs.
    pub fn gamma(
        &self,
        parts: &[usize],
        outer: Option<usize>,
        inner: &[Option<usize>],
    ) -> Result<Option<usize>> {
        let (outer, inner) = match (outer, inner.iter().copied().collect::<Option<Vec<_>>>()) {
            (Some(o), Some(i)) => (o, i),
            _ => return Ok(None),
        };
        let shape = (parts.len(), parts.to_vec());
        let table = self
            .gamma
            .get(&shape)
            .ok_or_else(|| Error::IncompleteData(format!("no gamma table for shape {shape:?}")))?;
        table.get(&(outer, inner.clone())).copied().ok_or_else(|| {
            Error::IncompleteData(format!(
                "gamma table for shape {shape:?} missing entry ({outer}, {inner:?})"
            ))
        })
    }

    /// Returns a copy with a single gamma entry overridden (mutation testing
    /// hook).
    pub fn with_gamma_entry(
        &self,
        parts: &[usize],
        key: (usize, Vec<usize>),
        value: Option<usize>,
    ) -> Self {
        let mut out = self.clone();
        out.gamma
            .get_mut(&(parts.len(), parts.to_vec()))
            .expect("shape present")
            .insert(key, value);
        out
    }

    pub fn shapes(&self) -> impl Iterator<Item = &(usize, Vec<usize>)> {
        self.gamma.keys()
    }

    /// The one-point-per-level operad (terminal, commutative).
    pub fn com(max_level: usize) -> Self {
        let levels: Vec<PointedSigmaSet> = (1..=max_level)
            .map(|n| PointedSigmaSet::trivial(n, vec!["e".into()]).unwrap())
            .collect();
        let seq = SymSeq { levels };
        let mut gamma = BTreeMap::new();
        for k in 1..=max_level {
            for total in k..=max_level {
                for parts in enumerate_compositions(total, k) {
                    let mut table = BTreeMap::new();
                    table.insert((0, vec![0; k]), Some(0));
                    gamma.insert((k, parts.parts().to_vec()), table);
                }
            }
        }
        OperadData {
            seq,
            unit: 0,
            gamma,
        }
    }

    /// The associative operad: level `n` is `Σ_n` as words (one-line forms),
    /// the action relabels word entries (translation), and `γ` is block
    /// substitution of words.
    pub fn ass(max_level: usize) -> Self {
        assert!(max_level <= 9, "word labels use single digits");
        let word_label = |w: &[usize]| w.iter().map(usize::to_string).collect::<String>();
        let words: Vec<Vec<Vec<usize>>> = (1..=max_level)
            .map(|n| {
                Permutation::enumerate(n)
                    .into_iter()
                    .map(|p| p.mapping().to_vec())
                    .collect()
            })
            .collect();
        let levels: Vec<PointedSigmaSet> = (1..=max_level)
            .map(|n| {
                let level_words = &words[n - 1];
                let labels: Vec<String> = level_words.iter().map(|w| word_label(w)).collect();
                let mut gens = Vec::new();
                for g in 1..n {
                    let s = Permutation::adjacent_transposition(g, n);
                    let map = level_words
                        .iter()
                        .map(|w| {
                            let relabeled: Vec<usize> = w.iter().map(|&v| s.apply(v)).collect();
                            level_words.iter().position(|x| *x == relabeled).unwrap()
                        })
                        .collect();
                    gens.push(map);
                }
                PointedSigmaSet::new(n, labels, gens).unwrap()
            })
            .collect();
        let mut gamma = BTreeMap::new();
        for k in 1..=max_level {
            for total in k..=max_level {
                for parts in enumerate_compositions(total, k) {
                    let parts = parts.parts().to_vec();
                    let offsets: Vec<usize> = parts
                        .iter()
                        .scan(0usize, |acc, &p| {
                            let off = *acc;
                            *acc += p;
                            Some(off)
                        })
                        .collect();
                    let mut table = BTreeMap::new();
                    let outer_words = &words[k - 1];
                    let inner_counts: Vec<usize> =
                        parts.iter().map(|&p| words[p - 1].len()).collect();
                    for inner_choices in tuples(&inner_counts) {
                        for (oi, outer_word) in outer_words.iter().enumerate() {
                            let mut result: Vec<usize> = Vec::with_capacity(total);
                            for &block in outer_word {
                                let b = &words[parts[block - 1] - 1][inner_choices[block - 1]];
                                result.extend(b.iter().map(|&v| v + offsets[block - 1]));
                            }
                            let out = words[total - 1].iter().position(|w| *w == result).unwrap();
                            table.insert((oi, inner_choices.clone()), Some(out));
                        }
                    }
                    gamma.insert((k, parts), table);
                }
            }
        }
        OperadData {
            seq: SymSeq { levels },
            unit: 0,
            gamma,
        }
    }
}

/// Outcome of an exhaustive operad-axiom check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperadReport {
    pub status: String,
    pub checked: u64,
    pub counterexample: Option<OperadCounterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperadCounterexample {
    pub law: String,
    pub detail: String,
}

impl OperadReport {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// Checks unit laws, associativity in both nesting orders, and
/// `Σ`-equivariance of `γ` with respect to block permutations and inner
/// permutations, exhaustively over non-basepoint tuples up to total arity
/// `max_level`. The first counterexample in iteration order is reported.
pub fn check_operad(o: &OperadData, max_level: usize) -> Result<OperadReport> {
    if o.seq.max_level() < max_level {
        return Err(Error::Truncation {
            needed: max_level,
            available: o.seq.max_level(),
        });
    }
    let mut checked: u64 = 0;
    let fail = |law: &str, detail: String, checked: u64| {
        Ok(OperadReport {
            status: "fail".into(),
            checked,
            counterexample: Some(OperadCounterexample {
                law: law.into(),
                detail,
            }),
        })
    };

    // Table completeness for every shape with total arity <= max_level.
    for k in 1..=max_level {
        for total in k..=max_level {
            for parts in enumerate_compositions(total, k) {
                let parts = parts.parts();
                let outer_count = o.seq.level(k)?.len();
                let inner_counts: Vec<usize> =
                    parts.iter().map(|&j| o.seq.levels[j - 1].len()).collect();
                if inner_counts.iter().any(|&c| c == 0) || outer_count == 0 {
                    continue;
                }
                for outer in 0..outer_count {
                    for inner in tuples(&inner_counts) {
                        let inner_opts: Vec<Option<usize>> =
                            inner.iter().map(|&i| Some(i)).collect();
                        o.gamma(parts, Some(outer), &inner_opts)?;
                    }
                }
            }
        }
    }

    // (i) unit laws.
    for n in 1..=max_level {
        for x in 0..o.seq.level(n)?.len() {
            checked += 1;
            let got = o.gamma(&[n], Some(o.unit), &[Some(x)])?;
            if got != Some(x) {
                return fail(
                    "unit-left",
                    format!("gamma(unit; x) != x at level {n}, element {x}"),
                    checked,
                );
            }
        }
    }
    for k in 1..=max_level {
        for x in 0..o.seq.level(k)?.len() {
            checked += 1;
            let units = vec![Some(o.unit); k];
            let got = o.gamma(&vec![1; k], Some(x), &units)?;
            if got != Some(x) {
                return fail(
                    "unit-right",
                    format!("gamma(x; unit…) != x at level {k}, element {x}"),
                    checked,
                );
            }
        }
    }

    // (ii) associativity of nested gamma in both orders.
    for k in 1..=max_level {
        let outer_count = o.seq.level(k)?.len();
        if outer_count == 0 {
            continue;
        }
        for mid_total in k..=max_level {
            for mids in enumerate_compositions(mid_total, k) {
                let mids = mids.parts();
                let mid_counts: Vec<usize> =
                    mids.iter().map(|&m| o.seq.levels[m - 1].len()).collect();
                if mid_counts.iter().any(|&c| c == 0) {
                    continue;
                }
                for leaf_total in mid_total..=max_level {
                    for leaves in enumerate_compositions(leaf_total, mid_total) {
                        let leaves = leaves.parts();
                        let leaf_counts: Vec<usize> =
                            leaves.iter().map(|&l| o.seq.levels[l - 1].len()).collect();
                        if leaf_counts.iter().any(|&c| c == 0) {
                            continue;
                        }
                        // Per-branch leaf shapes and grouped totals.
                        let mut branch_shapes: Vec<&[usize]> = Vec::with_capacity(k);
                        let mut grouped_totals: Vec<usize> = Vec::with_capacity(k);
                        let mut off = 0;
                        for &m in mids {
                            let shape = &leaves[off..off + m];
                            branch_shapes.push(shape);
                            grouped_totals.push(shape.iter().sum());
                            off += m;
                        }
                        for outer in 0..outer_count {
                            for mid in tuples(&mid_counts) {
                                for leaf in tuples(&leaf_counts) {
                                    checked += 1;
                                    let mid_opts: Vec<Option<usize>> =
                                        mid.iter().map(|&i| Some(i)).collect();
                                    let leaf_opts: Vec<Option<usize>> =
                                        leaf.iter().map(|&i| Some(i)).collect();
                                    let first = o.gamma(mids, Some(outer), &mid_opts)?;
                                    let route1 = o.gamma(leaves, first, &leaf_opts)?;
                                    let mut collapsed = Vec::with_capacity(k);
                                    let mut off = 0;
                                    for (i, &m) in mids.iter().enumerate() {
                                        let branch = o.gamma(
                                            branch_shapes[i],
                                            Some(mid[i]),
                                            &leaf_opts[off..off + m],
                                        )?;
                                        collapsed.push(branch);
                                        off += m;
                                    }
                                    let route2 =
                                        o.gamma(&grouped_totals, Some(outer), &collapsed)?;
                                    if route1 != route2 {
                                        return fail(
                                            "associativity",
                                            format!(
                                                "shapes k={k}, mids={mids:?}, leaves={leaves:?}, \
                                                 outer={outer}, mid={mid:?}, leaf={leaf:?}: \
                                                 {route1:?} != {route2:?}"
                                            ),
                                            checked,
                                        );
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    // (iii) equivariance: block permutations and inner permutations.
    for k in 1..=max_level {
        let outer_level = o.seq.level(k)?;
        if outer_level.is_empty() {
            continue;
        }
        for total in k..=max_level {
            for parts in enumerate_compositions(total, k) {
                let parts = parts.parts();
                let inner_counts: Vec<usize> =
                    parts.iter().map(|&j| o.seq.levels[j - 1].len()).collect();
                if inner_counts.iter().any(|&c| c == 0) {
                    continue;
                }
                let out_level = o.seq.level(total)?;
                for tau in Permutation::enumerate(k) {
                    let tau_inv = tau.inverse();
                    let permuted_parts: Vec<usize> =
                        (1..=k).map(|t| parts[tau_inv.apply(t) - 1]).collect();
                    let block_perm = Permutation::block_permutation(&tau, parts);
                    for outer in 0..outer_level.len() {
                        for inner in tuples(&inner_counts) {
                            checked += 1;
                            let tau_outer = outer_level.act(&tau, outer)?;
                            let permuted_inner: Vec<Option<usize>> = (1..=k)
                                .map(|t| Some(inner[tau_inv.apply(t) - 1]))
                                .collect();
                            let lhs =
                                o.gamma(&permuted_parts, Some(tau_outer), &permuted_inner)?;
                            let base = o.gamma(
                                parts,
                                Some(outer),
                                &inner.iter().map(|&i| Some(i)).collect::<Vec<_>>(),
                            )?;
                            let rhs = match base {
                                None => None,
                                Some(r) => Some(out_level.act(&block_perm, r)?),
                            };
                            if lhs != rhs {
                                return fail(
                                    "block-equivariance",
                                    format!(
                                        "shape ({k}, {parts:?}), tau={:?}, outer={outer}, \
                                         inner={inner:?}",
                                        tau.mapping()
                                    ),
                                    checked,
                                );
                            }
                        }
                    }
                }
                // Inner equivariance on the generators of each slot.
                for slot in 0..k {
                    let j = parts[slot];
                    for g in 1..j {
                        let s = Permutation::adjacent_transposition(g, j);
                        let mut sum_parts: Vec<Permutation> =
                            parts.iter().map(|&p| Permutation::identity(p)).collect();
                        sum_parts[slot] = s.clone();
                        let sum_perm = Permutation::block_sum(&sum_parts);
                        for outer in 0..outer_level.len() {
                            for inner in tuples(&inner_counts) {
                                checked += 1;
                                let mut moved: Vec<Option<usize>> =
                                    inner.iter().map(|&i| Some(i)).collect();
                                moved[slot] = Some(o.seq.levels[j - 1].act(&s, inner[slot])?);
                                let lhs = o.gamma(parts, Some(outer), &moved)?;
                                let base = o.gamma(
                                    parts,
                                    Some(outer),
                                    &inner.iter().map(|&i| Some(i)).collect::<Vec<_>>(),
                                )?;
                                let rhs = match base {
                                    None => None,
                                    Some(r) => Some(out_level.act(&sum_perm, r)?),
                                };
                                if lhs != rhs {
                                    return fail(
                                        "inner-equivariance",
                                        format!(
                                            "shape ({k}, {parts:?}), slot {slot}, s_{g}, \
                                             outer={outer}, inner={inner:?}"
                                        ),
                                        checked,
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    Ok(OperadReport {
        status: "pass".into(),
        checked,
        counterexample: None,
    })
}

/// All index tuples below the given bounds, in lexicographic order.
pub(crate) fn tuples(counts: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if counts.iter().any(|&c| c == 0) {
        return out;
    }
    let mut cur = vec![0usize; counts.len()];
    loop {
        out.push(cur.clone());
        let mut pos = counts.len();
        while pos > 0 {
            cur[pos - 1] += 1;
            if cur[pos - 1] < counts[pos - 1] {
                break;
            }
            cur[pos - 1] = 0;
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn singleton_seq(max_level: usize) -> SymSeq {
        let levels = (1..=max_level)
            .map(|n| PointedSigmaSet::trivial(n, vec![format!("x{n}")]).unwrap())
            .collect();
        SymSeq::new(levels).unwrap()
    }

    /// A sequence with two elements per level and the sign action at levels
    /// >= 2 (every adjacent transposition swaps the two elements; the only
    /// other valid two-element action is the trivial one).
    fn two_elt_seq(max_level: usize) -> SymSeq {
        let mut levels = Vec::new();
        for n in 1..=max_level {
            let labels = vec![format!("a{n}"), format!("b{n}")];
            if n >= 2 {
                let gens = vec![vec![1, 0]; n - 1];
                levels.push(PointedSigmaSet::new(n, labels, gens).unwrap());
            } else {
                levels.push(PointedSigmaSet::trivial(n, labels).unwrap());
            }
        }
        SymSeq::new(levels).unwrap()
    }

    #[test]
    fn unit_seq_shape() {
        let u = unit_seq(3);
        assert_eq!(u.cardinalities(), vec![1, 0, 0]);
    }

    #[test]
    fn unit_composed_with_unit() {
        let u = unit_seq(3);
        let uu = compose_product(&u, &u, 3).unwrap();
        assert_eq!(uu.seq().cardinalities(), vec![1, 0, 0]);
    }

    #[test]
    fn compose_level2_example() {
        // |A(1)|=|A(2)|=|B(1)|=|B(2)|=1 gives two elements at level 2: one
        // from {{1,2}}, one from {{1},{2}}.
        let a = singleton_seq(2);
        let b = singleton_seq(2);
        let ab = compose_product(&a, &b, 2).unwrap();
        assert_eq!(ab.seq().cardinalities(), vec![1, 2]);
    }

    #[test]
    fn compose_level3_bell() {
        let a = singleton_seq(3);
        let b = singleton_seq(3);
        let ab = compose_product(&a, &b, 3).unwrap();
        assert_eq!(ab.seq().level(3).unwrap().len(), 5);
    }

    #[test]
    fn compose_cardinality_oracle_matches() {
        let a = two_elt_seq(4);
        let b = two_elt_seq(4);
        let ab = compose_product(&a, &b, 4).unwrap();
        for n in 1..=4 {
            assert_eq!(
                ab.seq().level(n).unwrap().len(),
                compose_cardinality(&a, &b, n).unwrap()
            );
        }
    }

    #[test]
    fn compose_insufficient_levels_errors() {
        let a = singleton_seq(2);
        let b = singleton_seq(4);
        assert!(matches!(
            compose_product(&a, &b, 4),
            Err(Error::Truncation { .. })
        ));
    }

    #[test]
    fn unit_laws_are_identity_like() {
        let a = two_elt_seq(3);
        let left = unit_left_iso(&a, 3).unwrap();
        let right = unit_right_iso(&a, 3).unwrap();
        for n in 1..=3usize {
            let len = a.level(n).unwrap().len();
            let mut l = left[n - 1].clone();
            l.sort_unstable();
            assert_eq!(l, (0..len).collect::<Vec<_>>());
            let mut r = right[n - 1].clone();
            r.sort_unstable();
            assert_eq!(r, (0..len).collect::<Vec<_>>());
        }
    }

    #[test]
    fn composed_action_is_group_action() {
        let a = two_elt_seq(3);
        let b = two_elt_seq(3);
        let ab = compose_product(&a, &b, 3).unwrap();
        for n in 1..=3usize {
            for sigma in Permutation::enumerate(n) {
                for rho in Permutation::enumerate(n) {
                    for x in ab.elements(n) {
                        let step = ab.act(&rho, &ab.act(&sigma, x).unwrap()).unwrap();
                        let direct = ab.act(&rho.compose(&sigma), x).unwrap();
                        assert_eq!(step, direct);
                    }
                }
            }
        }
    }

    #[test]
    fn composed_action_matches_generator_tables() {
        let a = two_elt_seq(3);
        let b = two_elt_seq(3);
        let ab = compose_product(&a, &b, 3).unwrap();
        for n in 1..=3usize {
            let level = ab.seq().level(n).unwrap();
            for sigma in Permutation::enumerate(n) {
                for (i, x) in ab.elements(n).iter().enumerate() {
                    let via_formula = ab.act(&sigma, x).unwrap();
                    let formula_idx = ab.index_of(n, &via_formula).unwrap();
                    assert_eq!(level.act(&sigma, i).unwrap(), formula_idx);
                }
            }
        }
    }

    #[test]
    fn act_swap_on_discrete_partition() {
        let a = two_elt_seq(2);
        let b = two_elt_seq(2);
        let swap = Permutation::new(vec![2, 1]).unwrap();
        let x = CompositeElement {
            partition: UnorderedPartition::new(2, vec![vec![1], vec![2]]).unwrap(),
            outer: 0,
            inner: vec![0, 1],
        };
        let y = act_composite(&a, &b, &swap, &x).unwrap();
        // Block positions exchange, the outer element is acted by the swap.
        assert_eq!(y.partition, x.partition);
        assert_eq!(y.outer, 1);
        assert_eq!(y.inner, vec![1, 0]);
    }

    #[test]
    fn three_cycle_has_order_three_on_level3() {
        let a = two_elt_seq(3);
        let b = two_elt_seq(3);
        let ab = compose_product(&a, &b, 3).unwrap();
        let c3 = Permutation::new(vec![2, 3, 1]).unwrap();
        for x in ab.elements(3) {
            let once = ab.act(&c3, x).unwrap();
            let twice = ab.act(&c3, &once).unwrap();
            let thrice = ab.act(&c3, &twice).unwrap();
            assert_eq!(&thrice, x);
        }
    }

    #[test]
    fn associator_counts_and_bijectivity() {
        let a = singleton_seq(3);
        let data = associator(&a, &a, &a, 3).unwrap();
        // Nested partition chains of {1,2,3} counted both ways: 12.
        assert_eq!(data.ab_c.seq().level(3).unwrap().len(), 12);
        assert_eq!(data.a_bc.seq().level(3).unwrap().len(), 12);
        assert_eq!(data.maps[2].len(), 12);
    }

    #[test]
    fn associator_on_units_is_identity() {
        let u = unit_seq(2);
        let data = associator(&u, &u, &u, 2).unwrap();
        assert_eq!(data.maps[0], vec![0]);
        assert!(data.maps[1].is_empty());
    }

    #[test]
    fn associator_equivariance() {
        let a = two_elt_seq(3);
        let b = singleton_seq(3);
        let c = two_elt_seq(3);
        let data = associator(&a, &b, &c, 3).unwrap();
        for n in 1..=3usize {
            let src = data.ab_c.seq().level(n).unwrap();
            let dst = data.a_bc.seq().level(n).unwrap();
            for sigma in Permutation::enumerate(n) {
                for i in 0..src.len() {
                    let lhs = data.maps[n - 1][src.act(&sigma, i).unwrap()];
                    let rhs = dst.act(&sigma, data.maps[n - 1][i]).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn pentagon_coherence_small() {
        let a = two_elt_seq(3);
        let b = singleton_seq(3);
        let c = singleton_seq(3);
        let d = two_elt_seq(3);
        let n = 3;

        let ab = compose_product(&a, &b, n).unwrap();
        let cd = compose_product(&c, &d, n).unwrap();
        let bc = compose_product(&b, &c, n).unwrap();

        // Route 1: ((AB)C)D -> (AB)(CD) -> A(B(CD)).
        let alpha_ab_c_d = associator(ab.seq(), &c, &d, n).unwrap();
        let alpha_a_b_cd = associator(&a, &b, cd.seq(), n).unwrap();

        // Route 2: ((AB)C)D -> (A(BC))D -> A((BC)D) -> A(B(CD)).
        let alpha_a_b_c = associator(&a, &b, &c, n).unwrap();
        let a_bc = compose_product(&a, bc.seq(), n).unwrap();
        let abc_d_src = compose_product(alpha_a_b_c.ab_c.seq(), &d, n).unwrap();
        let abc_d_dst = compose_product(a_bc.seq(), &d, n).unwrap();
        let whisker_d = map_outer(&alpha_a_b_c.maps, &abc_d_src, &abc_d_dst, n).unwrap();
        let alpha_a_bc_d = associator(&a, bc.seq(), &d, n).unwrap();
        let alpha_b_c_d = associator(&b, &c, &d, n).unwrap();
        let a_bcd_src = compose_product(&a, alpha_b_c_d.ab_c.seq(), n).unwrap();
        let a_bcd_dst = compose_product(&a, alpha_b_c_d.a_bc.seq(), n).unwrap();
        let whisker_a = map_inner(&alpha_b_c_d.maps, &a_bcd_src, &a_bcd_dst, n).unwrap();

        // The two starting objects are the same composite built twice.
        assert_eq!(
            alpha_ab_c_d.ab_c.seq().cardinalities(),
            abc_d_src.seq().cardinalities()
        );

        for lvl in 1..=n {
            let size = alpha_ab_c_d.ab_c.seq().level(lvl).unwrap().len();
            for i in 0..size {
                let r1 = alpha_a_b_cd.maps[lvl - 1][alpha_ab_c_d.maps[lvl - 1][i]];
                let r2 = whisker_a[lvl - 1][alpha_a_bc_d.maps[lvl - 1][whisker_d[lvl - 1][i]]];
                assert_eq!(r1, r2, "pentagon mismatch at level {lvl}, element {i}");
            }
        }
    }

    #[test]
    fn com_passes() {
        let com = OperadData::com(4);
        let report = check_operad(&com, 4).unwrap();
        assert!(report.passed(), "{:?}", report.counterexample);
    }

    #[test]
    fn ass_passes() {
        let ass = OperadData::ass(4);
        let report = check_operad(&ass, 4).unwrap();
        assert!(report.passed(), "{:?}", report.counterexample);
    }

    #[test]
    fn com_mutation_fails() {
        let com = OperadData::com(3);
        let mutated = com.with_gamma_entry(&[1, 1], (0, vec![0, 0]), None);
        let report = check_operad(&mutated, 3).unwrap();
        assert!(!report.passed());
        assert!(report.counterexample.is_some());
    }

    #[test]
    fn missing_entry_is_incomplete_data() {
        let com = OperadData::com(2);
        let mut broken = com.clone();
        broken.gamma.get_mut(&(1, vec![2])).unwrap().clear();
        assert!(matches!(
            check_operad(&broken, 2),
            Err(Error::IncompleteData(_))
        ));
    }

    #[test]
    fn symseq_json_round_trip() {
        let a = two_elt_seq(2);
        let json = serde_json::to_value(&a).unwrap();
        let back: SymSeq = serde_json::from_value(json).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn operad_json_round_trip() {
        let com = OperadData::com(3);
        let json = serde_json::to_value(&com).unwrap();
        let back: OperadData = serde_json::from_value(json).unwrap();
        assert_eq!(back, com);
        let report = check_operad(&back, 3).unwrap();
        assert!(report.passed());
    }
}
