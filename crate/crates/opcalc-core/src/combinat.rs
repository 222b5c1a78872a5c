//! The skeletal category of finite sets and injections.
//!
//! Objects are the standard sets `[n] = {1, …, n}` (with `[0]` the empty
//! set), morphisms are injective maps recorded by their image sequence.
//! Working skeletally makes the coproduct `⊔` strictly associative and
//! strictly unital *as data*, which is the mechanism everything downstream
//! leans on. The module also provides symmetric groups, unordered set
//! partitions in a canonical block order, ordered compositions, and the
//! block bookkeeping (`induced_block_data`) used to define group actions on
//! partition-indexed wedges.
//!
//! All elements are 1-based, matching the on-disk JSON encodings.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// An object `[n]` of the skeletal injection category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FinSetObj {
    pub size: usize,
}

impl FinSetObj {
    pub fn new(size: usize) -> Self {
        FinSetObj { size }
    }
}

/// An injective map `[m] → [n]`, stored as the sequence of images of
/// `1, …, m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "InjectionRepr", into = "InjectionRepr")]
pub struct Injection {
    dom: FinSetObj,
    cod: FinSetObj,
    image: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct InjectionRepr {
    dom: usize,
    cod: usize,
    image: Vec<usize>,
}

impl TryFrom<InjectionRepr> for Injection {
    type Error = Error;
    fn try_from(r: InjectionRepr) -> Result<Self> {
        Injection::new(r.dom, r.cod, r.image)
    }
}

impl From<Injection> for InjectionRepr {
    fn from(f: Injection) -> Self {
        InjectionRepr {
            dom: f.dom.size,
            cod: f.cod.size,
            image: f.image,
        }
    }
}

impl Injection {
    /// Builds an injection `[m] → [n]`, validating injectivity and range.
    pub fn new(dom: usize, cod: usize, image: Vec<usize>) -> Result<Self> {
        if image.len() != dom {
            return Err(Error::InvalidData(format!(
                "image length {} does not match domain size {dom}",
                image.len()
            )));
        }
        let mut seen = vec![false; cod];
        for &v in &image {
            if v == 0 || v > cod {
                return Err(Error::InvalidData(format!(
                    "image entry {v} outside 1..={cod}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::InvalidData(format!("image entry {v} repeated")));
            }
            seen[v - 1] = true;
        }
        Ok(Injection {
            dom: FinSetObj::new(dom),
            cod: FinSetObj::new(cod),
            image,
        })
    }

    pub fn identity(n: usize) -> Self {
        Injection {
            dom: FinSetObj::new(n),
            cod: FinSetObj::new(n),
            image: (1..=n).collect(),
        }
    }

    pub fn dom(&self) -> FinSetObj {
        self.dom
    }

    pub fn cod(&self) -> FinSetObj {
        self.cod
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// The image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    /// True iff this injection lies in the subcategory of standard
    /// inclusions, i.e. `f(i) = i` for all `i`.
    pub fn is_standard_inclusion(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| v == i + 1)
    }
}

/// Composition `g ∘ f` in diagrammatic order: `f` first, then `g`.
pub fn compose_injections(f: &Injection, g: &Injection) -> Result<Injection> {
    if f.cod != g.dom {
        return Err(Error::Composition {
            left_cod: f.cod.size,
            right_dom: g.dom.size,
        });
    }
    let image = f.image.iter().map(|&v| g.apply(v)).collect();
    Ok(Injection {
        dom: f.dom,
        cod: g.cod,
        image,
    })
}

/// All injections `[m] → [n]` in lexicographic order of their image
/// sequences. Empty when `m > n`; the single empty injection when `m = 0`.
pub fn enumerate_injections(m: usize, n: usize) -> Vec<Injection> {
    let mut out = Vec::new();
    let mut partial = Vec::with_capacity(m);
    let mut used = vec![false; n];
    fn rec(
        m: usize,
        n: usize,
        partial: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Injection>,
    ) {
        if partial.len() == m {
            out.push(Injection {
                dom: FinSetObj::new(m),
                cod: FinSetObj::new(n),
                image: partial.clone(),
            });
            return;
        }
        for v in 1..=n {
            if !used[v - 1] {
                used[v - 1] = true;
                partial.push(v);
                rec(m, n, partial, used, out);
                partial.pop();
                used[v - 1] = false;
            }
        }
    }
    if m <= n {
        rec(m, n, &mut partial, &mut used, &mut out);
    }
    out
}

/// The strict coproduct `f ⊔ g`: first block through `f`, second block
/// through `g` shifted by `f`'s codomain. Strictly associative and strictly
/// unital (with the empty injection) on the nose.
pub fn coproduct(f: &Injection, g: &Injection) -> Injection {
    let mut image = f.image.clone();
    image.extend(g.image.iter().map(|&v| v + f.cod.size));
    Injection {
        dom: FinSetObj::new(f.dom.size + g.dom.size),
        cod: FinSetObj::new(f.cod.size + g.cod.size),
        image,
    }
}

/// The block-swap symmetry `σ_{m,n} : [m+n] → [m+n]` moving the first `m`
/// elements after the last `n`: `i ↦ i+n` for `i ≤ m`, `i ↦ i−m` otherwise.
pub fn block_swap(m: usize, n: usize) -> Injection {
    let image = (1..=m + n)
        .map(|i| if i <= m { i + n } else { i - m })
        .collect();
    Injection {
        dom: FinSetObj::new(m + n),
        cod: FinSetObj::new(m + n),
        image,
    }
}

/// An element of the symmetric group `Σ_n`, stored as the sequence of images
/// of `1, …, n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    mapping: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(mapping: Vec<usize>) -> Result<Self> {
        Permutation::new(mapping)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.mapping
    }
}

impl Permutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &v in &mapping {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidData(format!(
                    "mapping {mapping:?} is not a bijection on 1..={n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { mapping })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            mapping: (1..=n).collect(),
        }
    }

    /// The adjacent transposition `s_i = (i, i+1)` in `Σ_n`.
    pub fn adjacent_transposition(i: usize, n: usize) -> Self {
        let mut mapping: Vec<usize> = (1..=n).collect();
        mapping.swap(i - 1, i);
        Permutation { mapping }
    }

    pub fn size(&self) -> usize {
        self.mapping.len()
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    /// The image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.mapping[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Functional composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.size(), other.size());
        Permutation {
            mapping: other.mapping.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut mapping = vec![0; self.mapping.len()];
        for (i, &v) in self.mapping.iter().enumerate() {
            mapping[v - 1] = i + 1;
        }
        Permutation { mapping }
    }

    /// All of `Σ_n` in lexicographic order of the image sequences.
    pub fn enumerate(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        for f in enumerate_injections(n, n) {
            out.push(Permutation { mapping: f.image });
        }
        out
    }

    /// Decomposes into adjacent transpositions: returns indices
    /// `i_1, …, i_r` with `self = s_{i_r} ∘ ⋯ ∘ s_{i_1}` (apply `s_{i_1}`
    /// first).
    pub fn adjacent_word(&self) -> Vec<usize> {
        // Bubble-sort the one-line form; swapping entries at positions
        // t, t+1 is right-composition with s_t, so sigma . s_{t_1} ... s_{t_r} = id
        // and the swaps rebuild sigma when applied first to last.
        let mut word = Vec::new();
        let mut line = self.mapping.clone();
        let n = line.len();
        loop {
            let mut swapped = false;
            for j in 0..n.saturating_sub(1) {
                if line[j] > line[j + 1] {
                    line.swap(j, j + 1);
                    word.push(j + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        word
    }

    /// The block permutation `τ⟨j_1, …, j_k⟩` on `[Σ j_i]`: block `i` of the
    /// source layout `(j_1, …, j_k)` is carried order-preservingly onto slot
    /// `τ(i)` of the target layout `(j_{τ⁻¹(1)}, …, j_{τ⁻¹(k)})`.
    pub fn block_permutation(tau: &Permutation, sizes: &[usize]) -> Permutation {
        let k = tau.size();
        debug_assert_eq!(k, sizes.len());
        let total: usize = sizes.iter().sum();
        let inv = tau.inverse();
        let mut target_offsets = vec![0usize; k + 1];
        for t in 1..=k {
            target_offsets[t] = target_offsets[t - 1] + sizes[inv.apply(t) - 1];
        }
        let mut mapping = vec![0; total];
        let mut src_off = 0;
        for i in 1..=k {
            let dst_off = target_offsets[tau.apply(i) - 1];
            for r in 0..sizes[i - 1] {
                mapping[src_off + r] = dst_off + r + 1;
            }
            src_off += sizes[i - 1];
        }
        Permutation { mapping }
    }

    /// The block sum `ρ_1 ⊕ ⋯ ⊕ ρ_k` acting within consecutive blocks.
    pub fn block_sum(perms: &[Permutation]) -> Permutation {
        let mut mapping = Vec::new();
        let mut off = 0;
        for p in perms {
            mapping.extend(p.mapping.iter().map(|&v| v + off));
            off += p.size();
        }
        Permutation { mapping }
    }
}

/// An unordered partition of `{1, …, n}` into nonempty blocks, stored with
/// each block sorted and blocks ordered by ascending least element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "PartitionRepr", into = "PartitionRepr")]
pub struct UnorderedPartition {
    ground: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct PartitionRepr {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<PartitionRepr> for UnorderedPartition {
    type Error = Error;
    fn try_from(r: PartitionRepr) -> Result<Self> {
        UnorderedPartition::new(r.n, r.blocks)
    }
}

impl From<UnorderedPartition> for PartitionRepr {
    fn from(p: UnorderedPartition) -> Self {
        PartitionRepr {
            n: p.ground,
            blocks: p.blocks,
        }
    }
}

impl UnorderedPartition {
    /// Builds a partition from blocks given in any order; blocks are sorted
    /// into canonical form. Validates disjointness and coverage.
    pub fn new(ground: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; ground];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidData("empty partition block".into()));
            }
            block.sort_unstable();
            for &v in block.iter() {
                if v == 0 || v > ground {
                    return Err(Error::InvalidData(format!(
                        "block element {v} outside 1..={ground}"
                    )));
                }
                if seen[v - 1] {
                    return Err(Error::InvalidData(format!("element {v} in two blocks")));
                }
                seen[v - 1] = true;
            }
        }
        if seen.iter().any(|&b| !b) {
            return Err(Error::InvalidData("blocks do not cover the ground set".into()));
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(UnorderedPartition { ground, blocks })
    }

    /// The partition of `[n]` into consecutive blocks of the given sizes.
    pub fn consecutive(sizes: &[usize]) -> Self {
        let mut blocks = Vec::with_capacity(sizes.len());
        let mut next = 1;
        for &s in sizes {
            blocks.push((next..next + s).collect());
            next += s;
        }
        UnorderedPartition {
            ground: next - 1,
            blocks,
        }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    /// The permutation `s(P)` of `[n]` carrying the standard consecutive
    /// layout of the canonical block sizes onto the actual blocks: position
    /// `offset_i + r` maps to the `r`-th smallest element of block `i`.
    pub fn layout_permutation(&self) -> Permutation {
        let mut mapping = Vec::with_capacity(self.ground);
        for block in &self.blocks {
            mapping.extend(block.iter().copied());
        }
        Permutation { mapping }
    }

    /// Compact display such as `{1,3}{2}`.
    pub fn display(&self) -> String {
        let mut s = String::new();
        for block in &self.blocks {
            s.push('{');
            for (i, v) in block.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                s.push_str(&v.to_string());
            }
            s.push('}');
        }
        s
    }
}

/// An ordered composition `(j_1, …, j_k)` of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct OrderedComposition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for OrderedComposition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        OrderedComposition::new(parts)
    }
}

impl From<OrderedComposition> for Vec<usize> {
    fn from(c: OrderedComposition) -> Vec<usize> {
        c.parts
    }
}

impl OrderedComposition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidData(
                "composition parts must be positive and nonempty".into(),
            ));
        }
        Ok(OrderedComposition { parts })
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }
}

/// All unordered partitions of `{1, …, n}`, optionally into exactly `k`
/// blocks. Element 1 joins the first block, and each subsequent element is
/// inserted into existing blocks in order or opens a new final block, so the
/// output is already canonical and deterministically ordered.
pub fn enumerate_partitions(n: usize, k: Option<usize>) -> Vec<UnorderedPartition> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn rec(
        next: usize,
        n: usize,
        k: Option<usize>,
        blocks: &mut Vec<Vec<usize>>,
        out: &mut Vec<UnorderedPartition>,
    ) {
        if next > n {
            if k.map_or(true, |k| blocks.len() == k) {
                out.push(UnorderedPartition {
                    ground: n,
                    blocks: blocks.clone(),
                });
            }
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(next);
            rec(next + 1, n, k, blocks, out);
            blocks[i].pop();
        }
        // A new block never beats the bound k, and remaining elements can
        // always fill up to it; prune only on overshoot.
        if k.map_or(true, |k| blocks.len() < k) {
            blocks.push(vec![next]);
            rec(next + 1, n, k, blocks, out);
            blocks.pop();
        }
    }
    rec(1, n, k, &mut blocks, &mut out);
    out
}

/// All ordered `k`-tuples of positive integers summing to `n`, in
/// lexicographic order. Empty when `k > n`.
pub fn enumerate_compositions(n: usize, k: usize) -> Vec<OrderedComposition> {
    let mut out = Vec::new();
    if k == 0 || k > n {
        return out;
    }
    let mut parts = Vec::with_capacity(k);
    fn rec(remaining: usize, slots: usize, parts: &mut Vec<usize>, out: &mut Vec<OrderedComposition>) {
        if slots == 1 {
            parts.push(remaining);
            out.push(OrderedComposition {
                parts: parts.clone(),
            });
            parts.pop();
            return;
        }
        for p in 1..=remaining - (slots - 1) {
            parts.push(p);
            rec(remaining - p, slots - 1, parts, out);
            parts.pop();
        }
    }
    rec(n, k, &mut parts, &mut out);
    out
}

/// The data induced by letting `σ ∈ Σ_n` act on a partition `P` of `[n]`:
///
/// - the image partition `σP` in canonical order,
/// - `τ ∈ Σ_k` recording where each canonical block of `P` lands among the
///   canonical blocks of `σP`,
/// - for each block `i` of `P` (in canonical order) the permutation of
///   `[n_i]` obtained by conjugating `σ|_block` with the order-preserving
///   identifications of source and target blocks with `[n_i]`.
///
/// Applying `σ` then `ρ` agrees with applying `ρ ∘ σ`: the `τ`s compose and
/// the block permutations compose after repositioning by `τ`.
pub fn induced_block_data(
    sigma: &Permutation,
    p: &UnorderedPartition,
) -> Result<(UnorderedPartition, Permutation, Vec<Permutation>)> {
    if sigma.size() != p.ground() {
        return Err(Error::SizeMismatch {
            expected: p.ground(),
            found: sigma.size(),
        });
    }
    let k = p.num_blocks();
    // Image blocks, remembering which source block produced each.
    let mut images: Vec<(Vec<usize>, usize)> = p
        .blocks()
        .iter()
        .enumerate()
        .map(|(i, block)| {
            let mut img: Vec<usize> = block.iter().map(|&v| sigma.apply(v)).collect();
            img.sort_unstable();
            (img, i)
        })
        .collect();
    images.sort_by_key(|(img, _)| img[0]);

    let mut tau_mapping = vec![0; k];
    let mut block_perms = vec![Permutation::identity(0); k];
    for (pos, (img, src)) in images.iter().enumerate() {
        tau_mapping[*src] = pos + 1;
        let src_block = &p.blocks()[*src];
        let mapping = src_block
            .iter()
            .map(|&v| {
                let target = sigma.apply(v);
                img.binary_search(&target).expect("image element present") + 1
            })
            .collect();
        block_perms[*src] = Permutation { mapping };
    }
    let sigma_p = UnorderedPartition {
        ground: p.ground(),
        blocks: images.into_iter().map(|(img, _)| img).collect(),
    };
    Ok((sigma_p, Permutation { mapping: tau_mapping }, block_perms))
}
