//! A symbolic model of symmetric functor sequences: finite wedges of
//! monomial multifunctors `(X_1, …, X_k) ↦ A ∧ X_1^{∧d_1} ∧ ⋯ ∧ X_k^{∧d_k}`.
//!
//! Coefficients are finite pointed sets whose elements are multisets of
//! atomic labels; smashing coefficients is elementwise multiset union, so
//! the one-point coefficient with the empty atom list is a strict unit.
//!
//! Substitution of sequences is indexed by set partitions of the variable
//! set: a summand `G_k ∘ (F_{j_1} × ⋯ × F_{j_k})` appears once for every
//! partition of `{1..n}` whose canonical block sizes are `(j_1, …, j_k)`,
//! with variables routed to slots by the canonical order identifications.
//! This makes the multilinear fragment match the composition product of
//! symmetric sequences on the nose — the content of the chain-rule
//! comparison below.
//!
//! Multilinearization at `S⁰` keeps exactly the exponent-`(1,…,1)`
//! monomials: in the stabilized setting monomials of higher degree in any
//! variable contribute nothing at `S⁰`, while linear ones are already fixed.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::combinat::{enumerate_partitions, induced_block_data, Permutation, UnorderedPartition};
use crate::symseq::{compose_cardinality, compose_product, PointedSigmaSet, SymSeq};
use crate::{Error, Result};

/// A coefficient element: a multiset of atomic labels, kept sorted. The
/// empty multiset is the unit element (an `S⁰` point).
pub type CoeffElt = Vec<String>;

fn coeff_elt_label(e: &CoeffElt) -> String {
    if e.is_empty() {
        "1".to_string()
    } else {
        e.join("*")
    }
}

fn parse_coeff_elt(s: &str) -> CoeffElt {
    if s.is_empty() || s == "1" {
        return Vec::new();
    }
    let mut atoms: Vec<String> = s.split('*').map(str::to_string).collect();
    atoms.sort();
    atoms
}

/// A monomial multifunctor `A ∧ X_1^{∧d_1} ∧ ⋯ ∧ X_k^{∧d_k}` with pointed
/// coefficient set `A`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MonomialRepr", into = "MonomialRepr")]
pub struct Monomial {
    coeff: Vec<CoeffElt>,
    exponents: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct MonomialRepr {
    coeff: Vec<String>,
    exp: Vec<usize>,
}

impl TryFrom<MonomialRepr> for Monomial {
    type Error = Error;
    fn try_from(r: MonomialRepr) -> Result<Self> {
        Monomial::new(
            r.coeff.iter().map(|s| parse_coeff_elt(s)).collect(),
            r.exp,
        )
    }
}

impl From<Monomial> for MonomialRepr {
    fn from(m: Monomial) -> MonomialRepr {
        MonomialRepr {
            coeff: m.coeff.iter().map(coeff_elt_label).collect(),
            exp: m.exponents,
        }
    }
}

impl Monomial {
    /// Atom lists are sorted per element; the element order itself is kept
    /// as given (it is part of the wedge bookkeeping, not of the signature).
    pub fn new(coeff: Vec<CoeffElt>, exponents: Vec<usize>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::InvalidData("monomial arity must be positive".into()));
        }
        let coeff = coeff
            .into_iter()
            .map(|mut e| {
                e.sort();
                e
            })
            .collect();
        Ok(Monomial { coeff, exponents })
    }

    /// A single-element coefficient built from plain labels, exponents as
    /// given.
    pub fn simple(atoms: &[&str], exponents: &[usize]) -> Self {
        let mut elt: CoeffElt = atoms.iter().map(|s| s.to_string()).collect();
        elt.sort();
        Monomial {
            coeff: vec![elt],
            exponents: exponents.to_vec(),
        }
    }

    pub fn arity(&self) -> usize {
        self.exponents.len()
    }

    pub fn coeff(&self) -> &[CoeffElt] {
        &self.coeff
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    pub fn is_multilinear(&self) -> bool {
        self.exponents.iter().all(|&d| d == 1)
    }

    /// True when every variable occurs: evaluating any variable at the point
    /// collapses the monomial.
    pub fn is_multipointed(&self) -> bool {
        self.exponents.iter().all(|&d| d >= 1)
    }

    /// Comparison key ignoring element order inside the coefficient.
    fn signature(&self) -> (Vec<CoeffElt>, Vec<usize>) {
        let mut sorted = self.coeff.clone();
        sorted.sort();
        (sorted, self.exponents.clone())
    }

    fn permuted_signature(&self, sigma: &Permutation) -> (Vec<CoeffElt>, Vec<usize>) {
        let mut sorted = self.coeff.clone();
        sorted.sort();
        // sigma moves variable i to position sigma(i).
        let mut exp = vec![0usize; self.exponents.len()];
        for (i, &d) in self.exponents.iter().enumerate() {
            exp[sigma.apply(i + 1) - 1] = d;
        }
        (sorted, exp)
    }
}

/// A finite wedge of monomials of a common arity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LevelRepr", into = "LevelRepr")]
pub struct PolyMultiFun {
    arity: usize,
    terms: Vec<Monomial>,
}

#[derive(Serialize, Deserialize)]
struct LevelRepr {
    n: usize,
    terms: Vec<MonomialRepr>,
}

impl TryFrom<LevelRepr> for PolyMultiFun {
    type Error = Error;
    fn try_from(r: LevelRepr) -> Result<Self> {
        let terms = r
            .terms
            .into_iter()
            .map(Monomial::try_from)
            .collect::<Result<Vec<_>>>()?;
        PolyMultiFun::new(r.n, terms)
    }
}

impl From<PolyMultiFun> for LevelRepr {
    fn from(f: PolyMultiFun) -> LevelRepr {
        LevelRepr {
            n: f.arity,
            terms: f.terms.into_iter().map(MonomialRepr::from).collect(),
        }
    }
}

impl PolyMultiFun {
    pub fn new(arity: usize, terms: Vec<Monomial>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::InvalidData("arity must be positive".into()));
        }
        for t in &terms {
            if t.arity() != arity {
                return Err(Error::ArityMismatch(format!(
                    "term of arity {} in a level of arity {arity}",
                    t.arity()
                )));
            }
        }
        Ok(PolyMultiFun { arity, terms })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    /// Term multiset comparison (order-insensitive).
    pub fn same_terms(&self, other: &PolyMultiFun) -> bool {
        if self.arity != other.arity {
            return false;
        }
        let mut a: Vec<_> = self.terms.iter().map(Monomial::signature).collect();
        let mut b: Vec<_> = other.terms.iter().map(Monomial::signature).collect();
        a.sort();
        b.sort();
        a == b
    }
}

/// A finite pointed set given by its non-basepoint labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointedSet {
    pub elements: Vec<String>,
}

impl PointedSet {
    pub fn s0() -> Self {
        PointedSet {
            elements: vec!["1".into()],
        }
    }

    pub fn point() -> Self {
        PointedSet {
            elements: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Evaluates a wedge of monomials on concrete pointed sets. Non-basepoint
/// outputs are tuples (term, coefficient element, one input element per
/// smash factor); a variable with positive exponent evaluated at the point
/// contributes nothing for that term.
pub fn evaluate(f: &PolyMultiFun, inputs: &[PointedSet]) -> Result<PointedSet> {
    if inputs.len() != f.arity() {
        return Err(Error::ArityMismatch(format!(
            "{} inputs for arity {}",
            inputs.len(),
            f.arity()
        )));
    }
    let mut elements = Vec::new();
    for (t, term) in f.terms.iter().enumerate() {
        let mut factor_counts: Vec<usize> = vec![term.coeff.len()];
        for (i, &d) in term.exponents.iter().enumerate() {
            for _ in 0..d {
                factor_counts.push(inputs[i].len());
            }
        }
        for tuple in crate::symseq::tuples(&factor_counts) {
            let mut label = format!("t{t}|{}", coeff_elt_label(&term.coeff[tuple[0]]));
            let mut pos = 1;
            for (i, &d) in term.exponents.iter().enumerate() {
                for _ in 0..d {
                    label.push('|');
                    label.push_str(&inputs[i].elements[tuple[pos]]);
                    pos += 1;
                }
            }
            elements.push(label);
        }
    }
    Ok(PointedSet { elements })
}

/// A symmetric functor sequence, truncated: level `n` is a wedge of
/// arity-`n` monomials. Construction validates that each level admits
/// symmetry witnesses: for every adjacent transposition the multiset of
/// term signatures must be invariant under permuting exponents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PolyFunSeqRepr", into = "PolyFunSeqRepr")]
pub struct PolyFunSeq {
    levels: Vec<PolyMultiFun>,
}

#[derive(Serialize, Deserialize)]
struct PolyFunSeqRepr {
    levels: Vec<LevelRepr>,
}

impl TryFrom<PolyFunSeqRepr> for PolyFunSeq {
    type Error = Error;
    fn try_from(r: PolyFunSeqRepr) -> Result<Self> {
        let mut levels = Vec::new();
        for (i, lvl) in r.levels.into_iter().enumerate() {
            if lvl.n != i + 1 {
                return Err(Error::InvalidData(format!(
                    "levels must be listed as 1..N; found n={} at position {}",
                    lvl.n,
                    i + 1
                )));
            }
            levels.push(PolyMultiFun::try_from(lvl)?);
        }
        PolyFunSeq::new(levels)
    }
}

impl From<PolyFunSeq> for PolyFunSeqRepr {
    fn from(s: PolyFunSeq) -> PolyFunSeqRepr {
        PolyFunSeqRepr {
            levels: s.levels.into_iter().map(LevelRepr::from).collect(),
        }
    }
}

impl PolyFunSeq {
    pub fn new(levels: Vec<PolyMultiFun>) -> Result<Self> {
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
            return Err(Error::InvalidData("a functor sequence needs level 1".into()));
        }
        let seq = PolyFunSeq { levels };
        // Symmetry witnesses must exist; deriving the canonical action
        // performs exactly that check.
        canonical_action(&seq)?;
        Ok(seq)
    }

    pub fn max_level(&self) -> usize {
        self.levels.len()
    }

    pub fn level(&self, n: usize) -> Result<&PolyMultiFun> {
        self.levels.get(n - 1).ok_or(Error::Truncation {
            needed: n,
            available: self.levels.len(),
        })
    }

    pub fn is_multipointed(&self) -> bool {
        self.levels
            .iter()
            .all(|lvl| lvl.terms.iter().all(Monomial::is_multipointed))
    }

    /// Applies an injective relabeling to every atom (a morphism of
    /// sequences in the symbolic model).
    pub fn rename_atoms(&self, map: &BTreeMap<String, String>) -> PolyFunSeq {
        let levels = self
            .levels
            .iter()
            .map(|lvl| PolyMultiFun {
                arity: lvl.arity,
                terms: lvl
                    .terms
                    .iter()
                    .map(|t| {
                        let coeff = t
                            .coeff
                            .iter()
                            .map(|e| {
                                let mut e: Vec<String> = e
                                    .iter()
                                    .map(|a| map.get(a).cloned().unwrap_or_else(|| a.clone()))
                                    .collect();
                                e.sort();
                                e
                            })
                            .collect();
                        Monomial {
                            coeff,
                            exponents: t.exponents.clone(),
                        }
                    })
                    .collect(),
            })
            .collect();
        PolyFunSeq { levels }
    }
}

/// The unit functor sequence: the identity functor at level 1 (one monomial,
/// unit coefficient, exponent 1), nothing above.
pub fn unit_funseq(max_level: usize) -> PolyFunSeq {
    let mut levels = vec![PolyMultiFun {
        arity: 1,
        terms: vec![Monomial {
            coeff: vec![Vec::new()],
            exponents: vec![1],
        }],
    }];
    for n in 2..=max_level {
        levels.push(PolyMultiFun {
            arity: n,
            terms: Vec::new(),
        });
    }
    PolyFunSeq { levels }
}

/// The smash-power functor sequence `∧_k`: one monomial per level with unit
/// coefficient and exponents `(1, …, 1)`.
pub fn smash_powers(max_level: usize) -> PolyFunSeq {
    let levels = (1..=max_level)
        .map(|n| PolyMultiFun {
            arity: n,
            terms: vec![Monomial {
                coeff: vec![Vec::new()],
                exponents: vec![1; n],
            }],
        })
        .collect();
    PolyFunSeq { levels }
}

/// One generator's worth of action data on a level: where each term goes and
/// where each coefficient element inside it goes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorAction {
    pub term_map: Vec<usize>,
    /// `elt_maps[t][e]` is the element index inside term `term_map[t]`.
    pub elt_maps: Vec<Vec<usize>>,
}

/// Symmetry-witness data for a whole sequence: per level, one
/// [`GeneratorAction`] for each adjacent transposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunSeqAction {
    pub levels: Vec<Vec<GeneratorAction>>,
}

impl FunSeqAction {
    /// Acts by an arbitrary permutation on a (term, element) pair of the
    /// given level.
    pub fn act(
        &self,
        level: usize,
        sigma: &Permutation,
        term: usize,
        elt: usize,
    ) -> (usize, usize) {
        let (mut t, mut e) = (term, elt);
        for g in sigma.adjacent_word() {
            let ga = &self.levels[level - 1][g - 1];
            let (nt, ne) = (ga.term_map[t], ga.elt_maps[t][e]);
            t = nt;
            e = ne;
        }
        (t, e)
    }
}

/// Derives the canonical symmetry witnesses: terms with equal signatures are
/// matched in stored order, coefficient elements by their sorted positions.
/// Errors when some level is not symmetric.
pub fn canonical_action(seq: &PolyFunSeq) -> Result<FunSeqAction> {
    let mut levels = Vec::with_capacity(seq.levels.len());
    for lvl in &seq.levels {
        let n = lvl.arity;
        let mut gens = Vec::with_capacity(n.saturating_sub(1));
        for g in 1..n {
            let sigma = Permutation::adjacent_transposition(g, n);
            // Group targets by signature, in stored order.
            let mut groups: BTreeMap<(Vec<CoeffElt>, Vec<usize>), Vec<usize>> = BTreeMap::new();
            for (t, term) in lvl.terms.iter().enumerate() {
                groups.entry(term.signature()).or_default().push(t);
            }
            let mut cursor: BTreeMap<(Vec<CoeffElt>, Vec<usize>), usize> = BTreeMap::new();
            let mut term_map = vec![0usize; lvl.terms.len()];
            let mut elt_maps = Vec::with_capacity(lvl.terms.len());
            for (t, term) in lvl.terms.iter().enumerate() {
                let target_sig = term.permuted_signature(&sigma);
                let group = groups.get(&target_sig).ok_or_else(|| {
                    Error::InvalidData(format!(
                        "level {n} is not symmetric: no counterpart for term {t} under s_{g}"
                    ))
                })?;
                let c = cursor.entry(target_sig.clone()).or_insert(0);
                if *c >= group.len() {
                    return Err(Error::InvalidData(format!(
                        "level {n} is not symmetric: term multiplicities differ under s_{g}"
                    )));
                }
                let target = group[*c];
                *c += 1;
                term_map[t] = target;
                // Stable element matching through the sorted orders.
                let src_rank = sort_ranks(&term.coeff);
                let dst_rank_inv = inverse_ranks(&lvl.terms[target].coeff);
                let elt_map = src_rank.iter().map(|&r| dst_rank_inv[r]).collect();
                elt_maps.push(elt_map);
            }
            gens.push(GeneratorAction { term_map, elt_maps });
        }
        levels.push(gens);
    }
    Ok(FunSeqAction { levels })
}

/// For each element, its rank in the sorted order (ties broken by index).
fn sort_ranks(coeff: &[CoeffElt]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..coeff.len()).collect();
    idx.sort_by(|&a, &b| coeff[a].cmp(&coeff[b]).then(a.cmp(&b)));
    let mut rank = vec![0usize; coeff.len()];
    for (r, &i) in idx.iter().enumerate() {
        rank[i] = r;
    }
    rank
}

/// For each rank, the element index holding it.
fn inverse_ranks(coeff: &[CoeffElt]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..coeff.len()).collect();
    idx.sort_by(|&a, &b| coeff[a].cmp(&coeff[b]).then(a.cmp(&b)));
    idx
}

/// Where a composed term came from: the partition of the variables, the
/// outer term, and for each canonical block the ordered tuple of inner terms
/// substituted into that slot (one per unit of the outer exponent).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TermProvenance {
    pub partition: UnorderedPartition,
    pub outer_term: usize,
    pub inner_terms: Vec<Vec<usize>>,
}

/// The substitution `G ∘ F` with full provenance and the structural action
/// induced from the actions of `G` and `F`.
#[derive(Debug, Clone)]
pub struct ComposedFunSeq {
    pub seq: PolyFunSeq,
    pub action: FunSeqAction,
    pub provenance: Vec<Vec<TermProvenance>>,
    index: Vec<BTreeMap<TermProvenance, usize>>,
}

impl ComposedFunSeq {
    pub fn term_index(&self, n: usize, p: &TermProvenance) -> Option<usize> {
        self.index[n - 1].get(p).copied()
    }
}

/// Sizes of the coefficient factors of a composed term, `G`-element first,
/// then the chosen inner terms in slot-copy order.
fn factor_sizes(g: &PolyFunSeq, f: &PolyFunSeq, p: &TermProvenance) -> Vec<usize> {
    let k = p.partition.num_blocks();
    let sizes = p.partition.block_sizes();
    let mut out = vec![g.levels[k - 1].terms[p.outer_term].coeff.len()];
    for (i, copies) in p.inner_terms.iter().enumerate() {
        for &ft in copies {
            out.push(f.levels[sizes[i] - 1].terms[ft].coeff.len());
        }
    }
    out
}

fn mixed_radix_encode(digits: &[usize], sizes: &[usize]) -> usize {
    let mut v = 0;
    for (d, s) in digits.iter().zip(sizes) {
        v = v * s + d;
    }
    v
}

fn mixed_radix_decode(mut v: usize, sizes: &[usize]) -> Vec<usize> {
    let mut digits = vec![0usize; sizes.len()];
    for i in (0..sizes.len()).rev() {
        digits[i] = v % sizes[i];
        v /= sizes[i];
    }
    digits
}

/// The substitution of `F` into `G`, expanded distributively over monomials
/// and indexed by set partitions of the variables. `F` must be multipointed;
/// constant terms are allowed in `G` (their slots receive no copies).
pub fn compose_funseq(
    g: &PolyFunSeq,
    g_action: &FunSeqAction,
    f: &PolyFunSeq,
    f_action: &FunSeqAction,
    max_level: usize,
) -> Result<ComposedFunSeq> {
    if g.max_level() < max_level {
        return Err(Error::Truncation {
            needed: max_level,
            available: g.max_level(),
        });
    }
    if f.max_level() < max_level {
        return Err(Error::Truncation {
            needed: max_level,
            available: f.max_level(),
        });
    }
    if !f.is_multipointed() {
        return Err(Error::InvalidData(
            "inner sequence must be multipointed (every exponent ≥ 1)".into(),
        ));
    }

    let mut levels = Vec::with_capacity(max_level);
    let mut provenance = Vec::with_capacity(max_level);
    let mut index = Vec::with_capacity(max_level);

    for n in 1..=max_level {
        let mut terms: Vec<Monomial> = Vec::new();
        let mut provs: Vec<TermProvenance> = Vec::new();
        for partition in enumerate_partitions(n, None) {
            let sizes = partition.block_sizes();
            let k = sizes.len();
            for (gt, g_term) in g.levels[k - 1].terms.iter().enumerate() {
                // Ordered tuples of inner terms, one per unit of exponent in
                // each slot.
                let mut copy_counts: Vec<usize> = Vec::new();
                for (i, &d) in g_term.exponents.iter().enumerate() {
                    let available = f.levels[sizes[i] - 1].terms.len();
                    for _ in 0..d {
                        copy_counts.push(available);
                    }
                }
                for flat_choice in crate::symseq::tuples(&copy_counts) {
                    // Regroup the flat choice per slot.
                    let mut inner_terms: Vec<Vec<usize>> = Vec::with_capacity(k);
                    let mut pos = 0;
                    for &d in g_term.exponents.iter() {
                        inner_terms.push(flat_choice[pos..pos + d].to_vec());
                        pos += d;
                    }
                    // Exponents: each copy adds its exponents on the block's
                    // variables (via the order identification of the block).
                    let mut exponents = vec![0usize; n];
                    for (i, copies) in inner_terms.iter().enumerate() {
                        let block = &partition.blocks()[i];
                        for &ft in copies {
                            let f_term = &f.levels[sizes[i] - 1].terms[ft];
                            for (r, &v) in block.iter().enumerate() {
                                exponents[v - 1] += f_term.exponents[r];
                            }
                        }
                    }
                    // Coefficient: smash of the outer coefficient with every
                    // chosen copy's coefficient, elements in lexicographic
                    // tuple order.
                    let prov = TermProvenance {
                        partition: partition.clone(),
                        outer_term: gt,
                        inner_terms,
                    };
                    let sizes_of_factors = factor_sizes(g, f, &prov);
                    let mut coeff: Vec<CoeffElt> = Vec::new();
                    for tuple in crate::symseq::tuples(&sizes_of_factors) {
                        let mut atoms: CoeffElt = g_term.coeff[tuple[0]].clone();
                        let mut fpos = 1;
                        for (i, copies) in prov.inner_terms.iter().enumerate() {
                            for &ft in copies {
                                let f_term = &f.levels[sizes[i] - 1].terms[ft];
                                atoms.extend(f_term.coeff[tuple[fpos]].iter().cloned());
                                fpos += 1;
                            }
                        }
                        atoms.sort();
                        coeff.push(atoms);
                    }
                    terms.push(Monomial { coeff, exponents });
                    provs.push(prov);
                }
            }
        }
        let idx: BTreeMap<TermProvenance, usize> = provs
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        levels.push(PolyMultiFun { arity: n, terms });
        provenance.push(provs);
        index.push(idx);
    }

    // Structural action: permute the partition, act on the outer term by the
    // block-position permutation, reposition the slots, and act on each
    // inner copy by its conjugated block permutation.
    let mut action_levels = Vec::with_capacity(max_level);
    for n in 1..=max_level {
        let mut gens = Vec::with_capacity(n.saturating_sub(1));
        for gidx in 1..n {
            let sigma = Permutation::adjacent_transposition(gidx, n);
            let mut term_map = Vec::with_capacity(provenance[n - 1].len());
            let mut elt_maps = Vec::with_capacity(provenance[n - 1].len());
            for prov in &provenance[n - 1] {
                let sizes = prov.partition.block_sizes();
                let k = sizes.len();
                let (sp, tau, rhos) = induced_block_data(&sigma, &prov.partition)?;
                let tau_inv = tau.inverse();
                let (new_outer, g_elt_map) =
                    act_term_with_elts(g_action, k, &tau, prov.outer_term, g.levels[k - 1].terms[prov.outer_term].coeff.len());
                let mut new_inner: Vec<Vec<usize>> = Vec::with_capacity(k);
                let mut f_elt_maps: Vec<Vec<Vec<usize>>> = Vec::with_capacity(k);
                for pos in 1..=k {
                    let src = tau_inv.apply(pos) - 1;
                    let m = sizes[src];
                    let mut copies = Vec::with_capacity(prov.inner_terms[src].len());
                    let mut copy_elt_maps = Vec::with_capacity(prov.inner_terms[src].len());
                    for &ft in &prov.inner_terms[src] {
                        let (nt, emap) = act_term_with_elts(
                            f_action,
                            m,
                            &rhos[src],
                            ft,
                            f.levels[m - 1].terms[ft].coeff.len(),
                        );
                        copies.push(nt);
                        copy_elt_maps.push(emap);
                    }
                    new_inner.push(copies);
                    f_elt_maps.push(copy_elt_maps);
                }
                let new_prov = TermProvenance {
                    partition: sp,
                    outer_term: new_outer,
                    inner_terms: new_inner,
                };
                let target = index[n - 1].get(&new_prov).ok_or_else(|| {
                    Error::InvalidData("structural action left the composed level".into())
                })?;
                // Element map through the factor tuples.
                let src_sizes = factor_sizes(g, f, prov);
                let dst_prov = &provenance[n - 1][*target];
                let dst_sizes = factor_sizes(g, f, dst_prov);
                let total: usize = src_sizes.iter().product();
                let mut emap = Vec::with_capacity(total);
                // Flat offsets of each source slot's copies in the tuple.
                let mut src_slot_offsets = Vec::with_capacity(k);
                let mut off = 1;
                for copies in &prov.inner_terms {
                    src_slot_offsets.push(off);
                    off += copies.len();
                }
                for e in 0..total {
                    let digits = mixed_radix_decode(e, &src_sizes);
                    let mut new_digits = vec![0usize; digits.len()];
                    new_digits[0] = g_elt_map[digits[0]];
                    let mut dst_pos = 1;
                    for pos in 1..=k {
                        let src = tau_inv.apply(pos) - 1;
                        for (c, _) in prov.inner_terms[src].iter().enumerate() {
                            let src_digit = digits[src_slot_offsets[src] + c];
                            new_digits[dst_pos] = f_elt_maps[pos - 1][c][src_digit];
                            dst_pos += 1;
                        }
                    }
                    emap.push(mixed_radix_encode(&new_digits, &dst_sizes));
                }
                term_map.push(*target);
                elt_maps.push(emap);
            }
            gens.push(GeneratorAction { term_map, elt_maps });
        }
        action_levels.push(gens);
    }

    Ok(ComposedFunSeq {
        seq: PolyFunSeq { levels },
        action: FunSeqAction {
            levels: action_levels,
        },
        provenance,
        index,
    })
}

/// Acts on a term by an arbitrary permutation and returns the image term
/// together with the full element map.
fn act_term_with_elts(
    action: &FunSeqAction,
    level: usize,
    sigma: &Permutation,
    term: usize,
    coeff_len: usize,
) -> (usize, Vec<usize>) {
    let mut t = term;
    let mut emap: Vec<usize> = (0..coeff_len).collect();
    for g in sigma.adjacent_word() {
        let ga = &action.levels[level - 1][g - 1];
        for e in emap.iter_mut() {
            *e = ga.elt_maps[t][*e];
        }
        t = ga.term_map[t];
    }
    (t, emap)
}

/// Convenience wrapper deriving canonical actions for both inputs.
pub fn compose_funseq_canonical(
    g: &PolyFunSeq,
    f: &PolyFunSeq,
    max_level: usize,
) -> Result<ComposedFunSeq> {
    let ga = canonical_action(g)?;
    let fa = canonical_action(f)?;
    compose_funseq(g, &ga, f, &fa, max_level)
}

/// The multilinear part basis: for each level, the kept (term, element)
/// pairs in order.
#[derive(Debug, Clone)]
pub struct MultilinearBasis {
    pub elements: Vec<Vec<(usize, usize)>>,
    index: Vec<BTreeMap<(usize, usize), usize>>,
}

impl MultilinearBasis {
    pub fn index_of(&self, n: usize, term: usize, elt: usize) -> Option<usize> {
        self.index[n - 1].get(&(term, elt)).copied()
    }
}

/// Multilinearization at `S⁰`: keeps exactly the exponent-`(1,…,1)`
/// monomials of each level, one symmetric-sequence element per coefficient
/// element, with the `Σ_n`-action induced from the symmetry witnesses.
pub fn multilinearize_at_s0(
    seq: &PolyFunSeq,
    action: &FunSeqAction,
) -> Result<(SymSeq, MultilinearBasis)> {
    if !seq.is_multipointed() {
        return Err(Error::InvalidData(
            "multilinearization requires a multipointed sequence".into(),
        ));
    }
    let mut levels = Vec::with_capacity(seq.levels.len());
    let mut all_elements = Vec::with_capacity(seq.levels.len());
    let mut all_index = Vec::with_capacity(seq.levels.len());
    for lvl in &seq.levels {
        let n = lvl.arity;
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (t, term) in lvl.terms.iter().enumerate() {
            if term.is_multilinear() {
                for e in 0..term.coeff.len() {
                    pairs.push((t, e));
                }
            }
        }
        let index: BTreeMap<(usize, usize), usize> = pairs
            .iter()
            .enumerate()
            .map(|(i, &p)| (p, i))
            .collect();
        // The (term, element) prefix keeps labels unique even when a
        // coefficient repeats an atom multiset.
        let labels: Vec<String> = pairs
            .iter()
            .map(|&(t, e)| format!("t{t}e{e}:{}", coeff_elt_label(&lvl.terms[t].coeff[e])))
            .collect();
        let mut gens = Vec::with_capacity(n.saturating_sub(1));
        for g in 1..n {
            let ga = &action.levels[n - 1][g - 1];
            let map = pairs
                .iter()
                .map(|&(t, e)| {
                    let (nt, ne) = (ga.term_map[t], ga.elt_maps[t][e]);
                    index[&(nt, ne)]
                })
                .collect();
            gens.push(map);
        }
        levels.push(PointedSigmaSet::new(n, labels, gens)?);
        all_elements.push(pairs);
        all_index.push(index);
    }
    Ok((
        SymSeq::new(levels)?,
        MultilinearBasis {
            elements: all_elements,
            index: all_index,
        },
    ))
}

/// The sequence attached to an operad with smash in place of product:
/// coefficient `O(k)` at level `k`, exponents `(1,…,1)`, action inherited.
/// Rejected if the operad data fails the axiom checker.
pub fn from_operad(
    o: &crate::symseq::OperadData,
    max_level: usize,
) -> Result<(PolyFunSeq, FunSeqAction)> {
    let report = crate::symseq::check_operad(o, max_level)?;
    if !report.passed() {
        return Err(Error::InvalidData(format!(
            "operad data failed the axiom check: {:?}",
            report.counterexample
        )));
    }
    let mut levels = Vec::with_capacity(max_level);
    let mut action_levels = Vec::with_capacity(max_level);
    for n in 1..=max_level {
        let level = o.seq().level(n)?;
        let coeff: Vec<CoeffElt> = level.elements().iter().map(|l| vec![l.clone()]).collect();
        let terms = if coeff.is_empty() {
            Vec::new()
        } else {
            vec![Monomial {
                coeff,
                exponents: vec![1; n],
            }]
        };
        levels.push(PolyMultiFun { arity: n, terms });
        let mut gens = Vec::with_capacity(n.saturating_sub(1));
        for g in 1..n {
            let sigma = Permutation::adjacent_transposition(g, n);
            let mut elt_map = Vec::with_capacity(level.len());
            for e in 0..level.len() {
                elt_map.push(level.act(&sigma, e)?);
            }
            gens.push(GeneratorAction {
                term_map: if level.is_empty() { vec![] } else { vec![0] },
                elt_maps: if level.is_empty() {
                    vec![]
                } else {
                    vec![elt_map]
                },
            });
        }
        action_levels.push(gens);
    }
    Ok((
        PolyFunSeq { levels },
        FunSeqAction {
            levels: action_levels,
        },
    ))
}

/// The bundled example sequences: the smash powers and the sequence of the
/// one-point operad.
pub fn builtin_examples(max_level: usize) -> Result<Vec<PolyFunSeq>> {
    let com = crate::symseq::OperadData::com(max_level);
    Ok(vec![
        smash_powers(max_level),
        from_operad(&com, max_level)?.0,
    ])
}

/// Per-level cardinality pair for the comparison report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelCardinality {
    pub n: usize,
    pub lhs: usize,
    pub rhs: usize,
    pub oracle: usize,
}

/// A partition summand that contributes nothing because some constituent has
/// no multilinear part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlaggedSummand {
    pub n: usize,
    pub partition: String,
    pub reason: String,
}

/// Report of the chain-rule comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainRuleReport {
    pub status: String,
    pub max_level: usize,
    pub cardinalities: Vec<LevelCardinality>,
    pub counterexample: Option<String>,
    pub flagged_summands: Vec<FlaggedSummand>,
}

impl ChainRuleReport {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// Compares the two routes from a pair of sequences to a symmetric sequence:
/// composing the multilinearizations against multilinearizing the
/// composition. The comparison map sends the partition summand
/// `(P, a, (b_i))` to the same-partition summand of the substitution, with
/// coefficient elements paired off factor by factor; the report records
/// whether this is a well-defined equivariant levelwise bijection.
pub fn chain_rule_compare(
    g: &PolyFunSeq,
    f: &PolyFunSeq,
    max_level: usize,
) -> Result<ChainRuleReport> {
    if !g.is_multipointed() || !f.is_multipointed() {
        return Err(Error::InvalidData(
            "chain-rule comparison requires multipointed sequences".into(),
        ));
    }
    let g_action = canonical_action(g)?;
    let f_action = canonical_action(f)?;
    let (dg, dg_basis) = multilinearize_at_s0(g, &g_action)?;
    let (df, df_basis) = multilinearize_at_s0(f, &f_action)?;
    let lhs = compose_product(&dg, &df, max_level)?;
    let composed = compose_funseq(g, &g_action, f, &f_action, max_level)?;
    let (rhs, rhs_basis) = multilinearize_at_s0(&composed.seq, &composed.action)?;

    let mut cardinalities = Vec::with_capacity(max_level);
    let mut flagged = Vec::new();
    let mut counterexample: Option<String> = None;

    'outer: for n in 1..=max_level {
        let lhs_level = lhs.seq().level(n)?;
        let rhs_level = rhs.level(n)?;
        let oracle = compose_cardinality(&dg, &df, n)?;
        cardinalities.push(LevelCardinality {
            n,
            lhs: lhs_level.len(),
            rhs: rhs_level.len(),
            oracle,
        });

        // Flag dead partition summands.
        for partition in enumerate_partitions(n, None) {
            let k = partition.num_blocks();
            let mut reasons = Vec::new();
            if dg.level(k)?.is_empty() {
                reasons.push(format!("no multilinear part in G({k})"));
            }
            for block in partition.blocks() {
                let m = block.len();
                if df.level(m)?.is_empty() {
                    reasons.push(format!("no multilinear part in F({m})"));
                }
            }
            if !reasons.is_empty() {
                reasons.sort();
                reasons.dedup();
                flagged.push(FlaggedSummand {
                    n,
                    partition: partition.display(),
                    reason: reasons.join("; "),
                });
            }
        }

        // Build mu elementwise.
        let mut mu: Vec<usize> = Vec::with_capacity(lhs.elements(n).len());
        for x in lhs.elements(n) {
            let k = x.partition.num_blocks();
            let sizes = x.partition.block_sizes();
            let (g_term, g_elt) = dg_basis.elements[k - 1][x.outer];
            let mut inner_terms = Vec::with_capacity(k);
            let mut f_elts = Vec::with_capacity(k);
            for (i, &bi) in x.inner.iter().enumerate() {
                let (f_term, f_elt) = df_basis.elements[sizes[i] - 1][bi];
                inner_terms.push(vec![f_term]);
                f_elts.push(f_elt);
            }
            let prov = TermProvenance {
                partition: x.partition.clone(),
                outer_term: g_term,
                inner_terms,
            };
            let term = match composed.term_index(n, &prov) {
                Some(t) => t,
                None => {
                    counterexample =
                        Some(format!("level {n}: no substitution term for {prov:?}"));
                    break 'outer;
                }
            };
            let dst_sizes = factor_sizes(g, f, &composed.provenance[n - 1][term]);
            let mut digits = vec![g_elt];
            digits.extend(f_elts.iter().copied());
            let elt = mixed_radix_encode(&digits, &dst_sizes);
            match rhs_basis.index_of(n, term, elt) {
                Some(i) => mu.push(i),
                None => {
                    counterexample = Some(format!(
                        "level {n}: image (term {term}, element {elt}) not multilinear"
                    ));
                    break 'outer;
                }
            }
        }

        // Bijectivity.
        let mut seen = vec![false; rhs_level.len()];
        for &t in &mu {
            if seen[t] {
                counterexample = Some(format!("level {n}: comparison is not injective"));
                break 'outer;
            }
            seen[t] = true;
        }
        if mu.len() != rhs_level.len() {
            counterexample = Some(format!(
                "level {n}: cardinality mismatch {} vs {}",
                mu.len(),
                rhs_level.len()
            ));
            break 'outer;
        }
        if mu.len() != oracle {
            counterexample = Some(format!(
                "level {n}: partition-sum oracle {oracle} disagrees with {}",
                mu.len()
            ));
            break 'outer;
        }

        // Equivariance on the generators.
        for gidx in 1..n {
            let sigma = Permutation::adjacent_transposition(gidx, n);
            for i in 0..lhs_level.len() {
                let via_lhs = mu[lhs_level.act(&sigma, i)?];
                let via_rhs = rhs_level.act(&sigma, mu[i])?;
                if via_lhs != via_rhs {
                    counterexample = Some(format!(
                        "level {n}: comparison not equivariant under s_{gidx} at element {i}"
                    ));
                    break 'outer;
                }
            }
        }
    }

    flagged.sort_by(|a, b| (a.n, &a.partition).cmp(&(b.n, &b.partition)));
    Ok(ChainRuleReport {
        status: if counterexample.is_none() {
            "pass".into()
        } else {
            "fail".into()
        },
        max_level,
        cardinalities,
        counterexample,
        flagged_summands: flagged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(set: &PointedSet) -> usize {
        set.len()
    }

    #[test]
    fn evaluate_examples() {
        // A ∧ X with |A| = 2 at X = S⁰ has 2 elements.
        let f = PolyMultiFun::new(
            1,
            vec![Monomial::new(vec![vec!["a".into()], vec!["b".into()]], vec![1]).unwrap()],
        )
        .unwrap();
        assert_eq!(labels(&evaluate(&f, &[PointedSet::s0()]).unwrap()), 2);
        // Positive exponent at the point collapses.
        assert_eq!(labels(&evaluate(&f, &[PointedSet::point()]).unwrap()), 0);
        // X ↦ X^∧2 at a 2-element set gives 4.
        let sq = PolyMultiFun::new(1, vec![Monomial::simple(&[], &[2])]).unwrap();
        let x = PointedSet {
            elements: vec!["x".into(), "y".into()],
        };
        assert_eq!(labels(&evaluate(&sq, &[x]).unwrap()), 4);
    }

    #[test]
    fn evaluate_arity_mismatch() {
        let f = PolyMultiFun::new(1, vec![Monomial::simple(&[], &[1])]).unwrap();
        assert!(evaluate(&f, &[]).is_err());
    }

    fn abcd_pair() -> (PolyFunSeq, PolyFunSeq) {
        let g = PolyFunSeq::new(vec![
            PolyMultiFun::new(1, vec![Monomial::simple(&["A"], &[1])]).unwrap(),
            PolyMultiFun::new(2, vec![Monomial::simple(&["B"], &[1, 1])]).unwrap(),
        ])
        .unwrap();
        let f = PolyFunSeq::new(vec![
            PolyMultiFun::new(1, vec![Monomial::simple(&["C"], &[1])]).unwrap(),
            PolyMultiFun::new(2, vec![Monomial::simple(&["D"], &[1, 1])]).unwrap(),
        ])
        .unwrap();
        (g, f)
    }

    #[test]
    fn compose_abcd_level2() {
        let (g, f) = abcd_pair();
        let composed = compose_funseq_canonical(&g, &f, 2).unwrap();
        let lvl2 = composed.seq.level(2).unwrap();
        assert_eq!(lvl2.terms().len(), 2);
        let expected = PolyMultiFun::new(
            2,
            vec![
                Monomial::simple(&["A", "D"], &[1, 1]),
                Monomial::simple(&["B", "C", "C"], &[1, 1]),
            ],
        )
        .unwrap();
        assert!(lvl2.same_terms(&expected));
    }

    #[test]
    fn unit_is_strict_two_sided_unit() {
        let (g, _) = abcd_pair();
        let u = unit_funseq(2);
        let left = compose_funseq_canonical(&u, &g, 2).unwrap();
        let right = compose_funseq_canonical(&g, &u, 2).unwrap();
        assert_eq!(left.seq, g);
        assert_eq!(right.seq, g);
    }

    #[test]
    fn compose_requires_multipointed_inner() {
        let constant = PolyFunSeq::new(vec![PolyMultiFun::new(
            1,
            vec![Monomial::simple(&["c"], &[0])],
        )
        .unwrap()])
        .unwrap();
        let u = unit_funseq(1);
        assert!(compose_funseq_canonical(&u, &constant, 1).is_err());
        // Constants in the outer sequence are fine.
        assert!(compose_funseq_canonical(&constant, &u, 1).is_ok());
    }

    #[test]
    fn compose_associative_on_term_multisets() {
        let (g, f) = abcd_pair();
        let h = PolyFunSeq::new(vec![
            PolyMultiFun::new(1, vec![Monomial::simple(&["E"], &[1])]).unwrap(),
            PolyMultiFun::new(
                2,
                vec![
                    Monomial::simple(&["H"], &[1, 1]),
                    Monomial::simple(&[], &[1, 1]),
                ],
            )
            .unwrap(),
        ])
        .unwrap();
        let n = 2;
        let gf = compose_funseq_canonical(&g, &f, n).unwrap();
        let fh = compose_funseq_canonical(&f, &h, n).unwrap();
        let left = compose_funseq_canonical(&gf.seq, &h, n).unwrap();
        let right = compose_funseq_canonical(&g, &fh.seq, n).unwrap();
        for lvl in 1..=n {
            assert!(left
                .seq
                .level(lvl)
                .unwrap()
                .same_terms(right.seq.level(lvl).unwrap()));
        }
    }

    #[test]
    fn multilinearize_drops_higher_degree() {
        // F_1(X) = X^∧2 has empty multilinear part at level 1.
        let f = PolyFunSeq::new(vec![PolyMultiFun::new(
            1,
            vec![Monomial::simple(&[], &[2])],
        )
        .unwrap()])
        .unwrap();
        let action = canonical_action(&f).unwrap();
        let (seq, _) = multilinearize_at_s0(&f, &action).unwrap();
        assert_eq!(seq.cardinalities(), vec![0]);
    }

    #[test]
    fn multilinearize_keeps_linear() {
        let f = PolyFunSeq::new(vec![PolyMultiFun::new(
            1,
            vec![Monomial::new(vec![vec!["a".into()], vec!["b".into()]], vec![1]).unwrap()],
        )
        .unwrap()])
        .unwrap();
        let action = canonical_action(&f).unwrap();
        let (seq, _) = multilinearize_at_s0(&f, &action).unwrap();
        assert_eq!(seq.cardinalities(), vec![2]);
    }

    #[test]
    fn multilinearize_composed_abcd() {
        let (g, f) = abcd_pair();
        let composed = compose_funseq_canonical(&g, &f, 2).unwrap();
        let (seq, _) = multilinearize_at_s0(&composed.seq, &composed.action).unwrap();
        // Level 2 = A∧D ∨ B∧C∧C.
        assert_eq!(seq.cardinalities(), vec![1, 2]);
    }

    #[test]
    fn chain_rule_on_units() {
        let u = unit_funseq(2);
        let report = chain_rule_compare(&u, &u, 2).unwrap();
        assert!(report.passed(), "{:?}", report.counterexample);
        assert_eq!(report.cardinalities[0].lhs, 1);
        assert_eq!(report.cardinalities[0].rhs, 1);
    }

    #[test]
    fn chain_rule_abcd() {
        let (g, f) = abcd_pair();
        let report = chain_rule_compare(&g, &f, 2).unwrap();
        assert!(report.passed(), "{:?}", report.counterexample);
        assert_eq!(report.cardinalities[1].lhs, 2);
        assert_eq!(report.cardinalities[1].rhs, 2);
    }

    #[test]
    fn chain_rule_singletons_level3_is_bell() {
        let g = smash_powers(3);
        let f = smash_powers(3);
        let report = chain_rule_compare(&g, &f, 3).unwrap();
        assert!(report.passed(), "{:?}", report.counterexample);
        assert_eq!(report.cardinalities[2].lhs, 5);
        assert_eq!(report.cardinalities[2].rhs, 5);
        assert_eq!(report.cardinalities[2].oracle, 5);
    }

    #[test]
    fn chain_rule_flags_dead_summands() {
        // F has no multilinear part at level 2: the {1,2} summand dies.
        let f = PolyFunSeq::new(vec![
            PolyMultiFun::new(1, vec![Monomial::simple(&["c"], &[1])]).unwrap(),
            PolyMultiFun::new(2, vec![Monomial::simple(&["d"], &[2, 1]), Monomial::simple(&["d"], &[1, 2])]).unwrap(),
        ])
        .unwrap();
        let g = smash_powers(2);
        let report = chain_rule_compare(&g, &f, 2).unwrap();
        assert!(report.passed(), "{:?}", report.counterexample);
        assert!(!report.flagged_summands.is_empty());
        assert!(report.flagged_summands[0].reason.contains("F(2)"));
    }

    #[test]
    fn smash_powers_multilinearize_to_singletons() {
        let s = smash_powers(4);
        let action = canonical_action(&s).unwrap();
        let (seq, _) = multilinearize_at_s0(&s, &action).unwrap();
        assert_eq!(seq.cardinalities(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn from_operad_com() {
        let com = crate::symseq::OperadData::com(3);
        let (seq, _) = from_operad(&com, 3).unwrap();
        for n in 1..=3 {
            assert_eq!(seq.level(n).unwrap().terms().len(), 1);
            assert_eq!(seq.level(n).unwrap().terms()[0].coeff().len(), 1);
        }
    }

    #[test]
    fn from_operad_rejects_broken() {
        let com = crate::symseq::OperadData::com(2);
        let broken = com.with_gamma_entry(&[1, 1], (0, vec![0, 0]), None);
        assert!(from_operad(&broken, 2).is_err());
    }

    #[test]
    fn builtin_examples_self_compare() {
        for seq in builtin_examples(3).unwrap() {
            let report = chain_rule_compare(&seq, &seq, 3).unwrap();
            assert!(report.passed(), "{:?}", report.counterexample);
        }
    }

    #[test]
    fn asymmetric_level_is_rejected() {
        // (2,1)-exponents without the (1,2) twin cannot carry witnesses.
        let result = PolyFunSeq::new(vec![
            PolyMultiFun::new(1, vec![Monomial::simple(&["a"], &[1])]).unwrap(),
            PolyMultiFun::new(2, vec![Monomial::simple(&["a"], &[2, 1])]).unwrap(),
        ]);
        assert!(result.is_err());
    }

    #[test]
    fn naturality_under_relabeling() {
        let (g, f) = abcd_pair();
        let mut map = BTreeMap::new();
        map.insert("A".to_string(), "Z".to_string());
        map.insert("C".to_string(), "W".to_string());
        let g2 = g.rename_atoms(&map);
        let f2 = f.rename_atoms(&map);
        let r1 = chain_rule_compare(&g, &f, 2).unwrap();
        let r2 = chain_rule_compare(&g2, &f2, 2).unwrap();
        assert!(r1.passed() && r2.passed());
        assert_eq!(r1.cardinalities, r2.cardinalities);
    }

    #[test]
    fn polyfunseq_json_round_trip() {
        let (g, _) = abcd_pair();
        let json = serde_json::to_value(&g).unwrap();
        let back: PolyFunSeq = serde_json::from_value(json).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn coeff_labels_parse_and_print() {
        let m = Monomial::new(vec![vec![], vec!["b".into(), "a".into()]], vec![1]).unwrap();
        let repr = MonomialRepr::from(m.clone());
        assert_eq!(repr.coeff, vec!["1".to_string(), "a*b".to_string()]);
        let back = Monomial::try_from(repr).unwrap();
        assert_eq!(back, m);
    }
}
