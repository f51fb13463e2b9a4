//! Canonical free bases of finitely generated right ideals of K[F].
//!
//! The basis is computed as the reduced prefix Gröbner basis of the ideal
//! with respect to the shortlex order on words. Its leading power products
//! are exactly the minimal words outside the Schreier transversal `T` (the
//! words having no leading power product as a prefix). Elements whose leading
//! word ends in a positive letter (or the unit `1`) are the *firsts* and form
//! a free basis; the remaining elements, ending in an inverse letter, are the
//! *seconds*.
//!
//! Completion alternates two steps until nothing changes:
//!
//! * reduction of every candidate modulo the current set, inserting nonzero
//!   monic results and evicting elements whose leading word gets covered;
//! * cancellation saturation: for every `g` whose leading word ends in `a`,
//!   the product `g·a⁻¹` must reduce to zero.
//!
//! Once both hold, the kernel of the normal-form map is closed under right
//! multiplication by letters, hence equals the ideal.

use std::collections::VecDeque;

use smallvec::SmallVec;

use crate::algebra::{AlgebraElement, AlgebraMatrix, Field, Letter, Word};
use crate::error::{Error, Result};

/// Default bound on the number of insertions during completion.
pub const DEFAULT_INSERTION_CAP: usize = 100_000;

#[derive(Debug, Clone)]
pub struct GroebnerOptions {
    /// Abort completion after this many insertions.
    pub insertion_cap: usize,
    /// Record the expression of every first in the input generators.
    pub track_transform: bool,
}

impl Default for GroebnerOptions {
    fn default() -> Self {
        GroebnerOptions {
            insertion_cap: DEFAULT_INSERTION_CAP,
            track_transform: false,
        }
    }
}

impl GroebnerOptions {
    pub fn tracked() -> Self {
        GroebnerOptions {
            track_transform: true,
            ..Default::default()
        }
    }
}

/// Trie over letter codes mapping leading words to slots.
#[derive(Debug, Clone)]
struct PrefixTrie {
    nodes: Vec<TrieNode>,
}

#[derive(Debug, Clone, Default)]
struct TrieNode {
    children: SmallVec<[(u8, u32); 4]>,
    value: Option<usize>,
}

impl PrefixTrie {
    fn new() -> Self {
        PrefixTrie {
            nodes: vec![TrieNode::default()],
        }
    }

    fn child(&self, node: usize, code: u8) -> Option<usize> {
        self.nodes[node]
            .children
            .iter()
            .find(|(c, _)| *c == code)
            .map(|(_, n)| *n as usize)
    }

    fn insert(&mut self, w: &Word, value: usize) {
        let mut node = 0;
        for &code in w.codes() {
            node = match self.child(node, code) {
                Some(n) => n,
                None => {
                    let n = self.nodes.len();
                    self.nodes.push(TrieNode::default());
                    self.nodes[node].children.push((code, n as u32));
                    n
                }
            };
        }
        self.nodes[node].value = Some(value);
    }

    fn get(&self, w: &Word) -> Option<usize> {
        let mut node = 0;
        for &code in w.codes() {
            node = self.child(node, code)?;
        }
        self.nodes[node].value
    }

    /// Shortest prefix of `w` carrying a value, with its length.
    fn find_prefix(&self, w: &Word) -> Option<(usize, usize)> {
        let mut node = 0;
        if let Some(v) = self.nodes[0].value {
            return Some((v, 0));
        }
        for (i, &code) in w.codes().iter().enumerate() {
            node = self.child(node, code)?;
            if let Some(v) = self.nodes[node].value {
                return Some((v, i + 1));
            }
        }
        None
    }

    /// Removes and returns all values stored at `w` or below it.
    fn take_subtree(&mut self, w: &Word) -> Vec<usize> {
        let mut node = 0;
        for &code in w.codes() {
            match self.child(node, code) {
                Some(n) => node = n,
                None => return Vec::new(),
            }
        }
        let mut out = Vec::new();
        let mut stack = vec![node];
        while let Some(n) = stack.pop() {
            if let Some(v) = self.nodes[n].value.take() {
                out.push(v);
            }
            stack.extend(self.nodes[n].children.iter().map(|(_, c)| *c as usize));
        }
        out
    }
}

/// An ideal element together with its expression in the input generators.
#[derive(Debug, Clone)]
struct Tracked {
    poly: AlgebraElement,
    prov: Vec<AlgebraElement>,
}

impl Tracked {
    fn scale(&mut self, c: &crate::algebra::Scalar) {
        self.poly = self.poly.scale(c);
        for p in &mut self.prov {
            *p = p.scale(c);
        }
    }

    fn mul_word(&self, w: &Word) -> Tracked {
        Tracked {
            poly: self.poly.mul_word(w),
            prov: self.prov.iter().map(|p| p.mul_word(w)).collect(),
        }
    }
}

struct Completion<'a> {
    opts: &'a GroebnerOptions,
    slots: Vec<Option<Tracked>>,
    trie: PrefixTrie,
    insertions: usize,
    reductions: usize,
}

impl Completion<'_> {
    /// Reduces every word strictly below `start` (all words when `None`).
    fn reduce_below(&mut self, t: &mut Tracked, start: Option<Word>) {
        let mut cursor = start;
        loop {
            let next = match &cursor {
                None => t.poly.term_map().iter().next_back(),
                Some(c) => t.poly.term_map().range(..c.clone()).next_back(),
            };
            let Some((w, c)) = next.map(|(w, c)| (w.clone(), c.clone())) else {
                break;
            };
            if let Some((slot, plen)) = self.trie.find_prefix(&w) {
                let g = self.slots[slot].as_ref().expect("live slot");
                let tail = w.suffix(plen);
                let minus_c = c.neg();
                t.poly.add_scaled_mul_word(&minus_c, &g.poly, &tail);
                for (p, q) in t.prov.iter_mut().zip(&g.prov) {
                    p.add_scaled_mul_word(&minus_c, q, &tail);
                }
                self.reductions += 1;
            }
            cursor = Some(w);
        }
    }

    fn insert(&mut self, mut t: Tracked, pending: &mut VecDeque<Tracked>) -> Result<()> {
        let lead = t.poly.leading_coefficient().expect("nonzero").inv()?;
        t.scale(&lead);
        let lpp = t.poly.lpp().expect("nonzero").clone();
        for slot in self.trie.take_subtree(&lpp) {
            if let Some(old) = self.slots[slot].take() {
                pending.push_back(old);
            }
        }
        self.insertions += 1;
        if self.insertions > self.opts.insertion_cap {
            return Err(Error::CompletionCap(self.opts.insertion_cap));
        }
        let slot = self.slots.len();
        self.slots.push(Some(t));
        self.trie.insert(&lpp, slot);
        Ok(())
    }

    fn live(&self) -> impl Iterator<Item = (usize, &Tracked)> {
        self.slots
            .iter()
            .enumerate()
            .filter_map(|(i, s)| s.as_ref().map(|t| (i, t)))
    }
}

/// Reducer identity inside a [`GroebnerData`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Reducer {
    First(usize),
    Second(usize),
}

/// The canonical data of a right ideal: firsts (a free basis), seconds,
/// the matrix `C` with `seconds = firsts · C`, and optionally the matrix `A`
/// with `generators · A = firsts`.
#[derive(Debug, Clone)]
pub struct GroebnerData {
    field: Field,
    rank: usize,
    firsts: Vec<AlgebraElement>,
    seconds: Vec<AlgebraElement>,
    c: AlgebraMatrix,
    transform: Option<AlgebraMatrix>,
    reducers: Vec<Reducer>,
    trie: PrefixTrie,
    insertions: usize,
}

impl GroebnerData {
    /// Runs completion on `gens` inside K[F] for the given field and rank.
    pub fn compute(
        field: Field,
        rank: usize,
        gens: &[AlgebraElement],
        opts: &GroebnerOptions,
    ) -> Result<GroebnerData> {
        for g in gens {
            if g.field() != field {
                return Err(Error::FieldMismatch(
                    g.field().to_string(),
                    field.to_string(),
                ));
            }
            if g.rank() != rank {
                return Err(Error::RankMismatch(g.rank(), rank));
            }
        }
        let n = gens.len();
        let zero = AlgebraElement::zero(field, rank);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            crate::algebra::support_compare(&gens[a].support(), &gens[b].support()).then(a.cmp(&b))
        });
        let mut pending: VecDeque<Tracked> = order
            .into_iter()
            .map(|i| {
                let prov = if opts.track_transform {
                    let mut p = vec![zero.clone(); n];
                    p[i] = AlgebraElement::one(field, rank);
                    p
                } else {
                    Vec::new()
                };
                Tracked {
                    poly: gens[i].clone(),
                    prov,
                }
            })
            .collect();

        let mut comp = Completion {
            opts,
            slots: Vec::new(),
            trie: PrefixTrie::new(),
            insertions: 0,
            reductions: 0,
        };

        loop {
            while let Some(mut t) = pending.pop_front() {
                comp.reduce_below(&mut t, None);
                if !t.poly.is_zero() {
                    comp.insert(t, &mut pending)?;
                }
            }
            let candidates: Vec<Tracked> = comp
                .live()
                .filter_map(|(_, g)| {
                    let last = g.poly.lpp().and_then(Word::last)?;
                    Some(g.mul_word(&Word::letter(last.inverse())))
                })
                .collect();
            for mut h in candidates {
                comp.reduce_below(&mut h, None);
                if !h.poly.is_zero() {
                    pending.push_back(h);
                }
            }
            if pending.is_empty() {
                break;
            }
        }

        // Tail reduction: every non-leading word is brought into the transversal.
        let live: Vec<usize> = comp.live().map(|(i, _)| i).collect();
        for slot in live {
            let mut t = comp.slots[slot].take().expect("live");
            let lpp = t.poly.lpp().expect("nonzero").clone();
            comp.slots[slot] = Some(t.clone());
            comp.reduce_below(&mut t, Some(lpp));
            comp.slots[slot] = Some(t);
        }

        let mut elems: Vec<Tracked> = comp.slots.into_iter().flatten().collect();
        elems.sort_by(|a, b| a.poly.lpp().cmp(&b.poly.lpp()));
        let (firsts, seconds): (Vec<Tracked>, Vec<Tracked>) = elems.into_iter().partition(|t| {
            !t.poly
                .lpp()
                .and_then(Word::last)
                .is_some_and(Letter::is_inverse)
        });

        let mut data = GroebnerData {
            field,
            rank,
            c: AlgebraMatrix::zero(field, rank, firsts.len(), seconds.len()),
            transform: None,
            reducers: Vec::new(),
            trie: PrefixTrie::new(),
            insertions: comp.insertions,
            firsts: Vec::new(),
            seconds: Vec::new(),
        };
        if opts.track_transform {
            let mut a = AlgebraMatrix::zero(field, rank, n, firsts.len());
            for (i, t) in firsts.iter().enumerate() {
                for (l, p) in t.prov.iter().enumerate() {
                    a.set(l, i, p.clone());
                }
            }
            data.transform = Some(a);
        }
        data.firsts = firsts.into_iter().map(|t| t.poly).collect();
        data.seconds = seconds.into_iter().map(|t| t.poly).collect();
        for (i, f) in data.firsts.iter().enumerate() {
            data.trie
                .insert(f.lpp().expect("nonzero"), data.reducers.len());
            data.reducers.push(Reducer::First(i));
        }
        for (j, s) in data.seconds.iter().enumerate() {
            data.trie
                .insert(s.lpp().expect("nonzero"), data.reducers.len());
            data.reducers.push(Reducer::Second(j));
        }
        data.fill_second_matrix();
        Ok(data)
    }

    /// For a second `β` with leading word `t·x⁻¹`, `β·x = -Σ c_s α_{s·x}`
    /// over the transversal words `s` of `φ(t·x⁻¹) = t·x⁻¹ - β` for which
    /// `s·x` is the leading word of a first `α_{s·x}`.
    fn fill_second_matrix(&mut self) {
        for j in 0..self.seconds.len() {
            let beta = &self.seconds[j];
            let lead = beta.lpp().expect("nonzero").clone();
            let x = lead
                .last()
                .expect("second ends in an inverse letter")
                .inverse();
            let x_inv = Word::letter(x.inverse());
            let x_word = Word::letter(x);
            let mut entries: Vec<(usize, AlgebraElement)> = Vec::new();
            for (s, coef) in beta.terms() {
                if *s == lead || s.last() == Some(x.inverse()) {
                    continue;
                }
                let sx = s.mul(&x_word);
                if let Some(r) = self.trie.get(&sx) {
                    if let Reducer::First(i) = self.reducers[r] {
                        entries.push((
                            i,
                            AlgebraElement::monomial(
                                self.field,
                                self.rank,
                                coef.clone(),
                                x_inv.clone(),
                            ),
                        ));
                    }
                }
            }
            for (i, e) in entries {
                let cur = self.c.get(i, j);
                let sum = cur + &e;
                self.c.set(i, j, sum);
            }
        }
        if cfg!(debug_assertions) {
            for j in 0..self.seconds.len() {
                let mut sum = AlgebraElement::zero(self.field, self.rank);
                for i in 0..self.firsts.len() {
                    sum.add_product(&self.firsts[i], self.c.get(i, j));
                }
                debug_assert_eq!(sum, self.seconds[j], "second not expressed by C");
            }
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn free_rank(&self) -> usize {
        self.rank
    }

    /// The Rosenmann basis.
    pub fn firsts(&self) -> &[AlgebraElement] {
        &self.firsts
    }

    pub fn seconds(&self) -> &[AlgebraElement] {
        &self.seconds
    }

    /// `seconds = firsts · C` column-wise.
    pub fn second_matrix(&self) -> &AlgebraMatrix {
        &self.c
    }

    /// `generators · A = firsts`, present when completion ran tracked.
    pub fn transform(&self) -> Option<&AlgebraMatrix> {
        self.transform.as_ref()
    }

    /// Rank of the ideal as a free module.
    pub fn rank(&self) -> usize {
        self.firsts.len()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.firsts.len() == 1 && self.firsts[0].lpp().is_some_and(Word::is_identity)
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.firsts.is_empty()
    }

    /// Leading words of firsts and seconds, ascending.
    pub fn lpp_set(&self) -> Vec<Word> {
        let mut v: Vec<Word> = self
            .firsts
            .iter()
            .chain(&self.seconds)
            .map(|g| g.lpp().expect("nonzero").clone())
            .collect();
        v.sort();
        v
    }

    /// Number of insertions the completion performed.
    pub fn insertions(&self) -> usize {
        self.insertions
    }

    /// Whether `w` lies in the Schreier transversal.
    pub fn in_transversal(&self, w: &Word) -> bool {
        self.trie.find_prefix(w).is_none()
    }

    fn reducer(&self, r: Reducer) -> &AlgebraElement {
        match r {
            Reducer::First(i) => &self.firsts[i],
            Reducer::Second(j) => &self.seconds[j],
        }
    }

    fn check(&self, f: &AlgebraElement) -> Result<()> {
        if f.field() != self.field {
            return Err(Error::FieldMismatch(
                f.field().to_string(),
                self.field.to_string(),
            ));
        }
        if f.rank() != self.rank {
            return Err(Error::RankMismatch(f.rank(), self.rank));
        }
        Ok(())
    }

    /// The unique representative of `f + I` spanned by transversal words.
    pub fn remainder(&self, f: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(f)?;
        Ok(self.divide(f, false).1)
    }

    pub fn contains(&self, f: &AlgebraElement) -> Result<bool> {
        Ok(self.remainder(f)?.is_zero())
    }

    /// Coefficients `g` and remainder `r` with `f = Σ firsts_i · g_i + r`.
    pub fn extract_coefficients(
        &self,
        f: &AlgebraElement,
    ) -> Result<(Vec<AlgebraElement>, AlgebraElement)> {
        self.check(f)?;
        let (coeffs, rem) = self.divide(f, true);
        if cfg!(debug_assertions) {
            let mut check = rem.clone();
            for (a, g) in self.firsts.iter().zip(&coeffs) {
                check.add_product(a, g);
            }
            debug_assert_eq!(&check, f, "division identity violated");
        }
        Ok((coeffs, rem))
    }

    fn divide(
        &self,
        f: &AlgebraElement,
        want_coeffs: bool,
    ) -> (Vec<AlgebraElement>, AlgebraElement) {
        let zero = AlgebraElement::zero(self.field, self.rank);
        let mut s = vec![zero.clone(); if want_coeffs { self.firsts.len() } else { 0 }];
        let mut t = vec![zero.clone(); if want_coeffs { self.seconds.len() } else { 0 }];
        let mut rem = f.clone();
        let mut cursor: Option<Word> = None;
        loop {
            let next = match &cursor {
                None => rem.term_map().iter().next_back(),
                Some(c) => rem.term_map().range(..c.clone()).next_back(),
            };
            let Some((w, c)) = next.map(|(w, c)| (w.clone(), c.clone())) else {
                break;
            };
            if let Some((r, plen)) = self.trie.find_prefix(&w) {
                let tail = w.suffix(plen);
                let reducer = self.reducers[r];
                rem.add_scaled_mul_word(&c.neg(), self.reducer(reducer), &tail);
                if want_coeffs {
                    match reducer {
                        Reducer::First(i) => s[i].add_term(tail, &c),
                        Reducer::Second(j) => t[j].add_term(tail, &c),
                    }
                }
            }
            cursor = Some(w);
        }
        if want_coeffs {
            for (j, tj) in t.iter().enumerate() {
                if tj.is_zero() {
                    continue;
                }
                for (i, si) in s.iter_mut().enumerate() {
                    let cij = self.c.get(i, j);
                    if !cij.is_zero() {
                        si.add_product(cij, tj);
                    }
                }
            }
        }
        (s, rem)
    }
}

fn infer_context(gens: &[AlgebraElement]) -> Result<(Field, usize)> {
    let g = gens
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty generator list".into()))?;
    Ok((g.field(), g.rank()))
}

/// Rosenmann data of the right ideal generated by `gens`.
pub fn rosenmann_basis(gens: &[AlgebraElement]) -> Result<GroebnerData> {
    rosenmann_basis_with(gens, &GroebnerOptions::default())
}

pub fn rosenmann_basis_with(
    gens: &[AlgebraElement],
    opts: &GroebnerOptions,
) -> Result<GroebnerData> {
    let (field, rank) = infer_context(gens)?;
    GroebnerData::compute(field, rank, gens, opts)
}

/// Remainder of `f` modulo the ideal described by `data`.
pub fn remainder(f: &AlgebraElement, data: &GroebnerData) -> Result<AlgebraElement> {
    data.remainder(f)
}

/// Expresses `f` in the Rosenmann basis of the ideal generated by `gens`.
pub fn extract_coefficients(
    gens: &[AlgebraElement],
    f: &AlgebraElement,
) -> Result<(Vec<AlgebraElement>, AlgebraElement)> {
    rosenmann_basis(gens)?.extract_coefficients(f)
}

pub fn ideal_membership(gens: &[AlgebraElement], f: &AlgebraElement) -> Result<bool> {
    rosenmann_basis(gens)?.contains(f)
}

/// Equality of right ideals by mutual membership of generators.
pub fn ideal_equal(a: &[AlgebraElement], b: &[AlgebraElement]) -> Result<bool> {
    let ga = rosenmann_basis(a)?;
    let gb = rosenmann_basis(b)?;
    ga.check(
        &gb.firsts
            .first()
            .cloned()
            .unwrap_or_else(|| AlgebraElement::zero(gb.field, gb.rank)),
    )?;
    for g in b {
        if !ga.contains(g)? {
            return Ok(false);
        }
    }
    for g in a {
        if !gb.contains(g)? {
            return Ok(false);
        }
    }
    debug_assert_eq!(
        ga.firsts, gb.firsts,
        "equal ideals with different canonical bases"
    );
    Ok(true)
}

pub fn ideal_rank(gens: &[AlgebraElement]) -> Result<usize> {
    Ok(rosenmann_basis(gens)?.rank())
}
