//! Truncated noncommutative Groebner bases for two-sided path-algebra
//! ideals, normal forms, and finite-dimensionality certificates.
//!
//! Completion is overlap-based (Buchberger/Mora style) under a
//! length-then-lexicographic order. Relations are kept monic and
//! inter-reduced: no leading word occurs inside another relation's leading
//! word or tail. A basis is certified complete by a final sweep that reduces
//! every overlap element of the finished relation set to zero, together with
//! a length `B` at which no normal word survives, so the quotient is
//! finite-dimensional and normal forms are canonical.

use std::cmp::Ordering;
use std::collections::VecDeque;

use crate::field::Field;
use crate::linalg::PackedRowSpace;
use crate::quiver::{enumerate_normal_extensions, FreeElement, Path, Quiver};


#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GbError {
    #[error("zero generator")]
    ZeroGenerator,
    #[error("generator not inside the square of the arrow ideal: {0}")]
    Inadmissible(String),
    #[error("no finite-dimensionality certificate within degree cap {cap}")]
    NotFiniteDimensional { cap: usize },
    #[error("operation needs a complete basis")]
    IncompleteBasis,
}

/// Length-then-lexicographic word order, parameterized by an arrow
/// precedence. Admissible: compatible with composition on both sides and
/// well-founded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    precedence: Vec<usize>,
}

impl MonomialOrder {
    /// Arrows ranked in declaration order.
    pub fn length_lex(q: &Quiver) -> Self {
        MonomialOrder { precedence: (0..q.arrow_count()).collect() }
    }

    /// Arrows ranked in reverse declaration order.
    pub fn length_lex_reversed(q: &Quiver) -> Self {
        MonomialOrder { precedence: (0..q.arrow_count()).rev().collect() }
    }

    pub fn cmp(&self, p: &Path, q: &Path) -> Ordering {
        p.len()
            .cmp(&q.len())
            .then_with(|| {
                for (&x, &y) in p.arrows().iter().zip(q.arrows()) {
                    match self.precedence[x].cmp(&self.precedence[y]) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            })
            .then_with(|| p.source().cmp(&q.source()))
    }

    /// Largest term of a nonzero element.
    pub fn leading_term<'x, F: Field>(&self, x: &'x FreeElement<F>) -> Option<(&'x Path, F)> {
        x.terms()
            .max_by(|(p, _), (q, _)| self.cmp(p, q))
            .map(|(p, &c)| (p, c))
    }
}

/// A two-sided ideal given by generators inside the square of the arrow
/// ideal.
#[derive(Clone, Debug)]
pub struct IdealPresentation<F: Field> {
    pub quiver: Quiver,
    pub generators: Vec<FreeElement<F>>,
}

impl<F: Field> IdealPresentation<F> {
    pub fn new(quiver: Quiver, generators: Vec<FreeElement<F>>) -> Result<Self, GbError> {
        for g in &generators {
            if g.is_zero() {
                return Err(GbError::ZeroGenerator);
            }
            if g.min_len() < Some(2) {
                return Err(GbError::Inadmissible(g.display(&quiver).to_string()));
            }
        }
        Ok(IdealPresentation { quiver, generators })
    }
}

/// One monic rewrite rule: `lead` reduces to `tail`.
#[derive(Clone, Debug)]
pub struct Relation<F: Field> {
    pub lead: Path,
    pub tail: FreeElement<F>,
}

impl<F: Field> Relation<F> {
    /// The ideal element `lead - tail`.
    pub fn element(&self) -> FreeElement<F> {
        FreeElement::from_path(self.lead.clone()).sub(&self.tail)
    }
}

/// A reduced, certified-complete relation set for one ideal.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    pub quiver: Quiver,
    pub order: MonomialOrder,
    relations: Vec<Relation<F>>,
    degree_bound: usize,
    complete: bool,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn relations(&self) -> &[Relation<F>] {
        &self.relations
    }

    pub fn leading_words(&self) -> Vec<Path> {
        self.relations.iter().map(|r| r.lead.clone()).collect()
    }

    /// Smallest length with no normal word; every normal word is shorter.
    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    #[cfg(test)]
    pub(crate) fn mark_incomplete(&mut self) {
        self.complete = false;
    }

    /// The unique irreducible representative of `x` modulo the ideal; zero
    /// exactly when `x` is a member.
    pub fn normal_form(&self, x: &FreeElement<F>) -> Result<FreeElement<F>, GbError> {
        if !self.complete {
            return Err(GbError::IncompleteBasis);
        }
        Ok(reduce_full(&self.quiver, &self.relations, x))
    }

    /// All normal words, sorted by (source, length, arrows). The words with
    /// source `v` are a basis of the projective cover of the vertex-`v`
    /// simple.
    pub fn quotient_basis(&self) -> Result<Vec<Path>, GbError> {
        if !self.complete {
            return Err(GbError::IncompleteBasis);
        }
        let leads = self.leading_words();
        let words = normal_words(&self.quiver, &leads, self.degree_bound)
            .expect("complete basis has bounded normal words");
        let mut out = words;
        out.sort_by(|p, q| {
            (p.source(), p.len(), p.arrows()).cmp(&(q.source(), q.len(), q.arrows()))
        });
        Ok(out)
    }
}

/// Enumerate normal words level by level; `Err(len)` if words still survive
/// at length `cap`.
fn normal_words(q: &Quiver, leads: &[Path], cap: usize) -> Result<Vec<Path>, usize> {
    let mut out = Vec::new();
    let mut frontier: Vec<Path> = q
        .vertices()
        .map(Path::trivial)
        .filter(|p| !leads.iter().any(|t| p.contains_subword(q, t)))
        .collect();
    let mut len = 0;
    while !frontier.is_empty() {
        if len >= cap {
            return Err(len);
        }
        out.extend(frontier.iter().cloned());
        frontier = frontier
            .iter()
            .flat_map(|w| enumerate_normal_extensions(q, w, leads))
            .collect();
        len += 1;
    }
    Ok(out)
}

/// Rewrite `x` to its irreducible form under the given relation set.
fn reduce_full<F: Field>(q: &Quiver, rels: &[Relation<F>], x: &FreeElement<F>) -> FreeElement<F> {
    let mut todo: Vec<(Path, F)> = x.terms().map(|(p, &c)| (p.clone(), c)).collect();
    let mut out = FreeElement::zero();
    while let Some((p, c)) = todo.pop() {
        if c.is_zero() {
            continue;
        }
        let hit = rels
            .iter()
            .find_map(|r| p.find_subword(q, &r.lead).map(|pos| (r, pos)));
        match hit {
            None => out.add_term(p, c),
            Some((r, pos)) => {
                let earlier = p.slice(q, 0, pos);
                let later = p.slice(q, pos + r.lead.len(), p.len());
                for (t, &tc) in r.tail.terms() {
                    let mid = t.compose(&earlier).expect("tail matches lead vertices");
                    let repl = later.compose(&mid).expect("tail matches lead vertices");
                    todo.push((repl, c * tc));
                }
            }
        }
    }
    out
}

struct Engine<'a, F: Field> {
    quiver: &'a Quiver,
    order: &'a MonomialOrder,
    cap: usize,
    slots: Vec<Option<Relation<F>>>,
    work: VecDeque<FreeElement<F>>,
    pairs: VecDeque<(usize, usize)>,
}

impl<'a, F: Field> Engine<'a, F> {
    fn alive(&self) -> Vec<usize> {
        (0..self.slots.len()).filter(|&i| self.slots[i].is_some()).collect()
    }

    fn relations(&self) -> Vec<Relation<F>> {
        self.slots.iter().flatten().cloned().collect()
    }

    fn reduce(&self, x: &FreeElement<F>) -> FreeElement<F> {
        let rels = self.relations();
        reduce_full(self.quiver, &rels, x)
    }

    fn admit(&mut self, x: FreeElement<F>) -> Result<(), GbError> {
        let red = self.reduce(&x);
        if red.is_zero() {
            return Ok(());
        }
        let (lead, c) = self.order.leading_term(&red).expect("nonzero");
        if lead.len() > self.cap {
            return Err(GbError::NotFiniteDimensional { cap: self.cap });
        }
        let lead = lead.clone();
        let inv = c.inv().expect("leading coefficient nonzero");
        let mut tail = red.scale(F::zero() - inv);
        tail.add_term(lead.clone(), F::one()); // tail = lead - red/c
        let rel = Relation { lead, tail };

        // retire any relation that the new leading word now rewrites
        for i in 0..self.slots.len() {
            let kill = match &self.slots[i] {
                Some(r) => {
                    r.lead.contains_subword(self.quiver, &rel.lead)
                        || r.tail.terms().any(|(t, _)| t.contains_subword(self.quiver, &rel.lead))
                }
                None => false,
            };
            if kill {
                let old = self.slots[i].take().unwrap();
                self.work.push_back(old.element());
            }
        }

        let id = self.slots.len();
        self.slots.push(Some(rel));
        for j in self.alive() {
            self.pairs.push_back((id, j));
            if j != id {
                self.pairs.push_back((j, id));
            }
        }
        Ok(())
    }

    /// All overlap elements for the ordered pair (i, j): a proper suffix of
    /// lead_i equal to a proper prefix of lead_j.
    fn overlap_elements(&self, i: usize, j: usize) -> Vec<FreeElement<F>> {
        let (Some(ri), Some(rj)) = (&self.slots[i], &self.slots[j]) else {
            return Vec::new();
        };
        let si = ri.lead.arrows();
        let sj = rj.lead.arrows();
        let max_w = if i == j {
            si.len().saturating_sub(1)
        } else {
            si.len().min(sj.len()).saturating_sub(1)
        };
        let mut out = Vec::new();
        for w in 1..=max_w {
            if si[si.len() - w..] != sj[..w] {
                continue;
            }
            let x = ri.lead.slice(self.quiver, 0, si.len() - w);
            let y = rj.lead.slice(self.quiver, w, sj.len());
            // lead_i and lead_j overlap in the word y . lead_i = lead_j . x;
            // the two rewrites of it differ by this element
            let s = FreeElement::from_path(y)
                .mul(&ri.tail)
                .sub(&rj.tail.mul(&FreeElement::from_path(x)));
            out.push(s);
        }
        out
    }

    fn saturate(&mut self) -> Result<(), GbError> {
        loop {
            if let Some(x) = self.work.pop_front() {
                self.admit(x)?;
                continue;
            }
            let Some((i, j)) = self.pairs.pop_front() else {
                break;
            };
            for s in self.overlap_elements(i, j) {
                let r = self.reduce(&s);
                if !r.is_zero() {
                    self.work.push_back(r);
                }
            }
        }
        Ok(())
    }

    /// Re-check every overlap of the finished set against the finished set.
    fn certify(&mut self) -> Result<bool, GbError> {
        let alive = self.alive();
        for &i in &alive {
            for &j in &alive {
                for s in self.overlap_elements(i, j) {
                    let r = self.reduce(&s);
                    if !r.is_zero() {
                        self.work.push_back(r);
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

fn run_completion<F: Field>(
    ideal: &IdealPresentation<F>,
    order: &MonomialOrder,
    cap: usize,
) -> Result<GroebnerBasis<F>, GbError> {
    let mut engine = Engine {
        quiver: &ideal.quiver,
        order,
        cap,
        slots: Vec::new(),
        work: ideal.generators.iter().cloned().collect(),
        pairs: VecDeque::new(),
    };
    loop {
        engine.saturate()?;
        if engine.certify()? {
            break;
        }
    }
    let relations = engine.relations();
    let leads: Vec<Path> = relations.iter().map(|r| r.lead.clone()).collect();
    let words = normal_words(&ideal.quiver, &leads, cap)
        .map_err(|_| GbError::NotFiniteDimensional { cap })?;
    let max_len = words.iter().map(|w| w.len()).max().unwrap_or(0);
    Ok(GroebnerBasis {
        quiver: ideal.quiver.clone(),
        order: order.clone(),
        relations,
        degree_bound: max_len + 1,
        complete: true,
    })
}

/// Complete the presentation into a certified basis. The degree cap doubles
/// once before giving up with [`GbError::NotFiniteDimensional`].
pub fn complete<F: Field>(
    ideal: &IdealPresentation<F>,
    order: &MonomialOrder,
    cap: usize,
) -> Result<GroebnerBasis<F>, GbError> {
    match run_completion(ideal, order, cap) {
        Err(GbError::NotFiniteDimensional { .. }) => run_completion(ideal, order, cap * 2),
        other => other,
    }
}

/// The row-reduced span of `p * g * q` over all generators `g` and all paths
/// `p, q` with `|p| + max-term(g) + |q| <= bound`, independent of the
/// completion engine.
///
/// Membership in this span certifies ideal membership outright; the converse
/// holds once `bound` leaves enough frame room for the element's rewriting
/// certificate, which on the catalog instances means a few steps past the
/// quotient's degree bound.
pub struct TruncatedIdealSpan<F: Field> {
    bound: usize,
    paths: Vec<Path>, // sorted by descending length
    index: std::collections::HashMap<Path, usize>,
    space: PackedRowSpace<F>,
}

impl<F: Field> TruncatedIdealSpan<F> {
    pub fn new(ideal: &IdealPresentation<F>, bound: usize) -> Self {
        let q = &ideal.quiver;
        let mut paths = all_paths(q, bound);
        // longest first, so low-degree survivors can be counted off the
        // echelon form
        paths.sort_by(|p, r| {
            (std::cmp::Reverse(p.len()), p.source(), p.arrows())
                .cmp(&(std::cmp::Reverse(r.len()), r.source(), r.arrows()))
        });
        let index: std::collections::HashMap<Path, usize> =
            paths.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let mut space = PackedRowSpace::new(paths.len());

        // split generators into vertex-uniform components e_u g e_v so the
        // (p, q) frames range over plain paths
        let mut components: Vec<FreeElement<F>> = Vec::new();
        for g in &ideal.generators {
            for u in q.vertices() {
                for v in q.vertices() {
                    let part = FreeElement::from_terms(
                        g.terms()
                            .filter(|(p, _)| p.source() == v && p.target() == u)
                            .map(|(p, &c)| (p.clone(), c)),
                    );
                    if !part.is_zero() {
                        components.push(part);
                    }
                }
            }
        }

        for g in &components {
            let deg = g.max_len();
            if deg > bound {
                continue;
            }
            let (src, tgt) = {
                let (p, _) = g.terms().next().expect("nonzero component");
                (p.source(), p.target())
            };
            let budget = bound - deg;
            for right in paths.iter().filter(|r| r.target() == src && r.len() <= budget) {
                let gr = g.mul(&FreeElement::from_path(right.clone()));
                for left in paths
                    .iter()
                    .filter(|l| l.source() == tgt && l.len() + right.len() <= budget)
                {
                    let lgr = FreeElement::from_path(left.clone()).mul(&gr);
                    let packed: Vec<(usize, F)> =
                        lgr.terms().map(|(p, &c)| (index[p], c)).collect();
                    space.insert(&packed);
                }
            }
        }
        TruncatedIdealSpan { bound, paths, index, space }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Is `x` in the truncated span? Requires every term within the bound.
    pub fn contains(&self, x: &FreeElement<F>) -> bool {
        let packed: Vec<(usize, F)> = x
            .terms()
            .map(|(p, &c)| (*self.index.get(p).expect("term within bound"), c))
            .collect();
        self.space.contains(&packed)
    }

    /// Number of paths of length at most `count_len` that survive modulo
    /// the span: with columns ordered longest-first, echelon rows leading in
    /// the short block are exactly a basis of span `intersect` V_(<=count_len).
    pub fn quotient_dimension(&self, count_len: usize) -> usize {
        assert!(count_len <= self.bound);
        let cut = self.paths.partition_point(|p| p.len() > count_len);
        let short = self.paths.len() - cut;
        let killed = self.space.pivots().iter().filter(|&&p| p >= cut).count();
        short - killed
    }
}

/// One-shot membership check; see [`TruncatedIdealSpan`].
pub fn ideal_membership_oracle<F: Field>(
    x: &FreeElement<F>,
    ideal: &IdealPresentation<F>,
    bound: usize,
) -> bool {
    TruncatedIdealSpan::new(ideal, bound).contains(x)
}

fn all_paths(q: &Quiver, bound: usize) -> Vec<Path> {
    let mut out: Vec<Path> = q.vertices().map(Path::trivial).collect();
    let mut frontier = out.clone();
    for _ in 0..bound {
        frontier = frontier
            .iter()
            .flat_map(|w| {
                q.arrows_out(w.target())
                    .iter()
                    .map(|&a| Path::arrow(q, a).compose(w).unwrap())
                    .collect::<Vec<_>>()
            })
            .collect();
        out.extend(frontier.iter().cloned());
    }
    out
}
