//! Quivers, paths and free path-algebra elements.
//!
//! Words compose right-to-left: in a written word like `g b a` the rightmost
//! arrow acts first, so a path is stored as its arrow sequence in
//! *application order* (`[a, b, g]` for the word `g b a`). Concatenating
//! stored sequences is exactly path composition, which keeps subword matching
//! in the rewriting engine a plain slice search.

use std::collections::BTreeMap;
use std::fmt;

use crate::field::Field;


pub type VertexId = usize;
pub type ArrowId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

/// A finite directed multigraph with named vertices and arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    out_arrows: Vec<Vec<ArrowId>>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum QuiverError {
    #[error("duplicate name {0:?}")]
    DuplicateName(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
}

impl Quiver {
    pub fn new(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self, QuiverError> {
        let mut q = Quiver {
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            arrows: Vec::new(),
            out_arrows: vec![Vec::new(); vertices.len()],
        };
        for (i, v) in q.vertices.iter().enumerate() {
            if q.vertices[..i].contains(v) {
                return Err(QuiverError::DuplicateName(v.clone()));
            }
        }
        for &(name, src, tgt) in arrows {
            if q.arrow_id(name).is_some() || q.vertices.iter().any(|v| v == name) {
                return Err(QuiverError::DuplicateName(name.to_string()));
            }
            let source = q
                .vertex_id(src)
                .ok_or_else(|| QuiverError::UnknownVertex(src.to_string()))?;
            let target = q
                .vertex_id(tgt)
                .ok_or_else(|| QuiverError::UnknownVertex(tgt.to_string()))?;
            q.out_arrows[source].push(q.arrows.len());
            q.arrows.push(Arrow { name: name.to_string(), source, target });
        }
        Ok(q)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.vertices.len()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v]
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_id(&self, name: &str) -> Option<ArrowId> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Arrows whose source is `v`.
    pub fn arrows_out(&self, v: VertexId) -> &[ArrowId] {
        &self.out_arrows[v]
    }

    /// adjacency[u][v] = number of arrows u -> v.
    pub fn adjacency(&self) -> Vec<Vec<u64>> {
        let n = self.vertices.len();
        let mut m = vec![vec![0; n]; n];
        for a in &self.arrows {
            m[a.source][a.target] += 1;
        }
        m
    }
}

/// A composable sequence of arrows, or a trivial path `1_v`.
///
/// `arrows[0]` is the first arrow applied; the written word shows the
/// sequence reversed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    source: VertexId,
    target: VertexId,
    arrows: Vec<ArrowId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn arrow(q: &Quiver, a: ArrowId) -> Self {
        Path { source: q.arrow(a).source, target: q.arrow(a).target, arrows: vec![a] }
    }

    /// Build from arrows in application order; `None` if consecutive arrows
    /// do not compose.
    pub fn from_arrows(q: &Quiver, arrows: Vec<ArrowId>) -> Option<Self> {
        let first = *arrows.first()?;
        let mut at = q.arrow(first).source;
        let source = at;
        for &a in &arrows {
            if q.arrow(a).source != at {
                return None;
            }
            at = q.arrow(a).target;
        }
        Some(Path { source, target: at, arrows })
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    /// `self . other`: `other` acts first. Defined iff
    /// `source(self) = target(other)`.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if self.source != other.target {
            return None;
        }
        let mut arrows = other.arrows.clone();
        arrows.extend_from_slice(&self.arrows);
        Some(Path { source: other.source, target: self.target, arrows })
    }

    /// self^n; requires a loop when n != 1.
    pub fn pow(&self, n: usize) -> Option<Path> {
        if n == 0 {
            return Some(Path::trivial(self.source));
        }
        if self.source != self.target && n > 1 {
            return None;
        }
        let mut arrows = Vec::with_capacity(self.arrows.len() * n);
        for _ in 0..n {
            arrows.extend_from_slice(&self.arrows);
        }
        Some(Path { source: self.source, target: self.target, arrows })
    }

    /// The contiguous subpath `arrows[from..to]` (trivial paths pick up the
    /// vertex at position `from`).
    pub fn slice(&self, q: &Quiver, from: usize, to: usize) -> Path {
        if from == to {
            let v = if from < self.arrows.len() {
                q.arrow(self.arrows[from]).source
            } else {
                self.target
            };
            return Path::trivial(v);
        }
        Path::from_arrows(q, self.arrows[from..to].to_vec()).expect("subpath composes")
    }

    /// Does `needle` occur as a contiguous subword? Trivial needles match iff
    /// the vertex occurs on the path.
    pub fn contains_subword(&self, q: &Quiver, needle: &Path) -> bool {
        self.find_subword(q, needle).is_some()
    }

    /// Leftmost occurrence (in application order) of `needle` as a subword.
    pub fn find_subword(&self, q: &Quiver, needle: &Path) -> Option<usize> {
        if needle.is_empty() {
            if self.is_empty() {
                return (self.source == needle.source).then_some(0);
            }
            for (i, &a) in self.arrows.iter().enumerate() {
                if q.arrow(a).source == needle.source {
                    return Some(i);
                }
            }
            return (self.target == needle.source).then_some(self.arrows.len());
        }
        let n = needle.arrows.len();
        if n > self.arrows.len() {
            return None;
        }
        (0..=self.arrows.len() - n).find(|&i| self.arrows[i..i + n] == needle.arrows[..])
    }

    /// Vertex sequence visited in application order: source, then the target
    /// of each arrow. Length is `len() + 1`.
    pub fn vertex_sequence(&self, q: &Quiver) -> Vec<VertexId> {
        let mut seq = Vec::with_capacity(self.arrows.len() + 1);
        seq.push(self.source);
        for &a in &self.arrows {
            seq.push(q.arrow(a).target);
        }
        seq
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> PathDisplay<'a> {
        PathDisplay { path: self, quiver: q }
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Path({}->{}; {:?})", self.source, self.target, self.arrows)
    }
}

pub struct PathDisplay<'a> {
    path: &'a Path,
    quiver: &'a Quiver,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            return write!(f, "1_{}", self.quiver.vertex_name(self.path.source));
        }
        for (i, &a) in self.path.arrows.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.quiver.arrow(a).name)?;
        }
        Ok(())
    }
}

/// One-arrow extensions of `prefix` at its target end that avoid every
/// forbidden tip as a contiguous subword.
///
/// Extending only at the growing end is enough for normal-word generation:
/// the prefix is already tip-free, so any new occurrence must end on the new
/// arrow.
pub fn enumerate_normal_extensions(q: &Quiver, prefix: &Path, tips: &[Path]) -> Vec<Path> {
    let mut out = Vec::new();
    for &a in q.arrows_out(prefix.target()) {
        let ext = Path::arrow(q, a).compose(prefix).expect("arrow leaves target");
        if !tips.iter().any(|t| ext.contains_subword(q, t)) {
            out.push(ext);
        }
    }
    out
}

/// A finite linear combination of paths with nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeElement<F: Field> {
    terms: BTreeMap<Path, F>,
}

impl<F: Field> FreeElement<F> {
    pub fn zero() -> Self {
        FreeElement { terms: BTreeMap::new() }
    }

    pub fn from_path(p: Path) -> Self {
        Self::from_term(p, F::one())
    }

    pub fn from_term(p: Path, c: F) -> Self {
        let mut e = Self::zero();
        e.add_term(p, c);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Path, F)>>(terms: I) -> Self {
        let mut e = Self::zero();
        for (p, c) in terms {
            e.add_term(p, c);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &Path) -> F {
        self.terms.get(p).copied().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, p: Path, c: F) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(p);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = *o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    o.insert(s);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, &c) in other.terms() {
            out.add_term(p.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, &c) in other.terms() {
            out.add_term(p.clone(), F::zero() - c);
        }
        out
    }

    pub fn scale(&self, c: F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FreeElement { terms: self.terms.iter().map(|(p, &x)| (p.clone(), x * c)).collect() }
    }

    /// Bilinear product; pairs that do not compose contribute zero.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (p, &cp) in self.terms() {
            for (q, &cq) in other.terms() {
                if let Some(pq) = p.compose(q) {
                    out.add_term(pq, cp * cq);
                }
            }
        }
        out
    }

    /// Largest term length, 0 for the zero element.
    pub fn max_len(&self) -> usize {
        self.terms.keys().map(|p| p.len()).max().unwrap_or(0)
    }

    /// Smallest term length.
    pub fn min_len(&self) -> Option<usize> {
        self.terms.keys().map(|p| p.len()).min()
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> FreeElementDisplay<'a, F> {
        FreeElementDisplay { elem: self, quiver: q }
    }
}

/// The identity `1 = sum of all trivial paths`.
pub fn one<F: Field>(q: &Quiver) -> FreeElement<F> {
    FreeElement::from_terms(q.vertices().map(|v| (Path::trivial(v), F::one())))
}

pub struct FreeElementDisplay<'a, F: Field> {
    elem: &'a FreeElement<F>,
    quiver: &'a Quiver,
}

impl<F: Field> fmt::Display for FreeElementDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elem.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.elem.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{}", p.display(self.quiver))?;
            } else {
                write!(f, "{}*{}", c, p.display(self.quiver))?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for FreeElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeElement({:?})", self.terms)
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("arrows do not compose in {0:?}")]
    NotComposable(String),
    #[error("bad number {0:?}")]
    BadNumber(String),
    #[error("coefficient {0} out of range for the field")]
    BadCoefficient(u64),
    #[error("power of a non-loop path")]
    PowerOfNonLoop,
}

#[derive(Debug, PartialEq)]
enum Token {
    Name(String),
    Number(u64),
    Trivial(String),
    LParen,
    RParen,
    Caret,
    Plus,
    Minus,
    Star,
}

fn lex(s: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut it = s.chars().peekable();
    while let Some(&c) = it.peek() {
        match c {
            ' ' | '\t' => {
                it.next();
            }
            '(' => {
                it.next();
                out.push(Token::LParen);
            }
            ')' => {
                it.next();
                out.push(Token::RParen);
            }
            '^' => {
                it.next();
                out.push(Token::Caret);
            }
            '+' => {
                it.next();
                out.push(Token::Plus);
            }
            '-' => {
                it.next();
                out.push(Token::Minus);
            }
            '*' => {
                it.next();
                out.push(Token::Star);
            }
            '0'..='9' => {
                let mut num = String::new();
                while let Some(&d) = it.peek() {
                    if d.is_ascii_digit() {
                        num.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                // "1_v" is the trivial path at vertex v
                if num == "1" && it.peek() == Some(&'_') {
                    it.next();
                    let mut name = String::new();
                    while let Some(&d) = it.peek() {
                        if d.is_alphanumeric() {
                            name.push(d);
                            it.next();
                        } else {
                            break;
                        }
                    }
                    out.push(Token::Trivial(name));
                } else {
                    let n = num.parse().map_err(|_| ParseError::BadNumber(num))?;
                    out.push(Token::Number(n));
                }
            }
            c if c.is_alphabetic() => {
                let mut name = String::new();
                while let Some(&d) = it.peek() {
                    if d.is_alphanumeric() || d == '_' {
                        name.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Name(name));
            }
            other => return Err(ParseError::UnexpectedChar(other)),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    quiver: &'a Quiver,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    // factor := name | trivial | '(' word ')' , each with optional ^n
    fn factor(&mut self) -> Result<Path, ParseError> {
        let base = match self.next() {
            Some(Token::Name(n)) => {
                let n = n.clone();
                let a = self
                    .quiver
                    .arrow_id(&n)
                    .ok_or(ParseError::UnknownArrow(n))?;
                Path::arrow(self.quiver, a)
            }
            Some(Token::Trivial(v)) => {
                let v = v.clone();
                let id = self
                    .quiver
                    .vertex_id(&v)
                    .ok_or(ParseError::UnknownVertex(v))?;
                Path::trivial(id)
            }
            Some(Token::LParen) => {
                let inner = self.word()?;
                match self.next() {
                    Some(Token::RParen) => inner,
                    _ => return Err(ParseError::UnexpectedEnd),
                }
            }
            _ => return Err(ParseError::UnexpectedEnd),
        };
        if self.peek() == Some(&Token::Caret) {
            self.next();
            let n = match self.next() {
                Some(Token::Number(n)) => *n,
                _ => return Err(ParseError::UnexpectedEnd),
            };
            base.pow(n as usize).ok_or(ParseError::PowerOfNonLoop)
        } else {
            Ok(base)
        }
    }

    // word := factor+ , composed right-to-left (last factor acts first)
    fn word(&mut self) -> Result<Path, ParseError> {
        let mut factors = vec![self.factor()?];
        while matches!(
            self.peek(),
            Some(Token::Name(_) | Token::Trivial(_) | Token::LParen)
        ) {
            factors.push(self.factor()?);
        }
        let mut path = factors.pop().expect("at least one factor");
        while let Some(f) = factors.pop() {
            path = f
                .compose(&path)
                .ok_or_else(|| ParseError::NotComposable(format!("{:?}", f)))?;
        }
        Ok(path)
    }
}

/// Parse a single path literal like `(g b a)^4`, `e^3` or `1_0`.
pub fn parse_path(q: &Quiver, s: &str) -> Result<Path, ParseError> {
    let mut p = Parser { tokens: lex(s)?, pos: 0, quiver: q };
    let path = p.word()?;
    if p.pos != p.tokens.len() {
        return Err(ParseError::UnexpectedChar('+'));
    }
    Ok(path)
}

/// Parse a linear combination like `b g + 1*(b a g)^2` or `a a + 3*g b`.
pub fn parse_free_element<F: Field>(q: &Quiver, s: &str) -> Result<FreeElement<F>, ParseError> {
    let mut p = Parser { tokens: lex(s)?, pos: 0, quiver: q };
    let mut out = FreeElement::zero();
    loop {
        let mut negate = false;
        while matches!(p.peek(), Some(Token::Plus | Token::Minus)) {
            if p.next() == Some(&Token::Minus) {
                negate = !negate;
            }
        }
        let mut coeff = F::one();
        if let Some(Token::Number(n)) = p.peek() {
            let n = *n;
            p.next();
            coeff = F::from_index(n).ok_or(ParseError::BadCoefficient(n))?;
            if p.peek() == Some(&Token::Star) {
                p.next();
            }
        }
        if negate {
            coeff = F::zero() - coeff;
        }
        let path = p.word()?;
        out.add_term(path, coeff);
        match p.peek() {
            None => break,
            Some(Token::Plus | Token::Minus) => continue,
            _ => return Err(ParseError::UnexpectedEnd),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{q1, q2};
    use crate::{F2, F4};

    #[test]
    fn q1_shape() {
        let q = q1();
        assert_eq!(q.vertex_count(), 2);
        assert_eq!(q.arrow_count(), 3);
        let a = q.arrow_id("a").unwrap();
        assert_eq!((q.arrow(a).source, q.arrow(a).target), (0, 0));
        let b = q.arrow_id("b").unwrap();
        assert_eq!((q.arrow(b).source, q.arrow(b).target), (0, 1));
        let g = q.arrow_id("g").unwrap();
        assert_eq!((q.arrow(g).source, q.arrow(g).target), (1, 0));
    }

    #[test]
    fn compose_follows_vertices() {
        let q = q1();
        let beta = parse_path(&q, "b").unwrap();
        let gamma = parse_path(&q, "g").unwrap();
        // b g is a loop at vertex 1
        let bg = beta.compose(&gamma).unwrap();
        assert_eq!((bg.source(), bg.target(), bg.len()), (1, 1, 2));
        assert_eq!(bg, parse_path(&q, "b g").unwrap());
        // g g does not compose
        assert_eq!(gamma.compose(&gamma), None);
        // trivial path is an identity
        let alpha = parse_path(&q, "a").unwrap();
        assert_eq!(Path::trivial(0).compose(&alpha), Some(alpha.clone()));
        assert_eq!(alpha.compose(&Path::trivial(0)), Some(alpha));
    }

    #[test]
    fn compose_is_associative_when_defined() {
        let q = q2();
        // all words of length <= 3 from every vertex
        let mut words: Vec<Path> = q.vertices().map(Path::trivial).collect();
        for _ in 0..3 {
            let mut next = Vec::new();
            for w in &words {
                for &a in q.arrows_out(w.target()) {
                    next.push(Path::arrow(&q, a).compose(w).unwrap());
                }
            }
            words.extend(next);
        }
        for p in &words {
            for r in &words {
                for s in &words {
                    let left = r.compose(s).and_then(|rs| p.compose(&rs));
                    let right = p.compose(r).and_then(|pr| pr.compose(s));
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn multiply_expands_bilinearly() {
        let q = q1();
        let b = FreeElement::<F2>::from_path(parse_path(&q, "b").unwrap());
        let g = FreeElement::<F2>::from_path(parse_path(&q, "g").unwrap());
        let s = b.add(&g);
        let sq = s.mul(&s);
        // b b and g g are undefined, so only the two cross terms survive
        assert_eq!(sq, parse_free_element(&q, "b g + g b").unwrap());

        let alpha = FreeElement::<F2>::from_path(parse_path(&q, "a").unwrap());
        assert_eq!(
            alpha.mul(&alpha),
            FreeElement::from_path(parse_path(&q, "a a").unwrap())
        );
    }

    #[test]
    fn idempotent_truncation() {
        let q = q1();
        let e0 = FreeElement::<F2>::from_path(Path::trivial(0));
        let x = parse_free_element::<F2>(&q, "a + b + g").unwrap();
        // left multiplication keeps terms ending at vertex 0
        assert_eq!(e0.mul(&x), parse_free_element(&q, "a + g").unwrap());
        // right multiplication keeps terms starting at vertex 0
        assert_eq!(x.mul(&e0), parse_free_element(&q, "a + b").unwrap());
        // 1 is a two-sided identity
        let one = one::<F2>(&q);
        assert_eq!(one.mul(&x), x);
        assert_eq!(x.mul(&one), x);
    }

    #[test]
    fn transfer_matrix_counts_paths() {
        let q = q1();
        let adj = q.adjacency();
        assert_eq!(adj, vec![vec![1, 1], vec![1, 0]]);
        // count paths 0 -> 0 of each length by brute enumeration
        let mut frontier = vec![Path::trivial(0)];
        let mut mat = vec![vec![1u64, 0], vec![0, 1]]; // adj^0
        for _ in 1..=12 {
            frontier = frontier
                .iter()
                .flat_map(|w| {
                    q.arrows_out(w.target())
                        .iter()
                        .map(|&a| Path::arrow(&q, a).compose(w).unwrap())
                        .collect::<Vec<_>>()
                })
                .collect();
            // mat = adj^n with mat[u][v] = #paths u -> v
            let mut next = vec![vec![0u64; 2]; 2];
            for u in 0..2 {
                for v in 0..2 {
                    for k in 0..2 {
                        next[u][v] += mat[u][k] * adj[k][v];
                    }
                }
            }
            mat = next;
            let count = frontier.iter().filter(|p| p.target() == 0).count() as u64;
            assert_eq!(count, mat[0][0]);
        }
    }

    #[test]
    fn literal_syntax_round_trip() {
        let q = q2();
        for s in ["(g b a)^4", "e^3", "1_0", "g b a g", "e"] {
            let p = parse_path(&q, s).unwrap();
            let shown = p.display(&q).to_string();
            assert_eq!(parse_path(&q, &shown).unwrap(), p);
        }
        let p = parse_path(&q, "(g b a)^2").unwrap();
        assert_eq!(p.display(&q).to_string(), "g b a g b a");
        assert_eq!(p.len(), 6);
        assert_eq!((p.source(), p.target()), (0, 0));

        let x = parse_free_element::<F4>(&q, "b g + 2*(b a g)^2").unwrap();
        let shown = x.display(&q).to_string();
        assert_eq!(parse_free_element::<F4>(&q, &shown).unwrap(), x);
        assert!(parse_path(&q, "g g").is_err());
        assert!(parse_path(&q, "z").is_err());
        assert!(parse_free_element::<F2>(&q, "7*a").is_err());
    }

    #[test]
    fn normal_extensions_prune_tips() {
        let q = q1();
        let tips = vec![
            parse_path(&q, "a a").unwrap(),
            parse_path(&q, "b g").unwrap(),
        ];
        let exts = enumerate_normal_extensions(&q, &Path::trivial(0), &tips);
        let names: Vec<String> = exts.iter().map(|p| p.display(&q).to_string()).collect();
        assert_eq!(names, vec!["a", "b"]);
        // a a is pruned one step later
        let from_alpha = enumerate_normal_extensions(&q, &exts[0], &tips);
        let names: Vec<String> = from_alpha.iter().map(|p| p.display(&q).to_string()).collect();
        assert_eq!(names, vec!["b a"]);

        let bg = parse_path(&q, "b g").unwrap();
        assert!(enumerate_normal_extensions(&q, &bg, &[bg.clone()]).is_empty());
    }

    #[test]
    fn vertex_sequences() {
        let q = q2();
        let w = parse_path(&q, "b a g").unwrap();
        assert_eq!(w.vertex_sequence(&q), vec![1, 0, 0, 1]);
        let w = parse_path(&q, "(g b a)^2").unwrap();
        assert_eq!(w.vertex_sequence(&q), vec![0, 0, 1, 0, 0, 1, 0]);
    }
}
