//! Algebra homomorphisms given on quiver generators: well-definedness,
//! kernels, surjectivity, isomorphism testing, and quotient construction.
//!
//! Only vertex-preserving maps between algebras on the same quiver are
//! supported; every map in the catalog fixes the vertex idempotents, and
//! matching projective lengths pins the vertex correspondence.

use crate::algebra::FiniteDimAlgebra;
use crate::field::Field;
use crate::gbasis::{GbError, IdealPresentation, MonomialOrder};
use crate::linalg::{nullspace, rank, RowSpace};
use crate::quiver::{parse_free_element, FreeElement, ParseError, Path};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum MorphError {
    #[error("source and target live on different quivers")]
    QuiverMismatch,
    #[error("image of arrow {0:?} is not supported on e_target . A . e_source")]
    BadArrowImage(String),
    #[error("map file: {0}")]
    BadMapFile(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("vertex {0:?} must map to its own idempotent")]
    NotVertexPreserving(String),
    #[error("missing image for arrow {0:?}")]
    MissingArrow(String),
    #[error("map is not well-defined; witness generator: {0}")]
    IllDefined(String),
    #[error(transparent)]
    Gb(#[from] GbError),
}

/// A vertex-preserving algebra map defined by an image for each arrow.
pub struct GeneratorMap<'a, F: Field> {
    pub source: &'a FiniteDimAlgebra<F>,
    pub target: &'a FiniteDimAlgebra<F>,
    arrow_images: Vec<Vec<F>>, // target coordinates, one per source arrow
}

impl<F: Field> std::fmt::Debug for GeneratorMap<'_, F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GeneratorMap({} -> {})", self.source.dim(), self.target.dim())
    }
}

impl<'a, F: Field> GeneratorMap<'a, F> {
    pub fn new(
        source: &'a FiniteDimAlgebra<F>,
        target: &'a FiniteDimAlgebra<F>,
        images: Vec<FreeElement<F>>,
    ) -> Result<Self, MorphError> {
        if source.quiver() != target.quiver() {
            return Err(MorphError::QuiverMismatch);
        }
        let q = source.quiver();
        assert_eq!(images.len(), q.arrow_count());
        let mut arrow_images = Vec::with_capacity(images.len());
        for (a, img) in images.iter().enumerate() {
            let arrow = q.arrow(a);
            let coords = target.nf(img);
            for (k, c) in coords.iter().enumerate() {
                let w = &target.basis()[k];
                if !c.is_zero() && (w.source() != arrow.source || w.target() != arrow.target) {
                    return Err(MorphError::BadArrowImage(arrow.name.clone()));
                }
            }
            arrow_images.push(coords);
        }
        Ok(GeneratorMap { source, target, arrow_images })
    }

    /// The map sending every arrow to itself.
    pub fn natural(
        source: &'a FiniteDimAlgebra<F>,
        target: &'a FiniteDimAlgebra<F>,
    ) -> Result<Self, MorphError> {
        let q = source.quiver();
        let images = (0..q.arrow_count())
            .map(|a| FreeElement::from_path(Path::arrow(q, a)))
            .collect();
        Self::new(source, target, images)
    }

    /// Image of a path: the product of the arrow images, rightmost first.
    fn image_of_path(&self, p: &Path) -> Vec<F> {
        let mut cur = self.target.idempotent(p.source());
        for &a in p.arrows() {
            cur = self.target.mul(&self.arrow_images[a], &cur);
        }
        cur
    }

    /// Image of a free element of the path algebra.
    pub fn image_of_free(&self, x: &FreeElement<F>) -> Vec<F> {
        let mut out = self.target.zero_element();
        for (p, &c) in x.terms() {
            let img = self.image_of_path(p);
            for (o, &t) in out.iter_mut().zip(&img) {
                *o = *o + c * t;
            }
        }
        out
    }

    /// True iff every source ideal generator maps to zero; otherwise the
    /// offending generator and its nonzero image.
    pub fn check_well_defined(&self) -> Result<(), (FreeElement<F>, Vec<F>)> {
        for g in &self.source.presentation().generators {
            let img = self.image_of_free(g);
            if img.iter().any(|c| !c.is_zero()) {
                return Err((g.clone(), img));
            }
        }
        Ok(())
    }

    pub fn is_well_defined(&self) -> bool {
        self.check_well_defined().is_ok()
    }

    /// Matrix of the induced linear map on normal-word bases; column k is
    /// the image of the k-th source basis word.
    pub fn linearize(&self) -> Vec<Vec<F>> {
        self.source
            .basis()
            .iter()
            .map(|w| self.image_of_path(w))
            .collect()
    }

    /// Apply the linearized map to source coordinates.
    pub fn apply(&self, x: &[F]) -> Vec<F> {
        let cols = self.linearize();
        let mut out = self.target.zero_element();
        for (j, &c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &t) in out.iter_mut().zip(&cols[j]) {
                *o = *o + c * t;
            }
        }
        out
    }

    pub fn kernel_basis(&self) -> RowSpace<F> {
        let cols = self.linearize();
        let n = self.source.dim();
        let m = self.target.dim();
        let rows: Vec<Vec<F>> = (0..m).map(|i| (0..n).map(|j| cols[j][i]).collect()).collect();
        let mut out = RowSpace::new(n);
        out.insert_all(nullspace(&rows, n));
        out
    }

    pub fn is_surjective(&self) -> bool {
        rank(&self.linearize(), self.target.dim()) == self.target.dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_well_defined()
            && self.source.dim() == self.target.dim()
            && self.kernel_basis().dim() == 0
    }

    /// Kernel containment in rad^2 of the source, with the quotient
    /// dimensions dim A/rad^n on both sides for n = 1, 2.
    pub fn rad_square_containment(&self) -> (bool, [(usize, usize); 2]) {
        let rad2 = self.source.radical_power_basis(2);
        let contained = self
            .kernel_basis()
            .basis()
            .iter()
            .all(|row| rad2.contains(row));
        let dims = [
            (self.source.dim_mod_radical(1), self.target.dim_mod_radical(1)),
            (self.source.dim_mod_radical(2), self.target.dim_mod_radical(2)),
        ];
        (contained, dims)
    }

    /// Does the kernel equal the two-sided ideal generated inside the source
    /// by the given elements? Checks generator-by-generator membership plus
    /// equality of dimensions.
    pub fn kernel_equals_ideal(&self, gens: &[FreeElement<F>]) -> bool {
        let kernel = self.kernel_basis();
        let images: Vec<Vec<F>> = gens.iter().map(|g| self.source.nf(g)).collect();
        if !images.iter().all(|v| kernel.contains(v)) {
            return false;
        }
        ideal_closure(self.source, &images).dim() == kernel.dim()
    }

    /// The composite `other . self`; both maps must share the middle
    /// algebra.
    pub fn compose<'b>(&self, other: &GeneratorMap<'b, F>) -> Result<GeneratorMap<'b, F>, MorphError>
    where
        'a: 'b,
    {
        assert!(std::ptr::eq(
            self.target as *const _,
            other.source as *const _
        ));
        let images = self
            .arrow_images
            .iter()
            .map(|img| other.source.to_free(img))
            .map(|free| other.image_of_free(&free))
            .map(|coords| other.target.to_free(&coords))
            .collect();
        GeneratorMap::new(self.source, other.target, images)
    }
}

/// Smallest subspace containing the vectors and closed under multiplication
/// by arrows and vertex idempotents on both sides: the two-sided ideal they
/// generate.
pub fn ideal_closure<F: Field>(a: &FiniteDimAlgebra<F>, gens: &[Vec<F>]) -> RowSpace<F> {
    let mut space = RowSpace::new(a.dim());
    let mut work: Vec<Vec<F>> = gens.to_vec();
    while let Some(v) = work.pop() {
        if !space.insert(v.clone()) {
            continue;
        }
        for arrow in 0..a.quiver().arrow_count() {
            work.push(a.left_mul_arrow(arrow, &v));
            work.push(a.right_mul_arrow(arrow, &v));
        }
        for vertex in a.quiver().vertices() {
            let e = a.idempotent(vertex);
            work.push(a.mul(&e, &v));
            work.push(a.mul(&v, &e));
        }
    }
    space
}

/// The quotient of `a` by the two-sided ideal generated by `extra`, built by
/// re-running completion on the union presentation.
pub fn quotient_by<F: Field>(
    a: &FiniteDimAlgebra<F>,
    extra: &[FreeElement<F>],
) -> Result<FiniteDimAlgebra<F>, GbError> {
    let mut gens = a.presentation().generators.clone();
    for x in extra {
        let coords = a.nf(x);
        let reduced = a.to_free(&coords);
        if !reduced.is_zero() {
            gens.push(reduced);
        }
    }
    let ideal = IdealPresentation::new(a.quiver().clone(), gens)?;
    let order = MonomialOrder::length_lex(a.quiver());
    FiniteDimAlgebra::from_presentation(ideal, &order, a.gb().degree_bound() + 8)
}

/// Parse a map file: one line per generator image.
///
/// ```text
/// vertex 0 -> 1_0
/// arrow g -> g + 1*a g (b a g)^3
/// ```
///
/// Vertices may be omitted (they always map to their own idempotents, and a
/// line saying otherwise is rejected); every arrow needs a line.
pub fn parse_generator_map<'a, F: Field>(
    source: &'a FiniteDimAlgebra<F>,
    target: &'a FiniteDimAlgebra<F>,
    text: &str,
) -> Result<GeneratorMap<'a, F>, MorphError> {
    let q = source.quiver();
    let mut images: Vec<Option<FreeElement<F>>> = vec![None; q.arrow_count()];
    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((lhs, rhs)) = line.split_once("->") else {
            return Err(MorphError::BadMapFile(format!("missing '->' in {line:?}")));
        };
        let lhs: Vec<&str> = lhs.split_whitespace().collect();
        let rhs = rhs.trim();
        match lhs.as_slice() {
            ["vertex", name] => {
                let v = q
                    .vertex_id(name)
                    .ok_or_else(|| MorphError::BadMapFile(format!("unknown vertex {name:?}")))?;
                let p = crate::quiver::parse_path(q, rhs)?;
                if !p.is_empty() || p.source() != v {
                    return Err(MorphError::NotVertexPreserving(name.to_string()));
                }
            }
            ["arrow", name] => {
                let a = q
                    .arrow_id(name)
                    .ok_or_else(|| MorphError::BadMapFile(format!("unknown arrow {name:?}")))?;
                images[a] = Some(parse_free_element(q, rhs)?);
            }
            _ => return Err(MorphError::BadMapFile(format!("bad line {line:?}"))),
        }
    }
    let images: Vec<FreeElement<F>> = images
        .into_iter()
        .enumerate()
        .map(|(a, img)| img.ok_or_else(|| MorphError::MissingArrow(q.arrow(a).name.clone())))
        .collect::<Result<_, _>>()?;
    GeneratorMap::new(source, target, images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{algebra_for, build, CatalogKey, Family};
    use crate::{F2, F4};
    use num_traits::{One, Zero};

    fn j1<F: Field>(c1: F, c2: F) -> CatalogKey<F> {
        CatalogKey::JQuotient { family: Family::One, d: 3, c1, c23: c2 }
    }

    #[test]
    fn identity_is_an_isomorphism() {
        let a = algebra_for(&CatalogKey::Plain { family: Family::One, d: 3, c: F2::zero() })
            .unwrap();
        let id = GeneratorMap::natural(&a, &a).unwrap();
        assert!(id.is_well_defined());
        assert!(id.is_surjective());
        assert!(id.is_isomorphism());
        assert_eq!(id.kernel_basis().dim(), 0);
        // identity kernel trivially equals the zero ideal
        assert!(id.kernel_equals_ideal(&[]));
        let (ok, dims) = id.rad_square_containment();
        assert!(ok);
        assert_eq!(dims, [(2, 2), (5, 5)]);
    }

    #[test]
    fn natural_surjection_onto_the_j_quotient() {
        let hat = algebra_for(&CatalogKey::Hat { family: Family::One, d: 3, c_hat: F2::one() })
            .unwrap();
        let target = algebra_for(&j1(F2::zero(), F2::one())).unwrap();
        let f = GeneratorMap::natural(&hat, &target).unwrap();
        assert!(f.is_well_defined());
        assert!(f.is_surjective());
        assert!(!f.is_isomorphism());
        let kernel = f.kernel_basis();
        assert_eq!(kernel.dim(), 38 - 19);
        let (ok, dims) = f.rad_square_containment();
        assert!(ok, "kernel must land inside rad^2");
        assert_eq!(dims, [(2, 2), (5, 5)]);
        // the kernel is a two-sided ideal: closed under all generator actions
        let closure = ideal_closure(&hat, &kernel.basis().to_vec());
        assert_eq!(closure.dim(), kernel.dim());

        // and it is exactly the image of J(0, 1)
        let (_, j_gens) = build(&j1(F2::zero(), F2::one())).unwrap();
        assert!(f.kernel_equals_ideal(&j_gens));
    }

    #[test]
    fn kernel_rejects_the_wrong_ideal() {
        let hat = algebra_for(&CatalogKey::Hat { family: Family::One, d: 3, c_hat: F4::one() })
            .unwrap();
        let target = algebra_for(&j1(F4::zero(), F4::one())).unwrap();
        let f = GeneratorMap::natural(&hat, &target).unwrap();
        assert!(f.is_well_defined());
        let (_, good) = build(&j1(F4::zero(), F4::one())).unwrap();
        assert!(f.kernel_equals_ideal(&good));
        // J(0, w) with w != 1 contains (g b a)^2 - w (a g b)^2, which does
        // not die under the map
        let (_, bad) = build(&j1(F4::zero(), F4::new(2))).unwrap();
        assert!(!f.kernel_equals_ideal(&bad));
    }

    #[test]
    fn mismatched_dihedral_parameters_are_ill_defined() {
        let a0 = algebra_for(&CatalogKey::Plain { family: Family::One, d: 3, c: F2::zero() })
            .unwrap();
        let a1 = algebra_for(&CatalogKey::Plain { family: Family::One, d: 3, c: F2::one() })
            .unwrap();
        let f = GeneratorMap::natural(&a0, &a1).unwrap();
        let (witness, image) = f.check_well_defined().unwrap_err();
        // the a^2 generator maps to the nonzero class of (g b a)^2
        assert_eq!(witness.display(a0.quiver()).to_string(), "a a");
        assert!(image.iter().any(|c| !c.is_zero()));
    }

    #[test]
    fn closing_isomorphism_family_one() {
        // g maps to g - c1 * a g (b a g)^{2^(d-2)-1}; an isomorphism for
        // every c1, here over all of GF(4)
        let a = algebra_for(&CatalogKey::Plain { family: Family::One, d: 3, c: F4::zero() })
            .unwrap();
        let q = a.quiver().clone();
        for c1_idx in 0..4u64 {
            let c1 = F4::from_index(c1_idx).unwrap();
            let target = algebra_for(&j1(c1, F4::one())).unwrap();
            let gamma = FreeElement::from_path(Path::arrow(&q, q.arrow_id("g").unwrap()));
            let twist = crate::quiver::parse_path(&q, "a g (b a g)^1").unwrap();
            let image = gamma.sub(&FreeElement::from_term(twist, c1));
            let images = vec![
                FreeElement::from_path(Path::arrow(&q, 0)),
                FreeElement::from_path(Path::arrow(&q, 1)),
                image,
            ];
            let f = GeneratorMap::new(&a, &target, images).unwrap();
            assert!(f.is_isomorphism(), "c1 = {c1}");
        }
    }

    #[test]
    fn closing_isomorphism_family_two() {
        let a = algebra_for(&CatalogKey::Plain { family: Family::Two, d: 3, c: F4::zero() })
            .unwrap();
        let q = a.quiver().clone();
        for c1_idx in 1..4u64 {
            let c1 = F4::from_index(c1_idx).unwrap();
            let key = CatalogKey::JQuotient { family: Family::Two, d: 3, c1, c23: F4::one() };
            let target = algebra_for(&key).unwrap();
            let g = q.arrow_id("g").unwrap();
            let image =
                FreeElement::from_term(Path::arrow(&q, g), c1.inv().expect("c1 nonzero"));
            let images = (0..q.arrow_count())
                .map(|z| {
                    if z == g {
                        image.clone()
                    } else {
                        FreeElement::from_path(Path::arrow(&q, z))
                    }
                })
                .collect();
            let f = GeneratorMap::new(&a, &target, images).unwrap();
            assert!(f.is_isomorphism(), "c1 = {c1}");
        }
    }

    #[test]
    fn quotient_by_kernel_generators() {
        let hat = algebra_for(&CatalogKey::Hat { family: Family::One, d: 3, c_hat: F2::zero() })
            .unwrap();
        let (_, j_gens) = build(&j1(F2::zero(), F2::one())).unwrap();
        let quo = quotient_by(&hat, &j_gens).unwrap();
        assert_eq!(quo.dim(), 19);
        // quotient by all arrows leaves the semisimple part
        let q = hat.quiver().clone();
        let arrows: Vec<FreeElement<F2>> = (0..q.arrow_count())
            .map(|a| FreeElement::from_path(Path::arrow(&q, a)))
            .collect();
        // arrows are not inside the arrow-ideal square, so go through the
        // ideal closure instead of a new presentation
        let closure = ideal_closure(&hat, &arrows.iter().map(|x| hat.nf(x)).collect::<Vec<_>>());
        assert_eq!(hat.dim() - closure.dim(), 2);

        let hat2 = algebra_for(&CatalogKey::Hat { family: Family::Two, d: 3, c_hat: F2::one() })
            .unwrap();
        let key2 = CatalogKey::JQuotient {
            family: Family::Two,
            d: 3,
            c1: F2::one(),
            c23: F2::one(),
        };
        let (_, j2_gens) = build(&key2).unwrap();
        let quo2 = quotient_by(&hat2, &j2_gens).unwrap();
        assert_eq!(quo2.dim(), 11);
    }

    #[test]
    fn composition_respects_linearization() {
        let a = algebra_for(&CatalogKey::Plain { family: Family::One, d: 3, c: F2::zero() })
            .unwrap();
        let q = a.quiver().clone();
        // unipotent automorphism: a maps to a + (g b a)^2, the socle word
        let alpha = Path::arrow(&q, q.arrow_id("a").unwrap());
        let socle_word = crate::quiver::parse_path(&q, "(g b a)^2").unwrap();
        let images = vec![
            FreeElement::from_path(alpha).add(&FreeElement::from_path(socle_word)),
            FreeElement::from_path(Path::arrow(&q, 1)),
            FreeElement::from_path(Path::arrow(&q, 2)),
        ];
        let f = GeneratorMap::new(&a, &a, images).unwrap();
        assert!(f.is_isomorphism());
        // in characteristic 2 the twist squares away
        let ff = f.compose(&f).unwrap();
        let id = GeneratorMap::natural(&a, &a).unwrap();
        assert_eq!(ff.linearize(), id.linearize());
        // compose(f, id) = f on the nose
        assert_eq!(f.compose(&id).unwrap().linearize(), f.linearize());
    }

    #[test]
    fn map_files_parse_and_check() {
        let a = algebra_for(&CatalogKey::Plain { family: Family::One, d: 3, c: F2::zero() })
            .unwrap();
        let target = algebra_for(&j1(F2::one(), F2::one())).unwrap();
        let text = "\
# the closing twist at c1 = 1
vertex 0 -> 1_0
vertex 1 -> 1_1
arrow a -> a
arrow b -> b
arrow g -> g + 1*a g (b a g)^1
";
        let f = parse_generator_map(&a, &target, text).unwrap();
        assert!(f.is_isomorphism());

        let bad = "vertex 0 -> 1_1\narrow a -> a\narrow b -> b\narrow g -> g\n";
        assert!(matches!(
            parse_generator_map(&a, &target, bad).unwrap_err(),
            MorphError::NotVertexPreserving(_)
        ));
        let missing = "arrow a -> a\narrow b -> b\n";
        assert!(matches!(
            parse_generator_map(&a, &target, missing).unwrap_err(),
            MorphError::MissingArrow(_)
        ));
    }
}
