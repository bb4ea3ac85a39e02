//! Built-in constructors for the catalog algebras and the end-to-end
//! verification pipeline.
//!
//! Two quivers are used throughout. `Q1` has vertices `0`, `1` and arrows
//! `a: 0->0`, `b: 0->1`, `g: 1->0`; `Q2` adds the loop `e: 1->1`. On each
//! quiver the catalog carries a dihedral-type family (parameter `c`), a
//! quaternion-type "hatted" family (parameter `c_hat`), and the two-parameter
//! quotient ideals `J` used to pin the dihedral parameter down to zero.

use crate::algebra::{FiniteDimAlgebra, SymmetricFormSearch};
use crate::field::Field;
use crate::morphism::GeneratorMap;
use crate::quiver::{parse_free_element, parse_path, FreeElement, Path, Quiver};
use crate::report::{StepReport, VerificationReport};


/// The three-arrow quiver: `a: 0->0`, `b: 0->1`, `g: 1->0`.
pub fn q1() -> Quiver {
    Quiver::new(&["0", "1"], &[("a", "0", "0"), ("b", "0", "1"), ("g", "1", "0")])
        .expect("static quiver")
}

/// `q1` plus the loop `e: 1->1`.
pub fn q2() -> Quiver {
    Quiver::new(
        &["0", "1"],
        &[("a", "0", "0"), ("b", "0", "1"), ("g", "1", "0"), ("e", "1", "1")],
    )
    .expect("static quiver")
}

/// Which of the two quivers a family lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    One,
    Two,
}

impl Family {
    pub fn index(self) -> u8 {
        match self {
            Family::One => 1,
            Family::Two => 2,
        }
    }

    pub fn quiver(self) -> Quiver {
        match self {
            Family::One => q1(),
            Family::Two => q2(),
        }
    }
}

/// Names one presented algebra of the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogKey<F: Field> {
    /// Dihedral-type `kQ_i / I(i, c)`.
    Plain { family: Family, d: u32, c: F },
    /// Quaternion-type `kQ_i / Ihat(i, c_hat)`.
    Hat { family: Family, d: u32, c_hat: F },
    /// `kQ_1 / J(c1, c2)` resp. `kQ_2 / J(c1, c3)`.
    JQuotient { family: Family, d: u32, c1: F, c23: F },
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("d must be at least 3, got {0}")]
    SmallD(u32),
    #[error("the family-2 J ideal needs c1 != 0 for a finite-dimensional quotient")]
    ZeroC1,
}

impl<F: Field> CatalogKey<F> {
    pub fn family(&self) -> Family {
        match *self {
            CatalogKey::Plain { family, .. }
            | CatalogKey::Hat { family, .. }
            | CatalogKey::JQuotient { family, .. } => family,
        }
    }

    pub fn d(&self) -> u32 {
        match *self {
            CatalogKey::Plain { d, .. }
            | CatalogKey::Hat { d, .. }
            | CatalogKey::JQuotient { d, .. } => d,
        }
    }

    pub fn label(&self) -> String {
        let i = self.family().index();
        match self {
            CatalogKey::Plain { d, c, .. } => format!("L{i}(d={d},c={c})"),
            CatalogKey::Hat { d, c_hat, .. } => format!("L{i}^(d={d},ch={c_hat})"),
            CatalogKey::JQuotient { d, c1, c23, .. } => {
                let p = if i == 1 { "c2" } else { "c3" };
                format!("Q{i}/J(d={d},c1={c1},{p}={c23})")
            }
        }
    }
}

fn word<F: Field>(q: &Quiver, s: &str) -> FreeElement<F> {
    FreeElement::from_path(parse_path(q, s).expect("catalog word"))
}

fn scaled<F: Field>(q: &Quiver, c: F, s: &str) -> FreeElement<F> {
    FreeElement::from_term(parse_path(q, s).expect("catalog word"), c)
}

/// Generator lists of the catalog ideals, written exactly as presented; the
/// exponents scale with `d`.
pub fn build<F: Field>(key: &CatalogKey<F>) -> Result<(Quiver, Vec<FreeElement<F>>), CatalogError> {
    if key.d() < 3 {
        return Err(CatalogError::SmallD(key.d()));
    }
    let d = key.d();
    let e2 = 1usize << (d - 2); // 2^(d-2)
    let e1 = 1usize << (d - 1); // 2^(d-1)
    let q = key.family().quiver();
    let gens = match *key {
        CatalogKey::Plain { family: Family::One, c, .. } => vec![
            // b g,  a^2 - c (g b a)^{2^(d-2)},  (g b a)^{2^(d-2)} - (a g b)^{2^(d-2)}
            word(&q, "b g"),
            word(&q, "a a").sub(&scaled(&q, c, &format!("(g b a)^{e2}"))),
            word(&q, &format!("(g b a)^{e2}")).sub(&word(&q, &format!("(a g b)^{e2}"))),
        ],
        CatalogKey::Plain { family: Family::Two, c, .. } => vec![
            // e b,  g e,  b g,  a^2 - c g b a,  g b a - a g b,  e^{2^(d-2)} - b a g
            word(&q, "e b"),
            word(&q, "g e"),
            word(&q, "b g"),
            word(&q, "a a").sub(&scaled(&q, c, "g b a")),
            word(&q, "g b a").sub(&word(&q, "a g b")),
            word(&q, &format!("e^{e2}")).sub(&word(&q, "b a g")),
        ],
        CatalogKey::Hat { family: Family::One, c_hat, .. } => vec![
            // g b g - a g (b a g)^{2^(d-1)-1},  b g b - b a (g b a)^{2^(d-1)-1},
            // a^2 - g b (a g b)^{2^(d-1)-1} - c^ (a g b)^{2^(d-1)},  b a^2
            word(&q, "g b g").sub(&word(&q, &format!("a g (b a g)^{}", e1 - 1))),
            word(&q, "b g b").sub(&word(&q, &format!("b a (g b a)^{}", e1 - 1))),
            word(&q, "a a")
                .sub(&word(&q, &format!("g b (a g b)^{}", e1 - 1)))
                .sub(&scaled(&q, c_hat, &format!("(a g b)^{e1}"))),
            word(&q, "b a a"),
        ],
        CatalogKey::Hat { family: Family::Two, c_hat, .. } => vec![
            // e b - b a (g b a),  g e - a g (b a g),  b g - e^{2^(d-1)-1},
            // a^2 - g b (a g b) - c^ (a g b)^2,  b a^2
            word(&q, "e b").sub(&word(&q, "b a (g b a)")),
            word(&q, "g e").sub(&word(&q, "a g (b a g)")),
            word(&q, "b g").sub(&word(&q, &format!("e^{}", e1 - 1))),
            word(&q, "a a")
                .sub(&word(&q, "g b (a g b)"))
                .sub(&scaled(&q, c_hat, "(a g b)^2")),
            word(&q, "b a a"),
        ],
        CatalogKey::JQuotient { family: Family::One, c1, c23, .. } => vec![
            // a^2,  b g - c1 (b a g)^{2^(d-2)},  (g b a)^{2^(d-2)} - c2 (a g b)^{2^(d-2)}
            word(&q, "a a"),
            word(&q, "b g").sub(&scaled(&q, c1, &format!("(b a g)^{e2}"))),
            word(&q, &format!("(g b a)^{e2}")).sub(&scaled(&q, c23, &format!("(a g b)^{e2}"))),
        ],
        CatalogKey::JQuotient { family: Family::Two, c1, c23, .. } => {
            if c1.is_zero() {
                return Err(CatalogError::ZeroC1);
            }
            vec![
                // a^2,  e b,  g e,  b g,  b a g - c1 e^{2^(d-2)},  g b a - c3 a g b
                word(&q, "a a"),
                word(&q, "e b"),
                word(&q, "g e"),
                word(&q, "b g"),
                word(&q, "b a g").sub(&scaled(&q, c1, &format!("e^{e2}"))),
                word(&q, "g b a").sub(&scaled(&q, c23, "a g b")),
            ]
        }
    };
    Ok((q, gens))
}

/// Default completion cap for a catalog key: a little past the longest
/// radical series in the family.
pub fn default_cap(d: u32) -> usize {
    3 * (1usize << (d - 1)) + 8
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum BuildError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Gb(#[from] crate::gbasis::GbError),
}

/// Build the catalog algebra under the default order and cap.
pub fn algebra_for<F: Field>(
    key: &CatalogKey<F>,
) -> Result<crate::algebra::FiniteDimAlgebra<F>, BuildError> {
    let (q, gens) = build(key)?;
    let ideal = crate::gbasis::IdealPresentation::new(q.clone(), gens)?;
    let order = crate::gbasis::MonomialOrder::length_lex(&q);
    Ok(crate::algebra::FiniteDimAlgebra::from_presentation(
        ideal,
        &order,
        default_cap(key.d()),
    )?)
}

/// Expected total dimension of the quotient.
pub fn expected_dimension(key: &CatalogKey<impl Field>) -> Option<usize> {
    let d = key.d();
    let e2 = 1usize << (d - 2);
    let e1 = 1usize << (d - 1);
    match (key, key.family()) {
        (CatalogKey::Plain { .. }, Family::One) => Some(9 * e2 + 1),
        (CatalogKey::Plain { .. }, Family::Two) => Some(9 + e2),
        (CatalogKey::Hat { .. }, Family::One) => Some(9 * e1 + 2),
        (CatalogKey::Hat { .. }, Family::Two) => Some(18 + e1),
        // J quotients match the dihedral dimensions; that equality is one of
        // the pipeline checks rather than an input, so no value here.
        (CatalogKey::JQuotient { .. }, _) => None,
    }
}

/// Expected dimension of the projective cover P(v).
pub fn expected_projective_dimension(key: &CatalogKey<impl Field>, v: usize) -> Option<usize> {
    let d = key.d();
    let e2 = 1usize << (d - 2);
    let e1 = 1usize << (d - 1);
    match (key, key.family(), v) {
        (CatalogKey::Plain { .. }, Family::One, 0) => Some(6 * e2),
        (CatalogKey::Plain { .. }, Family::One, 1) => Some(1 + 3 * e2),
        (CatalogKey::Plain { .. }, Family::Two, 0) => Some(6),
        (CatalogKey::Plain { .. }, Family::Two, 1) => Some(3 + e2),
        (CatalogKey::Hat { .. }, Family::One, 0) => Some(6 * e1),
        (CatalogKey::Hat { .. }, Family::One, 1) => Some(2 + 3 * e1),
        (CatalogKey::Hat { .. }, Family::Two, 0) => Some(12),
        (CatalogKey::Hat { .. }, Family::Two, 1) => Some(6 + e1),
        _ => None,
    }
}

pub use crate::algebra::DecompositionMatrix;

/// The decomposition matrix attached to a dihedral or quaternion catalog
/// family. The starred last row repeats `2^(d-2) - 1` times for the plain
/// families and `2^(d-1) - 1` times for the hatted ones.
pub fn decomposition(family: Family, hat: bool, d: u32) -> DecompositionMatrix {
    let repeats = if hat { (1usize << (d - 1)) - 1 } else { (1usize << (d - 2)) - 1 };
    let mut rows: Vec<[u64; 2]> = vec![[1, 0], [1, 0], [1, 1], [1, 1]];
    match (family, hat) {
        (Family::One, false) => rows.extend(std::iter::repeat([2, 1]).take(repeats)),
        (Family::Two, false) => rows.extend(std::iter::repeat([0, 1]).take(repeats)),
        (Family::One, true) => {
            rows.push([0, 1]);
            rows.extend(std::iter::repeat([2, 1]).take(repeats));
        }
        (Family::Two, true) => {
            rows.push([2, 1]);
            rows.extend(std::iter::repeat([0, 1]).take(repeats));
        }
    }
    DecompositionMatrix::new(rows)
}

/// Run a closure over items on up to `QF_THREADS` worker threads (default:
/// available parallelism), returning results in input order.
pub fn parallel_map<T, U, G>(items: Vec<T>, f: G) -> Vec<U>
where
    T: Send,
    U: Send,
    G: Fn(T) -> U + Sync,
{
    let cap = std::env::var("QF_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let workers = cap.min(items.len()).max(1);
    if workers <= 1 {
        return items.into_iter().map(f).collect();
    }
    let mut slots: Vec<Option<U>> = std::iter::repeat_with(|| None).take(items.len()).collect();
    let work: Vec<(usize, T)> = items.into_iter().enumerate().collect();
    let queue = std::sync::Mutex::new(work);
    let results = std::sync::Mutex::new(&mut slots);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let item = queue.lock().unwrap().pop();
                let Some((i, x)) = item else { break };
                let y = f(x);
                results.lock().unwrap()[i] = Some(y);
            });
        }
    });
    slots.into_iter().map(|s| s.expect("worker filled slot")).collect()
}

/// Parameters of one theorem-verification run.
#[derive(Clone, Debug)]
pub struct PipelineConfig<F: Field> {
    pub family: Family,
    pub d: u32,
    pub c_hat_grid: Vec<F>,
    pub c1_grid: Vec<F>,
    pub budget: u64,
    /// Negative-control override for the c2 (family 1) / c3 (family 2)
    /// parameter of the J ideals; the honest value is 1.
    pub inject_c23: Option<F>,
}

impl<F: Field> PipelineConfig<F> {
    /// Default grids: both elements of GF(2), plus a generator when the
    /// field is larger; family 2 ideals need c1 nonzero.
    pub fn standard(family: Family, d: u32) -> Self {
        let mut grid = vec![F::zero(), F::one()];
        if F::order() >= 4 {
            grid.push(F::from_index(2).expect("generator"));
        }
        let c1_grid: Vec<F> = match family {
            Family::One => grid.clone(),
            Family::Two => grid.iter().copied().filter(|c| !c.is_zero()).collect(),
        };
        PipelineConfig {
            family,
            d,
            c_hat_grid: grid,
            c1_grid,
            budget: 1 << 22,
            inject_c23: None,
        }
    }

    pub fn config_json(&self) -> serde_json::Value {
        serde_json::json!({
            "family": self.family.index(),
            "d": self.d,
            "field_order": F::order(),
            "c_hat_grid": self.c_hat_grid.iter().map(|c| c.to_index()).collect::<Vec<_>>(),
            "c1_grid": self.c1_grid.iter().map(|c| c.to_index()).collect::<Vec<_>>(),
            "budget": self.budget,
            "inject_c23": self.inject_c23.map(|c| c.to_index()),
        })
    }
}

/// Machine-verify the computational skeleton of the parameter-forcing
/// theorem for one family at one degree, over the configured grids:
///
/// 1. the dimension table and per-projective lengths,
/// 2. Loewy lengths and socle generators of the dihedral family,
/// 3. the listed kernel elements dying in kQ/J,
/// 4. the uniserial existence/nonexistence battery,
/// 5. Cartan matrices against the decomposition matrices,
/// 6. kernel identification for the natural surjections onto kQ/J,
/// 7. the symmetric-form search forcing c2 = 1 (resp. c3 = 1),
/// 8. the closing generator-map isomorphisms onto the c = 0 algebra.
pub fn verify_theorem<F: Field>(cfg: &PipelineConfig<F>) -> Result<VerificationReport, BuildError> {
    let family = cfg.family;
    let d = cfg.d;
    let e2 = 1usize << (d - 2);
    let c23 = cfg.inject_c23.unwrap_or_else(F::one);
    let mut report = VerificationReport::new(cfg.config_json());

    // build every algebra the steps need, in parallel
    let plain_params = [F::zero(), F::one()];
    let plain: Vec<(F, FiniteDimAlgebra<F>)> = parallel_map(plain_params.to_vec(), |c| {
        (c, algebra_for(&CatalogKey::Plain { family, d, c }).expect("catalog build"))
    });
    let hats: Vec<(F, FiniteDimAlgebra<F>)> = parallel_map(cfg.c_hat_grid.clone(), |c_hat| {
        (c_hat, algebra_for(&CatalogKey::Hat { family, d, c_hat }).expect("catalog build"))
    });
    let jquots: Vec<(F, FiniteDimAlgebra<F>)> = parallel_map(cfg.c1_grid.clone(), |c1| {
        let key = CatalogKey::JQuotient { family, d, c1, c23 };
        (c1, algebra_for(&key).expect("catalog build"))
    });

    // step 1: dimensions
    for (c, a) in &plain {
        let key = CatalogKey::Plain { family, d, c: *c };
        step_dimensions(&mut report, &key, a);
    }
    for (c_hat, a) in &hats {
        let key = CatalogKey::Hat { family, d, c_hat: *c_hat };
        step_dimensions(&mut report, &key, a);
    }

    // step 2: Loewy series and socle generators of the dihedral algebras
    for (c, a) in &plain {
        let key = CatalogKey::Plain { family, d, c: *c };
        step_loewy_socle(&mut report, &key, a, e2);
    }

    // step 3: the listed kernel elements reduce to zero in kQ/J
    let kernel_words: Vec<String> = match family {
        Family::One => vec![
            "a a".into(),
            "b g b".into(),
            "g b g".into(),
            format!("(a g b)^{e2} a"),
            format!("(g b a)^{e2} g"),
            format!("(b a g)^{e2} b"),
        ],
        Family::Two => vec![
            "a g b a".into(),
            "b a g b".into(),
            "a a".into(),
            "e b".into(),
            "g e".into(),
            "b g".into(),
            format!("e^{}", e2 + 1),
        ],
    };
    for (c1, target) in &jquots {
        let key = CatalogKey::JQuotient { family, d, c1: *c1, c23 };
        for w in &kernel_words {
            let x = parse_free_element::<F>(target.quiver(), w).expect("catalog word");
            let dead = target.nf(&x).iter().all(|v| v.is_zero());
            report.steps.push(StepReport::check(
                3,
                key.label(),
                format!("{w} lies in the kernel ideal"),
                serde_json::json!("zero"),
                serde_json::json!(if dead { "zero" } else { "nonzero" }),
            ));
        }
    }

    // step 4: uniserial battery
    step_uniserial(&mut report, cfg, &plain, &hats);

    // step 5: Cartan = D^T D
    for (hat, list) in [(false, &plain), (true, &hats)] {
        let expected = decomposition(family, hat, d).cartan();
        let expected = vec![expected[0].to_vec(), expected[1].to_vec()];
        for (c, a) in list.iter() {
            let key: CatalogKey<F> = if hat {
                CatalogKey::Hat { family, d, c_hat: *c }
            } else {
                CatalogKey::Plain { family, d, c: *c }
            };
            report.steps.push(StepReport::check(
                5,
                key.label(),
                "normal-word Cartan matrix equals D^T D",
                expected.clone(),
                a.cartan_matrix(),
            ));
        }
    }

    // step 6: kernel identification for the natural surjections
    let plain_dim = expected_dimension(&CatalogKey::Plain { family, d, c: F::zero() })
        .expect("dihedral dimension");
    for (c_hat, hat_alg) in &hats {
        for (c1, target) in &jquots {
            let hat_key = CatalogKey::Hat { family, d, c_hat: *c_hat };
            let j_key = CatalogKey::JQuotient { family, d, c1: *c1, c23 };
            let label = format!("{} -> {}", hat_key.label(), j_key.label());
            let map = GeneratorMap::natural(hat_alg, target).expect("same quiver");
            let well = map.is_well_defined() && map.is_surjective();
            report.steps.push(StepReport::check(
                6,
                label.clone(),
                "natural generator surjection is well-defined",
                true,
                well,
            ));
            if !well {
                continue;
            }
            let (contained, dims) = map.rad_square_containment();
            let arrows = hat_alg.quiver().arrow_count();
            report.steps.push(StepReport::check(
                6,
                label.clone(),
                "kernel lies in rad^2; A/rad and A/rad^2 match on both sides",
                serde_json::json!({"contained": true, "dims": [[2, 2], [2 + arrows, 2 + arrows]]}),
                serde_json::json!({"contained": contained, "dims": dims}),
            ));
            report.steps.push(StepReport::check(
                6,
                label.clone(),
                "kernel dimension is dim of the hatted minus the dihedral algebra",
                hat_alg.dim() - plain_dim,
                map.kernel_basis().dim(),
            ));
            let (_, j_gens) = build(&j_key).expect("catalog build");
            report.steps.push(StepReport::check(
                6,
                label,
                "kernel equals the two-sided ideal generated by the J relations",
                true,
                map.kernel_equals_ideal(&j_gens),
            ));
        }
    }

    // step 7: symmetric forms force the last parameter to 1
    for (c1, a) in &jquots {
        let key = CatalogKey::JQuotient { family, d, c1: *c1, c23 };
        let hit = a.find_symmetric_form();
        report.steps.push(StepReport::check(
            7,
            key.label(),
            "a nondegenerate symmetric form exists on kQ/J",
            "found",
            hit.status(),
        ));
    }
    if cfg.inject_c23.is_none() {
        if let Some(w) = nonunit(&cfg.c_hat_grid) {
            let c1 = match family {
                Family::One => F::zero(),
                Family::Two => F::one(),
            };
            let key = CatalogKey::JQuotient { family, d, c1, c23: w };
            let a = algebra_for(&key).expect("catalog build");
            let hit = a.find_symmetric_form();
            let entry = match hit {
                SymmetricFormSearch::NotFoundSampled { candidates } => StepReport::check(
                    7,
                    key.label(),
                    "negative control: sampled search finds no symmetric form",
                    "not found (sampled)",
                    hit.status(),
                )
                .with_witness(format!(
                    "solution space too large to exhaust; {candidates} samples tried, \
                     nonexistence not certified"
                )),
                _ => StepReport::check(
                    7,
                    key.label(),
                    "negative control: no symmetric form exists for a non-unit parameter",
                    "not found (exhaustive)",
                    hit.status(),
                ),
            };
            report.steps.push(entry);
        }
    }

    // step 8: the closing generator maps are isomorphisms
    let zero_key = CatalogKey::Plain { family, d, c: F::zero() };
    let zero_alg = &plain.iter().find(|(c, _)| c.is_zero()).expect("c = 0 built").1;
    let closing_c1: Vec<F> = match family {
        Family::One => F::elements(),
        Family::Two => F::elements().into_iter().filter(|c| !c.is_zero()).collect(),
    };
    let closing: Vec<(F, FiniteDimAlgebra<F>)> = parallel_map(closing_c1, |c1| {
        let key = CatalogKey::JQuotient { family, d, c1, c23 };
        (c1, algebra_for(&key).expect("catalog build"))
    });
    for (c1, target) in &closing {
        let j_key = CatalogKey::JQuotient { family, d, c1: *c1, c23 };
        let map = closing_map(zero_alg, target, family, d, *c1);
        report.steps.push(StepReport::check(
            8,
            format!("{} -> {}", zero_key.label(), j_key.label()),
            "the closing generator map is an isomorphism",
            true,
            map.is_isomorphism(),
        ));
    }

    Ok(report)
}

fn nonunit<F: Field>(grid: &[F]) -> Option<F> {
    grid.iter().copied().find(|c| !c.is_zero() && !c.is_one())
}

/// The closing generator maps: identity on everything except `g`, which
/// picks up the c1 twist (family 1) or the c1^-1 scaling (family 2).
pub fn closing_map<'a, F: Field>(
    source: &'a FiniteDimAlgebra<F>,
    target: &'a FiniteDimAlgebra<F>,
    family: Family,
    d: u32,
    c1: F,
) -> GeneratorMap<'a, F> {
    let q = source.quiver();
    let g = q.arrow_id("g").expect("catalog quiver");
    let gamma = FreeElement::from_path(Path::arrow(q, g));
    let image = match family {
        Family::One => {
            let twist = parse_path(q, &format!("a g (b a g)^{}", (1usize << (d - 2)) - 1))
                .expect("catalog word");
            gamma.sub(&FreeElement::from_term(twist, c1))
        }
        Family::Two => FreeElement::from_term(
            Path::arrow(q, g),
            c1.inv().expect("family 2 needs c1 nonzero"),
        ),
    };
    let images = (0..q.arrow_count())
        .map(|z| if z == g { image.clone() } else { FreeElement::from_path(Path::arrow(q, z)) })
        .collect();
    GeneratorMap::new(source, target, images).expect("vertex-preserving catalog map")
}

fn step_dimensions<F: Field>(
    report: &mut VerificationReport,
    key: &CatalogKey<F>,
    a: &FiniteDimAlgebra<F>,
) {
    let cartan = a.cartan_matrix();
    let p = |v: usize| (cartan[0][v] + cartan[1][v]) as usize;
    report.steps.push(StepReport::check(
        1,
        key.label(),
        "total and per-projective dimensions match the composition counts",
        serde_json::json!({
            "dim": expected_dimension(key).expect("catalog key"),
            "p0": expected_projective_dimension(key, 0).expect("catalog key"),
            "p1": expected_projective_dimension(key, 1).expect("catalog key"),
        }),
        serde_json::json!({ "dim": a.dim(), "p0": p(0), "p1": p(1) }),
    ));
    if let CatalogKey::Hat { family, d, .. } = *key {
        // hatted projectives are twice the dihedral ones, vertex by vertex
        let plain = CatalogKey::Plain { family, d, c: F::zero() };
        report.steps.push(StepReport::check(
            1,
            key.label(),
            "each hatted projective doubles the dihedral one",
            serde_json::json!([
                2 * expected_projective_dimension(&plain, 0).expect("catalog key"),
                2 * expected_projective_dimension(&plain, 1).expect("catalog key"),
            ]),
            serde_json::json!([p(0), p(1)]),
        ));
    }
}

fn step_loewy_socle<F: Field>(
    report: &mut VerificationReport,
    key: &CatalogKey<F>,
    a: &FiniteDimAlgebra<F>,
    e2: usize,
) {
    let family = key.family();
    let d = key.d();
    let expected_lengths: [usize; 2] = match family {
        Family::One => [3 * e2 + 1, 3 * e2 + 1],
        Family::Two => [4, if d == 3 { 4 } else { e2 + 1 }],
    };
    for v in 0..2 {
        let p = crate::modrep::projective(a, v);
        report.steps.push(StepReport::check(
            2,
            key.label(),
            format!("radical series length of P({v})"),
            expected_lengths[v],
            p.radical_series().len(),
        ));
    }
    report.steps.push(StepReport::check(
        2,
        key.label(),
        "algebra Loewy length is the longest projective series",
        expected_lengths[0].max(expected_lengths[1]),
        a.loewy_length(),
    ));

    // socle generators: the named words coincide and span the socle lines
    let socle_words: [(usize, String, String); 2] = match family {
        Family::One => [
            (0, format!("(g b a)^{e2}"), format!("(a g b)^{e2}")),
            (1, format!("(b a g)^{e2}"), format!("(b a g)^{e2}")),
        ],
        Family::Two => [
            (0, "g b a".into(), "a g b".into()),
            (1, format!("e^{e2}"), "b a g".into()),
        ],
    };
    let soc = a.socle(1);
    report.steps.push(StepReport::check(
        2,
        key.label(),
        "one socle line per projective",
        a.quiver().vertex_count(),
        soc.dim(),
    ));
    for (v, w1, w2) in socle_words {
        let x1 = a.nf(&parse_free_element::<F>(a.quiver(), &w1).expect("catalog word"));
        let x2 = a.nf(&parse_free_element::<F>(a.quiver(), &w2).expect("catalog word"));
        let ok = x1 == x2 && x1.iter().any(|c| !c.is_zero()) && soc.contains(&x1) && {
            let p = crate::modrep::projective(a, v);
            let slots: Vec<usize> =
                (0..a.dim()).filter(|&k| a.basis()[k].source() == v).collect();
            let emb: Vec<F> = slots.iter().map(|&k| x1[k]).collect();
            let psoc = p.socle();
            psoc.dim() == 1 && psoc.contains(&emb)
        };
        report.steps.push(StepReport::check(
            2,
            key.label(),
            format!("soc P({v}) is the line spanned by {w1} = {w2}"),
            true,
            ok,
        ));
    }
}

fn step_uniserial<F: Field>(
    report: &mut VerificationReport,
    cfg: &PipelineConfig<F>,
    plain: &[(F, FiniteDimAlgebra<F>)],
    hats: &[(F, FiniteDimAlgebra<F>)],
) {
    let family = cfg.family;
    let d = cfg.d;
    let e2 = 1usize << (d - 2);
    let q = family.quiver();

    // (word in the hatted algebra, factor sequence ruled out in the
    // dihedral one)
    let mut pairs: Vec<(String, Vec<usize>)> = Vec::new();
    match family {
        Family::One => {
            pairs.push(("b g".into(), vec![1, 0, 1]));
            for w in [format!("(g b a)^{e2}"), format!("(a g b)^{e2}")] {
                let seq = parse_path(&q, &w).expect("catalog word").vertex_sequence(&q);
                pairs.push((w, seq));
            }
        }
        Family::Two => {
            if d == 3 {
                pairs.push(("e e".into(), vec![1, 1, 1]));
            }
            pairs.push(("b a g".into(), vec![1, 0, 0, 1]));
            pairs.push(("g b a".into(), vec![0, 0, 1, 0]));
            pairs.push(("a g b".into(), vec![0, 1, 0, 0]));
        }
    }

    for (c, a) in plain {
        let key = CatalogKey::Plain { family, d, c: *c };
        for (_, seq) in &pairs {
            match crate::modrep::uniserial_exists(a, seq, cfg.budget) {
                Ok(found) => {
                    report.steps.push(StepReport::check(
                        4,
                        key.label(),
                        format!("no uniserial module with descending factors {seq:?}"),
                        serde_json::json!(false),
                        serde_json::json!(found),
                    ));
                    // independent combinatorial route over the socle quotient
                    let cross = crate::modrep::uniserial_exists_string_check(a, seq);
                    report.steps.push(StepReport::check(
                        4,
                        key.label(),
                        format!("string-combinatorial check agrees on {seq:?}"),
                        serde_json::json!(Some(false)),
                        serde_json::json!(cross),
                    ));
                }
                Err(crate::modrep::ModError::SearchOverflow { budget }) => {
                    // for the long family-1 sequences past d = 3 the matrix
                    // search is underdetermined until its last level and
                    // blows the budget; the socle quotient is a string
                    // algebra, so the combinatorial route decides exactly
                    let entry = match crate::modrep::uniserial_exists_string_check(a, seq) {
                        Some(found) => StepReport::check(
                            4,
                            key.label(),
                            format!("no uniserial module with descending factors {seq:?}"),
                            serde_json::json!(false),
                            serde_json::json!(found),
                        )
                        .with_witness(format!(
                            "matrix search exceeded the budget of {budget} assignments; \
                             decided by direct strings over the socle quotient"
                        )),
                        None => StepReport::check(
                            4,
                            key.label(),
                            format!("no uniserial module with descending factors {seq:?}"),
                            serde_json::json!(false),
                            serde_json::json!(format!(
                                "undecided: search overflow at {budget} and the socle \
                                 quotient is not a string algebra"
                            )),
                        ),
                    };
                    report.steps.push(entry);
                }
                Err(e) => {
                    report.steps.push(StepReport::check(
                        4,
                        key.label(),
                        format!("no uniserial module with descending factors {seq:?}"),
                        serde_json::json!(false),
                        serde_json::json!(format!("error: {e}")),
                    ));
                }
            }
        }
    }

    for (c_hat, a) in hats {
        let key = CatalogKey::Hat { family, d, c_hat: *c_hat };
        for (w, seq) in &pairs {
            let path = parse_path(&q, w).expect("catalog word");
            let actual = match crate::modrep::string_module(a, &path) {
                Ok(m) => serde_json::json!({
                    "uniserial": m.is_uniserial(),
                    "factors": m.factor_sequence(),
                }),
                Err(e) => serde_json::json!(format!("error: {e}")),
            };
            report.steps.push(StepReport::check(
                4,
                key.label(),
                format!("M_w for w = {w} is uniserial with factors {seq:?}"),
                serde_json::json!({ "uniserial": true, "factors": Some(seq.clone()) }),
                actual,
            ));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{F2, F4};
    use num_traits::{One, Zero};

    #[test]
    fn generator_lists_at_d3() {
        let q = q2();
        let key = CatalogKey::Hat { family: Family::Two, d: 3, c_hat: F2::zero() };
        let (_, gens) = build(&key).unwrap();
        let shown: Vec<String> = gens.iter().map(|g| g.display(&q).to_string()).collect();
        // with c_hat = 0 the a^2 relation loses its last term; e^{2^(d-1)-1} = e^3
        assert_eq!(
            shown,
            vec![
                "b a g b a + e b",
                "a g b a g + g e",
                "b g + e e e",
                "a a + g b a g b",
                "b a a",
            ]
        );

        let key = CatalogKey::Plain { family: Family::One, d: 3, c: F2::one() };
        let (q1w, gens) = build(&key).unwrap();
        let shown: Vec<String> = gens.iter().map(|g| g.display(&q1w).to_string()).collect();
        assert_eq!(
            shown,
            vec![
                "b g",
                "a a + g b a g b a",
                "g b a g b a + a g b a g b",
            ]
        );
    }

    #[test]
    fn family2_j_rejects_zero_c1() {
        let key = CatalogKey::JQuotient {
            family: Family::Two,
            d: 3,
            c1: F4::zero(),
            c23: F4::one(),
        };
        assert_eq!(build(&key).unwrap_err(), CatalogError::ZeroC1);
        assert!(build(&CatalogKey::Plain { family: Family::One, d: 2, c: F2::zero() }).is_err());
    }

    #[test]
    fn decomposition_shapes() {
        let d3 = decomposition(Family::One, false, 3);
        assert_eq!(d3.rows, vec![[1, 0], [1, 0], [1, 1], [1, 1], [2, 1]]);
        assert_eq!(d3.cartan(), [[8, 4], [4, 3]]);

        let f2_d4 = decomposition(Family::Two, false, 4);
        assert_eq!(
            f2_d4.rows,
            vec![[1, 0], [1, 0], [1, 1], [1, 1], [0, 1], [0, 1], [0, 1]]
        );

        let hat1_d3 = decomposition(Family::One, true, 3);
        assert_eq!(
            hat1_d3.rows,
            vec![[1, 0], [1, 0], [1, 1], [1, 1], [0, 1], [2, 1], [2, 1], [2, 1]]
        );
        assert_eq!(hat1_d3.cartan(), [[16, 8], [8, 6]]);

        let hat2_d3 = decomposition(Family::Two, true, 3);
        assert_eq!(hat2_d3.cartan(), [[8, 4], [4, 6]]);

        // identity-shaped D gives the identity Cartan matrix
        let id = DecompositionMatrix::new(vec![[1, 0], [0, 1]]);
        assert_eq!(id.cartan(), [[1, 0], [0, 1]]);
    }

    #[test]
    fn row_counts_follow_the_repetition_rule() {
        for d in 3..=5u32 {
            let e2 = 1usize << (d - 2);
            let e1 = 1usize << (d - 1);
            assert_eq!(decomposition(Family::One, false, d).rows.len(), 3 + e2);
            assert_eq!(decomposition(Family::Two, false, d).rows.len(), 3 + e2);
            assert_eq!(decomposition(Family::One, true, d).rows.len(), 4 + e1);
            assert_eq!(decomposition(Family::Two, true, d).rows.len(), 4 + e1);
        }
    }

    #[test]
    fn cartan_column_sums_are_projective_lengths() {
        for d in 3..=5u32 {
            for family in [Family::One, Family::Two] {
                for hat in [false, true] {
                    let c = decomposition(family, hat, d).cartan();
                    let key: CatalogKey<F2> = if hat {
                        CatalogKey::Hat { family, d, c_hat: F2::zero() }
                    } else {
                        CatalogKey::Plain { family, d, c: F2::zero() }
                    };
                    for v in 0..2 {
                        let col: u64 = c[0][v] + c[1][v];
                        assert_eq!(col as usize, expected_projective_dimension(&key, v).unwrap());
                    }
                }
            }
        }
    }
}
