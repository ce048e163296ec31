//! Named batteries of checks, each replaying one identity or lemma on
//! seeded samples or exhaustive finite families.

use std::time::Instant;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use crate::braid::{BraidWord, Engine};
use crate::charbnsr::{
    abelian_image, abelian_image_of_diagram, center_character_value, evaluate, sigma_membership,
    subgroup_finiteness, AbelianImage, Character, Verdict,
};
use crate::complexes::stein::{merge_forest, split_forest};
use crate::complexes::{
    ascending_link, connectivity_report, cube_span, descending_link_shadow, matching_complex,
    patch_check, vertex_equal, CubePatchVertex, Graph, Merge, Patch, SimplicialComplex,
};
use crate::diagram::{
    conjugation_check, deferred_representative, hnn_rewrite, in_deferred_subgroup, psi,
    psi_of_representative, ConjugationDirection, Diagram, GroupElement, Side,
};
use crate::error::{Error, Result};
use crate::forest::{Address, Forest, Tree};
use crate::sample;

pub const SUITES: &[&str] = &[
    "engine-agreement",
    "winding-table",
    "confluence",
    "f-relations",
    "characters",
    "sigma-table",
    "finiteness",
    "lemma-conj",
    "hnn-rewrite",
    "psi",
    "center",
    "matching-topology",
    "make-matching",
    "alk-simplex",
    "dlk-matching",
    "cube-span",
    "flag-links",
];

#[derive(Debug, Clone)]
pub struct Options {
    pub seed: u64,
    /// Overrides each suite's own sample count.
    pub samples: Option<usize>,
    pub braid_bound: usize,
    pub height_bound: usize,
    pub radius: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: 1,
            samples: None,
            braid_bound: 4,
            height_bound: 4,
            radius: 4,
        }
    }
}

impl Options {
    fn samples(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seconds: f64,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.0.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    /// A single line summarising `total` trials of which `bad` failed.
    fn tally(&mut self, name: impl Into<String>, total: usize, bad: &[String]) {
        let detail = match bad.first() {
            None => format!("{total}/{total}"),
            Some(first) => format!("{}/{total}; first failure: {first}", total - bad.len()),
        };
        self.push(name, bad.is_empty(), detail);
    }
}

pub fn run_suite(name: &str, opts: &Options) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut c = Checks::default();
    match name {
        "engine-agreement" => engine_agreement(opts, &mut c),
        "winding-table" => winding_table(&mut c)?,
        "confluence" => confluence(opts, &mut c),
        "f-relations" => f_relations(&mut c),
        "characters" => characters(opts, &mut c)?,
        "sigma-table" => sigma_table(opts, &mut c)?,
        "finiteness" => finiteness(opts, &mut c)?,
        "lemma-conj" => lemma_conj(opts, &mut c)?,
        "hnn-rewrite" => hnn(opts, &mut c)?,
        "psi" => psi_suite(opts, &mut c)?,
        "center" => center(opts, &mut c)?,
        "matching-topology" => matching_topology(&mut c),
        "make-matching" => make_matching(&mut c)?,
        "alk-simplex" => alk_simplex(opts, &mut c)?,
        "dlk-matching" => dlk_matching(&mut c)?,
        "cube-span" => cube_span_suite(opts, &mut c)?,
        "flag-links" => flag_links(opts, &mut c)?,
        _ => return Err(Error::Parse(format!("unknown suite {name:?}"))),
    }
    Ok(SuiteReport {
        suite: name.to_string(),
        seconds: start.elapsed().as_secs_f64(),
        checks: c.0,
    })
}

fn engine_agreement(opts: &Options, c: &mut Checks) {
    let mut rng = sample::rng(opts.seed);
    let total = opts.samples(1000);
    let (mut bad, mut trivial) = (Vec::new(), 0);
    for i in 0..total {
        let n = rng.gen_range(2..=6);
        let len = rng.gen_range(0..=40);
        let w = if i % 2 == 0 {
            sample::random_trivial_word(&mut rng, n, len)
        } else {
            sample::random_word(&mut rng, n, len)
        };
        let a = w.is_trivial_with(Engine::FreeGroupAction);
        let b = w.is_trivial_with(Engine::HandleReduction);
        trivial += a as usize;
        if a != b {
            bad.push(format!("{w}: action {a}, handles {b}"));
        }
    }
    c.tally(
        format!("engines agree ({trivial} trivial words)"),
        total,
        &bad,
    );
}

fn winding_table(c: &mut Checks) -> Result<()> {
    for n in 2..=7 {
        let twist = BraidWord::full_twist(n);
        let mut bad = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                let w = twist.winding_number(i, j)?;
                if w != 1 {
                    bad.push(format!("w({i},{j}) = {w}"));
                }
            }
        }
        c.tally(
            format!("winding numbers of the full twist on {n} strands"),
            n * (n - 1) / 2,
            &bad,
        );
    }
    Ok(())
}

fn same_reduced(a: &Diagram, b: &Diagram) -> bool {
    a.neg() == b.neg() && a.pos() == b.pos() && a.braid().equals(b.braid()).unwrap_or(false)
}

fn confluence(opts: &Options, c: &mut Checks) {
    let mut rng = sample::rng(opts.seed);
    let total = opts.samples(200);
    let mut bad = Vec::new();
    for _ in 0..total {
        let leaves = rng.gen_range(1..=6);
        let len = rng.gen_range(0..=8);
        let g = sample::random_element(&mut rng, leaves, len);
        let reduced = g.diagram();
        for order in 0..3 {
            let e = sample::random_expansion(&mut rng, reduced, 5);
            let r = e.reduce();
            if !same_reduced(&r, reduced) || !r.is_reduced() {
                bad.push(format!("{g} order {order}: {e} reduced to {r}"));
            }
        }
    }
    c.tally(
        "expansions reduce back to the reduced form",
        total * 3,
        &bad,
    );
}

fn f_relations(c: &mut Checks) {
    for i in 0..=4 {
        for j in i + 1..=4 {
            let lhs = GroupElement::x(j).multiply(&GroupElement::x(i));
            let rhs = GroupElement::x(i).multiply(&GroupElement::x(j + 1));
            c.push(
                format!("x{j} x{i} = x{i} x{}", j + 1),
                lhs.equals(&rhs),
                format!("{lhs}"),
            );
        }
    }
    let (x0, x1) = (GroupElement::x(0), GroupElement::x(1));
    c.push(
        "x0 x1 != x1 x0",
        !x0.multiply(&x1).equals(&x1.multiply(&x0)),
        "",
    );
}

fn characters(opts: &Options, c: &mut Checks) -> Result<()> {
    let mut rng = sample::rng(opts.seed);
    let total = opts.samples(100);
    let mut bad = Vec::new();
    for _ in 0..total {
        let g = {
            let (p, q) = (rng.gen_range(1..=6), rng.gen_range(0..=10));
            sample::random_element(&mut rng, p, q)
        };
        let image = abelian_image(&g)?;
        for _ in 0..10 {
            let count = rng.gen_range(1..=4);
            let e = sample::random_expansion(&mut rng, g.diagram(), count);
            let other = abelian_image_of_diagram(&e)?;
            if other != image {
                bad.push(format!("{g}: {image:?} vs {other:?} on {e}"));
            }
        }
    }
    c.tally(
        "abelian image is constant across expansions",
        total * 10,
        &bad,
    );

    let (mut bad, mut bad_comm) = (Vec::new(), Vec::new());
    for _ in 0..total {
        let g = {
            let (p, q) = (rng.gen_range(1..=5), rng.gen_range(0..=8));
            sample::random_element(&mut rng, p, q)
        };
        let h = {
            let (p, q) = (rng.gen_range(1..=5), rng.gen_range(0..=8));
            sample::random_element(&mut rng, p, q)
        };
        let (ig, ih) = (abelian_image(&g)?, abelian_image(&h)?);
        let igh = abelian_image(&g.multiply(&h))?;
        if igh != ig.add(&ih) {
            bad.push(format!("{g} * {h}: {igh:?} != {:?}", ig.add(&ih)));
        }
        let comm = g.invert().multiply(&h.invert()).multiply(&g).multiply(&h);
        if !abelian_image(&comm)?.is_zero() {
            bad_comm.push(format!("[{g}, {h}]"));
        }
    }
    c.tally("abelian image is additive", total, &bad);
    c.tally("commutators have zero image", total, &bad_comm);
    Ok(())
}

fn random_rational<R: Rng>(rng: &mut R) -> BigRational {
    BigRational::new(
        rng.gen_range(-9i64..=9).into(),
        rng.gen_range(1i64..=5).into(),
    )
}

fn sigma_table(opts: &Options, c: &mut Checks) -> Result<()> {
    let mut expect = |name: String, chi: &Character, m: u32, want: bool| -> Result<()> {
        let got = sigma_membership(chi, m)?;
        c.push(name, got == want, format!("{chi} in Sigma^{m}: {got}"));
        Ok(())
    };
    expect("phi0 not in Sigma^1".into(), &Character::phi0(), 1, false)?;
    expect("phi1 not in Sigma^1".into(), &Character::phi1(), 1, false)?;
    for m in 1..=10 {
        expect(
            format!("-phi0 in Sigma^{m}"),
            &Character::phi0().neg(),
            m,
            true,
        )?;
    }
    for (a, b) in [(1, 0), (0, 1), (1, 1), (2, 3)] {
        let chi = Character::from_ints(a, b, 0, 0);
        expect(
            format!("{a} phi0 + {b} phi1 not in Sigma^2"),
            &chi,
            2,
            false,
        )?;
    }
    expect(
        "(1,-1,0,0) in Sigma^2".into(),
        &Character::from_ints(1, -1, 0, 0),
        2,
        true,
    )?;
    let mut rng = sample::rng(opts.seed);
    let mut bad = Vec::new();
    for _ in 0..20 {
        let (mut cc, mut dd) = (random_rational(&mut rng), random_rational(&mut rng));
        if cc.is_zero() && dd.is_zero() {
            cc = BigRational::one();
        }
        if rng.gen_bool(0.3) {
            dd = BigRational::zero();
            if cc.is_zero() {
                cc = BigRational::one();
            }
        }
        let chi = Character::new(random_rational(&mut rng), random_rational(&mut rng), cc, dd);
        for m in 1..=10 {
            if !sigma_membership(&chi, m)? {
                bad.push(format!("{chi} at m = {m}"));
            }
        }
    }
    c.tally(
        "characters moving the center lie in every Sigma^m",
        20,
        &bad,
    );
    Ok(())
}

fn finiteness(opts: &Options, c: &mut Checks) -> Result<()> {
    let img = |v: [i64; 4]| AbelianImage(v);
    let cases: [(&str, Vec<AbelianImage>, Verdict); 3] = [
        ("commutator subgroup is not F1", vec![], Verdict::NotF1),
        (
            "ker(phi0 - phi1) is F_infinity",
            vec![img([1, 1, 0, 0]), img([0, 0, 1, 0]), img([0, 0, 0, 1])],
            Verdict::FInfinity,
        ),
        (
            "ker(phi0 + phi1) is F1 but not F2",
            vec![img([1, -1, 0, 0]), img([0, 0, 1, 0]), img([0, 0, 0, 1])],
            Verdict::F1NotF2,
        ),
    ];
    for (name, gens, want) in cases {
        let r = subgroup_finiteness(&gens);
        c.push(name, r.verdict == want, r.verdict.as_str());
    }

    // commutators of sampled elements generate a subgroup of the
    // commutator subgroup
    let mut rng = sample::rng(opts.seed);
    let mut gens = Vec::new();
    for _ in 0..5 {
        let g = sample::random_element(&mut rng, 4, 6);
        let h = sample::random_element(&mut rng, 4, 6);
        gens.push(abelian_image(
            &g.invert().multiply(&h.invert()).multiply(&g).multiply(&h),
        )?);
    }
    let r = subgroup_finiteness(&gens);
    c.push(
        "sampled commutators generate a non-F1 subgroup",
        r.verdict == Verdict::NotF1,
        r.verdict.as_str(),
    );

    let x0 = abelian_image(&GroupElement::x(0))?;
    let r = subgroup_finiteness(&[x0, img([0, 0, 1, 0]), img([0, 0, 0, 1])]);
    let want = subgroup_finiteness(&[AbelianImage([x0.0[0], x0.0[1], 0, 0])]).verdict;
    c.push(
        "the center does not change the verdict",
        r.verdict == want,
        format!("{x0:?}: {}", r.verdict),
    );
    Ok(())
}

fn show(w: &Address) -> String {
    if w.is_empty() {
        "root".into()
    } else {
        w.to_string()
    }
}

fn addr(s: &str) -> Address {
    s.parse().expect("valid address literal")
}

const WS: [&str; 4] = ["", "0", "1", "10"];

fn lemma_conj(opts: &Options, c: &mut Checks) -> Result<()> {
    let mut rng = sample::rng(opts.seed);
    let total = opts.samples(50);
    for w in WS.map(addr) {
        for (dir, bit, label) in [
            (ConjugationDirection::One, 1, "11"),
            (ConjugationDirection::Zero, 0, "00"),
        ] {
            let base = w.child(bit);
            let mut bad = Vec::new();
            for _ in 0..total {
                let g = {
                    let (p, q) = (rng.gen_range(0..=3), rng.gen_range(0..=8));
                    sample::random_deferred_element(&mut rng, &base, p, q)
                };
                if !conjugation_check(&g, &w, dir)? {
                    bad.push(g.to_string());
                }
            }
            c.tally(
                format!(
                    "conjugates of Fbr({base}) by x_{} lie in Fbr({w}{label})",
                    show(&w)
                ),
                total,
                &bad,
            );
        }
    }
    let strict = in_deferred_subgroup(&GroupElement::x(0), &addr("0"))?;
    c.push(
        "x_root is not in Fbr(0)",
        !strict,
        format!("membership {strict}"),
    );
    // the conjugate of an element outside Fbr(w1) escapes Fbr(w11)
    let g = GroupElement::x_gen(&Address::root());
    let conj = GroupElement::x_gen(&Address::root()).conjugate(&g);
    let escapes = !in_deferred_subgroup(&conj, &addr("11"))?;
    c.push("x_root conjugated by itself is not in Fbr(11)", escapes, "");
    Ok(())
}

fn hnn_sample<R: Rng>(rng: &mut R, w: &Address) -> GroupElement {
    let core = {
        let (p, q) = (rng.gen_range(0..=3), rng.gen_range(0..=8));
        sample::random_deferred_element(rng, w, p, q)
    };
    let x = GroupElement::x_gen(w);
    x.pow(rng.gen_range(-2..=2))
        .multiply(&core)
        .multiply(&x.pow(rng.gen_range(-2..=2)))
}

fn hnn(opts: &Options, c: &mut Checks) -> Result<()> {
    let mut rng = sample::rng(opts.seed);
    let total = opts.samples(50);
    for w in WS.map(addr) {
        for side in [Side::Left, Side::Right] {
            let mut bad = Vec::new();
            for _ in 0..total {
                let g = hnn_sample(&mut rng, &w);
                let r = hnn_rewrite(&g, &w, side)?;
                if !r.reconstruct(&w).equals(&g) {
                    bad.push(format!("{g}: reconstructs to {}", r.reconstruct(&w)));
                } else if !in_deferred_subgroup(&r.h, &r.base(&w))? {
                    bad.push(format!("{g}: {} not in Fbr({})", r.h, r.base(&w)));
                }
            }
            c.tally(
                format!("{side:?} rewrite over Fbr({}) reconstructs g", show(&w)),
                total,
                &bad,
            );
        }
    }
    Ok(())
}

/// Expansions of a `1ⁿ`-deferred diagram at leaves beyond the vine.
fn deferred_expansion<R: Rng>(rng: &mut R, d: &Diagram, n: usize, count: usize) -> Result<Diagram> {
    let mut d = d.clone();
    for _ in 0..count {
        let k = rng.gen_range(n + 1..=d.strands());
        d = d.expand(k)?;
    }
    Ok(d)
}

fn psi_suite(opts: &Options, c: &mut Checks) -> Result<()> {
    let mut rng = sample::rng(opts.seed);
    let total = opts.samples(50);
    for n in 1..=3 {
        let w = Address::ones(n);
        let mut bad = Vec::new();
        for _ in 0..total {
            let g = {
                let (p, q) = (rng.gen_range(0..=3), rng.gen_range(0..=10));
                sample::random_deferred_element(&mut rng, &w, p, q)
            };
            let rep = deferred_representative(&g, &w)?.expect("sampled inside Fbr(1^n)");
            let first = psi_of_representative(&rep, n)?;
            for _ in 0..10 {
                let count = rng.gen_range(0..=4);
                let e = deferred_expansion(&mut rng, &rep, n, count)?;
                let other = psi_of_representative(&e, n)?;
                if !other.equals(&first)? {
                    bad.push(format!("{g}: {first} vs {other}"));
                }
            }
        }
        c.tally(
            format!("psi on Fbr(1^{n}) is independent of the representative"),
            total * 10,
            &bad,
        );

        let mut bad = Vec::new();
        for _ in 0..total {
            let g = {
                let (p, q) = (rng.gen_range(0..=3), rng.gen_range(0..=8));
                sample::random_deferred_element(&mut rng, &w, p, q)
            };
            let h = {
                let (p, q) = (rng.gen_range(0..=3), rng.gen_range(0..=8));
                sample::random_deferred_element(&mut rng, &w, p, q)
            };
            let lhs = psi(&g.multiply(&h), n)?;
            // the product of diagrams stacks the right factor's braid below
            // the left one's, and words read bottom to top
            let rhs = psi(&h, n)?.compose(&psi(&g, n)?)?;
            if !lhs.equals(&rhs)? {
                bad.push(format!("{g} * {h}: {lhs} vs {rhs}"));
            }
        }
        c.tally(format!("psi on Fbr(1^{n}) is a homomorphism"), total, &bad);
    }
    Ok(())
}

fn center(opts: &Options, c: &mut Checks) -> Result<()> {
    let mut rng = sample::rng(opts.seed);
    let total = opts.samples(20);
    for n in 2..=6 {
        let mut bad = Vec::new();
        for _ in 0..total {
            let chi = Character::new(
                random_rational(&mut rng),
                random_rational(&mut rng),
                random_rational(&mut rng),
                random_rational(&mut rng),
            );
            let t = sample::random_tree(&mut rng, n);
            let g = GroupElement::from_parts(t.clone(), BraidWord::full_twist(n), t)?;
            let got = evaluate(&chi, &g)?;
            let want = &chi.c + &chi.d * BigRational::from_integer((n as i64 - 1).into());
            if got != want || center_character_value(&chi, n)? != want {
                bad.push(format!("{chi}: {got} vs {want}"));
            }
        }
        c.tally(
            format!("chi(full twist on {n} strands) = c + {}d", n - 1),
            total,
            &bad,
        );
    }
    Ok(())
}

/// Reduced Betti numbers of the independence complex of a path on `k`
/// vertices: contractible for `k ≡ 1 (mod 3)`, otherwise a sphere of
/// dimension `⌈k/3⌉ - 1`.
fn path_matching_sphere(edges: usize) -> Option<i64> {
    (edges % 3 != 1).then(|| edges.div_ceil(3) as i64 - 1)
}

fn matching_topology(c: &mut Checks) {
    for e in 1..=9 {
        let k = matching_complex(&Graph::path(e));
        let report = connectivity_report(&k);
        let reduced: Vec<(i64, usize, usize)> = report
            .homology
            .iter()
            .map(|h| (h.dim, h.betti, h.torsion.len()))
            .filter(|&(_, b, t)| b > 0 || t > 0)
            .collect();
        let want: Vec<(i64, usize, usize)> = path_matching_sphere(e)
            .map(|d| (d, 1, 0))
            .into_iter()
            .collect();
        let euler: i64 = report
            .homology
            .iter()
            .map(|h| {
                if h.dim.rem_euclid(2) == 0 {
                    h.betti as i64
                } else {
                    -(h.betti as i64)
                }
            })
            .sum();
        // reduced Euler characteristic = χ - 1
        let euler_ok = euler == k.euler_characteristic() - 1;
        let bound = ((e as i64 - 1) / 4) - 1;
        let conn = report.connectivity_lower_bound();
        let groups: Vec<String> = report
            .homology
            .iter()
            .filter(|h| !h.is_zero())
            .map(|h| h.to_string())
            .collect();
        c.push(
            format!("matchings of the path with {e} edges"),
            reduced == want && euler_ok && conn >= bound,
            format!(
                "{} ; connectivity {conn} >= {bound}",
                if groups.is_empty() {
                    "acyclic".into()
                } else {
                    groups.join(", ")
                }
            ),
        );
    }
    c.push(
        "matchings of K4 are disconnected",
        !matching_complex(&Graph::complete(4)).is_connected(),
        "",
    );
    for n in 5..=7 {
        let k = matching_complex(&Graph::complete(n));
        c.push(
            format!("matchings of K{n} are connected"),
            k.is_connected(),
            format!("{} components", k.component_count()),
        );
    }
}

fn make_matching(c: &mut Checks) -> Result<()> {
    for n in 5..=7 {
        let k = matching_complex(&Graph::complete(n));
        let edges = Graph::complete(n).non_loop_edges();
        let mut pairs = Vec::new();
        for (i, e) in edges.iter().enumerate() {
            for (j, f) in edges.iter().enumerate().skip(i + 1) {
                if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
                    pairs.push((i, j));
                }
            }
        }
        let mut bad = Vec::new();
        for &(i, j) in &pairs {
            let d = k.graph_distance(i, j)?;
            if d != Some(2) {
                bad.push(format!("{} to {}: {d:?}", k.label(i), k.label(j)));
            }
        }
        c.tally(
            format!("edges of K{n} sharing a vertex are at distance 2"),
            pairs.len(),
            &bad,
        );
        let qi = k.qi_constant(&pairs)?;
        c.push(
            format!("detour constant for K{n} is at most 2"),
            qi.is_some_and(|q| q <= 2),
            format!("{qi:?}"),
        );
    }
    Ok(())
}

fn alk_simplex(opts: &Options, c: &mut Checks) -> Result<()> {
    let patch = Patch::around_base(6, opts.braid_bound.min(2), opts.radius.max(4))?;
    let mut bad = Vec::new();
    let mut seen = 0;
    for x in patch.vertices().iter().filter(|x| x.height() <= 5) {
        seen += 1;
        let h = x.height();
        let link = ascending_link(x);
        let simplex = SimplicialComplex::simplex((1..=h).map(|d| format!("up{d}")).collect());
        if link.dim() != h as i64 - 1 || !link.same_as(&simplex) {
            bad.push(format!("{x}: dimension {}", link.dim()));
        }
    }
    c.tally(
        "ascending links are full simplices of dimension h - 1",
        seen,
        &bad,
    );
    Ok(())
}

fn dlk_matching(c: &mut Checks) -> Result<()> {
    for m in 3..=6 {
        let shadow = descending_link_shadow(m, 0)?;
        let projected = shadow.projected();
        let want = matching_complex(&Graph::linear(m));
        let iso = shadow.complex.is_isomorphic(&want) && projected.same_as(&want);
        c.push(
            format!("trivial-braid descending link at height {m} is the matching complex of the path with {} edges", m - 1),
            iso,
            format!("{} vertices, {} facets", shadow.complex.vertex_count(), shadow.complex.facets().len()),
        );
    }
    Ok(())
}

fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    (0..1usize << items.len())
        .map(|mask| {
            (0..items.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| items[i])
                .collect()
        })
        .collect()
}

/// Merges pairwise disjoint, and no split foot inside a merged pair.
fn disjoint_supports(carets: &[usize], feet: &[usize]) -> bool {
    carets.windows(2).all(|w| w[1] >= w[0] + 2)
        && feet
            .iter()
            .all(|&d| carets.iter().all(|&c| d != c && d != c + 1))
}

fn cube_span_suite(opts: &Options, c: &mut Checks) -> Result<()> {
    let mut rng = sample::rng(opts.seed);
    let (mut total, mut spans) = (0, 0);
    let (mut mispredicted, mut unverified, mut malformed) = (Vec::new(), Vec::new(), Vec::new());
    for h in 1..=6 {
        let mut bases = vec![
            CubePatchVertex::from_tree(Tree::vine(&Address::ones(h - 1))),
            CubePatchVertex::from_tree(sample::random_tree(&mut rng, h)),
        ];
        let t = sample::random_tree(&mut rng, h);
        let b = sample::random_pure_braid(&mut rng, h, 6);
        bases.push(CubePatchVertex::new(Diagram::new(
            t,
            b,
            Forest::trivial(h),
        )?)?);
        let braids = [
            BraidWord::identity(h),
            sample::random_pure_braid(&mut rng, h, 4),
        ];
        let carets: Vec<usize> = (1..h).collect();
        let feet: Vec<usize> = (1..=h).collect();
        for x in &bases {
            for q in &braids {
                for cs in subsets(&carets) {
                    let downs: Vec<Merge> = cs
                        .iter()
                        .map(|&k| Merge {
                            braid: q.clone(),
                            caret: k,
                        })
                        .collect();
                    for fs in subsets(&feet) {
                        total += 1;
                        let predicted = disjoint_supports(&cs, &fs);
                        let result = cube_span(x, &downs, &fs);
                        if predicted != result.is_ok() {
                            mispredicted.push(format!(
                                "{x} merges {cs:?} splits {fs:?}: {:?}",
                                result.err()
                            ));
                            continue;
                        }
                        let Ok(cube) = result else { continue };
                        spans += 1;
                        let cf =
                            merge_forest(h, &cs)?.elementary_compose(&split_forest(h, &fs)?)?;
                        if !cube.identity_verified
                            || !vertex_equal(&cube.bottom.apply_split(&cf)?, &cube.top)
                        {
                            unverified.push(format!("{x} merges {cs:?} splits {fs:?}"));
                        }
                        let dim = cs.len() + fs.len();
                        if cube.dim != dim
                            || cube.vertices.len() != 1 << dim
                            || cube.top.height() != cube.bottom.height() + dim
                        {
                            malformed.push(format!("{x} merges {cs:?} splits {fs:?}"));
                        }
                    }
                }
            }
        }
    }
    c.tally(
        "cube_span succeeds exactly on disjoint supports",
        total,
        &mispredicted,
    );
    c.tally(
        "bottom . [C,1,1] = top on every spanned cube",
        spans,
        &unverified,
    );
    c.tally(
        "cube dimensions, corner counts and heights",
        spans,
        &malformed,
    );
    Ok(())
}

fn flag_links(opts: &Options, c: &mut Checks) -> Result<()> {
    let patch = Patch::around_base(opts.height_bound, opts.braid_bound, opts.radius)?;
    let report = patch_check(&patch, &[1, 2])?;
    c.push(
        format!(
            "links are flag (height <= {}, braid bound {}, radius {})",
            opts.height_bound, opts.braid_bound, opts.radius
        ),
        report.flag_failures.is_empty() && report.links_checked > 0,
        format!(
            "{}/{} links over {} vertices",
            report.flag_links, report.links_checked, report.vertices
        ),
    );
    for xr in &report.x_reports {
        let detail = match xr.failures.first() {
            None => format!(
                "{}/{} links, {} vertices in X({})",
                xr.certificates_passed, xr.links_checked, xr.vertices_in_x, xr.n
            ),
            Some(f) => format!(
                "{}/{}; first failure: {f}",
                xr.certificates_passed, xr.links_checked
            ),
        };
        c.push(
            format!("X({}) links are full", xr.n),
            xr.failures.is_empty(),
            detail,
        );
    }
    Ok(())
}
