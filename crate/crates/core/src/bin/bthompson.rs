use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use braided_thompson::braid::BraidWord;
use braided_thompson::charbnsr::{
    abelian_image, evaluate, sigma_membership, sigma_region, subgroup_finiteness, AbelianImage,
    Character,
};
use braided_thompson::complexes::stein::{ascending_link, descending_link_shadow, patch_check};
use braided_thompson::complexes::{
    connectivity_report, cube_span, homology, matching_complex, vertex_link, CubePatchVertex,
    Graph, Merge, Patch, SimplicialComplex,
};
use braided_thompson::diagram::{
    hnn_rewrite, in_deferred_subgroup, psi, Diagram, GroupElement, Side,
};
use braided_thompson::forest::{Address, Forest, Tree};
use braided_thompson::verify::{self, SUITES};
use braided_thompson::Error;

/// Strand diagrams, characters and Stein–Farley complexes for braided
/// Thompson groups.
#[derive(Parser)]
#[command(name = "bthompson", version)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Sample count for randomized suites (each suite has its own default).
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Longest pure braid word used for merges.
    #[arg(long, global = true, default_value_t = 4)]
    braid_bound: usize,
    /// Largest number of feet of a patch vertex.
    #[arg(long, global = true, default_value_t = 4)]
    height_bound: usize,
    /// Write the 1-skeleton of the resulting complex as DOT.
    #[arg(long, global = true)]
    dot: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Braid words: composition, equality, winding numbers.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Group elements as reduced strand diagrams.
    #[command(subcommand)]
    Element(ElementCmd),
    /// Characters, abelian images and the Σ invariants.
    #[command(subcommand)]
    Char(CharCmd),
    /// Matching complexes and simplicial homology.
    #[command(subcommand)]
    Complex(ComplexCmd),
    /// Finite pieces of the Stein–Farley complex.
    #[command(subcommand)]
    Stein(SteinCmd),
    /// Run a named suite of checks, or `all`.
    Verify {
        suite: String,
        /// Patch radius for the Stein–Farley suites.
        #[arg(long, default_value_t = 4)]
        radius: usize,
    },
    /// Decode a JSON file, canonicalize it and print it again.
    Roundtrip { path: PathBuf },
}

#[derive(Clone, Args)]
struct WordArg {
    /// Number of strands.
    #[arg(long)]
    n: usize,
    /// Comma-separated letters (`1,-2,3`), `twist`, `twist2`, or empty.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    word: String,
}

#[derive(Clone, Subcommand)]
enum BraidCmd {
    /// The word followed by `--other`.
    Compose {
        #[command(flatten)]
        w: WordArg,
        #[arg(long, allow_hyphen_values = true)]
        other: String,
    },
    /// Whether two words give the same braid.
    Equal {
        #[command(flatten)]
        w: WordArg,
        #[arg(long, allow_hyphen_values = true)]
        other: String,
    },
    /// Winding number of strands `i` and `j` in a pure braid.
    Winding {
        #[command(flatten)]
        w: WordArg,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// Print the half (or full) twist on `n` strands.
    Twist {
        #[arg(long)]
        n: usize,
        /// The full twist instead of the half twist.
        #[arg(long)]
        full: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

// Elements are inline diagram JSON, `@file`, `id`, `x<n>` or `x:<address>`.
#[derive(Clone, Subcommand)]
enum ElementCmd {
    /// The product `g h`.
    Multiply {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
    /// Reduce any diagram, not only single-tree ones.
    Reduce {
        #[arg(long)]
        g: String,
    },
    /// Whether `g` and `h` are the same element.
    Equal {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
    /// Whether `g` lies in F, in braided F, or only in braided V.
    Classify {
        #[arg(long)]
        g: String,
    },
    /// Membership in the subgroup deferred to `w`.
    Member {
        #[arg(long)]
        g: String,
        #[arg(long, default_value = "ε")]
        w: String,
    },
    /// Write `g` as a power of `x` times an element deferred to `w`.
    Rewrite {
        #[arg(long)]
        g: String,
        #[arg(long, default_value = "ε")]
        w: String,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
    },
    /// The pure braid of a deferred element on its first `n` strands.
    Psi {
        #[arg(long)]
        g: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Args)]
struct CharArg {
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long, allow_hyphen_values = true)]
    b: String,
    #[arg(long, allow_hyphen_values = true)]
    c: String,
    #[arg(long, allow_hyphen_values = true)]
    d: String,
}

#[derive(Clone, Subcommand)]
enum CharCmd {
    /// Abelian image `(a, b, c, d)` of a pure-braided element.
    Image {
        #[arg(long)]
        g: String,
    },
    /// A character evaluated at an element.
    Evaluate {
        #[command(flatten)]
        chi: CharArg,
        #[arg(long)]
        g: String,
    },
    /// Whether a character lies in the m-th Σ invariant.
    Sigma {
        #[command(flatten)]
        chi: CharArg,
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
    /// Generators are rows of four integers separated by `;`.
    Finiteness {
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        gens: String,
    },
}

// Where a complex comes from: a JSON file, or the matching complex of a
// graph.
#[derive(Clone, Args)]
struct ComplexSource {
    /// A complex in JSON.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Take the matching complex of the chosen graph.
    #[arg(long)]
    matching: bool,
    /// The path with this many edges.
    #[arg(long)]
    path_edges: Option<usize>,
    /// The complete graph on this many vertices.
    #[arg(long)]
    complete: Option<usize>,
    /// Edges as `a-b,c-d` on vertices `1..=vertices`.
    #[arg(long)]
    graph_edges: Option<String>,
    #[arg(long)]
    vertices: Option<usize>,
}

#[derive(Clone, Subcommand)]
enum ComplexCmd {
    /// Print the complex (useful with `--json` or `--dot`).
    Matching {
        #[command(flatten)]
        src: ComplexSource,
    },
    /// Reduced integral homology.
    Homology {
        #[command(flatten)]
        src: ComplexSource,
    },
    /// Homological connectivity and a best-effort fundamental group.
    Connectivity {
        #[command(flatten)]
        src: ComplexSource,
    },
    /// Edge-path distance between two vertex labels.
    Distance {
        #[command(flatten)]
        src: ComplexSource,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Whether the complex is flag.
    Flag {
        #[command(flatten)]
        src: ComplexSource,
    },
}

#[derive(Clone, Args)]
struct VertexArg {
    /// Leaf addresses of the vertex's tree, e.g. `0,10,11`.
    #[arg(long, default_value = "ε")]
    tree: String,
    /// Pure braid on the tree's leaves.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    braid: String,
}

#[derive(Clone, Subcommand)]
enum SteinCmd {
    /// The ball of the given radius around the base vertex.
    Patch {
        #[arg(long, default_value_t = 3)]
        radius: usize,
    },
    /// The ascending link at a vertex.
    AscLink {
        #[command(flatten)]
        v: VertexArg,
    },
    /// The braid-bounded descending link at a vertex of height `m`.
    DescLink {
        #[arg(long)]
        m: usize,
    },
    /// The link of a vertex, merges bounded by `--braid-bound`.
    Link {
        #[command(flatten)]
        v: VertexArg,
    },
    /// Build the cube spanned by merges and splits at a vertex.
    CubeSpan {
        #[command(flatten)]
        v: VertexArg,
        /// Carets `c` merging feet `c, c+1`.
        #[arg(long, default_value = "")]
        merges: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        merge_braid: String,
        #[arg(long, default_value = "")]
        splits: String,
    },
    /// Flag and fullness checks on a patch.
    Check {
        #[arg(long, default_value_t = 3)]
        radius: usize,
        #[arg(long, default_value = "1,2")]
        x: String,
    },
}

/// Errors that decide the exit code.
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(format!("malformed JSON: {e}"))
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

struct Out {
    json: bool,
}

impl Out {
    /// Prints `text`, or `value` as JSON under `--json`.
    fn emit<T: Serialize>(&self, text: impl std::fmt::Display, value: &T) -> Outcome {
        if self.json {
            println!("{}", serde_json::to_string(value)?);
        } else {
            println!("{text}");
        }
        Ok(())
    }
}

fn parse_word(n: usize, s: &str) -> Result<BraidWord, Failure> {
    let s = s.trim();
    match s {
        "" => Ok(BraidWord::identity(n)),
        "twist" => Ok(BraidWord::half_twist(n)),
        "twist2" => Ok(BraidWord::full_twist(n)),
        _ => {
            let letters = s
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i32>()
                        .map_err(|_| usage(format!("bad letter {t:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(BraidWord::new(n, letters)?)
        }
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| usage(format!("bad index {t:?}"))))
        .collect()
}

fn parse_tree(s: &str) -> Result<Tree, Failure> {
    let leaves: Vec<&str> = s.split(',').map(str::trim).collect();
    Ok(Tree::parse(&leaves)?)
}

fn read_json(s: &str) -> Result<Value, Failure> {
    let text = match s.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)?,
        None => s.to_string(),
    };
    Ok(serde_json::from_str(&text)?)
}

fn parse_diagram(s: &str) -> Result<Diagram, Failure> {
    Ok(serde_json::from_value(read_json(s)?)?)
}

fn parse_element(s: &str) -> Result<GroupElement, Failure> {
    let s = s.trim();
    if s == "id" {
        return Ok(GroupElement::identity());
    }
    if let Some(w) = s.strip_prefix("x:") {
        return Ok(GroupElement::x_gen(&w.parse()?));
    }
    if let Some(n) = s.strip_prefix('x') {
        if let Ok(n) = n.parse() {
            return Ok(GroupElement::x(n));
        }
    }
    Ok(GroupElement::new(parse_diagram(s)?)?)
}

fn parse_character(c: &CharArg) -> Result<Character, Failure> {
    Ok(Character::parse(&c.a, &c.b, &c.c, &c.d)?)
}

fn parse_vertex(v: &VertexArg) -> Result<CubePatchVertex, Failure> {
    let t = parse_tree(&v.tree)?;
    let n = t.leaf_count();
    let b = parse_word(n, &v.braid)?;
    Ok(CubePatchVertex::new(Diagram::new(
        t,
        b,
        Forest::trivial(n),
    )?)?)
}

fn braid(cmd: BraidCmd, out: &Out) -> Outcome {
    match cmd {
        BraidCmd::Compose { w, other } => {
            let a = parse_word(w.n, &w.word)?;
            let b = parse_word(w.n, &other)?;
            let c = a.compose(&b)?;
            out.emit(&c, &c)
        }
        BraidCmd::Equal { w, other } => {
            let eq = parse_word(w.n, &w.word)?.equals(&parse_word(w.n, &other)?)?;
            out.emit(eq, &eq)
        }
        BraidCmd::Winding { w, i, j } => {
            let b = parse_word(w.n, &w.word)?;
            if i == j {
                return Err(usage("winding numbers need two distinct strands"));
            }
            let k = b.winding_number(i.min(j), i.max(j))?;
            out.emit(k, &k)
        }
        BraidCmd::Twist { n, full } => {
            let b = if full {
                BraidWord::full_twist(n)
            } else {
                BraidWord::half_twist(n)
            };
            out.emit(&b, &b)
        }
    }
}

fn element(cmd: ElementCmd, out: &Out) -> Outcome {
    match cmd {
        ElementCmd::Multiply { g, h } => {
            let p = parse_element(&g)?.multiply(&parse_element(&h)?);
            out.emit(&p, &p)
        }
        ElementCmd::Reduce { g } => {
            let r = parse_diagram(&g)?.reduce();
            out.emit(&r, &r)
        }
        ElementCmd::Equal { g, h } => {
            let eq = parse_element(&g)?.equals(&parse_element(&h)?);
            out.emit(eq, &eq)
        }
        ElementCmd::Classify { g } => {
            let c = parse_element(&g)?.classify();
            let text = match (c.in_f, c.in_fbr) {
                (true, _) => "in F",
                (false, true) => "in braided F, not in F",
                _ => "in braided V only",
            };
            out.emit(text, &c)
        }
        ElementCmd::Member { g, w } => {
            let w: Address = w.parse()?;
            let m = in_deferred_subgroup(&parse_element(&g)?, &w)?;
            out.emit(m, &m)
        }
        ElementCmd::Rewrite { g, w, side } => {
            let w: Address = w.parse()?;
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            let r = hnn_rewrite(&parse_element(&g)?, &w, side)?;
            let (a, b) = match side {
                Side::Left => (r.k_neg as i64, -(r.k_pos as i64)),
                Side::Right => (-(r.k_neg as i64), r.k_pos as i64),
            };
            out.emit(
                format!("x^{a} . {} . x^{b} with h in Fbr({})", r.h, r.base(&w)),
                &r,
            )
        }
        ElementCmd::Psi { g, n } => {
            let b = psi(&parse_element(&g)?, n)?;
            out.emit(&b, &b)
        }
    }
}

fn character(cmd: CharCmd, out: &Out) -> Outcome {
    match cmd {
        CharCmd::Image { g } => {
            let img = abelian_image(&parse_element(&g)?)?;
            let [a, b, c, d] = img.0;
            out.emit(format!("({a}, {b}, {c}, {d})"), &img)
        }
        CharCmd::Evaluate { chi, g } => {
            let v = evaluate(&parse_character(&chi)?, &parse_element(&g)?)?;
            out.emit(&v, &v.to_string())
        }
        CharCmd::Sigma { chi, m } => {
            let chi = parse_character(&chi)?;
            let member = sigma_membership(&chi, m)?;
            let region = sigma_region(&chi)?;
            let verdict = if member { "IN-SIGMA" } else { "NOT-IN-SIGMA" };
            #[derive(Serialize)]
            struct Report<'a> {
                m: u32,
                member: bool,
                region: &'a str,
            }
            out.emit(
                format!("{verdict} (m = {m}; region: {})", region.describe()),
                &Report {
                    m,
                    member,
                    region: region.describe(),
                },
            )
        }
        CharCmd::Finiteness { gens } => {
            let rows = gens
                .split(';')
                .map(str::trim)
                .filter(|r| !r.is_empty())
                .map(|r| {
                    let v = r
                        .split(',')
                        .map(|t| {
                            t.trim()
                                .parse::<i64>()
                                .map_err(|_| usage(format!("bad entry {t:?}")))
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    let v: [i64; 4] = v
                        .try_into()
                        .map_err(|_| usage(format!("row {r:?} needs four entries")))?;
                    Ok(AbelianImage(v))
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            let r = subgroup_finiteness(&rows);
            let text = match &r.witness {
                Some(w) => format!("{} (witness {w})", r.verdict),
                None => r.verdict.to_string(),
            };
            out.emit(text, &r)
        }
    }
}

fn graph_of(src: &ComplexSource) -> Result<Graph, Failure> {
    match (src.path_edges, src.complete, &src.graph_edges) {
        (Some(e), None, None) => Ok(Graph::path(e)),
        (None, Some(n), None) => Ok(Graph::complete(n)),
        (None, None, Some(es)) => {
            let edges = es
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| {
                    let (a, b) = t
                        .split_once('-')
                        .ok_or_else(|| usage(format!("bad edge {t:?}")))?;
                    let p = |s: &str| {
                        s.trim()
                            .parse::<usize>()
                            .map_err(|_| usage(format!("bad edge {t:?}")))
                    };
                    Ok((p(a)?, p(b)?))
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            let n = src
                .vertices
                .unwrap_or_else(|| edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0));
            Ok(Graph::new(n, edges)?)
        }
        _ => Err(usage(
            "choose exactly one of --path-edges, --complete, --graph-edges",
        )),
    }
}

fn complex_of(src: &ComplexSource) -> Result<SimplicialComplex, Failure> {
    if let Some(p) = &src.input {
        if src.matching {
            return Err(usage("--input and --matching are exclusive"));
        }
        return Ok(serde_json::from_str(&fs::read_to_string(p)?)?);
    }
    Ok(matching_complex(&graph_of(src)?))
}

fn write_dot(path: Option<&Path>, k: &SimplicialComplex) -> Outcome {
    if let Some(p) = path {
        fs::write(p, k.to_dot())?;
    }
    Ok(())
}

fn complex(cmd: ComplexCmd, out: &Out, dot: Option<&Path>) -> Outcome {
    match cmd {
        ComplexCmd::Matching { src } => {
            let k = complex_of(&src)?;
            write_dot(dot, &k)?;
            let counts: Vec<String> = k.face_counts().iter().map(|c| c.to_string()).collect();
            out.emit(
                format!("dim {}, face counts [{}]", k.dim(), counts.join(", ")),
                &k,
            )
        }
        ComplexCmd::Homology { src } => {
            let k = complex_of(&src)?;
            write_dot(dot, &k)?;
            let hs = homology(&k);
            let nonzero: Vec<String> = hs
                .iter()
                .filter(|h| !h.is_zero())
                .map(|h| h.to_string())
                .collect();
            let text = if nonzero.is_empty() {
                "all reduced homology vanishes".to_string()
            } else {
                nonzero.join("\n")
            };
            out.emit(text, &hs)
        }
        ComplexCmd::Connectivity { src } => {
            let k = complex_of(&src)?;
            write_dot(dot, &k)?;
            let r = connectivity_report(&k);
            out.emit(&r, &r)
        }
        ComplexCmd::Distance { src, from, to } => {
            let k = complex_of(&src)?;
            let find = |l: &str| {
                k.index_of(l)
                    .ok_or_else(|| usage(format!("no vertex labelled {l:?}")))
            };
            let d = k.graph_distance(find(&from)?, find(&to)?)?;
            let text = d.map_or("unreachable".to_string(), |d| d.to_string());
            out.emit(text, &d)
        }
        ComplexCmd::Flag { src } => {
            let k = complex_of(&src)?;
            let f = k.is_flag();
            out.emit(f, &f)
        }
    }
}

fn stein(cmd: SteinCmd, cli: &Cli, out: &Out) -> Outcome {
    let dot = cli.dot.as_deref();
    match cmd {
        SteinCmd::Patch { radius } => {
            let p = Patch::around_base(cli.height_bound, cli.braid_bound, radius)?;
            if out.json {
                let vs: Vec<String> = p.vertices().iter().map(|v| v.to_string()).collect();
                println!("{}", serde_json::to_string(&vs)?);
            } else {
                println!(
                    "{} vertices ({} interior), height <= {}, braid bound {}, radius {radius}",
                    p.len(),
                    p.interior().len(),
                    cli.height_bound,
                    cli.braid_bound
                );
            }
            Ok(())
        }
        SteinCmd::AscLink { v } => {
            let x = parse_vertex(&v)?;
            let k = ascending_link(&x);
            write_dot(dot, &k)?;
            out.emit(
                format!("{}-simplex on {} splits", k.dim(), k.vertex_count()),
                &k,
            )
        }
        SteinCmd::DescLink { m } => {
            let s = descending_link_shadow(m, cli.braid_bound)?;
            write_dot(dot, &s.complex)?;
            let conn = connectivity_report(&s.complex).homological_connectivity;
            // the connectivity the arc-complex argument gives the full link;
            // shown for comparison only
            let bound = (m as i64 - 2).div_euclid(4) - 1;
            let shown = conn.map_or("acyclic".to_string(), |k| k.to_string());
            out.emit(
                format!(
                    "{} merge classes, dim {}, flag: {}, homological connectivity {} (matching arc bound {}; braid bound {})",
                    s.complex.vertex_count(),
                    s.complex.dim(),
                    s.complex.is_flag(),
                    shown,
                    bound,
                    cli.braid_bound
                ),
                &serde_json::json!({
                    "shadow": s,
                    "braid_bound": cli.braid_bound,
                    "homological_connectivity": conn,
                    "matching_arc_bound": bound,
                }),
            )
        }
        SteinCmd::Link { v } => {
            let x = parse_vertex(&v)?;
            let shadow = match x.height() {
                h if h >= 2 => Some(descending_link_shadow(h, cli.braid_bound)?),
                _ => None,
            };
            let link = vertex_link(&x, shadow.as_ref())?;
            write_dot(dot, &link.complex)?;
            out.emit(
                format!(
                    "{} directions, dim {}, flag: {}",
                    link.complex.vertex_count(),
                    link.complex.dim(),
                    link.complex.is_flag()
                ),
                &link.complex,
            )
        }
        SteinCmd::CubeSpan {
            v,
            merges,
            merge_braid,
            splits,
        } => {
            let x = parse_vertex(&v)?;
            let q = parse_word(x.height(), &merge_braid)?;
            let downs: Vec<Merge> = parse_list(&merges)?
                .into_iter()
                .map(|c| Merge {
                    braid: q.clone(),
                    caret: c,
                })
                .collect();
            let cube = cube_span(&x, &downs, &parse_list(&splits)?)?;
            out.emit(
                format!(
                    "{}-cube from {} to {}, identity verified: {}",
                    cube.dim, cube.bottom, cube.top, cube.identity_verified
                ),
                &cube,
            )?;
            if cube.identity_verified {
                Ok(())
            } else {
                Err(Failure::Verification("corner identity failed".into()))
            }
        }
        SteinCmd::Check { radius, x } => {
            let p = Patch::around_base(cli.height_bound, cli.braid_bound, radius)?;
            let r = patch_check(&p, &parse_list(&x)?)?;
            if out.json {
                println!("{}", serde_json::to_string(&r)?);
            } else {
                println!(
                    "{} vertices; flag links {}/{} (height <= {}, braid bound {})",
                    r.vertices, r.flag_links, r.links_checked, r.height_bound, r.braid_bound
                );
                for xr in &r.x_reports {
                    println!(
                        "X({}): {} vertices, full links {}/{}",
                        xr.n, xr.vertices_in_x, xr.certificates_passed, xr.links_checked
                    );
                }
                for f in r
                    .flag_failures
                    .iter()
                    .chain(r.x_reports.iter().flat_map(|x| &x.failures))
                {
                    println!("FAIL {f}");
                }
            }
            if r.passed() {
                Ok(())
            } else {
                Err(Failure::Verification("patch check failed".into()))
            }
        }
    }
}

fn run_verify(suite: &str, radius: usize, cli: &Cli, out: &Out) -> Outcome {
    let names: Vec<&str> = match suite {
        "all" => SUITES.to_vec(),
        s if SUITES.contains(&s) => vec![s],
        s => {
            return Err(usage(format!(
                "unknown suite {s:?}; known: all, {}",
                SUITES.join(", ")
            )))
        }
    };
    let opts = verify::Options {
        seed: cli.seed,
        samples: cli.samples,
        braid_bound: cli.braid_bound,
        height_bound: cli.height_bound,
        radius,
    };
    let mut ok = true;
    for name in names {
        let r = verify::run_suite(name, &opts)?;
        ok &= r.passed();
        if out.json {
            println!("{}", serde_json::to_string(&r)?);
        } else {
            for c in &r.checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                println!("{tag} {name}: {} [{}]", c.name, c.detail);
            }
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification(format!("suite {suite} failed")))
    }
}

/// Decodes by shape, canonicalizes, and re-encodes.
fn roundtrip(path: &Path) -> Outcome {
    let v: Value = serde_json::from_str(&fs::read_to_string(path)?)?;
    let out = match &v {
        Value::Object(m) if m.contains_key("strands") => {
            serde_json::to_string(&serde_json::from_value::<BraidWord>(v)?)?
        }
        Value::Object(m) if m.contains_key("neg") => {
            serde_json::to_string(&serde_json::from_value::<Diagram>(v)?.reduce())?
        }
        Value::Object(m) if m.contains_key("maximal_faces") => {
            serde_json::to_string(&serde_json::from_value::<SimplicialComplex>(v)?)?
        }
        Value::Object(m) if m.contains_key("a") => {
            serde_json::to_string(&serde_json::from_value::<Character>(v)?)?
        }
        Value::Array(items) if items.iter().all(Value::is_string) => {
            serde_json::to_string(&serde_json::from_value::<Tree>(v)?)?
        }
        Value::Array(_) => serde_json::to_string(&serde_json::from_value::<Forest>(v)?)?,
        _ => return Err(usage("unrecognised JSON document")),
    };
    println!("{out}");
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    let out = Out { json: cli.json };
    match &cli.command {
        Command::Braid(c) => braid(c.clone(), &out),
        Command::Element(c) => element(c.clone(), &out),
        Command::Char(c) => character(c.clone(), &out),
        Command::Complex(c) => complex(c.clone(), &out, cli.dot.as_deref()),
        Command::Stein(c) => stein(c.clone(), &cli, &out),
        Command::Verify { suite, radius } => run_verify(suite, *radius, &cli, &out),
        Command::Roundtrip { path } => roundtrip(path),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
