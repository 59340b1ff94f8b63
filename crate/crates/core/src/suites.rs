//! Named verification suites: tables of claims, each computed from the
//! library and compared with an expected value.
//!
//! One registry backs both `eh verify` and the acceptance tests. Reports are
//! deterministic; wall time is measured but only printed on request.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::colex::{binom, ColexSubsets};
use crate::constructions::{
    affine_plane, blowup, clique_plus_isolated, g_value, hprime, mono_clique_numbers, ngon,
    parity_triples, random_coloring, PartSizes,
};
use crate::enumerate::{
    brute_h_value, brute_qfree_count, enumerate_qfree, ff_classify, find_blowup_certificate,
    h_value, FfClass,
};
use crate::error::{Error, Result};
use crate::extractors::{
    extract_42_43, extract_coclique_41_44, extract_coclique_42_44, extract_graph_homogeneous,
    ExtractionTrace,
};
use crate::homsolve::{homogeneous_number, max_coclique};
use crate::hypercore::{complement, induced_count, link_graph, UniformHypergraph, VertexSet};
use crate::profiles::{is_q_free, profile, q_complement, ForbiddenFamily};

/// Every suite name accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "thm-size3",
    "ngon-alpha",
    "hprime",
    "affine-profile",
    "parity-bound",
    "ff-cover",
    "oracle-xcheck",
    "gvalues",
    "extractors",
];

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SuiteParams {
    /// Upper end of the vertex range, for suites that sweep `n`.
    pub nmax: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimOutcome {
    pub id: String,
    pub params: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: String,
    pub claims: Vec<ClaimOutcome>,
    pub wall_time: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }

    pub fn pass_count(&self) -> usize {
        self.claims.iter().filter(|c| c.pass).count()
    }

    pub fn render_human(&self, timing: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {}", self.name);
        for c in &self.claims {
            let _ = writeln!(
                out,
                "  {} {}  [{}]  expected: {}  observed: {}",
                if c.pass { "PASS" } else { "FAIL" },
                c.id,
                c.params,
                c.expected,
                c.observed
            );
        }
        let _ = writeln!(
            out,
            "{}: {}/{} claims passed",
            if self.passed() { "PASS" } else { "FAIL" },
            self.pass_count(),
            self.claims.len()
        );
        if timing {
            let _ = writeln!(out, "wall time: {:.3}s", self.wall_time.as_secs_f64());
        }
        out
    }

    pub fn render_kv(&self, timing: bool) -> String {
        let mut out = String::new();
        for c in &self.claims {
            let _ = writeln!(
                out,
                "suite={} claim={} params={:?} expected={:?} observed={:?} pass={}",
                self.name, c.id, c.params, c.expected, c.observed, c.pass
            );
        }
        let _ = write!(
            out,
            "suite={} claims={} passed={} pass={}",
            self.name,
            self.claims.len(),
            self.pass_count(),
            self.passed()
        );
        if timing {
            let _ = write!(out, " wall_time_ms={}", self.wall_time.as_millis());
        }
        out.push('\n');
        out
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_human(false))
    }
}

#[derive(Default)]
struct Claims(Vec<ClaimOutcome>);

impl Claims {
    fn push(
        &mut self,
        id: impl Into<String>,
        params: impl Into<String>,
        expected: impl fmt::Display,
        observed: impl fmt::Display,
        pass: bool,
    ) {
        self.0.push(ClaimOutcome {
            id: id.into(),
            params: params.into(),
            expected: expected.to_string(),
            observed: observed.to_string(),
            pass,
        });
    }

    /// Passes iff the two renderings agree.
    fn equal(
        &mut self,
        id: impl Into<String>,
        params: impl Into<String>,
        expected: impl fmt::Display,
        observed: impl fmt::Display,
    ) {
        let (e, o) = (expected.to_string(), observed.to_string());
        let pass = e == o;
        self.push(id, params, e, o, pass);
    }

    fn error(
        &mut self,
        id: impl Into<String>,
        params: impl Into<String>,
        expected: impl fmt::Display,
        e: &Error,
    ) {
        self.push(id, params, expected, format!("error: {e}"), false);
    }
}

/// Runs the named suite.
pub fn run_suite(name: &str, params: &SuiteParams) -> Result<SuiteReport> {
    let start = Instant::now();
    let claims = match name {
        "thm-size3" => thm_size3(params.nmax.unwrap_or(10)),
        "ngon-alpha" => ngon_alpha(params.nmax.unwrap_or(24)),
        "hprime" => hprime_block(),
        "affine-profile" => affine_profile(),
        "parity-bound" => parity_bound(),
        "ff-cover" => ff_cover(params.nmax.unwrap_or(8)),
        "oracle-xcheck" => oracle_xcheck(params.nmax.unwrap_or(5).min(5)),
        "gvalues" => gvalues(),
        "extractors" => extractor_validity(params.nmax.unwrap_or(7)),
        _ => {
            return Err(Error::Unsupported(format!(
                "unknown suite `{name}`; known suites: {}",
                SUITES.join(", ")
            )))
        }
    };
    Ok(SuiteReport {
        name: name.to_string(),
        claims: claims.0,
        wall_time: start.elapsed(),
    })
}

fn fam(text: &str) -> ForbiddenFamily {
    ForbiddenFamily::parse(text, 3).expect("suite families are well formed")
}

fn set_string(s: &BTreeSet<usize>) -> String {
    let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn thm_size3(nmax: usize) -> Claims {
    let mut c = Claims::default();
    // (family, expected value, expected class count, from which n the count applies)
    type Row = (&'static str, fn(usize) -> usize, Option<usize>, usize);
    let rows: [Row; 3] = [
        ("4:0,2,3", |n| n - 1, Some(2), 5),
        ("4:1,2,3", |n| n, Some(2), 4),
        (
            "4:0,1,3",
            |n| if n % 6 == 0 { n / 2 } else { (n + 2) / 2 },
            None,
            0,
        ),
    ];
    for (q, expected, classes, classes_from) in rows {
        let family = fam(q);
        let results: Vec<(usize, Result<_>)> = (4..=nmax)
            .into_par_iter()
            .map(|n| (n, h_value(n, &family)))
            .collect();
        for (n, res) in results {
            let id = format!("h/{q}/n={n:02}");
            let params = format!("n={n} q={q}");
            match res {
                Ok(rep) => {
                    c.equal(
                        format!("{id}/value"),
                        params.clone(),
                        expected(n),
                        rep.value,
                    );
                    if let Some(k) = classes.filter(|_| n >= classes_from) {
                        c.equal(format!("{id}/classes"), params, k, rep.count);
                    }
                }
                Err(e) => c.error(id, params, expected(n), &e),
            }
        }
    }
    c
}

fn ngon_alpha(nmax: usize) -> Claims {
    let mut c = Claims::default();
    let rows: Vec<(usize, Result<usize>)> = (5..=nmax)
        .into_par_iter()
        .map(|n| (n, ngon(n).and_then(|g| max_coclique(&g)).map(|r| r.size)))
        .collect();
    for (n, res) in rows {
        let id = format!("alpha/n={n:02}");
        let expected = (n + 2) / 2;
        match res {
            Ok(a) => c.equal(id, format!("n={n}"), expected, a),
            Err(e) => c.error(id, format!("n={n}"), expected, &e),
        }
    }
    c
}

fn hprime_block() -> Claims {
    let mut c = Claims::default();
    let h = hprime();
    c.equal("edges", "", 10, h.edge_count());
    match profile(&h, 4) {
        Ok(p) => c.equal("profile", "m=4", "{2}", set_string(&p)),
        Err(e) => c.error("profile", "m=4", "{2}", &e),
    }
    match max_coclique(&h) {
        Ok(r) => c.equal("alpha", "", 3, r.size),
        Err(e) => c.error("alpha", "", 3, &e),
    }
    for k in 1..=4 {
        let id = format!("blowup-alpha/k={k}");
        let params = format!("sizes={k}x6");
        match blowup(&h, &PartSizes(vec![k; 6])).and_then(|b| max_coclique(&b)) {
            Ok(r) => c.equal(id, params, 3 * k, r.size),
            Err(e) => c.error(id, params, 3 * k, &e),
        }
    }
    c
}

fn affine_profile() -> Claims {
    let mut c = Claims::default();
    let allowed = BTreeSet::from([0, 1, 4]);
    type Row = (usize, Result<(BTreeSet<usize>, bool, bool, usize)>);
    let rows: Vec<Row> = [3usize, 5, 7]
        .into_par_iter()
        .map(|q| {
            let run = || -> Result<_> {
                let a = affine_plane(q, None)?;
                let p = profile(&a, 4)?;
                let free2 = is_q_free(&a, &fam("4:2"))?.is_free();
                let free3 = is_q_free(&a, &fam("4:3"))?.is_free();
                let h = homogeneous_number(&a)?.size;
                Ok((p, free2, free3, h))
            };
            (q, run())
        })
        .collect();
    for (q, res) in rows {
        let params = format!("q={q}");
        match res {
            Ok((p, free2, free3, h)) => {
                c.push(
                    format!("q={q}/profile"),
                    params.clone(),
                    "subset of {0,1,4}",
                    set_string(&p),
                    p.is_subset(&allowed),
                );
                c.equal(format!("q={q}/free-4:2"), params.clone(), true, free2);
                c.equal(format!("q={q}/free-4:3"), params.clone(), true, free3);
                c.push(
                    format!("q={q}/h-bound"),
                    params.clone(),
                    format!("<= {}", q + 2),
                    h,
                    h <= q + 2,
                );
                if q == 3 {
                    c.equal("q=3/h", params, 4, h);
                }
            }
            Err(e) => c.error(format!("q={q}"), params, "all checks", &e),
        }
    }
    c
}

/// Seeds used by the parity suite: `(n, seeds)`.
pub const PARITY_PANEL: [(usize, std::ops::Range<u64>); 2] = [(15, 0..50), (20, 0..10)];

fn parity_bound() -> Claims {
    let mut c = Claims::default();
    let allowed = BTreeSet::from([0, 2, 4]);
    let jobs: Vec<(usize, u64)> = PARITY_PANEL
        .iter()
        .flat_map(|(n, seeds)| seeds.clone().map(move |s| (*n, s)))
        .collect();
    let rows: Vec<_> = jobs
        .into_par_iter()
        .map(|(n, seed)| {
            let run = || -> Result<_> {
                let chi = random_coloring(n, seed);
                let p = parity_triples(&chi);
                let prof = profile(&p, 4)?;
                let h = homogeneous_number(&p)?.size;
                let (red, blue) = mono_clique_numbers(&chi)?;
                Ok((prof, h, red.max(blue)))
            };
            (n, seed, run())
        })
        .collect();
    for (n, seed, res) in rows {
        let id = format!("n={n}/seed={seed:02}");
        let params = format!("n={n} seed={seed}");
        match res {
            Ok((prof, h, k)) => {
                let pass = prof.is_subset(&allowed) && h <= k * k;
                c.push(
                    id,
                    params,
                    format!("profile within {{0,2,4}}, h <= {}", k * k),
                    format!("profile {}, h = {h}, mono clique {k}", set_string(&prof)),
                    pass,
                );
            }
            Err(e) => c.error(id, params, "bound", &e),
        }
    }
    c
}

fn ff_cover(nmax: usize) -> Claims {
    let mut c = Claims::default();
    let q = fam("4:1,3,4");
    for n in 4..=nmax {
        let id = format!("n={n:02}");
        let params = format!("n={n} q={q}");
        let classes = match enumerate_qfree(n, &q) {
            Ok(cs) => cs,
            Err(e) => {
                c.error(id, params, "0 neither", &e);
                continue;
            }
        };
        let rows: Vec<Result<(FfClass, bool)>> = classes
            .par_iter()
            .map(|cl| {
                let kind = ff_classify(&cl.rep)?;
                let needs_empty = matches!(kind, FfClass::Blowup(_))
                    && find_blowup_certificate(&cl.rep, true)?.is_none();
                Ok((kind, needs_empty))
            })
            .collect();
        let (mut blow, mut empty, mut gon, mut neither, mut errors) = (0, 0, 0, 0, 0);
        for r in rows {
            match r {
                Ok((FfClass::Blowup(_), e)) => {
                    blow += 1;
                    empty += e as usize;
                }
                Ok((FfClass::NgonIsomorphic, _)) => gon += 1,
                Ok((FfClass::Neither, _)) => neither += 1,
                Err(_) => errors += 1,
            }
        }
        c.push(
            id,
            params,
            "0 neither",
            format!(
                "{} classes: {blow} blow-ups ({empty} need empty parts), {gon} n-gon, {neither} neither{}",
                classes.len(),
                if errors > 0 { format!(", {errors} errors") } else { String::new() }
            ),
            neither == 0 && errors == 0,
        );
    }
    c
}

/// Families over `m = 4` checked against the brute-force oracle.
pub const ORACLE_PANEL: &[&str] = &[
    "4:0", "4:1", "4:2", "4:3", "4:4", "4:0,1", "4:0,2", "4:0,3", "4:0,4", "4:1,2", "4:1,3",
    "4:1,4", "4:2,3", "4:2,4", "4:3,4", "4:0,2,3", "4:1,2,4", "4:1,2,3", "4:0,1,3", "4:1,3,4",
];

fn render_values(v: &[Option<usize>]) -> String {
    let items: Vec<String> = v
        .iter()
        .map(|x| x.map_or_else(|| "none".to_string(), |x| x.to_string()))
        .collect();
    items.join(",")
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn oracle_xcheck(nmax: usize) -> Claims {
    let mut c = Claims::default();
    let ns: Vec<usize> = (0..=nmax).collect();
    type Row = Result<(Vec<Option<usize>>, Vec<Option<usize>>, Vec<u64>, Vec<u64>)>;
    let rows: Vec<(&str, Row)> = ORACLE_PANEL
        .par_iter()
        .map(|&qs| {
            let q = fam(qs);
            let run = || -> Row {
                let (mut fast, mut slow, mut orbits, mut labeled) =
                    (vec![], vec![], vec![], vec![]);
                for &n in &ns {
                    fast.push(match h_value(n, &q) {
                        Ok(r) => Some(r.value),
                        Err(Error::NoWitness { .. }) => None,
                        Err(e) => return Err(e),
                    });
                    slow.push(match brute_h_value(n, &q) {
                        Ok(v) => Some(v),
                        Err(Error::NoWitness { .. }) => None,
                        Err(e) => return Err(e),
                    });
                    let classes = enumerate_qfree(n, &q)?;
                    orbits.push(classes.iter().map(|cl| factorial(n) / cl.aut_count).sum());
                    labeled.push(brute_qfree_count(n, &q)?);
                }
                Ok((fast, slow, orbits, labeled))
            };
            (qs, run())
        })
        .collect();
    let params = format!("n=0..{nmax}");
    let mut values: BTreeMap<&str, Vec<Option<usize>>> = BTreeMap::new();
    for (qs, row) in rows {
        match row {
            Ok((fast, slow, orbits, labeled)) => {
                c.equal(
                    format!("oracle/{qs}"),
                    params.clone(),
                    render_values(&slow),
                    render_values(&fast),
                );
                let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
                c.equal(
                    format!("orbits/{qs}"),
                    params.clone(),
                    join(&labeled),
                    join(&orbits),
                );
                values.insert(qs, fast);
            }
            Err(e) => c.error(format!("oracle/{qs}"), params.clone(), "match", &e),
        }
    }
    // h(n, Q) <= h(n, Q') whenever Q is a subfamily of Q' and both admit n-vertex graphs
    for (&a, va) in &values {
        for (&b, vb) in &values {
            if a == b || !fam(a).is_subset(&fam(b)) {
                continue;
            }
            let pass = va.iter().zip(vb).all(|(x, y)| match (x, y) {
                (Some(x), Some(y)) => x <= y,
                _ => true,
            });
            c.push(
                format!("monotone/{a}<{b}"),
                params.clone(),
                "pointwise <=",
                format!("{} vs {}", render_values(va), render_values(vb)),
                pass,
            );
        }
    }
    for (&a, va) in &values {
        let comp = q_complement(&fam(a)).to_string();
        match values.get(comp.as_str()) {
            Some(vb) => c.equal(
                format!("duality/{a}"),
                format!("{params} complement={comp}"),
                render_values(va),
                render_values(vb),
            ),
            None => c.push(
                format!("duality/{a}"),
                params.clone(),
                "complement in panel",
                comp,
                false,
            ),
        }
    }
    c
}

/// Edge count of the recursive partition construction, built vertex by vertex.
fn g_direct(r: usize, m: usize) -> u64 {
    fn split(vs: &[usize], r: usize, paths: &mut [Vec<usize>]) {
        if vs.len() < r {
            return;
        }
        let (q, rem) = (vs.len() / r, vs.len() % r);
        let mut start = 0;
        for i in 0..r {
            let len = if i < rem { q + 1 } else { q };
            let part = &vs[start..start + len];
            for &v in part {
                paths[v].push(i);
            }
            split(part, r, paths);
            start += len;
        }
    }
    let vs: Vec<usize> = (0..m).collect();
    let mut paths = vec![Vec::new(); m];
    split(&vs, r, &mut paths);
    ColexSubsets::new(m, r)
        .filter(|e| {
            let p: Vec<&Vec<usize>> = e.iter().map(|&v| &paths[v]).collect();
            let mut level = 0;
            while p.iter().all(|x| x.len() > level) && p.iter().all(|x| x[level] == p[0][level]) {
                level += 1;
            }
            let at: Option<BTreeSet<usize>> = p.iter().map(|x| x.get(level).copied()).collect();
            at.is_some_and(|s| s.len() == r)
        })
        .count() as u64
}

fn gvalues() -> Claims {
    let mut c = Claims::default();
    for (m, expected) in (3..=7).zip([1u64, 2, 4, 8, 13]) {
        c.equal(
            format!("g3/m={m}"),
            format!("r=3 m={m}"),
            expected,
            g_value(3, m),
        );
    }
    for r in 3..=4 {
        for m in r..=12 {
            c.equal(
                format!("direct/r={r}/m={m:02}"),
                format!("r={r} m={m}"),
                g_direct(r, m),
                g_value(r, m),
            );
        }
    }
    let eh = binom(4, 3) as i64 - g_value(3, 4) as i64 + 1;
    c.equal("eh3-4", "C(4,3) - g(3,4) + 1", 3, eh);
    c
}

// ---------------------------------------------------------------------------
// extractor corpus

type Extractor = fn(&UniformHypergraph) -> Result<ExtractionTrace>;

fn construction_corpus() -> Vec<(String, UniformHypergraph)> {
    let mut out: Vec<(String, UniformHypergraph)> = Vec::new();
    let mut add = |name: String, h: Result<UniformHypergraph>| {
        if let Ok(h) = h {
            out.push((format!("co-{name}"), complement(&h)));
            out.push((name, h));
        }
    };
    add("affine-3".into(), affine_plane(3, None));
    add("affine-5".into(), affine_plane(5, None));
    add("affine-7-prefix-20".into(), affine_plane(7, Some(20)));
    for n in 4..=13 {
        add(format!("ngon-{n}"), ngon(n));
    }
    add("hprime".into(), Ok(hprime()));
    for sizes in [
        vec![1; 6],
        vec![2; 6],
        vec![2, 1, 1, 1, 1, 0],
        vec![3, 0, 2, 1, 0, 2],
    ] {
        let name = format!("blowup-{sizes:?}");
        add(name, blowup(&hprime(), &PartSizes(sizes)));
    }
    for n in 4..=9 {
        add(format!("clique-plus-isolated-{n}"), clique_plus_isolated(n));
    }
    for seed in 0..4 {
        add(
            format!("parity-10-{seed}"),
            Ok(parity_triples(&random_coloring(10, seed))),
        );
    }
    add("complete-7".into(), UniformHypergraph::complete(3, 7));
    add("empty-8".into(), UniformHypergraph::empty(3, 8));
    out
}

fn validate_trace(h: &UniformHypergraph, t: &ExtractionTrace) -> Result<bool> {
    t.verify(h)?;
    Ok(t.witness.len() <= homogeneous_number(h)?.size)
}

/// A forbidden-set report must name `m` vertices spanning a forbidden size.
fn valid_violation(h: &UniformHypergraph, q: &ForbiddenFamily, err: &Error) -> bool {
    match err {
        Error::ForbiddenSubgraph { witness, count } => {
            witness.len() == q.m()
                && q.contains(*count)
                && induced_count(h, witness).is_ok_and(|c| c == *count)
        }
        _ => false,
    }
}

/// The first few single-edge flips of `h` that break `q`-freeness.
fn corruptions(h: &UniformHypergraph, q: &ForbiddenFamily, limit: usize) -> Vec<UniformHypergraph> {
    let mut out = Vec::new();
    for e in ColexSubsets::new(h.n(), h.r()) {
        if out.len() == limit {
            break;
        }
        let mut g = h.clone();
        let res = if g.contains_edge(&e) {
            g.remove_edge(&e)
        } else {
            g.insert_edge(&e)
        };
        if res.is_ok() && is_q_free(&g, q).is_ok_and(|r| !r.is_free()) {
            out.push(g);
        }
    }
    out
}

fn extractor_validity(nmax: usize) -> Claims {
    let mut c = Claims::default();
    let corpus = construction_corpus();
    let cases: [(&str, &str, Extractor); 3] = [
        ("41-44", "4:1,4", extract_coclique_41_44),
        ("42-43", "4:2,3", extract_42_43),
        ("42-44", "4:2,4", extract_coclique_42_44),
    ];
    for (name, qs, run) in cases {
        let q = fam(qs);
        let mut inputs: Vec<UniformHypergraph> = corpus
            .iter()
            .filter(|(_, h)| is_q_free(h, &q).is_ok_and(|r| r.is_free()))
            .map(|(_, h)| h.clone())
            .collect();
        let from_constructions = inputs.len();
        for n in 4..=nmax {
            if let Ok(cls) = enumerate_qfree(n, &q) {
                inputs.extend(cls.into_iter().map(|cl| cl.rep));
            }
        }
        let ok = inputs
            .par_iter()
            .filter(|h| run(h).and_then(|t| validate_trace(h, &t)).unwrap_or(false))
            .count();
        c.push(
            format!("{name}/valid"),
            format!("q={qs} constructions={from_constructions} enumerated n<={nmax}"),
            format!("{} valid", inputs.len()),
            format!("{ok} valid"),
            ok == inputs.len() && from_constructions > 0,
        );
        let bad: Vec<UniformHypergraph> = corpus
            .iter()
            .filter(|(_, h)| h.n() <= 13)
            .flat_map(|(_, h)| corruptions(h, &q, 3))
            .collect();
        let raised = bad
            .par_iter()
            .filter(|h| matches!(run(h), Err(ref e) if valid_violation(h, &q, e)))
            .count();
        c.push(
            format!("{name}/corrupted"),
            format!("q={qs}"),
            format!("{} raised", bad.len()),
            format!("{raised} raised"),
            raised == bad.len() && !bad.is_empty(),
        );
    }

    // graphs: every labeled 5-vertex graph plus the links of the corpus
    let mut graphs: Vec<UniformHypergraph> = (0u32..1 << 10)
        .map(|mask| {
            let pairs = ColexSubsets::new(5, 2)
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, p)| p);
            UniformHypergraph::from_edges(2, 5, pairs).expect("valid pairs")
        })
        .collect();
    for (_, h) in &corpus {
        if h.r() == 3 && h.n() > 0 {
            graphs.extend(link_graph(h, 0));
        }
    }
    for m in 3..=4 {
        for f in 0..=binom(m, 2) as usize {
            let free = |g: &UniformHypergraph| {
                g.n() < m
                    || ColexSubsets::new(g.n(), m).all(|s| {
                        induced_count(g, &VertexSet::new(s).expect("sorted")).is_ok_and(|k| k != f)
                    })
            };
            let (good, bad): (Vec<&UniformHypergraph>, Vec<&UniformHypergraph>) =
                graphs.iter().partition(|g| free(g));
            let ok = good
                .par_iter()
                .filter(|g| {
                    extract_graph_homogeneous(g, m, f)
                        .and_then(|t| validate_trace(g, &t))
                        .unwrap_or(false)
                })
                .count();
            let raised = bad
                .par_iter()
                .filter(|g| match extract_graph_homogeneous(g, m, f) {
                    Err(Error::ForbiddenSubgraph { witness, count }) => {
                        count == f
                            && witness.len() == m
                            && induced_count(g, &witness).is_ok_and(|k| k == f)
                    }
                    _ => false,
                })
                .count();
            c.push(
                format!("graph/m={m}/f={f}"),
                format!("m={m} f={f}"),
                format!("{} valid, {} raised", good.len(), bad.len()),
                format!("{ok} valid, {raised} raised"),
                ok == good.len() && raised == bad.len(),
            );
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(matches!(
            run_suite("nope", &SuiteParams::default()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn gvalues_pass() {
        let r = run_suite("gvalues", &SuiteParams::default()).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r
            .claims
            .iter()
            .any(|c| c.id == "g3/m=7" && c.observed == "13"));
    }

    #[test]
    fn direct_partition_count() {
        assert_eq!(g_direct(3, 7), 13);
        assert_eq!(g_direct(3, 4), 2);
        assert_eq!(g_direct(3, 2), 0);
    }

    #[test]
    fn reports_are_deterministic() {
        let p = SuiteParams { nmax: Some(12) };
        let a = run_suite("ngon-alpha", &p).unwrap();
        let b = run_suite("ngon-alpha", &p).unwrap();
        assert_eq!(a.render_kv(false), b.render_kv(false));
        assert_eq!(a.render_human(false), b.render_human(false));
        assert!(a.passed());
        assert!(a.render_kv(false).ends_with("pass=true\n"));
    }
}
