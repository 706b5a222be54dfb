//! Acceptance suite: one PASS/FAIL line per criterion, each checked
//! against an independent brute-force oracle.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use simplex_fill::acyclic::random::{random_acyclic_configuration, random_complex, random_directed_configuration};
use simplex_fill::acyclic::{fill_configuration, is_chordal, Complex, FillerProvider};
use simplex_fill::delta::enumerate_maps;
use simplex_fill::instances::{
    dist_fill, join, metric_fill, metric_pullback, missing_face_support, opposite_values_horn, table_face,
    Distribution, Pseudometric, Table, Tables,
};
use simplex_fill::squares::{
    catalog, compute_pushout, factor_balanced, factor_into_basic, has_pushout, is_balanced, is_pushout_square,
    CatalogKind, Family, Span,
};
use simplex_fill::sset::{
    count_fillers, forced_discrete, is_inner_span_complete, is_kan, is_quasicategory, is_segal_nerve, is_span_complete,
    FinCategory, PullbackFailure, SetSquare, TruncatedSSet, Witness,
};
use simplex_fill::vee::{vee_product, VeeDecomposition};
use simplex_fill::{MonotoneMap, Square};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Name, time budget and check.
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("pushout oracle equivalence", Duration::from_secs(120), pushout_oracle),
        ("factorization soundness", Duration::from_secs(60), factorization),
        ("coface pushouts are set pushouts with the spine condition", Duration::from_secs(300), face_pushouts),
        ("vee laws", Duration::from_secs(300), vee_laws),
        ("acyclicity equivalences", Duration::from_secs(60), acyclicity),
        ("acyclic fillers for tables", Duration::from_secs(300), database_fillers),
        ("classifier fixtures", Duration::from_secs(300), classifier_fixtures),
        ("counterexamples", Duration::from_secs(300), counterexamples),
        ("forced discreteness", Duration::from_secs(300), forced_discreteness),
        ("instance validity", Duration::from_secs(300), instance_validity),
    ];
    panic::set_hook(Box::new(|_| {}));
    let suite = Instant::now();
    let mut failed = 0;
    for (idx, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(_) if took > budget => Err(format!("took {took:.1?}, over the {budget:?} budget")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{took:.1?}]", idx + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{took:.1?}]", idx + 1);
            }
        }
    }
    let total = suite.elapsed();
    println!("{} of 10 criteria passed in {total:.1?}", 10 - failed);
    if failed > 0 || total > Duration::from_secs(300) {
        std::process::exit(1);
    }
}

// ---------------------------------------------------------------------------
// 1. Pushouts against the universal property.

type Cocone = (Vec<usize>, Vec<usize>, usize);

/// Every jointly surjective commuting cospan out of the span. Any cocone
/// factors uniquely through the one onto its joint image, so these are the
/// only cocones the oracle needs. Values are handed out in increasing order,
/// each to a run of the next positions of `[p]` and of `[q]`.
fn surjective_cocones(f: &MonotoneMap, g: &MonotoneMap) -> Vec<Cocone> {
    let ties: Vec<(usize, usize)> = (0..=f.dom()).map(|x| (f.apply(x), g.apply(x))).collect();
    let mut out = Vec::new();
    let mut h = vec![0; f.cod() + 1];
    let mut k = vec![0; g.cod() + 1];
    assign_class(&mut h, &mut k, (0, 0, 0), &ties, &mut out);
    out
}

fn assign_class(
    h: &mut [usize],
    k: &mut [usize],
    at: (usize, usize, usize),
    ties: &[(usize, usize)],
    out: &mut Vec<Cocone>,
) {
    let (i, j, t) = at;
    if i == h.len() && j == k.len() {
        out.push((h.to_vec(), k.to_vec(), t - 1));
        return;
    }
    for a in 0..=h.len() - i {
        for b in 0..=k.len() - j {
            if a + b == 0 {
                continue;
            }
            h[i..i + a].iter_mut().for_each(|v| *v = t);
            k[j..j + b].iter_mut().for_each(|v| *v = t);
            // Tied positions must land in the same class since values only grow.
            let (hs, ks) = (i..i + a, j..j + b);
            if ties.iter().all(|(x, y)| hs.contains(x) == ks.contains(y)) {
                assign_class(h, k, (i + a, j + b, t + 1), ties, out);
            }
        }
    }
}

/// Whether `c` factors through to `d` (uniqueness is automatic because `c`
/// is jointly surjective).
fn factors(c: &Cocone, d: &Cocone) -> bool {
    let mut u = vec![usize::MAX; c.2 + 1];
    for (cs, ds) in [(&c.0, &d.0), (&c.1, &d.1)] {
        for (&a, &b) in cs.iter().zip(ds.iter()) {
            if u[a] != usize::MAX && u[a] != b {
                return false;
            }
            u[a] = b;
        }
    }
    u.windows(2).all(|w| w[0] <= w[1])
}

/// The universal cocone, if one exists. A universal cocone maps onto every
/// jointly surjective cocone, so its target is as large as any.
fn universal_cocone(cocones: &[Cocone]) -> Option<&Cocone> {
    let top = cocones.iter().map(|c| c.2).max()?;
    cocones.iter().filter(|c| c.2 == top).find(|c| cocones.iter().all(|d| factors(c, d)))
}

fn pushout_oracle() -> Outcome {
    let mut spans = 0usize;
    let mut with_pushout = 0usize;
    for m in 0..=4 {
        for p in 0..=4 {
            for q in 0..=4 {
                for f in enumerate_maps(m, p) {
                    for g in enumerate_maps(m, q) {
                        spans += 1;
                        let span = Span::new(f.clone(), g.clone()).unwrap();
                        let cocones = surjective_cocones(&f, &g);
                        let oracle = universal_cocone(&cocones);
                        ensure(has_pushout(&span) == oracle.is_some(), || {
                            format!("has_pushout disagrees on {span:?}: oracle {oracle:?}")
                        })?;
                        if let Some(u) = oracle {
                            with_pushout += 1;
                            let sq = compute_pushout(&span).map_err(|e| e.to_string())?;
                            let c: Cocone = (sq.h.values().to_vec(), sq.k.values().to_vec(), sq.h.cod());
                            ensure(c == *u, || format!("compute_pushout differs on {span:?}"))?;
                            ensure(cocones.iter().all(|d| factors(&c, d)), || format!("not universal: {span:?}"))?;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{spans} spans, {with_pushout} with pushouts, all agree"))
}

// ---------------------------------------------------------------------------
// 2. Factorizations into basic pushouts and basic coface squares.

fn factorization() -> Outcome {
    let mut pushouts = 0usize;
    let mut cells = 0usize;
    for m in 0..=5 {
        for p in 0..=5 {
            for q in 0..=5 {
                for f in enumerate_maps(m, p) {
                    for g in enumerate_maps(m, q) {
                        let span = Span::new(f.clone(), g).unwrap();
                        if !has_pushout(&span) {
                            continue;
                        }
                        let sq = compute_pushout(&span).map_err(|e| e.to_string())?;
                        if sq.h.cod() > 5 {
                            continue;
                        }
                        pushouts += 1;
                        let tiling = factor_into_basic(&sq).map_err(|e| format!("{sq:?}: {e}"))?;
                        for cell in tiling.cells() {
                            cells += 1;
                            let basic = cell.f.defect() <= 1 && cell.g.defect() <= 1;
                            ensure(is_pushout_square(cell).unwrap() && (basic || cell.is_trivial()), || {
                                format!("cell {cell:?} of {sq:?} is not a basic pushout")
                            })?;
                        }
                        ensure(tiling.composite().map_err(|e| e.to_string())? == sq, || {
                            format!("{sq:?} does not recompose")
                        })?;
                    }
                }
            }
        }
    }
    let mut balanced = 0usize;
    for n in 0..=6usize {
        let full = (1u32 << (n + 1)) - 1;
        for a in 1..=full {
            for b in 1..=full {
                if a | b != full || a & b == 0 {
                    continue;
                }
                let sq = coface_square(n, a, b, a & b);
                ensure(is_balanced(&sq).unwrap(), || format!("{sq:?} should be balanced"))?;
                if sq.is_trivial() {
                    continue;
                }
                balanced += 1;
                let grid = factor_balanced(&sq).map_err(|e| format!("{sq:?}: {e}"))?;
                for cell in grid.iter() {
                    let basic_coface = cell.all_cofaces()
                        && [&cell.f, &cell.g, &cell.h, &cell.k].iter().all(|x| x.defect() <= 1)
                        && is_balanced(cell).unwrap();
                    ensure(basic_coface || cell.is_trivial(), || {
                        format!("cell {cell:?} of {sq:?} is not a basic coface square")
                    })?;
                }
                ensure(grid.composite().map_err(|e| e.to_string())? == sq, || format!("{sq:?} does not recompose"))?;
            }
        }
    }
    Ok(format!("{pushouts} pushout squares ({cells} cells), {balanced} balanced squares"))
}

fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

/// The square of inclusions `S -> A`, `S -> B`, `A -> [n]`, `B -> [n]`.
fn coface_square(n: usize, a: u32, b: u32, s: u32) -> Square {
    let (va, vb, vs) = (members(a), members(b), members(s));
    let pos = |of: &[usize], within: &[usize]| of.iter().map(|v| within.binary_search(v).unwrap()).collect();
    Square::new(
        MonotoneMap::new(va.len() - 1, pos(&vs, &va)).unwrap(),
        MonotoneMap::new(vb.len() - 1, pos(&vs, &vb)).unwrap(),
        MonotoneMap::new(n, va).unwrap(),
        MonotoneMap::new(n, vb).unwrap(),
    )
    .unwrap()
}

// ---------------------------------------------------------------------------
// 3. Commuting coface squares.

fn face_pushouts() -> Outcome {
    let mut squares = 0usize;
    let mut pushouts = 0usize;
    for n in 0..=6usize {
        let full = (1u32 << (n + 1)) - 1;
        for a in 1..=full {
            for b in 1..=full {
                let both = a & b;
                // Every nonempty part of the overlap gives a commuting square.
                let mut s = both;
                while s != 0 {
                    let sq = coface_square(n, a, b, s);
                    squares += 1;
                    let set_pushout = a | b == full && s == both;
                    let spine = (0..n).all(|i| {
                        let e = 0b11u32 << i;
                        a & e == e || b & e == e
                    });
                    let lib = is_pushout_square(&sq).unwrap();
                    ensure(lib == (set_pushout && spine), || {
                        format!("{sq:?}: is_pushout_square {lib}, set pushout {set_pushout}, spine {spine}")
                    })?;
                    pushouts += usize::from(lib);
                    s = (s - 1) & both;
                }
            }
        }
    }
    Ok(format!("{squares} coface squares, {pushouts} pushouts"))
}

// ---------------------------------------------------------------------------
// 4. ∨-products.

fn defect(f: &MonotoneMap) -> usize {
    let image: BTreeSet<usize> = f.values().iter().copied().collect();
    f.dom() + f.cod() + 2 - 2 * image.len()
}

fn vee_laws() -> Outcome {
    let mut pairs = 0usize;
    for a in 0..=4 {
        for b in 0..=4 {
            for c in 0..=4 {
                for d in 0..=4 {
                    for f in enumerate_maps(a, b).filter(|f| f.preserves_max()) {
                        for g in enumerate_maps(c, d).filter(|g| g.preserves_min()) {
                            let fg = vee_product(&[f.clone(), g.clone()]).map_err(|e| e.to_string())?;
                            ensure(defect(&fg) == defect(&f) + defect(&g), || format!("defect of {f:?} ∨ {g:?}"))?;
                            // Splitting the product at the gluing point gives the parts back.
                            let dec = VeeDecomposition::new(MonotoneMap::new(a + c, vec![a]).unwrap());
                            let parts = dec.components_of_map(&fg).map_err(|e| e.to_string())?.parts;
                            ensure(parts == vec![f.clone(), g.clone()], || {
                                format!("split of {f:?} ∨ {g:?}: {parts:?}")
                            })?;
                            pairs += 1;
                        }
                    }
                }
            }
        }
    }
    let mut roundtrips = 0usize;
    for m in 0..=4 {
        for n in 0..=4 {
            for f in enumerate_maps(m, n) {
                for r in 0..=m {
                    for base in enumerate_maps(r, m) {
                        let dec = VeeDecomposition::new(base);
                        let parts = dec.components_of_map(&f).map_err(|e| e.to_string())?.parts;
                        ensure(vee_product(&parts).map_err(|e| e.to_string())? == f, || {
                            format!("{f:?} along {dec:?}")
                        })?;
                        roundtrips += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{pairs} products, {roundtrips} decompose/product roundtrips"))
}

// ---------------------------------------------------------------------------
// 5. Acyclicity.

/// Facets as bitmasks, computed independently of the library.
fn facet_masks(c: &Complex) -> Vec<u64> {
    c.facets().iter().map(|f| f.iter().fold(0u64, |m, &v| m | 1 << v)).collect()
}

fn in_complex(facets: &[u64], s: u64) -> bool {
    facets.iter().any(|&f| f & s == s)
}

/// Deletes vertices lying in a single facet until none remain or none
/// qualifies; `directed` additionally asks for the edge to the preceding
/// remaining vertex.
fn oracle_graham(facets: &[u64], ground: usize, directed: bool) -> bool {
    let mut facets = facets.to_vec();
    let mut alive: Vec<usize> = (0..ground).collect();
    loop {
        if alive.len() <= usize::from(directed) {
            return true;
        }
        let pick = alive.iter().position(|&v| {
            let count = facets.iter().filter(|&&f| f >> v & 1 == 1).count();
            let edge = |w: usize| in_complex(&facets, 1 << v | 1 << w);
            let ok = if !directed {
                true
            } else {
                let idx = alive.iter().position(|&x| x == v).unwrap();
                (idx == 0 || edge(alive[idx - 1])) && (idx + 1 == alive.len() || edge(alive[idx + 1]))
            };
            count == 1 && ok
        });
        let Some(i) = pick else { return false };
        let v = alive.remove(i);
        let shrunk: Vec<u64> = facets.iter().map(|f| f & !(1 << v)).filter(|&f| f != 0).collect();
        facets = shrunk.iter().copied().filter(|&f| !shrunk.iter().any(|&g| g != f && g & f == f)).collect();
        facets.sort_unstable();
        facets.dedup();
    }
}

fn oracle_spheres_filled(facets: &[u64], ground: usize) -> bool {
    (0u64..1 << ground).filter(|s| s.count_ones() >= 3).all(|s| {
        let boundary = (0..ground).filter(|v| s >> v & 1 == 1).all(|v| in_complex(facets, s & !(1 << v)));
        !boundary || in_complex(facets, s)
    })
}

/// No induced cycle of length at least four in the 1-skeleton.
fn oracle_chordal(facets: &[u64], ground: usize) -> bool {
    let adj = |a: usize, b: usize| a != b && in_complex(facets, 1 << a | 1 << b);
    (0u64..1 << ground).filter(|s| s.count_ones() >= 4).all(|s| {
        let vs: Vec<usize> = (0..ground).filter(|v| s >> v & 1 == 1).collect();
        let degree_two = vs.iter().all(|&v| vs.iter().filter(|&&w| adj(v, w)).count() == 2);
        // An induced cycle: every vertex has two neighbours and it is connected.
        let connected = {
            let mut seen = 1u64 << vs[0];
            let mut stack = vec![vs[0]];
            while let Some(v) = stack.pop() {
                for &w in &vs {
                    if seen >> w & 1 == 0 && adj(v, w) {
                        seen |= 1 << w;
                        stack.push(w);
                    }
                }
            }
            seen == s
        };
        !(degree_two && connected)
    })
}

fn oracle_has_spine(facets: &[u64], ground: usize) -> bool {
    (1..ground).all(|v| in_complex(facets, 0b11 << (v - 1)))
}

/// Some ordering of the facets has the running intersection property
/// (with each step covering the new spine edges when `directed`).
fn oracle_rip(facets: &[u64], directed: bool) -> bool {
    fn go(facets: &[u64], placed: u64, directed: bool, seen: &mut HashSet<u64>) -> bool {
        if placed.count_ones() as usize == facets.len() {
            return true;
        }
        if !seen.insert(placed) {
            return false;
        }
        let chosen: Vec<u64> = (0..facets.len()).filter(|i| placed >> i & 1 == 1).map(|i| facets[i]).collect();
        let union = chosen.iter().fold(0, |a, b| a | b);
        (0..facets.len()).filter(|&i| placed >> i & 1 == 0).any(|i| {
            let t = facets[i];
            let anchored = chosen.is_empty() || chosen.iter().any(|&s| t & union & !s == 0);
            let verts: Vec<u32> = (0..64).filter(|v| (union | t) >> v & 1 == 1).collect();
            let spine = !directed
                || verts.windows(2).all(|w| {
                    let e = 1u64 << w[0] | 1 << w[1];
                    t & e == e || union & e == e
                });
            anchored && spine && go(facets, placed | 1 << i, directed, seen)
        })
    }
    facets.is_empty() || go(facets, 0, directed, &mut HashSet::new())
}

/// Compares the library and the oracles on one complex.
fn compare_acyclicity(c: &Complex) -> Result<(bool, bool), String> {
    let ground = c.ground();
    let facets = facet_masks(c);
    let graham = oracle_graham(&facets, ground, false);
    let dgraham = oracle_graham(&facets, ground, true);
    let fillers = oracle_spheres_filled(&facets, ground) && oracle_chordal(&facets, ground);
    let dfillers = fillers && oracle_has_spine(&facets, ground);
    let (rip, drip) = (oracle_rip(&facets, false), oracle_rip(&facets, true));
    let lib = [
        c.is_graham_acyclic(),
        c.spheres_filled() && is_chordal(&c.skeleton1()),
        c.rip_order().is_some(),
        c.is_directed_graham_acyclic(),
        c.spheres_filled() && is_chordal(&c.skeleton1()) && c.has_spine(),
        c.directed_rip_order().is_some(),
    ];
    let oracle = [graham, fillers, rip, dgraham, dfillers, drip];
    ensure(lib == oracle, || format!("{:?}: library {lib:?}, oracle {oracle:?}", c.facets()))?;
    ensure(graham == fillers && fillers == rip, || format!("undirected conditions differ on {:?}", c.facets()))?;
    ensure(dgraham == dfillers && dfillers == drip, || format!("directed conditions differ on {:?}", c.facets()))?;
    ensure(!dgraham || graham, || format!("directed without undirected on {:?}", c.facets()))?;
    if let Some(order) = c.rip_order() {
        ensure(order.verify(c), || format!("invalid running intersection order for {:?}", c.facets()))?;
    }
    Ok((graham, dgraham))
}

fn all_complexes(n: usize) -> Vec<Complex> {
    let sets: Vec<u64> = (1u64..1 << n).collect();
    let mut out = Vec::new();
    for family in 0u64..1 << sets.len() {
        let chosen: Vec<u64> = (0..sets.len()).filter(|i| family >> i & 1 == 1).map(|i| sets[i]).collect();
        let antichain = chosen.iter().all(|&a| chosen.iter().all(|&b| a == b || a & b != a));
        if antichain && chosen.iter().fold(0, |m, s| m | s) == (1 << n) - 1 {
            let facets: Vec<Vec<usize>> =
                chosen.iter().map(|&s| (0..n).filter(|v| s >> v & 1 == 1).collect()).collect();
            out.push(Complex::new(n, &facets).unwrap());
        }
    }
    out
}

fn acyclicity() -> Outcome {
    let mut exhaustive = 0usize;
    let mut acyclic = [0usize; 2];
    for n in 1..=4 {
        for c in all_complexes(n) {
            let (u, d) = compare_acyclicity(&c)?;
            acyclic[0] += usize::from(u);
            acyclic[1] += usize::from(d);
            exhaustive += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut sampled = 0usize;
    for n in 5..=7 {
        for _ in 0..10_000 {
            let (u, d) = compare_acyclicity(&random_complex(&mut rng, n))?;
            acyclic[0] += usize::from(u);
            acyclic[1] += usize::from(d);
            sampled += 1;
        }
        // Acyclic complexes are rare among uniform samples; add some.
        for _ in 0..2_000 {
            compare_acyclicity(&random_acyclic_configuration(&mut rng, n))?;
            compare_acyclicity(&random_directed_configuration(&mut rng, n))?;
        }
    }
    Ok(format!(
        "{exhaustive} complexes on <= 4 vertices and {sampled} random ones agree ({} acyclic, {} directed acyclic)",
        acyclic[0], acyclic[1]
    ))
}

// ---------------------------------------------------------------------------
// 6. Acyclic fillers for tables over two values.

fn all_rows(arity: usize) -> Vec<Vec<String>> {
    (0..1usize << arity).map(|bits| (0..arity).map(|c| (bits >> (arity - 1 - c) & 1).to_string()).collect()).collect()
}

fn random_table(rng: &mut impl Rng, arity: usize) -> Table {
    let rows: Vec<Vec<String>> = all_rows(arity).into_iter().filter(|_| rng.gen_bool(0.5)).collect();
    Table::new(arity, ["0".to_string(), "1".to_string()], rows).unwrap()
}

fn inclusion(facet: &[usize], ground: usize) -> MonotoneMap {
    MonotoneMap::new(ground - 1, facet.to_vec()).unwrap()
}

/// Whether some table on all columns restricts to every assigned table.
/// Restriction preserves unions, so it suffices to test the largest
/// candidate: every row whose restrictions are all allowed.
fn filler_exists(ground: usize, assignment: &BTreeMap<Vec<usize>, Table>) -> bool {
    let largest: Vec<Vec<String>> = all_rows(ground)
        .into_iter()
        .filter(|r| {
            assignment.iter().all(|(f, t)| t.rows().contains(&f.iter().map(|&c| r[c].clone()).collect::<Vec<_>>()))
        })
        .collect();
    assignment.iter().all(|(f, t)| {
        let got: BTreeSet<Vec<String>> = largest.iter().map(|r| f.iter().map(|&c| r[c].clone()).collect()).collect();
        got == *t.rows()
    })
}

fn database_fillers() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut filled = 0usize;
    for case in 0..1000 {
        let n = rng.gen_range(1..=5);
        let directed = case % 2 == 1;
        let c = if directed {
            random_directed_configuration(&mut rng, n)
        } else {
            random_acyclic_configuration(&mut rng, n)
        };
        let global = random_table(&mut rng, n);
        let assignment: BTreeMap<Vec<usize>, Table> = c
            .facets()
            .into_iter()
            .map(|f| {
                let t = table_face(&global, &inclusion(&f, n)).unwrap();
                (f, t)
            })
            .collect();
        let z = fill_configuration(&Tables, &c, &assignment, directed).map_err(|e| format!("{:?}: {e}", c.facets()))?;
        for (f, t) in &assignment {
            ensure(Tables.face(&z, &inclusion(f, n)) == *t, || format!("{:?}: filler misses facet {f:?}", c.facets()))?;
        }
        ensure(filler_exists(n, &assignment), || format!("{:?}: brute force finds no filler", c.facets()))?;
        filled += 1;
    }
    // Independently drawn facet tables: a filler exists exactly when the
    // tables agree on shared faces, which is when the construction succeeds.
    let mut agree = [0usize; 2];
    for _ in 0..1000 {
        let n = rng.gen_range(2..=5);
        let c = random_acyclic_configuration(&mut rng, n);
        let assignment: BTreeMap<Vec<usize>, Table> = c
            .facets()
            .into_iter()
            .map(|f| {
                let t = if rng.gen_bool(0.5) {
                    Table::new(f.len(), ["0".into(), "1".into()], all_rows(f.len())).unwrap()
                } else {
                    random_table(&mut rng, f.len())
                };
                (f, t)
            })
            .collect();
        let built = fill_configuration(&Tables, &c, &assignment, false);
        let exists = filler_exists(n, &assignment);
        ensure(built.is_ok() == exists, || format!("{:?}: construction {built:?}, brute force {exists}", c.facets()))?;
        agree[usize::from(exists)] += 1;
    }
    Ok(format!(
        "{filled} compatible configurations filled; {} random assignments agree ({} fillable)",
        agree[0] + agree[1],
        agree[1]
    ))
}

// ---------------------------------------------------------------------------
// 7. Classifier fixtures.

fn classifier_fixtures() -> Outcome {
    let z2 = TruncatedSSet::nerve(&FinCategory::cyclic_group(2), 4).unwrap();
    ensure(is_kan(&z2).holds, || "nerve of Z/2 should be Kan".into())?;
    ensure(is_span_complete(&z2).holds, || "nerve of Z/2 should be span complete".into())?;
    ensure(is_segal_nerve(&z2).holds, || "nerve of Z/2 should be Segal".into())?;

    let arrow = TruncatedSSet::nerve(&FinCategory::walking_arrow(), 3).unwrap();
    ensure(is_quasicategory(&arrow).holds, || "walking arrow should be a quasicategory".into())?;
    ensure(!is_kan(&arrow).holds, || "walking arrow should not be Kan".into())?;
    ensure(is_inner_span_complete(&arrow).holds, || "walking arrow should be inner span complete".into())?;
    ensure(is_segal_nerve(&arrow).holds, || "walking arrow should be Segal".into())?;
    let verdict = is_span_complete(&arrow);
    ensure(!verdict.holds, || "walking arrow should not be span complete".into())?;
    let Some(Witness::Square { family: Family::Coface { i, j }, square, b, c, .. }) = verdict.witness.clone() else {
        return Err(format!("expected a basic coface witness, got {:?}", verdict.witness));
    };
    ensure(square.h.cod() == 2, || format!("witness lives in dimension {}", square.h.cod()))?;
    // The outer span asks for a composite through u that is an identity,
    // which needs an inverse of u; recount the fillers directly.
    let (bx, cx) = (arrow.cell(1, &b).unwrap(), arrow.cell(1, &c).unwrap());
    ensure(count_fillers(&arrow, 2, i, j, bx.idx, cx.idx).unwrap() == 0, || "witness span has a filler".into())?;
    ensure(j == i + 1, || format!("witness ({i},{j}) is not an outer span"))?;
    ensure([b.as_str(), c.as_str()].contains(&"u"), || format!("witness {b}, {c} does not involve the arrow"))?;

    let hollow = TruncatedSSet::hollow_triangle(3).unwrap();
    let v = is_segal_nerve(&hollow);
    ensure(!v.holds && matches!(v.witness, Some(Witness::Square { .. })), || format!("hollow triangle: {v:?}"))?;
    Ok(format!("witness for the walking arrow: d^{i},d^{j} span ({b}, {c}) in dimension 2"))
}

// ---------------------------------------------------------------------------
// 8. Counterexamples.

fn counterexamples() -> Outcome {
    // {*} -> {a, b} picks a; everything else collapses to a point.
    let left = SetSquare::new([1, 2, 1, 1], vec![0], vec![0], vec![0, 0], vec![0]).unwrap();
    let right = SetSquare::new([2, 1, 1, 1], vec![0, 0], vec![0, 0], vec![0], vec![0]).unwrap();
    let outer = left.hcompose(&right).unwrap();
    ensure(outer.is_weak_pullback() && right.is_weak_pullback(), || "outer and right squares should be weak".into())?;
    ensure(left.failure(false) == Some(PullbackFailure::NoLift { b: 1, c: 0 }), || "left square should fail".into())?;

    let support = missing_face_support(&opposite_values_horn(), 3).map_err(|e| e.to_string())?;
    ensure(support.is_empty(), || format!("opposite-values horn has support {support:?}"))?;

    let mut adjacent = 0;
    for n in 2..=6 {
        for e in catalog(CatalogKind::BasicCoface(n)) {
            if let Family::Coface { i, j } = e.family {
                let pushout = is_pushout_square(&e.square).unwrap();
                ensure(is_balanced(&e.square).unwrap(), || format!("basic coface ({i},{j}) into [{n}] not balanced"))?;
                ensure(pushout == (j > i + 1), || format!("basic coface ({i},{j}) into [{n}]: pushout {pushout}"))?;
                adjacent += usize::from(j == i + 1);
            }
        }
    }
    Ok(format!("weak pullbacks do not cancel, horn support empty, {adjacent} adjacent coface squares balanced but not pushouts"))
}

// ---------------------------------------------------------------------------
// 9. Forced discreteness.

fn forced_discreteness() -> Outcome {
    let fixtures = [
        ("point", TruncatedSSet::discrete(&["a"], 4).unwrap()),
        ("three points", TruncatedSSet::discrete(&["a", "b", "c"], 4).unwrap()),
        ("walking arrow", TruncatedSSet::nerve(&FinCategory::walking_arrow(), 4).unwrap()),
        ("Z/2", TruncatedSSet::nerve(&FinCategory::cyclic_group(2), 4).unwrap()),
        ("Z/3", TruncatedSSet::nerve(&FinCategory::cyclic_group(3), 3).unwrap()),
        ("order 3", TruncatedSSet::nerve(&FinCategory::linear_order(3), 3).unwrap()),
        ("hollow triangle", TruncatedSSet::hollow_triangle(4).unwrap()),
        ("two triangles", TruncatedSSet::from_ordered_complex(&[vec![0, 1, 2], vec![1, 2, 3]], 4).unwrap()),
    ];
    let mut passing = Vec::new();
    for (name, x) in &fixtures {
        let r = forced_discrete(x);
        ensure(r.consistent(), || format!("{name}: both families pass but structure maps are not bijective"))?;
        if r.families_pass() {
            passing.push(*name);
        }
        if name.ends_with("points") || *name == "point" {
            ensure(r.families_pass(), || format!("{name}: discrete set fails a family"))?;
        }
        if *name == "walking arrow" {
            ensure(!r.families_pass(), || "walking arrow passes both families".into())?;
        }
    }
    Ok(format!("both families pass exactly on {passing:?}"))
}

// ---------------------------------------------------------------------------
// 10. Instance validity.

fn random_metric(rng: &mut impl Rng, points: usize) -> Pseudometric {
    let mut d = vec![vec![BigRational::zero(); points]; points];
    for i in 0..points {
        for j in i + 1..points {
            let w = BigRational::new(rng.gen_range(0..30).into(), rng.gen_range(1..8).into());
            d[i][j] = w.clone();
            d[j][i] = w;
        }
    }
    for k in 0..points {
        for i in 0..points {
            for j in 0..points {
                let through = &d[i][k] + &d[k][j];
                if through < d[i][j] {
                    d[i][j] = through;
                }
            }
        }
    }
    Pseudometric::new(d).unwrap()
}

/// Overlapping vertex sets covering `0..points` and the inclusions of their
/// overlap.
fn random_cover(rng: &mut impl Rng, points: usize) -> (Vec<usize>, Vec<usize>, MonotoneMap, MonotoneMap) {
    loop {
        let a: Vec<usize> = (0..points).filter(|_| rng.gen_bool(0.6)).collect();
        let b: Vec<usize> = (0..points).filter(|v| !a.contains(v) || rng.gen_bool(0.5)).collect();
        let shared: Vec<usize> = a.iter().copied().filter(|v| b.contains(v)).collect();
        if a.is_empty() || b.is_empty() || shared.is_empty() {
            continue;
        }
        let pos = |set: &[usize]| shared.iter().map(|v| set.iter().position(|x| x == v).unwrap()).collect();
        return (
            a.clone(),
            b.clone(),
            MonotoneMap::new(a.len() - 1, pos(&a)).unwrap(),
            MonotoneMap::new(b.len() - 1, pos(&b)).unwrap(),
        );
    }
}

fn glued_positions(a: &[usize], b: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let layout: Vec<usize> = a.iter().copied().chain(b.iter().copied().filter(|v| !a.contains(v))).collect();
    let pos = |set: &[usize]| set.iter().map(|v| layout.iter().position(|x| x == v).unwrap()).collect();
    (pos(a), pos(b))
}

fn metric_axioms(d: &Pseudometric) -> bool {
    let n = d.points();
    (0..n).all(|i| d.get(i, i).is_zero())
        && (0..n).all(|i| (0..n).all(|j| d.get(i, j) == d.get(j, i) && *d.get(i, j) >= BigRational::zero()))
        && (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| *d.get(i, k) <= d.get(i, j) + d.get(j, k))))
}

fn instance_validity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..1000 {
        let points = rng.gen_range(2..=6);
        let global = random_metric(&mut rng, points);
        let (a, b, u, v) = random_cover(&mut rng, points);
        let restrict =
            |s: &[usize]| metric_pullback(&global, &MonotoneMap::new(points - 1, s.to_vec()).unwrap()).unwrap();
        let (dp, dq) = (restrict(&a), restrict(&b));
        let d = metric_fill(&dp, &dq, &u, &v).map_err(|e| e.to_string())?;
        ensure(metric_axioms(&d), || format!("filler {d:?} is not a pseudometric"))?;
        let (pa, pb) = glued_positions(&a, &b);
        for (orig, pos) in [(&dp, &pa), (&dq, &pb)] {
            let ok = (0..pos.len()).all(|x| (0..pos.len()).all(|y| d.get(pos[x], pos[y]) == orig.get(x, y)));
            ensure(ok, || format!("filler {d:?} does not restrict to {orig:?}"))?;
        }
    }

    for _ in 0..1000 {
        let points = rng.gen_range(2..=5);
        let rows: Vec<Vec<String>> = all_rows(points).into_iter().filter(|_| rng.gen_bool(0.5)).collect();
        let rows = if rows.is_empty() { all_rows(points) } else { rows };
        let weights: Vec<BigRational> =
            rows.iter().map(|_| BigRational::from_integer(rng.gen_range(1..6).into())).collect();
        let total: BigRational = weights.iter().sum();
        let global =
            Distribution::new(points, [], rows.into_iter().zip(weights.into_iter().map(|w| w / &total))).unwrap();
        let (a, b, u, v) = random_cover(&mut rng, points);
        let (ma, mb) = (global.marginal(&a), global.marginal(&b));
        let p = dist_fill(&ma, &mb, &u, &v).map_err(|e| e.to_string())?;
        ensure(p.total().is_one() && p.support().values().all(|x| *x >= BigRational::zero()), || {
            format!("{p:?} is not a distribution")
        })?;
        let (pa, pb) = glued_positions(&a, &b);
        ensure(p.marginal(&pa) == ma && p.marginal(&pb) == mb, || format!("{p:?} has the wrong marginals"))?;
    }

    // Join maximality: the join must be the set of all rows whose
    // restrictions are allowed, which contains every table restricting into
    // both; on three glued columns that is also checked table by table.
    // Pairs of tables on at most three columns each are enumerated; when
    // one side has all four columns, pairs are restrictions of random
    // tables.
    let mut pairs = 0usize;
    let mut table_checks = 0usize;
    for total in 2..=4usize {
        for amask in 1u32..1 << total {
            for bmask in 1u32..1 << total {
                if amask | bmask != (1 << total) - 1 || amask & bmask == 0 {
                    continue;
                }
                let (a, b) = (members(amask), members(bmask));
                let shared = members(amask & bmask);
                let pos = |of: &[usize], within: &[usize]| {
                    of.iter().map(|v| within.binary_search(v).unwrap()).collect::<Vec<_>>()
                };
                let u = MonotoneMap::new(a.len() - 1, pos(&shared, &a)).unwrap();
                let v = MonotoneMap::new(b.len() - 1, pos(&shared, &b)).unwrap();
                let (pa, pb) = glued_positions(&a, &b);
                let candidates: Vec<(Table, Table)> = if a.len() < 4 && b.len() < 4 {
                    let tables_on = |arity: usize| -> Vec<Table> {
                        let rows = all_rows(arity);
                        (0u32..1 << rows.len())
                            .map(|m| {
                                Table::new(
                                    arity,
                                    ["0".into(), "1".into()],
                                    (0..rows.len()).filter(|i| m >> i & 1 == 1).map(|i| rows[i].clone()),
                                )
                                .unwrap()
                            })
                            .collect()
                    };
                    let (tas, tbs) = (tables_on(a.len()), tables_on(b.len()));
                    tas.iter().flat_map(|ta| tbs.iter().map(move |tb| (ta.clone(), tb.clone()))).collect()
                } else {
                    (0..5000)
                        .map(|_| {
                            let global = random_table(&mut rng, total);
                            (global.project(&pa), global.project(&pb))
                        })
                        .collect()
                };
                for (ta, tb) in &candidates {
                    let Ok(j) = join(ta, tb, &u, &v) else { continue };
                    pairs += 1;
                    let fits = |r: &Vec<String>| {
                        ta.rows().contains(&pa.iter().map(|&c| r[c].clone()).collect::<Vec<_>>())
                            && tb.rows().contains(&pb.iter().map(|&c| r[c].clone()).collect::<Vec<_>>())
                    };
                    let expected: BTreeSet<Vec<String>> = all_rows(total).into_iter().filter(fits).collect();
                    ensure(*j.rows() == expected, || format!("join of {ta:?} and {tb:?} is not maximal"))?;
                    ensure(j.project(&pa) == *ta && j.project(&pb) == *tb, || {
                        format!("join of {ta:?} and {tb:?} loses rows")
                    })?;
                    if total <= 3 {
                        let rows = all_rows(total);
                        for m in 0u32..1 << rows.len() {
                            let t: Vec<&Vec<String>> =
                                (0..rows.len()).filter(|i| m >> i & 1 == 1).map(|i| &rows[i]).collect();
                            if t.iter().all(|r| fits(r)) {
                                ensure(t.iter().all(|r| j.rows().contains(*r)), || "table outside the join".into())?;
                            }
                        }
                        table_checks += 1;
                    }
                }
            }
        }
    }
    Ok(format!("1000 metric and 1000 distribution fillers valid; {pairs} compatible table pairs maximal ({table_checks} against every table)"))
}
