//! Acceptance run: one PASS/FAIL line per criterion. Runs without the test
//! harness so the lines are always printed.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use prn::builder::{
    better_side, bounds_report, check_zeta, construct_general, construct_general_with, construct_zeta, expand_twins,
    represent, BlockOrder, RepresentOptions, ZetaVerdict, CROWN_SEARCH_CAP,
};
use prn::catalog::{demo_graph, ecg_crown, ecg_diamond, ecg_tree, twin_example};
use prn::families::{
    crown, crown_with_pendants, crown_with_universal, cycle_word, extended_crown, largest_induced_crown,
    random_reduced_bipartite,
};
use prn::graph::{reduce, BipartiteGraph, Graph, Side, VertexId};
use prn::oracle::{bipartite_poset, max_antichain_brute, prn_exact, sweep_width2, OracleBudget};
use prn::poset::{neighborhood_poset, width_and_cover, Poset};
use prn::words::{is_uniform, lemma_scan, represents, PermSequence, Verdict};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn ids(g: &BipartiteGraph, chains: &[&[&str]]) -> Vec<Vec<VertexId>> {
    chains.iter().map(|c| c.iter().map(|l| g.graph().id(l).unwrap()).collect()).collect()
}

fn text(g: &Graph, p: &[VertexId]) -> String {
    p.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(" ")
}

fn represents_ok(perms: &PermSequence, g: &Graph) -> bool {
    represents(&perms.flatten(), g).map(|v| v.is_ok()).unwrap_or(false)
}

fn prn_of(g: &BipartiteGraph) -> Result<usize, String> {
    Ok(prn_exact(g, &OracleBudget::for_elements(g.graph().n())).map_err(err)?.0)
}

type TableRow = (&'static str, BipartiteGraph, &'static [&'static [&'static str]], [&'static str; 3]);

fn criterion1() -> Check {
    let rows: [TableRow; 3] = [
        ("G3", ecg_tree(), &[&["3", "5", "1"], &["7"]], ["7 1 2 5 4 6 3 8", "3 5 1 8 6 2 7 4", "7 3 5 1 8 6 4 2"]),
        ("G4", ecg_crown(), &[&["3", "1"], &["7", "5"]], ["7 5 2 1 4 6 3 8", "3 1 6 5 8 2 7 4", "7 5 3 1 8 6 4 2"]),
        ("G5", ecg_diamond(), &[&["7", "1", "5"], &["3"]], ["3 5 6 8 1 4 7 2", "7 1 5 4 8 3 2 6", "3 7 1 5 2 4 8 6"]),
    ];
    for (name, g, cover, want) in rows {
        let r = construct_zeta(&g, Side::A, Some(&ids(&g, cover)), true).map_err(|e| format!("{name}: {e}"))?;
        let gr = g.graph();
        let got = [
            text(gr, &r.perms.perms()[0]),
            text(gr, &r.perms.perms()[1]),
            text(gr, r.p0.as_deref().unwrap_or_default()),
        ];
        for (row, (g_row, w_row)) in ["p1", "p2", "p0"].iter().zip(got.iter().zip(want)) {
            ensure(g_row == w_row, || format!("{name} {row}: got {g_row:?}, want {w_row:?}"))?;
        }
    }
    Ok("9 rows byte-identical".into())
}

fn criterion2() -> Check {
    let g = demo_graph();
    let gr = g.graph();
    let wa = width_and_cover(&neighborhood_poset(&g, Side::A).map_err(err)?.poset).0;
    let wb = width_and_cover(&neighborhood_poset(&g, Side::B).map_err(err)?.poset).0;
    ensure((wa, wb) == (3, 3), || format!("(a) widths {wa}, {wb}"))?;

    // the worked example orders blocks by containment, see BlockOrder
    let cover = ids(&g, &[&["7", "8", "9"], &["10"], &["11"]]);
    let general = construct_general_with(&g, Side::B, Some(&cover), BlockOrder::Containment).map_err(err)?;
    ensure(general.perms.len() == 4 && represents_ok(&general.perms, gr), || "(b) general build".into())?;
    let want =
        ["11 10 7 8 9 4 6 1 5 2 3", "10 11 3 9 2 8 5 1 7 6 4", "7 8 9 11 1 3 10 4 6 5 2", "7 8 9 10 4 1 2 11 6 5 3"];
    for (p, w) in general.perms.perms().iter().zip(want) {
        ensure(text(gr, p) == w, || format!("(b) row {:?}, want {w:?}", text(gr, p)))?;
    }
    let plain = construct_general(&g, Side::B, Some(&cover)).map_err(err)?;
    ensure(represents_ok(&plain.perms, gr), || "(b) ascending block order".into())?;

    let tail = PermSequence::new(general.perms.perms()[1..].to_vec()).map_err(err)?;
    match represents(&tail.flatten(), gr).map_err(err)? {
        Verdict::Counterexample { u, v, adjacent: false, projection } => {
            let pair = (gr.label(u), gr.label(v));
            let proj: String = projection.letters.iter().map(|&x| gr.label(x)).collect();
            ensure(pair == ("1", "6") && proj == "161616", || format!("(c) got pair {pair:?} projection {proj}"))?;
        }
        other => return Err(format!("(c) expected non-adjacent counterexample, got {other:?}")),
    }

    let zeta =
        construct_zeta(&g, Side::A, Some(&ids(&g, &[&["1", "4"], &["2", "5", "6"], &["3"]])), false).map_err(err)?;
    ensure(zeta.perms.len() == 3 && represents_ok(&zeta.perms, gr), || "(d) zeta build".into())?;

    let p = prn_of(&g)?;
    ensure(p == 3, || format!("(e) prn_exact = {p}"))?;
    Ok("widths 3/3, general 4 perms matching the worked rows, (1,6) projection 161616, zeta 3 perms, prn 3".into())
}

fn criterion3() -> Check {
    for n in 2..=6 {
        let g = crown(n).map_err(err)?;
        let r = construct_zeta(&g, Side::A, None, false).map_err(|e| format!("n={n}: {e}"))?;
        ensure(r.perms.len() == n && represents_ok(&r.perms, g.graph()), || format!("n={n}: zeta build"))?;
        if n <= 4 {
            let p = prn_of(&g)?;
            ensure(p == n, || format!("n={n}: prn_exact {p}"))?;
        } else {
            let k = largest_induced_crown(&g, CROWN_SEARCH_CAP).map_err(err)?.k;
            ensure(k == n, || format!("n={n}: largest crown {k}"))?;
        }
    }
    Ok("n = 2..6".into())
}

fn criterion4() -> Check {
    let g = twin_example();
    ensure(g.graph().n() == 9, || "fixture size".into())?;
    let red = reduce(&g);
    let side = better_side(&red.reduced).map_err(err)?;
    let r = construct_zeta(&red.reduced, side, None, false).map_err(err)?;
    let out = expand_twins(&r.perms, &red, &g).map_err(err)?;
    ensure(out.len() == 2 && represents_ok(&out, g.graph()), || "expanded word".into())?;
    let b = bounds_report(&g, false).map_err(err)?;
    let part_bound = b.alpha.min(b.beta);
    ensure(b.kappa0 == 2 && part_bound == 3, || format!("kappa0 {} min(alpha, beta) {part_bound}", b.kappa0))?;
    Ok("2 permutations on 9 vertices; kappa0 2 against min(alpha, beta) 3".into())
}

fn criterion5() -> Check {
    let report = sweep_width2(6).map_err(err)?;
    let bad = report.mismatches();
    ensure(bad.is_empty(), || format!("{} mismatches, first {:?}", bad.len(), bad[0]))?;
    // the module invariant goes one element further
    let seven = sweep_width2(7).map_err(err)?;
    ensure(seven.mismatches().is_empty(), || "mismatch among 7-element posets".into())?;
    for (name, g) in [("G3", ecg_tree()), ("G4", ecg_crown()), ("G5", ecg_diamond())] {
        let p = prn_of(&g)?;
        ensure(p == 3, || format!("{name}: prn_exact {p}"))?;
    }
    Ok(format!(
        "{} posets, 0 mismatches ({} up to 7 elements); G3/G4/G5 prn 3",
        report.records.len(),
        seven.records.len()
    ))
}

/// Cycle poset: chain a1 < .. < ar and chain b1 < .. < bs with a1 < b1 and bs < ar.
fn cycle_poset(r: usize, s: usize) -> Poset {
    let names: Vec<String> = (1..=r).map(|i| format!("a{i}")).chain((1..=s).map(|j| format!("b{j}"))).collect();
    let mut rel: Vec<(usize, usize)> = (1..r).map(|i| (i - 1, i)).collect();
    rel.extend((1..s).map(|j| (r + j - 1, r + j)));
    rel.push((0, r));
    rel.push((r + s - 1, r - 1));
    Poset::from_relations(names, &rel).expect("acyclic")
}

fn criterion6() -> Check {
    let mut words = 0;
    for r in 3..=9 {
        for s in 2..r {
            if r + s > 9 {
                continue;
            }
            let p = cycle_poset(r, s);
            for i in 1..r - 1 {
                for j in r..r + s {
                    let (ecg, w) = cycle_word(&p, Some(&[i, j])).map_err(|e| format!("r={r} s={s}: {e}"))?;
                    let gr = ecg.graph.graph();
                    ensure(is_uniform(&w) == Some(2), || format!("r={r} s={s}: not 2-uniform"))?;
                    let ok = represents(&w, gr).map_err(err)?.is_ok();
                    ensure(ok, || format!("r={r} s={s} antichain {{{}, {}}}", p.label(i), p.label(j)))?;
                    words += 1;
                }
            }
        }
    }
    Ok(format!("{words} words over every maximum antichain"))
}

fn suite() -> Vec<BipartiteGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    (0..500).map(|_| random_reduced_bipartite(&mut rng, 14)).collect()
}

fn criterion7(graphs: &[BipartiteGraph]) -> Check {
    let mut zeta_hits = 0;
    for (idx, g) in graphs.iter().enumerate() {
        let gr = g.graph();
        ensure(g.is_reduced() && gr.is_connected() && gr.n() <= 14, || format!("#{idx}: bad sample"))?;
        let side = better_side(g).map_err(err)?;
        let r = construct_general(g, side, None).map_err(|e| format!("#{idx}: {e}"))?;
        ensure(r.perms.len() == r.kappa0 + 1, || format!("#{idx}: {} perms, kappa0 {}", r.perms.len(), r.kappa0))?;
        ensure(represents_ok(&r.perms, gr), || format!("#{idx}: general word"))?;
        let scan = lemma_scan(&r.perms, g);
        ensure(scan.is_empty(), || format!("#{idx}: lemma scan {:?}", scan[0]))?;
        if check_zeta(g, &r.chains, side).map_err(err)? == ZetaVerdict::Holds {
            let z = construct_zeta(g, side, Some(&r.chains), false).map_err(|e| format!("#{idx}: {e}"))?;
            ensure(z.perms.len() == r.kappa0 && represents_ok(&z.perms, gr), || format!("#{idx}: zeta word"))?;
            zeta_hits += 1;
        }
        let b = bounds_report(g, false).map_err(err)?;
        ensure(b.kappa0 <= b.alpha.min(b.beta), || format!("#{idx}: kappa0 above min(alpha, beta)"))?;
    }
    Ok(format!("{} graphs, {zeta_hits} with a passing zeta check", graphs.len()))
}

fn criterion8(graphs: &[BipartiteGraph]) -> Check {
    let opts = RepresentOptions::default();
    let (mut oracle_runs, mut dilworth_runs) = (0, 0);
    for (idx, g) in graphs.iter().enumerate() {
        let n = g.graph().n();
        if n <= 9 {
            let prn = prn_of(g)?;
            let count = represent(g, &opts).map_err(err)?.perms.len();
            ensure(prn <= count, || format!("#{idx}: built {count} below prn {prn}"))?;
            let b = bounds_report(g, true).map_err(err)?;
            if b.crown_lower == Some(b.kappa0) {
                ensure(count <= prn + 1, || format!("#{idx}: built {count}, prn {prn}"))?;
            }
            oracle_runs += 1;
        }
        let mut posets = vec![
            neighborhood_poset(g, Side::A).map_err(err)?.poset,
            neighborhood_poset(g, Side::B).map_err(err)?.poset,
        ];
        if n <= 12 {
            posets.push(bipartite_poset(g));
        }
        for p in posets.iter().filter(|p| p.n() <= 12) {
            let (w, _) = width_and_cover(p);
            ensure(w == max_antichain_brute(p), || format!("#{idx}: width {w} disagrees with brute force"))?;
            dilworth_runs += 1;
        }
    }
    Ok(format!("{oracle_runs} oracle comparisons, {dilworth_runs} width checks"))
}

fn criterion9() -> Check {
    for k in 2..=4 {
        let p = prn_of(&crown_with_universal(k).map_err(err)?)?;
        ensure(p == k, || format!("crown_with_universal({k}): prn {p}"))?;
    }
    for k in 3..=4 {
        let p = prn_of(&crown_with_pendants(k, k, k).map_err(err)?)?;
        ensure(p == k, || format!("crown_with_pendants({k}, {k}, {k}): prn {p}"))?;
    }
    let ecg = extended_crown(&Poset::chain(4), None).map_err(err)?;
    let p = prn_of(&ecg.graph)?;
    let c = largest_induced_crown(&ecg.graph, CROWN_SEARCH_CAP).map_err(err)?.k;
    ensure(p == 2 && c == 1, || format!("4-chain ECG: prn {p}, crown {c}"))?;
    Ok("universal k = 2..4, pendants k = 3, 4, 4-chain ECG".into())
}

fn main() {
    let start = Instant::now();
    let graphs = suite();
    type Entry<'a> = (usize, &'static str, Box<dyn Fn() -> Check + 'a>);
    let checks: Vec<Entry> = vec![
        (1, "golden rows for three 8-vertex graphs", Box::new(criterion1)),
        (2, "worked eleven-vertex example", Box::new(criterion2)),
        (3, "crown ladder", Box::new(criterion3)),
        (4, "twin reduction beats the part-size bound", Box::new(criterion4)),
        (5, "width-two classification sweep", Box::new(criterion5)),
        (6, "cycle words", Box::new(criterion6)),
        (7, "randomized property suite", Box::new(|| criterion7(&graphs))),
        (8, "oracle consistency", Box::new(|| criterion8(&graphs))),
        (9, "family expectations", Box::new(criterion9)),
    ];
    let mut failed = 0;
    for (n, name, check) in &checks {
        let t = Instant::now();
        let (tag, detail) = match check() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {n}: {tag} {name}: {detail} ({:.1?})", t.elapsed());
    }
    println!("{} of {} criteria passed in {:.1?}", checks.len() - failed, checks.len(), start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
