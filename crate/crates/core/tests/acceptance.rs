//! One line per headline result, then a single assertion over all of them.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use regsel::diagram::{BoardSource, LampBoard, LinkDiagram};
use regsel::fixtures;
use regsel::game::GameInstance;
use regsel::gf2::BitVec;
use regsel::tangle::Tangle;
use regsel::unlink::{
    circle_family, circled_unlink_number, classical_unlink_number, gather, neighborhood_circle, over_circles,
    proper_link_check, replay, simplify, ChangeTable, Site,
};

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn link_board(name: &str) -> GameInstance {
    GameInstance::new(LampBoard::new(BoardSource::Link(fixtures::link(name))))
}

fn set(n: usize, one_based: &[usize]) -> BitVec {
    BitVec::from_indices(n, one_based.iter().map(|i| i - 1))
}

fn ones(v: &BitVec) -> Vec<usize> {
    v.ones().collect()
}

fn seven_lamp_system() -> Check {
    let start = Instant::now();
    // x_j per equation, 1-based as printed
    let printed: [&[usize]; 7] = [
        &[1, 5, 7, 8],
        &[4, 5, 6, 9, 10],
        &[3, 6, 10, 11],
        &[1, 2, 4, 5],
        &[2, 3, 4, 6],
        &[7, 8, 9, 12],
        &[9, 10, 11, 12],
    ];
    let game = GameInstance::new(fixtures::seven_lamp_board());
    let a = game.matrix();
    ensure!((a.rows(), a.cols()) == (7, 12), "matrix is {}x{}", a.rows(), a.cols());
    for (i, row) in printed.iter().enumerate() {
        ensure!(ones(a.row(i)) == ones(&set(12, row)), "equation v{} differs: {:?}", i + 1, ones(a.row(i)));
    }
    let v1 = game.changeable(0).map_err(|e| e.to_string())?;
    let cert = v1.certificate().ok_or("v1 should be unchangeable")?;
    ensure!(ones(cert) == ones(&set(7, &[1, 3, 4, 5, 6, 7])), "certificate rows {:?}", ones(cert));
    ensure!(a.left_mul(cert).unwrap().is_zero() && cert.get(0), "certificate does not cancel");
    ensure!(game.changeable(1).unwrap().is_solved(), "v2 should be changeable");
    for regions in [&[9, 12][..], &[2, 5, 6, 7, 9, 11]] {
        let effect = game.effect(&set(12, regions)).unwrap();
        ensure!(ones(&effect) == vec![1], "regions {regions:?} switch lamps {:?}", ones(&effect));
    }
    ensure!(start.elapsed() < Duration::from_secs(1), "took {:?}", start.elapsed());
    Ok(())
}

fn every_knot_crossing_changeable() -> Check {
    let start = Instant::now();
    let knots: Vec<&str> = fixtures::knot_names().collect();
    ensure!(knots.len() >= 10, "only {} knot fixtures", knots.len());
    let mut cross_checked = 0;
    for name in knots {
        let d = fixtures::link(name);
        ensure!((3..=9).contains(&d.crossing_count()), "{name} has {} crossings", d.crossing_count());
        let game = link_board(name);
        for c in 0..d.crossing_count() {
            let v = game.changeable(c).unwrap();
            let x = v.witness().ok_or(format!("{name}: crossing {c} reported unchangeable"))?;
            ensure!(ones(&game.effect(x).unwrap()) == vec![c], "{name}: witness for {c} is wrong");
        }
        let columns = common::face_columns(d.pd());
        if columns.len() <= 14 {
            let reach = common::reachable(&columns);
            for c in 0..d.crossing_count() {
                ensure!(reach.contains(&(1 << c)), "{name}: enumeration cannot reach crossing {c}");
            }
            cross_checked += 1;
        }
    }
    ensure!(cross_checked >= 10, "only {cross_checked} fixtures cross-checked");
    ensure!(start.elapsed() < Duration::from_secs(60), "took {:?}", start.elapsed());
    Ok(())
}

fn two_component_crossings() -> Check {
    let links: Vec<&str> =
        fixtures::link_names().filter(|n| fixtures::link(n).num_components() == 2).collect();
    ensure!(links.len() >= 5, "only {} two-component fixtures", links.len());
    for name in links {
        let d = fixtures::link(name);
        let (_, strands) = common::strand_components(d.pd());
        let game = link_board(name);
        let reach = common::reachable(&common::face_columns(d.pd()));
        for (c, &(under, over)) in strands.iter().enumerate() {
            let v = game.changeable(c).unwrap();
            if under != over {
                let cert = v.certificate().ok_or(format!("{name}: mixed crossing {c} reported changeable"))?;
                ensure!(cert.get(c) && game.matrix().left_mul(cert).unwrap().is_zero(), "{name}: bad certificate for {c}");
                ensure!(!reach.contains(&(1 << c)), "{name}: enumeration reaches mixed crossing {c}");
            } else {
                let x = v.witness().ok_or(format!("{name}: self-crossing {c} reported unchangeable"))?;
                ensure!(ones(&game.effect(x).unwrap()) == vec![c], "{name}: witness for {c} is wrong");
                ensure!(reach.contains(&(1 << c)), "{name}: enumeration misses self-crossing {c}");
            }
        }
    }
    Ok(())
}

fn adjacent_pairs(d: &LinkDiagram) -> Vec<(usize, usize)> {
    let map = d.map();
    let mut pairs: Vec<(usize, usize)> = (0..map.num_edges())
        .filter_map(|e| {
            let (a, b) = (map.region_of_dart(2 * e)?, map.region_of_dart(2 * e + 1)?);
            (a != b).then_some((a, b))
        })
        .flat_map(|(a, b)| [(a, b), (b, a)])
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

fn constrained_sets_on_random_projections() -> Check {
    let knots = common::random_knots(200, 9, 0x5eed);
    for (i, pd) in knots.iter().enumerate() {
        let d = LinkDiagram::new(pd.clone()).map_err(|e| format!("projection {i}: {e}"))?;
        ensure!(d.num_components() == 1, "projection {i} is not a knot");
        let game = GameInstance::new(LampBoard::new(BoardSource::Link(d.clone())));
        let n = d.crossing_count();
        let is = |x: &BitVec, target: &[usize]| ones(&game.effect(x).unwrap()) == target;
        for (r1, r2) in adjacent_pairs(&d) {
            let s = game.constrained_ineffective_set(&[r1, r2], &[]).unwrap().ok_or(format!("{i}: no ineffective set avoiding {r1},{r2}"))?;
            ensure!(is(&s, &[]) && !s.get(r1) && !s.get(r2), "{i}: ineffective set avoiding {r1},{r2} is wrong");

            let solver = game.constrained_ineffective_set(&[r2], &[r1]).unwrap();
            let built = game.symmetric_difference_ineffective_set(r1, r2).unwrap();
            ensure!(solver.is_some() == built.is_some(), "{i}: constructions disagree on ({r1},{r2})");
            let s = built.ok_or(format!("{i}: no ineffective set with {r1} without {r2}"))?;
            ensure!(is(&s, &[]) && s.get(r1) && !s.get(r2), "{i}: symmetric difference set is wrong");

            for c in 0..n {
                let s = game.constrained_changing_set(c, &[r1, r2], &[]).unwrap().ok_or(format!("{i}: crossing {c} avoiding {r1},{r2}"))?;
                ensure!(is(&s, &[c]) && !s.get(r1) && !s.get(r2), "{i}: changing set for {c} avoiding {r1},{r2} is wrong");

                let s = game.constrained_changing_set(c, &[r2], &[r1]).unwrap().ok_or(format!("{i}: crossing {c} with {r1} without {r2}"))?;
                ensure!(is(&s, &[c]) && s.get(r1) && !s.get(r2), "{i}: compulsory changing set for {c} is wrong");

                let s = game.corrected_changing_set(c, r1, r2).unwrap().ok_or(format!("{i}: correction failed for {c}"))?;
                let applied = game.apply_set(&s).unwrap();
                let mut expected = game.lamps().clone();
                expected.flip(game.board().site_index(c).unwrap());
                ensure!(applied.lamps() == &expected && s.get(r1) && !s.get(r2), "{i}: corrected set for {c} is wrong");
            }
        }
    }
    Ok(())
}

fn lamp_linking_parity() -> Check {
    let mut even_seen = 0;
    for name in fixtures::fold_names() {
        let Ok(t) = Tangle::tanglize(&fixtures::pattern(name)) else { continue };
        let sites = t.sites().len();
        let states: Vec<BitVec> = (0..16u64)
            .map(|seed| BitVec::from_bools(&(0..sites).map(|s| (seed.wrapping_mul(2654435761) >> (s % 32)) & 1 == 1).collect::<Vec<_>>()))
            .collect();
        for k in t.even_components() {
            even_seen += 1;
            for lamps in &states {
                let before = t.lamp_linking(k, lamps).unwrap().twice_value;
                for r in 0..t.incidence_matrix().cols() {
                    let after = t.lamp_linking(k, &lamps.xor(&t.incidence_matrix().column(r))).unwrap().twice_value;
                    ensure!((after - before) % 4 == 0, "{name}: region {r} moves l({}) by an odd amount", t.components()[k].name());
                }
            }
        }
    }
    ensure!(even_seen > 0, "no even components among the fixtures");

    let board = fixtures::lamp_linking_board();
    let t = Tangle::from_source(board.source()).unwrap();
    let closed: Vec<usize> = t.closed_components().map(|c| c.id).collect();
    ensure!(closed.len() == 1, "expected one closed strand, got {}", closed.len());
    let l = t.lamp_linking(closed[0], board.lamps()).unwrap();
    let mut f: Vec<i8> = l.contributions.iter().copied().filter(|&c| c != 0).collect();
    f.sort_unstable();
    ensure!(f == [-1, -1, 1, 1], "contributions {:?}", l.contributions);
    ensure!(l.twice_value == 0 && l.value == 0.0, "lamp-linking number {}", l.value);
    Ok(())
}

fn even_component_classification() -> Check {
    let expected: [(&str, &[&str]); 3] = [("contact_t1", &[]), ("contact_t2", &[]), ("contact_t3", &["K0"])];
    for (name, even) in expected {
        let t = Tangle::generalized_tanglize(&fixtures::pattern(name)).map_err(|e| format!("{name}: {e}"))?;
        let got: Vec<String> = t.even_components().iter().map(|&k| t.components()[k].name()).collect();
        ensure!(got == even, "{name}: even components {got:?}");
    }
    Ok(())
}

fn circled_unlinking() -> Check {
    let start = Instant::now();
    let hopf = fixtures::link("link_hopf");
    let table = ChangeTable::build(hopf.pd()).unwrap();
    let small = neighborhood_circle(&hopf, &[Site::Crossing { crossing: 0 }]).map_err(|e| e.to_string())?;
    ensure!(small.placement().transits.len() == 4, "crossing circle meets {} edges", small.placement().transits.len());
    let r = circled_unlink_number(&table, &small, 4);
    ensure!(r.number == Some(1) && r.exact, "Hopf with the crossing circle: {:?}", r.number);

    let d = fixtures::link("link_4_2_1");
    let table = ChangeTable::build(d.pd()).unwrap();
    let u = classical_unlink_number(&table, 4);
    ensure!(u.number == Some(2) && u.exact, "4_2_1 classical {:?} exact {}", u.number, u.exact);
    // independent lower bound: one change leaves the linking number odd
    for c in 0..d.crossing_count() {
        let parity = common::linking_parity(&d.pd().with_changes(&[c]));
        ensure!(parity[0][1] == 1, "4_2_1 with crossing {c} changed has even linking");
    }
    let best = over_circles(&table, &circle_family(&d), 4).ok_or("no circle unlinks 4_2_1")?;
    ensure!(best.best.number == Some(1), "4_2_1 circled {:?}", best.best.number);

    for name in fixtures::pd_names() {
        let d = fixtures::link(name);
        let table = ChangeTable::build(d.pd()).unwrap();
        let u = classical_unlink_number(&table, d.crossing_count()).number.ok_or(format!("{name}: not unlinked"))?;
        let Some(circled) = over_circles(&table, &circle_family(&d), u).and_then(|s| s.best.number) else {
            return Err(format!("{name}: circled search failed within u = {u}"));
        };
        ensure!(circled <= u && 2 * u <= d.crossing_count(), "{name}: {circled} <= {u} <= {}/2 fails", d.crossing_count());
    }
    ensure!(start.elapsed() < Duration::from_secs(300), "took {:?}", start.elapsed());
    Ok(())
}

fn spur_end_to_end() -> Check {
    let mut done = 0;
    for name in ["link_4_2_1", "link_borromean", "knot_5_1", "link_6_2_3", "knot_7_1"] {
        let d = fixtures::link(name);
        let table = ChangeTable::build(d.pd()).unwrap();
        let u = classical_unlink_number(&table, 4);
        ensure!(u.number.unwrap_or(0) >= 2, "{name}: witness too small to need gathering");
        let g = gather(&d, &u.crossings, 0).map_err(|e| format!("{name}: {e}"))?;
        ensure!(g.diagram.pd().linking_matrix() == d.pd().linking_matrix(), "{name}: spur changed linking numbers");
        let transits: usize = g.moves.iter().map(|(_, p)| p.edges.len()).sum();
        ensure!(g.diagram.crossing_count() == d.crossing_count() + 4 * transits, "{name}: crossing count");
        let toggled: Vec<usize> = g.circled.incidence_matrix().column(g.region).ones().collect();
        ensure!(toggled == u.crossings, "{name}: region {} toggles {toggled:?}", g.region);
        let changed = g.diagram.pd().with_changes(&toggled);
        let cert = simplify(&changed);
        ensure!(cert.is_trivial(), "{name}: one region move left {} crossings", cert.remaining_crossings);
        let end = replay(&changed, &cert.moves).map_err(|e| e.to_string())?;
        ensure!(end.crossings.is_empty() && end.loops == d.num_components(), "{name}: replay ends elsewhere");
        done += 1;
    }
    ensure!(done >= 3, "only {done} fixtures");
    Ok(())
}

fn proper_links() -> Check {
    for (name, proper) in [("link_hopf", false), ("link_borromean", true), ("link_7_2_1", false)] {
        let pd = fixtures::link(name).pd().clone();
        let report = proper_link_check(&pd);
        ensure!(report.proper == proper, "{name}: reported proper = {}", report.proper);
        let parity = common::linking_parity(&pd);
        let independent = parity.iter().all(|row| row.iter().map(|&p| p as usize).sum::<usize>() % 2 == 0);
        ensure!(independent == proper, "{name}: mixed-crossing count disagrees");
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("seven-lamp system, certificate and printed solutions", seven_lamp_system),
        ("every knot crossing changeable", every_knot_crossing_changeable),
        ("mixed crossings unchangeable, self-crossings changeable", two_component_crossings),
        ("constrained and ineffective sets on 200 random projections", constrained_sets_on_random_projections),
        ("lamp-linking parity and the zero example", lamp_linking_parity),
        ("even components of the three contact tangles", even_component_classification),
        ("circled unlinking numbers", circled_unlinking),
        ("gathering crossings into one circle", spur_end_to_end),
        ("proper link check", proper_links),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(()) => println!("PASS  {name} ({:.2?})", start.elapsed()),
            Err(why) => {
                println!("FAIL  {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed: {failed:?}");
}
