mod common;

use regsel::diagram::{BoardSource, LampBoard, LinkDiagram};
use regsel::fixtures;
use regsel::game::GameInstance;
use regsel::gf2::BitVec;

fn random_lamps(n: usize, seed: u64) -> BitVec {
    BitVec::from_bools(&(0..n).map(|i| (seed.wrapping_mul(0x9e3779b97f4a7c15) >> (i % 60)) & 1 == 1).collect::<Vec<_>>())
}

#[test]
fn following_hints_clears_knot_boards() {
    for (i, pd) in common::random_knots(40, 10, 7).into_iter().enumerate() {
        let board = LampBoard::new(BoardSource::Link(LinkDiagram::new(pd).unwrap()));
        let n = board.lamp_sites().len();
        let board = board.with_lamps(random_lamps(n, i as u64)).unwrap();
        let mut game = GameInstance::new(board);
        let limit = game.num_regions();
        let mut moves = 0;
        while !game.is_cleared() {
            let hint = game.solve_game().unwrap().witness().expect("knot boards are solvable").ones().next().unwrap();
            game = game.apply_rcc(hint).unwrap();
            moves += 1;
            assert!(moves <= limit, "projection {i}: more than {limit} hints");
        }
    }
}

#[test]
fn state_is_a_function_of_the_history() {
    let board = fixtures::seven_lamp_board();
    let history = [3, 8, 3, 11, 0, 5];
    let mut live = GameInstance::new(board.clone());
    for &r in &history {
        live = live.apply_rcc(r).unwrap();
    }
    let mut replayed = GameInstance::new(board.clone());
    for &r in live.history() {
        replayed = replayed.apply_rcc(r).unwrap();
    }
    assert_eq!(replayed.lamps(), live.lamps());
    // playing 3 twice cancels
    let set = BitVec::from_indices(12, [8, 11, 0, 5]);
    assert_eq!(GameInstance::new(board).apply_set(&set).unwrap().lamps(), live.lamps());
}

#[test]
fn winning_line_on_the_seven_lamp_board() {
    let game = GameInstance::new(fixtures::seven_lamp_board());
    assert!(!game.is_cleared());
    let won = game.apply_rcc(8).unwrap().apply_rcc(11).unwrap();
    assert!(won.is_cleared());
}

#[test]
fn unsolvable_diamond_has_a_certificate() {
    let game = GameInstance::new(fixtures::unsolvable_diamond_board());
    let v = game.solve_game().unwrap();
    let cert = v.certificate().expect("unsolvable");
    assert!(game.matrix().left_mul(cert).unwrap().is_zero());
    // the certificate rows cover an odd number of dark lamps
    let dark = cert.ones().filter(|&s| !game.lamps().get(s)).count();
    assert_eq!(dark % 2, 1);
}
