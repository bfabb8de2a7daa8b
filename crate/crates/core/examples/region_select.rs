//! Playing Region Select on the trefoil: switch one lamp off, ask the
//! solver which regions light it again, and replay them.

use regsel::diagram::{BoardSource, LinkDiagram};
use regsel::fixtures::board_with_off;
use regsel::game::GameInstance;

fn main() -> regsel::Result<()> {
    let trefoil = LinkDiagram::parse("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]")?;
    let game = GameInstance::new(board_with_off(BoardSource::Link(trefoil), &[0]));
    println!("{} lamps over {} regions, lamps {}", game.num_sites(), game.num_regions(), game.lamps().to_bit_string());

    let verdict = game.solve_game()?;
    let regions: Vec<usize> = verdict.witness().expect("knot diagrams are always solvable").ones().collect();
    println!("select regions {regions:?}");

    let mut g = game;
    for r in regions {
        g = g.apply_rcc(r)?;
        println!("  after region {r}: {}", g.lamps().to_bit_string());
    }
    assert!(g.is_cleared());

    for site in 0..g.num_sites() {
        let v = g.changeable(site)?;
        println!("lamp {site} alone: {:?}", v.witness().map(|x| x.ones().collect::<Vec<_>>()));
    }
    Ok(())
}
