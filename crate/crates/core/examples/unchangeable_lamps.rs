//! The seven-lamp, twelve-region system: one lamp can be toggled by itself,
//! the others cannot, and each refusal comes with a row certificate.

use regsel::fixtures;
use regsel::game::GameInstance;
use regsel::gf2::BitVec;

fn main() -> regsel::Result<()> {
    let game = GameInstance::new(fixtures::seven_lamp_board());
    println!("incidence matrix:");
    for row in game.matrix().to_bit_strings() {
        println!("  {row}");
    }
    for site in 0..game.num_sites() {
        let v = game.changeable(site)?;
        match (v.witness(), v.certificate()) {
            (Some(x), _) => println!("lamp {site}: changeable by regions {:?}", x.ones().collect::<Vec<_>>()),
            (_, Some(c)) => println!("lamp {site}: unchangeable, rows {:?} cancel", c.ones().collect::<Vec<_>>()),
            _ => unreachable!(),
        }
    }

    let solved = game.apply_set(&BitVec::from_indices(game.num_regions(), [8, 11]))?;
    println!("regions 8 and 11 from the start light everything: {}", solved.is_cleared());
    Ok(())
}
