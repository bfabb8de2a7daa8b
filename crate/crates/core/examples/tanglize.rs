//! Reading a crease pattern as a tangle: strands through its degree-four
//! vertices, the even components, and the lamp-linking numbers.

use regsel::fixtures;
use regsel::tangle::Tangle;

fn main() -> regsel::Result<()> {
    for name in ["x_pattern", "diamond", "contact_t1", "contact_t2", "contact_t3"] {
        let pattern = fixtures::pattern(name);
        let t = Tangle::generalized_tanglize(&pattern)?;
        let names: Vec<String> = t.components().iter().map(|c| c.name()).collect();
        let even: Vec<String> = t.even_components().iter().map(|&k| t.components()[k].name()).collect();
        println!("{name}: strands {names:?}, even {even:?}");
    }

    let t = Tangle::tanglize(&fixtures::pattern("diamond"))?;
    let poset = t.reducible_poset();
    println!("diamond: {} reducible crossings, order {:?}", poset.crossings.len(), poset.relation);
    Ok(())
}
