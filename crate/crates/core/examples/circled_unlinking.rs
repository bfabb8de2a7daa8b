//! Unlinking numbers of link diagrams: classical crossing changes, region
//! crossing changes, and region crossing changes on a diagram cut by a
//! circle.

use regsel::fixtures;
use regsel::unlink::{
    circle_family, classical_unlink_number, over_circles, proper_link_check, region_unlink_number, ChangeTable,
};

const BUDGET: usize = 6;

fn main() -> regsel::Result<()> {
    println!("{:<16} {:>2} {:>6} {:>4} {:>4} {:>6}", "diagram", "c", "proper", "u", "u_R", "circled");
    for name in fixtures::link_names() {
        let d = fixtures::link(name);
        let table = ChangeTable::build(d.pd())?;
        let u = classical_unlink_number(&table, BUDGET).number;
        let plain = region_unlink_number(&table, &d, BUDGET).number;
        let circled = over_circles(&table, &circle_family(&d), BUDGET).and_then(|s| s.best.number);
        let show = |n: Option<usize>| n.map_or("-".to_string(), |n| n.to_string());
        println!(
            "{name:<16} {:>2} {:>6} {:>4} {:>4} {:>6}",
            d.crossing_count(),
            proper_link_check(d.pd()).proper,
            show(u),
            show(plain),
            show(circled)
        );
    }
    Ok(())
}
