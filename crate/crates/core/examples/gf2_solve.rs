//! Solving a small system over GF(2): a particular solution, the kernel,
//! and the certificate returned when there is none.

use regsel::gf2::{min_weight_solution, solve, BitVec, Gf2Matrix};

fn main() -> regsel::Result<()> {
    let a = Gf2Matrix::from_bit_strings(&["1100", "0110", "0011"])?;
    let b = BitVec::parse_bit_string("101")?;
    let out = solve(&a, &b)?;
    let x = out.particular.expect("consistent");
    println!("x = {}  (A x = {})", x.to_bit_string(), a.mul_vec(&x)?.to_bit_string());
    for k in &out.kernel_basis {
        println!("kernel vector {}", k.to_bit_string());
    }
    if let Some(best) = min_weight_solution(&a, &b, 4)? {
        println!("lightest solution {} (weight {})", best.to_bit_string(), best.weight());
    }

    // rows 0 and 1 are equal but ask for different values
    let a = Gf2Matrix::from_bit_strings(&["101", "101", "011"])?;
    let out = solve(&a, &BitVec::parse_bit_string("100")?)?;
    let rows: Vec<usize> = out.certificate.expect("inconsistent").ones().collect();
    println!("no solution: rows {rows:?} add up to 0 = 1");
    Ok(())
}
