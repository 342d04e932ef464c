//! Generalized Adams operations `psi(n, sigma)` evaluated exactly on the
//! builtin bialgebras.

use ncprop::bialg::{builtin, psi, psi_power, LinMap};
use ncprop::enumerate::permutations;
use ncprop::Result;

fn show(m: &LinMap) {
    for row in m.to_dense() {
        let cells: Vec<String> = row.iter().map(|x| format!("{:>4}", x.to_string())).collect();
        println!("    {}", cells.join(""));
    }
}

fn main() -> Result<()> {
    for name in ["c3", "sweedler"] {
        let b = builtin(name)?;
        println!("{name} (dimension {})", b.dim());
        for sigma in permutations(2) {
            println!("  psi(2, {sigma})");
            show(&psi(2, &sigma, &b)?);
        }
    }

    let s3 = builtin("s3")?;
    let p2 = psi_power(2, &s3);
    let p3 = psi_power(3, &s3);
    println!("s3: psi^2 . psi^3 == psi^6: {}", p2.compose(&p3)? == psi_power(6, &s3));
    println!("s3: psi^7 is the identity: {}", psi_power(7, &s3).is_identity());
    Ok(())
}
