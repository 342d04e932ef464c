//! Homomorphisms of free groups evaluated on cocommutative Hopf algebras, and
//! the symmetric group acting on tensor powers through them.

use ncprop::bialg::builtin;
use ncprop::enumerate::permutations;
use ncprop::groupword::{eval_hom_on_hopf, symmetric_action, xi, GroupHom, GroupWord};
use ncprop::Result;

fn main() -> Result<()> {
    let s3 = builtin("s3")?;

    let mult = GroupHom::parse(1, 2, &["x1 x2"])?;
    let inverse = GroupHom::parse(1, 1, &["x1^-1"])?;
    let product = eval_hom_on_hopf(&mult, &s3)?;
    println!("x1 -> x1 x2 evaluates to a map from tensor degree {} to {}", product.dom(), product.cod());
    let antipode = eval_hom_on_hopf(&inverse, &s3)?;
    println!("x1 -> x1^-1 evaluates to an involution: {}", antipode.compose(&antipode)?.is_identity());

    let w = GroupWord::generator(1).mul(&GroupWord::generator(2)).mul(&GroupWord::generator(1).inverse());
    println!("\nword {w} has length {}", w.len());

    let c3 = builtin("c3")?;
    let perms = permutations(3);
    for sigma in &perms {
        let words: Vec<String> = xi(2, sigma)?.images().iter().map(|x| x.to_string()).collect();
        println!("xi({sigma}) : {}", words.join(", "));
    }
    let mut multiplicative = true;
    for a in &perms {
        for b in &perms {
            let together = symmetric_action(2, &a.compose(b)?, &c3)?;
            let apart = symmetric_action(2, a, &c3)?.compose(&symmetric_action(2, b, &c3)?)?;
            multiplicative &= together == apart;
        }
    }
    println!("S_3 acts on the 9-dimensional square of c3: {multiplicative}");
    Ok(())
}
