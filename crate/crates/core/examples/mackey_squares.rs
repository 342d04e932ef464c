//! The Mackey property: every pullback square of noncommutative sets must
//! evaluate to a commuting square. It holds on bialgebras and fails on an
//! algebra and coalgebra whose structures are not compatible.

use ncprop::bialg::{builtin, mackey_check, mackey_sides};
use ncprop::verify::{counit_product_square, mackey_family};
use ncprop::Result;

fn main() -> Result<()> {
    let family = mackey_family(2);
    let elementary = family.iter().filter(|sq| sq.is_elementary()).count();
    println!("{} squares with all sets of size <= 2, {elementary} elementary", family.len());

    for name in ["sweedler", "s3dual", "nonbialg"] {
        let b = builtin(name)?;
        let mut failures = 0;
        for square in &family {
            if !mackey_check(square, &b)? {
                failures += 1;
            }
        }
        println!("{name:>9}: {failures} failing squares");
    }

    let b = builtin("nonbialg")?;
    let square = counit_product_square();
    let (left, right) = mackey_sides(&square, &b)?;
    println!("\nnonbialg on the counit-of-product square (elementary: {}):", square.is_elementary());
    println!("  one way round   {:?}", left.to_dense());
    println!("  other way round {:?}", right.to_dense());
    Ok(())
}
