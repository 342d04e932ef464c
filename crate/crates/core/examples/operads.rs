//! Set operads, the categories `F(P)` they define, and the comparison of
//! `F(As)` with noncommutative sets.

use ncprop::enumerate::nc_maps;
use ncprop::ncset::NcMap;
use ncprop::operad::{as_operad, com_operad, compose_fp, fp_to_nc, nc_to_fp, span_to_free, FpSpan};
use ncprop::ncset::FinSetMap;
use ncprop::Result;

fn main() -> Result<()> {
    let as_op = as_operad(4);
    let com = com_operad(4);
    as_op.check_axioms()?;
    println!("{}: sizes {:?}", as_op.name(), as_op.sizes());
    println!("{}: sizes {:?}", com.name(), com.sizes());

    let f = NcMap::new(3, vec![vec![3, 1], vec![2]])?;
    let g = NcMap::new(2, vec![vec![2, 1]])?;
    let (x, y) = (nc_to_fp(&f), nc_to_fp(&g));
    println!("\nf as a morphism of F(As): map {:?}, operations {:?}", x.map().values(), x.omega());
    let composite = compose_fp(&as_op, &y, &x)?;
    println!("composite in F(As) agrees with g . f: {}", fp_to_nc(&composite)? == g.compose(&f)?);

    let mut agree = 0;
    let mut total = 0;
    for f in nc_maps(3, 2) {
        for g in nc_maps(2, 2) {
            total += 1;
            if compose_fp(&as_op, &nc_to_fp(&g), &nc_to_fp(&f))? == nc_to_fp(&g.compose(&f)?) {
                agree += 1;
            }
        }
    }
    println!("{agree}/{total} composites 3 -> 2 -> 2 agree");

    let word_span = FpSpan::new(nc_to_fp(&NcMap::new(3, vec![vec![2, 3, 1]])?), FinSetMap::new(2, vec![1, 2, 2])?)?;
    println!("\nover As:  {}", span_to_free(&as_op, &word_span)?);
    let bag = FpSpan::new(
        ncprop::operad::FPMorphism::new(&com, FinSetMap::new(1, vec![1, 1, 1])?, vec![0])?,
        FinSetMap::new(2, vec![2, 1, 2])?,
    )?;
    println!("over Com: {}", span_to_free(&com, &bag)?);
    Ok(())
}
