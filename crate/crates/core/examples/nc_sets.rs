//! Maps of finite sets whose fibers carry a total order, their composition
//! and how many of them there are.

use ncprop::enumerate::{nc_maps, set_maps};
use ncprop::ncset::{NcMap, Permutation};
use ncprop::Result;

fn main() -> Result<()> {
    // 3 -> 2 sending 2 and 1 (in that order) to 1, and 3 to 2
    let f = NcMap::new(3, vec![vec![2, 1], vec![3]])?;
    // 2 -> 1 with the fiber ordered 2 before 1
    let g = NcMap::new(2, vec![vec![2, 1]])?;
    let gf = g.compose(&f)?;
    println!("f      = {:?}", f.fibers());
    println!("g      = {:?}", g.fibers());
    println!("g . f  = {:?}", gf.fibers());
    println!("underlying map of g . f: {:?}", gf.underlying().values());

    let sigma = Permutation::new(vec![3, 1, 2])?;
    println!("fold of {sigma}: {:?}", NcMap::fold(&sigma).fibers());

    println!("\n n  m  plain  ordered");
    for n in 0..=4 {
        for m in 1..=3 {
            println!("{n:>2} {m:>2} {:>6} {:>8}", set_maps(n, m).len(), nc_maps(n, m).len());
        }
    }
    Ok(())
}
