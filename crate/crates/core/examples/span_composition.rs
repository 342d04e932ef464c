//! Spans of noncommutative sets, their composition through pullbacks, and the
//! closed form for composing endomorphisms `(n, sigma)` of the object 1.

use ncprop::doublecat::{pullback, DoubleKind};
use ncprop::ncset::{NcMap, Permutation};
use ncprop::qprop::{endo_from_span, endo_to_span, phi_compose, transpose_perm, EndoPair, Span};
use ncprop::Result;

fn main() -> Result<()> {
    let mu = NcMap::new(2, vec![vec![1, 2]])?;
    let swap_mu = NcMap::new(2, vec![vec![2, 1]])?;
    let square = pullback(DoubleKind::Fas, &mu, &swap_mu)?;
    println!("pullback of mu along the twisted mu:");
    println!("  f1   = {:?}", square.f1.fibers());
    println!("  phi1 = {:?}", square.phi1.fibers());
    println!("  elementary: {}", square.is_elementary());

    // comultiplication followed by multiplication on the object 1
    let delta = Span::new(DoubleKind::Fas, mu.clone(), NcMap::identity(2))?;
    let mult = Span::new(DoubleKind::Fas, NcMap::identity(2), mu)?;
    let composite = mult.after(&delta)?;
    println!("\nmu . delta has apex {} and is {:?}", composite.mid(), endo_from_span(&composite)?);

    let sigma = Permutation::new(vec![2, 1])?;
    let tau = Permutation::new(vec![1, 3, 2])?;
    let by_pullback = endo_from_span(&endo_to_span(&EndoPair::new(sigma.clone())).after(&endo_to_span(&EndoPair::new(tau.clone())))?)?;
    let closed = phi_compose(&sigma, &tau);
    println!("\n({}, {sigma}) . ({}, {tau})", sigma.len(), tau.len());
    println!("  by pullback : {}", by_pullback.sigma);
    println!("  closed form : {closed}");
    println!("  transpose(2, 3) = {}", transpose_perm(2, 3));
    Ok(())
}
