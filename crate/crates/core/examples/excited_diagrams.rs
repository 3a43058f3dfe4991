//! Excited diagrams of a skew shape, their counts, and the flagged tableau
//! and lattice path encodings of each one.

use skewhook::excited::{
    count_excited, enumerate_excited, excited_to_flagged, excited_to_paths, CountMethod, Variant,
};
use skewhook::shapes::SkewShape;

fn draw(shape: &SkewShape, cells: &[(usize, usize)]) -> String {
    let lam = shape.outer();
    let mut out = String::new();
    for i in 1..=lam.len() {
        for j in 1..=lam.part(i) {
            out.push(if cells.contains(&(i, j)) { '#' } else { '.' });
        }
        out.push('\n');
    }
    out
}

fn main() -> skewhook::Result<()> {
    let shape: SkewShape = "[4,4,3,2]/[2,1]".parse()?;
    let diagrams = enumerate_excited(&shape, Variant::SE);
    println!("{shape}: {} excited diagrams", diagrams.len());
    println!("  determinant count: {}", count_excited(&shape, CountMethod::Determinant)?);

    for d in diagrams.iter().take(4) {
        print!("{}", draw(&shape, d.cells()));
        let t = excited_to_flagged(d)?;
        println!("  flagged tableau: {t:?}");
        let p = excited_to_paths(d)?;
        println!("  paths: {p:?}\n");
    }

    let slim: SkewShape = "[5,5,5]/[2,1]".parse()?;
    println!(
        "{slim} is slim: {} diagrams, hook-content product {}",
        enumerate_excited(&slim, Variant::SE).len(),
        count_excited(&slim, CountMethod::HookContent)?
    );
    Ok(())
}
