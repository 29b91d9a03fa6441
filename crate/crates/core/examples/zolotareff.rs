//! Signs of multiplication permutations and the Jacobi symbol.
use christoffel::permsign::{jacobi, zolotareff, Permutation};

fn main() -> christoffel::Result<()> {
    let p = Permutation::multiplication(5, 13)?;
    println!(
        "x -> 5x on Z/13: {} (type {})",
        p.cycle_notation(),
        p.cycle_type()
    );
    println!(
        "sign {:+}, by inversions {:+}",
        p.sign(),
        p.sign_by_inversions()
    );

    println!("  r | (r/15)_Z (r/15)_J");
    for r in [1, 2, 4, 7, 8, 11, 13, 14, -1] {
        println!("{r:>3} | {:+8}  {:+8}", zolotareff(r, 15)?, jacobi(r, 15)?);
    }
    println!("(3/10)_Z = {:+}", zolotareff(3, 10)?);
    Ok(())
}
