//! The Fibonacci slope: the word chain, predicted determinantal vectors,
//! and the sign of multiplication by F_{m-2} modulo F_m.
use christoffel::fibonacci::{fib_detvec_prediction, fib_sign, fib_word_chain, gcd_lemma_check};

fn main() -> christoffel::Result<()> {
    for (nu, w) in fib_word_chain(6).iter().enumerate() {
        println!("w_{nu} = {w}");
    }

    for n in [4, 7, 12] {
        let p = fib_detvec_prediction(n)?;
        println!(
            "n = {n}: nu = {}, composition {:?} over {:?}",
            p.nu, p.composition, p.alphabet
        );
    }

    for m in 3..=14 {
        let s = fib_sign(m)?;
        println!(
            "m = {m:>2}: case {} sign {:+} type {}",
            s.case, s.sign, s.cycle_type
        );
    }

    let all = (0..=8).all(|k| gcd_lemma_check(k).holds());
    println!("gcd identities hold for k = 0..8: {all}");
    Ok(())
}
