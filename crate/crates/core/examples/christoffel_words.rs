//! Lower and upper Christoffel words, their factorizations and the
//! perfect-clustering test.
use christoffel::words::{lower_christoffel, upper_christoffel, SlopeRatio, Word};

fn main() -> christoffel::Result<()> {
    let slope = SlopeRatio::new(2, 5)?;
    let lower = lower_christoffel(slope, (0u8, 1u8))?;
    let upper = upper_christoffel(slope, ('a', 'b'))?;
    println!("lower word of slope {slope}: {lower}");
    println!("upper word over a<b: {upper}");

    let (u, v) = lower.standard_factorization()?;
    println!("standard factorization: ({u})({v})");
    let (p, q) = lower.palindromic_factorization()?;
    println!("palindromic factorization: ({p})({q})");

    println!("BW rows:");
    for row in lower.bw_rows()? {
        println!("  {row}");
    }

    for s in ["acbcbcacc", "abcabc", "abac"] {
        let w = Word::from(s);
        match w.is_perfectly_clustering() {
            Ok(pc) => println!("{s}: perfectly clustering = {pc}"),
            Err(e) => println!("{s}: {e}"),
        }
    }
    Ok(())
}
