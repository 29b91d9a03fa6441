//! Symmetric discrete interval exchanges, their encodings, restriction,
//! and perfectly clustering Lyndon words.
use christoffel::iet::{
    build_sigma, cyclic_restriction, is_circular, pak_redlich_circular, pc_lyndon_by_encoding,
    pc_lyndon_by_filter, restriction_word_chain, standard_encoding, Composition,
};

fn main() -> christoffel::Result<()> {
    let p = build_sigma(&Composition::new(vec![2, 2, 5])?)?;
    println!("(2,2,5): {}", p.sigma().cycle_notation());
    println!(
        "circular: {}, gcd criterion: {}",
        is_circular(&p),
        pak_redlich_circular(2, 2, 5)
    );
    println!(
        "standard encoding: {}",
        standard_encoding(&p, &['a', 'b', 'c'])?
    );

    let r = cyclic_restriction(&build_sigma(&Composition::new(vec![4, 7])?)?, 10)?;
    println!(
        "restriction of (4,7) to 10 points: composition {:?}",
        r.composition().parts()
    );

    for link in restriction_word_chain(4, 7, ['a', 'b', 'c'])? {
        match link.merged_at {
            Some(pos) => println!("  -> {} (merged at {pos})", link.word),
            None => println!("  {}", link.word),
        }
    }

    let by_filter = pc_lyndon_by_filter(7, 3)?;
    let by_encoding = pc_lyndon_by_encoding(7, 3)?;
    println!(
        "PC Lyndon words of length 7 over 3 letters: {}",
        by_filter.len()
    );
    println!(
        "same set from circular compositions: {}",
        by_filter == by_encoding
    );
    Ok(())
}
