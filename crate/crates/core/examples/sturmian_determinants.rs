//! Determinantal vectors of Sturmian factor matrices: exact minors, the
//! closed form, and the merge chain between consecutive lengths.
use christoffel::sturmian::{
    determinantal_vector_closed, determinantal_vector_oracle, factor_matrix, g_chain,
    special_factor, vector_merge_step, SturmianSlope,
};

fn main() -> christoffel::Result<()> {
    let s = SturmianSlope::from_quotients(&[2, 1, 2])?;
    let g = factor_matrix(&s, 10)?;
    println!("G_10 (factors of length 10, decreasing):");
    for row in g.row_strings() {
        println!("  {row}");
    }

    let oracle = determinantal_vector_oracle(&g)?;
    let closed = determinantal_vector_closed(&s, 10)?;
    println!("V_10 by minors:      {:?}", oracle.components);
    println!("V_10 by closed form: {:?}", closed.components);
    if let Some(ctx) = &closed.context {
        println!(
            "  composition {:?} over {:?}, epsilon {:+}",
            ctx.composition, ctx.alphabet, ctx.epsilon
        );
    }

    let mut v = oracle;
    for n in (6..10).rev() {
        v = vector_merge_step(&v)?;
        println!("V_{n}: {:?}", v.components);
    }

    let hs: Vec<usize> = g_chain(&s, 4)?.iter().filter_map(|st| st.h).collect();
    println!("deleted rows along the chain: {hs:?}");

    let sp = special_factor(&s, 5)?;
    println!(
        "right-special factor of length 5: {} (minor {})",
        sp.factor, sp.determinant
    );
    Ok(())
}
