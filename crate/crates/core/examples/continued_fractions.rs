//! Continuants, semi-convergents, the P-matrix factorization and the
//! Stern-Brocot path of a slope.
use christoffel::contfrac::{
    cf_lower_to_upper, cf_value, christoffel_length, continuant_u64, path_string,
    ppp_factorization, semiconvergents, stern_brocot_path, ContinuedFraction,
};
use christoffel::words::lower_christoffel;

fn main() -> christoffel::Result<()> {
    let cf: ContinuedFraction = "[0;2,1,3]".parse()?;
    let slope = cf_value(&cf)?;
    println!("{cf} = {slope}, word length {}", christoffel_length(&cf));
    println!("K(2,1,3) = {}", continuant_u64(&[2, 1, 3]));

    let sc: Vec<String> = semiconvergents(&cf)?
        .iter()
        .map(ToString::to_string)
        .collect();
    println!("semi-convergents: {}", sc.join(" "));

    let f = ppp_factorization(&cf)?;
    let w = lower_christoffel(slope, (0u8, 1u8))?;
    let (u, v) = w.standard_factorization()?;
    println!("P-matrix product {}", f.matrix);
    println!(
        "w = ({u})({v}); counts (zeros, ones): {:?} and {:?}",
        f.left_counts, f.right_counts
    );

    println!("upper slope: {}", cf_lower_to_upper(&cf)?);
    println!(
        "Stern-Brocot path: {}",
        path_string(&stern_brocot_path(slope)?)
    );
    Ok(())
}
