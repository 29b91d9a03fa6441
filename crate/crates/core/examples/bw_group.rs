//! The group of Christoffel matrices M_n(a, b, r): products, inverses and
//! determinants, checked against plain matrix arithmetic.
use christoffel::bwgroup::{
    christoffel_matrix, det_closed, group_inverse, group_mul, to_triple, ChristoffelParams,
};
use christoffel::numeric::{ExactMatrix, ScalarKind};

fn main() -> christoffel::Result<()> {
    let m = ChristoffelParams::ints(7, 0, 1, 2)?;
    println!("M_7(0, 1, 2):\n{}", christoffel_matrix(&m));

    let square = group_mul(&m, &m)?;
    let cube = group_mul(&square, &m)?;
    println!(
        "square = M_7({}, {}, {})",
        square.a(),
        square.b(),
        square.r()
    );
    println!("cube   = M_7({}, {}, {})", cube.a(), cube.b(), cube.r());
    let raw = christoffel_matrix(&square).mat_mul(&christoffel_matrix(&m))?;
    println!(
        "group law agrees with matrix product: {}",
        raw == christoffel_matrix(&cube)
    );

    let inv = group_inverse(&cube)?;
    println!(
        "inverse of the cube: M_7({}, {}, {})",
        inv.a(),
        inv.b(),
        inv.r()
    );
    let product = christoffel_matrix(&cube).mat_mul(&christoffel_matrix(&inv))?;
    println!(
        "product is identity: {}",
        product == ExactMatrix::identity(7, ScalarKind::Rational)
    );

    let t = to_triple(&cube)?;
    println!("triple (c, d, r) = ({}, {}, {})", t.c, t.d, t.r);
    let exact = christoffel_matrix(&cube).det_exact()?;
    println!(
        "det: closed form {}, elimination {}",
        det_closed(&cube)?,
        exact
    );

    let modular = ChristoffelParams::new(5, "2 mod 11".parse()?, "3 mod 11".parse()?, 2)?;
    println!("over F_11, det M_5(2, 3, 2) = {}", det_closed(&modular)?);
    Ok(())
}
