//! Coefficient tables: three construction routes and the identity checks.
//!
//! ```text
//! cargo run --example kravchuk_tables [max_n]
//! ```

use numproj::kravchuk::{self, coefficient, generating_row, verify_identities, KravchukTable};

fn main() -> numproj::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);

    for t in kravchuk::pyramid(max_n)? {
        println!("n = {}\n{t}", t.n());
    }

    let n = 6;
    let recursive = kravchuk::table(n)?;
    assert_eq!(recursive, KravchukTable::from_closed_form(n)?);
    assert_eq!(recursive, KravchukTable::from_generating_function(n)?);
    println!("C(6,1,2) = {}, C(6,2,1) = {}", coefficient(6, 1, 2)?, coefficient(6, 2, 1)?);
    println!("(1-x)^2 (1+x)^4 -> {:?}", generating_row(6, 2)?);

    print!("{}", verify_identities(n)?);
    println!("{}", recursive.to_csv());
    Ok(())
}
