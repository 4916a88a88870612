//! Irreducibility certificates: producing, serializing, and re-checking.
//!
//! Run with: cargo run --example certificates

use laurent_goldbach::{
    certify_irreducible, format_poly, parse_poly, verify_certificate, IrreducibilityCertificate,
};

fn main() {
    println!("=== Irreducibility Certificates ===\n");

    let gallery = [
        "3x^4+4x^3+5x^-1+x^-6",   // value 13 is prime
        "6x^7+7x+3x^-4+8x^-6",    // hyper-monolithic with coprime coefficients
        "x^6+x^4+x^3+1",          // quadrinomial, outer gaps 2 != 3
        "2x^4+x^2+1",             // only the exhaustive search certifies this one
        "2x^2+2x",                // reducible: no certificate can exist
        "x^6+x^4+x^2+1",          // (x^2+1)(x^4+1): reducible, no certificate
    ];

    for text in gallery {
        let f = parse_poly(text).unwrap();
        match certify_irreducible(&f, true).unwrap() {
            Some(cert) => {
                println!("{text}");
                println!("  certificate: {cert:?}");
                println!("  re-checks:   {}", verify_certificate(&f, &cert));
                println!("  as JSON:     {}", serde_json::to_string(&cert).unwrap());
            }
            None => println!("{text}\n  no certificate (this one happens to be reducible)"),
        }
        println!();
    }

    // a certificate is evidence about one specific polynomial; against any
    // other polynomial it simply fails to verify
    println!("--- Certificates do not transfer ---\n");
    let f = parse_poly("3x^4+4x^3+5x^-1+x^-6").unwrap();
    let cert = certify_irreducible(&f, false).unwrap().unwrap();
    let other = parse_poly("x^2+x").unwrap();
    println!(
        "certificate {:?} of {} against {}: {}",
        cert,
        format_poly(&f),
        format_poly(&other),
        verify_certificate(&other, &cert)
    );
    assert!(!verify_certificate(&other, &cert));

    // tampering with the payload is caught the same way
    let forged = IrreducibilityCertificate::PrimeEvaluation { prime: 15 };
    println!(
        "forged prime_evaluation(15) against {}: {} (15 is not prime)",
        format_poly(&f),
        verify_certificate(&f, &forged)
    );
    assert!(!verify_certificate(&f, &forged));
}
