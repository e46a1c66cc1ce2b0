//! Pairing specs describe letter relations; composing two of them gives a
//! disjoint sum of pairing specs.

use symspec::alphabet::Alphabet;
use symspec::pairspec::PairingSpec;

fn show(p: &PairingSpec, gamma: &Alphabet) -> String {
    let pairs: Vec<String> = p
        .relation(gamma)
        .unwrap()
        .iter()
        .map(|lp| lp.to_string())
        .collect();
    pairs.join(" ")
}

fn main() -> symspec::error::Result<()> {
    let gamma = Alphabet::from_chars("012")?;
    let cases = [
        ("[01]/![12]", "[12]/!@"),
        ("@/=", "[0]/\\e"),
        ("\\e/[1]", "[1]/="),
    ];
    for (a, b) in cases {
        let (p, q): (PairingSpec, PairingSpec) = (a.parse()?, b.parse()?);
        println!("R({p}) = {}", show(&p, &gamma));
        println!("R({q}) = {}", show(&q, &gamma));
        match p.compose(&q, &gamma) {
            Some(sum) => {
                println!("{p} ; {q} = {sum}");
                for term in &sum.0 {
                    println!("    {term}: {}", show(term, &gamma));
                }
            }
            None => println!("{p} ; {q} is empty"),
        }
        println!();
    }
    Ok(())
}
