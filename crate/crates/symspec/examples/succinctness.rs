//! Compact transducers stay the same size as Γ grows; their expansions do not.

use symspec::alphabet::Alphabet;
use symspec::transducer::builtin;

fn main() -> symspec::error::Result<()> {
    println!("{:>6} {:>14} {:>14}", "|Γ|", "sub2 expanded", "px expanded");
    let (sub2, px) = (builtin("sub2")?, builtin("px")?);
    println!(
        "{:>6} {:>14} {:>14}",
        "spec",
        sub2.graph().num_transitions(),
        px.graph().num_transitions()
    );
    for n in [2, 4, 8, 16, 32, 64] {
        let gamma = Alphabet::numeric(n)?;
        let a = sub2.gamma_version(&gamma).expand(&gamma)?.num_transitions();
        let b = px.gamma_version(&gamma).expand(&gamma)?.num_transitions();
        println!("{n:>6} {a:>14} {b:>14}");
    }
    Ok(())
}
