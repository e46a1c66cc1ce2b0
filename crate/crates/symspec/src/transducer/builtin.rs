use super::InvariantTransducer;
use crate::error::{Error, Result};
use crate::graph::LabelledGraph;
use crate::pairspec::PairingSpec;
use crate::setspec::SetSpec;

pub const BUILTIN_NAMES: &[&str] = &["sub2", "px"];

/// `sub2` relates words at Hamming distance 1 or 2. `px` relates `u` to its
/// proper prefixes.
pub fn builtin(name: &str) -> Result<InvariantTransducer> {
    let copy = PairingSpec::Same(SetSpec::All);
    let mut t = LabelledGraph::new();
    match name {
        "sub2" => {
            let change = PairingSpec::Diff(SetSpec::All, SetSpec::All);
            let q = t.add_states(3);
            t.add_transition(q.start, copy.clone(), q.start);
            t.add_transition(q.start, change.clone(), q.start + 1);
            t.add_transition(q.start + 1, copy.clone(), q.start + 1);
            t.add_transition(q.start + 1, change, q.start + 2);
            t.add_transition(q.start + 2, copy, q.start + 2);
            t.set_initial(q.start);
            t.set_final(q.start + 1);
            t.set_final(q.start + 2);
        }
        "px" => {
            let drop = PairingSpec::ToEps(SetSpec::All);
            let (p, q) = (t.add_state(), t.add_state());
            t.add_transition(p, copy, p);
            t.add_transition(p, drop.clone(), q);
            t.add_transition(q, drop, q);
            t.set_initial(p);
            t.set_final(q);
        }
        _ => {
            return Err(Error::invalid(format!(
                "unknown transducer `{name}` (expected one of {})",
                BUILTIN_NAMES.join(", ")
            )))
        }
    }
    InvariantTransducer::new(t)
}
