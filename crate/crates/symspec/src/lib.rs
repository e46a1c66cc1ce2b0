pub mod alphabet;
pub mod cli;
pub mod error;
pub mod format;
pub mod graph;
pub mod nfa;
pub mod pairspec;
pub mod regex;
pub mod setspec;
pub mod syntax;
pub mod transducer;
