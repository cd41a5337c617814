//! Workbench for finite algebraic logic: relation- and cylindric-algebra
//! atom structures and their complex algebras, atomic networks and
//! hypernetworks, witness games with an exhaustive memoized solver,
//! counterexample constructions (Monk, split, rainbow, blow-up-and-blur),
//! scripted strategies, and brute-force representation and Ramsey oracles.

pub mod atom;
pub mod atomset;
pub mod axioms;
pub mod ca;
pub mod canon;
pub mod constructions;
pub mod error;
pub mod games;
pub mod network;
pub mod oracle;
pub mod ra;
pub mod reduct;
pub mod scword;
pub mod serial;
pub mod strategies;
