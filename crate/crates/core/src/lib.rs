//! Cautious reinforcement learning with temporal-logic objectives.
//!
//! A tabular Q-learner is rewarded through a limit-deterministic Büchi
//! automaton that tracks progress towards an LTL objective, while a
//! pessimistic companion learner maintains a local estimate of the
//! probability of violating safety and restricts the action set during
//! exploration ("safe padding"). Exact oracles over materialized product
//! MDPs back the test suite at desk scale.

pub mod automata;
pub mod cli;
pub mod config;
pub mod env;
pub mod learner;
pub mod ltl;
pub mod oracle;
pub mod product;
pub mod safety;
