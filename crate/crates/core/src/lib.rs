pub mod qfield;
pub mod words;
pub mod morphism;
pub mod iet;
pub mod amicability;
pub mod certify;
pub mod georep;
pub mod cli;
