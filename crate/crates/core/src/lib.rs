pub mod algebra;
pub mod comb;
pub mod queues;
pub mod hecke;
pub mod interp;
pub mod tableaux;
pub mod verify;
pub mod cli;
