pub mod battery;
pub mod blocks;
pub mod dimension;
pub mod io;
pub mod lattice;
pub mod poset;
pub mod random;
pub mod rc;
