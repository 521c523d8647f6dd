pub mod involution;
pub mod domino;
pub mod signed;
pub mod hmap;
pub mod cells;
pub mod io;
pub mod verify;
pub mod cli;
