pub mod construct;
pub mod gen;
pub mod scan;
pub mod solve;
pub mod verify;
