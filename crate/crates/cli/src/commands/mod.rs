pub mod bounds;
pub mod criteria;
pub mod factorize;
pub mod plate;
pub mod render;
