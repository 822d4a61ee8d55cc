pub mod derived;
pub mod exactlin;
pub mod nbhd;
pub mod quiver;
pub mod sodtwist;
