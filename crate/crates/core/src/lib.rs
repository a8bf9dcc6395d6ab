pub mod cli;
pub mod cochains;
pub mod cohomology;
pub mod extensions;
pub mod gvs;
pub mod superlie;

#[cfg(test)]
mod testkit;
