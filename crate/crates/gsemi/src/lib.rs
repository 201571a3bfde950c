//! Gorenstein projective modules over quadratic monomial algebras.
//!
//! * [`qalg`]: quivers, paths, bound quiver algebras and their text format.
//! * [`gp`]: relation quiver, perfect components, syzygy classes.
//! * [`repcat`]: Gorenstein projective representations, the monomorphism
//!   categories `S_n`, almost split sequences and stable components.
//! * [`dynkin`]: Dynkin recognition and positive roots.
//! * [`oracle`]: explicit linear algebra over F_p used to check all of the above.
//! * [`cli`]: the `gsemi` command line.

pub mod cli;
pub mod dynkin;
pub mod gp;
pub mod oracle;
pub mod qalg;
pub mod repcat;
