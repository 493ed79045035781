pub mod campaign;
pub mod chevalley;
pub mod curvature;
pub mod error;
pub mod flagspace;
pub mod linalg;
pub mod positivity;
pub mod rational;
pub mod rootsys;
pub mod surd;

pub use error::{Error, Result};
pub use rational::Q;
pub use rootsys::{LieType, Root, RootSystem, Series};
pub use surd::{SignedSqrt, Surd};
