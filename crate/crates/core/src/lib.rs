//! Whittaker dimensions of regular unramified genuine principal series on
//! covering groups, computed two ways: by pairing Kazhdan-Lusztig cell
//! representations with the permutation character of the Whittaker moduli
//! space, and by ranks of orbit blocks of Gauss-sum scattering matrices.

pub mod characters;
pub mod covering;
pub mod error;
pub mod gauss;
pub mod intmat;
pub mod kl;
pub mod linalg;
pub mod mpoly;
pub mod rootdata;
pub mod scattering;
pub mod tables;
pub mod whittaker;

pub use error::{Error, Result};
