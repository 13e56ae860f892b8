//! Computational checks for the finite groups of Lie type F4(q).

pub mod blocks;
pub mod classtypes;
pub mod data;
pub mod error;
pub mod extweyl;
pub mod finchar;
pub mod lifts;
pub mod orders;
pub mod qpoly;
pub mod radical3;
pub mod report;
pub mod rootsys;
pub mod snf;
pub mod suites;
pub mod tori;
pub mod weyl;
pub mod word;

pub use error::{Error, Result};
