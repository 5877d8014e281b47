//! Exact computation of Terwilliger algebras for the group association schemes of the
//! four code-related 2×2 matrix groups G_I–G_IV, together with the invariant theory
//! of their weight enumerators.

pub mod codes;
pub mod exactnum;
pub mod invariants;
pub mod linalg;
pub mod matgroup;
pub mod reference;
pub mod report;
pub mod scheme;
pub mod terwilliger;
