//! Constructive witnesses: given a niche-graph class descriptor, emit a
//! semiorder or interval representation whose niche graph is exactly the
//! built graph, block for block.
//!
//! The constants are deliberately the simplest ones that work: f-values
//! 1/4/2 with threshold 2 for the two-clique shapes, 1/3/5 with threshold
//! 1 for the join shape, and intervals [1,2]/[3,4]/[5,6]/[1,6] for the
//! interval-order shapes. The block-to-index mapping is shared with
//! `build_from_descriptor`, so round-trips are labeled equalities.

use num_rational::Rational64;

use crate::error::DescriptorError;
use crate::order::{IntervalRep, Rat, SemiorderRep};
use crate::recognize::NicheClassDescriptor;

fn rat(n: i64) -> Rat {
    Rational64::from_integer(n)
}

/// Semiorder witness for the semiorder-realizable shapes. Rejects
/// `Gamma` with `r >= 1`, which is realizable only by interval orders.
pub fn niche_witness_semiorder(
    d: &NicheClassDescriptor,
) -> Result<SemiorderRep, DescriptorError> {
    match *d {
        NicheClassDescriptor::Edgeless { q } => {
            Ok(SemiorderRep::new(vec![rat(1); q], rat(1)))
        }
        NicheClassDescriptor::TwoCliques { m, n } => {
            let mut f = vec![rat(1); m];
            f.extend(vec![rat(4); n]);
            Ok(SemiorderRep::new(f, rat(2)))
        }
        NicheClassDescriptor::TwoCliquesPlusIsolated { m, n, q } => {
            let mut f = vec![rat(1); m];
            f.extend(vec![rat(2); q]);
            f.extend(vec![rat(4); n]);
            Ok(SemiorderRep::new(f, rat(2)))
        }
        NicheClassDescriptor::Gamma { m, n, q, r } => {
            if r >= 1 {
                return Err(DescriptorError::NotASemiorderShape);
            }
            let mut f = vec![rat(1); m];
            f.extend(vec![rat(3); q]);
            f.extend(vec![rat(5); n]);
            Ok(SemiorderRep::new(f, rat(1)))
        }
    }
}

/// Interval witness for every niche-graph shape of an interval order.
pub fn niche_witness_interval(
    d: &NicheClassDescriptor,
) -> Result<IntervalRep, DescriptorError> {
    let low = (rat(1), rat(2));
    let mid = (rat(3), rat(4));
    let high = (rat(5), rat(6));
    let wide = (rat(1), rat(6));
    let mut j = Vec::new();
    match *d {
        NicheClassDescriptor::Edgeless { q } => j.extend(vec![low; q]),
        NicheClassDescriptor::TwoCliques { m, n } => {
            j.extend(vec![low; m]);
            j.extend(vec![high; n]);
        }
        // the middle block of the plus-isolated shape is isolated, so it
        // gets the wide interval; the Gamma middle block is universal and
        // gets the strictly inner one
        NicheClassDescriptor::TwoCliquesPlusIsolated { m, n, q } => {
            j.extend(vec![low; m]);
            j.extend(vec![wide; q]);
            j.extend(vec![high; n]);
        }
        NicheClassDescriptor::Gamma { m, n, q, r } => {
            j.extend(vec![low; m]);
            j.extend(vec![mid; q]);
            j.extend(vec![high; n]);
            j.extend(vec![wide; r]);
        }
    }
    Ok(IntervalRep::new(j))
}
