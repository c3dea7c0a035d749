//! Multi-threaded drivers over the core scan kernels.
//!
//! Work is split exactly as the sequential versions split it (one block per
//! denominator, one row per outer variable) and merged through the same
//! order-normalizing finishers, so results are identical to the
//! sequential ones.

use rayon::prelude::*;

use power_forge_core::oracles::{
    catalan_box, catalan_row, fermat_box, fermat_row, lebesgue_box, lebesgue_row, Equation,
    FermatVariant, SolutionList,
};
use power_forge_core::verify::{
    finish_integer_report, finish_rational_report, scan_integer_range, scan_rational_block,
    BlockResult,
};
use power_forge_core::{ConstructionArtifacts, IntPoly, PowerSetInput, VerificationReport};

const INTEGER_CHUNK: i64 = 512;

/// Called once per finished block with `(block index, block count, hits in block)`.
pub type Progress<'a> = &'a (dyn Fn(u64, u64, usize) + Sync);

pub fn verify_construction(
    art: &ConstructionArtifacts,
    set: &PowerSetInput,
    bound: u64,
    progress: Option<Progress<'_>>,
) -> VerificationReport {
    let scanned = (1..=bound)
        .into_par_iter()
        .map(|v| {
            let block = scan_rational_block(&art.f_s, bound, v);
            if let Some(report) = progress {
                report(v, bound, block.hits.len());
            }
            block
        })
        .reduce(BlockResult::default, BlockResult::merge);
    finish_rational_report(art, set, bound, scanned)
}

pub fn verify_integer_construction(
    f: &IntPoly,
    set: &PowerSetInput,
    bound: u64,
    progress: Option<Progress<'_>>,
) -> VerificationReport {
    let b = bound as i64;
    let chunks = (2 * b + 1 + INTEGER_CHUNK - 1) / INTEGER_CHUNK;
    let scanned = (0..chunks)
        .into_par_iter()
        .map(|i| {
            let lo = -b + i * INTEGER_CHUNK;
            let hi = (lo + INTEGER_CHUNK - 1).min(b);
            let block = scan_integer_range(f, lo, hi);
            if let Some(report) = progress {
                report(i as u64 + 1, chunks as u64, block.hits.len());
            }
            block
        })
        .reduce(BlockResult::default, BlockResult::merge);
    finish_integer_report(set, bound, scanned)
}

pub fn search_lebesgue(x_bound: u64, n_max: u32) -> power_forge_core::Result<SolutionList> {
    if n_max < 2 {
        return Err(power_forge_core::Error::Domain("n_max must be >= 2".into()));
    }
    let xb = x_bound as i64;
    let solutions = (-xb..=xb)
        .into_par_iter()
        .flat_map_iter(|x| lebesgue_row(x, n_max))
        .collect();
    Ok(SolutionList::new(
        Equation::Lebesgue,
        lebesgue_box(x_bound, n_max),
        solutions,
    ))
}

pub fn search_fermat_quartic(
    bound: u64,
    n_max: u32,
    variant: FermatVariant,
) -> power_forge_core::Result<SolutionList> {
    if bound < 1 || n_max < 2 {
        return Err(power_forge_core::Error::Domain(
            "bound must be >= 1 and n_max >= 2".into(),
        ));
    }
    let b = bound as i64;
    let solutions = (-b..=b)
        .into_par_iter()
        .flat_map_iter(|a| fermat_row(variant, a, b, n_max))
        .collect();
    Ok(SolutionList::new(
        Equation::Fermat(variant),
        fermat_box(variant, bound, n_max),
        solutions,
    ))
}

pub fn search_catalan(base_bound: u64, exp_bound: u32) -> power_forge_core::Result<SolutionList> {
    if base_bound < 2 || exp_bound < 2 {
        return Err(power_forge_core::Error::Domain(
            "base_bound and exp_bound must be >= 2".into(),
        ));
    }
    let solutions = (2..=base_bound)
        .into_par_iter()
        .flat_map_iter(|x| catalan_row(x, base_bound, exp_bound))
        .collect();
    Ok(SolutionList::new(
        Equation::Catalan,
        catalan_box(base_bound, exp_bound),
        solutions,
    ))
}
