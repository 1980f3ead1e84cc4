use rayon::prelude::*;

use super::AnalysisError;
use crate::semantics::{
    model_from_valuation, search_frame, Check, Frame, FourValue, Limits, Model, PointedModel, Program, SemanticsError,
};
use crate::syntax::{is_variable_name, Sequent};

/// Largest world count for frame enumeration (`2^16` relations).
pub const MAX_FRAME_WORLDS: usize = 4;

fn frame_guard(n: usize) -> Result<(), AnalysisError> {
    if n == 0 {
        return Err(AnalysisError::InvalidInput("world count must be at least 1".into()));
    }
    if n > MAX_FRAME_WORLDS {
        return Err(AnalysisError::TooManyWorlds { worlds: n, limit: MAX_FRAME_WORLDS });
    }
    Ok(())
}

/// All `2^(n²)` frames over `w0 … w{n-1}`. Frame `k` has the edge
/// `(i, j)` iff bit `i·n + j` of `k` is set.
pub fn enumerate_frames(n: usize) -> Result<impl Iterator<Item = Frame>, AnalysisError> {
    frame_guard(n)?;
    Ok((0u32..1 << (n * n)).map(move |mask| frame_from_mask(n, mask)))
}

fn frame_from_mask(n: usize, mask: u32) -> Frame {
    let edges = (0..n * n).filter(|bit| mask >> bit & 1 == 1).map(|bit| (bit / n, bit % n));
    Frame::from_indices(n, edges)
}

/// Every model with exactly `n` worlds over `vars`: frames in
/// [`enumerate_frames`] order, and for each frame every valuation in
/// base-4 counting order (`T, B, N, F`, variable-major, last world
/// fastest).
pub fn enumerate_models(
    n: usize,
    vars: &[String],
    limits: Limits,
) -> Result<impl Iterator<Item = Model>, AnalysisError> {
    frame_guard(n)?;
    if vars.is_empty() {
        return Err(AnalysisError::InvalidInput("at least one variable is needed".into()));
    }
    if let Some(bad) = vars.iter().find(|v| !is_variable_name(v)) {
        return Err(SemanticsError::InvalidVariable(bad.clone()).into());
    }
    limits.check(n, vars.len())?;
    let cells = n * vars.len();
    let vars = vars.to_vec();
    let frames: Vec<Frame> = enumerate_frames(n)?.collect();
    Ok(frames.into_iter().flat_map(move |frame| {
        let vars = vars.clone();
        (0u64..1 << (2 * cells)).map(move |k| {
            let valuation: Vec<FourValue> =
                (0..cells).map(|c| FourValue::ALL[(k >> (2 * (cells - 1 - c)) & 3) as usize]).collect();
            model_from_valuation(&frame, &vars, &valuation)
        })
    }))
}

/// Smallest-first brute-force search for a pointed model where the
/// premise of `s` is true and its conclusion is not.
///
/// Within a world count, frames are searched in parallel and the
/// enumeration-first hit is returned, so the answer is deterministic.
pub fn find_countermodel(s: &Sequent, max_worlds: usize) -> Result<Option<PointedModel>, AnalysisError> {
    frame_guard(max_worlds)?;
    let mut program = Program::new();
    let a = program.add(&s.premise);
    let b = program.add(&s.conclusion);
    let limits = Limits::default();
    for n in 1..=max_worlds {
        limits.check(n, program.vars().len())?;
        let frames: Vec<Frame> = enumerate_frames(n)?.collect();
        let found = frames
            .par_iter()
            .map(|fr| search_frame(fr, &program, Check::Truth(a, b), limits))
            .find_map_first(|r| r.transpose());
        if let Some(found) = found {
            return Ok(Some(found?));
        }
    }
    Ok(None)
}
