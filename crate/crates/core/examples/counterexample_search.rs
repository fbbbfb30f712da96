//! Seeded search for ternary mass functions whose global L1 belief-space
//! optimum is not the most plausible element, and for functions where the
//! L1 and L2 belief-space optima differ.

use csbf::belief_approx::{
    global_l1_belief, global_l2_belief, l1_belief_diverges_from_plausibility, l1_l2_belief_diverge,
    max_plausibility_elements, search_instances,
};
use csbf::{contour, Frame, MassAssignment, MassFunction};

const DRAWS: usize = 100_000;

fn report(label: &str, m: Option<&MassFunction>, draws: usize) -> csbf::Result<()> {
    let Some(m) = m else {
        println!("{label}: none in {draws} draws");
        return Ok(());
    };
    println!("{label}: found after {draws} draws");
    for (a, v) in m.entries() {
        println!("  m({}) = {v:.17}", m.frame().format_subset(*a));
    }
    println!("  contour {:?}", contour(m));
    println!("  argmax pl {:?}", max_plausibility_elements(m));
    println!(
        "  L1 belief criterion {:?}",
        global_l1_belief(m)?.criterion_values
    );
    println!(
        "  L2 belief criterion {:?}",
        global_l2_belief(m)?.criterion_values
    );
    Ok(())
}

fn main() -> csbf::Result<()> {
    let frame = Frame::new(["x", "y", "z"])?;
    let hit = search_instances(&frame, DRAWS, 0, l1_belief_diverges_from_plausibility);
    report(
        "L1 optimum differs from argmax pl",
        hit.instance.as_ref(),
        hit.draws,
    )?;
    let hit = search_instances(&frame, DRAWS, 0, l1_l2_belief_diverge);
    report("L1 and L2 optima differ", hit.instance.as_ref(), hit.draws)?;
    Ok(())
}
