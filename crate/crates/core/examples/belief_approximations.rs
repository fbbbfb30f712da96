//! Approximations measured on belief vectors: the focused transform, its
//! orthogonality certificate and the L-infinity box.

use csbf::belief_approx::{
    focused_transform, gamma_to_mass, global_l1_belief, global_l2_belief, global_linf_belief,
    orthogonality_residual, partial_linf_belief,
};
use csbf::{Frame, MassAssignment, MassFunction};

fn main() -> csbf::Result<()> {
    let frame = Frame::new(["x", "y", "z"])?;
    let m = MassFunction::from_labels(
        frame.clone(),
        &[("x", 0.2), ("y", 0.1), ("x,y", 0.4), ("y,z", 0.3)],
    )?;

    for x in 0..frame.len() {
        let ft = focused_transform(&m, x)?;
        let masses: Vec<String> = ft
            .result
            .entries()
            .iter()
            .map(|(a, v)| format!("{}={v:.2}", frame.format_subset(*a)))
            .collect();
        println!(
            "focus {}: {}  L1={:.2} L2^2={:.2} residual={:.1e}",
            frame.label(x),
            masses.join(" "),
            ft.distance_l1,
            ft.distance_l2 * ft.distance_l2,
            orthogonality_residual(&m, &ft)?
        );
    }
    println!("L1 optima {:?}", global_l1_belief(&m)?.optima);
    println!("L2 optima {:?}", global_l2_belief(&m)?.optima);

    let gamma = partial_linf_belief(&m, 0)?;
    println!("gamma box for x (distance {:.2}):", gamma.distance);
    for iv in &gamma.intervals {
        println!(
            "  {:<5} [{:+.2}, {:+.2}]",
            frame.format_subset(iv.subset),
            iv.lower,
            iv.upper
        );
    }
    let center = gamma_to_mass(&gamma, &gamma.barycenter())?;
    println!(
        "  barycenter as masses: {:?}",
        center.entries().values().collect::<Vec<_>>()
    );
    println!("Linf optima {:?}", global_linf_belief(&m)?.optima);
    Ok(())
}
