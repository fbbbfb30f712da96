//! Partial and global consistent approximations measured on mass vectors.

use csbf::mass_approx::{global_l1_mass, global_l2_mass, partial_l1_mass, partial_l2_mass};
use csbf::{Frame, MassAssignment, MassFunction, PseudoMassFunction, SpaceKind};

fn show(frame: &Frame, m: &PseudoMassFunction) -> String {
    m.entries()
        .iter()
        .map(|(a, v)| format!("{}={:.4}", frame.format_subset(*a), v))
        .collect::<Vec<_>>()
        .join(" ")
}

fn main() -> csbf::Result<()> {
    let frame = Frame::new(["x", "y", "z"])?;
    let m = MassFunction::from_labels(
        frame.clone(),
        &[("x", 0.2), ("y", 0.1), ("x,y", 0.4), ("y,z", 0.3)],
    )?;

    println!("L1 (mass space, N-2 coordinates)");
    for x in 0..frame.len() {
        let p = partial_l1_mass(&m, x)?;
        println!(
            "  {}: d={:.3}  {}",
            frame.label(x),
            p.distance,
            show(&frame, &p.result)
        );
    }
    let g = global_l1_mass(&m)?;
    println!(
        "  optimum: {:?}",
        g.optima.iter().map(|x| frame.label(*x)).collect::<Vec<_>>()
    );

    for space in [SpaceKind::MassN1, SpaceKind::MassN2] {
        println!("L2 ({space})");
        for x in 0..frame.len() {
            let p = partial_l2_mass(&m, x, space)?;
            println!(
                "  {}: d={:.4}  {}",
                frame.label(x),
                p.distance,
                show(&frame, &p.result)
            );
        }
        let g = global_l2_mass(&m, space)?;
        println!("  criterion: {:?}", g.criterion_values);
    }
    Ok(())
}
