//! L-infinity solutions are boxes rather than points. This prints the box
//! for each focus in the mass space, its vertices, and the part of it that
//! contains admissible (nonnegative) mass functions.

use csbf::mass_approx::{global_linf_mass, partial_linf_mass};
use csbf::{Frame, MassAssignment, MassFunction};

fn main() -> csbf::Result<()> {
    let frame = Frame::new(["x", "y", "z"])?;
    let m = MassFunction::from_labels(
        frame.clone(),
        &[("x", 0.2), ("y", 0.1), ("x,y", 0.4), ("y,z", 0.3)],
    )?;

    for x in 0..frame.len() {
        let b = partial_linf_mass(&m, x)?;
        println!("focus {} (distance {:.2})", frame.label(x), b.distance);
        for iv in &b.intervals {
            println!(
                "  {:<4} [{:+.2}, {:+.2}]",
                frame.format_subset(iv.subset),
                iv.lower,
                iv.upper
            );
        }
        let admissible = b.admissible_only();
        println!(
            "  admissible part is strictly smaller: {}",
            admissible.strict_subset
        );
        for v in b.vertices()? {
            let row: Vec<String> = frame
                .ultrafilter(x)
                .map(|a| format!("{:+.2}", v.mass(a)))
                .collect();
            println!("  vertex {}", row.join(" "));
        }
    }
    let g = global_linf_mass(&m)?;
    println!("criterion {:?}, optima {:?}", g.criterion_values, g.optima);
    Ok(())
}
