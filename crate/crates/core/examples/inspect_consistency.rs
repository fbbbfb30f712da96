//! Belief, plausibility and the three equivalent consistency tests.

use csbf::evidence::{has_complementary_support, max_contour_is_one, IDENTITY_TOLERANCE};
use csbf::{
    belief_from_mass, contour, core_of, is_consistent, Frame, MassAssignment, MassFunction,
};

fn main() -> csbf::Result<()> {
    let frame = Frame::new(["x", "y", "z"])?;
    let m = MassFunction::from_labels(
        frame.clone(),
        &[("x", 0.2), ("y", 0.1), ("x,y", 0.4), ("y,z", 0.3)],
    )?;

    let b = belief_from_mass(&m);
    println!("{:<8} {:>8} {:>8}", "subset", "bel", "pl");
    for a in frame.subsets().skip(1) {
        println!(
            "{:<8} {:>8.3} {:>8.3}",
            frame.format_subset(a),
            b.belief(a),
            b.plausibility(a)
        );
    }
    println!("contour: {:?}", contour(&m));
    println!("core: {{{}}}", frame.format_subset(core_of(&m)));
    println!("consistent: {}", is_consistent(&m));
    println!(
        "max contour is one: {}",
        max_contour_is_one(&m, IDENTITY_TOLERANCE)
    );
    println!("complementary support: {}", has_complementary_support(&m));

    let inside = MassFunction::from_labels(frame, &[("x,y", 0.5), ("y,z", 0.5)])?;
    println!(
        "\nm(xy)=m(yz)=0.5: core {{{}}}, consistent {}",
        inside.frame().format_subset(core_of(&inside)),
        is_consistent(&inside)
    );
    Ok(())
}
