#[path = "../examples/fan_cones.rs"]
mod fan_cones;
#[path = "../examples/wall_relations.rs"]
mod wall_relations;
#[path = "../examples/cohomology_rings.rs"]
mod cohomology_rings;
#[path = "../examples/weyl_fixed_points.rs"]
mod weyl_fixed_points;
#[path = "../examples/peterson_sl3.rs"]
mod peterson_sl3;
#[path = "../examples/plot_fan.rs"]
mod plot_fan;
#[path = "../examples/reports.rs"]
mod reports;
#[cfg(feature = "numeric")]
#[path = "../examples/peterson_sl4_numeric.rs"]
mod peterson_sl4_numeric;

#[test]
fn every_example_runs() {
    cartan_lattice::run_example().unwrap();
    fan_cones::run_example().unwrap();
    wall_relations::run_example().unwrap();
    cohomology_rings::run_example().unwrap();
    weyl_fixed_points::run_example().unwrap();
    peterson_sl3::run_example().unwrap();
    plot_fan::run_example().unwrap();
    reports::run_example().unwrap();
    #[cfg(feature = "numeric")]
    peterson_sl4_numeric::run_example().unwrap();
}
