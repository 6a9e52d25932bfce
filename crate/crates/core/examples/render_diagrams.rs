//! Writes chord diagrams and AR strips to a directory (default: a temporary one).

use std::path::PathBuf;

use thicket::classifier::{enumerate_thick, CategoryType, Order};
use thicket::ncp::{DPartition, SetPartitionA};
use thicket::render::{Diagram, DiagramSpec, StripWindow};
use thicket::root_coxeter::DynkinType;

fn main() {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("thicket-diagrams"));
    std::fs::create_dir_all(&dir).unwrap();

    let a = SetPartitionA::new(6, vec![vec![1, 2], vec![3, 4], vec![5, 6]]).unwrap();
    DiagramSpec::new(Diagram::CircleA(a)).render().unwrap().write(&dir, "a6").unwrap();

    let d = DPartition::new(5, vec![vec![1, 2, -5], vec![-1, -2, 5], vec![3, 4], vec![-3, -4]]).unwrap();
    DiagramSpec::new(Diagram::CircleD(d)).render().unwrap().write(&dir, "d5").unwrap();

    let ct = CategoryType::new(DynkinType::a(5), 4, Order::One).unwrap();
    for (k, descriptor) in enumerate_thick(&ct).unwrap().into_iter().enumerate() {
        let spec = DiagramSpec::new(Diagram::ArStrip {
            delta: ct.delta(),
            descriptor,
            window: StripWindow::new(0, 8),
            width: Some(4),
        });
        let out = spec.render().unwrap();
        println!("strip {k}:\n{}", out.ascii.as_deref().unwrap());
        out.write(&dir, &format!("a5_tau4_{k}")).unwrap();
    }
    println!("diagrams written to {}", dir.display());
}
