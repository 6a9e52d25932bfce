//! SVG chord diagrams and ASCII/SVG Auslander–Reiten strips.

mod circle;
mod strip;

use std::io;
use std::path::{Path, PathBuf};

pub use circle::{
    circle_geometry_a, circle_geometry_d, geometry_to_svg, render_circle_a, render_circle_d, CircleGeometry, CircleStyle,
    Point,
};
pub use strip::{render_ar_strip_ascii, render_ar_strip_svg, strip_geometry, StripGeometry, StripStyle, StripWindow};

use crate::derived::{DerivedModel, ThickDescriptor};
use crate::error::Result;
use crate::ncp::{DPartition, SetPartitionA};
use crate::root_coxeter::DynkinType;

#[derive(Debug, Clone)]
pub enum Diagram {
    CircleA(SetPartitionA),
    CircleD(DPartition),
    ArStrip { delta: DynkinType, descriptor: ThickDescriptor, window: StripWindow, width: Option<u64> },
}

/// A diagram with its layout. Defaults: circle radius 100, margin 40;
/// strip spacing 20 × 30, window cap 200 columns.
#[derive(Debug, Clone)]
pub struct DiagramSpec {
    pub diagram: Diagram,
    pub circle: CircleStyle,
    pub strip: StripStyle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rendered {
    pub svg: String,
    /// Only strips have a text form.
    pub ascii: Option<String>,
}

impl DiagramSpec {
    pub fn new(diagram: Diagram) -> Self {
        Self { diagram, circle: CircleStyle::default(), strip: StripStyle::default() }
    }

    pub fn render(&self) -> Result<Rendered> {
        Ok(match &self.diagram {
            Diagram::CircleA(p) => Rendered { svg: render_circle_a(p, &self.circle), ascii: None },
            Diagram::CircleD(p) => Rendered { svg: render_circle_d(p, &self.circle), ascii: None },
            Diagram::ArStrip { delta, descriptor, window, width } => {
                let model = DerivedModel::shared(*delta);
                Rendered {
                    svg: render_ar_strip_svg(&model, descriptor, *window, *width, &self.strip)?,
                    ascii: Some(render_ar_strip_ascii(&model, descriptor, *window, *width, &self.strip)?),
                }
            }
        })
    }
}

impl Rendered {
    /// Writes `<name>.svg` and, for strips, `<name>.txt`; returns the paths.
    pub fn write(&self, dir: &Path, name: &str) -> io::Result<Vec<PathBuf>> {
        let mut out = vec![dir.join(format!("{name}.svg"))];
        std::fs::write(&out[0], &self.svg)?;
        if let Some(text) = &self.ascii {
            let p = dir.join(format!("{name}.txt"));
            std::fs::write(&p, text)?;
            out.push(p);
        }
        Ok(out)
    }
}
