//! SVG rendering of the effectivity region: lattice points colored by their
//! effectivity class, candidate classes highlighted, and the two hyperbola
//! branches that bound the candidate window drawn from their closed forms.
//!
//! This is the only place in the tool where floating point appears; it is a
//! pure rendering sink and feeds nothing back into any classification.

use std::fmt::Write as _;

use detquartic::{
    enumerate_c1_effective, enumerate_c1_noneffective, effectivity, DivisorClass, EffectivityKind,
    GramLattice,
};

const CANVAS: f64 = 720.0;
const MARGIN: f64 = 50.0;

struct Frame {
    scan_box: f64,
}

impl Frame {
    fn scale(&self) -> f64 {
        (CANVAS - 2.0 * MARGIN) / (2.0 * self.scan_box)
    }

    fn sx(&self, wx: f64) -> f64 {
        MARGIN + (wx + self.scan_box) * self.scale()
    }

    fn sy(&self, wy: f64) -> f64 {
        MARGIN + (self.scan_box - wy) * self.scale()
    }
}

/// Lower boundary of the effective region: `y = (-3x + sqrt(5x² + 4)) / 2`.
fn effective_boundary(x: f64) -> f64 {
    (-3.0 * x + (5.0 * x * x + 4.0).sqrt()) / 2.0
}

/// Image of the boundary under `D -> 6h - D`:
/// `y = (3(6 - x) - sqrt(5(6 - x)² + 4)) / 2`.
fn window_boundary(x: f64) -> f64 {
    let u = 6.0 - x;
    (3.0 * u - (5.0 * u * u + 4.0).sqrt()) / 2.0
}

fn polyline(frame: &Frame, f: impl Fn(f64) -> f64, color: &str) -> String {
    let mut points = String::new();
    let steps = 600;
    for i in 0..=steps {
        let x = -frame.scan_box + 2.0 * frame.scan_box * (i as f64) / (steps as f64);
        let y = f(x);
        if y.abs() > frame.scan_box + 0.75 {
            continue;
        }
        let _ = write!(points, "{:.2},{:.2} ", frame.sx(x), frame.sy(y));
    }
    format!(
        "  <polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"2\" points=\"{}\"/>\n",
        points.trim_end()
    )
}

/// Render the region plot. Returns the SVG document and the number of
/// lattice points drawn.
pub fn region_svg(scan_box: i64) -> (String, usize) {
    let lattice = GramLattice::determinantal_quartic();
    let frame = Frame { scan_box: scan_box as f64 };
    let effective = enumerate_c1_effective(32, &lattice).expect("default box");
    let noneffective = enumerate_c1_noneffective(32, &lattice).expect("default box");

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{c}\" height=\"{c}\" \
         viewBox=\"0 0 {c} {c}\">",
        c = CANVAS
    );
    svg.push_str("  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n");

    // axes
    let _ = writeln!(
        svg,
        "  <line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"#d0d7de\"/>",
        frame.sx(-frame.scan_box),
        frame.sy(0.0),
        frame.sx(frame.scan_box),
        frame.sy(0.0)
    );
    let _ = writeln!(
        svg,
        "  <line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"#d0d7de\"/>",
        frame.sx(0.0),
        frame.sy(-frame.scan_box),
        frame.sx(0.0),
        frame.sy(frame.scan_box)
    );

    svg.push_str(&polyline(&frame, effective_boundary, "#0969da"));
    svg.push_str(&polyline(&frame, window_boundary, "#8250df"));

    let mut points = 0;
    for x in -scan_box..=scan_box {
        for y in -scan_box..=scan_box {
            let class = DivisorClass::new(x, y);
            let status = effectivity(class, &lattice).expect("default lattice");
            let fill = match status.kind {
                EffectivityKind::Zero => "#0a3069",
                EffectivityKind::Effective => "#1a7f37",
                EffectivityKind::AntiEffective => "#d4a72c",
                EffectivityKind::NeitherEffective => "#afb8c1",
            };
            let r = (frame.scale() * 0.12).clamp(1.5, 5.0);
            let _ = writeln!(
                svg,
                "  <circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"{r:.1}\" fill=\"{fill}\"/>",
                frame.sx(x as f64),
                frame.sy(y as f64)
            );
            let ring = if effective.contains(class) {
                Some("#0969da")
            } else if noneffective.contains(class) {
                Some("#8250df")
            } else {
                None
            };
            if let Some(stroke) = ring {
                let _ = writeln!(
                    svg,
                    "  <circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"{:.1}\" fill=\"none\" \
                     stroke=\"{stroke}\" stroke-width=\"2\"/>",
                    frame.sx(x as f64),
                    frame.sy(y as f64),
                    r + 3.0
                );
            }
            points += 1;
        }
    }

    let legend = [
        ("#1a7f37", "effective"),
        ("#d4a72c", "anti-effective"),
        ("#afb8c1", "neither"),
        ("#0969da", "candidate (effective branch) / boundary of the effective cone"),
        ("#8250df", "candidate (non-effective branch) / boundary of the 6h window"),
    ];
    for (i, (color, label)) in legend.iter().enumerate() {
        let y = 18.0 + 16.0 * i as f64;
        let _ = write!(
            svg,
            "  <circle cx=\"14\" cy=\"{:.1}\" r=\"5\" fill=\"{color}\"/>\n  <text x=\"24\" \
             y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#24292f\">{label}</text>\n",
            y - 4.0,
            y
        );
    }

    svg.push_str("</svg>\n");
    (svg, points)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_is_the_effectivity_frontier() {
        // Integer points strictly above the branch with positive pairing
        // against h are effective; the closed form only serves rendering,
        // so check it against the integer criterion.
        let lattice = GramLattice::determinantal_quartic();
        for x in -8..=8i64 {
            let boundary = effective_boundary(x as f64);
            for y in -8..=8i64 {
                let class = DivisorClass::new(x, y);
                let status = effectivity(class, &lattice).unwrap();
                if (y as f64) > boundary + 1e-9 {
                    assert!(
                        status.is_effective(),
                        "({x}, {y}) above the branch must be effective"
                    );
                }
            }
        }
    }

    #[test]
    fn svg_is_well_formed_enough() {
        let (svg, points) = region_svg(8);
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(points, 17 * 17);
        assert!(svg.matches("<circle").count() > points);
    }
}
